#include <cmath>

#include "vpair/linalg.hpp"

namespace vpair {

namespace {

// Pade-13 coefficients (Higham, "The scaling and squaring method revisited").
constexpr double kB[14] = {64764752532480000.0,
                           32382376266240000.0,
                           7771770303897600.0,
                           1187353796428800.0,
                           129060195264000.0,
                           10559470521600.0,
                           670442572800.0,
                           33522128640.0,
                           1323241920.0,
                           40840800.0,
                           960960.0,
                           16380.0,
                           182.0,
                           1.0};
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
  if (!m.is_square()) throw ValidationError("matrix_exponential: not square");
  if (!m.all_finite())
    throw ValidationError("matrix_exponential: non-finite entries");
  const int n = m.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);

  int squarings = 0;
  const double norm = m.one_norm();
  if (norm > kTheta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  ComplexMatrix a = m;
  if (squarings > 0) a *= Complex(std::ldexp(1.0, -squarings));

  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a2 * a4;

  ComplexMatrix u_inner = Complex(kB[13]) * a6 + Complex(kB[11]) * a4 +
                          Complex(kB[9]) * a2;
  ComplexMatrix u = a * (a6 * u_inner + Complex(kB[7]) * a6 +
                         Complex(kB[5]) * a4 + Complex(kB[3]) * a2 +
                         Complex(kB[1]) * id);
  ComplexMatrix v_inner = Complex(kB[12]) * a6 + Complex(kB[10]) * a4 +
                          Complex(kB[8]) * a2;
  ComplexMatrix v = a6 * v_inner + Complex(kB[6]) * a6 + Complex(kB[4]) * a4 +
                    Complex(kB[2]) * a2 + Complex(kB[0]) * id;

  ComplexMatrix num = v + u;
  ComplexMatrix den = v - u;
  ComplexMatrix result = solve(den, num);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

std::vector<Complex> matrix_exponential_action(const ComplexMatrix& l,
                                               std::span<const Complex> v,
                                               double t) {
  if (t < 0.0)
    throw ValidationError("matrix_exponential_action: negative time");
  if (!l.is_square())
    throw ValidationError("matrix_exponential_action: L not square");
  if (static_cast<int>(v.size()) != l.cols())
    throw ValidationError("matrix_exponential_action: vector length mismatch");
  if (t == 0.0) return {v.begin(), v.end()};
  ComplexMatrix scaled = l;
  scaled *= Complex(t);
  return matrix_exponential(scaled).apply(v);
}

}  // namespace vpair
