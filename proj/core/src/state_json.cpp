#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vpair/states.hpp"

namespace vpair {

namespace {

using nlohmann::json;

std::vector<double> parse_plane(const json& j, const char* key) {
  if (!j.contains(key))
    throw ValidationError(std::string("density JSON: missing \"") + key + "\"");
  const json& arr = j.at(key);
  std::vector<double> out;
  out.reserve(kDim * kDim);
  if (arr.is_array() && arr.size() == kDim && arr.front().is_array()) {
    for (const auto& row : arr) {
      if (!row.is_array() || row.size() != kDim)
        throw ValidationError(std::string("density JSON: \"") + key +
                              "\" rows must have 9 numbers");
      for (const auto& v : row) out.push_back(v.get<double>());
    }
  } else if (arr.is_array() && arr.size() == kDim * kDim) {
    for (const auto& v : arr) out.push_back(v.get<double>());
  } else {
    throw ValidationError(std::string("density JSON: \"") + key +
                          "\" must be 81 numbers (row-major) or 9 rows of 9");
  }
  return out;
}

}  // namespace

std::string density_to_json(const DensityMatrix& rho) {
  json j;
  j["dim"] = kDim;
  std::vector<double> re, im;
  re.reserve(kDim * kDim);
  im.reserve(kDim * kDim);
  for (const Complex& z : rho.matrix().data()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump(2) + "\n";
}

DensityMatrix density_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("density JSON: parse error: ") +
                          e.what());
  }
  try {
    if (!j.contains("dim") || j.at("dim").get<int>() != kDim)
      throw ValidationError("density JSON: \"dim\" must be 9");
    const auto re = parse_plane(j, "re");
    const auto im = parse_plane(j, "im");
    ComplexMatrix m(kDim, kDim);
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < kDim; ++c)
        m(r, c) = Complex(re[r * kDim + c], im[r * kDim + c]);
    return require_density(m);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("density JSON: ") + e.what());
  }
}

DensityMatrix load_density(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return density_from_json(buf.str());
}

void save_density(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write state file: " + path);
  out << density_to_json(rho);
  if (!out) throw ValidationError("failed writing state file: " + path);
}

}  // namespace vpair
