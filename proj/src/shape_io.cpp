#include "heatpade/shape_io.hpp"

#include <fstream>
#include <string>

#include "heatpade/error.hpp"

namespace heatpade {

namespace {

double number_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw Error(ErrorKind::InvalidShape, std::string("shape field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

std::vector<double> number_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& arr = j.at(key);
  if (!arr.is_array())
    throw Error(ErrorKind::InvalidShape, std::string("shape field '") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number())
      throw Error(ErrorKind::InvalidShape, std::string("shape field '") + key + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

BoundaryCurve shape_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorKind::InvalidShape, "shape must be an object with a string 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "disk") return BoundaryCurve::disk(number_field(j, "R"));
  if (kind == "ellipse") return BoundaryCurve::ellipse(number_field(j, "b"), number_field(j, "eps"));
  if (kind == "fourier") {
    if (!j.contains("cos")) throw Error(ErrorKind::InvalidShape, "fourier shape requires 'cos'");
    return BoundaryCurve::fourier(number_list(j, "cos"), number_list(j, "sin"));
  }
  throw Error(ErrorKind::InvalidShape, "unknown shape kind '" + kind + "'");
}

nlohmann::json shape_to_json(const BoundaryCurve& curve) {
  const auto& k = curve.kind();
  if (const auto* d = std::get_if<DiskShape>(&k)) return {{"kind", "disk"}, {"R", d->radius}};
  if (const auto* e = std::get_if<EllipseShape>(&k))
    return {{"kind", "ellipse"}, {"b", e->minor_semiaxis}, {"eps", e->eccentricity}};
  const auto& f = std::get<FourierShape>(k);
  return {{"kind", "fourier"}, {"cos", f.cos_coeffs}, {"sin", f.sin_coeffs}};
}

BoundaryCurve load_shape(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open shape file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidShape, "malformed shape file " + path.string() + ": " + e.what());
  }
  return shape_from_json(j);
}

}  // namespace heatpade
