#pragma once

#include <filesystem>

#include <json.hpp>

#include "heatpade/geometry.hpp"

namespace heatpade {

// Shape files:
//   {"kind":"disk","R":1.0}
//   {"kind":"ellipse","b":1.0,"eps":0.5}
//   {"kind":"fourier","cos":[c0,c1,...],"sin":[s1,s2,...]}
BoundaryCurve shape_from_json(const nlohmann::json& j);
nlohmann::json shape_to_json(const BoundaryCurve& curve);
BoundaryCurve load_shape(const std::filesystem::path& path);

}  // namespace heatpade
