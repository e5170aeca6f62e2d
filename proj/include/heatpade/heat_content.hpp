#pragma once

#include <span>
#include <vector>

#include "heatpade/geometry.hpp"

namespace heatpade {

enum class SeriesMode {
  CurvatureApprox,  // osculating-circle coefficients, any order
  SavoExact,        // exact coefficients with curvature derivatives, order <= 6
};

inline constexpr int kSavoMaxOrder = 6;

/// Coefficients of S(t) = 1 + sum_j sigma_j t^{j/2}; sigma[0] holds sigma_1.
struct SmallTimeExpansion {
  std::vector<double> sigma;
  SeriesMode mode = SeriesMode::CurvatureApprox;

  int order() const { return static_cast<int>(sigma.size()); }
};

/// tau(s) = 1/s^2 + sum_j c_j / s^{j+2}, with c_j = Gamma(j/2 + 1) sigma_j.
class LargeSSeries {
 public:
  /// Validates c_j == Gamma(j/2 + 1) sigma_j for every j.
  LargeSSeries(std::vector<double> sigma, std::vector<double> c, SeriesMode mode);

  static LargeSSeries from_expansion(const SmallTimeExpansion& expansion);

  /// c[0] holds c_1.
  const std::vector<double>& c() const { return c_; }
  double c(int j) const { return c_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<double>& sigma() const { return sigma_; }
  int order() const { return static_cast<int>(c_.size()); }
  SeriesMode mode() const { return mode_; }

 private:
  std::vector<double> sigma_;
  std::vector<double> c_;
  SeriesMode mode_;
};

double sigma_curvature(const BoundaryCurve& curve, int j);
double sigma_savo(const BoundaryCurve& curve, int j);

/// sigma_1..sigma_J in the requested mode, sharing one quadrature pass.
SmallTimeExpansion small_time_expansion(const BoundaryCurve& curve, int order, SeriesMode mode);

/// 1 + sum_{j<=J} sigma_j t^{j/2}. Asymptotic only: no guard against large t.
double small_time_survival(const SmallTimeExpansion& expansion, double t, int order);

LargeSSeries tau_large_s_series(const BoundaryCurve& curve, int order, SeriesMode mode);

}  // namespace heatpade
