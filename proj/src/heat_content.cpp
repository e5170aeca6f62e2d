#include "heatpade/heat_content.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heatpade/error.hpp"
#include "heatpade/series.hpp"

namespace heatpade {

namespace {

struct Coefficients {
  std::vector<double> sigma;
  std::vector<double> c;
};

// c_j = Gamma(j/2 + 1) sigma_j is assembled from exact rational prefactors so
// that the sqrt(pi) factors cancel before any rounding; sigma_j = c_j / Gamma.
Coefficients compute_coefficients(const BoundaryCurve& curve, int order, SeriesMode mode) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "expansion order must be >= 1");
  if (mode == SeriesMode::SavoExact && order > kSavoMaxOrder) {
    throw Error(ErrorKind::UnsupportedOrder, "exact heat-content coefficients are known only to order " +
                                                 std::to_string(kSavoMaxOrder) + ", requested " +
                                                 std::to_string(order));
  }

  const double area = arc_measures(curve).area;
  const auto powers = curvature_power_integrals(curve, order - 1);
  const auto a = asymptotic_ratio_coeffs(order - 1).coefficients;

  Coefficients out;
  for (int j = 1; j <= order; ++j) {
    // Local-curvature form: c_j = -a_{j-1} |Omega|^{-1} oint k^{j-1}.
    const double prefactor = static_cast<double>(-a[j - 1]);
    out.c.push_back(prefactor * powers[j - 1] / area);
  }

  if (mode == SeriesMode::SavoExact && order >= 5) {
    const auto d = curvature_derivative_integrals(curve);
    // sigma_5 = (240 sqrt(pi) |Omega|)^{-1} oint (25 k^4 - 8 k'^2); Gamma(7/2) = 15 sqrt(pi) / 8.
    const Rational c5_prefactor = gamma_half_plus_one(5).rational * Rational(1, 240);
    out.c[4] = static_cast<double>(c5_prefactor) * (25.0 * powers[4] - 8.0 * d.slope_squared) / area;
    if (order >= 6) {
      // sigma_6 = (192 |Omega|)^{-1} oint (13 k^5 + 80 k k'^2 + 47 k^2 k''); Gamma(4) = 6.
      const Rational c6_prefactor = gamma_half_plus_one(6).rational * Rational(1, 192);
      out.c[5] = static_cast<double>(c6_prefactor) *
                 (13.0 * powers[5] + 80.0 * d.curvature_slope_squared +
                  47.0 * d.curvature_squared_second) /
                 area;
    }
  }

  for (int j = 1; j <= order; ++j) out.sigma.push_back(out.c[j - 1] / gamma_half_plus_one(j).value());
  return out;
}

}  // namespace

LargeSSeries::LargeSSeries(std::vector<double> sigma, std::vector<double> c, SeriesMode mode)
    : sigma_(std::move(sigma)), c_(std::move(c)), mode_(mode) {
  if (sigma_.size() != c_.size() || c_.empty())
    throw Error(ErrorKind::InvalidArgument, "large-s series needs matching non-empty sigma and c");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const double expected = gamma_half_plus_one(static_cast<int>(i) + 1).value() * sigma_[i];
    if (std::abs(expected - c_[i]) > 1e-12 * std::max(1.0, std::abs(c_[i]))) {
      throw Error(ErrorKind::InvalidArgument,
                  "c_" + std::to_string(i + 1) + " is inconsistent with sigma_" + std::to_string(i + 1));
    }
  }
}

LargeSSeries LargeSSeries::from_expansion(const SmallTimeExpansion& expansion) {
  std::vector<double> c;
  for (int j = 1; j <= expansion.order(); ++j)
    c.push_back(gamma_half_plus_one(j).value() * expansion.sigma[j - 1]);
  return LargeSSeries(expansion.sigma, std::move(c), expansion.mode);
}

SmallTimeExpansion small_time_expansion(const BoundaryCurve& curve, int order, SeriesMode mode) {
  return {compute_coefficients(curve, order, mode).sigma, mode};
}

double sigma_curvature(const BoundaryCurve& curve, int j) {
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "coefficient index must be >= 1");
  return compute_coefficients(curve, j, SeriesMode::CurvatureApprox).sigma.back();
}

double sigma_savo(const BoundaryCurve& curve, int j) {
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "coefficient index must be >= 1");
  return compute_coefficients(curve, j, SeriesMode::SavoExact).sigma.back();
}

double small_time_survival(const SmallTimeExpansion& expansion, double t, int order) {
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "time must be >= 0");
  if (order < 0 || order > expansion.order())
    throw Error(ErrorKind::InvalidArgument, "truncation order exceeds the available coefficients");
  const double root_t = std::sqrt(t);
  double power = 1.0;
  double s = 1.0;
  for (int j = 1; j <= order; ++j) {
    power *= root_t;
    s += expansion.sigma[j - 1] * power;
  }
  return s;
}

LargeSSeries tau_large_s_series(const BoundaryCurve& curve, int order, SeriesMode mode) {
  auto coeffs = compute_coefficients(curve, order, mode);
  return LargeSSeries(std::move(coeffs.sigma), std::move(coeffs.c), mode);
}

}  // namespace heatpade
