#include "heatpade/disk_exact.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "heatpade/error.hpp"
#include "heatpade/series.hpp"

namespace heatpade {

namespace {

constexpr double kTermCutoff = 1e-12;
constexpr int kModeCap = 10'000'000;
// Below this sR the closed form cancels; the Maclaurin series converges for sR < z_{0,1}.
constexpr double kSmallArgument = 0.5;
constexpr int kMaclaurinTerms = 16;

const std::vector<double>& unit_maclaurin() {
  static const std::vector<double> coeffs = maclaurin_tau_disk_unit(kMaclaurinTerms).to_double();
  return coeffs;
}

void require_positive_s(double s) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw Error(ErrorKind::InvalidArgument, "Laplace variable s must be positive and finite");
}

}  // namespace

DiskSpec::DiskSpec(double r) : radius(r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw Error(ErrorKind::InvalidArgument, "disk radius must be positive and finite");
}

double tau_disk(double s, double radius) {
  const DiskSpec disk(radius);
  require_positive_s(s);
  const double x = s * disk.radius;
  const double r2 = disk.radius * disk.radius;
  if (x < kSmallArgument) {
    const auto& u = unit_maclaurin();
    const double x2 = x * x;
    double acc = 0.0;
    for (auto it = u.rbegin(); it != u.rend(); ++it) acc = acc * x2 + *it;
    return acc * r2;
  }
  return (1.0 - 2.0 * bessel_i1_over_i0(x) / x) / (s * s);
}

double tau_disk_local(double s, double r, double radius) {
  const DiskSpec disk(radius);
  require_positive_s(s);
  if (r < 0.0 || r > disk.radius)
    throw Error(ErrorKind::InvalidArgument, "radial position must lie in [0, R]");
  if (r == disk.radius) return 0.0;
  // I0(sr)/I0(sR) = exp(s(r - R)) * scaled ratio; safe for large s.
  const double ratio = std::exp(s * (r - disk.radius)) * bessel_i_scaled(0, s * r) /
                       bessel_i_scaled(0, s * disk.radius);
  return (1.0 - ratio) / (s * s);
}

double survival_disk_truncated(double t, double radius, int modes) {
  const DiskSpec disk(radius);
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "time must be >= 0");
  if (modes < 1) throw Error(ErrorKind::InvalidArgument, "mode count must be >= 1");
  const double scaled_t = t / (disk.radius * disk.radius);
  double sum = 0.0;
  for (int n = 1; n <= modes; ++n) {
    const double z = j0_zero(n);
    sum += 4.0 / (z * z) * std::exp(-z * z * scaled_t);
  }
  return sum;
}

double survival_disk(double t, double radius, int min_modes) {
  const DiskSpec disk(radius);
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "time must be >= 0");
  if (t == 0.0) {
    throw Error(ErrorKind::SeriesNotConverged,
                "disk eigenseries at t = 0 converges only algebraically; S(0) = 1 holds as N -> infinity");
  }
  const double scaled_t = t / (disk.radius * disk.radius);
  double sum = 0.0;
  for (int n = 1; n <= kModeCap; ++n) {
    const double z = j0_zero(n);
    const double term = 4.0 / (z * z) * std::exp(-z * z * scaled_t);
    sum += term;
    if (n >= min_modes && term < kTermCutoff) return sum;
  }
  throw Error(ErrorKind::SeriesNotConverged,
              "disk eigenseries needs more than " + std::to_string(kModeCap) + " modes at t = " +
                  std::to_string(t));
}

}  // namespace heatpade
