#pragma once

namespace heatpade {

/// Disk of radius R > 0; the closed-form oracle for the other modules.
struct DiskSpec {
  double radius;

  explicit DiskSpec(double r);
};

/// Laplace transform of S(t) with s^2 as the Laplace parameter:
/// tau(s) = (1/s^2) [1 - 2 I1(sR) / (sR I0(sR))].
double tau_disk(double s, double radius);

/// Local transform tau(s, r) = (1/s^2) [1 - I0(sr) / I0(sR)], 0 <= r <= R.
double tau_disk_local(double s, double r, double radius);

/// S(t) = 4 sum_n z_n^{-2} exp(-z_n^2 t / R^2), summed until the next term is
/// below 1e-12 (at least `min_modes` terms). Throws SeriesNotConverged at t = 0,
/// where the series converges only algebraically.
double survival_disk(double t, double radius, int min_modes = 1);

/// The same sum truncated at exactly `modes` terms; valid at t = 0.
double survival_disk_truncated(double t, double radius, int modes);

}  // namespace heatpade
