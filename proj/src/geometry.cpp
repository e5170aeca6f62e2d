#include "heatpade/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "heatpade/error.hpp"

namespace heatpade {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

RadialSample eval_fourier(const FourierShape& f, double phi) {
  RadialSample s{0.0, 0.0, 0.0};
  for (std::size_t m = 0; m < f.cos_coeffs.size(); ++m) {
    const double mm = static_cast<double>(m);
    const double c = std::cos(mm * phi);
    const double sn = std::sin(mm * phi);
    s.r += f.cos_coeffs[m] * c;
    s.dr -= f.cos_coeffs[m] * mm * sn;
    s.d2r -= f.cos_coeffs[m] * mm * mm * c;
  }
  for (std::size_t i = 0; i < f.sin_coeffs.size(); ++i) {
    const double mm = static_cast<double>(i + 1);
    const double c = std::cos(mm * phi);
    const double sn = std::sin(mm * phi);
    s.r += f.sin_coeffs[i] * sn;
    s.dr += f.sin_coeffs[i] * mm * c;
    s.d2r -= f.sin_coeffs[i] * mm * mm * sn;
  }
  return s;
}

RadialSample eval_ellipse(const EllipseShape& e, double phi) {
  const double b = e.minor_semiaxis;
  const double e2 = e.eccentricity * e.eccentricity;
  const double c = std::cos(phi);
  const double u = 1.0 - e2 * c * c;
  const double du = e2 * std::sin(2.0 * phi);
  const double d2u = 2.0 * e2 * std::cos(2.0 * phi);
  const double u_m12 = 1.0 / std::sqrt(u);
  const double u_m32 = u_m12 / u;
  const double u_m52 = u_m32 / u;
  return {b * u_m12, -0.5 * b * u_m32 * du, 0.75 * b * u_m52 * du * du - 0.5 * b * u_m32 * d2u};
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::InvalidShape, std::string(what) + " must be finite");
}

}  // namespace

BoundaryCurve::BoundaryCurve(Kind kind) : kind_(std::move(kind)) {
  std::visit(Overloaded{
                 [&](const DiskShape& d) { max_radius_ = d.radius; },
                 [&](const EllipseShape& e) {
                   max_radius_ = e.minor_semiaxis /
                                 std::sqrt(1.0 - e.eccentricity * e.eccentricity);
                 },
                 [&](const FourierShape& f) {
                   double bound = 0.0;
                   for (double c : f.cos_coeffs) bound += std::abs(c);
                   for (double s : f.sin_coeffs) bound += std::abs(s);
                   max_radius_ = bound;
                 },
             },
             kind_);

  double min_r = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kStarShapeSamples; ++i) {
    const double phi = kTwoPi * i / kStarShapeSamples;
    min_r = std::min(min_r, eval(phi).r);
  }
  if (!(min_r > 0.0)) {
    throw Error(ErrorKind::InvalidShape,
                "boundary is not star-shaped about the origin: min r(phi) = " +
                    std::to_string(min_r));
  }
}

BoundaryCurve BoundaryCurve::disk(double radius) {
  require_finite(radius, "disk radius");
  if (radius <= 0.0) throw Error(ErrorKind::InvalidShape, "disk radius must be positive");
  return BoundaryCurve(DiskShape{radius});
}

BoundaryCurve BoundaryCurve::ellipse(double minor_semiaxis, double eccentricity) {
  require_finite(minor_semiaxis, "ellipse minor semiaxis");
  require_finite(eccentricity, "ellipse eccentricity");
  if (minor_semiaxis <= 0.0)
    throw Error(ErrorKind::InvalidShape, "ellipse minor semiaxis must be positive");
  if (eccentricity < 0.0 || eccentricity >= 1.0)
    throw Error(ErrorKind::InvalidShape, "ellipse eccentricity must lie in [0, 1)");
  return BoundaryCurve(EllipseShape{minor_semiaxis, eccentricity});
}

BoundaryCurve BoundaryCurve::fourier(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs) {
  if (cos_coeffs.empty())
    throw Error(ErrorKind::InvalidShape, "fourier shape needs at least the constant term");
  for (double c : cos_coeffs) require_finite(c, "fourier coefficient");
  for (double s : sin_coeffs) require_finite(s, "fourier coefficient");
  return BoundaryCurve(FourierShape{std::move(cos_coeffs), std::move(sin_coeffs)});
}

RadialSample BoundaryCurve::eval(double phi) const {
  return std::visit(Overloaded{
                        [](const DiskShape& d) { return RadialSample{d.radius, 0.0, 0.0}; },
                        [&](const EllipseShape& e) { return eval_ellipse(e, phi); },
                        [&](const FourierShape& f) { return eval_fourier(f, phi); },
                    },
                    kind_);
}

Jet<4> BoundaryCurve::radius_jet(double phi) const {
  return std::visit(
      Overloaded{
          [](const DiskShape& d) { return Jet<4>::constant(d.radius); },
          [&](const EllipseShape& e) {
            const Jet<4> c = cos_jet<4>(1.0, phi);
            const Jet<4> u = 1.0 - (e.eccentricity * e.eccentricity) * (c * c);
            return e.minor_semiaxis * pow(u, -0.5);
          },
          [&](const FourierShape& f) {
            Jet<4> r;
            for (std::size_t m = 0; m < f.cos_coeffs.size(); ++m)
              r += f.cos_coeffs[m] * cos_jet<4>(static_cast<double>(m), phi);
            for (std::size_t i = 0; i < f.sin_coeffs.size(); ++i)
              r += f.sin_coeffs[i] *
                   cos_jet<4>(static_cast<double>(i + 1), phi, -std::numbers::pi / 2.0);
            return r;
          },
      },
      kind_);
}

bool BoundaryCurve::contains(double x, double y) const {
  const double rho2 = x * x + y * y;
  if (const auto* d = std::get_if<DiskShape>(&kind_)) return rho2 < d->radius * d->radius;
  if (rho2 == 0.0) return true;
  const double r = eval(std::atan2(y, x)).r;
  return rho2 < r * r;
}

RadialSample eval_boundary(const BoundaryCurve& curve, double phi) { return curve.eval(phi); }

double curvature(const BoundaryCurve& curve, double phi) {
  const auto [r, dr, d2r] = curve.eval(phi);
  const double g = r * r + dr * dr;
  return (r * r + 2.0 * dr * dr - r * d2r) / (g * std::sqrt(g));
}

CurvatureJet curvature_jet(const BoundaryCurve& curve, double phi) {
  const Jet<4> r4 = curve.radius_jet(phi);
  const Jet<2> r = r4.truncate<2>();
  const Jet<2> dr = r4.derivative().truncate<2>();
  const Jet<2> d2r = r4.derivative().derivative();
  const Jet<2> g = r * r + dr * dr;
  const Jet<2> k = (r * r + 2.0 * (dr * dr) - r * d2r) / pow(g, 1.5);
  const Jet<2> speed = sqrt(g);

  const double v = speed.c[0];
  const double dv = speed.c[1];
  const double k_phi = k.c[1];
  const double k_phiphi = 2.0 * k.c[2];
  return {k.c[0], k_phi / v, (k_phiphi - k_phi * dv / v) / (v * v), v};
}

ArcMeasures arc_measures(const BoundaryCurve& curve, const QuadratureOptions& opts) {
  const auto v = periodic_trapezoid<2>(
      [&](double phi) {
        const auto [r, dr, d2r] = curve.eval(phi);
        return std::array<double, 2>{std::sqrt(r * r + dr * dr), 0.5 * r * r};
      },
      opts);
  return {v[0], v[1]};
}

std::vector<double> curvature_power_integrals(const BoundaryCurve& curve, int max_power,
                                              const QuadratureOptions& opts) {
  if (max_power < 0) throw Error(ErrorKind::InvalidArgument, "curvature power must be >= 0");
  const auto count = static_cast<std::size_t>(max_power) + 1;
  return periodic_trapezoid_n(
      count,
      [&](double phi, std::span<double> out) {
        const auto [r, dr, d2r] = curve.eval(phi);
        const double g = r * r + dr * dr;
        const double speed = std::sqrt(g);
        const double k = (r * r + 2.0 * dr * dr - r * d2r) / (g * speed);
        double term = speed;
        for (std::size_t m = 0; m < count; ++m) {
          out[m] = term;
          term *= k;
        }
      },
      opts);
}

double curvature_power_integral(const BoundaryCurve& curve, int m, const QuadratureOptions& opts) {
  return curvature_power_integrals(curve, m, opts).back();
}

CurvatureDerivativeIntegrals curvature_derivative_integrals(const BoundaryCurve& curve,
                                                            const QuadratureOptions& opts) {
  const auto v = periodic_trapezoid<3>(
      [&](double phi) {
        const CurvatureJet j = curvature_jet(curve, phi);
        return std::array<double, 3>{j.dk * j.dk * j.speed, j.k * j.dk * j.dk * j.speed,
                                     j.k * j.k * j.d2k * j.speed};
      },
      opts);
  return {v[0], v[1], v[2]};
}

double tangent_winding_defect(const BoundaryCurve& curve, const QuadratureOptions& opts) {
  return periodic_trapezoid_scalar(
      [&](double phi) {
        const auto [r, dr, d2r] = curve.eval(phi);
        return (dr * dr - r * d2r) / (r * r + dr * dr);
      },
      opts);
}

}  // namespace heatpade
