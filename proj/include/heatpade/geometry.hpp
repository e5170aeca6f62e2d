#pragma once

#include <span>
#include <variant>
#include <vector>

#include "heatpade/jet.hpp"
#include "heatpade/quadrature.hpp"

namespace heatpade {

struct DiskShape {
  double radius;
};

/// r(phi) = b / sqrt(1 - eps^2 cos^2 phi), b the minor semiaxis.
struct EllipseShape {
  double minor_semiaxis;
  double eccentricity;
};

/// r(phi) = c0 + sum_m c_m cos(m phi) + sum_m s_m sin(m phi); sin_coeffs[0] is s_1.
struct FourierShape {
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;
};

/// r(phi) and its first two derivatives in phi.
struct RadialSample {
  double r;
  double dr;
  double d2r;
};

/// Smooth star-shaped boundary given in polar form about an interior origin.
/// Construction validates r(phi) > 0; instances are immutable afterwards.
class BoundaryCurve {
 public:
  using Kind = std::variant<DiskShape, EllipseShape, FourierShape>;

  static constexpr int kStarShapeSamples = 4096;

  static BoundaryCurve disk(double radius);
  static BoundaryCurve ellipse(double minor_semiaxis, double eccentricity);
  static BoundaryCurve fourier(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs = {});

  const Kind& kind() const { return kind_; }
  bool is_disk() const { return std::holds_alternative<DiskShape>(kind_); }

  RadialSample eval(double phi) const;

  /// Taylor jet of r about phi, exact to fourth order.
  Jet<4> radius_jet(double phi) const;

  /// Strict interior test (points on the boundary are outside).
  bool contains(double x, double y) const;

  /// Upper bound on r(phi) over the full turn.
  double max_radius() const { return max_radius_; }

 private:
  explicit BoundaryCurve(Kind kind);

  Kind kind_;
  double max_radius_ = 0.0;
};

RadialSample eval_boundary(const BoundaryCurve& curve, double phi);

/// Signed curvature: positive on convex arcs, negative on concave ones.
double curvature(const BoundaryCurve& curve, double phi);

/// Curvature and its derivatives with respect to arc length at one point.
struct CurvatureJet {
  double k;
  double dk;   // dk/domega
  double d2k;  // d^2k/domega^2
  double speed;  // domega/dphi
};

CurvatureJet curvature_jet(const BoundaryCurve& curve, double phi);

struct ArcMeasures {
  double perimeter;
  double area;
};

ArcMeasures arc_measures(const BoundaryCurve& curve, const QuadratureOptions& opts = {});

/// Integral of k^m over arc length; m = 0 gives the perimeter.
double curvature_power_integral(const BoundaryCurve& curve, int m,
                                const QuadratureOptions& opts = {});

/// Integrals of k^0 .. k^max_power in one quadrature pass.
std::vector<double> curvature_power_integrals(const BoundaryCurve& curve, int max_power,
                                              const QuadratureOptions& opts = {});

struct CurvatureDerivativeIntegrals {
  double slope_squared;            // integral of (k')^2
  double curvature_slope_squared;  // integral of k (k')^2
  double curvature_squared_second; // integral of k^2 k''
};

CurvatureDerivativeIntegrals curvature_derivative_integrals(const BoundaryCurve& curve,
                                                            const QuadratureOptions& opts = {});

/// Integral over phi of (r'^2 - r r'') / (r^2 + r'^2); zero for every closed curve.
double tangent_winding_defect(const BoundaryCurve& curve, const QuadratureOptions& opts = {});

}  // namespace heatpade
