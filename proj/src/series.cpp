#include "heatpade/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "heatpade/error.hpp"

namespace heatpade {

namespace {

constexpr double kPi = std::numbers::pi;

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Hankel asymptotic coefficient a_k(nu) = prod_{i=1..k} (4nu^2 - (2i-1)^2) / (k! 8^k),
// generated as a running term ratio.
double hankel_ratio(int order, int k) {
  const double mu = 4.0 * order * order;
  const double odd = 2.0 * k - 1.0;
  return (mu - odd * odd) / (8.0 * k);
}

void require_order(int order) {
  if (order != 0 && order != 1)
    throw Error(ErrorKind::InvalidArgument, "bessel order must be 0 or 1");
}

// J0 and J1 by Miller's backward recurrence, normalised with J0 + 2 sum J_{2k} = 1.
std::pair<double, double> bessel_j01_miller(double x) {
  const int start = 2 * ((static_cast<int>(x) + 60) / 2);
  double next = 0.0;  // J_{k+1}
  double cur = 1e-300;  // J_k
  double norm = 0.0;
  double j0 = 0.0;
  double j1 = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = 2.0 * k / x * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      j1 *= 1e-250;
    }
    const int idx = k - 1;
    if (idx == 1) j1 = cur;
    if (idx > 0 && idx % 2 == 0) norm += 2.0 * cur;
  }
  j0 = cur;
  norm += j0;
  return {j0 / norm, j1 / norm};
}

double bessel_j_asymptotic(int order, double x) {
  double p = 0.0;
  double q = 0.0;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= hankel_ratio(order, k) / x;
    const double mag = std::abs(term);
    if (mag > last || mag < 1e-18) break;
    last = mag;
    // a_k / x^k contributes to P with sign (-1)^{k/2} for even k, to Q with (-1)^{(k-1)/2}.
    const int r = k % 4;
    if (r == 0) p += term;
    else if (r == 1) q += term;
    else if (r == 2) p -= term;
    else q -= term;
  }
  const double chi = x - (0.5 * order + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

std::vector<double> RationalSeries::to_double() const {
  std::vector<double> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.push_back(static_cast<double>(c));
  return out;
}

RationalSeries asymptotic_ratio_coeffs(int max_order) {
  if (max_order < 0) throw Error(ErrorKind::InvalidArgument, "asymptotic order must be >= 0");
  RationalSeries out;
  out.variable = RationalSeries::Variable::InversePower;
  auto& a = out.coefficients;
  a.reserve(static_cast<std::size_t>(max_order) + 1);
  a.emplace_back(1);
  for (int m = 1; m <= max_order; ++m) {
    Rational conv = 0;
    for (int i = 1; i < m; ++i) conv += a[i] * a[m - i];
    a.push_back((Rational(m - 2) * a[m - 1] - conv) / 2);
  }
  return out;
}

double HalfIntegerGamma::value() const {
  const double r = static_cast<double>(rational);
  return has_sqrt_pi ? r * std::sqrt(kPi) : r;
}

HalfIntegerGamma gamma_half_plus_one(int j) {
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "gamma index must be >= 0");
  if (j % 2 == 0) return {factorial(j / 2), false};
  // Gamma(j/2 + 1) = (j/2)(j/2 - 1)...(1/2) sqrt(pi)
  Rational g = 1;
  for (int twice = j; twice >= 1; twice -= 2) g *= Rational(twice, 2);
  return {g, true};
}

double bessel_i_series(int order, double x) {
  require_order(order);
  const double y = 0.25 * x * x;
  double term = order == 0 ? 1.0 : 0.5 * x;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= y / (static_cast<double>(k) * static_cast<double>(k + order));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double bessel_i_asymptotic_scaled(int order, double x) {
  require_order(order);
  double sum = 1.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -hankel_ratio(order, k) / x;
    const double mag = std::abs(term);
    if (mag > last) break;
    sum += term;
    last = mag;
    if (mag < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * kPi * x);
}

double bessel_i(int order, double x) {
  require_order(order);
  if (x < 0.0 || std::isnan(x)) throw Error(ErrorKind::InvalidArgument, "bessel_i needs x >= 0");
  if (x <= kBesselCrossover) return bessel_i_series(order, x);
  return std::exp(x) * bessel_i_asymptotic_scaled(order, x);
}

double bessel_i_scaled(int order, double x) {
  require_order(order);
  if (x < 0.0 || std::isnan(x)) throw Error(ErrorKind::InvalidArgument, "bessel_i needs x >= 0");
  if (x <= kBesselCrossover) return std::exp(-x) * bessel_i_series(order, x);
  return bessel_i_asymptotic_scaled(order, x);
}

double bessel_i1_over_i0(double x) {
  if (x == 0.0) return 0.0;
  if (x <= kBesselCrossover) return bessel_i_series(1, x) / bessel_i_series(0, x);
  return bessel_i_asymptotic_scaled(1, x) / bessel_i_asymptotic_scaled(0, x);
}

double bessel_j0(double x) {
  x = std::abs(x);
  if (x == 0.0) return 1.0;
  if (x < 25.0) return bessel_j01_miller(x).first;
  return bessel_j_asymptotic(0, x);
}

double bessel_j1(double x) {
  const double sign = x < 0.0 ? -1.0 : 1.0;
  x = std::abs(x);
  if (x == 0.0) return 0.0;
  if (x < 25.0) return sign * bessel_j01_miller(x).second;
  return sign * bessel_j_asymptotic(1, x);
}

double j0_zero(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "J0 zero index must be >= 1");
  // McMahon's expansion about beta = (n - 1/4) pi.
  const double beta = (n - 0.25) * kPi;
  const double b8 = 8.0 * beta;
  double z = beta + 1.0 / b8 - 124.0 / (3.0 * b8 * b8 * b8) +
             120928.0 / (15.0 * b8 * b8 * b8 * b8 * b8);
  for (int it = 0; it < 50; ++it) {
    const double step = bessel_j0(z) / bessel_j1(z);  // J0' = -J1
    z += step;
    if (std::abs(step) < 1e-15 * z) break;
  }
  return z;
}

std::vector<double> j0_zeros(int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "j0_zeros needs count >= 1");
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) zeros.push_back(j0_zero(n));
  return zeros;
}

RationalSeries maclaurin_tau_disk_unit(int max_order) {
  if (max_order < 0) throw Error(ErrorKind::InvalidArgument, "maclaurin order must be >= 0");
  // With y = (sR)^2 / 4: 2 I1(sR) / (sR I0(sR)) = A(y) / B(y),
  // A_k = 1 / (k! (k+1)!), B_k = 1 / (k!)^2, and
  // tau = (1/s^2)(1 - A/B) = sum_{k>=1} e_k R^{2k} s^{2k-2} / 4^k.
  const int terms = max_order + 2;
  std::vector<Rational> a(terms);
  std::vector<Rational> b(terms);
  for (int k = 0; k < terms; ++k) {
    a[k] = 1 / (factorial(k) * factorial(k + 1));
    b[k] = 1 / (factorial(k) * factorial(k));
  }
  std::vector<Rational> ratio(terms);
  for (int k = 0; k < terms; ++k) {
    Rational acc = a[k];
    for (int i = 1; i <= k; ++i) acc -= b[i] * ratio[k - i];
    ratio[k] = acc / b[0];
  }
  RationalSeries out;
  out.variable = RationalSeries::Variable::SquaredPower;
  Rational quarter_pow = Rational(1, 4);
  for (int k = 1; k <= max_order + 1; ++k) {
    out.coefficients.push_back(-ratio[k] * quarter_pow);
    quarter_pow /= 4;
  }
  return out;
}

std::vector<double> maclaurin_tau_disk(double radius, int max_order) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "disk radius must be positive");
  const auto unit = maclaurin_tau_disk_unit(max_order).to_double();
  std::vector<double> d(unit.size());
  const double r2 = radius * radius;
  double scale = r2;
  for (std::size_t k = 0; k < unit.size(); ++k) {
    d[k] = unit[k] * scale;
    scale *= r2;
  }
  return d;
}

}  // namespace heatpade
