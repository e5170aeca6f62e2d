#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "heatpade/error.hpp"
#include "heatpade/pade.hpp"
#include "heatpade/series.hpp"

using namespace heatpade;

namespace {

struct TableRow {
  double d0, d2, d4, d6, im;
};

// Disk rows [n/n+2], n = 1..7, as printed.
const std::vector<TableRow> kDiskTable{
    {0.1743, -0.07472, 0.008383, -0.00004709, 1.756}, {0.1475, -0.03538, 0.011763, -0.00246499, 1.940},
    {0.1378, -0.02803, 0.006355, -0.00162755, 2.074}, {0.1331, -0.02516, 0.005090, -0.00106198, 2.178},
    {0.1306, -0.02371, 0.004541, -0.00088446, 2.252}, {0.1290, -0.02287, 0.004246, -0.00079754, 2.299},
    {0.1289, -0.02235, 0.004067, -0.00074735, 2.328},
};

bool within(double value, double expected, double rel) {
  return std::abs(value - expected) <= rel * std::abs(expected);
}

const std::vector<SequenceEntry>& disk_sequence() {
  static const auto seq = [] {
    const auto series = tau_large_s_series(BoundaryCurve::disk(1.0), 9, SeriesMode::CurvatureApprox);
    return solve_sequence(series, 7);
  }();
  return seq;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("residual system shape and errors") {
  const auto series = tau_large_s_series(BoundaryCurve::disk(1.0), 6, SeriesMode::CurvatureApprox);
  const auto r = build_residuals(series, 4);
  CHECK(r.size() == 10);
  CHECK(r.c().size() == 6);
  CHECK(r.c()[0] == doctest::Approx(-2.0));

  CHECK(kind_of([&] { (void)build_residuals(series, 5); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { (void)build_residuals(series, 0); }) == ErrorKind::InvalidArgument);

  const std::vector<double> p{1, 2, 3, 4};
  const std::vector<double> q{0, 1, 2, 3, 4, 5};
  CHECK(kind_of([&] { (void)r(p, q); }) == ErrorKind::DegenerateDenominator);
  CHECK(kind_of([&] { (void)r(std::vector<double>{1.0}, q); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("rational series by recursive division") {
  // P = s, Q = s^3 + 2 s^2 + 3 s + 1.
  const auto a = PadeApproximant::make(1, {0.0}, {1.0, 3.0, 2.0});
  const auto d = rational_series(a, SeriesDirection::AtZero, 12);
  CHECK(d[0] == 0.0);
  CHECK(d[1] == doctest::Approx(1.0));

  // Partial sums converge to direct evaluation inside the radius of convergence.
  const double s = 0.05;
  double sum = 0.0;
  for (int k = 12; k >= 0; --k) sum = sum * s + d[k];
  CHECK(sum == doctest::Approx(a(s).real()).epsilon(1e-12));

  const auto e = rational_series(a, SeriesDirection::AtInfinity, 12);
  CHECK(e[0] == 1.0);
  const double big = 60.0;
  double tail = 0.0;
  for (int k = 12; k >= 0; --k) tail = tail / big + e[k];
  CHECK(tail / (big * big) == doctest::Approx(a(big).real()).epsilon(1e-12));

  const auto degenerate = PadeApproximant::make(1, {1.0}, {0.0, 1.0, 1.0});
  CHECK(kind_of([&] { (void)rational_series(degenerate, SeriesDirection::AtZero, 3); }) ==
        ErrorKind::DegenerateDenominator);
  CHECK(kind_of([&] { (void)PadeApproximant::make(2, {1.0}, {1.0, 1.0, 1.0, 1.0}); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("poles of simple denominators") {
  const double lambda = 5.783186;
  const auto a = PadeApproximant::make(0, {}, {lambda, 0.0});
  const auto z = poles(a);
  REQUIRE(z.size() == 2);
  CHECK(std::abs(z[0] - std::complex<double>(0.0, std::sqrt(lambda))) < 1e-14);
  CHECK(z[1] == std::conj(z[0]));
  const auto est = lambda1_from_solution(a);
  CHECK(est.lambda1 == doctest::Approx(lambda).epsilon(1e-15));
  CHECK(std::sqrt(lambda) == doctest::Approx(2.404826).epsilon(1e-6));

  const auto real_only = PadeApproximant::make(0, {}, {2.0, 3.0});  // (s + 1)(s + 2)
  CHECK(kind_of([&] { (void)lambda1_from_solution(real_only); }) == ErrorKind::NoComplexPole);
}

TEST_CASE("poles of random real denominators pair up") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 7;
    std::vector<double> p(n);
    std::vector<double> q(n + 2);
    for (double& v : p) v = normal(rng);
    for (double& v : q) v = normal(rng) * 3.0;
    const auto a = PadeApproximant::make(n, p, q);
    const auto z = poles(a);
    REQUIRE(static_cast<int>(z.size()) == n + 2);
    int upper = 0;
    int lower = 0;
    for (const auto& r : z) {
      CHECK(std::abs(a.denominator(r)) < 1e-9 * std::max(1.0, std::pow(std::abs(r), n + 2)));
      if (r.imag() > 0) {
        ++upper;
        CHECK(std::find(z.begin(), z.end(), std::conj(r)) != z.end());
      }
      if (r.imag() < 0) ++lower;
    }
    CHECK(upper == lower);
    // Vieta: sum of roots = -q_{n+1}.
    std::complex<double> total = 0.0;
    for (const auto& r : z) total += r;
    CHECK(std::abs(total.real() + q[n + 1]) < 1e-9 * (1.0 + std::abs(q[n + 1])));
    CHECK(std::abs(total.imag()) < 1e-12);
  }
}

TEST_CASE("disk table rows") {
  const auto& seq = disk_sequence();
  REQUIRE(seq.size() == 7);
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto& entry = seq[n - 1];
    REQUIRE(entry.selected);
    const auto& sol = *entry.selected;
    const auto& row = kDiskTable[n - 1];
    CHECK(within(sol.closest_pole().imag(), row.im, 0.01));
    CHECK(within(sol.small_s[0], row.d0, 0.01));
    if (n <= 6) {
      CHECK(within(sol.small_s[1], row.d2, 0.01));
      CHECK(within(sol.small_s[2], row.d4, 0.01));
      CHECK(within(sol.small_s[3], row.d6, 0.01));
      // All printed digits agree.
      CHECK(std::abs(sol.closest_pole().imag() - row.im) < 6e-4);
    }
  }
  const auto& s7 = *seq[6].selected;
  CHECK(within(s7.small_s[1], kDiskTable[6].d2, 0.01));
  CHECK(within(s7.small_s[2], kDiskTable[6].d4, 0.01));
  CHECK(within(s7.small_s[3], kDiskTable[6].d6, 0.01));
  CHECK(s7.lambda1() == doctest::Approx(2.328 * 2.328).epsilon(1e-3));
}

TEST_CASE("accepted solutions satisfy every interpolation condition") {
  const auto series = tau_large_s_series(BoundaryCurve::disk(1.0), 9, SeriesMode::CurvatureApprox);
  for (const auto& entry : disk_sequence()) {
    const int n = entry.n;
    CAPTURE(n);
    const auto& sol = *entry.selected;
    CHECK(sol.residual_norm < kAcceptResidual);
    CHECK(is_physical(sol));
    CHECK(sol.closest_pole().real() <= 0.0);

    // Re-evaluated from the stored double coefficients.
    const auto r = build_residuals(series, n)(sol.approximant);
    REQUIRE(static_cast<int>(r.size()) == 2 * n + 2);
    double rn = 0.0;
    for (double v : r) rn += v * v;
    CHECK(std::sqrt(rn) < kAcceptResidual);
    const auto d = rational_series(sol.approximant, SeriesDirection::AtZero, 2 * n);
    for (int k = 1; k < 2 * n; k += 2) CHECK(std::abs(d[k]) < 1e-10);

    // Division by the denominator amplifies the rounding of the stored
    // coefficients; bound it by the same recursion run on magnitudes.
    const auto e = rational_series(sol.approximant, SeriesDirection::AtInfinity, n + 2);
    const auto& a = sol.approximant;
    std::vector<double> mag(n + 3);
    for (int j = 0; j <= n + 2; ++j) {
      mag[j] = j == 0 ? 1.0 : (j <= n ? std::abs(a.p[n - j]) : 0.0);
      for (int i = 1; i <= j; ++i) mag[j] += std::abs(a.q[n + 2 - i]) * mag[j - i];
    }
    CHECK(e[0] == 1.0);
    for (int j = 1; j <= n + 2; ++j) {
      const double tol = n <= 5 ? 1e-10 * std::max(1.0, std::abs(series.c(j)))
                                : 4.0 * (j + 1) * std::numeric_limits<double>::epsilon() * mag[j];
      CHECK(std::abs(e[j] - series.c(j)) < tol);
    }

    for (std::size_t i = 0; i < sol.poles.size(); ++i)
      if (sol.poles[i].imag() != 0.0)
        CHECK(std::find(sol.poles.begin(), sol.poles.end(), std::conj(sol.poles[i])) != sol.poles.end());
    CHECK(entry.solution_count >= 1);
  }
}

TEST_CASE("disk pole sequence is monotone") {
  const auto& seq = disk_sequence();
  const double z1 = j0_zero(1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].selected->closest_pole().imag() < z1);
    if (i > 0) CHECK(seq[i].selected->closest_pole().imag() > seq[i - 1].selected->closest_pole().imag());
    if (i > 1)
      CHECK(std::abs(seq[i].selected->closest_pole().real()) <
            std::abs(seq[i - 1].selected->closest_pole().real()));
  }
}

TEST_CASE("extrapolation over the disk sequence") {
  const std::vector<int> n{1, 2, 3};
  // Exact for quadratics in 1/n.
  std::vector<double> v;
  for (int k : n) v.push_back(3.0 - 2.0 / k + 0.5 / (k * k));
  CHECK(extrapolate_lambda1(n, v) == doctest::Approx(3.0).epsilon(1e-14));

  std::vector<int> orders;
  std::vector<double> lambdas;
  for (const auto& e : disk_sequence()) {
    orders.push_back(e.n);
    lambdas.push_back(e.selected->lambda1());
  }
  const double z1 = j0_zero(1);
  const double est = extrapolate_lambda1(orders, lambdas);
  CHECK(std::abs(est - z1 * z1) < 0.02 * z1 * z1);
  CHECK(kind_of([&] { (void)extrapolate_lambda1(std::vector<int>{1, 2}, std::vector<double>{1, 2}); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("scale covariance") {
  const auto s1 = tau_large_s_series(BoundaryCurve::disk(1.0), 6, SeriesMode::CurvatureApprox);
  const auto s2 = tau_large_s_series(BoundaryCurve::disk(2.0), 6, SeriesMode::CurvatureApprox);
  for (int n : {2, 4}) {
    const auto a = select_physical(solve_interpolation(s1, n));
    const auto b = select_physical(solve_interpolation(s2, n));
    REQUIRE(a.poles.size() == b.poles.size());
    for (std::size_t i = 0; i < a.poles.size(); ++i)
      CHECK(std::abs(b.poles[i] - 0.5 * a.poles[i]) < 1e-9 * std::abs(a.poles[i]));
    CHECK(b.lambda1() == doctest::Approx(a.lambda1() / 4.0).epsilon(1e-10));
  }
}

TEST_CASE("solver output does not depend on the thread count") {
  const auto series = tau_large_s_series(BoundaryCurve::ellipse(1.0, 0.6), 7, SeriesMode::CurvatureApprox);
  SolveOptions one;
  one.threads = 1;
  one.multistarts = 300;
  SolveOptions many = one;
  many.threads = 4;
  const auto a = solve_interpolation(series, 5, one);
  const auto b = solve_interpolation(series, 5, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].approximant.p == b[i].approximant.p);
    CHECK(a[i].approximant.q == b[i].approximant.q);
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i].has_complex_pole())
      CHECK(std::abs(a[i - 1].closest_pole().real()) <= std::abs(a[i].closest_pole().real()));
  }
}

TEST_CASE("solver failure modes") {
  const auto series = tau_large_s_series(BoundaryCurve::disk(1.0), 4, SeriesMode::CurvatureApprox);
  SolveOptions none;
  none.multistarts = 0;
  CHECK(kind_of([&] { (void)solve_interpolation(series, 2, none); }) == ErrorKind::NoSolutionFound);
  CHECK(kind_of([&] { (void)select_physical({}); }) == ErrorKind::NoSolutionFound);
  CHECK(kind_of([&] { (void)solve_interpolation(series, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("moment fit on synthetic exponential sums") {
  const auto synth = [](const std::vector<PronyMode>& modes, int count) {
    std::vector<double> d;
    for (int k = 0; k < count; ++k) {
      double mu = 0.0;
      for (const auto& m : modes) mu += m.gamma_squared / std::pow(m.lambda, k + 1);
      d.push_back(k % 2 == 0 ? mu : -mu);
    }
    return d;
  };

  const auto single = prony_moments(synth({{5.8, 0.7}}, 2), 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].lambda == doctest::Approx(5.8).epsilon(1e-14));
  CHECK(single[0].gamma_squared == doctest::Approx(0.7).epsilon(1e-14));

  const std::vector<PronyMode> two{{3.0, 0.6}, {11.0, 0.3}};
  const auto fit2 = prony_moments(synth(two, 4), 2);
  for (int j = 0; j < 2; ++j) {
    CHECK(std::abs(fit2[j].lambda - two[j].lambda) < 1e-10 * two[j].lambda);
    CHECK(std::abs(fit2[j].gamma_squared - two[j].gamma_squared) < 1e-10);
  }

  const std::vector<PronyMode> three{{2.0, 0.5}, {7.0, 0.2}, {19.0, 0.1}};
  const auto fit3 = prony_moments(synth(three, 6), 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(fit3[j].lambda - three[j].lambda) < 1e-10 * three[j].lambda);
    CHECK(std::abs(fit3[j].gamma_squared - three[j].gamma_squared) < 1e-10);
  }

  CHECK(kind_of([&] { (void)prony_moments(synth({{5.0, 1.0}}, 4), 2); }) == ErrorKind::IllConditioned);
  CHECK(kind_of([&] { (void)prony_moments(std::vector<double>{1.0}, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("moment fit on the disk coefficients") {
  const double z1 = j0_zero(1);
  const auto d = maclaurin_tau_disk(1.0, 5);

  const auto two = prony_moments(std::span(d).first(4), 2);
  CHECK(two[0].lambda == doctest::Approx(5.784128).epsilon(1e-7));

  const auto three = prony_moments(std::span(d).first(6), 3);
  CHECK(std::abs(three[0].lambda - 5.783187) < 5e-7);
  CHECK(three[0].gamma_squared == doctest::Approx(4.0 / (z1 * z1)).epsilon(1e-6));

  const auto one = prony_moments(std::span(d).first(2), 1);
  CHECK(one[0].lambda == doctest::Approx(6.0).epsilon(1e-14));

  CHECK(std::abs(-d[3] / d[4] - z1 * z1) < 0.002 * z1 * z1);
}
