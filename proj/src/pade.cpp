#include "heatpade/pade.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "heatpade/error.hpp"
#include "heatpade/parallel.hpp"

namespace heatpade {

namespace {

using Real = long double;
using VecR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using MatR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexR = std::complex<Real>;

// Full coefficient arrays with the monic leading terms included:
// p has n+1 entries, q has n+3.
struct Coeffs {
  std::vector<Real> p;
  std::vector<Real> q;
};

Coeffs full_coeffs(const PadeApproximant& a) {
  Coeffs x;
  x.p.assign(a.p.begin(), a.p.end());
  x.p.push_back(1.0L);
  x.q.assign(a.q.begin(), a.q.end());
  x.q.push_back(1.0L);
  return x;
}

PadeApproximant to_approximant(int n, const Coeffs& x) {
  PadeApproximant a;
  a.n = n;
  for (int i = 0; i < n; ++i) a.p.push_back(static_cast<double>(x.p[i]));
  for (int i = 0; i < n + 2; ++i) a.q.push_back(static_cast<double>(x.q[i]));
  return a;
}

// Maclaurin coefficients d_0..d_K of P/Q.
std::vector<Real> maclaurin(const Coeffs& x, int K) {
  if (x.q[0] == 0.0L) throw Error(ErrorKind::DegenerateDenominator, "q_0 = 0: no expansion at s = 0");
  std::vector<Real> d(static_cast<std::size_t>(K) + 1);
  const int deg_p = static_cast<int>(x.p.size()) - 1;
  const int deg_q = static_cast<int>(x.q.size()) - 1;
  for (int k = 0; k <= K; ++k) {
    Real acc = k <= deg_p ? x.p[k] : 0.0L;
    for (int i = 1; i <= std::min(k, deg_q); ++i) acc -= x.q[i] * d[k - i];
    d[k] = acc / x.q[0];
  }
  return d;
}

// Expansion of P/Q in u = 1/s, divided by u^2: e_0..e_K.
std::vector<Real> at_infinity(const Coeffs& x, int K) {
  const int n = static_cast<int>(x.p.size()) - 1;
  std::vector<Real> e(static_cast<std::size_t>(K) + 1);
  for (int j = 0; j <= K; ++j) {
    Real acc = j <= n ? x.p[n - j] : 0.0L;
    for (int i = 1; i <= std::min(j, n + 2); ++i) acc -= x.q[n + 2 - i] * e[j - i];
    e[j] = acc;
  }
  return e;
}

std::vector<Real> full_residuals(const Coeffs& x, const std::vector<double>& c) {
  const int n = static_cast<int>(x.p.size()) - 1;
  std::vector<Real> r;
  r.reserve(2 * static_cast<std::size_t>(n) + 2);
  // A(u) - B(u) C(u) with A_j = p_{n-j}, B_i = q_{n+2-i}, C_0 = 1.
  for (int j = 1; j <= n + 2; ++j) {
    Real acc = j <= n ? x.p[n - j] : 0.0L;
    for (int i = 0; i <= j; ++i) {
      const Real cj = j - i == 0 ? 1.0L : static_cast<Real>(c[j - i - 1]);
      acc -= x.q[n + 2 - i] * cj;
    }
    r.push_back(acc);
  }
  const auto d = maclaurin(x, 2 * n);
  for (int k = 1; k < 2 * n; k += 2) r.push_back(d[k]);
  return r;
}

Real norm(const std::vector<Real>& v) {
  Real s = 0.0L;
  for (Real x : v) s += x * x;
  return std::sqrt(s);
}

// The large-s conditions fix q_0, q_1 and all of p as affine functions of
// y = (q_2, ..., q_{n+1}); the remaining n unknowns solve the odd-parity
// conditions, written as the odd coefficients of P(s)Q(-s) - P(-s)Q(s).
class ReducedSystem {
 public:
  ReducedSystem(const std::vector<double>& c, int n) : n_(n), C_(static_cast<std::size_t>(n) + 3) {
    C_[0] = 1.0L;
    for (int j = 1; j <= n + 2; ++j) C_[j] = c[j - 1];
    for (int m = 0; m < n; ++m) {
      VecR e = VecR::Zero(n);
      e[m] = 1.0L;
      dirs_.push_back(expand_with_lead(e, 0.0L));
    }
  }

  Coeffs expand(const VecR& y) const { return expand_with_lead(y, 1.0L); }

  // Odd coefficients N_1, N_3, ..., N_{2n-1} and their term magnitudes.
  void odd_part(const Coeffs& a, const Coeffs& b, VecR& out, VecR* scale) const {
    out.setZero(n_);
    if (scale) scale->setZero(n_);
    for (int r = 0; r < n_; ++r) {
      const int k = 2 * r + 1;
      Real acc = 0.0L;
      Real mag = 0.0L;
      for (int i = std::max(0, k - (n_ + 2)); i <= std::min(k, n_); ++i) {
        const int j = k - i;
        const Real t = a.p[i] * b.q[j];
        acc += j % 2 == 0 ? t : -t;
        mag += std::abs(t);
      }
      out[r] = 2.0L * acc;
      if (scale) (*scale)[r] = 2.0L * mag;
    }
  }

  Real scaled_norm(const Coeffs& x) const {
    VecR f;
    VecR s;
    odd_part(x, x, f, &s);
    Real acc = 0.0L;
    for (int r = 0; r < n_; ++r) {
      const Real v = f[r] / std::max(s[r], std::numeric_limits<Real>::min());
      acc += v * v;
    }
    return std::sqrt(acc);
  }

  VecR values(const Coeffs& x) const {
    VecR f;
    odd_part(x, x, f, nullptr);
    return f;
  }

  MatR jacobian(const Coeffs& x) const {
    MatR J(n_, n_);
    VecR a;
    VecR b;
    for (int m = 0; m < n_; ++m) {
      odd_part(dirs_[m], x, a, nullptr);
      odd_part(x, dirs_[m], b, nullptr);
      J.col(m) = a + b;
    }
    return J;
  }

 private:
  Coeffs expand_with_lead(const VecR& y, Real lead) const {
    const int n = n_;
    Coeffs x;
    x.q.assign(static_cast<std::size_t>(n) + 3, 0.0L);
    x.q[n + 2] = lead;
    for (int m = 0; m < n; ++m) x.q[m + 2] = y[m];
    Real q1 = 0.0L;
    for (int i = 0; i <= n; ++i) q1 -= x.q[n + 2 - i] * C_[n + 1 - i];
    x.q[1] = q1;
    Real q0 = 0.0L;
    for (int i = 0; i <= n + 1; ++i) q0 -= x.q[n + 2 - i] * C_[n + 2 - i];
    x.q[0] = q0;
    x.p.assign(static_cast<std::size_t>(n) + 1, 0.0L);
    x.p[n] = lead;
    for (int j = 1; j <= n; ++j) {
      Real acc = 0.0L;
      for (int i = 0; i <= j; ++i) acc += x.q[n + 2 - i] * C_[j - i];
      x.p[n - j] = acc;
    }
    return x;
  }

  int n_;
  std::vector<Real> C_;
  std::vector<Coeffs> dirs_;
};

constexpr Real kNewtonTolerance = 1e-12L;
constexpr Real kStepTolerance = 1e-14L;
constexpr int kMaxHalvings = 30;
constexpr int kPolishSteps = 3;
constexpr Real kDivergence = 1e14L;

std::optional<VecR> newton(const ReducedSystem& sys, VecR y, int max_iterations) {
  Coeffs x = sys.expand(y);
  Real g = sys.scaled_norm(x);
  if (!std::isfinite(static_cast<double>(g))) return std::nullopt;
  bool converged = false;
  int polish = 0;
  for (int it = 0; it < max_iterations; ++it) {
    if (g < kNewtonTolerance) {
      converged = true;
      if (polish++ >= kPolishSteps) break;
    }
    const MatR J = sys.jacobian(x);
    const Eigen::FullPivLU<MatR> lu(J);
    if (!lu.isInvertible()) break;
    const VecR delta = lu.solve(-sys.values(x));
    if (!delta.allFinite()) break;

    Real alpha = 1.0L;
    bool accepted = false;
    for (int h = 0; h <= kMaxHalvings; ++h, alpha *= 0.5L) {
      const VecR trial = y + alpha * delta;
      const Coeffs xt = sys.expand(trial);
      const Real gt = sys.scaled_norm(xt);
      if (std::isfinite(static_cast<double>(gt)) && gt < g) {
        y = trial;
        x = xt;
        g = gt;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    if (y.norm() > kDivergence) return std::nullopt;
    if (alpha * delta.norm() < kStepTolerance * (1.0L + y.norm())) {
      converged = true;
      break;
    }
  }
  if (!converged) return std::nullopt;
  return y;
}

// Monic polynomial with the given roots, ascending coefficients.
std::vector<Real> poly_from_roots(const std::vector<ComplexR>& roots) {
  std::vector<ComplexR> c{ComplexR(1.0L)};
  for (const auto& r : roots) {
    std::vector<ComplexR> next(c.size() + 1, ComplexR(0.0L));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<Real> out;
  for (const auto& v : c) out.push_back(v.real());
  return out;
}

VecR pole_seeded_start(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  std::vector<ComplexR> roots;
  const int degree = n + 2;
  while (static_cast<int>(roots.size()) < degree) {
    if (degree - static_cast<int>(roots.size()) >= 2 && unit(rng) < 0.6) {
      const ComplexR z(-std::abs(normal(rng)) * 3.0, std::abs(normal(rng)) * 4.0);
      roots.push_back(z);
      roots.push_back(std::conj(z));
    } else {
      roots.emplace_back(-std::abs(normal(rng)) * 5.0, 0.0);
    }
  }
  const auto q = poly_from_roots(roots);
  VecR y(n);
  for (int m = 0; m < n; ++m) y[m] = q[m + 2];
  return y;
}

std::vector<Real> times_linear(const std::vector<Real>& q, Real a) {
  // q(s) * (s + a), ascending coefficients.
  std::vector<Real> out(q.size() + 1, 0.0L);
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[i + 1] += q[i];
    out[i] += a * q[i];
  }
  return out;
}

PadeSolution make_solution(const PadeApproximant& approx, Real residual_norm) {
  PadeSolution sol;
  sol.approximant = approx;
  sol.residual_norm = static_cast<double>(residual_norm);
  sol.poles = poles(approx);
  sol.max_real_part = -std::numeric_limits<double>::infinity();
  for (const auto& z : sol.poles) sol.max_real_part = std::max(sol.max_real_part, z.real());
  try {
    sol.spectral = spectral_estimate(sol.poles);
  } catch (const Error&) {
  }
  const auto d = rational_series(approx, SeriesDirection::AtZero, 6);
  sol.small_s = {d[0], d[2], d[4], d[6]};
  return sol;
}

}  // namespace

PadeApproximant PadeApproximant::make(int n, std::vector<double> p, std::vector<double> q) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "approximant order must be >= 0");
  if (static_cast<int>(p.size()) != n || static_cast<int>(q.size()) != n + 2)
    throw Error(ErrorKind::InvalidArgument, "approximant of order " + std::to_string(n) +
                                                " needs " + std::to_string(n) + " p and " +
                                                std::to_string(n + 2) + " q coefficients");
  return PadeApproximant{n, std::move(p), std::move(q)};
}

std::complex<double> PadeApproximant::numerator(std::complex<double> s) const {
  std::complex<double> acc = 1.0;
  for (int i = n - 1; i >= 0; --i) acc = acc * s + p[i];
  return acc;
}

std::complex<double> PadeApproximant::denominator(std::complex<double> s) const {
  std::complex<double> acc = 1.0;
  for (int i = n + 1; i >= 0; --i) acc = acc * s + q[i];
  return acc;
}

std::vector<double> rational_series(const PadeApproximant& approx, SeriesDirection direction, int K) {
  if (K < 0) throw Error(ErrorKind::InvalidArgument, "series length must be >= 0");
  const Coeffs x = full_coeffs(approx);
  const auto v = direction == SeriesDirection::AtZero ? maclaurin(x, K) : at_infinity(x, K);
  return {v.begin(), v.end()};
}

PadeResiduals::PadeResiduals(const LargeSSeries& series, int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "interpolation order must be >= 1");
  if (series.order() < n + 2)
    throw Error(ErrorKind::InvalidArgument, "order " + std::to_string(n) + " needs c_1..c_" +
                                                std::to_string(n + 2) + ", got " +
                                                std::to_string(series.order()));
  c_.assign(series.c().begin(), series.c().begin() + n + 2);
}

std::vector<double> PadeResiduals::operator()(std::span<const double> p, std::span<const double> q) const {
  if (static_cast<int>(p.size()) != n_ || static_cast<int>(q.size()) != n_ + 2)
    throw Error(ErrorKind::InvalidArgument, "coefficient counts do not match the order");
  Coeffs x;
  x.p.assign(p.begin(), p.end());
  x.p.push_back(1.0L);
  x.q.assign(q.begin(), q.end());
  x.q.push_back(1.0L);
  const auto r = full_residuals(x, c_);
  return {r.begin(), r.end()};
}

PadeResiduals build_residuals(const LargeSSeries& series, int n) { return PadeResiduals(series, n); }

std::vector<std::complex<double>> poles(const PadeApproximant& approx) {
  const int deg = approx.n + 2;
  MatR companion = MatR::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0L;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -static_cast<Real>(approx.q[i]);
  const Eigen::EigenSolver<MatR> es(companion, false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::IllConditioned, "companion eigenvalue iteration failed");

  const Coeffs x = full_coeffs(approx);
  auto eval = [&](ComplexR z) {
    ComplexR v = 1.0L;
    ComplexR dv = 0.0L;
    for (int i = deg - 1; i >= 0; --i) {
      dv = dv * z + v;
      v = v * z + x.q[i];
    }
    return std::pair{v, dv};
  };

  std::vector<ComplexR> roots;
  for (int i = 0; i < deg; ++i) {
    ComplexR z = es.eigenvalues()[i];
    const auto [v, dv] = eval(z);
    if (std::abs(dv) > 0.0L) {
      const ComplexR polished = z - v / dv;
      if (std::abs(eval(polished).first) < std::abs(v)) z = polished;
    }
    roots.push_back(z);
  }

  // Pair conjugates; near-real roots become exactly real.
  std::vector<bool> used(roots.size(), false);
  std::vector<std::complex<double>> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const ComplexR z = roots[i];
    const Real tol = 1e-9L * std::max(1.0L, std::abs(z));
    if (std::abs(z.imag()) <= tol) {
      used[i] = true;
      out.emplace_back(static_cast<double>(z.real()), 0.0);
      continue;
    }
    std::size_t best = roots.size();
    Real best_dist = std::numeric_limits<Real>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j] || (roots[j].imag() > 0) == (z.imag() > 0)) continue;
      const Real dist = std::abs(roots[j] - std::conj(z));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    used[i] = true;
    if (best == roots.size()) {
      out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      continue;
    }
    used[best] = true;
    const ComplexR upper = z.imag() > 0 ? z : roots[best];
    const ComplexR lower = z.imag() > 0 ? roots[best] : z;
    const ComplexR mean = 0.5L * (upper + std::conj(lower));
    out.emplace_back(static_cast<double>(mean.real()), static_cast<double>(mean.imag()));
    out.emplace_back(static_cast<double>(mean.real()), -static_cast<double>(mean.imag()));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return a.imag() > b.imag();
  });
  return out;
}

SpectralEstimate spectral_estimate(std::span<const std::complex<double>> poles) {
  const std::complex<double>* best = nullptr;
  for (const auto& z : poles) {
    if (z.imag() > 0.0 && (!best || std::abs(z) < std::abs(*best))) best = &z;
  }
  if (!best) throw Error(ErrorKind::NoComplexPole, "all poles are real");
  return {*best, best->imag() * best->imag(), std::norm(*best)};
}

SpectralEstimate lambda1_from_solution(const PadeApproximant& approx) {
  const auto p = poles(approx);
  return spectral_estimate(p);
}

double PadeSolution::lambda1() const {
  if (!spectral) throw Error(ErrorKind::NoComplexPole, "all poles are real");
  return spectral->lambda1;
}

std::complex<double> PadeSolution::closest_pole() const {
  if (!spectral) throw Error(ErrorKind::NoComplexPole, "all poles are real");
  return spectral->closest_pole;
}

bool is_physical(const PadeSolution& sol) {
  return sol.approximant.p[0] > 0.0 && sol.approximant.q[0] > 0.0 && sol.has_complex_pole() &&
         sol.max_real_part <= kPoleRealSlack;
}

std::vector<PadeSolution> solve_interpolation(const LargeSSeries& series, int n, const SolveOptions& opts) {
  const PadeResiduals residuals(series, n);
  const ReducedSystem sys(residuals.c(), n);

  std::vector<VecR> fixed_starts;
  std::optional<VecR> seed_y;
  if (opts.continuation && opts.continuation->n == n - 1) {
    const Coeffs prev = full_coeffs(*opts.continuation);
    for (Real a : {0.25L, 0.5L, 1.0L, 2.0L, 4.0L, 8.0L}) {
      const auto q = times_linear(prev.q, a);
      VecR y(n);
      for (int m = 0; m < n; ++m) y[m] = q[m + 2];
      fixed_starts.push_back(y);
    }
    seed_y = fixed_starts[2];
  }

  const std::size_t total = fixed_starts.size() + static_cast<std::size_t>(std::max(0, opts.multistarts));
  std::vector<std::optional<VecR>> results(total);
  parallel_for(total, opts.threads, [&](std::size_t idx) {
    VecR start;
    if (idx < fixed_starts.size()) {
      start = fixed_starts[idx];
    } else {
      const auto k = static_cast<std::uint64_t>(idx - fixed_starts.size());
      std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                        static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                        static_cast<std::uint32_t>(k >> 32)};
      std::mt19937_64 rng(seq);
      if (k % 2 == 0) {
        start = pole_seeded_start(n, rng);
      } else {
        std::normal_distribution<double> normal;
        start.resize(n);
        for (int m = 0; m < n; ++m) {
          const Real centre = seed_y ? (*seed_y)[m] : 0.0L;
          const Real spread = seed_y ? std::abs((*seed_y)[m]) : 1.0L;
          start[m] = centre + spread * normal(rng);
        }
      }
    }
    results[idx] = newton(sys, start, opts.max_iterations);
  });

  struct Found {
    PadeSolution sol;
    std::vector<double> coords;
    std::size_t index;
  };
  std::vector<Found> found;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (!results[idx]) continue;
    const Coeffs x = sys.expand(*results[idx]);
    if (x.q[0] == 0.0L) continue;
    const Real res = norm(full_residuals(x, residuals.c()));
    if (!(res < kAcceptResidual)) continue;

    const PadeApproximant approx = to_approximant(n, x);
    std::vector<double> coords(approx.p);
    coords.insert(coords.end(), approx.q.begin(), approx.q.end());
    double scale = 0.0;
    for (double v : coords) scale += v * v;
    scale = std::sqrt(scale);
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const Found& f) {
      double dist = 0.0;
      for (std::size_t i = 0; i < coords.size(); ++i) dist += std::pow(coords[i] - f.coords[i], 2);
      return std::sqrt(dist) <= kDedupDistance * (1.0 + scale);
    });
    if (duplicate) continue;
    found.push_back({make_solution(approx, res), std::move(coords), idx});
  }
  if (found.empty())
    throw Error(ErrorKind::NoSolutionFound,
                "no start converged for n = " + std::to_string(n) + " (" + std::to_string(total) + " starts)");

  std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    const bool ca = a.sol.has_complex_pole();
    const bool cb = b.sol.has_complex_pole();
    if (ca != cb) return ca;
    if (ca) {
      const double ra = std::abs(a.sol.spectral->closest_pole.real());
      const double rb = std::abs(b.sol.spectral->closest_pole.real());
      if (ra != rb) return ra < rb;
    }
    return a.index < b.index;
  });
  std::vector<PadeSolution> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.sol));
  return out;
}

const PadeSolution& select_physical(const std::vector<PadeSolution>& solutions) {
  for (const auto& s : solutions)
    if (is_physical(s)) return s;
  throw Error(ErrorKind::NoSolutionFound, "no solution passes the physical filter");
}

std::vector<SequenceEntry> solve_sequence(const LargeSSeries& series, int n_max, const SolveOptions& opts) {
  std::vector<SequenceEntry> out;
  SolveOptions local = opts;
  local.continuation.reset();
  for (int n = 1; n <= n_max; ++n) {
    SequenceEntry entry{n, std::nullopt, 0};
    try {
      const auto sols = solve_interpolation(series, n, local);
      entry.solution_count = sols.size();
      entry.selected = select_physical(sols);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSolutionFound) throw;
    }
    if (entry.selected) local.continuation = entry.selected->approximant;
    else local.continuation.reset();
    out.push_back(std::move(entry));
  }
  return out;
}

double extrapolate_lambda1(std::span<const int> n, std::span<const double> lambda) {
  if (n.size() != lambda.size() || n.size() < 3)
    throw Error(ErrorKind::InvalidArgument, "extrapolation needs at least three (n, lambda) points");
  const std::size_t k = n.size() - 3;
  double h[3];
  double v[3];
  for (int i = 0; i < 3; ++i) {
    if (n[k + i] <= 0) throw Error(ErrorKind::InvalidArgument, "extrapolation orders must be positive");
    h[i] = 1.0 / n[k + i];
    v[i] = lambda[k + i];
  }
  double result = 0.0;
  for (int i = 0; i < 3; ++i) {
    double w = 1.0;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      if (h[i] == h[j]) throw Error(ErrorKind::InvalidArgument, "extrapolation orders must be distinct");
      w *= (0.0 - h[j]) / (h[i] - h[j]);
    }
    result += w * v[i];
  }
  return result;
}

std::vector<PronyMode> prony_moments(std::span<const double> d_even, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "prony needs m >= 1");
  if (static_cast<int>(d_even.size()) < 2 * m)
    throw Error(ErrorKind::InvalidArgument, "prony with m = " + std::to_string(m) + " needs " +
                                                std::to_string(2 * m) + " even coefficients");
  // mu_k = (-1)^k d_{2k} = sum_j w_j x_j^k with x_j = 1/lambda_j, w_j = gamma_j^2/lambda_j.
  std::vector<Real> mu(2 * static_cast<std::size_t>(m));
  for (int k = 0; k < 2 * m; ++k) mu[k] = (k % 2 == 0 ? 1.0L : -1.0L) * d_even[k];

  MatR h0(m, m);
  MatR h1(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      h0(i, j) = mu[i + j];
      h1(i, j) = mu[i + j + 1];
    }
  const Eigen::JacobiSVD<MatR> svd(h0);
  const auto& sv = svd.singularValues();
  if (!(sv[m - 1] > 1e-14L * sv[0]))
    throw Error(ErrorKind::IllConditioned, "moment Hankel matrix is numerically singular");

  const MatR pencil = h0.fullPivLu().solve(h1);
  const Eigen::EigenSolver<MatR> es(pencil, false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::IllConditioned, "Hankel pencil eigenvalues failed");
  std::vector<Real> x;
  for (int j = 0; j < m; ++j) {
    const ComplexR z = es.eigenvalues()[j];
    if (std::abs(z.imag()) > 1e-10L * std::abs(z) || !(z.real() > 0.0L))
      throw Error(ErrorKind::IllConditioned, "moment sequence has no positive real decay rates");
    x.push_back(z.real());
  }

  MatR vand(m, m);
  VecR rhs(m);
  for (int k = 0; k < m; ++k) {
    rhs[k] = mu[k];
    for (int j = 0; j < m; ++j) vand(k, j) = std::pow(x[j], static_cast<Real>(k));
  }
  const VecR w = vand.fullPivLu().solve(rhs);

  std::vector<PronyMode> modes;
  for (int j = 0; j < m; ++j) {
    const Real lambda = 1.0L / x[j];
    modes.push_back({static_cast<double>(lambda), static_cast<double>(w[j] * lambda)});
  }
  std::sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return modes;
}

}  // namespace heatpade
