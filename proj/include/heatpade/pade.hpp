#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "heatpade/heat_content.hpp"

namespace heatpade {

/// P(s)/Q(s) with P = s^n + p_{n-1} s^{n-1} + ... + p_0 and
/// Q = s^{n+2} + q_{n+1} s^{n+1} + ... + q_0. Leading coefficients are implicit.
struct PadeApproximant {
  int n = 0;
  std::vector<double> p;  // p_0 .. p_{n-1}
  std::vector<double> q;  // q_0 .. q_{n+1}

  /// Throws InvalidArgument when the coefficient counts do not match n.
  static PadeApproximant make(int n, std::vector<double> p, std::vector<double> q);

  std::complex<double> numerator(std::complex<double> s) const;
  std::complex<double> denominator(std::complex<double> s) const;
  std::complex<double> operator()(std::complex<double> s) const {
    return numerator(s) / denominator(s);
  }
};

enum class SeriesDirection {
  AtZero,      // d_0 .. d_K of P/Q = sum d_k s^k
  AtInfinity,  // e_0 .. e_K of P/Q = sum e_k s^{-k-2}; e_j matches c_j for a fit
};

std::vector<double> rational_series(const PadeApproximant& approx, SeriesDirection direction, int K);

/// The 2n+2 interpolation conditions. Entries 0..n+1 are the large-s
/// mismatches e_j - c_j for j = 1..n+2; entries n+2..2n+1 are the odd
/// Maclaurin coefficients d_1, d_3, ..., d_{2n-1}.
class PadeResiduals {
 public:
  PadeResiduals(const LargeSSeries& series, int n);

  int n() const { return n_; }
  int size() const { return 2 * n_ + 2; }

  /// Throws DegenerateDenominator when q_0 == 0.
  std::vector<double> operator()(std::span<const double> p, std::span<const double> q) const;
  std::vector<double> operator()(const PadeApproximant& approx) const { return (*this)(approx.p, approx.q); }

  const std::vector<double>& c() const { return c_; }

 private:
  int n_;
  std::vector<double> c_;  // c_1 .. c_{n+2}
};

PadeResiduals build_residuals(const LargeSSeries& series, int n);

/// Roots of Q, Newton-polished and paired into exact conjugates; sorted by
/// modulus then imaginary part.
std::vector<std::complex<double>> poles(const PadeApproximant& approx);

struct SpectralEstimate {
  std::complex<double> closest_pole;  // smallest |s| among poles with Im s > 0
  double lambda1;                     // (Im closest_pole)^2
  double modulus_squared;             // |closest_pole|^2, diagnostic
};

/// Throws NoComplexPole when every pole is real.
SpectralEstimate spectral_estimate(std::span<const std::complex<double>> poles);
SpectralEstimate lambda1_from_solution(const PadeApproximant& approx);

struct PadeSolution {
  PadeApproximant approximant;
  double residual_norm = 0.0;
  std::vector<std::complex<double>> poles;
  std::optional<SpectralEstimate> spectral;  // empty when no pole is complex
  std::array<double, 4> small_s{};           // d_0, d_2, d_4, d_6
  double max_real_part = 0.0;                // largest Re over all poles

  bool has_complex_pole() const { return spectral.has_value(); }
  double lambda1() const;  // throws NoComplexPole
  std::complex<double> closest_pole() const;
};

/// p_0 > 0, q_0 > 0, a complex pole exists, and every pole has Re <= slack.
inline constexpr double kPoleRealSlack = 1e-3;
bool is_physical(const PadeSolution& sol);

inline constexpr double kAcceptResidual = 1e-10;
inline constexpr double kDedupDistance = 1e-8;

struct SolveOptions {
  int multistarts = 1200;
  std::uint64_t seed = 42;
  /// Accepted solution of order n-1, used to build continuation seeds.
  std::optional<PadeApproximant> continuation;
  int threads = 0;  // 0: default_thread_count()
  int max_iterations = 200;
};

/// All distinct real solutions found from continuation seeds and random
/// multistarts, ordered by ascending |Re closest pole| (solutions without a
/// complex pole last). Throws NoSolutionFound if no start converges.
std::vector<PadeSolution> solve_interpolation(const LargeSSeries& series, int n,
                                              const SolveOptions& opts = {});

/// First physical solution in solver order; throws NoSolutionFound if none.
const PadeSolution& select_physical(const std::vector<PadeSolution>& solutions);

struct SequenceEntry {
  int n;
  std::optional<PadeSolution> selected;
  std::size_t solution_count = 0;
};

/// Solves n = 1..n_max, seeding each order from the previous accepted one.
/// Orders with no physical solution keep `selected` empty.
std::vector<SequenceEntry> solve_sequence(const LargeSSeries& series, int n_max,
                                          const SolveOptions& opts = {});

/// Quadratic extrapolation in 1/n to n -> infinity through the last three
/// (n, lambda) points.
double extrapolate_lambda1(std::span<const int> n, std::span<const double> lambda);

struct PronyMode {
  double lambda;
  double gamma_squared;
};

/// Fits sum_j gamma_j^2 / lambda_j^{k+1} = (-1)^k d_{2k}, k = 0..2m-1, from
/// d_even = [d_0, d_2, ..., d_{4m-2}]. Modes sorted by lambda.
/// Throws IllConditioned when the moment Hankel matrix is numerically singular.
std::vector<PronyMode> prony_moments(std::span<const double> d_even, int m);

}  // namespace heatpade
