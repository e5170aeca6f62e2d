#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace heatpade {

// Truncated Taylor polynomial in one variable: c[k] = f^(k)(x0) / k!.
// Arithmetic propagates exact derivatives up to order N.
template <std::size_t N>
struct Jet {
  std::array<double, N + 1> c{};

  static Jet constant(double v) {
    Jet j;
    j.c[0] = v;
    return j;
  }

  /// Builds a jet from derivatives f, f', f'', ...
  static Jet from_derivatives(const std::array<double, N + 1>& d) {
    Jet j;
    double fact = 1.0;
    for (std::size_t k = 0; k <= N; ++k) {
      if (k > 0) fact *= static_cast<double>(k);
      j.c[k] = d[k] / fact;
    }
    return j;
  }

  double value() const { return c[0]; }

  /// k-th derivative at the expansion point.
  double derivative_at(std::size_t k) const {
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return c[k] * fact;
  }

  Jet<N - 1> derivative() const requires(N >= 1) {
    Jet<N - 1> d;
    for (std::size_t k = 0; k < N; ++k) d.c[k] = static_cast<double>(k + 1) * c[k + 1];
    return d;
  }

  template <std::size_t M>
  Jet<M> truncate() const requires(M <= N) {
    Jet<M> t;
    for (std::size_t k = 0; k <= M; ++k) t.c[k] = c[k];
    return t;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) c[k] += o.c[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) c[k] -= o.c[k];
    return *this;
  }
  Jet& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }
};

template <std::size_t N>
Jet<N> operator+(Jet<N> a, const Jet<N>& b) { return a += b; }
template <std::size_t N>
Jet<N> operator-(Jet<N> a, const Jet<N>& b) { return a -= b; }
template <std::size_t N>
Jet<N> operator*(Jet<N> a, double s) { return a *= s; }
template <std::size_t N>
Jet<N> operator*(double s, Jet<N> a) { return a *= s; }
template <std::size_t N>
Jet<N> operator+(Jet<N> a, double s) {
  a.c[0] += s;
  return a;
}
template <std::size_t N>
Jet<N> operator+(double s, Jet<N> a) { return a + s; }
template <std::size_t N>
Jet<N> operator-(double s, const Jet<N>& a) { return (-1.0) * a + s; }

template <std::size_t N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t i = 0; i <= k; ++i) r.c[k] += a.c[i] * b.c[k - i];
  return r;
}

template <std::size_t N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (std::size_t k = 0; k <= N; ++k) {
    double acc = a.c[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= b.c[i] * r.c[k - i];
    r.c[k] = acc / b.c[0];
  }
  return r;
}

// f^alpha for f(x0) > 0, via k f0 g_k = sum_{i=1..k} (alpha i - (k - i)) f_i g_{k-i}.
template <std::size_t N>
Jet<N> pow(const Jet<N>& f, double alpha) {
  Jet<N> g;
  g.c[0] = std::pow(f.c[0], alpha);
  for (std::size_t k = 1; k <= N; ++k) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= k; ++i)
      acc += (alpha * static_cast<double>(i) - static_cast<double>(k - i)) * f.c[i] * g.c[k - i];
    g.c[k] = acc / (static_cast<double>(k) * f.c[0]);
  }
  return g;
}

template <std::size_t N>
Jet<N> sqrt(const Jet<N>& f) { return pow(f, 0.5); }

/// cos(m x + phase) expanded at x0.
template <std::size_t N>
Jet<N> cos_jet(double m, double x0, double phase = 0.0) {
  std::array<double, N + 1> d{};
  double mk = 1.0;
  for (std::size_t k = 0; k <= N; ++k) {
    d[k] = mk * std::cos(m * x0 + phase + static_cast<double>(k) * std::numbers::pi / 2.0);
    mk *= m;
  }
  return Jet<N>::from_derivatives(d);
}

}  // namespace heatpade
