#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rieszarc {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Default resource caps. Callers may override per call; exceeding a cap
// raises resource_limit naming the cap instead of degrading silently.
inline constexpr std::size_t default_arc_cap = 5'000'000;
inline constexpr std::size_t default_gram_cap = 4096;
inline constexpr std::int64_t max_abs_frequency = std::int64_t{1} << 46;

// Endpoints closer than this are fused during normalization.
inline constexpr double merge_tol = 1e-12;

struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct search_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_input(msg);
}

// Compensated accumulator; keeps long arc-length sums near machine precision.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Riemann zeta on the real ray s > 1 via Euler-Maclaurin. Drives the c0
// budget and truncation-tail reporting; accuracy ~1e-14 for s >= 1.05.
inline double zeta_real(double s) {
  require(std::isfinite(s) && s > 1.0, "zeta_real requires s > 1");
  const int K = 64;
  KahanSum head;
  for (int k = 1; k < K; ++k) head.add(std::pow(static_cast<double>(k), -s));
  const double a = static_cast<double>(K);
  double tail = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  tail += s * std::pow(a, -s - 1.0) / 12.0;
  tail -= s * (s + 1.0) * (s + 2.0) * std::pow(a, -s - 3.0) / 720.0;
  tail += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) *
          std::pow(a, -s - 5.0) / 30240.0;
  return head.value() + tail;
}

// Sum_{k > L} k^{-s}, the part of the zeta series a truncation discards.
inline double zeta_tail(double s, std::int64_t L) {
  require(std::isfinite(s) && s > 1.0, "zeta_tail requires s > 1");
  require(L >= 0, "zeta_tail requires L >= 0");
  const std::int64_t start = L + 1;
  std::int64_t a = start;
  KahanSum head;
  while (a < start + 64 || a < 16) {
    // Euler-Maclaurin needs a moderately large anchor; sum explicitly up to it.
    head.add(std::pow(static_cast<double>(a), -s));
    ++a;
  }
  const double x = static_cast<double>(a);
  double tail = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  tail += s * std::pow(x, -s - 1.0) / 12.0;
  tail -= s * (s + 1.0) * (s + 2.0) * std::pow(x, -s - 3.0) / 720.0;
  tail += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) *
          std::pow(x, -s - 5.0) / 30240.0;
  return head.value() + tail;
}

// Deterministic random source. Draws are specified bit-for-bit (mt19937_64
// plus explicit float conversion and Box-Muller), so seeded runs reproduce
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  cplx complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  // Unit vector in C^n, uniform on the sphere.
  std::vector<cplx> unit_vector(std::size_t n) {
    std::vector<cplx> a(n);
    double norm_sq = 0.0;
    for (auto& z : a) {
      z = complex_gaussian();
      norm_sq += std::norm(z);
    }
    if (norm_sq == 0.0) {
      a[0] = 1.0;
      norm_sq = 1.0;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& z : a) z *= inv;
    return a;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline std::int64_t gcd_ll(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace rieszarc
