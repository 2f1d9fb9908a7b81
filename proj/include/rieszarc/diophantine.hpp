#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rieszarc/arcs.hpp"
#include "rieszarc/common.hpp"
#include "rieszarc/salpha.hpp"

namespace rieszarc {

struct CoprimePair {
  std::int64_t m;
  std::int64_t n;
};

// All pairs 1 <= m < n <= N with gcd(m, n) = 1, sorted by (n, m).
inline std::vector<CoprimePair> coprime_pairs(std::int64_t N) {
  require(N >= 1, "N must be positive");
  std::vector<CoprimePair> out;
  for (std::int64_t n = 2; n <= N; ++n)
    for (std::int64_t m = 1; m < n; ++m)
      if (std::gcd(m, n) == 1) out.push_back({m, n});
  return out;
}

// Number of coprime m/n with n <= N lying strictly within 1/n^(1+rho) of x.
inline std::int64_t count_close_fractions(double x, std::int64_t N, double rho,
                                          const std::vector<CoprimePair>& pairs) {
  require(x >= 0.0 && x <= 1.0, "x must lie in [0, 1]");
  require(rho > 0.0 && rho < 1.0, "rho must lie in (0, 1)");
  std::int64_t count = 0;
  for (const CoprimePair& p : pairs) {
    if (p.n > N) continue;
    const double dist =
        std::abs(x - static_cast<double>(p.m) / static_cast<double>(p.n));
    if (dist < std::pow(static_cast<double>(p.n), -(1.0 + rho))) ++count;
  }
  return count;
}

inline std::int64_t count_close_fractions(double x, std::int64_t N, double rho) {
  return count_close_fractions(x, N, rho, coprime_pairs(N));
}

// Farey points m/n with n <= Q, distinct, sorted; the adversarial part of the
// scan grid (counts peak at rationals).
inline std::vector<double> farey_points(std::int64_t Q) {
  std::vector<double> xs{0.0, 1.0};
  for (std::int64_t n = 2; n <= Q; ++n)
    for (std::int64_t m = 1; m < n; ++m)
      if (std::gcd(m, n) == 1)
        xs.push_back(static_cast<double>(m) / static_cast<double>(n));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

struct CountingFit {
  double C = 0.0;                 // max over the scan of count / N^(1-rho)
  std::vector<double> per_n_max;  // same max restricted to each N
  bool stable = false;            // consecutive maxima grew by < 20%
};

inline CountingFit fit_counting_constant(const std::vector<std::int64_t>& Ns,
                                         double rho,
                                         const std::vector<double>& x_grid) {
  require(!x_grid.empty(), "x grid must be nonempty");
  require(Ns.size() >= 2, "need at least two N values");
  for (std::size_t i = 0; i + 1 < Ns.size(); ++i)
    require(Ns[i] < Ns[i + 1], "N list must be increasing");
  const auto pairs = coprime_pairs(Ns.back());
  CountingFit fit;
  fit.per_n_max.resize(Ns.size(), 0.0);
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const double scale =
        std::pow(static_cast<double>(Ns[i]), -(1.0 - rho));
    double best = 0.0;
    for (double x : x_grid) {
      const auto c = count_close_fractions(x, Ns[i], rho, pairs);
      best = std::max(best, static_cast<double>(c) * scale);
    }
    fit.per_n_max[i] = best;
    fit.C = std::max(fit.C, best);
  }
  fit.stable = true;
  for (std::size_t i = 0; i + 1 < Ns.size(); ++i)
    if (fit.per_n_max[i + 1] > 1.2 * fit.per_n_max[i]) fit.stable = false;
  return fit;
}

// Qualifying pairs restricted to one dyadic shell 2^-k N <= n <= 2^-k+1 N.
inline std::int64_t shell_count(double x, std::int64_t N, double rho,
                                int k, const std::vector<CoprimePair>& pairs) {
  const double lo = std::ldexp(static_cast<double>(N), -k);
  const double hi = std::ldexp(static_cast<double>(N), -k + 1);
  std::int64_t count = 0;
  for (const CoprimePair& p : pairs) {
    const double n = static_cast<double>(p.n);
    if (n < lo || n > hi || p.n > N) continue;
    const double dist = std::abs(x - static_cast<double>(p.m) / n);
    if (dist < std::pow(n, -(1.0 + rho))) ++count;
  }
  return count;
}

// Fractions in shell k are separated by at least 2^(2k-2)/N^2 and qualifying
// ones sit inside a window of radius 2^(k(1+rho))/N^(1+rho) around x, so the
// shell holds at most floor(8 * 2^(k(rho-1)) * N^(1-rho)) + 1 of them.
inline double shell_count_bound(std::int64_t N, double rho, int k) {
  const double v = 8.0 * std::pow(2.0, static_cast<double>(k) * (rho - 1.0)) *
                   std::pow(static_cast<double>(N), 1.0 - rho);
  return std::floor(v + 1e-9) + 1.0;
}

// Precomputed scan over coprime_pairs(N): one pass per x yields the total
// count and every dyadic-shell count, with shell membership resolved once
// (shells share closed boundaries, so a pair can sit in two of them).
class CountingScan {
 public:
  CountingScan(std::int64_t N, double rho) : n_(N), rho_(rho) {
    require(N >= 1, "N must be positive");
    require(rho > 0.0 && rho < 1.0, "rho must lie in (0, 1)");
    kmax_ = 0;
    while ((std::int64_t{1} << (kmax_ + 1)) <= N) ++kmax_;
    for (const CoprimePair& p : coprime_pairs(N)) {
      Entry e;
      const double n = static_cast<double>(p.n);
      e.frac = static_cast<double>(p.m) / n;
      e.thr = std::pow(n, -(1.0 + rho));
      e.k1 = e.k2 = 0;  // 0 = unused slot
      const int k0 = static_cast<int>(
          std::floor(std::log2(static_cast<double>(N) / n)));
      for (int k = std::max(1, k0 - 1); k <= std::min(kmax_, k0 + 1); ++k) {
        const double lo = std::ldexp(static_cast<double>(N), -k);
        const double hi = std::ldexp(static_cast<double>(N), -k + 1);
        if (n >= lo && n <= hi) {
          if (e.k1 == 0)
            e.k1 = k;
          else
            e.k2 = k;
        }
      }
      entries_.push_back(e);
    }
  }

  std::int64_t N() const { return n_; }
  double rho() const { return rho_; }
  int kmax() const { return kmax_; }

  struct Result {
    std::int64_t total = 0;
    std::vector<std::int64_t> shell;  // index 1..kmax
  };

  Result at(double x) const {
    Result r;
    r.shell.assign(static_cast<std::size_t>(kmax_) + 1, 0);
    for (const Entry& e : entries_) {
      if (!(std::abs(x - e.frac) < e.thr)) continue;
      ++r.total;
      if (e.k1 > 0) ++r.shell[static_cast<std::size_t>(e.k1)];
      if (e.k2 > 0) ++r.shell[static_cast<std::size_t>(e.k2)];
    }
    return r;
  }

 private:
  struct Entry {
    double frac;
    double thr;
    int k1;
    int k2;
  };
  std::vector<Entry> entries_;
  std::int64_t n_;
  double rho_;
  int kmax_;
};

// Arcs of half-width p*delta(ell)/ell at the coprime residues j/ell,
// 1 <= j < ell. Empty at ell = 1 (no interior residues).
inline ArcSet jpl_arcs(std::int64_t p, std::int64_t ell, const SAlphaSpec& spec,
                       std::size_t arc_cap = default_arc_cap) {
  require(ell >= 1, "step must be positive");
  require(p >= 2, "p must be a prime, at least 2");
  if (ell % p == 0) throw invalid_input("p must not divide ell");
  require(std::gcd(p, ell) == 1, "p must be coprime to ell");
  const double half =
      static_cast<double>(p) * spec.delta(ell) / static_cast<double>(ell);
  std::vector<std::pair<double, double>> raw;
  for (std::int64_t j = 1; j < ell; ++j) {
    if (std::gcd(j, ell) != 1) continue;
    const double center =
        two_pi * static_cast<double>(j) / static_cast<double>(ell);
    raw.emplace_back(center - half, center + half);
  }
  return ArcSet::from_raw(raw, arc_cap);
}

// The disjointness ladder: eta_1 is the midpoint of (alpha/(1-alpha), 1) and
// eta_{i+1} = 2/(1+alpha) * (eta_i - alpha/2), iterated until eta_d > 1/alpha.
// Within one rung [p^eta_i, p^eta_{i+1}] the coprime-residue arc unions are
// pairwise disjoint across steps.
struct EtaLadder {
  double alpha;
  std::vector<double> etas;

  std::size_t depth() const { return etas.size(); }
};

inline EtaLadder eta_ladder(double alpha) {
  require(alpha > 0.0 && alpha < 0.5, "ladder requires alpha in (0, 1/2)");
  const double lo = alpha / (1.0 - alpha);
  EtaLadder ladder;
  ladder.alpha = alpha;
  double eta = 0.5 * (lo + 1.0);
  ladder.etas.push_back(eta);
  const double target = 1.0 / alpha;
  while (eta <= target) {
    eta = 2.0 / (1.0 + alpha) * (eta - 0.5 * alpha);
    ladder.etas.push_back(eta);
    require(ladder.etas.size() < 10000, "ladder failed to terminate");
  }
  return ladder;
}

// Closed form for the same ladder; must match the iteration to 1e-12.
inline double eta_closed_form(double alpha, double eta1, std::size_t i) {
  const double fp = alpha / (1.0 - alpha);
  return std::pow(2.0 / (1.0 + alpha), static_cast<double>(i)) * (eta1 - fp) +
         fp;
}

inline bool check_pairwise_disjoint(std::int64_t p, std::int64_t ell1,
                                    std::int64_t ell2, const SAlphaSpec& spec) {
  require(ell1 < ell2, "steps must be distinct and ordered");
  return !sets_overlap(jpl_arcs(p, ell1, spec), jpl_arcs(p, ell2, spec));
}

// sigma(j) = p*j mod ell; the relabeling of residues under dilation by p.
inline std::vector<std::int64_t> residue_permutation(std::int64_t p,
                                                     std::int64_t ell) {
  require(ell >= 1 && p >= 1, "arguments must be positive");
  require(std::gcd(p, ell) == 1, "p must be coprime to ell");
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(ell));
  for (std::int64_t j = 0; j < ell; ++j)
    sigma[static_cast<std::size_t>(j)] = (p % ell) * j % ell;
  return sigma;
}

// Exact maximum, over the circle, of how many of the ell intervals
// {2*pi*j/ell + p*(-delta/ell, delta/ell)} cover a point. Endpoint sweep.
inline std::int64_t covering_multiplicity(std::int64_t p, std::int64_t ell,
                                          const SAlphaSpec& spec) {
  require(ell >= 1 && p >= 1, "arguments must be positive");
  const double width =
      2.0 * static_cast<double>(p) * spec.delta(ell) / static_cast<double>(ell);
  const std::int64_t full_wraps =
      static_cast<std::int64_t>(std::floor(width / two_pi));
  const double rem = width - static_cast<double>(full_wraps) * two_pi;
  // Every point is covered full_wraps times by each interval's whole turns;
  // sweep the leftover arcs of length rem.
  std::vector<std::pair<double, int>> events;
  events.reserve(2 * static_cast<std::size_t>(ell));
  for (std::int64_t j = 0; j < ell; ++j) {
    const double center =
        two_pi * static_cast<double>(j) / static_cast<double>(ell);
    const double s = reduce_mod_2pi(center - 0.5 * rem);
    const double e = s + rem;
    if (e <= two_pi) {
      events.emplace_back(s, +1);
      events.emplace_back(e, -1);
    } else {
      events.emplace_back(s, +1);
      events.emplace_back(two_pi, -1);
      events.emplace_back(0.0, +1);
      events.emplace_back(e - two_pi, -1);
    }
  }
  std::sort(events.begin(), events.end());
  std::int64_t depth = 0, best = 0;
  for (const auto& [t, d] : events) {
    depth += d;
    if (depth > best) best = depth;
  }
  return best + full_wraps * ell;
}

// The covering count certified for the sweep above.
inline std::int64_t covering_bound(std::int64_t p, std::int64_t ell,
                                   const SAlphaSpec& spec) {
  return static_cast<std::int64_t>(
             std::floor(2.0 * static_cast<double>(p) * spec.delta(ell))) +
         2;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p with p^eta_1 < c0 * p, the threshold past which the
// ladder's first rung starts below the small-step range boundary.
inline std::int64_t ladder_prime_threshold(const SAlphaSpec& spec) {
  const EtaLadder ladder = eta_ladder(spec.alpha);
  const double eta1 = ladder.etas.front();
  // p^(eta1 - 1) < c0 with eta1 < 1 means p > c0^(1/(eta1 - 1)).
  const double bound = std::pow(spec.c0, 1.0 / (eta1 - 1.0));
  std::int64_t p = static_cast<std::int64_t>(std::floor(bound)) + 1;
  if (p < 2) p = 2;
  while (!is_prime(p)) ++p;
  return p;
}

}  // namespace rieszarc
