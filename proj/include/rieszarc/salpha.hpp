#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rieszarc/arcs.hpp"
#include "rieszarc/common.hpp"

namespace rieszarc {

// Parameters of the sparse circle set: the circle minus, for every step
// ell = 1..L, a neighborhood of half-width delta(ell)/ell around each
// rational point 2*pi*j/ell, where delta(ell) = c0 * ell^(-1/alpha).
//
// The removed lengths must stay inside the eps budget:
//   sum_{ell >= 1} 2 * delta(ell) = 2 * c0 * zeta(1/alpha) < eps.
struct SAlphaSpec {
  double alpha;
  double eps;
  double c0;
  std::int64_t L;

  SAlphaSpec(double alpha_, double eps_, double c0_, std::int64_t L_)
      : alpha(alpha_), eps(eps_), c0(c0_), L(L_) {
    require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
    require(eps > 0.0 && eps < 0.25, "eps must lie in (0, 1/4)");
    require(c0 > 0.0 && c0 < eps, "c0 must lie in (0, eps)");
    require(L >= 0, "truncation level must be nonnegative");
    require(2.0 * c0 * zeta_real(1.0 / alpha) < eps,
            "removal budget violated: 2 * c0 * zeta(1/alpha) must stay below eps");
  }

  // Deterministic default: spend 99% of the eps budget.
  static SAlphaSpec with_auto_c0(double alpha, double eps, std::int64_t L) {
    require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
    require(eps > 0.0 && eps < 0.25, "eps must lie in (0, 1/4)");
    double c0 = 0.99 * eps / (2.0 * zeta_real(1.0 / alpha));
    if (c0 >= eps) c0 = 0.5 * eps;  // unreachable (zeta >= 1), kept as a guard
    return SAlphaSpec(alpha, eps, c0, L);
  }

  double delta(std::int64_t ell) const {
    require(ell >= 1, "step must be a positive integer");
    return c0 * std::pow(static_cast<double>(ell), -1.0 / alpha);
  }

  // Total length (radians) of the components discarded beyond level L.
  double tail_bound() const { return 2.0 * c0 * zeta_tail(1.0 / alpha, L); }
};

enum class ComponentVariant { full, coprime };

// The level-ell component: arcs of half-width delta(ell)/ell centered at
// 2*pi*j/ell. The coprime variant keeps only gcd(j, ell) = 1 (all residues
// at ell = 1, matching the convention that the two variants agree there).
inline ArcSet build_component(const SAlphaSpec& spec, std::int64_t ell,
                              ComponentVariant variant,
                              std::size_t arc_cap = default_arc_cap) {
  require(ell >= 1, "step must be a positive integer");
  const double half = spec.delta(ell) / static_cast<double>(ell);
  std::vector<std::pair<double, double>> raw;
  raw.reserve(static_cast<std::size_t>(ell));
  for (std::int64_t j = 0; j < ell; ++j) {
    if (variant == ComponentVariant::coprime && ell > 1 &&
        std::gcd(j, ell) != 1)
      continue;
    const double center = two_pi * static_cast<double>(j) / static_cast<double>(ell);
    raw.emplace_back(center - half, center + half);
  }
  return ArcSet::from_raw(raw, arc_cap);
}

// Union of the full components for ell = 1..L.
inline ArcSet removed_union(const SAlphaSpec& spec,
                            std::size_t arc_cap = default_arc_cap) {
  // Total raw arc count is L*(L+1)/2 plus wrap splits; check before building.
  const double projected = 0.5 * static_cast<double>(spec.L) *
                               static_cast<double>(spec.L + 1) +
                           static_cast<double>(spec.L);
  if (projected > static_cast<double>(arc_cap))
    throw resource_limit("arc count cap exceeded (arc_cap = " +
                         std::to_string(arc_cap) + ")");
  std::vector<std::pair<double, double>> raw;
  raw.reserve(static_cast<std::size_t>(projected));
  for (std::int64_t ell = 1; ell <= spec.L; ++ell) {
    const double half = spec.delta(ell) / static_cast<double>(ell);
    const double step = two_pi / static_cast<double>(ell);
    for (std::int64_t j = 0; j < ell; ++j) {
      const double center = step * static_cast<double>(j);
      raw.emplace_back(center - half, center + half);
    }
  }
  return ArcSet::from_raw(raw, arc_cap);
}

// The truncated sparse set: circle minus removed_union.
inline ArcSet build_S_alpha(const SAlphaSpec& spec,
                            std::size_t arc_cap = default_arc_cap) {
  if (spec.L == 0) return ArcSet::full_circle();
  return removed_union(spec, arc_cap).complement();
}

}  // namespace rieszarc
