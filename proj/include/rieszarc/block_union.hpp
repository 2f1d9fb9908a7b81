#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rieszarc/arcs.hpp"
#include "rieszarc/common.hpp"
#include "rieszarc/gram.hpp"

namespace rieszarc {

enum class SearchMode { linear, coarse };

inline SearchMode parse_search_mode(const std::string& s) {
  if (s == "linear") return SearchMode::linear;
  if (s == "coarse") return SearchMode::coarse;
  throw invalid_input("unknown search mode: " + s);
}

inline FrequencySet translate(const FrequencySet& F, std::int64_t M) {
  std::vector<std::int64_t> out;
  out.reserve(F.freqs.size());
  for (std::int64_t f : F.freqs) out.push_back(f + M);
  return FrequencySet::from_vector(std::move(out));
}

inline bool frequency_sets_collide(const FrequencySet& a,
                                   const FrequencySet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.freqs.size() && j < b.freqs.size()) {
    if (a.freqs[i] == b.freqs[j]) return true;
    if (a.freqs[i] < b.freqs[j]) ++i; else ++j;
  }
  return false;
}

inline FrequencySet merge_frequency_sets(const FrequencySet& a,
                                         const FrequencySet& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.freqs.size() + b.freqs.size());
  std::merge(a.freqs.begin(), a.freqs.end(), b.freqs.begin(), b.freqs.end(),
             std::back_inserter(out));
  return FrequencySet::from_vector(std::move(out));
}

// Smallest translation that both avoids collisions by construction and is
// certain to, should the bound recover at large separation: past this every
// translate of B sits strictly to the right of A.
inline std::int64_t separation_stride(const FrequencySet& A,
                                      const FrequencySet& B) {
  return A.freqs.back() - B.freqs.front() + 1;
}

// Find M in [1, M_max] with A(A1 union (M + A2)) >= gamma_prime over S.
// linear scans every M; coarse probes multiples of the separation stride and
// then bisects down, re-verifying the bound at every probe it trusts. Both
// modes are deterministic; coarse may return a larger M than linear when
// intermediate offsets also qualify.
inline std::int64_t find_translation(const FrequencySet& A1,
                                     const FrequencySet& A2, const ArcSet& S,
                                     double gamma_prime, std::int64_t M_max,
                                     SearchMode mode,
                                     std::size_t gram_cap = default_gram_cap) {
  require(gamma_prime > 0.0, "gamma_prime must be positive");
  require(M_max >= 1, "M_max must be positive");
  const double a1 = riesz_bounds(A1, S, gram_cap).A;
  const double a2 = riesz_bounds(A2, S, gram_cap).A;
  require(gamma_prime < std::min(a1, a2),
          "gamma_prime must sit strictly below both block bounds");

  auto qualifies = [&](std::int64_t M) {
    const FrequencySet shifted = translate(A2, M);
    if (frequency_sets_collide(A1, shifted)) return false;
    const FrequencySet joint = merge_frequency_sets(A1, shifted);
    return riesz_bounds(joint, S, gram_cap).A >= gamma_prime;
  };

  if (mode == SearchMode::linear) {
    for (std::int64_t M = 1; M <= M_max; ++M)
      if (qualifies(M)) return M;
    throw search_exhausted("no translation up to " + std::to_string(M_max) +
                           " reaches the requested bound");
  }

  const std::int64_t stride = std::max<std::int64_t>(1, separation_stride(A1, A2));
  std::int64_t lo = 0;  // known non-qualifying (or untested below hi)
  std::int64_t hi = -1;
  for (std::int64_t M = stride; M <= M_max; M += stride) {
    if (qualifies(M)) { hi = M; break; }
    lo = M;
  }
  if (hi < 0 && stride > M_max && qualifies(M_max)) hi = M_max;
  if (hi < 0)
    throw search_exhausted("no probed translation up to " +
                           std::to_string(M_max) +
                           " reaches the requested bound");
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (qualifies(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

struct BlockSchedule {
  std::vector<FrequencySet> blocks;
  std::vector<double> block_bounds;  // A of each block alone over S
  double gamma = 0.0;                // min of block_bounds
  std::vector<double> targets;       // gamma/2 * (1 + 1/K), K = 1..n
};

inline BlockSchedule make_schedule(std::vector<FrequencySet> blocks,
                                   const ArcSet& S,
                                   std::size_t gram_cap = default_gram_cap) {
  require(!blocks.empty(), "schedule needs at least one block");
  BlockSchedule sched;
  sched.blocks = std::move(blocks);
  sched.block_bounds.reserve(sched.blocks.size());
  for (const FrequencySet& b : sched.blocks)
    sched.block_bounds.push_back(riesz_bounds(b, S, gram_cap).A);
  sched.gamma =
      *std::min_element(sched.block_bounds.begin(), sched.block_bounds.end());
  require(sched.gamma > 0.0, "every block must have a positive lower bound");
  for (std::size_t K = 1; K <= sched.blocks.size(); ++K)
    sched.targets.push_back(sched.gamma / 2.0 *
                            (1.0 + 1.0 / static_cast<double>(K)));
  return sched;
}

struct Assembly {
  FrequencySet lambda;
  std::vector<std::int64_t> translations;  // one per block; first is 0
  double bound = 0.0;   // re-verified A of the full union
  double target = 0.0;  // gamma/2 * (1 + 1/n)
  SearchMode mode = SearchMode::linear;
};

// Greedy union: each new block is translated until the running lower bound
// stays above the next rung gamma/2 * (1 + 1/(K+1)). The ladder never drops
// below gamma/2, so the final set keeps a uniform margin.
inline Assembly assemble_lambda(const BlockSchedule& sched, const ArcSet& S,
                                std::int64_t M_max, SearchMode mode,
                                std::size_t gram_cap = default_gram_cap) {
  require(!sched.blocks.empty(), "schedule needs at least one block");
  Assembly out;
  out.mode = mode;
  out.lambda = sched.blocks.front();
  out.translations.push_back(0);
  for (std::size_t k = 1; k < sched.blocks.size(); ++k) {
    const double target = sched.targets[k];  // rung for k+1 blocks
    const std::int64_t M = find_translation(out.lambda, sched.blocks[k], S,
                                            target, M_max, mode, gram_cap);
    out.lambda = merge_frequency_sets(out.lambda, translate(sched.blocks[k], M));
    out.translations.push_back(M);
  }
  out.target = sched.targets.back();
  out.bound = riesz_bounds(out.lambda, S, gram_cap).A;
  require(out.bound >= out.target - 1e-9,
          "assembled union fell below its target bound");
  return out;
}

}  // namespace rieszarc
