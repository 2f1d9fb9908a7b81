#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "rieszarc/multiplicity.hpp"
#include "rieszarc/salpha.hpp"

using namespace rieszarc;
using test_helpers::random_arcset;

namespace {
const double pi = 0.5 * two_pi;
}

TEST_CASE("profiles of reference sets") {
  SECTION("full circle folds to the constant ell") {
    for (std::int64_t ell : {1, 2, 5, 9}) {
      const StepProfile p = nu_profile(ArcSet::full_circle(), ell);
      REQUIRE(p.values == std::vector<std::int64_t>{ell});
      REQUIRE(p.breakpoints == std::vector<double>{0.0});
      REQUIRE(p.min_value() == ell);
      REQUIRE_FALSE(p.has_zero_set());
      REQUIRE(p.integral() == Catch::Approx(two_pi).margin(1e-12));
    }
  }
  SECTION("half circle at step 2 is constant one") {
    const StepProfile p = nu_profile(ArcSet::from_raw({{0.0, pi}}), 2);
    REQUIRE(p.values == std::vector<std::int64_t>{1});
    REQUIRE(p.integral() == Catch::Approx(pi).margin(1e-12));
    REQUIRE_FALSE(p.has_zero_set());
  }
  SECTION("quarter circle at step 2 vanishes on half the window") {
    const StepProfile p = nu_profile(ArcSet::from_raw({{0.0, 0.5 * pi}}), 2);
    REQUIRE(p.has_zero_set());
    REQUIRE(p.min_value() == 0);
    REQUIRE(p.value_at(0.1) == 1);
    REQUIRE(p.value_at(0.5 * pi + 0.1) == 0);
    REQUIRE(p.measure_below(1.0) == Catch::Approx(0.5 * pi).margin(1e-12));
  }
  SECTION("component of the same step folds onto its own hole") {
    const SAlphaSpec spec(0.5, 0.2, 0.05, 0);
    const std::int64_t ell = 4;
    const ArcSet I = build_component(spec, ell, ComponentVariant::full);
    const StepProfile p = nu_profile(I, ell);
    const double w = spec.delta(ell) / static_cast<double>(ell);
    // nu = ell near both ends of the window (the folded hole), 0 between.
    REQUIRE(p.value_at(0.5 * w) == ell);
    REQUIRE(p.value_at(p.period() - 0.5 * w) == ell);
    REQUIRE(p.value_at(0.5 * p.period()) == 0);
    REQUIRE(p.integral() == Catch::Approx(I.measure()).margin(1e-12));
  }
  SECTION("exact union of period cells has no dust segments") {
    const ArcSet S = ArcSet::from_raw({{0.0, 0.5 * pi}, {pi, 1.5 * pi}});
    const StepProfile p = nu_profile(S, 2);
    REQUIRE(p.breakpoints.size() == 2);
    REQUIRE(p.values == std::vector<std::int64_t>{2, 0});
    REQUIRE(p.breakpoints[1] == Catch::Approx(0.5 * pi).margin(1e-15));
  }
}

TEST_CASE("profile integral equals the set measure") {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const ArcSet S = random_arcset(rng, 7);
    for (std::int64_t ell : {1, 2, 3, 5, 8}) {
      const StepProfile p = nu_profile(S, ell);
      REQUIRE(p.integral() == Catch::Approx(S.measure()).margin(1e-10));
    }
  }
}

TEST_CASE("profile values stay within range and complement to ell") {
  Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const ArcSet S = random_arcset(rng);
    for (std::int64_t ell : {2, 3, 6}) {
      const StepProfile ps = nu_profile(S, ell);
      const StepProfile pc = nu_profile(S.complement(), ell);
      for (std::int64_t v : ps.values) {
        REQUIRE(v >= 0);
        REQUIRE(v <= ell);
      }
      // Pointwise: nu_S + nu_complement = ell. Sample midpoints of the
      // merged segment list to stay away from breakpoints.
      std::vector<double> probes;
      for (std::size_t i = 0; i < ps.breakpoints.size(); ++i)
        probes.push_back(0.5 * (ps.breakpoints[i] + ps.segment_end(i)));
      for (std::size_t i = 0; i < pc.breakpoints.size(); ++i)
        probes.push_back(0.5 * (pc.breakpoints[i] + pc.segment_end(i)));
      for (double s : probes) {
        // Skip probes that sit within rounding of either set's breakpoints.
        bool near_edge = false;
        for (double b : ps.breakpoints)
          if (std::abs(s - b) < 1e-9) near_edge = true;
        for (double b : pc.breakpoints)
          if (std::abs(s - b) < 1e-9) near_edge = true;
        if (near_edge) continue;
        REQUIRE(ps.value_at(s) + pc.value_at(s) == ell);
      }
    }
  }
}

TEST_CASE("sublevel measure honors the strict inequality") {
  const ArcSet half = ArcSet::from_raw({{0.0, pi}});
  // nu = 1 everywhere at step 2; threshold 1.2 catches it, 1.0 does not.
  REQUIRE(sublevel_measure(half, 2, 0.6) == Catch::Approx(two_pi).margin(1e-12));
  REQUIRE(sublevel_measure(half, 2, 0.5) == 0.0);
  REQUIRE(sublevel_measure(ArcSet::full_circle(), 7, 1.0) == 0.0);
  REQUIRE_THROWS_AS(sublevel_measure(half, 2, 0.0), invalid_input);
  REQUIRE_THROWS_AS(sublevel_measure(half, 2, 1.5), invalid_input);
}

TEST_CASE("multiplicity condition drives a verified lower bound") {
  SECTION("full circle, exact bound one") {
    const auto rows =
        multiplicity_bound_check(ArcSet::full_circle(), 0.5, 0.9, 1.0, {3});
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].condition_holds);
    REQUIRE(rows[0].sublevel == 0.0);
    REQUIRE(rows[0].N == 9);
    REQUIRE(rows[0].bound == Catch::Approx(1.0).margin(0));
    REQUIRE(rows[0].A == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(rows[0].verified);
  }
  SECTION("half circle at alpha one: condition refuses to fire") {
    const auto rows = multiplicity_bound_check(
        ArcSet::from_raw({{0.0, pi}}), 1.0, 0.9, 0.5, {3});
    REQUIRE_FALSE(rows[0].condition_holds);
    REQUIRE_FALSE(rows[0].verified);
    REQUIRE(rows[0].sublevel == Catch::Approx(pi).margin(1e-12));
  }
  SECTION("constructed comb with a known sublevel set") {
    // Remove a notch of width w from every step-8 cell: nu drops to zero
    // exactly on a set of fold-measure w.
    const std::int64_t ell = 8;
    const double period = two_pi / 8.0;
    const double w = 1e-4;
    std::vector<std::pair<double, double>> removed;
    for (std::int64_t j = 0; j < ell; ++j)
      removed.push_back({j * period + 0.3 * period,
                         j * period + 0.3 * period + w});
    const ArcSet S = ArcSet::from_raw(removed).complement();
    const auto rows = multiplicity_bound_check(S, 0.5, 0.9, 0.5, {ell});
    REQUIRE(rows[0].condition_holds);
    REQUIRE(rows[0].sublevel == Catch::Approx(8.0 * w).margin(1e-12));
    REQUIRE(rows[0].N == 64);
    REQUIRE(rows[0].verified);
  }
  SECTION("argument validation") {
    REQUIRE_THROWS_AS(
        multiplicity_bound_check(ArcSet::full_circle(), 0.5, 1.5, 0.5, {2}),
        invalid_input);
    REQUIRE_THROWS_AS(
        multiplicity_bound_check(ArcSet::full_circle(), 2.0, 0.9, 0.5, {2}),
        invalid_input);
  }
}

TEST_CASE("lattice criterion distinguishes covering from vanishing") {
  SECTION("half circle: criterion true, bound an exact half") {
    const ArcSet half = ArcSet::from_raw({{0.0, pi}});
    for (std::int64_t K : {4, 8, 16, 32}) {
      const LatticeCheck lc = lattice_riesz_check(half, 2, K);
      REQUIRE(lc.criterion);
      REQUIRE(lc.A_numeric == Catch::Approx(0.5).margin(1e-12));
    }
  }
  SECTION("quarter circle: criterion false, bound decays with K") {
    const ArcSet quarter = ArcSet::from_raw({{0.0, 0.5 * pi}});
    double prev = 1e9;
    for (std::int64_t K : {4, 8, 16}) {
      const LatticeCheck lc = lattice_riesz_check(quarter, 2, K);
      REQUIRE_FALSE(lc.criterion);
      REQUIRE(lc.A_numeric < prev);
      prev = lc.A_numeric;
    }
  }
  SECTION("full circle: orthonormal at every truncation") {
    const LatticeCheck lc = lattice_riesz_check(ArcSet::full_circle(), 5, 6);
    REQUIRE(lc.criterion);
    REQUIRE(lc.A_numeric == Catch::Approx(1.0).margin(1e-12));
  }
}
