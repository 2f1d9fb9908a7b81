#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "rieszarc/salpha.hpp"
#include "rieszarc/trig_poly.hpp"

using namespace rieszarc;
using test_helpers::energy_quadrature;
using test_helpers::fourier_quadrature;
using test_helpers::random_arcset;
using test_helpers::random_poly;

namespace {
const double pi = 0.5 * two_pi;
}

TEST_CASE("dirichlet coefficients are uniform and unit-norm") {
  const TrigPoly p1 = TrigPoly::dirichlet(1);
  REQUIRE(p1.support_size() == 1);
  REQUIRE(p1.coeff(1) == cplx(1.0, 0.0));

  const TrigPoly p4 = TrigPoly::dirichlet(4);
  REQUIRE(p4.support_size() == 4);
  for (std::int64_t k = 1; k <= 4; ++k)
    REQUIRE(p4.coeff(k) == cplx(0.5, 0.0));
  REQUIRE(p4.norm_sq() == Catch::Approx(1.0).margin(1e-15));
  REQUIRE(p4.coeff(0) == cplx(0.0, 0.0));
  REQUIRE(p4.coeff(5) == cplx(0.0, 0.0));

  // All phases align at t = 0: |P_2(0)|^2 = 2.
  REQUIRE(std::norm(TrigPoly::dirichlet(2).eval(0.0)) ==
          Catch::Approx(2.0).margin(1e-14));

  REQUIRE_THROWS_AS(TrigPoly::dirichlet(0), invalid_input);
}

TEST_CASE("coefficient editing keeps the support exact") {
  TrigPoly q;
  q.set_coeff(3, cplx(1.0, -2.0));
  q.set_coeff(-5, cplx(0.5, 0.0));
  REQUIRE(q.support_size() == 2);
  q.set_coeff(3, cplx(0.0, 0.0));
  REQUIRE(q.support_size() == 1);
  REQUIRE(q.coeff(3) == cplx(0.0, 0.0));
  REQUIRE_THROWS_AS(q.set_coeff((std::int64_t{1} << 47), cplx(1.0, 0.0)),
                    invalid_input);
}

TEST_CASE("dilation scales frequencies and preserves coefficients") {
  TrigPoly q;
  q.set_coeff(1, cplx(1.0, 0.0));
  const TrigPoly d = q.dilate(3);
  REQUIRE(d.support_size() == 1);
  REQUIRE(d.coeff(3) == cplx(1.0, 0.0));

  const TrigPoly d2 = TrigPoly::dirichlet(2).dilate(5);
  REQUIRE(d2.coeff(5).real() == Catch::Approx(1.0 / std::sqrt(2.0)));
  REQUIRE(d2.coeff(10).real() == Catch::Approx(1.0 / std::sqrt(2.0)));
  REQUIRE(d2.norm_sq() == Catch::Approx(1.0).margin(1e-15));

  Rng rng(5);
  const TrigPoly r = random_poly(rng, 10, 20);
  REQUIRE(r.dilate(7).support_size() == r.support_size());
  REQUIRE(r.dilate(7).norm_sq() == Catch::Approx(r.norm_sq()).margin(1e-15));
  REQUIRE_THROWS_AS(r.dilate(0), invalid_input);
}

TEST_CASE("pointwise evaluation") {
  REQUIRE(TrigPoly::dirichlet(9).eval(0.0).real() ==
          Catch::Approx(3.0).margin(1e-13));
  // Dirichlet kernel modulus bound away from the peak.
  REQUIRE(std::abs(TrigPoly::dirichlet(8).eval(pi)) <=
          1.0 / std::sqrt(8.0) + 1e-12);
  TrigPoly c;
  c.set_coeff(0, cplx(1.0, 0.0));
  REQUIRE(c.eval(1.234) == cplx(1.0, 0.0));
  // Modulus symmetry under t -> 2pi - t for real uniform coefficients.
  for (double t : {0.3, 1.1, 2.9}) {
    REQUIRE(std::abs(TrigPoly::dirichlet(6).eval(t)) ==
            Catch::Approx(std::abs(TrigPoly::dirichlet(6).eval(two_pi - t)))
                .margin(1e-12));
  }
}

TEST_CASE("indicator coefficients: closed form against known values") {
  SECTION("full circle") {
    const ArcSet full = ArcSet::full_circle();
    REQUIRE(fourier_coeff_indicator(full, 0) == cplx(1.0, 0.0));
    for (std::int64_t n : {1, 2, 7, -3})
      REQUIRE(std::abs(fourier_coeff_indicator(full, n)) < 1e-15);
  }
  SECTION("half circle") {
    const ArcSet half = ArcSet::from_raw({{0.0, pi}});
    const cplx f1 = fourier_coeff_indicator(half, 1);
    REQUIRE(f1.real() == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(f1.imag() == Catch::Approx(-1.0 / pi).margin(1e-15));
    REQUIRE(std::abs(fourier_coeff_indicator(half, 2)) < 1e-15);
    REQUIRE(fourier_coeff_indicator(half, 0).real() == Catch::Approx(0.5));
  }
  SECTION("magnitude never exceeds the measure") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const ArcSet a = random_arcset(rng);
      for (std::int64_t n = -10; n <= 10; ++n)
        REQUIRE(std::abs(fourier_coeff_indicator(a, n)) <= a.mu() + 1e-14);
    }
  }
  SECTION("quadrature cross-check") {
    Rng rng(19);
    for (int trial = 0; trial < 5; ++trial) {
      const ArcSet a = random_arcset(rng, 4);
      for (std::int64_t n : {1, 2, 5}) {
        const cplx closed = fourier_coeff_indicator(a, n);
        const cplx quad = fourier_quadrature(a, n);
        REQUIRE(std::abs(closed - quad) < 1e-8);
      }
    }
  }
  SECTION("conjugate symmetry") {
    Rng rng(23);
    const ArcSet a = random_arcset(rng);
    for (std::int64_t n = 1; n <= 8; ++n)
      REQUIRE(std::abs(fourier_coeff_indicator(a, n) -
                       std::conj(fourier_coeff_indicator(a, -n))) < 1e-15);
  }
}

TEST_CASE("component coefficients vanish off the step lattice") {
  const SAlphaSpec spec(0.5, 0.2, 0.05, 0);
  for (std::int64_t ell : {2, 3, 7, 12}) {
    const ArcSet I = build_component(spec, ell, ComponentVariant::full);
    for (std::int64_t n = -3 * ell; n <= 3 * ell; ++n) {
      const double mag = std::abs(fourier_coeff_indicator(I, n));
      if (n % ell == 0 && n != 0) {
        // On-lattice coefficients carry the actual mass.
        REQUIRE(mag > 1e-8);
      } else if (n != 0) {
        REQUIRE(mag < 1e-12);
      }
    }
  }
}

TEST_CASE("batched progression coefficients match the single evaluations") {
  Rng rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    const ArcSet a = random_arcset(rng);
    for (std::int64_t step : {1, 3, 17}) {
      const auto table = fourier_coeffs_progression(a, step, 200);
      REQUIRE(table.size() == 200);
      for (std::size_t d = 0; d < 200; ++d) {
        const cplx direct =
            fourier_coeff_indicator(a, step * static_cast<std::int64_t>(d));
        REQUIRE(std::abs(table[d] - direct) < 1e-13);
      }
    }
  }
}

TEST_CASE("energy: exact values and quadrature agreement") {
  SECTION("orthonormality on the full circle") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const TrigPoly q = random_poly(rng, 20, 40);
      if (q.support_size() == 0) continue;
      REQUIRE(energy(q, ArcSet::full_circle()) ==
              Catch::Approx(q.norm_sq()).margin(1e-12));
    }
  }
  SECTION("single frequency sees only the measure") {
    Rng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
      const ArcSet a = random_arcset(rng);
      TrigPoly q;
      q.set_coeff(5, cplx(1.0, 0.0));
      REQUIRE(energy(q, a) == Catch::Approx(a.mu()).margin(1e-15));
    }
  }
  SECTION("even progression over the half circle is orthogonal") {
    // Frequencies {2,4,6}: all differences even, indicator coefficients 0.
    const TrigPoly q = TrigPoly::dirichlet(3).dilate(2);
    REQUIRE(energy(q, ArcSet::from_raw({{0.0, pi}})) ==
            Catch::Approx(0.5).margin(1e-14));
  }
  SECTION("additivity over complements") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      const ArcSet a = random_arcset(rng);
      const TrigPoly q = random_poly(rng, 8, 15);
      if (q.support_size() == 0) continue;
      REQUIRE(energy(q, a) + energy(q, a.complement()) ==
              Catch::Approx(q.norm_sq()).margin(1e-10));
    }
  }
  SECTION("progression fast path agrees with quadrature") {
    Rng rng(43);
    const ArcSet a = random_arcset(rng, 3);
    const TrigPoly q = TrigPoly::dirichlet(6).dilate(3);  // step-3 progression
    REQUIRE(energy(q, a) == Catch::Approx(energy_quadrature(q, a)).margin(1e-5));
  }
  SECTION("irregular support agrees with quadrature") {
    Rng rng(47);
    for (int trial = 0; trial < 3; ++trial) {
      const ArcSet a = random_arcset(rng, 3);
      TrigPoly q;
      q.set_coeff(-7, rng.complex_gaussian());
      q.set_coeff(0, rng.complex_gaussian());
      q.set_coeff(2, rng.complex_gaussian());
      q.set_coeff(11, rng.complex_gaussian());
      REQUIRE(energy(q, a) ==
              Catch::Approx(energy_quadrature(q, a)).margin(1e-5));
    }
  }
  SECTION("nonnegativity and the Cauchy-Schwarz shape bound") {
    Rng rng(53);
    for (int trial = 0; trial < 50; ++trial) {
      const ArcSet a = random_arcset(rng);
      const TrigPoly q = random_poly(rng, 6, 30);
      if (q.support_size() == 0) continue;
      const double e = energy(q, a);
      REQUIRE(e >= -1e-12);
      double l1 = 0.0;
      for (const auto& [k, c] : q.terms()) l1 += std::abs(c);
      REQUIRE(e <= a.mu() * l1 * l1 + 1e-10);
    }
  }
}
