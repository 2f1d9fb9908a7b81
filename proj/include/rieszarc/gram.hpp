#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "rieszarc/arcs.hpp"
#include "rieszarc/common.hpp"
#include "rieszarc/salpha.hpp"
#include "rieszarc/trig_poly.hpp"

namespace rieszarc {

// Strictly increasing list of distinct integer frequencies.
struct FrequencySet {
  std::vector<std::int64_t> freqs;

  static FrequencySet from_vector(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    require(!v.empty(), "frequency set must be nonempty");
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      require(v[i] != v[i + 1], "frequency set must not contain duplicates");
    TrigPoly::check_frequency(v.front());
    TrigPoly::check_frequency(v.back());
    return FrequencySet{std::move(v)};
  }

  std::size_t size() const { return freqs.size(); }
};

// {M + ell, M + 2*ell, ..., M + N*ell}.
inline FrequencySet progression(std::int64_t M, std::int64_t ell,
                                std::int64_t N) {
  require(ell >= 1, "progression step must be positive");
  require(N >= 1, "progression length must be positive");
  std::vector<std::int64_t> v;
  v.reserve(static_cast<std::size_t>(N));
  for (std::int64_t k = 1; k <= N; ++k) v.push_back(M + k * ell);
  TrigPoly::check_frequency(v.front());
  TrigPoly::check_frequency(v.back());
  return FrequencySet{std::move(v)};
}

// Gram matrix of the exponential system over S: entries[j][k] =
// int_S e^{i(lambda_k - lambda_j)t} dmu, oriented so that the quadratic form
// a*Ga equals energy(sum a_j e^{i lambda_j t}, S) for every complex a.
// Hermitian with constant diagonal mu(S).
struct GramMatrix {
  Eigen::MatrixXcd m;
  double mu_s = 0.0;

  std::size_t dim() const { return static_cast<std::size_t>(m.rows()); }
};

inline GramMatrix gram(const FrequencySet& L, const ArcSet& S,
                       std::size_t gram_cap = default_gram_cap) {
  const std::size_t n = L.size();
  require(n >= 1, "frequency set must be nonempty");
  if (n > gram_cap)
    throw resource_limit("gram dimension cap exceeded (gram_cap = " +
                         std::to_string(gram_cap) + ")");
  // Distinct positive differences, then one indicator coefficient per
  // difference. A batched progression table covers them when the spread of
  // differences is comparable to their count (true for all block spectra).
  std::map<std::int64_t, cplx> coeff;
  std::int64_t g = 0, dmax = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      const std::int64_t d = L.freqs[k] - L.freqs[j];
      coeff.emplace(d, cplx(0.0, 0.0));
    }
  for (const auto& [d, c] : coeff) {
    g = gcd_ll(g, d);
    if (d > dmax) dmax = d;
  }
  if (dmax > 0) {
    const std::int64_t span = dmax / g + 1;
    if (span <= 4 * static_cast<std::int64_t>(coeff.size()) + 64) {
      auto table =
          fourier_coeffs_progression(S, g, static_cast<std::size_t>(span));
      for (auto& [d, c] : coeff) c = table[static_cast<std::size_t>(d / g)];
    } else {
      for (auto& [d, c] : coeff) c = fourier_coeff_indicator(S, d);
    }
  }
  GramMatrix G;
  G.mu_s = S.mu();
  G.m.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    G.m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = G.mu_s;
    for (std::size_t k = j + 1; k < n; ++k) {
      // coeff holds the forward transform at lambda_k - lambda_j > 0; the
      // (j, k) entry needs its conjugate to keep a*Ga = energy.
      const cplx v = coeff.at(L.freqs[k] - L.freqs[j]);
      G.m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          std::conj(v);
      G.m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return G;
}

inline void check_hermitian(const GramMatrix& G, double tol = 1e-10) {
  const Eigen::MatrixXcd diff = G.m - G.m.adjoint();
  if (diff.cwiseAbs().maxCoeff() > tol)
    throw invalid_input("matrix is not Hermitian within 1e-10");
}

struct ExtremalEigs {
  double lambda_min;
  double lambda_max;
};

inline ExtremalEigs extremal_eigs(const GramMatrix& G) {
  check_hermitian(G);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(G.m,
                                                         Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, "eigensolver failed to converge");
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

// Eigenvector of the smallest eigenvalue; used by the Rayleigh cross-checks.
inline std::vector<cplx> min_eigenvector(const GramMatrix& G) {
  check_hermitian(G);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(G.m);
  require(solver.info() == Eigen::Success, "eigensolver failed to converge");
  const auto col = solver.eigenvectors().col(0);
  std::vector<cplx> v(G.dim());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = col(static_cast<Eigen::Index>(i));
  return v;
}

struct RieszBounds {
  double A;
  double B;
  std::size_t dim;
  double mu_S;
};

// Sharp two-sided bounds of the exponential system E(L) in L^2(S, dmu):
// the extremal Gram eigenvalues.
inline RieszBounds riesz_bounds(const FrequencySet& L, const ArcSet& S,
                                std::size_t gram_cap = default_gram_cap) {
  require(S.mu() > 0.0, "set must have positive measure");
  const GramMatrix G = gram(L, S, gram_cap);
  const ExtremalEigs e = extremal_eigs(G);
  return {e.lambda_min, e.lambda_max, G.dim(), G.mu_s};
}

inline double rayleigh(const GramMatrix& G, const std::vector<cplx>& a) {
  require(a.size() == G.dim(), "vector dimension must match the matrix");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = a[i];
  const double denom = v.squaredNorm();
  require(denom > 0.0, "rayleigh quotient of the zero vector");
  const cplx num = (v.adjoint() * (G.m * v))(0);
  return num.real() / denom;
}

// Minimum Rayleigh quotient over seeded random unit vectors. Approaches the
// smallest eigenvalue from above; the consistency oracle for every Gram.
inline double min_rayleigh_sample(const GramMatrix& G, std::size_t samples,
                                  std::uint64_t seed) {
  Rng rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    const double r = rayleigh(G, rng.unit_vector(G.dim()));
    if (r < best) best = r;
  }
  return best;
}

struct WitnessEnergy {
  std::int64_t ell;      // progression step, ceil(N^beta)
  double energy;         // witness energy over the truncated sparse set
  double envelope;       // energy over circle minus the level-ell component
  double analytic_bound; // 4 / (pi * delta(ell) * N), the decay envelope
};

// Uniform-coefficient progression witness: Dirichlet coefficients on
// {ell, 2*ell, ..., N*ell} with ell = max(1, ceil(N^beta)), integrated over
// the truncated sparse set. Decays like 1/(delta(ell) N) as N grows, which
// certifies that progressions of step O(N^beta), beta < alpha, cannot keep a
// uniform lower bound.
inline WitnessEnergy dirichlet_witness_energy(const SAlphaSpec& spec,
                                              double beta, std::int64_t N,
                                              std::size_t arc_cap = default_arc_cap) {
  require(beta >= 0.0 && beta < spec.alpha, "beta must lie in [0, alpha)");
  require(N >= 1, "N must be positive");
  const double raw = std::pow(static_cast<double>(N), beta);
  std::int64_t ell = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
  if (ell < 1) ell = 1;
  TrigPoly witness = TrigPoly::dirichlet(N).dilate(ell);
  const ArcSet S = build_S_alpha(spec, arc_cap);
  const ArcSet envelope_set =
      build_component(spec, ell, ComponentVariant::full, arc_cap).complement();
  WitnessEnergy w;
  w.ell = ell;
  w.energy = energy(witness, S);
  w.envelope = energy(witness, envelope_set);
  w.analytic_bound =
      4.0 / (0.5 * two_pi * spec.delta(ell) * static_cast<double>(N));
  return w;
}

}  // namespace rieszarc
