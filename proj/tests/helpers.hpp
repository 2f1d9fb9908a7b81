#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "rieszarc/arcs.hpp"
#include "rieszarc/common.hpp"
#include "rieszarc/trig_poly.hpp"

namespace test_helpers {

using rieszarc::ArcSet;
using rieszarc::Rng;
using rieszarc::TrigPoly;
using rieszarc::two_pi;

// Random normalized arc set with 1..max_arcs well-separated arcs.
inline ArcSet random_arcset(Rng& rng, int max_arcs = 6) {
  const int n = 1 + static_cast<int>(rng.uniform01() * max_arcs);
  std::vector<std::pair<double, double>> raw;
  for (int i = 0; i < n; ++i) {
    const double s = rng.uniform01() * two_pi;
    const double len = 1e-3 + rng.uniform01() * (two_pi / n - 2e-3);
    raw.emplace_back(s, s + len);
  }
  return ArcSet::from_raw(raw);
}

// Random polynomial with support inside [-kmax, kmax].
inline TrigPoly random_poly(Rng& rng, int terms, int kmax) {
  TrigPoly q;
  for (int i = 0; i < terms; ++i) {
    const auto k = static_cast<std::int64_t>(rng.uniform01() * (2 * kmax + 1)) -
                   kmax;
    q.set_coeff(k, rng.complex_gaussian());
  }
  return q;
}

// Composite Simpson integration of |Q|^2 over A under normalized measure;
// the independent cross-check for the closed-form energy.
inline double energy_quadrature(const TrigPoly& q, const ArcSet& A,
                                int intervals_per_arc = 2048) {
  double total = 0.0;
  for (const rieszarc::Arc& a : A.arcs()) {
    const double h = a.length() / intervals_per_arc;
    double sum = std::norm(q.eval(a.start)) + std::norm(q.eval(a.end));
    for (int i = 1; i < intervals_per_arc; ++i)
      sum += (i % 2 ? 4.0 : 2.0) * std::norm(q.eval(a.start + i * h));
    total += sum * h / 3.0;
  }
  return total / two_pi;
}

// Same idea for one indicator Fourier coefficient.
inline rieszarc::cplx fourier_quadrature(const ArcSet& A, std::int64_t n,
                                         int intervals_per_arc = 4096) {
  rieszarc::cplx total(0.0, 0.0);
  const double dn = static_cast<double>(n);
  for (const rieszarc::Arc& a : A.arcs()) {
    const double h = a.length() / intervals_per_arc;
    auto f = [dn](double t) { return std::polar(1.0, -dn * t); };
    rieszarc::cplx sum = f(a.start) + f(a.end);
    for (int i = 1; i < intervals_per_arc; ++i)
      sum += (i % 2 ? 4.0 : 2.0) * f(a.start + i * h);
    total += sum * (h / 3.0);
  }
  return total / two_pi;
}

}  // namespace test_helpers
