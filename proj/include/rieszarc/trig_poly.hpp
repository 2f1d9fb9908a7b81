#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "rieszarc/arcs.hpp"
#include "rieszarc/common.hpp"

namespace rieszarc {

// Finitely supported map from integer frequency to complex coefficient.
// Zero coefficients are dropped so the support is always exact.
class TrigPoly {
 public:
  TrigPoly() = default;

  static TrigPoly dirichlet(std::int64_t N) {
    require(N >= 1, "dirichlet length must be a positive integer");
    TrigPoly q;
    const double a = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::int64_t k = 1; k <= N; ++k) q.terms_.emplace(k, cplx(a, 0.0));
    return q;
  }

  void set_coeff(std::int64_t k, cplx a) {
    check_frequency(k);
    if (a == cplx(0.0, 0.0))
      terms_.erase(k);
    else
      terms_[k] = a;
  }

  cplx coeff(std::int64_t k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? cplx(0.0, 0.0) : it->second;
  }

  const std::map<std::int64_t, cplx>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }

  double norm_sq() const {
    KahanSum s;
    for (const auto& [k, a] : terms_) s.add(std::norm(a));
    return s.value();
  }

  TrigPoly dilate(std::int64_t p) const {
    require(p >= 1, "dilation factor must be a positive integer");
    TrigPoly out;
    for (const auto& [k, a] : terms_) {
      check_frequency(k * p);
      out.terms_.emplace(k * p, a);
    }
    return out;
  }

  cplx eval(double t) const {
    cplx s(0.0, 0.0);
    for (const auto& [k, a] : terms_)
      s += a * std::polar(1.0, static_cast<double>(k) * t);
    return s;
  }

  static void check_frequency(std::int64_t k) {
    if (k > max_abs_frequency || k < -max_abs_frequency)
      throw invalid_input("frequency magnitude exceeds 2^46 precision cap");
  }

 private:
  std::map<std::int64_t, cplx> terms_;
};

// Fourier coefficient of the indicator of A under normalized Haar measure:
// fhat_A(n) = (1/2pi) * integral over A of e^{-int} dt. Each arc contributes
// e^{-i n mid} * sin(n * half) / (pi * n), a form free of endpoint
// cancellation; n = 0 gives mu(A).
inline cplx fourier_coeff_indicator(const ArcSet& A, std::int64_t n) {
  TrigPoly::check_frequency(n);
  if (n == 0) return {A.mu(), 0.0};
  const double dn = static_cast<double>(n);
  KahanSum re, im;
  for (const Arc& a : A.arcs()) {
    const double mid = 0.5 * (a.start + a.end);
    const double half = 0.5 * a.length();
    const cplx term = std::polar(std::sin(dn * half), -dn * mid);
    re.add(term.real());
    im.add(term.imag());
  }
  const double scale = 1.0 / (two_pi * 0.5 * dn);
  return {re.value() * scale, im.value() * scale};
}

// fhat_A(step * d) for d = 0..count-1. Uses a per-arc phase recurrence with
// periodic exact re-anchoring, so large batches cost one complex multiply per
// value instead of a sincos pair.
inline std::vector<cplx> fourier_coeffs_progression(const ArcSet& A,
                                                    std::int64_t step,
                                                    std::size_t count) {
  require(step >= 1, "progression step must be positive");
  if (count == 0) return {};
  TrigPoly::check_frequency(step * static_cast<std::int64_t>(count - 1));
  std::vector<double> acc_re(count, 0.0), acc_im(count, 0.0);
  const double ds = static_cast<double>(step);
  constexpr std::size_t anchor_every = 16;
  for (const Arc& a : A.arcs()) {
    const double mid = 0.5 * (a.start + a.end);
    const double half = 0.5 * a.length();
    // z_d = e^{-i step d mid}, u_d = e^{i step d half}; sin from imag(u).
    const cplx zstep = std::polar(1.0, -ds * mid);
    const cplx ustep = std::polar(1.0, ds * half);
    cplx z(1.0, 0.0), u(1.0, 0.0);
    for (std::size_t d = 1; d < count; ++d) {
      if (d % anchor_every == 0) {
        const double dd = ds * static_cast<double>(d);
        z = std::polar(1.0, -dd * mid);
        u = std::polar(1.0, dd * half);
      } else {
        z *= zstep;
        u *= ustep;
      }
      const cplx term = z * u.imag();
      acc_re[d] += term.real();
      acc_im[d] += term.imag();
    }
  }
  std::vector<cplx> out(count);
  out[0] = {A.mu(), 0.0};
  for (std::size_t d = 1; d < count; ++d) {
    const double scale = 1.0 / (two_pi * 0.5 * ds * static_cast<double>(d));
    out[d] = {acc_re[d] * scale, acc_im[d] * scale};
  }
  return out;
}

namespace detail {

// Correlation over frequency differences: corr[d] = sum over pairs with
// k' - k = d of a_k * conj(a_k'). Conjugate-symmetric, so only d >= 0 kept.
inline std::map<std::int64_t, cplx> difference_correlation(const TrigPoly& Q) {
  std::vector<std::int64_t> ks;
  std::vector<cplx> as;
  ks.reserve(Q.support_size());
  for (const auto& [k, a] : Q.terms()) {
    ks.push_back(k);
    as.push_back(a);
  }
  std::map<std::int64_t, cplx> corr;
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i; j < ks.size(); ++j)
      corr[ks[j] - ks[i]] += as[i] * std::conj(as[j]);
  return corr;
}

}  // namespace detail

// Exact energy of Q over A under normalized measure:
//   integral over A of |Q|^2 dmu = sum_{k,k'} a_k conj(a_k') fhat_A(k'-k).
// Closed form throughout; no quadrature.
inline double energy(const TrigPoly& Q, const ArcSet& A) {
  if (Q.support_size() == 0 || A.is_empty()) return 0.0;
  std::vector<std::int64_t> ks;
  std::vector<cplx> as;
  ks.reserve(Q.support_size());
  for (const auto& [k, a] : Q.terms()) {
    ks.push_back(k);
    as.push_back(a);
  }
  const std::size_t m = ks.size();
  bool progression = m >= 2;
  const std::int64_t g0 = m >= 2 ? ks[1] - ks[0] : 1;
  for (std::size_t i = 1; progression && i + 1 < m; ++i)
    progression = (ks[i + 1] - ks[i] == g0);
  if (progression) {
    std::vector<cplx> corr(m, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j)
        corr[j - i] += as[i] * std::conj(as[j]);
    auto table = fourier_coeffs_progression(A, g0, m);
    double total = corr[0].real() * A.mu();
    for (std::size_t d = 1; d < m; ++d)
      total += 2.0 * (corr[d] * table[d]).real();
    return total;
  }
  auto corr = detail::difference_correlation(Q);
  double total = corr.at(0).real() * A.mu();
  for (const auto& [d, c] : corr) {
    if (d == 0) continue;
    total += 2.0 * (c * fourier_coeff_indicator(A, d)).real();
  }
  return total;
}

}  // namespace rieszarc
