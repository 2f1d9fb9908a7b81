#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "rieszarc/common.hpp"

namespace rieszarc {

// Half-open arc [start, end) with 0 <= start < end <= 2*pi. A set that
// crosses zero is stored as two arcs; the full circle is [0, 2*pi).
struct Arc {
  double start;
  double end;
  double length() const { return end - start; }
};

inline double reduce_mod_2pi(double t) {
  double r = std::fmod(t, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

// Normalized finite union of arcs: sorted, pairwise disjoint, no arc crossing
// 2*pi, adjacent gaps above merge_tol. This representation is canonical, so
// value comparison is endpoint comparison.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet empty_set() { return ArcSet(); }

  static ArcSet full_circle() {
    ArcSet s;
    s.arcs_.push_back({0.0, two_pi});
    return s;
  }

  // Accepts raw (start, end) pairs with positive directed length end - start
  // (after adding 2*pi when end < start), at most 2*pi each. Splits at the
  // wrap point, sorts, fuses overlaps and sub-tolerance gaps.
  static ArcSet from_raw(const std::vector<std::pair<double, double>>& raw,
                         std::size_t arc_cap = default_arc_cap) {
    std::vector<Arc> pieces;
    pieces.reserve(raw.size() + 8);
    for (const auto& [s, e] : raw) {
      require(std::isfinite(s) && std::isfinite(e),
              "arc endpoints must be finite");
      double len = e - s;
      if (len < 0.0) len += two_pi;
      require(len > 0.0, "arc must have positive length (end != start mod 2pi)");
      require(len <= two_pi + merge_tol, "arc longer than the full circle");
      if (len >= two_pi) return full_circle();
      const double s0 = reduce_mod_2pi(s);
      const double e0 = s0 + len;
      if (e0 <= two_pi) {
        pieces.push_back({s0, e0});
      } else {
        pieces.push_back({s0, two_pi});
        pieces.push_back({0.0, e0 - two_pi});
      }
      if (pieces.size() > arc_cap)
        throw resource_limit("arc count cap exceeded (arc_cap = " +
                             std::to_string(arc_cap) + ")");
    }
    ArcSet out;
    out.arcs_ = merge_pieces(std::move(pieces));
    return out;
  }

  // Adopts arcs verbatim after checking the canonical invariant, so data that
  // was exported from an ArcSet re-imports bit-identically.
  static ArcSet from_canonical(std::vector<Arc> arcs) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Arc& a = arcs[i];
      require(std::isfinite(a.start) && std::isfinite(a.end),
              "arc endpoints must be finite");
      require(a.start >= 0.0 && a.start < a.end && a.end <= two_pi,
              "canonical arc must satisfy 0 <= start < end <= 2pi");
      if (i > 0)
        require(a.start > arcs[i - 1].end + merge_tol,
                "canonical arcs must be sorted with gaps above merge_tol");
    }
    ArcSet out;
    out.arcs_ = std::move(arcs);
    return out;
  }

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool is_empty() const { return arcs_.empty(); }

  bool is_full_circle() const {
    return arcs_.size() == 1 && arcs_[0].start == 0.0 && arcs_[0].end == two_pi;
  }

  double measure() const {
    KahanSum s;
    for (const Arc& a : arcs_) s.add(a.length());
    return s.value();
  }

  double mu() const { return measure() / two_pi; }

  bool contains(double t) const {
    if (arcs_.empty()) return false;
    const double x = reduce_mod_2pi(t);
    // Last arc with start <= x.
    auto it = std::upper_bound(
        arcs_.begin(), arcs_.end(), x,
        [](double v, const Arc& a) { return v < a.start; });
    if (it == arcs_.begin()) return false;
    --it;
    return x < it->end;
  }

  ArcSet complement() const {
    ArcSet out;
    if (arcs_.empty()) return full_circle();
    if (is_full_circle()) return out;
    auto push = [&out](double s, double e) {
      if (e - s > merge_tol) out.arcs_.push_back({s, e});
    };
    push(0.0, arcs_.front().start);
    for (std::size_t i = 0; i + 1 < arcs_.size(); ++i)
      push(arcs_[i].end, arcs_[i + 1].start);
    push(arcs_.back().end, two_pi);
    return out;
  }

  bool operator==(const ArcSet& other) const {
    if (arcs_.size() != other.arcs_.size()) return false;
    for (std::size_t i = 0; i < arcs_.size(); ++i)
      if (arcs_[i].start != other.arcs_[i].start ||
          arcs_[i].end != other.arcs_[i].end)
        return false;
    return true;
  }

  friend ArcSet set_union(const ArcSet& a, const ArcSet& b);
  friend ArcSet set_intersection(const ArcSet& a, const ArcSet& b);

 private:
  static std::vector<Arc> merge_pieces(std::vector<Arc> pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const Arc& x, const Arc& y) {
      return x.start < y.start || (x.start == y.start && x.end < y.end);
    });
    std::vector<Arc> out;
    out.reserve(pieces.size());
    for (const Arc& p : pieces) {
      if (!out.empty() && p.start <= out.back().end + merge_tol) {
        if (p.end > out.back().end) out.back().end = p.end;
      } else {
        out.push_back(p);
      }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Arc& a) { return a.length() <= merge_tol; }),
              out.end());
    return out;
  }

  std::vector<Arc> arcs_;
};

inline ArcSet set_union(const ArcSet& a, const ArcSet& b) {
  std::vector<Arc> pieces;
  pieces.reserve(a.size() + b.size());
  std::merge(a.arcs().begin(), a.arcs().end(), b.arcs().begin(), b.arcs().end(),
             std::back_inserter(pieces),
             [](const Arc& x, const Arc& y) { return x.start < y.start; });
  ArcSet out;
  out.arcs_ = ArcSet::merge_pieces(std::move(pieces));
  return out;
}

inline ArcSet set_intersection(const ArcSet& a, const ArcSet& b) {
  ArcSet out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Arc& x = a.arcs()[i];
    const Arc& y = b.arcs()[j];
    const double s = std::max(x.start, y.start);
    const double e = std::min(x.end, y.end);
    if (e - s > merge_tol) out.arcs_.push_back({s, e});
    if (x.end < y.end)
      ++i;
    else
      ++j;
  }
  return out;
}

inline ArcSet set_difference(const ArcSet& a, const ArcSet& b) {
  return set_intersection(a, b.complement());
}

// True when the sets share a point; cheaper than building the intersection.
inline bool sets_overlap(const ArcSet& a, const ArcSet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Arc& x = a.arcs()[i];
    const Arc& y = b.arcs()[j];
    const double s = std::max(x.start, y.start);
    const double e = std::min(x.end, y.end);
    if (e - s > merge_tol) return true;
    if (x.end < y.end)
      ++i;
    else
      ++j;
  }
  return false;
}

inline bool is_subset(const ArcSet& inner, const ArcSet& outer,
                      double tol = merge_tol) {
  // Every inner arc must be covered by one outer arc up to tol.
  std::size_t j = 0;
  for (const Arc& a : inner.arcs()) {
    while (j < outer.size() && outer.arcs()[j].end < a.start + tol) ++j;
    if (j >= outer.size()) return false;
    const Arc& o = outer.arcs()[j];
    if (o.start > a.start + tol || o.end < a.end - tol) return false;
  }
  return true;
}

// Endpoint equality within tol, arc by arc.
inline bool approx_equal(const ArcSet& a, const ArcSet& b,
                         double tol = merge_tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.arcs()[i].start - b.arcs()[i].start) > tol) return false;
    if (std::abs(a.arcs()[i].end - b.arcs()[i].end) > tol) return false;
  }
  return true;
}

// Exact image of A under t -> p*t mod 2*pi. Endpoint products are taken in
// extended precision so the reduction keeps absolute error near 1e-15.
inline ArcSet dilate_mod(const ArcSet& A, std::int64_t p,
                         std::size_t arc_cap = default_arc_cap) {
  require(p >= 1, "dilation factor must be a positive integer");
  std::vector<std::pair<double, double>> raw;
  raw.reserve(A.size());
  const long double lp = static_cast<long double>(p);
  const long double l2pi = 6.283185307179586476925286766559L;
  for (const Arc& a : A.arcs()) {
    const long double len = lp * static_cast<long double>(a.length());
    if (len >= l2pi) return ArcSet::full_circle();
    long double s = std::fmod(lp * static_cast<long double>(a.start), l2pi);
    if (s < 0.0L) s += l2pi;
    raw.emplace_back(static_cast<double>(s), static_cast<double>(s + len));
    if (raw.size() > arc_cap)
      throw resource_limit("arc count cap exceeded (arc_cap = " +
                           std::to_string(arc_cap) + ")");
  }
  return ArcSet::from_raw(raw, arc_cap);
}

}  // namespace rieszarc
