#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cxp/quaternion.hpp"

namespace cxp {

/// Tolerance-aware lookup of fixed-size real tuples.
///
/// Keys are coordinates rounded to multiples of `step`. A coordinate that
/// sits within a quarter step of a rounding boundary is also probed in the
/// neighbouring cell, so two points closer than a quarter step (per
/// coordinate) are always found. Matches are confirmed by max-norm
/// distance <= step.
template <std::size_t N>
class QuantizedIndex {
 public:
  using Point = std::array<double, N>;
  using Key = std::array<std::int64_t, N>;

  explicit QuantizedIndex(double step) : step_(step) {}

  std::optional<std::size_t> find(const Point& p) const {
    std::optional<std::size_t> hit;
    for_each_candidate_key(p, [&](const Key& key) {
      if (hit) return;
      auto it = cells_.find(key);
      if (it == cells_.end()) return;
      for (std::size_t id : it->second) {
        if (close(points_[id], p)) {
          hit = id;
          return;
        }
      }
    });
    return hit;
  }

  /// Returns (id, inserted).
  std::pair<std::size_t, bool> insert(const Point& p) {
    if (auto id = find(p)) return {*id, false};
    const std::size_t id = points_.size();
    points_.push_back(p);
    cells_[round_key(p)].push_back(id);
    return {id, true};
  }

  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t id) const { return points_[id]; }

 private:
  Key round_key(const Point& p) const {
    Key k{};
    for (std::size_t i = 0; i < N; ++i) k[i] = static_cast<std::int64_t>(std::llround(p[i] / step_));
    return k;
  }

  template <typename Fn>
  void for_each_candidate_key(const Point& p, Fn&& fn) const {
    Key base = round_key(p);
    std::array<std::int64_t, N> alt{};
    std::array<bool, N> has_alt{};
    std::size_t n_alt = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const double scaled = p[i] / step_;
      const double frac = scaled - std::floor(scaled);
      if (std::abs(frac - 0.5) < 0.25) {
        has_alt[i] = true;
        alt[i] = base[i] == static_cast<std::int64_t>(std::floor(scaled))
                     ? base[i] + 1
                     : base[i] - 1;
        ++n_alt;
      }
    }
    fn(base);
    if (n_alt == 0) return;
    // Enumerate every combination of base/alternate on the flagged axes.
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < N; ++i)
      if (has_alt[i]) axes.push_back(i);
    const std::size_t combos = std::size_t{1} << axes.size();
    for (std::size_t mask = 1; mask < combos; ++mask) {
      Key k = base;
      for (std::size_t b = 0; b < axes.size(); ++b)
        if (mask & (std::size_t{1} << b)) k[axes[b]] = alt[axes[b]];
      fn(k);
    }
  }

  bool close(const Point& a, const Point& b) const {
    for (std::size_t i = 0; i < N; ++i)
      if (std::abs(a[i] - b[i]) > step_) return false;
    return true;
  }

  double step_;
  std::vector<Point> points_;
  std::map<Key, std::vector<std::size_t>> cells_;
};

inline std::array<double, 3> vector_key(const Quaternion& v) { return {v.q1, v.q2, v.q3}; }

/// Deduplicating set of 3D vectors in insertion order.
class VectorSet {
 public:
  explicit VectorSet(double eps) : index_(eps) {}

  std::pair<std::size_t, bool> insert(const Quaternion& v) {
    auto r = index_.insert(vector_key(v));
    if (r.second) items_.push_back(v);
    return r;
  }
  std::optional<std::size_t> find(const Quaternion& v) const { return index_.find(vector_key(v)); }

  const std::vector<Quaternion>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  QuantizedIndex<3> index_;
  std::vector<Quaternion> items_;
};

}  // namespace cxp
