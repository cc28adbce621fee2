#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weakutm {

using Index = std::int64_t;

/// Inclusive range of cell indices. Empty when `first > last`.
struct CellRange {
  Index first = 0;
  Index last = -1;

  [[nodiscard]] constexpr bool empty() const { return first > last; }
  [[nodiscard]] constexpr std::size_t size() const {
    return empty() ? 0 : static_cast<std::size_t>(last - first + 1);
  }
  [[nodiscard]] constexpr bool contains(Index i) const { return i >= first && i <= last; }
  [[nodiscard]] constexpr bool contains(const CellRange& o) const {
    return o.empty() || (!empty() && o.first >= first && o.last <= last);
  }
  friend constexpr bool operator==(const CellRange&, const CellRange&) = default;
};

namespace detail {
constexpr Index floor_mod(Index a, Index m) {
  Index r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace detail

// A bi-infinite, eventually periodic sequence: `left_word` repeated forever to
// the left of a finite materialized center, `right_word` repeated forever to
// its right. The repetition abutting the center on the left ends at the
// center's left edge; the one on the right starts at its right edge. Growth
// always happens in whole repetitions so that this alignment never drifts.
//
// Used both as a Turing machine tape and as a Rule 110 row.
template <typename T>
class WeakTape {
 public:
  WeakTape() = default;

  WeakTape(std::vector<T> left_word, std::vector<T> center, Index origin,
           std::vector<T> right_word)
      : left_(std::move(left_word)),
        right_(std::move(right_word)),
        center_(std::move(center)),
        origin_(origin) {
    if (left_.empty() || right_.empty()) {
      throw std::invalid_argument("WeakTape: background words must be nonempty");
    }
  }

  [[nodiscard]] std::span<const T> left_word() const { return left_; }
  [[nodiscard]] std::span<const T> right_word() const { return right_; }
  [[nodiscard]] std::span<const T> center() const { return center_; }
  [[nodiscard]] Index origin() const { return origin_; }
  /// One past the last materialized index.
  [[nodiscard]] Index end() const { return origin_ + static_cast<Index>(center_.size()); }
  [[nodiscard]] CellRange materialized() const { return {origin_, end() - 1}; }

  [[nodiscard]] T read(Index i) const {
    if (i < origin_) return left_background(i);
    if (i >= end()) return right_background(i);
    return center_[static_cast<std::size_t>(i - origin_)];
  }

  [[nodiscard]] std::vector<T> read(const CellRange& range) const {
    std::vector<T> out;
    out.reserve(range.size());
    for (Index i = range.first; i <= range.last; ++i) out.push_back(read(i));
    return out;
  }

  /// Value the left background would have at `i`, were it extended that far.
  [[nodiscard]] T left_background(Index i) const {
    const auto n = static_cast<Index>(left_.size());
    return left_[static_cast<std::size_t>(detail::floor_mod(i - origin_, n))];
  }
  [[nodiscard]] T right_background(Index i) const {
    const auto n = static_cast<Index>(right_.size());
    return right_[static_cast<std::size_t>(detail::floor_mod(i - end(), n))];
  }

  /// Extends the center by whole background repetitions until it covers `i`.
  void materialize(Index i) {
    if (i < origin_) {
      const auto n = static_cast<Index>(left_.size());
      const Index reps = (origin_ - i + n - 1) / n;
      std::vector<T> grown;
      grown.reserve(static_cast<std::size_t>(reps * n) + center_.size());
      for (Index r = 0; r < reps; ++r) grown.insert(grown.end(), left_.begin(), left_.end());
      grown.insert(grown.end(), center_.begin(), center_.end());
      center_ = std::move(grown);
      origin_ -= reps * n;
    } else if (i >= end()) {
      const auto n = static_cast<Index>(right_.size());
      const Index reps = (i - end()) / n + 1;
      for (Index r = 0; r < reps; ++r) center_.insert(center_.end(), right_.begin(), right_.end());
    }
  }

  void write(Index i, T value) {
    materialize(i);
    center_[static_cast<std::size_t>(i - origin_)] = value;
  }

  /// Span of the center left after stripping every leading repetition equal to
  /// the left word and every trailing repetition equal to the right word.
  /// Outside this span the tape reads as pure background.
  [[nodiscard]] CellRange non_background_span() const {
    const auto nl = left_.size();
    const auto nr = right_.size();
    std::size_t lo = 0;
    std::size_t hi = center_.size();
    while (hi - lo >= nl && std::equal(left_.begin(), left_.end(), center_.begin() + lo)) lo += nl;
    while (hi - lo >= nr && std::equal(right_.begin(), right_.end(), center_.begin() + (hi - nr))) hi -= nr;
    if (lo == hi) return {};
    return {origin_ + static_cast<Index>(lo), origin_ + static_cast<Index>(hi) - 1};
  }

  /// Drops background repetitions from both ends of the center. Reads are
  /// unchanged.
  void trim() {
    const CellRange keep = non_background_span();
    if (keep.empty()) {
      // Keep the seam between the two backgrounds where it is.
      const Index lo = origin_ + static_cast<Index>(leading_background_reps() * left_.size());
      center_.clear();
      origin_ = lo;
      return;
    }
    std::vector<T> kept(center_.begin() + (keep.first - origin_), center_.begin() + (keep.last - origin_ + 1));
    center_ = std::move(kept);
    origin_ = keep.first;
  }

  friend bool operator==(const WeakTape&, const WeakTape&) = default;

 private:
  [[nodiscard]] std::size_t leading_background_reps() const {
    const auto nl = left_.size();
    std::size_t lo = 0;
    while (center_.size() - lo >= nl && std::equal(left_.begin(), left_.end(), center_.begin() + lo)) lo += nl;
    return lo / nl;
  }

  std::vector<T> left_;
  std::vector<T> right_;
  std::vector<T> center_;
  Index origin_ = 0;
};

}  // namespace weakutm
