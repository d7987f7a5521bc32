#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "stringy/polynomial.hpp"

namespace stringy {

/// Closed interval [lower, upper] of a poset, optionally with the order
/// reversed (the dual interval).
struct Interval {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool dual = false;

  Interval reversed() const { return {lower, upper, !dual}; }
  std::size_t bottom() const { return dual ? upper : lower; }
  std::size_t top() const { return dual ? lower : upper; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Finite graded poset with a minimum and a maximum, given by covers.
class GradedPoset {
 public:
  /// Ranks are derived from the covers; throws NotGraded unless every cover
  /// raises the rank by exactly one and there is a unique minimum and maximum.
  GradedPoset(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> covers);

  std::size_t size() const { return ranks_.size(); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t rank() const { return ranks_[top_]; }
  std::size_t rank_of(std::size_t x) const { return ranks_[x]; }
  bool leq(std::size_t x, std::size_t y) const { return below_[y][x]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  Interval whole() const { return {bottom_, top_, false}; }
  std::size_t rank_of(const Interval& i) const { return ranks_[i.upper] - ranks_[i.lower]; }
  /// Rank of z inside the interval (measured from the interval's bottom).
  std::size_t rank_in(const Interval& i, std::size_t z) const;
  std::vector<std::size_t> elements(const Interval& i) const;
  Interval from_bottom(const Interval& i, std::size_t z) const;
  Interval to_top(const Interval& i, std::size_t z) const;
  /// All intervals [x, y] with x <= y.
  std::vector<Interval> intervals() const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<bool>> below_;  // below_[y][x] <=> x <= y
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// True iff every interval of positive rank has as many elements of even
/// rank as of odd rank.
bool is_eulerian(const GradedPoset& poset);

/// Graded poset verified to be Eulerian, with memoized G/H/B invariants of
/// its intervals. Memo keys are concrete intervals; no isomorphism test.
class EulerianPoset {
 public:
  /// Throws NotEulerian.
  explicit EulerianPoset(GradedPoset poset);

  const GradedPoset& graded() const { return poset_; }
  Interval whole() const { return poset_.whole(); }

  UnivariatePolynomial g_polynomial(const Interval& i) const;
  UnivariatePolynomial h_polynomial(const Interval& i) const;
  /// B by its defining recursion against G.
  BivariateLaurentPolynomial b_polynomial(const Interval& i) const;
  /// B as the G-convolution sum.
  BivariateLaurentPolynomial b_via_g(const Interval& i) const;
  /// Both G-convolution sums vanish (interval of positive rank).
  bool convolution_inverse_check(const Interval& i) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<Interval, UnivariatePolynomial> g;
    std::map<Interval, BivariateLaurentPolynomial> b;
  };

  GradedPoset poset_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace stringy
