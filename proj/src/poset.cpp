#include "stringy/poset.hpp"

#include <algorithm>

#include "stringy/error.hpp"

namespace stringy {

GradedPoset::GradedPoset(std::size_t size,
                         std::vector<std::pair<std::size_t, std::size_t>> covers)
    : covers_(std::move(covers)) {
  if (size == 0) throw Error(ErrorKind::NotGraded, "empty poset");
  std::vector<std::vector<std::size_t>> up(size), down(size);
  for (auto [a, b] : covers_) {
    if (a >= size || b >= size || a == b)
      throw Error(ErrorKind::InvalidArgument, "cover relation out of range");
    up[a].push_back(b);
    down[b].push_back(a);
  }
  std::vector<std::size_t> minima, maxima;
  for (std::size_t x = 0; x < size; ++x) {
    if (down[x].empty()) minima.push_back(x);
    if (up[x].empty()) maxima.push_back(x);
  }
  if (minima.size() != 1 || maxima.size() != 1)
    throw Error(ErrorKind::NotGraded, "poset needs a unique minimum and maximum");
  bottom_ = minima.front();
  top_ = maxima.front();

  // Topological order from the bottom; ranks by longest chain.
  std::vector<std::size_t> indegree(size), order;
  for (std::size_t x = 0; x < size; ++x) indegree[x] = down[x].size();
  order.push_back(bottom_);
  ranks_.assign(size, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t x = order[i];
    for (auto y : up[x]) {
      ranks_[y] = std::max(ranks_[y], ranks_[x] + 1);
      if (--indegree[y] == 0) order.push_back(y);
    }
  }
  if (order.size() != size) throw Error(ErrorKind::NotGraded, "cover relation has a cycle");
  for (auto [a, b] : covers_)
    if (ranks_[b] != ranks_[a] + 1)
      throw Error(ErrorKind::NotGraded, "maximal chains of different lengths");

  below_.assign(size, std::vector<bool>(size, false));
  for (auto x : order) {
    below_[x][x] = true;
    for (auto w : down[x])
      for (std::size_t z = 0; z < size; ++z)
        if (below_[w][z]) below_[x][z] = true;
  }
}

std::size_t GradedPoset::rank_in(const Interval& i, std::size_t z) const {
  return i.dual ? ranks_[i.upper] - ranks_[z] : ranks_[z] - ranks_[i.lower];
}

std::vector<std::size_t> GradedPoset::elements(const Interval& i) const {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < size(); ++z)
    if (leq(i.lower, z) && leq(z, i.upper)) out.push_back(z);
  return out;
}

Interval GradedPoset::from_bottom(const Interval& i, std::size_t z) const {
  return i.dual ? Interval{z, i.upper, true} : Interval{i.lower, z, false};
}

Interval GradedPoset::to_top(const Interval& i, std::size_t z) const {
  return i.dual ? Interval{i.lower, z, true} : Interval{z, i.upper, false};
}

std::vector<Interval> GradedPoset::intervals() const {
  std::vector<Interval> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (leq(x, y)) out.push_back({x, y, false});
  return out;
}

bool is_eulerian(const GradedPoset& poset) {
  for (const auto& i : poset.intervals()) {
    if (i.lower == i.upper) continue;
    long balance = 0;
    for (auto z : poset.elements(i)) balance += (poset.rank_of(z) % 2 == 0) ? 1 : -1;
    if (balance != 0) return false;
  }
  return true;
}

EulerianPoset::EulerianPoset(GradedPoset poset)
    : poset_(std::move(poset)), memo_(std::make_shared<Memo>()) {
  if (!is_eulerian(poset_)) throw Error(ErrorKind::NotEulerian, "poset is not Eulerian");
}

namespace {

UnivariatePolynomial t_minus_one_power(std::size_t n) {
  return UnivariatePolynomial::binomial_power(-1, 1, static_cast<int>(n));
}

BivariateLaurentPolynomial in_uv(const UnivariatePolynomial& p) {
  return BivariateLaurentPolynomial::from_univariate(p, {1, 1, 1});
}

BivariateLaurentPolynomial in_v_over_u(const UnivariatePolynomial& p) {
  return BivariateLaurentPolynomial::from_univariate(p, {1, -1, 1});
}

}  // namespace

UnivariatePolynomial EulerianPoset::h_polynomial(const Interval& i) const {
  const std::size_t r = poset_.rank_of(i);
  if (r == 0) return 1;
  UnivariatePolynomial h;
  for (auto z : poset_.elements(i)) {
    const std::size_t rho = poset_.rank_in(i, z);
    if (rho == 0) continue;
    h += t_minus_one_power(rho - 1) * g_polynomial(poset_.to_top(i, z));
  }
  return h;
}

UnivariatePolynomial EulerianPoset::g_polynomial(const Interval& i) const {
  const std::size_t r = poset_.rank_of(i);
  if (r == 0) return 1;
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->g.find(i);
    if (it != memo_->g.end()) return it->second;
  }
  UnivariatePolynomial g =
      (UnivariatePolynomial::binomial_power(1, -1, 1) * h_polynomial(i))
          .truncate_below(static_cast<long>(r), 2);
  std::lock_guard lock(memo_->mutex);
  memo_->g.emplace(i, g);
  return g;
}

BivariateLaurentPolynomial EulerianPoset::b_polynomial(const Interval& i) const {
  const std::size_t r = poset_.rank_of(i);
  if (r == 0) return 1;
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->b.find(i);
    if (it != memo_->b.end()) return it->second;
  }
  BivariateLaurentPolynomial b = in_uv(g_polynomial(i));
  for (auto z : poset_.elements(i)) {
    if (z == i.top()) continue;
    const std::size_t rho = poset_.rank_in(i, z);
    b -= (b_polynomial(poset_.from_bottom(i, z)) *
          in_v_over_u(g_polynomial(poset_.to_top(i, z))))
             .shifted(static_cast<int>(r - rho), 0);
  }
  std::lock_guard lock(memo_->mutex);
  memo_->b.emplace(i, b);
  return b;
}

BivariateLaurentPolynomial EulerianPoset::b_via_g(const Interval& i) const {
  const std::size_t r = poset_.rank_of(i);
  BivariateLaurentPolynomial b;
  for (auto z : poset_.elements(i)) {
    const std::size_t rho = poset_.rank_in(i, z);
    const int e = static_cast<int>(r - rho);
    BivariateLaurentPolynomial term =
        (in_v_over_u(g_polynomial(poset_.to_top(i, z).reversed())) *
         in_uv(g_polynomial(poset_.from_bottom(i, z))))
            .shifted(e, 0);
    if (e % 2 == 0) b += term;
    else b -= term;
  }
  return b;
}

bool EulerianPoset::convolution_inverse_check(const Interval& i) const {
  if (poset_.rank_of(i) == 0) return true;
  const std::size_t r = poset_.rank_of(i);
  UnivariatePolynomial left, right;
  for (auto z : poset_.elements(i)) {
    const std::size_t rho = poset_.rank_in(i, z);
    const Interval lower = poset_.from_bottom(i, z);
    const Interval upper = poset_.to_top(i, z);
    UnivariatePolynomial a = g_polynomial(lower.reversed()) * g_polynomial(upper);
    UnivariatePolynomial b = g_polynomial(lower) * g_polynomial(upper.reversed());
    if (rho % 2 == 0) left += a;
    else left -= a;
    if ((r - rho) % 2 == 0) right += b;
    else right -= b;
  }
  return left.is_zero() && right.is_zero();
}

}  // namespace stringy
