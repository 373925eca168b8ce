#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/error.hpp"
#include "posetlab/incidence.hpp"
#include "posetlab/order.hpp"
#include "posetlab/scalar.hpp"

namespace posetlab {

/// Function P -> scalars with finite support, stored as the nonzero entries
/// only. Keys iterate in canonical element order.
template <Poset P>
class FiniteSupportFunction {
 public:
  using element_type = element_t<P>;

  explicit FiniteSupportFunction(P poset) : poset_(std::move(poset)) {}

  static FiniteSupportFunction point_mass(P poset, const element_type& at, Scalar value = Scalar(1)) {
    FiniteSupportFunction f(std::move(poset));
    f.set(at, std::move(value));
    return f;
  }

  const P& poset() const noexcept { return poset_; }
  const std::map<element_type, Scalar>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t support_size() const noexcept { return entries_.size(); }

  std::vector<element_type> support() const {
    std::vector<element_type> out;
    out.reserve(entries_.size());
    for (const auto& [x, v] : entries_) out.push_back(x);
    return out;
  }

  Scalar operator()(const element_type& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  /// Assigns f(x) = value; a zero value removes x from the support.
  void set(const element_type& x, Scalar value) {
    validate(poset_, x);
    if (value.is_zero()) {
      entries_.erase(x);
    } else {
      entries_.insert_or_assign(x, std::move(value));
    }
  }

  FiniteSupportFunction& operator+=(const FiniteSupportFunction& other) {
    check_same(other);
    for (const auto& [x, v] : other.entries_) set(x, (*this)(x) + v);
    return *this;
  }

  FiniteSupportFunction scaled(const Scalar& c) const {
    FiniteSupportFunction out(poset_);
    if (c.is_zero()) return out;
    for (const auto& [x, v] : entries_) out.entries_.emplace(x, v * c);
    return out;
  }

  friend FiniteSupportFunction operator+(FiniteSupportFunction a, const FiniteSupportFunction& b) { return a += b; }

  friend bool operator==(const FiniteSupportFunction& a, const FiniteSupportFunction& b) {
    return a.poset_ == b.poset_ && a.entries_ == b.entries_;
  }

 private:
  void check_same(const FiniteSupportFunction& other) const {
    if (!(poset_ == other.poset_)) throw error(errc::poset_mismatch, "functions live on different posets");
  }

  P poset_;
  std::map<element_type, Scalar> entries_;
};

/// Point function given only by an evaluation rule; the result of a transform
/// generally has infinite support and is never materialized globally.
template <Poset P>
class EvaluableFunction {
 public:
  using element_type = element_t<P>;
  using Rule = std::function<Scalar(const element_type&)>;

  EvaluableFunction(P poset, Rule rule) : poset_(std::move(poset)), rule_(std::move(rule)) {}

  const P& poset() const noexcept { return poset_; }

  Scalar operator()(const element_type& y) const {
    validate(poset_, y);
    return rule_(y);
  }

 private:
  P poset_;
  Rule rule_;
};

/// y -> sum over x <= y in supp(h) of a(x, y) h(x).
template <Poset P>
EvaluableFunction<P> alpha_transform(const FiniteSupportFunction<P>& h, const IntervalFunction<P>& a) {
  if (!(h.poset() == a.poset())) throw error(errc::poset_mismatch, "function and interval function differ in poset");
  return EvaluableFunction<P>(h.poset(), [h, a](const element_t<P>& y) {
    Scalar sum;
    for (const auto& [x, v] : h.entries()) {
      if (h.poset().leq(x, y)) sum += a(x, y) * v;
    }
    return sum;
  });
}

/// g(y) = sum_{x <= y} f(x).
template <Poset P>
EvaluableFunction<P> zeta_transform(const FiniteSupportFunction<P>& f) {
  return EvaluableFunction<P>(f.poset(), [f](const element_t<P>& y) {
    Scalar sum;
    for (const auto& [x, v] : f.entries()) {
      if (f.poset().leq(x, y)) sum += v;
    }
    return sum;
  });
}

/// f(y) = sum_{x <= y} mu(x, y) g(x).
template <Poset P>
EvaluableFunction<P> mobius_inversion(const FiniteSupportFunction<P>& g) {
  return alpha_transform(g, IntervalFunction<P>::mobius(g.poset()));
}

/// Restriction of `e` to the window, keeping nonzero values only.
template <Poset P>
FiniteSupportFunction<P> materialize(const EvaluableFunction<P>& e, const Window<element_t<P>>& w,
                                     std::size_t cap = kDefaultElementCap) {
  FiniteSupportFunction<P> out(e.poset());
  for (const auto& y : enumerate_window(e.poset(), w, cap)) out.set(y, e(y));
  return out;
}

}  // namespace posetlab
