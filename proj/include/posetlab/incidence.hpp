#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetlab/error.hpp"
#include "posetlab/number_theory.hpp"
#include "posetlab/order.hpp"
#include "posetlab/scalar.hpp"

namespace posetlab {

enum class FunctionKind { delta, zeta, mobius, custom, convolution, inverse };

constexpr std::string_view to_string(FunctionKind kind) noexcept {
  switch (kind) {
    case FunctionKind::delta: return "delta";
    case FunctionKind::zeta: return "zeta";
    case FunctionKind::mobius: return "mobius";
    case FunctionKind::custom: return "custom";
    case FunctionKind::convolution: return "convolution";
    case FunctionKind::inverse: return "inverse";
  }
  return "unknown";
}

/// Element of the incidence algebra: a scalar for every interval [x, y].
///
/// Values are computed lazily and memoized per instance, keyed by the pair
/// of canonical encodings. Copies share the memo. The memo is guarded by a
/// mutex, so one instance may be evaluated from several threads; the lock is
/// never held while a value is being computed.
template <Poset P>
class IntervalFunction {
 public:
  using element_type = element_t<P>;
  using Rule = std::function<Scalar(const element_type&, const element_type&)>;

  static IntervalFunction delta(P poset) { return IntervalFunction(make(std::move(poset), FunctionKind::delta, "delta")); }
  static IntervalFunction zeta(P poset) { return IntervalFunction(make(std::move(poset), FunctionKind::zeta, "zeta")); }
  static IntervalFunction mobius(P poset) { return IntervalFunction(make(std::move(poset), FunctionKind::mobius, "mobius")); }

  /// `rule` is assumed total on intervals; it is only called with x <= y.
  static IntervalFunction custom(P poset, Rule rule, std::string name = "custom") {
    auto node = make(std::move(poset), FunctionKind::custom, std::move(name));
    node->rule = std::move(rule);
    return IntervalFunction(std::move(node));
  }

  static IntervalFunction convolution(const IntervalFunction& left, const IntervalFunction& right) {
    if (!(left.poset() == right.poset())) throw error(errc::poset_mismatch, "convolution operands live on different posets");
    auto node = make(left.poset(), FunctionKind::convolution, "(" + left.name() + "*" + right.name() + ")");
    node->left = left.node_;
    node->right = right.node_;
    return IntervalFunction(std::move(node));
  }

  static IntervalFunction inverse(const IntervalFunction& inner) {
    auto node = make(inner.poset(), FunctionKind::inverse, "inv(" + inner.name() + ")");
    node->left = inner.node_;
    return IntervalFunction(std::move(node));
  }

  const P& poset() const noexcept { return node_->poset; }
  FunctionKind kind() const noexcept { return node_->kind; }
  const std::string& name() const noexcept { return node_->name; }

  /// Value on [x, y]; NotComparable unless x <= y.
  Scalar operator()(const element_type& x, const element_type& y) const {
    if (!leq(poset(), x, y)) {
      throw error(errc::not_comparable, poset().format(x) + " </= " + poset().format(y));
    }
    return node_->eval(x, y);
  }

  Scalar evaluate(const element_type& x, const element_type& y) const { return (*this)(x, y); }

  std::size_t memo_size() const {
    std::lock_guard lock(node_->mutex);
    return node_->memo.size();
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<element_type, element_type>& key) const noexcept {
      std::size_t seed = ElementHash{}(key.first);
      detail::hash_combine(seed, ElementHash{}(key.second));
      return seed;
    }
  };

  struct Node {
    P poset;
    FunctionKind kind;
    std::string name;
    Rule rule;
    std::shared_ptr<Node> left;
    std::shared_ptr<Node> right;
    mutable std::mutex mutex;
    mutable std::unordered_map<std::pair<element_type, element_type>, Scalar, PairHash> memo;

    Node(P p, FunctionKind k, std::string n) : poset(std::move(p)), kind(k), name(std::move(n)) {}

    std::optional<Scalar> lookup(const element_type& x, const element_type& y) const {
      std::lock_guard lock(mutex);
      auto it = memo.find({x, y});
      if (it == memo.end()) return std::nullopt;
      return it->second;
    }

    void store(const element_type& x, const element_type& y, const Scalar& v) const {
      std::lock_guard lock(mutex);
      memo.emplace(std::pair{x, y}, v);
    }

    // Precondition: x <= y.
    Scalar eval(const element_type& x, const element_type& y) const {
      switch (kind) {
        case FunctionKind::delta: return x == y ? Scalar(1) : Scalar(0);
        case FunctionKind::zeta: return Scalar(1);
        default: break;
      }
      if (auto hit = lookup(x, y)) return *hit;
      switch (kind) {
        case FunctionKind::custom: {
          Scalar v = rule(x, y);
          store(x, y, v);
          return v;
        }
        case FunctionKind::convolution: {
          Scalar sum;
          for (const auto& z : poset.interval_elements(x, y, kDefaultElementCap)) {
            sum += left->eval(x, z) * right->eval(z, y);
          }
          store(x, y, sum);
          return sum;
        }
        case FunctionKind::mobius:
        case FunctionKind::inverse: return solve_row(x, y);
        default: break;
      }
      return Scalar(0);
    }

    // Fills this function's row x over [x, y] in canonical order, where each
    // entry solves the triangular system of (this * inner)(x, z) = delta(x, z):
    //   mobius:  mu(x,x) = 1,          mu(x,z) = -sum_{x<=w<z} mu(x,w)
    //   inverse: b(x,x) = 1/a(x,x),    b(x,z) = -(1/a(z,z)) sum_{x<=w<z} b(x,w) a(w,z)
    Scalar solve_row(const element_type& x, const element_type& y) const {
      const auto elems = poset.interval_elements(x, y, kDefaultElementCap);
      std::vector<std::optional<Scalar>> row(elems.size());
      {
        std::lock_guard lock(mutex);
        for (std::size_t k = 0; k < elems.size(); ++k) {
          auto it = memo.find({x, elems[k]});
          if (it != memo.end()) row[k] = it->second;
        }
      }
      std::vector<std::pair<std::size_t, Scalar>> fresh;
      for (std::size_t k = 0; k < elems.size(); ++k) {
        if (row[k]) continue;
        const auto& z = elems[k];
        Scalar sum;
        for (std::size_t j = 0; j < k; ++j) {
          if (!poset.leq(elems[j], z)) continue;
          if (kind == FunctionKind::mobius) {
            sum += *row[j];
          } else {
            sum += *row[j] * left->eval(elems[j], z);
          }
        }
        Scalar value;
        if (kind == FunctionKind::mobius) {
          value = k == 0 ? Scalar(1) : -sum;
        } else {
          const Scalar diag = left->eval(z, z);
          if (diag.is_zero()) throw error(errc::not_invertible, "zero diagonal at " + poset.format(z));
          value = k == 0 ? Scalar(1) / diag : -sum / diag;
        }
        row[k] = value;
        fresh.emplace_back(k, std::move(value));
      }
      {
        std::lock_guard lock(mutex);
        for (auto& [k, v] : fresh) memo.emplace(std::pair{x, elems[k]}, std::move(v));
      }
      return *row.back();
    }
  };

  static std::shared_ptr<Node> make(P poset, FunctionKind kind, std::string name) {
    return std::make_shared<Node>(std::move(poset), kind, std::move(name));
  }

  explicit IntervalFunction(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;
};

/// Lazily evaluated a * b.
template <Poset P>
IntervalFunction<P> convolve(const IntervalFunction<P>& a, const IntervalFunction<P>& b) {
  return IntervalFunction<P>::convolution(a, b);
}

/// Two-sided inverse of `a` in the incidence algebra. A zero diagonal entry
/// raises NotInvertible when it is first reached during evaluation.
template <Poset P>
IntervalFunction<P> invert(const IntervalFunction<P>& a) {
  return IntervalFunction<P>::inverse(a);
}

/// mu_P(x, y) by the defining recursion over [x, y].
template <Poset P>
Scalar mobius_value(const P& p, const element_t<P>& x, const element_t<P>& y) {
  return IntervalFunction<P>::mobius(p)(x, y);
}

/// Closed-form Möbius values for the built-in families, computed without the
/// recursion: mu(y/x) for divisibility, mu of the integer image of y - x for
/// multisets, (-1)^{|T|-|S|} for subsets, and 1 / -1 / 0 for the chain.
template <Poset P>
Scalar closed_form_mobius(const P& p, const element_t<P>& x, const element_t<P>& y) {
  if (!leq(p, x, y)) throw error(errc::not_comparable, p.format(x) + " </= " + p.format(y));
  if constexpr (P::family == Family::divisibility) {
    return Scalar(classical_mobius(y / x));
  } else if constexpr (P::family == Family::chain) {
    return Scalar(x == y ? 1 : y == x + 1 ? -1 : 0);
  } else if constexpr (P::family == Family::subsets) {
    return Scalar((y.size() - x.size()) % 2 == 0 ? 1 : -1);
  } else if constexpr (P::family == Family::multisets) {
    Factorization quotient;
    for (const auto& [prime, k] : y.factors()) {
      const auto d = k - x.multiplicity(prime);
      if (d > 0) quotient.emplace_back(prime, d);
    }
    const Multiset q(std::move(quotient));
    if (q.image().fits_ulong_p()) return Scalar(classical_mobius(q.image().get_ui()));
    return Scalar(mobius_of_factorization(q.factors()));
  } else {
    throw error(errc::no_closed_form, p.name() + " has no closed-form Möbius function");
  }
}

}  // namespace posetlab
