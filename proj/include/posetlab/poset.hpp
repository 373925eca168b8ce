#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetlab/error.hpp"
#include "posetlab/number_theory.hpp"

namespace posetlab {

enum class Family { divisibility, chain, subsets, multisets, explicit_poset };

/// Default cap on the number of elements a window or interval may hold.
inline constexpr std::size_t kDefaultElementCap = std::size_t{1} << 20;

namespace detail {

inline std::uint64_t parse_positive(std::string_view text) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last || value == 0) {
    throw error(errc::invalid_element, "expected a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap) {
    throw error(errc::bound_too_large,
                std::to_string(count) + " elements exceeds cap " + std::to_string(cap));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Element encodings
// ---------------------------------------------------------------------------

/// Finite subset of the positive integers, stored sorted and duplicate-free.
/// Ordered by size, then lexicographically.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::vector<std::uint64_t> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    if (!items_.empty() && items_.front() == 0) {
      throw error(errc::invalid_element, "subset members must be positive integers");
    }
  }
  Subset(std::initializer_list<std::uint64_t> items) : Subset(std::vector<std::uint64_t>(items)) {}

  const std::vector<std::uint64_t>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(std::uint64_t q) const { return std::binary_search(items_.begin(), items_.end(), q); }
  std::uint64_t max() const noexcept { return items_.empty() ? 0 : items_.back(); }

  bool includes(const Subset& other) const {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
  }

  Subset with(std::uint64_t q) const {
    auto items = items_;
    items.push_back(q);
    return Subset(std::move(items));
  }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.items_.size() <=> b.items_.size(); c != 0) return c;
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<std::uint64_t> items_;
};

/// Finite multiset of primes (prime -> multiplicity >= 1), ordered by its
/// integer image prod p^m(p).
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(Factorization factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    Factorization merged;
    for (const auto& [p, k] : factors_) {
      if (!is_prime(p)) throw error(errc::invalid_element, std::to_string(p) + " is not prime");
      if (k == 0) continue;
      if (!merged.empty() && merged.back().first == p) {
        merged.back().second += k;
      } else {
        merged.emplace_back(p, k);
      }
    }
    factors_ = std::move(merged);
    for (const auto& [p, k] : factors_) {
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), p, k);
      image_ *= power;
    }
  }

  static Multiset from_integer(std::uint64_t n) {
    if (n < 1) throw error(errc::invalid_input, "integer_to_multiset requires n >= 1");
    return Multiset(factorize(n));
  }

  const Factorization& factors() const noexcept { return factors_; }
  const mpz_class& image() const noexcept { return image_; }
  bool empty() const noexcept { return factors_.empty(); }

  std::uint32_t multiplicity(std::uint64_t p) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair<std::uint64_t, std::uint32_t>{p, 0});
    return it != factors_.end() && it->first == p ? it->second : 0;
  }

  bool pointwise_leq(const Multiset& other) const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](const auto& f) { return f.second <= other.multiplicity(f.first); });
  }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.factors_ == b.factors_; }
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    const int c = cmp(a.image_, b.image_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  Factorization factors_;
  mpz_class image_{1};
};

/// prod p^m(p); unbounded.
inline mpz_class multiset_to_integer(const Multiset& m) { return m.image(); }

inline Multiset integer_to_multiset(std::uint64_t n) { return Multiset::from_integer(n); }

/// Element of an explicit poset: its position in the poset's canonical
/// (linear-extension) order.
struct ExplicitElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const ExplicitElement&, const ExplicitElement&) = default;
};

struct ElementHash {
  std::size_t operator()(std::uint64_t x) const noexcept { return std::hash<std::uint64_t>{}(x); }
  std::size_t operator()(const ExplicitElement& x) const noexcept { return std::hash<std::uint32_t>{}(x.index); }
  std::size_t operator()(const Subset& s) const noexcept {
    std::size_t seed = s.size();
    for (auto q : s.items()) detail::hash_combine(seed, std::hash<std::uint64_t>{}(q));
    return seed;
  }
  std::size_t operator()(const Multiset& m) const noexcept {
    std::size_t seed = m.factors().size();
    for (const auto& [p, k] : m.factors()) {
      detail::hash_combine(seed, std::hash<std::uint64_t>{}(p));
      detail::hash_combine(seed, k);
    }
    return seed;
  }
};

// ---------------------------------------------------------------------------
// Windows
// ---------------------------------------------------------------------------

/// Finite downward-closed truncation of a poset: everything under a
/// family-specific scalar bound, the principal ideal of one element, or the
/// whole poset (explicit posets only).
template <class E>
class Window {
 public:
  enum class Kind { bound, ideal, whole };

  static Window bounded(std::uint64_t n) { return Window(Kind::bound, n, std::nullopt); }
  static Window ideal_of(E top) { return Window(Kind::ideal, 0, std::move(top)); }
  static Window whole() { return Window(Kind::whole, 0, std::nullopt); }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t bound() const noexcept { return bound_; }
  const E& top() const { return *top_; }

 private:
  Window(Kind kind, std::uint64_t bound, std::optional<E> top)
      : kind_(kind), bound_(bound), top_(std::move(top)) {}

  Kind kind_;
  std::uint64_t bound_;
  std::optional<E> top_;
};

// ---------------------------------------------------------------------------
// Poset concept
// ---------------------------------------------------------------------------

/// A locally finite poset with bottom element. Elements are canonical values
/// whose operator< is a linear extension of the partial order, so sorting any
/// element list yields an order in which every element follows those below it.
template <class P>
concept Poset = std::copyable<P> && requires(const P& p, const typename P::element_type& x,
                                             std::string_view text, std::uint64_t n, std::size_t cap) {
  typename P::element_type;
  requires std::totally_ordered<typename P::element_type>;
  { P::family } -> std::convertible_to<Family>;
  { p.name() } -> std::convertible_to<std::string>;
  { p.contains(x) } -> std::same_as<bool>;
  { p.leq(x, x) } -> std::same_as<bool>;
  { p.bottom() } -> std::same_as<typename P::element_type>;
  { p.interval_elements(x, x, cap) } -> std::same_as<std::vector<typename P::element_type>>;
  { p.bounded_window(n, cap) } -> std::same_as<std::vector<typename P::element_type>>;
  { p.in_bound(x, n) } -> std::same_as<bool>;
  { p.successor(x) } -> std::same_as<std::optional<typename P::element_type>>;
  { p.format(x) } -> std::same_as<std::string>;
  { p.parse(text) } -> std::same_as<typename P::element_type>;
  { p == p } -> std::same_as<bool>;
};

template <class P>
using element_t = typename P::element_type;

// ---------------------------------------------------------------------------
// Built-in families
// ---------------------------------------------------------------------------

/// Positive integers ordered by divisibility.
class DivisibilityPoset {
 public:
  using element_type = std::uint64_t;
  static constexpr Family family = Family::divisibility;

  std::string name() const { return "divisibility"; }
  bool contains(element_type x) const { return x >= 1; }
  bool leq(element_type x, element_type y) const { return y % x == 0; }
  element_type bottom() const { return 1; }

  std::vector<element_type> interval_elements(element_type x, element_type y, std::size_t cap) const {
    auto out = divisors(y / x);
    detail::check_cap(out.size(), cap);
    for (auto& d : out) d *= x;
    return out;
  }

  std::vector<element_type> bounded_window(std::uint64_t n, std::size_t cap) const {
    detail::check_cap(n, cap);
    std::vector<element_type> out(n);
    for (std::uint64_t k = 0; k < n; ++k) out[k] = k + 1;
    return out;
  }
  bool in_bound(element_type x, std::uint64_t n) const { return x <= n; }
  std::optional<element_type> successor(element_type x) const { return x + 1; }

  std::string format(element_type x) const { return std::to_string(x); }
  element_type parse(std::string_view text) const { return detail::parse_positive(detail::trim(text)); }

  friend bool operator==(const DivisibilityPoset&, const DivisibilityPoset&) = default;
};

/// Positive integers under the usual order.
class ChainPoset {
 public:
  using element_type = std::uint64_t;
  static constexpr Family family = Family::chain;

  std::string name() const { return "chain"; }
  bool contains(element_type x) const { return x >= 1; }
  bool leq(element_type x, element_type y) const { return x <= y; }
  element_type bottom() const { return 1; }

  std::vector<element_type> interval_elements(element_type x, element_type y, std::size_t cap) const {
    detail::check_cap(y - x + 1, cap);
    std::vector<element_type> out;
    out.reserve(y - x + 1);
    for (auto z = x; z <= y; ++z) out.push_back(z);
    return out;
  }

  std::vector<element_type> bounded_window(std::uint64_t n, std::size_t cap) const {
    return interval_elements(1, n, cap);
  }
  bool in_bound(element_type x, std::uint64_t n) const { return x <= n; }
  std::optional<element_type> successor(element_type x) const { return x + 1; }

  std::string format(element_type x) const { return std::to_string(x); }
  element_type parse(std::string_view text) const { return detail::parse_positive(detail::trim(text)); }

  friend bool operator==(const ChainPoset&, const ChainPoset&) = default;
};

/// Finite subsets of the positive integers under inclusion.
class SubsetPoset {
 public:
  using element_type = Subset;
  static constexpr Family family = Family::subsets;

  std::string name() const { return "subsets"; }
  bool contains(const Subset&) const { return true; }
  bool leq(const Subset& x, const Subset& y) const { return y.includes(x); }
  Subset bottom() const { return {}; }

  std::vector<Subset> interval_elements(const Subset& x, const Subset& y, std::size_t cap) const {
    std::vector<std::uint64_t> free;
    std::set_difference(y.items().begin(), y.items().end(), x.items().begin(), x.items().end(),
                        std::back_inserter(free));
    if (free.size() >= 63) detail::check_cap(SIZE_MAX, cap);
    detail::check_cap(std::size_t{1} << free.size(), cap);
    return with_subsets_of(x, free);
  }

  std::vector<Subset> bounded_window(std::uint64_t m, std::size_t cap) const {
    if (m >= 63) detail::check_cap(SIZE_MAX, cap);
    detail::check_cap(std::size_t{1} << m, cap);
    std::vector<std::uint64_t> ground(m);
    for (std::uint64_t k = 0; k < m; ++k) ground[k] = k + 1;
    return with_subsets_of(Subset{}, ground);
  }
  bool in_bound(const Subset& x, std::uint64_t m) const { return x.max() <= m; }

  /// Successor in binary-counting order (the set read as a bitmask over the
  /// ground set), which visits every finite subset exactly once.
  std::optional<Subset> successor(const Subset& x) const {
    std::vector<std::uint64_t> items = x.items();
    std::uint64_t q = 1;
    while (!items.empty() && items.front() == q) {
      items.erase(items.begin());
      ++q;
    }
    items.insert(items.begin(), q);
    return Subset(std::move(items));
  }

  std::string format(const Subset& x) const {
    std::string out = "{";
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(x.items()[k]);
    }
    return out + "}";
  }

  Subset parse(std::string_view text) const {
    text = detail::trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
      throw error(errc::invalid_element, "subset must be written as {a,b,...}, got '" + std::string(text) + "'");
    }
    text = detail::trim(text.substr(1, text.size() - 2));
    std::vector<std::uint64_t> items;
    while (!text.empty()) {
      const auto comma = text.find(',');
      items.push_back(detail::parse_positive(detail::trim(text.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
      if (detail::trim(text).empty()) throw error(errc::invalid_element, "trailing comma in subset");
    }
    Subset out(items);
    if (out.size() != items.size()) throw error(errc::invalid_element, "duplicate subset member");
    return out;
  }

  friend bool operator==(const SubsetPoset&, const SubsetPoset&) = default;

 private:
  static std::vector<Subset> with_subsets_of(const Subset& base, const std::vector<std::uint64_t>& free) {
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << free.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      std::vector<std::uint64_t> items = base.items();
      for (std::size_t b = 0; b < free.size(); ++b) {
        if (mask >> b & 1U) items.push_back(free[b]);
      }
      out.emplace_back(std::move(items));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Finite multisets of primes under pointwise multiplicity order.
class MultisetPoset {
 public:
  using element_type = Multiset;
  static constexpr Family family = Family::multisets;

  std::string name() const { return "multisets"; }
  bool contains(const Multiset&) const { return true; }
  bool leq(const Multiset& x, const Multiset& y) const { return x.pointwise_leq(y); }
  Multiset bottom() const { return {}; }

  std::vector<Multiset> interval_elements(const Multiset& x, const Multiset& y, std::size_t cap) const {
    // Each prime of y contributes (m_y(p) - m_x(p) + 1) choices.
    std::size_t count = 1;
    for (const auto& [p, k] : y.factors()) {
      count *= k - x.multiplicity(p) + 1;
      detail::check_cap(count, cap);
    }
    std::vector<Multiset> out{x};
    for (const auto& [p, k] : y.factors()) {
      const std::uint32_t lo = x.multiplicity(p);
      const std::size_t base = out.size();
      for (std::uint32_t extra = 1; lo + extra <= k; ++extra) {
        for (std::size_t i = 0; i < base; ++i) {
          Factorization f = out[i].factors();
          f.emplace_back(p, extra);
          out.emplace_back(std::move(f));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Multiset> bounded_window(std::uint64_t n, std::size_t cap) const {
    detail::check_cap(n, cap);
    std::vector<Multiset> out;
    out.reserve(n);
    for (std::uint64_t k = 1; k <= n; ++k) out.push_back(Multiset::from_integer(k));
    return out;
  }
  bool in_bound(const Multiset& x, std::uint64_t n) const { return cmp(x.image(), mpz_class(std::to_string(n))) <= 0; }

  std::optional<Multiset> successor(const Multiset& x) const {
    if (!x.image().fits_ulong_p()) return std::nullopt;
    const unsigned long n = x.image().get_ui();
    if (n == UINT64_MAX) return std::nullopt;
    return Multiset::from_integer(n + 1);
  }

  /// "p^k" factors joined by '*', primes ascending, "^1" omitted; the empty
  /// multiset is written "1".
  std::string format(const Multiset& x) const {
    if (x.empty()) return "1";
    std::string out;
    for (const auto& [p, k] : x.factors()) {
      if (!out.empty()) out += '*';
      out += std::to_string(p);
      if (k > 1) out += '^' + std::to_string(k);
    }
    return out;
  }

  Multiset parse(std::string_view text) const {
    text = detail::trim(text);
    if (text == "1") return {};
    Factorization factors;
    while (true) {
      const auto star = text.find('*');
      std::string_view factor = detail::trim(text.substr(0, star));
      const auto caret = factor.find('^');
      const std::uint64_t p = detail::parse_positive(detail::trim(factor.substr(0, caret)));
      std::uint64_t k = 1;
      if (caret != std::string_view::npos) k = detail::parse_positive(detail::trim(factor.substr(caret + 1)));
      if (!is_prime(p)) throw error(errc::invalid_element, std::to_string(p) + " is not prime");
      if (k > UINT32_MAX) throw error(errc::invalid_element, "multiplicity too large");
      factors.emplace_back(p, static_cast<std::uint32_t>(k));
      if (star == std::string_view::npos) break;
      text.remove_prefix(star + 1);
    }
    return Multiset(std::move(factors));
  }

  friend bool operator==(const MultisetPoset&, const MultisetPoset&) = default;
};

}  // namespace posetlab
