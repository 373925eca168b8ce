#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "posetlab/error.hpp"
#include "posetlab/explicit_poset.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

static_assert(Poset<DivisibilityPoset>);
static_assert(Poset<ChainPoset>);
static_assert(Poset<SubsetPoset>);
static_assert(Poset<MultisetPoset>);
static_assert(Poset<ExplicitPoset>);

/// Runtime choice among the supported poset families.
using PosetHandle = std::variant<DivisibilityPoset, ChainPoset, SubsetPoset, MultisetPoset, ExplicitPoset>;

inline PosetHandle builtin_poset(std::string_view name) {
  if (name == "divisibility") return DivisibilityPoset{};
  if (name == "chain") return ChainPoset{};
  if (name == "subsets") return SubsetPoset{};
  if (name == "multisets") return MultisetPoset{};
  throw error(errc::invalid_input, "unknown poset '" + std::string(name) + "'");
}

template <Poset P>
void validate(const P& p, const element_t<P>& x) {
  if (!p.contains(x)) throw error(errc::invalid_element, p.format(x) + " is not an element of " + p.name());
}

template <Poset P>
bool leq(const P& p, const element_t<P>& x, const element_t<P>& y) {
  validate(p, x);
  validate(p, y);
  return p.leq(x, y);
}

template <Poset P>
bool less(const P& p, const element_t<P>& x, const element_t<P>& y) {
  return x != y && leq(p, x, y);
}

template <Poset P>
element_t<P> bottom(const P& p) {
  return p.bottom();
}

/// [x, y] in canonical order.
template <Poset P>
std::vector<element_t<P>> interval(const P& p, const element_t<P>& x, const element_t<P>& y,
                                   std::size_t cap = kDefaultElementCap) {
  if (!leq(p, x, y)) throw error(errc::not_comparable, p.format(x) + " </= " + p.format(y));
  return p.interval_elements(x, y, cap);
}

/// Principal order ideal {y : y <= x} in canonical order.
template <Poset P>
std::vector<element_t<P>> ideal(const P& p, const element_t<P>& x, std::size_t cap = kDefaultElementCap) {
  validate(p, x);
  return p.interval_elements(p.bottom(), x, cap);
}

template <Poset P>
bool in_window(const P& p, const Window<element_t<P>>& w, const element_t<P>& x) {
  switch (w.kind()) {
    case Window<element_t<P>>::Kind::bound: return p.in_bound(x, w.bound());
    case Window<element_t<P>>::Kind::ideal: return p.leq(x, w.top());
    case Window<element_t<P>>::Kind::whole: return true;
  }
  return false;
}

/// All window elements in canonical order.
template <Poset P>
std::vector<element_t<P>> enumerate_window(const P& p, const Window<element_t<P>>& w,
                                           std::size_t cap = kDefaultElementCap) {
  switch (w.kind()) {
    case Window<element_t<P>>::Kind::bound: return p.bounded_window(w.bound(), cap);
    case Window<element_t<P>>::Kind::ideal: return ideal(p, w.top(), cap);
    case Window<element_t<P>>::Kind::whole:
      if constexpr (P::family == Family::explicit_poset) {
        return p.bounded_window(0, cap);
      } else {
        throw error(errc::invalid_input, p.name() + " is infinite; a whole-poset window needs an explicit poset");
      }
  }
  return {};
}

template <Poset P>
std::string describe_window(const P& p, const Window<element_t<P>>& w) {
  switch (w.kind()) {
    case Window<element_t<P>>::Kind::bound:
      if constexpr (P::family == Family::explicit_poset) return "whole";
      return "bound:" + std::to_string(w.bound());
    case Window<element_t<P>>::Kind::ideal: return "ideal:" + p.format(w.top());
    case Window<element_t<P>>::Kind::whole: return "whole";
  }
  return {};
}

/// Parses a comma-separated list of element encodings, splitting only at
/// commas outside braces so subset encodings survive.
template <Poset P>
std::vector<element_t<P>> parse_element_list(const P& p, std::string_view text) {
  std::vector<element_t<P>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || (text[k] == ',' && depth == 0)) {
      const auto token = detail::trim(text.substr(start, k - start));
      if (!token.empty()) out.push_back(p.parse(token));
      start = k + 1;
    } else if (text[k] == '{') {
      ++depth;
    } else if (text[k] == '}') {
      --depth;
    }
  }
  return out;
}

template <Poset P>
std::string format_element_list(const P& p, const std::vector<element_t<P>>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += p.format(xs[k]);
  }
  return out;
}

}  // namespace posetlab
