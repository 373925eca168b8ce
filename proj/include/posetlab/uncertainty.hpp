#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/error.hpp"
#include "posetlab/incidence.hpp"
#include "posetlab/linalg.hpp"
#include "posetlab/number_theory.hpp"
#include "posetlab/order.hpp"
#include "posetlab/scalar.hpp"
#include "posetlab/transforms.hpp"

namespace posetlab {

// ---------------------------------------------------------------------------
// Witness conditions
// ---------------------------------------------------------------------------

struct WitnessConditions {
  bool disjoint = false;   // (ideal(z) \ ideal(y)) does not meet S
  bool factorize = false;  // mu(x,y) mu(y,z) = mu(x,z) for all x <= y
  bool nonzero = false;    // mu(y,z) != 0
  Scalar mu_yz;

  bool all() const noexcept { return disjoint && factorize && nonzero; }
};

template <Poset P>
struct WitnessCertificate {
  element_t<P> y;
  std::vector<element_t<P>> avoid_set;
  element_t<P> z;
  bool cond_disjoint = false;
  bool cond_factorize = false;
  bool cond_nonzero = false;
  Scalar mu_yz;
  // Filled only when a concrete f is under test.
  std::optional<Scalar> predicted_fz;
  std::optional<Scalar> observed_fz;

  bool conditions_hold() const noexcept { return cond_disjoint && cond_factorize && cond_nonzero; }
};

template <Poset P>
WitnessConditions check_witness_conditions(const P& p, const element_t<P>& y,
                                           const std::vector<element_t<P>>& avoid,
                                           const element_t<P>& z, const IntervalFunction<P>& mu) {
  if (!less(p, y, z)) throw error(errc::not_strictly_above, p.format(z) + " is not strictly above " + p.format(y));
  for (const auto& s : avoid) validate(p, s);

  WitnessConditions out;
  // s lies in ideal(z) \ ideal(y) exactly when s <= z and not s <= y.
  out.disjoint = std::none_of(avoid.begin(), avoid.end(),
                              [&](const auto& s) { return p.leq(s, z) && !p.leq(s, y); });
  out.mu_yz = mu(y, z);
  out.factorize = true;
  for (const auto& x : ideal(p, y)) {
    if (mu(x, y) * out.mu_yz != mu(x, z)) {
      out.factorize = false;
      break;
    }
  }
  out.nonzero = !out.mu_yz.is_zero();
  return out;
}

template <Poset P>
WitnessConditions check_witness_conditions(const P& p, const element_t<P>& y,
                                           const std::vector<element_t<P>>& avoid, const element_t<P>& z) {
  return check_witness_conditions(p, y, avoid, z, IntervalFunction<P>::mobius(p));
}

// ---------------------------------------------------------------------------
// Witness streams
// ---------------------------------------------------------------------------

/// Up to `count` certificates z > y satisfying all three conditions for
/// (y, avoid). Divisibility and multisets try z = y*q over ascending primes q
/// dividing neither y nor any avoided element; subsets try z = y + {q} over
/// ascending q outside y and every avoided set; other posets scan z > y in
/// successor order. At most `budget` candidates are tested; a short result
/// means the budget ran out, not that no witness exists.
template <Poset P>
std::vector<WitnessCertificate<P>> witnesses(const P& p, const element_t<P>& y,
                                             const std::vector<element_t<P>>& avoid, std::size_t count,
                                             std::size_t budget, const IntervalFunction<P>& mu) {
  using E = element_t<P>;
  validate(p, y);
  std::vector<WitnessCertificate<P>> out;
  std::size_t tested = 0;

  auto consider = [&](const E& z) {
    ++tested;
    const auto c = check_witness_conditions(p, y, avoid, z, mu);
    if (!c.all()) return;
    WitnessCertificate<P> cert{y, avoid, z, c.disjoint, c.factorize, c.nonzero, c.mu_yz, std::nullopt, std::nullopt};
    out.push_back(std::move(cert));
  };

  if constexpr (P::family == Family::divisibility) {
    for (std::uint64_t q = 2; out.size() < count && tested < budget; q = next_prime(q)) {
      if (y % q == 0) continue;
      if (std::any_of(avoid.begin(), avoid.end(), [q](std::uint64_t s) { return s % q == 0; })) continue;
      consider(checked_mul(y, q));
    }
  } else if constexpr (P::family == Family::multisets) {
    for (std::uint64_t q = 2; out.size() < count && tested < budget; q = next_prime(q)) {
      if (y.multiplicity(q) > 0) continue;
      if (std::any_of(avoid.begin(), avoid.end(), [q](const Multiset& s) { return s.multiplicity(q) > 0; })) continue;
      Factorization f = y.factors();
      f.emplace_back(q, 1);
      consider(Multiset(std::move(f)));
    }
  } else if constexpr (P::family == Family::subsets) {
    for (std::uint64_t q = 1; out.size() < count && tested < budget; ++q) {
      if (y.contains(q)) continue;
      if (std::any_of(avoid.begin(), avoid.end(), [q](const Subset& s) { return s.contains(q); })) continue;
      consider(y.with(q));
    }
  } else {
    std::optional<E> next = p.successor(y);
    while (next && out.size() < count && tested < budget) {
      const E z = *next;
      if (z != y && p.leq(y, z)) consider(z);
      next = p.successor(z);
    }
  }
  return out;
}

template <Poset P>
std::vector<WitnessCertificate<P>> witnesses(const P& p, const element_t<P>& y,
                                             const std::vector<element_t<P>>& avoid, std::size_t count,
                                             std::size_t budget) {
  return witnesses(p, y, avoid, count, budget, IntervalFunction<P>::mobius(p));
}

/// Raised when fewer witnesses than requested were found; carries those
/// that were.
template <Poset P>
class InsufficientWitnesses : public error {
 public:
  InsufficientWitnesses(std::size_t wanted, std::vector<WitnessCertificate<P>> partial)
      : error(errc::insufficient_witnesses,
              "found " + std::to_string(partial.size()) + " of " + std::to_string(wanted)),
        partial_(std::move(partial)) {}

  const std::vector<WitnessCertificate<P>>& partial() const noexcept { return partial_; }

 private:
  std::vector<WitnessCertificate<P>> partial_;
};

/// f(z) = sum over x in ideal(z) of mu(x, z) g(x), summed over the whole ideal.
template <Poset P>
Scalar invert_at(const FiniteSupportFunction<P>& g, const element_t<P>& z, const IntervalFunction<P>& mu) {
  Scalar sum;
  for (const auto& x : ideal(g.poset(), z)) {
    const Scalar gx = g(x);
    if (!gx.is_zero()) sum += mu(x, z) * gx;
  }
  return sum;
}

template <Poset P>
struct TheoremCheck {
  element_t<P> y;
  Scalar f_y;
  std::vector<WitnessCertificate<P>> certificates;
};

/// Replays the witness argument on a concrete g: f is the Möbius inversion of
/// g, y the first element (canonical order) with f(y) != 0, S = supp(g), and
/// every witness z must give f(z) = mu(y,z) f(y) != 0.
template <Poset P>
TheoremCheck<P> verify_theorem_conclusion(const FiniteSupportFunction<P>& g, std::size_t count,
                                          std::size_t budget = 10000) {
  if (g.is_zero()) throw error(errc::zero_function, "g is identically zero");
  const P& p = g.poset();
  const auto mu = IntervalFunction<P>::mobius(p);
  const auto f = alpha_transform(g, mu);

  // A minimal element s of supp(g) has f(s) = g(s) != 0, so the downward
  // closure of supp(g) always contains a nonzero of f.
  std::set<element_t<P>> closure;
  for (const auto& s : g.support()) {
    for (auto& x : ideal(p, s)) closure.insert(std::move(x));
  }
  std::optional<element_t<P>> y;
  Scalar f_y;
  for (const auto& x : closure) {
    f_y = f(x);
    if (!f_y.is_zero()) {
      y = x;
      break;
    }
  }
  if (!y) throw error(errc::zero_function, "inversion vanished on the closure of supp(g)");

  auto certs = witnesses(p, *y, g.support(), count, budget, mu);
  for (auto& cert : certs) {
    cert.predicted_fz = cert.mu_yz * f_y;
    cert.observed_fz = invert_at(g, cert.z, mu);
  }
  if (certs.size() < count) throw InsufficientWitnesses<P>(count, std::move(certs));
  return {*y, f_y, std::move(certs)};
}

// ---------------------------------------------------------------------------
// Support census
// ---------------------------------------------------------------------------

enum class CensusVerdict { finite_certified, infinite_certified, inconclusive_window_only };

constexpr std::string_view to_string(CensusVerdict v) noexcept {
  switch (v) {
    case CensusVerdict::finite_certified: return "finite-certified";
    case CensusVerdict::infinite_certified: return "infinite-certified";
    case CensusVerdict::inconclusive_window_only: return "inconclusive-window-only";
  }
  return "unknown";
}

template <Poset P>
struct SupportCensus {
  element_t<P> x;
  std::string function_kind;
  std::string window;
  std::vector<element_t<P>> members;
  CensusVerdict verdict = CensusVerdict::inconclusive_window_only;
  std::string certificate_note;
};

namespace detail {

template <Poset P>
std::pair<CensusVerdict, std::string> census_certificate(FunctionKind kind) {
  if constexpr (P::family == Family::explicit_poset) {
    return {CensusVerdict::inconclusive_window_only, ""};
  } else {
    switch (kind) {
      case FunctionKind::delta:
        return {CensusVerdict::finite_certified, "delta(x,y) != 0 only for y = x"};
      case FunctionKind::zeta:
        return {CensusVerdict::infinite_certified, "zeta(x,y) = 1 on the infinite up-set of x"};
      case FunctionKind::mobius:
        if constexpr (P::family == Family::chain) {
          return {CensusVerdict::finite_certified, "chain closed form: mu(x,y) != 0 only for y in {x, x+1}"};
        } else if constexpr (P::family == Family::divisibility) {
          return {CensusVerdict::infinite_certified, "mu(x, x*q) = -1 for every prime q not dividing x"};
        } else if constexpr (P::family == Family::multisets) {
          return {CensusVerdict::infinite_certified,
                  "isomorphic to divisibility: mu(x, x+{q}) = -1 for every prime q not in x"};
        } else {
          return {CensusVerdict::infinite_certified, "mu(S,T) = (-1)^{|T|-|S|} is never zero"};
        }
      default: return {CensusVerdict::inconclusive_window_only, ""};
    }
  }
}

}  // namespace detail

/// S_x restricted to the window: {y in w : x <= y, a(x, y) != 0}.
template <Poset P>
SupportCensus<P> support_census(const P& p, const IntervalFunction<P>& a, const element_t<P>& x,
                                const Window<element_t<P>>& w, std::size_t cap = kDefaultElementCap) {
  validate(p, x);
  if (!in_window(p, w, x)) throw error(errc::element_outside_window, p.format(x));
  SupportCensus<P> out;
  out.x = x;
  out.function_kind = a.name();
  out.window = describe_window(p, w);
  for (const auto& y : enumerate_window(p, w, cap)) {
    if (p.leq(x, y) && !a(x, y).is_zero()) out.members.push_back(y);
  }
  std::tie(out.verdict, out.certificate_note) = detail::census_certificate<P>(a.kind());
  return out;
}

// ---------------------------------------------------------------------------
// Finite-support pair search
// ---------------------------------------------------------------------------

template <Poset P>
struct PairCandidate {
  FiniteSupportFunction<P> f;
  FiniteSupportFunction<P> g;
};

template <Poset P>
struct PairSearchResult {
  std::string window;
  std::string shell;
  std::vector<element_t<P>> window_elements;
  std::size_t equations = 0;
  std::size_t nullspace_dimension = 0;
  std::vector<std::vector<Scalar>> basis;  // coordinates over window_elements
  std::optional<PairCandidate<P>> candidate;
  std::string caveat = "verified only on shell";
};

/// Scales a nonzero vector of Gaussian rationals to Gaussian integers with
/// content 1 whose first nonzero entry has positive real part and
/// nonnegative imaginary part.
inline std::vector<Scalar> normalize_candidate(std::vector<Scalar> v) {
  mpz_class den = 1;
  for (const auto& s : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.im().get_den_mpz_t());
  }
  mpz_class content = 0;
  for (auto& s : v) {
    s *= Scalar(mpq_class(den));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.re().get_num_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.im().get_num_mpz_t());
  }
  if (content == 0) return v;
  const Scalar inv_content(mpq_class(1, 1) / mpq_class(content));
  for (auto& s : v) s *= inv_content;

  const auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  for (const Scalar& unit : {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()}) {
    const Scalar e = *first * unit;
    if (sgn(e.re()) > 0 && sgn(e.im()) >= 0) {
      for (auto& s : v) s *= unit;
      break;
    }
  }
  return v;
}

/// Looks for f supported in `w` whose `beta`-transform vanishes on
/// shell \ w: one homogeneous equation sum_{x in w, x <= y} beta(x,y) f(x) = 0
/// per y in shell \ w, solved exactly. A nontrivial nullspace yields a
/// candidate whose transform is finitely supported as far as the shell can
/// see; nothing beyond the shell is checked.
template <Poset P>
PairSearchResult<P> finite_support_pair_search(const P& p, const Window<element_t<P>>& w,
                                               const Window<element_t<P>>& shell, const IntervalFunction<P>& beta,
                                               std::size_t cap = kDefaultElementCap) {
  if (!(beta.poset() == p)) throw error(errc::poset_mismatch, "transform lives on a different poset");
  const auto inner = enumerate_window(p, w, cap);
  const auto outer = enumerate_window(p, shell, cap);
  const bool nested = outer.size() > inner.size() &&
                      std::all_of(inner.begin(), inner.end(), [&](const auto& x) { return in_window(p, shell, x); });
  if (!nested) throw error(errc::window_not_nested, "window must be a strict subset of the shell");

  std::vector<element_t<P>> rows;
  for (const auto& y : outer) {
    if (!std::binary_search(inner.begin(), inner.end(), y)) rows.push_back(y);
  }

  DenseMatrix<Scalar> system(rows.size(), inner.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < inner.size(); ++c) {
      if (p.leq(inner[c], rows[r])) system(r, c) = beta(inner[c], rows[r]);
    }
  }

  PairSearchResult<P> out;
  out.window = describe_window(p, w);
  out.shell = describe_window(p, shell);
  out.window_elements = inner;
  out.equations = rows.size();
  out.basis = nullspace_basis(std::move(system));
  out.nullspace_dimension = out.basis.size();
  if (out.basis.empty()) return out;

  const auto coords = normalize_candidate(out.basis.front());
  FiniteSupportFunction<P> f(p);
  for (std::size_t c = 0; c < inner.size(); ++c) f.set(inner[c], coords[c]);
  auto g = materialize(alpha_transform(f, beta), shell, cap);
  for (const auto& [y, v] : g.entries()) {
    if (!in_window(p, w, y)) throw std::logic_error("pair search candidate leaks outside the window");
  }
  out.candidate = PairCandidate<P>{std::move(f), std::move(g)};
  return out;
}

template <Poset P>
PairSearchResult<P> finite_support_pair_search(const P& p, const Window<element_t<P>>& w,
                                               const Window<element_t<P>>& shell) {
  return finite_support_pair_search(p, w, shell, IntervalFunction<P>::zeta(p));
}

// ---------------------------------------------------------------------------
// (alpha, beta) experiments
// ---------------------------------------------------------------------------

template <Poset P>
struct ConjectureReport {
  std::string alpha;
  std::string beta;
  std::size_t intervals_checked = 0;
  std::vector<SupportCensus<P>> s_census;  // alpha rows
  std::vector<SupportCensus<P>> t_census;  // beta rows
  PairSearchResult<P> search;
};

/// Juxtaposes the S_x / T_x censuses of an inverse pair (alpha, beta) with
/// the beta-direction pair search. Reports evidence only.
template <Poset P>
ConjectureReport<P> conjecture_experiment(const P& p, const IntervalFunction<P>& alpha,
                                          const IntervalFunction<P>& beta, const Window<element_t<P>>& w,
                                          const Window<element_t<P>>& shell,
                                          const std::vector<element_t<P>>& sample_x,
                                          std::size_t cap = kDefaultElementCap) {
  if (!(alpha.poset() == p) || !(beta.poset() == p)) throw error(errc::poset_mismatch, "experiment functions");
  const auto outer = enumerate_window(p, shell, cap);
  const auto product = convolve(alpha, beta);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (std::size_t j = i; j < outer.size(); ++j) {
      if (!p.leq(outer[i], outer[j])) continue;
      const Scalar expected(i == j ? 1 : 0);
      if (product(outer[i], outer[j]) != expected) {
        throw error(errc::not_inverses, "(alpha*beta)(" + p.format(outer[i]) + "," + p.format(outer[j]) + ") != delta");
      }
      ++checked;
    }
  }

  ConjectureReport<P> out{alpha.name(), beta.name(), checked, {}, {},
                          finite_support_pair_search(p, w, shell, beta, cap)};
  for (const auto& x : sample_x) {
    out.s_census.push_back(support_census(p, alpha, x, shell, cap));
    out.t_census.push_back(support_census(p, beta, x, shell, cap));
  }
  return out;
}

}  // namespace posetlab
