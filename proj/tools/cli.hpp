#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "posetlab/posetlab.hpp"

namespace posetlab::cli {

struct Options {
  std::string poset;
  std::string poset_file;
  std::string x, y, z;
  std::string fn;
  std::string avoid;
  std::string window_ideal;
  std::string sample;
  std::string left = "mobius";
  std::string right = "zeta";
  std::string alpha = "mobius";
  std::string beta = "zeta";
  std::string multiset;
  std::uint64_t n = 0;
  std::uint64_t bound = 0;
  std::uint64_t shell_bound = 0;
  std::size_t count = 3;
  std::size_t budget = 1000;
  bool json = false;
};

namespace detail {

inline void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

inline PosetHandle resolve_poset(const Options& o) {
  if (!o.poset_file.empty()) return ExplicitPoset::load_file(o.poset_file);
  if (!o.poset.empty()) return builtin_poset(o.poset);
  if (!o.fn.empty()) {
    const auto doc = read_json_file(o.fn);
    if (doc.contains("poset") && doc["poset"].is_string()) {
      const auto label = doc["poset"].get<std::string>();
      for (const char* name : {"divisibility", "chain", "subsets", "multisets"}) {
        if (label == name) return builtin_poset(label);
      }
      return ExplicitPoset::load_file(label);
    }
  }
  throw error(errc::invalid_input, "a poset is required (--poset or --poset-file)");
}

template <Poset P>
element_t<P> required_element(const P& p, const std::string& text, const char* flag) {
  if (text.empty()) throw error(errc::invalid_input, std::string(flag) + " is required");
  return p.parse(text);
}

template <Poset P>
std::uint64_t element_scale(const P& p, const element_t<P>& x) {
  if constexpr (std::is_same_v<element_t<P>, std::uint64_t>) {
    return x;
  } else if constexpr (P::family == Family::subsets) {
    return x.max();
  } else if constexpr (P::family == Family::multisets) {
    if (!x.image().fits_ulong_p()) throw error(errc::bound_too_large, p.format(x));
    return x.image().get_ui();
  } else {
    return 0;
  }
}

template <Poset P>
Window<element_t<P>> window_from(const P& p, const Options& o) {
  if (!o.window_ideal.empty()) return Window<element_t<P>>::ideal_of(p.parse(o.window_ideal));
  if (o.bound > 0) return Window<element_t<P>>::bounded(o.bound);
  if constexpr (P::family == Family::explicit_poset) return Window<element_t<P>>::whole();
  throw error(errc::invalid_input, "--bound or --window-ideal is required");
}

/// Explicit shells default to the whole poset; otherwise twice the window's
/// family scalar.
template <Poset P>
Window<element_t<P>> shell_from(const P& p, const Options& o, const Window<element_t<P>>& w) {
  if (o.shell_bound > 0) return Window<element_t<P>>::bounded(o.shell_bound);
  if constexpr (P::family == Family::explicit_poset) {
    return Window<element_t<P>>::whole();
  } else {
    const std::uint64_t scale =
        w.kind() == Window<element_t<P>>::Kind::bound ? w.bound() : element_scale(p, w.top());
    return Window<element_t<P>>::bounded(checked_mul(std::max<std::uint64_t>(scale, 1), 2));
  }
}

template <Poset P>
IntervalFunction<P> named_function(const P& p, const std::string& name) {
  if (name == "mobius" || name == "mu") return IntervalFunction<P>::mobius(p);
  if (name == "zeta") return IntervalFunction<P>::zeta(p);
  if (name == "delta") return IntervalFunction<P>::delta(p);
  throw error(errc::invalid_input, "unknown interval function '" + name + "' (mobius|zeta|delta)");
}

template <Poset P>
FiniteSupportFunction<P> function_from(const P& p, const Options& o) {
  if (o.fn.empty()) throw error(errc::invalid_input, "--fn is required");
  return parse_function_document(p, read_json_file(o.fn));
}

template <Poset P>
void print_function(std::ostream& out, const FiniteSupportFunction<P>& f, bool json) {
  if (json) {
    emit(out, function_document(f));
    return;
  }
  for (const auto& [x, v] : f.entries()) out << f.poset().format(x) << '\t' << v << '\n';
}

template <Poset P>
void print_certificates(std::ostream& out, const P& p, const std::vector<WitnessCertificate<P>>& certs) {
  out << "z\tmu_yz\tdisjoint\tfactorize\tnonzero\tpredicted_fz\tobserved_fz\n";
  for (const auto& c : certs) {
    out << p.format(c.z) << '\t' << c.mu_yz << '\t' << std::boolalpha << c.cond_disjoint << '\t'
        << c.cond_factorize << '\t' << c.cond_nonzero << '\t'
        << (c.predicted_fz ? c.predicted_fz->to_string() : "-") << '\t'
        << (c.observed_fz ? c.observed_fz->to_string() : "-") << '\n';
  }
}

template <Poset P>
void print_census(std::ostream& out, const P& p, const SupportCensus<P>& c) {
  out << "x: " << p.format(c.x) << '\n'
      << "function: " << c.function_kind << '\n'
      << "window: " << c.window << '\n'
      << "members: " << format_element_list(p, c.members) << '\n'
      << "size: " << c.members.size() << '\n'
      << "verdict: " << to_string(c.verdict) << '\n';
  if (!c.certificate_note.empty()) out << "certificate: " << c.certificate_note << '\n';
}

template <Poset P>
void print_search(std::ostream& out, const P& p, const PairSearchResult<P>& r) {
  out << "window: " << r.window << '\n'
      << "shell: " << r.shell << '\n'
      << "unknowns: " << r.window_elements.size() << '\n'
      << "equations: " << r.equations << '\n'
      << "nullspace_dimension: " << r.nullspace_dimension << '\n';
  if (!r.candidate) {
    out << "candidate: none\n";
    return;
  }
  const auto render = [&](const FiniteSupportFunction<P>& f) {
    std::string s;
    for (const auto& [x, v] : f.entries()) {
      if (!s.empty()) s += ' ';
      s += p.format(x) + "=" + v.to_string();
    }
    return s;
  };
  out << "candidate f: " << render(r.candidate->f) << '\n'
      << "candidate g: " << render(r.candidate->g) << '\n'
      << "caveat: " << r.caveat << '\n';
}

template <Poset P>
void dispatch(const std::string& cmd, const P& p, const Options& o, std::ostream& out) {
  if (cmd == "mobius") {
    const auto v = mobius_value(p, required_element(p, o.x, "--x"), required_element(p, o.y, "--y"));
    if (o.json) {
      emit(out, ordered_json{{"x", o.x}, {"y", o.y}, {"mobius", v.to_string()}});
    } else {
      out << v << '\n';
    }
  } else if (cmd == "transform" || cmd == "invert-transform") {
    const auto f = function_from(p, o);
    const auto e = cmd == "transform" ? zeta_transform(f) : mobius_inversion(f);
    print_function(out, materialize(e, window_from(p, o)), o.json);
  } else if (cmd == "convolve") {
    const auto product = convolve(named_function(p, o.left), named_function(p, o.right));
    const auto v = product(required_element(p, o.x, "--x"), required_element(p, o.y, "--y"));
    if (o.json) {
      emit(out, ordered_json{{"function", product.name()}, {"x", o.x}, {"y", o.y}, {"value", v.to_string()}});
    } else {
      out << v << '\n';
    }
  } else if (cmd == "witness") {
    const auto y = required_element(p, o.y, "--y");
    const auto avoid = parse_element_list(p, o.avoid);
    const auto certs = witnesses(p, y, avoid, o.count, o.budget);
    if (o.json) {
      ordered_json list = ordered_json::array();
      for (const auto& c : certs) list.push_back(report_json(p, c));
      emit(out, ordered_json{{"y", p.format(y)},
                             {"avoid_set", element_list_json(p, avoid)},
                             {"requested", o.count},
                             {"certificates", list}});
    } else {
      print_certificates(out, p, certs);
      if (certs.size() < o.count) out << "budget exhausted after " << certs.size() << " of " << o.count << '\n';
    }
  } else if (cmd == "verify") {
    const auto check = verify_theorem_conclusion(function_from(p, o), o.count, o.budget);
    if (o.json) {
      ordered_json list = ordered_json::array();
      for (const auto& c : check.certificates) list.push_back(report_json(p, c));
      emit(out, ordered_json{{"y", p.format(check.y)}, {"f_y", check.f_y.to_string()}, {"certificates", list}});
    } else {
      out << "y: " << p.format(check.y) << "\nf(y): " << check.f_y << '\n';
      print_certificates(out, p, check.certificates);
    }
  } else if (cmd == "census") {
    const auto c = support_census(p, named_function(p, o.alpha), required_element(p, o.x, "--x"), window_from(p, o));
    if (o.json) {
      emit(out, report_json(p, c));
    } else {
      print_census(out, p, c);
    }
  } else if (cmd == "search") {
    const auto w = window_from(p, o);
    const auto r = finite_support_pair_search(p, w, shell_from(p, o, w), named_function(p, o.beta));
    if (o.json) {
      emit(out, report_json(p, r));
    } else {
      print_search(out, p, r);
    }
  } else if (cmd == "conjecture") {
    const auto w = window_from(p, o);
    auto sample = parse_element_list(p, o.sample);
    if (sample.empty()) sample.push_back(p.bottom());
    const auto r = conjecture_experiment(p, named_function(p, o.alpha), named_function(p, o.beta), w,
                                         shell_from(p, o, w), sample);
    if (o.json) {
      emit(out, report_json(p, r));
    } else {
      out << "alpha: " << r.alpha << "\nbeta: " << r.beta << "\ninverse intervals checked: " << r.intervals_checked
          << '\n';
      for (std::size_t k = 0; k < r.s_census.size(); ++k) {
        out << "-- S census (alpha)\n";
        print_census(out, p, r.s_census[k]);
        out << "-- T census (beta)\n";
        print_census(out, p, r.t_census[k]);
      }
      out << "-- pair search (beta direction)\n";
      print_search(out, p, r.search);
    }
  }
}

}  // namespace detail

/// Runs one invocation. Exit status: 0 success, 1 usage or validation
/// error, 2 mathematical domain error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Möbius inversion and uncertainty-principle experiments on locally finite posets", "posetlab"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_poset = [&](CLI::App* sub) {
    sub->add_option("--poset", o.poset, "Built-in poset: divisibility|chain|subsets|multisets");
    sub->add_option("--poset-file", o.poset_file, "Explicit poset JSON document");
  };
  const auto add_window = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "Window bound (family-specific scalar)");
    sub->add_option("--window-ideal", o.window_ideal, "Use the principal ideal of this element as the window");
  };

  auto* mobius = app.add_subcommand("mobius", "Möbius function mu(x, y) by recursion");
  add_poset(mobius);
  mobius->add_option("--x", o.x)->required();
  mobius->add_option("--y", o.y)->required();

  auto* classical = app.add_subcommand("classical-mobius", "Number-theoretic mu(n)");
  classical->add_option("--x,--n", o.n, "Positive integer")->required();

  for (const char* name : {"transform", "invert-transform"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "transform" ? "Zeta transform of a function on a window"
                                                                          : "Möbius inversion of a function on a window");
    add_poset(sub);
    add_window(sub);
    sub->add_option("--fn", o.fn, "Function document")->required();
  }

  auto* conv = app.add_subcommand("convolve", "Evaluate (left * right)(x, y)");
  add_poset(conv);
  conv->add_option("--left", o.left, "mobius|zeta|delta");
  conv->add_option("--right", o.right, "mobius|zeta|delta");
  conv->add_option("--x", o.x)->required();
  conv->add_option("--y", o.y)->required();

  auto* witness = app.add_subcommand("witness", "Witnesses z > y for an avoid set");
  add_poset(witness);
  witness->add_option("--y", o.y)->required();
  witness->add_option("--avoid", o.avoid, "Comma-joined element encodings");
  witness->add_option("--count", o.count);
  witness->add_option("--budget", o.budget);

  auto* verify = app.add_subcommand("verify", "Check f(z) = mu(y,z) f(y) != 0 on witnesses for a given g");
  add_poset(verify);
  verify->add_option("--fn", o.fn, "Function document for g")->required();
  verify->add_option("--count", o.count);
  verify->add_option("--budget", o.budget);

  auto* census = app.add_subcommand("census", "Census of {y : a(x, y) != 0} on a window");
  add_poset(census);
  add_window(census);
  census->add_option("--x", o.x)->required();
  census->add_option("--alpha", o.alpha, "mobius|zeta|delta");

  auto* search = app.add_subcommand("search", "Search a window for a finite-support pair");
  add_poset(search);
  add_window(search);
  search->add_option("--shell-bound", o.shell_bound, "Shell bound (default: twice the window scalar)");
  search->add_option("--beta", o.beta, "Transform direction: mobius|zeta|delta");

  auto* conjecture = app.add_subcommand("conjecture", "S_x / T_x censuses plus pair search for (alpha, beta)");
  add_poset(conjecture);
  add_window(conjecture);
  conjecture->add_option("--shell-bound", o.shell_bound);
  conjecture->add_option("--alpha", o.alpha);
  conjecture->add_option("--beta", o.beta);
  conjecture->add_option("--sample,--x", o.sample, "Comma-joined sample elements (default: bottom)");

  auto* isomap = app.add_subcommand("isomap", "Multiset <-> integer isomorphism");
  auto* iso_n = isomap->add_option("--n", o.n, "Integer to factor into a multiset");
  auto* iso_m = isomap->add_option("--m,--multiset", o.multiset, "Multiset such as 2^2*3");
  iso_n->excludes(iso_m);

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->add_flag("--json", o.json, "Structured output");

  std::vector<const char*> argv{"posetlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return 1;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "classical-mobius") {
      const int mu = classical_mobius(o.n);
      if (o.json) {
        detail::emit(out, ordered_json{{"n", o.n}, {"mobius", mu}});
      } else {
        out << mu << '\n';
      }
    } else if (cmd == "isomap") {
      if (*iso_n) {
        const auto m = integer_to_multiset(o.n);
        const auto text = MultisetPoset{}.format(m);
        if (o.json) {
          detail::emit(out, ordered_json{{"integer", o.n}, {"multiset", text}});
        } else {
          out << text << '\n';
        }
      } else if (*iso_m) {
        const auto m = MultisetPoset{}.parse(o.multiset);
        const auto image = multiset_to_integer(m).get_str();
        if (o.json) {
          detail::emit(out, ordered_json{{"multiset", MultisetPoset{}.format(m)}, {"integer", image}});
        } else {
          out << image << '\n';
        }
      } else {
        throw error(errc::invalid_input, "isomap needs --n or --m");
      }
    } else {
      const auto handle = detail::resolve_poset(o);
      std::visit([&](const auto& p) { detail::dispatch(cmd, p, o, out); }, handle);
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return is_domain_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace posetlab::cli
