#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetlab/error.hpp"
#include "posetlab/order.hpp"
#include "posetlab/scalar.hpp"
#include "posetlab/transforms.hpp"
#include "posetlab/uncertainty.hpp"

namespace posetlab {

using ordered_json = nlohmann::ordered_json;

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_input, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::invalid_input, path + ": " + e.what());
  }
}

/// Label written into function documents: the built-in name, or the source
/// path of an explicit poset.
template <Poset P>
std::string poset_label(const P& p) {
  return p.name();
}

/// {"poset": <label>, "values": {"<element>": "<scalar>", ...}}, entries in
/// canonical element order.
template <Poset P>
ordered_json function_document(const FiniteSupportFunction<P>& f) {
  ordered_json values = ordered_json::object();
  for (const auto& [x, v] : f.entries()) values[f.poset().format(x)] = v.to_string();
  ordered_json doc;
  doc["poset"] = poset_label(f.poset());
  doc["values"] = std::move(values);
  return doc;
}

template <Poset P>
FiniteSupportFunction<P> parse_function_document(const P& p, const nlohmann::json& doc) {
  FiniteSupportFunction<P> f(p);
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object()) {
    throw error(errc::invalid_input, "function document needs a \"values\" object");
  }
  for (const auto& [key, value] : doc["values"].items()) {
    Scalar s;
    if (value.is_string()) {
      s = Scalar::parse(value.template get<std::string>());
    } else if (value.is_number_integer()) {
      s = Scalar(value.template get<long>());
    } else {
      throw error(errc::invalid_input, "value for '" + key + "' must be a scalar string");
    }
    const auto x = p.parse(key);
    if (!f(x).is_zero()) throw error(errc::invalid_input, "element '" + key + "' listed twice");
    f.set(x, s);
  }
  return f;
}

template <Poset P>
ordered_json element_list_json(const P& p, const std::vector<element_t<P>>& xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(p.format(x));
  return out;
}

inline ordered_json optional_scalar_json(const std::optional<Scalar>& s) {
  return s ? ordered_json(s->to_string()) : ordered_json(nullptr);
}

template <Poset P>
ordered_json report_json(const P& p, const WitnessCertificate<P>& c) {
  ordered_json j;
  j["y"] = p.format(c.y);
  j["avoid_set"] = element_list_json(p, c.avoid_set);
  j["z"] = p.format(c.z);
  j["cond_disjoint"] = c.cond_disjoint;
  j["cond_factorize"] = c.cond_factorize;
  j["cond_nonzero"] = c.cond_nonzero;
  j["mu_yz"] = c.mu_yz.to_string();
  j["predicted_fz"] = optional_scalar_json(c.predicted_fz);
  j["observed_fz"] = optional_scalar_json(c.observed_fz);
  return j;
}

template <Poset P>
ordered_json report_json(const P& p, const SupportCensus<P>& c) {
  ordered_json j;
  j["x"] = p.format(c.x);
  j["function_kind"] = c.function_kind;
  j["window"] = c.window;
  j["members"] = element_list_json(p, c.members);
  j["size"] = c.members.size();
  j["verdict"] = std::string(to_string(c.verdict));
  j["certificate_note"] = c.certificate_note;
  return j;
}

template <Poset P>
ordered_json report_json(const P& p, const PairSearchResult<P>& r) {
  ordered_json j;
  j["window"] = r.window;
  j["shell"] = r.shell;
  j["window_elements"] = element_list_json(p, r.window_elements);
  j["equations"] = r.equations;
  j["nullspace_dimension"] = r.nullspace_dimension;
  if (r.candidate) {
    j["candidate"] = {{"f", function_document(r.candidate->f)}, {"g", function_document(r.candidate->g)}};
  } else {
    j["candidate"] = nullptr;
  }
  j["caveat"] = r.caveat;
  return j;
}

template <Poset P>
ordered_json report_json(const P& p, const ConjectureReport<P>& r) {
  ordered_json j;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["inverse_intervals_checked"] = r.intervals_checked;
  ordered_json s = ordered_json::array();
  for (const auto& c : r.s_census) s.push_back(report_json(p, c));
  ordered_json t = ordered_json::array();
  for (const auto& c : r.t_census) t.push_back(report_json(p, c));
  j["s_census"] = std::move(s);
  j["t_census"] = std::move(t);
  j["search"] = report_json(p, r.search);
  return j;
}

}  // namespace posetlab
