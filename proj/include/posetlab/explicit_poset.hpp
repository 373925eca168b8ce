#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetlab/error.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

/// Finite poset given by named elements and cover pairs. Reachability is
/// closed transitively at construction; the handle is immutable afterwards
/// and safe to share across threads.
class ExplicitPoset {
 public:
  using element_type = ExplicitElement;
  static constexpr Family family = Family::explicit_poset;

  /// Validates the covers and builds the order. Elements are renumbered into
  /// a linear extension (ties broken by document order), which becomes the
  /// canonical element order.
  static ExplicitPoset from_covers(const std::vector<std::string>& elements,
                                   const std::vector<std::pair<std::string, std::string>>& covers,
                                   std::string source = {}) {
    const std::size_t n = elements.size();
    std::unordered_map<std::string, std::uint32_t> doc_index;
    for (std::size_t k = 0; k < n; ++k) {
      if (elements[k].empty()) throw error(errc::invalid_input, "element identifiers must be nonempty");
      if (!doc_index.emplace(elements[k], static_cast<std::uint32_t>(k)).second) {
        throw error(errc::duplicate_element, elements[k]);
      }
    }

    std::vector<std::vector<std::uint32_t>> up(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [lo, hi] : covers) {
      auto a = doc_index.find(lo);
      auto b = doc_index.find(hi);
      if (a == doc_index.end()) throw error(errc::unknown_element_in_cover, lo);
      if (b == doc_index.end()) throw error(errc::unknown_element_in_cover, hi);
      up[a->second].push_back(b->second);
      ++indegree[b->second];
    }

    // Kahn's algorithm; the min-heap keeps the extension deterministic.
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    std::size_t minimal = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      if (indegree[k] == 0) {
        ready.push(k);
        ++minimal;
      }
    }
    std::vector<std::uint32_t> order;
    order.reserve(n);
    while (!ready.empty()) {
      const auto k = ready.top();
      ready.pop();
      order.push_back(k);
      for (auto j : up[k]) {
        if (--indegree[j] == 0) ready.push(j);
      }
    }
    if (order.size() != n) throw error(errc::cyclic_covers, "cover relation contains a cycle");
    if (minimal != 1) {
      throw error(errc::no_unique_bottom, std::to_string(minimal) + " minimal elements");
    }

    auto data = std::make_shared<Data>();
    data->source = std::move(source);
    std::vector<std::uint32_t> rank(n);
    for (std::uint32_t r = 0; r < n; ++r) {
      rank[order[r]] = r;
      data->names.push_back(elements[order[r]]);
      data->index.emplace(elements[order[r]], r);
    }
    data->words = (n + 63) / 64;
    data->reach.assign(n * data->words, 0);
    for (std::size_t r = n; r-- > 0;) {
      data->set(r, r);
      for (auto j : up[order[r]]) {
        const std::size_t target = rank[j];
        for (std::size_t w = 0; w < data->words; ++w) {
          data->reach[r * data->words + w] |= data->reach[target * data->words + w];
        }
      }
    }
    return ExplicitPoset(std::move(data));
  }

  /// {"elements": [...], "covers": [[lo, hi], ...]}
  static ExplicitPoset from_json(const nlohmann::json& doc, std::string source = {}) {
    try {
      std::vector<std::string> elements = doc.at("elements").get<std::vector<std::string>>();
      std::vector<std::pair<std::string, std::string>> covers;
      for (const auto& pair : doc.at("covers")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw error(errc::invalid_input, "each cover must be a two-element array");
        }
        covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      }
      return from_covers(elements, covers, std::move(source));
    } catch (const nlohmann::json::exception& e) {
      throw error(errc::invalid_input, std::string("malformed poset document: ") + e.what());
    }
  }

  static ExplicitPoset load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::invalid_input, "cannot open " + path);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw error(errc::invalid_input, path + ": " + e.what());
    }
    return from_json(doc, path);
  }

  std::string name() const { return data_->source.empty() ? "explicit" : data_->source; }
  const std::string& source() const { return data_->source; }
  std::size_t size() const { return data_->names.size(); }
  const std::string& label(ExplicitElement x) const { return data_->names.at(x.index); }

  bool contains(ExplicitElement x) const { return x.index < size(); }
  bool leq(ExplicitElement x, ExplicitElement y) const { return data_->test(x.index, y.index); }
  ExplicitElement bottom() const { return {0}; }

  std::vector<ExplicitElement> interval_elements(ExplicitElement x, ExplicitElement y, std::size_t cap) const {
    std::vector<ExplicitElement> out;
    for (std::uint32_t k = x.index; k <= y.index; ++k) {
      if (leq(x, {k}) && leq({k}, y)) out.push_back({k});
    }
    detail::check_cap(out.size(), cap);
    return out;
  }

  /// Explicit posets are finite; every bound selects the whole poset.
  std::vector<ExplicitElement> bounded_window(std::uint64_t, std::size_t cap) const {
    detail::check_cap(size(), cap);
    std::vector<ExplicitElement> out(size());
    for (std::uint32_t k = 0; k < size(); ++k) out[k] = {k};
    return out;
  }
  bool in_bound(ExplicitElement, std::uint64_t) const { return true; }

  std::optional<ExplicitElement> successor(ExplicitElement x) const {
    if (x.index + 1 >= size()) return std::nullopt;
    return ExplicitElement{x.index + 1};
  }

  std::string format(ExplicitElement x) const { return label(x); }
  ExplicitElement parse(std::string_view text) const {
    auto it = data_->index.find(std::string(text));
    if (it == data_->index.end()) throw error(errc::invalid_element, "unknown element '" + std::string(text) + "'");
    return {it->second};
  }

  /// Document listing every strictly comparable pair as a cover; reloads to the same order.
  nlohmann::json to_json() const {
    nlohmann::json covers = nlohmann::json::array();
    for (std::uint32_t a = 0; a < size(); ++a) {
      for (std::uint32_t b = a + 1; b < size(); ++b) {
        if (leq({a}, {b})) covers.push_back({label({a}), label({b})});
      }
    }
    return {{"elements", data_->names}, {"covers", covers}};
  }

  friend bool operator==(const ExplicitPoset& a, const ExplicitPoset& b) { return a.data_ == b.data_; }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::uint64_t> reach;  // row r: bitset of elements >= r
    std::size_t words = 0;
    std::string source;

    void set(std::size_t r, std::size_t c) { reach[r * words + c / 64] |= std::uint64_t{1} << (c % 64); }
    bool test(std::size_t r, std::size_t c) const { return reach[r * words + c / 64] >> (c % 64) & 1U; }
  };

  explicit ExplicitPoset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

}  // namespace posetlab
