#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetlab {

enum class errc {
  // Validation failures: malformed input, rejected before any mathematics runs.
  invalid_element,
  invalid_input,
  bound_too_large,
  window_not_nested,
  cyclic_covers,
  no_unique_bottom,
  duplicate_element,
  unknown_element_in_cover,
  // Domain failures: well-formed input that violates a mathematical precondition.
  not_comparable,
  not_strictly_above,
  not_invertible,
  poset_mismatch,
  no_closed_form,
  zero_function,
  insufficient_witnesses,
  not_inverses,
  element_outside_window,
  overflow,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_element: return "invalid element";
    case errc::invalid_input: return "invalid input";
    case errc::bound_too_large: return "bound too large";
    case errc::window_not_nested: return "window not nested";
    case errc::cyclic_covers: return "cyclic covers";
    case errc::no_unique_bottom: return "no unique bottom";
    case errc::duplicate_element: return "duplicate element";
    case errc::unknown_element_in_cover: return "unknown element in cover";
    case errc::not_comparable: return "not comparable";
    case errc::not_strictly_above: return "not strictly above";
    case errc::not_invertible: return "not invertible";
    case errc::poset_mismatch: return "poset mismatch";
    case errc::no_closed_form: return "no closed form";
    case errc::zero_function: return "zero function";
    case errc::insufficient_witnesses: return "insufficient witnesses";
    case errc::not_inverses: return "not inverses";
    case errc::element_outside_window: return "element outside window";
    case errc::overflow: return "overflow";
  }
  return "unknown error";
}

/// True for errors caused by a violated mathematical precondition rather
/// than by malformed input.
constexpr bool is_domain_error(errc code) noexcept {
  return code >= errc::not_comparable;
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace posetlab
