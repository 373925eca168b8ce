#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "posetlab/error.hpp"

namespace posetlab {

/// Exact complex scalar with rational real and imaginary parts.
///
/// Both parts are kept in lowest terms with a positive denominator, so two
/// scalars are equal exactly when their parts compare equal.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit by design of numeric literals
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_integer() const noexcept {
    return is_real() && re_.get_den() == 1;
  }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw error(errc::invalid_input, "division by zero");
    if (is_real() && o.is_real()) {
      re_ /= o.re_;
      return *this;
    }
    const mpq_class n = o.norm();
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "p/q" or "p", followed by "+r/si" / "-r/si" when the
  /// imaginary part is nonzero. Examples: "1", "-2/3", "0+1i", "1/2-3/4i".
  std::string to_string() const {
    std::string out = re_.get_str();
    if (sgn(im_) != 0) {
      out += sgn(im_) > 0 ? "+" : "-";
      out += mpq_class(abs(im_)).get_str();
      out += 'i';
    }
    return out;
  }

  /// Parses the canonical text format; whitespace anywhere is ignored.
  static GaussianRational parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw error(errc::invalid_input, "empty scalar");

    if (s.back() != 'i') return {parse_rational(s), mpq_class(0)};

    s.pop_back();
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') {
        split = k;
        break;
      }
    }
    std::string re_text = split == std::string::npos ? "0" : s.substr(0, split);
    std::string im_text = split == std::string::npos ? s : s.substr(split);
    if (im_text.empty() || im_text == "+" || im_text == "-") im_text += "1";
    return {parse_rational(re_text), parse_rational(im_text)};
  }

 private:
  static mpq_class parse_rational(std::string s) {
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    const auto valid = [](std::string_view part, bool allow_sign) {
      if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
      return !part.empty() &&
             std::all_of(part.begin(), part.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    const auto slash = s.find('/');
    const bool ok = slash == std::string::npos
                        ? valid(s, true)
                        : valid(std::string_view(s).substr(0, slash), true) &&
                              valid(std::string_view(s).substr(slash + 1), false);
    if (!ok) throw error(errc::invalid_input, "malformed scalar '" + s + "'");
    mpq_class q;
    q.set_str(s, 10);
    if (q.get_den() == 0) throw error(errc::invalid_input, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }

  mpq_class re_{0};
  mpq_class im_{0};
};

using Scalar = GaussianRational;

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& s) {
  return os << s.to_string();
}

}  // namespace posetlab
