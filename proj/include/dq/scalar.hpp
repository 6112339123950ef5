#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "dq/errors.hpp"

namespace dq {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" (decimal integers). Throws InputError.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t k = start; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/') {
      if (seen_slash) throw InputError("malformed rational '" + std::string(text) + "'");
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw InputError("malformed rational '" + std::string(text) + "'");
  std::string body(text.substr(text[0] == '+' ? 1 : 0));
  Rational q;
  if (q.set_str(body, 10) != 0) throw InputError("malformed rational '" + body + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + body + "'");
  q.canonicalize();
  return q;
}

/// Exact Gaussian rational re + im*i.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T value) : re_(static_cast<long>(value)) {}  // NOLINT(implicit)
  explicit Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    if (sgn(norm) == 0) throw InputError("division by zero");
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Integer power, n >= 0.
  Scalar pow(int n) const {
    Scalar result(1), base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) result *= base;
      base *= base;
    }
    return result;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Report form: "3/2", "1/4i", "3/2+1/4i", "-1i", "0".
inline std::string to_string(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  std::string im = to_string(s.im()) + "i";
  if (sgn(s.re()) == 0) return im;
  return to_string(s.re()) + (sgn(s.im()) > 0 ? "+" : "") + im;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

/// Inverse of to_string(Scalar); also accepts "i" and "-i".
inline Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw InputError("empty scalar literal");
  if (text.back() != 'i') return Scalar(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag = [](std::string_view s) -> Rational {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_rational(s);
  };
  if (split == std::string_view::npos) return Scalar(Rational(0), imag(body));
  return Scalar(parse_rational(body.substr(0, split)), imag(body.substr(split)));
}

}  // namespace dq
