#pragma once

// Recursive-descent reader shared by the element and polynomial parsers.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "z4u/errors.hpp"
#include "z4u/ring.hpp"

namespace z4u::detail {

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  std::size_t pos() const { return i_; }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  /// Nonnegative decimal integer; overflow-safe because only the value mod 4
  /// matters for coefficients. Exponents use read_exponent.
  int read_int_mod4() {
    if (!at_digit()) fail("expected integer");
    int r = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      r = (r * 10 + (s_[i_] - '0')) % 4;
      ++i_;
    }
    return r;
  }

  std::size_t read_exponent() {
    if (!at_digit()) fail("expected exponent");
    std::size_t r = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      r = r * 10 + static_cast<std::size_t>(s_[i_] - '0');
      if (r > 1'000'000) fail("exponent too large");
      ++i_;
    }
    return r;
  }

  /// rterm := int ['u'] | 'u'
  RElem read_rterm() {
    if (accept('u')) return kU;
    const int k = read_int_mod4();
    if (accept('u')) return RElem(0, k);
    return RElem(k, 0);
  }

  /// relem := ['-'] rterm (('+'|'-') rterm)*
  RElem read_relem_sum() {
    RElem acc{};
    bool neg = accept('-');
    for (;;) {
      RElem t = read_rterm();
      acc += neg ? -t : t;
      if (accept('+')) {
        neg = false;
      } else if (accept('-')) {
        neg = true;
      } else {
        return acc;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace z4u::detail
