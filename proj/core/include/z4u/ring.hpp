#pragma once

// Arithmetic in Z4 and in R = Z4 + uZ4 with u^2 = 0.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace z4u {

/// Residue modulo 4, always stored canonically in {0,1,2,3}.
class Z4 {
 public:
  constexpr Z4() = default;
  constexpr Z4(int v) : v_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

  constexpr std::uint8_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_unit() const { return (v_ & 1u) != 0; }

  friend constexpr Z4 operator+(Z4 x, Z4 y) { return Z4(x.v_ + y.v_); }
  friend constexpr Z4 operator-(Z4 x, Z4 y) { return Z4(x.v_ + 4 - y.v_); }
  friend constexpr Z4 operator*(Z4 x, Z4 y) { return Z4(x.v_ * y.v_); }
  constexpr Z4 operator-() const { return Z4(4 - v_); }
  constexpr Z4& operator+=(Z4 o) { return *this = *this + o; }
  constexpr Z4& operator-=(Z4 o) { return *this = *this - o; }
  constexpr Z4& operator*=(Z4 o) { return *this = *this * o; }

  friend constexpr bool operator==(Z4, Z4) = default;
  friend constexpr auto operator<=>(Z4, Z4) = default;

 private:
  std::uint8_t v_ = 0;
};

/// Classical Lee weight on Z4: 0,1,2,1.
constexpr unsigned lee_weight(Z4 x) {
  constexpr std::array<unsigned, 4> table{0, 1, 2, 1};
  return table[x.value()];
}

/// Element a + ub of R.
struct RElem {
  Z4 a;
  Z4 b;

  constexpr RElem() = default;
  constexpr RElem(int a_, int b_ = 0) : a(a_), b(b_) {}
  constexpr RElem(Z4 a_, Z4 b_ = Z4{}) : a(a_), b(b_) {}

  constexpr bool is_zero() const { return a.is_zero() && b.is_zero(); }
  /// a + ub is a unit iff a is a unit of Z4.
  constexpr bool is_unit() const { return a.is_unit(); }

  friend constexpr RElem operator+(RElem x, RElem y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr RElem operator-(RElem x, RElem y) { return {x.a - y.a, x.b - y.b}; }
  // (a+ub)(c+ud) = ac + u(ad+bc); the u^2 term vanishes.
  friend constexpr RElem operator*(RElem x, RElem y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  constexpr RElem operator-() const { return {-a, -b}; }
  constexpr RElem& operator+=(RElem o) { return *this = *this + o; }
  constexpr RElem& operator-=(RElem o) { return *this = *this - o; }
  constexpr RElem& operator*=(RElem o) { return *this = *this * o; }

  friend constexpr bool operator==(RElem, RElem) = default;
  friend constexpr auto operator<=>(RElem, RElem) = default;
};

inline constexpr RElem kU{0, 1};
inline constexpr RElem kOnePlus2u{1, 2};
inline constexpr RElem kThreePlus2u{3, 2};

/// All 16 elements in (a, b) lexicographic order.
constexpr std::array<RElem, 16> all_elements() {
  std::array<RElem, 16> out{};
  for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(i)] = RElem(i / 4, i % 4);
  return out;
}

/// Throws NonUnit for non-units. Uses (a+ub)^-1 = a^-1 - u a^-2 b.
RElem inverse(RElem x);

/// Element Gray map a+ub -> (b, 2a+b).
constexpr std::pair<Z4, Z4> gray(RElem x) { return {x.b, Z4(2) * x.a + x.b}; }

constexpr unsigned lee_weight(RElem x) {
  auto [first, second] = gray(x);
  return lee_weight(first) + lee_weight(second);
}

std::string to_string(Z4 x);
/// Renders a+bu with zero terms omitted and 1u written as u, e.g. "3+2u", "2u", "u".
std::string to_string(RElem x);

/// Parses the to_string grammar with optional whitespace and an optional
/// enclosing pair of parentheses. Integers are reduced mod 4.
RElem parse_relem(std::string_view text);

}  // namespace z4u
