#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace skeinkit {

// Element of Z2[t]/(1 + t + t^3), stored as the coefficient bits c0 + c1*t + c2*t^2.
class F8 {
 public:
  constexpr F8() = default;
  static constexpr F8 from_bits(std::uint8_t bits) { return F8(static_cast<std::uint8_t>(bits & 7u)); }
  static constexpr F8 zero() { return F8(0); }
  static constexpr F8 one() { return F8(1); }
  static constexpr F8 t() { return F8(2); }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr F8 operator+(F8 a, F8 b) { return F8(a.bits_ ^ b.bits_); }
  // Characteristic 2: subtraction is addition.
  friend constexpr F8 operator-(F8 a, F8 b) { return F8(a.bits_ ^ b.bits_); }
  constexpr F8 operator-() const { return *this; }
  friend constexpr F8 operator*(F8 a, F8 b) {
    unsigned prod = 0;
    for (unsigned i = 0; i < 3; ++i) {
      if (b.bits_ & (1u << i)) prod ^= static_cast<unsigned>(a.bits_) << i;
    }
    // t^4 = t + t^2, t^3 = 1 + t
    if (prod & 0x10u) prod ^= 0x10u | 0x06u;
    if (prod & 0x08u) prod ^= 0x08u | 0x03u;
    return F8(static_cast<std::uint8_t>(prod));
  }
  F8& operator+=(F8 o) { return *this = *this + o; }
  F8& operator-=(F8 o) { return *this = *this - o; }
  F8& operator*=(F8 o) { return *this = *this * o; }

  friend constexpr bool operator==(F8, F8) = default;

  // Throws AlgebraError for zero.
  F8 inverse() const;
  // Negative exponents go through the inverse.
  F8 pow(int k) const;

  // Fixed-width text "c0+c1*t+c2*t^2", e.g. "1+0*t+1*t^2".
  std::string to_string() const;
  // Accepts the fixed-width form and sparse sums such as "1 + t^2", "t", "0".
  static F8 parse(std::string_view text);

 private:
  constexpr explicit F8(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

inline F8 ring_one(const F8&) { return F8::one(); }
inline F8 ring_zero(const F8&) { return F8::zero(); }

}  // namespace skeinkit
