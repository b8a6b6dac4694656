#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "skeinkit/f8.hpp"
#include "skeinkit/laurent.hpp"

namespace skeinkit {

// Minimal commutative-ring surface used by the state-sum engine and the
// axiom checks.
template <class R>
concept Ring = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { ring_one(a) } -> std::convertible_to<R>;
  { ring_zero(a) } -> std::convertible_to<R>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

// Compass ray separating the two dotted ends of a bicolored crossing.
enum class Direction : std::uint8_t { N = 0, S = 1, E = 2, W = 3 };

inline constexpr std::array<Direction, 4> kDirections{Direction::N, Direction::S, Direction::E,
                                                      Direction::W};

char direction_letter(Direction d);
Direction direction_from_letter(char c);

// Weights of the two smoothings of one crossing: h multiplies the H
// (orientation-preserving) smoothing, v the V smoothing.
template <Ring R>
struct SmoothingPair {
  R h;
  R v;
};

// The sixteen skein coefficients plus the loop value d. positive[x] holds
// (a_x, b_x), negative[x] holds (a'_x, b'_x).
template <Ring R>
struct CoefficientScheme {
  std::string family;
  std::array<SmoothingPair<R>, 4> positive;
  std::array<SmoothingPair<R>, 4> negative;
  R d;

  const SmoothingPair<R>& at(Direction dir, int sign) const {
    return sign > 0 ? positive[static_cast<int>(dir)] : negative[static_cast<int>(dir)];
  }
  SmoothingPair<R>& at(Direction dir, int sign) {
    return sign > 0 ? positive[static_cast<int>(dir)] : negative[static_cast<int>(dir)];
  }

  // Coefficient by name: "a_n", "b'_w", or "d".
  const R& named(std::string_view name) const;
  R& named(std::string_view name);
};

enum class SchemeFamily { symbolic, nor };

SchemeFamily scheme_family_from_string(std::string_view name);

// Laurent monomials in a, b, n, w, e with n = s and d = -a/b - b/a.
CoefficientScheme<LaurentPoly> make_symbolic_scheme();
// Values in Z2[t]/(1+t+t^3) with d = 1 + t + t^2.
CoefficientScheme<F8> make_nor_scheme();

bool is_unit(const LaurentPoly& p);
bool is_unit(const F8& u);

template <Ring R>
bool all_units(const CoefficientScheme<R>& s) {
  for (int i = 0; i < 4; ++i) {
    if (!is_unit(s.positive[i].h) || !is_unit(s.positive[i].v) || !is_unit(s.negative[i].h) ||
        !is_unit(s.negative[i].v)) {
      return false;
    }
  }
  return true;
}

namespace detail {
struct CoefficientName {
  bool is_d = false;
  bool is_b = false;
  bool primed = false;
  Direction dir = Direction::N;
};
CoefficientName parse_coefficient_name(std::string_view name);
}  // namespace detail

template <Ring R>
const R& CoefficientScheme<R>::named(std::string_view name) const {
  auto c = detail::parse_coefficient_name(name);
  if (c.is_d) return d;
  const auto& pair = at(c.dir, c.primed ? -1 : 1);
  return c.is_b ? pair.v : pair.h;
}

template <Ring R>
R& CoefficientScheme<R>::named(std::string_view name) {
  auto c = detail::parse_coefficient_name(name);
  if (c.is_d) return d;
  auto& pair = at(c.dir, c.primed ? -1 : 1);
  return c.is_b ? pair.v : pair.h;
}

// e <-> w swap on the enhanced ring.
LaurentPoly bar(const LaurentPoly& p);

}  // namespace skeinkit
