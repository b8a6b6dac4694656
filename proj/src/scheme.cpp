#include "skeinkit/scheme.hpp"

#include "skeinkit/error.hpp"

namespace skeinkit {

char direction_letter(Direction d) {
  switch (d) {
    case Direction::N: return 'N';
    case Direction::S: return 'S';
    case Direction::E: return 'E';
    case Direction::W: return 'W';
  }
  return '?';
}

Direction direction_from_letter(char c) {
  switch (c) {
    case 'N': case 'n': return Direction::N;
    case 'S': case 's': return Direction::S;
    case 'E': case 'e': return Direction::E;
    case 'W': case 'w': return Direction::W;
    default: throw ParseError(std::string("unknown direction '") + c + "'");
  }
}

namespace detail {

CoefficientName parse_coefficient_name(std::string_view name) {
  CoefficientName c;
  if (name == "d") {
    c.is_d = true;
    return c;
  }
  // a_n, b'_w, ...
  bool ok = name.size() >= 3 && (name[0] == 'a' || name[0] == 'b');
  std::size_t pos = 1;
  if (ok && name[pos] == '\'') {
    c.primed = true;
    ++pos;
  }
  ok = ok && name.size() == pos + 2 && name[pos] == '_';
  if (!ok) throw ParseError("bad coefficient name '" + std::string(name) + "'");
  c.is_b = name[0] == 'b';
  c.dir = direction_from_letter(name[pos + 1]);
  return c;
}

}  // namespace detail

SchemeFamily scheme_family_from_string(std::string_view name) {
  if (name == "symbolic") return SchemeFamily::symbolic;
  if (name == "nor") return SchemeFamily::nor;
  throw ParseError("unknown scheme '" + std::string(name) + "'");
}

CoefficientScheme<LaurentPoly> make_symbolic_scheme() {
  auto vars = enhanced_variables();
  auto a = LaurentPoly::variable(vars, "a");
  auto b = LaurentPoly::variable(vars, "b");
  auto n = LaurentPoly::variable(vars, "n");
  auto w = LaurentPoly::variable(vars, "w");
  auto e = LaurentPoly::variable(vars, "e");

  auto pair = [](LaurentPoly h, LaurentPoly v) { return SmoothingPair<LaurentPoly>{std::move(h), std::move(v)}; };
  CoefficientScheme<LaurentPoly> s{
      "symbolic",
      {pair(n * a, n * b), pair(n * a, n * b), pair(e * a, e * b), pair(w * a, w * b)},
      // a'_e = 1/(wa) and a'_w = 1/(ea): the primed east/west values invert
      // the opposite unprimed ones.
      {pair((n * a).inverse(), (n * b).inverse()), pair((n * a).inverse(), (n * b).inverse()),
       pair((w * a).inverse(), (w * b).inverse()), pair((e * a).inverse(), (e * b).inverse())},
      -(a * b.inverse()) - b * a.inverse()};
  return s;
}

CoefficientScheme<F8> make_nor_scheme() {
  const F8 one = F8::one();
  const F8 t = F8::t();
  const F8 t2 = t * t;
  using P = SmoothingPair<F8>;
  CoefficientScheme<F8> s{
      "nor",
      {P{one, t}, P{one, t}, P{one + t, t + t2}, P{one + t2, one}},
      {P{one, one + t2}, P{one, one + t2}, P{t, one}, P{t + t2, one + t}},
      one + t + t2};
  return s;
}

bool is_unit(const LaurentPoly& p) { return p.is_unit(); }
bool is_unit(const F8& u) { return !u.is_zero(); }

LaurentPoly bar(const LaurentPoly& p) { return p.substitute({{"e", "w"}, {"w", "e"}}); }

}  // namespace skeinkit
