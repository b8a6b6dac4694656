#include <doctest.h>

#include <random>

#include "skeinkit/error.hpp"
#include "skeinkit/f8.hpp"
#include "skeinkit/laurent.hpp"
#include "skeinkit/scheme.hpp"

using namespace skeinkit;

namespace {

LaurentPoly random_poly(std::mt19937& rng, const VariableSetPtr& vars) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-3, 3), count(0, 4);
  LaurentPoly p(vars);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e{};
    for (std::size_t v = 0; v < vars->size(); ++v) e[v] = expo(rng);
    p += LaurentPoly::monomial(vars, coef(rng), e);
  }
  return p;
}

LaurentPoly P(const std::string& text) { return LaurentPoly::parse(enhanced_variables(), text); }

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("laurent ring axioms on random polynomials") {
    std::mt19937 rng(2024);
    const auto vars = enhanced_variables();
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = random_poly(rng, vars), q = random_poly(rng, vars), r = random_poly(rng, vars);
      CHECK(p + q == q + p);
      CHECK(p * q == q * p);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p - p == p.zero());
      CHECK(p * p.one() == p);
      CHECK(LaurentPoly::parse(vars, p.to_string()) == p);
    }
  }

  TEST_CASE("difference of squares") {
    const auto vars = tricolor_variables();
    const auto x = LaurentPoly::variable(vars, "x");
    const auto xi = LaurentPoly::variable(vars, "x", -1);
    CHECK((x + xi) * (x - xi) == LaurentPoly::parse(vars, "x^2 - x^-2"));
  }

  TEST_CASE("loop value d has two terms") {
    const auto d = make_symbolic_scheme().d;
    CHECK(d.term_count() == 2);
    CHECK(d == P("-1*a^1*b^-1 + -1*a^-1*b^1"));
    CHECK(d.to_string() == "-1*a^1*b^-1 + -1*a^-1*b^1");
  }

  TEST_CASE("monomial powers") {
    CHECK(monomial_pow(P("-b*n^-1*a^-2"), 3) == P("-b^3*n^-3*a^-6"));
    CHECK(P("-b*n^-1*a^-2").pow(-2) == P("b^-2*n^2*a^4"));
    CHECK(P("a^2*w").inverse() * P("a^2*w") == P("1"));
    CHECK_THROWS_AS(P("a + b").inverse(), AlgebraError);
    CHECK_THROWS_AS(P("a + b").pow(-1), AlgebraError);
  }

  TEST_CASE("mixing variable sets is an error") {
    const auto x = LaurentPoly::variable(tricolor_variables(), "x");
    const auto a = LaurentPoly::variable(enhanced_variables(), "a");
    CHECK_THROWS_AS(x + a, AlgebraError);
    CHECK_THROWS_AS(x * a, AlgebraError);
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(P("a^"), ParseError);
    CHECK_THROWS_AS(P("q^2"), ParseError);
    CHECK_THROWS_AS(P("2*a +"), ParseError);
    CHECK(P("0").is_zero());
  }

  TEST_CASE("bar swaps e and w") {
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
      const auto p = random_poly(rng, enhanced_variables());
      CHECK(bar(bar(p)) == p);
    }
    CHECK(bar(P("e^2*w^-1")) == P("w^2*e^-1"));
    const auto d = make_symbolic_scheme().d;
    CHECK(bar(d) == d);
  }

  TEST_CASE("numeric evaluation") {
    const auto vars = kauffman_variables();
    const auto a4 = LaurentPoly::variable(vars, "A", 4);
    const auto v = a4.evaluate({{"A", {0.0, 1.0}}});
    CHECK(v.real() == doctest::Approx(1.0));
    CHECK(v.imag() == doctest::Approx(0.0));
    const auto s = LaurentPoly::parse(vars, "A^2 + A^-2").evaluate({{"A", {0.0, 1.0}}});
    CHECK(s.real() == doctest::Approx(-2.0));
  }

  TEST_CASE("F8 field laws") {
    for (int a = 0; a < 8; ++a) {
      const F8 x = F8::from_bits(static_cast<std::uint8_t>(a));
      CHECK(F8::parse(x.to_string()) == x);
      if (!x.is_zero()) CHECK(x * x.inverse() == F8::one());
      for (int b = 0; b < 8; ++b) {
        const F8 y = F8::from_bits(static_cast<std::uint8_t>(b));
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        for (int c = 0; c < 8; ++c) {
          const F8 z = F8::from_bits(static_cast<std::uint8_t>(c));
          CHECK(x * (y + z) == x * y + x * z);
          CHECK((x * y) * z == x * (y * z));
        }
      }
    }
    CHECK_THROWS_AS(F8::zero().inverse(), AlgebraError);
    // The multiplicative group is cyclic of order 7, generated by t.
    CHECK(F8::t().pow(7) == F8::one());
    CHECK(F8::t().pow(-1) == F8::parse("1 + t^2"));
  }

  TEST_CASE("F8 examples") {
    CHECK(F8::t() * F8::parse("t^2") == F8::parse("1 + t"));
    CHECK(F8::parse("1 + t^2").inverse() == F8::t());
    CHECK(F8::parse("1+t+t^2").to_string() == "1+1*t+1*t^2");
    // -a/b - b/a at a = 1, b = t, characteristic 2.
    const F8 a = F8::one(), b = F8::t();
    CHECK(a * b.inverse() + b * a.inverse() == F8::parse("1 + t + t^2"));
    CHECK_THROWS_AS(F8::parse("t^3"), ParseError);
  }

  TEST_CASE("symbolic scheme values") {
    const auto s = make_symbolic_scheme();
    CHECK(s.named("a'_e") == P("w^-1*a^-1"));
    CHECK(s.named("b'_e") == P("w^-1*b^-1"));
    CHECK(s.named("a_n") == s.named("a_s"));
    CHECK(s.named("b_n") == s.named("b_s"));
    CHECK(s.named("a_n") * s.named("a'_n") == P("1"));
    CHECK(all_units(s));
  }

  TEST_CASE("nor scheme values") {
    const auto s = make_nor_scheme();
    CHECK(s.named("a_w") == F8::parse("1 + t^2"));
    CHECK(s.named("b_w") == F8::one());
    CHECK(s.named("a_e") == F8::parse("1 + t"));
    CHECK(s.named("b_e") == F8::parse("t + t^2"));
    CHECK(s.d == F8::parse("1 + t + t^2"));
    CHECK(all_units(s));
  }

  TEST_CASE("coefficient names") {
    auto s = make_symbolic_scheme();
    CHECK_THROWS_AS(s.named("c_n"), ParseError);
    CHECK_THROWS_AS(s.named("a_q"), ParseError);
    s.named("b_w") = P("b^5");
    CHECK(s.at(Direction::W, 1).v == P("b^5"));
  }
}
