#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skeinkit {

using Integer = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxVariables = 5;

// Exponent vector; entries beyond the ring's variable count stay zero.
using Exponents = std::array<int, kMaxVariables>;

// Ordered, closed set of variable names. Polynomials over different sets
// never mix.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

// {a, b, n, w, e}: the enhanced bracket ring.
VariableSetPtr enhanced_variables();
// {x, y}: the tricolor bracket ring.
VariableSetPtr tricolor_variables();
// {A}: the Kauffman bracket ring.
VariableSetPtr kauffman_variables();

// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
// Terms are kept in a map keyed by exponent vector; zero coefficients are
// never stored, so structural equality is ring equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Integer>;

  explicit LaurentPoly(VariableSetPtr vars);

  static LaurentPoly constant(VariableSetPtr vars, const Integer& c);
  static LaurentPoly monomial(VariableSetPtr vars, const Integer& c, const Exponents& exps);
  static LaurentPoly variable(VariableSetPtr vars, std::string_view name, int power = 1);

  // Parses the canonical text form, e.g. "-1*a^1*b^-1 + -1*a^-1*b^1". Also
  // accepts implicit unit coefficients ("a^2", "-b^-1") and bare "x" for x^1.
  static LaurentPoly parse(VariableSetPtr vars, std::string_view text);

  const VariableSetPtr& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // True for +-1 times a monomial, i.e. the units of the ring.
  bool is_unit() const;

  LaurentPoly zero() const { return LaurentPoly(vars_); }
  LaurentPoly one() const { return constant(vars_, 1); }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  // Negative powers require a unit (+-1 times a monomial).
  LaurentPoly pow(int k) const;
  // Inverse of a unit.
  LaurentPoly inverse() const;

  // Renames variables through a bijection of the variable set, e.g. {e->w, w->e}.
  // Unmapped variables are fixed.
  LaurentPoly substitute(const std::map<std::string, std::string>& renaming) const;

  // Numeric evaluation at a total assignment.
  std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& values) const;

  // Canonical text: terms in descending lexicographic exponent order, each as
  // coefficient*var^exp; "0" for the zero polynomial.
  std::string to_string() const;

  // Largest |exponent| of variable `name` across all terms; 0 for zero poly.
  int max_abs_degree(std::string_view name) const;

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

 private:
  void require_same_ring(const LaurentPoly& other) const;

  VariableSetPtr vars_;
  TermMap terms_;
};

LaurentPoly monomial_pow(const LaurentPoly& m, int k);

inline LaurentPoly ring_one(const LaurentPoly& like) { return like.one(); }
inline LaurentPoly ring_zero(const LaurentPoly& like) { return like.zero(); }

}  // namespace skeinkit
