#include "skeinkit/laurent.hpp"

#include <cctype>
#include <sstream>

#include "skeinkit/error.hpp"

namespace skeinkit {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw AlgebraError("too many variables: " + std::to_string(names_.size()));
  }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VariableSetPtr enhanced_variables() {
  static const auto vars = std::make_shared<const VariableSet>(
      std::vector<std::string>{"a", "b", "n", "w", "e"});
  return vars;
}

VariableSetPtr tricolor_variables() {
  static const auto vars = std::make_shared<const VariableSet>(std::vector<std::string>{"x", "y"});
  return vars;
}

VariableSetPtr kauffman_variables() {
  static const auto vars = std::make_shared<const VariableSet>(std::vector<std::string>{"A"});
  return vars;
}

LaurentPoly::LaurentPoly(VariableSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw AlgebraError("null variable set");
}

LaurentPoly LaurentPoly::constant(VariableSetPtr vars, const Integer& c) {
  return monomial(std::move(vars), c, Exponents{});
}

LaurentPoly LaurentPoly::monomial(VariableSetPtr vars, const Integer& c, const Exponents& exps) {
  LaurentPoly p(std::move(vars));
  for (std::size_t i = p.vars_->size(); i < kMaxVariables; ++i) {
    if (exps[i] != 0) throw AlgebraError("exponent on a variable outside the ring");
  }
  if (c != 0) p.terms_.emplace(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(VariableSetPtr vars, std::string_view name, int power) {
  auto idx = vars->index_of(name);
  if (!idx) throw AlgebraError("unknown variable '" + std::string(name) + "'");
  Exponents e{};
  e[*idx] = power;
  return monomial(std::move(vars), 1, e);
}

bool LaurentPoly::is_unit() const {
  if (!is_monomial()) return false;
  const Integer& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

void LaurentPoly::require_same_ring(const LaurentPoly& other) const {
  if (vars_ != other.vars_ && *vars_ != *other.vars_) {
    throw AlgebraError("polynomials over different variable sets");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  require_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, Integer(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  lhs.require_same_ring(rhs);
  LaurentPoly r(lhs.vars_);
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      Exponents e{};
      for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = e1[i] + e2[i];
      auto [it, inserted] = r.terms_.try_emplace(e, Integer(c1 * c2));
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit()) throw AlgebraError("inverse of a non-unit Laurent polynomial: " + to_string());
  const auto& [e, c] = *terms_.begin();
  Exponents inv{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) inv[i] = -e[i];
  return monomial(vars_, c, inv);  // c is +-1, its own inverse
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_unit()) {
      throw AlgebraError("negative power of a non-monomial: " + to_string());
    }
    return inverse().pow(-k);
  }
  if (is_monomial()) {
    const auto& [e, c] = *terms_.begin();
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = e[i] * k;
    return monomial(vars_, boost::multiprecision::pow(c, static_cast<unsigned>(k)), r);
  }
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly monomial_pow(const LaurentPoly& m, int k) {
  if (k < 0 && !m.is_monomial()) {
    throw AlgebraError("negative power of a non-monomial: " + m.to_string());
  }
  if (k < 0 && !m.is_unit()) {
    // c*x^e with |c| > 1 has no inverse over the integers.
    throw AlgebraError("negative power of a monomial with non-unit coefficient: " + m.to_string());
  }
  return m.pow(k);
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, std::string>& renaming) const {
  std::array<std::size_t, kMaxVariables> target{};
  std::vector<bool> hit(vars_->size(), false);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    target[i] = i;
    auto it = renaming.find(vars_->name(i));
    if (it != renaming.end()) {
      auto idx = vars_->index_of(it->second);
      if (!idx) throw AlgebraError("substitution target '" + it->second + "' not in ring");
      target[i] = *idx;
    }
    if (hit[target[i]]) throw AlgebraError("substitution is not a bijection");
    hit[target[i]] = true;
  }
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents moved{};
    for (std::size_t i = 0; i < vars_->size(); ++i) moved[target[i]] = e[i];
    r.terms_.emplace(moved, c);
  }
  return r;
}

std::complex<double> LaurentPoly::evaluate(
    const std::map<std::string, std::complex<double>>& values) const {
  std::vector<std::complex<double>> point(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = values.find(vars_->name(i));
    if (it == values.end()) throw AlgebraError("no value for variable '" + vars_->name(i) + "'");
    point[i] = it->second;
  }
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    std::complex<double> term(c.convert_to<double>(), 0.0);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0.0) {
        throw AlgebraError("zero substituted into a negative power of " + vars_->name(i));
      }
      term *= std::pow(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << it->second;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (it->first[i] != 0) out << '*' << vars_->name(i) << '^' << it->first[i];
    }
  }
  return out.str();
}

int LaurentPoly::max_abs_degree(std::string_view name) const {
  auto idx = vars_->index_of(name);
  if (!idx) throw AlgebraError("unknown variable '" + std::string(name) + "'");
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::abs(e[*idx]));
  return best;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.vars_ != rhs.vars_ && *lhs.vars_ != *rhs.vars_) return false;
  return lhs.terms_ == rhs.terms_;
}

namespace {

class TermScanner {
 public:
  TermScanner(const VariableSetPtr& vars, std::string_view text) : vars_(vars), text_(text) {}

  LaurentPoly run() {
    LaurentPoly sum(vars_);
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial text");
    sum += term();
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      LaurentPoly t = term();
      if (op == '+') sum += t; else sum -= t;
    }
    return sum;
  }

 private:
  LaurentPoly term() {
    skip_space();
    Integer coef = 1;
    bool negative = false;
    while (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') negative = !negative;
      ++pos_;
      skip_space();
    }
    Exponents e{};
    bool need_factor = true;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coef = Integer(digits());
      need_factor = false;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        need_factor = true;
      } else {
        return LaurentPoly::constant(vars_, negative ? Integer(-coef) : coef);
      }
    }
    while (need_factor) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      if (start == pos_) fail("expected variable name");
      std::string name(text_.substr(start, pos_ - start));
      auto idx = vars_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      int power = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
          neg = true;
          ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
        power = std::stoi(digits());
        if (neg) power = -power;
      }
      e[*idx] += power;
      skip_space();
      need_factor = pos_ < text_.size() && text_[pos_] == '*';
      if (need_factor) ++pos_;
    }
    return LaurentPoly::monomial(vars_, negative ? Integer(-coef) : coef, e);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial text, offset " + std::to_string(pos_) + ": " + what);
  }

  const VariableSetPtr& vars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(VariableSetPtr vars, std::string_view text) {
  return TermScanner(vars, text).run();
}

}  // namespace skeinkit
