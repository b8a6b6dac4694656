#include "skeinkit/f8.hpp"

#include <cctype>

#include "skeinkit/error.hpp"

namespace skeinkit {

F8 F8::inverse() const {
  if (is_zero()) throw AlgebraError("inverse of zero in F8");
  // The multiplicative group has order 7, so u^-1 = u^6.
  F8 r = one();
  for (int i = 0; i < 6; ++i) r *= *this;
  return r;
}

F8 F8::pow(int k) const {
  F8 base = k < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  F8 r = one();
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

std::string F8::to_string() const {
  std::string s;
  s += (bits_ & 1u) ? '1' : '0';
  s += (bits_ & 2u) ? "+1*t" : "+0*t";
  s += (bits_ & 4u) ? "+1*t^2" : "+0*t^2";
  return s;
}

F8 F8::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw ParseError("empty F8 text");
  std::uint8_t bits = 0;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t next = compact.find('+', pos);
    std::string term = compact.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (term.empty()) throw ParseError("F8 text '" + std::string(text) + "': empty term");
    unsigned coef = 1;
    std::string mono = term;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      auto star = term.find('*');
      std::string digits = term.substr(0, star);
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("F8 text '" + std::string(text) + "': bad coefficient");
      }
      coef = static_cast<unsigned>(std::stoul(digits)) & 1u;
      mono = star == std::string::npos ? "" : term.substr(star + 1);
    }
    unsigned degree = 0;
    if (mono == "") degree = 0;
    else if (mono == "t" || mono == "t^1") degree = 1;
    else if (mono == "t^2") degree = 2;
    else if (mono == "t^0") degree = 0;
    else throw ParseError("F8 text '" + std::string(text) + "': bad monomial '" + mono + "'");
    if (coef) bits ^= static_cast<std::uint8_t>(1u << degree);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return from_bits(bits);
}

}  // namespace skeinkit
