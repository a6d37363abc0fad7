#include "multiplihedra/rational.hpp"

#include <cctype>

namespace multiplihedra {

std::string format_rational(const Rat& value) {
  const Int num = numerator(value);
  const Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view("1")
                             : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  const Int d{std::string(den)};
  if (d == 0)
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  return Rat(Int{std::string(num)}, d);
}

std::string format_point(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace multiplihedra
