#include "skelcov/rational.hpp"

#include <cctype>

namespace skelcov {

Rational Rational::parse(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };

  auto parse_ll = [&](const std::string& part) -> long long {
    if (part.empty()) bad();
    std::size_t i = 0;
    if (part[0] == '-' || part[0] == '+') i = 1;
    if (i == part.size()) bad();
    for (std::size_t j = i; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j]))) bad();
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size()) bad();
      return v;
    } catch (const std::out_of_range&) {
      throw std::overflow_error("rational literal out of range: '" + s + "'");
    }
  };

  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_ll(s));
  return Rational(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
}

}  // namespace skelcov
