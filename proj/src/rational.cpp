#include "pentagon/rational.hpp"

#include <cctype>
#include <sstream>

#include "pentagon/errors.hpp"

namespace pentagon {

std::string format_rat(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

namespace {

Int parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size())
    throw parse_error("rational: missing digits in \"" + std::string(whole) + "\"");
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("rational: unexpected character '" + std::string(1, s[i]) +
                        "' in \"" + std::string(whole) + "\"");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, text));
  Int num = parse_int(text.substr(0, slash), text);
  Int den = parse_int(text.substr(slash + 1), text);
  if (den <= 0)
    throw parse_error("rational: denominator must be positive in \"" + std::string(text) + "\"");
  return Rat(num, den);
}

std::string approx_rat(const Rat& r) {
  std::ostringstream os;
  os.precision(6);
  os << static_cast<double>(r);
  return os.str();
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int v = 1;
  for (int i = 0; i < k; ++i) {
    v *= n - i;
    v /= i + 1;
  }
  return v;
}

Int falling_factorial(int n, int k) {
  Int v = 1;
  for (int i = 0; i < k; ++i) v *= n - i;
  return v;
}

}  // namespace pentagon
