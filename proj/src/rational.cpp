#include "gtrace/rational.hpp"

#include <cctype>

#include "gtrace/errors.hpp"

namespace gtrace {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational \"" + std::string(text) + "\" (expected \"p/q\" or an integer)");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string format_gaussian(const GaussianRational& z) {
  return format_rational(z.re) + (sgn(z.im) < 0 ? " - " : " + ") + format_rational(abs(z.im)) + "i";
}

}  // namespace gtrace
