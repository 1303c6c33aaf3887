#include "sptri/rational.hpp"

#include <cctype>

#include "sptri/errors.hpp"

namespace sptri
{

namespace
{

Integer parse_integer(std::string_view text, std::string_view whole)
{
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size())
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

} // namespace

Rational make_rational(long num, long den)
{
  if (den == 0)
    throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(Rational const &q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
  auto const slash = text.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(text, text));
  } else {
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

} // namespace sptri
