#include "singspec/rational.hpp"

#include <cctype>
#include <cstdio>

#include "singspec/errors.hpp"

namespace singspec {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
      ++i;
    }
    if (i == start) throw ParseError("expected digits", i);
  };

  skip_ws();
  std::string num;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  read_digits(num);
  std::string den = "1";
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den.clear();
    read_digits(den);
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters in rational", i);

  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator", text.size());
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_approx_string(const Rational& q, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, q.get_d());
  return buf;
}

Rational sum(const std::vector<Rational>& xs) {
  Rational s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

}  // namespace singspec
