#include "singspec/expr.hpp"

#include <algorithm>
#include <cctype>

#include "singspec/errors.hpp"

namespace singspec {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprEnv& env, std::size_t offset = 0)
      : text_(text), env_(env), offset_(offset),
        nvars_(std::max<int>(1, static_cast<int>(env.vars.size()))) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial constant(const Rational& q) const { return Polynomial::constant(nvars_, q); }

  static bool is_constant(const Polynomial& p) {
    return p.is_zero() || (p.size() == 1 && p.leading_monomial().is_one());
  }

  Rational as_constant(const Polynomial& p, const char* what) const {
    if (!is_constant(p)) throw DomainError(std::string(what) + " must be a constant");
    return p.is_zero() ? Rational(0) : p.leading_coefficient();
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Rational d = as_constant(unary(), "divisor");
        if (sgn(d) == 0) throw DomainError("division by zero at position " + std::to_string(offset_ + at));
        acc *= 1 / d;
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    Rational e = as_constant(unary(), "exponent");
    if (e.get_den() != 1 || sgn(e) < 0 || e > 100000)
      throw DomainError("exponent must be a non-negative integer, got " + to_string(e));
    long n = e.get_num().get_si();
    Polynomial result = constant(1);
    for (long i = 0; i < n; ++i) result = result * base;
    return result;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (accept('(')) return call(name, start);
      for (std::size_t i = 0; i < env_.vars.size(); ++i)
        if (env_.vars[i] == name)
          return Polynomial::monomial(MultiIndex::unit(nvars_, static_cast<int>(i)));
      auto it = env_.constants.find(name);
      if (it == env_.constants.end()) {
        pos_ = start;
        fail("unknown name '" + name + "'");
      }
      return constant(it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial call(const std::string& name, std::size_t start) {
    std::vector<Rational> args;
    if (!accept(')')) {
      do {
        args.push_back(as_constant(expr(), "function argument"));
      } while (accept(','));
      if (!accept(')')) fail("expected ')'");
    }
    if (name == "max" || name == "min") {
      if (args.empty()) fail(name + " needs at least one argument");
      auto it = name == "max" ? std::max_element(args.begin(), args.end())
                              : std::min_element(args.begin(), args.end());
      return constant(*it);
    }
    if (name == "if") {
      if (args.size() != 3) fail("if needs three arguments");
      return constant(args[0] != 0 ? args[1] : args[2]);
    }
    if (name == "le" || name == "lt") {
      if (args.size() != 2) fail(name + " needs two arguments");
      bool v = name == "le" ? args[0] <= args[1] : args[0] < args[1];
      return constant(v ? 1 : 0);
    }
    pos_ = start;
    fail("unknown function '" + name + "'");
  }

  std::string_view text_;
  const ExprEnv& env_;
  std::size_t offset_;
  int nvars_;
  std::size_t pos_ = 0;
};

long as_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw DomainError(std::string(what) + " must be an integer, got " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw DomainError(std::string(what) + " out of range");
  return q.get_num().get_si();
}

// Splits at top-level occurrences of `sep`, tracking () and [] nesting.
std::vector<std::pair<std::size_t, std::string_view>> split_top(std::string_view text, char sep) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(start, text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(start, text.substr(start));
  return out;
}

Rational eval_constant_at(std::string_view text, const ExprEnv& env, std::size_t offset) {
  Polynomial p = ExprParser(text, env, offset).parse_all();
  if (p.is_zero()) return 0;
  if (p.size() != 1 || !p.leading_monomial().is_one())
    throw DomainError("expression '" + std::string(text) + "' is not constant");
  return p.leading_coefficient();
}

void expand_item(std::string_view item, std::size_t offset, const ExprEnv& env,
                 std::vector<Rational>& out) {
  std::size_t i = 0;
  while (i < item.size() && std::isspace(static_cast<unsigned char>(item[i]))) ++i;
  if (i < item.size() && item[i] == '[') {
    std::size_t close = item.find(']', i);
    if (close == std::string_view::npos) throw ParseError("unterminated '['", offset + i);
    std::string_view head = item.substr(i + 1, close - i - 1);
    std::size_t eq = head.find('=');
    std::size_t dots = head.find("..");
    if (eq == std::string_view::npos || dots == std::string_view::npos || dots < eq)
      throw ParseError("expected '[name=lo..hi]'", offset + i);
    std::string name(head.substr(0, eq));
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char ch) { return std::isspace(ch); }),
               name.end());
    if (name.empty()) throw ParseError("missing index name", offset + i);
    std::size_t head_off = offset + i + 1;
    long lo = as_integer(eval_constant_at(head.substr(eq + 1, dots - eq - 1), env, head_off + eq + 1),
                         "range bound");
    long hi = as_integer(eval_constant_at(head.substr(dots + 2), env, head_off + dots + 2),
                         "range bound");
    ExprEnv inner = env;
    for (long v = lo; v <= hi; ++v) {
      inner.constants[name] = v;
      expand_item(item.substr(close + 1), offset + close + 1, inner, out);
    }
    return;
  }
  auto parts = split_top(item, '@');
  if (parts.size() > 2) throw ParseError("more than one '@'", offset);
  Rational value = eval_constant_at(parts[0].second, env, offset);
  long times = 1;
  if (parts.size() == 2)
    times = as_integer(eval_constant_at(parts[1].second, env, offset + parts[1].first),
                       "multiplicity");
  if (times < 0) throw DomainError("negative multiplicity");
  for (long t = 0; t < times; ++t) out.push_back(value);
}

}  // namespace

Polynomial eval_polynomial(std::string_view text, const ExprEnv& env) {
  return ExprParser(text, env).parse_all();
}

Rational eval_rational(std::string_view text, const ExprEnv& env) {
  return eval_constant_at(text, env, 0);
}

std::vector<Rational> eval_list(std::string_view text, const ExprEnv& env) {
  std::vector<Rational> out;
  bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  if (blank) return out;
  for (const auto& [off, item] : split_top(text, ',')) expand_item(item, off, env, out);
  return out;
}

}  // namespace singspec
