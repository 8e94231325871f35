#include "singspec/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "singspec/errors.hpp"

namespace singspec {

// ---------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(int nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw DomainError("variable count must be in 1.." + std::to_string(kMaxVars));
  n_ = static_cast<std::uint8_t>(nvars);
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(static_cast<int>(exponents.size())) {
  int i = 0;
  for (int v : exponents) set(i++, v);
}

MultiIndex MultiIndex::from_span(std::span<const int> exponents) {
  MultiIndex m(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(static_cast<int>(i), exponents[i]);
  return m;
}

MultiIndex MultiIndex::unit(int nvars, int i) {
  MultiIndex m(nvars);
  m.set(i, 1);
  return m;
}

void MultiIndex::set(int i, int value) {
  if (i < 0 || i >= n_) throw DomainError("exponent index out of range");
  if (value < 0 || value > 0xffff) throw DomainError("exponent out of range");
  auto& slot = e_[static_cast<std::size_t>(i)];
  deg_ = deg_ - slot + static_cast<std::uint32_t>(value);
  slot = static_cast<std::uint16_t>(value);
}

bool MultiIndex::divides(const MultiIndex& other) const noexcept {
  for (int i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  MultiIndex r(*this);
  for (int i = 0; i < n_; ++i) r.set(i, e_[i] + other.e_[i]);
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  MultiIndex r(*this);
  for (int i = 0; i < n_; ++i) r.set(i, e_[i] - other.e_[i]);
  return r;
}

MultiIndex MultiIndex::lcm(const MultiIndex& other) const {
  MultiIndex r(*this);
  for (int i = 0; i < n_; ++i) r.set(i, std::max(e_[i], other.e_[i]));
  return r;
}

bool MultiIndex::coprime(const MultiIndex& other) const noexcept {
  for (int i = 0; i < n_; ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

std::vector<int> MultiIndex::to_vector() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_);
}

std::strong_ordering LocalOrder::compare(const MultiIndex& a, const MultiIndex& b) noexcept {
  if (a.degree() != b.degree()) return b.degree() <=> a.degree();
  const int n = std::min(a.nvars(), b.nvars());
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return a.nvars() <=> b.nvars();
}

// -------------------------------------------------------------- WeightVector

WeightVector::WeightVector(std::vector<Rational> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw DomainError("empty weight vector");
  for (const auto& x : w_)
    if (sgn(x) <= 0) throw DomainError("weights must be strictly positive");
}

Rational WeightVector::apply(const MultiIndex& alpha) const {
  Rational s = 0;
  for (int i = 0; i < alpha.nvars(); ++i) s += w_[static_cast<std::size_t>(i)] * alpha[i];
  return s;
}

// ---------------------------------------------------------------- Polynomial

namespace {

using TermMap = std::map<MultiIndex, Rational, LocalGreater>;

std::vector<Polynomial::Term> from_map(TermMap&& m) {
  std::vector<Polynomial::Term> out;
  out.reserve(m.size());
  for (auto& [k, v] : m)
    if (sgn(v) != 0) out.emplace_back(k, std::move(v));
  return out;
}

// Merge of two sorted term lists: a + sign*b.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, bool negate) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && LocalGreater{}(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || LocalGreater{}(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, negate ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = negate ? Rational(a[i].second - b[j].second)
                          : Rational(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw DomainError("variable count must be in 1.." + std::to_string(kMaxVars));
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.emplace_back(MultiIndex(nvars), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  TermMap acc;
  for (auto& [m, c] : terms) {
    if (m.nvars() != nvars) throw DomainError("term variable count mismatch");
    acc[m] += c;
  }
  Polynomial p(nvars);
  p.terms_ = from_map(std::move(acc));
  return p;
}

const MultiIndex& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of zero polynomial");
  return terms_.front().first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return terms_.front().second;
}

Rational Polynomial::coefficient(const MultiIndex& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const MultiIndex& key) {
                               return LocalGreater{}(t.first, key);
                             });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::vector<MultiIndex> Polynomial::support() const {
  std::vector<MultiIndex> s;
  s.reserve(terms_.size());
  for (const auto& t : terms_) s.push_back(t.first);
  return s;
}

int Polynomial::max_degree() const noexcept {
  // Terms are sorted by increasing degree.
  return terms_.empty() ? -1 : terms_.back().first.degree();
}

int Polynomial::ecart() const { return max_degree() - leading_monomial().degree(); }

bool Polynomial::has_constant_term() const {
  return !terms_.empty() && terms_.front().first.is_one();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (g.nvars_ != nvars_) throw DomainError("variable count mismatch");
  terms_ = merge(terms_, g.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (g.nvars_ != nvars_) throw DomainError("variable count mismatch");
  terms_ = merge(terms_, g.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.nvars_ != g.nvars_) throw DomainError("variable count mismatch");
  TermMap acc;
  for (const auto& [a, ca] : f.terms_)
    for (const auto& [b, cb] : g.terms_) acc[a + b] += ca * cb;
  Polynomial p(f.nvars_);
  p.terms_ = from_map(std::move(acc));
  return p;
}

Polynomial Polynomial::mul_term(const MultiIndex& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the local order.
  for (const auto& [a, ca] : terms_) r.terms_.emplace_back(a + m, ca * c);
  return r;
}

Polynomial Polynomial::truncated(int degree) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_) {
    if (t.first.degree() >= degree) break;
    r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(terms_.front().second) < 0) scale = -scale;
  Polynomial r(*this);
  r *= scale;
  return r;
}

// ------------------------------------------------------------------ printing

std::string variable_name(int index, int nvars, VarNaming naming) {
  if (naming == VarNaming::Auto && nvars <= 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index);
}

std::string to_string(const Polynomial& f, VarNaming naming) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    if (sgn(c) < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    std::string mono;
    for (int i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(i, f.nvars(), naming);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// ------------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int nvars) : s_(text), nvars_(nvars) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [m, c] = parse_term();
      terms.emplace_back(m, sign * c);
      skip_ws();
    }
    return Polynomial::from_terms(nvars_, std::move(terms));
  }

  // Variable indices only; used to infer the ambient dimension.
  int max_index() {
    int best = -1;
    while (!at_end()) {
      char ch = peek();
      if (ch == 'x' || ch == 'y' || ch == 'z') {
        best = std::max(best, read_variable(/*check_range=*/false));
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        throw ParseError(std::string("unknown variable '") + ch + "'", pos_);
      } else {
        ++pos_;
      }
    }
    return best;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  int read_variable(bool check_range) {
    std::size_t start = pos_;
    char ch = s_[pos_++];
    int index = 0;
    if (ch == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string d = digits();
      if (d.size() > 3) throw ParseError("variable index too large", start);
      index = std::stoi(d);
    } else {
      index = ch - 'x';
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) && ch != 'x')
        throw ParseError("digits after a variable; use '^' for powers", pos_);
      if (check_range && nvars_ > 3)
        throw ParseError(std::string("alias '") + ch + "' needs at most 3 variables", start);
    }
    if (check_range && index >= nvars_)
      throw ParseError("variable " + std::string(s_.substr(start, pos_ - start)) +
                           " out of range for " + std::to_string(nvars_) + " variables",
                       start);
    return index;
  }

  Polynomial::Term parse_term() {
    MultiIndex m(nvars_);
    Rational c = 1;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        mpz_class num(digits());
        mpz_class den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          std::size_t at = pos_;
          den = mpz_class(digits());
          if (den == 0) throw ParseError("zero denominator", at);
        }
        Rational q(num, den);
        q.canonicalize();
        c *= q;
      } else if (ch == 'x' || ch == 'y' || ch == 'z') {
        int i = read_variable(true);
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          std::size_t at = pos_;
          std::string d = digits();
          if (d.size() > 4) throw ParseError("exponent too large", at);
          power = std::stoi(d);
        }
        m.set(i, m[i] + power);
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        throw ParseError(std::string("unknown variable '") + ch + "'", pos_);
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) throw ParseError("dangling '*'", pos_);
      }
    }
    if (!any) throw ParseError("expected a term", pos_);
    return {m, c};
  }

  std::string_view s_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, int nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw DomainError("variable count must be in 1.." + std::to_string(kMaxVars));
  return PolyParser(text, nvars).parse();
}

int infer_nvars(std::string_view text) {
  int idx = PolyParser(text, kMaxVars).max_index();
  if (idx + 1 > kMaxVars) throw ParseError("too many variables", 0);
  return std::max(1, idx + 1);
}

// ------------------------------------------------------------------ calculus

Polynomial partial(const Polynomial& f, int i) {
  if (i < 0 || i >= f.nvars()) throw DomainError("partial: variable index out of range");
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    MultiIndex d(m);
    d.set(i, m[i] - 1);
    terms.emplace_back(d, c * m[i]);
  }
  return Polynomial::from_terms(f.nvars(), std::move(terms));
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(f.nvars()));
  for (int i = 0; i < f.nvars(); ++i) out.push_back(partial(f, i));
  return out;
}

WeightedOrder weighted_order(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw DomainError("weighted order of the zero polynomial");
  if (w.nvars() != f.nvars()) throw DomainError("weight vector length mismatch");
  Rational d = w.apply(f.terms().front().first);
  for (const auto& t : f.terms()) d = std::min(d, Rational(w.apply(t.first)));
  std::vector<Polynomial::Term> principal;
  for (const auto& t : f.terms())
    if (w.apply(t.first) == d) principal.push_back(t);
  return {d, Polynomial::from_terms(f.nvars(), std::move(principal))};
}

}  // namespace singspec
