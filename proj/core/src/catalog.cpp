#include "singspec/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>

#include "singspec/errors.hpp"
#include "singspec/expr.hpp"

namespace singspec {

const char* builtin_catalog_text();

namespace {

constexpr std::string_view kHeader = "singspec-catalog 1";

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_list(std::string_view s, char sep = ',') {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      std::string item = trim(s.substr(start, i - start));
      if (!item.empty()) out.push_back(item);
      start = i + 1;
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

ExprEnv env_for(const FamilySpec& fam, const ParamMap& params,
                const std::map<std::string, Rational>& moduli = {}) {
  ExprEnv env;
  if (fam.kind == FamilyKind::Germ) env.vars = fam.vars;
  for (const auto& [name, value] : fam.moduli) env.constants[name] = value;
  for (const auto& [name, value] : moduli) {
    if (!env.constants.count(name)) throw DomainError("unknown modulus '" + name + "' for " + fam.name);
    env.constants[name] = value;
  }
  for (const auto& [name, value] : params) env.constants[name] = value;
  return env;
}

int parse_tau_offset(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "mu") return 0;
  if (t == "mu-1") return 1;
  if (t == "mu-2") return 2;
  throw DomainError("tau_max must be one of mu, mu-1, mu-2, got '" + text + "'");
}

std::string tau_offset_name(int d) { return d == 0 ? "mu" : "mu-" + std::to_string(d); }

ParamConstraint parse_constraint(const std::string& text) {
  ParamConstraint c;
  auto call = [&](std::string_view fn, ParamConstraint::Op op) {
    if (text.rfind(fn, 0) == 0 && text.back() == ')') {
      c.op = op;
      c.param = trim(std::string_view(text).substr(fn.size(), text.size() - fn.size() - 1));
      return true;
    }
    return false;
  };
  if (call("even(", ParamConstraint::Op::Even) || call("odd(", ParamConstraint::Op::Odd) ||
      call("holds(", ParamConstraint::Op::Holds))
    return c;
  for (auto [tok, op] : {std::pair{">=", ParamConstraint::Op::AtLeast},
                         std::pair{"<=", ParamConstraint::Op::AtMost}}) {
    auto at = text.find(tok);
    if (at == std::string::npos) continue;
    c.op = op;
    c.param = trim(std::string_view(text).substr(0, at));
    c.value = std::stol(trim(std::string_view(text).substr(at + 2)));
    return c;
  }
  throw DomainError("cannot parse domain constraint '" + text + "'");
}

// Constraints on parameters absent from `params` are not checked.
bool satisfies(const ParamConstraint& c, const ParamMap& params) {
  if (c.op == ParamConstraint::Op::Holds) {
    ExprEnv env;
    for (const auto& [name, value] : params) env.constants[name] = value;
    return eval_rational(c.param, env) != 0;
  }
  auto it = params.find(c.param);
  if (it == params.end()) return true;
  const long v = it->second;
  switch (c.op) {
    case ParamConstraint::Op::AtLeast: return v >= c.value;
    case ParamConstraint::Op::AtMost: return v <= c.value;
    case ParamConstraint::Op::Even: return v % 2 == 0;
    case ParamConstraint::Op::Odd: return v % 2 != 0;
    case ParamConstraint::Op::Holds: break;
  }
  return false;
}

std::string join_rationals(const std::vector<Rational>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(to_string(x));
  return "{" + join(parts, ", ") + "}";
}

void compare_expectation(const CheckExpectation& want, const InequalityVerdict& got,
                         const ExprEnv& env, const std::string& label, bool& ok,
                         std::vector<std::string>& mismatches) {
  auto check = [&](const std::string& expr, const Rational& value, const char* what) {
    if (expr.empty()) return;
    Rational expected = eval_rational(expr, env);
    if (expected != value) {
      ok = false;
      mismatches.push_back(label + " " + what + ": expected " + to_string(expected) + ", got " +
                           to_string(value));
    }
  };
  check(want.mean, got.center, "mean");
  check(want.sum_sq_dev, got.sum_sq_dev, "sum of squared deviations");
  check(want.range, got.range, "range");
  check(want.residual, got.residual, "residual");
}

}  // namespace

std::string to_string(const ParamConstraint& c) {
  switch (c.op) {
    case ParamConstraint::Op::AtLeast: return c.param + ">=" + std::to_string(c.value);
    case ParamConstraint::Op::AtMost: return c.param + "<=" + std::to_string(c.value);
    case ParamConstraint::Op::Even: return "even(" + c.param + ")";
    case ParamConstraint::Op::Odd: return "odd(" + c.param + ")";
    case ParamConstraint::Op::Holds: return "holds(" + c.param + ")";
  }
  return {};
}

void check_params(const FamilySpec& fam, const ParamMap& params) {
  for (const auto& p : fam.params)
    if (!params.count(p)) throw DomainError(fam.name + ": missing parameter '" + p + "'");
  for (const auto& [name, value] : params) {
    if (std::find(fam.params.begin(), fam.params.end(), name) == fam.params.end())
      throw DomainError(fam.name + ": unknown parameter '" + name + "'");
  }
  for (const auto& c : fam.domain)
    if (!satisfies(c, params))
      throw DomainError(fam.name + ": parameters " + format_params(params) + " violate " + to_string(c));
}

std::size_t expected_mu(const FamilySpec& fam, const ParamMap& params) {
  check_params(fam, params);
  Rational mu = eval_rational(fam.mu, env_for(fam, params));
  if (mu.get_den() != 1 || sgn(mu) <= 0) throw DomainError(fam.name + ": mu formula is not a positive integer");
  return mu.get_num().get_ui();
}

Spectrum expected_spectrum_at(const FamilySpec& fam, const ParamMap& params) {
  check_params(fam, params);
  return Spectrum(fam.nvars(), eval_list(fam.spectrum, env_for(fam, params)));
}

std::vector<Rational> expected_rset_at(const FamilySpec& fam, const ParamMap& params) {
  check_params(fam, params);
  auto xs = eval_list(fam.rset, env_for(fam, params));
  std::sort(xs.begin(), xs.end());
  return xs;
}

Polynomial instantiate(const FamilySpec& fam, const ParamMap& params,
                       const std::map<std::string, Rational>& moduli, const StdOptions& options) {
  if (fam.kind != FamilyKind::Germ) throw DomainError(fam.name + " has no representative polynomial");
  check_params(fam, params);
  Polynomial f = eval_polynomial(fam.templ, env_for(fam, params, moduli));
  std::size_t want = expected_mu(fam, params);
  std::size_t got = milnor_number(f, options);
  if (got != want)
    throw ConsistencyError(fam.name + " at " + format_params(params) + ": Milnor number " +
                           std::to_string(got) + " differs from the expected " + std::to_string(want));
  return f;
}

VerificationRecord verify(const FamilySpec& fam, const ParamMap& params, const VerifyOptions& options) {
  check_params(fam, params);
  VerificationRecord rec;
  rec.family = fam.name;
  rec.params = params;
  ExprEnv env = env_for(fam, params);
  auto fail = [&](const std::string& what) { rec.mismatches.push_back(what); };

  try {
    const std::size_t mu_expected = expected_mu(fam, params);
    const Spectrum sp_expected = expected_spectrum_at(fam, params);
    const std::vector<Rational> rset_expected = expected_rset_at(fam, params);
    if (sp_expected.size() != mu_expected)
      fail("record lists " + std::to_string(sp_expected.size()) + " spectral numbers for mu = " +
           std::to_string(mu_expected));

    ExclusionReport rep;
    if (fam.kind == FamilyKind::Germ) {
      Polynomial f = eval_polynomial(fam.templ, env);
      rec.polynomial = to_string(f);
      rec.mu = milnor_number(f, options.spectrum.std);
      rec.mu_ok = rec.mu == mu_expected;
      if (!rec.mu_ok)
        fail("mu: expected " + std::to_string(mu_expected) + ", got " + std::to_string(rec.mu));
      SpectrumOptions sopt = options.spectrum;
      sopt.assume_nondegenerate = sopt.assume_nondegenerate || fam.assume_nondegenerate;
      if (options.skip_tjurina) {
        rep.sp = spectrum_newton(f, sopt);
        rep.rset = rset_expected;
        rep.sp_tau = Spectrum(rep.sp.dim(), multiset_difference(rep.sp.exponents(), rep.rset));
        rep.bounds = theoremB_bounds(rep.sp, rep.rset.size());
      } else {
        rep = exclusion_report(f, sopt);
      }
      rec.spectrum_ok = rep.sp == sp_expected;
      if (!rec.spectrum_ok)
        fail("spectrum: expected " + join_rationals(sp_expected.exponents()) + ", got " +
             join_rationals(rep.sp.exponents()));
    } else {
      rec.mu = sp_expected.size();
      rec.mu_ok = rec.mu == mu_expected;
      rep.sp = sp_expected;
      rep.rset = rset_expected;
      rep.sp_tau = Spectrum(rep.sp.dim(), multiset_difference(rep.sp.exponents(), rep.rset));
      rep.bounds = theoremB_bounds(rep.sp, rep.rset.size());
      rec.spectrum_ok = check_symmetry(rep.sp);
      if (!rec.spectrum_ok) fail("listed spectrum is not symmetric");
    }
    rec.spectrum = rep.sp;
    rec.rset = rep.rset;
    rec.tau = rep.sp_tau.size();

    rec.rset_ok = rep.rset == rset_expected;
    if (!rec.rset_ok)
      fail("R(f): expected " + join_rationals(rset_expected) + ", got " + join_rationals(rep.rset));
    if (!check_max_excluded(rep)) {
      rec.rset_ok = false;
      fail("largest spectral number is not excluded exactly once");
    }
    for (std::size_t k = 0; k < rep.rset.size(); ++k) {
      if (rep.rset[k] < rep.bounds[k]) {
        rec.rset_ok = false;
        fail("excluded exponent " + to_string(rep.rset[k]) + " is below its lower bound " +
             to_string(rep.bounds[k]));
      }
    }

    rec.hertling = hertling_check(rep.sp);
    rec.hertling_ok = rec.hertling->holds;
    if (!rec.hertling_ok) fail("Hertling inequality fails, slack " + to_string(rec.hertling->slack));
    compare_expectation(fam.hertling, *rec.hertling, env, "hertling", rec.hertling_ok, rec.mismatches);

    rec.ghcts_ok = true;
    for (int d : fam.tau_max_offsets) {
      if (static_cast<std::size_t>(d) > rep.sp.size()) {
        rec.ghcts_ok = false;
        fail("tau_max offset larger than mu");
        continue;
      }
      InequalityVerdict v = ghcts_reduced_check(rep.sp, rep.sp.size() - static_cast<std::size_t>(d));
      std::string label = "ghcts at tau_max=" + tau_offset_name(d);
      if (!v.holds) {
        rec.ghcts_ok = false;
        fail(label + " fails, slack " + to_string(v.slack));
      }
      if (auto it = fam.ghcts.find(d); it != fam.ghcts.end())
        compare_expectation(it->second, v, env, label, rec.ghcts_ok, rec.mismatches);
      rec.ghcts.push_back(std::move(v));
    }
  } catch (const Error& e) {
    fail(std::string("error: ") + e.what());
  }
  return rec;
}

// ------------------------------------------------------------------ Catalog

const FamilySpec& Catalog::find(std::string_view name) const {
  for (const auto& f : families_)
    if (f.name == name) return f;
  throw UnknownFamilyError("unknown family '" + std::string(name) + "'");
}

bool Catalog::contains(std::string_view name) const {
  return std::any_of(families_.begin(), families_.end(),
                     [&](const FamilySpec& f) { return f.name == name; });
}

Catalog Catalog::parse(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::size_t start = 0, no = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.emplace_back(no++, std::move(line));
      start = end + 1;
    }
  }

  auto error = [](std::size_t line, const std::string& what) -> ParseError {
    return ParseError("catalog line " + std::to_string(line) + ": " + what, line);
  };

  std::vector<FamilySpec> families;
  bool header_seen = false;
  FamilySpec* cur = nullptr;
  std::string* last_value = nullptr;
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> pending;

  auto finish = [&]() {
    if (!cur) return;
    for (auto& [line, kv] : pending) {
      const std::string& key = kv.first;
      const std::string& value = kv.second;
      try {
        if (key == "kind") {
          if (value == "germ") cur->kind = FamilyKind::Germ;
          else if (value == "spectrum") cur->kind = FamilyKind::Spectrum;
          else throw DomainError("kind must be germ or spectrum");
        } else if (key == "modality") {
          cur->modality = std::stoi(value);
        } else if (key == "vars") {
          cur->vars = split_list(value);
        } else if (key == "dim") {
          cur->dim = std::stoi(value);
        } else if (key == "params") {
          cur->params = split_list(value);
        } else if (key == "domain") {
          for (const auto& c : split_list(value, ' ')) cur->domain.push_back(parse_constraint(c));
        } else if (key == "template") {
          cur->templ = value;
        } else if (key == "moduli") {
          for (const auto& item : split_list(value)) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw DomainError("modulus needs 'name=value'");
            cur->moduli.emplace_back(trim(item.substr(0, eq)), parse_rational(trim(item.substr(eq + 1))));
          }
        } else if (key == "mu") {
          cur->mu = value;
        } else if (key == "spectrum") {
          cur->spectrum = value;
        } else if (key == "rset") {
          cur->rset = value;
        } else if (key == "tau_max") {
          for (const auto& t : split_list(value)) cur->tau_max_offsets.push_back(parse_tau_offset(t));
        } else if (key == "nondegenerate") {
          if (value == "assumed") cur->assume_nondegenerate = true;
          else if (value == "checked") cur->assume_nondegenerate = false;
          else throw DomainError("nondegenerate must be checked or assumed");
        } else if (key == "note") {
          cur->note = value;
        } else if (key.rfind("hertling.", 0) == 0 || key.rfind("ghcts.", 0) == 0) {
          CheckExpectation* target;
          std::string field;
          if (key.rfind("hertling.", 0) == 0) {
            target = &cur->hertling;
            field = key.substr(9);
          } else {
            auto dot = key.find('.', 6);
            if (dot == std::string::npos) throw DomainError("expected ghcts.<tau_max>.<field>");
            target = &cur->ghcts[parse_tau_offset(key.substr(6, dot - 6))];
            field = key.substr(dot + 1);
          }
          if (field == "mean") target->mean = value;
          else if (field == "sum_sq_dev") target->sum_sq_dev = value;
          else if (field == "range") target->range = value;
          else if (field == "residual") target->residual = value;
          else throw DomainError("unknown check field '" + field + "'");
        } else {
          throw DomainError("unknown key '" + key + "'");
        }
      } catch (const ParseError& e) {
        throw error(line, e.what());
      } catch (const DomainError& e) {
        throw error(line, e.what());
      } catch (const std::logic_error& e) {
        throw error(line, "bad number in '" + key + "'");
      }
    }
    pending.clear();
    if (cur->kind == FamilyKind::Germ && (cur->vars.empty() || cur->templ.empty()))
      throw ParseError("catalog: germ record " + cur->name + " needs vars and template", 0);
    if (cur->kind == FamilyKind::Spectrum && cur->dim < 1)
      throw ParseError("catalog: spectrum record " + cur->name + " needs dim", 0);
    if (cur->mu.empty() || cur->spectrum.empty())
      throw ParseError("catalog: record " + cur->name + " needs mu and spectrum", 0);
  };

  for (auto& [no, raw] : lines) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') {
      last_value = nullptr;
      continue;
    }
    if (!header_seen) {
      if (line != kHeader) throw error(no, "expected header '" + std::string(kHeader) + "'");
      header_seen = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(raw[0]))) {
      if (!last_value) throw error(no, "continuation line without a key");
      *last_value += " " + line;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw error(no, "malformed section header");
      finish();
      FamilySpec fam;
      fam.name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (fam.name.empty()) throw error(no, "empty family name");
      for (const auto& f : families)
        if (f.name == fam.name) throw error(no, "duplicate family '" + fam.name + "'");
      families.push_back(std::move(fam));
      cur = &families.back();
      last_value = nullptr;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw error(no, "expected 'key = value'");
    if (!cur) throw error(no, "key outside of a family section");
    pending.push_back({no, {trim(line.substr(0, eq)), trim(line.substr(eq + 1))}});
    last_value = &pending.back().second.second;
  }
  if (!header_seen) throw ParseError("catalog: missing header", 0);
  finish();
  return Catalog(std::move(families));
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = parse(builtin_catalog_text());
  return catalog;
}

std::string Catalog::serialize() const {
  std::ostringstream out;
  out << kHeader << "\n";
  auto put = [&](const char* key, const std::string& value) {
    if (!value.empty()) out << key << " = " << value << "\n";
  };
  auto put_check = [&](const std::string& prefix, const CheckExpectation& c) {
    put((prefix + "mean").c_str(), c.mean);
    put((prefix + "sum_sq_dev").c_str(), c.sum_sq_dev);
    put((prefix + "range").c_str(), c.range);
    put((prefix + "residual").c_str(), c.residual);
  };
  for (const auto& f : families_) {
    out << "\n[" << f.name << "]\n";
    put("kind", f.kind == FamilyKind::Germ ? "germ" : "spectrum");
    if (f.modality) put("modality", std::to_string(f.modality));
    if (f.kind == FamilyKind::Germ) put("vars", join(f.vars, ", "));
    else put("dim", std::to_string(f.dim));
    put("params", join(f.params, ", "));
    std::vector<std::string> dom;
    for (const auto& c : f.domain) dom.push_back(to_string(c));
    put("domain", join(dom, " "));
    put("template", f.templ);
    std::vector<std::string> mods;
    for (const auto& [n, v] : f.moduli) mods.push_back(n + "=" + to_string(v));
    put("moduli", join(mods, ", "));
    put("mu", f.mu);
    put("spectrum", f.spectrum);
    put("rset", f.rset);
    std::vector<std::string> taus;
    for (int d : f.tau_max_offsets) taus.push_back(tau_offset_name(d));
    put("tau_max", join(taus, ", "));
    if (f.kind == FamilyKind::Germ) put("nondegenerate", f.assume_nondegenerate ? "assumed" : "checked");
    put_check("hertling.", f.hertling);
    for (const auto& [d, c] : f.ghcts) put_check("ghcts." + tau_offset_name(d) + ".", c);
    put("note", f.note);
  }
  return out.str();
}

void Catalog::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write catalog file '" + path + "'");
  out << serialize();
}

// -------------------------------------------------------------------- sweeps

std::vector<ParamMap> parameter_grid(const FamilySpec& fam, const std::map<std::string, long>& maxima,
                                     long default_max) {
  std::vector<std::pair<long, long>> ranges;
  for (const auto& p : fam.params) {
    long lo = 0;
    for (const auto& c : fam.domain)
      if (c.param == p && c.op == ParamConstraint::Op::AtLeast) lo = std::max(lo, c.value);
    auto it = maxima.find(p);
    long hi = it != maxima.end() ? it->second : default_max;
    ranges.emplace_back(lo, hi);
  }
  std::vector<ParamMap> out;
  if (fam.params.empty()) {
    out.emplace_back();
    return out;
  }
  std::vector<long> cur(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (ranges[i].first > ranges[i].second) return out;
    cur[i] = ranges[i].first;
  }
  while (true) {
    ParamMap pm;
    for (std::size_t i = 0; i < cur.size(); ++i) pm[fam.params[i]] = cur[i];
    bool ok = true;
    for (const auto& c : fam.domain)
      if (!satisfies(c, pm)) ok = false;
    if (ok) out.push_back(std::move(pm));
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++cur[i] <= ranges[i].second) break;
      cur[i] = ranges[i].first;
      if (i == 0) return out;
    }
  }
}

std::vector<VerificationRecord> sweep(const std::vector<SweepItem>& items, unsigned jobs,
                                      const VerifyOptions& options) {
  std::vector<VerificationRecord> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++)
      out[i] = verify(*items[i].family, items[i].params, options);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

std::string format_params(const ParamMap& params) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : params) parts.push_back(k + "=" + std::to_string(v));
  return join(parts, ",");
}

ParamMap parse_params(std::string_view text) {
  ParamMap out;
  std::string s(text);
  std::replace(s.begin(), s.end(), ' ', ',');
  for (const auto& item : split_list(s)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + item + "'", 0);
    std::string name = trim(item.substr(0, eq));
    std::string value = trim(item.substr(eq + 1));
    try {
      std::size_t used = 0;
      long v = std::stol(value, &used);
      if (used != value.size()) throw std::invalid_argument("trailing");
      out[name] = v;
    } catch (const std::logic_error&) {
      throw ParseError("parameter '" + name + "' needs an integer value", eq + 1);
    }
  }
  return out;
}

}  // namespace singspec
