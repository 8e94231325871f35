#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "singspec/catalog.hpp"
#include "singspec/errors.hpp"
#include "singspec/hertling.hpp"
#include "singspec/spectrum.hpp"
#include "singspec/tjurina.hpp"

namespace singspec::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

struct Settings {
  Format format = Format::Table;
  bool approx = false;
  std::string catalog_path;
  int nvars = 0;
  bool assume_nondegenerate = false;
  StdOptions std;
};

// Usage problems detected after CLI11 has accepted the command line.
class UsageError : public Error {
 public:
  using Error::Error;
};

Json rat(const Rational& q, const Settings& s) {
  if (s.approx) return q.get_d();
  return to_string(q);
}

Json rats(const std::vector<Rational>& xs, const Settings& s) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(rat(x, s));
  return a;
}

Json verdict_json(const InequalityVerdict& v, const Settings& s) {
  Json j;
  j["mode"] = to_string(v.mode);
  j["holds"] = v.holds;
  j["count"] = v.count;
  j["dropped"] = v.dropped;
  j["center"] = rat(v.center, s);
  j["sum_sq_dev"] = rat(v.sum_sq_dev, s);
  j["range"] = rat(v.range, s);
  j["lhs"] = rat(v.lhs, s);
  j["rhs"] = rat(v.rhs, s);
  j["slack"] = rat(v.slack, s);
  j["residual"] = rat(v.residual, s);
  return j;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return to_approx_string(Rational(j.get<double>()));
  if (j.is_null()) return "";
  return j.dump();
}

bool is_flat_array(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

void flatten(const Json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), rows);
  } else if (j.is_array() && is_flat_array(j)) {
    std::string joined;
    for (const auto& e : j) joined += (joined.empty() ? "" : " ") + scalar_text(e);
    rows.emplace_back(key, joined);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(key, scalar_text(j));
  }
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void print_report(const Json& report, const Settings& s, std::ostream& out) {
  if (s.format == Format::Json) {
    out << report.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  if (s.format == Format::Csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << k << ":" << std::string(width - k.size() + 1, ' ') << v << "\n";
}

// One row per item, all items sharing the keys of the first.
void print_table(const std::vector<Json>& items, const Settings& s, std::ostream& out) {
  if (s.format == Format::Json) {
    out << Json(items).dump(2) << "\n";
    return;
  }
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& it : items) {
    rows.emplace_back();
    flatten(it, "", rows.back());
  }
  if (rows.empty()) return;
  if (s.format == Format::Csv) {
    for (std::size_t c = 0; c < rows[0].size(); ++c) out << (c ? "," : "") << csv_field(rows[0][c].first);
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_field(r[c].second);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (std::size_t c = 0; c < width.size(); ++c) width[c] = rows[0][c].first.size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].second.size());
  auto line = [&](auto get) {
    std::string text;
    for (std::size_t c = 0; c < width.size(); ++c) {
      std::string cell = get(c);
      text += cell;
      if (c + 1 < width.size()) text += std::string(width[c] - cell.size() + 2, ' ');
    }
    out << text << "\n";
  };
  line([&](std::size_t c) { return rows[0][c].first; });
  for (const auto& r : rows) line([&](std::size_t c) { return c < r.size() ? r[c].second : std::string(); });
}

Polynomial read_polynomial(const std::string& text, const Settings& s) {
  int n = s.nvars > 0 ? s.nvars : infer_nvars(text);
  return parse(text, n);
}

SpectrumOptions spectrum_options(const Settings& s) {
  SpectrumOptions o;
  o.std = s.std;
  o.assume_nondegenerate = s.assume_nondegenerate;
  return o;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<Rational> read_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spectrum file '" + path + "'");
  std::vector<Rational> xs;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    for (const auto& item : split_list(line)) xs.push_back(parse_rational(item));
  }
  if (xs.empty()) throw DomainError("spectrum file '" + path + "' lists no exponents");
  return xs;
}

const Catalog& load_catalog(const Settings& s, std::optional<Catalog>& storage) {
  if (s.catalog_path.empty()) return Catalog::builtin();
  try {
    storage = Catalog::load(s.catalog_path);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return *storage;
}

Json record_json(const VerificationRecord& r, const Settings& s) {
  Json j;
  j["family"] = r.family;
  j["params"] = format_params(r.params);
  if (!r.polynomial.empty()) j["polynomial"] = r.polynomial;
  j["mu"] = r.mu;
  j["tau"] = r.tau;
  j["spectrum"] = rats(r.spectrum.exponents(), s);
  j["rset"] = rats(r.rset, s);
  if (r.hertling) j["hertling"] = verdict_json(*r.hertling, s);
  Json g = Json::array();
  for (const auto& v : r.ghcts) g.push_back(verdict_json(v, s));
  j["ghcts"] = g;
  j["mu_ok"] = r.mu_ok;
  j["spectrum_ok"] = r.spectrum_ok;
  j["rset_ok"] = r.rset_ok;
  j["hertling_ok"] = r.hertling_ok;
  j["ghcts_ok"] = r.ghcts_ok;
  j["ok"] = r.all_ok() && r.mismatches.empty();
  j["mismatches"] = r.mismatches;
  return j;
}

Json record_row(const VerificationRecord& r) {
  Json j;
  j["family"] = r.family;
  j["params"] = format_params(r.params);
  j["mu"] = r.mu;
  j["tau"] = r.tau;
  j["mu_ok"] = r.mu_ok;
  j["spectrum_ok"] = r.spectrum_ok;
  j["rset_ok"] = r.rset_ok;
  j["hertling_ok"] = r.hertling_ok;
  j["ghcts_ok"] = r.ghcts_ok;
  j["ok"] = r.all_ok() && r.mismatches.empty();
  return j;
}

// Term c*x^a in SINGULAR's short variable syntax, e.g. 3x2y.
std::string singular_term(const MultiIndex& m, const Rational& c, int nvars) {
  std::string mono;
  for (int i = 0; i < nvars; ++i) {
    if (m[i] == 0) continue;
    mono += variable_name(i, nvars);
    if (m[i] > 1) mono += std::to_string(m[i]);
  }
  Rational a = abs(c);
  std::string sign = c < 0 ? "-" : "+";
  if (mono.empty()) return sign + to_string(a);
  if (a == 1) return sign + mono;
  if (a.get_den() == 1) return sign + to_string(a) + mono;
  return sign + "(" + to_string(a) + ")*" + mono;
}

// SINGULAR text of the input, keeping the order in which terms were typed.
std::string singular_polynomial(const std::string& text, int nvars) {
  std::vector<std::string> chunks;
  std::string cur;
  for (char c : text) {
    if ((c == '+' || c == '-') && !cur.empty() &&
        cur.find_first_not_of(" \t+-") != std::string::npos) {
      chunks.push_back(std::move(cur));
      cur.clear();
    }
    cur += c;
  }
  chunks.push_back(std::move(cur));
  std::string out;
  for (const auto& chunk : chunks) {
    Polynomial p = parse(chunk, nvars);
    for (const auto& [m, c] : p.terms()) out += singular_term(m, c, nvars);
  }
  if (out.empty()) return "0";
  return out[0] == '+' ? out.substr(1) : out;
}

constexpr const char* kSingularScript = R"(LIB"gmssing.lib";
LIB"sing.lib";
ring r = 0, (@VARS@), ds;
poly f = @POLY@;
list v = vfilt(f);
ideal I = v[4];
list sp = spectrum(f);
list vf = v[3];
int m = size(sp[2]);
int mu = milnor(f);
intvec t;
ideal J = f,jacob(f);
int a;
int j;
module temp;
for(a = m ; a >= 1 ; a = a-1){
  temp = vf[a];
  temp = std(temp);
  for(j = 1 ; j <= mu ; j = j+1){
    if(reduce(gen(j),temp) == 0){
      J = J,I[j];
    }
  }
  J = std(J);
  t[a] = vdim(J);
}
int tau = tjurina(f);
intvec w;
w[m] = tau-t[m];
for(a = m-1 ; a >= 1 ; a = a-1){
  w[a] = t[a+1]-t[a];
}
w;
spectrum(f);
mu-tau;
)";

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
    s.replace(p, from.size(), to);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UsageError*>(&e)) return kParseError;
  if (dynamic_cast<const NotIsolatedError*>(&e) || dynamic_cast<const BudgetExceededError*>(&e))
    return kNotIsolated;
  if (dynamic_cast<const DegeneracyError*>(&e)) return kDegenerate;
  if (dynamic_cast<const DomainError*>(&e)) return kDomainError;
  if (dynamic_cast<const UnknownFamilyError*>(&e)) return kUnknownFamily;
  return kCheckFailed;
}

std::uint64_t budget_from_env() {
  const char* v = std::getenv("SINGSPEC_BUDGET");
  if (v == nullptr || *v == '\0') return kDefaultReductionBudget;
  std::uint64_t n = 0;
  std::string_view sv(v);
  auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), n);
  if (ec != std::errc() || p != sv.data() + sv.size() || n == 0)
    throw UsageError("SINGSPEC_BUDGET must be a positive integer, got '" + std::string(sv) + "'");
  return n;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Milnor and Tjurina numbers, spectra and variance inequalities of isolated hypersurface singularities",
               "singspec"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  bool json = false, csv = false;
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--csv", csv, "CSV output");
  app.add_flag("--approx", s.approx, "print decimal approximations instead of exact rationals");
  app.add_option("--catalog", s.catalog_path, "catalog file (default: the built-in catalog)");
  app.add_option("--nvars", s.nvars, "number of variables (default: inferred from the input)")
      ->check(CLI::Range(1, kMaxVars));
  app.add_flag("--assume-nondegenerate", s.assume_nondegenerate,
               "treat facets of unknown non-degeneracy as non-degenerate");

  std::string poly_text;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectrum via the Newton filtration");
  spectrum_cmd->add_option("polynomial", poly_text)->required();
  std::string weights;
  spectrum_cmd->add_option("--weights", weights, "w0,...,wn: use the weighted homogeneous formula");

  auto* tjurina_cmd = app.add_subcommand("tjurina", "Tjurina spectrum, R(f) and lower bounds");
  tjurina_cmd->add_option("polynomial", poly_text)->required();

  auto* check_cmd = app.add_subcommand("check", "Hertling or GHCTS inequality");
  check_cmd->add_option("polynomial", poly_text);
  std::string spectrum_file;
  int dim = 0;
  std::string mode;
  std::optional<long> tau_max;
  check_cmd->add_option("--spectrum-file", spectrum_file, "exponents, separated by spaces or commas");
  check_cmd->add_option("--dim", dim, "n+1 for a spectrum file (hertling mode)");
  check_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"hertling", "ghcts"}));
  check_cmd->add_option("--tau-max", tau_max, "drop exponents down to tau_max in {mu, mu-1, mu-2}");

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in normal forms");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog records");
  auto* verify_cmd = catalog_cmd->add_subcommand("verify", "verify one family instance");
  std::string family;
  std::string params_text;
  verify_cmd->add_option("family", family)->required();
  verify_cmd->add_option("--params", params_text, "e.g. r=2,s=3");
  auto* sweep_cmd = catalog_cmd->add_subcommand("sweep", "verify every family on a parameter grid");
  long rmax = 5, smax = 5, kmax = 4, other_max = 5;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> families;
  std::optional<int> modality;
  bool skip_tjurina = false;
  sweep_cmd->add_option("--rmax", rmax);
  sweep_cmd->add_option("--smax", smax);
  sweep_cmd->add_option("--kmax", kmax);
  sweep_cmd->add_option("--max", other_max, "bound for every other parameter");
  sweep_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--family", families, "restrict to these families");
  sweep_cmd->add_option("--modality", modality);
  sweep_cmd->add_flag("--skip-tjurina", skip_tjurina, "take R(f) from the catalog");

  auto* emit_cmd = app.add_subcommand("emit-singular", "SINGULAR script for cross-validation");
  emit_cmd->add_option("polynomial", poly_text)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (json && csv) throw UsageError("--json and --csv are mutually exclusive");
    s.format = json ? Format::Json : csv ? Format::Csv : Format::Table;
    s.std.reduction_budget = budget_from_env();

    if (spectrum_cmd->parsed()) {
      Polynomial f = read_polynomial(poly_text, s);
      Json r;
      r["input"] = poly_text;
      r["polynomial"] = to_string(f);
      r["nvars"] = f.nvars();
      r["mu"] = milnor_number(f, s.std);
      Spectrum sp;
      if (!weights.empty()) {
        std::vector<Rational> w;
        for (const auto& item : split_list(weights)) w.push_back(parse_rational(item));
        if (static_cast<int>(w.size()) != f.nvars())
          throw DomainError("--weights needs " + std::to_string(f.nvars()) + " entries");
        for (const auto& x : w)
          if (x <= 0) throw DomainError("weights must be positive");
        r["method"] = "quasihomogeneous";
        sp = spectrum_quasihomogeneous(f, WeightVector(w), s.std);
      } else {
        r["method"] = "newton";
        sp = spectrum_newton(f, spectrum_options(s));
      }
      r["spectrum"] = rats(sp.exponents(), s);
      print_report(r, s, out);
      return kOk;
    }

    if (tjurina_cmd->parsed()) {
      Polynomial f = read_polynomial(poly_text, s);
      ExclusionReport rep = exclusion_report(f, spectrum_options(s));
      bool bounds_ok = true;
      for (std::size_t k = 0; k < rep.rset.size(); ++k) bounds_ok = bounds_ok && rep.rset[k] >= rep.bounds[k];
      Json r;
      r["input"] = poly_text;
      r["polynomial"] = to_string(f);
      r["nvars"] = f.nvars();
      r["mu"] = rep.sp.size();
      r["tau"] = rep.sp_tau.size();
      r["spectrum"] = rats(rep.sp.exponents(), s);
      r["tjurina_spectrum"] = rats(rep.sp_tau.exponents(), s);
      r["rset"] = rats(rep.rset, s);
      r["bounds"] = rats(rep.bounds, s);
      r["bounds_ok"] = bounds_ok;
      r["max_excluded"] = check_max_excluded(rep);
      print_report(r, s, out);
      return kOk;
    }

    if (check_cmd->parsed()) {
      if (poly_text.empty() == spectrum_file.empty())
        throw UsageError("check needs either a polynomial or --spectrum-file");
      Json r;
      Spectrum sp;
      std::optional<Polynomial> f;
      if (!poly_text.empty()) {
        f = read_polynomial(poly_text, s);
        r["input"] = poly_text;
        sp = spectrum_newton(*f, spectrum_options(s));
      } else {
        r["spectrum_file"] = spectrum_file;
        auto xs = read_spectrum_file(spectrum_file);
        if (mode == "hertling" && dim <= 0) throw UsageError("hertling mode on a spectrum file needs --dim");
        sp = Spectrum(dim > 0 ? dim : 1, std::move(xs));
      }
      r["mode"] = mode;
      r["mu"] = sp.size();
      InequalityVerdict v;
      if (mode == "hertling") {
        if (tau_max) throw UsageError("--tau-max applies to ghcts mode only");
        v = hertling_check(sp);
      } else if (tau_max) {
        long mu = static_cast<long>(sp.size());
        if (*tau_max < mu - 2 || *tau_max > mu || *tau_max < 1)
          throw DomainError("--tau-max must be one of mu, mu-1, mu-2 (mu = " + std::to_string(mu) + ")");
        r["tau_max"] = *tau_max;
        v = ghcts_reduced_check(sp, static_cast<std::size_t>(*tau_max));
      } else if (f) {
        v = ghcts_check(tjurina_spectrum(*f, spectrum_options(s)));
      } else {
        v = ghcts_check(sp);
      }
      r["verdict"] = verdict_json(v, s);
      print_report(r, s, out);
      return v.holds ? kOk : kCheckFailed;
    }

    if (catalog_cmd->parsed()) {
      std::optional<Catalog> storage;
      const Catalog& cat = load_catalog(s, storage);
      if (list_cmd->parsed()) {
        std::vector<Json> rows;
        for (const auto& fam : cat.families()) {
          Json j;
          j["name"] = fam.name;
          j["kind"] = fam.kind == FamilyKind::Germ ? "germ" : "spectrum";
          j["modality"] = fam.modality;
          std::string params, domain;
          for (const auto& p : fam.params) params += (params.empty() ? "" : ",") + p;
          for (const auto& c : fam.domain) domain += (domain.empty() ? "" : " ") + to_string(c);
          j["params"] = params;
          j["domain"] = domain;
          j["mu"] = fam.mu;
          rows.push_back(std::move(j));
        }
        print_table(rows, s, out);
        return kOk;
      }
      VerifyOptions vopt;
      vopt.spectrum = spectrum_options(s);
      if (verify_cmd->parsed()) {
        const FamilySpec& fam = cat.find(family);
        ParamMap pm = parse_params(params_text);
        check_params(fam, pm);
        VerificationRecord rec = verify(fam, pm, vopt);
        print_report(record_json(rec, s), s, out);
        return rec.all_ok() && rec.mismatches.empty() ? kOk : kCheckFailed;
      }
      if (sweep_cmd->parsed()) {
        vopt.skip_tjurina = skip_tjurina;
        for (const auto& name : families) cat.find(name);
        std::vector<SweepItem> items;
        for (const auto& fam : cat.families()) {
          if (!families.empty() && std::find(families.begin(), families.end(), fam.name) == families.end())
            continue;
          if (modality && fam.modality != *modality) continue;
          for (auto& pm : parameter_grid(fam, {{"r", rmax}, {"s", smax}, {"k", kmax}}, other_max))
            items.push_back({&fam, std::move(pm)});
        }
        auto records = sweep(items, jobs, vopt);
        std::vector<Json> rows;
        std::size_t failed = 0;
        for (const auto& rec : records) {
          if (!rec.all_ok() || !rec.mismatches.empty()) {
            ++failed;
            for (const auto& m : rec.mismatches) err << rec.family << " " << format_params(rec.params) << ": " << m << "\n";
          }
          rows.push_back(s.format == Format::Json ? record_json(rec, s) : record_row(rec));
        }
        print_table(rows, s, out);
        err << records.size() << " records, " << failed << " failed\n";
        return failed == 0 ? kOk : kCheckFailed;
      }
    }

    if (emit_cmd->parsed()) {
      int n = s.nvars > 0 ? s.nvars : infer_nvars(poly_text);
      if (n > 3) throw DomainError("the SINGULAR script supports at most 3 variables");
      std::string vars;
      for (int i = 0; i < n; ++i) vars += (i ? "," : "") + variable_name(i, n);
      std::string script = kSingularScript;
      replace_all(script, "@VARS@", vars);
      replace_all(script, "@POLY@", singular_polynomial(poly_text, n));
      out << script;
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "singspec: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace singspec::cli
