#pragma once

// Parametric normal-form families with their expected invariants, and
// end-to-end verification of computed invariants against them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singspec/hertling.hpp"
#include "singspec/spectrum.hpp"
#include "singspec/tjurina.hpp"

namespace singspec {

using ParamMap = std::map<std::string, long>;

enum class FamilyKind {
  Germ,      ///< has a representative polynomial; invariants are computed
  Spectrum,  ///< spectrum data only; inequality checks run on the listed values
};

/// One constraint of a parameter domain: `name>=v`, `name<=v`, `even(name)`,
/// `odd(name)` or `holds(expr)` (expr nonzero, written without spaces).
struct ParamConstraint {
  enum class Op { AtLeast, AtMost, Even, Odd, Holds };
  std::string param;  ///< the expression for Holds
  Op op = Op::AtLeast;
  long value = 0;

  bool operator==(const ParamConstraint&) const = default;
};

/// Expected values of the inequality bookkeeping for one check, as
/// expressions in the parameters. Any field may be left empty.
struct CheckExpectation {
  std::string mean;
  std::string sum_sq_dev;
  std::string range;
  std::string residual;

  bool empty() const { return mean.empty() && sum_sq_dev.empty() && range.empty() && residual.empty(); }
  bool operator==(const CheckExpectation&) const = default;
};

/// A catalog record. Every expression field is kept as text and evaluated
/// on demand with exact arithmetic.
struct FamilySpec {
  std::string name;
  FamilyKind kind = FamilyKind::Germ;
  int modality = 0;
  std::vector<std::string> vars;  ///< polynomial variables (Germ)
  int dim = 0;                    ///< n+1 (Spectrum records)
  std::vector<std::string> params;
  std::vector<ParamConstraint> domain;
  std::string templ;  ///< representative, Germ only
  std::vector<std::pair<std::string, Rational>> moduli;
  std::string mu;
  std::string spectrum;
  std::string rset;
  /// Offsets d with tau_max = mu - d asserted for the inequality check.
  std::vector<int> tau_max_offsets;
  /// Non-degeneracy of the representative is asserted rather than checked.
  bool assume_nondegenerate = false;
  CheckExpectation hertling;
  std::map<int, CheckExpectation> ghcts;  ///< keyed by tau_max offset
  std::string note;

  int nvars() const { return kind == FamilyKind::Germ ? static_cast<int>(vars.size()) : dim; }
  bool operator==(const FamilySpec&) const = default;
};

std::string to_string(const ParamConstraint& c);

/// Throws DomainError when a parameter is missing, unknown or violates the
/// domain.
void check_params(const FamilySpec& fam, const ParamMap& params);

/// The representative with the given parameters and moduli (defaults from
/// the record). Throws ConsistencyError when its Milnor number differs from
/// the record's formula, DomainError for Spectrum records.
Polynomial instantiate(const FamilySpec& fam, const ParamMap& params,
                       const std::map<std::string, Rational>& moduli = {},
                       const StdOptions& options = {});

/// Closed-form values at the given parameters.
std::size_t expected_mu(const FamilySpec& fam, const ParamMap& params);
Spectrum expected_spectrum_at(const FamilySpec& fam, const ParamMap& params);
std::vector<Rational> expected_rset_at(const FamilySpec& fam, const ParamMap& params);

struct VerificationRecord {
  std::string family;
  ParamMap params;
  std::string polynomial;  ///< empty for Spectrum records
  std::size_t mu = 0;
  std::size_t tau = 0;
  Spectrum spectrum;
  std::vector<Rational> rset;
  std::optional<InequalityVerdict> hertling;
  std::vector<InequalityVerdict> ghcts;
  bool mu_ok = false;
  bool spectrum_ok = false;
  bool rset_ok = false;
  bool hertling_ok = false;
  bool ghcts_ok = false;
  std::vector<std::string> mismatches;

  bool all_ok() const { return mu_ok && spectrum_ok && rset_ok && hertling_ok && ghcts_ok; }
};

struct VerifyOptions {
  SpectrumOptions spectrum;
  /// Skip the Tjurina computation and take R(f) from the record.
  bool skip_tjurina = false;
};

/// Runs the whole pipeline and compares against the record. Failures of
/// any stage are recorded in `mismatches`, never thrown (except for
/// parameters outside the domain, which throw DomainError).
VerificationRecord verify(const FamilySpec& fam, const ParamMap& params,
                          const VerifyOptions& options = {});

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<FamilySpec> families) : families_(std::move(families)) {}

  const std::vector<FamilySpec>& families() const noexcept { return families_; }
  /// Throws UnknownFamilyError.
  const FamilySpec& find(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// Parses the text format; throws ParseError with a line number.
  static Catalog parse(std::string_view text);
  static Catalog load(const std::string& path);
  /// The catalog shipped with the library.
  static const Catalog& builtin();

  std::string serialize() const;
  void save(const std::string& path) const;

  bool operator==(const Catalog&) const = default;

 private:
  std::vector<FamilySpec> families_;
};

/// Every in-domain parameter tuple with each parameter between its lower
/// bound and `max_for(param)`, in lexicographic order.
std::vector<ParamMap> parameter_grid(const FamilySpec& fam, const std::map<std::string, long>& maxima,
                                     long default_max);

struct SweepItem {
  const FamilySpec* family;
  ParamMap params;
};

/// Verifies every item using up to `jobs` threads; results are returned in
/// input order.
std::vector<VerificationRecord> sweep(const std::vector<SweepItem>& items, unsigned jobs,
                                      const VerifyOptions& options = {});

std::string format_params(const ParamMap& params);
/// Parses "r=2,s=3" (also accepts spaces as separators).
ParamMap parse_params(std::string_view text);

}  // namespace singspec
