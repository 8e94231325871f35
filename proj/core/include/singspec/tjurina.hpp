#pragma once

// Tjurina spectrum, the excluded exponents R(f) = Sp(f) - Sp^tau(f), and
// lower bounds for the excluded exponents.

#include <vector>

#include "singspec/spectrum.hpp"

namespace singspec {

/// Multiset of shifted valuations of a maximal basis of O/(f, J(f)).
/// Same preconditions and error contract as spectrum_newton.
Spectrum tjurina_spectrum(const Polynomial& f, const SpectrumOptions& options = {});

struct ExclusionReport {
  Spectrum sp;
  Spectrum sp_tau;
  std::vector<Rational> rset;    ///< sorted, |rset| = mu - tau
  std::vector<Rational> bounds;  ///< lower bounds for the k-th smallest of rset
};

/// Computes both spectra, their difference and the bounds. Throws
/// ConsistencyError when Sp^tau is not a sub-multiset of Sp.
ExclusionReport exclusion_report(const Polynomial& f, const SpectrumOptions& options = {});

/// Lower bounds for the d smallest excluded exponents. With jumping indices
/// j_1 < ... < j_t (the last position of each distinct value) and r_k the
/// largest r with j_r <= k, bound_k = alpha_{j_{r_k}} + 1. Throws
/// DomainError when d > |s| or when no jumping index is <= k.
std::vector<Rational> theoremB_bounds(const Spectrum& s, std::size_t d);

/// True when mu = tau, or max(Sp) lies in R(f) exactly once.
bool check_max_excluded(const ExclusionReport& report);

}  // namespace singspec
