#pragma once

#include "sphlie/wavefront.hpp"

namespace sphlie {

/// Complex-valued functional on a_Z, stored as a pair of functionals on a
/// that vanish on a_H.
struct ComplexFunctional {
  QVec re, im;
  bool operator==(const ComplexFunctional& o) const { return re == o.re && im == o.im; }
};

/// Leading-exponent data of a spherical pair (V, eta): the edge character chi
/// (values on the edge basis), the finite set E_lead, and the opaque degree
/// bound d of the expansion polynomials.
struct ExponentData {
  QVec chi_re, chi_im; // values on the columns of srd.edge
  std::vector<ComplexFunctional> e_lead;
  int degree_bound = 0;
};

/// rho_Q as a functional on a vanishing on a_H: half the trace of ad on the
/// nilradical of the adapted parabolic, orthogonally restricted to a_Z.
QVec rho_Q(const SphericalPair& sp);

/// Builds a functional on a, vanishing on a_H, from its values on the basis
/// (omega_1..omega_s, edge columns) of a_Z.
QVec functional_from_values(const SphericalPair& sp, const SphericalRootDatum& srd,
                            const QVec& omega_values, const QVec& edge_values);

/// Validates the invariants (nonempty E_lead, xi|edge = -chi for every
/// leading exponent) and returns the data. Throws EdgeMismatch.
ExponentData make_exponent_data(const SphericalPair& sp, const SphericalRootDatum& srd,
                                QVec chi_re, QVec chi_im,
                                std::vector<ComplexFunctional> e_lead, int degree_bound);

/// Lambda_{V,eta}: coordinatewise minimum of Re lambda over the omega_j,
/// extended by -Re chi on the edge.
QVec lambda_V_eta(const SphericalPair& sp, const SphericalRootDatum& srd,
                  const ExponentData& ed);

/// (Lambda - rho_Q)|_{a_Z^-} <= 0, equivalently >= 0 at every omega_j and
/// = 0 on the edge.
bool is_tempered(const SphericalPair& sp, const SphericalRootDatum& srd, const ExponentData& ed);

/// Strict inequality at every omega_j together with the edge condition.
bool strong_inequality(const SphericalPair& sp, const SphericalRootDatum& srd,
                       const ExponentData& ed);

/// I_{eta,lambda} = {sigma_i : rho_Q(omega_i) < Re lambda(omega_i)} for the
/// leading exponent with the given index. Requires temperedness.
std::vector<int> I_eta_lambda(const SphericalPair& sp, const SphericalRootDatum& srd,
                              const ExponentData& ed, int lambda_index);

/// A complex functional restricted to a_I, reported by its values on the
/// basis (omega_j : j not in I, edge columns).
struct RestrictedExponent {
  QVec re_vals, im_vals;
  bool operator==(const RestrictedExponent& o) const {
    return re_vals == o.re_vals && im_vals == o.im_vals;
  }
};

/// E_{lead,I}: restrictions lambda|_{a_I} that stay leading along a_I; decided
/// by integer-linear feasibility over pairs of leading exponents.
std::vector<RestrictedExponent> lead_I(const SphericalPair& sp, const SphericalRootDatum& srd,
                                       const ExponentData& ed, const std::vector<int>& I);

struct OptimalCandidate {
  int lambda_index;
  std::vector<int> I;
  std::vector<QVec> omega_sigma_I; // for sigma in I, vectors in a-coordinates
  QVec lambda_I;                   // Lambda_{V,eta,I} on a, vanishing on a_H
};

struct TemperedReport {
  QVec lambda_V_eta;
  bool tempered = false;
  bool strong = false;
  int min_eta = 0;
  std::vector<OptimalCandidate> optimal;
};

/// Minimal-cardinality I_{eta,lambda} candidates with Lambda_{V,eta,I};
/// asserts the squeeze and the exactness lemmas on the way.
TemperedReport optimal_pairs(const SphericalPair& sp, const SphericalRootDatum& srd,
                             const ExponentData& ed);

struct PipelineEntry {
  int lambda_index;
  std::vector<int> I;   // subset of S
  std::vector<int> F;   // = F_I, positions in Pi
  Subspace parabolic;   // opposite parabolic p-bar_F
  Subspace levi;        // g_F as a subspace of g
  Subspace h_prime;     // g_F n h_I
};

/// Wave-front tempered-embedding pipeline: for each optimal candidate, the
/// interlacing parabolic and the Levi-level subalgebra receiving the twisted
/// discrete series.
std::vector<PipelineEntry> embedding_pipeline(const SphericalPair& sp,
                                              const SphericalRootDatum& srd,
                                              const ExponentData& ed);

} // namespace sphlie
