#pragma once

#include "sphlie/spherical.hpp"

namespace sphlie {

/// Levi-induced pair Z_F = G_F/H_F for F containing F_Q. The Levi algebra
/// reuses the parent's basis vectors (parent_basis maps its indices back).
struct InducedPair {
  std::vector<int> F; // positions in the parent's Pi
  AlgebraPtr g_F;
  int parent_dim = 0;
  std::vector<int> parent_basis;
  Subspace h_F;           // inside g_F
  Subspace p_F_cap_h;     // inside the parent
  std::optional<RationalFunctional> delta_F; // on the basis of p_F n h

  QVec to_parent(const QVec& v) const;
  QVec from_parent(const QVec& v) const;
};

InducedPair induce(const SphericalPair& sp, const std::vector<int>& F);

/// Compression-cone identity A_F A_Z^- = A_F A_{Z_F}^-: compares the two
/// Minkowski sums inside
/// a_Z exactly.
bool induced_cone_check(const SphericalPair& sp, const SphericalRootDatum& srd,
                        const std::vector<int>& F);

/// Differential of the modular character of Z_F on a basis of p_F n h:
/// X -> tr ad on u_F/(u_F n h). Requires the parent Z to be unimodular.
RationalFunctional modular_character(const SphericalPair& sp, const InducedPair& ip);

/// Checks that the infinitesimal modular character of h-hat = h + a_{Z,E}
/// restricted to a_{Z,E} equals -2 rho_Q there. Requires Z unimodular.
bool hat_modular_check(const SphericalPair& sp, const SphericalRootDatum& srd);

/// Trace of ad(x) on an ad(x)-invariant subspace.
Rat trace_ad_on_subspace(const GradedLieAlgebra& g, const QMat& basis, const QVec& x);

} // namespace sphlie
