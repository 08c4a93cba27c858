#pragma once

#include <map>

#include "sphlie/spherical.hpp"

namespace sphlie {

struct InterlacingData {
  std::vector<int> J_I; // positions in Pi
  std::vector<int> F_I; // positions in Pi
  QVec Y_I;             // witness in a-coordinates (zero vector when J_I empty)
  bool interlaced_ok = false;
};

struct WavefrontReport {
  bool is_wavefront = false;
  std::vector<std::vector<int>> pi_sigma;          // per spherical root
  std::map<std::vector<int>, InterlacingData> per_I; // populated when wavefront
};

/// Pi_sigma = {alpha in Pi : R+ omega'_alpha + a_H = R+ omega_sigma}, decided
/// exactly: the orthogonal projection of omega'_alpha to a_Z must be a
/// positive rational multiple of omega_sigma.
std::vector<std::vector<int>> pi_sigma_sets(const SphericalPair& sp,
                                            const SphericalRootDatum& srd);

/// Decides wave-frontness twice (cone projection, and the Pi_sigma criterion
/// with edge coverage) and cross-checks the answers.
bool is_wavefront(const SphericalPair& sp, const SphericalRootDatum& srd);

/// Verifies Pi_sigma = supp(sigma) \ U_{sigma' != sigma} supp(sigma') for all
/// spherical roots. Requires the pair to be wave-front.
bool pi_sigma_formula_check(const SphericalPair& sp, const SphericalRootDatum& srd);

/// J_I, F_I and the witness Y_I with Y_I + a_H = X_I, alpha(Y_I) < 0 on
/// Sigma_u \ <F_I>. Requires wave-front.
InterlacingData interlacing_data(const SphericalPair& sp, const SphericalRootDatum& srd,
                                 const std::vector<int>& I);

/// Checks u-bar_F c h_I c p-bar_F, (g_F n h) + u-bar_F c h_I,
/// a_I = a_F + a_H, and <I> = <F> n N0[S] on the generator set.
bool verify_interlaced(const SphericalPair& sp, const SphericalRootDatum& srd,
                       const std::vector<int>& I);

WavefrontReport wavefront_report(const SphericalPair& sp, const SphericalRootDatum& srd);

/// a^- = {X : alpha(X) <= 0 for all alpha in Pi} as a cone in a-coordinates.
Cone negative_chamber(const RestrictedRootSystem& rs);

} // namespace sphlie
