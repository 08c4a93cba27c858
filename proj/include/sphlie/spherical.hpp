#pragma once

#include "sphlie/liealg.hpp"

namespace sphlie {

/// One component X_{alpha,beta} of T(X_{-alpha}); beta_root == -1 encodes the
/// zero-weight component lying in (l n h)-perp inside l.
struct TComponent {
  int beta_root;
  QVec vec;
};

/// T on one basis vector of g^{-alpha} c u-bar.
struct TEntry {
  int neg_basis_index;
  int alpha_root;
  std::vector<TComponent> comps;
};

/// A real spherical pair (g, h) in standard position, together with the data
/// of the local structure theorem: the adapted parabolic subset F_Q, l n h,
/// and the operator T with h = (l n h) + graph(T).
struct SphericalPair {
  AlgebraPtr g;
  Subspace h;
  Subspace p_min;
  Subspace l_cap_h;
  std::vector<int> F_Q;      // positions in Pi
  std::vector<int> sigma_u;  // root indices of Sigma_u = Sigma+ \ <F_Q>
  std::vector<TEntry> T;
  QMat a_H; // basis of a n h in a-coordinates
  QMat a_Z; // basis of the orthocomplement of a_H in a

  Subspace levi() const;  // l = m + a + <F_Q> grades
  Subspace u() const;     // Sigma_u grades
  Subspace u_bar() const; // opposite grades
  int rank() const { return a_Z.cols(); }

  /// Orthogonal projection of a functional on a to one vanishing on a_H.
  QVec restrict_functional(const QVec& f) const;
  /// Orthogonal projection a -> a_Z (matrix in a-coordinates).
  QMat a_Z_projection() const;
};

/// Monoid generators, spherical roots, compression cone and edge data.
struct SphericalRootDatum {
  std::vector<QVec> m_generators;    // functionals on a, vanishing on a_H
  std::vector<QVec> m_generators_pi; // the same in N0[Pi] coordinates
  std::vector<int> spherical;        // indices of the irreducible generators
  Cone cone;                         // a_Z^- in a_Z-basis coordinates
  QMat edge;                         // basis of a_{Z,E} in a-coordinates
  std::vector<QVec> omegas;          // dual basis to S in a-coordinates

  int num_spherical() const { return int(spherical.size()); }
  const QVec& spherical_root(int i) const { return m_generators[size_t(spherical[size_t(i)])]; }
  QVec spherical_root_pi(int i) const { return m_generators_pi[size_t(spherical[size_t(i)])]; }
};

/// Finds the adapted parabolic subset and the operator T by exhaustive search
/// over F c Pi; h must be a subalgebra with h + p_min = g and in standard
/// position with respect to the fixed minimal parabolic.
SphericalPair standardize(const AlgebraPtr& g, const Subspace& h);
SphericalPair standardize(const AlgebraPtr& g, const Subspace& h, const Subspace& p_min);

SphericalRootDatum spherical_roots(const SphericalPair& sp);

/// Membership of a functional (in N0[Pi] coordinates) in the monoid generated
/// by the given lattice points, decided by bounded enumeration.
bool monoid_member(const QVec& target_pi, const std::vector<QVec>& gens_pi);

/// Boundary degeneration h_I for I c S (positions into the spherical list).
Subspace degenerate(const SphericalPair& sp, const SphericalRootDatum& srd,
                    const std::vector<int>& I);

/// a_I = span{omega_j : j not in I} + a_{Z,E}, in a-coordinates.
QMat a_I_space(const SphericalPair& sp, const SphericalRootDatum& srd, const std::vector<int>& I);
/// X_I = -sum_{j not in I} omega_j.
QVec X_I_element(const SphericalPair& sp, const SphericalRootDatum& srd, const std::vector<int>& I);

/// All homomorphisms from the lattice generated by the monoid generators to
/// {+-1}; each is reported by its values on the generators, canonically sorted.
std::vector<std::vector<int>> sign_twists(const SphericalPair& sp, const SphericalRootDatum& srd);

/// Twisted subalgebra h_w for a sign character given on the generators.
Subspace twist(const SphericalPair& sp, const SphericalRootDatum& srd,
               const std::vector<int>& eps);

void validate_spherical_subset(const SphericalRootDatum& srd, const std::vector<int>& I);

} // namespace sphlie
