#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sphlie/linalg.hpp"

namespace sphlie {

/// Restricted root system Sigma(g, a), possibly non-reduced. Roots are linear
/// functionals on a, stored over a fixed basis of a. Multiplicities live in
/// the graded algebra, not here.
class RestrictedRootSystem {
public:
  RestrictedRootSystem() = default;
  RestrictedRootSystem(int a_dim, std::vector<QVec> roots, std::vector<int> positive,
                       std::vector<int> simple, QMat gram);

  int a_dim() const { return a_dim_; }
  const std::vector<QVec>& roots() const { return roots_; }
  const QVec& root(int i) const { return roots_[size_t(i)]; }
  const std::vector<int>& positive() const { return positive_; }
  const std::vector<int>& simple() const { return simple_; }
  const QMat& gram() const { return gram_; }
  int num_roots() const { return int(roots_.size()); }
  int rank() const { return int(simple_.size()); }

  bool is_positive(int i) const { return positive_set_.count(i) > 0; }
  /// Index of the root equal to the given functional, or -1.
  int find_root(const QVec& f) const;
  /// Index of -root(i).
  int negative_of(int i) const;

  /// Coordinates of f in the simple basis, if f lies in span(Pi).
  std::optional<QVec> simple_coords(const QVec& f) const;

  /// All roots generated by F c Pi (integer combinations of F lying in Sigma).
  std::vector<int> generated_subsystem(const std::vector<int>& F) const;

  struct ParabolicSpaces {
    QMat a_F;                      // {X : alpha(X) = 0 for alpha in F}
    QMat a_upper_F;                // span of coroots of F
    std::vector<int> u_F_roots;        // Sigma+ \ <F>
    std::vector<int> u_upper_F_roots;  // <F>+
  };
  ParabolicSpaces parabolic_spaces(const std::vector<int>& F) const;

  /// Simple roots with strictly positive coefficient; requires f in N0[Pi].
  std::vector<int> support(const QVec& f) const;

  /// Vectors omega'_beta in a with alpha(omega'_beta) = delta, orthogonal to
  /// the common kernel of Sigma (the center directions).
  std::vector<QVec> fundamental_coweights() const;

  /// Gram-dual vector t_alpha in a with <t_alpha, X> = alpha(X).
  QVec dual_vector(const QVec& f) const;
  QVec coroot(int i) const;

  /// Inner product of two functionals via the gram matrix.
  Rat pairing(const QVec& f, const QVec& g) const;

  void validate_subset(const std::vector<int>& F) const;

private:
  int a_dim_ = 0;
  std::vector<QVec> roots_;
  std::vector<int> positive_;
  std::vector<int> simple_;
  QMat gram_, gram_inv_;
  std::set<int> positive_set_;
};

/// F as a sorted set of indices into Pi (positions in rs.simple()).
using ParabolicSubset = std::vector<int>;

} // namespace sphlie
