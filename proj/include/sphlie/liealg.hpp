#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sphlie/cones.hpp"
#include "sphlie/rootsys.hpp"

namespace sphlie {

enum class GradeKind { m_part, a_part, root };

struct Grade {
  GradeKind kind;
  int root = -1; // index into the root system when kind == root

  static Grade m() { return {GradeKind::m_part, -1}; }
  static Grade a() { return {GradeKind::a_part, -1}; }
  static Grade of_root(int i) { return {GradeKind::root, i}; }
  bool operator==(const Grade& o) const { return kind == o.kind && root == o.root; }
};

using SparseVec = std::vector<std::pair<int, Rat>>;

class GradedLieAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

/// Subspace of a graded Lie algebra; the basis matrix is kept in reduced
/// column echelon form, so equality of subspaces is equality of matrices.
struct Subspace {
  AlgebraPtr parent;
  QMat basis; // dim x k, canonical

  int dim() const { return basis.cols(); }
  bool contains(const QVec& v) const { return span_contains(basis, v); }
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
};

/// Real reductive Lie algebra with exact structure constants, graded by
/// restricted roots and the m + a zero part.
class GradedLieAlgebra : public std::enable_shared_from_this<GradedLieAlgebra> {
public:
  struct Options {
    bool check_jacobi = true; // O(dim^3) sparse triple check
    std::optional<QMat> invariant_form; // defaults to the Killing form
  };

  static AlgebraPtr create(RestrictedRootSystem rs, std::vector<Grade> grades,
                           std::vector<std::vector<SparseVec>> bracket_table,
                           std::optional<QMat> theta, Options opts);
  static AlgebraPtr create(RestrictedRootSystem rs, std::vector<Grade> grades,
                           std::vector<std::vector<SparseVec>> bracket_table,
                           std::optional<QMat> theta = std::nullopt);

  int dim() const { return dim_; }
  const RestrictedRootSystem& rs() const { return rs_; }
  const std::vector<Grade>& grades() const { return grades_; }
  const QMat& invariant_form() const { return form_; }
  const std::optional<QMat>& theta() const { return theta_; }

  const std::vector<int>& a_indices() const { return a_indices_; }
  const std::vector<int>& m_indices() const { return m_indices_; }
  const std::vector<int>& basis_of_grade(int root_index) const;
  int root_multiplicity(int root_index) const { return int(basis_of_grade(root_index).size()); }

  QVec bracket(const QVec& x, const QVec& y) const;
  const SparseVec& bracket_basis(int i, int j) const { return table_[size_t(i)][size_t(j)]; }

  /// Trace of ad(x) on the whole algebra.
  Rat trace_ad(const QVec& x) const;

  /// Embeds a vector of a-coordinates into the algebra.
  QVec a_embed(const QVec& a_coords) const;
  /// Extracts the a-part coordinates of an algebra element.
  QVec a_part(const QVec& x) const;

  Subspace subspace(const QMat& cols) const;
  Subspace subspace_from(const std::vector<QVec>& vecs) const;
  Subspace zero_subspace() const;
  Subspace full_subspace() const;
  template <class Pred>
  Subspace grade_span(Pred keep) const {
    std::vector<QVec> cols;
    for (int i = 0; i < dim_; ++i)
      if (keep(grades_[size_t(i)])) cols.push_back(unit_vec(dim_, i));
    return subspace_from(cols);
  }

  /// m + a + positive grades.
  Subspace p_min() const;
  /// Opposite nilradical: all negative grades.
  Subspace n_bar() const;

private:
  GradedLieAlgebra() = default;
  void validate(bool check_jacobi) const;
  QMat killing_form() const;

  int dim_ = 0;
  RestrictedRootSystem rs_;
  std::vector<Grade> grades_;
  std::vector<std::vector<SparseVec>> table_;
  QMat form_;
  std::optional<QMat> theta_;
  std::vector<int> a_indices_, m_indices_;
  std::vector<std::vector<int>> grade_basis_; // per root index
};

bool is_subalgebra(const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Trace of the action induced by ad(x) on parent/s; x must normalize s.
Rat trace_ad_on_quotient(const Subspace& s, const QVec& x);

/// The functional X -> tr ad_{g/h}(X) on the basis of h; h must be a
/// subalgebra. Z = G/H is unimodular iff this vanishes identically.
RationalFunctional unimodularity_functional(const Subspace& h);

} // namespace sphlie
