#include "sphlie/liealg.hpp"

#include <algorithm>

namespace sphlie {

bool Subspace::contains(const Subspace& o) const {
  require(parent == o.parent, errc::parent_mismatch, "subspaces of different algebras");
  return span_contains_all(basis, o.basis);
}

bool Subspace::operator==(const Subspace& o) const {
  return parent == o.parent && basis == o.basis;
}

AlgebraPtr GradedLieAlgebra::create(RestrictedRootSystem rs, std::vector<Grade> grades,
                                    std::vector<std::vector<SparseVec>> bracket_table,
                                    std::optional<QMat> theta) {
  return create(std::move(rs), std::move(grades), std::move(bracket_table), std::move(theta),
                Options{});
}

AlgebraPtr GradedLieAlgebra::create(RestrictedRootSystem rs, std::vector<Grade> grades,
                                    std::vector<std::vector<SparseVec>> bracket_table,
                                    std::optional<QMat> theta, Options opts) {
  auto g = std::shared_ptr<GradedLieAlgebra>(new GradedLieAlgebra());
  g->dim_ = int(grades.size());
  g->rs_ = std::move(rs);
  g->grades_ = std::move(grades);
  g->table_ = std::move(bracket_table);
  g->theta_ = std::move(theta);
  require(int(g->table_.size()) == g->dim_, errc::dimension_mismatch, "bracket table rows");
  for (auto& row : g->table_)
    require(int(row.size()) == g->dim_, errc::dimension_mismatch, "bracket table cols");
  g->grade_basis_.assign(size_t(g->rs_.num_roots()), {});
  for (int i = 0; i < g->dim_; ++i) {
    const Grade& gr = g->grades_[size_t(i)];
    switch (gr.kind) {
      case GradeKind::a_part: g->a_indices_.push_back(i); break;
      case GradeKind::m_part: g->m_indices_.push_back(i); break;
      case GradeKind::root:
        require(gr.root >= 0 && gr.root < g->rs_.num_roots(), errc::dimension_mismatch,
                "grade references unknown root");
        g->grade_basis_[size_t(gr.root)].push_back(i);
        break;
    }
  }
  require(int(g->a_indices_.size()) == g->rs_.a_dim(), errc::dimension_mismatch,
          "a-part dimension must match the root system");
  for (int r = 0; r < g->rs_.num_roots(); ++r)
    require(!g->grade_basis_[size_t(r)].empty(), errc::assertion_failure,
            "root without root space");
  g->form_ = opts.invariant_form ? *opts.invariant_form : g->killing_form();
  g->validate(opts.check_jacobi);
  return g;
}

const std::vector<int>& GradedLieAlgebra::basis_of_grade(int root_index) const {
  return grade_basis_[size_t(root_index)];
}

QVec GradedLieAlgebra::bracket(const QVec& x, const QVec& y) const {
  require(int(x.size()) == dim_ && int(y.size()) == dim_, errc::dimension_mismatch, "bracket");
  QVec out = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[size_t(i)] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[size_t(j)] == 0) continue;
      Rat c = x[size_t(i)] * y[size_t(j)];
      for (auto& [k, v] : table_[size_t(i)][size_t(j)]) out[size_t(k)] += c * v;
    }
  }
  return out;
}

Rat GradedLieAlgebra::trace_ad(const QVec& x) const {
  Rat tr(0);
  for (int j = 0; j < dim_; ++j) {
    // coefficient of e_j in [x, e_j]
    for (int i = 0; i < dim_; ++i) {
      if (x[size_t(i)] == 0) continue;
      for (auto& [k, v] : table_[size_t(i)][size_t(j)])
        if (k == j) tr += x[size_t(i)] * v;
    }
  }
  return tr;
}

QVec GradedLieAlgebra::a_embed(const QVec& a_coords) const {
  require(int(a_coords.size()) == rs_.a_dim(), errc::dimension_mismatch, "a-coordinates");
  QVec v = zero_vec(dim_);
  for (size_t k = 0; k < a_indices_.size(); ++k) v[size_t(a_indices_[k])] = a_coords[k];
  return v;
}

QVec GradedLieAlgebra::a_part(const QVec& x) const {
  QVec v = zero_vec(rs_.a_dim());
  for (size_t k = 0; k < a_indices_.size(); ++k) v[k] = x[size_t(a_indices_[k])];
  return v;
}

Subspace GradedLieAlgebra::subspace(const QMat& cols) const {
  require(cols.rows() == dim_ || cols.cols() == 0, errc::dimension_mismatch, "subspace basis");
  return Subspace{shared_from_this(), col_echelon(cols.cols() ? cols : QMat(dim_, 0))};
}

Subspace GradedLieAlgebra::subspace_from(const std::vector<QVec>& vecs) const {
  if (vecs.empty()) return zero_subspace();
  return subspace(QMat::from_cols(vecs));
}

Subspace GradedLieAlgebra::zero_subspace() const {
  return Subspace{shared_from_this(), QMat(dim_, 0)};
}

Subspace GradedLieAlgebra::full_subspace() const {
  return Subspace{shared_from_this(), col_echelon(QMat::identity(dim_))};
}

Subspace GradedLieAlgebra::p_min() const {
  return grade_span([&](const Grade& g) {
    return g.kind != GradeKind::root || rs_.is_positive(g.root);
  });
}

Subspace GradedLieAlgebra::n_bar() const {
  return grade_span([&](const Grade& g) {
    return g.kind == GradeKind::root && !rs_.is_positive(g.root);
  });
}

QMat GradedLieAlgebra::killing_form() const {
  // B(e_i, e_j) = tr(ad e_i ad e_j), exploiting sparsity of the table.
  QMat b(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      Rat s(0);
      for (int k = 0; k < dim_; ++k) {
        // coefficient of e_k in [e_i, [e_j, e_k]]
        for (auto& [l, v] : table_[size_t(j)][size_t(k)])
          for (auto& [p, w] : table_[size_t(i)][size_t(l)])
            if (p == k) s += v * w;
      }
      b.at(i, j) = s;
      b.at(j, i) = s;
    }
  return b;
}

void GradedLieAlgebra::validate(bool check_jacobi) const {
  auto grade_weight = [&](int i) -> std::optional<QVec> {
    const Grade& g = grades_[size_t(i)];
    if (g.kind == GradeKind::root) return rs_.root(g.root);
    return std::nullopt; // zero part
  };
  // Antisymmetry.
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j) {
      QVec lhs = zero_vec(dim_), rhs = zero_vec(dim_);
      for (auto& [k, v] : table_[size_t(i)][size_t(j)]) lhs[size_t(k)] += v;
      for (auto& [k, v] : table_[size_t(j)][size_t(i)]) rhs[size_t(k)] += v;
      require(lhs == Rat(-1) * rhs, errc::assertion_failure, "bracket not antisymmetric");
    }
  // Grading: [g^x, g^y] c g^{x+y}, a acts diagonally, [m, a] = 0.
  QVec zero_a = zero_vec(rs_.a_dim());
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      auto wi = grade_weight(i), wj = grade_weight(j);
      QVec w = (wi ? *wi : zero_a) + (wj ? *wj : zero_a);
      int target = is_zero(w) ? -1 : rs_.find_root(w);
      for (auto& [k, v] : table_[size_t(i)][size_t(j)]) {
        if (v == 0) continue;
        auto wk = grade_weight(k);
        if (target == -1)
          require(!wk.has_value(), errc::assertion_failure,
                  "bracket leaves the zero grade");
        else
          require(wk.has_value() && *wk == w, errc::assertion_failure,
                  "bracket violates the root grading");
      }
      if (!wi && !wj && is_zero(w)) {
        // fine: zero part closes (checked by target == -1 above)
      }
    }
  }
  // a-part acts by the root functionals, and is abelian; [m, a] = 0.
  for (size_t ka = 0; ka < a_indices_.size(); ++ka) {
    int ia = a_indices_[ka];
    for (int j = 0; j < dim_; ++j) {
      const Grade& gj = grades_[size_t(j)];
      QVec expect = zero_vec(dim_);
      if (gj.kind == GradeKind::root)
        expect[size_t(j)] = rs_.root(gj.root)[ka];
      QVec got = zero_vec(dim_);
      for (auto& [k, v] : table_[size_t(ia)][size_t(j)]) got[size_t(k)] += v;
      require(got == expect, errc::assertion_failure,
              gj.kind == GradeKind::root ? "a-part does not act diagonally"
                                         : "[a, m + a] must vanish");
    }
  }
  // theta, when present: involutive automorphism exchanging g^alpha and g^-alpha.
  if (theta_) {
    const QMat& th = *theta_;
    require(th.rows() == dim_ && th.cols() == dim_, errc::dimension_mismatch, "theta size");
    require(th * th == QMat::identity(dim_), errc::assertion_failure, "theta not involutive");
    for (int i = 0; i < dim_; ++i) {
      const Grade& g = grades_[size_t(i)];
      if (g.kind != GradeKind::root) continue;
      int neg = rs_.negative_of(g.root);
      QVec img = th.col(i);
      for (int k = 0; k < dim_; ++k)
        if (img[size_t(k)] != 0)
          require(grades_[size_t(k)].kind == GradeKind::root && grades_[size_t(k)].root == neg,
                  errc::assertion_failure, "theta does not send grade alpha to grade -alpha");
    }
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < i; ++j) {
        QVec lhs = bracket(th.col(i), th.col(j));
        QVec x = zero_vec(dim_), y = zero_vec(dim_);
        x[size_t(i)] = 1;
        y[size_t(j)] = 1;
        QVec rhs = th * bracket(x, y);
        require(lhs == rhs, errc::assertion_failure, "theta is not an automorphism");
      }
  }
  if (check_jacobi) {
    // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0, sparse.
    auto ad_sparse = [&](int i, const SparseVec& s) {
      SparseVec out;
      QVec acc = zero_vec(dim_);
      for (auto& [l, v] : s)
        for (auto& [p, w] : table_[size_t(i)][size_t(l)]) acc[size_t(p)] += v * w;
      for (int p = 0; p < dim_; ++p)
        if (acc[size_t(p)] != 0) out.push_back({p, acc[size_t(p)]});
      return out;
    };
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k) {
          QVec s = zero_vec(dim_);
          for (auto& [p, v] : ad_sparse(i, table_[size_t(j)][size_t(k)])) s[size_t(p)] += v;
          for (auto& [p, v] : ad_sparse(j, table_[size_t(k)][size_t(i)])) s[size_t(p)] += v;
          for (auto& [p, v] : ad_sparse(k, table_[size_t(i)][size_t(j)])) s[size_t(p)] += v;
          require(is_zero(s), errc::assertion_failure, "Jacobi identity fails");
        }
  }
  // The invariant form must be symmetric and nondegenerate (needed for the
  // local structure theorem's orthogonal complements).
  require(form_ == form_.transpose(), errc::assertion_failure, "invariant form not symmetric");
  require(rank(form_) == dim_, errc::assertion_failure, "invariant form degenerate");
}

bool is_subalgebra(const Subspace& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (!s.contains(s.parent->bracket(s.basis.col(i), s.basis.col(j)))) return false;
  return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.parent == b.parent, errc::parent_mismatch, "intersect");
  return Subspace{a.parent, span_intersect(a.basis, b.basis)};
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.parent == b.parent, errc::parent_mismatch, "sum");
  return Subspace{a.parent, span_sum(a.basis, b.basis)};
}

Rat trace_ad_on_quotient(const Subspace& s, const QVec& x) {
  const GradedLieAlgebra& g = *s.parent;
  Rat inside(0);
  for (int j = 0; j < s.dim(); ++j) {
    QVec br = g.bracket(x, s.basis.col(j));
    auto c = solve(s.basis, br);
    require(c.has_value(), errc::not_normalizing, "X does not normalize the subspace");
    inside += (*c)[size_t(j)];
  }
  return g.trace_ad(x) - inside;
}

RationalFunctional unimodularity_functional(const Subspace& h) {
  require(is_subalgebra(h), errc::not_subalgebra, "h must be a subalgebra");
  QVec coeffs(static_cast<size_t>(h.dim()));
  for (int j = 0; j < h.dim(); ++j) coeffs[size_t(j)] = trace_ad_on_quotient(h, h.basis.col(j));
  return RationalFunctional{coeffs};
}

} // namespace sphlie
