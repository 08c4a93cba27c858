#include "sphlie/cones.hpp"

#include <algorithm>
#include <functional>

namespace sphlie {

namespace {

// Enumerates extremal rays of the pointed cone {y : (rows*C) y <= 0} inside
// the column span of C (a complement of the lineality space), brute force
// over active sets. Desk-scale dimensions only.
std::vector<QVec> pointed_rays(const std::vector<QVec>& rows, const QMat& comp) {
  int m = comp.cols();
  std::vector<QVec> out;
  if (m == 0) return out;
  // Restrict each functional to complement coordinates.
  std::vector<QVec> rr;
  for (auto& r : rows) {
    QVec rc(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) rc[size_t(j)] = dot(r, comp.col(j));
    rr.push_back(rc);
  }
  int nr = int(rr.size());
  std::vector<QVec> cand;
  // All subsets of rows of size m-1 (in the complement coordinates).
  std::vector<int> idx(static_cast<size_t>(m > 0 ? m - 1 : 0));
  std::function<void(int, int)> rec = [&](int start, int need) {
    if (need == 0) {
      QMat a(m - 1, m);
      for (int k = 0; k < m - 1; ++k)
        for (int j = 0; j < m; ++j) a.at(k, j) = rr[size_t(idx[size_t(k)])][size_t(j)];
      QMat ker = kernel_basis(a);
      if (ker.cols() != 1) return;
      cand.push_back(ker.col(0));
      return;
    }
    for (int i = start; i <= nr - need; ++i) {
      idx[size_t(m - 1 - need)] = i;
      rec(i + 1, need - 1);
    }
  };
  if (m == 1) {
    cand.push_back(QVec{Rat(1)});
  } else {
    rec(0, m - 1);
  }
  auto feasible = [&](const QVec& y) {
    for (auto& r : rr)
      if (dot(r, y) > 0) return false;
    return true;
  };
  auto active_rank = [&](const QVec& y) {
    std::vector<QVec> act;
    for (auto& r : rr)
      if (dot(r, y) == 0) act.push_back(r);
    return act.empty() ? 0 : rank(QMat::from_rows(act));
  };
  for (auto& y0 : cand) {
    for (int sgn : {1, -1}) {
      QVec y = (sgn == 1) ? y0 : Rat(-1) * y0;
      if (!feasible(y)) continue;
      if (m > 1 && active_rank(y) != m - 1) continue;
      // Back to ambient coordinates, canonical primitive form.
      out.push_back(primitive(comp * y));
    }
  }
  std::sort(out.begin(), out.end(), vec_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QMat complement_of(const QMat& sub, int dim) {
  // Standard basis vectors extending sub to the full space.
  QMat cur = sub;
  std::vector<QVec> extra;
  for (int i = 0; i < dim && cur.cols() + int(extra.size()) < dim; ++i) {
    QVec e = unit_vec(dim, i);
    QMat test = hstack(hstack(cur, QMat::from_cols(extra).cols() ? QMat::from_cols(extra) : QMat(dim, 0)),
                       QMat::from_cols({e}));
    if (rank(test) == cur.cols() + int(extra.size()) + 1) extra.push_back(e);
  }
  return extra.empty() ? QMat(dim, 0) : QMat::from_cols(extra);
}

} // namespace

DualDescription dual_rays(const std::vector<QVec>& rows, int dim) {
  for (auto& r : rows)
    require(int(r.size()) == dim, errc::dimension_mismatch, "functional dimension");
  DualDescription dd;
  QMat a = rows.empty() ? QMat(0, dim) : QMat::from_rows(rows);
  dd.lineality = rows.empty() ? col_echelon(QMat::identity(dim)) : kernel_basis(a);
  QMat comp = complement_of(dd.lineality, dim);
  dd.rays = pointed_rays(rows, comp);
  return dd;
}

Cone Cone::from_inequalities(int dim, std::vector<QVec> ineqs) {
  Cone c;
  c.dim_ = dim;
  for (auto& f : ineqs) {
    require(int(f.size()) == dim, errc::dimension_mismatch, "inequality dimension");
    if (!is_zero(f)) c.ineqs_.push_back(primitive(f));
  }
  std::sort(c.ineqs_.begin(), c.ineqs_.end(), vec_less);
  c.ineqs_.erase(std::unique(c.ineqs_.begin(), c.ineqs_.end()), c.ineqs_.end());
  return c;
}

Cone Cone::from_generators(int dim, const std::vector<QVec>& gens) {
  for (auto& g : gens)
    require(int(g.size()) == dim, errc::dimension_mismatch, "generator dimension");
  // The inequalities of cone(gens) are the rays + lineality of the dual cone
  // {f : f(g) <= 0}; finitely generated cones are closed, so biduality applies.
  std::vector<QVec> gg;
  for (auto& g : gens)
    if (!is_zero(g)) gg.push_back(g);
  DualDescription dual = dual_rays(gg, dim);
  std::vector<QVec> ineqs = dual.rays;
  for (int j = 0; j < dual.lineality.cols(); ++j) {
    QVec v = primitive(dual.lineality.col(j), true);
    ineqs.push_back(v);
    ineqs.push_back(Rat(-1) * v);
  }
  Cone c = from_inequalities(dim, std::move(ineqs));
  c.generators(); // canonicalize and cache
  return c;
}

const std::vector<QVec>& Cone::generators() const {
  if (!gens_) {
    DualDescription dd = dual_rays(ineqs_, dim_);
    std::vector<QVec> g = dd.rays;
    for (int j = 0; j < dd.lineality.cols(); ++j) {
      QVec v = primitive(dd.lineality.col(j), true);
      g.push_back(v);
      g.push_back(Rat(-1) * v);
    }
    std::sort(g.begin(), g.end(), vec_less);
    g.erase(std::unique(g.begin(), g.end()), g.end());
    gens_ = std::move(g);
  }
  return *gens_;
}

QMat Cone::edge() const {
  if (ineqs_.empty()) return col_echelon(QMat::identity(dim_));
  return kernel_basis(QMat::from_rows(ineqs_));
}

bool Cone::contains_point(const QVec& v) const {
  require(int(v.size()) == dim_, errc::dimension_mismatch, "point dimension");
  for (auto& f : ineqs_)
    if (dot(f, v) > 0) return false;
  return true;
}

Cone project_cone(const Cone& c, const QMat& kernel, const QMat& target_basis) {
  int dim = c.ambient_dim();
  require(kernel.rows() == dim || kernel.cols() == 0, errc::dimension_mismatch, "kernel ambient");
  require(target_basis.rows() == dim, errc::dimension_mismatch, "target ambient");
  QMat full = hstack(kernel.cols() ? kernel : QMat(dim, 0), target_basis);
  require(full.cols() == dim && rank(full) == dim, errc::dimension_mismatch,
          "kernel and target do not form a direct sum");
  QMat inv = inverse(full);
  std::vector<QVec> imgs;
  for (auto& g : c.generators()) {
    QVec coords = inv * g;
    QVec t(static_cast<size_t>(target_basis.cols()));
    for (int j = 0; j < target_basis.cols(); ++j) t[size_t(j)] = coords[size_t(kernel.cols() + j)];
    imgs.push_back(t);
  }
  return Cone::from_generators(target_basis.cols(), imgs);
}

bool cone_contains(const Cone& outer, const Cone& inner) {
  require(outer.ambient_dim() == inner.ambient_dim(), errc::dimension_mismatch,
          "cones in different ambient spaces");
  for (auto& g : inner.generators())
    if (!outer.contains_point(g)) return false;
  return true;
}

bool cone_equal(const Cone& a, const Cone& b) {
  return cone_contains(a, b) && cone_contains(b, a);
}

} // namespace sphlie
