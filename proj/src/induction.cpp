#include "sphlie/induction.hpp"

#include <algorithm>
#include <set>

#include "sphlie/exponents.hpp"

namespace sphlie {

QVec InducedPair::to_parent(const QVec& v) const {
  require(int(v.size()) == g_F->dim(), errc::dimension_mismatch, "Levi coordinates");
  QVec res = zero_vec(parent_dim);
  for (size_t i = 0; i < parent_basis.size(); ++i) res[size_t(parent_basis[i])] = v[i];
  return res;
}

QVec InducedPair::from_parent(const QVec& v) const {
  require(int(v.size()) == parent_dim, errc::dimension_mismatch, "parent coordinates");
  QVec out = zero_vec(g_F->dim());
  QVec check = v;
  for (size_t i = 0; i < parent_basis.size(); ++i) {
    out[i] = v[size_t(parent_basis[i])];
    check[size_t(parent_basis[i])] = 0;
  }
  require(is_zero(check), errc::dimension_mismatch, "vector not supported on the Levi");
  return out;
}

InducedPair induce(const SphericalPair& sp, const std::vector<int>& F) {
  const AlgebraPtr& g = sp.g;
  const RestrictedRootSystem& rs = g->rs();
  rs.validate_subset(F);
  require(std::includes(F.begin(), F.end(), sp.F_Q.begin(), sp.F_Q.end()),
          errc::f_q_not_contained, "F must contain F_Q");

  std::vector<int> genF = rs.generated_subsystem(F);
  std::set<int> genF_set(genF.begin(), genF.end());

  // Levi root system: the roots of <F> over the same a, simple system F.
  std::vector<QVec> roots;
  std::vector<int> positive, simple;
  std::vector<int> root_map(size_t(rs.num_roots()), -1);
  for (int r : genF) {
    root_map[size_t(r)] = int(roots.size());
    roots.push_back(rs.root(r));
    if (rs.is_positive(r)) positive.push_back(int(roots.size()) - 1);
  }
  for (int f : F) simple.push_back(root_map[size_t(rs.simple()[size_t(f)])]);
  RestrictedRootSystem rs_F(rs.a_dim(), roots, positive, simple, rs.gram());

  // Kept basis indices, in parent order.
  std::vector<int> keep;
  std::vector<Grade> grades;
  for (int i = 0; i < g->dim(); ++i) {
    const Grade& gr = g->grades()[size_t(i)];
    if (gr.kind != GradeKind::root) {
      keep.push_back(i);
      grades.push_back(gr);
    } else if (genF_set.count(gr.root)) {
      keep.push_back(i);
      grades.push_back(Grade::of_root(root_map[size_t(gr.root)]));
    }
  }
  std::vector<int> pos_of(size_t(g->dim()), -1);
  for (size_t k = 0; k < keep.size(); ++k) pos_of[size_t(keep[k])] = int(k);
  int nf = int(keep.size());
  std::vector<std::vector<SparseVec>> table(static_cast<size_t>(nf), std::vector<SparseVec>(static_cast<size_t>(nf)));
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j)
      for (auto& [k, v] : g->bracket_basis(keep[size_t(i)], keep[size_t(j)])) {
        require(pos_of[size_t(k)] >= 0, errc::assertion_failure, "Levi not bracket-closed");
        table[size_t(i)][size_t(j)].push_back({pos_of[size_t(k)], v});
      }
  // Invariant form: restriction of the parent's form, nondegenerate on a Levi.
  QMat form(nf, nf);
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j) form.at(i, j) = g->invariant_form().at(keep[size_t(i)], keep[size_t(j)]);
  GradedLieAlgebra::Options opts;
  opts.check_jacobi = false; // inherited from the validated parent
  opts.invariant_form = form;
  AlgebraPtr g_F = GradedLieAlgebra::create(rs_F, grades, table, std::nullopt, opts);

  InducedPair ip;
  ip.F = F;
  ip.g_F = g_F;
  ip.parent_dim = g->dim();
  ip.parent_basis = keep;

  auto from_parent = [&](const QVec& v) {
    QVec out = zero_vec(nf);
    QVec check = v;
    for (int k = 0; k < nf; ++k) {
      out[size_t(k)] = v[size_t(keep[size_t(k)])];
      check[size_t(keep[size_t(k)])] = 0;
    }
    require(is_zero(check), errc::assertion_failure, "vector leaves the Levi");
    return out;
  };

  // h_F = l n h + graph(pr_F o T) on u-bar n g_F.
  std::vector<QVec> hvecs;
  for (const QVec& c : sp.l_cap_h.basis.col_list()) hvecs.push_back(from_parent(c));
  for (const TEntry& e : sp.T) {
    if (!genF_set.count(e.alpha_root)) continue;
    QVec v = unit_vec(g->dim(), e.neg_basis_index);
    for (const TComponent& comp : e.comps)
      if (comp.beta_root < 0 || genF_set.count(comp.beta_root)) v += comp.vec;
    hvecs.push_back(from_parent(v));
  }
  ip.h_F = g_F->subspace_from(hvecs);

  // Induced local structure: openness, l n h = q_F n h_F, Q stays adapted.
  require(sum(ip.h_F, g_F->p_min()).dim() == nf, errc::assertion_failure,
          "h_F + p_min,F != g_F");
  std::vector<int> genFQ = rs.generated_subsystem(sp.F_Q);
  std::set<int> genFQ_set(genFQ.begin(), genFQ.end());
  Subspace q_F = g_F->grade_span([&](const Grade& gr) {
    if (gr.kind != GradeKind::root) return true;
    int parent_root = genF[size_t(gr.root)];
    return genFQ_set.count(parent_root) > 0 || rs_F.is_positive(gr.root);
  });
  std::vector<QVec> lh_F;
  for (const QVec& c : sp.l_cap_h.basis.col_list()) lh_F.push_back(from_parent(c));
  Subspace l_cap_h_F = g_F->subspace_from(lh_F);
  require(intersect(q_F, ip.h_F) == l_cap_h_F, errc::assertion_failure,
          "l n h != q_F n h_F");
  SphericalPair sp_F = standardize(g_F, ip.h_F);
  std::vector<int> fq_in_F;
  for (size_t i = 0; i < F.size(); ++i)
    if (std::binary_search(sp.F_Q.begin(), sp.F_Q.end(), F[i])) fq_in_F.push_back(int(i));
  require(sp_F.F_Q == fq_in_F, errc::assertion_failure,
          "Q_F is not the Z_F-adapted parabolic");
  require(sp_F.a_H == sp.a_H, errc::assertion_failure, "rank equality fails");

  // p_F n h in the parent, the domain of the modular character.
  Subspace p_F = g->grade_span([&](const Grade& gr) {
    if (gr.kind != GradeKind::root) return true;
    return rs.is_positive(gr.root) || genF_set.count(gr.root) > 0;
  });
  ip.p_F_cap_h = intersect(p_F, sp.h);
  if (is_zero(unimodularity_functional(sp.h).coeffs)) ip.delta_F = modular_character(sp, ip);
  return ip;
}

bool induced_cone_check(const SphericalPair& sp, const SphericalRootDatum& srd,
                        const std::vector<int>& F) {
  InducedPair ip = induce(sp, F);
  SphericalPair sp_F = standardize(ip.g_F, ip.h_F);
  SphericalRootDatum srd_F = spherical_roots(sp_F);
  require(sp_F.a_Z == sp.a_Z, errc::assertion_failure, "a_Z changed under induction");

  auto aps = sp.g->rs().parabolic_spaces(F);
  QMat proj = sp.a_Z_projection();
  std::vector<QVec> af_gens;
  for (int j = 0; j < aps.a_F.cols(); ++j) {
    QVec p = proj * aps.a_F.col(j);
    auto c = solve(sp.a_Z, p);
    require(c.has_value(), errc::assertion_failure, "projection left a_Z");
    if (!is_zero(*c)) {
      af_gens.push_back(*c);
      af_gens.push_back(Rat(-1) * *c);
    }
  }
  auto minkowski = [&](const Cone& cone) {
    std::vector<QVec> gens = cone.generators();
    gens.insert(gens.end(), af_gens.begin(), af_gens.end());
    return Cone::from_generators(sp.a_Z.cols(), gens);
  };
  return cone_equal(minkowski(srd.cone), minkowski(srd_F.cone));
}

Rat trace_ad_on_subspace(const GradedLieAlgebra& g, const QMat& basis, const QVec& x) {
  Rat tr(0);
  for (int j = 0; j < basis.cols(); ++j) {
    QVec br = g.bracket(x, basis.col(j));
    auto c = solve(basis, br);
    require(c.has_value(), errc::not_normalizing, "subspace not ad(x)-invariant");
    tr += (*c)[size_t(j)];
  }
  return tr;
}

RationalFunctional modular_character(const SphericalPair& sp, const InducedPair& ip) {
  require(is_zero(unimodularity_functional(sp.h).coeffs), errc::parent_not_unimodular,
          "parent space is not unimodular");
  const AlgebraPtr& g = sp.g;
  const RestrictedRootSystem& rs = g->rs();
  std::vector<int> genF = rs.generated_subsystem(ip.F);
  std::set<int> genF_set(genF.begin(), genF.end());
  Subspace u_F = g->grade_span([&](const Grade& gr) {
    return gr.kind == GradeKind::root && rs.is_positive(gr.root) && !genF_set.count(gr.root);
  });
  Subspace u_F_cap_h = intersect(u_F, sp.h);
  QVec coeffs(static_cast<size_t>(ip.p_F_cap_h.dim()));
  for (int j = 0; j < ip.p_F_cap_h.dim(); ++j) {
    QVec x = ip.p_F_cap_h.basis.col(j);
    Rat tr = trace_ad_on_subspace(*g, u_F.basis, x);
    if (u_F_cap_h.dim() > 0) tr -= trace_ad_on_subspace(*g, u_F_cap_h.basis, x);
    coeffs[size_t(j)] = tr;
  }
  return RationalFunctional{coeffs};
}

bool hat_modular_check(const SphericalPair& sp, const SphericalRootDatum& srd) {
  require(is_zero(unimodularity_functional(sp.h).coeffs), errc::parent_not_unimodular,
          "space is not unimodular");
  const AlgebraPtr& g = sp.g;
  QVec rho = rho_Q(sp);
  std::vector<QVec> edge_vectors;
  for (int j = 0; j < srd.edge.cols(); ++j) edge_vectors.push_back(g->a_embed(srd.edge.col(j)));
  Subspace h_hat = sum(sp.h, g->subspace_from(edge_vectors));
  for (int j = 0; j < srd.edge.cols(); ++j) {
    QVec x = edge_vectors[size_t(j)];
    // d/dt |det Ad_{g/h-hat}(exp tX)| = tr ad_{g/h-hat}(X); Delta-hat = the
    // inverse determinant, so the infinitesimal character is minus the trace.
    Rat tr = trace_ad_on_quotient(h_hat, x);
    if (tr != 2 * dot(rho, srd.edge.col(j))) return false;
  }
  return true;
}

} // namespace sphlie
