#include "sphlie/wavefront.hpp"

#include <algorithm>
#include <set>

namespace sphlie {

namespace {

QVec a_Z_coords(const SphericalPair& sp, const QVec& v_in_a) {
  auto c = solve(sp.a_Z, v_in_a);
  require(c.has_value(), errc::assertion_failure, "vector not in a_Z");
  return *c;
}

} // namespace

Cone negative_chamber(const RestrictedRootSystem& rs) {
  std::vector<QVec> ineqs;
  for (int s : rs.simple()) ineqs.push_back(rs.root(s));
  return Cone::from_inequalities(rs.a_dim(), ineqs);
}

std::vector<std::vector<int>> pi_sigma_sets(const SphericalPair& sp,
                                            const SphericalRootDatum& srd) {
  const RestrictedRootSystem& rs = sp.g->rs();
  QMat proj = sp.a_Z_projection();
  std::vector<QVec> coweights = rs.fundamental_coweights();
  std::vector<std::vector<int>> out(size_t(srd.num_spherical()));
  for (int a = 0; a < rs.rank(); ++a) {
    QVec p = proj * coweights[size_t(a)];
    if (is_zero(p)) continue;
    for (int i = 0; i < srd.num_spherical(); ++i) {
      const QVec& omega = srd.omegas[size_t(i)];
      // p = c * omega with c > 0?
      Rat c = dot(srd.spherical_root(i), p);
      if (c <= 0) continue;
      if (p == c * omega) out[size_t(i)].push_back(a);
    }
  }
  return out;
}

namespace {

bool wavefront_by_projection(const SphericalPair& sp, const SphericalRootDatum& srd) {
  Cone aminus = negative_chamber(sp.g->rs());
  Cone image = project_cone(aminus, sp.a_H, sp.a_Z);
  return cone_equal(image, srd.cone);
}

bool wavefront_by_pi_sigma(const SphericalPair& sp, const SphericalRootDatum& srd) {
  for (auto& ps : pi_sigma_sets(sp, srd))
    if (ps.empty()) return false;
  // The Pi_sigma criterion sees the extremal rays of a_Z^-; the edge has to be
  // covered by the projection of a^- as well.
  if (srd.edge.cols() > 0) {
    const RestrictedRootSystem& rs = sp.g->rs();
    QMat proj = sp.a_Z_projection();
    std::vector<QVec> gens;
    for (const QVec& w : rs.fundamental_coweights())
      gens.push_back(Rat(-1) * a_Z_coords(sp, proj * w));
    std::vector<QVec> crows;
    for (int s : rs.simple()) crows.push_back(rs.root(s));
    QMat center = crows.empty() ? col_echelon(QMat::identity(rs.a_dim()))
                                : kernel_basis(QMat::from_rows(crows));
    for (int j = 0; j < center.cols(); ++j) {
      QVec c = a_Z_coords(sp, proj * center.col(j));
      gens.push_back(c);
      gens.push_back(Rat(-1) * c);
    }
    Cone image = Cone::from_generators(sp.a_Z.cols(), gens);
    for (int j = 0; j < srd.edge.cols(); ++j) {
      QVec e = a_Z_coords(sp, srd.edge.col(j));
      if (!image.contains_point(e) || !image.contains_point(Rat(-1) * e)) return false;
    }
  }
  return true;
}

} // namespace

bool is_wavefront(const SphericalPair& sp, const SphericalRootDatum& srd) {
  bool a = wavefront_by_projection(sp, srd);
  bool b = wavefront_by_pi_sigma(sp, srd);
  require(a == b, errc::consistency_failure,
          "wave-front methods disagree (cone projection vs Pi_sigma)");
  return a;
}

bool pi_sigma_formula_check(const SphericalPair& sp, const SphericalRootDatum& srd) {
  require(is_wavefront(sp, srd), errc::not_wavefront, "pair is not wave-front");
  const RestrictedRootSystem& rs = sp.g->rs();
  std::vector<std::vector<int>> direct = pi_sigma_sets(sp, srd);
  for (int i = 0; i < srd.num_spherical(); ++i) {
    std::vector<int> supp_i = rs.support(srd.spherical_root(i));
    std::set<int> others;
    for (int j = 0; j < srd.num_spherical(); ++j) {
      if (j == i) continue;
      for (int a : rs.support(srd.spherical_root(j))) others.insert(a);
    }
    std::vector<int> formula;
    for (int a : supp_i)
      if (!others.count(a)) formula.push_back(a);
    if (formula != direct[size_t(i)]) return false;
  }
  return true;
}

InterlacingData interlacing_data(const SphericalPair& sp, const SphericalRootDatum& srd,
                                 const std::vector<int>& I) {
  require(is_wavefront(sp, srd), errc::not_wavefront, "pair is not wave-front");
  validate_spherical_subset(srd, I);
  const RestrictedRootSystem& rs = sp.g->rs();
  std::vector<std::vector<int>> ps = pi_sigma_sets(sp, srd);
  std::set<int> fq(sp.F_Q.begin(), sp.F_Q.end());
  std::set<int> iset(I.begin(), I.end());

  InterlacingData out;
  std::set<int> jset;
  for (int sigma = 0; sigma < srd.num_spherical(); ++sigma) {
    if (iset.count(sigma)) continue;
    for (int a : ps[size_t(sigma)])
      if (!fq.count(a)) jset.insert(a);
  }
  out.J_I.assign(jset.begin(), jset.end());
  for (int a = 0; a < rs.rank(); ++a)
    if (!jset.count(a)) out.F_I.push_back(a);

  // Y_I = -sum_{alpha in J_I} c_alpha omega'_alpha with c_alpha > 0 and
  // Y_I + a_H = X_I. Within each Pi_sigma \ F_Q the projected coweights are
  // positive multiples of omega_sigma, so equal weights per sigma solve it.
  QMat proj = sp.a_Z_projection();
  std::vector<QVec> coweights = rs.fundamental_coweights();
  QVec y = zero_vec(rs.a_dim());
  for (int sigma = 0; sigma < srd.num_spherical(); ++sigma) {
    if (iset.count(sigma)) continue;
    std::vector<int> group;
    for (int a : ps[size_t(sigma)])
      if (!fq.count(a)) group.push_back(a);
    require(!group.empty(), errc::no_positive_solution,
            "Pi_sigma c F_Q contradicts the wave-front assumption");
    Rat total(0);
    for (int a : group) total += dot(srd.spherical_root(sigma), proj * coweights[size_t(a)]);
    require(total > 0, errc::no_positive_solution, "projected coweights do not add up");
    for (int a : group) y = y - Rat(1) / total * coweights[size_t(a)];
  }
  out.Y_I = y;

  // Asserted properties of the interlacing witness.
  QVec x_I = X_I_element(sp, srd, I);
  require(proj * y == x_I, errc::assertion_failure, "Y_I + a_H != X_I");
  for (int f : out.F_I)
    require(dot(rs.root(rs.simple()[size_t(f)]), y) == 0, errc::assertion_failure,
            "Y_I not in a_F");
  std::vector<int> genF = rs.generated_subsystem(out.F_I);
  std::set<int> genF_set(genF.begin(), genF.end());
  for (int r : sp.sigma_u)
    if (!genF_set.count(r))
      require(dot(rs.root(r), y) < 0, errc::assertion_failure,
              "alpha(Y_I) not negative on Sigma_u \\ <F>");
  out.interlaced_ok = verify_interlaced(sp, srd, I);
  return out;
}

bool verify_interlaced(const SphericalPair& sp, const SphericalRootDatum& srd,
                       const std::vector<int>& I) {
  require(is_wavefront(sp, srd), errc::not_wavefront, "pair is not wave-front");
  validate_spherical_subset(srd, I);
  const RestrictedRootSystem& rs = sp.g->rs();
  std::vector<std::vector<int>> ps = pi_sigma_sets(sp, srd);
  std::set<int> fq(sp.F_Q.begin(), sp.F_Q.end());
  std::set<int> iset(I.begin(), I.end());
  std::set<int> jset;
  for (int sigma = 0; sigma < srd.num_spherical(); ++sigma) {
    if (iset.count(sigma)) continue;
    for (int a : ps[size_t(sigma)])
      if (!fq.count(a)) jset.insert(a);
  }
  std::vector<int> F;
  for (int a = 0; a < rs.rank(); ++a)
    if (!jset.count(a)) F.push_back(a);

  const AlgebraPtr& g = sp.g;
  Subspace h_I = degenerate(sp, srd, I);
  std::vector<int> genF = rs.generated_subsystem(F);
  std::set<int> genF_set(genF.begin(), genF.end());
  Subspace ubar_F = g->grade_span([&](const Grade& gr) {
    if (gr.kind != GradeKind::root || rs.is_positive(gr.root)) return false;
    return genF_set.count(rs.negative_of(gr.root)) == 0;
  });
  Subspace pbar_F = g->grade_span([&](const Grade& gr) {
    if (gr.kind != GradeKind::root) return true;
    return !rs.is_positive(gr.root) || genF_set.count(gr.root) > 0;
  });
  Subspace g_F = g->grade_span([&](const Grade& gr) {
    return gr.kind != GradeKind::root || genF_set.count(gr.root) > 0;
  });

  if (!h_I.contains(ubar_F)) return false;
  if (!pbar_F.contains(h_I)) return false;
  if (!h_I.contains(sum(intersect(g_F, sp.h), ubar_F))) return false;

  // a_I = a_F + a_H, an identity in a/a_H (a_I is realized inside a_Z).
  auto aps = rs.parabolic_spaces(F);
  QMat a_I = a_I_space(sp, srd, I);
  if (span_sum(aps.a_F, sp.a_H) != span_sum(a_I, sp.a_H)) return false;

  // <I> = <F> n N0[S] restricted to the monoid generators.
  std::vector<QVec> igens;
  for (int i : I) igens.push_back(srd.spherical_root_pi(i));
  for (size_t k = 0; k < srd.m_generators.size(); ++k) {
    bool in_I = monoid_member(srd.m_generators_pi[k], igens);
    std::vector<int> supp = rs.support(srd.m_generators[k]);
    bool supp_in_F = std::all_of(supp.begin(), supp.end(),
                                 [&](int a) { return !jset.count(a); });
    if (in_I != supp_in_F) return false;
  }
  return true;
}

WavefrontReport wavefront_report(const SphericalPair& sp, const SphericalRootDatum& srd) {
  WavefrontReport rep;
  rep.is_wavefront = is_wavefront(sp, srd);
  rep.pi_sigma = pi_sigma_sets(sp, srd);
  if (rep.is_wavefront) {
    int s = srd.num_spherical();
    for (int mask = 0; mask < (1 << s); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < s; ++i)
        if (mask & (1 << i)) I.push_back(i);
      rep.per_I[I] = interlacing_data(sp, srd, I);
    }
  }
  return rep;
}

} // namespace sphlie
