#include "sphlie/spherical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sphlie {

namespace {

Subspace grades_in(const AlgebraPtr& g, const std::set<int>& roots, bool with_m, bool with_a) {
  return g->grade_span([&](const Grade& gr) {
    if (gr.kind == GradeKind::m_part) return with_m;
    if (gr.kind == GradeKind::a_part) return with_a;
    return roots.count(gr.root) > 0;
  });
}

// {X in l : B(X, l n h) = 0}, in ambient coordinates.
QMat perp_in_l(const GradedLieAlgebra& g, const QMat& l_basis, const QMat& lh_basis) {
  if (lh_basis.cols() == 0) return l_basis;
  QMat rows(lh_basis.cols(), l_basis.cols());
  QMat bm = g.invariant_form() * l_basis;
  for (int i = 0; i < lh_basis.cols(); ++i) {
    QVec y = lh_basis.col(i);
    for (int j = 0; j < l_basis.cols(); ++j) rows.at(i, j) = dot(y, bm.col(j));
  }
  QMat ker = kernel_basis(rows);
  return ker.cols() ? col_echelon(l_basis * ker) : QMat(l_basis.rows(), 0);
}

struct Candidate {
  std::vector<int> F;
  Subspace l_cap_h;
  std::vector<int> sigma_u;
  std::vector<TEntry> T;
};

std::optional<Candidate> try_parabolic(const AlgebraPtr& g, const Subspace& h,
                                       const std::vector<int>& F) {
  const RestrictedRootSystem& rs = g->rs();
  std::vector<int> genF = rs.generated_subsystem(F);
  std::set<int> genF_set(genF.begin(), genF.end());
  // (FQ): g^alpha c h for alpha in <F>.
  for (int r : genF)
    for (int b : g->basis_of_grade(r))
      if (!h.contains(unit_vec(g->dim(), b))) return std::nullopt;
  Subspace l = grades_in(g, genF_set, true, true);
  Subspace lh = intersect(l, h);
  std::vector<int> sigma_u;
  for (int p : rs.positive())
    if (!genF_set.count(p)) sigma_u.push_back(p);
  std::set<int> su(sigma_u.begin(), sigma_u.end());
  Subspace uF = grades_in(g, su, false, false);
  QMat perp = perp_in_l(*g, l.basis, lh.basis);
  QMat w = span_sum(perp, uF.basis);
  if (w.cols() != perp.cols() + uF.basis.cols()) return std::nullopt;
  // Direct decomposition g = h + W validates the local structure shape.
  if (h.dim() + w.cols() != g->dim()) return std::nullopt;
  if (span_intersect(h.basis, w).cols() != 0) return std::nullopt;
  QMat split = hstack(h.basis, w);
  QMat split_inv = inverse(split);
  Candidate cand{F, lh, sigma_u, {}};
  for (int r : sigma_u) {
    int neg = rs.negative_of(r);
    for (int b : g->basis_of_grade(neg)) {
      QVec e = unit_vec(g->dim(), b);
      QVec coords = split_inv * e;
      QVec wpart = zero_vec(g->dim());
      for (int j = 0; j < w.cols(); ++j)
        if (coords[size_t(h.dim() + j)] != 0) wpart += coords[size_t(h.dim() + j)] * w.col(j);
      QVec t = Rat(-1) * wpart; // e + t in h
      // Split the image by grade: zero-weight part in l, root parts in u.
      TEntry entry{b, r, {}};
      std::map<int, QVec> by_root;
      QVec lpart = zero_vec(g->dim());
      for (int k = 0; k < g->dim(); ++k) {
        if (t[size_t(k)] == 0) continue;
        const Grade& gr = g->grades()[size_t(k)];
        if (gr.kind == GradeKind::root && su.count(gr.root)) {
          auto& v = by_root.try_emplace(gr.root, zero_vec(g->dim())).first->second;
          v[size_t(k)] = t[size_t(k)];
        } else {
          lpart[size_t(k)] = t[size_t(k)];
        }
      }
      if (!is_zero(lpart)) entry.comps.push_back({-1, lpart});
      for (auto& [beta, v] : by_root) entry.comps.push_back({beta, v});
      cand.T.push_back(std::move(entry));
    }
  }
  return cand;
}

} // namespace

Subspace SphericalPair::levi() const {
  std::vector<int> genF = g->rs().generated_subsystem(F_Q);
  return grades_in(g, std::set<int>(genF.begin(), genF.end()), true, true);
}

Subspace SphericalPair::u() const {
  return grades_in(g, std::set<int>(sigma_u.begin(), sigma_u.end()), false, false);
}

Subspace SphericalPair::u_bar() const {
  std::set<int> neg;
  for (int r : sigma_u) neg.insert(g->rs().negative_of(r));
  return grades_in(g, neg, false, false);
}

QMat SphericalPair::a_Z_projection() const {
  // a = a_H + a_Z orthogonally; P = a_Z (G_ZZ)^-1 a_Z^T Gram.
  const QMat& gram = g->rs().gram();
  int n = g->rs().a_dim();
  if (a_Z.cols() == 0) return QMat(n, n);
  QMat gzz(a_Z.cols(), a_Z.cols());
  QMat ga = gram * a_Z;
  for (int i = 0; i < a_Z.cols(); ++i)
    for (int j = 0; j < a_Z.cols(); ++j) gzz.at(i, j) = dot(a_Z.col(i), ga.col(j));
  return a_Z * inverse(gzz) * ga.transpose();
}

QVec SphericalPair::restrict_functional(const QVec& f) const {
  require(int(f.size()) == g->rs().a_dim(), errc::dimension_mismatch, "functional on a");
  QMat p = a_Z_projection();
  QVec out = zero_vec(int(f.size()));
  for (int j = 0; j < p.cols(); ++j) out[size_t(j)] = dot(f, p.col(j));
  return out;
}

SphericalPair standardize(const AlgebraPtr& g, const Subspace& h, const Subspace& p_min) {
  require(p_min == g->p_min(), errc::assertion_failure,
          "p_min must be the minimal parabolic determined by the positive system");
  return standardize(g, h);
}

SphericalPair standardize(const AlgebraPtr& g, const Subspace& h) {
  require(h.parent == g, errc::parent_mismatch, "h must live in g");
  require(is_subalgebra(h), errc::not_subalgebra, "h is not a subalgebra");
  Subspace pm = g->p_min();
  require(sum(h, pm).dim() == g->dim(), errc::not_spherical, "h + p_min != g");

  int k = g->rs().rank();
  std::vector<Candidate> found;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> F;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) F.push_back(i);
    if (auto cand = try_parabolic(g, h, F)) found.push_back(std::move(*cand));
  }
  require(!found.empty(), errc::no_adapted_parabolic,
          "no F c Pi validates the local structure decomposition");
  require(found.size() == 1, errc::consistency_failure,
          "adapted parabolic subset is not unique");
  Candidate& c = found.front();

  SphericalPair sp;
  sp.g = g;
  sp.h = h;
  sp.p_min = pm;
  sp.l_cap_h = c.l_cap_h;
  sp.F_Q = c.F;
  sp.sigma_u = c.sigma_u;
  sp.T = std::move(c.T);
  // a_H = a n h in a-coordinates.
  std::vector<QVec> acols;
  for (int i : g->a_indices()) acols.push_back(unit_vec(g->dim(), i));
  Subspace a_sub = g->subspace_from(acols);
  Subspace ah = intersect(a_sub, h);
  std::vector<QVec> ah_cols;
  for (int j = 0; j < ah.dim(); ++j) ah_cols.push_back(g->a_part(ah.basis.col(j)));
  sp.a_H = ah_cols.empty() ? QMat(g->rs().a_dim(), 0) : col_echelon(QMat::from_cols(ah_cols));
  // a_Z realized as the orthocomplement of a_H.
  if (sp.a_H.cols() == 0) {
    sp.a_Z = col_echelon(QMat::identity(g->rs().a_dim()));
  } else {
    QMat rows = (g->rs().gram() * sp.a_H).transpose();
    sp.a_Z = kernel_basis(rows);
  }

  // Reconstructing h from l n h and graph(T) must reproduce h exactly.
  std::vector<QVec> hvecs = sp.l_cap_h.basis.col_list();
  for (const TEntry& e : sp.T) {
    QVec v = unit_vec(g->dim(), e.neg_basis_index);
    for (const TComponent& comp : e.comps) v += comp.vec;
    hvecs.push_back(v);
  }
  require(g->subspace_from(hvecs) == h, errc::consistency_failure,
          "graph decomposition does not reconstruct h");
  return sp;
}

namespace {

QVec pi_coords_of(const SphericalPair& sp, const QVec& f_on_a) {
  auto c = sp.g->rs().simple_coords(f_on_a);
  require(c.has_value(), errc::assertion_failure, "monoid generator outside span(Pi)");
  for (auto& x : *c)
    require(rat_den(x) == 1 && x >= 0, errc::assertion_failure,
            "monoid generator not in N0[Pi]");
  return *c;
}

bool decompose_dfs(QVec rem, const std::vector<QVec>& gens, size_t i, int parts, int min_parts) {
  if (is_zero(rem)) return parts >= min_parts;
  if (i == gens.size()) return false;
  // Max multiplicity of gens[i] within rem (coordinatewise bound).
  const QVec& gi = gens[i];
  Int maxc(-1);
  for (size_t j = 0; j < rem.size(); ++j) {
    if (gi[j] == 0) continue;
    if (rem[j] < 0) return false;
    Int bound = rat_num(rem[j]) / rat_num(gi[j]);
    if (maxc < 0 || bound < maxc) maxc = bound;
  }
  if (maxc < 0) maxc = 0; // zero generator cannot occur; guard anyway
  for (Int c = maxc; c >= 0; --c) {
    QVec next = rem;
    bool ok = true;
    for (size_t j = 0; j < rem.size(); ++j) {
      next[j] = rem[j] - Rat(c) * gi[j];
      if (next[j] < 0) ok = false;
    }
    if (!ok) continue;
    if (decompose_dfs(next, gens, i + 1, parts + int(c), min_parts)) return true;
  }
  return false;
}

bool sum_of_at_least_two(const QVec& target, const std::vector<QVec>& gens) {
  return decompose_dfs(target, gens, 0, 0, 2);
}

} // namespace

bool monoid_member(const QVec& target_pi, const std::vector<QVec>& gens_pi) {
  return decompose_dfs(target_pi, gens_pi, 0, 0, 0);
}

SphericalRootDatum spherical_roots(const SphericalPair& sp) {
  const RestrictedRootSystem& rs = sp.g->rs();
  SphericalRootDatum out;
  std::set<QVec, bool (*)(const QVec&, const QVec&)> gens(vec_less);
  for (const TEntry& e : sp.T) {
    QVec alpha = rs.root(e.alpha_root);
    for (const TComponent& comp : e.comps) {
      QVec w = alpha;
      if (comp.beta_root >= 0) w = w + rs.root(comp.beta_root);
      gens.insert(w);
    }
  }
  // Canonical order: by height in the Pi-basis, then lexicographic.
  std::vector<std::pair<QVec, QVec>> pairs; // (pi-coords, a-functional)
  for (const QVec& gqv : gens) pairs.push_back({pi_coords_of(sp, gqv), gqv});
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    Rat hx(0), hy(0);
    for (auto& v : x.first) hx += v;
    for (auto& v : y.first) hy += v;
    if (hx != hy) return hx < hy;
    return vec_less(x.first, y.first);
  });
  for (auto& [pi, f] : pairs) {
    for (int j = 0; j < sp.a_H.cols(); ++j)
      require(dot(f, sp.a_H.col(j)) == 0, errc::generator_not_vanishing_on_a_h,
              "monoid generator does not vanish on a_H");
    out.m_generators.push_back(f);
    out.m_generators_pi.push_back(pi);
  }
  for (size_t i = 0; i < out.m_generators.size(); ++i)
    if (!sum_of_at_least_two(out.m_generators_pi[i], out.m_generators_pi))
      out.spherical.push_back(int(i));
  // the irreducible elements generate: N0[S] contains every generator
  std::vector<QVec> s_pi;
  for (int i : out.spherical) s_pi.push_back(out.m_generators_pi[size_t(i)]);
  for (const QVec& g : out.m_generators_pi)
    require(monoid_member(g, s_pi), errc::assertion_failure,
            "monoid generator outside N0[S]");

  // Compression cone in a_Z-basis coordinates.
  std::vector<QVec> ineqs;
  for (const QVec& f : out.m_generators) {
    QVec row(size_t(sp.a_Z.cols()));
    for (int j = 0; j < sp.a_Z.cols(); ++j) row[size_t(j)] = dot(f, sp.a_Z.col(j));
    ineqs.push_back(row);
  }
  out.cone = Cone::from_inequalities(sp.a_Z.cols(), ineqs);
  out.cone.generators();

  // Edge a_{Z,E} = {X in a_Z : sigma(X) = 0}, lifted to a-coordinates.
  int s = out.num_spherical();
  if (s == 0) {
    out.edge = sp.a_Z;
  } else {
    QMat rows(s, sp.a_Z.cols());
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < sp.a_Z.cols(); ++j)
        rows.at(i, j) = dot(out.spherical_root(i), sp.a_Z.col(j));
    QMat ker = kernel_basis(rows);
    out.edge = ker.cols() ? col_echelon(sp.a_Z * ker) : QMat(rs.a_dim(), 0);
  }
  require(s == sp.a_Z.cols() - out.edge.cols(), errc::assertion_failure, "s != r - e");
  if (s > 0) {
    std::vector<QVec> srows;
    for (int i = 0; i < s; ++i) srows.push_back(out.spherical_root(i));
    require(rank(QMat::from_rows(srows)) == s, errc::assertion_failure,
            "spherical roots not linearly independent");
  }

  // Dual basis omega_j: sigma_i(omega_j) = delta_ij, omega_j orthogonal to the
  // edge, inside a_Z.
  if (s > 0) {
    QMat candidates; // basis of a_Z n edge-perp
    if (out.edge.cols() == 0) {
      candidates = sp.a_Z;
    } else {
      QMat rows = (rs.gram() * out.edge).transpose() * sp.a_Z;
      QMat ker = kernel_basis(rows);
      candidates = sp.a_Z * ker;
    }
    require(candidates.cols() == s, errc::assertion_failure, "omega space dimension");
    QMat m(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) m.at(i, j) = dot(out.spherical_root(i), candidates.col(j));
    QMat minv = inverse(m);
    for (int j = 0; j < s; ++j) {
      QVec w = zero_vec(rs.a_dim());
      for (int t = 0; t < s; ++t) w += minv.at(t, j) * candidates.col(t);
      out.omegas.push_back(w);
    }
  }
  return out;
}

void validate_spherical_subset(const SphericalRootDatum& srd, const std::vector<int>& I) {
  for (size_t i = 0; i < I.size(); ++i) {
    require(I[i] >= 0 && I[i] < srd.num_spherical(), errc::invalid_subset, "I is not a subset of S");
    if (i) require(I[i - 1] < I[i], errc::invalid_subset, "I must be sorted and duplicate-free");
  }
}

Subspace degenerate(const SphericalPair& sp, const SphericalRootDatum& srd,
                    const std::vector<int>& I) {
  validate_spherical_subset(srd, I);
  const RestrictedRootSystem& rs = sp.g->rs();
  std::vector<QVec> igens;
  for (int i : I) igens.push_back(srd.spherical_root_pi(i));
  std::vector<QVec> hvecs = sp.l_cap_h.basis.col_list();
  for (const TEntry& e : sp.T) {
    QVec v = unit_vec(sp.g->dim(), e.neg_basis_index);
    for (const TComponent& comp : e.comps) {
      QVec w = rs.root(e.alpha_root);
      if (comp.beta_root >= 0) w = w + rs.root(comp.beta_root);
      if (monoid_member(pi_coords_of(sp, w), igens)) v += comp.vec;
    }
    hvecs.push_back(v);
  }
  Subspace h_I = sp.g->subspace_from(hvecs);
  require(h_I.dim() == sp.h.dim(), errc::assertion_failure, "dim h_I != dim h");
  require(is_subalgebra(h_I), errc::assertion_failure, "h_I is not a subalgebra");
  require(sum(h_I, sp.p_min).dim() == sp.g->dim(), errc::assertion_failure,
          "h_I + p_min != g");
  if (int(I.size()) == srd.num_spherical())
    require(h_I == sp.h, errc::assertion_failure, "h_S != h");
  if (I.empty())
    require(h_I == sum(sp.l_cap_h, sp.u_bar()), errc::assertion_failure,
            "h_empty != l n h + u-bar");
  return h_I;
}

QMat a_I_space(const SphericalPair& sp, const SphericalRootDatum& srd, const std::vector<int>& I) {
  validate_spherical_subset(srd, I);
  std::set<int> iset(I.begin(), I.end());
  std::vector<QVec> cols = srd.edge.col_list();
  for (int j = 0; j < srd.num_spherical(); ++j)
    if (!iset.count(j)) cols.push_back(srd.omegas[size_t(j)]);
  QMat out = cols.empty() ? QMat(sp.g->rs().a_dim(), 0) : col_echelon(QMat::from_cols(cols));
  return out;
}

QVec X_I_element(const SphericalPair& sp, const SphericalRootDatum& srd, const std::vector<int>& I) {
  validate_spherical_subset(srd, I);
  std::set<int> iset(I.begin(), I.end());
  QVec x = zero_vec(sp.g->rs().a_dim());
  for (int j = 0; j < srd.num_spherical(); ++j)
    if (!iset.count(j)) x = x - srd.omegas[size_t(j)];
  for (int j = 0; j < srd.num_spherical(); ++j) {
    Rat v = dot(srd.spherical_root(j), x);
    if (iset.count(j))
      require(v == 0, errc::assertion_failure, "sigma(X_I) != 0 on I");
    else
      require(v < 0, errc::assertion_failure, "sigma(X_I) not negative off I");
  }
  return x;
}

namespace {

std::vector<std::vector<Int>> generator_lattice(const SphericalRootDatum& srd) {
  std::vector<std::vector<Int>> cols;
  for (const QVec& g : srd.m_generators_pi) {
    std::vector<Int> c;
    for (auto& x : g) c.push_back(rat_num(x));
    cols.push_back(c);
  }
  return hnf_lattice_basis(cols);
}

} // namespace

std::vector<std::vector<int>> sign_twists(const SphericalPair& sp, const SphericalRootDatum& srd) {
  (void)sp;
  auto basis = generator_lattice(srd);
  size_t k = basis.size();
  std::vector<std::vector<Int>> coords;
  for (const QVec& g : srd.m_generators_pi) {
    std::vector<Int> v;
    for (auto& x : g) v.push_back(rat_num(x));
    auto z = lattice_coordinates(basis, v);
    require(z.has_value(), errc::assertion_failure, "generator outside its own lattice");
    coords.push_back(*z);
  }
  std::vector<std::vector<int>> out;
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    std::vector<int> eps;
    for (auto& z : coords) {
      Int parity(0);
      for (size_t j = 0; j < k; ++j)
        if (mask & (size_t(1) << j)) parity += z[j];
      eps.push_back(parity % 2 == 0 ? 1 : -1);
    }
    out.push_back(eps);
  }
  std::sort(out.begin(), out.end());
  require(std::unique(out.begin(), out.end()) == out.end(), errc::assertion_failure,
          "sign characters not distinct");
  return out;
}

Subspace twist(const SphericalPair& sp, const SphericalRootDatum& srd,
               const std::vector<int>& eps) {
  require(eps.size() == srd.m_generators.size(), errc::inconsistent_sign,
          "one sign per monoid generator required");
  for (int e : eps)
    require(e == 1 || e == -1, errc::inconsistent_sign, "signs must be +-1");
  // eps must extend to a homomorphism of the generated lattice: solvable over
  // GF(2) in the lattice-basis coordinates.
  auto basis = generator_lattice(srd);
  size_t k = basis.size();
  std::vector<std::vector<int>> rows;
  std::vector<int> rhs;
  for (size_t i = 0; i < srd.m_generators_pi.size(); ++i) {
    std::vector<Int> v;
    for (auto& x : srd.m_generators_pi[i]) v.push_back(rat_num(x));
    auto z = lattice_coordinates(basis, v);
    std::vector<int> row;
    for (size_t j = 0; j < k; ++j) row.push_back(int((*z)[j] % 2 != 0));
    rows.push_back(row);
    rhs.push_back(eps[i] == -1);
  }
  // Gaussian elimination over GF(2).
  {
    std::vector<std::vector<int>> a = rows;
    std::vector<int> b = rhs;
    size_t r = 0;
    for (size_t c = 0; c < k && r < a.size(); ++c) {
      size_t p = r;
      while (p < a.size() && !a[p][c]) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[r]);
      std::swap(b[p], b[r]);
      for (size_t i = 0; i < a.size(); ++i) {
        if (i == r || !a[i][c]) continue;
        for (size_t j = 0; j < k; ++j) a[i][j] ^= a[r][j];
        b[i] ^= b[r];
      }
      ++r;
    }
    for (size_t i = r; i < a.size(); ++i) {
      bool all_zero = true;
      for (size_t j = 0; j < k; ++j) all_zero &= !a[i][j];
      require(!all_zero || !b[i], errc::inconsistent_sign,
              "signs are not additive on the generator lattice");
    }
  }

  const RestrictedRootSystem& rs = sp.g->rs();
  std::map<QVec, int, bool (*)(const QVec&, const QVec&)> gen_index(vec_less);
  for (size_t i = 0; i < srd.m_generators.size(); ++i) gen_index[srd.m_generators[i]] = int(i);
  std::vector<QVec> hvecs = sp.l_cap_h.basis.col_list();
  for (const TEntry& e : sp.T) {
    QVec v = unit_vec(sp.g->dim(), e.neg_basis_index);
    for (const TComponent& comp : e.comps) {
      QVec w = rs.root(e.alpha_root);
      if (comp.beta_root >= 0) w = w + rs.root(comp.beta_root);
      auto it = gen_index.find(w);
      require(it != gen_index.end(), errc::assertion_failure, "weight missing from generators");
      QVec scaled = Rat(eps[size_t(it->second)]) * comp.vec;
      v += scaled;
    }
    hvecs.push_back(v);
  }
  Subspace h_w = sp.g->subspace_from(hvecs);
  require(is_subalgebra(h_w), errc::assertion_failure, "twisted space is not a subalgebra");
  // A twist keeps the adapted parabolic and the compression data.
  SphericalPair tw = standardize(sp.g, h_w);
  require(tw.F_Q == sp.F_Q, errc::assertion_failure, "twist changed the adapted parabolic");
  SphericalRootDatum tsrd = spherical_roots(tw);
  require(tsrd.m_generators == srd.m_generators, errc::assertion_failure,
          "twist changed the monoid generators");
  return h_w;
}

} // namespace sphlie
