#include "sphlie/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sphlie {

namespace {

// ---------------------------------------------------------------------------
// Concrete matrix-algebra builder. Basis elements are N x N rational matrices
// tagged a / m / root-vector; weights are derived by bracketing with the
// a-part and positivity comes from a regular element.

struct MatBuilder {
  int N = 0;
  std::vector<QMat> mats;
  std::vector<int> kind; // 0 = a, 1 = m, 2 = root vector
  QVec regular;          // coefficients over the a-part basis
  std::function<QMat(const QMat&)> cartan; // Cartan involution on matrices

  int add(const QMat& m, int k) {
    mats.push_back(m);
    kind.push_back(k);
    return int(mats.size()) - 1;
  }

  static QMat mat_bracket(const QMat& x, const QMat& y) {
    QMat a = x * y;
    QMat b = y * x;
    QMat out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
  }

  QMat flat() const {
    std::vector<QVec> cols;
    for (const QMat& m : mats) {
      QVec v;
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
      cols.push_back(v);
    }
    return QMat::from_cols(cols);
  }

  QVec coords(const QMat& x, const QMat& flat_cache) const {
    QVec v;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) v.push_back(x.at(i, j));
    auto c = solve(flat_cache, v);
    require(c.has_value(), errc::assertion_failure, "matrix outside the algebra span");
    return *c;
  }

  struct Built {
    AlgebraPtr g;
    QMat flat_cache;
    const MatBuilder* builder;
    QVec coords(const QMat& x) const { return builder->coords(x, flat_cache); }
    Subspace span(const std::vector<QMat>& hs) const {
      std::vector<QVec> cols;
      for (const QMat& m : hs) cols.push_back(coords(m));
      return g->subspace_from(cols);
    }
  };

  Built build() const {
    int n = int(mats.size());
    QMat fl = flat();
    require(rank(fl) == n, errc::assertion_failure, "basis matrices dependent");
    std::vector<int> a_pos;
    for (int i = 0; i < n; ++i)
      if (kind[size_t(i)] == 0) a_pos.push_back(i);
    int a_dim = int(a_pos.size());

    // Weights under the a-part.
    std::vector<QVec> weights(size_t(n), zero_vec(a_dim));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < a_dim; ++k) {
        QMat br = mat_bracket(mats[size_t(a_pos[size_t(k)])], mats[size_t(i)]);
        QVec c = coords(br, fl);
        for (int j = 0; j < n; ++j)
          if (c[size_t(j)] != 0)
            require(j == i, errc::assertion_failure, "basis element is not a weight vector");
        weights[size_t(i)][size_t(k)] = c[size_t(i)];
      }
      if (kind[size_t(i)] == 2)
        require(!is_zero(weights[size_t(i)]), errc::assertion_failure,
                "root vector with zero weight");
      else
        require(is_zero(weights[size_t(i)]), errc::assertion_failure,
                "zero-part element with nonzero weight");
    }

    // Distinct roots in canonical order.
    std::vector<QVec> roots;
    for (int i = 0; i < n; ++i)
      if (kind[size_t(i)] == 2 &&
          std::find(roots.begin(), roots.end(), weights[size_t(i)]) == roots.end())
        roots.push_back(weights[size_t(i)]);
    std::sort(roots.begin(), roots.end(), vec_less);
    std::vector<int> positive;
    for (int r = 0; r < int(roots.size()); ++r) {
      Rat v = dot(roots[size_t(r)], regular);
      require(v != 0, errc::assertion_failure, "regular element vanishes on a root");
      if (v > 0) positive.push_back(r);
    }
    std::vector<int> simple;
    for (int r : positive) {
      bool is_sum = false;
      for (int p : positive)
        for (int q : positive) {
          if (roots[size_t(p)] + roots[size_t(q)] == roots[size_t(r)]) is_sum = true;
        }
      if (!is_sum) simple.push_back(r);
    }

    // Killing form on a from the root multiplicities.
    QMat gram(a_dim, a_dim);
    for (int i = 0; i < n; ++i) {
      if (kind[size_t(i)] != 2) continue;
      for (int p = 0; p < a_dim; ++p)
        for (int q = 0; q < a_dim; ++q)
          gram.at(p, q) += weights[size_t(i)][size_t(p)] * weights[size_t(i)][size_t(q)];
    }
    RestrictedRootSystem rs(a_dim, roots, positive, simple, gram);

    std::vector<Grade> grades;
    for (int i = 0; i < n; ++i) {
      if (kind[size_t(i)] == 0)
        grades.push_back(Grade::a());
      else if (kind[size_t(i)] == 1)
        grades.push_back(Grade::m());
      else
        grades.push_back(Grade::of_root(rs.find_root(weights[size_t(i)])));
    }
    std::vector<std::vector<SparseVec>> table(static_cast<size_t>(n), std::vector<SparseVec>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QVec c = coords(mat_bracket(mats[size_t(i)], mats[size_t(j)]), fl);
        for (int t = 0; t < n; ++t)
          if (c[size_t(t)] != 0) table[size_t(i)][size_t(j)].push_back({t, c[size_t(t)]});
      }
    std::optional<QMat> theta_coords;
    if (cartan) {
      QMat th(n, n);
      for (int j = 0; j < n; ++j) {
        QVec c = coords(cartan(mats[size_t(j)]), fl);
        for (int i = 0; i < n; ++i) th.at(i, j) = c[size_t(i)];
      }
      theta_coords = th;
    }
    Built b;
    b.g = GradedLieAlgebra::create(rs, grades, table, theta_coords);
    b.flat_cache = fl;
    b.builder = this;
    return b;
  }
};

QMat unit_mat(int n, int i, int j) {
  QMat m(n, n);
  m.at(i, j) = 1;
  return m;
}

// sl(n, R): a = traceless diagonal, root vectors E_ij.
MatBuilder sl_builder(int n) {
  MatBuilder b;
  b.N = n;
  for (int k = 0; k + 1 < n; ++k) {
    QMat m(n, n);
    m.at(k, k) = 1;
    m.at(k + 1, k + 1) = -1;
    b.add(m, 0);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) b.add(unit_mat(n, i, j), 2);
  // A strictly dominant element over the H_k: positive on every E_ij, i < j.
  b.regular = QVec(size_t(n - 1));
  for (int k = 0; k + 1 < n; ++k) b.regular[size_t(k)] = Rat(k + 1) * Rat(n - 1 - k);
  b.cartan = [](const QMat& x) {
    QMat t = x.transpose();
    QMat out(t.rows(), t.cols());
    for (int i = 0; i < t.rows(); ++i)
      for (int j = 0; j < t.cols(); ++j) out.at(i, j) = -t.at(i, j);
    return out;
  };
  return b;
}

QMat so1n_form(int n);

// so(1, n) with B(e0, en) = 1 and B(ei, ei) = 1 for 0 < i < n.
MatBuilder so1n_builder(int n) {
  int N = n + 1;
  MatBuilder b;
  b.N = N;
  QMat A(N, N);
  A.at(0, 0) = 1;
  A.at(n, n) = -1;
  b.add(A, 0);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QMat m(N, N);
      m.at(i, j) = 1;
      m.at(j, i) = -1;
      b.add(m, 1);
    }
  for (int i = 1; i < n; ++i) {
    QMat p(N, N);
    p.at(0, i) = 1;
    p.at(i, n) = -1;
    b.add(p, 2);
  }
  for (int i = 1; i < n; ++i) {
    QMat q(N, N);
    q.at(i, 0) = 1;
    q.at(n, i) = -1;
    b.add(q, 2);
  }
  b.regular = QVec{Rat(1)};
  QMat J = so1n_form(n);
  b.cartan = [J](const QMat& x) { return J * x * J; };
  return b;
}

QMat so1n_form(int n) {
  QMat J(n + 1, n + 1);
  J.at(0, n) = J.at(n, 0) = 1;
  for (int i = 1; i < n; ++i) J.at(i, i) = 1;
  return J;
}

// so(2, 2) with B(e0, e2) = B(e1, e3) = 1: split rank two, D_2 = A_1 x A_1.
MatBuilder so22_builder() {
  MatBuilder b;
  b.N = 4;
  auto D = [&](int i, int j, int pi, int pj) {
    QMat m(4, 4);
    m.at(i, j) = 1;
    m.at(pj, pi) = m.at(pj, pi) - 1;
    return m;
  };
  // pairing 0<->2, 1<->3
  QMat A1(4, 4), A2(4, 4);
  A1.at(0, 0) = 1;
  A1.at(2, 2) = -1;
  A2.at(1, 1) = 1;
  A2.at(3, 3) = -1;
  b.add(A1, 0);
  b.add(A2, 0);
  b.add(D(0, 1, 2, 3), 2); // e1 - e2
  b.add(D(1, 0, 3, 2), 2);
  b.add(D(0, 3, 2, 1), 2); // e1 + e2
  b.add(D(3, 0, 1, 2), 2);
  b.regular = QVec{Rat(2), Rat(1)};
  QMat J(4, 4);
  J.at(0, 2) = J.at(2, 0) = J.at(1, 3) = J.at(3, 1) = 1;
  b.cartan = [J](const QMat& x) { return J * x * J; };
  return b;
}

// Block-diagonal product of identical builders, with per-factor signs in the
// regular element (a sign flip swaps that factor's positive system).
MatBuilder product_builder(const MatBuilder& f, const std::vector<int>& signs) {
  int k = int(signs.size());
  MatBuilder b;
  b.N = f.N * k;
  auto emb = [&](int slot, const QMat& m) {
    QMat out(b.N, b.N);
    for (int i = 0; i < f.N; ++i)
      for (int j = 0; j < f.N; ++j) out.at(slot * f.N + i, slot * f.N + j) = m.at(i, j);
    return out;
  };
  for (int kk = 0; kk < 3; ++kk)
    for (int slot = 0; slot < k; ++slot)
      for (size_t i = 0; i < f.mats.size(); ++i)
        if (f.kind[i] == kk) b.add(emb(slot, f.mats[i]), kk);
  // regular: per-factor copies, scaled to keep all roots nonzero
  for (int slot = 0; slot < k; ++slot)
    for (const Rat& r : f.regular) b.regular.push_back(Rat(signs[size_t(slot)]) * r);
  if (f.cartan) {
    int fn = f.N;
    auto fc = f.cartan;
    b.cartan = [k, fn, fc](const QMat& x) {
      QMat out(x.rows(), x.cols());
      for (int slot = 0; slot < k; ++slot) {
        QMat blk(fn, fn);
        for (int i = 0; i < fn; ++i)
          for (int j = 0; j < fn; ++j) blk.at(i, j) = x.at(slot * fn + i, slot * fn + j);
        QMat tb = fc(blk);
        for (int i = 0; i < fn; ++i)
          for (int j = 0; j < fn; ++j) out.at(slot * fn + i, slot * fn + j) = tb.at(i, j);
      }
      return out;
    };
  }
  return b;
}

std::vector<QMat> factor_embeddings(const MatBuilder& f, int k, int slot,
                                    const QMat& conj) {
  QMat cinv = inverse(conj);
  std::vector<QMat> out;
  for (const QMat& m : f.mats) {
    QMat big(f.N * k, f.N * k);
    QMat mm = conj * m * cinv;
    for (int i = 0; i < f.N; ++i)
      for (int j = 0; j < f.N; ++j) big.at(slot * f.N + i, slot * f.N + j) = mm.at(i, j);
    out.push_back(big);
  }
  return out;
}

std::vector<QMat> fixed_points_of(const MatBuilder::Built& built, const std::vector<QMat>& mats,
                                  const QMat& s) {
  QMat sinv = inverse(s);
  int n = int(mats.size());
  std::vector<QVec> cols;
  for (int i = 0; i < n; ++i) {
    QVec c = built.coords(s * mats[size_t(i)] * sinv);
    c[size_t(i)] -= 1;
    cols.push_back(c);
  }
  QMat ker = kernel_basis(QMat::from_cols(cols));
  std::vector<QMat> out;
  for (int j = 0; j < ker.cols(); ++j) {
    QMat x(mats[0].rows(), mats[0].cols());
    for (int i = 0; i < n; ++i) {
      if (ker.at(i, j) == 0) continue;
      for (int a = 0; a < x.rows(); ++a)
        for (int bcol = 0; bcol < x.cols(); ++bcol)
          x.at(a, bcol) += ker.at(i, j) * mats[size_t(i)].at(a, bcol);
    }
    out.push_back(x);
  }
  return out;
}

CatalogPair finish(const MatBuilder::Built& built, const Subspace& h) {
  return CatalogPair{built.g, h, built.g->p_min(), std::nullopt};
}

CatalogPair build_nbar(const MatBuilder& mb) {
  auto built = mb.build();
  return CatalogPair{built.g, built.g->n_bar(), built.g->p_min(), std::nullopt};
}

QMat map_coords(const MatBuilder::Built& built, const std::vector<QMat>& mats,
                const std::function<QMat(const QMat&)>& f);

CatalogPair build_group(const MatBuilder& factor) {
  MatBuilder prod = product_builder(factor, {1, -1});
  auto built = prod.build();
  std::vector<QMat> hm;
  QMat id = QMat::identity(factor.N);
  auto e1 = factor_embeddings(factor, 2, 0, id);
  auto e2 = factor_embeddings(factor, 2, 1, id);
  for (size_t i = 0; i < factor.mats.size(); ++i) {
    QMat m(prod.N, prod.N);
    for (int a = 0; a < prod.N; ++a)
      for (int b = 0; b < prod.N; ++b) m.at(a, b) = e1[i].at(a, b) + e2[i].at(a, b);
    hm.push_back(m);
  }
  CatalogPair cp = finish(built, built.span(hm));
  int fn = factor.N;
  auto swap_factors = [fn](const QMat& x) {
    QMat out(x.rows(), x.cols());
    for (int i = 0; i < fn; ++i)
      for (int j = 0; j < fn; ++j) {
        out.at(i, j) = x.at(fn + i, fn + j);
        out.at(fn + i, fn + j) = x.at(i, j);
      }
    return out;
  };
  cp.tau = map_coords(built, prod.mats, swap_factors);
  return cp;
}

CatalogPair build_triple_so12() {
  MatBuilder f = so1n_builder(2);
  MatBuilder prod = product_builder(f, {1, -1, 1});
  auto built = prod.build();
  // Twist the third factor by exp(Q_1), a rational unipotent in SO_e(1,2).
  QMat q(3, 3);
  q.at(1, 0) = 1;
  q.at(2, 1) = -1;
  QMat g = QMat::identity(3);
  QMat q2 = q * q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.at(i, j) = g.at(i, j) + q.at(i, j) + Rat(1, 2) * q2.at(i, j);
  QMat id = QMat::identity(3);
  auto e1 = factor_embeddings(f, 3, 0, id);
  auto e2 = factor_embeddings(f, 3, 1, id);
  auto e3 = factor_embeddings(f, 3, 2, g);
  std::vector<QMat> hm;
  for (size_t i = 0; i < f.mats.size(); ++i) {
    QMat m(prod.N, prod.N);
    for (int a = 0; a < prod.N; ++a)
      for (int b = 0; b < prod.N; ++b)
        m.at(a, b) = e1[i].at(a, b) + e2[i].at(a, b) + e3[i].at(a, b);
    hm.push_back(m);
  }
  return finish(built, built.span(hm));
}

QMat map_coords(const MatBuilder::Built& built, const std::vector<QMat>& mats,
                const std::function<QMat(const QMat&)>& f) {
  int n = int(mats.size());
  QMat out(n, n);
  for (int j = 0; j < n; ++j) {
    QVec c = built.coords(f(mats[size_t(j)]));
    for (int i = 0; i < n; ++i) out.at(i, j) = c[size_t(i)];
  }
  return out;
}

CatalogPair build_symmetric(const MatBuilder& mb, const QMat& s) {
  auto built = mb.build();
  std::vector<QMat> hm = fixed_points_of(built, mb.mats, s);
  CatalogPair cp = finish(built, built.span(hm));
  QMat sinv = inverse(s);
  cp.tau = map_coords(built, mb.mats, [&](const QMat& x) { return s * x * sinv; });
  return cp;
}

CatalogPair build_sl3_sp1() {
  MatBuilder mb = sl_builder(3);
  auto built = mb.build();
  QMat P{{Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(2), Rat(1)}};
  QMat Pi = inverse(P);
  QMat spH{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
  QMat spE{{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
  QMat spF{{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
  std::vector<QMat> hm;
  for (const QMat& m : {spH, spE, spF}) hm.push_back(P * m * Pi);
  return finish(built, built.span(hm));
}

CatalogPair build_sl3_sl2_ubar() {
  MatBuilder mb = sl_builder(3);
  auto built = mb.build();
  QMat h1(3, 3);
  h1.at(0, 0) = 1;
  h1.at(1, 1) = -1;
  std::vector<QMat> hm = {h1, unit_mat(3, 0, 1), unit_mat(3, 1, 0), unit_mat(3, 2, 0),
                          unit_mat(3, 2, 1)};
  return finish(built, built.span(hm));
}

CatalogPair build_full_sl2() {
  auto built = sl_builder(2).build();
  return CatalogPair{built.g, built.g->full_subspace(), built.g->p_min(), std::nullopt};
}

QMat reflection_so1n(int n, const QVec& v) {
  QMat B = so1n_form(n);
  QVec bv = B * v;
  Rat norm = dot(v, bv);
  require(norm > 0, errc::assertion_failure, "reflection vector must be spacelike");
  QMat s = QMat::identity(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) s.at(i, j) -= Rat(2) / norm * v[size_t(i)] * bv[size_t(j)];
  return s;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](CatalogEntry e) { v.push_back(std::move(e)); };
    add({"nbar-sl2", "h = opposite nilradical in sl(2,R)", false, false, 0, true,
         std::vector<int>{}, "classical: M = {0}, S = empty, not wave-front"});
    add({"nbar-sl3", "h = opposite nilradical in sl(3,R)", false, false, 0, true,
         std::vector<int>{}, "classical: M = {0}, S = empty"});
    add({"nbar-sl4", "h = opposite nilradical in sl(4,R)", false, false, 0, true,
         std::vector<int>{}, "classical: M = {0}, S = empty"});
    add({"nbar-so13", "h = opposite nilradical in so(1,3)", false, false, 0, true,
         std::vector<int>{}, "classical: M = {0}, S = empty"});
    add({"nbar-so14", "h = opposite nilradical in so(1,4)", false, false, 0, true,
         std::vector<int>{}, "classical: M = {0}, S = empty"});
    add({"nbar-so22", "h = opposite nilradical in so(2,2)", false, false, 0, true,
         std::vector<int>{}, "classical: M = {0}, S = empty"});
    add({"full-sl2", "h = g for sl(2,R)", false, true, 0, true, std::vector<int>{0},
         "trivial: rank-zero pair"});
    add({"group-sl2", "sl(2,R) x sl(2,R) / diagonal", false, true, 1, true,
         std::vector<int>{}, "derived: oracle (group case, rank one)"});
    add({"group-sl3", "sl(3,R) x sl(3,R) / diagonal", false, true, 2, true,
         std::vector<int>{}, "derived: group case, S = simple pairs"});
    add({"group-sl4", "sl(4,R) x sl(4,R) / diagonal", false, true, 3, true,
         std::vector<int>{}, "derived: group case, S = simple pairs"});
    add({"triple-so12", "so(1,2)^3 / twisted diagonal", false, true, 3, true,
         std::vector<int>{}, "known wave-front; S = {a1,a2,a3} frozen from the sympy oracle"});
    add({"sl3-sp1", "(sl(3,R), sp(1,R)), non-wave-front series at n = 1", false, false, 2,
         true, std::vector<int>{}, "known non-wave-front series member; S frozen from the sympy oracle"});
    add({"sym-sl2-so11", "(sl(2,R), so(1,1)) symmetric", false, true, 1, true,
         std::vector<int>{}, "derived: S = {2a} (rank-one symmetric)"});
    add({"sym-sl3-gl2", "(sl(3,R), gl(2,R)) symmetric", false, true, 1, true,
         std::vector<int>{}, "derived: S = {a1+a2} (oracle)"});
    add({"sym-so13-so3", "(so(1,3), so(3)) Riemannian symmetric", false, true, 1, true,
         std::vector<int>{}, "derived: S = {2a} (oracle)"});
    add({"sym-so13-so12", "(so(1,3), so(1,2)) de Sitter symmetric", false, true, 1, true,
         std::vector<int>{}, "derived: S = {2a} (oracle)"});
    add({"sl3-sl2-ubar", "h = sl(2)-block + u-bar_F in sl(3,R)", false, false, 0, true,
         std::vector<int>{1}, "derived: interlaced pair, F_Q = the block root, edge = a_Z"});
    // Kraemer's list (non-symmetric complex cases), metadata only.
    for (const char* k : {
             "kraemer-sl(n)-sl(p)+sl(n-p)", "kraemer-sl(2n+1)-sp(n)+C", "kraemer-sl(2n+1)-sp(n)",
             "kraemer-so(2n+1)-gl(n)", "kraemer-so(9)-spin(7)", "kraemer-so(7)-G2",
             "kraemer-sp(2n)-sp(n-1)+C", "kraemer-so(2n)-sl(n)-n-odd",
             "kraemer-so(10)-so(2)+spin(7)", "kraemer-so(8)-G2", "kraemer-G2-sl(3)",
             "kraemer-E6-so(10)", "su(p,q)-n0-series"}) {
      CatalogEntry e;
      e.name = k;
      e.description = "classification-table entry (not constructed at this scale)";
      e.metadata_only = true;
      e.provenance = "classification tables";
      add(e);
    }
    return v;
  }();
  return entries;
}

CatalogPair catalog_build(const std::string& name) {
  if (name == "nbar-sl2") return build_nbar(sl_builder(2));
  if (name == "nbar-sl3") return build_nbar(sl_builder(3));
  if (name == "nbar-sl4") return build_nbar(sl_builder(4));
  if (name == "nbar-so13") return build_nbar(so1n_builder(3));
  if (name == "nbar-so14") return build_nbar(so1n_builder(4));
  if (name == "nbar-so22") return build_nbar(so22_builder());
  if (name == "full-sl2") return build_full_sl2();
  if (name == "group-sl2") return build_group(sl_builder(2));
  if (name == "group-sl3") return build_group(sl_builder(3));
  if (name == "group-sl4") return build_group(sl_builder(4));
  if (name == "triple-so12") return build_triple_so12();
  if (name == "sl3-sp1") return build_sl3_sp1();
  if (name == "sl3-sl2-ubar") return build_sl3_sl2_ubar();
  if (name == "sym-sl2-so11") {
    QMat s{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    return build_symmetric(sl_builder(2), s);
  }
  if (name == "sym-sl3-gl2") {
    QMat s(3, 3);
    s.at(1, 1) = 1;
    s.at(0, 2) = -1;
    s.at(2, 0) = -1;
    return build_symmetric(sl_builder(3), s);
  }
  if (name == "sym-so13-so3") return build_symmetric(so1n_builder(3), so1n_form(3));
  if (name == "sym-so13-so12") {
    QVec v{Rat(1), Rat(0), Rat(0), Rat(1)};
    return build_symmetric(so1n_builder(3), reflection_so1n(3, v));
  }
  fail(errc::unsupported_entry, "unknown or metadata-only catalog entry '" + name + "'");
}

} // namespace sphlie
