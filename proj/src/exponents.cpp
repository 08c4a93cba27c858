#include "sphlie/exponents.hpp"

#include <algorithm>
#include <set>

namespace sphlie {

QVec rho_Q(const SphericalPair& sp) {
  const RestrictedRootSystem& rs = sp.g->rs();
  QVec f = zero_vec(rs.a_dim());
  for (int r : sp.sigma_u) {
    int mult = sp.g->root_multiplicity(r);
    f += Rat(mult) * rs.root(r);
  }
  f = Rat(1, 2) * f;
  return sp.restrict_functional(f);
}

namespace {

// Basis (omega_1..omega_s | edge | a_H) of a; the first r rows of its inverse
// are the dual functionals used to reconstruct functionals on a_Z.
QMat az_frame(const SphericalPair& sp, const SphericalRootDatum& srd) {
  QMat frame(sp.g->rs().a_dim(), 0);
  for (const QVec& w : srd.omegas) frame = hstack(frame, QMat::from_cols({w}));
  frame = hstack(frame, srd.edge);
  frame = hstack(frame, sp.a_H);
  require(frame.cols() == sp.g->rs().a_dim(), errc::assertion_failure, "a_Z frame");
  return frame;
}

void check_on_a_z(const SphericalPair& sp, const QVec& f, const char* what) {
  require(int(f.size()) == sp.g->rs().a_dim(), errc::dimension_mismatch, what);
  for (int j = 0; j < sp.a_H.cols(); ++j)
    require(dot(f, sp.a_H.col(j)) == 0, errc::assertion_failure,
            std::string(what) + " does not vanish on a_H");
}

} // namespace

QVec functional_from_values(const SphericalPair& sp, const SphericalRootDatum& srd,
                            const QVec& omega_values, const QVec& edge_values) {
  int s = srd.num_spherical(), e = srd.edge.cols();
  require(int(omega_values.size()) == s, errc::dimension_mismatch, "omega values");
  require(int(edge_values.size()) == e, errc::dimension_mismatch, "edge values");
  QMat frame_inv = inverse(az_frame(sp, srd));
  QVec f = zero_vec(sp.g->rs().a_dim());
  for (int k = 0; k < s + e; ++k) {
    Rat v = k < s ? omega_values[size_t(k)] : edge_values[size_t(k - s)];
    f += v * frame_inv.row(k);
  }
  return f;
}

ExponentData make_exponent_data(const SphericalPair& sp, const SphericalRootDatum& srd,
                                QVec chi_re, QVec chi_im,
                                std::vector<ComplexFunctional> e_lead, int degree_bound) {
  int e = srd.edge.cols();
  require(int(chi_re.size()) == e && int(chi_im.size()) == e, errc::dimension_mismatch,
          "chi values must match the edge dimension");
  require(!e_lead.empty(), errc::edge_mismatch, "E_lead must be nonempty");
  require(degree_bound >= 0, errc::assertion_failure, "degree bound");
  for (const ComplexFunctional& lam : e_lead) {
    check_on_a_z(sp, lam.re, "leading exponent (re)");
    check_on_a_z(sp, lam.im, "leading exponent (im)");
    for (int j = 0; j < e; ++j) {
      require(dot(lam.re, srd.edge.col(j)) == -chi_re[size_t(j)], errc::edge_mismatch,
              "xi|edge != -chi (real part)");
      require(dot(lam.im, srd.edge.col(j)) == -chi_im[size_t(j)], errc::edge_mismatch,
              "xi|edge != -chi (imaginary part)");
    }
  }
  return ExponentData{std::move(chi_re), std::move(chi_im), std::move(e_lead), degree_bound};
}

QVec lambda_V_eta(const SphericalPair& sp, const SphericalRootDatum& srd,
                  const ExponentData& ed) {
  int s = srd.num_spherical();
  QVec omega_vals(static_cast<size_t>(s));
  for (int j = 0; j < s; ++j) {
    bool first = true;
    Rat m(0);
    for (const ComplexFunctional& lam : ed.e_lead) {
      Rat v = dot(lam.re, srd.omegas[size_t(j)]);
      if (first || v < m) m = v;
      first = false;
    }
    omega_vals[size_t(j)] = m;
  }
  QVec edge_vals(static_cast<size_t>(srd.edge.cols()));
  for (size_t k = 0; k < edge_vals.size(); ++k) edge_vals[k] = -ed.chi_re[k];
  return functional_from_values(sp, srd, omega_vals, edge_vals);
}

bool is_tempered(const SphericalPair& sp, const SphericalRootDatum& srd, const ExponentData& ed) {
  QVec lam = lambda_V_eta(sp, srd, ed);
  QVec rho = rho_Q(sp);
  for (const QVec& w : srd.omegas)
    if (dot(lam, w) < dot(rho, w)) return false;
  for (int j = 0; j < srd.edge.cols(); ++j)
    if (dot(lam, srd.edge.col(j)) != dot(rho, srd.edge.col(j))) return false;
  return true;
}

bool strong_inequality(const SphericalPair& sp, const SphericalRootDatum& srd,
                       const ExponentData& ed) {
  QVec lam = lambda_V_eta(sp, srd, ed);
  QVec rho = rho_Q(sp);
  for (const QVec& w : srd.omegas)
    if (dot(lam, w) <= dot(rho, w)) return false;
  for (int j = 0; j < srd.edge.cols(); ++j)
    if (dot(lam, srd.edge.col(j)) != dot(rho, srd.edge.col(j))) return false;
  return true;
}

std::vector<int> I_eta_lambda(const SphericalPair& sp, const SphericalRootDatum& srd,
                              const ExponentData& ed, int lambda_index) {
  require(lambda_index >= 0 && lambda_index < int(ed.e_lead.size()), errc::invalid_subset,
          "lambda index");
  require(is_tempered(sp, srd, ed), errc::not_tempered, "squeeze requires temperedness");
  const ComplexFunctional& lam = ed.e_lead[size_t(lambda_index)];
  QVec rho = rho_Q(sp);
  QVec big = lambda_V_eta(sp, srd, ed);
  std::vector<int> I;
  for (int i = 0; i < srd.num_spherical(); ++i) {
    const QVec& w = srd.omegas[size_t(i)];
    Rat lo = dot(rho, w), mid = dot(big, w), hi = dot(lam.re, w);
    require(lo <= mid && mid <= hi, errc::not_tempered, "squeeze inequality fails");
    if (lo < hi) I.push_back(i);
  }
  return I;
}

namespace {

// Does lambda - lambda' restrict on a_I to a nonzero N0-combination of the
// sigma_i, i not in I (with equal imaginary parts along a_I)?
bool dominated_along(const SphericalRootDatum& srd, const ComplexFunctional& lam,
                     const ComplexFunctional& other, const std::vector<int>& I) {
  std::set<int> iset(I.begin(), I.end());
  for (int j = 0; j < srd.edge.cols(); ++j) {
    if (dot(lam.im, srd.edge.col(j)) != dot(other.im, srd.edge.col(j))) return false;
    if (dot(lam.re, srd.edge.col(j)) != dot(other.re, srd.edge.col(j))) return false;
  }
  bool nonzero = false;
  for (int i = 0; i < srd.num_spherical(); ++i) {
    if (iset.count(i)) continue;
    const QVec& w = srd.omegas[size_t(i)];
    if (dot(lam.im, w) != dot(other.im, w)) return false;
    Rat k = dot(lam.re, w) - dot(other.re, w);
    if (rat_den(k) != 1 || k < 0) return false;
    if (k > 0) nonzero = true;
  }
  return nonzero;
}

RestrictedExponent restrict_to_a_I(const SphericalRootDatum& srd, const ComplexFunctional& lam,
                                   const std::vector<int>& I) {
  std::set<int> iset(I.begin(), I.end());
  RestrictedExponent r;
  for (int j = 0; j < srd.num_spherical(); ++j) {
    if (iset.count(j)) continue;
    r.re_vals.push_back(dot(lam.re, srd.omegas[size_t(j)]));
    r.im_vals.push_back(dot(lam.im, srd.omegas[size_t(j)]));
  }
  for (int j = 0; j < srd.edge.cols(); ++j) {
    r.re_vals.push_back(dot(lam.re, srd.edge.col(j)));
    r.im_vals.push_back(dot(lam.im, srd.edge.col(j)));
  }
  return r;
}

} // namespace

std::vector<RestrictedExponent> lead_I(const SphericalPair& sp, const SphericalRootDatum& srd,
                                       const ExponentData& ed, const std::vector<int>& I) {
  validate_spherical_subset(srd, I);
  std::vector<RestrictedExponent> out;
  for (const ComplexFunctional& lam : ed.e_lead) {
    bool leading = true;
    for (const ComplexFunctional& other : ed.e_lead) {
      if (dominated_along(srd, lam, other, I)) {
        leading = false;
        break;
      }
    }
    if (!leading) continue;
    RestrictedExponent r = restrict_to_a_I(srd, lam, I);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  require(!out.empty(), errc::assertion_failure, "E_{lead,I} must be nonempty");
  std::sort(out.begin(), out.end(), [](const RestrictedExponent& a, const RestrictedExponent& b) {
    if (a.re_vals != b.re_vals) return vec_less(a.re_vals, b.re_vals);
    return vec_less(a.im_vals, b.im_vals);
  });
  return out;
}

TemperedReport optimal_pairs(const SphericalPair& sp, const SphericalRootDatum& srd,
                             const ExponentData& ed) {
  require(is_tempered(sp, srd, ed), errc::not_tempered, "pair is not tempered");
  TemperedReport rep;
  rep.lambda_V_eta = lambda_V_eta(sp, srd, ed);
  rep.tempered = true;
  rep.strong = strong_inequality(sp, srd, ed);
  QVec rho = rho_Q(sp);

  int n = int(ed.e_lead.size());
  std::vector<std::vector<int>> I_of(static_cast<size_t>(n));
  int min_eta = srd.num_spherical() + 1;
  for (int k = 0; k < n; ++k) {
    I_of[size_t(k)] = I_eta_lambda(sp, srd, ed, k);
    min_eta = std::min(min_eta, int(I_of[size_t(k)].size()));
  }
  rep.min_eta = min_eta;

  const RestrictedRootSystem& rs = sp.g->rs();
  for (int k = 0; k < n; ++k) {
    if (int(I_of[size_t(k)].size()) != min_eta) continue;
    const std::vector<int>& I = I_of[size_t(k)];
    const ComplexFunctional& lam = ed.e_lead[size_t(k)];
    QMat a_I = a_I_space(sp, srd, I);

    // rho_Q = Lambda = Re lambda on a_I.
    for (int j = 0; j < a_I.cols(); ++j) {
      QVec v = a_I.col(j);
      require(dot(rho, v) == dot(rep.lambda_V_eta, v) && dot(rho, v) == dot(lam.re, v),
              errc::assertion_failure, "rho = Lambda = Re lambda fails on a_I");
    }
    // lambda|_{a_I} stays leading along a_I.
    std::vector<RestrictedExponent> leads = lead_I(sp, srd, ed, I);
    require(std::find(leads.begin(), leads.end(), restrict_to_a_I(srd, lam, I)) != leads.end(),
            errc::assertion_failure, "lambda|_{a_I} not in E_{lead,I}");
    // equal real restriction on a_I forces a smaller index set.
    for (int k2 = 0; k2 < n; ++k2) {
      bool same = true;
      for (int j = 0; j < a_I.cols() && same; ++j)
        same = dot(ed.e_lead[size_t(k2)].re, a_I.col(j)) == dot(lam.re, a_I.col(j));
      if (!same) continue;
      require(std::includes(I.begin(), I.end(), I_of[size_t(k2)].begin(), I_of[size_t(k2)].end()),
              errc::assertion_failure, "I_{eta,lambda'} not contained in I_{eta,lambda}");
    }

    OptimalCandidate cand;
    cand.lambda_index = k;
    cand.I = I;
    // omega_{sigma,I}: dual to I inside a_Z, orthogonal to a_I.
    QMat perp_cands;
    if (a_I.cols() == 0) {
      perp_cands = sp.a_Z;
    } else {
      QMat rows = (rs.gram() * a_I).transpose() * sp.a_Z;
      QMat ker = kernel_basis(rows);
      perp_cands = ker.cols() ? sp.a_Z * ker : QMat(rs.a_dim(), 0);
    }
    require(perp_cands.cols() == int(I.size()), errc::assertion_failure,
            "omega_{sigma,I} space dimension");
    if (!I.empty()) {
      QMat m(int(I.size()), int(I.size()));
      for (size_t a = 0; a < I.size(); ++a)
        for (int b = 0; b < int(I.size()); ++b)
          m.at(int(a), b) = dot(srd.spherical_root(I[a]), perp_cands.col(b));
      QMat minv = inverse(m);
      for (size_t a = 0; a < I.size(); ++a) {
        QVec w = zero_vec(rs.a_dim());
        for (int b = 0; b < int(I.size()); ++b) w += minv.at(b, int(a)) * perp_cands.col(b);
        // (ooI): omega_{sigma,I} - omega_sigma lies in a_I.
        require(span_contains(a_I, w - srd.omegas[size_t(I[a])]), errc::assertion_failure,
                "omega_{sigma,I} - omega_sigma not in a_I");
        cand.omega_sigma_I.push_back(w);
      }
    }
    // Lambda_{V,eta,I}: rho_Q on a_I, constrained minima on the omega_{sigma,I}.
    QMat frame(rs.a_dim(), 0);
    for (const QVec& w : cand.omega_sigma_I) frame = hstack(frame, QMat::from_cols({w}));
    frame = hstack(frame, a_I);
    frame = hstack(frame, sp.a_H);
    QMat frame_inv = inverse(frame);
    QVec lam_I = zero_vec(rs.a_dim());
    for (size_t a = 0; a < I.size(); ++a) {
      bool first = true;
      Rat m(0);
      for (const ComplexFunctional& gamma : ed.e_lead) {
        bool same = true;
        for (int j = 0; j < a_I.cols() && same; ++j)
          same = dot(gamma.re, a_I.col(j)) == dot(lam.re, a_I.col(j));
        if (!same) continue;
        Rat v = dot(gamma.re, cand.omega_sigma_I[a]);
        if (first || v < m) m = v;
        first = false;
      }
      require(!first, errc::assertion_failure, "no gamma with matching restriction");
      lam_I += m * frame_inv.row(int(a));
    }
    for (int j = 0; j < a_I.cols(); ++j)
      lam_I += dot(rho, a_I.col(j)) * frame_inv.row(int(I.size()) + j);
    cand.lambda_I = lam_I;
    // strict positivity at every omega_{sigma,I}.
    for (size_t a = 0; a < I.size(); ++a)
      require(dot(lam_I, cand.omega_sigma_I[a]) > dot(rho, cand.omega_sigma_I[a]),
              errc::assertion_failure, "(Lambda_I - rho_Q)(omega_{sigma,I}) <= 0");
    rep.optimal.push_back(std::move(cand));
  }
  require(!rep.optimal.empty(), errc::assertion_failure, "no optimal candidate");
  return rep;
}

std::vector<PipelineEntry> embedding_pipeline(const SphericalPair& sp,
                                              const SphericalRootDatum& srd,
                                              const ExponentData& ed) {
  require(is_wavefront(sp, srd), errc::not_wavefront, "pipeline requires a wave-front pair");
  TemperedReport rep = optimal_pairs(sp, srd, ed); // throws NotTempered
  const AlgebraPtr& g = sp.g;
  const RestrictedRootSystem& rs = g->rs();
  std::vector<PipelineEntry> out;
  for (const OptimalCandidate& cand : rep.optimal) {
    InterlacingData idata = interlacing_data(sp, srd, cand.I);
    std::vector<int> genF = rs.generated_subsystem(idata.F_I);
    std::set<int> genF_set(genF.begin(), genF.end());
    PipelineEntry pe;
    pe.lambda_index = cand.lambda_index;
    pe.I = cand.I;
    pe.F = idata.F_I;
    pe.parabolic = g->grade_span([&](const Grade& gr) {
      if (gr.kind != GradeKind::root) return true;
      return !rs.is_positive(gr.root) || genF_set.count(gr.root) > 0;
    });
    pe.levi = g->grade_span([&](const Grade& gr) {
      return gr.kind != GradeKind::root || genF_set.count(gr.root) > 0;
    });
    Subspace h_I = degenerate(sp, srd, cand.I);
    Subspace ubar_F = g->grade_span([&](const Grade& gr) {
      if (gr.kind != GradeKind::root || rs.is_positive(gr.root)) return false;
      return genF_set.count(rs.negative_of(gr.root)) == 0;
    });
    require(h_I.contains(ubar_F) && pe.parabolic.contains(h_I), errc::assertion_failure,
            "interlacing fails in the pipeline");
    pe.h_prime = intersect(pe.levi, h_I);
    out.push_back(std::move(pe));
  }
  return out;
}

} // namespace sphlie
