#include "sphlie/report.hpp"

#include <ostream>
#include <set>

#include "sphlie/catalog.hpp"

namespace sphlie {

namespace {

Json names_json(const std::vector<int>& simple_positions) {
  Json a = Json::array();
  for (int p : simple_positions) a.push_back("a" + std::to_string(p + 1));
  return a;
}

Json subset_names(const std::vector<int>& I, char prefix) {
  Json a = Json::array();
  for (int i : I) a.push_back(std::string(1, prefix) + std::to_string(i + 1));
  return a;
}

Json functional_json(const RestrictedRootSystem& rs, const QVec& f) {
  Json j;
  j["name"] = root_name(rs, f);
  j["on_a"] = vec_json(f);
  return j;
}

Json cone_json(const Cone& c) {
  Json j;
  Json ineqs = Json::array();
  for (const QVec& f : c.inequalities()) ineqs.push_back(vec_json(f));
  j["inequalities"] = ineqs;
  Json rays = Json::array();
  for (const QVec& g : c.generators()) rays.push_back(vec_json(g));
  j["generators"] = rays;
  j["edge_dim"] = c.edge().cols();
  return j;
}

} // namespace

std::string spherical_root_name(const Analysis& an, int i) {
  return root_name(an.sp.g->rs(), an.srd.spherical_root(i));
}

Analysis Analysis::run(PairInput in) {
  Analysis an{std::move(in), {}, {}, {}};
  an.sp = standardize(an.in.g, an.in.h);
  an.srd = spherical_roots(an.sp);
  if (an.in.exponents) an.ed = resolve_exponents(an.sp, an.srd, *an.in.exponents);
  return an;
}

Json analyze_report(const Analysis& an) {
  const SphericalPair& sp = an.sp;
  const SphericalRootDatum& srd = an.srd;
  const RestrictedRootSystem& rs = sp.g->rs();
  Json doc = pair_to_json(sp.g, sp.h, an.in.exponents);

  Json a;
  a["dim_g"] = sp.g->dim();
  a["dim_h"] = sp.h.dim();
  a["rank_aZ"] = sp.rank();
  a["F_Q"] = names_json(sp.F_Q);
  a["l_cap_h"] = mat_cols_json(sp.l_cap_h.basis);
  Json tarr = Json::array();
  for (const TEntry& e : sp.T) {
    Json te;
    te["alpha"] = root_name(rs, rs.root(e.alpha_root));
    te["basis_index"] = e.neg_basis_index;
    Json comps = Json::array();
    for (const TComponent& c : e.comps) {
      Json cj;
      cj["beta"] = c.beta_root < 0 ? "0" : root_name(rs, rs.root(c.beta_root));
      cj["vector"] = vec_json(c.vec);
      comps.push_back(cj);
    }
    te["components"] = comps;
    tarr.push_back(te);
  }
  a["T"] = tarr;
  a["a_H"] = mat_cols_json(sp.a_H);
  a["a_Z"] = mat_cols_json(sp.a_Z);
  Json gens = Json::array();
  for (size_t i = 0; i < srd.m_generators.size(); ++i) {
    Json gj = functional_json(rs, srd.m_generators[i]);
    gj["pi_coords"] = vec_json(srd.m_generators_pi[i]);
    gens.push_back(gj);
  }
  a["M_generators"] = gens;
  Json sarr = Json::array();
  for (int i = 0; i < srd.num_spherical(); ++i) {
    Json sj = functional_json(rs, srd.spherical_root(i));
    sj["label"] = "s" + std::to_string(i + 1);
    sarr.push_back(sj);
  }
  a["S"] = sarr;
  a["cone"] = cone_json(srd.cone);
  a["edge"] = mat_cols_json(srd.edge);
  Json om = Json::array();
  for (const QVec& w : srd.omegas) om.push_back(vec_json(w));
  a["omegas"] = om;
  RationalFunctional uf = unimodularity_functional(sp.h);
  a["unimodular"] = is_zero(uf.coeffs);
  a["unimodularity_functional"] = vec_json(uf.coeffs);
  doc["analysis"] = a;
  return doc;
}

Json degenerate_report(const Analysis& an, const std::vector<int>& I) {
  Subspace h_I = degenerate(an.sp, an.srd, I);
  Json j;
  j["I"] = subset_names(I, 's');
  j["h_I"] = mat_cols_json(h_I.basis);
  j["dim_h_I"] = h_I.dim();
  j["is_subalgebra"] = true; // asserted inside degenerate
  j["open"] = true;          // asserted inside degenerate
  SphericalPair sp_I = standardize(an.sp.g, h_I);
  SphericalRootDatum srd_I = spherical_roots(sp_I);
  Json s = Json::array();
  for (int i = 0; i < srd_I.num_spherical(); ++i)
    s.push_back(root_name(an.sp.g->rs(), srd_I.spherical_root(i)));
  j["spherical_roots_of_h_I"] = s;
  j["a_I"] = mat_cols_json(a_I_space(an.sp, an.srd, I));
  j["X_I"] = vec_json(X_I_element(an.sp, an.srd, I));
  j["unimodular"] = is_zero(unimodularity_functional(h_I).coeffs);
  return j;
}

Json wavefront_json(const Analysis& an) {
  WavefrontReport rep = wavefront_report(an.sp, an.srd);
  Json j;
  j["wavefront"] = rep.is_wavefront;
  Json ps = Json::array();
  for (int i = 0; i < an.srd.num_spherical(); ++i) {
    Json pj;
    pj["sigma"] = "s" + std::to_string(i + 1);
    pj["Pi_sigma"] = subset_names(rep.pi_sigma[size_t(i)], 'a');
    ps.push_back(pj);
  }
  j["pi_sigma"] = ps;
  if (rep.is_wavefront) {
    j["pi_sigma_formula"] = pi_sigma_formula_check(an.sp, an.srd);
    Json per = Json::array();
    for (const auto& [I, data] : rep.per_I) {
      Json e;
      e["I"] = subset_names(I, 's');
      e["J_I"] = subset_names(data.J_I, 'a');
      e["F_I"] = subset_names(data.F_I, 'a');
      e["Y_I"] = vec_json(data.Y_I);
      e["interlaced"] = data.interlaced_ok;
      per.push_back(e);
    }
    j["per_I"] = per;
  }
  return j;
}

Json induce_report(const Analysis& an, const std::vector<int>& F) {
  InducedPair ip = induce(an.sp, F);
  Json j;
  j["F"] = subset_names(F, 'a');
  j["dim_g_F"] = ip.g_F->dim();
  j["h_F"] = mat_cols_json(ip.h_F.basis);
  j["parent_basis"] = ip.parent_basis;
  j["cone_identity"] = induced_cone_check(an.sp, an.srd, F);
  SphericalPair sp_F = standardize(ip.g_F, ip.h_F);
  SphericalRootDatum srd_F = spherical_roots(sp_F);
  Json s = Json::array();
  for (int i = 0; i < srd_F.num_spherical(); ++i)
    s.push_back(root_name(ip.g_F->rs(), srd_F.spherical_root(i)));
  j["spherical_roots_of_Z_F"] = s;
  j["Z_F_unimodular"] = is_zero(unimodularity_functional(sp_F.h).coeffs);
  if (ip.delta_F) {
    j["p_F_cap_h"] = mat_cols_json(ip.p_F_cap_h.basis);
    j["modular_character"] = vec_json(ip.delta_F->coeffs);
  }
  return j;
}

Json twists_report(const Analysis& an) {
  std::vector<std::vector<int>> chars = sign_twists(an.sp, an.srd);
  int rank = 0;
  while ((size_t(1) << rank) < chars.size()) ++rank;
  Json j;
  j["lattice_rank"] = rank;
  j["count"] = int(chars.size());
  Json arr = Json::array();
  for (const auto& eps : chars) {
    Json e;
    e["signs"] = eps;
    // twist() verifies h_w is a subalgebra with the same adapted parabolic
    // and the same monoid generators (hence cone); it throws otherwise.
    Subspace h_w = twist(an.sp, an.srd, eps);
    e["h_w"] = mat_cols_json(h_w.basis);
    e["equals_h"] = (h_w == an.sp.h);
    e["verified"] = true;
    arr.push_back(e);
  }
  j["twists"] = arr;
  return j;
}

Json exponents_report(const Analysis& an) {
  require(an.ed.has_value(), errc::parse_error, "pair file has no exponents block");
  const ExponentData& ed = *an.ed;
  Json j;
  j["rho_Q"] = vec_json(rho_Q(an.sp));
  j["lambda_V_eta"] = vec_json(lambda_V_eta(an.sp, an.srd, ed));
  bool temp = is_tempered(an.sp, an.srd, ed);
  j["tempered"] = temp;
  j["strong_inequality"] = strong_inequality(an.sp, an.srd, ed);
  if (temp) {
    TemperedReport rep = optimal_pairs(an.sp, an.srd, ed);
    j["min_eta"] = rep.min_eta;
    Json arr = Json::array();
    for (const OptimalCandidate& c : rep.optimal) {
      Json cj;
      cj["lambda"] = c.lambda_index;
      cj["I"] = subset_names(c.I, 's');
      cj["Lambda_I"] = vec_json(c.lambda_I);
      Json om = Json::array();
      for (const QVec& w : c.omega_sigma_I) om.push_back(vec_json(w));
      cj["omega_sigma_I"] = om;
      cj["status"] = "candidate"; // eta_I nonvanishing is analytic, not decided here
      arr.push_back(cj);
    }
    j["optimal"] = arr;
    bool wf = is_wavefront(an.sp, an.srd);
    j["wavefront"] = wf;
    if (wf) {
      Json pl = Json::array();
      for (const PipelineEntry& pe : embedding_pipeline(an.sp, an.srd, ed)) {
        Json ej;
        ej["lambda"] = pe.lambda_index;
        ej["I"] = subset_names(pe.I, 's');
        ej["F"] = subset_names(pe.F, 'a');
        ej["parabolic"] = mat_cols_json(pe.parabolic.basis);
        ej["levi"] = mat_cols_json(pe.levi.basis);
        ej["h_prime"] = mat_cols_json(pe.h_prime.basis);
        pl.push_back(ej);
      }
      j["pipeline"] = pl;
    }
  }
  return j;
}

Json catalog_report(const std::string& name_or_empty) {
  Json j;
  if (name_or_empty.empty()) {
    Json arr = Json::array();
    for (const CatalogEntry& e : catalog_entries()) {
      Json ej;
      ej["name"] = e.name;
      ej["description"] = e.description;
      ej["metadata_only"] = e.metadata_only;
      if (e.wavefront) ej["wavefront"] = *e.wavefront;
      if (e.num_spherical) ej["num_spherical"] = *e.num_spherical;
      if (e.unimodular) ej["unimodular"] = *e.unimodular;
      ej["provenance"] = e.provenance;
      arr.push_back(ej);
    }
    j["entries"] = arr;
    return j;
  }
  CatalogPair cp = catalog_build(name_or_empty);
  return pair_to_json(cp.g, cp.h, std::nullopt);
}

int selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& what, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.metadata_only) continue;
    try {
      CatalogPair cp = catalog_build(e.name);
      SphericalPair sp = standardize(cp.g, cp.h, cp.p_min);
      SphericalRootDatum srd = spherical_roots(sp);
      if (e.F_Q) check(e.name + ": F_Q", sp.F_Q == *e.F_Q);
      if (e.num_spherical) check(e.name + ": #S", srd.num_spherical() == *e.num_spherical);
      if (e.unimodular)
        check(e.name + ": unimodular",
              is_zero(unimodularity_functional(sp.h).coeffs) == *e.unimodular);
      if (e.wavefront) check(e.name + ": wavefront", is_wavefront(sp, srd) == *e.wavefront);
      int s = srd.num_spherical();
      bool degen_ok = true;
      for (int mask = 0; mask < (1 << s); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < s; ++i)
          if (mask & (1 << i)) I.push_back(i);
        Subspace h_I = degenerate(sp, srd, I);
        SphericalPair sp_I = standardize(cp.g, h_I);
        SphericalRootDatum srd_I = spherical_roots(sp_I);
        std::vector<QVec> expect;
        for (int i : I) expect.push_back(srd.spherical_root(i));
        std::vector<QVec> got;
        for (int i = 0; i < srd_I.num_spherical(); ++i) got.push_back(srd_I.spherical_root(i));
        degen_ok = degen_ok && (expect == got);
      }
      check(e.name + ": degenerations", degen_ok);
    } catch (const Error& err) {
      check(e.name + ": " + err.what(), false);
    }
  }
  return failures;
}

} // namespace sphlie
