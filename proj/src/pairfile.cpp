#include "sphlie/pairfile.hpp"

#include <sstream>

#include "sphlie/catalog.hpp"

namespace sphlie {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(errc::parse_error, where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing key '") + key + "'");
  return *it;
}

int need_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_number_integer()) parse_fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

} // namespace

Json rat_json(const Rat& r) { return Json(rat_str(r)); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  parse_fail("rational", "expected \"p/q\" string or integer");
}

Json vec_json(const QVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_json(x));
  return a;
}

QVec vec_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("vector", "expected an array");
  QVec v;
  for (const Json& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json mat_cols_json(const QMat& m) {
  Json a = Json::array();
  for (int j = 0; j < m.cols(); ++j) a.push_back(vec_json(m.col(j)));
  return a;
}

std::string root_name(const RestrictedRootSystem& rs, const QVec& functional) {
  if (is_zero(functional)) return "0";
  auto render = [&](const QVec& coords) -> std::optional<std::string> {
    std::string out;
    for (size_t k = 0; k < coords.size(); ++k) {
      const Rat& c = coords[k];
      if (c == 0) continue;
      if (c < 0) return std::nullopt;
      if (!out.empty()) out += "+";
      if (c != 1) out += rat_str(c) + "*";
      out += "a" + std::to_string(k + 1);
    }
    return out.empty() ? std::optional<std::string>("0") : out;
  };
  auto c = rs.simple_coords(functional);
  if (c) {
    if (auto s = render(*c)) return *s;
    QVec neg = Rat(-1) * functional;
    auto cn = rs.simple_coords(neg);
    if (cn) {
      if (auto s = render(*cn)) return "-(" + *s + ")";
    }
  }
  // fall back to raw coordinates
  std::string out = "[";
  for (size_t k = 0; k < functional.size(); ++k) {
    if (k) out += ",";
    out += rat_str(functional[k]);
  }
  return out + "]";
}

std::vector<int> parse_subset(const std::string& arg, char prefix, int count) {
  std::vector<int> out;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.size() < 2 || tok[0] != prefix) parse_fail("subset", "expected names like " +
                                                        std::string(1, prefix) + "1,...");
    int idx = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') parse_fail("subset", "bad name '" + tok + "'");
      idx = idx * 10 + (tok[i] - '0');
    }
    if (idx < 1 || idx > count) parse_fail("subset", "'" + tok + "' out of range");
    out.push_back(idx - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PairInput parse_pair_file(const Json& doc) {
  if (!doc.is_object()) parse_fail("document", "expected an object");
  if (need_int(doc, "format", "document") != 1) parse_fail("document.format", "expected 1");
  const Json& alg = need(doc, "algebra", "document");
  PairInput in;
  if (alg.is_string() || alg.contains("catalog")) {
    std::string name = alg.is_string() ? alg.get<std::string>()
                                       : need(alg, "catalog", "algebra").get<std::string>();
    CatalogPair cp = catalog_build(name);
    in.g = cp.g;
    in.h = cp.h;
    if (doc.contains("subalgebra")) {
      std::vector<QVec> cols;
      for (const Json& c : doc["subalgebra"]) cols.push_back(vec_from_json(c));
      in.h = in.g->subspace_from(cols);
    }
  } else {
    const std::string where = "algebra";
    int a_dim = need_int(alg, "a_dim", where);
    std::vector<QVec> roots;
    for (const Json& r : need(alg, "roots", where)) {
      QVec v = vec_from_json(r);
      if (int(v.size()) != a_dim) parse_fail(where + ".roots", "root of wrong dimension");
      roots.push_back(v);
    }
    std::vector<int> positive, simple;
    for (const Json& p : need(alg, "positive", where)) positive.push_back(p.get<int>());
    for (const Json& p : need(alg, "simple", where)) simple.push_back(p.get<int>());
    std::vector<Grade> grades;
    for (const Json& g : need(alg, "grades", where)) {
      if (g.is_string()) {
        std::string s = g.get<std::string>();
        if (s == "a")
          grades.push_back(Grade::a());
        else if (s == "m")
          grades.push_back(Grade::m());
        else
          parse_fail(where + ".grades", "expected \"a\", \"m\" or {\"root\": i}");
      } else {
        grades.push_back(Grade::of_root(need_int(g, "root", where + ".grades")));
      }
    }
    int dim = int(grades.size());
    std::vector<std::vector<SparseVec>> table(static_cast<size_t>(dim), std::vector<SparseVec>(static_cast<size_t>(dim)));
    for (const Json& ent : need(alg, "brackets", where)) {
      if (!ent.is_array() || ent.size() != 3) parse_fail(where + ".brackets", "expected [i, j, terms]");
      int i = ent[0].get<int>(), j = ent[1].get<int>();
      if (i < 0 || j < 0 || i >= dim || j >= dim)
        parse_fail(where + ".brackets", "index out of range");
      SparseVec sv;
      for (const Json& t : ent[2]) {
        int k = t[0].get<int>();
        if (k < 0 || k >= dim) parse_fail(where + ".brackets", "target out of range");
        sv.push_back({k, rat_from_json(t[1])});
      }
      table[size_t(i)][size_t(j)] = sv;
      SparseVec neg;
      for (auto& [k, v] : sv) neg.push_back({k, -v});
      table[size_t(j)][size_t(i)] = neg;
    }
    QMat gram(0, 0);
    bool has_gram = alg.contains("gram");
    if (has_gram) {
      std::vector<QVec> cols;
      for (const Json& c : alg["gram"]) cols.push_back(vec_from_json(c));
      gram = QMat::from_cols(cols);
    } else {
      // Killing restriction from the root multiplicities.
      gram = QMat(a_dim, a_dim);
      for (const Grade& g : grades) {
        if (g.kind != GradeKind::root) continue;
        const QVec& w = roots[size_t(g.root)];
        for (int p = 0; p < a_dim; ++p)
          for (int q = 0; q < a_dim; ++q) gram.at(p, q) += w[size_t(p)] * w[size_t(q)];
      }
    }
    try {
      RestrictedRootSystem rs(a_dim, roots, positive, simple, gram);
      in.g = GradedLieAlgebra::create(rs, grades, table);
    } catch (const Error& e) {
      if (e.code() == errc::parse_error) throw;
      parse_fail("algebra", e.what());
    }
    std::vector<QVec> cols;
    for (const Json& c : need(doc, "subalgebra", "document")) cols.push_back(vec_from_json(c));
    in.h = in.g->subspace_from(cols);
  }
  if (doc.contains("exponents")) in.exponents = doc["exponents"];
  return in;
}

PairInput parse_pair_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, e.what()); // carries byte offset
  }
  return parse_pair_file(doc);
}

Json pair_to_json(const AlgebraPtr& g, const Subspace& h, const std::optional<Json>& exponents) {
  Json doc;
  doc["format"] = 1;
  Json alg;
  alg["a_dim"] = g->rs().a_dim();
  Json roots = Json::array();
  for (const QVec& r : g->rs().roots()) roots.push_back(vec_json(r));
  alg["roots"] = roots;
  alg["positive"] = g->rs().positive();
  alg["simple"] = g->rs().simple();
  Json grades = Json::array();
  for (const Grade& gr : g->grades()) {
    if (gr.kind == GradeKind::a_part)
      grades.push_back("a");
    else if (gr.kind == GradeKind::m_part)
      grades.push_back("m");
    else
      grades.push_back(Json{{"root", gr.root}});
  }
  alg["grades"] = grades;
  Json brackets = Json::array();
  for (int i = 0; i < g->dim(); ++i)
    for (int j = i + 1; j < g->dim(); ++j) {
      const SparseVec& sv = g->bracket_basis(i, j);
      if (sv.empty()) continue;
      Json terms = Json::array();
      for (auto& [k, v] : sv) terms.push_back(Json::array({k, rat_json(v)}));
      brackets.push_back(Json::array({i, j, terms}));
    }
  alg["brackets"] = brackets;
  alg["gram"] = mat_cols_json(g->rs().gram());
  doc["algebra"] = alg;
  doc["subalgebra"] = mat_cols_json(h.basis);
  if (exponents) doc["exponents"] = *exponents;
  return doc;
}

ExponentData resolve_exponents(const SphericalPair& sp, const SphericalRootDatum& srd,
                               const Json& block) {
  const std::string where = "exponents";
  int s = srd.num_spherical(), e = srd.edge.cols();
  QVec chi_re = zero_vec(e), chi_im = zero_vec(e);
  if (block.contains("chi")) {
    chi_re = vec_from_json(need(block["chi"], "re", where + ".chi"));
    chi_im = vec_from_json(need(block["chi"], "im", where + ".chi"));
    if (int(chi_re.size()) != e || int(chi_im.size()) != e)
      parse_fail(where + ".chi", "expected " + std::to_string(e) + " edge values");
  }
  std::vector<ComplexFunctional> lead;
  for (const Json& lj : need(block, "e_lead", where)) {
    QVec re = vec_from_json(need(lj, "re", where + ".e_lead"));
    QVec im = vec_from_json(need(lj, "im", where + ".e_lead"));
    if (int(re.size()) != s + e || int(im.size()) != s + e)
      parse_fail(where + ".e_lead",
                 "expected " + std::to_string(s + e) + " values (omegas then edge)");
    QVec re_omega(re.begin(), re.begin() + s), re_edge(re.begin() + s, re.end());
    QVec im_omega(im.begin(), im.begin() + s), im_edge(im.begin() + s, im.end());
    lead.push_back(ComplexFunctional{functional_from_values(sp, srd, re_omega, re_edge),
                                     functional_from_values(sp, srd, im_omega, im_edge)});
  }
  int d = block.contains("degree_bound") ? block["degree_bound"].get<int>() : 0;
  return make_exponent_data(sp, srd, chi_re, chi_im, lead, d);
}

} // namespace sphlie
