#include "sphlie/rational.hpp"

namespace sphlie {

const char* errc_name(errc c) {
  switch (c) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invalid_subset: return "InvalidSubset";
    case errc::not_in_positive_lattice: return "NotInPositiveLattice";
    case errc::parent_mismatch: return "ParentMismatch";
    case errc::not_normalizing: return "NotNormalizing";
    case errc::not_subalgebra: return "NotSubalgebra";
    case errc::not_spherical: return "NotSpherical";
    case errc::no_adapted_parabolic: return "NoAdaptedParabolic";
    case errc::generator_not_vanishing_on_a_h: return "GeneratorNotVanishingOnAH";
    case errc::inconsistent_sign: return "InconsistentSign";
    case errc::consistency_failure: return "ConsistencyFailure";
    case errc::not_wavefront: return "NotWavefront";
    case errc::no_positive_solution: return "NoPositiveSolution";
    case errc::f_q_not_contained: return "FQNotContained";
    case errc::parent_not_unimodular: return "ParentNotUnimodular";
    case errc::edge_mismatch: return "EdgeMismatch";
    case errc::not_tempered: return "NotTempered";
    case errc::assertion_failure: return "AssertionFailure";
    case errc::unsupported_entry: return "UnsupportedEntry";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) {
    s += "/";
    s += rat_den(r).str();
  }
  return s;
}

Rat rat_parse(std::string_view s) {
  auto bad = [&]() -> Rat { fail(errc::parse_error, "bad rational '" + std::string(s) + "'"); };
  if (s.empty()) return bad();
  size_t slash = s.find('/');
  auto parse_int = [&](std::string_view t) -> Int {
    if (t.empty()) return bad(), Int(0);
    size_t i = 0;
    if (t[0] == '+' || t[0] == '-') i = 1;
    if (i == t.size()) return bad(), Int(0);
    for (size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return bad(), Int(0);
    return Int(std::string(t));
  };
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) return bad();
  return Rat(num, den);
}

} // namespace sphlie
