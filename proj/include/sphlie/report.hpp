#pragma once

#include <iosfwd>

#include "sphlie/induction.hpp"
#include "sphlie/pairfile.hpp"

namespace sphlie {

/// Context shared by the command reports.
struct Analysis {
  PairInput in;
  SphericalPair sp;
  SphericalRootDatum srd;
  std::optional<ExponentData> ed;

  static Analysis run(PairInput in);
};

Json analyze_report(const Analysis& an);
Json degenerate_report(const Analysis& an, const std::vector<int>& I);
Json wavefront_json(const Analysis& an);
Json induce_report(const Analysis& an, const std::vector<int>& F);
Json twists_report(const Analysis& an);
Json exponents_report(const Analysis& an);
Json catalog_report(const std::string& name_or_empty);

/// Full invariant suite over the buildable catalog; returns the number of
/// failures and writes one line per check to `out`.
int selftest(std::ostream& out);

std::string spherical_root_name(const Analysis& an, int i);

} // namespace sphlie
