#pragma once

#include <optional>
#include <string>

#include "sphlie/spherical.hpp"

namespace sphlie {

struct CatalogPair {
  AlgebraPtr g;
  Subspace h;
  Subspace p_min;
  // For symmetric entries: the defining involution tau in algebra
  // coordinates (h = fixed points); the Cartan involution lives on g.
  std::optional<QMat> tau;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  bool metadata_only = false;
  // Expected record, recomputed on every test run.
  std::optional<bool> wavefront;
  std::optional<int> num_spherical;
  std::optional<bool> unimodular;
  std::optional<std::vector<int>> F_Q; // positions in Pi
  std::string provenance;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Builds (g, h, p_min) for a buildable entry; UnsupportedEntry otherwise.
CatalogPair catalog_build(const std::string& name);

} // namespace sphlie
