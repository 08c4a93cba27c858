#pragma once

#include <string>

#include <json.hpp> // vendored nlohmann/json

#include "sphlie/exponents.hpp"

namespace sphlie {

using Json = nlohmann::ordered_json;

/// Parsed pair description: the algebra, the subalgebra, and an optional
/// exponent-data block (kept raw until the root datum fixes the basis).
struct PairInput {
  AlgebraPtr g;
  Subspace h;
  std::optional<Json> exponents; // raw block, resolved by resolve_exponents
};

/// Parses a versioned pair document (format: 1). Unknown top-level keys are
/// ignored so that analysis output can be fed back in. Throws ParseError with
/// a location diagnostic.
PairInput parse_pair_file(const Json& doc);
PairInput parse_pair_text(const std::string& text);

/// Serializes (g, h) as a pair document with explicit structure constants.
Json pair_to_json(const AlgebraPtr& g, const Subspace& h, const std::optional<Json>& exponents);

/// Resolves a raw exponent block against the computed root datum. Values are
/// given on the basis (omega_1..omega_s, edge columns) in canonical order.
ExponentData resolve_exponents(const SphericalPair& sp, const SphericalRootDatum& srd,
                               const Json& block);

// --- canonical naming -------------------------------------------------------

/// "a1+2a2" style name from Pi-coordinates; "0" for zero, "-(...)" for
/// negatives of positive-lattice elements.
std::string root_name(const RestrictedRootSystem& rs, const QVec& functional);

/// Parses "a1,a3" / "s2" style subset arguments into sorted positions.
std::vector<int> parse_subset(const std::string& arg, char prefix, int count);

// --- exact JSON atoms -------------------------------------------------------

Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json vec_json(const QVec& v);
QVec vec_from_json(const Json& j);
Json mat_cols_json(const QMat& m);

} // namespace sphlie
