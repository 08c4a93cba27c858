#pragma once

#include <optional>
#include <vector>

#include "sphlie/linalg.hpp"

namespace sphlie {

/// Linear functional with exact rational coefficients over a fixed basis.
struct RationalFunctional {
  QVec coeffs;
  int ambient_dim() const { return int(coeffs.size()); }
  Rat operator()(const QVec& v) const { return dot(coeffs, v); }
};

/// Rays and lineality of {x : r(x) <= 0 for all rows r}. Rays are primitive,
/// deduplicated and sorted; lineality is a canonical echelon basis.
struct DualDescription {
  std::vector<QVec> rays;
  QMat lineality;
};

DualDescription dual_rays(const std::vector<QVec>& rows, int dim);

/// Closed convex polyhedral cone {x : f(x) <= 0 for all inequalities f}.
/// Degenerate cones (no inequalities, full space) are legal.
class Cone {
public:
  static Cone from_inequalities(int dim, std::vector<QVec> ineqs);
  /// Cone generated by the given rays; a subspace is encoded by listing
  /// opposite rays. Inequalities are derived, generators canonicalized.
  static Cone from_generators(int dim, const std::vector<QVec>& gens);

  int ambient_dim() const { return dim_; }
  const std::vector<QVec>& inequalities() const { return ineqs_; }

  /// Canonical generating set: extremal rays plus +/- a lineality basis.
  const std::vector<QVec>& generators() const;

  /// Basis of the edge c n -c, the largest subspace contained in the cone.
  QMat edge() const;

  bool contains_point(const QVec& v) const;

private:
  int dim_ = 0;
  std::vector<QVec> ineqs_;
  mutable std::optional<std::vector<QVec>> gens_;
};

/// Image of c under the projection along `kernel` onto span(target_basis),
/// expressed in target_basis coordinates. Requires kernel + target = ambient
/// as a direct sum.
Cone project_cone(const Cone& c, const QMat& kernel, const QMat& target_basis);

bool cone_contains(const Cone& outer, const Cone& inner);
bool cone_equal(const Cone& a, const Cone& b);

} // namespace sphlie
