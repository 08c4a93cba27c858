#include "sphlie/rootsys.hpp"

#include <algorithm>

namespace sphlie {

RestrictedRootSystem::RestrictedRootSystem(int a_dim, std::vector<QVec> roots,
                                           std::vector<int> positive, std::vector<int> simple,
                                           QMat gram)
    : a_dim_(a_dim),
      roots_(std::move(roots)),
      positive_(std::move(positive)),
      simple_(std::move(simple)),
      gram_(std::move(gram)) {
  require(gram_.rows() == a_dim_ && gram_.cols() == a_dim_, errc::dimension_mismatch,
          "gram matrix size");
  gram_inv_ = inverse(gram_);
  for (auto& r : roots_) {
    require(int(r.size()) == a_dim_, errc::dimension_mismatch, "root dimension");
    require(!is_zero(r), errc::assertion_failure, "zero root");
  }
  positive_set_.insert(positive_.begin(), positive_.end());
  // Sigma = Sigma+ u -Sigma+.
  require(2 * positive_.size() == roots_.size(), errc::assertion_failure,
          "positive system does not split Sigma");
  for (int i = 0; i < num_roots(); ++i) {
    int j = negative_of(i);
    require(j >= 0, errc::assertion_failure, "Sigma not symmetric");
    require(is_positive(i) != is_positive(j), errc::assertion_failure,
            "exactly one of a root pair must be positive");
  }
  // Simple roots: positive, linearly independent, and every positive root is
  // an N0-combination of them.
  std::vector<QVec> simple_vecs;
  for (int s : simple_) {
    require(is_positive(s), errc::assertion_failure, "simple root not positive");
    simple_vecs.push_back(roots_[size_t(s)]);
  }
  if (!simple_.empty())
    require(sphlie::rank(QMat::from_rows(simple_vecs)) == int(simple_.size()), errc::assertion_failure,
            "simple roots dependent");
  for (int p : positive_) {
    auto c = simple_coords(roots_[size_t(p)]);
    require(c.has_value(), errc::assertion_failure, "positive root outside span(Pi)");
    for (auto& x : *c)
      require(x >= 0 && rat_den(x) == 1, errc::assertion_failure,
              "positive root not an N0-combination of Pi");
  }
}

int RestrictedRootSystem::find_root(const QVec& f) const {
  for (int i = 0; i < num_roots(); ++i)
    if (roots_[size_t(i)] == f) return i;
  return -1;
}

int RestrictedRootSystem::negative_of(int i) const {
  return find_root(Rat(-1) * roots_[size_t(i)]);
}

std::optional<QVec> RestrictedRootSystem::simple_coords(const QVec& f) const {
  require(int(f.size()) == a_dim_, errc::dimension_mismatch, "functional dimension");
  if (simple_.empty()) return is_zero(f) ? std::optional<QVec>(QVec{}) : std::nullopt;
  std::vector<QVec> cols;
  for (int s : simple_) cols.push_back(roots_[size_t(s)]);
  return solve(QMat::from_cols(cols), f);
}

void RestrictedRootSystem::validate_subset(const std::vector<int>& F) const {
  for (int f : F)
    require(f >= 0 && f < rank(), errc::invalid_subset, "F is not a subset of Pi");
  for (size_t i = 1; i < F.size(); ++i)
    require(F[i - 1] < F[i], errc::invalid_subset, "F must be sorted and duplicate-free");
}

std::vector<int> RestrictedRootSystem::generated_subsystem(const std::vector<int>& F) const {
  validate_subset(F);
  std::vector<bool> in_F(size_t(rank()), false);
  for (int f : F) in_F[size_t(f)] = true;
  std::vector<int> out;
  for (int i = 0; i < num_roots(); ++i) {
    QVec f = roots_[size_t(i)];
    if (!is_positive(i)) f = Rat(-1) * f;
    auto c = simple_coords(f);
    bool ok = c.has_value();
    if (ok)
      for (int k = 0; k < rank(); ++k)
        if ((*c)[size_t(k)] != 0 && !in_F[size_t(k)]) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

RestrictedRootSystem::ParabolicSpaces RestrictedRootSystem::parabolic_spaces(
    const std::vector<int>& F) const {
  validate_subset(F);
  ParabolicSpaces ps;
  std::vector<int> gen = generated_subsystem(F);
  std::set<int> gen_set(gen.begin(), gen.end());
  for (int p : positive_) {
    if (gen_set.count(p))
      ps.u_upper_F_roots.push_back(p);
    else
      ps.u_F_roots.push_back(p);
  }
  std::vector<QVec> frows;
  for (int f : F) frows.push_back(roots_[size_t(simple_[size_t(f)])]);
  ps.a_F = frows.empty() ? col_echelon(QMat::identity(a_dim_))
                         : kernel_basis(QMat::from_rows(frows));
  std::vector<QVec> cr;
  for (int f : F) cr.push_back(coroot(simple_[size_t(f)]));
  ps.a_upper_F = cr.empty() ? QMat(a_dim_, 0) : col_echelon(QMat::from_cols(cr));
  return ps;
}

std::vector<int> RestrictedRootSystem::support(const QVec& f) const {
  auto c = simple_coords(f);
  require(c.has_value(), errc::not_in_positive_lattice, "functional outside span(Pi)");
  std::vector<int> out;
  for (int k = 0; k < rank(); ++k) {
    const Rat& x = (*c)[size_t(k)];
    require(x >= 0 && rat_den(x) == 1, errc::not_in_positive_lattice,
            "coordinates not in N0");
    if (x > 0) out.push_back(k);
  }
  return out;
}

QVec RestrictedRootSystem::dual_vector(const QVec& f) const { return gram_inv_ * f; }

QVec RestrictedRootSystem::coroot(int i) const {
  QVec t = dual_vector(roots_[size_t(i)]);
  Rat norm = dot(roots_[size_t(i)], t);
  return Rat(2) / norm * t;
}

Rat RestrictedRootSystem::pairing(const QVec& f, const QVec& g) const {
  return dot(f, dual_vector(g));
}

std::vector<QVec> RestrictedRootSystem::fundamental_coweights() const {
  // omega'_beta = sum_gamma c_gamma t_gamma with alpha(omega'_beta) = delta;
  // the Gram matrix of the simple roots is positive definite on their span.
  int k = rank();
  std::vector<QVec> duals;
  for (int s : simple_) duals.push_back(dual_vector(roots_[size_t(s)]));
  QMat a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.at(i, j) = dot(roots_[size_t(simple_[size_t(i)])], duals[size_t(j)]);
  QMat ainv = inverse(a);
  std::vector<QVec> out;
  for (int b = 0; b < k; ++b) {
    QVec w = zero_vec(a_dim_);
    for (int j = 0; j < k; ++j) w += ainv.at(j, b) * duals[size_t(j)];
    out.push_back(w);
  }
  return out;
}

} // namespace sphlie
