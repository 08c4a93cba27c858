#include <doctest.h>

#include <random>

#include "sphlie/cones.hpp"

using namespace sphlie;

namespace {

QVec qv(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

} // namespace

TEST_CASE("edge of degenerate cones") {
  // half-line in dim 1 has no line
  Cone half = Cone::from_inequalities(1, {qv({1})});
  CHECK(half.edge().cols() == 0);
  // no inequalities: the full plane
  Cone full = Cone::from_inequalities(2, {});
  CHECK(full.edge().cols() == 2);
  CHECK(full.generators().size() == 4); // +-e1, +-e2
}

TEST_CASE("double description round-trip") {
  Cone quadrant = Cone::from_inequalities(2, {qv({1, 0}), qv({0, 1})});
  auto gens = quadrant.generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == qv({-1, 0}));
  CHECK(gens[1] == qv({0, -1}));
  Cone back = Cone::from_generators(2, gens);
  CHECK(cone_equal(back, quadrant));

  // a cone with lineality: {x <= 0} in dim 2
  Cone hp = Cone::from_inequalities(2, {qv({1, 0})});
  Cone hp2 = Cone::from_generators(2, hp.generators());
  CHECK(cone_equal(hp, hp2));
  CHECK(hp.edge().cols() == 1);
}

TEST_CASE("edge vectors lie in the cone with both signs") {
  Cone c = Cone::from_inequalities(3, {qv({1, 1, 0}), qv({-1, -1, 0}), qv({0, 0, 1})});
  QMat e = c.edge();
  CHECK(e.cols() == 1);
  for (int j = 0; j < e.cols(); ++j) {
    CHECK(c.contains_point(e.col(j)));
    CHECK(c.contains_point(Rat(-1) * e.col(j)));
  }
}

TEST_CASE("project_cone") {
  Cone quadrant = Cone::from_inequalities(2, {qv({1, 0}), qv({0, 1})});
  // kernel {0}: identity on cones
  Cone same = project_cone(quadrant, QMat(2, 0), QMat::identity(2));
  CHECK(cone_equal(same, quadrant));
  // quadrant projected along the diagonal onto span{(1,-1)}: the images of the
  // rays (-1,0), (0,-1) are -1/2 and +1/2, so the image is the full line.
  QMat kernel = QMat::from_cols({qv({1, 1})});
  QMat target = QMat::from_cols({qv({1, -1})});
  Cone img = project_cone(quadrant, kernel, target);
  CHECK(img.ambient_dim() == 1);
  CHECK(img.edge().cols() == 1);
  auto gens = img.generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == qv({-1}));
  CHECK(gens[1] == qv({1}));
  // direct-sum precondition violated
  CHECK_THROWS_AS(project_cone(quadrant, kernel, QMat::from_cols({qv({2, 2})})), Error);
}

TEST_CASE("containment") {
  Cone quadrant = Cone::from_inequalities(2, {qv({1, 0}), qv({0, 1})});
  Cone halfplane = Cone::from_inequalities(2, {qv({1, 0})});
  CHECK(cone_contains(quadrant, quadrant));
  CHECK(cone_contains(halfplane, quadrant));
  CHECK(!cone_contains(quadrant, halfplane));
  Cone other = Cone::from_inequalities(3, {});
  CHECK_THROWS_AS(cone_contains(quadrant, other), Error);
}

TEST_CASE("random cones: generators-inequalities consistency") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 2 + int(rng() % 3);
    int nrows = 1 + int(rng() % 5);
    std::vector<QVec> rows;
    for (int r = 0; r < nrows; ++r) {
      QVec f;
      for (int d = 0; d < dim; ++d) f.push_back(Rat(int(rng() % 5) - 2));
      rows.push_back(f);
    }
    Cone c = Cone::from_inequalities(dim, rows);
    for (const QVec& g : c.generators()) CHECK(c.contains_point(g));
    Cone back = Cone::from_generators(dim, c.generators());
    CHECK(cone_equal(back, c));
    CHECK(cone_equal(project_cone(c, QMat(dim, 0), QMat::identity(dim)), c));
  }
}
