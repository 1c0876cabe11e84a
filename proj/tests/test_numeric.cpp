#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "z2index/numeric.hpp"

using namespace z2index::numeric;

TEST_CASE("diag(1, 0) is the basic projection") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 0, 0, 0;
  const ProjectionMatrix p(m);
  CHECK(p.half_dimension() == 1);
  const auto f = sphere_map(p);
  CHECK(f(0) == doctest::Approx(0.5));
  CHECK(f(1) == 0.0);
  CHECK(f.norm() == doctest::Approx(0.5));
  const auto q = p.complement();
  CHECK(q(0, 0) == 0.0);
  CHECK(q(1, 1) == 1.0);
  CHECK(sphere_map(q)(0) == doctest::Approx(-0.5));
}

TEST_CASE("non-projections are rejected") {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
  CHECK_THROWS_AS(ProjectionMatrix{id}, ProjectionError);  // trace 4, not 2
  Eigen::MatrixXd odd = Eigen::MatrixXd::Zero(3, 3);
  CHECK_THROWS_AS(ProjectionMatrix{odd}, ProjectionError);
  Eigen::MatrixXd skew(2, 2);
  skew << 1, 1, 0, 0;
  CHECK_THROWS_AS(ProjectionMatrix{skew}, ProjectionError);
  CHECK_THROWS_AS(ProjectionMatrix::onto_columns(Eigen::MatrixXd::Zero(3, 2)), ProjectionError);
  CHECK_THROWS_AS(random_projection(0, 1), std::invalid_argument);
}

TEST_CASE("random projections satisfy the defining identities") {
  for (int n : {1, 2, 4, 6}) {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
      const auto p = random_projection(n, seed);
      const auto r = p.residuals();
      CHECK(r.symmetry <= kIdentityTolerance);
      CHECK(r.idempotency <= kIdentityTolerance);
      CHECK(r.trace <= kIdentityTolerance);
      CHECK(p.matrix().trace() == doctest::Approx(n).epsilon(1e-12));
    }
  }
}

TEST_CASE("sphere_map is odd under complements and has norm 1/2") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto p = random_projection(4, seed);
    const auto f = sphere_map(p);
    const auto g = sphere_map(p.complement());
    CHECK(std::abs(f.norm() - 0.5) <= kIdentityTolerance);
    CHECK((f + g).cwiseAbs().maxCoeff() <= kEquivarianceTolerance);
    CHECK(p.complement().complement().matrix().isApprox(p.matrix(), 1e-14));
  }
}

TEST_CASE("block embedding") {
  const auto p = random_projection(2, 17);
  const auto b = block_embed(p, 3);
  CHECK(b.half_dimension() == 6);
  CHECK(b.matrix().block(4, 4, 4, 4) == p.matrix());
  CHECK(b.matrix().block(0, 4, 4, 4).isZero());
  CHECK((block_embed(p.complement(), 3).matrix() - b.complement().matrix())
            .cwiseAbs()
            .maxCoeff() <= kEquivarianceTolerance);
  CHECK_THROWS_AS(block_embed(p, 0), std::invalid_argument);
}

TEST_CASE("random projections are seeded") {
  CHECK(random_projection(3, 42).matrix() == random_projection(3, 42).matrix());
  CHECK(random_projection(3, 42).matrix() != random_projection(3, 43).matrix());
}

TEST_CASE("verify_numeric summary") {
  const auto a = verify_numeric(4, 2000, 7, 1);
  CHECK(a.passes());
  CHECK(a.samples == 2000);
  CHECK(std::abs(a.min_norm - 0.5) <= kIdentityTolerance);
  const auto b = verify_numeric(4, 2000, 7, 6);
  CHECK(a.min_norm == b.min_norm);
  CHECK(a.max_equivariance_error == b.max_equivariance_error);
  CHECK(a.max_eigenvalue_error == b.max_eigenvalue_error);
  CHECK_THROWS_AS(verify_numeric(4, 0, 7), std::invalid_argument);
  CHECK_THROWS_AS(verify_numeric(0, 10, 7), std::invalid_argument);
}
