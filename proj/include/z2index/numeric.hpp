#pragma once

// Floating-point checks of the equivariant maps out of the projection-matrix
// model of G(2n, n), where the involution is P -> E - P.

#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace z2index::numeric {

inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kEquivarianceTolerance = 1e-12;
inline constexpr double kEigenTolerance = 1e-7;

class ProjectionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Residuals of the defining identities P^t = P, P^2 = P, tr P = n.
struct ProjectionResiduals {
  double symmetry = 0;
  double idempotency = 0;
  double trace = 0;
};

/// Symmetric idempotent 2n x 2n matrix of trace n.
class ProjectionMatrix {
public:
  /// Validates against kIdentityTolerance; throws ProjectionError otherwise.
  explicit ProjectionMatrix(Eigen::MatrixXd entries);

  /// Q Q^t for a 2n x n matrix with orthonormal columns.
  static ProjectionMatrix onto_columns(const Eigen::MatrixXd& q);

  int half_dimension() const { return static_cast<int>(p_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return p_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return p_(i, j); }

  /// E - P, the orthogonal complement.
  ProjectionMatrix complement() const;
  ProjectionResiduals residuals() const { return residuals_of(p_); }

  static ProjectionResiduals residuals_of(const Eigen::MatrixXd& p);

private:
  Eigen::MatrixXd p_;
};

/// Uniformly distributed point of G(2n, n): orthonormalized Gaussian frame.
/// A rank-deficient draw is discarded and the next draw of the same seed used.
ProjectionMatrix random_projection(int n, std::uint64_t seed);

/// (P11 - 1/2, P12, ..., P1,2n). Odd under P -> E - P and of norm 1/2.
Eigen::VectorXd sphere_map(const ProjectionMatrix& p);

/// L (+) ... (+) L, `copies` times along the diagonal.
ProjectionMatrix block_embed(const ProjectionMatrix& l, int copies);

struct NumericSummary {
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double min_norm = 0;
  double max_norm_error = 0;
  double max_equivariance_error = 0;
  double max_block_equivariance_error = 0;
  double max_idempotency_error = 0;
  double max_symmetry_error = 0;
  double max_trace_error = 0;
  double max_eigenvalue_error = 0;

  bool passes() const;
};

/// Runs every check over `samples` seeded projections. Sample i draws from
/// seed ^ i-derived streams, so results do not depend on `threads`.
NumericSummary verify_numeric(int n, std::size_t samples, std::uint64_t seed,
                              unsigned threads = 1);

}  // namespace z2index::numeric
