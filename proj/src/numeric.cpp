#include "z2index/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace z2index::numeric {

namespace {

// Below this pivot norm a Gram-Schmidt step counts as rank deficient.
constexpr double kDegenerateNorm = 1e-8;
constexpr int kMaxDraws = 64;

double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

ProjectionResiduals ProjectionMatrix::residuals_of(const Eigen::MatrixXd& p) {
  ProjectionResiduals r;
  r.symmetry = max_abs(p - p.transpose());
  r.idempotency = max_abs(p * p - p);
  r.trace = std::abs(p.trace() - static_cast<double>(p.rows()) / 2.0);
  return r;
}

ProjectionMatrix::ProjectionMatrix(Eigen::MatrixXd entries) : p_(std::move(entries)) {
  if (p_.rows() != p_.cols() || p_.rows() == 0 || p_.rows() % 2 != 0)
    throw ProjectionError("projection matrix must be square of even positive size");
  const auto r = residuals();
  if (r.symmetry > kIdentityTolerance || r.idempotency > kIdentityTolerance ||
      r.trace > kIdentityTolerance)
    throw ProjectionError("matrix is not a symmetric idempotent of half trace (residuals " +
                          std::to_string(r.symmetry) + ", " + std::to_string(r.idempotency) +
                          ", " + std::to_string(r.trace) + ")");
}

ProjectionMatrix ProjectionMatrix::onto_columns(const Eigen::MatrixXd& q) {
  if (q.rows() != 2 * q.cols())
    throw ProjectionError("frame must be 2n x n");
  return ProjectionMatrix(q * q.transpose());
}

ProjectionMatrix ProjectionMatrix::complement() const {
  const auto size = p_.rows();
  return ProjectionMatrix(Eigen::MatrixXd::Identity(size, size) - p_);
}

ProjectionMatrix random_projection(int n, std::uint64_t seed) {
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  const Eigen::Index rows = 2 * n;
  const Eigen::Index cols = n;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(draw)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd q(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i)
        q(i, j) = gauss(rng);

    // Modified Gram-Schmidt, two passes for orthogonality at double precision.
    bool degenerate = false;
    for (Eigen::Index j = 0; j < cols && !degenerate; ++j) {
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index k = 0; k < j; ++k)
          q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
      const double norm = q.col(j).norm();
      if (norm < kDegenerateNorm)
        degenerate = true;
      else
        q.col(j) /= norm;
    }
    if (!degenerate)
      return ProjectionMatrix::onto_columns(q);
  }
  throw ProjectionError("no full-rank Gaussian frame after repeated draws");
}

Eigen::VectorXd sphere_map(const ProjectionMatrix& p) {
  Eigen::VectorXd f = p.matrix().row(0).transpose();
  f(0) -= 0.5;
  return f;
}

ProjectionMatrix block_embed(const ProjectionMatrix& l, int copies) {
  if (copies < 1)
    throw std::invalid_argument("copies must be positive");
  const auto size = l.matrix().rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size * copies, size * copies);
  for (int s = 0; s < copies; ++s)
    out.block(s * size, s * size, size, size) = l.matrix();
  return ProjectionMatrix(std::move(out));
}

bool NumericSummary::passes() const {
  return samples > 0 && std::abs(min_norm - 0.5) <= kIdentityTolerance &&
         max_norm_error <= kIdentityTolerance &&
         max_equivariance_error <= kEquivarianceTolerance &&
         max_block_equivariance_error <= kEquivarianceTolerance &&
         max_idempotency_error <= kIdentityTolerance && max_symmetry_error <= kIdentityTolerance &&
         max_trace_error <= kIdentityTolerance && max_eigenvalue_error <= kEigenTolerance;
}

namespace {

struct SampleResult {
  double norm = 0;
  double equivariance = 0;
  double block_equivariance = 0;
  double idempotency = 0;
  double symmetry = 0;
  double trace = 0;
  double eigenvalue = 0;
};

SampleResult check_sample(int n, std::uint64_t sample_seed) {
  SampleResult r;
  const auto p = random_projection(n, sample_seed);
  const auto q = p.complement();

  const Eigen::VectorXd f = sphere_map(p);
  r.norm = f.norm();
  r.equivariance = (sphere_map(q) + f).cwiseAbs().maxCoeff();

  for (const auto& res : {p.residuals(), q.residuals()}) {
    r.idempotency = std::max(r.idempotency, res.idempotency);
    r.symmetry = std::max(r.symmetry, res.symmetry);
    r.trace = std::max(r.trace, res.trace);
  }

  // Spectrum must be n zeros followed by n ones.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(p.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    r.eigenvalue = std::max(r.eigenvalue, std::abs(ev(i) - (i < n ? 0.0 : 1.0)));

  // Diagonal embedding commutes with taking complements.
  const auto doubled = block_embed(p, 2);
  const auto lhs = block_embed(q, 2).matrix();
  const auto rhs = doubled.complement().matrix();
  r.block_equivariance = max_abs(lhs - rhs);
  return r;
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t i) {
  // splitmix64 of (seed, i)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

NumericSummary verify_numeric(int n, std::size_t samples, std::uint64_t seed, unsigned threads) {
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  if (samples == 0)
    throw std::invalid_argument("samples must be positive");
  std::vector<SampleResult> results(samples);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < samples; i = next++)
      results[i] = check_sample(n, sample_seed(seed, i));
  };
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(std::min<std::size_t>(samples, 256)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }

  NumericSummary s;
  s.n = n;
  s.seed = seed;
  s.samples = samples;
  s.min_norm = std::numeric_limits<double>::infinity();
  for (const auto& r : results) {
    s.min_norm = std::min(s.min_norm, r.norm);
    s.max_norm_error = std::max(s.max_norm_error, std::abs(r.norm - 0.5));
    s.max_equivariance_error = std::max(s.max_equivariance_error, r.equivariance);
    s.max_block_equivariance_error = std::max(s.max_block_equivariance_error, r.block_equivariance);
    s.max_idempotency_error = std::max(s.max_idempotency_error, r.idempotency);
    s.max_symmetry_error = std::max(s.max_symmetry_error, r.symmetry);
    s.max_trace_error = std::max(s.max_trace_error, r.trace);
    s.max_eigenvalue_error = std::max(s.max_eigenvalue_error, r.eigenvalue);
  }
  return s;
}

}  // namespace z2index::numeric
