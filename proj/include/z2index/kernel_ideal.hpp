#pragma once

// The ideal cut out by the Stiefel-Whitney classes of the doubled
// representation, and the nilpotency index of c modulo that ideal.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2index/gf2.hpp"
#include "z2index/wreath.hpp"

namespace z2index {

/// Homogeneous components g_1 .. g_2n of
///   sum_{0<=i<j<=n} w_i (.) w_j + sum_{0<=i<=n} (1+c)^(n-i) Sq[w_i].
struct KernelGenerators {
  int n = 0;
  std::vector<WreathClass> by_degree;  // by_degree[d - 1] == g_d

  int max_degree() const { return static_cast<int>(by_degree.size()); }
  const WreathClass& operator[](int d) const { return by_degree.at(static_cast<std::size_t>(d - 1)); }
};

KernelGenerators kernel_generators(int n);

/// Optional extra relations w_i = 0, one generator index per entry.
using KilledGenerators = std::span<const int>;

/// Rows spanning the degree-d part of the ideal: for k = 1..d and each basis
/// element b of degree d - k, the coordinates of b * g_k. With killed
/// generators, unit rows for every basis element involving one of them follow.
void ideal_span_rows(const KernelGenerators& gens, int d,
                     const std::function<void(const gf2::SparseRow&)>& sink,
                     KilledGenerators killed = {});
std::vector<gf2::SparseRow> ideal_span_rows(const KernelGenerators& gens, int d,
                                            KilledGenerators killed = {});

/// Coordinates of a homogeneous class in wreath_basis(n, d).
gf2::SparseRow coordinates(const WreathClass& x, const WreathBasis& basis);

struct IdealMembership {
  int degree = 0;
  std::size_t dim_basis = 0;
  std::size_t dim_ideal = 0;
  std::size_t rows = 0;
  bool member = false;
  /// Present when !member and a certificate was requested.
  std::optional<gf2::SparseRow> certificate;
};

/// Decides whether the homogeneous class lies in the degree-d ideal.
IdealMembership class_membership(const KernelGenerators& gens, const WreathClass& target,
                                 int degree, bool want_certificate = false,
                                 KilledGenerators killed = {});

/// Decides c^d in I_d.
IdealMembership c_membership(const KernelGenerators& gens, int d, bool want_certificate = false);

/// Checks a non-membership certificate against every span row and the target.
bool certificate_valid(const KernelGenerators& gens, int d, const gf2::SparseRow& target,
                       const gf2::SparseRow& certificate, KilledGenerators killed = {});

struct DegreeRecord {
  int d = 0;
  std::size_t dim_basis = 0;
  std::size_t dim_ideal = 0;
  bool c_in_ideal = false;
  /// Rendered basis elements of the witness functional, when requested.
  std::optional<std::vector<std::string>> certificate;
};

struct IndexFlags {
  /// c^(2n) in I_(2n); unset when the degree cap stops short of 2n.
  std::optional<bool> upper_bound_kernel;
  /// 2^(l+1) - 1 <= hind <= 2n - 1, restricted to what the cap can decide.
  bool theorem_bounds = true;
  /// Equality with the closed-form value (odd n, n = 2 mod 4, n = 2^l).
  std::optional<bool> theorem_exact;
  /// No closed-form value exists for this n; hind is bound-checked only.
  bool exploratory = false;
  /// Degree cap below 2n; hind is a lower bound only.
  bool truncated = false;
  /// Verdicts never leave the ideal once inside, and dim I_d <= dim basis_d.
  bool monotone = true;
  /// Every emitted certificate verified; unset when none were requested.
  std::optional<bool> certificates_valid;
};

struct IndexReport {
  int n = 0;
  int cap = 0;
  std::vector<DegreeRecord> degrees;
  int hind = 0;
  IndexFlags flags;

  /// False when any decidable flag fails.
  bool consistent() const;
};

struct IndexOptions {
  /// Defaults to 2n; must not exceed it.
  std::optional<int> cap;
  unsigned threads = 1;
  bool certificates = false;
};

/// Raised when a computed result contradicts a proven bound. Carries a dump.
class ConsistencyError : public std::runtime_error {
public:
  ConsistencyError(const std::string& what, std::string diagnostic)
      : std::runtime_error(what), diagnostic_(std::move(diagnostic)) {}
  const std::string& diagnostic() const { return diagnostic_; }

private:
  std::string diagnostic_;
};

/// The 2-adic exponent l with 2^l || n.
int two_adic_valuation(int n);
/// Lower and upper bounds 2^(l+1) - 1 and 2n - 1.
int theorem_lower_bound(int n);
int theorem_upper_bound(int n);
/// Closed form for odd n, n = 2 mod 4 and powers of two; nullopt otherwise.
std::optional<int> theorem_value(int n);

/// Runs every degree up to the cap, possibly in parallel, and assembles the
/// report in degree order. Does not throw on inconsistency; see
/// require_consistent.
IndexReport compute_index(int n, const IndexOptions& options = {});

/// Throws ConsistencyError with a rendered dump if !report.consistent().
void require_consistent(const IndexReport& report);

struct HandRelation {
  std::string label;
  int degree = 0;
  WreathClass relation;
  /// Checked modulo the ideal enlarged by w_i = 0 for the killed i.
  std::vector<int> killed;
  /// Most entries assert membership; a few assert the class survives.
  bool expected_member = true;
  bool member = false;
  bool holds() const { return member == expected_member; }
};

/// For n = 2^l: every i in 1..n except 2^l - 2^k (k = 0..l) and 2^l.
std::vector<int> killed_generators_power_of_two(int n);

/// Hand-derived relations for odd n, n = 2 mod 4 and n = 2^l, each checked
/// as an ideal-membership statement. Throws ConsistencyError if any fails and
/// std::invalid_argument if n belongs to none of those families.
std::vector<HandRelation> replicate_hand_relations(int n);

}  // namespace z2index
