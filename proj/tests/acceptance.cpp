// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>

#include "oracles/dense_gf2.hpp"
#include "oracles/dense_ideal.hpp"
#include "support/random.hpp"
#include "z2index/kernel_ideal.hpp"
#include "z2index/numeric.hpp"

using namespace z2index;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kClosedFormSeconds = 60.0;
constexpr double kExploratorySeconds = 30.0 * 60.0;
constexpr double kNumericSeconds = 10.0;
constexpr int kPropertyCases = 1000;
constexpr int kDegreeCap = 16;
constexpr std::size_t kNumericSamples = 10000;

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> body;
};

// Shared between criteria so n <= 12 is computed once.
std::map<int, IndexReport> reports;

const IndexReport& report_for(int n) {
  auto it = reports.find(n);
  if (it == reports.end())
    it = reports.emplace(n, compute_index(n, {.threads = workers()})).first;
  return it->second;
}

bool closed_form_values(std::string& detail) {
  const int expected[] = {1, 3, 1, 7, 1, 3, 1, 15};
  const auto t0 = Clock::now();
  bool ok = true;
  std::string got;
  for (int n = 1; n <= 8; ++n) {
    const auto& r = report_for(n);
    ok = ok && r.hind == expected[n - 1];
    got += std::to_string(r.hind) + (n < 8 ? "," : "");
  }
  const double secs = seconds_since(t0);
  detail = "hind(1..8) = " + got + " in " + std::to_string(secs) + " s (limit 60 s)";
  return ok && secs < kClosedFormSeconds;
}

bool upper_bound_kernel(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    const auto& r = report_for(n);
    const bool in = r.degrees.back().d == 2 * n && r.degrees.back().c_in_ideal;
    ok = ok && in && r.flags.upper_bound_kernel == std::optional<bool>(true);
  }
  detail = "c^(2n) in I_(2n) for n = 1..8";
  return ok;
}

bool exploratory_twelve(std::string& detail) {
  const auto t0 = Clock::now();
  const auto& r = report_for(12);
  const double secs = seconds_since(t0);
  detail = "hind(12) = " + std::to_string(r.hind) + ", bounds [" +
           std::to_string(theorem_lower_bound(12)) + ", " + std::to_string(theorem_upper_bound(12)) +
           "], exploratory = " + (r.flags.exploratory ? "yes" : "no") + ", " +
           std::to_string(secs) + " s (limit 1800 s)";
  return r.hind >= 7 && r.hind <= 23 && r.flags.exploratory && r.consistent() &&
         secs < kExploratorySeconds;
}

bool hand_relations(std::string& detail) {
  int total = 0;
  bool extended_seen = false;
  for (int n : {3, 5, 2, 6, 4, 8}) {
    std::vector<HandRelation> rels;
    try {
      rels = replicate_hand_relations(n);
    } catch (const ConsistencyError& e) {
      detail = std::string(e.what()) + "\n" + e.diagnostic();
      return false;
    }
    for (const auto& h : rels) {
      if (!h.holds()) {
        detail = "n = " + std::to_string(n) + ": " + h.label;
        return false;
      }
      ++total;
      const std::string top = "c^" + std::to_string(2 * n - 1) + " + Od[w" +
                              std::to_string(n - 1) + ", w" + std::to_string(n) + "] in I+";
      if ((n == 2 || n == 4 || n == 8) && h.label == top && h.member)
        extended_seen = true;
    }
  }
  detail = std::to_string(total) + " relations across n in {3,5}, {2,6}, {2,4,8}";
  return extended_seen;
}

bool divisibility(std::string& detail) {
  int pairs = 0;
  for (int n = 1; n <= 12; ++n)
    for (int d = 1; d < n; ++d)
      if (n % d == 0) {
        ++pairs;
        if (report_for(n).hind < report_for(d).hind) {
          detail = "hind(" + std::to_string(n) + ") < hind(" + std::to_string(d) + ")";
          return false;
        }
      }
  detail = std::to_string(pairs) + " divisor pairs with n <= 12";
  return true;
}

bool dense_agreement(std::string& detail) {
  int degrees = 0;
  for (int n : {1, 2}) {
    const auto gens = oracle::generators(n);
    const auto& r = report_for(n);
    for (int d = 1; d <= 2 * n; ++d) {
      const auto o = oracle::dense_degree(n, d, gens);
      const auto& rec = r.degrees[static_cast<std::size_t>(d - 1)];
      if (rec.dim_basis != o.dim_basis || rec.dim_ideal != o.dim_ideal ||
          rec.c_in_ideal != o.c_in_ideal) {
        detail = "mismatch at n = " + std::to_string(n) + ", d = " + std::to_string(d);
        return false;
      }
      ++degrees;
    }
  }
  std::mt19937_64 rng(2024);
  int instances = 0;
  for (; instances < 200; ++instances) {
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 512)(rng);
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(dim + 8, 160))(rng);
    const double fill = std::uniform_real_distribution<double>(0.005, 0.3)(rng);
    std::bernoulli_distribution bit(fill);
    gf2::EchelonState state(dim);
    oracle::DenseSpan span(dim);
    auto draw = [&] {
      std::vector<gf2::Column> cols;
      oracle::DenseVec v(dim, 0);
      for (std::size_t c = 0; c < dim; ++c)
        if (bit(rng)) {
          cols.push_back(static_cast<gf2::Column>(c));
          v[c] = 1;
        }
      return std::make_pair(gf2::SparseRow::from_sorted(std::move(cols)), std::move(v));
    };
    for (std::size_t i = 0; i < rows; ++i) {
      auto [s, v] = draw();
      state.insert(s);
      span.add(std::move(v));
    }
    if (state.rank() != span.rank()) {
      detail = "rank mismatch on synthetic instance " + std::to_string(instances);
      return false;
    }
    for (int q = 0; q < 20; ++q) {
      auto [s, v] = draw();
      const auto m = state.membership(s);
      if (m.member != span.contains(v)) {
        detail = "verdict mismatch on synthetic instance " + std::to_string(instances);
        return false;
      }
      if (!m.member) {
        bool ok = m.certificate && m.certificate->dot(s);
        for (auto p : state.pivots())
          ok = ok && !m.certificate->dot(state.pivot_row(p));
        if (!ok) {
          detail = "bad certificate on synthetic instance " + std::to_string(instances);
          return false;
        }
      }
    }
  }
  detail = std::to_string(degrees) + " degrees for n in {1,2}, " + std::to_string(instances) +
           " synthetic instances";
  return true;
}

bool algebra_properties(std::string& detail) {
  std::mt19937_64 rng(16);
  const int n = 8;
  const WreathClass c = c_power(n, 1);
  int ring = 0, multiplicative = 0, quadratic = 0, annihilation = 0;
  for (int t = 0; t < kPropertyCases; ++t) {
    const auto a = testsupport::random_class(rng, n, 6, 4);
    const auto b = testsupport::random_class(rng, n, 6, 4);
    const auto e = testsupport::random_class(rng, n, 6, 4);
    if (mul(a, b, kDegreeCap) == mul(b, a, kDegreeCap) &&
        mul(mul(a, b, kDegreeCap), e, kDegreeCap) == mul(a, mul(b, e, kDegreeCap), kDegreeCap) &&
        mul(a, b + e, kDegreeCap) == mul(a, b, kDegreeCap) + mul(a, e, kDegreeCap))
      ++ring;

    const auto p = testsupport::random_poly(rng, n, 4, 3);
    const auto q = testsupport::random_poly(rng, n, 4, 3);
    if (sqe(p * q) == mul(sqe(p), sqe(q), kDegreeCap))
      ++multiplicative;
    if (sqe(p + q) + sqe(p) + sqe(q) == odot(p, q))
      ++quadratic;
    if (mul(odot(p, q), c, kDegreeCap + 1).is_zero())
      ++annihilation;
  }
  detail = "ring " + std::to_string(ring) + ", sqe multiplicative " +
           std::to_string(multiplicative) + ", quadratic " + std::to_string(quadratic) +
           ", annihilation " + std::to_string(annihilation) + " of " +
           std::to_string(kPropertyCases) + " each";
  return ring == kPropertyCases && multiplicative == kPropertyCases &&
         quadratic == kPropertyCases && annihilation == kPropertyCases;
}

bool numeric_checks(std::string& detail) {
  const auto t0 = Clock::now();
  const auto s = numeric::verify_numeric(4, kNumericSamples, 20240601, workers());
  const double secs = seconds_since(t0);
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%zu samples, |norm - 0.5| <= %.2e, equivariance %.2e, idempotency %.2e, "
                "symmetry %.2e, trace %.2e, %.2f s (limit 10 s)",
                s.samples, s.max_norm_error, s.max_equivariance_error, s.max_idempotency_error,
                s.max_symmetry_error, s.max_trace_error, secs);
  detail = buf;
  return s.passes() && secs < kNumericSeconds;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"closed-form values n = 1..8", closed_form_values},
      {"c^(2n) in the kernel ideal", upper_bound_kernel},
      {"n = 12 within bounds", exploratory_twelve},
      {"hand relations", hand_relations},
      {"monotone under divisibility", divisibility},
      {"streaming solver vs dense elimination", dense_agreement},
      {"algebra invariants", algebra_properties},
      {"numeric equivariant maps", numeric_checks},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s [%zu] %s: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
