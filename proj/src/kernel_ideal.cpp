#include "z2index/kernel_ideal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace z2index {

KernelGenerators kernel_generators(int n) {
  if (n < 1 || n > kMaxGenerators)
    throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxGenerators) + "]");
  KernelGenerators gens;
  gens.n = n;
  auto w = [n](int i) { return Monomial::generator(n, i); };
  for (int d = 1; d <= 2 * n; ++d) {
    std::vector<WreathBasisElement> terms;
    for (int i = 0; i <= n; ++i) {
      const int j = d - i;
      if (i < j && j <= n)
        terms.push_back(WreathBasisElement::od(w(i), w(j)));
    }
    // (1 + c)^(n-i) Sq[w_i] contributes C(n-i, d-2i) c^(d-2i) Sq[w_i].
    for (int i = 0; i <= n && 2 * i <= d; ++i)
      if (binom_mod2(static_cast<std::uint64_t>(n - i), static_cast<std::uint64_t>(d - 2 * i)))
        terms.push_back(WreathBasisElement::sqc(w(i), d - 2 * i));
    gens.by_degree.emplace_back(std::move(terms));
  }
  return gens;
}

namespace {

bool involves_any(const WreathBasisElement& e, KilledGenerators killed) {
  for (int i : killed) {
    if (e.first().involves(i))
      return true;
    if (e.is_od() && e.second().involves(i))
      return true;
  }
  return false;
}

void check_degree(const KernelGenerators& gens, int d) {
  if (d < 1)
    throw std::invalid_argument("degree must be positive");
  if (gens.n < 1)
    throw std::invalid_argument("empty generator set");
}

}  // namespace

gf2::SparseRow coordinates(const WreathClass& x, const WreathBasis& basis) {
  std::vector<gf2::Column> cols;
  cols.reserve(x.terms().size());
  for (const auto& e : x.terms()) {
    auto idx = basis.index_of(e);
    if (!idx)
      throw StructuralError("class term " + e.to_string() + " is not in the degree-" +
                            std::to_string(basis.degree()) + " basis");
    cols.push_back(static_cast<gf2::Column>(*idx));
  }
  return gf2::SparseRow(std::move(cols));
}

void ideal_span_rows(const KernelGenerators& gens, int d,
                     const std::function<void(const gf2::SparseRow&)>& sink,
                     KilledGenerators killed) {
  check_degree(gens, d);
  const auto target = wreath_basis(gens.n, d);
  std::vector<gf2::Column> cols;
  auto emit = [&](const WreathBasisElement& e) {
    cols.push_back(static_cast<gf2::Column>(*target->index_of(e)));
  };
  const int top = std::min(d, gens.max_degree());
  for (int k = 1; k <= top; ++k) {
    const auto& g = gens[k];
    const auto source = wreath_basis(gens.n, d - k);
    for (const auto& b : source->elements()) {
      cols.clear();
      for (const auto& t : g.terms())
        multiply_basis(b, t, emit);
      sink(gf2::SparseRow(cols));
    }
  }
  if (killed.empty())
    return;
  for (std::size_t i = 0; i < target->size(); ++i)
    if (involves_any((*target)[i], killed))
      sink(gf2::SparseRow::unit(static_cast<gf2::Column>(i)));
}

std::vector<gf2::SparseRow> ideal_span_rows(const KernelGenerators& gens, int d,
                                            KilledGenerators killed) {
  std::vector<gf2::SparseRow> rows;
  ideal_span_rows(gens, d, [&](const gf2::SparseRow& r) { rows.push_back(r); }, killed);
  return rows;
}

IdealMembership class_membership(const KernelGenerators& gens, const WreathClass& target,
                                 int degree, bool want_certificate, KilledGenerators killed) {
  check_degree(gens, degree);
  if (!target.is_zero() && (!target.is_homogeneous() || target.max_degree() != degree))
    throw std::invalid_argument("target is not homogeneous of degree " + std::to_string(degree));
  const auto basis = wreath_basis(gens.n, degree);
  gf2::EchelonState state(basis->size());
  IdealMembership out;
  out.degree = degree;
  out.dim_basis = basis->size();
  ideal_span_rows(gens, degree, [&](const gf2::SparseRow& r) { state.insert(r); }, killed);
  out.rows = state.insertions();
  out.dim_ideal = state.rank();
  auto verdict = state.membership(coordinates(target, *basis), want_certificate);
  out.member = verdict.member;
  out.certificate = std::move(verdict.certificate);
  return out;
}

IdealMembership c_membership(const KernelGenerators& gens, int d, bool want_certificate) {
  return class_membership(gens, c_power(gens.n, d), d, want_certificate);
}

bool certificate_valid(const KernelGenerators& gens, int d, const gf2::SparseRow& target,
                       const gf2::SparseRow& certificate, KilledGenerators killed) {
  if (!certificate.dot(target))
    return false;
  bool ok = true;
  ideal_span_rows(
      gens, d, [&](const gf2::SparseRow& r) { ok = ok && !certificate.dot(r); }, killed);
  return ok;
}

int two_adic_valuation(int n) {
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  return std::countr_zero(static_cast<unsigned>(n));
}

int theorem_lower_bound(int n) { return (2 << two_adic_valuation(n)) - 1; }

int theorem_upper_bound(int n) { return 2 * n - 1; }

std::optional<int> theorem_value(int n) {
  const int l = two_adic_valuation(n);
  if (l == 0)
    return 1;
  if (l == 1)
    return 3;
  if (std::has_single_bit(static_cast<unsigned>(n)))
    return 2 * n - 1;
  return std::nullopt;
}

namespace {

DegreeRecord solve_degree(const KernelGenerators& gens, int d, bool certificates,
                          std::optional<bool>& certificate_ok) {
  // Records without certificates are pure functions of (n, d).
  static std::map<std::pair<int, int>, DegreeRecord> cache;
  static std::mutex cache_mutex;
  const auto key = std::make_pair(gens.n, d);
  if (!certificates) {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  auto m = c_membership(gens, d, certificates);
  DegreeRecord rec;
  rec.d = d;
  rec.dim_basis = m.dim_basis;
  rec.dim_ideal = m.dim_ideal;
  rec.c_in_ideal = m.member;
  if (m.certificate) {
    const auto basis = wreath_basis(gens.n, d);
    certificate_ok = certificate_valid(gens, d, coordinates(c_power(gens.n, d), *basis),
                                       *m.certificate);
    std::vector<std::string> rendered;
    for (auto col : m.certificate->support())
      rendered.push_back((*basis)[col].to_string());
    rec.certificate = std::move(rendered);
  }
  if (!certificates) {
    std::lock_guard lock(cache_mutex);
    cache.emplace(key, rec);
  }
  return rec;
}

void assess(IndexReport& r) {
  const int n = r.n;
  auto& f = r.flags;
  f.truncated = r.cap < 2 * n;
  r.hind = 0;
  bool saw_member = false;
  f.monotone = true;
  for (const auto& rec : r.degrees) {
    if (rec.dim_ideal > rec.dim_basis)
      f.monotone = false;
    if (rec.c_in_ideal)
      saw_member = true;
    else if (saw_member)
      f.monotone = false;
    if (!rec.c_in_ideal && rec.d <= 2 * n - 1)
      r.hind = std::max(r.hind, rec.d);
  }
  if (!f.truncated)
    f.upper_bound_kernel = r.degrees.at(static_cast<std::size_t>(2 * n - 1)).c_in_ideal;
  const int lower = theorem_lower_bound(n);
  const int upper = theorem_upper_bound(n);
  // Without any membership inside the cap, hind is only a lower bound.
  f.theorem_bounds = r.hind <= upper && (!saw_member || r.hind >= lower);
  const auto exact = theorem_value(n);
  f.exploratory = !exact.has_value();
  if (exact) {
    if (saw_member)
      f.theorem_exact = r.hind == *exact;
    else if (r.hind > *exact)
      f.theorem_exact = false;
  }
}

}  // namespace

bool IndexReport::consistent() const {
  return flags.upper_bound_kernel.value_or(true) && flags.theorem_bounds &&
         flags.theorem_exact.value_or(true) && flags.monotone &&
         flags.certificates_valid.value_or(true);
}

IndexReport compute_index(int n, const IndexOptions& options) {
  if (n < 1)
    throw std::invalid_argument("n must be at least 1");
  const int cap = options.cap.value_or(2 * n);
  if (cap < 1 || cap > 2 * n)
    throw std::invalid_argument("degree cap must lie in [1, 2n]");
  const auto gens = kernel_generators(n);

  IndexReport report;
  report.n = n;
  report.cap = cap;
  report.degrees.resize(static_cast<std::size_t>(cap));
  std::vector<std::optional<bool>> cert_ok(static_cast<std::size_t>(cap));

  // Largest degrees first so the expensive solves start early.
  std::atomic<int> next{cap};
  auto worker = [&] {
    for (int d = next.fetch_sub(1); d >= 1; d = next.fetch_sub(1)) {
      const auto slot = static_cast<std::size_t>(d - 1);
      report.degrees[slot] = solve_degree(gens, d, options.certificates, cert_ok[slot]);
    }
  };
  const unsigned threads = std::clamp(options.threads, 1u, static_cast<unsigned>(cap));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        try {
          worker();
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
          next = 0;
        }
      });
    pool.clear();
    if (failure)
      std::rethrow_exception(failure);
  }

  assess(report);
  if (options.certificates) {
    report.flags.certificates_valid = std::all_of(
        cert_ok.begin(), cert_ok.end(), [](const auto& ok) { return ok.value_or(true); });
  }
  return report;
}

void require_consistent(const IndexReport& report) {
  if (report.consistent())
    return;
  std::ostringstream dump;
  dump << "n = " << report.n << ", cap = " << report.cap << ", hind = " << report.hind << '\n';
  const auto& f = report.flags;
  auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "pass" : "FAIL") : "n/a"; };
  dump << "upper-bound kernel: " << tri(f.upper_bound_kernel)
       << ", theorem bounds [" << theorem_lower_bound(report.n) << ", "
       << theorem_upper_bound(report.n) << "]: " << (f.theorem_bounds ? "pass" : "FAIL")
       << ", theorem exact: " << tri(f.theorem_exact) << ", monotone: "
       << (f.monotone ? "pass" : "FAIL") << ", certificates: " << tri(f.certificates_valid)
       << '\n';
  for (const auto& rec : report.degrees)
    dump << "  d=" << rec.d << " basis=" << rec.dim_basis << " ideal=" << rec.dim_ideal
         << " c^d in I: " << (rec.c_in_ideal ? "yes" : "no") << '\n';
  throw ConsistencyError("index computation for n = " + std::to_string(report.n) +
                             " contradicts a proven bound",
                         dump.str());
}

std::vector<int> killed_generators_power_of_two(int n) {
  if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw std::invalid_argument("n must be a power of two");
  const int l = two_adic_valuation(n);
  std::vector<bool> alive(static_cast<std::size_t>(n + 1), false);
  alive[static_cast<std::size_t>(n)] = true;
  for (int k = 0; k <= l; ++k)
    alive[static_cast<std::size_t>(n - (1 << k))] = true;
  std::vector<int> killed;
  for (int i = 1; i <= n; ++i)
    if (!alive[static_cast<std::size_t>(i)])
      killed.push_back(i);
  return killed;
}

std::vector<HandRelation> replicate_hand_relations(int n) {
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  const int l = two_adic_valuation(n);
  const bool power_of_two = std::has_single_bit(static_cast<unsigned>(n));
  if (l >= 2 && !power_of_two)
    throw std::invalid_argument("no hand relations for n = " + std::to_string(n));

  const auto gens = kernel_generators(n);
  auto w = [n](int i) { return Monomial::generator(n, i); };
  auto sq = [&](int i, int j = 0) { return WreathClass(WreathBasisElement::sqc(w(i), j)); };
  auto od = [&](int i, int j) { return WreathClass(WreathBasisElement::od(w(i), w(j))); };
  auto c = [&](int j) { return c_power(n, j); };

  std::vector<HandRelation> out;
  auto add = [&](std::string label, WreathClass rel, std::vector<int> killed = {},
                 bool expected = true) {
    HandRelation h;
    h.label = std::move(label);
    h.degree = rel.max_degree();
    h.relation = std::move(rel);
    h.killed = std::move(killed);
    h.expected_member = expected;
    out.push_back(std::move(h));
  };

  if (l == 0) {
    add("c + Od[1, w1] in I", c(1) + od(0, 1));
    add("c^2 in I", c(2));
  }
  if (l == 1) {
    add("c^2 + Sq[w1] + Od[1, w2] in I", c(2) + sq(1) + od(0, 2));
    if (n >= 6) {
      add("c*Sq[w1] + Od[1, w3] + Od[w1, w2] in I", sq(1, 1) + od(0, 3) + od(1, 2));
      add("c^3 + Od[1, w3] + Od[w1, w2] in I", c(3) + od(0, 3) + od(1, 2));
    } else {
      add("c*Sq[w1] + Od[w1, w2] in I", sq(1, 1) + od(1, 2));
      add("c^3 + Od[w1, w2] in I", c(3) + od(1, 2));
    }
    add("c^3 not in I", c(3), {}, false);
    add("c^4 in I", c(4));
  }
  if (power_of_two) {
    const auto killed = killed_generators_power_of_two(n);
    // a_k = 2^l - 2^(l-k); a_0 = 0 is the unit.
    auto a = [&](int k) { return n - (n >> k); };
    for (int k = 0; k <= l; ++k) {
      const int cexp = n >> k;
      WreathClass rel = sq(a(k), cexp) + od(a(k), n);
      std::string label = "c^" + std::to_string(cexp) + "*Sq[w" + std::to_string(a(k)) +
                          "] + Od[w" + std::to_string(a(k)) + ", w" + std::to_string(n) + "]";
      if (k < l) {
        rel += sq(a(k + 1));
        label += " + Sq[w" + std::to_string(a(k + 1)) + "]";
      }
      add(label + " in I+", std::move(rel), killed);
    }
    add("Sq[w" + std::to_string(n) + "] in I+", sq(n), killed);
    for (int k = 0; k <= l; ++k)
      for (int m = k + 1; m <= l; ++m)
        add("Od[w" + std::to_string(a(k)) + ", w" + std::to_string(a(m)) + "] in I+",
            od(a(k), a(m)), killed);
    add("c^" + std::to_string(2 * n - 1) + " + Od[w" + std::to_string(n - 1) + ", w" +
            std::to_string(n) + "] in I+",
        c(2 * n - 1) + od(n - 1, n), killed);
    add("c^" + std::to_string(2 * n - 1) + " not in I+", c(2 * n - 1), killed, false);
  }

  std::string failures;
  for (auto& h : out) {
    h.member = class_membership(gens, h.relation, h.degree, false, h.killed).member;
    if (!h.holds())
      failures += "  " + h.label + " [" + h.relation.to_string() + "]\n";
  }
  if (!failures.empty())
    throw ConsistencyError("hand relations fail for n = " + std::to_string(n), failures);
  return out;
}

}  // namespace z2index
