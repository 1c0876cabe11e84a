#include "z2index/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace z2index {

using nlohmann::json;

namespace {

json optional_bool(const std::optional<bool>& b) {
  return b ? json(*b) : json(nullptr);
}

std::optional<bool> read_optional_bool(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null())
    return std::nullopt;
  return v.get<bool>();
}

const char* tri(const std::optional<bool>& b) {
  return b ? (*b ? "pass" : "FAIL") : "n/a";
}

}  // namespace

json to_json(const IndexReport& r) {
  json degrees = json::array();
  for (const auto& rec : r.degrees) {
    json d = {{"d", rec.d},
              {"dimBasis", rec.dim_basis},
              {"dimIdeal", rec.dim_ideal},
              {"cInIdeal", rec.c_in_ideal}};
    if (rec.certificate)
      d["certificate"] = *rec.certificate;
    degrees.push_back(std::move(d));
  }
  const auto exact = theorem_value(r.n);
  return {
      {"schemaVersion", kReportSchemaVersion},
      {"n", r.n},
      {"cap", r.cap},
      {"hind", r.hind},
      {"degrees", std::move(degrees)},
      {"theorem",
       {{"lower", theorem_lower_bound(r.n)},
        {"upper", theorem_upper_bound(r.n)},
        {"exact", exact ? json(*exact) : json(nullptr)}}},
      {"flags",
       {{"upperBoundKernel", optional_bool(r.flags.upper_bound_kernel)},
        {"theoremBounds", r.flags.theorem_bounds},
        {"theoremExact", optional_bool(r.flags.theorem_exact)},
        {"exploratory", r.flags.exploratory},
        {"truncated", r.flags.truncated},
        {"monotone", r.flags.monotone},
        {"certificatesValid", optional_bool(r.flags.certificates_valid)}}},
      {"consistent", r.consistent()},
  };
}

IndexReport index_report_from_json(const json& j) {
  if (j.at("schemaVersion").get<int>() != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version");
  IndexReport r;
  r.n = j.at("n").get<int>();
  r.cap = j.at("cap").get<int>();
  r.hind = j.at("hind").get<int>();
  for (const auto& d : j.at("degrees")) {
    DegreeRecord rec;
    rec.d = d.at("d").get<int>();
    rec.dim_basis = d.at("dimBasis").get<std::size_t>();
    rec.dim_ideal = d.at("dimIdeal").get<std::size_t>();
    rec.c_in_ideal = d.at("cInIdeal").get<bool>();
    if (d.contains("certificate"))
      rec.certificate = d.at("certificate").get<std::vector<std::string>>();
    r.degrees.push_back(std::move(rec));
  }
  const auto& f = j.at("flags");
  r.flags.upper_bound_kernel = read_optional_bool(f, "upperBoundKernel");
  r.flags.theorem_bounds = f.at("theoremBounds").get<bool>();
  r.flags.theorem_exact = read_optional_bool(f, "theoremExact");
  r.flags.exploratory = f.at("exploratory").get<bool>();
  r.flags.truncated = f.at("truncated").get<bool>();
  r.flags.monotone = f.at("monotone").get<bool>();
  r.flags.certificates_valid = read_optional_bool(f, "certificatesValid");
  return r;
}

std::string render_text(const IndexReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << ", degree cap " << r.cap << "\n";
  out << std::setw(5) << "d" << std::setw(12) << "dim basis" << std::setw(12) << "dim ideal"
      << "  c^d in I\n";
  for (const auto& rec : r.degrees) {
    out << std::setw(5) << rec.d << std::setw(12) << rec.dim_basis << std::setw(12)
        << rec.dim_ideal << "  " << (rec.c_in_ideal ? "yes" : "no") << "\n";
    if (rec.certificate) {
      out << "       witness:";
      for (const auto& e : *rec.certificate)
        out << ' ' << e;
      out << "\n";
    }
  }
  out << "hind = " << r.hind;
  if (r.flags.truncated)
    out << " (truncated: lower bound only)";
  out << "\n";
  out << "bounds [" << theorem_lower_bound(r.n) << ", " << theorem_upper_bound(r.n) << "]";
  if (auto v = theorem_value(r.n))
    out << ", closed form " << *v;
  else
    out << ", no closed form: exploratory, bound-checked only";
  out << "\n";
  const auto& f = r.flags;
  out << "checks: c^2n in I " << tri(f.upper_bound_kernel) << ", bounds "
      << (f.theorem_bounds ? "pass" : "FAIL") << ", closed form " << tri(f.theorem_exact)
      << ", monotone " << (f.monotone ? "pass" : "FAIL") << ", certificates "
      << tri(f.certificates_valid) << "\n";
  return out.str();
}

std::string render_csv(const IndexReport& r) {
  std::ostringstream out;
  out << "n,d,dimBasis,dimIdeal,cInIdeal,hind\n";
  for (const auto& rec : r.degrees)
    out << r.n << ',' << rec.d << ',' << rec.dim_basis << ',' << rec.dim_ideal << ','
        << (rec.c_in_ideal ? "true" : "false") << ',' << r.hind << "\n";
  return out.str();
}

std::optional<bool> TableRow::match() const {
  if (!theorem_exact)
    return std::nullopt;
  return hind == *theorem_exact;
}

bool IndexTable::consistent() const {
  return divisibility_monotone &&
         std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.consistent; });
}

IndexTable make_table(const std::vector<IndexReport>& reports) {
  IndexTable t;
  for (const auto& r : reports) {
    TableRow row;
    row.n = r.n;
    row.hind = r.hind;
    row.theorem_lower = theorem_lower_bound(r.n);
    row.theorem_upper = theorem_upper_bound(r.n);
    row.theorem_exact = theorem_value(r.n);
    row.exploratory = r.flags.exploratory;
    row.truncated = r.flags.truncated;
    row.consistent = r.consistent();
    t.rows.push_back(row);
  }
  // Truncated values are lower bounds only and cannot witness a violation on the larger side.
  for (const auto& big : t.rows) {
    for (const auto& small : t.rows) {
      if (small.n >= big.n || big.n % small.n != 0)
        continue;
      if (small.truncated || big.truncated)
        continue;
      if (big.hind < small.hind) {
        t.divisibility_monotone = false;
        t.violations.push_back("hind(" + std::to_string(big.n) + ") = " +
                               std::to_string(big.hind) + " < hind(" + std::to_string(small.n) +
                               ") = " + std::to_string(small.hind));
      }
    }
  }
  return t;
}

json to_json(const IndexTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    const auto m = r.match();
    rows.push_back({{"n", r.n},
                    {"hind", r.hind},
                    {"theoremLower", r.theorem_lower},
                    {"theoremUpper", r.theorem_upper},
                    {"theoremExact", r.theorem_exact ? json(*r.theorem_exact) : json(nullptr)},
                    {"match", optional_bool(m)},
                    {"exploratory", r.exploratory},
                    {"truncated", r.truncated},
                    {"consistent", r.consistent}});
  }
  return {{"schemaVersion", kReportSchemaVersion},
          {"rows", std::move(rows)},
          {"divisibilityMonotone", t.divisibility_monotone},
          {"violations", t.violations}};
}

std::string render_text(const IndexTable& t) {
  std::ostringstream out;
  out << std::setw(5) << "n" << std::setw(7) << "hind" << std::setw(8) << "lower" << std::setw(8)
      << "upper" << "  match\n";
  for (const auto& r : t.rows) {
    out << std::setw(5) << r.n << std::setw(7) << r.hind << std::setw(8) << r.theorem_lower
        << std::setw(8) << r.theorem_upper << "  ";
    if (auto m = r.match())
      out << (*m ? "yes" : "NO");
    else
      out << "exploratory";
    if (r.truncated)
      out << " (truncated)";
    if (!r.consistent)
      out << " INCONSISTENT";
    out << "\n";
  }
  out << "divisibility monotone: " << (t.divisibility_monotone ? "yes" : "NO") << "\n";
  for (const auto& v : t.violations)
    out << "  " << v << "\n";
  return out.str();
}

std::string render_csv(const IndexTable& t) {
  std::ostringstream out;
  out << "n,hind,theoremLower,theoremUpper,match\n";
  for (const auto& r : t.rows) {
    const auto m = r.match();
    out << r.n << ',' << r.hind << ',' << r.theorem_lower << ',' << r.theorem_upper << ','
        << (m ? (*m ? "true" : "false") : "") << "\n";
  }
  return out.str();
}

json relations_json(const KernelGenerators& gens, int only_degree) {
  json list = json::array();
  for (int d = 1; d <= gens.max_degree(); ++d)
    if (only_degree == 0 || d == only_degree)
      list.push_back({{"d", d}, {"relation", gens[d].to_string()}});
  return {{"schemaVersion", kReportSchemaVersion}, {"n", gens.n}, {"generators", std::move(list)}};
}

std::string relations_text(const KernelGenerators& gens, int only_degree) {
  if (only_degree != 0)
    return gens[only_degree].to_string() + "\n";
  std::string out;
  for (int d = 1; d <= gens.max_degree(); ++d)
    out += "g" + std::to_string(d) + " = " + gens[d].to_string() + "\n";
  return out;
}

json to_json(const numeric::NumericSummary& s) {
  return {{"schemaVersion", kReportSchemaVersion},
          {"n", s.n},
          {"seed", s.seed},
          {"samples", s.samples},
          {"minNorm", s.min_norm},
          {"maxNormError", s.max_norm_error},
          {"maxEquivarianceError", s.max_equivariance_error},
          {"maxBlockEquivarianceError", s.max_block_equivariance_error},
          {"maxIdempotencyError", s.max_idempotency_error},
          {"maxSymmetryError", s.max_symmetry_error},
          {"maxTraceError", s.max_trace_error},
          {"maxEigenvalueError", s.max_eigenvalue_error},
          {"pass", s.passes()}};
}

std::string render_text(const numeric::NumericSummary& s) {
  std::ostringstream out;
  out << std::setprecision(3);
  out << "n = " << s.n << ", " << s.samples << " samples, seed " << s.seed << "\n"
      << "  min |f(P)|                 " << std::setprecision(17) << s.min_norm
      << std::setprecision(3) << "\n"
      << "  max ||f(P)| - 1/2|         " << s.max_norm_error << "\n"
      << "  max |f(E-P) + f(P)|        " << s.max_equivariance_error << "\n"
      << "  max block complement err   " << s.max_block_equivariance_error << "\n"
      << "  max |P^2 - P|              " << s.max_idempotency_error << "\n"
      << "  max |P^t - P|              " << s.max_symmetry_error << "\n"
      << "  max |tr P - n|             " << s.max_trace_error << "\n"
      << "  max eigenvalue error       " << s.max_eigenvalue_error << "\n"
      << (s.passes() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace z2index
