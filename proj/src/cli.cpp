#include "z2index/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <new>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "z2index/kernel_ideal.hpp"
#include "z2index/numeric.hpp"
#include "z2index/report.hpp"

namespace z2index::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (used != s.size())
    throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Writes to --output when given, else to out.
int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.output.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << cfg.output << "\n";
    return kResource;
  }
  file << text;
  if (!file) {
    err << "error: failed writing " << cfg.output << "\n";
    return kResource;
  }
  return kSuccess;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_index(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = cfg.ns.front();
  if (cfg.cap && (*cfg.cap < 1 || *cfg.cap > 2 * n))
    throw UsageError("--cap must lie in [1, 2n]");
  IndexOptions opts;
  opts.cap = cfg.cap;
  opts.threads = cfg.threads;
  opts.certificates = cfg.certificates;
  const auto report = compute_index(n, opts);
  std::string text;
  switch (cfg.format) {
    case Format::Json: text = dump_json(to_json(report)); break;
    case Format::Csv: text = render_csv(report); break;
    case Format::Text: text = render_text(report); break;
  }
  if (int rc = emit(cfg, text, out, err); rc != kSuccess)
    return rc;
  try {
    require_consistent(report);
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n" << e.diagnostic();
    return kInconsistent;
  }
  return kSuccess;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<IndexReport> reports;
  for (int n : cfg.ns) {
    IndexOptions opts;
    if (cfg.cap)
      opts.cap = std::min(*cfg.cap, 2 * n);
    opts.threads = cfg.threads;
    reports.push_back(compute_index(n, opts));
  }
  const auto table = make_table(reports);
  std::string text;
  switch (cfg.format) {
    case Format::Json: text = dump_json(to_json(table)); break;
    case Format::Csv: text = render_csv(table); break;
    case Format::Text: text = render_text(table); break;
  }
  if (int rc = emit(cfg, text, out, err); rc != kSuccess)
    return rc;
  if (!table.consistent()) {
    err << "error: table contradicts a proven bound\n";
    for (const auto& r : reports) {
      try {
        require_consistent(r);
      } catch (const ConsistencyError& e) {
        err << e.diagnostic();
      }
    }
    for (const auto& v : table.violations)
      err << "  divisibility: " << v << "\n";
    return kInconsistent;
  }
  return kSuccess;
}

int cmd_relations(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = cfg.ns.front();
  if (cfg.degree < 0 || cfg.degree > 2 * n)
    throw UsageError("--degree must lie in [1, 2n]");
  const auto gens = kernel_generators(n);
  std::string text;
  switch (cfg.format) {
    case Format::Json: text = dump_json(relations_json(gens, cfg.degree)); break;
    case Format::Csv: throw UsageError("relations supports text and json only");
    case Format::Text: text = relations_text(gens, cfg.degree); break;
  }
  return emit(cfg, text, out, err);
}

int cmd_verify_numeric(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.samples == 0)
    throw UsageError("--samples must be positive");
  const auto summary = numeric::verify_numeric(cfg.ns.front(), cfg.samples, cfg.seed, cfg.threads);
  std::string text;
  switch (cfg.format) {
    case Format::Json: text = dump_json(to_json(summary)); break;
    case Format::Csv: throw UsageError("verify-numeric supports text and json only");
    case Format::Text: text = render_text(summary); break;
  }
  if (int rc = emit(cfg, text, out, err); rc != kSuccess)
    return rc;
  if (!summary.passes()) {
    err << "error: numeric tolerance breached\n";
    return kInconsistent;
  }
  return kSuccess;
}

}  // namespace

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw std::invalid_argument("empty item in n-list");
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const int a = parse_int(trim(item.substr(0, dots)));
      const int b = parse_int(trim(item.substr(dots + 2)));
      if (a > b)
        throw std::invalid_argument("descending range " + item);
      for (int k = a; k <= b; ++k)
        out.push_back(k);
    } else {
      out.push_back(parse_int(item));
    }
  }
  if (out.empty())
    throw std::invalid_argument("n-list is empty");
  for (int k : out)
    if (k < 1)
      throw std::invalid_argument("n must be at least 1");
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("Z2INDEX_THREADS"); env != nullptr && *env != '\0') {
    const int v = parse_int(env);
    if (v < 1)
      throw std::invalid_argument("Z2INDEX_THREADS must be at least 1");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological Z2-index of the Grassmannian G(2n, n) under orthogonal complement"};
  app.require_subcommand(1);

  RunConfig cfg;
  int n = 0;
  std::string n_list;
  std::string format;
  std::optional<int> cap;
  std::optional<unsigned> threads;

  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", threads, "Worker count (default: $Z2INDEX_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output,-o", cfg.output, "Write output to this file");
  };

  auto* index = app.add_subcommand("index", "Compute hind for one n");
  index->add_option("--n", n, "Half dimension")->required()->check(CLI::PositiveNumber);
  index->add_option("--cap", cap, "Degree cap below 2n (result becomes a lower bound)");
  index->add_flag("--certificates", cfg.certificates, "Emit non-membership witnesses");
  add_common(index);

  auto* table = app.add_subcommand("table", "Compute hind for a list of n");
  table->add_option("--n-list", n_list, "e.g. 1..8 or 2,4,8")->required();
  table->add_option("--cap", cap, "Degree cap (clamped to 2n per entry)");
  add_common(table);

  auto* relations = app.add_subcommand("relations", "Dump the kernel generators g_1..g_2n");
  relations->add_option("--n", n, "Half dimension")->required()->check(CLI::PositiveNumber);
  relations->add_option("--degree", cfg.degree, "Only this degree");
  add_common(relations);

  auto* numeric_cmd = app.add_subcommand("verify-numeric", "Check the equivariant maps numerically");
  numeric_cmd->add_option("--n", n, "Half dimension")->required()->check(CLI::PositiveNumber);
  numeric_cmd->add_option("--samples", cfg.samples, "Number of random projections");
  numeric_cmd->add_option("--seed", cfg.seed, "RNG seed");
  add_common(numeric_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kUsage;
  }

  try {
    cfg.threads = threads ? *threads : default_threads();
    if (table->parsed()) {
      cfg.command = "table";
      cfg.ns = parse_n_list(n_list);
    } else {
      cfg.command = index->parsed() ? "index" : relations->parsed() ? "relations" : "verify-numeric";
      cfg.ns = {n};
    }
    cfg.cap = cap;
    if (!format.empty())
      cfg.format = formats.at(format);
    else if (cfg.command == "verify-numeric")
      cfg.format = Format::Json;
    for (int k : cfg.ns)
      if (k > kMaxGenerators)
        throw UsageError("n above " + std::to_string(kMaxGenerators) + " is not supported");

    if (cfg.command == "index")
      return cmd_index(cfg, out, err);
    if (cfg.command == "table")
      return cmd_table(cfg, out, err);
    if (cfg.command == "relations")
      return cmd_relations(cfg, out, err);
    return cmd_verify_numeric(cfg, out, err);
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n" << e.diagnostic();
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInconsistent;
  }
}

}  // namespace z2index::cli
