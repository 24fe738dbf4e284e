// gradedlc: multigraded local cohomology of c-monomial ideals.

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradedlc/cech.hpp"
#include "gradedlc/expr.hpp"
#include "gradedlc/io.hpp"
#include "gradedlc/rigidity.hpp"
#include "gradedlc/structure.hpp"
#include "gradedlc/suites.hpp"

using namespace gradedlc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json envelope(const std::string& command, const std::string& hash, json results, const std::vector<CheckReport>& checks) {
  json c = json::array();
  for (const auto& r : checks) c.push_back(to_json(r));
  return {{"command", command}, {"ideal_hash", hash}, {"results", std::move(results)}, {"checks", c},
          {"timestamp", timestamp_utc()}};
}

bool all_pass(const std::vector<CheckReport>& checks) {
  for (const auto& c : checks)
    if (c.applicable && !c.passed) return false;
  return true;
}

YWindow parse_window(const std::string& text) {
  const MultiDegree w = parse_degree(text);
  if (w.size() != 2) throw InputError("--window takes two Y-degrees lo,hi");
  YWindow out{w[0], w[1]};
  try {
    out.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return out;
}

struct Common {
  std::string format = "text";
};

int cmd_dims(const std::string& command, const std::string& path, std::size_t i, const std::string& degree,
             const Common& common) {
  const CMonomialIdeal ideal = read_ideal_file(path);
  const MultiDegree u = parse_degree(degree);
  const CohomologyReport rep = cohomology(ideal, i, u);
  if (common.format == "json") {
    json results = {{"i", i}, {"u", to_json(u)}, {"dim", rep.dim}, {"basis_size", rep.representatives.cols()}};
    std::cout << envelope(command, ideal_hash(ideal), results, {}).dump(2) << '\n';
  } else {
    std::cout << "dim = " << rep.dim << '\n' << "basis size = " << rep.representatives.cols() << '\n';
  }
  return kExitOk;
}

int cmd_blocks(const std::string& command, const std::string& path, std::size_t i, std::int64_t radius,
               const Common& common) {
  const CMonomialIdeal ideal = read_ideal_file(path);
  const BlockTable table = block_table(ideal, i, radius);
  CheckReport check{"block-rigidity", table.consistent(), table.sample_log.size(),
                    table.consistent() ? "all samples match their corners"
                                       : "first mismatch at " + table.mismatches.front().to_string()};
  if (common.format == "json")
    std::cout << envelope(command, ideal_hash(ideal), to_json(table), {check}).dump(2) << '\n';
  else
    std::cout << to_text(table);
  return check.passed ? kExitOk : kExitCheckFailed;
}

int cmd_structure(const std::string& command, const std::string& path, std::size_t i, const std::string& degree,
                  const YWindow& window, const Common& common) {
  const CMonomialIdeal ideal = read_ideal_file(path);
  if (!ideal.has_y()) throw InputError("structure needs an ideal with base \"graded_pid\"");
  DegreeCache cache(ideal);
  std::vector<BlockStructure> blocks;
  if (degree.empty()) {
    blocks = structure_blocks(cache, i, window);
  } else {
    const MultiDegree u = parse_degree(degree);
    if (u.size() != ideal.d()) throw InputError("--degree takes the " + std::to_string(ideal.d()) + " X-coordinates");
    YProfile profile = y_profile(cache, i, u, window);
    const StructureTriple t = structure_triple(profile);
    SignPattern p = block_of(u);
    p.corner = u;  // report the requested degree itself
    blocks.push_back({std::move(p), std::move(profile), t, bass_table(t)});
  }
  std::vector<CheckReport> checks;
  for (const auto& b : blocks) {
    CheckReport c{"injdim<=dim_supp " + b.pattern.corner.to_string(), b.bass.injdim_bounded(), 1,
                  "triple " + b.triple.to_string()};
    checks.push_back(c);
  }
  if (common.format == "json") {
    json results = json::array();
    for (const auto& b : blocks) results.push_back(to_json(b));
    std::cout << envelope(command, ideal_hash(ideal), {{"ideal", ideal.to_string()}, {"i", i}, {"blocks", results}}, checks)
                     .dump(2)
              << '\n';
  } else if (common.format == "csv") {
    std::cout << structure_csv(blocks);
  } else {
    std::cout << "H^" << i << " of " << ideal.to_string() << '\n' << structure_text(blocks);
  }
  return all_pass(checks) ? kExitOk : kExitCheckFailed;
}

std::vector<CheckReport> run_suite(const std::string& suite, const CMonomialIdeal& ideal, const SuiteOptions& opts) {
  if (suite == "rigidity") return {rigidity_suite(ideal, opts)};
  if (suite == "straight") return {straightness_suite(ideal, opts)};
  if (suite == "eulerian") return {eulerian_suite(ideal, opts)};
  if (suite == "multiplicity") return {multiplicity_suite(ideal, opts)};
  if (suite == "structure") return structure_suite(ideal, opts);
  throw InputError("unknown suite " + suite);
}

int cmd_verify(const std::string& command, const std::string& path, const std::vector<std::uint64_t>& corpus,
               const std::string& suite, const SuiteOptions& opts, const Common& common) {
  std::vector<CheckReport> checks;
  json results = json::array();
  std::string hash;
  if (suite == "weyl") {
    checks = weyl_suite(opts);
    results.push_back({{"suite", "weyl"}, {"seed", opts.seed}, {"instances", opts.weyl_instances}});
  } else {
    std::vector<CMonomialIdeal> ideals;
    if (!path.empty()) {
      ideals.push_back(read_ideal_file(path));
      hash = ideal_hash(ideals.front());
    } else if (corpus.size() == 2) {
      ideals = generate_corpus(corpus[0], corpus[1]);
    } else {
      throw InputError("verify needs an ideal file or --corpus SEED N");
    }
    std::vector<std::vector<CheckReport>> per_ideal(ideals.size());
    parallel_for(ideals.size(), opts.jobs, [&](std::size_t k) { per_ideal[k] = run_suite(suite, ideals[k], opts); });
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      json rs = json::array();
      for (auto r : per_ideal[k]) {
        rs.push_back(to_json(r));
        r.name = (r.name == suite ? r.name : suite + "/" + r.name) + " " + ideals[k].to_string();
        checks.push_back(r);
      }
      results.push_back({{"ideal", to_json(ideals[k])}, {"hash", ideal_hash(ideals[k])}, {"checks", rs}});
    }
  }
  const bool ok = all_pass(checks);
  if (common.format == "json") {
    std::cout << envelope(command, hash, results, checks).dump(2) << '\n';
  } else {
    for (const auto& c : checks) std::cout << '[' << c.status() << "] " << c.name << ": " << c.witness << '\n';
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_weyl_nf(const std::string& expression) {
  std::cout << to_string(parse_weyl(expression)) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multigraded local cohomology of c-monomial ideals"};
  app.require_subcommand(1);

  std::string command;
  for (int k = 0; k < argc; ++k) command += (k ? " " : "") + std::string(argv[k]);

  Common common;
  std::string ideal_path, degree, window_text = "-2,1", suite, expression;
  std::size_t index = 0;
  std::int64_t radius = 6;
  bool all_blocks = false;
  std::vector<std::uint64_t> corpus;
  SuiteOptions opts;
  opts.jobs = default_jobs();
  const std::vector<std::string> formats = {"text", "json", "csv"};

  auto* dims = app.add_subcommand("dims", "dimension of H^i at one degree");
  dims->add_option("ideal", ideal_path, "ideal JSON file")->required();
  dims->add_option("-i,--index", index, "cohomological index")->required();
  dims->add_option("-u,--degree", degree, "degree, comma separated (Y-degree first over graded_pid)")->required();
  dims->add_option("--format", common.format)->check(CLI::IsMember({"text", "json"}));

  auto* blocks = app.add_subcommand("blocks", "block table of H^i with sampled verification");
  blocks->add_option("ideal", ideal_path, "ideal JSON file")->required();
  blocks->add_option("-i,--index", index, "cohomological index")->required();
  blocks->add_option("--radius", radius, "sample radius")->check(CLI::NonNegativeNumber);
  blocks->add_option("--format", common.format)->check(CLI::IsMember({"text", "json"}));

  auto* structure = app.add_subcommand("structure", "E^s + Q^v + A^r decomposition of components over K[Y]");
  structure->add_option("ideal", ideal_path, "ideal JSON file")->required();
  structure->add_option("-i,--index", index, "cohomological index")->required();
  auto* blocks_flag = structure->add_flag("--blocks", all_blocks, "one row per X-block (default)");
  structure->add_option("-u,--degree", degree, "single X-degree")->excludes(blocks_flag);
  structure->add_option("--window", window_text, "Y-degrees lo,hi to sample");
  structure->add_option("--format", common.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("ideal", ideal_path, "ideal JSON file");
  verify->add_option("--corpus", corpus, "SEED N: generate N random ideals")->expected(2);
  verify->add_option("--suite", suite, "suite to run")
      ->required()
      ->check(CLI::IsMember({"rigidity", "straight", "eulerian", "weyl", "structure", "multiplicity"}));
  verify->add_option("--radius", opts.radius, "sample radius")->check(CLI::NonNegativeNumber);
  verify->add_option("--witness-radius", opts.witness_radius, "radius for chain-map witnesses")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--window", window_text, "Y-degrees lo,hi to sample");
  verify->add_option("--seed", opts.seed, "seed for randomized Weyl instances");
  verify->add_option("--instances", opts.weyl_instances, "Weyl instances per identity");
  verify->add_option("--jobs", opts.jobs, "worker threads (default $GRADEDLC_JOBS or 1)")->check(CLI::PositiveNumber);
  verify->add_option("--format", common.format)->check(CLI::IsMember({"text", "json"}));

  auto* weyl = app.add_subcommand("weyl-nf", "normal form of an operator expression");
  weyl->add_option("expression", expression, "e.g. \"D1^2*X1^2\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*dims) return cmd_dims(command, ideal_path, index, degree, common);
    if (*blocks) return cmd_blocks(command, ideal_path, index, radius, common);
    if (*structure) return cmd_structure(command, ideal_path, index, degree, parse_window(window_text), common);
    if (*verify) {
      opts.window = parse_window(window_text);
      return cmd_verify(command, ideal_path, corpus, suite, opts, common);
    }
    if (*weyl) return cmd_weyl_nf(expression);
  } catch (const StabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
