// lpa_center: center of a Leavitt path algebra from a graph file.
//
//   lpa_center analyze FILE
//   lpa_center center FILE [--ring z|q|zmod:n] [--max-degree k] [--format text|json]
//   lpa_center verify FILE [--max-degree k] [--format text|json]
//
// Exit status: 0 success, 1 a property failed, 2 bad input.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "lpa/lpa.hpp"

namespace {

constexpr int kInputError = 2;

std::uint64_t subset_cap() {
  const char* env = std::getenv("LPA_CENTER_SUBSET_CAP");
  if (env == nullptr || *env == '\0') return lpa::kDefaultSubsetCap;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw lpa::InputError(std::string("LPA_CENTER_SUBSET_CAP must be a positive integer, got '") +
                          env + "'");
  }
}

lpa::Report center_for_ring(const lpa::Graph& g, const std::string& ring, std::int64_t k,
                            std::uint64_t cap) {
  if (ring == "z") return lpa::center_report(g, lpa::IntegerRing{}, k, cap);
  if (ring == "q") return lpa::center_report(g, lpa::RationalRing{}, k, cap);
  if (ring.rfind("zmod:", 0) == 0) {
    const std::string digits = ring.substr(5);
    std::uint64_t n = 0;
    try {
      std::size_t pos = 0;
      n = std::stoull(digits, &pos);
      if (pos != digits.size()) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
      throw lpa::InputError("unknown ring '" + ring + "'");
    }
    return lpa::center_report(g, lpa::ModularRing{n}, k, cap);
  }
  throw lpa::InputError("unknown ring '" + ring + "' (expected z, q or zmod:n)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Center of the Leavitt path algebra of a graph"};
  app.require_subcommand(1);

  std::string file;
  std::string ring = "z";
  std::string format = "text";
  std::int64_t max_degree = lpa::kDefaultDegreeCap;
  std::int64_t verify_degree = 6;

  auto* analyze = app.add_subcommand("analyze", "vertex kinds, hereditary saturated sets, cycles");
  analyze->add_option("file", file, "graph file")->required();
  analyze->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* center = app.add_subcommand("center", "graded basis of the center");
  center->add_option("file", file, "graph file")->required();
  center->add_option("--ring", ring, "z, q or zmod:n");
  center->add_option("--max-degree", max_degree, "materialize degrees 0 < |n| <= k")
      ->check(CLI::NonNegativeNumber);
  center->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run the property suite on the graph");
  verify->add_option("file", file, "graph file")->required();
  verify->add_option("--max-degree", verify_degree, "degrees checked for centrality")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    const std::uint64_t cap = subset_cap();
    const lpa::Graph g = lpa::load_graph_file(file);
    lpa::Report report;
    if (*analyze) {
      report = lpa::analyze_report(g, cap);
    } else if (*center) {
      report = center_for_ring(g, ring, max_degree, cap);
    } else {
      lpa::VerifyOptions opt;
      opt.max_degree = verify_degree;
      opt.cap = cap;
      report = lpa::verify_report(g, opt);
    }
    if (format == "json") {
      std::cout << report.json.dump(2) << "\n";
    } else {
      std::cout << report.text;
    }
    return report.exit_code;
  } catch (const lpa::CapExceeded& e) {
    std::cerr << "lpa_center: " << e.what() << " (raise LPA_CENTER_SUBSET_CAP)\n";
    return kInputError;
  } catch (const lpa::InputError& e) {
    std::cerr << "lpa_center: " << file << ": " << e.what() << "\n";
    return kInputError;
  }
}
