#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "drdlab/connectivity.hpp"
#include "drdlab/digraph.hpp"
#include "drdlab/regularity.hpp"

namespace drdlab {

using json = nlohmann::ordered_json;

enum class verdict { pass, fail, vacuous, exception_matched, consistent_with_conjecture };

std::string to_string(verdict v);

struct claim_result {
  std::string claim;     // e.g. "thm-2.4-edge"
  std::string instance;  // generator descriptor or file path
  verdict v = verdict::vacuous;
  json witness;  // machine-checkable data on fail / exception-matched
  std::string note;
  double timing_ms = 0.0;
  bool failed() const { return v == verdict::fail; }
};

struct catalog_entry {
  std::string name;    // e.g. "blockcycle-3x2"
  std::string params;  // e.g. "t=3,rho=2"
  digraph g;
  std::string file;  // source path when loaded from disk, empty when generated
};

struct catalog {
  std::vector<catalog_entry> members;
};

/// Inclusive ranges per family; a lo > hi range selects nothing.
struct catalog_spec {
  int dcycle_lo = 0, dcycle_hi = -1;
  int ucycle_lo = 0, ucycle_hi = -1;
  int block_t_lo = 0, block_t_hi = -1;
  int block_rho_lo = 0, block_rho_hi = -1;
  int lift_base_lo = 0, lift_base_hi = -1;  // directed-cycle bases
  int lift_m_lo = 0, lift_m_hi = -1;
  int gamma_lo = 0, gamma_hi = -1;
  std::vector<std::array<int, 5>> srd_params_list;

  static catalog_spec defaults();
  static catalog_spec empty() { return {}; }
};

catalog build_catalog(const catalog_spec& spec);

/// Theorem on distance-regular digraphs: edge connectivity equals the valency
/// and, away from undirected cycles, every minimum edge cut is a star.
claim_result verify_drd_theorem(const digraph& g, const std::string& instance);

/// Theorem on strongly regular digraphs: same statement, with the undirected
/// 4- and 5-cycles and the (6,2,1,0,1) digraph as genuine exceptions.
claim_result verify_srd_theorem(const digraph& g, const std::string& instance);

/// The 2-regular two-cycles-with-rungs family: weakly distance-regular with
/// diameter floor(n/2)+1, edge connectivity 2, and a non-trivial minimum cut.
claim_result verify_gamma_family(int n);

/// The (8,3,2,1,1) digraph: vertex connectivity 2 < 3 with a minimum vertex
/// cut that is no vertex's neighborhood.
claim_result verify_figure1(const digraph& g, const std::string& instance);

enum class search_source { exhaustive, from_catalog };

struct conjecture_options {
  int max_n = 6;
  int max_k = 2;
  search_source source = search_source::exhaustive;
  const catalog* members = nullptr;      // for from_catalog
  std::string counterexample_dir;        // edge-list files for fails, when nonempty
};

/// Checks every weakly distance-regular digraph found: edge connectivity must
/// equal the valency, and for valency > 2 all minimum edge cuts must be stars.
/// Valency <= 2 instances with non-trivial cuts report consistent-with-conjecture.
std::vector<claim_result> search_conjecture(const conjecture_options& opts);

struct run_options {
  std::uint64_t seed = 1;
  bool timings = false;
  int balance_samples = 1000;
  std::string counterexample_dir;
};

struct run_report {
  std::vector<claim_result> results;
  int fail_count = 0;
};

/// Runs every applicable claim on every catalog member, plus the randomized
/// cut-balance check, the regularity cross-validation, and lift round trips.
run_report run_all(const catalog& cat, const run_options& opts);

json report_to_json(const catalog& cat, const run_report& rep, const run_options& opts);

/// Re-runs the check a fail witness describes; true when the failure reproduces.
bool replay_witness(const digraph& g, const json& witness);

struct verify_request {
  std::string theorem = "all";  // all | drd | srd | gamma | figure1
  std::vector<std::string> files;
  bool default_catalog = false;
  int gamma_lo = 2, gamma_hi = 10;
  std::uint64_t seed = 1;
  bool timings = false;
  std::string report_path;
  std::string counterexample_dir;
};

struct verify_summary {
  int fail_count = 0;
  json report;
};

/// CLI-facing orchestration: builds the instance set, runs the requested
/// claims (strict hypothesis checking for explicit files), writes the report.
verify_summary run_verify(const verify_request& req);

}  // namespace drdlab
