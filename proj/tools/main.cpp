// drdlab command-line tool. Links the C API only; presentation uses CLI11
// and nlohmann/json from vendor/.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drdlab/drdlab.h"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct digraph_handle {
  drdlab_digraph* g = nullptr;
  ~digraph_handle() { drdlab_digraph_free(g); }
};

struct managed_string {
  char* s = nullptr;
  ~managed_string() { drdlab_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

int fail_with(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitError;
}

int fail_api(const std::string& context) {
  std::cerr << "error: " << context << ": " << drdlab_last_error() << "\n";
  return kExitError;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (...) {
    return false;
  }
  return true;
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("DRDLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return fallback;
}

int read_digraph(const std::string& path, digraph_handle& h) {
  if (int rc = drdlab_digraph_read_file(path.c_str(), &h.g); rc != DRDLAB_OK)
    return fail_api(path);
  return kExitTrue;
}

// ---- gen ----------------------------------------------------------------

int run_gen(const std::string& family, int n, int t, int rho, int m, const std::string& base,
            const std::string& params_csv, const std::string& out) {
  if (out.empty()) return fail_with("gen: output path required (-o)");

  if (family == "srd") {
    std::vector<int> p;
    std::string cur;
    std::stringstream ss(params_csv);
    while (std::getline(ss, cur, ',')) {
      try {
        p.push_back(std::stoi(cur));
      } catch (...) {
        return fail_with("gen: bad --params value '" + cur + "'");
      }
    }
    if (p.size() != 5) return fail_with("gen: --params must be n,k,t,lambda,mu");
    drdlab_digraph_list* list = nullptr;
    if (drdlab_find_srd(p[0], p[1], p[2], p[3], p[4], &list) != DRDLAB_OK)
      return fail_api("find_srd");
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    std::string tag = std::to_string(p[0]) + "_" + std::to_string(p[1]) + "_" +
                      std::to_string(p[2]) + "_" + std::to_string(p[3]) + "_" +
                      std::to_string(p[4]);
    int count = drdlab_digraph_list_size(list);
    std::vector<std::string> names;
    for (int i = 0; i < count; ++i) {
      std::string name = "srd_" + tag + "_" + std::to_string(i) + ".dg";
      std::string path = out + "/" + name;
      std::string comment = "srd " + params_csv + " solution " + std::to_string(i);
      if (drdlab_digraph_write_file(drdlab_digraph_list_get(list, i), path.c_str(),
                                    comment.c_str()) != DRDLAB_OK) {
        drdlab_digraph_list_free(list);
        return fail_api(path);
      }
      names.push_back(name);
    }
    drdlab_digraph_list_free(list);
    std::ofstream index(out + "/index.txt");
    if (!index) return fail_with("gen: cannot write index in " + out);
    index << "count " << count << "\n";
    for (const std::string& name : names) index << name << "\n";
    std::cout << "wrote " << count << " digraph(s) to " << out << "\n";
    return kExitTrue;
  }

  digraph_handle h;
  std::string comment;
  int rc = DRDLAB_EINVAL;
  if (family == "dcycle") {
    rc = drdlab_gen_directed_cycle(n, &h.g);
    comment = "directed cycle n=" + std::to_string(n);
  } else if (family == "ucycle") {
    rc = drdlab_gen_undirected_cycle(n, &h.g);
    comment = "undirected cycle n=" + std::to_string(n);
  } else if (family == "blockcycle") {
    rc = drdlab_gen_block_cycle(t, rho, &h.g);
    comment = "block cycle t=" + std::to_string(t) + " rho=" + std::to_string(rho);
  } else if (family == "lift") {
    digraph_handle b;
    if (base.empty()) return fail_with("gen: lift needs --base <file>");
    if (int r2 = read_digraph(base, b); r2 != kExitTrue) return r2;
    rc = drdlab_gen_damerell_lift(b.g, m, &h.g);
    comment = "lift of " + base + " m=" + std::to_string(m);
  } else if (family == "gamma") {
    rc = drdlab_gen_gamma(n, &h.g);
    comment = "gamma n=" + std::to_string(n);
  } else {
    return fail_with("gen: unknown family '" + family + "'");
  }
  if (rc != DRDLAB_OK) return fail_api("gen " + family);
  if (drdlab_digraph_write_file(h.g, out.c_str(), comment.c_str()) != DRDLAB_OK)
    return fail_api(out);
  std::cout << "wrote " << out << " (" << drdlab_digraph_order(h.g) << " vertices, "
            << drdlab_digraph_edge_count(h.g) << " edges)\n";
  return kExitTrue;
}

// ---- check ---------------------------------------------------------------

int run_check(const std::string& what, const std::string& path) {
  digraph_handle h;
  if (int rc = read_digraph(path, h); rc != kExitTrue) return rc;

  if (what == "drd" || what == "wdrd") {
    managed_string detail;
    int rc = what == "drd" ? drdlab_is_distance_regular(h.g, &detail.s)
                           : drdlab_is_weakly_distance_regular(h.g, &detail.s);
    if (rc < 0) return fail_api("check " + what);
    std::cout << (rc ? "true" : "false") << "\n";
    if (detail.s) {
      json d = json::parse(detail.str());
      if (d.contains("witness")) std::cout << "witness: " << d["witness"].dump() << "\n";
      else if (d.contains("lambda")) std::cout << "lambda: " << d["lambda"] << "\n";
    }
    return rc ? kExitTrue : kExitFalse;
  }
  if (what == "srd") {
    int p[5] = {0, 0, 0, 0, 0};
    int vac = 0;
    int rc = drdlab_srd_params(h.g, p, &vac);
    if (rc < 0) return fail_api("check srd");
    if (!rc) {
      std::cout << "false\n";
      return kExitFalse;
    }
    std::cout << "true (n,k,t,lambda,mu)=(" << p[0] << "," << p[1] << "," << p[2] << "," << p[3]
              << ",";
    if (vac) std::cout << "vacuous";
    else std::cout << p[4];
    std::cout << ")\n";
    return kExitTrue;
  }
  if (what == "normal") {
    int rc = drdlab_is_normal(h.g);
    if (rc < 0) return fail_api("check normal");
    std::cout << (rc ? "true" : "false") << "\n";
    return rc ? kExitTrue : kExitFalse;
  }
  if (what == "stable") {
    int rc = drdlab_is_stable(h.g);
    if (rc < 0) return fail_api("check stable");
    std::cout << (rc ? "true" : "false") << "\n";
    return rc ? kExitTrue : kExitFalse;
  }
  if (what == "type") {
    int is_long = 0;
    if (drdlab_drd_type(h.g, &is_long) != DRDLAB_OK) return fail_api("check type");
    std::cout << (is_long ? "long" : "short") << "\n";
    return kExitTrue;
  }
  return fail_with("check: unknown predicate '" + what + "'");
}

// ---- cut -----------------------------------------------------------------

std::string class_str(const json& c) {
  std::string s = c["tag"].get<std::string>();
  if (c.contains("vertex")) s += "(" + std::to_string(c["vertex"].get<int>()) + ")";
  if (c.contains("both") && c["both"].get<bool>()) s += "+both";
  return s;
}

int run_cut(bool vertex_mode, bool enumerate, const std::string& path) {
  digraph_handle h;
  if (int rc = read_digraph(path, h); rc != kExitTrue) return rc;

  int value = 0;
  int rc = vertex_mode ? drdlab_vertex_connectivity(h.g, &value)
                       : drdlab_edge_connectivity(h.g, &value);
  if (rc != DRDLAB_OK) return fail_api(vertex_mode ? "vertex connectivity" : "edge connectivity");
  std::cout << (vertex_mode ? "vertex" : "edge") << " connectivity: " << value << "\n";

  if (!enumerate) return kExitTrue;
  managed_string cuts_json;
  rc = vertex_mode ? drdlab_min_vertex_cuts_json(h.g, &cuts_json.s)
                   : drdlab_min_edge_cuts_json(h.g, &cuts_json.s);
  if (rc != DRDLAB_OK) return fail_api("enumerate cuts");
  json cuts = json::parse(cuts_json.str());
  std::cout << cuts.size() << " minimum cut(s)\n";
  int idx = 0;
  for (const json& c : cuts) {
    std::cout << "cut " << idx++ << ": size=" << c["size"] << " class=" << class_str(c["class"]);
    if (vertex_mode) {
      std::cout << " vertices=" << c["vertices"].dump();
    } else {
      std::cout << " edges=" << c["edges"].dump() << " sideA=" << c["side_a"].dump();
    }
    std::cout << "\n";
  }
  return kExitTrue;
}

// ---- verify ----------------------------------------------------------------

int run_verify(bool all, std::string theorem, const std::vector<std::string>& paths,
               bool default_catalog, const std::string& gamma_range, std::uint64_t seed,
               bool timings, const std::string& report, const std::string& cex_dir) {
  if (all && theorem.empty()) theorem = "all";
  if (theorem.empty()) return fail_with("verify: pass --all or --theorem <drd|srd|gamma|figure1>");

  int lo = 2, hi = 10;
  if (!gamma_range.empty() && !parse_range(gamma_range, lo, hi))
    return fail_with("verify: bad --n range '" + gamma_range + "'");

  std::vector<const char*> files;
  for (const std::string& p : paths) files.push_back(p.c_str());

  drdlab_verify_opts opts{};
  opts.theorem = theorem.c_str();
  opts.files = files.empty() ? nullptr : files.data();
  opts.n_files = static_cast<int>(files.size());
  opts.default_catalog = default_catalog ? 1 : 0;
  opts.gamma_lo = lo;
  opts.gamma_hi = hi;
  opts.seed = seed;
  opts.timings = timings ? 1 : 0;
  opts.report_path = report.empty() ? nullptr : report.c_str();
  opts.counterexample_dir = cex_dir.empty() ? nullptr : cex_dir.c_str();

  if (theorem != "gamma" && !default_catalog && files.empty())
    return fail_with("verify: no instances (pass files or --default-catalog)");

  int fails = 0;
  if (drdlab_verify(&opts, &fails) != DRDLAB_OK) return fail_api("verify");
  std::cout << "verify " << theorem << ": " << fails << " fail(s)";
  if (!report.empty()) std::cout << ", report written to " << report;
  std::cout << "\n";
  return fails == 0 ? kExitTrue : kExitFalse;
}

// ---- search ----------------------------------------------------------------

int run_search(bool conjecture, int max_n, int max_k, bool exhaustive, bool from_catalog,
               const std::string& out_dir) {
  if (!conjecture) return fail_with("search: pass --conjecture");
  if (exhaustive == from_catalog)
    return fail_with("search: pass exactly one of --exhaustive / --catalog");
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
  }
  int cex = 0;
  managed_string summary;
  if (drdlab_search_conjecture(max_n, max_k, exhaustive ? 0 : 1,
                               out_dir.empty() ? nullptr : out_dir.c_str(), &cex,
                               &summary.s) != DRDLAB_OK)
    return fail_api("search");
  json results = json::parse(summary.str());
  int consistent = 0, passes = 0;
  for (const json& r : results) {
    std::string v = r["verdict"].get<std::string>();
    if (v == "pass") ++passes;
    if (v == "consistent-with-conjecture") ++consistent;
    if (v == "fail")
      std::cout << "counterexample: " << r["instance"].get<std::string>() << " witness "
                << r["witness"].dump() << "\n";
  }
  std::cout << "checked " << results.size() << " weakly distance-regular digraph(s): " << passes
            << " pass, " << consistent << " consistent-with-conjecture, " << cex << " fail\n";
  return cex == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"drdlab: recognizers, generators, exact connectivity and claim "
               "verification for regular digraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(drdlab_version()));

  // gen
  auto* gen = app.add_subcommand("gen", "generate digraph families as edge-list files");
  std::string family, base, params_csv, out;
  int n = 0, t = 0, rho = 0, m = 2;
  gen->add_option("--family", family, "dcycle|ucycle|blockcycle|lift|gamma|srd")->required();
  gen->add_option("--n", n, "order parameter");
  gen->add_option("--t", t, "block count");
  gen->add_option("--rho", rho, "block size");
  gen->add_option("--m", m, "lift multiplicity");
  gen->add_option("--base", base, "base digraph file for lifts");
  gen->add_option("--params", params_csv, "srd parameters n,k,t,lambda,mu");
  gen->add_option("-o,--out", out, "output file (srd: output directory)")->required();

  // check
  auto* check = app.add_subcommand("check", "run a recognizer on an edge-list file");
  std::string what, check_path;
  check->add_option("--what", what, "drd|wdrd|srd|normal|stable|type")->required();
  check->add_option("path", check_path, "edge-list file")->required();

  // cut
  auto* cut = app.add_subcommand("cut", "connectivity and minimum cut analysis");
  bool cut_edge = false, cut_vertex = false, cut_enum = false, cut_classify = false;
  std::string cut_path;
  cut->add_flag("--edge", cut_edge, "edge cuts (default)");
  cut->add_flag("--vertex", cut_vertex, "vertex cuts");
  cut->add_flag("--enumerate", cut_enum, "list all minimum cuts with classifications");
  cut->add_flag("--classify", cut_classify, "classify cuts (implies --enumerate)");
  cut->add_option("path", cut_path, "edge-list file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run claim verification and write a JSON report");
  bool v_all = false, v_default = false, v_timings = false;
  std::string v_theorem, v_gamma_range, v_report, v_cex;
  std::vector<std::string> v_paths;
  std::uint64_t v_seed = seed_from_env_or(1);
  verify->add_flag("--all", v_all, "every applicable claim");
  verify->add_option("--theorem", v_theorem, "drd|srd|gamma|figure1");
  verify->add_option("paths", v_paths, "edge-list files");
  verify->add_flag("--default-catalog", v_default, "use the built-in generated catalog");
  verify->add_option("--n", v_gamma_range, "gamma range, e.g. 3..10");
  verify->add_option("--seed", v_seed, "seed for randomized balance checks");
  verify->add_flag("--timings", v_timings, "include per-claim timings in the report");
  verify->add_option("--report", v_report, "report file path");
  verify->add_option("--cex-dir", v_cex, "directory for counterexample edge lists");

  // search
  auto* search = app.add_subcommand("search", "search for conjecture counterexamples");
  bool s_conj = false, s_exhaustive = false, s_catalog = false;
  int s_max_n = 6, s_max_k = 2;
  std::string s_out;
  search->add_flag("--conjecture", s_conj, "check the minimum-cut conjecture");
  search->add_option("--max-n", s_max_n, "exhaustive bound on the order (<= 8)");
  search->add_option("--max-k", s_max_k, "exhaustive bound on the valency (<= 3)");
  search->add_flag("--exhaustive", s_exhaustive, "scan all regular digraphs in bounds");
  search->add_flag("--catalog", s_catalog, "scan the built-in catalog");
  search->add_option("--out", s_out, "directory for counterexample files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitError;
  }

  try {
    if (gen->parsed()) return run_gen(family, n, t, rho, m, base, params_csv, out);
    if (check->parsed()) return run_check(what, check_path);
    if (cut->parsed()) {
      if (cut_edge && cut_vertex) return fail_with("cut: pass at most one of --edge / --vertex");
      return run_cut(cut_vertex, cut_enum || cut_classify, cut_path);
    }
    if (verify->parsed())
      return run_verify(v_all, v_theorem, v_paths, v_default, v_gamma_range, v_seed, v_timings,
                        v_report, v_cex);
    if (search->parsed())
      return run_search(s_conj, s_max_n, s_max_k, s_exhaustive, s_catalog, s_out);
  } catch (const std::exception& e) {
    return fail_with(e.what());
  }
  return kExitError;
}
