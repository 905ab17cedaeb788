#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <vector>

#include "drdlab/constructions.hpp"
#include "drdlab/edgelist_io.hpp"
#include "drdlab/harness.hpp"

using namespace drdlab;

TEST_CASE("catalog building") {
  catalog cat = build_catalog(catalog_spec::defaults());
  CHECK(cat.members.size() == 62);
  CHECK(cat.members.size() >= 40);

  // every member passes its generator's postconditions on admission
  for (const catalog_entry& e : cat.members) {
    CHECK(e.g.is_strongly_connected());
    CHECK(e.g.regular_degree().has_value());
  }

  CHECK(build_catalog(catalog_spec::empty()).members.empty());

  catalog_spec bad = catalog_spec::defaults();
  bad.block_t_lo = 1;
  CHECK_THROWS_AS(build_catalog(bad), error);
}

TEST_CASE("distance-regular theorem checks") {
  CHECK(verify_drd_theorem(block_cycle(4, 3), "bc").v == verdict::pass);
  CHECK(verify_drd_theorem(directed_cycle(5), "c5").v == verdict::pass);

  claim_result u8 = verify_drd_theorem(undirected_cycle(8), "u8");
  CHECK(u8.v == verdict::pass);
  CHECK(u8.note.find("undirected cycle") != std::string::npos);

  CHECK_THROWS_AS(verify_drd_theorem(gamma_n(5), "g5"), error);  // hypothesis unmet
}

TEST_CASE("strongly regular theorem checks") {
  claim_result u4 = verify_srd_theorem(undirected_cycle(4), "u4");
  CHECK(u4.v == verdict::exception_matched);
  CHECK(u4.witness["kind"] == "nontrivial-edge-cut");

  claim_result u5 = verify_srd_theorem(undirected_cycle(5), "u5");
  CHECK(u5.v == verdict::exception_matched);

  digraph srd6 = find_srd(6, 2, 1, 0, 1)[0];
  CHECK(verify_srd_theorem(srd6, "srd6").v == verdict::exception_matched);

  // the (8,3,2,1,1) digraph has only star edge cuts; the special cut is a
  // vertex cut
  digraph srd8 = find_srd(8, 3, 2, 1, 1)[0];
  CHECK(verify_srd_theorem(srd8, "srd8").v == verdict::pass);

  // exception matching is by isomorphism: a 2x2 block cycle is the
  // undirected 4-cycle in disguise
  CHECK(verify_srd_theorem(block_cycle(2, 2), "b22").v == verdict::exception_matched);

  CHECK_THROWS_AS(verify_srd_theorem(gamma_n(4), "g4"), error);
}

TEST_CASE("single-theorem sweep over the generated catalog is lenient") {
  verify_request req;
  req.theorem = "srd";
  req.default_catalog = true;
  verify_summary s = run_verify(req);
  CHECK(s.fail_count == 0);
  int vacuous = 0, matched = 0;
  for (const json& r : s.report["results"]) {
    if (r["verdict"] == "vacuous") ++vacuous;
    if (r["verdict"] == "exception-matched") ++matched;
  }
  CHECK(vacuous > 0);
  CHECK(matched == 8);
}

TEST_CASE("gamma family checks") {
  claim_result g3 = verify_gamma_family(3);
  CHECK(g3.v == verdict::pass);
  CHECK(verify_gamma_family(8).v == verdict::pass);
  CHECK(verify_gamma_family(2).v == verdict::pass);  // degenerate size still holds
  CHECK_THROWS_AS(verify_gamma_family(1), error);
  CHECK_THROWS_AS(verify_gamma_family(17), error);
}

TEST_CASE("figure-1 vertex cut checks") {
  digraph srd8 = find_srd(8, 3, 2, 1, 1)[0];
  claim_result r = verify_figure1(srd8, "srd8");
  CHECK(r.v == verdict::pass);
  CHECK_THROWS_AS(verify_figure1(undirected_cycle(5), "u5"), error);
}

TEST_CASE("conjecture search over the catalog") {
  catalog cat = build_catalog(catalog_spec::defaults());
  conjecture_options opts;
  opts.source = search_source::from_catalog;
  opts.members = &cat;
  std::vector<claim_result> results = search_conjecture(opts);
  CHECK(results.size() > 40);  // every catalog member is a WDRD
  int fails = 0;
  for (const claim_result& r : results) {
    if (r.failed()) ++fails;
    if (r.v == verdict::consistent_with_conjecture) {
      CHECK(r.witness["kind"] == "nontrivial-edge-cut");
      CHECK_FALSE(r.note.empty());
    }
  }
  CHECK(fails == 0);
}

TEST_CASE("exhaustive conjecture search") {
  conjecture_options opts;
  opts.max_n = 5;
  opts.max_k = 2;
  std::vector<claim_result> results = search_conjecture(opts);
  int fails = 0, passes = 0, consistent = 0;
  for (const claim_result& r : results) {
    if (r.failed()) ++fails;
    if (r.v == verdict::pass) ++passes;
    if (r.v == verdict::consistent_with_conjecture) ++consistent;
  }
  CHECK(fails == 0);
  // directed cycles n=2..5 pass with k=1; weakly distance-regular 2-regular
  // digraphs on <= 5 vertices: the undirected 4- and 5-cycles carry
  // non-trivial cuts under the valency guard
  CHECK(passes == 5);
  CHECK(consistent == 2);

  // deterministic across runs
  std::vector<claim_result> again = search_conjecture(opts);
  REQUIRE(results.size() == again.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].instance == again[i].instance);
    CHECK(results[i].v == again[i].v);
  }

  conjecture_options bad;
  bad.max_n = 20;
  CHECK_THROWS_AS(search_conjecture(bad), error);
}

TEST_CASE("full run over the default catalog") {
  catalog cat = build_catalog(catalog_spec::defaults());
  run_options opts;
  opts.seed = 1;
  run_report rep = run_all(cat, opts);
  CHECK(rep.fail_count == 0);
  CHECK(rep.results.size() == 272);

  // byte-identical reports for a fixed seed
  std::string a = report_to_json(cat, rep, opts).dump(2);
  std::string b = report_to_json(cat, run_all(cat, opts), opts).dump(2);
  CHECK(a == b);

  // empty catalog: empty report, success
  run_report none = run_all(catalog{}, opts);
  CHECK(none.fail_count == 0);
  CHECK(none.results.empty());
}

TEST_CASE("corrupted instance fails with a replayable witness") {
  digraph bc = block_cycle(3, 2);
  std::vector<edge> edges;
  for (const edge& e : bc.edges())
    if (!(e == edge{0, 2})) edges.push_back(e);
  edges.push_back({0, 4});  // redirect 0->2 to 0->4
  digraph mutant = digraph::from_edges(6, edges);

  std::string path = "test_harness_mutant.dg";
  write_edge_list_file(mutant, path);

  verify_request req;
  req.theorem = "drd";
  req.files = {path};
  verify_summary s = run_verify(req);
  CHECK(s.fail_count == 1);
  const json& witness = s.report["results"][0]["witness"];
  CHECK(replay_witness(mutant, witness));
  std::remove(path.c_str());
}

TEST_CASE("witness replay across kinds") {
  digraph g5 = gamma_n(5);
  // a genuine non-trivial minimum cut replays
  json cut_w = {{"kind", "nontrivial-edge-cut"}, {"edges", json::array({{0, 1}, {5, 9}})}};
  CHECK(replay_witness(g5, cut_w));
  // a star cut does not
  json star_w = {{"kind", "nontrivial-edge-cut"}, {"edges", json::array({{0, 1}, {0, 5}})}};
  CHECK_FALSE(replay_witness(g5, star_w));

  // block cycles have no non-trivial minimum cut
  CHECK(replay_witness(block_cycle(3, 2), json{{"kind", "missing-nontrivial-cut"}}));
  CHECK_FALSE(replay_witness(g5, json{{"kind", "missing-nontrivial-cut"}}));

  // the weak-regularity violation of the n=5 scan instance replays
  digraph bad = digraph::from_edges(
      5, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 3}, {2, 4}, {3, 0}, {3, 4}, {4, 1}, {4, 3}});
  weak_regularity_result wr = weak_regularity(bad);
  REQUIRE_FALSE(wr.ok);
  json walk_w = {{"kind", "not-wdrd"},       {"u", wr.witness->u},
                 {"v", wr.witness->v},       {"ell", wr.witness->index},
                 {"expected", wr.witness->expected}, {"actual", wr.witness->actual}};
  CHECK(replay_witness(bad, walk_w));

  // the intersection-constancy violation of gamma_4 replays
  digraph g4 = gamma_n(4);
  intersection_result ir = intersection_numbers(g4);
  REQUIRE_FALSE(ir.ok());
  json ivio = {{"kind", "intersection-violation"}, {"u", ir.witness->u},
               {"v", ir.witness->v},               {"i", ir.witness->index},
               {"expected", ir.witness->expected}, {"actual", ir.witness->actual}};
  CHECK(replay_witness(g4, ivio));

  // connectivity mismatches replay only when the recorded value is real
  digraph srd8 = find_srd(8, 3, 2, 1, 1)[0];
  CHECK(replay_witness(srd8, json{{"kind", "vertex-connectivity-mismatch"},
                                  {"expected", 3},
                                  {"actual", 2}}));
  CHECK_FALSE(replay_witness(srd8, json{{"kind", "vertex-connectivity-mismatch"},
                                        {"expected", 3},
                                        {"actual", 1}}));

  CHECK_FALSE(replay_witness(g5, json{{"kind", "unknown"}}));
  CHECK_FALSE(replay_witness(g5, json::array()));
}

TEST_CASE("report schema") {
  catalog_spec spec = catalog_spec::empty();
  spec.dcycle_lo = 3;
  spec.dcycle_hi = 5;
  catalog cat = build_catalog(spec);
  run_options opts;
  opts.seed = 42;
  run_report rep = run_all(cat, opts);
  json doc = report_to_json(cat, rep, opts);

  CHECK(doc["version"] == "0.1.0");
  CHECK(doc["seed"] == 42);
  REQUIRE(doc["catalog"].is_array());
  CHECK(doc["catalog"].size() == 3);
  for (const json& m : doc["catalog"]) {
    CHECK(m.contains("name"));
    CHECK(m.contains("params"));
    CHECK(m.contains("file"));
    CHECK(m.contains("hash"));
  }
  for (const json& r : doc["results"]) {
    CHECK(r.contains("claim"));
    CHECK(r.contains("instance"));
    CHECK(r.contains("verdict"));
    CHECK_FALSE(r.contains("timing_ms"));  // timings disabled by default
  }

  run_options timed = opts;
  timed.timings = true;
  json doc2 = report_to_json(cat, run_all(cat, timed), timed);
  for (const json& r : doc2["results"]) CHECK(r.contains("timing_ms"));
}

TEST_CASE("gamma range verification") {
  verify_request req;
  req.theorem = "gamma";
  req.gamma_lo = 3;
  req.gamma_hi = 6;
  verify_summary s = run_verify(req);
  CHECK(s.fail_count == 0);
  CHECK(s.report["results"].size() == 4);
  CHECK_THROWS_AS(run_verify(verify_request{"gamma", {}, false, 1, 20, 1, false, "", ""}), error);
}
