#include "drdlab/drdlab.h"

#include <cstring>
#include <string>
#include <vector>

#include "drdlab/connectivity.hpp"
#include "drdlab/constructions.hpp"
#include "drdlab/digraph.hpp"
#include "drdlab/edgelist_io.hpp"
#include "drdlab/harness.hpp"
#include "drdlab/regularity.hpp"
#include "drdlab/version.hpp"

using drdlab::json;

struct drdlab_digraph {
  drdlab::digraph g;
};

struct drdlab_digraph_list {
  std::vector<drdlab_digraph> items;
};

namespace {

thread_local std::string tl_last_error;

int status_of(const drdlab::error& e) {
  switch (e.code()) {
    case drdlab::errc::invalid_argument: return DRDLAB_EINVAL;
    case drdlab::errc::precondition: return DRDLAB_EPRECOND;
    case drdlab::errc::not_strongly_connected: return DRDLAB_EDISCONN;
    case drdlab::errc::range: return DRDLAB_ERANGE;
    case drdlab::errc::io: return DRDLAB_EIO;
    case drdlab::errc::parse: return DRDLAB_EPARSE;
    case drdlab::errc::consistency: return DRDLAB_EINTERNAL;
  }
  return DRDLAB_EINTERNAL;
}

template <class F>
int guarded(F&& fn) {
  try {
    return fn();
  } catch (const drdlab::error& e) {
    tl_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    tl_last_error = e.what();
    return DRDLAB_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json cut_class_json(const drdlab::cut_class& c) {
  json j;
  switch (c.tag) {
    case drdlab::cut_tag::out_star: j["tag"] = "out-star"; break;
    case drdlab::cut_tag::in_star: j["tag"] = "in-star"; break;
    case drdlab::cut_tag::out_neighborhood: j["tag"] = "out-neighborhood"; break;
    case drdlab::cut_tag::in_neighborhood: j["tag"] = "in-neighborhood"; break;
    case drdlab::cut_tag::non_trivial: j["tag"] = "non-trivial"; break;
  }
  if (c.vertex >= 0) j["vertex"] = c.vertex;
  if (c.both) j["both"] = true;
  return j;
}

}  // namespace

extern "C" {

const char* drdlab_version(void) { return drdlab::k_version; }

const char* drdlab_last_error(void) { return tl_last_error.c_str(); }

void drdlab_string_free(char* s) { std::free(s); }

int drdlab_digraph_from_edges(int n, const int* pairs, int m, drdlab_digraph** out) {
  return guarded([&] {
    drdlab::require(out && (pairs || m == 0), drdlab::errc::invalid_argument, "null argument");
    std::vector<drdlab::edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
    *out = new drdlab_digraph{drdlab::digraph::from_edges(n, edges)};
    return DRDLAB_OK;
  });
}

void drdlab_digraph_free(drdlab_digraph* g) { delete g; }

int drdlab_digraph_read_file(const char* path, drdlab_digraph** out) {
  return guarded([&] {
    drdlab::require(path && out, drdlab::errc::invalid_argument, "null argument");
    *out = new drdlab_digraph{drdlab::read_edge_list_file(path)};
    return DRDLAB_OK;
  });
}

int drdlab_digraph_write_file(const drdlab_digraph* g, const char* path, const char* comment) {
  return guarded([&] {
    drdlab::require(g && path, drdlab::errc::invalid_argument, "null argument");
    drdlab::write_edge_list_file(g->g, path, comment ? comment : "");
    return DRDLAB_OK;
  });
}

int drdlab_digraph_order(const drdlab_digraph* g) { return g ? g->g.order() : DRDLAB_EINVAL; }

int drdlab_digraph_edge_count(const drdlab_digraph* g) {
  return g ? g->g.edge_count() : DRDLAB_EINVAL;
}

int drdlab_digraph_has_edge(const drdlab_digraph* g, int u, int v) {
  return guarded([&] {
    drdlab::require(g, drdlab::errc::invalid_argument, "null digraph");
    drdlab::require(u >= 0 && u < g->g.order() && v >= 0 && v < g->g.order(),
                    drdlab::errc::invalid_argument, "vertex out of range");
    return g->g.has_edge(u, v) ? 1 : 0;
  });
}

int drdlab_digraph_regular_degree(const drdlab_digraph* g, int* k) {
  return guarded([&] {
    drdlab::require(g && k, drdlab::errc::invalid_argument, "null argument");
    auto d = g->g.regular_degree();
    if (!d) return 0;
    *k = *d;
    return 1;
  });
}

int drdlab_digraph_is_strongly_connected(const drdlab_digraph* g) {
  return g ? (g->g.is_strongly_connected() ? 1 : 0) : DRDLAB_EINVAL;
}

int drdlab_digraph_is_undirected(const drdlab_digraph* g) {
  return g ? (g->g.is_undirected() ? 1 : 0) : DRDLAB_EINVAL;
}

int drdlab_digraph_diameter(const drdlab_digraph* g, int* out) {
  return guarded([&] {
    drdlab::require(g && out, drdlab::errc::invalid_argument, "null argument");
    *out = g->g.diameter();
    return DRDLAB_OK;
  });
}

int drdlab_digraph_girth(const drdlab_digraph* g, int* out) {
  return guarded([&] {
    drdlab::require(g && out, drdlab::errc::invalid_argument, "null argument");
    *out = g->g.girth();
    return DRDLAB_OK;
  });
}

int drdlab_gen_directed_cycle(int n, drdlab_digraph** out) {
  return guarded([&] {
    drdlab::require(out, drdlab::errc::invalid_argument, "null output");
    *out = new drdlab_digraph{drdlab::directed_cycle(n)};
    return DRDLAB_OK;
  });
}

int drdlab_gen_undirected_cycle(int n, drdlab_digraph** out) {
  return guarded([&] {
    drdlab::require(out, drdlab::errc::invalid_argument, "null output");
    *out = new drdlab_digraph{drdlab::undirected_cycle(n)};
    return DRDLAB_OK;
  });
}

int drdlab_gen_block_cycle(int t, int rho, drdlab_digraph** out) {
  return guarded([&] {
    drdlab::require(out, drdlab::errc::invalid_argument, "null output");
    *out = new drdlab_digraph{drdlab::block_cycle(t, rho)};
    return DRDLAB_OK;
  });
}

int drdlab_gen_damerell_lift(const drdlab_digraph* base, int m, drdlab_digraph** out) {
  return guarded([&] {
    drdlab::require(base && out, drdlab::errc::invalid_argument, "null argument");
    *out = new drdlab_digraph{drdlab::damerell_lift(base->g, m)};
    return DRDLAB_OK;
  });
}

int drdlab_gen_antipodal_quotient(const drdlab_digraph* g, drdlab_digraph** out) {
  return guarded([&] {
    drdlab::require(g && out, drdlab::errc::invalid_argument, "null argument");
    *out = new drdlab_digraph{drdlab::antipodal_quotient(g->g)};
    return DRDLAB_OK;
  });
}

int drdlab_gen_gamma(int n, drdlab_digraph** out) {
  return guarded([&] {
    drdlab::require(out, drdlab::errc::invalid_argument, "null output");
    *out = new drdlab_digraph{drdlab::gamma_n(n)};
    return DRDLAB_OK;
  });
}

int drdlab_find_srd(int n, int k, int t, int lambda, int mu, drdlab_digraph_list** out) {
  return guarded([&] {
    drdlab::require(out, drdlab::errc::invalid_argument, "null output");
    std::vector<drdlab::digraph> found = drdlab::find_srd(n, k, t, lambda, mu);
    auto list = new drdlab_digraph_list{};
    for (drdlab::digraph& g : found) list->items.push_back({std::move(g)});
    *out = list;
    return DRDLAB_OK;
  });
}

int drdlab_digraph_list_size(const drdlab_digraph_list* l) {
  return l ? static_cast<int>(l->items.size()) : DRDLAB_EINVAL;
}

const drdlab_digraph* drdlab_digraph_list_get(const drdlab_digraph_list* l, int i) {
  if (!l || i < 0 || i >= static_cast<int>(l->items.size())) return nullptr;
  return &l->items[static_cast<std::size_t>(i)];
}

void drdlab_digraph_list_free(drdlab_digraph_list* l) { delete l; }

int drdlab_is_distance_regular(const drdlab_digraph* g, char** detail_json) {
  return guarded([&] {
    drdlab::require(g, drdlab::errc::invalid_argument, "null digraph");
    drdlab::intersection_result r = drdlab::intersection_numbers(g->g);
    if (detail_json) {
      json d;
      if (r.ok()) {
        d["lambda"] = r.table->lambda();
      } else {
        d["witness"] = {{"kind", "intersection-violation"},
                        {"u", r.witness->u},
                        {"v", r.witness->v},
                        {"i", r.witness->index},
                        {"expected", r.witness->expected},
                        {"actual", r.witness->actual}};
      }
      *detail_json = dup_string(d.dump());
    }
    return r.ok() ? 1 : 0;
  });
}

int drdlab_is_weakly_distance_regular(const drdlab_digraph* g, char** detail_json) {
  return guarded([&] {
    drdlab::require(g, drdlab::errc::invalid_argument, "null digraph");
    drdlab::weak_regularity_result r = drdlab::weak_regularity(g->g);
    if (detail_json) {
      json d;
      d["constant_to_twice_diameter"] = r.constant_to_twice_diameter;
      if (!r.ok)
        d["witness"] = {{"kind", "walk-violation"},
                        {"u", r.witness->u},
                        {"v", r.witness->v},
                        {"ell", r.witness->index},
                        {"expected", r.witness->expected},
                        {"actual", r.witness->actual}};
      *detail_json = dup_string(d.dump());
    }
    return r.ok ? 1 : 0;
  });
}

int drdlab_is_normal(const drdlab_digraph* g) {
  return guarded([&] {
    drdlab::require(g, drdlab::errc::invalid_argument, "null digraph");
    return drdlab::is_normal(g->g) ? 1 : 0;
  });
}

int drdlab_is_stable(const drdlab_digraph* g) {
  return guarded([&] {
    drdlab::require(g, drdlab::errc::invalid_argument, "null digraph");
    return drdlab::is_stable(g->g) ? 1 : 0;
  });
}

int drdlab_srd_params(const drdlab_digraph* g, int params[5], int* mu_vacuous) {
  return guarded([&] {
    drdlab::require(g && params, drdlab::errc::invalid_argument, "null argument");
    auto p = drdlab::srd_parameters(g->g);
    if (!p) return 0;
    params[0] = p->n;
    params[1] = p->k;
    params[2] = p->t;
    params[3] = p->lambda;
    params[4] = p->mu.value_or(0);
    if (mu_vacuous) *mu_vacuous = p->mu ? 0 : 1;
    return 1;
  });
}

int drdlab_drd_type(const drdlab_digraph* g, int* is_long) {
  return guarded([&] {
    drdlab::require(g && is_long, drdlab::errc::invalid_argument, "null argument");
    *is_long = drdlab::drd_type(g->g) == drdlab::drd_kind::long_type ? 1 : 0;
    return DRDLAB_OK;
  });
}

int drdlab_family_d(const drdlab_digraph* g, int* t, int* rho) {
  return guarded([&] {
    drdlab::require(g, drdlab::errc::invalid_argument, "null digraph");
    auto b = drdlab::family_d(g->g);
    if (!b) return 0;
    if (t) *t = b->t;
    if (rho) *rho = b->rho;
    return 1;
  });
}

int drdlab_intersection_numbers_json(const drdlab_digraph* g, char** json_out) {
  return guarded([&] {
    drdlab::require(g && json_out, drdlab::errc::invalid_argument, "null argument");
    drdlab::intersection_result r = drdlab::intersection_numbers(g->g);
    json d;
    if (r.ok()) {
      d["valency"] = r.table->valency();
      d["diameter"] = r.table->diameter();
      d["lambda"] = r.table->lambda();
      json table = json::object();
      for (int k = 1; k <= r.table->diameter(); ++k) {
        json row = json::array();
        for (int i = 0; i <= k + 1; ++i) row.push_back(r.table->at(k, i));
        table[std::to_string(k)] = std::move(row);
      }
      d["a"] = std::move(table);
    } else {
      d["witness"] = {{"kind", "intersection-violation"},
                      {"u", r.witness->u},
                      {"v", r.witness->v},
                      {"i", r.witness->index},
                      {"expected", r.witness->expected},
                      {"actual", r.witness->actual}};
    }
    *json_out = dup_string(d.dump());
    return r.ok() ? 1 : 0;
  });
}

int drdlab_isomorphic(const drdlab_digraph* a, const drdlab_digraph* b) {
  return guarded([&] {
    drdlab::require(a && b, drdlab::errc::invalid_argument, "null digraph");
    return drdlab::isomorphic(a->g, b->g) ? 1 : 0;
  });
}

int drdlab_max_flow(const drdlab_digraph* g, int s, int t, int* value) {
  return guarded([&] {
    drdlab::require(g && value, drdlab::errc::invalid_argument, "null argument");
    *value = drdlab::max_flow(g->g, s, t).value;
    return DRDLAB_OK;
  });
}

int drdlab_edge_connectivity(const drdlab_digraph* g, int* value) {
  return guarded([&] {
    drdlab::require(g && value, drdlab::errc::invalid_argument, "null argument");
    *value = drdlab::edge_connectivity(g->g);
    return DRDLAB_OK;
  });
}

int drdlab_vertex_connectivity(const drdlab_digraph* g, int* value) {
  return guarded([&] {
    drdlab::require(g && value, drdlab::errc::invalid_argument, "null argument");
    *value = drdlab::vertex_connectivity(g->g);
    return DRDLAB_OK;
  });
}

int drdlab_min_edge_cuts_json(const drdlab_digraph* g, char** json_out) {
  return guarded([&] {
    drdlab::require(g && json_out, drdlab::errc::invalid_argument, "null argument");
    json arr = json::array();
    for (const drdlab::edge_cut& cut : drdlab::enumerate_min_edge_cuts(g->g)) {
      json c;
      c["size"] = cut.size;
      c["side_a"] = cut.side_a;
      json edges = json::array();
      for (const drdlab::edge& e : cut.crossing) edges.push_back(json::array({e.from, e.to}));
      c["edges"] = std::move(edges);
      c["class"] = cut_class_json(drdlab::classify_edge_cut(g->g, cut));
      c["generating_sides"] = cut.generating_sides;
      arr.push_back(std::move(c));
    }
    *json_out = dup_string(arr.dump());
    return DRDLAB_OK;
  });
}

int drdlab_min_vertex_cuts_json(const drdlab_digraph* g, char** json_out) {
  return guarded([&] {
    drdlab::require(g && json_out, drdlab::errc::invalid_argument, "null argument");
    json arr = json::array();
    for (const drdlab::vertex_cut& cut : drdlab::enumerate_min_vertex_cuts(g->g)) {
      json c;
      c["size"] = cut.size;
      c["vertices"] = cut.vertices;
      c["class"] = cut_class_json(drdlab::classify_vertex_cut(g->g, cut));
      arr.push_back(std::move(c));
    }
    *json_out = dup_string(arr.dump());
    return DRDLAB_OK;
  });
}

int drdlab_verify(const drdlab_verify_opts* opts, int* fail_count) {
  return guarded([&] {
    drdlab::require(opts, drdlab::errc::invalid_argument, "null options");
    drdlab::verify_request req;
    req.theorem = opts->theorem ? opts->theorem : "all";
    for (int i = 0; i < opts->n_files; ++i) req.files.emplace_back(opts->files[i]);
    req.default_catalog = opts->default_catalog != 0;
    req.gamma_lo = opts->gamma_lo;
    req.gamma_hi = opts->gamma_hi;
    req.seed = opts->seed;
    req.timings = opts->timings != 0;
    if (opts->report_path) req.report_path = opts->report_path;
    if (opts->counterexample_dir) req.counterexample_dir = opts->counterexample_dir;
    drdlab::verify_summary s = drdlab::run_verify(req);
    if (fail_count) *fail_count = s.fail_count;
    return DRDLAB_OK;
  });
}

int drdlab_search_conjecture(int max_n, int max_k, int source, const char* out_dir,
                             int* counterexamples, char** summary_json) {
  return guarded([&] {
    drdlab::conjecture_options opts;
    opts.max_n = max_n;
    opts.max_k = max_k;
    opts.source = source == 0 ? drdlab::search_source::exhaustive
                              : drdlab::search_source::from_catalog;
    if (out_dir) opts.counterexample_dir = out_dir;
    drdlab::catalog cat;
    if (opts.source == drdlab::search_source::from_catalog) {
      cat = drdlab::build_catalog(drdlab::catalog_spec::defaults());
      opts.members = &cat;
    }
    std::vector<drdlab::claim_result> results = drdlab::search_conjecture(opts);
    int fails = 0;
    json arr = json::array();
    for (const drdlab::claim_result& r : results) {
      if (r.failed()) ++fails;
      json m;
      m["claim"] = r.claim;
      m["instance"] = r.instance;
      m["verdict"] = drdlab::to_string(r.v);
      if (!r.witness.is_null()) m["witness"] = r.witness;
      if (!r.note.empty()) m["note"] = r.note;
      arr.push_back(std::move(m));
    }
    if (counterexamples) *counterexamples = fails;
    if (summary_json) *summary_json = dup_string(arr.dump());
    return DRDLAB_OK;
  });
}

}  // extern "C"
