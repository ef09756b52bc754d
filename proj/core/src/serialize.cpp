#include "lpl/serialize.hpp"

#include <json.hpp>

namespace lpl {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

json certificate_json(const CutCertificate& c) {
  json out;
  out["kind"] = c.kind == CutKind::EdgeCut ? "edge-cut" : "restricted-edge-cut";
  out["claimed_value"] = c.claimed_value;
  out["fragment"] = c.fragment;
  out["cut_edges"] = edges_json(c.cut_edges);
  return out;
}

json graph_body(const Graph& g) {
  json out;
  out["vertex_count"] = g.vertex_count;
  out["edge_count"] = g.edge_count();
  out["edges"] = edges_json(g.edges());
  if (g.rotation) {
    json rot = json::array();
    for (int v = 0; v < g.vertex_count; ++v) {
      json ports = json::array();
      for (int p = 0; p < g.rotation->ports(v); ++p) {
        auto [w, q] = g.rotation->at(v, p);
        ports.push_back({w, q});
      }
      rot.push_back(ports);
    }
    out["rotation_map"] = rot;
  }
  return out;
}

json claim_json(const ClaimRecord& c) {
  json out;
  out["id"] = c.id;
  out["context"] = c.context;
  out["status"] = to_string(c.status);
  out["lhs"] = c.lhs;
  out["rhs"] = c.rhs;
  out["relation"] = c.relation;
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

}  // namespace

std::string graph_json(const Graph& g, const std::string& family,
                       const std::vector<std::string>& vertex_names, int indent) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["family"] = family;
  out["graph"] = graph_body(g);
  if (!vertex_names.empty()) out["vertex_names"] = vertex_names;
  return out.dump(indent) + "\n";
}

std::string replacement_json(const ReplacementProduct& p, long cross_edges,
                             int indent) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["family"] = "replacement-product";
  out["graph"] = graph_body(p.graph);
  out["blocks"] = p.blocks;
  out["cross_edge_count"] = cross_edges;
  return out.dump(indent) + "\n";
}

std::string analyze_json(const Graph& g, const ConnectivityReport& r,
                         const std::string& violations, int brute_force_value,
                         int indent) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["graph"]["vertex_count"] = g.vertex_count;
  out["graph"]["edge_count"] = g.edge_count();
  json rep;
  rep["delta"] = r.delta;
  rep["xi"] = r.xi;
  rep["kappa"] = r.kappa;
  rep["lambda"]["value"] = r.lambda;
  rep["lambda"]["certificate"] = certificate_json(r.lambda_certificate);
  if (r.lambda_prime) {
    rep["lambda_prime"]["defined"] = true;
    rep["lambda_prime"]["value"] = *r.lambda_prime;
    rep["lambda_prime"]["certificate"] =
        certificate_json(*r.lambda_prime_certificate);
  } else {
    rep["lambda_prime"]["defined"] = false;
  }
  rep["super_lambda"] = r.super_lambda;
  rep["lambda_prime_optimal"] = r.lambda_prime_optimal;
  out["report"] = rep;
  if (brute_force_value >= 0) {
    out["brute_force_check"]["value"] = brute_force_value;
    out["brute_force_check"]["matches"] =
        r.lambda_prime && *r.lambda_prime == brute_force_value;
  }
  out["invariants_ok"] = violations.empty();
  if (!violations.empty()) out["violations"] = violations;
  return out.dump(indent) + "\n";
}

std::string bound_report_json(const BoundReport& r, const std::string& suite,
                              int indent) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["suite"] = suite;
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back(claim_json(c));
  out["claims"] = claims;
  json measured;
  for (const auto& [k, v] : r.measured) measured[k] = v;
  out["measured"] = measured;
  out["all_hold"] = r.all_hold();
  out["failed_claims"] = r.failed();
  return out.dump(indent) + "\n";
}

std::string atom_json(const Graph& g, const AtomResult& a, int indent) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["graph"]["vertex_count"] = g.vertex_count;
  out["graph"]["edge_count"] = g.edge_count();
  out["lambda_prime"] = a.lambda_prime;
  out["atom"] = a.atom;
  out["atom_size"] = a.atom.size();
  Graph induced = induced_subgraph(g, a.atom);
  out["induced_subgraph"]["vertex_count"] = induced.vertex_count;
  out["induced_subgraph"]["edges"] = edges_json(induced.edges());
  out["certificate"] = certificate_json(a.certificate);
  return out.dump(indent) + "\n";
}

}  // namespace lpl
