#include "lpl/io.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lpl {

Graph read_edge_list(std::istream& in) {
  int n = 0;
  long m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: missing header");
  if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  std::vector<std::array<int, 4>> ported;
  bool any_ports = false;
  std::string line;
  std::getline(in, line);  // rest of header line
  long read = 0;
  while (read < m && std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) throw std::runtime_error("edge list: malformed line: " + line);
    int p, q;
    if (ls >> p >> q) {
      ported.push_back({u, v, p, q});
      any_ports = true;
    } else {
      ported.push_back({u, v, -1, -1});
    }
    edges.emplace_back(u, v);
    ++read;
  }
  if (read < m) throw std::runtime_error("edge list: fewer lines than declared");

  Graph g = make_graph(n, edges);
  if (any_ports) {
    RotationMap rot;
    rot.table.resize(n);
    for (int v = 0; v < n; ++v) rot.table[v].resize(g.degree(v), PortTarget{});
    for (const auto& [u, v, p, q] : ported) {
      if (p < 0 || q < 0)
        throw std::runtime_error("edge list: some lines carry ports, some do not");
      if (p >= g.degree(u) || q >= g.degree(v))
        throw std::runtime_error("edge list: port out of range");
      rot.table[u][p] = {v, q};
      rot.table[v][q] = {u, p};
    }
    std::string why;
    if (!rotation_valid_for(g, rot, &why))
      throw std::runtime_error("edge list: invalid rotation map: " + why);
    g.rotation = std::move(rot);
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count << ' ' << g.edge_count() << '\n';
  if (g.rotation) {
    const auto& rot = *g.rotation;
    for (int u = 0; u < g.vertex_count; ++u)
      for (int p = 0; p < rot.ports(u); ++p) {
        auto [v, q] = rot.at(u, p);
        if (u < v) out << u << ' ' << v << ' ' << p << ' ' << q << '\n';
      }
  } else {
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count; ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges())
    out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lpl
