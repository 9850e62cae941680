#include "htw/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace htw {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source_name) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;        // blank line
    if (first[0] == '#') continue;       // comment

    if (n < 0) {
      if (first != "p") fail(source_name, line_no, "expected 'p <n> <m>' header");
      if (!(ls >> n >> m) || n < 0 || m < 0)
        fail(source_name, line_no, "malformed 'p' header");
      std::string extra;
      if (ls >> extra) fail(source_name, line_no, "trailing tokens after header");
      continue;
    }

    long long u, v;
    std::istringstream es(line);
    if (!(es >> u >> v)) fail(source_name, line_no, "malformed edge line");
    std::string extra;
    if (es >> extra) fail(source_name, line_no, "trailing tokens on edge line");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(source_name, line_no, "edge endpoint out of range");
    if (u == v) fail(source_name, line_no, "self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    if (static_cast<long long>(edges.size()) > m)
      fail(source_name, line_no, "more edges than declared in header");
  }

  if (n < 0) throw std::runtime_error(source_name + ": missing 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m)
    throw std::runtime_error(source_name + ": header declares " + std::to_string(m) +
                             " edges, found " + std::to_string(edges.size()));
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(source_name + ": " + e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  write_graph(out, g);
}

}  // namespace htw
