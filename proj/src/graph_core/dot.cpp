#include "hlink/dot.hpp"

#include <sstream>

namespace hlink {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string export_dot(const Graph& g, std::span<const std::string> labels) {
  std::ostringstream out;
  out << "graph G {\n";
  if (!labels.empty()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (static_cast<std::size_t>(v) < labels.size() && !labels[v].empty())
        out << "  " << v << " [label=" << quoted(labels[v]) << "];\n";
    }
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hlink
