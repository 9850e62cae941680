#pragma once

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "htw/decomposition.hpp"

namespace htw {

inline nlohmann::json decomposition_to_json(const TreeHDecomposition& d) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : d.nodes)
    nodes.push_back({{"id", node.id},
                     {"parent", node.parent},
                     {"bag", node.bag.ids()}});
  return {{"nodes", std::move(nodes)},
          {"root", d.root},
          {"base_set", d.base_set.ids()}};
}

inline TreeHDecomposition decomposition_from_json(const nlohmann::json& j) {
  TreeHDecomposition d;
  if (!j.is_object() || !j.contains("nodes") || !j.contains("root") ||
      !j.contains("base_set"))
    throw std::runtime_error("decomposition JSON needs nodes, root and base_set");
  d.root = j.at("root").get<int>();
  d.base_set = VertexSet(j.at("base_set").get<std::vector<int>>());
  for (const auto& node : j.at("nodes")) {
    DecompositionNode n;
    n.id = node.at("id").get<int>();
    n.parent = node.at("parent").get<int>();
    n.bag = VertexSet(node.at("bag").get<std::vector<int>>());
    d.nodes.push_back(std::move(n));
  }
  std::sort(d.nodes.begin(), d.nodes.end(),
            [](const DecompositionNode& a, const DecompositionNode& b) {
              return a.id < b.id;
            });
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
    if (d.nodes[i].id != i)
      throw std::runtime_error("decomposition JSON node ids must be 0..N-1");
  return d;
}

}  // namespace htw
