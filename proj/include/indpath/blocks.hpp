#pragma once

#include <indpath/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace indpath {

// Biconnected components of a connected graph, with the block-cut tree.
// Blocks are maximal 2-connected subgraphs or bridges (as vertex sets); an
// isolated vertex graph has one single-vertex block. Tree nodes 0..B-1 are
// blocks, then one node per cut vertex.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // each sorted
  std::vector<char> cut;                 // cut[v] == 1 iff v is a cut vertex
  std::vector<int> cut_vertices;         // ascending
  std::vector<std::vector<int>> blocks_of_vertex;
  Graph tree;
  std::vector<int> tree_node_of_cut;  // vertex -> tree node id, or -1
  std::unordered_map<long long, int> edge_block;

  int block_count() const { return static_cast<int>(blocks.size()); }

  int block_of_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_block.find(static_cast<long long>(u) << 32 | static_cast<unsigned>(v));
    return it == edge_block.end() ? -1 : it->second;
  }
};

inline BlockDecomposition block_decomposition(const Graph& g) {
  if (g.n == 0)
    throw std::invalid_argument("block_decomposition: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("block_decomposition: disconnected graph");

  BlockDecomposition out;
  out.cut.assign(static_cast<size_t>(g.n), 0);
  const int n = g.n;

  auto edge_key = [](int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) << 32 | static_cast<unsigned>(v);
  };

  if (n == 1) {
    out.blocks.push_back({0});
  } else {
    std::vector<int> disc(static_cast<size_t>(n), -1);
    std::vector<int> low(static_cast<size_t>(n), 0);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<size_t> next(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<int> stack{0};
    int timer = 0;
    disc[0] = low[0] = timer++;
    int root_blocks = 0;

    auto pop_block = [&](int p, int v) {
      std::vector<int> verts;
      while (true) {
        auto [a, b] = estack.back();
        estack.pop_back();
        out.edge_block[edge_key(a, b)] = static_cast<int>(out.blocks.size());
        verts.push_back(a);
        verts.push_back(b);
        if (a == p && b == v) break;
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      out.blocks.push_back(std::move(verts));
    };

    while (!stack.empty()) {
      int v = stack.back();
      if (next[static_cast<size_t>(v)] < g.adj[v].size()) {
        int u = g.adj[v][next[static_cast<size_t>(v)]++];
        if (disc[static_cast<size_t>(u)] < 0) {
          estack.emplace_back(v, u);
          parent[static_cast<size_t>(u)] = v;
          disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
          stack.push_back(u);
        } else if (u != parent[static_cast<size_t>(v)] &&
                   disc[static_cast<size_t>(u)] < disc[static_cast<size_t>(v)]) {
          estack.emplace_back(v, u);
          low[static_cast<size_t>(v)] =
              std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(u)]);
        }
      } else {
        stack.pop_back();
        int p = parent[static_cast<size_t>(v)];
        if (p < 0) continue;
        low[static_cast<size_t>(p)] =
            std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(p)]) {
          pop_block(p, v);
          if (p == 0)
            ++root_blocks;
          else
            out.cut[static_cast<size_t>(p)] = 1;
        }
      }
    }
    if (root_blocks > 1) out.cut[0] = 1;
    if (!estack.empty())
      throw std::logic_error("block_decomposition: leftover edges");
  }

  long long size_sum = 0;
  for (const auto& b : out.blocks) size_sum += static_cast<long long>(b.size()) - 1;
  if (n > 1 && size_sum != n - 1)
    throw std::logic_error("block_decomposition: block sizes inconsistent");

  out.blocks_of_vertex.assign(static_cast<size_t>(n), {});
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (int v : out.blocks[b])
      out.blocks_of_vertex[static_cast<size_t>(v)].push_back(static_cast<int>(b));
  for (int v = 0; v < n; ++v)
    if (out.cut[static_cast<size_t>(v)]) out.cut_vertices.push_back(v);

  int bcount = static_cast<int>(out.blocks.size());
  int ccount = static_cast<int>(out.cut_vertices.size());
  out.tree = Graph(bcount + ccount);
  out.tree_node_of_cut.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < ccount; ++i)
    out.tree_node_of_cut[static_cast<size_t>(out.cut_vertices[i])] = bcount + i;
  for (int b = 0; b < bcount; ++b)
    for (int v : out.blocks[static_cast<size_t>(b)])
      if (out.cut[static_cast<size_t>(v)])
        out.tree.add_edge(b, out.tree_node_of_cut[static_cast<size_t>(v)]);
  return out;
}

}  // namespace indpath
