#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Weighted digraph with vertices 1..vertexCount, interconvertible with a
/// square max-plus matrix: entry (i,j) finite iff edge i->j exists.
template <typename T>
struct WeightedDigraph {
  struct Edge {
    int tail = 0;
    int head = 0;
    T weight{};
  };

  int vertexCount = 0;
  std::vector<Edge> edges;
};

template <typename D>
WeightedDigraph<ScalarNumeric<D>> toDigraph(const Eigen::MatrixBase<D>& mat) {
  using T = ScalarNumeric<D>;
  MaxMatrix<T> a = mat.derived();
  if (a.rows() != a.cols())
    throw std::invalid_argument("toDigraph: square matrix required");
  WeightedDigraph<T> g;
  g.vertexCount = static_cast<int>(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j).isFinite())
        g.edges.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                           a(i, j).value()});
  return g;
}

template <typename T>
MaxMatrix<T> fromDigraph(const WeightedDigraph<T>& g) {
  MaxMatrix<T> a = allEps<T>(g.vertexCount, g.vertexCount);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.tail < 1 || e.tail > g.vertexCount || e.head < 1 ||
        e.head > g.vertexCount)
      throw std::invalid_argument("fromDigraph: edge endpoint out of range");
    if (!seen.insert({e.tail, e.head}).second)
      throw std::invalid_argument("fromDigraph: duplicate edge");
    a(e.tail - 1, e.head - 1) = MaxScalar<T>::finite(e.weight);
  }
  return a;
}

/// Average weight of a circuit given as a closed vertex sequence
/// (v1, ..., vs) with v1 = vs; the mean is exact in exact mode.
template <typename T>
mean_t<T> circuitAverageWeight(const WeightedDigraph<T>& g,
                               const std::vector<int>& circuit) {
  if (circuit.size() < 2 || circuit.front() != circuit.back())
    throw std::invalid_argument("circuitAverageWeight: not a closed sequence");
  T total{};
  for (size_t i = 0; i + 1 < circuit.size(); ++i) {
    const auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const auto& e) {
      return e.tail == circuit[i] && e.head == circuit[i + 1];
    });
    if (it == g.edges.end())
      throw std::invalid_argument("circuitAverageWeight: sequence is not a path in G");
    total = total + it->weight;
  }
  return ratio(total, static_cast<long long>(circuit.size() - 1));
}

/// Strongly connected components, Tarjan's algorithm (iterative).
/// Components are listed in reverse topological order; ids are 0-based
/// internally and vertices keep the caller's indexing.
struct SccDecomposition {
  int componentCount = 0;
  std::vector<int> componentOf;              // per vertex (0-based)
  std::vector<std::vector<int>> components;  // vertex lists (0-based)

  bool stronglyConnected() const { return componentCount == 1; }
};

inline SccDecomposition sccDecompose(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  SccDecomposition out;
  out.componentOf.assign(n, -1);

  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> onStack(n, 0);
  std::vector<int> stack;
  int nextIndex = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge == 0) {
        index[v] = lowlink[v] = nextIndex++;
        stack.push_back(v);
        onStack[v] = 1;
      }
      bool descended = false;
      while (edge < adj[v].size()) {
        int w = adj[v][edge++];
        if (index[w] == -1) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (onStack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          onStack[w] = 0;
          out.componentOf[w] = out.componentCount;
          comp.push_back(w);
        } while (w != v);
        out.components.push_back(std::move(comp));
        ++out.componentCount;
      }
      int finished = v;
      frames.pop_back();
      if (!frames.empty())
        lowlink[frames.back().v] =
            std::min(lowlink[frames.back().v], lowlink[finished]);
    }
  }
  return out;
}

template <typename D>
std::vector<std::vector<int>> adjacencyOf(const Eigen::MatrixBase<D>& a) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j).isFinite())
        adj[static_cast<size_t>(i)].push_back(static_cast<int>(j));
  return adj;
}

template <typename T>
std::vector<std::vector<int>> adjacencyOf(const WeightedDigraph<T>& g) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertexCount));
  for (const auto& e : g.edges)
    adj[static_cast<size_t>(e.tail - 1)].push_back(e.head - 1);
  return adj;
}

template <typename T>
SccDecomposition sccDecompose(const WeightedDigraph<T>& g) {
  return sccDecompose(adjacencyOf(g));
}

template <typename T>
bool stronglyConnected(const WeightedDigraph<T>& g) {
  if (g.vertexCount == 0) return true;
  return sccDecompose(g).stronglyConnected();
}

}  // namespace maxplus
