#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "embedrank/textproc.hpp"

namespace embedrank::baselines {

/// Undirected word co-occurrence graph over the adjective and noun tokens
/// of one document. Two words are connected iff their token positions
/// differ by less than `window` inside the same sentence; weighted graphs
/// accumulate co-occurrence counts, unweighted ones keep weight 1. No self
/// loops.
struct CooccurrenceGraph {
  std::vector<std::string> nodes;                          // first-appearance order
  std::unordered_map<std::string, std::size_t> node_index;
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;
  int window = 0;
  bool weighted = false;

  bool empty() const { return nodes.empty(); }
  /// Weight of edge {u, v}, 0 when absent.
  double edge_weight(std::string_view u, std::string_view v) const;
};

CooccurrenceGraph build_graph(const textproc::TaggedDocument& doc, int window,
                              bool weighted);

struct NodeScores {
  std::unordered_map<std::string, double> scores;  // sums to 1
  bool converged = false;
  int iterations = 0;
};

/// Weighted PageRank with uniform teleport and uniform redistribution of
/// dangling (isolated node) mass. Iteration stops when the largest
/// componentwise change drops below tol, or after max_iter sweeps (the
/// result is then flagged non-converged).
NodeScores pagerank(const CooccurrenceGraph& graph, double damping = 0.85,
                    double tol = 1e-6, int max_iter = 100);

/// TextRank: unweighted graph, window 2; candidate phrases score as the sum
/// of their word scores.
std::vector<std::pair<std::string, double>> textrank_extract(
    const textproc::TaggedDocument& doc, int top_n);

/// SingleRank: co-occurrence-count weights, window 10.
std::vector<std::pair<std::string, double>> singlerank_extract(
    const textproc::TaggedDocument& doc, int top_n);

}  // namespace embedrank::baselines
