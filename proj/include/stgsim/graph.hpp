#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace stgsim {

// Sensor topology. Adjacency weights live in [0,1]; a positive weight always
// corresponds to a finite recorded distance. Immutable after construction.
struct WeightedGraph {
  std::vector<std::string> node_ids;
  std::vector<std::array<double, 2>> positions;  // meters; empty when unknown
  Eigen::MatrixXd adjacency;                     // symmetric, zero diagonal
  Eigen::MatrixXd distances;                     // meters; +inf where unrecorded

  int size() const { return static_cast<int>(node_ids.size()); }

  // Support of the positive-weight edges, sorted per node.
  std::vector<std::vector<int>> neighbor_lists() const;
};

// Disjoint node -> cloudlet assignment plus the per-cloudlet cross-cloudlet
// dependency sets produced by dependency_closure().
struct CloudletPartition {
  std::vector<int> assignment;  // node index -> cloudlet id
  std::vector<std::array<double, 2>> cloudlet_centers;
  double radius_m = 0.0;
  int l_hops = 0;
  std::vector<std::vector<int>> members;            // cloudlet -> sorted local nodes
  std::vector<std::vector<int>> dependencies;       // cloudlet -> sorted cross nodes
  std::vector<std::vector<int>> cloudlet_adjacency;  // cloudlet -> sorted peer cloudlets

  int num_cloudlets() const { return static_cast<int>(members.size()); }
};

// W[i][j] = exp(-d^2 / sigma^2) for d <= cutoff, else 0. Diagonal forced to
// zero. Distances must be symmetric; the offending pair is reported otherwise.
WeightedGraph build_adjacency(const Eigen::MatrixXd& distances_m,
                              std::vector<std::string> node_ids, double kernel_sigma_m,
                              double cutoff_m);

// Nearest-center assignment (Euclidean), ties broken by lowest cloudlet id.
// Nodes outside every radius are reported by id.
CloudletPartition partition_by_radius(const WeightedGraph& graph,
                                      const std::vector<std::array<double, 2>>& centers,
                                      double radius_m);

// Explicit node -> cloudlet mapping, bypassing geometry.
CloudletPartition partition_from_assignment(const WeightedGraph& graph,
                                            const std::vector<int>& assignment);

// BFS closure over positive-weight edges: dependencies[c] = nodes within
// l_hops of c's members, minus the members themselves. Also derives which
// cloudlet pairs exchange features.
CloudletPartition dependency_closure(const WeightedGraph& graph, CloudletPartition partition,
                                     int l_hops);

// Subgraph over local + active cross nodes, local nodes first, both groups
// sorted by index. Keeps every induced positive-weight edge.
WeightedGraph induced_subgraph(const WeightedGraph& graph, const std::vector<int>& local_nodes,
                               const std::vector<int>& active_cross_nodes);

// Nodes reachable from `sources` in at most `hops` positive-weight edges,
// including the sources. Sorted.
std::vector<int> khop_neighborhood(const WeightedGraph& graph, const std::vector<int>& sources,
                                   int hops);

}  // namespace stgsim
