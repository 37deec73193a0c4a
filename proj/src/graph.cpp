#include "stgsim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stgsim {

std::vector<std::vector<int>> WeightedGraph::neighbor_lists() const {
  const int n = size();
  std::vector<std::vector<int>> nbrs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && adjacency(i, j) > 0.0) nbrs[i].push_back(j);
    }
  }
  return nbrs;
}

WeightedGraph build_adjacency(const Eigen::MatrixXd& distances_m,
                              std::vector<std::string> node_ids, double kernel_sigma_m,
                              double cutoff_m) {
  const int n = static_cast<int>(node_ids.size());
  if (distances_m.rows() != n || distances_m.cols() != n) {
    throw std::invalid_argument("distance matrix shape does not match node count");
  }
  if (kernel_sigma_m <= 0.0 || cutoff_m <= 0.0) {
    throw std::invalid_argument("kernel_sigma and cutoff must be positive");
  }

  const double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dij = distances_m(i, j);
      const double dji = distances_m(j, i);
      const bool have_ij = std::isfinite(dij);
      const bool have_ji = std::isfinite(dji);
      if (have_ij != have_ji || (have_ij && dij != dji)) {
        std::ostringstream msg;
        msg << "non-symmetric distances between '" << node_ids[i] << "' and '" << node_ids[j]
            << "': " << dij << " vs " << dji;
        throw std::invalid_argument(msg.str());
      }
      if (have_ij && dij <= 0.0) {
        throw std::invalid_argument("non-positive distance between '" + node_ids[i] + "' and '" +
                                    node_ids[j] + "'");
      }
    }
  }

  WeightedGraph g;
  g.node_ids = std::move(node_ids);
  g.distances = distances_m;
  for (int i = 0; i < n; ++i) g.distances(i, i) = 0.0;
  g.adjacency = Eigen::MatrixXd::Zero(n, n);
  const double sigma2 = kernel_sigma_m * kernel_sigma_m;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = g.distances(i, j);
      if (std::isfinite(d) && d <= cutoff_m) {
        const double w = std::exp(-(d * d) / sigma2);
        g.adjacency(i, j) = w;
        g.adjacency(j, i) = w;
      }
    }
  }
  (void)inf;
  return g;
}

namespace {

CloudletPartition finish_partition(const WeightedGraph& graph, CloudletPartition p,
                                   int num_cloudlets) {
  p.members.assign(num_cloudlets, {});
  for (int i = 0; i < graph.size(); ++i) {
    const int c = p.assignment[i];
    if (c < 0 || c >= num_cloudlets) {
      throw std::invalid_argument("node '" + graph.node_ids[i] + "' assigned to unknown cloudlet " +
                                  std::to_string(c));
    }
    p.members[c].push_back(i);
  }
  p.dependencies.assign(num_cloudlets, {});
  p.cloudlet_adjacency.assign(num_cloudlets, {});
  return p;
}

}  // namespace

CloudletPartition partition_by_radius(const WeightedGraph& graph,
                                      const std::vector<std::array<double, 2>>& centers,
                                      double radius_m) {
  if (centers.empty()) throw std::invalid_argument("no cloudlet centers given");
  if (graph.positions.size() != static_cast<size_t>(graph.size())) {
    throw std::invalid_argument("graph has no node positions; radius partitioning needs them");
  }

  CloudletPartition p;
  p.cloudlet_centers = centers;
  p.radius_m = radius_m;
  p.assignment.assign(graph.size(), -1);

  std::vector<std::string> uncovered;
  for (int i = 0; i < graph.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int best_c = -1;
    for (int c = 0; c < static_cast<int>(centers.size()); ++c) {
      const double dx = graph.positions[i][0] - centers[c][0];
      const double dy = graph.positions[i][1] - centers[c][1];
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) {  // strict: ties keep the lowest cloudlet id
        best = d2;
        best_c = c;
      }
    }
    if (best > radius_m * radius_m) {
      uncovered.push_back(graph.node_ids[i]);
    } else {
      p.assignment[i] = best_c;
    }
  }
  if (!uncovered.empty()) {
    std::string msg = "nodes outside every cloudlet radius:";
    for (const auto& id : uncovered) msg += " " + id;
    throw std::invalid_argument(msg);
  }
  return finish_partition(graph, std::move(p), static_cast<int>(centers.size()));
}

CloudletPartition partition_from_assignment(const WeightedGraph& graph,
                                            const std::vector<int>& assignment) {
  if (assignment.size() != static_cast<size_t>(graph.size())) {
    throw std::invalid_argument("assignment length does not match node count");
  }
  int num = 0;
  for (int c : assignment) num = std::max(num, c + 1);
  if (num == 0) throw std::invalid_argument("assignment names no cloudlets");
  CloudletPartition p;
  p.assignment = assignment;
  return finish_partition(graph, std::move(p), num);
}

std::vector<int> khop_neighborhood(const WeightedGraph& graph, const std::vector<int>& sources,
                                   int hops) {
  const int n = graph.size();
  std::vector<int> depth(n, -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (s < 0 || s >= n) throw std::invalid_argument("unknown node index " + std::to_string(s));
    if (depth[s] != 0) {
      depth[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (depth[u] == hops) continue;
    for (int v = 0; v < n; ++v) {
      if (v != u && graph.adjacency(u, v) > 0.0 && depth[v] < 0) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (depth[i] >= 0) out.push_back(i);
  }
  return out;
}

CloudletPartition dependency_closure(const WeightedGraph& graph, CloudletPartition partition,
                                     int l_hops) {
  if (l_hops < 0) throw std::invalid_argument("l_hops must be >= 0");
  partition.l_hops = l_hops;
  const int num = partition.num_cloudlets();
  partition.dependencies.assign(num, {});
  for (int c = 0; c < num; ++c) {
    const auto reach = khop_neighborhood(graph, partition.members[c], l_hops);
    for (int v : reach) {
      if (partition.assignment[v] != c) partition.dependencies[c].push_back(v);
    }
  }
  partition.cloudlet_adjacency.assign(num, {});
  for (int c = 0; c < num; ++c) {
    std::set<int> peers;
    for (int v : partition.dependencies[c]) peers.insert(partition.assignment[v]);
    partition.cloudlet_adjacency[c].assign(peers.begin(), peers.end());
    // feature exchange is mutual: if c needs v from c', c' also links back
    for (int peer : peers) {
      auto& back = partition.cloudlet_adjacency[peer];
      if (std::find(back.begin(), back.end(), c) == back.end()) back.push_back(c);
    }
  }
  for (auto& adj : partition.cloudlet_adjacency) std::sort(adj.begin(), adj.end());
  return partition;
}

WeightedGraph induced_subgraph(const WeightedGraph& graph, const std::vector<int>& local_nodes,
                               const std::vector<int>& active_cross_nodes) {
  std::vector<int> local = local_nodes;
  std::vector<int> cross = active_cross_nodes;
  std::sort(local.begin(), local.end());
  std::sort(cross.begin(), cross.end());

  std::set<int> seen;
  auto check = [&](const std::vector<int>& nodes) {
    for (int v : nodes) {
      if (v < 0 || v >= graph.size()) {
        throw std::invalid_argument("unknown node index " + std::to_string(v));
      }
      if (!seen.insert(v).second) {
        throw std::invalid_argument("node listed twice in subgraph: " + graph.node_ids[v]);
      }
    }
  };
  check(local);
  check(cross);

  std::vector<int> order = local;
  order.insert(order.end(), cross.begin(), cross.end());

  WeightedGraph sub;
  const int m = static_cast<int>(order.size());
  sub.adjacency = Eigen::MatrixXd::Zero(m, m);
  sub.distances =
      Eigen::MatrixXd::Constant(m, m, std::numeric_limits<double>::infinity());
  for (int a = 0; a < m; ++a) {
    sub.node_ids.push_back(graph.node_ids[order[a]]);
    if (!graph.positions.empty()) sub.positions.push_back(graph.positions[order[a]]);
    sub.distances(a, a) = 0.0;
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const double w = graph.adjacency(order[a], order[b]);
      if (w > 0.0) {
        sub.adjacency(a, b) = w;
        sub.distances(a, b) = graph.distances(order[a], order[b]);
      }
    }
  }
  return sub;
}

}  // namespace stgsim
