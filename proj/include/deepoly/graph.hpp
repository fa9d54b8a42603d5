#ifndef DEEPOLY_GRAPH_HPP
#define DEEPOLY_GRAPH_HPP

#include <span>
#include <vector>

#include "deepoly/common.hpp"
#include "deepoly/weights.hpp"

namespace deepoly {

// Layered scalar graph: h0 = x, h_l = sum_i a_i^(l) * h_{l-1}^i,
// output Q = w(x)^gamma * h_L.
struct GraphConfig {
  std::vector<int> widths;  // one per layer, each >= 1
  double gamma = 0.0;
  Weight weight = Weight::constant();

  void validate() const;  // throws InvalidArgument
};

// Total trainable coefficient count, sum of widths.
int n_deep(const GraphConfig& config);
int n_deep(std::span<const int> widths);

// Product of per-layer degrees (width - 1); a width-1 layer collapses the
// composition to a constant, contributing factor 0.
long long composite_degree(const GraphConfig& config);
long long composite_degree(std::span<const int> widths);

// Essential parameter count of a composition with the given layer degrees:
// d1 + ... + dL - L + 2. Requires every degree >= 1.
int classic_dof(std::span<const int> degrees);

enum class NodeKind {
  Input,      // h0 = x
  Power,      // value = operand_a (previous power) * operand_b (layer input)
  ConstOne,   // the i = 0 power
  LinComb,    // h_l = sum_i theta[theta_offset + i] * power_i
  WeightMul,  // Q = w(x)^gamma * h_L
};

struct Node {
  NodeKind kind;
  int operand_a = -1;     // Power: previous power node; LinComb: first power node
  int operand_b = -1;     // Power: layer input node
  int layer = 0;          // 1-based layer index (0 for input/output bookkeeping)
  int width = 0;          // LinComb only
  int theta_offset = 0;   // LinComb only
};

class Graph {
 public:
  explicit Graph(GraphConfig config);

  const GraphConfig& config() const { return config_; }
  int n_params() const { return n_params_; }

  // Topologically ordered node list: input, then per layer its powers and
  // linear combination, then the weight multiplication.
  const std::vector<Node>& nodes() const { return nodes_; }

  // Q(x; theta). Fails with the offending 1-based layer index if any node
  // exceeds kOverflowLimit or goes non-finite.
  EvalResult forward(std::span<const double> theta, double x) const;

  // Q(x; theta) and dQ/dtheta via reverse-mode accumulation.
  // grad must have length n_params(); it is overwritten, not accumulated.
  EvalResult gradient(std::span<const double> theta, double x,
                      std::span<double> grad) const;

 private:
  void check_theta(std::span<const double> theta) const;

  GraphConfig config_;
  int n_params_ = 0;
  std::vector<Node> nodes_;
};

}  // namespace deepoly

#endif  // DEEPOLY_GRAPH_HPP
