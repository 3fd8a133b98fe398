#pragma once

#include <vector>

namespace ezeta {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// nodes in increasing order.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

}  // namespace ezeta
