// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/quadrature.hpp"

#include <cmath>

#include "risbound/errors.hpp"

namespace risbound {

void validate_quadrature(const QuadratureSpec& spec) {
  if (spec.nodes < 2)
    throw validation_error("quadrature.nodes: must be >= 2");
  if (!(spec.refinement > 0.0))
    throw validation_error("quadrature.refinement: must be > 0");
}

QuadratureRule gauss_legendre(int point_count) {
  if (point_count < 1)
    throw validation_error("gauss_legendre: point count must be >= 1");
  const int k = point_count;
  QuadratureRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);

  // Newton on P_k from Chebyshev-like initial guesses; only the lower half
  // is solved, the rest mirrored so the rule is exactly symmetric.
  const int half = (k + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence: p1 = P_k(x), p2 = P_{k-1}(x)
      double p1 = x, p2 = 1.0;
      for (int j = 2; j <= k; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
      }
      pp = k * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[k - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[k - 1 - i] = w;
  }
  if (k % 2 == 1) rule.nodes[k / 2] = 0.0;
  return rule;
}

QuadratureRule map_to_interval(const QuadratureRule& rule, double a, double b) {
  QuadratureRule mapped;
  const double mid = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  mapped.nodes = (rule.nodes.array() * hw + mid).matrix();
  mapped.weights = rule.weights * hw;
  return mapped;
}

}  // namespace risbound
