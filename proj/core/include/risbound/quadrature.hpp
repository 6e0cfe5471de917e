// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <Eigen/Core>

namespace risbound {

/// Controls the frequency integration of the information matrix. Node
/// doubling (K -> 2K-1) repeats until the relative Frobenius change of the
/// result drops below `refinement`.
struct QuadratureSpec {
  enum class Rule { GaussLegendre };
  Rule rule = Rule::GaussLegendre;
  int nodes = 129;
  double refinement = 1e-8;
};

void validate_quadrature(const QuadratureSpec& spec);

struct QuadratureRule {
  Eigen::VectorXd nodes;    // ascending, on [-1, 1]
  Eigen::VectorXd weights;  // positive, sum to 2
};

/// Gauss-Legendre nodes and weights on [-1, 1]. Deterministic: nodes are
/// computed by Newton iteration and mirrored, so the rule is exactly
/// symmetric about zero.
QuadratureRule gauss_legendre(int point_count);

/// Affine map of a [-1, 1] rule onto [a, b].
QuadratureRule map_to_interval(const QuadratureRule& rule, double a, double b);

}  // namespace risbound
