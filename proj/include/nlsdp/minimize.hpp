#pragma once

#include <cstdint>
#include <vector>

#include "nlsdp/grid.hpp"
#include "nlsdp/model.hpp"

namespace nlsdp {

/// G_omega'(v) = H v - omega v - (lambda1 |v|^{p-1} + lambda2 |v|^{2p-2}) v with
/// the evolution's discrete H; zero on the two boundary nodes. This is the
/// gradient of action_G with respect to the inner product Re h sum(u conj(w)).
ComplexField action_gradient(const ComplexField& v, const ModelParams& params, double omega);

enum class Preconditioner {
  /// Plain L^2 descent v <- v - step G'(v).
  None,
  /// Descent along (H_0 + sigma)^{-1} G'(v), H_0 the Dirichlet Laplacian.
  Sobolev,
};

struct FlowOptions {
  Preconditioner preconditioner = Preconditioner::Sobolev;
  /// Initial (and maximal) step; <= 0 picks 0.1 h^2 for None and 0.5 for Sobolev.
  double step = 0.0;
  double tol = 1e-8;
  std::size_t max_iter = 200000;
  /// Shift sigma of the Sobolev preconditioner; <= 0 picks max(-omega, 0.05).
  double shift = 0.0;
  /// Keep one history row every `history_every` iterations (0 disables).
  std::size_t history_every = 1;
};

struct FlowSample {
  std::size_t iter;
  double value;
  double grad_norm;
};

struct FlowResult {
  ComplexField minimizer;
  double value = 0.0;
  std::size_t iterations = 0;
  double final_gradient_norm = 0.0;
  bool converged = false;
  std::vector<FlowSample> history;
};

/// Monotone descent on G_omega (on E when omega = 0) with step halving
/// whenever the functional would increase. Non-convergence is reported in the
/// result, not thrown.
FlowResult gradient_flow(const ComplexField& v0, const ModelParams& params, double omega,
                         const FlowOptions& opts = {});

struct MinimumEstimate {
  double best_value = 0.0;
  /// G_omega of the sampled closed-form profile on the same grid.
  double profile_value = 0.0;
  std::vector<FlowResult> runs;
  std::uint64_t seed = 0;
};

/// Real Gaussian bump with unit discrete H^1 norm, drawn from `seed`.
ComplexField random_bump(const Grid& grid, std::uint64_t seed);

/// Best gradient-flow value over `restarts` random bump starts.
MinimumEstimate estimate_m(const ModelParams& params, double omega, const Grid& grid,
                           std::size_t restarts, std::uint64_t seed, const FlowOptions& opts = {});

}  // namespace nlsdp
