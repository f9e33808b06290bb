#pragma once

// Normalized-equilibrium computation via the fixed-point condition
// Q* = argmax_P f(P,Q*,r) over F, certified by variational-inequality and
// KKT residuals.

#include <vector>

#include "noe/game.hpp"

namespace noe {

struct SolverOptions {
  double damping = 0.5;       // gamma in (0,1]
  double inner_tol = 1e-8;    // projected-step stopping for the inner ascent
  double outer_tol = 1e-7;    // fixed-point / VI residual stopping
  int max_outer = 2000;
  int max_inner = 500;
  double vi_step = 0.0;       // eta; 0 selects 1/(1+||g||_F)
  enum class Init { Zero, ScaledCap, Given };
  Init init = Init::ScaledCap;
  double cap_fraction = 0.0;  // ScaledCap fraction; 0 selects 1/(2K)
  StrategyProfile given_init;
  ProjectOptions projection;

  void check() const;
};

struct KKTReport {
  double stationarity_residual = 0.0;
  double primal_psd_violation = 0.0;
  double cap_violation = 0.0;
  std::vector<double> complementarity_player;
  double complementarity_cap = 0.0;
  SymMatrix multiplier_D;
  std::vector<SymMatrix> multipliers_L;

  double max_residual() const;
};

struct NoESolution {
  StrategyProfile q_star;
  std::vector<double> weights;
  double vi_residual = 0.0;
  double fixed_point_residual = 0.0;
  KKTReport kkt;
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_trace;  // sigma(Q,r) per outer iterate
};

// Projected gradient ascent with Armijo backtracking on P -> f(P,Q,r) over F.
// The objective is nondecreasing across accepted steps.
StrategyProfile best_response_joint(const BroadcastChannel& ch,
                                    const Scheme& scheme,
                                    const StrategyProfile& q,
                                    const WeightVector& r,
                                    const SolverOptions& opts = {});

// Damped iteration Q <- (1-gamma) Q + gamma BR(Q) until the fixed-point or VI
// residual drops below outer_tol. converged implies vi_residual <= outer_tol.
NoESolution solve_noe(const BroadcastChannel& ch, const Scheme& scheme,
                      const WeightVector& r, const SolverOptions& opts = {});

// || Q - proj_F(Q + eta g(Q,r)) ||_F; zero iff Q satisfies the first-order
// conditions of the fixed-point problem. eta <= 0 selects 1/(1+||g||_F).
double vi_residual(const BroadcastChannel& ch, const Scheme& scheme,
                   const StrategyProfile& q, const WeightVector& r,
                   double eta = 0.0);

// Recovers shared-constraint multipliers (D, L_i) and reports the residuals
// of the KKT system at Q. Diagnostic; the VI residual is the authoritative
// certificate.
KKTReport kkt_report(const BroadcastChannel& ch, const Scheme& scheme,
                     const StrategyProfile& q, const WeightVector& r);

StrategyProfile initial_profile(const BroadcastChannel& ch,
                                const SolverOptions& opts);

}  // namespace noe
