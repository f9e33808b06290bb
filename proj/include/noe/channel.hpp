#pragma once

// Broadcast channel instances: one transmitter with t antennas, K receivers
// with gains H_i and noise covariances N_i > 0, and a shared transmit
// constraint (covariance cap S or total power).

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "noe/matrix_core.hpp"

namespace noe {

struct CovarianceCap {
  SymMatrix S;
};

struct SumPower {
  double p_tot = 0.0;
};

using Constraint = std::variant<CovarianceCap, SumPower>;

struct BroadcastChannel {
  int K = 0;
  int t = 0;
  std::vector<int> rx_dims;
  std::vector<Mat> H;        // r_i x t
  std::vector<SymMatrix> N;  // r_i x r_i
  Constraint constraint;
};

enum class ChannelTag { General, Aligned, AlignedDegraded };

struct ChannelClass {
  ChannelTag tag = ChannelTag::General;
  // Receiver ordering (0-based) with N_pi(0) <= ... <= N_pi(K-1); only
  // populated for AlignedDegraded.
  std::vector<int> degraded_order;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Lists every violated invariant; empty report iff the instance is valid.
ValidationReport validate(const BroadcastChannel& ch);

ChannelClass classify(const BroadcastChannel& ch);

// ADBC from a Loewner-nondecreasing noise chain; H_i = I, covariance cap S.
BroadcastChannel make_adbc(const std::vector<SymMatrix>& noise,
                           const SymMatrix& s);

// Seeded generator. AlignedDegraded: N_1 = A_1 A_1^T + 0.1 I and
// N_k = N_{k-1} + spread * A_k A_k^T; S = t I. General: H_i standard normal.
BroadcastChannel random_instance(std::uint64_t seed, ChannelTag cls, int K,
                                 int t, double spread = 1.0);

// Projection and feasibility dispatched over the constraint variant.
Projection project_feasible(const StrategyProfile& qhat, const Constraint& c,
                            const ProjectOptions& opts = {});
bool is_feasible(const StrategyProfile& q, const Constraint& c,
                 double tol = kPsdTol);

}  // namespace noe
