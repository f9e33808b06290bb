#pragma once

// Real symmetric linear algebra: eigendecomposition (the single dense
// symmetric primitive every PSD test routes through), log-determinants, and
// projection onto the coupled feasible set
//   F = { (Q_1,...,Q_K) : Q_i >= 0, sum_i Q_i <= S }.

#include <vector>

#include "noe/sym_matrix.hpp"

namespace noe {

inline constexpr double kPsdTol = 1e-9;

// (M + M^T)/2 of arbitrary square row-major data.
SymMatrix symmetrize(const Mat& m);

struct EigResult {
  std::vector<double> values;  // descending
  Mat vectors;                 // orthonormal columns, vectors(:,i) <-> values[i]
};

// Cyclic Jacobi. Post: V diag(lambda) V^T reconstructs M within
// 1e-10*(1+||M||_F) and V^T V = I within 1e-10.
EigResult eig_sym(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);

// min eigenvalue >= -tol
bool is_psd(const SymMatrix& m, double tol = kPsdTol);

// A <= B in the Loewner order: B - A is PSD within tol.
bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol = kPsdTol);

// Natural log of det(M) for M > 0; throws DomainError naming the offending
// minimum eigenvalue otherwise.
double logdet_pd(const SymMatrix& m);

// Frobenius projection onto the PSD cone: clip negative eigenvalues.
SymMatrix psd_part(const SymMatrix& m);

// V diag(f(lambda)) V^T for spectral maps (inverse, square root).
SymMatrix inverse_spd(const SymMatrix& m);
SymMatrix sqrt_psd(const SymMatrix& m);

struct ProjectOptions {
  double tol = 1e-10;
  int max_iter = 500;
};

struct Projection {
  StrategyProfile profile;
  bool converged = false;
  int sweeps = 0;
  double last_delta = 0.0;
};

// Dykstra alternating projections between the product PSD cone and the
// shared-cap set {sum Q_i <= S}. The cap sub-projection is exact in closed
// form: Q_i := Qhat_i - Lambda with Lambda = psd_part(sum Qhat_i - S)/K.
Projection project_feasible(const StrategyProfile& qhat, const SymMatrix& s,
                            const ProjectOptions& opts = {});

// Sum-power variant: cones alternated with the half-space
// {Tr(sum Q_i) <= p_tot}, whose exact projection is the common shift
// (Tr(sum Qhat_i) - p_tot)_+ / (K t) * I.
Projection project_feasible_sum_power(const StrategyProfile& qhat, double p_tot,
                                      const ProjectOptions& opts = {});

// Each Q_i >= -tol I and sum Q_i <= S + tol I.
bool is_feasible(const StrategyProfile& q, const SymMatrix& s, double tol = kPsdTol);
bool is_feasible_sum_power(const StrategyProfile& q, double p_tot,
                           double tol = kPsdTol);

}  // namespace noe
