#pragma once

// Growth rates of integer sequences and the asymptotic invariant: the
// limsup of a_n^(1/n), clamped below at 1. The limsup is bracketed by the
// maximum of (log a_n)/n over the tail half of a finite horizon; the
// finite-horizon bias of that estimate is part of the contract and decays
// as the horizon grows. No extrapolation is performed.

#include "zeta/numbers.hpp"
#include "zeta/periodic.hpp"
#include "zeta/subshift.hpp"
#include "zeta/torus.hpp"

#include <functional>
#include <vector>

namespace zeta {

struct GrowthEstimate {
    double value = 1.0;     // max(1, exp(max of per_n_logs))
    int horizon = 0;
    // (log a_n)/n for n in the tail window [ceil(horizon/2), horizon];
    // zero terms contribute -infinity.
    std::vector<double> per_n_logs;
};

// Evaluates the sequence over the tail window and clamps at 1.
// Requires horizon >= 4. Deterministic.
GrowthEstimate growth_rate(const std::function<Int(long)>& sequence, int horizon);

// log of the spectral radius, log((|tr| + sqrt(tr^2 - 4)) / 2), from the
// exact trace. Requires a hyperbolic map.
double torus_entropy(const TorusMap& t);

// Growth of the Floer dimension sequence |det(I - A^n)|.
GrowthEstimate asymptotic_invariant(const TorusMap& t, int horizon);

// Growth of the periodic count sequence N_gcd(n, m); bounded, so the
// estimate decays to the clamp as the horizon grows.
GrowthEstimate asymptotic_invariant(const NielsenData& d, int horizon);

// Growth of |sum_i sign_i tr(A_i^n)|.
GrowthEstimate asymptotic_invariant(const SignedSubshiftFamily& f, int horizon);

}  // namespace zeta
