#pragma once

#include "semanc/network.hpp"

namespace semanc {

// E(x) = -1/2 sum_{i != j} w_ij x_i x_j - sum_i b_i x_i.
// Requires a symmetric weight matrix with zero self-weights and a binary
// state; throws DomainError otherwise.
double hopfield_energy(const Network& n, const NetworkState& x);

// True iff no single-neuron flip strictly decreases the energy.
bool is_local_minimum(const Network& n, const NetworkState& x);

// Stable under asynchronous single-neuron updates with the >= 0 firing
// convention: every neuron already equals step(bias + weighted inflow).
bool is_async_stable(const Network& n, const NetworkState& x);

} // namespace semanc
