#include "semanc/hopfield.hpp"

#include <vector>

#include "semanc/errors.hpp"

namespace semanc {

namespace {

// Dense weight matrix indexed by neuron position; validates symmetry and
// zero diagonal.
std::vector<std::vector<double>> weight_matrix(const Network& n) {
    const std::size_t sz = static_cast<std::size_t>(n.size());
    std::vector<std::vector<double>> w(sz, std::vector<double>(sz, 0.0));
    for (const Edge& e : n.edges()) {
        const auto i = static_cast<std::size_t>(n.pos_of(e.from));
        const auto j = static_cast<std::size_t>(n.pos_of(e.to));
        w[i][j] += e.weight;
    }
    for (std::size_t i = 0; i < sz; ++i) {
        if (w[i][i] != 0.0) throw DomainError("energy requires zero self-weights");
        for (std::size_t j = i + 1; j < sz; ++j)
            if (w[i][j] != w[j][i]) throw DomainError("energy requires symmetric weights");
    }
    return w;
}

void require_binary(const Network& n, const NetworkState& x) {
    if (static_cast<int>(x.size()) != n.size())
        throw DomainError("state dimension does not match neuron count");
    if (!n.is_binary_state(x)) throw DomainError("energy requires a binary state");
}

double energy_with(const std::vector<std::vector<double>>& w, const Network& n,
                   const NetworkState& x) {
    double e = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j)
            if (i != j) e -= 0.5 * w[i][j] * x[i] * x[j];
        e -= n.neuron_at(static_cast<int>(i)).bias * x[i];
    }
    return e;
}

} // namespace

double hopfield_energy(const Network& n, const NetworkState& x) {
    require_binary(n, x);
    return energy_with(weight_matrix(n), n, x);
}

bool is_local_minimum(const Network& n, const NetworkState& x) {
    require_binary(n, x);
    const auto w = weight_matrix(n);
    const double e0 = energy_with(w, n, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        NetworkState flipped = x;
        flipped[i] = 1.0 - flipped[i];
        if (energy_with(w, n, flipped) < e0) return false;
    }
    return true;
}

bool is_async_stable(const Network& n, const NetworkState& x) {
    require_binary(n, x);
    const auto w = weight_matrix(n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        double net = n.neuron_at(static_cast<int>(i)).bias;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) net += w[j][i] * x[j];
        const double fired = net >= 0.0 ? 1.0 : 0.0;
        if (fired != x[i]) return false;
    }
    return true;
}

} // namespace semanc
