#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/circuit.hpp"
#include "semanc/network.hpp"

namespace semanc {

struct TrainConfig {
    double lr = 0.1;
    int epochs = 100;
    std::uint64_t seed = 0;
    double lambda_data = 1.0;
    double lambda_kb = 1.0;
    QuantifierMode quant = QuantifierMode::SoftMin;
    double temperature = 0.1;
    LossForm loss = LossForm::NegLog;
    TNorm tnorm = TNorm::Product;
    double epsilon = 1e-9;   // stop early once the total loss falls to epsilon
    double init_scale = 0.0; // > 0: re-initialize parameters U(-scale, scale) from seed
};

struct EpochStats {
    int epoch = 0;
    double data_loss = 0.0;
    double kb_loss = 0.0;
    double fidelity = 0.0; // mean per-grounding WMC of the constraint KB; NaN when undefined
};

struct TrainResult {
    Network net;
    std::vector<EpochStats> history;
    bool diverged = false;
    int epochs_run = 0;
    std::string diagnostic;
};

// splitmix64-based uniform doubles; identical sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

// Full-batch gradient descent on
//   lambda_data * mean sentence loss of data_kb + lambda_kb * mean of kb,
// with both KBs compiled against the binding over the given groundings.
// Deterministic for a fixed config.
TrainResult train_soft(const Network& n, const KnowledgeBase& data_kb, const KnowledgeBase& kb,
                       const DatSpec& binding, const std::vector<VariableAssignment>& groundings,
                       const TrainConfig& cfg);

// Forward pass with the given input clamps (plain values, no tape).
NetworkState forward_with_clamps(const Network& n,
                                 const std::vector<std::pair<int, double>>& clamps);

} // namespace semanc
