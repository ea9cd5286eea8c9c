#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/complexity.hpp"
#include "semanc/interpretation.hpp"
#include "semanc/task.hpp"
#include "semanc/train.hpp"

namespace semanc {

// Probability mass over the models of a knowledge base.
struct ModelDistribution {
    UniversePtr universe;
    std::vector<std::uint32_t> support; // model indices, ascending
    std::vector<double> probs;          // same order, sums to 1
    std::string provenance;
    int diverged_trials = 0;
    bool exact_complexities = true; // synthetic only

    double prob_of_index(std::uint32_t idx) const;
};

using DecayFn = std::function<double(int)>;
DecayFn pow2_decay(); // 2^-k
DecayFn exp_decay();  // e^-k

// P(M) = f(k(M)) / sum over models of f(k); the low-complexity bias made
// concrete.
ModelDistribution synthetic_model_dist(const KnowledgeBase& l, const UniversePtr& at,
                                       ComplexitySearcher& searcher, const DecayFn& f,
                                       const std::string& f_name = "f");

struct EmpiricalOptions {
    int hidden = 8;          // hidden layer width of the trial networks
    double init_scale = 1.0; // parameter init range
    bool closed_world = false;
    int jobs = 1; // worker threads over trials; results are order-independent
};

// Trains `trials` randomly initialized networks on task_to_kb(task) + extra
// and histograms the nearest model (rounded outputs, then minimum
// atom-fraction distance). Trial t uses seed trainer.seed + t; the result is
// reproducible bit-for-bit for a fixed (seed, trials).
ModelDistribution empirical_model_dist(const ClassificationTask& task,
                                       const KnowledgeBase& extra, const TrainConfig& trainer,
                                       int trials, const EmpiricalOptions& opts = {});

struct Prop1Report {
    ModelDistribution conditional; // predicted P(M | M satisfies l2)
    double prob_satisfies = 0.0;   // P(M satisfies l2) under the base
    double uplift = 0.0;           // 1 / prob_satisfies, the factor surviving models gain
    std::optional<double> tv_distance; // vs the observed distribution when given
};

// Conditions the base distribution on satisfying l2. When an observed
// distribution is supplied, also reports the total-variation distance between
// prediction and observation.
Prop1Report property1_check(const ModelDistribution& base, const KnowledgeBase& l2,
                            const ModelDistribution* observed = nullptr);

// 1 + Z_{L-L'} / (Z_L - Z_{L-L'}) with Z weights f(k(M)): the probability
// ratio every surviving model gains when l2 is added, under the synthetic
// distribution. When m is given it must satisfy both KBs.
double property2_ratio(const KnowledgeBase& l, const KnowledgeBase& l2, const UniversePtr& at,
                       ComplexitySearcher& searcher, const DecayFn& f,
                       const Interpretation* m = nullptr);

double total_variation(const ModelDistribution& a, const ModelDistribution& b);

} // namespace semanc
