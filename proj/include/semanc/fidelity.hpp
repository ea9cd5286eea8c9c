#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/encoding.hpp"
#include "semanc/interpretation.hpp"
#include "semanc/network.hpp"

namespace semanc {

enum class BaseDistance { Discrete, AtomFraction };
enum class SatAgg { Min, Product };

struct FidelityConfig {
    BaseDistance base = BaseDistance::AtomFraction;
    double d_max = 1.0; // cap for unbounded distances, > 0
    SatAgg sat_agg = SatAgg::Min;
};

// Fraction of atoms assigned different values: sum |m1(a)-m2(a)| / |At|.
double interpretation_distance(const Interpretation& m1, const Interpretation& m2);

struct KbDistance {
    double distance = 0.0;
    Interpretation witness; // nearest model
};

// Minimum distance from m to any model of l; throws when l is unsatisfiable.
// Distance ties resolve to the lowest interpretation index.
KbDistance distance_to_kb(const Interpretation& m, const KnowledgeBase& l, const UniversePtr& at);

struct FidelityReport {
    std::string measure;
    double value = 0.0;
    bool is_neural_model = false;               // Definition-1 subset verdict
    std::optional<Interpretation> witness;      // extremum attaining interpretation
    std::optional<std::string> witness_sentence;
};

// (d_max - Hausdorff(M_N, M_L)) / d_max, clamped at 0. With the discrete base
// distance this is 1 exactly when M_N = M_L.
FidelityReport fidelity_hausdorff(const Network& n, const EncodingSpec& spec,
                                  const KnowledgeBase& l, const FidelityConfig& cfg);

// Distance from a point to an interval, max(a - v, v - b, 0).
double interval_distance(double v, double lo, double hi);

// inf over network belief interpretations of SatAgg over sentences [a,b]:phi
// of 1 - d(M(phi), [a,b]). Requires fuzzy annotations on every sentence.
// Feedforward NAT nets with non-binary outputs need explicit input states.
FidelityReport fuzzy_fidelity(const Network& n, const EncodingSpec& spec,
                              const KnowledgeBase& fuzzy_l, const FidelityConfig& cfg,
                              const std::vector<NetworkState>* input_states = nullptr);

// Fuzzy interpretations the network's limit states represent (one per limit
// state under NAT; a single combined interpretation for feedforward DAT).
std::vector<Interpretation>
fuzzy_belief_interpretations(const Network& n, const EncodingSpec& spec,
                             const std::vector<NetworkState>* input_states = nullptr);

// Exact weighted model count of l where atom i is independently true with
// probability probs[i]. Gradient is with respect to the probabilities.
// |At| <= 20. Summation order is fixed (pairwise) for reproducibility.
struct Wmc {
    double p = 0.0;
    std::vector<double> grad;
};
Wmc weighted_model_count(const KnowledgeBase& l, const UniversePtr& at,
                         std::span<const double> probs, bool with_grad = false);

// P(M models l) with output neurons read as independent activation
// probabilities, keyed by atom name.
FidelityReport prob_fidelity(const std::vector<std::pair<std::string, double>>& atom_probs,
                             const KnowledgeBase& l);

} // namespace semanc
