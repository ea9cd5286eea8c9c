#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/interpretation.hpp"
#include "semanc/network.hpp"

namespace semanc {

enum class Agg { Union, Intersection };

// Neurons-as-atoms: an injective association from visible neurons to atoms.
// Feedforward nets with non-binary activations need an explicit input
// enumeration; binary nets enumerate input combinations on their own.
struct NatSpec {
    std::vector<std::pair<int, std::string>> atoms; // neuron id -> atom name
    std::vector<NetworkState> input_states;         // feedforward enumeration (optional)
};

// Distributed atoms: groups of input neurons carry domain elements, single
// output neurons carry ground-predicate truth values.
struct DatElement {
    std::string name;
    std::vector<double> values; // one per var-group neuron
};
struct DatVar {
    std::string name;
    std::vector<int> neurons;
    std::vector<DatElement> elements;
};
struct DatPred {
    std::string name;
    int neuron = 0;
    std::vector<std::string> args; // variable names
};
struct DatSpec {
    std::vector<DatVar> vars;
    std::vector<DatPred> preds;
    std::vector<std::vector<std::string>> inputs; // element names per var, one row per grounding
};

// Explicit map from sampled visible states to partial assignments.
struct TableEntry {
    std::vector<double> visible_values;
    std::vector<std::pair<std::string, bool>> assignment; // atom name -> value
};
struct TableSpec {
    std::vector<int> visible_neurons;
    std::vector<TableEntry> entries;
};

// An encoding map plus aggregation over a fixed atom universe, validated
// against the network it was built for. Hidden neurons cannot be referenced.
class EncodingSpec {
public:
    static EncodingSpec nat(const Network& n, NatSpec spec, Agg agg, UniversePtr at);
    static EncodingSpec dat(const Network& n, DatSpec spec, Agg agg, UniversePtr at);
    static EncodingSpec table(const Network& n, TableSpec spec, Agg agg, UniversePtr at);

    const UniversePtr& universe() const { return universe_; }
    Agg agg() const { return agg_; }
    bool is_nat() const { return kind_ == Kind::Nat; }
    bool is_dat() const { return kind_ == Kind::Dat; }
    const NatSpec& nat_spec() const { return nat_; }
    const DatSpec& dat_spec() const { return dat_; }
    const TableSpec& table_spec() const { return table_; }
    // Admissibility concerns raised at construction (e.g. a table whose image
    // ignores the visible values).
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Positions in the owning network, resolved at construction.
    const std::vector<int>& nat_positions() const { return nat_pos_; }
    const std::vector<std::vector<int>>& var_positions() const { return var_pos_; }
    const std::vector<int>& pred_positions() const { return pred_pos_; }
    const std::vector<int>& table_positions() const { return table_pos_; }

private:
    enum class Kind { Nat, Dat, Table };
    EncodingSpec(Kind k, Agg agg, UniversePtr at) : kind_(k), agg_(agg), universe_(std::move(at)) {}

    Kind kind_;
    Agg agg_;
    UniversePtr universe_;
    NatSpec nat_;
    DatSpec dat_;
    TableSpec table_;
    std::vector<int> nat_pos_;
    std::vector<std::vector<int>> var_pos_;
    std::vector<int> pred_pos_;
    std::vector<int> table_pos_;
    std::vector<std::string> warnings_;
};

// The set of interpretations a single network state stands for: a partial
// assignment over the mapped atoms, all other atoms free.
InterpretationSet apply_encoding(const EncodingSpec& spec, const NetworkState& x);

InterpretationSet aggregate(Agg agg, std::span<const InterpretationSet> sets);

// M_N: aggregation of the encodings of all limit states. For feedforward
// DAT encodings the declared input enumeration drives the limit set.
InterpretationSet belief_set(const Network& n, const EncodingSpec& spec);

// Builds the network states a DAT spec's input enumeration induces (variable
// neurons set, everything else zero).
std::vector<NetworkState> dat_input_states(const Network& n, const EncodingSpec& spec);

struct EncodingVerdict {
    InterpretationSet beliefs;                    // M_N
    bool is_neural_model = false;                 // {} != M_N subseteq M_L
    bool is_semantic_encoding = false;            // M_N == M_L
    std::optional<Interpretation> counterexample; // member of the offending difference
};

EncodingVerdict check_neural_model(const Network& n, const EncodingSpec& spec,
                                   const KnowledgeBase& l);
EncodingVerdict check_semantic_encoding(const Network& n, const EncodingSpec& spec,
                                        const KnowledgeBase& l);

// The exclusivity KB a softmax output layer enforces over Y_1..Y_n:
// each Y_i holds iff every other Y_j fails. n >= 2.
KnowledgeBase softmax_exclusivity_kb(int n);

} // namespace semanc
