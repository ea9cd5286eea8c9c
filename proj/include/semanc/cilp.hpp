#pragma once

#include <optional>

#include "semanc/logic_program.hpp"
#include "semanc/network.hpp"

namespace semanc {

// Translates a logic program into a recurrent threshold network: one input
// and one output neuron per atom (both atom-labeled), one hidden neuron per
// rule. A positive body literal contributes weight +1, a negative one -1;
// the hidden bias is minus the positive-literal count, so the unit fires
// exactly when its body holds. Rule->head edges have weight +1 with head
// bias -1, and identity links feed each output back to its input.
Network compile_cilp(const LogicProgram& p);

// Input/output neuron ids of a compiled network, in the order of `atoms`.
// Inputs are the atom-labeled targets of the recurrent links.
struct CilpLayout {
    std::vector<std::string> atoms;
    std::vector<int> input_ids;
    std::vector<int> output_ids;
};

CilpLayout cilp_layout(const Network& n);

// One program step through the network: clamp the input neurons to m, settle
// hidden then output layers, read the outputs. Equals tp_step when the
// network compiles the program.
Interpretation cilp_sweep(const Network& n, const CilpLayout& layout, const Interpretation& m);

struct TpEquivalence {
    bool equivalent = true;
    std::optional<Interpretation> countermodel; // first state where sweeps differ
};

// Exhaustive check over all 2^|At| interpretations that one network sweep
// equals tp_step. |At| <= 20.
TpEquivalence verify_tp_equivalence(const LogicProgram& p, const Network& n);

// Interpretations fixed under the clamped sweep (the network's stable states
// under value-clamped iteration). |At| <= 20.
std::vector<Interpretation> clamp_stable_states(const Network& n, const CilpLayout& layout);

} // namespace semanc
