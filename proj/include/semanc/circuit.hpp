#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/encoding.hpp"
#include "semanc/eval.hpp"
#include "semanc/network.hpp"
#include "semanc/tape.hpp"

namespace semanc {

enum class QuantifierMode { HardMin, SoftMin };
enum class LossForm { OneMinus, NegLog };

struct CircuitConfig {
    TNorm tnorm = TNorm::Product;
    QuantifierMode quant = QuantifierMode::SoftMin;
    double temperature = 0.1; // softmin/softmax temperature
    LossForm loss = LossForm::NegLog;
};

// Differentiable truth circuit over network outputs.
//
// Leaves are the network's predicate outputs for specific groundings. A
// predicate leaf clamps its own argument var-groups (other var-groups clamp
// to 0); a 0-ary atom leaf clamps every variable of its grounding row.
// Universal quantifiers aggregate over the distinct values their variable
// takes in the grounding batch (hard min or temperature softmin), existential
// ones mirror that with max / softmax-weighted average.
struct CircuitNode {
    enum class Op { Leaf, Const, Not, And, Or, Implies, ForallAgg, ExistsAgg };
    Op op = Op::Const;
    std::vector<int> kids;
    double constant = 0.0; // Const only
    int leaf = -1;         // Leaf only
};

struct CircuitLeaf {
    std::string ground_atom; // e.g. P(d0)
    int pred_neuron = 0;     // output neuron id
    int input_key = 0;       // index into LossCircuit::input_tuples
};

struct LossCircuit {
    std::vector<CircuitNode> nodes; // topological, root last
    std::vector<CircuitLeaf> leaves;
    std::vector<std::vector<std::pair<int, double>>> input_tuples; // (neuron id, clamp value)
    int root = -1;
    CircuitConfig config;
};

// Compiles one sentence against a DAT binding (vars/preds; a DatSpec's
// input enumeration is not used here). Every variable a leaf needs must be
// fixed by its quantifier path or the grounding rows. A variable-free
// sentence compiled against several rows is applied per row under an
// implicit universal aggregator.
LossCircuit compile_loss(const FormulaPtr& sentence,
                         const std::vector<VariableAssignment>& groundings, const Network& n,
                         const DatSpec& binding, const CircuitConfig& cfg);

// Truth value of the circuit on raw leaf values (no network), using the same
// operator semantics as the differentiable path.
double eval_circuit(const LossCircuit& c, std::span<const double> leaf_values);

// Parameters are every bias (neuron order) followed by every edge weight
// (edge order).
std::vector<double> get_params(const Network& n);
void set_params(Network& n, std::span<const double> params);

// Builds tape forwards of a feedforward network shared across circuits;
// network forward passes are cached per distinct input tuple.
class CircuitEvaluator {
public:
    explicit CircuitEvaluator(const Network& n);

    Tape::Id truth_of(const LossCircuit& c);
    // Loss of a sentence: plain truth loss, or distance-to-interval loss for
    // fuzzy annotations.
    Tape::Id loss_of(const LossCircuit& c, const Annotation& ann);

    Tape& tape() { return tape_; }
    const Network& net() const { return net_; }

private:
    Tape::Id forward_output(const std::vector<std::pair<int, double>>& tuple, int neuron_id);

    const Network& net_;
    Tape tape_;
    std::vector<Tape::Id> bias_params_;
    std::vector<Tape::Id> weight_params_;
    std::map<std::vector<std::pair<int, double>>, std::vector<Tape::Id>> forward_cache_;
};

struct LossEval {
    double loss = 0.0;
    double truth = 0.0;
    std::vector<double> grad; // biases then weights
    bool nondifferentiable_tie = false;
};

// Reverse-mode loss and gradient through circuit and network.
LossEval eval_loss_and_grad(const LossCircuit& c, const Network& n);

struct GradCheckReport {
    double max_rel_err = 0.0;
    double max_abs_err_at_zero = 0.0;
    bool passed = false;
    bool skipped_nondifferentiable = false;
    int params_checked = 0;
};

// Central-difference validation of eval_loss_and_grad. Parameters whose
// analytic and numeric gradients are both below 1e-6 in magnitude compare
// absolutely at 1e-8; the rest compare relatively at tol. Hard-min ties are
// skipped and flagged.
GradCheckReport grad_check(const LossCircuit& c, const Network& n, double h, double tol);

struct SemanticRegLoss {
    double p = 0.0;    // probability the outputs satisfy the constraint
    double loss = 0.0; // -log p
    std::vector<double> grad; // d loss / d prob
};

// Exact weighted-model-count loss over independent output probabilities.
// Throws when p = 0 (the constraint is unsatisfiable under the hard
// assignments the probabilities force).
SemanticRegLoss semantic_reg_loss(std::span<const double> output_probs,
                                  const KnowledgeBase& constraint, const UniversePtr& at);

} // namespace semanc
