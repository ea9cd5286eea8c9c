#include "semanc/train.hpp"

#include <cmath>
#include <limits>

#include "semanc/errors.hpp"
#include "semanc/fidelity.hpp"

namespace semanc {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

NetworkState forward_with_clamps(const Network& n,
                                 const std::vector<std::pair<int, double>>& clamps) {
    NetworkState x(static_cast<std::size_t>(n.size()), 0.0);
    for (const auto& [id, v] : clamps) x[static_cast<std::size_t>(n.pos_of(id))] = v;
    return update(n, x);
}

namespace {

bool atoms_only(const Formula& f) {
    switch (f.kind) {
    case FormulaKind::Atom: return true;
    case FormulaKind::Pred:
    case FormulaKind::Forall:
    case FormulaKind::Exists: return false;
    case FormulaKind::Not: return atoms_only(*f.lhs);
    default: return atoms_only(*f.lhs) && atoms_only(*f.rhs);
    }
}

// Per-grounding output probabilities checked against the constraint KB; the
// mean WMC over groundings. NaN when the KB is not a propositional formula
// over 0-ary output predicates.
double constraint_fidelity(const Network& n, const KnowledgeBase& kb, const DatSpec& binding,
                           const std::vector<VariableAssignment>& groundings) {
    if (kb.sentences.empty()) return std::numeric_limits<double>::quiet_NaN();
    for (const Sentence& s : kb.sentences)
        if (!atoms_only(*s.formula)) return std::numeric_limits<double>::quiet_NaN();
    std::vector<std::string> kb_atoms;
    for (const Sentence& s : kb.sentences) collect_atoms(*s.formula, kb_atoms);
    std::vector<const DatPred*> preds;
    for (const std::string& a : kb_atoms) {
        const DatPred* found = nullptr;
        for (const DatPred& p : binding.preds)
            if (p.name == a && (!found || p.args.empty())) found = &p;
        if (!found) return std::numeric_limits<double>::quiet_NaN();
        preds.push_back(found);
    }
    const UniversePtr at = make_universe(kb_atoms);

    std::vector<VariableAssignment> rows = groundings;
    if (rows.empty()) rows.push_back({});
    double sum = 0.0;
    for (const VariableAssignment& row : rows) {
        std::vector<std::pair<int, double>> clamps;
        for (const DatVar& v : binding.vars) {
            auto it = row.find(v.name);
            if (it == row.end()) continue;
            for (const DatElement& el : v.elements) {
                if (el.name != it->second) continue;
                for (std::size_t i = 0; i < v.neurons.size(); ++i)
                    clamps.push_back({v.neurons[i], el.values[i]});
                break;
            }
        }
        const NetworkState x = forward_with_clamps(n, clamps);
        std::vector<double> probs;
        probs.reserve(preds.size());
        for (const DatPred* p : preds) {
            double v = x[static_cast<std::size_t>(n.pos_of(p->neuron))];
            v = std::min(1.0, std::max(0.0, v));
            probs.push_back(v);
        }
        sum += weighted_model_count(kb, at, probs).p;
    }
    return sum / static_cast<double>(rows.size());
}

} // namespace

TrainResult train_soft(const Network& n, const KnowledgeBase& data_kb, const KnowledgeBase& kb,
                       const DatSpec& binding, const std::vector<VariableAssignment>& groundings,
                       const TrainConfig& cfg) {
    if (cfg.lr <= 0.0) throw DomainError("learning rate must be positive");
    if (cfg.epochs < 1) throw DomainError("epochs must be >= 1");
    if (cfg.temperature <= 0.0) throw DomainError("temperature must be positive");
    if (cfg.lambda_data < 0.0 || cfg.lambda_kb < 0.0)
        throw DomainError("loss weights must be non-negative");
    if (cfg.epsilon <= 0.0) throw DomainError("convergence tolerance must be positive");

    TrainResult result{n, {}, false, 0, ""};
    Network& net = result.net;

    if (cfg.init_scale > 0.0) {
        Rng rng(cfg.seed);
        std::vector<double> params = get_params(net);
        for (double& p : params) p = rng.uniform(-cfg.init_scale, cfg.init_scale);
        set_params(net, params);
    }

    const CircuitConfig ccfg{cfg.tnorm, cfg.quant, cfg.temperature, cfg.loss};
    std::vector<std::pair<LossCircuit, Annotation>> data_circuits, kb_circuits;
    for (const Sentence& s : data_kb.sentences)
        data_circuits.push_back({compile_loss(s.formula, groundings, net, binding, ccfg), s.ann});
    for (const Sentence& s : kb.sentences)
        kb_circuits.push_back({compile_loss(s.formula, groundings, net, binding, ccfg), s.ann});

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        CircuitEvaluator ev(net);
        Tape& tape = ev.tape();

        auto mean_loss = [&](std::vector<std::pair<LossCircuit, Annotation>>& circuits) {
            if (circuits.empty()) return tape.constant(0.0);
            Tape::Id sum = tape.constant(0.0);
            for (auto& [c, ann] : circuits) sum = tape.add(sum, ev.loss_of(c, ann));
            return tape.div(sum, tape.constant(static_cast<double>(circuits.size())));
        };

        const Tape::Id data_loss = mean_loss(data_circuits);
        const Tape::Id kb_loss = mean_loss(kb_circuits);
        const Tape::Id total =
            tape.add(tape.mul(tape.constant(cfg.lambda_data), data_loss),
                     tape.mul(tape.constant(cfg.lambda_kb), kb_loss));

        const double total_value = tape.value(total);
        if (std::isnan(total_value) || std::isinf(total_value)) {
            result.diverged = true;
            result.diagnostic = "loss diverged at epoch " + std::to_string(epoch);
            return result;
        }

        result.history.push_back({epoch, tape.value(data_loss), tape.value(kb_loss),
                                  constraint_fidelity(net, kb, binding, groundings)});
        result.epochs_run = epoch + 1;

        if (total_value <= cfg.epsilon) return result;

        const std::vector<double> grad = tape.gradient(total);
        std::vector<double> params = get_params(net);
        for (std::size_t i = 0; i < params.size(); ++i) params[i] -= cfg.lr * grad[i];
        set_params(net, params);
    }
    return result;
}

} // namespace semanc
