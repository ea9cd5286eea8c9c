#include "semanc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "semanc/errors.hpp"
#include "semanc/fidelity.hpp"

namespace semanc {

namespace {

bool has_variables(const Formula& f) {
    switch (f.kind) {
    case FormulaKind::Atom: return false;
    case FormulaKind::Pred: {
        // Any non-constant term counts.
        auto term_has_var = [](auto&& self, const Term& t) -> bool {
            if (t.kind == Term::Kind::Var) return true;
            for (const Term& a : t.args)
                if (self(self, a)) return true;
            return false;
        };
        for (const Term& t : f.terms)
            if (term_has_var(term_has_var, t)) return true;
        return false;
    }
    case FormulaKind::Not: return has_variables(*f.lhs);
    case FormulaKind::Forall:
    case FormulaKind::Exists: return true;
    default: return has_variables(*f.lhs) || has_variables(*f.rhs);
    }
}

bool has_atom_leaf(const Formula& f) {
    switch (f.kind) {
    case FormulaKind::Atom: return true;
    case FormulaKind::Pred: return false;
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists: return has_atom_leaf(*f.lhs);
    default: return has_atom_leaf(*f.lhs) || has_atom_leaf(*f.rhs);
    }
}

class Compiler {
public:
    Compiler(const Network& n, const DatSpec& binding, const CircuitConfig& cfg)
        : net_(n), binding_(binding) {
        circuit_.config = cfg;
        for (const DatVar& v : binding.vars) {
            for (int id : v.neurons)
                if (!n.has_id(id))
                    throw DomainError("binding references unknown neuron " + std::to_string(id));
            for (const DatElement& el : v.elements)
                if (el.values.size() != v.neurons.size())
                    throw DomainError("element width mismatch in binding: " + el.name);
        }
        for (const DatPred& p : binding.preds)
            if (!n.has_id(p.neuron))
                throw DomainError("binding references unknown neuron " + std::to_string(p.neuron));
    }

    LossCircuit compile(const FormulaPtr& sentence,
                        const std::vector<VariableAssignment>& groundings) {
        std::vector<const VariableAssignment*> rows;
        for (const auto& g : groundings) rows.push_back(&g);

        const VariableAssignment empty;
        if (!has_variables(*sentence)) {
            if (rows.empty()) rows.push_back(&empty);
            if (rows.size() > 1 && has_atom_leaf(*sentence)) {
                // Implicit per-row universal: the output-layer constraint
                // applies at every grounding.
                std::vector<int> kids;
                for (const auto* row : rows) kids.push_back(compile_rec(*sentence, {row}));
                circuit_.root = push_node(CircuitNode::Op::ForallAgg, std::move(kids));
            } else {
                circuit_.root = compile_rec(*sentence, {rows.front()});
            }
        } else {
            if (rows.empty()) throw DomainError("empty grounding batch");
            circuit_.root = compile_rec(*sentence, rows);
        }
        return std::move(circuit_);
    }

private:
    int push_node(CircuitNode::Op op, std::vector<int> kids, double constant = 0.0,
                  int leaf = -1) {
        circuit_.nodes.push_back({op, std::move(kids), constant, leaf});
        return static_cast<int>(circuit_.nodes.size()) - 1;
    }

    int compile_rec(const Formula& f, const std::vector<const VariableAssignment*>& rows) {
        switch (f.kind) {
        case FormulaKind::Not:
            return push_node(CircuitNode::Op::Not, {compile_rec(*f.lhs, rows)});
        case FormulaKind::And:
            return push_node(CircuitNode::Op::And,
                             {compile_rec(*f.lhs, rows), compile_rec(*f.rhs, rows)});
        case FormulaKind::Or:
            return push_node(CircuitNode::Op::Or,
                             {compile_rec(*f.lhs, rows), compile_rec(*f.rhs, rows)});
        case FormulaKind::Implies:
            return push_node(CircuitNode::Op::Implies,
                             {compile_rec(*f.lhs, rows), compile_rec(*f.rhs, rows)});
        case FormulaKind::Iff: {
            // (a -> b) & (b -> a) under the configured t-norm.
            const int a = compile_rec(*f.lhs, rows);
            const int b = compile_rec(*f.rhs, rows);
            const int ab = push_node(CircuitNode::Op::Implies, {a, b});
            const int ba = push_node(CircuitNode::Op::Implies, {b, a});
            return push_node(CircuitNode::Op::And, {ab, ba});
        }
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            if (rows.empty()) throw DomainError("empty grounding batch");
            // Group rows by the quantified variable's value, first-seen order.
            std::vector<std::string> values;
            std::vector<std::vector<const VariableAssignment*>> groups;
            for (const auto* row : rows) {
                auto it = row->find(f.name);
                if (it == row->end())
                    throw DomainError("grounding rows do not assign variable " + f.name);
                auto at = std::find(values.begin(), values.end(), it->second);
                if (at == values.end()) {
                    values.push_back(it->second);
                    groups.push_back({row});
                } else {
                    groups[static_cast<std::size_t>(at - values.begin())].push_back(row);
                }
            }
            std::vector<int> kids;
            for (const auto& group : groups) kids.push_back(compile_rec(*f.lhs, group));
            return push_node(f.kind == FormulaKind::Forall ? CircuitNode::Op::ForallAgg
                                                           : CircuitNode::Op::ExistsAgg,
                             std::move(kids));
        }
        case FormulaKind::Atom:
            return atom_leaf(f, rows);
        case FormulaKind::Pred:
            return pred_leaf(f, rows);
        }
        throw DomainError("bad formula");
    }

    const DatPred& find_pred(const std::string& name, std::size_t arity) {
        for (const DatPred& p : binding_.preds)
            if (p.name == name && p.args.size() == arity) return p;
        throw DomainError("unmapped predicate: " + name);
    }

    const DatVar& find_var(const std::string& name, std::size_t* index = nullptr) {
        for (std::size_t i = 0; i < binding_.vars.size(); ++i) {
            if (binding_.vars[i].name == name) {
                if (index) *index = i;
                return binding_.vars[i];
            }
        }
        throw DomainError("predicate argument without var group: " + name);
    }

    std::string resolve_term(const Term& t, const std::vector<const VariableAssignment*>& rows) {
        if (t.kind == Term::Kind::Func)
            throw DomainError("function terms are not supported in loss circuits");
        if (t.kind == Term::Kind::Const) return t.name;
        // Variable: every row in scope must agree.
        auto it = rows.front()->find(t.name);
        if (it == rows.front()->end())
            throw DomainError("grounding rows do not assign variable " + t.name);
        for (const auto* row : rows) {
            auto other = row->find(t.name);
            if (other == row->end() || other->second != it->second)
                throw DomainError("grounding rows disagree on variable " + t.name +
                                  " at a predicate leaf");
        }
        return it->second;
    }

    // Elements live with their var group, but grounding may route another
    // group's element into a slot (e.g. R2(y) against a slot laid out for x);
    // any group's element of matching width serves.
    const DatElement& element_of(const DatVar& var, const std::string& name) {
        for (const DatElement& el : var.elements)
            if (el.name == name) return el;
        for (const DatVar& other : binding_.vars)
            for (const DatElement& el : other.elements)
                if (el.name == name && el.values.size() == var.neurons.size()) return el;
        throw DomainError("unknown element '" + name + "' for variable " + var.name);
    }

    int make_leaf(std::string ground_atom, int neuron_id,
                  std::vector<std::pair<int, double>> tuple) {
        std::sort(tuple.begin(), tuple.end());
        int key = -1;
        for (std::size_t i = 0; i < circuit_.input_tuples.size(); ++i)
            if (circuit_.input_tuples[i] == tuple) key = static_cast<int>(i);
        if (key < 0) {
            circuit_.input_tuples.push_back(std::move(tuple));
            key = static_cast<int>(circuit_.input_tuples.size()) - 1;
        }
        for (std::size_t i = 0; i < circuit_.leaves.size(); ++i) {
            const CircuitLeaf& l = circuit_.leaves[i];
            if (l.pred_neuron == neuron_id && l.input_key == key) {
                return push_node(CircuitNode::Op::Leaf, {}, 0.0, static_cast<int>(i));
            }
        }
        circuit_.leaves.push_back({std::move(ground_atom), neuron_id, key});
        return push_node(CircuitNode::Op::Leaf, {}, 0.0,
                         static_cast<int>(circuit_.leaves.size()) - 1);
    }

    // Clamps for every var-group neuron; unassigned groups stay at 0.
    std::vector<std::pair<int, double>>
    base_tuple(const std::map<std::string, std::string>& elems_by_var) {
        std::vector<std::pair<int, double>> tuple;
        for (const DatVar& v : binding_.vars) {
            auto it = elems_by_var.find(v.name);
            for (std::size_t i = 0; i < v.neurons.size(); ++i) {
                const double value =
                    it == elems_by_var.end() ? 0.0 : element_of(v, it->second).values[i];
                tuple.push_back({v.neurons[i], value});
            }
        }
        return tuple;
    }

    int pred_leaf(const Formula& f, const std::vector<const VariableAssignment*>& rows) {
        const DatPred& p = find_pred(f.name, f.terms.size());
        std::map<std::string, std::string> elems_by_var;
        std::vector<std::string> elems;
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
            const std::string elem = resolve_term(f.terms[i], rows);
            elems.push_back(elem);
            const DatVar& var = find_var(p.args[i]);
            element_of(var, elem); // validates the element exists
            elems_by_var[var.name] = elem;
        }
        return make_leaf(ground_atom_name(f.name, elems), p.neuron, base_tuple(elems_by_var));
    }

    // A 0-ary atom names an output neuron directly; its value is read under
    // the current row's clamps, whatever arity the binding declares.
    int atom_leaf(const Formula& f, const std::vector<const VariableAssignment*>& rows) {
        if (rows.size() > 1)
            throw DomainError("0-ary atom inside a quantified sentence: " + f.name);
        const DatPred* found = nullptr;
        for (const DatPred& p : binding_.preds)
            if (p.name == f.name && (!found || p.args.empty())) found = &p;
        if (!found) throw DomainError("unmapped predicate: " + f.name);
        std::map<std::string, std::string> elems_by_var(rows.front()->begin(),
                                                        rows.front()->end());
        return make_leaf(f.name, found->neuron, base_tuple(std::move(elems_by_var)));
    }

    const Network& net_;
    const DatSpec& binding_;
    LossCircuit circuit_;
};

// Shared scalar semantics for the plain-double path.
double node_and(TNorm t, double a, double b) { return fuzzy_and(t, a, b); }

double softmin_plain(const std::vector<double>& v, double temp) {
    const double m = *std::min_element(v.begin(), v.end());
    double s = 0.0;
    for (double x : v) s += std::exp((m - x) / temp);
    return m - temp * (std::log(s) - std::log(static_cast<double>(v.size())));
}

double softmax_avg_plain(const std::vector<double>& v, double temp) {
    const double m = *std::max_element(v.begin(), v.end());
    double den = 0.0, num = 0.0;
    for (double x : v) {
        const double w = std::exp((x - m) / temp);
        den += w;
        num += w * x;
    }
    return num / den;
}

} // namespace

LossCircuit compile_loss(const FormulaPtr& sentence,
                         const std::vector<VariableAssignment>& groundings, const Network& n,
                         const DatSpec& binding, const CircuitConfig& cfg) {
    return Compiler(n, binding, cfg).compile(sentence, groundings);
}

double eval_circuit(const LossCircuit& c, std::span<const double> leaf_values) {
    if (leaf_values.size() != c.leaves.size())
        throw DomainError("leaf value count does not match circuit leaves");
    std::vector<double> val(c.nodes.size(), 0.0);
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const CircuitNode& nd = c.nodes[i];
        switch (nd.op) {
        case CircuitNode::Op::Leaf: val[i] = leaf_values[static_cast<std::size_t>(nd.leaf)]; break;
        case CircuitNode::Op::Const: val[i] = nd.constant; break;
        case CircuitNode::Op::Not:
            val[i] = 1.0 - val[static_cast<std::size_t>(nd.kids[0])];
            break;
        case CircuitNode::Op::And:
            val[i] = node_and(c.config.tnorm, val[static_cast<std::size_t>(nd.kids[0])],
                              val[static_cast<std::size_t>(nd.kids[1])]);
            break;
        case CircuitNode::Op::Or:
            val[i] = fuzzy_or(c.config.tnorm, val[static_cast<std::size_t>(nd.kids[0])],
                              val[static_cast<std::size_t>(nd.kids[1])]);
            break;
        case CircuitNode::Op::Implies:
            val[i] = fuzzy_implies(c.config.tnorm, val[static_cast<std::size_t>(nd.kids[0])],
                                   val[static_cast<std::size_t>(nd.kids[1])]);
            break;
        case CircuitNode::Op::ForallAgg:
        case CircuitNode::Op::ExistsAgg: {
            std::vector<double> kid_vals;
            kid_vals.reserve(nd.kids.size());
            for (int k : nd.kids) kid_vals.push_back(val[static_cast<std::size_t>(k)]);
            const bool universal = nd.op == CircuitNode::Op::ForallAgg;
            if (c.config.quant == QuantifierMode::HardMin) {
                val[i] = universal ? *std::min_element(kid_vals.begin(), kid_vals.end())
                                   : *std::max_element(kid_vals.begin(), kid_vals.end());
            } else {
                val[i] = universal ? softmin_plain(kid_vals, c.config.temperature)
                                   : softmax_avg_plain(kid_vals, c.config.temperature);
            }
            break;
        }
        }
    }
    return val[static_cast<std::size_t>(c.root)];
}

std::vector<double> get_params(const Network& n) {
    std::vector<double> out;
    for (const Neuron& nr : n.neurons()) out.push_back(nr.bias);
    for (const Edge& e : n.edges()) out.push_back(e.weight);
    return out;
}

void set_params(Network& n, std::span<const double> params) {
    const std::size_t nb = static_cast<std::size_t>(n.size());
    if (params.size() != nb + n.edges().size())
        throw DomainError("parameter count mismatch");
    for (int i = 0; i < n.size(); ++i) n.set_bias(i, params[static_cast<std::size_t>(i)]);
    for (std::size_t e = 0; e < n.edges().size(); ++e)
        n.set_weight(static_cast<int>(e), params[nb + e]);
}

CircuitEvaluator::CircuitEvaluator(const Network& n) : net_(n) {
    if (n.mode() != UpdateMode::Feedforward)
        throw DomainError("loss circuits require a feedforward network");
    for (const Neuron& nr : n.neurons()) {
        if (n.has_incoming(n.pos_of(nr.id)) && nr.activation == Activation::StepGeq0)
            throw DomainError("step activation on a differentiable path (neuron " +
                              std::to_string(nr.id) + ")");
        bias_params_.push_back(tape_.param(nr.bias));
    }
    for (const Edge& e : n.edges()) weight_params_.push_back(tape_.param(e.weight));
}

Tape::Id CircuitEvaluator::forward_output(const std::vector<std::pair<int, double>>& tuple,
                                          int neuron_id) {
    auto cached = forward_cache_.find(tuple);
    if (cached == forward_cache_.end()) {
        std::vector<Tape::Id> values(static_cast<std::size_t>(net_.size()), -1);
        // Clamped inputs are constants; everything else settles in
        // topological order through tape ops.
        for (const auto& [id, v] : tuple)
            values[static_cast<std::size_t>(net_.pos_of(id))] = tape_.constant(v);
        for (int pos : net_.topological_order()) {
            auto& slot = values[static_cast<std::size_t>(pos)];
            if (!net_.has_incoming(pos)) {
                if (slot < 0) slot = tape_.constant(0.0); // unclamped input
                continue;
            }
            if (slot >= 0) continue; // clamped non-input stays fixed
            Tape::Id net_input = bias_params_[static_cast<std::size_t>(pos)];
            for (const auto& [src, e] : net_.incoming()[static_cast<std::size_t>(pos)]) {
                const Tape::Id term =
                    tape_.mul(weight_params_[static_cast<std::size_t>(e)],
                              values[static_cast<std::size_t>(src)]);
                net_input = tape_.add(net_input, term);
            }
            switch (net_.neuron_at(pos).activation) {
            case Activation::Sigmoid: slot = tape_.sigmoid(net_input); break;
            case Activation::Relu: slot = tape_.relu(net_input); break;
            case Activation::Identity: slot = net_input; break;
            case Activation::StepGeq0:
                throw DomainError("step activation on a differentiable path");
            }
        }
        cached = forward_cache_.emplace(tuple, std::move(values)).first;
    }
    return cached->second[static_cast<std::size_t>(net_.pos_of(neuron_id))];
}

Tape::Id CircuitEvaluator::truth_of(const LossCircuit& c) {
    std::vector<Tape::Id> leaf_ids;
    leaf_ids.reserve(c.leaves.size());
    for (const CircuitLeaf& l : c.leaves)
        leaf_ids.push_back(
            forward_output(c.input_tuples[static_cast<std::size_t>(l.input_key)], l.pred_neuron));

    std::vector<Tape::Id> val(c.nodes.size(), -1);
    const TNorm t = c.config.tnorm;
    auto tnorm_node = [&](Tape::Id a, Tape::Id b) -> Tape::Id {
        switch (t) {
        case TNorm::Min: return tape_.min2(a, b);
        case TNorm::Product: return tape_.mul(a, b);
        case TNorm::Lukasiewicz:
            return tape_.relu(tape_.sub(tape_.add(a, b), tape_.constant(1.0)));
        }
        return -1;
    };
    auto or_node = [&](Tape::Id a, Tape::Id b) {
        return tape_.one_minus(tnorm_node(tape_.one_minus(a), tape_.one_minus(b)));
    };

    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const CircuitNode& nd = c.nodes[i];
        switch (nd.op) {
        case CircuitNode::Op::Leaf:
            val[i] = leaf_ids[static_cast<std::size_t>(nd.leaf)];
            break;
        case CircuitNode::Op::Const:
            val[i] = tape_.constant(nd.constant);
            break;
        case CircuitNode::Op::Not:
            val[i] = tape_.one_minus(val[static_cast<std::size_t>(nd.kids[0])]);
            break;
        case CircuitNode::Op::And:
            val[i] = tnorm_node(val[static_cast<std::size_t>(nd.kids[0])],
                                val[static_cast<std::size_t>(nd.kids[1])]);
            break;
        case CircuitNode::Op::Or:
            val[i] = or_node(val[static_cast<std::size_t>(nd.kids[0])],
                             val[static_cast<std::size_t>(nd.kids[1])]);
            break;
        case CircuitNode::Op::Implies:
            val[i] = or_node(tape_.one_minus(val[static_cast<std::size_t>(nd.kids[0])]),
                             val[static_cast<std::size_t>(nd.kids[1])]);
            break;
        case CircuitNode::Op::ForallAgg:
        case CircuitNode::Op::ExistsAgg: {
            std::vector<Tape::Id> kid_ids;
            kid_ids.reserve(nd.kids.size());
            for (int k : nd.kids) kid_ids.push_back(val[static_cast<std::size_t>(k)]);
            const bool universal = nd.op == CircuitNode::Op::ForallAgg;
            if (c.config.quant == QuantifierMode::HardMin) {
                Tape::Id acc = kid_ids[0];
                for (std::size_t k = 1; k < kid_ids.size(); ++k)
                    acc = universal ? tape_.min2(acc, kid_ids[k]) : tape_.max2(acc, kid_ids[k]);
                val[i] = acc;
            } else if (universal) {
                // Stabilized log-sum-exp softmin: m - T log((1/k) sum e^{(m-v)/T}).
                double m = tape_.value(kid_ids[0]);
                for (Tape::Id id : kid_ids) m = std::min(m, tape_.value(id));
                const double temp = c.config.temperature;
                Tape::Id sum = tape_.constant(0.0);
                for (Tape::Id id : kid_ids) {
                    const Tape::Id z = tape_.div(tape_.sub(tape_.constant(m), id),
                                                 tape_.constant(temp));
                    sum = tape_.add(sum, tape_.exp_(z));
                }
                const Tape::Id log_mean = tape_.sub(
                    tape_.log_(sum),
                    tape_.constant(std::log(static_cast<double>(kid_ids.size()))));
                val[i] = tape_.sub(tape_.constant(m),
                                   tape_.mul(tape_.constant(temp), log_mean));
            } else {
                // Softmax-weighted average, stabilized at the max.
                double m = tape_.value(kid_ids[0]);
                for (Tape::Id id : kid_ids) m = std::max(m, tape_.value(id));
                const double temp = c.config.temperature;
                Tape::Id num = tape_.constant(0.0);
                Tape::Id den = tape_.constant(0.0);
                for (Tape::Id id : kid_ids) {
                    const Tape::Id w = tape_.exp_(
                        tape_.div(tape_.sub(id, tape_.constant(m)), tape_.constant(temp)));
                    num = tape_.add(num, tape_.mul(w, id));
                    den = tape_.add(den, w);
                }
                val[i] = tape_.div(num, den);
            }
            break;
        }
        }
    }
    return val[static_cast<std::size_t>(c.root)];
}

Tape::Id CircuitEvaluator::loss_of(const LossCircuit& c, const Annotation& ann) {
    const Tape::Id truth = truth_of(c);
    Tape::Id satisfaction = truth;
    if (const auto* fi = std::get_if<FuzzyInterval>(&ann)) {
        // 1 - d(truth, [lo, hi])
        const Tape::Id below = tape_.sub(tape_.constant(fi->lo), truth);
        const Tape::Id above = tape_.sub(truth, tape_.constant(fi->hi));
        const Tape::Id dist = tape_.max2(tape_.max2(below, above), tape_.constant(0.0));
        satisfaction = tape_.one_minus(dist);
    } else if (std::holds_alternative<PenaltyWeight>(ann)) {
        throw DomainError("penalty sentences cannot be compiled to loss circuits");
    }
    return c.config.loss == LossForm::OneMinus ? tape_.one_minus(satisfaction)
                                               : tape_.neg(tape_.log_(satisfaction));
}

LossEval eval_loss_and_grad(const LossCircuit& c, const Network& n) {
    CircuitEvaluator ev(n);
    const Tape::Id truth = ev.truth_of(c);
    const Tape::Id loss = c.config.loss == LossForm::OneMinus
                              ? ev.tape().one_minus(truth)
                              : ev.tape().neg(ev.tape().log_(truth));
    LossEval out;
    out.truth = ev.tape().value(truth);
    out.loss = ev.tape().value(loss);
    out.grad = ev.tape().gradient(loss);
    out.nondifferentiable_tie = ev.tape().tie_observed();
    return out;
}

GradCheckReport grad_check(const LossCircuit& c, const Network& n, double h, double tol) {
    if (h <= 0.0) throw DomainError("grad_check requires h > 0");
    const LossEval base = eval_loss_and_grad(c, n);
    GradCheckReport report;
    if (base.nondifferentiable_tie) {
        report.passed = true;
        report.skipped_nondifferentiable = true;
        return report;
    }

    Network work = n;
    const std::vector<double> params = get_params(n);
    report.passed = true;
    for (std::size_t i = 0; i < params.size(); ++i) {
        std::vector<double> p = params;
        p[i] = params[i] + h;
        set_params(work, p);
        const double up = eval_loss_and_grad(c, work).loss;
        p[i] = params[i] - h;
        set_params(work, p);
        const double down = eval_loss_and_grad(c, work).loss;
        const double numeric = (up - down) / (2.0 * h);
        const double analytic = base.grad[i];
        const double denom = std::max(std::abs(analytic), std::abs(numeric));
        ++report.params_checked;
        if (denom < 1e-6) {
            const double abs_err = std::abs(analytic - numeric);
            report.max_abs_err_at_zero = std::max(report.max_abs_err_at_zero, abs_err);
            if (abs_err > 1e-8) report.passed = false;
        } else {
            const double rel = std::abs(analytic - numeric) / denom;
            report.max_rel_err = std::max(report.max_rel_err, rel);
            if (rel > tol) report.passed = false;
        }
    }
    set_params(work, params);
    return report;
}

SemanticRegLoss semantic_reg_loss(std::span<const double> output_probs,
                                  const KnowledgeBase& constraint, const UniversePtr& at) {
    const Wmc wmc = weighted_model_count(constraint, at, output_probs, true);
    if (wmc.p == 0.0)
        throw DomainError("constraint unsatisfiable under the given output probabilities");
    SemanticRegLoss out;
    out.p = wmc.p;
    out.loss = -std::log(wmc.p);
    out.grad.resize(wmc.grad.size());
    for (std::size_t i = 0; i < wmc.grad.size(); ++i) out.grad[i] = -wmc.grad[i] / wmc.p;
    return out;
}

} // namespace semanc
