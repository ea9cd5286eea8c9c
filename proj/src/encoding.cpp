#include "semanc/encoding.hpp"

#include <algorithm>
#include <set>

#include "semanc/errors.hpp"
#include "semanc/models.hpp"

namespace semanc {

namespace {

int visible_position(const Network& n, int id, const char* what) {
    const int pos = n.pos_of(id);
    if (!is_visible(n.neuron_at(pos).role))
        throw DomainError(std::string(what) + " references hidden neuron " + std::to_string(id));
    return pos;
}

} // namespace

EncodingSpec EncodingSpec::nat(const Network& n, NatSpec spec, Agg agg, UniversePtr at) {
    EncodingSpec e(Kind::Nat, agg, std::move(at));
    std::set<int> seen_ids;
    std::set<std::string> seen_atoms;
    for (const auto& [id, atom] : spec.atoms) {
        e.nat_pos_.push_back(visible_position(n, id, "NAT spec"));
        if (!seen_ids.insert(id).second)
            throw DomainError("NAT spec maps neuron twice: " + std::to_string(id));
        if (!seen_atoms.insert(atom).second)
            throw DomainError("NAT association not injective: " + atom);
        if (e.universe_->index_of(atom) < 0)
            throw DomainError("NAT atom outside universe: " + atom);
    }
    e.nat_ = std::move(spec);
    return e;
}

EncodingSpec EncodingSpec::dat(const Network& n, DatSpec spec, Agg agg, UniversePtr at) {
    EncodingSpec e(Kind::Dat, agg, std::move(at));
    for (const DatVar& v : spec.vars) {
        std::vector<int> pos;
        for (int id : v.neurons) pos.push_back(visible_position(n, id, "DAT var group"));
        for (const DatElement& el : v.elements)
            if (el.values.size() != v.neurons.size())
                throw DomainError("element value count does not match var group width: " +
                                  el.name);
        e.var_pos_.push_back(std::move(pos));
    }
    for (const DatPred& p : spec.preds) {
        e.pred_pos_.push_back(visible_position(n, p.neuron, "DAT pred output"));
        for (const std::string& arg : p.args) {
            const bool known = std::any_of(spec.vars.begin(), spec.vars.end(),
                                           [&](const DatVar& v) { return v.name == arg; });
            if (!known) throw DomainError("DAT pred argument without var group: " + arg);
        }
    }
    for (const auto& row : spec.inputs)
        if (row.size() != spec.vars.size())
            throw DomainError("DAT input row arity does not match var count");
    e.dat_ = std::move(spec);
    return e;
}

EncodingSpec EncodingSpec::table(const Network& n, TableSpec spec, Agg agg, UniversePtr at) {
    EncodingSpec e(Kind::Table, agg, std::move(at));
    for (int id : spec.visible_neurons)
        e.table_pos_.push_back(visible_position(n, id, "table spec"));
    for (const TableEntry& entry : spec.entries) {
        if (entry.visible_values.size() != spec.visible_neurons.size())
            throw DomainError("table entry width does not match visible neuron count");
        for (const auto& [atom, value] : entry.assignment) {
            (void)value;
            if (e.universe_->index_of(atom) < 0)
                throw DomainError("table assignment atom outside universe: " + atom);
        }
    }
    // Arbitrary-map guard: a table that returns the same assignment for
    // every distinct visible state carries no information about the network.
    if (spec.entries.size() >= 2) {
        std::set<std::vector<double>> keys;
        std::set<std::vector<std::pair<std::string, bool>>> images;
        for (const TableEntry& entry : spec.entries) {
            keys.insert(entry.visible_values);
            auto sorted = entry.assignment;
            std::sort(sorted.begin(), sorted.end());
            images.insert(sorted);
        }
        if (keys.size() >= 2 && images.size() == 1)
            e.warnings_.push_back("table image ignores visible values (constant map)");
    }
    e.table_ = std::move(spec);
    return e;
}

namespace {

PartialAssignment to_partial(const UniversePtr& at,
                             const std::vector<std::pair<std::string, bool>>& named) {
    PartialAssignment cube;
    for (const auto& [atom, value] : named) {
        const int i = at->index_of(atom);
        if (i < 0) throw DomainError("atom outside universe: " + atom);
        cube.push_back({i, value});
    }
    std::sort(cube.begin(), cube.end());
    return cube;
}

bool crisp_bit(double v, const char* what) {
    if (v == 0.0) return false;
    if (v == 1.0) return true;
    throw DomainError(std::string("non-binary value under crisp ") + what);
}

// The element whose stored values match the var-group neurons in x.
const DatElement& match_element(const DatVar& var, const std::vector<int>& positions,
                                const NetworkState& x) {
    for (const DatElement& el : var.elements) {
        bool ok = true;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (x[static_cast<std::size_t>(positions[i])] != el.values[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return el;
    }
    throw DomainError("no element matches the var-input values for " + var.name);
}

} // namespace

InterpretationSet apply_encoding(const EncodingSpec& spec, const NetworkState& x) {
    const UniversePtr& at = spec.universe();
    if (spec.is_nat()) {
        std::vector<std::pair<std::string, bool>> named;
        const auto& pairs = spec.nat_spec().atoms;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const double v = x[static_cast<std::size_t>(spec.nat_positions()[i])];
            named.push_back({pairs[i].second, crisp_bit(v, "NAT encoding")});
        }
        return InterpretationSet::from_cube(at, to_partial(at, named));
    }
    if (spec.is_dat()) {
        const DatSpec& d = spec.dat_spec();
        std::vector<std::pair<std::string, bool>> named;
        for (std::size_t p = 0; p < d.preds.size(); ++p) {
            const DatPred& pr = d.preds[p];
            std::vector<std::string> elems;
            for (const std::string& arg : pr.args) {
                for (std::size_t v = 0; v < d.vars.size(); ++v) {
                    if (d.vars[v].name == arg) {
                        elems.push_back(
                            match_element(d.vars[v], spec.var_positions()[v], x).name);
                        break;
                    }
                }
            }
            const double value = x[static_cast<std::size_t>(spec.pred_positions()[p])];
            named.push_back({ground_atom_name(pr.name, elems), crisp_bit(value, "DAT encoding")});
        }
        return InterpretationSet::from_cube(at, to_partial(at, named));
    }
    // Table: look up the visible projection.
    const TableSpec& t = spec.table_spec();
    std::vector<double> key;
    key.reserve(spec.table_positions().size());
    for (int pos : spec.table_positions()) key.push_back(x[static_cast<std::size_t>(pos)]);
    for (const TableEntry& entry : t.entries) {
        if (entry.visible_values == key)
            return InterpretationSet::from_cube(at, to_partial(at, entry.assignment));
    }
    throw DomainError("network state not covered by table encoding");
}

InterpretationSet aggregate(Agg agg, std::span<const InterpretationSet> sets) {
    if (sets.empty()) throw DomainError("aggregate requires at least one set");
    InterpretationSet acc = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i)
        acc = agg == Agg::Union ? set_union(acc, sets[i]) : set_intersection(acc, sets[i]);
    return acc;
}

std::vector<NetworkState> dat_input_states(const Network& n, const EncodingSpec& spec) {
    const DatSpec& d = spec.dat_spec();
    if (d.inputs.empty()) throw DomainError("DAT spec has no input enumeration");
    std::vector<NetworkState> states;
    for (const auto& row : d.inputs) {
        NetworkState x(static_cast<std::size_t>(n.size()), 0.0);
        for (std::size_t v = 0; v < d.vars.size(); ++v) {
            const DatVar& var = d.vars[v];
            auto el = std::find_if(var.elements.begin(), var.elements.end(),
                                   [&](const DatElement& e) { return e.name == row[v]; });
            if (el == var.elements.end())
                throw DomainError("unknown element in DAT input row: " + row[v]);
            const auto& positions = spec.var_positions()[v];
            for (std::size_t i = 0; i < positions.size(); ++i)
                x[static_cast<std::size_t>(positions[i])] = el->values[i];
        }
        states.push_back(std::move(x));
    }
    return states;
}

InterpretationSet belief_set(const Network& n, const EncodingSpec& spec) {
    std::vector<NetworkState> limit_states;
    if (n.mode() == UpdateMode::Feedforward && spec.is_dat()) {
        limit_states = limit_set(n, dat_input_states(n, spec)).states;
    } else if (n.mode() == UpdateMode::Feedforward && spec.is_nat() &&
               !spec.nat_spec().input_states.empty()) {
        limit_states = limit_set(n, spec.nat_spec().input_states).states;
    } else {
        limit_states = limit_set(n).states;
    }
    if (limit_states.empty()) return InterpretationSet::empty_set(spec.universe());
    std::vector<InterpretationSet> encoded;
    encoded.reserve(limit_states.size());
    for (const NetworkState& x : limit_states) encoded.push_back(apply_encoding(spec, x));
    return aggregate(spec.agg(), encoded);
}

namespace {

EncodingVerdict verdict_against(const Network& n, const EncodingSpec& spec,
                                const KnowledgeBase& l) {
    EncodingVerdict v{belief_set(n, spec), false, false, std::nullopt};
    const InterpretationSet beliefs = v.beliefs.to_explicit();
    const InterpretationSet model_set = enumerate_models(l, spec.universe());
    const bool subset = beliefs.subset_of(model_set);
    v.is_neural_model = !beliefs.empty() && subset;
    v.is_semantic_encoding = v.is_neural_model && beliefs.same_as(model_set);
    if (!subset) {
        v.counterexample = beliefs.witness_in_difference(model_set);
    } else if (!v.is_semantic_encoding && !model_set.subset_of(beliefs)) {
        v.counterexample = model_set.witness_in_difference(beliefs);
    }
    return v;
}

} // namespace

EncodingVerdict check_neural_model(const Network& n, const EncodingSpec& spec,
                                   const KnowledgeBase& l) {
    return verdict_against(n, spec, l);
}

EncodingVerdict check_semantic_encoding(const Network& n, const EncodingSpec& spec,
                                        const KnowledgeBase& l) {
    return verdict_against(n, spec, l);
}

KnowledgeBase softmax_exclusivity_kb(int n) {
    if (n < 2) throw DomainError("softmax KB requires n >= 2");
    KnowledgeBase kb;
    for (int i = 1; i <= n; ++i) kb.signature.prop_atoms.push_back("Y" + std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        FormulaPtr others;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            FormulaPtr neg = lnot(atom("Y" + std::to_string(j)));
            others = others ? land(std::move(others), std::move(neg)) : std::move(neg);
        }
        kb.add(iff(atom("Y" + std::to_string(i)), std::move(others)));
    }
    return kb;
}

} // namespace semanc
