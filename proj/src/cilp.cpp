#include "semanc/cilp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semanc/errors.hpp"

namespace semanc {

Network compile_cilp(const LogicProgram& p) {
    std::vector<Neuron> neurons;
    std::vector<Edge> edges;
    const int n_atoms = static_cast<int>(p.atoms.size());

    // ids: inputs 0..n-1, hidden n..n+r-1, outputs n+r..n+r+n-1
    const int hidden_base = n_atoms;
    const int output_base = n_atoms + static_cast<int>(p.rules.size());

    for (int i = 0; i < n_atoms; ++i)
        neurons.push_back({i, -1.0, Activation::StepGeq0,
                           AtomRole{p.atoms[static_cast<std::size_t>(i)]}});

    std::map<std::string, int> atom_index;
    for (int i = 0; i < n_atoms; ++i) atom_index[p.atoms[static_cast<std::size_t>(i)]] = i;

    for (int r = 0; r < static_cast<int>(p.rules.size()); ++r) {
        const Rule& rule = p.rules[static_cast<std::size_t>(r)];
        int positives = 0;
        for (const Literal& l : rule.body)
            if (l.positive) ++positives;
        neurons.push_back({hidden_base + r, -static_cast<double>(positives),
                           Activation::StepGeq0, HiddenRole{}});
        for (const Literal& l : rule.body) {
            auto it = atom_index.find(l.atom);
            if (it == atom_index.end()) throw DomainError("body atom outside universe: " + l.atom);
            edges.push_back({it->second, hidden_base + r, l.positive ? 1.0 : -1.0});
        }
    }

    for (int i = 0; i < n_atoms; ++i) {
        neurons.push_back({output_base + i, -1.0, Activation::StepGeq0,
                           AtomRole{p.atoms[static_cast<std::size_t>(i)]}});
        edges.push_back({output_base + i, i, 1.0}); // recurrent identity link
    }
    for (int r = 0; r < static_cast<int>(p.rules.size()); ++r) {
        const int head = atom_index.at(p.rules[static_cast<std::size_t>(r)].head);
        edges.push_back({hidden_base + r, output_base + head, 1.0});
    }

    return Network(UpdateMode::Synchronous, std::move(neurons), std::move(edges));
}

CilpLayout cilp_layout(const Network& n) {
    // Inputs are the atom-labeled targets of atom->atom (recurrent) edges;
    // the matching sources are the outputs.
    std::set<int> recurrent_targets;
    std::map<int, int> target_to_source;
    auto atom_name = [&](int id) -> const std::string* {
        const Neuron& nr = n.neuron_at(n.pos_of(id));
        const auto* a = std::get_if<AtomRole>(&nr.role);
        return a ? &a->name : nullptr;
    };
    for (const Edge& e : n.edges()) {
        if (atom_name(e.from) && atom_name(e.to)) {
            recurrent_targets.insert(e.to);
            target_to_source[e.to] = e.from;
        }
    }

    CilpLayout layout;
    for (const Neuron& nr : n.neurons()) {
        if (!recurrent_targets.count(nr.id)) continue;
        const std::string* name = atom_name(nr.id);
        layout.atoms.push_back(*name);
        layout.input_ids.push_back(nr.id);
        layout.output_ids.push_back(target_to_source.at(nr.id));
    }
    if (layout.atoms.empty()) throw DomainError("network has no recurrent atom links");
    return layout;
}

Interpretation cilp_sweep(const Network& n, const CilpLayout& layout, const Interpretation& m) {
    NetworkState x(static_cast<std::size_t>(n.size()), 0.0);
    std::set<int> clamped;
    for (std::size_t i = 0; i < layout.atoms.size(); ++i) {
        const int pos = n.pos_of(layout.input_ids[i]);
        x[static_cast<std::size_t>(pos)] = m.value_of(layout.atoms[i]);
        clamped.insert(pos);
    }

    // Settle the non-clamped neurons in dependency order, ignoring edges into
    // clamped inputs. The remaining graph is acyclic for compiled programs.
    const int sz = n.size();
    std::vector<int> state(static_cast<std::size_t>(sz), 0); // 0 pending, 1 in progress, 2 done
    for (int c : clamped) state[static_cast<std::size_t>(c)] = 2;

    auto settle = [&](auto&& self, int pos) -> double {
        if (state[static_cast<std::size_t>(pos)] == 2) return x[static_cast<std::size_t>(pos)];
        if (state[static_cast<std::size_t>(pos)] == 1)
            throw DomainError("cyclic dependency outside the recurrent links");
        state[static_cast<std::size_t>(pos)] = 1;
        double net = n.neuron_at(pos).bias;
        for (const auto& [src, e] : n.incoming()[static_cast<std::size_t>(pos)])
            net += n.edges()[static_cast<std::size_t>(e)].weight * self(self, src);
        const double v = apply_activation(n.neuron_at(pos).activation, net);
        x[static_cast<std::size_t>(pos)] = v;
        state[static_cast<std::size_t>(pos)] = 2;
        return v;
    };

    Interpretation out{m.universe,
                       std::vector<double>(static_cast<std::size_t>(m.universe->size()), 0.0)};
    for (std::size_t i = 0; i < layout.atoms.size(); ++i) {
        const int idx = m.universe->index_of(layout.atoms[i]);
        if (idx < 0) throw DomainError("atom outside universe: " + layout.atoms[i]);
        out.values[static_cast<std::size_t>(idx)] =
            settle(settle, n.pos_of(layout.output_ids[i]));
    }
    return out;
}

TpEquivalence verify_tp_equivalence(const LogicProgram& p, const Network& n) {
    if (p.atoms.size() > 20) throw DomainError("universe too large for exhaustive verification");
    if (p.atoms.empty()) return {true, std::nullopt};
    const UniversePtr at = p.universe();
    const CilpLayout layout = cilp_layout(n);
    const std::uint32_t n_states = 1u << p.atoms.size();
    for (std::uint32_t idx = 0; idx < n_states; ++idx) {
        const Interpretation m = Interpretation::from_index(at, idx);
        if (!(tp_step(p, m) == cilp_sweep(n, layout, m))) return {false, m};
    }
    return {true, std::nullopt};
}

std::vector<Interpretation> clamp_stable_states(const Network& n, const CilpLayout& layout) {
    if (layout.atoms.size() > 20)
        throw DomainError("universe too large for exhaustive stability check");
    const UniversePtr at = make_universe(layout.atoms);
    std::vector<Interpretation> stable;
    const std::uint32_t n_states = 1u << layout.atoms.size();
    for (std::uint32_t idx = 0; idx < n_states; ++idx) {
        Interpretation m = Interpretation::from_index(at, idx);
        if (cilp_sweep(n, layout, m) == m) stable.push_back(std::move(m));
    }
    return stable;
}

} // namespace semanc
