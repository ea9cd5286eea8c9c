#include "semanc/network.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "semanc/errors.hpp"

namespace semanc {

Network::Network(UpdateMode mode, std::vector<Neuron> neurons, std::vector<Edge> edges,
                 std::vector<std::vector<int>> softmax_groups)
    : mode_(mode),
      neurons_(std::move(neurons)),
      edges_(std::move(edges)),
      softmax_groups_(std::move(softmax_groups)) {
    std::unordered_map<int, int> pos;
    for (int i = 0; i < size(); ++i) {
        if (!pos.emplace(neurons_[static_cast<std::size_t>(i)].id, i).second)
            throw DomainError("duplicate neuron id: " +
                              std::to_string(neurons_[static_cast<std::size_t>(i)].id));
    }

    incoming_.assign(neurons_.size(), {});
    std::vector<std::vector<int>> outgoing(neurons_.size());
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        auto from = pos.find(ed.from);
        auto to = pos.find(ed.to);
        if (from == pos.end() || to == pos.end())
            throw DomainError("edge references unknown neuron id");
        incoming_[static_cast<std::size_t>(to->second)].push_back({from->second, e});
        outgoing[static_cast<std::size_t>(from->second)].push_back(to->second);
    }

    for (int i = 0; i < size(); ++i)
        if (incoming_[static_cast<std::size_t>(i)].empty()) inputs_.push_back(i);

    // Kahn's algorithm; topo_ stays empty when the graph has a cycle.
    std::vector<int> indegree(neurons_.size(), 0);
    for (std::size_t i = 0; i < neurons_.size(); ++i)
        indegree[i] = static_cast<int>(incoming_[i].size());
    std::vector<int> queue = inputs_;
    std::vector<int> order;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        order.push_back(v);
        for (int w : outgoing[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    acyclic_ = static_cast<int>(order.size()) == size();
    if (acyclic_) topo_ = std::move(order);
    if (mode_ == UpdateMode::Feedforward && !acyclic_)
        throw DomainError("feedforward network must be acyclic");

    std::unordered_set<int> grouped;
    for (auto& group : softmax_groups_) {
        std::sort(group.begin(), group.end()); // lowest id wins argmax ties
        for (int id : group) {
            const int p = pos_of(id);
            if (!outgoing[static_cast<std::size_t>(p)].empty())
                throw DomainError("softmax group member must be an output neuron");
            if (!grouped.insert(id).second)
                throw DomainError("softmax groups must be disjoint");
        }
    }
}

int Network::pos_of(int id) const {
    for (int i = 0; i < size(); ++i)
        if (neurons_[static_cast<std::size_t>(i)].id == id) return i;
    throw DomainError("unknown neuron id: " + std::to_string(id));
}

bool Network::has_id(int id) const {
    for (const Neuron& n : neurons_)
        if (n.id == id) return true;
    return false;
}

const std::vector<int>& Network::topological_order() const {
    if (!acyclic_) throw DomainError("network has cycles; no topological order");
    return topo_;
}

bool Network::all_step() const {
    return std::all_of(neurons_.begin(), neurons_.end(),
                       [](const Neuron& n) { return n.activation == Activation::StepGeq0; });
}

bool Network::is_binary_state(const NetworkState& x) const {
    return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

double apply_activation(Activation a, double net_input) {
    switch (a) {
    case Activation::StepGeq0: return net_input >= 0.0 ? 1.0 : 0.0;
    case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-net_input));
    case Activation::Relu: return net_input > 0.0 ? net_input : 0.0;
    case Activation::Identity: return net_input;
    }
    return 0.0;
}

namespace {

void apply_softmax_groups(const Network& n, NetworkState& x) {
    for (const auto& group : n.softmax_groups()) {
        int best_pos = -1;
        double best = 0.0;
        for (int id : group) { // group order is id order; first max wins
            const int p = n.pos_of(id);
            const double v = x[static_cast<std::size_t>(p)];
            if (best_pos < 0 || v > best) {
                best_pos = p;
                best = v;
            }
        }
        for (int id : group) {
            const int p = n.pos_of(id);
            x[static_cast<std::size_t>(p)] = p == best_pos ? 1.0 : 0.0;
        }
    }
}

double net_input(const Network& n, const NetworkState& x, int pos) {
    double s = n.neuron_at(pos).bias;
    for (const auto& [src, e] : n.incoming()[static_cast<std::size_t>(pos)])
        s += n.edges()[static_cast<std::size_t>(e)].weight * x[static_cast<std::size_t>(src)];
    return s;
}

} // namespace

NetworkState update(const Network& n, const NetworkState& x) {
    if (static_cast<int>(x.size()) != n.size())
        throw DomainError("state dimension does not match neuron count");
    NetworkState out = x;
    if (n.mode() == UpdateMode::Synchronous) {
        for (int i = 0; i < n.size(); ++i)
            out[static_cast<std::size_t>(i)] =
                apply_activation(n.neuron_at(i).activation, net_input(n, x, i));
    } else {
        for (int i : n.topological_order()) {
            if (!n.has_incoming(i)) continue; // inputs stay clamped
            out[static_cast<std::size_t>(i)] =
                apply_activation(n.neuron_at(i).activation, net_input(n, out, i));
        }
    }
    apply_softmax_groups(n, out);
    return out;
}

Trajectory trajectory(const Network& n, NetworkState x0, int t_max) {
    Trajectory tr;
    if (n.mode() == UpdateMode::Feedforward) {
        tr.states.push_back(x0);
        tr.states.push_back(update(n, x0));
        return tr;
    }
    if (!n.all_step() || !n.is_binary_state(x0))
        throw DomainError("cycle detection requires a binary synchronous network");
    std::unordered_map<std::uint32_t, int> seen;
    tr.states.push_back(x0);
    seen.emplace(pack_state(x0), 0);
    NetworkState current = std::move(x0);
    for (int t = 1; t <= t_max; ++t) {
        NetworkState next = update(n, current);
        auto hit = seen.find(pack_state(next));
        if (hit != seen.end()) {
            tr.states.push_back(next);
            tr.cycle = CycleInfo{hit->second, static_cast<int>(tr.states.size()) - 1 - hit->second};
            return tr;
        }
        seen.emplace(pack_state(next), static_cast<int>(tr.states.size()));
        tr.states.push_back(next);
        current = std::move(next);
    }
    return tr; // t_max exhausted, no cycle reported
}

bool LimitSet::contains(const NetworkState& x) const {
    return std::find(states.begin(), states.end(), x) != states.end();
}

std::uint32_t pack_state(const NetworkState& x) {
    if (x.size() > 32) throw DomainError("state too large to pack");
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 1.0)
            bits |= 1u << i;
        else if (x[i] != 0.0)
            throw DomainError("non-binary state cannot be packed");
    }
    return bits;
}

NetworkState unpack_state(std::uint32_t bits, int n) {
    NetworkState x(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (bits >> i) & 1u ? 1.0 : 0.0;
    return x;
}

LimitSet limit_set(const Network& n) {
    if (n.mode() == UpdateMode::Feedforward) {
        if (!n.all_step())
            throw DomainError("input enumeration requires a binary feedforward net; "
                              "pass explicit input states instead");
        std::vector<NetworkState> inputs;
        const auto& in_pos = n.input_positions();
        const std::uint32_t combos = 1u << in_pos.size();
        for (std::uint32_t c = 0; c < combos; ++c) {
            NetworkState x(static_cast<std::size_t>(n.size()), 0.0);
            for (std::size_t i = 0; i < in_pos.size(); ++i)
                x[static_cast<std::size_t>(in_pos[i])] = (c >> i) & 1u ? 1.0 : 0.0;
            inputs.push_back(std::move(x));
        }
        return limit_set(n, inputs);
    }

    if (!n.all_step()) throw DomainError("limit sets are defined only for binary recurrent nets");
    if (n.size() > kMaxRecurrentNeurons)
        throw DomainError("state space too large for exhaustive limit-set computation");

    const std::uint32_t n_states = 1u << n.size();
    std::vector<std::uint32_t> next(n_states);
    for (std::uint32_t s = 0; s < n_states; ++s)
        next[s] = pack_state(update(n, unpack_state(s, n.size())));

    // Functional-graph cycle detection: walk unvisited states, mark the part
    // of the walk that lies on a cycle.
    enum : std::uint8_t { White, Grey, Black };
    std::vector<std::uint8_t> color(n_states, White);
    std::vector<std::uint8_t> on_cycle(n_states, 0);
    LimitSet out;
    for (std::uint32_t s0 = 0; s0 < n_states; ++s0) {
        if (color[s0] != White) continue;
        std::vector<std::uint32_t> path;
        std::uint32_t s = s0;
        while (color[s] == White) {
            color[s] = Grey;
            path.push_back(s);
            s = next[s];
        }
        if (color[s] == Grey) {
            // Everything from the first occurrence of s onward is a new cycle.
            std::vector<NetworkState> cycle;
            auto it = std::find(path.begin(), path.end(), s);
            for (auto p = it; p != path.end(); ++p) {
                on_cycle[*p] = 1;
                cycle.push_back(unpack_state(*p, n.size()));
            }
            out.cycles.push_back(std::move(cycle));
        }
        for (std::uint32_t p : path) color[p] = Black;
    }
    for (std::uint32_t s = 0; s < n_states; ++s)
        if (on_cycle[s]) out.states.push_back(unpack_state(s, n.size()));
    return out;
}

LimitSet limit_set(const Network& n, const std::vector<NetworkState>& input_states) {
    if (n.mode() != UpdateMode::Feedforward)
        throw DomainError("explicit input enumeration applies to feedforward nets");
    LimitSet out;
    for (const NetworkState& x : input_states) {
        NetworkState settled = update(n, x);
        if (!out.contains(settled)) out.states.push_back(std::move(settled));
    }
    return out;
}

} // namespace semanc
