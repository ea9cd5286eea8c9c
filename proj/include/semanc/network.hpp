#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "semanc/interpretation.hpp"

namespace semanc {

enum class Activation { StepGeq0, Sigmoid, Relu, Identity };

struct AtomRole {
    std::string name;
    bool operator==(const AtomRole&) const = default;
};
struct VarRole {
    std::string arg;
    int index = 0;
    bool operator==(const VarRole&) const = default;
};
struct PredRole {
    std::string name;
    std::vector<std::string> args;
    bool operator==(const PredRole&) const = default;
};
struct HiddenRole {
    bool operator==(const HiddenRole&) const = default;
};
using Role = std::variant<AtomRole, VarRole, PredRole, HiddenRole>;

inline bool is_visible(const Role& r) { return !std::holds_alternative<HiddenRole>(r); }

struct Neuron {
    int id = 0;
    double bias = 0.0;
    Activation activation = Activation::StepGeq0;
    Role role = HiddenRole{};
};

struct Edge {
    int from = 0;
    int to = 0;
    double weight = 0.0;
};

enum class UpdateMode { Synchronous, Feedforward };

// Vector of neuron values in declaration order.
using NetworkState = std::vector<double>;

// Weighted directed graph of neurons. Immutable after construction except for
// parameter updates through set_bias/set_weight (used by training).
class Network {
public:
    Network(UpdateMode mode, std::vector<Neuron> neurons, std::vector<Edge> edges,
            std::vector<std::vector<int>> softmax_groups = {});

    UpdateMode mode() const { return mode_; }
    int size() const { return static_cast<int>(neurons_.size()); }
    const std::vector<Neuron>& neurons() const { return neurons_; }
    const Neuron& neuron_at(int pos) const { return neurons_[static_cast<std::size_t>(pos)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& softmax_groups() const { return softmax_groups_; }

    int pos_of(int id) const; // throws on unknown id
    bool has_id(int id) const;

    // Incoming edges per neuron position, as (source position, edge index).
    const std::vector<std::vector<std::pair<int, int>>>& incoming() const { return incoming_; }
    bool has_incoming(int pos) const { return !incoming_[static_cast<std::size_t>(pos)].empty(); }

    // Positions with no incoming edges (the inputs of a feedforward net).
    const std::vector<int>& input_positions() const { return inputs_; }
    // Topological order of positions; available iff the edge graph is acyclic.
    const std::vector<int>& topological_order() const;

    bool all_step() const;    // every activation is a step
    bool is_binary_state(const NetworkState& x) const;

    void set_bias(int pos, double b) { neurons_[static_cast<std::size_t>(pos)].bias = b; }
    void set_weight(int edge_index, double w) {
        edges_[static_cast<std::size_t>(edge_index)].weight = w;
    }

private:
    UpdateMode mode_;
    std::vector<Neuron> neurons_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> softmax_groups_;
    std::vector<std::vector<std::pair<int, int>>> incoming_;
    std::vector<int> inputs_;
    std::vector<int> topo_;
    bool acyclic_ = false;
};

double apply_activation(Activation a, double net_input);

// One update. Synchronous: every neuron recomputed in parallel from the old
// state. Feedforward: inputs keep their clamped values and the rest settle in
// topological order. Softmax groups are then forced one-hot (argmax, lowest
// id on ties).
NetworkState update(const Network& n, const NetworkState& x);

struct CycleInfo {
    int start = 0;  // index into states where the cycle begins
    int length = 0;
};

struct Trajectory {
    std::vector<NetworkState> states; // x0 first
    std::optional<CycleInfo> cycle;   // nullopt when t_max ran out (or feedforward)
};

// Iterates update from x0, stopping at the first revisited state. Cycle
// detection requires a binary-valued synchronous net; a feedforward net
// yields the single input/output sweep.
Trajectory trajectory(const Network& n, NetworkState x0, int t_max);

struct LimitSet {
    std::vector<NetworkState> states;              // all limit states, deduplicated
    std::vector<std::vector<NetworkState>> cycles; // one entry per distinct cycle
    bool contains(const NetworkState& x) const;
};

// States the network settles into. Synchronous binary nets (<= 20 neurons):
// the union over all initial states of each trajectory's cycle states.
// Feedforward nets: one settled state per enumerated input (the overload with
// explicit inputs; the other enumerates binary input combinations).
LimitSet limit_set(const Network& n);
LimitSet limit_set(const Network& n, const std::vector<NetworkState>& input_states);

// Maximum neuron count for exhaustive state-space sweeps.
inline constexpr int kMaxRecurrentNeurons = 20;

std::uint32_t pack_state(const NetworkState& x);
NetworkState unpack_state(std::uint32_t bits, int n);

} // namespace semanc
