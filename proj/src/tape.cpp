#include "semanc/tape.hpp"

#include <cmath>

namespace semanc {

Tape::Id Tape::push(Op op, Id a, Id b, double value) {
    nodes_.push_back({op, a, b, value});
    return static_cast<Id>(nodes_.size()) - 1;
}

Tape::Id Tape::constant(double v) { return push(Op::Const, -1, -1, v); }

Tape::Id Tape::param(double v) {
    const Id id = push(Op::Param, -1, -1, v);
    params_.push_back(id);
    return id;
}

Tape::Id Tape::add(Id a, Id b) { return push(Op::Add, a, b, value(a) + value(b)); }
Tape::Id Tape::sub(Id a, Id b) { return push(Op::Sub, a, b, value(a) - value(b)); }
Tape::Id Tape::mul(Id a, Id b) { return push(Op::Mul, a, b, value(a) * value(b)); }
Tape::Id Tape::div(Id a, Id b) { return push(Op::Div, a, b, value(a) / value(b)); }
Tape::Id Tape::neg(Id a) { return push(Op::Neg, a, -1, -value(a)); }
Tape::Id Tape::one_minus(Id a) { return push(Op::OneMinus, a, -1, 1.0 - value(a)); }

Tape::Id Tape::log_(Id a) {
    const double v = value(a) < kLogFloor ? kLogFloor : value(a);
    return push(Op::Log, a, -1, std::log(v));
}

Tape::Id Tape::exp_(Id a) { return push(Op::Exp, a, -1, std::exp(value(a))); }

Tape::Id Tape::min2(Id a, Id b) {
    if (value(a) == value(b)) tie_observed_ = true;
    return push(Op::Min, a, b, value(a) <= value(b) ? value(a) : value(b));
}

Tape::Id Tape::max2(Id a, Id b) {
    if (value(a) == value(b)) tie_observed_ = true;
    return push(Op::Max, a, b, value(a) >= value(b) ? value(a) : value(b));
}

Tape::Id Tape::relu(Id a) { return push(Op::Relu, a, -1, value(a) > 0.0 ? value(a) : 0.0); }

Tape::Id Tape::sigmoid(Id a) {
    return push(Op::Sigmoid, a, -1, 1.0 / (1.0 + std::exp(-value(a))));
}

std::vector<double> Tape::gradient(Id root) const {
    std::vector<double> adj(nodes_.size(), 0.0);
    adj[static_cast<std::size_t>(root)] = 1.0;
    for (Id i = static_cast<Id>(nodes_.size()) - 1; i >= 0; --i) {
        const Node& n = nodes_[static_cast<std::size_t>(i)];
        const double g = adj[static_cast<std::size_t>(i)];
        if (g == 0.0) continue;
        switch (n.op) {
        case Op::Const:
        case Op::Param:
            break;
        case Op::Add:
            adj[static_cast<std::size_t>(n.a)] += g;
            adj[static_cast<std::size_t>(n.b)] += g;
            break;
        case Op::Sub:
            adj[static_cast<std::size_t>(n.a)] += g;
            adj[static_cast<std::size_t>(n.b)] -= g;
            break;
        case Op::Mul:
            adj[static_cast<std::size_t>(n.a)] += g * nodes_[static_cast<std::size_t>(n.b)].value;
            adj[static_cast<std::size_t>(n.b)] += g * nodes_[static_cast<std::size_t>(n.a)].value;
            break;
        case Op::Div: {
            const double bv = nodes_[static_cast<std::size_t>(n.b)].value;
            adj[static_cast<std::size_t>(n.a)] += g / bv;
            adj[static_cast<std::size_t>(n.b)] -=
                g * nodes_[static_cast<std::size_t>(n.a)].value / (bv * bv);
            break;
        }
        case Op::Neg:
            adj[static_cast<std::size_t>(n.a)] -= g;
            break;
        case Op::OneMinus:
            adj[static_cast<std::size_t>(n.a)] -= g;
            break;
        case Op::Log: {
            const double av = nodes_[static_cast<std::size_t>(n.a)].value;
            adj[static_cast<std::size_t>(n.a)] += g / (av < kLogFloor ? kLogFloor : av);
            break;
        }
        case Op::Exp:
            adj[static_cast<std::size_t>(n.a)] += g * n.value;
            break;
        case Op::Min: {
            const Id chosen = nodes_[static_cast<std::size_t>(n.a)].value <=
                                      nodes_[static_cast<std::size_t>(n.b)].value
                                  ? n.a
                                  : n.b;
            adj[static_cast<std::size_t>(chosen)] += g;
            break;
        }
        case Op::Max: {
            const Id chosen = nodes_[static_cast<std::size_t>(n.a)].value >=
                                      nodes_[static_cast<std::size_t>(n.b)].value
                                  ? n.a
                                  : n.b;
            adj[static_cast<std::size_t>(chosen)] += g;
            break;
        }
        case Op::Relu:
            if (nodes_[static_cast<std::size_t>(n.a)].value > 0.0)
                adj[static_cast<std::size_t>(n.a)] += g;
            break;
        case Op::Sigmoid:
            adj[static_cast<std::size_t>(n.a)] += g * n.value * (1.0 - n.value);
            break;
        }
    }
    std::vector<double> out;
    out.reserve(params_.size());
    for (Id p : params_) out.push_back(adj[static_cast<std::size_t>(p)]);
    return out;
}

} // namespace semanc
