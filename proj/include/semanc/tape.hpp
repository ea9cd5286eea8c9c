#pragma once

#include <cstddef>
#include <vector>

namespace semanc {

// Scalar reverse-mode tape. Values are computed eagerly as nodes are built;
// gradient(root) runs one backward sweep and returns the adjoints of every
// registered parameter in registration order.
class Tape {
public:
    using Id = int;

    Id constant(double v);
    Id param(double v); // tracked leaf

    Id add(Id a, Id b);
    Id sub(Id a, Id b);
    Id mul(Id a, Id b);
    Id div(Id a, Id b);
    Id neg(Id a);
    Id one_minus(Id a);
    Id log_(Id a);  // clamped below at kLogFloor
    Id exp_(Id a);
    Id min2(Id a, Id b); // subgradient to the chosen branch; records ties
    Id max2(Id a, Id b);
    Id relu(Id a);
    Id sigmoid(Id a);

    double value(Id id) const { return nodes_[static_cast<std::size_t>(id)].value; }
    std::size_t param_count() const { return params_.size(); }
    std::size_t node_count() const { return nodes_.size(); }

    // True when some min2/max2 saw exactly equal operands (the subgradient
    // choice is arbitrary there).
    bool tie_observed() const { return tie_observed_; }

    std::vector<double> gradient(Id root) const;

    static constexpr double kLogFloor = 1e-300;

private:
    enum class Op { Const, Param, Add, Sub, Mul, Div, Neg, OneMinus, Log, Exp, Min, Max, Relu, Sigmoid };

    struct Node {
        Op op;
        Id a = -1;
        Id b = -1;
        double value = 0.0;
    };

    Id push(Op op, Id a, Id b, double value);

    std::vector<Node> nodes_;
    std::vector<Id> params_;
    bool tie_observed_ = false;
};

} // namespace semanc
