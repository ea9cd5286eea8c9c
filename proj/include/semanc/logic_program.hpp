#pragma once

#include <string>
#include <vector>

#include "semanc/interpretation.hpp"

namespace semanc {

struct Literal {
    std::string atom;
    bool positive = true;
    bool operator==(const Literal&) const = default;
};

// Rule head <- body; an empty body is a fact.
struct Rule {
    std::string head;
    std::vector<Literal> body;
    int line = 0;
    int column = 0;
};

struct LogicProgram {
    std::vector<std::string> atoms; // universe At, ordered
    std::vector<Rule> rules;

    UniversePtr universe() const { return make_universe(atoms); }
};

// Immediate-consequence step: the new value of A is 1 iff some rule with head
// A has every body literal true in m. Facts fire unconditionally.
Interpretation tp_step(const LogicProgram& p, const Interpretation& m);

struct FixpointResult {
    enum class Kind { FixedPoint, Cycle, MaxIter };
    Kind kind = Kind::MaxIter;
    // FixedPoint: the fixed point. Cycle: the repeating states in visit
    // order. MaxIter: the last state reached.
    std::vector<Interpretation> states;
    int iterations = 0; // tp_step applications performed
};

FixpointResult tp_fixpoint(const LogicProgram& p, const Interpretation& m0, int max_iter);

// True iff the sign-blind atom dependency graph (head depends on each body
// atom) has no cycle.
bool is_acyclic(const LogicProgram& p);

std::string to_string(const LogicProgram& p);

} // namespace semanc
