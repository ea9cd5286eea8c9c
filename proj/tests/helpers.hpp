#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/logic_program.hpp"
#include "semanc/network.hpp"

// Deterministic generators shared by the test suites.
namespace testutil {

class Rand {
public:
    explicit Rand(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

    bool flip() { return next() & 1ull; }

private:
    std::uint64_t state_;
};

// Random propositional formula over the given atoms.
inline semanc::FormulaPtr random_formula(Rand& rng, const std::vector<std::string>& atoms,
                                         int depth, bool allow_iff = true) {
    using namespace semanc;
    if (depth <= 0 || rng.below(4) == 0) return atom(atoms[static_cast<std::size_t>(
                                              rng.below(static_cast<int>(atoms.size())))]);
    switch (rng.below(allow_iff ? 5 : 4)) {
    case 0: return lnot(random_formula(rng, atoms, depth - 1, allow_iff));
    case 1:
        return land(random_formula(rng, atoms, depth - 1, allow_iff),
                    random_formula(rng, atoms, depth - 1, allow_iff));
    case 2:
        return lor(random_formula(rng, atoms, depth - 1, allow_iff),
                   random_formula(rng, atoms, depth - 1, allow_iff));
    case 3:
        return implies(random_formula(rng, atoms, depth - 1, allow_iff),
                       random_formula(rng, atoms, depth - 1, allow_iff));
    default:
        return iff(random_formula(rng, atoms, depth - 1, allow_iff),
                   random_formula(rng, atoms, depth - 1, allow_iff));
    }
}

inline std::vector<std::string> atom_names(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("A" + std::to_string(i));
    return out;
}

// Random knowledge base of plain sentences.
inline semanc::KnowledgeBase random_kb(Rand& rng, const std::vector<std::string>& atoms,
                                       int max_sentences, int depth = 3) {
    semanc::KnowledgeBase kb;
    kb.signature.prop_atoms = atoms;
    const int n = 1 + rng.below(max_sentences);
    for (int i = 0; i < n; ++i) kb.add(random_formula(rng, atoms, depth));
    return kb;
}

// Random logic program; acyclic when requested (bodies only use
// strictly-lower atoms).
inline semanc::LogicProgram random_program(Rand& rng, int n_atoms, int max_rules,
                                           bool acyclic = false) {
    semanc::LogicProgram p;
    p.atoms = atom_names(n_atoms);
    const int n_rules = rng.below(max_rules + 1);
    for (int r = 0; r < n_rules; ++r) {
        semanc::Rule rule;
        const int head = rng.below(n_atoms);
        rule.head = p.atoms[static_cast<std::size_t>(head)];
        const int body_len = rng.below(4); // 0..3, facts allowed
        for (int b = 0; b < body_len; ++b) {
            const int pool = acyclic ? head : n_atoms;
            if (pool == 0) break;
            rule.body.push_back({p.atoms[static_cast<std::size_t>(rng.below(pool))], rng.flip()});
        }
        p.rules.push_back(std::move(rule));
    }
    return p;
}

// Random symmetric zero-self-weight binary net (Hopfield-style).
inline semanc::Network random_hopfield(Rand& rng, int n) {
    using namespace semanc;
    std::vector<Neuron> neurons;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        neurons.push_back({i, rng.uniform(-1.0, 1.0), Activation::StepGeq0,
                           AtomRole{"N" + std::to_string(i)}});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.below(3) == 0) continue; // sparse
            const double w = rng.uniform(-2.0, 2.0);
            edges.push_back({i, j, w});
            edges.push_back({j, i, w});
        }
    }
    return Network(UpdateMode::Synchronous, std::move(neurons), std::move(edges));
}

} // namespace testutil
