#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/interpretation.hpp"

namespace semanc {

// A quantified pseudo-atom usable by the sentence search, e.g. a bounded
// template like "forall x. cat(x)" with cost 2: quantifier + atom.
struct QuantTemplate {
    FormulaPtr formula;
    int cost = 0;
    std::vector<std::uint32_t> satisfying; // interpretation indices where it holds
};

// Symbol costs: 1 per atom, connective or quantifier; parentheses are free.
struct ComplexityConfig {
    int max_cost = 12;
    std::size_t max_entries = 1'000'000; // search node cap
    std::vector<QuantTemplate> templates;
};

struct ComplexityResult {
    int k = 0;
    FormulaPtr witness;
    bool exact = false; // false: k is the literal-conjunction upper bound
};

// Minimum symbol cost of a single sentence whose unique model is M, found by
// cost-increasing sentence enumeration. Each distinct model set is kept at
// its first (cheapest) cost: composites built from a dearer duplicate always
// have an equal-or-cheaper twin built from the first occurrence, so the
// pruning preserves minimality. Universes of up to 8 atoms.
class ComplexitySearcher {
public:
    explicit ComplexitySearcher(UniversePtr at, ComplexityConfig cfg = {});

    ComplexityResult complexity_of(const Interpretation& m);
    ComplexityResult complexity_of_index(std::uint32_t idx);

    const UniversePtr& universe() const { return at_; }

private:
    using Mask = std::array<std::uint64_t, 4>; // satisfying sets over <= 256 indices

    struct MaskHash {
        std::size_t operator()(const Mask& m) const {
            std::size_t h = 1469598103934665603ull;
            for (std::uint64_t w : m) h = (h ^ w) * 1099511628211ull;
            return h;
        }
    };

    struct Entry {
        Mask mask;
        FormulaPtr formula;
    };

    void build_level(int cost);
    bool record(const Mask& mask, FormulaPtr formula, int cost);
    Mask atom_mask(int atom_index) const;
    Mask normalize(Mask m) const;

    UniversePtr at_;
    ComplexityConfig cfg_;
    std::uint32_t n_states_;
    std::unordered_map<Mask, std::pair<int, FormulaPtr>, MaskHash> seen_;
    std::vector<std::vector<Entry>> levels_; // levels_[c] = masks first reached at cost c
    int built_ = 0;                          // levels built so far
    bool capped_ = false;                    // node cap hit; results beyond are inexact
};

// One-shot convenience wrapper.
ComplexityResult model_complexity(const Interpretation& m, const ComplexityConfig& cfg = {});

// The literal-conjunction upper bound witness for M (cost 1 per positive, 2
// per negated atom, plus the connectives).
ComplexityResult literal_conjunction_bound(const Interpretation& m);

} // namespace semanc
