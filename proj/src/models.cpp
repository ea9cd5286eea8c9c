#include "semanc/models.hpp"

#include <limits>

#include "semanc/errors.hpp"
#include "semanc/eval.hpp"

namespace semanc {

InterpretationSet enumerate_models(const KnowledgeBase& kb, const UniversePtr& at) {
    if (at->size() > InterpretationSet::kMaxExplicitAtoms)
        throw DomainError("universe too large for model enumeration");
    InterpretationSet models = InterpretationSet::explicit_empty(at);
    const std::uint32_t n_states = 1u << at->size();
    for (std::uint32_t idx = 0; idx < n_states; ++idx) {
        if (satisfies(kb, Interpretation::from_index(at, idx))) models.insert_index(idx);
    }
    return models;
}

bool entails(const KnowledgeBase& l, const KnowledgeBase& l2, const UniversePtr& at) {
    return enumerate_models(l, at).subset_of(enumerate_models(l2, at));
}

PenaltyResult penalty_models(const KnowledgeBase& kb, const UniversePtr& at) {
    if (at->size() > InterpretationSet::kMaxExplicitAtoms)
        throw DomainError("universe too large for penalty minimization");
    for (const Sentence& s : kb.sentences)
        if (!std::holds_alternative<PenaltyWeight>(s.ann))
            throw DomainError("penalty_models requires penalty annotations on every sentence");

    const std::uint32_t n_states = 1u << at->size();
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> argmin;
    for (std::uint32_t idx = 0; idx < n_states; ++idx) {
        const Interpretation m = Interpretation::from_index(at, idx);
        double penalty = 0.0;
        for (const Sentence& s : kb.sentences) {
            if (evaluate(*s.formula, m) != 1.0) penalty += std::get<PenaltyWeight>(s.ann).w;
        }
        if (penalty < best) {
            best = penalty;
            argmin.clear();
        }
        if (penalty == best) argmin.push_back(idx);
    }
    return {InterpretationSet::from_indices(at, argmin), best};
}

} // namespace semanc
