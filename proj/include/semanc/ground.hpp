#pragma once

#include <map>
#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/eval.hpp"
#include "semanc/interpretation.hpp"

namespace semanc {

// Constant and function interpretations needed to reduce terms while
// grounding. Domain elements always name themselves.
struct GroundingContext {
    std::map<std::string, std::string> constant_map;
    std::map<std::string, std::map<std::vector<std::string>, std::string>> function_tables;
};

// All ground atoms of the signature: declared propositional atoms first, then
// P(d1,...,dk) for each predicate (name order) and each domain tuple
// (lexicographic in domain order).
UniversePtr ground_universe(const Signature& sig);

// Expands quantifiers over the finite domain and reduces all terms to domain
// elements, yielding a quantifier-free KB over ground_universe(sig).
// Annotations carry over per sentence.
KnowledgeBase ground(const KnowledgeBase& kb, const GroundingContext& ctx);
inline KnowledgeBase ground(const KnowledgeBase& kb) { return ground(kb, {}); }

// The propositional interpretation a first-order structure induces on the
// ground-atom universe.
Interpretation induced_interpretation(const FirstOrderStructure& s, const UniversePtr& u);

} // namespace semanc
