#pragma once

#include "semanc/ast.hpp"
#include "semanc/interpretation.hpp"

namespace semanc {

// Exact model set by brute force over all 2^|At| assignments. |At| <= 24.
InterpretationSet enumerate_models(const KnowledgeBase& kb, const UniversePtr& at);

// True iff every model of l is a model of l2 (both ground over at).
bool entails(const KnowledgeBase& l, const KnowledgeBase& l2, const UniversePtr& at);

struct PenaltyResult {
    InterpretationSet minimizers;
    double min_penalty = 0.0;
};

// Penalty of an interpretation is the weight sum of the sentences it
// violates; returns all minimizers. Every sentence must carry a
// PenaltyWeight annotation.
PenaltyResult penalty_models(const KnowledgeBase& kb, const UniversePtr& at);

} // namespace semanc
