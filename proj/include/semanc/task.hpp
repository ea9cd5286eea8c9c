#pragma once

#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/interpretation.hpp"

namespace semanc {

// Finite classification task: inputs with their ground-truth label sets and a
// train/test index split.
struct ClassificationTask {
    std::vector<std::string> input_names;    // constant names c_x, e.g. x0, x1, ...
    std::vector<std::vector<double>> inputs; // feature vectors
    std::vector<std::string> labels;         // Y
    std::vector<std::vector<int>> truth;     // per input, the label indices of f(x)
    std::vector<int> train_indices;
    std::vector<int> test_indices;

    void validate() const; // disjoint split, indices in range, f total
};

// Ground-atom universe {label(x) | x in X, label in Y}, ordered input-major
// (all labels of x0, then of x1, ...).
UniversePtr task_universe(const ClassificationTask& task);

// L_train: one positive ground atom per training pair (x, y in f(x)). With
// closed_world, also the negations of the labels x does not carry.
KnowledgeBase task_to_kb(const ClassificationTask& task, bool closed_world = false);

// L_<: for every input x and every ordered pair y < y', the sentence
// y(c_x) -> y'(c_x). The relation must be a strict partial order.
KnowledgeBase hierarchy_kb(const std::vector<std::pair<std::string, std::string>>& order,
                           const ClassificationTask& task);

// The interpretation the ground truth induces (true exactly on f).
Interpretation true_interpretation(const ClassificationTask& task);

} // namespace semanc
