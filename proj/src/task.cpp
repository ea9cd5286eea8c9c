#include "semanc/task.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semanc/errors.hpp"

namespace semanc {

void ClassificationTask::validate() const {
    const int n = static_cast<int>(inputs.size());
    if (input_names.size() != inputs.size() || truth.size() != inputs.size())
        throw DomainError("task arrays must have one entry per input");
    std::set<int> train(train_indices.begin(), train_indices.end());
    for (int i : test_indices)
        if (train.count(i)) throw DomainError("train/test splits must be disjoint");
    for (int i : train_indices)
        if (i < 0 || i >= n) throw DomainError("train index out of range");
    for (int i : test_indices)
        if (i < 0 || i >= n) throw DomainError("test index out of range");
    for (const auto& ys : truth)
        for (int y : ys)
            if (y < 0 || y >= static_cast<int>(labels.size()))
                throw DomainError("label index out of range");
}

UniversePtr task_universe(const ClassificationTask& task) {
    std::vector<std::string> atoms;
    for (const std::string& x : task.input_names)
        for (const std::string& y : task.labels) atoms.push_back(ground_atom_name(y, {x}));
    return make_universe(std::move(atoms));
}

KnowledgeBase task_to_kb(const ClassificationTask& task, bool closed_world) {
    task.validate();
    KnowledgeBase kb;
    for (const std::string& y : task.labels) kb.signature.predicates[y] = 1;
    kb.signature.domain = task.input_names;
    for (int i : task.train_indices) {
        const auto& ys = task.truth[static_cast<std::size_t>(i)];
        for (int l = 0; l < static_cast<int>(task.labels.size()); ++l) {
            const bool holds = std::find(ys.begin(), ys.end(), l) != ys.end();
            FormulaPtr a = pred(task.labels[static_cast<std::size_t>(l)],
                                {Term::constant(task.input_names[static_cast<std::size_t>(i)])});
            if (holds)
                kb.add(std::move(a));
            else if (closed_world)
                kb.add(lnot(std::move(a)));
        }
    }
    return kb;
}

KnowledgeBase hierarchy_kb(const std::vector<std::pair<std::string, std::string>>& order,
                           const ClassificationTask& task) {
    // Strict partial order: irreflexive and acyclic over the given pairs.
    std::map<std::string, std::set<std::string>> next;
    for (const auto& [lo, hi] : order) {
        if (lo == hi) throw DomainError("hierarchy relation must be irreflexive");
        if (std::find(task.labels.begin(), task.labels.end(), lo) == task.labels.end() ||
            std::find(task.labels.begin(), task.labels.end(), hi) == task.labels.end())
            throw DomainError("hierarchy relation over unknown label");
        next[lo].insert(hi);
    }
    // DFS cycle check.
    std::map<std::string, int> color;
    auto dfs = [&](auto&& self, const std::string& v) -> void {
        color[v] = 1;
        for (const auto& w : next[v]) {
            if (color[w] == 1) throw DomainError("hierarchy relation contains a cycle");
            if (color[w] == 0) self(self, w);
        }
        color[v] = 2;
    };
    for (const auto& [v, _] : next)
        if (color[v] == 0) dfs(dfs, v);

    KnowledgeBase kb;
    for (const std::string& y : task.labels) kb.signature.predicates[y] = 1;
    kb.signature.domain = task.input_names;
    for (const std::string& x : task.input_names) {
        for (const auto& [lo, hi] : order) {
            kb.add(implies(pred(lo, {Term::constant(x)}), pred(hi, {Term::constant(x)})));
        }
    }
    return kb;
}

Interpretation true_interpretation(const ClassificationTask& task) {
    const UniversePtr at = task_universe(task);
    Interpretation m{at, std::vector<double>(static_cast<std::size_t>(at->size()), 0.0)};
    for (std::size_t i = 0; i < task.inputs.size(); ++i) {
        for (int l : task.truth[i]) {
            const int idx = at->index_of(ground_atom_name(
                task.labels[static_cast<std::size_t>(l)], {task.input_names[i]}));
            m.values[static_cast<std::size_t>(idx)] = 1.0;
        }
    }
    return m;
}

} // namespace semanc
