#include "semanc/logic_program.hpp"

#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "semanc/errors.hpp"

namespace semanc {

Interpretation tp_step(const LogicProgram& p, const Interpretation& m) {
    if (!m.is_crisp()) throw DomainError("tp_step requires a crisp interpretation");
    Interpretation out{m.universe,
                       std::vector<double>(static_cast<std::size_t>(m.universe->size()), 0.0)};
    for (const Rule& r : p.rules) {
        bool fires = true;
        for (const Literal& l : r.body) {
            const double v = m.value_of(l.atom);
            if ((l.positive && v != 1.0) || (!l.positive && v != 0.0)) {
                fires = false;
                break;
            }
        }
        if (fires) {
            const int i = out.universe->index_of(r.head);
            if (i < 0) throw DomainError("rule head outside universe: " + r.head);
            out.values[static_cast<std::size_t>(i)] = 1.0;
        }
    }
    return out;
}

FixpointResult tp_fixpoint(const LogicProgram& p, const Interpretation& m0, int max_iter) {
    if (max_iter < 1) throw DomainError("tp_fixpoint requires max_iter >= 1");
    FixpointResult res;
    std::vector<Interpretation> visited{m0};
    std::map<std::vector<double>, int> seen{{m0.values, 0}};
    Interpretation current = m0;
    for (int it = 1; it <= max_iter; ++it) {
        Interpretation next = tp_step(p, current);
        res.iterations = it;
        if (next.values == current.values) {
            res.kind = FixpointResult::Kind::FixedPoint;
            res.states = {next};
            return res;
        }
        auto hit = seen.find(next.values);
        if (hit != seen.end()) {
            res.kind = FixpointResult::Kind::Cycle;
            res.states.assign(visited.begin() + hit->second, visited.end());
            return res;
        }
        seen.emplace(next.values, static_cast<int>(visited.size()));
        visited.push_back(next);
        current = std::move(next);
    }
    res.kind = FixpointResult::Kind::MaxIter;
    res.states = {current};
    return res;
}

bool is_acyclic(const LogicProgram& p) {
    // Sign-blind dependency edges head -> body atom.
    std::map<std::string, std::set<std::string>> deps;
    for (const Rule& r : p.rules)
        for (const Literal& l : r.body) deps[r.head].insert(l.atom);

    enum class Color { White, Grey, Black };
    std::map<std::string, Color> color;
    for (const auto& a : p.atoms) color[a] = Color::White;

    // Iterative DFS detecting a grey->grey edge.
    for (const auto& a : p.atoms) {
        if (color[a] != Color::White) continue;
        std::vector<std::pair<std::string, bool>> stack{{a, false}};
        while (!stack.empty()) {
            auto [node, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                color[node] = Color::Black;
                continue;
            }
            if (color[node] == Color::Grey) return false;
            if (color[node] == Color::Black) continue;
            color[node] = Color::Grey;
            stack.push_back({node, true});
            for (const auto& d : deps[node]) {
                if (color[d] == Color::Grey) return false;
                if (color[d] == Color::White) stack.push_back({d, false});
            }
        }
    }
    return true;
}

} // namespace semanc
