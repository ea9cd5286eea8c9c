#include "semanc/complexity.hpp"

#include "semanc/errors.hpp"

namespace semanc {

namespace {

constexpr std::array<std::uint64_t, 4> kZero{0, 0, 0, 0};

std::array<std::uint64_t, 4> mask_and(const std::array<std::uint64_t, 4>& a,
                                      const std::array<std::uint64_t, 4>& b) {
    return {a[0] & b[0], a[1] & b[1], a[2] & b[2], a[3] & b[3]};
}
std::array<std::uint64_t, 4> mask_or(const std::array<std::uint64_t, 4>& a,
                                     const std::array<std::uint64_t, 4>& b) {
    return {a[0] | b[0], a[1] | b[1], a[2] | b[2], a[3] | b[3]};
}
std::array<std::uint64_t, 4> mask_not(const std::array<std::uint64_t, 4>& a) {
    return {~a[0], ~a[1], ~a[2], ~a[3]};
}

} // namespace

ComplexitySearcher::ComplexitySearcher(UniversePtr at, ComplexityConfig cfg)
    : at_(std::move(at)), cfg_(std::move(cfg)) {
    if (at_->size() > 8) throw DomainError("exact complexity search limited to 8 atoms");
    n_states_ = 1u << at_->size();
    levels_.resize(static_cast<std::size_t>(cfg_.max_cost) + 1);
}

ComplexitySearcher::Mask ComplexitySearcher::normalize(Mask m) const {
    // Clear bits beyond 2^n.
    for (std::uint32_t idx = n_states_; idx < 256; ++idx)
        m[idx >> 6] &= ~(1ull << (idx & 63));
    return m;
}

ComplexitySearcher::Mask ComplexitySearcher::atom_mask(int atom_index) const {
    Mask m = kZero;
    for (std::uint32_t idx = 0; idx < n_states_; ++idx)
        if ((idx >> atom_index) & 1u) m[idx >> 6] |= 1ull << (idx & 63);
    return m;
}

bool ComplexitySearcher::record(const Mask& mask, FormulaPtr formula, int cost) {
    if (seen_.size() >= cfg_.max_entries) {
        capped_ = true;
        return false;
    }
    auto [it, inserted] = seen_.emplace(mask, std::make_pair(cost, formula));
    if (!inserted) return false;
    levels_[static_cast<std::size_t>(cost)].push_back({mask, std::move(formula)});
    return true;
}

void ComplexitySearcher::build_level(int cost) {
    if (cost == 1) {
        for (int a = 0; a < at_->size(); ++a)
            record(atom_mask(a), atom(at_->atom(a)), 1);
    }
    for (const QuantTemplate& t : cfg_.templates) {
        if (t.cost != cost) continue;
        Mask m = kZero;
        for (std::uint32_t idx : t.satisfying) m[idx >> 6] |= 1ull << (idx & 63);
        record(m, t.formula, cost);
    }
    // Negations of the previous level. record() only appends to the current
    // level, so iterating lower levels by reference is safe.
    if (cost >= 2) {
        const auto& prev = levels_[static_cast<std::size_t>(cost) - 1];
        for (const Entry& e : prev) record(normalize(mask_not(e.mask)), lnot(e.formula), cost);
    }
    // Binary connectives over cost splits i + j = cost - 1.
    for (int i = 1; i + 2 <= cost; ++i) {
        const int j = cost - 1 - i;
        if (j < 1 || j >= static_cast<int>(levels_.size())) continue;
        const auto& left = levels_[static_cast<std::size_t>(i)];
        const auto& right = levels_[static_cast<std::size_t>(j)];
        for (const Entry& a : left) {
            for (const Entry& b : right) {
                record(mask_and(a.mask, b.mask), land(a.formula, b.formula), cost);
                record(mask_or(a.mask, b.mask), lor(a.formula, b.formula), cost);
                record(normalize(mask_or(mask_not(a.mask), b.mask)),
                       implies(a.formula, b.formula), cost);
                // iff holds where both sides agree
                record(mask_or(mask_and(a.mask, b.mask),
                               normalize(mask_and(mask_not(a.mask), mask_not(b.mask)))),
                       iff(a.formula, b.formula), cost);
            }
        }
    }
}

ComplexityResult ComplexitySearcher::complexity_of(const Interpretation& m) {
    require_same_universe(at_, m.universe);
    return complexity_of_index(m.to_index());
}

ComplexityResult ComplexitySearcher::complexity_of_index(std::uint32_t idx) {
    Mask target = kZero;
    target[idx >> 6] |= 1ull << (idx & 63);

    auto found = seen_.find(target);
    for (int cost = built_ + 1; cost <= cfg_.max_cost && found == seen_.end(); ++cost) {
        build_level(cost);
        built_ = cost;
        found = seen_.find(target);
    }
    if (found == seen_.end()) found = seen_.find(target);
    if (found != seen_.end())
        return {found->second.first, found->second.second, true};

    // Budget exhausted: fall back to the literal-conjunction bound.
    ComplexityResult bound = literal_conjunction_bound(Interpretation::from_index(at_, idx));
    (void)capped_;
    return bound;
}

ComplexityResult model_complexity(const Interpretation& m, const ComplexityConfig& cfg) {
    if (m.universe->size() > 8) return literal_conjunction_bound(m); // beyond exact mode
    ComplexitySearcher searcher(m.universe, cfg);
    return searcher.complexity_of(m);
}

ComplexityResult literal_conjunction_bound(const Interpretation& m) {
    if (!m.is_crisp()) throw DomainError("complexity is defined for crisp interpretations");
    FormulaPtr conj;
    int cost = 0;
    for (int i = 0; i < m.universe->size(); ++i) {
        const bool v = m.values[static_cast<std::size_t>(i)] == 1.0;
        FormulaPtr lit = atom(m.universe->atom(i));
        cost += v ? 1 : 2;
        if (!v) lit = lnot(std::move(lit));
        if (conj) {
            conj = land(std::move(conj), std::move(lit));
            cost += 1;
        } else {
            conj = std::move(lit);
        }
    }
    if (!conj) throw DomainError("empty universe has no describing sentence");
    return {cost, std::move(conj), false};
}

} // namespace semanc
