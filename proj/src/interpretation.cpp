#include "semanc/interpretation.hpp"

#include <algorithm>
#include <bit>

#include "semanc/errors.hpp"

namespace semanc {

Universe::Universe(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    index_.reserve(atoms_.size());
    for (int i = 0; i < static_cast<int>(atoms_.size()); ++i) {
        if (!index_.emplace(atoms_[static_cast<std::size_t>(i)], i).second)
            throw DomainError("duplicate atom in universe: " + atoms_[static_cast<std::size_t>(i)]);
    }
}

int Universe::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

UniversePtr make_universe(std::vector<std::string> atoms) {
    return std::make_shared<const Universe>(std::move(atoms));
}

UniversePtr universe_of(const Signature& sig) {
    return make_universe(sig.prop_atoms);
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw DomainError("mismatched atom universes");
}

bool Interpretation::is_crisp() const {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return v == 0.0 || v == 1.0; });
}

double Interpretation::value_of(const std::string& atom) const {
    const int i = universe->index_of(atom);
    if (i < 0) throw DomainError("atom outside universe: " + atom);
    return values[static_cast<std::size_t>(i)];
}

Interpretation Interpretation::from_index(UniversePtr u, std::uint32_t idx) {
    const int n = u->size();
    Interpretation m{std::move(u), std::vector<double>(static_cast<std::size_t>(n), 0.0)};
    for (int i = 0; i < n; ++i)
        m.values[static_cast<std::size_t>(i)] = (idx >> i) & 1u ? 1.0 : 0.0;
    return m;
}

std::uint32_t Interpretation::to_index() const {
    const int n = universe->size();
    if (n > InterpretationSet::kMaxExplicitAtoms)
        throw DomainError("universe too large for indexed form");
    std::uint32_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const double v = values[static_cast<std::size_t>(i)];
        if (v != 0.0 && v != 1.0) throw DomainError("non-crisp interpretation");
        if (v == 1.0) idx |= 1u << i;
    }
    return idx;
}

std::string Interpretation::bits() const {
    std::string s;
    s.reserve(values.size());
    for (double v : values) s += v == 1.0 ? '1' : '0';
    return s;
}

bool Interpretation::operator==(const Interpretation& other) const {
    return *universe == *other.universe && values == other.values;
}

// ---------------------------------------------------------------------------
// InterpretationSet
// ---------------------------------------------------------------------------

namespace {

bool cube_contains(const PartialAssignment& cube, std::uint32_t idx) {
    for (const auto& [i, v] : cube) {
        if (((idx >> i) & 1u) != static_cast<std::uint32_t>(v)) return false;
    }
    return true;
}

// Intersection of two cubes; nullopt when they conflict.
std::optional<PartialAssignment> merge_cubes(const PartialAssignment& a,
                                             const PartialAssignment& b) {
    PartialAssignment out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.push_back(b[j++]);
        } else {
            if (a[i].second != b[j].second) return std::nullopt;
            out.push_back(a[i++]);
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

} // namespace

std::uint64_t InterpretationSet::word_count() const {
    const std::uint64_t n_states = 1ull << universe_->size();
    return (n_states + 63) / 64;
}

InterpretationSet InterpretationSet::empty_set(UniversePtr u) {
    return InterpretationSet(std::move(u)); // symbolic, no cubes
}

InterpretationSet InterpretationSet::full_set(UniversePtr u) {
    InterpretationSet s(std::move(u));
    s.cubes_.push_back({});
    return s;
}

InterpretationSet InterpretationSet::explicit_empty(UniversePtr u) {
    if (u->size() > kMaxExplicitAtoms)
        throw DomainError("universe too large for explicit interpretation set");
    InterpretationSet s(std::move(u));
    s.explicit_ = std::vector<std::uint64_t>(s.word_count(), 0);
    return s;
}

InterpretationSet InterpretationSet::from_cube(UniversePtr u, PartialAssignment cube) {
    std::sort(cube.begin(), cube.end());
    InterpretationSet s(std::move(u));
    s.cubes_.push_back(std::move(cube));
    return s;
}

InterpretationSet InterpretationSet::from_cubes(UniversePtr u,
                                                std::vector<PartialAssignment> cubes) {
    InterpretationSet s(std::move(u));
    for (auto& c : cubes) std::sort(c.begin(), c.end());
    s.cubes_ = std::move(cubes);
    return s;
}

InterpretationSet InterpretationSet::from_indices(UniversePtr u,
                                                  const std::vector<std::uint32_t>& idxs) {
    InterpretationSet s = explicit_empty(std::move(u));
    for (std::uint32_t i : idxs) s.insert_index(i);
    return s;
}

void InterpretationSet::insert_index(std::uint32_t idx) {
    (*explicit_)[idx >> 6] |= 1ull << (idx & 63);
}

bool InterpretationSet::contains_index(std::uint32_t idx) const {
    if (explicit_) return ((*explicit_)[idx >> 6] >> (idx & 63)) & 1ull;
    for (const auto& c : cubes_)
        if (cube_contains(c, idx)) return true;
    return false;
}

bool InterpretationSet::contains(const Interpretation& m) const {
    require_same_universe(universe_, m.universe);
    if (universe_->size() <= kMaxExplicitAtoms) return contains_index(m.to_index());
    // Large universes: match cubes against values.
    for (const auto& cube : cubes_) {
        bool ok = true;
        for (const auto& [i, v] : cube) {
            if (m.values[static_cast<std::size_t>(i)] != (v ? 1.0 : 0.0)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

InterpretationSet InterpretationSet::to_explicit() const {
    if (explicit_) return *this;
    if (universe_->size() > kMaxExplicitAtoms)
        throw DomainError("universe too large for explicit interpretation set");
    InterpretationSet out = explicit_empty(universe_);
    const std::uint32_t n_states = 1u << universe_->size();
    for (std::uint32_t idx = 0; idx < n_states; ++idx)
        if (contains_index(idx)) out.insert_index(idx);
    return out;
}

const std::vector<PartialAssignment>& InterpretationSet::cubes() const {
    if (explicit_) throw DomainError("cubes() called on explicit interpretation set");
    return cubes_;
}

bool InterpretationSet::empty() const {
    if (explicit_) {
        for (std::uint64_t w : *explicit_)
            if (w) return false;
        return true;
    }
    return cubes_.empty();
}

std::size_t InterpretationSet::count() const {
    const InterpretationSet e = to_explicit();
    std::size_t n = 0;
    for (std::uint64_t w : *e.explicit_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool InterpretationSet::subset_of(const InterpretationSet& other) const {
    require_same_universe(universe_, other.universe_);
    const InterpretationSet a = to_explicit();
    const InterpretationSet b = other.to_explicit();
    for (std::size_t i = 0; i < a.explicit_->size(); ++i)
        if ((*a.explicit_)[i] & ~(*b.explicit_)[i]) return false;
    return true;
}

bool InterpretationSet::same_as(const InterpretationSet& other) const {
    require_same_universe(universe_, other.universe_);
    const InterpretationSet a = to_explicit();
    const InterpretationSet b = other.to_explicit();
    return *a.explicit_ == *b.explicit_;
}

std::optional<Interpretation>
InterpretationSet::witness_in_difference(const InterpretationSet& other) const {
    require_same_universe(universe_, other.universe_);
    const InterpretationSet a = to_explicit();
    const InterpretationSet b = other.to_explicit();
    for (std::size_t i = 0; i < a.explicit_->size(); ++i) {
        const std::uint64_t diff = (*a.explicit_)[i] & ~(*b.explicit_)[i];
        if (diff) {
            const std::uint32_t idx =
                static_cast<std::uint32_t>(i * 64 + static_cast<std::size_t>(std::countr_zero(diff)));
            return Interpretation::from_index(universe_, idx);
        }
    }
    return std::nullopt;
}

std::vector<Interpretation> InterpretationSet::members() const {
    std::vector<Interpretation> out;
    for (std::uint32_t idx : member_indices())
        out.push_back(Interpretation::from_index(universe_, idx));
    return out;
}

std::vector<std::uint32_t> InterpretationSet::member_indices() const {
    const InterpretationSet e = to_explicit();
    std::vector<std::uint32_t> out;
    const std::uint32_t n_states = 1u << universe_->size();
    for (std::uint32_t idx = 0; idx < n_states; ++idx)
        if (e.contains_index(idx)) out.push_back(idx);
    return out;
}

InterpretationSet set_union(const InterpretationSet& a, const InterpretationSet& b) {
    require_same_universe(a.universe_, b.universe_);
    if (a.explicit_ || b.explicit_ || a.universe_->size() <= InterpretationSet::kMaxExplicitAtoms) {
        InterpretationSet ea = a.to_explicit();
        const InterpretationSet eb = b.to_explicit();
        for (std::size_t i = 0; i < ea.explicit_->size(); ++i)
            (*ea.explicit_)[i] |= (*eb.explicit_)[i];
        return ea;
    }
    InterpretationSet out(a.universe_);
    out.cubes_ = a.cubes_;
    out.cubes_.insert(out.cubes_.end(), b.cubes_.begin(), b.cubes_.end());
    return out;
}

InterpretationSet set_intersection(const InterpretationSet& a, const InterpretationSet& b) {
    require_same_universe(a.universe_, b.universe_);
    if (a.explicit_ || b.explicit_ || a.universe_->size() <= InterpretationSet::kMaxExplicitAtoms) {
        InterpretationSet ea = a.to_explicit();
        const InterpretationSet eb = b.to_explicit();
        for (std::size_t i = 0; i < ea.explicit_->size(); ++i)
            (*ea.explicit_)[i] &= (*eb.explicit_)[i];
        return ea;
    }
    InterpretationSet out(a.universe_);
    for (const auto& ca : a.cubes_) {
        for (const auto& cb : b.cubes_) {
            if (auto merged = merge_cubes(ca, cb)) out.cubes_.push_back(std::move(*merged));
        }
    }
    return out;
}

} // namespace semanc
