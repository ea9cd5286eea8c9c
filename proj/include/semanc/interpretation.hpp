#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semanc/ast.hpp"

namespace semanc {

// Ordered atom universe shared by interpretations and interpretation sets.
class Universe {
public:
    explicit Universe(std::vector<std::string> atoms);

    int size() const { return static_cast<int>(atoms_.size()); }
    const std::string& atom(int i) const { return atoms_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& atoms() const { return atoms_; }
    // -1 when absent.
    int index_of(const std::string& name) const;

    bool operator==(const Universe& other) const { return atoms_ == other.atoms_; }

private:
    std::vector<std::string> atoms_;
    std::unordered_map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> atoms);
// Universe of a propositional signature (its declared atoms).
UniversePtr universe_of(const Signature& sig);
// Throws DomainError unless both pointers refer to equal universes.
void require_same_universe(const UniversePtr& a, const UniversePtr& b);

// Total truth assignment. Values are numeric so the crisp and fuzzy paths
// share code; crisp operations assert entries are exactly 0 or 1.
struct Interpretation {
    UniversePtr universe;
    std::vector<double> values;

    bool is_crisp() const;
    double value_of(const std::string& atom) const; // throws on unknown atom

    // Bit i of idx is the value of atom i. Crisp universes of <= 24 atoms.
    static Interpretation from_index(UniversePtr u, std::uint32_t idx);
    std::uint32_t to_index() const;

    std::string bits() const; // e.g. "101" in atom order

    bool operator==(const Interpretation& other) const;
};

// Partial truth assignment: (atom index, value) pairs sorted by index.
// Denotes the set of all completions.
using PartialAssignment = std::vector<std::pair<int, bool>>;

// Set of interpretations over a fixed universe.
//
// Explicit form: one bit per interpretation index, only for universes of
// <= 24 atoms. Symbolic form: a union of partial-assignment cubes, usable
// for any universe size. Conversions are explicit operations.
class InterpretationSet {
public:
    static constexpr int kMaxExplicitAtoms = 24;

    static InterpretationSet empty_set(UniversePtr u);
    static InterpretationSet full_set(UniversePtr u); // symbolic single empty cube
    static InterpretationSet explicit_empty(UniversePtr u);
    static InterpretationSet from_cube(UniversePtr u, PartialAssignment cube);
    static InterpretationSet from_cubes(UniversePtr u, std::vector<PartialAssignment> cubes);
    static InterpretationSet from_indices(UniversePtr u, const std::vector<std::uint32_t>& idxs);

    const UniversePtr& universe() const { return universe_; }
    bool is_explicit() const { return explicit_.has_value(); }

    void insert_index(std::uint32_t idx); // explicit form only
    bool contains_index(std::uint32_t idx) const;
    bool contains(const Interpretation& m) const;

    InterpretationSet to_explicit() const; // throws DomainError when |At| > 24
    const std::vector<PartialAssignment>& cubes() const; // symbolic form only

    bool empty() const;
    std::size_t count() const; // number of interpretations (explicit path)

    bool subset_of(const InterpretationSet& other) const;
    bool same_as(const InterpretationSet& other) const;

    // Some member of this \ other, if any.
    std::optional<Interpretation> witness_in_difference(const InterpretationSet& other) const;
    std::vector<Interpretation> members() const;
    std::vector<std::uint32_t> member_indices() const;

    friend InterpretationSet set_union(const InterpretationSet& a, const InterpretationSet& b);
    friend InterpretationSet set_intersection(const InterpretationSet& a,
                                              const InterpretationSet& b);

private:
    explicit InterpretationSet(UniversePtr u) : universe_(std::move(u)) {}

    std::uint64_t word_count() const;

    UniversePtr universe_;
    std::optional<std::vector<std::uint64_t>> explicit_; // bitset over 2^n indices
    std::vector<PartialAssignment> cubes_;               // symbolic form
};

} // namespace semanc
