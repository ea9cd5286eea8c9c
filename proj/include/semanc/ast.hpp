#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace semanc {

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

struct Term {
    enum class Kind { Var, Const, Func };

    Kind kind = Kind::Const;
    std::string name;
    std::vector<Term> args; // Func only

    static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
    static Term constant(std::string n) { return {Kind::Const, std::move(n), {}}; }
    static Term func(std::string n, std::vector<Term> a) {
        return {Kind::Func, std::move(n), std::move(a)};
    }

    bool operator==(const Term&) const = default;
};

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

enum class FormulaKind { Atom, Pred, Not, And, Or, Implies, Iff, Forall, Exists };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula node. Children are shared; whole formulas are cheap to
// copy and safe to reuse across knowledge bases.
class Formula {
public:
    FormulaKind kind;
    std::string name;        // Atom: atom name; Pred: predicate; Forall/Exists: bound variable
    std::vector<Term> terms; // Pred arguments
    FormulaPtr lhs;          // Not/Forall/Exists child, or left operand
    FormulaPtr rhs;          // right operand of binary connectives

    Formula(FormulaKind k, std::string n, std::vector<Term> t, FormulaPtr l, FormulaPtr r)
        : kind(k), name(std::move(n)), terms(std::move(t)), lhs(std::move(l)), rhs(std::move(r)) {}
};

FormulaPtr atom(std::string name);
FormulaPtr pred(std::string name, std::vector<Term> args);
FormulaPtr lnot(FormulaPtr f);
FormulaPtr land(FormulaPtr a, FormulaPtr b);
FormulaPtr lor(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);

bool structurally_equal(const Formula& a, const Formula& b);

// Renders with ASCII connectives and minimal parentheses; parses back to a
// structurally equal formula.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

// Free variables of a formula (in first-occurrence order).
std::vector<std::string> free_variables(const Formula& f);
// Atom names referenced by a propositional formula.
void collect_atoms(const Formula& f, std::vector<std::string>& out);

// ---------------------------------------------------------------------------
// Sentences and knowledge bases
// ---------------------------------------------------------------------------

struct FuzzyInterval {
    double lo = 0.0;
    double hi = 1.0;
    bool operator==(const FuzzyInterval&) const = default;
};

struct PenaltyWeight {
    double w = 1.0;
    bool operator==(const PenaltyWeight&) const = default;
};

using Annotation = std::variant<std::monostate, FuzzyInterval, PenaltyWeight>;

struct Sentence {
    Annotation ann;
    FormulaPtr formula;
    int line = 0; // source position (0 when constructed programmatically)
    int column = 0;
};

struct Signature {
    std::vector<std::string> prop_atoms;
    std::map<std::string, int> predicates; // name -> arity
    std::map<std::string, int> functions;  // name -> arity
    std::vector<std::string> constants;
    std::vector<std::string> domain;

    // Names unique per kind, arities >= 1, domain non-empty when any
    // predicate is declared. Throws DomainError otherwise.
    void validate() const;
};

struct KnowledgeBase {
    Signature signature;
    std::vector<Sentence> sentences;

    void add(FormulaPtr f) { sentences.push_back({std::monostate{}, std::move(f)}); }
    void add_fuzzy(double lo, double hi, FormulaPtr f) {
        sentences.push_back({FuzzyInterval{lo, hi}, std::move(f)});
    }
    void add_penalty(double w, FormulaPtr f) {
        sentences.push_back({PenaltyWeight{w}, std::move(f)});
    }
};

// Canonical name of a ground atom, e.g. P(a,b).
std::string ground_atom_name(const std::string& pred, const std::vector<std::string>& elems);

} // namespace semanc
