#include "semanc/ast.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "semanc/errors.hpp"

namespace semanc {

namespace {

FormulaPtr make(FormulaKind k, std::string n, std::vector<Term> t, FormulaPtr l, FormulaPtr r) {
    return std::make_shared<const Formula>(k, std::move(n), std::move(t), std::move(l),
                                           std::move(r));
}

// Precedence for printing: loosest binds last.
int precedence(FormulaKind k) {
    switch (k) {
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    default: return 5; // Not, quantifiers, atoms
    }
}

void print(const Formula& f, int parent_prec, std::ostream& os) {
    const int prec = precedence(f.kind);
    const bool parens = prec < parent_prec;
    if (parens) os << '(';
    switch (f.kind) {
    case FormulaKind::Atom:
        os << f.name;
        break;
    case FormulaKind::Pred: {
        os << f.name << '(';
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
            if (i) os << ',';
            os << to_string(f.terms[i]);
        }
        os << ')';
        break;
    }
    case FormulaKind::Not:
        os << '~';
        print(*f.lhs, 5, os);
        break;
    case FormulaKind::And:
        print(*f.lhs, 4, os);
        os << " & ";
        print(*f.rhs, 5, os); // left-assoc: right child needs tighter
        break;
    case FormulaKind::Or:
        print(*f.lhs, 3, os);
        os << " | ";
        print(*f.rhs, 4, os);
        break;
    case FormulaKind::Implies:
        print(*f.lhs, 3, os); // right-assoc
        os << " -> ";
        print(*f.rhs, 2, os);
        break;
    case FormulaKind::Iff:
        print(*f.lhs, 1, os); // left-assoc
        os << " <-> ";
        print(*f.rhs, 2, os);
        break;
    case FormulaKind::Forall:
        os << "forall " << f.name << ". ";
        print(*f.lhs, 5, os);
        break;
    case FormulaKind::Exists:
        os << "exists " << f.name << ". ";
        print(*f.lhs, 5, os);
        break;
    }
    if (parens) os << ')';
}

void free_vars_rec(const Term& t, const std::set<std::string>& bound,
                   std::vector<std::string>& out) {
    if (t.kind == Term::Kind::Var) {
        if (!bound.count(t.name) && std::find(out.begin(), out.end(), t.name) == out.end())
            out.push_back(t.name);
    }
    for (const Term& a : t.args) free_vars_rec(a, bound, out);
}

void free_vars_rec(const Formula& f, std::set<std::string> bound, std::vector<std::string>& out) {
    switch (f.kind) {
    case FormulaKind::Atom:
        break;
    case FormulaKind::Pred:
        for (const Term& t : f.terms) free_vars_rec(t, bound, out);
        break;
    case FormulaKind::Not:
        free_vars_rec(*f.lhs, bound, out);
        break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
        bound.insert(f.name);
        free_vars_rec(*f.lhs, std::move(bound), out);
        break;
    default:
        free_vars_rec(*f.lhs, bound, out);
        free_vars_rec(*f.rhs, std::move(bound), out);
    }
}

} // namespace

FormulaPtr atom(std::string name) {
    return make(FormulaKind::Atom, std::move(name), {}, nullptr, nullptr);
}
FormulaPtr pred(std::string name, std::vector<Term> args) {
    return make(FormulaKind::Pred, std::move(name), std::move(args), nullptr, nullptr);
}
FormulaPtr lnot(FormulaPtr f) {
    return make(FormulaKind::Not, "", {}, std::move(f), nullptr);
}
FormulaPtr land(FormulaPtr a, FormulaPtr b) {
    return make(FormulaKind::And, "", {}, std::move(a), std::move(b));
}
FormulaPtr lor(FormulaPtr a, FormulaPtr b) {
    return make(FormulaKind::Or, "", {}, std::move(a), std::move(b));
}
FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
    return make(FormulaKind::Implies, "", {}, std::move(a), std::move(b));
}
FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
    return make(FormulaKind::Iff, "", {}, std::move(a), std::move(b));
}
FormulaPtr forall(std::string var, FormulaPtr body) {
    return make(FormulaKind::Forall, std::move(var), {}, std::move(body), nullptr);
}
FormulaPtr exists(std::string var, FormulaPtr body) {
    return make(FormulaKind::Exists, std::move(var), {}, std::move(body), nullptr);
}

bool structurally_equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind || a.name != b.name || a.terms != b.terms) return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
    if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

std::string to_string(const Term& t) {
    std::string s = t.name;
    if (t.kind == Term::Kind::Func) {
        s += '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) s += ',';
            s += to_string(t.args[i]);
        }
        s += ')';
    }
    return s;
}

std::string to_string(const Formula& f) {
    std::ostringstream os;
    print(f, 0, os);
    return os.str();
}

std::vector<std::string> free_variables(const Formula& f) {
    std::vector<std::string> out;
    free_vars_rec(f, {}, out);
    return out;
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind) {
    case FormulaKind::Atom:
        if (std::find(out.begin(), out.end(), f.name) == out.end()) out.push_back(f.name);
        break;
    case FormulaKind::Pred:
        break;
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
        collect_atoms(*f.lhs, out);
        break;
    default:
        collect_atoms(*f.lhs, out);
        collect_atoms(*f.rhs, out);
    }
}

void Signature::validate() const {
    std::set<std::string> seen;
    for (const auto& a : prop_atoms)
        if (!seen.insert(a).second) throw DomainError("duplicate atom name: " + a);
    seen.clear();
    for (const auto& [name, arity] : predicates) {
        if (arity < 1) throw DomainError("predicate arity must be >= 1: " + name);
    }
    for (const auto& [name, arity] : functions) {
        if (arity < 1) throw DomainError("function arity must be >= 1: " + name);
    }
    for (const auto& c : constants)
        if (!seen.insert(c).second) throw DomainError("duplicate constant name: " + c);
    seen.clear();
    for (const auto& d : domain)
        if (!seen.insert(d).second) throw DomainError("duplicate domain element: " + d);
    if (!predicates.empty() && domain.empty())
        throw DomainError("a domain is required when predicates are declared");
}

std::string ground_atom_name(const std::string& pred, const std::vector<std::string>& elems) {
    std::string s = pred;
    s += '(';
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ',';
        s += elems[i];
    }
    s += ')';
    return s;
}

} // namespace semanc
