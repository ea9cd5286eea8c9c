#include "semanc/eval.hpp"

#include <algorithm>
#include <cmath>

#include "semanc/errors.hpp"

namespace semanc {

double fuzzy_and(TNorm t, double a, double b) {
    switch (t) {
    case TNorm::Min: return std::min(a, b);
    case TNorm::Product: return a * b;
    case TNorm::Lukasiewicz: return std::max(0.0, a + b - 1.0);
    }
    return 0.0;
}

double fuzzy_or(TNorm t, double a, double b) {
    return fuzzy_not(fuzzy_and(t, fuzzy_not(a), fuzzy_not(b)));
}

double fuzzy_implies(TNorm t, double a, double b) {
    return fuzzy_or(t, fuzzy_not(a), b);
}

std::string FirstOrderStructure::eval_term(const Term& t,
                                           const std::map<std::string, std::string>& mu) const {
    switch (t.kind) {
    case Term::Kind::Var: {
        auto it = mu.find(t.name);
        if (it == mu.end()) throw DomainError("unassigned variable: " + t.name);
        return it->second;
    }
    case Term::Kind::Const: {
        auto it = constant_map.find(t.name);
        if (it != constant_map.end()) return it->second;
        // Domain elements act as constants naming themselves.
        if (std::find(signature.domain.begin(), signature.domain.end(), t.name) !=
            signature.domain.end())
            return t.name;
        throw DomainError("constant without domain element: " + t.name);
    }
    case Term::Kind::Func: {
        std::vector<std::string> args;
        args.reserve(t.args.size());
        for (const Term& a : t.args) args.push_back(eval_term(a, mu));
        auto ft = function_tables.find(t.name);
        if (ft == function_tables.end())
            throw DomainError("unreducible term: no table for function " + t.name);
        auto row = ft->second.find(args);
        if (row == ft->second.end())
            throw DomainError("unreducible term: incomplete table for function " + t.name);
        return row->second;
    }
    }
    throw DomainError("bad term");
}

double FirstOrderStructure::pred_value(const std::string& name,
                                       const std::vector<std::string>& elems) const {
    auto it = predicate_tables.find(name);
    if (it == predicate_tables.end()) throw DomainError("no table for predicate " + name);
    auto row = it->second.find(elems);
    if (row == it->second.end())
        throw DomainError("incomplete table for predicate " + name);
    return row->second;
}

namespace {

struct PropLookup {
    const Interpretation& m;
    double operator()(const Formula& f, const VariableAssignment&) const {
        if (f.kind == FormulaKind::Pred) {
            // Ground predicates double as atoms named P(a,...).
            std::vector<std::string> elems;
            for (const Term& t : f.terms) {
                if (t.kind != Term::Kind::Const)
                    throw DomainError("non-ground predicate in propositional evaluation: " +
                                      f.name);
                elems.push_back(t.name);
            }
            return m.value_of(ground_atom_name(f.name, elems));
        }
        return m.value_of(f.name);
    }
    const std::vector<std::string>* domain() const { return nullptr; }
};

struct StructLookup {
    const FirstOrderStructure& s;
    double operator()(const Formula& f, const VariableAssignment& mu) const {
        if (f.kind == FormulaKind::Atom) {
            // Propositional atoms may appear as 0-ary lookups in mixed KBs.
            throw DomainError("propositional atom in first-order evaluation: " + f.name);
        }
        std::vector<std::string> elems;
        elems.reserve(f.terms.size());
        for (const Term& t : f.terms) elems.push_back(s.eval_term(t, mu));
        return s.pred_value(f.name, elems);
    }
    const std::vector<std::string>* domain() const { return &s.signature.domain; }
};

template <typename Lookup>
double eval_rec(const Formula& f, const Lookup& lk, VariableAssignment& mu,
                const FuzzyConfig& cfg) {
    switch (f.kind) {
    case FormulaKind::Atom:
    case FormulaKind::Pred:
        return lk(f, mu);
    case FormulaKind::Not:
        return fuzzy_not(eval_rec(*f.lhs, lk, mu, cfg));
    case FormulaKind::And:
        return fuzzy_and(cfg.tnorm, eval_rec(*f.lhs, lk, mu, cfg), eval_rec(*f.rhs, lk, mu, cfg));
    case FormulaKind::Or:
        return fuzzy_or(cfg.tnorm, eval_rec(*f.lhs, lk, mu, cfg), eval_rec(*f.rhs, lk, mu, cfg));
    case FormulaKind::Implies:
        return fuzzy_implies(cfg.tnorm, eval_rec(*f.lhs, lk, mu, cfg),
                             eval_rec(*f.rhs, lk, mu, cfg));
    case FormulaKind::Iff: {
        const double a = eval_rec(*f.lhs, lk, mu, cfg);
        const double b = eval_rec(*f.rhs, lk, mu, cfg);
        return fuzzy_and(cfg.tnorm, fuzzy_implies(cfg.tnorm, a, b),
                         fuzzy_implies(cfg.tnorm, b, a));
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
        const std::vector<std::string>* dom = lk.domain();
        if (!dom || dom->empty())
            throw DomainError("quantifier requires a non-empty finite domain");
        const bool universal = f.kind == FormulaKind::Forall;
        double acc = universal ? 1.0 : 0.0;
        for (const std::string& d : *dom) {
            auto saved = mu.find(f.name) != mu.end() ? std::optional(mu[f.name]) : std::nullopt;
            mu[f.name] = d;
            const double v = eval_rec(*f.lhs, lk, mu, cfg);
            if (saved)
                mu[f.name] = *saved;
            else
                mu.erase(f.name);
            acc = universal ? std::min(acc, v) : std::max(acc, v);
        }
        return acc;
    }
    }
    throw DomainError("bad formula");
}

void require_crisp(const Interpretation& m) {
    if (!m.is_crisp()) throw DomainError("crisp evaluation requires 0/1 values");
}

void require_crisp(const FirstOrderStructure& s) {
    for (const auto& [name, table] : s.predicate_tables)
        for (const auto& [args, v] : table)
            if (v != 0.0 && v != 1.0)
                throw DomainError("crisp evaluation requires 0/1 predicate tables: " + name);
}

void require_unit_range(const Interpretation& m) {
    for (double v : m.values)
        if (v < 0.0 || v > 1.0 || std::isnan(v))
            throw DomainError("fuzzy value outside [0,1]");
}

} // namespace

// On {0,1} inputs every t-norm family computes the classical connectives, so
// the crisp path reuses the fuzzy recursion with an input assertion.
double evaluate(const Formula& f, const Interpretation& m) {
    require_crisp(m);
    VariableAssignment mu;
    return eval_rec(f, PropLookup{m}, mu, FuzzyConfig{});
}

double evaluate(const Formula& f, const FirstOrderStructure& s, const VariableAssignment& mu) {
    require_crisp(s);
    VariableAssignment scratch = mu;
    return eval_rec(f, StructLookup{s}, scratch, FuzzyConfig{});
}

double evaluate_fuzzy(const Formula& f, const Interpretation& m, const FuzzyConfig& cfg) {
    require_unit_range(m);
    VariableAssignment mu;
    return eval_rec(f, PropLookup{m}, mu, cfg);
}

double evaluate_fuzzy(const Formula& f, const FirstOrderStructure& s,
                      const VariableAssignment& mu, const FuzzyConfig& cfg) {
    VariableAssignment scratch = mu;
    return eval_rec(f, StructLookup{s}, scratch, cfg);
}

bool satisfies(const KnowledgeBase& kb, const Interpretation& m) {
    for (const Sentence& s : kb.sentences) {
        if (const auto* fi = std::get_if<FuzzyInterval>(&s.ann)) {
            const double v = evaluate(*s.formula, m);
            if (v < fi->lo || v > fi->hi) return false;
        } else {
            if (evaluate(*s.formula, m) != 1.0) return false;
        }
    }
    return true;
}

} // namespace semanc
