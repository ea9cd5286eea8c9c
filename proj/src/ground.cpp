#include "semanc/ground.hpp"

#include "semanc/errors.hpp"

namespace semanc {

namespace {

void domain_tuples_rec(const std::vector<std::string>& domain, int arity,
                       std::vector<std::string>& current,
                       std::vector<std::vector<std::string>>& out) {
    if (arity == 0) {
        out.push_back(current);
        return;
    }
    for (const std::string& d : domain) {
        current.push_back(d);
        domain_tuples_rec(domain, arity - 1, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<std::string>> domain_tuples(const std::vector<std::string>& domain,
                                                    int arity) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> current;
    domain_tuples_rec(domain, arity, current, out);
    return out;
}

FormulaPtr ground_rec(const Formula& f, const FirstOrderStructure& terms,
                      VariableAssignment& mu) {
    switch (f.kind) {
    case FormulaKind::Atom:
        return atom(f.name);
    case FormulaKind::Pred: {
        std::vector<std::string> elems;
        elems.reserve(f.terms.size());
        for (const Term& t : f.terms) elems.push_back(terms.eval_term(t, mu));
        return atom(ground_atom_name(f.name, elems));
    }
    case FormulaKind::Not:
        return lnot(ground_rec(*f.lhs, terms, mu));
    case FormulaKind::And:
        return land(ground_rec(*f.lhs, terms, mu), ground_rec(*f.rhs, terms, mu));
    case FormulaKind::Or:
        return lor(ground_rec(*f.lhs, terms, mu), ground_rec(*f.rhs, terms, mu));
    case FormulaKind::Implies:
        return implies(ground_rec(*f.lhs, terms, mu), ground_rec(*f.rhs, terms, mu));
    case FormulaKind::Iff:
        return iff(ground_rec(*f.lhs, terms, mu), ground_rec(*f.rhs, terms, mu));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
        const auto& domain = terms.signature.domain;
        if (domain.empty()) throw DomainError("cannot ground quantifier over empty domain");
        FormulaPtr acc;
        for (const std::string& d : domain) {
            mu[f.name] = d;
            FormulaPtr inst = ground_rec(*f.lhs, terms, mu);
            mu.erase(f.name);
            if (!acc)
                acc = std::move(inst);
            else
                acc = f.kind == FormulaKind::Forall ? land(std::move(acc), std::move(inst))
                                                    : lor(std::move(acc), std::move(inst));
        }
        return acc;
    }
    }
    throw DomainError("bad formula");
}

} // namespace

UniversePtr ground_universe(const Signature& sig) {
    std::vector<std::string> atoms = sig.prop_atoms;
    for (const auto& [name, arity] : sig.predicates) {
        for (const auto& tuple : domain_tuples(sig.domain, arity))
            atoms.push_back(ground_atom_name(name, tuple));
    }
    return make_universe(std::move(atoms));
}

KnowledgeBase ground(const KnowledgeBase& kb, const GroundingContext& ctx) {
    FirstOrderStructure terms;
    terms.signature = kb.signature;
    terms.constant_map = ctx.constant_map;
    terms.function_tables = ctx.function_tables;

    KnowledgeBase out;
    out.signature.prop_atoms = ground_universe(kb.signature)->atoms();
    for (const Sentence& s : kb.sentences) {
        VariableAssignment mu;
        out.sentences.push_back({s.ann, ground_rec(*s.formula, terms, mu), s.line, s.column});
    }
    return out;
}

Interpretation induced_interpretation(const FirstOrderStructure& s, const UniversePtr& u) {
    Interpretation m{u, std::vector<double>(static_cast<std::size_t>(u->size()), 0.0)};
    for (const auto& [name, arity] : s.signature.predicates) {
        for (const auto& tuple : domain_tuples(s.signature.domain, arity)) {
            const int i = u->index_of(ground_atom_name(name, tuple));
            if (i < 0) throw DomainError("ground atom missing from universe");
            m.values[static_cast<std::size_t>(i)] = s.pred_value(name, tuple);
        }
    }
    return m;
}

} // namespace semanc
