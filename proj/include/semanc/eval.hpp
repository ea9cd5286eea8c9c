#pragma once

#include <map>
#include <string>
#include <vector>

#include "semanc/ast.hpp"
#include "semanc/interpretation.hpp"

namespace semanc {

// Fuzzy connective family. Negation is 1-x; or/implies derive from the t-norm
// through A|B = ~(~A & ~B) and A->B = ~A | B; iff expands to (A->B) & (B->A).
// Universal quantifiers take the infimum over the domain, existential the
// supremum.
enum class TNorm { Min, Product, Lukasiewicz };

struct FuzzyConfig {
    TNorm tnorm = TNorm::Min;
};

double fuzzy_and(TNorm t, double a, double b);
double fuzzy_or(TNorm t, double a, double b);
double fuzzy_implies(TNorm t, double a, double b);
inline double fuzzy_not(double a) { return 1.0 - a; }

// Finite first-order structure: domain plus total constant/function/predicate
// tables. Predicate values are crisp 0/1 or fuzzy [0,1].
struct FirstOrderStructure {
    Signature signature;
    std::map<std::string, std::string> constant_map; // constant -> domain element
    std::map<std::string, std::map<std::vector<std::string>, std::string>> function_tables;
    std::map<std::string, std::map<std::vector<std::string>, double>> predicate_tables;

    // Resolves a variable-free term to a domain element.
    std::string eval_term(const Term& t, const std::map<std::string, std::string>& assignment) const;
    double pred_value(const std::string& name, const std::vector<std::string>& elems) const;
};

using VariableAssignment = std::map<std::string, std::string>;

// Crisp evaluation; all referenced values must be exactly 0 or 1.
double evaluate(const Formula& f, const Interpretation& m);
double evaluate(const Formula& f, const FirstOrderStructure& s, const VariableAssignment& mu);

// Compositional fuzzy evaluation; values anywhere in [0,1].
double evaluate_fuzzy(const Formula& f, const Interpretation& m, const FuzzyConfig& cfg);
double evaluate_fuzzy(const Formula& f, const FirstOrderStructure& s, const VariableAssignment& mu,
                      const FuzzyConfig& cfg);

// True when m satisfies every sentence of kb (crisp, unannotated or fuzzy
// sentences checked for interval membership of the crisp value).
bool satisfies(const KnowledgeBase& kb, const Interpretation& m);

} // namespace semanc
