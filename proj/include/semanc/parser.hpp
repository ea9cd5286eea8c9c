#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "semanc/ast.hpp"
#include "semanc/logic_program.hpp"

namespace semanc {

enum class ParseKind { Prop, Fol, Program, Penalty, Fuzzy };

struct ParseResult {
    Signature signature;
    std::optional<KnowledgeBase> kb;      // all kinds except Program
    std::optional<LogicProgram> program;  // Program kind
};

// Parses KB/program text. Grammar:
//
//   atoms A B C;   domain D = {a, b};   pred P/1;   func f/1;   const a;
//   sentence:  [annotation] formula .
//   annotation: "[lo,hi]:" (fuzzy) or "w ::" (penalty)
//   precedence, loosest to tightest: <->  ->(right-assoc)  |  &  ~/quantifiers
//   quantifiers: "forall x. ..."  "exists x. ..."
//   program rule: "Head :- L1, L2."  or fact "Head."  with Li = Atom | ~Atom
//   comments: '#' to end of line; identifiers [A-Za-z][A-Za-z0-9_]*
//
// Undeclared propositional atoms are appended to the signature in first-use
// order; undeclared predicates/functions get their arity from first use.
// Throws ParseError with the offending line/column.
ParseResult parse_kb(std::string_view text, ParseKind kind);

ParseKind parse_kind_from_name(const std::string& name); // "prop"|"fol"|...

std::string print_kb(const KnowledgeBase& kb);

} // namespace semanc
