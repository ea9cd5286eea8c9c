#include "semanc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "semanc/errors.hpp"

namespace semanc {

namespace {

enum class Tok {
    Ident, Number,
    LParen, RParen, LBrace, RBrace, LBracket, RBracket,
    Comma, Semicolon, Dot, Slash, Equals,
    Tilde, Amp, Pipe, Arrow, DArrow, ColonDash, DColon, Colon,
    End
};

struct Token {
    Tok kind;
    std::string text;
    double number = 0.0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            current_.text.clear();
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                bump();
            current_.kind = Tok::Ident;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                bump();
            if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                bump();
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    bump();
            }
            current_.kind = Tok::Number;
            current_.text = std::string(text_.substr(start, pos_ - start));
            std::from_chars(current_.text.data(), current_.text.data() + current_.text.size(),
                            current_.number);
            return;
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
        };
        if (two('-', '>')) { bump(); bump(); current_.kind = Tok::Arrow; return; }
        if (two('<', '-')) {
            bump(); bump();
            if (pos_ < text_.size() && text_[pos_] == '>') { bump(); current_.kind = Tok::DArrow; return; }
            throw ParseError("expected '<->'", current_.line, current_.column);
        }
        if (two(':', '-')) { bump(); bump(); current_.kind = Tok::ColonDash; return; }
        if (two(':', ':')) { bump(); bump(); current_.kind = Tok::DColon; return; }
        bump();
        switch (c) {
        case '(': current_.kind = Tok::LParen; return;
        case ')': current_.kind = Tok::RParen; return;
        case '{': current_.kind = Tok::LBrace; return;
        case '}': current_.kind = Tok::RBrace; return;
        case '[': current_.kind = Tok::LBracket; return;
        case ']': current_.kind = Tok::RBracket; return;
        case ',': current_.kind = Tok::Comma; return;
        case ';': current_.kind = Tok::Semicolon; return;
        case '.': current_.kind = Tok::Dot; return;
        case '/': current_.kind = Tok::Slash; return;
        case '=': current_.kind = Tok::Equals; return;
        case '~': current_.kind = Tok::Tilde; return;
        case '&': current_.kind = Tok::Amp; return;
        case '|': current_.kind = Tok::Pipe; return;
        case ':': current_.kind = Tok::Colon; return;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", current_.line,
                             current_.column);
        }
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

bool is_keyword(const std::string& s) {
    return s == "atoms" || s == "domain" || s == "pred" || s == "func" || s == "const" ||
           s == "forall" || s == "exists";
}

class Parser {
public:
    Parser(std::string_view text, ParseKind kind) : lex_(text), kind_(kind) {}

    ParseResult run() {
        ParseResult out;
        if (kind_ == ParseKind::Program)
            out.program = LogicProgram{};
        else
            out.kb = KnowledgeBase{};

        while (lex_.peek().kind != Tok::End) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::Ident && t.text == "atoms") { parse_atoms_decl(); continue; }
            if (t.kind == Tok::Ident && t.text == "domain") { parse_domain_decl(); continue; }
            if (t.kind == Tok::Ident && t.text == "pred") { parse_pred_decl(); continue; }
            if (t.kind == Tok::Ident && t.text == "func") { parse_func_decl(); continue; }
            if (t.kind == Tok::Ident && t.text == "const") { parse_const_decl(); continue; }
            if (kind_ == ParseKind::Program)
                parse_rule(*out.program);
            else
                parse_sentence(*out.kb);
        }

        sig_.validate();
        if (kind_ == ParseKind::Program) {
            // Universe: declared atoms plus mentioned ones, first-use order.
            out.program->atoms = sig_.prop_atoms;
        } else {
            out.kb->signature = sig_;
        }
        out.signature = sig_;
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& at) {
        throw ParseError(msg, at.line, at.column);
    }

    Token expect(Tok k, const char* what) {
        Token t = lex_.next();
        if (t.kind != k) fail(std::string("expected ") + what, t);
        return t;
    }

    std::string expect_ident(const char* what) {
        Token t = lex_.next();
        if (t.kind != Tok::Ident || is_keyword(t.text)) fail(std::string("expected ") + what, t);
        return t.text;
    }

    void declare_atom(const std::string& name) {
        if (std::find(sig_.prop_atoms.begin(), sig_.prop_atoms.end(), name) ==
            sig_.prop_atoms.end())
            sig_.prop_atoms.push_back(name);
    }

    void parse_atoms_decl() {
        lex_.next();
        while (lex_.peek().kind == Tok::Ident) declare_atom(lex_.next().text);
        expect(Tok::Semicolon, "';'");
    }

    void parse_domain_decl() {
        lex_.next();
        expect_ident("domain name");
        expect(Tok::Equals, "'='");
        expect(Tok::LBrace, "'{'");
        while (true) {
            sig_.domain.push_back(expect_ident("domain element"));
            if (lex_.peek().kind == Tok::Comma) {
                lex_.next();
                continue;
            }
            break;
        }
        expect(Tok::RBrace, "'}'");
        expect(Tok::Semicolon, "';'");
    }

    void parse_pred_decl() {
        lex_.next();
        const std::string name = expect_ident("predicate name");
        expect(Tok::Slash, "'/'");
        Token n = expect(Tok::Number, "arity");
        sig_.predicates[name] = static_cast<int>(n.number);
        expect(Tok::Semicolon, "';'");
    }

    void parse_func_decl() {
        lex_.next();
        const std::string name = expect_ident("function name");
        expect(Tok::Slash, "'/'");
        Token n = expect(Tok::Number, "arity");
        sig_.functions[name] = static_cast<int>(n.number);
        expect(Tok::Semicolon, "';'");
    }

    void parse_const_decl() {
        lex_.next();
        sig_.constants.push_back(expect_ident("constant name"));
        expect(Tok::Semicolon, "';'");
    }

    void parse_sentence(KnowledgeBase& kb) {
        const Token start = lex_.peek();
        Annotation ann = std::monostate{};
        if (start.kind == Tok::LBracket) {
            lex_.next();
            const double lo = expect(Tok::Number, "fuzzy lower bound").number;
            expect(Tok::Comma, "','");
            const double hi = expect(Tok::Number, "fuzzy upper bound").number;
            expect(Tok::RBracket, "']'");
            expect(Tok::Colon, "':'");
            if (!(0.0 <= lo && lo <= hi && hi <= 1.0))
                fail("fuzzy interval must satisfy 0 <= lo <= hi <= 1", start);
            ann = FuzzyInterval{lo, hi};
        } else if (start.kind == Tok::Number) {
            Token w = lex_.next();
            expect(Tok::DColon, "'::'");
            if (w.number <= 0.0) fail("penalty weight must be positive", w);
            ann = PenaltyWeight{w.number};
        }

        if (kind_ == ParseKind::Fuzzy && !std::holds_alternative<FuzzyInterval>(ann))
            fail("fuzzy file requires a '[lo,hi]:' annotation on every sentence", start);
        if (kind_ == ParseKind::Penalty && !std::holds_alternative<PenaltyWeight>(ann))
            fail("penalty file requires a 'w ::' annotation on every sentence", start);
        if (kind_ != ParseKind::Fuzzy && std::holds_alternative<FuzzyInterval>(ann))
            fail("fuzzy annotation in a non-fuzzy file", start);
        if (kind_ != ParseKind::Penalty && std::holds_alternative<PenaltyWeight>(ann))
            fail("penalty annotation in a non-penalty file", start);

        quantified_.clear();
        bound_.clear();
        FormulaPtr f = parse_iff();
        expect(Tok::Dot, "'.' at end of sentence");

        const auto fv = free_variables(*f);
        if (!fv.empty()) fail("unbound variable in sentence: " + fv.front(), start);

        kb.sentences.push_back({ann, std::move(f), start.line, start.column});
    }

    // <-> (loosest), left-assoc
    FormulaPtr parse_iff() {
        FormulaPtr f = parse_implies();
        while (lex_.peek().kind == Tok::DArrow) {
            lex_.next();
            f = iff(std::move(f), parse_implies());
        }
        return f;
    }

    // -> right-assoc
    FormulaPtr parse_implies() {
        FormulaPtr f = parse_or();
        if (lex_.peek().kind == Tok::Arrow) {
            lex_.next();
            return implies(std::move(f), parse_implies());
        }
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (lex_.peek().kind == Tok::Pipe) {
            lex_.next();
            f = lor(std::move(f), parse_and());
        }
        return f;
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_unary();
        while (lex_.peek().kind == Tok::Amp) {
            lex_.next();
            f = land(std::move(f), parse_unary());
        }
        return f;
    }

    FormulaPtr parse_unary() {
        const Token t = lex_.peek();
        switch (t.kind) {
        case Tok::Tilde:
            lex_.next();
            return lnot(parse_unary());
        case Tok::LParen: {
            lex_.next();
            FormulaPtr f = parse_iff();
            expect(Tok::RParen, "')'");
            return f;
        }
        case Tok::Ident:
            if (t.text == "forall" || t.text == "exists") return parse_quantifier();
            return parse_atom_or_pred();
        default:
            fail("expected formula", t);
        }
    }

    FormulaPtr parse_quantifier() {
        const Token q = lex_.next();
        const bool universal = q.text == "forall";
        Token v = lex_.next();
        if (v.kind != Tok::Ident || is_keyword(v.text)) fail("expected quantified variable", v);
        if (!quantified_.insert(v.text).second)
            fail("variable bound by more than one quantifier: " + v.text, v);
        expect(Tok::Dot, "'.' after quantified variable");
        bound_.push_back(v.text);
        FormulaPtr body = parse_unary();
        bound_.pop_back();
        return universal ? forall(v.text, std::move(body)) : exists(v.text, std::move(body));
    }

    FormulaPtr parse_atom_or_pred() {
        Token name = lex_.next();
        if (lex_.peek().kind != Tok::LParen) {
            if (kind_ == ParseKind::Prop || kind_ == ParseKind::Program ||
                sig_.predicates.find(name.text) == sig_.predicates.end()) {
                declare_atom(name.text);
                return atom(name.text);
            }
            fail("predicate used without arguments: " + name.text, name);
        }
        if (kind_ == ParseKind::Prop)
            fail("predicate in propositional file: " + name.text, name);
        lex_.next(); // (
        std::vector<Term> args;
        while (true) {
            args.push_back(parse_term());
            if (lex_.peek().kind == Tok::Comma) {
                lex_.next();
                continue;
            }
            break;
        }
        expect(Tok::RParen, "')'");
        auto it = sig_.predicates.find(name.text);
        if (it == sig_.predicates.end()) {
            sig_.predicates[name.text] = static_cast<int>(args.size());
        } else if (it->second != static_cast<int>(args.size())) {
            fail("arity mismatch for predicate " + name.text + ": declared " +
                     std::to_string(it->second) + ", used with " + std::to_string(args.size()),
                 name);
        }
        return pred(name.text, std::move(args));
    }

    Term parse_term() {
        Token name = lex_.next();
        if (name.kind != Tok::Ident || is_keyword(name.text)) fail("expected term", name);
        if (lex_.peek().kind == Tok::LParen) {
            lex_.next();
            std::vector<Term> args;
            while (true) {
                args.push_back(parse_term());
                if (lex_.peek().kind == Tok::Comma) {
                    lex_.next();
                    continue;
                }
                break;
            }
            expect(Tok::RParen, "')'");
            auto it = sig_.functions.find(name.text);
            if (it == sig_.functions.end()) {
                sig_.functions[name.text] = static_cast<int>(args.size());
            } else if (it->second != static_cast<int>(args.size())) {
                fail("arity mismatch for function " + name.text, name);
            }
            return Term::func(name.text, std::move(args));
        }
        // Identifier: bound variable, declared constant or domain element,
        // otherwise a (free) variable caught by the closedness check.
        if (std::find(bound_.begin(), bound_.end(), name.text) != bound_.end())
            return Term::var(name.text);
        if (std::find(sig_.constants.begin(), sig_.constants.end(), name.text) !=
                sig_.constants.end() ||
            std::find(sig_.domain.begin(), sig_.domain.end(), name.text) != sig_.domain.end())
            return Term::constant(name.text);
        return Term::var(name.text);
    }

    void parse_rule(LogicProgram& p) {
        const Token start = lex_.peek();
        const std::string head = expect_ident("rule head");
        declare_atom(head);
        Rule r;
        r.head = head;
        r.line = start.line;
        r.column = start.column;
        if (lex_.peek().kind == Tok::ColonDash) {
            lex_.next();
            while (true) {
                bool positive = true;
                if (lex_.peek().kind == Tok::Tilde) {
                    lex_.next();
                    positive = false;
                }
                const std::string a = expect_ident("body literal");
                declare_atom(a);
                r.body.push_back({a, positive});
                if (lex_.peek().kind == Tok::Comma) {
                    lex_.next();
                    continue;
                }
                break;
            }
        }
        expect(Tok::Dot, "'.' at end of rule");
        p.rules.push_back(std::move(r));
    }

    Lexer lex_;
    ParseKind kind_;
    Signature sig_;
    std::set<std::string> quantified_;  // per sentence
    std::vector<std::string> bound_;    // quantifier scope stack
};

std::string format_number(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

} // namespace

ParseResult parse_kb(std::string_view text, ParseKind kind) {
    return Parser(text, kind).run();
}

ParseKind parse_kind_from_name(const std::string& name) {
    if (name == "prop") return ParseKind::Prop;
    if (name == "fol") return ParseKind::Fol;
    if (name == "program") return ParseKind::Program;
    if (name == "penalty") return ParseKind::Penalty;
    if (name == "fuzzy") return ParseKind::Fuzzy;
    throw DomainError("unknown kb kind: " + name);
}

std::string print_kb(const KnowledgeBase& kb) {
    std::ostringstream os;
    const Signature& sig = kb.signature;
    if (!sig.prop_atoms.empty()) {
        os << "atoms";
        for (const auto& a : sig.prop_atoms) os << ' ' << a;
        os << ";\n";
    }
    if (!sig.domain.empty()) {
        os << "domain D = {";
        for (std::size_t i = 0; i < sig.domain.size(); ++i)
            os << (i ? ", " : "") << sig.domain[i];
        os << "};\n";
    }
    for (const auto& [name, arity] : sig.predicates)
        os << "pred " << name << "/" << arity << ";\n";
    for (const auto& [name, arity] : sig.functions)
        os << "func " << name << "/" << arity << ";\n";
    for (const auto& c : sig.constants) os << "const " << c << ";\n";
    for (const Sentence& s : kb.sentences) {
        if (const auto* fi = std::get_if<FuzzyInterval>(&s.ann))
            os << '[' << format_number(fi->lo) << ',' << format_number(fi->hi) << "]: ";
        else if (const auto* pw = std::get_if<PenaltyWeight>(&s.ann))
            os << format_number(pw->w) << ":: ";
        os << to_string(*s.formula) << " .\n";
    }
    return os.str();
}

std::string to_string(const LogicProgram& p) {
    std::ostringstream os;
    if (!p.atoms.empty()) {
        os << "atoms";
        for (const auto& a : p.atoms) os << ' ' << a;
        os << ";\n";
    }
    for (const Rule& r : p.rules) {
        os << r.head;
        if (!r.body.empty()) {
            os << " :- ";
            for (std::size_t i = 0; i < r.body.size(); ++i) {
                if (i) os << ", ";
                if (!r.body[i].positive) os << '~';
                os << r.body[i].atom;
            }
        }
        os << ".\n";
    }
    return os.str();
}

} // namespace semanc
