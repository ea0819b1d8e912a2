#include "cnaf/formula.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "cnaf/errors.hpp"

namespace cnaf {

namespace {

FormulaPtr make(Op op, std::string name = {}, FormulaPtr l = nullptr,
                FormulaPtr r = nullptr) {
    return std::make_shared<const Formula>(op, std::move(name), std::move(l),
                                           std::move(r));
}

const FormulaPtr kTop = make(Op::Top);
const FormulaPtr kBottom = make(Op::Bottom);
const FormulaPtr kWorld1 = make(Op::World1);

} // namespace

FormulaPtr mk_top() { return kTop; }
FormulaPtr mk_bottom() { return kBottom; }
FormulaPtr mk_world1() { return kWorld1; }

bool is_valid_atom_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    }
    return name != "T" && name != "F" && name != "N";
}

FormulaPtr mk_atom(std::string name) {
    if (!is_valid_atom_name(name))
        throw DomainError("invalid atom name: '" + name + "'");
    return make(Op::Atom, std::move(name));
}

FormulaPtr mk_not(FormulaPtr f) { return make(Op::Not, {}, std::move(f)); }
FormulaPtr mk_sneg(FormulaPtr f) { return make(Op::SNeg, {}, std::move(f)); }

FormulaPtr mk_and(FormulaPtr l, FormulaPtr r) {
    return make(Op::And, {}, std::move(l), std::move(r));
}
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r) {
    return make(Op::Or, {}, std::move(l), std::move(r));
}
FormulaPtr mk_imp(FormulaPtr l, FormulaPtr r) {
    return make(Op::Imp, {}, std::move(l), std::move(r));
}
FormulaPtr mk_iff(FormulaPtr l, FormulaPtr r) {
    return make(Op::Iff, {}, std::move(l), std::move(r));
}

FormulaPtr mk_and_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return mk_top();
    FormulaPtr acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = mk_and(acc, fs[i]);
    return acc;
}

FormulaPtr mk_or_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return mk_bottom();
    FormulaPtr acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = mk_or(acc, fs[i]);
    return acc;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->op != b->op) return false;
    switch (a->op) {
    case Op::Top:
    case Op::Bottom:
    case Op::World1:
        return true;
    case Op::Atom:
        return a->name == b->name;
    case Op::Not:
    case Op::SNeg:
        return equal(a->lhs, b->lhs);
    default:
        return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

namespace {

void print_rec(const FormulaPtr& f, std::string& out) {
    switch (f->op) {
    case Op::Top: out += "T"; return;
    case Op::Bottom: out += "F"; return;
    case Op::World1: out += "@1"; return;
    case Op::Atom: out += f->name; return;
    case Op::Not:
        out += "~";
        print_rec(f->lhs, out);
        return;
    case Op::SNeg:
        out += "N ";
        print_rec(f->lhs, out);
        return;
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff: {
        const char* sym = f->op == Op::And ? " & "
                          : f->op == Op::Or ? " | "
                          : f->op == Op::Imp ? " -> "
                                             : " <-> ";
        out += "(";
        print_rec(f->lhs, out);
        out += sym;
        print_rec(f->rhs, out);
        out += ")";
        return;
    }
    }
}

} // namespace

std::string print(const FormulaPtr& f) {
    std::string out;
    print_rec(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, TopKw, BottomKw, SNegKw, World1Kw, Not, And, Or, Imp, Iff, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                    text_[end] == '_'))
                ++end;
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            if (word == "T") tok_ = {Tok::TopKw, word, start};
            else if (word == "F") tok_ = {Tok::BottomKw, word, start};
            else if (word == "N") tok_ = {Tok::SNegKw, word, start};
            else tok_ = {Tok::Ident, word, start};
            return;
        }
        switch (c) {
        case '~': ++pos_; tok_ = {Tok::Not, "~", start}; return;
        case '&': ++pos_; tok_ = {Tok::And, "&", start}; return;
        case '|': ++pos_; tok_ = {Tok::Or, "|", start}; return;
        case '(': ++pos_; tok_ = {Tok::LParen, "(", start}; return;
        case ')': ++pos_; tok_ = {Tok::RParen, ")", start}; return;
        case '@':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '1') {
                pos_ += 2;
                tok_ = {Tok::World1Kw, "@1", start};
                return;
            }
            throw ParseError("expected '@1'", start);
        case '-':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                pos_ += 2;
                tok_ = {Tok::Imp, "->", start};
                return;
            }
            throw ParseError("expected '->'", start);
        case '<':
            if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' &&
                text_[pos_ + 2] == '>') {
                pos_ += 3;
                tok_ = {Tok::Iff, "<->", start};
                return;
            }
            throw ParseError("expected '<->'", start);
        default:
            throw ParseError(std::string("unexpected character '") + c + "'",
                             start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_{Tok::End, "", 0};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = parse_iff();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError("unexpected '" + t.text + "'", t.offset);
        return f;
    }

private:
    FormulaPtr parse_iff() {
        FormulaPtr l = parse_imp();
        if (lex_.peek().kind == Tok::Iff) {
            lex_.next();
            return mk_iff(std::move(l), parse_iff()); // right-assoc
        }
        return l;
    }

    FormulaPtr parse_imp() {
        FormulaPtr l = parse_or();
        if (lex_.peek().kind == Tok::Imp) {
            lex_.next();
            return mk_imp(std::move(l), parse_imp()); // right-assoc
        }
        return l;
    }

    FormulaPtr parse_or() {
        FormulaPtr l = parse_and();
        while (lex_.peek().kind == Tok::Or) {
            lex_.next();
            l = mk_or(std::move(l), parse_and());
        }
        return l;
    }

    FormulaPtr parse_and() {
        FormulaPtr l = parse_unary();
        while (lex_.peek().kind == Tok::And) {
            lex_.next();
            l = mk_and(std::move(l), parse_unary());
        }
        return l;
    }

    FormulaPtr parse_unary() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Not) {
            lex_.next();
            return mk_not(parse_unary());
        }
        if (t.kind == Tok::SNegKw) {
            lex_.next();
            return mk_sneg(parse_unary());
        }
        return parse_primary();
    }

    FormulaPtr parse_primary() {
        Token t = lex_.next();
        switch (t.kind) {
        case Tok::TopKw: return mk_top();
        case Tok::BottomKw: return mk_bottom();
        case Tok::World1Kw: return mk_world1();
        case Tok::Ident: return mk_atom(t.text);
        case Tok::LParen: {
            FormulaPtr f = parse_iff();
            const Token& close = lex_.peek();
            if (close.kind != Tok::RParen)
                throw ParseError("expected ')'", close.offset);
            lex_.next();
            return f;
        }
        default:
            throw ParseError("expected a formula, got '" + t.text + "'",
                             t.offset);
        }
    }

    Lexer lex_;
};

} // namespace

FormulaPtr parse_formula(std::string_view text) {
    return Parser(text).parse();
}

namespace {

void atoms_rec(const FormulaPtr& f, std::vector<std::string>& out,
               std::unordered_set<std::string>& seen) {
    switch (f->op) {
    case Op::Atom:
        if (seen.insert(f->name).second) out.push_back(f->name);
        return;
    case Op::Not:
    case Op::SNeg:
        atoms_rec(f->lhs, out, seen);
        return;
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
        atoms_rec(f->lhs, out, seen);
        atoms_rec(f->rhs, out, seen);
        return;
    default:
        return;
    }
}

} // namespace

std::vector<std::string> atoms_of(const FormulaPtr& f) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    atoms_rec(f, out, seen);
    return out;
}

bool is_cn_flat(const FormulaPtr& f) {
    switch (f->op) {
    case Op::SNeg:
        return f->lhs->op == Op::Atom;
    case Op::Not:
        return is_cn_flat(f->lhs);
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
        return is_cn_flat(f->lhs) && is_cn_flat(f->rhs);
    default:
        return true;
    }
}

bool contains_world1(const FormulaPtr& f) {
    switch (f->op) {
    case Op::World1:
        return true;
    case Op::Not:
    case Op::SNeg:
        return contains_world1(f->lhs);
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
        return contains_world1(f->lhs) || contains_world1(f->rhs);
    default:
        return false;
    }
}

bool contains_iff(const FormulaPtr& f) {
    switch (f->op) {
    case Op::Iff:
        return true;
    case Op::Not:
    case Op::SNeg:
        return contains_iff(f->lhs);
    case Op::And:
    case Op::Or:
    case Op::Imp:
        return contains_iff(f->lhs) || contains_iff(f->rhs);
    default:
        return false;
    }
}

FormulaPtr expand_iff(const FormulaPtr& f) {
    switch (f->op) {
    case Op::Iff: {
        FormulaPtr l = expand_iff(f->lhs);
        FormulaPtr r = expand_iff(f->rhs);
        return mk_and(mk_imp(l, r), mk_imp(r, l));
    }
    case Op::Not:
        return mk_not(expand_iff(f->lhs));
    case Op::SNeg:
        return mk_sneg(expand_iff(f->lhs));
    case Op::And:
        return mk_and(expand_iff(f->lhs), expand_iff(f->rhs));
    case Op::Or:
        return mk_or(expand_iff(f->lhs), expand_iff(f->rhs));
    case Op::Imp:
        return mk_imp(expand_iff(f->lhs), expand_iff(f->rhs));
    default:
        return f;
    }
}

namespace {

FormulaPtr push_n(const FormulaPtr& f);

// push_n(N g) for iff-free g.
FormulaPtr push_n_under(const FormulaPtr& g) {
    switch (g->op) {
    case Op::Atom:
        return mk_sneg(g);
    case Op::Top:
        return mk_bottom();
    case Op::Bottom:
        return mk_top();
    case Op::World1:
        return mk_world1();
    case Op::Not:
        return mk_not(push_n_under(g->lhs));
    case Op::SNeg:
        return push_n(g->lhs); // NN A => A
    case Op::And:
        return mk_or(push_n_under(g->lhs), push_n_under(g->rhs));
    case Op::Or:
        return mk_and(push_n_under(g->lhs), push_n_under(g->rhs));
    case Op::Imp:
        return mk_and(mk_not(push_n_under(g->lhs)), push_n_under(g->rhs));
    default:
        throw DomainError("unexpected Iff during N-normalization");
    }
}

FormulaPtr push_n(const FormulaPtr& f) {
    switch (f->op) {
    case Op::SNeg:
        return push_n_under(f->lhs);
    case Op::Not:
        return mk_not(push_n(f->lhs));
    case Op::And:
        return mk_and(push_n(f->lhs), push_n(f->rhs));
    case Op::Or:
        return mk_or(push_n(f->lhs), push_n(f->rhs));
    case Op::Imp:
        return mk_imp(push_n(f->lhs), push_n(f->rhs));
    default:
        return f;
    }
}

} // namespace

FormulaPtr normalize_n(const FormulaPtr& f) {
    return push_n(expand_iff(f));
}

} // namespace cnaf
