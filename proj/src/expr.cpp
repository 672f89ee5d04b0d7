#include "gblab/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "gblab/ladders.hpp"

namespace gblab::expr {

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto simple = [&](TokenKind k) {
        out.push_back({k, std::string(1, text[i]), i});
        ++i;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '+': simple(TokenKind::plus); continue;
            case '-': simple(TokenKind::minus); continue;
            case '*': simple(TokenKind::star); continue;
            case '(': simple(TokenKind::lparen); continue;
            case ')': simple(TokenKind::rparen); continue;
            case '[': simple(TokenKind::lbracket); continue;
            case ']': simple(TokenKind::rbracket); continue;
            case ',': simple(TokenKind::comma); continue;
            default: break;
        }
        if (c == '^') {
            if (text.substr(i + 1, 3) == "dag") {
                out.push_back({TokenKind::dagger, "^dag", i});
                i += 4;
                continue;
            }
            throw ParseError(i, "'^' must be followed by 'dag'");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '.') {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            }
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t e = j + 1;
                if (e < text.size() && (text[e] == '+' || text[e] == '-')) ++e;
                std::size_t d = e;
                while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) ++d;
                if (d > e) j = d;
            }
            out.push_back({TokenKind::number, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            const std::string_view word = text.substr(i, j - i);
            if (word == "dag") {
                out.push_back({TokenKind::dagger, "dag", i});
            } else if (word == "i") {
                out.push_back({TokenKind::i_unit, "i", i});
            } else if (word == "a") {
                out.push_back({TokenKind::ident, "a", i});
            } else {
                throw ParseError(i, "unknown word '" + std::string(word) +
                                        "'; expected 'a', 'i' or 'dag'");
            }
            i = j;
            continue;
        }
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({TokenKind::end, "", text.size()});
    return out;
}

Ast Node::scalar(cx v) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::scalar;
    n->value = v;
    return n;
}

Ast Node::ladder(int momentum_index, int polarization, bool daggered) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::ladder;
    n->momentum_index = momentum_index;
    n->polarization = polarization;
    n->daggered = daggered;
    return n;
}

Ast Node::binary(Kind k, Ast l, Ast r) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

Ast Node::neg(Ast inner) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::neg;
    n->lhs = std::move(inner);
    return n;
}

Ast Node::clone() const {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->value = value;
    n->momentum_index = momentum_index;
    n->polarization = polarization;
    n->daggered = daggered;
    if (lhs) n->lhs = lhs->clone();
    if (rhs) n->rhs = rhs->clone();
    return n;
}

namespace {

const char* kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::ident: return "'a'";
        case TokenKind::dagger: return "'dag'";
        case TokenKind::plus: return "'+'";
        case TokenKind::minus: return "'-'";
        case TokenKind::star: return "'*'";
        case TokenKind::lparen: return "'('";
        case TokenKind::rparen: return "')'";
        case TokenKind::lbracket: return "'['";
        case TokenKind::rbracket: return "']'";
        case TokenKind::comma: return "','";
        case TokenKind::number: return "number";
        case TokenKind::i_unit: return "'i'";
        case TokenKind::end: return "end of input";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    Ast run() {
        Ast e = expression();
        expect(TokenKind::end, "expected end of input");
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t at_ = 0;

    const Token& peek() const { return tokens_[at_]; }
    Token advance() { return tokens_[at_++]; }
    bool match(TokenKind k) {
        if (peek().kind == k) {
            ++at_;
            return true;
        }
        return false;
    }
    Token expect(TokenKind k, const std::string& what) {
        if (peek().kind != k) {
            throw ParseError(peek().pos, what + "; got " + kind_name(peek().kind));
        }
        return advance();
    }

    Ast expression() {
        Ast lhs = term();
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            const bool plus = advance().kind == TokenKind::plus;
            lhs = Node::binary(plus ? Node::Kind::sum : Node::Kind::difference,
                               std::move(lhs), term());
        }
        return lhs;
    }

    Ast term() {
        Ast lhs = factor();
        while (match(TokenKind::star)) {
            lhs = Node::binary(Node::Kind::product, std::move(lhs), factor());
        }
        return lhs;
    }

    Ast factor() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::minus:
                advance();
                return Node::neg(factor());
            case TokenKind::number: {
                const Token num = advance();
                double v = 0.0;
                const auto res =
                    std::from_chars(num.lexeme.data(), num.lexeme.data() + num.lexeme.size(), v);
                if (res.ec != std::errc{}) {
                    throw ParseError(num.pos, "malformed number literal");
                }
                if (match(TokenKind::i_unit)) return Node::scalar(cx{0.0, v});
                return Node::scalar(cx{v, 0.0});
            }
            case TokenKind::i_unit:
                advance();
                return Node::scalar(cx{0.0, 1.0});
            case TokenKind::ident:
                return ladder();
            case TokenKind::lparen: {
                advance();
                Ast e = expression();
                expect(TokenKind::rparen, "expected ')'");
                return e;
            }
            case TokenKind::lbracket: {
                advance();
                Ast l = expression();
                expect(TokenKind::comma, "expected ',' in commutator");
                Ast r = expression();
                expect(TokenKind::rbracket, "expected ']' closing commutator");
                return Node::binary(Node::Kind::commutator, std::move(l), std::move(r));
            }
            default:
                throw ParseError(t.pos,
                                 std::string("expected a factor (number, 'i', 'a[..]', '(' or "
                                             "'['); got ") +
                                     kind_name(t.kind));
        }
    }

    int integer_literal(const char* what) {
        const Token num = expect(TokenKind::number, what);
        int v = 0;
        const auto res =
            std::from_chars(num.lexeme.data(), num.lexeme.data() + num.lexeme.size(), v);
        if (res.ec != std::errc{} || res.ptr != num.lexeme.data() + num.lexeme.size()) {
            throw ParseError(num.pos, std::string(what) + " must be a plain integer");
        }
        return v;
    }

    Ast ladder() {
        expect(TokenKind::ident, "expected 'a'");
        expect(TokenKind::lbracket, "expected '[' after 'a'");
        const int momentum = integer_literal("momentum index");
        expect(TokenKind::comma, "expected ',' between ladder indices");
        const int pol = integer_literal("polarization index");
        expect(TokenKind::rbracket, "expected ']' closing ladder indices");
        const bool dag = match(TokenKind::dagger);
        return Node::ladder(momentum, pol, dag);
    }
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Ast parse(std::string_view text) { return Parser(text).run(); }

std::string print_canonical(const Node& ast) {
    switch (ast.kind) {
        case Node::Kind::scalar:
            if (ast.value.imag() == 0.0) return format_double(ast.value.real());
            if (ast.value.real() == 0.0) {
                return ast.value.imag() == 1.0 ? "i" : format_double(ast.value.imag()) + "i";
            }
            // the grammar cannot produce a mixed literal; render it as a sum
            return "(" + format_double(ast.value.real()) + " + " +
                   format_double(ast.value.imag()) + "i)";
        case Node::Kind::ladder: {
            std::string s = "a[" + std::to_string(ast.momentum_index) + "," +
                            std::to_string(ast.polarization) + "]";
            if (ast.daggered) s += "^dag";
            return s;
        }
        case Node::Kind::sum:
            return "(" + print_canonical(*ast.lhs) + " + " + print_canonical(*ast.rhs) + ")";
        case Node::Kind::difference:
            return "(" + print_canonical(*ast.lhs) + " - " + print_canonical(*ast.rhs) + ")";
        case Node::Kind::product:
            return "(" + print_canonical(*ast.lhs) + " * " + print_canonical(*ast.rhs) + ")";
        case Node::Kind::commutator:
            return "[" + print_canonical(*ast.lhs) + ", " + print_canonical(*ast.rhs) + "]";
        case Node::Kind::neg:
            return "(-" + print_canonical(*ast.lhs) + ")";
    }
    return "";
}

bool structurally_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Node::Kind::scalar:
            return a.value == b.value;
        case Node::Kind::ladder:
            return a.momentum_index == b.momentum_index && a.polarization == b.polarization &&
                   a.daggered == b.daggered;
        case Node::Kind::neg:
            return structurally_equal(*a.lhs, *b.lhs);
        default:
            return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

Operator eval(const Node& ast, const BasisPtr& basis, std::span<const Vec3> momentum_table) {
    switch (ast.kind) {
        case Node::Kind::scalar:
            return ast.value * Operator::identity(basis);
        case Node::Kind::ladder: {
            if (ast.momentum_index < 0 ||
                static_cast<std::size_t>(ast.momentum_index) >= momentum_table.size()) {
                throw EvalError("unknown momentum index " + std::to_string(ast.momentum_index) +
                                " (table has " + std::to_string(momentum_table.size()) +
                                " entries)");
            }
            if (ast.polarization < 0 || ast.polarization > 3) {
                throw EvalError("polarization " + std::to_string(ast.polarization) +
                                " outside 0..3");
            }
            const Mode m(momentum_table[ast.momentum_index],
                         static_cast<Polarization>(ast.polarization));
            if (!basis->find_mode(m)) {
                throw EvalError("ladder mode a[" + std::to_string(ast.momentum_index) + "," +
                                std::to_string(ast.polarization) + "] is not in the basis");
            }
            const Operator a = annihilator(basis, m);
            return ast.daggered ? eta_adjoint(a) : a;
        }
        case Node::Kind::sum:
            return eval(*ast.lhs, basis, momentum_table) + eval(*ast.rhs, basis, momentum_table);
        case Node::Kind::difference:
            return eval(*ast.lhs, basis, momentum_table) - eval(*ast.rhs, basis, momentum_table);
        case Node::Kind::product:
            return eval(*ast.lhs, basis, momentum_table) * eval(*ast.rhs, basis, momentum_table);
        case Node::Kind::commutator:
            return commutator(eval(*ast.lhs, basis, momentum_table),
                              eval(*ast.rhs, basis, momentum_table));
        case Node::Kind::neg:
            return cx{-1.0, 0.0} * eval(*ast.lhs, basis, momentum_table);
    }
    throw EvalError("malformed AST node");
}

int ladder_degree(const Node& ast) {
    switch (ast.kind) {
        case Node::Kind::scalar:
            return 0;
        case Node::Kind::ladder:
            return 1;
        case Node::Kind::sum:
        case Node::Kind::difference:
            return std::max(ladder_degree(*ast.lhs), ladder_degree(*ast.rhs));
        case Node::Kind::product:
        case Node::Kind::commutator:
            return ladder_degree(*ast.lhs) + ladder_degree(*ast.rhs);
        case Node::Kind::neg:
            return ladder_degree(*ast.lhs);
    }
    return 0;
}

}  // namespace gblab::expr
