#ifndef GBLAB_EXPR_HPP
#define GBLAB_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gblab/operator.hpp"

// A small operator-expression language over the ladder symbols:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | scalar | ladder | '(' expr ')'
//           | '[' expr ',' expr ']'            (commutator)
//   ladder := 'a' '[' int ',' int ']' ('^'? 'dag')?
//   scalar := decimal 'i'? | 'i'
//
// 'dag' is the PHYSICAL (eta-) adjoint; the auxiliary conjugate transpose is
// not part of the language. Momentum indices are resolved through a table of
// concrete 3-vectors at evaluation time.

namespace gblab::expr {

enum class TokenKind {
    ident, dagger, plus, minus, star, lparen, rparen,
    lbracket, rbracket, comma, number, i_unit, end,
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t pos;  // byte offset in the input
};

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t at, const std::string& message)
        : std::runtime_error(message + " (at byte " + std::to_string(at) + ")"), pos(at) {}
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Token> lex(std::string_view text);  // total: every byte classified or rejected

struct Node;
using Ast = std::unique_ptr<Node>;

struct Node {
    enum class Kind { scalar, ladder, sum, difference, product, commutator, neg };
    Kind kind;
    cx value{};                         // scalar
    int momentum_index = 0;             // ladder
    int polarization = 0;               // ladder (validated at eval)
    bool daggered = false;              // ladder
    Ast lhs, rhs;                       // binary nodes; neg uses lhs

    static Ast scalar(cx v);
    static Ast ladder(int momentum_index, int polarization, bool daggered);
    static Ast binary(Kind k, Ast l, Ast r);
    static Ast neg(Ast inner);
    Ast clone() const;
};

Ast parse(std::string_view text);  // throws ParseError with byte position

// Fully parenthesized rendering with parse(print_canonical(ast))
// structurally equal to ast. Scalar nodes must be real or pure imaginary
// (which is all the grammar itself can produce).
std::string print_canonical(const Node& ast);

bool structurally_equal(const Node& a, const Node& b);

// Structural recursion into fock_core constructors; 'dag' maps to the
// eta-adjoint. Throws EvalError on unresolvable ladder symbols.
Operator eval(const Node& ast, const BasisPtr& basis, std::span<const Vec3> momentum_table);

// Total occupation shift the expression can produce; used to pick the safe
// projection margin when reporting on evaluated operators.
int ladder_degree(const Node& ast);

}  // namespace gblab::expr

#endif
