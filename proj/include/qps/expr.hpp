#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qps/calculus.hpp"

namespace qps {

/// Syntax or symbol error with a 1-based column position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int column)
      : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Surface syntax tree; `*` order is preserved (no commutativity assumed).
struct Expr {
  enum Kind { kNum, kQ, kSym, kAdd, kSub, kMul, kNeg, kPow };
  Kind kind = kNum;
  Rational num;           // kNum
  std::string sym;        // kSym
  int exponent = 0;       // kPow
  std::vector<Expr> kids; // operands

  std::string str() const;
};

/// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := atom ('^' int)?; atom := rational | 'q' | symbol | '(' expr ')'
Expr parse(const std::string& text);

/// All symbol names appearing in the tree, in first-occurrence order.
std::vector<std::string> symbols_of(const Expr& e);

/// Smallest of Q / OmegaQ / F / MF containing every symbol (largest of the
/// paper's algebras in each family); throws ParseError when a symbol is not a
/// generator anywhere or when vector-field symbols (Dx, ...) appear.
const Presentation& infer_presentation(const Expr& e);

/// Evaluate in a presentation; `d` maps to the eliminated generator in F and
/// MF. Throws ParseError for symbols outside the presentation.
Element eval(const Expr& e, const Presentation& p);

/// Evaluate a vector-field expression `f*Dx + g*Dy + h*Dpx + k*Dpy`; each
/// additive term must end in one D-symbol with Q-coefficients on the left.
VectorField eval_field(const Expr& e);

/// True when the tree mentions a vector-field symbol Dx/Dy/Dpx/Dpy.
bool is_field_expr(const Expr& e);

}  // namespace qps
