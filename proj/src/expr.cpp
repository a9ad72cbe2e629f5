#include "qps/expr.hpp"

#include <cctype>

#include "qps/spaces.hpp"

namespace qps {

namespace {

struct Token {
  enum Kind { kNum, kSym, kOp, kEnd } kind = kEnd;
  Rational num;
  std::string text;  // symbol name or operator character
  int col = 0;       // 1-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    Token t;
    t.col = int(i_) + 1;
    if (i_ >= s_.size()) return t;
    char c = s_[i_];
    if (std::isdigit((unsigned char)c)) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
      std::string numer = s_.substr(i_, j - i_);
      i_ = j;
      std::string denom;
      if (i_ < s_.size() && s_[i_] == '/') {
        size_t k = i_ + 1;
        while (k < s_.size() && std::isdigit((unsigned char)s_[k])) ++k;
        if (k == i_ + 1) throw ParseError("expected digits after '/'", int(i_) + 2);
        denom = s_.substr(i_ + 1, k - i_ - 1);
        i_ = k;
      }
      t.kind = Token::kNum;
      t.num = denom.empty() ? Rational(numer) : Rational(numer + "/" + denom);
      t.num.canonicalize();
      return t;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t j = i_;
      while (j < s_.size() && (std::isalnum((unsigned char)s_[j]) || s_[j] == '_')) ++j;
      t.kind = Token::kSym;
      t.text = s_.substr(i_, j - i_);
      i_ = j;
      return t;
    }
    if (std::string("+-*^()").find(c) != std::string::npos) {
      t.kind = Token::kOp;
      t.text = std::string(1, c);
      ++i_;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.col);
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  Expr parse_expr() {
    Expr e = parse_term();
    while (is_op("+") || is_op("-")) {
      bool plus = is_op("+");
      advance();
      Expr rhs = parse_term();
      Expr node;
      node.kind = plus ? Expr::kAdd : Expr::kSub;
      node.kids = {std::move(e), std::move(rhs)};
      e = std::move(node);
    }
    return e;
  }

  void expect_end() const {
    if (cur_.kind != Token::kEnd)
      throw ParseError("unexpected trailing input '" + describe() + "'", cur_.col);
  }

 private:
  Expr parse_term() {
    Expr e = parse_factor();
    while (is_op("*")) {
      advance();
      Expr rhs = parse_factor();
      if (e.kind == Expr::kMul) {
        e.kids.push_back(std::move(rhs));
      } else {
        Expr node;
        node.kind = Expr::kMul;
        node.kids = {std::move(e), std::move(rhs)};
        e = std::move(node);
      }
    }
    return e;
  }

  Expr parse_factor() {
    Expr e = parse_atom();
    if (is_op("^")) {
      int col = cur_.col;
      advance();
      bool neg = false;
      if (is_op("-")) {
        neg = true;
        advance();
      }
      if (cur_.kind != Token::kNum || cur_.num.get_den() != 1)
        throw ParseError("expected integer exponent", col + 1);
      Expr node;
      node.kind = Expr::kPow;
      node.exponent = int(cur_.num.get_num().get_si()) * (neg ? -1 : 1);
      node.kids = {std::move(e)};
      advance();
      return node;
    }
    return e;
  }

  Expr parse_atom() {
    if (is_op("-")) {
      advance();
      Expr node;
      node.kind = Expr::kNeg;
      node.kids = {parse_atom_pow()};
      return node;
    }
    return parse_atom_pow();
  }

  Expr parse_atom_pow() {
    // an atom directly; a '^' after it binds here so -x^2 means -(x^2)
    Expr e = parse_primary();
    if (is_op("^")) {
      int col = cur_.col;
      advance();
      bool neg = false;
      if (is_op("-")) {
        neg = true;
        advance();
      }
      if (cur_.kind != Token::kNum || cur_.num.get_den() != 1)
        throw ParseError("expected integer exponent", col + 1);
      Expr node;
      node.kind = Expr::kPow;
      node.exponent = int(cur_.num.get_num().get_si()) * (neg ? -1 : 1);
      node.kids = {std::move(e)};
      advance();
      return node;
    }
    return e;
  }

  Expr parse_primary() {
    Expr e;
    if (cur_.kind == Token::kNum) {
      e.kind = Expr::kNum;
      e.num = cur_.num;
      advance();
      return e;
    }
    if (cur_.kind == Token::kSym) {
      if (cur_.text == "q")
        e.kind = Expr::kQ;
      else {
        e.kind = Expr::kSym;
        e.sym = cur_.text;
      }
      advance();
      return e;
    }
    if (is_op("(")) {
      advance();
      e = parse_expr();
      if (!is_op(")")) throw ParseError("expected ')'", cur_.col);
      advance();
      return e;
    }
    throw ParseError("expected a number, symbol, or '(' but found '" + describe() + "'",
                     cur_.col);
  }

  bool is_op(const char* c) const { return cur_.kind == Token::kOp && cur_.text == c; }
  std::string describe() const {
    if (cur_.kind == Token::kEnd) return "end of input";
    if (cur_.kind == Token::kNum) return cur_.num.get_str();
    return cur_.text;
  }
  void advance() { cur_ = lex_.next(); }

  Lexer lex_;
  Token cur_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::kAdd:
    case Expr::kSub: return 1;
    case Expr::kNeg: return 2;
    case Expr::kMul: return 3;
    case Expr::kPow: return 4;
    default: return 5;
  }
}

void str_rec(const Expr& e, std::string& out, int parent_prec) {
  int prec = precedence(e.kind);
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case Expr::kNum: out += e.num.get_str(); break;
    case Expr::kQ: out += 'q'; break;
    case Expr::kSym: out += e.sym; break;
    case Expr::kAdd:
      str_rec(e.kids[0], out, prec);
      out += " + ";
      str_rec(e.kids[1], out, prec + 1);
      break;
    case Expr::kSub:
      str_rec(e.kids[0], out, prec);
      out += " - ";
      str_rec(e.kids[1], out, prec + 1);
      break;
    case Expr::kNeg:
      out += '-';
      str_rec(e.kids[0], out, prec + 1);
      break;
    case Expr::kMul:
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i) out += '*';
        str_rec(e.kids[i], out, prec);
      }
      break;
    case Expr::kPow:
      str_rec(e.kids[0], out, prec + 1);
      out += '^';
      out += std::to_string(e.exponent);
      break;
  }
  if (parens) out += ')';
}

void collect_symbols(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::kSym) {
    for (const auto& s : out)
      if (s == e.sym) return;
    out.push_back(e.sym);
    return;
  }
  for (const Expr& k : e.kids) collect_symbols(k, out);
}

bool is_field_symbol(const std::string& s) {
  return s == "Dx" || s == "Dy" || s == "Dpx" || s == "Dpy";
}

int field_slot(const std::string& s) {
  if (s == "Dx") return 0;
  if (s == "Dy") return 1;
  if (s == "Dpx") return 2;
  if (s == "Dpy") return 3;
  return -1;
}

// term of a field expression: strip an optional trailing D-symbol, return its
// slot (or -1) and the coefficient expression evaluated in Q
void field_term(const Expr& e, const Scalar& sign, VectorField& out) {
  const Presentation& Q = SpaceCatalog::instance().Q();
  if (e.kind == Expr::kAdd || e.kind == Expr::kSub) {
    field_term(e.kids[0], sign, out);
    field_term(e.kids[1], e.kind == Expr::kAdd ? sign : -sign, out);
    return;
  }
  if (e.kind == Expr::kNeg) {
    field_term(e.kids[0], -sign, out);
    return;
  }
  if (e.kind == Expr::kSym && is_field_symbol(e.sym)) {
    out.f[field_slot(e.sym)].add(Element::unit(), sign);
    return;
  }
  if (e.kind == Expr::kMul) {
    const Expr& last = e.kids.back();
    if (last.kind == Expr::kSym && is_field_symbol(last.sym)) {
      Element coeff = Element::unit();
      for (size_t i = 0; i + 1 < e.kids.size(); ++i) coeff = Q.mul(coeff, eval(e.kids[i], Q));
      out.f[field_slot(last.sym)].add(coeff, sign);
      return;
    }
  }
  throw ParseError("each vector-field term must end in Dx, Dy, Dpx, or Dpy", 1);
}

}  // namespace

std::string Expr::str() const {
  std::string out;
  str_rec(*this, out, 0);
  return out;
}

Expr parse(const std::string& text) {
  Parser p(text);
  Expr e = p.parse_expr();
  p.expect_end();
  return e;
}

std::vector<std::string> symbols_of(const Expr& e) {
  std::vector<std::string> out;
  collect_symbols(e, out);
  return out;
}

bool is_field_expr(const Expr& e) {
  for (const auto& s : symbols_of(e))
    if (is_field_symbol(s)) return true;
  return false;
}

const Presentation& infer_presentation(const Expr& e) {
  const SpaceCatalog& cat = SpaceCatalog::instance();
  bool quantum_group = false, plane = false, momenta = false, forms = false;
  for (const auto& s : symbols_of(e)) {
    if (is_field_symbol(s))
      throw ParseError("vector-field symbol '" + s + "' is not an algebra element", 1);
    if (s == "a" || s == "b" || s == "c" || s == "d")
      quantum_group = true;
    else if (s == "x" || s == "y")
      plane = true;
    else if (s == "px" || s == "py")
      momenta = true;
    else if (s == "dx" || s == "dy" || s == "dpx" || s == "dpy")
      forms = true;
    else
      throw ParseError("unknown symbol '" + s + "'", 1);
  }
  if (quantum_group && (momenta || forms))
    throw ParseError("no algebra contains both quantum-group and phase-space symbols", 1);
  if (quantum_group) return plane ? cat.MF() : cat.F();
  if (forms) return cat.OmegaQ();
  return cat.Q();
}

Element eval(const Expr& e, const Presentation& p) {
  switch (e.kind) {
    case Expr::kNum: return Element::unit(Scalar(e.num));
    case Expr::kQ: return Element::unit(Scalar::q());
    case Expr::kSym: {
      int i = p.index_of(e.sym);
      if (i >= 0) return p.gen_element(i);
      if (e.sym == "d") {
        const SpaceCatalog& cat = SpaceCatalog::instance();
        if (&p == &cat.F()) return cat.d_elem();
        if (&p == &cat.MF()) return cat.d_elem_MF();
      }
      throw ParseError("unknown symbol '" + e.sym + "' in presentation " + p.name(), 1);
    }
    case Expr::kAdd: return eval(e.kids[0], p) + eval(e.kids[1], p);
    case Expr::kSub: return eval(e.kids[0], p) - eval(e.kids[1], p);
    case Expr::kNeg: return -eval(e.kids[0], p);
    case Expr::kMul: {
      Element out = eval(e.kids[0], p);
      for (size_t i = 1; i < e.kids.size(); ++i) out = p.mul(out, eval(e.kids[i], p));
      return out;
    }
    case Expr::kPow: {
      Element base = eval(e.kids[0], p);
      if (e.exponent >= 0) return p.power(base, e.exponent);
      // negative powers only for scalar bases
      auto s = base.as_scalar();
      if (!s) throw ParseError("negative power of a non-scalar", 1);
      Scalar inv = s->inverse(), acc(1);
      for (int k = 0; k < -e.exponent; ++k) acc *= inv;
      return Element::unit(acc);
    }
  }
  throw ParseError("malformed expression", 1);
}

VectorField eval_field(const Expr& e) {
  VectorField out;
  field_term(e, Scalar(1), out);
  return out;
}

}  // namespace qps
