#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qps/field.hpp"

namespace qps {

class Presentation;

/// Canonically ordered word with exponents, packed one byte per generator
/// (generator 0 in the most significant byte, so raw uint64 comparison is
/// lexicographic). At most 8 generators per presentation.
class Monomial {
 public:
  static constexpr int kMaxGens = 8;

  Monomial() = default;
  explicit Monomial(uint64_t bits) : bits_(bits) {}

  static Monomial one() { return Monomial(); }
  static Monomial gen(int i, int e = 1) { return Monomial().with_exp(i, e); }

  uint64_t bits() const { return bits_; }
  bool is_one() const { return bits_ == 0; }

  int exp(int i) const { return int((bits_ >> shift(i)) & 0xff); }

  Monomial with_exp(int i, int e) const {
    uint64_t b = bits_ & ~(uint64_t(0xff) << shift(i));
    return Monomial(b | (uint64_t(e & 0xff) << shift(i)));
  }

  /// Highest generator index present, or -1 for the unit.
  int max_gen() const {
    if (bits_ == 0) return -1;
    for (int i = kMaxGens - 1; i >= 0; --i)
      if (exp(i) > 0) return i;
    return -1;
  }

  int total_degree() const {
    int d = 0;
    for (int i = 0; i < kMaxGens; ++i) d += exp(i);
    return d;
  }

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }
  friend bool operator<(Monomial a, Monomial b) { return a.bits_ < b.bits_; }

 private:
  static int shift(int i) { return 8 * (kMaxGens - 1 - i); }
  uint64_t bits_ = 0;
};

/// Finite linear combination of canonical monomials over Scalar.
/// Zero coefficients are never stored; equality is map equality.
class Element {
 public:
  using Terms = std::map<uint64_t, Scalar>;

  Element() = default;
  Element(Monomial m, Scalar c) { add(m, c); }
  static Element unit(Scalar c = Scalar(1)) { return Element(Monomial::one(), std::move(c)); }
  static Element zero() { return Element(); }

  void add(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m.bits());
    if (it == terms_.end()) {
      terms_.emplace(m.bits(), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const Element& e, const Scalar& c = Scalar(1)) {
    if (c.is_zero()) return;
    for (const auto& [mb, co] : e.terms_) add(Monomial(mb), co * c);
  }

  Element& operator+=(const Element& e) {
    add(e);
    return *this;
  }
  Element& operator-=(const Element& e) {
    add(e, Scalar(-1));
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, const Element& e) {
    Element out;
    out.add(e, c);
    return out;
  }
  Element operator-() const { return Scalar(-1) * *this; }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of a monomial (zero when absent).
  Scalar coeff(Monomial m) const {
    auto it = terms_.find(m.bits());
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// For elements proportional to the unit monomial.
  std::optional<Scalar> as_scalar() const {
    if (terms_.empty()) return Scalar(0);
    if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
    return std::nullopt;
  }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// Element of the (ordinary) tensor product of two presented algebras;
/// finite map (Monomial, Monomial) -> Scalar, componentwise canonical.
class TensorElement {
 public:
  using Key = std::pair<uint64_t, uint64_t>;
  using Terms = std::map<Key, Scalar>;

  TensorElement() = default;
  TensorElement(const Presentation* left, const Presentation* right)
      : left_(left), right_(right) {}

  static TensorElement simple(const Presentation* l, const Presentation* r, Monomial a,
                              Monomial b, Scalar c = Scalar(1)) {
    TensorElement t(l, r);
    t.add(a, b, c);
    return t;
  }

  void add(Monomial a, Monomial b, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{a.bits(), b.bits()};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const TensorElement& t, const Scalar& c = Scalar(1)) {
    for (const auto& [k, co] : t.terms_) add(Monomial(k.first), Monomial(k.second), co * c);
  }

  TensorElement& operator+=(const TensorElement& t) {
    if (!left_) {
      left_ = t.left_;
      right_ = t.right_;
    }
    add(t);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& t) {
    if (!left_) {
      left_ = t.left_;
      right_ = t.right_;
    }
    add(t, Scalar(-1));
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Scalar& c, const TensorElement& t) {
    TensorElement out(t.left_, t.right_);
    out.add(t, c);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  const Presentation* left() const { return left_; }
  const Presentation* right() const { return right_; }

  /// Componentwise product in the tensor-product algebra.
  TensorElement mul(const TensorElement& o) const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

 private:
  const Presentation* left_ = nullptr;
  const Presentation* right_ = nullptr;
  Terms terms_;
};

struct Generator {
  std::string name;
  int grade = 0;      // form degree: 0 for functions, 1 for differentials
  int cap_exp = 0;    // 0 = no power cap
  Element cap_rhs;    // replacement for g^cap_exp (scalar multiple of 1 here)
};

/// Generators with grades plus ordered rewrite rules. A rule maps each
/// out-of-order adjacent pair g_i*g_j (i after j in canonical order) to a
/// combination of canonically ordered words; power caps close the system.
class Presentation {
 public:
  Presentation(std::string name, std::vector<Generator> gens);

  // g_hi * g_lo -> rhs, for hi > lo in canonical order
  void set_rule(int hi, int lo, Element rhs);
  // checks every out-of-order pair has a rule and grades are consistent
  void finalize();

  const std::string& name() const { return name_; }
  int num_gens() const { return int(gens_.size()); }
  const Generator& gen(int i) const { return gens_[i]; }
  const Element& rule(int hi, int lo) const { return rules_[hi * num_gens() + lo]; }
  bool has_rule(int hi, int lo) const { return hi > lo; }
  int index_of(const std::string& name) const;  // -1 when absent

  int grade(Monomial m) const {
    int g = 0;
    for (int i = 0; i < num_gens(); ++i) g += gens_[i].grade * m.exp(i);
    return g;
  }
  /// Grade of a homogeneous element; nullopt for mixed grades.
  std::optional<int> grade(const Element& e) const;

  Element gen_element(int i) const { return Element(Monomial::gen(i), Scalar(1)); }

  /// Normal form of (canonical monomial m) * g_i. Memoized.
  const Element& append(Monomial m, int g) const;
  /// Normal form of base * (product of the letters of `word` in canonical order).
  Element fold(Monomial base, Monomial word) const;
  Element fold(const Element& base, Monomial word) const;

  Element mul(const Element& a, const Element& b) const;
  Element mul(Monomial a, Monomial b) const;
  /// Normal form of an arbitrary word of generator indices.
  Element normalize_word(const std::vector<int>& word) const;
  Element power(const Element& a, int n) const;

  /// All canonical monomials, graded-lex order. Throws when some generator
  /// has no power cap.
  const std::vector<Monomial>& basis() const;
  std::vector<Monomial> basis(int grade_filter) const;

  std::string print(Monomial m) const;
  std::string print(const Element& e) const;

  void clear_cache() const {
    append_cache_.clear();
    basis_cache_.clear();
  }

 private:
  std::string name_;
  std::vector<Generator> gens_;
  std::vector<Element> rules_;
  bool finalized_ = false;
  mutable std::unordered_map<uint64_t, Element> append_cache_;
  mutable std::vector<Monomial> basis_cache_;
};

std::string print_tensor(const TensorElement& t);

/// Report from a verification sweep (associativity, confluence, ...).
struct CheckReport {
  std::string name;
  long checked = 0;
  std::vector<std::string> failures;  // first few, human readable
  long failed = 0;
  uint64_t seed = 0;
  bool passed() const { return failed == 0; }
  void fail(const std::string& what) {
    ++failed;
    if (failures.size() < 10) failures.push_back(what);
  }
};

enum class AssocMode { kAuto, kExhaustive, kSampled };

/// (u v) w == u (v w) over basis triples: exhaustive when |basis|^3 is
/// feasible, otherwise generator-anchored triples over a seeded subsample
/// plus random triples.
CheckReport check_associativity(const Presentation& p, AssocMode mode = AssocMode::kAuto,
                                uint64_t seed = 12345);

/// Resolves every critical overlap g_k g_j g_i (pairwise out-of-order) and
/// every power-cap overlap both ways and compares normal forms.
CheckReport check_local_confluence(const Presentation& p);

}  // namespace qps
