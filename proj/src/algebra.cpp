#include "qps/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qps {

TensorElement TensorElement::mul(const TensorElement& o) const {
  TensorElement out(left_, right_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      Element l = left_->mul(Monomial(k1.first), Monomial(k2.first));
      Element r = right_->mul(Monomial(k1.second), Monomial(k2.second));
      Scalar c = c1 * c2;
      for (const auto& [lm, lc] : l.terms())
        for (const auto& [rm, rc] : r.terms()) out.add(Monomial(lm), Monomial(rm), c * lc * rc);
    }
  }
  return out;
}

Presentation::Presentation(std::string name, std::vector<Generator> gens)
    : name_(std::move(name)), gens_(std::move(gens)) {
  if (gens_.size() > size_t(Monomial::kMaxGens))
    throw std::invalid_argument("Presentation: too many generators");
  rules_.resize(gens_.size() * gens_.size());
}

void Presentation::set_rule(int hi, int lo, Element rhs) {
  if (finalized_) throw std::logic_error("Presentation: frozen");
  if (hi <= lo) throw std::invalid_argument("Presentation: rule must reorder hi > lo");
  rules_[hi * num_gens() + lo] = std::move(rhs);
}

void Presentation::finalize() {
  for (int hi = 0; hi < num_gens(); ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      const Element& r = rules_[hi * num_gens() + lo];
      if (r.is_zero())
        throw std::logic_error(name_ + ": missing rule for " + gens_[hi].name + "*" +
                               gens_[lo].name);
      int g = gens_[hi].grade + gens_[lo].grade;
      for (const auto& [mb, c] : r.terms()) {
        (void)c;
        if (grade(Monomial(mb)) != g)
          throw std::logic_error(name_ + ": rule for " + gens_[hi].name + "*" + gens_[lo].name +
                                 " is not grade homogeneous");
      }
    }
  }
  finalized_ = true;
}

int Presentation::index_of(const std::string& name) const {
  for (int i = 0; i < num_gens(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

std::optional<int> Presentation::grade(const Element& e) const {
  std::optional<int> g;
  for (const auto& [mb, c] : e.terms()) {
    (void)c;
    int mg = grade(Monomial(mb));
    if (!g)
      g = mg;
    else if (*g != mg)
      return std::nullopt;
  }
  return g ? g : std::optional<int>(0);
}

const Element& Presentation::append(Monomial m, int g) const {
  uint64_t key = (m.bits() << 3) | uint64_t(g);
  auto it = append_cache_.find(key);
  if (it != append_cache_.end()) return it->second;

  Element out;
  int L = m.max_gen();
  if (L <= g) {
    // in-order append: bump the exponent, applying the power cap if reached
    int e = m.exp(g) + 1;
    const Generator& gen = gens_[g];
    if (gen.cap_exp > 0 && e == gen.cap_exp) {
      Monomial rest = m.with_exp(g, 0);
      for (const auto& [mb, c] : gen.cap_rhs.terms()) {
        if (!Monomial(mb).is_one())
          throw std::logic_error(name_ + ": power-cap replacement must be scalar");
        out.add(rest, c);
      }
    } else {
      out = Element(m.with_exp(g, e), Scalar(1));
    }
  } else {
    // m ends in the higher letter L: peel one off and exchange it past g
    Monomial head = m.with_exp(L, m.exp(L) - 1);
    const Element& rl = rule(L, g);
    for (const auto& [mb, c] : rl.terms()) out.add(c * fold(head, Monomial(mb)));
  }
  return append_cache_.emplace(key, std::move(out)).first->second;
}

Element Presentation::fold(Monomial base, Monomial word) const {
  return fold(Element(base, Scalar(1)), word);
}

Element Presentation::fold(const Element& base, Monomial word) const {
  Element acc = base;
  for (int g = 0; g < num_gens(); ++g) {
    for (int rep = 0; rep < word.exp(g); ++rep) {
      Element next;
      for (const auto& [mb, c] : acc.terms()) next.add(append(Monomial(mb), g), c);
      acc = std::move(next);
    }
  }
  return acc;
}

Element Presentation::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [mb2, c2] : b.terms()) {
    Element part;
    for (const auto& [mb1, c1] : a.terms()) part.add(Monomial(mb1), c1);
    part = fold(part, Monomial(mb2));
    out.add(part, c2);
  }
  return out;
}

Element Presentation::mul(Monomial a, Monomial b) const { return fold(a, b); }

Element Presentation::normalize_word(const std::vector<int>& word) const {
  Element acc = Element::unit();
  for (int g : word) {
    if (g < 0 || g >= num_gens()) throw std::out_of_range("normalize_word: bad generator");
    Element next;
    for (const auto& [mb, c] : acc.terms()) next.add(append(Monomial(mb), g), c);
    acc = std::move(next);
  }
  return acc;
}

Element Presentation::power(const Element& a, int n) const {
  Element acc = Element::unit();
  for (int i = 0; i < n; ++i) acc = mul(acc, a);
  return acc;
}

const std::vector<Monomial>& Presentation::basis() const {
  if (!basis_cache_.empty()) return basis_cache_;
  for (const auto& g : gens_)
    if (g.cap_exp == 0)
      throw std::logic_error(name_ + ": generator " + g.name + " has no power cap");
  std::vector<Monomial> out{Monomial::one()};
  for (int i = 0; i < num_gens(); ++i) {
    std::vector<Monomial> next;
    for (Monomial m : out)
      for (int e = 0; e < gens_[i].cap_exp; ++e) next.push_back(m.with_exp(i, e));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [this](Monomial a, Monomial b) {
    int ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a.bits() < b.bits();
  });
  basis_cache_ = std::move(out);
  return basis_cache_;
}

std::vector<Monomial> Presentation::basis(int grade_filter) const {
  std::vector<Monomial> out;
  for (Monomial m : basis())
    if (grade(m) == grade_filter) out.push_back(m);
  return out;
}

std::string Presentation::print(Monomial m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < num_gens(); ++i) {
    int e = m.exp(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += gens_[i].name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string Presentation::print(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  // leading (lexicographically largest) term first
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [mb, c] = *it;
    Monomial m(mb);
    std::string term;
    if (m.is_one()) {
      term = c.str();
    } else if (c.is_one()) {
      term = print(m);
    } else if (c == Scalar(-1)) {
      term = "-" + print(m);
    } else if (c.is_simple()) {
      term = c.str() + "*" + print(m);
    } else {
      term = "(" + c.str() + ")*" + print(m);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string print_tensor(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string lm = t.left()->print(Monomial(k.first));
    std::string rm = t.right()->print(Monomial(k.second));
    std::string pair = lm + " (x) " + rm;
    std::string term;
    if (c.is_one()) {
      term = pair;
    } else if (c == Scalar(-1)) {
      term = "-" + pair;
    } else if (c.is_simple()) {
      term = c.str() + "*" + pair;
    } else {
      term = "(" + c.str() + ")*" + pair;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

namespace {

bool assoc_triple(const Presentation& p, const Element& u, const Element& v, const Element& w) {
  return p.mul(p.mul(u, v), w) == p.mul(u, p.mul(v, w));
}

}  // namespace

CheckReport check_associativity(const Presentation& p, AssocMode mode, uint64_t seed) {
  if (const char* env = std::getenv("QPS_SEED")) seed = std::strtoull(env, nullptr, 10);
  CheckReport rep;
  rep.name = "associativity(" + p.name() + ")";
  rep.seed = seed;
  const auto& B = p.basis();
  size_t n = B.size();
  bool exhaustive;
  switch (mode) {
    case AssocMode::kExhaustive:
      exhaustive = true;
      break;
    case AssocMode::kSampled:
      exhaustive = false;
      break;
    default:
      exhaustive = n * n * n <= 600000 || std::getenv("QPS_FULL_ASSOC") != nullptr;
  }
  auto elem = [&](Monomial m) { return Element(m, Scalar(1)); };
  if (exhaustive) {
    // precompute all pairwise products once; triples then need one mul per side
    std::vector<Element> prod(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) prod[i * n + j] = p.mul(B[i], B[j]);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        const Element& uv = prod[i * n + j];
        for (size_t k = 0; k < n; ++k) {
          ++rep.checked;
          if (p.fold(uv, B[k]) != p.mul(elem(B[i]), prod[j * n + k]))
            rep.fail(p.print(B[i]) + " , " + p.print(B[j]) + " , " + p.print(B[k]));
        }
      }
    }
    return rep;
  }
  // generator-anchored triples over the low-degree slice, then random triples
  std::vector<Monomial> low;
  for (Monomial m : B)
    if (m.total_degree() <= 3) low.push_back(m);
  for (int g = 0; g < p.num_gens(); ++g) {
    Element ge = p.gen_element(g);
    for (Monomial u : low) {
      for (Monomial v : low) {
        ++rep.checked;
        if (!assoc_triple(p, ge, elem(u), elem(v)))
          rep.fail(p.gen(g).name + " , " + p.print(u) + " , " + p.print(v));
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, n - 1);
  for (int t = 0; t < 2000; ++t) {
    ++rep.checked;
    Element u = elem(B[pick(rng)]), v = elem(B[pick(rng)]), w = elem(B[pick(rng)]);
    if (!assoc_triple(p, u, v, w))
      rep.fail("random triple " + p.print(u) + " , " + p.print(v) + " , " + p.print(w));
  }
  return rep;
}

CheckReport check_local_confluence(const Presentation& p) {
  CheckReport rep;
  rep.name = "confluence(" + p.name() + ")";
  int n = p.num_gens();
  // overlap words g_k g_j g_i with k > j > i: reduce (k,j) first vs (j,i) first
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        ++rep.checked;
        Element left = p.mul(p.rule(k, j), p.gen_element(i));
        Element right = p.mul(p.gen_element(k), p.rule(j, i));
        if (left != right)
          rep.fail("overlap " + p.gen(k).name + "*" + p.gen(j).name + "*" + p.gen(i).name);
      }
    }
  }
  // power-cap overlaps g_j^e * g_i (i < j) and g_k * g_j^e (k > j)
  for (int j = 0; j < n; ++j) {
    int e = p.gen(j).cap_exp;
    if (e == 0) continue;
    Element cap = p.gen(j).cap_rhs;
    Monomial jpow = Monomial::gen(j, e - 1);
    for (int i = 0; i < j; ++i) {
      ++rep.checked;
      Element via_cap = p.mul(cap, p.gen_element(i));
      Element via_rule = p.mul(Element(jpow, Scalar(1)), p.rule(j, i));
      // finish reducing the leading g_j^{e-1} against the rule output
      if (via_cap != via_rule)
        rep.fail("cap overlap " + p.gen(j).name + "^" + std::to_string(e) + "*" + p.gen(i).name);
    }
    for (int k = j + 1; k < n; ++k) {
      ++rep.checked;
      Element via_cap = p.mul(p.gen_element(k), cap);
      Element via_rule = p.mul(p.rule(k, j), Element(jpow, Scalar(1)));
      if (via_cap != via_rule)
        rep.fail("cap overlap " + p.gen(k).name + "*" + p.gen(j).name + "^" + std::to_string(e));
    }
  }
  return rep;
}

}  // namespace qps
