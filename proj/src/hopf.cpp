#include "qps/hopf.hpp"

#include <stdexcept>

namespace qps {

namespace {

enum AbstractGen { GA = 0, GB = 1, GC = 2, GD = 3 };

bool is_y_like(const std::string& name) {
  return name == "y" || name == "py" || name == "dy" || name == "dpy";
}

// x <-> y within each of the four coordinate pairs
std::string partner_name(const std::string& name) {
  std::string out = name;
  for (auto& ch : out) {
    if (ch == 'x') {
      ch = 'y';
      return out;
    }
    if (ch == 'y') {
      ch = 'x';
      return out;
    }
  }
  throw std::logic_error("partner_name: " + name + " has no coordinate pair");
}

Monomial first_letter(Monomial m) {
  for (int i = 0; i < Monomial::kMaxGens; ++i)
    if (m.exp(i) > 0) return Monomial::gen(i);
  throw std::logic_error("first_letter of unit");
}

Monomial drop_first_letter(Monomial m) {
  for (int i = 0; i < Monomial::kMaxGens; ++i)
    if (m.exp(i) > 0) return m.with_exp(i, m.exp(i) - 1);
  throw std::logic_error("drop_first_letter of unit");
}

}  // namespace

HopfStructure::HopfStructure() : cat_(SpaceCatalog::instance()), F_(cat_.F()) {
  const Scalar q = Scalar::q(), q2 = Scalar::q(2);
  const int a = F_.index_of("a"), b = F_.index_of("b"), c = F_.index_of("c");

  delta_abs_ = {
      {{GA, GA}, {GB, GC}},  // Delta a
      {{GA, GB}, {GB, GD}},  // Delta b
      {{GC, GA}, {GD, GC}},  // Delta c
      {{GC, GB}, {GD, GD}},  // Delta d
  };
  counit_abs_ = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};

  const Element& d = cat_.d_elem();
  auto tens = [&](const Element& l, const Element& r) {
    TensorElement t(&F_, &F_);
    for (const auto& [lm, lc] : l.terms())
      for (const auto& [rm, rc] : r.terms()) t.add(Monomial(lm), Monomial(rm), lc * rc);
    return t;
  };
  Element ea = F_.gen_element(a), eb = F_.gen_element(b), ec = F_.gen_element(c);
  delta_gen_.resize(3);
  delta_gen_[a] = tens(ea, ea) + tens(eb, ec);
  delta_gen_[b] = tens(ea, eb) + tens(eb, d);
  delta_gen_[c] = tens(ec, ea) + tens(d, ec);

  antipode_gen_.resize(3);
  antipode_gen_[a] = d;
  antipode_gen_[b] = -q2 * eb;
  antipode_gen_[c] = -q * ec;
}

const HopfStructure& HopfStructure::instance() {
  static HopfStructure h;
  return h;
}

const Element& HopfStructure::d() const { return cat_.d_elem(); }

const TensorElement& HopfStructure::coproduct_mono(Monomial m) const {
  auto it = coproduct_cache_.find(m.bits());
  if (it != coproduct_cache_.end()) return it->second;
  TensorElement out(&F_, &F_);
  if (m.is_one()) {
    out.add(Monomial::one(), Monomial::one(), Scalar(1));
  } else {
    out = TensorElement::simple(&F_, &F_, Monomial::one(), Monomial::one());
    for (int i = 0; i < F_.num_gens(); ++i)
      for (int e = 0; e < m.exp(i); ++e) out = out.mul(delta_gen_[i]);
  }
  return coproduct_cache_.emplace(m.bits(), std::move(out)).first->second;
}

TensorElement HopfStructure::coproduct(const Element& f) const {
  TensorElement out(&F_, &F_);
  for (const auto& [mb, c] : f.terms()) out.add(coproduct_mono(Monomial(mb)), c);
  return out;
}

Scalar HopfStructure::counit(const Element& f) const {
  // epsilon(a) = 1, epsilon(b) = epsilon(c) = 0, extended multiplicatively
  const int b = F_.index_of("b"), c = F_.index_of("c");
  Scalar out(0);
  for (const auto& [mb, co] : f.terms()) {
    Monomial m(mb);
    if (m.exp(b) == 0 && m.exp(c) == 0) out += co;
  }
  return out;
}

Element HopfStructure::antipode(const Element& f) const {
  Element out;
  for (const auto& [mb, co] : f.terms()) {
    Monomial m(mb);
    // anti-homomorphism: reverse the letters of a^i b^j c^k
    Element acc = Element::unit();
    for (int i = F_.num_gens() - 1; i >= 0; --i)
      for (int e = 0; e < m.exp(i); ++e) acc = F_.mul(acc, antipode_gen_[i]);
    out.add(acc, co);
  }
  return out;
}

Scalar HopfStructure::rform_abs(int g, Monomial h) const {
  if (h.is_one()) return counit_abs_[g];
  if (h.total_degree() == 1) {
    // base table r(g, concrete generator) = q R: the only nonzero pairs are
    // r(a,a) = q^2, r(d,a) = q, r(c,b) = q^2 - 1
    int j = h.max_gen();  // 0=a, 1=b, 2=c
    if (g == GA && j == 0) return Scalar::q(2);
    if (g == GD && j == 0) return Scalar::q();
    if (g == GC && j == 1) return Scalar::q(2) - Scalar(1);
    return Scalar(0);
  }
  SparseKey key{uint64_t(g), h.bits()};
  auto it = rform_abs_cache_.find(key);
  if (it != rform_abs_cache_.end()) return it->second;
  // r(g, uv) = r(g1, v) r(g2, u); the abstract coproduct keeps the first leg
  // a single generator, so the h-leg strictly shrinks
  Monomial u = first_letter(h), v = drop_first_letter(h);
  Scalar out(0);
  for (const auto& [g1, g2] : delta_abs_[g]) out += rform_abs(g1, v) * rform_abs(g2, u);
  rform_abs_cache_.emplace(key, out);
  return out;
}

Scalar HopfStructure::rform_mono(Monomial f, Monomial h, int) const {
  if (f.is_one()) return counit(Element(h, Scalar(1)));
  if (f.total_degree() == 1) return rform_abs(f.max_gen(), h);

  SparseKey key{f.bits(), h.bits()};
  auto it = rform_cache_.find(key);
  if (it != rform_cache_.end()) return it->second;

  // r(uv, h) = r(u, h1) r(v, h2), peeling one letter off f at a time
  Monomial u = first_letter(f), v = drop_first_letter(f);
  const TensorElement& dh = coproduct_mono(h);
  Scalar out(0);
  for (const auto& [k, c] : dh.terms())
    out += c * rform_abs(u.max_gen(), Monomial(k.first)) * rform_mono(v, Monomial(k.second), 0);
  rform_cache_.emplace(key, out);
  return out;
}

Scalar HopfStructure::rform(const Element& f, const Element& h) const {
  Scalar out(0);
  for (const auto& [fm, fc] : f.terms())
    for (const auto& [hm, hc] : h.terms()) out += fc * hc * rform_mono(Monomial(fm), Monomial(hm), 0);
  return out;
}

Element HopfStructure::act_abs(int g, Monomial m, const Presentation& target) const {
  auto key = std::make_tuple(&target, g, m.bits());
  auto it = act_cache_.find(key);
  if (it != act_cache_.end()) return it->second;

  Element out;
  if (m.is_one()) {
    out = counit_abs_[g].is_zero() ? Element::zero() : Element::unit(counit_abs_[g]);
  } else if (m.total_degree() == 1) {
    int i = m.max_gen();
    const std::string& name = target.gen(i).name;
    bool ylike = is_y_like(name);
    const Scalar q = Scalar::q(), q2 = Scalar::q(2);
    switch (g) {
      case GA:
        out = (ylike ? q : q2) * target.gen_element(i);
        break;
      case GB:
        if (ylike) {
          int p = target.index_of(partner_name(name));
          out = (q2 - Scalar(1)) * target.gen_element(p);
        }
        break;
      case GC:
        break;  // zero
      case GD:
        out = (ylike ? q2 : q) * target.gen_element(i);
        break;
    }
  } else {
    // module-algebra law through the abstract coproduct
    Monomial u = first_letter(m), v = drop_first_letter(m);
    for (const auto& [g1, g2] : delta_abs_[g])
      out += target.mul(act_abs(g1, u, target), act_abs(g2, v, target));
  }
  act_cache_.emplace(key, out);
  return out;
}

Element HopfStructure::act_generator(int abstract_gen, Monomial m, const Presentation& target) const {
  return act_abs(abstract_gen, m, target);
}

Element HopfStructure::act(const Element& h, const Element& m, const Presentation& target) const {
  Element out;
  for (const auto& [hm, hc] : h.terms()) {
    Monomial hmono(hm);
    // (uv) |> m = u |> (v |> m): apply the letters right to left
    Element cur = m;
    for (int i = F_.num_gens() - 1; i >= 0; --i) {
      for (int e = 0; e < hmono.exp(i); ++e) {
        Element next;
        for (const auto& [mm, mc] : cur.terms()) next.add(act_abs(i, Monomial(mm), target), mc);
        cur = std::move(next);
      }
    }
    out.add(cur, hc);
  }
  return out;
}

Element HopfStructure::act_from_rform(const Element& h, const Element& m) const {
  const Presentation& M = cat_.M();
  Element out;
  for (const auto& [mm, mc] : m.terms()) {
    const TensorElement& co = coact_mono(Monomial(mm), M);
    for (const auto& [k, c] : co.terms()) {
      Scalar r(0);
      for (const auto& [hm, hc] : h.terms()) r += hc * rform_mono(Monomial(k.first), Monomial(hm), 0);
      out.add(Monomial(k.second), mc * c * r);
    }
  }
  return out;
}

const TensorElement& HopfStructure::coact_mono(Monomial m, const Presentation& target) const {
  auto key = std::make_pair(&target, m.bits());
  auto it = coact_cache_.find(key);
  if (it != coact_cache_.end()) return it->second;

  const int a = F_.index_of("a"), b = F_.index_of("b"), c = F_.index_of("c");
  auto gen_image = [&](int i) {
    const std::string& name = target.gen(i).name;
    TensorElement t(&F_, &target);
    if (!is_y_like(name)) {
      int p = target.index_of(partner_name(name));
      t.add(Monomial::gen(a), Monomial::gen(i), Scalar(1));
      t.add(Monomial::gen(b), Monomial::gen(p), Scalar(1));
    } else {
      int p = target.index_of(partner_name(name));
      t.add(Monomial::gen(c), Monomial::gen(p), Scalar(1));
      for (const auto& [dm, dc] : cat_.d_elem().terms()) t.add(Monomial(dm), Monomial::gen(i), dc);
    }
    return t;
  };

  TensorElement out = TensorElement::simple(&F_, &target, Monomial::one(), Monomial::one());
  for (int i = 0; i < target.num_gens(); ++i)
    for (int e = 0; e < m.exp(i); ++e) out = out.mul(gen_image(i));
  return coact_cache_.emplace(key, std::move(out)).first->second;
}

TensorElement HopfStructure::coact(const Element& e, const Presentation& target) const {
  TensorElement out(&F_, &target);
  for (const auto& [mb, c] : e.terms()) out.add(coact_mono(Monomial(mb), target), c);
  return out;
}

const TensorElement& HopfStructure::smash_coact_mono(Monomial m) const {
  auto it = smash_coact_cache_.find(m.bits());
  if (it != smash_coact_cache_.end()) return it->second;

  const Presentation& S = cat_.MF();
  const int fa = F_.index_of("a"), fb = F_.index_of("b"), fc = F_.index_of("c");
  auto gen_image = [&](int i) {
    const std::string& name = S.gen(i).name;
    TensorElement t(&S, &F_);
    if (name == "x" || name == "y") {
      t.add(Monomial::gen(i), Monomial::one(), Scalar(1));
    } else if (name == "a") {
      t.add(Monomial::gen(i), Monomial::gen(fa), Scalar(1));
      t.add(Monomial::gen(S.index_of("b")), Monomial::gen(fc), Scalar(1));
    } else if (name == "b") {
      t.add(Monomial::gen(S.index_of("a")), Monomial::gen(fb), Scalar(1));
      for (const auto& [dm, dc] : cat_.d_elem().terms())
        t.add(Monomial::gen(i), Monomial(dm), dc);
    } else {  // c
      t.add(Monomial::gen(i), Monomial::gen(fa), Scalar(1));
      for (const auto& [dm, dc] : cat_.d_elem_MF().terms())
        t.add(Monomial(dm), Monomial::gen(fc), dc);
    }
    return t;
  };

  TensorElement out = TensorElement::simple(&S, &F_, Monomial::one(), Monomial::one());
  for (int i = 0; i < S.num_gens(); ++i)
    for (int e = 0; e < m.exp(i); ++e) out = out.mul(gen_image(i));
  return smash_coact_cache_.emplace(m.bits(), std::move(out)).first->second;
}

TensorElement HopfStructure::smash_coaction(const Element& e) const {
  TensorElement out(&cat_.MF(), &F_);
  for (const auto& [mb, c] : e.terms()) out.add(smash_coact_mono(Monomial(mb)), c);
  return out;
}

std::vector<Element> HopfStructure::coinvariants_MF() const {
  const Presentation& S = cat_.MF();
  const auto& B = S.basis();
  std::vector<SparseVec> images;
  images.reserve(B.size());
  for (Monomial m : B) {
    // delta_R(m) - m (x) 1
    TensorElement t = smash_coact_mono(m);
    SparseVec v = to_sparse(t);
    sparse_add(v, SparseVec{{SparseKey{m.bits(), 0}, Scalar(1)}}, Scalar(-1));
    images.push_back(std::move(v));
  }
  std::vector<Element> out;
  for (const auto& combo : kernel_combos(images)) {
    Element e;
    for (const auto& [i, c] : combo) e.add(B[i], c);
    out.push_back(std::move(e));
  }
  return out;
}

TensorElement HopfStructure::box_mul(const TensorElement& t1, const TensorElement& t2) const {
  const Presentation& M = cat_.M();
  TensorElement out(&M, &M);
  for (const auto& [k1, c1] : t1.terms()) {
    Monomial av(k1.first), v(k1.second);
    const TensorElement& co = coact_mono(v, M);  // v_{-1} (x) v_0
    for (const auto& [k2, c2] : t2.terms()) {
      Monomial bw(k2.first), w(k2.second);
      for (const auto& [ck, cc] : co.terms()) {
        Element hit = act(Element(Monomial(ck.first), Scalar(1)),
                          Element(bw, Scalar(1)), M);  // v_{-1} |> b
        Element left = M.mul(Element(av, Scalar(1)), hit);
        Element right = M.mul(Monomial(ck.second), w);
        Scalar c = c1 * c2 * cc;
        for (const auto& [lm, lc] : left.terms())
          for (const auto& [rm, rc] : right.terms())
            out.add(Monomial(lm), Monomial(rm), c * lc * rc);
      }
    }
  }
  return out;
}

TensorElement HopfStructure::galois_beta(const TensorElement& t) const {
  const Presentation& S = cat_.MF();
  TensorElement out(&S, &F_);
  for (const auto& [k, c] : t.terms()) {
    Monomial p(k.first), pp(k.second);
    const TensorElement& co = smash_coact_mono(pp);  // p'_0 (x) p'_1
    for (const auto& [ck, cc] : co.terms()) {
      Element left = S.mul(p, Monomial(ck.first));
      for (const auto& [lm, lc] : left.terms())
        out.add(Monomial(lm), Monomial(ck.second), c * cc * lc);
    }
  }
  return out;
}

const std::vector<TensorElement>& HopfStructure::cotensor_basis() const {
  if (!cotensor_cache_.empty()) return cotensor_cache_;

  const Presentation& S = cat_.MF();
  const Presentation& M = cat_.M();
  const int sx = S.index_of("x"), sy = S.index_of("y");

  // the condition delta_R p (x) w = p (x) delta_L w decouples over the
  // plane part of p, which both coactions leave untouched
  const auto& FB = F_.basis();
  const auto& MB = M.basis();
  std::vector<Monomial> planes;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      planes.push_back(Monomial().with_exp(sx, i).with_exp(sy, j));

  for (Monomial plane : planes) {
    std::vector<SparseVec> images;
    std::vector<std::pair<Monomial, Monomial>> inputs;  // (MF monomial, M monomial)
    for (Monomial h : FB) {
      // MF monomial: plane part times the quantum-group part (indices 2,3,4)
      Monomial p = plane;
      for (int i = 0; i < 3; ++i) p = p.with_exp(2 + i, h.exp(i));
      const TensorElement& dr = smash_coact_mono(p);
      for (Monomial w : MB) {
        const TensorElement& dl = coact_mono(w, M);
        SparseVec v;
        for (const auto& [k, c] : dr.terms())
          sparse_add(v, SparseVec{{triple_key(k.first, k.second, w.bits()), Scalar(1)}}, c);
        for (const auto& [k, c] : dl.terms())
          sparse_add(v, SparseVec{{triple_key(p.bits(), k.first, k.second), Scalar(1)}}, -c);
        images.push_back(std::move(v));
        inputs.emplace_back(p, w);
      }
    }
    for (const auto& combo : kernel_combos(images)) {
      TensorElement t(&S, &M);
      for (const auto& [i, c] : combo) t.add(inputs[i].first, inputs[i].second, c);
      cotensor_cache_.push_back(std::move(t));
    }
  }
  for (const auto& t : cotensor_cache_) cotensor_span_.add(to_sparse(t));
  return cotensor_cache_;
}

bool HopfStructure::in_cotensor(const TensorElement& t) const {
  cotensor_basis();
  return cotensor_span_.contains(to_sparse(t));
}

TensorElement HopfStructure::psi(const Element& e) const {
  const Presentation& Q = cat_.Q();
  const Presentation& S = cat_.MF();
  const Presentation& M = cat_.M();
  const int mx = M.index_of("x"), my = M.index_of("y");

  auto gen_image = [&](int i) {
    const std::string& name = Q.gen(i).name;
    TensorElement t(&S, &M);
    if (name == "x" || name == "y") {
      t.add(Monomial::gen(S.index_of(name)), Monomial::one(), Scalar(1));
    } else if (name == "px") {
      t.add(Monomial::gen(S.index_of("a")), Monomial::gen(mx), Scalar(1));
      t.add(Monomial::gen(S.index_of("b")), Monomial::gen(my), Scalar(1));
    } else {  // py
      t.add(Monomial::gen(S.index_of("c")), Monomial::gen(mx), Scalar(1));
      for (const auto& [dm, dc] : cat_.d_elem_MF().terms()) t.add(Monomial(dm), Monomial::gen(my), dc);
    }
    return t;
  };

  TensorElement out(&S, &M);
  for (const auto& [mb, c] : e.terms()) {
    Monomial m(mb);
    TensorElement img = TensorElement::simple(&S, &M, Monomial::one(), Monomial::one());
    for (int i = 0; i < Q.num_gens(); ++i)
      for (int ee = 0; ee < m.exp(i); ++ee) img = img.mul(gen_image(i));
    out.add(img, c);
  }
  return out;
}

}  // namespace qps
