#include "qps/calculus.hpp"

#include <stdexcept>
#include <vector>

namespace qps {

Calculus::Calculus()
    : cat_(SpaceCatalog::instance()), O_(cat_.OmegaQ()), Q_(cat_.Q()) {}

const Calculus& Calculus::instance() {
  static Calculus c;
  return c;
}

Element Calculus::d(const Element& e) const { return d(e, O_); }

Element Calculus::d(const Element& e, const Presentation& omega) const {
  Element out;
  for (const auto& [mb, c] : e.terms()) {
    Monomial m(mb);
    // split the canonical word into its differential prefix and its function
    // letters; the graded sign for each function letter is (-1)^form-degree
    int form_deg = 0;
    Monomial prefix;
    std::vector<int> letters;
    for (int i = 0; i < omega.num_gens(); ++i) {
      if (omega.gen(i).grade == 1) {
        form_deg += m.exp(i);
        prefix = prefix.with_exp(i, m.exp(i));
      } else {
        for (int e2 = 0; e2 < m.exp(i); ++e2) letters.push_back(i);
      }
    }
    Scalar sign = (form_deg % 2 == 0) ? c : -c;
    for (size_t p = 0; p < letters.size(); ++p) {
      int dz = omega.index_of("d" + omega.gen(letters[p]).name);
      if (dz < 0) throw std::logic_error("differential: no dz partner");
      Element acc(prefix, Scalar(1));
      for (size_t j = 0; j < letters.size(); ++j) {
        int g = (j == p) ? dz : letters[j];
        Element next;
        for (const auto& [ab, ac] : acc.terms()) next.add(omega.append(Monomial(ab), g), ac);
        acc = std::move(next);
      }
      out.add(acc, sign);
    }
  }
  return out;
}

Element Calculus::to_omega(const Element& q_elem) const {
  Element out;
  for (const auto& [mb, c] : q_elem.terms()) {
    Monomial m(mb), lifted;
    for (int i = 0; i < 4; ++i) lifted = lifted.with_exp(4 + i, m.exp(i));
    out.add(lifted, c);
  }
  return out;
}

Element Calculus::to_q(const Element& omega_elem) const {
  Element out;
  for (const auto& [mb, c] : omega_elem.terms()) {
    Monomial m(mb), dropped;
    for (int i = 0; i < 4; ++i) {
      if (m.exp(i) != 0) throw std::invalid_argument("to_q: element has positive grade");
      dropped = dropped.with_exp(i, m.exp(4 + i));
    }
    out.add(dropped, c);
  }
  return out;
}

OneForm Calculus::left_expand(const Element& form) const {
  // canonical grade-1 monomials carry their single differential as the first
  // letter, so the expansion is a direct coefficient read
  OneForm w;
  for (const auto& [mb, c] : form.terms()) {
    Monomial m(mb);
    int dz = -1;
    for (int i = 0; i < 4; ++i) {
      if (m.exp(i) > 0) {
        if (dz >= 0 || m.exp(i) > 1) throw std::invalid_argument("left_expand: grade is not 1");
        dz = i;
      }
    }
    if (dz < 0) throw std::invalid_argument("left_expand: grade is not 1");
    w.g[dz].add(to_q(Element(m.with_exp(dz, 0), Scalar(1))), c);
  }
  return w;
}

Element Calculus::reassemble(const OneForm& w) const {
  Element out;
  for (int i = 0; i < 4; ++i)
    out += O_.mul(O_.gen_element(i), to_omega(w.g[i]));
  return out;
}

OneForm Calculus::d_oneform(const Element& f) const { return left_expand(d(to_omega(f))); }

Element Calculus::partial(int i, const Element& f) const { return d_oneform(f).g[i]; }

Element Calculus::apply(const VectorField& x, const Element& f) const {
  OneForm df = d_oneform(f);
  Element out;
  for (int i = 0; i < 4; ++i) out += Q_.mul(x.f[i], df.g[i]);
  return out;
}

Element Calculus::pair(const OneForm& w, const VectorField& x) const {
  Element out;
  for (int i = 0; i < 4; ++i) out += Q_.mul(x.f[i], w.g[i]);
  return out;
}

}  // namespace qps
