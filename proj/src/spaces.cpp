#include "qps/spaces.hpp"

namespace qps {

namespace {

Generator fn_gen(const std::string& name) {
  // cubic unipotent function generator: z^3 = 1
  return Generator{name, 0, 3, Element::unit()};
}

Generator nil_fn_gen(const std::string& name) {
  // cubic nilpotent function generator: z^3 = 0
  return Generator{name, 0, 3, Element::zero()};
}

Generator form_gen(const std::string& name) {
  // square-zero differential
  return Generator{name, 1, 2, Element::zero()};
}

Element term(const Scalar& c, std::initializer_list<int> gens) {
  Monomial m;
  for (int g : gens) m = m.with_exp(g, m.exp(g) + 1);
  return Element(m, c);
}

}  // namespace

SpaceCatalog::SpaceCatalog()
    : M_("M", {fn_gen("x"), fn_gen("y")}),
      Q_("Q", {fn_gen("x"), fn_gen("y"), fn_gen("px"), fn_gen("py")}),
      OmegaM_("OmegaM", {form_gen("dx"), form_gen("dy"), fn_gen("x"), fn_gen("y")}),
      OmegaQ_("OmegaQ", {form_gen("dx"), form_gen("dy"), form_gen("dpx"), form_gen("dpy"),
                         fn_gen("x"), fn_gen("y"), fn_gen("px"), fn_gen("py")}),
      F_("F", {fn_gen("a"), nil_fn_gen("b"), nil_fn_gen("c")}),
      MF_("MF", {fn_gen("x"), fn_gen("y"), fn_gen("a"), nil_fn_gen("b"), nil_fn_gen("c")}) {
  const Scalar q = Scalar::q(1);
  const Scalar q2 = Scalar::q(2);
  const Scalar one(1);

  // M: x(0) y(1)
  M_.set_rule(1, 0, term(q2, {0, 1}));
  M_.finalize();

  // Q: x(0) y(1) px(2) py(3)
  Q_.set_rule(1, 0, term(q2, {0, 1}));
  Q_.set_rule(2, 0, term(q2, {0, 2}));
  Q_.set_rule(2, 1, term(q, {1, 2}) + term(q2 - one, {0, 3}));
  Q_.set_rule(3, 0, term(q, {0, 3}));
  Q_.set_rule(3, 1, term(q2, {1, 3}));
  Q_.set_rule(3, 2, term(q2, {2, 3}));
  Q_.finalize();

  // OmegaM: dx(0) dy(1) x(2) y(3)
  OmegaM_.set_rule(1, 0, term(-q, {0, 1}));
  OmegaM_.set_rule(2, 0, term(q2, {0, 2}));
  OmegaM_.set_rule(2, 1, term(q, {1, 2}) + term(q2 - one, {0, 3}));
  OmegaM_.set_rule(3, 0, term(q, {0, 3}));
  OmegaM_.set_rule(3, 1, term(q2, {1, 3}));
  OmegaM_.set_rule(3, 2, term(q2, {2, 3}));
  OmegaM_.finalize();

  // OmegaQ: dx(0) dy(1) dpx(2) dpy(3) x(4) y(5) px(6) py(7)
  // level 2 (form-form)
  OmegaQ_.set_rule(1, 0, term(-q, {0, 1}));
  OmegaQ_.set_rule(2, 0, term(-q2, {0, 2}));
  OmegaQ_.set_rule(2, 1, term(-q, {1, 2}) + term(one - q2, {0, 3}));
  OmegaQ_.set_rule(3, 0, term(-q, {0, 3}));
  OmegaQ_.set_rule(3, 1, term(-q2, {1, 3}));
  OmegaQ_.set_rule(3, 2, term(-q, {2, 3}));
  // level 1 (function-form)
  OmegaQ_.set_rule(4, 0, term(q2, {0, 4}));
  OmegaQ_.set_rule(5, 0, term(q, {0, 5}));
  OmegaQ_.set_rule(4, 1, term(q, {1, 4}) + term(q2 - one, {0, 5}));
  OmegaQ_.set_rule(5, 1, term(q2, {1, 5}));
  OmegaQ_.set_rule(4, 2, term(q, {2, 4}));
  OmegaQ_.set_rule(5, 2, term(q2, {2, 5}) + term(q - one, {3, 4}));
  OmegaQ_.set_rule(4, 3, term(q2, {3, 4}));
  OmegaQ_.set_rule(5, 3, term(q, {3, 5}));
  OmegaQ_.set_rule(6, 0, term(q2, {0, 6}));
  OmegaQ_.set_rule(7, 0, term(q, {0, 7}));
  OmegaQ_.set_rule(6, 1, term(q, {1, 6}) + term(q2 - one, {0, 7}));
  OmegaQ_.set_rule(7, 1, term(q2, {1, 7}));
  OmegaQ_.set_rule(6, 2, term(q2, {2, 6}));
  OmegaQ_.set_rule(7, 2, term(q, {2, 7}));
  OmegaQ_.set_rule(6, 3, term(q, {3, 6}) + term(q2 - one, {2, 7}));
  OmegaQ_.set_rule(7, 3, term(q2, {3, 7}));
  // level 0 (function-function), same pattern as Q shifted to 4..7
  OmegaQ_.set_rule(5, 4, term(q2, {4, 5}));
  OmegaQ_.set_rule(6, 4, term(q2, {4, 6}));
  OmegaQ_.set_rule(6, 5, term(q, {5, 6}) + term(q2 - one, {4, 7}));
  OmegaQ_.set_rule(7, 4, term(q, {4, 7}));
  OmegaQ_.set_rule(7, 5, term(q2, {5, 7}));
  OmegaQ_.set_rule(7, 6, term(q2, {6, 7}));
  OmegaQ_.finalize();

  // F: a(0) b(1) c(2), with d eliminated via the determinant relation
  F_.set_rule(1, 0, term(q2, {0, 1}));
  F_.set_rule(2, 0, term(q2, {0, 2}));
  F_.set_rule(2, 1, term(one, {1, 2}));
  F_.finalize();
  d_elem_ = term(one, {0, 0}) + term(q, {0, 0, 1, 2});

  // MF: x(0) y(1) a(2) b(3) c(4); cross rules carry the quantum-group
  // generators past the plane generators via the action
  MF_.set_rule(1, 0, term(q2, {0, 1}));
  MF_.set_rule(3, 2, term(q2, {2, 3}));
  MF_.set_rule(4, 2, term(q2, {2, 4}));
  MF_.set_rule(4, 3, term(one, {3, 4}));
  MF_.set_rule(2, 0, term(q2, {0, 2}));
  MF_.set_rule(2, 1, term(q, {1, 2}) + term(q2 - one, {0, 4}));
  MF_.set_rule(3, 0, term(q2, {0, 3}));
  MF_.set_rule(3, 1, term(q, {1, 3}) + term(q2 - one, {0, 2, 2}) +
                         term(q * (q2 - one), {0, 2, 2, 3, 4}));
  MF_.set_rule(4, 0, term(q, {0, 4}));
  MF_.set_rule(4, 1, term(q2, {1, 4}));
  MF_.finalize();
  d_elem_MF_ = term(one, {2, 2}) + term(q, {2, 2, 3, 4});
}

const SpaceCatalog& SpaceCatalog::instance() {
  static SpaceCatalog cat;
  return cat;
}

const Presentation* SpaceCatalog::by_name(const std::string& name) const {
  if (name == "M") return &M_;
  if (name == "Q") return &Q_;
  if (name == "OmegaM") return &OmegaM_;
  if (name == "OmegaQ") return &OmegaQ_;
  if (name == "F") return &F_;
  if (name == "MF") return &MF_;
  return nullptr;
}

}  // namespace qps
