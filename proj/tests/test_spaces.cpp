#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qps/spaces.hpp"

using namespace qps;

namespace {
const SpaceCatalog& cat = SpaceCatalog::instance();
Element gen(const Presentation& p, const char* name) {
  int i = p.index_of(name);
  REQUIRE(i >= 0);
  return p.gen_element(i);
}
}  // namespace

TEST_CASE("basis dimensions") {
  CHECK(cat.M().basis().size() == 9);
  CHECK(cat.Q().basis().size() == 81);
  CHECK(cat.OmegaM().basis().size() == 36);
  CHECK(cat.OmegaQ().basis().size() == 1296);
  CHECK(cat.F().basis().size() == 27);
  CHECK(cat.MF().basis().size() == 243);
}

TEST_CASE("graded dimensions of the differential algebra") {
  const Presentation& O = cat.OmegaQ();
  CHECK(O.basis(0).size() == 81);
  CHECK(O.basis(1).size() == 324);
  CHECK(O.basis(2).size() == 486);
  CHECK(O.basis(3).size() == 324);
  CHECK(O.basis(4).size() == 81);
  CHECK(cat.OmegaM().basis(0).size() == 9);
  CHECK(cat.OmegaM().basis(1).size() == 18);
  CHECK(cat.OmegaM().basis(2).size() == 9);
}

TEST_CASE("plane relations survive in every containing algebra") {
  for (const Presentation* p : {&cat.M(), &cat.Q(), &cat.OmegaM(), &cat.OmegaQ(), &cat.MF()}) {
    Element x = gen(*p, "x"), y = gen(*p, "y");
    CHECK(p->mul(x, y) == Scalar::q() * p->mul(y, x));
    CHECK(p->power(x, 3) == Element::unit());
    CHECK(p->power(y, 3) == Element::unit());
  }
}

TEST_CASE("momentum relations") {
  const Presentation& Q = cat.Q();
  Element x = gen(Q, "x"), y = gen(Q, "y"), px = gen(Q, "px"), py = gen(Q, "py");
  CHECK(Q.mul(px, x) == Scalar::q(2) * Q.mul(x, px));
  CHECK(Q.mul(px, y) == Scalar::q() * Q.mul(y, px) + (Scalar::q(2) - Scalar(1)) * Q.mul(x, py));
  CHECK(Q.mul(py, x) == Scalar::q() * Q.mul(x, py));
  CHECK(Q.mul(py, y) == Scalar::q(2) * Q.mul(y, py));
  CHECK(Q.mul(px, py) == Scalar::q() * Q.mul(py, px));
  CHECK(Q.power(py, 3) == Element::unit());
}

TEST_CASE("level-1 relations hold as printed") {
  const Presentation& O = cat.OmegaQ();
  Element x = gen(O, "x"), y = gen(O, "y"), px = gen(O, "px"), py = gen(O, "py");
  Element dx = gen(O, "dx"), dy = gen(O, "dy"), dpx = gen(O, "dpx"), dpy = gen(O, "dpy");
  Scalar q = Scalar::q(), q2 = Scalar::q(2), one(1);

  CHECK(O.mul(x, dx) == q2 * O.mul(dx, x));
  CHECK(O.mul(x, dy) == q * O.mul(dy, x) + (q2 - one) * O.mul(dx, y));
  CHECK(O.mul(y, dx) == q * O.mul(dx, y));
  CHECK(O.mul(y, dy) == q2 * O.mul(dy, y));
  CHECK(O.mul(x, dpx) == q * O.mul(dpx, x));
  CHECK(O.mul(y, dpx) == q2 * O.mul(dpx, y) + (q - one) * O.mul(dpy, x));
  CHECK(O.mul(x, dpy) == q2 * O.mul(dpy, x));
  CHECK(O.mul(y, dpy) == q * O.mul(dpy, y));
  CHECK(O.mul(px, dpx) == q2 * O.mul(dpx, px));
  CHECK(O.mul(px, dpy) == q * O.mul(dpy, px) + (q2 - one) * O.mul(dpx, py));
  CHECK(O.mul(py, dpx) == q * O.mul(dpx, py));
  CHECK(O.mul(py, dpy) == q2 * O.mul(dpy, py));

  // the mixed relation quoted with functions on the left:
  // dy px = q^2 px dy + (q - 1) py dx
  CHECK(O.mul(dy, px) == q2 * O.mul(px, dy) + (q - one) * O.mul(py, dx));
}

TEST_CASE("level-2 relations and Manin duals") {
  const Presentation& O = cat.OmegaQ();
  Element dx = gen(O, "dx"), dy = gen(O, "dy"), dpx = gen(O, "dpx"), dpy = gen(O, "dpy");
  Scalar q = Scalar::q(), q2 = Scalar::q(2);

  for (Element d : {dx, dy, dpx, dpy}) CHECK(O.mul(d, d).is_zero());
  // Manin dual of the plane on {dx, dy}: dx dy = -q^2 dy dx
  CHECK(O.mul(dx, dy) == -q2 * O.mul(dy, dx));
  // and on {dpx, dpy}
  CHECK(O.mul(dpx, dpy) == -q2 * O.mul(dpy, dpx));
  // cross level-2 relations
  CHECK(O.mul(dpx, dx) == -q2 * O.mul(dx, dpx));
  CHECK(O.mul(dpx, dy) == -q * O.mul(dy, dpx) + (Scalar(1) - q2) * O.mul(dx, dpy));
  CHECK(O.mul(dpy, dx) == -q * O.mul(dx, dpy));
  CHECK(O.mul(dpy, dy) == -q2 * O.mul(dy, dpy));

  // the same relations inside OmegaM
  const Presentation& OM = cat.OmegaM();
  Element mdx = gen(OM, "dx"), mdy = gen(OM, "dy");
  CHECK(OM.mul(mdx, mdy) == -q2 * OM.mul(mdy, mdx));
  CHECK(OM.mul(mdx, mdx).is_zero());
}

TEST_CASE("quantum group relations") {
  const Presentation& F = cat.F();
  Element a = gen(F, "a"), b = gen(F, "b"), c = gen(F, "c");
  Scalar q = Scalar::q();

  CHECK(F.mul(a, b) == q * F.mul(b, a));
  CHECK(F.mul(a, c) == q * F.mul(c, a));
  CHECK(F.mul(b, c) == F.mul(c, b));
  CHECK(F.power(a, 3) == Element::unit());
  CHECK(F.power(b, 3).is_zero());
  CHECK(F.power(c, 3).is_zero());

  // the eliminated generator: a d = d a + lambda b c, a d = 1 + q b c scaled...
  const Element& d = cat.d_elem();
  // determinant: a*d - q * b*c = 1 (d was solved from this with a^3 = 1)
  CHECK(F.mul(a, d) - q * F.mul(b, c) == Element::unit());
  // d^3 = 1
  CHECK(F.power(d, 3) == Element::unit());
  // b d = q d b, c d = q d c, a d = d a + (q - q^2) b c
  CHECK(F.mul(b, d) == q * F.mul(d, b));
  CHECK(F.mul(c, d) == q * F.mul(d, c));
  CHECK(F.mul(d, a) == F.mul(a, d) - (q - Scalar::q(2)) * F.mul(b, c));
}

TEST_CASE("smash product cross relations") {
  const Presentation& S = cat.MF();
  Element x = gen(S, "x"), y = gen(S, "y");
  Element a = gen(S, "a"), b = gen(S, "b"), c = gen(S, "c");
  Scalar q = Scalar::q(), q2 = Scalar::q(2), one(1);

  CHECK(S.mul(a, x) == q2 * S.mul(x, a));
  CHECK(S.mul(c, x) == q * S.mul(x, c));
  CHECK(S.mul(b, x) == q2 * S.mul(x, b));
  CHECK(S.mul(a, y) == q * S.mul(y, a) + (q2 - one) * S.mul(x, c));
  CHECK(S.mul(c, y) == q2 * S.mul(y, c));
  // b y = q y b + (q^2 - 1) x d  with d the eliminated generator
  CHECK(S.mul(b, y) == q * S.mul(y, b) + (q2 - one) * S.mul(x, cat.d_elem_MF()));
  // the F and M subalgebras sit inside unchanged
  CHECK(S.mul(b, a) == q2 * S.mul(a, b));
  CHECK(S.mul(y, x) == q2 * S.mul(x, y));
}

TEST_CASE("catalog lookup by name") {
  CHECK(cat.by_name("M") == &cat.M());
  CHECK(cat.by_name("OmegaQ") == &cat.OmegaQ());
  CHECK(cat.by_name("MF") == &cat.MF());
  CHECK(cat.by_name("nope") == nullptr);
}
