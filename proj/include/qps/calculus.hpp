#pragma once

#include <array>

#include "qps/spaces.hpp"

namespace qps {

/// A 1-form in its unique differential-left expansion sum_i dz_i g_i with
/// coefficients g_i in Q; index order x, y, px, py.
struct OneForm {
  std::array<Element, 4> g;
};

/// X = sum_i f_i d/dz_i with left Q-coefficients; index order x, y, px, py.
struct VectorField {
  std::array<Element, 4> f;

  VectorField operator+(const VectorField& o) const {
    VectorField out;
    for (int i = 0; i < 4; ++i) out.f[i] = f[i] + o.f[i];
    return out;
  }
  friend VectorField operator*(const Scalar& c, const VectorField& x) {
    VectorField out;
    for (int i = 0; i < 4; ++i) out.f[i] = c * x.f[i];
    return out;
  }
  bool operator==(const VectorField& o) const { return f == o.f; }
};

/// The graded differential on the function and form algebras, twisted partial
/// derivatives, and the 1-form / vector-field pairing.
class Calculus {
 public:
  static const Calculus& instance();

  /// D e, graded Leibniz with D z = dz and D dz = 0. The presentation must
  /// be one of the differential algebras (default OmegaQ).
  Element d(const Element& e) const;
  Element d(const Element& e, const Presentation& omega) const;

  /// Q element viewed inside OmegaQ (grade 0) and back.
  Element to_omega(const Element& q_elem) const;
  Element to_q(const Element& omega_elem) const;

  /// Unique expansion of a grade-1 element as sum_i dz_i g_i.
  OneForm left_expand(const Element& form) const;
  /// sum_i dz_i g_i as an OmegaQ element (inverse of left_expand).
  Element reassemble(const OneForm& w) const;

  /// df expressed as a OneForm, f in Q.
  OneForm d_oneform(const Element& f) const;

  /// Twisted partial derivative: the dz_i coefficient of d f; f in Q.
  Element partial(int i, const Element& f) const;

  /// X(f) = sum_i f_i partial_i(f).
  Element apply(const VectorField& x, const Element& f) const;

  /// <sum_i dz_i g_i, X> = sum_i X(z_i) g_i = sum_i f_i g_i.
  Element pair(const OneForm& w, const VectorField& x) const;

 private:
  Calculus();
  const SpaceCatalog& cat_;
  const Presentation& O_;
  const Presentation& Q_;
};

}  // namespace qps
