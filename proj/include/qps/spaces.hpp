#pragma once

#include "qps/algebra.hpp"

namespace qps {

/// The six shipped algebras. All share q a primitive cube root of unity.
///   M      reduced quantum plane: x y = q y x, x^3 = y^3 = 1 (dim 9)
///   Q      phase space on x, y, px, py (dim 81)
///   OmegaM differential algebra over M (dim 9*4)
///   OmegaQ differential algebra over Q, differentials on the left (dim 81*16)
///   F      function quantum group on a, b, c with d eliminated (dim 27)
///   MF     smash product of M and F (dim 243)
class SpaceCatalog {
 public:
  static const SpaceCatalog& instance();

  const Presentation& M() const { return M_; }
  const Presentation& Q() const { return Q_; }
  const Presentation& OmegaM() const { return OmegaM_; }
  const Presentation& OmegaQ() const { return OmegaQ_; }
  const Presentation& F() const { return F_; }
  const Presentation& MF() const { return MF_; }

  /// Lookup by CLI name (M, Q, OmegaM, OmegaQ, F, MF); nullptr when unknown.
  const Presentation* by_name(const std::string& name) const;

  /// The eliminated fourth quantum-group generator, as an element of F:
  /// d = a^2 + q a^2 b c (from the determinant relation with a^3 = 1).
  const Element& d_elem() const { return d_elem_; }
  /// Same element inside the smash product MF.
  const Element& d_elem_MF() const { return d_elem_MF_; }

 private:
  SpaceCatalog();
  Presentation M_, Q_, OmegaM_, OmegaQ_, F_, MF_;
  Element d_elem_, d_elem_MF_;
};

}  // namespace qps
