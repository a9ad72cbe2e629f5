#pragma once

#include <unordered_map>
#include <vector>

#include "qps/linalg.hpp"
#include "qps/spaces.hpp"

namespace qps {

/// Hopf structure of the finite quantum group F (generators a, b, c with the
/// fourth generator d eliminated), its coquasitriangular r-form, the action
/// and coactions on the plane/phase-space algebras, the smash-product
/// coaction, the Galois map, and the cotensor subalgebra of MF (x) M.
class HopfStructure {
 public:
  static const HopfStructure& instance();

  // --- Hopf algebra maps on F ----------------------------------------------
  TensorElement coproduct(const Element& f) const;  // F -> F (x) F
  Scalar counit(const Element& f) const;
  Element antipode(const Element& f) const;

  /// Universal r-form on F (x) F, extended from the generator table by the
  /// pairing laws r(fg,h) = r(f,h1) r(g,h2) and r(f,gh) = r(f1,h) r(f2,g).
  Scalar rform(const Element& f, const Element& h) const;

  // --- action of F ----------------------------------------------------------
  /// Left action of h on m, extended by the module-algebra law; target is
  /// one of M, Q, OmegaM, OmegaQ (differentials transform like their bases).
  Element act(const Element& h, const Element& m, const Presentation& target) const;

  /// Same action on M recovered from the r-form: h |> m = r(m_{-1}, h) m_0.
  Element act_from_rform(const Element& h, const Element& m) const;

  // --- coactions ------------------------------------------------------------
  /// Left coaction delta_L: target -> F (x) target, an algebra morphism with
  /// x -> a(x)x + b(x)y and momenta/differentials transforming alike.
  TensorElement coact(const Element& e, const Presentation& target) const;

  /// Right coaction of F on the smash product MF: p -> p_0 (x) p_1.
  TensorElement smash_coaction(const Element& e) const;

  /// Basis of the delta_R coinvariants of MF (expected: M # 1, dim 9).
  std::vector<Element> coinvariants_MF() const;

  // --- Galois / cotensor structure ------------------------------------------
  /// Box product on M (x) M: (a [] v)(b [] w) = a (v_{-1} |> b) [] v_0 w.
  TensorElement box_mul(const TensorElement& t1, const TensorElement& t2) const;

  /// beta(p (x) p') = p p'_0 (x) p'_1 : MF (x) MF -> MF (x) F.
  TensorElement galois_beta(const TensorElement& t) const;

  /// Basis of the cotensor subspace of MF (x) M (dimension must match Q).
  const std::vector<TensorElement>& cotensor_basis() const;
  bool in_cotensor(const TensorElement& t) const;

  /// Embedding of Q into MF (x) M: x -> (x#1)(x)1, p_x -> (1#a)(x)x + (1#b)(x)y,
  /// extended as an algebra morphism. Lands inside the cotensor subalgebra.
  TensorElement psi(const Element& e) const;

  // --- abstract generator helpers (a=0, b=1, c=2, d=3) ----------------------
  /// Action of a single abstract quantum-group generator on a target monomial.
  Element act_generator(int abstract_gen, Monomial m, const Presentation& target) const;
  /// d as an element of F.
  const Element& d() const;

 private:
  HopfStructure();

  const SpaceCatalog& cat_;
  const Presentation& F_;

  // one-term-per-pair abstract coproducts of a, b, c, d
  std::vector<std::vector<std::pair<int, int>>> delta_abs_;
  std::vector<Scalar> counit_abs_;

  // concrete maps on the F generators
  std::vector<TensorElement> delta_gen_;  // index by F generator
  std::vector<Element> antipode_gen_;

  Scalar rform_mono(Monomial f, Monomial h, int depth) const;
  Scalar rform_abs(int g, Monomial h) const;
  Element act_abs(int g, Monomial m, const Presentation& target) const;
  const TensorElement& coact_mono(Monomial m, const Presentation& target) const;
  const TensorElement& smash_coact_mono(Monomial m) const;
  const TensorElement& coproduct_mono(Monomial m) const;

  // memo tables
  mutable std::unordered_map<uint64_t, TensorElement> coproduct_cache_;
  mutable std::map<SparseKey, Scalar> rform_cache_;
  mutable std::map<SparseKey, Scalar> rform_abs_cache_;
  mutable std::map<std::tuple<const Presentation*, int, uint64_t>, Element> act_cache_;
  mutable std::map<std::pair<const Presentation*, uint64_t>, TensorElement> coact_cache_;
  mutable std::unordered_map<uint64_t, TensorElement> smash_coact_cache_;
  mutable std::vector<TensorElement> cotensor_cache_;
  mutable RowReducer cotensor_span_;
};

/// Packs a triple-tensor term into a SparseVec key: leg1 in .first, legs 2+3
/// packed into .second (top/bottom halves). Legs must use at most 4 of the
/// 8 exponent bytes, which holds for every algebra shipped here except
/// OmegaQ (not used in triple tensors).
inline SparseKey triple_key(uint64_t l1, uint64_t l2, uint64_t l3) {
  return {l1, l2 | (l3 >> 32)};
}

}  // namespace qps
