#pragma once

#include <array>
#include <vector>

#include "qps/calculus.hpp"

namespace qps {

/// Dense exact matrix, used for R-matrices (as operators on C^N (x) C^N,
/// dimension N^2) and for small solver systems.
struct SMat {
  int n = 0;
  std::vector<Scalar> a;  // row-major: a[r * n + c]

  SMat() = default;
  explicit SMat(int dim) : n(dim), a(dim * dim) {}
  Scalar& at(int r, int c) { return a[r * n + c]; }
  const Scalar& at(int r, int c) const { return a[r * n + c]; }

  static SMat identity(int dim);
  SMat mul(const SMat& o) const;
  SMat add(const SMat& o, const Scalar& c = Scalar(1)) const;
  SMat scaled(const Scalar& c) const;
  bool is_zero() const;
  bool operator==(const SMat& o) const { return n == o.n && a == o.a; }
};

/// Quantum Yang-Baxter check R12 R13 R23 = R23 R13 R12 for an operator on
/// C^N (x) C^N given as an N^2 x N^2 matrix (row = output pair index).
bool yang_baxter_holds(const SMat& R, int N);

/// R-matrices, spectral projectors, the symplectic form on the quantum phase
/// space, Hamiltonian vector fields, and Poisson brackets.
class Symplectic {
 public:
  static const Symplectic& instance();

  // --- R-matrices ------------------------------------------------------------
  const SMat& r_sl2() const { return r_sl2_; }       // 4x4
  const SMat& rhat_sl2() const { return rhat_sl2_; }
  const SMat& r_sp() const { return r_sp_; }         // 16x16
  const SMat& rhat_sp() const { return rhat_sp_; }

  /// A_Sp = (Rhat^2 - q^2) / (q - q^-1), idempotent at q^3 = 1.
  const SMat& antisymmetrizer() const { return a_sp_; }
  /// S_Sp = -(q^2/2)(Rhat^2 - Rhat + 1), idempotent at q^3 = 1.
  const SMat& symmetrizer() const { return s_sp_; }

  // --- phase-space identification -------------------------------------------
  /// x_1..x_4 = x, y, px, -py as Q elements (1-based index).
  Element x_vec(int i) const;
  /// xi_1..xi_4 = dpx, dpy, dx, -dy as OmegaQ elements (1-based index).
  Element xi_vec(int i) const;

  // --- symplectic structure --------------------------------------------------
  /// omega = q (dx dpx + dy dpy) as a grade-2 element.
  const Element& omega() const { return omega_; }
  /// Constant coefficients of omega over the xi basis (1-based).
  Scalar w(int i, int j) const { return w_[i - 1][j - 1]; }

  /// omega(X, Y) = w_ij A_{ij,kl} <xi_k, X> <xi_l, Y>, with an optional
  /// replacement for the w coefficient matrix.
  Element eval_omega(const VectorField& x, const VectorField& y) const;
  Element eval_omega(const VectorField& x, const VectorField& y,
                     const std::array<std::array<Scalar, 4>, 4>& w) const;

  /// Unique X with omega(X, .) = <df, .>; throws if the system is singular.
  VectorField hamiltonian_vf(const Element& f) const;

  /// {f, g} = omega(X_df, X_dg) = <df, X_dg> = X_dg(f); all three are
  /// computed and must agree.
  Element poisson(const Element& f, const Element& g) const;

  /// dt f = {f, h} for the Hamiltonian h.
  Element time_derivative(const Element& f, const Element& h) const;

  /// The constant 4x4 evaluation matrix K with omega(X, Y) = c(X) K c(Y)
  /// on component vectors (x, y, px, py); full rank certifies nondegeneracy.
  const SMat& k_matrix() const { return K_; }
  /// Whether the calibration picked the transposed A-contraction.
  bool transposed_contraction() const { return transposed_; }

 private:
  Symplectic();
  SMat k_for(bool transposed) const;

  const SpaceCatalog& cat_;
  const Calculus& cal_;
  SMat r_sl2_, rhat_sl2_, r_sp_, rhat_sp_, a_sp_, s_sp_;
  Element omega_;
  std::array<std::array<Scalar, 4>, 4> w_;
  SMat K_, K_inv_;
  bool transposed_ = false;
};

}  // namespace qps
