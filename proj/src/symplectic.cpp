#include "qps/symplectic.hpp"

#include <map>
#include <stdexcept>

namespace qps {

SMat SMat::identity(int dim) {
  SMat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
  return m;
}

SMat SMat::mul(const SMat& o) const {
  SMat out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const Scalar& v = at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        const Scalar& w = o.at(k, c);
        if (!w.is_zero()) out.at(r, c) += v * w;
      }
    }
  return out;
}

SMat SMat::add(const SMat& o, const Scalar& c) const {
  SMat out(n);
  for (int i = 0; i < n * n; ++i) out.a[i] = a[i] + c * o.a[i];
  return out;
}

SMat SMat::scaled(const Scalar& c) const {
  SMat out(n);
  for (int i = 0; i < n * n; ++i) out.a[i] = c * a[i];
  return out;
}

bool SMat::is_zero() const {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

namespace {

// exact Gauss-Jordan inverse; empty result when singular
SMat invert(const SMat& m) {
  int n = m.n;
  SMat a = m, inv = SMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return SMat();
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a.a[piv * n + c], a.a[col * n + c]);
        std::swap(inv.a[piv * n + c], inv.a[col * n + c]);
      }
    Scalar f = a.at(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      a.at(col, c) *= f;
      inv.at(col, c) *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Scalar g = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= g * a.at(col, c);
        inv.at(r, c) -= g * inv.at(col, c);
      }
    }
  }
  return inv;
}

int pair_idx(int i, int j, int N) { return (i - 1) * N + (j - 1); }

}  // namespace

bool yang_baxter_holds(const SMat& R, int N) {
  // act with R on two chosen legs of C^N (x) C^N (x) C^N
  using Vec = std::map<std::array<int, 3>, Scalar>;
  auto apply_leg = [&](int l1, int l2, const Vec& v) {
    Vec out;
    for (const auto& [idx, c] : v) {
      int i = idx[l1], j = idx[l2];
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          const Scalar& co = R.at(pair_idx(k, l, N), pair_idx(i, j, N));
          if (co.is_zero()) continue;
          std::array<int, 3> ni = idx;
          ni[l1] = k;
          ni[l2] = l;
          auto it = out.find(ni);
          if (it == out.end())
            out.emplace(ni, c * co);
          else {
            it->second += c * co;
            if (it->second.is_zero()) out.erase(it);
          }
        }
    }
    return out;
  };
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int c = 1; c <= N; ++c) {
        Vec v{{{a, b, c}, Scalar(1)}};
        Vec lhs = apply_leg(0, 1, apply_leg(0, 2, apply_leg(1, 2, v)));
        Vec rhs = apply_leg(1, 2, apply_leg(0, 2, apply_leg(0, 1, v)));
        if (lhs != rhs) return false;
      }
  return true;
}

Symplectic::Symplectic() : cat_(SpaceCatalog::instance()), cal_(Calculus::instance()) {
  const Scalar q = Scalar::q(), q2 = Scalar::q(2);
  const Scalar lam = q - q2;  // q - q^-1

  // --- SL_q(2) R-matrix ------------------------------------------------------
  r_sl2_ = SMat(4);
  r_sl2_.at(pair_idx(1, 1, 2), pair_idx(1, 1, 2)) = q;
  r_sl2_.at(pair_idx(2, 2, 2), pair_idx(2, 2, 2)) = q;
  r_sl2_.at(pair_idx(1, 2, 2), pair_idx(1, 2, 2)) = Scalar(1);
  r_sl2_.at(pair_idx(2, 1, 2), pair_idx(2, 1, 2)) = Scalar(1);
  r_sl2_.at(pair_idx(1, 2, 2), pair_idx(2, 1, 2)) = lam;
  rhat_sl2_ = SMat(4);
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l)
      for (int c = 0; c < 4; ++c)
        rhat_sl2_.at(pair_idx(k, l, 2), c) = r_sl2_.at(pair_idx(l, k, 2), c);

  // --- Sp_q(2) R-matrix (C-series, N = 4) ------------------------------------
  // conjugate index i' = 5-i, signs eps = (1,1,-1,-1), exponents
  // rho = (2,1,-1,-2); the extra diagonal band couples (j,j') to (i,i')
  auto conj = [](int i) { return 5 - i; };
  const int eps[5] = {0, 1, 1, -1, -1};
  const int rho[5] = {0, 2, 1, -1, -2};
  r_sp_ = SMat(16);
  for (int i = 1; i <= 4; ++i) r_sp_.at(pair_idx(i, i, 4), pair_idx(i, i, 4)) += q;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j && j != conj(i)) r_sp_.at(pair_idx(i, j, 4), pair_idx(i, j, 4)) += Scalar(1);
  for (int i = 1; i <= 4; ++i)
    r_sp_.at(pair_idx(i, conj(i), 4), pair_idx(i, conj(i), 4)) += q2;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j < i; ++j) {
      r_sp_.at(pair_idx(i, j, 4), pair_idx(j, i, 4)) += lam;
      Scalar band = -(lam * Scalar::q(rho[i] - rho[j]) * Scalar(eps[i] * eps[j]));
      r_sp_.at(pair_idx(i, conj(i), 4), pair_idx(j, conj(j), 4)) += band;
    }
  rhat_sp_ = SMat(16);
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l)
      for (int c = 0; c < 16; ++c)
        rhat_sp_.at(pair_idx(k, l, 4), c) = r_sp_.at(pair_idx(l, k, 4), c);

  // --- spectral projectors ---------------------------------------------------
  SMat id16 = SMat::identity(16);
  SMat r2 = rhat_sp_.mul(rhat_sp_);
  a_sp_ = r2.add(id16, -q2).scaled(lam.inverse());  // (R^2 - q^2)/(q - q^-1)
  s_sp_ = r2.add(rhat_sp_, Scalar(-1)).add(id16).scaled(-(q2 / Scalar(2)));

  // --- symplectic form -------------------------------------------------------
  const Presentation& O = cat_.OmegaQ();
  int dx = O.index_of("dx"), dy = O.index_of("dy");
  int dpx = O.index_of("dpx"), dpy = O.index_of("dpy");
  omega_ = q * (O.mul(O.gen_element(dx), O.gen_element(dpx)) +
                O.mul(O.gen_element(dy), O.gen_element(dpy)));
  for (auto& row : w_) row.fill(Scalar(0));
  w_[3 - 1][1 - 1] = q;   // q xi_3 xi_1 = q dx dpx
  w_[4 - 1][2 - 1] = -q;  // -q xi_4 xi_2 = q dy dpy

  // --- calibrate the A-contraction against the printed Hamiltonian fields ----
  auto expected = [&](int j) {
    // X_dx = q^2 d/dpx, X_dy = q^2 d/dpy, X_dpx = -q d/dx, X_dpy = -q d/dy
    std::array<Scalar, 4> c{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    if (j == 0) c[2] = q2;
    if (j == 1) c[3] = q2;
    if (j == 2) c[0] = -q;
    if (j == 3) c[1] = -q;
    return c;
  };
  int matches = 0;
  for (bool t : {false, true}) {
    SMat K = k_for(t);
    bool ok = true;
    SMat Kinv = invert(K);
    if (Kinv.n == 0) ok = false;
    for (int j = 0; j < 4 && ok; ++j) {
      auto want = expected(j);
      for (int b = 0; b < 4; ++b)
        if (Kinv.at(j, b) != want[b]) ok = false;
    }
    if (ok && (matches == 0 || K == K_)) {
      ++matches;
      if (matches == 1) {
        transposed_ = t;
        K_ = std::move(K);
        K_inv_ = std::move(Kinv);
      }
    } else if (ok) {
      throw std::logic_error(
          "symplectic calibration: both contraction orientations match with distinct K");
    }
  }
  if (matches == 0)
    throw std::logic_error(
        "symplectic calibration: no contraction orientation reproduces the Hamiltonian fields");
}

const Symplectic& Symplectic::instance() {
  static Symplectic s;
  return s;
}

namespace {
// xi_k = s_k dz_{m_k}: component slot (x,y,px,py order) and sign per xi index
constexpr int kXiComp[5] = {0, 2, 3, 0, 1};
const int kXiSign[5] = {0, 1, 1, 1, -1};
}  // namespace

Element Symplectic::x_vec(int i) const {
  const Presentation& Q = cat_.Q();
  switch (i) {
    case 1: return Q.gen_element(Q.index_of("x"));
    case 2: return Q.gen_element(Q.index_of("y"));
    case 3: return Q.gen_element(Q.index_of("px"));
    case 4: return -Q.gen_element(Q.index_of("py"));
  }
  throw std::out_of_range("x_vec");
}

Element Symplectic::xi_vec(int i) const {
  const Presentation& O = cat_.OmegaQ();
  switch (i) {
    case 1: return O.gen_element(O.index_of("dpx"));
    case 2: return O.gen_element(O.index_of("dpy"));
    case 3: return O.gen_element(O.index_of("dx"));
    case 4: return -O.gen_element(O.index_of("dy"));
  }
  throw std::out_of_range("xi_vec");
}

SMat Symplectic::k_for(bool transposed) const {
  // T_kl = w_ij A_{ij,kl}; K over component slots with the xi signs folded in
  SMat K(4);
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      Scalar t(0);
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
          const Scalar& wij = w_[i - 1][j - 1];
          if (wij.is_zero()) continue;
          t += wij * (transposed ? a_sp_.at(pair_idx(k, l, 4), pair_idx(i, j, 4))
                                 : a_sp_.at(pair_idx(i, j, 4), pair_idx(k, l, 4)));
        }
      K.at(kXiComp[k], kXiComp[l]) += Scalar(kXiSign[k] * kXiSign[l]) * t;
    }
  return K;
}

Element Symplectic::eval_omega(const VectorField& x, const VectorField& y) const {
  return eval_omega(x, y, w_);
}

Element Symplectic::eval_omega(const VectorField& x, const VectorField& y,
                               const std::array<std::array<Scalar, 4>, 4>& w) const {
  const Presentation& Q = cat_.Q();
  Element out;
  for (int k = 1; k <= 4; ++k) {
    Element xk = Scalar(kXiSign[k]) * x.f[kXiComp[k]];  // <xi_k, X>
    if (xk.is_zero()) continue;
    for (int l = 1; l <= 4; ++l) {
      Element yl = Scalar(kXiSign[l]) * y.f[kXiComp[l]];  // <xi_l, Y>
      if (yl.is_zero()) continue;
      Scalar c(0);
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
          const Scalar& wij = w[i - 1][j - 1];
          if (wij.is_zero()) continue;
          c += wij * (transposed_ ? a_sp_.at(pair_idx(k, l, 4), pair_idx(i, j, 4))
                                  : a_sp_.at(pair_idx(i, j, 4), pair_idx(k, l, 4)));
        }
      // the Y coefficient multiplies from the left: with c(X) K = df this
      // makes omega(X_f, X_g) literally equal <df, X_g> term by term
      if (!c.is_zero()) out.add(Q.mul(yl, xk), c);
    }
  }
  return out;
}

VectorField Symplectic::hamiltonian_vf(const Element& f) const {
  if (K_inv_.n == 0) throw std::logic_error("hamiltonian_vf: degenerate form");
  OneForm df = cal_.d_oneform(f);
  VectorField out;
  // solve c K = g componentwise: c_a = sum_b g_b (K^-1)_{ba}
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out.f[a].add(df.g[b], K_inv_.at(b, a));
  return out;
}

Element Symplectic::poisson(const Element& f, const Element& g) const {
  VectorField xf = hamiltonian_vf(f);
  VectorField xg = hamiltonian_vf(g);
  Element via_omega = eval_omega(xf, xg);
  Element via_pair = cal_.pair(cal_.d_oneform(f), xg);
  Element via_field = cal_.apply(xg, f);
  if (via_omega != via_pair || via_pair != via_field)
    throw std::logic_error("poisson: the three defining expressions disagree");
  return via_omega;
}

Element Symplectic::time_derivative(const Element& f, const Element& h) const {
  return poisson(f, h);
}

}  // namespace qps
