// fields.hpp - conversions between physical electromagnetic fields and the
// 10-component state vector, plus the local observables computed from it.
//
// Packing convention (component order fixed by algebra.hpp):
//
//   psi = (1/sqrt2) (-Ex,-Ey,-Ez, Hx,Hy,Hz, -Ax/l0,-Ay/l0,-Az/l0, A0/l0)
//
// l0 is a reference length that cancels out of every physical quantity; it
// defaults to 1 and is exposed only so tests can demonstrate that.

#pragma once

#include "kdp/algebra.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace kdp {

using FieldVector = Vec10;
using Vec3c = Eigen::Vector3cd;

/// Physical-space field tuple. Components are complex so that superpositions
/// with complex coefficients survive an unpack; physically real
/// configurations have zero imaginary parts throughout.
struct EMFields {
  Vec3c E = Vec3c::Zero();
  Vec3c H = Vec3c::Zero();
  Vec3c A = Vec3c::Zero();
  Complex A0 = 0.0;

  static EMFields real(const Eigen::Vector3d& E, const Eigen::Vector3d& H,
                       const Eigen::Vector3d& A = Eigen::Vector3d::Zero(),
                       double A0 = 0.0) {
    EMFields f;
    f.E = E.cast<Complex>();
    f.H = H.cast<Complex>();
    f.A = A.cast<Complex>();
    f.A0 = A0;
    return f;
  }
};

/// True when every component of f is real to within tol.
inline bool is_real(const EMFields& f, double tol = 0.0) {
  return f.E.imag().cwiseAbs().maxCoeff() <= tol &&
         f.H.imag().cwiseAbs().maxCoeff() <= tol &&
         f.A.imag().cwiseAbs().maxCoeff() <= tol &&
         std::abs(f.A0.imag()) <= tol;
}

inline FieldVector pack(const EMFields& f, double l0 = 1.0) {
  constexpr double s = 0.70710678118654752440;  // 1/sqrt(2)
  FieldVector psi;
  for (int j = 0; j < 3; ++j) {
    psi(j) = -f.E(j) * s;
    psi(3 + j) = f.H(j) * s;
    psi(6 + j) = -f.A(j) * (s / l0);
  }
  psi(9) = f.A0 * (s / l0);
  return psi;
}

inline EMFields unpack(const FieldVector& psi, double l0 = 1.0) {
  constexpr double s = 0.70710678118654752440;
  EMFields f;
  for (int j = 0; j < 3; ++j) {
    f.E(j) = -psi(j) / s;
    f.H(j) = psi(3 + j) / s;
    f.A(j) = -psi(6 + j) * (l0 / s);
  }
  f.A0 = psi(9) * (l0 / s);
  return f;
}

/// gamma psi: zeroes the potential components, keeps the six field ones.
inline FieldVector project_gamma(const FieldVector& psi) {
  FieldVector out = psi;
  out.tail<4>().setZero();
  return out;
}

/// |gamma psi|^2 = (E.E + H.H)/2 for real fields.
inline double energy_density(const FieldVector& psi) {
  double u = 0.0;
  for (int i = 0; i < kFieldDim; ++i) u += std::norm(psi(i));
  return u;
}

/// Local observable <Psi, Op Psi> over the field block (Psi = gamma psi).
/// The indefinite eta-weighted pairing and the eta factor carried by the
/// flux operators cancel (eta b~_i = b_0 b_i + b_i b_0, eta^2 = 1), so the
/// pairing reduces to this Hermitian form; the gamma-block identity yields
/// the energy density and c*beta_tilde the Poynting flux.
inline Complex expectation(const BetaRep& rep, const FieldVector& psi,
                           const Mat10& op) {
  const FieldVector proj = rep.gamma.cast<Complex>() * psi;
  return proj.dot(op * proj);  // Eigen's dot conjugates the left factor
}

/// Poynting vector S_i = c <Psi, b~_i Psi> = c (E x H)_i for real fields.
inline Eigen::Vector3d poynting(const BetaRep& rep, const FieldVector& psi,
                                double c = 1.0) {
  Eigen::Vector3d S;
  for (int i = 0; i < 3; ++i) {
    S(i) = c * expectation(rep, psi, rep.beta_tilde[i]).real();
  }
  return S;
}

/// Symmetric stress tensor
///   Theta_{mu nu} = -PsiBar (b_mu b_nu + b_nu b_mu - g_{mu nu}) Psi,
/// PsiBar = Psi^dagger eta. -Theta_{00} is the energy density and
/// Theta_{0i} = -(1/c) S_i (the flux rides in the anticommutator block).
inline Eigen::Matrix4d stress_tensor(const BetaRep& rep,
                                     const FieldVector& psi) {
  const FieldVector proj = project_gamma(psi);
  const Mat10 eta_c = rep.eta.cast<Complex>();
  Eigen::Matrix4d theta;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      Mat10 op = rep.beta[mu] * rep.beta[nu] + rep.beta[nu] * rep.beta[mu];
      if (mu == nu) op -= rep.metric[mu] * Mat10::Identity();
      // eta * op is Hermitian for every (mu,nu), so the sandwich is real.
      const Complex val = -proj.dot(eta_c * (op * proj));
      theta(mu, nu) = val.real();
      theta(nu, mu) = val.real();
    }
  }
  return theta;
}

/// Unitary map to the Riemann-Silberstein form: the field block becomes the
/// complex combinations built from E +- iH,
///   out_j     = (psi_j + i psi_{3+j}) / sqrt2  = (-E_j + i H_j)/2
///   out_{3+j} = (-psi_j + i psi_{3+j}) / sqrt2 = ( E_j + i H_j)/2
/// for real fields, and the potential components are dropped. Preserves the
/// gamma-block norm exactly.
inline Vec10 riemann_silberstein(const FieldVector& psi) {
  constexpr double s = 0.70710678118654752440;
  const Complex I(0.0, 1.0);
  Vec10 out = Vec10::Zero();
  for (int j = 0; j < 3; ++j) {
    out(j) = (psi(j) + I * psi(3 + j)) * s;
    out(3 + j) = (-psi(j) + I * psi(3 + j)) * s;
  }
  return out;
}

}  // namespace kdp
