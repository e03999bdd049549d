// lorentz.hpp - finite Lorentz transformations acting on the 10-component
// state vector, generated by sigma_{mu nu} = [b_mu, b_nu].
//
// Conventions (fixed once by matching the classical transformation laws and
// used everywhere):
//   rotation(n, theta) = exp( theta (n1 s_23 + n2 s_31 + n3 s_12) )
//     right-handed rotation of E, H and A about n; A0 untouched.
//   boost(n, chi)      = exp( -chi (n1 s_01 + n2 s_02 + n3 s_03) )
//     components seen by an observer moving with velocity c tanh(chi) n.
// Both exponents are real matrices in the standard representation, so real
// field configurations stay real under the action.

#pragma once

#include "kdp/algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace kdp {

enum class LorentzKind { rotation, boost, general };

/// A finite group element: the antisymmetric parameter array theta^{mu nu}
/// together with exp(sum_{mu<nu} theta^{mu nu} sigma_{mu nu}).
struct LorentzElement {
  Eigen::Matrix4d params = Eigen::Matrix4d::Zero();
  Mat10 matrix = Mat10::Identity();
  LorentzKind kind = LorentzKind::general;
};

namespace detail {

inline void require_unit(const Eigen::Vector3d& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument(std::string(what) +
                                " must be a unit 3-vector");
  }
}

inline LorentzElement exponentiate(const BetaRep& rep,
                                   const Eigen::Matrix4d& params,
                                   LorentzKind kind) {
  Mat10 gen = Mat10::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      if (params(mu, nu) != 0.0) gen += params(mu, nu) * sigma(rep, mu, nu);
    }
  }
  LorentzElement e;
  e.params = params;
  e.matrix = gen.exp();
  e.kind = kind;
  return e;
}

}  // namespace detail

/// Rotation by `angle` (radians) about the unit `axis`.
inline LorentzElement rotation(const BetaRep& rep, const Eigen::Vector3d& axis,
                               double angle) {
  detail::require_unit(axis, "rotation axis");
  Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
  p(2, 3) = angle * axis(0);   // s_23 generates x-rotations
  p(1, 3) = -angle * axis(1);  // s_31 = -s_13 generates y-rotations
  p(1, 2) = angle * axis(2);   // s_12 generates z-rotations
  p -= Eigen::Matrix4d(p.transpose()).eval();
  return detail::exponentiate(rep, p, LorentzKind::rotation);
}

/// Boost with rapidity `chi` along the unit `direction`.
inline LorentzElement boost(const BetaRep& rep,
                            const Eigen::Vector3d& direction, double chi) {
  detail::require_unit(direction, "boost direction");
  Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 3; ++i) p(0, i + 1) = -chi * direction(i);
  p -= Eigen::Matrix4d(p.transpose()).eval();
  return detail::exponentiate(rep, p, LorentzKind::boost);
}

/// Apply the element to a state vector (a point transformation of the field
/// values; grid coordinates are not remapped).
inline Vec10 apply(const LorentzElement& elem, const Vec10& psi) {
  return elem.matrix * psi;
}

}  // namespace kdp
