// reference.hpp - independent oracles used by the test suites. Everything in
// here is deliberately written against plain 3-vector / 4-tensor physics and
// never touches the matrix representation it is used to check.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace kdptest {

using Eigen::Matrix3d;
using Eigen::Matrix4d;
using Eigen::Vector3d;
using Eigen::Vector4d;

// Seeds are fixed constants so that every property sweep is reproducible;
// each test names its seed via INFO/CAPTURE.
inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vector3d random_vec3(std::mt19937_64& rng, double scale = 1.0) {
  return Vector3d(uniform(rng, -scale, scale), uniform(rng, -scale, scale),
                  uniform(rng, -scale, scale));
}

inline Vector3d random_unit3(std::mt19937_64& rng) {
  while (true) {
    Vector3d v = random_vec3(rng);
    const double n = v.norm();
    if (n > 1e-3 && n < 1.0) return v / n;
  }
}

// Rodrigues rotation of v about unit axis n by angle theta (right-handed).
inline Vector3d rotate3(const Vector3d& v, const Vector3d& n, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return v * c + n.cross(v) * s + n * (n.dot(v)) * (1.0 - c);
}

// Standard boost matrix Lambda^mu_nu for the frame moving with velocity
// c*tanh(chi)*n relative to the old one (passive transformation):
//   x'^0 = cosh(chi) x^0 - sinh(chi) n.x, etc.
inline Matrix4d boost_matrix(const Vector3d& n, double chi) {
  const double ch = std::cosh(chi);
  const double sh = std::sinh(chi);
  Matrix4d L = Matrix4d::Identity();
  L(0, 0) = ch;
  for (int i = 0; i < 3; ++i) {
    L(0, i + 1) = -sh * n(i);
    L(i + 1, 0) = -sh * n(i);
    for (int j = 0; j < 3; ++j) {
      L(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n(i) * n(j);
    }
  }
  return L;
}

// Field-strength tensor with upper indices: F^{i0} = E_i, F^{ij} = -eps_ijk H_k.
inline Matrix4d field_tensor(const Vector3d& E, const Vector3d& H) {
  Matrix4d F = Matrix4d::Zero();
  for (int i = 0; i < 3; ++i) {
    F(i + 1, 0) = E(i);
    F(0, i + 1) = -E(i);
  }
  F(1, 2) = -H(2);
  F(2, 1) = H(2);
  F(2, 3) = -H(0);
  F(3, 2) = H(0);
  F(3, 1) = -H(1);
  F(1, 3) = H(1);
  return F;
}

inline void fields_from_tensor(const Matrix4d& F, Vector3d& E, Vector3d& H) {
  for (int i = 0; i < 3; ++i) E(i) = F(i + 1, 0);
  H(0) = F(3, 2);
  H(1) = F(1, 3);
  H(2) = F(2, 1);
}

// Transform (E,H) into the boosted frame via F' = L F L^T.
inline void boost_fields(const Vector3d& n, double chi, Vector3d& E,
                         Vector3d& H) {
  const Matrix4d L = boost_matrix(n, chi);
  const Matrix4d Fp = L * field_tensor(E, H) * L.transpose();
  fields_from_tensor(Fp, E, H);
}

// Transform the potential four-vector (A0, A) into the boosted frame.
inline void boost_potential(const Vector3d& n, double chi, double& A0,
                            Vector3d& A) {
  const Matrix4d L = boost_matrix(n, chi);
  Vector4d a(A0, A(0), A(1), A(2));
  a = L * a;
  A0 = a(0);
  A = a.tail<3>();
}

// Rank of the Gram matrix of a set of vectorized matrices; the brute-force
// cross-check for span dimensions.
inline int gram_rank(const std::vector<Eigen::MatrixXcd>& mats,
                     double rel_tol = 1e-9) {
  const std::size_t n = mats.size();
  Eigen::MatrixXcd G(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      G(i, j) = (mats[i].adjoint() * mats[j]).trace();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
  const auto& ev = es.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    // Gram eigenvalues scale as singular values squared.
    if (std::abs(ev(i)) > rel_tol * rel_tol * top) ++rank;
  }
  return rank;
}

}  // namespace kdptest
