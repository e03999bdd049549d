// algebra.hpp - 10x10 irreducible representation of the Kemmer-Duffin-Petiau
// algebra and the matrices derived from it.
//
// The KDP algebra is the trilinear relation
//
//     b_mu b_nu b_la + b_la b_nu b_mu = b_mu g_{nu la} + b_la g_{nu mu}
//
// with metric g = diag(+1,-1,-1,-1). Its 10-dimensional irreducible
// representation carries a spin-1 (electromagnetic) field: the state vector
// packs the six field-strength components and the four potential components,
//
//     psi = (1/sqrt2) (-Ex,-Ey,-Ez, Hx,Hy,Hz, -Ax/l0,-Ay/l0,-Az/l0, A0/l0),
//
// and the single first-order equation
//
//     (1/c) b_0 d_t psi + b_k d_k psi = (i/l0) gamma psi
//
// row-by-row reproduces, in this component order,
//
//     rows 0-2 :  E = -grad A0 - (1/c) d_t A      (potential evolution)
//     rows 3-5 :  H = curl A                       (constraint)
//     rows 6-8 :  curl H = (1/c) d_t E             (Ampere)
//     row  9   :  div E = 0                        (Gauss constraint)
//
// Faraday's law and the Lorenz gauge condition follow by differentiating the
// constraint rows. Matching those rows term-by-term forces every matrix entry
// to be 0 or +-i (see docs/representation.md for the derivation); all algebra
// identities below therefore hold *exactly* in double precision.
//
// Derived matrices:
//   gamma      : diagonal idempotent selecting the six field components
//   eta        : 2 b_0^2 - 1, the indefinite pairing used by observables
//   beta_tilde : b~_k = b_0 b_k - b_k b_0, the velocity/flux operators of the
//                first-order evolution equation

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kdp {

using Complex = std::complex<double>;
using Mat10 = Eigen::Matrix<Complex, 10, 10>;
using RMat10 = Eigen::Matrix<double, 10, 10>;
using Vec10 = Eigen::Matrix<Complex, 10, 1>;

/// Signature convention shared by the whole library.
inline constexpr std::array<double, 4> kMetricDiag{1.0, -1.0, -1.0, -1.0};

/// Number of field-strength components at the front of psi.
inline constexpr int kFieldDim = 6;

inline constexpr double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  // parity of the permutation (i,j,k) of (0,1,2)
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

/// The four beta matrices plus everything derived from them. Immutable after
/// construction; safe to share across threads.
struct BetaRep {
  std::array<Mat10, 4> beta;        // b_0, b_1, b_2, b_3
  RMat10 gamma;                     // field projector, diag(1x6, 0x4)
  RMat10 eta;                       // 2 b_0^2 - 1
  std::array<Mat10, 3> beta_tilde;  // b_0 b_k - b_k b_0
  std::array<double, 4> metric = kMetricDiag;
};

/// One named identity together with its Frobenius-norm violation.
struct AlgebraReport {
  double max_residual = 0.0;
  std::vector<std::pair<std::string, double>> identity_breakdown;
  int span_dimension = 0;
};

namespace detail {

inline void check_residual(double r, const char* what) {
  if (!(r == 0.0)) {
    throw std::logic_error(std::string("BetaRep construction failed: ") +
                           what + " has nonzero residual");
  }
}

}  // namespace detail

/// Linear-span dimension of all words in the beta matrices of length at most
/// `max_word_length`, including the identity. Rank counting treats singular
/// values below 1e-9 times the largest as zero.
inline int algebra_span_dimension(const BetaRep& rep, int max_word_length) {
  if (max_word_length < 1) {
    throw std::invalid_argument("max_word_length must be >= 1");
  }

  struct Word {
    Mat10 m;
    int length;
  };

  // Grow a spanning set level by level. A word is kept only when it adds a
  // new direction (Gram-Schmidt at a tolerance far below the rank threshold);
  // discarded words lie in the span of kept ones, so products of kept words
  // still reach the whole span of length-bounded words.
  std::vector<Word> kept;
  std::vector<Eigen::Matrix<Complex, 100, 1>> basis;  // orthonormal, vec(m)

  auto try_add = [&](const Mat10& m, int length) {
    Eigen::Matrix<Complex, 100, 1> v =
        Eigen::Map<const Eigen::Matrix<Complex, 100, 1>>(m.data());
    const double scale = v.norm();
    if (scale == 0.0) return;
    for (const auto& b : basis) v -= b.dot(v) * b;
    if (v.norm() > 1e-12 * scale) {
      basis.push_back(v.normalized());
      kept.push_back({m, length});
    }
  };

  try_add(Mat10::Identity(), 0);
  for (std::size_t next = 0; next < kept.size(); ++next) {
    if (kept[next].length >= max_word_length) continue;
    if (static_cast<int>(basis.size()) == 100) break;
    const Mat10 w = kept[next].m;
    const int len = kept[next].length;
    for (const auto& b : rep.beta) try_add(w * b, len + 1);
  }

  // Final rank with the documented relative threshold, over the raw words.
  Eigen::MatrixXcd stacked(100, kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    stacked.col(c) =
        Eigen::Map<const Eigen::Matrix<Complex, 100, 1>>(kept[c].m.data());
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-9 * sv(0)) ++rank;
  }
  return rank;
}

/// Residuals of every defining identity of the representation. Reporting
/// only; never throws on a bad representation.
inline AlgebraReport verify_algebra(const BetaRep& rep, double tol,
                                    int span_word_length = 8) {
  AlgebraReport report;
  auto push = [&](std::string name, double residual) {
    report.identity_breakdown.emplace_back(std::move(name), residual);
    if (residual > report.max_residual) report.max_residual = residual;
  };

  const Mat10 id = Mat10::Identity();

  // Trilinear KDP relation over all 64 index triples.
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int la = 0; la < 4; ++la) {
        const Mat10 lhs = rep.beta[mu] * rep.beta[nu] * rep.beta[la] +
                          rep.beta[la] * rep.beta[nu] * rep.beta[mu];
        const double g_nu_la = (nu == la) ? rep.metric[nu] : 0.0;
        const double g_nu_mu = (nu == mu) ? rep.metric[nu] : 0.0;
        const Mat10 rhs = rep.beta[mu] * g_nu_la + rep.beta[la] * g_nu_mu;
        push("kdp[" + std::to_string(mu) + std::to_string(nu) +
                 std::to_string(la) + "]",
             (lhs - rhs).norm());
      }
    }
  }

  // gamma: idempotent, diagonal pattern, and the defining anticommutator.
  push("gamma_idempotent", (rep.gamma * rep.gamma - rep.gamma).norm());
  RMat10 gamma_expected = RMat10::Zero();
  for (int i = 0; i < kFieldDim; ++i) gamma_expected(i, i) = 1.0;
  push("gamma_diagonal_pattern", (rep.gamma - gamma_expected).norm());
  for (int mu = 0; mu < 4; ++mu) {
    const Mat10 g = rep.gamma.cast<Complex>();
    push("gamma_beta[" + std::to_string(mu) + "]",
         (g * rep.beta[mu] + rep.beta[mu] * g - rep.beta[mu]).norm());
  }

  // eta: definition, involution, and (anti)commutation with the betas.
  const Mat10 eta_c = rep.eta.cast<Complex>();
  push("eta_definition",
       (eta_c - (2.0 * rep.beta[0] * rep.beta[0] - id)).norm());
  push("eta_involution", (eta_c * eta_c - id).norm());
  push("eta_beta0", (eta_c * rep.beta[0] - rep.beta[0]).norm());
  for (int i = 1; i < 4; ++i) {
    push("eta_beta[" + std::to_string(i) + "]",
         (eta_c * rep.beta[i] + rep.beta[i] * eta_c).norm());
  }

  // beta_tilde definition.
  for (int i = 0; i < 3; ++i) {
    push("beta_tilde[" + std::to_string(i + 1) + "]",
         (rep.beta_tilde[i] - (rep.beta[0] * rep.beta[i + 1] -
                               rep.beta[i + 1] * rep.beta[0]))
             .norm());
  }

  report.span_dimension = algebra_span_dimension(rep, span_word_length);
  (void)tol;  // pass/fail is the caller's judgement: max_residual <= tol
  return report;
}

/// Lorentz generator sigma_{mu nu} = [b_mu, b_nu]. Antisymmetric in (mu,nu);
/// sigma_{0i} equals beta_tilde[i].
inline Mat10 sigma(const BetaRep& rep, int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) {
    throw std::out_of_range("sigma: indices must lie in {0,1,2,3}");
  }
  return rep.beta[mu] * rep.beta[nu] - rep.beta[nu] * rep.beta[mu];
}

/// Construct the standard representation described at the top of this file
/// and verify it exactly. Throws std::logic_error if any identity fails,
/// rather than returning an unverified set of matrices.
inline BetaRep build_standard_rep() {
  BetaRep rep;
  const Complex I(0.0, 1.0);
  for (auto& b : rep.beta) b.setZero();

  // b_0: couples the E block and the A block (the two time-derivative rows).
  for (int j = 0; j < 3; ++j) {
    rep.beta[0](j, 6 + j) = -I;
    rep.beta[0](6 + j, j) = I;
  }

  // b_k, k = 1,2,3: E row reads A0, H row reads A, A row reads H,
  // A0 row reads E. The epsilon blocks carry the curls.
  for (int k = 0; k < 3; ++k) {
    Mat10& b = rep.beta[k + 1];
    b(k, 9) = I;
    b(9, k) = I;
    for (int j = 0; j < 3; ++j) {
      for (int l = 0; l < 3; ++l) {
        const double eps = levi_civita(j, k, l);
        if (eps == 0.0) continue;
        b(3 + j, 6 + l) = -I * eps;
        b(6 + j, 3 + l) = I * eps;
      }
    }
  }

  rep.gamma = RMat10::Zero();
  for (int i = 0; i < kFieldDim; ++i) rep.gamma(i, i) = 1.0;

  const Mat10 eta_c = 2.0 * rep.beta[0] * rep.beta[0] - Mat10::Identity();
  detail::check_residual(eta_c.imag().norm(), "eta (imaginary part)");
  rep.eta = eta_c.real();

  for (int k = 0; k < 3; ++k) {
    rep.beta_tilde[k] =
        rep.beta[0] * rep.beta[k + 1] - rep.beta[k + 1] * rep.beta[0];
  }

  // Entries are integers times i, so every identity must hold with zero
  // residual; anything else means the construction above is wrong. Products
  // of the betas saturate the full 10x10 matrix algebra at word length 5.
  AlgebraReport check = verify_algebra(rep, 0.0, 5);
  detail::check_residual(check.max_residual, "algebra identities");
  if (check.span_dimension != 100) {
    throw std::logic_error(
        "BetaRep construction failed: representation is not irreducible");
  }
  return rep;
}

}  // namespace kdp
