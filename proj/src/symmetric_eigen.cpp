#include "projshape/symmetric_eigen.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "projshape/errors.hpp"

namespace projshape {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& input) {
  const int n = static_cast<int>(input.rows());
  if (n == 0 || input.cols() != n) throw ArgumentError("jacobi_eigen: matrix must be square");

  Eigen::MatrixXd a = 0.5 * (input + input.transpose());  // enforce symmetry
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double tolerance = 1e-13 * std::max(1.0, a.norm());

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) > tolerance; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        // smaller-angle root of t^2 + 2*theta*t - 1 = 0
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    Eigen::VectorXd col = v.col(order[j]);
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(col[i]) > std::abs(col[imax])) imax = i;
    if (col[imax] < 0.0) col = -col;
    out.vectors.col(j) = col;
  }
  return out;
}

Eigen::MatrixXd symmetric_pseudo_inverse(const Eigen::MatrixXd& s, double rel_cutoff,
                                         int* rank_out) {
  const SymmetricEigen eig = jacobi_eigen(s);
  const int n = static_cast<int>(eig.values.size());
  const double max_eig = eig.values.cwiseAbs().maxCoeff();
  const double cutoff = rel_cutoff * std::max(max_eig, 1e-300);

  Eigen::MatrixXd pinv = Eigen::MatrixXd::Zero(n, n);
  int rank = 0;
  for (int j = 0; j < n; ++j) {
    if (eig.values[j] > cutoff) {
      pinv += eig.vectors.col(j) * eig.vectors.col(j).transpose() / eig.values[j];
      ++rank;
    }
  }
  if (rank_out) *rank_out = rank;
  return pinv;
}

}  // namespace projshape
