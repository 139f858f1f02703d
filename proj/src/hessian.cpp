#include "lefschetz/hessian.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "lefschetz/error.hpp"

namespace lefschetz {

RealSymmetricMatrix::RealSymmetricMatrix(std::size_t size) : n_(size), a_(size * size, 0.0) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "matrix size must be positive");
}

void RealSymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

double RealSymmetricMatrix::max_abs_entry() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

RealSymmetricMatrix RealSymmetricMatrix::scaled(double s) const {
  RealSymmetricMatrix r(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = s * a_[k];
  return r;
}

namespace {

Eigen::MatrixXd to_eigen(const RealSymmetricMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return e;
}

void require_nondegenerate(double a, double b) {
  if (a == 0.0 && b == 0.0) throw Error(ErrorCode::DegenerateParameters, "a = b = 0 gives a degenerate critical point");
}

}  // namespace

double determinant(const RealSymmetricMatrix& m) { return to_eigen(m).partialPivLu().determinant(); }

double characteristic_value(const RealSymmetricMatrix& m, double x) {
  const Eigen::MatrixXd e = to_eigen(m);
  const Eigen::MatrixXd shifted = x * Eigen::MatrixXd::Identity(e.rows(), e.cols()) - e;
  return shifted.partialPivLu().determinant();
}

IndexCertificate index_certificate(const RealSymmetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  ensure(solver.info() == Eigen::Success, "symmetric eigensolver failed");
  IndexCertificate out;
  const double threshold = 1e-9 * m.max_abs_entry();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    out.eigenvalues.push_back(lambda);
    if (std::abs(lambda) < threshold)
      ++out.zeros;
    else if (lambda < 0)
      ++out.negatives;
    else
      ++out.positives;
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.det = determinant(m);
  ensure(out.negatives + out.positives + out.zeros == m.size(), "inertia does not add up to the size");
  return out;
}

RealSymmetricMatrix curve_hessian(double a, double b) { return pencil_hessian(a, b, 1); }

IndexCertificate curve_index(double a, double b) { return index_certificate(curve_hessian(a, b)); }

RealSymmetricMatrix pencil_symbol(double a, double b, int n) {
  require_nondegenerate(a, b);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  const auto k = static_cast<std::size_t>(n);
  RealSymmetricMatrix m(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    m.set(i, i, a);
    m.set(k + i, k + i, -a);
    m.set(i, k + i, b);
  }
  return m;
}

RealSymmetricMatrix pencil_hessian(double a, double b, int n) { return pencil_symbol(a, b, n).scaled(2.0); }

PencilIndex pencil_index(double a, double b, int n) {
  return {index_certificate(pencil_hessian(a, b, n)), determinant(pencil_symbol(a, b, n))};
}

double finite_difference_check(double a, double b, int n, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  const RealSymmetricMatrix exact = pencil_hessian(a, b, n);
  const std::size_t k = static_cast<std::size_t>(n);
  const std::size_t dim = 2 * k;

  auto q = [&](const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += a * (v[i] * v[i] - v[k + i] * v[k + i]) + 2.0 * b * v[i] * v[k + i];
    return s;
  };
  auto at = [&](std::size_t i, double si, std::size_t j, double sj) {
    std::vector<double> v(dim, 0.0);
    v[i] += si;
    v[j] += sj;
    return q(v);
  };

  const double q0 = q(std::vector<double>(dim, 0.0));
  double deviation = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      double fd;
      if (i == j) {
        fd = (at(i, h, i, 0.0) - 2.0 * q0 + at(i, -h, i, 0.0)) / (h * h);
      } else {
        fd = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4.0 * h * h);
      }
      deviation = std::max(deviation, std::abs(fd - exact(i, j)));
    }
  }
  return deviation;
}

}  // namespace lefschetz
