#pragma once

#include <cstddef>
#include <vector>

namespace lefschetz {

/// Dense symmetric matrix; set() writes both (i, j) and (j, i).
class RealSymmetricMatrix {
 public:
  explicit RealSymmetricMatrix(std::size_t size);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v);
  double max_abs_entry() const;
  RealSymmetricMatrix scaled(double s) const;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

struct IndexCertificate {
  std::size_t negatives = 0;
  std::size_t positives = 0;
  std::size_t zeros = 0;
  std::vector<double> eigenvalues;  // ascending
  double det = 0.0;
};

// Inertia of any symmetric matrix. |lambda| < 1e-9 max|entry| counts as zero.
IndexCertificate index_certificate(const RealSymmetricMatrix& m);

// Hessian at 0 of a(x^2 - y^2) + 2bxy: [[2a, 2b], [2b, -2a]].
// Both a = b = 0 throws DegenerateParameters.
RealSymmetricMatrix curve_hessian(double a, double b);
IndexCertificate curve_index(double a, double b);

// Hessian at 0 of a sum(x_i^2 - y_i^2) + 2b sum x_i y_i in the variables
// (x_1..x_n, y_1..y_n): 2 [[aI, bI], [bI, -aI]].
RealSymmetricMatrix pencil_hessian(double a, double b, int n);
// The same matrix without the overall factor 2.
RealSymmetricMatrix pencil_symbol(double a, double b, int n);

struct PencilIndex {
  IndexCertificate hessian;  // of pencil_hessian
  double symbol_det = 0.0;   // det of pencil_symbol
};

PencilIndex pencil_index(double a, double b, int n);

// det(x I - m), by LU.
double characteristic_value(const RealSymmetricMatrix& m, double x);
double determinant(const RealSymmetricMatrix& m);

// Max |H_fd - pencil_hessian| with central second differences of step h.
double finite_difference_check(double a, double b, int n, double h);

}  // namespace lefschetz
