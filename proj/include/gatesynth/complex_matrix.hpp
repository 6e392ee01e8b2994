#pragma once

#include <complex>
#include <vector>

namespace gatesynth {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage. The single carrier type
/// for unitaries, Hamiltonians and Lie-algebra elements. Sized for small
/// dimensions (d <= 64); everything is value-semantic and immutable-friendly.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }
  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  int dim_;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re tr(a * b) without forming the product. Hot path of bank evaluation.
double re_trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; dim = dim(a) * dim(b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||m - m^dag||_F
double hermiticity_residual(const ComplexMatrix& m);
/// ||m^dag m - I||_F
double unitarity_residual(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_skew_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

}  // namespace gatesynth
