#include "gatesynth/complex_matrix.hpp"

#include <cmath>

#include "gatesynth/errors.hpp"

namespace gatesynth {

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(dim) * dim) {
    throw NumericError("ComplexMatrix: entry count does not match dimension");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const int d = lhs.dim();
  ComplexMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex{}) continue;
      for (int j = 0; j < d; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const int d = m.dim();
  ComplexMatrix out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

Complex trace(const ComplexMatrix& m) {
  Complex t = 0.0;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& v : m.data()) s += std::norm(v);
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t k = 0; k < x.size(); ++k) s += std::norm(x[k] - y[k]);
  return std::sqrt(s);
}

double re_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int d = a.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex& x = a(i, j);
      const Complex& y = b(j, i);
      s += x.real() * y.real() - x.imag() * y.imag();
    }
  }
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  ComplexMatrix out(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

double hermiticity_residual(const ComplexMatrix& m) {
  const int d = m.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(s);
}

double unitarity_residual(const ComplexMatrix& m) {
  const int d = m.dim();
  double s = 0.0;
  // (m^dag m)_ij = sum_k conj(m(k,i)) m(k,j)
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < d; ++k) acc += std::conj(m(k, i)) * m(k, j);
      if (i == j) acc -= 1.0;
      s += std::norm(acc);
    }
  }
  return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return hermiticity_residual(m) <= tol;
}

bool is_skew_hermitian(const ComplexMatrix& m, double tol) {
  const int d = m.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += std::norm(m(i, j) + std::conj(m(j, i)));
  return std::sqrt(s) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return unitarity_residual(m) <= tol;
}

}  // namespace gatesynth
