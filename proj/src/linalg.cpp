#include "gatesynth/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "gatesynth/errors.hpp"

namespace gatesynth {

namespace {

constexpr double kHermTol = 1e-10;
constexpr int kMaxJacobiSweeps = 60;

double off_diagonal_norm(const ComplexMatrix& a) {
  const int d = a.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

ComplexMatrix pauli(Pauli which) {
  ComplexMatrix m(2);
  switch (which) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

EigResult hermitian_eig(const ComplexMatrix& h) {
  const double herm = hermiticity_residual(h);
  if (herm > kHermTol) {
    std::ostringstream os;
    os << "hermitian_eig: input not Hermitian, residual " << herm;
    throw NumericError(os.str());
  }

  const int d = h.dim();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(d);

  // Symmetrize once so roundoff in the input cannot bias the sweeps.
  for (int i = 0; i < d; ++i) {
    a(i, i) = Complex(a(i, i).real(), 0.0);
    for (int j = i + 1; j < d; ++j) {
      const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }

  const double scale = std::max(frobenius_norm(a), 1.0);
  const double stop = 1e-15 * scale * d;

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const Complex gamma = a(p, q);
        const double g = std::abs(gamma);
        if (g <= 1e-300) continue;
        const Complex phase = gamma / g;
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        // Zero the (p,q) element: rotation angle from the real 2x2 problem
        // [[alpha, g], [g, beta]].
        const double tau = (alpha - beta) / (2.0 * g);
        double t;
        if (tau >= 0.0) {
          t = -1.0 / (tau + std::sqrt(tau * tau + 1.0));
        } else {
          t = 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = (t * c) * phase;
        const Complex sc = std::conj(s);

        // A <- J^dag A J with J[[c, s], [-conj(s), c]] in the (p,q) plane.
        for (int i = 0; i < d; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = aip * c - aiq * sc;
          a(i, q) = aip * s + aiq * c;
        }
        for (int j = 0; j < d; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj - s * aqj;
          a(q, j) = sc * apj + c * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (int i = 0; i < d; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = vip * c - viq * sc;
          v(i, q) = vip * s + viq * c;
        }
      }
    }
  }

  const double off = off_diagonal_norm(a);
  if (off > 1e-10 * scale) {
    std::ostringstream os;
    os << "hermitian_eig: no convergence after " << kMaxJacobiSweeps
       << " sweeps, off-diagonal residual " << off;
    throw NumericError(os.str());
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigResult res;
  res.eigenvalues.resize(d);
  res.eigenvectors = ComplexMatrix(d);
  for (int k = 0; k < d; ++k) {
    res.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < d; ++i) res.eigenvectors(i, k) = v(i, order[k]);
  }
  return res;
}

ComplexMatrix expm_skew(const ComplexMatrix& h, double t) {
  const double herm = hermiticity_residual(h);
  if (herm > kHermTol) {
    std::ostringstream os;
    os << "expm_skew: input not Hermitian, residual " << herm;
    throw NumericError(os.str());
  }
  const auto [w, v] = hermitian_eig(h);
  const int d = h.dim();
  // V diag(exp(-i t w)) V^dag
  ComplexMatrix out(d);
  std::vector<Complex> phases(d);
  for (int k = 0; k < d; ++k) {
    const double ang = -t * w[k];
    phases[k] = Complex(std::cos(ang), std::sin(ang));
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < d; ++k) acc += v(i, k) * phases[k] * std::conj(v(j, k));
      out(i, j) = acc;
    }
  return out;
}

double nuclear_norm(const ComplexMatrix& b) {
  const int d = b.dim();
  ComplexMatrix bhb(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < d; ++k) acc += std::conj(b(k, i)) * b(k, j);
      bhb(i, j) = acc;
    }
  const auto eig = hermitian_eig(bhb);
  double s = 0.0;
  for (double w : eig.eigenvalues) s += std::sqrt(std::max(0.0, w));
  return s;
}

Complex determinant(const ComplexMatrix& m) {
  const int d = m.dim();
  ComplexMatrix a = m;
  Complex det = 1.0;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < d; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < d; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < d; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (int j = col; j < d; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw NumericError("random_unitary: dim must be >= 1");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  // Hand-rolled Box-Muller keeps the stream identical across standard
  // libraries; std::normal_distribution is implementation-defined.
  auto gaussian_pair = [&rng]() {
    const double u1 =
        (static_cast<double>(rng() >> 11) + 1.0) / 9007199254740993.0;  // (0,1)
    const double u2 = static_cast<double>(rng() >> 11) / 9007199254740992.0;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    return Complex(r * std::cos(th), r * std::sin(th));
  };

  ComplexMatrix q(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) q(i, j) = gaussian_pair();

  // Modified Gram-Schmidt with one re-orthogonalization pass.
  for (int j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (int i = 0; i < dim; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < dim; ++i) q(i, j) -= proj * q(i, k);
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < dim; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) throw NumericError("random_unitary: degenerate sample");
    for (int i = 0; i < dim; ++i) q(i, j) /= nrm;
  }

  // det(Q) lies on the unit circle; rotating one column by its conjugate
  // lands the matrix in the special unitary group.
  const Complex det = determinant(q);
  const Complex fix = std::conj(det) / std::abs(det);
  for (int i = 0; i < dim; ++i) q(i, 0) *= fix;
  return q;
}

}  // namespace gatesynth
