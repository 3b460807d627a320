#include "csfq/hermitian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

// Fortran LAPACK, column-major. A row-major Hermitian buffer passed as-is is
// the conjugate of the intended matrix, which shares its (real) eigenvalues;
// eigenvectors come back conjugated and are fixed up below.
extern "C" {
void zheevd_(const char* jobz, const char* uplo, const int* n, std::complex<double>* a,
             const int* lda, double* w, std::complex<double>* work, const int* lwork,
             double* rwork, const int* lrwork, int* iwork, const int* liwork, int* info);
void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda,
             double* w, double* work, const int* lwork, int* iwork, const int* liwork,
             int* info);
}

namespace csfq {

HermitianMatrix::HermitianMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("HermitianMatrix: dim must be >= 1");
  entries_.assign(static_cast<std::size_t>(dim) * dim, {0.0, 0.0});
}

void HermitianMatrix::set(int i, int j, value_type v) {
  at(i, j) = v;
  if (i != j) at(j, i) = std::conj(v);
}

void HermitianMatrix::add(int i, int j, value_type v) {
  at(i, j) += v;
  if (i != j) at(j, i) += std::conj(v);
}

double HermitianMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

HermitianMatrix::HermiticityReport HermitianMatrix::hermiticity_report() const {
  HermiticityReport rep;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      const double v = std::abs(at(i, j) - std::conj(at(j, i)));
      if (v > rep.violation) rep = {v, i, j};
    }
  return rep;
}

bool HermitianMatrix::is_hermitian(double tol) const {
  return hermiticity_report().violation <= tol * max_abs_entry();
}

namespace {

void require_hermitian(const HermitianMatrix& H) {
  const auto rep = H.hermiticity_report();
  if (rep.violation > 1e-12 * H.max_abs_entry()) {
    std::ostringstream msg;
    msg << "eigensolve: matrix is not Hermitian; worst violation |a(" << rep.i << "," << rep.j
        << ") - conj(a(" << rep.j << "," << rep.i << "))| = " << rep.violation
        << " exceeds 1e-12 * max|a| = " << 1e-12 * H.max_abs_entry();
    throw std::invalid_argument(msg.str());
  }
}

bool numerically_real(const HermitianMatrix& H) {
  const double tol = 1e-13 * H.max_abs_entry();
  for (const auto& z : H.entries())
    if (std::abs(z.imag()) > tol) return false;
  return true;
}

// jobz 'N' or 'V'. On 'V' the columns of `a` (column-major) are filled with
// eigenvectors of conj(H), i.e. conjugates of eigenvectors of H.
void zheevd_driver(char jobz, int n, std::vector<std::complex<double>>& a,
                   std::vector<double>& w) {
  int info = 0, lwork = -1, lrwork = -1, liwork = -1;
  std::complex<double> wkq;
  double rwkq;
  int iwkq;
  zheevd_(&jobz, "U", &n, a.data(), &n, w.data(), &wkq, &lwork, &rwkq, &lrwork, &iwkq, &liwork,
          &info);
  if (info != 0) throw std::runtime_error("eigensolve: zheevd workspace query failed");
  lwork = static_cast<int>(wkq.real());
  lrwork = static_cast<int>(rwkq);
  liwork = iwkq;
  std::vector<std::complex<double>> work(lwork);
  std::vector<double> rwork(lrwork);
  std::vector<int> iwork(liwork);
  zheevd_(&jobz, "U", &n, a.data(), &n, w.data(), work.data(), &lwork, rwork.data(), &lrwork,
          iwork.data(), &liwork, &info);
  if (info != 0)
    throw std::runtime_error("eigensolve: zheevd failed to converge, info = " +
                             std::to_string(info));
}

void dsyevd_driver(char jobz, int n, std::vector<double>& a, std::vector<double>& w) {
  int info = 0, lwork = -1, liwork = -1;
  double wkq;
  int iwkq;
  dsyevd_(&jobz, "U", &n, a.data(), &n, w.data(), &wkq, &lwork, &iwkq, &liwork, &info);
  if (info != 0) throw std::runtime_error("eigensolve: dsyevd workspace query failed");
  lwork = static_cast<int>(wkq);
  liwork = iwkq;
  std::vector<double> work(lwork);
  std::vector<int> iwork(liwork);
  dsyevd_(&jobz, "U", &n, a.data(), &n, w.data(), work.data(), &lwork, iwork.data(), &liwork,
          &info);
  if (info != 0)
    throw std::runtime_error("eigensolve: dsyevd failed to converge, info = " +
                             std::to_string(info));
}

}  // namespace

EigenDecomposition eigensolve(const HermitianMatrix& H) {
  require_hermitian(H);
  const int n = H.dim();
  EigenDecomposition dec;
  dec.dim = n;
  dec.eigenvalues.assign(n, 0.0);

  if (numerically_real(H)) {
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = H.entries()[k].real();
    dsyevd_driver('V', n, a, dec.eigenvalues);
    dec.eigenvectors.assign(a.begin(), a.end());
    return dec;
  }

  std::vector<std::complex<double>> a(H.entries().begin(), H.entries().end());
  zheevd_driver('V', n, a, dec.eigenvalues);
  dec.eigenvectors.resize(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) dec.eigenvectors[k] = std::conj(a[k]);
  return dec;
}

std::vector<double> eigenvalues(const HermitianMatrix& H) {
  require_hermitian(H);
  const int n = H.dim();
  std::vector<double> w(n);
  if (numerically_real(H)) {
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = H.entries()[k].real();
    dsyevd_driver('N', n, a, w);
  } else {
    std::vector<std::complex<double>> a(H.entries().begin(), H.entries().end());
    zheevd_driver('N', n, a, w);
  }
  return w;
}

}  // namespace csfq
