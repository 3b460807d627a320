#ifndef CSFQ_HERMITIAN_HPP_
#define CSFQ_HERMITIAN_HPP_

#include <complex>
#include <span>
#include <vector>

namespace csfq {

/// Dense complex Hermitian matrix, row-major storage.
class HermitianMatrix {
 public:
  using value_type = std::complex<double>;

  explicit HermitianMatrix(int dim);

  int dim() const { return dim_; }

  value_type& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const value_type& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

  /// Sets a_ij and a_ji = conj(a_ij) in one go.
  void set(int i, int j, value_type v);
  /// Adds v to a_ij and conj(v) to a_ji (diagonal: adds real part only once).
  void add(int i, int j, value_type v);

  std::span<const value_type> entries() const { return entries_; }
  value_type* data() { return entries_.data(); }

  double max_abs_entry() const;
  double frobenius_norm() const;

  struct HermiticityReport {
    double violation = 0.0;  // worst |a_ij - conj(a_ji)|
    int i = 0;
    int j = 0;
  };
  HermiticityReport hermiticity_report() const;

  /// True when the worst violation is within tol * max_abs_entry.
  bool is_hermitian(double tol = 1e-12) const;

 private:
  int dim_;
  std::vector<value_type> entries_;
};

/// Eigenvalues ascending; eigenvector k stored contiguously at
/// [k*dim, (k+1)*dim), aligned with eigenvalues[k].
struct EigenDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;
  std::vector<std::complex<double>> eigenvectors;

  std::span<const std::complex<double>> eigenvector(int k) const {
    return {eigenvectors.data() + static_cast<std::size_t>(k) * dim,
            static_cast<std::size_t>(dim)};
  }
};

/// Full eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors orthonormal. Rejects non-Hermitian input, naming the worst
/// violating entry pair.
EigenDecomposition eigensolve(const HermitianMatrix& H);

/// Eigenvalues only (ascending); same validation, no eigenvectors.
std::vector<double> eigenvalues(const HermitianMatrix& H);

}  // namespace csfq

#endif  // CSFQ_HERMITIAN_HPP_
