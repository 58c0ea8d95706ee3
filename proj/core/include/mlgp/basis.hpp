#pragma once

#include <Eigen/Core>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace mlgp {

using Complex = std::complex<double>;
using Index = std::int64_t;

/// Frequency multi-index; only the first `d` components are meaningful.
using MultiIndex = std::array<int, 3>;

/// Truncated Fourier basis phi_l(x) = exp(i c_d x.k(l)) on the d-dimensional
/// unit torus, with per-axis frequencies in [-n, n] and linear indices in
/// [-N, N], N = ((2n+1)^d - 1) / 2.
struct BasisSpec {
  int d = 1;           ///< spatial dimension, 1..3
  int n = 0;           ///< per-axis frequency bound
  double c_d = kTwoPi; ///< angular frequency constant (radians per unit length)

  static constexpr double kTwoPi = 6.283185307179586476925286766559;

  BasisSpec() = default;
  BasisSpec(int d_, int n_, double c_d_ = kTwoPi);

  /// Linear index bound N = ((2n+1)^d - 1) / 2; the (2n+1)^d count is odd,
  /// so this is always exact.
  Index max_index() const { return (mode_count() - 1) / 2; }
  /// Total number of modes (2n+1)^d.
  Index mode_count() const;

  bool operator==(const BasisSpec& other) const {
    return d == other.d && n == other.n && c_d == other.c_d;
  }
};

/// Bijection between linear indices l in [-N, N] and multi-indices
/// k(l) in [-n, n]^d, enumerated with the first axis slowest. Satisfies
/// k(-l) = -k(l), k(0) = 0, and k(l+m) = k(l) + k(m) whenever the
/// componentwise sum stays within [-n, n].
class MultiIndexTable {
 public:
  explicit MultiIndexTable(const BasisSpec& spec);

  const BasisSpec& spec() const { return spec_; }
  Index max_index() const { return spec_.max_index(); }

  /// Multi-index for linear index l in [-N, N].
  MultiIndex k(Index l) const;

  /// Linear index for a multi-index, if every component lies in [-n, n].
  std::optional<Index> index_of(const MultiIndex& k) const;

  /// l + m when k(l) + k(m) stays inside the frequency box; the undefined
  /// case is a value, not an error (downstream assembly treats it as a
  /// zero matrix entry).
  std::optional<Index> index_add(Index l, Index m) const;

  /// Eigenvalue of -Laplace for phi_l: c_d^2 |k(l)|^2.
  double laplacian_eigenvalue(Index l) const;

 private:
  void check_range(Index l) const;
  BasisSpec spec_;
  std::array<Index, 3> stride_{};
};

/// Complex Fourier coefficients of a real field: coeff(-l) == conj(coeff(l)).
class SpectralField {
 public:
  /// Zero field.
  explicit SpectralField(const BasisSpec& spec);

  /// Takes the full coefficient vector (length 2N+1, index l+N) and checks
  /// the Hermitian symmetry; throws std::invalid_argument on violation.
  SpectralField(const BasisSpec& spec, Eigen::VectorXcd coeffs);

  const BasisSpec& spec() const { return spec_; }
  Index max_index() const { return spec_.max_index(); }

  Complex coeff(Index l) const { return coeffs_[l + max_index()]; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

  /// Sets the conjugate pair (l, -l) together so the invariant is preserved.
  void set_pair(Index l, Complex value);

  /// In-place conjugate symmetrization (averages the (l, -l) pairs); used
  /// after FFT analysis to remove rounding-level asymmetry.
  void symmetrize();

  static bool is_hermitian(const Eigen::VectorXcd& coeffs, double tol = 1e-9);

 private:
  struct unchecked_t {};
  SpectralField(const BasisSpec& spec, Eigen::VectorXcd coeffs, unchecked_t)
      : spec_(spec), coeffs_(std::move(coeffs)) {}
  friend SpectralField make_field_unchecked(const BasisSpec&, Eigen::VectorXcd);

  BasisSpec spec_;
  Eigen::VectorXcd coeffs_;
};

/// Internal factory for operations that preserve Hermitian symmetry by
/// construction; skips the O(N) validation.
SpectralField make_field_unchecked(const BasisSpec& spec, Eigen::VectorXcd coeffs);

/// Real samples of a field on a regular periodic grid of `grid_size` points
/// per axis, x_j = j / grid_size, row-major with the first axis slowest.
struct GridField {
  BasisSpec spec;
  int grid_size = 0;
  Eigen::VectorXd samples;

  Index total_points() const;
};

/// Evaluates the band-limited field on a regular grid via backward FFT.
/// Requires grid_size >= 2n+1 per axis (no aliasing of the stored band).
GridField synthesize(const SpectralField& field, int grid_size);

/// Projects grid samples back onto the basis via forward FFT; exact inverse
/// of synthesize for band-limited data on the same grid.
SpectralField analyze(const GridField& grid, const BasisSpec& spec);

/// Real coordinates of the Hermitian coefficient vector:
///   x(0) = coeff(0),  x(2l-1) = sqrt(2) Re coeff(l),  x(2l) = sqrt(2) Im coeff(l)
/// for l = 1..N. The map is an isometry: |x|_2 equals the L2 norm of the
/// field, and standard normal x corresponds to unit white noise.
Eigen::VectorXd to_real_coords(const SpectralField& field);
SpectralField from_real_coords(const BasisSpec& spec, const Eigen::VectorXd& x);

/// Pointwise evaluation by direct summation (slow; grids should use
/// synthesize). x has d components in [0, 1).
double evaluate_field(const SpectralField& field, const MultiIndexTable& table,
                      const std::array<double, 3>& x);

}  // namespace mlgp
