#pragma once

#include "mlgp/basis.hpp"

#include <Eigen/Dense>

namespace mlgp {

/// Parameters of one layer's precision operator. The smoothness is pinned to
/// nu = 2 - d/2 (second-order operator); the scale can be given either as
/// beta directly or through the Matern sigma, from which
/// beta = sigma^2 2^d pi^(d/2) Gamma(2) / Gamma(nu).
struct LayerParams {
  double nu = 0.0;
  double beta = 1.0;
  double kappa0 = 1.0;  ///< base inverse length-scale; used by the top layer

  static LayerParams from_beta(int d, double beta, double kappa0 = 1.0);
  static LayerParams from_sigma(int d, double sigma, double kappa0 = 1.0);
};

/// beta = sigma^2 2^d pi^(d/2) Gamma(2) / Gamma(2 - d/2).
double matern_beta(int d, double sigma);

/// Options for the grid transform used to compute coefficients of
/// exp(gamma u(x)). The pointwise exponential is evaluated on a fine grid
/// (at least 4n+1 points per axis, rounded up to a power of two by default)
/// and projected back; spectral decomposition of the multiplication matrix
/// must not be used here.
struct KappaGridOptions {
  int fine_grid = 0;  ///< 0 = automatic: next_pow2(max(4n+1, 16))

  int resolve(const BasisSpec& spec) const;
};

/// Fourier coefficients of exp(gamma u(x)), truncated to the band of u.
SpectralField kappa_power_coeffs(const SpectralField& u, double gamma,
                                 const KappaGridOptions& opts = {});

/// Same, retained on the doubled band [-2n, 2n] per axis so that a
/// subsequent multiplication matrix has every reachable frequency
/// difference available.
SpectralField kappa_power_coeffs_extended(const SpectralField& u, double gamma,
                                          const KappaGridOptions& opts = {});

/// Dense matrix of the multiplication operator v -> f v on the band of
/// `table`: entry (l, m) = fhat(k(l) - k(m)) when the difference lies within
/// f's stored band, zero otherwise. f may live on a wider band than the
/// table (typically the doubled band).
Eigen::MatrixXcd multiplication_matrix(const SpectralField& f, const MultiIndexTable& table);

/// Square root of a layer's precision operator,
///   L = (1/sqrt(beta)) (M_N(exp(u)^{d/2}) - M_N(exp(u)^{-nu}) D),
/// with D = diag(-lambda_l). Maps a layer sample to the white noise that
/// generated it; the layer sample is recovered by solving L v = w.
class PrecisionSqrtMatrix {
 public:
  PrecisionSqrtMatrix(const BasisSpec& spec, Eigen::MatrixXcd entries);

  const BasisSpec& spec() const { return spec_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  BasisSpec spec_;
  Eigen::MatrixXcd entries_;
};

/// Assembles L from the conditioning field of the layer above.
PrecisionSqrtMatrix build_L(const SpectralField& u_prev, const LayerParams& params,
                            const KappaGridOptions& opts = {});

/// Solves L v = w by dense partial-pivot LU. Checks the relative residual
/// (<= 1e-10) and throws NumericalError with the reciprocal condition
/// estimate when the system is numerically singular.
SpectralField solve_L(const PrecisionSqrtMatrix& L, const SpectralField& w);

/// Folds a Hermitian-symmetry-preserving complex matrix to its action on
/// the real coordinate parametrization (see to_real_coords).
Eigen::MatrixXd fold_to_real(const Eigen::MatrixXcd& A);

/// Fused assembly of the real-folded L without materializing the complex
/// matrix; this is the per-iteration hot path of the samplers.
/// `f_pow_half` and `f_pow_negnu` are the exp(u)^(d/2) and exp(u)^(-nu)
/// coefficient fields on the doubled band.
Eigen::MatrixXd assemble_L_real(const SpectralField& f_pow_half,
                                const SpectralField& f_pow_negnu,
                                const MultiIndexTable& table, double beta);

/// Convenience: kappa transforms + fused real assembly from the
/// conditioning field.
Eigen::MatrixXd build_L_real(const SpectralField& u_prev, const LayerParams& params,
                             const MultiIndexTable& table, const KappaGridOptions& opts = {});

}  // namespace mlgp
