#include "mlgp/basis.hpp"

#include "mlgp/errors.hpp"
#include "mlgp/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace mlgp {

BasisSpec::BasisSpec(int d_, int n_, double c_d_) : d(d_), n(n_), c_d(c_d_) {
  if (d < 1 || d > 3) throw std::invalid_argument("BasisSpec: dimension must be 1, 2, or 3");
  if (n < 0) throw std::invalid_argument("BasisSpec: frequency bound must be nonnegative");
  if (c_d <= 0.0) throw std::invalid_argument("BasisSpec: c_d must be positive");
  if (mode_count() > (Index{1} << 31))
    throw std::invalid_argument("BasisSpec: mode count too large");
}

Index BasisSpec::mode_count() const {
  Index count = 1;
  for (int r = 0; r < d; ++r) count *= 2 * Index{n} + 1;
  return count;
}

MultiIndexTable::MultiIndexTable(const BasisSpec& spec) : spec_(spec) {
  // Column l+N of the Kronecker construction decodes as base-(2n+1) digits
  // of l+N, first axis slowest.
  const Index base = 2 * Index{spec_.n} + 1;
  stride_ = {0, 0, 0};
  Index s = 1;
  for (int r = spec_.d - 1; r >= 0; --r) {
    stride_[static_cast<std::size_t>(r)] = s;
    s *= base;
  }
}

void MultiIndexTable::check_range(Index l) const {
  if (l < -max_index() || l > max_index())
    throw std::out_of_range("MultiIndexTable: linear index out of [-N, N]");
}

MultiIndex MultiIndexTable::k(Index l) const {
  check_range(l);
  const Index base = 2 * Index{spec_.n} + 1;
  Index rem = l + max_index();
  MultiIndex idx{0, 0, 0};
  for (int r = 0; r < spec_.d; ++r) {
    const Index digit = rem / stride_[static_cast<std::size_t>(r)];
    rem -= digit * stride_[static_cast<std::size_t>(r)];
    idx[static_cast<std::size_t>(r)] = static_cast<int>(digit - spec_.n);
  }
  (void)base;
  return idx;
}

std::optional<Index> MultiIndexTable::index_of(const MultiIndex& k) const {
  Index l = 0;
  for (int r = 0; r < spec_.d; ++r) {
    const int c = k[static_cast<std::size_t>(r)];
    if (c < -spec_.n || c > spec_.n) return std::nullopt;
    l += (Index{c} + spec_.n) * stride_[static_cast<std::size_t>(r)];
  }
  return l - max_index();
}

std::optional<Index> MultiIndexTable::index_add(Index l, Index m) const {
  check_range(l);
  check_range(m);
  const MultiIndex a = k(l);
  const MultiIndex b = k(m);
  MultiIndex sum{0, 0, 0};
  for (int r = 0; r < spec_.d; ++r) {
    sum[static_cast<std::size_t>(r)] =
        a[static_cast<std::size_t>(r)] + b[static_cast<std::size_t>(r)];
  }
  // When every component stays in [-n, n], |l+m| <= N holds automatically
  // for this digit encoding.
  return index_of(sum);
}

double MultiIndexTable::laplacian_eigenvalue(Index l) const {
  const MultiIndex idx = k(l);
  double sq = 0.0;
  for (int r = 0; r < spec_.d; ++r) {
    const double c = idx[static_cast<std::size_t>(r)];
    sq += c * c;
  }
  return spec_.c_d * spec_.c_d * sq;
}

SpectralField::SpectralField(const BasisSpec& spec)
    : spec_(spec), coeffs_(Eigen::VectorXcd::Zero(2 * spec.max_index() + 1)) {}

SpectralField::SpectralField(const BasisSpec& spec, Eigen::VectorXcd coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != 2 * spec_.max_index() + 1)
    throw std::invalid_argument("SpectralField: coefficient length mismatch");
  if (!is_hermitian(coeffs_))
    throw std::invalid_argument("SpectralField: coefficients are not Hermitian-symmetric");
}

bool SpectralField::is_hermitian(const Eigen::VectorXcd& coeffs, double tol) {
  const Index size = coeffs.size();
  const Index N = (size - 1) / 2;
  const double scale = std::max(1.0, coeffs.norm());
  for (Index l = 0; l <= N; ++l) {
    const Complex diff = coeffs[N + l] - std::conj(coeffs[N - l]);
    if (std::abs(diff) > tol * scale) return false;
  }
  return true;
}

void SpectralField::set_pair(Index l, Complex value) {
  const Index N = max_index();
  if (l < -N || l > N) throw std::out_of_range("SpectralField: index out of range");
  if (l == 0) {
    coeffs_[N] = Complex(value.real(), 0.0);
    return;
  }
  coeffs_[N + l] = value;
  coeffs_[N - l] = std::conj(value);
}

void SpectralField::symmetrize() {
  const Index N = max_index();
  coeffs_[N] = Complex(coeffs_[N].real(), 0.0);
  for (Index l = 1; l <= N; ++l) {
    const Complex avg = 0.5 * (coeffs_[N + l] + std::conj(coeffs_[N - l]));
    coeffs_[N + l] = avg;
    coeffs_[N - l] = std::conj(avg);
  }
}

SpectralField make_field_unchecked(const BasisSpec& spec, Eigen::VectorXcd coeffs) {
  return SpectralField(spec, std::move(coeffs), SpectralField::unchecked_t{});
}

Index GridField::total_points() const {
  Index total = 1;
  for (int r = 0; r < spec.d; ++r) total *= grid_size;
  return total;
}

namespace {

std::vector<int> grid_dims(const BasisSpec& spec, int grid_size) {
  return std::vector<int>(static_cast<std::size_t>(spec.d), grid_size);
}

/// Row-major flat position of the FFT bin holding frequency `k`.
Index fft_bin(const MultiIndex& k, int d, int grid_size) {
  Index flat = 0;
  for (int r = 0; r < d; ++r) {
    const int wrapped = ((k[static_cast<std::size_t>(r)] % grid_size) + grid_size) % grid_size;
    flat = flat * grid_size + wrapped;
  }
  return flat;
}

}  // namespace

GridField synthesize(const SpectralField& field, int grid_size) {
  const BasisSpec& spec = field.spec();
  if (grid_size < 2 * spec.n + 1)
    throw std::invalid_argument("synthesize: grid must have at least 2n+1 points per axis");

  MultiIndexTable table(spec);
  Index total = 1;
  for (int r = 0; r < spec.d; ++r) total *= grid_size;

  std::vector<Complex> buffer(static_cast<std::size_t>(total), Complex(0.0, 0.0));
  const Index N = spec.max_index();
  for (Index l = -N; l <= N; ++l) {
    buffer[static_cast<std::size_t>(fft_bin(table.k(l), spec.d, grid_size))] += field.coeff(l);
  }
  fft::backward(buffer, grid_dims(spec, grid_size));

  GridField grid{spec, grid_size, Eigen::VectorXd(total)};
  for (Index j = 0; j < total; ++j) grid.samples[j] = buffer[static_cast<std::size_t>(j)].real();
  return grid;
}

SpectralField analyze(const GridField& grid, const BasisSpec& spec) {
  if (grid.spec.d != spec.d)
    throw std::invalid_argument("analyze: dimension mismatch");
  if (grid.grid_size < 2 * spec.n + 1)
    throw std::invalid_argument("analyze: grid too small for the requested band");
  const Index total = grid.total_points();
  if (grid.samples.size() != total)
    throw std::invalid_argument("analyze: sample count does not match grid size");

  std::vector<Complex> buffer(static_cast<std::size_t>(total));
  for (Index j = 0; j < total; ++j) buffer[static_cast<std::size_t>(j)] = grid.samples[j];
  fft::forward(buffer, grid_dims(spec, grid.grid_size));

  MultiIndexTable table(spec);
  const Index N = spec.max_index();
  const double norm = 1.0 / static_cast<double>(total);
  Eigen::VectorXcd coeffs(2 * N + 1);
  for (Index l = -N; l <= N; ++l) {
    coeffs[l + N] =
        buffer[static_cast<std::size_t>(fft_bin(table.k(l), spec.d, grid.grid_size))] * norm;
  }
  SpectralField field = make_field_unchecked(spec, std::move(coeffs));
  field.symmetrize();
  return field;
}

Eigen::VectorXd to_real_coords(const SpectralField& field) {
  const Index N = field.max_index();
  Eigen::VectorXd x(2 * N + 1);
  x[0] = field.coeff(0).real();
  const double sqrt2 = std::sqrt(2.0);
  for (Index l = 1; l <= N; ++l) {
    x[2 * l - 1] = sqrt2 * field.coeff(l).real();
    x[2 * l] = sqrt2 * field.coeff(l).imag();
  }
  return x;
}

SpectralField from_real_coords(const BasisSpec& spec, const Eigen::VectorXd& x) {
  const Index N = spec.max_index();
  if (x.size() != 2 * N + 1)
    throw std::invalid_argument("from_real_coords: coordinate length mismatch");
  Eigen::VectorXcd coeffs(2 * N + 1);
  coeffs[N] = Complex(x[0], 0.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Index l = 1; l <= N; ++l) {
    const Complex c(inv_sqrt2 * x[2 * l - 1], inv_sqrt2 * x[2 * l]);
    coeffs[N + l] = c;
    coeffs[N - l] = std::conj(c);
  }
  return make_field_unchecked(spec, std::move(coeffs));
}

double evaluate_field(const SpectralField& field, const MultiIndexTable& table,
                      const std::array<double, 3>& x) {
  const Index N = field.max_index();
  const BasisSpec& spec = field.spec();
  Complex sum(0.0, 0.0);
  for (Index l = -N; l <= N; ++l) {
    const MultiIndex k = table.k(l);
    double phase = 0.0;
    for (int r = 0; r < spec.d; ++r)
      phase += x[static_cast<std::size_t>(r)] * k[static_cast<std::size_t>(r)];
    sum += field.coeff(l) * std::polar(1.0, spec.c_d * phase);
  }
  return sum.real();
}

}  // namespace mlgp
