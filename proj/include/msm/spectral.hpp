#pragma once

// Periodic-grid fields, Fourier multipliers, dealiased products and norms.
//
// The torus [0, length)^2 carries the normalized measure (total mass 1), so
// the forward transform is f^(k) = n^-2 sum_x f(x) e^{-i k.x} and constant
// fields have unit L^p norm for every p.

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace msm {

using Complex = std::complex<double>;

enum class Axis : int { x1 = 1, x2 = 2 };

class Grid {
 public:
  /// Throws std::invalid_argument unless n >= 8 is a power of two and
  /// length > 0.
  Grid(std::size_t n, double length);

  std::size_t n() const noexcept { return n_; }
  double length() const noexcept { return length_; }
  std::size_t size() const noexcept { return n_ * n_; }
  double spacing() const noexcept { return length_ / static_cast<double>(n_); }
  double coordinate(std::size_t i) const noexcept { return static_cast<double>(i) * spacing(); }

  /// Signed mode index in (-n/2, n/2] for array index i.
  long mode(std::size_t i) const noexcept;
  /// Physical wavenumber mode(i) * 2pi / length.
  double wavenumber(std::size_t i) const noexcept;
  double fundamental() const noexcept;
  /// Largest |xi| over the grid (the corner mode).
  double max_wavenumber() const noexcept;
  bool is_nyquist(std::size_t i) const noexcept { return i == n_ / 2; }

  std::size_t index(std::size_t i1, std::size_t i2) const noexcept { return i1 * n_ + i2; }

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.n_ == b.n_ && a.length_ == b.length_;
  }

 private:
  std::size_t n_;
  double length_;
};

void require_same_grid(const Grid& a, const Grid& b);

/// Immutable complex scalar field carrying both its samples and its
/// spectral coefficients. Copies share storage.
class ComplexField {
 public:
  static ComplexField from_samples(const Grid& grid, std::vector<Complex> samples);
  static ComplexField from_spectrum(const Grid& grid, std::vector<Complex> spectrum);
  static ComplexField zeros(const Grid& grid);
  static ComplexField constant(const Grid& grid, Complex value);
  static ComplexField from_function(const Grid& grid,
                                    const std::function<Complex(double, double)>& f);

  const Grid& grid() const noexcept { return data_->grid; }
  std::span<const Complex> samples() const noexcept { return data_->samples; }
  std::span<const Complex> spectrum() const noexcept { return data_->spectrum; }
  Complex at(std::size_t i1, std::size_t i2) const { return data_->samples[grid().index(i1, i2)]; }
  Complex coefficient(std::size_t k1, std::size_t k2) const {
    return data_->spectrum[grid().index(k1, k2)];
  }
  /// Zero-mode coefficient, i.e. the average over the torus.
  Complex mean() const { return data_->spectrum[0]; }

  ComplexField conj() const;
  ComplexField real_part() const;
  ComplexField imag_part() const;

  friend ComplexField operator+(const ComplexField& a, const ComplexField& b);
  friend ComplexField operator-(const ComplexField& a, const ComplexField& b);
  friend ComplexField operator*(Complex c, const ComplexField& f);
  friend ComplexField operator*(const ComplexField& f, Complex c) { return c * f; }
  ComplexField operator-() const { return Complex(-1.0) * *this; }

  friend ComplexField linear_combination(std::span<const Complex> coeffs,
                                         std::span<const ComplexField> fields);

 private:
  struct Data {
    Grid grid;
    std::vector<Complex> samples;
    std::vector<Complex> spectrum;
  };
  explicit ComplexField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Returns sum_i c_i f_i, combining both representations without a
/// transform.
ComplexField linear_combination(std::span<const Complex> coeffs,
                                std::span<const ComplexField> fields);

/// Spectral coefficients of f (normalized so that the constant 1 maps to a
/// unit zero mode).
std::vector<Complex> forward_transform(const Grid& grid, std::span<const Complex> samples);
std::vector<Complex> inverse_transform(const Grid& grid, std::span<const Complex> spectrum);

class FourierMultiplier {
 public:
  using Symbol = std::function<Complex(double xi1, double xi2)>;

  /// The symbol is sampled at every nonzero wavenumber; the zero mode takes
  /// zero_mode_value.
  FourierMultiplier(const Grid& grid, const Symbol& symbol, Complex zero_mode_value);

  static FourierMultiplier identity(const Grid& grid);
  /// i xi_j, with the Nyquist mode along axis j dropped so real fields stay real.
  static FourierMultiplier derivative(const Grid& grid, Axis axis);
  /// i xi_j / |xi|, zero mode 0.
  static FourierMultiplier riesz(const Grid& grid, Axis axis);
  /// -1/|xi|^2, zero mode 0.
  static FourierMultiplier inverse_laplacian(const Grid& grid);
  /// exp(-i t |xi|^2), the free propagator e^{it Laplacian}.
  static FourierMultiplier schrodinger_propagator(const Grid& grid, double t);
  /// (1 + |xi|^2)^{s/2}.
  static FourierMultiplier bessel_potential(const Grid& grid, double s);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  Complex zero_mode_value() const noexcept { return values_[0]; }

  /// Composition (pointwise product of symbols).
  friend FourierMultiplier operator*(const FourierMultiplier& a, const FourierMultiplier& b);

 private:
  FourierMultiplier(const Grid& grid, std::vector<Complex> values)
      : grid_(grid), values_(std::move(values)) {}
  Grid grid_;
  std::vector<Complex> values_;
};

/// Spectral interpolation onto another grid of the same length. Modes with
/// |k_i| < min(n, m)/2 are kept; everything else is dropped.
ComplexField resample(const ComplexField& f, const Grid& target);

ComplexField apply_multiplier(const ComplexField& f, const FourierMultiplier& m);
/// Spectral d/dx_j; the Nyquist mode along axis j is dropped.
ComplexField derivative(const ComplexField& f, Axis axis);
ComplexField laplacian(const ComplexField& f);

/// Samples of a band-limited field on the 2n x 2n grid, used to form exact
/// quadratic products. Only ever multiply two lifted fields together before
/// projecting back; a third factor would alias.
class PaddedField {
 public:
  static PaddedField lift(const ComplexField& f);

  const Grid& base_grid() const noexcept { return base_; }
  std::span<const Complex> samples() const noexcept { return samples_; }

  friend PaddedField operator*(const PaddedField& a, const PaddedField& b);
  friend PaddedField operator+(const PaddedField& a, const PaddedField& b);
  friend PaddedField operator-(const PaddedField& a, const PaddedField& b);
  friend PaddedField operator*(Complex c, const PaddedField& a);
  PaddedField conj() const;
  PaddedField real_part() const;
  PaddedField imag_part() const;

  /// Forward transform on the fine grid, truncated to the modes with
  /// |k_i| < n/2 of the base grid (the Nyquist row and column are dropped).
  ComplexField project() const;

 private:
  PaddedField(const Grid& base, std::vector<Complex> s) : base_(base), samples_(std::move(s)) {}
  Grid base_;
  std::vector<Complex> samples_;
};

/// Exact (alias-free) product of the trigonometric interpolants of f and g,
/// truncated back to the base grid.
ComplexField pointwise_product(const ComplexField& f, const ComplexField& g);

/// (sum_k (1 + |xi|^2)^s |f^(k)|^2)^{1/2}.
double sobolev_norm(const ComplexField& f, double s);
/// Normalized-measure L^p norm; p = infinity gives the grid maximum.
double lp_norm(const ComplexField& f, double p);
/// Coefficient l^2 norm (Parseval partner of lp_norm(f, 2)).
double coefficient_norm(const ComplexField& f);
double max_abs(const ComplexField& f);
/// Grid maximum of the Hilbert-Schmidt norm of the Jacobian of (v1, v2).
double jacobian_sup(const ComplexField& v1, const ComplexField& v2);
/// <f, g> = integral of f conj(g) under the normalized measure.
Complex inner_product(const ComplexField& f, const ComplexField& g);

}  // namespace msm
