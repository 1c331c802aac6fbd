#include <stdexcept>

#include "fft.hpp"
#include "msm/spectral.hpp"

namespace msm {

std::vector<Complex> forward_transform(const Grid& grid, std::span<const Complex> samples) {
  if (samples.size() != grid.size()) throw std::invalid_argument("sample count does not match grid");
  std::vector<Complex> out(grid.size());
  detail::dft2d(grid.n(), -1, samples.data(), out.data());
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<Complex> inverse_transform(const Grid& grid, std::span<const Complex> spectrum) {
  if (spectrum.size() != grid.size()) throw std::invalid_argument("coefficient count does not match grid");
  std::vector<Complex> out(grid.size());
  detail::dft2d(grid.n(), +1, spectrum.data(), out.data());
  return out;
}

ComplexField ComplexField::from_samples(const Grid& grid, std::vector<Complex> samples) {
  auto spectrum = forward_transform(grid, samples);
  return ComplexField(std::make_shared<const Data>(Data{grid, std::move(samples), std::move(spectrum)}));
}

ComplexField ComplexField::from_spectrum(const Grid& grid, std::vector<Complex> spectrum) {
  auto samples = inverse_transform(grid, spectrum);
  return ComplexField(std::make_shared<const Data>(Data{grid, std::move(samples), std::move(spectrum)}));
}

ComplexField ComplexField::zeros(const Grid& grid) { return constant(grid, 0.0); }

ComplexField ComplexField::constant(const Grid& grid, Complex value) {
  std::vector<Complex> spectrum(grid.size(), 0.0);
  spectrum[0] = value;
  return ComplexField(std::make_shared<const Data>(
      Data{grid, std::vector<Complex>(grid.size(), value), std::move(spectrum)}));
}

ComplexField ComplexField::from_function(const Grid& grid,
                                         const std::function<Complex(double, double)>& f) {
  std::vector<Complex> samples(grid.size());
  for (std::size_t i1 = 0; i1 < grid.n(); ++i1) {
    for (std::size_t i2 = 0; i2 < grid.n(); ++i2) {
      samples[grid.index(i1, i2)] = f(grid.coordinate(i1), grid.coordinate(i2));
    }
  }
  return from_samples(grid, std::move(samples));
}

namespace {

// Coefficient at -k for every k, so that conj(f)^(k) = conj(f^(-k)).
std::vector<Complex> reflected_conj(const Grid& grid, std::span<const Complex> spectrum) {
  const auto n = grid.n();
  std::vector<Complex> out(grid.size());
  for (std::size_t k1 = 0; k1 < n; ++k1) {
    const auto m1 = (n - k1) % n;
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const auto m2 = (n - k2) % n;
      out[grid.index(k1, k2)] = std::conj(spectrum[grid.index(m1, m2)]);
    }
  }
  return out;
}

}  // namespace

ComplexField ComplexField::conj() const {
  std::vector<Complex> samples(grid().size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = std::conj(data_->samples[i]);
  return ComplexField(std::make_shared<const Data>(
      Data{grid(), std::move(samples), reflected_conj(grid(), data_->spectrum)}));
}

ComplexField ComplexField::real_part() const {
  auto spectrum = reflected_conj(grid(), data_->spectrum);
  std::vector<Complex> samples(grid().size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = data_->samples[i].real();
    spectrum[i] = 0.5 * (data_->spectrum[i] + spectrum[i]);
  }
  return ComplexField(std::make_shared<const Data>(Data{grid(), std::move(samples), std::move(spectrum)}));
}

ComplexField ComplexField::imag_part() const {
  auto spectrum = reflected_conj(grid(), data_->spectrum);
  const Complex half_over_i(0.0, -0.5);
  std::vector<Complex> samples(grid().size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = data_->samples[i].imag();
    spectrum[i] = half_over_i * (data_->spectrum[i] - spectrum[i]);
  }
  return ComplexField(std::make_shared<const Data>(Data{grid(), std::move(samples), std::move(spectrum)}));
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  const Complex c[] = {1.0, 1.0};
  const ComplexField f[] = {a, b};
  return linear_combination(c, f);
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  const Complex c[] = {1.0, -1.0};
  const ComplexField f[] = {a, b};
  return linear_combination(c, f);
}

ComplexField operator*(Complex c, const ComplexField& f) {
  const ComplexField fs[] = {f};
  return linear_combination(std::span<const Complex>(&c, 1), fs);
}

ComplexField linear_combination(std::span<const Complex> coeffs, std::span<const ComplexField> fields) {
  if (coeffs.size() != fields.size() || fields.empty()) {
    throw std::invalid_argument("linear_combination needs matching, nonempty inputs");
  }
  const Grid& grid = fields[0].grid();
  std::vector<Complex> samples(grid.size(), 0.0);
  std::vector<Complex> spectrum(grid.size(), 0.0);
  for (std::size_t j = 0; j < fields.size(); ++j) {
    require_same_grid(grid, fields[j].grid());
    const auto c = coeffs[j];
    const auto s = fields[j].samples();
    const auto h = fields[j].spectrum();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      samples[i] += c * s[i];
      spectrum[i] += c * h[i];
    }
  }
  return ComplexField(std::make_shared<const ComplexField::Data>(
      ComplexField::Data{grid, std::move(samples), std::move(spectrum)}));
}

}  // namespace msm
