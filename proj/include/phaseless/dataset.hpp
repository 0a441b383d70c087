#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phaseless/types.hpp"

namespace phaseless {

/// Uniform grid of `count` wavenumbers on [k_min, k_max].
class FrequencyGrid {
 public:
  FrequencyGrid(double k_min, double k_max, int count);

  double k_min() const noexcept { return k_min_; }
  double k_max() const noexcept { return k_max_; }
  int count() const noexcept { return count_; }
  double step() const noexcept { return (k_max_ - k_min_) / (count_ - 1); }
  std::vector<double> samples() const;

 private:
  double k_min_, k_max_;
  int count_;
};

/// Equispaced angles 2*pi*j/n on the measurement circle.
std::vector<double> boundary_angles(int n);

/// Phaseless measurements f(x, x0, k) = |u_sc|^2 for every ordered pair of
/// distinct points on the circle S0(R) = {|x| = R, x3 = 0} and every
/// wavenumber. Values are stored densely as [source][receiver][k]; the
/// diagonal source == receiver is kept at zero and never exported.
class BoundaryDataset {
 public:
  BoundaryDataset() = default;
  BoundaryDataset(double radius, std::vector<double> angles, std::vector<double> wavenumbers,
                  bool store_complex);

  double radius() const noexcept { return radius_; }
  const std::vector<double>& angles() const noexcept { return angles_; }
  const std::vector<double>& wavenumbers() const noexcept { return wavenumbers_; }
  int boundary_count() const noexcept { return static_cast<int>(angles_.size()); }
  int frequency_count() const noexcept { return static_cast<int>(wavenumbers_.size()); }
  bool has_complex() const noexcept { return !scattered_.empty(); }

  Vec3 point(int i) const;
  /// |x_receiver - x_source|.
  double distance(int source, int receiver) const;

  /// Index of a wavenumber on the grid; throws DomainError if absent.
  int frequency_index(double k) const;
  /// True if the wavenumbers are a uniform grid with at least two samples.
  bool uniform_frequencies() const noexcept;

  double intensity(int source, int receiver, int k_index) const {
    return intensity_[offset(source, receiver, k_index)];
  }
  void set_intensity(int source, int receiver, int k_index, double value) {
    intensity_[offset(source, receiver, k_index)] = value;
  }
  /// Intensity over all wavenumbers for one pair.
  std::span<const double> intensity_series(int source, int receiver) const {
    return {intensity_.data() + offset(source, receiver, 0), wavenumbers_.size()};
  }

  Complex scattered(int source, int receiver, int k_index) const;
  std::span<const Complex> scattered_series(int source, int receiver) const;
  /// Stores u_sc and sets f = |u_sc|^2 (and u_sc itself in complex mode).
  void set_scattered(int source, int receiver, int k_index, Complex value);

  /// Multiplies every stored intensity by `factor` (complex values by sqrt).
  void scale_intensity(double factor);

 private:
  std::size_t offset(int source, int receiver, int k_index) const {
    const std::size_t n = angles_.size();
    return (static_cast<std::size_t>(source) * n + receiver) * wavenumbers_.size() + k_index;
  }

  double radius_ = 1.0;
  std::vector<double> angles_;
  std::vector<double> wavenumbers_;
  std::vector<double> intensity_;
  std::vector<Complex> scattered_;
};

}  // namespace phaseless
