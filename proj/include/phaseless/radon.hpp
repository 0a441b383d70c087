#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "phaseless/types.hpp"

namespace phaseless {

/// Real image on the n x n node grid covering [-L, L]^2, L = R sqrt(2) / 2.
/// Node (ix, iy) sits at (-L + ix * 2L/(n-1), -L + iy * 2L/(n-1)).
class Image2D {
 public:
  Image2D() = default;
  Image2D(int n, double half_width);

  int size() const noexcept { return n_; }
  double half_width() const noexcept { return half_width_; }
  double pixel() const noexcept { return 2.0 * half_width_ / (n_ - 1); }
  double coordinate(int i) const noexcept { return -half_width_ + i * pixel(); }

  double& at(int ix, int iy) { return values_[static_cast<std::size_t>(iy) * n_ + ix]; }
  double at(int ix, int iy) const { return values_[static_cast<std::size_t>(iy) * n_ + ix]; }
  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Bilinear interpolation, zero outside the square.
  double sample(double x, double y) const noexcept;

 private:
  int n_ = 0;
  double half_width_ = 0.0;
  std::vector<double> values_;
};

/// Image of the cross-section of a scalar field, sampled at the nodes.
Image2D sample_image(const std::function<double(double, double)>& field, int n, double half_width);

/// Regular Radon-domain grid: offsets r_j = -R + (j + 1/2) 2R/n_offsets and
/// angles theta_m = m pi / n_angles.
struct SinogramSpec {
  int n_offsets = 257;
  int n_angles = 180;
  double radius = 1.0;
};

/// Radon data s(r, theta) for the lines {x : x . (cos theta, sin theta) = r}.
/// Values are stored angle-major: value(j, m) at index m * n_offsets + j.
class Sinogram {
 public:
  Sinogram() = default;
  explicit Sinogram(const SinogramSpec& spec);

  const SinogramSpec& spec() const noexcept { return spec_; }
  int n_offsets() const noexcept { return spec_.n_offsets; }
  int n_angles() const noexcept { return spec_.n_angles; }
  double offset_step() const noexcept { return 2.0 * spec_.radius / spec_.n_offsets; }
  double offset(int j) const noexcept { return -spec_.radius + (j + 0.5) * offset_step(); }
  double angle(int m) const noexcept { return kPi * m / spec_.n_angles; }

  double& value(int j, int m) { return values_[index(j, m)]; }
  double value(int j, int m) const { return values_[index(j, m)]; }
  bool filled(int j, int m) const { return filled_[index(j, m)] != 0; }
  void set(int j, int m, double v) {
    values_[index(j, m)] = v;
    filled_[index(j, m)] = 1;
  }
  bool complete() const noexcept;

  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::size_t index(int j, int m) const { return static_cast<std::size_t>(m) * spec_.n_offsets + j; }

  SinogramSpec spec_;
  std::vector<double> values_;
  std::vector<std::uint8_t> filled_;
};

/// One irregular Radon-domain sample.
struct RadonSample {
  double r = 0.0;
  double theta = 0.0;
  double value = 0.0;
};

struct ChordCoordinates {
  double r = 0.0;
  double theta = 0.0;  // in [0, pi)
};

/// Radon coordinates of the line through two points of the circle |x| = R:
/// theta is the mean polar angle reduced to [0, pi) and r = R cos of half the
/// angular separation, sign-flipped whenever the reduction shifts by pi.
/// Throws DomainError for points off the circle or coincident points.
ChordCoordinates chord_coordinates(const Vec2& x, const Vec2& x0, double R);

/// Maps (r, theta) with arbitrary theta onto theta in [0, pi).
ChordCoordinates reduce_angle(double r, double theta);

/// Line integrals of the image by midpoint sampling with bilinear
/// interpolation, `oversampling` samples per pixel.
Sinogram radon_forward(const Image2D& image, const SinogramSpec& spec, int oversampling = 2);

struct FbpOptions {
  /// Fraction of the band rolled off by the raised-cosine taper
  /// (1 = Hann window over the full band, 0 = plain ramp).
  double taper_fraction = 1.0;
};

/// Filtered backprojection onto an n x n image over [-R sqrt(2)/2, R sqrt(2)/2]^2.
/// Throws DomainError if the sinogram has unfilled cells.
Image2D radon_inverse(const Sinogram& sinogram, int n, const FbpOptions& options = {});

/// Bins irregular samples onto a regular grid (mean of the samples per cell),
/// fills gaps inside each angle column by linear interpolation along r, sets
/// cells beyond the outermost sample of a column to zero, and fills columns
/// without any sample by linear interpolation between neighbouring columns
/// (using s(r, theta + pi) = s(-r, theta)). Throws DomainError on empty input.
Sinogram resample_to_sinogram(std::span<const RadonSample> samples, const SinogramSpec& spec);

}  // namespace phaseless
