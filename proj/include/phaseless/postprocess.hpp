#pragma once

#include <vector>

#include "phaseless/radon.hpp"

namespace phaseless {

/// Replaces each node by the mean over the closed disk of radius
/// `disk_radius` (physical units, clipped to the image), then sets negative
/// values to zero. Throws DomainError for a negative radius.
Image2D smooth_and_clip(const Image2D& image, double disk_radius = 0.005);

struct Peak {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// Strict local maxima (8-neighbourhood) sorted by decreasing value, greedily
/// thinned so that kept peaks are at least `min_separation` apart.
std::vector<Peak> find_peaks(const Image2D& image, int count, double min_separation);

/// ||I - I(-x, y)|| / ||I|| in L2 (mirror about x = 0); 0 for a zero image.
double mirror_asymmetry(const Image2D& image);

}  // namespace phaseless
