#pragma once

#include <vector>

#include "phaseless/dataset.hpp"
#include "phaseless/radon.hpp"

namespace phaseless {

/// Grid settings shared by both reconstruction pipelines.
struct ReconstructionGrid {
  /// Offsets and angles of the intermediate sinogram. n_angles <= 0 means
  /// "one angle column per boundary point", which matches the angles hit by
  /// chords between equispaced boundary points.
  int n_offsets = 257;
  int n_angles = 0;
  int image_size = 256;
  FbpOptions fbp;
};

/// Sinogram spec for a dataset: radius from the data, n_angles resolved.
SinogramSpec sinogram_spec_for(const BoundaryDataset& data, const ReconstructionGrid& grid);

struct BornOptions {
  /// l_B = (8 pi / k) |x - x0| sqrt(f). When false the intensity f itself is
  /// used instead of its square root.
  bool use_sqrt = true;
};

/// Radon-domain samples l_B(r, theta, k) for every ordered boundary pair.
/// Throws DomainError if k is not one of the dataset's wavenumbers.
std::vector<RadonSample> born_sinogram(const BoundaryDataset& data, double k, const BornOptions& options = {});

/// beta ~ R^{-1} l_B on the cross-section square (raw, not postprocessed).
Image2D reconstruct_born(const BoundaryDataset& data, double k, const ReconstructionGrid& grid = {},
                         const BornOptions& options = {});

}  // namespace phaseless
