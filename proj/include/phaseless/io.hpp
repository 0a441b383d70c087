#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "phaseless/dataset.hpp"
#include "phaseless/phantom.hpp"
#include "phaseless/phase_recon.hpp"
#include "phaseless/radon.hpp"

namespace phaseless::io {

namespace fs = std::filesystem;

// Scene JSON:
//   {"domain_radius": 1, "inclusions": [{"center": [x, y, z], "radius": r, "amplitude": g}]}
Scene scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const Scene& scene);
Scene read_scene(const fs::path& path);
void write_scene(const fs::path& path, const Scene& scene);

// Dataset CSV: '#'-prefixed header lines with radius, angles, wavenumbers and
// the complex flag, then rows source,receiver,k_index,f[,re,im].
void write_dataset(const fs::path& path, const BoundaryDataset& data);
BoundaryDataset read_dataset(const fs::path& path);

// Radon samples as r,theta,value rows. A regular sinogram is written in the
// same layout, so either can be read back as samples.
void write_samples(const fs::path& path, std::span<const RadonSample> samples);
void write_sinogram(const fs::path& path, const Sinogram& sinogram);
std::vector<RadonSample> read_samples(const fs::path& path);

// Image CSV: x,y,value rows, x fastest.
void write_image(const fs::path& path, const Image2D& image);
Image2D read_image(const fs::path& path);
/// 16-bit binary graymap, min..max mapped to 0..65535, row 0 at the top (max y).
void write_pgm(const fs::path& path, const Image2D& image);
/// Same, for a sinogram (rows = offsets, columns = angles).
void write_pgm(const fs::path& path, const Sinogram& sinogram);

void write_travel_times(const fs::path& path, const TravelTimeField& field);
void write_validation(const fs::path& path, std::span<const ValidationRow> rows);

}  // namespace phaseless::io
