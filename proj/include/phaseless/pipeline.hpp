#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "phaseless/born_recon.hpp"
#include "phaseless/forward.hpp"
#include "phaseless/phase_recon.hpp"

namespace phaseless {

/// A stage of run_pipeline failed; partial outputs and the manifest remain.
class PipelineError : public Error {
 public:
  PipelineError(const std::string& stage, const std::string& what)
      : Error("stage '" + stage + "': " + what), stage_(stage) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Where the data for a Born reconstruction come from.
enum class BornDataSource {
  solver,     // Lippmann-Schwinger synthesis
  born_model  // first Born approximation by quadrature
};

struct PipelineConfig {
  std::filesystem::path scene_path;
  /// Replaces every inclusion amplitude when set.
  std::optional<double> amplitude;
  int boundary_points = 64;
  double k_min = 50.0;
  double k_max = 80.0;
  int k_count = 64;
  SynthesisOptions synthesis;

  std::vector<double> born_wavenumbers{60.0, 90.0};
  BornDataSource born_source = BornDataSource::solver;
  double born_quad_h = 0.01;
  BornOptions born;

  bool phase_enabled = true;
  PhaseOptions phase;

  ReconstructionGrid grid;
  /// Angles of the true-image sinogram, panel (b).
  int true_sinogram_angles = 180;
  bool postprocess = true;
  double disk_radius = 0.005;
  bool save_dataset = false;

  std::filesystem::path output_dir = "out";
};

/// Reads a JSON config; relative paths resolve against the config's folder.
/// Throws FormatError on malformed input.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base = {});

struct Artifact {
  std::string panel;
  std::string stage;
  std::string file;
  std::string description;
};

struct PipelineResult {
  std::vector<Artifact> artifacts;
  std::filesystem::path manifest;
};

/// synthesize -> Born at each requested k -> phase retrieval -> postprocess,
/// writing the figure panels (a)..(j) as CSV (plus PGM previews) and a
/// manifest.json listing every artifact with its stage and completion state.
/// The scene is read before anything is written. A failing stage rethrows as
/// PipelineError after the manifest records it.
PipelineResult run_pipeline(const PipelineConfig& config,
                            const std::function<void(const std::string&)>& log = {});

}  // namespace phaseless
