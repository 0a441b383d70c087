#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "phaseless/dataset.hpp"
#include "phaseless/phantom.hpp"
#include "phaseless/types.hpp"

namespace phaseless {

/// Incident spherical wave exp(-ik|x-x0|) / (4 pi |x-x0|).
/// Throws DomainError when x == x0.
Complex incident_field(const Vec3& x, const Vec3& x0, double k);

/// Uniform voxelization of the support of beta. The voxel lattice spans the
/// bounding box of all inclusions; only voxels whose center has beta > 0
/// become unknowns.
class VolumeGrid {
 public:
  VolumeGrid() = default;
  VolumeGrid(const Scene& scene, double spacing);

  double spacing() const noexcept { return spacing_; }
  /// Lattice dimensions of the bounding box.
  const std::array<int, 3>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  Vec3 center(std::size_t voxel) const;
  double beta(std::size_t voxel) const noexcept { return beta_[voxel]; }
  std::span<const double> beta_values() const noexcept { return beta_; }
  /// Flat lattice index (i + nx * (j + ny * l)) of each voxel.
  std::span<const std::size_t> cells() const noexcept { return cells_; }
  std::array<int, 3> lattice_index(std::size_t voxel) const;

  /// True when x falls inside the closed cube of some voxel.
  bool contains(const Vec3& x) const noexcept;

 private:
  double spacing_ = 0.0;
  Vec3 origin_ = Vec3::Zero();  // center of lattice cell (0, 0, 0)
  std::array<int, 3> dims_{0, 0, 0};
  std::vector<std::size_t> cells_;
  std::vector<double> beta_;
};

/// Voxel spacing that resolves the shortest wavelength inside the scatterer,
/// 2 pi / (ppw * k * sqrt(1 + gamma)).
double spacing_for(double k_max, double max_amplitude, double points_per_wavelength);

/// Mean of exp(-ik rho) / (4 pi rho) over the ball whose volume equals one
/// voxel of side h; replaces the singular self-interaction.
Complex self_cell_kernel(double k, double h);

struct SolverOptions {
  double tol = 1e-6;
  int max_iterations = 2000;
  int restart = 80;
  /// Below this many points per wavelength a warning is emitted.
  double min_points_per_wavelength = 10.0;
  std::function<void(const std::string&)> on_warning;
};

/// Total field on the voxels of a VolumeGrid for one source and wavenumber.
struct ComplexVolumeField {
  Vec3 source = Vec3::Zero();
  double k = 0.0;
  std::vector<Complex> values;
  double residual = 0.0;
  int iterations = 0;
};

/// Discretized Lippmann-Schwinger operator
///   (A u)(x) = u(x) - k^2 h^3 sum_xi K(x, xi) beta(xi) u(xi)
/// for one wavenumber. The kernel is translation invariant on the voxel
/// lattice, so A is applied by zero-padded FFT convolution over the bounding
/// box. Instances own FFT scratch space and must not be shared across
/// threads.
class LippmannSchwingerOperator {
 public:
  LippmannSchwingerOperator(const VolumeGrid& grid, double k);
  ~LippmannSchwingerOperator();
  LippmannSchwingerOperator(LippmannSchwingerOperator&&) noexcept;
  LippmannSchwingerOperator& operator=(LippmannSchwingerOperator&&) noexcept;

  double wavenumber() const noexcept { return k_; }
  const VolumeGrid& grid() const noexcept { return grid_; }

  /// y = A u.
  void apply(std::span<const Complex> u, std::span<Complex> y) const;
  /// ||rhs - A u|| / ||rhs||.
  double relative_residual(std::span<const Complex> u, std::span<const Complex> rhs) const;

  /// Solves A u = u0(., x0) by restarted GMRES starting from u0.
  /// Throws ConvergenceError if the iteration cap is reached.
  ComplexVolumeField solve(const Vec3& x0, const SolverOptions& options) const;

 private:
  struct Impl;
  VolumeGrid grid_;
  double k_;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper: builds the operator and solves for one source.
ComplexVolumeField solve_total_field(const Scene& scene, const VolumeGrid& grid, const Vec3& x0,
                                     double k, double tol);

/// u_sc(x) = k^2 h^3 sum_xi K(x, xi) beta(xi) u(xi) for x outside the voxels.
Complex scattered_field_at(const ComplexVolumeField& field, const VolumeGrid& grid, const Vec3& x);

/// First Born approximation of u_sc by direct midpoint quadrature of
///   k^2 int K(x, xi) beta(xi) u0(xi, x0) dxi
/// over each inclusion at spacing about quad_h. No linear solve involved.
Complex born_scattered_field(const Scene& scene, const Vec3& x, const Vec3& x0, double k,
                             double quad_h);

struct SynthesisOptions {
  double points_per_wavelength = 10.0;
  /// Overrides the spacing derived from points_per_wavelength when > 0.
  double spacing = 0.0;
  SolverOptions solver;
  bool store_complex = false;
  /// Called after each (k index, source index) solve.
  std::function<void(int, int)> on_progress;
};

/// Solves once per (source, k) with sources = receivers = n_boundary
/// equispaced points on S0(R) and records f = |u_sc|^2 at all receivers.
BoundaryDataset synthesize_dataset(const Scene& scene, int n_boundary,
                                   const std::vector<double>& wavenumbers,
                                   const SynthesisOptions& options = {});
BoundaryDataset synthesize_dataset(const Scene& scene, int n_boundary, const FrequencyGrid& freqs,
                                   const SynthesisOptions& options = {});

/// Same layout as synthesize_dataset but with u_sc replaced by its first Born
/// approximation computed by quadrature at spacing quad_h.
BoundaryDataset synthesize_born_dataset(const Scene& scene, int n_boundary,
                                        const std::vector<double>& wavenumbers, double quad_h,
                                        bool store_complex = false);

}  // namespace phaseless
