#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phaseless/born_recon.hpp"
#include "phaseless/dataset.hpp"
#include "phaseless/quadrature.hpp"
#include "phaseless/radon.hpp"

namespace phaseless {

/// F1(k) = int_{k1}^k f and F2(k) = int_{k1}^k F1 on a uniform k grid.
struct Antiderivatives {
  std::vector<double> first;
  std::vector<double> second;
};

Antiderivatives cumulative_antiderivatives(std::span<const double> f, double dk,
                                           QuadratureRule rule = QuadratureRule::trapezoid);

/// Least-squares fit of f(k) + xi1 F2(k) + xi2 (k-k1)^2/2 + xi3 (k-k1) + xi4 = 0,
/// the identity satisfied by f = a + b cos(k alpha) with
///   xi = (alpha^2, -alpha^2 a, alpha b sin(k1 alpha), -a - b cos(k1 alpha)).
struct CosineModelFit {
  std::array<double, 4> xi{};
  /// L2(k1, k2) norm of the left-hand side at the fitted xi.
  double residual = 0.0;
  double k1 = 0.0;

  double alpha() const noexcept;
  /// a = -xi2 / xi1 (NaN when xi1 == 0).
  double mean_level() const noexcept;
  /// b recovered from xi4 and a (NaN when undetermined).
  double oscillation() const noexcept;
};

struct FitOptions {
  /// When set, solves the regularized normal equations
  /// (F^T F + eps_reg Id) xi = F^T f of the unscaled 4x4 Gram system.
  /// When empty, the Gram system is first scaled to unit diagonal and solved
  /// with the ridge term eps_relative * trace / 4.
  std::optional<double> eps_reg;
  double eps_relative = 1e-10;
  QuadratureRule rule = QuadratureRule::trapezoid;
};

/// `f` and `F2` are sampled on the uniform grid k1 .. k2.
/// Throws DomainError on non-finite input or a non-positive eps_reg.
CosineModelFit fit_cosine_model(std::span<const double> f, std::span<const double> F2, double k1, double k2,
                                const FitOptions& options = {});

/// tau = sqrt(|xi1|) + d.
double extract_travel_time(const CosineModelFit& fit, double d);

struct AmplitudeEstimate {
  double value = 0.0;
  bool valid = false;
  int samples_used = 0;
};

/// Solves A^2 - cos(k alpha)/(2 pi d) A + 1/(16 pi^2 d^2) - f(k) = 0 per k
/// (alpha = tau - d), keeps the real root closest to 1/(4 pi d) and averages
/// over the wavenumbers with a real root.
AmplitudeEstimate extract_amplitude(std::span<const double> f, double tau, double d,
                                    std::span<const double> wavenumbers);

/// (1/(k2-k1)) int |u| dk.
double reference_amplitude(std::span<const Complex> u, std::span<const double> wavenumbers,
                           QuadratureRule rule = QuadratureRule::cubic);

/// tau from Re int i (u(k) - u(k1)) conj(G(k)) dk / int |G|^2 dk with
/// G(k) = int_{k1}^k u. Throws DomainError when int |G|^2 vanishes.
double reference_travel_time(std::span<const Complex> u, std::span<const double> wavenumbers,
                             QuadratureRule rule = QuadratureRule::cubic);

/// Pair flags indexed source * n + receiver: 1 when the pair's L2(k1, k2)
/// norm of |u_sc| exceeds eps_thr times the norm over all pairs and
/// wavenumbers (pairs weighted by the boundary arc length R dphi each).
std::vector<std::uint8_t> forward_scatter_mask(const BoundaryDataset& data, double eps_thr);

struct PhaseOptions {
  FitOptions fit;
  double eps_thr = 4e-4;
  /// Delays alpha below this are treated as unresolvable (tau := d).
  /// Negative selects 2 pi / (10 (k2 - k1)).
  double min_alpha = -1.0;
};

struct PairEstimate {
  int source = 0;
  int receiver = 0;
  double distance = 0.0;
  double tau = 0.0;
  double amplitude = 0.0;
  bool amplitude_valid = false;
  /// Passed the forward-scattering test.
  bool forward = false;
  /// Forward pair whose fitted delay is above min_alpha; tau comes from the fit.
  bool resolved = false;
  CosineModelFit fit;
};

/// Per-pair travel times and amplitudes recovered from intensity data.
struct TravelTimeField {
  double radius = 1.0;
  std::vector<double> angles;
  std::vector<PairEstimate> pairs;
};

/// Runs the cosine fit on every ordered pair, applies the forward-scattering
/// mask and the identifiability threshold. Requires uniform wavenumbers.
TravelTimeField recover_travel_times(const BoundaryDataset& data, const PhaseOptions& options = {});

/// Radon samples (chord coordinates, tau - |x - x0|).
std::vector<RadonSample> delay_samples(const TravelTimeField& field);

/// beta ~ R^{-1}(tau - |x - x0|).
Image2D reconstruct_kinematic(const TravelTimeField& field, const ReconstructionGrid& grid = {});

/// One row of the fitted-vs-reference comparison.
struct ValidationRow {
  int source = 0;
  int receiver = 0;
  double tau_fit = 0.0;
  double tau_ref = 0.0;
  double amplitude_fit = 0.0;
  double amplitude_ref = 0.0;
};

/// Compares recovered (tau, A) with the reference formulas applied to the
/// total field u = u_sc + u0. Requires a dataset with complex values.
std::vector<ValidationRow> validation_table(const BoundaryDataset& data, const TravelTimeField& field);

}  // namespace phaseless
