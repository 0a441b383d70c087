#pragma once

#include <map>
#include <string>
#include <vector>

#include "phaseless/types.hpp"

namespace phaseless {

/// One smooth inclusion: amplitude * bump((x - center) / radius).
struct Inclusion {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
  double amplitude = 0.0;
};

/// A dielectric perturbation beta(x) made of bump inclusions inside the ball
/// of radius `domain_radius`. Every inclusion must fit in the cube inscribed
/// in that ball; the constructor throws DomainError otherwise.
class Scene {
 public:
  Scene() = default;
  explicit Scene(std::vector<Inclusion> inclusions, double domain_radius = 1.0);

  const std::vector<Inclusion>& inclusions() const noexcept { return inclusions_; }
  double domain_radius() const noexcept { return domain_radius_; }
  bool empty() const noexcept { return inclusions_.empty(); }

  /// Half side of the inscribed cube, R * sqrt(2) / 2.
  double cube_half_width() const noexcept;
  double max_amplitude() const noexcept;

  /// True when x lies in the open support of some inclusion.
  bool in_support(const Vec3& x) const noexcept;

 private:
  std::vector<Inclusion> inclusions_;
  double domain_radius_ = 1.0;
};

/// C-infinity bump exp(1 - 1/(1 - |x|^2)) on the unit ball, zero outside.
double bump(const Vec3& x) noexcept;

/// beta(x) as the sum of all inclusion contributions.
double beta_at(const Scene& scene, const Vec3& x) noexcept;

/// Integral of beta along the straight segment [a, b], by composite midpoint
/// rule restricted to the parts of the segment crossing each inclusion.
double segment_integral(const Scene& scene, const Vec3& a, const Vec3& b,
                        int samples_per_inclusion = 2000);

/// The five two-inclusion scenes "a".."e" used for figure reproduction.
std::map<std::string, Scene> standard_scenes();

/// Copy of `scene` with every amplitude replaced by `gamma`.
Scene with_amplitude(const Scene& scene, double gamma);

}  // namespace phaseless
