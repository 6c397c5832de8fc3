#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "expspec/homotopy.hpp"
#include "expspec/sphere.hpp"

namespace expspec {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

using Rotation3 = std::array<std::array<double, 3>, 3>;

/// Closed polyline in R^3: the last vertex joins back to the first.
/// Needs at least 16 vertices with no two consecutive ones equal.
class PolylineCurve3 {
 public:
  explicit PolylineCurve3(std::vector<Vec3> vertices);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool closed() const { return true; }

  PolylineCurve3 reversed() const;
  /// rotation * v + translation for every vertex.
  PolylineCurve3 transformed(const Rotation3& rotation, const Vec3& translation) const;

 private:
  std::vector<Vec3> vertices_;
};

inline constexpr std::size_t kMinPolylineVertices = 16;
inline constexpr double kMinCurveSeparation = 1e-3;

struct LinkingResult {
  double raw = 0.0;
  long rounded = 0;
  double residual = 0.0;  ///< |raw - rounded|
};

/// Samples of the fibre {e^{i theta} w} of h over p, theta = 2 pi k / segments.
/// w is the closed-form preimage with a real non-negative w0 (p2 >= 0) or w1 (p2 < 0).
std::vector<SpherePoint3> hopf_fiber(const S2Point& p, int segments);

/// (1/sqrt2, i/sqrt2): at distance sqrt(2 - sqrt2) ~ 0.765 from both pole fibres.
SpherePoint3 default_projection_pole();

inline constexpr double kMinPoleDistance = 0.2;

/// Stereographic projection of S^3 subset R^4 from `pole` onto the hyperplane
/// orthogonal to it, in an orthonormal basis (u1, u2, u3) of that hyperplane
/// with (u1, u2, u3, pole) positively oriented. NearPole within 1e-6 of the pole.
Vec3 stereographic(const SpherePoint3& w, const SpherePoint3& pole);

PolylineCurve3 project_curve(const std::vector<SpherePoint3>& samples, const SpherePoint3& pole);

/// Smallest vertex-to-segment distance between the two curves (both directions).
double min_vertex_segment_distance(const PolylineCurve3& c1, const PolylineCurve3& c2);

/// Gauss linking integral by the midpoint rule over segment pairs:
///   (1/4 pi) sum_ij (m_i - m_j) . (d_i x d_j) / |m_i - m_j|^3.
/// Throws CurvesTooClose when the curves come within kMinCurveSeparation.
LinkingResult gauss_linking(const PolylineCurve3& c1, const PolylineCurve3& c2);

struct HopfInvariantOptions {
  S2Point first{0.0, 1.0};
  S2Point second{0.0, -1.0};
  SpherePoint3 pole = default_projection_pole();
  /// Negative control: replace the second fibre by the circle
  /// (cos(pi/3) e^{i theta}, sin(pi/3)), which is not a fibre and bounds a disk
  /// missing the first fibre.
  bool sabotage_second_fiber = false;
};

/// Linking number of two fibres of h, i.e. its Hopf invariant. Orientation:
/// theta increasing on both fibres, right-handed frame as in stereographic().
LinkingResult hopf_invariant_of_h(int segments, const HopfInvariantOptions& options = {});

/// Projected fibres used by hopf_invariant_of_h.
std::array<PolylineCurve3, 2> hopf_fiber_curves(int segments,
                                                const HopfInvariantOptions& options = {});

/// CSV with header x,y,z and 17 significant digits; the curve is implicitly closed.
void write_polyline_csv(std::ostream& out, const PolylineCurve3& curve);

}  // namespace expspec
