#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "contri/error.hpp"
#include "contri/geometry.hpp"
#include "contri/symmetry.hpp"

namespace contri {

template <class Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

/// Coefficients of x2 dx1 - x1 dx2 + y2 dy1 - y1 dy2 at p = (x1, y1, x2, y2).
template <class Scalar>
Vector4<Scalar> contact_form_beta(const Vector4<Scalar>& p, Scalar tol = Scalar(1e-12)) {
  using std::abs;
  if (abs(p.norm() - Scalar(1)) > tol) throw Error(ErrorCode::NotOnSphere, "point is off the unit 3-sphere");
  return Vector4<Scalar>(p(2), p(3), -p(0), -p(1));
}

/// beta(p)(v) without the sphere check.
template <class Scalar>
Scalar beta_pairing(const Vector4<Scalar>& p, const Vector4<Scalar>& v) {
  return p(2) * v(0) + p(3) * v(1) - p(0) * v(2) - p(1) * v(3);
}

using Arc = std::function<Eigen::Vector4d(double)>;

inline constexpr double kDerivativeStep = 1e-6;

/// Max |beta(c(t))(c'(t))| over t_i = i/(samples-1). Without `derivative`, c' is a central difference.
double legendrian_deviation(const Arc& c, std::size_t samples, const Arc& derivative = nullptr);

/// t -> ((1-t)a + tb)/|(1-t)a + tb|.
Arc normalized_chord(const Eigen::Vector4d& a, const Eigen::Vector4d& b);
Arc transform(const Eigen::Matrix4d& m, const Arc& c);
/// (2t^2-2t+1)^{-1/2} (t, 1-t, 0, 0), from v1 to u1.
Arc example_edge_arc();
/// Exact derivative of example_edge_arc.
Arc example_edge_arc_derivative();

/// Linear map of R^4 carrying each vertex's coordinates to those of its image. Throws
/// MissingCoordinates or BadParameter when the vertex images do not determine a signed permutation.
Eigen::Matrix4d permutation_matrix(const SimplicialComplex& x, const Realization& r, const Permutation& p);

struct FaceTangency {
  /// Min over interior samples of max_i |beta(p)(dp/dt_i)|; positive means the face is nowhere tangent to xi.
  double margin = 0;
  /// Min over interior samples of |beta(p)(dp/dt_1)| alone.
  double t1_margin = 0;
  std::size_t samples = 0;
};

/// Face p(t) = (t1 a + t2 b + t3 c)/|.|, t3 = 1 - t1 - t2, sampled on the open simplex with step 1/(n+1).
FaceTangency face_tangency_margin(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c,
                                  std::size_t n = 60);

struct PointCondition {
  std::string what;
  int function = 1;  // 1 for h1, 2 for h2
  double r = 0;
  double expected = 0;
};

/// Radial profile (h1, h2) of a Lutz twist on [0, 1].
struct LutzProfile {
  std::string name;
  double R = 1;
  std::function<double(double)> h1, h2;
  std::vector<PointCondition> conditions;
};

/// -cos(pi r/R), r^2 sin(pi r/R) on [0,R], then h1 = 1 and h2 blending to -r^2.
LutzProfile lemma_profile(double R);
/// (-1, -r^2) near 0 and (1, r^2) near 1, joined by a monotone turn of the polar angle.
LutzProfile standard_twist_profile();
LutzProfile constant_profile(double c1, double c2);

struct ProfileCheck {
  double min_abs_det = 0;
  double argmin = 0;
  double min_det = 0, max_det = 0;
  std::vector<std::pair<std::string, bool>> conditions;
  bool pass = false;
};

/// Samples h1 h2' - h2 h1' on (eps, 1] with central differences.
ProfileCheck lutz_profile_check(const LutzProfile& p, std::size_t samples = 1000, double eps = 1e-3,
                                double condition_tol = 1e-9);

/// beta = h1 dz + h2 dphi + h3 dr on a disk times a circle.
struct ThreeFunctionProfile {
  std::string name;
  std::function<double(double, double)> h1, h2, h3;
};

/// cos 2pi x, (x - 1/2) sin 2pi x, sin(phi) sin 2pi x with x = r cos(phi) + 1/2.
ThreeFunctionProfile alpha0_profile();
/// (1, r^2, 0).
ThreeFunctionProfile inner_profile();

/// (h1 dr h2 - h2 dr h1) - (h1 dphi h3 - h3 dphi h1), by central differences.
double cc_value(const ThreeFunctionProfile& p, double r, double phi);

struct CcCheck {
  double min_abs = 0;
  double at_r = 0, at_phi = 0;
  std::size_t samples = 0;
};

CcCheck three_function_check(const ThreeFunctionProfile& p, double r_lo, double r_hi, std::size_t n_r = 100,
                             std::size_t n_phi = 100);

}  // namespace contri
