#include "contri/contact.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace contri {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector4d central(const Arc& c, double t) {
  return (c(t + kDerivativeStep) - c(t - kDerivativeStep)) / (2 * kDerivativeStep);
}

double central(const std::function<double(double)>& f, double r) {
  return (f(r + kDerivativeStep) - f(r - kDerivativeStep)) / (2 * kDerivativeStep);
}

}  // namespace

double legendrian_deviation(const Arc& c, std::size_t samples, const Arc& derivative) {
  double worst = 0;
  const std::size_t n = std::max<std::size_t>(samples, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    const Eigen::Vector4d p = c(t);
    const Eigen::Vector4d v = derivative ? derivative(t) : central(c, t);
    worst = std::max(worst, std::abs(beta_pairing<double>(p, v)));
  }
  return worst;
}

Arc normalized_chord(const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
  return [a, b](double t) -> Eigen::Vector4d {
    Eigen::Vector4d q = (1 - t) * a + t * b;
    return q / q.norm();
  };
}

Arc transform(const Eigen::Matrix4d& m, const Arc& c) {
  return [m, c](double t) -> Eigen::Vector4d { return m * c(t); };
}

Arc example_edge_arc() {
  return [](double t) -> Eigen::Vector4d {
    return Eigen::Vector4d(t, 1 - t, 0, 0) / std::sqrt(2 * t * t - 2 * t + 1);
  };
}

Arc example_edge_arc_derivative() {
  return [](double t) -> Eigen::Vector4d {
    const double q = 2 * t * t - 2 * t + 1;
    const double s = std::pow(q, -1.5) * (2 * t - 1);
    const double inv = 1 / std::sqrt(q);
    return Eigen::Vector4d(inv - t * s, -inv - (1 - t) * s, 0, 0);
  };
}

Eigen::Matrix4d permutation_matrix(const SimplicialComplex& x, const Realization& r, const Permutation& p) {
  if (r.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "need coordinates in R^4");
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  std::vector<bool> set(4, false);
  for (std::size_t i = 0; i < x.num_vertices(); ++i) {
    const Eigen::VectorXd& a = r.at(x.labels()[i]);
    const Eigen::VectorXd& b = r.at(x.labels()[p[i]]);
    Eigen::Index k;
    if (std::abs(a.cwiseAbs().maxCoeff(&k) - 1) > 1e-12 || std::abs(a.norm() - 1) > 1e-12)
      throw Error(ErrorCode::BadParameter, "vertex '" + x.labels()[i] + "' is not a signed unit vector");
    Eigen::Vector4d col = b * a(k);
    if (set[k] && (m.col(k) - col).norm() > 1e-12)
      throw Error(ErrorCode::BadParameter, "vertex images are not induced by a linear map");
    m.col(k) = col;
    set[k] = true;
  }
  for (int k = 0; k < 4; ++k)
    if (!set[k]) throw Error(ErrorCode::BadParameter, "coordinate axis without a vertex");
  return m;
}

FaceTangency face_tangency_margin(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c,
                                  std::size_t n) {
  FaceTangency out;
  out.margin = std::numeric_limits<double>::infinity();
  out.t1_margin = std::numeric_limits<double>::infinity();
  const double h = 1.0 / static_cast<double>(n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; i + j <= n; ++j) {
      const double t1 = i * h, t2 = j * h, t3 = 1 - t1 - t2;
      const Eigen::Vector4d q = t1 * a + t2 * b + t3 * c;
      const double len = q.norm();
      const Eigen::Vector4d p = q / len;
      // d/dt_k of q/|q| with t3 = 1 - t1 - t2.
      auto tangent = [&](const Eigen::Vector4d& dq) -> Eigen::Vector4d { return (dq - p * p.dot(dq)) / len; };
      const double b1 = std::abs(beta_pairing<double>(p, tangent(a - c)));
      const double b2 = std::abs(beta_pairing<double>(p, tangent(b - c)));
      out.margin = std::min(out.margin, std::max(b1, b2));
      out.t1_margin = std::min(out.t1_margin, b1);
      ++out.samples;
    }
  return out;
}

LutzProfile lemma_profile(double R) {
  if (!(R > 0 && R < 1)) throw Error(ErrorCode::BadParameter, "twist radius must lie in (0, 1)");
  const double w = std::min(0.8 * (1 - R), 0.86 * R);
  const double r1 = R + w;
  const double a = kPi * w / R;
  auto phi = [a](double x) { return -2 * x * x * x + 3 * x * x + a * (x * x * x - 2 * x * x + x); };
  LutzProfile p;
  p.name = "lemma(R=" + std::to_string(R) + ")";
  p.R = R;
  p.h1 = [R](double r) { return r <= R ? -std::cos(kPi * r / R) : 1.0; };
  p.h2 = [R, r1, w, phi](double r) {
    if (r <= R) return r * r * std::sin(kPi * r / R);
    if (r >= r1) return -r * r;
    return -r * r * phi((r - R) / w);
  };
  p.conditions = {{"h1(0) = -1", 1, 0, -1}, {"h2(0) = 0", 2, 0, 0}, {"h1(1) = 1", 1, 1, 1}, {"h2(1) = -1", 2, 1, -1}};
  return p;
}

LutzProfile standard_twist_profile() {
  constexpr double lo = 0.2, hi = 0.8;
  LutzProfile p;
  p.name = "standard twist";
  p.R = 1;
  auto theta = [](double r) {
    const double x = std::clamp((r - lo) / (hi - lo), 0.0, 1.0);
    const double s = x * x * x * (10 - 15 * x + 6 * x * x);
    return kPi + std::atan(r * r) + kPi * s;
  };
  p.h1 = [theta](double r) { return std::sqrt(1 + r * r * r * r) * std::cos(theta(r)); };
  p.h2 = [theta](double r) { return std::sqrt(1 + r * r * r * r) * std::sin(theta(r)); };
  p.conditions = {{"h1(0) = -1", 1, 0, -1}, {"h2(0) = 0", 2, 0, 0}, {"h1(1) = 1", 1, 1, 1}, {"h2(1) = 1", 2, 1, 1}};
  return p;
}

LutzProfile constant_profile(double c1, double c2) {
  LutzProfile p;
  p.name = "constant";
  p.h1 = [c1](double) { return c1; };
  p.h2 = [c2](double) { return c2; };
  return p;
}

ProfileCheck lutz_profile_check(const LutzProfile& p, std::size_t samples, double eps, double condition_tol) {
  ProfileCheck out;
  out.min_abs_det = std::numeric_limits<double>::infinity();
  out.min_det = std::numeric_limits<double>::infinity();
  out.max_det = -std::numeric_limits<double>::infinity();
  const std::size_t n = std::max<std::size_t>(samples, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = eps + (1 - eps) * static_cast<double>(i + 1) / static_cast<double>(n);
    const double det = p.h1(r) * central(p.h2, r) - p.h2(r) * central(p.h1, r);
    if (std::abs(det) < out.min_abs_det) {
      out.min_abs_det = std::abs(det);
      out.argmin = r;
    }
    out.min_det = std::min(out.min_det, det);
    out.max_det = std::max(out.max_det, det);
  }
  out.pass = out.min_abs_det > 0;
  for (const auto& c : p.conditions) {
    const double v = c.function == 1 ? p.h1(c.r) : p.h2(c.r);
    const bool ok = std::abs(v - c.expected) <= condition_tol;
    out.conditions.emplace_back(c.what, ok);
    out.pass = out.pass && ok;
  }
  return out;
}

ThreeFunctionProfile alpha0_profile() {
  auto x = [](double r, double phi) { return r * std::cos(phi) + 0.5; };
  return {"alpha0",
          [x](double r, double phi) { return std::cos(2 * kPi * x(r, phi)); },
          [x](double r, double phi) { return (x(r, phi) - 0.5) * std::sin(2 * kPi * x(r, phi)); },
          [x](double r, double phi) { return std::sin(phi) * std::sin(2 * kPi * x(r, phi)); }};
}

ThreeFunctionProfile inner_profile() {
  return {"(1, r^2, 0)", [](double, double) { return 1.0; }, [](double r, double) { return r * r; },
          [](double, double) { return 0.0; }};
}

double cc_value(const ThreeFunctionProfile& p, double r, double phi) {
  const double e = kDerivativeStep;
  auto dr = [&](const std::function<double(double, double)>& f) { return (f(r + e, phi) - f(r - e, phi)) / (2 * e); };
  auto dphi = [&](const std::function<double(double, double)>& f) {
    return (f(r, phi + e) - f(r, phi - e)) / (2 * e);
  };
  const double h1 = p.h1(r, phi), h2 = p.h2(r, phi), h3 = p.h3(r, phi);
  return (h1 * dr(p.h2) - h2 * dr(p.h1)) - (h1 * dphi(p.h3) - h3 * dphi(p.h1));
}

CcCheck three_function_check(const ThreeFunctionProfile& p, double r_lo, double r_hi, std::size_t n_r,
                             std::size_t n_phi) {
  if (!(r_lo > 0 && r_lo <= r_hi)) throw Error(ErrorCode::BadParameter, "need 0 < r_lo <= r_hi");
  CcCheck out;
  out.min_abs = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < std::max<std::size_t>(n_r, 1); ++i) {
    const double r = n_r > 1 ? r_lo + (r_hi - r_lo) * i / static_cast<double>(n_r - 1) : r_lo;
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = 2 * kPi * j / static_cast<double>(n_phi);
      const double v = std::abs(cc_value(p, r, phi));
      if (v < out.min_abs) {
        out.min_abs = v;
        out.at_r = r;
        out.at_phi = phi;
      }
      ++out.samples;
    }
  }
  return out;
}

}  // namespace contri
