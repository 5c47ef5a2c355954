#include "contri/solid_torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "contri/error.hpp"

namespace contri {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

/// Representative of a in (-pi, pi].
double nearest(double a) {
  a = wrap(a);
  return a > std::numbers::pi ? a - kTwoPi : a;
}

}  // namespace

double MeridianDisk::loop_theta(double phi) const {
  const double start = vertices.front()[0];
  const double p = start + wrap(phi - start);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& a = vertices[i];
    std::array<double, 2> b = i + 1 < vertices.size() ? vertices[i + 1]
                                                      : std::array<double, 2>{vertices[0][0] + kTwoPi, vertices[0][1]};
    if (p <= b[0] || i + 1 == vertices.size()) {
      const double s = (p - a[0]) / (b[0] - a[0]);
      return a[1] + s * (b[1] - a[1]);
    }
  }
  return vertices.front()[1];
}

double MeridianDisk::height(double rho, double phi) const { return center + rho * (loop_theta(phi) - center); }

PlSolidTorus pl_solid_torus(const NamedComplex& t) {
  if (!t.realization || t.realization->model() != Model::SolidTorus)
    throw Error(ErrorCode::MissingCoordinates, t.name + " has no solid torus realization");
  const auto& x = t.complex;
  if (x.dimension() != 3) throw Error(ErrorCode::DimensionMismatch, "need a 3-dimensional solid torus");
  const auto& r = *t.realization;

  std::map<Simplex, int> uses;
  for (const auto& f : x.facets())
    for (std::size_t i = 0; i < f.size(); ++i) {
      Simplex tri = f;
      tri.erase(tri.begin() + static_cast<long>(i));
      ++uses[tri];
    }

  PlSolidTorus m;
  m.note = "PL surrogate: meridional disks are cones from the core over the chord loops";
  for (const auto& [tri, n] : uses) {
    if (n != 2) continue;
    MeridianDisk d;
    d.loop = x.labels_of(tri);
    std::vector<std::array<double, 2>> pts;
    for (const auto& l : d.loop) {
      const auto& p = r.at(l);
      pts.push_back({wrap(std::atan2(p(1), p(0))), p(2)});
    }
    std::sort(pts.begin(), pts.end());
    double total_theta = 0;
    d.vertices.push_back(pts[0]);
    for (std::size_t i = 1; i <= pts.size(); ++i) {
      const auto& prev = pts[i - 1];
      const auto& cur = pts[i % pts.size()];
      const double dtheta = nearest(cur[1] - prev[1]);
      total_theta += dtheta;
      if (i < pts.size()) d.vertices.push_back({cur[0], d.vertices.back()[1] + dtheta});
    }
    if (std::abs(total_theta) > 1e-9)
      throw Error(ErrorCode::InconsistentGluing, "loop of interior triangle is not a meridian");
    double mean = 0;
    for (const auto& v : d.vertices) mean += v[1];
    mean /= static_cast<double>(d.vertices.size());
    const double shift = wrap(mean) - mean;
    for (auto& v : d.vertices) v[1] += shift;
    d.center = wrap(mean);
    for (const auto& v : d.vertices) m.breakpoints.push_back(wrap(v[0]));
    m.disks.push_back(std::move(d));
  }
  if (m.disks.size() < 2) throw Error(ErrorCode::InconsistentGluing, "fewer than two meridional disks");
  std::sort(m.disks.begin(), m.disks.end(), [](const auto& a, const auto& b) { return a.center < b.center; });
  std::sort(m.breakpoints.begin(), m.breakpoints.end());

  for (std::size_t k = 0; k < m.disks.size(); ++k) {
    const auto& lo = m.disks[k].loop;
    const auto& hi = m.disks[(k + 1) % m.disks.size()].loop;
    std::set<std::string, LabelLess> cell(lo.begin(), lo.end());
    cell.insert(hi.begin(), hi.end());
    LabelSet c(cell.begin(), cell.end());
    if (!x.has_facet(c)) throw Error(ErrorCode::InconsistentGluing, "consecutive meridional disks do not bound a facet");
    m.cells.push_back(std::move(c));
  }
  return m;
}

MeridianFit meridian_fit(const PlSolidTorus& m, double t, double tol, std::size_t boundary_samples) {
  if (!(tol > 0)) throw Error(ErrorCode::BadParameter, "tolerance must be positive");
  const std::size_t n = m.disks.size();
  const double theta = wrap(kTwoPi * t);
  MeridianFit out;
  std::size_t k = n - 1;
  for (std::size_t i = 0; i < n; ++i)
    if (m.disks[i].center <= theta) k = i;
  const auto& lower = m.disks[k];
  const auto& upper = m.disks[(k + 1) % n];
  const double lift_lo = lower.center <= theta ? 0 : -kTwoPi;
  const double lift_hi = (k + 1 == n ? kTwoPi : 0) + lift_lo;
  const double th = theta;
  out.cell = static_cast<int>(k);
  constexpr double kWall = 1e-12;
  if (th - (lower.center + lift_lo) < kWall || (upper.center + lift_hi) - th < kWall) {
    out.degenerate = true;
    return out;
  }

  std::vector<double> angles = m.breakpoints;
  for (std::size_t i = 0; i < boundary_samples; ++i) angles.push_back(kTwoPi * i / static_cast<double>(boundary_samples));
  auto contained = [&](double r) {
    for (double phi : angles)
      if (lower.height(r, phi) + lift_lo > th || upper.height(r, phi) + lift_hi < th) return false;
    return true;
  };
  if (contained(1.0)) {
    out.f = 1.0;
    return out;
  }
  double lo = 0, hi = 1;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (contained(mid) ? lo : hi) = mid;
  }
  out.f = lo;
  return out;
}

DeltaEstimate delta_estimate(const PlSolidTorus& m, std::size_t samples, double tol) {
  DeltaEstimate out;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples);
    const auto fit = meridian_fit(m, t, tol);
    if (fit.degenerate) ++out.degenerate;
    if (fit.f > out.delta) {
      out.delta = fit.f;
      out.argmax = t;
    }
    ++out.samples;
  }
  return out;
}

}  // namespace contri
