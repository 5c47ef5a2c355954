#include "contri/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "contri/error.hpp"

namespace contri {

std::string to_string(Model m) {
  switch (m) {
    case Model::Euclidean: return "EUCLIDEAN";
    case Model::Sphere3: return "SPHERE3";
    case Model::SolidTorus: return "SOLID_TORUS";
    case Model::FlatTorus3: return "FLAT_TORUS3";
  }
  return "?";
}

Realization::Realization(Model model, int dim) : model_(model), dim_(dim) {
  if (model == Model::Sphere3) dim_ = 4;
  if (model == Model::SolidTorus || model == Model::FlatTorus3) dim_ = 3;
  if (dim_ <= 0) throw Error(ErrorCode::BadParameter, "realization dimension must be positive");
}

void Realization::set(const std::string& label, const Eigen::VectorXd& p) {
  if (p.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "coordinate of " + label + " has wrong size");
  if (model_ == Model::Sphere3 && std::abs(p.norm() - 1.0) > 1e-12)
    throw Error(ErrorCode::NotOnSphere, label + " is not on the unit sphere");
  coords_[label] = p;
}

const Eigen::VectorXd& Realization::at(const std::string& label) const {
  auto it = coords_.find(label);
  if (it == coords_.end()) throw Error(ErrorCode::MissingCoordinates, "no coordinates for " + label);
  return it->second;
}

double Realization::distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  switch (model_) {
    case Model::Euclidean:
    case Model::Sphere3: return (a - b).norm();
    case Model::SolidTorus: {
      const double dx = a(0) - b(0), dy = a(1) - b(1);
      const double chord = 2.0 * std::sin(std::abs(a(2) - b(2)) / 2.0);
      return std::sqrt(dx * dx + dy * dy + chord * chord);
    }
    case Model::FlatTorus3: {
      Eigen::Vector3d d = a - b;
      for (int i = 0; i < 3; ++i) d(i) -= std::round(d(i));
      return d.norm();
    }
  }
  return 0;
}

std::vector<double> edge_lengths(const SimplicialComplex& x, const Realization& r) {
  std::vector<double> out;
  for (const auto& e : x.faces(1)) out.push_back(r.distance(x.labels()[e[0]], x.labels()[e[1]]));
  return out;
}

double simplex_diameter(const LabelSet& facet, const Realization& r) {
  double d = 0;
  for (std::size_t i = 0; i < facet.size(); ++i)
    for (std::size_t j = i + 1; j < facet.size(); ++j) d = std::max(d, r.distance(facet[i], facet[j]));
  return d;
}

double max_facet_diameter(const SimplicialComplex& x, const Realization& r) {
  double d = 0;
  for (const auto& f : x.facet_labels()) d = std::max(d, simplex_diameter(f, r));
  return d;
}

std::vector<double> distinct_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values)
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  return out;
}

DiskContainmentReport disk_containment_report(const SimplicialComplex& x, const Realization& r, const DiskSpec& d) {
  if (!(d.r_lo > 0) || !(d.r_lo < d.r_hi)) throw Error(ErrorCode::BadParameter, "need 0 < r_lo < r_hi");
  DiskContainmentReport rep;
  rep.disk = d;
  rep.threshold = 2.0 * d.r_lo;
  for (const auto& f : x.facet_labels()) {
    const double diam = simplex_diameter(f, r);
    rep.max_diameter = std::max(rep.max_diameter, diam);
    if (!(diam < rep.threshold)) ++rep.facets_over;
  }
  rep.margin = rep.threshold - rep.max_diameter;
  rep.status = rep.facets_over == 0 ? ContainmentStatus::Pass : ContainmentStatus::NotCertified;
  return rep;
}

nlohmann::json to_json(const DiskContainmentReport& rep) {
  return {{"center_curve", rep.disk.center_curve},
          {"twist_index", rep.disk.twist_index},
          {"r_lo", rep.disk.r_lo},
          {"r_hi", rep.disk.r_hi},
          {"max_diameter", rep.max_diameter},
          {"threshold", rep.threshold},
          {"margin", rep.margin},
          {"facets_over", rep.facets_over},
          {"status", rep.status == ContainmentStatus::Pass ? "PASS" : "UNKNOWN"}};
}

std::string off_export(const SimplicialComplex& x, const Realization& r, const std::string& note) {
  if (r.model() == Model::FlatTorus3)
    throw Error(ErrorCode::BadParameter, "flat torus has no embedding; export the pre-quotient cube");
  const auto tris = x.faces(2);
  std::ostringstream os;
  os << std::setprecision(17);
  const bool four = r.model() == Model::Sphere3;
  const bool higher = r.model() == Model::Euclidean && r.dim() != 3;
  if (four || higher)
    os << "nOFF\n" << r.dim() << "\n";
  else
    os << "OFF\n";
  os << "# model " << to_string(r.model()) << "\n";
  if (r.model() == Model::SolidTorus) os << "# embedded as ((2 + x) cos t, (2 + x) sin t, y)\n";
  if (!note.empty()) os << "# " << note << "\n";
  os << x.num_vertices() << ' ' << tris.size() << " 0\n";
  for (const auto& l : x.labels()) {
    const auto& p = r.at(l);
    if (r.model() == Model::SolidTorus) {
      const double rad = 2.0 + p(0);
      os << rad * std::cos(p(2)) << ' ' << rad * std::sin(p(2)) << ' ' << p(1) << '\n';
    } else {
      for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? " " : "") << p(i);
      os << '\n';
    }
  }
  for (const auto& t : tris) os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return os.str();
}

}  // namespace contri
