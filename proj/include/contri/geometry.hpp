#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "contri/complex.hpp"
#include "contri/label.hpp"

namespace contri {

enum class Model {
  Euclidean,   // R^k, Euclidean metric
  Sphere3,     // unit sphere in R^4, chordal metric
  SolidTorus,  // (x, y, theta): unit disk times circle, product of Euclidean and chordal circle metric
  FlatTorus3,  // unit cube with opposite faces identified, minimum over lattice translates
};

std::string to_string(Model m);

class Realization {
 public:
  Realization(Model model, int dim);

  Model model() const { return model_; }
  int dim() const { return dim_; }

  void set(const std::string& label, const Eigen::VectorXd& p);
  bool has(const std::string& label) const { return coords_.count(label) != 0; }
  const Eigen::VectorXd& at(const std::string& label) const;
  const std::map<std::string, Eigen::VectorXd, LabelLess>& coordinates() const { return coords_; }

  double distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  double distance(const std::string& a, const std::string& b) const { return distance(at(a), at(b)); }

 private:
  Model model_;
  int dim_;
  std::map<std::string, Eigen::VectorXd, LabelLess> coords_;
};

/// Edge lengths in canonical edge order.
std::vector<double> edge_lengths(const SimplicialComplex& x, const Realization& r);

/// Longest pairwise vertex distance, which is the diameter of a rectilinear simplex.
double simplex_diameter(const LabelSet& facet, const Realization& r);
double max_facet_diameter(const SimplicialComplex& x, const Realization& r);

/// Sorted representatives of values that differ by more than tol.
std::vector<double> distinct_values(std::vector<double> values, double tol);

struct DiskSpec {
  std::string center_curve;
  double r_lo = 0;
  double r_hi = 0;
  int twist_index = 0;
};

enum class ContainmentStatus { Pass, NotCertified };

struct DiskContainmentReport {
  DiskSpec disk;
  double max_diameter = 0;
  double threshold = 0;  // 2 r_lo
  double margin = 0;     // threshold - max_diameter
  std::size_t facets_over = 0;
  ContainmentStatus status = ContainmentStatus::NotCertified;
};

/// Sufficient test: no facet can contain a disk whose diameter exceeds the facet diameter.
DiskContainmentReport disk_containment_report(const SimplicialComplex& x, const Realization& r, const DiskSpec& d);

nlohmann::json to_json(const DiskContainmentReport& rep);

/// OFF text of the 2-skeleton. Sphere3 writes a 4-dimensional nOFF; SolidTorus is embedded in R^3.
/// FlatTorus3 has no embedding; export the pre-quotient cube instead.
std::string off_export(const SimplicialComplex& x, const Realization& r, const std::string& note = "");

}  // namespace contri
