#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace contri {

using VertexId = std::uint32_t;
/// Sorted vertex indices into SimplicialComplex::labels().
using Simplex = std::vector<VertexId>;
using LabelSet = std::vector<std::string>;

enum class Purity { Pure, Permissive };

/**
 * Finite abstract simplicial complex stored by its facets.
 *
 * Vertex labels are kept in natural order and facets are sorted, so two complexes
 * built from the same facet set compare equal and serialize identically.
 * Immutable once constructed.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(const std::vector<LabelSet>& facets, Purity purity = Purity::Pure);

  /// Facets given as indices into `labels`; unused labels are dropped, non-maximal facets removed.
  static SimplicialComplex from_indexed(const std::vector<std::string>& labels, std::vector<Simplex> facets);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t num_vertices() const { return labels_.size(); }
  const std::vector<Simplex>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }
  int dimension() const { return dim_; }
  bool empty() const { return facets_.empty(); }
  bool is_pure() const;

  std::optional<VertexId> find(std::string_view label) const;
  VertexId index_of(std::string_view label) const;
  LabelSet labels_of(const Simplex& s) const;
  Simplex simplex_of(const LabelSet& s) const;
  std::vector<LabelSet> facet_labels() const;

  /// All k-faces in lexicographic order.
  std::vector<Simplex> faces(int k) const;
  bool has_face(const Simplex& s) const;
  bool has_facet(const LabelSet& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;
  int dim_ = -1;
};

struct FVector {
  std::vector<std::int64_t> counts;

  std::int64_t operator[](std::size_t i) const { return i < counts.size() ? counts[i] : 0; }
  std::size_t size() const { return counts.size(); }
  friend bool operator==(const FVector&, const FVector&) = default;
};

std::string to_string(const FVector& f);

FVector f_vector(const SimplicialComplex& x);
std::int64_t euler_characteristic(const SimplicialComplex& x);

SimplicialComplex link(const SimplicialComplex& x, std::string_view vertex);
SimplicialComplex link(const SimplicialComplex& x, const Simplex& face);

/// Codimension-one faces lying in exactly one facet.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& x);

SimplicialComplex subcomplex_union(const SimplicialComplex& x, const SimplicialComplex& y);
SimplicialComplex subcomplex_intersection(const SimplicialComplex& x, const SimplicialComplex& y);

/// Bijective relabeling; labels absent from `map` are kept.
SimplicialComplex relabel(const SimplicialComplex& x, const std::map<std::string, std::string>& map);

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& x);
bool is_connected(const SimplicialComplex& x);

struct ManifoldCertificate {
  bool pure = false;
  bool pseudomanifold = false;
  bool closed = false;
  bool links_ok = false;
  bool orientable = false;
  std::size_t interior_vertices = 0;  // sphere links
  std::size_t boundary_vertices = 0;  // ball links
  std::string failure;
};

ManifoldCertificate certify_manifold(const SimplicialComplex& x);

struct SurfaceCertificate {
  bool is_closed_surface = false;
  bool orientable = false;
  std::int64_t euler_characteristic = 0;
  std::size_t components = 0;
  /// Orientable genus, or number of cross-caps when non-orientable; set only when connected.
  std::optional<std::int64_t> genus;
};

SurfaceCertificate classify_surface(const SimplicialComplex& x);

enum class PlType { Sphere, Ball, Other };

/// Recognizes spheres and balls of dimension k <= 2, where the combinatorial test is exact.
/// The empty complex is the (-1)-sphere.
PlType low_dim_type(const SimplicialComplex& x, int k);

enum class BallCertificate { Fail, HomologyBall, Collapsible };

std::string_view to_string(BallCertificate c);

/// Greedy collapse (lexicographically smallest free face first), then a homological fallback.
BallCertificate certify_ball(const SimplicialComplex& x);

/// True if a greedy elementary-collapse sequence reduces x to a single vertex.
bool greedy_collapsible(const SimplicialComplex& x);

}  // namespace contri
