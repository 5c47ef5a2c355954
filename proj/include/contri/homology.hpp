#pragma once

#include <string>
#include <vector>

#include <Eigen/SparseCore>
#include <json.hpp>

#include "contri/complex.hpp"
#include "contri/integer.hpp"

namespace contri {

using BoundaryMatrix = Eigen::SparseMatrix<int>;

/**
 * Signed incidence matrices of the simplicial chain complex.
 *
 * boundary[k] maps k-chains to (k-1)-chains: rows are (k-1)-faces, columns are
 * k-faces, both in the order of faces[k-1] and faces[k]. boundary[0] is empty.
 */
struct BoundaryMatrices {
  std::vector<std::vector<Simplex>> faces;
  std::vector<BoundaryMatrix> boundary;
};

BoundaryMatrices boundary_matrices(const SimplicialComplex& x);

struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::string to_string(const HomologyGroup& g);

/// Unreduced integral homology in dimensions 0..d.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;

  HomologyGroup reduced(std::size_t k) const;
  bool reduced_trivial() const;
  std::vector<std::int64_t> betti() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// e.g. "(Z, Z^3, Z^3, Z)"
std::string to_string(const HomologyProfile& h);
HomologyProfile homology_from_betti(std::vector<std::int64_t> betti);
nlohmann::json to_json(const HomologyProfile& h);

HomologyProfile homology(const SimplicialComplex& x);

/// Class of a closed edge path in H1 over the fixed basis described below.
///
/// Basis: take the BFS spanning forest of the 1-skeleton (vertices and neighbours in canonical
/// order). Cycles are coordinatized by their coefficients on non-tree edges. With A the
/// restriction of the 2-boundary to those rows and P A Q = D its Smith decomposition, the class
/// of c is (P c) restricted to the rows from rank(A) on.
std::vector<Integer> h1_class(const SimplicialComplex& x, const LabelSet& closed_path);

/// Rank of H1, i.e. the length of vectors returned by h1_class when H1 is torsion-free.
std::size_t h1_rank(const SimplicialComplex& x);

}  // namespace contri
