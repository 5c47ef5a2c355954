#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contri/complex.hpp"
#include "contri/integer.hpp"

namespace contri {

/// Image of vertex i is perm[i], indices into the complex's label list.
using Permutation = std::vector<VertexId>;
using VertexPermutation = std::map<std::string, std::string>;

struct PermutationGroup {
  std::vector<std::string> labels;
  std::vector<Permutation> generators;
  Integer order = 1;
  /// Orbit sizes along the stabilizer chain, base = vertices in label order.
  std::vector<std::size_t> base_orbit_sizes;
};

/// Throws BadParameter unless `p` is a bijection of the label set.
Permutation to_permutation(const std::vector<std::string>& labels, const VertexPermutation& p);
VertexPermutation to_vertex_permutation(const std::vector<std::string>& labels, const Permutation& p);
std::string cycle_notation(const std::vector<std::string>& labels, const Permutation& p);

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
Simplex apply(const Permutation& p, const Simplex& s);

bool is_automorphism(const SimplicialComplex& x, const Permutation& p);
std::vector<bool> verify_automorphisms(const SimplicialComplex& x, const std::vector<VertexPermutation>& perms);

/// Backtracking over vertex images with degree and link f-vector pruning.
PermutationGroup automorphism_group(const SimplicialComplex& x, std::size_t max_vertices = 16);
/// Every automorphism, by the same search without the stabilizer chain.
std::vector<Permutation> all_automorphisms(const SimplicialComplex& x, std::size_t max_vertices = 12);
/// Closure of the generators; for cross-checks on small groups.
std::vector<Permutation> enumerate_group(const PermutationGroup& g);

/// Orbits of `cells` (each a sorted Simplex) under the group, in order of first appearance.
std::vector<std::vector<Simplex>> orbits(const PermutationGroup& g, const std::vector<Simplex>& cells);

/// Facet-preserving bijection X -> Y, if any.
std::optional<VertexPermutation> find_isomorphism(const SimplicialComplex& x, const SimplicialComplex& y,
                                                  std::size_t max_vertices = 40);

}  // namespace contri
