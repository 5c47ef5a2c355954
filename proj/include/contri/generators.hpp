#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contri/complex.hpp"
#include "contri/cube.hpp"
#include "contri/geometry.hpp"

namespace contri {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
  std::optional<Realization> realization;
  std::string provenance;
  /// For quotients of a cube: the cube before identification, with its Euclidean realization.
  std::shared_ptr<const NamedComplex> pre_quotient;
};

/// Boundary of the 4-simplex on vertices 1..5.
NamedComplex s3_5();
/// Octahedral 3-sphere on u1,u2,v1,v2,w1,w2,z1,z2 at the signed unit vectors of R^4.
NamedComplex sigma8();
/// 7-vertex torus u0..u6, realized on the boundary of the solid torus.
NamedComplex torus7();
/// Solid tori T1, T2, T3 on u0..u6.
NamedComplex solid_torus(int i);
/// S_ij = T_i union T_j.
NamedComplex s_ij(int i, int j);

/// Walkup's 10-vertex S^2 x S^1 on v0..v9 and its pieces.
NamedComplex s21_10();
NamedComplex t4();
NamedComplex t5();
NamedComplex torus10();
/// Balls B1..B4 covering T4; B2 includes v4v5v6v8, without which the four do not cover T4.
NamedComplex walkup_ball(int i);
/// B_i exactly as printed (B2 lacks v4v5v6v8).
NamedComplex walkup_ball_listed(int i);
/// B12 = B1 u B2 (which = 12) or B34 = B3 u B4 (which = 34).
NamedComplex walkup_ball_union(int which);

/// 27-block subdivision of [0,1]^3 with 77 vertices; corners p{i}_{j}_{k} at (i,j,k)/3, centers c{x}_{y}_{z}.
NamedComplex cube77();
/// Opposite faces of cube77 identified: a 40-vertex 3-torus.
NamedComplex t3_40();
/// (2n)^3 checkerboard of A0/A1 blocks, quotiented to a 3-torus with 8n^3 vertices.
NamedComplex t3_family(int n);
/// The same grid before identification, corners g{i}_{j}_{k}.
NamedComplex t3_family_cube(int n);

/// Vertex labels and facets of a block grid; `m` blocks per side over [0,1]^3.
NamedComplex assemble_blocks(const std::vector<BlockType>& grid, int m, const std::string& corner_prefix,
                             const std::string& name);

/// Labels are "p{i}_{j}_{k}" style grid corners; identifies coordinates modulo m.
NamedComplex periodic_quotient(const NamedComplex& cube, int m, const std::string& corner_prefix, const std::string& name);

/// Boundary triangles of a grid-cube complex lying on the face {axis = side}, as sorted label
/// triples translated to side 0.
std::vector<LabelSet> cube_face_triangles(const NamedComplex& cube, int m, const std::string& corner_prefix, int axis,
                                          int side);

std::vector<std::string> generator_names();
/// Looks up by name; `n` feeds the parametrized ones (t3_family, walkup_ball, solid_torus).
NamedComplex generate(std::string_view name, int n = 0);

}  // namespace contri
