#include "contri/generators.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "contri/error.hpp"
#include "contri/surgery.hpp"

namespace contri {

namespace {

std::string idx_label(const std::string& prefix, int i) { return prefix + std::to_string(i); }

SimplicialComplex cyclic(const std::string& prefix, int n, const std::vector<std::vector<int>>& patterns,
                         int step = 1, int count = -1) {
  if (count < 0) count = n;
  std::vector<LabelSet> facets;
  for (int t = 0; t < count; ++t)
    for (const auto& p : patterns) {
      LabelSet f;
      for (int o : p) f.push_back(idx_label(prefix, ((step * t + o) % n + n) % n));
      facets.push_back(std::move(f));
    }
  return SimplicialComplex::from_facets(facets);
}

Realization torus_boundary_points() {
  Realization r(Model::SolidTorus, 3);
  for (int k = 0; k < 7; ++k) {
    const double phi = 4.0 * std::numbers::pi * k / 7.0, theta = 2.0 * std::numbers::pi * k / 7.0;
    r.set("u" + std::to_string(k), Eigen::Vector3d(std::cos(phi), std::sin(phi), theta));
  }
  return r;
}

std::string grid_label(const std::string& prefix, int i, int j, int k) {
  return prefix + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

std::optional<std::array<int, 3>> parse_grid(const std::string& label, const std::string& prefix) {
  if (label.rfind(prefix, 0) != 0) return std::nullopt;
  std::array<int, 3> out{};
  std::size_t pos = prefix.size();
  for (int a = 0; a < 3; ++a) {
    std::size_t end = label.find('_', pos);
    if (a == 2) end = label.size();
    if (end == std::string::npos || end == pos) return std::nullopt;
    for (std::size_t c = pos; c < end; ++c)
      if (!std::isdigit(static_cast<unsigned char>(label[c]))) return std::nullopt;
    out[a] = std::stoi(label.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

}  // namespace

NamedComplex s3_5() {
  std::vector<LabelSet> facets;
  for (int skip = 1; skip <= 5; ++skip) {
    LabelSet f;
    for (int v = 1; v <= 5; ++v)
      if (v != skip) f.push_back(std::to_string(v));
    facets.push_back(std::move(f));
  }
  return {"s3_5", SimplicialComplex::from_facets(facets), std::nullopt, "boundary of the 4-simplex, a 5-vertex 3-sphere", nullptr};
}

NamedComplex sigma8() {
  std::vector<LabelSet> facets;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          facets.push_back({"u" + std::to_string(i), "v" + std::to_string(j), "w" + std::to_string(k), "z" + std::to_string(l)});
  Realization r(Model::Sphere3, 4);
  const char* names = "uvwz";
  for (int axis = 0; axis < 4; ++axis)
    for (int s = 1; s <= 2; ++s) {
      Eigen::Vector4d p = Eigen::Vector4d::Zero();
      p(axis) = s == 1 ? 1.0 : -1.0;
      r.set(std::string(1, names[axis]) + std::to_string(s), p);
    }
  return {"sigma8", SimplicialComplex::from_facets(facets), r,
          "octahedral 8-vertex 3-sphere with vertices at the signed unit vectors of R^4", nullptr};
}

NamedComplex torus7() {
  return {"torus7", cyclic("u", 7, {{0, 1, 3}, {0, 2, 3}}), torus_boundary_points(),
          "unique 7-vertex torus, the boundary of each solid torus T_i", nullptr};
}

NamedComplex solid_torus(int i) {
  static const std::vector<std::vector<int>> patterns[3] = {{{0, 1, 2, 3}}, {{0, 2, 3, 5}}, {{0, 1, 4, 5}}};
  if (i < 1 || i > 3) throw Error(ErrorCode::BadIndex, "solid torus index must be 1, 2 or 3");
  return {"T" + std::to_string(i), cyclic("u", 7, patterns[i - 1]), torus_boundary_points(),
          "7-facet solid torus on the 7-vertex torus", nullptr};
}

NamedComplex s_ij(int i, int j) {
  if (i < 1 || j > 3 || i >= j) throw Error(ErrorCode::BadIndex, "need 1 <= i < j <= 3");
  auto a = solid_torus(i), b = solid_torus(j);
  return {"S" + std::to_string(i) + std::to_string(j), subcomplex_union(a.complex, b.complex), torus_boundary_points(),
          "union of two solid tori along the 7-vertex torus, a 7-vertex 3-sphere", nullptr};
}

NamedComplex s21_10() {
  return {"s21_10", cyclic("v", 10, {{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}}), std::nullopt,
          "Walkup's 10-vertex S^2 x S^1, boundary of the cyclic 4-complex on Z_10", nullptr};
}

NamedComplex t4() {
  return {"t4", cyclic("v", 10, {{0, 1, 2, 4}, {1, 2, 4, 5}, {0, 2, 3, 4}}, 2, 5), std::nullopt,
          "solid torus half of the 10-vertex S^2 x S^1", nullptr};
}

NamedComplex t5() {
  return {"t5", cyclic("v", 10, {{1, 2, 3, 5}, {0, 1, 3, 4}, {1, 3, 4, 5}}, 2, 5), std::nullopt,
          "other solid torus half of the 10-vertex S^2 x S^1, the image of t4 under v_i -> v_{i+5}", nullptr};
}

NamedComplex torus10() {
  return {"torus10", boundary_subcomplex(t4().complex), std::nullopt, "10-vertex torus shared by t4 and t5", nullptr};
}

NamedComplex walkup_ball_listed(int i) {
  static const std::vector<std::vector<int>> balls[4] = {
      {{0, 1, 2, 4}, {1, 2, 4, 5}, {2, 4, 5, 6}},
      {{2, 3, 4, 6}, {3, 4, 6, 7}, {4, 6, 7, 8}},
      {{5, 6, 8, 9}, {6, 8, 9, 0}, {6, 7, 8, 0}, {7, 8, 0, 1}},
      {{8, 0, 1, 2}, {8, 9, 0, 2}, {9, 0, 2, 3}, {0, 2, 3, 4}},
  };
  if (i < 1 || i > 4) throw Error(ErrorCode::BadIndex, "ball index must be 1..4");
  std::vector<LabelSet> facets;
  for (const auto& f : balls[i - 1]) {
    LabelSet s;
    for (int v : f) s.push_back(idx_label("v", v));
    facets.push_back(std::move(s));
  }
  return {"B" + std::to_string(i) + "_listed", SimplicialComplex::from_facets(facets), std::nullopt,
          "ball as printed in the decomposition of t4", nullptr};
}

NamedComplex walkup_ball(int i) {
  auto b = walkup_ball_listed(i);
  b.name = "B" + std::to_string(i);
  if (i == 2) {
    auto facets = b.complex.facet_labels();
    facets.push_back({"v4", "v5", "v6", "v8"});
    b.complex = SimplicialComplex::from_facets(facets);
    b.provenance = "ball of the t4 decomposition; v4v5v6v8 added so that the four balls cover t4";
  } else {
    b.provenance = "ball of the t4 decomposition";
  }
  return b;
}

NamedComplex walkup_ball_union(int which) {
  if (which != 12 && which != 34) throw Error(ErrorCode::BadIndex, "ball union must be 12 or 34");
  const int a = which / 10, b = which % 10;
  return {"B" + std::to_string(which), subcomplex_union(walkup_ball(a).complex, walkup_ball(b).complex), std::nullopt,
          "3-ball half of t4", nullptr};
}

NamedComplex assemble_blocks(const std::vector<BlockType>& grid, int m, const std::string& corner_prefix,
                             const std::string& name) {
  if (grid.size() != static_cast<std::size_t>(m * m * m)) throw Error(ErrorCode::BadParameter, "grid size mismatch");
  std::vector<LabelSet> facets;
  Realization r(Model::Euclidean, 3);
  const double h = 1.0 / m;
  for (int z = 0; z < m; ++z)
    for (int y = 0; y < m; ++y)
      for (int x = 0; x < m; ++x) {
        const auto block = cube_block(grid[static_cast<std::size_t>((z * m + y) * m + x)], Eigen::Vector3d(x, y, z) * h, h);
        auto label = [&](int local) {
          if (local == kCenter) return grid_label("c", x, y, z);
          return grid_label(corner_prefix, x + (local & 1), y + ((local >> 1) & 1), z + ((local >> 2) & 1));
        };
        for (const auto& f : block.facets) {
          LabelSet s;
          for (int v : f) {
            s.push_back(label(v));
            if (!r.has(s.back())) {
              // Integer grid coordinates keep positions exact before scaling.
              Eigen::Vector3d p = v == kCenter ? Eigen::Vector3d(2 * x + 1, 2 * y + 1, 2 * z + 1) / (2.0 * m)
                                               : Eigen::Vector3d(x + (v & 1), y + ((v >> 1) & 1), z + ((v >> 2) & 1)) / double(m);
              r.set(s.back(), p);
            }
          }
          facets.push_back(std::move(s));
        }
      }
  return {name, SimplicialComplex::from_facets(facets), r, "", nullptr};
}

std::vector<LabelSet> cube_face_triangles(const NamedComplex& cube, int m, const std::string& corner_prefix, int axis,
                                          int side) {
  const auto bd = boundary_subcomplex(cube.complex);
  std::vector<LabelSet> out;
  for (const auto& t : bd.facets()) {
    LabelSet moved;
    bool on_face = true;
    for (VertexId v : t) {
      auto g = parse_grid(bd.labels()[v], corner_prefix);
      if (!g || (*g)[axis] != side * m) {
        on_face = false;
        break;
      }
      (*g)[axis] = 0;
      moved.push_back(grid_label(corner_prefix, (*g)[0], (*g)[1], (*g)[2]));
    }
    if (!on_face) continue;
    std::sort(moved.begin(), moved.end());
    out.push_back(std::move(moved));
  }
  std::sort(out.begin(), out.end());
  return out;
}

NamedComplex periodic_quotient(const NamedComplex& cube, int m, const std::string& corner_prefix, const std::string& name) {
  IdentificationScheme scheme;
  Realization r(Model::FlatTorus3, 3);
  for (const auto& l : cube.complex.labels()) {
    std::string rep = l;
    if (auto g = parse_grid(l, corner_prefix)) rep = grid_label(corner_prefix, (*g)[0] % m, (*g)[1] % m, (*g)[2] % m);
    scheme.representative[l] = rep;
    if (!r.has(rep)) r.set(rep, cube.realization->at(rep));
  }
  NamedComplex out{name, quotient(cube.complex, scheme), r, "", std::make_shared<const NamedComplex>(cube)};
  return out;
}

NamedComplex cube77() {
  const auto layout = cube77_layout();
  const auto bad = validate_gluing(layout.resolved, 3, true);
  if (!bad.empty()) {
    const auto& b = bad.front();
    throw Error(ErrorCode::InconsistentGluing, "square face between cell (" + std::to_string(b.cell[0]) + "," +
                                                   std::to_string(b.cell[1]) + "," + std::to_string(b.cell[2]) +
                                                   ") and its successor along axis " + std::to_string(b.axis));
  }
  auto out = assemble_blocks(layout.resolved, 3, "p", "cube77");
  out.provenance = "77-vertex subdivision of the unit cube into 27 typed blocks";
  if (!layout.note.empty()) out.provenance += "; " + layout.note;
  return out;
}

NamedComplex t3_40() {
  auto out = periodic_quotient(cube77(), 3, "p", "t3_40");
  out.provenance = "40-vertex 3-torus from the 77-vertex cube with opposite faces identified";
  return out;
}

NamedComplex t3_family_cube(int n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "t3_family needs n >= 2");
  const int m = 2 * n;
  std::vector<BlockType> grid;
  for (int z = 0; z < m; ++z)
    for (int y = 0; y < m; ++y)
      for (int x = 0; x < m; ++x) grid.push_back((x + y + z) % 2 == 0 ? BlockType::a0() : BlockType::a1());
  const auto bad = validate_gluing(grid, m, true);
  if (!bad.empty()) throw Error(ErrorCode::InconsistentGluing, "checkerboard grid does not glue");
  auto out = assemble_blocks(grid, m, "g", "t3_family_cube");
  out.provenance = "(2n)^3 checkerboard of A0/A1 cubes";
  return out;
}

NamedComplex t3_family(int n) {
  auto out = periodic_quotient(t3_family_cube(n), 2 * n, "g", "t3_family");
  out.provenance = "3-torus with 8n^3 vertices and 40n^3 tetrahedra from the A0/A1 checkerboard";
  return out;
}

std::vector<std::string> generator_names() {
  return {"s3_5", "sigma8", "torus7", "T1", "T2", "T3", "S12", "S13", "S23", "s21_10", "t4", "t5", "torus10",
          "B1", "B2", "B3", "B4", "B12", "B34", "cube77", "t3_40", "t3_family"};
}

NamedComplex generate(std::string_view name, int n) {
  if (name == "s3_5") return s3_5();
  if (name == "sigma8") return sigma8();
  if (name == "torus7") return torus7();
  if (name == "solid_torus") return solid_torus(n);
  if (name.size() == 2 && name[0] == 'T' && name[1] >= '1' && name[1] <= '3') return solid_torus(name[1] - '0');
  if (name.size() == 3 && name[0] == 'S' && std::isdigit(static_cast<unsigned char>(name[1])) &&
      std::isdigit(static_cast<unsigned char>(name[2])))
    return s_ij(name[1] - '0', name[2] - '0');
  if (name == "s21_10") return s21_10();
  if (name == "t4") return t4();
  if (name == "t5") return t5();
  if (name == "torus10") return torus10();
  if (name == "walkup_ball") return walkup_ball(n);
  if (name == "B12") return walkup_ball_union(12);
  if (name == "B34") return walkup_ball_union(34);
  if (name.size() == 2 && name[0] == 'B' && name[1] >= '1' && name[1] <= '4') return walkup_ball(name[1] - '0');
  if (name == "cube77") return cube77();
  if (name == "t3_40") return t3_40();
  if (name == "t3_family") return t3_family(n);
  throw Error(ErrorCode::BadParameter, "unknown complex '" + std::string(name) + "'");
}

}  // namespace contri
