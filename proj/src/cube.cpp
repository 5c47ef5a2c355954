#include "contri/cube.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "contri/error.hpp"

namespace contri {

namespace {

using Tri = std::array<int, 3>;

const std::vector<std::array<int, 4>> kA0 = {{0, 1, 2, 4}, {1, 2, 3, 7}, {1, 4, 5, 7}, {2, 4, 6, 7}, {1, 2, 4, 7}};
const std::vector<std::array<int, 4>> kA1 = {{0, 1, 3, 5}, {0, 2, 3, 6}, {3, 5, 6, 7}, {0, 4, 5, 6}, {0, 3, 5, 6}};
const std::vector<std::array<int, 4>> kE = {{8, 0, 1, 3}, {8, 0, 2, 3}, {8, 0, 1, 4}, {8, 0, 2, 4},
                                            {8, 1, 3, 5}, {8, 1, 4, 5}, {8, 2, 3, 6}, {8, 2, 4, 6},
                                            {8, 3, 5, 7}, {8, 3, 6, 7}, {8, 4, 5, 7}, {8, 4, 6, 7}};

std::vector<int> face_corners(int axis, int side) {
  std::vector<int> out;
  for (int i = 0; i < 8; ++i)
    if (((i >> axis) & 1) == side) out.push_back(i);
  return out;
}

std::array<int, 4> corner_tet(int c) { return {c, c ^ 1, c ^ 2, c ^ 4}; }

Tri sorted_tri(int a, int b, int c) {
  Tri t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Remove the corner tetrahedra and cone the remaining boundary from the center.
std::vector<std::array<int, 4>> cone_block(const std::array<int, 2>& corners, bool main_diagonal) {
  std::vector<std::array<int, 4>> tets = {corner_tet(corners[0]), corner_tet(corners[1])};
  std::vector<Tri> tris;
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      const auto fc = face_corners(axis, side);
      int inside = -1, hits = 0;
      for (int c : corners)
        if (std::find(fc.begin(), fc.end(), c) != fc.end()) inside = c, ++hits;
      std::array<int, 2> diag{};
      // both corner tetrahedra already cover this face
      if (hits == 2) continue;
      if (inside >= 0) {
        // The corner's two face neighbours span the diagonal; the corner triangle is already removed.
        int k = 0;
        for (int v : fc)
          if (std::popcount(static_cast<unsigned>(v ^ inside)) == 1) diag[k++] = v;
        for (int v : fc)
          if (v != diag[0] && v != diag[1] && v != inside) tris.push_back(sorted_tri(diag[0], diag[1], v));
      } else {
        diag = main_diagonal ? std::array<int, 2>{fc[0], fc[3]} : std::array<int, 2>{fc[1], fc[2]};
        for (int v : fc)
          if (v != diag[0] && v != diag[1]) tris.push_back(sorted_tri(diag[0], diag[1], v));
      }
    }
  for (const auto& t : tets) tris.push_back(sorted_tri(t[1], t[2], t[3]));
  for (const auto& t : tris) tets.push_back({kCenter, t[0], t[1], t[2]});
  return tets;
}

std::vector<Tri> boundary_triangles(const std::vector<std::array<int, 4>>& facets) {
  std::map<Tri, int> count;
  for (const auto& f : facets) {
    auto s = f;
    std::sort(s.begin(), s.end());
    for (int skip = 0; skip < 4; ++skip) {
      Tri t{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) t[k++] = s[i];
      ++count[t];
    }
  }
  std::vector<Tri> out;
  for (const auto& [t, c] : count)
    if (c == 1) out.push_back(t);
  return out;
}

std::string pair_name(int i, int j) { return std::to_string(i) + std::to_string(j); }

std::vector<BlockType> class_options(const BlockType& t) {
  std::vector<BlockType> out;
  switch (t.kind) {
    case BlockKind::A0:
    case BlockKind::A1: out = {BlockType::a0(), BlockType::a1()}; break;
    case BlockKind::B:
      for (int k = 0; k < 4; ++k) out.push_back(named_b(k));
      break;
    case BlockKind::C:
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          if (std::popcount(static_cast<unsigned>(i ^ j)) == 2) {
            out.push_back(BlockType::c(i, j, true));
            out.push_back(BlockType::c(i, j, false));
          }
      break;
    case BlockKind::E: out = {BlockType::e()}; break;
  }
  auto same_label = [&](const BlockType& o) {
    return o.kind == t.kind && (t.kind != BlockKind::C ? o.i == t.i : (o.i == t.i && o.j == t.j));
  };
  std::stable_sort(out.begin(), out.end(), [&](const BlockType& a, const BlockType& b) {
    const bool fa = same_label(a), fb = same_label(b);
    if (fa != fb) return fa;
    return a.name() < b.name();
  });
  return out;
}

bool label_matches(const BlockType& a, const BlockType& drawn) {
  if (a.kind != drawn.kind) return false;
  if (a.kind == BlockKind::B) return a.i == drawn.i;
  if (a.kind == BlockKind::C) return a.i == drawn.i && a.j == drawn.j;
  return true;
}

}  // namespace

std::string BlockType::name() const {
  switch (kind) {
    case BlockKind::A0: return "A0";
    case BlockKind::A1: return "A1";
    case BlockKind::E: return "E";
    case BlockKind::B:
      for (int k = 0; k < 4; ++k)
        if (named_b(k).i == i) return "B" + std::to_string(k);
      return "B(" + pair_name(i, j) + ")";
    case BlockKind::C: return "C" + pair_name(i, j) + (main_diagonal ? "/0" : "/1");
  }
  return "?";
}

BlockType named_b(int index) {
  static constexpr int corner[4] = {0, 1, 3, 2};
  if (index < 0 || index > 3) throw Error(ErrorCode::BadIndex, "B block index must be 0..3");
  return BlockType::b(corner[index]);
}

bool CubeBlock::has_center() const { return type.kind == BlockKind::B || type.kind == BlockKind::C || type.kind == BlockKind::E; }

Eigen::Vector3d CubeBlock::position(int local) const {
  if (local == kCenter) return offset + scale * Eigen::Vector3d(0.5, 0.5, 0.5);
  return offset + scale * Eigen::Vector3d(local & 1, (local >> 1) & 1, (local >> 2) & 1);
}

CubeBlock cube_block(const BlockType& type, const Eigen::Vector3d& offset, double scale) {
  if (!(scale > 0)) throw Error(ErrorCode::BadParameter, "scale must be positive");
  CubeBlock b;
  b.type = type;
  b.offset = offset;
  b.scale = scale;
  switch (type.kind) {
    case BlockKind::A0: b.facets = kA0; break;
    case BlockKind::A1: b.facets = kA1; break;
    case BlockKind::E: b.facets = kE; break;
    case BlockKind::B:
      if (type.i < 0 || type.i > 7 || type.j != 7 - type.i)
        throw Error(ErrorCode::InvalidDiagonalPair, "B block needs antipodal corners");
      b.facets = cone_block({type.i, type.j}, true);
      break;
    case BlockKind::C:
      if (type.i < 0 || type.j > 7 || type.i >= type.j || std::popcount(static_cast<unsigned>(type.i ^ type.j)) != 2)
        throw Error(ErrorCode::InvalidDiagonalPair,
                    "a" + std::to_string(type.i) + " and a" + std::to_string(type.j) + " are not diagonal on a square face");
      b.facets = cone_block({type.i, type.j}, type.main_diagonal);
      break;
  }
  for (auto& f : b.facets) std::sort(f.begin(), f.end());
  std::sort(b.facets.begin(), b.facets.end());
  return b;
}

std::array<int, 6> face_diagonals(const CubeBlock& block) {
  const auto tris = boundary_triangles(block.facets);
  std::array<int, 6> out{};
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      const auto fc = face_corners(axis, side);
      std::vector<Tri> in_face;
      for (const auto& t : tris)
        if (std::all_of(t.begin(), t.end(), [&](int v) { return std::find(fc.begin(), fc.end(), v) != fc.end(); }))
          in_face.push_back(t);
      int& d = out[2 * axis + side];
      if (in_face.size() != 2) {
        d = -1;
        continue;
      }
      std::vector<int> common;
      std::set_intersection(in_face[0].begin(), in_face[0].end(), in_face[1].begin(), in_face[1].end(),
                            std::back_inserter(common));
      d = (common == std::vector<int>{fc[0], fc[3]}) ? 0 : 1;
    }
  return out;
}

std::vector<GluingMismatch> validate_gluing(const std::vector<BlockType>& grid, int m, bool periodic) {
  if (m <= 0 || grid.size() != static_cast<std::size_t>(m * m * m)) throw Error(ErrorCode::BadParameter, "grid size mismatch");
  std::vector<std::array<int, 6>> diags;
  for (const auto& t : grid) diags.push_back(face_diagonals(cube_block(t)));
  auto at = [&](int x, int y, int z) { return static_cast<std::size_t>((z * m + y) * m + x); };
  std::vector<GluingMismatch> out;
  for (int z = 0; z < m; ++z)
    for (int y = 0; y < m; ++y)
      for (int x = 0; x < m; ++x)
        for (int axis = 0; axis < 3; ++axis) {
          std::array<int, 3> q{x, y, z};
          const bool wraps = q[axis] + 1 == m;
          if (wraps && !periodic) continue;
          q[axis] = (q[axis] + 1) % m;
          const int a = diags[at(x, y, z)][2 * axis + 1], b = diags[at(q[0], q[1], q[2])][2 * axis];
          if (a < 0 || b < 0 || a != b) out.push_back({{x, y, z}, axis, wraps});
        }
  return out;
}

std::vector<std::vector<BlockType>> search_layouts(const std::vector<BlockType>& drawn, int m, std::size_t& deviation) {
  const std::size_t n = drawn.size();
  std::vector<std::vector<BlockType>> options(n);
  std::vector<std::vector<std::array<int, 6>>> diag(n);
  for (std::size_t c = 0; c < n; ++c) {
    options[c] = class_options(drawn[c]);
    for (const auto& t : options[c]) diag[c].push_back(face_diagonals(cube_block(t)));
  }
  std::vector<int> choice(n, -1);
  std::vector<std::vector<BlockType>> best;
  std::size_t best_dev = SIZE_MAX;
  auto coords = [&](std::size_t c) { return std::array<int, 3>{int(c % m), int((c / m) % m), int(c / (m * m))}; };
  auto index = [&](std::array<int, 3> p) { return static_cast<std::size_t>((p[2] * m + p[1]) * m + p[0]); };
  auto consistent = [&](std::size_t c) {
    const auto p = coords(c);
    const auto& d = diag[c][choice[c]];
    for (int axis = 0; axis < 3; ++axis)
      for (int step : {1, -1}) {
        auto q = p;
        q[axis] = (q[axis] + step + m) % m;
        const std::size_t o = index(q);
        if (choice[o] < 0) continue;
        const auto& e = diag[o][choice[o]];
        if (step == 1 && d[2 * axis + 1] != e[2 * axis]) return false;
        if (step == -1 && d[2 * axis] != e[2 * axis + 1]) return false;
      }
    return true;
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t c, std::size_t dev) {
    if (dev > best_dev) return;
    if (c == n) {
      std::vector<BlockType> sol;
      for (std::size_t k = 0; k < n; ++k) sol.push_back(options[k][choice[k]]);
      if (dev < best_dev) {
        best_dev = dev;
        best.clear();
      }
      best.push_back(std::move(sol));
      return;
    }
    for (std::size_t o = 0; o < options[c].size(); ++o) {
      choice[c] = static_cast<int>(o);
      if (consistent(c)) rec(c + 1, dev + (label_matches(options[c][o], drawn[c]) ? 0 : 1));
    }
    choice[c] = -1;
  };
  rec(0, 0);
  deviation = best_dev;
  return best;
}

CubeLayout cube77_layout() {
  using T = BlockType;
  const T A0 = T::a0(), A1 = T::a1(), E = T::e();
  const T B0 = named_b(0), B1 = named_b(1), B2 = named_b(2);
  // [z][y][x], free diagonals default to the main one
  CubeLayout layout;
  layout.drawn = {A0, B2, A1, B1, A0, T::c(2, 7, true), A1, T::c(1, 7, true), A0,
                   T::c(5, 6, true), A1, B0, A1, E, A0, B0, A0, T::c(1, 2, true),
                   A1, T::c(0, 6, true), A0, T::c(0, 5, true), A1, B1, A0, B2, A1};
  layout.literal_mismatches = validate_gluing(layout.drawn, 3, true).size();
  if (layout.literal_mismatches == 0) {
    layout.resolved = layout.drawn;
    return layout;
  }
  const auto sols = search_layouts(layout.drawn, 3, layout.deviation);
  if (sols.empty()) throw Error(ErrorCode::InconsistentGluing, "no consistent block assignment exists");
  layout.solutions_at_min = sols.size();
  layout.resolved = sols.front();
  std::string changes;
  for (std::size_t c = 0; c < layout.drawn.size(); ++c) {
    const auto& f = layout.drawn[c];
    const auto& r = layout.resolved[c];
    const bool relabel = !label_matches(r, f);
    if (relabel || r.kind == BlockKind::C) {
      if (!changes.empty()) changes += ", ";
      changes += "cell (" + std::to_string(c % 3) + "," + std::to_string((c / 3) % 3) + "," + std::to_string(c / 9) +
                 ") " + (relabel ? f.name().substr(0, f.kind == BlockKind::C ? 3 : 2) + " -> " : "") + r.name();
    }
  }
  layout.note = "drawn layout has " + std::to_string(layout.literal_mismatches) +
                " mismatched squares; resolved with " + std::to_string(layout.deviation) +
                " relabelled cells: " + changes;
  return layout;
}

}  // namespace contri
