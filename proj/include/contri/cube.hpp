#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace contri {

enum class BlockKind { A0, A1, B, C, E };

/**
 * Triangulation type of a unit cube with corners a0..a7 (index bits = x, y, z coordinates).
 *
 * B blocks remove the corner tetrahedra at an antipodal pair (i, 7-i); C blocks remove those at
 * a pair i, j that are diagonal on a square face. Both cone the remaining eight triangles from the
 * center. A C block leaves one square face free of removed corners; `main_diagonal` selects that
 * face's diagonal through its lowest and highest corner indices.
 */
struct BlockType {
  BlockKind kind = BlockKind::A0;
  int i = 0;
  int j = 0;
  bool main_diagonal = false;

  static BlockType a0() { return {BlockKind::A0}; }
  static BlockType a1() { return {BlockKind::A1}; }
  static BlockType b(int corner) { return {BlockKind::B, corner, 7 - corner}; }
  static BlockType c(int i, int j, bool main_diagonal = false) { return {BlockKind::C, i, j, main_diagonal}; }
  static BlockType e() { return {BlockKind::E}; }

  /// "A0", "B(0,7)", "C(0,5)/1" etc.
  std::string name() const;
  friend bool operator==(const BlockType&, const BlockType&) = default;
};

/// B0, B1, B2 remove the corner pairs (0,7), (1,6), (3,4); B3 is the remaining pair (2,5).
BlockType named_b(int index);

constexpr int kCenter = 8;

struct CubeBlock {
  BlockType type;
  Eigen::Vector3d offset = Eigen::Vector3d::Zero();
  double scale = 1.0;
  /// Local vertex indices: 0..7 corners, kCenter for the center.
  std::vector<std::array<int, 4>> facets;

  bool has_center() const;
  Eigen::Vector3d position(int local) const;
};

CubeBlock cube_block(const BlockType& type, const Eigen::Vector3d& offset = Eigen::Vector3d::Zero(), double scale = 1.0);

/// Square faces are indexed by 2 * axis + side. The diagonal of a face is 0 when it joins the
/// face's lowest and highest corner indices, 1 otherwise; -1 if the face is not split into two
/// triangles.
std::array<int, 6> face_diagonals(const CubeBlock& block);

struct GluingMismatch {
  std::array<int, 3> cell;  // x, y, z
  int axis = 0;
  bool wraps = false;  // compares a boundary face with the opposite boundary face
};

/// Grid is indexed [z][y][x] flattened as (z * m + y) * m + x.
std::vector<GluingMismatch> validate_gluing(const std::vector<BlockType>& grid, int m, bool periodic);

struct CubeLayout {
  std::vector<BlockType> drawn;    // literal labels
  std::vector<BlockType> resolved;  // consistent assignment
  std::size_t literal_mismatches = 0;
  std::size_t deviation = 0;        // cells whose label differs from the drawn one
  std::size_t solutions_at_min = 0;
  std::string note;
};

/// Layout of the 27-block cube, repaired by exhaustive search when the literal labels do not glue.
CubeLayout cube77_layout();

/// All consistent periodic assignments, each cell ranging over the types in its class
/// (drawn type first); returns those with the fewest label changes.
std::vector<std::vector<BlockType>> search_layouts(const std::vector<BlockType>& drawn, int m, std::size_t& deviation);

}  // namespace contri
