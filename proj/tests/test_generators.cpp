#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "contri/cube.hpp"
#include "contri/facet_io.hpp"
#include "contri/generators.hpp"
#include "contri/geometry.hpp"
#include "contri/homology.hpp"
#include "test_util.hpp"

using namespace contri;
using contri::test::expect_error;

namespace {

std::set<std::array<int, 4>> tet_set(const std::vector<std::array<int, 4>>& v) {
  std::set<std::array<int, 4>> out;
  for (auto t : v) {
    std::sort(t.begin(), t.end());
    out.insert(t);
  }
  return out;
}

SimplicialComplex block_complex(const CubeBlock& b) {
  std::vector<LabelSet> f;
  for (const auto& t : b.facets) {
    LabelSet s;
    for (int v : t) s.push_back(v == kCenter ? "b" : "a" + std::to_string(v));
    f.push_back(s);
  }
  return SimplicialComplex::from_facets(f);
}

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("generators are deterministic", "[generators]") {
  for (const auto& name : generator_names()) {
    const int n = name == "t3_family" ? 2 : 0;
    CAPTURE(name);
    CHECK(write_facets(generate(name, n).complex) == write_facets(generate(name, n).complex));
  }
  expect_error(ErrorCode::BadParameter, [] { generate("nonesuch"); });
}

TEST_CASE("small sphere and torus generators", "[generators]") {
  const auto s = sigma8();
  CHECK(s.complex.num_facets() == 16);
  REQUIRE(s.realization);
  CHECK(s.realization->model() == Model::Sphere3);
  CHECK(s.realization->at("u1") == Eigen::Vector4d(1, 0, 0, 0));
  CHECK(s.realization->at("u2") == Eigen::Vector4d(-1, 0, 0, 0));
  for (const auto& [v, p] : s.realization->coordinates()) CHECK(close(p.norm(), 1.0));
  CHECK(homology(s.complex) == homology_from_betti({1, 0, 0, 1}));
  CHECK(f_vector(s_ij(1, 2).complex) == FVector{{7, 21, 28, 14}});
  CHECK(s_ij(2, 3).complex.num_facets() == 14);
  for (int i = 1; i <= 3; ++i) CHECK(solid_torus(i).complex.num_facets() == 7);
  CHECK(boundary_subcomplex(solid_torus(2).complex) == torus7().complex);
  expect_error(ErrorCode::BadIndex, [] { solid_torus(4); });
  expect_error(ErrorCode::BadIndex, [] { s_ij(2, 1); });
  const auto tau = torus7();
  REQUIRE(tau.realization);
  for (const auto& v : tau.complex.labels()) CHECK(tau.realization->has(v));
}

TEST_CASE("S2 x S1 and its pieces", "[generators]") {
  const auto s = s21_10().complex;
  CHECK(s.num_facets() == 30);
  CHECK(s.num_vertices() == 10);
  CHECK(t4().complex.num_facets() == 15);
  CHECK(t5().complex.num_facets() == 15);
  CHECK(subcomplex_union(t4().complex, t5().complex) == s);
  CHECK(subcomplex_intersection(t4().complex, t5().complex) == torus10().complex);
  CHECK(subcomplex_intersection(walkup_ball(1).complex, walkup_ball(2).complex) ==
        SimplicialComplex::from_facets({{"v2", "v4", "v6"}, {"v4", "v5", "v6"}}));
  CHECK(subcomplex_union(walkup_ball_union(12).complex, walkup_ball_union(34).complex) == t4().complex);
  CHECK(walkup_ball_listed(2).complex.num_facets() + 1 == walkup_ball(2).complex.num_facets());
  CHECK(walkup_ball(2).complex.has_facet({"v4", "v5", "v6", "v8"}));
  expect_error(ErrorCode::BadIndex, [] { walkup_ball(5); });
}

TEST_CASE("cube blocks", "[generators]") {
  const auto a0 = cube_block(BlockType::a0());
  CHECK(a0.facets.size() == 5);
  CHECK(tet_set(a0.facets).count({1, 2, 4, 7}) == 1);
  for (int i : {1, 2, 4})
    for (int j : {1, 2, 4, 7})
      if (i < j) CHECK(close((a0.position(i) - a0.position(j)).norm(), std::sqrt(2.0)));
  CHECK(cube_block(BlockType::a1()).facets.size() == 5);
  CHECK(cube_block(BlockType::e()).facets.size() == 12);
  for (int k = 0; k < 4; ++k) CHECK(cube_block(named_b(k)).facets.size() == 10);

  // The eight cone facets of B0 as listed, plus its two corner tetrahedra.
  const auto b0 = cube_block(named_b(0));
  std::vector<std::array<int, 4>> listed = {{8, 1, 2, 4}, {8, 1, 4, 5}, {8, 1, 3, 5}, {8, 3, 5, 6}, {8, 2, 3, 6},
                                            {8, 2, 4, 6}, {8, 4, 5, 6}, {8, 1, 2, 3}, {0, 2, 1, 4}, {3, 5, 6, 7}};
  CHECK(tet_set(b0.facets) == tet_set(listed));
  const auto bd = boundary_subcomplex(block_complex(b0));
  CHECK(f_vector(bd) == FVector{{8, 18, 12}});
  CHECK(low_dim_type(bd, 2) == PlType::Sphere);
  CHECK(tet_set(cube_block(named_b(1)).facets).count({0, 1, 3, 5}) == 1);
  CHECK(tet_set(cube_block(named_b(1)).facets).count({2, 4, 6, 7}) == 1);
  CHECK(tet_set(cube_block(named_b(2)).facets).count({1, 2, 3, 7}) == 1);
  CHECK(tet_set(cube_block(named_b(2)).facets).count({0, 4, 5, 6}) == 1);

  const auto c05 = cube_block(BlockType::c(0, 5));
  CHECK(c05.facets.size() == 10);
  const auto c05s = tet_set(c05.facets);
  CHECK(c05s.count({0, 1, 2, 4}) == 1);
  CHECK(c05s.count({1, 4, 5, 7}) == 1);
  expect_error(ErrorCode::InvalidDiagonalPair, [] { cube_block(BlockType::c(0, 7)); });
  expect_error(ErrorCode::InvalidDiagonalPair, [] { cube_block(BlockType::c(0, 1)); });

  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      if (std::popcount(static_cast<unsigned>(i ^ j)) != 2) continue;
      for (bool d : {true, false}) {
        const auto b = cube_block(BlockType::c(i, j, d));
        CAPTURE(i, j, d);
        CHECK(b.has_center());
        const auto x = block_complex(b);
        CHECK(x.num_vertices() == 9);
        CHECK(low_dim_type(boundary_subcomplex(x), 2) == PlType::Sphere);
        for (int s : face_diagonals(b)) CHECK(s >= 0);
      }
    }
  const auto scaled = cube_block(BlockType::e(), Eigen::Vector3d(1, 2, 3), 0.5);
  CHECK(scaled.position(kCenter).isApprox(Eigen::Vector3d(1.25, 2.25, 3.25)));
  CHECK(scaled.position(7).isApprox(Eigen::Vector3d(1.5, 2.5, 3.5)));
  expect_error(ErrorCode::BadParameter, [] { cube_block(BlockType::a0(), Eigen::Vector3d::Zero(), 0); });
}

TEST_CASE("cube77", "[generators]") {
  const auto layout = cube77_layout();
  CHECK(layout.literal_mismatches > 0);
  CHECK(layout.deviation == 2);
  CHECK(validate_gluing(layout.resolved, 3, true).empty());
  const auto c = cube77();
  CHECK(f_vector(c.complex) == FVector{{77, 332, 458, 202}});
  std::size_t corners = 0, centers = 0;
  for (const auto& v : c.complex.labels()) (v[0] == 'p' ? corners : centers)++;
  CHECK(corners == 64);
  CHECK(centers == 13);
  REQUIRE(c.realization);
  CHECK(c.realization->at("p1_2_3").isApprox(Eigen::Vector3d(1.0 / 3, 2.0 / 3, 1.0)));
  for (int axis = 0; axis < 3; ++axis) {
    const auto lo = cube_face_triangles(c, 3, "p", axis, 0);
    CHECK(lo.size() == 18);
    CHECK(lo == cube_face_triangles(c, 3, "p", axis, 1));
  }
  const auto d = distinct_values(edge_lengths(c.complex, *c.realization), 1e-12);
  REQUIRE(d.size() == 3);
  CHECK(close(d[0], 1 / (2 * std::sqrt(3.0))));
  CHECK(close(d[1], 1.0 / 3));
  CHECK(close(d[2], std::sqrt(2.0) / 3));
  CHECK(close(max_facet_diameter(c.complex, *c.realization), std::sqrt(2.0) / 3));
}

TEST_CASE("three-torus quotients", "[generators]") {
  const auto t = t3_40();
  CHECK(f_vector(t.complex) == FVector{{40, 242, 404, 202}});
  CHECK(euler_characteristic(t.complex) == 0);
  REQUIRE(t.pre_quotient);
  CHECK(t.pre_quotient->complex.num_vertices() == 77);
  for (auto [n, v, f] : {std::tuple{2, 64, 320}, {3, 216, 1080}}) {
    const auto x = t3_family(n);
    CAPTURE(n);
    CHECK(x.complex.num_vertices() == static_cast<std::size_t>(v));
    CHECK(x.complex.num_facets() == static_cast<std::size_t>(f));
    const auto cert = certify_manifold(x.complex);
    CHECK(cert.closed);
    CHECK(cert.links_ok);
    CHECK(cert.orientable);
  }
  const auto cube = t3_family_cube(2);
  CHECK(cube.complex.num_vertices() == 125);
  for (int axis = 0; axis < 3; ++axis)
    CHECK(cube_face_triangles(cube, 4, "g", axis, 0) == cube_face_triangles(cube, 4, "g", axis, 1));
  expect_error(ErrorCode::BadParameter, [] { t3_family(1); });
}
