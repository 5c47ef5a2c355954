#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "contri/complex.hpp"
#include "contri/error.hpp"
#include "contri/facet_io.hpp"
#include "contri/generators.hpp"
#include "contri/label.hpp"
#include "test_util.hpp"

using namespace contri;
using contri::test::expect_error;

namespace {

SimplicialComplex cx(std::vector<LabelSet> f, Purity p = Purity::Pure) { return SimplicialComplex::from_facets(f, p); }

SimplicialComplex tetra_boundary() { return cx({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}}); }

// Oracle: every nonempty subset of every facet, deduplicated.
std::vector<std::int64_t> brute_f_vector(const SimplicialComplex& x) {
  std::set<Simplex> faces;
  for (const auto& f : x.facets())
    for (unsigned mask = 1; mask < (1u << f.size()); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      faces.insert(s);
    }
  std::vector<std::int64_t> out(static_cast<std::size_t>(x.dimension() + 1), 0);
  for (const auto& s : faces) ++out[s.size() - 1];
  return out;
}

}  // namespace

TEST_CASE("natural label order", "[complex]") {
  CHECK(label_less("v2", "v10"));
  CHECK_FALSE(label_less("v10", "v2"));
  CHECK(label_less("u1", "v0"));
  CHECK(label_less("p0_0_1", "p0_0_10"));
  CHECK(label_less("v01", "v1") != label_less("v1", "v01"));
}

TEST_CASE("construction canonicalizes and rejects malformed input", "[complex]") {
  const auto x = tetra_boundary();
  CHECK(x.dimension() == 2);
  CHECK(x.is_pure());
  CHECK(f_vector(x) == FVector{{4, 6, 4}});
  const auto y = cx({{"4", "3", "2"}, {"3", "1", "4"}, {"2", "1", "4"}, {"1", "3", "2"}, {"1", "2", "3"}});
  CHECK(x == y);
  expect_error(ErrorCode::DuplicateVertexInFacet, [] { cx({{"1", "1", "2"}}); });
  expect_error(ErrorCode::MixedDimension, [] { cx({{"1", "2", "3"}, {"3", "4"}}); });
  expect_error(ErrorCode::EmptyInput, [] { cx({}); });
  const auto p = cx({{"1", "2", "3"}, {"3", "4"}, {"1", "2"}}, Purity::Permissive);
  CHECK(p.num_facets() == 2);
  CHECK_FALSE(p.is_pure());
  expect_error(ErrorCode::UnknownVertex, [&] { (void)x.index_of("9"); });
}

TEST_CASE("T1 from its cyclic pattern", "[complex]") {
  const auto t = solid_torus(1).complex;
  CHECK(t.dimension() == 3);
  CHECK(t.num_facets() == 7);
  CHECK(t.has_facet({"u6", "u0", "u1", "u2"}));
}

TEST_CASE("f-vector matches subset enumeration", "[complex]") {
  for (const auto& name : {"s3_5", "sigma8", "torus7", "T1", "S12", "s21_10", "t4", "B12", "cube77", "t3_40"}) {
    const auto x = generate(name).complex;
    CAPTURE(name);
    CHECK(f_vector(x).counts == brute_f_vector(x));
  }
  CHECK(f_vector(s3_5().complex) == FVector{{5, 10, 10, 5}});
  CHECK(f_vector(torus7().complex) == FVector{{7, 21, 14}});
  CHECK(f_vector(sigma8().complex) == FVector{{8, 24, 32, 16}});
}

TEST_CASE("Euler characteristic", "[complex]") {
  CHECK(euler_characteristic(s3_5().complex) == 0);
  CHECK(euler_characteristic(torus7().complex) == 0);
  CHECK(euler_characteristic(cube77().complex) == 1);
  CHECK(euler_characteristic(tetra_boundary()) == 2);
}

TEST_CASE("vertex links", "[complex]") {
  const auto s = s3_5().complex;
  for (const auto& v : s.labels()) CHECK(f_vector(link(s, v)) == FVector{{4, 6, 4}});
  const auto l = link(torus7().complex, "u0");
  CHECK(f_vector(l) == FVector{{6, 6}});
  CHECK(l.labels() == std::vector<std::string>{"u1", "u2", "u3", "u4", "u5", "u6"});
  const auto x = s_ij(1, 2).complex;
  for (const auto& v : x.labels()) {
    const auto sc = classify_surface(link(x, v));
    CHECK(sc.is_closed_surface);
    CHECK(sc.euler_characteristic == 2);
  }
}

TEST_CASE("boundary subcomplexes", "[complex]") {
  const auto tau = torus7().complex;
  for (int i = 1; i <= 3; ++i) CHECK(boundary_subcomplex(solid_torus(i).complex) == tau);
  CHECK(boundary_subcomplex(s3_5().complex).empty());
  const auto b = boundary_subcomplex(walkup_ball_union(12).complex);
  CHECK(low_dim_type(b, 2) == PlType::Sphere);
  expect_error(ErrorCode::NotPure, [] {
    boundary_subcomplex(cx({{"1", "2", "3"}, {"3", "4"}}, Purity::Permissive));
  });
}

TEST_CASE("manifold certificates", "[complex]") {
  const auto s = certify_manifold(s_ij(1, 2).complex);
  CHECK(s.closed);
  CHECK(s.links_ok);
  CHECK(s.orientable);
  const auto t = certify_manifold(solid_torus(1).complex);
  CHECK_FALSE(t.closed);
  CHECK(t.links_ok);
  CHECK(t.boundary_vertices == 7);
  const auto three = cx({{"1", "2", "3", "4"}, {"1", "2", "3", "5"}, {"1", "2", "3", "6"}});
  CHECK_FALSE(certify_manifold(three).pseudomanifold);
  for (const auto& name : {"s3_5", "sigma8", "S13", "S23", "s21_10", "t3_40"}) {
    CAPTURE(name);
    const auto c = certify_manifold(generate(name).complex);
    CHECK((c.closed && c.links_ok && c.orientable));
  }
}

TEST_CASE("intersections and unions", "[complex]") {
  const auto t1 = solid_torus(1).complex, t2 = solid_torus(2).complex;
  CHECK(subcomplex_intersection(t1, t2) == torus7().complex);
  CHECK(subcomplex_intersection(t4().complex, t5().complex) == torus10().complex);
  CHECK(subcomplex_union(t1, t1) == t1);
  CHECK(subcomplex_union(t4().complex, t5().complex) == s21_10().complex);
}

TEST_CASE("surface classification", "[complex]") {
  for (const auto& x : {torus7().complex, torus10().complex}) {
    const auto c = classify_surface(x);
    CHECK(c.is_closed_surface);
    CHECK(c.orientable);
    CHECK(c.genus == 1);
  }
  const auto s = classify_surface(tetra_boundary());
  CHECK(s.genus == 0);
  // 6-vertex real projective plane.
  const auto rp2 = cx({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "6", "2"},
                       {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"}, {"6", "2", "4"}});
  const auto p = classify_surface(rp2);
  CHECK(p.is_closed_surface);
  CHECK_FALSE(p.orientable);
  CHECK(p.genus == 1);
  expect_error(ErrorCode::NotSurface, [] { classify_surface(s3_5().complex); });
}

TEST_CASE("ball certificates", "[complex]") {
  CHECK(certify_ball(cx({{"1", "2", "3", "4"}})) == BallCertificate::Collapsible);
  CHECK(certify_ball(walkup_ball_union(12).complex) != BallCertificate::Fail);
  CHECK(certify_ball(walkup_ball_union(34).complex) != BallCertificate::Fail);
  CHECK(certify_ball(solid_torus(1).complex) == BallCertificate::Fail);
  CHECK(certify_ball(cube77().complex) != BallCertificate::Fail);
  for (int i = 1; i <= 4; ++i) CHECK(certify_ball(walkup_ball(i).complex) != BallCertificate::Fail);
}

TEST_CASE("relabel and components", "[complex]") {
  const auto x = tetra_boundary();
  const auto y = relabel(x, {{"1", "a"}, {"2", "b"}, {"3", "c"}, {"4", "d"}});
  CHECK(y.has_facet({"a", "b", "c"}));
  expect_error(ErrorCode::BadParameter, [&] { relabel(x, {{"1", "2"}}); });
  const auto two = cx({{"1", "2"}, {"3", "4"}});
  CHECK(connected_components(two).size() == 2);
  CHECK_FALSE(is_connected(two));
  CHECK(is_connected(x));
}

TEST_CASE("facet file round trip", "[complex]") {
  std::mt19937 rng(7);
  for (const auto& name : {"s21_10", "cube77", "torus7"}) {
    const auto x = generate(name).complex;
    auto lines = x.facet_labels();
    std::shuffle(lines.begin(), lines.end(), rng);
    std::ostringstream os;
    os << "# shuffled\n";
    for (auto l : lines) {
      std::shuffle(l.begin(), l.end(), rng);
      for (const auto& v : l) os << v << ' ';
      os << '\n';
    }
    std::istringstream in(os.str());
    const auto y = read_facets(in);
    CHECK(y == x);
    CHECK(write_facets(y) == write_facets(x));
  }
  CHECK(parse_label_set("a,b c") == LabelSet{"a", "b", "c"});
  expect_error(ErrorCode::ParseError, [] { read_facets_file("/nonexistent/file"); });
}
