#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "contri/contact.hpp"
#include "contri/generators.hpp"
#include "contri/geometry.hpp"
#include "contri/solid_torus.hpp"
#include "contri/symmetry.hpp"
#include "test_util.hpp"

using namespace contri;
using contri::test::expect_error;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector4d at4(const Realization& r, const std::string& v) { return r.at(v); }

double chord_speed_max(std::size_t samples) {
  double m = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
    m = std::max(m, 1 / (2 * t * t - 2 * t + 1));
  }
  return m;
}

}  // namespace

TEST_CASE("contact form on the 3-sphere", "[geometry]") {
  CHECK(contact_form_beta(Eigen::Vector4d(1, 0, 0, 0)) == Eigen::Vector4d(0, 0, -1, 0));
  CHECK(contact_form_beta(Eigen::Vector4d(0, 0, 1, 0)) == Eigen::Vector4d(1, 0, 0, 0));
  expect_error(ErrorCode::NotOnSphere, [] { contact_form_beta(Eigen::Vector4d(2, 0, 0, 0)); });
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int i = 0; i < 200; ++i) {
    Eigen::Vector4d p(g(rng), g(rng), g(rng), g(rng));
    p.normalize();
    CHECK_THAT(contact_form_beta(p).dot(p), WithinAbs(0, 1e-15));
    CHECK_THAT(beta_pairing(p, p), WithinAbs(0, 1e-15));
  }
  const Eigen::Vector4f pf(0, 1, 0, 0);
  CHECK(contact_form_beta<float>(pf, 1e-6f) == Eigen::Vector4f(0, 0, 0, -1));
}

TEST_CASE("Legendrian arcs", "[geometry]") {
  const auto c = example_edge_arc();
  CHECK((c(0) - Eigen::Vector4d(0, 1, 0, 0)).norm() < 1e-15);
  CHECK((c(1) - Eigen::Vector4d(1, 0, 0, 0)).norm() < 1e-15);
  CHECK(legendrian_deviation(c, 1000) < 1e-9);
  CHECK(legendrian_deviation(c, 1000, example_edge_arc_derivative()) < 1e-12);
  // The analytic derivative agrees with central differences.
  const auto d = example_edge_arc_derivative();
  for (double t : {0.1, 0.37, 0.5, 0.9}) {
    const Eigen::Vector4d fd = (c(t + 1e-6) - c(t - 1e-6)) / 2e-6;
    CHECK((fd - d(t)).norm() < 1e-8);
  }
  // u1 to w1: the chord stays in the x1 x2 plane, where |beta(p)(p')| is the speed 1/(2t^2 - 2t + 1).
  const auto s = sigma8();
  const auto& r = *s.realization;
  const auto great = normalized_chord(at4(r, "u1"), at4(r, "w1"));
  CHECK_THAT(legendrian_deviation(great, 1000), WithinAbs(chord_speed_max(1000), 1e-8));
}

TEST_CASE("edges of the octahedral sphere", "[geometry]") {
  const auto s = sigma8();
  const auto& r = *s.realization;
  std::size_t legendrian = 0, transverse = 0;
  for (const auto& e : s.complex.faces(1)) {
    const auto l = s.complex.labels_of(e);
    const double dev = legendrian_deviation(normalized_chord(at4(r, l[0]), at4(r, l[1])), 1000);
    const bool same_plane = (l[0][0] == 'u' && l[1][0] == 'w') || (l[0][0] == 'v' && l[1][0] == 'z');
    CAPTURE(l[0], l[1], dev);
    if (same_plane) {
      CHECK_THAT(dev, WithinAbs(chord_speed_max(1000), 1e-8));
      ++transverse;
    } else {
      CHECK(dev < 1e-9);
      ++legendrian;
    }
  }
  CHECK(legendrian == 16);
  CHECK(transverse == 8);

  // Images of the example arc under generators of the automorphism group are chords between the image vertices.
  const auto g = automorphism_group(s.complex);
  const auto v1 = s.complex.index_of("v1"), u1 = s.complex.index_of("u1");
  for (const auto& p : g.generators) {
    const auto m = permutation_matrix(s.complex, r, p);
    CHECK((m * m.transpose() - Eigen::Matrix4d::Identity()).norm() < 1e-15);
    const auto image = transform(m, example_edge_arc());
    const auto& labels = s.complex.labels();
    const auto chord = normalized_chord(at4(r, labels[p[v1]]), at4(r, labels[p[u1]]));
    for (double t : {0.0, 0.25, 0.6, 1.0}) CHECK((image(t) - chord(t)).norm() < 1e-12);
    CHECK_THAT(legendrian_deviation(image, 1000), WithinAbs(legendrian_deviation(chord, 1000), 1e-9));
  }
}

TEST_CASE("face tangency margins", "[geometry]") {
  const auto s = sigma8();
  const auto& r = *s.realization;
  const auto one = face_tangency_margin(at4(r, "u1"), at4(r, "v1"), at4(r, "w1"));
  CHECK(one.margin > 0);
  CHECK(one.samples == 60 * 59 / 2);
  std::size_t faces = 0;
  for (const auto& f : s.complex.faces(2)) {
    const auto l = s.complex.labels_of(f);
    CHECK(face_tangency_margin(at4(r, l[0]), at4(r, l[1]), at4(r, l[2])).margin > 0);
    ++faces;
  }
  CHECK(faces == 32);
}

TEST_CASE("Lutz profiles", "[geometry]") {
  const auto lemma = lutz_profile_check(lemma_profile(0.5));
  CHECK(lemma.pass);
  CHECK(lemma.min_abs_det > 0);
  for (const auto& [what, ok] : lemma.conditions) {
    CAPTURE(what);
    CHECK(ok);
  }
  const auto p = lemma_profile(0.5);
  for (double x : {0.05, 0.2, 0.45}) {
    CHECK_THAT(p.h1(x), WithinAbs(-std::cos(kPi * x / 0.5), 1e-15));
    CHECK_THAT(p.h2(x), WithinAbs(x * x * std::sin(kPi * x / 0.5), 1e-15));
  }
  for (double R : {0.2, 0.7, 0.95}) CHECK(lutz_profile_check(lemma_profile(R)).pass);
  expect_error(ErrorCode::BadParameter, [] { lemma_profile(1.0); });
  expect_error(ErrorCode::BadParameter, [] { lemma_profile(0.0); });

  const auto flat = lutz_profile_check(constant_profile(1, 0));
  CHECK_FALSE(flat.pass);
  CHECK(flat.min_abs_det == 0);

  const auto st = standard_twist_profile();
  CHECK_THAT(st.h1(1), WithinAbs(1, 1e-12));
  CHECK_THAT(st.h2(1), WithinAbs(1, 1e-12));
  CHECK_THAT(st.h1(0), WithinAbs(-1, 1e-12));
  CHECK_THAT(st.h2(0), WithinAbs(0, 1e-12));
  CHECK_THAT(st.h2(0.95), WithinAbs(0.95 * 0.95, 1e-12));
  CHECK(lutz_profile_check(st).pass);
}

TEST_CASE("three-function contact condition", "[geometry]") {
  const auto a = alpha0_profile();
  const auto in = inner_profile();
  for (double r : {0.1, 0.25, 0.4})
    for (double phi : {0.0, 1.0, 2.5, 4.0}) {
      CHECK_THAT(cc_value(a, r, phi), WithinAbs(2 * kPi * r, 1e-6));
      CHECK_THAT(cc_value(in, r, phi), WithinAbs(2 * r, 1e-6));
    }
  const auto chk = three_function_check(a, 0.05, 0.5, 20, 20);
  CHECK(chk.samples == 400);
  CHECK_THAT(chk.min_abs, WithinAbs(2 * kPi * 0.05, 1e-6));
}

TEST_CASE("metrics and diameters", "[geometry]") {
  Realization flat(Model::FlatTorus3, 3);
  CHECK_THAT(flat.distance(Eigen::Vector3d(0.1, 0, 0), Eigen::Vector3d(0.9, 0, 0)), WithinAbs(0.2, 1e-15));
  Realization sphere(Model::Sphere3, 4);
  CHECK_THAT(sphere.distance(Eigen::Vector4d(1, 0, 0, 0), Eigen::Vector4d(0, 1, 0, 0)), WithinAbs(std::sqrt(2.0), 1e-15));
  expect_error(ErrorCode::MissingCoordinates, [&] { (void)sphere.at("nowhere"); });

  const auto c = cube77();
  const auto& r = *c.realization;
  for (const auto& f : c.complex.facet_labels()) {
    double longest = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) longest = std::max(longest, r.distance(f[i], f[j]));
    CHECK(simplex_diameter(f, r) == longest);
    CHECK(longest <= std::sqrt(2.0) / 3 + 1e-12);
  }
  for (int n = 2; n <= 4; ++n) {
    const auto t = t3_family_cube(n);
    CHECK_THAT(max_facet_diameter(t.complex, *t.realization), WithinAbs(1 / (std::sqrt(2.0) * n), 1e-12));
  }
  CHECK(distinct_values({1.0, 1.0 + 1e-14, 2.0, 0.5}, 1e-12) == std::vector<double>{0.5, 1.0, 2.0});
}

TEST_CASE("disk containment", "[geometry]") {
  for (int n = 2; n <= 5; ++n) {
    const auto t = t3_family_cube(n);
    const double r0 = 0.45, r_lo = r0 / (n + 1);
    const auto rep = disk_containment_report(t.complex, *t.realization, {"core", r_lo, r0 / n, n});
    const double diam = 1 / (std::sqrt(2.0) * n);
    CAPTURE(n);
    CHECK_THAT(rep.max_diameter, WithinAbs(diam, 1e-12));
    CHECK_THAT(rep.margin, WithinAbs(2 * r_lo - diam, 1e-12));
    CHECK((rep.status == ContainmentStatus::Pass) == (diam < 2 * r_lo));
  }
  const auto c = cube77();
  const auto t40 = disk_containment_report(c.complex, *c.realization, {"core", 0.225, 0.45, 1});
  CHECK(t40.status == ContainmentStatus::NotCertified);
  CHECK(t40.facets_over > 0);
  CHECK_THAT(t40.margin, WithinAbs(0.45 - std::sqrt(2.0) / 3, 1e-12));
  const auto big = disk_containment_report(c.complex, *c.realization, {"core", 1.0, 2.0, 1});
  CHECK(big.status == ContainmentStatus::Pass);
  CHECK(big.facets_over == 0);
  Realization empty(Model::Euclidean, 3);
  expect_error(ErrorCode::MissingCoordinates,
               [&] { disk_containment_report(c.complex, empty, {"core", 0.1, 0.2, 1}); });
}

TEST_CASE("PL solid torus and the disk constant", "[geometry]") {
  const auto m = pl_solid_torus(solid_torus(1));
  REQUIRE(m.disks.size() == 7);
  REQUIRE(m.cells.size() == 7);
  const auto t1 = solid_torus(1).complex;
  for (const auto& cell : m.cells) CHECK(t1.has_facet(cell));
  const double w = 2 * kPi / 7;
  for (std::size_t k = 0; k < 7; ++k) {
    const double gap = std::fmod(m.disks[(k + 1) % 7].center - m.disks[k].center + 2 * kPi, 2 * kPi);
    CHECK_THAT(gap, WithinAbs(w, 1e-12));
  }

  // Oracle: the slice at offset s inside a cell fits a disk of radius min(s, w - s) / w.
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 25; ++i) {
    const double t = u(rng);
    const double s = std::fmod(2 * kPi * t - m.disks[0].center + 4 * kPi, w);
    const auto fit = meridian_fit(m, t);
    CAPTURE(t);
    CHECK_THAT(fit.f, WithinAbs(std::min(s, w - s) / w, 1e-6));
    CHECK(fit.f < 1);
  }
  const double mid = (m.disks[0].center + w / 2) / (2 * kPi);
  const auto fm = meridian_fit(m, mid);
  CHECK(fm.f > 0);
  CHECK(fm.f < 1);
  CHECK_FALSE(fm.degenerate);
  const auto wall = meridian_fit(m, m.disks[3].center / (2 * kPi));
  CHECK(wall.degenerate);
  CHECK(wall.f == 0);
  const double near = meridian_fit(m, (m.disks[3].center + 1e-4) / (2 * kPi)).f;
  CHECK(near < 1e-3);

  for (double t : {0.03, 0.31, 0.77}) {
    const double tol = 1e-6;
    CHECK(meridian_fit(m, t, tol / 2).f - meridian_fit(m, t, tol).f <= tol);
  }
  const auto d = delta_estimate(m, 1000);
  CHECK(d.samples == 1000);
  CHECK(d.delta < 1 - 1e-2);
  CHECK_THAT(d.delta, WithinAbs(0.5, 1e-6));

  expect_error(ErrorCode::MissingCoordinates, [] { pl_solid_torus({"bare", solid_torus(1).complex, {}, "", nullptr}); });
  expect_error(ErrorCode::DimensionMismatch, [] { pl_solid_torus(torus7()); });
  expect_error(ErrorCode::BadParameter, [&] { meridian_fit(m, 0.5, 0); });
}

TEST_CASE("OFF export", "[geometry]") {
  const auto c = cube77();
  std::istringstream in(off_export(c.complex, *c.realization));
  std::string line;
  std::getline(in, line);
  CHECK(line == "OFF");
  do std::getline(in, line);
  while (line.rfind('#', 0) == 0);
  CHECK(line == "77 458 0");
  const auto s = sigma8();
  const auto text = off_export(s.complex, *s.realization, "sigma8");
  CHECK(text.rfind("nOFF\n4\n", 0) == 0);
  CHECK(text.find("8 32 0\n") != std::string::npos);
  const auto t = t3_40();
  expect_error(ErrorCode::BadParameter, [&] { off_export(t.complex, *t.realization); });
  Realization empty(Model::Euclidean, 3);
  expect_error(ErrorCode::MissingCoordinates, [&] { off_export(c.complex, empty); });
  CHECK(off_export(c.complex, *c.realization) == off_export(c.complex, *c.realization));
}
