#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <random>

#include "contri/ledger.hpp"
#include "test_util.hpp"

using namespace contri;
using contri::test::expect_error;
using Catch::Matchers::WithinAbs;

TEST_CASE("writhe and self-linking", "[ledger]") {
  CHECK(writhe(unknot_front()) == -1);
  CHECK(writhe({{}, "empty"}) == 0);
  CHECK(writhe({{1, 1, -1}, ""}) == 1);
  CHECK(self_linking(trefoil_front()) == 1);
  CHECK(self_linking(unknot_front()) == -1);
  CHECK(self_linking(mirror(trefoil_front())) == -1);
  expect_error(ErrorCode::BadParameter, [] { writhe({{1, 2}, ""}); });
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    KnotDiagram a, b;
    for (int k = 0; k < static_cast<int>(rng() % 7); ++k) a.crossings.push_back(rng() % 2 ? 1 : -1);
    for (int k = 0; k < static_cast<int>(rng() % 7); ++k) b.crossings.push_back(rng() % 2 ? 1 : -1);
    CHECK(writhe(concatenate(a, b)) == writhe(a) + writhe(b));
    CHECK(writhe(mirror(a)) == -writhe(a));
  }
}

TEST_CASE("knot classes", "[ledger]") {
  const auto k = KnotClass::null_homologous_knot(3, 1, "trefoil");
  CHECK(k.null_homologous());
  CHECK(k.homology == std::vector<std::int64_t>{0, 0, 0});
  const auto c = KnotClass::with_class({0, 0, 1}, "core");
  CHECK_FALSE(c.null_homologous());
  CHECK_FALSE(c.self_linking);
}

TEST_CASE("Lutz twists on the 3-sphere", "[ledger]") {
  const auto s = ContactClass::make("s3", 0, 5);
  const auto t = apply_lutz(s, KnotClass::null_homologous_knot(0, 1, "trefoil"), 3);
  CHECK(t.d2.empty());
  CHECK(t.d3 == 1);
  CHECK(t.f0_bound == 8);
  CHECK(t.history.size() == 1);
  CHECK(s.history.empty());

  auto u = ContactClass::make("s3", 0, 7);
  for (int i = 0; i < 4; ++i) u = apply_lutz(u, KnotClass::null_homologous_knot(0, -1, "unknot"), i == 0 ? 0 : 3);
  CHECK(u.d3 == -4);
  CHECK(u.f0_bound == 16);
  CHECK(u.f0_bound == s3_vertex_bound(4));
}

TEST_CASE("Lutz twists on the 3-torus", "[ledger]") {
  auto c = ContactClass::make("t3", 3, 40);
  const auto core = KnotClass::with_class({0, 0, 1}, "core");
  for (int n = 1; n <= 4; ++n) {
    c = apply_lutz(c, core, 0);
    CHECK(c.d2 == std::vector<std::int64_t>{0, 0, -n});
    CHECK_FALSE(c.d3);
  }
  const auto r = declare_reference(c);
  CHECK(r.d3 == 0);
  CHECK(r.d2 == std::vector<std::int64_t>{0, 0, 0});
  CHECK(r.base_d2 == r.d2);
  CHECK(apply_lutz(r, KnotClass::null_homologous_knot(3, 2, "k"), 0).d3 == 2);
  expect_error(ErrorCode::BasisMismatch, [&] { apply_lutz(c, KnotClass::with_class({1, 0}, "x"), 0); });
  auto bad = core;
  bad.self_linking = 1;
  expect_error(ErrorCode::BadParameter, [&] { apply_lutz(c, bad, 0); });
  CHECK(certify_f0(c, 64).f0_bound == 64);
}

TEST_CASE("ledger folds are additive and replay", "[ledger]") {
  std::mt19937 rng(20240607);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = ContactClass::make("s3", 0, 7);
    std::int64_t sum = 0, f0 = 7;
    for (int k = 0; k < 12; ++k) {
      const std::int64_t sl = static_cast<std::int64_t>(rng() % 7) - 3;
      const std::int64_t df0 = rng() % 4;
      c = apply_lutz(c, KnotClass::null_homologous_knot(0, sl, "k"), df0);
      sum += sl;
      f0 += df0;
    }
    CHECK(c.d3 == sum);
    CHECK(c.f0_bound == f0);
    CHECK(replay(c) == c);
  }
  auto t = ContactClass::make("t3", 3, 40);
  t = apply_lutz(t, KnotClass::with_class({0, 1, 1}, "a"), 0);
  t = declare_reference(t);
  t = apply_lutz(t, KnotClass::null_homologous_knot(3, -2, "b"), 5);
  t = certify_f0(t, 50);
  CHECK(replay(t) == t);
  CHECK(replay(t).history.size() == 4);
  CHECK(replay(t).f0_bound == 50);
}

TEST_CASE("vertex bounds", "[ledger]") {
  CHECK(s3_vertex_bound(3) == 13);
  CHECK(s3_vertex_bound(0) == 10);
  CHECK(s3_vertex_bound(-2) == 10);
  CHECK(general_vertex_bound(10, 4) == 22);
  CHECK(general_vertex_bound(5, 0) == 11);
  CHECK(general_vertex_bound(5, -1) == 8);
  for (int n = -20; n <= 20; ++n)
    if (n != 0) CHECK(s3_vertex_bound(n) == general_vertex_bound(7, n) - 3);
  expect_error(ErrorCode::BadParameter, [] { general_vertex_bound(4, 1); });
}

TEST_CASE("three-torus ledger", "[ledger]") {
  const auto two = t3_ledger(2, 0.3);
  CHECK(two.ledger.d2 == std::vector<std::int64_t>{0, 0, -2});
  REQUIRE(two.disks.size() == 2);
  CHECK_THAT(two.disks[0].r_lo, WithinAbs(0.15, 1e-15));
  CHECK_THAT(two.disks[0].r_hi, WithinAbs(0.3, 1e-15));
  CHECK_THAT(two.disks[1].r_lo, WithinAbs(0.1, 1e-15));
  CHECK_THAT(two.disks[1].r_hi, WithinAbs(0.15, 1e-15));
  CHECK(two.ledger.f0_bound == 64);
  const auto one = t3_ledger(1, 0.45);
  REQUIRE(one.disks.size() == 1);
  CHECK_THAT(one.disks[0].r_lo, WithinAbs(0.225, 1e-15));
  CHECK(one.ledger.f0_bound == 40);
  const auto zero = t3_ledger(0, 0.3);
  CHECK(zero.disks.empty());
  CHECK(zero.ledger.d2 == std::vector<std::int64_t>{0, 0, 0});
  CHECK(t3_ledger(3, 0.3).ledger.f0_bound == 216);
  for (double r0 : {0.25, 0.5, 0.1}) expect_error(ErrorCode::BadParameter, [=] { t3_ledger(1, r0); });
  expect_error(ErrorCode::BadParameter, [] { t3_ledger(-1, 0.3); });
  for (const auto& d : t3_ledger(5, 0.4).disks) CHECK((0 < d.r_lo && d.r_lo < d.r_hi));
}

TEST_CASE("ledger JSON", "[ledger]") {
  auto c = ContactClass::make("t3", 3, 40);
  c = apply_lutz(c, KnotClass::with_class({0, 0, 1}, "core"), 0, "first");
  c = declare_reference(c, "new reference");
  c = apply_lutz(c, KnotClass::null_homologous_knot(3, 1, "trefoil"), 3);
  const auto j = to_json(c);
  CHECK(j.at("history").size() == 3);
  const auto back = contact_class_from_json(j);
  CHECK(back == c);
  CHECK(back.history.size() == c.history.size());
  CHECK(to_json(back) == j);
  CHECK(contact_class_from_json(nlohmann::json::parse(j.dump())) == c);
  expect_error(ErrorCode::ParseError, [] { contact_class_from_json(nlohmann::json::parse("{\"d2\": 3}")); });
}
