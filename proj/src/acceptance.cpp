#include "contri/acceptance.hpp"

#include <cmath>
#include <cstdlib>
#include <random>

#include "contri/contact.hpp"
#include "contri/error.hpp"
#include "contri/generators.hpp"
#include "contri/homology.hpp"
#include "contri/ledger.hpp"
#include "contri/solid_torus.hpp"
#include "contri/surgery.hpp"
#include "contri/symmetry.hpp"

namespace contri {

namespace {

constexpr unsigned kSeed = 20240607;

/// Keeps only the checks whose id starts with one of `ids`, renamed with `prefix`.
VerificationReport pick(const VerificationReport& r, const std::vector<std::string>& ids, const std::string& prefix) {
  VerificationReport out;
  for (const auto& c : r.checks)
    for (const auto& id : ids)
      if (c.id.rfind(id, 0) == 0) {
        Check k = c;
        k.id = prefix + "/" + c.id;
        out.add(std::move(k));
      }
  return out;
}

void fvector_golden(VerificationReport& rep, const std::string& name, const SimplicialComplex& x, FVector want,
                    const std::string& prov) {
  const auto f = f_vector(x);
  rep.add(name, f == want, to_string(f), to_string(want), "", prov);
}

Criterion c1() {
  Criterion c{1, "f-vector goldens", {}};
  auto& r = c.report;
  fvector_golden(r, "s3_5", s3_5().complex, {{5, 10, 10, 5}}, "boundary of the 4-simplex");
  fvector_golden(r, "torus7", torus7().complex, {{7, 21, 14}}, "21 edges and 14 triangles");
  fvector_golden(r, "sigma8", sigma8().complex, {{8, 24, 32, 16}}, "octahedral 3-sphere");
  fvector_golden(r, "S12", s_ij(1, 2).complex, {{7, 21, 28, 14}}, "union of T1 and T2");
  const auto f = f_vector(s21_10().complex);
  r.add("s21_10", f[0] == 10 && f[3] == 30, "f0=" + std::to_string(f[0]) + ",f3=" + std::to_string(f[3]),
        "f0=10,f3=30", "", "10-vertex S^2 x S^1");
  fvector_golden(r, "cube77", cube77().complex, {{77, 332, 458, 202}}, "202 tetrahedra, 458 triangles, 332 edges");
  fvector_golden(r, "t3_40", t3_40().complex, {{40, 242, 404, 202}}, "40 vertices and 202 tetrahedra");
  return c;
}

Criterion c2() {
  Criterion c{2, "manifold certificates", {}};
  for (const auto* name : {"s3_5", "sigma8", "S12", "S13", "S23", "s21_10", "t3_40"})
    c.report.append(pick(verify_target(name), {"closed-manifold"}, name));
  for (const auto* name : {"T1", "T2", "T3", "t4", "t5"})
    c.report.append(pick(verify_target(name), {"manifold-with-boundary", "boundary"}, name));
  for (const auto* name : {"B12", "B34"}) c.report.append(pick(verify_target(name), {"ball", "boundary-sphere"}, name));
  return c;
}

Criterion c3() {
  Criterion c{3, "homology goldens", {}};
  auto& r = c.report;
  auto golden = [&](const std::string& name, const SimplicialComplex& x, std::vector<std::int64_t> betti) {
    const auto h = homology(x);
    const auto want = homology_from_betti(std::move(betti));
    r.add(name, h == want, to_string(h), to_string(want), "", "integral homology");
  };
  golden("s3_5", s3_5().complex, {1, 0, 0, 1});
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
    golden("S" + std::to_string(i) + std::to_string(j), s_ij(i, j).complex, {1, 0, 0, 1});
  golden("s_chain(0)", s_chain(0, TwistSign::Zero).complex.complex, {1, 0, 0, 1});
  for (int n = 1; n <= 10; ++n)
    for (auto sign : {TwistSign::Positive, TwistSign::Negative})
      golden("s_chain(" + std::to_string(n) + "," + to_string(sign) + ")", s_chain(n, sign).complex.complex,
             {1, 0, 0, 1});
  golden("s21_10", s21_10().complex, {1, 1, 1, 1});
  static const LabelSet loops[3] = {{"u0", "u1", "u6", "u0"}, {"u0", "u2", "u5", "u0"}, {"u0", "u3", "u4", "u0"}};
  for (int i = 1; i <= 3; ++i) {
    const auto t = solid_torus(i).complex;
    golden("T" + std::to_string(i), t, {1, 1, 0, 0});
    const auto cls = h1_class(t, loops[i - 1]);
    const bool zero = std::all_of(cls.begin(), cls.end(), [](const Integer& v) { return v == 0; });
    r.add("alpha_" + std::to_string(i) + " in H1(T" + std::to_string(i) + ")", zero, zero ? "0" : "nonzero", "0", "",
          "alpha_i is homotopically trivial in T_i");
  }
  golden("t3_40", t3_40().complex, {1, 3, 3, 1});
  for (int n = 2; n <= 4; ++n) golden("t3_family(" + std::to_string(n) + ")", t3_family(n).complex, {1, 3, 3, 1});
  return c;
}

Criterion c4() {
  Criterion c{4, "symmetry", {}};
  c.report.append(pick(verify_target("sigma8"), {"aut-order", "edge-orbits", "triangle-orbits"}, "sigma8"));
  c.report.append(pick(verify_target("s3_5"), {"aut-order"}, "s3_5"));
  c.report.append(pick(verify_target("s21_10"), {"alpha,beta,gamma", "gamma(t4)"}, "s21_10"));
  return c;
}

Criterion c5() {
  Criterion c{5, "surgery formulas", {}};
  auto& r = c.report;
  const std::vector<NamedComplex> corpus{s3_5(), sigma8(), s_ij(1, 2), s_ij(1, 3), s_ij(2, 3), s21_10(), t3_40()};
  std::mt19937 rng(kSeed);
  for (int k = 0; k < 20; ++k) {
    const auto& a = corpus[rng() % corpus.size()];
    const auto& b = corpus[rng() % corpus.size()];
    const auto fa = a.complex.facet_labels(), fb = b.complex.facet_labels();
    const auto& s1 = fa[rng() % fa.size()];
    const auto& s2 = fb[rng() % fb.size()];
    const auto sum = connected_sum(a.complex, b.complex, s1, s2);
    const auto want = a.complex.num_vertices() + b.complex.num_vertices() - 4;
    const auto cert = certify_manifold(sum);
    const bool closed = cert.closed && cert.links_ok && cert.pseudomanifold && cert.orientable;
    r.add("pair " + std::to_string(k + 1) + ": " + a.name + " # " + b.name,
          sum.num_vertices() == want && closed,
          "f0=" + std::to_string(sum.num_vertices()) + (closed ? ", closed" : ", " + cert.failure),
          "f0=" + std::to_string(want) + ", closed", "", "f0(X # Y) = f0(X) + f0(Y) - 4");
  }
  for (int n = 1; n <= 10; ++n)
    for (auto sign : {TwistSign::Positive, TwistSign::Negative}) {
      const auto ch = s_chain(n, sign);
      const auto cert = certify_manifold(ch.complex.complex);
      const bool closed = cert.closed && cert.links_ok && cert.pseudomanifold && cert.orientable;
      const auto f0 = ch.complex.complex.num_vertices();
      r.add("s_chain(" + std::to_string(n) + "," + to_string(sign) + ")",
            f0 == static_cast<std::size_t>(3 * n + 4) && closed,
            "f0=" + std::to_string(f0) + (closed ? ", closed" : ", not closed"),
            "f0=" + std::to_string(3 * n + 4) + ", closed", "", "3|n| + 4 vertices");
    }
  const auto z = s_chain(0, TwistSign::Zero);
  const auto cert = certify_manifold(z.complex.complex);
  const bool closed = cert.closed && cert.links_ok && cert.pseudomanifold && cert.orientable;
  r.add("s_chain(0)", z.complex.complex.num_vertices() == 10 && closed,
        "f0=" + std::to_string(z.complex.complex.num_vertices()) + (closed ? ", closed" : ", not closed"),
        "f0=10, closed", "", "10 vertices when n = 0");
  return c;
}

Criterion c6() {
  Criterion c{6, "geometry", {}};
  c.report.append(pick(verify_target("cube77"), {"edge-lengths", "max-diameter", "gluing", "periodicity"}, "cube77"));
  for (int n = 2; n <= 4; ++n) {
    const auto cube = t3_family_cube(n);
    const double d = max_facet_diameter(cube.complex, *cube.realization);
    const double want = 1 / (std::sqrt(2.0) * n);
    c.report.add("t3_family(" + std::to_string(n) + ")/max-diameter", std::abs(d - want) <= 1e-12, format_number(d),
                 format_number(want), "1e-12", "tetrahedron diameter 1/(sqrt2 n)");
    std::vector<BlockType> grid;
    const int m = 2 * n;
    for (int k = 0; k < m * m * m; ++k) {
      const int x = k % m, y = (k / m) % m, z = k / (m * m);
      grid.push_back((x + y + z) % 2 == 0 ? BlockType::a0() : BlockType::a1());
    }
    const auto bad = validate_gluing(grid, m, true);
    c.report.add("t3_family(" + std::to_string(n) + ")/gluing", bad.empty(), std::to_string(bad.size()), "0", "",
                 "checkerboard blocks glue");
    bool periodic = true;
    for (int axis = 0; axis < 3; ++axis)
      periodic = periodic && cube_face_triangles(cube, m, "g", axis, 0) == cube_face_triangles(cube, m, "g", axis, 1);
    c.report.add("t3_family(" + std::to_string(n) + ")/periodicity", periodic, periodic ? "agree" : "differ", "agree",
                 "", "opposite faces are glued by translation");
  }
  return c;
}

Criterion c7() {
  Criterion c{7, "numerical contact checks", {}};
  auto& r = c.report;
  const double dev = legendrian_deviation(example_edge_arc(), 1000);
  r.add("edge-arc", dev < 1e-9, format_number(dev), "< 1e-9", "1e-9", "the edge arc is Legendrian");
  const auto s = sigma8();
  double worst = std::numeric_limits<double>::infinity();
  std::size_t faces = 0;
  for (const auto& f : s.complex.faces(2)) {
    const auto l = s.complex.labels_of(f);
    const auto m = face_tangency_margin(s.realization->at(l[0]), s.realization->at(l[1]), s.realization->at(l[2]));
    worst = std::min(worst, m.margin);
    ++faces;
  }
  r.add("face-margin", faces == 32 && worst > 0, format_number(worst) + " over " + std::to_string(faces) + " faces",
        "> 0 over 32 faces", "", "no 2-face is tangent to the contact planes");
  const auto pc = lutz_profile_check(lemma_profile(0.5), 1000, 1e-3);
  r.add("lemma-profile(R=1/2)", pc.min_abs_det > 0, format_number(pc.min_abs_det), "> 0 on (1e-3, 1]", "",
        "(h1, h2) never parallel to (h1', h2')");
  return c;
}

Criterion c8() {
  Criterion c{8, "disk lemma", {}};
  const auto m = pl_solid_torus(solid_torus(1));
  const auto d = delta_estimate(m, 1000, 1e-9);
  c.report.add("delta", d.delta < 0.99, format_number(d.delta), "< 0.99", "", "delta < 1");
  double worst = -1;
  for (int i = 0; i < 1000; i += 7) {
    const double t = i / 1000.0;
    for (double tol : {1e-2, 1e-4, 1e-6}) {
      const double coarse = meridian_fit(m, t, tol).f, fine = meridian_fit(m, t, tol / 2).f;
      worst = std::max(worst, (fine - coarse) / tol);
    }
  }
  c.report.add("tolerance-monotonicity", worst <= 1.0, "max (f(tol/2) - f(tol))/tol = " + format_number(worst), "<= 1",
               "", "halving tol raises f by at most tol");
  return c;
}

Criterion c9() {
  Criterion c{9, "ledger", {}};
  auto& r = c.report;
  r.add("writhe(unknot)", writhe(unknot_front()) == -1, std::to_string(writhe(unknot_front())), "-1", "",
        "unknot front has writhe -1");
  r.add("writhe(trefoil)", writhe(trefoil_front()) == 1, std::to_string(writhe(trefoil_front())), "1", "",
        "right-handed trefoil front has writhe +1");
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> len(1, 12), sl(-5, 5);
  for (int k = 0; k < 10; ++k) {
    auto led = ContactClass::make("s3", 0, 7);
    std::int64_t sum = 0;
    const int steps = len(rng);
    for (int i = 0; i < steps; ++i) {
      const int v = sl(rng);
      sum += v;
      led = apply_lutz(led, KnotClass::null_homologous_knot(0, v, "k"), i == 0 ? 0 : 3);
    }
    const bool ok = led.d3 == sum && replay(led) == led;
    r.add("d3-additivity #" + std::to_string(k + 1), ok, led.d3 ? std::to_string(*led.d3) : "UNDEFINED",
          std::to_string(sum), "", "d3 changes by sl(K) per twist");
  }
  for (int n = 0; n <= 5; ++n) {
    const auto t = t3_ledger(n, 0.45);
    const std::vector<std::int64_t> want{0, 0, -n};
    r.add("t3_ledger(" + std::to_string(n) + ")", t.ledger.d2 == want && t.disks.size() == static_cast<std::size_t>(n),
          "d2=(" + std::to_string(t.ledger.d2[0]) + "," + std::to_string(t.ledger.d2[1]) + "," +
              std::to_string(t.ledger.d2[2]) + ")",
          "d2=(0,0," + std::to_string(-n) + ")", "", "d2 = -n PD([K])");
  }
  bool s3_ok = true, gen_ok = true;
  for (int n = -5; n <= 5; ++n) {
    const std::int64_t a = n < 0 ? -n : n;
    s3_ok = s3_ok && s3_vertex_bound(n) == (n == 0 ? 10 : 3 * a + 4);
    for (std::int64_t f0 : {5, 7, 10, 40})
      gen_ok = gen_ok && general_vertex_bound(f0, n) == (n == 0 ? f0 + 6 : f0 + 3 * a);
  }
  r.add("s3_vertex_bound[-5,5]", s3_ok, s3_ok ? "matches" : "differs", "3|n| + 4, 10 at n = 0", "",
        "vertex count of the S^3 structures");
  r.add("general_vertex_bound[-5,5]", gen_ok, gen_ok ? "matches" : "differs", "f0 + 3|n|, f0 + 6 at n = 0", "",
        "vertex count after twisting in a general M");
  return c;
}

}  // namespace

Criterion run_criterion(int id) {
  switch (id) {
    case 1: return c1();
    case 2: return c2();
    case 3: return c3();
    case 4: return c4();
    case 5: return c5();
    case 6: return c6();
    case 7: return c7();
    case 8: return c8();
    case 9: return c9();
  }
  throw Error(ErrorCode::BadParameter, "criteria are numbered 1 to 9");
}

std::vector<Criterion> run_acceptance() {
  std::vector<Criterion> out;
  for (int i = 1; i <= 9; ++i) {
    out.push_back(run_criterion(i));
    out.back().report.target = "criterion " + std::to_string(i) + ": " + out.back().title;
  }
  return out;
}

}  // namespace contri
