#include "contri/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "contri/contact.hpp"
#include "contri/error.hpp"
#include "contri/generators.hpp"
#include "contri/homology.hpp"
#include "contri/ledger.hpp"
#include "contri/solid_torus.hpp"
#include "contri/symmetry.hpp"

namespace contri {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Unknown: return "UNKNOWN";
  }
  return "?";
}

void VerificationReport::add(std::string id, bool pass, std::string measured, std::string expected,
                             std::string tolerance, std::string provenance) {
  checks.push_back({std::move(id), pass ? Status::Pass : Status::Fail, std::move(measured), std::move(expected),
                    std::move(tolerance), std::move(provenance)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"status", std::string(to_string(c.status))},
                      {"measured", c.measured},
                      {"expected", c.expected},
                      {"tolerance", c.tolerance},
                      {"provenance", c.provenance}});
  return {{"target", r.target}, {"checks", checks}, {"exit_status", r.exit_status()}};
}

std::string to_table(const VerificationReport& r) {
  std::size_t w_id = 5, w_m = 8, w_e = 8, w_t = 5;
  for (const auto& c : r.checks) {
    w_t = std::max(w_t, c.tolerance.size());
    w_id = std::max(w_id, c.id.size());
    w_m = std::max(w_m, c.measured.size());
    w_e = std::max(w_e, c.expected.size());
  }
  std::ostringstream os;
  os << "target: " << r.target << "\n";
  os << std::left << std::setw(8) << "status" << std::setw(static_cast<int>(w_id + 2)) << "check"
     << std::setw(static_cast<int>(w_m + 2)) << "measured" << std::setw(static_cast<int>(w_e + 2)) << "expected"
     << std::setw(static_cast<int>(w_t + 2)) << "tol" << "provenance\n";
  for (const auto& c : r.checks)
    os << std::left << std::setw(8) << to_string(c.status) << std::setw(static_cast<int>(w_id + 2)) << c.id
       << std::setw(static_cast<int>(w_m + 2)) << c.measured << std::setw(static_cast<int>(w_e + 2)) << c.expected
       << std::setw(static_cast<int>(w_t + 2)) << (c.tolerance.empty() ? "exact" : c.tolerance) << c.provenance << "\n";
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string format_number(double v) {
  if (std::isfinite(v) && v == std::round(v) && std::abs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void check_fvector(VerificationReport& rep, const SimplicialComplex& x, const FVector& want, const std::string& prov) {
  const auto f = f_vector(x);
  rep.add("f-vector", f == want, to_string(f), to_string(want), "", prov);
}

void check_homology(VerificationReport& rep, const SimplicialComplex& x, std::vector<std::int64_t> betti,
                    const std::string& prov) {
  const auto h = homology(x);
  const auto want = homology_from_betti(std::move(betti));
  rep.add("homology", h == want, to_string(h), to_string(want), "", prov);
}

void check_closed(VerificationReport& rep, const SimplicialComplex& x, const std::string& prov) {
  const auto c = certify_manifold(x);
  const bool ok = c.pure && c.pseudomanifold && c.closed && c.links_ok && c.orientable;
  rep.add("closed-manifold", ok, ok ? "closed, orientable, sphere links" : c.failure,
          "closed, orientable, sphere links", "", prov);
}

void check_boundary(VerificationReport& rep, const SimplicialComplex& x, const SimplicialComplex& want,
                    const std::string& name, const std::string& prov) {
  const auto c = certify_manifold(x);
  const bool links = c.pure && c.pseudomanifold && c.links_ok && !c.closed;
  rep.add("manifold-with-boundary", links, links ? "sphere/disk links" : c.failure, "sphere/disk links", "", prov);
  const auto bd = boundary_subcomplex(x);
  rep.add("boundary", bd == want, bd == want ? name : to_string(f_vector(bd)), name, "", prov);
}

void check_ball(VerificationReport& rep, const SimplicialComplex& x, const std::string& prov) {
  const auto b = certify_ball(x);
  rep.add("ball", b != BallCertificate::Fail, std::string(to_string(b)), ">= HOMOLOGY_BALL", "", prov);
  const auto bd = boundary_subcomplex(x);
  const bool sphere = low_dim_type(bd, 2) == PlType::Sphere;
  rep.add("boundary-sphere", sphere, sphere ? "2-sphere" : to_string(f_vector(bd)), "2-sphere", "", prov);
}

std::string vec_string(const std::vector<double>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_number(v[i]);
  return s + "}";
}

void check_disk(VerificationReport& rep, const SimplicialComplex& x, const Realization& r, const DiskSpec& d,
                const std::string& prov) {
  const auto dc = disk_containment_report(x, r, d);
  Check c{"disk-containment(k=" + std::to_string(d.twist_index) + ")",
          dc.status == ContainmentStatus::Pass ? Status::Pass : Status::Unknown,
          "max diameter " + format_number(dc.max_diameter), "< 2 r_lo = " + format_number(dc.threshold),
          "margin " + format_number(dc.margin), prov};
  rep.add(std::move(c));
}

void verify_sigma8(VerificationReport& rep) {
  const auto s = sigma8();
  check_fvector(rep, s.complex, {{8, 24, 32, 16}}, "octahedral 3-sphere");
  check_closed(rep, s.complex, "octahedral 3-sphere");
  check_homology(rep, s.complex, {1, 0, 0, 1}, "octahedral 3-sphere");
  const auto g = automorphism_group(s.complex);
  rep.add("aut-order", g.order == 384, g.order.str(), "384", "", "automorphism group S4 x (Z2)^4");
  const auto e = orbits(g, s.complex.faces(1)).size(), t = orbits(g, s.complex.faces(2)).size();
  rep.add("edge-orbits", e == 1, std::to_string(e), "1", "", "transitive on edges");
  rep.add("triangle-orbits", t == 1, std::to_string(t), "1", "", "transitive on 2-faces");
  const double dev = legendrian_deviation(example_edge_arc(), 1000);
  rep.add("legendrian-arc", dev < 1e-9, format_number(dev), "< 1e-9", "1e-9", "edge arc is Legendrian");
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& f : s.complex.faces(2)) {
    const auto l = s.complex.labels_of(f);
    worst = std::min(worst, face_tangency_margin(s.realization->at(l[0]), s.realization->at(l[1]),
                                                 s.realization->at(l[2])).margin);
  }
  rep.add("face-tangency", worst > 0, format_number(worst), "> 0", "", "no 2-face is tangent to the contact planes");
}

void verify_cube77(VerificationReport& rep) {
  const auto layout = cube77_layout();
  const auto c = cube77();
  check_fvector(rep, c.complex, {{77, 332, 458, 202}}, "77 vertices, 332 edges, 458 triangles, 202 tetrahedra");
  const auto bad = validate_gluing(layout.resolved, 3, true);
  rep.add("gluing", bad.empty(), std::to_string(bad.size()) + " mismatched squares", "0 mismatched squares", "",
          "blocks glue along common faces");
  bool periodic = true;
  for (int axis = 0; axis < 3; ++axis)
    periodic = periodic && cube_face_triangles(c, 3, "p", axis, 0) == cube_face_triangles(c, 3, "p", axis, 1);
  rep.add("periodicity", periodic, periodic ? "opposite faces agree" : "opposite faces differ", "opposite faces agree",
          "", "opposite faces are glued by translation");
  const auto lengths = distinct_values(edge_lengths(c.complex, *c.realization), 1e-12);
  const std::vector<double> want{1 / (2 * std::sqrt(3.0)), 1.0 / 3, std::sqrt(2.0) / 3};
  bool ok = lengths.size() == 3;
  for (std::size_t i = 0; ok && i < 3; ++i) ok = std::abs(lengths[i] - want[i]) <= 1e-12;
  rep.add("edge-lengths", ok, vec_string(lengths), "{1/(2 sqrt3), 1/3, sqrt2/3}", "1e-12",
          "edge lengths 1/3, sqrt2/3, 1/(2 sqrt3)");
  const double d = max_facet_diameter(c.complex, *c.realization);
  rep.add("max-diameter", std::abs(d - std::sqrt(2.0) / 3) <= 1e-12, format_number(d), "sqrt2/3", "1e-12",
          "tetrahedron diameter at most sqrt2/3");
  check_homology(rep, c.complex, {1, 0, 0, 0}, "subdivided cube");
  rep.add("layout-deviation", true, std::to_string(layout.deviation) + " relabelled cells", "recorded", "",
          layout.note.empty() ? "block labels as drawn" : layout.note);
}

void verify_t3(VerificationReport& rep, const NamedComplex& t, std::int64_t f0, int n_twists, double diameter,
               const std::string& prov) {
  rep.add("f0", f_vector(t.complex)[0] == f0, std::to_string(f_vector(t.complex)[0]), std::to_string(f0), "", prov);
  rep.add("euler", euler_characteristic(t.complex) == 0, std::to_string(euler_characteristic(t.complex)), "0", "", prov);
  rep.add("facets", t.complex.num_facets() == t.pre_quotient->complex.num_facets(), std::to_string(t.complex.num_facets()),
          std::to_string(t.pre_quotient->complex.num_facets()), "", "quotient keeps every tetrahedron");
  check_closed(rep, t.complex, prov);
  check_homology(rep, t.complex, {1, 3, 3, 1}, "3-torus");
  const auto& cube = *t.pre_quotient;
  const double d = max_facet_diameter(cube.complex, *cube.realization);
  rep.add("max-diameter", std::abs(d - diameter) <= 1e-12, format_number(d), format_number(diameter), "1e-12",
          "largest tetrahedron diameter");
  const auto ledger = t3_ledger(n_twists, 0.45);
  const auto& disks = ledger.disks;
  if (!disks.empty()) {
    const DiskSpec smallest = disks.back();
    check_disk(rep, cube.complex, *cube.realization, smallest, "no tetrahedron contains an overtwisted disk");
  }
}

}  // namespace

std::vector<std::string> verify_targets() {
  auto names = generator_names();
  names.push_back("delta");
  return names;
}

VerificationReport verify_target(std::string_view name, int n) {
  VerificationReport rep;
  rep.target = std::string(name);
  const std::string s(name);
  if (s == "s3_5") {
    const auto x = s3_5().complex;
    check_fvector(rep, x, {{5, 10, 10, 5}}, "boundary of the 4-simplex");
    check_closed(rep, x, "boundary of the 4-simplex");
    check_homology(rep, x, {1, 0, 0, 1}, "3-sphere");
    const auto g = automorphism_group(x);
    rep.add("aut-order", g.order == 120, g.order.str(), "120", "", "full symmetric group on 5 vertices");
  } else if (s == "sigma8") {
    verify_sigma8(rep);
  } else if (s == "torus7") {
    const auto x = torus7().complex;
    check_fvector(rep, x, {{7, 21, 14}}, "21 edges and 14 triangles");
    const auto sc = classify_surface(x);
    rep.add("surface", sc.is_closed_surface && sc.orientable && sc.genus == 1,
            "genus " + (sc.genus ? std::to_string(*sc.genus) : std::string("?")), "orientable genus 1", "",
            "7-vertex torus");
    check_homology(rep, x, {1, 2, 1}, "torus");
  } else if (s.size() == 2 && s[0] == 'T' && s[1] >= '1' && s[1] <= '3') {
    const int i = s[1] - '0';
    const auto t = solid_torus(i).complex;
    check_boundary(rep, t, torus7().complex, "torus7", "solid torus bounded by the 7-vertex torus");
    check_homology(rep, t, {1, 1, 0, 0}, "solid torus");
    static const LabelSet loops[3] = {{"u0", "u1", "u6", "u0"}, {"u0", "u2", "u5", "u0"}, {"u0", "u3", "u4", "u0"}};
    const auto cls = h1_class(t, loops[i - 1]);
    const bool zero = std::all_of(cls.begin(), cls.end(), [](const Integer& v) { return v == 0; });
    rep.add("alpha-trivial", zero, zero ? "0" : "nonzero", "0", "", "alpha_i is trivial in T_i");
    if (i == 1) {
      const auto d = delta_estimate(pl_solid_torus(solid_torus(1)), 1000, 1e-9);
      rep.add("delta", d.delta < 0.99, format_number(d.delta), "< 0.99", "", "delta < 1 for the meridional cells");
    }
  } else if (s.size() == 3 && s[0] == 'S' && std::isdigit(static_cast<unsigned char>(s[1]))) {
    const auto x = s_ij(s[1] - '0', s[2] - '0').complex;
    check_fvector(rep, x, {{7, 21, 28, 14}}, "union of two solid tori");
    check_closed(rep, x, "union of two solid tori");
    check_homology(rep, x, {1, 0, 0, 1}, "3-sphere");
  } else if (s == "s21_10") {
    const auto x = s21_10().complex;
    const auto f = f_vector(x);
    rep.add("f0,f3", f[0] == 10 && f[3] == 30, std::to_string(f[0]) + "," + std::to_string(f[3]), "10,30", "",
            "10 vertices, 30 facets");
    check_closed(rep, x, "S^2 x S^1");
    check_homology(rep, x, {1, 1, 1, 1}, "S^2 x S^1");
    VertexPermutation alpha, beta, gamma;
    for (int i = 0; i < 10; ++i) {
      const auto v = "v" + std::to_string(i);
      alpha[v] = "v" + std::to_string((i + 2) % 10);
      beta[v] = "v" + std::to_string((10 - i) % 10);
      gamma[v] = "v" + std::to_string((i + 5) % 10);
    }
    const auto ok = verify_automorphisms(x, {alpha, beta, gamma});
    rep.add("alpha,beta,gamma", ok[0] && ok[1] && ok[2],
            std::string(ok[0] ? "1" : "0") + (ok[1] ? "1" : "0") + (ok[2] ? "1" : "0"), "111", "",
            "v_i -> v_i+2, v_-i, v_i+5 are automorphisms");
    const auto image = relabel(t4().complex, gamma);
    rep.add("gamma(t4)=t5", image == t5().complex, image == t5().complex ? "t5" : "differs", "t5", "",
            "gamma swaps the solid tori");
  } else if (s == "t4" || s == "t5") {
    const auto x = generate(s).complex;
    check_boundary(rep, x, torus10().complex, "torus10", "solid torus of the S^2 x S^1 splitting");
    check_homology(rep, x, {1, 1, 0, 0}, "solid torus");
  } else if (s == "torus10") {
    const auto sc = classify_surface(torus10().complex);
    rep.add("surface", sc.is_closed_surface && sc.orientable && sc.genus == 1,
            "genus " + (sc.genus ? std::to_string(*sc.genus) : std::string("?")), "orientable genus 1", "",
            "common boundary torus");
  } else if (s == "B12" || s == "B34" || (s.size() == 2 && s[0] == 'B')) {
    check_ball(rep, generate(s).complex, "3-ball in the t4 decomposition");
  } else if (s == "cube77") {
    verify_cube77(rep);
  } else if (s == "t3_40") {
    verify_t3(rep, t3_40(), 40, 1, std::sqrt(2.0) / 3, "40 vertices and 202 tetrahedra");
  } else if (s == "t3_family") {
    const int m = n == 0 ? 2 : n;
    verify_t3(rep, t3_family(m), 8LL * m * m * m, m, 1 / (std::sqrt(2.0) * m), "8n^3 vertices");
    rep.target = "t3_family(" + std::to_string(m) + ")";
  } else if (s == "delta") {
    const auto m = pl_solid_torus(solid_torus(1));
    const auto d = delta_estimate(m, 1000, 1e-9);
    rep.add("delta", d.delta < 0.99, format_number(d.delta), "< 0.99", "", "delta < 1 for the meridional cells");
  } else {
    throw Error(ErrorCode::BadParameter, "no verification suite for '" + s + "'");
  }
  return rep;
}

}  // namespace contri
