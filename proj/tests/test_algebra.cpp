#include <catch_amalgamated.hpp>

#include <random>

#include "contri/integer.hpp"
#include "contri/generators.hpp"
#include "contri/homology.hpp"
#include "contri/presentation.hpp"
#include "contri/smith.hpp"
#include "test_util.hpp"

using namespace contri;
using contri::test::expect_error;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// Oracle: Gaussian elimination over Q.
std::size_t rational_rank(const Eigen::SparseMatrix<int>& m) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m.rows()),
                                       std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<int>::InnerIterator it(m, k); it; ++it)
      a[static_cast<std::size_t>(it.row())][static_cast<std::size_t>(it.col())] = it.value();
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && a[r][c] != 0) {
        const Rational q = a[r][c] / a[rank][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] -= q * a[rank][k];
      }
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> rational_betti(const SimplicialComplex& x) {
  const auto bm = boundary_matrices(x);
  const std::size_t d = bm.faces.size();
  std::vector<std::size_t> rk(d + 1, 0);
  for (std::size_t k = 1; k < d; ++k) rk[k] = rational_rank(bm.boundary[k]);
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < d; ++k)
    out.push_back(static_cast<std::int64_t>(bm.faces[k].size() - rk[k] - rk[k + 1]));
  return out;
}

SimplicialComplex tetra_boundary() {
  return SimplicialComplex::from_facets({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
}

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("Smith normal form small cases", "[algebra]") {
  IntMatrix m(2, 2);
  m << 2, 0, 0, 3;
  const auto s = smith_normal_form(m);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0] == 1);
  CHECK(s.factors[1] == 6);
  CHECK(s.torsion() == std::vector<Integer>{6});
  const auto z = smith_normal_form(IntMatrix(IntMatrix::Zero(3, 4)));
  CHECK(z.rank == 0);
  CHECK(z.factors.empty());
}

TEST_CASE("Smith decomposition property", "[algebra]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
    const auto m = random_matrix(rng, rows, cols);
    const auto sd = smith_decomposition(m);
    const IntMatrix prod = sd.left * m * sd.right;
    CHECK(prod == sd.diagonal);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (i != j) CHECK(sd.diagonal(i, j) == 0);
    for (std::size_t k = 0; k + 1 < sd.form.factors.size(); ++k)
      CHECK(sd.form.factors[k + 1] % sd.form.factors[k] == 0);
    Eigen::SparseMatrix<int> sp(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (m(i, j) != 0) sp.insert(i, j) = static_cast<int>(m(i, j));
    CHECK(sd.form.rank == rational_rank(sp));
    CHECK(smith_normal_form(sp).factors == sd.form.factors);
  }
}

TEST_CASE("boundary matrices", "[algebra]") {
  const auto bm = boundary_matrices(tetra_boundary());
  CHECK(bm.boundary[1].rows() == 4);
  CHECK(bm.boundary[1].cols() == 6);
  CHECK(bm.boundary[2].rows() == 6);
  CHECK(bm.boundary[2].cols() == 4);
  for (const auto& name : generator_names()) {
    const auto x = generate(name, name == "t3_family" ? 2 : 0).complex;
    const auto b = boundary_matrices(x);
    CAPTURE(name);
    for (std::size_t k = 2; k < b.boundary.size(); ++k) {
      const Eigen::SparseMatrix<int> p = b.boundary[k - 1] * b.boundary[k];
      CHECK(p.norm() == 0);
    }
  }
  const auto tau = boundary_matrices(torus7().complex);
  CHECK(tau.boundary[2].rows() == 21);
  CHECK(tau.boundary[2].cols() == 14);
  CHECK(rational_rank(tau.boundary[2]) == 13);
  const auto s = smith_normal_form(tau.boundary[2]);
  CHECK(s.rank == 13);
  CHECK(s.torsion().empty());
  const auto point = boundary_matrices(SimplicialComplex::from_facets({{"a"}}));
  CHECK(point.boundary.size() == 1);
  CHECK(point.boundary[0].size() == 0);
}

TEST_CASE("homology goldens", "[algebra]") {
  CHECK(homology(s3_5().complex) == homology_from_betti({1, 0, 0, 1}));
  CHECK(homology(sigma8().complex) == homology_from_betti({1, 0, 0, 1}));
  CHECK(homology(s21_10().complex) == homology_from_betti({1, 1, 1, 1}));
  CHECK(to_string(homology(s21_10().complex)) == "(Z, Z, Z, Z)");
  CHECK(homology(solid_torus(1).complex) == homology_from_betti({1, 1, 0, 0}));
  CHECK(homology(torus7().complex) == homology_from_betti({1, 2, 1}));
  CHECK(homology(s_ij(1, 3).complex) == homology_from_betti({1, 0, 0, 1}));
  CHECK(homology(t3_40().complex) == homology_from_betti({1, 3, 3, 1}));
  CHECK(to_string(homology(t3_40().complex)) == "(Z, Z^3, Z^3, Z)");
}

TEST_CASE("homology with torsion", "[algebra]") {
  const auto rp2 = SimplicialComplex::from_facets({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
                                                   {"1", "6", "2"}, {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"},
                                                   {"5", "6", "3"}, {"6", "2", "4"}});
  const auto h = homology(rp2);
  CHECK(h.groups[1].betti == 0);
  CHECK(h.groups[1].torsion == std::vector<Integer>{2});
  CHECK(h.groups[2].trivial());
  expect_error(ErrorCode::TorsionUnsupported, [&] { h1_class(rp2, {"1", "2", "3", "1"}); });
}

TEST_CASE("betti numbers agree with the rational oracle", "[algebra]") {
  for (const auto& name : {"s3_5", "sigma8", "torus7", "T1", "T2", "T3", "S12", "S13", "S23", "s21_10", "t4", "t5",
                           "torus10", "B12", "B34"}) {
    const auto x = generate(name).complex;
    CAPTURE(name);
    const auto h = homology(x);
    CHECK(h.betti() == rational_betti(x));
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < h.groups.size(); ++k) alt += (k % 2 ? -1 : 1) * h.groups[k].betti;
    CHECK(alt == euler_characteristic(x));
    CHECK(h.groups[0].betti == static_cast<std::int64_t>(connected_components(x).size()));
  }
}

TEST_CASE("Poincare duality on closed orientable 3-manifolds", "[algebra]") {
  for (const auto& name : {"s3_5", "sigma8", "S12", "S23", "s21_10", "t3_40"}) {
    const auto b = homology(generate(name).complex).betti();
    CAPTURE(name);
    CHECK(b[0] == b[3]);
    CHECK(b[1] == b[2]);
  }
}

TEST_CASE("homology is label and order invariant", "[algebra]") {
  const auto x = s21_10().complex;
  std::map<std::string, std::string> m;
  for (const auto& v : x.labels()) m[v] = "q" + v;
  CHECK(homology(relabel(x, m)) == homology(x));
  auto facets = x.facet_labels();
  std::mt19937 rng(3);
  std::shuffle(facets.begin(), facets.end(), rng);
  CHECK(homology(SimplicialComplex::from_facets(facets)) == homology(x));
}

TEST_CASE("H1 classes of loops", "[algebra]") {
  static const LabelSet alpha[3] = {{"u0", "u1", "u6", "u0"}, {"u0", "u2", "u5", "u0"}, {"u0", "u3", "u4", "u0"}};
  for (int i = 1; i <= 3; ++i) {
    const auto t = solid_torus(i).complex;
    CHECK(h1_rank(t) == 1);
    const auto c = h1_class(t, alpha[i - 1]);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == 0);
  }
  const auto t1 = solid_torus(1).complex;
  const auto core = h1_class(t1, {"u0", "u1", "u2", "u3", "u4", "u5", "u6", "u0"});
  REQUIRE(core.size() == 1);
  CHECK(abs(core[0]) == 1);
  const auto back = h1_class(t1, {"u0", "u6", "u5", "u4", "u3", "u2", "u1", "u0"});
  CHECK(back[0] == -core[0]);
  CHECK(h1_class(s3_5().complex, {"1", "2", "3", "4", "1"}).empty());
  expect_error(ErrorCode::NotAClosedPath, [&] { h1_class(t1, {"u0", "u1", "u2"}); });
  const auto tau = torus7().complex;
  CHECK(h1_class(tau, alpha[0]).size() == 2);
}

TEST_CASE("fundamental group presentations", "[algebra]") {
  const auto p = fundamental_group(tetra_boundary(), "1");
  CHECK(p.basepoint == "1");
  CHECK(tietze_simplify(p, 1000).status == TietzeStatus::Trivialized);
  const auto tau = tietze_simplify(fundamental_group(torus7().complex, "u0"), 10000);
  CHECK(tau.status == TietzeStatus::Unknown);
  CHECK(tau.presentation.generators.size() == 2);
  CHECK(abelianization(tau.presentation) == HomologyGroup{2, {}});
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    const auto pi = fundamental_group(s_ij(i, j).complex, "u0");
    CHECK(abelianization(pi).trivial());
    CHECK(tietze_simplify(pi, 10000).status == TietzeStatus::Trivialized);
  }
  expect_error(ErrorCode::Disconnected, [] {
    fundamental_group(SimplicialComplex::from_facets({{"1", "2"}, {"3", "4"}}), "1");
  });
  for (const auto& pres : {fundamental_group(sigma8().complex, "u1"), fundamental_group(s21_10().complex, "v0")})
    for (const auto& r : pres.relators)
      for (int l : r) CHECK((l != 0 && static_cast<std::size_t>(std::abs(l)) <= pres.generators.size()));
}

TEST_CASE("Tietze moves on small presentations", "[algebra]") {
  GroupPresentation cyclic{{"a"}, {{1}}, ""};
  CHECK(tietze_simplify(cyclic, 10).status == TietzeStatus::Trivialized);
  GroupPresentation torus{{"a", "b"}, {{1, 2, -1, -2}}, ""};
  const auto t = tietze_simplify(torus, 1000);
  CHECK(t.status == TietzeStatus::Unknown);
  CHECK(abelianization(t.presentation) == HomologyGroup{2, {}});
  GroupPresentation z3{{"a"}, {{1, 1, 1}}, ""};
  CHECK(tietze_simplify(z3, 100).status == TietzeStatus::Unknown);
  CHECK(abelianization(z3) == HomologyGroup{0, {3}});
  GroupPresentation red{{"a", "b"}, {{1, 2, -2}, {2, -2}}, ""};
  normalize_relators(red);
  CHECK(red.relators == std::vector<Word>{{1}});
}
