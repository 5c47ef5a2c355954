#include "contri/homology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "contri/error.hpp"
#include "contri/smith.hpp"

namespace contri {

BoundaryMatrices boundary_matrices(const SimplicialComplex& x) {
  BoundaryMatrices out;
  const int d = x.dimension();
  for (int k = 0; k <= d; ++k) out.faces.push_back(x.faces(k));
  if (d < 0) return out;
  out.boundary.emplace_back(0, static_cast<Eigen::Index>(out.faces[0].size()));
  for (int k = 1; k <= d; ++k) {
    const auto& rows = out.faces[k - 1];
    const auto& cols = out.faces[k];
    std::vector<Eigen::Triplet<int>> trips;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& s = cols[j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex r = s;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        const auto row = std::lower_bound(rows.begin(), rows.end(), r) - rows.begin();
        trips.emplace_back(static_cast<int>(row), static_cast<int>(j), i % 2 == 0 ? 1 : -1);
      }
    }
    BoundaryMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    m.setFromTriplets(trips.begin(), trips.end());
    out.boundary.push_back(std::move(m));
  }
  return out;
}

std::string to_string(const HomologyGroup& g) {
  std::vector<std::string> parts;
  if (g.betti == 1) parts.emplace_back("Z");
  if (g.betti > 1) parts.push_back("Z^" + std::to_string(g.betti));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

HomologyGroup HomologyProfile::reduced(std::size_t k) const {
  if (k >= groups.size()) return {};
  HomologyGroup g = groups[k];
  if (k == 0 && g.betti > 0) --g.betti;
  return g;
}

bool HomologyProfile::reduced_trivial() const {
  for (std::size_t k = 0; k < groups.size(); ++k)
    if (!reduced(k).trivial()) return false;
  return true;
}

std::vector<std::int64_t> HomologyProfile::betti() const {
  std::vector<std::int64_t> out;
  for (const auto& g : groups) out.push_back(g.betti);
  return out;
}

std::string to_string(const HomologyProfile& h) {
  std::string out = "(";
  for (std::size_t k = 0; k < h.groups.size(); ++k) out += (k ? ", " : "") + to_string(h.groups[k]);
  return out + ")";
}

HomologyProfile homology_from_betti(std::vector<std::int64_t> betti) {
  HomologyProfile h;
  for (auto b : betti) h.groups.push_back({b, {}});
  return h;
}

nlohmann::json to_json(const HomologyProfile& h) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : h.groups[k].torsion) torsion.push_back(t.convert_to<long long>());
    j[std::to_string(k)] = {{"betti", h.groups[k].betti}, {"torsion", torsion}};
  }
  return j;
}

HomologyProfile homology(const SimplicialComplex& x) {
  HomologyProfile h;
  const int d = x.dimension();
  if (d < 0) return h;
  const auto bm = boundary_matrices(x);
  std::vector<SmithForm> snf(static_cast<std::size_t>(d) + 2);
  for (int k = 1; k <= d; ++k) snf[k] = smith_normal_form(bm.boundary[k]);
  for (int k = 0; k <= d; ++k) {
    HomologyGroup g;
    const auto fk = static_cast<std::int64_t>(bm.faces[k].size());
    g.betti = fk - static_cast<std::int64_t>(snf[k].rank) - static_cast<std::int64_t>(snf[k + 1].rank);
    g.torsion = snf[k + 1].torsion();
    h.groups.push_back(std::move(g));
  }
  return h;
}

namespace {

struct H1Frame {
  std::vector<Simplex> edges;
  std::vector<std::size_t> non_tree;  // indices into edges
  SmithDecomposition snf;
};

H1Frame h1_frame(const SimplicialComplex& x) {
  H1Frame fr;
  const auto bm = boundary_matrices(x);
  if (bm.faces.size() > 1) fr.edges = bm.faces[1];
  const std::size_t n = x.num_vertices();
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < fr.edges.size(); ++e) {
    adj[fr.edges[e][0]].emplace_back(fr.edges[e][1], e);
    adj[fr.edges[e][1]].emplace_back(fr.edges[e][0], e);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<char> seen(n, 0), tree(fr.edges.size(), 0);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::deque<VertexId> q{s};
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop_front();
      for (auto [w, e] : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          tree[e] = 1;
          q.push_back(w);
        }
    }
  }
  for (std::size_t e = 0; e < fr.edges.size(); ++e)
    if (!tree[e]) fr.non_tree.push_back(e);
  const Eigen::Index cols = bm.faces.size() > 2 ? static_cast<Eigen::Index>(bm.faces[2].size()) : 0;
  IntMatrix a = IntMatrix::Zero(static_cast<Eigen::Index>(fr.non_tree.size()), cols);
  if (cols > 0) {
    const IntMatrix d2 = to_int_matrix(bm.boundary[2]);
    for (std::size_t i = 0; i < fr.non_tree.size(); ++i)
      a.row(static_cast<Eigen::Index>(i)) = d2.row(static_cast<Eigen::Index>(fr.non_tree[i]));
  }
  fr.snf = smith_decomposition(a);
  return fr;
}

}  // namespace

std::vector<Integer> h1_class(const SimplicialComplex& x, const LabelSet& closed_path) {
  if (closed_path.empty() || closed_path.front() != closed_path.back())
    throw Error(ErrorCode::NotAClosedPath, "path must start and end at the same vertex");
  std::vector<VertexId> path;
  for (const auto& l : closed_path) path.push_back(x.index_of(l));
  H1Frame fr = h1_frame(x);
  if (!fr.snf.form.torsion().empty()) throw Error(ErrorCode::TorsionUnsupported, "H1 has torsion");
  IntVector c = IntVector::Zero(static_cast<Eigen::Index>(fr.edges.size()));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const VertexId a = path[i], b = path[i + 1];
    Simplex e{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(fr.edges.begin(), fr.edges.end(), e);
    if (a == b || it == fr.edges.end() || *it != e)
      throw Error(ErrorCode::NotAClosedPath, "no edge " + closed_path[i] + " " + closed_path[i + 1]);
    c(it - fr.edges.begin()) += (a < b ? 1 : -1);
  }
  IntVector cn(static_cast<Eigen::Index>(fr.non_tree.size()));
  for (std::size_t i = 0; i < fr.non_tree.size(); ++i)
    cn(static_cast<Eigen::Index>(i)) = c(static_cast<Eigen::Index>(fr.non_tree[i]));
  const IntVector pc = fr.snf.left * cn;
  std::vector<Integer> out;
  for (Eigen::Index i = static_cast<Eigen::Index>(fr.snf.form.rank); i < pc.size(); ++i) out.push_back(pc(i));
  return out;
}

std::size_t h1_rank(const SimplicialComplex& x) {
  const auto h = homology(x);
  return h.groups.size() > 1 ? static_cast<std::size_t>(h.groups[1].betti) : 0;
}

}  // namespace contri
