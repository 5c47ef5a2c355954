#include "contri/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "contri/error.hpp"
#include "contri/label.hpp"

namespace contri {

namespace {

void for_each_subset(const Simplex& s, std::size_t k, const auto& fn) {
  const std::size_t n = s.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Simplex out(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) out[i] = s[idx[i]];
    fn(out);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string join(const LabelSet& s) {
  std::string out;
  for (const auto& l : s) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct RidgeIncidence {
  Simplex ridge;
  std::size_t facet;
  std::size_t omitted;  // position of the omitted vertex in the facet
  bool operator<(const RidgeIncidence& o) const {
    return std::tie(ridge, facet, omitted) < std::tie(o.ridge, o.facet, o.omitted);
  }
};

std::vector<RidgeIncidence> ridge_incidences(const SimplicialComplex& x) {
  std::vector<RidgeIncidence> out;
  for (std::size_t f = 0; f < x.facets().size(); ++f) {
    const auto& s = x.facets()[f];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex r;
      r.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) r.push_back(s[j]);
      out.push_back({std::move(r), f, i});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Groups of incidences sharing a ridge, as [begin, end) pairs.
std::vector<std::pair<std::size_t, std::size_t>> ridge_groups(const std::vector<RidgeIncidence>& inc) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j].ridge == inc[i].ridge) ++j;
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

// Coherent orientation propagation; assumes every ridge lies in at most two facets.
bool orientable_pseudomanifold(const SimplicialComplex& x) {
  const auto inc = ridge_incidences(x);
  const std::size_t n = x.facets().size();
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>> adj(n);
  for (auto [b, e] : ridge_groups(inc)) {
    if (e - b == 2) {
      adj[inc[b].facet].emplace_back(inc[b].omitted, inc[b + 1].facet, inc[b + 1].omitted);
      adj[inc[b + 1].facet].emplace_back(inc[b + 1].omitted, inc[b].facet, inc[b].omitted);
    } else if (e - b > 2) {
      return false;
    }
  }
  std::vector<int> sign(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      for (auto [i, g, j] : adj[f]) {
        const int want = -sign[f] * (((i + j) % 2 == 0) ? 1 : -1);
        if (sign[g] == 0) {
          sign[g] = want;
          stack.push_back(g);
        } else if (sign[g] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<LabelSet>& facets, Purity purity) {
  if (facets.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");
  std::vector<std::string> labels;
  for (const auto& f : facets) {
    if (f.empty()) throw Error(ErrorCode::EmptyInput, "empty facet");
    labels.insert(labels.end(), f.begin(), f.end());
  }
  std::sort(labels.begin(), labels.end(), LabelLess{});
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (purity == Purity::Pure) {
    for (const auto& f : facets)
      if (f.size() != facets.front().size())
        throw Error(ErrorCode::MixedDimension, "facet {" + join(f) + "} has " + std::to_string(f.size()) +
                                                   " vertices, expected " + std::to_string(facets.front().size()));
  }
  std::unordered_map<std::string, VertexId> index;
  for (VertexId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& l : f) s.push_back(index.at(l));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::DuplicateVertexInFacet, "facet {" + join(f) + "} repeats a vertex");
    simplices.push_back(std::move(s));
  }
  return from_indexed(labels, std::move(simplices));
}

SimplicialComplex SimplicialComplex::from_indexed(const std::vector<std::string>& labels, std::vector<Simplex> facets) {
  for (auto& s : facets) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::DuplicateVertexInFacet, "facet repeats a vertex");
  }
  std::erase_if(facets, [](const Simplex& s) { return s.empty(); });
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  std::size_t min_size = SIZE_MAX, max_size = 0;
  for (const auto& s : facets) {
    min_size = std::min(min_size, s.size());
    max_size = std::max(max_size, s.size());
  }
  if (!facets.empty() && min_size != max_size) {
    // Drop faces covered by larger ones, largest first.
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return facets[a].size() > facets[b].size(); });
    std::set<Simplex> covered;
    std::vector<Simplex> kept;
    for (std::size_t i : order) {
      const auto& s = facets[i];
      if (covered.count(s)) continue;
      for (std::size_t k = 1; k < s.size(); ++k) for_each_subset(s, k, [&](const Simplex& t) { covered.insert(t); });
      kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    facets = std::move(kept);
  }

  std::vector<VertexId> used;
  for (const auto& s : facets) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (VertexId v : used)
    if (v >= labels.size()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  std::sort(used.begin(), used.end(), [&](VertexId a, VertexId b) { return label_less(labels[a], labels[b]); });
  std::vector<VertexId> remap(labels.size(), 0);
  SimplicialComplex out;
  for (VertexId i = 0; i < used.size(); ++i) {
    remap[used[i]] = i;
    out.labels_.push_back(labels[used[i]]);
  }
  for (auto& s : facets) {
    for (auto& v : s) v = remap[v];
    std::sort(s.begin(), s.end());
    out.dim_ = std::max(out.dim_, static_cast<int>(s.size()) - 1);
  }
  std::sort(facets.begin(), facets.end());
  out.facets_ = std::move(facets);
  return out;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& s) { return static_cast<int>(s.size()) == dim_ + 1; });
}

std::optional<VertexId> SimplicialComplex::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& a, std::string_view b) { return label_less(a, b); });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId SimplicialComplex::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
  return *v;
}

LabelSet SimplicialComplex::labels_of(const Simplex& s) const {
  LabelSet out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(labels_.at(v));
  return out;
}

Simplex SimplicialComplex::simplex_of(const LabelSet& s) const {
  Simplex out;
  out.reserve(s.size());
  for (const auto& l : s) out.push_back(index_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabelSet> SimplicialComplex::facet_labels() const {
  std::vector<LabelSet> out;
  out.reserve(facets_.size());
  for (const auto& s : facets_) out.push_back(labels_of(s));
  return out;
}

std::vector<Simplex> SimplicialComplex::faces(int k) const {
  std::vector<Simplex> out;
  if (k < 0) return out;
  for (const auto& s : facets_) for_each_subset(s, static_cast<std::size_t>(k) + 1, [&](const Simplex& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SimplicialComplex::has_face(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return std::includes(f.begin(), f.end(), s.begin(), s.end()); });
}

bool SimplicialComplex::has_facet(const LabelSet& s) const {
  Simplex t;
  for (const auto& l : s) {
    auto v = find(l);
    if (!v) return false;
    t.push_back(*v);
  }
  std::sort(t.begin(), t.end());
  return std::binary_search(facets_.begin(), facets_.end(), t);
}

std::string to_string(const FVector& f) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < f.counts.size(); ++i) os << (i ? "," : "") << f.counts[i];
  os << ')';
  return os.str();
}

FVector f_vector(const SimplicialComplex& x) {
  FVector f;
  for (int k = 0; k <= x.dimension(); ++k) f.counts.push_back(static_cast<std::int64_t>(x.faces(k).size()));
  return f;
}

std::int64_t euler_characteristic(const SimplicialComplex& x) {
  std::int64_t chi = 0;
  const auto f = f_vector(x);
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * f.counts[k];
  return chi;
}

SimplicialComplex link(const SimplicialComplex& x, std::string_view vertex) {
  return link(x, Simplex{x.index_of(vertex)});
}

SimplicialComplex link(const SimplicialComplex& x, const Simplex& face) {
  std::vector<Simplex> out;
  for (const auto& s : x.facets()) {
    if (!std::includes(s.begin(), s.end(), face.begin(), face.end())) continue;
    Simplex rest;
    std::set_difference(s.begin(), s.end(), face.begin(), face.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return SimplicialComplex::from_indexed(x.labels(), std::move(out));
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& x) {
  if (!x.is_pure()) throw Error(ErrorCode::NotPure, "boundary requires a pure complex");
  if (x.dimension() <= 0) return {};
  const auto inc = ridge_incidences(x);
  std::vector<Simplex> out;
  for (auto [b, e] : ridge_groups(inc))
    if (e - b == 1) out.push_back(inc[b].ridge);
  return SimplicialComplex::from_indexed(x.labels(), std::move(out));
}

SimplicialComplex subcomplex_union(const SimplicialComplex& x, const SimplicialComplex& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  auto facets = x.facet_labels();
  for (auto& f : y.facet_labels()) facets.push_back(std::move(f));
  return SimplicialComplex::from_facets(facets, Purity::Permissive);
}

SimplicialComplex subcomplex_intersection(const SimplicialComplex& x, const SimplicialComplex& y) {
  // Translate y into x's indices; vertices absent from x cannot be in a common face.
  std::vector<Simplex> yf;
  for (const auto& s : y.facets()) {
    Simplex t;
    for (VertexId v : s)
      if (auto w = x.find(y.labels()[v])) t.push_back(*w);
    std::sort(t.begin(), t.end());
    yf.push_back(std::move(t));
  }
  std::vector<Simplex> common;
  for (const auto& a : x.facets())
    for (const auto& b : yf) {
      Simplex c;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
      if (!c.empty()) common.push_back(std::move(c));
    }
  return SimplicialComplex::from_indexed(x.labels(), std::move(common));
}

SimplicialComplex relabel(const SimplicialComplex& x, const std::map<std::string, std::string>& map) {
  std::vector<std::string> labels = x.labels();
  for (auto& l : labels)
    if (auto it = map.find(l); it != map.end()) l = it->second;
  auto check = labels;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw Error(ErrorCode::BadParameter, "relabeling is not injective");
  return SimplicialComplex::from_indexed(labels, x.facets());
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& x) {
  UnionFind uf(x.num_vertices());
  for (const auto& s : x.facets())
    for (std::size_t i = 1; i < s.size(); ++i) uf.unite(s[0], s[i]);
  std::map<std::size_t, std::vector<Simplex>> groups;
  for (const auto& s : x.facets()) groups[uf.find(s[0])].push_back(s);
  std::vector<SimplicialComplex> out;
  for (auto& [root, facets] : groups) out.push_back(SimplicialComplex::from_indexed(x.labels(), std::move(facets)));
  return out;
}

bool is_connected(const SimplicialComplex& x) { return connected_components(x).size() <= 1; }

PlType low_dim_type(const SimplicialComplex& x, int k) {
  if (k < 0) return x.empty() ? PlType::Sphere : PlType::Other;
  if (x.empty() || x.dimension() != k || !x.is_pure()) return PlType::Other;
  if (k == 0) {
    if (x.num_vertices() == 2) return PlType::Sphere;
    if (x.num_vertices() == 1) return PlType::Ball;
    return PlType::Other;
  }
  if (k > 2) return PlType::Other;
  if (!is_connected(x)) return PlType::Other;
  const auto inc = ridge_incidences(x);
  bool closed = true;
  for (auto [b, e] : ridge_groups(inc)) {
    if (e - b > 2) return PlType::Other;
    if (e - b == 1) closed = false;
  }
  for (VertexId v = 0; v < x.num_vertices(); ++v) {
    const auto t = low_dim_type(link(x, Simplex{v}), k - 1);
    if (t == PlType::Other) return PlType::Other;
    if (closed && t != PlType::Sphere) return PlType::Other;
  }
  if (k == 1) return closed ? PlType::Sphere : PlType::Ball;
  const auto chi = euler_characteristic(x);
  if (closed) return chi == 2 ? PlType::Sphere : PlType::Other;
  // A connected surface with boundary and Euler characteristic 1 is a disk.
  return chi == 1 ? PlType::Ball : PlType::Other;
}

ManifoldCertificate certify_manifold(const SimplicialComplex& x) {
  if (x.dimension() > 3)
    throw Error(ErrorCode::DimensionUnsupported, "dimension " + std::to_string(x.dimension()) + " exceeds 3");
  ManifoldCertificate c;
  if (x.empty()) {
    c.failure = "empty complex";
    return c;
  }
  c.pure = x.is_pure();
  if (!c.pure) {
    c.failure = "not pure";
    return c;
  }
  const int d = x.dimension();
  if (d == 0) {
    c.pseudomanifold = x.num_facets() <= 2;
    c.closed = x.num_facets() == 2;
  } else {
    c.pseudomanifold = true;
    c.closed = true;
    const auto inc = ridge_incidences(x);
    for (auto [b, e] : ridge_groups(inc)) {
      if (e - b > 2) {
        c.pseudomanifold = false;
        if (c.failure.empty()) c.failure = "face {" + join(x.labels_of(inc[b].ridge)) + "} lies in more than two facets";
      }
      if (e - b != 2) c.closed = false;
    }
  }
  c.links_ok = true;
  for (VertexId v = 0; v < x.num_vertices(); ++v) {
    const auto t = low_dim_type(link(x, Simplex{v}), d - 1);
    if (t == PlType::Sphere) {
      ++c.interior_vertices;
    } else if (t == PlType::Ball && !c.closed) {
      ++c.boundary_vertices;
    } else {
      c.links_ok = false;
      if (c.failure.empty()) c.failure = "link of vertex " + x.labels()[v] + " is neither a sphere nor a ball";
    }
  }
  c.orientable = c.pseudomanifold && orientable_pseudomanifold(x);
  return c;
}

SurfaceCertificate classify_surface(const SimplicialComplex& x) {
  if (x.dimension() != 2 || !x.is_pure()) throw Error(ErrorCode::NotSurface, "not a pure 2-complex");
  SurfaceCertificate c;
  c.is_closed_surface = true;
  const auto inc = ridge_incidences(x);
  for (auto [b, e] : ridge_groups(inc)) {
    if (e - b > 2)
      throw Error(ErrorCode::NotSurface,
                  "edge {" + join(x.labels_of(inc[b].ridge)) + "} lies in " + std::to_string(e - b) + " triangles");
    if (e - b == 1) c.is_closed_surface = false;
  }
  for (VertexId v = 0; v < x.num_vertices(); ++v) {
    const auto t = low_dim_type(link(x, Simplex{v}), 1);
    if (t == PlType::Other || (c.is_closed_surface && t != PlType::Sphere))
      throw Error(ErrorCode::NotSurface, "link of vertex " + x.labels()[v] + " is not a cycle or path");
  }
  c.euler_characteristic = euler_characteristic(x);
  c.orientable = orientable_pseudomanifold(x);
  c.components = connected_components(x).size();
  if (c.is_closed_surface && c.components == 1)
    c.genus = c.orientable ? (2 - c.euler_characteristic) / 2 : 2 - c.euler_characteristic;
  return c;
}

std::string_view to_string(BallCertificate c) {
  switch (c) {
    case BallCertificate::Collapsible: return "COLLAPSIBLE";
    case BallCertificate::HomologyBall: return "HOMOLOGY_BALL";
    case BallCertificate::Fail: return "FAIL";
  }
  return "FAIL";
}

bool greedy_collapsible(const SimplicialComplex& x) {
  if (x.empty()) return false;
  std::vector<Simplex> faces;
  for (int k = 0; k <= x.dimension(); ++k) {
    auto fk = x.faces(k);
    faces.insert(faces.end(), fk.begin(), fk.end());
  }
  std::sort(faces.begin(), faces.end());
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
  const std::size_t n = faces.size();
  std::vector<std::vector<std::size_t>> sub(n), cof(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (faces[i].size() < 2) continue;
    for_each_subset(faces[i], faces[i].size() - 1, [&](const Simplex& t) {
      const std::size_t j = index.at(t);
      sub[i].push_back(j);
      cof[j].push_back(i);
    });
  }
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> live_cof(n);
  for (std::size_t i = 0; i < n; ++i) live_cof[i] = cof[i].size();

  auto partner = [&](std::size_t i) -> std::optional<std::size_t> {
    if (!alive[i] || live_cof[i] != 1) return std::nullopt;
    for (std::size_t t : cof[i])
      if (alive[t]) return live_cof[t] == 0 ? std::optional(t) : std::nullopt;
    return std::nullopt;
  };
  std::set<std::size_t> free_faces;
  for (std::size_t i = 0; i < n; ++i)
    if (partner(i)) free_faces.insert(i);

  std::size_t remaining = n;
  while (!free_faces.empty()) {
    const std::size_t s = *free_faces.begin();
    free_faces.erase(free_faces.begin());
    const auto t = partner(s);
    if (!t) continue;
    alive[s] = alive[*t] = 0;
    remaining -= 2;
    free_faces.erase(*t);
    std::set<std::size_t> touched;
    for (std::size_t r : sub[*t]) {
      --live_cof[r];
      touched.insert(r);
    }
    for (std::size_t r : sub[s]) {
      --live_cof[r];
      touched.insert(r);
    }
    std::set<std::size_t> recheck = touched;
    for (std::size_t r : touched) recheck.insert(sub[r].begin(), sub[r].end());
    for (std::size_t r : recheck) {
      if (partner(r))
        free_faces.insert(r);
      else
        free_faces.erase(r);
    }
  }
  return remaining == 1;
}

}  // namespace contri
