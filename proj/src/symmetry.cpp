#include "contri/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "contri/error.hpp"

namespace contri {

Permutation to_permutation(const std::vector<std::string>& labels, const VertexPermutation& p) {
  std::map<std::string, VertexId> idx;
  for (VertexId i = 0; i < labels.size(); ++i) idx[labels[i]] = i;
  Permutation out(labels.size());
  std::vector<bool> hit(labels.size(), false);
  for (VertexId i = 0; i < labels.size(); ++i) {
    auto it = p.find(labels[i]);
    const std::string& img = it == p.end() ? labels[i] : it->second;
    auto j = idx.find(img);
    if (j == idx.end()) throw Error(ErrorCode::BadParameter, "'" + img + "' is not a vertex");
    if (hit[j->second]) throw Error(ErrorCode::BadParameter, "not a bijection: '" + img + "' is hit twice");
    hit[j->second] = true;
    out[i] = j->second;
  }
  for (const auto& [k, v] : p)
    if (!idx.count(k)) throw Error(ErrorCode::BadParameter, "'" + k + "' is not a vertex");
  return out;
}

VertexPermutation to_vertex_permutation(const std::vector<std::string>& labels, const Permutation& p) {
  VertexPermutation out;
  for (std::size_t i = 0; i < p.size(); ++i) out[labels[i]] = labels[p[i]];
  return out;
}

std::string cycle_notation(const std::vector<std::string>& labels, const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      if (j != i) out += ",";
      out += labels[j];
      seen[j] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<VertexId>(i);
  return out;
}

Simplex apply(const Permutation& p, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(p[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const SimplicialComplex& x, const Permutation& p) {
  if (p.size() != x.num_vertices()) return false;
  std::set<Simplex> facets(x.facets().begin(), x.facets().end());
  for (const auto& f : x.facets())
    if (!facets.count(apply(p, f))) return false;
  return true;
}

std::vector<bool> verify_automorphisms(const SimplicialComplex& x, const std::vector<VertexPermutation>& perms) {
  std::vector<bool> out;
  for (const auto& p : perms) {
    try {
      out.push_back(is_automorphism(x, to_permutation(x.labels(), p)));
    } catch (const Error&) {
      out.push_back(false);
    }
  }
  return out;
}

namespace {

struct Shape {
  std::size_t n = 0;
  std::vector<std::vector<char>> adj;
  std::set<Simplex> facets;
  std::vector<std::vector<std::size_t>> incident;  // facet indices per vertex
  std::vector<std::vector<std::int64_t>> signature;
  const SimplicialComplex* x = nullptr;

  explicit Shape(const SimplicialComplex& c) : n(c.num_vertices()), x(&c) {
    adj.assign(n, std::vector<char>(n, 0));
    incident.resize(n);
    for (std::size_t k = 0; k < c.facets().size(); ++k) {
      const auto& f = c.facets()[k];
      facets.insert(f);
      for (auto a : f) {
        incident[a].push_back(k);
        for (auto b : f)
          if (a != b) adj[a][b] = 1;
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto sig = f_vector(link(c, Simplex{static_cast<VertexId>(v)})).counts;
      sig.insert(sig.begin(), static_cast<std::int64_t>(incident[v].size()));
      signature.push_back(std::move(sig));
    }
  }
};

/// Enumerates facet-preserving bijections a -> b extending `forced`; `visit` returns false to stop.
class Matcher {
 public:
  Matcher(const Shape& a, const Shape& b) : a_(a), b_(b) {}

  void run(const std::vector<std::pair<VertexId, VertexId>>& forced, const std::function<bool(const Permutation&)>& visit) {
    const std::size_t n = a_.n;
    forced_.assign(n, -1);
    order_.clear();
    std::vector<bool> chosen(n, false);
    for (auto [v, w] : forced) {
      forced_[v] = static_cast<long>(w);
      if (!chosen[v]) order_.push_back(v);
      chosen[v] = true;
    }
    while (order_.size() < n) {
      std::size_t best = n;
      int best_score = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (chosen[v]) continue;
        int score = 0;
        for (auto u : order_) score += a_.adj[v][u];
        if (score > best_score) best = v, best_score = score;
      }
      order_.push_back(static_cast<VertexId>(best));
      chosen[best] = true;
    }
    img_.assign(n, 0);
    assigned_.assign(n, false);
    used_.assign(n, false);
    visit_ = &visit;
    stop_ = false;
    descend(0);
  }

 private:
  bool consistent(std::size_t depth, VertexId v, VertexId w) const {
    if (a_.signature[v] != b_.signature[w]) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      VertexId u = order_[k];
      if (a_.adj[v][u] != b_.adj[w][img_[u]]) return false;
    }
    return true;
  }

  bool facets_ok(VertexId v) const {
    for (auto k : a_.incident[v]) {
      const auto& f = a_.x->facets()[k];
      Simplex im;
      bool full = true;
      for (auto u : f) {
        if (!assigned_[u]) {
          full = false;
          break;
        }
        im.push_back(img_[u]);
      }
      if (!full) continue;
      std::sort(im.begin(), im.end());
      if (!b_.facets.count(im)) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (stop_) return;
    if (depth == a_.n) {
      if (!(*visit_)(img_)) stop_ = true;
      return;
    }
    const VertexId v = order_[depth];
    for (VertexId w = 0; w < b_.n && !stop_; ++w) {
      if (used_[w]) continue;
      if (forced_[v] >= 0 && forced_[v] != static_cast<long>(w)) continue;
      if (!consistent(depth, v, w)) continue;
      img_[v] = w;
      assigned_[v] = true;
      used_[w] = true;
      if (facets_ok(v)) descend(depth + 1);
      assigned_[v] = false;
      used_[w] = false;
    }
  }

  const Shape& a_;
  const Shape& b_;
  std::vector<long> forced_;
  std::vector<VertexId> order_;
  Permutation img_;
  std::vector<bool> assigned_, used_;
  const std::function<bool(const Permutation&)>* visit_ = nullptr;
  bool stop_ = false;
};

void guard(const SimplicialComplex& x, std::size_t max_vertices) {
  if (x.num_vertices() > max_vertices)
    throw Error(ErrorCode::TooLarge, std::to_string(x.num_vertices()) + " vertices exceeds the limit of " +
                                         std::to_string(max_vertices));
}

std::vector<VertexId> orbit_of(VertexId start, const std::vector<Permutation>& gens) {
  std::vector<VertexId> orbit{start};
  std::set<VertexId> seen{start};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens)
      if (seen.insert(g[orbit[i]]).second) orbit.push_back(g[orbit[i]]);
  return orbit;
}

}  // namespace

PermutationGroup automorphism_group(const SimplicialComplex& x, std::size_t max_vertices) {
  guard(x, max_vertices);
  const Shape s(x);
  Matcher m(s, s);
  PermutationGroup g;
  g.labels = x.labels();
  const auto n = static_cast<VertexId>(s.n);
  std::vector<std::pair<VertexId, VertexId>> fixed;
  for (VertexId b = 0; b < n; ++b) {
    std::vector<Permutation> level;
    std::set<VertexId> orbit{b};
    for (VertexId w = 0; w < n; ++w) {
      if (orbit.count(w) || s.signature[w] != s.signature[b]) continue;
      auto forced = fixed;
      forced.emplace_back(b, w);
      std::optional<Permutation> found;
      m.run(forced, [&](const Permutation& p) {
        found = p;
        return false;
      });
      if (!found) continue;
      level.push_back(*found);
      auto o = orbit_of(b, level);
      orbit.insert(o.begin(), o.end());
    }
    g.base_orbit_sizes.push_back(orbit.size());
    g.order *= static_cast<unsigned>(orbit.size());
    g.generators.insert(g.generators.end(), level.begin(), level.end());
    fixed.emplace_back(b, b);
  }
  return g;
}

std::vector<Permutation> all_automorphisms(const SimplicialComplex& x, std::size_t max_vertices) {
  guard(x, max_vertices);
  const Shape s(x);
  Matcher m(s, s);
  std::vector<Permutation> out;
  m.run({}, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_group(const PermutationGroup& g) {
  Permutation id(g.labels.size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : g.generators) {
      auto p = compose(s, queue[i]);
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Simplex>> orbits(const PermutationGroup& g, const std::vector<Simplex>& cells) {
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], i);
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  for (const auto& p : g.generators)
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto it = index.find(apply(p, cells[i]));
      if (it == index.end()) throw Error(ErrorCode::BadParameter, "cell set is not invariant under the group");
      auto a = root(i), b = root(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<Simplex>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) groups[root(i)].push_back(cells[i]);
  std::vector<std::vector<Simplex>> out;
  for (auto& [r, v] : groups) out.push_back(std::move(v));
  return out;
}

std::optional<VertexPermutation> find_isomorphism(const SimplicialComplex& x, const SimplicialComplex& y,
                                                  std::size_t max_vertices) {
  guard(x, max_vertices);
  guard(y, max_vertices);
  if (x.num_vertices() != y.num_vertices() || f_vector(x) != f_vector(y)) return std::nullopt;
  const Shape a(x), b(y);
  auto sa = a.signature, sb = b.signature;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  Matcher m(a, b);
  std::optional<VertexPermutation> out;
  m.run({}, [&](const Permutation& p) {
    VertexPermutation v;
    for (std::size_t i = 0; i < p.size(); ++i) v[x.labels()[i]] = y.labels()[p[i]];
    out = std::move(v);
    return false;
  });
  return out;
}

}  // namespace contri
