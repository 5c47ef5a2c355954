#include "contri/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "contri/error.hpp"
#include "contri/smith.hpp"

namespace contri {

namespace {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  std::size_t b = 0, e = out.size();
  while (e - b >= 2 && out[b] == -out[e - 1]) {
    ++b;
    --e;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(b), out.begin() + static_cast<std::ptrdiff_t>(e));
}

// Least rotation of w or its inverse, so conjugate/inverse relators coincide.
Word canonical(const Word& w) {
  Word best = w;
  for (const Word& v : {w, inverse(w)})
    for (std::size_t r = 0; r < v.size(); ++r) {
      Word rot(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
      if (rot < best) best = rot;
    }
  return best;
}

}  // namespace

void normalize_relators(GroupPresentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const auto& r : p.relators) {
    Word w = free_reduce(r);
    if (w.empty()) continue;
    if (seen.insert(canonical(w)).second) out.push_back(std::move(w));
  }
  p.relators = std::move(out);
}

std::string to_string(const GroupPresentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i ? ", " : " ") + p.generators[i];
  out += " |";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    out += r ? ", " : " ";
    for (std::size_t i = 0; i < p.relators[r].size(); ++i) {
      const int l = p.relators[r][i];
      out += (i ? " " : "") + p.generators[static_cast<std::size_t>(std::abs(l) - 1)] + (l < 0 ? "^-1" : "");
    }
  }
  return out + " >";
}

GroupPresentation fundamental_group(const SimplicialComplex& x, std::string_view basepoint) {
  const VertexId root = x.index_of(basepoint);
  const auto edges = x.faces(1);
  const std::size_t n = x.num_vertices();
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e][0]].emplace_back(edges[e][1], e);
    adj[edges[e][1]].emplace_back(edges[e][0], e);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<char> seen(n, 0), tree(edges.size(), 0);
  seen[root] = 1;
  std::deque<VertexId> q{root};
  std::size_t reached = 1;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop_front();
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        tree[e] = 1;
        ++reached;
        q.push_back(w);
      }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "complex is not connected");

  GroupPresentation p;
  p.basepoint = std::string(basepoint);
  std::map<Simplex, int> gen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree[e]) continue;
    p.generators.push_back(x.labels()[edges[e][0]] + "~" + x.labels()[edges[e][1]]);
    gen[edges[e]] = static_cast<int>(p.generators.size());
  }
  auto letter = [&](VertexId a, VertexId b) -> int {
    auto it = gen.find(Simplex{std::min(a, b), std::max(a, b)});
    if (it == gen.end()) return 0;
    return a < b ? it->second : -it->second;
  };
  for (const auto& t : x.faces(2)) {
    Word w;
    for (int l : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (l != 0) w.push_back(l);
    p.relators.push_back(std::move(w));
  }
  normalize_relators(p);
  return p;
}

TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget) {
  TietzeResult res;
  normalize_relators(p);
  while (res.moves < budget && !p.generators.empty()) {
    std::vector<std::size_t> order(p.relators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p.relators[a].size() < p.relators[b].size(); });
    std::size_t rel = SIZE_MAX, pos = 0;
    for (std::size_t r : order) {
      std::map<int, std::size_t> count;
      for (int l : p.relators[r]) ++count[std::abs(l)];
      int pick = 0;
      for (auto [g, c] : count)
        if (c == 1) {
          pick = g;
          break;
        }
      if (pick == 0) continue;
      rel = r;
      for (std::size_t i = 0; i < p.relators[r].size(); ++i)
        if (std::abs(p.relators[r][i]) == pick) pos = i;
      break;
    }
    if (rel == SIZE_MAX) break;

    const Word& r = p.relators[rel];
    const int g = std::abs(r[pos]);
    const bool positive = r[pos] > 0;
    Word rest(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    // g^e * rest = 1
    const Word image = positive ? inverse(rest) : rest;
    const Word image_inv = inverse(image);

    std::vector<Word> next;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i == rel) continue;
      Word w;
      for (int l : p.relators[i]) {
        if (l == g)
          w.insert(w.end(), image.begin(), image.end());
        else if (l == -g)
          w.insert(w.end(), image_inv.begin(), image_inv.end());
        else
          w.push_back(l);
      }
      for (auto& l : w)
        if (std::abs(l) > g) l += (l > 0 ? -1 : 1);
      next.push_back(std::move(w));
    }
    p.relators = std::move(next);
    p.generators.erase(p.generators.begin() + g - 1);
    normalize_relators(p);
    ++res.moves;
  }
  res.status = p.generators.empty() ? TietzeStatus::Trivialized : TietzeStatus::Unknown;
  res.presentation = std::move(p);
  return res;
}

HomologyGroup abelianization(const GroupPresentation& p) {
  const auto ng = static_cast<Eigen::Index>(p.generators.size());
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(p.relators.size()), ng);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int l : p.relators[r]) m(static_cast<Eigen::Index>(r), std::abs(l) - 1) += (l > 0 ? 1 : -1);
  const auto snf = smith_normal_form(m);
  return {ng - static_cast<std::int64_t>(snf.rank), snf.torsion()};
}

}  // namespace contri
