#include "contri/surgery.hpp"

#include <algorithm>
#include <set>

#include "contri/error.hpp"
#include "contri/label.hpp"

namespace contri {

namespace {

std::string join(const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "}";
}

LabelSet sorted(LabelSet s) {
  std::sort(s.begin(), s.end(), LabelLess{});
  return s;
}

bool facet_less(const LabelSet& a, const LabelSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LabelLess{});
}

}  // namespace

std::string IdentificationScheme::image(const std::string& v) const {
  auto it = representative.find(v);
  return it == representative.end() ? v : it->second;
}

SimplicialComplex quotient(const SimplicialComplex& x, const IdentificationScheme& s) {
  std::map<LabelSet, LabelSet> seen;
  std::vector<LabelSet> out;
  out.reserve(x.num_facets());
  for (const auto& f : x.facet_labels()) {
    LabelSet img;
    for (const auto& v : f) img.push_back(s.image(v));
    img = sorted(img);
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
      throw Error(ErrorCode::FacetCollapse, "facet " + join(f) + " maps to " + join(img));
    auto [it, fresh] = seen.emplace(img, f);
    if (!fresh)
      throw Error(ErrorCode::FacetCollision,
                  "facets " + join(it->second) + " and " + join(f) + " both map to " + join(img));
    out.push_back(std::move(img));
  }
  return SimplicialComplex::from_facets(out, Purity::Permissive);
}

namespace {

void check_summands(const SimplicialComplex& x1, const SimplicialComplex& x2, const LabelSet& src,
                    const LabelSet& tgt) {
  if (x1.dimension() != x2.dimension())
    throw Error(ErrorCode::DimensionMismatch, "dimensions " + std::to_string(x1.dimension()) + " and " +
                                                  std::to_string(x2.dimension()));
  if (!x1.has_facet(src)) throw Error(ErrorCode::NotAFacet, join(src) + " is not a facet of the first summand");
  if (!x2.has_facet(tgt)) throw Error(ErrorCode::NotAFacet, join(tgt) + " is not a facet of the second summand");
}

}  // namespace

SimplicialComplex connected_sum(const SimplicialComplex& x1, const SimplicialComplex& x2, const GluingMap& g) {
  const LabelSet src = sorted(g.source), tgt = sorted(g.target);
  check_summands(x1, x2, src, tgt);
  LabelSet keys, vals;
  for (const auto& [k, v] : g.psi) {
    keys.push_back(k);
    vals.push_back(v);
  }
  if (sorted(keys) != src || sorted(vals) != tgt || std::set<std::string>(vals.begin(), vals.end()).size() != vals.size())
    throw Error(ErrorCode::BadGluingMap, "psi is not a bijection " + join(src) + " -> " + join(tgt));

  std::set<std::string> taken(x1.labels().begin(), x1.labels().end());
  std::map<std::string, std::string> rename;
  for (const auto& [k, v] : g.psi) rename[v] = k;
  for (const auto& l : x2.labels()) {
    if (rename.count(l)) continue;
    std::string n = l;
    while (taken.count(n)) n += "'";
    taken.insert(n);
    rename[l] = n;
  }

  std::vector<LabelSet> facets;
  for (const auto& f : x1.facet_labels())
    if (f != src) facets.push_back(f);
  for (const auto& f : x2.facet_labels()) {
    if (f == tgt) continue;
    LabelSet img;
    for (const auto& v : f) img.push_back(rename.at(v));
    facets.push_back(sorted(img));
  }
  return SimplicialComplex::from_facets(facets);
}

GluingMap canonical_gluing(const SimplicialComplex& x1, const SimplicialComplex& x2, const LabelSet& sigma1,
                           const LabelSet& sigma2) {
  GluingMap g{sorted(sigma1), sorted(sigma2), {}};
  check_summands(x1, x2, g.source, g.target);
  for (std::size_t i = 0; i < g.source.size(); ++i) g.psi[g.source[i]] = g.target[i];
  if (g.source.size() < 2) return g;
  if (!certify_manifold(x1).orientable || !certify_manifold(x2).orientable) return g;
  if (certify_manifold(connected_sum(x1, x2, g)).orientable) return g;
  std::swap(g.psi[g.source[0]], g.psi[g.source[1]]);
  return g;
}

SimplicialComplex connected_sum(const SimplicialComplex& x1, const SimplicialComplex& x2, const LabelSet& sigma1,
                                const LabelSet& sigma2) {
  return connected_sum(x1, x2, canonical_gluing(x1, x2, sigma1, sigma2));
}

std::string to_string(TwistSign s) {
  switch (s) {
    case TwistSign::Positive: return "+";
    case TwistSign::Negative: return "-";
    case TwistSign::Zero: return "0";
  }
  return "?";
}

TwistSign parse_twist_sign(const std::string& s) {
  if (s == "+" || s == "plus" || s == "positive") return TwistSign::Positive;
  if (s == "-" || s == "minus" || s == "negative") return TwistSign::Negative;
  if (s == "0" || s == "zero") return TwistSign::Zero;
  throw Error(ErrorCode::BadParameter, "sign must be +, - or 0, got '" + s + "'");
}

SChain s_chain(int n, TwistSign sign) {
  if (sign == TwistSign::Zero && n != 0) throw Error(ErrorCode::BadParameter, "sign 0 is only used with n = 0");
  if (sign != TwistSign::Zero && n < 1) throw Error(ErrorCode::BadParameter, "n must be at least 1");
  const int copies = sign == TwistSign::Zero ? 2 : n;

  const auto s12 = s_ij(1, 2).complex;
  const auto t2 = solid_torus(2).complex.facet_labels();
  auto copy_of = [&](int c) {
    std::map<std::string, std::string> m;
    for (const auto& l : s12.labels()) m[l] = "s" + std::to_string(c) + "." + l;
    return m;
  };
  auto t2_of = [&](const std::map<std::string, std::string>& m) {
    std::vector<LabelSet> out;
    for (const auto& f : t2) {
      LabelSet g;
      for (const auto& v : f) g.push_back(m.at(v));
      out.push_back(sorted(g));
    }
    std::sort(out.begin(), out.end(), facet_less);
    return out;
  };

  SChain out;
  out.ledger = ContactClass::make("s3", 0, 7);
  std::vector<LabelSet> available;
  SimplicialComplex chain;
  for (int c = 1; c <= copies; ++c) {
    const auto m = copy_of(c);
    const auto piece = relabel(s12, m);
    const auto piece_t2 = t2_of(m);
    const bool trefoil = sign == TwistSign::Positive || (sign == TwistSign::Zero && c == 2);
    const KnotDiagram front = trefoil ? trefoil_front() : unknot_front();
    SummandRecord rec;
    rec.copy = c;
    rec.knot = front.name;
    rec.self_linking = self_linking(front);
    rec.carrier = "transverse push-off of the core of T1 in copy " + std::to_string(c);
    rec.df0 = c == 1 ? 0 : 3;
    if (c == 1) {
      chain = piece;
      available = piece_t2;
    } else {
      auto alpha = std::find_if(available.begin(), available.end(), [&](const LabelSet& f) { return chain.has_facet(f); });
      if (alpha == available.end()) throw Error(ErrorCode::InconsistentGluing, "no T2 facet left in the chain");
      rec.removed_chain_facet = *alpha;
      rec.removed_copy_facet = piece_t2.front();
      const auto g = canonical_gluing(chain, piece, rec.removed_chain_facet, rec.removed_copy_facet);
      chain = connected_sum(chain, piece, g);
      available.erase(alpha);
      std::map<std::string, std::string> back;
      for (const auto& [k, v] : g.psi) back[v] = k;
      for (std::size_t i = 1; i < piece_t2.size(); ++i) {
        LabelSet f;
        for (const auto& v : piece_t2[i]) f.push_back(back.count(v) ? back.at(v) : v);
        available.push_back(sorted(f));
      }
      std::sort(available.begin(), available.end(), facet_less);
    }
    out.ledger = apply_lutz(out.ledger, KnotClass::null_homologous_knot(0, rec.self_linking, front.name), rec.df0,
                            "copy " + std::to_string(c));
    out.summands.push_back(std::move(rec));
  }
  out.complex = {"s_chain(" + std::to_string(n) + "," + to_string(sign) + ")", chain, std::nullopt,
                 "iterated connected sum of " + std::to_string(copies) + " copies of S12", nullptr};
  return out;
}

}  // namespace contri
