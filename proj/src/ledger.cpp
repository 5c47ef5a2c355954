#include "contri/ledger.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "contri/error.hpp"

namespace contri {

int writhe(const KnotDiagram& d) {
  for (int s : d.crossings)
    if (s != 1 && s != -1) throw Error(ErrorCode::BadParameter, "crossing signs must be +1 or -1");
  return std::accumulate(d.crossings.begin(), d.crossings.end(), 0);
}

int self_linking(const KnotDiagram& d) { return writhe(d); }

KnotDiagram mirror(const KnotDiagram& d) {
  KnotDiagram m = d;
  for (auto& s : m.crossings) s = -s;
  m.name = "mirror " + d.name;
  return m;
}

KnotDiagram concatenate(const KnotDiagram& a, const KnotDiagram& b) {
  KnotDiagram out = a;
  out.crossings.insert(out.crossings.end(), b.crossings.begin(), b.crossings.end());
  out.name = a.name + " # " + b.name;
  return out;
}

KnotDiagram unknot_front() { return {{-1}, "unknot"}; }
KnotDiagram trefoil_front() { return {{1, 1, 1, -1, -1}, "right-handed trefoil"}; }

bool KnotClass::null_homologous() const {
  return std::all_of(homology.begin(), homology.end(), [](std::int64_t v) { return v == 0; });
}

KnotClass KnotClass::null_homologous_knot(std::size_t rank, std::int64_t sl, std::string name) {
  return {std::vector<std::int64_t>(rank, 0), sl, std::move(name)};
}

KnotClass KnotClass::with_class(std::vector<std::int64_t> homology, std::string name) {
  KnotClass k{std::move(homology), std::nullopt, std::move(name)};
  return k;
}

ContactClass ContactClass::make(std::string manifold, std::size_t h1_rank, std::optional<std::int64_t> f0) {
  ContactClass c;
  c.manifold = std::move(manifold);
  c.d2.assign(h1_rank, 0);
  c.d3 = 0;
  c.f0_bound = f0;
  c.base_d2 = c.d2;
  c.base_d3 = c.d3;
  c.base_f0 = f0;
  return c;
}

namespace {

void step(ContactClass& c, const LedgerEvent& e) {
  switch (e.kind) {
    case EventKind::Twist: {
      if (e.knot.homology.size() != c.d2.size())
        throw Error(ErrorCode::BasisMismatch, "knot class has " + std::to_string(e.knot.homology.size()) +
                                                  " coordinates, ledger has " + std::to_string(c.d2.size()));
      if (e.knot.self_linking && !e.knot.null_homologous())
        throw Error(ErrorCode::BadParameter, "self-linking is defined only for null-homologous knots");
      for (std::size_t i = 0; i < c.d2.size(); ++i) c.d2[i] -= e.knot.homology[i];
      if (!e.knot.null_homologous())
        c.d3.reset();
      else if (c.d3 && e.knot.self_linking)
        *c.d3 += *e.knot.self_linking;
      else
        c.d3.reset();
      c.f0_bound = c.f0_bound ? std::optional(*c.f0_bound + e.df0) : std::nullopt;
      break;
    }
    case EventKind::Reference:
      std::fill(c.d2.begin(), c.d2.end(), 0);
      c.d3 = 0;
      break;
    case EventKind::Certify: c.f0_bound = e.f0; break;
  }
}

}  // namespace

ContactClass apply_lutz(const ContactClass& c, const KnotClass& k, std::int64_t df0, const std::string& note) {
  ContactClass out = c;
  LedgerEvent e{EventKind::Twist, k, df0, 0, note};
  step(out, e);
  out.history.push_back(std::move(e));
  return out;
}

ContactClass declare_reference(const ContactClass& c, const std::string& note) {
  ContactClass out = c;
  LedgerEvent e{EventKind::Reference, {}, 0, 0, note};
  step(out, e);
  out.history.push_back(std::move(e));
  return out;
}

ContactClass certify_f0(const ContactClass& c, std::int64_t f0, const std::string& note) {
  ContactClass out = c;
  LedgerEvent e{EventKind::Certify, {}, 0, f0, note};
  step(out, e);
  out.history.push_back(std::move(e));
  return out;
}

ContactClass replay(const ContactClass& c) {
  ContactClass out = c;
  out.d2 = c.base_d2;
  out.d3 = c.base_d3;
  out.f0_bound = c.base_f0;
  for (const auto& e : c.history) step(out, e);
  return out;
}

std::int64_t s3_vertex_bound(std::int64_t n) { return n == 0 ? 10 : 3 * std::llabs(n) + 4; }

std::int64_t general_vertex_bound(std::int64_t f0, std::int64_t n) {
  if (f0 < 5) throw Error(ErrorCode::BadParameter, "a triangulated 3-manifold has at least 5 vertices");
  return n == 0 ? f0 + 6 : f0 + 3 * std::llabs(n);
}

T3Ledger t3_ledger(int n, double r0) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "n must be non-negative");
  if (!(r0 > 0.25 && r0 < 0.5)) throw Error(ErrorCode::BadParameter, "r0 must lie in (1/4, 1/2)");
  T3Ledger out;
  out.ledger = ContactClass::make("t3", 3, std::nullopt);
  for (int k = 1; k <= n; ++k) {
    out.ledger = apply_lutz(out.ledger, KnotClass::with_class({0, 0, 1}, "core {(1/2,1/2,z)}"), 0,
                            "twist " + std::to_string(k) + " along the core circle");
    out.disks.push_back({"core {(1/2,1/2,z)}", r0 / (k + 1), r0 / k, k});
  }
  if (n == 1) out.ledger = certify_f0(out.ledger, 40, "t3_40");
  if (n >= 2) out.ledger = certify_f0(out.ledger, 8LL * n * n * n, "t3_family(" + std::to_string(n) + ")");
  return out;
}

namespace {

nlohmann::json opt(const std::optional<std::int64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }
std::optional<std::int64_t> opt_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::int64_t>();
}

std::string kind_name(EventKind k) {
  switch (k) {
    case EventKind::Twist: return "twist";
    case EventKind::Reference: return "reference";
    case EventKind::Certify: return "certify";
  }
  return "?";
}

}  // namespace

nlohmann::json to_json(const ContactClass& c) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& e : c.history) {
    nlohmann::json j = {{"kind", kind_name(e.kind)}, {"note", e.note}};
    if (e.kind == EventKind::Twist) {
      j["knot"] = {{"name", e.knot.name}, {"class", e.knot.homology}, {"sl", opt(e.knot.self_linking)}};
      j["df0"] = e.df0;
    }
    if (e.kind == EventKind::Certify) j["f0"] = e.f0;
    hist.push_back(std::move(j));
  }
  return {{"manifold", c.manifold}, {"d2", c.d2},           {"d3", opt(c.d3)},
          {"f0_bound", opt(c.f0_bound)}, {"base", {{"d2", c.base_d2}, {"d3", opt(c.base_d3)}, {"f0", opt(c.base_f0)}}},
          {"history", hist}};
}

ContactClass contact_class_from_json(const nlohmann::json& j) {
  try {
    ContactClass c;
    c.manifold = j.at("manifold").get<std::string>();
    c.d2 = j.at("d2").get<std::vector<std::int64_t>>();
    c.d3 = opt_from(j.at("d3"));
    c.f0_bound = opt_from(j.at("f0_bound"));
    c.base_d2 = j.at("base").at("d2").get<std::vector<std::int64_t>>();
    c.base_d3 = opt_from(j.at("base").at("d3"));
    c.base_f0 = opt_from(j.at("base").at("f0"));
    for (const auto& h : j.at("history")) {
      LedgerEvent e;
      const auto kind = h.at("kind").get<std::string>();
      e.note = h.value("note", "");
      if (kind == "twist") {
        e.kind = EventKind::Twist;
        e.knot.name = h.at("knot").value("name", "");
        e.knot.homology = h.at("knot").at("class").get<std::vector<std::int64_t>>();
        e.knot.self_linking = opt_from(h.at("knot").at("sl"));
        e.df0 = h.at("df0").get<std::int64_t>();
      } else if (kind == "reference") {
        e.kind = EventKind::Reference;
      } else if (kind == "certify") {
        e.kind = EventKind::Certify;
        e.f0 = h.at("f0").get<std::int64_t>();
      } else {
        throw Error(ErrorCode::ParseError, "unknown ledger event '" + kind + "'");
      }
      c.history.push_back(std::move(e));
    }
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

}  // namespace contri
