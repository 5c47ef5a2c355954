#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "contri/geometry.hpp"

namespace contri {

/// Crossing signs of a front projection.
struct KnotDiagram {
  std::vector<int> crossings;
  std::string name;
};

int writhe(const KnotDiagram& d);
/// For a transverse knot in the standard structure, sl equals the writhe of its front.
int self_linking(const KnotDiagram& d);
KnotDiagram mirror(const KnotDiagram& d);
KnotDiagram concatenate(const KnotDiagram& a, const KnotDiagram& b);
KnotDiagram unknot_front();
/// Right-handed trefoil front with writhe +1.
KnotDiagram trefoil_front();

struct KnotClass {
  std::vector<std::int64_t> homology;
  /// Only meaningful for null-homologous knots.
  std::optional<std::int64_t> self_linking;
  std::string name;

  bool null_homologous() const;
  static KnotClass null_homologous_knot(std::size_t rank, std::int64_t sl, std::string name);
  static KnotClass with_class(std::vector<std::int64_t> homology, std::string name);
};

enum class EventKind { Twist, Reference, Certify };

struct LedgerEvent {
  EventKind kind = EventKind::Twist;
  KnotClass knot;            // Twist
  std::int64_t df0 = 0;      // Twist
  std::int64_t f0 = 0;       // Certify
  std::string note;
};

/**
 * Relative homotopy invariants of a contact structure against a declared reference.
 *
 * d2 lives in a fixed H1 basis. d3 is compared only while d2 is zero; a twist along a knot with
 * nonzero class leaves it undefined until a Reference event declares the current structure as the
 * new reference.
 */
struct ContactClass {
  std::string manifold;
  std::vector<std::int64_t> d2;
  std::optional<std::int64_t> d3;
  std::optional<std::int64_t> f0_bound;

  std::vector<std::int64_t> base_d2;
  std::optional<std::int64_t> base_d3;
  std::optional<std::int64_t> base_f0;
  std::vector<LedgerEvent> history;

  static ContactClass make(std::string manifold, std::size_t h1_rank, std::optional<std::int64_t> f0);
  friend bool operator==(const ContactClass& a, const ContactClass& b) {
    return a.manifold == b.manifold && a.d2 == b.d2 && a.d3 == b.d3 && a.f0_bound == b.f0_bound;
  }
};

ContactClass apply_lutz(const ContactClass& c, const KnotClass& k, std::int64_t df0, const std::string& note = "");
ContactClass declare_reference(const ContactClass& c, const std::string& note = "");
ContactClass certify_f0(const ContactClass& c, std::int64_t f0, const std::string& note = "");
/// Folds the history from the base state.
ContactClass replay(const ContactClass& c);

/// 3|n| + 4 for n != 0, 10 for n = 0.
std::int64_t s3_vertex_bound(std::int64_t n);
/// f0 + 3|n| for n != 0, f0 + 6 for n = 0.
std::int64_t general_vertex_bound(std::int64_t f0, std::int64_t n);

struct T3Ledger {
  ContactClass ledger;
  std::vector<DiskSpec> disks;
};

/// n twists along the core class (0,0,1); disk k has radius in (r0/(k+1), r0/k).
T3Ledger t3_ledger(int n, double r0);

nlohmann::json to_json(const ContactClass& c);
ContactClass contact_class_from_json(const nlohmann::json& j);

}  // namespace contri
