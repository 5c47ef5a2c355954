#pragma once

#include <map>
#include <string>
#include <vector>

#include "contri/complex.hpp"
#include "contri/generators.hpp"
#include "contri/ledger.hpp"

namespace contri {

/// Vertices absent from the map are their own class.
struct IdentificationScheme {
  std::map<std::string, std::string> representative;

  std::string image(const std::string& v) const;
};

/// Throws FacetCollapse or FacetCollision when the image is not simplicial.
SimplicialComplex quotient(const SimplicialComplex& x, const IdentificationScheme& s);

struct GluingMap {
  LabelSet source;  // facet of X1
  LabelSet target;  // facet of X2
  std::map<std::string, std::string> psi;
};

/// Labels of X2 outside the target facet that clash with X1 get primes appended.
SimplicialComplex connected_sum(const SimplicialComplex& x1, const SimplicialComplex& x2, const GluingMap& g);

/// i-th smallest of sigma1 to i-th smallest of sigma2, then one transposition if that loses orientability.
GluingMap canonical_gluing(const SimplicialComplex& x1, const SimplicialComplex& x2, const LabelSet& sigma1,
                           const LabelSet& sigma2);
SimplicialComplex connected_sum(const SimplicialComplex& x1, const SimplicialComplex& x2, const LabelSet& sigma1,
                                const LabelSet& sigma2);

enum class TwistSign { Positive, Negative, Zero };
std::string to_string(TwistSign s);
TwistSign parse_twist_sign(const std::string& s);

struct SummandRecord {
  int copy = 0;
  /// Empty for the first copy.
  LabelSet removed_chain_facet;
  LabelSet removed_copy_facet;
  std::string knot;
  std::int64_t self_linking = 0;
  /// Both removed facets lie in T2 parts, away from this carrier.
  std::string carrier;
  std::int64_t df0 = 0;
};

struct SChain {
  NamedComplex complex;
  ContactClass ledger;
  std::vector<SummandRecord> summands;
};

/// n copies of S12 summed along T2 facets. Positive twists along trefoils, Negative along unknots;
/// Zero requires n = 0 and builds an unknot twist plus a trefoil twist on two copies.
SChain s_chain(int n, TwistSign sign);

}  // namespace contri
