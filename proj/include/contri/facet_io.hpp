#pragma once

#include <iosfwd>
#include <string>

#include "contri/complex.hpp"

namespace contri {

/// Reads the facet-list format: one facet per line, labels separated by spaces, `#` comments.
SimplicialComplex read_facets(std::istream& in, Purity purity = Purity::Pure);
SimplicialComplex read_facets_file(const std::string& path, Purity purity = Purity::Pure);

/// Canonical text: labels in vertex order within a line, lines in lexicographic facet order.
std::string write_facets(const SimplicialComplex& x);

/// Parses "a b c" or "a,b,c" into a label set.
LabelSet parse_label_set(const std::string& text);

}  // namespace contri
