#include "contri/facet_io.hpp"

#include <fstream>
#include <sstream>

#include "contri/error.hpp"

namespace contri {

SimplicialComplex read_facets(std::istream& in, Purity purity) {
  std::vector<LabelSet> facets;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    LabelSet f;
    for (std::string tok; ls >> tok;) f.push_back(tok);
    if (!f.empty()) facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets, purity);
}

SimplicialComplex read_facets_file(const std::string& path, Purity purity) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_facets(in, purity);
}

std::string write_facets(const SimplicialComplex& x) {
  std::string out;
  for (const auto& s : x.facets()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += x.labels()[s[i]];
    }
    out += '\n';
  }
  return out;
}

LabelSet parse_label_set(const std::string& text) {
  std::string t = text;
  for (auto& c : t)
    if (c == ',') c = ' ';
  std::istringstream ls(t);
  LabelSet out;
  for (std::string tok; ls >> tok;) out.push_back(tok);
  return out;
}

}  // namespace contri
