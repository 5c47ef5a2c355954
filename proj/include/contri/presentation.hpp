#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "contri/complex.hpp"
#include "contri/homology.hpp"

namespace contri {

/// Letters are +-(generator index + 1).
using Word = std::vector<int>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::string basepoint;
};

std::string to_string(const GroupPresentation& p);

/// Edge-path presentation: generators are edges off a BFS spanning tree rooted at the basepoint,
/// one relator per triangle.
GroupPresentation fundamental_group(const SimplicialComplex& x, std::string_view basepoint);

enum class TietzeStatus { Trivialized, Unknown };

struct TietzeResult {
  GroupPresentation presentation;
  TietzeStatus status = TietzeStatus::Unknown;
  std::size_t moves = 0;
};

/// Greedy generator elimination: a generator occurring once in a relator is solved for and
/// substituted, shortest relator first. Unknown only means the budget or the greedy rule ran out.
TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget);

HomologyGroup abelianization(const GroupPresentation& p);

/// Free and cyclic reduction of every relator, dropping empty and repeated ones.
void normalize_relators(GroupPresentation& p);

}  // namespace contri
