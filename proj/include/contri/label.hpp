#pragma once

#include <string>
#include <string_view>

namespace contri {

/// Natural order on vertex labels: digit runs compare numerically, so "v2" < "v10".
/// Ties (e.g. "v01" vs "v1") fall back to plain string order, keeping the order total.
bool label_less(std::string_view a, std::string_view b);

struct LabelLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return label_less(a, b); }
};

}  // namespace contri
