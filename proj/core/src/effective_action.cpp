#include "planar/effective_action.hpp"

#include <cstdlib>

namespace planar {

std::string UnivariateRelation::to_string() const {
  std::string out = "k" + std::to_string(order) + "/k2^" + std::to_string(order) + " =";
  bool first = true;
  for (const auto& term : terms) {
    const int c = term.coefficient;
    out += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
    if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + " ";
    if (term.orders.empty()) out += "1/k2";
    for (std::size_t i = 0; i < term.orders.size(); ++i) {
      if (i > 0) out += " k2 ";
      out += "l" + std::to_string(term.orders[i]);
    }
    first = false;
  }
  return out;
}

const std::vector<UnivariateRelation>& printed_univariate_relations() {
  static const std::vector<UnivariateRelation> table = {
      {2, {{1, {2}}}},
      {3, {{-1, {3}}}},
      {4, {{-1, {4}}, {2, {3, 3}}}},
      {5, {{-1, {5}}, {-5, {4, 3}}}},
      {6, {{-1, {6}}, {6, {5, 3}}, {6, {4, 4}}, {-14, {3, 3, 3}}}},
  };
  return table;
}

}  // namespace planar
