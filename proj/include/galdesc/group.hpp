#pragma once

#include <string>
#include <vector>

#include "galdesc/errors.hpp"

namespace galdesc {

// Finite group by multiplication table: table[g][h] = g*h.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  std::vector<std::string> names;
  int identity = 0;

  int mul(int g, int h) const {
    if (g < 0 || g >= order || h < 0 || h >= order) throw BadGroupElement();
    return table[static_cast<size_t>(g)][static_cast<size_t>(h)];
  }
  int inv(int g) const {
    if (g < 0 || g >= order) throw BadGroupElement();
    return inverse[static_cast<size_t>(g)];
  }

  static GroupTable from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> names = {});
  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable product(const GroupTable& a, const GroupTable& b);
  static GroupTable symmetric3();
  static GroupTable dihedral4();

  bool operator==(const GroupTable& o) const { return table == o.table; }
};

// Throws NotGalois on any axiom violation (used for both Galois groups
// and plain group files).
void validate_group(const GroupTable& g);

}  // namespace galdesc
