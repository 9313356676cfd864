#include "galdesc/group.hpp"

#include <array>
#include <algorithm>

namespace galdesc {

void validate_group(const GroupTable& g) {
  int n = g.order;
  if (n <= 0) throw NotGalois("empty group");
  if (static_cast<int>(g.table.size()) != n) throw NotGalois("table size mismatch");
  for (const auto& row : g.table) {
    if (static_cast<int>(row.size()) != n) throw NotGalois("table row size mismatch");
    for (int x : row)
      if (x < 0 || x >= n) throw NotGalois("table entry out of range");
  }
  if (g.identity < 0 || g.identity >= n) throw NotGalois("identity out of range");
  for (int a = 0; a < n; ++a) {
    if (g.table[static_cast<size_t>(g.identity)][static_cast<size_t>(a)] != a ||
        g.table[static_cast<size_t>(a)][static_cast<size_t>(g.identity)] != a)
      throw NotGalois("identity axiom fails");
  }
  if (static_cast<int>(g.inverse.size()) != n) throw NotGalois("inverse list size mismatch");
  for (int a = 0; a < n; ++a) {
    int b = g.inverse[static_cast<size_t>(a)];
    if (b < 0 || b >= n || g.mul(a, b) != g.identity || g.mul(b, a) != g.identity)
      throw NotGalois("inverse axiom fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw NotGalois("associativity fails");
}

GroupTable GroupTable::from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> names) {
  GroupTable g;
  g.order = static_cast<int>(table.size());
  g.table = std::move(table);
  // locate the identity
  g.identity = -1;
  for (int e = 0; e < g.order; ++e) {
    bool ok = true;
    for (int a = 0; a < g.order && ok; ++a)
      ok = g.table[static_cast<size_t>(e)][static_cast<size_t>(a)] == a &&
           g.table[static_cast<size_t>(a)][static_cast<size_t>(e)] == a;
    if (ok) { g.identity = e; break; }
  }
  if (g.identity < 0) throw NotGalois("no identity element");
  g.inverse.assign(static_cast<size_t>(g.order), -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.table[static_cast<size_t>(a)][static_cast<size_t>(b)] == g.identity)
        g.inverse[static_cast<size_t>(a)] = b;
  if (names.empty()) {
    for (int a = 0; a < g.order; ++a) names.push_back("g" + std::to_string(a));
  }
  g.names = std::move(names);
  validate_group(g);
  return g;
}

GroupTable GroupTable::trivial() { return from_table({{0}}, {"e"}); }

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : "r" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  }
  return from_table(std::move(t), std::move(names));
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
  int n = a.order * b.order;
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::string> names;
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y) {
      names.push_back("(" + a.names[static_cast<size_t>(x)] + "," + b.names[static_cast<size_t>(y)] + ")");
      for (int u = 0; u < a.order; ++u)
        for (int v = 0; v < b.order; ++v)
          t[static_cast<size_t>(idx(x, y))][static_cast<size_t>(idx(u, v))] =
              idx(a.mul(x, u), b.mul(y, v));
    }
  return from_table(std::move(t), std::move(names));
}

namespace {
// permutation composition (apply q first, then p)
std::array<int, 3> pcomp(const std::array<int, 3>& p, const std::array<int, 3>& q) {
  return {p[static_cast<size_t>(q[0])], p[static_cast<size_t>(q[1])], p[static_cast<size_t>(q[2])]};
}
}  // namespace

GroupTable GroupTable::symmetric3() {
  // order: e, (01), (02), (12), (012), (021); A3 = {0, 4, 5}
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto c = pcomp(perms[static_cast<size_t>(a)], perms[static_cast<size_t>(b)]);
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return from_table(std::move(t), std::move(names));
}

GroupTable GroupTable::dihedral4() {
  // elements r^i s^j, index = i + 4j; s r = r^-1 s
  auto idx = [](int i, int j) { return i + 4 * j; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  std::vector<std::string> names;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) {
      std::string n = i == 0 ? "" : (i == 1 ? "r" : "r" + std::to_string(i));
      if (j) n += "s";
      if (n.empty()) n = "e";
      names.resize(8);
      names[static_cast<size_t>(idx(i, j))] = n;
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^(i + k*(-1)^j) s^(j+l)
          int exp = ((i + (j ? -k : k)) % 4 + 4) % 4;
          t[static_cast<size_t>(idx(i, j))][static_cast<size_t>(idx(k, l))] =
              idx(exp, (j + l) % 2);
        }
  return from_table(std::move(t), std::move(names));
}

}  // namespace galdesc
