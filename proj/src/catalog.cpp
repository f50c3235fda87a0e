#include "mwlat/catalog.hpp"

#include <algorithm>

namespace mwlat {

namespace {

Poset diamond() {
  return Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                            {"0", "a", "b", "1"});
}

Poset double_diamond() {
  return Poset::from_covers(
      7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
      {"A", "B", "C", "D", "E", "F", "G"});
}

// A 2-chain with a diamond on top.
Poset chain_diamond() {
  return Poset::from_covers(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

// A diamond with a 2-chain on top.
Poset diamond_chain() {
  return Poset::from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
}

// Two diamonds stacked so that the upper one hangs off an atom of the lower.
Poset stacked_diamonds() {
  return Poset::from_covers(
      6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
      {"A", "B", "C", "D", "E", "F"});
}

// The three catalogued double diamond-like lattices beyond the double
// diamond itself.
Poset dd_like_1() {
  // 0 < a,b; a,b < c; b < d; c < e,f; d < f; e,f < g; f < h; g,h < 1
  return Poset::from_covers(10, {{0, 1},
                                 {0, 2},
                                 {1, 3},
                                 {2, 3},
                                 {2, 4},
                                 {3, 5},
                                 {3, 6},
                                 {4, 6},
                                 {5, 7},
                                 {6, 7},
                                 {6, 8},
                                 {7, 9},
                                 {8, 9}});
}

Poset dd_like_2() {
  // The 6-element lattice 0 < s < l,r < t < u times a 3-chain, with the two
  // corners (u,0) and (0,2) removed. Both corners are irreducible in the
  // product, so the remainder is closed under join and meet.
  std::vector<std::pair<int, int>> d6 = {{0, 1}, {1, 2}, {1, 3},
                                         {2, 4}, {3, 4}, {4, 5}};
  Poset base = Poset::from_covers(6, d6);
  std::vector<int> id(18, -1);
  int next = 0;
  for (int level = 0; level < 3; ++level)
    for (int x = 0; x < 6; ++x) {
      if (level == 0 && x == 5) continue;
      if (level == 2 && x == 0) continue;
      id[level * 6 + x] = next++;
    }
  const int n = next;
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int la = 0; la < 3; ++la)
    for (int xa = 0; xa < 6; ++xa) {
      if (id[la * 6 + xa] == -1) continue;
      for (int lb = 0; lb < 3; ++lb)
        for (int xb = 0; xb < 6; ++xb) {
          if (id[lb * 6 + xb] == -1) continue;
          if (la <= lb && base.leq(xa, xb))
            leq[static_cast<std::size_t>(id[la * 6 + xa]) * n +
                id[lb * 6 + xb]] = true;
        }
    }
  return Poset::from_leq_unchecked(n, leq);
}

Poset dd_like_3() {
  return Poset::from_covers(14, {{0, 1},
                                 {0, 2},
                                 {1, 3},
                                 {2, 3},
                                 {1, 4},
                                 {2, 5},
                                 {3, 6},
                                 {4, 6},
                                 {3, 7},
                                 {5, 7},
                                 {6, 8},
                                 {6, 9},
                                 {7, 9},
                                 {7, 10},
                                 {8, 11},
                                 {9, 11},
                                 {9, 12},
                                 {10, 12},
                                 {11, 13},
                                 {12, 13}});
}

Poset example35_poset() {
  return Poset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}},
                            {"f0", "f1", "g0", "g1"});
}

Poset boolean_poset(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i));
  return downset_lattice(Poset::from_covers(n, {}, std::move(labels))).order();
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"diamond",        "double_diamond", "chain_diamond",
          "diamond_chain",  "stacked_diamonds", "dd_like_1",
          "dd_like_2",      "dd_like_3",      "fd3",
          "fd3_bounded",    "example35",      "example35_poset",
          "boolean_1",      "boolean_2",      "boolean_3",
          "boolean_4"};
}

Poset catalog_poset(const std::string& name) {
  if (name == "diamond") return diamond();
  if (name == "double_diamond") return double_diamond();
  if (name == "chain_diamond") return chain_diamond();
  if (name == "diamond_chain") return diamond_chain();
  if (name == "stacked_diamonds") return stacked_diamonds();
  if (name == "dd_like_1") return dd_like_1();
  if (name == "dd_like_2") return dd_like_2();
  if (name == "dd_like_3") return dd_like_3();
  if (name == "fd3") return free_distributive(3).order();
  if (name == "fd3_bounded") return free_distributive(3, true).order();
  if (name == "example35") return downset_lattice(example35_poset()).order();
  if (name == "example35_poset") return example35_poset();
  if (name == "boolean_1") return boolean_poset(1);
  if (name == "boolean_2") return boolean_poset(2);
  if (name == "boolean_3") return boolean_poset(3);
  if (name == "boolean_4") return boolean_poset(4);
  throw Error("unknown fixture: " + name);
}

Lattice catalog_lattice(const std::string& name) {
  return Lattice::from_poset(catalog_poset(name));
}

}  // namespace mwlat
