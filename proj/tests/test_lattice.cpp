#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwlat/catalog.hpp"
#include "mwlat/enumerate.hpp"
#include "mwlat/lattice.hpp"
#include "oracles.hpp"

using namespace mwlat;

namespace {

Poset chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(n, covers);
}

Poset m3() {
  return Poset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("verify_lattice") {
  Lattice diamond = catalog_lattice("diamond");
  CHECK(diamond.distributive());
  CHECK(diamond.bottom() == 0);
  CHECK(diamond.top() == 3);
  CHECK(diamond.join(1, 2) == 3);
  CHECK(diamond.meet(1, 2) == 0);

  Poset bowtie = Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  try {
    verify_lattice(bowtie);
    CHECK(false);
  } catch (const NotALattice& e) {
    CHECK(e.a == 0);
    CHECK(e.b == 1);
    CHECK(e.missing_join);
  }

  Lattice ml = verify_lattice(m3());
  CHECK_FALSE(ml.distributive());
  // the triple scan that flags it: a ^ (b v c) != (a ^ b) v (a ^ c)
  CHECK(ml.meet(1, ml.join(2, 3)) != ml.join(ml.meet(1, 2), ml.meet(1, 3)));
}

TEST_CASE("join_irreducibles") {
  Lattice dd = catalog_lattice("double_diamond");
  BirkhoffRep rep = join_irreducibles(dd);
  CHECK(rep.j_elements == std::vector<Elem>{1, 2, 4, 5});
  Poset bowtie = Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(are_isomorphic(rep.j_poset, bowtie));

  Lattice diamond = catalog_lattice("diamond");
  CHECK(join_irreducibles(diamond).j_elements == std::vector<Elem>{1, 2});

  Lattice c5 = verify_lattice(chain(5));
  CHECK(join_irreducibles(c5).j_elements == std::vector<Elem>{1, 2, 3, 4});
}

TEST_CASE("r_map") {
  Lattice dd = catalog_lattice("double_diamond");
  BirkhoffRep rep = join_irreducibles(dd);
  CHECK(r_map(dd, rep, dd.bottom()).bits == 0);
  CHECK(r_map(dd, rep, dd.top()).count() == 4);
  // r(D) = {B, C}: the two atoms, which are j-indices 0 and 1
  CHECK(r_map(dd, rep, 3).bits == 0b0011);
}

TEST_CASE("downset_lattice") {
  Poset bowtie = Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(are_isomorphic(downset_lattice(bowtie), catalog_lattice("double_diamond")));

  for (int n = 1; n <= 4; ++n) {
    Lattice b = downset_lattice(Poset::from_covers(n, {}));
    CHECK(b.size() == (1 << n));
    CHECK(are_isomorphic(b, catalog_lattice("boolean_" + std::to_string(n))));
  }

  Poset ex35 = catalog_poset("example35_poset");
  Lattice h = downset_lattice(ex35);
  CHECK(h.size() == 8);
  CHECK(are_isomorphic(h, catalog_lattice("example35")));
}

TEST_CASE("birkhoff roundtrip") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      Lattice h = downset_lattice(p);
      CHECK(birkhoff_roundtrip(h));
      // H(P) has exactly |P| nonzero join-irreducibles
      CHECK(join_irreducibles(h).j_elements.size() == static_cast<std::size_t>(n));
      // J(H(P)) recovers P
      CHECK(are_isomorphic(join_irreducibles(h).j_poset, p));
    }
  CHECK(birkhoff_roundtrip(verify_lattice(chain(5))));
  CHECK_THROWS_AS(birkhoff_roundtrip(verify_lattice(m3())), NotDistributive);
}

TEST_CASE("interval") {
  Lattice dd = catalog_lattice("double_diamond");
  CHECK(interval(dd, 2, 2).size() == 1);
  CHECK(are_isomorphic(interval(dd, 0, 3), catalog_lattice("diamond")));
  // [B, G] is the chain-then-diamond shape
  CHECK(are_isomorphic(interval(dd, 1, 6), catalog_lattice("chain_diamond")));
  CHECK_THROWS_AS(interval(dd, 1, 2), NotComparable);
  CHECK(are_isomorphic(interval(dd, dd.bottom(), dd.top()), dd));
}

TEST_CASE("lattice isomorphism") {
  Lattice dd = catalog_lattice("double_diamond");
  std::vector<Elem> perm = {6, 4, 5, 3, 1, 2, 0};
  Lattice relabeled = verify_lattice(relabel(dual(dd.order()), perm));
  CHECK(are_isomorphic(dd, relabeled));  // self-dual, relabeled
  CHECK_FALSE(are_isomorphic(catalog_lattice("diamond"), verify_lattice(chain(4))));

  // agreement with exhaustive search on everything small
  std::vector<Lattice> lattices;
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n))
      lattices.push_back(downset_lattice(p));
  lattices.push_back(catalog_lattice("diamond"));
  lattices.push_back(catalog_lattice("double_diamond"));
  lattices.push_back(catalog_lattice("chain_diamond"));
  lattices.push_back(verify_lattice(chain(7)));
  for (const Lattice& a : lattices)
    for (const Lattice& b : lattices)
      CHECK(are_isomorphic(a, b) == oracles::lattice_isomorphic_bruteforce(a, b));
}

TEST_CASE("find_sublattice and find_subinterval") {
  Lattice fd3 = free_distributive(3);
  Lattice dd = catalog_lattice("double_diamond");
  auto emb = find_sublattice(fd3, dd);
  REQUIRE(emb.has_value());
  // embedding preserves the operations
  for (int i = 0; i < dd.size(); ++i)
    for (int j = 0; j < dd.size(); ++j) {
      CHECK(fd3.join((*emb)[i], (*emb)[j]) == (*emb)[dd.join(i, j)]);
      CHECK(fd3.meet((*emb)[i], (*emb)[j]) == (*emb)[dd.meet(i, j)]);
    }
  CHECK_FALSE(find_subinterval(fd3, dd).has_value());

  auto sub = find_subinterval(dd, catalog_lattice("diamond"));
  REQUIRE(sub.has_value());
  CHECK(*sub == std::pair<Elem, Elem>{0, 3});
  CHECK(are_isomorphic(interval(dd, sub->first, sub->second),
                       catalog_lattice("diamond")));

  Lattice c3 = verify_lattice(chain(3));
  CHECK_FALSE(find_sublattice(c3, catalog_lattice("diamond")).has_value());
  CHECK_FALSE(find_subinterval(c3, catalog_lattice("diamond")).has_value());
}

TEST_CASE("find_subinterval matches its own interval") {
  // whenever a subinterval is reported, the interval really is isomorphic
  std::vector<Lattice> targets = {catalog_lattice("diamond"),
                                  verify_lattice(chain(3)),
                                  catalog_lattice("chain_diamond")};
  for (const Poset& p : enumerate_posets(4)) {
    Lattice h = downset_lattice(p);
    for (const Lattice& t : targets)
      if (auto ab = find_subinterval(h, t))
        CHECK(are_isomorphic(interval(h, ab->first, ab->second), t));
  }
}

TEST_CASE("free_distributive") {
  CHECK(free_distributive(1).size() == 1);
  Lattice f2 = free_distributive(2);
  CHECK(f2.size() == 4);
  CHECK(are_isomorphic(f2, catalog_lattice("diamond")));

  Lattice f3 = free_distributive(3);
  CHECK(f3.size() == 18);
  CHECK(f3.distributive());
  Lattice f3b = free_distributive(3, true);
  CHECK(f3b.size() == 20);
  // monotone function count == antichain count of the cube
  CHECK(oracles::cube_antichain_count(3) == 20);
  CHECK_THROWS_AS(free_distributive(4), SizeBound);
}
