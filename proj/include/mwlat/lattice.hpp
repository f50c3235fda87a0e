#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mwlat/poset.hpp"

namespace mwlat {

/// Finite lattice: an order together with join/meet tables and a
/// distributivity flag. Immutable after construction.
class Lattice {
 public:
  /// Verifies that every pair has a least upper bound and a greatest lower
  /// bound, builds the tables, and sets the distributivity flag by an
  /// exhaustive triple scan. Throws NotALattice with the offending pair.
  static Lattice from_poset(const Poset& order);

  /// Caller guarantees the tables are correct; the flag is taken as given.
  static Lattice from_tables_unchecked(Poset order, std::vector<Elem> join,
                                       std::vector<Elem> meet,
                                       bool distributive);

  const Poset& order() const { return order_; }
  int size() const { return order_.size(); }
  bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
  Elem join(Elem a, Elem b) const {
    return join_[static_cast<std::size_t>(a) * size() + b];
  }
  Elem meet(Elem a, Elem b) const {
    return meet_[static_cast<std::size_t>(a) * size() + b];
  }
  bool distributive() const { return distributive_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

 private:
  Poset order_;
  std::vector<Elem> join_, meet_;
  bool distributive_ = false;
  Elem bottom_ = 0, top_ = 0;
};

inline Lattice verify_lattice(const Poset& p) { return Lattice::from_poset(p); }

/// The poset of nonzero join-irreducible elements, with the map back into L.
/// j_elements is ascending; j_poset element k corresponds to j_elements[k].
struct BirkhoffRep {
  Poset j_poset;
  std::vector<Elem> j_elements;
};

/// Exactly the nonzero elements with a unique lower cover.
BirkhoffRep join_irreducibles(const Lattice& l);

/// r(a) = {x in J(L) : x <= a} as a downset of rep.j_poset.
DownSet r_map(const Lattice& l, const BirkhoffRep& rep, Elem a);
DownSet r_map(const Lattice& l, Elem a);

/// The functor H: lattice of downsets of p ordered by inclusion, join = union,
/// meet = intersection. Element i corresponds to downsets(p)[i]. Elements are
/// labeled with the member sets when p is labeled.
Lattice downset_lattice(const Poset& p, int bound = kDownsetHostBound);

/// True iff a -> r(a) is an order isomorphism L -> H(J(L)). A test obligation
/// for every finite distributive lattice, not an assumption.
bool birkhoff_roundtrip(const Lattice& l);

/// Elements of [a, b], ascending.
std::vector<Elem> interval_elements(const Lattice& l, Elem a, Elem b);

/// The induced lattice on {x : a <= x <= b}. Throws NotComparable.
Lattice interval(const Lattice& l, Elem a, Elem b);

bool are_isomorphic(const Lattice& l1, const Lattice& l2);

/// Injection of l into m preserving meet and join (bounds need not map to
/// bounds). Returns the image of each l element, or nullopt.
std::optional<std::vector<Elem>> find_sublattice(const Lattice& m,
                                                 const Lattice& l);

/// First pair a <= b (lexicographic) with interval(m, a, b) isomorphic to l.
std::optional<std::pair<Elem, Elem>> find_subinterval(const Lattice& m,
                                                      const Lattice& l);

/// Free distributive lattice on n generators (n <= 3), realized as the
/// monotone boolean functions of n variables minus the two constants;
/// with_bounds keeps the constants.
Lattice free_distributive(int n, bool with_bounds = false);

}  // namespace mwlat
