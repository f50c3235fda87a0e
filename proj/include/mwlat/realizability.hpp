#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mwlat/lattice.hpp"

namespace mwlat {

inline constexpr int kSweepBound = 7;
inline constexpr int kCounterexampleBound = 12;

/// Completion certificate for a realizable lattice: J(L) plus a single top,
/// an upper semilattice containing J(L) downward closed.
struct UslCompletion {
  Poset completion;
};

/// Certificate for a non-realizable lattice. The bowtie lives in J(L)
/// (indices into BirkhoffRep); x_set and y_set are downsets of J(L) whose
/// preimages a, b under the r map bound a double diamond-like interval.
struct DDWitness {
  BowtieWitness bowtie;
  DownSet x_set, y_set;
  Elem a = -1, b = -1;
};

struct RealizabilityVerdict {
  bool realizable = false;
  std::optional<UslCompletion> completion;
  std::optional<DDWitness> dd;
};

/// True iff |L| >= 2, J(L) has no greatest and no least element, and no pair
/// a, b of join-irreducibles with a maximal in J(L) meets to 0.
bool is_dd_like(const Lattice& l);

/// First (a, b) in lexicographic order with is_dd_like(interval(l, a, b)).
std::optional<std::pair<Elem, Elem>> has_dd_like_subinterval(const Lattice& l);

/// The main characterization: realizable iff J(L) is an initial segment of a
/// finite upper semilattice (no bowtie).
RealizabilityVerdict is_realizable(const Lattice& l);

/// Realizable and 0 is meet-irreducible (no two nonzero elements meet to 0).
bool is_initial_segment_realizable(const Lattice& l);

struct SweepSizeStats {
  int size = 0;
  int posets = 0;
  int realizable = 0;
  int non_realizable = 0;
};

struct SweepViolation {
  int size = 0;
  std::vector<std::pair<Elem, Elem>> covers;  // the poset P with a mismatch
  bool no_bowtie = false;
  bool no_dd_subinterval = false;
};

struct SweepReport {
  int max_j = 0;
  std::vector<SweepSizeStats> per_size;  // sizes 1..max_j
  std::vector<SweepViolation> violations;
  int total_posets() const {
    int t = 0;
    for (const auto& s : per_size) t += s.posets;
    return t;
  }
};

/// For every poset P with 1 <= |P| <= max_j, checks on L = H(P) that the
/// no-bowtie condition on J(L) agrees with the absence of double diamond-like
/// subintervals. Expected: no violations.
SweepReport equivalence_sweep(int max_j, int workers = 1);

/// All non-realizable distributive lattices with at most max_lattice_size
/// elements, one per isomorphism class, sorted by (size, canonical form).
std::vector<Lattice> minimal_counterexamples(int max_lattice_size);

/// Witness pair (z0, z1) for the join-decomposition step: given an interval
/// [a, b] whose join-irreducible poset has distinct minimal elements x0, x1
/// and distinct maximal elements y0, y1 with every x below every y, and y0
/// join-reducible in l, finds z0 | z1 with z0 v z1 = y0, z0 ^ x0 != z0 ^ x1
/// and z0 not below y1. Returns nullopt when y0 is join-irreducible in l.
/// Throws InvalidConfiguration if the configuration does not hold.
std::optional<std::pair<Elem, Elem>> lemma_hulp_witness(const Lattice& l,
                                                        Elem a, Elem b,
                                                        Elem y0, Elem y1,
                                                        Elem x0, Elem x1);

}  // namespace mwlat
