#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mwlat/errors.hpp"

namespace mwlat {

using Elem = int;
using Mask = std::uint32_t;

// Default cap on host poset size for downset enumeration (one mask word).
inline constexpr int kDownsetHostBound = 16;
// Cap on isomorphism-class enumeration.
inline constexpr int kEnumerateBound = 8;

/// Downward closed subset of a host poset, stored as a bit vector.
struct DownSet {
  Mask bits = 0;

  bool contains(Elem x) const { return (bits >> x) & 1u; }
  int count() const { return std::popcount(bits); }
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (Mask m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
  friend auto operator<=>(const DownSet&, const DownSet&) = default;
};

/// Two incomparable elements with two incomparable minimal upper bounds.
/// This is the obstruction to extending a poset into an upper semilattice.
struct BowtieWitness {
  Elem x0 = -1, x1 = -1, y0 = -1, y1 = -1;
  friend bool operator==(const BowtieWitness&, const BowtieWitness&) = default;
};

struct NotInitialSegment : Error {
  BowtieWitness witness;
  NotInitialSegment(const std::string& msg, BowtieWitness w)
      : Error(msg), witness(w) {}
};

/// Finite partial order on elements 0..n-1. Immutable after construction;
/// safe to share across threads.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of the given pairs (a below b).
  /// Throws CycleDetected if the closure violates antisymmetry and
  /// IndexOutOfRange for bad indices. The pairs need not be covers; the
  /// stored cover relation is always the transitive reduction.
  static Poset from_covers(int n, std::span<const std::pair<int, int>> covers,
                           std::vector<std::string> labels = {});
  static Poset from_covers(int n,
                           std::initializer_list<std::pair<int, int>> covers,
                           std::vector<std::string> labels = {});

  /// Builds from a full order table; validates reflexivity, antisymmetry
  /// and transitivity. leq is row-major, n*n.
  static Poset from_leq(int n, const std::vector<bool>& leq,
                        std::vector<std::string> labels = {});

  /// Same, but the caller guarantees the axioms hold (no validation).
  static Poset from_leq_unchecked(int n, const std::vector<bool>& leq,
                                  std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(Elem a, Elem b) const {
    return (up_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >>
            (b & 63)) & 1u;
  }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool incomparable(Elem a, Elem b) const { return !leq(a, b) && !leq(b, a); }

  /// Transitive reduction, sorted lexicographically.
  const std::vector<std::pair<Elem, Elem>>& covers() const { return covers_; }
  std::vector<Elem> upper_covers(Elem a) const;
  std::vector<Elem> lower_covers(Elem a) const;

  std::vector<Elem> minimal_elements() const;
  std::vector<Elem> maximal_elements() const;

  /// {b : b <= a} as a 32-bit mask; requires size() <= 32.
  Mask down_mask(Elem a) const;
  /// {b : a <= b} as a 32-bit mask; requires size() <= 32.
  Mask up_mask(Elem a) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Elem a) const;

  /// Longest-chain height of each element (minimal elements have height 0).
  std::vector<int> heights() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

 private:
  int n_ = 0;
  int words_ = 1;
  std::vector<std::uint64_t> up_;    // row a: bits b with a <= b
  std::vector<std::uint64_t> down_;  // row a: bits b with b <= a
  std::vector<std::pair<Elem, Elem>> covers_;
  std::vector<std::string> labels_;

  void derive();  // fills down_ and covers_ from up_
  friend Poset closure_of_pairs(int n,
                                std::span<const std::pair<int, int>> pairs,
                                std::vector<std::string> labels);
};

std::vector<Elem> minimal_upper_bounds(const Poset& p, Elem x, Elem y);

struct UslCheck {
  bool ok = true;
  std::optional<BowtieWitness> witness;
};

/// True iff no incomparable pair has two or more minimal upper bounds;
/// equivalently, every pair with a common upper bound has a least one.
/// On failure returns the lexicographically least bowtie witness.
UslCheck is_usl_initial_segment(const Poset& p);

/// True iff every pair of elements has a least upper bound.
bool is_upper_semilattice(const Poset& p);

/// Adds one new element above all others (index n).
Poset add_top(const Poset& p);

/// All downsets, sorted ascending by bit mask. Throws SizeBound if the
/// poset exceeds the bound.
std::vector<DownSet> downsets(const Poset& p, int bound = kDownsetHostBound);
bool is_downset(const Poset& p, Mask m);

/// Canonical labeling: equal byte sequences iff isomorphic.
std::vector<std::uint8_t> canonical_form(const Poset& p);

struct CanonicalLabeling {
  std::vector<std::uint8_t> bytes;
  std::vector<Elem> order;  // order[k] = original element at canonical slot k
};
CanonicalLabeling canonical_labeling(const Poset& p);

bool are_isomorphic(const Poset& p, const Poset& q);
/// Explicit isomorphism p -> q if one exists (map[i] = image of i).
std::optional<std::vector<Elem>> find_isomorphism(const Poset& p,
                                                  const Poset& q);

/// Order-reversed copy.
Poset dual(const Poset& p);

/// Induced subposet on the given elements (in the given order).
Poset induced(const Poset& p, std::span<const Elem> elems);

/// Relabeled copy: element i of the result is perm[i] of p.
Poset relabel(const Poset& p, std::span<const Elem> perm);

}  // namespace mwlat
