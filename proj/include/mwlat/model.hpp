#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwlat/lattice.hpp"

namespace mwlat {

inline constexpr int kModelScanBound = 6;
inline constexpr int kFIsoBound = 8;

/// Finite upper semilattice standing in for an initial segment of the Turing
/// degrees. Elements play the role of functions, the order plays the role of
/// Turing reducibility, and the join table realizes the pairing join.
class DegreeStructure {
 public:
  /// Verifies that every pair has a least upper bound. The optional bottom
  /// marks the computable degree; it must lie below every element.
  static DegreeStructure from_poset(const Poset& order,
                                    std::optional<Elem> bottom = std::nullopt);

  const Poset& order() const { return order_; }
  int size() const { return order_.size(); }
  bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
  Elem join(Elem a, Elem b) const {
    return join_[static_cast<std::size_t>(a) * size() + b];
  }
  std::optional<Elem> bottom() const { return bottom_; }

 private:
  Poset order_;
  std::vector<Elem> join_;
  std::optional<Elem> bottom_;
};

/// A mass problem: any subset of the degree structure, including the empty
/// one (the largest degree).
struct MassProblem {
  Mask bits = 0;
  friend auto operator<=>(const MassProblem&, const MassProblem&) = default;
};

/// A Muchnik degree, canonically the upward closure of a mass problem.
/// Comparisons reduce to upset containment (reverse inclusion).
struct MuchnikDegree {
  Mask upset = 0;
  friend auto operator<=>(const MuchnikDegree&, const MuchnikDegree&) = default;
};

MuchnikDegree up_closure(const DegreeStructure& d, MassProblem a);

/// A <=_w B: every element of B bounds some element of A.
bool leq_w(const DegreeStructure& d, MassProblem a, MassProblem b);
bool equiv_w(const DegreeStructure& d, MassProblem a, MassProblem b);

/// Meet is plain union.
MassProblem meet_w(MassProblem a, MassProblem b);
/// Join pairs solutions through the semilattice join.
MassProblem join_w(const DegreeStructure& d, MassProblem a, MassProblem b);

/// The strict upper cone {h : h > f}; the unique minimal degree above
/// deg({f}) and the model's 0' when f is the bottom.
MassProblem prime(const DegreeStructure& d, Elem f);

/// Evaluates exists y (x < y and forall z (x < z -> y <= z)) at deg(a) over
/// all degrees of the model.
bool phi_definable(const DegreeStructure& d, MassProblem a);
/// up(a) is the cone of a single element.
bool is_principal(const DegreeStructure& d, MassProblem a);

/// All upsets of d, ascending by mask; the model's degrees.
std::vector<Mask> all_upsets(const DegreeStructure& d);

struct DymentViolation {
  Mask a_up = 0, b_up = 0;
};

/// Per-structure check of the empty-interval characterization: for degrees
/// A < B, (A,B) is empty iff some principal S has A = B x S, B not<= S and
/// B <= S'. Also checks that phi agrees with principality on every degree.
/// Works over any finite poset of degrees; joins are not needed.
struct DymentCheck {
  long long pairs = 0;
  std::vector<DymentViolation> violations;
  bool phi_principal_ok = true;
};
DymentCheck dyment_check(const Poset& degree_order);

struct DymentScanReport {
  int max_size = 0;
  int structures = 0;
  long long pairs = 0;
  long long violations = 0;
  bool phi_principal_ok = true;
};

/// dyment_check over every upper semilattice with at most max_size elements.
DymentScanReport dyment_scan(int max_size, int workers = 1);

struct BooleanInterval {
  DegreeStructure d;
  MassProblem a, b;
};

/// Degree structure of nonempty subsets of n incomparable elements, with the
/// interval [{f_1..f_n}, {f_1}' x .. x {f_n}'] isomorphic to the Boolean
/// lattice 2^n.
BooleanInterval boolean_interval(int n);

/// Ambient structure for the interval construction: the base poset plus one
/// top (plus a designated bottom when asked). Base elements keep their
/// indices; top is |P|, bottom |P|+1.
struct FContext {
  Poset base;
  DegreeStructure ambient;
  Elem top = -1;
  std::optional<Elem> bottom;
  mutable std::map<Mask, Mask> hat_cache;  // downset -> its maximal elements

  Mask hat(DownSet a) const;
};

/// Throws NotInitialSegment (with the bowtie) unless the base extends to an
/// upper semilattice by adding a single top.
FContext ambient(const Poset& p, bool with_bottom = false);

/// F(A): the meet of the strict cones over the maximal elements of A with the
/// minimal base elements incomparable to all of them. In the single-top
/// ambient the side condition sets of the construction are all empty, so
/// this is the whole image.
MassProblem f_construct(const FContext& ctx, DownSet a);

struct FIsoReport {
  bool pass = false;
  bool injective = false;
  bool monotone_both_ways = false;
  bool meets_preserved = false;
  bool joins_preserved = false;
  bool surjective = false;
  bool interval_matches_downset_lattice = false;
  int downset_count = 0;
  int interval_degree_count = 0;
  bool with_bottom = false;
  // counterexample downsets when a pairwise check fails
  std::optional<std::pair<Mask, Mask>> counterexample;
  // per-degree listing: name, downset, mass problem, upset
  struct Entry {
    std::string name;
    Mask downset = 0;
    Mask mass_problem = 0;
    Mask upset = 0;
  };
  std::vector<Entry> degrees;
};

/// Checks that F is injective on degrees, order preserving both ways, turns
/// intersections into meets and unions into joins, and lands exactly on the
/// degree interval [F(empty), F(P)]; also compares that interval with H(P).
FIsoReport verify_f_iso(const Poset& p, bool with_bottom = false);

/// The lattice of degrees C with deg(a) <= C <= deg(b), ordered by weak
/// reducibility; meet is union, join is the pointwise semilattice join.
Lattice interval_to_lattice(const DegreeStructure& d, MassProblem a,
                            MassProblem b);

/// First degree pair (bottom, top) whose interval is isomorphic to l.
std::optional<std::pair<MuchnikDegree, MuchnikDegree>> search_interval_iso(
    const DegreeStructure& d, const Lattice& l);

}  // namespace mwlat
