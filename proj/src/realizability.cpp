#include "mwlat/realizability.hpp"

#include <algorithm>
#include <map>

#include "mwlat/enumerate.hpp"
#include "mwlat/parallel.hpp"

namespace mwlat {

namespace {

void require_distributive(const Lattice& l) {
  if (!l.distributive())
    throw NotDistributive("operation needs a distributive lattice");
}

}  // namespace

bool is_dd_like(const Lattice& l) {
  require_distributive(l);
  if (l.size() < 2) return false;
  BirkhoffRep rep = join_irreducibles(l);
  const Poset& j = rep.j_poset;
  const int m = j.size();
  if (j.maximal_elements().size() == 1) return false;  // greatest exists
  if (j.minimal_elements().size() == 1) return false;  // least exists
  for (Elem a : j.maximal_elements())
    for (Elem b = 0; b < m; ++b)
      if (l.meet(rep.j_elements[a], rep.j_elements[b]) == l.bottom())
        return false;
  // The join-irreducibles must hold an honest bowtie: a pair with two
  // incomparable minimal upper bounds. Without this a lattice whose J is,
  // say, two minimal elements joined through a middle element below two
  // maximal ones would qualify, and such a J extends to an upper
  // semilattice, so the lattice is realizable and must not count.
  return !is_usl_initial_segment(j).ok;
}

std::optional<std::pair<Elem, Elem>> has_dd_like_subinterval(const Lattice& l) {
  require_distributive(l);
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) {
      if (!l.leq(a, b)) continue;
      if (is_dd_like(interval(l, a, b))) return std::make_pair(a, b);
    }
  return std::nullopt;
}

RealizabilityVerdict is_realizable(const Lattice& l) {
  require_distributive(l);
  BirkhoffRep rep = join_irreducibles(l);
  UslCheck check = is_usl_initial_segment(rep.j_poset);
  RealizabilityVerdict v;
  v.realizable = check.ok;
  if (check.ok) {
    v.completion = UslCompletion{add_top(rep.j_poset)};
    return v;
  }
  const Poset& j = rep.j_poset;
  const BowtieWitness w = *check.witness;
  // Witness interval. Take the convex set of join-irreducibles above one of
  // the x's and below one of the y's; its downward closure B and B minus the
  // set itself are downsets whose r-preimages bound a double diamond-like
  // interval. (Elements below a y but above neither x would break the
  // bare {x < x0 or x < x1} / {x <= y0 or x <= y1} pair.)
  Mask convex = 0;
  for (Elem x = 0; x < j.size(); ++x)
    if ((j.leq(w.x0, x) || j.leq(w.x1, x)) && (j.leq(x, w.y0) || j.leq(x, w.y1)))
      convex |= Mask{1} << x;
  Mask closure = 0;
  for (Mask rest = convex; rest; rest &= rest - 1)
    closure |= j.down_mask(std::countr_zero(rest));
  DownSet x_set{closure & ~convex};
  DownSet y_set{closure};
  Elem a = -1, b = -1;
  for (Elem e = 0; e < l.size(); ++e) {
    Mask r = r_map(l, rep, e).bits;
    if (r == x_set.bits) a = e;
    if (r == y_set.bits) b = e;
  }
  v.dd = DDWitness{w, x_set, y_set, a, b};
  return v;
}

bool is_initial_segment_realizable(const Lattice& l) {
  RealizabilityVerdict v = is_realizable(l);
  if (!v.realizable) return false;
  // 0 meet-irreducible: no two elements above 0 meet to 0; equivalently at
  // most one atom.
  int atoms = 0;
  for (auto [x, y] : l.order().covers())
    if (x == l.bottom()) ++atoms;
  return atoms <= 1;
}

SweepReport equivalence_sweep(int max_j, int workers) {
  if (max_j < 1 || max_j > kSweepBound)
    throw SizeBound("equivalence sweep capped at " +
                    std::to_string(kSweepBound));
  SweepReport report;
  report.max_j = max_j;
  for (int size = 1; size <= max_j; ++size) {
    std::vector<Poset> posets = enumerate_posets(size);
    const int count = static_cast<int>(posets.size());
    std::vector<char> bowtie_free(count, 0), dd_free(count, 0);
    parallel_for(count, workers, [&](int i) {
      const Poset& p = posets[i];
      bowtie_free[i] = is_usl_initial_segment(p).ok;
      Lattice h = downset_lattice(p);
      dd_free[i] = !has_dd_like_subinterval(h).has_value();
    });
    SweepSizeStats stats;
    stats.size = size;
    stats.posets = count;
    for (int i = 0; i < count; ++i) {
      if (bowtie_free[i])
        ++stats.realizable;
      else
        ++stats.non_realizable;
      if (bowtie_free[i] != dd_free[i])
        report.violations.push_back(SweepViolation{
            size, posets[i].covers(), static_cast<bool>(bowtie_free[i]),
            static_cast<bool>(dd_free[i])});
    }
    report.per_size.push_back(stats);
  }
  return report;
}

std::vector<Lattice> minimal_counterexamples(int max_lattice_size) {
  if (max_lattice_size < 1 || max_lattice_size > kCounterexampleBound)
    throw SizeBound("counterexample search capped at " +
                    std::to_string(kCounterexampleBound));
  // Every finite distributive lattice is H(P) for exactly one P up to
  // isomorphism, so walking the posets with at most max downsets is a
  // complete walk of the distributive lattices with at most max elements.
  std::vector<Poset> posets =
      enumerate_posets_with_downset_bound(max_lattice_size);
  std::map<std::vector<std::uint8_t>, Lattice> found;
  for (const Poset& p : posets) {
    if (is_usl_initial_segment(p).ok) continue;
    Lattice h = downset_lattice(p);
    if (h.size() > max_lattice_size) continue;
    found.emplace(canonical_form(h.order()), h);
  }
  std::vector<Lattice> out;
  out.reserve(found.size());
  for (auto& [key, l] : found) out.push_back(std::move(l));
  std::stable_sort(out.begin(), out.end(),
                   [](const Lattice& a, const Lattice& b) {
                     return a.size() < b.size();
                   });
  return out;
}

std::optional<std::pair<Elem, Elem>> lemma_hulp_witness(const Lattice& l,
                                                        Elem a, Elem b,
                                                        Elem y0, Elem y1,
                                                        Elem x0, Elem x1) {
  require_distributive(l);
  if (a < 0 || b < 0 || a >= l.size() || b >= l.size() || !l.leq(a, b))
    throw InvalidConfiguration("interval endpoints must satisfy a <= b");
  std::vector<Elem> elems = interval_elements(l, a, b);
  std::vector<int> local(l.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = i;
  for (Elem e : {x0, x1, y0, y1})
    if (e < 0 || e >= l.size() || local[e] == -1)
      throw InvalidConfiguration("configuration element outside the interval");
  Lattice sub = interval(l, a, b);
  BirkhoffRep rep = join_irreducibles(sub);
  std::vector<int> jpos(sub.size(), -1);
  for (std::size_t k = 0; k < rep.j_elements.size(); ++k)
    jpos[rep.j_elements[k]] = static_cast<int>(k);
  auto j_index = [&](Elem e) { return jpos[local[e]]; };
  for (Elem e : {x0, x1, y0, y1})
    if (j_index(e) == -1)
      throw InvalidConfiguration(
          "configuration element not join-irreducible in the interval");
  if (x0 == x1 || y0 == y1)
    throw InvalidConfiguration("extremes must be distinct");
  auto minimal_in_j = [&](Elem e) {
    for (std::size_t k = 0; k < rep.j_elements.size(); ++k)
      if (rep.j_poset.less(static_cast<Elem>(k), j_index(e))) return false;
    return true;
  };
  auto maximal_in_j = [&](Elem e) {
    for (std::size_t k = 0; k < rep.j_elements.size(); ++k)
      if (rep.j_poset.less(j_index(e), static_cast<Elem>(k))) return false;
    return true;
  };
  if (!minimal_in_j(x0) || !minimal_in_j(x1))
    throw InvalidConfiguration("x0, x1 must be minimal join-irreducibles");
  if (!maximal_in_j(y0) || !maximal_in_j(y1))
    throw InvalidConfiguration("y0, y1 must be maximal join-irreducibles");
  for (Elem x : {x0, x1})
    for (Elem y : {y0, y1})
      if (!l.leq(x, y))
        throw InvalidConfiguration("every x must lie below every y");

  // Vacuous when y0 cannot be decomposed in the ambient lattice.
  bool reducible = false;
  for (Elem u = 0; u < l.size() && !reducible; ++u)
    for (Elem v = u + 1; v < l.size(); ++v)
      if (l.order().incomparable(u, v) && l.join(u, v) == y0) {
        reducible = true;
        break;
      }
  if (!reducible) return std::nullopt;

  for (Elem z0 = 0; z0 < l.size(); ++z0)
    for (Elem z1 = 0; z1 < l.size(); ++z1) {
      if (!l.order().incomparable(z0, z1)) continue;
      if (l.join(z0, z1) != y0) continue;
      if (l.meet(z0, x0) == l.meet(z0, x1)) continue;
      if (l.leq(z0, y1)) continue;
      return std::make_pair(z0, z1);
    }
  return std::nullopt;
}

}  // namespace mwlat
