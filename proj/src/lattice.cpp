#include "mwlat/lattice.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace mwlat {

namespace {

// Unique minimal element of the set of common upper (or lower) bounds, or -1.
Elem unique_extremum(const Poset& p, Elem a, Elem b, bool upper) {
  const int n = p.size();
  std::vector<Elem> bounds;
  for (int z = 0; z < n; ++z) {
    bool in = upper ? (p.leq(a, z) && p.leq(b, z)) : (p.leq(z, a) && p.leq(z, b));
    if (in) bounds.push_back(z);
  }
  Elem found = -1;
  for (Elem z : bounds) {
    bool extremal = true;
    for (Elem w : bounds)
      if (w != z && (upper ? p.leq(w, z) : p.leq(z, w))) extremal = false;
    if (extremal) {
      if (found != -1) return -1;
      found = z;
    }
  }
  return found;
}

bool tables_distributive(const std::vector<Elem>& join,
                         const std::vector<Elem>& meet, int n) {
  auto j = [&](Elem a, Elem b) { return join[static_cast<std::size_t>(a) * n + b]; };
  auto m = [&](Elem a, Elem b) { return meet[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m(a, j(b, c)) != j(m(a, b), m(a, c))) return false;
  return true;
}

}  // namespace

Lattice Lattice::from_poset(const Poset& order) {
  const int n = order.size();
  if (n == 0)
    throw NotALattice("a lattice needs at least one element", -1, -1, true);
  Lattice l;
  l.order_ = order;
  l.join_.assign(static_cast<std::size_t>(n) * n, 0);
  l.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Elem j = unique_extremum(order, a, b, true);
      if (j == -1)
        throw NotALattice("pair has no least upper bound", a, b, true);
      Elem m = unique_extremum(order, a, b, false);
      if (m == -1)
        throw NotALattice("pair has no greatest lower bound", a, b, false);
      l.join_[static_cast<std::size_t>(a) * n + b] = j;
      l.join_[static_cast<std::size_t>(b) * n + a] = j;
      l.meet_[static_cast<std::size_t>(a) * n + b] = m;
      l.meet_[static_cast<std::size_t>(b) * n + a] = m;
    }
  l.bottom_ = 0;
  l.top_ = 0;
  for (int a = 0; a < n; ++a) {
    l.bottom_ = l.meet(l.bottom_, a);
    l.top_ = l.join(l.top_, a);
  }
  l.distributive_ = tables_distributive(l.join_, l.meet_, n);
  return l;
}

Lattice Lattice::from_tables_unchecked(Poset order, std::vector<Elem> join,
                                       std::vector<Elem> meet,
                                       bool distributive) {
  Lattice l;
  const int n = order.size();
  l.order_ = std::move(order);
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  l.distributive_ = distributive;
  l.bottom_ = 0;
  l.top_ = 0;
  for (int a = 0; a < n; ++a) {
    l.bottom_ = l.meet(l.bottom_, a);
    l.top_ = l.join(l.top_, a);
  }
  return l;
}

BirkhoffRep join_irreducibles(const Lattice& l) {
  const int n = l.size();
  std::vector<int> lower_cover_count(n, 0);
  for (auto [a, b] : l.order().covers()) ++lower_cover_count[b];
  std::vector<Elem> ji;
  for (int a = 0; a < n; ++a)
    if (lower_cover_count[a] == 1) ji.push_back(a);
  return BirkhoffRep{induced(l.order(), ji), ji};
}

DownSet r_map(const Lattice& l, const BirkhoffRep& rep, Elem a) {
  if (static_cast<int>(rep.j_elements.size()) > 32)
    throw SizeBound("r map needs at most 32 join-irreducibles");
  Mask bits = 0;
  for (std::size_t k = 0; k < rep.j_elements.size(); ++k)
    if (l.leq(rep.j_elements[k], a)) bits |= Mask{1} << k;
  return DownSet{bits};
}

DownSet r_map(const Lattice& l, Elem a) {
  return r_map(l, join_irreducibles(l), a);
}

Lattice downset_lattice(const Poset& p, int bound) {
  std::vector<DownSet> ds = downsets(p, bound);
  const int n = static_cast<int>(ds.size());
  if (n > 4096) throw SizeBound("downset lattice capped at 4096 elements");
  std::unordered_map<Mask, int> index;
  index.reserve(ds.size());
  for (int i = 0; i < n; ++i) index.emplace(ds[i].bits, i);
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((ds[i].bits & ~ds[j].bits) == 0)
        leq[static_cast<std::size_t>(i) * n + j] = true;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string s = "{";
    bool first = true;
    for (Elem e : ds[i].elements()) {
      if (!first) s += ",";
      s += p.label(e);
      first = false;
    }
    s += "}";
    labels.push_back(std::move(s));
  }
  Poset order = Poset::from_leq_unchecked(n, leq, std::move(labels));
  std::vector<Elem> join(static_cast<std::size_t>(n) * n);
  std::vector<Elem> meet(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      join[static_cast<std::size_t>(i) * n + j] = index.at(ds[i].bits | ds[j].bits);
      meet[static_cast<std::size_t>(i) * n + j] = index.at(ds[i].bits & ds[j].bits);
    }
  return Lattice::from_tables_unchecked(std::move(order), std::move(join),
                                        std::move(meet), true);
}

bool birkhoff_roundtrip(const Lattice& l) {
  if (!l.distributive())
    throw NotDistributive("Birkhoff duality needs a distributive lattice");
  BirkhoffRep rep = join_irreducibles(l);
  std::vector<DownSet> hp = downsets(rep.j_poset, 32);
  if (hp.size() != static_cast<std::size_t>(l.size())) return false;
  std::unordered_map<Mask, int> index;
  for (std::size_t i = 0; i < hp.size(); ++i)
    index.emplace(hp[i].bits, static_cast<int>(i));
  std::vector<Mask> image(l.size());
  std::vector<char> hit(hp.size(), 0);
  for (int a = 0; a < l.size(); ++a) {
    image[a] = r_map(l, rep, a).bits;
    auto it = index.find(image[a]);
    if (it == index.end()) return false;
    if (hit[it->second]) return false;  // not injective
    hit[it->second] = 1;
  }
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.leq(a, b) != ((image[a] & ~image[b]) == 0)) return false;
  return true;
}

std::vector<Elem> interval_elements(const Lattice& l, Elem a, Elem b) {
  if (a < 0 || a >= l.size() || b < 0 || b >= l.size())
    throw IndexOutOfRange("interval endpoint out of range");
  if (!l.leq(a, b)) throw NotComparable("interval endpoints must satisfy a <= b");
  std::vector<Elem> out;
  for (int x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(x, b)) out.push_back(x);
  return out;
}

Lattice interval(const Lattice& l, Elem a, Elem b) {
  std::vector<Elem> elems = interval_elements(l, a, b);
  const int m = static_cast<int>(elems.size());
  std::vector<int> local(l.size(), -1);
  for (int i = 0; i < m; ++i) local[elems[i]] = i;
  Poset order = induced(l.order(), elems);
  std::vector<Elem> join(static_cast<std::size_t>(m) * m);
  std::vector<Elem> meet(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      join[static_cast<std::size_t>(i) * m + j] = local[l.join(elems[i], elems[j])];
      meet[static_cast<std::size_t>(i) * m + j] = local[l.meet(elems[i], elems[j])];
    }
  bool dist = l.distributive() || tables_distributive(join, meet, m);
  return Lattice::from_tables_unchecked(std::move(order), std::move(join),
                                        std::move(meet), dist);
}

bool are_isomorphic(const Lattice& l1, const Lattice& l2) {
  // Order isomorphism suffices: joins and meets are order-determined.
  return are_isomorphic(l1.order(), l2.order());
}

namespace {

struct SublatticeSearch {
  const Lattice* m = nullptr;
  const Lattice* l = nullptr;
  std::vector<Elem> image;     // l element -> m element, -1 unassigned
  std::vector<char> used;      // m element already an image

  bool extend(int k) {
    const int ln = l->size();
    if (k == ln) return full_check();
    // If k is the join or meet of two already placed elements, its image
    // is forced.
    Elem forced = -1;
    for (int i = 0; i < k && forced == -1; ++i)
      for (int j = i; j < k; ++j) {
        if (l->join(i, j) == k) {
          forced = m->join(image[i], image[j]);
          break;
        }
        if (l->meet(i, j) == k) {
          forced = m->meet(image[i], image[j]);
          break;
        }
      }
    if (forced != -1) {
      if (used[forced] || !consistent(k, forced)) return false;
      place(k, forced);
      if (extend(k + 1)) return true;
      unplace(k, forced);
      return false;
    }
    for (Elem cand = 0; cand < m->size(); ++cand) {
      if (used[cand] || !consistent(k, cand)) continue;
      place(k, cand);
      if (extend(k + 1)) return true;
      unplace(k, cand);
    }
    return false;
  }

  // Constraints between two placed elements whose join/meet lands on a later
  // element are only seen once that element is placed, so a completed
  // assignment still needs the full homomorphism check.
  bool full_check() const {
    for (int i = 0; i < l->size(); ++i)
      for (int j = 0; j < l->size(); ++j) {
        if (m->join(image[i], image[j]) != image[l->join(i, j)]) return false;
        if (m->meet(image[i], image[j]) != image[l->meet(i, j)]) return false;
      }
    return true;
  }

  bool consistent(Elem x, Elem cand) const {
    for (int i = 0; i < x; ++i) {
      Elem im = image[i];
      if (l->leq(i, x) != m->leq(im, cand)) return false;
      if (l->leq(x, i) != m->leq(cand, im)) return false;
      // joins and meets with earlier elements must stay consistent where the
      // result is itself already placed
      Elem j = l->join(i, x);
      if (j < x && m->join(im, cand) != image[j]) return false;
      if (j == x && m->join(im, cand) != cand) return false;
      if (j == i && m->join(im, cand) != im) return false;
      Elem mt = l->meet(i, x);
      if (mt < x && m->meet(im, cand) != image[mt]) return false;
      if (mt == x && m->meet(im, cand) != cand) return false;
      if (mt == i && m->meet(im, cand) != im) return false;
    }
    return true;
  }

  void place(Elem x, Elem cand) {
    image[x] = cand;
    used[cand] = 1;
  }
  void unplace(Elem x, Elem cand) {
    image[x] = -1;
    used[cand] = 0;
  }
};

}  // namespace

std::optional<std::vector<Elem>> find_sublattice(const Lattice& m,
                                                 const Lattice& l) {
  if (l.size() > m.size()) return std::nullopt;
  SublatticeSearch s;
  s.m = &m;
  s.l = &l;
  s.image.assign(l.size(), -1);
  s.used.assign(m.size(), 0);
  if (!s.extend(0)) return std::nullopt;
  return s.image;
}

std::optional<std::pair<Elem, Elem>> find_subinterval(const Lattice& m,
                                                      const Lattice& l) {
  if (l.size() > m.size()) return std::nullopt;
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b) {
      if (!m.leq(a, b)) continue;
      if (static_cast<int>(interval_elements(m, a, b).size()) != l.size())
        continue;
      if (are_isomorphic(interval(m, a, b), l)) return std::make_pair(a, b);
    }
  return std::nullopt;
}

Lattice free_distributive(int n, bool with_bounds) {
  if (n < 1 || n > 3)
    throw SizeBound("free distributive lattice supported for 1..3 generators");
  const int points = 1 << n;
  std::vector<Mask> funcs;  // truth table bit v set iff f(v) = 1
  const Mask full = (Mask{1} << points) - 1;
  for (Mask f = 0; f <= full; ++f) {
    bool monotone = true;
    for (int v = 0; v < points && monotone; ++v)
      for (int i = 0; i < n; ++i) {
        int w = v | (1 << i);
        if (w != v && ((f >> v) & 1u) > ((f >> w) & 1u)) {
          monotone = false;
          break;
        }
      }
    if (!monotone) continue;
    if (!with_bounds && (f == 0 || f == full)) continue;
    funcs.push_back(f);
  }
  const int m = static_cast<int>(funcs.size());
  std::vector<bool> leq(static_cast<std::size_t>(m) * m, false);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((funcs[i] & ~funcs[j]) == 0)
        leq[static_cast<std::size_t>(i) * m + j] = true;
  Poset order = Poset::from_leq_unchecked(m, leq);
  return Lattice::from_poset(order);
}

}  // namespace mwlat
