#include "mwlat/enumerate.hpp"

#include <algorithm>
#include <map>

namespace mwlat {

namespace {

// Every poset with a distinguished maximal element m arises from P - {m} by
// putting a new maximal element above a downset. Growing size by size and
// deduplicating by canonical form therefore visits every isomorphism class
// exactly once per size.
std::vector<Poset> extend_all(const std::vector<Poset>& smaller) {
  std::map<std::vector<std::uint8_t>, Poset> classes;
  for (const Poset& q : smaller) {
    const int n = q.size();
    for (const DownSet& d : downsets(q, 32)) {
      std::vector<std::pair<int, int>> pairs(q.covers().begin(),
                                             q.covers().end());
      // the new element covers the maximal elements of d
      for (Elem x : DownSet{d.bits}.elements()) {
        bool maximal_in_d = true;
        for (Elem y : DownSet{d.bits}.elements())
          if (y != x && q.leq(x, y)) maximal_in_d = false;
        if (maximal_in_d) pairs.emplace_back(x, n);
      }
      Poset cand = Poset::from_covers(n + 1, pairs);
      classes.emplace(canonical_form(cand), cand);
    }
  }
  std::vector<Poset> out;
  out.reserve(classes.size());
  for (auto& [key, p] : classes) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<Poset> enumerate_posets(int n) {
  if (n < 0 || n > kEnumerateBound)
    throw SizeBound("poset enumeration capped at " +
                    std::to_string(kEnumerateBound) + " elements");
  std::vector<Poset> cur = {Poset{}};
  for (int k = 0; k < n; ++k) cur = extend_all(cur);
  return cur;
}

std::vector<Poset> enumerate_posets_with_downset_bound(int max_downsets) {
  if (max_downsets < 1 || max_downsets > 32)
    throw SizeBound("downset-bounded enumeration capped at 32 downsets");
  std::vector<Poset> out;
  std::vector<Poset> cur = {Poset{}};
  // |H(P)| >= |P| + 1, so sizes beyond max_downsets - 1 cannot qualify, and
  // the downset count only grows when elements are added.
  for (int k = 0; k <= max_downsets - 1 && !cur.empty(); ++k) {
    for (const Poset& p : cur)
      if (p.size() > 0) out.push_back(p);
    std::vector<Poset> next;
    for (Poset& p : extend_all(cur))
      if (static_cast<int>(downsets(p, 32).size()) <= max_downsets)
        next.push_back(std::move(p));
    cur = std::move(next);
  }
  return out;
}

}  // namespace mwlat
