#include "mwlat/poset.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>

namespace mwlat {

namespace {

int words_for(int n) { return n <= 0 ? 1 : (n + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& rows, int words, int a, int b) {
  rows[static_cast<std::size_t>(a) * words + (b >> 6)] |= 1ull << (b & 63);
}

bool get_bit(const std::vector<std::uint64_t>& rows, int words, int a, int b) {
  return (rows[static_cast<std::size_t>(a) * words + (b >> 6)] >> (b & 63)) & 1u;
}

// In-place Warshall closure over bit rows.
void transitive_closure(std::vector<std::uint64_t>& rows, int n, int words) {
  for (int k = 0; k < n; ++k) {
    const std::uint64_t* rk = rows.data() + static_cast<std::size_t>(k) * words;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      if (get_bit(rows, words, i, k)) {
        std::uint64_t* ri = rows.data() + static_cast<std::size_t>(i) * words;
        for (int w = 0; w < words; ++w) ri[w] |= rk[w];
      }
    }
  }
}

}  // namespace

void Poset::derive() {
  words_ = words_for(n_);
  down_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (leq(a, b)) set_bit(down_, words_, b, a);
  covers_.clear();
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      // b covers a iff nothing sits strictly between.
      bool direct = true;
      const std::uint64_t* ua = up_.data() + static_cast<std::size_t>(a) * words_;
      const std::uint64_t* db = down_.data() + static_cast<std::size_t>(b) * words_;
      for (int w = 0; w < words_ && direct; ++w) {
        std::uint64_t mid = ua[w] & db[w];
        if (w == (a >> 6)) mid &= ~(1ull << (a & 63));
        if (w == (b >> 6)) mid &= ~(1ull << (b & 63));
        if (mid) direct = false;
      }
      if (direct) covers_.emplace_back(a, b);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

Poset closure_of_pairs(int n, std::span<const std::pair<int, int>> pairs,
                       std::vector<std::string> labels) {
  if (n < 0) throw IndexOutOfRange("poset size must be nonnegative");
  Poset p;
  p.n_ = n;
  p.words_ = words_for(n);
  p.up_.assign(static_cast<std::size_t>(n) * p.words_, 0);
  for (int a = 0; a < n; ++a) set_bit(p.up_, p.words_, a, a);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexOutOfRange("cover index out of range");
    set_bit(p.up_, p.words_, a, b);
  }
  transitive_closure(p.up_, n, p.words_);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a))
        throw CycleDetected("cover relation closes a cycle through " +
                            std::to_string(a) + " and " + std::to_string(b));
  p.labels_ = std::move(labels);
  if (!p.labels_.empty() && static_cast<int>(p.labels_.size()) != n)
    throw IndexOutOfRange("label count does not match poset size");
  p.derive();
  return p;
}

Poset Poset::from_covers(int n, std::span<const std::pair<int, int>> covers,
                         std::vector<std::string> labels) {
  return closure_of_pairs(n, covers, std::move(labels));
}

Poset Poset::from_covers(int n, std::initializer_list<std::pair<int, int>> covers,
                         std::vector<std::string> labels) {
  std::vector<std::pair<int, int>> v(covers);
  return closure_of_pairs(n, v, std::move(labels));
}

Poset Poset::from_leq_unchecked(int n, const std::vector<bool>& leq,
                                std::vector<std::string> labels) {
  Poset p;
  p.n_ = n;
  p.words_ = words_for(n);
  p.up_.assign(static_cast<std::size_t>(n) * p.words_, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[static_cast<std::size_t>(a) * n + b]) set_bit(p.up_, p.words_, a, b);
  p.labels_ = std::move(labels);
  p.derive();
  return p;
}

Poset Poset::from_leq(int n, const std::vector<bool>& leq,
                      std::vector<std::string> labels) {
  if (static_cast<std::size_t>(n) * n != leq.size())
    throw IndexOutOfRange("order table has wrong size");
  for (int a = 0; a < n; ++a)
    if (!leq[static_cast<std::size_t>(a) * n + a])
      throw Error("order table is not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[static_cast<std::size_t>(a) * n + b] &&
          leq[static_cast<std::size_t>(b) * n + a])
        throw CycleDetected("order table is not antisymmetric");
      if (leq[static_cast<std::size_t>(a) * n + b])
        for (int c = 0; c < n; ++c)
          if (leq[static_cast<std::size_t>(b) * n + c] &&
              !leq[static_cast<std::size_t>(a) * n + c])
            throw Error("order table is not transitive");
    }
  return from_leq_unchecked(n, leq, std::move(labels));
}

std::vector<Elem> Poset::upper_covers(Elem a) const {
  std::vector<Elem> out;
  for (auto [x, y] : covers_)
    if (x == a) out.push_back(y);
  return out;
}

std::vector<Elem> Poset::lower_covers(Elem a) const {
  std::vector<Elem> out;
  for (auto [x, y] : covers_)
    if (y == a) out.push_back(x);
  return out;
}

std::vector<Elem> Poset::minimal_elements() const {
  std::vector<Elem> out;
  for (int a = 0; a < n_; ++a) {
    bool min = true;
    for (int b = 0; b < n_ && min; ++b)
      if (less(b, a)) min = false;
    if (min) out.push_back(a);
  }
  return out;
}

std::vector<Elem> Poset::maximal_elements() const {
  std::vector<Elem> out;
  for (int a = 0; a < n_; ++a) {
    bool max = true;
    for (int b = 0; b < n_ && max; ++b)
      if (less(a, b)) max = false;
    if (max) out.push_back(a);
  }
  return out;
}

Mask Poset::down_mask(Elem a) const {
  if (n_ > 32) throw SizeBound("mask view needs size <= 32");
  return static_cast<Mask>(down_[static_cast<std::size_t>(a) * words_]);
}

Mask Poset::up_mask(Elem a) const {
  if (n_ > 32) throw SizeBound("mask view needs size <= 32");
  return static_cast<Mask>(up_[static_cast<std::size_t>(a) * words_]);
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw IndexOutOfRange("label count does not match poset size");
  labels_ = std::move(labels);
}

std::string Poset::label(Elem a) const {
  if (!labels_.empty()) return labels_[a];
  return std::to_string(a);
}

std::vector<int> Poset::heights() const {
  std::vector<int> h(n_, 0);
  // covers_ is sorted by (low, high); iterate until fixpoint (cheap at our sizes)
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : covers_)
      if (h[b] < h[a] + 1) {
        h[b] = h[a] + 1;
        changed = true;
      }
  }
  return h;
}

std::vector<Elem> minimal_upper_bounds(const Poset& p, Elem x, Elem y) {
  const int n = p.size();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw IndexOutOfRange("element out of range");
  std::vector<Elem> ubs;
  for (int z = 0; z < n; ++z)
    if (p.leq(x, z) && p.leq(y, z)) ubs.push_back(z);
  std::vector<Elem> out;
  for (Elem z : ubs) {
    bool minimal = true;
    for (Elem w : ubs)
      if (w != z && p.leq(w, z)) minimal = false;
    if (minimal) out.push_back(z);
  }
  return out;
}

UslCheck is_usl_initial_segment(const Poset& p) {
  const int n = p.size();
  for (int x0 = 0; x0 < n; ++x0)
    for (int x1 = x0 + 1; x1 < n; ++x1) {
      if (!p.incomparable(x0, x1)) continue;
      std::vector<Elem> mubs = minimal_upper_bounds(p, x0, x1);
      if (mubs.size() >= 2)
        return {false, BowtieWitness{x0, x1, mubs[0], mubs[1]}};
    }
  return {true, std::nullopt};
}

bool is_upper_semilattice(const Poset& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (minimal_upper_bounds(p, x, y).size() != 1) return false;
  return true;
}

Poset add_top(const Poset& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> pairs(p.covers().begin(), p.covers().end());
  for (Elem m : p.maximal_elements()) pairs.emplace_back(m, n);
  if (n == 0) return Poset::from_covers(1, std::span<const std::pair<int, int>>{});
  std::vector<std::string> labels;
  if (!p.labels().empty()) {
    labels = p.labels();
    labels.push_back("top");
  }
  return Poset::from_covers(n + 1, pairs, std::move(labels));
}

bool is_downset(const Poset& p, Mask m) {
  if (p.size() > 32) throw SizeBound("downset mask needs size <= 32");
  for (Mask rest = m; rest; rest &= rest - 1) {
    Elem x = std::countr_zero(rest);
    if ((p.down_mask(x) & ~m) != 0) return false;
  }
  return true;
}

std::vector<DownSet> downsets(const Poset& p, int bound) {
  const int n = p.size();
  if (n > bound || n > 32)
    throw SizeBound("downset enumeration capped at " +
                    std::to_string(std::min(bound, 32)) + " elements");
  std::vector<Mask> down(n);
  for (int i = 0; i < n; ++i) down[i] = p.down_mask(i);
  std::vector<DownSet> out;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask m = 0;; ++m) {
    bool ok = true;
    for (Mask rest = m; rest && ok; rest &= rest - 1)
      if ((down[std::countr_zero(rest)] & ~m) != 0) ok = false;
    if (ok) out.push_back(DownSet{m});
    if (m == full) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling: iterated invariant refinement, then a backtracking
// search for the ordering with the lexicographically least order matrix.
// Orderings are constrained to list refinement classes in color order.

namespace {

std::vector<int> refined_colors(const Poset& p) {
  const int n = p.size();
  std::vector<int> h = p.heights();
  using Key = std::vector<int>;
  std::vector<Key> keys(n);
  for (int i = 0; i < n; ++i) {
    int down_cnt = 0, up_cnt = 0;
    for (int j = 0; j < n; ++j) {
      if (p.less(j, i)) ++down_cnt;
      if (p.less(i, j)) ++up_cnt;
    }
    keys[i] = {down_cnt, up_cnt, h[i]};
  }
  std::vector<int> color(n, 0);
  int classes = 0;
  for (int round = 0; round <= n; ++round) {
    std::map<Key, int> ids;
    for (int i = 0; i < n; ++i) ids.emplace(keys[i], 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (int i = 0; i < n; ++i) color[i] = ids[keys[i]];
    if (next == classes || next == n) break;
    classes = next;
    for (int i = 0; i < n; ++i) {
      Key k = {color[i], -1};
      std::vector<int> up, down;
      for (Elem j : p.upper_covers(i)) up.push_back(color[j]);
      for (Elem j : p.lower_covers(i)) down.push_back(color[j]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      k.insert(k.end(), up.begin(), up.end());
      k.push_back(-2);
      k.insert(k.end(), down.begin(), down.end());
      keys[i] = std::move(k);
    }
  }
  return color;
}

struct CanonSearch {
  const Poset* p = nullptr;
  int n = 0;
  std::vector<std::vector<Elem>> members;  // per color, ascending
  std::vector<int> slot_color;             // color required at each slot
  std::vector<Elem> cur, best_order;
  std::vector<std::uint8_t> code, best;
  std::vector<char> used;
  bool have_best = false;

  void dfs(int k) {
    if (k == n) {
      if (!have_best || code < best) {
        best = code;
        best_order = cur;
        have_best = true;
      }
      return;
    }
    for (Elem cand : members[slot_color[k]]) {
      if (used[cand]) continue;
      const std::size_t len0 = code.size();
      for (int j = 0; j < k; ++j) code.push_back(p->leq(cur[j], cand));
      for (int j = 0; j < k; ++j) code.push_back(p->leq(cand, cur[j]));
      bool viable = true;
      if (have_best)
        viable = std::memcmp(code.data(), best.data(), code.size()) <= 0;
      if (viable) {
        used[cand] = 1;
        cur.push_back(cand);
        dfs(k + 1);
        cur.pop_back();
        used[cand] = 0;
      }
      code.resize(len0);
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Poset& p) {
  const int n = p.size();
  CanonSearch s;
  s.p = &p;
  s.n = n;
  std::vector<int> color = refined_colors(p);
  int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  s.members.resize(classes);
  for (int i = 0; i < n; ++i) s.members[color[i]].push_back(i);
  s.slot_color = color;
  std::sort(s.slot_color.begin(), s.slot_color.end());
  s.used.assign(n, 0);
  s.cur.reserve(n);
  s.code.reserve(static_cast<std::size_t>(n) * (n - 1));
  s.dfs(0);

  CanonicalLabeling out;
  out.order = std::move(s.best_order);
  out.bytes.reserve(4 + s.best.size());
  for (int i = 0; i < 4; ++i)
    out.bytes.push_back(static_cast<std::uint8_t>((n >> (8 * i)) & 0xff));
  out.bytes.insert(out.bytes.end(), s.best.begin(), s.best.end());
  return out;
}

std::vector<std::uint8_t> canonical_form(const Poset& p) {
  return canonical_labeling(p).bytes;
}

bool are_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  return canonical_form(p) == canonical_form(q);
}

std::optional<std::vector<Elem>> find_isomorphism(const Poset& p,
                                                  const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  CanonicalLabeling cp = canonical_labeling(p);
  CanonicalLabeling cq = canonical_labeling(q);
  if (cp.bytes != cq.bytes) return std::nullopt;
  std::vector<Elem> map(p.size());
  for (int k = 0; k < p.size(); ++k) map[cp.order[k]] = cq.order[k];
  return map;
}

Poset dual(const Poset& p) {
  const int n = p.size();
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(b, a)) leq[static_cast<std::size_t>(a) * n + b] = true;
  return Poset::from_leq_unchecked(n, leq, p.labels());
}

Poset induced(const Poset& p, std::span<const Elem> elems) {
  const int m = static_cast<int>(elems.size());
  std::vector<bool> leq(static_cast<std::size_t>(m) * m, false);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.leq(elems[a], elems[b])) leq[static_cast<std::size_t>(a) * m + b] = true;
  std::vector<std::string> labels;
  if (!p.labels().empty())
    for (Elem e : elems) labels.push_back(p.labels()[e]);
  return Poset::from_leq_unchecked(m, leq, std::move(labels));
}

Poset relabel(const Poset& p, std::span<const Elem> perm) {
  const int n = p.size();
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(a, b))
        leq[static_cast<std::size_t>(perm[a]) * n + perm[b]] = true;
  std::vector<std::string> labels;
  if (!p.labels().empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[perm[i]] = p.labels()[i];
  }
  return Poset::from_leq_unchecked(n, leq, std::move(labels));
}

}  // namespace mwlat
