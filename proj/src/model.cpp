#include "mwlat/model.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "mwlat/enumerate.hpp"
#include "mwlat/parallel.hpp"

namespace mwlat {

namespace {

void check_members(const DegreeStructure& d, MassProblem a) {
  const Mask full =
      d.size() >= 32 ? ~Mask{0} : (Mask{1} << d.size()) - 1;
  if ((a.bits & ~full) != 0)
    throw IndexOutOfRange("mass problem member out of range");
}

}  // namespace

DegreeStructure DegreeStructure::from_poset(const Poset& order,
                                            std::optional<Elem> bottom) {
  const int n = order.size();
  if (n > 32) throw SizeBound("degree structures capped at 32 elements");
  DegreeStructure d;
  d.order_ = order;
  d.join_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      std::vector<Elem> mubs = minimal_upper_bounds(order, a, b);
      if (mubs.size() != 1)
        throw NotALattice("pair has no least upper bound", a, b, true);
      d.join_[static_cast<std::size_t>(a) * n + b] = mubs[0];
      d.join_[static_cast<std::size_t>(b) * n + a] = mubs[0];
    }
  if (bottom) {
    if (*bottom < 0 || *bottom >= n)
      throw IndexOutOfRange("bottom out of range");
    for (int a = 0; a < n; ++a)
      if (!order.leq(*bottom, a))
        throw Error("designated bottom is not below every element");
  }
  d.bottom_ = bottom;
  return d;
}

MuchnikDegree up_closure(const DegreeStructure& d, MassProblem a) {
  check_members(d, a);
  Mask up = 0;
  for (Mask rest = a.bits; rest; rest &= rest - 1)
    up |= d.order().up_mask(std::countr_zero(rest));
  return MuchnikDegree{up};
}

bool leq_w(const DegreeStructure& d, MassProblem a, MassProblem b) {
  return (up_closure(d, b).upset & ~up_closure(d, a).upset) == 0;
}

bool equiv_w(const DegreeStructure& d, MassProblem a, MassProblem b) {
  return up_closure(d, a) == up_closure(d, b);
}

MassProblem meet_w(MassProblem a, MassProblem b) {
  return MassProblem{a.bits | b.bits};
}

MassProblem join_w(const DegreeStructure& d, MassProblem a, MassProblem b) {
  check_members(d, a);
  check_members(d, b);
  Mask out = 0;
  for (Mask ra = a.bits; ra; ra &= ra - 1)
    for (Mask rb = b.bits; rb; rb &= rb - 1)
      out |= Mask{1} << d.join(std::countr_zero(ra), std::countr_zero(rb));
  return MassProblem{out};
}

MassProblem prime(const DegreeStructure& d, Elem f) {
  if (f < 0 || f >= d.size()) throw IndexOutOfRange("element out of range");
  Mask up = d.order().up_mask(f) & ~(Mask{1} << f);
  return MassProblem{up};
}

std::vector<Mask> all_upsets(const DegreeStructure& d) {
  const int n = d.size();
  if (n > 20) throw SizeBound("degree enumeration capped at 20 elements");
  std::vector<Mask> down(n);
  for (int i = 0; i < n; ++i) down[i] = d.order().down_mask(i);
  std::vector<Mask> out;
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask m = 0;; ++m) {
    bool ok = true;
    // m is an upset iff its complement is a downset
    for (Mask rest = full & ~m; rest && ok; rest &= rest - 1)
      if ((down[std::countr_zero(rest)] & m) != 0) ok = false;
    if (ok) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

namespace {

// phi over degrees: a least strict successor exists. Degrees are upsets
// ordered by reverse inclusion, so successors of U are upsets strictly
// inside U and the least one is the largest such upset.
bool phi_on_upset(const DegreeStructure& d, Mask u,
                  const std::vector<Mask>& upsets) {
  for (Mask y : upsets) {
    if (y == u || (y & ~u) != 0) continue;  // need y strictly inside u
    bool least = true;
    for (Mask z : upsets) {
      if (z == u || (z & ~u) != 0) continue;
      if ((z & ~y) != 0) {  // not y >= z in degree order (y subset of z)
        least = false;
        break;
      }
    }
    if (least) return true;
  }
  return false;
}

}  // namespace

bool phi_definable(const DegreeStructure& d, MassProblem a) {
  return phi_on_upset(d, up_closure(d, a).upset, all_upsets(d));
}

bool is_principal(const DegreeStructure& d, MassProblem a) {
  Mask u = up_closure(d, a).upset;
  for (int f = 0; f < d.size(); ++f)
    if (d.order().up_mask(f) == u) return true;
  return false;
}

DymentCheck dyment_check(const Poset& degree_order) {
  const int n = degree_order.size();
  if (n > kModelScanBound)
    throw SizeBound("interval scan capped at " +
                    std::to_string(kModelScanBound) + " elements");
  // Joins play no role here; build cones straight off the poset.
  std::vector<Mask> up(n), strict_up(n);
  for (int i = 0; i < n; ++i) {
    up[i] = degree_order.up_mask(i);
    strict_up[i] = up[i] & ~(Mask{1} << i);
  }
  std::vector<Mask> down(n);
  for (int i = 0; i < n; ++i) down[i] = degree_order.down_mask(i);
  std::vector<Mask> upsets;
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask m = 0;; ++m) {
    bool ok = true;
    for (Mask rest = full & ~m; rest && ok; rest &= rest - 1)
      if ((down[std::countr_zero(rest)] & m) != 0) ok = false;
    if (ok) upsets.push_back(m);
    if (m == full) break;
  }

  DymentCheck out;
  for (Mask ua : upsets)
    for (Mask ub : upsets) {
      if (ua == ub || (ub & ~ua) != 0) continue;  // need deg A < deg B
      ++out.pairs;
      bool empty_interval = true;
      for (Mask v : upsets)
        if (v != ua && v != ub && (ub & ~v) == 0 && (v & ~ua) == 0) {
          empty_interval = false;
          break;
        }
      bool witnessed = false;
      for (int f = 0; f < n && !witnessed; ++f) {
        bool a_eq = (ub | up[f]) == ua;             // A = B x S
        bool b_not_leq_s = ((Mask{1} << f) & ub) == 0;  // B not<= S
        bool b_leq_sp = (strict_up[f] & ~ub) == 0;  // B <= S'
        if (a_eq && b_not_leq_s && b_leq_sp) witnessed = true;
      }
      if (empty_interval != witnessed)
        out.violations.push_back(DymentViolation{ua, ub});
    }

  // Definability of the degrees of solvability inside this model.
  for (Mask u : upsets) {
    bool principal = false;
    for (int f = 0; f < n; ++f)
      if (up[f] == u) principal = true;
    bool phi = false;
    for (Mask y : upsets) {
      if (y == u || (y & ~u) != 0) continue;
      bool least = true;
      for (Mask z : upsets) {
        if (z == u || (z & ~u) != 0) continue;
        if ((z & ~y) != 0) {
          least = false;
          break;
        }
      }
      if (least) {
        phi = true;
        break;
      }
    }
    if (phi != principal) out.phi_principal_ok = false;
  }
  return out;
}

DymentScanReport dyment_scan(int max_size, int workers) {
  if (max_size < 1 || max_size > kModelScanBound)
    throw SizeBound("scan capped at " + std::to_string(kModelScanBound));
  std::vector<Poset> usls;
  for (int n = 1; n <= max_size; ++n)
    for (Poset& p : enumerate_posets(n))
      if (is_upper_semilattice(p)) usls.push_back(std::move(p));
  DymentScanReport report;
  report.max_size = max_size;
  report.structures = static_cast<int>(usls.size());
  std::vector<DymentCheck> checks(usls.size());
  parallel_for(static_cast<int>(usls.size()), workers,
               [&](int i) { checks[i] = dyment_check(usls[i]); });
  for (const DymentCheck& c : checks) {
    report.pairs += c.pairs;
    report.violations += static_cast<long long>(c.violations.size());
    if (!c.phi_principal_ok) report.phi_principal_ok = false;
  }
  return report;
}

BooleanInterval boolean_interval(int n) {
  if (n < 1 || n > 4)
    throw SizeBound("boolean interval construction capped at n = 4");
  // Elements are the nonempty subsets of {0..n-1}; the order is inclusion.
  const int count = (1 << n) - 1;
  std::vector<bool> leq(static_cast<std::size_t>(count) * count, false);
  for (int i = 1; i <= count; ++i)
    for (int j = 1; j <= count; ++j)
      if ((i & ~j) == 0)
        leq[static_cast<std::size_t>(i - 1) * count + (j - 1)] = true;
  DegreeStructure d =
      DegreeStructure::from_poset(Poset::from_leq_unchecked(count, leq));
  Mask singletons = 0;
  for (int i = 0; i < n; ++i) singletons |= Mask{1} << ((1 << i) - 1);
  MassProblem a{singletons};
  MassProblem b{0};
  for (int i = 0; i < n; ++i) b = meet_w(b, prime(d, (1 << i) - 1));
  return BooleanInterval{std::move(d), a, b};
}

Mask FContext::hat(DownSet a) const {
  auto it = hat_cache.find(a.bits);
  if (it != hat_cache.end()) return it->second;
  Mask hat = 0;
  for (Mask rest = a.bits; rest; rest &= rest - 1) {
    Elem x = std::countr_zero(rest);
    if ((base.up_mask(x) & ~(Mask{1} << x) & a.bits) == 0)
      hat |= Mask{1} << x;
  }
  hat_cache.emplace(a.bits, hat);
  return hat;
}

FContext ambient(const Poset& p, bool with_bottom) {
  if (p.size() > 30) throw SizeBound("ambient construction capped at 30");
  UslCheck check = is_usl_initial_segment(p);
  if (!check.ok)
    throw NotInitialSegment(
        "base poset is not an initial segment of an upper semilattice",
        *check.witness);
  Poset amb = add_top(p);
  std::optional<Elem> bottom;
  if (with_bottom) {
    const int n = amb.size();
    std::vector<std::pair<int, int>> pairs(amb.covers().begin(),
                                           amb.covers().end());
    for (Elem m : amb.minimal_elements()) pairs.emplace_back(n, m);
    std::vector<std::string> labels;
    if (!amb.labels().empty()) {
      labels = amb.labels();
      labels.push_back("bottom");
    }
    amb = Poset::from_covers(n + 1, pairs, std::move(labels));
    bottom = n;
  }
  FContext ctx;
  ctx.base = p;
  ctx.top = p.size();
  ctx.bottom = bottom;
  ctx.ambient = DegreeStructure::from_poset(amb, bottom);
  return ctx;
}

MassProblem f_construct(const FContext& ctx, DownSet a) {
  if (!is_downset(ctx.base, a.bits))
    throw InvalidConfiguration("argument is not a downset of the base poset");
  Mask hat = ctx.hat(a);
  Mask out = 0;
  for (Mask rest = hat; rest; rest &= rest - 1)
    out |= prime(ctx.ambient, std::countr_zero(rest)).bits;
  // Base elements incomparable to every maximal element of a, reduced to the
  // minimal ones; superiors add nothing to the degree.
  Mask incomp = 0;
  for (Elem f = 0; f < ctx.base.size(); ++f) {
    bool ok = true;
    for (Mask rest = hat; rest && ok; rest &= rest - 1)
      if (!ctx.base.incomparable(f, std::countr_zero(rest))) ok = false;
    if (ok) incomp |= Mask{1} << f;
  }
  for (Mask rest = incomp; rest; rest &= rest - 1) {
    Elem f = std::countr_zero(rest);
    if ((ctx.base.down_mask(f) & ~(Mask{1} << f) & incomp) == 0)
      out |= Mask{1} << f;
  }
  return MassProblem{out};
}

namespace {

// Upsets of the ambient squeezed between hi and lo (hi subset of U subset of
// lo), i.e. the degrees of the model interval.
std::vector<Mask> upsets_between(const DegreeStructure& d, Mask hi, Mask lo) {
  std::vector<Mask> out;
  Mask diff = lo & ~hi;
  std::vector<Elem> elems;
  for (Mask rest = diff; rest; rest &= rest - 1)
    elems.push_back(std::countr_zero(rest));
  const int k = static_cast<int>(elems.size());
  if (k > 20) throw SizeBound("interval enumeration capped at 20 free elements");
  for (Mask pick = 0;; ++pick) {
    Mask u = hi;
    for (int i = 0; i < k; ++i)
      if ((pick >> i) & 1u) u |= Mask{1} << elems[i];
    // upward closed?
    bool ok = true;
    for (Mask rest = u; rest && ok; rest &= rest - 1)
      if ((d.order().up_mask(std::countr_zero(rest)) & ~u) != 0) ok = false;
    if (ok) out.push_back(u);
    if (pick + 1 == (Mask{1} << k)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string degree_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "D" + std::to_string(index);
}

}  // namespace

FIsoReport verify_f_iso(const Poset& p, bool with_bottom) {
  if (p.size() > kFIsoBound)
    throw SizeBound("interval verification capped at " +
                    std::to_string(kFIsoBound) + " elements");
  FContext ctx = ambient(p, with_bottom);
  const DegreeStructure& d = ctx.ambient;
  std::vector<DownSet> ds = downsets(p);
  const int count = static_cast<int>(ds.size());

  FIsoReport report;
  report.with_bottom = with_bottom;
  report.downset_count = count;
  std::vector<MassProblem> f(count);
  std::vector<Mask> ups(count);
  for (int i = 0; i < count; ++i) {
    f[i] = f_construct(ctx, ds[i]);
    ups[i] = up_closure(d, f[i]).upset;
  }

  auto fail_pair = [&](int i, int j) {
    if (!report.counterexample)
      report.counterexample = std::make_pair(ds[i].bits, ds[j].bits);
  };

  report.injective = true;
  report.monotone_both_ways = true;
  report.meets_preserved = true;
  report.joins_preserved = true;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (i < j && ups[i] == ups[j]) {
        report.injective = false;
        fail_pair(i, j);
      }
      bool sub = (ds[i].bits & ~ds[j].bits) == 0;
      bool deg_leq = (ups[j] & ~ups[i]) == 0;  // F(i) <=_w F(j)
      if (sub != deg_leq) {
        report.monotone_both_ways = false;
        fail_pair(i, j);
      }
      MassProblem inter = f_construct(ctx, DownSet{ds[i].bits & ds[j].bits});
      if (up_closure(d, inter).upset !=
          (up_closure(d, meet_w(f[i], f[j])).upset)) {
        report.meets_preserved = false;
        fail_pair(i, j);
      }
      MassProblem uni = f_construct(ctx, DownSet{ds[i].bits | ds[j].bits});
      if (up_closure(d, uni).upset !=
          up_closure(d, join_w(d, f[i], f[j])).upset) {
        report.joins_preserved = false;
        fail_pair(i, j);
      }
    }

  // Surjectivity: the degrees between F(empty) and F(P) are exactly the
  // F-images. ds is sorted by mask, so index 0 is empty and the last is P.
  Mask lo = ups[0];             // largest upset, bottom of the interval
  Mask hi = ups[count - 1];     // smallest upset, top of the interval
  std::vector<Mask> degs = upsets_between(d, hi, lo);
  report.interval_degree_count = static_cast<int>(degs.size());
  std::vector<Mask> image(ups);
  std::sort(image.begin(), image.end());
  report.surjective = degs == image;

  Lattice model_interval = interval_to_lattice(d, f[0], f[count - 1]);
  report.interval_matches_downset_lattice =
      are_isomorphic(model_interval, downset_lattice(p));

  report.pass = report.injective && report.monotone_both_ways &&
                report.meets_preserved && report.joins_preserved &&
                report.surjective && report.interval_matches_downset_lattice;

  // Listing sorted by degree (ascending): larger upsets first.
  std::vector<int> idx(count);
  for (int i = 0; i < count; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    int pi = std::popcount(ups[i]), pj = std::popcount(ups[j]);
    if (pi != pj) return pi > pj;
    return ups[i] < ups[j];
  });
  for (int k = 0; k < count; ++k) {
    FIsoReport::Entry e;
    e.name = degree_name(k);
    e.downset = ds[idx[k]].bits;
    e.mass_problem = f[idx[k]].bits;
    e.upset = ups[idx[k]];
    report.degrees.push_back(std::move(e));
  }
  return report;
}

Lattice interval_to_lattice(const DegreeStructure& d, MassProblem a,
                            MassProblem b) {
  Mask ua = up_closure(d, a).upset;
  Mask ub = up_closure(d, b).upset;
  if ((ub & ~ua) != 0)
    throw NotComparable("interval endpoints must satisfy deg(a) <= deg(b)");
  std::vector<Mask> degs = upsets_between(d, ub, ua);
  const int n = static_cast<int>(degs.size());
  // Bottom first: sort by (popcount desc, mask asc).
  std::sort(degs.begin(), degs.end(), [](Mask x, Mask y) {
    int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px > py;
    return x < y;
  });
  std::map<Mask, int> index;
  for (int i = 0; i < n; ++i) index.emplace(degs[i], i);
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((degs[j] & ~degs[i]) == 0)  // deg i <= deg j: upset j inside upset i
        leq[static_cast<std::size_t>(i) * n + j] = true;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    std::string s = "deg{";
    bool first = true;
    for (Mask rest = degs[i]; rest; rest &= rest - 1) {
      if (!first) s += ",";
      s += d.order().label(std::countr_zero(rest));
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
      join[static_cast<std::size_t>(i) * n + j] = index.at(degs[i] & degs[j]);
      meet[static_cast<std::size_t>(i) * n + j] = index.at(degs[i] | degs[j]);
    }
  return Lattice::from_tables_unchecked(std::move(order), std::move(join),
                                        std::move(meet), true);
}

std::optional<std::pair<MuchnikDegree, MuchnikDegree>> search_interval_iso(
    const DegreeStructure& d, const Lattice& l) {
  if (d.size() > kModelScanBound)
    throw SizeBound("interval search capped at " +
                    std::to_string(kModelScanBound));
  std::vector<Mask> upsets = all_upsets(d);
  for (Mask bottom : upsets)
    for (Mask top : upsets) {
      if ((top & ~bottom) != 0) continue;  // need deg bottom <= deg top
      int count = 0;
      for (Mask u : upsets)
        if ((u & ~bottom) == 0 && (top & ~u) == 0) ++count;
      if (count != l.size()) continue;
      Lattice li = interval_to_lattice(d, MassProblem{bottom}, MassProblem{top});
      if (are_isomorphic(li, l))
        return std::make_pair(MuchnikDegree{bottom}, MuchnikDegree{top});
    }
  return std::nullopt;
}

}  // namespace mwlat
