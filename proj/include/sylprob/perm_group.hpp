#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sylprob/perm.hpp"
#include "sylprob/primes.hpp"
#include "sylprob/rational.hpp"

namespace sylprob {

inline constexpr std::size_t kDefaultEnumerationBudget = 2'000'000;

/// Base points, basic orbits and strong generators certifying order and
/// membership. Built eagerly and deterministically: base points are chosen
/// as the smallest moved point at each level, orbits by breadth-first
/// search in generator order.
class StabilizerChain {
public:
  StabilizerChain(unsigned degree, const std::vector<Perm>& gens) : degree_(degree) {
    std::vector<Perm> start;
    for (const Perm& g : gens)
      if (!g.is_identity()) start.push_back(g);
    if (!start.empty()) {
      unsigned base = degree_;
      for (const Perm& g : start)
        base = std::min(base, *g.smallest_moved_point());
      levels_.push_back(Level(base));
      for (Perm& g : start) push_generator(0, std::move(g));
      complete(0);
    }
    order_ = 1;
    for (const Level& lv : levels_) order_ *= static_cast<unsigned>(lv.orbit.size());
  }

  unsigned degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  std::size_t depth() const { return levels_.size(); }

  bool contains(const Perm& x) const {
    if (x.degree() != degree_)
      throw DegreeMismatchError("membership test across degrees");
    Perm r = x;
    return strip(r, 0) == levels_.size() && r.is_identity();
  }

  /// Lengths of the basic orbits; their product is the group order.
  std::vector<unsigned> orbit_lengths() const {
    std::vector<unsigned> out;
    out.reserve(levels_.size());
    for (const Level& lv : levels_) out.push_back(static_cast<unsigned>(lv.orbit.size()));
    return out;
  }

  unsigned level_base(std::size_t i) const { return levels_[i].base; }
  const std::vector<unsigned>& level_orbit(std::size_t i) const { return levels_[i].orbit; }

  /// The transversal element u at level i with u(base) = pt.
  Perm transversal_element(std::size_t i, unsigned pt) const { return transversal(i, pt); }

  /// Visits every group element exactly once, in a fixed order.
  void for_each_element(const std::function<void(const Perm&)>& fn) const {
    for_each_element_while([&](const Perm& p) {
      fn(p);
      return true;
    });
  }

  /// Like for_each_element but stops when the callback returns false.
  /// Returns false when stopped early.
  bool for_each_element_while(const std::function<bool(const Perm&)>& fn) const {
    if (levels_.empty()) return fn(Perm(degree_));
    return enumerate_from(levels_.size(), Perm(degree_), fn);
  }

  /// Uniformly random element: one transversal element per level.
  template <class Rng>
  Perm random_element(Rng& rng) const {
    Perm acc(degree_);
    for (std::size_t li = levels_.size(); li-- > 0;) {
      const Level& lv = levels_[li];
      unsigned pt = lv.orbit[rng() % lv.orbit.size()];
      if (pt != lv.base) acc = acc * transversal(li, pt);
    }
    return acc;
  }

private:
  struct Level {
    explicit Level(unsigned b) : base(b) {}
    unsigned base = 0;
    std::vector<Perm> gens;
    std::vector<Perm> inv_gens;
    // Schreier vector: for each point, index of the generator whose
    // inverse walks one step toward the base; -1 outside the orbit,
    // -2 at the base itself.
    std::vector<int> sv;
    std::vector<unsigned> orbit;  // BFS discovery order
  };

  unsigned degree_;
  std::vector<Level> levels_;
  BigInt order_ = 1;

  void push_generator(std::size_t lvl, Perm g) {
    levels_[lvl].inv_gens.push_back(g.inverse());
    levels_[lvl].gens.push_back(std::move(g));
  }

  void rebuild_orbit(std::size_t li) {
    Level& lv = levels_[li];
    lv.sv.assign(degree_, -1);
    lv.orbit.clear();
    lv.sv[lv.base] = -2;
    lv.orbit.push_back(lv.base);
    for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      unsigned pt = lv.orbit[qi];
      for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
        unsigned img = lv.gens[gi][pt];
        if (lv.sv[img] == -1) {
          lv.sv[img] = static_cast<int>(gi);
          lv.orbit.push_back(img);
        }
      }
    }
  }

  /// u with u(base) = pt, a product of level generators.
  Perm transversal(std::size_t li, unsigned pt) const {
    const Level& lv = levels_[li];
    std::vector<int> path;  // generator indices from base to pt, reversed
    unsigned cur = pt;
    while (cur != lv.base) {
      int gi = lv.sv[cur];
      path.push_back(gi);
      cur = lv.inv_gens[gi][cur];
    }
    Perm u(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * lv.gens[*it];
    return u;
  }

  /// Multiplies x by inverse transversal elements until it fixes the base
  /// points of all levels from `from` on, or stalls. Returns the level at
  /// which it stalled (levels_.size() when it ran through).
  std::size_t strip(Perm& x, std::size_t from) const {
    for (std::size_t li = from; li < levels_.size(); ++li) {
      const Level& lv = levels_[li];
      unsigned pt = x[lv.base];
      if (pt == lv.base) continue;
      if (lv.sv[pt] == -1) return li;
      while (pt != lv.base) {
        int gi = lv.sv[pt];
        x = x * lv.inv_gens[gi];
        pt = lv.inv_gens[gi][pt];
      }
    }
    return levels_.size();
  }

  // Verifies the Schreier generators of level i against the chain below,
  // extending it where they fail to strip. On return, levels i.. certify
  // membership exactly. Level i's own orbit and generator list are stable
  // throughout (extensions happen strictly deeper), but levels_ may
  // reallocate, so access goes through the index.
  void complete(std::size_t i) {
    rebuild_orbit(i);
    for (std::size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
      unsigned pt = levels_[i].orbit[oi];
      Perm u = transversal(i, pt);
      for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        unsigned img = levels_[i].gens[gi][pt];
        Perm h = u * levels_[i].gens[gi] * transversal(i, img).inverse();
        if (h.is_identity()) continue;
        std::size_t j = strip(h, i + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size())
          levels_.push_back(Level(*h.smallest_moved_point()));
        for (std::size_t k = i + 1; k <= j; ++k) push_generator(k, h);
        for (std::size_t k = j; k > i; --k) complete(k);
      }
    }
  }

  bool enumerate_from(std::size_t li, const Perm& acc,
                      const std::function<bool(const Perm&)>& fn) const {
    if (li == 0) return fn(acc);
    const Level& lv = levels_[li - 1];
    for (unsigned pt : lv.orbit) {
      if (pt == lv.base) {
        if (!enumerate_from(li - 1, acc, fn)) return false;
      } else if (!enumerate_from(li - 1, acc * transversal(li - 1, pt), fn)) {
        return false;
      }
    }
    return true;
  }
};

/// A finite permutation group given by generators, certified by a
/// stabilizer chain built on construction. Immutable; safe to share.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Perm> gens)
      : degree_(degree), gens_(filter(degree, std::move(gens))), chain_(degree, gens_) {
    if (gens_.empty()) gens_.push_back(Perm(degree_));
  }

  static PermGroup trivial(unsigned degree) { return PermGroup(degree, {}); }

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabilizerChain& chain() const { return chain_; }
  const BigInt& order() const { return chain_.order(); }
  bool is_trivial() const { return chain_.order() == 1; }

  bool contains(const Perm& x) const { return chain_.contains(x); }

  bool is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
    return true;
  }

  /// Prime factorization of the order, assembled from the basic orbit
  /// lengths (every prime divisor of the order divides one of them).
  std::map<std::uint64_t, unsigned> order_factorization() const {
    std::map<std::uint64_t, unsigned> out;
    for (unsigned len : chain_.orbit_lengths())
      for (auto [p, e] : factorize(len)) out[p] += e;
    return out;
  }

  std::vector<std::uint64_t> prime_divisors() const {
    std::vector<std::uint64_t> ps;
    for (auto [p, e] : order_factorization()) ps.push_back(p);
    return ps;
  }

  void for_each_element(const std::function<void(const Perm&)>& fn,
                        std::size_t budget = kDefaultEnumerationBudget) const {
    if (order() > budget)
      throw BudgetError("enumeration of group of order " + order().str() +
                        " exceeds budget " + std::to_string(budget));
    chain_.for_each_element(fn);
  }

  bool for_each_element_while(const std::function<bool(const Perm&)>& fn,
                              std::size_t budget = kDefaultEnumerationBudget) const {
    if (order() > budget)
      throw BudgetError("enumeration of group of order " + order().str() +
                        " exceeds budget " + std::to_string(budget));
    return chain_.for_each_element_while(fn);
  }

  template <class Rng>
  Perm random_element(Rng& rng) const {
    return chain_.random_element(rng);
  }

  std::vector<Perm> elements(std::size_t budget = kDefaultEnumerationBudget) const {
    if (order() > budget)
      throw BudgetError("enumeration of group of order " + order().str() +
                        " exceeds budget " + std::to_string(budget));
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(order()));
    for_each_element([&](const Perm& p) { out.push_back(p); }, budget);
    return out;
  }

private:
  static std::vector<Perm> filter(unsigned degree, std::vector<Perm> gens) {
    std::vector<Perm> out;
    for (Perm& g : gens) {
      if (g.degree() != degree)
        throw DegreeMismatchError("generator degree differs from group degree");
      if (!g.is_identity()) out.push_back(std::move(g));
    }
    return out;
  }

  unsigned degree_;
  std::vector<Perm> gens_;
  StabilizerChain chain_;
};

/// Incremental closure helper: feed elements, keeps an irredundant
/// generating set and a chain for membership along the way.
class GroupAccumulator {
public:
  explicit GroupAccumulator(unsigned degree) : degree_(degree) {}

  bool contains(const Perm& x) const {
    if (!chain_) return x.is_identity();
    return chain_->contains(x);
  }

  /// Returns true when the element enlarged the group.
  bool add(const Perm& x) {
    if (contains(x)) return false;
    gens_.push_back(x);
    chain_.emplace(degree_, gens_);
    return true;
  }

  BigInt order() const { return chain_ ? chain_->order() : BigInt(1); }
  const std::vector<Perm>& generators() const { return gens_; }

  PermGroup to_group() const { return PermGroup(degree_, gens_); }

private:
  unsigned degree_;
  std::vector<Perm> gens_;
  std::optional<StabilizerChain> chain_;
};

inline PermGroup generated_subgroup(unsigned degree, const std::vector<Perm>& gens) {
  return PermGroup(degree, gens);
}

inline bool contains_subgroup(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) return false;
  for (const Perm& x : h.generators())
    if (!g.contains(x)) return false;
  return true;
}

inline void require_subgroup(const PermGroup& g, const PermGroup& h, const char* what) {
  if (!contains_subgroup(g, h))
    throw PreconditionError(std::string(what) + ": not a subgroup of the ambient group");
}

inline bool equal_groups(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && contains_subgroup(a, b);
}

/// {y in g : yx = xy}. Exhaustive scan behind the chain certificate;
/// the scan is budget-guarded.
inline PermGroup centralizer(const PermGroup& g, const Perm& x,
                             std::size_t budget = kDefaultEnumerationBudget) {
  if (x.degree() != g.degree())
    throw DegreeMismatchError("centralizer argument degree mismatch");
  if (!g.contains(x)) throw PreconditionError("centralizer: element not in group");
  GroupAccumulator acc(g.degree());
  g.for_each_element(
      [&](const Perm& y) {
        if (y * x == x * y) acc.add(y);
      },
      budget);
  return acc.to_group();
}

/// Elements of g centralizing every generator of h, i.e. C_g(h).
inline PermGroup centralizer_of_subgroup(const PermGroup& g, const PermGroup& h,
                                         std::size_t budget = kDefaultEnumerationBudget) {
  require_subgroup(g, h, "centralizer_of_subgroup");
  GroupAccumulator acc(g.degree());
  g.for_each_element(
      [&](const Perm& y) {
        for (const Perm& k : h.generators())
          if (y * k != k * y) return;
        acc.add(y);
      },
      budget);
  return acc.to_group();
}

inline PermGroup conjugate_subgroup(const PermGroup& h, const Perm& x) {
  if (x.degree() != h.degree())
    throw DegreeMismatchError("conjugating by permutation of different degree");
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& g : h.generators()) gens.push_back(conjugate(g, x));
  return PermGroup(h.degree(), std::move(gens));
}

inline bool normalizes(const Perm& x, const PermGroup& h) {
  for (const Perm& g : h.generators())
    if (!h.contains(conjugate(g, x))) return false;
  return true;
}

inline PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                            std::size_t budget = kDefaultEnumerationBudget) {
  require_subgroup(g, h, "normalizer");
  GroupAccumulator acc(g.degree());
  g.for_each_element(
      [&](const Perm& y) {
        if (normalizes(y, h)) acc.add(y);
      },
      budget);
  return acc.to_group();
}

inline bool is_normal(const PermGroup& g, const PermGroup& n) {
  require_subgroup(g, n, "is_normal");
  for (const Perm& x : g.generators())
    for (const Perm& m : n.generators())
      if (!n.contains(conjugate(m, x))) return false;
  return true;
}

/// Smallest normal subgroup of g containing the seed elements.
inline PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed) {
  GroupAccumulator acc(g.degree());
  std::vector<Perm> todo;
  for (const Perm& s : seed)
    if (acc.add(s)) todo.push_back(s);
  while (!todo.empty()) {
    Perm h = std::move(todo.back());
    todo.pop_back();
    for (const Perm& x : g.generators()) {
      Perm c = conjugate(h, x);
      if (acc.add(c)) todo.push_back(std::move(c));
    }
  }
  return acc.to_group();
}

/// Elements of `elems` lying in `filter_group`, in input order.
inline std::vector<Perm> intersect_elements(const std::vector<Perm>& elems,
                                            const PermGroup& filter_group) {
  std::vector<Perm> out;
  for (const Perm& e : elems)
    if (filter_group.contains(e)) out.push_back(e);
  return out;
}

}  // namespace sylprob
