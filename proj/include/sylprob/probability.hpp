#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sylprob/builders.hpp"
#include "sylprob/rational.hpp"
#include "sylprob/structure.hpp"

namespace sylprob {

inline bool commutes(const Perm& a, const Perm& b) {
  unsigned d = a.degree();
  for (unsigned i = 0; i < d; ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

/// Exact probability that elements of xs and ys commute. Computed twice,
/// as a direct pair count and as the centralizer sum
/// (1/|Y|) sum_y |C_X(y)|/|X|; the two assemblies must agree exactly and
/// disagreement is a hard internal error.
inline Rational pr(const std::vector<Perm>& xs, const std::vector<Perm>& ys) {
  if (xs.empty() || ys.empty()) throw PreconditionError("pr of an empty set");
  if (xs[0].degree() != ys[0].degree())
    throw DegreeMismatchError("pr across different degrees");

  BigInt pair_count = 0;
  for (const Perm& x : xs)
    for (const Perm& y : ys)
      if (commutes(x, y)) ++pair_count;
  Rational direct(pair_count, BigInt(xs.size()) * BigInt(ys.size()));

  Rational sum = 0;
  for (const Perm& y : ys) {
    BigInt cx = 0;
    for (const Perm& x : xs)
      if (commutes(x, y)) ++cx;
    sum += Rational(cx, BigInt(xs.size()));
  }
  Rational via_centralizers = sum / Rational(BigInt(ys.size()));

  if (direct != via_centralizers) throw Error("pr double-count self-check failed");
  return direct;
}

inline Rational pr(const PermGroup& x, const PermGroup& y,
                   std::size_t budget = kDefaultEnumerationBudget) {
  return pr(x.elements(budget), y.elements(budget));
}

/// (p^a + q^b - 1) / (p^a q^b): the commuting probability of Sylow p- and
/// q-subgroups of those orders whenever the ambient group has no element
/// of order pq. Either argument may be 1.
inline Rational pr_no_pq_formula(const BigInt& p_order, const BigInt& q_order) {
  auto prime_base = [](const BigInt& n) -> std::uint64_t {
    if (n <= 1) return 0;
    BigInt v = n;
    for (std::uint64_t d = 2; BigInt(d) * d <= n; ++d) {
      if (v % d != 0) continue;
      while (v % d == 0) v /= d;
      if (v != 1) throw PreconditionError("pr_no_pq_formula: argument is not a prime power");
      return d;
    }
    return static_cast<std::uint64_t>(n);  // n itself prime
  };
  std::uint64_t bp = prime_base(p_order), bq = prime_base(q_order);
  if (bp != 0 && bp == bq)
    throw PreconditionError("pr_no_pq_formula: arguments share a prime");
  return Rational(p_order + q_order - 1, p_order * q_order);
}

// ---------------------------------------------------------------------------
// omega sets and pr*

/// The set of values pr(P, Q) over Sylow p/q-subgroup pairs, computed with
/// P fixed and Q running over all conjugates of one Sylow q-subgroup;
/// conjugation invariance of pr makes this sweep exhaustive. Witnesses
/// record one attaining pair per value.
struct OmegaReport {
  std::uint64_t p = 0, q = 0;
  std::vector<Rational> values;  // ascending, deduplicated
  std::vector<std::pair<PermGroup, PermGroup>> witnesses;  // parallel to values
  std::size_t conjugates_swept = 0;

  const Rational& min() const { return values.front(); }
  const Rational& max() const { return values.back(); }
};

inline OmegaReport omega_set(const PermGroup& g, std::uint64_t p, std::uint64_t q,
                             std::size_t budget = kDefaultEnumerationBudget) {
  if (p == q) throw PreconditionError("omega_set needs distinct primes");
  OmegaReport out;
  out.p = p;
  out.q = q;
  PermGroup syl_p = sylow_subgroup(g, p, budget);
  PermGroup syl_q = sylow_subgroup(g, q, budget);
  if (syl_p.is_trivial() || syl_q.is_trivial()) {
    out.values.push_back(1);
    out.witnesses.emplace_back(syl_p, syl_q);
    out.conjugates_swept = 1;
    return out;
  }
  std::vector<Perm> p_elems = syl_p.elements(budget);
  std::map<Rational, std::vector<Perm>> found;  // value -> attaining conjugate
  out.conjugates_swept = sweep_conjugates(
      g, syl_q,
      [&](const std::vector<Perm>& q_elems) {
        Rational v = pr(p_elems, q_elems);
        found.emplace(v, q_elems);  // keeps the first witness per value
      },
      budget);
  for (auto& [v, q_elems] : found) {
    out.values.push_back(v);
    GroupAccumulator acc(g.degree());
    for (const Perm& e : q_elems) acc.add(e);
    out.witnesses.emplace_back(syl_p, acc.to_group());
  }
  return out;
}

/// pr*_g(pi1, pi2): for every unordered pair of distinct primes {p, q}
/// dividing |g| with p in pi1 and q in pi2 (in either order), the best
/// Sylow pair value max pr(P, Q); the report value is the minimum of
/// these maxima, and 1 when no pair qualifies.
struct PrStarReport {
  PrimeSet pi1, pi2;
  Rational value = 1;
  struct PairMax {
    std::uint64_t p = 0, q = 0;
    Rational max;
    PermGroup witness_p, witness_q;
    std::size_t conjugates_swept = 0;
  };
  std::vector<PairMax> per_pair;  // ordered by (p, q)
};

inline PrStarReport pr_star(const PermGroup& g, const PrimeSet& pi1 = PrimeSet::all(),
                            const PrimeSet& pi2 = PrimeSet::all(),
                            std::size_t budget = kDefaultEnumerationBudget) {
  PrStarReport out;
  out.pi1 = pi1;
  out.pi2 = pi2;
  std::vector<std::uint64_t> primes = g.prime_divisors();
  std::optional<Rational> best;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      std::uint64_t a = primes[i], b = primes[j];
      bool qualifies = (pi1.contains(a) && pi2.contains(b)) ||
                       (pi1.contains(b) && pi2.contains(a));
      if (!qualifies) continue;
      OmegaReport om = omega_set(g, a, b, budget);
      PrStarReport::PairMax pm{a, b, om.max(), om.witnesses.back().first,
                               om.witnesses.back().second, om.conjugates_swept};
      out.per_pair.push_back(std::move(pm));
      if (!best || om.max() < *best) best = om.max();
    }
  if (best) out.value = *best;
  return out;
}

/// Convenience for scripts and tests.
inline Rational pr_star_value(const PermGroup& g, const PrimeSet& pi1 = PrimeSet::all(),
                              const PrimeSet& pi2 = PrimeSet::all(),
                              std::size_t budget = kDefaultEnumerationBudget) {
  return pr_star(g, pi1, pi2, budget).value;
}

/// Omega value set of a direct product from the factor value sets:
/// all products of one value per factor.
inline std::vector<Rational> omega_product_combine(
    const std::vector<std::vector<Rational>>& factor_values) {
  std::vector<Rational> acc{Rational(1)};
  for (const auto& vals : factor_values) {
    std::vector<Rational> next;
    for (const Rational& a : acc)
      for (const Rational& v : vals) next.push_back(a * v);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// class-size bounds

/// (n + m - 1)/(nm) with n = |H : C_H(K)| and m the smallest index
/// |K : C_K(x)| over x in H outside C_H(K); 1 when K centralizes H.
inline Rational lemma24_bound(const PermGroup& h, const PermGroup& k,
                              std::size_t budget = kDefaultEnumerationBudget) {
  if (h.degree() != k.degree()) throw DegreeMismatchError("lemma24_bound degree mismatch");
  std::vector<Perm> h_elems = h.elements(budget);
  std::vector<Perm> k_elems = k.elements(budget);
  auto centralizes_k = [&](const Perm& x) {
    for (const Perm& s : k.generators())
      if (!commutes(x, s)) return false;
    return true;
  };
  BigInt ch = 0;
  std::optional<BigInt> m;
  for (const Perm& x : h_elems) {
    if (centralizes_k(x)) {
      ++ch;
      continue;
    }
    BigInt cx = 0;
    for (const Perm& y : k_elems)
      if (commutes(x, y)) ++cx;
    BigInt index = BigInt(k_elems.size()) / cx;
    if (!m || index < *m) m = index;
  }
  BigInt n = BigInt(h_elems.size()) / ch;
  if (n == 1) return 1;
  return Rational(n + *m - 1, n * *m);
}

/// ((x+1)+y-1)/((x+1)y) <= (x+y-1)/(xy) for integers x, y >= 1.
inline bool xy_inequality_check(std::uint64_t x, std::uint64_t y) {
  if (x < 1 || y < 1) throw PreconditionError("xy_inequality_check needs x, y >= 1");
  Rational lhs(BigInt(x) + y, (BigInt(x) + 1) * y);
  Rational rhs(BigInt(x) + y - 1, BigInt(x) * y);
  return lhs <= rhs;
}

// ---------------------------------------------------------------------------
// the H0 construction

/// From pr(h, k) >= eps: X = {x in h : |x^k| <= 2/eps} generates a
/// subgroup h0 with |h : h0| <= 2/eps - 1, and every element of h0 has
/// k-class size at most (2/eps)^ceil(6/eps). All three bounds are checked
/// on return. The rounded-up exponent only weakens the bound, which keeps
/// the check sound for non-integer 6/eps.
struct H0Result {
  std::vector<Perm> x_set;
  PermGroup h0;
  Rational index;            // |h : h0|
  Rational index_bound;      // 2/eps - 1
  Rational class_bound;      // 2/eps
  Rational closure_bound;    // (2/eps)^ceil(6/eps)
};

inline H0Result build_h0(const PermGroup& h, const PermGroup& k, const Rational& eps,
                         std::size_t budget = kDefaultEnumerationBudget) {
  if (!(eps > Rational(0))) throw PreconditionError("build_h0 needs eps > 0");
  std::vector<Perm> h_elems = h.elements(budget);
  std::vector<Perm> k_elems = k.elements(budget);
  if (pr(h_elems, k_elems) < eps)
    throw PreconditionError("build_h0 precondition pr(h,k) >= eps violated");

  Rational two_over_eps = Rational(2) / eps;
  auto k_class_size = [&](const Perm& x) {
    BigInt cx = 0;
    for (const Perm& y : k_elems)
      if (commutes(x, y)) ++cx;
    return Rational(BigInt(k_elems.size()), cx);
  };

  BigInt e = (Rational(6) / eps).ceil();
  if (e > 4096) throw BudgetError("build_h0 exponent too large to evaluate");
  Rational closure_bound = two_over_eps.pow(static_cast<unsigned>(e));

  std::vector<Perm> x_set;
  for (const Perm& x : h_elems)
    if (k_class_size(x) <= two_over_eps) x_set.push_back(x);
  PermGroup h0 = generated_subgroup(h.degree(), x_set);
  H0Result out{std::move(x_set),       h0, Rational(h.order(), h0.order()),
               two_over_eps - Rational(1), two_over_eps, closure_bound};

  if (!(out.index <= out.index_bound)) throw Error("h0 index bound failed");
  for (const Perm& x : out.x_set)
    if (!(k_class_size(x) <= out.class_bound)) throw Error("h0 class bound failed");
  for (const Perm& x : out.h0.elements(budget))
    if (!(k_class_size(x) <= out.closure_bound)) throw Error("h0 closure bound failed");
  return out;
}

// ---------------------------------------------------------------------------
// inequality checks over quotients and products

/// pr(H,K) <= pr(HN/N, KN/N) * pr(N cap H, N cap K) for N normal in g.
inline bool check_quotient_inequality(const PermGroup& g, const PermGroup& n,
                                      const PermGroup& h, const PermGroup& k,
                                      std::size_t degree_budget = kDefaultQuotientDegreeBudget,
                                      std::size_t budget = kDefaultEnumerationBudget) {
  Quotient q(g, n, degree_budget, budget);
  Rational lhs = pr(h, k, budget);
  Rational quot = pr(q.map_subgroup(h), q.map_subgroup(k), budget);
  std::vector<Perm> ih = intersect_elements(h.elements(budget), n);
  std::vector<Perm> ik = intersect_elements(k.elements(budget), n);
  Rational inter = pr(ih, ik);
  return lhs <= quot * inter;
}

/// pr(H1 x H2, K1 x K2) = pr(H1,K1) pr(H2,K2), verified on the built
/// product.
inline bool check_product_rule(const PermGroup& g1, const PermGroup& g2, const PermGroup& h1,
                               const PermGroup& h2, const PermGroup& k1, const PermGroup& k2,
                               std::size_t budget = kDefaultEnumerationBudget) {
  require_subgroup(g1, h1, "check_product_rule");
  require_subgroup(g2, h2, "check_product_rule");
  require_subgroup(g1, k1, "check_product_rule");
  require_subgroup(g2, k2, "check_product_rule");
  DirectProduct prod = direct_product({g1, g2});
  std::vector<Perm> hg, kg;
  for (const Perm& x : h1.generators()) hg.push_back(prod.embed(0, x));
  for (const Perm& x : h2.generators()) hg.push_back(prod.embed(1, x));
  for (const Perm& x : k1.generators()) kg.push_back(prod.embed(0, x));
  for (const Perm& x : k2.generators()) kg.push_back(prod.embed(1, x));
  PermGroup bigh(prod.group.degree(), hg);
  PermGroup bigk(prod.group.degree(), kg);
  return pr(bigh, bigk, budget) == pr(h1, k1, budget) * pr(h2, k2, budget);
}

}  // namespace sylprob
