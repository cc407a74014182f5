#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sylprob/perm_group.hpp"

namespace sylprob {

inline constexpr std::size_t kDefaultQuotientDegreeBudget = 10'000;

// ---------------------------------------------------------------------------
// prime sets

/// A set of primes with a total membership test: all primes, the odd
/// primes, a single prime, the complement p' of one prime, or an explicit
/// list. Text forms: "*", "odd", "5", "5'", "{2,3}".
struct PrimeSet {
  enum class Kind { All, Odd, Single, Complement, Explicit };

  Kind kind = Kind::All;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> list;

  static PrimeSet all() { return {}; }
  static PrimeSet odd() { return {Kind::Odd, 0, {}}; }
  static PrimeSet single(std::uint64_t p) { return {Kind::Single, p, {}}; }
  static PrimeSet complement(std::uint64_t p) { return {Kind::Complement, p, {}}; }
  static PrimeSet explicit_list(std::vector<std::uint64_t> ps) {
    return {Kind::Explicit, 0, std::move(ps)};
  }

  bool contains(std::uint64_t q) const {
    switch (kind) {
      case Kind::All:
        return true;
      case Kind::Odd:
        return q != 2;
      case Kind::Single:
        return q == p;
      case Kind::Complement:
        return q != p;
      case Kind::Explicit:
        return std::find(list.begin(), list.end(), q) != list.end();
    }
    return false;
  }

  std::string str() const {
    switch (kind) {
      case Kind::All:
        return "*";
      case Kind::Odd:
        return "odd";
      case Kind::Single:
        return std::to_string(p);
      case Kind::Complement:
        return std::to_string(p) + "'";
      case Kind::Explicit: {
        std::string out = "{";
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(list[i]);
        }
        return out + "}";
      }
    }
    return "?";
  }

  static PrimeSet parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "*") return all();
    if (s == "odd") return odd();
    if (!s.empty() && s.front() == '{' && s.back() == '}') {
      std::vector<std::uint64_t> ps;
      std::string cur;
      for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == ',') {
          ps.push_back(parse_prime(cur));
          cur.clear();
        } else {
          cur += s[i];
        }
      }
      if (!cur.empty()) ps.push_back(parse_prime(cur));
      return explicit_list(std::move(ps));
    }
    if (!s.empty() && s.back() == '\'') return complement(parse_prime(s.substr(0, s.size() - 1)));
    return single(parse_prime(s));
  }

private:
  static std::uint64_t parse_prime(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad prime in prime-set spec: '" + s + "'");
    std::uint64_t v = std::stoull(s);
    if (!is_prime(v)) throw ParseError(std::to_string(v) + " is not prime");
    return v;
  }
};

// ---------------------------------------------------------------------------
// element helpers

/// x^(p-part of its order): the p'-part of x. Identity when x is a p-element.
inline Perm p_prime_part(const Perm& x, std::uint64_t p) {
  std::uint64_t m = x.order(), pp = 1;
  while (m % p == 0) {
    m /= p;
    pp *= p;
  }
  return perm_pow(x, pp);
}

/// x^(p'-part of its order): a p-element, the identity iff p does not
/// divide the order of x.
inline Perm p_part_of_element(const Perm& x, std::uint64_t p) {
  std::uint64_t m = x.order();
  while (m % p == 0) m /= p;
  return perm_pow(x, m);
}

inline bool has_element_of_order(const PermGroup& g, std::uint64_t m,
                                 std::size_t budget = kDefaultEnumerationBudget) {
  return !g.for_each_element_while([&](const Perm& x) { return x.order() != m; }, budget);
}

// ---------------------------------------------------------------------------
// conjugates of a subgroup

namespace detail {

inline void append_packed(std::string& out, const Perm& p) {
  unsigned d = p.degree();
  if (d <= 0x100) {
    for (unsigned i = 0; i < d; ++i) out += static_cast<char>(p[i]);
  } else {
    for (unsigned i = 0; i < d; ++i) {
      unsigned v = p[i];
      out += static_cast<char>(v & 0xff);
      out += static_cast<char>((v >> 8) & 0xff);
      out += static_cast<char>((v >> 16) & 0xff);
      out += static_cast<char>((v >> 24) & 0xff);
    }
  }
}

inline std::string pack_elements(const std::vector<Perm>& sorted_elems) {
  std::string key;
  for (const Perm& p : sorted_elems) append_packed(key, p);
  return key;
}

}  // namespace detail

/// Visits every distinct conjugate of h under g exactly once, as a sorted
/// element list whose first visit is h itself. Returns the number of
/// conjugates, i.e. |g : N_g(h)|. Orbit search over the generators of g;
/// element lists are the deduplication keys, so the sweep is exact.
inline std::size_t sweep_conjugates(const PermGroup& g, const PermGroup& h,
                                    const std::function<void(const std::vector<Perm>&)>& visit,
                                    std::size_t budget = kDefaultEnumerationBudget) {
  std::vector<Perm> base = h.elements(budget);
  std::sort(base.begin(), base.end());
  std::unordered_set<std::string> seen;
  std::vector<std::vector<Perm>> queue;
  seen.insert(detail::pack_elements(base));
  queue.push_back(std::move(base));
  std::size_t count = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    // take a copy: appending to the queue may reallocate it
    std::vector<Perm> current = queue[qi];
    visit(current);
    ++count;
    for (const Perm& x : g.generators()) {
      std::vector<Perm> conj;
      conj.reserve(current.size());
      for (const Perm& e : current) conj.push_back(conjugate(e, x));
      std::sort(conj.begin(), conj.end());
      if (seen.insert(detail::pack_elements(conj)).second) queue.push_back(std::move(conj));
    }
    if (seen.size() > budget)
      throw BudgetError("conjugate sweep exceeded budget " + std::to_string(budget));
  }
  return count;
}

// ---------------------------------------------------------------------------
// Sylow subgroups

/// A p-subgroup whose order is the full p-part of |g|; the trivial group
/// when p does not divide |g|. Grows a p-subgroup by ascent: any p-element
/// normalizing the current subgroup but outside it extends it, and such an
/// element exists among the p-parts of the group elements until the full
/// p-part is reached. Deterministic, enumeration-backed.
inline PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p,
                                std::size_t budget = kDefaultEnumerationBudget) {
  if (!is_prime(p)) throw PreconditionError("sylow_subgroup: p must be prime");
  auto fact = g.order_factorization();
  auto it = fact.find(p);
  if (it == fact.end()) return PermGroup::trivial(g.degree());
  BigInt target = 1;
  for (unsigned k = 0; k < it->second; ++k) target *= p;

  GroupAccumulator acc(g.degree());
  auto normalizes_current = [&](const Perm& y) {
    for (const Perm& s : acc.generators())
      if (!acc.contains(conjugate(s, y))) return false;
    return true;
  };
  while (acc.order() != target) {
    bool grew = false;
    g.for_each_element_while(
        [&](const Perm& x) {
          if (x.order() % p != 0) return true;
          Perm y = p_part_of_element(x, p);
          if (acc.contains(y) || !normalizes_current(y)) return true;
          acc.add(y);
          grew = true;
          return acc.order() != target;
        },
        budget);
    if (acc.order() == target) break;
    if (!grew) throw Error("sylow ascent stalled");  // unreachable for a correct chain
  }
  return acc.to_group();
}

// ---------------------------------------------------------------------------
// cores and the Fitting machinery

/// Largest normal p-subgroup: the normal core of a Sylow p-subgroup,
/// computed by intersecting with generator conjugates until stable.
inline PermGroup p_core(const PermGroup& g, std::uint64_t p,
                        std::size_t budget = kDefaultEnumerationBudget) {
  PermGroup k = sylow_subgroup(g, p, budget);
  if (k.is_trivial()) return k;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Perm& x : g.generators()) {
      PermGroup kx = conjugate_subgroup(k, x);
      if (equal_groups(kx, k)) continue;
      GroupAccumulator meet(g.degree());
      for (const Perm& e : k.elements(budget))
        if (kx.contains(e)) meet.add(e);
      k = meet.to_group();
      changed = true;
      if (k.is_trivial()) return k;
    }
  }
  return k;
}

/// Subgroup generated by all p-cores; nilpotent and normal.
inline PermGroup fitting_subgroup(const PermGroup& g,
                                  std::size_t budget = kDefaultEnumerationBudget) {
  std::vector<Perm> gens;
  for (std::uint64_t p : g.prime_divisors()) {
    PermGroup op = p_core(g, p, budget);
    for (const Perm& x : op.generators())
      if (!x.is_identity()) gens.push_back(x);
  }
  return PermGroup(g.degree(), std::move(gens));
}

// ---------------------------------------------------------------------------
// quotient groups

/// Permutation action of g on the right cosets of a normal subgroup n.
/// Elements map to coset permutations; fibers are exactly the cosets, so
/// images and preimages of subgroups are available. Quotient by the
/// trivial subgroup short-circuits to the identity map on g.
class Quotient {
public:
  Quotient(const PermGroup& g, const PermGroup& n,
           std::size_t degree_budget = kDefaultQuotientDegreeBudget,
           std::size_t budget = kDefaultEnumerationBudget)
      : domain_(g), kernel_(n) {
    if (!is_normal(g, n)) throw PreconditionError("quotient by a non-normal subgroup");
    if (n.is_trivial()) {
      identity_map_ = true;
      quotient_.emplace(g);
      return;
    }
    BigInt index = g.order() / n.order();
    if (index > degree_budget)
      throw BudgetError("quotient of index " + index.str() + " exceeds degree budget " +
                        std::to_string(degree_budget));
    (void)budget;
    unsigned m = static_cast<unsigned>(index);
    reps_.push_back(canonical_rep(Perm(g.degree())));
    index_.emplace(detail::pack_elements({reps_[0]}), 0);
    std::vector<std::vector<unsigned>> action(g.generators().size(),
                                              std::vector<unsigned>(m, 0));
    for (std::size_t qi = 0; qi < reps_.size(); ++qi) {
      for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
        Perm c = canonical_rep(reps_[qi] * g.generators()[gi]);
        std::string key = detail::pack_elements({c});
        auto [pos, fresh] = index_.emplace(key, reps_.size());
        if (fresh) {
          if (reps_.size() >= m) throw Error("coset enumeration overran the index");
          reps_.push_back(std::move(c));
        }
        action[gi][qi] = static_cast<unsigned>(pos->second);
      }
    }
    if (reps_.size() != m) throw Error("coset enumeration undercounted the index");
    std::vector<Perm> qgens;
    for (auto& col : action) qgens.push_back(Perm(std::move(col)));
    quotient_.emplace(static_cast<unsigned>(m), std::move(qgens));
  }

  const PermGroup& group() const { return *quotient_; }
  const PermGroup& kernel() const { return kernel_; }
  bool is_identity_map() const { return identity_map_; }

  /// Image of an element of g in the quotient.
  Perm map(const Perm& x) const {
    if (identity_map_) return x;
    std::vector<unsigned> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      Perm c = canonical_rep(reps_[i] * x);
      img[i] = static_cast<unsigned>(index_.at(detail::pack_elements({c})));
    }
    return Perm(std::move(img), Perm::unchecked_t{});
  }

  /// Image HN/N of a subgroup of g.
  PermGroup map_subgroup(const PermGroup& h) const {
    if (identity_map_) return h;
    std::vector<Perm> gens;
    for (const Perm& x : h.generators()) gens.push_back(map(x));
    return PermGroup(group().degree(), std::move(gens));
  }

  /// Full preimage of a subgroup of the quotient: the kernel generators
  /// together with one coset representative per subgroup generator.
  PermGroup preimage(const PermGroup& s) const {
    if (identity_map_) return s;
    std::vector<Perm> gens = kernel_.generators();
    for (const Perm& q : s.generators()) gens.push_back(reps_[q[0]]);
    return PermGroup(domain_.degree(), std::move(gens));
  }

private:
  // Canonical representative of the coset (kernel * x): at each level of
  // the kernel's chain, exactly one orbit point minimizes the image of the
  // level base, because x is injective on points.
  Perm canonical_rep(Perm x) const {
    const StabilizerChain& ch = kernel_.chain();
    for (std::size_t li = 0; li < ch.depth(); ++li) {
      const auto& orbit = ch.level_orbit(li);
      unsigned best = orbit[0];
      for (unsigned pt : orbit)
        if (x[pt] < x[best]) best = pt;
      if (best != ch.level_base(li)) x = ch.transversal_element(li, best) * x;
    }
    return x;
  }

  PermGroup domain_;
  PermGroup kernel_;
  std::optional<PermGroup> quotient_;
  std::vector<Perm> reps_;
  std::unordered_map<std::string, std::size_t> index_;
  bool identity_map_ = false;
};

inline Quotient quotient_group(const PermGroup& g, const PermGroup& n,
                               std::size_t degree_budget = kDefaultQuotientDegreeBudget) {
  return Quotient(g, n, degree_budget);
}

// ---------------------------------------------------------------------------
// Fitting series and the soluble radical

struct FittingSeries {
  std::vector<PermGroup> terms;  // F_1 <= F_2 <= ..., constant from the end
  std::size_t stabilized_at = 0;  // 1-based index of the last (stable) term

  const PermGroup& last() const { return terms.back(); }
};

inline FittingSeries upper_fitting_series(const PermGroup& g,
                                          std::size_t degree_budget = kDefaultQuotientDegreeBudget,
                                          std::size_t budget = kDefaultEnumerationBudget) {
  FittingSeries out;
  PermGroup f = fitting_subgroup(g, budget);
  out.terms.push_back(f);
  while (f.order() != g.order()) {
    Quotient q(g, f, degree_budget, budget);
    PermGroup fq = fitting_subgroup(q.group(), budget);
    if (fq.is_trivial()) break;
    f = q.preimage(fq);
    out.terms.push_back(f);
  }
  out.stabilized_at = out.terms.size();
  return out;
}

/// Largest normal soluble subgroup: the last term of the upper Fitting
/// series.
inline PermGroup soluble_radical(const PermGroup& g,
                                 std::size_t degree_budget = kDefaultQuotientDegreeBudget,
                                 std::size_t budget = kDefaultEnumerationBudget) {
  return upper_fitting_series(g, degree_budget, budget).last();
}

// ---------------------------------------------------------------------------
// derived series and solubility predicates

inline PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

inline bool is_soluble(const PermGroup& g) {
  PermGroup d = g;
  while (!d.is_trivial()) {
    PermGroup next = derived_subgroup(d);
    if (next.order() == d.order()) return false;
    d = std::move(next);
  }
  return true;
}

inline bool is_nilpotent(const PermGroup& g,
                         std::size_t budget = kDefaultEnumerationBudget) {
  for (std::uint64_t p : g.prime_divisors())
    if (!is_normal(g, sylow_subgroup(g, p, budget))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// p'-core and p-solubility

/// Subgroup generated by the p'-parts of all elements. Normal, and it
/// contains every normal p'-subgroup.
inline PermGroup p_prime_element_closure(const PermGroup& g, std::uint64_t p,
                                         std::size_t budget = kDefaultEnumerationBudget) {
  GroupAccumulator acc(g.degree());
  g.for_each_element(
      [&](const Perm& x) {
        Perm y = p_prime_part(x, p);
        if (!y.is_identity()) acc.add(y);
      },
      budget);
  return acc.to_group();
}

/// Conjugacy class representatives, in enumeration order.
inline std::vector<Perm> conjugacy_class_reps(const PermGroup& g,
                                              std::size_t budget = kDefaultEnumerationBudget) {
  std::unordered_set<std::string> seen;
  std::vector<Perm> reps;
  g.for_each_element(
      [&](const Perm& x) {
        std::string key = detail::pack_elements({x});
        if (seen.count(key)) return;
        reps.push_back(x);
        // mark the whole class
        std::vector<Perm> orbit{x};
        seen.insert(key);
        for (std::size_t i = 0; i < orbit.size(); ++i)
          for (const Perm& s : g.generators()) {
            Perm c = conjugate(orbit[i], s);
            if (seen.insert(detail::pack_elements({c})).second) orbit.push_back(std::move(c));
          }
      },
      budget);
  return reps;
}

/// O_{p'}(g), the largest normal p'-subgroup.
inline PermGroup p_prime_core(const PermGroup& g, std::uint64_t p,
                              std::size_t budget = kDefaultEnumerationBudget) {
  if (g.order() % p != 0) return g;
  PermGroup e = p_prime_element_closure(g, p, budget);
  if (e.order() % p != 0) return e;
  if (e.order() < g.order()) return p_prime_core(e, p, budget);
  // g is generated by its p'-elements; accumulate classes whose joint
  // normal closure stays a p'-group
  GroupAccumulator core(g.degree());
  for (const Perm& rep : conjugacy_class_reps(g, budget)) {
    if (rep.order() % p == 0 || core.contains(rep)) continue;
    std::vector<Perm> seed = core.generators();
    seed.push_back(rep);
    PermGroup m = normal_closure(g, seed);
    if (m.order() % p != 0)
      for (const Perm& x : m.generators()) core.add(x);
  }
  return core.to_group();
}

/// Every chief factor is a p-group or a p'-group. Soluble sections are
/// quotiented away first; on a trivial-radical section the p'-core decides.
inline bool is_p_soluble(const PermGroup& g_in, std::uint64_t p,
                         std::size_t degree_budget = kDefaultQuotientDegreeBudget,
                         std::size_t budget = kDefaultEnumerationBudget) {
  PermGroup g = g_in;
  BigInt guard = g.order();
  for (BigInt step = 0; step <= guard; ++step) {
    if (g.order() % p != 0) return true;
    PermGroup r = soluble_radical(g, degree_budget, budget);
    if (r.order() == g.order()) return true;
    if (!r.is_trivial()) {
      g = Quotient(g, r, degree_budget, budget).group();
      continue;
    }
    PermGroup n = p_prime_core(g, p, budget);
    if (n.is_trivial()) return false;
    g = Quotient(g, n, degree_budget, budget).group();
  }
  throw Error("p-solubility iteration failed to terminate");
}

/// Whether g = O_p(g) x O_{p'}(g): the Sylow p-subgroup is normal and the
/// p'-elements generate a p'-group (which is then a normal complement).
inline bool splits_as_p_times_p_prime(const PermGroup& g, std::uint64_t p,
                                      std::size_t budget = kDefaultEnumerationBudget) {
  if (g.order() % p != 0) return true;
  PermGroup syl = sylow_subgroup(g, p, budget);
  if (!is_normal(g, syl)) return false;
  PermGroup e = p_prime_element_closure(g, p, budget);
  return e.order() % p != 0;
}

// ---------------------------------------------------------------------------
// Hall complements

/// Hall p'-subgroup of a soluble group by randomized generation: grow a
/// p'-subgroup from p'-parts of random elements, accepting only extensions
/// that stay p'-groups, and require the exact p'-part order. Deterministic
/// seed; failure after the retry budget is reported, never silent.
inline PermGroup hall_p_complement(const PermGroup& g, std::uint64_t p,
                                   std::size_t budget = kDefaultEnumerationBudget,
                                   unsigned retries = 500) {
  if (!is_soluble(g)) throw PreconditionError("hall_p_complement needs a soluble group");
  BigInt target = g.order() / p_part(g.order(), p);
  if (target == 1) return PermGroup::trivial(g.degree());
  if (target == g.order()) return g;
  (void)budget;
  std::mt19937 rng(0x5910u + static_cast<unsigned>(p));
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    GroupAccumulator acc(g.degree());
    for (unsigned k = 0; k < 20 && acc.order() != target; ++k) {
      Perm y = p_prime_part(g.random_element(rng), p);
      if (y.is_identity() || acc.contains(y)) continue;
      std::vector<Perm> cand = acc.generators();
      cand.push_back(y);
      PermGroup t(g.degree(), cand);
      if (t.order() % p != 0) {
        acc = GroupAccumulator(g.degree());
        for (const Perm& c : t.generators()) acc.add(c);
      }
    }
    if (acc.order() == target) return acc.to_group();
  }
  throw Error("hall_p_complement: randomized search exhausted " + std::to_string(retries) +
              " retries for p=" + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Frattini subgroup of a p-group

/// Generated by generator commutators and p-th powers, closed under
/// conjugation; the quotient is elementary abelian.
inline PermGroup frattini_of_p_group(const PermGroup& pgrp, std::uint64_t p) {
  BigInt o = pgrp.order();
  while (o % p == 0) o /= p;
  if (o != 1) throw PreconditionError("frattini_of_p_group: input is not a p-group");
  std::vector<Perm> seeds;
  const auto& gens = pgrp.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
    Perm pw = perm_pow(gens[i], p);
    if (!pw.is_identity()) seeds.push_back(std::move(pw));
  }
  return normal_closure(pgrp, seeds);
}

}  // namespace sylprob
