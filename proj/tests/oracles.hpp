#pragma once

// Brute-force reference computations used as independent oracles. These
// deliberately avoid the library's chain-based fast paths: everything here
// works by plain closure and scanning over explicit element lists.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sylprob/perm.hpp"
#include "sylprob/rational.hpp"

namespace oracle {

using sylprob::Perm;

// Closure of a generating set under composition, by worklist.
inline std::vector<Perm> closure(unsigned degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  std::vector<Perm> work;
  Perm id(degree);
  seen.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    Perm x = std::move(work.back());
    work.pop_back();
    for (const Perm& g : gens) {
      Perm y = x * g;
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Perm> centralizer_elements(const std::vector<Perm>& elems, const Perm& x) {
  std::vector<Perm> out;
  for (const Perm& y : elems)
    if (y * x == x * y) out.push_back(y);
  return out;
}

// Exact commuting-pair fraction by the definition, one plain double loop.
inline sylprob::Rational pr(const std::vector<Perm>& xs, const std::vector<Perm>& ys) {
  sylprob::BigInt count = 0;
  for (const Perm& x : xs)
    for (const Perm& y : ys)
      if (x * y == y * x) ++count;
  return sylprob::Rational(count, sylprob::BigInt(xs.size()) * ys.size());
}

inline bool has_element_of_order(const std::vector<Perm>& elems, std::uint64_t m) {
  for (const Perm& x : elems)
    if (x.order() == m) return true;
  return false;
}

inline std::vector<Perm> conjugacy_class(const std::vector<Perm>& elems, const Perm& x) {
  std::set<Perm> cls;
  for (const Perm& g : elems) cls.insert(sylprob::conjugate(x, g));
  return {cls.begin(), cls.end()};
}

}  // namespace oracle
