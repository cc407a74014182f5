#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sylprob/error.hpp"

namespace sylprob {

// Composition convention, fixed once for the whole library:
// permutations compose left to right, (a * b)(i) = b(a(i)), i.e. a acts
// first. Cycle notation I/O follows the same convention and is 1-based;
// internally points run from 0 to degree-1.

class Perm {
public:
  /// Identity on `degree` points.
  explicit Perm(unsigned degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0u);
  }

  /// From an image table (0-based); validates that it is a bijection.
  explicit Perm(std::vector<unsigned> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (unsigned v : img_) {
      if (v >= img_.size() || seen[v])
        throw Error("image table is not a bijection");
      seen[v] = true;
    }
  }

  struct unchecked_t {};
  Perm(std::vector<unsigned> images, unchecked_t) : img_(std::move(images)) {}

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned operator[](unsigned p) const { return img_[p]; }

  bool is_identity() const {
    for (unsigned i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  std::optional<unsigned> smallest_moved_point() const {
    for (unsigned i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return i;
    return std::nullopt;
  }

  Perm inverse() const {
    std::vector<unsigned> inv(img_.size());
    for (unsigned i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
    return Perm(std::move(inv), unchecked_t{});
  }

  /// a acts first: (a * b)(i) = b(a(i)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
      throw DegreeMismatchError("composing permutations of different degree");
    std::vector<unsigned> r(a.img_.size());
    for (unsigned i = 0; i < a.img_.size(); ++i) r[i] = b.img_[a.img_[i]];
    return Perm(std::move(r), unchecked_t{});
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  const std::vector<unsigned>& images() const { return img_; }

  /// Order as the lcm of cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (unsigned i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (unsigned j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      std::uint64_t g = std::gcd(ord, len);
      if (ord / g > std::numeric_limits<std::uint64_t>::max() / len)
        throw Error("element order overflow");
      ord = ord / g * len;
    }
    return ord;
  }

  /// 1-based disjoint-cycle string; "()" for the identity.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (unsigned i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      out += '(';
      bool first = true;
      for (unsigned j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

private:
  std::vector<unsigned> img_;
};

inline Perm perm_pow(const Perm& p, std::uint64_t e) {
  Perm acc(p.degree());
  Perm base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

inline Perm conjugate(const Perm& p, const Perm& by) {
  return by.inverse() * p * by;
}

/// Parses 1-based disjoint-cycle notation over {1..degree}, e.g.
/// "(1 2 3)(4 5)". Commas inside a cycle are accepted as separators.
/// The empty string and "()" both denote the identity.
inline Perm parse_cycles(unsigned degree, const std::string& s) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '(' in cycle string: " + s);
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i >= s.size()) throw ParseError("unbalanced parentheses in cycle string: " + s);
      if (s[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected point in cycle string: " + s);
      unsigned long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        v = v * 10 + static_cast<unsigned long>(s[i++] - '0');
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      unsigned pt = static_cast<unsigned>(v - 1);
      if (used[pt])
        throw ParseError("repeated point " + std::to_string(v) + " in cycle string");
      used[pt] = true;
      cycle.push_back(pt);
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) img[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) img[cycle.back()] = cycle.front();
    skip_ws();
  }
  return Perm(std::move(img), Perm::unchecked_t{});
}

}  // namespace sylprob
