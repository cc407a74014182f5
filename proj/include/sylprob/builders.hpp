#pragma once

#include <cctype>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sylprob/perm_group.hpp"

namespace sylprob {

// ---------------------------------------------------------------------------
// small finite fields

/// GF(q) with explicit add/mul tables. Prime q uses arithmetic mod q;
/// q in {4, 8, 9} uses a fixed irreducible polynomial (x^2+x+1, x^3+x+1,
/// x^2+1). Elements are encoded 0..q-1 as base-p coefficient vectors.
class GaloisField {
public:
  explicit GaloisField(unsigned q) : q_(q) {
    unsigned p = smallest_prime_factor(q);
    unsigned k = 0;
    for (unsigned m = q; m > 1; m /= p) {
      if (m % p != 0) throw ParseError("PSL2 parameter must be a prime power: " + std::to_string(q));
      ++k;
    }
    p_ = p;
    std::vector<unsigned> mod;  // irreducible polynomial, little-endian, monic
    if (k == 1) {
      mod = {0, 1};
    } else if (q == 4) {
      mod = {1, 1, 1};
    } else if (q == 8) {
      mod = {1, 1, 0, 1};
    } else if (q == 9) {
      mod = {1, 0, 1};
    } else {
      throw ParseError("unsupported field size " + std::to_string(q) +
                       " (primes and 4, 8, 9 are available)");
    }
    add_.assign(q, std::vector<unsigned>(q));
    mul_.assign(q, std::vector<unsigned>(q));
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        add_[a][b] = add_poly(a, b);
        mul_[a][b] = mul_poly(a, b, mod, k);
      }
  }

  unsigned size() const { return q_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a][b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a][b]; }

  unsigned inv(unsigned a) const {
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a][b] == 1) return b;
    throw Error("field inverse of zero");
  }

private:
  static unsigned smallest_prime_factor(unsigned n) {
    if (n < 2) throw ParseError("field size must be at least 2");
    for (unsigned d = 2; d * d <= n; ++d)
      if (n % d == 0) return d;
    return n;
  }

  std::vector<unsigned> digits(unsigned a) const {
    std::vector<unsigned> d;
    while (a > 0) {
      d.push_back(a % p_);
      a /= p_;
    }
    return d;
  }

  unsigned undigits(const std::vector<unsigned>& d) const {
    unsigned v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
  }

  unsigned add_poly(unsigned a, unsigned b) const {
    auto da = digits(a), db = digits(b);
    std::vector<unsigned> r(std::max(da.size(), db.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      unsigned s = (i < da.size() ? da[i] : 0) + (i < db.size() ? db[i] : 0);
      r[i] = s % p_;
    }
    return undigits(r);
  }

  unsigned mul_poly(unsigned a, unsigned b, const std::vector<unsigned>& mod, unsigned k) const {
    auto da = digits(a), db = digits(b);
    std::vector<unsigned> prod(2 * k, 0);
    for (std::size_t i = 0; i < da.size(); ++i)
      for (std::size_t j = 0; j < db.size(); ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce modulo the monic polynomial of degree k
    for (std::size_t i = prod.size(); i-- > k;) {
      unsigned c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < k; ++j)
        prod[i - k + j] = (prod[i - k + j] + c * (p_ - mod[j])) % p_;
    }
    prod.resize(k);
    return undigits(prod);
  }

  unsigned q_, p_ = 0;
  std::vector<std::vector<unsigned>> add_, mul_;
};

// ---------------------------------------------------------------------------
// direct products on the disjoint union of the factor domains

inline Perm embed_perm(const Perm& p, unsigned offset, unsigned total_degree) {
  std::vector<unsigned> img(total_degree);
  std::iota(img.begin(), img.end(), 0u);
  for (unsigned i = 0; i < p.degree(); ++i) img[offset + i] = offset + p[i];
  return Perm(std::move(img), Perm::unchecked_t{});
}

/// A direct product together with the point offsets of its factors, so
/// subgroups of the factors (Sylow subgroups in particular) lift into the
/// product.
struct DirectProduct {
  PermGroup group;
  std::vector<unsigned> offsets;
  std::vector<unsigned> factor_degrees;

  Perm embed(std::size_t factor, const Perm& p) const {
    return embed_perm(p, offsets[factor], group.degree());
  }

  PermGroup embed_subgroup(std::size_t factor, const PermGroup& h) const {
    std::vector<Perm> gens;
    for (const Perm& g : h.generators()) gens.push_back(embed(factor, g));
    return PermGroup(group.degree(), std::move(gens));
  }

  /// Restriction of an element to one factor's block.
  Perm project(std::size_t factor, const Perm& p) const {
    std::vector<unsigned> img(factor_degrees[factor]);
    for (unsigned i = 0; i < img.size(); ++i) img[i] = p[offsets[factor] + i] - offsets[factor];
    return Perm(std::move(img), Perm::unchecked_t{});
  }
};

inline DirectProduct direct_product(const std::vector<PermGroup>& factors) {
  if (factors.empty()) throw PreconditionError("direct product of an empty list");
  unsigned total = 0;
  std::vector<unsigned> offsets, degs;
  for (const PermGroup& f : factors) {
    offsets.push_back(total);
    degs.push_back(f.degree());
    total += f.degree();
  }
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const Perm& g : factors[i].generators())
      if (!g.is_identity()) gens.push_back(embed_perm(g, offsets[i], total));
  return DirectProduct{PermGroup(total, std::move(gens)), std::move(offsets), std::move(degs)};
}

// ---------------------------------------------------------------------------
// named families

namespace detail {

inline Perm rotation(unsigned n) {
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Perm(std::move(img), Perm::unchecked_t{});
}

inline Perm reflection(unsigned n) {
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Perm(std::move(img), Perm::unchecked_t{});
}

inline std::vector<Perm> reduce_generators(unsigned degree, const std::vector<Perm>& gens) {
  GroupAccumulator acc(degree);
  for (const Perm& g : gens) acc.add(g);
  return acc.generators();
}

}  // namespace detail

inline PermGroup sym_group(unsigned n) {
  if (n == 0) throw ParseError("Sym(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {parse_cycles(n, "(1 2)"), detail::rotation(n)});
}

inline PermGroup alt_group(unsigned n) {
  if (n == 0) throw ParseError("Alt(n) needs n >= 1");
  if (n <= 2) return PermGroup::trivial(n);
  if (n == 3) return PermGroup(3, {parse_cycles(3, "(1 2 3)")});
  Perm threecycle = parse_cycles(n, "(1 2 3)");
  if (n % 2 == 1) return PermGroup(n, {threecycle, detail::rotation(n)});
  // even n: (2 3 ... n) together with (1 2 3)
  std::vector<unsigned> img(n);
  img[0] = 0;
  for (unsigned i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;
  return PermGroup(n, {threecycle, Perm(std::move(img), Perm::unchecked_t{})});
}

inline PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw ParseError("C(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {detail::rotation(n)});
}

/// Symmetries of the n-gon; order 2n.
inline PermGroup dihedral_group(unsigned n) {
  if (n < 3) throw ParseError("D(n) needs n >= 3");
  return PermGroup(n, {detail::rotation(n), detail::reflection(n)});
}

/// PSL(2,q) acting on the q+1 points of the projective line, induced by
/// the transvection generators of SL(2,q). The action is faithful for the
/// central quotient, so the permutation group has order q(q^2-1)/gcd(2,q-1).
inline PermGroup psl2_group(unsigned q) {
  if (q < 4) throw ParseError("PSL2(q) needs q >= 4");
  GaloisField f(q);
  unsigned deg = q + 1;
  // points: 0..q-1 is [1:x], q is [0:1]
  auto image_point = [&](unsigned pt, unsigned a, unsigned b, unsigned c, unsigned d) {
    unsigned u, v;
    if (pt < q) {
      u = 1;
      v = pt;
    } else {
      u = 0;
      v = 1;
    }
    unsigned ru = f.add(f.mul(u, a), f.mul(v, c));
    unsigned rv = f.add(f.mul(u, b), f.mul(v, d));
    if (ru == 0) return q;
    return f.mul(rv, f.inv(ru));
  };
  auto matrix_perm = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<unsigned> img(deg);
    for (unsigned pt = 0; pt < deg; ++pt) img[pt] = image_point(pt, a, b, c, d);
    return Perm(std::move(img), Perm::unchecked_t{});
  };
  std::vector<Perm> gens;
  for (unsigned t = 1; t < q; ++t) {
    gens.push_back(matrix_perm(1, t, 0, 1));
    gens.push_back(matrix_perm(1, 0, t, 1));
  }
  PermGroup g(deg, detail::reduce_generators(deg, gens));
  BigInt expect = BigInt(q) * (BigInt(q) * q - 1) / (q % 2 == 0 ? 1 : 2);
  if (g.order() != expect) throw Error("PSL2(" + std::to_string(q) + ") order check failed");
  return g;
}

/// Sp(6,2) on the 63 nonzero vectors of GF(2)^6, generated by the
/// symplectic transvections x -> x + <x,v>v for the standard alternating
/// form. Order 1451520.
inline PermGroup sp62_group() {
  const unsigned dim = 6, npts = 63;
  auto form = [](unsigned x, unsigned y) {
    unsigned s = 0;
    for (unsigned i = 0; i < dim; i += 2) {
      unsigned x1 = (x >> i) & 1, x2 = (x >> (i + 1)) & 1;
      unsigned y1 = (y >> i) & 1, y2 = (y >> (i + 1)) & 1;
      s ^= (x1 & y2) ^ (x2 & y1);
    }
    return s;
  };
  std::vector<Perm> gens;
  for (unsigned v = 1; v <= npts; ++v) {
    std::vector<unsigned> img(npts);
    for (unsigned x = 1; x <= npts; ++x) {
      unsigned y = form(x, v) ? (x ^ v) : x;
      img[x - 1] = y - 1;
    }
    gens.push_back(Perm(std::move(img), Perm::unchecked_t{}));
  }
  PermGroup g(npts, detail::reduce_generators(npts, gens));
  if (g.order() != 1451520) throw Error("Sp(6,2) order check failed");
  return g;
}

/// H = C_{p_1} x ... x C_{p_s} (p_i the i-th odd prime) extended by an
/// elementary abelian 2^s whose i-th basis involution inverts the i-th
/// cyclic factor and centralizes the others. Acts on the disjoint union
/// of the s dihedral blocks; order |H| * 2^s.
struct InvolutionExampleParts {
  PermGroup group;
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> offsets;
  std::vector<Perm> cyclic_gens;      // c_i, one per block
  std::vector<Perm> involution_gens;  // a_i, one per block
};

inline InvolutionExampleParts involution_example_parts(unsigned s) {
  if (s < 1 || s > 8) throw ParseError("InvolutionExample(s) needs 1 <= s <= 8");
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> offsets;
  unsigned total = 0;
  for (unsigned i = 1; i <= s; ++i) {
    primes.push_back(nth_odd_prime(i));
    offsets.push_back(total);
    total += static_cast<unsigned>(primes.back());
  }
  std::vector<Perm> cyc, inv;
  for (unsigned i = 0; i < s; ++i) {
    unsigned n = static_cast<unsigned>(primes[i]);
    cyc.push_back(embed_perm(detail::rotation(n), offsets[i], total));
    inv.push_back(embed_perm(detail::reflection(n), offsets[i], total));
  }
  std::vector<Perm> gens = cyc;
  gens.insert(gens.end(), inv.begin(), inv.end());
  return InvolutionExampleParts{PermGroup(total, gens), std::move(primes), std::move(offsets),
                                std::move(cyc), std::move(inv)};
}

inline PermGroup involution_example(unsigned s) { return involution_example_parts(s).group; }

// ---------------------------------------------------------------------------
// the construction language

class GroupExpr {
public:
  enum class Kind {
    Sym,
    Alt,
    Cyclic,
    Dihedral,
    PSL2,
    Sp62,
    Product,
    Power,
    InvolutionExample,
    FromGenerators,
  };

  Kind kind;
  unsigned n = 0;  // family parameter, power exponent, or FromGenerators degree
  std::vector<GroupExpr> children;
  std::string gens_text;  // FromGenerators cycle strings, comma separated

  static GroupExpr named(Kind k, unsigned n) {
    GroupExpr e;
    e.kind = k;
    e.n = n;
    return e;
  }
  static GroupExpr sp62() { return named(Kind::Sp62, 0); }
  static GroupExpr product(std::vector<GroupExpr> factors) {
    GroupExpr e;
    e.kind = Kind::Product;
    e.children = std::move(factors);
    return e;
  }
  static GroupExpr power(GroupExpr base, unsigned t) {
    GroupExpr e;
    e.kind = Kind::Power;
    e.n = t;
    e.children.push_back(std::move(base));
    return e;
  }
  static GroupExpr from_generators(unsigned degree, std::string gens) {
    GroupExpr e;
    e.kind = Kind::FromGenerators;
    e.n = degree;
    e.gens_text = std::move(gens);
    return e;
  }

  static GroupExpr parse(const std::string& text);

  /// Expected order of the built group; FromGenerators has no prediction.
  std::optional<BigInt> predicted_order() const {
    switch (kind) {
      case Kind::Sym: {
        BigInt f = 1;
        for (unsigned i = 2; i <= n; ++i) f *= i;
        return f;
      }
      case Kind::Alt: {
        BigInt f = 1;
        for (unsigned i = 2; i <= n; ++i) f *= i;
        return n >= 2 ? f / 2 : f;
      }
      case Kind::Cyclic:
        return BigInt(n);
      case Kind::Dihedral:
        return BigInt(2) * n;
      case Kind::PSL2:
        return BigInt(n) * (BigInt(n) * n - 1) / (n % 2 == 0 ? 1 : 2);
      case Kind::Sp62:
        return BigInt(1451520);
      case Kind::Product: {
        BigInt r = 1;
        for (const GroupExpr& c : children) {
          auto o = c.predicted_order();
          if (!o) return std::nullopt;
          r *= *o;
        }
        return r;
      }
      case Kind::Power: {
        auto o = children[0].predicted_order();
        if (!o) return std::nullopt;
        BigInt r = 1;
        for (unsigned i = 0; i < n; ++i) r *= *o;
        return r;
      }
      case Kind::InvolutionExample: {
        BigInt r = 1;
        for (unsigned i = 1; i <= n; ++i) r *= nth_odd_prime(i);
        return r << n;
      }
      case Kind::FromGenerators:
        return std::nullopt;
    }
    return std::nullopt;
  }

  PermGroup build() const {
    switch (kind) {
      case Kind::Sym:
        return sym_group(n);
      case Kind::Alt:
        return alt_group(n);
      case Kind::Cyclic:
        return cyclic_group(n);
      case Kind::Dihedral:
        return dihedral_group(n);
      case Kind::PSL2:
        return psl2_group(n);
      case Kind::Sp62:
        return sp62_group();
      case Kind::Product: {
        std::vector<PermGroup> parts;
        for (const GroupExpr& c : children) parts.push_back(c.build());
        return direct_product(parts).group;
      }
      case Kind::Power: {
        if (n == 0) throw ParseError("Pow(expr, t) needs t >= 1");
        std::vector<PermGroup> parts(n, children[0].build());
        return direct_product(parts).group;
      }
      case Kind::InvolutionExample:
        return involution_example(n);
      case Kind::FromGenerators: {
        std::vector<Perm> gens;
        for (const std::string& c : split_top_level(gens_text))
          gens.push_back(parse_cycles(n, c));
        return PermGroup(n, gens);
      }
    }
    throw Error("unreachable expression kind");
  }

  std::string str() const {
    switch (kind) {
      case Kind::Sym:
        return "Sym(" + std::to_string(n) + ")";
      case Kind::Alt:
        return "Alt(" + std::to_string(n) + ")";
      case Kind::Cyclic:
        return "C(" + std::to_string(n) + ")";
      case Kind::Dihedral:
        return "D(" + std::to_string(n) + ")";
      case Kind::PSL2:
        return "PSL2(" + std::to_string(n) + ")";
      case Kind::Sp62:
        return "Sp62";
      case Kind::Product: {
        std::string out;
        for (std::size_t i = 0; i < children.size(); ++i) {
          if (i) out += " * ";
          out += children[i].str();
        }
        return out;
      }
      case Kind::Power:
        return "Pow(" + children[0].str() + ", " + std::to_string(n) + ")";
      case Kind::InvolutionExample:
        return "InvolutionExample(" + std::to_string(n) + ")";
      case Kind::FromGenerators:
        return "Perm(deg=" + std::to_string(n) + "; gens=\"" + gens_text + "\")";
    }
    return "?";
  }

private:
  // splits "(1 2 3)(4 5), (1 2)" on the commas between cycle groups
  static std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    out.push_back(cur);
    return out;
  }
};

namespace detail {

class ExprParser {
public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  GroupExpr parse() {
    GroupExpr e = parse_product();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input in group expression: " + s_);
    return e;
  }

private:
  GroupExpr parse_product() {
    std::vector<GroupExpr> factors;
    factors.push_back(parse_term());
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      factors.push_back(parse_term());
      skip_ws();
    }
    if (factors.size() == 1) return std::move(factors[0]);
    return GroupExpr::product(std::move(factors));
  }

  GroupExpr parse_term() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      GroupExpr e = parse_product();
      expect(')');
      return e;
    }
    std::string word = parse_word();
    if (word == "Sym") return GroupExpr::named(GroupExpr::Kind::Sym, parse_uint_arg());
    if (word == "Alt") return GroupExpr::named(GroupExpr::Kind::Alt, parse_uint_arg());
    if (word == "C") return GroupExpr::named(GroupExpr::Kind::Cyclic, parse_uint_arg());
    if (word == "D") return GroupExpr::named(GroupExpr::Kind::Dihedral, parse_uint_arg());
    if (word == "PSL2") return GroupExpr::named(GroupExpr::Kind::PSL2, parse_uint_arg());
    if (word == "Sp62") return GroupExpr::sp62();
    if (word == "InvolutionExample")
      return GroupExpr::named(GroupExpr::Kind::InvolutionExample, parse_uint_arg());
    if (word == "Pow") {
      expect('(');
      GroupExpr base = parse_product();
      expect(',');
      unsigned t = parse_uint();
      expect(')');
      return GroupExpr::power(std::move(base), t);
    }
    if (word == "Perm") {
      expect('(');
      expect_word("deg");
      expect('=');
      unsigned deg = parse_uint();
      expect(';');
      expect_word("gens");
      expect('=');
      std::string gens = parse_quoted();
      expect(')');
      return GroupExpr::from_generators(deg, std::move(gens));
    }
    throw ParseError("unknown group constructor '" + word + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' in group expression: " + s_);
    ++pos_;
  }

  std::string parse_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_]))))
      ++pos_;
    if (start == pos_) throw ParseError("expected a group constructor in: " + s_);
    return s_.substr(start, pos_ - start);
  }

  void expect_word(const std::string& w) {
    if (parse_word() != w) throw ParseError("expected '" + w + "' in group expression: " + s_);
  }

  unsigned parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number in group expression: " + s_);
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }

  unsigned parse_uint_arg() {
    expect('(');
    unsigned v = parse_uint();
    expect(')');
    return v;
  }

  std::string parse_quoted() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '"')
      throw ParseError("expected a quoted string in group expression: " + s_);
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
    if (pos_ >= s_.size()) throw ParseError("unterminated string in group expression: " + s_);
    std::string out = s_.substr(start, pos_ - start);
    ++pos_;
    return out;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupExpr GroupExpr::parse(const std::string& text) {
  return detail::ExprParser(text).parse();
}

/// Hall p'-subgroup read off the construction, for the expressions whose
/// soluble structure is explicit: cyclic and dihedral groups, the
/// involution example, and products of such. Returns nothing when the
/// expression carries no usable structure; callers fall back to the
/// generic randomized search.
inline std::optional<PermGroup> hall_complement_hint(const GroupExpr& e, std::uint64_t p) {
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: {
      unsigned n = e.n;
      unsigned pa = 1;
      while (n % p == 0) {
        n /= static_cast<unsigned>(p);
        pa *= static_cast<unsigned>(p);
      }
      if (e.n == 1) return PermGroup::trivial(1);
      return PermGroup(e.n, {perm_pow(detail::rotation(e.n), pa)});
    }
    case GroupExpr::Kind::Dihedral: {
      unsigned n = e.n;
      unsigned pa = 1;
      while (n % p == 0) {
        n /= static_cast<unsigned>(p);
        pa *= static_cast<unsigned>(p);
      }
      Perm rot_part = perm_pow(detail::rotation(e.n), pa);
      if (p == 2) return PermGroup(e.n, {rot_part});
      return PermGroup(e.n, {rot_part, detail::reflection(e.n)});
    }
    case GroupExpr::Kind::InvolutionExample: {
      auto parts = involution_example_parts(e.n);
      std::vector<Perm> gens;
      for (unsigned i = 0; i < e.n; ++i)
        if (parts.primes[i] != p) gens.push_back(parts.cyclic_gens[i]);
      if (p != 2)
        for (const Perm& a : parts.involution_gens) gens.push_back(a);
      return PermGroup(parts.group.degree(), std::move(gens));
    }
    case GroupExpr::Kind::Product:
    case GroupExpr::Kind::Power: {
      std::vector<const GroupExpr*> factors;
      if (e.kind == GroupExpr::Kind::Product) {
        for (const GroupExpr& c : e.children) factors.push_back(&c);
      } else {
        for (unsigned i = 0; i < e.n; ++i) factors.push_back(&e.children[0]);
      }
      std::vector<PermGroup> halls;
      unsigned total = 0;
      for (const GroupExpr* c : factors) {
        PermGroup bg = c->build();
        if (bg.order() % p != 0) {
          halls.push_back(std::move(bg));
        } else {
          auto h = hall_complement_hint(*c, p);
          if (!h) return std::nullopt;
          halls.push_back(std::move(*h));
        }
        total += halls.back().degree();
      }
      std::vector<Perm> gens;
      unsigned offset = 0;
      for (const PermGroup& h : halls) {
        for (const Perm& g : h.generators())
          if (!g.is_identity()) gens.push_back(embed_perm(g, offset, total));
        offset += h.degree();
      }
      return PermGroup(total, std::move(gens));
    }
    default:
      return std::nullopt;
  }
}

}  // namespace sylprob
