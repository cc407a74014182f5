#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sylprob/perm_group.hpp"

using namespace sylprob;

namespace {

PermGroup sym(unsigned n) {
  std::vector<unsigned> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {parse_cycles(n, "(1 2)"), Perm(std::move(cyc), Perm::unchecked_t{})});
}

PermGroup alt4() {
  return PermGroup(4, {parse_cycles(4, "(1 2 3)"), parse_cycles(4, "(2 3 4)")});
}

Perm random_perm(unsigned degree, std::mt19937& rng) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img), Perm::unchecked_t{});
}

}  // namespace

TEST_CASE("orders of small classical groups") {
  CHECK(sym(3).order() == 6);
  CHECK(sym(5).order() == 120);
  CHECK(sym(7).order() == 5040);
  CHECK(alt4().order() == 12);
  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK(PermGroup(6, {parse_cycles(6, "(1 2 3 4 5 6)")}).order() == 6);
}

TEST_CASE("chain order equals exhaustive closure count") {
  std::vector<std::vector<Perm>> gen_sets = {
      {parse_cycles(5, "(1 2 3 4 5)"), parse_cycles(5, "(3 4 5)")},   // Alt(5)
      {parse_cycles(4, "(1 2 3 4)"), parse_cycles(4, "(1 3)")},       // D4, order 8
      {parse_cycles(6, "(1 2)(3 4)"), parse_cycles(6, "(1 3)(2 4)"),  // V4 x C2
       parse_cycles(6, "(5 6)")},
      {parse_cycles(7, "(1 2 3 4 5 6 7)"), parse_cycles(7, "(2 3 5)")},  // order 168
  };
  for (const auto& gens : gen_sets) {
    unsigned deg = gens[0].degree();
    PermGroup g(deg, gens);
    auto all = oracle::closure(deg, gens);
    CHECK(g.order() == all.size());
    for (const Perm& x : all) CHECK(g.contains(x));
  }
}

TEST_CASE("generated subgroup edge cases") {
  PermGroup t = generated_subgroup(4, {});
  CHECK(t.order() == 1);
  CHECK(t.generators().size() == 1);
  CHECK(t.generators()[0].is_identity());

  PermGroup s3 = generated_subgroup(3, {parse_cycles(3, "(1 2)"), parse_cycles(3, "(1 2 3)")});
  CHECK(s3.order() == 6);

  PermGroup a5 = generated_subgroup(5, {parse_cycles(5, "(1 2 3 4 5)"), parse_cycles(5, "(3 4 5)")});
  CHECK(a5.order() == 60);

  CHECK_THROWS_AS(PermGroup(3, {parse_cycles(4, "(1 2)")}), DegreeMismatchError);
}

TEST_CASE("membership") {
  PermGroup a4 = alt4();
  CHECK(a4.contains(parse_cycles(4, "(1 2 3)")));
  CHECK_FALSE(a4.contains(parse_cycles(4, "(1 2)")));
  CHECK(sym(4).contains(parse_cycles(4, "(1 2)(3 4)")));
  CHECK_THROWS_AS(a4.contains(Perm(5)), DegreeMismatchError);
}

TEST_CASE("membership soundness against enumeration") {
  std::mt19937 rng(20240811);
  std::vector<PermGroup> groups;
  groups.push_back(alt4());
  groups.push_back(PermGroup(5, {parse_cycles(5, "(1 2 3 4 5)")}));
  groups.push_back(PermGroup(6, {parse_cycles(6, "(1 2 3)(4 5 6)"), parse_cycles(6, "(1 4)(2 5)(3 6)")}));
  for (const PermGroup& g : groups) {
    std::set<Perm> elems;
    g.for_each_element([&](const Perm& p) { elems.insert(p); });
    CHECK(elems.size() == g.order());
    for (const Perm& p : elems) CHECK(g.contains(p));
    // random permutations outside the enumerated set must be rejected
    for (int k = 0; k < 50; ++k) {
      Perm r = random_perm(g.degree(), rng);
      CHECK(g.contains(r) == (elems.count(r) > 0));
    }
  }
}

TEST_CASE("enumeration yields each element once") {
  PermGroup s5 = sym(5);
  std::set<Perm> seen;
  std::size_t n = 0;
  s5.for_each_element([&](const Perm& p) {
    seen.insert(p);
    ++n;
  });
  CHECK(n == 120);
  CHECK(seen.size() == 120);
}

TEST_CASE("enumeration budget is a hard error") {
  PermGroup s7 = sym(7);  // order 5040
  CHECK_THROWS_AS(s7.elements(1000), BudgetError);
  CHECK_NOTHROW(s7.elements(5040));
}

TEST_CASE("centralizer examples") {
  PermGroup s3 = sym(3);
  PermGroup c = centralizer(s3, parse_cycles(3, "(1 2 3)"));
  CHECK(c.order() == 3);

  CHECK(equal_groups(centralizer(s3, Perm(3)), s3));

  PermGroup a5(5, {parse_cycles(5, "(1 2 3 4 5)"), parse_cycles(5, "(3 4 5)")});
  PermGroup c2 = centralizer(a5, parse_cycles(5, "(1 2)(3 4)"));
  CHECK(c2.order() == 4);

  CHECK_THROWS_AS(centralizer(alt4(), parse_cycles(4, "(1 2)")), PreconditionError);
}

TEST_CASE("centralizer matches brute force and the class-size identity") {
  std::vector<PermGroup> groups;
  groups.push_back(sym(4));
  groups.push_back(alt4());
  groups.push_back(PermGroup(5, {parse_cycles(5, "(1 2 3 4 5)"), parse_cycles(5, "(3 4 5)")}));
  for (const PermGroup& g : groups) {
    auto elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Perm& x = elems[i];
      PermGroup c = centralizer(g, x);
      CHECK(c.order() == oracle::centralizer_elements(elems, x).size());
      auto cls = oracle::conjugacy_class(elems, x);
      CHECK(g.order() == BigInt(cls.size()) * c.order());
    }
  }
}

TEST_CASE("centralizer of a subgroup") {
  PermGroup s4 = sym(4);
  PermGroup v4(4, {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")});
  PermGroup c = centralizer_of_subgroup(s4, v4);
  CHECK(c.order() == 4);
  CHECK(equal_groups(c, v4));

  PermGroup c6(6, {parse_cycles(6, "(1 2 3 4 5 6)")});
  CHECK(equal_groups(centralizer_of_subgroup(c6, c6), c6));

  PermGroup a5(5, {parse_cycles(5, "(1 2 3 4 5)"), parse_cycles(5, "(3 4 5)")});
  PermGroup p5(5, {parse_cycles(5, "(1 2 3 4 5)")});
  CHECK(equal_groups(centralizer_of_subgroup(a5, p5), p5));
}

TEST_CASE("normalizer examples") {
  PermGroup s3 = sym(3);
  PermGroup c3(3, {parse_cycles(3, "(1 2 3)")});
  CHECK(equal_groups(normalizer(s3, c3), s3));

  PermGroup a5(5, {parse_cycles(5, "(1 2 3 4 5)"), parse_cycles(5, "(3 4 5)")});
  PermGroup p5(5, {parse_cycles(5, "(1 2 3 4 5)")});
  CHECK(normalizer(a5, p5).order() == 10);

  CHECK(equal_groups(normalizer(a5, a5), a5));
}

TEST_CASE("conjugate subgroup") {
  PermGroup h(3, {parse_cycles(3, "(1 2)")});
  CHECK(equal_groups(conjugate_subgroup(h, Perm(3)), h));
  PermGroup hc = conjugate_subgroup(h, parse_cycles(3, "(2 3)"));
  CHECK(hc.contains(parse_cycles(3, "(1 3)")));
  PermGroup hr = conjugate_subgroup(h, parse_cycles(3, "(1 2 3)"));
  CHECK(hr.contains(parse_cycles(3, "(2 3)")));
  CHECK(hr.order() == h.order());
}

TEST_CASE("conjugation preserves order, sampled") {
  std::mt19937 rng(7);
  PermGroup s5 = sym(5);
  PermGroup h(5, {parse_cycles(5, "(1 2)(3 4)"), parse_cycles(5, "(1 3)(2 4)")});
  auto elems = s5.elements();
  for (int k = 0; k < 40; ++k) {
    const Perm& x = elems[rng() % elems.size()];
    CHECK(conjugate_subgroup(h, x).order() == h.order());
  }
}

TEST_CASE("normality") {
  PermGroup s4 = sym(4);
  PermGroup v4(4, {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")});
  CHECK(is_normal(s4, v4));

  PermGroup s3 = sym(3);
  PermGroup c2(3, {parse_cycles(3, "(1 2)")});
  CHECK_FALSE(is_normal(s3, c2));

  PermGroup c6(6, {parse_cycles(6, "(1 2 3 4 5 6)")});
  PermGroup c3(6, {parse_cycles(6, "(1 3 5)(2 4 6)")});
  CHECK(is_normal(c6, c3));

  CHECK_THROWS_AS(is_normal(v4, s4), PreconditionError);
}

TEST_CASE("normal closure") {
  PermGroup s4 = sym(4);
  PermGroup ncl = normal_closure(s4, {parse_cycles(4, "(1 2)(3 4)")});
  CHECK(ncl.order() == 4);  // V4
  PermGroup ncl2 = normal_closure(s4, {parse_cycles(4, "(1 2 3)")});
  CHECK(ncl2.order() == 12);  // Alt(4)
  PermGroup ncl3 = normal_closure(s4, {parse_cycles(4, "(1 2)")});
  CHECK(ncl3.order() == 24);
}

TEST_CASE("prime divisors from the chain") {
  auto f = sym(5).order_factorization();
  CHECK(f.at(2) == 3);
  CHECK(f.at(3) == 1);
  CHECK(f.at(5) == 1);
  CHECK(sym(5).prime_divisors() == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("chain agrees with brute-force closure on random subgroups") {
  std::mt19937 rng(998877);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Perm> gens = {random_perm(8, rng), random_perm(8, rng)};
    PermGroup g(8, gens);
    auto all = oracle::closure(8, gens);
    REQUIRE(g.order() == all.size());
    for (std::size_t i = 0; i < all.size(); i += 97) CHECK(g.contains(all[i]));
    CHECK(g.contains(all.back()));
  }
}
