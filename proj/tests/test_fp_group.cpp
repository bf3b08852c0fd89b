#include <doctest.h>

#include <cstdlib>
#include <random>

#include "galois/catalogue.hpp"
#include "galois/error.hpp"
#include "galois/fp_group.hpp"
#include "galois/homomorphisms.hpp"
#include "galois/limits.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {
  using Factors = std::vector<std::int64_t>;

  std::optional<std::size_t> order_of(std::string_view fp, std::size_t max = 50000) {
    auto const t = coset_enumeration(parse_fp(fp), {}, max);
    if (!t) {
      return std::nullopt;
    }
    return t->index;
  }

  // Every Identified result must carry a witness that kills the relators
  // and generates a group of the certified order.
  void check_witness(FpGroup const& F, std::vector<PermGroup> const& cands,
                     IdentificationResult const& r) {
    if (r.status != IdStatus::Identified) {
      CHECK_FALSE(r.match.has_value());
      return;
    }
    REQUIRE(r.match.has_value());
    REQUIRE(r.certified_order.has_value());
    auto const& C = cands.at(r.match->candidate_index);
    CHECK(*r.certified_order == C.order());
    REQUIRE(r.match->witness.size() == F.generator_count());
    for (auto const& w : F.relators()) {
      CHECK(evaluate(w, r.match->witness, C.degree()).is_identity());
    }
    CHECK(PermGroup(C.degree(), r.match->witness).order() == C.order());
  }

  FpMap map_of(std::string_view src, std::string_view dst, std::vector<std::string> images) {
    FpMap m{parse_fp(src), parse_fp(dst), {}};
    for (auto const& w : images) {
      m.images.push_back(parse_word(w, m.target.generator_count()));
    }
    return m;
  }

  // Fixed suite of twenty presentations.
  std::vector<std::string> const kSuite = {
      "fp:1:aa",          "fp:2:",           "fp:2:abAB,aa,bb",  "fp:2:aa,bb,ababab",
      "fp:1:aaaaaa",      "fp:2:aaaa,bb,abab", "fp:2:aaaa,aaBB,Baba", "fp:3:abAB,acAC,bcBC",
      "fp:2:ab",          "fp:2:aabbb",      "fp:2:aaa,bbb,abab", "fp:3:aa,bb,cc,abc",
      "fp:1:",            "fp:2:aabb,abAB",  "fp:3:ab,bc",       "fp:2:aaaaaaaaaaaa,bbbbbbbb",
      "fp:2:aaBB",        "fp:2:abab,aaa",   "fp:4:aa,bbb,cccc,dd", "fp:2:aB,bbbbb",
  };
}  // namespace

TEST_CASE("words reduce freely and cyclically") {
  CHECK(free_reduce({1, -1, 2}) == Word{2});
  CHECK(free_reduce({1, 2, -2, -1}).empty());
  CHECK(cyclic_reduce({-1, 2, 1}) == Word{2});
  CHECK(inverse({1, -2}) == Word{2, -1});
  CHECK(concat({1, 2}, {-2, 3}) == Word{1, 2, -2, 3});
}

TEST_CASE("presentation text round trips") {
  for (auto const& s : kSuite) {
    auto const F = parse_fp(s);
    CHECK(parse_fp(format_fp(F)) == F);
  }
  CHECK(parse_fp("fp:2:aa,bb,ababab").relators().size() == 3);
  CHECK(parse_fp("fp:1:aA").relators().empty());
  FpGroup big(30, {{30, -1}, {3}});
  CHECK(parse_fp(format_fp(big)) == big);
  for (auto bad : {"fp:1:b", "fp:x:", "fp:2:a,,", "gp:1:a", "fp:1:a1"}) {
    CHECK_THROWS_AS(parse_fp(bad), ParseError);
  }
  CHECK_THROWS_AS(FpGroup(1, {{2}}), std::invalid_argument);
}

TEST_CASE("abelianization examples") {
  CHECK(abelianization(parse_fp("fp:1:aa")) == Factors{2});
  CHECK(abelianization(parse_fp("fp:2:")) == Factors{0, 0});
  CHECK(abelianization(parse_fp("fp:2:abAB,aa,bb")) == Factors{2, 2});
  CHECK(abelianization(parse_fp("fp:2:aa,bbb")) == Factors{6});
  CHECK(abelianization(parse_fp("fp:2:aa,bb,ababab")) == Factors{2});
  CHECK(abelianization(parse_fp("fp:0:")).empty());
}

TEST_CASE("invariant factors form a divisibility chain and match determinantal divisors") {
  std::mt19937                                  rng(7);
  std::uniform_int_distribution<std::int64_t>   entry(-9, 9);
  std::uniform_int_distribution<std::size_t>    rows(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix m(rows(rng), std::vector<std::int64_t>(2));
    for (auto& r : m) {
      r[0] = entry(rng);
      r[1] = entry(rng);
    }
    auto const f = invariant_factors(m, 2);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (f[i] != 0) {
        CHECK(f[i + 1] % f[i] == 0);
      } else {
        CHECK(f[i + 1] == 0);
      }
    }
    // Reinstate the dropped units to get the full diagonal d1, d2.
    Factors diag = f;
    while (diag.size() < 2) {
      diag.insert(diag.begin(), 1);
    }
    auto const [d1, d1d2] = oracle::determinantal_divisors(m);
    if (d1 == 0) {
      CHECK(diag == Factors{0, 0});
    } else {
      CHECK(diag[0] == d1);
      if (d1d2 == 0) {
        CHECK(diag[1] == 0);
      } else {
        CHECK(diag[0] * diag[1] == d1d2);
      }
    }
    if (m.size() == 2 && d1d2 != 0) {
      std::int64_t prod = 1;
      for (auto d : f) {
        prod *= d;
      }
      CHECK(prod == std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]));
    }
  }
}

TEST_CASE("row lattice membership") {
  IntMatrix m{{2, 0}, {0, 3}};
  CHECK(in_row_lattice(m, {4, 3}));
  CHECK_FALSE(in_row_lattice(m, {1, 0}));
  CHECK(in_row_lattice({}, {0, 0}));
}

TEST_CASE("coset enumeration examples") {
  CHECK(order_of("fp:1:aaaa", 100) == 4);
  CHECK(order_of("fp:2:aa,bb,ababab") == 6);
  CHECK_FALSE(order_of("fp:2:aa,bb", 64).has_value());
  CHECK(order_of("fp:0:") == 1);
  auto const F = parse_fp("fp:2:aa,bb,ababab");
  auto const t = coset_enumeration(F, {{1}}, 100);
  REQUIRE(t.has_value());
  CHECK(t->index == 3);
}

TEST_CASE("coset enumeration recovers catalogue orders") {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto const expect = group_from_catalogue("C" + std::to_string(n)).order();
    CHECK(order_of("fp:1:" + std::string(n, 'a')) == expect);
  }
  CHECK(order_of("fp:2:aa,bb,ababab") == group_from_catalogue("S3").order());
  CHECK(order_of("fp:2:aa,bbb,abababab") == group_from_catalogue("S4").order());
  CHECK(order_of("fp:2:aaaa,bb,abab") == group_from_catalogue("D8").order());
  CHECK(order_of("fp:2:aaaa,aaBB,Baba") == group_from_catalogue("Q8").order());
}

TEST_CASE("coset tables act as homomorphisms") {
  auto const F = parse_fp("fp:2:aa,bbb,abababab");
  auto const t = coset_enumeration(F, {}, 1000);
  REQUIRE(t.has_value());
  for (auto const& w : F.relators()) {
    CHECK(evaluate(w, t->generator_actions, t->index).is_identity());
  }
  PermGroup const P(t->index, t->generator_actions);
  CHECK(P.order() == 24);
}

TEST_CASE("simplify examples") {
  CHECK(simplify(parse_fp("fp:2:b")) == parse_fp("fp:1:"));
  CHECK(simplify(parse_fp("fp:1:aA")) == parse_fp("fp:1:"));
  CHECK(simplify(parse_fp("fp:2:ab")) == parse_fp("fp:1:"));
  CHECK(simplify(parse_fp("fp:2:aa,aa,ba")).generator_count() == 1);
}

TEST_CASE("simplify keeps abelianization and order") {
  for (auto const& s : kSuite) {
    auto const F = parse_fp(s);
    auto const S = simplify(F);
    CHECK(abelianization(S) == abelianization(F));
    CHECK(S.generator_count() <= F.generator_count());
    auto const a = coset_enumeration(F, {}, 5000);
    auto const b = coset_enumeration(S, {}, 5000);
    CHECK(a.has_value() == b.has_value());
    if (a && b) {
      CHECK(a->index == b->index);
    }
  }
}

TEST_CASE("simplify_with_map sends relators to consequences") {
  for (auto const& s : kSuite) {
    auto const F = parse_fp(s);
    auto const r = simplify_with_map(F);
    REQUIRE(r.generator_images.size() == F.generator_count());
    auto const t = coset_enumeration(r.group, {}, 5000);
    if (!t) {
      continue;
    }
    // The regular action of the simplified group gives a representation of
    // F through the generator map; every relator of F must act trivially.
    std::vector<Perm> acts;
    for (auto const& w : r.generator_images) {
      acts.push_back(evaluate(w, t->generator_actions, t->index));
    }
    for (auto const& w : F.relators()) {
      CHECK(evaluate(w, acts, t->index).is_identity());
    }
  }
}

TEST_CASE("identification examples") {
  {
    auto const F     = parse_fp("fp:1:aa");
    std::vector cands{group_from_catalogue("C2")};
    auto const r     = identify_finite(F, cands);
    CHECK(r.status == IdStatus::Identified);
    check_witness(F, cands, r);
  }
  {
    auto const F     = parse_fp("fp:2:aa,bb,ababab");
    std::vector cands{group_from_catalogue("C6"), group_from_catalogue("S3")};
    auto const r     = identify_finite(F, cands);
    REQUIRE(r.status == IdStatus::Identified);
    CHECK(r.match->candidate_index == 1);
    check_witness(F, cands, r);
  }
  {
    auto const F     = parse_fp("fp:2:aa,bb");
    std::vector cands{group_from_catalogue("C2xC2")};
    Limits      l;
    l.max_cosets = 2000;
    ScopedLimits scoped(l);
    auto const   r = identify_finite(F, cands);
    CHECK(r.status == IdStatus::Inconclusive);
    CHECK_FALSE(r.certified_order.has_value());
  }
  {
    auto const F = parse_fp("fp:1:aaaaaa");
    auto const r = identify_finite(F, {group_from_catalogue("S3")});
    CHECK(r.status == IdStatus::Inconclusive);
    CHECK(r.certified_order == 6);
  }
}

TEST_CASE("identification witnesses are always valid") {
  std::vector<PermGroup> cands;
  for (auto const& spec : catalogue_specs(24)) {
    cands.push_back(group_from_catalogue(spec));
  }
  for (auto const& s : kSuite) {
    auto const F = parse_fp(s);
    Limits     l;
    l.max_cosets = 5000;
    ScopedLimits scoped(l);
    auto const   r = identify_finite(F, cands);
    check_witness(F, cands, r);
    if (r.status == IdStatus::Identified) {
      CHECK(*r.certified_order == coset_enumeration(F, {}, 5000)->index);
    }
  }
}

TEST_CASE("identification respects the order ceiling") {
  Limits l;
  l.max_identify_order = 10;
  ScopedLimits scoped(l);
  auto const   r = identify_finite(parse_fp("fp:1:aaaaaaaaaaaa"), {group_from_catalogue("C12")});
  CHECK(r.status == IdStatus::OrderExceeded);
}

TEST_CASE("pushout examples") {
  {
    auto const P = pushout(map_of("fp:0:", "fp:1:", {}), map_of("fp:0:", "fp:1:", {}));
    CHECK(P.generator_count() == 2);
    CHECK(abelianization(P) == Factors{0, 0});
  }
  {
    auto const P = pushout(map_of("fp:1:aa", "fp:1:aa", {"a"}), map_of("fp:1:aa", "fp:1:aa", {"a"}));
    auto const r = identify_finite(P, {group_from_catalogue("C2")});
    CHECK(r.status == IdStatus::Identified);
  }
  {
    auto const P = pushout(map_of("fp:1:", "fp:1:", {"aa"}), map_of("fp:1:", "fp:0:", {"1"}));
    CHECK(abelianization(P) == Factors{2});
    CHECK(coset_enumeration(P, {}, 100)->index == 2);
    auto const r = identify_finite(P, {group_from_catalogue("C2")});
    CHECK(r.status == IdStatus::Identified);
  }
}

TEST_CASE("pushout rejects ill-formed maps") {
  CHECK_THROWS_AS(pushout(FpMap{parse_fp("fp:1:"), parse_fp("fp:1:"), {{2}}},
                          map_of("fp:1:", "fp:1:", {"a"})),
                  IllFormedMap);
  CHECK_THROWS_AS(pushout(map_of("fp:1:", "fp:1:", {"a"}), map_of("fp:2:", "fp:1:", {"a", "a"})),
                  IllFormedMap);
  // a -> a from C2 into Z does not respect a^2 even after abelianization
  CHECK_THROWS_AS(pushout(map_of("fp:1:aa", "fp:1:", {"a"}), map_of("fp:1:aa", "fp:1:aa", {"a"})),
                  IllFormedMap);
}

TEST_CASE("free-product abelianization is associative") {
  auto const triv = parse_fp("fp:0:");
  auto const leg  = [&](FpGroup const& G) { return FpMap{triv, G, {}}; };
  for (std::size_t i = 0; i < kSuite.size(); ++i) {
    auto const A  = parse_fp(kSuite[i]);
    auto const B  = parse_fp(kSuite[(i + 7) % kSuite.size()]);
    auto const C  = parse_fp(kSuite[(i + 13) % kSuite.size()]);
    auto const l  = pushout(leg(pushout(leg(A), leg(B))), leg(C));
    auto const r  = pushout(leg(A), leg(pushout(leg(B), leg(C))));
    CHECK(abelianization(l) == abelianization(r));
    CHECK(l == r);
  }
}
