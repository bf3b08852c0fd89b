#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "galois/catalogue.hpp"
#include "galois/error.hpp"
#include "galois/groupoid.hpp"
#include "galois/homomorphisms.hpp"
#include "galois/orbit_nerve.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {
  std::set<oracle::Images> as_set(Subgroup const& H) {
    std::set<oracle::Images> out;
    for (Elem x : H.members()) {
      out.insert(oracle::images(H.parent().element(x)));
    }
    return out;
  }

  Subgroup cyclic(PermGroup const& G, std::vector<std::vector<Point>> const& cycles) {
    std::vector<Elem> gen{G.index_of(Perm::from_cycles(G.degree(), cycles))};
    return Subgroup::generated_by(G, gen);
  }

  // Every subgroup generated by at most two elements.
  std::vector<Subgroup> small_subgroups(PermGroup const& G) {
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup>       out;
    for (Elem a = 0; a < G.order(); ++a) {
      for (Elem b = a; b < G.order(); ++b) {
        std::vector<Elem> gens{a, b};
        auto              H = Subgroup::generated_by(G, gens);
        if (seen.insert({H.members().begin(), H.members().end()}).second) {
          out.push_back(H);
        }
      }
    }
    return out;
  }

  std::size_t certified_order(FpGroup const& F) {
    auto const t = coset_enumeration(F, {}, 50000);
    REQUIRE(t.has_value());
    return t->index;
  }

  PermGroup regular_image(FpGroup const& F) {
    auto const t = coset_enumeration(F, {}, 50000);
    REQUIRE(t.has_value());
    return PermGroup(t->index, t->generator_actions);
  }

  std::vector<std::vector<bool>> chain_with_top(std::size_t n, std::mt19937& rng) {
    // random preorder closed transitively, then a top element adjoined
    std::bernoulli_distribution   coin(0.3);
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        leq[a][b] = coin(rng);
      }
    }
    for (std::size_t a = 0; a <= n; ++a) {
      leq[a][a] = true;
      leq[a][n] = true;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; b <= n; ++b) {
          if (leq[a][k] && leq[k][b]) {
            leq[a][b] = true;
          }
        }
      }
    }
    return leq;
  }
}  // namespace

TEST_CASE("close_family examples") {
  auto const S3 = group_from_catalogue("S3");
  auto const A3 = cyclic(S3, {{0, 1, 2}});
  auto const F1 = close_family(S3, {A3}, false);
  REQUIRE(F1.members.size() == 1);
  CHECK(F1.members.front() == A3);
  CHECK(F1.conjugation_closed);
  CHECK(F1.intersection_closed);

  auto const F2 = close_family(S3, {cyclic(S3, {{0, 1}})}, false);
  CHECK(F2.members.size() == 4);
  CHECK(F2.contains_trivial);
  CHECK(F2.members.front().is_trivial());
  CHECK(close_family(S3, {cyclic(S3, {{0, 1}})}, true).members.size() == 3);

  CHECK(close_family(S3, {}, false).members.empty());
}

TEST_CASE("family flags are measured") {
  auto const S3 = group_from_catalogue("S3");
  auto const F  = make_family(S3, {cyclic(S3, {{0, 1}}), cyclic(S3, {{0, 1}})});
  CHECK(F.members.size() == 1);
  CHECK_FALSE(F.conjugation_closed);
  CHECK(F.intersection_closed);
  CHECK_FALSE(F.contains_trivial);
  auto const S4 = group_from_catalogue("S4");
  for (auto const& H : small_subgroups(S4)) {
    auto const C = close_family(S4, {H}, false);
    CHECK(C.conjugation_closed);
    CHECK(C.intersection_closed);
    for (auto const& K : C.members) {
      for (Elem g = 0; g < S4.order(); ++g) {
        CHECK(std::binary_search(C.members.begin(), C.members.end(), K.conjugate(g)));
      }
    }
  }
}

TEST_CASE("orbit category examples") {
  auto const S3 = group_from_catalogue("S3");
  {
    auto const O = orbit_category(make_family(S3, {Subgroup::whole(S3)}));
    CHECK(O.category.object_count() == 1);
    CHECK(O.category.morphism_count() == 1);
    CHECK(O.category.object(0) == "G/G");
  }
  {
    auto const C4 = group_from_catalogue("C4");
    auto const O  = orbit_category(make_family(C4, {normal_closure(C4, order_p_elements(C4, 2))}));
    CHECK(O.category.object_count() == 1);
    CHECK(O.category.morphism_count() == 2);
    auto const f = O.category.is_identity(0) ? MorphismId{1} : MorphismId{0};
    CHECK(O.category.is_identity(O.category.compose(f, f)));
  }
  {
    auto const O = orbit_category(make_family(S3, {cyclic(S3, {{0, 1, 2}})}));
    CHECK(O.category.object_count() == 1);
    CHECK(O.category.morphism_count() == 2);
  }
  CHECK_THROWS_AS(orbit_category(make_family(S3, {})), EmptyFamily);
}

TEST_CASE("reduced orbit category examples") {
  auto const V = group_from_catalogue("C2xC2");
  auto const E = elementary_abelian_p_subgroups(V, 2, false);
  auto const O = reduced_orbit_category(close_family(V, E, false));
  CHECK(O.category.object_count() == 4);
  // three lines with End = V/L of order 2, one morphism from each line to
  // the plane, the plane's identity
  CHECK(O.category.morphism_count() == 3 * 2 + 3 + 1);
  for (ObjectId x = 0; x < 3; ++x) {
    CHECK(O.category.hom(x, 3).size() == 1);
    CHECK(O.category.hom(3, x).empty());
  }
  CHECK_THROWS_AS(reduced_orbit_category(make_family(V, {Subgroup::trivial(V)})), EmptyFamily);

  auto const S3 = group_from_catalogue("S3");
  auto const F  = close_family(S3, {cyclic(S3, {{0, 1}})}, false);
  CHECK(reduced_orbit_category(F).category.object_count() == 3);
  CHECK(orbit_category(F).category.object_count() == 4);
}

TEST_CASE("orbit category hom-sets count fixed cosets") {
  for (auto spec : {"S3", "D8", "Q8", "A4", "C2xC4", "S4", "D12"}) {
    auto const G = group_from_catalogue(spec);
    auto const F = make_family(G, small_subgroups(G));
    auto const O = orbit_category(F);
    REQUIRE(O.category.object_count() == F.members.size());
    CHECK(O.category.check_laws());
    auto const Gset = oracle::elements(G);
    for (ObjectId a = 0; a < F.members.size(); ++a) {
      auto const Ha = as_set(F.members[a]);
      for (ObjectId b = 0; b < F.members.size(); ++b) {
        CHECK(O.category.hom(a, b).size() == oracle::fixed_cosets(Gset, Ha, as_set(F.members[b])));
      }
    }
  }
}

TEST_CASE("orbit category morphisms are coset maps") {
  auto const G = group_from_catalogue("S4");
  auto const F = close_family(G, elementary_abelian_p_subgroups(G, 2, false), false);
  auto const O = orbit_category(F);
  auto const& C = O.category;
  for (MorphismId f = 0; f < C.morphism_count(); ++f) {
    auto const& m = C.morphism(f);
    Elem const  g = O.coset_rep[f];
    // g^-1 H g <= K and g is least in gK
    CHECK(O.subgroups[m.source].conjugate(G.inv(g)).is_subgroup_of(O.subgroups[m.target]));
    for (Elem k : O.subgroups[m.target].members()) {
      CHECK(g <= G.mul(g, k));
    }
  }
  // composition: (g'L) o (gK) = gg'L
  for (MorphismId f = 0; f < C.morphism_count(); ++f) {
    auto const out = C.outgoing(C.morphism(f).target);
    for (MorphismId h : out) {
      auto const hf = C.compose(h, f);
      auto const& L = O.subgroups[C.morphism(h).target];
      CHECK(L.contains(G.mul(G.inv(O.coset_rep[hf]), G.mul(O.coset_rep[f], O.coset_rep[h]))));
    }
  }
}

TEST_CASE("nerve pi0 examples") {
  CHECK(nerve_pi0(delooping(group_from_catalogue("S3")).category()).size() == 1);
  auto const U = FinCategory::disjoint_union({delooping(group_from_catalogue("C2")).category(),
                                              poset_category({{true, true}, {false, true}}),
                                              delooping(PermGroup::trivial()).category()});
  CHECK(nerve_pi0(U).size() == 3);
  auto const S3 = group_from_catalogue("S3");
  auto const O  = reduced_orbit_category(close_family(S3, elementary_abelian_p_subgroups(S3, 3, false), true));
  CHECK(nerve_pi0(O.category).size() == 1);
}

TEST_CASE("nerve of a delooping presents the group") {
  for (auto const& spec : catalogue_specs(12)) {
    auto const Q = group_from_catalogue(spec);
    auto const F = nerve_pi1_presentation(delooping(Q).category(), 0);
    CHECK(F.generator_count() == Q.order() - 1);
    auto const r = identify_finite(F, {Q});
    CHECK(r.status == IdStatus::Identified);
    CHECK(r.certified_order == Q.order());
  }
}

TEST_CASE("two parallel morphisms give a circle") {
  // x, y, and a, b : x -> y
  FinCategory C({"x", "y"}, {{0, 0, "1x"}, {1, 1, "1y"}, {0, 1, "a"}, {0, 1, "b"}}, {0, 1},
                [](MorphismId g, MorphismId f) { return g <= 1 ? f : g; });
  CHECK(C.check_laws());
  auto const F = nerve_pi1_presentation(C, 0);
  CHECK(F.generator_count() == 2);
  CHECK(abelianization(F) == std::vector<std::int64_t>{0});
  CHECK(simplify(F) == parse_fp("fp:1:"));
  CHECK(identify_finite(F, {PermGroup::trivial()}).status == IdStatus::Inconclusive);
}

TEST_CASE("triangle poset is contractible") {
  auto const C = poset_category({{true, true, true}, {false, true, true}, {false, false, true}});
  CHECK(C.morphism_count() == 6);
  auto const F = simplify(nerve_pi1_presentation(C, 0));
  CHECK(certified_order(F) == 1);
}

TEST_CASE("categories with a terminal object have trivial pi1") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto leq = chain_with_top(2 + trial % 5, rng);
    auto const C = poset_category(leq);
    for (ObjectId x = 0; x < C.object_count(); ++x) {
      CHECK(certified_order(nerve_pi1_presentation(C, x)) == 1);
    }
    // and the opposite preorder has an initial object
    auto op = leq;
    for (std::size_t a = 0; a < leq.size(); ++a) {
      for (std::size_t b = 0; b < leq.size(); ++b) {
        op[a][b] = leq[b][a];
      }
    }
    CHECK(certified_order(nerve_pi1_presentation(poset_category(op), 0)) == 1);
  }
  // an orbit category with G/G, which is terminal
  auto const S4 = group_from_catalogue("S4");
  auto       seed = elementary_abelian_p_subgroups(S4, 2, false);
  seed.push_back(Subgroup::whole(S4));
  auto const O = orbit_category(close_family(S4, seed, false));
  CHECK(certified_order(nerve_pi1_presentation(O.category, 0)) == 1);
}

TEST_CASE("nerve pi1 does not depend on the basepoint") {
  std::vector<FinCategory> cats;
  for (auto spec : {"S3", "D8", "C2xC2", "A4"}) {
    auto const G = group_from_catalogue(spec);
    for (unsigned p : {2u, 3u}) {
      auto const E = elementary_abelian_p_subgroups(G, p, false);
      if (!E.empty()) {
        cats.push_back(reduced_orbit_category(close_family(G, E, true)).category);
        cats.push_back(orbit_category(close_family(G, E, false)).category);
      }
    }
  }
  cats.push_back(action_groupoid(group_from_catalogue("S3")).category());
  for (auto const& C : cats) {
    for (auto const& comp : nerve_pi0(C)) {
      auto const base = regular_image(nerve_pi1_presentation(C, comp.front()));
      for (ObjectId x : comp) {
        auto const F = nerve_pi1_presentation(C, x);
        auto const r = identify_finite(F, {base});
        CHECK(r.status == IdStatus::Identified);
      }
    }
  }
  CHECK_THROWS_AS(nerve_pi1_presentation(cats.front(), 99), BadBasepoint);
}

TEST_CASE("poset categories") {
  auto const C = poset_category({{true, true}, {false, true}});
  CHECK(C.morphism_count() == 3);
  auto const f = C.hom(0, 1);
  REQUIRE(f.size() == 1);
  CHECK(C.morphism(f.front()).label == "0<=1");
  CHECK_THROWS_AS(poset_category({{false}}), std::invalid_argument);
  CHECK_THROWS_AS(poset_category({{true, true, false}, {false, true, true}, {false, false, true}}),
                  std::invalid_argument);
}
