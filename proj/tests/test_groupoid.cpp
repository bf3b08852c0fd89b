#include <doctest.h>

#include <algorithm>

#include "galois/catalogue.hpp"
#include "galois/error.hpp"
#include "galois/groupoid.hpp"
#include "galois/homomorphisms.hpp"
#include "galois/limits.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {
  // n objects with exactly one morphism between any two.
  FinGroupoid chaotic(std::size_t n) {
    std::vector<std::string> objects;
    std::vector<Morphism>    morphisms;
    std::vector<MorphismId>  ids(n);
    for (ObjectId a = 0; a < n; ++a) {
      objects.push_back(std::to_string(a));
      for (ObjectId b = 0; b < n; ++b) {
        if (a == b) {
          ids[a] = static_cast<MorphismId>(morphisms.size());
        }
        morphisms.push_back({a, b, std::to_string(a) + "->" + std::to_string(b)});
      }
    }
    auto const m = static_cast<MorphismId>(n);
    auto compose = [m](MorphismId g, MorphismId f) { return (f / m) * m + g % m; };
    return FinGroupoid(FinCategory(objects, morphisms, ids, compose));
  }

  std::vector<PermGroup> catalogue_upto(std::size_t n) {
    std::vector<PermGroup> out;
    for (auto const& s : catalogue_specs(n)) {
      out.push_back(group_from_catalogue(s));
    }
    return out;
  }
}  // namespace

TEST_CASE("delooping examples") {
  auto const T = delooping(PermGroup::trivial());
  CHECK(T.category().object_count() == 1);
  CHECK(T.category().morphism_count() == 1);
  CHECK(delooping(group_from_catalogue("C2")).category().morphism_count() == 2);

  auto const S3 = group_from_catalogue("S3");
  auto const B  = delooping(S3);
  CHECK(B.category().morphism_count() == 6);
  bool commutative = true;
  for (MorphismId f = 0; f < 6; ++f) {
    for (MorphismId g = 0; g < 6; ++g) {
      auto const gf = B.category().compose(g, f);
      CHECK(S3.element(gf) == S3.element(g) * S3.element(f));
      commutative = commutative && gf == B.category().compose(f, g);
    }
  }
  CHECK_FALSE(commutative);
  CHECK(B.category().check_laws());
}

TEST_CASE("pi0 examples") {
  CHECK(pi0(delooping(group_from_catalogue("S4"))).size() == 1);
  auto const U = FinCategory::disjoint_union({delooping(group_from_catalogue("C2")).category(),
                                              delooping(group_from_catalogue("S3")).category(),
                                              delooping(PermGroup::trivial()).category()});
  CHECK(pi0(FinGroupoid(U)).size() == 3);
  CHECK(pi0(FinGroupoid()).empty());
  CHECK(pi0(action_groupoid(group_from_catalogue("perm:5:(1 2);(3 4)"))).size() == 3);
}

TEST_CASE("pi1 examples") {
  CHECK(pi1(chaotic(4), 2).order() == 1);
  auto const S3 = group_from_catalogue("S3");
  auto const A  = action_groupoid(S3);
  CHECK(A.category().object_count() == 3);
  CHECK(pi1(A, 0).order() == 2);
  CHECK_THROWS_AS(pi1(A, 3), BadBasepoint);
  CHECK_THROWS_AS(pi1(FinGroupoid(), 0), BadBasepoint);
}

TEST_CASE("pi1 of the delooping recovers the group") {
  for (auto const& G : catalogue_upto(24)) {
    auto const P = pi1(delooping(G), 0);
    CHECK(P.order() == G.order());
    CHECK(are_isomorphic(P, G));
  }
}

TEST_CASE("automorphism groups agree across a component") {
  for (auto spec : {"S3", "S4", "D8", "perm:6:(1 2 3);(4 5)", "perm:5:(1 2)(3 4 5)", "A4"}) {
    auto const X = action_groupoid(group_from_catalogue(spec));
    for (auto const& comp : pi0(X)) {
      auto const base = pi1(X, comp.front());
      for (auto x : comp) {
        CHECK(are_isomorphic(pi1(X, x), base));
      }
    }
  }
}

TEST_CASE("groupoid inverses and laws") {
  for (auto spec : {"S3", "C4", "perm:4:(1 2);(3 4)"}) {
    auto const X = action_groupoid(group_from_catalogue(spec));
    auto const& C = X.category();
    CHECK(C.check_laws());
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      CHECK(C.is_identity(C.compose(X.inverse(f), f)));
    }
  }
  CHECK(chaotic(3).category().check_laws());
}

TEST_CASE("a category with a non-invertible morphism is not a groupoid") {
  FinCategory C({"x", "y"}, {{0, 0, "1x"}, {1, 1, "1y"}, {0, 1, "f"}}, {0, 1},
                [](MorphismId g, MorphismId f) { return g == 0 || g == 1 ? f : g; });
  CHECK_THROWS_AS(FinGroupoid{C}, std::invalid_argument);
}

TEST_CASE("hom groupoid examples") {
  auto const C2 = group_from_catalogue("C2");
  auto const S3 = group_from_catalogue("S3");
  {
    auto const r = hom_groupoid(C2, C2);
    REQUIRE(r.components.size() == 2);
    for (auto const& c : r.components) {
      CHECK(c.automorphisms.order() == 2);
    }
  }
  {
    auto const r = hom_groupoid(C2, S3);
    REQUIRE(r.components.size() == 2);
    std::vector<std::size_t> orders;
    for (auto const& c : r.components) {
      orders.push_back(c.automorphisms.order());
      if (c.representative.image().is_trivial()) {
        CHECK(c.automorphisms.order() == 6);
      } else {
        CHECK(c.automorphisms == c.representative.image());
        CHECK(c.size == 3);
      }
    }
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<std::size_t>{2, 6});
  }
  {
    auto const r = hom_groupoid(S3, PermGroup::trivial());
    REQUIRE(r.components.size() == 1);
    CHECK(r.components.front().automorphisms.order() == 1);
  }
}

TEST_CASE("brute-force functor groupoid examples") {
  auto const C2 = group_from_catalogue("C2");
  {
    auto const X = hom_groupoid_bruteforce(C2, C2);
    CHECK(X.category().object_count() == 2);
    CHECK(X.category().morphism_count() == 4);
    CHECK(pi0(X).size() == 2);
    CHECK(X.category().hom(0, 1).empty());
  }
  {
    auto const S3 = group_from_catalogue("S3");
    auto const X  = hom_groupoid_bruteforce(PermGroup::trivial(), S3);
    CHECK(X.category().object_count() == 1);
    CHECK(X.category().morphism_count() == 6);
  }
  {
    auto const X = hom_groupoid_bruteforce(group_from_catalogue("C3"), C2);
    CHECK(X.category().object_count() == 1);
    CHECK(pi1(X, 0).order() == 2);
  }
  Limits l;
  l.max_functor_candidates = 10;
  ScopedLimits scoped(l);
  CHECK_THROWS_AS(hom_groupoid_bruteforce(group_from_catalogue("C2xC2"), group_from_catalogue("S3")),
                  SizeError);
}

TEST_CASE("hom groupoid components are the conjugacy classes") {
  for (auto gs : {"C2", "C3", "S3", "C2xC2", "C4"}) {
    for (auto hs : {"S3", "D8", "Q8", "C6"}) {
      auto const G = group_from_catalogue(gs);
      auto const H = group_from_catalogue(hs);
      auto const r = hom_groupoid(G, H);
      CHECK(r.components.size() == oracle::hom_class_count(G, H));
      std::size_t total = 0;
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        total += r.components[i].size;
        for (std::size_t j = i + 1; j < r.components.size(); ++j) {
          CHECK_FALSE(are_conjugate_homs(r.components[i].representative,
                                         r.components[j].representative));
        }
        // automorphisms at f: the centralizer of the image, by the naive count
        std::vector<oracle::Images> img;
        auto const                  image = r.components[i].representative.image();
        for (Elem x : image.members()) {
          img.push_back(oracle::images(H.element(x)));
        }
        CHECK(r.components[i].automorphisms.order() == oracle::centralizer_order(H, img));
      }
      CHECK(total == oracle::hom_tuples(G, H).size());
    }
  }
}

TEST_CASE("hom groupoid formula agrees with the functor groupoid") {
  auto const groups = catalogue_upto(12);
  for (auto const& G : groups) {
    for (auto const& H : groups) {
      auto const r = hom_groupoid(G, H);
      auto const X = hom_groupoid_bruteforce(G, H);
      auto const comps = pi0(X);
      REQUIRE(comps.size() == r.components.size());
      std::vector<bool> used(comps.size(), false);
      for (auto const& c : r.components) {
        auto const aut = c.automorphisms.as_group();
        bool       hit = false;
        for (std::size_t k = 0; k < comps.size() && !hit; ++k) {
          if (!used[k] && comps[k].size() == c.size && are_isomorphic(pi1(X, comps[k].front()), aut)) {
            used[k] = hit = true;
          }
        }
        CHECK(hit);
      }
    }
  }
}
