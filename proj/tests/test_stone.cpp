#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "galois/error.hpp"
#include "galois/limits.hpp"
#include "galois/stone.hpp"
#include "oracles.hpp"

using namespace galois;
using Mask = BooleanAlgebra::Mask;

namespace {
  // Closure of some subsets of a universe under meet, join and complement.
  BooleanAlgebra generated(std::size_t universe, std::vector<Mask> gens) {
    Mask const     top = universe == 64 ? ~Mask{0} : (Mask{1} << universe) - 1;
    std::set<Mask> all(gens.begin(), gens.end());
    all.insert(0);
    all.insert(top);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> snap(all.begin(), all.end());
      for (Mask a : snap) {
        grew |= all.insert(top & ~a).second;
        for (Mask b : snap) {
          grew |= all.insert(a & b).second;
          grew |= all.insert(a | b).second;
        }
      }
    }
    return BooleanAlgebra(universe, {all.begin(), all.end()});
  }

  // Operation tables of the power set of n points with the elements listed
  // in the order given by perm (perm[i] is the mask of element i).
  BooleanAlgebra from_permuted_tables(std::size_t n, std::vector<Mask> const& perm) {
    std::size_t const size = perm.size();
    auto idx = [&](Mask m) { return static_cast<std::size_t>(std::find(perm.begin(), perm.end(), m) - perm.begin()); };
    Mask const top = (Mask{1} << n) - 1;
    std::vector<std::vector<std::size_t>> meet(size, std::vector<std::size_t>(size));
    auto join = meet;
    std::vector<std::size_t> comp(size);
    for (std::size_t a = 0; a < size; ++a) {
      comp[a] = idx(top & ~perm[a]);
      for (std::size_t b = 0; b < size; ++b) {
        meet[a][b] = idx(perm[a] & perm[b]);
        join[a][b] = idx(perm[a] | perm[b]);
      }
    }
    return BooleanAlgebra::from_tables(size, meet, join, comp, idx(0), idx(top));
  }
}  // namespace

TEST_CASE("spec examples") {
  CHECK(spec(algebra_of_set(1)).size() == 1);
  CHECK(spec(algebra_of_set(4)).size() == 4);
  // free Boolean algebra on two generators: subsets of the four valuations
  // (bit v of a mask is the valuation v), generated by "x true", "y true"
  auto const F = generated(4, {0b1010, 0b1100});
  CHECK(F.size() == 16);
  CHECK(spec(F).size() == 4);
  for (auto a : spec(F)) {
    CHECK(std::popcount(F.element(a)) == 1);
  }
}

TEST_CASE("algebra_of_set examples") {
  auto const E = algebra_of_set(0);
  CHECK(E.size() == 1);
  CHECK(E.bottom() == E.top());
  CHECK(algebra_of_set(1).size() == 2);
  auto const B3 = algebra_of_set(3);
  CHECK(B3.size() == 8);
  CHECK(spec(B3).size() == 3);
  CHECK(boolean_isomorphism(algebra_of_set(spec(B3).size()), B3).has_value());
  CHECK_THROWS_AS(algebra_of_set(17), SizeError);
}

TEST_CASE("Stone roundtrips up to four atoms") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const B = algebra_of_set(n);
    CHECK(spec(B).size() == n);
    CHECK(B.size() == std::size_t{1} << n);
  }
  // algebras whose atoms are not singletons
  std::vector<BooleanAlgebra> coarse{
      generated(6, {0b000011, 0b000100}),
      generated(5, {0b11111}),
      generated(8, {0b00001111, 0b00110011, 0b01010101}),
      generated(7, {0b0000001, 0b0000110, 0b0111000}),
      generated(3, {}),
  };
  for (auto const& B : coarse) {
    auto const atoms = spec(B);
    CHECK(B.size() == std::size_t{1} << atoms.size());
    auto const iso = boolean_isomorphism(algebra_of_set(atoms.size()), B);
    REQUIRE(iso.has_value());
    auto const P = algebra_of_set(atoms.size());
    for (std::size_t a = 0; a < P.size(); ++a) {
      CHECK((*iso)[P.complement(a)] == B.complement((*iso)[a]));
      for (std::size_t b = 0; b < P.size(); ++b) {
        CHECK((*iso)[P.meet(a, b)] == B.meet((*iso)[a], (*iso)[b]));
        CHECK((*iso)[P.join(a, b)] == B.join((*iso)[a], (*iso)[b]));
      }
    }
    CHECK(spec(algebra_of_set(atoms.size())).size() == atoms.size());
  }
  CHECK_FALSE(boolean_isomorphism(algebra_of_set(2), algebra_of_set(3)).has_value());
}

TEST_CASE("Boolean identities hold") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const B = algebra_of_set(n);
    for (std::size_t a = 0; a < B.size(); ++a) {
      CHECK(B.meet(a, a) == a);
      CHECK(B.join(a, B.complement(a)) == B.top());
      CHECK(B.meet(a, B.complement(a)) == B.bottom());
      CHECK(B.leq(B.bottom(), a));
      CHECK(B.leq(a, B.top()));
    }
  }
}

TEST_CASE("idempotent decomposition examples") {
  CHECK(idempotent_decompositions(algebra_of_set(1)).size() == 1);
  CHECK(idempotent_decompositions(algebra_of_set(2)).size() == 2);
  CHECK(idempotent_decompositions(algebra_of_set(3)).size() == 5);
}

TEST_CASE("decompositions are counted by Bell numbers") {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto const B     = algebra_of_set(n);
    auto const decos = idempotent_decompositions(B);
    CHECK(decos.size() == oracle::bell(n));
    std::set<std::vector<std::size_t>> distinct(decos.begin(), decos.end());
    CHECK(distinct.size() == decos.size());
    for (auto const& d : decos) {
      Mask joined = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(B.element(d[i]) != 0);
        joined |= B.element(d[i]);
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          CHECK((B.element(d[i]) & B.element(d[j])) == 0);
        }
      }
      CHECK(joined == B.element(B.top()));
    }
  }
}

TEST_CASE("operation tables are checked") {
  // the power set of two points presented with shuffled indices
  auto const B = from_permuted_tables(2, {0b11, 0b00, 0b10, 0b01});
  CHECK(B.size() == 4);
  CHECK(spec(B).size() == 2);
  auto const C = from_permuted_tables(3, {5, 0, 7, 1, 2, 6, 3, 4});
  CHECK(boolean_isomorphism(C, algebra_of_set(3)).has_value());

  // a three-element chain is a lattice without complements
  std::vector<std::vector<std::size_t>> meet{{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  std::vector<std::vector<std::size_t>> join{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  CHECK_THROWS_AS(BooleanAlgebra::from_tables(3, meet, join, {2, 1, 0}, 0, 2), MalformedAlgebra);
  // wrong table shape
  CHECK_THROWS_AS(BooleanAlgebra::from_tables(2, {{0, 0}}, {{0, 1}, {1, 1}}, {1, 0}, 0, 1),
                  MalformedAlgebra);
  // meet and join swapped
  CHECK_THROWS_AS(BooleanAlgebra::from_tables(2, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, {1, 0}, 0, 1),
                  MalformedAlgebra);
}

TEST_CASE("mask algebras are validated") {
  CHECK_THROWS_AS(BooleanAlgebra(2, {0b00, 0b01, 0b11}), MalformedAlgebra);
  CHECK_THROWS_AS(BooleanAlgebra(2, {0b01, 0b11}), MalformedAlgebra);
  CHECK_THROWS_AS(BooleanAlgebra(2, {0b00, 0b01, 0b10, 0b11, 0b100}), MalformedAlgebra);
  CHECK_NOTHROW(BooleanAlgebra(2, {0b00, 0b11}));
}

TEST_CASE("JSON roundtrip") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const B = algebra_of_set(n);
    auto const C = boolean_algebra_from_json(to_json(B));
    CHECK(C.universe() == B.universe());
    CHECK(std::equal(B.elements().begin(), B.elements().end(), C.elements().begin(), C.elements().end()));
  }
  auto const tables = boolean_algebra_from_json(
      R"({"size":2,"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],"complement":[1,0],"bottom":0,"top":1})");
  CHECK(tables.size() == 2);
  CHECK_THROWS_AS(boolean_algebra_from_json("{"), ParseError);
  CHECK_THROWS_AS(boolean_algebra_from_json(R"({"schema":1,"universe":2})"), ParseError);
  CHECK_THROWS_AS(boolean_algebra_from_json(R"({"schema":1,"universe":2,"elements":[0,1,3]})"),
                  MalformedAlgebra);
}
