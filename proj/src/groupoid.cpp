#include "galois/groupoid.hpp"

#include <algorithm>
#include <string>

#include "galois/error.hpp"
#include "galois/homomorphisms.hpp"
#include "galois/limits.hpp"

namespace galois {

  FinGroupoid delooping(PermGroup const& G) {
    std::vector<Morphism> morphisms;
    for (Elem g = 0; g < G.order(); ++g) {
      morphisms.push_back({0, 0, G.element(g).to_cycle_string()});
    }
    return FinGroupoid(FinCategory({"*"},
                                   std::move(morphisms),
                                   {PermGroup::identity()},
                                   [&](MorphismId g, MorphismId f) { return G.mul(g, f); }));
  }

  FinGroupoid action_groupoid(PermGroup const& G) {
    std::size_t const        n = G.degree();
    std::size_t const        m = G.order();
    std::vector<std::string> objects;
    std::vector<Morphism>    morphisms;
    std::vector<MorphismId>  identities;
    for (std::size_t x = 0; x < n; ++x) {
      objects.push_back(std::to_string(x + 1));
      identities.push_back(static_cast<MorphismId>(x * m));
      for (Elem g = 0; g < m; ++g) {
        morphisms.push_back({static_cast<ObjectId>(x),
                             G.element(g)[x],
                             G.element(g).to_cycle_string()});
      }
    }
    auto compose = [&](MorphismId h, MorphismId f) {
      std::size_t const x  = f / m;
      Elem const        gf = f % m;
      Elem const        gh = h % m;
      return static_cast<MorphismId>(x * m + G.mul(gh, gf));
    };
    return FinGroupoid(
        FinCategory(std::move(objects), std::move(morphisms), std::move(identities), compose));
  }

  std::vector<std::vector<ObjectId>> pi0(FinGroupoid const& X) {
    return connected_components(X.category());
  }

  PermGroup pi1(FinGroupoid const& X, ObjectId basepoint) {
    auto const& C = X.category();
    if (basepoint >= C.object_count()) {
      throw BadBasepoint("pi1: basepoint is not an object");
    }
    auto const incoming = C.incoming(basepoint);
    std::vector<std::uint32_t> pos(C.morphism_count(), 0);
    for (std::size_t i = 0; i < incoming.size(); ++i) {
      pos[incoming[i]] = static_cast<std::uint32_t>(i);
    }
    std::vector<Perm> gens;
    for (MorphismId a : C.hom(basepoint, basepoint)) {
      std::vector<Point> img(incoming.size());
      for (std::size_t i = 0; i < incoming.size(); ++i) {
        img[i] = pos[C.compose(a, incoming[i])];
      }
      gens.emplace_back(std::move(img));
    }
    return PermGroup(incoming.size(), std::move(gens));
  }

  HomGroupoidReport hom_groupoid(PermGroup const& G, PermGroup const& H) {
    HomGroupoidReport report{G, H, {}};
    for (auto& cls : conjugacy_classes_of_homs(G, H)) {
      auto const& rep = cls.front();
      report.components.push_back(
          {rep, centralizer(H, rep.generator_images()), cls.size()});
    }
    return report;
  }

  FinGroupoid hom_groupoid_bruteforce(PermGroup const& G, PermGroup const& H) {
    auto const  BG   = delooping(G);
    auto const  BH   = delooping(H);
    auto const& CG   = BG.category();
    auto const& CH   = BH.category();
    auto const  gens = G.generator_elems();

    double candidates = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      candidates *= static_cast<double>(H.order());
    }
    if (candidates > static_cast<double>(limits().max_functor_candidates)) {
      throw SizeError("functor enumeration exceeds the candidate bound");
    }

    std::vector<std::vector<MorphismId>> functors;  // full morphism maps
    std::vector<MorphismId>              assignment(gens.size(), 0);
    while (true) {
      std::vector<MorphismId> F(G.order(), static_cast<MorphismId>(-1));
      std::vector<MorphismId> queue{CG.identity(0)};
      F[CG.identity(0)] = CH.identity(0);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
          MorphismId y = CG.compose(gens[i], queue[q]);
          if (F[y] == static_cast<MorphismId>(-1)) {
            F[y] = CH.compose(assignment[i], F[queue[q]]);
            queue.push_back(y);
          }
        }
      }
      bool functor = true;
      for (MorphismId a = 0; a < G.order() && functor; ++a) {
        for (MorphismId b = 0; b < G.order(); ++b) {
          if (F[CG.compose(a, b)] != CH.compose(F[a], F[b])) {
            functor = false;
            break;
          }
        }
      }
      if (functor) {
        functors.push_back(std::move(F));
      }
      std::size_t k = gens.size();
      while (k > 0 && ++assignment[k - 1] == H.order()) {
        assignment[k - 1] = 0;
        --k;
      }
      if (k == 0) {
        break;
      }
    }

    std::size_t const        n = functors.size();
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < n; ++i) {
      objects.push_back("F" + std::to_string(i));
    }
    // morphism (i, j, x): natural transformation F_i => F_j with component x
    struct Nat {
      std::size_t from, to;
      MorphismId  x;
    };
    std::vector<Nat> nats;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (MorphismId x = 0; x < H.order(); ++x) {
          bool natural = true;
          for (MorphismId g = 0; g < G.order() && natural; ++g) {
            natural = CH.compose(x, functors[i][g]) == CH.compose(functors[j][g], x);
          }
          if (natural) {
            nats.push_back({i, j, x});
          }
        }
      }
    }
    std::vector<Morphism>   morphisms;
    std::vector<MorphismId> identities(n, 0);
    // index lookup: (from, to, x) -> morphism id
    std::vector<std::int64_t> lookup(n * n * H.order(), -1);
    for (std::size_t k = 0; k < nats.size(); ++k) {
      auto const& t = nats[k];
      morphisms.push_back({static_cast<ObjectId>(t.from),
                           static_cast<ObjectId>(t.to),
                           std::to_string(t.x)});
      lookup[(t.from * n + t.to) * H.order() + t.x] = static_cast<std::int64_t>(k);
      if (t.from == t.to && t.x == CH.identity(0)) {
        identities[t.from] = static_cast<MorphismId>(k);
      }
    }
    auto compose = [&](MorphismId g, MorphismId f) {
      auto const& a = nats[f];
      auto const& b = nats[g];
      auto        x = CH.compose(b.x, a.x);
      return static_cast<MorphismId>(lookup[(a.from * n + b.to) * H.order() + x]);
    };
    return FinGroupoid(
        FinCategory(std::move(objects), std::move(morphisms), std::move(identities), compose));
  }

}  // namespace galois
