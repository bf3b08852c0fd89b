#include "galois/orbit_nerve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "galois/error.hpp"
#include "galois/limits.hpp"

namespace galois {

  SubgroupFamily make_family(PermGroup const& G, std::vector<Subgroup> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    SubgroupFamily A{G, std::move(members)};
    A.contains_trivial    = std::any_of(A.members.begin(), A.members.end(),
                                     [](Subgroup const& H) { return H.is_trivial(); });
    auto in_family        = [&](Subgroup const& H) {
      return std::binary_search(A.members.begin(), A.members.end(), H);
    };
    A.conjugation_closed  = true;
    A.intersection_closed = true;
    for (std::size_t i = 0; i < A.members.size(); ++i) {
      for (Elem g = 0; g < G.order() && A.conjugation_closed; ++g) {
        A.conjugation_closed = in_family(A.members[i].conjugate(g));
      }
      for (std::size_t j = i + 1; j < A.members.size() && A.intersection_closed; ++j) {
        A.intersection_closed = in_family(A.members[i].intersect(A.members[j]));
      }
    }
    return A;
  }

  SubgroupFamily close_family(PermGroup const&             G,
                              std::vector<Subgroup> const& seed,
                              bool                         drop_trivial) {
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup>       list;
    auto add = [&](Subgroup H) {
      std::vector<Elem> key(H.members().begin(), H.members().end());
      if (seen.insert(std::move(key)).second) {
        if (list.size() >= limits().max_subgroups) {
          throw SizeError("subgroup family exceeds " + std::to_string(limits().max_subgroups)
                          + " members");
        }
        list.push_back(std::move(H));
      }
    };
    for (auto const& H : seed) {
      add(H);
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (Elem s : G.generator_elems()) {
        add(list[i].conjugate(s));
      }
      for (std::size_t j = 0; j < i; ++j) {
        add(list[i].intersect(list[j]));
      }
    }
    if (drop_trivial) {
      std::erase_if(list, [](Subgroup const& H) { return H.is_trivial(); });
    }
    return make_family(G, std::move(list));
  }

  namespace {
    std::string subgroup_label(Subgroup const& H) {
      if (H.is_trivial()) {
        return "G/1";
      }
      if (H.order() == H.parent().order()) {
        return "G/G";
      }
      std::string s = "G/<";
      auto const  gens = H.generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        s += (i ? ", " : "") + H.parent().element(gens[i]).to_cycle_string();
      }
      return s + ">";
    }

    struct Cosets {
      std::vector<std::uint32_t> of;   // element -> coset of xK
      std::vector<Elem>          rep;  // coset -> least element
    };

    Cosets left_cosets(Subgroup const& K) {
      auto const& G = K.parent();
      Cosets      c;
      c.of.assign(G.order(), UINT32_MAX);
      for (Elem x = 0; x < G.order(); ++x) {
        if (c.of[x] != UINT32_MAX) {
          continue;
        }
        auto const id = static_cast<std::uint32_t>(c.rep.size());
        c.rep.push_back(x);
        for (Elem k : K.members()) {
          c.of[G.mul(x, k)] = id;
        }
      }
      return c;
    }
  }  // namespace

  OrbitCategory orbit_category(SubgroupFamily const& A) {
    if (A.members.empty()) {
      throw EmptyFamily("orbit category of an empty family");
    }
    auto const&       G    = A.group;
    auto const&       subs = A.members;
    std::size_t const n    = subs.size();

    std::vector<Cosets> cosets;
    for (auto const& K : subs) {
      cosets.push_back(left_cosets(K));
    }
    std::vector<std::vector<Elem>> gens;
    for (auto const& H : subs) {
      gens.push_back(H.generators());
    }

    std::vector<std::string> objects;
    for (auto const& H : subs) {
      objects.push_back(subgroup_label(H));
    }
    std::vector<Morphism>   morphisms;
    std::vector<Elem>       rep_of;
    std::vector<MorphismId> identities(n);
    // slot[h * n + k] indexes table, which maps a coset of K to a morphism
    std::vector<std::int64_t>              slot(n * n, -1);
    std::vector<std::vector<std::int64_t>> table;
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t k = 0; k < n; ++k) {
        auto const&               K = subs[k];
        std::vector<std::int64_t> row(cosets[k].rep.size(), -1);
        bool                      any = false;
        for (std::size_t c = 0; c < row.size(); ++c) {
          Elem const g  = cosets[k].rep[c];
          Elem const gi = G.inv(g);
          bool       ok = true;
          for (Elem x : gens[h]) {
            if (!K.contains(G.mul(gi, G.mul(x, g)))) {
              ok = false;
              break;
            }
          }
          if (!ok) {
            continue;
          }
          if (morphisms.size() >= UINT32_MAX) {
            throw SizeError("orbit category has too many morphisms");
          }
          row[c] = static_cast<std::int64_t>(morphisms.size());
          if (h == k && g == PermGroup::identity()) {
            identities[h] = static_cast<MorphismId>(morphisms.size());
          }
          morphisms.push_back({static_cast<ObjectId>(h),
                               static_cast<ObjectId>(k),
                               G.element(g).to_cycle_string()});
          rep_of.push_back(g);
          any = true;
        }
        if (any) {
          slot[h * n + k] = static_cast<std::int64_t>(table.size());
          table.push_back(std::move(row));
        }
      }
    }
    std::vector<ObjectId> src, dst;
    for (auto const& m : morphisms) {
      src.push_back(m.source);
      dst.push_back(m.target);
    }
    // (g'L) o (gK) = g g' L
    auto compose = [&](MorphismId second, MorphismId first) {
      auto const  h  = src[first];
      auto const  l  = dst[second];
      Elem const  gg = G.mul(rep_of[first], rep_of[second]);
      auto const& row = table[static_cast<std::size_t>(slot[h * n + l])];
      return static_cast<MorphismId>(row[cosets[l].of[gg]]);
    };
    FinCategory C(std::move(objects), std::move(morphisms), std::move(identities), compose);
    return {std::move(C), subs, std::move(rep_of)};
  }

  OrbitCategory reduced_orbit_category(SubgroupFamily const& A) {
    std::vector<Subgroup> kept;
    for (auto const& H : A.members) {
      if (!H.is_trivial()) {
        kept.push_back(H);
      }
    }
    if (kept.empty()) {
      throw EmptyFamily("family has no nontrivial members");
    }
    return orbit_category(make_family(A.group, std::move(kept)));
  }

  std::vector<std::vector<ObjectId>> nerve_pi0(FinCategory const& C) {
    return connected_components(C);
  }

  FpGroup nerve_pi1_presentation(FinCategory const& C, ObjectId basepoint) {
    if (basepoint >= C.object_count()) {
      throw BadBasepoint("basepoint " + std::to_string(basepoint) + " is not an object");
    }
    std::vector<ObjectId> comp;
    for (auto& c : connected_components(C)) {
      if (std::binary_search(c.begin(), c.end(), basepoint)) {
        comp = std::move(c);
        break;
      }
    }
    std::vector<bool> in_comp(C.object_count(), false);
    for (ObjectId x : comp) {
      in_comp[x] = true;
    }
    // letters are 1-based; 0 marks identities and other components
    std::vector<Letter> gen(C.morphism_count(), 0);
    Letter              count = 0;
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      if (in_comp[C.morphism(f).source] && !C.is_identity(f)) {
        gen[f] = ++count;
      }
    }

    std::vector<Word> relators;
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      if (gen[f] == 0) {
        continue;
      }
      auto const out  = C.outgoing(C.morphism(f).target);
      auto const comp_after = C.composites_after(f);
      for (std::size_t i = 0; i < out.size(); ++i) {
        MorphismId const g = out[i];
        if (gen[g] == 0) {
          continue;
        }
        MorphismId const h = comp_after[i];
        Word             w{gen[g], gen[f]};
        if (gen[h] != 0) {
          w.push_back(-gen[h]);
        }
        relators.push_back(std::move(w));
      }
    }

    std::vector<bool>     visited(C.object_count(), false);
    std::vector<ObjectId> queue{comp.front()};
    visited[comp.front()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ObjectId const          x = queue[head];
      std::vector<MorphismId> touching(C.outgoing(x).begin(), C.outgoing(x).end());
      touching.insert(touching.end(), C.incoming(x).begin(), C.incoming(x).end());
      std::sort(touching.begin(), touching.end());
      for (MorphismId f : touching) {
        auto const& m     = C.morphism(f);
        ObjectId    other = m.source == x ? m.target : m.source;
        if (!visited[other]) {
          visited[other] = true;
          queue.push_back(other);
          relators.push_back({gen[f]});
        }
      }
    }
    return FpGroup(static_cast<std::size_t>(count), std::move(relators));
  }

  FinCategory poset_category(std::vector<std::vector<bool>> const& leq) {
    std::size_t const n = leq.size();
    for (std::size_t a = 0; a < n; ++a) {
      if (leq[a].size() != n || !leq[a][a]) {
        throw std::invalid_argument("poset_category: relation is not reflexive");
      }
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[a][b] && leq[b][c] && !leq[a][c]) {
            throw std::invalid_argument("poset_category: relation is not transitive");
          }
        }
      }
    }
    std::vector<std::string>               objects;
    std::vector<Morphism>                  morphisms;
    std::vector<MorphismId>                identities(n);
    std::vector<std::vector<MorphismId>>   id(n, std::vector<MorphismId>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      objects.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[a][b]) {
          id[a][b] = static_cast<MorphismId>(morphisms.size());
          if (a == b) {
            identities[a] = id[a][b];
          }
          morphisms.push_back({static_cast<ObjectId>(a),
                               static_cast<ObjectId>(b),
                               std::to_string(a) + "<=" + std::to_string(b)});
        }
      }
    }
    std::vector<std::size_t> morphisms_src, morphisms_dst;
    for (auto const& m : morphisms) {
      morphisms_src.push_back(m.source);
      morphisms_dst.push_back(m.target);
    }
    return FinCategory(std::move(objects),
                       std::move(morphisms),
                       std::move(identities),
                       [&](MorphismId g, MorphismId f) {
                         return id[morphisms_src[f]][morphisms_dst[g]];
                       });
  }

}  // namespace galois
