#include "galois/homomorphisms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "galois/error.hpp"
#include "galois/limits.hpp"

namespace galois {

  std::vector<GroupHom> homomorphisms(PermGroup const& G, PermGroup const& H) {
    auto const gens = G.generator_elems();
    std::vector<std::vector<Elem>> candidates(gens.size());
    double                         total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const ord = G.element_order(gens[i]);
      for (Elem y = 0; y < H.order(); ++y) {
        if (ord % H.element_order(y) == 0) {
          candidates[i].push_back(y);
        }
      }
      total *= static_cast<double>(candidates[i].size());
    }
    if (total > static_cast<double>(limits().max_hom_candidates)) {
      throw SizeError("homomorphism search exceeds the candidate bound");
    }

    std::vector<GroupHom>    out;
    std::vector<std::size_t> pos(gens.size(), 0);
    while (true) {
      std::vector<Elem> images(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i) {
        images[i] = candidates[i][pos[i]];
      }
      if (auto f = GroupHom::extend(G, H, std::move(images))) {
        out.push_back(std::move(*f));
      }
      // odometer, last position fastest
      std::size_t k = gens.size();
      while (k > 0 && ++pos[k - 1] == candidates[k - 1].size()) {
        pos[k - 1] = 0;
        --k;
      }
      if (k == 0) {
        break;
      }
    }
    return out;
  }

  namespace {
    std::vector<Elem> conjugated_images(GroupHom const& f, Elem x) {
      auto const&       H = f.target();
      std::vector<Elem> out;
      for (Elem y : f.generator_images()) {
        out.push_back(H.conj(x, y));
      }
      return out;
    }
  }  // namespace

  bool are_conjugate_homs(GroupHom const& f, GroupHom const& g) {
    if (!f.source().same_as(g.source()) || !f.target().same_as(g.target())) {
      throw std::invalid_argument("are_conjugate_homs: homomorphisms do not share groups");
    }
    auto const target = std::vector<Elem>(g.generator_images().begin(),
                                          g.generator_images().end());
    for (Elem x = 0; x < f.target().order(); ++x) {
      if (conjugated_images(f, x) == target) {
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<GroupHom>> conjugacy_classes_of_homs(PermGroup const& G,
                                                               PermGroup const& H) {
    auto const homs = homomorphisms(G, H);
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t i = 0; i < homs.size(); ++i) {
      index.emplace(std::vector<Elem>(homs[i].generator_images().begin(),
                                      homs[i].generator_images().end()),
                    i);
    }
    std::vector<bool>                  used(homs.size(), false);
    std::vector<std::vector<GroupHom>> classes;
    for (std::size_t i = 0; i < homs.size(); ++i) {
      if (used[i]) {
        continue;
      }
      std::vector<std::size_t> members;
      for (Elem x = 0; x < H.order(); ++x) {
        auto j = index.at(conjugated_images(homs[i], x));
        if (!used[j]) {
          used[j] = true;
          members.push_back(j);
        }
      }
      std::sort(members.begin(), members.end());
      std::vector<GroupHom> cls;
      for (auto j : members) {
        cls.push_back(homs[j]);
      }
      classes.push_back(std::move(cls));
    }
    return classes;
  }

}  // namespace galois
