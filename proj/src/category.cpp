#include "galois/category.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace galois {

  FinCategory::FinCategory(std::vector<std::string> objects,
                           std::vector<Morphism>    morphisms,
                           std::vector<MorphismId>  identities,
                           ComposeFn const&         compose)
      : objects_(std::move(objects)),
        morphisms_(std::move(morphisms)),
        identities_(std::move(identities)) {
    std::size_t const n = objects_.size();
    std::size_t const m = morphisms_.size();
    if (identities_.size() != n) {
      throw std::invalid_argument("FinCategory: one identity per object required");
    }
    outgoing_.resize(n);
    incoming_.resize(n);
    out_pos_.resize(m);
    for (MorphismId f = 0; f < m; ++f) {
      auto const& mf = morphisms_[f];
      if (mf.source >= n || mf.target >= n) {
        throw std::invalid_argument("FinCategory: morphism endpoint out of range");
      }
      out_pos_[f] = static_cast<std::uint32_t>(outgoing_[mf.source].size());
      outgoing_[mf.source].push_back(f);
      incoming_[mf.target].push_back(f);
    }
    for (ObjectId x = 0; x < n; ++x) {
      auto id = identities_[x];
      if (id >= m || morphisms_[id].source != x || morphisms_[id].target != x) {
        throw std::invalid_argument("FinCategory: identity has wrong endpoints");
      }
    }
    after_.resize(m);
    for (MorphismId f = 0; f < m; ++f) {
      auto const& out = outgoing_[morphisms_[f].target];
      after_[f].reserve(out.size());
      for (MorphismId g : out) {
        MorphismId h = compose(g, f);
        if (h >= m || morphisms_[h].source != morphisms_[f].source
            || morphisms_[h].target != morphisms_[g].target) {
          throw std::invalid_argument("FinCategory: composite has wrong endpoints");
        }
        after_[f].push_back(h);
      }
    }
  }

  std::vector<MorphismId> FinCategory::hom(ObjectId a, ObjectId b) const {
    std::vector<MorphismId> out;
    for (MorphismId f : outgoing_.at(a)) {
      if (morphisms_[f].target == b) {
        out.push_back(f);
      }
    }
    return out;
  }

  MorphismId FinCategory::compose(MorphismId g, MorphismId f) const {
    if (morphisms_.at(f).target != morphisms_.at(g).source) {
      throw std::invalid_argument("FinCategory: morphisms are not composable");
    }
    return after_[f][out_pos_[g]];
  }

  bool FinCategory::check_laws() const {
    for (MorphismId f = 0; f < morphisms_.size(); ++f) {
      auto const& mf = morphisms_[f];
      if (compose(identities_[mf.target], f) != f || compose(f, identities_[mf.source]) != f) {
        return false;
      }
      for (MorphismId g : outgoing_[mf.target]) {
        MorphismId gf = compose(g, f);
        for (MorphismId h : outgoing_[morphisms_[g].target]) {
          if (compose(h, gf) != compose(compose(h, g), f)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  FinCategory FinCategory::disjoint_union(std::vector<FinCategory> const& parts) {
    std::vector<std::string> objects;
    std::vector<Morphism>    morphisms;
    std::vector<MorphismId>  identities;
    std::vector<std::size_t> morph_offset;
    for (auto const& C : parts) {
      auto const obj_off = static_cast<ObjectId>(objects.size());
      auto const mor_off = static_cast<MorphismId>(morphisms.size());
      morph_offset.push_back(mor_off);
      for (std::size_t x = 0; x < C.object_count(); ++x) {
        objects.push_back(C.objects_[x]);
        identities.push_back(C.identities_[x] + mor_off);
      }
      for (auto const& m : C.morphisms_) {
        morphisms.push_back({m.source + obj_off, m.target + obj_off, m.label});
      }
    }
    morph_offset.push_back(morphisms.size());
    auto part_of = [&](MorphismId f) {
      auto it = std::upper_bound(morph_offset.begin(), morph_offset.end(), f);
      return static_cast<std::size_t>(it - morph_offset.begin()) - 1;
    };
    return FinCategory(std::move(objects),
                       std::move(morphisms),
                       std::move(identities),
                       [&](MorphismId g, MorphismId f) {
                         auto const  i   = part_of(f);
                         auto const  off = static_cast<MorphismId>(morph_offset[i]);
                         return parts[i].compose(g - off, f - off) + off;
                       });
  }

  std::vector<std::vector<ObjectId>> connected_components(FinCategory const& C) {
    std::vector<ObjectId> parent(C.object_count());
    std::iota(parent.begin(), parent.end(), ObjectId{0});
    auto find = [&](ObjectId x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      auto a = find(C.morphism(f).source);
      auto b = find(C.morphism(f).target);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::vector<ObjectId>> comps;
    std::vector<std::int64_t>          slot(C.object_count(), -1);
    for (ObjectId x = 0; x < C.object_count(); ++x) {
      auto r = find(x);
      if (slot[r] < 0) {
        slot[r] = static_cast<std::int64_t>(comps.size());
        comps.emplace_back();
      }
      comps[static_cast<std::size_t>(slot[r])].push_back(x);
    }
    return comps;
  }

  FinGroupoid::FinGroupoid(FinCategory category) : category_(std::move(category)) {
    inverse_.resize(category_.morphism_count());
    for (MorphismId f = 0; f < category_.morphism_count(); ++f) {
      auto const& mf    = category_.morphism(f);
      bool        found = false;
      for (MorphismId g : category_.hom(mf.target, mf.source)) {
        if (category_.compose(g, f) == category_.identity(mf.source)
            && category_.compose(f, g) == category_.identity(mf.target)) {
          inverse_[f] = g;
          found       = true;
          break;
        }
      }
      if (!found) {
        throw std::invalid_argument("FinGroupoid: morphism without inverse");
      }
    }
  }

}  // namespace galois
