#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace galois {

  using ObjectId   = std::uint32_t;
  using MorphismId = std::uint32_t;

  struct Morphism {
    ObjectId    source;
    ObjectId    target;
    std::string label;
  };

  // A finite category with its full composition table. Composition is
  // stored per morphism f : a -> b as one entry for every g leaving b.
  class FinCategory {
   public:
    using ComposeFn = std::function<MorphismId(MorphismId g, MorphismId f)>;

    FinCategory() = default;
    // compose(g, f) must return g o f for every composable pair. Throws
    // std::invalid_argument on inconsistent endpoints.
    FinCategory(std::vector<std::string> objects,
                std::vector<Morphism>    morphisms,
                std::vector<MorphismId>  identities,
                ComposeFn const&         compose);

    std::size_t object_count() const noexcept {
      return objects_.size();
    }
    std::size_t morphism_count() const noexcept {
      return morphisms_.size();
    }
    std::string const& object(ObjectId x) const {
      return objects_.at(x);
    }
    Morphism const& morphism(MorphismId f) const {
      return morphisms_.at(f);
    }
    MorphismId identity(ObjectId x) const {
      return identities_.at(x);
    }
    bool is_identity(MorphismId f) const {
      return identities_[morphisms_[f].source] == f;
    }
    std::span<MorphismId const> outgoing(ObjectId x) const {
      return outgoing_.at(x);
    }
    std::span<MorphismId const> incoming(ObjectId x) const {
      return incoming_.at(x);
    }
    std::vector<MorphismId> hom(ObjectId a, ObjectId b) const;

    // Entry i is outgoing(target f)[i] o f.
    std::span<MorphismId const> composites_after(MorphismId f) const {
      return after_.at(f);
    }

    // g o f, requires target(f) == source(g).
    MorphismId compose(MorphismId g, MorphismId f) const;

    // Exhaustive unit and associativity check.
    bool check_laws() const;

    // Disjoint union; objects and morphisms are renumbered in order.
    static FinCategory disjoint_union(std::vector<FinCategory> const& parts);

   private:
    std::vector<std::string>             objects_;
    std::vector<Morphism>                morphisms_;
    std::vector<MorphismId>              identities_;
    std::vector<std::vector<MorphismId>> outgoing_;
    std::vector<std::vector<MorphismId>> incoming_;
    std::vector<std::uint32_t>           out_pos_;  // position of g in outgoing(source g)
    std::vector<std::vector<MorphismId>> after_;    // after_[f][out_pos_[g]] = g o f
  };

  // Connected components of the underlying undirected graph, each sorted;
  // components ordered by least object.
  std::vector<std::vector<ObjectId>> connected_components(FinCategory const& C);

  // A finite category in which every morphism is invertible.
  class FinGroupoid {
   public:
    FinGroupoid() = default;
    // Throws std::invalid_argument if some morphism has no inverse.
    explicit FinGroupoid(FinCategory category);

    FinCategory const& category() const noexcept {
      return category_;
    }
    MorphismId inverse(MorphismId f) const {
      return inverse_.at(f);
    }

   private:
    FinCategory             category_;
    std::vector<MorphismId> inverse_;
  };

}  // namespace galois
