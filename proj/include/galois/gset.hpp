#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perm_group.hpp"
#include "stone.hpp"

namespace galois {

  // A finite left G-set on the points 0..size-1, stored as a full action
  // table so that act() is a lookup.
  class GSet {
   public:
    // One permutation of the carrier per generator of G. The table is built
    // along the Cayley graph of G; throws std::invalid_argument if the
    // assignment is not an action.
    GSet(PermGroup G, std::size_t size, std::vector<Perm> generator_actions);

    PermGroup const& group() const noexcept {
      return group_;
    }
    std::size_t size() const noexcept {
      return size_;
    }
    Point act(Elem g, Point x) const noexcept {
      return table_[g * size_ + x];
    }
    std::span<Perm const> generator_actions() const noexcept {
      return gen_actions_;
    }
    Perm action_of(Elem g) const;

   private:
    PermGroup          group_;
    std::size_t        size_;
    std::vector<Perm>  gen_actions_;
    std::vector<Point> table_;
  };

  // Exhaustive check of e.x == x and (gh).x == g.(h.x).
  bool is_action(GSet const& X);

  GSet regular_gset(PermGroup const& G);                  // g.x = gx on elements
  GSet trivial_gset(PermGroup const& G, std::size_t n);
  GSet natural_gset(PermGroup const& G);                  // points of the permutation domain

  // Orbits, each sorted, ordered by least point.
  std::vector<std::vector<Point>> orbits(GSet const& X);

  // Diagonal action; the pair (x, y) is the point x * |Y| + y.
  GSet product(GSet const& X, GSet const& Y);
  // Points of X followed by points of Y.
  GSet coproduct(GSet const& X, GSet const& Y);
  // Orbit set of the F-action, numbered by least point, with the induced
  // G-action. Throws IncompatibleGroups unless the carriers agree and the
  // actions commute.
  GSet quotient_by_action(GSet const& X, GSet const& F_action);

  // Whether map (one image per point of X) commutes with the G-actions.
  bool is_equivariant(GSet const& X, GSet const& Y, std::span<Point const> map);
  bool is_equivariant_bijection(GSet const& X, GSet const& Y, std::span<Point const> map);

  // Some equivariant bijection X -> Y, by search over images of orbit
  // representatives.
  std::optional<std::vector<Point>> gset_isomorphism(GSet const& X, GSet const& Y);

  // ---- torsors -------------------------------------------------------------

  // base is the G-set; aux is an action of G' on the same carrier, written
  // as a left action (right multiplication x.h becomes h: x -> x h^-1).
  struct TorsorCandidate {
    GSet base;
    GSet aux;
  };

  // Commuting actions, |carrier| == |G'| and G' acting transitively (hence
  // freely).
  bool is_torsor(TorsorCandidate const& T);

  // Carrier G', g.x = phi(g) x, aux by right multiplication.
  TorsorCandidate torsor_from_hom(GroupHom const& phi);

  // An isomorphism commutes with both actions; it is determined by the image
  // of point 0 because the aux action is regular.
  std::optional<std::vector<Point>> torsor_isomorphism(TorsorCandidate const& S,
                                                       TorsorCandidate const& T);

  struct TorsorClass {
    TorsorCandidate representative;
    std::size_t     count;  // G-actions on the carrier in this class
  };

  // Isomorphism classes of G'-torsors in G-sets. The carrier is G' with the
  // right-regular aux action; every G-action on it commuting with aux is
  // enumerated and the results grouped by torsor_isomorphism. Throws
  // SizeError when |G'| > limits().max_torsor_carrier.
  std::vector<TorsorClass> classify_torsors(PermGroup const& G, PermGroup const& Gp);

  // ---- subterminal objects and the fundamental group -------------------------

  // G-stable subsets of X, encoded over the orbits of X (orbit i is bit i).
  // Throws SizeError above limits().max_atoms orbits.
  BooleanAlgebra subterminal_boolean_algebra(GSet const& X);

  struct Pi1Reconstruction {
    PermGroup               automorphisms;  // acting on the carrier G
    std::optional<GroupHom> witness;        // G -> automorphisms
  };

  // Automorphisms of the left-regular G-set, which are the right
  // multiplications.
  Pi1Reconstruction reconstruct_pi1(PermGroup const& G);

  // ---- text form -------------------------------------------------------------

  // gset:<group-spec>:<size>:<gen-index>:<images>;<gen-index>:<images>;...
  // Generator indices and images are 0-based; every generator must appear.
  // Throws ParseError.
  GSet        parse_gset(std::string_view text);
  std::string format_gset(GSet const& X);

}  // namespace galois
