#pragma once

#include <cstddef>
#include <vector>

#include "category.hpp"
#include "fp_group.hpp"
#include "perm_group.hpp"

namespace galois {

  // A list of subgroups of one group, with closure properties measured on
  // the members rather than declared.
  struct SubgroupFamily {
    PermGroup             group;
    std::vector<Subgroup> members;  // sorted, distinct
    bool                  conjugation_closed  = false;
    bool                  intersection_closed = false;
    bool                  contains_trivial    = false;
  };

  // Sorts and dedupes members, then computes the flags exhaustively.
  SubgroupFamily make_family(PermGroup const& G, std::vector<Subgroup> members);

  // Smallest family containing seed that is closed under conjugation and
  // pairwise intersection; the trivial subgroup is removed afterwards when
  // drop_trivial is set. Throws SizeError past limits().max_subgroups.
  SubgroupFamily close_family(PermGroup const&             G,
                              std::vector<Subgroup> const& seed,
                              bool                         drop_trivial);

  struct OrbitCategory {
    FinCategory           category;
    std::vector<Subgroup> subgroups;  // object i is G / subgroups[i]
    // Morphism f : G/H -> G/K is eH -> gK with g = coset_rep[f], the least
    // element of gK.
    std::vector<Elem>     coset_rep;
  };

  // One object G/H per member H; hom(G/H, G/K) = {gK : g^-1 H g <= K}.
  // Throws EmptyFamily when the family has no members.
  OrbitCategory orbit_category(SubgroupFamily const& A);
  // The same on the nontrivial members.
  OrbitCategory reduced_orbit_category(SubgroupFamily const& A);

  std::vector<std::vector<ObjectId>> nerve_pi0(FinCategory const& C);

  // pi_1 of the nerve, on the component of basepoint: a generator per
  // non-identity morphism of the component (in morphism order), a relator
  // [g][f][g o f]^-1 per composable pair of non-identity morphisms (identity
  // composites drop out), and a relator per edge of a breadth-first
  // spanning tree from the least object of the component. Throws
  // BadBasepoint.
  FpGroup nerve_pi1_presentation(FinCategory const& C, ObjectId basepoint);

  // Category of a preorder on n objects: one morphism a -> b when
  // leq[a][b]; the relation must be reflexive and transitive
  // (std::invalid_argument otherwise).
  FinCategory poset_category(std::vector<std::vector<bool>> const& leq);

}  // namespace galois
