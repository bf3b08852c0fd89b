#pragma once

#include <vector>

#include "category.hpp"
#include "perm_group.hpp"

namespace galois {

  // One object; morphism i is element i of G, composition is multiplication.
  FinGroupoid delooping(PermGroup const& G);

  // Objects are the points 0..degree-1; a morphism x -> g(x) for every pair
  // (g, x), indexed x * |G| + g.
  FinGroupoid action_groupoid(PermGroup const& G);

  std::vector<std::vector<ObjectId>> pi0(FinGroupoid const& X);

  // Automorphism group of the basepoint, acting by post-composition on the
  // morphisms that end at it. Throws BadBasepoint.
  PermGroup pi1(FinGroupoid const& X, ObjectId basepoint);

  struct HomGroupoidComponent {
    GroupHom    representative;
    Subgroup    automorphisms;  // centralizer of the image in the target
    std::size_t size;           // homomorphisms in the conjugacy class
  };

  struct HomGroupoidReport {
    PermGroup                         source;
    PermGroup                         target;
    std::vector<HomGroupoidComponent> components;
  };

  // Components are conjugacy classes of homomorphisms G -> H; the
  // automorphisms of f are the centralizer of f(G) in H.
  HomGroupoidReport hom_groupoid(PermGroup const& G, PermGroup const& H);

  // The functor groupoid Fun(BG, BH) built from definitions: every
  // generator-image assignment (no pruning) is extended and kept if it is a
  // functor on the full composition table; morphisms F -> F' are the x in H
  // with x F(g) == F'(g) x for every g. Objects are ordered by generator
  // images, morphism labels are the element index of x. Throws SizeError
  // past limits().max_functor_candidates.
  FinGroupoid hom_groupoid_bruteforce(PermGroup const& G, PermGroup const& H);

}  // namespace galois
