#pragma once

#include <vector>

#include "perm_group.hpp"

namespace galois {

  // Every homomorphism G -> H, each exactly once, sorted by generator-image
  // tuple. Candidate images are pruned by order (ord f(s) | ord s); throws
  // SizeError if more than limits().max_hom_candidates tuples remain.
  std::vector<GroupHom> homomorphisms(PermGroup const& G, PermGroup const& H);

  // True iff g == x f x^-1 pointwise for some x in the common target.
  bool are_conjugate_homs(GroupHom const& f, GroupHom const& g);

  // Classes of Hom(G, H) under conjugation in H; each class sorted, classes
  // sorted by their first member.
  std::vector<std::vector<GroupHom>> conjugacy_classes_of_homs(PermGroup const& G,
                                                               PermGroup const& H);

}  // namespace galois
