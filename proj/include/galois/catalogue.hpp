#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perm_group.hpp"

namespace galois {

  // Builds a group from a spec string:
  //   S<n>  A<n>  C<n>  C<n>xC<m>[x...]  D<2n>  Q<4m> (dicyclic, Q8 and Q16
  //   are the generalized quaternion groups)  perm:<degree>:<gen>;<gen>;...
  // where each <gen> is a product of 1-based disjoint cycles such as (1 2)(3 4).
  // Throws ParseError on malformed specs, SizeError if the order exceeds
  // limits().max_order.
  PermGroup group_from_catalogue(std::string_view spec);

  // The family order formula, without building the group; nullopt for
  // explicit perm: specs. Throws ParseError.
  std::optional<unsigned long long> catalogue_order(std::string_view spec);

  // Named catalogue groups of order <= max_order, ordered by order and then
  // by family preference. Isomorphic duplicates (D4, D6, S3 vs C6 ...) are
  // not listed twice.
  std::vector<std::string> catalogue_specs(std::size_t max_order);

  // Name of the first catalogue group isomorphic to G, or "order-<n> group".
  std::string describe(PermGroup const& G);

  // "C2xC2" -> "C2 x C2", "C1" -> "1".
  std::string display_name(std::string_view spec);

}  // namespace galois
