#pragma once

#include <string>

#include "category.hpp"
#include "groupoid.hpp"
#include "gset.hpp"
#include "orbit_nerve.hpp"
#include "pipelines.hpp"

// JSON documents carry "schema": 1 and use insertion-ordered keys, so the
// output is byte-identical for identical inputs and bounds.
namespace galois {

  // Catalogue name of G for display ("C2 x C2", "1", "order-n group").
  std::string group_name(PermGroup const& G);

  std::string to_json(GaloisReport const& report);
  std::string to_json(HomGroupoidReport const& report);
  std::string to_json(FinCategory const& C);
  // Category plus the subgroup behind each object.
  std::string to_json(OrbitCategory const& O);
  std::string to_json(PushoutReport const& report);
  std::string to_json(std::vector<TorsorClass> const& classes, std::size_t hom_classes);

  // Raw nerve presentation of a reduced orbit category with its category.
  std::string orbit_nerve_json(std::string const&   spec,
                               unsigned             p,
                               OrbitCategory const& O,
                               FpGroup const&       raw);
  // Atoms, decomposition count and the Stone roundtrip check.
  std::string stone_report_json(BooleanAlgebra const& B);
  // Orbits and the algebra of stable subsets.
  std::string gset_report_json(GSet const& X);

}  // namespace galois
