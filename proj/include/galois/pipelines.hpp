#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fp_group.hpp"
#include "perm_group.hpp"

namespace galois {

  enum class TheoremPath {
    ModG,
    Cochains,
    StmodNerve,
    StmodCentralCase,
    StmodSylowTriple,
    StmodWeylRankOne,
  };

  std::string to_string(TheoremPath path);

  struct CrossCheck {
    TheoremPath path;
    bool        agreed = false;
    std::string expected;  // name of the group the special case predicts
    std::string detail;
  };

  struct GaloisReport {
    std::string group_spec;
    unsigned    prime = 0;
    TheoremPath theorem_path = TheoremPath::ModG;

    // ModG and Cochains: the quotient group.
    std::optional<PermGroup> group;

    // StmodNerve: orbit category size, nerve data and identification.
    std::size_t                         objects    = 0;
    std::size_t                         morphisms  = 0;
    std::size_t                         components = 0;
    std::size_t                         raw_generators = 0;
    std::size_t                         raw_relators   = 0;
    std::optional<FpGroup>              presentation;  // after simplification
    std::optional<IdentificationResult> identification;
    std::string                         candidate_source;  // pool the match came from

    std::vector<CrossCheck> cross_checks;
    std::string             note;
  };

  // The fixed caveat carried by every report.
  extern char const* const kSeparablyClosedNote;

  // G / <<elements of order p>>.
  PermGroup galois_modg(PermGroup const& G, unsigned p);
  // G / <<O^p(G), elements of order p>>.
  PermGroup galois_cochains(PermGroup const& G, unsigned p);

  GaloisReport modg_report(PermGroup const& G, std::string spec, unsigned p);
  GaloisReport cochains_report(PermGroup const& G, std::string spec, unsigned p);

  // pi_1 of the nerve of the reduced orbit category on the nontrivial
  // elementary abelian p-subgroups, identified against {modg, Weyl groups of
  // the maximal elementary abelian classes, trivial} and then the catalogue
  // groups of the certified order. Cross-checks are filled in. Throws
  // POrderError when p does not divide |G|, std::invalid_argument when p is
  // not prime.
  GaloisReport galois_stmod(PermGroup const& G, std::string spec, unsigned p);

  // N_G(H) / H.
  PermGroup weyl_group(PermGroup const& G, Subgroup const& H);
  bool      has_central_order_p(PermGroup const& G, unsigned p);
  // Every three Sylow p-subgroups meet nontrivially.
  bool      sylow_triple_condition(PermGroup const& G, unsigned p);
  // Representatives of the maximal elementary abelian p-subgroup classes
  // when they all have rank one and form a single class.
  std::optional<Subgroup> rank_one_weyl_subgroup(PermGroup const& G, unsigned p);

  // Appends a cross-check for each special case that applies to (G, p).
  // Agreement is an isomorphism test against the nerve result.
  void stmod_cross_check(PermGroup const& G, unsigned p, GaloisReport& report);

  struct PushoutReport {
    FpGroup                   presentation;
    FpGroup                   simplified;
    std::vector<std::int64_t> abelianization;
    IdentificationResult      identification;
  };

  // Pushout, abelianization of the result and identification against the
  // catalogue groups of the certified order.
  PushoutReport van_kampen_pushout(FpMap const& f, FpMap const& g);

  // identify_finite against `pool`, falling back to the catalogue groups of
  // the certified order (at most max_catalogue_order) when nothing matches.
  // `source` is set to "pool" or "catalogue" on success.
  IdentificationResult identify_with_catalogue(FpGroup const&                F,
                                               std::vector<PermGroup> const& pool,
                                               std::size_t                   max_catalogue_order,
                                               std::string*                  source = nullptr);

}  // namespace galois
