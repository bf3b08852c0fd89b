#include "galois/pipelines.hpp"

#include <algorithm>
#include <stdexcept>

#include "galois/catalogue.hpp"
#include "galois/error.hpp"
#include "galois/limits.hpp"
#include "galois/orbit_nerve.hpp"

namespace galois {

  char const* const kSeparablyClosedNote =
      "geometric part only: k is taken separably closed, so the factor Gal(k^sep/k) is omitted";

  std::string to_string(TheoremPath path) {
    switch (path) {
      case TheoremPath::ModG: return "modg";
      case TheoremPath::Cochains: return "cochains";
      case TheoremPath::StmodNerve: return "stmod-nerve";
      case TheoremPath::StmodCentralCase: return "stmod-central-case";
      case TheoremPath::StmodSylowTriple: return "stmod-sylow-triple";
      case TheoremPath::StmodWeylRankOne: return "stmod-weyl-rank-one";
    }
    return "unknown";
  }

  namespace {
    void require_prime(unsigned p) {
      if (!is_prime(p)) {
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
      }
    }
  }  // namespace

  PermGroup galois_modg(PermGroup const& G, unsigned p) {
    require_prime(p);
    auto const elts = order_p_elements(G, p);
    return quotient(G, normal_closure(G, elts)).group;
  }

  PermGroup galois_cochains(PermGroup const& G, unsigned p) {
    require_prime(p);
    auto gens = order_p_elements(G, p);
    auto res  = p_residual(G, p);
    gens.insert(gens.end(), res.members().begin(), res.members().end());
    return quotient(G, normal_closure(G, gens)).group;
  }

  GaloisReport modg_report(PermGroup const& G, std::string spec, unsigned p) {
    GaloisReport r;
    r.group_spec   = std::move(spec);
    r.prime        = p;
    r.theorem_path = TheoremPath::ModG;
    r.group        = galois_modg(G, p);
    r.note         = kSeparablyClosedNote;
    return r;
  }

  GaloisReport cochains_report(PermGroup const& G, std::string spec, unsigned p) {
    GaloisReport r;
    r.group_spec   = std::move(spec);
    r.prime        = p;
    r.theorem_path = TheoremPath::Cochains;
    r.group        = galois_cochains(G, p);
    r.note         = kSeparablyClosedNote;
    return r;
  }

  PermGroup weyl_group(PermGroup const& G, Subgroup const& H) {
    auto const        N  = normalizer(G, H);
    PermGroup const   NG = N.as_group();
    std::vector<Elem> inside;
    for (Elem h : H.members()) {
      inside.push_back(NG.index_of(G.element(h)));
    }
    std::sort(inside.begin(), inside.end());
    return quotient(NG, Subgroup::from_members(NG, std::move(inside))).group;
  }

  bool has_central_order_p(PermGroup const& G, unsigned p) {
    auto const Z = center(G);
    return std::any_of(Z.members().begin(), Z.members().end(), [&](Elem z) {
      return G.element_order(z) == p;
    });
  }

  bool sylow_triple_condition(PermGroup const& G, unsigned p) {
    require_prime(p);
    auto const sylows = sylow_subgroups(G, p);
    std::size_t const n = sylows.size();
    if (n < 3) {
      Subgroup meet = sylows.front();
      for (auto const& P : sylows) {
        meet = meet.intersect(P);
      }
      return !meet.is_trivial();
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto const ij = sylows[i].intersect(sylows[j]);
        if (ij.is_trivial()) {
          return false;
        }
        for (std::size_t k = j + 1; k < n; ++k) {
          if (ij.intersect(sylows[k]).is_trivial()) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::optional<Subgroup> rank_one_weyl_subgroup(PermGroup const& G, unsigned p) {
    auto const maxes = maximal_members(elementary_abelian_p_subgroups(G, p, false));
    if (maxes.empty()) {
      return std::nullopt;
    }
    for (auto const& E : maxes) {
      if (E.order() != p) {
        return std::nullopt;
      }
    }
    auto const classes = conjugacy_classes(maxes);
    if (classes.size() != 1) {
      return std::nullopt;
    }
    return classes.front().front();
  }

  IdentificationResult identify_with_catalogue(FpGroup const&                F,
                                               std::vector<PermGroup> const& pool,
                                               std::size_t                   max_catalogue_order,
                                               std::string*                  source) {
    auto result = identify_finite(F, pool);
    if (result.status == IdStatus::Identified) {
      if (source) {
        *source = "pool";
      }
      return result;
    }
    if (!result.certified_group || *result.certified_order > max_catalogue_order) {
      return result;
    }
    auto const             order = *result.certified_order;
    std::vector<PermGroup> catalogue;
    for (auto const& spec : catalogue_specs(order)) {
      if (catalogue_order(spec) == order) {
        catalogue.push_back(group_from_catalogue(spec));
      }
    }
    result.match = match_candidates(F, *result.certified_group, catalogue);
    if (result.match) {
      result.status = IdStatus::Identified;
      if (source) {
        *source = "catalogue";
      }
    }
    return result;
  }

  GaloisReport galois_stmod(PermGroup const& G, std::string spec, unsigned p) {
    require_prime(p);
    if (G.order() % p != 0) {
      throw POrderError(std::to_string(p) + " does not divide |G| = " + std::to_string(G.order())
                        + "; the stable module category is zero");
    }
    GaloisReport r;
    r.group_spec   = std::move(spec);
    r.prime        = p;
    r.theorem_path = TheoremPath::StmodNerve;
    r.note         = kSeparablyClosedNote;

    auto const family = close_family(G, elementary_abelian_p_subgroups(G, p, false), true);
    auto const O      = reduced_orbit_category(family);
    r.objects         = O.category.object_count();
    r.morphisms       = O.category.morphism_count();
    r.components      = nerve_pi0(O.category).size();

    auto const raw   = nerve_pi1_presentation(O.category, 0);
    r.raw_generators = raw.generator_count();
    r.raw_relators   = raw.relators().size();
    auto const simp  = simplify(raw);
    r.presentation   = simp;

    std::vector<PermGroup> pool;
    auto const             modg = galois_modg(G, p);
    pool.push_back(modg.with_label(describe(modg)));
    for (auto const& cls : conjugacy_classes(
             maximal_members(elementary_abelian_p_subgroups(G, p, false)))) {
      auto const W = weyl_group(G, cls.front());
      pool.push_back(W.with_label(describe(W)));
    }
    pool.push_back(PermGroup::trivial().with_label("C1"));
    r.identification = identify_with_catalogue(simp, pool, G.order(), &r.candidate_source);
    stmod_cross_check(G, p, r);
    return r;
  }

  void stmod_cross_check(PermGroup const& G, unsigned p, GaloisReport& report) {
    auto const* id     = report.identification ? &*report.identification : nullptr;
    auto        record = [&](TheoremPath path, PermGroup const& expected) {
      CrossCheck c{path, false, display_name(describe(expected)), {}};
      if (!id || !id->certified_group) {
        c.detail = "nerve path did not certify a finite group";
      } else if (are_isomorphic(*id->certified_group, expected)) {
        c.agreed = true;
        c.detail = "isomorphic, order " + std::to_string(expected.order());
      } else {
        c.detail = "not isomorphic: nerve group has order "
                   + std::to_string(id->certified_group->order()) + ", expected order "
                   + std::to_string(expected.order());
      }
      report.cross_checks.push_back(std::move(c));
    };
    if (has_central_order_p(G, p)) {
      record(TheoremPath::StmodCentralCase, galois_modg(G, p));
    }
    if (sylow_triple_condition(G, p)) {
      record(TheoremPath::StmodSylowTriple, galois_modg(G, p));
    }
    if (auto E = rank_one_weyl_subgroup(G, p)) {
      record(TheoremPath::StmodWeylRankOne, weyl_group(G, *E));
    }
  }

  PushoutReport van_kampen_pushout(FpMap const& f, FpMap const& g) {
    auto       P    = pushout(f, g);
    auto       simp = simplify(P);
    auto const ab   = abelianization(simp);
    auto       id   = identify_with_catalogue(simp, {}, limits().max_identify_order);
    return {std::move(P), std::move(simp), ab, std::move(id)};
  }

}  // namespace galois
