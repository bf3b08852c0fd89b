#include "galois/selftest.hpp"

#include <exception>

#include "galois/catalogue.hpp"
#include "galois/fp_group.hpp"
#include "galois/groupoid.hpp"
#include "galois/gset.hpp"
#include "galois/homomorphisms.hpp"
#include "galois/orbit_nerve.hpp"
#include "galois/pipelines.hpp"
#include "galois/stone.hpp"

namespace galois {

  namespace {
    struct Failure {
      std::string what;
    };

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw Failure{what};
      }
    }

    std::vector<std::pair<std::string, PermGroup>> groups_up_to(std::size_t n) {
      std::vector<std::pair<std::string, PermGroup>> out;
      for (auto const& s : catalogue_specs(n)) {
        out.emplace_back(s, group_from_catalogue(s));
      }
      return out;
    }

    std::size_t suite_homomorphisms() {
      std::size_t checked = 0;
      auto const  gs      = groups_up_to(8);
      for (auto const& [a, G] : gs) {
        for (auto const& [b, H] : gs) {
          auto const fast  = hom_groupoid(G, H);
          auto const brute = hom_groupoid_bruteforce(G, H);
          require(fast.components.size() == pi0(brute).size(),
                  "Hom(" + a + ", " + b + ") component count");
          for (auto const& f : homomorphisms(G, H)) {
            require(is_multiplicative(G, H, f.element_map()), "homomorphism " + a + " -> " + b);
          }
          ++checked;
        }
      }
      return checked;
    }

    std::size_t suite_torsors() {
      std::size_t checked = 0;
      auto const  gs      = groups_up_to(8);
      for (auto const& [a, G] : gs) {
        for (auto const& [b, H] : gs) {
          require(classify_torsors(G, H).size() == hom_groupoid(G, H).components.size(),
                  "torsor classes for (" + a + ", " + b + ")");
          ++checked;
        }
      }
      return checked;
    }

    std::size_t suite_reconstruction() {
      std::size_t checked = 0;
      for (auto const& [name, G] : groups_up_to(24)) {
        auto const r = reconstruct_pi1(G);
        require(r.witness.has_value() && r.witness->is_injective() && r.witness->is_surjective(),
                "reconstruct_pi1(" + name + ")");
        ++checked;
      }
      return checked;
    }

    std::size_t suite_stone() {
      std::size_t const bell[] = {1, 1, 2, 5, 15};
      for (std::size_t n = 0; n <= 4; ++n) {
        auto const B = algebra_of_set(n);
        require(spec(B).size() == n, "atoms of the power set of " + std::to_string(n));
        require(B.size() == std::size_t{1} << n, "size of the power set algebra");
        require(boolean_isomorphism(algebra_of_set(spec(B).size()), B).has_value(),
                "roundtrip on " + std::to_string(n) + " atoms");
        require(idempotent_decompositions(B).size() == bell[n], "Bell number");
      }
      return 5;
    }

    std::size_t suite_nerve() {
      std::size_t checked = 0;
      for (auto const& [name, Q] : groups_up_to(12)) {
        auto const F = nerve_pi1_presentation(delooping(Q).category(), 0);
        auto const r = identify_finite(simplify(F), {Q});
        require(r.status == IdStatus::Identified, "nerve of B" + name);
        ++checked;
      }
      // a chain 0 <= 1 <= 2 has a terminal object
      std::vector<std::vector<bool>> chain{{true, true, true}, {false, true, true},
                                           {false, false, true}};
      auto const r = identify_finite(simplify(nerve_pi1_presentation(poset_category(chain), 0)), {});
      require(r.certified_order == std::size_t{1}, "contractible nerve");
      return checked + 1;
    }

    std::size_t suite_pipelines() {
      std::size_t checked = 0;
      for (auto const& [name, G] : groups_up_to(48)) {
        for (unsigned p : {2u, 3u, 5u}) {
          auto const modg = galois_modg(G, p);
          auto const coch = galois_cochains(G, p);
          require(is_p_power(coch.order(), p), "cochain quotient of " + name + " is a p-group");
          require(modg.order() % coch.order() == 0, "cochain quotient divides Mod_G quotient");
          if (G.order() % p != 0) {
            require(modg.order() == G.order(), "Mod_G quotient is G when p does not divide |G|");
            continue;
          }
          auto const r = galois_stmod(G, name, p);
          for (auto const& c : r.cross_checks) {
            require(c.agreed, name + " at p = " + std::to_string(p) + ": " + to_string(c.path));
          }
          ++checked;
        }
      }
      return checked;
    }

    std::size_t suite_pushout() {
      FpGroup const trivial(0, {});
      FpMap const   f{trivial, parse_fp("fp:1:aa"), {}};
      FpMap const   g{trivial, parse_fp("fp:1:aaa"), {}};
      auto const    r = van_kampen_pushout(f, g);
      require(r.abelianization == std::vector<std::int64_t>{6}, "C2 * C3 abelianizes to C6");
      return 1;
    }
  }  // namespace

  std::vector<SuiteResult> run_selftest(std::function<void(SuiteResult const&)> const& on_result) {
    std::vector<std::pair<std::string, std::size_t (*)()>> const suites{
        {"homomorphisms", suite_homomorphisms},
        {"torsors", suite_torsors},
        {"reconstruction", suite_reconstruction},
        {"stone", suite_stone},
        {"nerve", suite_nerve},
        {"pipelines", suite_pipelines},
        {"pushout", suite_pushout},
    };
    std::vector<SuiteResult> out;
    for (auto const& [name, run] : suites) {
      SuiteResult r{name, false, {}};
      try {
        r.detail = std::to_string(run()) + " cases";
        r.passed = true;
      } catch (Failure const& f) {
        r.detail = f.what;
      } catch (std::exception const& e) {
        r.detail = e.what();
      }
      if (on_result) {
        on_result(r);
      }
      out.push_back(std::move(r));
    }
    return out;
  }

}  // namespace galois
