#include "galois/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "galois/catalogue.hpp"
#include "galois/error.hpp"
#include "galois/groupoid.hpp"
#include "galois/gset.hpp"
#include "galois/homomorphisms.hpp"
#include "galois/limits.hpp"
#include "galois/orbit_nerve.hpp"
#include "galois/pipelines.hpp"
#include "galois/selftest.hpp"
#include "galois/serialize.hpp"
#include "galois/stone.hpp"

namespace galois {

  namespace {
    constexpr int kOk           = 0;
    constexpr int kOtherError   = 1;
    constexpr int kParseError   = 2;
    constexpr int kSizeError    = 3;
    constexpr int kInconclusive = 4;

    struct Options {
      std::string format = "text";
      bool        require_identified = false;
      Limits      limits;
    };

    std::string order_suffix(PermGroup const& G) {
      return " (order " + std::to_string(G.order()) + ")";
    }

    unsigned checked_prime(unsigned p) {
      if (!is_prime(p)) {
        throw ParseError("-p " + std::to_string(p) + " is not a prime");
      }
      return p;
    }

    void print_quotient(GaloisReport const& r, Options const& opt, std::ostream& out) {
      if (opt.format == "json") {
        out << to_json(r) << '\n';
      } else {
        out << group_name(*r.group) << order_suffix(*r.group) << '\n';
      }
    }

    int print_stmod(GaloisReport const& r, Options const& opt, std::ostream& out) {
      auto const& id = *r.identification;
      if (opt.format == "json") {
        out << to_json(r) << '\n';
      } else {
        out << "stable module category of " << r.group_spec << " at p = " << r.prime << '\n';
        out << "reduced orbit category: " << r.objects << " objects, " << r.morphisms
            << " morphisms, " << r.components << " component(s)\n";
        out << "nerve presentation: " << r.raw_generators << " generators, " << r.raw_relators
            << " relators; simplified " << format_fp(*r.presentation) << '\n';
        out << "identification: " << to_string(id.status);
        if (id.match) {
          out << ' ' << display_name(id.match->candidate);
        }
        if (id.certified_order) {
          out << " (order " << *id.certified_order << ")";
        }
        out << '\n';
        for (auto const& c : r.cross_checks) {
          out << "cross-check " << to_string(c.path) << ": "
              << (c.agreed ? "agreed" : "disagreed") << " with " << c.expected << " ("
              << c.detail << ")\n";
        }
        out << "note: " << r.note << '\n';
      }
      bool const disagreed = std::any_of(r.cross_checks.begin(), r.cross_checks.end(),
                                         [](CrossCheck const& c) { return !c.agreed; });
      if (opt.require_identified && (id.status != IdStatus::Identified || disagreed)) {
        return kInconclusive;
      }
      return kOk;
    }

    void print_hom(HomGroupoidReport const& r, Options const& opt, std::ostream& out) {
      if (opt.format == "json") {
        out << to_json(r) << '\n';
        return;
      }
      out << "Hom(" << group_name(r.source) << ", " << group_name(r.target)
          << "): " << r.components.size() << " component(s)\n";
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        auto const& c = r.components[i];
        out << "  [" << i + 1 << "] generators ->";
        for (Elem x : c.representative.generator_images()) {
          out << ' ' << r.target.element(x).to_cycle_string();
        }
        auto const aut = c.automorphisms.as_group();
        out << "; automorphisms " << group_name(aut) << order_suffix(aut) << "; " << c.size
            << " homomorphism(s)\n";
      }
    }

    FpMap parse_map(std::string_view text, FpGroup const& source, FpGroup const& target) {
      FpMap       m{source, target, {}};
      std::size_t start = 0;
      if (source.generator_count() == 0) {
        if (!text.empty()) {
          throw ParseError("map from a group with no generators must be empty");
        }
        return m;
      }
      while (true) {
        auto pos = text.find(',', start);
        m.images.push_back(parse_word(text.substr(start, pos - start), target.generator_count()));
        if (pos == std::string_view::npos) {
          break;
        }
        start = pos + 1;
      }
      if (m.images.size() != source.generator_count()) {
        throw ParseError("map needs " + std::to_string(source.generator_count())
                         + " images, got " + std::to_string(m.images.size()));
      }
      return m;
    }

    std::pair<std::string, std::string> split_maps(std::string_view text) {
      auto semi = text.find(';');
      if (semi == std::string_view::npos || !text.starts_with("f=")
          || text.substr(semi + 1, 2) != "g=") {
        throw ParseError("maps must look like f=<words>;g=<words>");
      }
      return {std::string(text.substr(2, semi - 2)), std::string(text.substr(semi + 3))};
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot read " + path);
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }
  }  // namespace

  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Galois groups of representation, cochain and stable module categories of "
                 "finite groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-order", opt.limits.max_order, "Element bound per group")
        ->envname("GALOIS_MAX_ORDER");
    app.add_option("--max-cosets", opt.limits.max_cosets, "Coset table bound");
    app.add_option("--max-candidates", opt.limits.max_hom_candidates,
                   "Bound on generator-image tuples in homomorphism searches");
    app.add_flag("--require-identified", opt.require_identified,
                 "Exit with status 4 when a result is not identified");

    std::string group, group2, text, fp0, fp1, fp2, maps;
    unsigned    p = 0;

    auto* modg = app.add_subcommand("modg", "Galois group of Mod_G(k)");
    modg->add_option("group", group)->required();
    modg->add_option("-p", p, "characteristic")->required();

    auto* cochains = app.add_subcommand("cochains", "Galois group of C*(BG; k)");
    cochains->add_option("group", group)->required();
    cochains->add_option("-p", p, "characteristic")->required();

    auto* stmod = app.add_subcommand("stmod", "Galois group of St_G(k)");
    stmod->add_option("group", group)->required();
    stmod->add_option("-p", p, "characteristic")->required();

    auto* nerve = app.add_subcommand("orbit-nerve", "Raw nerve presentation of O'_A(G)");
    nerve->add_option("group", group)->required();
    nerve->add_option("-p", p, "prime defining the family")->required();

    auto* hom = app.add_subcommand("hom", "Groupoid of homomorphisms G -> H");
    hom->add_option("source", group)->required();
    hom->add_option("target", group2)->required();

    auto* torsors = app.add_subcommand("torsors", "H-torsors in finite G-sets");
    torsors->add_option("group", group)->required();
    torsors->add_option("aux", group2)->required();

    auto* stone = app.add_subcommand("stone", "Spec and decompositions of a finite Boolean algebra");
    stone->add_option("file", text, "JSON algebra file")->required();

    auto* push = app.add_subcommand("pushout", "Van Kampen pushout of presentations");
    push->add_option("base", fp0)->required();
    push->add_option("left", fp1)->required();
    push->add_option("right", fp2)->required();
    push->add_option("maps", maps, "f=<words>;g=<words>, one word per base generator")
        ->required();

    auto* gset = app.add_subcommand("gset", "Orbits and stable subsets of a G-set");
    gset->add_option("gset", text)->required();

    auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kParseError;
    }

    ScopedLimits scoped(opt.limits);
    try {
      if (modg->parsed() || cochains->parsed()) {
        checked_prime(p);
        auto const G = group_from_catalogue(group);
        print_quotient(modg->parsed() ? modg_report(G, group, p) : cochains_report(G, group, p),
                       opt, out);
        return kOk;
      }
      if (stmod->parsed()) {
        checked_prime(p);
        return print_stmod(galois_stmod(group_from_catalogue(group), group, p), opt, out);
      }
      if (nerve->parsed()) {
        checked_prime(p);
        auto const G      = group_from_catalogue(group);
        auto const family = close_family(G, elementary_abelian_p_subgroups(G, p, false), true);
        auto const O      = reduced_orbit_category(family);
        auto const raw    = nerve_pi1_presentation(O.category, 0);
        if (opt.format == "json") {
          out << orbit_nerve_json(group, p, O, raw) << '\n';
        } else {
          out << "reduced orbit category of " << group << " at p = " << p << ": "
              << O.category.object_count() << " objects, " << O.category.morphism_count()
              << " morphisms\n";
          for (ObjectId x = 0; x < O.category.object_count(); ++x) {
            out << "  " << x << ": " << O.category.object(x) << '\n';
          }
          out << format_fp(raw) << '\n';
        }
        return kOk;
      }
      if (hom->parsed()) {
        print_hom(hom_groupoid(group_from_catalogue(group), group_from_catalogue(group2)), opt,
                  out);
        return kOk;
      }
      if (torsors->parsed()) {
        auto const G       = group_from_catalogue(group);
        auto const H       = group_from_catalogue(group2);
        auto const classes = classify_torsors(G, H);
        auto const homs    = hom_groupoid(G, H).components.size();
        if (opt.format == "json") {
          out << to_json(classes, homs) << '\n';
        } else {
          out << group_name(H) << "-torsors in " << group_name(G) << "-sets: " << classes.size()
              << " class(es); conjugacy classes of homomorphisms: " << homs << '\n';
          for (std::size_t i = 0; i < classes.size(); ++i) {
            out << "  [" << i + 1 << "] " << format_gset(classes[i].representative.base) << " ("
                << classes[i].count << " action(s))\n";
          }
        }
        return classes.size() == homs ? kOk : kOtherError;
      }
      if (stone->parsed()) {
        auto const B = boolean_algebra_from_json(read_file(text));
        if (opt.format == "json") {
          out << stone_report_json(B) << '\n';
        } else {
          auto const atoms = spec(B);
          out << "Boolean algebra with " << B.size() << " elements and " << atoms.size()
              << " atoms\natoms:";
          for (auto a : atoms) {
            out << ' ' << B.element(a);
          }
          out << "\nidempotent decompositions: " << idempotent_decompositions(B).size() << '\n';
          out << "algebra_of_set(spec(B)) isomorphic to B: "
              << (boolean_isomorphism(algebra_of_set(atoms.size()), B) ? "yes" : "no") << '\n';
        }
        return kOk;
      }
      if (push->parsed()) {
        auto const F0         = parse_fp(fp0);
        auto const F1         = parse_fp(fp1);
        auto const F2         = parse_fp(fp2);
        auto const [fm, gm]   = split_maps(maps);
        auto const r          = van_kampen_pushout(parse_map(fm, F0, F1), parse_map(gm, F0, F2));
        if (opt.format == "json") {
          out << to_json(r) << '\n';
        } else {
          out << "pushout: " << format_fp(r.presentation) << '\n';
          out << "simplified: " << format_fp(r.simplified) << '\n';
          out << "abelianization: [";
          for (std::size_t i = 0; i < r.abelianization.size(); ++i) {
            out << (i ? ", " : "") << r.abelianization[i];
          }
          out << "]\nidentification: " << to_string(r.identification.status);
          if (r.identification.match) {
            out << ' ' << display_name(r.identification.match->candidate);
          }
          if (r.identification.certified_order) {
            out << " (order " << *r.identification.certified_order << ")";
          }
          out << '\n';
        }
        if (opt.require_identified && r.identification.status != IdStatus::Identified) {
          return kInconclusive;
        }
        return kOk;
      }
      if (gset->parsed()) {
        auto const X = parse_gset(text);
        if (opt.format == "json") {
          out << gset_report_json(X) << '\n';
        } else {
          auto const orbs = orbits(X);
          out << X.size() << " points, " << orbs.size() << " orbit(s):";
          for (auto const& o : orbs) {
            out << " {";
            for (std::size_t i = 0; i < o.size(); ++i) {
              out << (i ? " " : "") << o[i];
            }
            out << '}';
          }
          out << "\nstable subsets: " << subterminal_boolean_algebra(X).size() << '\n';
        }
        return kOk;
      }
      if (selftest->parsed()) {
        bool ok = true;
        run_selftest([&](SuiteResult const& r) {
          out << (r.passed ? "ok   " : "FAIL ") << r.name << ": " << r.detail << '\n';
          ok = ok && r.passed;
        });
        return ok ? kOk : kOtherError;
      }
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return kParseError;
    } catch (SizeError const& e) {
      err << "bound exceeded: " << e.what() << '\n';
      return kSizeError;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kOtherError;
    }
    return kOtherError;
  }

}  // namespace galois
