#include "galois/serialize.hpp"

#include <json.hpp>

#include "galois/catalogue.hpp"

namespace galois {

  using Json = nlohmann::ordered_json;

  namespace {
    Json cycles(std::span<Perm const> perms) {
      Json out = Json::array();
      for (auto const& p : perms) {
        out.push_back(p.to_cycle_string());
      }
      return out;
    }

    Json group_json(PermGroup const& G) {
      Json j;
      j["name"]       = group_name(G);
      j["order"]      = G.order();
      j["degree"]     = G.degree();
      j["generators"] = cycles(G.generators());
      return j;
    }

    Json identification_json(IdentificationResult const& id, std::string const& source) {
      Json j;
      j["status"] = to_string(id.status);
      if (id.certified_order) {
        j["order"] = *id.certified_order;
      } else {
        j["order"] = nullptr;
      }
      if (id.match) {
        Json m;
        m["candidate"] = display_name(id.match->candidate);
        if (!source.empty()) {
          m["source"] = source;
        }
        m["witness"] = cycles(id.match->witness);
        j["match"]   = std::move(m);
      } else {
        j["match"] = nullptr;
      }
      return j;
    }

    Json category_json(FinCategory const& C) {
      Json j;
      j["objects"] = Json::array();
      for (ObjectId x = 0; x < C.object_count(); ++x) {
        j["objects"].push_back(C.object(x));
      }
      j["identities"] = Json::array();
      for (ObjectId x = 0; x < C.object_count(); ++x) {
        j["identities"].push_back(C.identity(x));
      }
      j["morphisms"] = Json::array();
      for (MorphismId f = 0; f < C.morphism_count(); ++f) {
        auto const& m = C.morphism(f);
        j["morphisms"].push_back(Json{{"src", m.source}, {"dst", m.target}, {"label", m.label}});
      }
      // [g, f, g o f] for every composable pair
      j["composition"] = Json::array();
      for (MorphismId f = 0; f < C.morphism_count(); ++f) {
        auto const out   = C.outgoing(C.morphism(f).target);
        auto const after = C.composites_after(f);
        for (std::size_t i = 0; i < out.size(); ++i) {
          j["composition"].push_back(Json::array({out[i], f, after[i]}));
        }
      }
      return j;
    }

    Json subgroups_json(OrbitCategory const& O) {
      Json out = Json::array();
      for (auto const& H : O.subgroups) {
        std::vector<Perm> gens;
        for (Elem g : H.generators()) {
          gens.push_back(H.parent().element(g));
        }
        out.push_back(Json{{"order", H.order()}, {"generators", cycles(gens)}});
      }
      return out;
    }
  }  // namespace

  std::string group_name(PermGroup const& G) {
    return display_name(describe(G));
  }

  std::string to_json(GaloisReport const& r) {
    Json j;
    j["schema"]       = 1;
    j["input"]        = Json{{"group", r.group_spec}, {"prime", r.prime}};
    j["theorem_path"] = to_string(r.theorem_path);
    Json result;
    if (r.group) {
      result["group"] = group_json(*r.group);
    }
    if (r.theorem_path == TheoremPath::StmodNerve) {
      result["orbit_category"] = Json{{"objects", r.objects},
                                      {"morphisms", r.morphisms},
                                      {"components", r.components}};
      result["presentation"]   = Json{{"raw_generators", r.raw_generators},
                                    {"raw_relators", r.raw_relators},
                                    {"simplified", r.presentation ? format_fp(*r.presentation) : ""}};
      if (r.identification) {
        result["identification"] = identification_json(*r.identification, r.candidate_source);
      }
    }
    j["result"]       = std::move(result);
    j["cross_checks"] = Json::array();
    for (auto const& c : r.cross_checks) {
      j["cross_checks"].push_back(Json{{"path", to_string(c.path)},
                                       {"agreed", c.agreed},
                                       {"expected", c.expected},
                                       {"detail", c.detail}});
    }
    j["note"] = r.note;
    return j.dump(2);
  }

  std::string to_json(HomGroupoidReport const& r) {
    Json j;
    j["schema"]     = 1;
    j["source"]     = group_json(r.source);
    j["target"]     = group_json(r.target);
    j["components"] = Json::array();
    for (auto const& c : r.components) {
      std::vector<Perm> images;
      for (Elem x : c.representative.generator_images()) {
        images.push_back(r.target.element(x));
      }
      auto const aut = c.automorphisms.as_group();
      j["components"].push_back(
          Json{{"representative", cycles(images)},
               {"automorphisms", Json{{"group", group_name(aut)}, {"order", aut.order()}}},
               {"size", c.size}});
    }
    return j.dump(2);
  }

  std::string to_json(FinCategory const& C) {
    Json const j = category_json(C);
    Json       out;
    out["schema"] = 1;
    for (auto const& [k, v] : j.items()) {
      out[k] = v;
    }
    return out.dump(2);
  }

  std::string to_json(OrbitCategory const& O) {
    Json const cat = category_json(O.category);
    Json       out;
    out["schema"] = 1;
    for (auto const& [k, v] : cat.items()) {
      out[k] = v;
    }
    out["subgroups"] = subgroups_json(O);
    return out.dump(2);
  }

  std::string to_json(PushoutReport const& r) {
    Json j;
    j["schema"]         = 1;
    j["presentation"]   = format_fp(r.presentation);
    j["simplified"]     = format_fp(r.simplified);
    j["abelianization"] = r.abelianization;
    j["identification"] = identification_json(r.identification, "");
    return j.dump(2);
  }

  std::string to_json(std::vector<TorsorClass> const& classes, std::size_t hom_classes) {
    Json j;
    j["schema"]  = 1;
    j["classes"] = Json::array();
    for (auto const& c : classes) {
      j["classes"].push_back(
          Json{{"gset", format_gset(c.representative.base)}, {"actions", c.count}});
    }
    j["hom_conjugacy_classes"] = hom_classes;
    j["agrees"]                = classes.size() == hom_classes;
    return j.dump(2);
  }

  std::string orbit_nerve_json(std::string const&   spec,
                               unsigned             p,
                               OrbitCategory const& O,
                               FpGroup const&       raw) {
    Json j;
    j["schema"]     = 1;
    j["input"]      = Json{{"group", spec}, {"prime", p}};
    j["components"] = nerve_pi0(O.category);
    j["basepoint"]  = 0;
    j["presentation"] = format_fp(raw);
    j["simplified"]   = format_fp(simplify(raw));
    Json cat = category_json(O.category);
    cat["subgroups"] = subgroups_json(O);
    j["category"] = std::move(cat);
    return j.dump(2);
  }

  std::string stone_report_json(BooleanAlgebra const& B) {
    Json j;
    j["schema"]  = 1;
    j["algebra"] = Json{{"universe", B.universe()},
                        {"elements", std::vector<BooleanAlgebra::Mask>(B.elements().begin(),
                                                                       B.elements().end())}};
    auto const atoms = spec(B);
    j["atoms"] = Json::array();
    for (auto a : atoms) {
      j["atoms"].push_back(B.element(a));
    }
    j["decompositions"] = idempotent_decompositions(B).size();
    j["roundtrip"]      = boolean_isomorphism(algebra_of_set(atoms.size()), B).has_value();
    return j.dump(2);
  }

  std::string gset_report_json(GSet const& X) {
    Json j;
    j["schema"] = 1;
    j["gset"]   = format_gset(X);
    j["orbits"] = orbits(X);
    j["stable_subsets"] = subterminal_boolean_algebra(X).size();
    return j.dump(2);
  }

}  // namespace galois
