#include "galois/fp_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "galois/error.hpp"
#include "galois/limits.hpp"

namespace galois {

  Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
      if (!out.empty() && out.back() == -l) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  Word cyclic_reduce(Word w) {
    w                = free_reduce(std::move(w));
    std::size_t b    = 0;
    std::size_t e    = w.size();
    while (e - b >= 2 && w[b] == -w[e - 1]) {
      ++b;
      --e;
    }
    return Word(w.begin() + static_cast<std::ptrdiff_t>(b),
                w.begin() + static_cast<std::ptrdiff_t>(e));
  }

  Word inverse(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) {
      l = -l;
    }
    return out;
  }

  Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  FpGroup::FpGroup(std::size_t generators, std::vector<Word> relators) : gens_(generators) {
    for (auto& r : relators) {
      for (Letter l : r) {
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) > generators) {
          throw std::invalid_argument("FpGroup: relator letter out of range");
        }
      }
      auto reduced = free_reduce(std::move(r));
      if (!reduced.empty()) {
        relators_.push_back(std::move(reduced));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text, std::size_t generators) {
    Word        w;
    bool const  long_form = generators > 26;
    std::size_t i         = 0;
    if (text == "1") {
      return w;
    }
    while (i < text.size()) {
      char const c = text[i];
      if (c == ' ') {
        ++i;
        continue;
      }
      if (long_form) {
        if (c != 'x' && c != 'X') {
          throw ParseError("expected x<i> or X<i> in word '" + std::string(text) + "'");
        }
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        std::size_t idx = 0;
        auto [p, ec]    = std::from_chars(text.data() + i + 1, text.data() + j, idx);
        if (j == i + 1 || ec != std::errc() || idx == 0 || idx > generators) {
          throw ParseError("bad generator token in word '" + std::string(text) + "'");
        }
        w.push_back(c == 'x' ? static_cast<Letter>(idx) : -static_cast<Letter>(idx));
        i = j;
        continue;
      }
      if (std::islower(static_cast<unsigned char>(c))) {
        std::size_t idx = static_cast<std::size_t>(c - 'a');
        if (idx >= generators) {
          throw ParseError("generator out of range in word '" + std::string(text) + "'");
        }
        w.push_back(static_cast<Letter>(idx + 1));
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        std::size_t idx = static_cast<std::size_t>(c - 'A');
        if (idx >= generators) {
          throw ParseError("generator out of range in word '" + std::string(text) + "'");
        }
        w.push_back(-static_cast<Letter>(idx + 1));
      } else {
        throw ParseError("unexpected character in word '" + std::string(text) + "'");
      }
      ++i;
    }
    return w;
  }

  std::string format_word(Word const& w, std::size_t generators) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (Letter l : w) {
      auto const idx = static_cast<std::size_t>(std::abs(l)) - 1;
      if (generators > 26) {
        out += (l > 0 ? 'x' : 'X');
        out += std::to_string(idx + 1);
      } else {
        out += static_cast<char>((l > 0 ? 'a' : 'A') + idx);
      }
    }
    return out;
  }

  FpGroup parse_fp(std::string_view text) {
    if (!text.starts_with("fp:")) {
      throw ParseError("presentation must start with 'fp:'");
    }
    auto rest  = text.substr(3);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("presentation needs fp:<k>:<relators>");
    }
    std::size_t k = 0;
    auto        head = rest.substr(0, colon);
    auto [p, ec]     = std::from_chars(head.data(), head.data() + head.size(), k);
    if (head.empty() || ec != std::errc() || p != head.data() + head.size()) {
      throw ParseError("bad generator count in '" + std::string(text) + "'");
    }
    std::vector<Word> rels;
    auto              body = rest.substr(colon + 1);
    std::size_t       start = 0;
    while (start <= body.size() && !body.empty()) {
      auto pos  = body.find(',', start);
      auto part = body.substr(start, pos == std::string_view::npos ? pos : pos - start);
      if (part.empty()) {
        throw ParseError("empty relator in '" + std::string(text) + "'");
      }
      rels.push_back(parse_word(part, k));
      if (pos == std::string_view::npos) {
        break;
      }
      start = pos + 1;
    }
    return FpGroup(k, std::move(rels));
  }

  std::string format_fp(FpGroup const& F) {
    std::string out = "fp:" + std::to_string(F.generator_count()) + ":";
    bool        first = true;
    for (auto const& r : F.relators()) {
      if (!first) {
        out += ',';
      }
      out += format_word(r, F.generator_count());
      first = false;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identification
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(IdStatus s) {
    switch (s) {
      case IdStatus::Identified:
        return "Identified";
      case IdStatus::Inconclusive:
        return "Inconclusive";
      case IdStatus::OrderExceeded:
        return "OrderExceeded";
    }
    return "?";
  }

  Perm evaluate(Word const& w, std::span<Perm const> images, std::size_t degree) {
    Perm result = Perm::identity(degree);
    for (Letter l : w) {
      auto const& g = images[static_cast<std::size_t>(std::abs(l)) - 1];
      result        = result * (l > 0 ? g : g.inverse());
    }
    return result;
  }

  std::optional<IdentificationMatch> match_candidates(FpGroup const&                F,
                                                      PermGroup const&              P,
                                                      std::vector<PermGroup> const& candidates) {
    if (P.generators().size() != F.generator_count()) {
      throw std::invalid_argument("match_candidates: need one generator per letter");
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      auto const& C = candidates[i];
      if (C.order() != P.order()) {
        continue;
      }
      auto iso = find_isomorphism(P, C);
      if (!iso) {
        continue;
      }
      IdentificationMatch m;
      m.candidate_index = i;
      m.candidate       = C.label();
      for (Elem g : P.generator_elems()) {
        m.witness.push_back(C.element((*iso)(g)));
      }
      for (auto const& r : F.relators()) {
        if (!evaluate(r, m.witness, C.degree()).is_identity()) {
          throw std::logic_error("identification witness violates a relator");
        }
      }
      std::vector<Elem> img;
      for (auto const& w : m.witness) {
        img.push_back(C.index_of(w));
      }
      if (Subgroup::generated_by(C, img).order() != C.order()) {
        throw std::logic_error("identification witness is not surjective");
      }
      return m;
    }
    return std::nullopt;
  }

  IdentificationResult identify_finite(FpGroup const&                F,
                                       std::vector<PermGroup> const& candidates) {
    IdentificationResult result;
    auto                 table = coset_enumeration(F, {}, limits().max_cosets);
    if (!table) {
      return result;
    }
    result.certified_order = table->index;
    if (table->index > std::min(limits().max_order, limits().max_identify_order)) {
      result.status = IdStatus::OrderExceeded;
      return result;
    }
    PermGroup P(table->index, table->generator_actions);
    result.certified_group = P;
    result.match           = match_candidates(F, P, candidates);
    if (result.match) {
      result.status = IdStatus::Identified;
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pushouts
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Word substitute(Word const& w, std::vector<Word> const& images) {
      Word out;
      for (Letter l : w) {
        auto const& img = images[static_cast<std::size_t>(std::abs(l)) - 1];
        out             = concat(std::move(out), l > 0 ? img : inverse(img));
      }
      return free_reduce(std::move(out));
    }

    Word shift(Word w, int offset) {
      for (auto& l : w) {
        l = l > 0 ? l + offset : l - offset;
      }
      return w;
    }

    void validate_map(FpMap const& m, char const* name) {
      std::string const tag = std::string("pushout: map ") + name;
      if (m.images.size() != m.source.generator_count()) {
        throw IllFormedMap(tag + " needs one image per source generator");
      }
      for (auto const& w : m.images) {
        for (Letter l : w) {
          if (l == 0 || static_cast<std::size_t>(std::abs(l)) > m.target.generator_count()) {
            throw IllFormedMap(tag + " uses a generator outside its target");
          }
        }
      }
      auto const lattice = exponent_matrix(m.target);
      for (auto const& r : m.source.relators()) {
        auto v = exponent_vector(substitute(r, m.images), m.target.generator_count());
        if (!in_row_lattice(lattice, v)) {
          throw IllFormedMap(tag + " does not respect the source relators");
        }
      }
    }
  }  // namespace

  FpGroup pushout(FpMap const& f, FpMap const& g) {
    if (!(f.source == g.source)) {
      throw IllFormedMap("pushout: maps have different sources");
    }
    validate_map(f, "f");
    validate_map(g, "g");
    auto const        k1 = f.target.generator_count();
    auto const        k2 = g.target.generator_count();
    std::vector<Word> rels;
    for (auto const& r : f.target.relators()) {
      rels.push_back(r);
    }
    for (auto const& r : g.target.relators()) {
      rels.push_back(shift(r, static_cast<int>(k1)));
    }
    for (std::size_t x = 0; x < f.source.generator_count(); ++x) {
      rels.push_back(
          concat(f.images[x], inverse(shift(g.images[x], static_cast<int>(k1)))));
    }
    return FpGroup(k1 + k2, std::move(rels));
  }

}  // namespace galois
