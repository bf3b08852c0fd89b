#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perm_group.hpp"

namespace galois {

  // Generator i is the letter i + 1, its inverse -(i + 1).
  using Letter = int;
  using Word   = std::vector<Letter>;

  Word free_reduce(Word w);
  Word cyclic_reduce(Word w);
  Word inverse(Word const& w);
  Word concat(Word a, Word const& b);

  class FpGroup {
   public:
    FpGroup() = default;
    // Relators are freely reduced and empty ones dropped. Throws
    // std::invalid_argument on out-of-range letters.
    FpGroup(std::size_t generators, std::vector<Word> relators);

    std::size_t generator_count() const noexcept {
      return gens_;
    }
    std::span<Word const> relators() const noexcept {
      return relators_;
    }

    friend bool operator==(FpGroup const&, FpGroup const&) = default;

   private:
    std::size_t       gens_ = 0;
    std::vector<Word> relators_;
  };

  // Text form "fp:<k>:<relator>,<relator>,...". With k <= 26 generators are
  // a..z and A..Z their inverses; above that, generator i is written "x<i>"
  // and its inverse "X<i>" (1-based), e.g. "x12X3". The empty word is "1".
  FpGroup     parse_fp(std::string_view text);
  std::string format_fp(FpGroup const& F);
  Word        parse_word(std::string_view text, std::size_t generators);
  std::string format_word(Word const& w, std::size_t generators);

  // ---- abelianization ------------------------------------------------------

  using IntMatrix = std::vector<std::vector<std::int64_t>>;

  // Invariant factors d1 | d2 | ... of Z^cols / rowspace(m), units dropped,
  // followed by a 0 for each free factor.
  std::vector<std::int64_t> invariant_factors(IntMatrix m, std::size_t cols);
  IntMatrix                 exponent_matrix(FpGroup const& F);
  std::vector<std::int64_t> abelianization(FpGroup const& F);
  std::vector<std::int64_t> exponent_vector(Word const& w, std::size_t generators);
  // Whether v lies in the integer row span of m.
  bool in_row_lattice(IntMatrix m, std::vector<std::int64_t> v);

  // ---- coset enumeration ---------------------------------------------------

  struct CosetTable {
    std::size_t index = 0;
    // Generator i acts on cosets 0..index-1 by the coset of its inverse:
    // Hw -> Hw x^-1, which makes word evaluation a homomorphism.
    std::vector<Perm> generator_actions;
  };

  // HLT Todd-Coxeter, no lookahead, cosets numbered by first definition.
  // nullopt means the table grew past max_cosets, which says nothing about
  // finiteness.
  std::optional<CosetTable> coset_enumeration(FpGroup const&          F,
                                              std::vector<Word> const& subgroup,
                                              std::size_t              max_cosets);

  // ---- Tietze simplification -----------------------------------------------

  struct SimplifiedPresentation {
    FpGroup           group;
    // Image of each original generator as a word in the new generators.
    std::vector<Word> generator_images;
  };

  // Free and cyclic reduction, removal of trivial and duplicate relators, and
  // elimination of generators defined by relators of length 1 or 2.
  SimplifiedPresentation simplify_with_map(FpGroup const& F);
  FpGroup                simplify(FpGroup const& F);

  // ---- identification ------------------------------------------------------

  enum class IdStatus { Identified, Inconclusive, OrderExceeded };

  struct IdentificationMatch {
    std::size_t       candidate_index = 0;
    std::string       candidate;
    // Image of each generator of F in the candidate group.
    std::vector<Perm> witness;
  };

  struct IdentificationResult {
    IdStatus                           status = IdStatus::Inconclusive;
    std::optional<IdentificationMatch> match;
    std::optional<std::size_t>         certified_order;
    // Regular permutation representation read off the coset table.
    std::optional<PermGroup>           certified_group;
  };

  std::string to_string(IdStatus s);

  // Certifies |F| by coset enumeration, then looks for a candidate of that
  // order admitting a surjection from F (generator images satisfying every
  // relator), which is then an isomorphism. Orders above
  // limits().max_identify_order are reported as OrderExceeded.
  IdentificationResult identify_finite(FpGroup const&                F,
                                       std::vector<PermGroup> const& candidates);

  // Looks for a candidate isomorphic to P, where P is the image of F under
  // a faithful representation with generator i of P the image of letter i.
  std::optional<IdentificationMatch> match_candidates(FpGroup const&                F,
                                                      PermGroup const&              P,
                                                      std::vector<PermGroup> const& candidates);

  // Evaluates w with generator i mapped to images[i].
  Perm evaluate(Word const& w, std::span<Perm const> images, std::size_t degree);

  // ---- pushouts ------------------------------------------------------------

  struct FpMap {
    FpGroup           source;
    FpGroup           target;
    std::vector<Word> images;  // one per source generator
  };

  // Generators of f.target then g.target, relators of both, and f(x) g(x)^-1
  // for each source generator x. Throws IllFormedMap on out-of-range letters,
  // mismatched sources, or maps that fail to respect relators after
  // abelianization.
  FpGroup pushout(FpMap const& f, FpMap const& g);

}  // namespace galois
