#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace galois {

  // A finite Boolean algebra, stored as a field of subsets of a universe of
  // at most 64 points: meet is intersection, join is union, complement is
  // relative to the top element. Elements are kept in increasing mask order,
  // so the bottom is index 0 and the top is the last index.
  class BooleanAlgebra {
   public:
    using Mask = std::uint64_t;

    // Throws MalformedAlgebra unless the masks are closed under the
    // operations.
    BooleanAlgebra(std::size_t universe, std::vector<Mask> elements);

    // Abstract presentation by operation tables; every axiom is checked
    // exhaustively and the result is re-encoded over its atoms. Throws
    // MalformedAlgebra, or SizeError above 256 elements.
    static BooleanAlgebra from_tables(std::size_t                                 n,
                                      std::vector<std::vector<std::size_t>> const& meet,
                                      std::vector<std::vector<std::size_t>> const& join,
                                      std::vector<std::size_t> const&              complement,
                                      std::size_t                                  bottom,
                                      std::size_t                                  top);

    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::size_t universe() const noexcept {
      return universe_;
    }
    Mask element(std::size_t i) const {
      return elements_.at(i);
    }
    std::span<Mask const> elements() const noexcept {
      return elements_;
    }
    std::size_t index_of(Mask m) const;  // throws std::invalid_argument

    std::size_t meet(std::size_t a, std::size_t b) const;
    std::size_t join(std::size_t a, std::size_t b) const;
    std::size_t complement(std::size_t a) const;
    std::size_t bottom() const noexcept {
      return 0;
    }
    std::size_t top() const noexcept {
      return elements_.size() - 1;
    }
    bool leq(std::size_t a, std::size_t b) const {
      return (element(a) & ~element(b)) == 0;
    }

   private:
    std::size_t       universe_;
    std::vector<Mask> elements_;
  };

  // Atoms (minimal nonzero elements) as element indices, increasing.
  std::vector<std::size_t> spec(BooleanAlgebra const& B);

  // Power-set algebra of an n-element set; atom i is the singleton {i}.
  // Throws SizeError if n > limits().max_atoms.
  BooleanAlgebra algebra_of_set(std::size_t n);

  // Element map B -> C preserving meet, join and complement, if one exists.
  std::optional<std::vector<std::size_t>> boolean_isomorphism(BooleanAlgebra const& B,
                                                              BooleanAlgebra const& C);

  // Every family of pairwise-disjoint nonzero elements joining to the top,
  // i.e. one per set partition of the atoms. Each family is a sorted list of
  // element indices. Throws SizeError above 12 atoms.
  std::vector<std::vector<std::size_t>> idempotent_decompositions(BooleanAlgebra const& B);

  // JSON: {"schema":1,"universe":n,"elements":[mask,...]}
  std::string    to_json(BooleanAlgebra const& B);
  BooleanAlgebra boolean_algebra_from_json(std::string const& text);

}  // namespace galois
