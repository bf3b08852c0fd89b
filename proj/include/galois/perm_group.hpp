#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perm.hpp"

namespace galois {

  // Index of an element in the sorted element list of a PermGroup. The
  // identity is always index 0 because it is lexicographically least.
  using Elem = std::uint32_t;

  // A finite group given by permutation generators. Elements are enumerated
  // eagerly at construction and kept in lexicographic order of their image
  // arrays. Values are immutable and cheap to copy (shared storage).
  class PermGroup {
   public:
    // Throws SizeError if the closure exceeds limits().max_order.
    PermGroup(std::size_t degree, std::vector<Perm> generators, std::string label = {});

    static PermGroup trivial();

    std::size_t             degree() const noexcept;
    std::span<Perm const>   generators() const noexcept;
    std::span<Elem const>   generator_elems() const noexcept;
    std::size_t             order() const noexcept;
    std::span<Perm const>   elements() const noexcept;
    Perm const&             element(Elem x) const;
    std::optional<Elem>     find(Perm const& p) const;
    Elem                    index_of(Perm const& p) const;  // throws if absent
    static constexpr Elem   identity() noexcept {
      return 0;
    }

    Elem        mul(Elem a, Elem b) const;
    Elem        inv(Elem a) const noexcept;
    Elem        pow(Elem a, long long k) const;
    Elem        conj(Elem g, Elem x) const;  // g x g^-1
    std::size_t element_order(Elem a) const noexcept;
    bool        commute(Elem a, Elem b) const;
    bool        is_abelian() const;

    std::string const& label() const noexcept;
    PermGroup          with_label(std::string label) const;

    // True when both handles share the same storage.
    bool same_as(PermGroup const& other) const noexcept {
      return impl_ == other.impl_;
    }

   private:
    struct Impl;
    explicit PermGroup(std::shared_ptr<Impl const> impl);
    std::shared_ptr<Impl const> impl_;
  };

  class Subgroup {
   public:
    static Subgroup generated_by(PermGroup const& G, std::span<Elem const> gens);
    static Subgroup whole(PermGroup const& G);
    static Subgroup trivial(PermGroup const& G);
    // members must already form a subgroup; checked, std::invalid_argument
    // otherwise.
    static Subgroup from_members(PermGroup const& G, std::vector<Elem> members);

    PermGroup const&      parent() const noexcept {
      return parent_;
    }
    std::span<Elem const> members() const noexcept {
      return members_;
    }
    std::size_t order() const noexcept {
      return members_.size();
    }
    bool contains(Elem x) const noexcept {
      return mask_[x];
    }
    bool is_trivial() const noexcept {
      return members_.size() == 1;
    }
    bool is_subgroup_of(Subgroup const& other) const;
    bool is_normal() const;

    Subgroup          intersect(Subgroup const& other) const;
    Subgroup          conjugate(Elem g) const;  // g H g^-1
    std::vector<Elem> generators() const;       // small generating set
    PermGroup         as_group(std::string label = {}) const;

    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a.members_ == b.members_;
    }
    friend bool operator<(Subgroup const& a, Subgroup const& b) {
      if (a.order() != b.order()) {
        return a.order() < b.order();
      }
      return a.members_ < b.members_;
    }

   private:
    Subgroup(PermGroup G, std::vector<Elem> members);
    PermGroup         parent_;
    std::vector<Elem> members_;
    std::vector<bool> mask_;
  };

  // A homomorphism stored both by its generator images and as a full map on
  // element indices.
  class GroupHom {
   public:
    // Images are for source.generator_elems(). Returns nullopt if the
    // assignment does not extend to a homomorphism.
    static std::optional<GroupHom> extend(PermGroup const& source,
                                          PermGroup const& target,
                                          std::vector<Elem> generator_images);

    PermGroup const&      source() const noexcept {
      return source_;
    }
    PermGroup const&      target() const noexcept {
      return target_;
    }
    std::span<Elem const> generator_images() const noexcept {
      return gen_images_;
    }
    std::span<Elem const> element_map() const noexcept {
      return map_;
    }
    Elem operator()(Elem x) const noexcept {
      return map_[x];
    }

    Subgroup image() const;
    Subgroup kernel() const;
    bool     is_injective() const;
    bool     is_surjective() const;

    friend bool operator==(GroupHom const& a, GroupHom const& b) {
      return a.map_ == b.map_;
    }

   private:
    GroupHom(PermGroup s, PermGroup t, std::vector<Elem> gi, std::vector<Elem> map);
    PermGroup         source_;
    PermGroup         target_;
    std::vector<Elem> gen_images_;
    std::vector<Elem> map_;
  };

  // Extends gens -> images (gens must generate G) along the Cayley graph of
  // G, checking phi(s x) == phi(s) phi(x) on every edge. A map satisfying
  // this on all edges is multiplicative. Returns the full element map.
  std::optional<std::vector<Elem>> extend_to_homomorphism(PermGroup const&      G,
                                                          std::span<Elem const> gens,
                                                          PermGroup const&      H,
                                                          std::span<Elem const> images);

  // Exhaustive check of phi(ab) == phi(a) phi(b) over all pairs.
  bool is_multiplicative(PermGroup const&      G,
                         PermGroup const&      H,
                         std::span<Elem const> element_map);

  // Greedy generating set, preferring elements of large order.
  std::vector<Elem> small_generating_set(PermGroup const& G, std::span<Elem const> members);

  // ---- subgroup machinery --------------------------------------------------

  // g with g^p == e and g != e.
  std::vector<Elem> order_p_elements(PermGroup const& G, unsigned p);
  Subgroup          normal_closure(PermGroup const& G, std::span<Elem const> S);
  Subgroup          centralizer(PermGroup const& G, std::span<Elem const> S);
  Subgroup          normalizer(PermGroup const& G, Subgroup const& H);
  Subgroup          center(PermGroup const& G);
  // Normal closure of the elements of order coprime to p (O^p(G)).
  Subgroup          p_residual(PermGroup const& G, unsigned p);

  struct Quotient {
    PermGroup group;
    GroupHom  projection;
  };
  // Action of G on the left cosets of N. Throws NotNormal.
  Quotient quotient(PermGroup const& G, Subgroup const& N);

  // All elementary abelian p-subgroups, sorted by (order, members). Throws
  // SizeError past limits().max_subgroups.
  std::vector<Subgroup> elementary_abelian_p_subgroups(PermGroup const& G,
                                                       unsigned         p,
                                                       bool             include_trivial);
  // Members of `subgroups` not properly contained in another member.
  std::vector<Subgroup> maximal_members(std::vector<Subgroup> const& subgroups);
  std::vector<Subgroup> sylow_subgroups(PermGroup const& G, unsigned p);
  // Conjugacy classes of a list of subgroups (each class sorted).
  std::vector<std::vector<Subgroup>> conjugacy_classes(std::vector<Subgroup> const& subgroups);

  // ---- isomorphism ---------------------------------------------------------

  std::optional<GroupHom> find_isomorphism(PermGroup const& A, PermGroup const& B);
  bool                    are_isomorphic(PermGroup const& A, PermGroup const& B);

  bool        is_prime(unsigned long long n);
  bool        is_p_power(std::size_t n, unsigned p);

}  // namespace galois
