#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace galois {

  using Point = std::uint32_t;

  // A permutation of {0, ..., degree - 1}, stored by its image array.
  // Products compose as functions: (a * b)(x) == a(b(x)).
  class Perm {
   public:
    Perm() = default;
    // Throws std::invalid_argument unless images is a bijection.
    explicit Perm(std::vector<Point> images);

    static Perm identity(std::size_t degree);
    // Cycles use 0-based points; points not mentioned are fixed.
    static Perm from_cycles(std::size_t                           degree,
                            std::vector<std::vector<Point>> const& cycles);

    std::size_t degree() const noexcept {
      return images_.size();
    }
    Point operator[](std::size_t i) const noexcept {
      return images_[i];
    }
    std::span<Point const> images() const noexcept {
      return images_;
    }

    Perm        operator*(Perm const& other) const;
    Perm        inverse() const;
    Perm        pow(long long k) const;
    bool        is_identity() const noexcept;
    std::size_t order() const;

    // Disjoint-cycle notation with 1-based points, "()" for the identity.
    std::string to_cycle_string() const;

    friend bool operator==(Perm const&, Perm const&)  = default;
    friend auto operator<=>(Perm const&, Perm const&) = default;

   private:
    std::vector<Point> images_;
  };

  struct PermHash {
    std::size_t operator()(Perm const& p) const noexcept;
  };

}  // namespace galois
