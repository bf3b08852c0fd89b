#pragma once

#include <cstddef>

namespace galois {

  // Search and enumeration bounds shared by every module. The CLI adjusts
  // these once at startup; library code only reads them.
  struct Limits {
    std::size_t max_order = 20000;               // elements per PermGroup
    std::size_t max_cosets = 50000;              // Todd-Coxeter table rows
    std::size_t max_identify_order = 4096;       // regular representation degree
    std::size_t max_hom_candidates = 10'000'000; // generator-image tuples
    std::size_t max_functor_candidates = 10'000; // brute-force Hom(BG, BH)
    std::size_t max_torsor_carrier = 24;
    std::size_t max_subgroups = 100'000;         // subgroup / family searches
    std::size_t max_atoms = 16;                  // Boolean algebras
  };

  Limits const& limits();
  void set_limits(Limits const& l);

  // Restores the previous limits on destruction.
  class ScopedLimits {
   public:
    explicit ScopedLimits(Limits const& l) : saved_(limits()) {
      set_limits(l);
    }
    ~ScopedLimits() {
      set_limits(saved_);
    }
    ScopedLimits(ScopedLimits const&)            = delete;
    ScopedLimits& operator=(ScopedLimits const&) = delete;

   private:
    Limits saved_;
  };

}  // namespace galois
