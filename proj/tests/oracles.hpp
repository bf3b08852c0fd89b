#pragma once

// Reference computations for the tests. They work on raw image arrays and
// plain sets and never call the library's group algorithms, so agreement
// with the library is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "galois/perm_group.hpp"

namespace oracle {

  using Images = std::vector<std::uint32_t>;

  inline Images images(galois::Perm const& p) {
    return Images(p.images().begin(), p.images().end());
  }

  // (a o b)(x) = a(b(x))
  inline Images compose(Images const& a, Images const& b) {
    Images out(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) {
      out[x] = a[b[x]];
    }
    return out;
  }

  inline Images inverse(Images const& a) {
    Images out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      out[a[x]] = static_cast<std::uint32_t>(x);
    }
    return out;
  }

  inline Images identity(std::size_t n) {
    Images out(n);
    std::iota(out.begin(), out.end(), 0u);
    return out;
  }

  // Naive closure: keep multiplying until nothing new appears.
  inline std::set<Images> closure(std::vector<Images> const& gens, std::size_t degree) {
    std::set<Images> all{identity(degree)};
    bool             grew = true;
    while (grew) {
      grew = false;
      std::vector<Images> snapshot(all.begin(), all.end());
      for (auto const& x : snapshot) {
        for (auto const& g : gens) {
          if (all.insert(compose(g, x)).second) {
            grew = true;
          }
        }
      }
    }
    return all;
  }

  inline std::set<Images> elements(galois::PermGroup const& G) {
    std::vector<Images> gens;
    for (auto const& g : G.generators()) {
      gens.push_back(images(g));
    }
    return closure(gens, G.degree());
  }

  inline std::size_t element_order(Images const& a) {
    Images      x = a;
    std::size_t k = 1;
    while (x != identity(a.size())) {
      x = compose(a, x);
      ++k;
    }
    return k;
  }

  // Direct sum of two permutations on disjoint point sets.
  inline Images pair(Images const& a, Images const& b) {
    Images out = a;
    for (auto y : b) {
      out.push_back(static_cast<std::uint32_t>(a.size() + y));
    }
    return out;
  }

  // Generator images (h_1..h_k) define a homomorphism G -> H exactly when
  // the subgroup of G x H generated by the pairs (g_i, h_i) is the graph of
  // a function, i.e. has order |G|.
  inline bool defines_hom(galois::PermGroup const& G,
                          galois::PermGroup const& H,
                          std::vector<Images> const& hs) {
    std::vector<Images> gens;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      gens.push_back(pair(images(G.generators()[i]), hs[i]));
    }
    return closure(gens, G.degree() + H.degree()).size() == G.order();
  }

  // All homomorphisms as generator-image tuples.
  inline std::vector<std::vector<Images>> hom_tuples(galois::PermGroup const& G,
                                                     galois::PermGroup const& H) {
    auto const          hel = elements(H);
    std::vector<Images> pool(hel.begin(), hel.end());
    std::size_t const   k = G.generators().size();
    std::vector<std::vector<Images>> out;
    std::vector<std::size_t>         digit(k, 0);
    while (true) {
      std::vector<Images> hs;
      for (auto d : digit) {
        hs.push_back(pool[d]);
      }
      if (defines_hom(G, H, hs)) {
        out.push_back(hs);
      }
      std::size_t i = 0;
      while (i < k && ++digit[i] == pool.size()) {
        digit[i++] = 0;
      }
      if (i == k) {
        return out;
      }
    }
  }

  // Orbits of H acting on hom tuples by conjugation.
  inline std::size_t hom_class_count(galois::PermGroup const&             H,
                                     std::vector<std::vector<Images>> const& homs) {
    auto const                     hel  = elements(H);
    std::set<std::vector<Images>>  canon;
    for (auto const& t : homs) {
      std::vector<Images> best;
      for (auto const& x : hel) {
        std::vector<Images> c;
        for (auto const& h : t) {
          c.push_back(compose(compose(x, h), inverse(x)));
        }
        if (best.empty() || c < best) {
          best = c;
        }
      }
      canon.insert(best);
    }
    return canon.size();
  }

  inline std::size_t hom_class_count(galois::PermGroup const& G, galois::PermGroup const& H) {
    return hom_class_count(H, hom_tuples(G, H));
  }

  inline std::size_t centralizer_order(galois::PermGroup const& H,
                                       std::vector<Images> const& S) {
    std::size_t n = 0;
    for (auto const& x : elements(H)) {
      bool ok = true;
      for (auto const& s : S) {
        ok = ok && compose(x, s) == compose(s, x);
      }
      n += ok;
    }
    return n;
  }

  // Points of G/K fixed by every element of H, with cosets as explicit sets.
  inline std::size_t fixed_cosets(std::set<Images> const& G,
                                  std::set<Images> const& H,
                                  std::set<Images> const& K) {
    std::set<std::set<Images>> cosets;
    for (auto const& g : G) {
      std::set<Images> c;
      for (auto const& k : K) {
        c.insert(compose(g, k));
      }
      cosets.insert(c);
    }
    std::size_t fixed = 0;
    for (auto const& c : cosets) {
      bool ok = true;
      for (auto const& h : H) {
        std::set<Images> moved;
        for (auto const& x : c) {
          moved.insert(compose(h, x));
        }
        ok = ok && moved == c;
      }
      fixed += ok;
    }
    return fixed;
  }

  // Bell numbers from the triangle recurrence.
  inline std::size_t bell(std::size_t n) {
    std::vector<std::size_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> next{row.back()};
      for (auto v : row) {
        next.push_back(next.back() + v);
      }
      row = next;
    }
    return row.front();
  }

  inline std::int64_t gcd_all(std::vector<std::int64_t> const& v) {
    std::int64_t g = 0;
    for (auto x : v) {
      g = std::gcd(g, x);
    }
    return g;
  }

  // Determinantal divisors of an integer matrix with two columns: d1 is the
  // gcd of the entries, d1 d2 the gcd of the 2x2 minors.
  inline std::pair<std::int64_t, std::int64_t> determinantal_divisors(
      std::vector<std::vector<std::int64_t>> const& m) {
    std::vector<std::int64_t> entries, minors;
    for (auto const& r : m) {
      entries.push_back(r[0]);
      entries.push_back(r[1]);
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        minors.push_back(m[i][0] * m[j][1] - m[i][1] * m[j][0]);
      }
    }
    return {gcd_all(entries), gcd_all(minors)};
  }

}  // namespace oracle
