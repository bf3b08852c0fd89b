#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "galois/fp_group.hpp"

namespace galois {

  namespace {
    // a - q * b, throwing on overflow
    std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
      std::int64_t prod = 0;
      std::int64_t out  = 0;
      if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
        throw std::overflow_error("integer matrix entry overflow");
      }
      return out;
    }

    // row[dst] -= q * row[src]
    void row_sub(IntMatrix& a, std::size_t dst, std::size_t src, std::int64_t q) {
      for (std::size_t j = 0; j < a[dst].size(); ++j) {
        a[dst][j] = sub_mul(a[dst][j], q, a[src][j]);
      }
    }

    void col_sub(IntMatrix& a, std::size_t dst, std::size_t src, std::int64_t q) {
      for (auto& row : a) {
        row[dst] = sub_mul(row[dst], q, row[src]);
      }
    }

    void col_swap(IntMatrix& a, std::size_t i, std::size_t j) {
      for (auto& row : a) {
        std::swap(row[i], row[j]);
      }
    }
  }  // namespace

  std::vector<std::int64_t> invariant_factors(IntMatrix a, std::size_t cols) {
    std::size_t const rows = a.size();
    for (auto& row : a) {
      row.resize(cols, 0);
    }
    std::vector<std::int64_t> diag;
    std::size_t               t = 0;
    while (t < rows && t < cols) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::int64_t best = 0;
      std::size_t  bi = 0, bj = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            bi   = i;
            bj   = j;
          }
        }
      }
      if (best == 0) {
        break;
      }
      std::swap(a[t], a[bi]);
      col_swap(a, t, bj);
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] != 0) {
            row_sub(a, i, t, a[i][t] / a[t][t]);
            if (a[i][t] != 0) {
              dirty = true;
              if (std::llabs(a[i][t]) < std::llabs(a[t][t])) {
                std::swap(a[t], a[i]);
              }
            }
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] != 0) {
            col_sub(a, j, t, a[t][j] / a[t][t]);
            if (a[t][j] != 0) {
              dirty = true;
              if (std::llabs(a[t][j]) < std::llabs(a[t][t])) {
                col_swap(a, t, j);
              }
            }
          }
        }
        if (dirty) {
          continue;
        }
        // pivot must divide the rest of the block
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              row_sub(a, t, i, -1);
              fixed = true;
              break;
            }
          }
        }
        if (!fixed) {
          break;
        }
      }
      diag.push_back(std::llabs(a[t][t]));
      ++t;
    }
    std::vector<std::int64_t> out;
    for (auto d : diag) {
      if (d != 1) {
        out.push_back(d);
      }
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = diag.size(); i < cols; ++i) {
      out.push_back(0);
    }
    return out;
  }

  std::vector<std::int64_t> exponent_vector(Word const& w, std::size_t generators) {
    std::vector<std::int64_t> v(generators, 0);
    for (Letter l : w) {
      v[static_cast<std::size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
    }
    return v;
  }

  IntMatrix exponent_matrix(FpGroup const& F) {
    IntMatrix m;
    for (auto const& r : F.relators()) {
      m.push_back(exponent_vector(r, F.generator_count()));
    }
    return m;
  }

  std::vector<std::int64_t> abelianization(FpGroup const& F) {
    return invariant_factors(exponent_matrix(F), F.generator_count());
  }

  bool in_row_lattice(IntMatrix a, std::vector<std::int64_t> v) {
    std::size_t const cols = v.size();
    std::size_t       r    = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
      // Euclid down column c until only row r is nonzero there
      while (true) {
        std::size_t piv = a.size();
        for (std::size_t i = r; i < a.size(); ++i) {
          if (a[i][c] != 0 && (piv == a.size() || std::llabs(a[i][c]) < std::llabs(a[piv][c]))) {
            piv = i;
          }
        }
        if (piv == a.size()) {
          break;
        }
        std::swap(a[r], a[piv]);
        bool rest_zero = true;
        for (std::size_t i = r + 1; i < a.size(); ++i) {
          if (a[i][c] != 0) {
            row_sub(a, i, r, a[i][c] / a[r][c]);
            rest_zero = rest_zero && a[i][c] == 0;
          }
        }
        if (rest_zero) {
          break;
        }
      }
      if (a[r][c] == 0) {
        continue;
      }
      if (v[c] % a[r][c] != 0) {
        return false;
      }
      auto const q = v[c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j) {
        v[j] = sub_mul(v[j], q, a[r][j]);
      }
      ++r;
    }
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  }

}  // namespace galois
