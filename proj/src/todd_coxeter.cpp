#include <cstdlib>

#include "galois/fp_group.hpp"

namespace galois {

  namespace {

    constexpr std::int32_t kUndef = -1;

    // Coset table with HLT definition strategy and Holt-style coincidence
    // handling (union-find on cosets, smaller number survives).
    class Enumerator {
     public:
      Enumerator(std::size_t generators, std::size_t max_cosets)
          : cols_(2 * generators), max_(max_cosets) {
        new_row();
      }

      bool overflow() const noexcept {
        return overflow_;
      }
      std::size_t rows() const noexcept {
        return parent_.size();
      }
      bool live(std::size_t c) const noexcept {
        return parent_[c] == static_cast<std::int32_t>(c);
      }

      static std::size_t column(Letter l) {
        auto const g = static_cast<std::size_t>(std::abs(l)) - 1;
        return 2 * g + (l > 0 ? 0 : 1);
      }

      std::int32_t& at(std::size_t c, std::size_t x) {
        return table_[c * cols_ + x];
      }

      void scan_and_fill(std::size_t c, std::vector<std::size_t> const& w) {
        if (w.empty()) {
          return;
        }
        auto f = static_cast<std::int32_t>(c);
        auto b = static_cast<std::int32_t>(c);
        long i = 0;
        long j = static_cast<long>(w.size()) - 1;
        while (true) {
          while (i <= j && at(f, w[i]) != kUndef) {
            f = at(f, w[i]);
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && at(b, w[j] ^ 1) != kUndef) {
            b = at(b, w[j] ^ 1);
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (j == i) {
            // deduction
            at(f, w[i])     = b;
            at(b, w[i] ^ 1) = f;
            return;
          }
          define(static_cast<std::size_t>(f), w[i]);
          if (overflow_) {
            return;
          }
        }
      }

      void define(std::size_t c, std::size_t x) {
        if (rows() >= max_) {
          overflow_ = true;
          return;
        }
        auto const n = static_cast<std::int32_t>(new_row());
        at(c, x)     = n;
        at(n, x ^ 1) = static_cast<std::int32_t>(c);
      }

      std::size_t cols() const noexcept {
        return cols_;
      }

      std::int32_t rep(std::int32_t k) {
        std::int32_t r = k;
        while (parent_[r] != r) {
          r = parent_[r];
        }
        while (parent_[k] != r) {
          auto next  = parent_[k];
          parent_[k] = r;
          k          = next;
        }
        return r;
      }

     private:
      std::size_t new_row() {
        std::size_t const n = parent_.size();
        parent_.push_back(static_cast<std::int32_t>(n));
        table_.resize(table_.size() + cols_, kUndef);
        return n;
      }

      void merge(std::int32_t k, std::int32_t l) {
        auto a = rep(k);
        auto b = rep(l);
        if (a == b) {
          return;
        }
        if (a > b) {
          std::swap(a, b);
        }
        parent_[b] = a;
        queue_.push_back(b);
      }

      void coincidence(std::int32_t a, std::int32_t b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t q = 0; q < queue_.size(); ++q) {
          auto const g = queue_[q];
          for (std::size_t x = 0; x < cols_; ++x) {
            auto const d = at(g, x);
            if (d == kUndef) {
              continue;
            }
            at(d, x ^ 1) = kUndef;
            auto const mu = rep(g);
            auto const nu = rep(d);
            if (at(mu, x) != kUndef) {
              merge(nu, at(mu, x));
            } else if (at(nu, x ^ 1) != kUndef) {
              merge(mu, at(nu, x ^ 1));
            } else {
              at(mu, x)     = nu;
              at(nu, x ^ 1) = mu;
            }
          }
        }
      }

      std::size_t               cols_;
      std::size_t               max_;
      bool                      overflow_ = false;
      std::vector<std::int32_t> table_;
      std::vector<std::int32_t> parent_;
      std::vector<std::int32_t> queue_;
    };

    std::vector<std::size_t> columns(Word const& w) {
      std::vector<std::size_t> out;
      for (Letter l : w) {
        out.push_back(Enumerator::column(l));
      }
      return out;
    }

  }  // namespace

  std::optional<CosetTable> coset_enumeration(FpGroup const&           F,
                                              std::vector<Word> const& subgroup,
                                              std::size_t              max_cosets) {
    if (max_cosets == 0) {
      throw std::invalid_argument("coset_enumeration: max_cosets must be positive");
    }
    std::size_t const k = F.generator_count();
    Enumerator        e(k, max_cosets);
    std::vector<std::vector<std::size_t>> rels;
    for (auto const& r : F.relators()) {
      rels.push_back(columns(r));
    }
    for (auto const& w : subgroup) {
      e.scan_and_fill(0, columns(free_reduce(w)));
      if (e.overflow()) {
        return std::nullopt;
      }
    }
    for (std::size_t c = 0; c < e.rows(); ++c) {
      for (auto const& r : rels) {
        if (!e.live(c)) {
          break;
        }
        e.scan_and_fill(c, r);
        if (e.overflow()) {
          return std::nullopt;
        }
      }
      for (std::size_t x = 0; x < e.cols() && e.live(c); ++x) {
        if (e.at(c, x) == kUndef) {
          e.define(c, x);
          if (e.overflow()) {
            return std::nullopt;
          }
        }
      }
    }

    std::vector<std::int32_t> number(e.rows(), -1);
    std::size_t               index = 0;
    for (std::size_t c = 0; c < e.rows(); ++c) {
      if (e.live(c)) {
        number[c] = static_cast<std::int32_t>(index++);
      }
    }
    CosetTable out;
    out.index = index;
    for (std::size_t g = 0; g < k; ++g) {
      std::vector<Point> img(index);
      for (std::size_t c = 0; c < e.rows(); ++c) {
        if (e.live(c)) {
          auto const target = e.rep(e.at(c, 2 * g + 1));
          img[static_cast<std::size_t>(number[c])] = static_cast<Point>(number[target]);
        }
      }
      out.generator_actions.emplace_back(std::move(img));
    }
    return out;
  }

}  // namespace galois
