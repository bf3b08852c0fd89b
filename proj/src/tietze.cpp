#include <algorithm>
#include <cstdlib>
#include <set>

#include "galois/fp_group.hpp"

namespace galois {

  namespace {

    // Canonical representative of a relator up to rotation and inversion.
    Word canonical(Word const& w) {
      Word best = w;
      for (auto const& base : {w, inverse(w)}) {
        Word r = base;
        for (std::size_t k = 0; k < r.size(); ++k) {
          std::rotate(r.begin(), r.begin() + 1, r.end());
          if (r < best) {
            best = r;
          }
        }
      }
      return best;
    }

    class Substitution {
     public:
      explicit Substitution(std::size_t generators) : target_(generators, kKeep) {}

      bool eliminated(std::size_t g) const {
        return target_[g] != kKeep;
      }

      // g := letter (0 means the empty word)
      void set(std::size_t g, Letter letter) {
        target_[g] = letter;
      }

      // Resolves generator g to a letter over kept generators, or 0.
      Letter resolve(std::size_t g) {
        Letter l = static_cast<Letter>(g + 1);
        while (l != 0) {
          auto const idx = static_cast<std::size_t>(std::abs(l)) - 1;
          if (target_[idx] == kKeep) {
            break;
          }
          Letter const t = target_[idx];
          l              = l > 0 ? t : -t;
        }
        target_[g] = target_[g] == kKeep ? kKeep : l;
        return l;
      }

      Word apply(Word const& w) {
        Word out;
        out.reserve(w.size());
        for (Letter l : w) {
          auto const g = static_cast<std::size_t>(std::abs(l)) - 1;
          if (!eliminated(g)) {
            out.push_back(l);
            continue;
          }
          Letter r = resolve(g);
          if (r != 0) {
            out.push_back(l > 0 ? r : -r);
          }
        }
        return cyclic_reduce(std::move(out));
      }

     private:
      static constexpr Letter kKeep = 0x7fffffff;
      std::vector<Letter>     target_;
    };

  }  // namespace

  SimplifiedPresentation simplify_with_map(FpGroup const& F) {
    std::size_t const k = F.generator_count();
    Substitution      sub(k);
    std::vector<Word> rels(F.relators().begin(), F.relators().end());

    bool changed = true;
    while (changed) {
      changed = false;
      std::set<Word>    seen;
      std::vector<Word> next;
      for (auto const& r : rels) {
        Word w = sub.apply(r);
        if (w.empty()) {
          continue;
        }
        if (w.size() == 1) {
          sub.set(static_cast<std::size_t>(std::abs(w[0])) - 1, 0);
          changed = true;
          continue;
        }
        if (w.size() == 2 && std::abs(w[0]) != std::abs(w[1])) {
          // x^a y^b = 1: eliminate the later generator in terms of the other
          Letter x = w[0], y = w[1];
          if (std::abs(x) < std::abs(y)) {
            std::swap(x, y);
          }
          auto const xg = static_cast<std::size_t>(std::abs(x)) - 1;
          Letter     sx = x > 0 ? 1 : -1;
          // x^sx = y^-1  =>  x = y^(-sx)
          sub.set(xg, sx > 0 ? -y : y);
          changed = true;
          continue;
        }
        if (seen.insert(canonical(w)).second) {
          next.push_back(std::move(w));
        }
      }
      rels = std::move(next);
    }

    std::vector<Letter> renumber(k, 0);
    std::size_t         kept = 0;
    for (std::size_t g = 0; g < k; ++g) {
      if (!sub.eliminated(g)) {
        renumber[g] = static_cast<Letter>(++kept);
      }
    }
    auto rename = [&](Word w) {
      for (auto& l : w) {
        auto const n = renumber[static_cast<std::size_t>(std::abs(l)) - 1];
        l            = l > 0 ? n : -n;
      }
      return w;
    };
    std::vector<Word> out_rels;
    for (auto& r : rels) {
      out_rels.push_back(rename(std::move(r)));
    }
    std::vector<Word> images;
    for (std::size_t g = 0; g < k; ++g) {
      Letter r = sub.eliminated(g) ? sub.resolve(g) : static_cast<Letter>(g + 1);
      images.push_back(rename(r == 0 ? Word{} : Word{r}));
    }
    return {FpGroup(kept, std::move(out_rels)), std::move(images)};
  }

  FpGroup simplify(FpGroup const& F) {
    return simplify_with_map(F).group;
  }

}  // namespace galois
