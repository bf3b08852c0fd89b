#include "galois/stone.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "galois/error.hpp"
#include "galois/limits.hpp"

namespace galois {

  namespace {
    using Mask = BooleanAlgebra::Mask;

    Mask universe_mask(std::size_t n) {
      return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    }

    // Atom containing each covered point: intersection of all elements
    // containing it.
    std::vector<Mask> atoms_of(std::span<Mask const> elements, Mask top) {
      std::vector<Mask> atoms;
      Mask              covered = 0;
      for (int x = 0; x < 64; ++x) {
        Mask const bit = Mask{1} << x;
        if (!(top & bit) || (covered & bit)) {
          continue;
        }
        Mask atom = top;
        for (Mask e : elements) {
          if (e & bit) {
            atom &= e;
          }
        }
        atoms.push_back(atom);
        covered |= atom;
      }
      std::sort(atoms.begin(), atoms.end());
      return atoms;
    }
  }  // namespace

  BooleanAlgebra::BooleanAlgebra(std::size_t universe, std::vector<Mask> elements)
      : universe_(universe), elements_(std::move(elements)) {
    if (universe_ > 64) {
      throw MalformedAlgebra("Boolean algebra universe is limited to 64 points");
    }
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
      throw MalformedAlgebra("Boolean algebra has repeated elements");
    }
    if (elements_.empty() || elements_.front() != 0) {
      throw MalformedAlgebra("Boolean algebra must contain the empty set");
    }
    Mask top = 0;
    for (Mask e : elements_) {
      if (e & ~universe_mask(universe_)) {
        throw MalformedAlgebra("element outside the universe");
      }
      top |= e;
    }
    if (elements_.back() != top) {
      throw MalformedAlgebra("Boolean algebra is not closed under union");
    }
    // A family closed under the operations is exactly the set of unions of
    // its atoms.
    auto const atoms = atoms_of(elements_, top);
    for (Mask e : elements_) {
      for (Mask a : atoms) {
        Mask const part = e & a;
        if (part != 0 && part != a) {
          throw MalformedAlgebra("element is not a union of atoms");
        }
      }
    }
    for (Mask a : atoms) {
      if (!std::binary_search(elements_.begin(), elements_.end(), a)) {
        throw MalformedAlgebra("Boolean algebra is not closed under intersection");
      }
    }
    if (atoms.size() >= 64 || elements_.size() != (std::size_t{1} << atoms.size())) {
      throw MalformedAlgebra("Boolean algebra is not closed under the operations");
    }
  }

  std::size_t BooleanAlgebra::index_of(Mask m) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
    if (it == elements_.end() || *it != m) {
      throw std::invalid_argument("BooleanAlgebra: mask is not an element");
    }
    return static_cast<std::size_t>(it - elements_.begin());
  }

  std::size_t BooleanAlgebra::meet(std::size_t a, std::size_t b) const {
    return index_of(element(a) & element(b));
  }

  std::size_t BooleanAlgebra::join(std::size_t a, std::size_t b) const {
    return index_of(element(a) | element(b));
  }

  std::size_t BooleanAlgebra::complement(std::size_t a) const {
    return index_of(elements_.back() & ~element(a));
  }

  BooleanAlgebra BooleanAlgebra::from_tables(std::size_t                                  n,
                                             std::vector<std::vector<std::size_t>> const& meet,
                                             std::vector<std::vector<std::size_t>> const& join,
                                             std::vector<std::size_t> const&              complement,
                                             std::size_t                                  bottom,
                                             std::size_t                                  top) {
    if (n > 256) {
      throw SizeError("table-form Boolean algebra limited to 256 elements");
    }
    auto fail = [](char const* what) { throw MalformedAlgebra(what); };
    if (n == 0 || meet.size() != n || join.size() != n || complement.size() != n || bottom >= n
        || top >= n) {
      fail("table sizes do not match");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (meet[a].size() != n || join[a].size() != n || complement[a] >= n) {
        fail("table sizes do not match");
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (meet[a][b] >= n || join[a][b] >= n) {
          fail("table entry out of range");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (meet[a][a] != a || join[a][a] != a) {
        fail("idempotence fails");
      }
      if (meet[a][top] != a || join[a][bottom] != a) {
        fail("identity laws fail");
      }
      if (meet[a][complement[a]] != bottom || join[a][complement[a]] != top) {
        fail("complement laws fail");
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (meet[a][b] != meet[b][a] || join[a][b] != join[b][a]) {
          fail("commutativity fails");
        }
        if (meet[a][join[a][b]] != a || join[a][meet[a][b]] != a) {
          fail("absorption fails");
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (meet[a][meet[b][c]] != meet[meet[a][b]][c]
              || join[a][join[b][c]] != join[join[a][b]][c]) {
            fail("associativity fails");
          }
          if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) {
            fail("distributivity fails");
          }
        }
      }
    }
    // atoms: minimal elements above bottom
    std::vector<std::size_t> atoms;
    for (std::size_t a = 0; a < n; ++a) {
      if (a == bottom) {
        continue;
      }
      bool minimal = true;
      for (std::size_t b = 0; b < n && minimal; ++b) {
        minimal = b == bottom || b == a || meet[a][b] != b;
      }
      if (minimal) {
        atoms.push_back(a);
      }
    }
    if (atoms.size() > 64) {
      throw SizeError("too many atoms");
    }
    std::vector<Mask> masks;
    for (std::size_t a = 0; a < n; ++a) {
      Mask m = 0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (meet[atoms[i]][a] == atoms[i]) {
          m |= Mask{1} << i;
        }
      }
      masks.push_back(m);
    }
    return BooleanAlgebra(atoms.size(), std::move(masks));
  }

  std::vector<std::size_t> spec(BooleanAlgebra const& B) {
    std::vector<std::size_t> out;
    for (Mask a : atoms_of(B.elements(), B.element(B.top()))) {
      out.push_back(B.index_of(a));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  BooleanAlgebra algebra_of_set(std::size_t n) {
    if (n > limits().max_atoms) {
      throw SizeError("power-set algebra exceeds the atom bound");
    }
    std::vector<Mask> masks(std::size_t{1} << n);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      masks[i] = i;
    }
    return BooleanAlgebra(n, std::move(masks));
  }

  std::optional<std::vector<std::size_t>> boolean_isomorphism(BooleanAlgebra const& B,
                                                              BooleanAlgebra const& C) {
    auto const ab = spec(B);
    auto const ac = spec(C);
    if (ab.size() != ac.size() || B.size() != C.size()) {
      return std::nullopt;
    }
    // atom i of B -> atom i of C, extended by joins
    std::vector<std::size_t> map(B.size());
    for (std::size_t e = 0; e < B.size(); ++e) {
      Mask image = 0;
      for (std::size_t i = 0; i < ab.size(); ++i) {
        if (B.leq(ab[i], e)) {
          image |= C.element(ac[i]);
        }
      }
      map[e] = C.index_of(image);
    }
    for (std::size_t a = 0; a < B.size(); ++a) {
      if (map[B.complement(a)] != C.complement(map[a])) {
        return std::nullopt;
      }
      for (std::size_t b = 0; b < B.size(); ++b) {
        if (map[B.meet(a, b)] != C.meet(map[a], map[b])
            || map[B.join(a, b)] != C.join(map[a], map[b])) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  std::vector<std::vector<std::size_t>> idempotent_decompositions(BooleanAlgebra const& B) {
    auto const atoms = spec(B);
    if (atoms.size() > 12) {
      throw SizeError("idempotent decompositions limited to 12 atoms");
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              block(atoms.size(), 0);
    // restricted growth strings enumerate set partitions
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
      if (i == atoms.size()) {
        std::vector<Mask> parts(blocks, 0);
        for (std::size_t k = 0; k < atoms.size(); ++k) {
          parts[block[k]] |= B.element(atoms[k]);
        }
        std::vector<std::size_t> family;
        for (Mask m : parts) {
          family.push_back(B.index_of(m));
        }
        std::sort(family.begin(), family.end());
        out.push_back(std::move(family));
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        block[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    if (atoms.empty()) {
      // only the zero algebra: the empty family joins to top == bottom
      out.push_back({});
      return out;
    }
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_json(BooleanAlgebra const& B) {
    nlohmann::ordered_json j;
    j["schema"]   = 1;
    j["universe"] = B.universe();
    j["elements"] = std::vector<Mask>(B.elements().begin(), B.elements().end());
    return j.dump();
  }

  BooleanAlgebra boolean_algebra_from_json(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("algebra JSON: ") + e.what());
    }
    try {
      if (j.contains("elements")) {
        return BooleanAlgebra(j.at("universe").get<std::size_t>(),
                              j.at("elements").get<std::vector<Mask>>());
      }
      return BooleanAlgebra::from_tables(
          j.at("size").get<std::size_t>(),
          j.at("meet").get<std::vector<std::vector<std::size_t>>>(),
          j.at("join").get<std::vector<std::vector<std::size_t>>>(),
          j.at("complement").get<std::vector<std::size_t>>(),
          j.at("bottom").get<std::size_t>(),
          j.at("top").get<std::size_t>());
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("algebra JSON: ") + e.what());
    }
  }

}  // namespace galois
