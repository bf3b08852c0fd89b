#include "galois/catalogue.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "galois/error.hpp"
#include "galois/limits.hpp"

namespace galois {

  namespace {

    unsigned long long parse_number(std::string_view s, std::string_view spec) {
      unsigned long long v = 0;
      auto [ptr, ec]       = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("bad number in group spec '" + std::string(spec) + "'");
      }
      return v;
    }

    unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
      unsigned long long r = 0;
      if (__builtin_mul_overflow(a, b, &r)) {
        return static_cast<unsigned long long>(-1);
      }
      return r;
    }

    unsigned long long factorial(unsigned long long n) {
      unsigned long long r = 1;
      for (unsigned long long i = 2; i <= n; ++i) {
        r = checked_mul(r, i);
      }
      return r;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          return out;
        }
        start = pos + 1;
      }
    }

    enum class Family { Symmetric, Alternating, Cyclic, Product, Dihedral, Dicyclic };

    struct Parsed {
      Family                          family;
      std::vector<unsigned long long> params;
    };

    Parsed parse_named(std::string_view spec) {
      if (spec.empty()) {
        throw ParseError("empty group spec");
      }
      if (spec.find('x') != std::string_view::npos) {
        Parsed p{Family::Product, {}};
        for (auto part : split(spec, 'x')) {
          if (part.size() < 2 || part[0] != 'C') {
            throw ParseError("direct products must be of cyclic groups: '" + std::string(spec)
                             + "'");
          }
          auto n = parse_number(part.substr(1), spec);
          if (n == 0) {
            throw ParseError("C0 is not a finite group");
          }
          p.params.push_back(n);
        }
        return p;
      }
      char const head = spec[0];
      auto const n    = parse_number(spec.substr(1), spec);
      switch (head) {
        case 'S':
          if (n == 0) {
            break;
          }
          return {Family::Symmetric, {n}};
        case 'A':
          if (n == 0) {
            break;
          }
          return {Family::Alternating, {n}};
        case 'C':
          if (n == 0) {
            break;
          }
          return {Family::Cyclic, {n}};
        case 'D':
          if (n < 2 || n % 2 != 0) {
            throw ParseError("dihedral spec needs an even order: '" + std::string(spec) + "'");
          }
          return {Family::Dihedral, {n / 2}};
        case 'Q':
          if (n < 8 || n % 4 != 0) {
            throw ParseError("quaternion/dicyclic spec needs order 4m, m >= 2: '"
                             + std::string(spec) + "'");
          }
          return {Family::Dicyclic, {n / 4}};
        default:
          break;
      }
      throw ParseError("unknown group spec '" + std::string(spec) + "'");
    }

    unsigned long long family_order(Parsed const& p) {
      switch (p.family) {
        case Family::Symmetric:
          return factorial(p.params[0]);
        case Family::Alternating:
          return p.params[0] < 2 ? 1 : factorial(p.params[0]) / 2;
        case Family::Cyclic:
          return p.params[0];
        case Family::Product: {
          unsigned long long r = 1;
          for (auto n : p.params) {
            r = checked_mul(r, n);
          }
          return r;
        }
        case Family::Dihedral:
          return 2 * p.params[0];
        case Family::Dicyclic:
          return 4 * p.params[0];
      }
      return 0;
    }

    Perm cycle_on(std::size_t degree, std::size_t offset, std::size_t len) {
      std::vector<Point> c(len);
      for (std::size_t i = 0; i < len; ++i) {
        c[i] = static_cast<Point>(offset + i);
      }
      return Perm::from_cycles(degree, {c});
    }

    PermGroup build_named(Parsed const& p, std::string label) {
      switch (p.family) {
        case Family::Symmetric: {
          std::size_t const n = p.params[0];
          if (n == 1) {
            return PermGroup(1, {}, label);
          }
          std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
          if (n > 2) {
            gens.push_back(cycle_on(n, 0, n));
          }
          return PermGroup(n, std::move(gens), label);
        }
        case Family::Alternating: {
          std::size_t const n = p.params[0];
          std::vector<Perm> gens;
          for (std::size_t k = 2; k < n; ++k) {
            gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(k)}}));
          }
          return PermGroup(n, std::move(gens), label);
        }
        case Family::Cyclic: {
          std::size_t const n = p.params[0];
          if (n == 1) {
            return PermGroup(1, {}, label);
          }
          return PermGroup(n, {cycle_on(n, 0, n)}, label);
        }
        case Family::Product: {
          std::size_t degree = 0;
          for (auto n : p.params) {
            degree += n;
          }
          std::vector<Perm> gens;
          std::size_t       offset = 0;
          for (auto n : p.params) {
            if (n > 1) {
              gens.push_back(cycle_on(degree, offset, n));
            }
            offset += n;
          }
          return PermGroup(degree, std::move(gens), label);
        }
        case Family::Dihedral: {
          std::size_t const n = p.params[0];
          if (n == 1) {
            return PermGroup(2, {Perm::from_cycles(2, {{0, 1}})}, label);
          }
          if (n == 2) {
            return PermGroup(
                4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})}, label);
          }
          std::vector<Point> refl(n);
          for (std::size_t i = 0; i < n; ++i) {
            refl[i] = static_cast<Point>((n - i) % n);
          }
          return PermGroup(n, {cycle_on(n, 0, n), Perm(refl)}, label);
        }
        case Family::Dicyclic: {
          // Left-regular representation on a^i b^j, index i + 2m j.
          std::size_t const m   = p.params[0];
          std::size_t const two = 2 * m;
          auto mul = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
            if (j == 0) {
              return (i + k) % two + two * l;
            }
            std::size_t r = (i + two - k) % two;
            if (l == 0) {
              return r + two;
            }
            return (r + m) % two;
          };
          std::size_t const  n = 4 * m;
          std::vector<Point> a(n), b(n);
          for (std::size_t x = 0; x < n; ++x) {
            a[x] = static_cast<Point>(mul(1, 0, x % two, x / two));
            b[x] = static_cast<Point>(mul(0, 1, x % two, x / two));
          }
          return PermGroup(n, {Perm(a), Perm(b)}, label);
        }
      }
      throw ParseError("unreachable group family");
    }

    std::vector<Point> parse_points(std::string_view s, std::size_t degree, std::string_view spec) {
      std::vector<Point> pts;
      std::size_t        i = 0;
      while (i < s.size()) {
        if (s[i] == ' ' || s[i] == ',') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        if (j == i) {
          throw ParseError("bad cycle in '" + std::string(spec) + "'");
        }
        auto v = parse_number(s.substr(i, j - i), spec);
        if (v == 0 || v > degree) {
          throw ParseError("cycle point out of range in '" + std::string(spec) + "'");
        }
        pts.push_back(static_cast<Point>(v - 1));
        i = j;
      }
      return pts;
    }

    PermGroup build_perm(std::string_view spec) {
      auto rest  = spec.substr(5);
      auto colon = rest.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("perm spec needs perm:<degree>:<generators>");
      }
      auto const degree = parse_number(rest.substr(0, colon), spec);
      if (degree == 0) {
        throw ParseError("perm degree must be positive");
      }
      std::vector<Perm> gens;
      auto              body = rest.substr(colon + 1);
      if (!body.empty()) {
        for (auto g : split(body, ';')) {
          std::vector<std::vector<Point>> cycles;
          std::size_t                     i = 0;
          while (i < g.size()) {
            if (g[i] == ' ') {
              ++i;
              continue;
            }
            if (g[i] != '(') {
              throw ParseError("expected '(' in '" + std::string(spec) + "'");
            }
            auto close = g.find(')', i);
            if (close == std::string_view::npos) {
              throw ParseError("unbalanced cycle in '" + std::string(spec) + "'");
            }
            auto pts = parse_points(g.substr(i + 1, close - i - 1), degree, spec);
            if (!pts.empty()) {
              cycles.push_back(std::move(pts));
            }
            i = close + 1;
          }
          try {
            gens.push_back(Perm::from_cycles(degree, cycles));
          } catch (std::invalid_argument const& e) {
            throw ParseError(std::string(e.what()) + " in '" + std::string(spec) + "'");
          }
        }
      }
      return PermGroup(degree, std::move(gens), std::string(spec));
    }

  }  // namespace

  std::optional<unsigned long long> catalogue_order(std::string_view spec) {
    if (spec.starts_with("perm:")) {
      return std::nullopt;
    }
    return family_order(parse_named(spec));
  }

  PermGroup group_from_catalogue(std::string_view spec) {
    if (spec.starts_with("perm:")) {
      return build_perm(spec);
    }
    auto const parsed = parse_named(spec);
    auto const order  = family_order(parsed);
    if (order > limits().max_order) {
      std::ostringstream msg;
      msg << spec << " has order " << order << ", above the element bound "
          << limits().max_order;
      throw SizeError(msg.str());
    }
    return build_named(parsed, std::string(spec));
  }

  namespace {
    // Invariant-factor lists d1 | d2 | ... with every d >= 2 and product <= max.
    void abelian_types(std::size_t                         max_order,
                       std::vector<std::size_t>&            current,
                       std::size_t                          product,
                       std::vector<std::vector<std::size_t>>& out) {
      if (current.size() >= 2) {
        out.push_back(current);
      }
      std::size_t const last = current.empty() ? 2 : current.back();
      for (std::size_t d = last; product * d <= max_order; d += current.empty() ? 1 : last) {
        if (!current.empty() && d % last != 0) {
          continue;
        }
        current.push_back(d);
        abelian_types(max_order, current, product * d, out);
        current.pop_back();
      }
    }
  }  // namespace

  std::vector<std::string> catalogue_specs(std::size_t max_order) {
    struct Entry {
      std::size_t order;
      int         rank;
      std::string spec;
    };
    std::vector<Entry> entries;
    for (std::size_t n = 1; n <= max_order; ++n) {
      entries.push_back({n, 0, "C" + std::to_string(n)});
    }
    std::vector<std::vector<std::size_t>> types;
    std::vector<std::size_t>              current;
    abelian_types(max_order, current, 1, types);
    for (auto const& t : types) {
      std::string s;
      std::size_t order = 1;
      for (auto d : t) {
        s += (s.empty() ? "C" : "xC") + std::to_string(d);
        order *= d;
      }
      entries.push_back({order, 1, s});
    }
    for (std::size_t n = 4; 2 * n <= max_order; ++n) {
      entries.push_back({2 * n, 2, "D" + std::to_string(2 * n)});
    }
    for (std::size_t m = 2; 4 * m <= max_order; ++m) {
      entries.push_back({4 * m, 3, "Q" + std::to_string(4 * m)});
    }
    for (std::size_t n = 4; factorial(n) / 2 <= max_order; ++n) {
      entries.push_back({factorial(n) / 2, 4, "A" + std::to_string(n)});
    }
    for (std::size_t n = 3; factorial(n) <= max_order; ++n) {
      entries.push_back({factorial(n), 5, "S" + std::to_string(n)});
    }
    std::stable_sort(entries.begin(), entries.end(), [](Entry const& a, Entry const& b) {
      return a.order != b.order ? a.order < b.order : a.rank < b.rank;
    });
    std::vector<std::string> out;
    for (auto& e : entries) {
      out.push_back(std::move(e.spec));
    }
    return out;
  }

  std::string describe(PermGroup const& G) {
    for (auto const& spec : catalogue_specs(G.order())) {
      if (*catalogue_order(spec) != G.order()) {
        continue;
      }
      if (are_isomorphic(G, group_from_catalogue(spec))) {
        return spec;
      }
    }
    return "order-" + std::to_string(G.order()) + " group";
  }

  std::string display_name(std::string_view spec) {
    if (spec == "C1") {
      return "1";
    }
    std::string out;
    for (char c : spec) {
      if (c == 'x') {
        out += " x ";
      } else {
        out += c;
      }
    }
    return out;
  }

}  // namespace galois
