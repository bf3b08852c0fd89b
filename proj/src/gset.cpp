#include "galois/gset.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "galois/catalogue.hpp"
#include "galois/error.hpp"
#include "galois/limits.hpp"

namespace galois {

  GSet::GSet(PermGroup G, std::size_t size, std::vector<Perm> generator_actions)
      : group_(std::move(G)), size_(size), gen_actions_(std::move(generator_actions)) {
    auto const gens = group_.generator_elems();
    if (gen_actions_.size() != gens.size()) {
      throw std::invalid_argument("GSet: need one action per generator");
    }
    for (auto const& a : gen_actions_) {
      if (a.degree() != size_) {
        throw std::invalid_argument("GSet: generator action has the wrong degree");
      }
    }
    std::size_t const  n = group_.order();
    std::vector<bool>  seen(n, false);
    std::vector<Elem>  queue{PermGroup::identity()};
    table_.assign(n * size_, 0);
    for (std::size_t x = 0; x < size_; ++x) {
      table_[x] = static_cast<Point>(x);
    }
    seen[0] = true;
    // rho(s g) must equal rho(s) rho(g) on every Cayley edge
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Elem const g = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Elem const sg = group_.mul(gens[i], g);
        Point*     dst = &table_[sg * size_];
        Point const* src = &table_[g * size_];
        if (!seen[sg]) {
          seen[sg] = true;
          for (std::size_t x = 0; x < size_; ++x) {
            dst[x] = gen_actions_[i][src[x]];
          }
          queue.push_back(sg);
        } else {
          for (std::size_t x = 0; x < size_; ++x) {
            if (dst[x] != gen_actions_[i][src[x]]) {
              throw std::invalid_argument("GSet: generator images do not define an action");
            }
          }
        }
      }
    }
  }

  Perm GSet::action_of(Elem g) const {
    return Perm(std::vector<Point>(table_.begin() + static_cast<std::ptrdiff_t>(g * size_),
                                   table_.begin() + static_cast<std::ptrdiff_t>((g + 1) * size_)));
  }

  bool is_action(GSet const& X) {
    auto const& G = X.group();
    for (Point x = 0; x < X.size(); ++x) {
      if (X.act(PermGroup::identity(), x) != x) {
        return false;
      }
    }
    for (Elem g = 0; g < G.order(); ++g) {
      for (Elem h = 0; h < G.order(); ++h) {
        Elem const gh = G.mul(g, h);
        for (Point x = 0; x < X.size(); ++x) {
          if (X.act(gh, x) != X.act(g, X.act(h, x))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  GSet regular_gset(PermGroup const& G) {
    std::vector<Perm> actions;
    for (Elem s : G.generator_elems()) {
      std::vector<Point> img(G.order());
      for (Elem x = 0; x < G.order(); ++x) {
        img[x] = G.mul(s, x);
      }
      actions.emplace_back(std::move(img));
    }
    return GSet(G, G.order(), std::move(actions));
  }

  GSet trivial_gset(PermGroup const& G, std::size_t n) {
    return GSet(G, n, std::vector<Perm>(G.generators().size(), Perm::identity(n)));
  }

  GSet natural_gset(PermGroup const& G) {
    return GSet(G, G.degree(), std::vector<Perm>(G.generators().begin(), G.generators().end()));
  }

  std::vector<std::vector<Point>> orbits(GSet const& X) {
    std::vector<std::vector<Point>> out;
    std::vector<bool>               seen(X.size(), false);
    for (Point x = 0; x < X.size(); ++x) {
      if (seen[x]) {
        continue;
      }
      std::vector<Point> orbit{x};
      seen[x] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (auto const& a : X.generator_actions()) {
          Point const y = a[orbit[i]];
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      out.push_back(std::move(orbit));
    }
    return out;
  }

  namespace {
    void require_same_group(GSet const& X, GSet const& Y) {
      if (!X.group().same_as(Y.group())) {
        throw IncompatibleGroups("G-sets are over different groups");
      }
    }
  }  // namespace

  GSet product(GSet const& X, GSet const& Y) {
    require_same_group(X, Y);
    std::size_t const m = Y.size();
    std::vector<Perm> actions;
    for (std::size_t i = 0; i < X.generator_actions().size(); ++i) {
      auto const&        a = X.generator_actions()[i];
      auto const&        b = Y.generator_actions()[i];
      std::vector<Point> img(X.size() * m);
      for (std::size_t x = 0; x < X.size(); ++x) {
        for (std::size_t y = 0; y < m; ++y) {
          img[x * m + y] = static_cast<Point>(a[x] * m + b[y]);
        }
      }
      actions.emplace_back(std::move(img));
    }
    return GSet(X.group(), X.size() * m, std::move(actions));
  }

  GSet coproduct(GSet const& X, GSet const& Y) {
    require_same_group(X, Y);
    std::vector<Perm> actions;
    for (std::size_t i = 0; i < X.generator_actions().size(); ++i) {
      std::vector<Point> img(X.size() + Y.size());
      for (std::size_t x = 0; x < X.size(); ++x) {
        img[x] = X.generator_actions()[i][x];
      }
      for (std::size_t y = 0; y < Y.size(); ++y) {
        img[X.size() + y] = static_cast<Point>(X.size() + Y.generator_actions()[i][y]);
      }
      actions.emplace_back(std::move(img));
    }
    return GSet(X.group(), X.size() + Y.size(), std::move(actions));
  }

  GSet quotient_by_action(GSet const& X, GSet const& F_action) {
    if (F_action.size() != X.size()) {
      throw IncompatibleGroups("quotient: actions live on different carriers");
    }
    for (auto const& a : X.generator_actions()) {
      for (auto const& b : F_action.generator_actions()) {
        if (a * b != b * a) {
          throw IncompatibleGroups("quotient: the actions do not commute");
        }
      }
    }
    auto const               classes = orbits(F_action);
    std::vector<Point>       cls(X.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (Point x : classes[c]) {
        cls[x] = static_cast<Point>(c);
      }
    }
    std::vector<Perm> actions;
    for (auto const& a : X.generator_actions()) {
      std::vector<Point> img(classes.size());
      for (std::size_t c = 0; c < classes.size(); ++c) {
        img[c] = cls[a[classes[c].front()]];
      }
      actions.emplace_back(std::move(img));
    }
    return GSet(X.group(), classes.size(), std::move(actions));
  }

  bool is_equivariant(GSet const& X, GSet const& Y, std::span<Point const> map) {
    require_same_group(X, Y);
    if (map.size() != X.size()) {
      return false;
    }
    for (Point x = 0; x < X.size(); ++x) {
      if (map[x] >= Y.size()) {
        return false;
      }
    }
    for (std::size_t i = 0; i < X.generator_actions().size(); ++i) {
      for (Point x = 0; x < X.size(); ++x) {
        if (map[X.generator_actions()[i][x]] != Y.generator_actions()[i][map[x]]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_equivariant_bijection(GSet const& X, GSet const& Y, std::span<Point const> map) {
    if (X.size() != Y.size() || !is_equivariant(X, Y, map)) {
      return false;
    }
    std::vector<bool> hit(Y.size(), false);
    for (Point y : map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  std::optional<std::vector<Point>> gset_isomorphism(GSet const& X, GSet const& Y) {
    require_same_group(X, Y);
    if (X.size() != Y.size()) {
      return std::nullopt;
    }
    auto const xo = orbits(X);
    auto const& G = X.group();
    std::vector<Point> map(X.size(), 0);
    std::vector<bool>  used(Y.size(), false);
    // place orbit k by choosing the image of its least point
    auto place = [&](auto&& self, std::size_t k) -> bool {
      if (k == xo.size()) {
        return true;
      }
      Point const x0 = xo[k].front();
      for (Point y0 = 0; y0 < Y.size(); ++y0) {
        if (used[y0]) {
          continue;
        }
        // g x0 -> g y0 must be well defined and injective
        std::vector<Point> assigned(X.size(), static_cast<Point>(-1));
        bool               ok = true;
        for (Elem g = 0; g < G.order() && ok; ++g) {
          Point const x = X.act(g, x0);
          Point const y = Y.act(g, y0);
          if (assigned[x] == static_cast<Point>(-1)) {
            ok = !used[y];
            assigned[x] = y;
          } else {
            ok = assigned[x] == y;
          }
        }
        if (!ok) {
          continue;
        }
        std::vector<Point> taken;
        for (Point x : xo[k]) {
          if (used[assigned[x]]) {
            ok = false;
            break;
          }
          used[assigned[x]] = true;
          taken.push_back(assigned[x]);
          map[x] = assigned[x];
        }
        if (ok && self(self, k + 1)) {
          return true;
        }
        for (Point y : taken) {
          used[y] = false;
        }
      }
      return false;
    };
    if (!place(place, 0)) {
      return std::nullopt;
    }
    return map;
  }

  // ---- torsors -------------------------------------------------------------

  bool is_torsor(TorsorCandidate const& T) {
    auto const& base = T.base;
    auto const& aux  = T.aux;
    if (base.size() != aux.size() || aux.size() != aux.group().order()) {
      return false;
    }
    for (auto const& a : base.generator_actions()) {
      for (auto const& b : aux.generator_actions()) {
        if (a * b != b * a) {
          return false;
        }
      }
    }
    if (aux.size() == 0) {
      return false;
    }
    return orbits(aux).size() == 1;
  }

  namespace {
    // h: x -> x h^-1 on the elements of H
    GSet right_regular(PermGroup const& H) {
      std::vector<Perm> actions;
      for (Elem h : H.generator_elems()) {
        Elem const         hi = H.inv(h);
        std::vector<Point> img(H.order());
        for (Elem x = 0; x < H.order(); ++x) {
          img[x] = H.mul(x, hi);
        }
        actions.emplace_back(std::move(img));
      }
      return GSet(H, H.order(), std::move(actions));
    }
  }  // namespace

  TorsorCandidate torsor_from_hom(GroupHom const& phi) {
    auto const&       H = phi.target();
    std::vector<Perm> actions;
    for (Elem s : phi.source().generator_elems()) {
      std::vector<Point> img(H.order());
      for (Elem x = 0; x < H.order(); ++x) {
        img[x] = H.mul(phi(s), x);
      }
      actions.emplace_back(std::move(img));
    }
    return {GSet(phi.source(), H.order(), std::move(actions)), right_regular(H)};
  }

  std::optional<std::vector<Point>> torsor_isomorphism(TorsorCandidate const& S,
                                                       TorsorCandidate const& T) {
    require_same_group(S.base, T.base);
    require_same_group(S.aux, T.aux);
    if (!is_torsor(S) || !is_torsor(T)) {
      return std::nullopt;
    }
    auto const&       H = S.aux.group();
    std::size_t const n = S.aux.size();
    for (Point y0 = 0; y0 < n; ++y0) {
      std::vector<Point> map(n, 0);
      for (Elem h = 0; h < H.order(); ++h) {
        map[S.aux.act(h, 0)] = T.aux.act(h, y0);
      }
      if (is_equivariant_bijection(S.base, T.base, map)) {
        return map;
      }
    }
    return std::nullopt;
  }

  std::vector<TorsorClass> classify_torsors(PermGroup const& G, PermGroup const& Gp) {
    std::size_t const n = Gp.order();
    if (n > limits().max_torsor_carrier) {
      throw SizeError("torsor carrier of size " + std::to_string(n) + " exceeds the bound of "
                      + std::to_string(limits().max_torsor_carrier));
    }
    GSet const aux = right_regular(Gp);
    // A permutation commuting with a regular action is fixed by where it
    // sends point 0; list those permutations once.
    std::vector<Perm> commuting;
    for (Point y0 = 0; y0 < n; ++y0) {
      std::vector<Point> img(n);
      for (Elem h = 0; h < Gp.order(); ++h) {
        img[aux.act(h, 0)] = aux.act(h, y0);
      }
      Perm p(std::move(img));
      bool ok = true;
      for (auto const& b : aux.generator_actions()) {
        ok = ok && p * b == b * p;
      }
      if (ok) {
        commuting.push_back(std::move(p));
      }
    }
    std::size_t const k     = G.generators().size();
    double            total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total *= static_cast<double>(commuting.size());
    }
    if (total > static_cast<double>(limits().max_hom_candidates)) {
      throw SizeError("too many candidate torsor actions");
    }
    std::vector<TorsorClass> classes;
    std::vector<std::size_t> digit(k, 0);
    while (true) {
      std::vector<Perm> actions;
      for (std::size_t i = 0; i < k; ++i) {
        actions.push_back(commuting[digit[i]]);
      }
      std::optional<GSet> base;
      try {
        base.emplace(G, n, std::move(actions));
      } catch (std::invalid_argument const&) {
      }
      if (base) {
        TorsorCandidate T{*base, aux};
        auto it = std::find_if(classes.begin(), classes.end(), [&](TorsorClass const& c) {
          return torsor_isomorphism(c.representative, T).has_value();
        });
        if (it == classes.end()) {
          classes.push_back({std::move(T), 1});
        } else {
          ++it->count;
        }
      }
      std::size_t i = 0;
      while (i < k && ++digit[i] == commuting.size()) {
        digit[i++] = 0;
      }
      if (i == k) {
        break;
      }
    }
    return classes;
  }

  // ---- subterminal objects and the fundamental group -------------------------

  BooleanAlgebra subterminal_boolean_algebra(GSet const& X) {
    std::size_t const k = orbits(X).size();
    if (k > limits().max_atoms) {
      throw SizeError("G-set has " + std::to_string(k) + " orbits, above the atom bound");
    }
    return algebra_of_set(k);
  }

  Pi1Reconstruction reconstruct_pi1(PermGroup const& G) {
    GSet const        R = regular_gset(G);
    std::vector<Perm> autos;
    // an equivariant f is g -> g f(e)
    for (Elem y = 0; y < G.order(); ++y) {
      std::vector<Point> map(G.order());
      for (Elem g = 0; g < G.order(); ++g) {
        map[g] = R.act(g, y);
      }
      if (is_equivariant_bijection(R, R, map)) {
        autos.emplace_back(std::move(map));
      }
    }
    PermGroup A(G.order(), std::move(autos));
    auto      witness = find_isomorphism(G, A);
    return {std::move(A), std::move(witness)};
  }

  // ---- text form -------------------------------------------------------------

  namespace {
    std::size_t parse_size(std::string_view s, std::string_view what) {
      std::size_t v   = 0;
      auto [ptr, ec]  = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("gset: bad " + std::string(what) + " '" + std::string(s) + "'");
      }
      return v;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      while (true) {
        auto p = s.find(sep);
        out.push_back(s.substr(0, p));
        if (p == std::string_view::npos) {
          return out;
        }
        s.remove_prefix(p + 1);
      }
    }

    std::string group_spec_of(PermGroup const& G) {
      if (!G.label().empty()) {
        return G.label();
      }
      std::string s = "perm:" + std::to_string(G.degree()) + ":";
      for (std::size_t i = 0; i < G.generators().size(); ++i) {
        s += (i ? ";" : "") + G.generators()[i].to_cycle_string();
      }
      return s;
    }
  }  // namespace

  GSet parse_gset(std::string_view text) {
    if (!text.starts_with("gset:")) {
      throw ParseError("gset text must start with 'gset:'");
    }
    auto        rest = text.substr(5);
    std::size_t end  = 0;
    if (rest.starts_with("perm:")) {
      auto close = rest.rfind(')');
      if (close != std::string_view::npos) {
        end = close + 1;
      } else {
        end = rest.find(':', 5);
        end = end == std::string_view::npos ? rest.size() : end + 1;
        end = rest.find(':', end);
      }
    } else {
      end = rest.find(':');
    }
    if (end == std::string_view::npos || end >= rest.size() || rest[end] != ':') {
      throw ParseError("gset needs gset:<group>:<size>:<actions>");
    }
    PermGroup G    = group_from_catalogue(rest.substr(0, end));
    rest           = rest.substr(end + 1);
    auto colon     = rest.find(':');
    auto size_text = rest.substr(0, colon);
    auto n         = parse_size(size_text, "size");
    std::vector<std::optional<Perm>> actions(G.generators().size());
    if (colon != std::string_view::npos && colon + 1 < rest.size()) {
      for (auto entry : split(rest.substr(colon + 1), ';')) {
        auto c = entry.find(':');
        if (c == std::string_view::npos) {
          throw ParseError("gset action needs <gen-index>:<images>");
        }
        auto i = parse_size(entry.substr(0, c), "generator index");
        if (i >= actions.size()) {
          throw ParseError("gset generator index out of range");
        }
        if (actions[i]) {
          throw ParseError("gset generator " + std::to_string(i) + " given twice");
        }
        std::vector<Point> img;
        if (c + 1 < entry.size()) {
          for (auto v : split(entry.substr(c + 1), ',')) {
            img.push_back(static_cast<Point>(parse_size(v, "image")));
          }
        }
        if (img.size() != n) {
          throw ParseError("gset action of generator " + std::to_string(i) + " has "
                           + std::to_string(img.size()) + " images, expected "
                           + std::to_string(n));
        }
        try {
          actions[i].emplace(std::move(img));
        } catch (std::invalid_argument const& e) {
          throw ParseError(std::string("gset: ") + e.what());
        }
      }
    }
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      if (!actions[i]) {
        if (n != 0) {
          throw ParseError("gset: no action given for generator " + std::to_string(i));
        }
        actions[i].emplace(std::vector<Point>{});
      }
      gens.push_back(*actions[i]);
    }
    try {
      return GSet(G, n, std::move(gens));
    } catch (std::invalid_argument const& e) {
      throw ParseError(std::string("gset: ") + e.what());
    }
  }

  std::string format_gset(GSet const& X) {
    std::ostringstream out;
    out << "gset:" << group_spec_of(X.group()) << ':' << X.size() << ':';
    for (std::size_t i = 0; i < X.generator_actions().size(); ++i) {
      out << (i ? ";" : "") << i << ':';
      auto img = X.generator_actions()[i].images();
      for (std::size_t x = 0; x < img.size(); ++x) {
        out << (x ? "," : "") << img[x];
      }
    }
    return out.str();
  }

}  // namespace galois
