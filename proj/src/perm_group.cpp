#include "galois/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "galois/error.hpp"
#include "galois/limits.hpp"

namespace galois {

  namespace {
    constexpr Elem        kNone          = static_cast<Elem>(-1);
    constexpr std::size_t kTableMaxOrder = 1024;
  }  // namespace

  struct PermGroup::Impl {
    std::size_t                                degree = 1;
    std::vector<Perm>                          gens;
    std::vector<Elem>                          gen_elems;
    std::vector<Perm>                          elements;
    std::unordered_map<Perm, Elem, PermHash>   index;
    std::vector<Elem>                          inverse;
    std::vector<std::uint32_t>                 orders;
    std::vector<Elem>                          table;  // empty above kTableMaxOrder
    std::string                                label;
  };

  PermGroup::PermGroup(std::shared_ptr<Impl const> impl) : impl_(std::move(impl)) {}

  PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::string label) {
    if (degree == 0) {
      degree = 1;
    }
    auto impl    = std::make_shared<Impl>();
    impl->degree = degree;
    impl->label  = std::move(label);
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw std::invalid_argument("PermGroup: generator degree mismatch");
      }
    }
    impl->gens = std::move(generators);

    std::size_t const                  cap = limits().max_order;
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm>                  order{Perm::identity(degree)};
    seen.insert(order.front());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto const& s : impl->gens) {
        Perm y = s * order[i];
        if (seen.insert(y).second) {
          order.push_back(std::move(y));
          if (order.size() > cap) {
            std::ostringstream msg;
            msg << "group order exceeds the element bound " << cap;
            throw SizeError(msg.str());
          }
        }
      }
    }
    std::sort(order.begin(), order.end());
    impl->elements = std::move(order);
    std::size_t const n = impl->elements.size();
    impl->index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      impl->index.emplace(impl->elements[i], static_cast<Elem>(i));
    }
    impl->inverse.resize(n);
    impl->orders.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      impl->inverse[i] = impl->index.at(impl->elements[i].inverse());
      impl->orders[i]  = static_cast<std::uint32_t>(impl->elements[i].order());
    }
    for (auto const& g : impl->gens) {
      impl->gen_elems.push_back(impl->index.at(g));
    }
    if (n <= kTableMaxOrder) {
      impl->table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          impl->table[a * n + b] = impl->index.at(impl->elements[a] * impl->elements[b]);
        }
      }
    }
    impl_ = std::move(impl);
  }

  PermGroup PermGroup::trivial() {
    return PermGroup(1, {}, "C1");
  }

  std::size_t PermGroup::degree() const noexcept {
    return impl_->degree;
  }
  std::span<Perm const> PermGroup::generators() const noexcept {
    return impl_->gens;
  }
  std::span<Elem const> PermGroup::generator_elems() const noexcept {
    return impl_->gen_elems;
  }
  std::size_t PermGroup::order() const noexcept {
    return impl_->elements.size();
  }
  std::span<Perm const> PermGroup::elements() const noexcept {
    return impl_->elements;
  }
  Perm const& PermGroup::element(Elem x) const {
    return impl_->elements.at(x);
  }

  std::optional<Elem> PermGroup::find(Perm const& p) const {
    auto it = impl_->index.find(p);
    if (it == impl_->index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Elem PermGroup::index_of(Perm const& p) const {
    auto it = impl_->index.find(p);
    if (it == impl_->index.end()) {
      throw std::invalid_argument("PermGroup: permutation is not an element");
    }
    return it->second;
  }

  Elem PermGroup::mul(Elem a, Elem b) const {
    if (!impl_->table.empty()) {
      return impl_->table[static_cast<std::size_t>(a) * order() + b];
    }
    return impl_->index.at(impl_->elements[a] * impl_->elements[b]);
  }

  Elem PermGroup::inv(Elem a) const noexcept {
    return impl_->inverse[a];
  }

  Elem PermGroup::pow(Elem a, long long k) const {
    Elem base = k < 0 ? inv(a) : a;
    auto e    = static_cast<unsigned long long>(k < 0 ? -k : k);
    e %= element_order(a);
    Elem r = identity();
    while (e > 0) {
      if (e & 1) {
        r = mul(r, base);
      }
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  Elem PermGroup::conj(Elem g, Elem x) const {
    return mul(mul(g, x), inv(g));
  }

  std::size_t PermGroup::element_order(Elem a) const noexcept {
    return impl_->orders[a];
  }

  bool PermGroup::commute(Elem a, Elem b) const {
    return mul(a, b) == mul(b, a);
  }

  bool PermGroup::is_abelian() const {
    auto gs = generator_elems();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (!commute(gs[i], gs[j])) {
          return false;
        }
      }
    }
    return true;
  }

  std::string const& PermGroup::label() const noexcept {
    return impl_->label;
  }

  PermGroup PermGroup::with_label(std::string label) const {
    auto copy   = std::make_shared<Impl>(*impl_);
    copy->label = std::move(label);
    return PermGroup(std::shared_ptr<Impl const>(std::move(copy)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<Elem> closure(PermGroup const& G, std::span<Elem const> gens) {
      std::vector<bool> seen(G.order(), false);
      std::vector<Elem> out{PermGroup::identity()};
      seen[0] = true;
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (Elem s : gens) {
          Elem y = G.mul(s, out[i]);
          if (!seen[y]) {
            seen[y] = true;
            out.push_back(y);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  Subgroup::Subgroup(PermGroup G, std::vector<Elem> members)
      : parent_(std::move(G)), members_(std::move(members)), mask_(parent_.order(), false) {
    for (Elem x : members_) {
      mask_[x] = true;
    }
  }

  Subgroup Subgroup::generated_by(PermGroup const& G, std::span<Elem const> gens) {
    return Subgroup(G, closure(G, gens));
  }

  Subgroup Subgroup::whole(PermGroup const& G) {
    std::vector<Elem> all(G.order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(G, std::move(all));
  }

  Subgroup Subgroup::trivial(PermGroup const& G) {
    return Subgroup(G, {PermGroup::identity()});
  }

  Subgroup Subgroup::from_members(PermGroup const& G, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup H(G, std::move(members));
    if (H.members_.empty() || !H.contains(PermGroup::identity())) {
      throw std::invalid_argument("Subgroup: identity missing");
    }
    for (Elem a : H.members_) {
      for (Elem b : H.members_) {
        if (!H.contains(G.mul(a, b))) {
          throw std::invalid_argument("Subgroup: not closed under multiplication");
        }
      }
    }
    return H;
  }

  bool Subgroup::is_subgroup_of(Subgroup const& other) const {
    return std::all_of(
        members_.begin(), members_.end(), [&](Elem x) { return other.contains(x); });
  }

  bool Subgroup::is_normal() const {
    auto gens = generators();
    for (Elem g : parent_.generator_elems()) {
      for (Elem h : gens) {
        if (!contains(parent_.conj(g, h))) {
          return false;
        }
      }
    }
    return true;
  }

  Subgroup Subgroup::intersect(Subgroup const& other) const {
    std::vector<Elem> out;
    std::set_intersection(members_.begin(),
                          members_.end(),
                          other.members_.begin(),
                          other.members_.end(),
                          std::back_inserter(out));
    return Subgroup(parent_, std::move(out));
  }

  Subgroup Subgroup::conjugate(Elem g) const {
    std::vector<Elem> out;
    out.reserve(members_.size());
    for (Elem h : members_) {
      out.push_back(parent_.conj(g, h));
    }
    std::sort(out.begin(), out.end());
    return Subgroup(parent_, std::move(out));
  }

  std::vector<Elem> Subgroup::generators() const {
    return small_generating_set(parent_, members_);
  }

  PermGroup Subgroup::as_group(std::string label) const {
    std::vector<Perm> gens;
    for (Elem g : generators()) {
      gens.push_back(parent_.element(g));
    }
    return PermGroup(parent_.degree(), std::move(gens), std::move(label));
  }

  std::vector<Elem> small_generating_set(PermGroup const& G, std::span<Elem const> members) {
    std::vector<Elem> sorted(members.begin(), members.end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](Elem a, Elem b) {
      return G.element_order(a) > G.element_order(b);
    });
    std::vector<Elem> gens;
    std::vector<bool> in(G.order(), false);
    in[0]              = true;
    std::size_t reached = 1;
    for (Elem x : sorted) {
      if (reached == members.size()) {
        break;
      }
      if (in[x]) {
        continue;
      }
      gens.push_back(x);
      auto H = closure(G, gens);
      for (Elem h : H) {
        in[h] = true;
      }
      reached = H.size();
    }
    return gens;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupHom
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // BFS along s * x edges from the identity; unreached entries stay kNone.
    std::optional<std::vector<Elem>> extend_partial(PermGroup const&      G,
                                                    std::span<Elem const> gens,
                                                    PermGroup const&      H,
                                                    std::span<Elem const> images) {
      std::vector<Elem> map(G.order(), kNone);
      std::vector<Elem> queue{PermGroup::identity()};
      map[0] = PermGroup::identity();
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Elem x = queue[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
          Elem y = G.mul(gens[k], x);
          Elem v = H.mul(images[k], map[x]);
          if (map[y] == kNone) {
            map[y] = v;
            queue.push_back(y);
          } else if (map[y] != v) {
            return std::nullopt;
          }
        }
      }
      return map;
    }
  }  // namespace

  std::optional<std::vector<Elem>> extend_to_homomorphism(PermGroup const&      G,
                                                          std::span<Elem const> gens,
                                                          PermGroup const&      H,
                                                          std::span<Elem const> images) {
    if (gens.size() != images.size()) {
      throw std::invalid_argument("extend_to_homomorphism: image count mismatch");
    }
    auto map = extend_partial(G, gens, H, images);
    if (map && std::find(map->begin(), map->end(), kNone) != map->end()) {
      throw std::invalid_argument("extend_to_homomorphism: gens do not generate G");
    }
    return map;
  }

  bool is_multiplicative(PermGroup const& G, PermGroup const& H, std::span<Elem const> phi) {
    for (Elem a = 0; a < G.order(); ++a) {
      for (Elem b = 0; b < G.order(); ++b) {
        if (phi[G.mul(a, b)] != H.mul(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  GroupHom::GroupHom(PermGroup s, PermGroup t, std::vector<Elem> gi, std::vector<Elem> map)
      : source_(std::move(s)),
        target_(std::move(t)),
        gen_images_(std::move(gi)),
        map_(std::move(map)) {}

  std::optional<GroupHom> GroupHom::extend(PermGroup const& source,
                                           PermGroup const& target,
                                           std::vector<Elem> generator_images) {
    auto map = extend_to_homomorphism(
        source, source.generator_elems(), target, generator_images);
    if (!map) {
      return std::nullopt;
    }
    return GroupHom(source, target, std::move(generator_images), std::move(*map));
  }

  Subgroup GroupHom::image() const {
    return Subgroup::generated_by(target_, gen_images_);
  }

  Subgroup GroupHom::kernel() const {
    std::vector<Elem> ker;
    for (Elem x = 0; x < map_.size(); ++x) {
      if (map_[x] == PermGroup::identity()) {
        ker.push_back(x);
      }
    }
    return Subgroup::from_members(source_, std::move(ker));
  }

  bool GroupHom::is_injective() const {
    return kernel().is_trivial();
  }

  bool GroupHom::is_surjective() const {
    return image().order() == target_.order();
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup machinery
  ////////////////////////////////////////////////////////////////////////

  bool is_prime(unsigned long long n) {
    if (n < 2) {
      return false;
    }
    for (unsigned long long d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  bool is_p_power(std::size_t n, unsigned p) {
    if (n == 0) {
      return false;
    }
    while (n % p == 0) {
      n /= p;
    }
    return n == 1;
  }

  std::vector<Elem> order_p_elements(PermGroup const& G, unsigned p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("order_p_elements: p must be prime");
    }
    std::vector<Elem> out;
    for (Elem x = 1; x < G.order(); ++x) {
      if (G.element_order(x) == p) {
        out.push_back(x);
      }
    }
    return out;
  }

  Subgroup normal_closure(PermGroup const& G, std::span<Elem const> S) {
    std::vector<Elem> gens(S.begin(), S.end());
    auto              N = Subgroup::generated_by(G, gens);
    while (true) {
      std::vector<Elem> extra;
      for (Elem g : G.generator_elems()) {
        for (Elem n : gens) {
          Elem c = G.conj(g, n);
          if (!N.contains(c)) {
            extra.push_back(c);
          }
        }
      }
      if (extra.empty()) {
        return N;
      }
      gens.insert(gens.end(), extra.begin(), extra.end());
      N    = Subgroup::generated_by(G, gens);
      gens = N.generators();
    }
  }

  Subgroup centralizer(PermGroup const& G, std::span<Elem const> S) {
    std::vector<Elem> out;
    for (Elem g = 0; g < G.order(); ++g) {
      if (std::all_of(S.begin(), S.end(), [&](Elem s) { return G.commute(g, s); })) {
        out.push_back(g);
      }
    }
    return Subgroup::from_members(G, std::move(out));
  }

  Subgroup normalizer(PermGroup const& G, Subgroup const& H) {
    auto              gens = H.generators();
    std::vector<Elem> out;
    for (Elem g = 0; g < G.order(); ++g) {
      if (std::all_of(
              gens.begin(), gens.end(), [&](Elem h) { return H.contains(G.conj(g, h)); })) {
        out.push_back(g);
      }
    }
    return Subgroup::from_members(G, std::move(out));
  }

  Subgroup center(PermGroup const& G) {
    return centralizer(G, G.generator_elems());
  }

  Subgroup p_residual(PermGroup const& G, unsigned p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("p_residual: p must be prime");
    }
    std::vector<Elem> coprime;
    for (Elem x = 1; x < G.order(); ++x) {
      if (G.element_order(x) % p != 0) {
        coprime.push_back(x);
      }
    }
    return normal_closure(G, coprime);
  }

  Quotient quotient(PermGroup const& G, Subgroup const& N) {
    if (!N.is_normal()) {
      throw NotNormal("quotient: subgroup is not normal");
    }
    std::vector<Elem> coset(G.order(), kNone);
    std::vector<Elem> reps;
    for (Elem x = 0; x < G.order(); ++x) {
      if (coset[x] != kNone) {
        continue;
      }
      auto c = static_cast<Elem>(reps.size());
      reps.push_back(x);
      for (Elem n : N.members()) {
        coset[G.mul(x, n)] = c;
      }
    }
    std::size_t const m = reps.size();
    std::vector<Perm> gens;
    for (Elem g : G.generator_elems()) {
      std::vector<Point> img(m);
      for (std::size_t c = 0; c < m; ++c) {
        img[c] = coset[G.mul(g, reps[c])];
      }
      gens.emplace_back(std::move(img));
    }
    PermGroup         Q(m, gens);
    std::vector<Elem> images;
    for (auto const& p : gens) {
      images.push_back(Q.index_of(p));
    }
    auto proj = GroupHom::extend(G, Q, std::move(images));
    return Quotient{Q, *proj};
  }

  std::vector<Subgroup> elementary_abelian_p_subgroups(PermGroup const& G,
                                                       unsigned         p,
                                                       bool             include_trivial) {
    auto const                    elts = order_p_elements(G, p);
    std::size_t const             cap  = limits().max_subgroups;
    std::set<std::vector<Elem>>   seen;
    std::vector<Subgroup>         found;
    std::vector<std::vector<Elem>> found_gens;

    auto add = [&](std::vector<Elem> gens) {
      auto H = Subgroup::generated_by(G, gens);
      if (seen.insert(std::vector<Elem>(H.members().begin(), H.members().end())).second) {
        if (found.size() >= cap) {
          throw SizeError("elementary abelian subgroup search exceeds the subgroup bound");
        }
        found.push_back(std::move(H));
        found_gens.push_back(std::move(gens));
      }
    };
    for (Elem x : elts) {
      add({x});
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (Elem y : elts) {
        if (found[i].contains(y)) {
          continue;
        }
        auto const& gens = found_gens[i];
        if (std::all_of(gens.begin(), gens.end(), [&](Elem g) { return G.commute(g, y); })) {
          auto next = gens;
          next.push_back(y);
          add(std::move(next));
        }
      }
    }
    if (include_trivial) {
      found.push_back(Subgroup::trivial(G));
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  std::vector<Subgroup> maximal_members(std::vector<Subgroup> const& subgroups) {
    std::vector<Subgroup> out;
    for (auto const& H : subgroups) {
      bool maximal = std::none_of(subgroups.begin(), subgroups.end(), [&](Subgroup const& K) {
        return K.order() > H.order() && H.is_subgroup_of(K);
      });
      if (maximal) {
        out.push_back(H);
      }
    }
    return out;
  }

  std::vector<std::vector<Subgroup>> conjugacy_classes(std::vector<Subgroup> const& subgroups) {
    std::vector<std::vector<Subgroup>> classes;
    std::vector<bool>                  used(subgroups.size(), false);
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
      if (used[i]) {
        continue;
      }
      PermGroup const&      G = subgroups[i].parent();
      std::vector<Subgroup> orbit{subgroups[i]};
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (Elem g : G.generator_elems()) {
          auto c = orbit[k].conjugate(g);
          if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) {
            orbit.push_back(std::move(c));
          }
        }
      }
      for (std::size_t j = i; j < subgroups.size(); ++j) {
        if (std::find(orbit.begin(), orbit.end(), subgroups[j]) != orbit.end()) {
          used[j] = true;
        }
      }
      std::sort(orbit.begin(), orbit.end());
      classes.push_back(std::move(orbit));
    }
    return classes;
  }

  std::vector<Subgroup> sylow_subgroups(PermGroup const& G, unsigned p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("sylow_subgroups: p must be prime");
    }
    std::vector<Elem> p_elements;
    for (Elem x = 1; x < G.order(); ++x) {
      if (is_p_power(G.element_order(x), p)) {
        p_elements.push_back(x);
      }
    }
    // Grow a p-subgroup by p-elements normalizing it; a p-subgroup that is
    // not Sylow always has such an element outside it.
    Subgroup          P    = Subgroup::trivial(G);
    std::vector<Elem> gens;
    bool              grew = true;
    while (grew) {
      grew          = false;
      auto pgens    = P.generators();
      for (Elem x : p_elements) {
        if (P.contains(x)) {
          continue;
        }
        bool normalizes = std::all_of(
            pgens.begin(), pgens.end(), [&](Elem h) { return P.contains(G.conj(x, h)); });
        if (normalizes) {
          gens.push_back(x);
          P    = Subgroup::generated_by(G, gens);
          grew = true;
          break;
        }
      }
    }
    auto classes = conjugacy_classes({P});
    return classes.front();
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::map<std::size_t, std::size_t> order_statistics(PermGroup const& G) {
      std::map<std::size_t, std::size_t> stats;
      for (Elem x = 0; x < G.order(); ++x) {
        ++stats[G.element_order(x)];
      }
      return stats;
    }

    bool injective_on_reached(std::vector<Elem> const& map, std::size_t target_order) {
      std::vector<bool> hit(target_order, false);
      for (Elem v : map) {
        if (v == kNone) {
          continue;
        }
        if (hit[v]) {
          return false;
        }
        hit[v] = true;
      }
      return true;
    }

    bool search_iso(PermGroup const&                      A,
                    PermGroup const&                      B,
                    std::vector<Elem> const&              gens,
                    std::vector<std::vector<Elem>> const& candidates,
                    std::vector<Elem>&                    images) {
      std::size_t const depth = images.size();
      if (depth == gens.size()) {
        return true;
      }
      for (Elem c : candidates[depth]) {
        images.push_back(c);
        auto map = extend_partial(
            A, std::span(gens).first(depth + 1), B, std::span<Elem const>(images));
        if (map && injective_on_reached(*map, B.order())
            && search_iso(A, B, gens, candidates, images)) {
          return true;
        }
        images.pop_back();
      }
      return false;
    }
  }  // namespace

  std::optional<GroupHom> find_isomorphism(PermGroup const& A, PermGroup const& B) {
    if (A.order() != B.order() || A.is_abelian() != B.is_abelian()
        || order_statistics(A) != order_statistics(B)) {
      return std::nullopt;
    }
    std::vector<Elem> all(A.order());
    std::iota(all.begin(), all.end(), Elem{0});
    auto const gens = small_generating_set(A, all);

    std::vector<std::vector<Elem>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Elem y = 0; y < B.order(); ++y) {
        if (B.element_order(y) == A.element_order(gens[i])) {
          candidates[i].push_back(y);
        }
      }
    }
    std::vector<Elem> images;
    if (!search_iso(A, B, gens, candidates, images)) {
      return std::nullopt;
    }
    auto              map = extend_to_homomorphism(A, gens, B, images);
    std::vector<Elem> gen_images;
    for (Elem g : A.generator_elems()) {
      gen_images.push_back((*map)[g]);
    }
    return GroupHom::extend(A, B, std::move(gen_images));
  }

  bool are_isomorphic(PermGroup const& A, PermGroup const& B) {
    return find_isomorphism(A, B).has_value();
  }

}  // namespace galois
