#ifndef BURNSIDE_GROUP_HPP_
#define BURNSIDE_GROUP_HPP_

// Finite groups as explicit multiplication tables on the indices 0..n-1,
// their subgroups, homomorphisms out of subgroups, and the usual structural
// computations (normalizers, transporters, double cosets, Sylow subgroups).
//
// Conventions: c_g(x) = g x g^-1, so "ᵍH" is g H g^-1 and "H^g" is g^-1 H g.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burnside/error.hpp"

namespace burnside {

  struct Limits {
    // Ambient groups G, K, S.
    static constexpr int default_order_cap = 64;
    // Constructed products K x G.
    static constexpr int default_product_cap = 4096;
    // Literal sets built by the set-theoretic oracles.
    static constexpr std::size_t default_set_cap = 20000;
  };

  ////////////////////////////////////////////////////////////////////////////
  // Number theory helpers
  ////////////////////////////////////////////////////////////////////////////

  inline bool is_prime(int n) noexcept {
    if (n < 2) {
      return false;
    }
    for (int d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  inline std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) {
          n /= d;
        }
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  // Returns p if n = p^k with k >= 1; std::nullopt otherwise (including n = 1).
  inline std::optional<int> prime_power_base(int n) {
    auto ps = prime_divisors(n);
    if (ps.size() == 1) {
      return ps.front();
    }
    return std::nullopt;
  }

  inline bool is_power_of(int n, int p) noexcept {
    if (n < 1) {
      return false;
    }
    while (n % p == 0) {
      n /= p;
    }
    return n == 1;
  }

  // Largest power of p dividing n.
  inline int p_part(int n, int p) noexcept {
    int out = 1;
    while (n % p == 0) {
      n /= p;
      out *= p;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////////

  using Permutation = std::vector<int>;

  struct PermPresentation {
    int                      degree = 0;
    std::vector<Permutation> generators;
    // Permutation realizing each element index.
    std::vector<Permutation> elements;
  };

  class FiniteGroup;
  using GroupPtr = std::shared_ptr<FiniteGroup const>;

  class FiniteGroup {
   public:
    // Builds a group from a table already known to satisfy the axioms. Use
    // make_group_from_table for untrusted input.
    static GroupPtr trusted(std::vector<int> table,
                            int              order,
                            std::string      label,
                            std::optional<PermPresentation> perms
                            = std::nullopt) {
      return GroupPtr(new FiniteGroup(
          std::move(table), order, std::move(label), std::move(perms)));
    }

    int order() const noexcept {
      return _order;
    }
    int identity() const noexcept {
      return _identity;
    }
    int mul(int a, int b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _order + b];
    }
    int inv(int a) const noexcept {
      return _inv[a];
    }
    // c_g(x) = g x g^-1
    int conj(int g, int x) const noexcept {
      return mul(mul(g, x), _inv[g]);
    }
    int element_order(int x) const noexcept {
      return _elt_order[x];
    }
    std::string const& label() const noexcept {
      return _label;
    }
    std::optional<PermPresentation> const& permutations() const noexcept {
      return _perms;
    }
    std::vector<int> const& table() const noexcept {
      return _table;
    }
    std::vector<std::vector<int>> table_rows() const {
      std::vector<std::vector<int>> rows(_order);
      for (int a = 0; a < _order; ++a) {
        rows[a].assign(_table.begin() + static_cast<std::ptrdiff_t>(a) * _order,
                       _table.begin()
                           + static_cast<std::ptrdiff_t>(a + 1) * _order);
      }
      return rows;
    }
    bool is_abelian() const noexcept {
      for (int a = 0; a < _order; ++a) {
        for (int b = a + 1; b < _order; ++b) {
          if (mul(a, b) != mul(b, a)) {
            return false;
          }
        }
      }
      return true;
    }

    // Structural equality: same order and same multiplication table.
    friend bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
      return a._order == b._order && a._table == b._table;
    }

   private:
    FiniteGroup(std::vector<int>                table,
                int                             order,
                std::string                     label,
                std::optional<PermPresentation> perms)
        : _order(order),
          _identity(0),
          _table(std::move(table)),
          _inv(order, -1),
          _elt_order(order, 0),
          _label(std::move(label)),
          _perms(std::move(perms)) {
      for (int e = 0; e < _order; ++e) {
        bool ok = true;
        for (int x = 0; x < _order && ok; ++x) {
          ok = mul(e, x) == x && mul(x, e) == x;
        }
        if (ok) {
          _identity = e;
          break;
        }
      }
      for (int a = 0; a < _order; ++a) {
        for (int b = 0; b < _order; ++b) {
          if (mul(a, b) == _identity) {
            _inv[a] = b;
            break;
          }
        }
        int x = a, k = 1;
        while (x != _identity) {
          x = mul(x, a);
          ++k;
        }
        _elt_order[a] = k;
      }
    }

    int                             _order;
    int                             _identity;
    std::vector<int>                _table;
    std::vector<int>                _inv;
    std::vector<int>                _elt_order;
    std::string                     _label;
    std::optional<PermPresentation> _perms;
  };

  inline bool same_group(GroupPtr const& a, GroupPtr const& b) {
    return a == b || (a && b && *a == *b);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////////

  inline GroupPtr make_group_from_table(std::vector<std::vector<int>> const& rows,
                                        std::string label = "",
                                        int order_cap = Limits::default_order_cap) {
    int const n = static_cast<int>(rows.size());
    if (n == 0) {
      throw Error(ErrorKind::not_a_group, "empty multiplication table");
    }
    if (n > order_cap) {
      throw Error(ErrorKind::order_cap_exceeded,
                  "table of order " + std::to_string(n) + " exceeds cap "
                      + std::to_string(order_cap));
    }
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (auto const& row : rows) {
      if (static_cast<int>(row.size()) != n) {
        throw Error(ErrorKind::not_a_group, "table is not square");
      }
      for (int x : row) {
        if (x < 0 || x >= n) {
          throw Error(ErrorKind::not_a_group, "table entry out of range");
        }
        table.push_back(x);
      }
    }
    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
    std::optional<int> identity;
    for (int e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        ok = at(e, x) == x && at(x, e) == x;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      throw Error(ErrorKind::not_a_group, "no two-sided identity");
    }
    for (int a = 0; a < n; ++a) {
      bool found = false;
      for (int b = 0; b < n && !found; ++b) {
        found = at(a, b) == *identity && at(b, a) == *identity;
      }
      if (!found) {
        throw Error(ErrorKind::not_a_group,
                    "element " + std::to_string(a) + " has no inverse");
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int const ab = at(a, b);
        for (int c = 0; c < n; ++c) {
          if (at(ab, c) != at(a, at(b, c))) {
            throw Error(ErrorKind::not_a_group,
                        "associativity fails at (" + std::to_string(a) + ","
                            + std::to_string(b) + "," + std::to_string(c)
                            + ")");
          }
        }
      }
    }
    return FiniteGroup::trusted(std::move(table), n, std::move(label));
  }

  namespace detail {
    inline void validate_permutation(Permutation const& p, int degree) {
      if (static_cast<int>(p.size()) != degree) {
        throw Error(ErrorKind::invalid_permutation,
                    "permutation has wrong length");
      }
      std::vector<char> seen(degree, 0);
      for (int x : p) {
        if (x < 0 || x >= degree || seen[x]) {
          throw Error(ErrorKind::invalid_permutation, "not a bijection");
        }
        seen[x] = 1;
      }
    }

    // (a * b)(x) = a(b(x)): b is applied first.
    inline Permutation compose_perm(Permutation const& a, Permutation const& b) {
      Permutation out(b.size());
      for (std::size_t x = 0; x < b.size(); ++x) {
        out[x] = a[b[x]];
      }
      return out;
    }
  }  // namespace detail

  // Closes the generating set by breadth-first multiplication. Element 0 is
  // the identity; the remaining indices follow discovery order.
  inline GroupPtr make_group_from_permutations(int degree,
                                               std::vector<Permutation> const& generators,
                                               std::string label = "",
                                               int order_cap = Limits::default_order_cap) {
    if (degree < 0) {
      throw Error(ErrorKind::invalid_permutation, "negative degree");
    }
    for (auto const& g : generators) {
      detail::validate_permutation(g, degree);
    }
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Permutation>   elements{id};
    std::map<Permutation, int> index{{id, 0}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : generators) {
        Permutation next = detail::compose_perm(elements[i], g);
        if (index.emplace(next, static_cast<int>(elements.size())).second) {
          elements.push_back(std::move(next));
          if (static_cast<int>(elements.size()) > order_cap) {
            throw Error(ErrorKind::order_cap_exceeded,
                        "permutation closure exceeds cap "
                            + std::to_string(order_cap));
          }
        }
      }
    }
    int const        n = static_cast<int>(elements.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        table[static_cast<std::size_t>(a) * n + b]
            = index.at(detail::compose_perm(elements[a], elements[b]));
      }
    }
    PermPresentation pres{degree, generators, std::move(elements)};
    return FiniteGroup::trusted(std::move(table), n, std::move(label), std::move(pres));
  }

  // Index encoding: (a, b) -> a * |B| + b.
  inline int product_index(FiniteGroup const& B, int a, int b) noexcept {
    return a * B.order() + b;
  }

  inline GroupPtr direct_product(FiniteGroup const& A,
                                 FiniteGroup const& B,
                                 std::string label = "",
                                 int order_cap = Limits::default_product_cap) {
    int const na = A.order(), nb = B.order();
    if (static_cast<long>(na) * nb > order_cap) {
      throw Error(ErrorKind::order_cap_exceeded,
                  "product order " + std::to_string(static_cast<long>(na) * nb)
                      + " exceeds cap " + std::to_string(order_cap));
    }
    int const        n = na * nb;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        table[static_cast<std::size_t>(x) * n + y]
            = A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
      }
    }
    if (label.empty()) {
      label = A.label() + "x" + B.label();
    }
    return FiniteGroup::trusted(std::move(table), n, std::move(label));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Subgroup
  ////////////////////////////////////////////////////////////////////////////

  class Subgroup {
   public:
    Subgroup() = default;

    // `elements` must be closed; see make_subgroup for the checked version.
    Subgroup(GroupPtr parent, std::vector<int> elements)
        : _parent(std::move(parent)), _elements(std::move(elements)) {
      std::sort(_elements.begin(), _elements.end());
      _position.assign(_parent->order(), -1);
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        _position[_elements[i]] = static_cast<int>(i);
      }
    }

    GroupPtr const& parent() const noexcept {
      return _parent;
    }
    std::vector<int> const& elements() const noexcept {
      return _elements;
    }
    int size() const noexcept {
      return static_cast<int>(_elements.size());
    }
    bool contains(int g) const noexcept {
      return _position[g] >= 0;
    }
    // Position of g in elements(), or -1.
    int position(int g) const noexcept {
      return _position[g];
    }
    bool is_subgroup_of(Subgroup const& other) const noexcept {
      return std::all_of(_elements.begin(), _elements.end(),
                         [&](int x) { return other.contains(x); });
    }

    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a._elements == b._elements;
    }
    // Deterministic total order: size, then element set.
    friend bool operator<(Subgroup const& a, Subgroup const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a._elements < b._elements;
    }

   private:
    GroupPtr         _parent;
    std::vector<int> _elements;
    std::vector<int> _position;
  };

  inline Subgroup trivial_subgroup(GroupPtr const& G) {
    return Subgroup(G, {G->identity()});
  }

  inline Subgroup whole_group(GroupPtr const& G) {
    std::vector<int> all(G->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(G, std::move(all));
  }

  // Closure of a set of elements under multiplication.
  inline std::vector<int> closure(FiniteGroup const& G, std::vector<int> const& gens) {
    std::vector<char> seen(G.order(), 0);
    std::vector<int>  out{G.identity()};
    seen[G.identity()] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (int s : gens) {
        int const y = G.mul(out[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline Subgroup generated_subgroup(GroupPtr const& G, std::vector<int> const& gens) {
    return Subgroup(G, closure(*G, gens));
  }

  inline Subgroup make_subgroup(GroupPtr const& G, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (int x : elements) {
      if (x < 0 || x >= G->order()) {
        throw Error(ErrorKind::invalid_input, "subgroup element out of range");
      }
    }
    if (closure(*G, elements) != elements) {
      throw Error(ErrorKind::invalid_input, "element set is not a subgroup");
    }
    return Subgroup(G, std::move(elements));
  }

  // ᵍH = g H g^-1
  inline Subgroup conjugate(Subgroup const& H, int g) {
    auto const&      G = *H.parent();
    std::vector<int> out;
    out.reserve(H.size());
    for (int h : H.elements()) {
      out.push_back(G.conj(g, h));
    }
    return Subgroup(H.parent(), std::move(out));
  }

  inline bool is_p_group(Subgroup const& H, int p) {
    return is_power_of(H.size(), p);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Subgroup lattice
  ////////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Enumerates subgroups by adjoining one element at a time to already
    // known subgroups, starting from the trivial subgroup. Every subgroup is
    // reached since it is generated by finitely many of its elements.
    inline std::vector<Subgroup> enumerate_subgroups(GroupPtr const& G) {
      int const                  n = G->order();
      std::set<std::vector<int>> found;
      std::vector<std::vector<int>> layer{{G->identity()}};
      found.insert(layer.front());
      while (!layer.empty()) {
        std::vector<std::vector<int>> next;
        for (auto const& H : layer) {
          std::vector<char> in(n, 0);
          for (int h : H) {
            in[h] = 1;
          }
          std::vector<char> tried(n, 0);
          for (int g = 0; g < n; ++g) {
            if (in[g] || tried[g]) {
              continue;
            }
            std::vector<int> gens = H;
            gens.push_back(g);
            auto joined = closure(*G, gens);
            // generators of <g> give the same join
            int const ord = G->element_order(g);
            int       x   = g;
            for (int k = 1; k < ord; ++k, x = G->mul(x, g)) {
              if (std::gcd(k, ord) == 1) {
                tried[x] = 1;
              }
            }
            if (found.insert(joined).second) {
              next.push_back(std::move(joined));
            }
          }
        }
        layer = std::move(next);
      }
      std::vector<Subgroup> out;
      out.reserve(found.size());
      for (auto const& elts : found) {
        out.emplace_back(G, elts);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    class LatticeCache {
     public:
      std::shared_ptr<std::vector<Subgroup> const> get(GroupPtr const& G) {
        std::lock_guard<std::mutex> lock(_mutex);
        for (auto const& [key, value] : _entries) {
          if (same_group(key, G)) {
            return value;
          }
        }
        auto value = std::make_shared<std::vector<Subgroup> const>(
            enumerate_subgroups(G));
        _entries.emplace_back(G, value);
        return value;
      }

      bool contains(GroupPtr const& G) {
        std::lock_guard<std::mutex> lock(_mutex);
        for (auto const& [key, value] : _entries) {
          if (same_group(key, G)) {
            return true;
          }
        }
        return false;
      }

      // Installs a lattice loaded from storage. The lists must be sorted by
      // (size, element set) and closed under multiplication.
      void seed(GroupPtr const& G, std::vector<std::vector<int>> const& lists) {
        std::vector<Subgroup> subs;
        for (auto const& elts : lists) {
          if (closure(*G, elts) != elts) {
            throw Error(ErrorKind::invalid_input, "stored subgroup is not closed");
          }
          subs.emplace_back(G, elts);
        }
        if (!std::is_sorted(subs.begin(), subs.end())) {
          throw Error(ErrorKind::invalid_input, "stored lattice is not sorted");
        }
        std::lock_guard<std::mutex> lock(_mutex);
        for (auto const& [key, value] : _entries) {
          if (same_group(key, G)) {
            return;
          }
        }
        _entries.emplace_back(G, std::make_shared<std::vector<Subgroup> const>(std::move(subs)));
      }

     private:
      std::mutex _mutex;
      std::vector<std::pair<GroupPtr, std::shared_ptr<std::vector<Subgroup> const>>>
          _entries;
    };

    inline LatticeCache& lattice_cache() {
      static LatticeCache cache;
      return cache;
    }
  }  // namespace detail

  // All subgroups of G, each once, sorted by (size, element set). The result
  // is memoized per group. Subgroups in the list have parent G as passed by
  // the first caller for structurally equal groups.
  inline std::vector<Subgroup> const& subgroups(GroupPtr const& G,
                                                int order_cap = Limits::default_order_cap) {
    if (G->order() > order_cap) {
      throw Error(ErrorKind::order_cap_exceeded,
                  "subgroup enumeration of a group of order "
                      + std::to_string(G->order()));
    }
    // the cache entry keeps the vector alive for the process lifetime
    return *detail::lattice_cache().get(G);
  }

  inline int subgroup_index(GroupPtr const& G, std::vector<int> const& elements) {
    auto const& subs = subgroups(G);
    auto        it   = std::lower_bound(
        subs.begin(), subs.end(), elements, [](Subgroup const& s, std::vector<int> const& e) {
          if (s.size() != static_cast<int>(e.size())) {
            return s.size() < static_cast<int>(e.size());
          }
          return s.elements() < e;
        });
    if (it == subs.end() || it->elements() != elements) {
      throw Error(ErrorKind::internal, "element set is not a known subgroup");
    }
    return static_cast<int>(it - subs.begin());
  }

  ////////////////////////////////////////////////////////////////////////////
  // Normalizers, transporters, double cosets, Sylow subgroups
  ////////////////////////////////////////////////////////////////////////////

  // N_G(H) = { g : ᵍH = H }
  inline Subgroup normalizer(GroupPtr const& G, Subgroup const& H) {
    std::vector<int> out;
    for (int g = 0; g < G->order(); ++g) {
      bool ok = true;
      for (int h : H.elements()) {
        if (!H.contains(G->conj(g, h))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(g);
      }
    }
    return Subgroup(G, std::move(out));
  }

  // N_G(F, H) = { g : F^g <= H } with F^g = g^-1 F g.
  inline std::vector<int> transporter(GroupPtr const& G, Subgroup const& F, Subgroup const& H) {
    std::vector<int> out;
    for (int g = 0; g < G->order(); ++g) {
      int const gi = G->inv(g);
      bool      ok = true;
      for (int f : F.elements()) {
        if (!H.contains(G->conj(gi, f))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(g);
      }
    }
    return out;
  }

  struct DoubleCoset {
    int representative;  // least element of the class
    int size;
  };

  // A\G/B, ordered by representative.
  inline std::vector<DoubleCoset> double_cosets(GroupPtr const& G,
                                                Subgroup const& A,
                                                Subgroup const& B) {
    std::vector<char>        seen(G->order(), 0);
    std::vector<DoubleCoset> out;
    for (int g = 0; g < G->order(); ++g) {
      if (seen[g]) {
        continue;
      }
      int size = 0;
      for (int a : A.elements()) {
        int const ag = G->mul(a, g);
        for (int b : B.elements()) {
          int const x = G->mul(ag, b);
          if (!seen[x]) {
            seen[x] = 1;
            ++size;
          }
        }
      }
      out.push_back({g, size});
    }
    return out;
  }

  // A Sylow p-subgroup: the least subgroup of order p^k (full p-part of |G|)
  // in the (size, element set) order.
  inline Subgroup sylow_subgroup(GroupPtr const& G, int p) {
    if (!is_prime(p)) {
      throw Error(ErrorKind::invalid_input, std::to_string(p) + " is not prime");
    }
    int const target = p_part(G->order(), p);
    for (auto const& H : subgroups(G)) {
      if (H.size() == target) {
        return Subgroup(G, H.elements());
      }
    }
    throw Error(ErrorKind::internal, "no Sylow subgroup found");
  }

  // Conjugacy classes of subgroups, as lists of indices into subgroups(G).
  // Classes are ordered by their least member, members ascending.
  inline std::vector<std::vector<int>> subgroup_classes(GroupPtr const& G) {
    auto const&                   subs = subgroups(G);
    std::vector<int>              cls(subs.size(), -1);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (cls[i] >= 0) {
        continue;
      }
      std::set<int> members;
      for (int g = 0; g < G->order(); ++g) {
        members.insert(subgroup_index(G, conjugate(subs[i], g).elements()));
      }
      for (int m : members) {
        cls[m] = static_cast<int>(out.size());
      }
      out.emplace_back(members.begin(), members.end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////////

  // A homomorphism from a subgroup of some group into a target group.
  // images()[i] is the image of source().elements()[i].
  class Homomorphism {
   public:
    Homomorphism() = default;
    Homomorphism(Subgroup source, GroupPtr target, std::vector<int> images)
        : _source(std::move(source)), _target(std::move(target)), _images(std::move(images)) {}

    Subgroup const& source() const noexcept {
      return _source;
    }
    GroupPtr const& target() const noexcept {
      return _target;
    }
    std::vector<int> const& images() const noexcept {
      return _images;
    }
    int operator()(int h) const {
      return _images[_source.position(h)];
    }
    bool is_trivial() const noexcept {
      return std::all_of(_images.begin(), _images.end(),
                         [&](int k) { return k == _target->identity(); });
    }
    bool is_homomorphism() const {
      auto const& G = *_source.parent();
      for (int a : _source.elements()) {
        for (int b : _source.elements()) {
          if ((*this)(G.mul(a, b)) != _target->mul((*this)(a), (*this)(b))) {
            return false;
          }
        }
      }
      return true;
    }
    // Image as a set of target elements, sorted.
    std::vector<int> image_set() const {
      std::vector<int> out(_images);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    friend bool operator==(Homomorphism const& a, Homomorphism const& b) {
      return a._source == b._source && a._images == b._images;
    }

   private:
    Subgroup         _source;
    GroupPtr         _target;
    std::vector<int> _images;
  };

  inline Homomorphism trivial_homomorphism(Subgroup const& H, GroupPtr const& K) {
    return Homomorphism(H, K, std::vector<int>(H.size(), K->identity()));
  }

  inline Homomorphism inclusion(Subgroup const& H) {
    return Homomorphism(H, H.parent(), H.elements());
  }

  // A generating set of H chosen greedily in index order.
  inline std::vector<int> generators_of(Subgroup const& H) {
    auto const&       G = *H.parent();
    std::vector<int>  gens;
    std::vector<char> in(G.order(), 0);
    in[G.identity()] = 1;
    for (int h : H.elements()) {
      if (in[h]) {
        continue;
      }
      gens.push_back(h);
      for (int x : closure(G, gens)) {
        in[x] = 1;
      }
    }
    return gens;
  }

  // All homomorphisms H -> K, sorted by image tuple.
  inline std::vector<Homomorphism> homomorphisms(Subgroup const& H, GroupPtr const& K) {
    auto const& G    = *H.parent();
    auto const  gens = generators_of(H);
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int const ord = G.element_order(gens[i]);
      for (int k = 0; k < K->order(); ++k) {
        if (ord % K->element_order(k) == 0) {
          candidates[i].push_back(k);
        }
      }
    }
    std::vector<int> choice(gens.size(), 0);
    std::vector<std::vector<int>> results;

    // Propagates images along right multiplication by the first `depth`
    // generators; fails on any inconsistency.
    auto extend = [&](std::size_t depth, std::vector<int>& image) {
      std::fill(image.begin(), image.end(), -1);
      image[G.identity()] = K->identity();
      std::vector<int> queue{G.identity()};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        int const h = queue[q];
        for (std::size_t i = 0; i < depth; ++i) {
          int const hs = G.mul(h, gens[i]);
          int const v  = K->mul(image[h], choice[i]);
          if (image[hs] < 0) {
            image[hs] = v;
            queue.push_back(hs);
          } else if (image[hs] != v) {
            return false;
          }
        }
      }
      return true;
    };

    std::vector<int> image(G.order(), -1);
    std::function<void(std::size_t)> search = [&](std::size_t depth) {
      if (!extend(depth, image)) {
        return;
      }
      if (depth == gens.size()) {
        std::vector<int> imgs;
        imgs.reserve(H.size());
        for (int h : H.elements()) {
          imgs.push_back(image[h]);
        }
        results.push_back(std::move(imgs));
        return;
      }
      for (int k : candidates[depth]) {
        choice[depth] = k;
        search(depth + 1);
      }
    };
    search(0);
    std::sort(results.begin(), results.end());
    std::vector<Homomorphism> out;
    out.reserve(results.size());
    for (auto& imgs : results) {
      out.emplace_back(H, K, std::move(imgs));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Subgroups as groups in their own right
  ////////////////////////////////////////////////////////////////////////////

  // A subgroup S of G realized as a standalone group; to_ambient maps the
  // indices of `group` to those of `ambient`, preserving the sorted order.
  struct Embedding {
    GroupPtr         group;
    GroupPtr         ambient;
    std::vector<int> to_ambient;
    std::vector<int> from_ambient;  // -1 outside the image

    Subgroup image() const {
      return Subgroup(ambient, to_ambient);
    }
  };

  inline Embedding subgroup_as_group(Subgroup const& S, std::string label = "") {
    auto const&      G = *S.parent();
    int const        n = S.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        table[static_cast<std::size_t>(a) * n + b]
            = S.position(G.mul(S.elements()[a], S.elements()[b]));
      }
    }
    if (label.empty()) {
      label = "sub(" + G.label() + ")";
    }
    Embedding e;
    e.group        = FiniteGroup::trusted(std::move(table), n, std::move(label));
    e.ambient      = S.parent();
    e.to_ambient   = S.elements();
    e.from_ambient.assign(G.order(), -1);
    for (int i = 0; i < n; ++i) {
      e.from_ambient[S.elements()[i]] = i;
    }
    return e;
  }

}  // namespace burnside

#endif  // BURNSIDE_GROUP_HPP_
