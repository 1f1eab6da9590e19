#ifndef BURNSIDE_GSET_HPP_
#define BURNSIDE_GSET_HPP_

// Literal finite G-sets as action tables. These back the set-theoretic
// oracles: composition as G2\(X x Y), the A(G)-action by products, and marks
// as fixed-point counts.

#include <cstddef>
#include <vector>

#include "burnside/element.hpp"
#include "burnside/error.hpp"
#include "burnside/group.hpp"

namespace burnside {

  class GSet {
   public:
    GSet(GroupPtr group, int size, std::vector<int> action)
        : _group(std::move(group)), _size(size), _action(std::move(action)) {}

    explicit GSet(GroupPtr group) : _group(std::move(group)), _size(0) {}

    // G/D as a left G-set, points in order of first appearance.
    static GSet coset_space(Subgroup const& D) {
      auto const&      G = *D.parent();
      std::vector<int> coset_of(G.order(), -1);
      std::vector<int> rep;
      for (int g = 0; g < G.order(); ++g) {
        if (coset_of[g] >= 0) {
          continue;
        }
        int const id = static_cast<int>(rep.size());
        rep.push_back(g);
        for (int d : D.elements()) {
          coset_of[G.mul(g, d)] = id;
        }
      }
      int const        n = static_cast<int>(rep.size());
      std::vector<int> action(static_cast<std::size_t>(G.order()) * n);
      for (int q = 0; q < G.order(); ++q) {
        for (int c = 0; c < n; ++c) {
          action[static_cast<std::size_t>(q) * n + c] = coset_of[G.mul(q, rep[c])];
        }
      }
      return GSet(D.parent(), n, std::move(action));
    }

    GroupPtr const& group() const noexcept {
      return _group;
    }
    int size() const noexcept {
      return _size;
    }
    int act(int g, int x) const noexcept {
      return _action[static_cast<std::size_t>(g) * _size + x];
    }

    // Appends `copies` copies of `other` (same acting group).
    void append(GSet const& other, int copies = 1) {
      int const        n = _group->order();
      int const        new_size = _size + copies * other._size;
      std::vector<int> action(static_cast<std::size_t>(n) * new_size);
      for (int g = 0; g < n; ++g) {
        for (int x = 0; x < _size; ++x) {
          action[static_cast<std::size_t>(g) * new_size + x] = act(g, x);
        }
        for (int c = 0; c < copies; ++c) {
          int const offset = _size + c * other._size;
          for (int x = 0; x < other._size; ++x) {
            action[static_cast<std::size_t>(g) * new_size + offset + x]
                = offset + other.act(g, x);
          }
        }
      }
      _size   = new_size;
      _action = std::move(action);
    }

    // Orbit id of every point, ids in order of least point.
    std::vector<int> orbit_ids(int* count = nullptr) const {
      std::vector<int> id(_size, -1);
      int              next = 0;
      for (int x = 0; x < _size; ++x) {
        if (id[x] >= 0) {
          continue;
        }
        for (int g = 0; g < _group->order(); ++g) {
          id[act(g, x)] = next;
        }
        ++next;
      }
      if (count) {
        *count = next;
      }
      return id;
    }

    std::vector<int> stabilizer(int x) const {
      std::vector<int> out;
      for (int g = 0; g < _group->order(); ++g) {
        if (act(g, x) == x) {
          out.push_back(g);
        }
      }
      return out;
    }

    std::vector<int> fixed_points(Subgroup const& D) const {
      std::vector<int> out;
      for (int x = 0; x < _size; ++x) {
        bool fixed = true;
        for (int d : D.elements()) {
          if (act(d, x) != x) {
            fixed = false;
            break;
          }
        }
        if (fixed) {
          out.push_back(x);
        }
      }
      return out;
    }

   private:
    GroupPtr         _group;
    int              _size;
    std::vector<int> _action;
  };

  // The effective element X of A(G,K) as a literal (K x G)-set, where KxG is
  // direct_product(K, G).
  inline GSet realize(BurnsideElement const& X,
                      GroupPtr const&        KxG,
                      std::size_t            cap = Limits::default_set_cap) {
    if (!X.is_effective()) {
      throw Error(ErrorKind::not_effective, "element has negative or fractional coefficients");
    }
    GSet        out(KxG);
    std::size_t total = 0;
    for (auto const& [c, v] : X.coefficients()) {
      auto const& pair   = (*X.table())[c].canonical;
      auto const  copies = static_cast<std::size_t>(v);
      total += copies * static_cast<std::size_t>(KxG->order() / pair.source().size());
      if (total > cap) {
        throw Error(ErrorKind::size_cap_exceeded, "bundle has more than "
                                                      + std::to_string(cap) + " points");
      }
      out.append(GSet::coset_space(graph_subgroup(pair, KxG)), static_cast<int>(copies));
    }
    return out;
  }

}  // namespace burnside

#endif  // BURNSIDE_GSET_HPP_
