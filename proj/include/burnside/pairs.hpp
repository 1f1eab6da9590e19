#ifndef BURNSIDE_PAIRS_HPP_
#define BURNSIDE_PAIRS_HPP_

// (G,K)-pairs (H <= G, phi: H -> K), their conjugacy classes C(G,K), graph
// subgroups in K x G, and subconjugacy.
//
// Two pairs are conjugate when some g in G and k in K give ᵍH = H' and
// phi' o c_g = c_k o phi. The classes of C(G,K) index the basis of the
// Burnside module A(G,K).

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "burnside/error.hpp"
#include "burnside/group.hpp"

namespace burnside {

  // A (G,K)-pair is a homomorphism from a subgroup of G into K.
  using GKPair = Homomorphism;

  struct PairClass {
    int    class_id;
    GKPair canonical;
    int    subgroup;  // index of canonical.source() in subgroups(G)
  };

  namespace detail {
    // (subgroup index, images aligned with the sorted subgroup elements)
    using PairKey = std::pair<int, std::vector<int>>;

    inline PairKey conjugate_key(FiniteGroup const& G,
                                 FiniteGroup const& K,
                                 GroupPtr const&    Gp,
                                 std::vector<int> const& elements,
                                 std::vector<int> const& images,
                                 int g,
                                 int k) {
      std::vector<std::pair<int, int>> moved;
      moved.reserve(elements.size());
      for (std::size_t t = 0; t < elements.size(); ++t) {
        moved.emplace_back(G.conj(g, elements[t]), K.conj(k, images[t]));
      }
      std::sort(moved.begin(), moved.end());
      std::vector<int> elts, imgs;
      elts.reserve(moved.size());
      imgs.reserve(moved.size());
      for (auto const& [h, v] : moved) {
        elts.push_back(h);
        imgs.push_back(v);
      }
      return {subgroup_index(Gp, elts), std::move(imgs)};
    }
  }  // namespace detail

  // The classes C(G,K) in deterministic order: by |H|, then the element set
  // of H, then the image tuple. The canonical representative of a class is
  // the least member of its orbit in the (element set, image tuple) order.
  class PairTable {
   public:
    PairTable(GroupPtr G, GroupPtr K) : _G(std::move(G)), _K(std::move(K)) {
      auto const& subs = subgroups(_G);
      struct Pending {
        detail::PairKey              rep;
        std::vector<detail::PairKey> orbit;
      };
      std::vector<Pending>          pending;
      std::set<detail::PairKey>     seen;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        Subgroup const H(_G, subs[i].elements());
        for (auto const& phi : homomorphisms(H, _K)) {
          detail::PairKey key{static_cast<int>(i), phi.images()};
          if (seen.count(key)) {
            continue;
          }
          std::set<detail::PairKey> orbit;
          for (int g = 0; g < _G->order(); ++g) {
            for (int k = 0; k < _K->order(); ++k) {
              orbit.insert(detail::conjugate_key(
                  *_G, *_K, _G, H.elements(), phi.images(), g, k));
            }
          }
          auto less = [&](detail::PairKey const& a, detail::PairKey const& b) {
            auto const& ea = subs[a.first].elements();
            auto const& eb = subs[b.first].elements();
            return ea != eb ? ea < eb : a.second < b.second;
          };
          auto rep = *std::min_element(orbit.begin(), orbit.end(), less);
          seen.insert(orbit.begin(), orbit.end());
          pending.push_back({rep, {orbit.begin(), orbit.end()}});
        }
      }
      std::sort(pending.begin(), pending.end(), [&](Pending const& a, Pending const& b) {
        // subgroup indices already follow the (size, elements) order
        return a.rep.first != b.rep.first ? a.rep.first < b.rep.first
                                          : a.rep.second < b.rep.second;
      });
      _classes.reserve(pending.size());
      for (std::size_t c = 0; c < pending.size(); ++c) {
        auto const& [sub, imgs] = pending[c].rep;
        _classes.push_back(
            {static_cast<int>(c), GKPair(Subgroup(_G, subs[sub].elements()), _K, imgs), sub});
        for (auto const& key : pending[c].orbit) {
          _lookup.emplace(key, static_cast<int>(c));
        }
      }
    }

    // Rebuilds a table from its canonical representatives, listed as
    // (element set of H, image tuple) in class order. Used to reload a
    // stored table without enumerating homomorphisms again.
    PairTable(GroupPtr G,
              GroupPtr K,
              std::vector<std::pair<std::vector<int>, std::vector<int>>> const& reps)
        : _G(std::move(G)), _K(std::move(K)) {
      auto const& subs = subgroups(_G);
      for (std::size_t c = 0; c < reps.size(); ++c) {
        auto const& [elts, imgs] = reps[c];
        int const   sub          = subgroup_index(_G, elts);
        GKPair      phi(Subgroup(_G, elts), _K, imgs);
        if (!phi.is_homomorphism()) {
          throw Error(ErrorKind::invalid_input, "stored pair is not a homomorphism");
        }
        _classes.push_back({static_cast<int>(c), phi, sub});
        for (int g = 0; g < _G->order(); ++g) {
          for (int k = 0; k < _K->order(); ++k) {
            auto key = detail::conjugate_key(*_G, *_K, _G, subs[sub].elements(), imgs, g, k);
            auto [it, fresh] = _lookup.emplace(key, static_cast<int>(c));
            if (!fresh && it->second != static_cast<int>(c)) {
              throw Error(ErrorKind::invalid_input, "stored classes overlap");
            }
          }
        }
      }
    }

    // Memoized per structurally distinct (G, K).
    static std::shared_ptr<PairTable const> get(GroupPtr const& G, GroupPtr const& K);

    GroupPtr const& source() const noexcept {
      return _G;
    }
    GroupPtr const& target() const noexcept {
      return _K;
    }
    std::vector<PairClass> const& classes() const noexcept {
      return _classes;
    }
    std::size_t size() const noexcept {
      return _classes.size();
    }
    PairClass const& operator[](std::size_t i) const {
      return _classes.at(i);
    }
    // Total number of pairs (not classes).
    std::size_t pair_count() const noexcept {
      return _lookup.size();
    }

    int classify(std::vector<int> const& sorted_elements,
                 std::vector<int> const& images) const {
      auto it = _lookup.find({subgroup_index(_G, sorted_elements), images});
      if (it == _lookup.end()) {
        throw Error(ErrorKind::internal, "pair is not a homomorphism from a subgroup");
      }
      return it->second;
    }

    int classify(GKPair const& pair) const {
      return classify(pair.source().elements(), pair.images());
    }

    // Classifies the pair given as (h, phi(h)) entries in any order.
    int classify(std::vector<std::pair<int, int>> graph) const {
      std::sort(graph.begin(), graph.end());
      std::vector<int> elts, imgs;
      for (auto const& [h, v] : graph) {
        elts.push_back(h);
        imgs.push_back(v);
      }
      return classify(elts, imgs);
    }

   private:
    GroupPtr                             _G;
    GroupPtr                             _K;
    std::vector<PairClass>               _classes;
    std::map<detail::PairKey, int>       _lookup;
  };

  using PairTablePtr = std::shared_ptr<PairTable const>;

  namespace detail {
    class PairTableCache {
     public:
      PairTablePtr get(GroupPtr const& G, GroupPtr const& K) {
        std::lock_guard<std::mutex> lock(_mutex);
        for (auto const& e : _entries) {
          if (same_group(e->source(), G) && same_group(e->target(), K)) {
            return e;
          }
        }
        auto t = std::make_shared<PairTable const>(G, K);
        _entries.push_back(t);
        return t;
      }

      // Installs a table built elsewhere unless one is already present.
      PairTablePtr seed(PairTablePtr const& table) {
        std::lock_guard<std::mutex> lock(_mutex);
        for (auto const& e : _entries) {
          if (same_group(e->source(), table->source()) && same_group(e->target(), table->target())) {
            return e;
          }
        }
        _entries.push_back(table);
        return table;
      }

      bool contains(GroupPtr const& G, GroupPtr const& K) {
        std::lock_guard<std::mutex> lock(_mutex);
        for (auto const& e : _entries) {
          if (same_group(e->source(), G) && same_group(e->target(), K)) {
            return true;
          }
        }
        return false;
      }

     private:
      std::mutex                _mutex;
      std::vector<PairTablePtr> _entries;
    };

    inline PairTableCache& pair_table_cache() {
      static PairTableCache cache;
      return cache;
    }
  }  // namespace detail

  inline PairTablePtr PairTable::get(GroupPtr const& G, GroupPtr const& K) {
    return detail::pair_table_cache().get(G, K);
  }

  inline std::vector<PairClass> const& enumerate_pair_classes(GroupPtr const& G,
                                                              GroupPtr const& K) {
    return PairTable::get(G, K)->classes();
  }

  // Δ(H,phi) = {(phi(h), h)} <= K x G, with K x G encoded as in direct_product.
  inline Subgroup graph_subgroup(GKPair const& pair, GroupPtr const& KxG) {
    auto const& G = *pair.source().parent();
    if (KxG->order() != pair.target()->order() * G.order()) {
      throw Error(ErrorKind::ambient_mismatch, "product group does not match the pair");
    }
    std::vector<int> elts;
    elts.reserve(pair.source().size());
    for (std::size_t t = 0; t < pair.images().size(); ++t) {
      elts.push_back(pair.images()[t] * G.order() + pair.source().elements()[t]);
    }
    return Subgroup(KxG, std::move(elts));
  }

  // Exhaustive (g, k) scan.
  inline bool pairs_conjugate(GKPair const& a, GKPair const& b) {
    auto const& G = *a.source().parent();
    auto const& K = *a.target();
    if (!same_group(a.source().parent(), b.source().parent())
        || !same_group(a.target(), b.target())) {
      throw Error(ErrorKind::ambient_mismatch, "pairs live in different ambients");
    }
    if (a.source().size() != b.source().size()) {
      return false;
    }
    for (int g = 0; g < G.order(); ++g) {
      bool maps_onto = true;
      for (int h : a.source().elements()) {
        if (!b.source().contains(G.conj(g, h))) {
          maps_onto = false;
          break;
        }
      }
      if (!maps_onto) {
        continue;
      }
      for (int k = 0; k < K.order(); ++k) {
        bool ok = true;
        for (int h : a.source().elements()) {
          if (b(G.conj(g, h)) != K.conj(k, a(h))) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return true;
        }
      }
    }
    return false;
  }

  // (Q,psi) ≼ (P,phi): some g in `conjugators` and k in K with ᵍQ <= P and
  // phi o c_g = c_k o psi on Q. Both pairs must have their subgroups inside
  // `conjugators` (see lift_pair for pairs over a subgroup).
  inline bool is_subconjugate(GKPair const& q, GKPair const& p, GroupPtr const& conjugators) {
    if (!same_group(q.source().parent(), conjugators)
        || !same_group(p.source().parent(), conjugators)) {
      throw Error(ErrorKind::ambient_mismatch,
                  "subconjugacy needs both subgroups inside the conjugating group");
    }
    if (!same_group(q.target(), p.target())) {
      throw Error(ErrorKind::ambient_mismatch, "pairs have different targets");
    }
    auto const& G = *conjugators;
    auto const& K = *q.target();
    if (p.source().size() % q.source().size() != 0) {
      return false;
    }
    for (int g = 0; g < G.order(); ++g) {
      bool inside = true;
      for (int x : q.source().elements()) {
        if (!p.source().contains(G.conj(g, x))) {
          inside = false;
          break;
        }
      }
      if (!inside) {
        continue;
      }
      for (int k = 0; k < K.order(); ++k) {
        bool ok = true;
        for (int x : q.source().elements()) {
          if (p(G.conj(g, x)) != K.conj(k, q(x))) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return true;
        }
      }
    }
    return false;
  }

  // Regards a pair over the subgroup group of `e` as a pair over e.ambient.
  inline GKPair lift_pair(GKPair const& pair, Embedding const& e) {
    std::vector<int> elts;
    elts.reserve(pair.source().size());
    for (int h : pair.source().elements()) {
      elts.push_back(e.to_ambient[h]);
    }
    // to_ambient is increasing, so the image order is unchanged
    return GKPair(Subgroup(e.ambient, std::move(elts)), pair.target(), pair.images());
  }

  // I: the (G,K)-conjugacy classes of (S,K)-pairs, ordered by subconjugacy
  // with conjugators from G.
  struct SubconjugacyPoset {
    Embedding                      sylow;   // S inside G
    PairTablePtr                   table;   // C(S,K)
    std::vector<std::vector<int>>  nodes;   // classes of C(S,K) in each node
    std::vector<int>               node_of; // class id -> node
    // below[i][j]: node i is subconjugate to node j
    std::vector<std::vector<char>> below;

    std::size_t size() const noexcept {
      return nodes.size();
    }
    // canonical representative class of a node
    int representative(std::size_t node) const {
      return nodes.at(node).front();
    }
    bool is_preorder_closed() const {
      std::size_t const n = nodes.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (!below[i][i]) {
          return false;
        }
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            if (below[i][j] && below[j][k] && !below[i][k]) {
              return false;
            }
          }
        }
      }
      return true;
    }
  };

  // Subconjugacy between classes of C(S,K), with conjugators from the
  // ambient group of `e`. Entry [a][b] is class a ≼ class b.
  inline std::vector<std::vector<char>> subconjugacy_matrix(PairTable const& table,
                                                            Embedding const& e) {
    std::size_t const   n = table.size();
    std::vector<GKPair> lifted;
    lifted.reserve(n);
    for (auto const& c : table.classes()) {
      lifted.push_back(lift_pair(c.canonical, e));
    }
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        rel[a][b] = is_subconjugate(lifted[a], lifted[b], e.ambient) ? 1 : 0;
      }
    }
    return rel;
  }

  // Nodes are listed by decreasing |P|, then by representative class id. The
  // first node has P = S, and a node strictly subconjugate to another always
  // comes after it.
  inline SubconjugacyPoset gk_classes_of_spairs(GroupPtr const& G,
                                                Subgroup const& S,
                                                GroupPtr const& K) {
    SubconjugacyPoset poset;
    poset.sylow = subgroup_as_group(S, "S(" + G->label() + ")");
    poset.table = PairTable::get(poset.sylow.group, K);
    auto const&       table = *poset.table;
    auto const        rel   = subconjugacy_matrix(table, poset.sylow);
    std::size_t const n     = table.size();
    std::vector<int>  node(n, -1);
    std::vector<std::vector<int>> groups;
    for (std::size_t a = 0; a < n; ++a) {
      if (node[a] >= 0) {
        continue;
      }
      std::vector<int> members;
      for (std::size_t b = a; b < n; ++b) {
        if (rel[a][b] && rel[b][a]) {
          node[b] = static_cast<int>(groups.size());
          members.push_back(static_cast<int>(b));
        }
      }
      groups.push_back(std::move(members));
    }
    std::vector<std::size_t> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      int const sx = table[groups[x].front()].canonical.source().size();
      int const sy = table[groups[y].front()].canonical.source().size();
      return sx != sy ? sx > sy : groups[x].front() < groups[y].front();
    });
    poset.node_of.assign(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      poset.nodes.push_back(groups[order[i]]);
      for (int c : poset.nodes.back()) {
        poset.node_of[c] = static_cast<int>(i);
      }
    }
    std::size_t const m = poset.nodes.size();
    poset.below.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        poset.below[i][j] = rel[poset.representative(i)][poset.representative(j)];
      }
    }
    return poset;
  }

}  // namespace burnside

#endif  // BURNSIDE_PAIRS_HPP_
