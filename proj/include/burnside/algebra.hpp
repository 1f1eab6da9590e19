#ifndef BURNSIDE_ALGEBRA_HPP_
#define BURNSIDE_ALGEBRA_HPP_

// The composition pairing A(G2,K) x A(G1,G2) -> A(G1,K) by the double coset
// formula
//
//   [A,phi] o [B,psi] = sum over x in A\G2/psi(B) of
//                       [psi^-1(A^x ∩ psi(B)), phi o c_x o psi]
//
// with A^x = x^-1 A x and c_x(y) = x y x^-1, together with a set-theoretic
// oracle, augmentations, the A(G)-action and the splitting A_p = Z ⊕ I_p.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "burnside/catalog.hpp"
#include "burnside/element.hpp"
#include "burnside/error.hpp"
#include "burnside/group.hpp"
#include "burnside/gset.hpp"
#include "burnside/pairs.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

  inline std::vector<PairClass> const& basis(GroupPtr const& G, GroupPtr const& K) {
    return enumerate_pair_classes(G, K);
  }

  inline Rational coeff(BurnsideElement const& X, PairClass const& c) {
    return X.coeff(c);
  }

  // Sparse class-id -> multiplicity.
  using ClassCounts = std::map<int, int>;

  // Composition of two basis elements. `outer` is C(G2,K), `inner` is
  // C(G1,G2) and `result` is C(G1,K).
  inline ClassCounts compose_basis(PairTable const& outer,
                                   int              a,
                                   PairTable const& inner,
                                   int              b,
                                   PairTable const& result) {
    auto const& G2    = outer.source();
    auto const& A     = outer[a].canonical;
    auto const& B     = inner[b].canonical;
    Subgroup    image = make_subgroup(G2, B.image_set());
    ClassCounts out;
    for (auto const& dc : double_cosets(G2, A.source(), image)) {
      int const                        x = dc.representative;
      std::vector<std::pair<int, int>> graph;
      for (std::size_t t = 0; t < B.images().size(); ++t) {
        int const z = G2->conj(x, B.images()[t]);
        if (A.source().contains(z)) {
          graph.emplace_back(B.source().elements()[t], A(z));
        }
      }
      ++out[result.classify(std::move(graph))];
    }
    return out;
  }

  // All basis products for a pair of modules, filled on first use.
  class CompositionTable {
   public:
    CompositionTable(PairTablePtr outer, PairTablePtr inner)
        : _outer(std::move(outer)),
          _inner(std::move(inner)),
          _result(PairTable::get(_inner->source(), _outer->target())),
          _entries(_outer->size() * _inner->size()),
          _done(_entries.size(), 0) {}

    static std::shared_ptr<CompositionTable> get(PairTablePtr const& outer,
                                                 PairTablePtr const& inner);

    PairTablePtr const& result() const noexcept {
      return _result;
    }

    ClassCounts const& operator()(int a, int b) {
      std::size_t const i = static_cast<std::size_t>(a) * _inner->size() + b;
      std::lock_guard   lock(_mutex);
      if (!_done[i]) {
        _entries[i] = compose_basis(*_outer, a, *_inner, b, *_result);
        _done[i]    = 1;
      }
      return _entries[i];
    }

   private:
    PairTablePtr             _outer;
    PairTablePtr             _inner;
    PairTablePtr             _result;
    std::vector<ClassCounts> _entries;
    std::vector<char>        _done;
    std::mutex               _mutex;
  };

  namespace detail {
    class CompositionCache {
     public:
      std::shared_ptr<CompositionTable> get(PairTablePtr const& outer,
                                            PairTablePtr const& inner) {
        std::lock_guard lock(_mutex);
        auto&           slot = _tables[{outer.get(), inner.get()}];
        if (!slot) {
          slot = std::make_shared<CompositionTable>(outer, inner);
        }
        return slot;
      }

     private:
      std::mutex _mutex;
      std::map<std::pair<PairTable const*, PairTable const*>, std::shared_ptr<CompositionTable>>
          _tables;
    };

    inline CompositionCache& composition_cache() {
      static CompositionCache cache;
      return cache;
    }
  }  // namespace detail

  inline std::shared_ptr<CompositionTable> CompositionTable::get(PairTablePtr const& outer,
                                                                 PairTablePtr const& inner) {
    return detail::composition_cache().get(outer, inner);
  }

  // X o Y for X in A(G2,K) and Y in A(G1,G2).
  inline BurnsideElement compose(BurnsideElement const& X, BurnsideElement const& Y) {
    if (!same_group(X.source(), Y.target())) {
      throw Error(ErrorKind::ambient_mismatch,
                  "cannot compose: source " + X.source()->label() + " of the left factor is not"
                      + " the target " + Y.target()->label() + " of the right factor");
    }
    // normalize to the cached tables so class ids agree
    auto const outer = PairTable::get(X.source(), X.target());
    auto const inner = PairTable::get(Y.source(), Y.target());
    auto       table = CompositionTable::get(outer, inner);
    BurnsideElement out(table->result(), BurnsideElement::merge_prime(X.prime(), Y.prime()));
    for (auto const& [a, ca] : X.coefficients()) {
      for (auto const& [b, cb] : Y.coefficients()) {
        for (auto const& [c, n] : (*table)(a, b)) {
          out.add(c, ca * cb * n);
        }
      }
    }
    out.validate();
    return out;
  }

  // The identity [G, id_G] of A(G,G).
  inline BurnsideElement identity_element(GroupPtr const& G) {
    return BurnsideElement::of_pair(inclusion(whole_group(G)));
  }

  namespace detail {
    class ProductCache {
     public:
      GroupPtr get(GroupPtr const& A, GroupPtr const& B) {
        std::lock_guard lock(_mutex);
        for (auto const& [a, b, AxB] : _entries) {
          if (same_group(a, A) && same_group(b, B)) {
            return AxB;
          }
        }
        auto AxB = direct_product(*A, *B, "");
        _entries.emplace_back(A, B, AxB);
        return AxB;
      }

     private:
      std::mutex                                           _mutex;
      std::vector<std::tuple<GroupPtr, GroupPtr, GroupPtr>> _entries;
    };

    inline ProductCache& product_cache() {
      static ProductCache cache;
      return cache;
    }
  }  // namespace detail

  inline GroupPtr product_group(GroupPtr const& A, GroupPtr const& B) {
    return detail::product_cache().get(A, B);
  }

  // Composition computed as G2\(X x Y) on literal finite sets.
  inline BurnsideElement compose_oracle(BurnsideElement const& X,
                                        BurnsideElement const& Y,
                                        std::size_t            cap = Limits::default_set_cap) {
    if (!same_group(X.source(), Y.target())) {
      throw Error(ErrorKind::ambient_mismatch, "cannot compose: modules do not match");
    }
    if (!X.is_effective() || !Y.is_effective()) {
      throw Error(ErrorKind::not_effective, "oracle needs honest bundles");
    }
    auto const& G2 = X.source();
    auto const& K  = X.target();
    auto const& G1 = Y.source();
    auto const  KxG2  = product_group(K, G2);
    auto const  G2xG1 = product_group(G2, G1);
    GSet const  SX    = realize(X, KxG2, cap);
    GSet const  SY    = realize(Y, G2xG1, cap);
    std::size_t const total = static_cast<std::size_t>(SX.size()) * SY.size();
    if (total > cap) {
      throw Error(ErrorKind::size_cap_exceeded,
                  "product set has " + std::to_string(total) + " points");
    }
    auto const result = PairTable::get(G1, K);
    BurnsideElement out(result, BurnsideElement::merge_prime(X.prime(), Y.prime()));
    if (total == 0) {
      return out;
    }
    int const ny   = SY.size();
    auto      pt   = [&](int x, int y) { return x * ny + y; };
    auto      kx   = [&](int k, int g2) { return k * G2->order() + g2; };
    auto      gy   = [&](int g2, int g1) { return g2 * G1->order() + g1; };
    auto const g2s = generators_of(whole_group(G2));

    // G2 acts diagonally: g.(x,y) = ((1,g)x, (g,1)y)
    std::vector<int> quot(total, -1);
    std::vector<int> quot_rep;
    for (std::size_t s = 0; s < total; ++s) {
      if (quot[s] >= 0) {
        continue;
      }
      int const        id = static_cast<int>(quot_rep.size());
      std::vector<int> stack{static_cast<int>(s)};
      quot[s] = id;
      quot_rep.push_back(static_cast<int>(s));
      while (!stack.empty()) {
        int const p = stack.back();
        stack.pop_back();
        int const x = p / ny, y = p % ny;
        for (int g : g2s) {
          int const q = pt(SX.act(kx(K->identity(), g), x), SY.act(gy(g, G1->identity()), y));
          if (quot[q] < 0) {
            quot[q] = id;
            stack.push_back(q);
          }
        }
      }
    }

    // K x G1 acts on the quotient by (k,g1).(x,y) = ((k,1)x, (1,g1)y)
    auto act = [&](int k, int g1, int q) {
      int const p = quot_rep[q];
      int const x = p / ny, y = p % ny;
      return quot[pt(SX.act(kx(k, G2->identity()), x), SY.act(gy(G2->identity(), g1), y))];
    };
    std::vector<char> seen(quot_rep.size(), 0);
    for (std::size_t q = 0; q < quot_rep.size(); ++q) {
      if (seen[q]) {
        continue;
      }
      std::vector<std::pair<int, int>> graph;
      for (int k = 0; k < K->order(); ++k) {
        for (int g1 = 0; g1 < G1->order(); ++g1) {
          int const r = act(k, g1, static_cast<int>(q));
          seen[r]     = 1;
          if (r == static_cast<int>(q)) {
            graph.emplace_back(g1, k);
          }
        }
      }
      std::vector<int> firsts;
      for (auto const& [g1, k] : graph) {
        firsts.push_back(g1);
      }
      if (std::adjacent_find(firsts.begin(), firsts.end()) != firsts.end()) {
        throw Error(ErrorKind::internal, "composite is not K-free");
      }
      out.add(result->classify(std::move(graph)), 1);
    }
    return out;
  }

  // ε: [H,phi] -> |G|/|H|, extended linearly.
  inline Rational orbit_augmentation(BurnsideElement const& X) {
    Rational out = 0;
    for (auto const& [c, v] : X.coefficients()) {
      out += v * Rational(X.source()->order() / (*X.table())[c].canonical.source().size());
    }
    return out;
  }

  // The A(G)-action a.X on basis products, computed on G/H x (K x G)/Δ.
  inline BurnsideElement burnside_ring_action(BurnsideElement const& a,
                                              BurnsideElement const& X,
                                              std::size_t cap = Limits::default_set_cap) {
    if (!same_group(a.source(), X.source()) || a.target()->order() != 1) {
      throw Error(ErrorKind::ambient_mismatch, "action needs a in A(G,1) and X in A(G,K)");
    }
    auto const& G   = X.source();
    auto const& K   = X.target();
    auto const  KxG = product_group(K, G);
    BurnsideElement out(X.table(), BurnsideElement::merge_prime(a.prime(), X.prime()));
    for (auto const& [i, ci] : a.coefficients()) {
      GSet const U = GSet::coset_space((*a.table())[i].canonical.source());
      for (auto const& [j, cj] : X.coefficients()) {
        GSet const        V     = GSet::coset_space(graph_subgroup((*X.table())[j].canonical, KxG));
        std::size_t const total = static_cast<std::size_t>(U.size()) * V.size();
        if (total > cap) {
          throw Error(ErrorKind::size_cap_exceeded,
                      "product set has " + std::to_string(total) + " points");
        }
        // (k,g).(u,v) = (g u, (k,g) v)
        std::vector<int> action(static_cast<std::size_t>(KxG->order()) * total);
        for (int k = 0; k < K->order(); ++k) {
          for (int g = 0; g < G->order(); ++g) {
            int const kg = k * G->order() + g;
            for (int u = 0; u < U.size(); ++u) {
              for (int v = 0; v < V.size(); ++v) {
                action[static_cast<std::size_t>(kg) * total + u * V.size() + v]
                    = U.act(g, u) * V.size() + V.act(kg, v);
              }
            }
          }
        }
        GSet const       W(KxG, static_cast<int>(total), std::move(action));
        int              count = 0;
        auto const       ids   = W.orbit_ids(&count);
        std::vector<int> rep(count, -1);
        for (int p = 0; p < W.size(); ++p) {
          if (rep[ids[p]] < 0) {
            rep[ids[p]] = p;
          }
        }
        for (int r : rep) {
          std::vector<std::pair<int, int>> graph;
          for (int kg : W.stabilizer(r)) {
            graph.emplace_back(kg % G->order(), kg / G->order());
          }
          out.add(X.table()->classify(std::move(graph)), ci * cj);
        }
      }
    }
    out.validate();
    return out;
  }

  // Basis {[G/H] - |G:H| [G/G] : H proper} of the augmentation ideal I(G).
  inline std::vector<BurnsideElement> augmentation_ideal_basis(GroupPtr const& G) {
    auto const                   table = PairTable::get(G, cyclic_group(1));
    int const                    top   = static_cast<int>(table->size()) - 1;
    std::vector<BurnsideElement> out;
    for (int c = 0; c < top; ++c) {
      BurnsideElement x(table);
      x.add(c, 1);
      x.add(top, -Rational(G->order() / (*table)[c].canonical.source().size()));
      out.push_back(std::move(x));
    }
    return out;
  }

  struct IpSplit {
    Rational        z;  // coefficient of [S,triv]
    BurnsideElement i;  // the part in I_p(G,K)
  };

  // X = z [S,triv] + i with i in the span of [P,phi] - |S|/|P| [S,triv].
  inline IpSplit ip_splitting(BurnsideElement const& X, int p) {
    auto const& G = X.source();
    auto const  S = sylow_subgroup(G, p);
    for (int c : X.support()) {
      if (!is_p_group((*X.table())[c].canonical.source(), p)) {
        throw Error(ErrorKind::not_p_isotropy,
                    "class " + std::to_string(c) + " does not have p-group isotropy");
      }
    }
    int const top = X.table()->classify(
        S.elements(), std::vector<int>(S.size(), X.target()->identity()));
    Rational z = 0;
    for (auto const& [c, v] : X.coefficients()) {
      z += v * Rational(S.size() / (*X.table())[c].canonical.source().size());
    }
    BurnsideElement i = X;
    i.add(top, -z);
    return {z, std::move(i)};
  }

}  // namespace burnside

#endif  // BURNSIDE_ALGEBRA_HPP_
