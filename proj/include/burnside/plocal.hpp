#ifndef BURNSIDE_PLOCAL_HPP_
#define BURNSIDE_PLOCAL_HPP_

// p-local structure: the p-isotropy submodule, induction Φ and restriction Γ
// along a Sylow subgroup, the subconjugacy filtration, the ring R, the
// idempotent 1_p and the projection π_p.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/element.hpp"
#include "burnside/error.hpp"
#include "burnside/group.hpp"
#include "burnside/linalg.hpp"
#include "burnside/pairs.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

  inline std::vector<PairClass> p_isotropy_basis(GroupPtr const& G, GroupPtr const& K, int p) {
    std::vector<PairClass> out;
    for (auto const& c : enumerate_pair_classes(G, K)) {
      if (is_p_group(c.canonical.source(), p)) {
        out.push_back(c);
      }
    }
    return out;
  }

  inline bool in_p_isotropy(BurnsideElement const& X, int p) {
    for (int c : X.support()) {
      if (!is_p_group((*X.table())[c].canonical.source(), p)) {
        return false;
      }
    }
    return true;
  }

  // Sylow p-subgroup of G as a standalone group.
  inline Embedding sylow_embedding(GroupPtr const& G, int p) {
    return subgroup_as_group(sylow_subgroup(G, p), "S" + std::to_string(p) + "(" + G->label() + ")");
  }

  // [S, ι]_S^G in A(S,G).
  inline BurnsideElement inclusion_element(Embedding const& e) {
    return BurnsideElement::of_pair(Homomorphism(whole_group(e.group), e.ambient, e.to_ambient));
  }

  // [S, id]_G^S in A(G,S).
  inline BurnsideElement restriction_element(Embedding const& e) {
    Subgroup         S = e.image();
    std::vector<int> images;
    for (int g : S.elements()) {
      images.push_back(e.from_ambient[g]);
    }
    return BurnsideElement::of_pair(Homomorphism(S, e.group, std::move(images)));
  }

  // Φ: A(S,K) -> A(G,K), regarding each S-pair as a G-pair.
  inline BurnsideElement phi_induct(BurnsideElement const& X, Embedding const& e) {
    if (!same_group(X.source(), e.group)) {
      throw Error(ErrorKind::ambient_mismatch, "element does not live over the subgroup");
    }
    auto            table = PairTable::get(e.ambient, X.target());
    BurnsideElement out(table, X.prime());
    for (auto const& [c, v] : X.coefficients()) {
      out.add(table->classify(lift_pair((*X.table())[c].canonical, e)), v);
    }
    return out;
  }

  // Γ: A(G,K) -> A(S,K), X ↦ X ∘ [S,ι]_S^G.
  inline BurnsideElement gamma_restrict(BurnsideElement const& X, Embedding const& e) {
    return compose(X, inclusion_element(e));
  }

  // [G]_S^S = [S,id]_G^S ∘ [S,ι]_S^G in A(S,S).
  inline BurnsideElement g_biset(Embedding const& e) {
    return compose(restriction_element(e), inclusion_element(e));
  }

  struct FiltrationModule {
    int              anchor;  // class id in C(S,K)
    bool             strict;
    std::vector<int> members;  // class ids in C(S,K), ascending

    bool contains(int class_id) const {
      return std::binary_search(members.begin(), members.end(), class_id);
    }
    bool contains_support(BurnsideElement const& X) const {
      for (int c : X.support()) {
        if (!contains(c)) {
          return false;
        }
      }
      return true;
    }
  };

  // M_{≼(P,φ)} (or M_{≺(P,φ)} when strict) inside A(S,K), with subconjugacy
  // taken over G.
  inline FiltrationModule filtration_module(SubconjugacyPoset const& poset,
                                            int                      anchor,
                                            bool                     strict) {
    FiltrationModule out{anchor, strict, {}};
    int const        a = poset.node_of.at(anchor);
    for (std::size_t c = 0; c < poset.node_of.size(); ++c) {
      int const q = poset.node_of[c];
      if (poset.below[q][a] && !(strict && poset.below[a][q])) {
        out.members.push_back(static_cast<int>(c));
      }
    }
    return out;
  }

  // Classes [P,φ] of A(S,S) with φ = c_g on P for some g in G with gPg^-1 <= S.
  inline std::vector<int> ring_R_basis(Embedding const& e) {
    auto const&      G     = *e.ambient;
    auto const       table = PairTable::get(e.group, e.group);
    std::vector<int> out;
    for (auto const& c : table->classes()) {
      auto const& P     = c.canonical.source();
      bool        found = false;
      for (int g = 0; g < G.order() && !found; ++g) {
        bool ok = true;
        for (std::size_t t = 0; t < P.elements().size() && ok; ++t) {
          int const y = e.from_ambient[G.conj(g, e.to_ambient[P.elements()[t]])];
          ok          = y >= 0 && y == c.canonical.images()[t];
        }
        found = ok;
      }
      if (found) {
        out.push_back(c.class_id);
      }
    }
    return out;
  }

  // {Γ∘Φ([P_i,φ_i]) : i in I}, one per node of the subconjugacy poset.
  inline std::vector<BurnsideElement> gag_basis(SubconjugacyPoset const& poset) {
    std::vector<BurnsideElement> out;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      auto x = BurnsideElement::basis(poset.table, poset.representative(i));
      out.push_back(gamma_restrict(phi_induct(x, poset.sylow), poset.sylow));
    }
    RationalMatrix m;
    for (auto const& x : out) {
      std::vector<Rational> row(poset.table->size(), 0);
      for (auto const& [c, v] : x.coefficients()) {
        row[c] = v;
      }
      m.push_back(std::move(row));
    }
    if (rank(m) != out.size()) {
      throw Error(ErrorKind::dependent_basis, "Γ∘Φ images of the representatives are dependent");
    }
    return out;
  }

  struct IdempotentReport {
    int                   prime;
    std::vector<Subgroup> representatives;  // P_1 = S, ..., P_n
    RationalMatrix        matrix;           // |N_G(P_i,P_j)| / |P_j|
    std::vector<Rational> coefficients;     // a_j
    BurnsideElement       element;          // Σ a_j [P_j, ι]
  };

  // Conjugacy class representatives of p-subgroups, by decreasing order and
  // then by element list. Each representative is the least member of its class.
  inline std::vector<Subgroup> p_subgroup_representatives(GroupPtr const& G, int p) {
    auto const&           subs = subgroups(G);
    std::vector<Subgroup> reps;
    for (auto const& cls : subgroup_classes(G)) {
      Subgroup const& H = subs[cls.front()];
      if (is_p_group(H, p)) {
        reps.push_back(H);
      }
    }
    std::sort(reps.begin(), reps.end(), [](Subgroup const& a, Subgroup const& b) {
      return a.size() != b.size() ? a.size() > b.size() : a.elements() < b.elements();
    });
    return reps;
  }

  inline IdempotentReport one_p(GroupPtr const& G, int p) {
    if (!is_prime(p)) {
      throw Error(ErrorKind::invalid_input, std::to_string(p) + " is not prime");
    }
    auto const        reps = p_subgroup_representatives(G, p);
    std::size_t const n    = reps.size();
    RationalMatrix    M(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        M[i][j] = Rational(static_cast<int>(transporter(G, reps[i], reps[j]).size()),
                           reps[j].size());
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (M[i][i] == 0) {
        throw Error(ErrorKind::singular_diagonal, "zero diagonal entry " + std::to_string(i));
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (M[i][j] != 0) {
          throw Error(ErrorKind::internal, "transporter matrix is not lower triangular");
        }
      }
    }
    auto const a     = forward_substitute(M, std::vector<Rational>(n, 1));
    auto const table = PairTable::get(G, G);
    BurnsideElement e(table, p);
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_p_integral(a[j], p)) {
        throw Error(ErrorKind::p_adic_integrality_violation,
                    "coefficient " + to_string(a[j]) + " is not " + std::to_string(p) + "-integral");
      }
      e.add(table->classify(inclusion(reps[j])), a[j]);
    }
    return {p, reps, std::move(M), a, std::move(e)};
  }

  // π_p(X) = X ∘ 1_p.
  inline BurnsideElement pi_p(BurnsideElement const& X, int p) {
    auto out = compose(X, one_p(X.source(), p).element);
    if (!in_p_isotropy(out, p)) {
      throw Error(ErrorKind::internal, "projection left the p-isotropy submodule");
    }
    return out;
  }

  struct SegalRank {
    int              prime;
    int              rank;
    std::vector<int> classes;  // [P,φ] with P a p-group and φ nontrivial
  };

  inline SegalRank segal_rank(GroupPtr const& G, GroupPtr const& K, int p) {
    SegalRank out{p, 0, {}};
    for (auto const& c : p_isotropy_basis(G, K, p)) {
      if (!c.canonical.is_trivial()) {
        out.classes.push_back(c.class_id);
      }
    }
    out.rank = static_cast<int>(out.classes.size());
    return out;
  }

}  // namespace burnside

#endif  // BURNSIDE_PLOCAL_HPP_
