#ifndef BURNSIDE_MARKS_HPP_
#define BURNSIDE_MARKS_HPP_

// Mark homomorphisms χ_[H,ψ] on A(G,K). With Δ = Δ(H,ψ) and Δ' = Δ(H',ψ')
// in K x G:
//
//   raw:    χ([H',ψ']) = |N(Δ,Δ')/Δ'|        (Δ-fixed points of (KxG)/Δ')
//   with W: χ([H',ψ']) = |N(Δ)\N(Δ,Δ')/Δ'|   (W(Δ)-orbits of those points)
//
// and the kernel of α: elements whose marks vanish at every class [H,ψ]
// with |H| a prime power.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/element.hpp"
#include "burnside/error.hpp"
#include "burnside/group.hpp"
#include "burnside/gset.hpp"
#include "burnside/linalg.hpp"
#include "burnside/pairs.hpp"

namespace burnside {

  enum class MarkVariant { with_w, raw };

  inline std::string to_string(MarkVariant v) {
    return v == MarkVariant::raw ? "raw" : "withW";
  }

  inline MarkVariant parse_variant(std::string const& s) {
    if (s == "raw") {
      return MarkVariant::raw;
    }
    if (s == "withW" || s == "with-W" || s == "with_w") {
      return MarkVariant::with_w;
    }
    throw Error(ErrorKind::invalid_input, "unknown mark variant: " + s);
  }

  namespace detail {
    // Number of orbits of N on the cosets {t Δ' : t in T}.
    inline int coset_orbits(FiniteGroup const&      KG,
                            std::vector<int> const& T,
                            Subgroup const&         Dp,
                            Subgroup const&         N) {
      auto key = [&](int g) {
        int m = KG.order();
        for (int d : Dp.elements()) {
          m = std::min(m, KG.mul(g, d));
        }
        return m;
      };
      std::map<int, int> id;
      for (int t : T) {
        id.emplace(key(t), -1);
      }
      int orbits = 0;
      for (auto& [k, v] : id) {
        if (v >= 0) {
          continue;
        }
        for (int n : N.elements()) {
          id[key(KG.mul(n, k))] = orbits;
        }
        ++orbits;
      }
      return orbits;
    }

    inline bool is_prime_power_order(int n) {
      return n == 1 || prime_power_base(n).has_value();
    }
  }  // namespace detail

  // Marks of all rows on all basis columns of A(G,K), filled on first use.
  class MarksTable {
   public:
    MarksTable(PairTablePtr table, MarkVariant variant)
        : _table(std::move(table)),
          _variant(variant),
          _KxG(product_group(_table->target(), _table->source())),
          _values(_table->size() * _table->size(), -1) {}

    static std::shared_ptr<MarksTable> get(PairTablePtr const& table, MarkVariant variant);

    PairTablePtr const& table() const noexcept {
      return _table;
    }
    MarkVariant variant() const noexcept {
      return _variant;
    }

    int operator()(int row, int col) {
      std::size_t const i = static_cast<std::size_t>(row) * _table->size() + col;
      std::lock_guard   lock(_mutex);
      if (_values[i] < 0) {
        _values[i] = compute(row, col);
      }
      return _values[i];
    }

   private:
    int compute(int row, int col) const {
      Subgroup const D  = graph_subgroup((*_table)[row].canonical, _KxG);
      Subgroup const Dp = graph_subgroup((*_table)[col].canonical, _KxG);
      if (Dp.size() % D.size() != 0) {
        return 0;
      }
      auto const T = transporter(_KxG, D, Dp);
      if (_variant == MarkVariant::raw || T.empty()) {
        return static_cast<int>(T.size()) / Dp.size();
      }
      return detail::coset_orbits(*_KxG, T, Dp, normalizer(_KxG, D));
    }

    PairTablePtr     _table;
    MarkVariant      _variant;
    GroupPtr         _KxG;
    std::vector<int> _values;
    std::mutex       _mutex;
  };

  namespace detail {
    class MarksCache {
     public:
      std::shared_ptr<MarksTable> get(PairTablePtr const& table, MarkVariant variant) {
        std::lock_guard lock(_mutex);
        auto&           slot = _tables[{table.get(), variant}];
        if (!slot) {
          slot = std::make_shared<MarksTable>(table, variant);
        }
        return slot;
      }

     private:
      std::mutex                                                                 _mutex;
      std::map<std::pair<PairTable const*, MarkVariant>, std::shared_ptr<MarksTable>> _tables;
    };

    inline MarksCache& marks_cache() {
      static MarksCache cache;
      return cache;
    }
  }  // namespace detail

  inline std::shared_ptr<MarksTable> MarksTable::get(PairTablePtr const& table,
                                                     MarkVariant         variant) {
    return detail::marks_cache().get(PairTable::get(table->source(), table->target()), variant);
  }

  // χ at the class `row` of C(G,K), extended linearly.
  inline Rational mark(int row, BurnsideElement const& X, MarkVariant variant = MarkVariant::raw) {
    auto     marks = MarksTable::get(X.table(), variant);
    Rational out   = 0;
    for (auto const& [c, v] : X.coefficients()) {
      out += v * (*marks)(row, c);
    }
    return out;
  }

  inline Rational mark(PairClass const& row,
                       BurnsideElement const& X,
                       MarkVariant variant = MarkVariant::raw) {
    if (!same_group(row.canonical.source().parent(), X.source())
        || !same_group(row.canonical.target(), X.target())) {
      throw Error(ErrorKind::class_mismatch, "mark class belongs to a different module");
    }
    return mark(row.class_id, X, variant);
  }

  // χ by counting Δ-fixed points of the literal bundle.
  inline Rational mark_oracle(GKPair const&          row,
                              BurnsideElement const& X,
                              MarkVariant            variant = MarkVariant::raw,
                              std::size_t            cap     = Limits::default_set_cap) {
    auto const KxG   = product_group(X.target(), X.source());
    GSet const S     = realize(X, KxG, cap);
    Subgroup   D     = graph_subgroup(row, KxG);
    auto const fixed = S.fixed_points(D);
    if (variant == MarkVariant::raw) {
      return static_cast<int>(fixed.size());
    }
    Subgroup const    N = normalizer(KxG, D);
    std::vector<char> done(S.size(), 0);
    int               orbits = 0;
    for (int x : fixed) {
      if (done[x]) {
        continue;
      }
      ++orbits;
      for (int n : N.elements()) {
        done[S.act(n, x)] = 1;
      }
    }
    return orbits;
  }

  struct MarksVector {
    std::vector<int>      index;  // class ids
    std::vector<Rational> values;
    MarkVariant           variant;
  };

  // Marks at every class [P,ψ] with P a p-group.
  inline MarksVector chi_p(BurnsideElement const& X,
                           int                    p,
                           MarkVariant            variant = MarkVariant::raw) {
    MarksVector out{{}, {}, variant};
    for (auto const& c : X.table()->classes()) {
      if (is_p_group(c.canonical.source(), p)) {
        out.index.push_back(c.class_id);
        out.values.push_back(mark(c.class_id, X, variant));
      }
    }
    return out;
  }

  // Rows: classes at `rows`; columns: the full basis.
  inline IntegerMatrix marks_matrix(PairTablePtr const&     table,
                                    std::vector<int> const& rows,
                                    MarkVariant             variant) {
    auto          marks = MarksTable::get(table, variant);
    IntegerMatrix out;
    for (int r : rows) {
      std::vector<Integer> row;
      for (std::size_t c = 0; c < table->size(); ++c) {
        row.push_back((*marks)(r, static_cast<int>(c)));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  inline std::vector<int> prime_power_classes(PairTable const& table) {
    std::vector<int> out;
    for (auto const& c : table.classes()) {
      if (detail::is_prime_power_order(c.canonical.source().size())) {
        out.push_back(c.class_id);
      }
    }
    return out;
  }

  struct KernelReport {
    PairTablePtr                 table;
    MarkVariant                  variant;  // variant the kernel basis is taken from
    std::vector<int>             prime_power_classes;
    IntegerMatrix                raw_matrix;
    IntegerMatrix                with_w_matrix;
    IntegerMatrix                raw_kernel;
    IntegerMatrix                with_w_kernel;
    std::vector<BurnsideElement> kernel_basis;
    int                          rank;  // rank of the kernel
    bool                         variants_agree;

    IntegerMatrix const& marks_matrix() const {
      return variant == MarkVariant::raw ? raw_matrix : with_w_matrix;
    }
  };

  inline KernelReport kernel_of_alpha(GroupPtr const& G,
                                      GroupPtr const& K,
                                      MarkVariant     variant = MarkVariant::raw) {
    KernelReport r;
    r.table               = PairTable::get(G, K);
    r.variant             = variant;
    r.prime_power_classes = prime_power_classes(*r.table);
    std::size_t const n   = r.table->size();
    r.raw_matrix          = marks_matrix(r.table, r.prime_power_classes, MarkVariant::raw);
    r.with_w_matrix       = marks_matrix(r.table, r.prime_power_classes, MarkVariant::with_w);
    r.raw_kernel          = integer_kernel(r.raw_matrix, n);
    r.with_w_kernel       = integer_kernel(r.with_w_matrix, n);
    r.variants_agree      = r.raw_kernel == r.with_w_kernel;
    auto const& kernel    = variant == MarkVariant::raw ? r.raw_kernel : r.with_w_kernel;
    for (auto const& v : kernel) {
      BurnsideElement x(r.table);
      for (std::size_t c = 0; c < n; ++c) {
        x.add(static_cast<int>(c), Rational(v[c]));
      }
      r.kernel_basis.push_back(std::move(x));
    }
    r.rank = static_cast<int>(kernel.size());
    return r;
  }

  // True iff every prime-power mark of X vanishes.
  inline bool is_in_kernel(BurnsideElement const& X, MarkVariant variant = MarkVariant::raw) {
    if (!X.has_integer_coefficients()) {
      throw Error(ErrorKind::invalid_input, "kernel membership needs integer coefficients");
    }
    for (int row : prime_power_classes(*X.table())) {
      if (mark(row, X, variant) != 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace burnside

#endif  // BURNSIDE_MARKS_HPP_
