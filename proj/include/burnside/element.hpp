#ifndef BURNSIDE_ELEMENT_HPP_
#define BURNSIDE_ELEMENT_HPP_

// Elements of A(G,K) as finitely supported coefficient vectors over the basis
// C(G,K). Coefficients are integers, or p-local rationals when the element
// lives in a p-completed module.

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/error.hpp"
#include "burnside/pairs.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

  class BurnsideElement {
   public:
    using Coefficients = std::map<int, Rational>;

    explicit BurnsideElement(PairTablePtr table, std::optional<int> prime = std::nullopt)
        : _table(std::move(table)), _prime(prime) {}

    BurnsideElement(PairTablePtr                                 table,
                    std::initializer_list<std::pair<int, Rational>> terms,
                    std::optional<int>                           prime = std::nullopt)
        : BurnsideElement(std::move(table), prime) {
      for (auto const& [c, v] : terms) {
        add(c, v);
      }
      validate();
    }

    static BurnsideElement basis(PairTablePtr table, int class_id) {
      BurnsideElement x(std::move(table));
      x.add(class_id, 1);
      return x;
    }

    // The basis element of the class containing `pair`.
    static BurnsideElement of_pair(GKPair const& pair) {
      auto table = PairTable::get(pair.source().parent(), pair.target());
      return basis(table, table->classify(pair));
    }

    PairTablePtr const& table() const noexcept {
      return _table;
    }
    GroupPtr const& source() const noexcept {
      return _table->source();
    }
    GroupPtr const& target() const noexcept {
      return _table->target();
    }
    // The prime p when coefficients are taken in Z_(p); empty for Z.
    std::optional<int> const& prime() const noexcept {
      return _prime;
    }
    Coefficients const& coefficients() const noexcept {
      return _coeffs;
    }

    Rational coeff(int class_id) const {
      check_class(class_id);
      auto it = _coeffs.find(class_id);
      return it == _coeffs.end() ? Rational(0) : it->second;
    }

    Rational coeff(PairClass const& c) const {
      if (!same_group(c.canonical.source().parent(), source())
          || !same_group(c.canonical.target(), target())) {
        throw Error(ErrorKind::class_mismatch, "class belongs to a different Burnside module");
      }
      return coeff(c.class_id);
    }

    void add(int class_id, Rational const& value) {
      check_class(class_id);
      if (value == 0) {
        return;
      }
      auto& slot = _coeffs[class_id];
      slot += value;
      if (slot == 0) {
        _coeffs.erase(class_id);
      }
    }

    std::vector<int> support() const {
      std::vector<int> out;
      for (auto const& [c, v] : _coeffs) {
        out.push_back(c);
      }
      return out;
    }

    bool is_zero() const noexcept {
      return _coeffs.empty();
    }

    // Nonnegative integer coefficients: the class of an honest bundle.
    bool is_effective() const {
      for (auto const& [c, v] : _coeffs) {
        if (v < 0 || !is_integer(v)) {
          return false;
        }
      }
      return true;
    }

    bool has_integer_coefficients() const {
      for (auto const& [c, v] : _coeffs) {
        if (!is_integer(v)) {
          return false;
        }
      }
      return true;
    }

    // Throws unless every coefficient lies in the scalar ring.
    void validate() const {
      for (auto const& [c, v] : _coeffs) {
        if (!_prime && !is_integer(v)) {
          throw Error(ErrorKind::invalid_input,
                      "non-integral coefficient " + burnside::to_string(v) + " in an integral element");
        }
        if (_prime && !is_p_integral(v, *_prime)) {
          throw Error(ErrorKind::p_adic_integrality_violation,
                      "coefficient " + burnside::to_string(v) + " is not "
                          + std::to_string(*_prime) + "-integral");
        }
      }
    }

    // The same element regarded in Z_(p) coefficients.
    BurnsideElement localized(int p) const {
      if (_prime && *_prime != p) {
        throw Error(ErrorKind::invalid_input, "element is already local at another prime");
      }
      BurnsideElement out(*this);
      out._prime = p;
      out.validate();
      return out;
    }

    BurnsideElement& operator+=(BurnsideElement const& other) {
      check_same_module(other);
      _prime = merge_prime(_prime, other._prime);
      for (auto const& [c, v] : other._coeffs) {
        add(c, v);
      }
      return *this;
    }

    BurnsideElement& operator-=(BurnsideElement const& other) {
      check_same_module(other);
      _prime = merge_prime(_prime, other._prime);
      for (auto const& [c, v] : other._coeffs) {
        add(c, -v);
      }
      return *this;
    }

    BurnsideElement& operator*=(Rational const& s) {
      if (s == 0) {
        _coeffs.clear();
        return *this;
      }
      for (auto& [c, v] : _coeffs) {
        v *= s;
      }
      validate();
      return *this;
    }

    friend BurnsideElement operator+(BurnsideElement a, BurnsideElement const& b) {
      return a += b;
    }
    friend BurnsideElement operator-(BurnsideElement a, BurnsideElement const& b) {
      return a -= b;
    }
    friend BurnsideElement operator*(Rational const& s, BurnsideElement a) {
      return a *= s;
    }

    // Equal as vectors in the same module; the scalar ring is not compared.
    friend bool operator==(BurnsideElement const& a, BurnsideElement const& b) {
      return same_group(a.source(), b.source()) && same_group(a.target(), b.target())
             && a._coeffs == b._coeffs;
    }

    static std::optional<int> merge_prime(std::optional<int> a, std::optional<int> b) {
      if (a && b && *a != *b) {
        throw Error(ErrorKind::invalid_input, "cannot mix coefficients local at different primes");
      }
      return a ? a : b;
    }

    std::string to_string() const {
      if (_coeffs.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [c, v] : _coeffs) {
        if (!out.empty()) {
          out += " + ";
        }
        out += burnside::to_string(v) + "*[" + std::to_string(c) + "]";
      }
      return out;
    }

   private:
    void check_class(int class_id) const {
      if (class_id < 0 || static_cast<std::size_t>(class_id) >= _table->size()) {
        throw Error(ErrorKind::class_mismatch,
                    "class id " + std::to_string(class_id) + " out of range");
      }
    }

    void check_same_module(BurnsideElement const& other) const {
      if (!same_group(source(), other.source()) || !same_group(target(), other.target())) {
        throw Error(ErrorKind::ambient_mismatch, "elements of different Burnside modules");
      }
    }

    PairTablePtr       _table;
    std::optional<int> _prime;
    Coefficients       _coeffs;
  };

  inline BurnsideElement zero_element(GroupPtr const& G, GroupPtr const& K) {
    return BurnsideElement(PairTable::get(G, K));
  }

  // Ã(G,K): classes with trivial homomorphism are quotiented out. The element
  // is stored by its canonical lift (support on nontrivial classes only).
  class TildeElement {
   public:
    explicit TildeElement(BurnsideElement lift) : _lift(std::move(lift)) {
      for (int c : _lift.support()) {
        if ((*_lift.table())[c].canonical.is_trivial()) {
          throw Error(ErrorKind::invalid_input, "tilde element supported on a trivial class");
        }
      }
    }

    BurnsideElement const& lift() const noexcept {
      return _lift;
    }

    friend bool operator==(TildeElement const& a, TildeElement const& b) {
      return a._lift == b._lift;
    }

   private:
    BurnsideElement _lift;
  };

  inline TildeElement tilde_quotient(BurnsideElement const& X) {
    BurnsideElement out(X.table(), X.prime());
    for (auto const& [c, v] : X.coefficients()) {
      if (!(*X.table())[c].canonical.is_trivial()) {
        out.add(c, v);
      }
    }
    return TildeElement(std::move(out));
  }

}  // namespace burnside

#endif  // BURNSIDE_ELEMENT_HPP_
