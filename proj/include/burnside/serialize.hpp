#ifndef BURNSIDE_SERIALIZE_HPP_
#define BURNSIDE_SERIALIZE_HPP_

// JSON and CSV renderings of classes, elements, reports and marks tables.

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "burnside/catalog.hpp"
#include "burnside/element.hpp"
#include "burnside/error.hpp"
#include "burnside/marks.hpp"
#include "burnside/plocal.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

  // Rationals go out as {"num": a, "den": b}; numbers beyond int64 as strings.
  inline json integer_json(Integer const& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
      return static_cast<long long>(v);
    }
    return v.str();
  }

  inline Integer integer_from_json(json const& v) {
    if (v.is_number_integer()) {
      return Integer(v.get<long long>());
    }
    if (v.is_string()) {
      try {
        return Integer(v.get<std::string>());
      } catch (std::exception const&) {
      }
    }
    throw Error(ErrorKind::invalid_input, "expected an integer, got " + v.dump());
  }

  inline json rational_json(Rational const& r) {
    return {{"num", integer_json(numerator(r))}, {"den", integer_json(denominator(r))}};
  }

  // Integral values as plain integers, others as {"num","den"}.
  inline json scalar_json(Rational const& r) {
    return is_integer(r) ? integer_json(numerator(r)) : rational_json(r);
  }

  inline json pair_class_json(PairClass const& c) {
    return {{"class_id", c.class_id},
            {"H", c.canonical.source().elements()},
            {"phi", c.canonical.images()}};
  }

  inline json basis_json(PairTable const& table) {
    json classes = json::array();
    for (auto const& c : table.classes()) {
      classes.push_back(pair_class_json(c));
    }
    return {{"source", table.source()->label()},
            {"target", table.target()->label()},
            {"size", table.size()},
            {"classes", classes}};
  }

  inline json element_json(BurnsideElement const& X) {
    json coeffs = json::array();
    for (auto const& [c, v] : X.coefficients()) {
      json entry = rational_json(v);
      entry["class_id"] = c;
      coeffs.push_back(entry);
    }
    json out{{"source", X.source()->label()}, {"target", X.target()->label()}, {"coeffs", coeffs}};
    if (X.prime()) {
      out["prime"] = *X.prime();
    }
    return out;
  }

  // Reads the "coeffs" of an element document over (G, K). An entry names its
  // class by "class_id" or by an explicit pair {"H": [...], "phi": [...]};
  // the coefficient is "num"/"den" (den defaults to 1).
  inline BurnsideElement element_from_json(json const& doc, GroupPtr const& G, GroupPtr const& K) {
    auto const table = PairTable::get(G, K);
    try {
      std::optional<int> prime;
      if (doc.contains("prime")) {
        prime = doc.at("prime").get<int>();
      }
      BurnsideElement X(table, prime);
      for (auto const& entry : doc.at("coeffs")) {
        int id = 0;
        if (entry.contains("class_id")) {
          id = entry.at("class_id").get<int>();
          if (id < 0 || static_cast<std::size_t>(id) >= table->size()) {
            throw Error(ErrorKind::class_mismatch, "class id " + std::to_string(id) + " out of range");
          }
        } else {
          auto elts = entry.at("H").get<std::vector<int>>();
          auto imgs = entry.at("phi").get<std::vector<int>>();
          std::vector<std::pair<int, int>> graph;
          if (elts.size() != imgs.size()) {
            throw Error(ErrorKind::invalid_input, "H and phi differ in length");
          }
          for (std::size_t t = 0; t < elts.size(); ++t) {
            if (elts[t] < 0 || elts[t] >= G->order() || imgs[t] < 0 || imgs[t] >= K->order()) {
              throw Error(ErrorKind::invalid_input, "pair entry out of range");
            }
            graph.emplace_back(elts[t], imgs[t]);
          }
          std::sort(graph.begin(), graph.end());
          std::vector<int> se, si;
          for (auto const& [h, v] : graph) {
            se.push_back(h);
            si.push_back(v);
          }
          Homomorphism phi(make_subgroup(G, se), K, si);
          if (!phi.is_homomorphism()) {
            throw Error(ErrorKind::invalid_input, "phi is not a homomorphism");
          }
          id = table->classify(phi);
        }
        Integer const num = integer_from_json(entry.at("num"));
        Integer const den = entry.contains("den") ? integer_from_json(entry.at("den")) : Integer(1);
        if (den <= 0) {
          throw Error(ErrorKind::invalid_input, "denominator must be positive");
        }
        X.add(id, Rational(num, den));
      }
      X.validate();
      return X;
    } catch (json::exception const& e) {
      throw Error(ErrorKind::invalid_input, std::string("malformed element document: ") + e.what());
    }
  }

  inline json p_local_json(Rational const& r, int p, unsigned digits) {
    json out = rational_json(r);
    std::string const n = std::to_string(digits);
    out["digits_mod_p^" + n]  = p_adic_digits(r, p, digits);
    out["residue_mod_p^" + n] = integer_json(p_adic_residue(r, p, digits));
    return out;
  }

  inline json idempotent_json(IdempotentReport const& r, unsigned digits) {
    json reps = json::array(), matrix = json::array(), coeffs = json::array();
    for (auto const& P : r.representatives) {
      reps.push_back(P.elements());
    }
    for (auto const& row : r.matrix) {
      json out = json::array();
      for (auto const& v : row) {
        out.push_back(scalar_json(v));
      }
      matrix.push_back(out);
    }
    for (auto const& a : r.coefficients) {
      coeffs.push_back(p_local_json(a, r.prime, digits));
    }
    return {{"p", r.prime},
            {"reps", reps},
            {"matrix", matrix},
            {"coeffs", coeffs},
            {"element", element_json(r.element)}};
  }

  inline json integer_matrix_json(IntegerMatrix const& m) {
    json out = json::array();
    for (auto const& row : m) {
      json r = json::array();
      for (auto const& v : row) {
        r.push_back(integer_json(v));
      }
      out.push_back(r);
    }
    return out;
  }

  inline json kernel_json(KernelReport const& r) {
    return {{"source", r.table->source()->label()},
            {"target", r.table->target()->label()},
            {"variant", to_string(r.variant)},
            {"prime_power_classes", r.prime_power_classes},
            {"marks_matrix", integer_matrix_json(r.marks_matrix())},
            {"raw_matrix", integer_matrix_json(r.raw_matrix)},
            {"withW_matrix", integer_matrix_json(r.with_w_matrix)},
            {"kernel_basis", integer_matrix_json(r.variant == MarkVariant::raw ? r.raw_kernel
                                                                               : r.with_w_kernel)},
            {"raw_kernel", integer_matrix_json(r.raw_kernel)},
            {"withW_kernel", integer_matrix_json(r.with_w_kernel)},
            {"rank", r.rank},
            {"variants_agree", r.variants_agree}};
  }

  // Rows are all classes, columns the basis; entries are marks.
  inline IntegerMatrix full_marks(PairTablePtr const& table, MarkVariant variant) {
    std::vector<int> rows(table->size());
    std::iota(rows.begin(), rows.end(), 0);
    return marks_matrix(table, rows, variant);
  }

  inline json marks_json(PairTablePtr const& table, MarkVariant variant) {
    return {{"source", table->source()->label()},
            {"target", table->target()->label()},
            {"variant", to_string(variant)},
            {"marks", integer_matrix_json(full_marks(table, variant))}};
  }

  inline std::string marks_csv(PairTablePtr const& table, MarkVariant variant) {
    auto const         m = full_marks(table, variant);
    std::ostringstream out;
    out << "class";
    for (std::size_t c = 0; c < table->size(); ++c) {
      out << ",c" << c;
    }
    out << '\n';
    for (std::size_t r = 0; r < m.size(); ++r) {
      out << 'c' << r;
      for (auto const& v : m[r]) {
        out << ',' << v;
      }
      out << '\n';
    }
    return out.str();
  }

  inline json segal_json(SegalRank const& s) {
    return {{"p", s.prime}, {"rank", s.rank}, {"classes", s.classes}};
  }

}  // namespace burnside

#endif  // BURNSIDE_SERIALIZE_HPP_
