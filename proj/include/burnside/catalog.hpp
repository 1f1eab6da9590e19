#ifndef BURNSIDE_CATALOG_HPP_
#define BURNSIDE_CATALOG_HPP_

// Named groups and the JSON group input document:
//
//   {"table": [[...], ...]}
//   {"perm": {"degree": n, "generators": [[...], ...]}}
//   {"named": "S3" | "C6" | "D8" | "A4" | "Q8" | "C(n)" | "D(n)" | "S(n)"}
//   {"product": [spec, spec]}
//
// A bare string is read as a name. Names also accept the short forms Cn,
// Dn, Sn, V4, 1 and products written as "C2xC2". D(n) is the dihedral group
// of order n.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "burnside/error.hpp"
#include "burnside/group.hpp"

namespace burnside {

  using json = nlohmann::json;

  inline GroupPtr cyclic_group(int n) {
    if (n < 1) {
      throw Error(ErrorKind::invalid_input, "cyclic group order must be positive");
    }
    Permutation rot(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
    }
    std::vector<Permutation> gens;
    if (n > 1) {
      gens.push_back(rot);
    }
    return make_group_from_permutations(n, gens, "C" + std::to_string(n));
  }

  inline GroupPtr dihedral_group(int order) {
    if (order < 2 || order % 2 != 0) {
      throw Error(ErrorKind::invalid_input, "dihedral group order must be even");
    }
    std::string const label = "D" + std::to_string(order);
    int const         m     = order / 2;
    if (m == 1) {
      return make_group_from_permutations(2, {{1, 0}}, label);
    }
    if (m == 2) {
      return make_group_from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, label);
    }
    Permutation rot(m), refl(m);
    for (int i = 0; i < m; ++i) {
      rot[i]  = (i + 1) % m;
      refl[i] = (m - i) % m;
    }
    return make_group_from_permutations(m, {rot, refl}, label);
  }

  inline GroupPtr symmetric_group(int n) {
    if (n < 1) {
      throw Error(ErrorKind::invalid_input, "symmetric group degree must be positive");
    }
    std::string const label = "S" + std::to_string(n);
    if (n == 1) {
      return make_group_from_permutations(1, {}, label);
    }
    Permutation swap(n), cycle(n);
    for (int i = 0; i < n; ++i) {
      swap[i]  = i;
      cycle[i] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    return make_group_from_permutations(n, {swap, cycle}, label);
  }

  inline GroupPtr alternating_group_4() {
    return make_group_from_permutations(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, "A4");
  }

  inline GroupPtr quaternion_group() {
    // index = 4 * sign + unit, units 1, i, j, k
    static constexpr int unit_mul[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int unit_sign[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> rows(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        int const ua = a % 4, ub = b % 4;
        int const sign = (a / 4 + b / 4 + unit_sign[ua][ub]) % 2;
        rows[a][b]     = 4 * sign + unit_mul[ua][ub];
      }
    }
    return make_group_from_table(rows, "Q8");
  }

  namespace detail {
    inline std::string trim(std::string s) {
      auto not_space = [](unsigned char c) { return !std::isspace(c); };
      s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
      s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
      return s;
    }

    // Splits on 'x' at parenthesis depth zero.
    inline std::vector<std::string> split_product(std::string const& s) {
      std::vector<std::string> parts;
      int                      depth = 0;
      std::string              cur;
      for (char c : s) {
        if (c == '(') {
          ++depth;
        } else if (c == ')') {
          --depth;
        }
        if (c == 'x' && depth == 0) {
          parts.push_back(trim(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      parts.push_back(trim(cur));
      return parts;
    }

    inline int parse_positive(std::string const& s, std::string const& context) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 6) {
        throw Error(ErrorKind::invalid_input, "bad group name: " + context);
      }
      return std::stoi(s);
    }
  }  // namespace detail

  inline GroupPtr named_group(std::string const& raw) {
    std::string const name = detail::trim(raw);
    auto const        parts = detail::split_product(name);
    if (parts.size() > 1) {
      GroupPtr acc = named_group(parts.front());
      for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = direct_product(*acc, *named_group(parts[i]), "", Limits::default_order_cap);
      }
      return acc;
    }
    if (name == "1" || name == "trivial") {
      return cyclic_group(1);
    }
    if (name == "A4") {
      return alternating_group_4();
    }
    if (name == "Q8") {
      return quaternion_group();
    }
    if (name == "V4") {
      return direct_product(*cyclic_group(2), *cyclic_group(2), "C2xC2", Limits::default_order_cap);
    }
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D' || name[0] == 'S')) {
      std::string arg = name.substr(1);
      if (arg.front() == '(' && arg.back() == ')') {
        arg = arg.substr(1, arg.size() - 2);
      }
      int const n = detail::parse_positive(detail::trim(arg), name);
      switch (name[0]) {
        case 'C': return cyclic_group(n);
        case 'D': return dihedral_group(n);
        default: return symmetric_group(n);
      }
    }
    throw Error(ErrorKind::invalid_input, "unknown group name: " + name);
  }

  inline GroupPtr group_from_json(json const& doc) {
    try {
      if (doc.is_string()) {
        return named_group(doc.get<std::string>());
      }
      if (!doc.is_object()) {
        throw Error(ErrorKind::invalid_input, "group document must be an object or a name");
      }
      std::string const label = doc.value("label", std::string{});
      if (doc.contains("table")) {
        auto rows = doc.at("table").get<std::vector<std::vector<int>>>();
        return make_group_from_table(rows, label.empty() ? "table" : label);
      }
      if (doc.contains("perm")) {
        auto const& p = doc.at("perm");
        return make_group_from_permutations(
            p.at("degree").get<int>(),
            p.value("generators", std::vector<Permutation>{}),
            label.empty() ? "perm" : label);
      }
      if (doc.contains("named")) {
        return named_group(doc.at("named").get<std::string>());
      }
      if (doc.contains("product")) {
        auto const& factors = doc.at("product");
        if (!factors.is_array() || factors.size() != 2) {
          throw Error(ErrorKind::invalid_input, "product needs exactly two factors");
        }
        auto a = group_from_json(factors[0]);
        auto b = group_from_json(factors[1]);
        return direct_product(*a, *b, "", Limits::default_order_cap);
      }
    } catch (json::exception const& e) {
      throw Error(ErrorKind::invalid_input, std::string("malformed group document: ") + e.what());
    }
    throw Error(ErrorKind::invalid_input, "unrecognized group document");
  }

  // Accepts a name, an inline JSON document, or a path to a JSON file.
  inline GroupPtr parse_group_spec(std::string const& spec) {
    std::string const s = detail::trim(spec);
    if (!s.empty() && (s.front() == '{' || s.front() == '"')) {
      json doc;
      try {
        doc = json::parse(s);
      } catch (json::exception const& e) {
        throw Error(ErrorKind::invalid_input, std::string("bad group JSON: ") + e.what());
      }
      return group_from_json(doc);
    }
    std::ifstream in(s);
    if (in && (s.find('/') != std::string::npos || s.ends_with(".json"))) {
      json doc;
      try {
        in >> doc;
      } catch (json::exception const& e) {
        throw Error(ErrorKind::invalid_input, std::string("bad group file: ") + e.what());
      }
      return group_from_json(doc);
    }
    return named_group(s);
  }

  // The corpus exercised by the self test.
  inline std::vector<std::string> const& default_corpus() {
    static std::vector<std::string> const names
        = {"C1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D8", "Q8", "A4"};
    return names;
  }

}  // namespace burnside

#endif  // BURNSIDE_CATALOG_HPP_
