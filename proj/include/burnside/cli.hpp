#ifndef BURNSIDE_CLI_HPP_
#define BURNSIDE_CLI_HPP_

// Job execution behind the command-line tool. `run` writes the report to
// `out`, diagnostics to `err`, and returns the process exit status:
// 0 success, 1 selftest failure, 2 invalid input, 3 cap exceeded,
// 4 internal invariant violated.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "burnside/algebra.hpp"
#include "burnside/cache.hpp"
#include "burnside/catalog.hpp"
#include "burnside/error.hpp"
#include "burnside/marks.hpp"
#include "burnside/plocal.hpp"
#include "burnside/serialize.hpp"

namespace burnside {

  enum class Command { basis, compose, one_p, project, marks, kernel, segal_rank, decompose, selftest };

  inline Command parse_command(std::string const& s) {
    static std::map<std::string, Command> const names = {
        {"basis", Command::basis},           {"compose", Command::compose},
        {"one-p", Command::one_p},           {"project", Command::project},
        {"marks", Command::marks},           {"kernel", Command::kernel},
        {"segal-rank", Command::segal_rank}, {"decompose", Command::decompose},
        {"selftest", Command::selftest}};
    auto it = names.find(s);
    if (it == names.end()) {
      throw Error(ErrorKind::invalid_input, "unknown command: " + s);
    }
    return it->second;
  }

  struct JobSpec {
    Command                    command = Command::basis;
    std::string                group   = "C1";
    std::string                target  = "C1";
    std::optional<int>         prime;
    std::vector<std::string>   elements;  // file paths or inline JSON
    MarkVariant                variant = MarkVariant::raw;
    unsigned                   digits  = 8;
    std::optional<std::string> cache_dir;
    bool                       use_cache = true;
    std::string                format    = "json";
    std::vector<std::string>   corpus;  // selftest; empty means the default corpus
  };

  namespace detail {
    inline json read_document(std::string const& spec) {
      std::string const s = trim(spec);
      try {
        if (!s.empty() && s.front() == '{') {
          return json::parse(s);
        }
        std::ifstream in(s);
        if (!in) {
          throw Error(ErrorKind::invalid_input, "cannot read element file " + s);
        }
        json doc;
        in >> doc;
        return doc;
      } catch (json::exception const& e) {
        throw Error(ErrorKind::invalid_input, std::string("bad element JSON: ") + e.what());
      }
    }

    inline GroupPtr group_field(json const& doc, char const* field, GroupPtr const& fallback) {
      if (!doc.contains(field)) {
        return fallback;
      }
      auto const& v = doc.at(field);
      return v.is_string() ? parse_group_spec(v.get<std::string>()) : group_from_json(v);
    }

    inline BurnsideElement load_element(std::string const& spec,
                                        GroupPtr const&    G,
                                        GroupPtr const&    K) {
      json const doc = read_document(spec);
      return element_from_json(doc, group_field(doc, "source", G), group_field(doc, "target", K));
    }

    inline int require_prime(JobSpec const& job) {
      if (!job.prime) {
        throw Error(ErrorKind::invalid_input, "--prime is required for this command");
      }
      if (!is_prime(*job.prime)) {
        throw Error(ErrorKind::invalid_input, std::to_string(*job.prime) + " is not prime");
      }
      return *job.prime;
    }

    inline json local_element_json(BurnsideElement const& X, int p, unsigned digits) {
      json out   = element_json(X);
      auto& list = out["coeffs"];
      std::size_t i = 0;
      for (auto const& [c, v] : X.coefficients()) {
        json entry        = p_local_json(v, p, digits);
        entry["class_id"] = c;
        list[i++]         = entry;
      }
      return out;
    }

    struct SuiteResult {
      std::string name;
      std::string group;
      int         checks   = 0;
      int         failures = 0;
      std::string first_failure;

      void check(bool ok, std::string const& what) {
        ++checks;
        if (!ok) {
          if (failures++ == 0) {
            first_failure = what;
          }
        }
      }
    };

    inline std::vector<SuiteResult> run_selftest(std::vector<GroupPtr> const& corpus) {
      std::vector<SuiteResult> results;
      auto const               C1 = cyclic_group(1);
      for (auto const& G : corpus) {
        auto const GG = PairTable::get(G, G);
        auto const G1 = PairTable::get(G, C1);

        SuiteResult laws{"category-laws", G->label()};
        auto const  id = identity_element(G);
        for (std::size_t a = 0; a < GG->size(); ++a) {
          auto X = BurnsideElement::basis(GG, static_cast<int>(a));
          laws.check(compose(X, id) == X && compose(id, X) == X, "identity at " + std::to_string(a));
          for (std::size_t b = 0; b < GG->size(); ++b) {
            auto Y = BurnsideElement::basis(GG, static_cast<int>(b));
            laws.check(orbit_augmentation(compose(X, Y))
                           == orbit_augmentation(X) * orbit_augmentation(Y),
                       "augmentation at " + std::to_string(a) + "," + std::to_string(b));
          }
        }
        results.push_back(laws);

        SuiteResult oracle{"oracle-equivalence", G->label()};
        for (std::size_t a = 0; a < G1->size(); ++a) {
          for (std::size_t b = 0; b < GG->size(); ++b) {
            auto X = BurnsideElement::basis(G1, static_cast<int>(a));
            auto Y = BurnsideElement::basis(GG, static_cast<int>(b));
            oracle.check(compose(X, Y) == compose_oracle(X, Y),
                         "compose at " + std::to_string(a) + "," + std::to_string(b));
          }
        }
        results.push_back(oracle);

        SuiteResult marks{"marks", G->label()};
        for (auto variant : {MarkVariant::raw, MarkVariant::with_w}) {
          for (std::size_t r = 0; r < G1->size(); ++r) {
            for (std::size_t c = 0; c < G1->size(); ++c) {
              auto X = BurnsideElement::basis(G1, static_cast<int>(c));
              marks.check(mark(static_cast<int>(r), X, variant)
                              == mark_oracle((*G1)[r].canonical, X, variant),
                          "mark at " + std::to_string(r) + "," + std::to_string(c));
            }
          }
        }
        results.push_back(marks);

        SuiteResult local{"projection", G->label()};
        for (int p : prime_divisors(G->order())) {
          auto const rep = one_p(G, p);
          local.check(compose(rep.element, rep.element) == rep.element, "1_p idempotent");
          if (is_power_of(G->order(), p)) {
            local.check(rep.element == identity_element(G), "1_p = [G,id]");
          }
          for (std::size_t c = 0; c < G1->size(); ++c) {
            auto       X  = BurnsideElement::basis(G1, static_cast<int>(c));
            auto const Xp = pi_p(X, p);
            for (auto const& row : p_isotropy_basis(G, C1, p)) {
              local.check(mark(row, Xp) == mark(row, X), "raw mark preserved");
            }
          }
        }
        results.push_back(local);

        SuiteResult cache{"cache", G->label()};
        PairTable const fresh(G, C1);
        cache.check(fresh.size() == G1->size(), "class count");
        for (std::size_t c = 0; c < fresh.size() && c < G1->size(); ++c) {
          cache.check(fresh[c].canonical.source() == (*G1)[c].canonical.source()
                          && fresh[c].canonical.images() == (*G1)[c].canonical.images(),
                      "class " + std::to_string(c));
        }
        results.push_back(cache);
      }
      return results;
    }
  }  // namespace detail

  inline json execute(JobSpec const& job, int& status) {
    status = 0;
    std::optional<ResultCache> cache;
    if (job.use_cache && job.cache_dir) {
      cache.emplace(*job.cache_dir);
    }
    auto const G = parse_group_spec(job.group);
    auto const K = parse_group_spec(job.target);
    auto warm    = [&](GroupPtr const& a, GroupPtr const& b) {
      if (cache) {
        warm_pair_table(*cache, a, b);
      }
    };
    json out{{"command", ""}};
    switch (job.command) {
      case Command::basis: {
        warm(G, K);
        out = basis_json(*PairTable::get(G, K));
        out["command"] = "basis";
        break;
      }
      case Command::compose: {
        if (job.elements.size() != 2) {
          throw Error(ErrorKind::invalid_input, "compose needs two --element arguments X and Y");
        }
        auto const X = detail::load_element(job.elements[0], G, K);
        auto const Y = detail::load_element(job.elements[1], G, G);
        out          = {{"command", "compose"}, {"result", element_json(compose(X, Y))}};
        break;
      }
      case Command::one_p: {
        int const p = detail::require_prime(job);
        warm(G, G);
        out            = idempotent_json(one_p(G, p), job.digits);
        out["command"] = "one-p";
        break;
      }
      case Command::project: {
        int const p = detail::require_prime(job);
        if (job.elements.size() != 1) {
          throw Error(ErrorKind::invalid_input, "project needs one --element argument");
        }
        auto const X = detail::load_element(job.elements[0], G, K);
        warm(X.source(), X.source());
        out = {{"command", "project"},
               {"p", p},
               {"result", detail::local_element_json(pi_p(X, p), p, job.digits)}};
        break;
      }
      case Command::marks: {
        warm(G, K);
        auto const table = PairTable::get(G, K);
        if (job.format == "csv") {
          out = marks_csv(table, job.variant);
        } else {
          out            = marks_json(table, job.variant);
          out["command"] = "marks";
        }
        break;
      }
      case Command::kernel: {
        warm(G, K);
        out            = kernel_json(kernel_of_alpha(G, K, job.variant));
        out["command"] = "kernel";
        break;
      }
      case Command::segal_rank: {
        int const p = detail::require_prime(job);
        warm(G, K);
        out            = segal_json(segal_rank(G, K, p));
        out["command"] = "segal-rank";
        out["source"]  = G->label();
        out["target"]  = K->label();
        break;
      }
      case Command::decompose: {
        if (job.elements.size() != 1) {
          throw Error(ErrorKind::invalid_input, "decompose needs one --element argument");
        }
        auto const X      = detail::load_element(job.elements[0], G, K);
        json       blocks = json::array();
        for (int q : prime_divisors(X.source()->order())) {
          auto const Xq = pi_p(X, q);
          blocks.push_back({{"q", q},
                            {"pi", detail::local_element_json(Xq, q, job.digits)},
                            {"tilde", element_json(tilde_quotient(Xq).lift())},
                            {"segal_rank", segal_rank(X.source(), X.target(), q).rank}});
        }
        out = {{"command", "decompose"}, {"element", element_json(X)}, {"blocks", blocks}};
        break;
      }
      case Command::selftest: {
        std::vector<GroupPtr> corpus;
        for (auto const& name : job.corpus.empty() ? default_corpus() : job.corpus) {
          corpus.push_back(parse_group_spec(name));
          warm(corpus.back(), corpus.back());
          warm(corpus.back(), cyclic_group(1));
        }
        json suites = json::array();
        bool passed = true;
        for (auto const& r : detail::run_selftest(corpus)) {
          json s{{"suite", r.name}, {"group", r.group}, {"checks", r.checks}, {"failures", r.failures}};
          if (r.failures) {
            s["first_failure"] = r.first_failure;
            passed             = false;
          }
          suites.push_back(s);
        }
        out    = {{"command", "selftest"}, {"suites", suites}, {"passed", passed}};
        status = passed ? 0 : 1;
        break;
      }
    }
    return out;
  }

  inline int run(JobSpec const& job, std::ostream& out, std::ostream& err) {
    try {
      int        status = 0;
      json const report = execute(job, status);
      if (report.is_string()) {
        out << report.get<std::string>();
      } else {
        out << report.dump(2) << '\n';
      }
      return status;
    } catch (Error const& e) {
      err << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
      return exit_status(e.kind());
    } catch (std::exception const& e) {
      err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
      return 4;
    }
  }

}  // namespace burnside

#endif  // BURNSIDE_CLI_HPP_
