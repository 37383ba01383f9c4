// hkkit command-line driver. Talks to the library only through hkkit.h.

#include "hkkit/hkkit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

enum class Format { Plain, Csv, Json };

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kSearchExhausted = 3,
};

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what) : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* ptr) const noexcept { Destroy(ptr); }
};

using Ring = std::unique_ptr<hkkit_ring, Deleter<hkkit_ring, hkkit_ring_destroy>>;
using Table = std::unique_ptr<hkkit_table, Deleter<hkkit_table, hkkit_table_destroy>>;
using Period = std::unique_ptr<hkkit_period, Deleter<hkkit_period, hkkit_period_destroy>>;
using Realization = std::unique_ptr<hkkit_realization, Deleter<hkkit_realization, hkkit_realization_destroy>>;
using RealizationList =
    std::unique_ptr<hkkit_realization_list, Deleter<hkkit_realization_list, hkkit_realization_list_destroy>>;
using Basis = std::unique_ptr<hkkit_gb, Deleter<hkkit_gb, hkkit_gb_destroy>>;

int exit_code_for(hkkit_status status) {
  switch (status) {
    case HKKIT_OK: return kOk;
    case HKKIT_ERR_NOT_FOUND: return kSearchExhausted;
    case HKKIT_ERR_INTERNAL:
    case HKKIT_ERR_PAIR_BUDGET: return kVerificationFailed;
    default: return kInvalidInput;
  }
}

void check(hkkit_status status) {
  if (status != HKKIT_OK) throw CliError(exit_code_for(status), hkkit_last_error_message());
}

Ring make_ring(std::uint64_t p, std::uint64_t n) {
  hkkit_ring* raw = nullptr;
  check(hkkit_ring_create(p, n, &raw));
  return Ring(raw);
}

std::string fetch_string(hkkit_status (*fn)(const hkkit_ring*, std::uint64_t, char*, std::size_t, std::size_t*),
                         const hkkit_ring* ring, std::uint64_t e) {
  std::size_t len = 0;
  const hkkit_status probe = fn(ring, e, nullptr, 0, &len);
  if (probe != HKKIT_ERR_BUFFER_TOO_SMALL) check(probe);
  std::string out(len + 1, '\0');
  check(fn(ring, e, out.data(), out.size(), &len));
  out.resize(len);
  return out;
}

std::string brute_string(const hkkit_ring* ring, std::uint64_t e, std::uint64_t q_cap) {
  std::size_t len = 0;
  const hkkit_status probe = hkkit_hk_brute(ring, e, q_cap, nullptr, 0, &len);
  if (probe != HKKIT_ERR_BUFFER_TOO_SMALL) check(probe);
  std::string out(len + 1, '\0');
  check(hkkit_hk_brute(ring, e, q_cap, out.data(), out.size(), &len));
  out.resize(len);
  return out;
}

// Plain output: right-aligned columns separated by two spaces.
void print_columns(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += std::string(widths[c] - row[c].size(), ' ') + row[c];
    }
    os << line << '\n';
  }
}

void print_csv(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << '\n';
  }
}

void print_json(std::ostream& os, const json& doc) { os << doc.dump(2) << '\n'; }

const char* branch_name(hkkit_branch b) { return b == HKKIT_BRANCH_HALF ? "HALF" : "FULL"; }

std::vector<std::string> profile_of(const hkkit_period* period) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < hkkit_period_profile_size(period); ++k) {
    out.emplace_back(hkkit_period_profile_at(period, k));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string monomial_text(std::uint64_t i, std::uint64_t j) {
  auto var = [](const char* v, std::uint64_t k) {
    return k == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(k);
  };
  if (i == 0 && j == 0) return "1";
  if (j == 0) return var("x", i);
  if (i == 0) return var("y", j);
  return var("x", i) + "*" + var("y", j);
}

struct Options {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  std::uint64_t e_max = 0;
  std::uint64_t pi = 0;
  std::uint64_t n_limit = 10000;
  std::uint64_t p_limit = 10000;
  std::uint64_t q_cap = 512;
  std::uint64_t max_results = 10;
  Format format = Format::Plain;
};

int cmd_table(const Options& opt) {
  const Ring ring = make_ring(opt.p, opt.n);
  hkkit_table* raw = nullptr;
  check(hkkit_table_create(ring.get(), opt.e_max, &raw));
  const Table table(raw);

  std::vector<hkkit_row> rows(hkkit_table_size(table.get()));
  for (std::size_t k = 0; k < rows.size(); ++k) check(hkkit_table_row(table.get(), k, &rows[k]));

  if (opt.format == Format::Json) {
    json records = json::array();
    for (const auto& r : rows) {
      records.push_back({{"e", r.e}, {"q", r.q}, {"b", r.b}, {"hk", r.hk}, {"phi", r.phi}});
    }
    print_json(std::cout, {{"p", opt.p}, {"n", opt.n}, {"records", records}});
    return kOk;
  }
  std::vector<std::vector<std::string>> cells;
  if (opt.format == Format::Csv) {
    cells.push_back({"e", "q", "b", "hk", "phi"});
  } else {
    cells.push_back({"e", "q", "b", "HK(e)", "phi(e)"});
  }
  for (const auto& r : rows) cells.push_back({std::to_string(r.e), r.q, std::to_string(r.b), r.hk, r.phi});
  if (opt.format == Format::Csv) {
    print_csv(std::cout, cells);
  } else {
    print_columns(std::cout, cells);
  }
  return kOk;
}

int cmd_period(const Options& opt) {
  const Ring ring = make_ring(opt.p, opt.n);
  hkkit_period* raw = nullptr;
  check(hkkit_period_create(ring.get(), &raw));
  const Period period(raw);
  hkkit_period_check verified{};
  check(hkkit_verify_minimal_period(ring.get(), 4, &verified));

  const auto profile = profile_of(period.get());
  const std::uint64_t omega = hkkit_period_omega(period.get());
  const std::uint64_t pi = hkkit_period_pi(period.get());
  const char* branch = branch_name(hkkit_period_branch(period.get()));
  const bool tested = hkkit_period_involution_tested(period.get()) != 0;
  const bool holds = hkkit_period_involution_holds(period.get()) != 0;

  switch (opt.format) {
    case Format::Json:
      print_json(std::cout, {{"p", opt.p},
                             {"n", opt.n},
                             {"omega", omega},
                             {"pi", pi},
                             {"branch", branch},
                             {"involution_tested", tested},
                             {"involution_holds", holds},
                             {"phi_profile", profile},
                             {"verified", verified.ok != 0}});
      break;
    case Format::Csv:
      print_csv(std::cout, {{"p", "n", "omega", "pi", "branch", "involution_tested", "involution_holds",
                             "phi_profile", "verified"},
                            {std::to_string(opt.p), std::to_string(opt.n), std::to_string(omega),
                             std::to_string(pi), branch, tested ? "true" : "false", holds ? "true" : "false",
                             join(profile, ";"), verified.ok ? "true" : "false"}});
      break;
    case Format::Plain: {
      std::string involution = "not tested (omega odd)";
      if (tested) {
        involution = std::string("p^(omega/2) ") + (holds ? "==" : "!=") + " n-1 (mod n)";
      }
      std::cout << "ring       k[[x,y]]/(x^" << opt.n << " - y^" << opt.n << "), char " << opt.p << '\n'
                << "omega      " << omega << '\n'
                << "pi         " << pi << '\n'
                << "branch     " << branch << (std::string(branch) == "HALF" ? " (pi = omega/2)" : " (pi = omega)")
                << '\n'
                << "involution " << involution << '\n'
                << "phi        " << join(profile, " ") << '\n'
                << "verified   " << (verified.ok ? "yes" : "no") << '\n';
      break;
    }
  }
  return verified.ok ? kOk : kVerificationFailed;
}

json realization_json(const hkkit_realization* r) {
  json doc = {{"target_pi", hkkit_realization_target_pi(r)},
              {"found", hkkit_realization_found(r) != 0},
              {"search", {{"n_candidates", hkkit_realization_n_candidates(r)},
                          {"p_candidates", hkkit_realization_p_candidates(r)}}}};
  if (const hkkit_period* period = hkkit_realization_period(r)) {
    doc["p"] = hkkit_realization_p(r);
    doc["n"] = hkkit_realization_n(r);
    doc["residue"] = hkkit_realization_residue(r);
    doc["omega"] = hkkit_period_omega(period);
    doc["pi"] = hkkit_period_pi(period);
    doc["branch"] = branch_name(hkkit_period_branch(period));
    doc["phi_profile"] = profile_of(period);
  }
  return doc;
}

int cmd_realize(const Options& opt) {
  hkkit_realization* raw = nullptr;
  const hkkit_status status = hkkit_realize(opt.pi, opt.n_limit, opt.p_limit, &raw);
  const Realization r(raw);
  if (status != HKKIT_OK && status != HKKIT_ERR_NOT_FOUND) check(status);
  const bool found = status == HKKIT_OK;
  if (!found) std::cerr << "hkkit: " << hkkit_last_error_message() << '\n';

  const std::string n_cand = std::to_string(hkkit_realization_n_candidates(r.get()));
  const std::string p_cand = std::to_string(hkkit_realization_p_candidates(r.get()));
  switch (opt.format) {
    case Format::Json: print_json(std::cout, realization_json(r.get())); break;
    case Format::Csv: {
      std::vector<std::string> row{std::to_string(opt.pi), found ? "true" : "false", "", "", "", "", "", "",
                                   n_cand, p_cand};
      if (found) {
        const hkkit_period* period = hkkit_realization_period(r.get());
        row[2] = std::to_string(hkkit_realization_p(r.get()));
        row[3] = std::to_string(hkkit_realization_n(r.get()));
        row[4] = std::to_string(hkkit_realization_residue(r.get()));
        row[5] = std::to_string(hkkit_period_omega(period));
        row[6] = branch_name(hkkit_period_branch(period));
        row[7] = join(profile_of(period), ";");
      }
      print_csv(std::cout, {{"target_pi", "found", "p", "n", "residue", "omega", "branch", "phi_profile",
                             "n_candidates", "p_candidates"},
                            row});
      break;
    }
    case Format::Plain:
      std::cout << "target pi    " << opt.pi << '\n';
      if (found) {
        const hkkit_period* period = hkkit_realization_period(r.get());
        std::cout << "p            " << hkkit_realization_p(r.get()) << '\n'
                  << "n            " << hkkit_realization_n(r.get()) << '\n'
                  << "residue      " << hkkit_realization_residue(r.get()) << " (mod n)\n"
                  << "omega        " << hkkit_period_omega(period) << '\n'
                  << "branch       " << branch_name(hkkit_period_branch(period)) << '\n'
                  << "phi          " << join(profile_of(period), " ") << '\n';
      } else {
        std::cout << "result       not found\n";
      }
      std::cout << "n candidates " << n_cand << '\n' << "p candidates " << p_cand << '\n';
      break;
  }
  return found ? kOk : kSearchExhausted;
}

int cmd_enumerate(const Options& opt) {
  hkkit_realization_list* raw = nullptr;
  check(hkkit_enumerate_realizations(opt.pi, opt.n_limit, opt.p_limit, opt.max_results, &raw));
  const RealizationList list(raw);
  const std::size_t count = hkkit_realization_list_size(list.get());

  if (opt.format == Format::Json) {
    json items = json::array();
    for (std::size_t k = 0; k < count; ++k) items.push_back(realization_json(hkkit_realization_list_at(list.get(), k)));
    print_json(std::cout, {{"target_pi", opt.pi}, {"realizations", items}});
    return kOk;
  }
  std::vector<std::vector<std::string>> cells{{"n", "p", "omega", "pi", "branch"}};
  for (std::size_t k = 0; k < count; ++k) {
    const hkkit_realization* r = hkkit_realization_list_at(list.get(), k);
    const hkkit_period* period = hkkit_realization_period(r);
    cells.push_back({std::to_string(hkkit_realization_n(r)), std::to_string(hkkit_realization_p(r)),
                     std::to_string(hkkit_period_omega(period)), std::to_string(hkkit_period_pi(period)),
                     branch_name(hkkit_period_branch(period))});
  }
  if (opt.format == Format::Csv) {
    print_csv(std::cout, cells);
  } else {
    print_columns(std::cout, cells);
  }
  return kOk;
}

int cmd_verify(const Options& opt) {
  const Ring ring = make_ring(opt.p, opt.n);
  struct Row {
    std::uint64_t e;
    std::uint64_t q;
    std::string closed;
    std::string brute;
    std::string paper_gb;  // PASS, FAIL or "-" when q < n
    bool pass;
  };
  std::vector<Row> rows;
  std::uint64_t q = 1;
  for (std::uint64_t e = 0; e <= opt.e_max && q <= opt.q_cap; ++e) {
    Row row{e, q, fetch_string(hkkit_hk_value, ring.get(), e), brute_string(ring.get(), e, opt.q_cap), "-", true};
    row.pass = row.closed == row.brute;
    if (q > opt.n) {
      hkkit_paper_gb_check gb{};
      check(hkkit_verify_paper_gb(ring.get(), e, opt.q_cap, &gb));
      row.paper_gb = gb.ok ? "PASS" : "FAIL";
      row.pass = row.pass && gb.ok;
    }
    rows.push_back(std::move(row));
    if (q > opt.q_cap / opt.p) break;
    q *= opt.p;
  }
  if (rows.size() < opt.e_max + 1) {
    std::cerr << "hkkit: rows with p^e > " << opt.q_cap << " skipped (oracle cap)\n";
  }
  const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });

  if (opt.format == Format::Json) {
    json items = json::array();
    for (const auto& r : rows) {
      items.push_back({{"e", r.e}, {"q", r.q}, {"hk_closed", r.closed}, {"hk_brute", r.brute},
                       {"paper_gb", r.paper_gb}, {"result", r.pass ? "PASS" : "FAIL"}});
    }
    print_json(std::cout, {{"p", opt.p}, {"n", opt.n}, {"q_cap", opt.q_cap}, {"rows", items}, {"all_pass", all_pass}});
  } else {
    std::vector<std::vector<std::string>> cells{{"e", "q", "hk_closed", "hk_brute", "paper_gb", "result"}};
    for (const auto& r : rows) {
      cells.push_back({std::to_string(r.e), std::to_string(r.q), r.closed, r.brute, r.paper_gb,
                       r.pass ? "PASS" : "FAIL"});
    }
    if (opt.format == Format::Csv) {
      print_csv(std::cout, cells);
    } else {
      print_columns(std::cout, cells);
    }
  }
  return all_pass ? kOk : kVerificationFailed;
}

int cmd_gb(const Options& opt) {
  const Ring ring = make_ring(opt.p, opt.n);
  hkkit_gb* raw = nullptr;
  check(hkkit_gb_frobenius(ring.get(), opt.e, opt.q_cap, &raw));
  const Basis gb(raw);

  std::uint64_t q = 1;
  for (std::uint64_t k = 0; k < opt.e; ++k) q *= opt.p;  // q <= q_cap was checked by the library
  const char* count_raw = hkkit_gb_standard_monomials(gb.get());
  const std::string count = count_raw ? count_raw : "infinite";
  const std::size_t size = hkkit_gb_size(gb.get());

  std::vector<std::pair<std::uint64_t, std::uint64_t>> stairs(size);
  for (std::size_t k = 0; k < size; ++k) check(hkkit_gb_staircase(gb.get(), k, &stairs[k].first, &stairs[k].second));

  switch (opt.format) {
    case Format::Json: {
      json basis = json::array();
      json staircase = json::array();
      for (std::size_t k = 0; k < size; ++k) {
        json terms = json::array();
        for (std::size_t t = 0; t < hkkit_gb_term_count(gb.get(), k); ++t) {
          std::uint64_t i = 0, j = 0, c = 0;
          check(hkkit_gb_term(gb.get(), k, t, &i, &j, &c));
          terms.push_back({{"x", i}, {"y", j}, {"coeff", c}});
        }
        basis.push_back({{"text", hkkit_gb_generator(gb.get(), k)}, {"terms", terms}});
        staircase.push_back({{"x", stairs[k].first}, {"y", stairs[k].second}});
      }
      print_json(std::cout, {{"p", opt.p}, {"n", opt.n}, {"e", opt.e}, {"q", q}, {"basis", basis},
                             {"staircase", staircase}, {"standard_monomials", count}});
      break;
    }
    case Format::Csv: {
      std::vector<std::vector<std::string>> cells{{"index", "lead_x", "lead_y", "generator", "standard_monomials"}};
      for (std::size_t k = 0; k < size; ++k) {
        cells.push_back({std::to_string(k), std::to_string(stairs[k].first), std::to_string(stairs[k].second),
                         hkkit_gb_generator(gb.get(), k), count});
      }
      print_csv(std::cout, cells);
      break;
    }
    case Format::Plain: {
      std::vector<std::string> stair_text;
      for (const auto& [i, j] : stairs) stair_text.push_back(monomial_text(i, j));
      std::cout << "ideal      (x^" << q << ", y^" << q << ", x^" << opt.n << " - y^" << opt.n << ") over F_"
                << opt.p << ", lex x > y\n"
                << "basis\n";
      for (std::size_t k = 0; k < size; ++k) std::cout << "  " << hkkit_gb_generator(gb.get(), k) << '\n';
      std::cout << "staircase {" << join(stair_text, ", ") << "}\n"
                << "standard monomials " << count << '\n';
      break;
    }
  }
  return kOk;
}

void add_format(CLI::App* cmd, Options& opt) {
  const std::map<std::string, Format> formats{{"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
  cmd->add_option("--format", opt.format, "Output format: plain, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_ring(CLI::App* cmd, Options& opt) {
  cmd->add_option("--p", opt.p, "Prime characteristic")->required();
  cmd->add_option("--n", opt.n, "Exponent n in x^n - y^n")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz functions of k[[x,y]]/(x^n - y^n) in characteristic p"};
  app.require_subcommand(1);
  Options opt;

  auto* table = app.add_subcommand("table", "Tabulate HK(e) and phi(e) for e = 0..emax");
  add_ring(table, opt);
  table->add_option("--emax", opt.e_max, "Largest Frobenius exponent")->required();
  add_format(table, opt);

  auto* period = app.add_subcommand("period", "Order of p mod n and the exact period of phi");
  add_ring(period, opt);
  add_format(period, opt);

  auto* realize = app.add_subcommand("realize", "Find a ring whose phi has the requested period");
  realize->add_option("--pi", opt.pi, "Target period")->required()->check(CLI::PositiveNumber);
  realize->add_option("--nlimit", opt.n_limit, "Largest n to try")->envname("HKKIT_NLIMIT")->check(CLI::PositiveNumber);
  realize->add_option("--plimit", opt.p_limit, "Largest p to try")->envname("HKKIT_PLIMIT")->check(CLI::PositiveNumber);
  add_format(realize, opt);

  auto* enumerate = app.add_subcommand("enumerate", "List every (p, n) within limits whose phi has period pi");
  enumerate->add_option("--pi", opt.pi, "Target period")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--nlimit", opt.n_limit, "Largest n to try")->envname("HKKIT_NLIMIT")->check(CLI::PositiveNumber);
  enumerate->add_option("--plimit", opt.p_limit, "Largest p to try")->envname("HKKIT_PLIMIT")->check(CLI::PositiveNumber);
  enumerate->add_option("--max", opt.max_results, "Maximum number of results")->check(CLI::PositiveNumber);
  add_format(enumerate, opt);

  auto* verify = app.add_subcommand("verify", "Cross-check the closed form against the Groebner oracle");
  add_ring(verify, opt);
  verify->add_option("--emax", opt.e_max, "Largest Frobenius exponent")->required();
  verify->add_option("--qcap", opt.q_cap, "Largest q = p^e handed to the oracle")->envname("HKKIT_QCAP")->check(CLI::PositiveNumber);
  add_format(verify, opt);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of (x^q, y^q, x^n - y^n)");
  add_ring(gb, opt);
  gb->add_option("--e", opt.e, "Frobenius exponent")->required();
  gb->add_option("--qcap", opt.q_cap, "Largest q = p^e handed to the oracle")->envname("HKKIT_QCAP")->check(CLI::PositiveNumber);
  add_format(gb, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*table) return cmd_table(opt);
    if (*period) return cmd_period(opt);
    if (*realize) return cmd_realize(opt);
    if (*enumerate) return cmd_enumerate(opt);
    if (*verify) return cmd_verify(opt);
    if (*gb) return cmd_gb(opt);
  } catch (const CliError& e) {
    std::cerr << "hkkit: error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "hkkit: error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInvalidInput;
}
