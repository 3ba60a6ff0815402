// Command-line front end for the equi-difference conflict-avoiding code
// library: construction, verification, classification and exhaustive search,
// with reproducible output (no timestamps, no nondeterminism).

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cace/code.hpp"
#include "cace/constructions.hpp"
#include "cace/document.hpp"
#include "cace/numtheory.hpp"
#include "cace/prime_constructions.hpp"
#include "cace/search.hpp"

namespace {

using cace::u32;
using cace::u64;
using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw cace::MalformedDocument("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

cace::Code load_code(const std::string& path) { return cace::parse_code(read_input(path)); }

void print_generators(const std::vector<u64>& generators) {
  std::cout << "generators";
  for (u64 x : generators) std::cout << ' ' << x;
  std::cout << '\n';
}

// Human-readable block for a code that is known to verify valid.
void print_code(const cace::Code& code, bool as_json) {
  if (as_json) {
    std::cout << cace::serialize_code(code);
    return;
  }
  auto cls = cace::classify(code);
  std::cout << "n " << code.modulus() << '\n'
            << "omega " << code.weight() << '\n'
            << "size " << code.size() << '\n'
            << "classification " << cace::to_string(cls.kind) << '\n';
  print_generators(code.generators());
}

// Every construct subcommand funnels its result through here: the code is
// re-verified, and a construction that fails verification is reported as a
// defect instead of being printed.
void emit_constructed(const cace::Code& code, bool as_json) {
  cace::VerifyReport report = cace::verify(code);
  if (!report.valid) {
    const cace::Conflict& c = *report.conflict;
    throw cace::InvalidCode("constructed code failed verification: generators " +
                            std::to_string(c.generator_a) + " and " +
                            std::to_string(c.generator_b) + " share difference " +
                            std::to_string(c.difference));
  }
  print_code(code, as_json);
}

void print_scan(const std::vector<cace::ScanRecord>& records, const char* parameter_name,
                bool as_json, bool with_codes,
                const std::function<cace::Code(const cace::ScanRecord&)>& build) {
  if (as_json) {
    json rows = json::array();
    for (const auto& r : records) {
      json row;
      row["p"] = r.p;
      row["g"] = r.g;
      row[parameter_name] = r.parameter;
      row["size"] = r.code_size;
      if (with_codes) row["generators"] = build(r).generators();
      rows.push_back(row);
    }
    std::cout << rows.dump(2) << '\n';
    return;
  }
  std::cout << "p g " << parameter_name << " size\n";
  for (const auto& r : records) {
    std::cout << r.p << ' ' << r.g << ' ' << r.parameter << ' ' << r.code_size << '\n';
    if (with_codes) print_generators(build(r).generators());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equi-difference conflict-avoiding codes: construct, verify, classify, search"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit canonical JSON documents / structured records");

  std::function<void()> action;

  // the --json flag is accepted both before and after the subcommand
  const auto add_json_flag = [&as_json](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit canonical JSON output");
  };

  // bound
  {
    auto* cmd = app.add_subcommand("bound", "size bound floor(n / (2(omega-1)))");
    add_json_flag(cmd);
    auto n = std::make_shared<u64>();
    auto omega = std::make_shared<u32>();
    cmd->add_option("--n", *n, "code length")->required();
    cmd->add_option("--omega", *omega, "codeword weight")->required();
    cmd->callback([&, n, omega] {
      action = [&, n, omega] {
        u64 b = cace::size_bound(*n, *omega);
        if (as_json) {
          json out{{"n", *n}, {"omega", *omega}, {"bound", b}};
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << b << '\n';
        }
      };
    });
  }

  // verify
  {
    auto* cmd = app.add_subcommand("verify", "check pairwise disjointness of delta sets");
    add_json_flag(cmd);
    auto file = std::make_shared<std::string>("-");
    cmd->add_option("file", *file, "code document (default stdin)");
    cmd->callback([&, file] {
      action = [&, file] {
        cace::Code code = load_code(*file);
        cace::VerifyReport report = cace::verify(code);
        if (as_json) {
          json out;
          out["n"] = code.modulus();
          out["omega"] = code.weight();
          out["size"] = code.size();
          out["valid"] = report.valid;
          out["coverage"] = report.coverage_count;
          out["perfect_coverage"] = report.perfect_coverage;
          if (report.conflict) {
            out["conflict"] = {{"x", report.conflict->generator_a},
                               {"y", report.conflict->generator_b},
                               {"difference", report.conflict->difference}};
          } else {
            out["conflict"] = nullptr;
          }
          std::cout << out.dump(2) << '\n';
          return;
        }
        std::cout << "n " << code.modulus() << '\n'
                  << "omega " << code.weight() << '\n'
                  << "size " << code.size() << '\n'
                  << "valid " << (report.valid ? "true" : "false") << '\n';
        if (report.conflict)
          std::cout << "conflict x=" << report.conflict->generator_a
                    << " y=" << report.conflict->generator_b
                    << " difference=" << report.conflict->difference << '\n';
        std::cout << "coverage " << report.coverage_count << '\n'
                  << "perfect_coverage " << (report.perfect_coverage ? "true" : "false")
                  << '\n';
      };
    });
  }

  // classify
  {
    auto* cmd = app.add_subcommand("classify", "perfect / quasi-perfect / bound status");
    add_json_flag(cmd);
    auto file = std::make_shared<std::string>("-");
    cmd->add_option("file", *file, "code document (default stdin)");
    cmd->callback([&, file] {
      action = [&, file] {
        auto cls = cace::classify(load_code(*file));
        if (as_json) {
          json out{{"classification", cace::to_string(cls.kind)},
                   {"size", cls.size},
                   {"bound", cls.bound}};
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << "classification " << cace::to_string(cls.kind) << '\n'
                    << "size " << cls.size << '\n'
                    << "bound " << cls.bound << '\n';
        }
      };
    });
  }

  // normalize
  {
    auto* cmd = app.add_subcommand("normalize", "fold generators into [1, n/2]");
    add_json_flag(cmd);
    auto file = std::make_shared<std::string>("-");
    cmd->add_option("file", *file, "code document (default stdin)");
    cmd->callback([&, file] {
      action = [&, file] { emit_constructed(cace::normalize(load_code(*file)), as_json); };
    });
  }

  // combine
  {
    auto* cmd = app.add_subcommand("combine", "product of two codes over Z_(q1*q2)");
    add_json_flag(cmd);
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto force = std::make_shared<bool>(false);
    cmd->add_option("left", *left, "left code document")->required();
    cmd->add_option("right", *right, "right code document")->required();
    cmd->add_flag("--force", *force, "bypass the input guards (result is re-verified)");
    cmd->callback([&, left, right, force] {
      action = [&, left, right, force] {
        emit_constructed(cace::combine(load_code(*left), load_code(*right), *force),
                         as_json);
      };
    });
  }

  // project
  {
    auto* cmd = app.add_subcommand("project", "projection onto a divisor of n");
    add_json_flag(cmd);
    auto file = std::make_shared<std::string>();
    auto q = std::make_shared<u64>();
    cmd->add_option("file", *file, "code document")->required();
    cmd->add_option("--q", *q, "divisor of n")->required();
    cmd->callback([&, file, q] {
      action = [&, file, q] { emit_constructed(cace::project(load_code(*file), *q), as_json); };
    });
  }

  // improve
  {
    auto* cmd = app.add_subcommand("improve",
                                   "swap a small factor projection for a larger code");
    add_json_flag(cmd);
    auto file = std::make_shared<std::string>();
    auto better = std::make_shared<std::string>();
    auto q1 = std::make_shared<u64>();
    auto q2 = std::make_shared<u64>();
    cmd->add_option("file", *file, "code document over Z_(q1*q2)")->required();
    cmd->add_option("better", *better, "replacement code document over Z_q1")->required();
    cmd->add_option("--q1", *q1, "factor carrying the replacement")->required();
    cmd->add_option("--q2", *q2, "cofactor")->required();
    cmd->callback([&, file, better, q1, q2] {
      action = [&, file, better, q1, q2] {
        emit_constructed(cace::improve(load_code(*file), *q1, *q2, load_code(*better)),
                         as_json);
      };
    });
  }

  // lemma2
  {
    auto* cmd = app.add_subcommand("lemma2", "length (2*omega-1)*q1 constructions");
    add_json_flag(cmd);
    auto omega = std::make_shared<u32>();
    auto q1 = std::make_shared<u64>();
    cmd->add_option("--omega", *omega, "codeword weight")->required();
    cmd->add_option("--q1", *q1, "cofactor of 2*omega-1")->required();
    cmd->callback([&, omega, q1] {
      action = [&, omega, q1] {
        emit_constructed(cace::lemma2_construct(*omega, *q1), as_json);
      };
    });
  }

  // t3
  {
    auto* cmd = app.add_subcommand("t3", "perfect code of prime length");
    add_json_flag(cmd);
    auto p = std::make_shared<u64>();
    auto g = std::make_shared<u64>();
    auto omega = std::make_shared<u32>();
    auto force = std::make_shared<bool>(false);
    cmd->add_option("--p", *p, "odd prime length")->required();
    cmd->add_option("--g", *g, "primitive root of p")->required();
    cmd->add_option("--omega", *omega, "codeword weight")->required();
    cmd->add_flag("--force", *force,
                  "build the power family even when the coverage condition fails");
    cmd->callback([&, p, g, omega, force] {
      action = [&, p, g, omega, force] {
        cace::Code code = *force ? cace::theorem3_family_unchecked(*p, *g, *omega)
                                 : cace::theorem3_construct(*p, *g, *omega);
        emit_constructed(code, as_json);
      };
    });
  }

  // remark2
  {
    auto* cmd = app.add_subcommand("remark2", "perfect prime-length code, reduced step");
    add_json_flag(cmd);
    auto p = std::make_shared<u64>();
    auto g = std::make_shared<u64>();
    auto omega = std::make_shared<u32>();
    auto v = std::make_shared<u64>();
    cmd->add_option("--p", *p, "odd prime length")->required();
    cmd->add_option("--g", *g, "primitive root of p")->required();
    cmd->add_option("--omega", *omega, "codeword weight")->required();
    cmd->add_option("--v", *v, "divisor of mu with gcd(mu/v, omega-1) = 1")->required();
    cmd->callback([&, p, g, omega, v] {
      action = [&, p, g, omega, v] {
        emit_constructed(cace::remark2_construct(*p, *g, *omega, *v), as_json);
      };
    });
  }

  // t4
  {
    auto* cmd = app.add_subcommand("t4", "quasi-perfect code of length 2p, weight 4k+1");
    add_json_flag(cmd);
    auto p = std::make_shared<u64>();
    auto k = std::make_shared<u64>();
    auto g_value = std::make_shared<u64>();
    auto* gopt = cmd->add_option("--g", *g_value, "primitive root of p (default: smallest)");
    cmd->add_option("--p", *p, "odd prime with p = 1 (mod 4k)")->required();
    cmd->add_option("--k", *k, "weight parameter, omega = 4k+1")->required();
    cmd->callback([&, p, k, g_value, gopt] {
      action = [&, p, k, g_value, gopt] {
        std::optional<u64> root;
        if (gopt->count() > 0) root = *g_value;
        emit_constructed(cace::theorem4_construct(*p, *k, root), as_json);
      };
    });
  }

  // search
  {
    auto* cmd = app.add_subcommand("search", "exact maximum code size by branch and bound");
    add_json_flag(cmd);
    auto n = std::make_shared<u64>();
    auto omega = std::make_shared<u32>();
    auto budget_ms = std::make_shared<u64>(10000);
    auto max_n = std::make_shared<u64>(0);
    cmd->add_option("--n", *n, "code length")->required();
    cmd->add_option("--omega", *omega, "codeword weight")->required();
    cmd->add_option("--budget-ms", *budget_ms, "time budget in milliseconds");
    cmd->add_option("--max-n", *max_n, "raise the desk-scale ceiling on n");
    cmd->callback([&, n, omega, budget_ms, max_n] {
      action = [&, n, omega, budget_ms, max_n] {
        const u64 ceiling = *max_n != 0 ? *max_n : (*omega == 3 ? 200 : 120);
        if (*n > ceiling)
          throw cace::RangeViolation("n = " + std::to_string(*n) +
                                     " exceeds the search ceiling " +
                                     std::to_string(ceiling) + "; raise --max-n");
        auto result = cace::max_code_bruteforce(*n, *omega,
                                                std::chrono::milliseconds(*budget_ms));
        if (as_json) {
          json out;
          out["n"] = *n;
          out["omega"] = *omega;
          out["maximum"] = result.size;
          out["witness"] = json::parse(cace::serialize_code(result.witness));
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << "n " << *n << '\n'
                    << "omega " << *omega << '\n'
                    << "maximum " << result.size << '\n';
          print_generators(result.witness.generators());
        }
      };
    });
  }

  // scan-t3
  {
    auto* cmd = app.add_subcommand("scan-t3", "scan primes admitting the perfect construction");
    add_json_flag(cmd);
    auto omega = std::make_shared<u32>();
    auto limit = std::make_shared<u64>(0);
    auto codes = std::make_shared<bool>(false);
    auto check = std::make_shared<bool>(false);
    auto p = std::make_shared<u64>(0);
    auto g = std::make_shared<u64>(0);
    auto mu = std::make_shared<u64>(0);
    cmd->add_option("--omega", *omega, "codeword weight")->required();
    cmd->add_option("--limit", *limit, "upper bound on scanned primes");
    cmd->add_flag("--codes", *codes, "also print each record's code");
    cmd->add_flag("--check-g", *check, "validate an externally supplied (p, g, mu) triple");
    cmd->add_option("--p", *p, "prime for --check-g");
    cmd->add_option("--g", *g, "root for --check-g");
    cmd->add_option("--mu", *mu, "expected mu for --check-g");
    cmd->callback([&, omega, limit, codes, check, p, g, mu] {
      action = [&, omega, limit, codes, check, p, g, mu] {
        if (*check) {
          if (*p == 0 || *g == 0)
            throw cace::RangeViolation("--check-g needs --p and --g (and --mu)");
          cace::MuCertificate cert = cace::compute_mu(*p, *g, *omega);
          const bool condition = cace::theorem3_condition(cert);
          const u64 lambda = *omega - 1;
          const bool congruence = (*p - 1) % (2 * cert.mu * lambda) == 0;
          const bool mu_matches = *mu == 0 || cert.mu == *mu;
          bool perfect = false;
          if (condition && congruence) {
            cace::Code code = cace::theorem3_construct(*p, *g, *omega);
            perfect = cace::classify(code).kind == cace::CodeClass::perfect;
          }
          if (as_json) {
            json out{{"p", *p},
                     {"g", *g},
                     {"mu", cert.mu},
                     {"mu_matches", mu_matches},
                     {"condition", condition},
                     {"congruence", congruence},
                     {"perfect", perfect}};
            std::cout << out.dump(2) << '\n';
          } else {
            std::cout << "p " << *p << '\n'
                      << "g " << *g << '\n'
                      << "mu " << cert.mu << '\n'
                      << "mu_matches " << (mu_matches ? "true" : "false") << '\n'
                      << "condition " << (condition ? "true" : "false") << '\n'
                      << "congruence " << (congruence ? "true" : "false") << '\n'
                      << "perfect " << (perfect ? "true" : "false") << '\n';
          }
          return;
        }
        if (*limit == 0) throw cace::RangeViolation("--limit is required for a scan");
        auto records = cace::scan_theorem3(*omega, *limit);
        print_scan(records, "mu", as_json, *codes, [&](const cace::ScanRecord& r) {
          return cace::theorem3_construct(r.p, r.g, *omega);
        });
      };
    });
  }

  // scan-t4
  {
    auto* cmd = app.add_subcommand("scan-t4", "scan primes admitting the 2p construction");
    add_json_flag(cmd);
    auto k = std::make_shared<u64>();
    auto limit = std::make_shared<u64>(0);
    auto codes = std::make_shared<bool>(false);
    auto p = std::make_shared<u64>(0);
    cmd->add_option("--k", *k, "weight parameter, omega = 4k+1")->required();
    cmd->add_option("--limit", *limit, "upper bound on scanned primes");
    cmd->add_option("--p", *p, "spot-check a single prime instead of scanning");
    cmd->add_flag("--codes", *codes, "also print each record's code");
    cmd->callback([&, k, limit, codes, p] {
      action = [&, k, limit, codes, p] {
        std::vector<cace::ScanRecord> records;
        if (*p != 0) {
          const u64 g = cace::smallest_primitive_root(*p);
          if (cace::theorem4_condition(*p, g, *k))
            records.push_back({*p, g, *k, (*p - 1) / (4 * *k)});
        } else {
          if (*limit == 0) throw cace::RangeViolation("--limit or --p is required");
          records = cace::scan_theorem4(*k, *limit);
        }
        print_scan(records, "k", as_json, *codes, [&](const cace::ScanRecord& r) {
          return cace::theorem4_construct(r.p, *k);
        });
      };
    });
  }

  // lemma3-check
  {
    auto* cmd = app.add_subcommand("lemma3-check",
                                   "agreement of the parity condition across all roots");
    add_json_flag(cmd);
    auto p = std::make_shared<u64>();
    auto k = std::make_shared<u64>();
    cmd->add_option("--p", *p, "odd prime with p = 1 (mod 4k)")->required();
    cmd->add_option("--k", *k, "weight parameter")->required();
    cmd->callback([&, p, k] {
      action = [&, p, k] {
        const bool agreement = cace::lemma3_check(*p, *k);
        const auto roots = cace::primitive_roots(*p);
        const bool verdict = cace::theorem4_condition(*p, roots.front(), *k);
        if (as_json) {
          json out{{"p", *p},
                   {"k", *k},
                   {"roots", roots.size()},
                   {"agreement", agreement},
                   {"verdict", verdict}};
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << "p " << *p << '\n'
                    << "k " << *k << '\n'
                    << "roots " << roots.size() << '\n'
                    << "agreement " << (agreement ? "true" : "false") << '\n'
                    << "verdict " << (verdict ? "true" : "false") << '\n';
        }
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (const cace::MalformedDocument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cace::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (best size found: " << e.best_size() << ")\n";
    return 1;
  } catch (const cace::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
