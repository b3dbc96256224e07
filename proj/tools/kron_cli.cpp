// kron: command-line front end for Kronecker-type coefficients and the
// combinatorics of the interpolation category at integer parameters.
//
// Every invocation prints exactly one JSON object on stdout.
// Exit codes: 0 success, 2 usage or precondition error, 1 internal failure
// (including a verification suite that reports violations).

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kron/cache.hpp"
#include "kron/coefficients.hpp"
#include "kron/deligne.hpp"
#include "kron/identities.hpp"

namespace {

using nlohmann::ordered_json;
using namespace kron;

struct Options {
  std::string lam, mu, tau;
  int n = -1;
  int depth = 3;
  std::optional<int> at;
  std::optional<int> from, to;
  std::string method = "characters";
  std::string suite;
  int max_size = 3;
  int n_max = 8;
  int lo = 0, hi = 4;
  int span = 4;
  bool serial = false;
  std::string out;
  std::string cache;
};

struct UsageError : Error {
  using Error::Error;
};

int emit(const ordered_json& doc, int code = 0) {
  std::cout << doc.dump() << '\n';
  return code;
}

int emit_error(const std::string& kind, const std::string& message, int code) {
  return emit(ordered_json{{"error", message}, {"type", kind}}, code);
}

std::unique_ptr<CoefficientCache> open_cache(const Options& opt) {
  std::optional<std::filesystem::path> path;
  if (!opt.cache.empty()) {
    path = opt.cache;
  } else {
    path = cache_path_from_environment();
  }
  if (!path) return nullptr;
  auto cache = std::make_unique<CoefficientCache>(*path);
  for (const auto& warning : cache->warnings()) std::cerr << "warning: " << warning << '\n';
  return cache;
}

IntegerParameter require_n(const Options& opt) {
  if (opt.n < 0) throw UsageError("--n is required and must be non-negative");
  return IntegerParameter(opt.n);
}

ordered_json record(CoefficientKind kind, const Partition& lam, const Partition& mu,
                    const Partition& tau, std::optional<int> n, const BigInt& value) {
  ordered_json doc{{"kind", std::string(to_string(kind))},
                   {"lambda", to_string(lam)},
                   {"mu", to_string(mu)},
                   {"tau", to_string(tau)}};
  if (n) doc["n"] = *n;
  doc["value"] = value.get_str();
  return doc;
}

ordered_json encode_all(const std::vector<Partition>& parts) {
  ordered_json out = ordered_json::array();
  for (const auto& p : parts) out.push_back(to_string(p));
  return out;
}

int run_coefficient(const std::string& command, const Options& opt) {
  const Partition lam = parse_partition(opt.lam);
  const Partition mu = parse_partition(opt.mu);
  const Partition tau = parse_partition(opt.tau);
  auto cache = open_cache(opt);
  CacheKey key{CoefficientKind::g, lam, mu, tau, std::nullopt};
  std::function<BigInt()> compute;
  if (command == "g") {
    compute = [&] { return kronecker(lam, mu, tau); };
  } else if (command == "reduced") {
    key.kind = CoefficientKind::gbar;
    compute = [&] { return reduced_kronecker(lam, mu, tau); };
  } else if (command == "lr") {
    key.kind = CoefficientKind::lr;
    if (opt.method != "characters" && opt.method != "tableaux") {
      throw UsageError("--method must be 'characters' or 'tableaux'");
    }
    const LrMethod method = opt.method == "tableaux" ? LrMethod::tableaux : LrMethod::characters;
    compute = [&, method] { return littlewood_richardson(lam, mu, tau, method); };
  } else {
    key.kind = CoefficientKind::mult;
    key.n = require_n(opt).value();
    compute = [&] { return multiplicity_at_integer(mu, tau, lam, IntegerParameter(opt.n)); };
  }
  const BigInt value = cached_value(cache.get(), key, compute);
  return emit(record(key.kind, lam, mu, tau, key.n, value));
}

int run_class(const Options& opt) {
  const Partition lam = parse_partition(opt.lam);
  const IntegerParameter n = require_n(opt);
  if (opt.depth < 0) throw UsageError("--depth must be non-negative");
  const ClassPosition position = locate_in_class(lam, n);
  ordered_json doc{{"lambda", to_string(lam)}, {"n", n.value()}, {"trivial", position.trivial}};
  if (position.trivial) {
    doc["chain"] = encode_all({lam});
  } else {
    doc["minimal"] = to_string(position.minimal);
    doc["index"] = position.index;
    ClassChain chain(position.minimal, n);
    doc["chain"] = encode_all(chain.prefix(static_cast<std::size_t>(opt.depth)));
  }
  return emit(doc);
}

int run_dimpoly(const Options& opt) {
  const Partition lam = parse_partition(opt.lam);
  const DimensionPolynomial poly = dimension_polynomial(lam);
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : poly.coefficients()) coeffs.push_back(c.get_str());
  ordered_json doc{{"lambda", to_string(lam)},
                   {"degree", poly.degree()},
                   {"coefficients", coeffs},
                   {"polynomial", poly.to_string()}};
  if (opt.at) doc["value_at"] = {{"d", *opt.at}, {"value", poly(Rational(*opt.at)).get_str()}};
  return emit(doc);
}

int run_stabilize(const Options& opt) {
  const Partition lam = parse_partition(opt.lam);
  const Partition mu = parse_partition(opt.mu);
  const Partition tau = parse_partition(opt.tau);
  const int from = opt.from.value_or(stabilization_start(lam, mu, tau));
  const int to = opt.to.value_or(std::max(from, stabilization_bound(lam, mu, tau)) + 2);
  const auto window = stabilization_sequence(lam, mu, tau, from, to);
  ordered_json samples = ordered_json::array();
  for (const auto& [n, value] : window.samples) {
    samples.push_back({{"n", n}, {"value", value.get_str()}});
  }
  return emit({{"lambda", to_string(lam)},
               {"mu", to_string(mu)},
               {"tau", to_string(tau)},
               {"n_start", window.n_start},
               {"n_stable", window.n_stable},
               {"samples", samples}});
}

int run_verify(const Options& opt) {
  const Execution exec = opt.serial ? Execution::serial : Execution::parallel;
  const OffsetRange range{opt.lo, opt.hi};
  const std::string& s = opt.suite;
  VerificationReport report;
  if (s == "alternating") {
    report = check_alternating_sum(opt.max_size, range, exec);
  } else if (s == "sandwich") {
    report = check_maximum_and_sandwich(opt.max_size, range, exec);
  } else if (s == "dagger") {
    report = check_dagger_identity(require_n(opt).value(), exec);
  } else if (s == "dagger-chain") {
    report = check_dagger_chain(require_n(opt).value(), exec);
  } else if (s == "trivial") {
    report = check_trivial_class_vanishing(opt.max_size, opt.n_max, exec);
  } else if (s == "projective") {
    report = check_projective_pairing(opt.max_size, opt.n_max, exec);
  } else if (s == "symmetry") {
    report = check_symmetry(opt.max_size, exec);
  } else if (s == "murnaghan-littlewood") {
    report = check_murnaghan_littlewood(opt.max_size, exec);
  } else if (s == "lr-boundary") {
    report = check_lr_boundary(opt.max_size, exec);
  } else if (s == "roots") {
    report = check_dimension_roots(opt.max_size, exec);
  } else if (s == "stabilization") {
    report = check_stabilization(opt.max_size, OffsetRange{opt.lo, opt.hi}, exec);
  } else if (s == "multiplicities") {
    report = check_integer_multiplicities(opt.max_size, range, exec);
  } else if (s == "semisimple") {
    report = check_semisimple_range(opt.max_size, opt.span, exec);
  } else if (s == "global") {
    report = check_global(opt.max_size, exec);
  } else {
    throw UsageError("unknown suite '" + s + "'");
  }
  std::cout << to_json(report) << '\n';
  return report.passed() ? 0 : 1;
}

int run_table(const Options& opt) {
  auto cache = open_cache(opt);
  const auto rows = reduced_kronecker_table(opt.max_size, cache.get(),
                                            opt.serial ? Execution::serial : Execution::parallel);
  std::ofstream out(opt.out, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open table output " + opt.out);
  write_table_csv(out, rows);
  if (!out.flush()) throw IoError("failed writing table output " + opt.out);
  ordered_json doc{{"out", opt.out}, {"max_size", opt.max_size}, {"rows", rows.size()}};
  if (cache) doc["cache"] = cache->path().string();
  return emit(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker, reduced Kronecker and Littlewood-Richardson coefficients"};
  app.require_subcommand(1);
  Options opt;

  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("lambda", opt.lam, "partition, e.g. 2,1 or - for empty")->required();
    sub->add_option("mu", opt.mu)->required();
    sub->add_option("tau", opt.tau)->required();
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache", opt.cache, "JSON-lines cache file (default: $KRON_CACHE)");
  };

  auto* g = app.add_subcommand("g", "Kronecker coefficient g^lambda_{mu,tau}");
  add_triple(g);
  add_cache(g);
  auto* reduced = app.add_subcommand("reduced", "reduced Kronecker coefficient");
  add_triple(reduced);
  add_cache(reduced);
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  add_triple(lr);
  add_cache(lr);
  lr->add_option("--method", opt.method, "characters or tableaux");
  auto* mult = app.add_subcommand("mult", "multiplicity of X_lambda in X_mu (x) X_tau at t = n");
  add_triple(mult);
  add_cache(mult);
  mult->add_option("--n", opt.n)->required();

  auto* cls = app.add_subcommand("class", "equivalence class of a diagram at t = n");
  cls->add_option("lambda", opt.lam)->required();
  cls->add_option("--n", opt.n)->required();
  cls->add_option("--depth", opt.depth, "last chain index to print");
  auto* lift_cmd = app.add_subcommand("lift", "lift of X_lambda to the generic parameter");
  lift_cmd->add_option("lambda", opt.lam)->required();
  lift_cmd->add_option("--n", opt.n)->required();
  auto* status = app.add_subcommand("status", "simple/projective status at t = n");
  status->add_option("lambda", opt.lam)->required();
  status->add_option("--n", opt.n)->required();
  auto* dimpoly = app.add_subcommand("dimpoly", "dimension polynomial P_lambda(T)");
  dimpoly->add_option("lambda", opt.lam)->required();
  dimpoly->add_option("--at", opt.at, "also evaluate at this integer");

  auto* stabilize = app.add_subcommand("stabilize", "g of the tilde diagrams over a range of n");
  add_triple(stabilize);
  stabilize->add_option("--from", opt.from);
  stabilize->add_option("--to", opt.to);

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", opt.suite,
                     "alternating, sandwich, dagger, dagger-chain, trivial, projective, symmetry, "
                     "murnaghan-littlewood, lr-boundary, roots, stabilization, multiplicities, "
                     "semisimple, global")
      ->required();
  verify->add_option("--max-size", opt.max_size);
  verify->add_option("--n", opt.n, "n for the dagger suites");
  verify->add_option("--n-max", opt.n_max);
  verify->add_option("--lo", opt.lo, "window start offset from N");
  verify->add_option("--hi", opt.hi, "window end offset from N");
  verify->add_option("--span", opt.span, "extra n values past 2N-1 (semisimple)");
  verify->add_flag("--serial", opt.serial, "use the serial reference loop");

  auto* table = app.add_subcommand("table", "write the reduced Kronecker table as CSV");
  table->add_option("--max-size", opt.max_size)->required();
  table->add_option("--out", opt.out)->required();
  add_cache(table);
  table->add_flag("--serial", opt.serial);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("UsageError", e.what(), 2);
  }

  try {
    if (*g) return run_coefficient("g", opt);
    if (*reduced) return run_coefficient("reduced", opt);
    if (*lr) return run_coefficient("lr", opt);
    if (*mult) return run_coefficient("mult", opt);
    if (*cls) return run_class(opt);
    if (*lift_cmd) {
      const Partition lam = parse_partition(opt.lam);
      return emit({{"lambda", to_string(lam)},
                   {"n", require_n(opt).value()},
                   {"lift", encode_all(lift(lam, require_n(opt)))}});
    }
    if (*status) {
      const Partition lam = parse_partition(opt.lam);
      return emit({{"lambda", to_string(lam)},
                   {"n", require_n(opt).value()},
                   {"status", std::string(to_string(object_status(lam, require_n(opt))))}});
    }
    if (*dimpoly) return run_dimpoly(opt);
    if (*stabilize) return run_stabilize(opt);
    if (*verify) return run_verify(opt);
    if (*table) return run_table(opt);
  } catch (const UsageError& e) {
    return emit_error("UsageError", e.what(), 2);
  } catch (const ParseError& e) {
    return emit_error("ParseError", e.what(), 2);
  } catch (const NotWeaklyDecreasing& e) {
    return emit_error("NotWeaklyDecreasing", e.what(), 2);
  } catch (const BoundViolation& e) {
    return emit_error("BoundViolation", e.what(), 2);
  } catch (const SizeMismatch& e) {
    return emit_error("SizeMismatch", e.what(), 2);
  } catch (const NotMinimal& e) {
    return emit_error("NotMinimal", e.what(), 2);
  } catch (const IoError& e) {
    return emit_error("IoError", e.what(), 1);
  } catch (const std::exception& e) {
    return emit_error("InternalError", e.what(), 1);
  }
  return emit_error("UsageError", "no subcommand", 2);
}
