// mpwalk: run max-plus walks, dump state-decision grids, and verify the
// library's theorem-level claims from the command line.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 usage or configuration error, 3 I/O error.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "maxplus/spectral.hpp"
#include "maxplus/walk/window.hpp"
#include "qw/closed_form.hpp"
#include "qw/konno.hpp"
#include "qw/ultradiscrete.hpp"
#include "verify_suites.hpp"

namespace {

using namespace maxplus;
using namespace maxplus::walk;
using cli::ConfigError;
using cli::IoError;

struct Opts {
  std::string coinSpec;
  std::string coinFile;
  std::string mode = "exact";
  int n = 5;
  int radius = 5;
  std::string out;
  std::string format;
  std::uint64_t seed = 12345;
  int trials = 200;
  std::string alpha = "0";
  std::string beta = "0";
  bool check = false;
  bool qwWalk = false;
  bool hadamard = false;
  bool symmetricSeed = false;
  std::vector<double> epsUd = {1e-2, 1e-3};
  std::string suite;
  std::string configFile;
};

// Flat key=value config; command-line flags always win.
void assignConfig(const std::string& key, const std::string& value, std::string& out) {
  (void)key;
  out = value;
}
void assignConfig(const std::string& key, const std::string& value, int& out) {
  const auto v = maxplus::io::parseInteger(value);
  if (!v) throw ConfigError("config key '" + key + "' needs an integer");
  out = static_cast<int>(*v);
}
void assignConfig(const std::string& key, const std::string& value,
                  std::uint64_t& out) {
  const auto v = maxplus::io::parseInteger(value);
  if (!v || *v < 0) throw ConfigError("config key '" + key + "' needs a seed");
  out = static_cast<std::uint64_t>(*v);
}
void assignConfig(const std::string& key, const std::string& value, bool& out) {
  if (value == "true" || value == "1")
    out = true;
  else if (value == "false" || value == "0")
    out = false;
  else
    throw ConfigError("config key '" + key + "' needs true/false");
}
void assignConfig(const std::string& key, const std::string& value,
                  std::vector<double>& out) {
  out.clear();
  std::istringstream is(value);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    const auto v = maxplus::io::parseDouble(cli::trim(tok));
    if (!v) throw ConfigError("config key '" + key + "' needs numbers");
    out.push_back(*v);
  }
}

void applyConfig(const CLI::App* cmd, Opts& o) {
  if (o.configFile.empty()) return;
  const auto kv = cli::loadFlatConfig(o.configFile);
  auto apply = [&](const char* key, auto& target) {
    const auto it = kv.find(key);
    if (it == kv.end()) return;
    const std::string flag = std::string("--") + key;
    if (cmd->get_option_no_throw(flag) != nullptr && cmd->count(flag) > 0)
      return;
    assignConfig(key, it->second, target);
  };
  apply("coin", o.coinSpec);
  apply("coin-file", o.coinFile);
  apply("mode", o.mode);
  apply("n", o.n);
  apply("K", o.radius);
  apply("out", o.out);
  apply("format", o.format);
  apply("seed", o.seed);
  apply("trials", o.trials);
  apply("alpha", o.alpha);
  apply("beta", o.beta);
  apply("check", o.check);
  apply("qw", o.qwWalk);
  apply("hadamard", o.hadamard);
  apply("symmetric-seed", o.symmetricSeed);
  apply("eps-ud", o.epsUd);
}

template <typename T>
Coin<T> resolveCoin(const Opts& o) {
  if (!o.coinFile.empty()) return cli::loadCoinFile<T>(o.coinFile);
  if (!o.coinSpec.empty()) return cli::parseCoinSpec<T>(o.coinSpec);
  throw ConfigError("a coin is required (--coin or --coin-file)");
}

template <typename T>
MaxScalar<T> parseSeedEntry(const std::string& tok) {
  if (maxplus::io::isEpsToken(tok)) return MaxScalar<T>::eps();
  auto v = maxplus::io::parseNumber<T>(tok);
  if (!v) throw ConfigError("bad seed entry '" + tok + "' (number or 'eps')");
  return MaxScalar<T>::finite(*v);
}

// Output routing: an explicit .csv/.json/.txt extension selects that format;
// a bare --out path gets every artifact of the command; no --out prints the
// --format artifact (or the command default) to stdout.
struct Sink {
  std::optional<std::string> csv;
  std::optional<std::string> json;
  std::optional<std::string> text;
  bool csvToStdout = false;
  bool jsonToStdout = false;
  bool textToStdout = false;
};

Sink routeOutput(const Opts& o, const std::string& defaultFormat) {
  Sink s;
  if (!o.out.empty()) {
    if (cli::endsWith(o.out, ".csv"))
      s.csv = o.out;
    else if (cli::endsWith(o.out, ".json"))
      s.json = o.out;
    else if (cli::endsWith(o.out, ".txt"))
      s.text = o.out;
    else {
      s.csv = o.out + ".csv";
      s.json = o.out + ".json";
    }
    return s;
  }
  const std::string fmt = o.format.empty() ? defaultFormat : o.format;
  s.csvToStdout = fmt == "csv";
  s.jsonToStdout = fmt == "json";
  s.textToStdout = fmt == "text";
  return s;
}

void requireNoText(const Sink& sink) {
  if (sink.text || sink.textToStdout)
    throw ConfigError("text output is only available for 'spectrum'");
}

void deliver(const std::optional<std::string>& path, bool toStdout,
             const std::string& content) {
  if (path) cli::writeFile(*path, content);
  if (toStdout) std::cout << content;
}

int cmdQw(const Opts& o) {
  qw::UnitaryCoin coin = qw::UnitaryCoin::hadamard();
  if (!o.hadamard) {
    if (o.coinSpec.empty() && o.coinFile.empty())
      throw ConfigError("qw needs --hadamard or a real-entry --coin");
    const Coin<double> c = resolveCoin<double>(o);
    try {
      coin = qw::UnitaryCoin::fromEntries(c.a, c.b, c.c, c.d);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  const double inv = 1.0 / std::sqrt(2.0);
  const qw::Vector2c phi = o.symmetricSeed
                               ? qw::Vector2c(qw::Complex(inv, 0.0), qw::Complex(0.0, inv))
                               : qw::Vector2c(1.0, 0.0);
  const auto state = qw::qwEvolve(qw::QwState::seeded(phi), coin, o.n);
  const auto mu = qw::distribution(state);

  std::ostringstream csv;
  csv << "n,k,mu\n";
  for (const auto& [k, p] : mu)
    csv << o.n << ',' << k << ',' << io::formatNumber(p) << '\n';

  nlohmann::ordered_json j;
  j["n"] = o.n;
  j["total_probability"] = qw::totalProbability(state);
  nlohmann::ordered_json cells = nlohmann::ordered_json::object();
  for (const auto& [k, v] : state.amplitudes)
    cells[std::to_string(k)] = {{v(0).real(), v(0).imag()},
                                {v(1).real(), v(1).imag()}};
  j["cells"] = std::move(cells);

  const Sink sink = routeOutput(o, "csv");
  requireNoText(sink);
  deliver(sink.csv, sink.csvToStdout, csv.str());
  deliver(sink.json, sink.jsonToStdout, j.dump(2) + "\n");
  return 0;
}

template <typename T>
int cmdEvolve(const Opts& o) {
  const Coin<T> coin = resolveCoin<T>(o);
  const auto alpha = parseSeedEntry<T>(o.alpha);
  const auto beta = parseSeedEntry<T>(o.beta);
  const auto state = evolve(WalkState<T>::seeded(alpha, beta), coin, o.n);

  std::ostringstream csv;
  csv << "n,k,lambda\n";
  for (const auto& [k, v] : state.amplitudes)
    csv << o.n << ',' << k << ','
        << io::formatNumber(sdmEigenvalue(coin, o.n, k).value) << '\n';

  nlohmann::ordered_json j;
  j["n"] = o.n;
  j["mode"] = o.mode;
  nlohmann::ordered_json cells = nlohmann::ordered_json::object();
  for (const auto& [k, v] : state.amplitudes) {
    nlohmann::ordered_json pair = nlohmann::ordered_json::array();
    for (int i = 0; i < 2; ++i) {
      if (v(i).isEps())
        pair.push_back("eps");
      else
        pair.push_back(v(i).value());
    }
    cells[std::to_string(k)] = std::move(pair);
  }
  j["cells"] = std::move(cells);

  const Sink sink = routeOutput(o, "csv");
  requireNoText(sink);
  deliver(sink.csv, sink.csvToStdout, csv.str());
  deliver(sink.json, sink.jsonToStdout, j.dump(2) + "\n");
  return 0;
}

template <typename T>
int cmdSdm(const Opts& o) {
  const Coin<T> coin = resolveCoin<T>(o);
  const auto grid = sdmRecursive(coin, o.n);
  SdmGrid<T> closed;
  closed.time = o.n;
  bool allEqual = true;
  nlohmann::ordered_json equal = nlohmann::ordered_json::object();
  std::ostringstream csv;
  csv << "n,k,equal\n";
  for (const auto& [k, mat] : grid.cells) {
    closed.cells.emplace(k, sdmClosedForm(coin, o.n, k));
    const bool eq = matEqual(closed.cells.at(k), mat);
    allEqual = allEqual && eq;
    equal[std::to_string(k)] = eq;
    csv << o.n << ',' << k << ',' << (eq ? 1 : 0) << '\n';
  }

  nlohmann::ordered_json j;
  j["n"] = o.n;
  j["recursive"] = cli::gridCellsJson(grid);
  j["closed_form"] = cli::gridCellsJson(closed);
  j["equal"] = std::move(equal);
  j["all_equal"] = allEqual;

  const Sink sink = routeOutput(o, "json");
  requireNoText(sink);
  deliver(sink.csv, sink.csvToStdout, csv.str());
  deliver(sink.json, sink.jsonToStdout, j.dump(2) + "\n");
  if (o.check && !allEqual) {
    std::cerr << "sdm: closed form and recursion disagree\n";
    return 1;
  }
  return 0;
}

template <typename T>
int cmdEig(const Opts& o) {
  const Coin<T> coin = resolveCoin<T>(o);
  std::ostringstream csv;
  csv << "n,k,lambda,branch\n";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int k = -o.n; k <= o.n; k += 2) {
    const auto eig = sdmEigenvalue(coin, o.n, k);
    csv << o.n << ',' << k << ',' << io::formatNumber(eig.value) << ','
        << cli::branchName(eig.branch) << '\n';
    nlohmann::ordered_json row;
    row["n"] = o.n;
    row["k"] = k;
    row["lambda"] = io::formatNumber(eig.value);
    row["branch"] = cli::branchName(eig.branch);
    rows.push_back(std::move(row));
  }
  const Sink sink = routeOutput(o, "csv");
  requireNoText(sink);
  deliver(sink.csv, sink.csvToStdout, csv.str());
  deliver(sink.json, sink.jsonToStdout, rows.dump(2) + "\n");
  return 0;
}

template <typename T>
int cmdConserve(const Opts& o) {
  const Coin<T> coin = resolveCoin<T>(o);
  std::ostringstream csv;
  csv << "n,eig_sum\n";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool constant = true;
  std::optional<mean_t<T>> first;
  for (int n = 1; n <= o.n; ++n) {
    const mean_t<T> sum = eigSum(coin, n);
    if (!first)
      first = sum;
    else
      constant = constant && approxEqual(sum, *first);
    csv << n << ',' << io::formatNumber(sum) << '\n';
    nlohmann::ordered_json row;
    row["n"] = n;
    row["eig_sum"] = io::formatNumber(sum);
    rows.push_back(std::move(row));
  }
  const auto rep = checkConditionA(coin);
  std::cerr << "conserve: constant=" << (constant ? "yes" : "no")
            << " condition-A=" << (rep.satisfied ? "yes" : "no") << "\n";
  const Sink sink = routeOutput(o, "csv");
  requireNoText(sink);
  deliver(sink.csv, sink.csvToStdout, csv.str());
  deliver(sink.json, sink.jsonToStdout, rows.dump(2) + "\n");
  return 0;
}

template <typename T>
int cmdSpectrum(const Opts& o) {
  const Coin<T> coin = resolveCoin<T>(o);
  const auto w = buildWindow(coin, o.radius);
  const auto value = maxCycleMean(w.matrix);
  const auto rep = checkConditionA(coin);

  std::ostringstream valueText;
  valueText << value;
  std::cerr << "spectrum: K=" << o.radius << " max cycle mean = "
            << valueText.str() << (rep.satisfied ? " (condition A)" : "")
            << "\n";

  nlohmann::ordered_json j = io::matrixToJson(w.matrix);
  nlohmann::ordered_json meta;
  meta["K"] = o.radius;
  meta["indexing"] = "(k;L,k;R) ascending k";
  meta["spectrum"] = valueText.str();
  meta["condition_a"] = rep.satisfied;
  for (auto& [key, val] : j.items()) meta[key] = std::move(val);

  std::ostringstream text;
  io::writeMatrixText(text, w.matrix);

  std::ostringstream csv;
  csv << "K,spectrum\n" << o.radius << ',' << valueText.str() << '\n';

  const Sink sink = routeOutput(o, "json");
  deliver(sink.csv, sink.csvToStdout, csv.str());
  deliver(sink.json, sink.jsonToStdout, meta.dump(2) + "\n");
  deliver(sink.text, sink.textToStdout, text.str());
  return 0;
}

int cmdUd(const Opts& o) {
  if (o.mode != "exact")
    throw ConfigError("ud runs in exact mode (integer coins)");
  const Coin<long long> coin = resolveCoin<long long>(o);
  std::ostringstream csv;
  csv << "eps_ud,n,k,row,col,deviation,bound\n";
  bool ok = true;
  double previousMax = -1.0;
  bool decreasing = true;
  // epsUd values are tried in the given order; deviations must shrink when
  // the list is ordered large-to-small
  for (double eps : o.epsUd) {
    const auto report = qw::ultradiscretizationCheck(coin, eps, o.n);
    ok = ok && report.structureOk && report.withinBound;
    if (previousMax >= 0 && report.maxDeviation >= previousMax)
      decreasing = false;
    previousMax = report.maxDeviation;
    for (const auto& e : report.entries)
      csv << io::formatNumber(eps) << ',' << o.n << ',' << e.k << ',' << e.row
          << ',' << e.col << ',' << io::formatNumber(e.deviation) << ','
          << io::formatNumber(report.bound) << '\n';
    std::cerr << "ud: eps=" << io::formatNumber(eps)
              << " max deviation = " << io::formatNumber(report.maxDeviation)
              << " bound = " << io::formatNumber(report.bound) << "\n";
  }
  const Sink sink = routeOutput(o, "csv");
  requireNoText(sink);
  deliver(sink.csv, sink.csvToStdout, csv.str());
  if (!ok || (o.epsUd.size() > 1 && !decreasing)) {
    std::cerr << "ud: deviation check failed\n";
    return 1;
  }
  return 0;
}

void addCommonOptions(CLI::App* cmd, Opts& o, bool wantsCoin = true) {
  if (wantsCoin) {
    cmd->add_option("--coin", o.coinSpec, "coin entries a=..,b=..,c=..,d=..");
    cmd->add_option("--coin-file", o.coinFile,
                    "coin file: key=value lines or JSON {\"a\":..}");
    cmd->add_option("--mode", o.mode, "numeric mode")
        ->check(CLI::IsMember({"exact", "float"}));
  }
  cmd->add_option("--out", o.out,
                  "output path (.csv/.json/.txt selects the artifact)");
  cmd->add_option("--format", o.format, "stdout format")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd->add_option("--config", o.configFile,
                  "flat key=value config file; flags override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-plus walk simulator and verifier"};
  app.require_subcommand(1);

  Opts o;
  int rc = 0;

  auto* evolve =
      app.add_subcommand("evolve", "run the walk; emits the state (json) and "
                                   "per-position eigenvalues (csv)");
  addCommonOptions(evolve, o);
  evolve->add_option("--n", o.n, "number of steps")->capture_default_str();
  evolve->add_option("--alpha", o.alpha, "seed L component (number or 'eps')");
  evolve->add_option("--beta", o.beta, "seed R component (number or 'eps')");
  evolve->add_flag("--qw", o.qwWalk, "run the complex quantum walk instead");
  evolve->add_flag("--hadamard", o.hadamard, "use the Hadamard coin (with --qw)");
  evolve->add_flag("--symmetric-seed", o.symmetricSeed,
                   "seed [1,i]/sqrt(2) (with --qw)");
  evolve->callback([&] {
    applyConfig(evolve, o);
    if (o.qwWalk) {
      rc = cmdQw(o);
    } else {
      rc = o.mode == "float" ? cmdEvolve<double>(o) : cmdEvolve<long long>(o);
    }
  });

  auto* qwCmd = app.add_subcommand(
      "qw", "run the complex quantum walk; emits the distribution (csv)");
  addCommonOptions(qwCmd, o);
  qwCmd->add_option("--n", o.n, "number of steps")->capture_default_str();
  qwCmd->add_flag("--hadamard", o.hadamard, "use the Hadamard coin");
  qwCmd->add_flag("--symmetric-seed", o.symmetricSeed, "seed [1,i]/sqrt(2)");
  qwCmd->callback([&] {
    applyConfig(qwCmd, o);
    rc = cmdQw(o);
  });

  auto* sdm = app.add_subcommand(
      "sdm", "recursive and closed-form state decision grids with equality flags");
  addCommonOptions(sdm, o);
  sdm->add_option("--n", o.n, "time step")->capture_default_str();
  sdm->add_flag("--check", o.check, "exit 1 when any cell disagrees");
  sdm->callback([&] {
    applyConfig(sdm, o);
    rc = o.mode == "float" ? cmdSdm<double>(o) : cmdSdm<long long>(o);
  });

  auto* eig = app.add_subcommand("eig",
                                 "eigenvalues of A_k^n across the support");
  addCommonOptions(eig, o);
  eig->add_option("--n", o.n, "time step")->capture_default_str();
  eig->callback([&] {
    applyConfig(eig, o);
    rc = o.mode == "float" ? cmdEig<double>(o) : cmdEig<long long>(o);
  });

  auto* conserve = app.add_subcommand(
      "conserve", "eigenvalue sums for n = 1..N and the conservation verdict");
  addCommonOptions(conserve, o);
  conserve->add_option("--n", o.n, "largest time step")->capture_default_str();
  conserve->callback([&] {
    applyConfig(conserve, o);
    rc = o.mode == "float" ? cmdConserve<double>(o) : cmdConserve<long long>(o);
  });

  auto* spectrum = app.add_subcommand(
      "spectrum", "window operator dump and its max cycle mean");
  addCommonOptions(spectrum, o);
  spectrum->add_option("--K", o.radius, "window radius")->capture_default_str();
  spectrum->callback([&] {
    applyConfig(spectrum, o);
    rc = o.mode == "float" ? cmdSpectrum<double>(o) : cmdSpectrum<long long>(o);
  });

  auto* ud = app.add_subcommand(
      "ud", "ultradiscretization deviation report against the max-plus walk");
  addCommonOptions(ud, o);
  ud->add_option("--n", o.n, "number of steps")->capture_default_str();
  ud->add_option("--eps-ud", o.epsUd,
                 "ultradiscretization epsilons, largest first")
      ->expected(-1);
  ud->callback([&] {
    applyConfig(ud, o);
    rc = cmdUd(o);
  });

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", o.suite,
                     "table1 | thm3-1 | thm4-1 | thm5-1 | ud | weak-limit | all")
      ->required();
  verify->add_option("--trials", o.trials, "number of random coins")
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  verify->add_option("--n", o.n, "step bound (suite-specific default)");
  verify->add_option("--K", o.radius, "window radius (thm5-1)");
  verify->add_option("--out", o.out, "CSV report target (weak-limit)");
  verify->add_option("--config", o.configFile, "flat key=value config file");
  verify->callback([&] {
    applyConfig(verify, o);
    suites::Options sopt;
    sopt.seed = o.seed;
    sopt.trials = o.trials;
    sopt.steps = verify->count("--n") ? o.n : 0;
    sopt.radius = verify->count("--K") ? o.radius : 0;
    if (!o.out.empty()) sopt.csvOut = o.out;
    rc = suites::runSuite(o.suite, sopt, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
