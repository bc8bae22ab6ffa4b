#include "ppart/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ppart/certify.hpp"
#include "ppart/erdoswoods.hpp"
#include "ppart/numtheory.hpp"
#include "ppart/partition.hpp"

namespace ppart {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

// The exhaustive oracle walks 2^(pi(n)-1) assignments; pi(n) <= 26 caps that
// at 2^25. The largest admissible n is 103.
constexpr std::int64_t kOracleMaxN = 103;

int default_jobs() {
  const unsigned hardware = std::thread::hardware_concurrency();
  return hardware == 0 ? 1 : static_cast<int>(hardware);
}

// Applies fn to every index in [0, count); results must be written to
// per-index slots so the merge order is fixed regardless of scheduling.
template <typename Fn>
void parallel_index(std::int64_t count, int jobs, Fn&& fn) {
  const int workers = static_cast<int>(std::min<std::int64_t>(std::max(jobs, 1), std::max<std::int64_t>(count, 1)));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::int64_t i = t; i < count; i += workers) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
}

bool decide(std::int64_t n, bool oracle) {
  if (n < 4) return false;
  if (oracle) return !enumerate_partitions(n).empty();
  return solve(n).has_value();
}

// All prime partitionable n in [4, limit], decided in parallel.
std::vector<std::int64_t> sweep_pp(std::int64_t limit, int jobs, bool oracle) {
  if (limit < 4) return {};
  const std::int64_t count = limit - 3;
  std::vector<char> verdicts(static_cast<std::size_t>(count), 0);
  parallel_index(count, jobs, [&](std::int64_t i) { verdicts[static_cast<std::size_t>(i)] = decide(i + 4, oracle) ? 1 : 0; });
  std::vector<std::int64_t> hits;
  for (std::int64_t i = 0; i < count; ++i) {
    if (verdicts[static_cast<std::size_t>(i)]) hits.push_back(i + 4);
  }
  return hits;
}

int oracle_overrun(std::int64_t n, std::ostream& err) {
  err << "error: --oracle supports n <= " << kOracleMaxN << " (more than 26 primes below " << n
      << ")\n";
  return kExitUsage;
}

int run_enumerate(std::int64_t limit, int jobs, bool oracle, const std::string& format,
                  std::ostream& out, std::ostream& err) {
  if (oracle && limit > kOracleMaxN) return oracle_overrun(limit, err);
  const auto hits = sweep_pp(limit, jobs, oracle);
  if (format == "json") {
    out << nlohmann::ordered_json(hits).dump() << "\n";
  } else {
    for (const std::int64_t n : hits) out << n << "\n";
  }
  return kExitOk;
}

int run_check(std::int64_t n, bool oracle, const std::string& format, std::ostream& out,
              std::ostream& err) {
  if (oracle && n > kOracleMaxN) return oracle_overrun(n, err);
  const bool verdict = decide(n, oracle);
  if (format == "json") {
    nlohmann::ordered_json body;
    body["n"] = n;
    body["prime_partitionable"] = verdict;
    out << body.dump() << "\n";
  } else {
    out << (verdict ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_certify(std::int64_t n, const std::string& out_path, const std::string& format,
                std::ostream& out, std::ostream& err) {
  const Certificate certificate = certify(n);
  const auto encoded = to_json(certificate);
  std::size_t passed = 0;
  for (const auto& check : certificate.checks) {
    if (check.pass) ++passed;
  }
  const bool all_pass = passed == certificate.checks.size();

  if (out_path.empty()) {
    out << encoded.dump(2) << "\n";
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    file << encoded.dump(2) << "\n";
    if (format == "json") {
      nlohmann::ordered_json summary;
      summary["n"] = certificate.n;
      summary["verdict"] = encoded.at("verdict");
      summary["checks_passed"] = passed;
      summary["checks_total"] = certificate.checks.size();
      summary["path"] = out_path;
      out << summary.dump() << "\n";
    } else {
      out << certificate.n << ": " << encoded.at("verdict").get<std::string>() << " (checks "
          << passed << "/" << certificate.checks.size() << ")\n";
      err << "wrote certificate to " << out_path << "\n";
    }
  }
  if (!all_pass) {
    err << "error: " << (certificate.checks.size() - passed) << " certificate check(s) failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

int run_corrigendum(int jobs, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto corrected = sweep_pp(100, jobs, false);
  const auto chain = contradiction_chain(52);
  if (!chain) {
    err << "error: no contradiction chain for 52\n";
    return kExitVerification;
  }
  if (format == "json") {
    nlohmann::ordered_json body;
    body["corrected_list"] = corrected;
    body["excluded"] = 52;
    auto steps = nlohmann::ordered_json::array();
    for (const auto& step : *chain) steps.push_back(step_to_json(step));
    body["chain"] = std::move(steps);
    out << body.dump() << "\n";
  } else {
    out << "corrected list (4..100):";
    for (const std::int64_t n : corrected) out << " " << n;
    out << "\n";
    out << "excluded: 52\n";
    out << "refutation of 52:\n";
    for (const auto& step : *chain) out << "  " << step.text() << "\n";
  }
  return kExitOk;
}

int run_ew_min(std::int64_t w, std::int64_t bound, int jobs, const std::string& format,
               std::ostream& out, std::ostream& err) {
  (void)err;
  const auto e1 = min_interval_start(w, bound, jobs);
  if (format == "json") {
    nlohmann::ordered_json body;
    body["w"] = w;
    body["bound"] = bound;
    if (e1) {
      body["e1"] = e1->str();
    } else {
      body["e1"] = nullptr;
    }
    out << body.dump() << "\n";
  } else {
    if (e1) {
      out << e1->str() << "\n";
    } else {
      out << "none within bound\n";
    }
  }
  return kExitOk;
}

int run_cross_check(std::int64_t limit, int jobs, const std::string& format, std::ostream& out,
                    std::ostream& err) {
  std::vector<std::int64_t> failures;
  if (limit >= 4) {
    const std::int64_t count = limit - 3;
    std::vector<char> agree(static_cast<std::size_t>(count), 1);
    parallel_index(count, jobs, [&](std::int64_t i) { agree[static_cast<std::size_t>(i)] = cross_check(i + 4) ? 1 : 0; });
    for (std::int64_t i = 0; i < count; ++i) {
      if (!agree[static_cast<std::size_t>(i)]) failures.push_back(i + 4);
    }
  }
  if (format == "json") {
    nlohmann::ordered_json body;
    body["limit"] = limit;
    body["failures"] = failures;
    out << body.dump() << "\n";
  } else {
    for (const std::int64_t n : failures) out << "disagree: " << n << "\n";
    out << "checked 4.." << limit << ": " << failures.size() << " disagreement(s)\n";
  }
  if (!failures.empty()) {
    err << "error: characterizations disagree\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"prime partitionable numbers: decision, enumeration, conversions, certificates"};
  app.name("ppart");

  int jobs = default_jobs();
  bool oracle = false;
  std::string format = "text";
  app.add_option("--jobs", jobs, "worker threads for sweeps and interval scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--oracle", oracle,
               "decide by the exhaustive oracle instead of the solver (enumerate, check)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.require_subcommand(1);

  std::int64_t enumerate_limit = 0;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "list prime partitionable numbers up to a limit");
  cmd_enumerate->add_option("--limit", enumerate_limit, "inclusive upper bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_enumerate->fallthrough();

  std::int64_t check_n = 0;
  auto* cmd_check = app.add_subcommand("check", "decide one integer (yes/no)");
  cmd_check->add_option("n", check_n, "integer to decide")->required()->check(CLI::PositiveNumber);
  cmd_check->fallthrough();

  std::int64_t certify_n = 0;
  std::string certify_out;
  auto* cmd_certify = app.add_subcommand("certify", "emit a verifiable certificate for one integer");
  cmd_certify->add_option("n", certify_n, "integer to certify (at least 4)")->required();
  cmd_certify->add_option("--out", certify_out, "write the certificate JSON to this path");
  cmd_certify->fallthrough();

  auto* cmd_corrigendum =
      app.add_subcommand("corrigendum", "print the corrected list up to 100 and the 52 refutation");
  cmd_corrigendum->fallthrough();

  std::int64_t ew_w = 0;
  std::int64_t ew_bound = 0;
  auto* cmd_ew_min = app.add_subcommand("ew-min", "smallest Erdős–Woods interval start for a width");
  cmd_ew_min->add_option("w", ew_w, "interval width (at least 4)")->required();
  cmd_ew_min->add_option("--bound", ew_bound, "inclusive search bound for e1")->required();
  cmd_ew_min->fallthrough();

  std::int64_t cross_limit = 0;
  auto* cmd_cross = app.add_subcommand("cross-check", "verify the three characterizations agree");
  cmd_cross->add_option("--limit", cross_limit, "inclusive upper bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_cross->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_enumerate->parsed()) return run_enumerate(enumerate_limit, jobs, oracle, format, out, err);
    if (cmd_check->parsed()) return run_check(check_n, oracle, format, out, err);
    if (cmd_certify->parsed()) {
      if (certify_n < 4) {
        err << "error: certify requires n >= 4\n";
        return kExitUsage;
      }
      return run_certify(certify_n, certify_out, format, out, err);
    }
    if (cmd_corrigendum->parsed()) return run_corrigendum(jobs, format, out, err);
    if (cmd_ew_min->parsed()) {
      if (ew_w < 4) {
        err << "error: ew-min requires a width of at least 4\n";
        return kExitUsage;
      }
      if (ew_bound < 2) {
        err << "error: ew-min requires a bound of at least 2\n";
        return kExitUsage;
      }
      return run_ew_min(ew_w, ew_bound, jobs, format, out, err);
    }
    if (cmd_cross->parsed()) return run_cross_check(cross_limit, jobs, format, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace ppart
