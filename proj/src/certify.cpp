#include "ppart/certify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ppart {

namespace {

const char* step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kSameSide:
      return "same-side";
    case StepKind::kDifferentSide:
      return "different-side";
    case StepKind::kUnit:
      return "unit";
  }
  return "";
}

StepKind step_kind_from(const std::string& name) {
  if (name == "same-side") return StepKind::kSameSide;
  if (name == "different-side") return StepKind::kDifferentSide;
  if (name == "unit") return StepKind::kUnit;
  throw std::invalid_argument("certificate: unknown refutation step kind '" + name + "'");
}

// Structural validity of a recorded chain: decompositions split n, primes
// are ascending clause literals of their decomposition, unit steps carry one
// prime and binary steps two. The marker form must carry no steps.
bool refutation_steps_valid(std::int64_t n, const Refutation& refutation) {
  if (refutation.exhaustive) return refutation.steps.empty();
  if (refutation.steps.empty()) return false;
  for (const auto& step : refutation.steps) {
    const auto& decomposition = step.decomposition;
    if (decomposition.n1 < 1 || decomposition.n2 < 1) return false;
    if (decomposition.n1 + decomposition.n2 != n) return false;
    const std::size_t expected = step.kind == StepKind::kUnit ? 1 : 2;
    if (step.primes.size() != expected) return false;
    if (!std::is_sorted(step.primes.begin(), step.primes.end())) return false;
    for (const std::int64_t p : step.primes) {
      if (p < 2 || p >= n) return false;
      if (decomposition.n1 % p != 0 && decomposition.n2 % p != 0) return false;
    }
  }
  return true;
}

// Evidence in a deserialized certificate may be arbitrarily broken; a check
// that cannot even run counts as failed, not as an exception.
template <typename Fn>
bool guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

Certificate certify(std::int64_t n) {
  if (n < 4) {
    throw std::invalid_argument("certify: n must be at least 4");
  }
  Certificate certificate;
  certificate.n = n;
  const auto partition = solve(n);
  if (partition) {
    certificate.verdict = Verdict::kPrimePartitionable;
    certificate.partition = *partition;
    certificate.witness = witness_from_partition(*partition);
    certificate.interval = interval_from_partition(*partition);
  } else {
    certificate.verdict = Verdict::kNotPrimePartitionable;
    Refutation refutation;
    if (const auto chain = contradiction_chain(n)) {
      refutation.steps = *chain;
    } else {
      refutation.exhaustive = true;
    }
    certificate.refutation = std::move(refutation);
  }
  certificate.checks = run_checks(certificate);
  return certificate;
}

std::vector<Check> run_checks(const Certificate& certificate) {
  std::vector<Check> checks;
  if (certificate.verdict == Verdict::kPrimePartitionable) {
    const auto& partition = certificate.partition;
    const auto& witness = certificate.witness;
    const auto& interval = certificate.interval;
    checks.push_back({"partition-verifies",
                      guarded([&] { return partition && verify_partition(*partition); })});
    checks.push_back({"witness-verifies",
                      guarded([&] { return witness && verify_witness(*witness); })});
    checks.push_back({"interval-verifies",
                      guarded([&] { return interval && verify_interval(*interval); })});
    checks.push_back({"witness-matches-partition", guarded([&] {
                        return partition && witness && *witness == witness_from_partition(*partition);
                      })});
    checks.push_back({"interval-matches-partition", guarded([&] {
                        return partition && interval && *interval == interval_from_partition(*partition);
                      })});
  } else {
    checks.push_back({"solver-confirms-negative",
                      guarded([&] { return !solve(certificate.n).has_value(); })});
    checks.push_back({"refutation-steps-valid", guarded([&] {
                        return certificate.refutation &&
                               refutation_steps_valid(certificate.n, *certificate.refutation);
                      })});
  }
  return checks;
}

bool cross_check(std::int64_t n) {
  if (n < 4) {
    throw std::invalid_argument("cross_check: n must be at least 4");
  }
  const auto partition = solve(n);
  if (!partition) return true;  // nothing claims a witness or interval exists
  return guarded([&] {
    const WitnessPair witness = witness_from_partition(*partition);
    if (!verify_witness(witness)) return false;
    if (!verify_partition(partition_from_witness(witness))) return false;
    const EWInterval interval = interval_from_partition(*partition);
    if (!verify_interval(interval)) return false;
    if (!verify_partition(partition_from_interval(interval))) return false;
    return true;
  });
}

nlohmann::ordered_json step_to_json(const ChainStep& step) {
  nlohmann::ordered_json out;
  out["kind"] = step_kind_name(step.kind);
  out["primes"] = step.primes;
  out["decomposition"] = {step.decomposition.n1, step.decomposition.n2};
  return out;
}

nlohmann::ordered_json to_json(const Certificate& certificate) {
  nlohmann::ordered_json out;
  out["n"] = certificate.n;
  out["verdict"] = certificate.verdict == Verdict::kPrimePartitionable ? "prime-partitionable"
                                                                       : "not-prime-partitionable";
  if (certificate.partition) {
    nlohmann::ordered_json partition;
    partition["p1"] = certificate.partition->part(1);
    partition["p2"] = certificate.partition->part(2);
    out["partition"] = std::move(partition);
  }
  if (certificate.witness) {
    nlohmann::ordered_json witness;
    witness["d"] = std::to_string(certificate.witness->d);
    witness["n1"] = certificate.witness->n1.str();
    witness["n2"] = certificate.witness->n2.str();
    out["witness"] = std::move(witness);
  }
  if (certificate.interval) {
    nlohmann::ordered_json interval;
    interval["e1"] = certificate.interval->e1.str();
    interval["w"] = certificate.interval->w;
    out["interval"] = std::move(interval);
  }
  if (certificate.refutation) {
    auto steps = nlohmann::ordered_json::array();
    if (certificate.refutation->exhaustive) {
      nlohmann::ordered_json marker;
      marker["kind"] = "exhaustive-search";
      steps.push_back(std::move(marker));
    } else {
      for (const auto& step : certificate.refutation->steps) {
        steps.push_back(step_to_json(step));
      }
    }
    out["refutation"] = std::move(steps);
  }
  auto checks = nlohmann::ordered_json::array();
  for (const auto& check : certificate.checks) {
    nlohmann::ordered_json item;
    item["name"] = check.name;
    item["pass"] = check.pass;
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  nlohmann::ordered_json tool;
  tool["version"] = certificate.version;
  tool["config"] = certificate.config;
  out["tool"] = std::move(tool);
  return out;
}

Certificate certificate_from_json(const nlohmann::ordered_json& encoded) {
  Certificate certificate;
  certificate.n = encoded.at("n").get<std::int64_t>();
  const auto verdict = encoded.at("verdict").get<std::string>();
  if (verdict == "prime-partitionable") {
    certificate.verdict = Verdict::kPrimePartitionable;
  } else if (verdict == "not-prime-partitionable") {
    certificate.verdict = Verdict::kNotPrimePartitionable;
  } else {
    throw std::invalid_argument("certificate: unknown verdict '" + verdict + "'");
  }
  if (encoded.contains("partition")) {
    const auto& partition = encoded.at("partition");
    certificate.partition = PrimePartition::from_parts(
        certificate.n, partition.at("p1").get<std::vector<std::int64_t>>(),
        partition.at("p2").get<std::vector<std::int64_t>>());
  }
  if (encoded.contains("witness")) {
    const auto& witness = encoded.at("witness");
    WitnessPair pair;
    pair.d = std::stoll(witness.at("d").get<std::string>());
    pair.n1 = Int(witness.at("n1").get<std::string>());
    pair.n2 = Int(witness.at("n2").get<std::string>());
    certificate.witness = std::move(pair);
  }
  if (encoded.contains("interval")) {
    const auto& interval = encoded.at("interval");
    EWInterval value;
    value.e1 = Int(interval.at("e1").get<std::string>());
    value.w = interval.at("w").get<std::int64_t>();
    certificate.interval = std::move(value);
  }
  if (encoded.contains("refutation")) {
    Refutation refutation;
    for (const auto& item : encoded.at("refutation")) {
      const auto kind = item.at("kind").get<std::string>();
      if (kind == "exhaustive-search") {
        refutation.exhaustive = true;
        continue;
      }
      ChainStep step;
      step.kind = step_kind_from(kind);
      step.primes = item.at("primes").get<std::vector<std::int64_t>>();
      const auto& decomposition = item.at("decomposition");
      step.decomposition = {decomposition.at(0).get<std::int64_t>(),
                            decomposition.at(1).get<std::int64_t>()};
      refutation.steps.push_back(std::move(step));
    }
    certificate.refutation = std::move(refutation);
  }
  for (const auto& item : encoded.at("checks")) {
    certificate.checks.push_back({item.at("name").get<std::string>(), item.at("pass").get<bool>()});
  }
  certificate.version = encoded.at("tool").at("version").get<std::string>();
  certificate.config = encoded.at("tool").at("config").get<std::string>();
  return certificate;
}

}  // namespace ppart
