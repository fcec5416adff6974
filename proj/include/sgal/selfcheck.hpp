#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sgal/sgal3.hpp"

namespace sgal::selfcheck {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
};

using ExpFn = std::function<GalileanTransform(const TangentVector&)>;

/// exp_fn against the 5x5 scaling-and-squaring series on `count` random
/// tangents with |xi| <= 10.
CheckResult exp_series(const ExpFn& exp_fn, int count, std::uint64_t seed);

CheckResult so3_series(int count, std::uint64_t seed);
CheckResult log_exp_round_trip(int count, std::uint64_t seed);
CheckResult exp_log_round_trip(int count, std::uint64_t seed);
CheckResult group_axioms(int count, std::uint64_t seed);
CheckResult adjoint_conjugation(int count, std::uint64_t seed);
CheckResult ad_commutator(int count, std::uint64_t seed);
CheckResult adjoint_exp(int count, std::uint64_t seed);
CheckResult event_symmetry(int count, std::uint64_t seed);

/// All checks with fixed seeds.
std::vector<CheckResult> run_all();

}  // namespace sgal::selfcheck
