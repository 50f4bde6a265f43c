#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace econolab::verify {

/// One acceptance measurement: pass iff |measured - target| <= tolerance.
struct VerifyCheck {
  std::string name;
  std::string quantity;
  double target = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time_s = 0.0;
};

struct VerifyReport {
  std::string version;
  std::uint64_t seed = 0;
  int threads = 1;
  bool overall_pass = false;
  std::vector<VerifyCheck> checks;
};

/// Runs the full acceptance battery. Every stochastic check derives its
/// streams from the master seed by check label, so the measured values are
/// bit-reproducible for a given seed and independent of the thread count;
/// threads only split embarrassingly parallel batches over fixed-size chunks.
VerifyReport run_verification(std::uint64_t seed, int threads = 1);

std::string report_to_json(const VerifyReport& report);

}  // namespace econolab::verify
