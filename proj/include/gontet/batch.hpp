#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gontet/bigint.hpp"
#include "gontet/surd.hpp"
#include "gontet/triples.hpp"

namespace gontet {

/// Worker count for the parallel kernels; 0 means the OpenMP default.
struct Jobs {
  int count = 0;
};

// Batch evaluation. The *_serial versions are the reference
// implementations the parallel kernels are tested against.
std::vector<BigInt> gon3_batch(std::span<const Triple> in, Jobs jobs = {});
std::vector<BigInt> gon3_batch_serial(std::span<const Triple> in);
std::vector<BigInt> tet_batch(std::span<const TetLabels> in, Jobs jobs = {});
std::vector<BigInt> tet_batch_serial(std::span<const TetLabels> in);
std::vector<Surd> sixj_batch(std::span<const TetLabels> in, Jobs jobs = {});
std::vector<Surd> sixj_batch_serial(std::span<const TetLabels> in);

/// Pass/fail tally of an identity suite; `failures` keeps the first few
/// failing instances in input order.
struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0 && passed > 0; }
  SuiteResult& operator+=(const SuiteResult& rhs);
};

/// Runs check(i) for i < n. With serial = true it is a plain loop; otherwise
/// instances are spread over OpenMP threads. The tally is identical either
/// way.
SuiteResult run_checks(const std::string& name, std::size_t n,
                       const std::function<bool(std::size_t, std::string&)>& check, Jobs jobs,
                       bool serial = false);

struct SuiteOptions {
  int max = 20;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  Jobs jobs;
  bool serial = false;
};

SuiteResult duality_exhaustive_suite(const SuiteOptions& o);  // all a,b,c,d <= max
SuiteResult duality_random_suite(const SuiteOptions& o);
SuiteResult pascal_suite(const SuiteOptions& o);        // admissible triples <= max
SuiteResult beta_suite(const SuiteOptions& o);
SuiteResult divisibility_suite(const SuiteOptions& o);
SuiteResult regge_suite(const SuiteOptions& o);
SuiteResult symmetry_suite(const SuiteOptions& o);
SuiteResult biunitarity_suite(const SuiteOptions& o);
SuiteResult pentagon_suite(const SuiteOptions& o);
SuiteResult barycentric_suite(const SuiteOptions& o);
SuiteResult spinnet_suite(const SuiteOptions& o);
SuiteResult q_duality_suite(const SuiteOptions& o);      // all a,b,c,d <= max
SuiteResult q_specialization_suite(const SuiteOptions& o);

/// Names accepted by run_suite.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace gontet
