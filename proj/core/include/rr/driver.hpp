/**
 * @file driver.hpp
 * @brief Command drivers behind the CLI: each run_* function executes one
 *        job described by a JobSpec and returns the process exit code.
 *
 * Exit codes: 0 success; 2 Las Vegas failure after retries (message names
 * the failing subroutine); 3 input validation or parse error; 4 method
 * assumption violated for the instance; 5 check found the assumption
 * violated (run_check only).
 *
 * With RRSPACE_DEBUG_INTERMEDIATES=1 in the environment, run_basis also
 * prints the intermediate divisors (div(h)-E, the residual and the numerator
 * divisor) to stderr; the output file is unaffected.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace rr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRetryExhausted = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitAssumption = 4;
inline constexpr int kExitCheckFailed = 5;

struct JobSpec {
    std::string command;  // basis | jacobian-add | check | gen-divisor | bench
    std::string curve_path;
    std::string dplus_path;   // basis/check: D_plus; jacobian-add: first element
    std::string dminus_path;  // basis: D_minus; jacobian-add: second element
    std::string base_path;    // jacobian-add: base point O
    std::string out_path;     // empty = stdout
    std::uint64_t seed = 0;
    std::uint64_t sample_set_size = 0;  // 0 = whole field
    int retries = 8;
    int extra_degree = 0;
    int degree_hint = 0;     // gen-divisor
    std::string degrees;     // bench sweep: "start:stop:step" or single value
};

int run_basis(const JobSpec& job);
int run_check(const JobSpec& job);
int run_gen_divisor(const JobSpec& job);
int run_jacobian_add(const JobSpec& job);
int run_bench(const JobSpec& job);

/// Dispatch on job.command; unknown commands exit with kExitValidation.
int run_job(const JobSpec& job);

}  // namespace rr
