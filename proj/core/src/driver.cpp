#include "rr/driver.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rr/errors.hpp"
#include "rr/io.hpp"
#include "rr/jacobian.hpp"

namespace rr {

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write file: " + out_path);
    f << text;
    if (!f) throw Error("write failed: " + out_path);
}

RandomConfig config_of(const JobSpec& job) {
    RandomConfig cfg;
    cfg.sample_set_size = job.sample_set_size;
    cfg.retry_budget = job.retries;
    return cfg;
}

std::vector<std::string> run_headers(const JobSpec& job) {
    std::ostringstream a, b;
    a << "rng=" << kRngAlgorithm << " seed=" << job.seed;
    b << "sample-set=" << job.sample_set_size << " retries=" << job.retries
      << " extra-degree=" << job.extra_degree;
    return {a.str(), b.str()};
}

bool debug_intermediates() {
    const char* v = std::getenv("RRSPACE_DEBUG_INTERMEDIATES");
    return v && std::string(v) == "1";
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const RetryExhaustedError& e) {
        std::cerr << "error: retries exhausted in " << e.subroutine << ": "
                  << e.what() << '\n';
        return kExitRetryExhausted;
    } catch (const ZerosAtInfinityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRetryExhausted;
    } catch (const AssumptionViolatedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAssumption;
    } catch (const ValidationError& e) {  // includes ParseError
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const InsufficientFieldError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}

Curve load_curve(const JobSpec& job) {
    if (job.curve_path.empty())
        throw ValidationError("--curve is required");
    return parse_curve_file(job.curve_path);
}

// Bench degree sweep: "start:stop:step" (inclusive) or a single value.
std::vector<int> parse_degrees(const std::string& text) {
    if (text.empty())
        throw ValidationError("--degrees is required for bench");
    std::vector<long long> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ':')) {
        try {
            std::size_t pos = 0;
            parts.push_back(std::stoll(cur, &pos));
            if (pos != cur.size()) throw std::invalid_argument(cur);
        } catch (const std::exception&) {
            throw ValidationError("invalid --degrees value: \"" + text + "\"");
        }
    }
    std::vector<int> out;
    if (parts.size() == 1) {
        out.push_back(static_cast<int>(parts[0]));
    } else if (parts.size() == 3) {
        long long start = parts[0], stop = parts[1], step = parts[2];
        if (step <= 0 || start < 1 || stop < start)
            throw ValidationError("invalid --degrees range: \"" + text + "\"");
        for (long long d = start; d <= stop; d += step)
            out.push_back(static_cast<int>(d));
    } else {
        throw ValidationError(
            "--degrees expects a value or start:stop:step, got \"" + text +
            "\"");
    }
    for (int d : out)
        if (d < 1) throw ValidationError("degrees must be >= 1");
    return out;
}

}  // namespace

int run_basis(const JobSpec& job) {
    return guarded([&]() {
        Curve C = load_curve(job);
        if (job.dplus_path.empty())
            throw ValidationError("--dplus is required");
        SmoothDivisor dp =
            parse_divisor_file(job.dplus_path, C, DivisorRole::plus);
        SmoothDivisor dm =
            job.dminus_path.empty()
                ? zero_divisor()
                : parse_divisor_file(job.dminus_path, C, DivisorRole::minus);
        Rng rng(job.seed);
        RandomConfig cfg = config_of(job);
        RRBasis rb =
            riemann_roch_basis(C, dp, dm, rng, cfg, job.extra_degree);
        if (debug_intermediates()) {
            std::cerr << "# intermediate divisors\n"
                      << divisor_block_text(rb.div_h, "div-h")
                      << divisor_block_text(rb.d_num, "d-num");
        }
        auto headers = run_headers(job);
        headers.push_back("dimension=" + std::to_string(rb.dimension()));
        emit(job.out_path, basis_file_text(rb, headers));
        if (!job.out_path.empty())
            std::cout << "dimension=" << rb.dimension() << '\n';
        return kExitOk;
    });
}

int run_check(const JobSpec& job) {
    return guarded([&]() {
        Curve C = load_curve(job);
        if (job.dplus_path.empty())
            throw ValidationError("--dplus is required");
        SmoothDivisor dp =
            parse_divisor_file(job.dplus_path, C, DivisorRole::plus);
        Rng rng(job.seed);
        RandomConfig cfg = config_of(job);
        CheckReport report =
            check_input_assumptions(C, dp, rng, cfg, job.extra_degree);
        std::ostringstream os;
        os << "kernel-size=" << report.kernel_size << '\n'
           << "assumption-ok=" << (report.ok ? "true" : "false") << '\n';
        if (!report.ok)
            os << "blocking-factor=" << up::to_string(report.blocking_factor)
               << '\n';
        emit(job.out_path, os.str());
        return report.ok ? kExitOk : kExitCheckFailed;
    });
}

int run_gen_divisor(const JobSpec& job) {
    return guarded([&]() {
        Curve C = load_curve(job);
        Rng rng(job.seed);
        RandomConfig cfg = config_of(job);
        SmoothDivisor D =
            random_smooth_divisor(C, job.degree_hint, rng, cfg);
        auto headers = run_headers(job);
        headers.push_back("degree=" + std::to_string(divisor_degree(D)));
        std::ostringstream os;
        for (const auto& h : headers) os << "# " << h << '\n';
        os << divisor_block_text(D, "divisor");
        emit(job.out_path, os.str());
        return kExitOk;
    });
}

int run_jacobian_add(const JobSpec& job) {
    return guarded([&]() {
        Curve C = load_curve(job);
        if (job.base_path.empty())
            throw ValidationError("--base is required");
        if (job.dplus_path.empty() || job.dminus_path.empty())
            throw ValidationError(
                "jacobian-add needs two elements (--dplus and --dminus)");
        SmoothDivisor base =
            parse_divisor_file(job.base_path, C, DivisorRole::any);
        SmoothDivisor d1 =
            parse_divisor_file(job.dplus_path, C, DivisorRole::any);
        SmoothDivisor d2 =
            parse_divisor_file(job.dminus_path, C, DivisorRole::any);
        Rng rng(job.seed);
        RandomConfig cfg = config_of(job);
        JacobianContext J = make_jacobian(C, base);
        JacobianElement sum =
            jac_add(J, jac_make(J, d1), jac_make(J, d2), rng, cfg);
        auto headers = run_headers(job);
        std::ostringstream os;
        for (const auto& h : headers) os << "# " << h << '\n';
        os << divisor_block_text(sum.D, "divisor");
        emit(job.out_path, os.str());
        return kExitOk;
    });
}

int run_bench(const JobSpec& job) {
    return guarded([&]() {
        Curve C = load_curve(job);
        std::vector<int> degrees = parse_degrees(job.degrees);
        RandomConfig cfg = config_of(job);
        std::ostringstream os;
        os << "degree\tdim\tmillis\n";
        for (std::size_t idx = 0; idx < degrees.size(); ++idx) {
            Rng rng(job.seed ^ static_cast<std::uint64_t>(idx));
            SmoothDivisor D =
                random_smooth_divisor(C, degrees[idx], rng, cfg);
            auto t0 = std::chrono::steady_clock::now();
            RRBasis rb =
                riemann_roch_basis(C, D, zero_divisor(), rng, cfg);
            auto t1 = std::chrono::steady_clock::now();
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          t1 - t0)
                          .count();
            os << divisor_degree(D) << '\t' << rb.dimension() << '\t' << ms
               << '\n';
        }
        emit(job.out_path, os.str());
        return kExitOk;
    });
}

int run_job(const JobSpec& job) {
    if (job.command == "basis") return run_basis(job);
    if (job.command == "check") return run_check(job);
    if (job.command == "gen-divisor") return run_gen_divisor(job);
    if (job.command == "jacobian-add") return run_jacobian_add(job);
    if (job.command == "bench") return run_bench(job);
    std::cerr << "error: unknown command \"" << job.command << "\"\n";
    return kExitValidation;
}

}  // namespace rr
