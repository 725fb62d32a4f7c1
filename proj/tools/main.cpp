/**
 * @file main.cpp
 * @brief rrbasis: Riemann-Roch space bases and divisor-class arithmetic on
 *        plane curves with at worst ordinary double points over prime fields.
 */
#include <string>

#include "CLI11.hpp"
#include "rr/driver.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Riemann-Roch space bases and divisor-class group arithmetic\n"
        "on plane projective curves with at worst ordinary double points\n"
        "over prime finite fields."};
    app.require_subcommand(1);
    rr::JobSpec job;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--curve", job.curve_path, "curve file")->required();
        cmd->add_option("--seed", job.seed, "rng seed (default 0)");
        cmd->add_option("--sample-set-size", job.sample_set_size,
                        "size of the random draw set (0 = whole field)");
        cmd->add_option("--retries", job.retries,
                        "retry budget for the randomized subroutines");
        cmd->add_option("--out", job.out_path,
                        "output file (default: stdout)");
    };

    CLI::App* basis = app.add_subcommand(
        "basis", "compute a basis of L(D_plus - D_minus)");
    add_common(basis);
    basis->add_option("--dplus", job.dplus_path, "divisor file for D_plus")
        ->required();
    basis->add_option("--dminus", job.dminus_path,
                      "divisor file for D_minus (default: zero divisor)");
    basis->add_option("--extra-degree", job.extra_degree,
                      "raise the interpolation degree bound");

    CLI::App* check = app.add_subcommand(
        "check",
        "verify the input assumption (some interpolated form avoids the "
        "nodes); exit 5 when it fails");
    add_common(check);
    check->add_option("--dplus", job.dplus_path, "divisor file for D_plus")
        ->required();
    check->add_option("--extra-degree", job.extra_degree,
                      "raise the interpolation degree bound");

    CLI::App* gen = app.add_subcommand(
        "gen-divisor", "generate a random smooth effective divisor");
    add_common(gen);
    gen->add_option("--degree", job.degree_hint,
                    "minimum degree of the generated divisor")
        ->required();

    CLI::App* jadd = app.add_subcommand(
        "jacobian-add",
        "add two degree-genus divisor classes on a smooth curve");
    add_common(jadd);
    jadd->add_option("--dplus", job.dplus_path, "first element (divisor file)")
        ->required();
    jadd->add_option("--dminus", job.dminus_path,
                     "second element (divisor file)")
        ->required();
    jadd->add_option("--base", job.base_path,
                     "base point O (degree-1 divisor file)")
        ->required();

    CLI::App* bench = app.add_subcommand(
        "bench", "sweep divisor degrees and report wall time per basis");
    add_common(bench);
    bench->add_option("--degrees", job.degrees,
                      "degree sweep: start:stop:step or a single value")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : rr::kExitValidation;
    }
    job.command = app.get_subcommands().front()->get_name();
    return rr::run_job(job);
}
