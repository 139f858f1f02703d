// lefschetz: command-line front end.
//
//   lefschetz curve analyze <file>
//   lefschetz homology <file>
//   lefschetz rh <file>
//   lefschetz perturb --n 3 --epsilon 0.1 --t 0.01
//   lefschetz hessian --a 1 --b 0 --n 2
//
// Global flags: --tol, --max-iter, --seed, --format text|machine.

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "lefschetz/commands.hpp"
#include "lefschetz/io.hpp"

using namespace lefschetz;

int main(int argc, char** argv) {
  CLI::App app{"Morse-theoretic topology of plane curves and branched covers"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::RunConfig config;
  std::map<std::string, cli::Format> formats{{"text", cli::Format::text}, {"machine", cli::Format::machine}};
  app.add_option("--tol", config.tolerance, "root refinement tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", config.max_iterations, "root refinement iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "seed for suggested coordinate changes");
  app.add_option("--format", config.format, "output format")->transform(CLI::CheckedTransformer(formats));

  std::string file;
  auto* curve = app.add_subcommand("curve", "plane curve commands")->require_subcommand(1);
  auto* analyze = curve->add_subcommand("analyze", "genus of a smooth plane curve via its pencil");
  analyze->add_option("file", file, "curve document")->required();

  auto* homology = app.add_subcommand("homology", "homology of an integer chain complex");
  homology->add_option("file", file, "complex document")->required();

  auto* rh = app.add_subcommand("rh", "genus of a branched cover from its ramification profile");
  rh->add_option("file", file, "profile document")->required();

  int n = 0;
  double epsilon = 0.0;
  std::string t_text;
  auto* perturb = app.add_subcommand("perturb", "split the degenerate critical point of z^n");
  perturb->add_option("--n", n, "local degree")->required();
  perturb->add_option("--epsilon", epsilon, "disc radius")->required();
  perturb->add_option("--t", t_text, "perturbation, e.g. 0.01 or 0.01+0.002i")->required();

  double a = 0.0, b = 0.0;
  int dim = 1;
  auto* hessian = app.add_subcommand("hessian", "index of a pencil critical point");
  hessian->add_option("--a", a)->required();
  hessian->add_option("--b", b)->required();
  hessian->add_option("--n", dim, "complex dimension of the fibre direction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  cli::Report report;
  auto with_file = [&](const std::string& command, auto run) {
    try {
      return run(io::read_file(file), config);
    } catch (const Error& e) {
      return cli::input_failure(command, e.what());
    }
  };
  if (*analyze) {
    report = with_file("curve analyze", cli::curve_analyze);
  } else if (*homology) {
    report = with_file("homology", cli::homology);
  } else if (*rh) {
    report = with_file("rh", cli::rh);
  } else if (*perturb) {
    if (const auto t = io::parse_complex(t_text))
      report = cli::perturb(n, epsilon, *t, config);
    else
      report = cli::input_failure("perturb", "cannot parse --t '" + t_text + "' as a complex number");
  } else {
    report = cli::hessian(a, b, dim, config);
  }
  std::cout << cli::render(report, config.format);
  return cli::exit_code(report.error);
}
