// majlat: command-line front end for the majorization lattice library.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "majlat/cli.hpp"

int main(int argc, char** argv) {
  using namespace majlat;

  CLI::App app{"Majorization lattice: meets, joins, family bounds, l1 balls and optimal common resources"};
  app.require_subcommand(1);

  JobSpec job;
  std::string mode = "exact";
  double tolerance = kDefaultTolerance;
  std::string theory;

  app.add_option("--mode", mode, "Numeric mode")->check(CLI::IsMember({"exact", "float"}));
  auto* tol_opt = app.add_option("--tol", tolerance, "Float-mode comparison tolerance");
  app.add_option("-i,--in", job.input_path, "Input file (JSON or CSV)");
  app.add_option("-o,--out", job.output_path, "Result JSON path (default: stdout)");
  app.add_option("--svg", job.svg_path, "Write an SVG plot of the Lorenz curves");
  app.add_flag("--sort", job.make.sort, "Sort unsorted input vectors instead of rejecting them");
  app.add_flag("--normalize", job.make.normalize, "Normalize input vectors to sum 1");

  const std::map<std::string, std::string> summaries = {
      {"compare", "Majorization relation between two vectors"},
      {"meet", "Greatest lower bound of two vectors"},
      {"join", "Least upper bound of two vectors"},
      {"inf", "Infimum of a finite family"},
      {"sup", "Supremum of a finite family"},
      {"polytope", "Infimum/supremum of the convex hull of the input vertices"},
      {"ball", "Vertices, flattest and steepest approximations of an l1 ball"},
      {"ocr", "Optimal common resource of a target set"},
      {"lorenz", "Lorenz curves of the input vectors"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, summary] : summaries) {
    CLI::App* sub = app.add_subcommand(name, summary);
    sub->fallthrough();
    subs[name] = sub;
  }

  for (const char* name : {"polytope", "ball"}) {
    subs[name]->add_flag("--inf", job.want_inf, "Report the infimum");
    subs[name]->add_flag("--sup", job.want_sup, "Report the supremum");
    subs[name]->add_flag("--vertices", job.want_vertices, "Report the vertex list");
  }
  subs["ball"]->add_option("--center", job.center, "Centre as comma-separated entries (default: first input vector)");
  subs["ball"]->add_option("--eps", job.eps, "l1 radius");
  subs["ball"]->add_option("--max-dim", job.max_dim, "Vertex enumeration dimension cap");
  subs["ocr"]
      ->add_option("--theory", theory, "Resource theory")
      ->required()
      ->check(CLI::IsMember({"entanglement", "coherence", "purity"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [name, sub] : subs)
    if (sub->parsed()) job.command = *parse_command(name);
  job.mode = mode == "float" ? NumericMode::Float : NumericMode::Exact;
  if (tol_opt->count() > 0) job.tolerance = tolerance;
  if (!theory.empty()) job.theory = parse_theory(theory);

  return run(job, std::cout, std::cerr);
}
