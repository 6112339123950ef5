#include <CLI11.hpp>

#include <iostream>

#include "dq/cli.hpp"

int main(int argc, char** argv) {
  using dq::cli::JobSpec;
  CLI::App app{"Exact deformation-quantization toolkit"};
  app.require_subcommand(0, 1);
  std::string job_file;
  app.add_option("--json", job_file, "Read a full job document from a file");

  JobSpec job;
  // "-h" stays free because --h names the third polynomial.
  auto subcommand = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->set_help_flag("--help", "Print this help message and exit");
    return sub;
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", job.order, "hbar truncation order");
    sub->add_option("--format", job.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto wick = [&](const std::string& name, const std::string& help, bool with_h) {
    CLI::App* sub = subcommand(name, help);
    sub->add_option("--alpha", job.alpha, "bivector: canonical2d, so3, nonpoisson4d or JSON")->required();
    sub->add_option("--f", job.f, "first polynomial")->required();
    sub->add_option("--g", job.g, "second polynomial")->required();
    if (with_h) sub->add_option("--h", job.h, "third polynomial")->required();
    sub->add_option("--at", job.at, "basepoint, comma separated (default origin)");
    common(sub);
  };
  wick("star", "star product from the diagram expansion", false);
  wick("moyal", "closed Moyal formula (constant bivector)", false);
  wick("associator", "(f*g)*h - f*(g*h) at the basepoint", true);

  CLI::App* cp = subcommand("check-poisson", "test [alpha, alpha] = 0");
  cp->add_option("--alpha", job.alpha)->required();
  common(cp);

  CLI::App* sch = subcommand("schouten", "Schouten-Nijenhuis bracket of two multivectors");
  sch->add_option("--psi1", job.psi1, "JSON multivector or fixture")->required();
  sch->add_option("--psi2", job.psi2, "JSON multivector or fixture")->required();
  common(sch);

  CLI::App* kz = subcommand("koszul", "Magri-Koszul bracket of two 1-forms");
  kz->add_option("--alpha", job.alpha)->required();
  kz->add_option("--w1", job.w1, "JSON 1-form")->required();
  kz->add_option("--w2", job.w2, "JSON 1-form")->required();
  common(kz);

  CLI::App* bv = subcommand("bv-check", "BV algebra identities on f, g, h");
  bv->add_option("--space", job.space, "JSON BV space")->required();
  bv->add_option("--f", job.f)->required();
  bv->add_option("--g", job.g)->required();
  bv->add_option("--h", job.h)->required();
  common(bv);

  CLI::App* qme = subcommand("qme", "master equation residuals and Omega");
  qme->add_option("--space", job.space, "JSON BV space")->required();
  qme->add_option("--S", job.action, "action")->required();
  qme->add_option("--O", job.observable, "observable for Omega");
  common(qme);

  CLI::App* mod = subcommand("moduli", "boundary strata of the compactified moduli space");
  mod->add_option("--n", job.n, "number of boundary points")->required();
  mod->add_option("--codim", job.codim, "codimension (default 1)");
  common(mod);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : dq::cli::input_error;
  }

  if (!job_file.empty()) {
    if (!app.get_subcommands().empty()) {
      std::cerr << "error: --json cannot be combined with a subcommand\n";
      return dq::cli::input_error;
    }
    try {
      job = dq::cli::job_from_json(dq::cli::parse_json(dq::cli::read_text_file(job_file), job_file));
    } catch (const dq::InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return dq::cli::input_error;
    }
  } else if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return dq::cli::input_error;
  } else {
    job.command = app.get_subcommands().front()->get_name();
  }
  return dq::cli::run(job, std::cout, std::cerr);
}
