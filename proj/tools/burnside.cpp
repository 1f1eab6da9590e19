// Command-line front end:
//
//   burnside <command> [--group SPEC] [--target SPEC] [--prime P]
//            [--element FILE]... [--variant withW|raw] [--digits N]
//            [--cache DIR] [--no-cache] [--format json|csv] [--corpus NAME]...

#include <iostream>

#include "CLI11.hpp"

#include "burnside/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Burnside modules, p-local idempotents and marks of finite groups"};
  app.require_subcommand(1);

  burnside::JobSpec job;
  std::string       variant = "raw";
  int               prime   = 0;

  for (auto const* name :
       {"basis", "compose", "one-p", "project", "marks", "kernel", "segal-rank", "decompose",
        "selftest"}) {
    auto* cmd = app.add_subcommand(name);
    cmd->add_option("--group", job.group, "group spec (name, JSON or file)");
    cmd->add_option("--target", job.target, "target group spec");
    cmd->add_option("--prime", prime, "prime p")->check(CLI::PositiveNumber);
    cmd->add_option("--element", job.elements, "element document (file or inline JSON)");
    cmd->add_option("--variant", variant, "mark variant")
        ->check(CLI::IsMember({"withW", "raw"}));
    cmd->add_option("--digits", job.digits, "p-adic digits to print");
    cmd->add_option("--cache", job.cache_dir, "cache directory");
    cmd->add_flag("!--no-cache", job.use_cache, "ignore the cache");
    cmd->add_option("--format", job.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--corpus", job.corpus, "selftest groups");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    job.command = burnside::parse_command(app.get_subcommands().front()->get_name());
    job.variant = burnside::parse_variant(variant);
  } catch (burnside::Error const& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  if (prime > 0) {
    job.prime = prime;
  }
  return burnside::run(job, std::cout, std::cerr);
}
