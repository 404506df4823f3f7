#include <cstdio>

#include "CLI11.hpp"

#include "c4lab/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"induced-C4 structure toolkit"};
  app.require_subcommand(1);
  c4lab::RunConfig cfg;

  auto common = [&](CLI::App* s) {
    s->add_option("--input", cfg.input, "graph file (edge-list format)");
    s->add_option("--out", cfg.out, "write the report here instead of stdout");
    s->add_option("--format", cfg.format, "json or text");
    return s;
  };

  common(app.add_subcommand("count-c4", "exact induced four-cycle count"));

  auto* m2 = common(app.add_subcommand("m2-check", "nested-order test for a bipartite pair"));
  m2->add_option("--x", cfg.x, "comma-separated x side");
  m2->add_option("--y", cfg.y, "comma-separated y side");
  m2->add_option("--r", cfg.r, "also emit the r-interval pair partition");

  auto* part = common(app.add_subcommand("partition", "homogeneity refinement of a clique system"));
  part->add_option("--blocks", cfg.blocks, "semicolon-separated cliques, e.g. 0,1;2,3");
  part->add_option("--delta", cfg.delta, "deficiency budget as a rational");
  part->add_flag("--strong", cfg.strong, "also build the two-level partition with w cores");
  part->add_option("--seed", cfg.seed, "rng seed (required with --strong)");

  auto* dec = common(app.add_subcommand("decompose", "peel and edit into the clique structure"));
  dec->add_option("--alpha", cfg.alpha, "edge density parameter");
  dec->add_option("--gamma", cfg.gamma, "block density slack");
  dec->add_option("--seed", cfg.seed, "rng seed");
  dec->add_option("--const-c", cfg.const_c, "reported threshold constant");
  dec->add_option("--const-d", cfg.const_d, "density slack exponent, positive integer");
  dec->add_option("--exact-cap", cfg.exact_cap, "exact cross-pair edit search up to this block size");

  auto* ind = common(app.add_subcommand("edit-indset", "delete anti-matching edges toward a family"));
  ind->add_option("--x", cfg.x, "comma-separated x side");
  ind->add_option("--y", cfg.y, "comma-separated independent y side");
  ind->add_option("--family", cfg.family, "c4-only or chordal-family");
  ind->add_option("--seed", cfg.seed, "shuffle the greedy anti-matching order");

  auto* far = common(app.add_subcommand("farness", "edit-distance certificate for a property"));
  far->add_option("--family", cfg.family, "induced-c4-free or chordal");
  far->add_option("--exact-cap", cfg.exact_cap, "exact distance search up to this vertex count");

  auto* low = common(app.add_subcommand("lowerbound", "cycle blow-up construction and scans"));
  low->add_option("--k", cfg.k, "cycle length");
  low->add_option("--f", cfg.f, "part size");
  low->add_option("--edits", cfg.edits, "random edit budget for the resilience check");
  low->add_option("--trials", cfg.trials, "resilience trials (default 100)");
  low->add_option("--seed", cfg.seed, "rng seed (required with --edits)");

  for (const char* name : {"pipeline-c4", "pipeline-chordal"}) {
    auto* pl = common(app.add_subcommand(name, "full removal pipeline"));
    pl->add_option("--epsilon", cfg.epsilon, "distance parameter in (0, 1/2)");
    pl->add_option("--alpha", cfg.alpha, "override the default epsilon^6/2^11");
    pl->add_option("--gamma", cfg.gamma, "override the default 1/4");
    pl->add_option("--seed", cfg.seed, "rng seed");
    pl->add_option("--const-c", cfg.const_c, "reported threshold constant");
    pl->add_option("--const-d", cfg.const_d, "density slack exponent, positive integer");
    pl->add_option("--exact-cap", cfg.exact_cap, "exact cross-pair edit search cap");
  }

  common(app.add_subcommand("report-audit", "re-verify every certificate in a report"));

  auto* gen = common(app.add_subcommand("gen", "write a corpus graph (report goes to stdout)"));
  gen->add_option("--model", cfg.model, "gnp, split, or blowup");
  gen->add_option("--n", cfg.n, "vertex count (gnp, split)");
  gen->add_option("--p", cfg.p, "edge probability as a rational (gnp, split)");
  gen->add_option("--k", cfg.k, "cycle length (blowup)");
  gen->add_option("--f", cfg.f, "part size (blowup)");
  gen->add_option("--seed", cfg.seed, "rng seed (gnp, split)");

  CLI11_PARSE(app, argc, argv);
  cfg.op = app.get_subcommands().front()->get_name();

  c4lab::RunOutput out = c4lab::run(cfg);
  std::string text = c4lab::render_report(out.report, cfg.format);
  if (!cfg.out.empty() && cfg.op != "gen") {
    c4lab::write_file_atomic(cfg.out, text);
  } else {
    std::fputs(text.c_str(), stdout);
  }
  return out.exit_code;
}
