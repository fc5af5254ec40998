#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "opcoh/errors.hpp"

using namespace opcoh::cli;

int main(int argc, char** argv) {
  CLI::App app{"Operahedra skeletons, Morse certificates and coherence witnesses"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Print elapsed time on stderr");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build a skeleton or fixture and report its face counts");
  gen.src.attach(*gen_cmd, true);
  gen_cmd->add_option("--out", gen.out, "Write complex.json");
  gen_cmd->add_option("--dot", gen.dot, "Write a Graphviz rendering");
  gen_cmd->add_option("--emit-realization", gen.realization_out, "Write realization.json");

  auto* check = app.add_subcommand("check", "Run a checker");
  check->require_subcommand(1);

  MorseArgs morse;
  auto* morse_cmd = check->add_subcommand("morse", "Search for a Morse certificate");
  morse.src.attach(*morse_cmd, true);
  morse_cmd->add_option("--all", morse.all, "Every tree with at most P vertices")->check(CLI::Range(1, 8));
  morse_cmd->add_option("--jobs", morse.jobs, "Worker threads for --all")->check(CLI::Range(1, 256));
  morse_cmd->add_option("--vec", morse.vec, "Orient by this functional, e.g. 3,2,1");
  morse_cmd->add_option("--seed", morse.seed, "Seed for a sampled direction");
  morse_cmd->add_option("--emit-cert", morse.emit_cert, "Write the certificate");

  HomologyArgs hom;
  auto* hom_cmd = check->add_subcommand("homology", "Integral homology through Smith normal form");
  hom.src.attach(*hom_cmd, true);
  hom_cmd->add_option("--all", hom.all, "Every tree with at most P vertices")->check(CLI::Range(1, 8));
  hom_cmd->add_option("--jobs", hom.jobs, "Worker threads for --all")->check(CLI::Range(1, 256));
  hom_cmd->add_flag("--certify", hom.certify, "Certified, refuted or inconclusive simple connectivity");
  hom_cmd->add_flag("--brute-force", hom.brute_force, "With --certify, try every orientation of small complexes");
  hom_cmd->add_option("--samples", hom.samples, "Sampled directions for --certify")->check(CLI::Range(0, 100000));
  hom_cmd->add_option("--seed", hom.seed, "Seed for sampled directions");

  ConfluenceArgs conf;
  auto* conf_cmd = check->add_subcommand("confluence", "Critical pairs and normal form agreement");
  conf.src.attach(*conf_cmd, false);
  conf_cmd->add_option("--all", conf.all, "Every tree with at most P vertices")->check(CLI::Range(1, 8));
  conf_cmd->add_option("--jobs", conf.jobs, "Worker threads for --all")->check(CLI::Range(1, 256));
  conf_cmd->add_option("--strategies", conf.strategies, "Random strategies per tree")->check(CLI::Range(0, 100000));
  conf_cmd->add_option("--seed", conf.seed, "Seed for the strategies");

  CoherenceArgs coh;
  auto* coh_cmd = check->add_subcommand("coherence", "Decide equality of two parallel morphism words");
  coh.src.attach(*coh_cmd, false);
  coh_cmd->add_option("--object", coh.object, "Object the inline words start from");
  coh_cmd->add_option("--w1", coh.w1, "Word file or inline moves such as \"beta@ beta@L\"")->required();
  coh_cmd->add_option("--w2", coh.w2, "Word file or inline moves")->required();
  coh_cmd->add_option("--emit-cert", coh.emit_cert, "Write the homotopy certificate");

  VerifyArgs ver;
  auto* ver_cmd = check->add_subcommand("verify", "Replay a homotopy certificate");
  ver.src.attach(*ver_cmd, true);
  ver_cmd->add_option("--cert", ver.cert, "certificate.json")->required();

  auto* geom = app.add_subcommand("geom", "Geometric realizations");
  geom->require_subcommand(1);
  OrientArgs orient;
  auto* orient_cmd = geom->add_subcommand("orient", "Orientation induced by a linear functional");
  orient.src.attach(*orient_cmd, true);
  orient_cmd->add_option("--vec", orient.vec, "Functional, e.g. 3,2,1 or 1/2,-1");
  orient_cmd->add_option("--random", orient.random, "Sample this many generic functionals")->check(CLI::Range(0, 100000));
  orient_cmd->add_option("--seed", orient.seed, "Seed for --random");
  orient_cmd->add_option("--out", orient.out, "Write realization.json");

  NormalizeArgs norm;
  auto* norm_cmd = app.add_subcommand("normalize", "Rewrite an object to its normal form");
  norm.src.attach(*norm_cmd, false);
  norm_cmd->add_option("--strategies", norm.strategies, "Also run this many random strategies")->check(CLI::Range(0, 100000));
  norm_cmd->add_option("--seed", norm.seed, "Seed for the strategies");

  WitnessArgs wit;
  auto* wit_cmd = app.add_subcommand("witness", "Homotopy certificate between two parallel paths");
  wit.src.attach(*wit_cmd, true);
  wit_cmd->add_option("--p1", wit.p1, "path.json; a seeded random walk when absent");
  wit_cmd->add_option("--p2", wit.p2, "path.json; canonical descents when absent");
  wit_cmd->add_option("--length", wit.length, "Random walk length")->check(CLI::Range(0, 100000));
  wit_cmd->add_option("--vec", wit.vec, "Orient by this functional");
  wit_cmd->add_option("--seed", wit.seed, "Seed for the walk and sampled directions");
  wit_cmd->add_option("--emit-cert", wit.emit_cert, "Write the homotopy certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (gen_cmd->parsed()) {
      code = run_gen(gen);
    } else if (morse_cmd->parsed()) {
      code = run_morse(morse);
    } else if (hom_cmd->parsed()) {
      code = run_homology(hom);
    } else if (conf_cmd->parsed()) {
      code = run_confluence(conf);
    } else if (coh_cmd->parsed()) {
      code = run_coherence(coh);
    } else if (ver_cmd->parsed()) {
      code = run_verify(ver);
    } else if (orient_cmd->parsed()) {
      code = run_orient(orient);
    } else if (norm_cmd->parsed()) {
      code = run_normalize(norm);
    } else if (wit_cmd->parsed()) {
      code = run_witness(wit);
    }
  } catch (const opcoh::CertificateRejected& e) {
    std::cerr << "opcoh: " << e.what() << "\n";
    code = kRejected;
  } catch (const opcoh::Error& e) {
    std::cerr << "opcoh: " << e.what() << "\n";
    code = kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "opcoh: " << e.what() << "\n";
    code = kInvalid;
  }
  if (timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed " << ms.count() << " ms\n";
  }
  return code;
}
