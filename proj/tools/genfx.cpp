// Command-line front end: decide, batch, veil-demo.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation,
// 3 batch disagreement.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "genfx/batch.hpp"
#include "genfx/errors.hpp"
#include "genfx/gluing.hpp"
#include "genfx/input_document.hpp"
#include "genfx/report.hpp"
#include "genfx/veil_examples.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInvariantError = 2;
constexpr int kDisagreement = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path emergence under gluing, and generative-effect veils"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "verbose";
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether gluing two graphs joins A and E");
  decide_cmd->add_option("--input", input, "JSON gluing input")->required();
  decide_cmd->add_option("--format", format, "verbose or json")->check(CLI::IsMember({"verbose", "json"}));

  std::uint64_t seed = 1;
  std::size_t count = 500;
  genfx::BatchBounds bounds;
  auto* batch_cmd = app.add_subcommand("batch", "Compare the linear criterion with union-find on random gluings");
  batch_cmd->add_option("--seed", seed, "campaign seed");
  batch_cmd->add_option("--count", count, "number of instances");
  batch_cmd->add_option("--max-nodes", bounds.max_nodes, "vertex bound per graph")->check(CLI::Range(2, 12));

  std::string veil_name;
  auto* veil_cmd = app.add_subcommand("veil-demo", "Run one example veil and list its witnesses");
  veil_cmd->add_option("name", veil_name, "subset-of-u | behavioral | threshold | reachability | rewriting")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*decide_cmd) {
      const genfx::GluingSpec spec = genfx::to_spec(genfx::load_input(input));
      const genfx::Decision d = genfx::decide(spec);
      std::cout << (format == "json" ? genfx::json_report(spec, d) : genfx::verbose_report(spec, d));
      return kOk;
    }
    if (*batch_cmd) {
      const genfx::BatchSummary s = genfx::run_batch(seed, count, bounds);
      std::cout << "seed: " << seed << "\n" << genfx::to_string(s);
      return s.all_agree() ? kOk : kDisagreement;
    }
    std::cout << genfx::veil_demo(veil_name);
    return kOk;
  } catch (const genfx::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const genfx::SizeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariantError;
  }
}
