// sgs: run, generate and convert edge streams.
//
// Exit codes: 0 ok, 1 usage or I/O error, 2 malformed input,
// 3 loop edge, 4 engine bound breached.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "sgs/sgs.hpp"

namespace {

struct Input {
  std::unique_ptr<std::ifstream> file;
  std::istream* stream = &std::cin;
};

Input open_input(const std::string& path) {
  Input in;
  if (path.empty() || path == "-") return in;
  in.file = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*in.file) throw std::runtime_error("cannot open '" + path + "'");
  in.stream = in.file.get();
  return in;
}

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;
};

Output open_output(const std::string& path) {
  Output out;
  if (path.empty() || path == "-") return out;
  out.file = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*out.file) throw std::runtime_error("cannot write '" + path + "'");
  out.stream = out.file.get();
  return out;
}

sgs::StreamFormat parse_format(const std::string& s) {
  if (s == "text") return sgs::StreamFormat::Text;
  if (s == "binary") return sgs::StreamFormat::Binary;
  throw std::invalid_argument("unknown format '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-pass graph stream engine with sparse certificates"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Stream edges through the engine and print verdicts");
  std::string problem = "cc";
  std::string input;
  std::string metrics = "json";
  unsigned k = 0;
  std::size_t group_size = 0;
  sgs::RunOptions run_opt;
  run->add_option("--problem", problem, "cc, bipartite, kvconn, keconn, msf, or kvconn,keconn")->required();
  run->add_option("--k", k, "connectivity threshold for kvconn/keconn");
  run->add_option("--group-size", group_size, "edges per group (default n, or n*ceil(log2 n) for msf)");
  run->add_flag("--skip-loops", run_opt.skip_loops, "drop loop edges instead of aborting");
  run->add_flag("--final-recompute", run_opt.final_recompute, "recompute over the last partial group");
  run->add_option("--metrics", metrics, "report format")->check(CLI::IsMember({"json", "human"}));
  run->add_option("--seed", run_opt.seed, "seed echoed in the report");
  run->add_option("--input,-i", input, "stream file (default: standard input)");
  run->add_option("--weight-decimals", run_opt.weight_decimals, "accept decimal weights with this many places");
  run->add_option("--max-stored-edges", run_opt.max_stored_edges, "abort with exit 4 above this many stored edges");

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic edge stream");
  sgs::GeneratorOptions gen_opt;
  std::optional<std::uint64_t> gen_m;
  std::string model = "gnm";
  std::string order = "random";
  std::string format = "text";
  std::string output;
  gen->add_option("--n", gen_opt.n, "vertex count")->required();
  gen->add_option("--m", gen_m, "edge count (default: every edge of the model)");
  gen->add_option("--model", model, "gnm, cycle, complete, bipartite, two-blocks");
  gen->add_option("--order", order, "random, sorted-by-endpoint, adversarial-dense-first");
  gen->add_option("--seed", gen_opt.seed, "random seed");
  gen->add_flag("--weighted", gen_opt.weighted, "attach weights in [0, max-weight]");
  gen->add_option("--max-weight", gen_opt.max_weight, "largest weight");
  gen->add_flag("--multigraph", gen_opt.multigraph, "sample edges with replacement");
  gen->add_option("--format", format, "text or binary")->check(CLI::IsMember({"text", "binary"}));
  gen->add_option("--output,-o", output, "output file (default: standard output)");

  // convert
  auto* conv = app.add_subcommand("convert", "Rewrite a stream in the other format");
  std::string conv_input;
  std::string conv_output;
  std::string conv_format = "binary";
  unsigned conv_decimals = 0;
  conv->add_option("--input,-i", conv_input, "stream file (default: standard input)");
  conv->add_option("--output,-o", conv_output, "output file (default: standard output)");
  conv->add_option("--format", conv_format, "target format")->check(CLI::IsMember({"text", "binary"}));
  conv->add_option("--weight-decimals", conv_decimals, "accept decimal weights with this many places");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      run_opt.problems = sgs::parse_problems(problem);
      run_opt.k = k;
      if (group_size != 0) run_opt.group_size = group_size;
      Input in = open_input(input);
      sgs::RunReport report = sgs::run_stream(*in.stream, run_opt);
      if (metrics == "json") std::cout << sgs::to_json(report).dump(2) << '\n';
      else std::cout << sgs::to_human(report);
    } else if (*gen) {
      gen_opt.m = gen_m;
      gen_opt.model = sgs::parse_model(model);
      gen_opt.order = sgs::parse_order(order);
      sgs::EdgeSet g = sgs::generate(gen_opt);
      Output out = open_output(output);
      sgs::StreamWriter writer(*out.stream, parse_format(format),
                               {static_cast<std::uint32_t>(g.n), gen_opt.weighted});
      for (const sgs::Edge& e : g.edges) writer.write(e.u, e.v, e.weight);
      out.stream->flush();
    } else if (*conv) {
      Input in = open_input(conv_input);
      sgs::StreamReader reader(*in.stream, conv_decimals);
      Output out = open_output(conv_output);
      sgs::StreamWriter writer(*out.stream, parse_format(conv_format), reader.header());
      sgs::StreamRecord rec;
      while (reader.next(rec)) writer.write(rec);
      out.stream->flush();
    }
  } catch (const sgs::FormatError& e) {
    std::cerr << "sgs: format error: " << e.what() << '\n';
    return 2;
  } catch (const sgs::LoopEdgeError& e) {
    std::cerr << "sgs: " << e.what() << " (use --skip-loops to drop loops)\n";
    return 3;
  } catch (const sgs::InvariantViolation& e) {
    std::cerr << "sgs: invariant violation: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "sgs: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
