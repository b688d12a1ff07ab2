#include "tetravex/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <sstream>

#include "tetravex/error.hpp"
#include "tetravex/experiment.hpp"
#include "tetravex/generator.hpp"
#include "tetravex/reduction.hpp"
#include "tetravex/solver.hpp"
#include "tetravex/text_format.hpp"

namespace tvx::cli {

namespace {

// Prefixes parse errors with the file they came from.
template <typename F>
auto from_file(const std::string& path, F parse) {
  const std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

OneInThreeInstance load_formula(const std::string& path) {
  return from_file(path, [](const std::string& t) { return parse_1in3(t); });
}
Instance load_instance(const std::string& path) {
  return from_file(path, [](const std::string& t) { return parse_instance(t); });
}
Tiling load_tiling(const std::string& path, const Instance& instance) {
  return from_file(path, [&](const std::string& t) { return parse_tiling(t, instance); });
}

std::string describe(const Instance& instance) {
  return std::to_string(instance.width()) + "x" + std::to_string(instance.height()) + " " +
         std::string(to_string(instance.boundary()));
}

// The reduction of `formula` that produced `instance`, found by trying the
// variants the reduce command can emit.
std::optional<Reduction> matching_reduction(const OneInThreeInstance& formula, const Instance& instance) {
  const std::string target = serialize_instance(instance);
  for (LabelScheme labels : {LabelScheme::Rigid, LabelScheme::ZeroFill}) {
    std::vector<ReduceOptions> variants;
    if (instance.boundary() == Boundary::Toroidal) {
      variants.push_back({Boundary::Toroidal, false, labels});
    } else {
      variants.push_back({Boundary::Bordered, false, labels});
      variants.push_back({Boundary::Bordered, true, labels});
    }
    for (const ReduceOptions& options : variants) {
      Reduction r = reduce(formula, options);
      if (serialize_instance(r.instance) == target) return r;
    }
  }
  return std::nullopt;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  int code = kYes;
};

void add_reduce(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("reduce", "Compile a positive 1-in-3 instance into a Tetravex instance");
  auto in = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  auto map = std::make_shared<std::string>();
  auto toroidal = std::make_shared<bool>(false);
  auto square = std::make_shared<bool>(false);
  cmd->add_option("--in", *in, "1in3 file")->required();
  cmd->add_option("--out", *out, "instance file to write")->required();
  cmd->add_flag("--toroidal", *toroidal, "wrap-around boundary");
  cmd->add_flag("--square", *square, "pad to a square board");
  cmd->add_option("--map", *map, "also write the cell role map");
  cmd->callback([=, &ctx] {
    const Reduction r = reduce(load_formula(*in),
                               {*toroidal ? Boundary::Toroidal : Boundary::Bordered, *square});
    write_text_file(*out, serialize_instance(r.instance));
    if (!map->empty()) write_text_file(*map, serialize_role_map(r.map));
    ctx.err << "reduced to " << describe(r.instance) << ", " << r.instance.cell_count() << " tiles\n";
  });
}

void add_solve(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("solve", "Decide (and count) tilings of an instance");
  auto in = std::make_shared<std::string>();
  auto witness = std::make_shared<std::string>();
  auto limit = std::make_shared<std::uint64_t>(1);
  auto count = std::make_shared<bool>(false);
  cmd->add_option("--in", *in, "instance file")->required();
  auto* limit_opt = cmd->add_option("--limit", *limit, "stop after this many tilings (default 1)")
                        ->check(CLI::PositiveNumber);
  cmd->add_option("--witness", *witness, "write the first tiling found here");
  cmd->add_flag("--count", *count, "count every tiling")->excludes(limit_opt);
  cmd->callback([=, &ctx] {
    const Instance instance = load_instance(*in);
    const SolveResult r = solve(instance, *count ? kNoLimit : *limit, witness->empty() ? 0 : 1);
    ctx.err << "nodes " << r.stats.nodes_expanded << ", "
            << std::chrono::duration<double, std::milli>(r.stats.elapsed).count() << " ms";
    if (r.status == SolveStatus::LimitReached) ctx.err << ", stopped at the limit";
    ctx.err << '\n';
    if (r.count == 0) {
      ctx.out << "UNSOLVABLE\n";
      ctx.code = kNo;
      return;
    }
    ctx.out << "SOLVABLE " << r.count << '\n';
    if (!witness->empty()) write_text_file(*witness, serialize_tiling(r.witnesses.front()));
  });
}

void add_verify(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("verify", "Check a tiling against an instance");
  auto instance_path = std::make_shared<std::string>();
  auto tiling_path = std::make_shared<std::string>();
  cmd->add_option("--instance", *instance_path, "instance file")->required();
  cmd->add_option("--tiling", *tiling_path, "tiling file")->required();
  cmd->callback([=, &ctx] {
    const Instance instance = load_instance(*instance_path);
    const Tiling tiling = load_tiling(*tiling_path, instance);
    const ValidationReport report = validate_tiling(instance, tiling);
    for (const Violation& v : report.violations) {
      ctx.err << "mismatch (" << v.first.row << "," << v.first.col << ") " << to_string(v.first_edge)
              << " vs (" << v.second.row << "," << v.second.col << ") " << to_string(v.second_edge)
              << (v.wraps ? " across the wrap" : "") << '\n';
    }
    if (!report.multiset_ok) ctx.err << "tiles do not match the instance's multiset\n";
    ctx.out << (report.valid ? "VALID\n" : "INVALID\n");
    ctx.code = report.valid ? kYes : kNo;
  });
}

void add_decode(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("decode", "Read the truth assignment out of a tiling of a reduction");
  auto in = std::make_shared<std::string>();
  auto instance_path = std::make_shared<std::string>();
  auto tiling_path = std::make_shared<std::string>();
  cmd->add_option("--in", *in, "1in3 file")->required();
  cmd->add_option("--instance", *instance_path, "reduced instance file")->required();
  cmd->add_option("--tiling", *tiling_path, "tiling file")->required();
  cmd->callback([=, &ctx] {
    const OneInThreeInstance formula = load_formula(*in);
    const Instance instance = load_instance(*instance_path);
    const Tiling tiling = load_tiling(*tiling_path, instance);
    const auto reduction = matching_reduction(formula, instance);
    if (!reduction) throw InvalidArgument(*instance_path + " is not a reduction of " + *in);
    if (!validate_tiling(instance, tiling).valid) throw InvalidArgument(*tiling_path + " is not a valid tiling");
    const Assignment a = decode_assignment(reduction->map, tiling);
    ctx.out << "ASSIGNMENT " << to_string(a) << '\n';
    if (!satisfies(formula, a)) {
      ctx.err << "decoded assignment does not satisfy the formula\n";
      ctx.code = kNo;
    }
  });
}

void add_oracle(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("oracle", "List every 1-in-3 satisfying assignment by brute force");
  auto in = std::make_shared<std::string>();
  cmd->add_option("--in", *in, "1in3 file")->required();
  cmd->callback([=, &ctx] {
    const auto all = sat_oracle(load_formula(*in));
    if (all.empty()) {
      ctx.out << "UNSATISFIABLE\n";
      ctx.code = kNo;
      return;
    }
    ctx.out << "SATISFIABLE " << all.size() << '\n';
    for (const Assignment& a : all) ctx.out << to_string(a) << '\n';
  });
}

void add_generate(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("generate", "Generate a random instance");
  auto mode = std::make_shared<std::string>();
  auto cfg = std::make_shared<GenConfig>();
  auto unique = std::make_shared<bool>(false);
  auto budget = std::make_shared<int>(100);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--mode", *mode, "shredded or iid")->required()->check(CLI::IsMember({"shredded", "iid"}));
  cmd->add_option("--width", cfg->width, "board width")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--height", cfg->height, "board height")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--alphabet", cfg->alphabet, "number of labels")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg->seed, "64-bit seed")->required();
  auto* unique_flag = cmd->add_flag("--unique", *unique, "retry seeds until uniquely solvable");
  cmd->add_option("--budget", *budget, "attempts for --unique (default 100)")
      ->check(CLI::PositiveNumber)
      ->needs(unique_flag);
  cmd->add_option("--out", *out, "instance file to write")->required();
  cmd->callback([=, &ctx] {
    GenConfig c = *cfg;
    c.mode = parse_gen_mode(*mode);
    if (*unique && c.mode != GenMode::Shredded) throw InvalidArgument("--unique needs --mode shredded");
    Instance instance = [&] {
      if (!*unique) return generate(c);
      try {
        return generate_unique(c, *budget);
      } catch (const InvalidArgument&) {
        throw;
      } catch (const Error& e) {
        ctx.err << e.what() << '\n';
        ctx.code = kNo;
        return Instance(1, 1, Boundary::Bordered, {num_tile(0, 0, 0, 0)});
      }
    }();
    if (ctx.code == kNo) return;
    write_text_file(*out, serialize_instance(instance));
    ctx.err << "generated " << describe(instance) << '\n';
  });
}

void add_experiment(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("experiment", "Solvability statistics over random instances, as CSV");
  auto modes = std::make_shared<std::vector<std::string>>();
  auto sizes = std::make_shared<std::vector<std::string>>();
  auto spec = std::make_shared<ExperimentSpec>();
  auto out = std::make_shared<std::string>();
  cmd->add_option("--modes", *modes, "shredded and/or iid")->required()->delimiter(',');
  cmd->add_option("--sizes", *sizes, "board sizes as WxH")->required()->delimiter(',');
  cmd->add_option("--alphabets", spec->alphabets, "label counts")->required()->delimiter(',');
  cmd->add_option("--trials", spec->trials, "instances per row")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", spec->seed, "64-bit seed")->required();
  cmd->add_option("--out", *out, "CSV file to write")->required();
  cmd->callback([=, &ctx] {
    ExperimentSpec s = *spec;
    for (const auto& m : *modes) s.modes.push_back(parse_gen_mode(m));
    for (const auto& z : *sizes) s.sizes.push_back(parse_board_size(z));
    const auto rows = run_experiment(s);
    write_text_file(*out, experiment_csv(rows));
    ctx.err << "wrote " << rows.size() << " rows\n";
  });
}

void add_pad(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("pad", "Pad a reduced instance to a square board");
  auto in = std::make_shared<std::string>();
  auto map_path = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  cmd->add_option("--in", *in, "reduced instance file")->required();
  cmd->add_option("--map", *map_path, "its role map")->required();
  cmd->add_option("--out", *out, "instance file to write")->required();
  cmd->callback([=, &ctx] {
    const Instance instance = load_instance(*in);
    const ReductionMap map = from_file(*map_path, [](const std::string& t) { return parse_role_map(t); });
    const Instance padded = pad_to_square(instance, map);
    write_text_file(*out, serialize_instance(padded));
    ctx.err << "padded to " << describe(padded) << '\n';
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Tetravex toolkit: solver, 1-in-3 reduction, generators", "tetravex"};
  app.require_subcommand(1);
  add_reduce(app, ctx);
  add_solve(app, ctx);
  add_verify(app, ctx);
  add_decode(app, ctx);
  add_oracle(app, ctx);
  add_generate(app, ctx);
  add_experiment(app, ctx);
  add_pad(app, ctx);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return ctx.code;
}

}  // namespace tvx::cli
