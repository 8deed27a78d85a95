#include "ccfusion/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "ccfusion/instance.hpp"
#include "ccfusion/random.hpp"
#include "ccfusion/report.hpp"
#include "ccfusion/theorems.hpp"

namespace ccfusion {

namespace {

const std::vector<std::string> kTheorems = {"transform", "approximate-dual", "subspace-perturbation",
                                            "lambda-perturbation", "q-dual"};

struct Options {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::vector<std::string> tol_overrides;
  std::string output = "text";
  std::vector<std::string> paths;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* samples_opt = nullptr;

  // reconstruct
  std::string vector;
  bool random_vector = false;  // the default; the flag only documents intent
  // verify
  std::string theorem;
  bool all = false;
  // generate
  long dim = 0;
  long count = 1;
  std::string constraint = "none";
  std::string field = "real";
  std::string out_dir = ".";
  std::string prefix = "instance";
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "RNG seed (u64); overrides params.seed");
  cmd->add_option("--samples", o.samples, "Monte Carlo sample count (default 1000)");
  cmd->add_option("--tol", o.tol_overrides, "Tolerance override name=value (repeatable)")
      ->allow_extra_args(false);
  cmd->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_paths(CLI::App* cmd, Options& o) {
  cmd->add_option("instances", o.paths, "Instance files")->required();
}

Tolerances parse_tolerances(const std::vector<std::string>& overrides) {
  Tolerances tol;
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidParams("--tol expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw InvalidParams("--tol " + name + ": not a number: '" + text + "'");
    tol.set(name, value);
  }
  return tol;
}

/// Collapses per-input exit codes: errors dominate degenerate results.
int combine(int a, int b) {
  if (a == kExitError || b == kExitError) return kExitError;
  if (a == kExitDegenerate || b == kExitDegenerate) return kExitDegenerate;
  return kExitOk;
}

OrderedJson error_json(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  return {{"kind", err ? to_string(err->kind()) : "Error"}, {"message", e.what()}};
}

std::string error_text(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  return std::string(err ? to_string(err->kind()) : "Error") + ": " + e.what();
}

struct Context {
  const Options& opts;
  Tolerances tol;
  std::ostream& text;  // per-entry text output (buffered)
  std::ostream& err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

OrderedJson entry_header(const std::string& path, const std::string& bytes) {
  return {{"path", path}, {"fnv1a64", hex64(fnv1a64(bytes))}};
}

template <FieldScalar Scalar>
std::uint64_t seed_for(const Options& o, const Instance<Scalar>& inst) {
  if (o.seed_opt && o.seed_opt->count() > 0) return o.seed;
  return inst.params.seed.value_or(o.seed);
}

template <FieldScalar Scalar>
std::size_t samples_for(const Options& o, const Instance<Scalar>& inst) {
  if (o.samples_opt && o.samples_opt->count() > 0) return o.samples;
  return inst.params.samples.value_or(o.samples);
}

template <FieldScalar Scalar>
const ControlledFusionFrame<Scalar>& require_second(const Instance<Scalar>& inst) {
  if (!inst.second) throw MissingInput("instance has no 'second' block (second frame required)");
  return *inst.second;
}

template <FieldScalar Scalar>
void describe(OrderedJson& entry, std::ostream& text, const std::string& path, const std::string& hash,
              const Instance<Scalar>& inst) {
  entry["field"] = field_name<Scalar>();
  entry["dim"] = inst.frame.dim();
  entry["subspaces"] = inst.frame.size();
  text << path << " (" << field_name<Scalar>() << ", n = " << inst.frame.dim() << ", "
       << inst.frame.size() << " subspaces, fnv1a64 " << hash << ")\n";
}

// ---------------------------------------------------------------------------
// theorem dispatch

template <FieldScalar Scalar>
TheoremReport run_theorem(const std::string& name, const Instance<Scalar>& inst, std::uint64_t seed,
                          std::size_t samples, const Tolerances& tol) {
  if (name == "transform") {
    if (!inst.u) throw MissingInput("instance has no 'params.u' (transform operator required)");
    return verify_transform(inst.frame, *inst.u,
                            inst.params.transform_mode.value_or(TransformMode::adjoint_commuting), tol);
  }
  if (name == "approximate-dual") return verify_approximate_dual(inst.frame, require_second(inst), tol);
  if (name == "subspace-perturbation") {
    const auto& z = require_second(inst);
    double eps = 0.0;
    if (inst.params.epsilon) {
      eps = *inst.params.epsilon;
    } else {
      std::vector<SubspaceBasis<Scalar>> subspaces;
      for (const auto& item : z.family().items()) subspaces.push_back(item.basis);
      eps = subspace_perturbation_size(inst.frame, subspaces, tol).epsilon_eff;
    }
    return verify_subspace_perturbation(inst.frame, z, eps, tol);
  }
  if (name == "lambda-perturbation") {
    const auto& z = require_second(inst);
    PerturbationParams params;
    params.lambda1 = inst.params.lambda1.value_or(0.0);
    params.lambda2 = inst.params.lambda2.value_or(0.0);
    if (inst.params.beta) {
      params.beta = *inst.params.beta;
    } else {
      const double fitted = fit_perturbation_beta(inst.frame, z, samples, seed, tol);
      params.beta = PerturbationParams::uniform_beta(std::max(fitted, 1e-12), inst.frame.size());
    }
    auto report = verify_lambda_perturbation(inst.frame, z, params, samples, seed, tol);
    if (!inst.params.beta) report.notes.push_back("beta fitted from the probe set");
    return report;
  }
  if (name == "q-dual") {
    const auto& wt = require_second(inst);
    const auto q = construct_q_dual(inst.frame, wt, tol, 100, seed);
    return verify_q_dual_bounds(inst.frame, wt, q, tol);
  }
  throw InvalidParams("unknown theorem '" + name + "'");
}

// ---------------------------------------------------------------------------
// per-instance commands; each returns an exit code and fills `entry`

template <FieldScalar Scalar>
int cmd_bounds(Context& ctx, const Instance<Scalar>& inst, OrderedJson& entry, bool classify_only) {
  const BoundsReport report = controlled_bounds(inst.frame, ctx.tol);
  if (classify_only) {
    entry["classification"] = to_string(report.classification);
    entry["bounds"] = to_json(report);
    ctx.text << "  classification = " << to_string(report.classification) << '\n';
  } else {
    entry["bounds"] = to_json(report);
    write_text(ctx.text, report);
  }
  return is_frame(report.classification) ? kExitOk : kExitDegenerate;
}

template <FieldScalar Scalar>
Vector<Scalar> parse_vector_flag(const std::string& text, Eigen::Index n) {
  std::vector<Scalar> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Scalar x{};
    std::size_t used = 0;
    try {
      if constexpr (is_complex_v<Scalar>) {
        // re or re:im
        const auto colon = item.find(':');
        std::size_t used_im = 0;
        const double re = std::stod(item.substr(0, colon), &used);
        double im = 0.0;
        if (colon != std::string::npos) {
          const std::string tail = item.substr(colon + 1);
          im = std::stod(tail, &used_im);
          if (used_im != tail.size()) used = 0;
          else used = item.size();
        }
        x = Scalar(re, im);
      } else {
        x = std::stod(item, &used);
      }
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw InvalidParams("--vector: bad entry '" + item + "'");
    values.push_back(x);
  }
  if (static_cast<Eigen::Index>(values.size()) != n) {
    throw DimensionMismatch("--vector has " + std::to_string(values.size()) + " entries, expected " +
                            std::to_string(n));
  }
  return Eigen::Map<Vector<Scalar>>(values.data(), n);
}

template <FieldScalar Scalar>
int cmd_reconstruct(Context& ctx, const Instance<Scalar>& inst, OrderedJson& entry) {
  const auto n = inst.frame.dim();
  Vector<Scalar> f;
  if (!ctx.opts.vector.empty()) {
    f = parse_vector_flag<Scalar>(ctx.opts.vector, n);
    entry["vector_source"] = "given";
  } else {
    Rng rng(seed_for(ctx.opts, inst));
    f = random_unit_vector<Scalar>(n, rng);
    entry["vector_source"] = "random";
  }
  if (f.norm() == 0.0) throw InvalidParams("--vector must be nonzero");
  const Vector<Scalar> g = controlled_frame_operator(inst.frame) * f;
  try {
    const Vector<Scalar> x = reconstruct(inst.frame, g, ctx.tol);
    const double rel = (x - f).norm() / f.norm();
    entry["relative_error"] = rel;
    ctx.text << "  relative_error = " << format_double(rel) << '\n';
    return kExitOk;
  } catch (const NotAFrame& e) {
    entry["error"] = error_json(e);
    ctx.text << "  " << error_text(e) << '\n';
    return kExitDegenerate;
  }
}

template <FieldScalar Scalar>
int cmd_qdual(Context& ctx, const Instance<Scalar>& inst, OrderedJson& entry) {
  const auto& wt = require_second(inst);
  const auto q = construct_q_dual(inst.frame, wt, ctx.tol, 100, seed_for(ctx.opts, inst));
  entry["q_dual"] = {{"rows", q.q.rows()},
                     {"cols", q.q.cols()},
                     {"norm_Q", operator_norm(q.q)},
                     {"defect", q.defect},
                     {"adjoint_defect", q.adjoint_defect},
                     {"inner_product_residual", q.inner_product_residual}};
  ctx.text << "  Q: " << q.q.rows() << " x " << q.q.cols() << ", ||Q|| = " << format_double(operator_norm(q.q))
           << "\n  defect = " << format_double(q.defect)
           << "\n  adjoint_defect = " << format_double(q.adjoint_defect)
           << "\n  inner_product_residual = " << format_double(q.inner_product_residual) << '\n';
  const auto report = verify_q_dual_bounds(inst.frame, wt, q, ctx.tol);
  entry["theorems"] = OrderedJson::array({to_json(report)});
  write_text(ctx.text, report);
  return report.passes() ? kExitOk : kExitError;
}

template <FieldScalar Scalar>
int cmd_theorems(Context& ctx, const Instance<Scalar>& inst, OrderedJson& entry,
                 const std::vector<std::string>& names, bool skip_errors) {
  const auto seed = seed_for(ctx.opts, inst);
  const auto samples = samples_for(ctx.opts, inst);
  entry["seed"] = seed;
  entry["samples"] = samples;
  int code = kExitOk;
  OrderedJson reports = OrderedJson::array();
  for (const auto& name : names) {
    try {
      const auto report = run_theorem(name, inst, seed, samples, ctx.tol);
      reports.push_back(to_json(report));
      write_text(ctx.text, report);
      if (!report.passes()) code = kExitError;
    } catch (const Error& e) {
      reports.push_back({{"theorem", name}, {"status", skip_errors ? "skipped" : "error"}, {"reason", error_json(e)}});
      ctx.text << "  [" << (skip_errors ? "skip" : "ERR ") << "] " << name << ": " << error_text(e) << '\n';
      if (!skip_errors) code = kExitError;
    }
  }
  entry["theorems"] = std::move(reports);
  return code;
}

using Handler = std::function<int(Context&, const AnyInstance&, OrderedJson&)>;

int for_each_instance(Context& ctx, RunReport& run, const Handler& handler) {
  int code = kExitOk;
  for (const auto& path : ctx.opts.paths) {
    OrderedJson entry;
    std::string bytes;
    try {
      bytes = read_file(path);
      entry = entry_header(path, bytes);
      const AnyInstance inst = parse_instance_text(bytes, ctx.tol);
      std::visit([&](const auto& typed) { describe(entry, ctx.text, path, hex64(fnv1a64(bytes)), typed); },
                 inst);
      code = combine(code, handler(ctx, inst, entry));
    } catch (const std::exception& e) {
      if (entry.is_null()) entry = {{"path", path}};
      entry["error"] = error_json(e);
      if (bytes.empty() || dynamic_cast<const ParseError*>(&e)) ctx.text << path << '\n';
      ctx.text << "  " << error_text(e) << '\n';
      ctx.err << "ccfusion: " << path << ": " << error_text(e) << '\n';
      code = kExitError;
    }
    run.entries.push_back(std::move(entry));
  }
  return code;
}

// ---------------------------------------------------------------------------
// generate

GenConstraint parse_constraint(const std::string& s) {
  if (s == "none") return GenConstraint::none;
  if (s == "squared") return GenConstraint::squared;
  if (s == "identity") return GenConstraint::identity;
  return GenConstraint::gate;
}

template <FieldScalar Scalar>
Instance<Scalar> generate_one(Eigen::Index n, GenConstraint constraint, std::uint64_t seed) {
  Rng rng(seed);
  auto frame = random_controlled_frame<Scalar>(n, rng, constraint);
  if (constraint == GenConstraint::gate && !passes_sqrt_gate(frame)) {
    throw InvalidInput("generated gate instance failed the square-root gate");
  }
  auto second = frame.with_family(replace_subspaces(frame.family(), jitter_subspaces(frame.family(), 0.05, rng)));
  Instance<Scalar> inst{std::move(frame), std::move(second), std::nullopt, {}};
  inst.params.seed = seed;
  inst.params.lambda1 = 0.0;
  inst.params.lambda2 = 0.0;
  if (constraint == GenConstraint::identity) {
    inst.u = random_control<Scalar>(n, rng);
    inst.params.transform_mode = TransformMode::adjoint_commuting;
  } else if (constraint != GenConstraint::none) {
    // u* = a Id + b C commutes with C
    const Matrix<Scalar>& c = inst.frame.controls().c();
    for (;;) {
      const double a = rng.uniform(0.5, 2.0);
      const Scalar b = rng.uniform(-0.5, 0.5) * rng.normal_scalar<Scalar>();
      const Matrix<Scalar> u = (a * Matrix<Scalar>::Identity(n, n) + b * c).adjoint();
      if (check_gl(u).condition_number < 1e4) {
        inst.u = u;
        break;
      }
    }
    inst.params.transform_mode = TransformMode::adjoint_commuting;
  }
  return inst;
}

int cmd_generate(Context& ctx, RunReport& run) {
  const auto& o = ctx.opts;
  if (o.dim < 2 || o.dim > 64) throw InvalidRange("--dim must lie in [2, 64], got " + std::to_string(o.dim));
  if (o.count < 1) throw InvalidRange("--count must be >= 1, got " + std::to_string(o.count));
  const GenConstraint constraint = parse_constraint(o.constraint);
  std::filesystem::create_directories(o.out_dir);
  Rng master(o.seed);
  const int width = std::max<int>(4, static_cast<int>(std::to_string(o.count - 1).size()));
  for (long i = 0; i < o.count; ++i) {
    const std::uint64_t seed = master.next_u64();
    const auto n = static_cast<Eigen::Index>(o.dim);
    const OrderedJson doc = o.field == "complex"
                                ? instance_to_json(generate_one<Complex>(n, constraint, seed))
                                : instance_to_json(generate_one<double>(n, constraint, seed));
    std::ostringstream name;
    name << o.prefix << '-' << std::setw(width) << std::setfill('0') << i << ".json";
    const auto path = (std::filesystem::path(o.out_dir) / name.str()).string();
    const std::string bytes = doc.dump(2) + "\n";
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << bytes)) throw InvalidParams("cannot write '" + path + "'");
    run.entries.push_back({{"path", path}, {"seed", seed}, {"fnv1a64", hex64(fnv1a64(bytes))}});
    ctx.text << path << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Controlled fusion frames: bounds, reconstruction, Q-duals and theorem checks", "ccfusion"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto* bounds = app.add_subcommand("bounds", "Optimal controlled frame bounds");
  auto* classify = app.add_subcommand("classify", "Frame / tight / Parseval / Bessel classification");
  auto* recon = app.add_subcommand("reconstruct", "Recover f from S_W f and report the relative error");
  auto* qdual = app.add_subcommand("qdual", "Construct a Q-dual between the instance and its second frame");
  auto* perturb = app.add_subcommand("perturb", "Subspace and (lambda1, lambda2, beta) perturbation studies");
  auto* verify = app.add_subcommand("verify", "Run theorem verifiers");
  auto* generate = app.add_subcommand("generate", "Write seeded random instances");

  std::vector<std::pair<CLI::App*, std::pair<CLI::Option*, CLI::Option*>>> common;
  for (auto* cmd : {bounds, classify, recon, qdual, perturb, verify, generate}) {
    add_common(cmd, o);
    common.push_back({cmd, {cmd->get_option("--seed"), cmd->get_option("--samples")}});
  }
  for (auto* cmd : {bounds, classify, recon, qdual, perturb, verify}) add_paths(cmd, o);

  auto* vec_opt = recon->add_option("--vector", o.vector, "Comma-separated entries of f (complex: re:im)");
  recon->add_flag("--random", o.random_vector, "Use a seeded random unit vector (default)")->excludes(vec_opt);

  auto* th = verify->add_option("--theorem", o.theorem, "Theorem to verify")->check(CLI::IsMember(kTheorems));
  auto* all = verify->add_flag("--all", o.all, "Run every theorem; inapplicable ones are skipped");
  th->excludes(all);

  generate->add_option("--dim", o.dim, "Ambient dimension (2..64)")->required();
  generate->add_option("--count", o.count, "Number of instances");
  generate->add_option("--constraint", o.constraint, "Control constraint")
      ->check(CLI::IsMember({"none", "squared", "identity", "gate"}));
  generate->add_option("--field", o.field, "Scalar field")->check(CLI::IsMember({"real", "complex"}));
  generate->add_option("--out-dir", o.out_dir, "Output directory");
  generate->add_option("--prefix", o.prefix, "File name prefix");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (verify->parsed() && o.theorem.empty() && !o.all) {
      throw CLI::ValidationError("verify", "one of --theorem or --all is required");
    }
  } catch (const CLI::ParseError& e) {
    std::ostringstream app_out;
    std::ostringstream app_err;
    const int code = app.exit(e, app_out, app_err);
    out << app_out.str();
    err << app_err.str();
    return code == 0 ? kExitOk : kExitError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  for (const auto& [c, opts] : common) {
    if (c == cmd) {
      o.seed_opt = opts.first;
      o.samples_opt = opts.second;
    }
  }

  RunReport run;
  run.command = cmd->get_name();
  run.seed = o.seed;
  run.samples = o.samples;
  std::ostringstream text;
  int code = kExitOk;
  try {
    run.tolerances = parse_tolerances(o.tol_overrides);
    Context ctx{o, run.tolerances, text, err};
    const std::string name = cmd->get_name();
    if (name == "generate") {
      code = cmd_generate(ctx, run);
    } else {
      Handler handler;
      if (name == "bounds" || name == "classify") {
        const bool only = name == "classify";
        handler = [only](Context& c, const AnyInstance& inst, OrderedJson& entry) {
          return std::visit([&](const auto& t) { return cmd_bounds(c, t, entry, only); }, inst);
        };
      } else if (name == "reconstruct") {
        handler = [](Context& c, const AnyInstance& inst, OrderedJson& entry) {
          return std::visit([&](const auto& t) { return cmd_reconstruct(c, t, entry); }, inst);
        };
      } else if (name == "qdual") {
        handler = [](Context& c, const AnyInstance& inst, OrderedJson& entry) {
          return std::visit([&](const auto& t) { return cmd_qdual(c, t, entry); }, inst);
        };
      } else {
        std::vector<std::string> names;
        bool skip = false;
        if (name == "perturb") {
          names = {"subspace-perturbation", "lambda-perturbation"};
        } else if (o.all) {
          names = kTheorems;
          skip = true;
        } else {
          names = {o.theorem};
        }
        handler = [names, skip](Context& c, const AnyInstance& inst, OrderedJson& entry) {
          return std::visit([&](const auto& t) { return cmd_theorems(c, t, entry, names, skip); }, inst);
        };
      }
      code = for_each_instance(ctx, run, handler);
    }
  } catch (const std::exception& e) {
    err << "ccfusion: " << error_text(e) << '\n';
    return kExitError;
  }

  run.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.output == "json") {
    out << run.to_json().dump(2) << '\n';
  } else {
    out << text.str();
    out << "elapsed_ms: " << format_double(run.timing_ms) << '\n';
  }
  return code;
}

}  // namespace ccfusion
