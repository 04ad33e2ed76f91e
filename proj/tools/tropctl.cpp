// tropctl: exact max-plus toolkit front end.
//
// Verbs: solve, star, invariant, feedback, timetable, simulate, volume.
// Exit codes: 0 success, 1 negative mathematical outcome (diverged star,
// no stabilization within the cap, no linear feedback, volume outside the
// all-finite regime), 2 malformed input or usage.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropctl/io.hpp"

namespace {

using namespace tropctl;

struct OutputOptions {
  std::string format = "text";
  std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", out.path, "Write the report to a file");
}

void emit(const OutputOptions& out, const std::string& json_form,
          const std::string& text_form) {
  const std::string& body = out.format == "json" ? json_form : text_form;
  if (out.path.empty()) {
    std::cout << body;
  } else {
    io::write_file(out.path, body);
  }
}

// Inline JSON (starts with '[' or '{') or a path to a file holding it.
std::string slurp_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return arg;
  return io::read_file(arg);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact max-plus invariance, feedback and timetable toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand(
      "solve", "Generators of {x : D x = C x} from {\"D\":..., \"C\":...}");
  std::string solve_input;
  OutputOptions solve_out;
  solve_cmd->add_option("input", solve_input, "System JSON file")->required();
  add_output_options(solve_cmd, solve_out);

  // star
  auto* star_cmd =
      app.add_subcommand("star", "Kleene star of a square matrix");
  std::string star_input;
  OutputOptions star_out;
  star_cmd->add_option("input", star_input, "Matrix JSON file")->required();
  add_output_options(star_cmd, star_out);

  // invariant
  auto* inv_cmd = app.add_subcommand(
      "invariant",
      "Maximal (A,B)-invariant semimodule in K from {\"A\",\"B\",\"K\"}");
  std::string inv_input, inv_domain = "full";
  std::size_t inv_cap = 64;
  OutputOptions inv_out;
  inv_cmd->add_option("input", inv_input, "Problem JSON file")->required();
  inv_cmd->add_option("--cap", inv_cap, "Iteration cap")->capture_default_str();
  inv_cmd->add_option("--domain", inv_domain, "Scalar domain for K")
      ->check(CLI::IsMember({"full", "nonpositive"}))
      ->capture_default_str();
  add_output_options(inv_cmd, inv_out);

  // feedback
  auto* fb_cmd = app.add_subcommand(
      "feedback", "Linear state feedback for X from {\"A\",\"B\",\"X\"}");
  std::string fb_input;
  OutputOptions fb_out;
  fb_cmd->add_option("input", fb_input, "Problem JSON file")->required();
  add_output_options(fb_cmd, fb_out);

  // timetable
  auto* tt_cmd = app.add_subcommand(
      "timetable", "Synthesize a periodic timetable for a network");
  std::string tt_input;
  std::size_t tt_cap = 64;
  std::optional<std::int64_t> tt_l, tt_m;
  OutputOptions tt_out;
  tt_cmd->add_option("input", tt_input, "Network JSON file")->required();
  tt_cmd->add_option("--cap", tt_cap, "Iteration cap")->capture_default_str();
  tt_cmd->add_option("--L", tt_l, "Headway bound override");
  tt_cmd->add_option("--M", tt_m, "Connection wait bound override");
  add_output_options(tt_cmd, tt_out);

  // simulate
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Run the network dynamics and check the bounds");
  std::string sim_input, sim_x0, sim_fb, sim_tt, sim_periodic;
  std::size_t sim_steps = 5;
  OutputOptions sim_out;
  sim_cmd->add_option("input", sim_input, "Network JSON file")->required();
  sim_cmd->add_option("--x0", sim_x0, "Extended initial state (inline or file)")
      ->required();
  sim_cmd->add_option("--steps", sim_steps, "Departures to simulate")
      ->capture_default_str();
  auto* fb_opt =
      sim_cmd->add_option("--feedback", sim_fb, "Feedback matrix JSON");
  auto* tt_opt = sim_cmd->add_option("--timetable", sim_tt,
                                     "Timetable JSON (list of u(k) vectors)");
  auto* per_opt = sim_cmd->add_option(
      "--periodic", sim_periodic, "{\"lambda\": l, \"u0\": [...]} timetable");
  fb_opt->excludes(tt_opt)->excludes(per_opt);
  tt_opt->excludes(per_opt);
  add_output_options(sim_cmd, sim_out);

  // volume
  auto* vol_cmd = app.add_subcommand("volume", "Volume of a semimodule");
  std::string vol_input;
  OutputOptions vol_out;
  vol_cmd->add_option("input", vol_input, "Semimodule JSON file")->required();
  add_output_options(vol_cmd, vol_out);

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) {
    const TwoSidedSystem sys = io::parse_system(io::read_file(solve_input));
    const Semimodule solution(solve_system(sys));
    emit(solve_out, io::semimodule_json(solution),
         io::semimodule_text(solution));
    return 0;
  }

  if (star_cmd->parsed()) {
    const StarResult r = kleene_star(io::parse_matrix(io::read_file(star_input)));
    emit(star_out, io::star_json(r), io::star_text(r));
    return r.diverged() ? 1 : 0;
  }

  if (inv_cmd->parsed()) {
    const nlohmann::json j = nlohmann::json::parse(io::read_file(inv_input));
    const TropMatrix a = io::parse_matrix(j.at("A").dump());
    const TropMatrix b = io::parse_matrix(j.at("B").dump());
    nlohmann::json kj = j.at("K");
    if (!kj.contains("domain") && inv_domain != "full") {
      kj["domain"] = inv_domain;
    }
    const Semimodule k = io::parse_semimodule(kj.dump());
    const InvarianceReport r = max_invariant(k, a, b, inv_cap);
    emit(inv_out, io::invariance_json(r), io::invariance_text(r));
    return r.cap_exceeded ? 1 : 0;
  }

  if (fb_cmd->parsed()) {
    const nlohmann::json j = nlohmann::json::parse(io::read_file(fb_input));
    const TropMatrix a = io::parse_matrix(j.at("A").dump());
    const TropMatrix b = io::parse_matrix(j.at("B").dump());
    const Semimodule x = io::parse_semimodule(j.at("X").dump());
    const FeedbackResult r = solve_feedback(a, b, x);
    emit(fb_out, io::feedback_json(r), io::feedback_text(r));
    return r.found() ? 0 : 1;
  }

  if (tt_cmd->parsed()) {
    NetworkSpec spec = io::parse_network(io::read_file(tt_input));
    if (tt_l) spec.headway_bound.assign(spec.directions, *tt_l);
    if (tt_m) {
      spec.connection_bound.assign(
          spec.directions, std::vector<std::int64_t>(spec.directions, *tt_m));
    }
    spec.validate();
    const SynthesisOutput out = synthesize(spec, tt_cap);
    emit(tt_out, io::synthesis_json(out), io::synthesis_text(out));
    return out.status == SynthesisOutput::Status::synthesized ? 0 : 1;
  }

  if (sim_cmd->parsed()) {
    const NetworkSpec spec = io::parse_network(io::read_file(sim_input));
    const Vec x0 = io::parse_vector(slurp_arg(sim_x0));
    SimControl control = SimControl::none();
    if (!sim_fb.empty()) {
      control = SimControl::with_feedback(io::parse_matrix(io::read_file(sim_fb)));
    } else if (!sim_tt.empty()) {
      const nlohmann::json j = nlohmann::json::parse(slurp_arg(sim_tt));
      std::vector<Vec> u;
      for (const auto& row : j) u.push_back(io::parse_vector(row.dump()));
      control = SimControl::with_timetable(std::move(u));
    } else if (!sim_periodic.empty()) {
      const nlohmann::json j = nlohmann::json::parse(slurp_arg(sim_periodic));
      control = SimControl::with_periodic(
          j.at("lambda").get<std::int64_t>(),
          io::parse_vector(j.at("u0").dump()));
    }
    const SimulationResult r = simulate(spec, control, x0, sim_steps);
    emit(sim_out, io::simulation_json(r), io::simulation_text(r));
    return 0;
  }

  if (vol_cmd->parsed()) {
    const Semimodule s = io::parse_semimodule(io::read_file(vol_input));
    const VolumeResult r = volume(s);
    emit(vol_out, io::volume_json(r), io::volume_text(r));
    return r.finite() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "tropctl: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "tropctl: " << e.what() << "\n";
    return 2;
  }
}
