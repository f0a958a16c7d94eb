// folcone: foliation cones from symbolic and branched-surface data.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include <unistd.h>

#include <CLI11.hpp>

#include "folcone/commands.hpp"
#include "folcone/error.hpp"

namespace {

using namespace folcone;

struct Output {
  std::string out;
  bool json = false;
};

bool use_color(const Output& o) {
  return o.out.empty() && std::getenv("FOLCONE_NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
}

void emit(const Output& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    throw InputError(o.out + ": cannot write output");
  }
  f << text;
}

int run_report(const Output& o, const std::function<Report()>& command) {
  const Report r = command();
  emit(o, o.json ? r.machine_text() : r.human_text(use_color(o)));
  return r.ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foliation cones of sutured manifolds from Markov data, fans, balls and branch equations"};
  app.require_subcommand(1);
  Output o;
  app.add_option("--out", o.out, "Write the output to this file");
  app.add_flag("--json", o.json, "Print the machine-readable report");
  app.fallthrough();

  std::string a, b;
  std::optional<std::string> slice, ball_file, presentation;
  std::function<int()> action;

  auto* loops = app.add_subcommand("loops", "Minimal periods and their classes");
  loops->add_option("presentation", a)->required()->check(CLI::ExistingFile);
  loops->callback([&] { action = [&] { return run_report(o, [&] { return cmd_loops(a); }); }; });

  auto* cone = app.add_subcommand("cone", "Foliation cone of one presentation");
  cone->add_option("presentation", a)->required()->check(CLI::ExistingFile);
  cone->callback([&] { action = [&] { return run_report(o, [&] { return cmd_cone(a); }); }; });

  auto* fan = app.add_subcommand("fan", "Assemble a fan and verify disjoint interiors");
  fan->add_option("fan", a)->required()->check(CLI::ExistingFile);
  fan->callback([&] { action = [&] { return run_report(o, [&] { return cmd_fan(a); }); }; });

  auto* faces = app.add_subcommand("faces", "Full-dimensional cones (-Ci) ∩ Cj of a fan");
  faces->add_option("fan", a)->required()->check(CLI::ExistingFile);
  faces->callback([&] { action = [&] { return run_report(o, [&] { return cmd_faces(a); }); }; });

  auto* ball = app.add_subcommand("ball", "Compare face cones with the faces of a norm ball");
  ball->add_option("fan", a)->required()->check(CLI::ExistingFile);
  ball->add_option("ball", b)->required()->check(CLI::ExistingFile);
  ball->callback([&] { action = [&] { return run_report(o, [&] { return cmd_ball(a, b); }); }; });

  auto* member = app.add_subcommand("member", "Locate classes in a fan");
  member->add_option("fan", a)->required()->check(CLI::ExistingFile);
  member->add_option("class", b, "Vector such as \"1,0\" or a class-query file")->required();
  member->callback([&] { action = [&] { return run_report(o, [&] { return cmd_member(a, b); }); }; });

  auto* transfer = app.add_subcommand("transfer", "Pull a fan back along a disk decomposition map");
  transfer->add_option("map", a)->required()->check(CLI::ExistingFile);
  transfer->add_option("fan", b)->required()->check(CLI::ExistingFile);
  transfer->callback([&] { action = [&] { return run_report(o, [&] { return cmd_transfer(a, b); }); }; });

  auto* branch = app.add_subcommand("branch", "Oertel cone of a branched surface");
  branch->add_option("branched", a)->required()->check(CLI::ExistingFile);
  branch->add_option("presentation", presentation, "Check containment in this foliation cone")
      ->check(CLI::ExistingFile);
  branch->callback([&] {
    action = [&] {
      return run_report(o, [&] {
        return cmd_branch(a, presentation ? std::optional<Path>(*presentation) : std::nullopt);
      });
    };
  });

  auto* plot = app.add_subcommand("plot", "SVG picture of a fan");
  plot->add_option("fan", a)->required()->check(CLI::ExistingFile);
  plot->add_option("--slice", slice, "Slicing functional \"a,b,c\" for 3-dimensional fans");
  plot->add_option("--ball", ball_file, "Ball file drawn dashed")->check(CLI::ExistingFile);
  plot->callback([&] {
    action = [&] {
      PlotRequest req;
      req.slice = slice;
      if (ball_file) {
        req.ball = Path(*ball_file);
      }
      emit(o, cmd_plot(a, req));
      return static_cast<int>(kExitOk);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    return action();
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
