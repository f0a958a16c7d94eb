#include <filesystem>
#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "folcone/commands.hpp"
#include "folcone/io.hpp"
#include "folcone/plot.hpp"
#include "folcone/report.hpp"

using namespace folcone;
using namespace testing_helpers;

namespace {

const std::filesystem::path kSamples = FOLCONE_SOURCE_DIR "/samples";

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped presentation parses to the worked example") {
  const auto p = read_presentation(kSamples / "pretzel222.json");
  CHECK(p.dim == 2);
  CHECK(p.symmetries.size() == 1);
  CHECK(foliation_cone(p).cone == foliation_cone(fixtures::pretzel222()).cone);
  const auto fan = read_fan(kSamples / "fan222.json");
  CHECK(fan.members.size() == 3);
  CHECK(assemble_fan(fan.members).disjointness_verified);
}

TEST_CASE("parse diagnostics") {
  auto msg = error_of([] { parse_presentation("{\n  \"kind\": \"presentation\",\n  \"dim\": ", "t.json"); });
  CHECK(msg.find("t.json:3:") == 0);

  msg = error_of([] { parse_presentation(R"({"schema_version": 2, "kind": "presentation"})", "t.json"); });
  CHECK(msg.find("/schema_version: unsupported schema_version 2") != std::string::npos);

  msg = error_of([] { parse_presentation(R"({"schema_version": 1, "kind": "fan"})", "t.json"); });
  CHECK(msg.find("/kind: expected kind \"presentation\"") != std::string::npos);

  msg = error_of([] {
    parse_presentation(R"({"schema_version": 1, "kind": "presentation", "name": "x", "dim": 2,
                           "loop_classes": [{"label": "a", "vector": [1.5, 0]}]})",
                       "t.json");
  });
  CHECK(msg.find("/loop_classes/0/vector/0: non-integer number") != std::string::npos);

  msg = error_of([] {
    parse_presentation(R"({"schema_version": 1, "kind": "presentation", "name": "x", "dim": 2,
                           "markov": {"incidence": [[1, 1], [1, 1]],
                                      "weights": [{"from": 1, "to": 3, "vector": [0, 0]}]}})",
                       "t.json");
  });
  CHECK(msg.find("/markov/weights/0: state out of range") != std::string::npos);

  msg = error_of([] {
    parse_presentation(R"({"schema_version": 1, "kind": "presentation", "name": "x", "dim": 2})", "t.json");
  });
  CHECK_FALSE(msg.empty());
}

TEST_CASE("inline fan members and rational entries") {
  const auto fan = parse_fan(R"({"schema_version": 1, "kind": "fan", "name": "f", "dim": 2, "members": [
      {"name": "a", "rays": [["1/2", 0], [0, "3/4"]]},
      {"name": "b", "inequalities": [[-1, 0]]}]})",
                             ".");
  REQUIRE(fan.members.size() == 2);
  CHECK(fan.members[0].cone == Cone::from_generators(2, ivs({{1, 0}, {0, 1}})));
  CHECK(assemble_fan(fan.members).disjointness_verified);
  CHECK_THROWS_AS(parse_fan(R"({"schema_version": 1, "kind": "fan", "name": "f", "dim": 2, "members": [
      {"name": "a", "rays": [[1, 0]], "inequalities": [[1, 0]]}]})",
                            "."),
                  InputError);
}

TEST_CASE("vector literals") {
  CHECK(parse_vector_literal("1,0") == rv({"1", "0"}));
  CHECK(parse_vector_literal(" -1/2 , 3") == rv({"-1/2", "3"}));
  CHECK_THROWS_AS(parse_vector_literal("1,,0"), InputError);
  CHECK_THROWS_AS(parse_vector_literal("1,"), InputError);
  CHECK_THROWS_AS(parse_vector_literal("x"), InputError);
}

TEST_CASE("reports round-trip through the machine form") {
  for (const auto& r : {cmd_cone(kSamples / "link2.json"), cmd_fan(kSamples / "fan_overlap.json"),
                        cmd_loops(kSamples / "product.json")}) {
    const auto back = Report::from_machine(nlohmann::json::parse(r.machine_text()));
    CHECK(back.machine_text() == r.machine_text());
    CHECK(back.human_text(false) == r.human_text(false));
  }
  const auto bad = cmd_fan(kSamples / "fan_overlap.json");
  CHECK_FALSE(bad.ok);
  CHECK(bad.human_text(true).find("\x1b[31mfail") != std::string::npos);
  CHECK(bad.human_text(false).find("\x1b") == std::string::npos);
  CHECK_THROWS_AS(Report::from_machine(nlohmann::json::parse(R"({"command": "x"})")), Error);
}

TEST_CASE("command verdicts") {
  const auto m = cmd_member(kSamples / "fan222.json", "1,0");
  CHECK(m.sections.back().rows[0]["verdict"] == "boundary: not a proper foliated ray");
  const auto loops = cmd_loops(kSamples / "pretzel242.json");
  CHECK(loops.sections.back().rows.size() == 3);
  CHECK(cmd_loops(kSamples / "product.json").sections.back().rows[0] == "no loops (full-space cone)");
  const auto ball = cmd_ball(kSamples / "fan222.json", kSamples / "hexagon.json");
  CHECK(ball.ok);
  CHECK_FALSE(cmd_ball(kSamples / "fan222.json", kSamples / "square.json").ok);
}

TEST_CASE("plots") {
  const auto fan = fixtures::fan222();
  const auto labels = fixtures::labels_with_e0(2);
  const auto a = plot_fan(fan, labels);
  CHECK(a == plot_fan(fan, labels));
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("<path") != std::string::npos);

  Fan whole{2, {{"product", Cone::full_space(2), {}, {}, labels}}, true};
  CHECK(plot_fan(whole, labels).find("<circle") != std::string::npos);

  CHECK_THROWS_AS(plot_fan(Fan{2, {}, true}, labels), InputError);
  const auto q4 = Cone::from_generators(4, ivs({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  Fan four{4, {{"q", q4, {}, {}, LabelSet::defaults(4)}}, true};
  CHECK(error_of([&] { plot_fan(four, LabelSet::defaults(4)); }).find("supply --slice") != std::string::npos);

  const auto link = foliation_cone(fixtures::link2());
  Fan three{3, {link}, true};
  PlotOptions opt;
  opt.slice = rv({"-1", "1", "1"});
  CHECK(plot_fan(three, link.labels, opt).find("<polygon") != std::string::npos);
  opt.slice = rv({"1", "1", "1"});
  CHECK_THROWS_AS(plot_fan(three, link.labels, opt), InputError);
}
