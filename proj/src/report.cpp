#include "folcone/report.hpp"

#include <sstream>

#include "folcone/error.hpp"

namespace folcone {

using nlohmann::json;

Report::Section& Report::add(std::string title) {
  sections.push_back({std::move(title), json::array()});
  return sections.back();
}

json Report::to_machine() const {
  json j;
  j["command"] = command;
  j["status"] = ok ? "ok" : "fail";
  j["sections"] = json::array();
  for (const auto& s : sections) {
    j["sections"].push_back({{"title", s.title}, {"rows", s.rows}});
  }
  return j;
}

Report Report::from_machine(const json& j) {
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status != "ok" && status != "fail") {
      throw Error("bad status \"" + status + "\"");
    }
    r.ok = status == "ok";
    for (const auto& s : j.at("sections")) {
      r.sections.push_back({s.at("title").get<std::string>(), s.at("rows")});
    }
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string Report::machine_text() const { return to_machine().dump(2) + "\n"; }

namespace {

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string Report::human_text(bool color) const {
  const json m = to_machine();
  std::ostringstream out;
  const bool good = m["status"] == "ok";
  std::string status = m["status"].get<std::string>();
  if (color) {
    status = (good ? "\x1b[32m" : "\x1b[31m") + status + "\x1b[0m";
  }
  out << "folcone " << m["command"].get<std::string>() << ": " << status << "\n";
  for (const auto& s : m["sections"]) {
    out << "\n" << s["title"].get<std::string>() << "\n";
    if (s["rows"].empty()) {
      out << "  (none)\n";
    }
    for (const auto& row : s["rows"]) {
      out << "  ";
      if (row.is_object()) {
        bool first = true;
        for (const auto& [k, v] : row.items()) {
          out << (first ? "" : "; ") << k << ": " << scalar_text(v);
          first = false;
        }
      } else {
        out << scalar_text(row);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace folcone
