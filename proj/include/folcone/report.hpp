#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace folcone {

/// Command output. The machine form is canonical JSON; the human rendering is
/// produced from the machine form only.
struct Report {
  struct Section {
    std::string title;
    nlohmann::json rows = nlohmann::json::array();  // strings or flat objects
  };

  std::string command;
  bool ok = true;
  std::vector<Section> sections;

  Section& add(std::string title);

  nlohmann::json to_machine() const;
  static Report from_machine(const nlohmann::json& j);
  /// Pretty-printed machine form with sorted keys and a trailing newline.
  std::string machine_text() const;
  std::string human_text(bool color) const;
};

}  // namespace folcone
