#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folcone/ball.hpp"
#include "folcone/branched.hpp"
#include "folcone/foliation.hpp"

namespace folcone {

inline constexpr int kSchemaVersion = 1;

/// Cones of a fan file before disjointness is checked: every member with its
/// symmetry orbit expanded.
struct FanInput {
  std::string name;
  std::size_t dim = 0;
  std::vector<FoliationCone> members;
  LabelSet labels;
};

struct MapInput {
  std::string name;
  RatMatrix p_star;
  std::optional<LabelSet> labels;  // names in the source space
};

struct ClassQuery {
  std::string label;
  RatVector vector;
};

/// Document kinds; `kind` must match the file's "kind" field.
std::string document_kind(const std::filesystem::path& file);

SuturedPresentation read_presentation(const std::filesystem::path& file);
/// Accepts a fan file or a single presentation (taken with its orbit).
FanInput read_fan(const std::filesystem::path& file);
PLBall read_ball(const std::filesystem::path& file);
MapInput read_map(const std::filesystem::path& file);
BranchedSurfaceData read_branched(const std::filesystem::path& file);
std::vector<ClassQuery> read_class_query(const std::filesystem::path& file);

/// Parsers over in-memory text; `source` names the text in diagnostics and
/// `base` resolves relative member paths.
SuturedPresentation parse_presentation(const std::string& text, const std::string& source = "<input>");
FanInput parse_fan(const std::string& text, const std::filesystem::path& base,
                   const std::string& source = "<input>");

/// "1,0" or "1/2, -3" as a vector.
RatVector parse_vector_literal(const std::string& text);

}  // namespace folcone
