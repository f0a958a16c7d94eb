#include "folcone/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "folcone/linalg.hpp"

namespace folcone {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

/// A JSON value together with its location, for diagnostics.
class Node {
 public:
  Node(const json& value, std::string source, std::string pointer = "")
      : value_(&value), source_(std::move(source)), pointer_(std::move(pointer)) {}

  const json& value() const { return *value_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(source_ + ": " + (pointer_.empty() ? "/" : pointer_) + ": " + message);
  }

  bool has(const char* key) const { return value_->is_object() && value_->contains(key); }

  Node at(const char* key) const {
    expect_object();
    if (!value_->contains(key)) {
      fail(std::string("missing field \"") + key + "\"");
    }
    return Node(value_->at(key), source_, pointer_ + "/" + escape_pointer_token(key));
  }

  std::optional<Node> get(const char* key) const {
    if (!has(key)) {
      return std::nullopt;
    }
    return at(key);
  }

  Node at(std::size_t i) const { return Node(value_->at(i), source_, pointer_ + "/" + std::to_string(i)); }

  void expect_object() const {
    if (!value_->is_object()) {
      fail("expected an object");
    }
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    expect_object();
    for (const auto& [k, v] : value_->items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
        fail("unknown field \"" + k + "\"");
      }
    }
  }

  std::size_t size_of_array() const {
    if (!value_->is_array()) {
      fail("expected an array");
    }
    return value_->size();
  }

  std::string as_string() const {
    if (!value_->is_string()) {
      fail("expected a string");
    }
    return value_->get<std::string>();
  }

  bool as_bool() const {
    if (!value_->is_boolean()) {
      fail("expected true or false");
    }
    return value_->get<bool>();
  }

  long as_long() const {
    if (!value_->is_number_integer()) {
      fail("expected an integer");
    }
    return value_->get<long>();
  }

  std::size_t as_count(long min) const {
    const long v = as_long();
    if (v < min) {
      fail("expected an integer >= " + std::to_string(min));
    }
    return static_cast<std::size_t>(v);
  }

  Rat as_rat() const {
    if (value_->is_number_integer()) {
      return value_->is_number_unsigned() ? Rat(std::to_string(value_->get<unsigned long>()))
                                          : Rat(value_->get<long>());
    }
    if (value_->is_string()) {
      try {
        return parse_rat(value_->get<std::string>());
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    if (value_->is_number_float()) {
      fail("non-integer number; write rationals as \"p/q\"");
    }
    fail("expected an integer or a \"p/q\" string");
  }

  Int as_int() const {
    const Rat r = as_rat();
    if (r.get_den() != 1) {
      fail("expected an integer");
    }
    return r.get_num();
  }

  RatVector as_rat_vector(std::optional<std::size_t> dim = std::nullopt) const {
    const std::size_t n = size_of_array();
    if (dim && n != *dim) {
      fail("expected " + std::to_string(*dim) + " entries, found " + std::to_string(n));
    }
    RatVector out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(at(i).as_rat());
    }
    return out;
  }

  IntVector as_int_vector(std::optional<std::size_t> dim = std::nullopt) const {
    const std::size_t n = size_of_array();
    if (dim && n != *dim) {
      fail("expected " + std::to_string(*dim) + " entries, found " + std::to_string(n));
    }
    IntVector out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(at(i).as_int());
    }
    return out;
  }

  std::vector<RatVector> as_rat_vectors(std::optional<std::size_t> dim = std::nullopt) const {
    std::vector<RatVector> out;
    const std::size_t n = size_of_array();
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(at(i).as_rat_vector(dim));
    }
    return out;
  }

  std::vector<IntVector> as_int_vectors(std::optional<std::size_t> dim = std::nullopt) const {
    std::vector<IntVector> out;
    const std::size_t n = size_of_array();
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(at(i).as_int_vector(dim));
    }
    return out;
  }

  RatMatrix as_matrix(std::optional<std::size_t> rows, std::optional<std::size_t> cols) const {
    const std::size_t n = size_of_array();
    if (n == 0) {
      fail("matrix has no rows");
    }
    if (rows && n != *rows) {
      fail("expected " + std::to_string(*rows) + " rows, found " + std::to_string(n));
    }
    std::vector<RatVector> r;
    for (std::size_t i = 0; i < n; ++i) {
      r.push_back(at(i).as_rat_vector(i == 0 ? cols : std::optional<std::size_t>(r.front().size())));
    }
    if (r.front().empty()) {
      fail("matrix has no columns");
    }
    return RatMatrix::from_rows(r, r.front().size());
  }

 private:
  const json* value_;
  std::string source_;
  std::string pointer_;
};

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw InputError(file.string() + ": cannot open file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    if (cut != std::string::npos) {
      what = what.substr(cut);
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                     what + ")");
  }
}

void check_header(const Node& root, const std::string& kind, bool require_version = true) {
  root.expect_object();
  if (require_version || root.has("schema_version")) {
    const Node v = root.at("schema_version");
    if (v.as_long() != kSchemaVersion) {
      v.fail("unsupported schema_version " + std::to_string(v.as_long()) + " (expected " +
             std::to_string(kSchemaVersion) + ")");
    }
  }
  const Node k = root.at("kind");
  if (k.as_string() != kind) {
    k.fail("expected kind \"" + kind + "\", found \"" + k.as_string() + "\"");
  }
}

LabelSet parse_labels(const Node& n, std::size_t dim) {
  n.allow_only({"basis", "dual", "derived"});
  LabelSet labels = LabelSet::defaults(dim);
  auto names = [&](const Node& arr) {
    if (arr.size_of_array() != dim) {
      arr.fail("expected " + std::to_string(dim) + " names");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i) {
      out.push_back(arr.at(i).as_string());
    }
    return out;
  };
  if (auto b = n.get("basis")) {
    labels.basis = names(*b);
  }
  if (auto d = n.get("dual")) {
    labels.dual = names(*d);
  }
  if (auto d = n.get("derived")) {
    for (std::size_t i = 0; i < d->size_of_array(); ++i) {
      const Node item = d->at(i);
      item.allow_only({"label", "vector"});
      labels.derived.push_back({item.at("label").as_string(), item.at("vector").as_int_vector(dim)});
    }
  }
  return labels;
}

MarkovSystem parse_markov(const Node& n, std::size_t dim) {
  n.allow_only({"incidence", "state_labels", "weights"});
  const Node inc = n.at("incidence");
  const std::size_t size = inc.size_of_array();
  if (size == 0) {
    inc.fail("incidence matrix is empty");
  }
  std::vector<std::vector<int>> a;
  for (std::size_t i = 0; i < size; ++i) {
    const Node row = inc.at(i);
    if (row.size_of_array() != size) {
      row.fail("incidence must be square");
    }
    std::vector<int> r;
    for (std::size_t j = 0; j < size; ++j) {
      const long v = row.at(j).as_long();
      if (v != 0 && v != 1) {
        row.at(j).fail("incidence must be 0/1");
      }
      r.push_back(static_cast<int>(v));
    }
    a.push_back(std::move(r));
  }
  std::vector<std::string> state_labels;
  if (auto sl = n.get("state_labels")) {
    if (sl->size_of_array() != size) {
      sl->fail("expected " + std::to_string(size) + " state labels");
    }
    for (std::size_t i = 0; i < size; ++i) {
      state_labels.push_back(sl->at(i).as_string());
    }
  }
  std::map<Transition, IntVector> weights;
  std::size_t homology_dim = 0;
  if (auto w = n.get("weights")) {
    homology_dim = dim;
    for (std::size_t i = 0; i < w->size_of_array(); ++i) {
      const Node item = w->at(i);
      item.allow_only({"from", "to", "vector"});
      const std::size_t from = item.at("from").as_count(1);
      const std::size_t to = item.at("to").as_count(1);
      if (from > size || to > size) {
        item.fail("state out of range 1.." + std::to_string(size));
      }
      const Transition t{from - 1, to - 1};
      if (a[t.from][t.to] == 0) {
        item.fail("weight on a forbidden transition");
      }
      if (weights.count(t) != 0) {
        item.fail("duplicate weight for transition");
      }
      weights[t] = item.at("vector").as_int_vector(dim);
    }
  }
  try {
    return MarkovSystem(std::move(a), homology_dim, std::move(weights), std::move(state_labels));
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

SuturedPresentation parse_presentation_node(const Node& root, bool inline_member) {
  check_header(root, "presentation", !inline_member);
  root.allow_only({"schema_version", "kind", "name", "dim", "labels", "markov", "loop_classes", "product",
                   "symmetries", "notes"});
  SuturedPresentation p;
  p.name = root.at("name").as_string();
  p.dim = root.at("dim").as_count(1);
  p.labels = root.has("labels") ? parse_labels(root.at("labels"), p.dim) : LabelSet::defaults(p.dim);
  if (auto m = root.get("markov")) {
    p.markov = parse_markov(*m, p.dim);
  }
  if (auto lc = root.get("loop_classes")) {
    std::vector<std::pair<std::string, IntVector>> classes;
    for (std::size_t i = 0; i < lc->size_of_array(); ++i) {
      const Node item = lc->at(i);
      item.allow_only({"label", "vector"});
      classes.emplace_back(item.at("label").as_string(), item.at("vector").as_int_vector(p.dim));
    }
    p.loop_classes = explicit_loop_classes(classes);
  }
  if (auto pr = root.get("product")) {
    p.product = pr->as_bool();
  }
  if (auto s = root.get("symmetries")) {
    for (std::size_t i = 0; i < s->size_of_array(); ++i) {
      p.symmetries.push_back(s->at(i).as_matrix(p.dim, p.dim));
    }
  }
  if (auto nt = root.get("notes")) {
    p.notes = nt->as_string();
  }
  try {
    validate(p);
    gather_loop_classes(p);
  } catch (const InputError& e) {
    root.fail(e.what());
  }
  return p;
}

FoliationCone parse_cone_member(const Node& n, std::size_t dim, const LabelSet& labels) {
  n.allow_only({"name", "rays", "lineality", "inequalities"});
  const bool by_rays = n.has("rays") || n.has("lineality");
  if (by_rays == n.has("inequalities")) {
    n.fail("give either rays/lineality or inequalities");
  }
  Cone c = Cone::zero(dim);
  if (by_rays) {
    std::vector<RatVector> gens;
    if (auto r = n.get("rays")) {
      gens = r->as_rat_vectors(dim);
    }
    if (auto l = n.get("lineality")) {
      for (const auto& v : l->as_rat_vectors(dim)) {
        gens.push_back(v);
        gens.push_back(negated(v));
      }
    }
    c = Cone::from_generators(dim, gens);
  } else {
    c = Cone::from_inequalities(dim, n.at("inequalities").as_rat_vectors(dim));
  }
  FoliationCone fc{n.at("name").as_string(), c, {}, {}, labels};
  for (const auto& r : fc.cone.rays()) {
    fc.base.push_back({r, render_ray(labels, r)});
  }
  return fc;
}

Node root_of(const json& j, const std::string& source) { return Node(j, source); }

}  // namespace

RatVector parse_vector_literal(const std::string& text) {
  RatVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw InputError("vector \"" + text + "\": empty entry");
    }
    try {
      out.push_back(parse_rat(item.substr(b, e - b + 1)));
    } catch (const Error& err) {
      throw InputError("vector \"" + text + "\": " + err.what());
    }
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) {
    throw InputError("vector \"" + text + "\": expected comma-separated entries");
  }
  return out;
}

std::string document_kind(const fs::path& file) {
  const json j = parse_json(read_file(file), file.string());
  const Node root = root_of(j, file.string());
  return root.at("kind").as_string();
}

SuturedPresentation parse_presentation(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  return parse_presentation_node(root_of(j, source), false);
}

SuturedPresentation read_presentation(const fs::path& file) {
  return parse_presentation(read_file(file), file.string());
}

FanInput parse_fan(const std::string& text, const fs::path& base, const std::string& source) {
  const json j = parse_json(text, source);
  const Node root = root_of(j, source);
  root.expect_object();
  if (root.has("kind") && root.at("kind").as_string() == "presentation") {
    const auto p = parse_presentation_node(root, false);
    FanInput fan{p.name, p.dim, symmetry_orbit(p, foliation_cone(p)), p.labels};
    return fan;
  }
  check_header(root, "fan");
  root.allow_only({"schema_version", "kind", "name", "dim", "labels", "members"});
  FanInput fan;
  fan.name = root.at("name").as_string();
  fan.dim = root.at("dim").as_count(1);
  std::optional<LabelSet> labels;
  if (auto l = root.get("labels")) {
    labels = parse_labels(*l, fan.dim);
  }
  const Node members = root.at("members");
  if (members.size_of_array() == 0) {
    members.fail("a fan needs at least one member");
  }
  std::vector<std::pair<std::size_t, Node>> cone_members;
  for (std::size_t i = 0; i < members.size_of_array(); ++i) {
    const Node m = members.at(i);
    std::optional<SuturedPresentation> p;
    if (m.value().is_string()) {
      const fs::path path = base / m.as_string();
      try {
        p = read_presentation(path);
      } catch (const InputError& e) {
        m.fail(e.what());
      }
    } else if (m.has("kind")) {
      p = parse_presentation_node(m, true);
    } else {
      cone_members.emplace_back(fan.members.size(), m);
      fan.members.push_back(FoliationCone{"", Cone::zero(fan.dim), {}, {}, {}});
      continue;
    }
    if (p->dim != fan.dim) {
      m.fail("member has dim " + std::to_string(p->dim) + ", fan has dim " + std::to_string(fan.dim));
    }
    if (!labels) {
      labels = p->labels;
    }
    try {
      auto orbit = symmetry_orbit(*p, foliation_cone(*p));
      fan.members.insert(fan.members.end(), orbit.begin(), orbit.end());
    } catch (const InputError& e) {
      m.fail(e.what());
    }
  }
  fan.labels = labels ? *labels : LabelSet::defaults(fan.dim);
  for (auto& [slot, node] : cone_members) {
    fan.members[slot] = parse_cone_member(node, fan.dim, fan.labels);
  }
  return fan;
}

FanInput read_fan(const fs::path& file) {
  return parse_fan(read_file(file), file.parent_path(), file.string());
}

PLBall read_ball(const fs::path& file) {
  const json j = parse_json(read_file(file), file.string());
  const Node root = root_of(j, file.string());
  check_header(root, "ball");
  root.allow_only({"schema_version", "kind", "name", "dim", "vertices", "symmetric"});
  const std::size_t dim = root.at("dim").as_count(1);
  auto vertices = root.at("vertices").as_rat_vectors(dim);
  if (auto s = root.get("symmetric"); s && s->as_bool()) {
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      vertices.push_back(negated(vertices[i]));
    }
  }
  try {
    return ball_from_vertices(dim, vertices);
  } catch (const InputError& e) {
    root.at("vertices").fail(e.what());
  }
}

MapInput read_map(const fs::path& file) {
  const json j = parse_json(read_file(file), file.string());
  const Node root = root_of(j, file.string());
  check_header(root, "map");
  root.allow_only({"schema_version", "kind", "name", "matrix", "labels"});
  MapInput m;
  m.name = root.has("name") ? root.at("name").as_string() : "map";
  m.p_star = root.at("matrix").as_matrix(std::nullopt, std::nullopt);
  if (auto l = root.get("labels")) {
    m.labels = parse_labels(*l, m.p_star.cols());
  }
  return m;
}

BranchedSurfaceData read_branched(const fs::path& file) {
  const json j = parse_json(read_file(file), file.string());
  const Node root = root_of(j, file.string());
  check_header(root, "branched");
  root.allow_only({"schema_version", "kind", "name", "sectors", "equations", "loop_incidence"});
  BranchedSurfaceData b;
  b.sectors = root.at("sectors").as_count(1);
  if (auto e = root.get("equations")) {
    b.equations = e->as_int_vectors(b.sectors);
  }
  b.loop_incidence = root.at("loop_incidence").as_int_vectors(b.sectors);
  try {
    validate(b);
  } catch (const InputError& e) {
    root.fail(e.what());
  }
  return b;
}

std::vector<ClassQuery> read_class_query(const fs::path& file) {
  const json j = parse_json(read_file(file), file.string());
  const Node root = root_of(j, file.string());
  check_header(root, "class-query");
  root.allow_only({"schema_version", "kind", "classes"});
  const Node classes = root.at("classes");
  std::vector<ClassQuery> out;
  std::optional<std::size_t> dim;
  for (std::size_t i = 0; i < classes.size_of_array(); ++i) {
    const Node item = classes.at(i);
    item.allow_only({"label", "vector"});
    out.push_back({item.at("label").as_string(), item.at("vector").as_rat_vector(dim)});
    dim = out.back().vector.size();
  }
  if (out.empty()) {
    classes.fail("no classes given");
  }
  return out;
}

}  // namespace folcone
