#include "folcone/commands.hpp"

#include <algorithm>

#include "folcone/branched.hpp"
#include "folcone/io.hpp"
#include "folcone/linalg.hpp"

namespace folcone {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? sep : "") + parts[i];
  }
  return out;
}

std::string cone_name(std::size_t i) { return "C" + std::to_string(i + 1); }

std::string base_text(const Cone& c, const LabelSet& labels) {
  if (c.is_full_space()) {
    return "whole space";
  }
  std::vector<std::string> rays;
  for (const auto& r : c.rays()) {
    rays.push_back(render_ray(labels, r));
  }
  std::string out = "[" + join(rays, ", ") + "]";
  if (!c.lineality().empty()) {
    std::vector<std::string> lines;
    for (const auto& l : c.lineality()) {
      lines.push_back(render_ray(labels, l));
    }
    out += " + span(" + join(lines, ", ") + ")";
  }
  return out;
}

std::string facets_text(const Cone& c, const LabelSet& labels) {
  std::vector<std::string> parts;
  for (const auto& f : c.proper_facets()) {
    parts.push_back(render_inequality(labels, f));
  }
  for (const auto& g : c.equalities()) {
    parts.push_back(render_combination(labels.dual, g) + " = 0");
  }
  return parts.empty() ? "none" : join(parts, ", ");
}

void add_cone_rows(Report::Section& s, const std::vector<FoliationCone>& cones, const LabelSet& labels) {
  for (std::size_t i = 0; i < cones.size(); ++i) {
    s.rows.push_back({{"index", cone_name(i)},
                      {"name", cones[i].name},
                      {"base", base_text(cones[i].cone, labels)},
                      {"facets", facets_text(cones[i].cone, labels)}});
  }
}

/// Assembles the fan, recording the outcome. Returns nullopt on overlap.
std::optional<Fan> verify_into(Report& r, std::vector<FoliationCone> cones) {
  const std::size_t n = cones.size();
  auto& s = r.add("Disjointness");
  try {
    Fan fan = assemble_fan(std::move(cones));
    s.rows.push_back({{"pairs_checked", n * (n - 1) / 2}, {"result", "interiors pairwise disjoint"}});
    return fan;
  } catch (const OverlapError& e) {
    r.ok = false;
    s.rows.push_back({{"result", "interiors overlap"},
                      {"first", cone_name(e.first())},
                      {"second", cone_name(e.second())},
                      {"witness", to_string(e.witness())}});
    return std::nullopt;
  }
}

std::string face_name(const FaceCone& f) { return "(-" + cone_name(f.negated) + ") ∩ " + cone_name(f.other); }

Report fan_failure(Report r, const FanInput& in) {
  add_cone_rows(r.add("Cones"), in.members, in.labels);
  return r;
}

IntVector integral_direction(const RatVector& x) {
  if (is_zero(x)) {
    return IntVector(x.size(), Int(0));
  }
  return primitive(x);
}

}  // namespace

Report cmd_loops(const Path& presentation) {
  const auto p = read_presentation(presentation);
  Report r{"loops", true, {}};
  const bool weighted = p.markov && p.markov->has_weights();
  const std::string mode = p.product ? "product" : weighted ? "transition weights" : "explicit classes";
  r.add("Presentation").rows.push_back({{"name", p.name}, {"dim", p.dim}, {"mode", mode}});
  auto& s = r.add("Loops");
  const auto classes = gather_loop_classes(p);
  if (classes.empty()) {
    s.rows.push_back("no loops (full-space cone)");
  }
  for (const auto& c : classes) {
    json row{{"class", render_combination(p.labels.dual, c.homology)}, {"vector", to_string(c.homology)}};
    if (c.word && p.markov) {
      row["word"] = to_string(*c.word, *p.markov);
    } else {
      row["label"] = c.label;
    }
    s.rows.push_back(row);
  }
  return r;
}

Report cmd_cone(const Path& presentation) {
  const auto p = read_presentation(presentation);
  const auto fc = foliation_cone(p);
  const Cone& c = fc.cone;
  Report r{"cone", true, {}};
  r.add("Cone").rows.push_back({{"name", fc.name},
                                {"dim", c.dim()},
                                {"lineality_dim", c.lineality().size()},
                                {"base", base_text(c, p.labels)}});
  auto& facets = r.add("Facets");
  for (const auto& f : c.proper_facets()) {
    facets.rows.push_back({{"inequality", render_inequality(p.labels, f)}, {"functional", to_string(f)}});
  }
  for (const auto& g : c.equalities()) {
    facets.rows.push_back({{"inequality", render_combination(p.labels.dual, g) + " = 0"}, {"functional", to_string(g)}});
  }
  auto& base = r.add("Base rays");
  for (const auto& b : fc.base) {
    base.rows.push_back({{"label", b.label}, {"ray", to_string(b.ray)}});
  }
  auto& lin = r.add("Lineality");
  for (const auto& l : c.lineality()) {
    lin.rows.push_back({{"label", render_ray(p.labels, l)}, {"vector", to_string(l)}});
  }
  auto& used = r.add("Loop classes bounding the cone");
  for (const auto& g : fc.generators_used) {
    used.rows.push_back({{"label", g.word && p.markov ? to_string(*g.word, *p.markov) : g.label},
                         {"class", render_combination(p.labels.dual, g.homology)}});
  }
  auto& wit = r.add("Interior witness");
  if (auto x = integer_interior_point(c)) {
    wit.rows.push_back({{"vector", to_string(*x)}, {"membership", to_string(contains(c, *x))}});
  }
  return r;
}

Report cmd_fan(const Path& fan_file) {
  const auto in = read_fan(fan_file);
  Report r{"fan", true, {}};
  r.add("Fan").rows.push_back({{"name", in.name}, {"dim", in.dim}, {"cones", in.members.size()}});
  add_cone_rows(r.add("Cones"), in.members, in.labels);
  verify_into(r, in.members);
  return r;
}

Report cmd_faces(const Path& fan_file) {
  const auto in = read_fan(fan_file);
  Report r{"faces", true, {}};
  const auto fan = verify_into(r, in.members);
  if (!fan) {
    return fan_failure(r, in);
  }
  const auto faces = thurston_face_cones(*fan);
  r.add("Summary").rows.push_back({{"cones", fan->cones.size()}, {"face_cones", faces.size()}});
  auto& s = r.add("Face cones");
  for (const auto& f : faces) {
    s.rows.push_back({{"cone", face_name(f)}, {"base", base_text(f.cone, in.labels)}});
  }
  return r;
}

Report cmd_ball(const Path& fan_file, const Path& ball_file) {
  const auto in = read_fan(fan_file);
  const auto ball = read_ball(ball_file);
  if (ball.dim() != in.dim) {
    throw InputError("ball has dim " + std::to_string(ball.dim()) + ", fan has dim " + std::to_string(in.dim));
  }
  Report r{"ball", true, {}};
  const auto fan = verify_into(r, in.members);
  if (!fan) {
    return fan_failure(r, in);
  }
  r.add("Ball").rows.push_back({{"vertices", ball.vertices().size()}, {"facets", ball.facets().size()}});
  auto& norms = r.add("Vertex norms");
  for (const auto& v : ball.vertices()) {
    norms.rows.push_back({{"vertex", render_ray(in.labels, primitive(v))}, {"norm", to_string(norm_eval(ball, v))}});
  }
  const auto check = ball_crosscheck(*fan, ball);
  auto& faces = r.add("Faces");
  for (const auto& m : check.faces) {
    faces.rows.push_back({{"facet", to_string(ball.facets()[m.facet].functional)},
                          {"base", base_text(m.cone, in.labels)},
                          {"face_cone", m.face_cone ? face_name(check.face_cones[*m.face_cone]) : "unmatched"}});
  }
  auto& extra = r.add("Unmatched face cones");
  for (auto i : check.unmatched_face_cones) {
    extra.rows.push_back({{"cone", face_name(check.face_cones[i])},
                          {"base", base_text(check.face_cones[i].cone, in.labels)}});
  }
  r.ok = check.ok();
  r.add("Result").rows.push_back(check.ok() ? "every face of the ball is a face cone of the fan"
                                            : "ball faces and face cones differ");
  return r;
}

Report cmd_member(const Path& fan_file, const std::string& query) {
  const auto in = read_fan(fan_file);
  std::vector<ClassQuery> queries;
  if (std::filesystem::is_regular_file(query)) {
    queries = read_class_query(query);
  } else {
    queries.push_back({query, parse_vector_literal(query)});
  }
  for (const auto& q : queries) {
    if (q.vector.size() != in.dim) {
      throw InputError("class \"" + q.label + "\" has " + std::to_string(q.vector.size()) +
                       " entries, fan has dim " + std::to_string(in.dim));
    }
  }
  Report r{"member", true, {}};
  const auto fan = verify_into(r, in.members);
  if (!fan) {
    return fan_failure(r, in);
  }
  auto& s = r.add("Classes");
  for (const auto& q : queries) {
    const IntVector x = integral_direction(q.vector);
    const auto loc = locate_class(*fan, x);
    std::vector<std::string> where;
    for (const auto& h : loc.containing) {
      where.push_back(to_string(h.membership) + " of " + cone_name(h.cone));
    }
    std::string verdict;
    if (loc.proper) {
      verdict = "interior: proper foliated ray";
    } else if (is_zero(x)) {
      verdict = "zero class: not a ray";
    } else if (loc.containing.empty()) {
      verdict = "outside every cone: not foliated";
    } else {
      verdict = "boundary: not a proper foliated ray";
    }
    s.rows.push_back({{"label", q.label},
                      {"class", to_string(q.vector)},
                      {"location", where.empty() ? "none" : join(where, ", ")},
                      {"verdict", verdict}});
  }
  return r;
}

Report cmd_transfer(const Path& map_file, const Path& fan_file) {
  const auto m = read_map(map_file);
  const auto in = read_fan(fan_file);
  if (m.p_star.rows() != in.dim) {
    throw InputError("map has " + std::to_string(m.p_star.rows()) + " rows, fan has dim " + std::to_string(in.dim));
  }
  Report r{"transfer", true, {}};
  const auto fan = verify_into(r, in.members);
  if (!fan) {
    return fan_failure(r, in);
  }
  const LabelSet labels = m.labels ? *m.labels : LabelSet::defaults(m.p_star.cols());
  std::vector<std::string> kernel;
  for (const auto& k : kernel_basis(m.p_star)) {
    kernel.push_back(render_ray(labels, primitive(k)));
  }
  r.add("Map").rows.push_back({{"name", m.name},
                               {"source_dim", m.p_star.cols()},
                               {"target_dim", m.p_star.rows()},
                               {"kernel", kernel.empty() ? "0" : join(kernel, ", ")}});
  try {
    const auto out = disk_decomposition_transfer(m.p_star, *fan, labels);
    add_cone_rows(r.add("Transferred cones"), out.cones, labels);
    r.add("Transferred disjointness")
        .rows.push_back({{"pairs_checked", out.cones.size() * (out.cones.size() - 1) / 2},
                         {"result", "interiors pairwise disjoint"}});
  } catch (const OverlapError& e) {
    r.ok = false;
    r.add("Transferred disjointness")
        .rows.push_back({{"result", "interiors overlap"},
                         {"first", cone_name(e.first())},
                         {"second", cone_name(e.second())},
                         {"witness", to_string(e.witness())}});
  }
  return r;
}

Report cmd_branch(const Path& branched, const std::optional<Path>& presentation) {
  const auto b = read_branched(branched);
  std::optional<SuturedPresentation> p;
  if (presentation) {
    p = read_presentation(*presentation);
    if (p->dim != b.loop_incidence.size()) {
      throw InputError("presentation has dim " + std::to_string(p->dim) + ", loop incidence has " +
                       std::to_string(b.loop_incidence.size()) + " rows");
    }
  }
  const LabelSet labels = p ? p->labels : LabelSet::defaults(b.loop_incidence.size());
  const auto oc = oertel_cone(b);
  Report r{"branch", true, {}};
  r.add("Branched surface")
      .rows.push_back({{"sectors", b.sectors}, {"equations", b.equations.size()}, {"loops", b.loop_incidence.size()}});
  auto& mu = r.add("Measure rays");
  for (const auto& m : oc.measure_rays) {
    mu.rows.push_back(to_string(m));
  }
  r.add("Oertel cone").rows.push_back({{"base", base_text(oc.cone, labels)}, {"facets", facets_text(oc.cone, labels)}});
  r.add("Strictness").rows.push_back(
      {{"note", oc.note}, {"positive_measure", oc.positive_measure ? to_string(*oc.positive_measure) : "none"}});
  if (p) {
    const auto fc = foliation_cone(*p);
    const bool inside = check_subcone(oc.cone, fc.cone);
    r.ok = inside;
    r.add("Containment").rows.push_back({{"foliation_cone", fc.name}, {"contained", inside}});
  }
  return r;
}

std::string cmd_plot(const Path& fan_file, const PlotRequest& request) {
  const auto in = read_fan(fan_file);
  std::optional<PLBall> ball;
  if (request.ball) {
    ball = read_ball(*request.ball);
  }
  PlotOptions options;
  if (request.slice) {
    options.slice = parse_vector_literal(*request.slice);
  }
  options.ball = ball ? &*ball : nullptr;
  const Fan fan = assemble_fan(in.members);
  return plot_fan(fan, in.labels, options);
}

}  // namespace folcone
