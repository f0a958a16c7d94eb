#include "folcone/foliation.hpp"

#include <algorithm>
#include <deque>

#include "folcone/linalg.hpp"

namespace folcone {

void validate(const SuturedPresentation& p) {
  if (p.dim == 0) {
    throw InputError("presentation \"" + p.name + "\": dimension must be at least 1");
  }
  if (p.labels.basis.size() != p.dim || p.labels.dual.size() != p.dim) {
    throw InputError("presentation \"" + p.name + "\": label count does not match dimension");
  }
  for (const auto& d : p.labels.derived) {
    if (d.vector.size() != p.dim) {
      throw InputError("derived label \"" + d.label + "\" has wrong dimension");
    }
  }
  const bool has_weights = p.markov && p.markov->has_weights();
  if (p.markov && p.markov->has_weights() && p.markov->homology_dim() != p.dim) {
    throw InputError("presentation \"" + p.name + "\": transition weights have dimension " +
                     std::to_string(p.markov->homology_dim()) + ", expected " +
                     std::to_string(p.dim));
  }
  if (p.loop_classes) {
    for (const auto& lc : *p.loop_classes) {
      if (lc.homology.size() != p.dim) {
        throw InputError("loop class \"" + lc.label + "\" has dimension " +
                         std::to_string(lc.homology.size()) + ", expected " +
                         std::to_string(p.dim));
      }
    }
  }
  const bool has_loops = p.loop_classes && !p.loop_classes->empty();
  if (p.product && (has_loops || has_weights)) {
    throw InputError("presentation \"" + p.name + "\": product presentation must not carry loops");
  }
  if (!p.product && !has_weights && !p.loop_classes) {
    if (p.markov) {
      throw InputError("presentation \"" + p.name +
                       "\": markov system has no transition weights and no explicit loop classes");
    }
    throw InputError("presentation \"" + p.name +
                     "\": needs weighted markov data, loop classes, or \"product\": true");
  }
  for (const auto& s : p.symmetries) {
    if (s.rows() != p.dim || s.cols() != p.dim || rank(s) != p.dim) {
      throw InputError("presentation \"" + p.name + "\": symmetry must be an invertible " +
                       std::to_string(p.dim) + "x" + std::to_string(p.dim) + " matrix");
    }
  }
}

std::vector<LoopClass> gather_loop_classes(const SuturedPresentation& p) {
  validate(p);
  if (p.markov && p.markov->has_weights()) {
    const MarkovSystem& sys = *p.markov;
    auto enumerated = enumerate_loop_classes(sys);
    if (p.loop_classes) {
      for (const auto& lc : *p.loop_classes) {
        auto word = parse_period(sys, lc.label);
        if (!word) {
          continue;
        }
        if (!is_allowed_cyclic(sys, *word)) {
          throw InputError("loop \"" + lc.label + "\" is not an allowed period");
        }
        const auto computed = loop_class(sys, *word);
        if (computed != lc.homology) {
          throw InputError("loop \"" + lc.label + "\": transition weights give " +
                           to_string(computed) + " but the listed class is " +
                           to_string(lc.homology));
        }
      }
    }
    return enumerated;
  }
  if (p.loop_classes) {
    return *p.loop_classes;
  }
  return {};
}

namespace {

std::vector<LabeledRay> label_rays(const Cone& c, const LabelSet& labels) {
  std::vector<LabeledRay> out;
  for (const auto& r : c.rays()) {
    out.push_back({r, render_ray(labels, r)});
  }
  return out;
}

std::vector<LoopClass> classes_on_facets(const std::vector<LoopClass>& classes, const Cone& c) {
  std::vector<LoopClass> used;
  for (const auto& lc : classes) {
    if (is_zero(lc.homology)) {
      continue;
    }
    const auto f = primitive(lc.homology);
    if (std::find(c.facets().begin(), c.facets().end(), f) != c.facets().end()) {
      used.push_back(lc);
    }
  }
  return used;
}

}  // namespace

FoliationCone foliation_cone(const SuturedPresentation& p) {
  const auto classes = gather_loop_classes(p);
  std::vector<IntVector> gens;
  for (const auto& lc : classes) {
    gens.push_back(lc.homology);
  }
  Cone cone = dual(Cone::from_generators(p.dim, gens));
  FoliationCone fc{p.name, cone, classes_on_facets(classes, cone), label_rays(cone, p.labels),
                   p.labels};
  return fc;
}

std::vector<FoliationCone> symmetry_orbit(const SuturedPresentation& p, const FoliationCone& fc) {
  constexpr std::size_t max_orbit = 256;
  std::vector<FoliationCone> orbit{fc};
  std::vector<RatMatrix> inverses;
  for (const auto& s : p.symmetries) {
    inverses.push_back(right_inverse(s));
  }
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const FoliationCone current = orbit[queue.front()];
    queue.pop_front();
    for (std::size_t k = 0; k < p.symmetries.size(); ++k) {
      Cone img = image(p.symmetries[k], current.cone);
      const bool seen = std::any_of(orbit.begin(), orbit.end(),
                                    [&](const FoliationCone& o) { return o.cone == img; });
      if (seen) {
        continue;
      }
      if (orbit.size() == max_orbit) {
        throw InputError("symmetry orbit of \"" + p.name + "\" does not close");
      }
      // Loop classes are functionals, so they transform by f -> f M^{-1}.
      std::vector<LoopClass> moved;
      for (const auto& lc : current.generators_used) {
        const RatVector f = inverses[k].apply_left(to_rat(lc.homology));
        moved.push_back({"s" + std::to_string(k + 1) + "(" + lc.label + ")", std::nullopt,
                         primitive(f)});
      }
      FoliationCone next{"s" + std::to_string(k + 1) + "(" + current.name + ")", img,
                         classes_on_facets(moved, img), label_rays(img, p.labels), p.labels};
      orbit.push_back(std::move(next));
      queue.push_back(orbit.size() - 1);
    }
  }
  return orbit;
}

OverlapError::OverlapError(std::size_t first, std::size_t second, IntVector witness)
    : VerificationError("cones " + std::to_string(first + 1) + " and " +
                        std::to_string(second + 1) + " overlap; common interior point " +
                        to_string(witness)),
      first_(first),
      second_(second),
      witness_(std::move(witness)) {}

Fan assemble_fan(std::vector<FoliationCone> cones) {
  if (cones.empty()) {
    throw InputError("fan has no cones");
  }
  const std::size_t dim = cones.front().cone.dim();
  for (const auto& c : cones) {
    if (c.cone.dim() != dim) {
      throw InputError("fan members have different dimensions");
    }
    if (!c.cone.is_full_dimensional()) {
      throw InputError("fan member \"" + c.name + "\" is not full-dimensional");
    }
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!interiors_disjoint(cones[i].cone, cones[j].cone)) {
        throw OverlapError(i, j, *integer_interior_point(intersect(cones[i].cone, cones[j].cone)));
      }
    }
  }
  return Fan{dim, std::move(cones), true};
}

std::vector<FaceCone> thurston_face_cones(const Fan& fan) {
  std::vector<FaceCone> out;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const Cone neg = negate(fan.cones[i].cone);
    for (std::size_t j = 0; j < fan.cones.size(); ++j) {
      Cone c = intersect(neg, fan.cones[j].cone);
      if (!c.is_full_dimensional()) {
        continue;
      }
      const bool seen =
          std::any_of(out.begin(), out.end(), [&](const FaceCone& f) { return f.cone == c; });
      if (!seen) {
        out.push_back({std::move(c), i, j});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FaceCone& a, const FaceCone& b) { return a.cone < b.cone; });
  return out;
}

bool BallCrosscheck::ok() const {
  return unmatched_face_cones.empty() &&
         std::all_of(faces.begin(), faces.end(), [](const FaceMatch& f) { return f.face_cone; });
}

BallCrosscheck ball_crosscheck(const Fan& fan, const PLBall& ball) {
  if (fan.dim != ball.dim()) {
    throw InputError("ball dimension " + std::to_string(ball.dim()) + " does not match fan dimension " +
                     std::to_string(fan.dim));
  }
  BallCrosscheck report;
  report.face_cones = thurston_face_cones(fan);
  std::vector<bool> used(report.face_cones.size(), false);
  for (std::size_t f = 0; f < ball.facets().size(); ++f) {
    Cone c = ball.face_cone(f);
    std::optional<std::size_t> match;
    for (std::size_t k = 0; k < report.face_cones.size(); ++k) {
      if (report.face_cones[k].cone == c) {
        match = k;
        used[k] = true;
        break;
      }
    }
    report.faces.push_back({f, std::move(c), match});
  }
  for (std::size_t k = 0; k < used.size(); ++k) {
    if (!used[k]) {
      report.unmatched_face_cones.push_back(k);
    }
  }
  return report;
}

ClassLocation locate_class(const Fan& fan, const IntVector& x) {
  if (x.size() != fan.dim) {
    throw InputError("class has dimension " + std::to_string(x.size()) + ", fan has dimension " +
                     std::to_string(fan.dim));
  }
  ClassLocation loc;
  bool interior = false;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const Membership m = contains(fan.cones[i].cone, x);
    if (m != Membership::Outside) {
      loc.containing.push_back({i, m});
    }
    interior = interior || m == Membership::Interior;
  }
  if (is_zero(x)) {
    loc.proper = fan.cones.size() == 1 && fan.cones.front().cone.is_full_space();
  } else {
    loc.proper = interior;
  }
  return loc;
}

Cone mv_split_assembly(const RatMatrix& restriction, const Cone& c_minus, const Cone& c_plus) {
  if (restriction.rows() != c_minus.dim() + c_plus.dim()) {
    throw Error("restriction map has " + std::to_string(restriction.rows()) + " rows, expected " +
                std::to_string(c_minus.dim() + c_plus.dim()));
  }
  return pullback(restriction, product_cone(c_minus, c_plus));
}

Fan disk_decomposition_transfer(const RatMatrix& p_star, const Fan& fan,
                                std::optional<LabelSet> labels) {
  if (p_star.rows() != fan.dim) {
    throw InputError("p* has " + std::to_string(p_star.rows()) + " rows, fan has dimension " +
                     std::to_string(fan.dim));
  }
  const std::size_t r = rank(p_star);
  if (r != p_star.rows() || p_star.cols() - r > 1) {
    throw InputError("p* must be surjective with kernel of dimension at most one (rank " +
                     std::to_string(r) + ", " + std::to_string(p_star.rows()) + "x" +
                     std::to_string(p_star.cols()) + ")");
  }
  const LabelSet new_labels = labels ? *labels : LabelSet::defaults(p_star.cols());
  std::vector<IntVector> kernel;
  for (const auto& k : kernel_basis(p_star)) {
    kernel.push_back(primitive(k));
  }
  std::vector<FoliationCone> pulled;
  for (const auto& fc : fan.cones) {
    Cone c = pullback(p_star, fc.cone);
    for (const auto& k : kernel) {
      if (!in_span(k, c.lineality(), c.dim())) {
        throw Error("pulled-back cone does not contain the kernel of p*");
      }
    }
    std::vector<LoopClass> gens;
    for (const auto& lc : fc.generators_used) {
      const RatVector f = p_star.apply_left(to_rat(lc.homology));
      const bool integral =
          std::all_of(f.begin(), f.end(), [](const Rat& q) { return q.get_den() == 1; });
      gens.push_back({lc.label, lc.word, integral || is_zero(f) ? to_int(f) : primitive(f)});
    }
    pulled.push_back({fc.name, c, gens, label_rays(c, new_labels), new_labels});
  }
  return assemble_fan(std::move(pulled));
}

}  // namespace folcone
