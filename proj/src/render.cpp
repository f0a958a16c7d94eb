#include "folcone/render.hpp"

#include <sstream>

namespace folcone {

LabelSet LabelSet::defaults(std::size_t dim) {
  LabelSet l;
  for (std::size_t i = 1; i <= dim; ++i) {
    l.basis.push_back("e" + std::to_string(i));
    l.dual.push_back("α" + std::to_string(i));
  }
  return l;
}

std::string render_combination(const std::vector<std::string>& names, const IntVector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      continue;
    }
    const Int mag = abs(v[i]);
    if (first) {
      os << (v[i] < 0 ? "-" : "");
    } else {
      os << (v[i] < 0 ? " - " : " + ");
    }
    if (mag != 1) {
      os << mag.get_str();
    }
    os << names.at(i);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string render_ray(const LabelSet& labels, const IntVector& ray) {
  for (const auto& d : labels.derived) {
    if (d.vector == ray) {
      return d.label;
    }
    if (negated(d.vector) == ray) {
      return "-" + d.label;
    }
  }
  return render_combination(labels.basis, ray);
}

std::string render_inequality(const LabelSet& labels, const IntVector& functional) {
  IntVector pos(functional.size(), Int(0));
  IntVector neg(functional.size(), Int(0));
  for (std::size_t i = 0; i < functional.size(); ++i) {
    if (functional[i] > 0) {
      pos[i] = functional[i];
    } else if (functional[i] < 0) {
      neg[i] = -functional[i];
    }
  }
  if (is_zero(pos)) {
    return render_combination(labels.dual, neg) + " <= 0";
  }
  return render_combination(labels.dual, pos) + " >= " + render_combination(labels.dual, neg);
}

}  // namespace folcone
