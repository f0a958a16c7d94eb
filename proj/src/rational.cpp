#include "folcone/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "folcone/error.hpp"

namespace folcone {

Rat make_rat(const Int& numerator, const Int& denominator) {
  if (denominator == 0) {
    throw Error("rational with zero denominator");
  }
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool parse_integer(std::string_view text, Int& out) {
  if (text.empty()) {
    return false;
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    return false;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      return false;
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  Int num;
  Int den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_integer(text, num);
  } else {
    ok = parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den);
    if (ok && (text[slash + 1] == '-' || text[slash + 1] == '+')) {
      ok = false;
    }
  }
  if (!ok) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  if (den == 0) {
    throw InputError("rational \"" + std::string(text) + "\" has zero denominator");
  }
  return make_rat(num, den);
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

namespace {

template <typename V>
std::string join_vector(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      os << ", ";
    }
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string to_string(const RatVector& v) { return join_vector(v); }
std::string to_string(const IntVector& v) { return join_vector(v); }

RatVector to_rat(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& z : v) {
    out.emplace_back(z);
  }
  return out;
}

IntVector to_int(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) {
      throw Error("non-integral entry " + q.get_str());
    }
    out.push_back(q.get_num());
  }
  return out;
}

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Rat dot(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

Int dot(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

Rat dot(const IntVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += Rat(a[i]) * b[i];
  }
  return s;
}

IntVector negated(IntVector v) {
  for (auto& z : v) {
    z = -z;
  }
  return v;
}

RatVector negated(RatVector v) {
  for (auto& q : v) {
    q = -q;
  }
  return v;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& z) { return z == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

IntVector unit_vector(std::size_t dim, std::size_t index) {
  IntVector v(dim, Int(0));
  v.at(index) = 1;
  return v;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), cols);
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), cols);
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    v[r] = (*this)(r, c);
  }
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  require_same_size(x.size(), cols_);
  RatVector y(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

RatVector RatMatrix::apply_left(const RatVector& f) const {
  require_same_size(f.size(), rows_);
  RatVector y(cols_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (f[r] == 0) {
      continue;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      y[c] += f[r] * (*this)(r, c);
    }
  }
  return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  require_same_size(a.cols_, b.rows_);
  RatMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        m(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return m;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace folcone
