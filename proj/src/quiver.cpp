#include "shv/quiver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace shv {

namespace {

bool strictly_increasing(const std::vector<Rational>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) return false;
  return true;
}

// Rows spanning the annihilator of the column span of b.
Matrix annihilator_rows(const Matrix& b) { return b.transpose().kernel_basis().transpose(); }

// Basis of g^{-1}(span of columns of sub), where g maps into sub's ambient space.
Matrix preimage_basis(const Matrix& g, const Matrix& sub) {
  return (annihilator_rows(sub) * g).kernel_basis();
}

std::size_t intersection_dim(const Matrix& a, const Matrix& b) {
  return a.cols() + b.cols() - a.hstack(b).rank();
}

}  // namespace

bool LineQuiverRep::valid() const {
  std::size_t n = points.size();
  if (!strictly_increasing(points)) return false;
  if (stalk_dim.size() != n || arc_dim.size() != n + 1) return false;
  if (left.size() != n || right.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (left[i].rows() != arc_dim[i] || left[i].cols() != stalk_dim[i]) return false;
    if (right[i].rows() != arc_dim[i + 1] || right[i].cols() != stalk_dim[i]) return false;
  }
  return true;
}

std::size_t LineQuiverRep::max_dim() const {
  std::size_t m = 0;
  for (auto d : stalk_dim) m = std::max(m, d);
  for (auto d : arc_dim) m = std::max(m, d);
  return m;
}

GenRep LineQuiverRep::to_gen() const {
  std::size_t n = points.size();
  GenRep g;
  g.dims.resize(2 * n + 1);
  for (std::size_t k = 0; k <= n; ++k) g.dims[2 * k] = arc_dim[k];
  for (std::size_t i = 0; i < n; ++i) g.dims[2 * i + 1] = stalk_dim[i];
  for (std::size_t i = 0; i < n; ++i) {
    g.edges.push_back({2 * i + 1, 2 * i, left[i]});
    g.edges.push_back({2 * i + 1, 2 * i + 2, right[i]});
  }
  return g;
}

LineQuiverRep LineQuiverRep::from_gen(std::vector<Rational> points, const GenRep& g) {
  std::size_t n = points.size();
  if (g.dims.size() != 2 * n + 1 || g.edges.size() != 2 * n)
    throw std::invalid_argument("LineQuiverRep::from_gen: shape mismatch");
  LineQuiverRep f;
  f.points = std::move(points);
  f.arc_dim.resize(n + 1);
  f.stalk_dim.resize(n);
  for (std::size_t k = 0; k <= n; ++k) f.arc_dim[k] = g.dims[2 * k];
  for (std::size_t i = 0; i < n; ++i) {
    f.stalk_dim[i] = g.dims[2 * i + 1];
    f.left.push_back(g.edges[2 * i].map);
    f.right.push_back(g.edges[2 * i + 1].map);
  }
  return f;
}

bool CircleQuiverRep::valid() const {
  std::size_t m = points.size();
  if (m == 0 || !strictly_increasing(points)) return false;
  if (points.front() < Rational(0) || !(points.back() < Rational(1))) return false;
  if (stalk_dim.size() != m || arc_dim.size() != m) return false;
  if (left.size() != m || right.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (left[i].rows() != arc_dim[(i + m - 1) % m] || left[i].cols() != stalk_dim[i]) return false;
    if (right[i].rows() != arc_dim[i] || right[i].cols() != stalk_dim[i]) return false;
  }
  return true;
}

std::size_t CircleQuiverRep::max_dim() const {
  std::size_t m = 0;
  for (auto d : stalk_dim) m = std::max(m, d);
  for (auto d : arc_dim) m = std::max(m, d);
  return m;
}

GenRep CircleQuiverRep::to_gen() const {
  std::size_t m = points.size();
  GenRep g;
  g.dims.resize(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    g.dims[2 * i] = arc_dim[i];
    g.dims[2 * i + 1] = stalk_dim[i];
  }
  for (std::size_t i = 0; i < m; ++i) {
    g.edges.push_back({2 * i + 1, 2 * ((i + m - 1) % m), left[i]});
    g.edges.push_back({2 * i + 1, 2 * i, right[i]});
  }
  return g;
}

CircleQuiverRep CircleQuiverRep::from_gen(std::vector<Rational> points, const GenRep& g) {
  std::size_t m = points.size();
  if (g.dims.size() != 2 * m || g.edges.size() != 2 * m)
    throw std::invalid_argument("CircleQuiverRep::from_gen: shape mismatch");
  CircleQuiverRep f;
  f.points = std::move(points);
  f.arc_dim.resize(m);
  f.stalk_dim.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    f.arc_dim[i] = g.dims[2 * i];
    f.stalk_dim[i] = g.dims[2 * i + 1];
    f.left.push_back(g.edges[2 * i].map);
    f.right.push_back(g.edges[2 * i + 1].map);
  }
  return f;
}

namespace {

LineQuiverRep insert_point_line(const LineQuiverRep& f, const Rational& x) {
  auto it = std::lower_bound(f.points.begin(), f.points.end(), x);
  if (it != f.points.end() && *it == x) return f;
  std::size_t p = it - f.points.begin();  // x falls inside arc p
  LineQuiverRep r;
  r.points = f.points;
  r.points.insert(r.points.begin() + p, x);
  r.stalk_dim = f.stalk_dim;
  r.stalk_dim.insert(r.stalk_dim.begin() + p, f.arc_dim[p]);
  r.arc_dim = f.arc_dim;
  r.arc_dim.insert(r.arc_dim.begin() + p, f.arc_dim[p]);
  r.left = f.left;
  r.right = f.right;
  Matrix id = Matrix::identity(f.arc_dim[p]);
  r.left.insert(r.left.begin() + p, id);
  r.right.insert(r.right.begin() + p, id);
  return r;
}

CircleQuiverRep insert_point_circle(const CircleQuiverRep& f, const Rational& x) {
  auto it = std::lower_bound(f.points.begin(), f.points.end(), x);
  if (it != f.points.end() && *it == x) return f;
  std::size_t m = f.points.size();
  std::size_t p = it - f.points.begin();
  std::size_t q = (p + m - 1) % m;  // the arc being split
  CircleQuiverRep r;
  r.points = f.points;
  r.points.insert(r.points.begin() + p, x);
  // Old arc i keeps its data at new index i + (i >= p); the upper half of
  // the split arc becomes new arc p.
  r.arc_dim.assign(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) r.arc_dim[i + (i >= p ? 1 : 0)] = f.arc_dim[i];
  r.arc_dim[p] = f.arc_dim[q];
  r.stalk_dim = f.stalk_dim;
  r.stalk_dim.insert(r.stalk_dim.begin() + p, f.arc_dim[q]);
  r.left = f.left;
  r.right = f.right;
  Matrix id = Matrix::identity(f.arc_dim[q]);
  r.left.insert(r.left.begin() + p, id);
  r.right.insert(r.right.begin() + p, id);
  return r;
}

}  // namespace

LineQuiverRep refine_line(const LineQuiverRep& f, const std::vector<Rational>& extra) {
  LineQuiverRep r = f;
  for (const auto& x : extra) r = insert_point_line(r, x);
  return r;
}

CircleQuiverRep refine_circle(const CircleQuiverRep& f, const std::vector<Rational>& extra) {
  CircleQuiverRep r = f;
  for (const auto& x : extra) r = insert_point_circle(r, x);
  return r;
}

namespace {

// Open arc k of a marked point set, with the convention that arc 0 and arc n
// are the unbounded ends.
Interval line_arc(const std::vector<Rational>& pts, std::size_t k) {
  Interval a;
  if (k > 0) {
    a.lo = Endpoint::at(pts[k - 1]);
    a.lo_closed = false;
  }
  if (k < pts.size()) {
    a.hi = Endpoint::at(pts[k]);
    a.hi_closed = false;
  }
  return a;
}

// 1 when the arc lies inside iv, 0 when disjoint; anything else means an
// endpoint of iv is unmarked.
std::size_t arc_inside(const Interval& arc, const Interval& iv) {
  auto inter = intersect(arc, iv);
  if (!inter) return 0;
  if (*inter == arc) return 1;
  throw std::invalid_argument("interval endpoint not among the marked points");
}

}  // namespace

LineQuiverRep interval_rep(const Interval& iv, const std::vector<Rational>& points) {
  if (!iv.valid()) throw std::invalid_argument("interval_rep: bad interval");
  std::size_t n = points.size();
  LineQuiverRep f;
  f.points = points;
  f.stalk_dim.resize(n);
  f.arc_dim.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) f.stalk_dim[i] = iv.contains(points[i]) ? 1 : 0;
  for (std::size_t k = 0; k <= n; ++k) f.arc_dim[k] = arc_inside(line_arc(points, k), iv);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l(f.arc_dim[i], f.stalk_dim[i]);
    Matrix r(f.arc_dim[i + 1], f.stalk_dim[i]);
    if (f.stalk_dim[i] == 1 && f.arc_dim[i] == 1) l.at(0, 0) = 1;
    if (f.stalk_dim[i] == 1 && f.arc_dim[i + 1] == 1) r.at(0, 0) = 1;
    f.left.push_back(std::move(l));
    f.right.push_back(std::move(r));
  }
  return f;
}

namespace {

// Integers k with lo <= theta + k <= hi (a superset; callers filter).
std::vector<long long> candidate_shifts(const Rational& theta, const Rational& lo,
                                        const Rational& hi) {
  long long k0 = (long long)(lo - theta).floor() - 1;
  long long k1 = (long long)(hi - theta).floor() + 1;
  std::vector<long long> ks;
  for (long long k = k0; k <= k1; ++k) ks.push_back(k);
  return ks;
}

// Cyclic arc i of a circle point set, lifted with shift 0: arc m-1 wraps up
// to theta_0 + 1.
Interval circle_arc_lift(const std::vector<Rational>& pts, std::size_t i) {
  std::size_t m = pts.size();
  Rational hi = (i + 1 < m) ? pts[i + 1] : pts[0] + Rational(1);
  return Interval::bounded(pts[i], false, hi, false);
}

std::size_t index_of(const std::vector<long long>& v, long long k) {
  auto it = std::lower_bound(v.begin(), v.end(), k);
  if (it == v.end() || *it != k) return (std::size_t)-1;
  return it - v.begin();
}

}  // namespace

CircleQuiverRep wrapped_interval_rep(const Interval& iv, const std::vector<Rational>& points) {
  if (!iv.valid() || !iv.is_bounded())
    throw std::invalid_argument("wrapped_interval_rep: need a bounded interval");
  std::size_t m = points.size();
  const Rational& lo = iv.lo.value;
  const Rational& hi = iv.hi.value;

  // Lifts of each marked point / arc that land in the interval.
  std::vector<std::vector<long long>> stalk_lifts(m), arc_lifts(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (long long k : candidate_shifts(points[i], lo, hi))
      if (iv.contains(points[i] + Rational(k))) stalk_lifts[i].push_back(k);
    Interval arc0 = circle_arc_lift(points, i);
    for (long long k : candidate_shifts(arc0.lo.value, lo, hi))
      if (arc_inside(arc0.translate(Rational(k)), iv)) arc_lifts[i].push_back(k);
  }

  CircleQuiverRep f;
  f.points = points;
  f.stalk_dim.resize(m);
  f.arc_dim.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    f.stalk_dim[i] = stalk_lifts[i].size();
    f.arc_dim[i] = arc_lifts[i].size();
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t la = (i + m - 1) % m;
    Matrix l(f.arc_dim[la], f.stalk_dim[i]);
    Matrix r(f.arc_dim[i], f.stalk_dim[i]);
    for (std::size_t c = 0; c < stalk_lifts[i].size(); ++c) {
      long long k = stalk_lifts[i][c];
      // Arc below theta_i + k is arc (i-1) at the same shift, except below
      // theta_0 + k which is the wrap arc shifted down by one.
      std::size_t rl = index_of(arc_lifts[la], i == 0 ? k - 1 : k);
      std::size_t rr = index_of(arc_lifts[i], k);
      if (rl != (std::size_t)-1) l.at(rl, c) = 1;
      if (rr != (std::size_t)-1) r.at(rr, c) = 1;
    }
    f.left.push_back(std::move(l));
    f.right.push_back(std::move(r));
  }
  return f;
}

CircleQuiverRep local_system_rep(const Matrix& monodromy, const std::vector<Rational>& points) {
  if (!monodromy.is_invertible())
    throw std::invalid_argument("local_system_rep: monodromy must be invertible");
  std::size_t m = points.size();
  std::size_t r = monodromy.rows();
  CircleQuiverRep f;
  f.points = points;
  f.stalk_dim.assign(m, r);
  f.arc_dim.assign(m, r);
  for (std::size_t i = 0; i < m; ++i) {
    f.left.push_back(Matrix::identity(r));
    f.right.push_back(i == 0 ? monodromy : Matrix::identity(r));
  }
  return f;
}

Matrix circle_monodromy(const CircleQuiverRep& f) {
  std::size_t m = f.points.size();
  Matrix acc = Matrix::identity(f.arc_dim[m - 1]);
  for (std::size_t i = 0; i < m; ++i) {
    if (!f.left[i].is_invertible() || !f.right[i].is_invertible())
      throw std::invalid_argument("circle_monodromy: generization maps not invertible");
    acc = f.right[i] * f.left[i].inverse() * acc;
  }
  return acc;
}

LineQuiverRep unroll_window(const CircleQuiverRep& f, const Rational& t0, const Rational& len) {
  std::size_t m = f.points.size();
  Rational t1 = t0 + len;
  std::vector<std::pair<Rational, std::size_t>> lifted;  // (position, circle point index)
  for (std::size_t i = 0; i < m; ++i)
    for (long long k : candidate_shifts(f.points[i], t0, t1)) {
      Rational x = f.points[i] + Rational(k);
      if (t0 < x && x < t1) lifted.emplace_back(x, i);
    }
  std::sort(lifted.begin(), lifted.end());

  LineQuiverRep r;
  std::size_t n = lifted.size();
  if (n == 0) throw std::invalid_argument("unroll_window: window too short to contain a marked point");
  r.points.reserve(n);
  r.stalk_dim.resize(n);
  r.arc_dim.resize(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t i = lifted[j].second;
    r.points.push_back(lifted[j].first);
    r.stalk_dim[j] = f.stalk_dim[i];
    r.arc_dim[j] = f.arc_dim[(i + m - 1) % m];  // arc just below this lift
    r.left.push_back(f.left[i]);
    r.right.push_back(f.right[i]);
  }
  r.arc_dim[n] = f.arc_dim[lifted[n - 1].second];
  return r;
}

std::vector<std::pair<Interval, std::size_t>> decompose_line(const LineQuiverRep& f) {
  if (!f.valid()) throw std::invalid_argument("decompose_line: invalid representation");
  std::size_t n = f.points.size();
  std::size_t nv = 2 * n + 1;
  GenRep g = f.to_gen();

  // rk[i][j] = rank of the canonical map from the limit to the colimit of
  // the zigzag restricted to vertices [i, j]; maintained incrementally by
  // transporting along j two subspaces of the rightmost space: L = image of
  // the limit, N = kernel of the map to the colimit. Appending a vertex at
  // the sink side maps both forward; appending at the source side pulls
  // both back.
  std::vector<std::vector<std::size_t>> rk(nv, std::vector<std::size_t>(nv, 0));
  for (std::size_t i = 0; i < nv; ++i) {
    Matrix l = Matrix::identity(g.dims[i]);
    Matrix nz(g.dims[i], 0);
    rk[i][i] = g.dims[i];
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (j % 2 == 0) {
        // previous vertex is the stalk at point (j-1)/2; its right arrow
        // points into the new arc vertex.
        const Matrix& fw = f.right[(j - 1) / 2];
        l = (fw * l).image_basis();
        nz = (fw * nz).image_basis();
      } else {
        // new vertex is the stalk at point (j-1)/2; its left arrow points
        // back into the previous arc vertex.
        const Matrix& bw = f.left[(j - 1) / 2];
        l = preimage_basis(bw, l);
        nz = preimage_basis(bw, nz);
      }
      rk[i][j] = l.cols() - intersection_dim(l, nz);
    }
  }

  auto rk_at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> std::size_t {
    if (i < 0 || j >= (std::ptrdiff_t)nv || i > j) return 0;
    return rk[i][j];
  };

  std::map<Interval, std::size_t> out;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i; j < nv; ++j) {
      std::ptrdiff_t si = i, sj = j;
      std::ptrdiff_t mult = (std::ptrdiff_t)rk_at(si, sj) - (std::ptrdiff_t)rk_at(si - 1, sj) -
                            (std::ptrdiff_t)rk_at(si, sj + 1) + (std::ptrdiff_t)rk_at(si - 1, sj + 1);
      if (mult < 0) throw std::logic_error("decompose_line: negative multiplicity");
      if (mult == 0) continue;
      Interval iv;
      if (i % 2 == 1) {
        iv.lo = Endpoint::at(f.points[(i - 1) / 2]);
        iv.lo_closed = true;
      } else if (i > 0) {
        iv.lo = Endpoint::at(f.points[i / 2 - 1]);
        iv.lo_closed = false;
      }
      if (j % 2 == 1) {
        iv.hi = Endpoint::at(f.points[(j - 1) / 2]);
        iv.hi_closed = true;
      } else if (j < nv - 1) {
        iv.hi = Endpoint::at(f.points[j / 2]);
        iv.hi_closed = false;
      }
      out[iv] += (std::size_t)mult;
    }
  return {out.begin(), out.end()};
}

}  // namespace shv
