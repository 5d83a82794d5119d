#include "shv/linesheaf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shv {

void LineSheaf::canonicalize() {
  std::sort(summands.begin(), summands.end(), [](const LineSummand& a, const LineSummand& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.iv < b.iv;
  });
  std::vector<LineSummand> merged;
  for (const auto& s : summands) {
    if (s.mult == 0) continue;
    if (!merged.empty() && merged.back().deg == s.deg && merged.back().iv == s.iv)
      merged.back().mult += s.mult;
    else
      merged.push_back(s);
  }
  summands = std::move(merged);
}

bool LineSheaf::is_canonical() const {
  LineSheaf c = *this;
  c.canonicalize();
  return c == *this;
}

bool LineSheaf::single_degree() const {
  for (const auto& s : summands)
    if (s.deg != summands.front().deg) return false;
  return true;
}

std::size_t LineSheaf::total_mult() const {
  std::size_t t = 0;
  for (const auto& s : summands) t += s.mult;
  return t;
}

std::size_t LineSheaf::stalk_dim(const Rational& x) const {
  std::size_t t = 0;
  for (const auto& s : summands)
    if (s.iv.contains(x)) t += s.mult;
  return t;
}

bool LineSheaf::compact_support() const {
  for (const auto& s : summands)
    if (!s.iv.is_bounded() || !s.iv.is_closed()) return false;
  return true;
}

LineSheaf LineSheaf::single(const Interval& iv, int deg, std::size_t mult) {
  LineSheaf s;
  s.summands.push_back({iv, deg, mult});
  return s;
}

std::vector<std::pair<Rational, int>> interval_covectors(const Interval& iv) {
  std::vector<std::pair<Rational, int>> out;
  if (iv.lo.finite()) out.emplace_back(iv.lo.value, iv.lo_closed ? +1 : -1);
  if (iv.hi.finite()) out.emplace_back(iv.hi.value, iv.hi_closed ? -1 : +1);
  return out;
}

LineSheaf decompose_line_sheaf(const LineQuiverRep& rep) {
  LineSheaf s;
  for (const auto& [iv, mult] : decompose_line(rep)) s.summands.push_back({iv, 0, mult});
  s.canonicalize();
  return s;
}

LineQuiverRep assemble_line(const LineSheaf& s) {
  if (!s.single_degree()) throw std::invalid_argument("assemble_line: mixed degrees");
  std::set<Rational> pts;
  for (const auto& sm : s.summands) {
    if (sm.iv.lo.finite()) pts.insert(sm.iv.lo.value);
    if (sm.iv.hi.finite()) pts.insert(sm.iv.hi.value);
  }
  std::vector<Rational> points(pts.begin(), pts.end());
  GenRep acc;
  acc.dims.assign(2 * points.size() + 1, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    acc.edges.push_back({2 * i + 1, 2 * i, Matrix(0, 0)});
    acc.edges.push_back({2 * i + 1, 2 * i + 2, Matrix(0, 0)});
  }
  for (const auto& sm : s.summands) {
    GenRep one = interval_rep(sm.iv, points).to_gen();
    for (std::size_t k = 0; k < sm.mult; ++k) acc = direct_sum(acc, one);
  }
  return LineQuiverRep::from_gen(points, acc);
}

std::vector<Covector> ss_line(const LineSheaf& s) {
  std::map<std::tuple<Rational, int, int>, std::size_t> acc;
  for (const auto& sm : s.summands)
    for (const auto& [base, sign] : interval_covectors(sm.iv))
      acc[{base, sign, sm.deg}] += sm.mult;
  std::vector<Covector> out;
  for (const auto& [key, mult] : acc)
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mult});
  return out;
}

LineSheaf dual_line(const LineSheaf& s) {
  LineSheaf d;
  for (const auto& sm : s.summands) {
    Interval iv = sm.iv;
    if (!iv.is_point()) {
      if (iv.lo.finite()) iv.lo_closed = !iv.lo_closed;
      if (iv.hi.finite()) iv.hi_closed = !iv.hi_closed;
    }
    d.summands.push_back({iv, -sm.deg, sm.mult});
  }
  d.canonicalize();
  return d;
}

LineSheaf tensor_line(const LineSheaf& a, const LineSheaf& b) {
  LineSheaf t;
  for (const auto& sa : a.summands)
    for (const auto& sb : b.summands)
      if (auto k = intersect(sa.iv, sb.iv))
        t.summands.push_back({*k, sa.deg + sb.deg, sa.mult * sb.mult});
  t.canonicalize();
  return t;
}

namespace {

// Global cohomology of the constant sheaf on one interval, in degree 0
// normalization: key = cohomological degree, value = rank.
std::map<int, std::size_t> interval_cohomology(const Interval& iv) {
  if (!iv.is_bounded()) {
    if (!iv.lo.finite() && !iv.hi.finite()) return {{0, 1}};   // whole line
    bool closed_end = iv.lo.finite() ? iv.lo_closed : iv.hi_closed;
    return closed_end ? std::map<int, std::size_t>{{0, 1}} : std::map<int, std::size_t>{};
  }
  if (iv.is_closed()) return {{0, 1}};
  if (iv.is_open()) return {{1, 1}};
  return {};  // half-closed
}

}  // namespace

std::map<int, std::size_t> cohomology_line(const LineSheaf& s) {
  std::map<int, std::size_t> h;
  for (const auto& sm : s.summands)
    for (const auto& [d, r] : interval_cohomology(sm.iv)) h[d + sm.deg] += r * sm.mult;
  std::erase_if(h, [](const auto& kv) { return kv.second == 0; });
  return h;
}

std::size_t hom_dim_line(const LineSheaf& a, const LineSheaf& b) {
  if (!a.single_degree() || !b.single_degree())
    throw std::invalid_argument("hom_dim_line: mixed degrees");
  std::size_t t = 0;
  for (const auto& sa : a.summands)
    for (const auto& sb : b.summands)
      if (sa.deg == sb.deg && hom_nonzero(sa.iv, sb.iv)) t += sa.mult * sb.mult;
  return t;
}

std::optional<Rational> autodual_structure(const LineSheaf& s) {
  std::optional<Rational> point;
  for (const auto& sm : s.summands) {
    if (!sm.iv.is_bounded()) return std::nullopt;
    if (sm.iv.is_point()) {
      if (point || sm.deg != 0 || sm.mult != 1) return std::nullopt;
      point = sm.iv.lo.value;
    } else if (!sm.iv.is_half_closed()) {
      return std::nullopt;
    }
  }
  if (!point) return std::nullopt;
  if (dual_line(s) != s) return std::nullopt;
  if (cohomology_line(s) != std::map<int, std::size_t>{{0, 1}}) return std::nullopt;
  return point;
}

}  // namespace shv
