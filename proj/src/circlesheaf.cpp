#include "shv/circlesheaf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace shv {

namespace {

Rational frac(const Rational& x) { return x - Rational(x.floor()); }

}  // namespace

Interval WrappedInterval::lift() const {
  if (is_point()) return Interval::point(lo);
  return Interval::bounded(lo, lo_closed, lo + len, hi_closed);
}

WrappedInterval WrappedInterval::from_lift(const Interval& iv) {
  if (!iv.valid() || !iv.is_bounded())
    throw std::invalid_argument("WrappedInterval: need a bounded interval");
  WrappedInterval w;
  w.lo = frac(iv.lo.value);
  w.len = iv.hi.value - iv.lo.value;
  w.lo_closed = iv.lo_closed;
  w.hi_closed = iv.hi_closed;
  return w;
}

bool WrappedInterval::valid() const {
  if (lo < Rational(0) || !(lo < Rational(1))) return false;
  if (len < Rational(0)) return false;
  if (len.is_zero() && !(lo_closed && hi_closed)) return false;
  return true;
}

void CircleSheaf::canonicalize() {
  std::sort(wrapped.begin(), wrapped.end(), [](const WrappedSummand& a, const WrappedSummand& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.w < b.w;
  });
  std::vector<WrappedSummand> mw;
  for (const auto& s : wrapped) {
    if (s.mult == 0) continue;
    if (!mw.empty() && mw.back().deg == s.deg && mw.back().w == s.w)
      mw.back().mult += s.mult;
    else
      mw.push_back(s);
  }
  wrapped = std::move(mw);

  std::sort(local.begin(), local.end(), [](const LocalSummand& a, const LocalSummand& b) {
    return std::tie(a.deg, a.alpha, a.r) < std::tie(b.deg, b.alpha, b.r);
  });
  std::vector<LocalSummand> ml;
  for (const auto& s : local) {
    if (s.mult == 0) continue;
    if (!ml.empty() && ml.back().deg == s.deg && ml.back().alpha == s.alpha && ml.back().r == s.r)
      ml.back().mult += s.mult;
    else
      ml.push_back(s);
  }
  local = std::move(ml);
}

bool CircleSheaf::single_degree() const {
  std::set<int> degs;
  for (const auto& s : wrapped) degs.insert(s.deg);
  for (const auto& s : local) degs.insert(s.deg);
  return degs.size() <= 1;
}

std::size_t CircleSheaf::stalk_dim(const Rational& theta) const {
  Rational t = frac(theta);
  std::size_t d = 0;
  for (const auto& s : wrapped) {
    Interval iv = s.w.lift();
    long long k0 = (long long)(iv.lo.value - t).floor() - 1;
    long long k1 = (long long)(iv.hi.value - t).floor() + 1;
    for (long long k = k0; k <= k1; ++k)
      if (iv.contains(t + Rational(k))) d += s.mult;
  }
  for (const auto& s : local) d += s.r * s.mult;
  return d;
}

CircleSheaf CircleSheaf::one_wrapped(const WrappedInterval& w, int deg, std::size_t mult) {
  CircleSheaf s;
  s.wrapped.push_back({w, deg, mult});
  return s;
}

CircleSheaf CircleSheaf::one_local(const Rational& alpha, std::size_t r, int deg,
                                   std::size_t mult) {
  CircleSheaf s;
  s.local.push_back({alpha, r, deg, mult});
  return s;
}

CircleQuiverRep assemble_circle(const CircleSheaf& s) {
  if (!s.single_degree()) throw std::invalid_argument("assemble_circle: mixed degrees");
  std::set<Rational> pts;
  for (const auto& sm : s.wrapped) {
    Interval iv = sm.w.lift();
    pts.insert(frac(iv.lo.value));
    pts.insert(frac(iv.hi.value));
  }
  if (pts.empty()) pts.insert(Rational(0));
  std::vector<Rational> points(pts.begin(), pts.end());
  std::size_t m = points.size();

  GenRep acc;
  acc.dims.assign(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    acc.edges.push_back({2 * i + 1, 2 * ((i + m - 1) % m), Matrix(0, 0)});
    acc.edges.push_back({2 * i + 1, 2 * i, Matrix(0, 0)});
  }
  for (const auto& sm : s.wrapped) {
    GenRep one = wrapped_interval_rep(sm.w.lift(), points).to_gen();
    for (std::size_t k = 0; k < sm.mult; ++k) acc = direct_sum(acc, one);
  }
  for (const auto& sm : s.local) {
    GenRep one = local_system_rep(Matrix::jordan_block(sm.alpha, sm.r), points).to_gen();
    for (std::size_t k = 0; k < sm.mult; ++k) acc = direct_sum(acc, one);
  }
  return CircleQuiverRep::from_gen(points, acc);
}

namespace {

// A window base point in the last arc whose class mod 1 avoids every marked
// point, so no lift ever sits on the window boundary.
Rational window_base(const CircleQuiverRep& f) {
  Rational lo = f.points.back();
  Rational gap = f.points.front() + Rational(1) - lo;
  for (long long d = 2;; ++d) {
    Rational t0 = lo + gap / Rational(d);
    Rational c = frac(t0);
    if (!std::binary_search(f.points.begin(), f.points.end(), c)) return t0;
  }
}

}  // namespace

CircleSheaf decompose_circle(const CircleQuiverRep& rep) {
  if (!rep.valid()) throw std::invalid_argument("decompose_circle: invalid representation");
  CircleSheaf out;
  CircleQuiverRep f = rep;
  while (true) {
    if (f.to_gen().total_dim() == 0) break;
    Rational t0 = window_base(f);
    Rational len = Rational((long long)f.max_dim() + 2);
    LineQuiverRep window = unroll_window(f, t0, len);
    auto bars = decompose_line(window);

    const Interval* found = nullptr;
    for (const auto& [iv, mult] : bars)
      if (iv.is_bounded() && iv.closure_inside(t0, t0 + len)) {
        found = &iv;
        break;
      }
    if (!found) {
      // Only a local system is left; read off the monodromy.
      Matrix mono = circle_monodromy(f);
      if (mono.rows() > 0) {
        JordanType jt = jordan_blocks(mono);
        for (const auto& b : jt.blocks) out.local.push_back({b.eigenvalue, b.size, 0, b.multiplicity});
      }
      break;
    }

    WrappedInterval w = WrappedInterval::from_lift(*found);
    GenRep fg = f.to_gen();
    GenRep rg = wrapped_interval_rep(w.lift(), f.points).to_gen();
    std::size_t v0 = 0;
    while (rg.dims[v0] == 0) ++v0;

    // Split the summand off: find a section/retraction pair whose composite
    // has nonzero semisimple part (the vertexwise trace sees only that part,
    // nilpotent endomorphisms being traceless), invert it, and pass to the
    // kernel of the resulting projector.
    auto sections = hom_basis(rg, fg);
    auto retractions = hom_basis(fg, rg);
    bool split = false;
    for (const auto& u : sections) {
      for (const auto& v : retractions) {
        GenMorphism wuv = compose(v, u);
        Rational c = wuv.maps[v0].trace() / Rational((long long)rg.dims[v0]);
        if (c.is_zero()) continue;
        for (const auto& mtx : wuv.maps)
          if (!mtx.is_invertible())
            throw std::logic_error("decompose_circle: unit of the local algebra not invertible");
        GenMorphism proj = compose(u, compose(invert(wuv), v));
        SubQuotient ker = kernel(fg, fg, proj);
        f = CircleQuiverRep::from_gen(f.points, ker.rep);
        out.wrapped.push_back({w, 0, 1});
        split = true;
        break;
      }
      if (split) break;
    }
    if (!split) throw std::logic_error("decompose_circle: interior interval did not split off");
  }
  out.canonicalize();
  return out;
}

LineSheaf pullback_window(const CircleSheaf& s, const Interval& window) {
  if (!window.is_bounded() || !window.is_open() || window.is_point())
    throw std::invalid_argument("pullback_window: window must be open and bounded");
  LineSheaf out;
  for (const auto& sm : s.wrapped) {
    Interval iv = sm.w.lift();
    long long k0 = (long long)(window.lo.value - iv.hi.value).floor() - 1;
    long long k1 = (long long)(window.hi.value - iv.lo.value).floor() + 1;
    for (long long k = k0; k <= k1; ++k)
      if (auto piece = intersect(iv.translate(Rational(k)), window))
        out.summands.push_back({*piece, sm.deg, sm.mult});
  }
  for (const auto& sm : s.local)
    out.summands.push_back({window, sm.deg, sm.mult * sm.r});
  out.canonicalize();
  return out;
}

CircleSheaf tensor_circle(const CircleSheaf& a, const CircleSheaf& b) {
  CircleSheaf t;
  for (const auto& x : a.wrapped)
    for (const auto& y : b.wrapped) {
      Interval i = x.w.lift();
      Interval j = y.w.lift();
      long long k0 = (long long)(i.lo.value - j.hi.value).floor() - 1;
      long long k1 = (long long)(i.hi.value - j.lo.value).floor() + 1;
      for (long long k = k0; k <= k1; ++k)
        if (auto piece = intersect(i, j.translate(Rational(k))))
          t.wrapped.push_back({WrappedInterval::from_lift(*piece), x.deg + y.deg, x.mult * y.mult});
    }
  for (const auto& x : a.wrapped)
    for (const auto& y : b.local)
      t.wrapped.push_back({x.w, x.deg + y.deg, x.mult * y.mult * y.r});
  for (const auto& x : a.local)
    for (const auto& y : b.wrapped)
      t.wrapped.push_back({y.w, x.deg + y.deg, x.mult * y.mult * x.r});
  for (const auto& x : a.local)
    for (const auto& y : b.local) {
      std::size_t p = std::min(x.r, y.r);
      std::size_t q = std::max(x.r, y.r);
      for (std::size_t i = 1; i <= p; ++i)
        t.local.push_back({x.alpha * y.alpha, q - p + 2 * i - 1, x.deg + y.deg, x.mult * y.mult});
    }
  t.canonicalize();
  return t;
}

CircleSheaf dual_circle(const CircleSheaf& s) {
  CircleSheaf d;
  for (const auto& sm : s.wrapped) {
    WrappedInterval w = sm.w;
    if (!w.is_point()) {
      w.lo_closed = !w.lo_closed;
      w.hi_closed = !w.hi_closed;
    }
    d.wrapped.push_back({w, -sm.deg, sm.mult});
  }
  for (const auto& sm : s.local) d.local.push_back({sm.alpha.inverse(), sm.r, -sm.deg, sm.mult});
  d.canonicalize();
  return d;
}

std::map<int, std::size_t> cohomology_circle(const CircleSheaf& s) {
  std::map<int, std::size_t> h;
  for (const auto& sm : s.wrapped) {
    Interval iv = sm.w.lift();
    if (iv.is_closed())
      h[sm.deg] += sm.mult;
    else if (iv.is_open())
      h[sm.deg + 1] += sm.mult;
    // half-closed: no cohomology
  }
  for (const auto& sm : s.local)
    if (sm.alpha == Rational(1)) {
      h[sm.deg] += sm.mult;
      h[sm.deg + 1] += sm.mult;
    }
  std::erase_if(h, [](const auto& kv) { return kv.second == 0; });
  return h;
}

std::pair<std::size_t, std::size_t> end_algebra(const WrappedInterval& w) {
  Interval iv = w.lift();
  long long reach = (long long)w.len.floor() + 2;
  std::size_t dim = 0;
  for (long long n = -reach; n <= reach; ++n)
    if (hom_nonzero(iv, iv.translate(Rational(n)))) ++dim;
  bool half = !w.is_point() && (w.lo_closed != w.hi_closed);
  return {dim, half ? dim - 1 : 0};
}

std::vector<Covector> ss_circle(const CircleSheaf& s) {
  std::map<std::tuple<Rational, int, int>, std::size_t> acc;
  for (const auto& sm : s.wrapped)
    for (const auto& [base, sign] : interval_covectors(sm.w.lift()))
      acc[{frac(base), sign, sm.deg}] += sm.mult;
  std::vector<Covector> out;
  for (const auto& [key, mult] : acc)
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mult});
  return out;
}

}  // namespace shv
