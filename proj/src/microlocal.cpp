#include "shv/microlocal.hpp"

#include <algorithm>
#include <set>

namespace shv {

namespace {

Rational frac(const Rational& x) { return x - Rational(x.floor()); }

struct Owner {
  std::size_t instance;
  bool closed;  // openness flag of the matched endpoint
  int deg;
};

// Matches of (base, sign) against the endpoint covectors of one interval.
void match_interval(const Interval& iv, const Rational& base, int sign, int deg,
                    std::size_t instance, bool mod_one, std::vector<Owner>* out) {
  if (iv.lo.finite()) {
    Rational b = mod_one ? frac(iv.lo.value) : iv.lo.value;
    if (b == base && (iv.lo_closed ? +1 : -1) == sign) out->push_back({instance, iv.lo_closed, deg});
  }
  if (iv.hi.finite()) {
    Rational b = mod_one ? frac(iv.hi.value) : iv.hi.value;
    if (b == base && (iv.hi_closed ? -1 : +1) == sign) out->push_back({instance, iv.hi_closed, deg});
  }
}

std::vector<Owner> line_owners(const std::vector<LineSummand>& inst, const Rational& base,
                               int sign) {
  std::vector<Owner> out;
  for (std::size_t i = 0; i < inst.size(); ++i)
    match_interval(inst[i].iv, base, sign, inst[i].deg, i, false, &out);
  return out;
}

std::vector<Owner> circle_owners(const std::vector<WrappedSummand>& inst, const Rational& base,
                                 int sign) {
  std::vector<Owner> out;
  for (std::size_t i = 0; i < inst.size(); ++i)
    match_interval(inst[i].w.lift(), frac(base), sign, inst[i].deg, i, true, &out);
  return out;
}

MicrolocalRank rank_of(const std::vector<Owner>& owners) {
  MicrolocalRank r;
  r.total = owners.size();
  for (const auto& o : owners) r.degrees.push_back(o.deg);
  std::sort(r.degrees.begin(), r.degrees.end());
  return r;
}

Rational shift_of(const Owner& o) {
  return (o.closed ? Rational(1, 2) : Rational(-1, 2)) - Rational(o.deg);
}

Owner unique_owner(std::vector<Owner> owners, const char* what) {
  if (owners.size() != 1) throw NotSimple(what);
  return owners.front();
}

}  // namespace

bool MicrolocalRank::pure() const {
  for (int d : degrees)
    if (d != degrees.front()) return false;
  return true;
}

std::vector<LineSummand> line_instances(const LineSheaf& f) {
  std::vector<LineSummand> out;
  for (const auto& s : f.summands)
    for (std::size_t k = 0; k < s.mult; ++k) out.push_back({s.iv, s.deg, 1});
  return out;
}

std::vector<WrappedSummand> wrapped_instances(const CircleSheaf& f) {
  std::vector<WrappedSummand> out;
  for (const auto& s : f.wrapped)
    for (std::size_t k = 0; k < s.mult; ++k) out.push_back({s.w, s.deg, 1});
  return out;
}

MicrolocalRank microlocal_rank(const LineSheaf& f, const Rational& base, int sign) {
  return rank_of(line_owners(line_instances(f), base, sign));
}

MicrolocalRank microlocal_rank(const CircleSheaf& f, const Rational& base, int sign) {
  return rank_of(circle_owners(wrapped_instances(f), base, sign));
}

Rational shift_difference(const LineSheaf& f, const Covector& p, const Covector& q) {
  auto inst = line_instances(f);
  Owner op = unique_owner(line_owners(inst, p.base, p.sign), "shift_difference: not simple at p");
  Owner oq = unique_owner(line_owners(inst, q.base, q.sign), "shift_difference: not simple at q");
  return shift_of(op) - shift_of(oq);
}

Rational shift_difference(const CircleSheaf& f, const Covector& p, const Covector& q) {
  auto inst = wrapped_instances(f);
  Owner op = unique_owner(circle_owners(inst, p.base, p.sign), "shift_difference: not simple at p");
  Owner oq = unique_owner(circle_owners(inst, q.base, q.sign), "shift_difference: not simple at q");
  return shift_of(op) - shift_of(oq);
}

EndoElement EndoElement::scalar(const Rational& lambda, std::size_t n_instances) {
  EndoElement u;
  for (std::size_t i = 0; i < n_instances; ++i) u.coeff[{i, i, 0}] = lambda;
  return u;
}

namespace {

Rational diagonal_coeff(const EndoElement& u, std::size_t o) {
  auto it = u.coeff.find({o, o, 0});
  return it == u.coeff.end() ? Rational(0) : it->second;
}

}  // namespace

Rational mu_scalar(const LineSheaf& f, const EndoElement& u, const Rational& base, int sign) {
  Owner o = unique_owner(line_owners(line_instances(f), base, sign), "mu_scalar: not simple");
  return diagonal_coeff(u, o.instance);
}

Rational mu_scalar(const CircleSheaf& f, const EndoElement& u, const Rational& base, int sign) {
  Owner o = unique_owner(circle_owners(wrapped_instances(f), base, sign), "mu_scalar: not simple");
  return diagonal_coeff(u, o.instance);
}

namespace {

// Restriction of the expanded instance list to an open window, each entry
// remembering which original instance it came from.
struct Restricted {
  std::vector<LineSummand> inst;
  std::vector<std::size_t> origin;
};

Restricted restrict_to_window(const std::vector<LineSummand>& inst, const Interval& window) {
  Restricted r;
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (auto k = intersect(inst[i].iv, window)) {
      r.inst.push_back({*k, inst[i].deg, 1});
      r.origin.push_back(i);
    }
  return r;
}

}  // namespace

bool f_linked_exact(const LineSheaf& f, const Covector& p, const Covector& q,
                    const Interval& window) {
  if (!window.contains(p.base) || !window.contains(q.base))
    throw std::invalid_argument("f_linked_exact: covector not over the window");
  Restricted rw = restrict_to_window(line_instances(f), window);
  Owner op = unique_owner(line_owners(rw.inst, p.base, p.sign), "f_linked_exact: not simple at p");
  Owner oq = unique_owner(line_owners(rw.inst, q.base, q.sign), "f_linked_exact: not simple at q");
  // Basis of End(F|_W): one generator per ordered pair of instances of the
  // same degree with nonzero hom. The mu-scalar of a basis element at a
  // covector is its diagonal coefficient on the owning instance.
  for (std::size_t s = 0; s < rw.inst.size(); ++s)
    for (std::size_t t = 0; t < rw.inst.size(); ++t) {
      if (rw.inst[s].deg != rw.inst[t].deg) continue;
      if (!hom_nonzero(rw.inst[t].iv, rw.inst[s].iv)) continue;
      Rational mu_p = (s == t && s == op.instance) ? Rational(1) : Rational(0);
      Rational mu_q = (s == t && s == oq.instance) ? Rational(1) : Rational(0);
      if (mu_p != mu_q) return false;
    }
  return true;
}

bool f_linked_interval_criterion(const LineSheaf& f, const Covector& p, const Covector& q,
                                 const Interval& window) {
  if (!window.contains(p.base) || !window.contains(q.base))
    throw std::invalid_argument("f_linked_interval_criterion: covector not over the window");
  auto inst = line_instances(f);
  Restricted rw = restrict_to_window(inst, window);
  Owner op = unique_owner(line_owners(rw.inst, p.base, p.sign),
                          "f_linked_interval_criterion: not simple at p");
  Owner oq = unique_owner(line_owners(rw.inst, q.base, q.sign),
                          "f_linked_interval_criterion: not simple at q");
  if (rw.origin[op.instance] != rw.origin[oq.instance]) return false;
  // The owning summand of the unrestricted sheaf must have its closure
  // inside the window.
  Interval iv = inst[rw.origin[op.instance]].iv;
  Interval cl = iv;
  if (cl.lo.finite()) cl.lo_closed = true;
  if (cl.hi.finite()) cl.hi_closed = true;
  auto cap = intersect(cl, window);
  return cap && *cap == cl;
}

std::optional<Covector> conjugate_point(const CircleSheaf& f, const Covector& p) {
  auto inst = wrapped_instances(f);
  auto owners = circle_owners(inst, p.base, p.sign);
  if (owners.empty()) return std::nullopt;
  if (owners.size() > 1) throw NotSimple("conjugate_point: not simple");
  const WrappedSummand& s = inst[owners.front().instance];
  Interval iv = s.w.lift();
  Covector lo_cv{frac(iv.lo.value), iv.lo_closed ? +1 : -1, s.deg, 1};
  Covector hi_cv{frac(iv.hi.value), iv.hi_closed ? -1 : +1, s.deg, 1};
  bool matched_lo = lo_cv.base == frac(p.base) && lo_cv.sign == p.sign;
  return matched_lo ? hi_cv : lo_cv;
}

std::size_t h_invariant(const CircleSheaf& f, const Rational& alpha, std::size_t r, int i) {
  CircleSheaf t = tensor_circle(f, CircleSheaf::one_local(alpha.inverse(), r, 0));
  std::size_t n = 0;
  for (const auto& s : t.local)
    if (s.alpha == Rational(1) && s.r == 1 && s.deg == i) n += s.mult;
  return n;
}

bool CircleArc::contains(const Rational& theta) const {
  Rational d = frac(theta - lo);
  return !d.is_zero() && d < len;
}

std::vector<CircleArc> CoverSpec::components() const {
  Interval ul = Interval::bounded(u.lo, false, u.lo + u.len, false);
  std::vector<CircleArc> out;
  long long k0 = (long long)(u.lo - (v.lo + v.len)).floor() - 1;
  long long k1 = (long long)(u.lo + u.len - v.lo).floor() + 1;
  for (long long k = k0; k <= k1; ++k) {
    Interval vl = Interval::bounded(v.lo + Rational(k), false, v.lo + v.len + Rational(k), false);
    if (auto cap = intersect(ul, vl); cap && !cap->is_point())
      out.push_back({frac(cap->lo.value), cap->hi.value - cap->lo.value});
  }
  std::sort(out.begin(), out.end(),
            [](const CircleArc& a, const CircleArc& b) { return a.lo < b.lo; });
  return out;
}

bool CoverSpec::covers_circle() const {
  // The closed complement of U must lie inside V.
  Rational d = frac(u.lo + u.len - v.lo);  // position of the complement's start inside V
  if (d.is_zero()) return false;
  return d + Rational(1) - u.len < v.len;
}

namespace {

// Extension by zero of a circle model to an open arc whose endpoints are
// among the marked points.
CircleQuiverRep zero_extend(const CircleQuiverRep& f, const CircleArc& a) {
  std::size_t m = f.points.size();
  std::vector<bool> keep_stalk(m), keep_arc(m);
  for (std::size_t i = 0; i < m; ++i) keep_stalk[i] = a.contains(f.points[i]);
  for (std::size_t j = 0; j < m; ++j) {
    Rational lo = f.points[j];
    Rational hi = (j + 1 < m) ? f.points[j + 1] : f.points[0] + Rational(1);
    // Arc j is inside a iff some lift fits between a's endpoints.
    Rational d = frac(lo - a.lo);
    keep_arc[j] = d + (hi - lo) <= a.len;
  }
  CircleQuiverRep r = f;
  for (std::size_t i = 0; i < m; ++i)
    if (!keep_stalk[i]) r.stalk_dim[i] = 0;
  for (std::size_t j = 0; j < m; ++j)
    if (!keep_arc[j]) r.arc_dim[j] = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t la = (i + m - 1) % m;
    if (!(keep_stalk[i] && keep_arc[la])) r.left[i] = Matrix(r.arc_dim[la], r.stalk_dim[i]);
    if (!(keep_stalk[i] && keep_arc[i])) r.right[i] = Matrix(r.arc_dim[i], r.stalk_dim[i]);
  }
  return r;
}

// Vertexwise inclusion of one extension by zero into a larger one of the
// same underlying model (cellwise, each space is either equal or zero).
GenMorphism inclusion(const GenRep& sub, const GenRep& sup) {
  GenMorphism m;
  for (std::size_t v = 0; v < sub.dims.size(); ++v) {
    Matrix x(sup.dims[v], sub.dims[v]);
    if (sub.dims[v] > 0) {
      if (sub.dims[v] != sup.dims[v])
        throw std::logic_error("inclusion: cell dimensions disagree");
      x = Matrix::identity(sub.dims[v]);
    }
    m.maps.push_back(std::move(x));
  }
  return m;
}

}  // namespace

CircleSheaf mv_twist(const CircleSheaf& f_in, const CoverSpec& cover, const AutSpec& alpha) {
  CircleSheaf f = f_in;
  f.canonicalize();
  if (!f.single_degree()) throw std::invalid_argument("mv_twist: mixed degrees");
  if (!cover.covers_circle()) throw std::invalid_argument("mv_twist: arcs do not cover the circle");
  int deg = f.wrapped.empty() ? (f.local.empty() ? 0 : f.local.front().deg) : f.wrapped.front().deg;

  auto comps = cover.components();
  std::size_t n_summands = f.wrapped.size() + f.local.size();
  if (alpha.scalars.size() != comps.size())
    throw std::invalid_argument("mv_twist: one scalar list per intersection component required");
  for (const auto& row : alpha.scalars) {
    if (row.size() != n_summands)
      throw std::invalid_argument("mv_twist: one scalar per summand required");
    for (const auto& a : row)
      if (a.is_zero()) throw std::invalid_argument("mv_twist: automorphism scalar is zero");
  }

  // Marked points: all summand endpoints plus the cover boundaries.
  std::set<Rational> pts;
  for (const auto& s : f.wrapped) {
    pts.insert(frac(s.w.lift().lo.value));
    pts.insert(frac(s.w.lift().hi.value));
  }
  for (const CircleArc* a : {&cover.u, &cover.v}) {
    pts.insert(frac(a->lo));
    pts.insert(frac(a->lo + a->len));
  }
  std::vector<Rational> points(pts.begin(), pts.end());

  // One model per canonical summand (multiplicity expanded inside).
  std::vector<CircleQuiverRep> summand_reps;
  for (const auto& s : f.wrapped) {
    CircleQuiverRep one = wrapped_interval_rep(s.w.lift(), points);
    GenRep acc = one.to_gen();
    for (std::size_t k = 1; k < s.mult; ++k) acc = direct_sum(acc, one.to_gen());
    summand_reps.push_back(CircleQuiverRep::from_gen(points, acc));
  }
  for (const auto& s : f.local) {
    CircleQuiverRep one = local_system_rep(Matrix::jordan_block(s.alpha, s.r), points);
    GenRep acc = one.to_gen();
    for (std::size_t k = 1; k < s.mult; ++k) acc = direct_sum(acc, one.to_gen());
    summand_reps.push_back(CircleQuiverRep::from_gen(points, acc));
  }

  // Source: F restricted to each intersection component; target: F_U (+) F_V.
  std::vector<GenRep> src_parts, dst_parts;
  std::vector<GenMorphism> incl_u_parts, incl_v_parts;  // per (component, summand)
  std::vector<GenRep> fu_parts, fv_parts;
  for (std::size_t s = 0; s < n_summands; ++s) {
    fu_parts.push_back(zero_extend(summand_reps[s], cover.u).to_gen());
    fv_parts.push_back(zero_extend(summand_reps[s], cover.v).to_gen());
  }
  for (std::size_t j = 0; j < comps.size(); ++j)
    for (std::size_t s = 0; s < n_summands; ++s) {
      GenRep part = zero_extend(summand_reps[s], comps[j]).to_gen();
      incl_u_parts.push_back(inclusion(part, fu_parts[s]));
      incl_v_parts.push_back(inclusion(part, fv_parts[s]));
      src_parts.push_back(std::move(part));
    }
  for (auto& p : fu_parts) dst_parts.push_back(p);
  for (auto& p : fv_parts) dst_parts.push_back(p);

  auto sum_all = [](const std::vector<GenRep>& parts) {
    GenRep acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
    return acc;
  };
  GenRep src = sum_all(src_parts);
  GenRep dst = sum_all(dst_parts);

  // Vertexwise block offsets.
  std::size_t nv = src.dims.size();
  auto offsets = [&](const std::vector<GenRep>& parts) {
    std::vector<std::vector<std::size_t>> off(parts.size(), std::vector<std::size_t>(nv, 0));
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t o = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        off[i][v] = o;
        o += parts[i].dims[v];
      }
    }
    return off;
  };
  auto src_off = offsets(src_parts);
  auto dst_off = offsets(dst_parts);

  GenMorphism phi;
  for (std::size_t v = 0; v < nv; ++v) phi.maps.push_back(Matrix(dst.dims[v], src.dims[v]));
  for (std::size_t j = 0; j < comps.size(); ++j)
    for (std::size_t s = 0; s < n_summands; ++s) {
      std::size_t part = j * n_summands + s;
      // U-side block: plain inclusion; V-side block: inclusion rescaled by
      // the component's automorphism scalar, with the Mayer-Vietoris sign.
      for (std::size_t v = 0; v < nv; ++v) {
        const Matrix& iu = incl_u_parts[part].maps[v];
        const Matrix& iv = incl_v_parts[part].maps[v];
        for (std::size_t r = 0; r < iu.rows(); ++r)
          for (std::size_t c = 0; c < iu.cols(); ++c)
            phi.maps[v].at(dst_off[s][v] + r, src_off[part][v] + c) = iu.at(r, c);
        Rational a = -alpha.scalars[j][s];
        for (std::size_t r = 0; r < iv.rows(); ++r)
          for (std::size_t c = 0; c < iv.cols(); ++c)
            phi.maps[v].at(dst_off[n_summands + s][v] + r, src_off[part][v] + c) =
                a * iv.at(r, c);
      }
    }

  SubQuotient cok = cokernel(src, dst, phi);
  CircleSheaf out = decompose_circle(CircleQuiverRep::from_gen(points, cok.rep));
  for (auto& s : out.wrapped) s.deg += deg;
  for (auto& s : out.local) s.deg += deg;
  out.canonicalize();
  return out;
}

Rational m_gamma(const CoverSpec& cover, const AutSpec& alpha,
                 const std::vector<PathCrossing>& path, std::size_t summand) {
  auto comps = cover.components();
  Rational out(1);
  for (const auto& c : path) {
    if (c.component >= comps.size() || c.component >= alpha.scalars.size())
      throw std::invalid_argument("m_gamma: unknown component");
    const Rational& a = alpha.scalars[c.component].at(summand);
    out = c.sign >= 0 ? out * a : out / a;
  }
  return out;
}

}  // namespace shv
