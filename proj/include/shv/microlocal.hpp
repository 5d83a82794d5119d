#pragma once

// Microlocal layer over the canonical forms: microlocal rank and shifts at
// covectors, mu-scalars of endomorphisms, linked and conjugate points, the
// H^i_{alpha,r} invariants, the Mayer-Vietoris twist and its monodromy map.

#include "shv/circlesheaf.hpp"
#include "shv/linesheaf.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace shv {

struct NotSimple : std::runtime_error {
  explicit NotSimple(const std::string& what) : std::runtime_error(what) {}
};

struct MicrolocalRank {
  std::size_t total = 0;
  std::vector<int> degrees;  // sorted, one entry per multiplicity
  bool simple() const { return total == 1; }
  bool pure() const;
};

MicrolocalRank microlocal_rank(const LineSheaf& f, const Rational& base, int sign);
MicrolocalRank microlocal_rank(const CircleSheaf& f, const Rational& base, int sign);

// Difference of shifts of the owning summands at two covectors of a simple
// sheaf, in half-integers: an endpoint contributes +1/2 when closed, -1/2
// when open, minus the summand degree. Only differences are meaningful.
Rational shift_difference(const LineSheaf& f, const Covector& p, const Covector& q);
Rational shift_difference(const CircleSheaf& f, const Covector& p, const Covector& q);

// An endomorphism of a canonical sheaf in summand-block coordinates:
// coefficient per (target instance, source instance, translate). Instances
// enumerate summands with multiplicity expanded; translate 0 indexes the
// identity-like generator of a diagonal block, nonzero translates the
// nilpotent generators of wrapped half-closed blocks.
struct EndoElement {
  std::map<std::tuple<std::size_t, std::size_t, long long>, Rational> coeff;

  static EndoElement scalar(const Rational& lambda, std::size_t n_instances);
};

// Expanded instance lists backing EndoElement indices.
std::vector<LineSummand> line_instances(const LineSheaf& f);
std::vector<WrappedSummand> wrapped_instances(const CircleSheaf& f);

// The scalar by which u acts microlocally at a covector owned by a unique
// summand: the semisimple part of the owner's diagonal block.
Rational mu_scalar(const LineSheaf& f, const EndoElement& u, const Rational& base, int sign);
Rational mu_scalar(const CircleSheaf& f, const EndoElement& u, const Rational& base, int sign);

// p and q are linked over the window when every endomorphism of F
// restricted to the window has equal mu-scalars at p and q; decided on a
// basis of the endomorphism space (the scalar is linear in u and units span
// the algebra, so the automorphism quantifier reduces to linearity).
bool f_linked_exact(const LineSheaf& f, const Covector& p, const Covector& q,
                    const Interval& window);
// The sufficient criterion: one summand owns both covectors, the sheaf is
// simple at both, and the window contains the summand's closure.
bool f_linked_interval_criterion(const LineSheaf& f, const Covector& p, const Covector& q,
                                 const Interval& window);

// The covector at the other endpoint of the wrapped summand owning p.
std::optional<Covector> conjugate_point(const CircleSheaf& f, const Covector& p);

// Multiplicity of L_{alpha,r} in the degree-i local part, computed as the
// number of trivial rank-one summands of F (x) L_{1/alpha,r} in degree i.
std::size_t h_invariant(const CircleSheaf& f, const Rational& alpha, std::size_t r, int i);

// An open arc of the circle, of length strictly between 0 and 1.
struct CircleArc {
  Rational lo;   // membership is tested mod 1
  Rational len;  // in (0, 1)
  bool contains(const Rational& theta) const;
};

struct CoverSpec {
  CircleArc u, v;
  // Connected components of the intersection, ordered by canonical start.
  std::vector<CircleArc> components() const;
  bool covers_circle() const;
};

// One nonzero scalar per intersection component and per canonical summand
// of the sheaf being twisted (summands in canonical order, wrapped first).
struct AutSpec {
  std::vector<std::vector<Rational>> scalars;  // [component][summand]
};

// The Mayer-Vietoris twist: cokernel of the inclusion of F restricted to
// the intersection into F_U (+) F_V with the V-side rescaled by the given
// automorphism, computed on quiver models and decomposed.
CircleSheaf mv_twist(const CircleSheaf& f, const CoverSpec& cover, const AutSpec& alpha);

struct PathCrossing {
  std::size_t component = 0;
  int sign = +1;
};

// Monodromy of the twisting cocycle along a loop: the signed product of the
// alpha-scalars of one summand over the crossed components.
Rational m_gamma(const CoverSpec& cover, const AutSpec& alpha,
                 const std::vector<PathCrossing>& path, std::size_t summand = 0);

}  // namespace shv
