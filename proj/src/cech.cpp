#include "shv/cech.hpp"

#include <numeric>
#include <stdexcept>

namespace shv {

namespace {

// Coboundary C^0 = (+) stalks -> C^1 = (+) arcs of a circle model: on arc i
// (between points i and i+1), the difference of the two generizations.
Matrix circle_coboundary(const CircleQuiverRep& f) {
  std::size_t m = f.points.size();
  std::vector<std::size_t> soff(m + 1, 0), aoff(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    soff[i + 1] = soff[i] + f.stalk_dim[i];
    aoff[i + 1] = aoff[i] + f.arc_dim[i];
  }
  Matrix d(aoff[m], soff[m]);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t up = (i + 1) % m;
    for (std::size_t r = 0; r < f.arc_dim[i]; ++r) {
      for (std::size_t c = 0; c < f.stalk_dim[i]; ++c)
        d.at(aoff[i] + r, soff[i] + c) += f.right[i].at(r, c);
      for (std::size_t c = 0; c < f.stalk_dim[up]; ++c)
        d.at(aoff[i] + r, soff[up] + c) -= f.left[up].at(r, c);
    }
  }
  return d;
}

std::pair<std::size_t, std::size_t> complex_cohomology(const Matrix& d) {
  std::size_t r = d.rank();
  return {d.cols() - r, d.rows() - r};
}

}  // namespace

std::pair<std::size_t, std::size_t> cech_cohomology_circle(const CircleQuiverRep& f) {
  if (!f.valid()) throw std::invalid_argument("cech_cohomology_circle: invalid model");
  return complex_cohomology(circle_coboundary(f));
}

std::pair<std::size_t, std::size_t> cech_cohomology_line(const LineQuiverRep& f) {
  if (!f.valid()) throw std::invalid_argument("cech_cohomology_line: invalid model");
  if (f.arc_dim.front() != 0 || f.arc_dim.back() != 0)
    throw std::invalid_argument("cech_cohomology_line: support must avoid the unbounded arcs");
  std::size_t n = f.points.size();
  std::vector<std::size_t> soff(n + 1, 0), aoff(n, 0);
  for (std::size_t i = 0; i < n; ++i) soff[i + 1] = soff[i] + f.stalk_dim[i];
  for (std::size_t i = 0; i + 1 < n; ++i) aoff[i + 1] = aoff[i] + f.arc_dim[i + 1];
  std::size_t acols = n == 0 ? 0 : aoff[n - 1];
  Matrix d(acols, soff[n]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Bounded arc i+1 sits between points i and i+1.
    for (std::size_t r = 0; r < f.arc_dim[i + 1]; ++r) {
      for (std::size_t c = 0; c < f.stalk_dim[i]; ++c)
        d.at(aoff[i] + r, soff[i] + c) += f.right[i].at(r, c);
      for (std::size_t c = 0; c < f.stalk_dim[i + 1]; ++c)
        d.at(aoff[i] + r, soff[i + 1] + c) -= f.left[i + 1].at(r, c);
    }
  }
  return complex_cohomology(d);
}

std::size_t cech_c_rank(const CircleQuiverRep& f) {
  if (!f.valid()) throw std::invalid_argument("cech_c_rank: invalid model");
  // The rank-2 unipotent local system and its tensor with f, on the same
  // marked points.
  CircleQuiverRep l2 = local_system_rep(Matrix::jordan_block(Rational(1), 2), f.points);
  GenRep lf = tensor(l2.to_gen(), f.to_gen());
  CircleQuiverRep tf = CircleQuiverRep::from_gen(f.points, lf);

  Matrix d0 = circle_coboundary(f);
  Matrix d1 = circle_coboundary(tf);

  // Cochain-level maps of the extension: a = e_1 (x) id (into the sub),
  // and the non-equivariant section s = e_2 (x) id of the quotient map.
  auto block_map = [&](bool arcs, bool top) {
    // Builds the inclusion of C^*(f) into C^*(tf) hitting the e_1 (top) or
    // e_2 (bottom) slot of each cell.
    std::size_t m = f.points.size();
    std::size_t rows = 0, cols = 0;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t df = arcs ? f.arc_dim[i] : f.stalk_dim[i];
      rows += 2 * df;
      cols += df;
    }
    Matrix b(rows, cols);
    std::size_t ro = 0, co = 0;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t df = arcs ? f.arc_dim[i] : f.stalk_dim[i];
      std::size_t slot = top ? 0 : df;  // e_1 slot first in the Kronecker order
      for (std::size_t k = 0; k < df; ++k) b.at(ro + slot + k, co + k) = 1;
      ro += 2 * df;
      co += df;
    }
    return b;
  };
  Matrix a1 = block_map(true, true);    // C^1(f) -> C^1(tf), sub inclusion
  Matrix s0 = block_map(false, false);  // C^0(f) -> C^0(tf), quotient section

  Matrix h0 = d0.kernel_basis();               // representatives of H^0(f)
  Matrix z = d1 * (s0 * h0);                   // lands in the sub, cocycle-wise
  auto x = a1.solve(z);
  if (!x) throw std::logic_error("cech_c_rank: connecting image not in the subobject");
  // Rank of the classes of x modulo coboundaries.
  Matrix im = d0.image_basis();
  return x->hstack(im).rank() - im.cols();
}

}  // namespace shv
