#include "shv/genrep.hpp"

#include <stdexcept>

namespace shv {

std::size_t GenRep::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

bool GenRep::valid() const {
  for (const auto& e : edges) {
    if (e.src >= dims.size() || e.dst >= dims.size()) return false;
    if (e.map.rows() != dims[e.dst] || e.map.cols() != dims[e.src]) return false;
  }
  return true;
}

bool GenRep::is_zero() const { return total_dim() == 0; }

bool same_shape(const GenRep& f, const GenRep& g) {
  if (f.dims.size() != g.dims.size() || f.edges.size() != g.edges.size()) return false;
  for (std::size_t e = 0; e < f.edges.size(); ++e)
    if (f.edges[e].src != g.edges[e].src || f.edges[e].dst != g.edges[e].dst) return false;
  return true;
}

bool commutes(const GenRep& f, const GenRep& g, const GenMorphism& phi) {
  if (phi.maps.size() != f.dims.size()) return false;
  for (std::size_t v = 0; v < f.dims.size(); ++v)
    if (phi.maps[v].rows() != g.dims[v] || phi.maps[v].cols() != f.dims[v]) return false;
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    const auto& ef = f.edges[e];
    const auto& eg = g.edges[e];
    if (!(phi.maps[ef.dst] * ef.map - eg.map * phi.maps[ef.src]).is_zero()) return false;
  }
  return true;
}

GenMorphism identity_morphism(const GenRep& f) {
  GenMorphism m;
  m.maps.reserve(f.dims.size());
  for (auto d : f.dims) m.maps.push_back(Matrix::identity(d));
  return m;
}

GenMorphism compose(const GenMorphism& psi, const GenMorphism& phi) {
  if (psi.maps.size() != phi.maps.size()) throw std::invalid_argument("compose: vertex count");
  GenMorphism m;
  m.maps.reserve(phi.maps.size());
  for (std::size_t v = 0; v < phi.maps.size(); ++v) m.maps.push_back(psi.maps[v] * phi.maps[v]);
  return m;
}

bool is_isomorphism(const GenRep& f, const GenRep& g, const GenMorphism& phi) {
  if (!commutes(f, g, phi)) return false;
  for (const auto& m : phi.maps)
    if (!m.is_invertible()) return false;
  return true;
}

GenMorphism invert(const GenMorphism& phi) {
  GenMorphism m;
  m.maps.reserve(phi.maps.size());
  for (const auto& x : phi.maps) m.maps.push_back(x.inverse());
  return m;
}

namespace {

// Column-major vectorization offsets of the unknown blocks X_v, each of size
// g.dims[v] x f.dims[v].
std::vector<std::size_t> block_offsets(const GenRep& f, const GenRep& g) {
  std::vector<std::size_t> off(f.dims.size() + 1, 0);
  for (std::size_t v = 0; v < f.dims.size(); ++v)
    off[v + 1] = off[v] + f.dims[v] * g.dims[v];
  return off;
}

}  // namespace

std::vector<GenMorphism> hom_basis(const GenRep& f, const GenRep& g) {
  if (!same_shape(f, g)) throw std::invalid_argument("hom_basis: shape mismatch");
  auto off = block_offsets(f, g);
  std::size_t ncols = off.back();
  std::size_t nrows = 0;
  for (const auto& e : f.edges) nrows += g.dims[e.dst] * f.dims[e.src];

  // One block row per edge: X_dst A_f - A_g X_src = 0, vectorized via
  // vec(X A) = (A^T (x) I) vec(X) and vec(B X) = (I (x) B) vec(X).
  Matrix sys(nrows, ncols);
  std::size_t row = 0;
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    const auto& ef = f.edges[e];
    const auto& eg = g.edges[e];
    Matrix lhs = ef.map.transpose().kron(Matrix::identity(g.dims[ef.dst]));
    Matrix rhs = Matrix::identity(f.dims[ef.src]).kron(eg.map);
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
      for (std::size_t j = 0; j < lhs.cols(); ++j)
        sys.at(row + i, off[ef.dst] + j) += lhs.at(i, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        sys.at(row + i, off[ef.src] + j) -= rhs.at(i, j);
    }
    row += lhs.rows();
  }

  Matrix null = sys.kernel_basis();
  std::vector<GenMorphism> basis;
  basis.reserve(null.cols());
  for (std::size_t b = 0; b < null.cols(); ++b) {
    GenMorphism m;
    m.maps.reserve(f.dims.size());
    for (std::size_t v = 0; v < f.dims.size(); ++v) {
      Matrix x(g.dims[v], f.dims[v]);
      for (std::size_t j = 0; j < f.dims[v]; ++j)
        for (std::size_t i = 0; i < g.dims[v]; ++i)
          x.at(i, j) = null.at(off[v] + j * g.dims[v] + i, b);
      m.maps.push_back(std::move(x));
    }
    basis.push_back(std::move(m));
  }
  return basis;
}

std::size_t hom_dim(const GenRep& f, const GenRep& g) { return hom_basis(f, g).size(); }

SubQuotient kernel(const GenRep& f, const GenRep& g, const GenMorphism& phi) {
  SubQuotient k;
  k.rep.dims.resize(f.dims.size());
  k.map.maps.resize(f.dims.size());
  for (std::size_t v = 0; v < f.dims.size(); ++v) {
    k.map.maps[v] = phi.maps[v].kernel_basis();
    k.rep.dims[v] = k.map.maps[v].cols();
  }
  for (const auto& e : f.edges) {
    // Induced arrow solves K_dst X = A K_src; solvable since the arrow
    // preserves vertexwise kernels.
    auto x = k.map.maps[e.dst].solve(e.map * k.map.maps[e.src]);
    if (!x) throw std::logic_error("kernel: arrow does not preserve kernels");
    k.rep.edges.push_back({e.src, e.dst, *x});
  }
  return k;
}

SubQuotient cokernel(const GenRep& f, const GenRep& g, const GenMorphism& phi) {
  SubQuotient c;
  c.rep.dims.resize(g.dims.size());
  c.map.maps.resize(g.dims.size());
  for (std::size_t v = 0; v < g.dims.size(); ++v) {
    // Rows spanning the left annihilator of im(phi_v) give the projection.
    c.map.maps[v] = phi.maps[v].transpose().kernel_basis().transpose();
    c.rep.dims[v] = c.map.maps[v].rows();
  }
  for (const auto& e : g.edges) {
    // Induced arrow Y solves Y P_src = P_dst A, i.e. P_src^T Y^T = (P_dst A)^T.
    auto yt = c.map.maps[e.src].transpose().solve((c.map.maps[e.dst] * e.map).transpose());
    if (!yt) throw std::logic_error("cokernel: arrow does not descend");
    c.rep.edges.push_back({e.src, e.dst, yt->transpose()});
  }
  return c;
}

SubQuotient image(const GenRep& f, const GenRep& g, const GenMorphism& phi) {
  SubQuotient im;
  im.rep.dims.resize(g.dims.size());
  im.map.maps.resize(g.dims.size());
  for (std::size_t v = 0; v < g.dims.size(); ++v) {
    im.map.maps[v] = phi.maps[v].image_basis();
    im.rep.dims[v] = im.map.maps[v].cols();
  }
  for (const auto& e : g.edges) {
    auto x = im.map.maps[e.dst].solve(e.map * im.map.maps[e.src]);
    if (!x) throw std::logic_error("image: arrow does not preserve images");
    im.rep.edges.push_back({e.src, e.dst, *x});
  }
  return im;
}

GenRep direct_sum(const GenRep& f, const GenRep& g) {
  if (!same_shape(f, g)) throw std::invalid_argument("direct_sum: shape mismatch");
  GenRep s;
  s.dims.resize(f.dims.size());
  for (std::size_t v = 0; v < f.dims.size(); ++v) s.dims[v] = f.dims[v] + g.dims[v];
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    const auto& ef = f.edges[e];
    const auto& eg = g.edges[e];
    Matrix m(s.dims[ef.dst], s.dims[ef.src]);
    for (std::size_t i = 0; i < ef.map.rows(); ++i)
      for (std::size_t j = 0; j < ef.map.cols(); ++j) m.at(i, j) = ef.map.at(i, j);
    for (std::size_t i = 0; i < eg.map.rows(); ++i)
      for (std::size_t j = 0; j < eg.map.cols(); ++j)
        m.at(f.dims[ef.dst] + i, f.dims[ef.src] + j) = eg.map.at(i, j);
    s.edges.push_back({ef.src, ef.dst, std::move(m)});
  }
  return s;
}

GenRep tensor(const GenRep& f, const GenRep& g) {
  if (!same_shape(f, g)) throw std::invalid_argument("tensor: shape mismatch");
  GenRep t;
  t.dims.resize(f.dims.size());
  for (std::size_t v = 0; v < f.dims.size(); ++v) t.dims[v] = f.dims[v] * g.dims[v];
  for (std::size_t e = 0; e < f.edges.size(); ++e)
    t.edges.push_back({f.edges[e].src, f.edges[e].dst, f.edges[e].map.kron(g.edges[e].map)});
  return t;
}

}  // namespace shv
