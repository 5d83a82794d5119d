#pragma once

// Generic finite quiver representations over Q: vertex spaces given by their
// dimensions, arrows by matrices. All the categorical plumbing (hom spaces,
// kernels, cokernels, sums, tensor) lives here; the line/circle models are
// thin wrappers choosing a vertex layout.

#include "shv/matrix.hpp"

#include <cstddef>
#include <vector>

namespace shv {

struct GenRep {
  struct Edge {
    std::size_t src = 0;
    std::size_t dst = 0;
    Matrix map;  // dims[dst] x dims[src]
  };
  std::vector<std::size_t> dims;
  std::vector<Edge> edges;

  std::size_t total_dim() const;
  bool valid() const;
  bool is_zero() const;
};

// Vertexwise maps F -> G; both reps must share the same vertex count and the
// same edge list shape (src/dst per edge).
struct GenMorphism {
  std::vector<Matrix> maps;  // maps[v]: F.dims[v] -> G.dims[v]
};

bool same_shape(const GenRep& f, const GenRep& g);
bool commutes(const GenRep& f, const GenRep& g, const GenMorphism& phi);

GenMorphism identity_morphism(const GenRep& f);
// psi after phi, where phi: F -> G and psi: G -> H.
GenMorphism compose(const GenMorphism& psi, const GenMorphism& phi);
bool is_isomorphism(const GenRep& f, const GenRep& g, const GenMorphism& phi);
GenMorphism invert(const GenMorphism& phi);

// Basis of the space of morphisms F -> G.
std::vector<GenMorphism> hom_basis(const GenRep& f, const GenRep& g);
std::size_t hom_dim(const GenRep& f, const GenRep& g);

struct SubQuotient {
  GenRep rep;
  GenMorphism map;  // kernel: rep -> F; cokernel: G -> rep; image: rep -> G
};

SubQuotient kernel(const GenRep& f, const GenRep& g, const GenMorphism& phi);
SubQuotient cokernel(const GenRep& f, const GenRep& g, const GenMorphism& phi);
SubQuotient image(const GenRep& f, const GenRep& g, const GenMorphism& phi);

GenRep direct_sum(const GenRep& f, const GenRep& g);
// Vertexwise tensor product; edge maps are Kronecker products.
GenRep tensor(const GenRep& f, const GenRep& g);

}  // namespace shv
