#pragma once

// Jordan decomposition of invertible matrices with rational spectrum.
// Local systems on the circle are classified by these block multisets, so
// this is the normal form behind every monodromy computation.

#include "shv/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace shv {

struct JordanBlockEntry {
  Rational eigenvalue;  // nonzero
  std::size_t size = 1;
  std::size_t multiplicity = 1;

  bool operator==(const JordanBlockEntry&) const = default;
  auto operator<=>(const JordanBlockEntry&) const = default;
};

// Multiset of blocks, canonically sorted; sizes times multiplicities sum to
// the matrix dimension.
struct JordanType {
  std::vector<JordanBlockEntry> blocks;

  std::size_t total_dimension() const;
  // Block-diagonal representative conjugate to the original matrix.
  Matrix to_matrix() const;
  bool operator==(const JordanType&) const = default;
};

struct NotInvertible : std::domain_error {
  NotInvertible() : std::domain_error("jordan_blocks: matrix is not invertible") {}
};

struct SpectrumNotRational : std::domain_error {
  explicit SpectrumNotRational(const std::string& factor)
      : std::domain_error("jordan_blocks: characteristic polynomial does not split over Q; "
                          "irreducible factor " + factor),
        irreducible_factor(factor) {}
  std::string irreducible_factor;
};

// Jordan block multiset of a square invertible matrix whose characteristic
// polynomial splits over Q. Throws NotInvertible / SpectrumNotRational.
JordanType jordan_blocks(const Matrix& m);

}  // namespace shv
