#ifndef SEQCM_LINALG_HPP
#define SEQCM_LINALG_HPP

#include <cstdint>
#include <vector>

#include "seqcm/ring.hpp"

// Exact rank computations for the small sign matrices produced by strand and
// boundary complexes.  Characteristic 0 runs fraction-free (Bareiss)
// elimination over arbitrary-precision integers; F_p uses native modular
// arithmetic.

namespace seqcm {

/// Dense matrix with entries in {-1, 0, +1}.
class SignMatrix {
public:
    SignMatrix() = default;
    SignMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] int at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
    void set(int r, int c, int v) {
        if (v < -1 || v > 1) throw InputError("sign matrix entries must be -1, 0 or +1");
        a_[std::size_t(r) * cols_ + c] = std::int8_t(v);
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int8_t> a_;
};

/// Exact rank of a sign matrix over the given field.
[[nodiscard]] int rank(const SignMatrix& mat, const FieldSpec& field);

/// Cochain complex C^0 -> C^1 -> ... with components of the given dimensions
/// and differentials d[i] : C^i -> C^(i+1) stored as (dim C^(i+1)) x (dim C^i)
/// sign matrices.  Construction checks shape compatibility and d o d = 0.
class ChainComplex {
public:
    ChainComplex(std::vector<int> dims, std::vector<SignMatrix> diffs);

    [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
    [[nodiscard]] const std::vector<SignMatrix>& diffs() const { return diffs_; }
    [[nodiscard]] int length() const { return int(dims_.size()); }

private:
    std::vector<int> dims_;
    std::vector<SignMatrix> diffs_;
};

/// Dimensions of H^i for i = 0 .. length-1.  The alternating sums of the
/// cohomology and component dimensions agree (Euler characteristic check).
[[nodiscard]] std::vector<int> cohomology_dims(const ChainComplex& complex, const FieldSpec& field);

} // namespace seqcm

#endif
