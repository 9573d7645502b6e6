#include "seqcm/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace seqcm {

namespace {

using boost::multiprecision::cpp_int;

// Fraction-free elimination: after step k every entry is a (k+1)-minor of the
// input, so dividing by the previous pivot is exact and entries stay integral.
// Works on int64 first and reports overflow so the caller can retry with
// arbitrary precision.
bool bareiss_rank_i64(const SignMatrix& mat, int& rank_out) {
    const int rows = mat.rows(), cols = mat.cols();
    std::vector<std::int64_t> a(std::size_t(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[std::size_t(r) * cols + c] = mat.at(r, c);

    auto at = [&](int r, int c) -> std::int64_t& { return a[std::size_t(r) * cols + c]; };
    std::int64_t prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                std::int64_t t1, t2, num;
                if (__builtin_mul_overflow(at(i, j), at(r, c), &t1) ||
                    __builtin_mul_overflow(at(i, c), at(r, j), &t2) ||
                    __builtin_sub_overflow(t1, t2, &num))
                    return false;
                at(i, j) = num / prev;
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    rank_out = r;
    return true;
}

int bareiss_rank_big(const SignMatrix& mat) {
    const int rows = mat.rows(), cols = mat.cols();
    std::vector<cpp_int> a(std::size_t(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[std::size_t(r) * cols + c] = mat.at(r, c);

    auto at = [&](int r, int c) -> cpp_int& { return a[std::size_t(r) * cols + c]; };
    cpp_int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                at(i, j) = (at(i, j) * at(r, c) - at(i, c) * at(r, j)) / prev;
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

int modular_rank(const SignMatrix& mat, std::uint64_t p) {
    const int rows = mat.rows(), cols = mat.cols();
    std::vector<std::uint64_t> a(std::size_t(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = mat.at(r, c);
            a[std::size_t(r) * cols + c] = v >= 0 ? std::uint64_t(v) : p - 1;
        }

    auto at = [&](int r, int c) -> std::uint64_t& { return a[std::size_t(r) * cols + c]; };
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
        // Inverse of the pivot by Fermat; p <= 2^16 keeps products in range.
        std::uint64_t inv = 1, base = at(r, c) % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int i = r + 1; i < rows; ++i) {
            std::uint64_t f = at(i, c) * inv % p;
            if (f == 0) continue;
            for (int j = c; j < cols; ++j) at(i, j) = (at(i, j) + (p - f) * at(r, j)) % p;
        }
        ++r;
    }
    return r;
}

} // namespace

int rank(const SignMatrix& mat, const FieldSpec& field) {
    if (mat.rows() == 0 || mat.cols() == 0) return 0;
    if (!field.is_rational()) return modular_rank(mat, std::uint64_t(field.characteristic));
    int r = 0;
    if (bareiss_rank_i64(mat, r)) return r;
    return bareiss_rank_big(mat);
}

ChainComplex::ChainComplex(std::vector<int> dims, std::vector<SignMatrix> diffs)
    : dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (diffs_.size() + 1 != dims_.size() && !(dims_.empty() && diffs_.empty()))
        throw InputError("chain complex needs one differential between consecutive components");
    for (std::size_t i = 0; i < diffs_.size(); ++i)
        if (diffs_[i].rows() != dims_[i + 1] || diffs_[i].cols() != dims_[i])
            throw InputError("chain complex differential has mismatched shape");
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
        const SignMatrix& d0 = diffs_[i];
        const SignMatrix& d1 = diffs_[i + 1];
        for (int r = 0; r < d1.rows(); ++r)
            for (int c = 0; c < d0.cols(); ++c) {
                long acc = 0;
                for (int k = 0; k < d0.rows(); ++k) acc += long(d1.at(r, k)) * d0.at(k, c);
                if (acc != 0) throw InputError("chain complex differentials do not compose to zero");
            }
    }
}

std::vector<int> cohomology_dims(const ChainComplex& complex, const FieldSpec& field) {
    const std::vector<int>& dims = complex.dims();
    std::vector<int> ranks(complex.diffs().size(), 0);
    for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = rank(complex.diffs()[i], field);

    std::vector<int> h(dims.size(), 0);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        int r_out = i < ranks.size() ? ranks[i] : 0;
        int r_in = i > 0 ? ranks[i - 1] : 0;
        h[i] = dims[i] - r_out - r_in;
        if (h[i] < 0) throw InternalError("negative cohomology dimension");
    }

    long lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        long sign = (i % 2 == 0) ? 1 : -1;
        lhs += sign * h[i];
        rhs += sign * dims[i];
    }
    if (lhs != rhs) throw InternalError("Euler characteristic mismatch in cohomology");
    return h;
}

} // namespace seqcm
