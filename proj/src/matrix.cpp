#include "qblock/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qblock {

Mat Mat::identity(int n, int e) {
    Mat m(n, n, e);
    for (int i = 0; i < n; ++i) m.set(i, i, 1u);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add shape");
    if (e_ != o.e_) throw MixedFields("matrix add field");
    Mat r = *this;
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] ^= o.v_[i];  // char 2
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix mul shape");
    if (e_ != o.e_) throw MixedFields("matrix mul field");
    if (e_ == 1 && rows_ > 0 && cols_ > 0 && o.cols_ > 0)
        return (PackedMat::pack(*this) * PackedMat::pack(o)).unpack();
    Mat r(rows_, o.cols_, e_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Gf a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                Gf b = o.at(k, j);
                if (b.is_zero()) continue;
                r.set(i, j, r.at(i, j) + a * b);
            }
        }
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_, e_);
    for (int i = 0; i < cols_; ++i)
        for (int j = 0; j < rows_; ++j) r.set(i, j, raw(j, i));
    return r;
}

Mat Mat::scaled(Gf k) const {
    require_field(k);
    Mat r(rows_, cols_, e_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j) * k);
    return r;
}

bool Mat::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](std::uint8_t b) { return b == 0; });
}

void Mat::set_block(int r0, int c0, const Mat& m) {
    if (m.e_ != e_) throw MixedFields("set_block field");
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("set_block shape");
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j) set(r0 + i, c0 + j, m.raw(i, j));
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block shape");
    Mat r(nr, nc, e_);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r.set(i, j, raw(r0 + i, c0 + j));
    return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack cols");
    Mat r(a.rows() + b.rows(), a.cols(), a.exponent());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack rows");
    Mat r(a.rows(), a.cols() + b.cols(), a.exponent());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Mat Mat::pow(unsigned k) const {
    if (!is_square()) throw DimensionMismatch("pow of non-square");
    Mat acc = identity(rows_, e_);
    Mat base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Mat::is_nilpotent() const {
    if (!is_square()) throw DimensionMismatch("nilpotency of non-square");
    Mat p = *this;
    unsigned covered = 1;
    while (covered < static_cast<unsigned>(rows_)) {
        p = p * p;
        covered *= 2;
    }
    return p.is_zero();
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "\n";
    }
    return os.str();
}

PackedMat PackedMat::pack(const Mat& m) {
    if (m.exponent() != 1) throw MixedFields("pack requires GF(2)");
    PackedMat p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.raw(i, j)) p.set(i, j, true);
    return p;
}

Mat PackedMat::unpack() const {
    Mat m(rows_, cols_, 1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) m.set(i, j, 1u);
    return m;
}

void PackedMat::xor_row(int dst, int src) {
    gf2::kernels().row_xor(row_ptr(dst), row_ptr(src), words_);
}

void PackedMat::swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(w_.begin() + static_cast<long>(wi(a)),
                     w_.begin() + static_cast<long>(wi(a) + words_),
                     w_.begin() + static_cast<long>(wi(b)));
}

PackedMat PackedMat::operator*(const PackedMat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("packed mul shape");
    PackedMat r(rows_, o.cols_);
    const auto& k = gf2::kernels();
    for (int i = 0; i < rows_; ++i) {
        std::uint64_t* acc = r.row_ptr(i);
        const std::uint64_t* arow = row_ptr(i);
        for (size_t blk = 0; blk < words_; ++blk) {
            std::uint64_t mask = arow[blk];
            if (!mask) continue;
            const int base = static_cast<int>(blk) * 64;
            const int avail = std::min(64, o.rows_ - base);
            if (avail < 64) mask &= (avail == 64) ? ~0ull : ((1ull << avail) - 1);
            k.accumulate_rows(acc, o.row_ptr(base), o.words_, mask, o.words_);
        }
    }
    return r;
}

namespace {

struct PackedRref {
    PackedMat m;
    std::vector<int> pivots;
};

PackedRref packed_rref(PackedMat m) {
    const auto& k = gf2::kernels();
    std::vector<int> pivots;
    std::vector<std::uint8_t> select(static_cast<size_t>(m.rows()), 0);
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        for (int i = 0; i < m.rows(); ++i) select[static_cast<size_t>(i)] = (i != r && m.get(i, c));
        k.rows_xor_select(m.row_ptr(0), m.words(), static_cast<size_t>(m.rows()), select.data(),
                          m.row_ptr(r), m.words());
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

RrefResult generic_rref(Mat m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.raw(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) {
                unsigned t = m.raw(r, j);
                m.set(r, j, m.raw(piv, j));
                m.set(piv, j, t);
            }
        Gf inv = m.at(r, c).inverse();
        for (int j = 0; j < m.cols(); ++j) m.set(r, j, m.at(r, j) * inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Gf f = m.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < m.cols(); ++j) m.set(i, j, m.at(i, j) + f * m.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

bool use_packed(const Mat& m, Backend b) {
    switch (b) {
        case Backend::Generic:
            return false;
        case Backend::Packed:
            if (m.exponent() != 1) throw MixedFields("packed backend requires GF(2)");
            return true;
        case Backend::Auto:
        default:
            return m.exponent() == 1;
    }
}

}  // namespace

RrefResult rref(const Mat& m, Backend backend) {
    if (use_packed(m, backend)) {
        PackedRref pr = packed_rref(PackedMat::pack(m));
        RrefResult res;
        res.rank = static_cast<int>(pr.pivots.size());
        res.pivots = std::move(pr.pivots);
        res.mat = pr.m.unpack();
        return res;
    }
    return generic_rref(m);
}

int rank(const Mat& m, Backend backend) { return rref(m, backend).rank; }

Subspace Subspace::zero(int ambient, int e) { return Subspace{ambient, e, Mat(0, ambient, e)}; }

Subspace Subspace::full(int ambient, int e) {
    return Subspace{ambient, e, Mat::identity(ambient, e)};
}

Subspace Subspace::span(const Mat& vectors, Backend backend) {
    RrefResult rr = rref(vectors, backend);
    return Subspace{vectors.cols(), vectors.exponent(), rr.mat.block(0, 0, rr.rank, vectors.cols())};
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient != o.ambient) throw AmbientMismatch("subspace sum");
    return span(Mat::vstack(basis, o.basis));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient != o.ambient) throw AmbientMismatch("subspace intersect");
    if (dim() == 0 || o.dim() == 0) return zero(ambient, e);
    // Kernel vectors (x, z) of [A^T | B^T] give intersection elements x^T A.
    Mat m = Mat::hstack(basis.transpose(), o.basis.transpose());
    Subspace ker = kernel(m);
    Mat vecs(ker.dim(), ambient, e);
    for (int i = 0; i < ker.dim(); ++i) {
        Mat x = ker.basis.block(i, 0, 1, dim());
        vecs.set_block(i, 0, x * basis);
    }
    return span(vecs);
}

bool Subspace::contains(const Subspace& o) const {
    if (ambient != o.ambient) throw AmbientMismatch("subspace contains");
    if (o.dim() == 0) return true;
    return rank(Mat::vstack(basis, o.basis)) == dim();
}

bool Subspace::contains_vector(const Mat& row_vec) const {
    if (row_vec.cols() != ambient) throw AmbientMismatch("contains_vector");
    if (row_vec.is_zero()) return true;
    return rank(Mat::vstack(basis, row_vec)) == dim();
}

Subspace kernel(const Mat& m, Backend backend) {
    RrefResult rr = rref(m, backend);
    const int n = m.cols();
    const int e = m.exponent();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
    Mat basis(n - rr.rank, n, e);
    int row = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        basis.set(row, f, 1u);
        for (int i = 0; i < rr.rank; ++i)
            basis.set(row, rr.pivots[static_cast<size_t>(i)], rr.mat.raw(i, f));  // char 2
        ++row;
    }
    return Subspace::span(basis, backend);
}

std::optional<Mat> solve(const Mat& m, const Mat& rhs, Backend backend) {
    if (m.rows() != rhs.rows()) throw DimensionMismatch("solve row counts");
    RrefResult rr = rref(Mat::hstack(m, rhs), backend);
    const int n = m.cols();
    for (int p : rr.pivots)
        if (p >= n) return std::nullopt;
    Mat x(n, rhs.cols(), m.exponent());
    for (int i = 0; i < rr.rank; ++i) {
        const int p = rr.pivots[static_cast<size_t>(i)];
        for (int j = 0; j < rhs.cols(); ++j) x.set(p, j, rr.mat.raw(i, n + j));
    }
    return x;
}

}  // namespace qblock
