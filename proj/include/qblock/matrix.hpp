#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qblock/gf.hpp"
#include "qblock/gf2kernel.hpp"

namespace qblock {

struct DimensionMismatch : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };

enum class Backend { Auto, Generic, Packed };

// Dense matrix over GF(2^e), row-major, one byte per entry.
class Mat {
  public:
    Mat() : rows_(0), cols_(0), e_(1) {}
    Mat(int rows, int cols, int e)
        : rows_(rows), cols_(cols), e_(e),
          v_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    static Mat identity(int n, int e);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int exponent() const { return e_; }

    Gf at(int r, int c) const { return Gf(e_, v_[idx(r, c)]); }
    void set(int r, int c, Gf x) {
        require_field(x);
        v_[idx(r, c)] = static_cast<std::uint8_t>(x.value());
    }
    void set(int r, int c, unsigned raw) { v_[idx(r, c)] = static_cast<std::uint8_t>(raw); }
    unsigned raw(int r, int c) const { return v_[idx(r, c)]; }

    Mat operator+(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const = default;

    Mat transpose() const;
    Mat scaled(Gf k) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    void set_block(int r0, int c0, const Mat& m);
    Mat block(int r0, int c0, int nr, int nc) const;
    Mat row(int r) const { return block(r, 0, 1, cols_); }
    Mat col(int c) const { return block(0, c, rows_, 1); }

    static Mat vstack(const Mat& a, const Mat& b);
    static Mat hstack(const Mat& a, const Mat& b);

    // Square matrix raised to the power k >= 0.
    Mat pow(unsigned k) const;
    bool is_nilpotent() const;

    std::string str() const;

  private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }
    void require_field(Gf x) const {
        if (x.exponent() != e_) throw MixedFields("matrix entry from wrong field");
    }

    int rows_, cols_, e_;
    std::vector<std::uint8_t> v_;
};

// Bit-packed GF(2) matrix, 64 columns per word.
class PackedMat {
  public:
    PackedMat() : rows_(0), cols_(0), words_(0) {}
    PackedMat(int rows, int cols)
        : rows_(rows), cols_(cols), words_((static_cast<size_t>(cols) + 63) / 64),
          w_(static_cast<size_t>(rows) * words_, 0) {}

    static PackedMat pack(const Mat& m);
    Mat unpack() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t words() const { return words_; }

    bool get(int r, int c) const {
        return (w_[wi(r) + static_cast<size_t>(c >> 6)] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool b) {
        std::uint64_t& w = w_[wi(r) + static_cast<size_t>(c >> 6)];
        const std::uint64_t m = 1ull << (c & 63);
        w = b ? (w | m) : (w & ~m);
    }

    std::uint64_t* row_ptr(int r) { return w_.data() + wi(r); }
    const std::uint64_t* row_ptr(int r) const { return w_.data() + wi(r); }

    void xor_row(int dst, int src);
    void swap_rows(int a, int b);

    PackedMat operator*(const PackedMat& o) const;
    bool operator==(const PackedMat& o) const = default;

  private:
    size_t wi(int r) const { return static_cast<size_t>(r) * words_; }

    int rows_, cols_;
    size_t words_;
    std::vector<std::uint64_t> w_;
};

struct RrefResult {
    Mat mat;
    std::vector<int> pivots;
    int rank = 0;
};

RrefResult rref(const Mat& m, Backend backend = Backend::Auto);
int rank(const Mat& m, Backend backend = Backend::Auto);

// Canonical subspace of row vectors: basis kept in reduced row echelon
// form, so equality is plain comparison.
struct Subspace {
    int ambient = 0;
    int e = 1;
    Mat basis;  // dim x ambient, rref, no zero rows

    static Subspace zero(int ambient, int e);
    static Subspace full(int ambient, int e);
    static Subspace span(const Mat& vectors, Backend backend = Backend::Auto);

    int dim() const { return basis.rows(); }
    bool operator==(const Subspace& o) const = default;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool contains(const Subspace& o) const;
    bool contains_vector(const Mat& row_vec) const;
};

// Right kernel of m: all x with m x = 0, returned as row vectors.
Subspace kernel(const Mat& m, Backend backend = Backend::Auto);

// Solve m x = rhs exactly (rhs may have several columns); nullopt if no
// solution exists.  Free variables are set to zero.
std::optional<Mat> solve(const Mat& m, const Mat& rhs, Backend backend = Backend::Auto);

}  // namespace qblock
