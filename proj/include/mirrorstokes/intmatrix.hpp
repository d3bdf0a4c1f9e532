#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mirrorstokes {

/// Small dense integer matrix; covers monodromy permutations, boundary maps,
/// Stokes and Gram matrices and the braid action.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int r, int c) { return e_[r * cols_ + c]; }
    long long at(int r, int c) const { return e_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix transposed() const;
    IntMatrix negated() const;
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    bool is_zero() const;
    bool is_upper_unitriangular() const;
    bool is_permutation() const;
    /// Rank over the rationals (fraction-free elimination).
    int rank() const;
    /// Exact determinant (fraction-free); entries must stay within 64 bits,
    /// which holds for the small matrices handled here.
    long long det() const;

    std::vector<std::vector<long long>> to_rows() const;
    std::string key() const;  // bytewise key for hashing/visited sets
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<long long> e_;
};

/// Permutation of {0..n-1}; image(i) is where sheet i ends up.
struct Permutation {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    static Permutation identity(int n);
    bool is_identity() const;
    /// Matrix with entry (image(j), j) = 1: acts on basis vectors e_j.
    IntMatrix to_matrix() const;
    Permutation after(const Permutation& first) const;  // this ∘ first
    Permutation inverse() const;
    /// Cycle lengths, sorted descending.
    std::vector<int> cycle_type() const;
    /// Indices swapped by a transposition; throws when not a transposition.
    std::pair<int, int> transposition_pair() const;
    bool is_transposition() const;
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image == b.image;
    }
};

}  // namespace mirrorstokes
