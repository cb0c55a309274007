#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sfh {

// Dense bit-vector over GF(2), 64 bits per word.
class BitVec {
public:
    BitVec() : size_(0) {}
    explicit BitVec(int n) : size_(n), words_((n + 63) / 64, 0) {}

    int size() const { return size_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(int i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void xor_with(const BitVec& o) {
        for (size_t w = 0; w < words_.size(); w++) words_[w] ^= o.words_[w];
    }
    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    int size_;
    std::vector<uint64_t> words_;
};

// Row-major matrix over the two-element field.
class Gf2Matrix {
public:
    Gf2Matrix() : rows_(0), cols_(0) {}
    Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return data_[r].get(c); }
    void set(int r, int c, bool v) { data_[r].set(v ? c : c, v); }
    void flip(int r, int c) { data_[r].flip(c); }
    const BitVec& row(int r) const { return data_[r]; }
    BitVec& row(int r) { return data_[r]; }

    BitVec mul(const BitVec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("gf2: dimension mismatch");
        BitVec out(rows_);
        for (int r = 0; r < rows_; r++) {
            bool acc = false;
            for (int c = 0; c < cols_; c++)
                if (data_[r].get(c) && v.get(c)) acc = !acc;
            out.set(r, acc);
        }
        return out;
    }

    Gf2Matrix transposed() const {
        Gf2Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; r++)
            for (int c = 0; c < cols_; c++)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<BitVec> data_;
};

struct Gf2SolveResult {
    int rank = 0;
    // Present only if a target was supplied and the system is consistent.
    std::optional<BitVec> solution;
};

// Gaussian elimination with deterministic pivoting (pivot order = column
// order). If `target` is given, also solves m*v = target.
inline Gf2SolveResult gf2_solve(const Gf2Matrix& m,
                                const std::optional<BitVec>& target = std::nullopt) {
    if (target && target->size() != m.rows())
        throw std::invalid_argument("gf2_solve: target length must equal row count");

    int rows = m.rows(), cols = m.cols();
    // Augment with the target column so row ops carry it along.
    std::vector<BitVec> a(rows, BitVec(cols + 1));
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) if (m.get(r, c)) a[r].set(c, true);
        if (target && target->get(r)) a[r].set(cols, true);
    }

    std::vector<int> pivot_row_of_col(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; c++) {
        int piv = -1;
        for (int r = rank; r < rows; r++)
            if (a[r].get(c)) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = 0; r < rows; r++)
            if (r != rank && a[r].get(c)) a[r].xor_with(a[rank]);
        pivot_row_of_col[c] = rank;
        rank++;
    }

    Gf2SolveResult res;
    res.rank = rank;
    if (target) {
        bool consistent = true;
        for (int r = rank; r < rows; r++)
            if (a[r].get(cols)) { consistent = false; break; }
        if (consistent) {
            BitVec v(cols);
            for (int c = 0; c < cols; c++) {
                int pr = pivot_row_of_col[c];
                if (pr >= 0 && a[pr].get(cols)) v.set(c, true);
            }
            res.solution = v;
        }
    }
    return res;
}

inline int gf2_rank(const Gf2Matrix& m) { return gf2_solve(m).rank; }

} // namespace sfh
