#pragma once

#include <stdexcept>
#include <vector>

#include "sfh/rational.hpp"

namespace sfh {

// Dense matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, std::vector<Rat>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[r][c]; }
    const Rat& at(int r, int c) const { return data_[r][c]; }
    std::vector<Rat>& row(int r) { return data_[r]; }
    const std::vector<Rat>& row(int r) const { return data_[r]; }

    void append_row(const std::vector<Rat>& row) {
        if ((int)row.size() != cols_) throw std::invalid_argument("RatMatrix: bad row length");
        data_.push_back(row);
        rows_++;
    }

private:
    int rows_, cols_;
    std::vector<std::vector<Rat>> data_;
};

// Exact rank by Gauss-Jordan elimination with first-nonzero pivoting.
inline int rational_rank(RatMatrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); c++) {
        int piv = -1;
        for (int r = rank; r < m.rows(); r++)
            if (!m.at(r, c).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m.row(rank), m.row(piv));
        Rat inv = Rat(1) / m.at(rank, c);
        for (int cc = c; cc < m.cols(); cc++) m.at(rank, cc) *= inv;
        for (int r = 0; r < m.rows(); r++) {
            if (r == rank || m.at(r, c).is_zero()) continue;
            Rat f = m.at(r, c);
            for (int cc = c; cc < m.cols(); cc++)
                m.at(r, cc) -= f * m.at(rank, cc);
        }
        rank++;
    }
    return rank;
}

} // namespace sfh
