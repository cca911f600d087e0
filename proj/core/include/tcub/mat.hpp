#pragma once

#include <array>

#include "tcub/field.hpp"

namespace tcub {

// Tiny fixed-size matrix over Fq.
template <int N>
struct Mat {
    std::array<std::array<Fq, N>, N> a;

    static Mat zero(const Field& f) {
        Mat m;
        for (auto& row : m.a) row.fill(f.zero());
        return m;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                Fq acc = x.a[i][0] * y.a[0][j];
                for (int l = 1; l < N; ++l) acc += x.a[i][l] * y.a[l][j];
                r.a[i][j] = acc;
            }
        return r;
    }

    std::array<Fq, N> operator*(const std::array<Fq, N>& v) const {
        std::array<Fq, N> r;
        for (int i = 0; i < N; ++i) {
            Fq acc = a[i][0] * v[0];
            for (int l = 1; l < N; ++l) acc += a[i][l] * v[l];
            r[i] = acc;
        }
        return r;
    }

    Mat scaled(Fq s) const {
        Mat r = *this;
        for (auto& row : r.a)
            for (auto& e : row) e = e * s;
        return r;
    }

    Mat transposed() const {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.a[j][i] = a[i][j];
        return r;
    }

    friend bool operator==(const Mat& x, const Mat& y) { return x.a == y.a; }
};

inline Fq det(const Mat<2>& m) { return m.a[0][0] * m.a[1][1] - m.a[0][1] * m.a[1][0]; }

inline Fq det(const Mat<3>& m) {
    return m.a[0][0] * (m.a[1][1] * m.a[2][2] - m.a[1][2] * m.a[2][1])
         - m.a[0][1] * (m.a[1][0] * m.a[2][2] - m.a[1][2] * m.a[2][0])
         + m.a[0][2] * (m.a[1][0] * m.a[2][1] - m.a[1][1] * m.a[2][0]);
}

} // namespace tcub
