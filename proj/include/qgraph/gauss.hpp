#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgraph {

// Gaussian integer a + b*i. All state-vector arithmetic in this project is
// exact: graph-state amplitudes, Pauli images and local Clifford factors stay
// inside Z[i] times a power of 1/sqrt(2), so no floating point is needed.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    GaussInt() = default;
    GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    static GaussInt i_pow(int e) {
        switch (((e % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt conj() const { return {re, -im}; }

    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt& operator+=(GaussInt o) { re += o.re; im += o.im; return *this; }
    GaussInt& operator-=(GaussInt o) { re -= o.re; im -= o.im; return *this; }

    friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(GaussInt a, GaussInt b) { return !(a == b); }

    std::int64_t norm2() const { return re * re + im * im; }

    std::string str() const {
        return "(" + std::to_string(re) + (im >= 0 ? "+" : "") + std::to_string(im) + "i)";
    }
};

// Exact scalar g / sqrt(2)^s. Comparisons cross-multiply by powers of 2; a
// parity mismatch in s can only equate zeros (sqrt(2) is irrational).
struct ScaledGauss {
    GaussInt g;
    int s = 0;

    ScaledGauss() = default;
    ScaledGauss(GaussInt value, int sqrt2_exponent) : g(value), s(sqrt2_exponent) { reduce(); }

    bool is_zero() const { return g.is_zero(); }

    void reduce() {
        if (g.is_zero()) { s = 0; return; }
        while (s >= 2 && (g.re % 2) == 0 && (g.im % 2) == 0) {
            g.re /= 2;
            g.im /= 2;
            s -= 2;
        }
    }

    friend bool operator==(const ScaledGauss& a, const ScaledGauss& b) {
        if (a.g.is_zero() || b.g.is_zero()) return a.g.is_zero() && b.g.is_zero();
        int d = a.s - b.s;
        if (d & 1) return false;
        // equal iff a.g * 2^{(b-side shift)} == b.g * 2^{(a-side shift)}
        GaussInt ga = a.g, gb = b.g;
        if (d > 0) { for (int k = 0; k < d / 2; ++k) gb = gb + gb; }
        if (d < 0) { for (int k = 0; k < -d / 2; ++k) ga = ga + ga; }
        return ga == gb;
    }
    friend bool operator!=(const ScaledGauss& a, const ScaledGauss& b) { return !(a == b); }

    std::string str() const {
        return g.str() + (s ? "/sqrt2^" + std::to_string(s) : "");
    }
};

} // namespace qgraph
