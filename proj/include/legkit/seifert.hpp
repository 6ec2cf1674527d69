#pragma once

// Seifert-matrix algebra for the genus-1 twist-knot family: Alexander
// polynomial via det(V - t V^T), signature of V + V^T by exact congruence, and
// the HF+ shape of the corresponding 0-surgeries.

#include "legkit/hfmod.hpp"
#include "legkit/intmat.hpp"

#include <map>
#include <utility>

namespace legkit {

/// Integer Seifert pairing matrix; valid when V - V^T is unimodular (and the
/// size is even, 0 allowed for the unknot).
struct SeifertMatrix {
    IntMatrix v;

    explicit SeifertMatrix(IntMatrix m) : v(std::move(m)) {
        if (!v.is_square()) throw validation_error("Seifert matrix must be square");
        if (v.rows % 2 != 0) throw validation_error("Seifert matrix must have even size");
        IntMatrix skew = v;
        for (int i = 0; i < v.rows; ++i)
            for (int j = 0; j < v.cols; ++j) skew(i, j) = v(i, j) - v(j, i);
        Int d = determinant(skew);
        if (d != 1 && d != -1)
            throw validation_error("V - V^T must be unimodular for a Seifert matrix");
    }
    int size() const { return v.rows; }
    int genus() const { return v.rows / 2; }
};

/// Seifert matrix of the k-th twist knot (n = 2k negative half-twists):
/// [[-k, k-1], [k, -k]].
inline SeifertMatrix twist_knot_seifert(const Int& k) {
    if (k < 1) throw validation_error("twist_knot_seifert needs k >= 1");
    IntMatrix m(2, 2);
    m(0, 0) = -k;
    m(0, 1) = k - 1;
    m(1, 0) = k;
    m(1, 1) = -k;
    return SeifertMatrix(std::move(m));
}

/// Laurent polynomial in one variable with integer coefficients.
struct LaurentPoly {
    std::map<int, Int> coeff;  // degree -> coefficient, no zero entries

    Int at(int d) const {
        auto it = coeff.find(d);
        return it == coeff.end() ? Int(0) : it->second;
    }
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [d, c] : coeff) s += c;
        return s;
    }
    Int eval_at_minus_one() const {
        Int s = 0;
        for (const auto& [d, c] : coeff) s += (d % 2 == 0 ? c : -c);
        return s;
    }
    bool symmetric() const {
        for (const auto& [d, c] : coeff)
            if (at(-d) != c) return false;
        return true;
    }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

inline std::string to_string(const LaurentPoly& p) {
    if (p.coeff.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : p.coeff) {
        if (!out.empty()) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Int a = abs(c);
        std::string term;
        if (a != 1 || d == 0) term += a.str();
        if (d != 0) {
            if (!term.empty()) term += "*";
            term += "t";
            if (d != 1) term += "^" + std::to_string(d);
        }
        out += term;
    }
    return out;
}

namespace detail {

// dense polynomial (index = degree), small sizes only
using Poly = std::vector<Int>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Poly poly_sub(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// determinant of a polynomial matrix by cofactor expansion (2g <= 6 here)
inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const size_t n = m.size();
    if (n == 0) return {Int(1)};
    if (n == 1) return m[0][0];
    Poly det;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][j], poly_det(minor));
        if (j % 2 == 0) {
            if (term.size() > det.size()) det.resize(term.size());
            for (size_t i = 0; i < term.size(); ++i) det[i] += term[i];
        } else {
            det = poly_sub(std::move(det), term);
        }
    }
    return det;
}

}  // namespace detail

/// Alexander polynomial det(V - t V^T), normalized to the symmetric Laurent
/// form with positive leading coefficient (sign of Delta(1) breaks ties).
/// Throws when the result fails Delta(1) = +-1.
inline LaurentPoly alexander(const SeifertMatrix& sm) {
    const int n = sm.size();
    std::vector<std::vector<detail::Poly>> m(n, std::vector<detail::Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // V - t V^T
            m[i][j] = detail::Poly{sm.v(i, j), -sm.v(j, i)};
        }
    detail::Poly det = detail::poly_det(m);
    int lo = -1, hi = -1;
    for (size_t d = 0; d < det.size(); ++d)
        if (det[d] != 0) {
            if (lo < 0) lo = static_cast<int>(d);
            hi = static_cast<int>(d);
        }
    LaurentPoly out;
    if (lo < 0) {
        if (n == 0) out.coeff[0] = 1;  // unknot
        else throw validation_error("Alexander normalization failure: zero determinant");
    } else {
        if ((lo + hi) % 2 != 0)
            throw validation_error("Alexander normalization failure: asymmetric support");
        int shift = (lo + hi) / 2;
        for (int d = lo; d <= hi; ++d)
            if (det[d] != 0) out.coeff[d - shift] = det[d];
        if (out.coeff.rbegin()->second < 0 ||
            (out.coeff.size() == 1 && out.eval_at_one() < 0))
            for (auto& [d, c] : out.coeff) c = -c;
    }
    if (!out.symmetric())
        throw validation_error("Alexander normalization failure: not symmetric");
    Int d1 = out.eval_at_one();
    if (d1 != 1 && d1 != -1)
        throw validation_error("Alexander normalization failure: Delta(1) != +-1");
    return out;
}

/// Inertia of the symmetrized pairing V + V^T (zero eigenvalues reported
/// separately in the result).
inline Inertia symmetrized_inertia(const SeifertMatrix& sm) {
    IntMatrix s(sm.size(), sm.size());
    for (int i = 0; i < sm.size(); ++i)
        for (int j = 0; j < sm.size(); ++j) s(i, j) = sm.v(i, j) + sm.v(j, i);
    return symmetric_inertia(s);
}

/// Knot signature: signature of V + V^T.
inline int signature(const SeifertMatrix& sm) { return symmetrized_inertia(sm).signature(); }

/// Exact eigenvalues of a symmetric 2x2 integer matrix when they are integers
/// (the discriminant is a perfect square), smallest first.
inline std::optional<std::pair<Int, Int>> symmetric_2x2_eigenvalues(const IntMatrix& m) {
    if (m.rows != 2 || !m.is_symmetric()) throw validation_error("need a symmetric 2x2 matrix");
    Int tr = m(0, 0) + m(1, 1);
    Int disc = (m(0, 0) - m(1, 1)) * (m(0, 0) - m(1, 1)) + 4 * m(0, 1) * m(0, 1);
    Int r = sqrt(disc);
    if (r * r != disc) return std::nullopt;
    return std::make_pair((tr - r) / 2, (tr + r) / 2);
}

/// HF+ of the 0-surgery on the n-twist knot (torsion spin-c structure) and of
/// its orientation reverse, n even and >= 2:
///   first  = T+(-1/2) + T+(-3/2) + Z^(n/2-1) in degree -3/2
///   second = T+(1/2)  + T+(3/2)  + Z^(n/2-1) in degree 1/2
/// The two are exchanged by dual().
inline std::pair<GradedModule, GradedModule> twist_zero_surgery_hf(int n) {
    if (n < 2 || n % 2 != 0)
        throw validation_error("twist_zero_surgery_hf needs an even n >= 2");
    GradedModule pos, neg;
    pos.add_tower(Rat(-1, 2)).add_tower(Rat(-3, 2)).add_free(Rat(-3, 2), n / 2 - 1);
    neg.add_tower(Rat(1, 2)).add_tower(Rat(3, 2)).add_free(Rat(1, 2), n / 2 - 1);
    return {pos, neg};
}

}  // namespace legkit
