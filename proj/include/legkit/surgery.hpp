#pragma once

// Contact (+1/-1)-surgery diagrams and the characteristic numbers of the
// 4-manifold they present: linking matrix, H1 of the surgered 3-manifold,
// signature, Euler characteristic, the Hopf invariant of the induced 2-plane
// field, and the induced spin-c class on the boundary.  All arithmetic exact.

#include "legkit/front.hpp"
#include "legkit/intmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace legkit {

/// Oriented front whose components carry contact coefficients +1 or -1.
struct ContactSurgeryDiagram {
    OrientedFront front;
    std::vector<int> coefficients;  // per component, +1 or -1
    std::vector<std::string> labels;

    int n_components() const { return front.cm.n_components; }

    static ContactSurgeryDiagram make(const OrientedFront& f, std::vector<int> coeffs,
                                      std::vector<std::string> names = {}) {
        if (static_cast<int>(coeffs.size()) != f.cm.n_components)
            throw validation_error("need exactly one contact coefficient per component");
        for (int c : coeffs)
            if (c != 1 && c != -1)
                throw validation_error("contact coefficients must be +1 or -1");
        if (names.empty())
            for (size_t i = 0; i < coeffs.size(); ++i)
                names.push_back("K" + std::to_string(i));
        if (names.size() != coeffs.size())
            throw validation_error("need exactly one label per component");
        return {f, std::move(coeffs), std::move(names)};
    }
};

/// Smooth surgery coefficient of component i: tb(i) + contact coefficient.
inline int smooth_coefficient(const ContactSurgeryDiagram& d, int i) {
    return tb(d.front, i) + d.coefficients[i];
}

/// Number of (+1)-surgeries in the diagram.
inline int plus_one_count(const ContactSurgeryDiagram& d) {
    int q = 0;
    for (int c : d.coefficients) q += (c == 1);
    return q;
}

/// Rotation vector (rot of each component).
inline std::vector<Int> rotation_vector(const ContactSurgeryDiagram& d) {
    std::vector<Int> r;
    for (int i = 0; i < d.n_components(); ++i) r.push_back(rot(d.front, i));
    return r;
}

/// Symmetric linking matrix: diagonal = smooth coefficients, off-diagonal =
/// linking numbers read off the front.
inline IntMatrix linking_matrix(const ContactSurgeryDiagram& d) {
    const int m = d.n_components();
    IntMatrix M(m, m);
    for (int i = 0; i < m; ++i) {
        M(i, i) = smooth_coefficient(d, i);
        for (int j = i + 1; j < m; ++j) M(i, j) = M(j, i) = lk(d.front, i, j);
    }
    return M;
}

/// H1 of the surgered 3-manifold: cokernel of the linking matrix.
inline AbelianGroup first_homology(const ContactSurgeryDiagram& d) {
    return homology(linking_matrix(d));
}

/// Characteristic numbers of the 4-manifold X presented by the diagram.
/// c_squared and hopf are empty when the induced spin-c structure is not
/// torsion (the rotation vector then misses the image of the linking matrix).
struct SurgeryProfile {
    IntMatrix linking;
    AbelianGroup h1;
    int sigma = 0;
    int chi = 1;
    int q = 0;
    std::optional<Rat> c_squared;
    std::optional<Rat> hopf;
    std::optional<Rat> chat_degree;
};

/// h = (c^2 - 3 sigma(X) - 2 chi(X) + 2)/4 + q with c the class evaluating
/// rot on each handle, X the 4-manifold of the diagram, q the +1-count;
/// the hat contact class of a torsion structure sits in degree -h.
inline SurgeryProfile surgery_profile(const ContactSurgeryDiagram& d) {
    const int m = d.n_components();
    SurgeryProfile out;
    out.linking = linking_matrix(d);
    out.h1 = homology(out.linking);
    out.sigma = symmetric_inertia(out.linking).signature();
    out.chi = 1 + m;
    out.q = plus_one_count(d);
    std::vector<Int> r = rotation_vector(d);
    if (auto x = solve_rational(out.linking, r)) {
        Rat c2 = 0;  // c^2 = x^T M x = x^T r for any rational solution
        for (int i = 0; i < m; ++i) c2 += (*x)[i] * Rat(r[i]);
        out.c_squared = c2;
        out.hopf = (c2 - 3 * out.sigma - 2 * out.chi + 2) / 4 + out.q;
        out.chat_degree = -*out.hopf;
    }
    return out;
}

/// Hopf invariant of the surgered contact structure's 2-plane field, or
/// nullopt when the induced spin-c structure is not torsion (h undefined).
inline std::optional<Rat> hopf_invariant(const ContactSurgeryDiagram& d) {
    return surgery_profile(d).hopf;
}

/// Degree in which the hat contact class must sit: -h.  Nullopt passes through.
inline std::optional<Rat> expected_chat_degree(const ContactSurgeryDiagram& d) {
    auto h = hopf_invariant(d);
    if (!h) return std::nullopt;
    return -*h;
}

/// The spin-c structure induced on the surgered 3-manifold, presented as the
/// class of the rotation vector among characteristic covectors modulo twice
/// the image of the linking matrix.  Distinct classes mean distinct spin-c
/// structures (the first Chern class is this class read modulo the image).
struct SpinCClass {
    std::vector<Int> residue;  // coordinates in the Smith basis
    std::vector<Int> modulus;  // per coordinate: 2*d_i, 0 for free directions
    friend bool operator==(const SpinCClass&, const SpinCClass&) = default;
};

inline SpinCClass c1_class(const ContactSurgeryDiagram& d) {
    IntMatrix M = linking_matrix(d);
    std::vector<Int> r = rotation_vector(d);
    auto s = smith_normal_form(M);
    const int m = M.rows;
    SpinCClass out;
    out.residue.resize(m);
    out.modulus.resize(m);
    for (int i = 0; i < m; ++i) {
        Int ur = 0;
        for (int j = 0; j < m; ++j) ur += s.u(i, j) * r[j];
        Int mod = 2 * s.d(i, i);
        if (mod == 0) {
            out.residue[i] = ur;
            out.modulus[i] = 0;
        } else {
            Int v = ur % mod;
            if (v < 0) v += mod;
            out.residue[i] = v;
            out.modulus[i] = mod;
        }
    }
    return out;
}

inline std::string to_string(const SpinCClass& c) {
    std::string out = "(";
    for (size_t i = 0; i < c.residue.size(); ++i) {
        if (i) out += ", ";
        out += c.residue[i].str();
        if (c.modulus[i] != 0) out += " mod " + c.modulus[i].str();
    }
    return out + ")";
}

/// Append a cancelling pair to the diagram: a push-off K of component `comp`
/// surgered with `coeff`, followed by a push-off of K with `-coeff`.  The
/// contact manifold is unchanged, so every homotopy invariant must agree.
inline ContactSurgeryDiagram with_cancelling_pair(const ContactSurgeryDiagram& d, int comp,
                                                  int coeff) {
    // push-off component ids: the copy is born right after the original
    FrontWord w1 = pushoff(d.front.word, comp);
    int k_id = comp + 1;
    FrontWord w2 = pushoff(w1, k_id);
    int k2_id = k_id + 1;
    std::vector<int> coeffs = d.coefficients;
    coeffs.insert(coeffs.begin() + k_id, coeff);
    coeffs.insert(coeffs.begin() + k2_id, -coeff);
    std::vector<std::string> labels = d.labels;
    labels.insert(labels.begin() + k_id, labels[comp] + "'");
    labels.insert(labels.begin() + k2_id, labels[comp] + "''");
    return ContactSurgeryDiagram::make(orient(w2), std::move(coeffs), std::move(labels));
}

}  // namespace legkit
