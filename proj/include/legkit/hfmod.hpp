#pragma once

// Bookkeeping algebra for Heegaard Floer homology shapes: towers T+_a (bottom
// degree a, U-surjective above), graded finite parts (U-nilpotent), duality,
// exact-triangle rank arithmetic, adjunction vanishing and L-space logic.
// Gradings are exact rationals; ranks are over Q, torsion is carried along but
// ignored by the rank arguments.

#include "legkit/types.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace legkit {

/// Free rank plus torsion factors sitting in a single grading.
struct GradedPiece {
    int free_rank = 0;
    std::vector<Int> torsion;  // factors >= 2, sorted, with multiplicity
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

/// Finite sum of towers plus a finitely generated graded abelian group.
struct GradedModule {
    std::map<Rat, int> towers;          // bottom degree -> multiplicity
    std::map<Rat, GradedPiece> finite;  // degree -> piece

    GradedModule& add_tower(const Rat& a, int mult = 1) {
        if (mult < 0) throw validation_error("negative tower multiplicity");
        if (mult > 0) towers[a] += mult;
        return *this;
    }
    GradedModule& add_free(const Rat& d, int rank) {
        if (rank < 0) throw validation_error("negative rank");
        if (rank > 0) finite[d].free_rank += rank;
        return *this;
    }
    GradedModule& add_torsion(const Rat& d, const Int& m, int mult = 1) {
        if (m < 2) throw validation_error("torsion factor must be >= 2");
        auto& t = finite[d].torsion;
        for (int i = 0; i < mult; ++i) t.insert(std::lower_bound(t.begin(), t.end(), m), m);
        return *this;
    }
    void normalize() {
        for (auto it = towers.begin(); it != towers.end();)
            it = it->second == 0 ? towers.erase(it) : std::next(it);
        for (auto it = finite.begin(); it != finite.end();)
            it = it->second.trivial() ? finite.erase(it) : std::next(it);
    }
    friend bool operator==(const GradedModule&, const GradedModule&) = default;
};

/// Orientation reversal: towers a -> -a, finite part degree d -> -d-1.
inline GradedModule dual(const GradedModule& m) {
    GradedModule out;
    for (const auto& [a, k] : m.towers) out.towers[-a] += k;
    for (const auto& [d, piece] : m.finite) out.finite[-d - 1] = piece;
    return out;
}

inline std::string to_string(const GradedModule& m) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    for (const auto& [a, k] : m.towers)
        for (int i = 0; i < k; ++i) {
            sep();
            os << "T(" << to_string(a) << ")";
        }
    for (const auto& [d, piece] : m.finite) {
        if (piece.free_rank > 0) {
            sep();
            os << "Z";
            if (piece.free_rank > 1) os << "^" << piece.free_rank;
            os << "(" << to_string(d) << ")";
        }
        for (size_t i = 0; i < piece.torsion.size();) {
            size_t j = i;
            while (j < piece.torsion.size() && piece.torsion[j] == piece.torsion[i]) ++j;
            sep();
            os << "Z/" << piece.torsion[i].str();
            if (j - i > 1) os << "^" << (j - i);
            os << "(" << to_string(d) << ")";
            i = j;
        }
    }
    if (first) os << "0";
    return os.str();
}

/// Parse the textual module notation: `0`, or ` + `-separated terms `T(a)`,
/// `Z^r(d)`, `Z/m^k(d)`.  Round-trips bit-exactly with to_string on
/// normalized modules.
inline GradedModule parse_module(const std::string& text) {
    GradedModule m;
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty module expression");
    if (s == "0") return m;
    size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= s.size() || s[pos] != c)
            throw parse_error("expected '" + std::string(1, c) + "' in module expression at offset " +
                              std::to_string(pos));
        ++pos;
    };
    auto read_int = [&]() -> Int {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer at offset " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    };
    auto read_rat_paren = [&]() -> Rat {
        expect('(');
        Int num = read_int();
        Int den = 1;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            den = read_int();
            if (den == 0) throw parse_error("zero denominator");
        }
        expect(')');
        return Rat(num, den);
    };
    while (true) {
        if (pos >= s.size()) throw parse_error("dangling '+' in module expression");
        if (s[pos] == 'T') {
            ++pos;
            m.add_tower(read_rat_paren());
        } else if (s[pos] == 'Z') {
            ++pos;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                Int factor = read_int();
                int mult = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    mult = static_cast<int>(read_int());
                }
                m.add_torsion(read_rat_paren(), factor, mult);
            } else {
                int rank = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    rank = static_cast<int>(read_int());
                }
                m.add_free(read_rat_paren(), rank);
            }
        } else {
            throw parse_error("unexpected character '" + std::string(1, s[pos]) +
                              "' in module expression");
        }
        if (pos == s.size()) break;
        expect('+');
    }
    m.normalize();
    return m;
}

/// Total ranks over Q of the three corners of an exact triangle A -> B -> C -> A.
struct TriangleRanks {
    long long a = 0, b = 0, c = 0;
};

class triangle_error : public validation_error {
public:
    using validation_error::validation_error;
};

/// Image ranks (x, y, z) of the maps A->B, B->C, C->A, the unique solution of
/// the exactness relations x+y = b, y+z = c, z+x = a.
struct ImageRanks {
    long long x = 0, y = 0, z = 0;
    bool zero_ab() const { return x == 0; }
    bool zero_bc() const { return y == 0; }
    bool zero_ca() const { return z == 0; }
    bool injective_ab(const TriangleRanks& t) const { return x == t.a; }
    bool injective_bc(const TriangleRanks& t) const { return y == t.b; }
    bool injective_ca(const TriangleRanks& t) const { return z == t.c; }
};

inline ImageRanks image_ranks(const TriangleRanks& t) {
    if (t.a < 0 || t.b < 0 || t.c < 0)
        throw triangle_error("InconsistentTriangle: negative rank");
    if ((t.a + t.b + t.c) % 2 != 0)
        throw triangle_error("InconsistentTriangle: odd total rank");
    long long x = (t.a + t.b - t.c) / 2;
    long long y = (t.b + t.c - t.a) / 2;
    long long z = (t.c + t.a - t.b) / 2;
    if (x < 0 || y < 0 || z < 0)
        throw triangle_error("InconsistentTriangle: triangle inequality violated");
    return {x, y, z};
}

/// A 2-handle cobordism map vanishes when it contains a closed surface of
/// genus g with self-intersection exceeding 2g-2.
inline bool adjunction_vanishes(int genus, long long self_intersection) {
    if (genus < 0) throw validation_error("negative genus");
    return self_intersection > 2LL * genus - 2;
}

/// h1_order: order of H1 (nullopt = infinite).  L-space: rational homology
/// sphere with hat-rank equal to |H1|.
inline bool is_l_space(const Int& hf_rank, const std::optional<Int>& h1_order) {
    if (!h1_order) return false;
    return hf_rank == *h1_order;
}

enum class BgrShape { SingleTower, TwoTowers, Indeterminate };

/// The tower dichotomy for torsion spin-c structures: rank 1 with b1 = 0 is
/// one tower, rank 2 with b1 = 1 is two towers, anything else undetermined.
inline BgrShape bgr_shape(const Int& hf_rank_per_spinc, int b1) {
    if (b1 != 0 && b1 != 1) throw validation_error("bgr_shape needs b1 in {0,1}");
    if (b1 == 0 && hf_rank_per_spinc == 1) return BgrShape::SingleTower;
    if (b1 == 1 && hf_rank_per_spinc == 2) return BgrShape::TwoTowers;
    return BgrShape::Indeterminate;
}

inline std::string to_string(BgrShape s) {
    switch (s) {
    case BgrShape::SingleTower: return "single tower";
    case BgrShape::TwoTowers: return "two towers";
    default: return "tower(s) + nontrivial finite part possible";
    }
}

/// Total hat-rank of the manifolds V(k) (0-framed trefoil plus (k+1)-framed
/// unknot), by the triangle induction: the cobordism attaching the
/// (k+1)-framed handle contains a torus of square k+1, so its map vanishes by
/// adjunction and the triangle splits; the third corner is the 0-surgery on
/// the trefoil, of rank 2.  Base: V(0) is S^1 x S^2, rank 2.
inline long long v_rank(int k) {
    if (k < 0) throw validation_error("v_rank needs k >= 0");
    const long long zero_surgery_rank = 2;  // rank of the 0-surgery on the trefoil
    long long r = 2;                        // V(0) = S^1 x S^2
    for (int j = 0; j < k; ++j) {
        if (!adjunction_vanishes(1, j + 1))
            throw validation_error("adjunction hypothesis failed in v_rank induction");
        // split triangle: rank V(j+1) = rank(0-surgery) + rank V(j)
        long long next = zero_surgery_rank + r;
        auto im = image_ranks({zero_surgery_rank, r, next});
        if (!im.zero_ab() || !im.injective_bc({zero_surgery_rank, r, next}))
            throw validation_error("triangle solution inconsistent in v_rank induction");
        r = next;
    }
    return r;
}

}  // namespace legkit
