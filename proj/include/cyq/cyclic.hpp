#pragma once
// Mixed Hochschild complexes (b, B), cyclic operators t and N, Connes complexes,
// and the total complex of a mixed complex.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "koszul.hpp"
#include "linalg.hpp"

namespace cyq {

using Word = std::vector<int>;
using Chain = std::map<Word, Rational>;

inline void chain_clean(Chain& c) {
    for (auto it = c.begin(); it != c.end();) it = (it->second == 0) ? c.erase(it) : std::next(it);
}
inline void chain_add(Chain& acc, const Chain& x, const Rational& s = 1) {
    for (auto& [w, v] : x) acc[w] += s * v;
}
inline Chain apply_linear(const std::function<Chain(const Word&)>& f, const Chain& x) {
    Chain out;
    for (auto& [w, v] : x) chain_add(out, f(w), v);
    chain_clean(out);
    return out;
}

// ---------- rotations ----------

// Koszul sign of moving the first k letters to the end.
inline int rotation_sign(const std::vector<int>& sd, int k) {
    int a = 0, b = 0;
    for (int i = 0; i < static_cast<int>(sd.size()); ++i) (i < k ? a : b) += sd[i];
    return parity_sign(a * b);
}

inline Word rotated(const Word& w, int k) {
    Word r(w.begin() + k, w.end());
    r.insert(r.end(), w.begin(), w.begin() + k);
    return r;
}

// w = sign * word with word the lexicographically least rotation; sign 0 when
// the signed orbit cancels.
struct CanonicalWord {
    Word word;
    int sign = 0;
};

inline CanonicalWord canonical_rotation(const Word& w, const std::vector<int>& sd) {
    int n = static_cast<int>(w.size());
    CanonicalWord best{w, 1};
    for (int k = 1; k < n; ++k) {
        Word r = rotated(w, k);
        int s = rotation_sign(sd, k);
        if (r == w && s < 0) return {w, 0};
        if (r < best.word) best = {r, s};
    }
    return best;
}

// ---------- letter data for the two sides ----------

struct AlgebraSide {
    const GradedAlgebra& A;
    int deg(int i) const { return A.deg(i); }
    int sdeg(int i) const { return A.deg(i) + 1; }  // bar degree
    int weight(int i) const { return A.weight(i); }
    int src(int i) const { return A.sym(i).src; }
    int tgt(int i) const { return A.sym(i).tgt; }
    bool is_vertex(int i) const { return A.is_vertex(i); }
    int size() const { return A.size(); }
};

struct CoalgebraSide {
    const Coalgebra& C;
    int deg(int i) const { return C.deg(i); }
    int sdeg(int i) const { return C.deg(i) - 1; }  // cobar degree
    int weight(int i) const { return C.weight(i); }
    int src(int i) const { return C.basis[i].src; }
    int tgt(int i) const { return C.basis[i].tgt; }
    bool is_vertex(int i) const { return C.is_vertex(i); }
    int size() const { return C.size(); }
};

template <class Side>
std::vector<int> shifted_degrees(const Side& s, const Word& w) {
    std::vector<int> d;
    for (int x : w) d.push_back(s.sdeg(x));
    return d;
}

// ---------- algebra side ----------

// t(a0..an) = (-1)^{(|an|+1)(|a0|+...+|a_{n-1}|+n)} (an, a0..a_{n-1})
inline Chain cyclic_t_algebra(const GradedAlgebra& A, const Word& w) {
    if (w.empty()) throw MalformedInput("cyclic_t needs a nonempty word");
    int n = static_cast<int>(w.size()) - 1, e = n;
    for (int i = 0; i < n; ++i) e += A.deg(w[i]);
    e *= A.deg(w[n]) + 1;
    return {{rotated(w, n), Rational(parity_sign(e))}};
}

// t(c0..cn) = (-1)^{(|c0|-1)(|c1|+...+|cn|-n)} (c1..cn, c0)
inline Chain cyclic_t_coalgebra(const Coalgebra& C, const Word& w) {
    if (w.empty()) throw MalformedInput("cyclic_t needs a nonempty word");
    int n = static_cast<int>(w.size()) - 1, e = -n;
    for (int i = 1; i <= n; ++i) e += C.deg(w[i]);
    e *= C.deg(w[0]) - 1;
    return {{rotated(w, 1), Rational(parity_sign(e))}};
}

// N = 1 + t + ... + t^n
inline Chain cyclic_N(const std::function<Chain(const Word&)>& t, const Word& w) {
    Chain out, cur{{w, Rational(1)}};
    for (std::size_t k = 0; k < w.size(); ++k) {
        chain_add(out, cur);
        cur = apply_linear(t, cur);
    }
    chain_clean(out);
    return out;
}

namespace detail {
// (before..., w[i]*w[j], after...)
inline Chain product_into(const GradedAlgebra& A, const Word& w, int i, int j, const Rational& coef,
                          const Word& before, const Word& after) {
    Chain out;
    for (auto& [x, c] : A.mul(w[i], w[j])) {
        Word r = before;
        r.push_back(x);
        r.insert(r.end(), after.begin(), after.end());
        out[r] += coef * c;
    }
    return out;
}
}  // namespace detail

// b(a0 (x) [a1..an]); terms with the two product positions.
inline Chain b_algebra(const GradedAlgebra& A, const Word& w, bool with_wrap = true) {
    Chain out;
    int n = static_cast<int>(w.size()) - 1;
    if (n < 1) return out;
    // (-1)^{|a0|} a0a1 (x) [a2..an]
    chain_add(out, detail::product_into(A, w, 0, 1, parity_sign(A.deg(w[0])), {}, Word(w.begin() + 2, w.end())));
    // (-1)^{|a0|+...+|ai|+i} a0 (x) [.. ai a_{i+1} ..]
    int acc = A.deg(w[0]);
    for (int i = 1; i <= n - 1; ++i) {
        acc += A.deg(w[i]);
        chain_add(out, detail::product_into(A, w, i, i + 1, parity_sign(acc + i), Word(w.begin(), w.begin() + i),
                                            Word(w.begin() + i + 2, w.end())));
    }
    if (with_wrap) {
        // -(-1)^{(|an|+1)(|a0|+...+|a_{n-1}|+n-1)} an a0 (x) [a1..a_{n-1}]
        int e = n - 1;
        for (int i = 0; i < n; ++i) e += A.deg(w[i]);
        e *= A.deg(w[n]) + 1;
        chain_add(out, detail::product_into(A, w, n, 0, -parity_sign(e), {}, Word(w.begin() + 1, w.end() - 1)));
    }
    chain_clean(out);
    return out;
}

inline Chain b_prime_algebra(const GradedAlgebra& A, const Word& w) { return b_algebra(A, w, false); }

// B(a0 (x) [a1..an]) = sum_i (-1)^sigma 1 (x) [ai..an, a0..a_{i-1}],
// sigma = (|a0|+...+|a_{i-1}|+i)(|ai|+...+|an|+n-i+1). Normalized: zero when a0 is a unit.
inline Chain B_algebra(const GradedAlgebra& A, const Word& w) {
    Chain out;
    if (w.empty() || A.is_vertex(w[0])) return out;
    int n = static_cast<int>(w.size()) - 1;
    for (int i = 0; i <= n; ++i) {
        int l = i, r = n - i + 1;
        for (int k = 0; k < i; ++k) l += A.deg(w[k]);
        for (int k = i; k <= n; ++k) r += A.deg(w[k]);
        Word nw{A.units().at(A.sym(w[i]).src)};
        Word rot = rotated(w, i);
        nw.insert(nw.end(), rot.begin(), rot.end());
        out[nw] += parity_sign(l * r);
    }
    chain_clean(out);
    return out;
}

// ---------- coalgebra side ----------

// b(c0 (x) [c1..cn]). normalized: bracket slots only receive non-vertex factors
// (the complex C (x) Omega(C)); otherwise the full coproduct is used (Connes complex).
inline Chain b_coalgebra(const Coalgebra& C, const Word& w, bool normalized, bool with_wrap = true) {
    Chain out;
    int n = static_cast<int>(w.size()) - 1;
    Word rest(w.begin() + 1, w.end());
    // (-1)^{|c0'|} c0' (x) [c0'', c1..]
    for (auto& t : C.delta[w[0]]) {
        if (normalized && C.is_vertex(t.r)) continue;
        Word nw{t.l, t.r};
        nw.insert(nw.end(), rest.begin(), rest.end());
        out[nw] += t.c * parity_sign(C.deg(t.l));
    }
    // (-1)^{|c0|+...+|c_{i-1}|+|ci'|-i} c0 (x) [.. ci', ci'' ..]
    int acc = C.deg(w[0]);
    for (int i = 1; i <= n; ++i) {
        for (auto& t : C.delta[w[i]]) {
            if (normalized && (C.is_vertex(t.l) || C.is_vertex(t.r))) continue;
            Word nw(w.begin(), w.begin() + i);
            nw.push_back(t.l);
            nw.push_back(t.r);
            nw.insert(nw.end(), w.begin() + i + 1, w.end());
            out[nw] += t.c * parity_sign(acc + C.deg(t.l) - i);
        }
        acc += C.deg(w[i]);
    }
    if (with_wrap) {
        // -(-1)^{(|c0'|-1)(|c0''|+|c1|+...+|cn|-n)} c0'' (x) [c1..cn, c0']
        int tail = -n;
        for (int i = 1; i <= n; ++i) tail += C.deg(w[i]);
        for (auto& t : C.delta[w[0]]) {
            if (normalized && C.is_vertex(t.l)) continue;
            Word nw{t.r};
            nw.insert(nw.end(), rest.begin(), rest.end());
            nw.push_back(t.l);
            out[nw] -= t.c * parity_sign((C.deg(t.l) - 1) * (C.deg(t.r) + tail));
        }
    }
    chain_clean(out);
    return out;
}

inline Chain b_prime_coalgebra(const Coalgebra& C, const Word& w) { return b_coalgebra(C, w, false, false); }

// B(c0 (x) [c1..cn]) = sum_i (-1)^nu eps(c0) ci (x) [c_{i+1}..cn, c1..c_{i-1}],
// nu = (|c1|+...+|c_{i-1}|-(i-1))(|ci|+...+|cn|-(n-i+1)).
inline Chain B_coalgebra(const Coalgebra& C, const Word& w) {
    Chain out;
    int n = static_cast<int>(w.size()) - 1;
    Rational e = C.counit[w[0]];
    if (e == 0) return out;
    for (int i = 1; i <= n; ++i) {
        int l = -(i - 1), r = -(n - i + 1);
        for (int k = 1; k < i; ++k) l += C.deg(w[k]);
        for (int k = i; k <= n; ++k) r += C.deg(w[k]);
        Word nw;
        for (int k = i; k <= n; ++k) nw.push_back(w[k]);
        for (int k = 1; k < i; ++k) nw.push_back(w[k]);
        out[nw] += e * parity_sign(l * r);
    }
    chain_clean(out);
    return out;
}

// ---------- word enumeration ----------

// Cyclically composable words of the given length and total weight; slot 0 from
// first, other slots from rest.
template <class Side>
std::vector<Word> cyclic_words(const Side& s, int length, int weight, const std::vector<int>& first,
                               const std::vector<int>& rest) {
    std::vector<Word> out;
    Word cur;
    std::function<void(int)> go = [&](int wsum) {
        int k = static_cast<int>(cur.size());
        if (k == length) {
            if (wsum == weight && s.tgt(cur.back()) == s.src(cur.front())) out.push_back(cur);
            return;
        }
        const auto& pool = k == 0 ? first : rest;
        for (int x : pool) {
            if (wsum + s.weight(x) > weight) continue;
            if (k > 0 && s.tgt(cur.back()) != s.src(x)) continue;
            cur.push_back(x);
            go(wsum + s.weight(x));
            cur.pop_back();
        }
    };
    if (length > 0) go(0);
    return out;
}

// ---------- complexes ----------

// Chain groups indexed by an integer grade; d.at(k) maps grade k to grade k + step.
struct Complex {
    int step = -1;
    std::map<int, std::vector<Word>> basis;
    std::map<int, SparseMatrix> d;
    std::map<int, std::vector<int>> tag;  // optional per-basis auxiliary label (e.g. column of a total complex)

    int dim(int k) const {
        auto it = basis.find(k);
        return it == basis.end() ? 0 : static_cast<int>(it->second.size());
    }
    const SparseMatrix* out_of(int k) const {
        auto it = d.find(k);
        return it == d.end() ? nullptr : &it->second;
    }
    const SparseMatrix* into(int k) const { return out_of(k - step); }

    // Consecutive differentials compose to zero.
    bool squares_to_zero() const {
        for (auto& [k, m] : d) {
            auto nx = d.find(k + step);
            if (nx == d.end()) continue;
            if (!multiply(nx->second, m).is_zero()) return false;
        }
        return true;
    }
};

struct HomologyTable {
    std::map<int, int> betti;
    std::map<int, std::vector<SparseVec>> representatives;
};

// Homology at every grade in [lo, hi]; grades outside the stored range count as zero.
inline HomologyTable homology(const Complex& c, int lo, int hi, bool with_representatives = false) {
    HomologyTable h;
    for (int k = lo; k <= hi; ++k) {
        int n = c.dim(k);
        if (n == 0) {
            h.betti[k] = 0;
            continue;
        }
        const SparseMatrix* din = c.into(k);
        const SparseMatrix* dout = c.out_of(k);
        h.betti[k] = homology_dim(n, din, dout);
        if (with_representatives) h.representatives[k] = homology_representatives(n, din, dout);
    }
    return h;
}

namespace detail {

template <class Side>
std::vector<int> all_letters(const Side& s) {
    std::vector<int> v(s.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
}
template <class Side>
std::vector<int> reduced_letters(const Side& s) {
    std::vector<int> v;
    for (int i = 0; i < s.size(); ++i)
        if (!s.is_vertex(i)) v.push_back(i);
    return v;
}

// Canonical representatives of signed-rotation orbits among words, sorted.
template <class Side>
std::vector<Word> necklace_basis(const Side& s, const std::vector<Word>& words) {
    std::set<Word> seen;
    for (auto& w : words) {
        auto cw = canonical_rotation(w, shifted_degrees(s, w));
        if (cw.sign != 0) seen.insert(cw.word);
    }
    return std::vector<Word>(seen.begin(), seen.end());
}

inline void shuffle_basis(std::vector<Word>& b, std::mt19937* rng) {
    if (rng) std::shuffle(b.begin(), b.end(), *rng);
}

inline std::map<Word, int> index_of(const std::vector<Word>& b) {
    std::map<Word, int> m;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) m[b[i]] = i;
    return m;
}

}  // namespace detail

// Connes complex of an algebra: A^{(x) n+1}/(1 - t), grade n, differential b (step -1).
// Grades 0..n_max+1 are built so that homology is exact for n <= n_max.
inline Complex connes_complex_algebra(const GradedAlgebra& A, int weight, int n_max, std::mt19937* shuffle = nullptr) {
    if (weight > A.max_weight()) throw InvariantViolation("truncation exceeded");
    AlgebraSide s{A};
    auto letters = detail::all_letters(s);
    Complex cx;
    cx.step = -1;
    for (int n = 0; n <= n_max + 1; ++n) {
        cx.basis[n] = detail::necklace_basis(s, cyclic_words(s, n + 1, weight, letters, letters));
        detail::shuffle_basis(cx.basis[n], shuffle);
    }
    for (int n = 1; n <= n_max + 1; ++n) {
        auto idx = detail::index_of(cx.basis[n - 1]);
        SparseMatrix m(cx.dim(n - 1), cx.dim(n));
        for (int j = 0; j < cx.dim(n); ++j)
            for (auto& [w, v] : b_algebra(A, cx.basis[n][j])) {
                auto cw = canonical_rotation(w, shifted_degrees(s, w));
                if (cw.sign == 0) continue;
                m.add(idx.at(cw.word), j, v * cw.sign);
            }
        cx.d[n] = m;
    }
    return cx;
}

// Connes complex of a coalgebra: N(C^{(x) n+1}), grade n, differential b (step +1).
// Basis element for a canonical word u is N(u). Throws if b leaves the N-images.
inline Complex connes_complex_coalgebra(const Coalgebra& C, int weight, int n_max, std::mt19937* shuffle = nullptr) {
    CoalgebraSide s{C};
    auto letters = detail::all_letters(s);
    auto t = [&](const Word& w) { return cyclic_t_coalgebra(C, w); };
    Complex cx;
    cx.step = +1;
    for (int n = 0; n <= n_max + 1; ++n) {
        cx.basis[n] = detail::necklace_basis(s, cyclic_words(s, n + 1, weight, letters, letters));
        detail::shuffle_basis(cx.basis[n], shuffle);
    }
    for (int n = 0; n <= n_max; ++n) {
        auto idx = detail::index_of(cx.basis[n + 1]);
        SparseMatrix m(cx.dim(n + 1), cx.dim(n));
        for (int j = 0; j < cx.dim(n); ++j) {
            Chain img = apply_linear([&](const Word& w) { return b_coalgebra(C, w, false); }, cyclic_N(t, cx.basis[n][j]));
            // decompose into N-images via the coefficient of each canonical word
            Chain recon;
            for (auto& [u, row] : idx) {
                auto it = img.find(u);
                if (it == img.end()) continue;
                Chain Nu = cyclic_N(t, u);
                Rational lambda = it->second / Nu.at(u);
                m.add(row, j, lambda);
                chain_add(recon, Nu, lambda);
            }
            chain_add(recon, img, -1);
            chain_clean(recon);
            if (!recon.empty()) throw InvariantViolation("b does not preserve N-images");
        }
        cx.d[n] = m;
    }
    return cx;
}

// Degree of a mixed-complex word.
inline int mixed_degree(const GradedAlgebra& A, const Word& w) {
    int d = static_cast<int>(w.size()) - 1;
    for (int x : w) d += A.deg(x);
    return d;
}
inline int mixed_degree(const Coalgebra& C, const Word& w) {
    int d = C.deg(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) d += C.deg(w[i]) - 1;
    return d;
}

// Normalized mixed complex words of a fixed weight: slot 0 any letter, other
// slots non-vertex. Finite because every non-vertex letter has positive weight.
template <class Side>
std::vector<Word> mixed_words(const Side& s, int weight) {
    auto all = detail::all_letters(s), red = detail::reduced_letters(s);
    std::vector<Word> out;
    for (int len = 1; len <= weight + 1; ++len) {
        auto ws = cyclic_words(s, len, weight, all, red);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

// Total complex Tot_n = (+)_{p>=0} M_{n-2p} with d = b + B, for a normalized mixed
// complex given by its words and operators. Grades 0..n_max+1.
inline Complex total_complex(const std::vector<Word>& words, const std::function<int(const Word&)>& degree,
                             const std::function<Chain(const Word&)>& b, const std::function<Chain(const Word&)>& B,
                             int n_max) {
    std::map<int, std::vector<Word>> M;
    for (auto& w : words) M[degree(w)].push_back(w);
    Complex cx;
    cx.step = -1;
    // element (w, p) is stored as w with tag p
    std::map<int, std::map<std::pair<Word, int>, int>> pos;
    for (int n = 0; n <= n_max + 1; ++n) {
        auto& bas = cx.basis[n];
        auto& tg = cx.tag[n];
        for (int p = 0; 2 * p <= n - (M.empty() ? 0 : std::min(0, M.begin()->first)); ++p) {
            auto it = M.find(n - 2 * p);
            if (it == M.end()) continue;
            for (auto& w : it->second) {
                pos[n][{w, p}] = static_cast<int>(bas.size());
                bas.push_back(w);
                tg.push_back(p);
            }
        }
    }
    for (int n = 1; n <= n_max + 1; ++n) {
        SparseMatrix m(cx.dim(n - 1), cx.dim(n));
        for (int j = 0; j < cx.dim(n); ++j) {
            const Word& w = cx.basis[n][j];
            int p = cx.tag[n][j];
            for (auto& [u, v] : b(w)) {
                auto it = pos[n - 1].find({u, p});
                if (it == pos[n - 1].end()) throw InvariantViolation("b leaves the mixed complex");
                m.add(it->second, j, v);
            }
            if (p >= 1)
                for (auto& [u, v] : B(w)) {
                    auto it = pos[n - 1].find({u, p - 1});
                    if (it == pos[n - 1].end()) throw InvariantViolation("B leaves the mixed complex");
                    m.add(it->second, j, v);
                }
        }
        cx.d[n] = m;
    }
    return cx;
}

inline Complex total_complex_coalgebra(const Coalgebra& C, int weight, int n_max) {
    CoalgebraSide s{C};
    return total_complex(
        mixed_words(s, weight), [&](const Word& w) { return mixed_degree(C, w); },
        [&](const Word& w) { return b_coalgebra(C, w, true); }, [&](const Word& w) { return B_coalgebra(C, w); },
        n_max);
}

inline Complex total_complex_algebra(const GradedAlgebra& A, int weight, int n_max) {
    if (weight > A.max_weight()) throw InvariantViolation("truncation exceeded");
    AlgebraSide s{A};
    return total_complex(
        mixed_words(s, weight), [&](const Word& w) { return mixed_degree(A, w); },
        [&](const Word& w) { return b_algebra(A, w); }, [&](const Word& w) { return B_algebra(A, w); }, n_max);
}

// Cyclic homology dimensions per (weight, degree).
using HCTable = std::map<std::pair<int, int>, int>;

inline HCTable cyclic_homology_algebra(const QuadraticPresentation& p, int max_weight, int max_degree) {
    GradedAlgebra A(p, std::max(1, max_weight));
    HCTable t;
    for (int w = 0; w <= max_weight; ++w) {
        auto cx = connes_complex_algebra(A, w, max_degree);
        for (auto& [n, b] : homology(cx, 0, max_degree).betti) t[{w, n}] = b;
    }
    return t;
}

inline HCTable cyclic_homology_coalgebra(const Coalgebra& C, int max_weight, int max_degree) {
    HCTable t;
    for (int w = 0; w <= max_weight; ++w) {
        auto cx = total_complex_coalgebra(C, w, max_degree);
        for (auto& [n, b] : homology(cx, 0, max_degree).betti) t[{w, n}] = b;
    }
    return t;
}

}  // namespace cyq
