#pragma once
// Chevalley-Eilenberg complexes of gl_r(A) and of the Lie coalgebra gl^c_r(C),
// the trace maps Tr.theta and Theta*, gl_r(k)-invariants, and the comparison of
// the invariant CE homology with the free graded-commutative algebra on HC[1].

#include <random>

#include "necklace.hpp"

namespace cyq {

class StabilityViolation : public UnsupportedInput {
public:
    using UnsupportedInput::UnsupportedInput;
};

// E_{row,col}^{sym}, indices from 0.
struct MatrixLetter {
    int row = 0, col = 0, sym = 0;
    auto operator<=>(const MatrixLetter&) const = default;
};
using Wedge = std::vector<MatrixLetter>;
using CEChain = std::map<Wedge, Rational>;

struct CanonicalWedge {
    Wedge word;
    int sign = 0;
};

// Sort letters with Koszul signs in the given wedge degrees; a repeated odd
// letter kills the word.
template <class Deg>
CanonicalWedge canonical_wedge(Wedge w, const Deg& wdeg) {
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
            if ((wdeg(w[j]) & 1) && (wdeg(w[j - 1]) & 1)) sign = -sign;
            std::swap(w[j], w[j - 1]);
        }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && (wdeg(w[i]) & 1)) return {w, 0};
    return {w, sign};
}

template <class Deg>
void add_wedge(CEChain& acc, const Wedge& w, const Rational& c, const Deg& wdeg) {
    auto cw = canonical_wedge(w, wdeg);
    if (cw.sign != 0) acc[cw.word] += c * cw.sign;
}

inline std::string letter_string(const MatrixLetter& l, const std::string& sym) {
    return "E" + std::to_string(l.row + 1) + std::to_string(l.col + 1) + "^" + sym;
}

// ---------- gl_r(A) ----------

class GlAlgebra {
public:
    GlAlgebra(const GradedAlgebra& A, int r) : A_(A), r_(r) {
        if (r < 1) throw MalformedInput("matrix rank must be positive");
    }
    int rank() const { return r_; }
    const GradedAlgebra& algebra() const { return A_; }
    int wdeg(const MatrixLetter& l) const { return A_.deg(l.sym) + 1; }

    // [E_ij^x, E_kl^y] = d_jk E_il^{xy} - (-1)^{|x||y|} d_li E_kj^{yx}
    std::map<MatrixLetter, Rational> commutator(const MatrixLetter& x, const MatrixLetter& y) const {
        std::map<MatrixLetter, Rational> out;
        if (x.col == y.row)
            for (auto& [s, c] : A_.mul(x.sym, y.sym)) out[{x.row, y.col, s}] += c;
        if (y.col == x.row) {
            int sg = parity_sign(A_.deg(x.sym) * A_.deg(y.sym));
            for (auto& [s, c] : A_.mul(y.sym, x.sym)) out[{y.row, x.col, s}] -= c * sg;
        }
        map_clean(out);
        return out;
    }

    // d(g1..gn) = sum_{i<j} eps [gi,gj] g1..^i..^j..gn, eps the Koszul sign of
    // bringing gi, gj to the front times (-1)^{|gi|}.
    CEChain differential(const Wedge& w) const {
        CEChain out;
        auto deg = [&](const MatrixLetter& l) { return wdeg(l); };
        int n = static_cast<int>(w.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int s = 1;
                for (int k = 0; k < i; ++k) s *= parity_sign(wdeg(w[k]) * wdeg(w[i]));
                for (int k = 0; k < j; ++k)
                    if (k != i) s *= parity_sign(wdeg(w[k]) * wdeg(w[j]));
                s *= parity_sign(A_.deg(w[i].sym));
                Wedge rest;
                for (int k = 0; k < n; ++k)
                    if (k != i && k != j) rest.push_back(w[k]);
                for (auto& [l, c] : commutator(w[i], w[j])) {
                    Wedge nw{l};
                    nw.insert(nw.end(), rest.begin(), rest.end());
                    add_wedge(out, nw, c * s, deg);
                }
            }
        map_clean(out);
        return out;
    }
    CEChain differential(const CEChain& x) const {
        CEChain out;
        for (auto& [w, c] : x)
            for (auto& [v, e] : differential(w)) out[v] += c * e;
        map_clean(out);
        return out;
    }

    // Tr(theta(g0..gn)) = sum_sigma eps(sigma) Tr(g0, g_sigma(1), .., g_sigma(n)),
    // reduced to canonical cyclic words of A.
    Chain trace_theta(const Wedge& w) const {
        Chain out;
        if (w.empty()) return out;
        int n = static_cast<int>(w.size()) - 1;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<int> wd;
        for (auto& l : w) wd.push_back(wdeg(l));
        do {
            std::vector<int> target{0};
            target.insert(target.end(), perm.begin(), perm.end());
            bool closed = true;
            for (int k = 0; k <= n && closed; ++k) closed = w[target[k]].col == w[target[(k + 1) % (n + 1)]].row;
            if (!closed) continue;
            Word word, sd;
            for (int t : target) {
                word.push_back(w[t].sym);
                sd.push_back(wd[t]);
            }
            auto cw = canonical_rotation(word, sd);
            if (cw.sign == 0) continue;
            out[cw.word] += Rational(transport_sign(wd, target) * cw.sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
        chain_clean(out);
        return out;
    }
    Chain trace_theta(const CEChain& x) const {
        Chain out;
        for (auto& [w, c] : x) chain_add(out, trace_theta(w), c);
        chain_clean(out);
        return out;
    }

    // Hochschild b on canonical cyclic words, read in the coinvariants.
    Chain cyclic_b(const Chain& x) const {
        Chain out;
        AlgebraSide s{A_};
        for (auto& [w, c] : x)
            for (auto& [v, e] : b_algebra(A_, w)) {
                auto cw = canonical_rotation(v, shifted_degrees(s, v));
                if (cw.sign != 0) out[cw.word] += c * e * cw.sign;
            }
        chain_clean(out);
        return out;
    }

private:
    const GradedAlgebra& A_;
    int r_;
};

// ---------- gl^c_r(C) ----------

struct RawTerm {
    Rational c;
    MatrixLetter l, r;
};

class GlCoalgebra {
public:
    // reduced: use the reduced coproduct and only non-vertex entries.
    GlCoalgebra(const Coalgebra& C, int r, bool reduced = false) : C_(C), r_(r), reduced_(reduced) {
        if (r < 1) throw MalformedInput("matrix rank must be positive");
    }
    int rank() const { return r_; }
    const Coalgebra& coalgebra() const { return C_; }
    bool reduced() const { return reduced_; }
    int wdeg(const MatrixLetter& l) const { return C_.deg(l.sym) - 1; }

    std::vector<CoTerm> coproduct(int c) const { return reduced_ ? C_.reduced(c) : C_.delta[c]; }

    // nu(E_ij^c) = Delta - Delta^op, Delta(E_ij^c) = sum_k E_ik^{c'} (x) E_kj^{c''};
    // raw terms before cancellation.
    std::vector<RawTerm> cobracket_raw(const MatrixLetter& x) const {
        std::vector<RawTerm> out;
        for (int k = 0; k < r_; ++k)
            for (auto& t : coproduct(x.sym)) {
                MatrixLetter a{x.row, k, t.l}, b{k, x.col, t.r};
                out.push_back({t.c, a, b});
                out.push_back({-t.c * parity_sign(C_.deg(t.l) * C_.deg(t.r)), b, a});
            }
        return out;
    }
    std::map<std::pair<MatrixLetter, MatrixLetter>, Rational> cobracket(const MatrixLetter& x) const {
        std::map<std::pair<MatrixLetter, MatrixLetter>, Rational> out;
        for (auto& t : cobracket_raw(x)) out[{t.l, t.r}] += t.c;
        map_clean(out);
        return out;
    }

    // d(l1..ln) = sum_j (-1)^{|l1|+..+|l_{j-1}|+|c_j'|-(j-1)} l1..(sum_k E^{c_j'}_{ik} E^{c_j''}_{kj})..ln
    CEChain differential(const Wedge& w) const {
        CEChain out;
        auto deg = [&](const MatrixLetter& l) { return wdeg(l); };
        int acc = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            for (int k = 0; k < r_; ++k)
                for (auto& t : coproduct(w[j].sym)) {
                    Wedge nw(w.begin(), w.begin() + j);
                    nw.push_back({w[j].row, k, t.l});
                    nw.push_back({k, w[j].col, t.r});
                    nw.insert(nw.end(), w.begin() + j + 1, w.end());
                    add_wedge(out, nw, t.c * parity_sign(acc + C_.deg(t.l)), deg);
                }
            acc += wdeg(w[j]);
        }
        map_clean(out);
        return out;
    }
    CEChain differential(const CEChain& x) const {
        CEChain out;
        for (auto& [w, c] : x)
            for (auto& [v, e] : differential(w)) out[v] += c * e;
        map_clean(out);
        return out;
    }

    // Theta*[c1..cn] = sum_i E^{c1}_{i1 i2} E^{c2}_{i2 i3} .. E^{cn}_{in i1}
    CEChain theta_star(const Word& w) const {
        std::vector<int> cyc(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) cyc[k] = static_cast<int>((k + 1) % w.size());
        return theta_star_perm(cyc, w);
    }
    CEChain theta_star(const Chain& x) const {
        CEChain out;
        for (auto& [w, c] : x)
            for (auto& [v, e] : theta_star(w)) out[v] += c * e;
        map_clean(out);
        return out;
    }

    // sigma (x) (c1..cn) -> sum_i E^{c1}_{i1 i_sigma(1)} .. E^{cn}_{in i_sigma(n)}
    CEChain theta_star_perm(const std::vector<int>& sigma, const Word& c) const {
        CEChain out;
        if (c.empty()) return {{Wedge{}, Rational(1)}};
        int n = static_cast<int>(c.size());
        auto deg = [&](const MatrixLetter& l) { return wdeg(l); };
        std::vector<int> idx(n, 0);
        while (true) {
            Wedge wd;
            for (int k = 0; k < n; ++k) wd.push_back({idx[k], idx[sigma[k]], c[k]});
            add_wedge(out, wd, 1, deg);
            int p = 0;
            while (p < n && ++idx[p] == r_) idx[p++] = 0;
            if (p == n) break;
        }
        map_clean(out);
        return out;
    }

    CEChain wedge(const CEChain& x, const CEChain& y) const {
        CEChain out;
        auto deg = [&](const MatrixLetter& l) { return wdeg(l); };
        for (auto& [u, a] : x)
            for (auto& [v, b] : y) {
                Wedge w = u;
                w.insert(w.end(), v.begin(), v.end());
                add_wedge(out, w, a * b, deg);
            }
        map_clean(out);
        return out;
    }

    // [h, f] = f h^T - h^T f for h = E_pq, applied as a derivation.
    CEChain act(int p, int q, const Wedge& w) const {
        CEChain out;
        auto deg = [&](const MatrixLetter& l) { return wdeg(l); };
        for (std::size_t k = 0; k < w.size(); ++k) {
            const auto& f = w[k];
            if (f.col == q) {
                Wedge nw = w;
                nw[k] = {f.row, p, f.sym};
                add_wedge(out, nw, 1, deg);
            }
            if (f.row == p) {
                Wedge nw = w;
                nw[k] = {q, f.col, f.sym};
                add_wedge(out, nw, -1, deg);
            }
        }
        map_clean(out);
        return out;
    }
    CEChain act(int p, int q, const CEChain& x) const {
        CEChain out;
        for (auto& [w, c] : x)
            for (auto& [v, e] : act(p, q, w)) out[v] += c * e;
        map_clean(out);
        return out;
    }
    bool invariant(const CEChain& x) const {
        for (int p = 0; p < r_; ++p)
            for (int q = 0; q < r_; ++q)
                if (!act(p, q, x).empty()) return false;
        return true;
    }

    std::string to_string(const CEChain& x) const {
        if (x.empty()) return "0";
        std::string s;
        for (auto& [w, c] : x) {
            s += (s.empty() ? "" : " + ") + c.get_str() + "*";
            for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "^" : "") + letter_string(w[i], C_.basis[w[i].sym].id);
        }
        return s;
    }

private:
    const Coalgebra& C_;
    int r_;
    bool reduced_;
};

// ---------- invariant theory ----------

using GlTensor = std::map<std::vector<std::pair<int, int>>, Rational>;

// mu(sigma) = sum_i E_{i1 i_sigma(1)} (x) .. (x) E_{in i_sigma(n)}; sigma[k] is the
// image of k (0-based).
inline GlTensor mu_invariant(const std::vector<int>& sigma, int r) {
    int n = static_cast<int>(sigma.size());
    if (r <= n) throw StabilityViolation("invariant theory needs r > n (r = " + std::to_string(r) +
                                         ", n = " + std::to_string(n) + ")");
    GlTensor out;
    std::vector<int> idx(n, 0);
    while (true) {
        std::vector<std::pair<int, int>> t;
        for (int k = 0; k < n; ++k) t.push_back({idx[k], idx[sigma[k]]});
        out[t] += 1;
        int p = 0;
        while (p < n && ++idx[p] == r) idx[p++] = 0;
        if (p == n) break;
    }
    return out;
}

// Action of E_pq on gl_r(k)^{(x) n}: f_i -> f_i E_qp - E_qp f_i in each slot.
inline GlTensor gl_act(int p, int q, const GlTensor& x) {
    GlTensor out;
    for (auto& [t, c] : x)
        for (std::size_t k = 0; k < t.size(); ++k) {
            auto [i, j] = t[k];
            if (j == q) {
                auto nt = t;
                nt[k] = {i, p};
                out[nt] += c;
            }
            if (i == p) {
                auto nt = t;
                nt[k] = {q, j};
                out[nt] -= c;
            }
        }
    map_clean(out);
    return out;
}

// ---------- dimension comparison ----------

using DimTable = std::map<std::pair<int, int>, int>;  // (weight, degree) -> dim

// Homology of the non-vertex necklace complex of C per (weight, desuspended degree).
inline DimTable necklace_homology(const Coalgebra& C, int max_weight) {
    CoalgebraSide s{C};
    auto letters = detail::reduced_letters(s);
    DimTable out;
    for (int w = 1; w <= max_weight; ++w) {
        std::map<int, std::vector<Word>> by_deg;
        for (int len = 1; len <= w; ++len)
            for (auto& u : detail::necklace_basis(s, cyclic_words(s, len, w, letters, letters))) {
                int d = 0;
                for (int x : u) d += C.sdeg(x);
                by_deg[d].push_back(u);
            }
        std::map<int, int> rk;  // rank of b out of degree D
        for (auto& [d, basis] : by_deg) {
            auto it = by_deg.find(d - 1);
            if (it == by_deg.end()) {
                rk[d] = 0;
                continue;
            }
            auto idx = detail::index_of(it->second);
            std::vector<SparseVec> cols;
            for (auto& u : basis) {
                std::map<int, Rational> v;
                for (auto& [x, c] : necklace_boundary(C, u)) v[idx.at(x)] += c;
                cols.push_back(sparse_from_map(v));
            }
            rk[d] = cyq::rank(matrix_from_columns(static_cast<int>(it->second.size()), cols));
        }
        for (auto& [d, basis] : by_deg) {
            int h = static_cast<int>(basis.size()) - rk[d] - (rk.count(d + 1) ? rk[d + 1] : 0);
            if (h) out[{w, d}] = h;
        }
    }
    return out;
}

// Free graded-commutative algebra on generators with the given (weight, degree)
// multiplicities, truncated at max_weight (weight 0 part excluded).
inline DimTable free_graded_commutative(const DimTable& gens, int max_weight) {
    DimTable acc{{{0, 0}, 1}};
    for (auto& [wd, mult] : gens) {
        auto [w, d] = wd;
        for (int m = 0; m < mult; ++m) {
            DimTable next;
            for (auto& [k, c] : acc)
                for (int e = 0; k.first + e * w <= max_weight; ++e) {
                    if ((d & 1) && e > 1) break;
                    next[{k.first + e * w, k.second + e * d}] += c;
                }
            acc = next;
        }
    }
    acc.erase({0, 0});
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

namespace detail {

// Canonical wedges of non-vertex letters with total weight w in which every
// index occurs equally often as a row and as a column (torus weight zero).
inline std::vector<Wedge> zero_weight_wedges(const GlCoalgebra& G, int w) {
    const Coalgebra& C = G.coalgebra();
    int r = G.rank();
    std::vector<MatrixLetter> letters;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int c = 0; c < C.size(); ++c)
                if (!C.is_vertex(c) && C.weight(c) > 0 && C.weight(c) <= w) letters.push_back({i, j, c});
    std::sort(letters.begin(), letters.end());
    std::vector<Wedge> out;
    Wedge cur;
    std::vector<int> balance(r, 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t from, int left) {
        if (left == 0) {
            for (int b : balance)
                if (b) return;
            out.push_back(cur);
            return;
        }
        for (std::size_t k = from; k < letters.size(); ++k) {
            const auto& l = letters[k];
            int lw = C.weight(l.sym);
            if (lw > left) continue;
            bool odd = G.wdeg(l) & 1;
            cur.push_back(l);
            ++balance[l.col];
            --balance[l.row];
            go(odd ? k + 1 : k, left - lw);
            cur.pop_back();
            --balance[l.col];
            ++balance[l.row];
        }
    };
    go(0, w);
    return out;
}

inline int wedge_degree(const GlCoalgebra& G, const Wedge& w) {
    int d = 0;
    for (auto& l : w) d += G.wdeg(l);
    return d;
}

}  // namespace detail

// Homology of the gl_r(k)-invariant part of CE(gl^c_r(C-bar)) per (weight, degree).
inline DimTable invariant_ce_homology(const Coalgebra& C, int r, int max_weight) {
    GlCoalgebra G(C, r, true);
    DimTable out;
    for (int w = 1; w <= max_weight; ++w) {
        std::map<int, std::vector<Wedge>> by_deg;
        for (auto& x : detail::zero_weight_wedges(G, w)) by_deg[detail::wedge_degree(G, x)].push_back(x);
        // invariant subspace in each degree: kernel of the off-diagonal actions
        std::map<int, std::vector<SparseVec>> inv;
        for (auto& [d, basis] : by_deg) {
            std::map<std::pair<int, Wedge>, int> row_of;
            std::vector<std::map<int, Rational>> acc;
            for (int p = 0; p < r; ++p)
                for (int q = 0; q < r; ++q) {
                    if (p == q) continue;
                    for (std::size_t j = 0; j < basis.size(); ++j)
                        for (auto& [v, c] : G.act(p, q, basis[j])) {
                            auto [it, fresh] = row_of.try_emplace({p * r + q, v}, static_cast<int>(acc.size()));
                            if (fresh) acc.emplace_back();
                            acc[it->second][static_cast<int>(j)] += c;
                        }
                }
            SparseMatrix m(static_cast<int>(acc.size()), static_cast<int>(basis.size()));
            for (std::size_t i = 0; i < acc.size(); ++i) m.rows[i] = sparse_from_map(acc[i]);
            inv[d] = kernel(m);
        }
        // rank of d restricted to invariants, from degree D to D-1
        std::map<int, int> rk;
        for (auto& [d, vecs] : inv) {
            auto it = by_deg.find(d - 1);
            if (it == by_deg.end() || vecs.empty()) {
                rk[d] = 0;
                continue;
            }
            std::map<Wedge, int> idx;
            for (std::size_t k = 0; k < it->second.size(); ++k) idx[it->second[k]] = static_cast<int>(k);
            std::map<Wedge, CEChain> dcache;
            std::vector<SparseVec> cols;
            for (auto& v : vecs) {
                std::map<int, Rational> img;
                for (auto& [j, c] : v) {
                    const Wedge& x = by_deg[d][j];
                    auto dc = dcache.find(x);
                    if (dc == dcache.end()) dc = dcache.emplace(x, G.differential(x)).first;
                    for (auto& [y, e] : dc->second) img[idx.at(y)] += c * e;
                }
                cols.push_back(sparse_from_map(img));
            }
            rk[d] = cyq::rank(matrix_from_columns(static_cast<int>(it->second.size()), cols));
        }
        for (auto& [d, vecs] : inv) {
            int h = static_cast<int>(vecs.size()) - rk[d] - (rk.count(d + 1) ? rk[d + 1] : 0);
            if (h) out[{w, d}] = h;
        }
    }
    return out;
}

// ---------- verification harness ----------

struct LqtOptions {
    int rank = 4;
    int degree_bound = 2;   // weight bound for the dimension comparison; wedge length <= weight
    int chain_length = 3;   // longest necklace / wedge in the chain-map checks
    int samples = 200;      // random algebra chains per rank
    unsigned seed = 1;
    bool dimensions = true;
};

struct LqtResult {
    Report report;
    DimTable ce, lambda, hc;
};

inline LqtResult verify_lqt(const Coalgebra& C, const GradedAlgebra* A, const LqtOptions& opt) {
    if (opt.rank <= opt.degree_bound)
        throw StabilityViolation("rank " + std::to_string(opt.rank) + " must exceed the degree bound " +
                                 std::to_string(opt.degree_bound));
    LqtResult res;
    Report& rep = res.report;

    // Theta* o b' = d o Theta* on all words (vertex letters included) up to
    // chain_length, and Theta* o b = d o Theta* on non-vertex necklaces with the
    // reduced coproduct, for every rank up to opt.rank
    CoalgebraSide s{C};
    auto letters = detail::all_letters(s);
    int maxw = 0;
    for (int c = 0; c < C.size(); ++c) maxw = std::max(maxw, C.weight(c));
    std::vector<Word> words, necklaces;
    for (int len = 1; len <= opt.chain_length; ++len)
        for (int w = 0; w <= maxw * len; ++w)
            for (auto& u : cyclic_words(s, len, w, letters, letters)) {
                words.push_back(u);
                bool nonvertex = std::none_of(u.begin(), u.end(), [&](int x) { return C.is_vertex(x); });
                auto cw = canonical_rotation(u, shifted_degrees(s, u));
                if (nonvertex && cw.sign != 0 && cw.word == u) necklaces.push_back(u);
            }
    auto word_string = [&](const Word& u) {
        std::string ws;
        for (int x : u) ws += (ws.empty() ? "" : ",") + C.basis[x].id;
        return "[" + ws + "]";
    };
    for (int r = 1; r <= opt.rank; ++r) {
        GlCoalgebra G(C, r), Gred(C, r, true);
        for (auto& u : words) {
            rep.count("Theta* chain map");
            CEChain lhs = G.theta_star(b_prime_coalgebra(C, u));
            for (auto& [w, c] : G.differential(G.theta_star(u))) lhs[w] -= c;
            map_clean(lhs);
            if (!lhs.empty()) rep.fail("Theta* chain map", word_string(u) + " r=" + std::to_string(r));
        }
        for (auto& u : necklaces) {
            rep.count("Theta* necklace boundary");
            CEChain lhs = Gred.theta_star(necklace_boundary(C, u));
            for (auto& [w, c] : Gred.differential(Gred.theta_star(u))) lhs[w] -= c;
            map_clean(lhs);
            if (!lhs.empty()) rep.fail("Theta* necklace boundary", word_string(u) + " r=" + std::to_string(r));
        }
    }

    // d^2 = 0 on the coalgebra side, all wedges of two letters (r <= 2 slice)
    {
        GlCoalgebra G2(C, std::min(opt.rank, 2));
        std::vector<MatrixLetter> ls;
        for (int i = 0; i < G2.rank(); ++i)
            for (int j = 0; j < G2.rank(); ++j)
                for (int c = 0; c < C.size(); ++c) ls.push_back({i, j, c});
        for (std::size_t a = 0; a < ls.size(); ++a)
            for (std::size_t b = a; b < ls.size(); ++b) {
                rep.count("colie d^2 = 0");
                if (!G2.differential(G2.differential(Wedge{ls[a], ls[b]})).empty())
                    rep.fail("colie d^2 = 0", G2.to_string({{Wedge{ls[a], ls[b]}, 1}}));
            }
    }

    // Tr.theta o d = b o Tr.theta on seeded random wedges
    if (A) {
        std::mt19937 rng(opt.seed);
        for (int r = 1; r <= opt.rank; ++r) {
            GlAlgebra gA(*A, r);
            std::vector<int> entries;
            for (int x = 0; x < A->size(); ++x)
                if (A->weight(x) * opt.chain_length * 2 <= A->max_weight() || A->weight(x) == 0) entries.push_back(x);
            std::uniform_int_distribution<int> ix(0, r - 1), ex(0, static_cast<int>(entries.size()) - 1),
                len(1, opt.chain_length);
            for (int t = 0; t < opt.samples; ++t) {
                Wedge w;
                int n = len(rng);
                if (t % 2) {
                    for (int k = 0; k < n; ++k) w.push_back({ix(rng), ix(rng), entries[ex(rng)]});
                } else {
                    // a closed index cycle, so the trace is nonzero
                    std::vector<int> cyc(n);
                    for (auto& i : cyc) i = ix(rng);
                    for (int k = 0; k < n; ++k) w.push_back({cyc[k], cyc[(k + 1) % n], entries[ex(rng)]});
                    std::shuffle(w.begin(), w.end(), rng);
                }
                rep.count("Tr.theta chain map");
                rep.count("lie d^2 = 0");
                try {
                    Chain lhs = gA.trace_theta(gA.differential(w));
                    Chain rhs = gA.cyclic_b(gA.trace_theta(w));
                    chain_add(lhs, rhs, -1);
                    chain_clean(lhs);
                    if (!lhs.empty()) rep.fail("Tr.theta chain map", "random wedge of length " + std::to_string(n));
                    if (!gA.differential(gA.differential(w)).empty())
                        rep.fail("lie d^2 = 0", "random wedge of length " + std::to_string(n));
                } catch (const InvariantViolation&) {
                    rep.notes.push_back("skipped a sample past the weight truncation");
                }
            }
        }
    }

    // product of N: Theta*(sigma varsigma' (x) (b)(c)) = Theta*(sigma (x) b) ^ Theta*(varsigma (x) c),
    // and the images are gl_r(k)-invariant
    {
        std::mt19937 rng(opt.seed + 1);
        auto nonv = C.nonvertex();
        if (!nonv.empty()) {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(nonv.size()) - 1);
            int r = std::min(opt.rank, 3);
            GlCoalgebra G3(C, r);
            for (int t = 0; t < 20; ++t) {
                int m = 1 + t % 2, n = 1 + (t / 2) % 2;
                std::vector<int> sg(m), vs(n);
                std::iota(sg.begin(), sg.end(), 0);
                std::iota(vs.begin(), vs.end(), 0);
                std::shuffle(sg.begin(), sg.end(), rng);
                std::shuffle(vs.begin(), vs.end(), rng);
                Word b, c;
                for (int k = 0; k < m; ++k) b.push_back(nonv[pick(rng)]);
                for (int k = 0; k < n; ++k) c.push_back(nonv[pick(rng)]);
                std::vector<int> prod = sg;
                for (int k = 0; k < n; ++k) prod.push_back(m + vs[k]);
                Word bc = b;
                bc.insert(bc.end(), c.begin(), c.end());
                rep.count("N product");
                CEChain lhs = G3.theta_star_perm(prod, bc);
                CEChain rhs = G3.wedge(G3.theta_star_perm(sg, b), G3.theta_star_perm(vs, c));
                if (lhs != rhs) rep.fail("N product", "sample " + std::to_string(t));
                rep.count("Theta* invariant");
                if (!G3.invariant(lhs)) rep.fail("Theta* invariant", "sample " + std::to_string(t));
            }
        }
    }

    if (opt.dimensions) {
        res.hc = necklace_homology(C, opt.degree_bound);
        res.lambda = free_graded_commutative(res.hc, opt.degree_bound);
        res.ce = invariant_ce_homology(C, opt.rank, opt.degree_bound);
        rep.count("dimension match");
        if (res.ce != res.lambda) rep.fail("dimension match", "r=" + std::to_string(opt.rank));
    }
    return res;
}

}  // namespace cyq
