#pragma once
// Koszul dual coalgebras, truncated quadratic algebras, the Koszul complex,
// the cobar construction and the map iota.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "presentations.hpp"

namespace cyq {

// Composable words of generator indices, grouped by length.
inline std::vector<std::vector<int>> composable_words(const QuadraticPresentation& p, int len, int start_vertex) {
    std::vector<std::vector<int>> out;
    std::vector<int> w;
    int ng = static_cast<int>(p.generators.size());
    std::function<void(int)> rec = [&](int v) {
        if (static_cast<int>(w.size()) == len) {
            out.push_back(w);
            return;
        }
        for (int g = 0; g < ng; ++g)
            if (p.generators[g].src == v) {
                w.push_back(g);
                rec(p.generators[g].tgt);
                w.pop_back();
            }
    };
    rec(start_vertex);
    return out;
}

inline std::vector<std::vector<int>> all_words(const QuadraticPresentation& p, int len) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < p.nverts(); ++v) {
        if (len == 0) continue;
        auto ws = composable_words(p, len, v);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct WordIndex {
    std::vector<std::vector<int>> words;
    std::map<std::vector<int>, int> pos;
    explicit WordIndex(std::vector<std::vector<int>> ws = {}) : words(std::move(ws)) {
        for (int i = 0; i < static_cast<int>(words.size()); ++i) pos[words[i]] = i;
    }
    int find(const std::vector<int>& w) const {
        auto it = pos.find(w);
        return it == pos.end() ? -1 : it->second;
    }
    int size() const { return static_cast<int>(words.size()); }
};

// ---------- Koszul dual coalgebra ----------

struct KoszulDual {
    Coalgebra coalg;
    std::vector<WordIndex> words;            // words[m]: composable words of length m (m >= 1)
    std::vector<std::vector<int>> by_weight;  // basis indices of weight m
    int max_weight = 0;
};

inline std::vector<SparseVec> relation_annihilator(const QuadraticPresentation& p, const WordIndex& pairs) {
    SparseMatrix R(static_cast<int>(p.relations.size()), pairs.size());
    for (std::size_t k = 0; k < p.relations.size(); ++k)
        for (auto& [pr, c] : p.relations[k]) R.add(static_cast<int>(k), pairs.find({pr.first, pr.second}), c);
    return kernel(R);
}

inline KoszulDual koszul_dual(const QuadraticPresentation& p, int max_weight) {
    if (max_weight < 2) throw MalformedInput("koszul_dual needs max_weight >= 2");
    p.validate();
    KoszulDual kd;
    kd.max_weight = max_weight;
    kd.words.resize(max_weight + 1);
    kd.by_weight.resize(max_weight + 1);
    for (int m = 1; m <= max_weight; ++m) kd.words[m] = WordIndex(all_words(p, m));
    auto annih = relation_annihilator(p, kd.words[2]);
    // subspace of (sV)^{m}: basis vectors in RREF over word coordinates
    std::vector<std::vector<SparseVec>> sub(max_weight + 1);
    for (int m = 1; m <= max_weight; ++m) {
        const auto& W = kd.words[m];
        if (m == 1) {
            for (int i = 0; i < W.size(); ++i) sub[1].push_back(SparseVec{{i, Rational(1)}});
            continue;
        }
        // constraints: for each slot i, each functional rho in R^perp, each prefix/suffix
        SparseMatrix cons(0, W.size());
        std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int> row_of;
        for (int wi = 0; wi < W.size(); ++wi) {
            const auto& w = W.words[wi];
            for (int i = 0; i + 2 <= m; ++i) {
                std::vector<int> pre(w.begin(), w.begin() + i), suf(w.begin() + i + 2, w.end());
                int pidx = kd.words[2].find({w[i], w[i + 1]});
                for (int r = 0; r < static_cast<int>(annih.size()); ++r) {
                    Rational c = sparse_get(annih[r], pidx);
                    if (c == 0) continue;
                    auto key = std::make_tuple(i, r, pre, suf);
                    auto it = row_of.find(key);
                    int row;
                    if (it == row_of.end()) {
                        row = cons.nrows++;
                        cons.rows.emplace_back();
                        row_of[key] = row;
                    } else {
                        row = it->second;
                    }
                    cons.add(row, wi, c);
                }
            }
        }
        sub[m] = kernel(cons);
        Subspace s(sub[m]);
        sub[m] = s.basis();
    }
    // suspension sign of s^{m} on a word: sum_j (m - j) |x_j| (1-based j)
    auto susp_sign = [&](const std::vector<int>& w) {
        int e = 0, m = static_cast<int>(w.size());
        for (int j = 0; j < m; ++j) e += (m - 1 - j) * p.generators[w[j]].degree;
        return parity_sign(e);
    };
    Coalgebra& C = kd.coalg;
    C.name = "koszul dual of " + p.name;
    C.vertices = p.vertices;
    bool single = p.nverts() == 1;
    for (int v = 0; v < p.nverts(); ++v) {
        C.basis.push_back({single ? "1" : "1_" + p.vertices[v], 0, 0, v, v});
        C.expansion.push_back({});
        kd.by_weight[0].push_back(v);
    }
    std::vector<SparseVec> susp_vec;  // per basis element, coordinates in suspended words
    susp_vec.resize(p.nverts());
    for (int m = 1; m <= max_weight; ++m) {
        int k = 0;
        for (auto& v : sub[m]) {
            const auto& w0 = kd.words[m].words[v.front().first];
            int deg = 0;
            for (int g : w0) deg += p.generators[g].degree + 1;
            std::string id;
            if (m == 1) id = "s" + p.generators[w0[0]].id;
            else id = "w" + std::to_string(m) + "_" + std::to_string(k);
            int src = p.generators[w0.front()].src, tgt = p.generators[w0.back()].tgt;
            C.basis.push_back({id, deg, m, src, tgt});
            C.expansion.push_back(v);
            SparseVec sv;
            for (auto& [wi, c] : v) sv.emplace_back(wi, c * susp_sign(kd.words[m].words[wi]));
            susp_vec.push_back(sv);
            kd.by_weight[m].push_back(C.size() - 1);
            ++k;
        }
    }
    int n = C.size();
    C.delta.assign(n, {});
    C.counit.assign(n, 0);
    // coordinates of a suspended-word vector of weight m in terms of our basis
    auto coords = [&](int m, const SparseVec& v) -> std::map<int, Rational> {
        std::map<int, Rational> out;
        if (v.empty()) return out;
        // suspension signs break the RREF pivot property, so solve exactly
        std::vector<SparseVec> cols;
        for (int b : kd.by_weight[m]) cols.push_back(susp_vec[b]);
        SparseMatrix M = matrix_from_columns(kd.words[m].size(), cols);
        // augmented solve through an echelon on rows of [M | v]
        int nb = static_cast<int>(cols.size());
        Echelon e(true);
        std::map<int, Rational> target;
        for (auto& [i, c] : v) target[i] = c;
        SparseMatrix aug(M.nrows, nb + 1);
        for (int r = 0; r < M.nrows; ++r) {
            aug.rows[r] = M.rows[r];
            auto it = target.find(r);
            if (it != target.end()) aug.rows[r].emplace_back(nb, it->second);
        }
        for (auto& r : aug.rows)
            if (!r.empty()) e.insert(r);
        for (auto& row : e.rref()) {
            int pc = row.front().first;
            if (pc == nb) throw InvariantViolation("coproduct leaves the Koszul dual");
            out[kd.by_weight[m][pc]] = sparse_get(row, nb);
        }
        return out;
    };
    for (int v = 0; v < p.nverts(); ++v) {
        C.delta[v] = {{1, v, v}};
        C.counit[v] = 1;
    }
    for (int m = 1; m <= max_weight; ++m)
        for (int b : kd.by_weight[m]) {
            const auto& sym = C.basis[b];
            C.delta[b].push_back({1, sym.src, b});
            for (int k = 1; k < m; ++k) {
                // split each word at k; group by the left word
                std::map<std::vector<int>, std::map<int, Rational>> by_left;
                for (auto& [wi, c] : susp_vec[b]) {
                    const auto& w = kd.words[m].words[wi];
                    std::vector<int> L(w.begin(), w.begin() + k), R(w.begin() + k, w.end());
                    by_left[L][kd.words[m - k].find(R)] += c;
                }
                // Delta_k(f) = sum_L L (x) R_L; expand L (x) R_L in basis (x) basis
                // via coordinates of the right parts and of the left words.
                std::map<std::pair<int, int>, Rational> acc;
                // Express: for each right basis coefficient, the left vector.
                std::map<int, std::map<int, Rational>> left_for_right;  // right basis idx -> left word vector
                for (auto& [L, rv] : by_left) {
                    auto rc = coords(m - k, sparse_from_map(rv));
                    int li = kd.words[k].find(L);
                    for (auto& [rb, c] : rc) left_for_right[rb][li] += c;
                }
                for (auto& [rb, lv] : left_for_right) {
                    auto lc = coords(k, sparse_from_map(lv));
                    for (auto& [lb, c] : lc) acc[{lb, rb}] += c;
                }
                for (auto& [pr, c] : acc)
                    if (c != 0) C.delta[b].push_back({c, pr.first, pr.second});
            }
            C.delta[b].push_back({1, b, sym.tgt});
        }
    validate_coalgebra(C);
    return kd;
}

inline std::map<std::pair<int, int>, int> dimension_table(const Coalgebra& c) {
    std::map<std::pair<int, int>, int> t;
    for (auto& b : c.basis) ++t[{b.weight, b.degree}];
    return t;
}

// ---------- truncated quadratic algebra ----------

class GradedAlgebra {
public:
    GradedAlgebra(const QuadraticPresentation& p, int max_weight) : p_(p), max_weight_(max_weight) {
        p.validate();
        int nv = p.nverts();
        for (int v = 0; v < nv; ++v) {
            basis_.push_back({nv == 1 ? "1" : "e_" + p.vertices[v], 0, 0, v, v});
            word_.push_back({});
        }
        words_.resize(max_weight + 1);
        ech_.resize(max_weight + 1);
        normal_.resize(max_weight + 1);
        by_weight_.resize(max_weight + 1);
        for (int v = 0; v < nv; ++v) by_weight_[0].push_back(v);
        for (int m = 1; m <= max_weight; ++m) {
            words_[m] = WordIndex(all_words(p, m));
            ech_[m] = Echelon(true);
            // generate ideal: u r v for all prefixes u (len i) and suffixes v (len m-2-i)
            for (int i = 0; i + 2 <= m; ++i) {
                auto pres = i == 0 ? std::vector<std::vector<int>>{{}} : words_[i].words;
                auto sufs = (m - 2 - i) == 0 ? std::vector<std::vector<int>>{{}} : words_[m - 2 - i].words;
                for (auto& u : pres)
                    for (auto& sfx : sufs)
                        for (auto& rel : p.relations) {
                            std::map<int, Rational> v;
                            bool ok = true;  // u r v must be composable throughout
                            for (auto& [pr, c] : rel) {
                                std::vector<int> w = u;
                                w.push_back(pr.first);
                                w.push_back(pr.second);
                                w.insert(w.end(), sfx.begin(), sfx.end());
                                int idx = words_[m].find(w);
                                if (idx < 0) ok = false;
                                else v[idx] += c;
                            }
                            if (!ok) continue;
                            SparseVec sv = sparse_from_map(v);
                            if (!sv.empty()) ech_[m].insert(sv);
                        }
            }
            for (int wi = 0; wi < words_[m].size(); ++wi)
                if (!ech_[m].pivots().count(wi)) {
                    normal_[m][wi] = static_cast<int>(basis_.size());
                    const auto& w = words_[m].words[wi];
                    std::string id;
                    int deg = 0;
                    for (std::size_t k = 0; k < w.size(); ++k) {
                        if (k) id += ".";
                        id += p.generators[w[k]].id;
                        deg += p.generators[w[k]].degree;
                    }
                    basis_.push_back({id, deg, m, p.generators[w.front()].src, p.generators[w.back()].tgt});
                    word_.push_back(w);
                    by_weight_[m].push_back(static_cast<int>(basis_.size()) - 1);
                }
        }
    }

    int size() const { return static_cast<int>(basis_.size()); }
    int max_weight() const { return max_weight_; }
    const Symbol& sym(int i) const { return basis_[i]; }
    int deg(int i) const { return basis_[i].degree; }
    int weight(int i) const { return basis_[i].weight; }
    const std::vector<int>& by_weight(int m) const { return by_weight_.at(m); }
    bool is_vertex(int i) const { return basis_[i].weight == 0; }
    int nverts() const { return p_.nverts(); }
    const QuadraticPresentation& presentation() const { return p_; }

    // Reduce a vector of words of length m to normal-word coordinates (basis indices).
    SparseVec reduce(int m, const std::map<std::vector<int>, Rational>& v) const {
        if (m == 0) throw InvariantViolation("reduce: weight 0 has no word coordinates");
        std::map<int, Rational> raw;
        for (auto& [w, c] : v) {
            int idx = words_[m].find(w);
            if (idx < 0) throw InvariantViolation("non-composable word");
            raw[idx] += c;
        }
        SparseVec r = ech_[m].reduce(sparse_from_map(raw));
        std::map<int, Rational> out;
        for (auto& [wi, c] : r) out[normal_[m].at(wi)] += c;
        return sparse_from_map(out);
    }

    // Product of basis elements; zero if not composable; throws past truncation.
    SparseVec mul(int a, int b) const {
        auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        SparseVec out;
        if (basis_[a].tgt == basis_[b].src) {
            if (is_vertex(a)) out = {{b, Rational(1)}};
            else if (is_vertex(b)) out = {{a, Rational(1)}};
            else {
                int m = weight(a) + weight(b);
                if (m > max_weight_) throw InvariantViolation("product exceeds the weight truncation");
                std::vector<int> w = word_[a];
                w.insert(w.end(), word_[b].begin(), word_[b].end());
                out = reduce(m, {{w, Rational(1)}});
            }
        }
        cache_[key] = out;
        return out;
    }

    // Basis index of a generator (weight 1 normal word).
    int generator(int g) const {
        int idx = words_[1].find({g});
        return normal_[1].at(idx);
    }
    // Element equal to the unit (sum of vertex idempotents)
    std::vector<int> units() const { return by_weight_[0]; }

private:
    QuadraticPresentation p_;
    int max_weight_;
    std::vector<Symbol> basis_;
    std::vector<std::vector<int>> word_;
    std::vector<WordIndex> words_;
    std::vector<Echelon> ech_;
    std::vector<std::map<int, int>> normal_;  // word index -> basis index
    std::vector<std::vector<int>> by_weight_;
    mutable std::map<std::pair<int, int>, SparseVec> cache_;
};

// ---------- Koszul complex ----------

struct KoszulComplexWeight {
    int weight = 0;
    // chain spaces K_i = A_{w-i} (x) A^!_i, i = 0..w; basis pairs (alg idx, coalg idx)
    std::vector<std::vector<std::pair<int, int>>> basis;
    std::vector<SparseMatrix> d;  // d[i]: K_i -> K_{i-1} (rows K_{i-1}), i >= 1
};

// Contraction of the first suspended letter: iota_{(s g)^*} f, in suspended word coordinates.
namespace detail {
inline std::map<std::vector<int>, Rational> suspended_vector(const KoszulDual& kd, const QuadraticPresentation& p,
                                                              int b) {
    std::map<std::vector<int>, Rational> out;
    int m = kd.coalg.weight(b);
    if (m == 0) {
        out[{}] = 1;
        return out;
    }
    for (auto& [wi, c] : kd.coalg.expansion[b]) {
        const auto& w = kd.words[m].words[wi];
        int e = 0;
        for (int j = 0; j < m; ++j) e += (m - 1 - j) * p.generators[w[j]].degree;
        out[w] += c * parity_sign(e);
    }
    return out;
}
}  // namespace detail

// d(a (x) f) = sum_i a e_i (x) (s e_i)^* . f with e_i = sum_j P_ij g_j and the dual basis.
// P must be invertible and must not mix generators with different endpoints.
inline KoszulComplexWeight koszul_complex(const QuadraticPresentation& p, const KoszulDual& kd,
                                          const GradedAlgebra& A, int w,
                                          const std::vector<std::vector<Rational>>* P = nullptr) {
    int ng = static_cast<int>(p.generators.size());
    std::vector<std::vector<Rational>> M(ng, std::vector<Rational>(ng)), Minv(ng, std::vector<Rational>(ng));
    for (int i = 0; i < ng; ++i) M[i][i] = Minv[i][i] = 1;
    if (P) {
        M = *P;
        // invert
        std::vector<std::vector<Rational>> aug(ng, std::vector<Rational>(2 * ng));
        for (int i = 0; i < ng; ++i) {
            for (int j = 0; j < ng; ++j) aug[i][j] = M[i][j];
            aug[i][ng + i] = 1;
        }
        for (int c = 0; c < ng; ++c) {
            int piv = -1;
            for (int r = c; r < ng; ++r)
                if (aug[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw MalformedInput("basis change is singular");
            std::swap(aug[piv], aug[c]);
            Rational inv = 1 / aug[c][c];
            for (auto& x : aug[c]) x *= inv;
            for (int r = 0; r < ng; ++r)
                if (r != c && aug[r][c] != 0) {
                    Rational f = aug[r][c];
                    for (int k = 0; k < 2 * ng; ++k) aug[r][k] -= f * aug[c][k];
                }
        }
        for (int i = 0; i < ng; ++i)
            for (int j = 0; j < ng; ++j) Minv[i][j] = aug[i][ng + j];
    }
    KoszulComplexWeight K;
    K.weight = w;
    K.basis.resize(w + 1);
    std::vector<std::map<std::pair<int, int>, int>> pos(w + 1);
    for (int i = 0; i <= w; ++i) {
        if (w - i > A.max_weight() || i > kd.max_weight) throw InvariantViolation("truncation exceeded");
        for (int a : A.by_weight(w - i))
            for (int f : kd.by_weight[i])
                if (A.sym(a).tgt == kd.coalg.basis[f].src) {
                    pos[i][{a, f}] = static_cast<int>(K.basis[i].size());
                    K.basis[i].push_back({a, f});
                }
    }
    // coordinates of suspended-word vectors in the weight-(i-1) basis
    auto coal_coords = [&](int m, const std::map<std::vector<int>, Rational>& v) {
        std::map<int, Rational> out;
        if (m == 0) {
            for (auto& [wd, c] : v) (void)wd, out[-1] += c;
            return out;
        }
        std::vector<SparseVec> cols;
        std::map<std::vector<int>, int> rowid;
        std::vector<std::map<std::vector<int>, Rational>> colv;
        for (int b : kd.by_weight[m]) colv.push_back(detail::suspended_vector(kd, p, b));
        for (auto& cv : colv)
            for (auto& [wd, c] : cv) rowid.emplace(wd, static_cast<int>(rowid.size()));
        for (auto& [wd, c] : v)
            if (!rowid.count(wd)) throw InvariantViolation("contraction leaves the Koszul dual");
        int nb = static_cast<int>(colv.size());
        SparseMatrix aug(static_cast<int>(rowid.size()), nb + 1);
        for (int j = 0; j < nb; ++j)
            for (auto& [wd, c] : colv[j]) aug.add(rowid[wd], j, c);
        for (auto& [wd, c] : v) aug.add(rowid[wd], nb, c);
        Echelon e(true);
        for (auto& r : aug.rows)
            if (!r.empty()) e.insert(r);
        for (auto& row : e.rref()) {
            if (row.front().first == nb) throw InvariantViolation("contraction leaves the Koszul dual");
            out[kd.by_weight[m][row.front().first]] = sparse_get(row, nb);
        }
        return out;
    };
    K.d.resize(w + 1);
    for (int i = 1; i <= w; ++i) {
        SparseMatrix D(static_cast<int>(K.basis[i - 1].size()), static_cast<int>(K.basis[i].size()));
        for (int col = 0; col < static_cast<int>(K.basis[i].size()); ++col) {
            auto [a, f] = K.basis[i][col];
            auto fv = detail::suspended_vector(kd, p, f);
            for (int e = 0; e < ng; ++e) {
                // contraction by (s e_e)^* = sum_j Minv[j][e] (s g_j)^*
                std::map<std::vector<int>, Rational> rest;
                for (auto& [wd, c] : fv) {
                    Rational k = Minv[wd[0]][e];
                    if (k == 0) continue;
                    rest[std::vector<int>(wd.begin() + 1, wd.end())] += k * c;
                }
                for (auto it = rest.begin(); it != rest.end();)
                    it = (it->second == 0) ? rest.erase(it) : std::next(it);
                if (rest.empty()) continue;
                // a * e_e = sum_j M[e][j] a g_j
                std::map<int, Rational> ag;
                for (int j = 0; j < ng; ++j)
                    if (M[e][j] != 0)
                        for (auto& [x, c] : A.mul(a, A.generator(j))) ag[x] += M[e][j] * c;
                if (i - 1 == 0) {
                    Rational tot = 0;
                    for (auto& [wd, c] : rest) tot += c;
                    for (auto& [x, c] : ag) {
                        if (c == 0) continue;
                        int v = A.sym(x).tgt;
                        auto it = pos[0].find({x, v});
                        if (it != pos[0].end()) D.add(it->second, col, c * tot);
                    }
                    continue;
                }
                auto rc = coal_coords(i - 1, rest);
                for (auto& [x, c1] : ag)
                    for (auto& [g, c2] : rc) {
                        if (c1 * c2 == 0) continue;
                        auto it = pos[i - 1].find({x, g});
                        if (it == pos[i - 1].end()) throw InvariantViolation("non-composable Koszul term");
                        D.add(it->second, col, c1 * c2);
                    }
            }
        }
        K.d[i] = D;
    }
    return K;
}

struct AcyclicityReport {
    // (weight, i) -> homology dimension of K_i in that weight
    std::map<std::pair<int, int>, int> homology;
    bool d_squared_zero = true;
    bool acyclic = true;
};

inline AcyclicityReport koszul_acyclicity_check(const QuadraticPresentation& p, int max_weight) {
    auto kd = koszul_dual(p, std::max(2, max_weight));
    GradedAlgebra A(p, max_weight);
    AcyclicityReport rep;
    for (int w = 1; w <= max_weight; ++w) {
        auto K = koszul_complex(p, kd, A, w);
        for (int i = 2; i <= w; ++i)
            if (!multiply(K.d[i - 1], K.d[i]).is_zero()) rep.d_squared_zero = false;
        for (int i = 0; i <= w; ++i) {
            int dim = static_cast<int>(K.basis[i].size());
            const SparseMatrix* din = i + 1 <= w ? &K.d[i + 1] : nullptr;
            const SparseMatrix* dout = i >= 1 ? &K.d[i] : nullptr;
            int h = homology_dim(dim, din, dout);
            rep.homology[{w, i}] = h;
            if (h != 0) rep.acyclic = false;
        }
    }
    return rep;
}

// ---------- cobar ----------

struct DGAlgebraPresentation {
    std::vector<Symbol> generators;  // desuspended reduced basis
    std::vector<int> source;         // coalgebra basis index of each generator
    std::vector<std::map<std::vector<int>, Rational>> diff;

    // Derivation extension: d(x1...xk) = sum (-1)^{|x1|+...+|x_{i-1}|} x1..d(xi)..xk
    std::map<std::vector<int>, Rational> apply(const std::map<std::vector<int>, Rational>& v) const {
        std::map<std::vector<int>, Rational> out;
        for (auto& [w, c] : v) {
            int pre = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                for (auto& [dw, dc] : diff[w[i]]) {
                    std::vector<int> nw(w.begin(), w.begin() + i);
                    nw.insert(nw.end(), dw.begin(), dw.end());
                    nw.insert(nw.end(), w.begin() + i + 1, w.end());
                    out[nw] += c * dc * parity_sign(pre);
                }
                pre += generators[w[i]].degree;
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = (it->second == 0) ? out.erase(it) : std::next(it);
        return out;
    }
    bool d_squared_zero() const {
        for (std::size_t g = 0; g < generators.size(); ++g)
            if (!apply(apply({{{static_cast<int>(g)}, Rational(1)}})).empty()) return false;
        return true;
    }
};

// d(s^{-1}c) = - sum (-1)^{|c'|} s^{-1}c' s^{-1}c'' over the reduced coproduct.
inline DGAlgebraPresentation cobar(const Coalgebra& c, int weight_bound) {
    DGAlgebraPresentation d;
    std::map<int, int> gen_of;
    for (int i : c.nonvertex()) {
        if (c.weight(i) > weight_bound) continue;
        gen_of[i] = static_cast<int>(d.generators.size());
        Symbol s = c.basis[i];
        s.id = "s^-1" + s.id;
        s.degree -= 1;
        d.generators.push_back(s);
        d.source.push_back(i);
    }
    d.diff.resize(d.generators.size());
    for (auto& [i, g] : gen_of)
        for (auto& t : c.reduced(i)) {
            if (!gen_of.count(t.l) || !gen_of.count(t.r)) continue;
            d.diff[g][{gen_of[t.l], gen_of[t.r]}] += -t.c * parity_sign(c.deg(t.l));
        }
    for (auto& m : d.diff)
        for (auto it = m.begin(); it != m.end();)
            it = (it->second == 0) ? m.erase(it) : std::next(it);
    if (!d.d_squared_zero()) throw InvariantViolation("cobar differential does not square to zero");
    return d;
}

// iota(c) = c + reduced(c) + reduced^2(c) + ..., as words of basis elements.
inline std::map<std::vector<int>, Rational> iota(const Coalgebra& c, int x, int depth) {
    if (depth < c.weight(x)) throw MalformedInput("iota: depth below the weight");
    std::map<std::vector<int>, Rational> total, cur{{{x}, Rational(1)}};
    for (int k = 0; k <= depth && !cur.empty(); ++k) {
        for (auto& [w, v] : cur) total[w] += v;
        std::map<std::vector<int>, Rational> nxt;
        for (auto& [w, v] : cur)
            for (auto& t : c.reduced(w.back())) {
                auto w2 = w;
                w2.back() = t.l;
                w2.push_back(t.r);
                nxt[w2] += v * t.c;
            }
        for (auto it = nxt.begin(); it != nxt.end();)
            it = (it->second == 0) ? nxt.erase(it) : std::next(it);
        cur = std::move(nxt);
    }
    for (auto it = total.begin(); it != total.end();)
        it = (it->second == 0) ? total.erase(it) : std::next(it);
    return total;
}

inline Coalgebra dual_numbers_coalgebra() {
    Coalgebra c;
    c.name = "dual numbers";
    c.basis = {{"1", 0, 0, 0, 0}, {"xi", 1, 1, 0, 0}};
    c.delta = {{{1, 0, 0}}, {{1, 0, 1}, {1, 1, 0}}};
    c.counit = {1, 0};
    validate_coalgebra(c);
    return c;
}

}  // namespace cyq
