#pragma once
// Necklace Lie bialgebra on cyclic words of a co-Frobenius coalgebra, and the
// co-Poisson bialgebra V_{h,hbar} generated by it.

#include <random>
#include <set>
#include <sstream>

#include "cyclic.hpp"
#include "report.hpp"

namespace cyq {

// Necklaces are stored as canonical cyclic words. The empty word is the central
// unit 1 produced when a splice or an arc is empty.
using NElem = std::map<Word, Rational>;
using NTensor = std::map<std::pair<Word, Word>, Rational>;

template <class K, class V>
void map_clean(std::map<K, V>& m) {
    for (auto it = m.begin(); it != m.end();) it = (it->second == 0) ? m.erase(it) : std::next(it);
}

// Differential on coinvariant representatives: each letter is split by the
// reduced coproduct, with the cobar sign. Vertex insertions cancel in pairs
// around a cyclic word, so this is the Connes b on non-vertex necklaces.
inline NElem necklace_boundary(const Coalgebra& C, const Word& x) {
    NElem out;
    std::vector<int> d;
    int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (auto& t : C.delta[x[i]]) {
            if (C.is_vertex(t.l) || C.is_vertex(t.r)) continue;
            Word w(x.begin(), x.begin() + i);
            w.push_back(t.l);
            w.push_back(t.r);
            w.insert(w.end(), x.begin() + i + 1, x.end());
            d.clear();
            for (int c : w) d.push_back(C.sdeg(c));
            auto cw = canonical_rotation(w, d);
            if (cw.sign == 0) continue;
            out[cw.word] -= t.c * parity_sign(acc + C.sdeg(t.l)) * cw.sign;
        }
        acc += C.sdeg(x[i]);
    }
    map_clean(out);
    return out;
}

class NecklaceBialgebra {
public:
    explicit NecklaceBialgebra(const Coalgebra& C) : C_(C) {
        if (!C.has_pairing) throw UnsupportedInput("necklace operations need a pairing");
        shift_ = 2 - C.pairing_degree;
    }

    const Coalgebra& coalgebra() const { return C_; }
    int shift() const { return shift_; }

    // Letters carry desuspended degrees |c| - 1.
    int letter_degree(int x) const { return C_.deg(x) - 1; }
    std::vector<int> degrees(const Word& w) const {
        std::vector<int> d;
        for (int x : w) d.push_back(letter_degree(x));
        return d;
    }
    int degree(const Word& w) const {
        int s = 0;
        for (int x : w) s += letter_degree(x);
        return s;
    }
    // Degree used by the graded Lie identities.
    int lie_degree(const Word& w) const { return degree(w) + shift_; }

    CanonicalWord canonical(const Word& w) const { return canonical_rotation(w, degrees(w)); }

    NElem necklace(const Word& w) const {
        auto cw = canonical(w);
        if (cw.sign == 0) return {};
        return {{cw.word, Rational(cw.sign)}};
    }

    bool cyclically_composable(const Word& w) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!C_.composable(w[i], w[(i + 1) % w.size()])) return false;
        return true;
    }

    // Canonical nonzero necklaces over the non-vertex letters with
    // 1 <= length <= max_length, ordered by length and then lexicographically.
    std::vector<Word> basis(int max_length) const {
        std::vector<Word> out;
        for (int n = 1; n <= max_length; ++n) {
            std::set<Word> seen;
            Word cur(n, 0);
            std::function<void(int)> go = [&](int k) {
                if (k == n) {
                    if (!cyclically_composable(cur)) return;
                    auto cw = canonical(cur);
                    if (cw.sign != 0 && cw.word == cur) seen.insert(cur);
                    return;
                }
                for (int x = 0; x < C_.size(); ++x) {
                    if (C_.is_vertex(x)) continue;
                    cur[k] = x;
                    go(k + 1);
                }
            };
            go(0);
            out.insert(out.end(), seen.begin(), seen.end());
        }
        return out;
    }

    // {x, y}: splice at every pair of letters with nonzero pairing. Signs come
    // from transporting the paired letters to the front of x followed by y.
    const NElem& bracket(const Word& x, const Word& y) const {
        auto key = std::make_pair(x, y);
        auto it = bracket_memo_.find(key);
        if (it != bracket_memo_.end()) return it->second;
        NElem out;
        int n = static_cast<int>(x.size()), m = static_cast<int>(y.size());
        Word src = x;
        src.insert(src.end(), y.begin(), y.end());
        auto deg = degrees(src);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) {
                Rational p = C_.pair(x[i], y[j]);
                if (p == 0) continue;
                std::vector<int> target{i, n + j};
                for (int k = 0; k < j; ++k) target.push_back(n + k);
                for (int k = i + 1; k < n; ++k) target.push_back(k);
                for (int k = 0; k < i; ++k) target.push_back(k);
                for (int k = j + 1; k < m; ++k) target.push_back(n + k);
                Word w;
                for (std::size_t t = 2; t < target.size(); ++t) w.push_back(src[target[t]]);
                auto cw = canonical(w);
                if (cw.sign == 0) continue;
                out[cw.word] += p * transport_sign(deg, target) * cw.sign;
            }
        }
        map_clean(out);
        return bracket_memo_.emplace(key, std::move(out)).first->second;
    }

    NElem bracket(const NElem& x, const NElem& y) const {
        NElem out;
        for (auto& [u, a] : x)
            for (auto& [v, b] : y)
                for (auto& [w, c] : bracket(u, v)) out[w] += a * b * c;
        map_clean(out);
        return out;
    }

    // delta(x) = sum_{i<j} <x_i, x_j> (A (x) B - B (x) A) up to transport signs,
    // A the arc strictly between i and j, B the complementary arc.
    const NTensor& cobracket(const Word& x) const {
        auto it = cobracket_memo_.find(x);
        if (it != cobracket_memo_.end()) return it->second;
        NTensor out;
        int n = static_cast<int>(x.size());
        auto deg = degrees(x);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Rational p = C_.pair(x[i], x[j]);
                if (p == 0) continue;
                std::vector<int> inner, outer;
                for (int k = i + 1; k < j; ++k) inner.push_back(k);
                for (int k = j + 1; k < n; ++k) outer.push_back(k);
                for (int k = 0; k < i; ++k) outer.push_back(k);
                auto term = [&](const std::vector<int>& l, const std::vector<int>& r, int sgn) {
                    std::vector<int> target{i, j};
                    target.insert(target.end(), l.begin(), l.end());
                    target.insert(target.end(), r.begin(), r.end());
                    Word wl, wr;
                    for (int k : l) wl.push_back(x[k]);
                    for (int k : r) wr.push_back(x[k]);
                    auto cl = canonical(wl), cr = canonical(wr);
                    if (cl.sign == 0 || cr.sign == 0) return;
                    out[{cl.word, cr.word}] += p * sgn * transport_sign(deg, target) * cl.sign * cr.sign;
                };
                term(inner, outer, 1);
                term(outer, inner, -1);
            }
        }
        map_clean(out);
        if (out.count({Word{}, Word{}})) throw InvariantViolation("1 (x) 1 terms of the cobracket do not cancel");
        return cobracket_memo_.emplace(x, std::move(out)).first->second;
    }

    NTensor cobracket(const NElem& x) const {
        NTensor out;
        for (auto& [u, a] : x)
            for (auto& [k, c] : cobracket(u)) out[k] += a * c;
        map_clean(out);
        return out;
    }

    NElem boundary(const Word& x) const { return necklace_boundary(C_, x); }

    NElem boundary(const NElem& x) const {
        NElem out;
        for (auto& [u, a] : x)
            for (auto& [w, c] : boundary(u)) out[w] += a * c;
        map_clean(out);
        return out;
    }

    std::string to_string(const Word& w) const {
        std::string s = "[";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + C_.basis[w[i]].id;
        return s + "]";
    }
    std::string to_string(const NElem& x) const {
        if (x.empty()) return "0";
        std::string s;
        for (auto& [w, c] : x) s += (s.empty() ? "" : " + ") + c.get_str() + "*" + to_string(w);
        return s;
    }
    std::string to_string(const NTensor& x) const {
        if (x.empty()) return "0";
        std::string s;
        for (auto& [k, c] : x)
            s += (s.empty() ? "" : " + ") + c.get_str() + "*" + to_string(k.first) + "(x)" + to_string(k.second);
        return s;
    }

private:
    const Coalgebra& C_;
    int shift_ = 0;
    mutable std::map<std::pair<Word, Word>, NElem> bracket_memo_;
    mutable std::map<Word, NTensor> cobracket_memo_;
};

// ---------- tensor helpers ----------

namespace detail {

// (u (x) v) -> (-1)^{|u||v|} v (x) u
inline NTensor flip(const NecklaceBialgebra& L, const NTensor& t) {
    NTensor out;
    for (auto& [k, c] : t)
        out[{k.second, k.first}] += c * parity_sign(L.lie_degree(k.first) * L.lie_degree(k.second));
    map_clean(out);
    return out;
}

// x . (u (x) v) = {x,u} (x) v + (-1)^{|x||u|} u (x) {x,v}
inline NTensor ad_action(const NecklaceBialgebra& L, const Word& x, const NTensor& t) {
    NTensor out;
    for (auto& [k, c] : t) {
        for (auto& [w, b] : L.bracket(x, k.first)) out[{w, k.second}] += c * b;
        int s = parity_sign(L.lie_degree(x) * L.lie_degree(k.first));
        for (auto& [w, b] : L.bracket(x, k.second)) out[{k.first, w}] += c * b * s;
    }
    map_clean(out);
    return out;
}

inline void add_into(NElem& acc, const NElem& x, const Rational& s = 1) {
    for (auto& [w, c] : x) acc[w] += s * c;
}
inline void add_into(NTensor& acc, const NTensor& x, const Rational& s = 1) {
    for (auto& [w, c] : x) acc[w] += s * c;
}

using Triple = std::map<std::vector<Word>, Rational>;

}  // namespace detail

struct LieBialgebraOptions {
    bool antisymmetry = true, jacobi = true, co_antisymmetry = true, co_jacobi = true, cocycle = true,
         involutive = true, boundary = true;
};

// Exhaustive check of the involutive DG Lie bialgebra identities on necklaces
// of length <= max_length.
inline Report verify_lie_bialgebra(const Coalgebra& C, int max_length, const LieBialgebraOptions& opt = {}) {
    NecklaceBialgebra L(C);
    Report r;
    auto B = L.basis(max_length);
    auto sd = [&](const Word& w) { return L.lie_degree(w); };
    bool unit_seen = false;
    auto note_unit = [&](const NElem& x) {
        if (x.count(Word{})) unit_seen = true;
    };

    // 1 is central and has no cobracket
    for (auto& x : B) {
        r.count("unit central");
        if (!L.bracket(Word{}, x).empty() || !L.bracket(x, Word{}).empty())
            r.fail("unit central", "{1, " + L.to_string(x) + "} != 0");
    }
    if (!L.cobracket(Word{}).empty()) r.fail("unit central", "delta(1) != 0");

    for (auto& x : B) {
        for (auto& y : B) {
            NElem xy = L.bracket(x, y);
            note_unit(xy);
            if (opt.antisymmetry) {
                r.count("antisymmetry");
                NElem s = xy;
                detail::add_into(s, L.bracket(y, x), parity_sign(sd(x) * sd(y)));
                map_clean(s);
                if (!s.empty())
                    r.fail("antisymmetry", "{" + L.to_string(x) + "," + L.to_string(y) + "} + sign*{y,x} = " +
                                               L.to_string(s));
            }
            if (opt.cocycle) {
                // delta{x,y} = x.delta(y) - (-1)^{|x||y|} y.delta(x)
                r.count("cocycle");
                NTensor lhs = L.cobracket(xy);
                detail::add_into(lhs, detail::ad_action(L, x, L.cobracket(y)), -1);
                detail::add_into(lhs, detail::ad_action(L, y, L.cobracket(x)), parity_sign(sd(x) * sd(y)));
                map_clean(lhs);
                if (!lhs.empty())
                    r.fail("cocycle", "x=" + L.to_string(x) + " y=" + L.to_string(y) + ": " + L.to_string(lhs));
            }
            if (opt.boundary) {
                // b{x,y} = {bx,y} + (-1)^{|x|}{x,by}
                r.count("boundary derivation");
                NElem lhs = L.boundary(xy);
                detail::add_into(lhs, L.bracket(L.boundary(x), NElem{{y, 1}}), -1);
                detail::add_into(lhs, L.bracket(NElem{{x, 1}}, L.boundary(y)), -parity_sign(sd(x)));
                map_clean(lhs);
                if (!lhs.empty())
                    r.fail("boundary derivation",
                           "x=" + L.to_string(x) + " y=" + L.to_string(y) + ": " + L.to_string(lhs));
            }
        }
    }

    if (opt.jacobi) {
        // J(x,y,z) is graded antisymmetric once antisymmetry holds, so sorted
        // triples cover all of them.
        int nb = static_cast<int>(B.size());
        for (int i = 0; i < nb; ++i)
            for (int j = i; j < nb; ++j)
                for (int k = j; k < nb; ++k) {
                    const Word &x = B[k], &y = B[j], &z = B[i];
                    r.count("jacobi");
                    NElem s = L.bracket(NElem{{x, 1}}, L.bracket(y, z));
                    detail::add_into(s, L.bracket(L.bracket(x, y), NElem{{z, 1}}), -1);
                    detail::add_into(s, L.bracket(NElem{{y, 1}}, L.bracket(x, z)), -parity_sign(sd(x) * sd(y)));
                    map_clean(s);
                    if (!s.empty())
                        r.fail("jacobi", "(" + L.to_string(x) + "," + L.to_string(y) + "," + L.to_string(z) +
                                             "): " + L.to_string(s));
                }
    }

    for (auto& x : B) {
        const NTensor& dx = L.cobracket(x);
        for (auto& [k, c] : dx)
            if (k.first.empty() || k.second.empty()) unit_seen = true;
        if (opt.co_antisymmetry) {
            r.count("co-antisymmetry");
            NTensor s = dx;
            detail::add_into(s, detail::flip(L, dx));
            map_clean(s);
            if (!s.empty()) r.fail("co-antisymmetry", L.to_string(x) + ": " + L.to_string(s));
        }
        if (opt.co_jacobi) {
            // (1 + xi + xi^2)(delta (x) 1) delta = 0, xi the cyclic shift u(x)v(x)w -> w(x)u(x)v
            r.count("co-jacobi");
            detail::Triple t, sum;
            for (auto& [k, c] : dx)
                for (auto& [k2, c2] : L.cobracket(k.first)) t[{k2.first, k2.second, k.second}] += c * c2;
            for (auto& [w, c] : t) {
                sum[w] += c;
                int s1 = parity_sign(sd(w[2]) * (sd(w[0]) + sd(w[1])));
                sum[{w[2], w[0], w[1]}] += c * s1;
                int s2 = parity_sign((sd(w[1]) + sd(w[2])) * sd(w[0]));
                sum[{w[1], w[2], w[0]}] += c * s2;
            }
            map_clean(sum);
            if (!sum.empty()) r.fail("co-jacobi", L.to_string(x));
        }
        if (opt.involutive) {
            r.count("involutivity");
            NElem s;
            for (auto& [k, c] : dx) detail::add_into(s, L.bracket(k.first, k.second), c);
            map_clean(s);
            if (!s.empty()) r.fail("involutivity", L.to_string(x) + ": " + L.to_string(s));
        }
        if (opt.boundary) {
            // delta b = (b (x) 1 + 1 (x) b) delta
            r.count("boundary coderivation");
            NTensor lhs = L.cobracket(L.boundary(x));
            for (auto& [k, c] : dx) {
                for (auto& [w, b] : L.boundary(k.first)) lhs[{w, k.second}] -= c * b;
                for (auto& [w, b] : L.boundary(k.second)) lhs[{k.first, w}] -= c * b * parity_sign(sd(k.first));
            }
            map_clean(lhs);
            if (!lhs.empty()) r.fail("boundary coderivation", L.to_string(x) + ": " + L.to_string(lhs));
        }
        if (opt.boundary) {
            r.count("boundary squares to zero");
            if (!L.boundary(L.boundary(x)).empty()) r.fail("boundary squares to zero", L.to_string(x));
        }
    }
    if (unit_seen) r.notes.push_back("outputs contain the length-0 necklace 1");
    return r;
}

// ---------- V_{h,hbar} ----------

using VMono = std::vector<Word>;  // ordered product of necklace generators; {} is the unit
using VElem = std::map<VMono, Scalar>;
using VTensor = std::map<std::pair<VMono, VMono>, Scalar>;

// Tensor algebra on necklaces over k[h,hbar] modulo xy - (-1)^{|x||y|} yx - h{x,y}.
// Monomials are normal-formed to nondecreasing (length, lex) order.
class Vhh {
public:
    explicit Vhh(const NecklaceBialgebra& L) : L_(L) {}

    const NecklaceBialgebra& lie() const { return L_; }

    static bool precedes(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    int degree(const VMono& m) const {
        int d = 0;
        for (auto& w : m) d += L_.lie_degree(w);
        return d;
    }

    static VElem generator(const Word& w) { return {{VMono{w}, Scalar(1)}}; }

    const VElem& normal_form(const VMono& m) const {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        VElem out;
        std::size_t i = 0;
        for (; i + 1 < m.size(); ++i) {
            if (precedes(m[i + 1], m[i])) break;
            if (m[i] == m[i + 1] && (L_.lie_degree(m[i]) & 1)) break;
        }
        if (i + 1 >= m.size()) {
            out[m] = Scalar(1);
        } else {
            const Word &x = m[i], &y = m[i + 1];
            auto splice = [&](const Word& z) {
                VMono r(m.begin(), m.begin() + i);
                r.push_back(z);
                r.insert(r.end(), m.begin() + i + 2, m.end());
                return r;
            };
            if (x == y) {
                // xx = -xx + h{x,x} for odd x
                for (auto& [z, c] : L_.bracket(x, x))
                    for (auto& [t, s] : normal_form(splice(z))) out[t] += s * Scalar::h().scaled(c / 2);
            } else {
                // xy = (-1)^{|x||y|} yx + h{x,y}
                VMono sw = m;
                std::swap(sw[i], sw[i + 1]);
                int sg = parity_sign(L_.lie_degree(x) * L_.lie_degree(y));
                for (auto& [t, s] : normal_form(sw)) out[t] += s.scaled(sg);
                for (auto& [z, c] : L_.bracket(x, y))
                    for (auto& [t, s] : normal_form(splice(z))) out[t] += s * Scalar::h().scaled(c);
            }
        }
        map_clean_scalar(out);
        return memo_.emplace(m, std::move(out)).first->second;
    }

    VElem normal_form(const VElem& x) const {
        VElem out;
        for (auto& [m, c] : x)
            for (auto& [t, s] : normal_form(m)) out[t] += c * s;
        map_clean_scalar(out);
        return out;
    }

    VElem product(const VElem& x, const VElem& y) const {
        VElem raw;
        for (auto& [a, c] : x)
            for (auto& [b, d] : y) {
                VMono m = a;
                m.insert(m.end(), b.begin(), b.end());
                raw[m] += c * d;
            }
        return normal_form(raw);
    }

    VTensor normal_form(const VTensor& t) const {
        VTensor out;
        for (auto& [k, c] : t)
            for (auto& [l, s] : normal_form(k.first))
                for (auto& [r, u] : normal_form(k.second)) out[{l, r}] += c * s * u;
        map_clean_scalar(out);
        return out;
    }

    // (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd
    VTensor product(const VTensor& x, const VTensor& y) const {
        VTensor raw;
        for (auto& [k1, c1] : x)
            for (auto& [k2, c2] : y) {
                VMono l = k1.first, r = k1.second;
                l.insert(l.end(), k2.first.begin(), k2.first.end());
                r.insert(r.end(), k2.second.begin(), k2.second.end());
                raw[{l, r}] += (c1 * c2).scaled(parity_sign(degree(k1.second) * degree(k2.first)));
            }
        return normal_form(raw);
    }

    // Necklaces (including 1) are primitive; Delta is multiplicative.
    VTensor coproduct(const VMono& m) const {
        VTensor acc{{{VMono{}, VMono{}}, Scalar(1)}};
        for (auto& g : m) acc = product(acc, primitive(g));
        return acc;
    }
    VTensor coproduct(const VElem& x) const {
        VTensor out;
        for (auto& [m, c] : x)
            for (auto& [k, s] : coproduct(m)) out[k] += c * s;
        map_clean_scalar(out);
        return out;
    }

    // nu = hbar * delta on generators, extended by nu(ab) = nu(a)Delta(b) + Delta(a)nu(b).
    VTensor cobracket(const VMono& m) const {
        VTensor out;
        for (std::size_t i = 0; i < m.size(); ++i) {
            VMono left(m.begin(), m.begin() + i), right(m.begin() + i + 1, m.end());
            VTensor t = product(product(coproduct(left), generator_cobracket(m[i])), coproduct(right));
            for (auto& [k, s] : t) out[k] += s;
        }
        map_clean_scalar(out);
        return out;
    }
    VTensor cobracket(const VElem& x) const {
        VTensor out;
        for (auto& [m, c] : x)
            for (auto& [k, s] : cobracket(m)) out[k] += c * s;
        map_clean_scalar(out);
        return out;
    }

    std::string to_string(const VMono& m) const {
        if (m.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "." : "") + L_.to_string(m[i]);
        return s;
    }
    std::string to_string(const VElem& x) const {
        if (x.empty()) return "0";
        std::string s;
        for (auto& [m, c] : x) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")*") + to_string(m);
        return s;
    }

private:
    template <class M>
    static void map_clean_scalar(M& m) {
        for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
    }
    VTensor primitive(const Word& g) const {
        return {{{VMono{g}, VMono{}}, Scalar(1)}, {{VMono{}, VMono{g}}, Scalar(1)}};
    }
    VTensor generator_cobracket(const Word& g) const {
        VTensor out;
        for (auto& [k, c] : L_.cobracket(g)) out[{VMono{k.first}, VMono{k.second}}] += Scalar::hbar().scaled(c);
        map_clean_scalar(out);
        return out;
    }

    const NecklaceBialgebra& L_;
    mutable std::map<VMono, VElem> memo_;
};

// nu(ab) = nu(a)Delta(b) + Delta(a)nu(b) with both sides normal-formed. Pairs of
// generators up to max_length are checked exhaustively; `samples` seeded random
// products of up to three generators are checked in addition.
inline Report vhh_verify_copoisson(const Coalgebra& C, int max_length, int samples = 0, unsigned seed = 1) {
    NecklaceBialgebra L(C);
    Vhh V(L);
    Report r;
    auto B = L.basis(max_length);
    std::vector<VElem> gens;
    gens.push_back(Vhh::generator(Word{}));
    for (auto& w : B) gens.push_back(Vhh::generator(w));
    auto check = [&](const VElem& a, const VElem& b) {
        r.count("co-Poisson");
        VTensor lhs = V.cobracket(V.product(a, b));
        VTensor rhs = V.product(V.cobracket(a), V.coproduct(b));
        for (auto& [k, s] : V.product(V.coproduct(a), V.cobracket(b))) rhs[k] += s;
        for (auto& [k, s] : rhs) lhs[k] -= s;
        for (auto it = lhs.begin(); it != lhs.end();) it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
        if (!lhs.empty()) r.fail("co-Poisson", "a=" + V.to_string(a) + " b=" + V.to_string(b));
    };
    for (auto& a : gens)
        for (auto& b : gens) check(a, b);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1), len(1, 3);
    auto random_mono = [&]() {
        VElem m{{VMono{}, Scalar(1)}};
        int k = len(rng);
        for (int i = 0; i < k; ++i) m = V.product(m, gens[pick(rng)]);
        return m;
    };
    for (int s = 0; s < samples; ++s) check(random_mono(), random_mono());
    return r;
}

}  // namespace cyq
