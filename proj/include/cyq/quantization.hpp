#pragma once
// The Hopf algebra of height words: components are cyclic words whose letters
// carry pairwise distinct integer heights, modulo order-preserving relabeling
// and the merge/split rewriting relations. Product, differential, m-coloring
// coproduct, antipode, PBW normal form and the quantization verifier.

#include <functional>
#include <random>

#include "lqt.hpp"

namespace cyq {

struct HLetter {
    int sym = 0;
    int height = 0;
    auto operator<=>(const HLetter&) const = default;
};
using Component = std::vector<HLetter>;   // a cyclic word; empty is the length-0 necklace E
using HeightWord = std::vector<Component>;  // symmetric product of components; {} is the unit
using HopfElement = std::map<HeightWord, Scalar>;
using HopfTensor = std::map<std::vector<HeightWord>, Scalar>;

template <class M>
void scalar_clean(M& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

enum class RewriteOrder { SmallestFirst, LargestFirst };

struct QuantizationOptions {
    RewriteOrder order = RewriteOrder::SmallestFirst;
    bool drop_split_term = false;  // mutation switch used by negative tests
};

struct Coloring {
    std::vector<int> phi;      // partner of each flat position, -1 outside I
    std::vector<int> color;    // color of each flat position, 1..m
    std::vector<int> e_color;  // colors of the empty components
};

class HopfQuantization {
public:
    // Sign conventions of the relations: X = X' + X'' with X'' carrying
    // kMerge * h or kSplit * hbar times <lower, higher>.
    static constexpr int kMerge = 1;
    static constexpr int kSplit = -1;

    explicit HopfQuantization(const Coalgebra& C, QuantizationOptions opt = {}) : C_(C), opt_(opt) {
        if (!C.has_pairing) throw UnsupportedInput("quantization needs a co-Frobenius pairing");
        if (C.pairing_degree % 2 != 0) throw UnsupportedInput("quantization is implemented for even pairing degree");
    }

    const Coalgebra& coalgebra() const { return C_; }
    const QuantizationOptions& options() const { return opt_; }
    long rewrites() const { return rewrites_; }

    int sdeg(int sym) const { return C_.deg(sym) - 1; }
    int degree(const Component& c) const {
        int d = 0;
        for (auto& l : c) d += sdeg(l.sym);
        return d;
    }
    int degree(const HeightWord& w) const {
        int d = 0;
        for (auto& c : w) d += degree(c);
        return d;
    }
    static int letters(const HeightWord& w) {
        int n = 0;
        for (auto& c : w) n += static_cast<int>(c.size());
        return n;
    }
    static HeightWord unit() { return {}; }
    static HeightWord empty_component() { return {Component{}}; }

    // ---------- canonical form ----------

    // Relabel heights to 1..N, rotate each component to its least (letters,
    // heights) rotation and sort components, tracking Koszul signs.
    std::pair<HeightWord, int> canonicalize(HeightWord w) const {
        std::vector<int> hs;
        for (auto& c : w)
            for (auto& l : c) {
                if (C_.is_vertex(l.sym)) throw UnsupportedInput("height words use non-vertex letters only");
                hs.push_back(l.height);
            }
        std::sort(hs.begin(), hs.end());
        if (std::adjacent_find(hs.begin(), hs.end()) != hs.end()) throw MalformedInput("duplicate heights in a height word");
        for (auto& c : w)
            for (auto& l : c) l.height = static_cast<int>(std::lower_bound(hs.begin(), hs.end(), l.height) - hs.begin()) + 1;
        int sign = 1;
        for (auto& c : w) sign *= rotate_least(c);
        // insertion sort with block Koszul signs
        for (std::size_t i = 1; i < w.size(); ++i)
            for (std::size_t j = i; j > 0 && component_less(w[j], w[j - 1]); --j) {
                sign *= parity_sign(degree(w[j]) * degree(w[j - 1]));
                std::swap(w[j], w[j - 1]);
            }
        return {w, sign};
    }

    HopfElement element(const HeightWord& raw, const Scalar& c = Scalar(1)) const {
        auto [w, s] = canonicalize(raw);
        HopfElement out;
        out[w] = c.scaled(s);
        scalar_clean(out);
        return out;
    }

    // Lift of a necklace: its canonical rotation with heights 1..n.
    HeightWord lift(const Word& necklace) const {
        Component c;
        for (std::size_t k = 0; k < necklace.size(); ++k) c.push_back({necklace[k], static_cast<int>(k) + 1});
        return {c};
    }

    // Number of pairs listed in one order whose heights are in the other.
    static long inversions(const HeightWord& w) {
        std::vector<int> hs;
        for (auto& c : w)
            for (auto& l : c) hs.push_back(l.height);
        long n = 0;
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t j = i + 1; j < hs.size(); ++j) n += hs[i] > hs[j];
        return n;
    }

    // ---------- straightening ----------

    const HopfElement& straighten(const HeightWord& canonical) const {
        auto it = memo_.find(canonical);
        if (it != memo_.end()) return it->second;
        HopfElement out = straighten_uncached(canonical);
        return memo_.emplace(canonical, std::move(out)).first->second;
    }
    HopfElement straighten(const HopfElement& x) const {
        HopfElement out;
        for (auto& [w, c] : x)
            for (auto& [v, e] : straighten(w)) out[v] += c * e;
        scalar_clean(out);
        return out;
    }
    // Straighten a raw (non-canonical) word.
    HopfElement normal_form(const HeightWord& raw) const { return straighten(element(raw)); }

    // ---------- product and differential ----------

    static HeightWord raw_product(const HeightWord& x, const HeightWord& y) {
        int top = 0;
        for (auto& c : x)
            for (auto& l : c) top = std::max(top, l.height);
        int low = std::numeric_limits<int>::max();
        for (auto& c : y)
            for (auto& l : c) low = std::min(low, l.height);
        int shift = low == std::numeric_limits<int>::max() ? 0 : top - low + 1;
        HeightWord out = x;
        for (auto c : y) {
            for (auto& l : c) l.height += shift;
            out.push_back(c);
        }
        return out;
    }
    HopfElement product(const HopfElement& x, const HopfElement& y) const {
        HopfElement out;
        for (auto& [u, a] : x)
            for (auto& [v, b] : y)
                for (auto& [w, c] : normal_form(raw_product(u, v))) out[w] += a * b * c;
        scalar_clean(out);
        return out;
    }

    // Split one letter by the reduced coproduct: (c', h), (c'', h + 1), heights
    // above h move up by one. Signs follow the necklace boundary.
    HopfElement differential_raw(const HeightWord& w) const {
        HopfElement out;
        int acc = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w[i].size(); ++j) {
                const HLetter x = w[i][j];
                for (auto& t : C_.reduced(x.sym)) {
                    HeightWord v = w;
                    for (auto& c : v)
                        for (auto& l : c) l.height = 2 * l.height;
                    Component& c = v[i];
                    c[j] = {t.l, 2 * x.height};
                    c.insert(c.begin() + static_cast<long>(j) + 1, HLetter{t.r, 2 * x.height + 1});
                    auto [cw, s] = canonicalize(v);
                    out[cw] -= Scalar(t.c * parity_sign(acc + sdeg(t.l)) * s);
                }
                acc += sdeg(x.sym);
            }
        scalar_clean(out);
        return out;
    }
    HopfElement differential(const HeightWord& w) const { return straighten(differential_raw(w)); }
    HopfElement differential(const HopfElement& x) const {
        HopfElement out;
        for (auto& [w, c] : x)
            for (auto& [v, e] : differential(w)) out[v] += c * e;
        scalar_clean(out);
        return out;
    }

    // ---------- colorings and coproduct ----------

    std::vector<Coloring> colorings(const HeightWord& w, int m) const {
        if (m < 1) throw MalformedInput("colorings need m >= 1");
        std::vector<Coloring> out;
        enumerate_colorings(w, m, [&](const Coloring& c, const ColoringData&) { out.push_back(c); });
        return out;
    }

    struct ColoringTerm {
        Coloring coloring;
        std::vector<HeightWord> factors;  // canonical, not straightened
        Scalar coefficient;
    };

    // One summand of Delta_m per coloring of a canonical word.
    std::vector<ColoringTerm> coloring_terms(const HeightWord& w, int m) const {
        std::vector<ColoringTerm> out;
        std::vector<int> flat_deg;
        for (auto& c : w)
            for (auto& l : c) flat_deg.push_back(sdeg(l.sym));
        enumerate_colorings(w, m, [&](const Coloring& col, const ColoringData& d) {
            int nI = 0;
            for (int p : col.phi) nI += p >= 0;
            int N = d.components - d.orbits;
            if ((nI + 2 * N) % 4 != 0 || (nI - 2 * N) % 4 != 0 || nI + 2 * N < 0 || nI - 2 * N < 0)
                throw InvariantViolation("non-integral h, hbar exponents for a coloring of " + to_string(w));
            Rational eps = 1;
            std::vector<int> target;
            for (int p = 0; p < static_cast<int>(col.phi.size()); ++p) {
                int q = col.phi[p];
                if (q < 0 || col.color[p] < col.color[q]) continue;
                // the higher-colored letter is paired first
                eps *= C_.pair(d.flat[p].sym, d.flat[q].sym);
                target.push_back(p);
                target.push_back(q);
            }
            std::vector<HeightWord> factors(m);
            for (int s = 1; s <= m; ++s) {
                for (auto& orbit : d.orbit_members) {
                    if (col.color[orbit.front()] != s) continue;
                    Component comp;
                    for (int p : orbit)
                        if (col.phi[p] < 0) {
                            comp.push_back(d.flat[p]);
                            target.push_back(p);
                        }
                    factors[s - 1].push_back(comp);
                }
                for (int ec : col.e_color)
                    if (ec == s) factors[s - 1].push_back(Component{});
            }
            int sign = transport_sign(flat_deg, target);
            for (auto& f : factors) {
                auto [cf, s] = canonicalize(f);
                f = cf;
                sign *= s;
            }
            out.push_back({col, factors, Scalar::monomial((nI + 2 * N) / 4, (nI - 2 * N) / 4, eps * sign)});
        });
        return out;
    }

    // Delta_m on one canonical word; factors canonical but not straightened.
    HopfTensor coproduct_raw(const HeightWord& w, int m) const {
        HopfTensor out;
        for (auto& t : coloring_terms(w, m)) out[t.factors] += t.coefficient;
        scalar_clean(out);
        return out;
    }

    HopfTensor straighten(const HopfTensor& t) const {
        HopfTensor out;
        for (auto& [fs, c] : t) {
            std::vector<std::pair<std::vector<HeightWord>, Scalar>> acc{{{}, c}};
            for (auto& f : fs) {
                std::vector<std::pair<std::vector<HeightWord>, Scalar>> next;
                for (auto& [pre, a] : acc)
                    for (auto& [w, b] : straighten(f)) {
                        auto v = pre;
                        v.push_back(w);
                        next.emplace_back(std::move(v), a * b);
                    }
                acc = std::move(next);
            }
            for (auto& [k, v] : acc) out[k] += v;
        }
        scalar_clean(out);
        return out;
    }

    HopfTensor coproduct(const HeightWord& canonical, int m = 2) const {
        if (m == 2) {
            auto it = delta_memo_.find(canonical);
            if (it != delta_memo_.end()) return it->second;
        }
        HopfTensor out = straighten(coproduct_raw(canonical, m));
        if (m == 2) delta_memo_.emplace(canonical, out);
        return out;
    }
    HopfTensor coproduct(const HopfElement& x, int m = 2) const {
        HopfTensor out;
        for (auto& [w, c] : x)
            for (auto& [k, e] : coproduct(w, m)) out[k] += c * e;
        scalar_clean(out);
        return out;
    }

    static Scalar counit(const HopfElement& x) {
        auto it = x.find(HeightWord{});
        return it == x.end() ? Scalar() : it->second;
    }

    HopfElement antipode(const HeightWord& canonical) const {
        auto it = antipode_memo_.find(canonical);
        if (it != antipode_memo_.end()) return it->second;
        HopfElement out;
        if (canonical.empty()) {
            out[canonical] = Scalar(1);
        } else {
            out[canonical] -= Scalar(1);
            for (auto& [k, c] : coproduct(canonical)) {
                if (k[0].empty() || k[1].empty()) continue;
                HopfElement s = antipode(k[0]);
                for (auto& [w, e] : product(s, HopfElement{{k[1], Scalar(1)}})) out[w] -= c * e;
            }
            scalar_clean(out);
        }
        antipode_memo_.emplace(canonical, out);
        return out;
    }
    HopfElement antipode(const HopfElement& x) const {
        HopfElement out;
        for (auto& [w, c] : x)
            for (auto& [v, e] : antipode(w)) out[v] += c * e;
        scalar_clean(out);
        return out;
    }

    // ---------- classical limits ----------

    // h-linear part of the graded commutator of two lifted necklaces, read as a
    // necklace; false if an h-free term survives or the h-linear part is not
    // a sum of single necklaces.
    bool bracket_limit(const Word& x, const Word& y, NElem& out) const {
        HeightWord lx = lift(x), ly = lift(y);
        HopfElement X{{lx, Scalar(1)}}, Y{{ly, Scalar(1)}};
        HopfElement c = product(X, Y);
        int s = parity_sign(degree(lx) * degree(ly));
        for (auto& [w, e] : product(Y, X)) c[w] -= e.scaled(s);
        scalar_clean(c);
        out.clear();
        for (auto& [w, e] : c) {
            for (auto& [m, q] : e.terms())
                if (m.first == 0) return false;
            Rational k = e.coeff(1, 0);
            if (k == 0) continue;
            if (w.size() != 1) return false;
            out[forget_heights(w)[0]] += k;
        }
        map_clean(out);
        return true;
    }

    // hbar-linear, h-free part of Delta - Delta^op on a lifted necklace.
    bool cobracket_limit(const Word& x, NTensor& out) const {
        HopfTensor d = coproduct(lift(x));
        HopfTensor diff = d;
        for (auto& [k, e] : d) {
            int s = parity_sign(degree(k[0]) * degree(k[1]));
            diff[{k[1], k[0]}] -= e.scaled(s);
        }
        scalar_clean(diff);
        out.clear();
        for (auto& [k, e] : diff) {
            for (auto& [m, q] : e.terms())
                if (m.first == 0 && m.second == 0) return false;
            Rational c = e.coeff(0, 1);
            if (c == 0) continue;
            if (k[0].size() != 1 || k[1].size() != 1) return false;
            out[{forget_heights(k[0])[0], forget_heights(k[1])[0]}] += c;
        }
        map_clean(out);
        return true;
    }

    // ---------- PBW ----------

    // Necklace words of the components of a normal word; the map to the
    // symmetric algebra that forgets heights.
    std::vector<Word> forget_heights(const HeightWord& w) const {
        std::vector<Word> out;
        for (auto& c : w) {
            Word u;
            for (auto& l : c) u.push_back(l.sym);
            out.push_back(u);
        }
        return out;
    }

    // Height words in the PBW layout: sorted products of nonzero necklaces,
    // each a contiguous block of increasing heights; odd necklaces at most once.
    std::vector<HeightWord> basis(int max_letters) const {
        NecklaceBialgebra L(C_);
        auto gens = L.basis(max_letters);
        std::vector<HeightWord> out;
        std::vector<Word> cur;
        std::function<void(std::size_t, int)> go = [&](std::size_t from, int left) {
            if (!cur.empty()) out.push_back(layout(cur));
            for (std::size_t k = from; k < gens.size(); ++k) {
                int len = static_cast<int>(gens[k].size());
                if (len > left) continue;
                bool odd = L.degree(gens[k]) % 2 != 0;
                cur.push_back(gens[k]);
                go(odd ? k + 1 : k, left - len);
                cur.pop_back();
            }
        };
        go(0, max_letters);
        return out;
    }

    HeightWord layout(const std::vector<Word>& necklaces) const {
        HeightWord w;
        int h = 0;
        for (auto& n : necklaces) {
            Component c;
            for (int x : n) c.push_back({x, ++h});
            w.push_back(c);
        }
        return canonicalize(w).first;
    }

    // ---------- printing ----------

    std::string to_string(const HeightWord& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += "*";
            s += "[";
            for (std::size_t j = 0; j < w[i].size(); ++j) {
                if (j) s += ",";
                s += "(" + C_.basis[w[i][j].sym].id + "," + std::to_string(w[i][j].height) + ")";
            }
            s += "]";
        }
        return s;
    }
    std::string to_string(const HopfElement& x) const {
        if (x.empty()) return "0";
        std::string s;
        for (auto& [w, c] : x) s += (s.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")" + to_string(w);
        return s;
    }
    std::string to_string(const HopfTensor& t) const {
        if (t.empty()) return "0";
        std::string s;
        for (auto& [k, c] : t) {
            s += (s.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")";
            for (std::size_t i = 0; i < k.size(); ++i) s += (i ? " (x) " : "") + to_string(k[i]);
        }
        return s;
    }

    struct ColoringData {
        std::vector<HLetter> flat;
        std::vector<std::vector<int>> orbit_members;  // f-orbits in f-order
        int components = 0;
        int orbits = 0;  // f-orbits plus empty components
    };

private:
    static bool component_less(const Component& a, const Component& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].sym != b[i].sym) return a[i].sym < b[i].sym;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].height != b[i].height) return a[i].height < b[i].height;
        return false;
    }

    int rotation_sign(const Component& c, std::size_t k) const {
        int front = 0, back = 0;
        for (std::size_t i = 0; i < c.size(); ++i) (i < k ? front : back) += sdeg(c[i].sym);
        return parity_sign(front * back);
    }

    int rotate_least(Component& c) const {
        std::size_t n = c.size(), best = 0;
        auto key = [&](std::size_t k, std::size_t i) { return c[(k + i) % n]; };
        for (std::size_t k = 1; k < n; ++k) {
            int cmp = 0;
            for (std::size_t i = 0; i < n && !cmp; ++i)
                if (key(k, i).sym != key(best, i).sym) cmp = key(k, i).sym < key(best, i).sym ? -1 : 1;
            for (std::size_t i = 0; i < n && !cmp; ++i)
                if (key(k, i).height != key(best, i).height) cmp = key(k, i).height < key(best, i).height ? -1 : 1;
            if (cmp < 0) best = k;
        }
        if (best == 0) return 1;
        int s = rotation_sign(c, best);
        std::rotate(c.begin(), c.begin() + static_cast<long>(best), c.end());
        return s;
    }

    struct Pos {
        int comp, idx;
    };
    static std::vector<Pos> positions(const HeightWord& w) {
        std::vector<Pos> out;
        for (int i = 0; i < static_cast<int>(w.size()); ++i)
            for (int j = 0; j < static_cast<int>(w[i].size()); ++j) out.push_back({i, j});
        return out;
    }

    // Lower height t of an adjacent inversion (t + 1 listed before t), or 0.
    int find_inversion(const HeightWord& w) const {
        std::vector<int> pos_of;
        int n = letters(w), k = 0;
        pos_of.assign(n + 2, 0);
        for (auto& c : w)
            for (auto& l : c) pos_of[l.height] = k++;
        int found = 0;
        for (int t = 1; t < n; ++t)
            if (pos_of[t + 1] < pos_of[t]) {
                found = t;
                if (opt_.order == RewriteOrder::SmallestFirst) break;
            }
        return found;
    }

    // X'' for the inversion with lower height t, straightened.
    HopfElement relation_term(const HeightWord& w, int t) const {
        auto ps = positions(w);
        int lo = -1, hi = -1;
        std::vector<int> deg;
        for (int k = 0; k < static_cast<int>(ps.size()); ++k) {
            const HLetter& l = w[ps[k].comp][ps[k].idx];
            deg.push_back(sdeg(l.sym));
            if (l.height == t) lo = k;
            if (l.height == t + 1) hi = k;
        }
        const HLetter& a = w[ps[lo].comp][ps[lo].idx];
        const HLetter& b = w[ps[hi].comp][ps[hi].idx];
        Rational p = C_.pair(a.sym, b.sym);
        if (p == 0) return {};
        int ci = ps[lo].comp, cj = ps[hi].comp;
        int base_i = lo - ps[lo].idx, base_j = hi - ps[hi].idx;
        std::vector<int> target{lo, hi};
        HeightWord out;
        Scalar coef;
        if (ci != cj) {
            Component merged;
            int ni = static_cast<int>(w[ci].size()), nj = static_cast<int>(w[cj].size());
            int a0 = ps[lo].idx, b0 = ps[hi].idx;
            for (int k = 1; k < ni; ++k) {
                merged.push_back(w[ci][(a0 + k) % ni]);
                target.push_back(base_i + (a0 + k) % ni);
            }
            for (int k = 1; k < nj; ++k) {
                merged.push_back(w[cj][(b0 + k) % nj]);
                target.push_back(base_j + (b0 + k) % nj);
            }
            out.push_back(merged);
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                if (i == ci || i == cj) continue;
                out.push_back(w[i]);
                int base = 0;
                for (int q = 0; q < i; ++q) base += static_cast<int>(w[q].size());
                for (int k = 0; k < static_cast<int>(w[i].size()); ++k) target.push_back(base + k);
            }
            coef = Scalar::h().scaled(p * kMerge);
        } else {
            if (opt_.drop_split_term) return {};
            int n = static_cast<int>(w[ci].size());
            int a0 = ps[lo].idx, b0 = ps[hi].idx;
            Component first, second;
            for (int k = (a0 + 1) % n; k != b0; k = (k + 1) % n) {
                first.push_back(w[ci][k]);
                target.push_back(base_i + k);
            }
            for (int k = (b0 + 1) % n; k != a0; k = (k + 1) % n) {
                second.push_back(w[ci][k]);
                target.push_back(base_i + k);
            }
            out = {first, second};
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                if (i == ci) continue;
                out.push_back(w[i]);
                int base = 0;
                for (int q = 0; q < i; ++q) base += static_cast<int>(w[q].size());
                for (int k = 0; k < static_cast<int>(w[i].size()); ++k) target.push_back(base + k);
            }
            coef = Scalar::hbar().scaled(p * kSplit);
        }
        int s = transport_sign(deg, target);
        return straighten(element(out, coef.scaled(s)));
    }

    static HeightWord swap_heights(HeightWord w, int t) {
        for (auto& c : w)
            for (auto& l : c) {
                if (l.height == t) l.height = t + 1;
                else if (l.height == t + 1) l.height = t;
            }
        return w;
    }

    HopfElement straighten_uncached(const HeightWord& w) const {
        int t = find_inversion(w);
        if (t > 0) {
            ++rewrites_;
            long before = inversions(w);
            auto [w1, s1] = canonicalize(swap_heights(w, t));
            if (inversions(w1) != before - 1)
                throw InvariantViolation("straightening did not decrease the inversion measure at " + to_string(w));
            HopfElement out = relation_term(w, t);
            for (auto& [v, c] : straighten(w1)) out[v] += c.scaled(s1);
            scalar_clean(out);
            return out;
        }
        // sorted; an odd symmetry of the listing forces a relation
        for (auto& y : symmetric_listings(w)) {
            int eps = canonicalize(y).second;
            if (eps == 1) continue;
            HopfElement rest;
            HeightWord cur = y;
            while (int u = find_inversion(cur)) {
                ++rewrites_;
                for (auto& [v, c] : relation_term(cur, u)) rest[v] += c;
                cur = swap_heights(cur, u);
            }
            auto [fin, s] = canonicalize(cur);
            if (fin != w || s == eps)
                throw InvariantViolation("odd symmetry of " + to_string(w) + " does not close");
            // eps * w = s * w + rest
            Rational k = Rational(1) / Rational(eps - s);
            HopfElement out;
            for (auto& [v, c] : rest) out[v] += c.scaled(k);
            scalar_clean(out);
            return out;
        }
        return {{w, Scalar(1)}};
    }

    // Listings of the same word obtained by swapping identical neighbouring
    // components or rotating a periodic component by its period.
    std::vector<HeightWord> symmetric_listings(const HeightWord& w) const {
        std::vector<HeightWord> out;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].empty() || w[i].size() != w[i + 1].size()) continue;
            bool same = true;
            for (std::size_t j = 0; j < w[i].size() && same; ++j) same = w[i][j].sym == w[i + 1][j].sym;
            if (!same) continue;
            HeightWord y = w;
            std::swap(y[i], y[i + 1]);
            out.push_back(y);
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::size_t n = w[i].size();
            for (std::size_t q = 1; q < n; ++q) {
                if (n % q) continue;
                bool periodic = true;
                for (std::size_t j = 0; j < n && periodic; ++j) periodic = w[i][j].sym == w[i][(j + q) % n].sym;
                if (!periodic) continue;
                HeightWord y = w;
                std::rotate(y[i].begin(), y[i].begin() + static_cast<long>(q), y[i].end());
                out.push_back(y);
                break;
            }
        }
        return out;
    }

    template <class F>
    void enumerate_colorings(const HeightWord& w, int m, F&& emit) const {
        ColoringData d;
        auto ps = positions(w);
        int n = static_cast<int>(ps.size());
        std::vector<int> next(n), comp_of(n);
        int e = 0;
        {
            int k = 0;
            for (auto& c : w) {
                if (c.empty()) ++e;
                for (std::size_t j = 0; j < c.size(); ++j) {
                    d.flat.push_back(c[j]);
                    next[k + static_cast<int>(j)] = k + static_cast<int>((j + 1) % c.size());
                }
                k += static_cast<int>(c.size());
            }
        }
        d.components = static_cast<int>(w.size());
        Coloring col;
        col.phi.assign(n, -1);
        std::function<void(int)> match = [&](int p) {
            while (p < n && col.phi[p] >= 0) ++p;
            if (p == n) {
                // orbits of f
                std::vector<int> f(n), orbit(n, -1);
                for (int q = 0; q < n; ++q) f[q] = col.phi[q] < 0 ? next[q] : next[col.phi[q]];
                d.orbit_members.clear();
                for (int q = 0; q < n; ++q) {
                    if (orbit[q] >= 0) continue;
                    std::vector<int> mem;
                    int r = q;
                    do {
                        orbit[r] = static_cast<int>(d.orbit_members.size());
                        mem.push_back(r);
                        r = f[r];
                    } while (r != q);
                    d.orbit_members.push_back(mem);
                }
                int nf = static_cast<int>(d.orbit_members.size());
                d.orbits = nf + e;
                for (int q = 0; q < n; ++q)
                    if (col.phi[q] >= 0 && orbit[q] == orbit[col.phi[q]]) return;
                std::vector<int> oc(nf + e, 1);
                std::function<void(int)> paint = [&](int o) {
                    if (o == nf + e) {
                        for (int q = 0; q < n; ++q) {
                            int r = col.phi[q];
                            if (r < 0) continue;
                            int cq = oc[orbit[q]], cr = oc[orbit[r]];
                            if (cq == cr || (cq > cr) != (d.flat[q].height > d.flat[r].height)) return;
                        }
                        col.color.assign(n, 0);
                        for (int q = 0; q < n; ++q) col.color[q] = oc[orbit[q]];
                        col.e_color.assign(oc.begin() + nf, oc.end());
                        emit(col, d);
                        return;
                    }
                    for (int c = 1; c <= m; ++c) {
                        oc[o] = c;
                        paint(o + 1);
                    }
                };
                paint(0);
                return;
            }
            match(p + 1);
            for (int q = p + 1; q < n; ++q) {
                if (col.phi[q] >= 0 || C_.pair(d.flat[p].sym, d.flat[q].sym) == 0) continue;
                col.phi[p] = q;
                col.phi[q] = p;
                match(p + 1);
                col.phi[p] = col.phi[q] = -1;
            }
        };
        match(0);
    }

    const Coalgebra& C_;
    QuantizationOptions opt_;
    mutable std::map<HeightWord, HopfElement> memo_;
    mutable std::map<HeightWord, HopfTensor> delta_memo_;
    mutable std::map<HeightWord, HopfElement> antipode_memo_;
    mutable long rewrites_ = 0;
};

}  // namespace cyq

namespace cyq {

// Random raw height word: n letters from the given symbols, random component
// split, random distinct heights.
template <class Rng>
HeightWord random_height_word(Rng& rng, const std::vector<int>& syms, int n) {
    std::vector<int> hs(n);
    for (int k = 0; k < n; ++k) hs[k] = k + 1;
    std::shuffle(hs.begin(), hs.end(), rng);
    HeightWord w;
    int k = 0;
    while (k < n) {
        int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - k));
        Component c;
        for (int j = 0; j < len; ++j) c.push_back({syms[rng() % syms.size()], hs[k++]});
        w.push_back(c);
    }
    return w;
}

namespace detail {

inline int tensor_degree(const HopfQuantization& Q, const std::vector<HeightWord>& k) {
    int d = 0;
    for (auto& w : k) d += Q.degree(w);
    return d;
}

// (x1 (x) x2)(y1 (x) y2) = (-1)^{|x2||y1|} x1 y1 (x) x2 y2
inline HopfTensor tensor_mul(const HopfQuantization& Q, const HopfTensor& x, const HopfTensor& y) {
    HopfTensor out;
    for (auto& [a, c] : x)
        for (auto& [b, e] : y) {
            int s = parity_sign(Q.degree(a[1]) * Q.degree(b[0]));
            auto l = Q.product({{a[0], Scalar(1)}}, {{b[0], Scalar(1)}});
            auto r = Q.product({{a[1], Scalar(1)}}, {{b[1], Scalar(1)}});
            for (auto& [u, p] : l)
                for (auto& [v, q] : r) out[{u, v}] += (c * e * p * q).scaled(s);
        }
    scalar_clean(out);
    return out;
}

// Apply Delta to factor i of every summand.
inline HopfTensor delta_at(const HopfQuantization& Q, const HopfTensor& t, std::size_t i) {
    HopfTensor out;
    for (auto& [k, c] : t)
        for (auto& [d, e] : Q.coproduct(k[i])) {
            std::vector<HeightWord> key(k.begin(), k.begin() + static_cast<long>(i));
            key.insert(key.end(), d.begin(), d.end());
            key.insert(key.end(), k.begin() + static_cast<long>(i) + 1, k.end());
            out[key] += c * e;
        }
    scalar_clean(out);
    return out;
}

inline HopfTensor difference(HopfTensor a, const HopfTensor& b) {
    for (auto& [k, c] : b) a[k] -= c;
    scalar_clean(a);
    return a;
}
inline HopfElement difference(HopfElement a, const HopfElement& b) {
    for (auto& [k, c] : b) a[k] -= c;
    scalar_clean(a);
    return a;
}

}  // namespace detail

struct QuantizationVerifyOptions {
    int max_letters = 3;      // Hopf axioms on basis words with at most this many letters
    int necklace_length = 4;  // classical limits on necklaces up to this length
    int random_words = 1000;  // straightening sweep
    int random_letters = 5;
    unsigned seed = 1;
    QuantizationOptions algebra{};
};

inline Report verify_quantization(const Coalgebra& C, const QuantizationVerifyOptions& opt = {}) {
    Report rep;
    HopfQuantization Q(C, opt.algebra);
    QuantizationOptions other = opt.algebra;
    other.order = other.order == RewriteOrder::SmallestFirst ? RewriteOrder::LargestFirst : RewriteOrder::SmallestFirst;
    HopfQuantization Q2(C, other);
    NecklaceBialgebra L(C);
    std::vector<int> syms = C.nonvertex();
    auto guard = [&](const std::string& id, const std::string& where, auto&& f) {
        try {
            f();
        } catch (const InvariantViolation& e) {
            rep.fail(id, where + ": " + e.what());
        }
    };

    // straightening: termination measure, idempotent canonical form, confluence
    std::mt19937 rng(opt.seed);
    for (int it = 0; it < opt.random_words; ++it) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(opt.random_letters));
        HeightWord raw = random_height_word(rng, syms, n);
        auto [cw, s] = Q.canonicalize(raw);
        rep.count("canonical form idempotent");
        if (Q.canonicalize(cw) != std::make_pair(cw, 1)) rep.fail("canonical form idempotent", Q.to_string(raw));
        guard("straightening measure", Q.to_string(raw), [&] {
            HopfElement a = Q.straighten(cw);
            rep.count("straightening measure");
            rep.count("confluence");
            if (a != Q2.straighten(cw)) rep.fail("confluence", Q.to_string(raw));
        });
    }
    // the three-letter critical pattern: heights 3, 2, 1 in listing order
    for (int x : syms)
        for (int y : syms)
            for (int z : syms)
                for (int split = 0; split < 4; ++split) {
                    HLetter A{x, 3}, B{y, 2}, D{z, 1};
                    HeightWord raw = split == 0   ? HeightWord{{A, B, D}}
                                     : split == 1 ? HeightWord{{A, B}, {D}}
                                     : split == 2 ? HeightWord{{A}, {B, D}}
                                                  : HeightWord{{A}, {B}, {D}};
                    guard("confluence", Q.to_string(raw), [&] {
                        rep.count("confluence");
                        if (Q.normal_form(raw) != Q2.normal_form(raw)) rep.fail("confluence", Q.to_string(raw));
                    });
                }

    // PBW basis: fixed by straightening, heights forgotten injectively, sizes
    // match the symmetric algebra on necklaces
    auto basis = Q.basis(opt.max_letters);
    {
        std::set<std::vector<Word>> seen;
        DimTable got;
        for (auto& b : basis) {
            rep.count("PBW basis");
            guard("PBW basis", Q.to_string(b), [&] {
                if (Q.straighten(b) != HopfElement{{b, Scalar(1)}}) rep.fail("PBW basis", Q.to_string(b) + " is not normal");
            });
            if (!seen.insert(Q.forget_heights(b)).second) rep.fail("PBW basis", Q.to_string(b) + " repeats a monomial");
            got[{HopfQuantization::letters(b), Q.degree(b)}]++;
        }
        DimTable gens;
        for (auto& w : L.basis(opt.max_letters)) gens[{static_cast<int>(w.size()), L.degree(w)}]++;
        rep.count("PBW dimension");
        if (got != free_graded_commutative(gens, opt.max_letters)) rep.fail("PBW dimension", "basis sizes differ from the symmetric algebra");
    }

    HopfElement unit{{HeightWord{}, Scalar(1)}};
    auto one = [](const HeightWord& w) { return HopfElement{{w, Scalar(1)}}; };
    std::vector<HeightWord> words{HeightWord{}, HopfQuantization::empty_component()};
    words.insert(words.end(), basis.begin(), basis.end());

    for (auto& x : words) {
        std::string wx = Q.to_string(x);
        guard("exponent integrality", wx, [&] {
            HopfTensor raw = Q.coproduct_raw(x, 2);
            rep.count("exponent integrality");
            for (auto& [k, c] : raw) {
                rep.count("grading");
                for (auto& [m, q] : c.terms())
                    if (detail::tensor_degree(Q, k) + (m.first + m.second) * (C.pairing_degree - 2) != Q.degree(x))
                        rep.fail("grading", wx);
            }
            HopfTensor d = Q.coproduct(x);
            // coassociativity with Delta_3
            HopfTensor d3 = Q.coproduct(one(x), 3);
            rep.count("coassociativity");
            if (detail::delta_at(Q, d, 0) != d3 || detail::delta_at(Q, d, 1) != d3) rep.fail("coassociativity", wx);
            // counit
            HopfElement l, r;
            for (auto& [k, c] : d) {
                for (auto& [w, e] : Q.straighten(HopfElement{{k[1], c * HopfQuantization::counit(one(k[0]))}})) l[w] += e;
                for (auto& [w, e] : Q.straighten(HopfElement{{k[0], c * HopfQuantization::counit(one(k[1]))}})) r[w] += e;
            }
            scalar_clean(l);
            scalar_clean(r);
            rep.count("counit");
            if (l != one(x) || r != one(x)) rep.fail("counit", wx);
            // antipode
            HopfElement sl, sr;
            for (auto& [k, c] : d) {
                for (auto& [w, e] : Q.product(Q.antipode(k[0]), one(k[1]))) sl[w] += c * e;
                for (auto& [w, e] : Q.product(one(k[0]), Q.antipode(k[1]))) sr[w] += c * e;
            }
            scalar_clean(sl);
            scalar_clean(sr);
            HopfElement want;
            if (x.empty()) want = unit;
            rep.count("antipode");
            if (sl != want || sr != want) rep.fail("antipode", wx);
            // differential
            HopfElement bx = Q.differential(x);
            rep.count("b^2 = 0");
            if (!Q.differential(bx).empty()) rep.fail("b^2 = 0", wx);
            HopfTensor lhs = Q.coproduct(bx), rhs;
            for (auto& [k, c] : d) {
                for (auto& [w, e] : Q.differential(k[0])) rhs[{w, k[1]}] += c * e;
                int s = parity_sign(Q.degree(k[0]));
                for (auto& [w, e] : Q.differential(k[1])) rhs[{k[0], w}] += (c * e).scaled(s);
            }
            scalar_clean(rhs);
            rep.count("b coderivation");
            if (lhs != rhs) rep.fail("b coderivation", wx);
        });
    }

    // products: bialgebra identity and derivation property
    for (auto& x : words)
        for (auto& y : words) {
            if (HopfQuantization::letters(x) + HopfQuantization::letters(y) > opt.max_letters) continue;
            std::string wxy = Q.to_string(x) + " . " + Q.to_string(y);
            guard("bialgebra", wxy, [&] {
                HopfElement xy = Q.product(one(x), one(y));
                rep.count("bialgebra");
                if (Q.coproduct(xy) != detail::tensor_mul(Q, Q.coproduct(x), Q.coproduct(y))) rep.fail("bialgebra", wxy);
                HopfElement rhs = Q.product(Q.differential(x), one(y));
                int s = parity_sign(Q.degree(x));
                for (auto& [w, e] : Q.product(one(x), Q.differential(y))) rhs[w] += e.scaled(s);
                scalar_clean(rhs);
                rep.count("b derivation");
                if (Q.differential(xy) != rhs) rep.fail("b derivation", wxy);
            });
        }

    // relations: Delta and b descend to the quotient
    std::mt19937 rng2(opt.seed + 1);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng2() % static_cast<unsigned>(std::max(1, opt.max_letters + 1)));
        auto [cw, s] = Q.canonicalize(random_height_word(rng2, syms, n));
        guard("coproduct preserves relations", Q.to_string(cw), [&] {
            rep.count("coproduct preserves relations");
            if (Q.straighten(Q.coproduct_raw(cw, 2)) != Q.coproduct(Q.straighten(cw)))
                rep.fail("coproduct preserves relations", Q.to_string(cw));
            HopfElement bb;
            for (auto& [v, c] : Q.differential_raw(cw))
                for (auto& [u, e] : Q.differential_raw(v)) bb[u] += c * e;
            scalar_clean(bb);
            rep.count("b^2 = 0 before relations");
            if (!bb.empty()) rep.fail("b^2 = 0 before relations", Q.to_string(cw));
            rep.count("b preserves relations");
            if (Q.differential(cw) != Q.differential(Q.straighten(cw))) rep.fail("b preserves relations", Q.to_string(cw));
        });
    }

    // classical limits
    auto necklaces = L.basis(opt.necklace_length);
    for (auto& x : necklaces) {
        guard("cobracket limit", Q.to_string(Q.lift(x)), [&] {
            NTensor got;
            rep.count("cobracket limit");
            if (!Q.cobracket_limit(x, got) || got != L.cobracket(x)) rep.fail("cobracket limit", Q.to_string(Q.lift(x)));
        });
        for (auto& y : necklaces) {
            if (x.size() + y.size() > static_cast<std::size_t>(opt.necklace_length)) continue;
            guard("bracket limit", Q.to_string(Q.lift(x)) + ", " + Q.to_string(Q.lift(y)), [&] {
                NElem got;
                rep.count("bracket limit");
                if (!Q.bracket_limit(x, y, got) || got != L.bracket(x, y))
                    rep.fail("bracket limit", Q.to_string(Q.lift(x)) + ", " + Q.to_string(Q.lift(y)));
            });
        }
    }
    return rep;
}

}  // namespace cyq
