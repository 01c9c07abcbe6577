#pragma once
// Quadratic algebras, coalgebras with co-Frobenius pairings, quivers.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#define TOML_EXCEPTIONS 1
#include <tomlplusplus/toml.hpp>

#include "linalg.hpp"
#include "scalar.hpp"

namespace cyq {

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Symbol {
    std::string id;
    int degree = 0;
    int weight = 0;
    int src = 0;  // vertex indices; composability is tgt(x) == src(y)
    int tgt = 0;
};

struct QuadraticPresentation {
    std::string name;
    std::vector<std::string> vertices{"0"};
    std::vector<Symbol> generators;
    // each relation: (g1, g2) -> coefficient, meaning sum c * g1 g2
    std::vector<std::map<std::pair<int, int>, Rational>> relations;

    int index(const std::string& id) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].id == id) return static_cast<int>(i);
        return -1;
    }
    int nverts() const { return static_cast<int>(vertices.size()); }
    bool composable(int g1, int g2) const { return generators[g1].tgt == generators[g2].src; }

    void validate() const {
        std::set<std::string> ids;
        for (auto& g : generators) {
            if (!ids.insert(g.id).second) throw InvariantViolation("duplicate generator id '" + g.id + "'");
            if (g.src < 0 || g.src >= nverts() || g.tgt < 0 || g.tgt >= nverts())
                throw InvariantViolation("generator '" + g.id + "' has an unknown endpoint");
        }
        int ng = static_cast<int>(generators.size());
        Echelon e;
        for (std::size_t k = 0; k < relations.size(); ++k) {
            std::map<int, Rational> v;
            for (auto& [pr, c] : relations[k]) {
                if (!composable(pr.first, pr.second))
                    throw InvariantViolation("relation " + std::to_string(k) + " contains the non-composable pair " +
                                             generators[pr.first].id + "." + generators[pr.second].id);
                v[pr.first * ng + pr.second] += c;
            }
            SparseVec sv = sparse_from_map(v);
            if (sv.empty()) throw InvariantViolation("relation " + std::to_string(k) + " is zero");
            if (!e.insert(sv)) throw InvariantViolation("relation " + std::to_string(k) + " is linearly dependent");
        }
    }
};

struct CoTerm {
    Rational c;
    int l, r;
};

// Coalgebra given by a basis and a coproduct table. Vertex elements are the
// grouplike idempotents with counit 1; all other basis elements have counit 0.
struct Coalgebra {
    std::string name;
    std::vector<std::string> vertices{"0"};
    std::vector<Symbol> basis;
    std::vector<std::vector<CoTerm>> delta;
    std::vector<Rational> counit;
    bool has_pairing = false;
    int pairing_degree = 0;
    std::map<std::pair<int, int>, Rational> pairing;
    // optional expansion of basis vectors as words in suspended generators
    std::vector<SparseVec> expansion;

    int size() const { return static_cast<int>(basis.size()); }
    int index(const std::string& id) const {
        for (int i = 0; i < size(); ++i)
            if (basis[i].id == id) return i;
        return -1;
    }
    int at(const std::string& id) const {
        int i = index(id);
        if (i < 0) throw MalformedInput("unknown basis element '" + id + "'");
        return i;
    }
    int deg(int i) const { return basis[i].degree; }
    int sdeg(int i) const { return basis[i].degree - 1; }  // desuspended degree
    int weight(int i) const { return basis[i].weight; }
    bool is_vertex(int i) const { return counit[i] != 0; }
    bool composable(int x, int y) const { return basis[x].tgt == basis[y].src; }

    Rational pair(int x, int y) const {
        auto it = pairing.find({x, y});
        return it == pairing.end() ? Rational(0) : it->second;
    }

    // Terms of the coproduct with both tensor factors outside the vertex part.
    std::vector<CoTerm> reduced(int i) const {
        std::vector<CoTerm> out;
        if (is_vertex(i)) return out;
        for (auto& t : delta[i])
            if (!is_vertex(t.l) && !is_vertex(t.r)) out.push_back(t);
        return out;
    }

    std::vector<int> nonvertex() const {
        std::vector<int> v;
        for (int i = 0; i < size(); ++i)
            if (!is_vertex(i)) v.push_back(i);
        return v;
    }
};

// ---------- validation ----------

inline void validate_coalgebra(const Coalgebra& c) {
    int n = c.size();
    if (static_cast<int>(c.delta.size()) != n || static_cast<int>(c.counit.size()) != n)
        throw InvariantViolation("coproduct/counit tables do not cover the basis");
    std::set<std::string> ids;
    for (auto& b : c.basis)
        if (!ids.insert(b.id).second) throw InvariantViolation("duplicate basis id '" + b.id + "'");
    for (int x = 0; x < n; ++x) {
        const std::string& nm = c.basis[x].id;
        for (auto& t : c.delta[x]) {
            if (c.deg(t.l) + c.deg(t.r) != c.deg(x))
                throw InvariantViolation("coproduct of '" + nm + "' is not homogeneous of degree 0");
            if (c.weight(t.l) + c.weight(t.r) != c.weight(x))
                throw InvariantViolation("coproduct of '" + nm + "' does not preserve weight");
            if (!c.composable(t.l, t.r) || c.basis[t.l].src != c.basis[x].src || c.basis[t.r].tgt != c.basis[x].tgt)
                throw InvariantViolation("coproduct of '" + nm + "' is not compatible with the vertex set");
        }
        // coassociativity
        std::map<std::tuple<int, int, int>, Rational> lhs, rhs;
        for (auto& t : c.delta[x]) {
            for (auto& u : c.delta[t.l]) lhs[{u.l, u.r, t.r}] += t.c * u.c;
            for (auto& u : c.delta[t.r]) rhs[{t.l, u.l, u.r}] += t.c * u.c;
        }
        auto clean = [](auto& m) {
            for (auto it = m.begin(); it != m.end();)
                it = (it->second == 0) ? m.erase(it) : std::next(it);
        };
        clean(lhs);
        clean(rhs);
        if (lhs != rhs) throw InvariantViolation("coassociativity fails on basis element '" + nm + "'");
        // counit
        std::map<int, Rational> left, right;
        for (auto& t : c.delta[x]) {
            left[t.r] += c.counit[t.l] * t.c;
            right[t.l] += t.c * c.counit[t.r];
        }
        clean(left);
        clean(right);
        std::map<int, Rational> id{{x, Rational(1)}};
        if (left != id || right != id) throw InvariantViolation("counit axiom fails on basis element '" + nm + "'");
        if (c.is_vertex(x)) {
            if (c.counit[x] != 1 || c.weight(x) != 0 || c.deg(x) != 0 || c.delta[x].size() != 1 ||
                c.delta[x][0].l != x || c.delta[x][0].r != x || c.delta[x][0].c != 1)
                throw InvariantViolation("vertex element '" + nm + "' is not a grouplike idempotent");
        } else if (c.weight(x) == 0) {
            throw InvariantViolation("basis element '" + nm + "' of weight 0 is not grouplike");
        }
    }
    // conilpotence: iterated reduced coproduct vanishes at k >= weight
    for (int x = 0; x < n; ++x) {
        std::map<std::vector<int>, Rational> cur{{{x}, Rational(1)}};
        int k = 0;
        while (!cur.empty()) {
            std::map<std::vector<int>, Rational> nxt;
            for (auto& [w, coef] : cur) {
                // apply reduced coproduct to the last factor
                for (auto& t : c.reduced(w.back())) {
                    auto w2 = w;
                    w2.back() = t.l;
                    w2.push_back(t.r);
                    nxt[w2] += coef * t.c;
                }
            }
            for (auto it = nxt.begin(); it != nxt.end();)
                it = (it->second == 0) ? nxt.erase(it) : std::next(it);
            cur = std::move(nxt);
            ++k;
            if (!cur.empty() && k >= std::max(1, c.weight(x)))
                throw InvariantViolation("conilpotence fails on basis element '" + c.basis[x].id + "'");
        }
    }
    if (c.has_pairing) {
        for (auto& [pr, v] : c.pairing) {
            int x = pr.first, y = pr.second;
            if (v == 0) continue;
            if (c.deg(x) + c.deg(y) != c.pairing_degree)
                throw InvariantViolation("pairing <" + c.basis[x].id + "," + c.basis[y].id + "> has the wrong degree");
            Rational sym = ((c.deg(x) * c.deg(y)) & 1) ? -c.pair(y, x) : c.pair(y, x);
            if (sym != v)
                throw InvariantViolation("pairing is not graded-symmetric at <" + c.basis[x].id + "," +
                                         c.basis[y].id + ">");
            if (c.basis[x].tgt != c.basis[y].src || c.basis[y].tgt != c.basis[x].src)
                throw InvariantViolation("pairing <" + c.basis[x].id + "," + c.basis[y].id +
                                         "> joins non-matching vertices");
        }
    }
}

// ---------- induced product ----------

struct ProductTable {
    // prod[{a,b}] = sparse vector over the basis
    std::map<std::pair<int, int>, SparseVec> prod;
    SparseVec get(int a, int b) const {
        auto it = prod.find({a, b});
        return it == prod.end() ? SparseVec{} : it->second;
    }
};

namespace detail {
inline bool pairing_nondegenerate(const Coalgebra& c) {
    SparseMatrix m(c.size(), c.size());
    for (auto& [pr, v] : c.pairing) m.add(pr.first, pr.second, v);
    return rank(m) == c.size();
}
}  // namespace detail

// <a*b, z> = sum <a, z''> <b, z'>. The pairing matches a path with its reverse,
// hence the reversed reading of Delta(z).
inline ProductTable induced_product_unchecked(const Coalgebra& c) {
    if (!c.has_pairing) throw UnsupportedInput("induced product needs a pairing");
    if (!detail::pairing_nondegenerate(c)) throw InvariantViolation("degenerate pairing");
    int n = c.size();
    // Gauss-Jordan inverse of the matrix A[z][x] = <x,z>.
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(2 * n));
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) A[z][x] = c.pair(x, z);  // row z: sum_x u_x <x,z>
    for (int i = 0; i < n; ++i) A[i][n + i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw InvariantViolation("degenerate pairing");
        std::swap(A[piv], A[col]);
        Rational inv = 1 / A[col][col];
        for (auto& v : A[col]) v *= inv;
        for (int r = 0; r < n; ++r)
            if (r != col && A[r][col] != 0) {
                Rational f = A[r][col];
                for (int k = 0; k < 2 * n; ++k) A[r][k] -= f * A[col][k];
            }
    }
    // u = Inv * f where Inv[x][z] = A[x][n+z]
    ProductTable t;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Rational> f(n);
            bool any = false;
            for (int z = 0; z < n; ++z)
                for (auto& term : c.delta[z]) {
                    Rational v = c.pair(a, term.r) * c.pair(b, term.l);
                    if (v == 0) continue;
                    f[z] += term.c * v;
                    any = true;
                }
            if (!any) continue;
            std::map<int, Rational> u;
            for (int x = 0; x < n; ++x)
                for (int z = 0; z < n; ++z)
                    if (f[z] != 0 && A[x][n + z] != 0) u[x] += A[x][n + z] * f[z];
            SparseVec sv = sparse_from_map(u);
            if (!sv.empty()) t.prod[{a, b}] = sv;
        }
    return t;
}

// Checks associativity, invariance <x*y,z> = <x,y*z>, and
// Delta(a*b) = a*Delta(b) = Delta(a)*b. Returns the first failure or nullopt.
inline std::optional<std::string> check_frobenius(const Coalgebra& c, const ProductTable& t) {
    int n = c.size();
    auto mul_vec = [&](const SparseVec& u, int b) {
        std::map<int, Rational> acc;
        for (auto& [x, cx] : u)
            for (auto& [y, cy] : t.get(x, b)) acc[y] += cx * cy;
        return sparse_from_map(acc);
    };
    auto vec_mul = [&](int a, const SparseVec& u) {
        std::map<int, Rational> acc;
        for (auto& [x, cx] : u)
            for (auto& [y, cy] : t.get(a, x)) acc[y] += cx * cy;
        return sparse_from_map(acc);
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                if (mul_vec(t.get(a, b), d) != vec_mul(a, t.get(b, d)))
                    return "associativity fails at (" + c.basis[a].id + "," + c.basis[b].id + "," + c.basis[d].id + ")";
                Rational l = 0, r = 0;
                for (auto& [x, cx] : t.get(a, b)) l += cx * c.pair(x, d);
                for (auto& [x, cx] : t.get(b, d)) r += cx * c.pair(a, x);
                if (l != r)
                    return "invariance fails at (" + c.basis[a].id + "," + c.basis[b].id + "," + c.basis[d].id + ")";
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::map<std::pair<int, int>, Rational> D, L, R;
            for (auto& [x, cx] : t.get(a, b))
                for (auto& term : c.delta[x]) D[{term.l, term.r}] += cx * term.c;
            for (auto& term : c.delta[b])
                for (auto& [x, cx] : t.get(a, term.l)) L[{x, term.r}] += cx * term.c;
            for (auto& term : c.delta[a])
                for (auto& [x, cx] : t.get(term.r, b)) R[{term.l, x}] += cx * term.c;
            auto clean = [](auto& m) {
                for (auto it = m.begin(); it != m.end();)
                    it = (it->second == 0) ? m.erase(it) : std::next(it);
            };
            clean(D);
            clean(L);
            clean(R);
            if (D != L || D != R)
                return "Frobenius compatibility fails at (" + c.basis[a].id + "," + c.basis[b].id + ")";
        }
    return std::nullopt;
}

// Induced product, verified; any failed axiom is an InvariantViolation.
inline ProductTable induced_product(const Coalgebra& c) {
    ProductTable t = induced_product_unchecked(c);
    if (auto err = check_frobenius(c, t)) throw InvariantViolation(*err);
    return t;
}

// ---------- quivers ----------

struct Arrow {
    std::string id;
    int tail, head;
};
struct QuiverSpec {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    void validate() const {
        std::set<std::string> v(vertices.begin(), vertices.end());
        if (v.size() != vertices.size()) throw InvariantViolation("duplicate vertex id");
        std::set<std::string> a;
        for (auto& ar : arrows) {
            if (!a.insert(ar.id).second) throw InvariantViolation("duplicate arrow id '" + ar.id + "'");
            if (ar.tail < 0 || ar.tail >= static_cast<int>(vertices.size()) || ar.head < 0 ||
                ar.head >= static_cast<int>(vertices.size()))
                throw InvariantViolation("arrow '" + ar.id + "' has an unknown endpoint");
        }
    }
};

// True if some connected component of the underlying graph is a simply-laced
// Dynkin diagram (A_n, D_n, E_6, E_7, E_8).
inline bool has_dynkin_component(const QuiverSpec& q) {
    int nv = static_cast<int>(q.vertices.size());
    std::vector<std::vector<int>> adj(nv);
    std::vector<int> comp(nv, -1);
    for (auto& a : q.arrows) {
        adj[a.tail].push_back(a.head);
        if (a.tail != a.head) adj[a.head].push_back(a.tail);
    }
    int nc = 0;
    for (int s = 0; s < nv; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = nc;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int w : adj[u])
                if (comp[w] < 0) {
                    comp[w] = nc;
                    st.push_back(w);
                }
        }
        ++nc;
    }
    for (int k = 0; k < nc; ++k) {
        std::vector<int> vs;
        for (int v = 0; v < nv; ++v)
            if (comp[v] == k) vs.push_back(v);
        int edges = 0;
        bool loop = false;
        std::set<std::pair<int, int>> seen;
        bool multi = false;
        for (auto& a : q.arrows)
            if (comp[a.tail] == k) {
                ++edges;
                if (a.tail == a.head) loop = true;
                auto key = std::minmax(a.tail, a.head);
                if (!seen.insert(key).second) multi = true;
            }
        if (loop || multi || edges != static_cast<int>(vs.size()) - 1) continue;  // not a tree
        std::vector<int> branch;
        for (int v : vs) {
            std::set<int> nb(adj[v].begin(), adj[v].end());
            if (nb.size() > 3) goto not_dynkin;
            if (nb.size() == 3) branch.push_back(v);
        }
        if (branch.empty()) return true;  // A_n
        if (branch.size() > 1) continue;
        {
            int c0 = branch[0];
            std::vector<int> arms;
            for (int start : std::set<int>(adj[c0].begin(), adj[c0].end())) {
                int len = 1, prev = c0, cur = start;
                while (true) {
                    std::set<int> nb(adj[cur].begin(), adj[cur].end());
                    nb.erase(prev);
                    if (nb.empty()) break;
                    prev = cur;
                    cur = *nb.begin();
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            // 1/(p+1)+1/(q+1)+1/(r+1) > 1
            Rational s = Rational(1, arms[0] + 1) + Rational(1, arms[1] + 1) + Rational(1, arms[2] + 1);
            if (s > 1) return true;
        }
    not_dynkin:;
    }
    return false;
}

struct PreprojectiveData {
    QuadraticPresentation algebra;
    Coalgebra coalgebra;
};

// Sign of the a(x)a* terms in Delta(o_i). Frobenius: coefficient -eps(a), the
// Casimir of the pairing, so that the induced product is compatible with Delta.
// UnitSigns: coefficient +1 for every arrow.
enum class CircleCoproduct { Frobenius, UnitSigns };

inline PreprojectiveData preprojective_from_quiver(const QuiverSpec& q,
                                                   CircleCoproduct mode = CircleCoproduct::Frobenius) {
    q.validate();
    if (has_dynkin_component(q)) throw UnsupportedInput("Dynkin quiver: the preprojective algebra is not Koszul");
    int nv = static_cast<int>(q.vertices.size());
    bool single = nv == 1;
    struct DA {
        std::string id;
        int tail, head, eps, partner;
    };
    std::vector<DA> bar;
    for (auto& a : q.arrows) {
        int k = static_cast<int>(bar.size());
        bar.push_back({a.id, a.tail, a.head, 1, k + 1});
        bar.push_back({a.id + "*", a.head, a.tail, -1, k});
    }
    PreprojectiveData out;
    auto& A = out.algebra;
    A.name = "preprojective";
    A.vertices = q.vertices;
    for (auto& b : bar) A.generators.push_back({b.id, 0, 1, b.tail, b.head});
    for (int v = 0; v < nv; ++v) {
        std::map<std::pair<int, int>, Rational> rel;
        for (int k = 0; k < static_cast<int>(bar.size()); ++k)
            if (bar[k].tail == v) rel[{k, bar[k].partner}] += bar[k].eps;
        if (!rel.empty()) A.relations.push_back(rel);
    }
    A.validate();

    auto& C = out.coalgebra;
    C.name = "koszul dual of the preprojective algebra";
    C.vertices = q.vertices;
    auto vname = [&](const std::string& base, int v) { return single ? base : base + "_" + q.vertices[v]; };
    for (int v = 0; v < nv; ++v) C.basis.push_back({vname("e", v), 0, 0, v, v});
    int off = nv;
    for (auto& b : bar) C.basis.push_back({b.id, 1, 1, b.tail, b.head});
    int ooff = static_cast<int>(C.basis.size());
    for (int v = 0; v < nv; ++v) C.basis.push_back({vname("o", v), 2, 2, v, v});
    int n = C.size();
    C.delta.assign(n, {});
    C.counit.assign(n, 0);
    for (int v = 0; v < nv; ++v) {
        C.delta[v] = {{1, v, v}};
        C.counit[v] = 1;
    }
    for (int k = 0; k < static_cast<int>(bar.size()); ++k)
        C.delta[off + k] = {{1, bar[k].tail, off + k}, {1, off + k, bar[k].head}};
    for (int v = 0; v < nv; ++v) {
        auto& d = C.delta[ooff + v];
        d.push_back({1, ooff + v, v});
        for (int k = 0; k < static_cast<int>(bar.size()); ++k)
            if (bar[k].tail == v)
                d.push_back({mode == CircleCoproduct::UnitSigns ? Rational(1) : Rational(-bar[k].eps), off + k,
                             off + bar[k].partner});
        d.push_back({1, v, ooff + v});
    }
    C.has_pairing = true;
    C.pairing_degree = 2;
    for (int v = 0; v < nv; ++v) {
        C.pairing[{v, ooff + v}] = 1;
        C.pairing[{ooff + v, v}] = 1;
    }
    for (int k = 0; k < static_cast<int>(bar.size()); ++k) C.pairing[{off + k, off + bar[k].partner}] = bar[k].eps;
    validate_coalgebra(C);
    return out;
}

// ---------- text input ----------

namespace detail {

struct LinTerm {
    Rational c;
    std::vector<std::string> factors;
};

// Parses "2/3*x.y - y.x" (sep '.') or "o|e + a|a*" (sep '|').
inline std::vector<LinTerm> parse_lincomb(const std::string& text, char sep) {
    std::vector<LinTerm> out;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw MalformedInput("empty linear combination");
    std::size_t i = 0;
    while (i < s.size()) {
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!out.empty()) {
            throw MalformedInput("expected '+' or '-' in '" + text + "'");
        }
        std::size_t j = i;
        Rational coef = 1;
        if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
            coef = parse_rational(s.substr(i, j - i));
            if (j < s.size() && s[j] == '*') ++j;
        }
        // factors until the next top-level '+'/'-' (a '-' never appears inside a name)
        std::size_t k = j;
        while (k < s.size() && s[k] != '+' && s[k] != '-') ++k;
        std::string body = s.substr(j, k - j);
        if (body.empty()) throw MalformedInput("missing term body in '" + text + "'");
        LinTerm t{sign * coef, {}};
        std::string f;
        for (char ch : body) {
            if (ch == sep) {
                if (f.empty()) throw MalformedInput("empty factor in '" + text + "'");
                t.factors.push_back(f);
                f.clear();
            } else {
                f += ch;
            }
        }
        if (f.empty()) throw MalformedInput("empty factor in '" + text + "'");
        t.factors.push_back(f);
        out.push_back(std::move(t));
        i = k;
    }
    return out;
}

inline int vertex_index(const std::vector<std::string>& vs, const std::string& v) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] == v) return static_cast<int>(i);
    throw MalformedInput("unknown vertex '" + v + "'");
}

inline std::vector<std::string> read_vertices(const toml::table& tbl) {
    std::vector<std::string> vs;
    if (auto arr = tbl["vertices"].as_array()) {
        for (auto& e : *arr) {
            auto s = e.value<std::string>();
            if (!s) throw MalformedInput("vertices must be strings");
            vs.push_back(*s);
        }
    }
    if (vs.empty()) vs.push_back("0");
    return vs;
}

inline Symbol read_symbol(const std::string& id, const toml::node& node, const std::vector<std::string>& vs,
                          int default_weight) {
    auto t = node.as_table();
    if (!t) throw MalformedInput("symbol '" + id + "' must be an inline table");
    Symbol s;
    s.id = id;
    auto d = (*t)["degree"].value<int64_t>();
    if (!d) throw MalformedInput("symbol '" + id + "' needs an integer degree");
    s.degree = static_cast<int>(*d);
    s.weight = static_cast<int>((*t)["weight"].value_or<int64_t>(default_weight));
    std::string src = (*t)["src"].value_or(std::string(vs[0]));
    std::string tgt = (*t)["tgt"].value_or(std::string(vs[0]));
    s.src = vertex_index(vs, src);
    s.tgt = vertex_index(vs, tgt);
    return s;
}

// toml++ keeps keys in sorted order; the declared order is recovered from source positions.
inline std::vector<std::pair<std::string, const toml::node*>> ordered(const toml::table& t) {
    std::vector<std::tuple<toml::source_position, std::string, const toml::node*>> v;
    for (auto& [k, node] : t) v.emplace_back(k.source().begin, std::string(k.str()), &node);
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
        auto& pa = std::get<0>(a);
        auto& pb = std::get<0>(b);
        return std::tie(pa.line, pa.column) < std::tie(pb.line, pb.column);
    });
    std::vector<std::pair<std::string, const toml::node*>> out;
    for (auto& [p, k, n] : v) out.emplace_back(k, n);
    return out;
}

}  // namespace detail

struct LoadedPresentation {
    std::string kind;  // "quadratic" | "coalgebra" | "quiver"
    std::optional<QuadraticPresentation> algebra;
    std::optional<Coalgebra> coalgebra;
    std::optional<QuiverSpec> quiver;
};

inline LoadedPresentation load_presentation(const std::string& text) {
    toml::table tbl;
    try {
        tbl = toml::parse(text);
    } catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << "parse error at line " << e.source().begin.line << ": " << e.description();
        throw MalformedInput(os.str());
    }
    LoadedPresentation out;
    std::string kind = tbl["kind"].value_or<std::string>("");
    if (kind.empty()) {
        if (tbl.contains("quiver")) kind = "quiver";
        else if (tbl.contains("coproduct")) kind = "coalgebra";
        else kind = "quadratic";
    }
    out.kind = kind;
    std::string name = tbl["name"].value_or(std::string(kind));
    if (kind == "quiver") {
        auto q = tbl["quiver"].as_table();
        if (!q) throw MalformedInput("missing [quiver] section");
        QuiverSpec qs;
        qs.vertices = detail::read_vertices(*q);
        auto arr = (*q)["arrows"].as_array();
        if (!arr) throw MalformedInput("[quiver] needs an arrows array");
        for (auto& e : *arr) {
            auto s = e.value<std::string>();
            if (!s) throw MalformedInput("arrows must be strings \"id: tail -> head\"");
            std::string str;
            for (char ch : *s)
                if (!std::isspace(static_cast<unsigned char>(ch))) str += ch;
            auto colon = str.find(':'), arrow = str.find("->");
            if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
                throw MalformedInput("bad arrow '" + *s + "'");
            qs.arrows.push_back({str.substr(0, colon),
                                 detail::vertex_index(qs.vertices, str.substr(colon + 1, arrow - colon - 1)),
                                 detail::vertex_index(qs.vertices, str.substr(arrow + 2))});
        }
        qs.validate();
        out.quiver = qs;
        return out;
    }
    auto gens = tbl["generators"].as_table();
    if (!gens) throw MalformedInput("missing [generators] section");
    auto vs = detail::read_vertices(tbl);
    if (kind == "quadratic") {
        QuadraticPresentation p;
        p.name = name;
        p.vertices = vs;
        for (auto& [k, node] : detail::ordered(*gens)) p.generators.push_back(detail::read_symbol(k, *node, vs, 1));
        if (auto rels = tbl["relations"].as_table()) {
            for (auto& [k, node] : detail::ordered(*rels)) {
                auto s = node->value<std::string>();
                if (!s) throw MalformedInput("relation '" + k + "' must be a string");
                std::map<std::pair<int, int>, Rational> rel;
                for (auto& t : detail::parse_lincomb(*s, '.')) {
                    if (t.factors.size() != 2) throw MalformedInput("relation '" + k + "' is not quadratic");
                    int a = p.index(t.factors[0]), b = p.index(t.factors[1]);
                    if (a < 0 || b < 0) throw MalformedInput("relation '" + k + "' uses an unknown generator");
                    rel[{a, b}] += t.c;
                }
                for (auto it = rel.begin(); it != rel.end();)
                    it = (it->second == 0) ? rel.erase(it) : std::next(it);
                p.relations.push_back(rel);
            }
        }
        for (auto& g : p.generators)
            if (g.weight != 1) throw InvariantViolation("generator '" + g.id + "' must have weight 1");
        p.validate();
        out.algebra = p;
        return out;
    }
    if (kind != "coalgebra") throw MalformedInput("unknown kind '" + kind + "'");
    Coalgebra c;
    c.name = name;
    c.vertices = vs;
    for (auto& [k, node] : detail::ordered(*gens)) c.basis.push_back(detail::read_symbol(k, *node, vs, 0));
    int n = c.size();
    c.delta.assign(n, {});
    c.counit.assign(n, 0);
    auto cop = tbl["coproduct"].as_table();
    if (!cop) throw MalformedInput("missing [coproduct] section");
    for (auto& [k, node] : detail::ordered(*cop)) {
        int x = c.index(k);
        if (x < 0) throw MalformedInput("coproduct of unknown element '" + k + "'");
        auto s = node->value<std::string>();
        if (!s) throw MalformedInput("coproduct of '" + k + "' must be a string");
        std::map<std::pair<int, int>, Rational> acc;
        for (auto& t : detail::parse_lincomb(*s, '|')) {
            if (t.factors.size() != 2) throw MalformedInput("coproduct term of '" + k + "' needs two factors");
            acc[{c.at(t.factors[0]), c.at(t.factors[1])}] += t.c;
        }
        for (auto& [pr, v] : acc)
            if (v != 0) c.delta[x].push_back({v, pr.first, pr.second});
    }
    if (auto cu = tbl["counit"].as_table()) {
        for (auto& [k, node] : detail::ordered(*cu)) {
            auto s = node->value<std::string>();
            if (!s) throw MalformedInput("counit of '" + k + "' must be a string");
            c.counit[c.at(k)] = parse_rational(*s);
        }
    }
    if (auto pr = tbl["pairing"].as_table()) {
        c.has_pairing = true;
        auto d = (*pr)["degree"].value<int64_t>();
        if (!d) throw MalformedInput("[pairing] needs an integer degree");
        c.pairing_degree = static_cast<int>(*d);
        for (auto& [k, node] : detail::ordered(*pr)) {
            if (k == "degree") continue;
            auto s = node->value<std::string>();
            if (!s) throw MalformedInput("pairing entry '" + k + "' must be a string");
            auto comma = k.find(',');
            if (comma == std::string::npos) throw MalformedInput("pairing key '" + k + "' must read \"x,y\"");
            Rational v = parse_rational(*s);
            if (v != 0) c.pairing[{c.at(k.substr(0, comma)), c.at(k.substr(comma + 1))}] = v;
        }
    }
    validate_coalgebra(c);
    out.coalgebra = c;
    return out;
}

// ---------- built-in examples ----------

inline QuiverSpec jordan_quiver() { return QuiverSpec{{"1"}, {{"a", 0, 0}}}; }
inline QuiverSpec kronecker_quiver() { return QuiverSpec{{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}}; }

inline QuadraticPresentation polynomial_kx() {
    QuadraticPresentation p;
    p.name = "k[x]";
    p.generators = {{"x", 0, 1, 0, 0}};
    return p;
}
inline QuadraticPresentation polynomial_kxy() {
    QuadraticPresentation p;
    p.name = "k[x,y]";
    p.generators = {{"x", 0, 1, 0, 0}, {"y", 0, 1, 0, 0}};
    p.relations = {{{{0, 1}, Rational(1)}, {{1, 0}, Rational(-1)}}};
    return p;
}
inline QuadraticPresentation dual_numbers() {
    QuadraticPresentation p;
    p.name = "k[x]/(x^2)";
    p.generators = {{"x", 0, 1, 0, 0}};
    p.relations = {{{{0, 0}, Rational(1)}}};
    return p;
}

}  // namespace cyq
