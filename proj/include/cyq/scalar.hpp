#pragma once
// Exact coefficients: rationals (GMP) and the polynomial ring Q[h, hbar].

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cyq {

using Rational = mpq_class;

struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw MalformedInput("empty rational");
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') ++i;
    bool slash = false, digit = false;
    for (std::size_t k = i; k < t.size(); ++k) {
        if (t[k] == '/') {
            if (slash || !digit) throw MalformedInput("bad rational '" + s + "'");
            slash = true;
            digit = false;
        } else if (std::isdigit(static_cast<unsigned char>(t[k]))) {
            digit = true;
        } else {
            throw MalformedInput("bad rational '" + s + "'");
        }
    }
    if (!digit) throw MalformedInput("bad rational '" + s + "'");
    if (t[0] == '+') t.erase(0, 1);
    Rational q(t);
    if (q.get_den() == 0) throw MalformedInput("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Element of Q[h, hbar]; monomial (p, q) means h^p * hbar^q.
class Scalar {
public:
    using Monomial = std::pair<int, int>;

    Scalar() = default;
    Scalar(long c) { add_term({0, 0}, Rational(c)); }
    Scalar(const Rational& c) { add_term({0, 0}, c); }

    static Scalar monomial(int p, int q, const Rational& c = 1) {
        Scalar s;
        s.add_term({p, q}, c);
        return s;
    }
    static Scalar h() { return monomial(1, 0); }
    static Scalar hbar() { return monomial(0, 1); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial m, Rational c) {
        if (m.first < 0 || m.second < 0) throw MalformedInput("negative exponent");
        c.canonicalize();  // mpq arithmetic assumes canonical operands
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(int p, int q) const {
        auto it = terms_.find({p, q});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int min_total_degree() const {
        int d = 1 << 30;
        for (auto& [m, c] : terms_) d = std::min(d, m.first + m.second);
        return d;
    }

    // Drop monomials of total degree > max_total.
    Scalar truncated(int max_total) const {
        if (max_total < 0) return *this;
        Scalar r;
        for (auto& [m, c] : terms_)
            if (m.first + m.second <= max_total) r.terms_.emplace(m, c);
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Scalar operator-() const {
        Scalar r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar scaled(const Rational& q) const {
        if (q == 0) return {};
        Scalar r = *this;
        for (auto& [m, c] : r.terms_) c *= q;
        return r;
    }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

    // Canonical text: "c*h^p*hbar^q + ..." ordered by (p, q); "0" when empty.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += c.get_str();
            if (m.first > 0) out += "*h^" + std::to_string(m.first);
            if (m.second > 0) out += "*hbar^" + std::to_string(m.second);
        }
        return out;
    }

    static Scalar parse(const std::string& text) {
        Scalar r;
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s == "0") return r;
        if (s.empty()) throw MalformedInput("empty scalar");
        // terms are separated by '+'; negative coefficients carry their own '-'
        std::vector<std::string> parts;
        std::string cur;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '+' && i > 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += s[i];
            }
        }
        parts.push_back(cur);
        for (auto& part : parts) {
            if (part.empty()) throw MalformedInput("empty term in '" + text + "'");
            std::vector<std::string> fac;
            std::string f;
            for (char ch : part) {
                if (ch == '*') {
                    fac.push_back(f);
                    f.clear();
                } else {
                    f += ch;
                }
            }
            fac.push_back(f);
            Rational c = parse_rational(fac[0]);
            int p = 0, q = 0;
            for (std::size_t k = 1; k < fac.size(); ++k) {
                auto pos = fac[k].find('^');
                if (pos == std::string::npos) throw MalformedInput("missing exponent in '" + text + "'");
                std::string var = fac[k].substr(0, pos), ex = fac[k].substr(pos + 1);
                if (ex.empty() || !std::all_of(ex.begin(), ex.end(), ::isdigit))
                    throw MalformedInput("bad exponent in '" + text + "'");
                int e = std::stoi(ex);
                if (var == "h") p += e;
                else if (var == "hbar") q += e;
                else throw MalformedInput("unknown variable '" + var + "'");
            }
            r.add_term({p, q}, c);
        }
        return r;
    }

private:
    std::map<Monomial, Rational> terms_;
};

inline Rational reduce_mod_params(const Scalar& s) { return s.coeff(0, 0); }

// Product over inversions (i<j, perm[i]>perm[j]) of (-1)^{deg[i]*deg[j]}.
// perm[i] is the target position of the element currently at position i.
inline int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
    if (perm.size() != degrees.size()) throw MalformedInput("koszul_sign: length mismatch");
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p])
            throw MalformedInput("koszul_sign: not a permutation");
        seen[p] = 1;
    }
    int odd = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if ((degrees[i] & 1) == 0) continue;
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && (degrees[j] & 1)) odd ^= 1;
    }
    return odd ? -1 : 1;
}

// Sign of rearranging items (given in source order with degrees) into the
// order target[0], target[1], ... (entries are source indices).
inline int transport_sign(const std::vector<int>& degrees, const std::vector<int>& target) {
    std::vector<int> perm(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) perm[target[k]] = static_cast<int>(k);
    return koszul_sign(perm, degrees);
}

inline int parity_sign(int e) { return (e & 1) ? -1 : 1; }

}  // namespace cyq
