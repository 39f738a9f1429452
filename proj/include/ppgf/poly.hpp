#pragma once

// Sparse multivariate polynomials over the exact integers (and, internally,
// rationals).  The variable universe is a fixed registry: t, u, eps, the
// series variables z1..z12, and the per-level weight variables t1..t12,
// x1..x12.  Terms are kept in graded order (total degree, then
// earlier-variable-heavy first), which makes the text rendering of a
// polynomial deterministic: "2 + 3*t + 2*t^2".

#include "ppgf/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppgf {

// ---------------------------------------------------------------------------
// Variable registry
// ---------------------------------------------------------------------------

class Var {
public:
    Var() : id_(-1) {}
    explicit Var(int id) : id_(id) {}
    int id() const { return id_; }
    bool valid() const { return id_ >= 0; }
    bool operator==(const Var& o) const { return id_ == o.id_; }
    bool operator!=(const Var& o) const { return id_ != o.id_; }
    bool operator<(const Var& o) const { return id_ < o.id_; }

private:
    int id_;
};

namespace detail {
inline const std::vector<std::string>& var_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v = {"t", "u", "eps"};
        for (int i = 1; i <= 12; ++i) v.push_back("z" + std::to_string(i));
        for (int i = 1; i <= 12; ++i) v.push_back("t" + std::to_string(i));
        for (int i = 1; i <= 12; ++i) v.push_back("x" + std::to_string(i));
        return v;
    }();
    return names;
}
}  // namespace detail

inline int var_count() { return static_cast<int>(detail::var_names().size()); }

inline const std::string& var_name(Var v) {
    const auto& names = detail::var_names();
    if (v.id() < 0 || v.id() >= static_cast<int>(names.size()))
        throw std::out_of_range("variable id out of range");
    return names[static_cast<size_t>(v.id())];
}

inline Var var(const std::string& name) {
    const auto& names = detail::var_names();
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Var(static_cast<int>(i));
    throw std::invalid_argument("unknown variable: " + name);
}

inline Var var_t() { return Var(0); }
inline Var var_u() { return Var(1); }
inline Var var_eps() { return Var(2); }
inline Var var_z(int i) { return var("z" + std::to_string(i)); }
inline Var var_level_t(int i) { return var("t" + std::to_string(i)); }
inline Var var_level_x(int i) { return var("x" + std::to_string(i)); }

// ---------------------------------------------------------------------------
// Exponent vectors and the term order
// ---------------------------------------------------------------------------

/// Exponent vector indexed by variable id, with trailing zeros trimmed.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::vector<int> e) : exps_(std::move(e)) { trim(); }

    static ExpVec unit(Var v, int e = 1) {
        std::vector<int> exps(static_cast<size_t>(v.id()) + 1, 0);
        exps.back() = e;
        return ExpVec(std::move(exps));
    }

    int operator[](Var v) const {
        size_t i = static_cast<size_t>(v.id());
        return i < exps_.size() ? exps_[i] : 0;
    }

    ExpVec with(Var v, int e) const {
        std::vector<int> exps = exps_;
        size_t i = static_cast<size_t>(v.id());
        if (exps.size() <= i) exps.resize(i + 1, 0);
        exps[i] = e;
        return ExpVec(std::move(exps));
    }

    int total_degree() const {
        int d = 0;
        for (int e : exps_) d += e;
        return d;
    }

    bool empty() const { return exps_.empty(); }
    size_t size() const { return exps_.size(); }
    const std::vector<int>& raw() const { return exps_; }

    ExpVec operator+(const ExpVec& o) const {
        std::vector<int> r(std::max(exps_.size(), o.exps_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < exps_.size()) r[i] += exps_[i];
            if (i < o.exps_.size()) r[i] += o.exps_[i];
        }
        return ExpVec(std::move(r));
    }

    bool operator==(const ExpVec& o) const { return exps_ == o.exps_; }

private:
    void trim() {
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }
    std::vector<int> exps_;
};

/// Graded term order: by total degree, ties broken so that monomials heavier
/// in earlier variables come first (so t precedes u, and t^2*u precedes t*u^2).
struct MonoLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        size_t n = std::max(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            int ai = i < a.size() ? a.raw()[i] : 0;
            int bi = i < b.size() ? b.raw()[i] : 0;
            if (ai != bi) return ai > bi;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

template <class Coeff>
class PolyT {
public:
    using TermMap = std::map<ExpVec, Coeff, MonoLess>;

    PolyT() = default;
    PolyT(int c) { if (c != 0) terms_[ExpVec()] = Coeff(c); }
    PolyT(const Coeff& c) { if (c != 0) terms_[ExpVec()] = c; }

    static PolyT variable(Var v) { return monomial(ExpVec::unit(v), Coeff(1)); }

    static PolyT monomial(const ExpVec& e, const Coeff& c) {
        PolyT p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Coeff constant_value() const {
        if (terms_.empty()) return Coeff(0);
        if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
        return terms_.begin()->second;
    }

    Coeff coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    int degree(Var v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
        return d;
    }

    std::set<Var> vars_used() const {
        std::set<Var> out;
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e.raw()[i] != 0) out.insert(Var(static_cast<int>(i)));
        return out;
    }

    PolyT& operator+=(const PolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyT& operator-=(const PolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    PolyT operator+(const PolyT& o) const { PolyT r = *this; r += o; return r; }
    PolyT operator-(const PolyT& o) const { PolyT r = *this; r -= o; return r; }
    PolyT operator-() const {
        PolyT r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    PolyT operator*(const PolyT& o) const {
        PolyT r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    PolyT& operator*=(const PolyT& o) { *this = *this * o; return *this; }

    PolyT operator*(const Coeff& c) const {
        PolyT r;
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    bool operator==(const PolyT& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyT& o) const { return !(*this == o); }

    PolyT pow(int e) const {
        if (e < 0) throw std::invalid_argument("pow: negative exponent");
        PolyT r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Simultaneous substitution var -> polynomial; unbound variables stay.
    PolyT substitute(const std::map<Var, PolyT>& bindings) const {
        // Per-binding power cache. Exponents here are tiny.
        std::map<Var, std::vector<PolyT>> powers;
        PolyT result;
        for (const auto& [e, c] : terms_) {
            PolyT term = PolyT(c);
            ExpVec kept;
            for (size_t i = 0; i < e.size(); ++i) {
                int exp = e.raw()[i];
                if (exp == 0) continue;
                Var v(static_cast<int>(i));
                auto it = bindings.find(v);
                if (it == bindings.end()) {
                    kept = kept + ExpVec::unit(v, exp);
                } else {
                    auto& cache = powers[v];
                    if (cache.empty()) cache.push_back(PolyT(1));
                    while (static_cast<int>(cache.size()) <= exp)
                        cache.push_back(cache.back() * it->second);
                    term *= cache[static_cast<size_t>(exp)];
                }
            }
            result += term * monomial(kept, Coeff(1));
        }
        return result;
    }

    PolyT substitute(Var v, const PolyT& value) const { return substitute({{v, value}}); }

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    PolyT coeff_of(Var v, int k) const {
        if (k < 0) throw std::invalid_argument("coeff_of: negative exponent");
        PolyT r;
        for (const auto& [e, c] : terms_)
            if (e[v] == k) r.add_term(e.with(v, 0), c);
        return r;
    }

    /// Full evaluation at an integer point; every used variable must be bound.
    Coeff evaluate(const std::map<Var, Coeff>& point) const {
        Coeff total(0);
        for (const auto& [e, c] : terms_) {
            Coeff term = c;
            for (size_t i = 0; i < e.size(); ++i) {
                int exp = e.raw()[i];
                if (exp == 0) continue;
                auto it = point.find(Var(static_cast<int>(i)));
                if (it == point.end())
                    throw std::domain_error("evaluate: unbound variable " +
                                            var_name(Var(static_cast<int>(i))));
                Coeff base = it->second;
                for (int k = 0; k < exp; ++k) term *= base;
            }
            total += term;
        }
        return total;
    }

    /// Canonical text form, e.g. "2 + 3*t + 2*t^2", "1 - t", "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Coeff mag = c < 0 ? Coeff(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            std::string vars = monomial_string(e);
            if (vars.empty()) {
                out << mag;
            } else {
                if (mag != 1) out << mag << "*";
                out << vars;
            }
        }
        return out.str();
    }

private:
    static std::string monomial_string(const ExpVec& e) {
        std::ostringstream out;
        bool first = true;
        for (size_t i = 0; i < e.size(); ++i) {
            int exp = e.raw()[i];
            if (exp == 0) continue;
            if (!first) out << "*";
            out << var_name(Var(static_cast<int>(i)));
            if (exp > 1) out << "^" << exp;
            first = false;
        }
        return out.str();
    }

    void add_term(const ExpVec& e, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

using Poly = PolyT<Integer>;
using RatPoly = PolyT<Rational>;

inline Poly operator*(const Integer& c, const Poly& p) { return p * c; }

inline RatPoly to_rational(const Poly& p) {
    RatPoly r;
    for (const auto& [e, c] : p.terms()) r += RatPoly::monomial(e, Rational(c));
    return r;
}

/// Converts back to integer coefficients; throws if any coefficient is not an integer.
inline Poly to_integral(const RatPoly& p) {
    Poly r;
    for (const auto& [e, c] : p.terms()) r += Poly::monomial(e, rational_to_integer(c));
    return r;
}

// ---------------------------------------------------------------------------
// Parsing of the canonical text form
// ---------------------------------------------------------------------------

namespace detail {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    Integer parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("polynomial parse error: digit expected at '" + s.substr(start) + "'");
        return Integer(s.substr(start, pos - start));
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw std::invalid_argument("polynomial parse error: name expected at '" + s.substr(start) + "'");
        return s.substr(start, pos - start);
    }

    Poly parse_factor() {
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            return Poly(parse_uint());
        Var v = var(parse_ident());
        int exp = 1;
        if (eat('^')) exp = static_cast<int>(parse_uint().get_si());
        return Poly::monomial(ExpVec::unit(v, exp), Integer(1));
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                p *= parse_factor();
            } else if (pos < s.size() &&
                       std::isalpha(static_cast<unsigned char>(s[pos]))) {
                // juxtaposition like "3t"
                p *= parse_factor();
            } else {
                break;
            }
        }
        return p;
    }

    Poly parse_poly() {
        Poly total;
        bool negate = eat('-');
        if (!negate) eat('+');
        while (true) {
            Poly term = parse_term();
            total += negate ? -term : term;
            skip_ws();
            if (eat('-')) negate = true;
            else if (eat('+')) negate = false;
            else break;
        }
        skip_ws();
        if (pos != s.size())
            throw std::invalid_argument("polynomial parse error: trailing input '" + s.substr(pos) + "'");
        return total;
    }
};

}  // namespace detail

inline Poly parse_poly(const std::string& text) {
    detail::PolyParser p(text);
    return p.parse_poly();
}

// ---------------------------------------------------------------------------
// Interpolation
// ---------------------------------------------------------------------------

/// Lagrange interpolation through (x_i, y_i), returned as a polynomial in v.
/// The data must be consistent with integer coefficients; a fractional final
/// coefficient signals a degree-bound violation upstream and throws.
inline Poly interpolate(const std::vector<std::pair<Integer, Rational>>& points, Var v) {
    RatPoly total;
    RatPoly x = to_rational(Poly::variable(v));
    for (size_t i = 0; i < points.size(); ++i) {
        RatPoly basis(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate x value");
            basis *= x - RatPoly(Rational(points[j].first));
            denom *= Rational(points[i].first - points[j].first);
        }
        Rational scale = points[i].second / denom;
        total += basis * scale;
    }
    try {
        return to_integral(total);
    } catch (const std::domain_error&) {
        throw std::domain_error("interpolate: non-integer coefficients (degree bound violated)");
    }
}

/// Same, with polynomial values: combines SparsePoly samples q_i taken at
/// integer points x_i of some hidden polynomial in v.
inline Poly interpolate_poly(const std::vector<std::pair<Integer, Poly>>& points, Var v) {
    RatPoly total;
    RatPoly x = to_rational(Poly::variable(v));
    for (size_t i = 0; i < points.size(); ++i) {
        RatPoly basis(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis *= x - RatPoly(Rational(points[j].first));
            denom *= Rational(points[i].first - points[j].first);
        }
        RatPoly scaled;
        for (const auto& [e, c] : points[i].second.terms())
            scaled += RatPoly::monomial(e, Rational(c) / denom);
        total += basis * scaled;
    }
    try {
        return to_integral(total);
    } catch (const std::domain_error&) {
        throw std::domain_error("interpolate: non-integer coefficients (degree bound violated)");
    }
}

}  // namespace ppgf
