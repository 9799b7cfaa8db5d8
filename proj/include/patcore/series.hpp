#pragma once

// Exact bivariate power series truncated to the box deg_x <= Nx, deg_y <= Ny,
// and the generating functions built from them.

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace patcore {

class BiSeries {
public:
    BiSeries() : BiSeries(0, 0) {}
    BiSeries(int nx, int ny) : nx_(nx), ny_(ny) {
        if (nx < 0 || ny < 0) throw invalid_input("series bounds must be >= 0");
        c_.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), Rational(0));
    }

    static BiSeries constant(const Rational& v, int nx, int ny) {
        BiSeries s(nx, ny);
        s.c_[0] = v;
        return s;
    }
    static BiSeries monomial(int a, int b, int nx, int ny, const Rational& v = 1) {
        BiSeries s(nx, ny);
        if (a <= nx && b <= ny) s.ref(a, b) = v;
        return s;
    }
    static BiSeries x(int nx, int ny) { return monomial(1, 0, nx, ny); }
    static BiSeries y(int nx, int ny) { return monomial(0, 1, nx, ny); }

    int nx() const noexcept { return nx_; }
    int ny() const noexcept { return ny_; }

    /// Coefficient of x^a y^b; asking beyond the truncation is an error.
    const Rational& coeff(int a, int b) const {
        if (a < 0 || b < 0 || a > nx_ || b > ny_)
            throw invalid_input("coefficient (" + std::to_string(a) + "," + std::to_string(b) + ") outside truncation");
        return c_[idx(a, b)];
    }
    void set(int a, int b, const Rational& v) {
        if (a < 0 || b < 0 || a > nx_ || b > ny_) throw invalid_input("coefficient outside truncation");
        c_[idx(a, b)] = v;
    }

    /// Integer coefficient; throws if the coefficient is not integral.
    BigInt icoeff(int a, int b) const {
        const auto& v = coeff(a, b);
        if (denominator(v) != 1) throw internal_error("non-integral coefficient at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        return numerator(v);
    }

    /// Coefficients [x^0..x^nx] of the y^0 slice, as integers.
    std::vector<BigInt> x_sequence(int b = 0) const {
        std::vector<BigInt> out;
        for (int a = 0; a <= nx_; ++a) out.push_back(icoeff(a, b));
        return out;
    }

    BiSeries truncate(int nx, int ny) const {
        BiSeries s(std::min(nx, nx_), std::min(ny, ny_));
        for (int a = 0; a <= s.nx_; ++a)
            for (int b = 0; b <= s.ny_; ++b) s.ref(a, b) = c_[idx(a, b)];
        return s;
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
    }

    /// Smallest x-degree (resp. y-degree) carrying a nonzero term; INT_MAX for zero.
    int valuation_x() const {
        for (int a = 0; a <= nx_; ++a)
            for (int b = 0; b <= ny_; ++b)
                if (c_[idx(a, b)] != 0) return a;
        return std::numeric_limits<int>::max();
    }
    int valuation_y() const {
        for (int b = 0; b <= ny_; ++b)
            for (int a = 0; a <= nx_; ++a)
                if (c_[idx(a, b)] != 0) return b;
        return std::numeric_limits<int>::max();
    }

    friend BiSeries operator+(const BiSeries& p, const BiSeries& q) {
        BiSeries s(std::min(p.nx_, q.nx_), std::min(p.ny_, q.ny_));
        for (int a = 0; a <= s.nx_; ++a)
            for (int b = 0; b <= s.ny_; ++b) s.ref(a, b) = p.c_[p.idx(a, b)] + q.c_[q.idx(a, b)];
        return s;
    }
    friend BiSeries operator-(const BiSeries& p) {
        BiSeries s = p;
        for (auto& v : s.c_) v = -v;
        return s;
    }
    friend BiSeries operator-(const BiSeries& p, const BiSeries& q) { return p + (-q); }
    friend BiSeries operator+(const BiSeries& p, const Rational& r) {
        BiSeries s = p;
        s.c_[0] += r;
        return s;
    }
    friend BiSeries operator+(const Rational& r, const BiSeries& p) { return p + r; }
    friend BiSeries operator-(const BiSeries& p, const Rational& r) { return p + Rational(-r); }
    friend BiSeries operator-(const Rational& r, const BiSeries& p) { return (-p) + r; }
    friend BiSeries operator*(const BiSeries& p, const Rational& r) {
        BiSeries s = p;
        for (auto& v : s.c_) v *= r;
        return s;
    }
    friend BiSeries operator*(const Rational& r, const BiSeries& p) { return p * r; }

    friend BiSeries operator*(const BiSeries& p, const BiSeries& q) {
        BiSeries s(std::min(p.nx_, q.nx_), std::min(p.ny_, q.ny_));
        const auto pt = p.terms(s.nx_, s.ny_), qt = q.terms(s.nx_, s.ny_);
        for (const auto& [pa, pb, pv] : pt)
            for (const auto& [qa, qb, qv] : qt) {
                if (pa + qa > s.nx_) continue;
                if (pb + qb > s.ny_) continue;
                s.ref(pa + qa, pb + qb) += *pv * *qv;
            }
        return s;
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    BiSeries inverse() const {
        const Rational c0 = c_[0];
        if (c0 == 0) throw arithmetic_domain_error("inverse of a series with zero constant term");
        BiSeries s(nx_, ny_);
        const Rational inv0 = 1 / c0;
        const auto t = terms(nx_, ny_);
        // Lexicographic order visits every (a-k, b-l) before (a, b).
        for (int a = 0; a <= nx_; ++a)
            for (int b = 0; b <= ny_; ++b) {
                if (a == 0 && b == 0) {
                    s.ref(0, 0) = inv0;
                    continue;
                }
                Rational acc = 0;
                for (const auto& [k, l, v] : t) {
                    if ((k == 0 && l == 0) || k > a || l > b) continue;
                    acc += *v * s.c_[s.idx(a - k, b - l)];
                }
                s.ref(a, b) = -acc * inv0;
            }
        return s;
    }

    friend BiSeries operator/(const BiSeries& p, const BiSeries& q) { return p * q.inverse(); }

    /// Square root with constant term 1; needs constant term 1.
    BiSeries sqrt() const {
        if (c_[0] != 1) throw arithmetic_domain_error("sqrt needs constant term 1");
        BiSeries s(nx_, ny_);
        s.ref(0, 0) = 1;
        for (int a = 0; a <= nx_; ++a)
            for (int b = 0; b <= ny_; ++b) {
                if (a == 0 && b == 0) continue;
                Rational acc = c_[idx(a, b)];
                for (int k = 0; k <= a; ++k)
                    for (int l = 0; l <= b; ++l) {
                        if ((k == 0 && l == 0) || (k == a && l == b)) continue;
                        const auto& u = s.c_[s.idx(k, l)];
                        if (u == 0) continue;
                        acc -= u * s.c_[s.idx(a - k, b - l)];
                    }
                s.ref(a, b) = acc / 2;
            }
        return s;
    }

    /// Multiply by x^a y^b, keeping the bounds.
    BiSeries shift(int a, int b) const {
        if (a < 0 || b < 0) throw invalid_input("shift exponents must be >= 0");
        BiSeries s(nx_, ny_);
        for (int i = 0; i + a <= nx_; ++i)
            for (int j = 0; j + b <= ny_; ++j) s.ref(i + a, j + b) = c_[idx(i, j)];
        return s;
    }

    /// Exact division by x^a y^b; the bounds drop by (a, b).
    BiSeries divide_monomial(int a, int b) const {
        if (a < 0 || b < 0 || a > nx_ || b > ny_) throw invalid_input("bad monomial divisor");
        for (int i = 0; i <= nx_; ++i)
            for (int j = 0; j <= ny_; ++j)
                if ((i < a || j < b) && c_[idx(i, j)] != 0)
                    throw arithmetic_domain_error("series not divisible by x^" + std::to_string(a) + " y^" + std::to_string(b));
        BiSeries s(nx_ - a, ny_ - b);
        for (int i = a; i <= nx_; ++i)
            for (int j = b; j <= ny_; ++j) s.ref(i - a, j - b) = c_[idx(i, j)];
        return s;
    }

    friend bool operator==(const BiSeries& p, const BiSeries& q) {
        return p.nx_ == q.nx_ && p.ny_ == q.ny_ && p.c_ == q.c_;
    }

    /// Equal on the common truncation box.
    bool agrees_with(const BiSeries& o) const {
        const int ax = std::min(nx_, o.nx_), ay = std::min(ny_, o.ny_);
        for (int a = 0; a <= ax; ++a)
            for (int b = 0; b <= ay; ++b)
                if (coeff(a, b) != o.coeff(a, b)) return false;
        return true;
    }

    /// Sparse listing "c*x^a*y^b + ..." ordered by (deg_x, deg_y).
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int a = 0; a <= nx_; ++a)
            for (int b = 0; b <= ny_; ++b) {
                const auto& v = c_[idx(a, b)];
                if (v == 0) continue;
                if (!first) os << " + ";
                first = false;
                os << v;
                if (a) os << "*x^" << a;
                if (b) os << "*y^" << b;
            }
        if (first) os << "0";
        os << " + O(x^" << nx_ + 1 << ", y^" << ny_ + 1 << ")";
        return os.str();
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * (ny_ + 1) + b; }
    Rational& ref(int a, int b) { return c_[idx(a, b)]; }

    struct Term {
        int a, b;
        const Rational* v;
    };
    std::vector<Term> terms(int max_a, int max_b) const {
        std::vector<Term> out;
        for (int a = 0; a <= std::min(max_a, nx_); ++a)
            for (int b = 0; b <= std::min(max_b, ny_); ++b)
                if (c_[idx(a, b)] != 0) out.push_back({a, b, &c_[idx(a, b)]});
        return out;
    }

    int nx_, ny_;
    std::vector<Rational> c_;
};

/// S(X, Y) truncated to (nx, ny). Throws arithmetic_domain_error when the
/// truncation of S, X or Y would leave result coefficients undetermined.
inline BiSeries compose(const BiSeries& s, const BiSeries& X, const BiSeries& Y, int nx, int ny) {
    if (X.nx() < nx || X.ny() < ny || Y.nx() < nx || Y.ny() < ny)
        throw arithmetic_domain_error("substituted series are truncated below the requested bounds");
    auto beyond = [&](const BiSeries& t, int power) {
        const long long vx = t.valuation_x(), vy = t.valuation_y();
        return static_cast<long long>(power) * vx > nx || static_cast<long long>(power) * vy > ny;
    };
    if (!beyond(X, s.nx() + 1) || !beyond(Y, s.ny() + 1))
        throw arithmetic_domain_error("substitution would lose precision");
    const auto Xt = X.truncate(nx, ny), Yt = Y.truncate(nx, ny);
    std::vector<BiSeries> ypow{BiSeries::constant(1, nx, ny)};
    for (int j = 1; j <= s.ny(); ++j) ypow.push_back(ypow.back() * Yt);
    BiSeries out(nx, ny), xpow = BiSeries::constant(1, nx, ny);
    for (int i = 0; i <= s.nx(); ++i) {
        if (i > 0) xpow = xpow * Xt;
        if (xpow.is_zero()) break;
        BiSeries inner(nx, ny);
        bool any = false;
        for (int j = 0; j <= s.ny(); ++j) {
            const auto& c = s.coeff(i, j);
            if (c == 0) continue;
            inner = inner + ypow[j] * c;
            any = true;
        }
        if (any) out = out + xpow * inner;
    }
    return out;
}

/// S(x, t) for a series t (typically t = t(x) with zero constant term).
inline BiSeries subst_y(const BiSeries& s, const BiSeries& t, int nx, int ny) {
    return compose(s, BiSeries::x(std::max(nx, t.nx()), std::max(ny, t.ny())), t, nx, ny);
}

/// Univariate helper: x/(1-x) to order n, as a series with ny = 0.
inline BiSeries x_over_one_minus_x(int n, int ny = 0) {
    BiSeries s(n, ny);
    for (int a = 1; a <= n; ++a) s.set(a, 0, 1);
    return s;
}

inline std::vector<BigInt> to_integers(const std::vector<Rational>& v) {
    std::vector<BigInt> out;
    for (const auto& r : v) {
        if (denominator(r) != 1) throw internal_error("non-integral value");
        out.push_back(numerator(r));
    }
    return out;
}

// --- the 132 / D_n generating function -------------------------------------

/// F = 1 + xF + xyF^2 / (1 - y(F - 1)), solved by iteration.
inline BiSeries solve_F(int nx, int ny) {
    const auto X = BiSeries::x(nx, ny), Y = BiSeries::y(nx, ny);
    auto rhs = [&](const BiSeries& f) { return 1 + X * f + X * Y * f * f / (1 - Y * (f - 1)); };
    BiSeries f = BiSeries::constant(1, nx, ny);
    for (int round = 0; round <= nx; ++round) f = rhs(f);
    if (!(rhs(f) == f)) throw internal_error("functional equation for F has nonzero residual");
    return f;
}

/// I(n, k) = 1/n sum_j C(n, k-j) C(n, j+1) C(n-1+j, n-1).
inline BigInt closed_form_I(int n, int k) {
    if (n < 1 || k < 0) throw invalid_input("closed_form_I needs n >= 1, k >= 0");
    BigInt sum = 0;
    for (int j = 0; j <= n - 1; ++j) sum += binomial(n, k - j) * binomial(n, j + 1) * binomial(n - 1 + j, n - 1);
    if (sum % n != 0) throw internal_error("closed form for I(n,k) is not an integer");
    return sum / n;
}

/// Narayana number: 132-avoiders of length n with k left-to-right minima.
inline BigInt narayana(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (n < 0 || k < 1 || k > n) return 0;
    return binomial(n, k) * binomial(n, k - 1) / n;
}

struct CountTable {
    std::string label;
    std::string note;
    std::vector<std::vector<BigInt>> rows;

    bool operator==(const CountTable& o) const { return rows == o.rows; }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
            os << '\n';
        }
        return os.str();
    }
    std::string to_csv() const {
        std::ostringstream os;
        os << "row,col,value\n";
        for (std::size_t n = 0; n < rows.size(); ++n)
            for (std::size_t k = 0; k < rows[n].size(); ++k) os << n << ',' << k << ',' << rows[n][k] << '\n';
        return os.str();
    }
    /// Rows read left to right, concatenated.
    std::vector<BigInt> flattened() const {
        std::vector<BigInt> out;
        for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
        return out;
    }
};

/// Narayana triangle by formula: row n lists the counts with 1, 2, ..., n lrms (row 0 is [1]).
inline CountTable narayana_table_formula(int rows) {
    CountTable t{"narayana", "formula", {}};
    for (int n = 0; n < rows; ++n) {
        std::vector<BigInt> r;
        if (n == 0) r.push_back(1);
        for (int k = 1; k <= n; ++k) r.push_back(narayana(n, k));
        t.rows.push_back(r);
    }
    return t;
}

/// The closed expression for sum N(n,k) x^k y^n with y marking length and
/// x the number of lrms, expanded to degree `order` in both variables.
/// It is F's quadratic formula after x -> xy, y -> y/(1-y), cleared of
/// (1-y). The middle term of the discriminant carries a factor 2; with
/// `literal_middle_term` it is dropped, and the expansion is no longer integral.
inline BiSeries narayana_closed_form(int order, bool literal_middle_term = false) {
    const int nx = order, ny = order + 1;
    const auto X = BiSeries::x(nx, ny), Y = BiSeries::y(nx, ny);
    const auto xy = X * Y;
    const Rational middle = literal_middle_term ? 1 : 2;
    const auto disc = (xy * xy - 4 * xy) * Y * Y + middle * (xy * xy - 3 * xy) * Y * (1 - Y) +
                      (xy - 1) * (xy - 1) * (1 - Y) * (1 - Y);
    const auto num = (2 - xy) * Y + (1 - Y) * (1 - xy) - disc.sqrt();
    return num.divide_monomial(0, 1) * Rational(1, 2);
}

/// Narayana triangle from the expression above.
inline CountTable narayana_table_closed_form(int rows) {
    const auto s = narayana_closed_form(rows);
    CountTable t{"narayana", "closed form", {}};
    for (int n = 0; n < rows; ++n) {
        std::vector<BigInt> r;
        if (n == 0) r.push_back(s.icoeff(0, 0));
        for (int k = 1; k <= n; ++k) r.push_back(s.icoeff(k, n));
        t.rows.push_back(r);
    }
    return t;
}

/// Narayana triangle from F(xy, y/(1-y)).
inline CountTable narayana_table_series(int rows) {
    const int n = rows;
    const auto f = solve_F(n, n);
    const auto X = BiSeries::x(n, n), Y = BiSeries::y(n, n);
    const auto s = compose(f, X * Y, Y / (1 - Y), n, n);
    CountTable t{"narayana", "substitution into F", {}};
    for (int len = 0; len < rows; ++len) {
        std::vector<BigInt> r;
        if (len == 0) r.push_back(s.icoeff(0, 0));
        for (int k = 1; k <= len; ++k) r.push_back(s.icoeff(k, len));
        t.rows.push_back(r);
    }
    return t;
}

inline void trim_zeros(std::vector<BigInt>& r) {
    while (r.size() > 1 && r.back() == 0) r.pop_back();
}

/// Independent-size triangle entry (l, k): 132-avoiders of length l built from an independent set of size k.
inline BigInt independent_size_entry(int l, int k) {
    if (l < 0 || k < 0) return 0;
    if (k == 0) return 1;
    BigInt sum = 0;
    for (int n = 1; n <= l; ++n) sum += closed_form_I(n, k) * binomial(l - n - 1, k - 1);
    return sum;
}

inline CountTable independent_size_table_formula(int rows) {
    CountTable t{"a262370", "formula", {}};
    for (int l = 0; l < rows; ++l) {
        std::vector<BigInt> r;
        for (int k = 0; k <= l; ++k) r.push_back(independent_size_entry(l, k));
        trim_zeros(r);
        t.rows.push_back(r);
    }
    return t;
}

/// Independent-size triangle from F(x, xy/(1-x)).
inline CountTable independent_size_table_series(int rows) {
    const int n = std::max(rows - 1, 0);
    const int ky = n;
    const auto f = solve_F(n, std::min(n, ky));
    const auto X = BiSeries::x(n, ky), Y = BiSeries::y(n, ky);
    const auto s = compose(f, X, X * Y / (1 - X), n, std::min(n, ky));
    CountTable t{"a262370", "substitution into F", {}};
    for (int l = 0; l < rows; ++l) {
        std::vector<BigInt> r;
        for (int k = 0; k <= std::min(l, s.ny()); ++k) r.push_back(s.icoeff(l, k));
        trim_zeros(r);
        t.rows.push_back(r);
    }
    return t;
}

// --- rightmost entries of the independent-size triangle ---------------------

struct RightmostCheck {
    bool agree = true;
    int rows_checked = 0;
    std::string first_failure;
    std::vector<BigInt> catalan_column;  // rows 2 + 3i
    std::vector<BigInt> pascal_column;   // rows 1 + 3i
};

/// Central elements of the (1,2)-Pascal triangle: 1, 3, 9, 30, 105, ...
inline BigInt pascal12_central(int i) {
    if (i == 0) return 1;
    return 3 * binomial(2 * i - 1, i);
}

inline RightmostCheck rightmost_entries_check(const CountTable& table) {
    RightmostCheck rep;
    rep.rows_checked = static_cast<int>(table.rows.size()) - 1;
    for (std::size_t l = 0; l < table.rows.size(); ++l) {
        const auto& last = table.rows[l].back();
        if (l % 3 == 2) {
            const int i = static_cast<int>(l / 3);
            rep.catalan_column.push_back(last);
            if (last != catalan(i) && rep.agree) {
                rep.agree = false;
                rep.first_failure = "row " + std::to_string(l) + ": rightmost " + last.str() + " vs Catalan " + catalan(i).str();
            }
        } else if (l % 3 == 1) {
            const int i = static_cast<int>(l / 3);
            rep.pascal_column.push_back(last);
            if (last != pascal12_central(i) && rep.agree) {
                rep.agree = false;
                rep.first_failure = "row " + std::to_string(l) + ": rightmost " + last.str() + " vs " + pascal12_central(i).str();
            }
        }
    }
    return rep;
}

// --- classes built from cores ------------------------------------------------

struct SmoothFamily {
    BiSeries G, P_ind, P;
};

/// G counts independent sets of D(EB_a); P_ind and P the smooth class.
inline SmoothFamily smooth_family(int nx, int ny) {
    const auto f = solve_F(nx + 1, ny);
    const auto Y = BiSeries::y(nx + 1, ny);
    const auto g = ((f - 1).divide_monomial(1, 0) / (1 + Y).truncate(nx, ny));
    const auto X = BiSeries::x(nx, ny);
    const auto ft = f.truncate(nx, ny);
    const auto p_ind = X * (ft - 1) / (2 - g) + X;
    return {g, p_ind, (1 - p_ind).inverse()};
}

/// (1 - 5x + 3x^2 + x^2 sqrt(1 - 4x)) / (1 - 6x + 8x^2 - 4x^3).
inline BiSeries closed_form_smooth(int n) {
    const auto X = BiSeries::x(n, 0);
    const auto num = 1 - 5 * X + 3 * X * X + X * X * (1 - 4 * X).sqrt();
    const auto den = 1 - 6 * X + 8 * X * X - 4 * X * X * X;
    return num / den;
}

struct UpdownFamily {
    BiSeries R, Q_up, Q_down, Q_up_elim, Q_down_elim, Q_ind, Q;
};

/// R counts independent sets of UD(B_a); Q the class Av(1234, 1324, 2143).
inline UpdownFamily updown_family(int nx, int ny) {
    const auto X = BiSeries::x(nx, ny), Y = BiSeries::y(nx, ny);
    const auto one_minus_x = 1 - X;
    const auto r = (1 - X - X * Y / one_minus_x).inverse();
    const auto c = r - 1;
    const auto d = X * X * Y * r / one_minus_x;
    const auto e = X * X + X * X * Y;
    const auto a = X * r - X - X * X - X * X * Y;
    // Q_up (1 - d) - (c + d) Q_down = a + d e, and the same with the roles swapped.
    const auto rhs = a + d * e;
    const auto sym = rhs / (1 - c - 2 * d);
    const auto p = 1 - d, q = -(c + d);
    const auto det = p * p - q * q;
    if (det.coeff(0, 0) == 0) throw internal_error("singular linear system");
    const auto up = (rhs * p - q * rhs) / det;
    const auto down = (p * rhs - rhs * q) / det;
    const auto q_ind = sym + sym + X + X * X + X * X * Y;
    return {r, sym, sym, up, down, q_ind, (1 - q_ind).inverse()};
}

/// (1 - 3x - 2x^3) / (1 - 4x + 2x^2 - 2x^3 + x^4).
inline BiSeries closed_form_nice(int n) {
    const auto X = BiSeries::x(n, 0);
    const auto X2 = X * X, X3 = X2 * X;
    return (1 - 3 * X - 2 * X3) / (1 - 4 * X + 2 * X2 - 2 * X3 + X2 * X2);
}

struct FourPatternFamily {
    BiSeries S_up, S_down, S_up_elim, S_down_elim, S_ind, S;
};

/// The class Av(1234, 1324, 1432, 3214).
inline FourPatternFamily four_pattern_family(int nx, int ny) {
    const auto X = BiSeries::x(nx, ny), Y = BiSeries::y(nx, ny);
    const auto X2 = X * X, X3 = X2 * X, X4 = X2 * X2;
    // S_up (1 - x^2 y) - (x + x y) S_down = x^3 (1 + 3y + y^2) + x^4 y (1 + y), and symmetrically.
    const auto p = 1 - X2 * Y, q = -(X + X * Y);
    const auto rhs = X3 * (1 + 3 * Y + Y * Y) + X4 * Y * (1 + Y);
    const auto sym = rhs / (p + q);
    const auto det = p * p - q * q;
    if (det.coeff(0, 0) == 0) throw internal_error("singular linear system");
    const auto up = (rhs * p - q * rhs) / det;
    const auto down = (p * rhs - rhs * q) / det;
    const auto s_ind = sym + sym + X + X2 * (1 + Y) + X4 * (1 + 7 * Y + 7 * Y * Y);
    return {sym, sym, up, down, s_ind, (1 - s_ind).inverse()};
}

/// (1 - x - x^2 - x^3) / (1 - 2x - x^2 - 2x^3 - 4x^4 - 8x^5 + 15x^7 + 14x^8 + 7x^9).
inline BiSeries closed_form_notasnice(int n) {
    const auto X = BiSeries::x(n, 0);
    std::vector<BiSeries> p{BiSeries::constant(1, n, 0)};
    for (int i = 1; i <= 9; ++i) p.push_back(p.back() * X);
    return (1 - p[1] - p[2] - p[3]) / (1 - 2 * p[1] - p[2] - 2 * p[3] - 4 * p[4] - 8 * p[5] + 15 * p[7] + 14 * p[8] + 7 * p[9]);
}

struct NonintersectingFamily {
    BiSeries G, H, I, J, J_statement;
};

/// H counts D(B_{a,2}), I counts D(EB_{a,2}), J counts D(B_{a,3}).
/// J_statement is the alternative closed form (1+y)I - y * y(1+y)^2 (G-1) I / (1 - y(G-1)).
inline NonintersectingFamily nonintersecting_family(int nx, int ny) {
    const auto g = smooth_family(nx, ny).G;
    const auto Y = BiSeries::y(nx, ny);
    const auto inv = (1 - Y * (g - 1)).inverse();
    const auto h = g * inv;
    const auto i = h + Y * g * (h - 1) * inv;
    const auto tail = Y * (1 + Y) * (1 + Y) * i * (g - 1) * inv;
    const auto j = (1 + Y) * i - Y + tail;
    const auto j_stmt = (1 + Y) * i - Y * tail;
    return {g, h, i, j, j_stmt};
}

/// Coefficients 0..n of x^b * S(x, x/(1-x)).
inline std::vector<BigInt> boundary_length_counter(const BiSeries& s, int b, int n) {
    const int m = std::max(n - b, 0);
    const auto t = x_over_one_minus_x(m, 0);
    const auto u = subst_y(s.truncate(m, m), t, m, 0);
    std::vector<BigInt> out(static_cast<std::size_t>(n + 1), 0);
    for (int a = 0; a <= m && a + b <= n; ++a) out[a + b] = u.icoeff(a, 0);
    return out;
}

/// Length counts for type (a, 2) boundaries, indices 0..n.
inline std::vector<BigInt> type_a2_counts(int n) {
    const int m = std::max(n - 2, 0);
    return boundary_length_counter(nonintersecting_family(m, m).H, 2, n);
}

/// Length counts for type (a, 3) boundaries, indices 0..n.
inline std::vector<BigInt> type_a3_counts(int n, bool statement_version = false) {
    const int m = std::max(n - 3, 0);
    const auto fam = nonintersecting_family(m, m);
    return boundary_length_counter(statement_version ? fam.J_statement : fam.J, 3, n);
}

/// Coefficients 0..n of P(x, x/(1-x)), Q(x, x), S(x, x).
inline std::vector<BigInt> smooth_counts(int n) {
    return subst_y(smooth_family(n, n).P, x_over_one_minus_x(n, 0), n, 0).x_sequence();
}
inline std::vector<BigInt> nice_counts(int n) {
    return subst_y(updown_family(n, n).Q, BiSeries::x(n, 0), n, 0).x_sequence();
}
inline std::vector<BigInt> notasnice_counts(int n) {
    return subst_y(four_pattern_family(n, n).S, BiSeries::x(n, 0), n, 0).x_sequence();
}

}  // namespace patcore
