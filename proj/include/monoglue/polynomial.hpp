#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monoglue/errors.hpp"
#include "monoglue/matrix.hpp"
#include "monoglue/rational.hpp"

namespace monoglue {

/// Univariate polynomial over the rationals in the variable t. Coefficients
/// are stored lowest degree first with no trailing zeros; the zero polynomial
/// has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& a) { return Polynomial({a}); }

    /// c0 + c1 t + c2 t^2 + ...
    static Polynomial from_coeffs(std::vector<Rational> coeffs) {
        return Polynomial(std::move(coeffs));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree as a signed value; the zero polynomial reports -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial operator-() const {
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& a) {
        std::vector<Rational> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        return Polynomial(std::move(r));
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw error(errc::zero_polynomial, "division by the zero polynomial");
        if (a.degree() < b.degree()) return {Polynomial(), a};
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
        Rational lead_inv = b.leading().inverse();
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rational q = rem[k + b.c_.size() - 1] * lead_inv;
            quo[k] = q;
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem[k + j] -= q * b.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    bool divides(const Polynomial& a) const { return divmod(a, *this).second.is_zero(); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(long(i)) * c_[i];
        return Polynomial(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) throw error(errc::zero_polynomial, "monic of the zero polynomial");
        return leading().inverse() * *this;
    }

    bool all_integer_coeffs() const {
        for (const auto& a : c_)
            if (a.denominator() != 1) return false;
        return true;
    }

    /// t^deg * p(1/t), made monic. The constant term must be nonzero so the
    /// degree is preserved under reversal.
    Polynomial reciprocal_monic() const {
        if (is_zero() || coeff(0).is_zero())
            throw error(errc::zero_polynomial, "reciprocal needs a nonzero constant term");
        std::vector<Rational> r(c_.rbegin(), c_.rend());
        return Polynomial(std::move(r)).monic();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& a = c_[i];
            if (a.is_zero()) continue;
            if (out.empty())
                out += a.sign() < 0 ? "-" : "";
            else
                out += a.sign() < 0 ? "-" : "+";
            Rational mag = a.abs();
            if (i == 0 || mag != Rational(1)) out += mag.str();
            if (i == 1) out += "t";
            else if (i >= 2) out += "t^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Degree first, then coefficients compared from the constant term up. Total
/// order on polynomials, used to sort factor lists deterministically.
inline bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(std::size_t(i)) != b.coeff(std::size_t(i)))
            return a.coeff(std::size_t(i)) < b.coeff(std::size_t(i));
    }
    return false;
}

/// Monic characteristic polynomial det(tI - A) by the Faddeev-LeVerrier
/// recurrence, exact over the rationals.
inline Polynomial charpoly(const Matrix& a) {
    if (!a.is_square()) throw error(errc::not_square, "charpoly on " + a.shape_str());
    std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    Matrix m = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix am = a * m;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -(tr / Rational(long(k)));
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
    }
    return Polynomial(std::move(c));
}

inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/// Yun's algorithm: p = prod s_i^i with each s_i squarefree and monic.
/// Returns the nontrivial (s_i, i) pairs in increasing i.
inline std::vector<std::pair<Polynomial, int>> squarefree_decompose(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = p.monic();
    Polynomial d = poly_gcd(f, f.derivative());
    Polynomial b = divmod(f, d).first;
    Polynomial c = divmod(f.derivative(), d).first;
    Polynomial z = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial s = poly_gcd(b, z);
        if (s.degree() > 0) out.emplace_back(s, i);
        b = divmod(b, s).first;
        c = divmod(z, s).first;
        z = c - b.derivative();
        ++i;
    }
    return out;
}

namespace detail {

/// Positive divisors of |n| in increasing order; n must be nonzero.
inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Scale a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient (content removed). Same roots, same
/// factorization over the rationals up to constants.
inline Polynomial primitive_integer_form(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& a : p.coeffs()) l = lcm(l, a.denominator());
    std::vector<Rational> scaled(p.coeffs().size());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = Rational(mpz_class(l)) * p.coeff(i);
    mpz_class g = 0;
    for (const auto& a : scaled) g = gcd(g, a.numerator());
    if (g == 0) return Polynomial();
    if (scaled.back().sign() < 0) g = -g;
    std::vector<Rational> out(scaled.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = Rational(mpz_class(scaled[i].numerator() / g));
    return Polynomial(std::move(out));
}

/// All rational roots of a primitive integer polynomial, with the cofactor
/// left after dividing the corresponding linear factors out. Candidates come
/// from the rational root theorem; enumeration order is fixed.
inline std::pair<std::vector<Rational>, Polynomial> extract_rational_roots(Polynomial f) {
    std::vector<Rational> roots;
    while (f.degree() >= 1 && f.coeff(0).is_zero()) {
        roots.emplace_back(0);
        f = divmod(f, Polynomial({Rational(0), Rational(1)})).first;
    }
    bool progress = true;
    while (progress && f.degree() >= 1) {
        progress = false;
        auto nums = positive_divisors(f.coeff(0).numerator());
        auto dens = positive_divisors(f.leading().numerator());
        for (const auto& pn : nums) {
            for (const auto& qd : dens) {
                if (gcd(pn, qd) != 1) continue;
                for (int s : {1, -1}) {
                    Rational r(s < 0 ? mpz_class(-pn) : pn, qd);
                    if (!f.eval(r).is_zero()) continue;
                    roots.push_back(r);
                    f = primitive_integer_form(
                        divmod(f, Polynomial({-r, Rational(1)})).first);
                    progress = true;
                    break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    return {std::move(roots), std::move(f)};
}

inline Polynomial lagrange_interpolate(const std::vector<Rational>& xs,
                                       const std::vector<Rational>& ys) {
    Polynomial acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + (ys[i] / denom) * basis;
    }
    return acc;
}

/// Kronecker search for a degree-m integer factor of a primitive integer
/// polynomial f with no rational roots. Evaluation points are 0, 1, -1, 2,
/// -2, ... and candidate values at each point run over the divisors of
/// f(point); tuples are pruned by the congruence g(x_i) = g(x_j) mod
/// (x_i - x_j) that any integer polynomial satisfies. The first point is
/// restricted to positive values since g and -g divide together.
inline Polynomial kronecker_find_factor(const Polynomial& f, int m) {
    std::vector<Rational> xs;
    std::vector<mpz_class> vals;
    for (long k = 0; static_cast<int>(xs.size()) < m + 1; ++k) {
        long x = k == 0 ? 0 : (k % 2 == 1 ? (k + 1) / 2 : -(k / 2));
        Rational v = f.eval(Rational(x));
        if (v.is_zero()) continue;
        xs.emplace_back(x);
        vals.push_back(v.numerator());
    }
    std::vector<std::vector<mpz_class>> choices(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto divs = positive_divisors(vals[i]);
        for (const auto& d : divs) {
            choices[i].push_back(d);
            if (i > 0) choices[i].push_back(-d);
        }
    }
    std::vector<std::size_t> idx(xs.size(), 0);
    std::vector<Rational> ys(xs.size());
    std::size_t level = 0;
    while (true) {
        if (idx[level] == choices[level].size()) {
            if (level == 0) return Polynomial();
            idx[level] = 0;
            ++idx[--level];
            continue;
        }
        mpz_class cand = choices[level][idx[level]];
        bool ok = true;
        for (std::size_t j = 0; j < level && ok; ++j) {
            mpz_class gap = xs[level].numerator() - xs[j].numerator();
            if ((cand - ys[j].numerator()) % gap != 0) ok = false;
        }
        if (!ok) {
            ++idx[level];
            continue;
        }
        ys[level] = Rational(cand);
        if (level + 1 < xs.size()) {
            ++level;
            continue;
        }
        Polynomial g = lagrange_interpolate(xs, ys);
        if (g.degree() == m && g.all_integer_coeffs() && g.divides(f))
            return g;
        ++idx[level];
    }
}

/// Complete factorization of a squarefree monic rational polynomial into
/// monic irreducible factors. Rational roots come out first; Kronecker
/// search over ascending degrees handles the rootless remainder, and the
/// minimal-degree factor it finds is automatically irreducible.
inline std::vector<Polynomial> factor_squarefree(const Polynomial& p) {
    std::vector<Polynomial> out;
    auto [roots, rest] = extract_rational_roots(primitive_integer_form(p));
    for (const auto& r : roots) out.push_back(Polynomial({-r, Rational(1)}));
    while (rest.degree() >= 2) {
        Polynomial found;
        for (int m = 2; m <= rest.degree() / 2; ++m) {
            found = kronecker_find_factor(rest, m);
            if (!found.is_zero()) break;
        }
        if (found.is_zero()) {
            out.push_back(rest.monic());
            rest = Polynomial::constant(Rational(1));
        } else {
            out.push_back(found.monic());
            rest = primitive_integer_form(divmod(rest, found).first);
        }
    }
    if (rest.degree() == 1) out.push_back(rest.monic());
    return out;
}

} // namespace detail

/// Factorization into monic irreducible rational polynomials with
/// multiplicities, complete and deterministic for degree at most 8. Factors
/// are sorted by degree, then by coefficients.
inline std::vector<std::pair<Polynomial, int>> factor_rational_poly(const Polynomial& p) {
    if (p.is_zero()) throw error(errc::zero_polynomial, "factoring the zero polynomial");
    if (p.degree() > 8)
        throw error(errc::unsupported_degree,
                    "factorization supports degree at most 8, got " + std::to_string(p.degree()));
    std::vector<std::pair<Polynomial, int>> out;
    for (const auto& [sqf, mult] : squarefree_decompose(p))
        for (const auto& irr : detail::factor_squarefree(sqf))
            out.emplace_back(irr, mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    std::vector<std::pair<Polynomial, int>> merged;
    for (auto& [f, m] : out) {
        if (!merged.empty() && merged.back().first == f)
            merged.back().second += m;
        else
            merged.emplace_back(std::move(f), m);
    }
    return merged;
}

/// Algebraic multiplicity of r as a root of p.
inline int root_multiplicity(Polynomial p, const Rational& r) {
    if (p.is_zero()) throw error(errc::zero_polynomial, "root multiplicity in the zero polynomial");
    Polynomial lin({-r, Rational(1)});
    int mult = 0;
    while (p.degree() >= 1 && p.eval(r).is_zero()) {
        p = divmod(p, lin).first;
        ++mult;
    }
    return mult;
}

} // namespace monoglue
