#pragma once

#include <array>
#include <map>

#include "qseries.hpp"

namespace qmh {

/* Graded-lex term order on exponent triples: total degree first, then
 * lexicographic. Fixes serialization and division determinism. */
struct GradedLex {
    bool operator()(const std::array<int, 3>& a, const std::array<int, 3>& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da < db;
        return a < b;
    }
};

/* Sparse polynomial in t1, t2, t3 over Rational. */
class Poly3 {
public:
    Poly3() = default;

    static Poly3 constant(const Rational& c) { return monomial(c, {0, 0, 0}); }
    static Poly3 variable(int i);  /* 0 -> t1, 1 -> t2, 2 -> t3 */
    static Poly3 monomial(const Rational& c, const std::array<int, 3>& e);

    /* 27 t3^2 - t2^3, the locus the coordinate ring inverts. */
    static const Poly3& discriminant();

    const std::map<std::array<int, 3>, Rational, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const std::array<int, 3>& e) const;
    void add_term(const std::array<int, 3>& e, const Rational& c);

    Poly3 derivative(int var) const;
    Rational evaluate(const Rational& t1, const Rational& t2, const Rational& t3) const;
    QSeries evaluate_series(const QSeries& s1, const QSeries& s2, const QSeries& s3) const;

    Poly3& operator+=(const Poly3& o);
    Poly3& operator-=(const Poly3& o);
    Poly3& operator*=(const Rational& c);

    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    friend Poly3 operator*(Poly3 a, const Rational& c) { return a *= c; }
    friend Poly3 operator*(const Rational& c, Poly3 a) { return a *= c; }
    friend Poly3 operator-(const Poly3& a) { return a * Rational(-1); }
    friend Poly3 operator*(const Poly3& a, const Poly3& b);

    friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly3& a, const Poly3& b) { return !(a == b); }

private:
    std::map<std::array<int, 3>, Rational, GradedLex> terms_;
};

/* Quotient and remainder of division by the discriminant, the divisor seen
 * as monic (up to 27) in t3. Exact division iff the remainder vanishes. */
std::pair<Poly3, Poly3> divide_by_discriminant(const Poly3& p);

/* Element numerator / discriminant^k of the coordinate ring
 * Q[t1,t2,t3, 1/(27 t3^2 - t2^3)], kept canonical: k is reduced while the
 * numerator stays divisible, and 0 is stored with k = 0. The discriminant
 * is irreducible, so the canonical form is unique and equality is
 * structural. */
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Poly3 numerator) : num_(std::move(numerator)) { canonicalize(); }
    RationalFunction(Poly3 numerator, int delta_power)
        : num_(std::move(numerator)), delta_power_(delta_power) {
        if (delta_power < 0) throw std::invalid_argument("RationalFunction: negative power");
        canonicalize();
    }
    RationalFunction(const Rational& c) : num_(Poly3::constant(c)) {}

    const Poly3& numerator() const { return num_; }
    int delta_power() const { return delta_power_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return delta_power_ == 0; }

    RationalFunction derivative(int var) const;
    QSeries evaluate_series(const QSeries& s1, const QSeries& s2, const QSeries& s3) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a) {
        return RationalFunction(-a.num_, a.delta_power_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.delta_power_ == b.delta_power_ && a.num_ == b.num_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    void canonicalize();

    Poly3 num_;
    int delta_power_ = 0;
};

/* Derivation a1 d/dt1 + a2 d/dt2 + a3 d/dt3. */
struct VectorField {
    std::array<RationalFunction, 3> a;

    RationalFunction apply(const RationalFunction& f) const;
    bool is_zero() const { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

    friend bool operator==(const VectorField& x, const VectorField& y) { return x.a == y.a; }
    friend bool operator!=(const VectorField& x, const VectorField& y) { return !(x == y); }
};

VectorField lie_bracket(const VectorField& x, const VectorField& y);

enum class FieldTag { Ramanujan, Radial, Translation };

/* The three explicit fields on the enhanced moduli space. */
VectorField vector_field(FieldTag tag);

/* c1 dt1 + c2 dt2 + c3 dt3 with rational-function coefficients. */
struct OneForm {
    std::array<RationalFunction, 3> c;

    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
    friend OneForm operator+(const OneForm& a, const OneForm& b) {
        return OneForm{{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
    }
    friend bool operator==(const OneForm& a, const OneForm& b) { return a.c == b.c; }
};

/* The connection matrix in the frame (dx/y, x dx/y): a 2x2 matrix of
 * 1-forms over the coordinate ring, dt1 slots identically zero. */
struct ConnectionMatrix {
    std::array<std::array<OneForm, 2>, 2> entry;

    OneForm trace() const { return entry[0][0] + entry[1][1]; }
};

ConnectionMatrix gauss_manin_matrix();

/* Constant 2x2 rational matrix, row major. */
struct Matrix2 {
    std::array<std::array<Rational, 2>, 2> m;

    static Matrix2 of(Rational a, Rational b, Rational c, Rational d) {
        Matrix2 g;
        g.m[0][0] = std::move(a);
        g.m[0][1] = std::move(b);
        g.m[1][0] = std::move(c);
        g.m[1][1] = std::move(d);
        return g;
    }

    static Matrix2 zero() { return of(0, 0, 0, 0); }
    /* diag(1,-1) */
    static Matrix2 diagonal_generator() { return of(1, 0, 0, -1); }
    /* upper nilpotent e12 */
    static Matrix2 nilpotent_generator() { return of(0, 1, 0, 0); }
    /* its transpose e21; the source of the Ramanujan field */
    static Matrix2 nilpotent_generator_transposed() { return of(0, 0, 1, 0); }
};

/* The unique field R with nabla_R (alpha; beta) = g^T (alpha; beta), for g
 * in the trace-zero span of the three generators. Solved through the
 * explicit 2x2 inverse; the result is polynomial for every such g. */
VectorField solve_vector_field(const Matrix2& g);

struct ConnectionReport {
    bool pass = false;
    std::array<std::array<RationalFunction, 2>, 2> residual;
};

/* Substitutes R into the connection identity and checks all four entries
 * vanish as rational functions. */
ConnectionReport verify_connection(const Matrix2& g, const VectorField& r);

struct Sl2Report {
    bool pass = false;
    bool closed = false;
    /* bracket_table[i][j] = coordinates of [basis_i, basis_j] in the basis
     * (ramanujan, radial, translation); meaningful only when closed. */
    std::array<std::array<std::array<Rational, 3>, 3>, 3> bracket_table;
    bool triple_found = false;
    std::array<Rational, 3> e, f, h;  /* standard triple coordinates */
};

/* Checks the three named fields close under the bracket over Q and
 * exhibits a standard sl2 triple among rational recombinations. */
Sl2Report verify_sl2();

/* Residuals of q d/dq g_i = -a_i(g1,g2,g3) with (a_i) the Ramanujan field
 * and g1 = E2/12, g2 = E4/12, g3 = E6/216, i.e. of the system
 *   g1' = g1^2 - (1/12) g2,
 *   g2' = 4 g1 g2 - 6 g3,
 *   g3' = 6 g1 g3 - (1/3) g2^2.
 * All three vanish identically; this ties the moduli-space field to the
 * Eisenstein identities (the q-expansions traverse the field backwards). */
std::array<QSeries, 3> coordinate_ode_residuals(int n_terms);

}  // namespace qmh
