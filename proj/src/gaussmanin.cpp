#include "gaussmanin.hpp"

#include <optional>

#include "quasimodular.hpp"

namespace qmh {

Poly3 Poly3::variable(int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("Poly3: variable index out of range");
    std::array<int, 3> e{0, 0, 0};
    e[i] = 1;
    return monomial(Rational(1), e);
}

Poly3 Poly3::monomial(const Rational& c, const std::array<int, 3>& e) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw std::invalid_argument("Poly3: negative exponent");
    Poly3 p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

const Poly3& Poly3::discriminant() {
    static const Poly3 delta = monomial(Rational(27), {0, 0, 2}) - monomial(Rational(1), {0, 3, 0});
    return delta;
}

Rational Poly3::coefficient(const std::array<int, 3>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

void Poly3::add_term(const std::array<int, 3>& e, const Rational& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw std::invalid_argument("Poly3: negative exponent");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly3 Poly3::derivative(int var) const {
    if (var < 0 || var > 2) throw std::invalid_argument("Poly3: variable index out of range");
    Poly3 r;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::array<int, 3> de = e;
        --de[var];
        r.add_term(de, c * Rational(e[var]));
    }
    return r;
}

Rational Poly3::evaluate(const Rational& t1, const Rational& t2, const Rational& t3) const {
    Rational s;
    for (const auto& [e, c] : terms_)
        s += c * pow(t1, e[0]) * pow(t2, e[1]) * pow(t3, e[2]);
    return s;
}

QSeries Poly3::evaluate_series(const QSeries& s1, const QSeries& s2, const QSeries& s3) const {
    int order2 = s1.order2();
    if (s2.order2() != order2 || s3.order2() != order2)
        throw std::invalid_argument("Poly3: mismatched series orders");
    std::vector<QSeries> unit{QSeries::constant(1, order2)};
    std::array<std::vector<QSeries>, 3> pow_cache{unit, unit, unit};
    std::array<const QSeries*, 3> base{&s1, &s2, &s3};
    auto power_of = [&](int var, int e) -> const QSeries& {
        auto& cache = pow_cache[var];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *base[var]);
        return cache[e];
    };
    QSeries r(order2);
    for (const auto& [e, c] : terms_)
        r += c * (power_of(0, e[0]) * power_of(1, e[1]) * power_of(2, e[2]));
    return r;
}

Poly3& Poly3::operator+=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly3& Poly3::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

std::pair<Poly3, Poly3> divide_by_discriminant(const Poly3& p) {
    /* Division in t3 over Q[t1,t2]: each step trades c t1^a t2^b t3^e,
     * e >= 2, for (c/27) t1^a t2^{b+3} t3^{e-2} in the remainder, which
     * strictly shrinks the t3 degrees and terminates. */
    Poly3 quotient, remainder = p;
    for (;;) {
        const std::array<int, 3>* found = nullptr;
        for (const auto& [e, c] : remainder.terms())
            if (e[2] >= 2) {
                found = &e;
                break;
            }
        if (!found) break;
        std::array<int, 3> e = *found;
        Rational c = remainder.coefficient(e) / Rational(27);
        Poly3 m = Poly3::monomial(c, {e[0], e[1], e[2] - 2});
        quotient += m;
        remainder -= m * Poly3::discriminant();
    }
    return {quotient, remainder};
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        delta_power_ = 0;
        return;
    }
    while (delta_power_ > 0) {
        auto [q, r] = divide_by_discriminant(num_);
        if (!r.is_zero()) break;
        num_ = q;
        --delta_power_;
    }
}

RationalFunction RationalFunction::derivative(int var) const {
    /* (n / D^k)' = (n' D - k n D') / D^{k+1} */
    Poly3 dn = num_.derivative(var);
    if (delta_power_ == 0) return RationalFunction(dn);
    Poly3 top = dn * Poly3::discriminant() -
                Rational(delta_power_) * (num_ * Poly3::discriminant().derivative(var));
    return RationalFunction(top, delta_power_ + 1);
}

QSeries RationalFunction::evaluate_series(const QSeries& s1, const QSeries& s2,
                                          const QSeries& s3) const {
    if (delta_power_ != 0)
        throw std::domain_error(
            "RationalFunction: series evaluation requires a polynomial element "
            "(the discriminant vanishes at q = 0)");
    return num_.evaluate_series(s1, s2, s3);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    int k = std::max(delta_power_, o.delta_power_);
    Poly3 left = num_, right = o.num_;
    for (int i = delta_power_; i < k; ++i) left = left * Poly3::discriminant();
    for (int i = o.delta_power_; i < k; ++i) right = right * Poly3::discriminant();
    num_ = left + right;
    delta_power_ = k;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.delta_power_ + b.delta_power_);
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
    RationalFunction r;
    for (int i = 0; i < 3; ++i) {
        if (a[i].is_zero()) continue;
        r += a[i] * f.derivative(i);
    }
    return r;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    VectorField r;
    for (int i = 0; i < 3; ++i) r.a[i] = x.apply(y.a[i]) - y.apply(x.a[i]);
    return r;
}

VectorField vector_field(FieldTag tag) {
    const Poly3 t1 = Poly3::variable(0), t2 = Poly3::variable(1), t3 = Poly3::variable(2);
    switch (tag) {
        case FieldTag::Ramanujan:
            return VectorField{{RationalFunction(Rational(1, 12) * t2 - t1 * t1),
                                RationalFunction(Rational(6) * t3 - Rational(4) * (t1 * t2)),
                                RationalFunction(Rational(1, 3) * (t2 * t2) - Rational(6) * (t1 * t3))}};
        case FieldTag::Radial:
            return VectorField{{RationalFunction(Rational(-2) * t1),
                                RationalFunction(Rational(-4) * t2),
                                RationalFunction(Rational(-6) * t3)}};
        case FieldTag::Translation:
            return VectorField{{RationalFunction(Rational(1)), RationalFunction(), RationalFunction()}};
    }
    throw std::invalid_argument("vector_field: unknown tag");
}

ConnectionMatrix gauss_manin_matrix() {
    const Poly3 t2 = Poly3::variable(1), t3 = Poly3::variable(2);
    auto over_delta = [](const Poly3& p) { return RationalFunction(p, 1); };

    /* d(27 t3^2 - t2^3) = -3 t2^2 dt2 + 54 t3 dt3 */
    Poly3 ddelta_dt2 = Rational(-3) * (t2 * t2);
    Poly3 ddelta_dt3 = Rational(54) * t3;
    /* alpha = 3 t3 dt2 - 2 t2 dt3 */
    Poly3 alpha_dt2 = Rational(3) * t3;
    Poly3 alpha_dt3 = Rational(-2) * t2;

    ConnectionMatrix gm;
    gm.entry[0][0] = OneForm{{RationalFunction(), over_delta(Rational(-1, 12) * ddelta_dt2),
                              over_delta(Rational(-1, 12) * ddelta_dt3)}};
    gm.entry[0][1] = OneForm{{RationalFunction(), over_delta(Rational(3, 2) * alpha_dt2),
                              over_delta(Rational(3, 2) * alpha_dt3)}};
    gm.entry[1][0] = OneForm{{RationalFunction(), over_delta(Rational(-1, 8) * (t2 * alpha_dt2)),
                              over_delta(Rational(-1, 8) * (t2 * alpha_dt3))}};
    gm.entry[1][1] = OneForm{{RationalFunction(), over_delta(Rational(1, 12) * ddelta_dt2),
                              over_delta(Rational(1, 12) * ddelta_dt3)}};
    return gm;
}

namespace {

/* Entries of g^T S with S = [[1,0],[t1,1]], as polynomials in t1. */
std::array<std::array<Poly3, 2>, 2> gts_entries(const Matrix2& g) {
    const Poly3 t1 = Poly3::variable(0);
    std::array<std::array<Poly3, 2>, 2> gts;
    gts[0][0] = Poly3::constant(g.m[0][0]) + g.m[1][0] * t1;
    gts[0][1] = Poly3::constant(g.m[1][0]);
    gts[1][0] = Poly3::constant(g.m[0][1]) + g.m[1][1] * t1;
    gts[1][1] = Poly3::constant(g.m[1][1]);
    return gts;
}

void require_traceless(const Matrix2& g) {
    if (!(g.m[0][0] + g.m[1][1]).is_zero())
        throw std::invalid_argument("matrix must lie in the trace-zero span of the generators");
}

}  // namespace

VectorField solve_vector_field(const Matrix2& g) {
    require_traceless(g);
    const Poly3 t1 = Poly3::variable(0), t2 = Poly3::variable(1), t3 = Poly3::variable(2);
    auto gts = gts_entries(g);

    /* (a2, a3) from the inverted 2x2 system of entries (1,1) and (1,2). */
    RationalFunction b11{gts[0][0]}, b12{gts[0][1]}, b21{gts[1][0]};
    RationalFunction a2 = RationalFunction(Rational(-4) * t2) * b11 +
                          RationalFunction(Rational(6) * t3) * b12;
    RationalFunction a3 = RationalFunction(Rational(-6) * t3) * b11 +
                          RationalFunction(Rational(1, 3) * (t2 * t2)) * b12;

    /* a1 from entry (2,1). */
    RationalFunction x = RationalFunction(Rational(54) * t3) * a3 -
                         RationalFunction(Rational(3) * (t2 * t2)) * a2;
    RationalFunction y = RationalFunction(Rational(3) * t3) * a2 -
                         RationalFunction(Rational(2) * t2) * a3;
    RationalFunction inner = RationalFunction(Rational(-1, 12) * t1) * x +
                             RationalFunction(Rational(-1, 8) * t2) * y;
    RationalFunction a1 = b21 - inner * RationalFunction(Poly3::constant(Rational(1)), 1);

    return VectorField{{a1, a2, a3}};
}

ConnectionReport verify_connection(const Matrix2& g, const VectorField& r) {
    require_traceless(g);
    const Poly3 t1 = Poly3::variable(0), t2 = Poly3::variable(1), t3 = Poly3::variable(2);
    const RationalFunction& a1 = r.a[0];
    const RationalFunction& a2 = r.a[1];
    const RationalFunction& a3 = r.a[2];

    RationalFunction x = RationalFunction(Rational(54) * t3) * a3 -
                         RationalFunction(Rational(3) * (t2 * t2)) * a2;
    RationalFunction y = RationalFunction(Rational(3) * t3) * a2 -
                         RationalFunction(Rational(2) * t2) * a3;

    /* inner = GM contracted with R, rows still in the (dx/y, x dx/y) frame */
    std::array<std::array<RationalFunction, 2>, 2> inner;
    inner[0][0] = RationalFunction(Rational(-1, 12)) * x;
    inner[0][1] = RationalFunction(Rational(3, 2)) * y;
    inner[1][0] = RationalFunction(Rational(-1, 8) * t2) * y;
    inner[1][1] = RationalFunction(Rational(1, 12)) * x;

    /* lhs = dS(R) + (1/Delta) S inner, with S = [[1,0],[t1,1]]. */
    RationalFunction inv_delta(Poly3::constant(Rational(1)), 1);
    RationalFunction t1f{t1};
    std::array<std::array<RationalFunction, 2>, 2> lhs;
    lhs[0][0] = inner[0][0] * inv_delta;
    lhs[0][1] = inner[0][1] * inv_delta;
    lhs[1][0] = a1 + (t1f * inner[0][0] + inner[1][0]) * inv_delta;
    lhs[1][1] = (t1f * inner[0][1] + inner[1][1]) * inv_delta;

    auto gts = gts_entries(g);
    ConnectionReport report;
    report.pass = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            report.residual[i][j] = lhs[i][j] - RationalFunction(gts[i][j]);
            if (!report.residual[i][j].is_zero()) report.pass = false;
        }
    return report;
}

namespace {

/* Writes target = sum c_i fields_i by exact elimination over the stacked
 * monomial coordinates; nullopt when the system is inconsistent. Only
 * polynomial fields appear here. */
std::optional<std::array<Rational, 3>> express_in_span(
    const std::array<VectorField, 3>& fields, const VectorField& target) {
    std::vector<std::array<Rational, 4>> rows;
    for (int slot = 0; slot < 3; ++slot) {
        std::map<std::array<int, 3>, std::array<Rational, 4>, GradedLex> by_monomial;
        for (int i = 0; i < 3; ++i) {
            if (!fields[i].a[slot].is_polynomial() || !target.a[slot].is_polynomial())
                throw std::logic_error("express_in_span: expected polynomial coefficients");
            for (const auto& [e, c] : fields[i].a[slot].numerator().terms())
                by_monomial[e][i] = c;
        }
        for (const auto& [e, c] : target.a[slot].numerator().terms()) by_monomial[e][3] = c;
        for (auto& kv : by_monomial) rows.push_back(kv.second);
    }

    std::array<Rational, 3> sol{};
    int rank = 0;
    std::array<int, 3> pivot_row{-1, -1, -1};
    for (int col = 0; col < 3; ++col) {
        int p = -1;
        for (int rix = rank; rix < static_cast<int>(rows.size()); ++rix)
            if (!rows[rix][col].is_zero()) {
                p = rix;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        Rational inv = Rational(1) / rows[rank][col];
        for (auto& v : rows[rank]) v *= inv;
        for (int rix = 0; rix < static_cast<int>(rows.size()); ++rix) {
            if (rix == rank || rows[rix][col].is_zero()) continue;
            Rational f = rows[rix][col];
            for (int j = 0; j < 4; ++j) rows[rix][j] -= f * rows[rank][j];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (int rix = rank; rix < static_cast<int>(rows.size()); ++rix)
        if (!rows[rix][3].is_zero()) return std::nullopt;
    for (int col = 0; col < 3; ++col)
        if (pivot_row[col] >= 0) sol[col] = rows[pivot_row[col]][3];
    return sol;
}

}  // namespace

Sl2Report verify_sl2() {
    Sl2Report report;
    std::array<VectorField, 3> basis{vector_field(FieldTag::Ramanujan),
                                     vector_field(FieldTag::Radial),
                                     vector_field(FieldTag::Translation)};

    report.closed = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto coords = express_in_span(basis, lie_bracket(basis[i], basis[j]));
            if (!coords) {
                report.closed = false;
                return report;
            }
            report.bracket_table[i][j] = *coords;
        }

    /* Bracket of coordinate vectors through the structure constants. */
    auto bracket_coords = [&](const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
        std::array<Rational, 3> w{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (u[i].is_zero() || v[j].is_zero()) continue;
                for (int k = 0; k < 3; ++k) w[k] += u[i] * v[j] * report.bracket_table[i][j][k];
            }
        return w;
    };
    auto scaled = [](const std::array<Rational, 3>& u, const Rational& s) {
        return std::array<Rational, 3>{u[0] * s, u[1] * s, u[2] * s};
    };

    /* Search e, f among the basis fields with h = [e,f] satisfying
     * [h,e] = 2e and [h,f] = -2f. */
    for (int i = 0; i < 3 && !report.triple_found; ++i)
        for (int j = 0; j < 3 && !report.triple_found; ++j) {
            if (i == j) continue;
            std::array<Rational, 3> e{}, f{};
            e[i] = Rational(1);
            f[j] = Rational(1);
            auto h = bracket_coords(e, f);
            if (bracket_coords(h, e) == scaled(e, Rational(2)) &&
                bracket_coords(h, f) == scaled(f, Rational(-2))) {
                report.triple_found = true;
                report.e = e;
                report.f = f;
                report.h = h;
            }
        }

    report.pass = report.closed && report.triple_found;
    return report;
}

std::array<QSeries, 3> coordinate_ode_residuals(int n_terms) {
    QSeries g1 = eisenstein(2, n_terms) * Rational(1, 12);
    QSeries g2 = eisenstein(4, n_terms) * Rational(1, 12);
    QSeries g3 = eisenstein(6, n_terms) * Rational(1, 216);
    VectorField r = vector_field(FieldTag::Ramanujan);
    std::array<QSeries, 3> res{QSeries(2 * n_terms), QSeries(2 * n_terms), QSeries(2 * n_terms)};
    std::array<const QSeries*, 3> g{&g1, &g2, &g3};
    /* The q-expansions run against the field's own parameter: the system
     * they satisfy is q d/dq g_i = -a_i(g1,g2,g3), e.g.
     * g1' = g1^2 - (1/12) g2 against a1 = (1/12) t2 - t1^2. */
    for (int i = 0; i < 3; ++i)
        res[i] = q_derivative(*g[i]) + r.a[i].evaluate_series(g1, g2, g3);
    return res;
}

}  // namespace qmh
