#include "symgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qmh {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{prefix});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int d) {
    if (d < 1) throw std::invalid_argument("partitions: d must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_partitions(d, d, prefix, out);
    return out;
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.parts.empty()) return t;
    for (int col = 1; col <= p.parts[0]; ++col) {
        int height = 0;
        for (int part : p.parts)
            if (part >= col) ++height;
        t.parts.push_back(height);
    }
    return t;
}

Rational frobenius_eigenvalue(const Partition& p) {
    Partition pt = transpose(p);
    int rank = 0;
    while (rank < static_cast<int>(p.parts.size()) && p.parts[rank] >= rank + 1) ++rank;
    Rational half(1, 2);
    Rational s;
    for (int i = 1; i <= rank; ++i) {
        Rational u = Rational(p.parts[i - 1] - i) + half;
        Rational v = Rational(pt.parts[i - 1] - i) + half;
        s += u * u - v * v;
    }
    return s * half;
}

mpz_class class_size(const Partition& p) {
    std::map<int, int> mult;
    for (int part : p.parts) ++mult[part];
    mpz_class z = 1;
    for (const auto& [k, m] : mult) {
        z *= factorial(m);
        mpz_class kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), k, m);
        z *= kp;
    }
    return factorial(p.d()) / z;
}

Permutation Permutation::identity(int d) {
    Permutation p;
    p.images.resize(d);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images.resize(images.size());
    for (int x = 0; x < degree(); ++x) p.images[images[x]] = x;
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(images.size(), false);
    Partition t;
    for (int x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        int len = 0, y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = images[y];
            ++len;
        }
        t.parts.push_back(len);
    }
    std::sort(t.parts.rbegin(), t.parts.rend());
    return t;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    Permutation r;
    r.images.resize(a.degree());
    for (int x = 0; x < a.degree(); ++x) r.images[x] = a.images[b.images[x]];
    return r;
}

Permutation class_representative(const Partition& p) {
    Permutation r = Permutation::identity(p.d());
    int start = 0;
    for (int part : p.parts) {
        for (int i = 0; i < part; ++i) r.images[start + i] = start + (i + 1) % part;
        start += part;
    }
    return r;
}

std::vector<Permutation> transpositions(int d) {
    std::vector<Permutation> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Permutation t = Permutation::identity(d);
            t.images[i] = j;
            t.images[j] = i;
            out.push_back(t);
        }
    return out;
}

ClassMatrix class_matrix(int d) {
    if (d < 1) throw std::invalid_argument("class_matrix: d must be positive");
    ClassMatrix m;
    m.d = d;
    m.classes = partitions(d);
    int n = static_cast<int>(m.classes.size());
    m.entries.assign(n, std::vector<std::int64_t>(n, 0));

    std::map<Partition, int> index;
    for (int i = 0; i < n; ++i) index[m.classes[i]] = i;

    auto trans = transpositions(d);
    for (int i = 0; i < n; ++i) {
        Permutation rep = class_representative(m.classes[i]);
        for (const auto& t : trans) {
            Partition type = compose(t, rep).cycle_type();
            ++m.entries[i][index.at(type)];
        }
    }
    return m;
}

mpz_class trace_power(const ClassMatrix& m, int k) {
    if (k < 0) throw std::invalid_argument("trace_power: negative power");
    int n = static_cast<int>(m.classes.size());
    std::vector<std::vector<mpz_class>> acc(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) acc[i][i] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (acc[i][l] == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (m.entries[l][j] != 0) next[i][j] += acc[i][l] * m.entries[l][j];
            }
        acc = std::move(next);
    }
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += acc[i][i];
    return tr;
}

std::vector<Rational> char_poly(const ClassMatrix& m) {
    /* Faddeev-LeVerrier: exact characteristic coefficients from traces of
     * the auxiliary matrix sequence. */
    int n = static_cast<int>(m.classes.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(mpz_class(m.entries[i][j]));

    std::vector<Rational> coeff(n + 1);
    coeff[n] = Rational(1);
    std::vector<std::vector<Rational>> aux(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) aux[i][i] = Rational(1);

    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> prod(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l].is_zero()) continue;
                for (int j = 0; j < n; ++j) prod[i][j] += a[i][l] * aux[l][j];
            }
        Rational tr;
        for (int i = 0; i < n; ++i) tr += prod[i][i];
        coeff[n - k] = -tr / Rational(k);
        aux = prod;
        for (int i = 0; i < n; ++i) aux[i][i] += coeff[n - k];
    }
    return coeff;
}

std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> coeff{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(coeff.size() + 1);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] += coeff[i];
            next[i] -= r * coeff[i];
        }
        coeff = std::move(next);
    }
    return coeff;
}

namespace {

std::vector<Permutation> all_permutations(int d) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(d);
    std::vector<int> idx = p.images;
    do {
        out.push_back(Permutation{idx});
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

bool transitive(const std::vector<const Permutation*>& gens, int d) {
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = d;
    for (const auto* g : gens)
        for (int x = 0; x < d; ++x) {
            int a = find(x), b = find(g->images[x]);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    return components == 1;
}

void check_budget(int b, int d, std::uint64_t budget) {
    if (b < 0 || b % 2 != 0) throw std::invalid_argument("branch count must be even and >= 0");
    if (d < 1) throw std::invalid_argument("degree must be positive");
    double fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    double work = fact * fact;
    double n_trans = d * (d - 1) / 2.0;
    for (int i = 0; i < b; ++i) work *= n_trans;
    if (work > static_cast<double>(budget))
        throw BudgetExceeded("enumeration would need ~" + std::to_string(work) +
                             " tuples (budget " + std::to_string(budget) +
                             "); use the class-matrix trace instead");
}

/* Shared exhaustive loop over (t_1..t_b, tau, sigma). The callback sees
 * each tuple satisfying the product relation t_1...t_b = [tau, sigma]. */
template <typename F>
void for_each_tuple(int b, int d, F&& f) {
    auto perms = all_permutations(d);
    auto trans = transpositions(d);
    if (b > 0 && trans.empty()) return;

    std::vector<int> pick(b, 0);
    std::vector<Permutation> prefix(b + 1);
    prefix[0] = Permutation::identity(d);

    for (const auto& sigma : perms) {
        Permutation sigma_inv = sigma.inverse();
        for (const auto& tau : perms) {
            /* tau sigma tau^-1 sigma^-1, applying sigma^-1 first. */
            Permutation rhs = compose(compose(tau, sigma), compose(tau.inverse(), sigma_inv));
            std::fill(pick.begin(), pick.end(), 0);
            for (;;) {
                for (int i = 0; i < b; ++i) prefix[i + 1] = compose(prefix[i], trans[pick[i]]);
                if (prefix[b] == rhs) f(pick, trans, tau, sigma);
                int i = b - 1;
                while (i >= 0 && pick[i] == static_cast<int>(trans.size()) - 1) pick[i--] = 0;
                if (i < 0) break;
                ++pick[i];
            }
        }
    }
}

}  // namespace

mpz_class count_monodromy_tuples(int b, int d, std::uint64_t budget) {
    check_budget(b, d, budget);
    mpz_class count = 0;
    for_each_tuple(b, d, [&](const std::vector<int>&, const std::vector<Permutation>&,
                             const Permutation&, const Permutation&) { ++count; });
    return count;
}

Rational connected_cover_count(int b, int d, std::uint64_t budget) {
    check_budget(b, d, budget);
    mpz_class count = 0;
    for_each_tuple(b, d,
                   [&](const std::vector<int>& pick, const std::vector<Permutation>& trans,
                       const Permutation& tau, const Permutation& sigma) {
                       std::vector<const Permutation*> gens;
                       for (int i : pick) gens.push_back(&trans[i]);
                       gens.push_back(&tau);
                       gens.push_back(&sigma);
                       if (transitive(gens, d)) ++count;
                   });
    return Rational(count, factorial(d));
}

}  // namespace qmh
