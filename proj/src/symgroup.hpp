#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace qmh {

/* Partition of a positive integer, parts weakly decreasing, all >= 1. */
struct Partition {
    std::vector<int> parts;

    int d() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

/* All partitions of d in the canonical class order used throughout:
 * reverse-lexicographic, largest part first, so (d) comes first and
 * (1,...,1) last. */
std::vector<Partition> partitions(int d);

/* Conjugate partition (columns of the Young diagram). */
Partition transpose(const Partition& p);

/* Eigenvalue of the transposition class matrix attached to the partition:
 * (1/2) sum_i (u_i^2 - v_i^2) over Frobenius coordinates u_i = p_i - i + 1/2
 * and v_i = p'_i - i + 1/2, i up to the diagonal rank. Equals the content
 * sum of the diagram, hence an integer. */
Rational frobenius_eigenvalue(const Partition& p);

/* Number of elements of S_d with this cycle type: d! / prod m_k! k^{m_k}. */
mpz_class class_size(const Partition& p);

/* Permutation of {0..d-1} in one-line notation. */
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }

    static Permutation identity(int d);
    Permutation inverse() const;
    Partition cycle_type() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images == b.images;
    }
};

/* (a * b)(x) = a(b(x)): apply b first, then a. */
Permutation compose(const Permutation& a, const Permutation& b);

/* Canonical class representative: cycles (0..p1-1)(p1..p1+p2-1)... */
Permutation class_representative(const Partition& p);

std::vector<Permutation> transpositions(int d);

/* Multiplication-by-transpositions tally on conjugacy classes.
 * entries[i][j] counts transpositions t with t * rep(class_i) in class_j,
 * products taken apply-sigma-first. Row sums all equal C(d,2). */
struct ClassMatrix {
    int d = 0;
    std::vector<Partition> classes;
    std::vector<std::vector<std::int64_t>> entries;
};

ClassMatrix class_matrix(int d);

/* Trace of the k-th power, exact. */
mpz_class trace_power(const ClassMatrix& m, int k);

/* Characteristic polynomial, coefficients in ascending degree, monic. */
std::vector<Rational> char_poly(const ClassMatrix& m);

/* prod (x - r) expanded, coefficients in ascending degree. */
std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots);

/* Thrown when a brute-force enumeration would exceed its work budget. */
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/* Exhaustively counts tuples (t_1,...,t_b, tau, sigma) in S_d^{b+2} with
 * every t_i a transposition and t_1 ... t_b = tau sigma tau^-1 sigma^-1.
 * b must be even and >= 0. Work is (d!)^2 C(d,2)^b tuples; exceeding the
 * budget throws BudgetExceeded (use the class-matrix trace instead). */
mpz_class count_monodromy_tuples(int b, int d, std::uint64_t budget = 100000000);

/* Same enumeration restricted to tuples whose entries generate a subgroup
 * acting transitively on {0..d-1}, divided by d!. */
Rational connected_cover_count(int b, int d, std::uint64_t budget = 100000000);

}  // namespace qmh
