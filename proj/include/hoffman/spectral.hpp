#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman {

/// Exact trichotomy of an extreme eigenvalue against a rational threshold.
enum class LambdaOrder { Less, Equal, Greater };

std::string to_string(LambdaOrder o);

/// num/den with den > 0, kept in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    /// Exact value of a finite double with |x| < 2^22, rounded to a multiple of 2^-40.
    static Rational from_double(double x);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Numbers of positive, negative and zero eigenvalues.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of m - shift*I, by symmetric elimination in exact arithmetic.
/// A fraction-free integer pass handles the common case; it falls back to
/// GMP rationals on overflow or when a 2x2 pivot is required.
Inertia inertia(const SymmetricIntMatrix& m, const Rational& shift = {});

/// Compares lambda_min(m) with r: Greater iff m - rI is positive definite,
/// Equal iff it is positive semidefinite and singular, Less otherwise.
LambdaOrder cmp_lambda_min(const SymmetricIntMatrix& m, const Rational& r);

/// Same for lambda_max, via -m.
LambdaOrder cmp_lambda_max(const SymmetricIntMatrix& m, const Rational& r);

/// dim ker(m - rI).
int eigen_multiplicity_at(const SymmetricIntMatrix& m, const Rational& r);

/// Number of eigenvalues (with multiplicity) strictly below r.
int count_eigenvalues_below(const SymmetricIntMatrix& m, const Rational& r);

int matrix_rank(const SymmetricIntMatrix& m);

/// Floating spectrum, ascending (tridiagonalisation + implicit QL/QR).
std::vector<double> eigenvalues_float(const SymmetricIntMatrix& m);
std::pair<double, double> lambda_extremes_float(const SymmetricIntMatrix& m);

/// Rational bracket [lower, upper] around lambda_min holding exactly `count`
/// eigenvalues, certified by exact inertia counts: nothing lies below
/// `lower` and `count` eigenvalues lie below `upper`. count == 1 certifies a
/// simple smallest eigenvalue.
struct MinEigenCluster {
    Rational lower;
    Rational upper;
    int count = 0;
};
MinEigenCluster lambda_min_cluster(const SymmetricIntMatrix& m, double window = 1e-7);

}  // namespace hoffman
