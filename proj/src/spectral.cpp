#include "hoffman/spectral.hpp"

#include <gmpxx.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace hoffman {

std::string to_string(LambdaOrder o) {
    switch (o) {
    case LambdaOrder::Less: return "less";
    case LambdaOrder::Equal: return "equal";
    case LambdaOrder::Greater: return "greater";
    }
    return "?";
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x) || std::abs(x) >= 4194304.0) throw std::invalid_argument("double out of range");
    constexpr std::int64_t scale = std::int64_t{1} << 40;
    return Rational(static_cast<std::int64_t>(std::llround(x * static_cast<double>(scale))), scale);
}

namespace {

using i128 = __int128;

// Fraction-free symmetric elimination (Bareiss). Entry (i, j) after step k
// is D_k times the Schur complement entry, D_k the leading principal minor.
std::optional<Inertia> inertia_fraction_free(std::vector<std::int64_t> a, int n) {
    Inertia res;
    auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i) * n + j]; };
    std::int64_t prev = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (at(i, i) != 0 && (p < 0 || std::abs(at(i, i)) > std::abs(at(p, p)))) p = i;
        if (p < 0) {
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (at(i, j) != 0) return std::nullopt;
            res.zero += n - k;
            return res;
        }
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
            for (int i = 0; i < n; ++i) std::swap(at(i, p), at(i, k));
        }
        const std::int64_t piv = at(k, k);
        const bool positive = (piv > 0) == (prev > 0);
        (positive ? res.positive : res.negative) += 1;
        for (int i = k + 1; i < n; ++i)
            for (int j = i; j < n; ++j) {
                i128 v = static_cast<i128>(piv) * at(i, j) - static_cast<i128>(at(i, k)) * at(k, j);
                v /= prev;
                if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
                    return std::nullopt;
                at(i, j) = at(j, i) = static_cast<std::int64_t>(v);
            }
        prev = piv;
    }
    return res;
}

// Schur-complement elimination over GMP rationals with 1x1 and 2x2 pivots
// (Haynsworth inertia additivity).
Inertia inertia_rational(const SymmetricIntMatrix& m, const Rational& shift) {
    const int n = m.dim();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    const mpq_class s(mpz_class(static_cast<long>(shift.num)), mpz_class(static_cast<long>(shift.den)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i][j] = mpq_class(mpz_class(static_cast<long>(m(i, j))));
            if (i == j) a[i][j] -= s;
        }
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    Inertia res;
    auto remove = [&](int idx) { active.erase(std::find(active.begin(), active.end(), idx)); };
    while (!active.empty()) {
        int p = -1;
        for (int i : active)
            if (sgn(a[i][i]) != 0 && (p < 0 || abs(a[i][i]) > abs(a[p][p]))) p = i;
        if (p >= 0) {
            const mpq_class piv = a[p][p];
            (sgn(piv) > 0 ? res.positive : res.negative) += 1;
            remove(p);
            for (int i : active)
                for (int j : active) {
                    if (j < i) continue;
                    a[i][j] -= a[i][p] * a[p][j] / piv;
                    a[j][i] = a[i][j];
                }
            continue;
        }
        int pi = -1, pj = -1;
        for (int i : active)
            for (int j : active)
                if (i < j && pi < 0 && sgn(a[i][j]) != 0) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) {
            res.zero += static_cast<int>(active.size());
            break;
        }
        // Block [[0, c], [c, 0]] has one positive and one negative eigenvalue.
        const mpq_class c = a[pi][pj];
        res.positive += 1;
        res.negative += 1;
        remove(pi);
        remove(pj);
        for (int i : active)
            for (int j : active) {
                if (j < i) continue;
                a[i][j] -= (a[i][pi] * a[pj][j] + a[i][pj] * a[pi][j]) / c;
                a[j][i] = a[i][j];
            }
    }
    return res;
}

bool checked_affine(std::int64_t x, std::int64_t scale, std::int64_t offset, std::int64_t& out) {
    std::int64_t t;
    if (__builtin_mul_overflow(x, scale, &t)) return false;
    return !__builtin_sub_overflow(t, offset, &out);
}

}  // namespace

Inertia inertia(const SymmetricIntMatrix& m, const Rational& shift) {
    const int n = m.dim();
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n);
    bool fits = true;
    for (int i = 0; i < n && fits; ++i)
        for (int j = 0; j < n && fits; ++j)
            fits = checked_affine(m(i, j), shift.den, i == j ? shift.num : 0, a[static_cast<std::size_t>(i) * n + j]);
    if (fits)
        if (auto r = inertia_fraction_free(std::move(a), n)) return *r;
    return inertia_rational(m, shift);
}

LambdaOrder cmp_lambda_min(const SymmetricIntMatrix& m, const Rational& r) {
    if (m.dim() < 1) throw std::invalid_argument("cmp_lambda_min needs a non-empty matrix");
    Inertia in = inertia(m, r);
    if (in.negative > 0) return LambdaOrder::Less;
    if (in.zero > 0) return LambdaOrder::Equal;
    return LambdaOrder::Greater;
}

LambdaOrder cmp_lambda_max(const SymmetricIntMatrix& m, const Rational& r) {
    switch (cmp_lambda_min(m.negated(), Rational(-r.num, r.den))) {
    case LambdaOrder::Less: return LambdaOrder::Greater;
    case LambdaOrder::Greater: return LambdaOrder::Less;
    case LambdaOrder::Equal: return LambdaOrder::Equal;
    }
    return LambdaOrder::Equal;
}

int eigen_multiplicity_at(const SymmetricIntMatrix& m, const Rational& r) { return inertia(m, r).zero; }

int count_eigenvalues_below(const SymmetricIntMatrix& m, const Rational& r) { return inertia(m, r).negative; }

int matrix_rank(const SymmetricIntMatrix& m) { return m.dim() - inertia(m).zero; }

std::vector<double> eigenvalues_float(const SymmetricIntMatrix& m) {
    const int n = m.dim();
    if (n == 0) return {};
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + n};
}

std::pair<double, double> lambda_extremes_float(const SymmetricIntMatrix& m) {
    if (m.dim() < 1) throw std::invalid_argument("empty matrix has no spectrum");
    auto ev = eigenvalues_float(m);
    return {ev.front(), ev.back()};
}

MinEigenCluster lambda_min_cluster(const SymmetricIntMatrix& m, double window) {
    auto ev = eigenvalues_float(m);
    if (ev.empty()) throw std::invalid_argument("empty matrix has no spectrum");
    MinEigenCluster c;
    double w = window;
    for (;;) {
        c.lower = Rational::from_double(ev.front() - w);
        if (count_eigenvalues_below(m, c.lower) == 0) break;
        w *= 2;
    }
    w = window;
    for (;;) {
        c.upper = Rational::from_double(ev.front() + w);
        c.count = count_eigenvalues_below(m, c.upper);
        if (c.count > 0) break;
        w *= 2;
    }
    return c;
}

}  // namespace hoffman
