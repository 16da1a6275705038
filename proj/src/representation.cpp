#include "hoffman/representation.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace hoffman {

namespace {

long dot(const IntVector& a, const IntVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

void check_lengths(const std::vector<IntVector>& vs, int dim) {
    for (const auto& v : vs)
        if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("vector length differs from dim");
}

}  // namespace

bool verify_reduced(const HoffmanGraph& h, const ReducedRep& psi, int t) {
    if (static_cast<int>(psi.vectors.size()) != h.slim_count())
        throw std::invalid_argument("reduced representation needs one vector per slim vertex");
    check_lengths(psi.vectors, psi.dim);
    const SymmetricIntMatrix sp = special_matrix(h);
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = i; j < sp.dim(); ++j)
            if (dot(psi.vectors[i], psi.vectors[j]) != sp(i, j) + (i == j ? t : 0)) return false;
    return true;
}

bool verify_full(const HoffmanGraph& h, const FullRep& phi, int t) {
    if (static_cast<int>(phi.vectors.size()) != h.order())
        throw std::invalid_argument("representation needs one vector per vertex");
    check_lengths(phi.vectors, phi.dim);
    for (Vertex u = 0; u < h.order(); ++u)
        for (Vertex v = u; v < h.order(); ++v) {
            long want = 0;
            if (u == v)
                want = h.is_slim(u) ? t : 1;
            else if (h.graph().adjacent(u, v))
                want = 1;
            if (dot(phi.vectors[u], phi.vectors[v]) != want) return false;
        }
    return true;
}

SymmetricIntMatrix gram_matrix(const std::vector<IntVector>& vectors) {
    SymmetricIntMatrix g(static_cast<int>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i; j < vectors.size(); ++j)
            g.set(static_cast<int>(i), static_cast<int>(j), dot(vectors[i], vectors[j]));
    return g;
}

FullRep full_from_reduced(const HoffmanGraph& h, const ReducedRep& psi) {
    if (static_cast<int>(psi.vectors.size()) != h.slim_count())
        throw std::invalid_argument("reduced representation needs one vector per slim vertex");
    check_lengths(psi.vectors, psi.dim);
    FullRep phi{psi.dim + h.fat_count(), std::vector<IntVector>(h.order(), IntVector(psi.dim + h.fat_count(), 0))};
    std::vector<int> fat_coord(h.order(), -1);
    for (int j = 0; j < h.fat_count(); ++j) {
        fat_coord[h.fats()[j]] = psi.dim + j;
        phi.vectors[h.fats()[j]][psi.dim + j] = 1;
    }
    for (int i = 0; i < h.slim_count(); ++i) {
        Vertex x = h.slims()[i];
        std::copy(psi.vectors[i].begin(), psi.vectors[i].end(), phi.vectors[x].begin());
        for (Vertex f : h.fat_neighbors(x)) phi.vectors[x][fat_coord[f]] = 1;
    }
    return phi;
}

ReducedRep reduced_from_full(const HoffmanGraph& h, const FullRep& phi) {
    if (static_cast<int>(phi.vectors.size()) != h.order())
        throw std::invalid_argument("representation needs one vector per vertex");
    check_lengths(phi.vectors, phi.dim);
    std::vector<int> coord_of(h.order(), -1);
    std::vector<bool> fat_coord(phi.dim, false);
    for (Vertex f : h.fats()) {
        int pos = -1, nonzero = 0;
        for (int c = 0; c < phi.dim; ++c)
            if (phi.vectors[f][c] != 0) {
                ++nonzero;
                pos = c;
            }
        if (nonzero != 1 || phi.vectors[f][pos] != 1 || fat_coord[pos])
            throw std::invalid_argument("fat vertices must map to distinct standard unit vectors");
        fat_coord[pos] = true;
        coord_of[f] = pos;
    }
    ReducedRep psi;
    for (int c = 0; c < phi.dim; ++c) psi.dim += fat_coord[c] ? 0 : 1;
    for (Vertex x : h.slims()) {
        for (Vertex f : h.fats())
            if (phi.vectors[x][coord_of[f]] != (h.graph().adjacent(x, f) ? 1 : 0))
                throw std::invalid_argument("slim vector is not in normal form on fat coordinates");
        IntVector v;
        for (int c = 0; c < phi.dim; ++c)
            if (!fat_coord[c]) v.push_back(phi.vectors[x][c]);
        psi.vectors.push_back(std::move(v));
    }
    return psi;
}

std::string to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::NotRepresentable: return "not_representable";
    case SolveStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Backtracking search

namespace {

struct BudgetHit {};

int rank_of(int v) { return v == 1 ? 2 : (v == -1 ? 1 : 0); }

class Searcher {
public:
    // target(k, j) is the required inner product of the k-th and j-th placed vectors.
    Searcher(SymmetricIntMatrix target, int cap, std::int64_t budget, std::int64_t& nodes)
        : target_(std::move(target)), n_(target_.dim()), cap_(cap), budget_(budget), nodes_(nodes),
          rows_(n_, std::vector<int>(cap, 0)), partial_(n_, std::vector<int>(n_, 0)) {}

    /// Calls `done` for each solution; `done` returns false to stop.
    bool run(const std::function<bool(const std::vector<std::vector<int>>&, int)>& done) {
        done_ = &done;
        return place(0);
    }

private:
    bool place(int k) {
        if (k == n_) return (*done_)(rows_, active_);
        const int norm = static_cast<int>(target_(k, k));
        // Columns identical so far and suffix counts of nonzeros per earlier row.
        std::vector<int> same(active_, -1);
        for (int c = 1; c < active_; ++c)
            for (int d = c - 1; d >= 0 && same[c] < 0; --d) {
                bool eq = true;
                for (int j = 0; j < k && eq; ++j) eq = rows_[j][c] == rows_[j][d];
                if (eq) same[c] = d;
            }
        std::vector<std::vector<int>> after(k, std::vector<int>(active_ + 1, 0));
        for (int j = 0; j < k; ++j)
            for (int c = active_ - 1; c >= 0; --c) after[j][c] = after[j][c + 1] + (rows_[j][c] != 0 ? 1 : 0);
        std::fill(partial_[k].begin(), partial_[k].end(), 0);
        std::fill(rows_[k].begin(), rows_[k].end(), 0);
        return choose(k, 0, norm, same, after);
    }

    bool choose(int k, int c, int left, const std::vector<int>& same, const std::vector<std::vector<int>>& after) {
        if (++nodes_ > budget_) throw BudgetHit{};
        for (int j = 0; j < k; ++j) {
            int gap = static_cast<int>(target_(k, j)) - partial_[k][j];
            if (std::abs(gap) > std::min(left, after[j][c])) return true;
        }
        if (c == active_) {
            if (active_ + left > cap_) return true;
            const int saved = active_;
            for (int i = 0; i < left; ++i) rows_[k][active_++] = 1;
            bool go_on = place(k + 1);
            for (int i = saved; i < active_; ++i) rows_[k][i] = 0;
            active_ = saved;
            return go_on;
        }
        static constexpr int values[] = {1, -1, 0};
        for (int v : values) {
            if (v != 0 && left == 0) continue;
            if (same[c] >= 0 && rank_of(v) > rank_of(rows_[k][same[c]])) continue;
            rows_[k][c] = v;
            if (v != 0)
                for (int j = 0; j < k; ++j) partial_[k][j] += v * rows_[j][c];
            bool go_on = choose(k, c + 1, left - (v != 0 ? 1 : 0), same, after);
            if (v != 0)
                for (int j = 0; j < k; ++j) partial_[k][j] -= v * rows_[j][c];
            rows_[k][c] = 0;
            if (!go_on) return false;
        }
        return true;
    }

    SymmetricIntMatrix target_;
    int n_;
    int cap_;
    std::int64_t budget_;
    std::int64_t& nodes_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::vector<int>> partial_;
    int active_ = 0;
    const std::function<bool(const std::vector<std::vector<int>>&, int)>* done_ = nullptr;
};

// Slim positions of one special-graph component in breadth-first order from
// a maximum-weight vertex (ties: larger special degree, then smaller index).
std::vector<int> bfs_order(const HoffmanGraph& h, const Graph& special, const std::vector<int>& comp) {
    int start = comp.front();
    auto key = [&](int i) { return std::pair{h.weight(h.slims()[i]), special.degree(i)}; };
    for (int i : comp)
        if (key(i) > key(start)) start = i;
    std::vector<int> order{start};
    std::vector<bool> seen(special.order(), false);
    seen[start] = true;
    for (std::size_t q = 0; q < order.size(); ++q)
        for (int w : special.neighbors(order[q]))
            if (!seen[w]) {
                seen[w] = true;
                order.push_back(w);
            }
    return order;
}

SymmetricIntMatrix target_for(const SymmetricIntMatrix& sp, const std::vector<int>& order, int t) {
    SymmetricIntMatrix out(static_cast<int>(order.size()));
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a; b < order.size(); ++b)
            out.set(static_cast<int>(a), static_cast<int>(b), sp(order[a], order[b]) + (a == b ? t : 0));
    return out;
}

}  // namespace

SolveOutcome solve_reduced_integral(const HoffmanGraph& h, const SolveOptions& opts) {
    if (opts.t < 1 || opts.t > 3) throw std::invalid_argument("the solver handles norms 1..3");
    SolveOutcome out;
    const int k = h.slim_count();
    if (k == 0) {
        out.status = SolveStatus::Found;
        return out;
    }
    const SymmetricIntMatrix sp = special_matrix(h);
    if (cmp_lambda_min(sp, Rational(-opts.t)) == LambdaOrder::Less) return out;
    const int cap = opts.dim_cap < 0 ? 3 * k : opts.dim_cap;
    int support = 0;
    for (int i = 0; i < k; ++i) support += static_cast<int>(sp(i, i)) + opts.t;

    const Graph special = special_graph(h).underlying();
    std::vector<std::vector<int>> comps;
    if (support <= cap) {
        comps = connected_components(special);
    } else {
        // A binding cap couples the components; search them together.
        std::vector<int> all;
        for (const auto& c : connected_components(special)) all.insert(all.end(), c.begin(), c.end());
        comps.push_back(all);
    }

    out.rep.vectors.assign(k, {});
    std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>> pieces;
    try {
        for (const auto& comp : comps) {
            std::vector<int> order;
            if (comps.size() == 1 && support > cap) {
                for (const auto& c : connected_components(special)) {
                    auto part = bfs_order(h, special, c);
                    order.insert(order.end(), part.begin(), part.end());
                }
            } else {
                order = bfs_order(h, special, comp);
            }
            std::vector<std::vector<int>> found;
            Searcher s(target_for(sp, order, opts.t), cap - out.rep.dim, opts.node_budget, out.nodes);
            s.run([&](const std::vector<std::vector<int>>& rows, int active) {
                for (const auto& r : rows) found.emplace_back(r.begin(), r.begin() + active);
                return false;
            });
            if (found.empty()) {
                out.status = SolveStatus::NotRepresentable;
                out.rep = {};
                return out;
            }
            out.rep.dim += static_cast<int>(found.front().size());
            pieces.emplace_back(order, std::move(found));
        }
    } catch (const BudgetHit&) {
        out.status = SolveStatus::BudgetExceeded;
        out.rep = {};
        return out;
    }
    int offset = 0;
    for (auto& v : out.rep.vectors) v.assign(out.rep.dim, 0);
    for (const auto& [order, rows] : pieces) {
        for (std::size_t a = 0; a < order.size(); ++a)
            std::copy(rows[a].begin(), rows[a].end(), out.rep.vectors[order[a]].begin() + offset);
        offset += static_cast<int>(rows.front().size());
    }
    out.status = SolveStatus::Found;
    return out;
}

Verdict is_integrally_representable(const HoffmanGraph& h, const SolveOptions& opts) {
    switch (solve_reduced_integral(h, opts).status) {
    case SolveStatus::Found: return Verdict::Yes;
    case SolveStatus::NotRepresentable: return Verdict::No;
    case SolveStatus::BudgetExceeded: return Verdict::Inconclusive;
    }
    return Verdict::Inconclusive;
}

ReducedRep canonical_rep(const ReducedRep& psi) {
    check_lengths(psi.vectors, psi.dim);
    const std::size_t rows = psi.vectors.size();
    std::vector<std::vector<int>> cols;
    for (int c = 0; c < psi.dim; ++c) {
        std::vector<int> col(rows);
        int sign = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            col[r] = psi.vectors[r][c];
            if (sign == 0 && col[r] != 0) sign = col[r] > 0 ? 1 : -1;
        }
        if (sign == 0) continue;
        for (auto& x : col) x *= sign;
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    ReducedRep out{static_cast<int>(cols.size()), std::vector<IntVector>(rows, IntVector(cols.size()))};
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) out.vectors[r][c] = cols[c][r];
    return out;
}

std::vector<ReducedRep> enumerate_reduced_reps(const HoffmanGraph& h, int limit, std::int64_t node_budget) {
    const int k = h.slim_count();
    if (k == 0) return {ReducedRep{0, {}}};
    const SymmetricIntMatrix sp = special_matrix(h);
    if (cmp_lambda_min(sp, Rational(-3)) == LambdaOrder::Less) return {};
    const Graph special = special_graph(h).underlying();
    std::vector<int> order;
    for (const auto& c : connected_components(special)) {
        auto part = bfs_order(h, special, c);
        order.insert(order.end(), part.begin(), part.end());
    }
    std::set<std::vector<IntVector>> seen;
    std::vector<ReducedRep> out;
    std::int64_t nodes = 0;
    Searcher s(target_for(sp, order, 3), 3 * k, node_budget, nodes);
    try {
        s.run([&](const std::vector<std::vector<int>>& rows, int active) {
            ReducedRep r{active, std::vector<IntVector>(k)};
            for (int a = 0; a < k; ++a) r.vectors[order[a]].assign(rows[a].begin(), rows[a].begin() + active);
            r = canonical_rep(r);
            if (seen.insert(r.vectors).second) out.push_back(std::move(r));
            return static_cast<int>(out.size()) < limit;
        });
    } catch (const BudgetHit&) {
        throw std::runtime_error("representation enumeration exceeded its node budget");
    }
    return out;
}

// ---------------------------------------------------------------------------

LatticeInvariants lattice_invariants(const std::vector<IntVector>& generators) {
    if (generators.empty()) return {0, "1"};
    const std::size_t d = generators.front().size();
    check_lengths(generators, static_cast<int>(d));
    std::vector<std::vector<mpz_class>> a;
    for (const auto& g : generators) {
        std::vector<mpz_class> row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = g[c];
        a.push_back(std::move(row));
    }
    // Integer row echelon form by unimodular row operations.
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < a.size(); ++c) {
        for (;;) {
            std::size_t p = a.size();
            for (std::size_t i = r; i < a.size(); ++i)
                if (sgn(a[i][c]) != 0 && (p == a.size() || abs(a[i][c]) < abs(a[p][c]))) p = i;
            if (p == a.size()) break;
            std::swap(a[r], a[p]);
            bool clean = true;
            for (std::size_t i = r + 1; i < a.size(); ++i) {
                if (sgn(a[i][c]) == 0) continue;
                mpz_class q = a[i][c] / a[r][c];
                for (std::size_t j = c; j < d; ++j) a[i][j] -= q * a[r][j];
                if (sgn(a[i][c]) != 0) clean = false;
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }
    LatticeInvariants out;
    out.rank = static_cast<int>(r);
    if (r == 0) {
        out.gram_det = "1";
        return out;
    }
    std::vector<std::vector<mpz_class>> g(r, std::vector<mpz_class>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t c = 0; c < d; ++c) g[i][j] += a[i][c] * a[j][c];
    // Bareiss determinant; the Gram matrix of a basis is positive definite,
    // so leading minors never vanish.
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < r; ++k) {
        for (std::size_t i = k + 1; i < r; ++i)
            for (std::size_t j = k + 1; j < r; ++j) g[i][j] = (g[k][k] * g[i][j] - g[i][k] * g[k][j]) / prev;
        prev = g[k][k];
    }
    out.gram_det = g[r - 1][r - 1].get_str();
    return out;
}

ExtendCheck check_extend_structure(const HoffmanGraph& h, const ReducedRep& psi) {
    ExtendCheck out;
    const Graph minus = special_minus_graph(h);
    const int k = h.slim_count();
    std::vector<std::vector<int>> dist;
    for (int i = 0; i < k; ++i) dist.push_back(distances_from(minus, i));
    for (int c = 0; c < psi.dim; ++c) {
        std::vector<int> pos, neg;
        for (int i = 0; i < k; ++i) {
            if (psi.vectors[i][c] == 1) pos.push_back(i);
            if (psi.vectors[i][c] == -1) neg.push_back(i);
        }
        if (pos.empty() && neg.empty()) continue;
        if (pos.empty() || neg.empty()) {
            out.pairing = false;
            out.message = "coordinate " + std::to_string(c) + " lacks an entry of each sign";
        }
        for (int x : pos)
            for (int y : neg)
                if (dist[x][y] < 0 || dist[x][y] > 2) {
                    out.distance = false;
                    out.message = "opposite entries at coordinate " + std::to_string(c) + " lie far apart";
                }
    }
    return out;
}

}  // namespace hoffman
