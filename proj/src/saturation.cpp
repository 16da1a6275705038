#include "hoffman/saturation.hpp"

#include <set>
#include <stdexcept>

#include "hoffman/isomorphism.hpp"

namespace hoffman {

namespace {

struct Search {
    const SaturationOptions& opts;
    std::int64_t states = 0;
    std::vector<HoffmanGraph> seen;  // dead ends, compared up to isomorphism

    bool known(const HoffmanGraph& g) const {
        for (const auto& s : seen)
            if (hoffman_isomorphic(s, g)) return true;
        return false;
    }

    std::optional<HoffmanGraph> run(const HoffmanGraph& h) {
        if (++states > opts.state_budget) throw std::runtime_error("saturation search budget exhausted");
        const int k = h.slim_count();
        const SymmetricIntMatrix sp = special_matrix(h);
        std::vector<std::vector<Vertex>> moves;
        for (int size = 1; size <= k; ++size)
            for (unsigned mask = 1; mask < (1U << k); ++mask) {
                if (__builtin_popcount(mask) != size) continue;
                SymmetricIntMatrix m = sp;
                std::vector<Vertex> s;
                for (int i = 0; i < k; ++i) {
                    if (!(mask >> i & 1U)) continue;
                    s.push_back(h.slims()[i]);
                    for (int j = i; j < k; ++j)
                        if (mask >> j & 1U) m.set(i, j, m(i, j) - 1);
                }
                if (cmp_lambda_min(m, Rational(-3)) != LambdaOrder::Less) moves.push_back(std::move(s));
            }
        if (moves.empty()) {
            if (h.is_fat_hoffman()) return h;
            return std::nullopt;
        }
        for (const auto& s : moves) {
            HoffmanGraph next = attach_fat(h, s);
            if (known(next)) continue;
            if (is_integrally_representable(next, opts.solve) == Verdict::Yes)
                if (auto r = run(next)) return r;
            seen.push_back(std::move(next));
        }
        return std::nullopt;
    }
};

}  // namespace

HoffmanGraph saturate_preserving_ir(const HoffmanGraph& h, const SaturationOptions& opts) {
    if (h.slim_count() == 0) throw std::invalid_argument("saturation needs a slim vertex");
    if (h.slim_count() > opts.max_slims) throw std::invalid_argument("too many slim vertices for saturation search");
    if (is_integrally_representable(h, opts.solve) != Verdict::Yes)
        throw std::invalid_argument("input is not integrally representable of norm 3");
    Search s{opts, 0, {}};
    if (auto r = s.run(h)) return *r;
    throw std::runtime_error("no fat saturated representable extension found");
}

}  // namespace hoffman
