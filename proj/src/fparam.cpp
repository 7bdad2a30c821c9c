#include "hcover/fparam.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hcover/errors.hpp"

namespace hcover {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
        v *= base;
    }
    return v;
}

struct DiscSearch {
    const Pattern& h;
    const Pattern& l;
    int k, r;
    std::vector<int> phi;
    // arcs of H whose endpoints are both assigned once vertex t is placed
    std::vector<std::vector<std::pair<int, int>>> ready;
    int best;

    DiscSearch(const Pattern& h_, const Pattern& l_) : h(h_), l(l_) {
        k = h.vertex_count();
        r = l.vertex_count();
        phi.assign(static_cast<std::size_t>(k), -1);
        ready.assign(static_cast<std::size_t>(k), {});
        for (auto [a, b] : h.arcs()) {
            ready[static_cast<std::size_t>(std::max(a, b))].emplace_back(a, b);
        }
        best = h.arc_count();
    }

    void go(int t, int misses) {
        if (misses >= best) return;
        if (t == k) {
            best = misses;
            return;
        }
        for (int img = 0; img < r; ++img) {
            phi[static_cast<std::size_t>(t)] = img;
            int add = 0;
            for (auto [a, b] : ready[static_cast<std::size_t>(t)]) {
                if (!l.has_arc(phi[static_cast<std::size_t>(a)],
                               phi[static_cast<std::size_t>(b)])) {
                    ++add;
                }
            }
            go(t + 1, misses + add);
        }
        phi[static_cast<std::size_t>(t)] = -1;
    }
};

} // namespace

int disc(const Pattern& h, const Pattern& l, const ResourceCaps& caps) {
    if (l.arc_count() < 1) throw ValidationError("disc requires a nonempty L");
    std::uint64_t maps = checked_pow(static_cast<std::uint64_t>(l.vertex_count()),
                                     h.vertex_count(), caps.disc_maps);
    if (maps > caps.disc_maps) {
        throw ResourceLimitError("disc map count exceeds the cap");
    }
    DiscSearch s(h, l);
    s.go(0, 0);
    return s.best;
}

Rational f_of(const Pattern& h, const Pattern& l, const ResourceCaps& caps) {
    if (h.arc_count() < 2) throw ValidationError("f(H, L) requires |E(H)| >= 2");
    if (l.arc_count() < 1) throw ValidationError("f(H, L) requires a nonempty L");
    const long e = h.arc_count();
    const long r = l.vertex_count();
    const long ell = l.arc_count();
    Rational density = Rational(e) * make_rational(r * r - ell, r * r);
    Rational embed = Rational(e - disc(h, l, caps));
    return std::max(density, embed);
}

int gamma(const Pattern& h, const ResourceCaps& caps) {
    const int n = h.vertex_count();
    if (n > caps.gamma_vertices) {
        throw ResourceLimitError("gamma vertex count exceeds the cap");
    }
    std::vector<std::uint32_t> in_mask(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : h.arcs()) in_mask[static_cast<std::size_t>(b)] |= (1U << a);
    std::vector<int> dp(static_cast<std::size_t>(1) << n, 0);
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        int best = 0;
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1U)) continue;
            std::uint32_t rest = s & ~(1U << v);
            int forward = dp[rest] + std::popcount(in_mask[static_cast<std::size_t>(v)] & rest);
            best = std::max(best, forward);
        }
        dp[s] = best;
    }
    return dp[(static_cast<std::size_t>(1) << n) - 1];
}

int b_param(const Pattern& h, const ResourceCaps& caps) {
    const int n = h.vertex_count();
    if (n > caps.b_vertices) {
        throw ResourceLimitError("b vertex count exceeds the cap");
    }
    if (n < 2) return 0;
    int best = 0;
    // vertex 0 fixed on one side; crossing counts are side-symmetric
    for (std::uint32_t s = 0; s < (1U << (n - 1)); ++s) {
        std::uint32_t side = s << 1;
        int crossing = 0;
        for (auto [a, b] : h.arcs()) {
            if (((side >> a) & 1U) != ((side >> b) & 1U)) ++crossing;
        }
        best = std::max(best, crossing);
    }
    return best;
}

bool is_one_way_bipartite(const Pattern& h) {
    const int n = h.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : h.arcs()) {
        ++outdeg[static_cast<std::size_t>(a)];
        ++indeg[static_cast<std::size_t>(b)];
    }
    for (int v = 0; v < n; ++v) {
        if (indeg[static_cast<std::size_t>(v)] > 0 && outdeg[static_cast<std::size_t>(v)] > 0) {
            return false;
        }
    }
    return true;
}

namespace {

std::uint64_t pattern_bits(const Pattern& p) {
    std::uint64_t bits = 0;
    const int n = p.vertex_count();
    for (auto [a, b] : p.arcs()) bits |= 1ULL << (a * n + b);
    return bits;
}

std::uint64_t permute_bits(std::uint64_t bits, const std::vector<int>& perm, int n) {
    std::uint64_t out = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if ((bits >> (a * n + b)) & 1ULL) {
                out |= 1ULL << (perm[static_cast<std::size_t>(a)] * n +
                                perm[static_cast<std::size_t>(b)]);
            }
        }
    }
    return out;
}

} // namespace

std::uint64_t canonical_bits(const Pattern& p) {
    const int n = p.vertex_count();
    if (n > 8) throw ResourceLimitError("canonical form supported up to 8 vertices");
    std::uint64_t bits = pattern_bits(p);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = bits;
    do {
        best = std::min(best, permute_bits(bits, perm, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Pattern> enumerate_patterns(int r) {
    if (r < 1 || r > 4) throw ValidationError("pattern enumeration supports 1 <= r <= 4");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            if (a != b) pairs.emplace_back(a, b);
        }
    }
    const int p = static_cast<int>(pairs.size());
    std::vector<std::uint64_t> canon;
    for (std::uint64_t mask = 1; mask < (1ULL << p); ++mask) {
        std::uint64_t bits = 0;
        for (int i = 0; i < p; ++i) {
            if ((mask >> i) & 1ULL) {
                bits |= 1ULL << (pairs[static_cast<std::size_t>(i)].first * r +
                                 pairs[static_cast<std::size_t>(i)].second);
            }
        }
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < p; ++i) {
            if ((mask >> i) & 1ULL) arcs.push_back(pairs[static_cast<std::size_t>(i)]);
        }
        Pattern pat(r, std::move(arcs));
        if (canonical_bits(pat) == bits) canon.push_back(bits);
    }
    std::sort(canon.begin(), canon.end());
    std::vector<Pattern> out;
    out.reserve(canon.size());
    for (std::uint64_t bits : canon) {
        std::vector<std::pair<int, int>> arcs;
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < r; ++b) {
                if (a != b && ((bits >> (a * r + b)) & 1ULL)) arcs.emplace_back(a, b);
            }
        }
        out.emplace_back(r, std::move(arcs));
    }
    return out;
}

FValueReport f_search(const Pattern& h, int r_max, const ResourceCaps& caps) {
    if (h.arc_count() < 2) throw ValidationError("f_search requires |E(H)| >= 2");
    if (r_max < 2) throw ValidationError("f_search requires r_max >= 2");

    FValueReport report;
    report.gamma = gamma(h, caps);
    report.b = b_param(h, caps);
    report.one_way_bipartite = is_one_way_bipartite(h);
    const long e = h.arc_count();
    report.f_lower = make_rational(e, 2);
    report.infimum_not_attained = (2 * report.gamma == e);

    // Extend the T_r range until the density term drops below gamma, so the
    // acyclic-subgraph bound f(H) <= gamma is attained inside the searched
    // family.
    int t_hi = r_max;
    if (2 * report.gamma > e) {
        long denom = 2 * report.gamma - e;
        long attain = (e + denom - 1) / denom;
        t_hi = std::max({r_max, h.vertex_count(), static_cast<int>(attain)});
    }

    bool have = false;
    Rational best_val;
    Pattern best_pat;
    int best_disc = 0;
    auto consider = [&](const Pattern& l, const Rational& val, int d) {
        if (!have || val < best_val) {
            have = true;
            best_val = val;
            best_pat = l;
            best_disc = d;
        }
    };

    for (int r = 2; r <= t_hi; ++r) {
        Pattern l = transitive_tournament(r);
        int d;
        if (r >= h.vertex_count()) {
            d = h.arc_count() - report.gamma;
        } else {
            std::uint64_t maps = checked_pow(static_cast<std::uint64_t>(r),
                                             h.vertex_count(), caps.disc_maps);
            if (maps > caps.disc_maps) continue;
            d = disc(h, l, caps);
        }
        Rational density =
            Rational(e) * make_rational(static_cast<long>(r) * r - static_cast<long>(r) * (r - 1) / 2,
                                        static_cast<long>(r) * r);
        consider(l, std::max(density, Rational(e - d)), d);
    }
    for (int r = 2; r <= std::min(r_max, 12); ++r) {
        Pattern l = directed_cycle(r);
        std::uint64_t maps = checked_pow(static_cast<std::uint64_t>(r), h.vertex_count(),
                                         caps.disc_maps);
        if (maps > caps.disc_maps) continue;
        int d = disc(h, l, caps);
        Rational density = Rational(e) * make_rational(static_cast<long>(r) * r - r,
                                                       static_cast<long>(r) * r);
        consider(l, std::max(density, Rational(e - d)), d);
    }
    for (int r = 2; r <= std::min(r_max, 4); ++r) {
        for (const Pattern& l : enumerate_patterns(r)) {
            int d = disc(h, l, caps);
            Rational density = Rational(e) * make_rational(static_cast<long>(r) * r - l.arc_count(),
                                                           static_cast<long>(r) * r);
            consider(l, std::max(density, Rational(e - d)), d);
        }
    }

    report.f_upper = best_val;
    report.f_of_l = best_val;
    report.best_l = best_pat;
    report.disc = best_disc;
    return report;
}

} // namespace hcover
