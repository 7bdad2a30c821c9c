#include "hcover/lp.hpp"

#include <algorithm>
#include <cmath>

#include "hcover/errors.hpp"

namespace hcover {

namespace {

template <class Num>
struct NumOps;

template <>
struct NumOps<Rational> {
    static Rational eps() { return Rational(0); }
    static Rational from_rational(const Rational& q) { return q; }
    static Rational to_rational(const Rational& q) { return q; }
};

template <>
struct NumOps<double> {
    static double eps() { return 1e-9; }
    static double from_rational(const Rational& q) { return q.get_d(); }
    static Rational to_rational(double x) { return rational_from_double(x); }
};

// Primal simplex for max 1.x s.t. Ax <= b, x >= 0 with b >= 0 (the slack
// basis is feasible, so no phase 1). Entering column by largest coefficient,
// with a permanent switch to Bland's rule after a run of degenerate pivots;
// leaving row by minimum ratio with smallest-basis-label ties.
template <class Num>
struct DenseSimplex {
    int m, n; // constraints, structural columns
    std::vector<std::vector<Num>> tab; // (m+1) x (n+m+1)
    std::vector<int> basis;
    Num eps = NumOps<Num>::eps();
    std::uint64_t pivot_cap;
    std::uint64_t pivots = 0;
    std::uint64_t degenerate_run = 0;
    bool bland = false;

    DenseSimplex(const std::vector<std::vector<char>>& a, const std::vector<Num>& b,
                 std::uint64_t cap)
        : m(static_cast<int>(b.size())), n(a.empty() ? 0 : static_cast<int>(a[0].size())),
          pivot_cap(cap) {
        tab.assign(static_cast<std::size_t>(m) + 1,
                   std::vector<Num>(static_cast<std::size_t>(n + m + 1), Num(0)));
        basis.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Num(1);
                }
            }
            tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Num(1);
            tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + m)] =
                b[static_cast<std::size_t>(i)];
            basis[static_cast<std::size_t>(i)] = n + i;
        }
        for (int j = 0; j < n; ++j) {
            tab[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = Num(-1);
        }
    }

    int entering() const {
        const auto& obj = tab[static_cast<std::size_t>(m)];
        if (bland) {
            for (int j = 0; j < n + m; ++j) {
                if (obj[static_cast<std::size_t>(j)] < -eps) return j;
            }
            return -1;
        }
        int best = -1;
        for (int j = 0; j < n + m; ++j) {
            if (obj[static_cast<std::size_t>(j)] < -eps &&
                (best < 0 || obj[static_cast<std::size_t>(j)] < obj[static_cast<std::size_t>(best)])) {
                best = j;
            }
        }
        return best;
    }

    int leaving(int col) const {
        int row = -1;
        for (int i = 0; i < m; ++i) {
            const Num& a = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (!(a > eps)) continue;
            if (row < 0) {
                row = i;
                continue;
            }
            const Num& ar = tab[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            // ratio compare: rhs_i / a  vs  rhs_row / ar, both positive denominators
            Num lhs = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + m)] * ar;
            Num rhs = tab[static_cast<std::size_t>(row)][static_cast<std::size_t>(n + m)] * a;
            if (lhs < rhs || (lhs == rhs && basis[static_cast<std::size_t>(i)] <
                                                basis[static_cast<std::size_t>(row)])) {
                row = i;
            }
        }
        return row;
    }

    void pivot(int row, int col) {
        auto& pr = tab[static_cast<std::size_t>(row)];
        Num p = pr[static_cast<std::size_t>(col)];
        for (auto& x : pr) x /= p;
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            auto& ri = tab[static_cast<std::size_t>(i)];
            Num f = ri[static_cast<std::size_t>(col)];
            if (f == Num(0)) continue;
            for (int j = 0; j <= n + m; ++j) {
                ri[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
            }
            ri[static_cast<std::size_t>(col)] = Num(0);
        }
        basis[static_cast<std::size_t>(row)] = col;
    }

    void solve() {
        while (true) {
            int col = entering();
            if (col < 0) return; // optimal
            int row = leaving(col);
            if (row < 0) throw NumericError("simplex detected an unbounded direction");
            bool degenerate =
                !(tab[static_cast<std::size_t>(row)][static_cast<std::size_t>(n + m)] > eps);
            pivot(row, col);
            if (++pivots > pivot_cap) {
                throw NumericError("simplex pivot cap exceeded");
            }
            if (degenerate) {
                if (++degenerate_run > 2 * static_cast<std::uint64_t>(m + n) + 16) bland = true;
            } else {
                degenerate_run = 0;
            }
        }
    }

    Num value() const { return tab[static_cast<std::size_t>(m)][static_cast<std::size_t>(n + m)]; }

    std::vector<Num> primal() const {
        std::vector<Num> x(static_cast<std::size_t>(n), Num(0));
        for (int i = 0; i < m; ++i) {
            if (basis[static_cast<std::size_t>(i)] < n) {
                x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
                    tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + m)];
            }
        }
        return x;
    }

    std::vector<Num> dual() const {
        std::vector<Num> y(static_cast<std::size_t>(m), Num(0));
        for (int i = 0; i < m; ++i) {
            y[static_cast<std::size_t>(i)] =
                tab[static_cast<std::size_t>(m)][static_cast<std::size_t>(n + i)];
        }
        return y;
    }
};

template <class Num>
FracSolution solve_packing(const Digraph& d, const std::vector<Copy>& copies,
                           const std::vector<std::size_t>& live_copies,
                           const ResourceCaps& caps) {
    FracSolution sol;
    sol.cover.assign(static_cast<std::size_t>(d.arc_count()), Rational(0));
    sol.packing.assign(copies.size(), Rational(0));
    if (live_copies.empty()) return sol;

    // rows: arcs appearing in some live copy
    std::vector<int> row_of_arc(static_cast<std::size_t>(d.arc_count()), -1);
    std::vector<int> arc_of_row;
    for (std::size_t c : live_copies) {
        for (int id : copies[c].arc_ids) {
            if (row_of_arc[static_cast<std::size_t>(id)] < 0) {
                row_of_arc[static_cast<std::size_t>(id)] = static_cast<int>(arc_of_row.size());
                arc_of_row.push_back(id);
            }
        }
    }
    const int m = static_cast<int>(arc_of_row.size());
    const int n = static_cast<int>(live_copies.size());
    std::vector<std::vector<char>> a(static_cast<std::size_t>(m),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        for (int id : copies[live_copies[static_cast<std::size_t>(j)]].arc_ids) {
            a[static_cast<std::size_t>(row_of_arc[static_cast<std::size_t>(id)])]
             [static_cast<std::size_t>(j)] = 1;
        }
    }
    std::vector<Num> b(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        b[static_cast<std::size_t>(i)] =
            NumOps<Num>::from_rational(d.arc(arc_of_row[static_cast<std::size_t>(i)]).weight);
    }

    DenseSimplex<Num> spx(a, b, caps.simplex_pivots);
    spx.solve();
    std::vector<Num> x = spx.primal();
    std::vector<Num> y = spx.dual();

    for (int j = 0; j < n; ++j) {
        Rational v = NumOps<Num>::to_rational(x[static_cast<std::size_t>(j)]);
        if (v < 0) v = 0; // float fuzz
        sol.packing[live_copies[static_cast<std::size_t>(j)]] = v;
    }
    for (int i = 0; i < m; ++i) {
        Rational v = NumOps<Num>::to_rational(y[static_cast<std::size_t>(i)]);
        if (v < 0) v = 0;
        if (v > 1) v = 1; // only possible on zero-weight rows (or float fuzz)
        sol.cover[static_cast<std::size_t>(arc_of_row[static_cast<std::size_t>(i)])] = v;
    }
    return sol;
}

Rational cover_value(const Digraph& d, const std::vector<Rational>& cover) {
    Rational s(0);
    for (int id = 0; id < d.arc_count(); ++id) {
        const Rational& c = cover[static_cast<std::size_t>(id)];
        if (c != 0) s += c * d.arc(id).weight;
    }
    return s;
}

Rational packing_value(const std::vector<Rational>& packing) {
    Rational s(0);
    for (const Rational& v : packing) s += v;
    return s;
}

} // namespace

FracSolution solve_fractional_masked(const Digraph& d, const std::vector<Copy>& copies,
                                     const std::vector<char>& arc_active,
                                     const std::vector<char>& copy_active, Arith mode,
                                     const ResourceCaps& caps) {
    std::vector<std::size_t> live;
    for (std::size_t c = 0; c < copies.size(); ++c) {
        if (!copy_active.empty() && !copy_active[c]) continue;
        bool ok = true;
        if (!arc_active.empty()) {
            for (int id : copies[c].arc_ids) {
                if (!arc_active[static_cast<std::size_t>(id)]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) live.push_back(c);
    }

    FracSolution sol = (mode == Arith::exact) ? solve_packing<Rational>(d, copies, live, caps)
                                              : solve_packing<double>(d, copies, live, caps);

    if (mode == Arith::floating && !live.empty()) {
        // repair pass: rescale the cover up to dual feasibility, the packing
        // down to primal feasibility
        Rational min_sum(-1);
        for (std::size_t c : live) {
            Rational s(0);
            for (int id : copies[c].arc_ids) s += sol.cover[static_cast<std::size_t>(id)];
            if (min_sum < 0 || s < min_sum) min_sum = s;
        }
        if (min_sum > 0 && min_sum < 1) {
            for (auto& v : sol.cover) {
                v /= min_sum;
                if (v > 1) v = 1;
            }
        }
        Rational worst(1);
        std::vector<Rational> load(static_cast<std::size_t>(d.arc_count()), Rational(0));
        for (std::size_t c : live) {
            for (int id : copies[c].arc_ids) load[static_cast<std::size_t>(id)] += sol.packing[c];
        }
        for (int id = 0; id < d.arc_count(); ++id) {
            const Rational& w = d.arc(id).weight;
            if (load[static_cast<std::size_t>(id)] > w) {
                if (w == 0) {
                    worst = Rational(0);
                    break;
                }
                Rational f = load[static_cast<std::size_t>(id)] / w;
                if (f > worst) worst = f;
            }
        }
        if (worst == 0) {
            for (auto& v : sol.packing) v = 0;
        } else if (worst > 1) {
            for (auto& v : sol.packing) v /= worst;
        }
    }

    sol.optimum = packing_value(sol.packing);
    sol.gap = cover_value(d, sol.cover) - sol.optimum;
    if (mode == Arith::exact && sol.gap != 0) {
        throw NumericError("internal duality gap in exact mode");
    }
    return sol;
}

FracSolution solve_fractional(const Digraph& d, const Pattern& h,
                              const std::vector<Copy>& copies, Arith mode,
                              const ResourceCaps& caps) {
    for (const Copy& c : copies) {
        if (static_cast<int>(c.arc_ids.size()) != h.arc_count()) {
            throw ValidationError("copy arity does not match |E(H)|");
        }
    }
    return solve_fractional_masked(d, copies, {}, {}, mode, caps);
}

Rational nu_star(const Digraph& d, const Pattern& h, Arith mode, const ResourceCaps& caps) {
    std::vector<Copy> copies = enumerate_copies(d, h, caps);
    return solve_fractional(d, h, copies, mode, caps).optimum;
}

SlacknessReport check_complementary_slackness(const Digraph& d,
                                              const std::vector<Copy>& copies,
                                              const FracSolution& sol, Arith mode) {
    const Tolerances tol = tolerances(mode);
    std::vector<Rational> load(static_cast<std::size_t>(d.arc_count()), Rational(0));
    for (std::size_t c = 0; c < copies.size(); ++c) {
        if (sol.packing[c] == 0) continue;
        for (int id : copies[c].arc_ids) load[static_cast<std::size_t>(id)] += sol.packing[c];
    }
    SlacknessReport report;
    for (int id = 0; id < d.arc_count(); ++id) {
        const Rational& c = sol.cover[static_cast<std::size_t>(id)];
        if (!(c > tol.slack_eps)) continue;
        SlacknessEntry e;
        e.arc_id = id;
        e.cover_value = c;
        e.packing_load = load[static_cast<std::size_t>(id)];
        e.weight = d.arc(id).weight;
        e.violation = abs(e.packing_load - e.weight);
        if (e.violation > report.max_violation) report.max_violation = e.violation;
        report.entries.push_back(std::move(e));
    }
    report.ok = !(report.max_violation > tol.feas);
    return report;
}

} // namespace hcover
