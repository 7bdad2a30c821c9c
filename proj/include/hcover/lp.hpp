#pragma once

#include <vector>

#include "hcover/caps.hpp"
#include "hcover/digraph.hpp"
#include "hcover/embed.hpp"
#include "hcover/rational.hpp"

namespace hcover {

// Optimal fractional H-cover (per arc id) paired with an optimal fractional
// H-packing (per copy index). Shared optimum tau* = nu*; gap is the realized
// primal-dual difference (identically zero in exact mode).
struct FracSolution {
    std::vector<Rational> cover;   // indexed by arc id, zero off support
    std::vector<Rational> packing; // indexed by position in `copies`
    Rational optimum = Rational(0);
    Rational gap = Rational(0);
};

// Solves the packing LP (max sum m, per-arc load <= w) by dense simplex from
// the always-feasible slack basis; the cover is read off the optimal dual.
// Exact mode pivots in rationals, floating mode in doubles with tolerance
// repair passes on both certificates.
FracSolution solve_fractional(const Digraph& d, const Pattern& h,
                              const std::vector<Copy>& copies,
                              Arith mode = Arith::exact,
                              const ResourceCaps& caps = ResourceCaps());

// Residual variant: only copies with copy_active set and all arcs active
// enter the program; inactive arcs keep cover 0.
FracSolution solve_fractional_masked(const Digraph& d, const std::vector<Copy>& copies,
                                     const std::vector<char>& arc_active,
                                     const std::vector<char>& copy_active, Arith mode,
                                     const ResourceCaps& caps = ResourceCaps());

Rational nu_star(const Digraph& d, const Pattern& h, Arith mode = Arith::exact,
                 const ResourceCaps& caps = ResourceCaps());

struct SlacknessEntry {
    int arc_id = 0;
    Rational cover_value;
    Rational packing_load;
    Rational weight;
    Rational violation; // |load - weight|
};

struct SlacknessReport {
    std::vector<SlacknessEntry> entries; // arcs with cover above slack_eps
    Rational max_violation = Rational(0);
    bool ok = true;
};

// Complementary slackness audit: every arc carrying positive cover must be
// saturated by the packing.
SlacknessReport check_complementary_slackness(const Digraph& d,
                                              const std::vector<Copy>& copies,
                                              const FracSolution& sol,
                                              Arith mode = Arith::exact);

} // namespace hcover
