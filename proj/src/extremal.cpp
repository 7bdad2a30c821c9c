#include "hcover/extremal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "hcover/embed.hpp"
#include "hcover/errors.hpp"

namespace hcover {

namespace {

struct DecompSearch {
    int n, k;
    std::vector<std::vector<char>> covered;
    std::vector<std::vector<int>> cycles;
    std::uint64_t steps = 0;
    std::uint64_t step_cap;

    DecompSearch(int n_, int k_, std::uint64_t cap) : n(n_), k(k_), step_cap(cap) {
        covered.assign(static_cast<std::size_t>(n),
                       std::vector<char>(static_cast<std::size_t>(n), 0));
    }

    bool pair_covered(int a, int b) const {
        return covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    void set_pair(int a, int b, char v) {
        covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
        covered[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
    }

    bool smallest_uncovered(int& a, int& b) const {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!pair_covered(i, j)) {
                    a = i;
                    b = j;
                    return true;
                }
            }
        }
        return false;
    }

    bool solve() {
        if (++steps > step_cap) {
            throw ResourceLimitError("decompose_kn step budget exceeded");
        }
        int a = 0, b = 0;
        if (!smallest_uncovered(a, b)) return true;
        // next cycle starts (a, b, ...); forcing b second breaks the
        // reflection (its reflection would list b last)
        std::vector<int> cycle = {a, b};
        std::vector<char> in_cycle(static_cast<std::size_t>(n), 0);
        in_cycle[static_cast<std::size_t>(a)] = 1;
        in_cycle[static_cast<std::size_t>(b)] = 1;
        set_pair(a, b, 1);
        bool ok = extend(cycle, in_cycle);
        set_pair(a, b, 0);
        return ok;
    }

    bool extend(std::vector<int>& cycle, std::vector<char>& in_cycle) {
        if (++steps > step_cap) {
            throw ResourceLimitError("decompose_kn step budget exceeded");
        }
        const int last = cycle.back();
        if (static_cast<int>(cycle.size()) == k) {
            if (pair_covered(last, cycle[0])) return false;
            set_pair(last, cycle[0], 1);
            cycles.push_back(cycle);
            if (solve()) return true;
            cycles.pop_back();
            set_pair(last, cycle[0], 0);
            return false;
        }
        for (int v = 0; v < n; ++v) {
            if (in_cycle[static_cast<std::size_t>(v)]) continue;
            if (pair_covered(last, v)) continue;
            cycle.push_back(v);
            in_cycle[static_cast<std::size_t>(v)] = 1;
            set_pair(last, v, 1);
            if (extend(cycle, in_cycle)) return true;
            set_pair(last, v, 0);
            in_cycle[static_cast<std::size_t>(v)] = 0;
            cycle.pop_back();
        }
        return false;
    }
};

} // namespace

CycleDecomposition decompose_kn(int n, int k, const ResourceCaps& caps) {
    if (k < 3) throw ValidationError("decompose_kn requires k >= 3");
    if (n < k) throw ValidationError("decompose_kn requires n >= k");
    if (n % 2 == 0) throw ValidationError("decompose_kn requires odd n (even degrees)");
    if ((static_cast<long>(n) * (n - 1)) % (2L * k) != 0) {
        throw ValidationError("decompose_kn requires 2k | n(n-1)");
    }
    if (n > caps.decompose_n) throw ResourceLimitError("decompose_kn n cap exceeded");

    DecompSearch search(n, k, caps.decompose_steps);
    if (!search.solve()) {
        throw NumericError("no C_k decomposition found at these parameters");
    }
    CycleDecomposition dec;
    dec.n = n;
    dec.k = k;
    dec.cycles = search.cycles;
    return dec;
}

bool validate_decomposition(const CycleDecomposition& dec) {
    const int n = dec.n;
    if (dec.k < 3 || n < dec.k) return false;
    if (static_cast<long>(dec.cycles.size()) * 2 * dec.k != static_cast<long>(n) * (n - 1)) {
        return false;
    }
    std::vector<std::vector<int>> count(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n), 0));
    for (const auto& cycle : dec.cycles) {
        if (static_cast<int>(cycle.size()) != dec.k) return false;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : cycle) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i];
            int b = cycle[(i + 1) % cycle.size()];
            ++count[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            ++count[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (count[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 1) {
                return false;
            }
        }
    }
    return true;
}

Digraph orient_decomposition(const CycleDecomposition& dec, std::uint64_t seed) {
    if (!validate_decomposition(dec)) throw ValidationError("invalid decomposition");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (const auto& cycle : dec.cycles) {
        const bool forward = (rng() & 1ULL) != 0;
        const std::size_t k = cycle.size();
        for (std::size_t i = 0; i < k; ++i) {
            int a = cycle[i];
            int b = cycle[(i + 1) % k];
            if (forward) {
                arcs.push_back({a, b, Rational(1)});
            } else {
                arcs.push_back({b, a, Rational(1)});
            }
        }
    }
    return Digraph(dec.n, std::move(arcs));
}

std::vector<std::size_t> packing_from_decomposition(const CycleDecomposition& dec,
                                                    const Digraph& t,
                                                    const ResourceCaps& caps) {
    if (!validate_decomposition(dec)) throw ValidationError("invalid decomposition");
    // arc lookup; T is a tournament so each ordered pair has at most one arc
    std::map<std::pair<int, int>, int> arc_of;
    for (int id = 0; id < t.arc_count(); ++id) {
        arc_of[{t.arc(id).tail, t.arc(id).head}] = id;
    }
    std::vector<Copy> copies = enumerate_copies(t, directed_cycle(dec.k), caps);
    std::map<std::vector<int>, std::size_t> index_of;
    for (std::size_t c = 0; c < copies.size(); ++c) index_of[copies[c].arc_ids] = c;

    std::vector<std::size_t> result;
    std::vector<char> used(static_cast<std::size_t>(t.arc_count()), 0);
    for (const auto& cycle : dec.cycles) {
        std::vector<int> ids;
        const std::size_t k = cycle.size();
        for (std::size_t i = 0; i < k; ++i) {
            int a = cycle[i];
            int b = cycle[(i + 1) % k];
            auto it = arc_of.find({a, b});
            if (it == arc_of.end()) it = arc_of.find({b, a});
            if (it == arc_of.end()) {
                throw ValidationError("tournament does not realize the decomposition");
            }
            ids.push_back(it->second);
        }
        std::sort(ids.begin(), ids.end());
        auto it = index_of.find(ids);
        if (it == index_of.end()) {
            throw NumericError("oriented cycle is not a directed k-cycle of T");
        }
        for (int id : ids) {
            if (used[static_cast<std::size_t>(id)]) {
                throw NumericError("decomposition cycles are not arc-disjoint in T");
            }
            used[static_cast<std::size_t>(id)] = 1;
        }
        result.push_back(it->second);
    }
    return result;
}

Rational ht_bound(int n, int k) {
    if (k < 2) throw ValidationError("ht_bound requires k >= 2");
    if (n < 0) throw ValidationError("ht_bound requires n >= 0");
    return make_rational(static_cast<long>(n) * (n - 1), 2) +
           make_rational(static_cast<long>(k - 2) * n, 2);
}

HtReport check_ht(const Digraph& d, int k, const ResourceCaps& caps) {
    HtReport report;
    report.bound = ht_bound(d.vertex_count(), k);
    report.arc_count = d.arc_count();
    std::vector<char> all(static_cast<std::size_t>(d.arc_count()), 1);
    report.ck_free = !has_copy_masked(d, directed_cycle(k), all, caps);
    report.consistent = !report.ck_free || Rational(report.arc_count) <= report.bound;
    return report;
}

std::string serialize_decomposition(const CycleDecomposition& dec) {
    std::ostringstream out;
    out << dec.n << " " << dec.k << "\n";
    for (const auto& cycle : dec.cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out << " ";
            out << cycle[i];
        }
        out << "\n";
    }
    return out.str();
}

CycleDecomposition parse_decomposition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CycleDecomposition dec;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> dec.n >> dec.k)) continue; // skip blanks before header
            have_header = true;
            continue;
        }
        std::vector<int> cycle;
        int v;
        while (ls >> v) cycle.push_back(v);
        if (cycle.empty()) continue;
        if (static_cast<int>(cycle.size()) != dec.k) {
            throw ValidationError("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(dec.k) + " vertices");
        }
        dec.cycles.push_back(std::move(cycle));
    }
    if (!have_header) throw ValidationError("missing decomposition header");
    return dec;
}

} // namespace hcover
