#include "reslat/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "reslat/classify.hpp"

namespace reslat {

EnumerationOptions enumeration_options_from_env() {
    EnumerationOptions opts;
    if (const char* cap = std::getenv("RESLAT_SIZE_CAP")) {
        const int v = std::atoi(cap);
        if (v > 0) {
            opts.full_cap = v;
            opts.chain_cap = std::max(opts.chain_cap, v);
        }
    }
    return opts;
}

namespace {

size_t at(int n, int a, int b) { return static_cast<size_t>(a) * static_cast<size_t>(n) + b; }

/// Least upper / greatest lower bound in a finite order, or -1.
int bound_of(int n, const std::vector<char>& leq, int a, int b, bool upper) {
    int best = -1;
    for (int c = 0; c < n; ++c) {
        const bool is_bound = upper ? (leq[at(n, a, c)] && leq[at(n, b, c)])
                                    : (leq[at(n, c, a)] && leq[at(n, c, b)]);
        if (!is_bound) continue;
        if (best < 0 || (upper ? leq[at(n, c, best)] : leq[at(n, best, c)])) best = c;
    }
    if (best < 0) return -1;
    for (int c = 0; c < n; ++c) {
        const bool is_bound = upper ? (leq[at(n, a, c)] && leq[at(n, b, c)])
                                    : (leq[at(n, c, a)] && leq[at(n, c, b)]);
        if (is_bound && !(upper ? leq[at(n, best, c)] : leq[at(n, c, best)])) return -1;
    }
    return best;
}

/// Permutations of the middle elements 1..n-2 (bottom 0 and top n-1 fixed).
std::vector<std::vector<int>> middle_permutations(int n) {
    std::vector<int> mid;
    for (int i = 1; i < n - 1; ++i) mid.push_back(i);
    std::vector<std::vector<int>> perms;
    std::sort(mid.begin(), mid.end());
    do {
        std::vector<int> p(static_cast<size_t>(n));
        p[0] = 0;
        p[static_cast<size_t>(n) - 1] = n - 1;
        for (size_t i = 0; i < mid.size(); ++i) p[i + 1] = mid[i];
        perms.push_back(std::move(p));
    } while (std::next_permutation(mid.begin(), mid.end()));
    if (n == 1) perms.assign(1, std::vector<int>{0});
    return perms;
}

std::vector<char> permute_leq(int n, const std::vector<char>& leq, const std::vector<int>& p) {
    std::vector<char> out(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[at(n, p[static_cast<size_t>(a)], p[static_cast<size_t>(b)])] = leq[at(n, a, b)];
    return out;
}

BoundedLattice finish_lattice(int n, const std::vector<char>& leq) {
    BoundedLattice lat;
    lat.n = n;
    lat.leq = leq;
    lat.join.assign(static_cast<size_t>(n) * n, 0);
    lat.meet.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            lat.join[at(n, a, b)] = bound_of(n, leq, a, b, true);
            lat.meet[at(n, a, b)] = bound_of(n, leq, a, b, false);
        }
    return lat;
}

std::vector<BoundedLattice> lattices_on(int n, bool chains_only) {
    std::vector<BoundedLattice> out;
    if (n == 1) {
        std::vector<char> leq{1};
        out.push_back(finish_lattice(1, leq));
        return out;
    }
    if (chains_only) {
        std::vector<char> leq(static_cast<size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) leq[at(n, a, b)] = 1;
        out.push_back(finish_lattice(n, leq));
        return out;
    }

    const int m = n - 2; // middle elements 1..n-2
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            if (a != b) pairs.emplace_back(a, b);

    const auto perms = middle_permutations(n);
    std::set<std::vector<char>> seen;

    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
        std::vector<char> leq(static_cast<size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a) {
            leq[at(n, a, a)] = 1;
            leq[at(n, 0, a)] = 1;
            leq[at(n, a, n - 1)] = 1;
        }
        for (size_t i = 0; i < pairs.size(); ++i)
            if ((bits >> i) & 1) leq[at(n, pairs[i].first, pairs[i].second)] = 1;

        // Only transitively closed antisymmetric relations; each strict
        // order appears exactly once this way.
        bool ok = true;
        for (int a = 1; a <= m && ok; ++a)
            for (int b = 1; b <= m && ok; ++b) {
                if (a != b && leq[at(n, a, b)] && leq[at(n, b, a)]) ok = false;
                for (int c = 1; c <= m && ok; ++c)
                    if (leq[at(n, a, b)] && leq[at(n, b, c)] && !leq[at(n, a, c)]) ok = false;
            }
        if (!ok) continue;

        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (bound_of(n, leq, a, b, true) < 0 || bound_of(n, leq, a, b, false) < 0)
                    ok = false;
        if (!ok) continue;

        // Greatest representative keeps chains in their natural index order.
        std::vector<char> canon = leq;
        for (const auto& p : perms) canon = std::max(canon, permute_leq(n, leq, p));
        if (seen.insert(canon).second) out.push_back(finish_lattice(n, canon));
    }

    std::sort(out.begin(), out.end(),
              [](const BoundedLattice& a, const BoundedLattice& b) { return a.leq < b.leq; });
    return out;
}

std::vector<std::vector<int>> lattice_automorphisms(const BoundedLattice& lat) {
    std::vector<std::vector<int>> autos;
    for (const auto& p : middle_permutations(lat.n))
        if (permute_leq(lat.n, lat.leq, p) == lat.leq) autos.push_back(p);
    return autos;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.push_back("0");
    for (int i = 1; i < n - 1; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    if (n > 1) names.push_back("1");
    return names;
}

ResiduatedLattice lattice_with_prod(const BoundedLattice& lat, const std::vector<int>& prod,
                                    int serial) {
    const int n = lat.n;
    AlgebraSpec spec;
    spec.name = "enum" + std::to_string(n) + "_" + std::to_string(serial);
    spec.elements = default_names(n);
    auto dump = [&](const std::vector<int>& t) {
        std::vector<std::vector<std::string>> rows;
        for (int a = 0; a < n; ++a) {
            std::vector<std::string> row;
            for (int b = 0; b < n; ++b)
                row.push_back(spec.elements[static_cast<size_t>(t[at(n, a, b)])]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    spec.join = dump(lat.join);
    spec.meet = dump(lat.meet);
    spec.prod = dump(prod);
    spec.bottom = spec.elements.front();
    spec.top = spec.elements.back();
    return ResiduatedLattice::validate(spec); // independent axiom check
}

struct ProductSearch {
    const BoundedLattice& lat;
    int n;
    std::vector<std::pair<int, int>> free_pairs; // a <= b by index, middle only
    std::vector<int> prod;
    std::vector<std::vector<int>> autos;
    std::set<std::vector<int>> seen;
    const std::function<bool(const ResiduatedLattice&)>& emit;
    bool stopped = false;
    int serial = 0;

    ProductSearch(const BoundedLattice& l, const std::function<bool(const ResiduatedLattice&)>& f)
        : lat(l), n(l.n), emit(f) {
        prod.assign(static_cast<size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a) {
            set(a, 0, 0);
            set(a, n - 1, a);
        }
        if (n == 1) prod[0] = 0;
        for (int a = 1; a < n - 1; ++a)
            for (int b = a; b < n - 1; ++b) free_pairs.emplace_back(a, b);
        autos = lattice_automorphisms(lat);
    }

    void set(int a, int b, int v) {
        prod[at(n, a, b)] = v;
        prod[at(n, b, a)] = v;
    }
    int get(int a, int b) const { return prod[at(n, a, b)]; }

    bool monotone_so_far(int a, int b) const {
        const int v = get(a, b);
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                const int w = get(c, d);
                if (w < 0) continue;
                if (lat.leq[at(n, c, a)] && lat.leq[at(n, d, b)] && !lat.leq[at(n, w, v)])
                    return false;
                if (lat.leq[at(n, a, c)] && lat.leq[at(n, b, d)] && !lat.leq[at(n, v, w)])
                    return false;
            }
        return true;
    }

    bool complete_ok() {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (get(get(a, b), c) != get(a, get(b, c))) return false;
        // residuals must exist everywhere
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int best = -1;
                for (int c = 0; c < n; ++c) {
                    if (!lat.leq[at(n, get(a, c), b)]) continue;
                    if (best < 0 || lat.leq[at(n, best, c)]) best = c;
                }
                if (best < 0) return false;
                for (int c = 0; c < n; ++c)
                    if (lat.leq[at(n, get(a, c), b)] && !lat.leq[at(n, c, best)]) return false;
            }
        return true;
    }

    std::vector<int> canonical() const {
        std::vector<int> best = prod;
        for (const auto& p : autos) {
            std::vector<int> mapped(static_cast<size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    mapped[at(n, p[static_cast<size_t>(a)], p[static_cast<size_t>(b)])] =
                        p[static_cast<size_t>(get(a, b))];
            best = std::min(best, mapped);
        }
        return best;
    }

    void run(size_t next) {
        if (stopped) return;
        if (next == free_pairs.size()) {
            if (!complete_ok()) return;
            if (!seen.insert(canonical()).second) return;
            if (!emit(lattice_with_prod(lat, prod, serial++))) stopped = true;
            return;
        }
        const auto [a, b] = free_pairs[next];
        // a.b <= a ^ b since 1 is the unit and prod is monotone
        for (int v = 0; v < n; ++v) {
            if (!lat.leq[at(n, v, lat.meet[at(n, a, b)])]) continue;
            set(a, b, v);
            if (monotone_so_far(a, b)) run(next + 1);
            prod[at(n, a, b)] = -1;
            prod[at(n, b, a)] = -1;
        }
    }
};

int effective_cap(const EnumerationOptions& opts, bool chains_only) {
    return chains_only ? std::max(opts.full_cap, opts.chain_cap) : opts.full_cap;
}

} // namespace

std::vector<BoundedLattice> enumerate_lattices(int n, const EnumerationOptions& opts) {
    if (n < 1 || n > effective_cap(opts, opts.chains_only))
        throw CapExceeded("lattice enumeration capped at " +
                          std::to_string(effective_cap(opts, opts.chains_only)) + ", got " +
                          std::to_string(n));
    return lattices_on(n, opts.chains_only);
}

void for_each_residuated(int n, const EnumerationOptions& opts,
                         const std::function<bool(const ResiduatedLattice&)>& fn) {
    bool chains_only = opts.chains_only;
    if (!chains_only && n > opts.full_cap && n <= opts.chain_cap) chains_only = true;
    if (n < 1 || n > effective_cap(opts, chains_only))
        throw CapExceeded("residuated-lattice enumeration capped at " +
                          std::to_string(effective_cap(opts, chains_only)) + ", got " +
                          std::to_string(n));
    for (const BoundedLattice& lat : lattices_on(n, chains_only)) {
        ProductSearch search(lat, fn);
        search.run(0);
        if (search.stopped) return;
    }
}

std::vector<ResiduatedLattice> enumerate_residuated(int n, const EnumerationOptions& opts) {
    std::vector<ResiduatedLattice> out;
    for_each_residuated(n, opts, [&](const ResiduatedLattice& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

HuntResult hunt(const std::vector<std::string>& antecedents, const std::string& consequent,
                int max_size, const EnumerationOptions& opts) {
    const auto& registry = class_predicates();
    std::vector<bool (*)(const ResiduatedLattice&)> pre;
    for (const auto& name : antecedents) {
        auto it = registry.find(name);
        if (it == registry.end()) throw NameError("unknown class predicate '" + name + "'");
        pre.push_back(it->second);
    }
    auto post_it = registry.find(consequent);
    if (post_it == registry.end())
        throw NameError("unknown class predicate '" + consequent + "'");
    auto post = post_it->second;

    HuntResult result;
    for (int n = 2; n <= max_size; ++n) {
        for_each_residuated(n, opts, [&](const ResiduatedLattice& l) {
            for (auto p : pre)
                if (!p(l)) return true;
            if (post(l)) return true;
            result.found = true;
            result.counterexample = l;
            return false;
        });
        result.last_size_searched = n;
        if (result.found) break;
    }
    return result;
}

} // namespace reslat
