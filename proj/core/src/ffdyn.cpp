#include "padicdyn/ffdyn.hpp"

#include "padicdyn/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicdyn {

namespace {

long mod_pow(long base, long exp, long p) {
    long r = 1;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long>((__int128)r * base % p);
        base = static_cast<long>((__int128)base * base % p);
        exp >>= 1;
    }
    return r;
}

long mod_inv(long a, long p) { return mod_pow(a, p - 2, p); }

long eval_mod(const std::vector<long>& c, long x, long p) {
    long r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = static_cast<long>(((__int128)r * x + c[i]) % p);
    return r;
}

std::vector<long> deriv_mod(const std::vector<long>& c, long p) {
    if (c.size() <= 1) return {};
    std::vector<long> r(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        r[i - 1] = static_cast<long>((__int128)c[i] * static_cast<long>(i) % p);
    return r;
}

// Derivative of the rational map num/den at x, valid when den(x) != 0:
// (num' den - num den')(x) / den(x)^2.
long rational_deriv_at(const std::vector<long>& num, const std::vector<long>& den, long x, long p) {
    long n = eval_mod(num, x, p), dn = eval_mod(deriv_mod(num, p), x, p);
    long d = eval_mod(den, x, p), dd = eval_mod(deriv_mod(den, p), x, p);
    long top = static_cast<long>((((__int128)dn * d - (__int128)n * dd) % p + p) % p);
    long bot = static_cast<long>((__int128)d * d % p);
    return static_cast<long>((__int128)top * mod_inv(bot, p) % p);
}

} // namespace

FpPoint FpMap::apply(const FpPoint& pt) const {
    long x, z;
    if (pt.inf) {
        // (1 : 0): the form values are the top coefficients.
        x = fc[static_cast<std::size_t>(d)];
        z = gc[static_cast<std::size_t>(d)];
    } else {
        x = eval_mod(fc, pt.a, p);
        z = eval_mod(gc, pt.a, p);
    }
    if (z != 0) return FpPoint{false, static_cast<long>((__int128)x * mod_inv(z, p) % p)};
    return FpPoint{true, 0};
}

FpMap reduce_map(const MapP1& f, long p) {
    long v = f.reduction_valuation(p);
    if (v > 0) throw BadReductionError(p, v);
    FpMap r;
    r.p = p;
    r.d = f.degree();
    r.fc = f.numerator().reduce_mod(p);
    r.gc = f.denominator().reduce_mod(p);
    return r;
}

namespace detail {

FuncGraph decompose_functional_graph(const std::vector<std::size_t>& next) {
    const std::size_t n = next.size();
    FuncGraph out;
    out.on_cycle.assign(n, false);
    std::vector<unsigned char> state(n, 0); // 0 new, 1 on current path, 2 done
    std::vector<std::size_t> path;
    for (std::size_t s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        path.clear();
        std::size_t v = s;
        while (state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = next[v];
        }
        if (state[v] == 1) {
            // New cycle: the suffix of the path starting at v.
            auto it = std::find(path.begin(), path.end(), v);
            std::vector<std::size_t> cyc(it, path.end());
            for (std::size_t u : cyc) out.on_cycle[u] = true;
            auto mn = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), mn, cyc.end());
            out.cycles.push_back(std::move(cyc));
        }
        for (std::size_t u : path) state[u] = 2;
    }
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    // Tail depths by memoized walk to the nearest cycle.
    std::vector<long> depth(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        path.clear();
        std::size_t v = s;
        while (!out.on_cycle[v] && depth[v] < 0) {
            path.push_back(v);
            v = next[v];
        }
        long base = out.on_cycle[v] ? 0 : depth[v];
        for (std::size_t i = path.size(); i-- > 0;) depth[path[i]] = base + static_cast<long>(path.size() - i);
        if (out.on_cycle[s]) depth[s] = 0;
    }
    for (std::size_t s = 0; s < n; ++s) {
        if (!out.on_cycle[s]) {
            ++out.preperiodic_count;
            out.max_tail = std::max(out.max_tail, depth[s]);
        }
    }
    return out;
}

} // namespace detail

CycleDecomposition enumerate_cycles(const FpMap& f) {
    const long p = f.p;
    const std::size_t n = static_cast<std::size_t>(p) + 1;
    auto to_point = [p](std::size_t idx) {
        return idx == static_cast<std::size_t>(p) ? FpPoint{true, 0}
                                                  : FpPoint{false, static_cast<long>(idx)};
    };
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        FpPoint q = f.apply(to_point(i));
        next[i] = q.inf ? static_cast<std::size_t>(p) : static_cast<std::size_t>(q.a);
    }
    detail::FuncGraph g = detail::decompose_functional_graph(next);
    CycleDecomposition out;
    out.p = p;
    out.preperiodic_count = g.preperiodic_count;
    out.max_tail = g.max_tail;
    for (const auto& cyc : g.cycles) {
        CycleData cd;
        for (std::size_t idx : cyc) cd.points.push_back(to_point(idx));
        cd.m = static_cast<long>(cd.points.size());
        cd.lambda = cycle_multiplier(f, cd.points);
        if (cd.lambda != 0) cd.r = mult_order(cd.lambda, p);
        out.cycles.push_back(std::move(cd));
    }
    return out;
}

long cycle_multiplier(const FpMap& f, const std::vector<FpPoint>& cycle) {
    const long p = f.p;
    std::vector<long> at(f.fc.rbegin(), f.fc.rend()); // F(1, w)
    std::vector<long> bt(f.gc.rbegin(), f.gc.rend()); // G(1, w)
    long lambda = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const FpPoint& src = cycle[i];
        const FpPoint& dst = cycle[(i + 1) % cycle.size()];
        long c;
        if (!src.inf) {
            c = dst.inf ? rational_deriv_at(f.gc, f.fc, src.a, p)
                        : rational_deriv_at(f.fc, f.gc, src.a, p);
        } else {
            c = dst.inf ? rational_deriv_at(bt, at, 0, p)
                        : rational_deriv_at(at, bt, 0, p);
        }
        lambda = static_cast<long>((__int128)lambda * c % p);
        if (lambda == 0) return 0;
    }
    return lambda;
}

long mult_order(long lambda, long p) {
    lambda %= p;
    if (lambda < 0) lambda += p;
    if (lambda == 0) throw std::invalid_argument("mult_order: lambda must be nonzero in F_p");
    long r = p - 1;
    long n = p - 1;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        while (r % q == 0 && mod_pow(lambda, r / q, p) == 1) r /= q;
    }
    if (n > 1)
        while (r % n == 0 && mod_pow(lambda, r / n, p) == 1) r /= n;
    return r;
}

} // namespace padicdyn
