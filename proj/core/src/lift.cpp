#include "padicdyn/lift.hpp"

#include "padicdyn/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace padicdyn {

namespace {

// Unit inverse modulo m by extended Euclid (m need not be prime).
unsigned long inv_mod_ul(unsigned long a, unsigned long m) {
    long long t = 0, nt = 1, r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod_ul: not a unit");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<unsigned long>(t);
}

LocalElem eval_form_pair(const BinForm& form, const LocalElem& x, const LocalElem& z) {
    const long d = form.degree();
    const auto& ring = x.ring();
    std::vector<LocalElem> xp, zp;
    xp.reserve(static_cast<std::size_t>(d) + 1);
    zp.reserve(static_cast<std::size_t>(d) + 1);
    xp.push_back(LocalElem::one(ring));
    zp.push_back(LocalElem::one(ring));
    for (long i = 1; i <= d; ++i) {
        xp.push_back(xp.back() * x);
        zp.push_back(zp.back() * z);
    }
    LocalElem acc = LocalElem::zero(ring);
    for (long i = 0; i <= d; ++i) {
        const BigInt& c = form.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        acc = acc + LocalElem::from_integer(ring, c) * xp[static_cast<std::size_t>(i)] *
                        zp[static_cast<std::size_t>(d - i)];
    }
    return acc;
}

LocalElem newton_refine(const IntPoly& s, const IntPoly& ds, LocalElem x) {
    for (int it = 0; it < 64; ++it) {
        LocalElem u = LocalElem::eval_poly(s, x);
        if (u.is_zero_at_precision()) return x;
        LocalElem du = LocalElem::eval_poly(ds, x);
        auto mu = du.valuation();
        if (!mu) throw Error("internal: derivative vanished during Newton refinement");
        LocalElem step = u.div_by_pi(*mu) * du.div_by_pi(*mu).invert();
        x = x - step;
    }
    throw Error("internal: Newton refinement did not converge");
}

// A Hensel-certified root together with v(S'(root)): the root is determined
// by precision-guaranteed arithmetic only up to guaranteed - deriv_val
// digits (Newton divides by S', losing deriv_val digits).
struct FoundRoot {
    LocalElem x;
    long deriv_val;
};

struct ClassOutcome {
    std::vector<FoundRoot> roots;
    std::vector<LocalElem> limited; // exhausted the working precision
    bool need_raise = false;
};

// Resolve one residue class {x = class_residue mod pi} against the
// squarefree chart polynomial S. Every disc either dies (v(S) below the
// level, hence root-free), Hensel-certifies a unique root, or branches one
// pi-digit deeper; the resultant-valuation threshold bounds how deep any
// branch can survive, so reaching the precision wall triggers a raise (or a
// PrecisionLimited emission when raising is disabled).
ClassOutcome resolve_class(const IntPoly& s, const LocalRingPtr& ring, long class_residue,
                           bool raise_allowed) {
    ClassOutcome out;
    if (s.degree() <= 0) return out;
    const IntPoly ds = s.derivative();
    const long p = ring->p;
    const long guard = ring->guaranteed;
    const LocalElem pi = LocalElem::uniformizer(ring);
    std::vector<LocalElem> pipow{LocalElem::one(ring)};
    auto pi_pow = [&](long k) -> const LocalElem& {
        while (static_cast<long>(pipow.size()) <= k) pipow.push_back(pipow.back() * pi);
        return pipow[static_cast<std::size_t>(k)];
    };
    struct Node {
        LocalElem x;
        long level;
    };
    std::vector<Node> stack;
    stack.push_back({LocalElem::from_integer(ring, BigInt(class_residue)), 1});
    while (!stack.empty()) {
        Node nd = std::move(stack.back());
        stack.pop_back();
        LocalElem sv = LocalElem::eval_poly(s, nd.x);
        auto v = sv.valuation();
        if (v && *v < nd.level) continue; // no root in this disc
        const long v_lb = v ? *v : guard; // lower bound on the true valuation
        LocalElem dv = LocalElem::eval_poly(ds, nd.x);
        auto w = dv.valuation();
        if (w && v_lb > 2 * *w && nd.level >= *w + 1) {
            LocalElem root = newton_refine(s, ds, nd.x);
            auto wr = LocalElem::eval_poly(ds, root).valuation();
            out.roots.push_back(FoundRoot{std::move(root), wr ? *wr : guard});
            continue;
        }
        if (nd.level + 1 >= guard) {
            if (raise_allowed) {
                out.need_raise = true;
                return out;
            }
            out.limited.push_back(nd.x);
            continue;
        }
        for (long d = 0; d < p; ++d) {
            LocalElem child =
                d == 0 ? nd.x : nd.x + LocalElem::from_integer(ring, BigInt(d)) * pi_pow(nd.level);
            stack.push_back({std::move(child), nd.level + 1});
        }
    }
    return out;
}

class PhiCache {
public:
    PhiCache(const MapP1& f, long cap) : f_(f), cap_(cap) {}

    const BinForm& phi(long n) {
        auto it = phis_.find(n);
        if (it == phis_.end())
            it = phis_.emplace(n, fixed_point_form(f_, n, cap_)).first;
        return it->second;
    }

    // Squarefree dehomogenizations in the two charts.
    const std::pair<IntPoly, IntPoly>& charts(long n) {
        auto it = charts_.find(n);
        if (it == charts_.end()) {
            const BinForm& ph = phi(n);
            it = charts_
                     .emplace(n, std::make_pair(squarefree_part(ph.dehomogenize_x()),
                                                squarefree_part(ph.dehomogenize_w())))
                     .first;
        }
        return it->second;
    }

    // The exact-period-n part: the squarefree chart polynomials of phi(n)
    // with every root of smaller period divided out. Roots of smaller
    // period are exactly the roots of the squarefree parts at the maximal
    // proper divisors, whose squarefree product divides the period-n
    // squarefree part exactly over the integers (same root sets, all
    // primitive). Roots of the quotients have exact period n by
    // construction; no p-adic test is needed to assign periods.
    const std::pair<IntPoly, IntPoly>& new_point_charts(long n) {
        auto it = news_.find(n);
        if (it != news_.end()) return it->second;
        std::pair<IntPoly, IntPoly> q = charts(n);
        IntPoly lower_x = IntPoly::constant(BigInt(1));
        IntPoly lower_w = IntPoly::constant(BigInt(1));
        for (long m : divisors(n)) {
            if (m == n || !is_prime(BigInt(n / m))) continue; // maximal proper divisors
            const auto& lower = charts(m);
            lower_x = lower_x * lower.first;
            lower_w = lower_w * lower.second;
        }
        auto strip = [](IntPoly& poly, const IntPoly& product) {
            if (poly.degree() <= 0 || product.degree() <= 0) return;
            IntPoly l = squarefree_part(product);
            if (l.degree() > 0) poly = IntPoly::divide_exact(poly, l).normalized();
        };
        strip(q.first, lower_x);
        strip(q.second, lower_w);
        return news_.emplace(n, std::move(q)).first->second;
    }

private:
    const MapP1& f_;
    long cap_;
    std::map<long, BinForm> phis_;
    std::map<long, std::pair<IntPoly, IntPoly>> charts_;
    std::map<long, std::pair<IntPoly, IntPoly>> news_;
};

// Decisive working precision for the class search on S: levels up to
// 2 v_pi(res(S, S')) + 1 settle every disc, with one extra digit so the
// last level's valuation reads are reliable.
long decisive_precision(const IntPoly& s, long p, long e) {
    BigInt r = resultant(s, s.derivative());
    if (r == 0) throw Error("internal: squarefree chart polynomial has zero resultant");
    long t = 2 * e * p_valuation(r, BigInt(p)) + 1;
    return t + 2 * e;
}

} // namespace

MapP1 iterate_map(const MapP1& f, long n, long degree_cap) {
    if (n < 1) throw std::invalid_argument("iterate_map: n >= 1 required");
    BigInt dn = pow_int(BigInt(f.degree()), static_cast<unsigned long>(n));
    if (dn > degree_cap)
        throw SizeCapExceededError("d^n = " + dn.get_str() + " for n = " + std::to_string(n),
                                   degree_cap);
    MapP1 acc = f;
    long k = 1;
    while (2 * k <= n) {
        acc = acc.compose(acc);
        k *= 2;
    }
    if (k < n) acc = acc.compose(iterate_map(f, n - k, degree_cap));
    return acc;
}

BinForm fixed_point_form(const MapP1& f, long n, long degree_cap) {
    MapP1 fn = iterate_map(f, n, degree_cap);
    BinForm phi = fn.numerator().times_z() - fn.denominator().times_x();
    if (phi.is_zero()) return phi;
    return phi.normalized();
}

LocalElem evaluate_form_at_point(const BinForm& form, const ProjPoint& pt) {
    IntPoly chart = pt.infinity_chart ? form.dehomogenize_w() : form.dehomogenize_x();
    return LocalElem::eval_poly(chart, pt.coord);
}

ProjPoint apply_map_point(const MapP1& f, const ProjPoint& pt) {
    const auto& ring = pt.coord.ring();
    LocalElem one = LocalElem::one(ring);
    const LocalElem& x = pt.infinity_chart ? one : pt.coord;
    const LocalElem& z = pt.infinity_chart ? pt.coord : one;
    LocalElem u = eval_form_pair(f.numerator(), x, z);
    LocalElem v = eval_form_pair(f.denominator(), x, z);
    if (v.residue() != 0) return ProjPoint{false, u * v.invert()};
    if (u.residue() != 0) return ProjPoint{true, v * u.invert()};
    throw Error("internal: both coordinates non-units under good reduction");
}

LiftResult find_periodic_points(const MapP1& f, LocalRingPtr ring, const LiftOptions& opts) {
    const long p = ring->p;
    const long e = ring->e;
    BoundReport bound = period_bound(f, p, e);
    std::vector<long> all_n = bound.allowed_union();
    std::vector<long> feasible, skipped;
    for (long n : all_n) {
        if (pow_int(BigInt(f.degree()), static_cast<unsigned long>(n)) <= opts.degree_cap) {
            feasible.push_back(n);
        } else if (opts.skip_over_cap) {
            skipped.push_back(n);
        } else {
            throw SizeCapExceededError("allowed period " + std::to_string(n) + " needs d^n > cap",
                                       opts.degree_cap);
        }
    }
    PhiCache phis(f, opts.degree_cap);
    for (long n : feasible)
        if (phis.phi(n).is_zero()) throw IdentityIterateError(n);

    const long requested = ring->N;
    long work_n = ring->N;
    LocalRingPtr work_ring = ring;
    std::map<std::string, PeriodicPointCert> found;
    for (;;) {
        found.clear();
        if (work_n != work_ring->N)
            work_ring = LocalRingSpec::make(p, e, work_n, ring->eisenstein);
        bool raised = false;
        for (long n : feasible) {
            const auto& [s_affine, s_infinity] = phis.new_point_charts(n);
            for (std::size_t ci = 0; ci < bound.cycles.size(); ++ci) {
                const AllowedPeriods& ap = bound.cycles[ci];
                if (!std::binary_search(ap.periods.begin(), ap.periods.end(), n)) continue;
                for (const FpPoint& rp : ap.cycle.points) {
                    const IntPoly& s = rp.inf ? s_infinity : s_affine;
                    ClassOutcome oc =
                        resolve_class(s, work_ring, rp.inf ? 0 : rp.a, opts.raise_precision);
                    if (oc.need_raise) {
                        long target = decisive_precision(s, p, e);
                        long next = std::min(std::max(2 * work_n, work_n + 8), target);
                        if (next <= work_n) next = target;
                        if (next <= work_n || next > opts.max_precision)
                            throw PrecisionTooLowError(target, opts.max_precision);
                        work_n = next;
                        raised = true;
                        break;
                    }
                    const long guard = work_ring->guaranteed;
                    auto record = [&](ProjPoint pt, CertStatus status) {
                        std::string key = pt.key();
                        auto it = found.find(key);
                        if (it != found.end()) {
                            if (status == CertStatus::HenselCertified)
                                it->second.status = CertStatus::HenselCertified;
                            return;
                        }
                        found.emplace(std::move(key), PeriodicPointCert{std::move(pt), n, status,
                                                                        static_cast<long>(ci)});
                    };
                    for (const FoundRoot& r : oc.roots) {
                        // Digits beyond guaranteed - v(S'(root)) are not
                        // determined by the arithmetic; truncating them makes
                        // re-discoveries of the same root collapse to one key.
                        LocalElem canon =
                            r.x.truncate_digits(std::max(1L, guard - r.deriv_val));
                        record(ProjPoint{rp.inf, std::move(canon)}, CertStatus::HenselCertified);
                    }
                    for (const LocalElem& r : oc.limited)
                        record(ProjPoint{rp.inf, r}, CertStatus::PrecisionLimited);
                }
                if (raised) break;
            }
            if (raised) break;
        }
        if (!raised) break;
    }

    LiftResult out;
    out.bound = std::move(bound);
    out.ring = work_ring;
    out.requested_precision = requested;
    out.skipped_periods = std::move(skipped);
    for (auto& [key, cert] : found) out.points.push_back(std::move(cert));
    std::sort(out.points.begin(), out.points.end(),
              [](const PeriodicPointCert& a, const PeriodicPointCert& b) {
                  if (a.exact_period != b.exact_period) return a.exact_period < b.exact_period;
                  if (a.point.infinity_chart != b.point.infinity_chart)
                      return !a.point.infinity_chart;
                  return a.point.key() < b.point.key();
              });
    return out;
}

OracleCycles oracle_cycles(const MapP1& f, long p, long k, unsigned long size_cap) {
    if (k < 1) throw std::invalid_argument("oracle_cycles: k >= 1 required");
    reduce_map(f, p); // good-reduction gate
    unsigned long pk = 1;
    for (long i = 0; i < k; ++i) {
        if (pk > size_cap / static_cast<unsigned long>(p))
            throw SizeCapExceededError("p^k + p^(k-1) points", static_cast<long>(size_cap));
        pk *= static_cast<unsigned long>(p);
    }
    const unsigned long pk1 = pk / static_cast<unsigned long>(p);
    const unsigned long total = pk + pk1;
    if (total > size_cap)
        throw SizeCapExceededError("p^k + p^(k-1) points", static_cast<long>(size_cap));

    const long d = f.degree();
    std::vector<unsigned long> fc, gc;
    for (const auto& c : f.numerator().coeffs())
        fc.push_back(mpz_fdiv_ui(c.get_mpz_t(), pk));
    for (const auto& c : f.denominator().coeffs())
        gc.push_back(mpz_fdiv_ui(c.get_mpz_t(), pk));

    auto eval_pair = [&](unsigned long x, unsigned long z) {
        std::vector<unsigned long> xp(static_cast<std::size_t>(d) + 1),
            zp(static_cast<std::size_t>(d) + 1);
        xp[0] = zp[0] = 1 % pk;
        for (long i = 1; i <= d; ++i) {
            xp[static_cast<std::size_t>(i)] =
                static_cast<unsigned long>((__int128)xp[static_cast<std::size_t>(i - 1)] * x % pk);
            zp[static_cast<std::size_t>(i)] =
                static_cast<unsigned long>((__int128)zp[static_cast<std::size_t>(i - 1)] * z % pk);
        }
        unsigned long u = 0, v = 0;
        for (long i = 0; i <= d; ++i) {
            u = static_cast<unsigned long>(
                (u + (__int128)fc[static_cast<std::size_t>(i)] * xp[static_cast<std::size_t>(i)] %
                         pk * zp[static_cast<std::size_t>(d - i)]) %
                pk);
            v = static_cast<unsigned long>(
                (v + (__int128)gc[static_cast<std::size_t>(i)] * xp[static_cast<std::size_t>(i)] %
                         pk * zp[static_cast<std::size_t>(d - i)]) %
                pk);
        }
        return std::pair<unsigned long, unsigned long>(u, v);
    };
    auto normalize = [&](unsigned long u, unsigned long v) -> std::size_t {
        if (v % static_cast<unsigned long>(p) != 0) {
            unsigned long x = static_cast<unsigned long>((__int128)u * inv_mod_ul(v, pk) % pk);
            return static_cast<std::size_t>(x);
        }
        unsigned long w = static_cast<unsigned long>((__int128)v * inv_mod_ul(u, pk) % pk);
        return static_cast<std::size_t>(pk + w / static_cast<unsigned long>(p));
    };

    std::vector<std::size_t> next(total);
    for (unsigned long x = 0; x < pk; ++x) {
        auto [u, v] = eval_pair(x, 1);
        next[x] = normalize(u, v);
    }
    for (unsigned long t = 0; t < pk1; ++t) {
        auto [u, v] = eval_pair(1, static_cast<unsigned long>(p) * t);
        next[pk + t] = normalize(u, v);
    }

    detail::FuncGraph g = detail::decompose_functional_graph(next);
    OracleCycles out;
    out.p = p;
    out.k = k;
    out.point_count = total;
    out.preperiodic_count = g.preperiodic_count;
    out.max_tail = g.max_tail;
    for (const auto& cyc : g.cycles) {
        std::vector<OraclePoint> pts;
        pts.reserve(cyc.size());
        for (std::size_t idx : cyc) {
            if (idx < pk)
                pts.push_back(OraclePoint{false, static_cast<unsigned long>(idx)});
            else
                pts.push_back(OraclePoint{true, static_cast<unsigned long>(idx - pk)});
        }
        out.cycles.push_back(std::move(pts));
    }
    return out;
}

} // namespace padicdyn
