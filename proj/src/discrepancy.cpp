#include "unitred/discrepancy.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "unitred/errors.hpp"
#include "unitred/trace_form.hpp"

namespace unitred {

namespace {

CycloElement one_plus_zeta(const FieldPtr& f, int sign) {
    return CycloElement::from_rational(f, 1) + CycloElement::zeta_power(f, 1) * Rat(sign);
}

std::pair<u64, unsigned> require_prime_power(u64 conductor, const char* op) {
    auto [p, n] = prime_power(conductor);
    if (p == 0) throw InvalidInput(std::string(op) + ": conductor " + std::to_string(conductor) + " is not a prime power");
    if (p == 2 && n < 3) throw InvalidInput(std::string(op) + ": 2-power conductor needs exponent >= 3");
    return {p, n};
}

std::vector<Int> sign_canonical_integers(const CycloElement& x) {
    std::vector<Int> v;
    for (const auto& c : x.coeffs()) v.push_back(c.get_num());
    make_sign_canonical(v);
    return v;
}

}  // namespace

CycloElement witness_2power(unsigned n) {
    if (n < 3) throw InvalidInput("witness_2power: n must be >= 3");
    const FieldPtr f = make_field(ipow(2, n));
    const CycloElement x = one_plus_zeta(f, 1);
    return inverse(x * conj(x));
}

CycloElement witness_ppower(u64 p, unsigned n) {
    if (p == 2 || !is_prime(p)) throw InvalidInput("witness_ppower: p must be an odd prime");
    if (n < 1) throw InvalidInput("witness_ppower: n must be >= 1");
    const FieldPtr f = make_field(ipow(p, n));
    const CycloElement x = one_plus_zeta(f, -1);
    return inverse(x * conj(x));
}

Rat witness_closed_form(u64 conductor) {
    auto [p, n] = require_prime_power(conductor, "witness_closed_form");
    if (p == 2) return Rat(Int(static_cast<unsigned long>(ipow(2, n - 3))));
    Rat r(Int(static_cast<unsigned long>(ipow(p, n - 1) * (p + 1))), 12);
    r.canonicalize();
    return r;
}

DiscrepancyCertificate verify_witness(u64 conductor, const EnumBudget& budget) {
    auto [p, n] = require_prime_power(conductor, "verify_witness");
    const CycloElement a = p == 2 ? witness_2power(n) : witness_ppower(p, n);
    const FieldPtr f = a.field_ptr();

    DiscrepancyCertificate c;
    c.conductor = conductor;
    c.prime = p;
    c.exponent = n;
    c.witness.assign(a.coeffs().begin(), a.coeffs().end());
    c.trace_a = trace(a);
    c.closed_form = witness_closed_form(conductor);
    c.expected_mu = p == 2 ? Rat(Int(static_cast<unsigned long>(ipow(2, n - 1))))
                           : Rat(Int(static_cast<unsigned long>(ipow(p, n - 1) * (p - 1))));
    c.expected_minimizer = sign_canonical_integers(one_plus_zeta(f, p == 2 ? 1 : -1));

    const TraceLattice lattice = trace_lattice(a);
    const Rat scaled = c.trace_a * lattice.gram.scale;
    const EnumerationResult e = enumerate_below(lattice.gram.scaled, scaled, budget);
    c.nodes = e.nodes;
    // 1 has value Tr(a), so the enumeration is never empty.
    const Int trace_scaled = scaled.get_num();
    const Int min_scaled = e.vectors.front().value;
    auto below_end = std::find_if(e.vectors.begin(), e.vectors.end(), [&](const LatticeVector& v) { return v.value >= trace_scaled; });
    auto min_end = std::find_if(e.vectors.begin(), e.vectors.end(), [&](const LatticeVector& v) { return v.value != min_scaled; });
    auto annotated_end = std::max(below_end, min_end);
    std::vector<MinimaEntry> entries = annotate(lattice, std::span<const LatticeVector>(e.vectors.data(), static_cast<std::size_t>(annotated_end - e.vectors.begin())));

    const auto n_below = static_cast<std::size_t>(below_end - e.vectors.begin());
    const auto n_min = static_cast<std::size_t>(min_end - e.vectors.begin());
    c.reduced_evidence.assign(entries.begin(), entries.begin() + static_cast<long>(n_below));
    c.minima.assign(entries.begin(), entries.begin() + static_cast<long>(n_min));
    c.mu_a = c.minima.front().value;

    c.reduced = std::none_of(c.reduced_evidence.begin(), c.reduced_evidence.end(), has_unit_norm);
    c.mu_star = c.trace_a;
    for (const auto& entry : c.reduced_evidence)
        if (has_unit_norm(entry)) {
            c.mu_star = entry.value;
            break;
        }
    c.ratio = c.mu_star / c.mu_a;
    c.closed_form_matches = c.ratio == c.closed_form;
    c.minimizer_attained = c.mu_a == c.expected_mu &&
                           std::any_of(c.minima.begin(), c.minima.end(), [&](const MinimaEntry& m) { return m.coeffs == c.expected_minimizer; });
    return c;
}

Rat rho(u64 conductor, std::span<const Rat> z) {
    const FieldPtr f = make_field(conductor);
    if (z.size() != f->degree()) throw InvalidInput("rho: expected " + std::to_string(f->degree()) + " coordinates");
    const CycloElement x(f, std::vector<Rat>(z.begin(), z.end()));
    return trace(x * conj(x));
}

Rat rho_closed_form(u64 conductor, std::span<const Rat> z) {
    auto [p, n] = prime_power(conductor);
    if (p == 0) throw InvalidInput("rho_closed_form: conductor must be a prime power");
    const u64 phi = euler_phi(conductor);
    if (z.size() != phi) throw InvalidInput("rho_closed_form: expected " + std::to_string(phi) + " coordinates");
    const u64 stride = ipow(p, n - 1);
    if (p == 2) {
        Rat s = 0;
        for (const auto& v : z) s += v * v;
        return Rat(Int(static_cast<unsigned long>(stride))) * s;
    }
    Rat total = 0;
    std::vector<Rat> m(p - 1);
    for (u64 i = 0; i < stride; ++i) {
        for (u64 j = 0; j + 1 < p; ++j) m[j] = z[i + j * stride];
        total += q_eval(p, m);
    }
    return Rat(Int(static_cast<unsigned long>(stride))) * total;
}

namespace {

template <class T>
T q_eval_impl(u64 p, std::span<const T> m) {
    if (p < 3 || !is_prime(p)) throw InvalidInput("q_eval: p must be an odd prime");
    if (m.size() != p - 1) throw InvalidInput("q_eval: expected " + std::to_string(p - 1) + " coordinates");
    T squares = 0, cross = 0, prefix = 0;
    for (const auto& v : m) {
        squares += v * v;
        cross += prefix * v;
        prefix += v;
    }
    return T(T(p - 1) * squares - 2 * cross);
}

}  // namespace

Int q_eval(u64 p, std::span<const Int> m) { return q_eval_impl<Int>(p, m); }
Rat q_eval(u64 p, std::span<const Rat> m) { return q_eval_impl<Rat>(p, m); }

IntMatrix q_matrix(u64 p) {
    if (p < 3 || !is_prime(p)) throw InvalidInput("q_matrix: p must be an odd prime");
    IntMatrix q(p - 1, p - 1);
    for (std::size_t i = 0; i < p - 1; ++i)
        for (std::size_t j = 0; j < p - 1; ++j) q(i, j) = i == j ? Int(static_cast<unsigned long>(p - 1)) : Int(-1);
    return q;
}

namespace {

struct L75Partial {
    std::uint64_t checked = 0, violations = 0, equality = 0;
    long long min_excess = std::numeric_limits<long long>::max();
    long long boundary = std::numeric_limits<long long>::max();
};

std::vector<std::vector<long long>> l75_targets(u64 p) {
    // Q is symmetric, yet every permutation is scanned as stated.
    std::vector<long long> r(p - 1);
    std::iota(r.begin(), r.end(), 1);
    std::vector<std::vector<long long>> out;
    do {
        std::vector<long long> w(p - 1);
        for (std::size_t i = 0; i + 1 < p; ++i) w[i] = r[p - 2 - i];  // (r(p-1), ..., r(1))
        out.push_back(std::move(w));
    } while (std::next_permutation(r.begin(), r.end()));
    return out;
}

// Scaled by p: Q(p v) = p^2 Q(v) and Q(v) = p sum v_i^2 - (sum v_i)^2 on integers.
long long q_int(long long p, const std::vector<long long>& v) {
    long long s = 0, s2 = 0;
    for (long long x : v) {
        s += x;
        s2 += x * x;
    }
    return p * s2 - s * s;
}

L75Partial l75_one(u64 p, long box, const std::vector<long long>& w) {
    L75Partial out;
    const long long pp = static_cast<long long>(p);
    const long long base = q_int(pp, w);
    const std::size_t d = p - 1;
    std::vector<long long> m(d, -box), v(d);
    for (;;) {
        bool zero = true, on_boundary = false;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = w[i] - pp * m[i];
            zero = zero && m[i] == 0;
            on_boundary = on_boundary || m[i] == box || m[i] == -box;
        }
        const long long excess = q_int(pp, v) - base;
        ++out.checked;
        if (excess < 0) ++out.violations;
        if (excess == 0 && !zero) ++out.equality;
        out.min_excess = std::min(out.min_excess, excess);
        if (on_boundary) out.boundary = std::min(out.boundary, excess);
        std::size_t k = 0;
        while (k < d && m[k] == box) m[k++] = -box;
        if (k == d) break;
        ++m[k];
    }
    return out;
}

L75Report l75_finish(u64 p, long box, std::uint64_t perms, const L75Partial& t) {
    L75Report r;
    r.p = p;
    r.box = box;
    r.permutations = perms;
    r.checked = t.checked;
    r.violations = t.violations;
    r.equality_points = t.equality;
    const Int p2 = Int(static_cast<unsigned long>(p * p));
    r.min_excess = Rat(Int(static_cast<long>(t.min_excess)), p2);
    r.min_excess.canonicalize();
    r.boundary_margin = Rat(Int(static_cast<long>(t.boundary)), p2);
    r.boundary_margin.canonicalize();
    r.min_at_zero = t.min_excess == 0;
    return r;
}

void check_l75_args(u64 p, long box) {
    if (p < 3 || !is_prime(p)) throw InvalidInput("l75_scan: p must be an odd prime");
    if (p > 11) throw InvalidInput("l75_scan: p > 11 is beyond desk scale");
    if (box < 0) throw InvalidInput("l75_scan: box radius must be non-negative");
}

}  // namespace

L75Report l75_scan_serial(u64 p, long box) {
    check_l75_args(p, box);
    const auto targets = l75_targets(p);
    L75Partial total;
    for (const auto& w : targets) {
        const L75Partial part = l75_one(p, box, w);
        total.checked += part.checked;
        total.violations += part.violations;
        total.equality += part.equality;
        total.min_excess = std::min(total.min_excess, part.min_excess);
        total.boundary = std::min(total.boundary, part.boundary);
    }
    return l75_finish(p, box, targets.size(), total);
}

L75Report l75_scan(u64 p, long box) {
    check_l75_args(p, box);
    const auto targets = l75_targets(p);
    std::uint64_t checked = 0, violations = 0, equality = 0;
    long long min_excess = std::numeric_limits<long long>::max();
    long long boundary = std::numeric_limits<long long>::max();
    const long count = static_cast<long>(targets.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : checked, violations, equality) reduction(min : min_excess, boundary)
    for (long k = 0; k < count; ++k) {
        const L75Partial part = l75_one(p, box, targets[static_cast<std::size_t>(k)]);
        checked += part.checked;
        violations += part.violations;
        equality += part.equality;
        min_excess = std::min(min_excess, part.min_excess);
        boundary = std::min(boundary, part.boundary);
    }
    return l75_finish(p, box, targets.size(), L75Partial{checked, violations, equality, min_excess, boundary});
}

Eq4Result eq4_check(const CycloElement& a, const CycloElement& y) {
    const u64 n_base = a.field().conductor();
    const u64 n_top = y.field().conductor();
    if (n_top % n_base != 0) throw InvalidInput("eq4_check: base conductor must divide the top conductor");
    u64 factor = 1;
    if (n_top != n_base) {
        auto [p, k] = prime_power(n_top / n_base);
        if (p == 0 || n_base % p != 0)
            throw InvalidInput("eq4_check: M/N must be a power of a prime dividing N");
        factor = ipow(p, k);
    }
    const FieldPtr top = y.field_ptr();
    const std::vector<CycloElement> parts = decompose(y, a.field_ptr());

    Eq4Result r;
    r.lhs = trace(lift(a, top) * y * conj(y));
    r.rhs = 0;
    for (const auto& x : parts) r.rhs += trace(a * x * conj(x));
    r.rhs *= Int(static_cast<unsigned long>(factor));
    r.pass = r.lhs == r.rhs;
    return r;
}

Eq4Suite eq4_random_suite(u64 base, u64 top, unsigned trials, std::uint64_t seed) {
    const FieldPtr fb = make_field(base);
    const FieldPtr ft = make_field(top);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), coef(-3, 3);

    Eq4Suite s;
    s.base = base;
    s.top = top;
    s.trials = trials;
    s.seed = seed;
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<Rat> ac(fb->degree());
        for (auto& c : ac) {
            const int nu = num(rng);
            c = Rat(nu, den(rng));
            c.canonicalize();
        }
        std::vector<Rat> yc(ft->degree());
        for (auto& c : yc) c = coef(rng);
        s.results.push_back(eq4_check(CycloElement(fb, std::move(ac)), CycloElement(ft, std::move(yc))));
        if (s.results.back().pass) ++s.passed;
    }
    return s;
}

KroneckerReport kronecker_check(u64 base, u64 top) {
    if (top % base != 0 || top == base) throw InvalidInput("kronecker_check: need N | M with M > N");
    auto [p, k] = prime_power(top / base);
    if (p == 0 || base % p != 0) throw InvalidInput("kronecker_check: M/N must be a power of a prime dividing N");
    const u64 q = ipow(p, k);
    const FieldPtr fb = make_field(base);
    const FieldPtr ft = make_field(top);

    KroneckerReport r;
    r.base = base;
    r.top = top;
    for (u64 j = 0; j < top; ++j) {
        const CycloElement got = rel_trace(CycloElement::zeta_power(ft, static_cast<long long>(j)), fb);
        const CycloElement want = j % q == 0 ? CycloElement::zeta_power(fb, static_cast<long long>(j / q)) * Rat(Int(static_cast<unsigned long>(q)))
                                             : CycloElement::zero(fb);
        ++r.checked;
        if (got == want) ++r.passed;
    }
    return r;
}

DeltaBound delta_lower_bound(u64 conductor) {
    if (conductor == 0) throw InvalidInput("delta_lower_bound: conductor must be positive");
    DeltaBound best;
    best.conductor = conductor;
    best.bound = 1;
    best.formula = "trivial bound";
    best.desk_verifiable = true;
    for (auto [p, k] : factorize(conductor)) {
        Rat value;
        std::string formula;
        if (p == 2) {
            if (k < 3) continue;
            value = Rat(Int(static_cast<unsigned long>(ipow(2, k - 3))));
            formula = "2^(k-3)";
        } else {
            value = Rat(Int(static_cast<unsigned long>(ipow(p, k - 1) * (p + 1))), 12);
            value.canonicalize();
            formula = "p^(k-1)(p+1)/12";
        }
        if (value > best.bound) {
            const u64 d = ipow(p, k);
            best.bound = value;
            best.divisor = d;
            best.prime = p;
            best.exponent = k;
            best.formula = formula;
            best.desk_verifiable = euler_phi(d) <= 20;
        }
    }
    return best;
}

}  // namespace unitred
