#include "unitred/real_subfield.hpp"

#include <algorithm>

#include "unitred/errors.hpp"
#include "unitred/unit_search.hpp"

namespace unitred {

namespace {

// Reduces a polynomial modulo the monic min_poly, returning exactly m coefficients.
std::vector<Rat> reduce(RatPoly p, const IntPoly& min_poly) {
    const std::size_t m = min_poly.size() - 1;
    for (std::size_t k = p.size(); k-- > m;) {
        if (p[k] == 0) continue;
        const Rat c = p[k];
        for (std::size_t j = 0; j <= m; ++j) p[k - m + j] -= c * min_poly[j];
    }
    p.resize(m);
    return p;
}

}  // namespace

std::shared_ptr<const RealFieldContext> RealFieldContext::make(u64 conductor) {
    FieldPtr cyclo = make_field(conductor);
    std::shared_ptr<RealFieldContext> ctx(new RealFieldContext());
    ctx->cyclo_ = cyclo;
    const std::size_t n = cyclo->degree();
    const std::size_t m = n <= 2 ? 1 : n / 2;
    ctx->degree_ = m;

    const CycloElement theta = CycloElement::zeta_power(cyclo, 1) + CycloElement::zeta_power(cyclo, -1);
    std::vector<CycloElement> powers{CycloElement::from_rational(cyclo, 1)};
    for (std::size_t j = 1; j <= m; ++j) powers.push_back(powers.back() * theta);

    ctx->embedding_ = RatMatrix(m, n);
    RatMatrix cols(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            ctx->embedding_(j, i) = powers[j][i];
            cols(i, j) = powers[j][i];
        }
    std::vector<Rat> top(powers[m].coeffs().begin(), powers[m].coeffs().end());
    const auto dep = solve(cols, top);
    if (!dep) throw VerificationFailure("make_real_field: theta^m is not dependent on lower powers");
    ctx->min_poly_.resize(m + 1);
    for (std::size_t j = 0; j < m; ++j) {
        if (!is_integer((*dep)[j])) throw VerificationFailure("make_real_field: non-integral minimal polynomial");
        ctx->min_poly_[j] = -(*dep)[j].get_num();
    }
    ctx->min_poly_[m] = 1;

    // Tr_{K+}(theta^k) = Tr_K(theta^k) / 2 when K != K+; K_1 = K_1^+ and the
    // degree-2 fields have K+ = Q with [K : K+] = 2.
    const Rat half = n == 1 ? Rat(1) : Rat(1, 2);
    CycloElement t = CycloElement::from_rational(cyclo, 1);
    for (std::size_t k = 0; k + 1 < 2 * m; ++k) {
        ctx->power_traces_.push_back(trace(t) * half);
        t *= theta;
    }
    return ctx;
}

RealElement::RealElement(RealFieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree())
        throw InvalidInput("RealElement: expected " + std::to_string(field_->degree()) + " coordinates, got " + std::to_string(coeffs_.size()));
}

RealElement RealElement::from_rational(RealFieldPtr field, const Rat& value) {
    std::vector<Rat> c(field->degree());
    c[0] = value;
    return RealElement(std::move(field), std::move(c));
}

RealElement RealElement::theta(RealFieldPtr field) {
    const IntPoly& mp = field->min_poly();
    RatPoly x{0, 1};
    auto c = reduce(x, mp);
    return RealElement(std::move(field), std::move(c));
}

RealElement RealElement::from_integers(RealFieldPtr field, std::span<const Int> coeffs) {
    return RealElement(std::move(field), to_rationals(coeffs));
}

bool RealElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

void RealElement::require_same_field(const RealElement& rhs, const char* op) const {
    if (field_->conductor() != rhs.field_->conductor())
        throw InvalidInput(std::string(op) + ": elements of different real subfields");
}

RealElement RealElement::operator-() const {
    RealElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RealElement& RealElement::operator+=(const RealElement& rhs) {
    require_same_field(rhs, "+");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

RealElement& RealElement::operator-=(const RealElement& rhs) {
    require_same_field(rhs, "-");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

RealElement& RealElement::operator*=(const RealElement& rhs) {
    require_same_field(rhs, "*");
    RatPoly prod(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = reduce(std::move(prod), field_->min_poly());
    return *this;
}

RealElement& RealElement::operator*=(const Rat& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

bool operator==(const RealElement& a, const RealElement& b) {
    return a.field_->conductor() == b.field_->conductor() && a.coeffs_ == b.coeffs_;
}

CycloElement embed(const RealElement& x) {
    const RealFieldContext& f = x.field();
    const std::size_t n = f.cyclotomic()->degree();
    std::vector<Rat> out(n);
    for (std::size_t j = 0; j < f.degree(); ++j) {
        if (x.coeffs()[j] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) out[i] += x.coeffs()[j] * f.embedding()(j, i);
    }
    return CycloElement(f.cyclotomic(), std::move(out));
}

RealElement project(const CycloElement& y, const RealFieldPtr& field) {
    if (y.field().conductor() != field->conductor()) throw InvalidInput("project: conductor mismatch");
    if (!(conj(y) == y)) throw InvalidInput("project: element is not fixed by complex conjugation");
    const std::size_t n = field->cyclotomic()->degree();
    RatMatrix cols(n, field->degree());
    for (std::size_t j = 0; j < field->degree(); ++j)
        for (std::size_t i = 0; i < n; ++i) cols(i, j) = field->embedding()(j, i);
    auto sol = solve(cols, std::vector<Rat>(y.coeffs().begin(), y.coeffs().end()));
    if (!sol) throw InvalidInput("project: element does not lie in the real subfield");
    return RealElement(field, std::move(*sol));
}

Rat real_trace(const RealElement& x) {
    Rat t = 0;
    const auto& pt = x.field().power_traces();
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) t += x.coeffs()[k] * pt[k];
    return t;
}

Rat real_norm(const RealElement& x) {
    RatPoly a(x.coeffs().begin(), x.coeffs().end());
    trim(a);
    return resultant(to_rat_poly(x.field().min_poly()), a);
}

RealElement real_inverse(const RealElement& x) {
    if (x.is_zero()) throw InvalidInput("real_inverse: zero has no inverse");
    RatPoly a(x.coeffs().begin(), x.coeffs().end());
    trim(a);
    auto [g, s] = half_xgcd(a, to_rat_poly(x.field().min_poly()));
    if (g.size() != 1) throw VerificationFailure("real_inverse: minimal polynomial is reducible");
    return RealElement(x.field_ptr(), reduce(std::move(s), x.field().min_poly()));
}

GramMatrix real_gram(const RealElement& a) {
    const std::size_t m = a.field().degree();
    const RealElement theta = RealElement::theta(a.field_ptr());
    std::vector<Rat> h;
    RealElement t = a;
    for (std::size_t k = 0; k + 1 < 2 * m; ++k) {
        h.push_back(real_trace(t));
        t *= theta;
    }
    RatMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(i, j) = h[i + j];
    return GramMatrix::from_entries(std::move(g), a.field().conductor(), Basis::Theta);
}

TraceLattice real_trace_lattice(const RealElement& a) {
    RealFieldPtr field = a.field_ptr();
    return {real_gram(a), [field](std::span<const Int> z) { return real_norm(RealElement::from_integers(field, z)); }};
}

std::string to_string(RealWitnessReading r) { return r == RealWitnessReading::Inverse ? "inverse" : "literal"; }

RealElement real_witness_2power(unsigned n) {
    if (n < 4) throw InvalidInput("real_witness_2power: n must be >= 4");
    const RealFieldPtr f = make_real_field(ipow(2, n));
    return real_inverse(RealElement::from_rational(f, 2) + RealElement::theta(f));
}

RealElement real_witness_ppower(u64 p, unsigned n, RealWitnessReading reading) {
    if (p == 2 || !is_prime(p)) throw InvalidInput("real_witness_ppower: p must be an odd prime");
    if (n < 1) throw InvalidInput("real_witness_ppower: n must be >= 1");
    if (p == 3 && n == 1) throw InvalidInput("real_witness_ppower: K_3^+ = Q has no such witness");
    const RealFieldPtr f = make_real_field(ipow(p, n));
    const RealElement base = RealElement::from_rational(f, 2) - RealElement::theta(f);
    return reading == RealWitnessReading::Inverse ? real_inverse(base) : base;
}

RealDiscrepancyCertificate verify_real_witness(u64 conductor, const EnumBudget& budget, RealWitnessReading reading) {
    auto [p, n] = prime_power(conductor);
    if (p == 0) throw InvalidInput("verify_real_witness: conductor must be a prime power");
    if (p == 2 && n < 4) throw InvalidInput("verify_real_witness: 2-power conductor needs exponent >= 4");
    if (p == 2 && reading == RealWitnessReading::Literal)
        throw InvalidInput("verify_real_witness: the literal reading applies to odd prime powers only");

    const RealElement a = p == 2 ? real_witness_2power(n) : real_witness_ppower(p, n, reading);
    const RealFieldPtr f = a.field_ptr();
    RealDiscrepancyCertificate c;
    c.conductor = conductor;
    c.prime = p;
    c.exponent = n;
    c.reading = reading;
    c.witness.assign(a.coeffs().begin(), a.coeffs().end());
    c.trace_a = real_trace(a);

    const Int pn1(static_cast<unsigned long>(ipow(p, n - 1)));
    if (p == 2) {
        c.closed_form_stated = Rat(Int(static_cast<unsigned long>(ipow(2, n - 4))));
        c.closed_form_exact = c.closed_form_stated;
    } else {
        const Int p_(static_cast<unsigned long>(p));
        c.closed_form_stated = Rat(pn1 * (p_ * p_ - 1), 24 * (p_ - 2));
        c.closed_form_exact = n == 1 ? Rat(p_ * p_ - 1, 24 * p_) : Rat(pn1 * (p_ + 1), 24);
        c.closed_form_stated.canonicalize();
        c.closed_form_exact.canonicalize();
    }

    const TraceLattice lattice = real_trace_lattice(a);
    const Rat scaled = c.trace_a * lattice.gram.scale;
    const EnumerationResult e = enumerate_below(lattice.gram.scaled, scaled, budget);
    c.nodes = e.nodes;
    const Int trace_scaled = scaled.get_num();
    const Int min_scaled = e.vectors.front().value;
    auto below_end = std::find_if(e.vectors.begin(), e.vectors.end(), [&](const LatticeVector& v) { return v.value >= trace_scaled; });
    auto min_end = std::find_if(e.vectors.begin(), e.vectors.end(), [&](const LatticeVector& v) { return v.value != min_scaled; });
    auto annotated_end = std::max(below_end, min_end);
    auto entries = annotate(lattice, std::span<const LatticeVector>(e.vectors.data(), static_cast<std::size_t>(annotated_end - e.vectors.begin())));
    const auto n_below = below_end - e.vectors.begin();
    const auto n_min = min_end - e.vectors.begin();
    c.reduced_evidence.assign(entries.begin(), entries.begin() + n_below);
    c.minima.assign(entries.begin(), entries.begin() + n_min);
    c.mu_a = c.minima.front().value;

    c.reduced = std::none_of(c.reduced_evidence.begin(), c.reduced_evidence.end(), has_unit_norm);
    c.mu_star = c.trace_a;
    for (const auto& entry : c.reduced_evidence)
        if (has_unit_norm(entry)) {
            c.mu_star = entry.value;
            break;
        }
    c.ratio = c.mu_star / c.mu_a;
    if (reading == RealWitnessReading::Inverse) {
        const RealElement b = p == 2 ? RealElement::from_rational(f, 2) + RealElement::theta(f)
                                     : RealElement::from_rational(f, 2) - RealElement::theta(f);
        c.mu_upper = real_trace(a * b * b);
        c.bound = c.mu_star / *c.mu_upper;
    }
    return c;
}

MuRelations real_mu_relations_check(const RealElement& a, const EnumBudget& budget) {
    const CycloElement lifted = embed(a);
    MuRelations r;
    r.mu_star_real = mu_star(real_trace_lattice(a), budget).mu_star;
    r.mu_star_lifted = mu_star(trace_lattice(lifted), budget).mu_star;
    r.mu_real = shortest(real_trace_lattice(a), budget).mu;
    r.mu_lifted = shortest(trace_lattice(lifted), budget).mu;
    const Rat factor = a.field().cyclotomic()->degree() == 1 ? Rat(1) : Rat(1, 2);
    r.mu_star_halves = r.mu_star_real == factor * r.mu_star_lifted;
    r.mu_bounded = factor * r.mu_lifted <= r.mu_real;
    return r;
}

std::optional<DivisorCitation> real_not_ur_by_divisor(u64 conductor) {
    static constexpr std::pair<u64, unsigned> listed[] = {{2, 5}, {3, 3}, {5, 2}, {7, 2}, {11, 2}, {13, 2}, {17, 2}, {19, 2}};
    for (auto [p, e] : listed) {
        const u64 d = ipow(p, e);
        if (conductor % d == 0) return DivisorCitation{d, p, e, "real-subfield forbidden divisor"};
    }
    for (auto [p, e] : factorize(conductor))
        if (p >= 23) return DivisorCitation{p, p, 1, "real-subfield prime divisor p >= 23"};
    return std::nullopt;
}

Certificate classify_real(u64 conductor, const EnumBudget& budget) {
    make_field(conductor);  // validates N without building the theta basis
    Certificate c;
    c.conductor = conductor;
    c.field = FieldKind::RealSubfield;
    if (conductor == 1 || conductor == 3 || conductor == 4) {
        c.verdict = Verdict::UR;
        c.evidence.push_back(Note{"K_N^+ = Q"});
        return c;
    }
    if (auto d = real_not_ur_by_divisor(conductor)) {
        c.verdict = Verdict::NotUR;
        c.evidence.push_back(*d);
        if (d->exponent == 1 && d->prime < 29)
            c.evidence.push_back(Note{"for a prime conductor p the upper bound Tr(2 - theta) = p gives only (p^2-1)/(24p) <= 1 "
                                      "at p = 23; the divisor is taken from the cited list"});
        return c;
    }
    const Certificate full = classify(conductor, budget);
    if (full.verdict == Verdict::StronglyUR || full.verdict == Verdict::WeaklyUR) {
        c.verdict = Verdict::UR;
        c.evidence.push_back(Note{"inherited: K_" + std::to_string(conductor) + " is " + to_string(full.verdict) +
                                  " and unit reducibility passes to K_N^+"});
        for (const auto& ev : full.evidence) c.evidence.push_back(ev);
        return c;
    }
    c.verdict = Verdict::Unknown;
    c.evidence.push_back(Note{"no forbidden divisor and K_N not known to be unit reducible"});
    return c;
}

RealElement parse_real_element(const RealFieldPtr& field, std::string_view text) {
    std::vector<Rat> c;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        c.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return RealElement(field, std::move(c));
}

}  // namespace unitred
