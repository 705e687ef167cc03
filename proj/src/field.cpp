#include "unitred/field.hpp"

#include <numeric>
#include <sstream>

#include "unitred/errors.hpp"
#include "unitred/linalg.hpp"

namespace unitred {

Int conductor_discriminant(u64 conductor) {
    const u64 phi = euler_phi(conductor);
    Int num = pow(Int(static_cast<unsigned long>(conductor)), phi);
    Int den = 1;
    for (auto [p, e] : factorize(conductor)) den *= pow(Int(static_cast<unsigned long>(p)), phi / (p - 1));
    return num / den;
}

std::shared_ptr<const FieldContext> FieldContext::make(u64 conductor) {
    if (conductor == 0) throw InvalidInput("conductor must be positive");
    if (conductor % 4 == 2)
        throw InvalidInput("conductor " + std::to_string(conductor) +
                           " is not canonical (N = 2 mod 4 gives the same field as N/2); use " +
                           std::to_string(conductor / 2));

    std::shared_ptr<FieldContext> ctx(new FieldContext());
    ctx->conductor_ = conductor;
    ctx->cyclo_poly_ = cyclotomic_polynomial(conductor);
    ctx->degree_ = ctx->cyclo_poly_.size() - 1;
    ctx->discriminant_abs_ = conductor_discriminant(conductor);

    for (u64 k = 1; k <= conductor; ++k)
        if (std::gcd(k, conductor) == 1) ctx->galois_units_.push_back(k % conductor == 0 ? 1 : k);

    // x^k mod Phi_N by repeated multiplication by x.
    const std::size_t n = ctx->degree_;
    const IntPoly& phi = ctx->cyclo_poly_;
    ctx->monomials_.reserve(conductor);
    std::vector<Int> cur(n);
    cur[0] = 1;
    for (u64 k = 0; k < conductor; ++k) {
        ctx->monomials_.push_back(cur);
        Int top = cur[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < n; ++i) cur[i] -= top * phi[i];
    }

    const u64 phi_n = euler_phi(conductor);
    ctx->monomial_traces_.reserve(conductor);
    for (u64 k = 0; k < conductor; ++k) {
        const u64 g = std::gcd(k, conductor);
        const u64 order = conductor / g;
        ctx->monomial_traces_.push_back(Int(static_cast<long>(phi_n / euler_phi(order))) * moebius(order));
    }
    return ctx;
}

u64 FieldContext::index(long long k) const {
    const long long n = static_cast<long long>(conductor_);
    return static_cast<u64>(((k % n) + n) % n);
}

std::span<const Int> FieldContext::monomial(long long k) const { return monomials_[index(k)]; }

const Int& FieldContext::monomial_trace(long long k) const { return monomial_traces_[index(k)]; }

// --- CycloElement ---------------------------------------------------------

CycloElement::CycloElement(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw InvalidInput("element without a field");
    if (coeffs_.size() != field_->degree())
        throw InvalidInput("expected " + std::to_string(field_->degree()) + " coordinates for conductor " +
                           std::to_string(field_->conductor()) + ", got " + std::to_string(coeffs_.size()));
}

CycloElement CycloElement::zero(FieldPtr field) {
    const std::size_t n = field->degree();
    return CycloElement(std::move(field), std::vector<Rat>(n));
}

CycloElement CycloElement::from_rational(FieldPtr field, const Rat& value) {
    CycloElement e = zero(std::move(field));
    e.coeffs_[0] = value;
    return e;
}

CycloElement CycloElement::zeta_power(FieldPtr field, long long k) {
    auto m = field->monomial(k);
    std::vector<Rat> c(m.begin(), m.end());
    return CycloElement(std::move(field), std::move(c));
}

CycloElement CycloElement::from_integers(FieldPtr field, std::span<const Int> coeffs) {
    return CycloElement(std::move(field), to_rationals(coeffs));
}

bool CycloElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_integral() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void CycloElement::require_same_field(const CycloElement& rhs, const char* op) const {
    if (field_->conductor() != rhs.field_->conductor())
        throw InvalidInput(std::string(op) + ": conductors differ (" + std::to_string(field_->conductor()) + " vs " +
                           std::to_string(rhs.field_->conductor()) + ")");
}

CycloElement CycloElement::operator-() const {
    CycloElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
    require_same_field(rhs, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
    require_same_field(rhs, "sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs) {
    require_same_field(rhs, "mul");
    const std::size_t n = coeffs_.size();
    std::vector<Rat> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    for (std::size_t i = 0; i < n; ++i) coeffs_[i] = prod[i];
    for (std::size_t k = n; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        auto m = field_->monomial(static_cast<long long>(k));
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) coeffs_[i] += prod[k] * m[i];
    }
    return *this;
}

CycloElement& CycloElement::operator*=(const Rat& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.field_->conductor() == b.field_->conductor() && a.coeffs_ == b.coeffs_;
}

// --- Galois action, trace, norm --------------------------------------------

CycloElement galois_apply(const CycloElement& a, u64 k) {
    const FieldContext& f = a.field();
    if (std::gcd(k, f.conductor()) != 1)
        throw InvalidInput("galois_apply: gcd(" + std::to_string(k) + ", " + std::to_string(f.conductor()) + ") != 1");
    std::vector<Rat> out(f.degree());
    const auto c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        auto m = f.monomial(static_cast<long long>((i * k) % f.conductor()));
        for (std::size_t j = 0; j < out.size(); ++j)
            if (m[j] != 0) out[j] += c[i] * m[j];
    }
    return CycloElement(a.field_ptr(), std::move(out));
}

CycloElement conj(const CycloElement& a) {
    const u64 n = a.field().conductor();
    if (n <= 2) return a;
    return galois_apply(a, n - 1);
}

Rat trace(const CycloElement& a) {
    Rat t = 0;
    const auto c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) t += c[i] * a.field().monomial_trace(static_cast<long long>(i));
    return t;
}

Rat norm(const CycloElement& a) {
    RatPoly poly(a.coeffs().begin(), a.coeffs().end());
    trim(poly);
    if (poly.empty()) return 0;
    return resultant(to_rat_poly(a.field().cyclo_poly()), poly);
}

CycloElement inverse(const CycloElement& a) {
    if (a.is_zero()) throw InvalidInput("inverse: zero element");
    RatPoly poly(a.coeffs().begin(), a.coeffs().end());
    trim(poly);
    const RatPoly phi = to_rat_poly(a.field().cyclo_poly());
    auto [g, s] = half_xgcd(poly, phi);
    // Phi_N is irreducible, so any non-zero a of lower degree is coprime to it.
    if (g.size() != 1) throw std::logic_error("inverse: coordinate polynomial shares a factor with Phi_N");
    s = divmod(s, phi).second;
    std::vector<Rat> out(a.field().degree());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i];
    return CycloElement(a.field_ptr(), std::move(out));
}

// --- Inclusions between cyclotomic fields ---------------------------------

namespace {

u64 require_divides(const FieldContext& base, const FieldContext& top, const char* op) {
    if (top.conductor() % base.conductor() != 0)
        throw InvalidInput(std::string(op) + ": " + std::to_string(base.conductor()) + " does not divide " +
                           std::to_string(top.conductor()));
    return top.conductor() / base.conductor();
}

}  // namespace

CycloElement lift(const CycloElement& a, const FieldPtr& target) {
    const u64 step = require_divides(a.field(), *target, "lift");
    std::vector<Rat> out(target->degree());
    const auto c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        auto m = target->monomial(static_cast<long long>(i * step));
        for (std::size_t j = 0; j < out.size(); ++j)
            if (m[j] != 0) out[j] += c[i] * m[j];
    }
    return CycloElement(target, std::move(out));
}

std::vector<CycloElement> decompose(const CycloElement& y, const FieldPtr& base) {
    const FieldContext& top = y.field();
    const u64 step = require_divides(*base, top, "decompose");
    const std::size_t nb = base->degree(), nt = top.degree();
    const std::size_t parts = nt / nb;

    // Column (i, j) holds the coordinates of lift(zeta_N^j) * zeta_M^i = zeta_M^{j*step + i}.
    RatMatrix a(nt, nt);
    for (std::size_t i = 0; i < parts; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            auto m = top.monomial(static_cast<long long>(j * step + i));
            for (std::size_t r = 0; r < nt; ++r) a(r, i * nb + j) = m[r];
        }
    auto sol = solve(std::move(a), std::vector<Rat>(y.coeffs().begin(), y.coeffs().end()));
    if (!sol) throw std::logic_error("decompose: powers of zeta_M do not form a relative basis");

    std::vector<CycloElement> out;
    out.reserve(parts);
    for (std::size_t i = 0; i < parts; ++i)
        out.emplace_back(base, std::vector<Rat>(sol->begin() + static_cast<long>(i * nb),
                                                sol->begin() + static_cast<long>((i + 1) * nb)));
    return out;
}

CycloElement recompose(std::span<const CycloElement> parts, const FieldPtr& top) {
    CycloElement acc = CycloElement::zero(top);
    for (std::size_t i = 0; i < parts.size(); ++i)
        acc += lift(parts[i], top) * CycloElement::zeta_power(top, static_cast<long long>(i));
    return acc;
}

CycloElement descend(const CycloElement& y, const FieldPtr& base) {
    auto parts = decompose(y, base);
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (!parts[i].is_zero())
            throw InvalidInput("descend: element does not lie in the subfield of conductor " +
                               std::to_string(base->conductor()));
    return parts.front();
}

CycloElement rel_trace(const CycloElement& y, const FieldPtr& base) {
    const FieldContext& top = y.field();
    require_divides(*base, top, "rel_trace");
    const u64 n = base->conductor(), m = top.conductor();
    CycloElement acc = CycloElement::zero(y.field_ptr());
    for (u64 t : top.galois_units())
        if (t % n == 1 % n) acc += galois_apply(y, t % m == 0 ? 1 : t);
    return descend(acc, base);
}

// --- text format ------------------------------------------------------------

CycloElement parse_element(const FieldPtr& field, std::string_view text) {
    std::vector<Rat> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        coeffs.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return CycloElement(field, std::move(coeffs));
}

std::string format_coeffs(std::span<const Rat> coeffs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << to_string(coeffs[i]);
    return os.str();
}

}  // namespace unitred
