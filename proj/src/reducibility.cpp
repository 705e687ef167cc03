#include "unitred/reducibility.hpp"

#include <algorithm>

#include "unitred/errors.hpp"

namespace unitred {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::StronglyUR: return "StronglyUR";
        case Verdict::WeaklyUR: return "WeaklyUR";
        case Verdict::UR: return "UR";
        case Verdict::NotUR: return "NotUR";
        case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string to_string(CriterionOutcome c) {
    switch (c) {
        case CriterionOutcome::Strict: return "Strict";
        case CriterionOutcome::Equal: return "Equal";
        case CriterionOutcome::Fail: return "Fail";
    }
    return "Fail";
}

Rat hermite_pow(unsigned n) {
    switch (n) {
        case 1: return Rat(1);
        case 2: return Rat(4, 3);
        case 3: return Rat(2);
        case 4: return Rat(4);
        case 5: return Rat(8);
        case 6: return Rat(64, 3);
        case 7: return Rat(64);
        case 8: return Rat(256);
        default: throw InvalidInput("hermite_pow: exact Hermite constant unknown for degree " + std::to_string(n));
    }
}

CriterionResult strong_criterion(u64 conductor) {
    const FieldPtr field = make_field(conductor);
    const unsigned n = static_cast<unsigned>(field->degree());
    if (n > 8) throw InvalidInput("strong_criterion: degree " + std::to_string(n) + " > 8 is unsupported");
    CriterionResult r;
    r.conductor = conductor;
    r.degree = n;
    r.hermite_pow = hermite_pow(n);
    r.discriminant_abs = field->discriminant_abs();
    r.eta = eta(conductor);
    r.lhs = r.hermite_pow * r.discriminant_abs;
    r.rhs = Rat(pow(Int(n), n) * Int(static_cast<unsigned long>(r.eta.value)) * Int(static_cast<unsigned long>(r.eta.value)));
    r.outcome = r.lhs < r.rhs ? CriterionOutcome::Strict : r.lhs == r.rhs ? CriterionOutcome::Equal : CriterionOutcome::Fail;
    return r;
}

BoundaryAnalysis boundary_analysis(u64 conductor, const EnumBudget& budget) {
    const FieldPtr field = make_field(conductor);
    CycloElement x = CycloElement::from_rational(field, 1) + CycloElement::zeta_power(field, 1);
    if (conductor == 9)
        x += CycloElement::zeta_power(field, 3);
    else if (conductor != 8)
        throw InvalidInput("boundary_analysis: only conductors 8 and 9 sit on the criterion boundary");

    const CycloElement a = inverse(x * conj(x));
    BoundaryAnalysis b;
    b.conductor = conductor;
    b.x.assign(x.coeffs().begin(), x.coeffs().end());
    b.a.assign(a.coeffs().begin(), a.coeffs().end());
    b.norm_x = norm(x);
    b.trace_a = trace(a);
    b.minima = shortest(trace_lattice(a), budget);

    std::vector<Int> x_int;
    for (const auto& c : x.coeffs()) x_int.push_back(c.get_num());
    make_sign_canonical(x_int);
    for (const auto& m : b.minima.minima) {
        if (has_unit_norm(m)) b.has_unit_minimum = true;
        if (m.coeffs == x_int) b.has_x_minimum = true;
    }

    const u64 eta_value = eta(conductor).value;
    if (abs(b.norm_x) != Rat(static_cast<unsigned long>(eta_value)))
        throw VerificationFailure("boundary_analysis: |Nm(x)| differs from eta for conductor " + std::to_string(conductor));
    if (b.minima.mu != b.trace_a)
        throw VerificationFailure("boundary_analysis: mu(a) != Tr(a) for conductor " + std::to_string(conductor));
    if (!b.has_x_minimum)
        throw VerificationFailure("boundary_analysis: x is not a minimal vector for conductor " + std::to_string(conductor));
    b.weakly = b.has_unit_minimum && b.has_x_minimum;
    return b;
}

std::optional<DivisorCitation> not_ur_by_divisor(u64 conductor) {
    static constexpr std::pair<u64, unsigned> listed[] = {{2, 4}, {3, 3}, {5, 2}, {7, 2}, {11, 2}};
    for (auto [p, e] : listed) {
        const u64 d = ipow(p, e);
        if (conductor % d == 0) return DivisorCitation{d, p, e, "prime-power divisor with discrepancy bound > 1"};
    }
    for (auto [p, e] : factorize(conductor))
        if (p >= 13) return DivisorCitation{p, p, 1, "prime divisor p >= 13"};
    return std::nullopt;
}

Certificate classify(u64 conductor, const EnumBudget& budget) {
    const FieldPtr field = make_field(conductor);
    Certificate c;
    c.conductor = conductor;
    c.field = FieldKind::Cyclotomic;

    if (conductor == 1) {
        c.verdict = Verdict::StronglyUR;
        c.evidence.push_back(Note{"K_1 = Q: the units are +-1 and Tr(a x^2) is least at x = +-1"});
        return c;
    }
    if (auto d = not_ur_by_divisor(conductor)) {
        c.verdict = Verdict::NotUR;
        c.evidence.push_back(*d);
        return c;
    }
    if (field->degree() > 8) {
        c.verdict = Verdict::Unknown;
        c.evidence.push_back(Note{"degree " + std::to_string(field->degree()) +
                                  " > 8: no exact Hermite constant, criterion not applicable"});
        return c;
    }

    const CriterionResult crit = strong_criterion(conductor);
    c.criterion_lhs = crit.lhs;
    c.criterion_rhs = crit.rhs;
    c.evidence.push_back(crit);
    if (field->degree() <= 2)
        c.evidence.push_back(Note{"degree <= 2: the unit group is finite, unit reducibility is immediate"});

    switch (crit.outcome) {
        case CriterionOutcome::Strict: c.verdict = Verdict::StronglyUR; break;
        case CriterionOutcome::Fail: c.verdict = Verdict::Unknown; break;
        case CriterionOutcome::Equal: {
            if (conductor != 8 && conductor != 9) {
                c.verdict = Verdict::Unknown;
                c.evidence.push_back(Note{"criterion equality without a known boundary form"});
                break;
            }
            BoundaryAnalysis b = boundary_analysis(conductor, budget);
            const bool all_units = std::all_of(b.minima.minima.begin(), b.minima.minima.end(), has_unit_norm);
            c.verdict = b.weakly ? Verdict::WeaklyUR : all_units ? Verdict::StronglyUR : Verdict::Unknown;
            c.evidence.push_back(std::move(b));
            c.evidence.push_back(Note{"equality case of the criterion needs a x x* rational with |Nm(x)| = eta; "
                                      "that reduction step is cited, the boundary form itself is enumerated"});
            break;
        }
    }
    return c;
}

}  // namespace unitred
