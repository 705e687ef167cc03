#ifndef UNITRED_REDUCIBILITY_HPP
#define UNITRED_REDUCIBILITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unitred/minima.hpp"
#include "unitred/unit_search.hpp"

namespace unitred {

enum class Verdict { StronglyUR, WeaklyUR, UR, NotUR, Unknown };
std::string to_string(Verdict v);

/// gamma_n^n for 1 <= n <= 8; the exact Hermite constant is unknown beyond.
Rat hermite_pow(unsigned n);

enum class CriterionOutcome { Strict, Equal, Fail };
std::string to_string(CriterionOutcome c);

/// gamma_n^n |Delta| against n^n eta^2: the n-th power of
/// gamma_n |Delta|^{1/n} < n eta^{2/n}, so no radical is ever evaluated.
struct CriterionResult {
    u64 conductor = 0;
    unsigned degree = 0;
    CriterionOutcome outcome = CriterionOutcome::Fail;
    Rat lhs;
    Rat rhs;
    Rat hermite_pow;
    Int discriminant_abs;
    EtaCertificate eta;
};

CriterionResult strong_criterion(u64 conductor);

/// The criterion-tight form a = 1/(x x*) for the norm-eta element x
/// (1 + zeta_8 for N = 8, 1 + zeta_9 + zeta_9^3 for N = 9).
struct BoundaryAnalysis {
    u64 conductor = 0;
    std::vector<Rat> x;
    std::vector<Rat> a;
    Rat norm_x;
    Rat trace_a;
    MinimaReport minima;
    bool has_unit_minimum = false;
    bool has_x_minimum = false;
    bool weakly = false;  // a non-unit minimal vector next to unit minima
};

BoundaryAnalysis boundary_analysis(u64 conductor, const EnumBudget& budget = {});

struct DivisorCitation {
    u64 divisor = 0;
    u64 prime = 0;
    unsigned exponent = 0;
    std::string source;
};

/// First of 2^4, 3^3, 5^2, 7^2, 11^2, then the least prime p >= 13, dividing N.
std::optional<DivisorCitation> not_ur_by_divisor(u64 conductor);

struct Note {
    std::string text;
};

using Evidence = std::variant<CriterionResult, BoundaryAnalysis, DivisorCitation, Note>;

enum class FieldKind { Cyclotomic, RealSubfield };

struct Certificate {
    u64 conductor = 0;
    FieldKind field = FieldKind::Cyclotomic;
    Verdict verdict = Verdict::Unknown;
    std::optional<Rat> criterion_lhs;
    std::optional<Rat> criterion_rhs;
    std::vector<Evidence> evidence;
};

Certificate classify(u64 conductor, const EnumBudget& budget = {});

}  // namespace unitred

#endif
