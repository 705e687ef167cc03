#ifndef UNITRED_JSON_IO_HPP
#define UNITRED_JSON_IO_HPP

#include <json.hpp>

#include "unitred/discrepancy.hpp"
#include "unitred/errors.hpp"
#include "unitred/real_subfield.hpp"
#include "unitred/reducibility.hpp"
#include "unitred/unit_search.hpp"

namespace unitred {

using Json = nlohmann::ordered_json;

// Exact values travel as strings ("p/q"); integers small enough for int64 as numbers.
Json as_json(const Int& v);
Json as_json(const Rat& v);
/// Integral values as numbers, anything else as "p/q".
Json exact_json(const Rat& v);
Json as_json(std::span<const Int> v);
Json as_json(std::span<const Rat> v);

Json as_json(const FieldContext& f);
Json as_json(const CycloElement& x);
Json as_json(const RealFieldContext& f);
Json as_json(const RealElement& x);
Json as_json(const GramMatrix& g);
Json as_json(const MinimaEntry& e);
Json as_json(const MinimaReport& r);
Json as_json(const UnitMinimumReport& r);
Json as_json(const ReducednessCertificate& r);
Json as_json(const EtaCertificate& e);
Json as_json(const CriterionResult& c);
Json as_json(const BoundaryAnalysis& b);
Json as_json(const DivisorCitation& d);
Json as_json(const Note& n);
Json as_json(const Evidence& e);
Json as_json(const Certificate& c);
Json as_json(const DiscrepancyCertificate& c);
Json as_json(const RealDiscrepancyCertificate& c);
Json as_json(const MuRelations& r);
Json as_json(const L75Report& r);
Json as_json(const Eq4Suite& s);
Json as_json(const KroneckerReport& r);
Json as_json(const DeltaBound& d);
Json as_json(const BudgetExceeded& e);

std::string to_string(FieldKind k);
std::string to_string(Basis b);

}  // namespace unitred

#endif
