#include "unitred/json_io.hpp"

#include <algorithm>

namespace unitred {

Json as_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return to_string(v);
}

Json as_json(const Rat& v) { return to_string(v); }

Json exact_json(const Rat& v) { return is_integer(v) ? as_json(v.get_num()) : Json(to_string(v)); }

Json as_json(std::span<const Int> v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(as_json(x));
    return a;
}

Json as_json(std::span<const Rat> v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(as_json(x));
    return a;
}

std::string to_string(FieldKind k) { return k == FieldKind::Cyclotomic ? "cyclotomic" : "real"; }
std::string to_string(Basis b) { return b == Basis::Power ? "power" : "theta"; }

Json as_json(const FieldContext& f) {
    Json j;
    j["conductor"] = f.conductor();
    j["degree"] = f.degree();
    j["cyclo_poly"] = as_json(std::span<const Int>(f.cyclo_poly()));
    j["discriminant_abs"] = as_json(f.discriminant_abs());
    j["galois_units"] = f.galois_units();
    return j;
}

Json as_json(const CycloElement& x) {
    Json j;
    j["conductor"] = x.field().conductor();
    j["basis"] = "power";
    j["coeffs"] = as_json(x.coeffs());
    return j;
}

Json as_json(const RealFieldContext& f) {
    Json j;
    j["conductor"] = f.conductor();
    j["degree"] = f.degree();
    j["min_poly"] = as_json(std::span<const Int>(f.min_poly()));
    return j;
}

Json as_json(const RealElement& x) {
    Json j;
    j["conductor"] = x.field().conductor();
    j["basis"] = "theta";
    j["coeffs"] = as_json(x.coeffs());
    return j;
}

Json as_json(const GramMatrix& g) {
    Json j;
    j["conductor"] = g.conductor;
    j["basis"] = to_string(g.basis);
    j["dim"] = g.dim();
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < g.dim(); ++k) row.push_back(as_json(g.entries(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["scale"] = to_string(g.scale);
    Json matrix = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < g.dim(); ++k) row.push_back(to_string(g.scaled(i, k)));
        matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    return j;
}

Json as_json(const MinimaEntry& e) {
    Json j;
    j["coeffs"] = as_json(std::span<const Int>(e.coeffs));
    j["value"] = as_json(e.value);
    j["norm"] = e.norm ? as_json(*e.norm) : Json(nullptr);
    return j;
}

namespace {

Json entries_json(const std::vector<MinimaEntry>& v) {
    Json a = Json::array();
    for (const auto& e : v) a.push_back(as_json(e));
    return a;
}

}  // namespace

Json as_json(const MinimaReport& r) {
    Json j;
    j["kind"] = "minima";
    j["mu"] = as_json(r.mu);
    j["minima"] = entries_json(r.minima);
    j["exhaustive_bound"] = as_json(r.exhaustive_bound);
    j["nodes_visited"] = r.nodes_visited;
    return j;
}

Json as_json(const UnitMinimumReport& r) {
    Json j;
    j["kind"] = "mu_star";
    j["value"] = as_json(r.mu_star);
    j["mu_star"] = as_json(r.mu_star);
    j["attaining_units"] = entries_json(r.attaining_units);
    j["searched_bound"] = as_json(r.searched_bound);
    j["nodes"] = r.nodes;
    return j;
}

Json as_json(const ReducednessCertificate& r) {
    Json j;
    j["kind"] = "reduced";
    j["value"] = r.reduced;
    j["reduced"] = r.reduced;
    j["trace"] = as_json(r.trace);
    j["mu_star"] = as_json(r.mu_star);
    j["below_trace_count"] = r.below_trace.size();
    j["below_trace"] = entries_json(r.below_trace);
    j["nodes"] = r.nodes;
    return j;
}

Json as_json(const EtaCertificate& e) {
    Json j;
    j["kind"] = "eta";
    j["conductor"] = e.conductor;
    j["value"] = e.value;
    j["prime"] = e.prime;
    j["residue_degree"] = e.residue_degree;
    return j;
}

Json as_json(const CriterionResult& c) {
    Json j;
    j["kind"] = "criterion";
    j["conductor"] = c.conductor;
    j["degree"] = c.degree;
    j["outcome"] = to_string(c.outcome);
    j["lhs"] = exact_json(c.lhs);
    j["rhs"] = exact_json(c.rhs);
    j["hermite_pow"] = as_json(c.hermite_pow);
    j["discriminant_abs"] = as_json(c.discriminant_abs);
    j["eta"] = c.eta.value;
    return j;
}

Json as_json(const BoundaryAnalysis& b) {
    Json j;
    j["kind"] = "boundary";
    j["conductor"] = b.conductor;
    j["x"] = as_json(std::span<const Rat>(b.x));
    j["a"] = as_json(std::span<const Rat>(b.a));
    j["norm_x"] = as_json(b.norm_x);
    j["trace_a"] = as_json(b.trace_a);
    j["has_unit_minimum"] = b.has_unit_minimum;
    j["has_x_minimum"] = b.has_x_minimum;
    j["weakly"] = b.weakly;
    j["minima"] = as_json(b.minima);
    return j;
}

Json as_json(const DivisorCitation& d) {
    Json j;
    j["kind"] = "divisor";
    j["divisor"] = d.divisor;
    j["prime"] = d.prime;
    j["exponent"] = d.exponent;
    j["source"] = d.source;
    return j;
}

Json as_json(const Note& n) {
    Json j;
    j["kind"] = "note";
    j["text"] = n.text;
    return j;
}

Json as_json(const Evidence& e) {
    return std::visit([](const auto& v) { return as_json(v); }, e);
}

Json as_json(const Certificate& c) {
    Json j;
    j["conductor"] = c.conductor;
    j["field"] = to_string(c.field);
    j["verdict"] = to_string(c.verdict);
    j["criterion_lhs"] = c.criterion_lhs ? exact_json(*c.criterion_lhs) : Json(nullptr);
    j["criterion_rhs"] = c.criterion_rhs ? exact_json(*c.criterion_rhs) : Json(nullptr);
    Json ev = Json::array();
    for (const auto& e : c.evidence) ev.push_back(as_json(e));
    j["evidence"] = std::move(ev);
    return j;
}

Json as_json(const DiscrepancyCertificate& c) {
    Json j;
    j["kind"] = "witness";
    j["conductor"] = c.conductor;
    j["prime"] = c.prime;
    j["exponent"] = c.exponent;
    j["witness"] = as_json(std::span<const Rat>(c.witness));
    j["trace_a"] = as_json(c.trace_a);
    j["mu_a"] = as_json(c.mu_a);
    j["mu_star"] = as_json(c.mu_star);
    j["ratio"] = as_json(c.ratio);
    j["closed_form"] = as_json(c.closed_form);
    j["tight"] = c.tight();
    j["closed_form_matches"] = c.closed_form_matches;
    j["expected_mu"] = as_json(c.expected_mu);
    j["expected_minimizer"] = as_json(std::span<const Int>(c.expected_minimizer));
    j["minimizer_attained"] = c.minimizer_attained;
    j["reduced"] = c.reduced;
    j["verified"] = c.verified();
    j["minima"] = entries_json(c.minima);
    j["reduced_evidence_count"] = c.reduced_evidence.size();
    j["reduced_evidence"] = entries_json(c.reduced_evidence);
    j["nodes"] = c.nodes;
    return j;
}

Json as_json(const RealDiscrepancyCertificate& c) {
    Json j;
    j["kind"] = "real_witness";
    j["conductor"] = c.conductor;
    j["prime"] = c.prime;
    j["exponent"] = c.exponent;
    j["reading"] = to_string(c.reading);
    j["witness"] = as_json(std::span<const Rat>(c.witness));
    j["basis"] = "theta";
    j["trace_a"] = as_json(c.trace_a);
    j["mu_star"] = as_json(c.mu_star);
    j["reduced"] = c.reduced;
    j["mu_upper"] = c.mu_upper ? as_json(*c.mu_upper) : Json(nullptr);
    j["mu_upper_path"] = c.mu_upper ? "Tr(a (2 +- theta)^2)" : "none";
    j["mu_a"] = as_json(c.mu_a);
    j["mu_a_path"] = "enumeration";
    j["bound"] = c.bound ? as_json(*c.bound) : Json(nullptr);
    j["ratio"] = as_json(c.ratio);
    j["closed_form_stated"] = as_json(c.closed_form_stated);
    j["closed_form_exact"] = as_json(c.closed_form_exact);
    j["agrees_with_stated"] = c.agrees_with_stated();
    j["verified"] = c.verified();
    j["minima"] = entries_json(c.minima);
    j["reduced_evidence_count"] = c.reduced_evidence.size();
    j["reduced_evidence"] = entries_json(c.reduced_evidence);
    j["nodes"] = c.nodes;
    return j;
}

Json as_json(const MuRelations& r) {
    Json j;
    j["mu_star_real"] = as_json(r.mu_star_real);
    j["mu_star_lifted"] = as_json(r.mu_star_lifted);
    j["mu_real"] = as_json(r.mu_real);
    j["mu_lifted"] = as_json(r.mu_lifted);
    j["mu_star_halves"] = r.mu_star_halves;
    j["mu_bounded"] = r.mu_bounded;
    j["pass"] = r.pass();
    return j;
}

Json as_json(const L75Report& r) {
    Json j;
    j["kind"] = "l75";
    j["p"] = r.p;
    j["box"] = r.box;
    j["permutations"] = r.permutations;
    j["checked"] = r.checked;
    j["violations"] = r.violations;
    j["min_excess"] = as_json(r.min_excess);
    j["min_at_zero"] = r.min_at_zero;
    j["equality_points_nonzero_m"] = r.equality_points;
    j["boundary_margin"] = as_json(r.boundary_margin);
    j["pass"] = r.pass();
    return j;
}

Json as_json(const Eq4Suite& s) {
    Json j;
    j["kind"] = "eq4";
    j["base"] = s.base;
    j["top"] = s.top;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["passed"] = s.passed;
    Json cases = Json::array();
    for (const auto& r : s.results) cases.push_back(Json{{"lhs", as_json(r.lhs)}, {"rhs", as_json(r.rhs)}, {"pass", r.pass}});
    j["cases"] = std::move(cases);
    return j;
}

Json as_json(const KroneckerReport& r) {
    Json j;
    j["kind"] = "kronecker";
    j["base"] = r.base;
    j["top"] = r.top;
    j["checked"] = r.checked;
    j["passed"] = r.passed;
    return j;
}

Json as_json(const DeltaBound& d) {
    Json j;
    j["kind"] = "delta_bound";
    j["conductor"] = d.conductor;
    j["bound"] = as_json(d.bound);
    Json prov;
    prov["divisor"] = d.divisor ? Json(d.divisor) : Json(nullptr);
    prov["prime"] = d.prime ? Json(d.prime) : Json(nullptr);
    prov["exponent"] = d.exponent;
    prov["formula"] = d.formula;
    prov["desk_verifiable"] = d.desk_verifiable;
    prov["status"] = d.divisor == 0 ? "trivial" : d.desk_verifiable ? "closed form, witness checkable by enumeration"
                                                                     : "closed form, not desk-verified";
    j["provenance"] = std::move(prov);
    return j;
}

Json as_json(const BudgetExceeded& e) {
    Json j;
    j["error"] = "budget_exceeded";
    j["message"] = e.what();
    j["nodes"] = e.nodes();
    j["results"] = e.results();
    j["bound"] = e.bound();
    return j;
}

}  // namespace unitred
