// Command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 invalid input, 3 enumeration budget exceeded.

#include <omp.h>

#include <CLI11.hpp>
#include <charconv>
#include <iostream>
#include <sstream>

#include "unitred/json_io.hpp"

using namespace unitred;

namespace {

struct Options {
    bool json = false;
    std::uint64_t budget = EnumBudget{}.max_nodes;
    std::uint64_t seed = 20240607;
    int threads = 0;
};

struct Outcome {
    Json payload;
    std::string text;
    int status = 0;
};

int emit(const Options& opt, const std::string& command, std::vector<u64> conductors, const Outcome& out) {
    if (opt.json) {
        Json j;
        j["command"] = command;
        j["conductors"] = conductors;
        j["status"] = out.status;
        j["payload"] = out.payload;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.text;
    }
    return out.status;
}

EnumBudget budget_of(const Options& opt) {
    EnumBudget b;
    b.max_nodes = opt.budget;
    return b;
}

std::string join(std::span<const Int> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s;
}

CycloElement totally_positive_element(u64 n, const std::string& text) {
    const CycloElement a = parse_element(make_field(n), text);
    if (!is_totally_positive(a)) throw InvalidInput("element is not totally positive");
    return a;
}

Outcome cmd_field(u64 n) {
    const FieldPtr f = make_field(n);
    std::ostringstream os;
    os << "conductor " << n << "\ndegree " << f->degree() << "\ncyclo_poly " << join(f->cyclo_poly())
       << "\ndiscriminant_abs " << to_string(f->discriminant_abs()) << "\n";
    return {as_json(*f), os.str(), 0};
}

Outcome cmd_table1(const Options& opt) {
    Json rows = Json::array();
    std::ostringstream os;
    os << "N\tn\t|Delta|\teta\tlhs\trhs\toutcome\tverdict\n";
    for (u64 n : {5, 7, 8, 9, 12, 15}) {
        const CriterionResult c = strong_criterion(n);
        const Certificate cert = classify(n, budget_of(opt));
        Json r;
        r["conductor"] = n;
        r["degree"] = c.degree;
        r["discriminant_abs"] = as_json(c.discriminant_abs);
        r["eta"] = c.eta.value;
        r["hermite_pow"] = as_json(c.hermite_pow);
        r["criterion_lhs"] = exact_json(c.lhs);
        r["criterion_rhs"] = exact_json(c.rhs);
        r["outcome"] = to_string(c.outcome);
        r["verdict"] = to_string(cert.verdict);
        rows.push_back(std::move(r));
        os << n << "\t" << c.degree << "\t" << to_string(c.discriminant_abs) << "\t" << c.eta.value << "\t" << to_string(c.lhs)
           << "\t" << to_string(c.rhs) << "\t" << to_string(c.outcome) << "\t" << to_string(cert.verdict) << "\n";
    }
    return {Json{{"rows", rows}}, os.str(), 0};
}

std::string certificate_text(const Certificate& c) {
    std::ostringstream os;
    os << (c.field == FieldKind::RealSubfield ? "K+_" : "K_") << c.conductor << ": " << to_string(c.verdict) << "\n";
    if (c.criterion_lhs) os << "  criterion " << to_string(*c.criterion_lhs) << " vs " << to_string(*c.criterion_rhs) << "\n";
    for (const auto& e : c.evidence) {
        const Json j = as_json(e);
        os << "  " << j["kind"].get<std::string>();
        if (j.contains("outcome")) os << " " << j["outcome"].get<std::string>();
        if (j.contains("divisor")) os << " " << j["divisor"];
        if (j.contains("text")) os << ": " << j["text"].get<std::string>();
        if (j.contains("weakly")) os << " mu=" << j["minima"]["mu"].get<std::string>() << " weakly=" << j["weakly"];
        os << "\n";
    }
    return os.str();
}

Outcome cmd_classify(u64 n, const Options& opt) {
    const Certificate c = classify(n, budget_of(opt));
    return {as_json(c), certificate_text(c), 0};
}

Outcome cmd_real_classify(u64 n, const Options& opt) {
    const Certificate c = classify_real(n, budget_of(opt));
    return {as_json(c), certificate_text(c), 0};
}

std::string entries_text(const std::vector<MinimaEntry>& v) {
    std::ostringstream os;
    for (const auto& e : v)
        os << "  [" << join(e.coeffs) << "] value " << to_string(e.value) << " norm " << (e.norm ? to_string(*e.norm) : "-") << "\n";
    return os.str();
}

Outcome cmd_shortest(u64 n, const std::string& elem, const Options& opt) {
    const MinimaReport r = shortest(trace_lattice(totally_positive_element(n, elem)), budget_of(opt));
    return {as_json(r), "mu " + to_string(r.mu) + "\n" + entries_text(r.minima), 0};
}

Outcome cmd_mustar(u64 n, const std::string& elem, const Options& opt) {
    const UnitMinimumReport r = mu_star(totally_positive_element(n, elem), budget_of(opt));
    return {as_json(r), "mu* " + to_string(r.mu_star) + "\n" + entries_text(r.attaining_units), 0};
}

Outcome cmd_reduced(u64 n, const std::string& elem, const Options& opt) {
    const ReducednessCertificate r = is_reduced(totally_positive_element(n, elem), budget_of(opt));
    std::ostringstream os;
    os << (r.reduced ? "reduced" : "not reduced") << "\ntrace " << to_string(r.trace) << "\nmu* " << to_string(r.mu_star)
       << "\nbelow trace " << r.below_trace.size() << "\n";
    return {as_json(r), os.str(), 0};
}

Outcome cmd_eta(u64 n) {
    const EtaCertificate e = eta(n);
    return {as_json(e), std::to_string(e.value) + "\n", 0};
}

Outcome cmd_witness(u64 n, bool verify, const Options& opt) {
    auto [p, k] = prime_power(n);
    if (p == 0) throw InvalidInput("witness: conductor must be a prime power");
    if (!verify) {
        const CycloElement a = p == 2 ? witness_2power(k) : witness_ppower(p, k);
        Json j = as_json(a);
        j["trace"] = as_json(trace(a));
        j["closed_form"] = as_json(witness_closed_form(n));
        return {j, "a = " + format_coeffs(a.coeffs()) + "\ntrace " + to_string(trace(a)) + "\n", 0};
    }
    const DiscrepancyCertificate c = verify_witness(n, budget_of(opt));
    std::ostringstream os;
    os << "trace_a " << to_string(c.trace_a) << "\nmu_a " << to_string(c.mu_a) << "\nmu_star " << to_string(c.mu_star)
       << "\nratio " << to_string(c.ratio) << "\nclosed_form " << to_string(c.closed_form) << "\nreduced " << c.reduced
       << "\nbelow trace " << c.reduced_evidence.size() << " vectors, none a unit: " << c.reduced << "\nverified " << c.verified() << "\n";
    return {as_json(c), os.str(), c.tight() && !c.verified() ? 1 : 0};
}

Outcome cmd_real_witness(u64 n, bool verify, bool literal, const Options& opt) {
    const RealWitnessReading reading = literal ? RealWitnessReading::Literal : RealWitnessReading::Inverse;
    auto [p, k] = prime_power(n);
    if (p == 0) throw InvalidInput("real witness: conductor must be a prime power");
    if (!verify) {
        const RealElement a = p == 2 ? real_witness_2power(k) : real_witness_ppower(p, k, reading);
        Json j = as_json(a);
        j["trace"] = as_json(real_trace(a));
        j["reading"] = to_string(reading);
        return {j, "a = " + format_coeffs(a.coeffs()) + " (theta basis)\ntrace " + to_string(real_trace(a)) + "\n", 0};
    }
    const RealDiscrepancyCertificate c = verify_real_witness(n, budget_of(opt), reading);
    std::ostringstream os;
    os << "trace_a " << to_string(c.trace_a) << "\nmu_star " << to_string(c.mu_star) << "\nmu_a " << to_string(c.mu_a);
    if (c.mu_upper) os << "\nmu_upper " << to_string(*c.mu_upper) << "\nbound " << to_string(*c.bound);
    os << "\nratio " << to_string(c.ratio) << "\nclosed_form_stated " << to_string(c.closed_form_stated)
       << "\nclosed_form_exact " << to_string(c.closed_form_exact) << "\nreduced " << c.reduced << "\nverified " << c.verified() << "\n";
    const bool expected = reading == RealWitnessReading::Inverse && c.closed_form_exact >= 1;
    return {as_json(c), os.str(), expected && !c.verified() ? 1 : 0};
}

Outcome cmd_delta(u64 n) {
    const DeltaBound d = delta_lower_bound(n);
    return {as_json(d), to_string(d.bound) + "\n", 0};
}

Outcome cmd_eq4(u64 n, u64 m, unsigned trials, const Options& opt) {
    const Eq4Suite s = eq4_random_suite(n, m, trials, opt.seed);
    Json j = as_json(s);
    bool ok = s.passed == s.trials;
    std::ostringstream os;
    os << "eq4 " << n << " -> " << m << ": " << s.passed << "/" << s.trials << " passed (seed " << opt.seed << ")\n";
    if (m != n) {
        const KroneckerReport k = kronecker_check(n, m);
        j["kronecker"] = as_json(k);
        ok = ok && k.passed == k.checked;
        os << "relative trace of zeta_M^k: " << k.passed << "/" << k.checked << " passed\n";
    }
    return {j, os.str(), ok ? 0 : 1};
}

Outcome cmd_l75(u64 p, long box) {
    const L75Report r = l75_scan(p, box);
    std::ostringstream os;
    os << "p " << p << " box " << box << ": " << (r.pass() ? "pass" : "FAIL") << "\nchecked " << r.checked << " violations "
       << r.violations << "\nminimum excess " << to_string(r.min_excess) << " (attained at m = 0: " << r.min_at_zero << ")"
       << "\nequality at m != 0: " << r.equality_points << "\nboundary margin " << to_string(r.boundary_margin) << "\n";
    return {as_json(r), os.str(), r.pass() ? 0 : 1};
}

std::pair<u64, u64> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw InvalidInput("sweep: expected N1..N2");
    auto num = [&](std::string_view t) {
        u64 v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size()) throw InvalidInput("sweep: bad bound '" + std::string(t) + "'");
        return v;
    };
    const u64 a = num(std::string_view(s).substr(0, dots));
    const u64 b = num(std::string_view(s).substr(dots + 2));
    if (a == 0 || b < a) throw InvalidInput("sweep: need 1 <= N1 <= N2");
    if (b - a > 100000) throw InvalidInput("sweep: range too large");
    return {a, b};
}

// Always JSON lines, one conductor per line, in conductor order.
int cmd_sweep(const std::string& range, const Options& opt) {
    auto [lo, hi] = parse_range(range);
    std::vector<u64> ns;
    for (u64 n = lo; n <= hi; ++n)
        if (is_canonical_conductor(n)) ns.push_back(n);
    std::vector<std::string> lines(ns.size());
    const long count = static_cast<long>(ns.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        const u64 n = ns[static_cast<std::size_t>(i)];
        Json j;
        j["conductor"] = n;
        try {
            const Certificate c = classify(n, budget_of(opt));
            j["verdict"] = to_string(c.verdict);
            j["certificate"] = as_json(c);
        } catch (const BudgetExceeded& e) {
            j["verdict"] = "Unknown";
            j["error"] = as_json(e);
        }
        lines[static_cast<std::size_t>(i)] = j.dump();
    }
    for (const auto& l : lines) std::cout << l << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit reducibility of cyclotomic fields: certificates, minima and discrepancy bounds"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options opt;
    app.add_flag("--json", opt.json, "JSON output");
    app.add_option("--budget", opt.budget, "enumeration node budget")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--threads", opt.threads, "OpenMP threads (0 = runtime default)");

    u64 n = 0, m = 0;
    std::string elem, range;
    bool verify = false, literal = false;
    unsigned trials = 100;
    long box = -1;

    auto* field = app.add_subcommand("field", "field summary");
    field->add_option("N", n)->required();
    auto* table1 = app.add_subcommand("table1", "criterion table for the degree <= 8 unit reducible conductors");
    auto* cls = app.add_subcommand("classify", "classify K_N");
    cls->add_option("N", n)->required();
    auto* shortest_cmd = app.add_subcommand("shortest", "mu(a) and minimal vectors");
    auto* mustar_cmd = app.add_subcommand("mustar", "mu*(a) and attaining units");
    auto* reduced_cmd = app.add_subcommand("reduced", "reducedness certificate");
    for (auto* sc : {shortest_cmd, mustar_cmd, reduced_cmd}) {
        sc->add_option("N", n)->required();
        sc->add_option("-a", elem, "element c0,c1,... in the power basis")->required();
    }
    auto* eta_cmd = app.add_subcommand("eta", "least non-unit norm");
    eta_cmd->add_option("N", n)->required();
    auto* witness = app.add_subcommand("witness", "discrepancy witness for a prime-power conductor");
    witness->add_option("N", n)->required();
    witness->add_flag("--verify", verify, "certify by exhaustive enumeration");
    auto* delta = app.add_subcommand("delta-bound", "lower bound on the reduction discrepancy");
    delta->add_option("N", n)->required();
    auto* eq4 = app.add_subcommand("check-eq4", "randomized lifting-identity checks");
    eq4->add_option("N", n)->required();
    eq4->add_option("M", m)->required();
    eq4->add_option("--trials", trials)->capture_default_str();
    auto* l75 = app.add_subcommand("l75", "scan the permutation inequality for the form Q");
    l75->add_option("p", n)->required();
    l75->add_option("--box", box, "box radius (default p)");
    auto* sweep = app.add_subcommand("sweep", "classify a range N1..N2 as JSON lines");
    sweep->add_option("range", range)->required();
    auto* real = app.add_subcommand("real", "maximal real subfield");
    real->require_subcommand(1);
    auto* real_cls = real->add_subcommand("classify", "classify K_N^+");
    real_cls->add_option("N", n)->required();
    auto* real_wit = real->add_subcommand("witness", "real-subfield witness");
    real_wit->add_option("N", n)->required();
    real_wit->add_flag("--verify", verify, "certify by exhaustive enumeration");
    real_wit->add_flag("--literal", literal, "use a = 2 - theta instead of its inverse");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
    std::vector<u64> conductors{n};
    if (*eq4) conductors = {n, m};
    if (*table1) conductors = {5, 7, 8, 9, 12, 15};
    if (*sweep) conductors = {};
    auto fail = [&](int code, const std::string& kind, const std::string& message, Json payload) {
        std::cerr << kind << ": " << message << "\n";
        if (opt.json) {
            Outcome out;
            out.payload = std::move(payload);
            out.status = code;
            emit(opt, command, conductors, out);
        }
        return code;
    };
    auto error_json = [](const std::string& kind, const char* message) {
        Json j;
        j["error"] = kind;
        j["message"] = message;
        return j;
    };
    try {
        if (*field) return emit(opt, command, conductors, cmd_field(n));
        if (*table1) return emit(opt, command, conductors, cmd_table1(opt));
        if (*cls) return emit(opt, command, conductors, cmd_classify(n, opt));
        if (*shortest_cmd) return emit(opt, command, conductors, cmd_shortest(n, elem, opt));
        if (*mustar_cmd) return emit(opt, command, conductors, cmd_mustar(n, elem, opt));
        if (*reduced_cmd) return emit(opt, command, conductors, cmd_reduced(n, elem, opt));
        if (*eta_cmd) return emit(opt, command, conductors, cmd_eta(n));
        if (*witness) return emit(opt, command, conductors, cmd_witness(n, verify, opt));
        if (*delta) return emit(opt, command, conductors, cmd_delta(n));
        if (*eq4) return emit(opt, command, conductors, cmd_eq4(n, m, trials, opt));
        if (*l75) return emit(opt, command, conductors, cmd_l75(n, box < 0 ? static_cast<long>(n) : box));
        if (*sweep) return cmd_sweep(range, opt);
        if (*real_cls) return emit(opt, command, conductors, cmd_real_classify(n, opt));
        if (*real_wit) return emit(opt, command, conductors, cmd_real_witness(n, verify, literal, opt));
    } catch (const InvalidInput& e) {
        return fail(2, "invalid input", e.what(), error_json("invalid_input", e.what()));
    } catch (const SingularForm& e) {
        return fail(2, "invalid input", e.what(), error_json("singular_form", e.what()));
    } catch (const BudgetExceeded& e) {
        return fail(3, "budget exceeded", e.what(), as_json(e));
    } catch (const VerificationFailure& e) {
        return fail(1, "verification failed", e.what(), error_json("verification_failure", e.what()));
    }
    return 2;
}
