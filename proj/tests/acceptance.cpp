// Acceptance run: one line per criterion, plus a JSON artifact file whose
// bytes depend only on the seed.
//
//   acceptance [--artifacts path] [--seed s] [--quiet] [--strict]
//
// Exit status is non-zero when any criterion fails, except criteria whose
// statement the computation itself refutes; those print REFUTED and only
// count under --strict.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "oracles.hpp"
#include "unitred/json_io.hpp"

using namespace unitred;

namespace {

enum class Status { Pass, Fail, Refuted };

struct Outcome {
    Status status = Status::Fail;
    std::string detail;
    Json artifact;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome(std::uint64_t)> run;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

Outcome pass_if(bool ok, std::string detail, Json artifact) {
    return {ok ? Status::Pass : Status::Fail, std::move(detail), std::move(artifact)};
}

bool contains_coeffs(const std::vector<MinimaEntry>& v, const std::vector<Int>& c) {
    return std::any_of(v.begin(), v.end(), [&](const MinimaEntry& e) { return e.coeffs == c; });
}

Outcome c1_table(std::uint64_t) {
    const u64 ns[] = {5, 7, 8, 9, 12, 15};
    const u64 eta_expected[] = {5, 7, 2, 3, 4, 16};
    const long disc_expected[] = {125, 16807, 256, 19683, 144, 1265625};
    bool ok = true;
    std::vector<std::string> etas, discs;
    Json rows = Json::array();
    for (std::size_t i = 0; i < 6; ++i) {
        const auto c = strong_criterion(ns[i]);
        ok = ok && c.eta.value == eta_expected[i] && c.discriminant_abs == disc_expected[i];
        etas.push_back(std::to_string(c.eta.value));
        discs.push_back(to_string(c.discriminant_abs));
        rows.push_back(as_json(c));
    }
    return pass_if(ok, "eta=(" + join(etas) + ") |Delta|=(" + join(discs) + ")", rows);
}

Outcome c2_classify(std::uint64_t) {
    std::vector<std::pair<u64, Verdict>> expected;
    for (u64 n : {3, 4, 5, 7, 12, 15}) expected.emplace_back(n, Verdict::StronglyUR);
    for (u64 n : {8, 9}) expected.emplace_back(n, Verdict::WeaklyUR);
    for (u64 n : {16, 27, 25, 49, 121}) expected.emplace_back(n, Verdict::NotUR);
    for (u64 p = 13; p <= 97; ++p)
        if (is_prime(p)) expected.emplace_back(p, Verdict::NotUR);
    for (u64 n : {11, 20, 21, 24}) expected.emplace_back(n, Verdict::Unknown);
    std::vector<std::string> wrong;
    Json verdicts = Json::object();
    for (auto [n, v] : expected) {
        const Certificate c = classify(n);
        verdicts[std::to_string(n)] = to_string(c.verdict);
        if (c.verdict != v) wrong.push_back(std::to_string(n) + ":" + to_string(c.verdict));
    }
    return pass_if(wrong.empty(),
                   std::to_string(expected.size()) + " conductors classified" +
                       (wrong.empty() ? ", all as expected" : ", mismatches " + join(wrong)),
                   verdicts);
}

Outcome c3_equalities(std::uint64_t) {
    const auto c8 = strong_criterion(8), c9 = strong_criterion(9);
    const bool ok = c8.outcome == CriterionOutcome::Equal && c8.lhs == 1024 && c8.rhs == 1024 &&
                    c9.outcome == CriterionOutcome::Equal && c9.lhs == 419904 && c9.rhs == 419904;
    return pass_if(ok,
                   "N=8 " + to_string(c8.lhs) + " vs " + to_string(c8.rhs) + " " + to_string(c8.outcome) + "; N=9 " +
                       to_string(c9.lhs) + " vs " + to_string(c9.rhs) + " " + to_string(c9.outcome),
                   Json{{"8", as_json(c8)}, {"9", as_json(c9)}});
}

Outcome c4_boundary(std::uint64_t) {
    const BoundaryAnalysis b8 = boundary_analysis(8), b9 = boundary_analysis(9);
    // The N = 8 boundary form is ((1 + z)(1 + z^-1))^-1.
    const CycloElement w8 = witness_2power(3);
    const bool form8 = std::equal(w8.coeffs().begin(), w8.coeffs().end(), b8.a.begin(), b8.a.end());
    const MinimaReport& m8 = b8.minima;
    const MinimaReport& m9 = b9.minima;
    const bool unit8 = std::any_of(m8.minima.begin(), m8.minima.end(), has_unit_norm);
    const bool unit9 = std::any_of(m9.minima.begin(), m9.minima.end(), has_unit_norm);
    const bool x8 = contains_coeffs(m8.minima, {1, 1, 0, 0});
    const bool x9 = contains_coeffs(m9.minima, {1, 1, 0, 1, 0, 0});
    const bool ok = form8 && m8.mu == 4 && m9.mu == 6 && unit8 && unit9 && x8 && x9 && b8.norm_x == 2 && b9.norm_x == 3;
    return pass_if(ok,
                   "N=8 mu=" + to_string(m8.mu) + " (" + std::to_string(m8.minima.size()) + " minima, unit " +
                       (unit8 ? "yes" : "no") + ", 1+z8 of norm " + to_string(b8.norm_x) + " " + (x8 ? "yes" : "no") +
                       "); N=9 mu=" + to_string(m9.mu) + " (" + std::to_string(m9.minima.size()) + " minima, unit " +
                       (unit9 ? "yes" : "no") + ", 1+z9+z9^3 of norm " + to_string(b9.norm_x) + " " + (x9 ? "yes" : "no") + ")",
                   Json{{"8", as_json(b8)}, {"9", as_json(b9)}});
}

bool witness_ok(const DiscrepancyCertificate& c, const Rat& trace, const Rat& mu, const Rat& ratio) {
    const bool evidence = std::all_of(c.reduced_evidence.begin(), c.reduced_evidence.end(),
                                      [](const MinimaEntry& e) { return e.norm && abs(*e.norm) >= 2; });
    return c.trace_a == trace && c.mu_a == mu && c.ratio == ratio && c.ratio == c.closed_form && c.reduced &&
           evidence && c.verified();
}

std::string witness_detail(const DiscrepancyCertificate& c) {
    return "N=" + std::to_string(c.conductor) + " trace_a=" + to_string(c.trace_a) + " mu_a=" + to_string(c.mu_a) +
           " ratio=" + to_string(c.ratio) + " closed form " + to_string(c.closed_form) + ", " +
           std::to_string(c.reduced_evidence.size()) + " vectors below trace all non-units (dim " +
           std::to_string(c.witness.size()) + ", " + std::to_string(c.nodes) + " nodes)";
}

Outcome c5_witness16(std::uint64_t) {
    const auto c = verify_witness(16);
    return pass_if(witness_ok(c, 16, 8, 2), witness_detail(c), as_json(c));
}

Outcome c6_witness_extended(std::uint64_t) {
    try {
        const auto c27 = verify_witness(27);
        const auto c25 = verify_witness(25);
        const bool ok = witness_ok(c27, 54, 18, 3) && witness_ok(c25, 50, 20, Rat(5, 2));
        return pass_if(ok, witness_detail(c27) + "; " + witness_detail(c25), Json{{"27", as_json(c27)}, {"25", as_json(c25)}});
    } catch (const BudgetExceeded& e) {
        return {Status::Fail, std::string("budget exceeded: ") + e.what(), as_json(e)};
    }
}

Outcome c7_eq4(std::uint64_t seed) {
    const auto s9 = eq4_random_suite(3, 9, 100, seed);
    const auto s25 = eq4_random_suite(5, 25, 50, seed);
    const auto k = kronecker_check(8, 16);
    const bool ok = s9.passed == 100 && s25.passed == 50 && k.checked == 16 && k.passed == 16;
    return pass_if(ok,
                   "K3->K9 " + std::to_string(s9.passed) + "/100, K5->K25 " + std::to_string(s25.passed) +
                       "/50, rel_trace(z16^k) " + std::to_string(k.passed) + "/" + std::to_string(k.checked),
                   Json{{"3_9", as_json(s9)}, {"5_25", as_json(s25)}, {"kronecker_8_16", as_json(k)}});
}

Outcome c8_rho(std::uint64_t seed) {
    oracle::Rng rng(seed);
    unsigned total = 0, good = 0;
    Json sums = Json::object();
    for (u64 n : {8, 16, 9, 27, 5, 25}) {
        const FieldPtr f = make_field(n);
        Rat acc = 0;
        for (int t = 0; t < 200; ++t, ++total) {
            const auto v = rng.rational_vector(f->degree());
            const CycloElement x(f, v);
            const Rat direct = trace(x * conj(x));
            const Rat closed = rho_closed_form(n, v);
            good += closed == direct && rho(n, v) == direct;
            acc += closed;
        }
        sums[std::to_string(n)] = as_json(acc);
    }
    unsigned qgood = 0;
    for (int t = 0; t < 500; ++t) {
        const u64 p = std::array<u64, 4>{3, 5, 7, 11}[static_cast<std::size_t>(t % 4)];
        std::vector<Int> m(p - 1);
        Int s = 0, s2 = 0;
        for (auto& x : m) {
            x = rng.uniform(-50, 50);
            s += x;
            s2 += x * x;
        }
        qgood += q_eval(p, m) == Int(p) * s2 - s * s;
    }
    return pass_if(good == total && qgood == 500,
                   "rho closed form " + std::to_string(good) + "/" + std::to_string(total) + " over N=8,16,9,27,5,25; q_eval " +
                       std::to_string(qgood) + "/500",
                   Json{{"rho_sums", sums}, {"rho_passed", good}, {"q_passed", qgood}});
}

Outcome c9_l75(std::uint64_t) {
    const std::pair<u64, long> cases[] = {{3, 3}, {5, 3}, {7, 2}};
    bool inequality = true, equality_only_at_zero = true;
    std::vector<std::string> parts;
    Json reports = Json::array();
    for (auto [p, box] : cases) {
        const L75Report r = l75_scan(p, box);
        inequality = inequality && r.pass();
        equality_only_at_zero = equality_only_at_zero && r.equality_points == 0;
        parts.push_back("p=" + std::to_string(p) + " box " + std::to_string(box) + ": " + std::to_string(r.checked) +
                        " checks, " + std::to_string(r.violations) + " violations, min at m=0 " +
                        (r.min_at_zero ? "yes" : "no") + ", equality at " + std::to_string(r.equality_points) +
                        " points with m!=0, boundary margin " + to_string(r.boundary_margin));
        reports.push_back(as_json(r));
    }
    Outcome o;
    o.artifact = reports;
    if (!inequality) {
        o.status = Status::Fail;
        o.detail = "inequality violated; " + join(parts, "; ");
    } else if (!equality_only_at_zero) {
        o.status = Status::Refuted;
        o.detail = "inequality holds everywhere, but equality is not exclusive to m=0; " + join(parts, "; ");
    } else {
        o.status = Status::Pass;
        o.detail = join(parts, "; ");
    }
    return o;
}

Outcome c10_real(std::uint64_t) {
    const bool ur15 = classify_real(15).verdict == Verdict::UR;
    std::vector<std::string> wrong;
    Json verdicts = Json::object();
    for (u64 n : {32, 27, 25, 49, 121, 169, 289, 361, 23}) {
        const Verdict v = classify_real(n).verdict;
        verdicts[std::to_string(n)] = to_string(v);
        if (v != Verdict::NotUR) wrong.push_back(std::to_string(n));
    }
    const auto w = verify_real_witness(32);
    const bool ok = ur15 && wrong.empty() && w.bound && *w.bound == 2 && w.verified() && w.witness.size() == 8;
    return pass_if(ok,
                   std::string("K15+ ") + (ur15 ? "UR" : "not UR") + "; NotUR for 9/9 listed" +
                       (wrong.empty() ? "" : " except " + join(wrong)) + "; K32+ witness bound " +
                       (w.bound ? to_string(*w.bound) : "none") + " (mu*=" + to_string(w.mu_star) + ", mu<=" +
                       to_string(w.mu_upper.value_or(0)) + ", dim " + std::to_string(w.witness.size()) + ")",
                   Json{{"verdicts", verdicts}, {"witness_32", as_json(w)}});
}

Outcome c11_oracles(std::uint64_t seed) {
    oracle::Rng rng(seed);
    unsigned enum_ok = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = static_cast<std::size_t>(3 + t % 2);
        IntMatrix g(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i) {
                g(i, i) = rng.uniform(1, 25);
                for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i) = rng.uniform(-5, 5);
            }
        } while (definiteness(to_rat_matrix(g)) != Definiteness::PositiveDefinite);
        Int bound = 0;
        for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, g(i, i));
        bound += rng.uniform(0, 10);
        enum_ok += enumerate_below(g, bound).vectors == oracle::brute_force_below(g, bound);
    }
    unsigned mu_ok = 0, mu_total = 0;
    Json values = Json::array();
    for (u64 n : {5, 8, 12}) {
        const FieldPtr f = make_field(n);
        for (int t = 0; t < 25; ++t, ++mu_total) {
            const CycloElement a = rng.totally_positive(f);
            const TraceLattice l = trace_lattice(a);
            const auto once = mu_star(l);
            const auto doubled = mu_star(l, {}, 2);
            mu_ok += once.mu_star == doubled.mu_star;
            values.push_back(as_json(once.mu_star));
        }
    }
    return pass_if(enum_ok == 50 && mu_ok == mu_total,
                   "enumeration vs box scan " + std::to_string(enum_ok) + "/50; mu* vs doubled-bound re-enumeration " +
                       std::to_string(mu_ok) + "/" + std::to_string(mu_total) + " over K5, K8, K12",
                   Json{{"enumeration_agree", enum_ok}, {"mu_star_values", values}});
}

std::vector<Criterion> criteria() {
    return {
        {1, "criterion table", 1, c1_table},
        {2, "classification", 10, c2_classify},
        {3, "criterion equalities", 1, c3_equalities},
        {4, "boundary forms", 5, c4_boundary},
        {5, "witness N=16", 60, c5_witness16},
        {6, "witnesses N=27, N=25", 1800, c6_witness_extended},
        {7, "lifting identity suite", 30, c7_eq4},
        {8, "rho/Q identity suite", 30, c8_rho},
        {9, "Q permutation inequality scan", 300, c9_l75},
        {10, "real subfield", 120, c10_real},
        {11, "oracle equivalence", 120, c11_oracles},
    };
}

Json run_all(std::uint64_t seed, bool print, std::vector<Status>* statuses) {
    Json artifacts;
    artifacts["seed"] = seed;
    for (const auto& c : criteria()) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run(seed);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds && o.status == Status::Pass) {
            o.status = Status::Fail;
            o.detail += "; over the time limit";
        }
        if (statuses) statuses->push_back(o.status);
        if (print) {
            const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Refuted ? "REFUTED" : "FAIL";
            char timing[64];
            std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
            std::cout << "criterion " << c.id << " " << tag << ": " << c.title << ": " << o.detail << " (" << timing
                      << ")" << std::endl;
        }
        artifacts["criterion_" + std::to_string(c.id)] = std::move(o.artifact);
    }
    return artifacts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string artifacts_path;
    std::uint64_t seed = 20240607;
    bool quiet = false, strict = false;
    app.add_option("--artifacts", artifacts_path, "write JSON artifacts here");
    app.add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();
    app.add_flag("--quiet", quiet, "no per-criterion lines");
    app.add_flag("--strict", strict, "count refuted criteria as failures");
    CLI11_PARSE(app, argc, argv);

    std::vector<Status> statuses;
    const Json first = run_all(seed, !quiet, &statuses);
    const std::string bytes = first.dump(2);

    // Criterion 12: the same artifacts, byte for byte, on 1 and on 4 threads.
    const auto t0 = std::chrono::steady_clock::now();
    const int saved = omp_get_max_threads();
    bool same = true;
    for (int threads : {1, 4}) {
        omp_set_num_threads(threads);
        same = same && run_all(seed, false, nullptr).dump(2) == bytes;
    }
    omp_set_num_threads(saved);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    statuses.push_back(same ? Status::Pass : Status::Fail);
    if (!quiet) {
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << "criterion 12 " << (same ? "PASS" : "FAIL") << ": determinism: reruns on 1 and 4 threads "
                  << (same ? "reproduce" : "differ from") << " the artifacts byte for byte (" << bytes.size()
                  << " bytes, seed " << seed << ")" << (artifacts_path.empty() ? "" : ", written to " + artifacts_path)
                  << "; separate processes are compared by ctest (" << timing << ")" << std::endl;
    }

    if (!artifacts_path.empty()) {
        std::ofstream out(artifacts_path, std::ios::binary);
        out << bytes << "\n";
        if (!out) {
            std::cerr << "cannot write " << artifacts_path << "\n";
            return 2;
        }
    }

    int failed = 0, refuted = 0;
    for (Status s : statuses) {
        failed += s == Status::Fail;
        refuted += s == Status::Refuted;
    }
    if (!quiet)
        std::cout << "summary: " << std::count(statuses.begin(), statuses.end(), Status::Pass) << " pass, " << failed
                  << " fail, " << refuted << " refuted" << std::endl;
    return failed > 0 || (strict && refuted > 0) ? 1 : 0;
}
