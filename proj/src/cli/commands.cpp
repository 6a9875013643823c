#include "commands.hpp"

#include <atomic>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "hasse/census.hpp"
#include "hasse/class_numbers.hpp"
#include "hasse/cubic_disc.hpp"
#include "hasse/membership.hpp"
#include "hasse/splitting.hpp"

namespace hasse::cli {

namespace {

constexpr std::uint64_t kExpectedMaster = 9'565'938;

template <class T, class F> std::vector<T> parallel_map(std::size_t n, unsigned jobs, F f)
{
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < std::max(1u, jobs) && k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

bool squarefree_field(std::int64_t d) { return d > 1 && is_squarefree(Int(static_cast<long>(d))); }

std::int64_t parse_int(const std::string &s)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception &) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

std::uint64_t bound_for(const Int &d, const Int &e)
{
    const Int want = 64 * 3 * d * e * e;
    const Int cap = Int(1) << 62;
    if (want > cap) return cap.get_ui();
    return std::max<std::uint64_t>(kDefaultSearchBound, want.get_ui());
}

std::optional<Verdict> try_membership(const QuadElem &u, const Int &e, std::size_t trials)
{
    try {
        return membership_test(u, e, trials, bound_for(u.d(), e));
    } catch (const DomainError &) {
        return std::nullopt;
    }
}

bool likely(const std::optional<Verdict> &v) { return v && v->kind == VerdictKind::LikelyMember; }

Json disc_json(const DiscReport &r)
{
    return Json{{"theorem", r.theorem},          {"in_M", r.in_M},
                {"D_F", num(r.D_F)},             {"predicted", num(r.predicted)},
                {"closed_form", num(r.closed_form)}, {"poly", r.poly.to_string()},
                {"poly_disc", num(r.poly_disc)}, {"field_disc", num(r.field_disc)},
                {"index", num(r.index)},         {"pass", r.pass}};
}

bool thm62_edge(const Thm62Report &r) { return !r.pass && !r.annotation.empty(); }

Json thm62_json(const Thm62Report &r)
{
    Json j{{"d", num(r.d)},
           {"case", r.case_tag},
           {"identity", r.identity},
           {"modulus", num(r.modulus)},
           {"order_e", num(r.order_e)},
           {"h_F", num(r.h_F)},
           {"ring_degree", num(r.ring_degree)},
           {"ray_degree", num(r.ray_degree)},
           {"expected", num(r.expected)}};
    if (r.g) j["g"] = {num(r.g->first), num(r.g->second)};
    j["pass"] = r.pass;
    j["status"] = r.pass ? "pass" : thm62_edge(r) ? "annotated" : "fail";
    if (!r.annotation.empty()) j["annotation"] = r.annotation;
    return j;
}

Json crosscheck_json(const CrosscheckReport &r)
{
    return Json{{"d", num(r.d)},
                {"in_M", r.in_M},
                {"verdict", verdict_json(r.verdict)},
                {"agree", r.agree},
                {"inconclusive", r.inconclusive}};
}

struct Globals {
    std::string format = "json";
    unsigned jobs = 0;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

unsigned env_jobs()
{
    if (const char *s = std::getenv("HASSE_JOBS")) return static_cast<unsigned>(std::max<std::int64_t>(1, parse_int(s)));
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_report(Output &out, std::int64_t d, std::size_t trials)
{
    if (!squarefree_field(d)) throw UsageError("d must be a squarefree integer > 1, got " + std::to_string(d));
    const Int D(static_cast<long>(d));
    const FundUnit fu = fundamental_unit(D);
    const DiscReport disc = verify_disc_theorems(D);
    const Thm62Report t62 = verify_thm62(d);
    const CrosscheckReport xc = thm16_crosscheck(D, trials);
    const std::int64_t h_F = class_number_imaginary(imaginary_field_disc(d));

    Json j;
    j["d"] = num(d);
    j["fundamental_unit"] = elem_json(fu.elem);
    j["epsilon"] = num(fu.epsilon);
    j["a_mod27"] = num(half_residue(fu.elem, 27).first);
    j["in_M"] = thm61_in_M(fu);
    j["h_F"] = num(h_F);
    j["h_d"] = num(class_number_real(d));
    j["discriminant"] = disc_json(disc);
    j["thm62"] = thm62_json(t62);
    j["crosscheck"] = crosscheck_json(xc);
    const bool ok = disc.pass && (t62.pass || thm62_edge(t62)) && xc.agree;
    j["pass"] = ok;
    out.row(j);
    return ok ? 0 : 1;
}

int cmd_scan(Output &out, std::int64_t lo, std::int64_t hi, ScanMode mode, unsigned jobs)
{
    const std::vector<ScanRow> rows = scan(lo, hi, mode, jobs);
    std::optional<std::int64_t> smallest;
    bool consistent = true;
    for (const auto &r : rows) {
        out.row(r.to_json());
        if (!smallest && r.counterexample()) smallest = r.d;
        consistent = consistent && r.consistent();
    }
    Json s;
    s["mode"] = mode == ScanMode::No3 ? "no3" : "div3";
    s["min"] = num(lo);
    s["max"] = num(hi);
    s["rows"] = num(static_cast<std::uint64_t>(rows.size()));
    s["smallest_counterexample"] = smallest ? Json(num(*smallest)) : Json(nullptr);
    s["implication_holds"] = consistent;
    out.summary(s);
    return consistent ? 0 : 1;
}

int cmd_census(Output &out, unsigned jobs)
{
    const CensusResult r = run_census(jobs);
    Json cex = Json::array();
    for (const auto &c : r.counterexamples) {
        Json q = Json::array();
        for (unsigned v : c.quintuple) q.push_back(num(v));
        cex.push_back({{"claim", c.claim}, {"r_s_x_y_d", q}});
    }
    const bool ok = r.master_count == kExpectedMaster && r.claim74_holds && r.claim75_holds;
    out.row(Json{{"master_count", num(r.master_count)},
                 {"claim74_holds", r.claim74_holds},
                 {"claim75_holds", r.claim75_holds},
                 {"counterexamples", cex},
                 {"elapsed_ms", num(static_cast<std::int64_t>(r.elapsed.count()))},
                 {"pass", ok}});
    return ok ? 0 : 1;
}

int cmd_thm62(Output &out, std::int64_t lo, std::int64_t hi, unsigned jobs)
{
    std::vector<std::int64_t> ds;
    for (std::int64_t d = std::max<std::int64_t>(lo, 2); d <= hi; ++d)
        if (squarefree_field(d)) ds.push_back(d);
    const auto reports = parallel_map<Thm62Report>(ds.size(), jobs, [&](std::size_t i) { return verify_thm62(ds[i]); });
    std::size_t fails = 0, annotated = 0;
    for (const auto &r : reports) {
        out.row(thm62_json(r));
        if (thm62_edge(r)) ++annotated;
        else if (!r.pass) ++fails;
    }
    out.summary(Json{{"rows", num(static_cast<std::uint64_t>(reports.size()))},
                     {"failures", num(static_cast<std::uint64_t>(fails))},
                     {"annotated", num(static_cast<std::uint64_t>(annotated))}});
    return fails ? 1 : 0;
}

int cmd_crosscheck(Output &out, const std::string &target, std::size_t trials, std::uint64_t bound, unsigned jobs)
{
    std::int64_t lo, hi;
    if (target.find("..") != std::string::npos) {
        std::tie(lo, hi) = parse_range(target);
    } else {
        lo = hi = parse_int(target);
        if (!squarefree_field(lo)) throw UsageError("d must be a squarefree integer > 1, got " + target);
    }
    std::vector<std::int64_t> ds;
    for (std::int64_t d = std::max<std::int64_t>(lo, 2); d <= hi; ++d)
        if (squarefree_field(d)) ds.push_back(d);
    const auto reports = parallel_map<CrosscheckReport>(
        ds.size(), jobs, [&](std::size_t i) { return thm16_crosscheck(Int(static_cast<long>(ds[i])), trials, bound); });
    std::size_t disagree = 0;
    for (const auto &r : reports) {
        out.row(crosscheck_json(r));
        if (!r.agree) ++disagree;
    }
    if (reports.size() > 1)
        out.summary(Json{{"rows", num(static_cast<std::uint64_t>(reports.size()))},
                         {"disagreements", num(static_cast<std::uint64_t>(disagree))}});
    return disagree ? 1 : 0;
}

int cmd_conjectures(Output &out, std::int64_t lo, std::int64_t hi, std::int64_t coeff, std::size_t trials, unsigned jobs)
{
    if (coeff < 1) throw UsageError("--coeff-bound must be positive");
    std::vector<std::int64_t> ds;
    for (std::int64_t d = std::max<std::int64_t>(lo, 2); d <= hi; ++d)
        if (squarefree_field(d)) ds.push_back(d);
    const auto per_d = parallel_map<std::vector<ConjectureRow>>(ds.size(), jobs, [&](std::size_t i) {
        const std::int64_t h = class_number_real(ds[i]);
        std::vector<ConjectureRow> rows;
        for (const auto &u : sd_elements(Int(static_cast<long>(ds[i])), coeff)) rows.push_back(conjecture_row(u, h, trials));
        return rows;
    });
    std::size_t total = 0, hard = 0, evidence = 0;
    for (const auto &rows : per_d)
        for (const auto &r : rows) {
            out.row(r.to_json());
            ++total;
            if (r.hard_failure()) ++hard;
            for (const auto &c : r.checks)
                if (!c.theorem && !c.consistent) ++evidence;
        }
    out.summary(Json{{"rows", num(static_cast<std::uint64_t>(total))},
                     {"theorem_failures", num(static_cast<std::uint64_t>(hard))},
                     {"conjecture_mismatches", num(static_cast<std::uint64_t>(evidence))}});
    return hard ? 1 : 0;
}

} // namespace

Json ScanRow::to_json() const
{
    return Json{{"d", num(d)},
                {"h_F", num(h_F)},
                {"three_divides_hF", three_divides_hF},
                {"in_M", in_M},
                {"hasse_witness", hasse_witness}};
}

ScanRow scan_row(std::int64_t d)
{
    ScanRow r;
    r.d = d;
    r.h_F = class_number_imaginary(imaginary_field_disc(d));
    r.three_divides_hF = r.h_F % 3 == 0;
    r.in_M = thm61_in_M(fundamental_unit(Int(static_cast<long>(d))));
    r.hasse_witness = r.in_M;
    return r;
}

std::vector<ScanRow> scan(std::int64_t lo, std::int64_t hi, ScanMode mode, unsigned jobs)
{
    std::vector<std::int64_t> ds;
    for (std::int64_t d = std::max<std::int64_t>(lo, 2); d <= hi; ++d)
        if (squarefree_field(d) && ((d % 3 == 0) == (mode == ScanMode::Div3))) ds.push_back(d);
    return parallel_map<ScanRow>(ds.size(), jobs, [&](std::size_t i) { return scan_row(ds[i]); });
}

bool ConjectureRow::hard_failure() const
{
    for (const auto &c : checks)
        if (c.theorem && !c.consistent) return true;
    return false;
}

Json ConjectureRow::to_json() const
{
    Json j;
    j["d"] = num(u.d());
    j["u"] = elem_json(u);
    j["n"] = num(n);
    j["tags"] = {{"S_d", true}, {"S_d_star", in_Sd_star}, {"R_d", in_Rd}, {"P_d", in_Pd}};
    j["c"] = num(c);
    auto v = [](const std::optional<Verdict> &x) { return x ? verdict_json(*x) : Json("inconclusive"); };
    j["verdict_M"] = v(v_M);
    j["verdict_Mc"] = v(v_Mc);
    j["verdict_M3c"] = v(v_M3c);
    Json checks_json = Json::array();
    for (const auto &c : checks)
        checks_json.push_back({{"claim", c.claim},
                               {"theorem", c.theorem},
                               {"expected", c.expected},
                               {"observed", c.observed},
                               {"consistent", c.consistent}});
    j["consistent_with"] = checks_json;
    return j;
}

std::vector<QuadElem> sd_elements(const Int &d, std::int64_t bound)
{
    std::vector<QuadElem> out;
    const bool half = mod(d, 4) == 1;
    for (unsigned den : {1u, 2u}) {
        if (den == 2 && !half) continue;
        for (std::int64_t x = -bound; x <= bound; ++x)
            for (std::int64_t y = -bound; y <= bound; ++y) {
                if (y == 0) continue;
                if (den == 2 && (x % 2 == 0 || y % 2 == 0)) continue;
                const QuadElem u(d, Int(static_cast<long>(x)), Int(static_cast<long>(y)), den);
                if (!exact_cube_root(qnorm(u))) continue;
                if (classify_sd(u).in_Sd) out.push_back(u);
            }
    }
    return out;
}

ConjectureRow conjecture_row(const QuadElem &u, std::int64_t h_d, std::size_t trials)
{
    const SdClassification cls = classify_sd(u);
    const Int c = c_of(u);
    ConjectureRow row{u, cls.n, c, false, false, false, {}, {}, {}, {}, {}};
    row.in_Sd_star = cls.in_Sd_star;
    row.in_Rd = cls.rd_witness.has_value();
    row.in_Pd = pd_member(u);
    row.v_M = try_membership(u, 1, trials);
    row.v_Mc = c == 1 ? row.v_M : try_membership(u, c, trials);
    row.v_M3c = try_membership(u, 3 * c, trials);
    const Int c_odd = odd_part(c);
    row.v_Mc_odd = c_odd == c ? row.v_Mc : try_membership(u, c_odd, trials);

    const bool norm_prime_to_3 = mod(qnorm(u), 3) != 0;
    const bool h_prime_to_3 = h_d % 3 != 0;
    auto add = [&](std::string claim, bool theorem, bool expected, const std::optional<Verdict> &v) {
        if (!v) return;
        row.checks.push_back({std::move(claim), theorem, expected, likely(v), expected == likely(v)});
    };
    if (row.in_Sd_star && norm_prime_to_3 && h_prime_to_3) add("Thm 7.3", true, row.in_Pd, row.v_M);
    if (norm_prime_to_3) add(h_prime_to_3 ? "Thm 7.5" : "Thm 7.5 (3 | h)", false, row.in_Pd, row.v_Mc);
    if (row.in_Rd && norm_prime_to_3) add("Conj 7.4", false, row.in_Pd, row.v_Mc);
    add("Conj 7.8", false, true, row.v_M3c);
    if (c_odd != c && row.v_Mc) add("Thm 7.6", true, likely(row.v_Mc), row.v_Mc_odd);
    return row;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string &s)
{
    const auto pos = s.find("..");
    if (pos == std::string::npos) throw UsageError("expected a range A..B, got '" + s + "'");
    const std::int64_t a = parse_int(s.substr(0, pos)), b = parse_int(s.substr(pos + 2));
    if (a > b) throw UsageError("empty range '" + s + "'");
    return {a, b};
}

int run(int argc, char **argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Cube roots of units, ring class fields and cubic discriminants"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--jobs", g.jobs, "worker threads (env HASSE_JOBS)");
    app.add_option("--seed", g.seed, "seed for randomized primality rounds (env HASSE_SEED)");
    app.add_option("--out", g.out_path, "also write JSON lines to this file");

    std::int64_t report_d = 0;
    auto *report = app.add_subcommand("report", "full report for one d");
    report->add_option("d", report_d)->required();

    std::int64_t scan_min = 2, scan_max = 0;
    std::string scan_mode;
    auto *scan_cmd = app.add_subcommand("scan", "class number / criterion scan with counterexample search");
    scan_cmd->add_option("--min", scan_min);
    scan_cmd->add_option("--max", scan_max)->required();
    scan_cmd->add_option("--mode", scan_mode)->required()->check(CLI::IsMember({"no3", "div3"}));

    auto *census = app.add_subcommand("census", "exhaustive residue census mod 27");

    std::string t62_range;
    auto *t62 = app.add_subcommand("thm62", "ring class / ray class degree identities");
    t62->add_option("--range", t62_range)->required();

    std::string xc_target;
    std::size_t trials = kDefaultTrials;
    std::uint64_t bound = kDefaultSearchBound;
    auto *xc = app.add_subcommand("crosscheck", "congruence criterion against cubic residuacity");
    xc->add_option("d", xc_target, "d or A..B")->required();
    xc->add_option("--trials", trials);
    xc->add_option("--bound", bound);

    std::string conj_range;
    std::int64_t coeff = 0;
    auto *conj = app.add_subcommand("conjectures", "evidence harness for the S_d statements");
    conj->add_option("--d", conj_range)->required();
    conj->add_option("--coeff-bound", coeff)->required();
    conj->add_option("--trials", trials);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (g.seed) set_primality_seed(*g.seed);
        else if (const char *s = std::getenv("HASSE_SEED")) set_primality_seed(static_cast<std::uint64_t>(parse_int(s)));
        const unsigned jobs = g.jobs ? g.jobs : env_jobs();
        Output output(parse_format(g.format), out, err, g.out_path);

        if (*report) return cmd_report(output, report_d, trials);
        if (*scan_cmd) return cmd_scan(output, scan_min, scan_max, scan_mode == "no3" ? ScanMode::No3 : ScanMode::Div3, jobs);
        if (*census) return cmd_census(output, jobs);
        if (*t62) {
            const auto [a, b] = parse_range(t62_range);
            return cmd_thm62(output, a, b, jobs);
        }
        if (*xc) return cmd_crosscheck(output, xc_target, trials, bound, jobs);
        if (*conj) {
            const auto [a, b] = parse_range(conj_range);
            return cmd_conjectures(output, a, b, coeff, trials, jobs);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace hasse::cli
