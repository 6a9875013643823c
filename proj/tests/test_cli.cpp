#include <doctest.h>

#include <sstream>

#include "commands.hpp"
#include "hasse/class_numbers.hpp"

using namespace hasse;
using namespace hasse::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_args(std::vector<std::string> args)
{
    args.insert(args.begin(), "hasse");
    std::vector<char *> argv;
    for (auto &a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Numbers must be serialized as strings.
bool has_number(const Json &j)
{
    if (j.is_number()) return true;
    if (j.is_structured())
        for (const auto &v : j) if (has_number(v)) return true;
    return false;
}

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("report")
    {
        const Run r79 = run_args({"report", "79"});
        CHECK(r79.code == 0);
        const Json j = Json::parse(r79.out);
        CHECK(j["in_M"] == true);
        CHECK(j["discriminant"]["field_disc"] == "-948");
        CHECK(j["h_d"] == "3");

        const Run r21 = run_args({"report", "21", "--seed", "3"});
        CHECK(r21.code == 0);
        const Json k = Json::parse(r21.out);
        CHECK(k["in_M"] == false);
        CHECK(k["a_mod27"] == "16");
        CHECK(k["discriminant"]["field_disc"] == "-567");
    }

    TEST_CASE("exit codes")
    {
        CHECK(run_args({"report", "4"}).code == 2);
        CHECK(run_args({"report", "1"}).code == 2);
        CHECK(run_args({"report"}).code == 2);
        CHECK(run_args({"thm62", "--range", "9..2"}).code == 2);
        CHECK(run_args({"thm62", "--range", "x..2"}).code == 2);
        CHECK(run_args({"scan", "--mode", "all", "--max", "10"}).code == 2);
        CHECK(run_args({"census", "--format", "xml"}).code == 2);
        CHECK(run_args({"bogus"}).code == 2);
        CHECK(run_args({"thm62", "--range", "2..40"}).code == 0);
        CHECK(run_args({"crosscheck", "79", "--trials", "50"}).code == 0);
    }

    TEST_CASE("json output round-trips byte for byte")
    {
        for (const auto &args : std::vector<std::vector<std::string>>{
                 {"report", "142"}, {"scan", "--mode", "no3", "--max", "60"}, {"thm62", "--range", "2..30"}}) {
            const Run r = run_args(args);
            for (const auto &l : lines(r.out)) {
                const Json j = Json::parse(l);
                CHECK(j.dump() == l);
                CHECK_FALSE(has_number(j));
            }
        }
    }

    TEST_CASE("scan")
    {
        const Run r = run_args({"scan", "--mode", "no3", "--min", "2", "--max", "150"});
        CHECK(r.code == 0);
        const Json s = Json::parse(lines(r.out).back());
        CHECK(s["smallest_counterexample"] == "142");
        const auto rows = scan(2, 800, ScanMode::Div3, 2);
        std::optional<std::int64_t> first;
        for (const auto &row : rows) {
            CHECK(row.d % 3 == 0);
            CHECK(row.consistent());
            CHECK(row.hasse_witness == row.in_M);
            if (!first && row.counterexample()) first = row.d;
        }
        CHECK(first == 786);
    }

    TEST_CASE("scan is independent of --jobs and seed")
    {
        const Run a = run_args({"scan", "--mode", "no3", "--max", "300", "--jobs", "1", "--seed", "1"});
        const Run b = run_args({"scan", "--mode", "no3", "--max", "300", "--jobs", "4", "--seed", "99"});
        CHECK(a.out == b.out);
    }

    TEST_CASE("csv and text formats")
    {
        const Run c = run_args({"thm62", "--range", "2..10", "--format", "csv"});
        CHECK(c.code == 0);
        const auto ls = lines(c.out);
        REQUIRE(ls.size() >= 2);
        CHECK(ls[0].rfind("d,case,identity,", 0) == 0);
        CHECK(c.err.find("# failures: 0") != std::string::npos);
        const Run t = run_args({"report", "21", "--format", "text"});
        CHECK(t.out.find("a_mod27: 16") != std::string::npos);
    }

    TEST_CASE("parse_range")
    {
        CHECK(parse_range("2..200") == std::make_pair<std::int64_t, std::int64_t>(2, 200));
        CHECK_THROWS_AS(parse_range("2-200"), UsageError);
        CHECK_THROWS_AS(parse_range("5..1"), UsageError);
    }

    TEST_CASE("conjecture rows")
    {
        const ConjectureRow a = conjecture_row(QuadElem(Int(142), Int(13), Int(1)), class_number_real(142), 50);
        CHECK(a.in_Sd_star);
        CHECK(a.in_Pd);
        CHECK(a.n == 3);
        CHECK_FALSE(a.hard_failure());

        const ConjectureRow b = conjecture_row(fundamental_unit(Int(21)).elem, class_number_real(21), 50);
        CHECK(b.c == 1);
        REQUIRE(b.v_M3c.has_value());
        CHECK(b.v_M3c->kind == VerdictKind::LikelyMember);
        bool saw78 = false;
        for (const auto &c : b.checks)
            if (c.claim == "Conj 7.8") saw78 = c.consistent;
        CHECK(saw78);

        const ConjectureRow c = conjecture_row(QuadElem(Int(5), Int(31), Int(155), 2), class_number_real(5), 50);
        CHECK(c.in_Rd);
        CHECK(c.n == -31);
        CHECK(c.c == 31);
        CHECK_FALSE(c.hard_failure());

        const Run r = run_args({"conjectures", "--d", "2..30", "--coeff-bound", "15"});
        CHECK(r.code == 0);
        const Json s = Json::parse(lines(r.out).back());
        CHECK(s["theorem_failures"] == "0");
    }
}
