#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "dzlab/report.hpp"

using namespace dzlab;

namespace {

MomentReport sample_report() {
    MomentReport r;
    r.spec = {MomentFamily::delta, 4, 4.0e6, 4.0e6, 936.0, 0.1};
    r.direct_value = 2.745078114624288e14;
    r.main_quadruple = 1.70444e14;
    r.main_diagonal = 1.65291e14;
    r.normalizer = moment_normalizer(r.spec);
    r.evaluator_error_budget = 0.0;
    r.panel_count = 4000000;
    return r;
}

}  // namespace

TEST_CASE("moment report JSON round-trips bit-identically", "[report]") {
    const auto r = sample_report();
    const std::string js = to_json(r, "0123456789abcdef");
    auto parsed = nlohmann::json::parse(js);

    MomentReport back;
    back.spec.family = MomentFamily::delta;
    back.spec.p = parsed["p"].get<int>();
    back.spec.T = parsed["T"].get<double>();
    back.spec.H = parsed["H"].get<double>();
    back.spec.U = parsed["U"].get<double>();
    back.spec.y_const = parsed["y_const"].get<double>();
    back.direct_value = parsed["direct_value"].get<double>();
    back.main_quadruple = parsed["main_quadruple"].get<double>();
    back.main_diagonal = parsed["main_diagonal"].get<double>();
    back.normalizer = parsed["normalizer"].get<double>();
    back.evaluator_error_budget = parsed["evaluator_error_budget"].get<double>();
    back.panel_count = parsed["panel_count"].get<std::uint64_t>();

    // exact field equality after the round trip
    CHECK(back.spec.T == r.spec.T);
    CHECK(back.spec.U == r.spec.U);
    CHECK(back.direct_value == r.direct_value);
    CHECK(*back.main_quadruple == *r.main_quadruple);
    CHECK(*back.main_diagonal == *r.main_diagonal);
    CHECK(back.normalizer == r.normalizer);
    CHECK(back.panel_count == r.panel_count);

    // canonical bytes: serializing again gives the same string
    const std::string js2 = to_json(back, "0123456789abcdef");
    CHECK(js == js2);

    // keys are emitted sorted
    CHECK(js.find("\"H\"") < js.find("\"T\""));
    CHECK(js.find("\"T\"") < js.find("\"U\""));
}

TEST_CASE("sum report serialization", "[report]") {
    SumReport s;
    s.which = SumKind::c_zu;
    s.z = 10;
    s.u = 16;
    s.value = 0.012909944487358056;
    s.family_count = 1;
    s.bound_form = 0.031622776601683791;
    const std::string js = to_json(s, "deadbeef00000000");
    auto parsed = nlohmann::json::parse(js);
    CHECK(parsed["which"] == "c_zu");
    CHECK(parsed["u"].get<std::uint64_t>() == 16);
    CHECK(parsed["value"].get<double>() == s.value);

    const std::string path = "sum_test.csv";
    std::remove(path.c_str());
    append_csv_row(path, kSumCsvHeader, to_csv_row(s, "deadbeef00000000"));
    append_csv_row(path, kSumCsvHeader, to_csv_row(s, "deadbeef00000000"));
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == kSumCsvHeader);
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2);  // header written once
    std::remove(path.c_str());
}

TEST_CASE("manifest id is deterministic and timestamp-free", "[report]") {
    RunManifest a;
    a.command = "moment";
    a.params = {{"T", "4e6"}, {"family", "delta"}};
    a.seed = 42;
    a.started = "2026-08-11T00:00:00Z";
    a.ended = "2026-08-11T00:10:00Z";
    a.wall_time_s = 600.0;

    RunManifest b = a;
    b.started = "2030-01-01T00:00:00Z";
    b.wall_time_s = 1.0;
    CHECK(a.id() == b.id());

    RunManifest c = a;
    c.params["T"] = "8e6";
    CHECK(a.id() != c.id());

    auto parsed = nlohmann::json::parse(a.to_json());
    CHECK(parsed["manifest_id"] == a.id());
    CHECK(parsed["params"]["T"] == "4e6");
}

TEST_CASE("gap certificate CSV", "[report]") {
    auto cert = alpha_star_gap({1, 16, 4, 9}, SignPattern::pp_mm);
    const std::string row = to_csv_row(cert);
    CHECK(row.find("1,16,4,9,++--,0,") == 0);
}

TEST_CASE("gap certificate batches are sorted by ratio", "[report]") {
    std::vector<GapCertificate> certs;
    certs.push_back(alpha_star_gap({2, 3, 5, 7}, SignPattern::pp_pm));
    certs.push_back(alpha_star_gap({1, 16, 4, 9}, SignPattern::pp_mm));
    certs.push_back(alpha_star_gap({1, 1, 1, 2}, SignPattern::pp_mm));
    const std::string path = "gap_test.csv";
    write_gap_certificates_csv(certs, path);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == kGapCsvHeader);
    double prev = -2.0;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const auto pos = line.rfind(',');
        const double ratio = line.substr(pos + 1) == "0"
                                 ? -1.0
                                 : std::stod(line.substr(pos + 1));
        REQUIRE(ratio >= prev);
        prev = ratio;
    }
    CHECK(rows == 3);
    std::remove(path.c_str());
}

TEST_CASE("deterministic bytes for fixed inputs", "[report]") {
    const auto r = sample_report();
    CHECK(to_json(r, "abc") == to_json(r, "abc"));
    CHECK(to_csv_row(r, "abc") == to_csv_row(r, "abc"));
}
