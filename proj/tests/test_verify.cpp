#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trislice/verify.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace trislice;

namespace {

const std::vector<std::string> kCheckNames = {
    "two-point-gluing",  "classical-system", "kernel-recursion",       "slice-telescoping",
    "tutte-quadratic",   "scaled-quadratic", "simple-recursion",       "r-product",
    "t-product",         "y-recursion",      "bridge-relations",       "limit-system",
    "lambda-parametrization", "sum-rule",    "stabilization",          "three-route-kernel",
    "closed-vs-recursion"};

}  // namespace

TEST_CASE("the full report passes on a reduced grid") {
    VerifyOptions opt;
    opt.order = 10;
    opt.k_max = 3;
    opt.y_k_max = 12;
    opt.psi_m_max = 3;
    opt.psi_n_max = 4;
    std::vector<CheckResult> report = run_all_checks(opt);
    REQUIRE(report.size() == kCheckNames.size());
    for (size_t i = 0; i < report.size(); ++i) {
        CHECK(report[i].name == kCheckNames[i]);
        CHECK_MESSAGE(report[i].pass, report[i].name, ": ", report[i].detail);
        CHECK(report[i].detail.empty());
    }
    CHECK(all_pass(report));
}

TEST_CASE("order zero is a vacuous pass") {
    VerifyOptions opt;
    opt.order = 0;
    opt.k_max = 1;
    opt.y_k_max = 1;
    opt.psi_m_max = 1;
    opt.psi_n_max = 1;
    std::vector<CheckResult> report = run_all_checks(opt);
    REQUIRE(report.size() == kCheckNames.size());
    for (const CheckResult& r : report) CHECK_MESSAGE(r.pass, r.name, ": ", r.detail);
}

TEST_CASE("a corrupted kernel table is caught and located") {
    KernelTable good = htilde_by_recurrence(3, 4);

    KernelTable bad2 = good;
    bad2.psi[2][3] += Rat(1);
    CheckResult r = three_route_check(good, bad2, good);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("routes 1 and 2") != std::string::npos);
    CHECK(r.detail.find("psi(2, 3)") != std::string::npos);

    KernelTable bad3 = good;
    bad3.psi[0][1] = Rat(7);
    r = three_route_check(good, good, bad3);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("routes 1 and 3") != std::string::npos);
    CHECK(r.detail.find("psi(0, 1)") != std::string::npos);

    CheckResult clean = three_route_check(good, good, good);
    CHECK(clean.pass);
    CHECK(clean.detail.empty());

    KernelTable smaller = htilde_by_recurrence(2, 4);
    r = three_route_check(good, smaller, good);
    CHECK_FALSE(r.pass);
    CHECK(r.detail == "table shapes differ");
}

TEST_CASE("invalid options are rejected") {
    VerifyOptions opt;
    opt.order = -1;
    CHECK_THROWS_AS(run_all_checks(opt), std::invalid_argument);
    opt.order = 4;
    opt.k_max = 0;
    CHECK_THROWS_AS(run_all_checks(opt), std::invalid_argument);
    opt.k_max = 2;
    opt.psi_n_max = -2;
    CHECK_THROWS_AS(run_all_checks(opt), std::invalid_argument);
}
