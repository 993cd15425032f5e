#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "montecarlo_common.hpp"

// Statistical properties under repeated sampling with fixed seeds.
// Every experiment below is deterministic, so the observed rates are
// reproducible bit-for-bit across runs and thread counts.

TEST_CASE("ADF and PP: 5% size within [3%, 7%], power at least 95%") {
    const mc::UnitRootRates r = mc::unit_root_rates();
    INFO("adf size ", r.adf_size, " pp size ", r.pp_size, " adf power ",
         r.adf_power, " pp power ", r.pp_power);
    CHECK(r.adf_size >= 0.03);
    CHECK(r.adf_size <= 0.07);
    CHECK(r.pp_size >= 0.03);
    CHECK(r.pp_size <= 0.07);
    CHECK(r.adf_power >= 0.95);
    CHECK(r.pp_power >= 0.95);
}

TEST_CASE("Johansen rank recovery: >= 90% for rank 0, >= 95% for rank 1") {
    const mc::RankRates r = mc::johansen_rank_rates();
    INFO("rank0 ", r.rank0, " rank1 ", r.rank1);
    CHECK(r.rank0 >= 0.90);
    CHECK(r.rank1 >= 0.95);
}

TEST_CASE("Granger: 5% size within [3%, 7%], strong causality detected") {
    const mc::GrangerRates r = mc::granger_rates();
    INFO("size ", r.size, " power p ", r.power_p);
    CHECK(r.size >= 0.03);
    CHECK(r.size <= 0.07);
    CHECK(r.power_p < 0.01);
}

TEST_CASE("diagnostics: 5% sizes within [3%, 7%], ARCH power >= 90%") {
    const mc::DiagnosticRates r = mc::diagnostic_rates();
    INFO("portmanteau ", r.portmanteau_size, " jb ", r.jb_size, " arch ",
         r.arch_size, " arch power ", r.arch_power);
    CHECK(r.portmanteau_size >= 0.03);
    CHECK(r.portmanteau_size <= 0.07);
    CHECK(r.jb_size >= 0.03);
    CHECK(r.jb_size <= 0.07);
    CHECK(r.arch_size >= 0.03);
    CHECK(r.arch_size <= 0.07);
    CHECK(r.arch_power >= 0.90);
}

TEST_CASE("bootstrap IRF bands: pointwise coverage within [88%, 99%]") {
    const double cov = mc::bootstrap_coverage();
    INFO("coverage ", cov);
    CHECK(cov >= 0.88);
    CHECK(cov <= 0.99);
}
