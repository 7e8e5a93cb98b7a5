#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "phsub/verifier.hpp"

using namespace phsub;

TEST_CASE("registry is populated and anchored") {
    const std::vector<std::string> names = check_names();
    CHECK(names.size() >= 25);
    for (const std::string& name : names) CHECK_FALSE(check_anchor(name).empty());
    CHECK(check_is_global("classify_table"));
    CHECK_FALSE(check_is_global("lemma3b"));
    CHECK_THROWS_AS(check_anchor("no_such_check"), ConfigError);
}

TEST_CASE("representative checks pass at small sample counts") {
    const SubmersionModel quat = SubmersionModel::quaternionic_hopf(2);
    for (const std::string& name :
         {"axiom_c", "t_zero", "lemma3b", "oneill_vi", "clifford_vertical", "l_dim"}) {
        const CheckRecord rec = run_check({name, quat, 20, 1e-8, 42});
        CAPTURE(name);
        CHECK(rec.pass);
        CHECK(rec.error.empty());
        CHECK(rec.max_residual < rec.tol);
    }
    const CheckRecord global = run_check({"classify_table", quat, 1, 1e-8, 42});
    CHECK(global.pass);
    CHECK(global.model == "-");
}

TEST_CASE("unsupported pairings raise ConfigError") {
    const SubmersionModel theta = SubmersionModel::theta_circle(2, 1);
    CHECK_FALSE(check_supported("pinching", theta));
    CHECK_THROWS_AS(run_check({"pinching", theta, 10, 1e-8, 42}), ConfigError);
    CHECK_THROWS_AS(run_check({"fibre_definite", theta, 10, 1e-8, 42}), ConfigError);
    CHECK_THROWS_AS(run_check({"bogus", theta, 10, 1e-8, 42}), ConfigError);
    try {
        run_check({"pinching", theta, 10, 1e-8, 42});
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("unsupported") != std::string::npos);
    }
}

TEST_CASE("checks are deterministic in the seed") {
    const SubmersionModel ch = SubmersionModel::complex_hopf(2);
    const CheckRecord a = run_check({"lemma3b", ch, 30, 1e-8, 7});
    const CheckRecord b = run_check({"lemma3b", ch, 30, 1e-8, 7});
    CHECK(a.max_residual == b.max_residual);
    const CheckRecord c = run_check({"lemma3b", ch, 30, 1e-8, 8});
    CHECK(a.max_residual != c.max_residual); // different draw, same verdict
    CHECK(c.pass);
}

TEST_CASE("run_suite aggregates and never aborts") {
    const VerificationReport empty = run_suite({});
    CHECK(empty.pass);
    CHECK(empty.records.empty());

    const SubmersionModel quat = SubmersionModel::quaternionic_hopf(2);
    const std::vector<CheckSpec> specs = {{"t_zero", quat, 10, 1e-8, 42},
                                          {"bogus", quat, 10, 1e-8, 42},
                                          {"lemma3a", quat, 10, 1e-8, 42}};
    const VerificationReport rep = run_suite(specs);
    REQUIRE(rep.records.size() == 3);
    CHECK(rep.records[0].name == "t_zero"); // order preserved
    CHECK(rep.records[0].pass);
    CHECK_FALSE(rep.records[1].error.empty());
    CHECK_FALSE(rep.records[1].pass);
    CHECK(rep.records[2].pass);
    CHECK_FALSE(rep.pass); // the errored record fails the suite
}

TEST_CASE("default suite covers every model and stays green at desk scale") {
    const std::vector<CheckSpec> specs = default_suite(10, 1e-8, 42);
    CHECK(specs.size() >= 100);
    const VerificationReport rep = run_suite(specs);
    CHECK(rep.pass);
    for (const CheckRecord& rec : rep.records) {
        CAPTURE(rec.name);
        CAPTURE(rec.model);
        CHECK(rec.error.empty());
        CHECK(rec.pass);
    }
}

TEST_CASE("seeded fault is detected") {
    const SubmersionModel quat = SubmersionModel::quaternionic_hopf(2);
    testhooks::corrupt_a_tensor = true;
    const CheckRecord bad = run_check({"lemma3b", quat, 10, 1e-8, 42});
    testhooks::corrupt_a_tensor = false;
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_residual > 0.1);
    const CheckRecord good = run_check({"lemma3b", quat, 10, 1e-8, 42});
    CHECK(good.pass);
}

TEST_CASE("json report round trips") {
    const SubmersionModel ch = SubmersionModel::complex_hopf(2);
    const VerificationReport rep = run_suite({{"lemma3a", ch, 10, 1e-8, 42},
                                              {"classify_table", ch, 1, 1e-8, 42}});
    const nlohmann::json j = nlohmann::json::parse(report_json(rep));
    CHECK(j.at("suite").get<std::string>() == "phsub");
    CHECK(j.at("seed").get<std::uint64_t>() == 42);
    CHECK(j.at("pass").get<bool>() == rep.pass);
    CHECK(j.at("version").get<std::string>() == rep.version);
    const auto& checks = j.at("checks");
    REQUIRE(checks.size() == rep.records.size());
    for (size_t i = 0; i < rep.records.size(); ++i) {
        CHECK(checks[i].at("name").get<std::string>() == rep.records[i].name);
        CHECK(checks[i].at("model").get<std::string>() == rep.records[i].model);
        CHECK(checks[i].at("max_residual").get<double>() == rep.records[i].max_residual);
        CHECK(checks[i].at("pass").get<bool>() == rep.records[i].pass);
        CHECK(checks[i].at("paper_anchor").get<std::string>() == rep.records[i].anchor);
    }
    // the text table mentions every check once
    const std::string text = report_text(rep);
    CHECK(text.find("lemma3a") != std::string::npos);
    CHECK(text.find("classify_table") != std::string::npos);
}
