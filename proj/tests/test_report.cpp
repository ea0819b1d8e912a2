#include "doctest.h"

#include "cnaf/apx.hpp"
#include "cnaf/errors.hpp"
#include "cnaf/report.hpp"

using namespace cnaf;

TEST_CASE("run_extensions: self attacker, both engines agree") {
    Framework fw = parse_tgf("x\n#\nx x\n");
    RunReport r = run_extensions(fw, "self", "complete", "both", 20);
    CHECK(r.divergences.empty());
    REQUIRE(r.labellings.size() == 1);
    CHECK(r.labellings[0].at("x") == Label::Und);
    REQUIRE(r.extensions.size() == 1);
    CHECK(r.extensions[0].empty());
    CHECK(r.timing_ms >= 0.0);
}

TEST_CASE("run_extensions: stable on the mutual pair") {
    Framework fw = parse_apx("arg(a). arg(b). att(a,b). att(b,a).");
    RunReport r = run_extensions(fw, "mutual", "stable", "cn", 20);
    REQUIRE(r.extensions.size() == 2);
    CHECK(r.extensions[0] == std::set<std::string>{"a"});
    CHECK(r.extensions[1] == std::set<std::string>{"b"});
}

TEST_CASE("run_extensions: grounded on the chain") {
    Framework fw = parse_tgf("a\nb\nc\n#\na b\nb c\n");
    RunReport r = run_extensions(fw, "chain", "grounded", "both", 20);
    CHECK(r.divergences.empty());
    REQUIRE(r.extensions.size() == 1);
    CHECK(r.extensions[0] == std::set<std::string>{"a", "c"});
}

TEST_CASE("run_extensions: preferred on the mutual pair") {
    Framework fw = parse_apx("arg(a). arg(b). att(a,b). att(b,a).");
    RunReport r = run_extensions(fw, "mutual", "preferred", "both", 20);
    CHECK(r.divergences.empty());
    CHECK(r.extensions.size() == 2);
}

TEST_CASE("run_extensions: every framework family") {
    // joint and disjunctive and higher run both engines; adf and bipolar
    // have no labelling oracle and run the CN engine.
    Framework joint = parse_apx("arg(a). arg(b). arg(x). jatt([a,b],x).");
    CHECK(run_extensions(joint, "j", "complete", "both", 20).divergences.empty());

    Framework disj = parse_apx("arg(a). arg(b). arg(x). att(a,b). datt(a,[x,b]).");
    CHECK(run_extensions(disj, "d", "complete", "both", 20).divergences.empty());

    Framework higher = parse_apx("arg(z). arg(x). arg(y). natt(al,z,x). hatt(be,y,al).");
    RunReport hr = run_extensions(higher, "h", "complete", "both", 20);
    CHECK(hr.divergences.empty());
    REQUIRE(hr.labellings.size() == 1);
    // Labellings are restricted to the declared arguments.
    CHECK(hr.labellings[0].labels.size() == 3);

    Framework adf = parse_apx("arg(a). ac(a,\"T\").");
    CHECK(run_extensions(adf, "adf", "complete", "cn", 20).extensions.size() == 1);
    CHECK_THROWS_AS(run_extensions(adf, "adf", "complete", "oracle", 20),
                    DomainError);

    Framework bip = parse_apx("arg(a). arg(b). supp(a,b).");
    RunReport br = run_extensions(bip, "bip", "complete", "cn", 20);
    REQUIRE(br.extensions.size() == 1);
    CHECK(br.extensions[0] == std::set<std::string>{"a", "b"});
}

TEST_CASE("run_models: equivalent chains share one model") {
    Framework a2 = parse_tgf("x\ny\nz\n#\nx y\ny z\n");
    Framework a3 = parse_apx(
        "arg(x). arg(y). arg(z). att(x,y). att(z,y). att(y,z).");
    RunReport r2 = run_models(a2, "a2", 20);
    RunReport r3 = run_models(a3, "a3", 20);
    REQUIRE(r2.models.size() == 1);
    CHECK(r2.models == r3.models);
    CHECK(r2.extensions[0] == std::set<std::string>{"x", "z"});
}

TEST_CASE("JSON output is schema-stable and deterministic") {
    Framework fw = parse_apx("arg(a). arg(b). att(a,b). att(b,a).");
    RunReport r = run_extensions(fw, "mutual", "complete", "both", 20);
    nlohmann::json j1 = report_json(r);
    nlohmann::json j2 = report_json(r);
    CHECK(j1.dump() == j2.dump());
    for (const char* key : {"input", "family", "semantics", "engine", "models",
                            "labellings", "extensions", "timing_ms", "divergences"})
        CHECK(j1.contains(key));

    CnModel m;
    m.states["x"] = Label::In;
    m.states["y"] = Label::Out;
    CHECK(model_json(m).dump() == R"({"model":{"x":"in","y":"out"}})");

    TwoWorldModel tw;
    tw.valuation["p"] = {false, true};
    CHECK(countermodel_json(tw).dump() == R"({"p":[0,1]})");
}

TEST_CASE("extensions are exactly the in-sets of the labellings") {
    Framework fw = parse_apx(
        "arg(a). arg(b). arg(c). att(a,b). att(b,a). att(b,c).");
    RunReport r = run_extensions(fw, "x", "complete", "both", 20);
    REQUIRE(r.extensions.size() == r.labellings.size());
    for (std::size_t i = 0; i < r.labellings.size(); ++i)
        CHECK(r.extensions[i] == r.labellings[i].in_set());
}

TEST_CASE("invalid frameworks and unknown semantics are rejected") {
    Af af;
    af.arguments = {"a"};
    af.attacks = {{"a", "ghost"}};
    CHECK_THROWS_AS(run_extensions(af, "bad", "complete", "both", 20), DomainError);

    Framework fw = parse_apx("arg(a).");
    CHECK_THROWS_AS(run_extensions(fw, "x", "semistable", "both", 20), DomainError);
    CHECK_THROWS_AS(run_extensions(fw, "x", "complete", "psychic", 20), DomainError);
}
