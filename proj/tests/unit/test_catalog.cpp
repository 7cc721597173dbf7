#include "hcsuper/algebras.hpp"
#include "hcsuper/catalog.hpp"
#include "hcsuper/errors.hpp"
#include "hcsuper/json_io.hpp"

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hcsuper;

namespace {

// Eigenvalue counts of ad(x) on the basis, by direct diagonal inspection; the
// group-type doubles only involve diagonal Cartan elements.
std::map<std::pair<long, int>, std::size_t> ad_spectrum(const LieSuperalgebra& g, const SparseVec& x) {
    std::map<std::pair<long, int>, std::size_t> out;
    const ScalarMatrix m = g.ad_matrix(x);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const long v = m.at(i, i).to_rational().get_num().get_si();
        ++out[{v, g.parity(i)}];
    }
    return out;
}

struct Cli {
    int code;
    std::string out;
    std::string err;
};

Cli cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(GroupType, Sl2RootsAndMultiplicities) {
    const auto pair = group_type_pair(make_sl2());
    const auto sys = restricted_roots(pair);
    ASSERT_EQ(sys.roots.size(), 2U);
    // oracle: eigenvalues of ad(h) on g0, each root space of g0 + g0 has dimension 2
    const auto g0 = make_sl2();
    const auto spec = ad_spectrum(g0, SparseVec{{g0.index_of("h"), Scalar(1)}});
    for (const auto& r : sys.roots) {
        const long v = r.coords.at(0).to_rational().get_num().get_si();
        EXPECT_EQ(r.m0(), 2 * spec.at({v, 0}));
        EXPECT_EQ(r.m1(), 0U);
    }
    EXPECT_EQ(sys.rho, (Vec{Scalar(2)}));
}

TEST(GroupType, Osp12RootsAndMultiplicities) {
    const auto pair = group_type_pair(make_osp12());
    const auto sys = restricted_roots(pair);
    const auto g0 = make_osp12();
    const auto spec = ad_spectrum(g0, SparseVec{{g0.index_of("h"), Scalar(1)}});
    ASSERT_EQ(sys.roots.size(), 4U);
    for (const auto& r : sys.roots) {
        const long v = r.coords.at(0).to_rational().get_num().get_si();
        const auto even = spec.find({v, 0});
        const auto odd = spec.find({v, 1});
        EXPECT_EQ(r.m0(), even == spec.end() ? 0 : 2 * even->second) << v;
        EXPECT_EQ(r.m1(), odd == spec.end() ? 0 : 2 * odd->second) << v;
    }
    ASSERT_TRUE(sys.find({Scalar(1)}));
    ASSERT_TRUE(sys.find({Scalar(2)}));
    EXPECT_EQ(sys.roots[*sys.find({Scalar(1)})].m1(), 2U);
    EXPECT_EQ(sys.roots[*sys.find({Scalar(2)})].m0(), 2U);
    EXPECT_EQ(even_weyl_group(sys).elements.size(), 2U);
}

TEST(GroupType, Gl11HasNoCertificate) { EXPECT_THROW(group_type_pair(make_gl(1, 1)), NoCertificate); }

TEST(GroupType, MissingCertificate) {
    LieSuperalgebra::Builder b({{"h", 0}});
    b.form(ScalarMatrix::identity(1));
    EXPECT_THROW(group_type_pair(b.build()), NoCertificate);
}

TEST(GroupType, OddCentreIsNotEvenType) {
    // sl(2) plus a central odd plane with a symplectic form
    LieSuperalgebra::Builder b({{"e", 0}, {"h", 0}, {"f", 0}, {"x", 1}, {"y", 1}});
    b.bracket("h", "e", {{"e", Scalar(2)}});
    b.bracket("h", "f", {{"f", Scalar(-2)}});
    b.bracket("e", "f", {{"h", Scalar(1)}});
    ScalarMatrix form(5, 5);
    form.set(0, 2, Scalar(1));
    form.set(2, 0, Scalar(1));
    form.set(1, 1, Scalar(2));
    form.set(3, 4, Scalar(1));
    form.set(4, 3, Scalar(-1));
    b.form(form);
    b.certificate({{SparseVec{{3, Scalar(1)}}, SparseVec{{4, Scalar(1)}}},
                   {{SparseVec{{0, Scalar(1)}}, SparseVec{{1, Scalar(1)}}, SparseVec{{2, Scalar(1)}}}}});
    const auto g0 = b.build();
    ASSERT_TRUE(verify_algebra(g0).empty()) << describe(g0, verify_algebra(g0).front());
    EXPECT_THROW(group_type_pair(g0), NotEvenType);
}

TEST(GroupType, Gl12IsEvenType) {
    const auto pair = group_type_pair(make_gl(1, 2));
    EXPECT_EQ(pair.a.size(), 3U);
    const auto sys = restricted_roots(pair);
    std::size_t odd = 0;
    for (const auto& d : sys.odd) {
        EXPECT_EQ(d.iso, IsoClass::Isotropic);
        ++odd;
    }
    EXPECT_EQ(odd, 2U);
}

TEST(Catalog, EveryEntryBuildsAndValidates) {
    ASSERT_EQ(catalog().size(), 6U);
    for (const auto& e : catalog()) {
        const auto d = build_entry(e.name);
        EXPECT_TRUE(verify_algebra(*d.pair.g).empty()) << e.name;
        EXPECT_TRUE(iwasawa_check(d.pair, d.system, 1).ok()) << e.name;
        EXPECT_TRUE(check_theta_on_roots(d.pair, d.system).empty()) << e.name;
    }
    EXPECT_THROW(build_entry("group-e8"), UnknownEntry);
}

TEST(Catalog, DefaultDegrees) {
    EXPECT_EQ(find_entry("rank1-aniso-q1").default_degree, 3U);
    EXPECT_EQ(find_entry("rank1-iso-q1").default_degree, 3U);
    EXPECT_EQ(find_entry("group-osp12").default_degree, 4U);
    EXPECT_EQ(find_entry("group-gl12").default_degree, 2U);
}

TEST(Verify, RankOneAnisotropic) {
    const auto r = verify_main_theorem("rank1-aniso-q1", 3);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
    ASSERT_EQ(r.rows.size(), 4U);
    EXPECT_EQ(r.rows[3].dim_image, 3U);
    EXPECT_EQ(r.rows[3].dim_J, 3U);
}

TEST(Verify, ThreadsDoNotChangeTheReport) {
    VerifyOptions one;
    VerifyOptions two;
    two.threads = 2;
    const auto a = report_to_json(verify_main_theorem("group-gl12", 2, one)).dump();
    const auto b = report_to_json(verify_main_theorem("group-gl12", 2, two)).dump();
    EXPECT_EQ(a, b);
}

TEST(Verify, PlantedDefectsFail) {
    VerifyOptions o;
    o.defect = Defect::WrongMultiplicity;
    const auto wrong = verify_main_theorem("rank1-aniso-q1", 3, o);
    EXPECT_FALSE(wrong.dims_match);
    o.defect = Defect::TruncatedN;
    const auto truncated = verify_main_theorem("group-sl2", 2, o);
    EXPECT_FALSE(truncated.ok());
    EXPECT_FALSE(truncated.iwasawa);
    EXPECT_FALSE(verify_algebra(planted_jacobi_defect()).empty());
}

TEST(Json, AlgebraRoundTrip) {
    for (const auto& g : {make_sl2(), make_osp12(), make_gl(1, 2), make_group_type(make_osp12())}) {
        const Json j = algebra_to_json(g);
        const auto h = algebra_from_json(j);
        ASSERT_EQ(h.dim(), g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i) {
            EXPECT_EQ(h.name(i), g.name(i));
            EXPECT_EQ(h.parity(i), g.parity(i));
            for (std::size_t k = 0; k < g.dim(); ++k) {
                EXPECT_EQ(h.bracket_basis(i, k), g.bracket_basis(i, k));
            }
        }
        EXPECT_EQ(h.has_form(), g.has_form());
        EXPECT_EQ(h.has_theta(), g.has_theta());
        EXPECT_EQ(algebra_to_json(h).dump(), j.dump());
    }
}

TEST(Json, LoaderRejectsUnknownFields) {
    Json j = algebra_to_json(make_sl2());
    j["comment"] = "x";
    EXPECT_THROW(algebra_from_json(j), ParseError);
    Json k = algebra_to_json(make_sl2());
    k["basis"][0]["weight"] = 1;
    EXPECT_THROW(algebra_from_json(k), ParseError);
    Json m = algebra_to_json(make_sl2());
    m["brackets"][0]["i"] = 99;
    EXPECT_THROW(algebra_from_json(m), ParseError);
}

TEST(Json, ScalarsAsStrings) {
    const Scalar s = Scalar::parse("1/2+3/4*sqrt(2)");
    EXPECT_EQ(scalar_from_json(scalar_to_json(s)), s);
    EXPECT_EQ(scalar_to_json(Scalar::parse("-6/4")), "-3/2");
}

TEST(Json, UEAElements) {
    auto g = std::make_shared<const LieSuperalgebra>(make_sl2());
    EnvelopingAlgebra env(g, BasisOrder::natural(3));
    // f e = e f - h in the order e < h < f
    const Json j = Json::parse(R"([{"monomial":[2,0],"coeff":"1"}])");
    const UEAElement u = uea_from_json(j, env);
    UEAElement expected = env.word_product({0, 2});
    expected -= env.generator(1);
    EXPECT_EQ(u, expected);
    EXPECT_EQ(uea_from_json(uea_to_json(u), env), u);
    EXPECT_THROW(uea_from_json(Json::parse(R"([{"monomial":[3],"coeff":"1"}])"), env), ParseError);
}

TEST(Json, Polynomials) {
    const std::vector<std::string> names{"h0", "A"};
    const APolynomial p = poly_from_text(R"([{"coeff":"2","exponents":{"h0":1,"A":2}},{"coeff":"-1","exponents":{}}])",
                                         names);
    APolynomial expected = Scalar(2) * APolynomial::variable(2, 0) * APolynomial::variable(2, 1).pow(2);
    expected -= APolynomial::constant(2, Scalar(1));
    EXPECT_EQ(p, expected);
    EXPECT_EQ(poly_from_json(poly_to_json(p, names), names), p);
    EXPECT_EQ(poly_from_text("A", names), APolynomial::variable(2, 1));
    EXPECT_EQ(poly_from_text(R"({"h0":2})", names), APolynomial::variable(2, 0).pow(2));
    EXPECT_THROW(poly_from_text("b", names), ParseError);
}

TEST(Cli, CatalogList) {
    const auto r = cli({"catalog", "list"});
    EXPECT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j["entries"].size(), 6U);
    EXPECT_EQ(j["entries"][0]["name"], "rank1-aniso-q1");
}

TEST(Cli, VerifyIsDeterministic) {
    const auto a = cli({"verify", "rank1-aniso-q1", "--degree", "3", "--seed", "5"});
    const auto b = cli({"verify", "rank1-aniso-q1", "--degree", "3", "--seed", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const Json j = Json::parse(a.out);
    EXPECT_TRUE(j["dims_match"].get<bool>());
    EXPECT_FALSE(j.contains("seconds"));
}

TEST(Cli, Membership) {
    const auto r = cli({"membership", "rank1-aniso-q1", "--poly", "a", "--ring", "J"});
    EXPECT_EQ(r.code, 0);
    EXPECT_FALSE(Json::parse(r.out)["member"].get<bool>());
    const auto s = cli({"membership", "rank1-aniso-q1", "--poly", R"({"a":2})", "--ring", "I"});
    EXPECT_TRUE(Json::parse(s.out)["member"].get<bool>());
    const auto t = cli({"membership", "rank1-aniso-q1", "--poly", "a", "--ring", "I"});
    EXPECT_FALSE(Json::parse(t.out)["member"].get<bool>());
}

TEST(Cli, Gamma) {
    // the degree-two element h-^2 of group-sl2, indices over the doubled basis
    const auto d = build_entry("group-sl2");
    const std::size_t h = d.pair.g->index_of("h-");
    const std::string element = R"([{"monomial":[)" + std::to_string(h) + "," + std::to_string(h) +
                                R"(],"coeff":"1"}])";
    const auto r = cli({"gamma", "group-sl2", "--element", element});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_FALSE(j["invariant"].get<bool>());
    EXPECT_EQ(j["projection"], Json::parse(R"([{"coeff":"1","exponents":{"h-":2}}])"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"verify"}).code, 2);
    EXPECT_EQ(cli({"verify", "nope"}).code, 2);
    EXPECT_EQ(cli({"membership", "rank1-aniso-q1", "--poly", "zz"}).code, 2);
    EXPECT_EQ(cli({"membership", "rank1-aniso-q1", "--poly", "a", "--ring", "K"}).code, 2);
    EXPECT_EQ(cli({"verify", "rank1-aniso-q1", "--plant", "wrong-multiplicity"}).code, 1);
    EXPECT_EQ(cli({"validate", "/nonexistent.json"}).code, 2);
    EXPECT_EQ(cli({"validate", "group-osp12"}).code, 0);
}

TEST(Cli, ValidateFiles) {
    const std::string good = testing::TempDir() + "hcsuper_good.json";
    const std::string bad = testing::TempDir() + "hcsuper_bad.json";
    std::ofstream(good) << algebra_to_json(make_osp12()).dump();
    std::ofstream(bad) << algebra_to_json(planted_jacobi_defect()).dump();
    EXPECT_EQ(cli({"validate", good}).code, 0);
    const auto r = cli({"validate", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("jacobi"), std::string::npos);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}
