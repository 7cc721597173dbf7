#include "cli.hpp"

#include "hcsuper/errors.hpp"
#include "hcsuper/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hcsuper {

namespace {

struct Options {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string entry;
    std::string target;
    std::string direction;
    std::string element;
    std::string poly;
    std::string ring = "J";
    std::string plant = "none";
    std::optional<unsigned> degree;
    bool timing = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int catalog_list(std::ostream& out) {
    Json entries = Json::array();
    for (const auto& e : catalog()) {
        entries.push_back({{"name", e.name},
                           {"construction", e.construction == Construction::GroupType ? "group_type" : "rank_one"},
                           {"description", e.description},
                           {"default_degree", e.default_degree}});
    }
    emit(out, {{"entries", entries}});
    return kExitOk;
}

bool is_entry(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.name == name) {
            return true;
        }
    }
    return false;
}

int validate(const Options& o, std::ostream& out) {
    if (is_entry(o.target)) {
        const PairData d = build_entry(o.target);
        const auto violations = verify_algebra(*d.pair.g);
        const auto iw = iwasawa_check(d.pair, d.system, o.seed);
        const auto theta = check_theta_on_roots(d.pair, d.system);
        const bool ok = violations.empty() && iw.ok() && theta.empty();
        emit(out, {{"target", o.target},
                   {"valid", ok},
                   {"violations", violations_to_json(*d.pair.g, violations)},
                   {"iwasawa_failures", iw.failures},
                   {"theta_failures", theta}});
        return ok ? kExitOk : kExitFailed;
    }
    std::ifstream in(o.target);
    if (!in) {
        throw ParseError("cannot open '" + o.target + "' and it is not a catalog entry");
    }
    const Json j = Json::parse(in);
    const LieSuperalgebra g = algebra_from_json(j);
    const auto violations = verify_algebra(g);
    emit(out, {{"target", o.target}, {"valid", violations.empty()}, {"violations", violations_to_json(g, violations)}});
    return violations.empty() ? kExitOk : kExitFailed;
}

int roots(const Options& o, std::ostream& out) {
    std::optional<Vec> direction;
    if (!o.direction.empty()) {
        const Json j = Json::parse(o.direction);
        if (!j.is_array()) {
            throw ParseError("--direction expects a JSON list of scalars");
        }
        direction.emplace();
        for (const auto& s : j) {
            direction->push_back(scalar_from_json(s));
        }
    }
    emit(out, roots_to_json(build_entry(o.entry, direction)));
    return kExitOk;
}

int invariants(const Options& o, std::ostream& out) {
    const PairData d = build_entry(o.entry);
    const unsigned degree = o.degree.value_or(d.default_degree);
    const HarishChandra hc(d.pair, d.system);
    const auto basis = hc.invariants(degree);
    const auto names = d.a_names();
    Json inv = Json::array();
    for (const auto& u : basis.invariants) {
        inv.push_back({{"element", uea_to_json(hc.to_original(u))}, {"gamma", poly_to_json(hc.gamma(u), names)}});
    }
    Json ker = Json::array();
    for (const auto& u : basis.companion) {
        ker.push_back(uea_to_json(hc.to_original(u)));
    }
    emit(out, {{"entry", d.name}, {"degree", degree}, {"a_basis", names}, {"invariants", inv}, {"kernel", ker}});
    return kExitOk;
}

int gamma(const Options& o, std::ostream& out) {
    const PairData d = build_entry(o.entry);
    const HarishChandra hc(d.pair, d.system);
    const UEAElement u = hc.transport(uea_from_json(Json::parse(o.element), hc.original()));
    const auto names = d.a_names();
    emit(out, {{"entry", d.name},
               {"a_basis", names},
               {"invariant", hc.is_invariant(u)},
               {"projection", poly_to_json(hc.project_to_a(u), names)},
               {"gamma", poly_to_json(hc.gamma(u), names)}});
    return kExitOk;
}

int membership_cmd(const Options& o, std::ostream& out) {
    const PairData d = build_entry(o.entry);
    const auto names = d.a_names();
    const APolynomial p = poly_from_text(o.poly, names);
    const bool member = membership(o.ring == "I" ? Space::I : Space::J, p, d.system, d.weyl);
    emit(out, {{"entry", d.name}, {"ring", o.ring}, {"poly", poly_to_json(p, names)}, {"member", member}});
    return kExitOk;
}

int verify(const Options& o, std::ostream& out) {
    const PairData d = build_entry(o.entry);
    VerifyOptions vo;
    vo.seed = o.seed;
    vo.threads = o.threads;
    if (o.plant == "truncated-n") {
        vo.defect = Defect::TruncatedN;
    } else if (o.plant == "wrong-multiplicity") {
        vo.defect = Defect::WrongMultiplicity;
    }
    const auto report = verify_main_theorem(d, o.degree.value_or(d.default_degree), vo);
    emit(out, report_to_json(report, o.timing));
    return report.ok() ? kExitOk : kExitFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harish-Chandra homomorphism for symmetric superpairs", "hcsuper"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "seed for randomized sampling");
    app.add_option("--threads", o.threads, "worker threads for verify")->check(CLI::PositiveNumber);

    auto* cat = app.add_subcommand("catalog", "built-in entries");
    cat->add_subcommand("list", "names of the built-in entries");
    cat->require_subcommand(1);

    auto* val = app.add_subcommand("validate", "validate an algebra file or a catalog entry");
    val->add_option("target", o.target, "JSON algebra file or entry name")->required();

    auto* rts = app.add_subcommand("roots", "restricted roots, multiplicities and rho");
    rts->add_option("entry", o.entry)->required();
    rts->add_option("--direction", o.direction, "JSON list of weights on the a basis");

    auto* inv = app.add_subcommand("invariants", "basis of U(g)^k up to a degree");
    inv->add_option("entry", o.entry)->required();
    inv->add_option("--degree", o.degree);

    auto* gam = app.add_subcommand("gamma", "Harish-Chandra projection of an element");
    gam->add_option("entry", o.entry)->required();
    gam->add_option("--element", o.element, "JSON list of {monomial, coeff}")->required();

    auto* mem = app.add_subcommand("membership", "test a polynomial on a* for I(a) or J(a)");
    mem->add_option("entry", o.entry)->required();
    mem->add_option("--poly", o.poly, "JSON exponent map over the a basis names")->required();
    mem->add_option("--ring", o.ring)->check(CLI::IsMember({"I", "J"}));

    auto* ver = app.add_subcommand("verify", "check the image and kernel of Gamma up to a degree");
    ver->add_option("entry", o.entry)->required();
    ver->add_option("--degree", o.degree);
    ver->add_option("--plant", o.plant, "negative control")
        ->check(CLI::IsMember({"none", "truncated-n", "wrong-multiplicity"}));
    ver->add_flag("--timing", o.timing, "include wall time in the report");

    std::vector<std::string> argv{"hcsuper"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<char*> ptrs;
    for (auto& a : argv) {
        ptrs.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitInput;
    }

    try {
        if (cat->parsed()) {
            return catalog_list(out);
        }
        if (val->parsed()) {
            return validate(o, out);
        }
        if (rts->parsed()) {
            return roots(o, out);
        }
        if (inv->parsed()) {
            return invariants(o, out);
        }
        if (gam->parsed()) {
            return gamma(o, out);
        }
        if (mem->parsed()) {
            return membership_cmd(o, out);
        }
        return verify(o, out);
    } catch (const Json::exception& e) {
        err << "error: bad JSON: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace hcsuper
