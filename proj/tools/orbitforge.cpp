#include "orbit/error.hpp"
#include "orbit/harness.hpp"
#include "orbit/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace orbit;

namespace {

constexpr int kExitMismatch = 1;

int exit_code(ErrorCategory c)
{
    switch (c) {
    case ErrorCategory::Validation: return 2;
    case ErrorCategory::Precondition: return 3;
    case ErrorCategory::Internal: return 4;
    }
    return 4;
}

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

Side parse_side(const std::string& s)
{
    if (s == "adjoint") return Side::Adjoint;
    if (s == "coadjoint") return Side::Coadjoint;
    fail(ErrorCode::ParseError, "side must be adjoint or coadjoint");
}

bool looks_adjoint(const std::string& label) { return label.rfind("u{", 0) == 0; }

Json jordan_json(const Matrix& y)
{
    Json out = Json::object();
    for (const auto& [poly, sizes] : jordan_type(y)) out[poly] = sizes;
    return out;
}

Json pair_json(std::pair<int, int> p) { return Json::array({p.first, p.second}); }

Json classify_adjoint_doc(const Json& in, bool poincare, bool decimal)
{
    AdjointOrbitLabel label;
    Matrix y;
    std::string family;
    if (poincare && in.contains("X")) {
        Matrix x = matrix_from_json(in.at("X"));
        Vec v = in.contains("v") ? vec_from_json(in.at("v")) : Vec(x.rows());
        y = embed_semidirect(x, v, lorentz_g()).y;
        auto r = classify_poincare(y);
        label = r.label;
        family = r.family;
    } else if (poincare && !in.contains("gram")) {
        y = matrix_from_json(in.at("Y"));
        auto r = classify_poincare(y);
        label = r.label;
        family = r.family;
    } else {
        AdjointTriple t = triple_from_json(in);
        y = t.y;
        label = classify_adjoint(t);
        if (poincare) family = match_family(label);
    }
    Json out = {{"side", "adjoint"},
                {"label", label.str()},
                {"dim_index", pair_json(label.dim_index())},
                {"h", label.distinguished.height},
                {"jordan", jordan_json(y)}};
    const auto& d = label.distinguished;
    if (d.kind == DistinguishedLabel::Case::One) {
        out["mu2"] = rational_str(d.mu2);
        out["sign"] = d.sign;
        if (decimal) out["mu2_decimal"] = d.mu2.get_d();
    }
    if (!family.empty()) out["family"] = family;
    return out;
}

Json classify_coadjoint_doc(const Json& in, bool poincare, bool decimal)
{
    CoTuple t;
    if (in.contains("M")) {
        Json f = in;
        if (!f.contains("littleGram")) {
            if (!poincare) fail(ErrorCode::ParseError, "functional needs littleGram outside --group poincare");
            f["littleGram"] = to_json(lorentz_g());
        }
        t = functional_to_tuple(functional_from_json(f));
    } else {
        t = cotuple_from_json(in);
    }
    CoadjointOrbitLabel label;
    std::string family;
    if (poincare) {
        auto r = classify_poincare(t);
        label = r.label;
        family = r.family;
    } else {
        label = classify_cotuple(t);
    }
    Json out = {{"side", "coadjoint"},
                {"label", label.str()},
                {"dim_index", pair_json(label.dim_index())},
                {"jordan", jordan_json(t.y)}};
    const auto& c = label.cotype;
    if (c.kind == CotypeLabel::Kind::OddAffine || c.kind == CotypeLabel::Kind::OneDim) {
        out[c.kind == CotypeLabel::Kind::OneDim ? "a2" : "mu2"] = rational_str(c.q);
        out["sign"] = c.sign;
        if (decimal) out["q_decimal"] = c.q.get_d();
    }
    if (!family.empty()) out["family"] = family;
    return out;
}

void add_decimals(Json& doc, const Matrix& gram, const Matrix& y, const Vec& v, const char* vkey)
{
    doc["gram_decimal"] = decimal_json(gram);
    doc["Y_decimal"] = decimal_json(y);
    doc[std::string(vkey) + "_decimal"] = decimal_json(v);
}

std::optional<std::pair<int, int>> parse_signature(const std::string& s)
{
    if (s.empty()) return std::nullopt;
    auto comma = s.find(',');
    if (comma == std::string::npos) fail(ErrorCode::ParseError, "signature must be 'neg,pos'");
    try {
        int neg = std::stoi(s.substr(0, comma));
        int pos = std::stoi(s.substr(comma + 1));
        if (neg < 0 || pos < 0) throw std::invalid_argument("negative");
        return std::pair{neg + pos, neg};
    } catch (const std::logic_error&) {
        fail(ErrorCode::ParseError, "signature must be 'neg,pos'");
    }
}

Json family_json(const OrbitFamily& f)
{
    MeasuredFamily m = measure_family(f);
    Json rest = Json::array();
    for (auto p : m.rest_summands) rest.push_back(pair_json(p));
    return {{"id", f.id},
            {"label", f.label_template()},
            {"dim", Json::array({f.head_printed.first, f.rest_printed.first})},
            {"index", Json::array({f.head_printed.second, f.rest_printed.second})},
            {"measured_dim", Json::array({m.head.first, m.rest.first})},
            {"measured_index", Json::array({m.head.second, m.rest.second})},
            {"rest_summands", rest},
            {"partner", f.partner}};
}

Json rows_json(const std::vector<TableRow>& rows)
{
    Json out = Json::array();
    for (const auto& r : rows) out.push_back({{"label", r.label_template}, {"dim", r.dim}, {"index", r.index}});
    return out;
}

Json suite_json(const SuiteReport& r)
{
    Json fails = Json::array();
    for (const auto& t : r.trials)
        if (!t.ok) fails.push_back({{"trial", t.index}, {"family", t.family}, {"expected", t.expected}, {"got", t.got}});
    return {{"suite", r.name}, {"trials", r.trials.size()}, {"failures", r.failures}, {"mismatches", fails}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact classification of adjoint and coadjoint orbits of affine orthogonal groups.\n"
                 "Coadjoint functionals use the trace pairing l(X, z) = tr(M X) + p.z on the stabilizer\n"
                 "algebra; p is taken as given, with no factor-of-2 rescaling."};
    app.require_subcommand(1);
    bool decimal = false;
    app.add_flag("--decimal", decimal, "Add approximate decimals next to exact fields");

    auto* classify = app.add_subcommand("classify", "Classify a triple, tuple or functional from a JSON file");
    std::string side_s, in_path, group;
    classify->add_option("--side", side_s, "adjoint|coadjoint")->required();
    classify->add_option("--in", in_path, "Input JSON file")->required();
    classify->add_option("--group", group, "Specialization; only 'poincare' is known");

    auto* synth = app.add_subcommand("synthesize", "Build a representative for a label");
    std::string label_s, signature_s;
    synth->add_option("--label", label_s, "Orbit label in the canonical grammar")->required();
    synth->add_option("--signature", signature_s, "Target signature 'neg,pos'");

    auto* orbits = app.add_subcommand("orbits", "Orbit family tables");
    auto* list = orbits->add_subcommand("list", "List the families of a group");
    orbits->require_subcommand(1);
    std::string list_group = "poincare", list_side = "adjoint";
    list->add_option("--group", list_group, "Only 'poincare' is known");
    list->add_option("--side", list_side, "adjoint|coadjoint");

    auto* convert = app.add_subcommand("convert", "Convert between tuples and functionals");
    bool f2t = false, t2f = false;
    std::string convert_in;
    convert->add_flag("--functional-to-tuple", f2t);
    convert->add_flag("--tuple-to-functional", t2f);
    convert->add_option("--in", convert_in, "Input JSON file")->required();

    auto* bij = app.add_subcommand("bijection", "Partner label under the adjoint/coadjoint correspondence");
    std::string bij_label;
    bij->add_option("--label", bij_label, "Orbit label")->required();

    auto* verify = app.add_subcommand("verify", "Randomized invariance suite over the Poincare families");
    std::uint64_t seed = seed_from_env();
    int trials = 200;
    bool serial = false;
    verify->add_option("--seed", seed, "Seed (default: ORBITFORGE_SEED or 7)");
    verify->add_option("--trials", trials, "Trials per family instance");
    verify->add_flag("--serial", serial, "Run trials on one thread");

    for (auto* sub : {classify, synth, orbits, list, convert, bij, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Json out;
        int rc = 0;
        if (*classify) {
            if (!group.empty() && group != "poincare") fail(ErrorCode::ParseError, "unknown group '" + group + "'");
            Json in = read_json(in_path);
            bool p = group == "poincare";
            out = parse_side(side_s) == Side::Adjoint ? classify_adjoint_doc(in, p, decimal)
                                                      : classify_coadjoint_doc(in, p, decimal);
        } else if (*synth) {
            auto target = parse_signature(signature_s);
            if (looks_adjoint(label_s)) {
                AdjointOrbitLabel l = AdjointOrbitLabel::parse(label_s);
                AdjointTriple t = synthesize_adjoint(l, target);
                out = to_json(t);
                out["label"] = l.str();
                if (decimal) add_decimals(out, t.gram, t.y, t.v0, "v0");
            } else {
                CoadjointOrbitLabel l = CoadjointOrbitLabel::parse(label_s);
                CoTuple t = synthesize_cotype(l, target);
                out = to_json(t);
                out["label"] = l.str();
                if (decimal) add_decimals(out, t.gram, t.y, t.v, "v");
            }
        } else if (*orbits) {
            if (list_group != "poincare") fail(ErrorCode::ParseError, "unknown group '" + list_group + "'");
            Side side = parse_side(list_side);
            Json fams = Json::array();
            for (const auto& f : enumerate_families(side)) fams.push_back(family_json(f));
            out = {{"group", "poincare"}, {"side", list_side}, {"families", fams}};
            if (side == Side::Adjoint) {
                out["distinguished_candidates"] = rows_json(distinguished_candidates());
                out["type_candidates"] = rows_json(type_candidates());
            } else {
                out["cotype_candidates"] = rows_json(cotype_candidates());
                out["type_candidates"] = rows_json(cotype_type_candidates());
            }
        } else if (*convert) {
            if (f2t == t2f) fail(ErrorCode::ParseError, "give exactly one of --functional-to-tuple, --tuple-to-functional");
            Json in = read_json(convert_in);
            if (f2t) {
                CoTuple t = functional_to_tuple(functional_from_json(in));
                out = to_json(t);
                if (decimal) add_decimals(out, t.gram, t.y, t.v, "v");
            } else {
                Functional f = tuple_to_functional(cotuple_from_json(in));
                out = to_json(f);
                if (decimal) {
                    out["M_decimal"] = decimal_json(f.m);
                    out["p_decimal"] = decimal_json(f.p);
                }
            }
        } else if (*bij) {
            if (looks_adjoint(bij_label)) {
                AdjointOrbitLabel l = AdjointOrbitLabel::parse(bij_label);
                out = {{"label", l.str()}, {"partner", adjoint_to_coadjoint(l).str()}};
            } else {
                CoadjointOrbitLabel l = CoadjointOrbitLabel::parse(bij_label);
                out = {{"label", l.str()}, {"partner", coadjoint_to_adjoint(l).str()}};
            }
        } else if (*verify) {
            SuiteOptions opt{seed, trials, !serial};
            Json suites = Json::array();
            std::size_t failures = 0;
            for (const auto& r : {adjoint_invariance_suite(opt), coadjoint_invariance_suite(opt),
                                  two_chain_determinant_suite(seed, 50, !serial)}) {
                suites.push_back(suite_json(r));
                failures += r.failures;
            }
            auto stats = parameter_check_stats();
            out = {{"seed", seed},
                   {"suites", suites},
                   {"parameter_checks", stats.checks},
                   {"parameter_failures", stats.failures}};
            if (failures > 0 || stats.failures > 0) rc = kExitMismatch;
        }
        std::cout << out.dump(2) << "\n";
        return rc;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e.category());
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 4;
    }
}
