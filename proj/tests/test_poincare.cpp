#include "orbit/error.hpp"
#include "orbit/poincare.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace orbit;

namespace {

using DI = std::pair<int, int>;

DI sum(DI a, DI b) { return {a.first + b.first, a.second + b.second}; }

}  // namespace

TEST(Tables, AdjointFamiliesAsPrinted)
{
    const auto& fams = enumerate_families(Side::Adjoint);
    ASSERT_EQ(fams.size(), 14u);
    std::vector<std::string> ids;
    for (const auto& f : fams) ids.push_back(f.id);
    EXPECT_EQ(ids, (std::vector<std::string>{"A1a", "A2a", "A2b", "A3a", "A3b", "A3c", "A3d", "A4a", "A4b", "A5a", "A5b",
                                             "A5c", "A5d", "A5e"}));
    const auto& a1 = family_by_id("A1a");
    EXPECT_EQ(a1.head_printed, DI(5, 3));
    EXPECT_EQ(a1.rest_printed, DI(1, 1));
    for (const auto& f : fams) {
        EXPECT_EQ(sum(f.head_printed, f.rest_printed), DI(6, 4)) << f.id;
        MeasuredFamily m = measure_family(f);
        EXPECT_EQ(m.head, f.head_printed) << f.id;
        EXPECT_EQ(m.rest, f.rest_printed) << f.id;
    }
}

TEST(Tables, CoadjointFamiliesAsPrinted)
{
    const auto& fams = enumerate_families(Side::Coadjoint);
    ASSERT_EQ(fams.size(), 14u);
    const auto& c4 = family_by_id("C4");
    EXPECT_EQ(c4.label_template(), "N-_3(0), mu2={mu2} + D+_2(0)");
    EXPECT_EQ(c4.head_printed, DI(3, 2));
    EXPECT_EQ(c4.rest_printed, DI(3, 2));
    for (const auto& f : fams) {
        EXPECT_EQ(sum(f.head_printed, f.rest_printed), DI(6, 4)) << f.id;
        MeasuredFamily m = measure_family(f);
        EXPECT_EQ(m.head, f.head_printed) << f.id;
        EXPECT_EQ(m.rest, f.rest_printed) << f.id;
        EXPECT_EQ(family_by_id(f.partner).partner, f.id);
    }
    EXPECT_THROW(family_by_id("Z9"), Error);
}

TEST(Tables, SupportingRowsMeasureAsPrinted)
{
    EXPECT_EQ(distinguished_candidates().size(), 6u);
    bool non_extending = false;
    for (const auto& r : distinguished_candidates()) {
        AdjointOrbitLabel l = AdjointOrbitLabel::parse(instantiate(r.label_template, {}));
        EXPECT_EQ(multiset_dim_index(l.distinguished.underlying()), DI(r.dim, r.index)) << r.label_template;
        non_extending |= r.label_template == "u{D+_4(0), mu2={mu2}}" && r.dim == 5 && r.index == 2;
    }
    EXPECT_TRUE(non_extending);
    for (const auto* rows : {&type_candidates(), &cotype_type_candidates()})
        for (const auto& r : *rows)
            EXPECT_EQ(label_dim_index(parse_type_token(instantiate(r.label_template, {}))), DI(r.dim, r.index))
                << r.label_template;
    EXPECT_EQ(cotype_candidates().size(), 5u);
    for (const auto& r : cotype_candidates()) {
        CoadjointOrbitLabel l = CoadjointOrbitLabel::parse(instantiate(r.label_template, {}));
        EXPECT_EQ(l.dim_index(), DI(r.dim, r.index)) << r.label_template;
    }
}

TEST(Tables, DistinguishedCandidateWithoutCompletion)
{
    // (5,2) leaves (1,2) for the rest, which no type fills.
    for (const auto& f : enumerate_families(Side::Adjoint)) EXPECT_NE(f.head, "u{D+_4(0), mu2={mu2}}");
}

TEST(Tables, DimensionIndexPairAudit)
{
    std::set<std::pair<DI, std::vector<DI>>> from_families;
    for (const auto& f : enumerate_families(Side::Adjoint)) {
        MeasuredFamily m = measure_family(f);
        auto rest = m.rest_summands;
        std::sort(rest.begin(), rest.end());
        from_families.insert({m.head, rest});
    }
    std::set<std::pair<DI, std::vector<DI>>> from_list;
    for (const auto& row : dimension_index_pairs())
        for (auto combo : row.combinations) {
            std::sort(combo.begin(), combo.end());
            from_list.insert({row.distinguished, combo});
        }
    EXPECT_EQ(from_families, from_list);
}

TEST(Poincare, WorkedExample)
{
    for (Rational alpha : {Rational(1), Rational(3, 2), Rational(1, 3)}) {
        auto r = classify_poincare(example_normal_form(alpha));
        EXPECT_EQ(r.family, "A1a");
        EXPECT_EQ(r.label.distinguished.mu2, alpha * alpha);
        EXPECT_EQ(r.label.distinguished.sign, -1);
        EXPECT_EQ(r.label.rest.str(), "D-_0(0)");
    }
    EXPECT_EQ(classify_poincare(example_normal_form(Rational(3, 2))).label.str(), "u{D-_4(0), mu2=9/4} + D-_0(0)");
    EXPECT_THROW(example_normal_form(0), Error);
}

TEST(Poincare, CatalogSelfClassifies)
{
    for (const FamilyParams& p : {FamilyParams{}, FamilyParams{Rational(9, 4), Rational(1, 4), Rational(9, 4)},
                                  FamilyParams{2, 3, 5}}) {
        auto cat = normal_form_catalog(p);
        ASSERT_EQ(cat.size(), 14u);
        for (const auto& e : cat) {
            auto r = classify_poincare(e.tuple);
            EXPECT_EQ(r.family, e.family) << e.number;
            EXPECT_EQ(r.label, e.expected) << e.number;
            EXPECT_EQ(e.family, "C" + std::to_string(e.number));
        }
    }
}

TEST(Poincare, CatalogEntries)
{
    auto cat = normal_form_catalog({Rational(9, 4), 1, Rational(1, 4)});
    ExactScalar r = ExactScalar::sqrt(Rational(1, 2));
    // entry 1: z = -(mu/sqrt2) e3, b = (mu/sqrt2) e2, v = (-e1 + e4)/sqrt2
    const auto& e1 = cat[0];
    ExactScalar mu(Rational(3, 2));
    EXPECT_EQ(e1.z, (Vec{0, 0, -(mu * r)}));
    EXPECT_EQ(e1.b, (Vec{0, mu * r, 0}));
    EXPECT_EQ(e1.v, (Vec{-r, 0, 0, r}));
    // entry 5: z = beta e1, b = 0, v = mu e1
    const auto& e5 = cat[4];
    EXPECT_EQ(e5.z, (Vec{ExactScalar(Rational(1, 2)), 0, 0}));
    EXPECT_EQ(e5.v, (Vec{mu, 0, 0, 0}));
    // entry 14 is zero
    EXPECT_TRUE(cat[13].ytilde.is_zero());
    EXPECT_TRUE(vec_is_zero(cat[13].v));
    EXPECT_EQ(cat[13].expected.str(), "N_2(0,0) + D-_0(0) + D-_0(0) + D-_0(0) + D+_0(0)");
}

TEST(Poincare, LittleLorentzElement)
{
    Matrix y = little_lorentz_element({1, 2, 3}, {4, 5, 6});
    EXPECT_TRUE(in_algebra(y, lorentz_g()));
    EXPECT_EQ(y(0, 1), ExactScalar(-3));
    EXPECT_EQ(y(3, 2), ExactScalar(6));
}

TEST(Poincare, FunctionalInputs)
{
    Functional zero{Matrix(4, 4), Vec(4), lorentz_g()};
    EXPECT_EQ(classify_poincare(zero).family, "C14");
    Functional light{Matrix(4, 4), Vec{ExactScalar(1), 0, 0, ExactScalar(1)}, lorentz_g()};
    auto r = classify_poincare(light);
    EXPECT_TRUE(r.label.cotype.affine());
    EXPECT_EQ(r.family, "C3");
    Functional wrong{Matrix(4, 4), Vec(4), Matrix::identity(4)};
    EXPECT_THROW(classify_poincare(wrong), Error);
}

TEST(Poincare, NoFamilyMatchOutsideTheTables)
{
    AdjointOrbitLabel l = AdjointOrbitLabel::parse("u{D_3(0,0)}");
    try {
        match_family(l);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoFamilyMatch);
        EXPECT_EQ(e.category(), ErrorCategory::Internal);
    }
}

TEST(Poincare, InstantiateFillsSlots)
{
    EXPECT_EQ(instantiate("u{D+_2(0), mu2={mu2}} + D-_0(IP b={b}) + D_0(RP a={a})", {Rational(1, 4), 2, 3}),
              "u{D+_2(0), mu2=1/4} + D-_0(IP b=3) + D_0(RP a=2)");
    EXPECT_TRUE(family_by_id("A3b").uses("b"));
    EXPECT_FALSE(family_by_id("A3b").uses("a"));
}
