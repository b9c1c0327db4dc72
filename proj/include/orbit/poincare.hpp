#pragma once

#include "orbit/coadjoint.hpp"

namespace orbit {

enum class Side { Adjoint, Coadjoint };

/// diag(-1,-1,-1,1)
Matrix lorentz_g();
/// Standard 6x6 Gram around lorentz_g().
Matrix poincare_k();

/// Numeric slots of a family template: {mu2}, {a} (RP), {b} (IP).
struct FamilyParams {
    Rational mu2 = 1;
    Rational a = 1;
    Rational b = 1;
};
std::string instantiate(const std::string& label_template, const FamilyParams& p);

/// A table row as printed: a label template with its dim and index columns.
struct TableRow {
    std::string label_template;
    int dim;
    int index;
};
/// Indecomposable distinguished candidates.
const std::vector<TableRow>& distinguished_candidates();
/// Indecomposable type candidates (the eps row of height 1 IP appears once per sign).
const std::vector<TableRow>& type_candidates();
/// Indecomposable affine cotype candidates.
const std::vector<TableRow>& cotype_candidates();
/// Type summands possible next to an affine cotype.
const std::vector<TableRow>& cotype_type_candidates();

struct OrbitFamily {
    std::string id;
    Side side;
    std::string head;                   // distinguished part or cotype
    std::vector<std::string> rest;      // type tokens
    std::pair<int, int> head_printed;   // (dim, index) as printed
    std::pair<int, int> rest_printed;
    std::string partner;                // family id on the other side

    std::string label_template() const;
    bool uses(const std::string& slot) const;
};
const std::vector<OrbitFamily>& enumerate_families(Side side);
const OrbitFamily& family_by_id(const std::string& id);

/// (dim, index) of head and rest, measured on synthesized blocks.
struct MeasuredFamily {
    std::pair<int, int> head;
    std::pair<int, int> rest;
    std::vector<std::pair<int, int>> rest_summands;
};
MeasuredFamily measure_family(const OrbitFamily& f);

/// Rest-summand (dim, index) combinations per distinguished (dim, index).
struct PairListRow {
    std::pair<int, int> distinguished;
    std::vector<std::vector<std::pair<int, int>>> combinations;
};
const std::vector<PairListRow>& dimension_index_pairs();

/// Family id whose template matches the label with numeric slots erased.
/// Throws NoFamilyMatch.
std::string match_family(const AdjointOrbitLabel& label);
std::string match_family(const CoadjointOrbitLabel& label);

struct PoincareAdjointResult {
    AdjointOrbitLabel label;
    std::string family;
};
struct PoincareCoadjointResult {
    CoadjointOrbitLabel label;
    std::string family;
};
/// y is 6x6 in the stabilizer of e5 for poincare_k().
PoincareAdjointResult classify_poincare(const Matrix& y);
PoincareAdjointResult classify_poincare(const Matrix& x, const Vec& translation);
PoincareCoadjointResult classify_poincare(const CoTuple& t);
PoincareCoadjointResult classify_poincare(const Functional& f);

/// The worked adjoint normal form with modulus alpha, whose expected label is
/// u{D-_4(0), mu2=alpha^2} + D-_0(0).
Matrix example_normal_form(const Rational& alpha);

/// Little-cotype normal forms, one per coadjoint family, with the assembled
/// 6x6 tuple [[0,-v^T G,0],[0,Yt,v],[0,0,0]] over poincare_k().
struct CatalogEntry {
    int number;
    std::string family;
    Vec z, b;          // Yt = [[hat z, b],[b^T, 0]]
    Matrix ytilde;
    Vec v;
    CoTuple tuple;
    CoadjointOrbitLabel expected;
};
/// mu, alpha, beta are sqrt(mu2), sqrt(a), sqrt(b).
std::vector<CatalogEntry> normal_form_catalog(const FamilyParams& p);
/// [[hat z, b],[b^T, 0]]
Matrix little_lorentz_element(const Vec& z, const Vec& b);

}  // namespace orbit
