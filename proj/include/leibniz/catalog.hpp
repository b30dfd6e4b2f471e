#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/orbit.hpp"

namespace leibniz {

/// One fully instantiated algebra from the bundled catalog.
struct CatalogEntry {
    std::string name;
    std::map<std::string, Rational> parameters;  // keys used: "n", "delta"
    AlgebraTable table;                          // reference basis order
    std::optional<Subspace> nilradical;          // recorded maximal nilpotent ideal
    /// Permutation aligning an extension built in base-then-ideal order with
    /// the reference order above: new index of built basis vector i is
    /// relabeling[i]. Identity for the non-extension families.
    std::vector<int> relabeling;
};

/// Catalog families:
///   "NF"  (needs n >= 2)     nilpotent chain algebra,
///   "R"   (needs n >= 2)     solvable chain-with-derivation algebra,
///   "H", "L1", "L2", "L3"    the five-dimensional solvable algebras,
///   "R_hat" (needs n >= 2)   the one-dimensional extension of "R",
///   "H_hat_1".."H_hat_6", "L1_hat_1".."L1_hat_7",
///   "L2_hat_1".."L2_hat_7", "L3_hat_1".."L3_hat_8"
///                            the classified extensions of the 5-dim algebras.
/// Families "H_hat_5", "L1_hat_5", "L1_hat_7", "L2_hat_4", "L2_hat_7",
/// "L3_hat_6", "L3_hat_8" read parameter "delta" (default 1).
/// Throws std::invalid_argument for unknown names or invalid parameters.
CatalogEntry get(const std::string& name,
                 const std::map<std::string, Rational>& params = {});

std::vector<std::string> catalog_names();

/// True when the family reads the "delta" parameter.
bool uses_delta(const std::string& name);
/// True when the family reads the "n" parameter.
bool uses_n(const std::string& name);

/// One-dimensional bimodule over "R": x acts by the scalar pair (g1, g2),
/// e_1..e_n act by zero. Throws std::invalid_argument when (g1, g2) violate
/// the bimodule laws (g1 * (g1 + g2) must vanish).
RepresentationPair chain_module(const AlgebraTable& r, const Rational& g1,
                                const Rational& g2);

/// One-dimensional bimodule over a five-dimensional catalog algebra: x1 acts
/// by (a1, a2), x2 by (b1, b2), e_i by zero. Throws std::invalid_argument
/// when the scalars violate the bimodule laws.
RepresentationPair split_module(const AlgebraTable& a, const Rational& a1,
                                const Rational& a2, const Rational& b1,
                                const Rational& b2);

/// Dispatch on the family: scalars = (g1, g2) for "R", (a1, a2, b1, b2) for
/// the five-dimensional algebras.
RepresentationPair scalar_module(const AlgebraTable& a,
                                 const std::vector<Rational>& scalars);

/// Recorded cocycle-space dimensions for one representation case.
struct ExpectationRow {
    std::string tag;  // sortable, e.g. "dims.R.n=3.g1=0.g2=-4"
    std::string algebra;
    std::map<std::string, Rational> algebra_params;
    std::vector<Rational> rep_scalars;
    int dim_Z2 = 0;
    int dim_B2 = 0;
    int dim_H2 = 0;
};
std::vector<ExpectationRow> expectations();

/// One reading of a recorded cocycle-space basis. The "recorded" reading is
/// the adopted one; alternative readings of ambiguous lines are kept so the
/// computation can adjudicate between them.
struct SpanVariant {
    std::string reading;  // "recorded", "trimmed", "literal", ...
    bool expected_to_span = true;
    std::vector<BilinearMap> vectors;
};

/// A recorded basis of the cocycle space for one representation case.
struct SpanCase {
    std::string tag;  // e.g. "z2span.H.case08"
    std::string algebra;
    std::map<std::string, Rational> algebra_params;
    std::vector<Rational> rep_scalars;
    std::vector<SpanVariant> variants;  // first entry is the adopted reading
};
std::vector<SpanCase> cocycle_span_cases();

/// Images of the elementary maps f_k (f_k sends the k-th basis vector to the
/// module generator, all others to zero) under the recorded coboundary
/// tables. Index k-1 holds the image of f_k. Supported families: "R", "H",
/// "L1", "L2", "L3".
std::vector<BilinearMap> recorded_coboundary_images(
    const std::string& algebra, const AlgebraTable& table,
    const std::vector<Rational>& rep_scalars);

/// Alternative readings of ambiguous product-table lines together with the
/// verdict the structure-identity check must return for them.
struct TableVariant {
    std::string tag;      // e.g. "reading.H.sign"
    std::string reading;  // short description of the variant
    AlgebraTable table;
    bool satisfies_identity = false;  // expected leibniz_check outcome
};
std::vector<TableVariant> table_reading_variants();

/// How a catalog extension arises from base data.
struct ExtensionRecipe {
    std::string hat_name;
    std::string base;
    std::map<std::string, Rational> base_params;
    std::vector<Rational> rep_scalars;
    BilinearMap omega;  // cocycle on the base algebra, 1-dimensional module
};
ExtensionRecipe extension_recipe(const std::string& hat_name,
                                 const std::map<std::string, Rational>& params = {});

/// Automorphism families. Keys: "R", "R.alt" (needs n; "R.alt" is a rejected
/// alternative reading with a constant factorial denominator in the
/// derivation column, kept as a negative fixture), "H.phi1", "H.phi2",
/// "L1", "L2", "L3".
AutFamily aut_family(const std::string& key, int n = 0);
std::vector<std::string> aut_family_keys();

/// Verification data for one automorphism-orbit case: a second automorphism
/// component carrying the case onto a partner case.
struct SwapCheck {
    std::string family;  // aut_family key, e.g. "H.phi2"
    std::vector<Rational> image_rep_scalars;
    std::vector<BilinearMap> image_class_basis;
};

/// One representation case with nontrivial quotient classes, together with
/// the catalog normal forms its classes normalize onto.
///
/// The class basis (u_1) or (u_1, u_2) is aligned with the targets: a class
/// d1*u_1 (d1 != 0) normalizes onto targets[0]; a class d1*u_1 + d2*u_2 with
/// d2 != 0 normalizes onto targets[1] with parameter delta = d1/d2.
struct ClassCase {
    std::string tag;  // e.g. "class.H.caseVII"
    std::string algebra;
    std::vector<Rational> rep_scalars;
    std::vector<BilinearMap> class_basis;  // 1 or 2 independent classes
    std::vector<std::string> targets;      // catalog names, aligned as above
    std::string aut_key;                   // family used to normalize
    std::optional<SwapCheck> swap;
};
std::vector<ClassCase> classification_cases();

}  // namespace leibniz
