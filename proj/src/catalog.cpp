#include "leibniz/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace leibniz {

namespace {

Rational Q(long num, long den = 1) { return Rational(num, den); }

Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

struct PTerm {
    const char* target;
    Rational c;
};

struct PEntry {
    const char* l;
    const char* r;
    std::vector<PTerm> terms;
};

AlgebraTable table_of(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<PEntry>& entries) {
    AlgebraTable t = make_algebra(name, labels);
    for (const auto& e : entries) {
        const int i = t.index_of(e.l);
        const int j = t.index_of(e.r);
        if (i < 0 || j < 0) throw std::logic_error("catalog: bad product label");
        for (const auto& term : e.terms) {
            const int k = t.index_of(term.target);
            if (k < 0) throw std::logic_error("catalog: bad product target");
            t.add_product(i, j, k, term.c);
        }
    }
    return t;
}

using BTerm = std::tuple<const char*, const char*, Rational>;

/// Bilinear map into a 1-dimensional module, entries given by basis labels.
BilinearMap bm(const AlgebraTable& g, const std::vector<BTerm>& terms) {
    BilinearMap w(g.dim(), 1);
    for (const auto& [l, r, c] : terms) {
        const int i = g.index_of(l);
        const int j = g.index_of(r);
        if (i < 0 || j < 0) throw std::logic_error("catalog: bad cocycle label");
        w.at(i, j, 0) += c;
    }
    return w;
}

Vec unit(int ambient, int idx) {
    Vec v = zero_vec(ambient);
    v[idx] = 1;
    return v;
}

Subspace span_of_first(int ambient, int count) {
    std::vector<Vec> vs;
    for (int i = 0; i < count; ++i) vs.push_back(unit(ambient, i));
    return Subspace::span(ambient, vs);
}

std::vector<std::string> chain_labels(int n, bool with_x) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    if (with_x) labels.push_back("x");
    return labels;
}

const std::vector<std::string> kFiveLabels = {"e1", "e2", "e3", "x1", "x2"};
const std::vector<std::string> kSixLabels = {"e1", "e2", "e3", "e4", "x1", "x2"};

// ---------------------------------------------------------------------------
// Base families
// ---------------------------------------------------------------------------

AlgebraTable nf_table(int n) {
    AlgebraTable t = make_algebra("NF", chain_labels(n, false));
    for (int i = 0; i + 1 < n; ++i) t.add_product(i, 0, i + 1, 1);
    return t;
}

AlgebraTable r_table(int n, const std::string& name = "R") {
    AlgebraTable t = make_algebra(name, chain_labels(n, true));
    for (int i = 0; i + 1 < n; ++i) t.add_product(i, 0, i + 1, 1);
    for (int i = 0; i < n; ++i) t.add_product(i, n, i, -i - 1);
    t.add_product(n, 0, 0, 1);
    return t;
}

std::vector<PEntry> h_products() {
    return {
        {"e1", "e2", {{"e3", 1}}},  {"e2", "e1", {{"e3", -1}}},
        {"e1", "x1", {{"e1", 1}}},  {"x1", "e1", {{"e1", -1}}},
        {"e3", "x1", {{"e3", 1}}},  {"x1", "e3", {{"e3", -1}}},
        {"e2", "x2", {{"e2", 1}}},  {"x2", "e2", {{"e2", -1}}},
        {"e3", "x2", {{"e3", 1}}},  {"x2", "e3", {{"e3", -1}}},
    };
}

std::vector<PEntry> l1_products() {
    return {
        {"e2", "e1", {{"e3", 1}}},  {"e1", "x1", {{"e1", 1}}},
        {"x1", "e1", {{"e1", -1}}}, {"e3", "x1", {{"e3", 1}}},
        {"e2", "x2", {{"e2", 1}}},  {"e3", "x2", {{"e3", 1}}},
    };
}

std::vector<PEntry> l2_products() {
    return {
        {"e1", "e1", {{"e3", 1}}},  {"e1", "x1", {{"e1", 1}}},
        {"x1", "e1", {{"e1", -1}}}, {"e3", "x1", {{"e3", 2}}},
        {"e2", "x2", {{"e2", 1}}},
    };
}

std::vector<PEntry> l3_products() {
    auto p = l2_products();
    p.push_back({"x2", "e2", {{"e2", -1}}});
    return p;
}

// ---------------------------------------------------------------------------
// Extension families (reference basis order: e1, e2, e3, e4, x1, x2)
// ---------------------------------------------------------------------------

std::vector<PEntry> hat_products(const std::string& name, const Rational& d) {
    if (name == "H_hat_1") {
        auto p = h_products();
        p.push_back({"e4", "x1", {{"e4", 1}}});
        p.push_back({"x2", "e1", {{"e4", 1}}});
        return p;
    }
    if (name == "H_hat_2") {
        auto p = h_products();
        p.push_back({"e1", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 2}}});
        return p;
    }
    if (name == "H_hat_3") {
        return {
            {"e1", "e2", {{"e3", 1}, {"e4", 1}}},
            {"e2", "e1", {{"e3", -1}, {"e4", 1}}},
            {"e1", "x1", {{"e1", 1}}},
            {"x1", "e1", {{"e1", -1}}},
            {"e3", "x1", {{"e3", 1}}},
            {"x1", "e3", {{"e3", -1}, {"e4", -1}}},
            {"e2", "x2", {{"e2", 1}}},
            {"x2", "e2", {{"e2", -1}}},
            {"e3", "x2", {{"e3", 1}}},
            {"x2", "e3", {{"e3", -1}, {"e4", 1}}},
            {"e4", "x1", {{"e4", 1}}},
            {"e4", "x2", {{"e4", 1}}},
        };
    }
    if (name == "H_hat_4") {
        return {
            {"e1", "e2", {{"e3", 1}}},  {"e2", "e1", {{"e3", -1}}},
            {"e1", "x1", {{"e1", 1}, {"e4", 1}}},
            {"x1", "e1", {{"e1", -1}, {"e4", -1}}},
            {"e3", "x1", {{"e3", 1}}},  {"x1", "e3", {{"e3", -1}}},
            {"e2", "x2", {{"e2", 1}}},  {"x2", "e2", {{"e2", -1}}},
            {"e3", "x2", {{"e3", 1}}},  {"x2", "e3", {{"e3", -1}}},
            {"e4", "x1", {{"e4", 1}}},  {"x1", "e4", {{"e4", -1}}},
        };
    }
    if (name == "H_hat_5") {
        return {
            {"e1", "e2", {{"e3", 1}}},  {"e2", "e1", {{"e3", -1}}},
            {"e1", "x1", {{"e1", 1}, {"e4", d}}},
            {"x1", "e1", {{"e1", -1}, {"e4", -d}}},
            {"e3", "x1", {{"e3", 1}}},  {"x1", "e3", {{"e3", -1}}},
            {"e2", "x2", {{"e2", 1}}},  {"x2", "e2", {{"e2", -1}}},
            {"e3", "x2", {{"e3", 1}}},  {"x2", "e3", {{"e3", -1}}},
            {"e1", "x2", {{"e4", 1}}},  {"x2", "e1", {{"e4", -1}}},
            {"e4", "x1", {{"e4", 1}}},  {"x1", "e4", {{"e4", -1}}},
        };
    }
    if (name == "H_hat_6") {
        auto p = h_products();
        p.push_back({"e1", "e3", {{"e4", 1}}});
        p.push_back({"e3", "e1", {{"e4", -1}}});
        p.push_back({"e4", "x1", {{"e4", 2}}});
        p.push_back({"x1", "e4", {{"e4", -2}}});
        p.push_back({"e4", "x2", {{"e4", 1}}});
        p.push_back({"x2", "e4", {{"e4", -1}}});
        return p;
    }
    if (name == "L1_hat_1") {
        auto p = l1_products();
        p.push_back({"x2", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 1}}});
        return p;
    }
    if (name == "L1_hat_2") {
        auto p = l1_products();
        p.push_back({"e1", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 2}}});
        return p;
    }
    if (name == "L1_hat_3") {
        auto p = l1_products();
        p.push_back({"e3", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 2}}});
        p.push_back({"e4", "x2", {{"e4", 1}}});
        return p;
    }
    if (name == "L1_hat_4") {
        auto p = l1_products();
        p.push_back({"e2", "x1", {{"e4", 1}}});
        p.push_back({"e4", "x2", {{"e4", 1}}});
        return p;
    }
    if (name == "L1_hat_5") {
        return {
            {"e2", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}}},
            {"x1", "e1", {{"e1", -1}}},
            {"e3", "x1", {{"e3", 1}}},
            {"e2", "x2", {{"e2", 1}, {"e4", 1}}},
            {"e3", "x2", {{"e3", 1}}},
            {"e2", "x1", {{"e4", d}}},
            {"e4", "x2", {{"e4", 1}}},
        };
    }
    if (name == "L1_hat_6") {
        return {
            {"e2", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}, {"e4", 1}}},
            {"x1", "e1", {{"e1", -1}, {"e4", -1}}},
            {"e3", "x1", {{"e3", 1}}},
            {"e2", "x2", {{"e2", 1}}},
            {"e3", "x2", {{"e3", 1}}},
            {"e4", "x1", {{"e4", 1}}},
            {"x1", "e4", {{"e4", -1}}},
        };
    }
    if (name == "L1_hat_7") {
        return {
            {"e2", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}, {"e4", d}}},
            {"x1", "e1", {{"e1", -1}, {"e4", -d}}},
            {"e3", "x1", {{"e3", 1}}},
            {"e2", "x2", {{"e2", 1}}},
            {"e3", "x2", {{"e3", 1}}},
            {"e1", "x2", {{"e4", 1}}},
            {"x2", "e1", {{"e4", -1}}},
            {"e4", "x1", {{"e4", 1}}},
            {"x1", "e4", {{"e4", -1}}},
        };
    }
    if (name == "L2_hat_1") {
        auto p = l2_products();
        p.push_back({"x2", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 1}}});
        return p;
    }
    if (name == "L2_hat_2") {
        auto p = l2_products();
        p.push_back({"e3", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 3}}});
        return p;
    }
    if (name == "L2_hat_3") {
        auto p = l2_products();
        p.push_back({"e2", "x1", {{"e4", 1}}});
        p.push_back({"e4", "x2", {{"e4", 1}}});
        return p;
    }
    if (name == "L2_hat_4") {
        return {
            {"e1", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}}},
            {"x1", "e1", {{"e1", -1}}},
            {"e3", "x1", {{"e3", 2}}},
            {"e2", "x2", {{"e2", 1}, {"e4", 1}}},
            {"e2", "x1", {{"e4", d}}},
            {"e4", "x2", {{"e4", 1}}},
        };
    }
    if (name == "L2_hat_5") {
        auto p = l2_products();
        p.push_back({"e2", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 1}}});
        p.push_back({"e4", "x2", {{"e4", 1}}});
        return p;
    }
    if (name == "L2_hat_6") {
        return {
            {"e1", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}, {"e4", 1}}},
            {"x1", "e1", {{"e1", -1}, {"e4", -1}}},
            {"e3", "x1", {{"e3", 2}}},
            {"e2", "x2", {{"e2", 1}}},
            {"e4", "x1", {{"e4", 1}}},
            {"x1", "e4", {{"e4", -1}}},
        };
    }
    if (name == "L2_hat_7") {
        return {
            {"e1", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}, {"e4", d}}},
            {"x1", "e1", {{"e1", -1}, {"e4", -d}}},
            {"e3", "x1", {{"e3", 2}}},
            {"e2", "x2", {{"e2", 1}}},
            {"e1", "x2", {{"e4", 1}}},
            {"x2", "e1", {{"e4", -1}}},
            {"e4", "x1", {{"e4", 1}}},
            {"x1", "e4", {{"e4", -1}}},
        };
    }
    if (name == "L3_hat_1") {
        auto p = l3_products();
        p.push_back({"x2", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 1}}});
        return p;
    }
    if (name == "L3_hat_2") {
        auto p = l3_products();
        p.push_back({"e3", "e1", {{"e4", 1}}});
        p.push_back({"e4", "x1", {{"e4", 3}}});
        return p;
    }
    if (name == "L3_hat_3") {
        auto p = l3_products();
        p.push_back({"x1", "e2", {{"e4", 1}}});
        p.push_back({"e4", "x2", {{"e4", 1}}});
        return p;
    }
    if (name == "L3_hat_4") {
        auto p = l3_products();
        p.push_back({"e2", "e2", {{"e4", 1}}});
        p.push_back({"e4", "x2", {{"e4", 2}}});
        return p;
    }
    if (name == "L3_hat_5") {
        return {
            {"e1", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}, {"e4", 1}}},
            {"x1", "e1", {{"e1", -1}, {"e4", -1}}},
            {"e3", "x1", {{"e3", 2}}},
            {"e2", "x2", {{"e2", 1}}},
            {"x2", "e2", {{"e2", -1}}},
            {"e4", "x1", {{"e4", 1}}},
            {"x1", "e4", {{"e4", -1}}},
        };
    }
    if (name == "L3_hat_6") {
        return {
            {"e1", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}, {"e4", d}}},
            {"x1", "e1", {{"e1", -1}, {"e4", -d}}},
            {"e3", "x1", {{"e3", 2}}},
            {"e2", "x2", {{"e2", 1}}},
            {"x2", "e2", {{"e2", -1}}},
            {"e1", "x2", {{"e4", 1}}},
            {"x2", "e1", {{"e4", -1}}},
            {"e4", "x1", {{"e4", 1}}},
            {"x1", "e4", {{"e4", -1}}},
        };
    }
    if (name == "L3_hat_7") {
        auto p = l3_products();
        p.push_back({"e2", "x1", {{"e4", 1}}});
        p.push_back({"x1", "e2", {{"e4", -1}}});
        p.push_back({"e4", "x2", {{"e4", 1}}});
        p.push_back({"x2", "e4", {{"e4", -1}}});
        return p;
    }
    if (name == "L3_hat_8") {
        return {
            {"e1", "e1", {{"e3", 1}}},
            {"e1", "x1", {{"e1", 1}}},
            {"x1", "e1", {{"e1", -1}}},
            {"e3", "x1", {{"e3", 2}}},
            {"e2", "x2", {{"e2", 1}, {"e4", 1}}},
            {"x2", "e2", {{"e2", -1}, {"e4", -1}}},
            {"e2", "x1", {{"e4", d}}},
            {"x1", "e2", {{"e4", -d}}},
            {"e4", "x2", {{"e4", 1}}},
            {"x2", "e4", {{"e4", -1}}},
        };
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

const std::vector<std::string> kDeltaFamilies = {
    "H_hat_5", "L1_hat_5", "L1_hat_7", "L2_hat_4", "L2_hat_7", "L3_hat_6", "L3_hat_8",
};

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

int require_n(const std::map<std::string, Rational>& params) {
    auto it = params.find("n");
    if (it == params.end()) throw std::invalid_argument("parameter n is required");
    const Rational& v = it->second;
    if (v.get_den() != 1) throw std::invalid_argument("parameter n must be an integer");
    const long n = v.get_num().get_si();
    if (n < 2 || v.get_num() != n) throw std::invalid_argument("parameter n must be >= 2");
    return static_cast<int>(n);
}

Rational delta_or_default(const std::map<std::string, Rational>& params) {
    auto it = params.find("delta");
    return it == params.end() ? Rational(1) : it->second;
}

void reject_unknown_params(const std::string& name, const std::map<std::string, Rational>& params) {
    for (const auto& [key, value] : params) {
        (void)value;
        if (key == "n" && uses_n(name)) continue;
        if (key == "delta" && uses_delta(name)) continue;
        throw std::invalid_argument("family " + name + " does not take parameter " + key);
    }
}

// Sample scalar pairs for the parameter-dependent representation cases.
const std::vector<std::array<Rational, 2>> kSamplesA2B2 = {{Rational(3), Rational(4)},
                                                           {Rational(-1), Rational(5)}};
const std::vector<std::array<Rational, 2>> kSamplesA1B1 = {{Rational(-3), Rational(-4)},
                                                           {Rational(2), Rational(3)}};

std::string rat_str(const Rational& q) { return to_string(q); }

}  // namespace

bool uses_delta(const std::string& name) {
    return std::find(kDeltaFamilies.begin(), kDeltaFamilies.end(), name) != kDeltaFamilies.end();
}

bool uses_n(const std::string& name) { return name == "NF" || name == "R" || name == "R_hat"; }

std::vector<std::string> catalog_names() {
    std::vector<std::string> names = {"NF", "R", "H", "L1", "L2", "L3", "R_hat"};
    for (int i = 1; i <= 6; ++i) names.push_back("H_hat_" + std::to_string(i));
    for (int i = 1; i <= 7; ++i) names.push_back("L1_hat_" + std::to_string(i));
    for (int i = 1; i <= 7; ++i) names.push_back("L2_hat_" + std::to_string(i));
    for (int i = 1; i <= 8; ++i) names.push_back("L3_hat_" + std::to_string(i));
    return names;
}

CatalogEntry get(const std::string& name, const std::map<std::string, Rational>& params) {
    const auto names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::invalid_argument("unknown catalog name: " + name);
    reject_unknown_params(name, params);

    CatalogEntry entry;
    entry.name = name;

    if (name == "NF") {
        const int n = require_n(params);
        entry.parameters["n"] = n;
        entry.table = nf_table(n);
        entry.nilradical = Subspace::full(n);
        entry.relabeling = identity_perm(n);
        return entry;
    }
    if (name == "R") {
        const int n = require_n(params);
        entry.parameters["n"] = n;
        entry.table = r_table(n);
        entry.nilradical = span_of_first(n + 1, n);
        entry.relabeling = identity_perm(n + 1);
        return entry;
    }
    if (name == "R_hat") {
        const int n = require_n(params);
        entry.parameters["n"] = n;
        entry.table = r_table(n + 1, "R_hat");
        entry.nilradical = span_of_first(n + 2, n + 1);
        entry.relabeling = identity_perm(n + 2);
        entry.relabeling[n] = n + 1;      // extension builds the derivation before the new
        entry.relabeling[n + 1] = n;      // chain vector; the reference order swaps them
        return entry;
    }
    if (name == "H" || name == "L1" || name == "L2" || name == "L3") {
        std::vector<PEntry> prods;
        if (name == "H") prods = h_products();
        if (name == "L1") prods = l1_products();
        if (name == "L2") prods = l2_products();
        if (name == "L3") prods = l3_products();
        entry.table = table_of(name, kFiveLabels, prods);
        entry.nilradical = span_of_first(5, 3);
        entry.relabeling = identity_perm(5);
        return entry;
    }

    // Six-dimensional extension families.
    Rational d = delta_or_default(params);
    if (uses_delta(name)) entry.parameters["delta"] = d;
    entry.table = table_of(name, kSixLabels, hat_products(name, d));
    entry.nilradical = span_of_first(6, 4);
    entry.relabeling = {0, 1, 2, 4, 5, 3};
    return entry;
}

RepresentationPair chain_module(const AlgebraTable& r, const Rational& g1, const Rational& g2) {
    const int ix = r.index_of("x");
    if (ix < 0) throw std::invalid_argument("chain_module: no basis vector labeled x");
    RepresentationPair p = scalar_rep(r, {{ix, {g1, g2}}});
    auto bad = rep_check(p);
    if (!bad.empty())
        throw std::invalid_argument("scalars (" + rat_str(g1) + ", " + rat_str(g2) +
                                    ") violate the bimodule law: " + bad.front().identity);
    return p;
}

RepresentationPair split_module(const AlgebraTable& a, const Rational& a1, const Rational& a2,
                                const Rational& b1, const Rational& b2) {
    const int ix1 = a.index_of("x1");
    const int ix2 = a.index_of("x2");
    if (ix1 < 0 || ix2 < 0)
        throw std::invalid_argument("split_module: no basis vectors labeled x1, x2");
    RepresentationPair p = scalar_rep(a, {{ix1, {a1, a2}}, {ix2, {b1, b2}}});
    auto bad = rep_check(p);
    if (!bad.empty())
        throw std::invalid_argument("scalars (" + rat_str(a1) + ", " + rat_str(a2) + ", " +
                                    rat_str(b1) + ", " + rat_str(b2) +
                                    ") violate the bimodule law: " + bad.front().identity);
    return p;
}

RepresentationPair scalar_module(const AlgebraTable& a, const std::vector<Rational>& scalars) {
    if (scalars.size() == 2) return chain_module(a, scalars[0], scalars[1]);
    if (scalars.size() == 4) return split_module(a, scalars[0], scalars[1], scalars[2], scalars[3]);
    throw std::invalid_argument("scalar_module: expected 2 or 4 scalars");
}

// ---------------------------------------------------------------------------
// Recorded dimension table
// ---------------------------------------------------------------------------

namespace {

void add_row(std::vector<ExpectationRow>& rows, std::string tag, std::string algebra,
             std::map<std::string, Rational> params, std::vector<Rational> scalars, int z2, int b2) {
    ExpectationRow row;
    row.tag = std::move(tag);
    row.algebra = std::move(algebra);
    row.algebra_params = std::move(params);
    row.rep_scalars = std::move(scalars);
    row.dim_Z2 = z2;
    row.dim_B2 = b2;
    row.dim_H2 = z2 - b2;
    rows.push_back(std::move(row));
}

}  // namespace

std::vector<ExpectationRow> expectations() {
    std::vector<ExpectationRow> rows;

    for (int n = 2; n <= 5; ++n) {
        const std::map<std::string, Rational> np = {{"n", Rational(n)}};
        const std::string base = "dims.R.n:" + std::to_string(n);
        std::vector<std::pair<std::array<Rational, 2>, std::array<int, 2>>> grid = {
            {{Q(0), Q(-n - 1)}, {n + 2, n + 1}}, {{Q(0), Q(0)}, {n + 1, n + 1}},
            {{Q(0), Q(1)}, {n + 1, n + 1}},      {{Q(0), Q(-n)}, {n + 1, n + 1}},
            {{Q(1), Q(-1)}, {n, n}},             {{Q(-2), Q(2)}, {n, n}},
        };
        for (const auto& [g, dims] : grid)
            add_row(rows, base + ".g1:" + rat_str(g[0]) + ".g2:" + rat_str(g[1]), "R", np,
                    {g[0], g[1]}, dims[0], dims[1]);
    }

    struct FiveRow {
        const char* tag;
        std::array<Rational, 4> s;
        int z2, b2;
    };
    auto add_five = [&rows](const std::string& algebra, const std::vector<FiveRow>& data) {
        for (const auto& r : data)
            add_row(rows, "dims." + algebra + "." + r.tag, algebra, {},
                    {r.s[0], r.s[1], r.s[2], r.s[3]}, r.z2, r.b2);
    };

    add_five("H", {
        {"case01", {Q(0), Q(1), Q(0), Q(0)}, 6, 5},
        {"case02", {Q(0), Q(0), Q(0), Q(1)}, 6, 5},
        {"case03", {Q(0), Q(2), Q(0), Q(0)}, 6, 5},
        {"case04", {Q(0), Q(0), Q(0), Q(2)}, 6, 5},
        {"case05", {Q(0), Q(1), Q(0), Q(1)}, 6, 5},
        {"case06.s1", {Q(0), kSamplesA2B2[0][0], Q(0), kSamplesA2B2[0][1]}, 5, 5},
        {"case06.s2", {Q(0), kSamplesA2B2[1][0], Q(0), kSamplesA2B2[1][1]}, 5, 5},
        {"case07", {Q(-1), Q(1), Q(0), Q(0)}, 5, 3},
        {"case08", {Q(0), Q(0), Q(-1), Q(1)}, 5, 3},
        {"case09", {Q(-1), Q(1), Q(-2), Q(2)}, 5, 4},
        {"case10", {Q(-2), Q(2), Q(-1), Q(1)}, 5, 4},
        {"case11.s1", {kSamplesA1B1[0][0], -kSamplesA1B1[0][0], kSamplesA1B1[0][1], -kSamplesA1B1[0][1]}, 4, 4},
        {"case11.s2", {kSamplesA1B1[1][0], -kSamplesA1B1[1][0], kSamplesA1B1[1][1], -kSamplesA1B1[1][1]}, 4, 4},
    });

    add_five("L1", {
        {"case01", {Q(0), Q(1), Q(0), Q(0)}, 6, 5},
        {"case02", {Q(0), Q(2), Q(0), Q(0)}, 6, 5},
        {"case03", {Q(0), Q(2), Q(0), Q(1)}, 6, 5},
        {"case04", {Q(0), Q(0), Q(0), Q(1)}, 6, 4},
        {"case05.s1", {Q(0), kSamplesA2B2[0][0], Q(0), kSamplesA2B2[0][1]}, 5, 5},
        {"case05.s2", {Q(0), kSamplesA2B2[1][0], Q(0), kSamplesA2B2[1][1]}, 5, 5},
        {"case06", {Q(-1), Q(1), Q(0), Q(0)}, 5, 3},
        {"case07.s1", {kSamplesA1B1[0][0], -kSamplesA1B1[0][0], kSamplesA1B1[0][1], -kSamplesA1B1[0][1]}, 4, 4},
        {"case07.s2", {kSamplesA1B1[1][0], -kSamplesA1B1[1][0], kSamplesA1B1[1][1], -kSamplesA1B1[1][1]}, 4, 4},
    });

    add_five("L2", {
        {"case01", {Q(0), Q(1), Q(0), Q(0)}, 6, 5},
        {"case02", {Q(0), Q(3), Q(0), Q(0)}, 6, 5},
        {"case03", {Q(0), Q(0), Q(0), Q(1)}, 6, 4},
        {"case04", {Q(0), Q(1), Q(0), Q(1)}, 6, 5},
        {"case05.s1", {Q(0), kSamplesA2B2[0][0], Q(0), kSamplesA2B2[0][1]}, 5, 5},
        {"case05.s2", {Q(0), kSamplesA2B2[1][0], Q(0), kSamplesA2B2[1][1]}, 5, 5},
        {"case06", {Q(-1), Q(1), Q(0), Q(0)}, 5, 3},
        {"case07.s1", {kSamplesA1B1[0][0], -kSamplesA1B1[0][0], kSamplesA1B1[0][1], -kSamplesA1B1[0][1]}, 4, 4},
        {"case07.s2", {kSamplesA1B1[1][0], -kSamplesA1B1[1][0], kSamplesA1B1[1][1], -kSamplesA1B1[1][1]}, 4, 4},
    });

    add_five("L3", {
        {"case01", {Q(0), Q(1), Q(0), Q(0)}, 6, 5},
        {"case02", {Q(0), Q(3), Q(0), Q(0)}, 6, 5},
        {"case03", {Q(0), Q(0), Q(0), Q(1)}, 6, 5},
        {"case04", {Q(0), Q(0), Q(0), Q(2)}, 6, 5},
        {"case05.s1", {Q(0), kSamplesA2B2[0][0], Q(0), kSamplesA2B2[0][1]}, 5, 5},
        {"case05.s2", {Q(0), kSamplesA2B2[1][0], Q(0), kSamplesA2B2[1][1]}, 5, 5},
        {"case06", {Q(-1), Q(1), Q(0), Q(0)}, 5, 3},
        {"case07", {Q(0), Q(0), Q(-1), Q(1)}, 5, 3},
        {"case08.s1", {kSamplesA1B1[0][0], -kSamplesA1B1[0][0], kSamplesA1B1[0][1], -kSamplesA1B1[0][1]}, 4, 4},
        {"case08.s2", {kSamplesA1B1[1][0], -kSamplesA1B1[1][0], kSamplesA1B1[1][1], -kSamplesA1B1[1][1]}, 4, 4},
    });

    return rows;
}

// ---------------------------------------------------------------------------
// Recorded cocycle-space bases
// ---------------------------------------------------------------------------

namespace {

SpanCase make_case(std::string tag, std::string algebra, std::map<std::string, Rational> params,
                   std::vector<Rational> scalars, std::vector<SpanVariant> variants) {
    SpanCase c;
    c.tag = std::move(tag);
    c.algebra = std::move(algebra);
    c.algebra_params = std::move(params);
    c.rep_scalars = std::move(scalars);
    c.variants = std::move(variants);
    return c;
}

std::vector<BilinearMap> h_case_vectors(const AlgebraTable& g, int case_no, const Rational& p1,
                                        const Rational& p2) {
    const Rational one = 1;
    switch (case_no) {
        case 1:  // scalars (0, 1, 0, 0)
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x2", 1}, {"x1", "e3", -1}, {"x2", "e3", -1}}),
                bm(g, {{"e2", "x1", 1}, {"e2", "x2", -1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "e1", 1}}),
                bm(g, {{"x1", "x1", 1}}),
                bm(g, {{"x2", "e1", 1}}),
                bm(g, {{"x2", "x1", 1}}),
            };
        case 2:  // scalars (0, 0, 0, 1)
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x1", 1}, {"x1", "e3", -1}, {"x2", "e3", -1}}),
                bm(g, {{"e1", "x1", 1}, {"e1", "x2", -1}, {"x1", "e1", -1}}),
                bm(g, {{"x1", "e2", 1}}),
                bm(g, {{"x1", "x2", 1}}),
                bm(g, {{"x2", "e2", 1}}),
                bm(g, {{"x2", "x2", 1}}),
            };
        case 3:  // scalars (0, 2, 0, 0), adopted reading
            return {
                bm(g, {{"e1", "e1", 1}}),
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x1", -1}, {"e3", "x2", 1}, {"x1", "e3", -1}, {"x2", "e3", -1}}),
                bm(g, {{"e1", "x1", 1}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "x1", 2}, {"e2", "x2", -1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x1", 1}}),
                bm(g, {{"x2", "x1", 1}}),
            };
        case 4:  // scalars (0, 0, 0, 2)
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x1", 1}, {"e3", "x2", -1}, {"x1", "e3", -1}, {"x2", "e3", -1}}),
                bm(g, {{"e1", "x1", 1}, {"e1", "x2", -2}, {"x1", "e1", -1}}),
                bm(g, {{"e2", "e2", 1}}),
                bm(g, {{"e2", "x2", 1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x2", 1}}),
                bm(g, {{"x2", "x2", 1}}),
            };
        case 5:  // scalars (0, 1, 0, 1)
            return {
                bm(g, {{"e1", "e2", 1}, {"x1", "e3", -1}}),
                bm(g, {{"e1", "x2", 1}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "e1", 1}, {"x2", "e3", 1}}),
                bm(g, {{"e2", "x1", 1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x1", 1}, {"x1", "x2", 1}}),
                bm(g, {{"x2", "x1", 1}, {"x2", "x2", 1}}),
            };
        case 6:  // scalars (0, p1, 0, p2) generic
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x1", one - p1}, {"e3", "x2", one - p2}, {"x1", "e3", -1}, {"x2", "e3", -1}}),
                bm(g, {{"e1", "x1", p1 - one}, {"e1", "x2", p2}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "x1", p1}, {"e2", "x2", p2 - one}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x1", p1}, {"x1", "x2", p2}}),
                bm(g, {{"x2", "x1", p1}, {"x2", "x2", p2}}),
            };
        case 7:  // scalars (-1, 1, 0, 0)
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x2", 1}, {"x2", "e3", -1}}),
                bm(g, {{"e1", "x1", 1}, {"x1", "e1", -1}}),
                bm(g, {{"e1", "x2", 1}, {"x2", "e1", -1}}),
                bm(g, {{"e2", "x1", 1}, {"e2", "x2", -1}, {"x1", "e2", -1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
        case 8:  // scalars (0, 0, -1, 1), adopted reading
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x1", 1}, {"x1", "e3", -1}}),
                bm(g, {{"e1", "x1", 1}, {"e1", "x2", -1}, {"x1", "e1", -1}, {"x2", "e1", 1}}),
                bm(g, {{"e2", "x1", 1}, {"x1", "e2", -1}}),
                bm(g, {{"e2", "x2", 1}, {"x2", "e2", -1}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
        case 9:  // scalars (-1, 1, -2, 2)
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x2", -1}, {"x2", "e3", 1}}),
                bm(g, {{"e1", "x2", 1}, {"x2", "e1", -1}}),
                bm(g, {{"e2", "e3", 1}, {"e3", "e2", -1}}),
                bm(g, {{"e2", "x1", 1}, {"e2", "x2", 1}, {"x1", "e2", -1}, {"x2", "e2", -1}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
        case 10:  // scalars (-2, 2, -1, 1)
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x1", -1}, {"x1", "e3", 1}}),
                bm(g, {{"e1", "e3", 1}, {"e3", "e1", -1}}),
                bm(g, {{"e1", "x1", 1}, {"e1", "x2", 1}, {"x1", "e1", -1}, {"x2", "e1", -1}}),
                bm(g, {{"e2", "x1", 1}, {"x1", "e2", -1}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
        case 11:  // scalars (p1, -p1, p2, -p2) generic
            return {
                bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x1", one + p1}, {"e3", "x2", one + p2}, {"x1", "e3", -(one + p1)}, {"x2", "e3", -(one + p2)}}),
                bm(g, {{"e1", "x1", one + p1}, {"e1", "x2", p2}, {"x1", "e1", -(one + p1)}, {"x2", "e1", -p2}}),
                bm(g, {{"e2", "x1", p1}, {"e2", "x2", one + p2}, {"x1", "e2", -p1}, {"x2", "e2", -(one + p2)}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
    }
    throw std::logic_error("h_case_vectors: bad case");
}

/// The rejected literal reading of the case at scalars (0, 2, 0, 0): one cell
/// names the wrong right factor and two cells carry flipped signs. The
/// adopted reading agrees with the generic-parameter formula specialized to
/// these scalars.
std::vector<BilinearMap> h_case3_literal(const AlgebraTable& g) {
    auto vs = h_case_vectors(g, 3, 0, 0);
    vs[2] = bm(g, {{"e1", "x2", 1}, {"x1", "e1", 1}});
    vs[3] = bm(g, {{"e2", "x1", 2}, {"e2", "x2", 1}, {"x2", "e2", -1}});
    return vs;
}

/// The rejected literal reading of the fourth five-dimensional case at
/// scalars (0, 0, -1, 1): one cross term moved into a separate vector.
std::vector<BilinearMap> h_case8_literal(const AlgebraTable& g) {
    return {
        bm(g, {{"e1", "e2", 1}, {"e2", "e1", -1}, {"e3", "x1", 1}, {"x1", "e3", -1}}),
        bm(g, {{"e1", "x1", 1}, {"e1", "x2", -1}, {"x1", "e1", -1}}),
        bm(g, {{"x2", "e1", -1}}),
        bm(g, {{"e2", "x1", 1}, {"x1", "e2", -1}}),
        bm(g, {{"e2", "x2", 1}, {"x2", "e2", -1}}),
        bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
    };
}

std::vector<BilinearMap> l1_case_vectors(const AlgebraTable& g, int case_no, const Rational& p1,
                                         const Rational& p2) {
    const Rational one = 1;
    switch (case_no) {
        case 1:  // (0, 1, 0, 0)
            return {
                bm(g, {{"e2", "e1", 1}, {"e3", "x2", 1}}),
                bm(g, {{"e2", "x1", 1}, {"e2", "x2", -1}}),
                bm(g, {{"x1", "e1", 1}}),
                bm(g, {{"x1", "x1", 1}}),
                bm(g, {{"x2", "e1", 1}}),
                bm(g, {{"x2", "x1", 1}}),
            };
        case 2:  // (0, 2, 0, 0)
            return {
                bm(g, {{"e1", "e1", 1}}),
                bm(g, {{"e1", "x1", 1}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "e1", 1}, {"e3", "x1", -1}, {"e3", "x2", 1}}),
                bm(g, {{"e2", "x1", -2}, {"e2", "x2", 1}}),
                bm(g, {{"x1", "x1", 1}}),
                bm(g, {{"x2", "x1", 1}}),
            };
        case 3:  // (0, 2, 0, 1)
            return {
                bm(g, {{"e1", "x1", 1}, {"e1", "x2", 1}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "e1", 1}, {"e3", "x1", -1}}),
                bm(g, {{"e2", "x1", 1}}),
                bm(g, {{"e3", "e1", 1}}),
                bm(g, {{"x1", "x1", 2}, {"x1", "x2", 1}}),
                bm(g, {{"x2", "x1", 2}, {"x2", "x2", 1}}),
            };
        case 4:  // (0, 0, 0, 1)
            return {
                bm(g, {{"e1", "x1", 1}, {"e1", "x2", -1}, {"x1", "e1", -1}}),
                bm(g, {{"e2", "e1", 1}, {"e3", "x1", 1}}),
                bm(g, {{"e2", "x1", 1}}),
                bm(g, {{"e2", "x2", 1}}),
                bm(g, {{"x1", "x2", 1}}),
                bm(g, {{"x2", "x2", 1}}),
            };
        case 5:  // (0, p1, 0, p2) generic
            return {
                bm(g, {{"e1", "x1", p1 - one}, {"e1", "x2", p2}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "e1", 1}, {"e3", "x1", one - p1}, {"e3", "x2", one - p2}}),
                bm(g, {{"e2", "x1", p1}, {"e2", "x2", p2 - one}}),
                bm(g, {{"x1", "x1", p1}, {"x1", "x2", p2}}),
                bm(g, {{"x2", "x1", p1}, {"x2", "x2", p2}}),
            };
        case 6:  // (-1, 1, 0, 0)
            return {
                bm(g, {{"e1", "x1", 1}, {"x1", "e1", -1}}),
                bm(g, {{"e1", "x2", 1}, {"x2", "e1", -1}}),
                bm(g, {{"e2", "e1", 1}, {"e3", "x2", 1}, {"x1", "e3", 1}}),
                bm(g, {{"e2", "x1", -1}, {"e2", "x2", 1}, {"x1", "e2", 1}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
        case 7:  // (p1, -p1, p2, -p2) generic
            return {
                bm(g, {{"e1", "x1", one + p1}, {"e1", "x2", p2}, {"x1", "e1", -(one + p1)}, {"x2", "e1", -p2}}),
                bm(g, {{"e2", "e1", 1}, {"e3", "x1", one + p1}, {"e3", "x2", one + p2}, {"x1", "e3", -p1}, {"x2", "e3", -p2}}),
                bm(g, {{"e2", "x1", p1}, {"e2", "x2", one + p2}, {"x1", "e2", -p1}, {"x2", "e2", -p2}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
    }
    throw std::logic_error("l1_case_vectors: bad case");
}

std::vector<BilinearMap> l2_case_vectors(const AlgebraTable& g, int case_no, const Rational& p1,
                                         const Rational& p2) {
    const Rational one = 1;
    switch (case_no) {
        case 1:  // (0, 1, 0, 0)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 1}}),
                bm(g, {{"e2", "x1", -1}, {"e2", "x2", 1}}),
                bm(g, {{"x1", "e1", 1}}),
                bm(g, {{"x1", "x1", 1}}),
                bm(g, {{"x2", "e1", 1}}),
                bm(g, {{"x2", "x1", 1}}),
            };
        case 2:  // (0, 3, 0, 0)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", -1}}),
                bm(g, {{"e1", "x1", 2}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "x1", -3}, {"e2", "x2", 1}}),
                bm(g, {{"e3", "e1", 1}}),
                bm(g, {{"x1", "x1", 1}}),
                bm(g, {{"x2", "x1", 1}}),
            };
        case 3:  // (0, 0, 0, 1)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 2}, {"e3", "x2", -1}}),
                bm(g, {{"e1", "x1", 1}, {"e1", "x2", -1}, {"x1", "e1", -1}}),
                bm(g, {{"e2", "x1", 1}}),
                bm(g, {{"e2", "x2", 1}}),
                bm(g, {{"x1", "x2", 1}}),
                bm(g, {{"x2", "x2", 1}}),
            };
        case 4:  // (0, 1, 0, 1)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 1}, {"e3", "x2", -1}}),
                bm(g, {{"e1", "x2", 1}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "e1", 1}}),
                bm(g, {{"e2", "x1", 1}}),
                bm(g, {{"x1", "x1", 1}, {"x1", "x2", 1}}),
                bm(g, {{"x2", "x1", 1}, {"x2", "x2", 1}}),
            };
        case 5:  // (0, p1, 0, p2) generic, adopted reading
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", Rational(2) - p1}, {"e3", "x2", -p2}}),
                bm(g, {{"e1", "x1", p1 - one}, {"e1", "x2", p2}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "x1", p1}, {"e2", "x2", p2 - one}}),
                bm(g, {{"x1", "x1", p1}, {"x1", "x2", p2}}),
                bm(g, {{"x2", "x1", p1}, {"x2", "x2", p2}}),
            };
        case 6:  // (-1, 1, 0, 0)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 1}, {"x1", "e3", 1}}),
                bm(g, {{"e1", "x1", 1}, {"x1", "e1", -1}}),
                bm(g, {{"e1", "x2", 1}, {"x2", "e1", -1}}),
                bm(g, {{"e2", "x1", 1}, {"e2", "x2", -1}, {"x1", "e2", -1}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
        case 7:  // (p1, -p1, p2, -p2) generic
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", Rational(2) + p1}, {"e3", "x2", p2}, {"x1", "e3", -p1}, {"x2", "e3", -p2}}),
                bm(g, {{"e1", "x1", -(one + p1)}, {"e1", "x2", -p2}, {"x1", "e1", one + p1}, {"x2", "e1", p2}}),
                bm(g, {{"e2", "x1", -p1}, {"e2", "x2", -(one + p2)}, {"x1", "e2", p1}, {"x2", "e2", p2}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
    }
    throw std::logic_error("l2_case_vectors: bad case");
}

/// The rejected literal reading of the fifth case of the third
/// five-dimensional family: the duplicated last line taken at face value.
std::vector<BilinearMap> l2_case5_literal(const AlgebraTable& g, const Rational& p1,
                                          const Rational& p2) {
    auto vs = l2_case_vectors(g, 5, p1, p2);
    vs[4] = bm(g, {{"x2", "x1", p2}});
    return vs;
}

std::vector<BilinearMap> l3_case_vectors(const AlgebraTable& g, int case_no, const Rational& p1,
                                         const Rational& p2) {
    const Rational one = 1;
    switch (case_no) {
        case 1:  // (0, 1, 0, 0)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 1}}),
                bm(g, {{"e2", "x1", 1}, {"e2", "x2", -1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "e1", 1}}),
                bm(g, {{"x1", "x1", 1}}),
                bm(g, {{"x2", "e1", 1}}),
                bm(g, {{"x2", "x1", 1}}),
            };
        case 2:  // (0, 3, 0, 0)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", -1}}),
                bm(g, {{"e1", "x1", 2}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "x1", 3}, {"e2", "x2", -1}, {"x2", "e2", 1}}),
                bm(g, {{"e3", "e1", 1}}),
                bm(g, {{"x1", "x1", 1}}),
                bm(g, {{"x2", "x1", 1}}),
            };
        case 3:  // (0, 0, 0, 1)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 2}, {"e3", "x2", -1}}),
                bm(g, {{"e1", "x1", -1}, {"e1", "x2", 1}, {"x1", "e1", 1}}),
                bm(g, {{"x1", "e2", 1}}),
                bm(g, {{"x1", "x2", 1}}),
                bm(g, {{"x2", "e2", 1}}),
                bm(g, {{"x2", "x2", 1}}),
            };
        case 4:  // (0, 0, 0, 2)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 2}, {"e3", "x2", -2}}),
                bm(g, {{"e1", "x1", -1}, {"e1", "x2", 2}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "e2", 1}}),
                bm(g, {{"e2", "x2", 1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x2", 1}}),
                bm(g, {{"x2", "x2", 1}}),
            };
        case 5:  // (0, p1, 0, p2) generic
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", Rational(2) - p1}, {"e3", "x2", -p2}}),
                bm(g, {{"e1", "x1", p1 - one}, {"e1", "x2", p2}, {"x1", "e1", 1}}),
                bm(g, {{"e2", "x1", p1}, {"e2", "x2", p2 - one}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x1", p1}, {"x1", "x2", p2}}),
                bm(g, {{"x2", "x1", p1}, {"x2", "x2", p2}}),
            };
        case 6:  // (-1, 1, 0, 0)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 1}, {"x1", "e3", 1}}),
                bm(g, {{"e1", "x1", -1}, {"x1", "e1", 1}}),
                bm(g, {{"e1", "x2", -1}, {"x2", "e1", 1}}),
                bm(g, {{"e2", "x1", 1}, {"e2", "x2", -1}, {"x1", "e2", -1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
        case 7:  // (0, 0, -1, 1)
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", 2}, {"e3", "x2", -1}, {"x2", "e3", 1}}),
                bm(g, {{"e1", "x1", -1}, {"e1", "x2", 1}, {"x1", "e1", 1}, {"x2", "e1", -1}}),
                bm(g, {{"e2", "x1", -1}, {"x1", "e2", 1}}),
                bm(g, {{"e2", "x2", -1}, {"x2", "e2", 1}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
        case 8:  // (p1, -p1, p2, -p2) generic
            return {
                bm(g, {{"e1", "e1", 1}, {"e3", "x1", Rational(2) + p1}, {"e3", "x2", p2}, {"x1", "e3", -p1}, {"x2", "e3", -p2}}),
                bm(g, {{"e1", "x1", -(one + p1)}, {"e1", "x2", -p2}, {"x1", "e1", one + p1}, {"x2", "e1", p2}}),
                bm(g, {{"e2", "x1", -p1}, {"e2", "x2", -(one + p2)}, {"x1", "e2", p1}, {"x2", "e2", one + p2}}),
                bm(g, {{"x1", "x2", 1}, {"x2", "x1", -1}}),
            };
    }
    throw std::logic_error("l3_case_vectors: bad case");
}

std::vector<BilinearMap> r_case1_vectors(const AlgebraTable& g, int n, bool trimmed) {
    std::vector<BilinearMap> vs;
    const int ix = g.index_of("x");
    for (int j = 1; j <= n - 1; ++j) {
        BilinearMap w(g.dim(), 1);
        w.at(j - 1, 0, 0) = 1;
        w.at(j, ix, 0) = n - j;
        vs.push_back(w);
    }
    if (!trimmed) {
        BilinearMap w(g.dim(), 1);
        w.at(n - 1, 0, 0) = 1;
        vs.push_back(w);
    }
    BilinearMap wx(g.dim(), 1);
    wx.at(ix, 0, 0) = 1;
    wx.at(0, ix, 0) = n;
    vs.push_back(wx);
    BilinearMap wxx(g.dim(), 1);
    wxx.at(ix, ix, 0) = 1;
    vs.push_back(wxx);
    return vs;
}

std::vector<BilinearMap> r_case2_vectors(const AlgebraTable& g, int n, const Rational& g2) {
    std::vector<BilinearMap> vs;
    const int ix = g.index_of("x");
    for (int j = 1; j <= n - 1; ++j) {
        BilinearMap w(g.dim(), 1);
        w.at(j - 1, 0, 0) = 1;
        w.at(j, ix, 0) = -(Rational(j + 1) + g2);
        vs.push_back(w);
    }
    BilinearMap wx(g.dim(), 1);
    wx.at(ix, 0, 0) = 1;
    wx.at(0, ix, 0) = -(g2 + 1);
    vs.push_back(wx);
    BilinearMap wxx(g.dim(), 1);
    wxx.at(ix, ix, 0) = 1;
    vs.push_back(wxx);
    return vs;
}

std::vector<BilinearMap> r_case3_vectors(const AlgebraTable& g, int n, const Rational& g1) {
    std::vector<BilinearMap> vs;
    const int ix = g.index_of("x");
    for (int j = 1; j <= n - 1; ++j) {
        BilinearMap w(g.dim(), 1);
        w.at(j - 1, 0, 0) = 1;
        w.at(j, ix, 0) = g1 - Rational(j + 1);
        w.at(ix, j, 0) = -g1;
        vs.push_back(w);
    }
    BilinearMap wx(g.dim(), 1);
    wx.at(ix, 0, 0) = 1;
    wx.at(0, ix, 0) = -1;
    vs.push_back(wx);
    return vs;
}

}  // namespace

std::vector<SpanCase> cocycle_span_cases() {
    std::vector<SpanCase> cases;

    for (int n = 2; n <= 5; ++n) {
        const std::map<std::string, Rational> np = {{"n", Rational(n)}};
        AlgebraTable g = r_table(n);
        cases.push_back(make_case(
            "z2span.R.case1.n:" + std::to_string(n), "R", np, {Q(0), Q(-n - 1)},
            {{"recorded", true, r_case1_vectors(g, n, false)},
             {"trimmed", false, r_case1_vectors(g, n, true)}}));
        for (const Rational& g2 : {Q(0), Q(-n)})
            cases.push_back(make_case(
                "z2span.R.case2.n:" + std::to_string(n) + ".g2:" + rat_str(g2), "R", np,
                {Q(0), g2}, {{"recorded", true, r_case2_vectors(g, n, g2)}}));
        for (const Rational& g1 : {Q(1), Q(-2)})
            cases.push_back(make_case(
                "z2span.R.case3.n:" + std::to_string(n) + ".g1:" + rat_str(g1), "R", np,
                {g1, -g1}, {{"recorded", true, r_case3_vectors(g, n, g1)}}));
    }

    AlgebraTable h = table_of("H", kFiveLabels, h_products());
    const std::vector<std::array<Rational, 4>> h_scalars = {
        {Q(0), Q(1), Q(0), Q(0)},  {Q(0), Q(0), Q(0), Q(1)},   {Q(0), Q(2), Q(0), Q(0)},
        {Q(0), Q(0), Q(0), Q(2)},  {Q(0), Q(1), Q(0), Q(1)},   {},
        {Q(-1), Q(1), Q(0), Q(0)}, {Q(0), Q(0), Q(-1), Q(1)},  {Q(-1), Q(1), Q(-2), Q(2)},
        {Q(-2), Q(2), Q(-1), Q(1)}, {},
    };
    for (int c = 1; c <= 11; ++c) {
        char tag[64];
        std::snprintf(tag, sizeof(tag), "z2span.H.case%02d", c);
        if (c == 6 || c == 11) {
            const auto& samples = (c == 6) ? kSamplesA2B2 : kSamplesA1B1;
            for (size_t s = 0; s < samples.size(); ++s) {
                const Rational p1 = samples[s][0], p2 = samples[s][1];
                std::vector<Rational> scal = (c == 6)
                                                 ? std::vector<Rational>{Q(0), p1, Q(0), p2}
                                                 : std::vector<Rational>{p1, -p1, p2, -p2};
                cases.push_back(make_case(std::string(tag) + ".s" + std::to_string(s + 1), "H",
                                          {}, scal,
                                          {{"recorded", true, h_case_vectors(h, c, p1, p2)}}));
            }
        } else if (c == 3) {
            cases.push_back(make_case(
                tag, "H", {}, {h_scalars[2][0], h_scalars[2][1], h_scalars[2][2], h_scalars[2][3]},
                {{"recorded", true, h_case_vectors(h, 3, 0, 0)},
                 {"literal", false, h_case3_literal(h)}}));
        } else if (c == 8) {
            cases.push_back(make_case(
                tag, "H", {}, {h_scalars[7][0], h_scalars[7][1], h_scalars[7][2], h_scalars[7][3]},
                {{"recorded", true, h_case_vectors(h, 8, 0, 0)},
                 {"literal", false, h_case8_literal(h)}}));
        } else {
            const auto& s = h_scalars[c - 1];
            cases.push_back(make_case(tag, "H", {}, {s[0], s[1], s[2], s[3]},
                                      {{"recorded", true, h_case_vectors(h, c, 0, 0)}}));
        }
    }

    AlgebraTable l1 = table_of("L1", kFiveLabels, l1_products());
    const std::vector<std::array<Rational, 4>> l1_scalars = {
        {Q(0), Q(1), Q(0), Q(0)}, {Q(0), Q(2), Q(0), Q(0)}, {Q(0), Q(2), Q(0), Q(1)},
        {Q(0), Q(0), Q(0), Q(1)}, {},                       {Q(-1), Q(1), Q(0), Q(0)},
        {},
    };
    for (int c = 1; c <= 7; ++c) {
        char tag[64];
        std::snprintf(tag, sizeof(tag), "z2span.L1.case%02d", c);
        if (c == 5 || c == 7) {
            const auto& samples = (c == 5) ? kSamplesA2B2 : kSamplesA1B1;
            for (size_t s = 0; s < samples.size(); ++s) {
                const Rational p1 = samples[s][0], p2 = samples[s][1];
                std::vector<Rational> scal = (c == 5)
                                                 ? std::vector<Rational>{Q(0), p1, Q(0), p2}
                                                 : std::vector<Rational>{p1, -p1, p2, -p2};
                cases.push_back(make_case(std::string(tag) + ".s" + std::to_string(s + 1), "L1",
                                          {}, scal,
                                          {{"recorded", true, l1_case_vectors(l1, c, p1, p2)}}));
            }
        } else {
            const auto& s = l1_scalars[c - 1];
            cases.push_back(make_case(tag, "L1", {}, {s[0], s[1], s[2], s[3]},
                                      {{"recorded", true, l1_case_vectors(l1, c, 0, 0)}}));
        }
    }

    AlgebraTable l2 = table_of("L2", kFiveLabels, l2_products());
    const std::vector<std::array<Rational, 4>> l2_scalars = {
        {Q(0), Q(1), Q(0), Q(0)}, {Q(0), Q(3), Q(0), Q(0)}, {Q(0), Q(0), Q(0), Q(1)},
        {Q(0), Q(1), Q(0), Q(1)}, {},                       {Q(-1), Q(1), Q(0), Q(0)},
        {},
    };
    for (int c = 1; c <= 7; ++c) {
        char tag[64];
        std::snprintf(tag, sizeof(tag), "z2span.L2.case%02d", c);
        if (c == 5 || c == 7) {
            const auto& samples = (c == 5) ? kSamplesA2B2 : kSamplesA1B1;
            for (size_t s = 0; s < samples.size(); ++s) {
                const Rational p1 = samples[s][0], p2 = samples[s][1];
                std::vector<Rational> scal = (c == 5)
                                                 ? std::vector<Rational>{Q(0), p1, Q(0), p2}
                                                 : std::vector<Rational>{p1, -p1, p2, -p2};
                std::vector<SpanVariant> variants = {
                    {"recorded", true, l2_case_vectors(l2, c, p1, p2)}};
                if (c == 5)
                    variants.push_back({"literal", false, l2_case5_literal(l2, p1, p2)});
                cases.push_back(make_case(std::string(tag) + ".s" + std::to_string(s + 1), "L2",
                                          {}, scal, variants));
            }
        } else {
            const auto& s = l2_scalars[c - 1];
            cases.push_back(make_case(tag, "L2", {}, {s[0], s[1], s[2], s[3]},
                                      {{"recorded", true, l2_case_vectors(l2, c, 0, 0)}}));
        }
    }

    AlgebraTable l3 = table_of("L3", kFiveLabels, l3_products());
    const std::vector<std::array<Rational, 4>> l3_scalars = {
        {Q(0), Q(1), Q(0), Q(0)}, {Q(0), Q(3), Q(0), Q(0)}, {Q(0), Q(0), Q(0), Q(1)},
        {Q(0), Q(0), Q(0), Q(2)}, {},                       {Q(-1), Q(1), Q(0), Q(0)},
        {Q(0), Q(0), Q(-1), Q(1)}, {},
    };
    for (int c = 1; c <= 8; ++c) {
        char tag[64];
        std::snprintf(tag, sizeof(tag), "z2span.L3.case%02d", c);
        if (c == 5 || c == 8) {
            const auto& samples = (c == 5) ? kSamplesA2B2 : kSamplesA1B1;
            for (size_t s = 0; s < samples.size(); ++s) {
                const Rational p1 = samples[s][0], p2 = samples[s][1];
                std::vector<Rational> scal = (c == 5)
                                                 ? std::vector<Rational>{Q(0), p1, Q(0), p2}
                                                 : std::vector<Rational>{p1, -p1, p2, -p2};
                cases.push_back(make_case(std::string(tag) + ".s" + std::to_string(s + 1), "L3",
                                          {}, scal,
                                          {{"recorded", true, l3_case_vectors(l3, c, p1, p2)}}));
            }
        } else {
            const auto& s = l3_scalars[c - 1];
            cases.push_back(make_case(tag, "L3", {}, {s[0], s[1], s[2], s[3]},
                                      {{"recorded", true, l3_case_vectors(l3, c, 0, 0)}}));
        }
    }

    return cases;
}

// ---------------------------------------------------------------------------
// Recorded coboundary tables
// ---------------------------------------------------------------------------

std::vector<BilinearMap> recorded_coboundary_images(const std::string& algebra,
                                                    const AlgebraTable& table,
                                                    const std::vector<Rational>& s) {
    std::vector<BilinearMap> images;
    if (algebra == "R") {
        if (s.size() != 2) throw std::invalid_argument("expected 2 scalars for R");
        const Rational g1 = s[0], g2 = s[1];
        const int n = table.dim() - 1;
        const int ix = table.index_of("x");
        for (int k = 1; k <= n + 1; ++k) {
            BilinearMap w(table.dim(), 1);
            if (k == 1) {
                w.at(0, ix, 0) = -(Rational(1) + g2);
                w.at(ix, 0, 0) = Rational(1) - g1;
            } else if (k <= n) {
                w.at(k - 2, 0, 0) = 1;
                w.at(k - 1, ix, 0) = -(Rational(k) + g2);
                w.at(ix, k - 1, 0) = -g1;
            } else {
                w.at(ix, ix, 0) = -(g1 + g2);
            }
            images.push_back(w);
        }
        return images;
    }

    if (s.size() != 4) throw std::invalid_argument("expected 4 scalars for " + algebra);
    const Rational a1 = s[0], a2 = s[1], b1 = s[2], b2 = s[3];
    const Rational one = 1;
    const auto g = [&table](const char* l, const char* r) {
        return std::pair<int, int>(table.index_of(l), table.index_of(r));
    };
    auto put = [](BilinearMap& w, std::pair<int, int> ij, const Rational& c) {
        w.at(ij.first, ij.second, 0) = c;
    };

    BilinearMap c1(table.dim(), 1), c2(table.dim(), 1), c3(table.dim(), 1), c4(table.dim(), 1),
        c5(table.dim(), 1);
    // The first two and last two generator images share their shape across the
    // four five-dimensional families.
    put(c1, g("e1", "x1"), one - a2);
    put(c1, g("e1", "x2"), -b2);
    put(c1, g("x1", "e1"), -(one + a1));
    put(c1, g("x2", "e1"), -b1);

    put(c2, g("e2", "x1"), -a2);
    put(c2, g("e2", "x2"), one - b2);
    put(c2, g("x1", "e2"), -a1);
    put(c2, g("x2", "e2"),
        (algebra == "H" || algebra == "L3") ? Rational(-(one + b1)) : Rational(-b1));

    if (algebra == "H") {
        put(c3, g("e1", "e2"), 1);
        put(c3, g("e2", "e1"), -1);
        put(c3, g("e3", "x1"), one - a2);
        put(c3, g("e3", "x2"), one - b2);
        put(c3, g("x1", "e3"), -(one + a1));
        put(c3, g("x2", "e3"), -(one + b1));
    } else if (algebra == "L1") {
        put(c3, g("e2", "e1"), 1);
        put(c3, g("e3", "x1"), one - a2);
        put(c3, g("e3", "x2"), one - b2);
        put(c3, g("x1", "e3"), -a1);
        put(c3, g("x2", "e3"), -b1);
    } else if (algebra == "L2" || algebra == "L3") {
        put(c3, g("e1", "e1"), 1);
        put(c3, g("e3", "x1"), Rational(2) - a2);
        put(c3, g("e3", "x2"), -b2);
        put(c3, g("x1", "e3"), -a1);
        put(c3, g("x2", "e3"), -b1);
    } else {
        throw std::invalid_argument("unsupported family: " + algebra);
    }

    put(c4, g("x1", "x1"), -(a1 + a2));
    put(c4, g("x1", "x2"), -b2);
    put(c4, g("x2", "x1"), -b1);

    put(c5, g("x1", "x2"), -a1);
    put(c5, g("x2", "x1"), -a2);
    put(c5, g("x2", "x2"), -(b1 + b2));

    return {c1, c2, c3, c4, c5};
}

// ---------------------------------------------------------------------------
// Ambiguous table readings
// ---------------------------------------------------------------------------

std::vector<TableVariant> table_reading_variants() {
    std::vector<TableVariant> out;

    {
        // Sign variant of one product of "H": the recorded line omits the
        // relation symbol; the positive-sign reading breaks the structure
        // identity.
        auto prods = h_products();
        for (auto& p : prods)
            if (std::string(p.l) == "x2" && std::string(p.r) == "e2") p.terms = {{"e2", 1}};
        out.push_back({"reading.H.sign", "positive sign on the x2*e2 product",
                       table_of("H_sign_variant", kFiveLabels, prods), false});
    }
    {
        // The published sixth extension of "H" with the third family's
        // leading sign taken literally on the x1*e3 product.
        auto prods = hat_products("H_hat_3", 1);
        for (auto& p : prods)
            if (std::string(p.l) == "x1" && std::string(p.r) == "e3")
                p.terms = {{"e3", -1}, {"e4", 1}};
        out.push_back({"reading.H_hat_3.literal", "positive e4 term on the x1*e3 product",
                       table_of("H_hat_3_literal", kSixLabels, prods), false});
    }
    {
        // The published delta-family of the third five-dimensional algebra
        // with the stray e1*x2 product present.
        auto prods = hat_products("L2_hat_4", 1);
        prods.push_back({"e1", "x2", {{"e4", 1}}});
        out.push_back({"reading.L2_hat_4.literal", "stray e1*x2 product",
                       table_of("L2_hat_4_literal", kSixLabels, prods), false});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extension recipes
// ---------------------------------------------------------------------------

ExtensionRecipe extension_recipe(const std::string& hat_name,
                                 const std::map<std::string, Rational>& params) {
    ExtensionRecipe rec;
    rec.hat_name = hat_name;

    if (hat_name == "R_hat") {
        const int n = require_n(params);
        rec.base = "R";
        rec.base_params = {{"n", Rational(n)}};
        rec.rep_scalars = {Q(0), Q(-n - 1)};
        AlgebraTable base = r_table(n);
        BilinearMap w(base.dim(), 1);
        w.at(n - 1, 0, 0) = 1;  // omega(e_n, e_1) = h
        rec.omega = w;
        return rec;
    }

    const auto names = catalog_names();
    if (std::find(names.begin(), names.end(), hat_name) == names.end() ||
        hat_name.find("hat") == std::string::npos)
        throw std::invalid_argument("no extension recipe for: " + hat_name);
    reject_unknown_params(hat_name, params);
    const Rational d = delta_or_default(params);

    struct Recipe {
        const char* hat;
        const char* base;
        std::array<Rational, 4> scalars;
        std::vector<BTerm> omega;        // fixed part
        std::vector<BTerm> delta_omega;  // part scaled by delta
    };
    static const std::vector<Recipe> recipes = {
        {"H_hat_1", "H", {Q(0), Q(1), Q(0), Q(0)}, {{"x2", "e1", 1}}, {}},
        {"H_hat_2", "H", {Q(0), Q(2), Q(0), Q(0)}, {{"e1", "e1", 1}}, {}},
        {"H_hat_3", "H", {Q(0), Q(1), Q(0), Q(1)},
         {{"e1", "e2", 1}, {"e2", "e1", 1}, {"x1", "e3", -1}, {"x2", "e3", 1}}, {}},
        {"H_hat_4", "H", {Q(-1), Q(1), Q(0), Q(0)}, {{"e1", "x1", 1}, {"x1", "e1", -1}}, {}},
        {"H_hat_5", "H", {Q(-1), Q(1), Q(0), Q(0)},
         {{"e1", "x2", 1}, {"x2", "e1", -1}}, {{"e1", "x1", 1}, {"x1", "e1", -1}}},
        {"H_hat_6", "H", {Q(-2), Q(2), Q(-1), Q(1)}, {{"e1", "e3", 1}, {"e3", "e1", -1}}, {}},
        {"L1_hat_1", "L1", {Q(0), Q(1), Q(0), Q(0)}, {{"x2", "e1", 1}}, {}},
        {"L1_hat_2", "L1", {Q(0), Q(2), Q(0), Q(0)}, {{"e1", "e1", 1}}, {}},
        {"L1_hat_3", "L1", {Q(0), Q(2), Q(0), Q(1)}, {{"e3", "e1", 1}}, {}},
        {"L1_hat_4", "L1", {Q(0), Q(0), Q(0), Q(1)}, {{"e2", "x1", 1}}, {}},
        {"L1_hat_5", "L1", {Q(0), Q(0), Q(0), Q(1)}, {{"e2", "x2", 1}}, {{"e2", "x1", 1}}},
        {"L1_hat_6", "L1", {Q(-1), Q(1), Q(0), Q(0)}, {{"e1", "x1", 1}, {"x1", "e1", -1}}, {}},
        {"L1_hat_7", "L1", {Q(-1), Q(1), Q(0), Q(0)},
         {{"e1", "x2", 1}, {"x2", "e1", -1}}, {{"e1", "x1", 1}, {"x1", "e1", -1}}},
        {"L2_hat_1", "L2", {Q(0), Q(1), Q(0), Q(0)}, {{"x2", "e1", 1}}, {}},
        {"L2_hat_2", "L2", {Q(0), Q(3), Q(0), Q(0)}, {{"e3", "e1", 1}}, {}},
        {"L2_hat_3", "L2", {Q(0), Q(0), Q(0), Q(1)}, {{"e2", "x1", 1}}, {}},
        {"L2_hat_4", "L2", {Q(0), Q(0), Q(0), Q(1)}, {{"e2", "x2", 1}}, {{"e2", "x1", 1}}},
        {"L2_hat_5", "L2", {Q(0), Q(1), Q(0), Q(1)}, {{"e2", "e1", 1}}, {}},
        {"L2_hat_6", "L2", {Q(-1), Q(1), Q(0), Q(0)}, {{"e1", "x1", 1}, {"x1", "e1", -1}}, {}},
        {"L2_hat_7", "L2", {Q(-1), Q(1), Q(0), Q(0)},
         {{"e1", "x2", 1}, {"x2", "e1", -1}}, {{"e1", "x1", 1}, {"x1", "e1", -1}}},
        {"L3_hat_1", "L3", {Q(0), Q(1), Q(0), Q(0)}, {{"x2", "e1", 1}}, {}},
        {"L3_hat_2", "L3", {Q(0), Q(3), Q(0), Q(0)}, {{"e3", "e1", 1}}, {}},
        {"L3_hat_3", "L3", {Q(0), Q(0), Q(0), Q(1)}, {{"x1", "e2", 1}}, {}},
        {"L3_hat_4", "L3", {Q(0), Q(0), Q(0), Q(2)}, {{"e2", "e2", 1}}, {}},
        {"L3_hat_5", "L3", {Q(-1), Q(1), Q(0), Q(0)}, {{"e1", "x1", 1}, {"x1", "e1", -1}}, {}},
        {"L3_hat_6", "L3", {Q(-1), Q(1), Q(0), Q(0)},
         {{"e1", "x2", 1}, {"x2", "e1", -1}}, {{"e1", "x1", 1}, {"x1", "e1", -1}}},
        {"L3_hat_7", "L3", {Q(0), Q(0), Q(-1), Q(1)}, {{"e2", "x1", 1}, {"x1", "e2", -1}}, {}},
        {"L3_hat_8", "L3", {Q(0), Q(0), Q(-1), Q(1)},
         {{"e2", "x2", 1}, {"x2", "e2", -1}}, {{"e2", "x1", 1}, {"x1", "e2", -1}}},
    };

    for (const auto& r : recipes) {
        if (hat_name != r.hat) continue;
        rec.base = r.base;
        rec.rep_scalars = {r.scalars[0], r.scalars[1], r.scalars[2], r.scalars[3]};
        std::vector<PEntry> prods;
        if (rec.base == "H") prods = h_products();
        if (rec.base == "L1") prods = l1_products();
        if (rec.base == "L2") prods = l2_products();
        if (rec.base == "L3") prods = l3_products();
        AlgebraTable base = table_of(rec.base, kFiveLabels, prods);
        BilinearMap w = bm(base, r.omega);
        if (!r.delta_omega.empty()) w = w.plus(bm(base, r.delta_omega).scaled(d));
        rec.omega = w;
        return rec;
    }
    throw std::invalid_argument("no extension recipe for: " + hat_name);
}

// ---------------------------------------------------------------------------
// Automorphism families
// ---------------------------------------------------------------------------

namespace {

Mat family_matrix_5(const std::string& key, const std::vector<Rational>& a) {
    Mat m(5, 5);
    if (key == "H.phi1") {
        m.at(0, 0) = a[0];
        m.at(2, 0) = a[1];
        m.at(1, 1) = a[2];
        m.at(2, 1) = a[3];
        m.at(2, 2) = a[0] * a[2];
        m.at(0, 3) = a[3] / a[2];
        m.at(2, 3) = a[1] * a[3] / (a[0] * a[2]) + a[4];
        m.at(3, 3) = 1;
        m.at(1, 4) = -a[1] / a[0];
        m.at(2, 4) = a[4];
        m.at(4, 4) = 1;
    } else if (key == "H.phi2") {
        m.at(1, 0) = a[0];
        m.at(2, 0) = a[1];
        m.at(0, 1) = -a[2];
        m.at(2, 1) = a[3];
        m.at(2, 2) = a[0] * a[2];
        m.at(1, 3) = a[3] / a[2];
        m.at(2, 3) = a[1] * a[3] / (a[0] * a[2]) + a[4];
        m.at(4, 3) = 1;
        m.at(0, 4) = a[1] / a[0];
        m.at(2, 4) = a[4];
        m.at(3, 4) = 1;
    } else if (key == "L1") {
        m.at(0, 0) = a[0];
        m.at(1, 1) = a[1];
        m.at(2, 2) = a[0] * a[1];
        m.at(3, 3) = 1;
        m.at(4, 4) = 1;
    } else if (key == "L2" || key == "L3") {
        m.at(0, 0) = a[0];
        m.at(2, 0) = -a[0] * a[2];
        m.at(1, 1) = a[1];
        m.at(2, 2) = a[0] * a[0];
        m.at(0, 3) = a[2];
        m.at(2, 3) = -a[2] * a[2] / 2;
        m.at(3, 3) = 1;
        m.at(4, 4) = 1;
        if (key == "L3") m.at(1, 4) = a[3];
    }
    return m;
}

}  // namespace

AutFamily aut_family(const std::string& key, int n) {
    AutFamily fam;
    fam.name = key;

    if (key == "R" || key == "R.alt") {
        if (n < 2) throw std::invalid_argument("aut_family: n >= 2 required for " + key);
        fam.algebra = r_table(n);
        fam.param_count = 2;
        fam.search_values = {{}, {Rational(0)}};
        const bool constant_denominator = (key == "R.alt");
        fam.instantiate = [n, constant_denominator](const std::vector<Rational>& p)
            -> std::optional<Mat> {
            const Rational a = p[0], b = p[1];
            if (a == 0) return std::nullopt;
            Mat m(n + 1, n + 1);
            for (int j = 0; j < n; ++j) {
                Rational aj = 1;
                for (int t = 0; t <= j; ++t) aj *= a;
                Rational bpow = 1;
                for (int i = j; i < n; ++i) {
                    m.at(i, j) = aj * bpow / factorial(i - j);
                    bpow *= b;
                }
            }
            Rational bpow = b;
            for (int i = 0; i < n; ++i) {
                m.at(i, n) = constant_denominator ? bpow / factorial(n) : bpow / factorial(i + 1);
                bpow *= b;
            }
            m.at(n, n) = 1;
            return m;
        };
        return fam;
    }

    if (key == "H.phi1" || key == "H.phi2") {
        fam.algebra = table_of("H", kFiveLabels, h_products());
        fam.param_count = 5;
        fam.search_values = {{}, {Rational(0)}, {}, {Rational(0)}, {Rational(0)}};
        fam.instantiate = [key](const std::vector<Rational>& p) -> std::optional<Mat> {
            if (p[0] == 0 || p[2] == 0) return std::nullopt;
            return family_matrix_5(key, p);
        };
        return fam;
    }
    if (key == "L1") {
        fam.algebra = table_of("L1", kFiveLabels, l1_products());
        fam.param_count = 2;
        fam.search_values = {{}, {}};
        fam.instantiate = [](const std::vector<Rational>& p) -> std::optional<Mat> {
            if (p[0] == 0 || p[1] == 0) return std::nullopt;
            return family_matrix_5("L1", p);
        };
        return fam;
    }
    if (key == "L2" || key == "L3") {
        fam.algebra = table_of(key, kFiveLabels, key == "L2" ? l2_products() : l3_products());
        fam.param_count = (key == "L2") ? 3 : 4;
        fam.search_values.assign(fam.param_count, {Rational(0)});
        fam.search_values[0] = {};
        fam.search_values[1] = {};
        fam.instantiate = [key](const std::vector<Rational>& p) -> std::optional<Mat> {
            if (p[0] == 0 || p[1] == 0) return std::nullopt;
            return family_matrix_5(key, p);
        };
        return fam;
    }
    throw std::invalid_argument("unknown automorphism family: " + key);
}

std::vector<std::string> aut_family_keys() {
    return {"R", "R.alt", "H.phi1", "H.phi2", "L1", "L2", "L3"};
}

// ---------------------------------------------------------------------------
// Orbit classification data
// ---------------------------------------------------------------------------

std::vector<ClassCase> classification_cases() {
    AlgebraTable h = table_of("H", kFiveLabels, h_products());
    AlgebraTable l1 = table_of("L1", kFiveLabels, l1_products());
    AlgebraTable l2 = table_of("L2", kFiveLabels, l2_products());
    AlgebraTable l3 = table_of("L3", kFiveLabels, l3_products());

    std::vector<ClassCase> cases;
    auto add = [&cases](std::string tag, std::string algebra, std::vector<Rational> scalars,
                        std::vector<BilinearMap> basis, std::vector<std::string> targets,
                        std::string aut_key, std::optional<SwapCheck> swap = std::nullopt) {
        ClassCase c;
        c.tag = std::move(tag);
        c.algebra = std::move(algebra);
        c.rep_scalars = std::move(scalars);
        c.class_basis = std::move(basis);
        c.targets = std::move(targets);
        c.aut_key = std::move(aut_key);
        c.swap = std::move(swap);
        cases.push_back(std::move(c));
    };

    add("class.H.case01", "H", {Q(0), Q(1), Q(0), Q(0)}, {bm(h, {{"x2", "e1", 1}})},
        {"H_hat_1"}, "H.phi1",
        SwapCheck{"H.phi2", {Q(0), Q(0), Q(0), Q(1)}, {bm(h, {{"x1", "e2", 1}})}});
    add("class.H.case03", "H", {Q(0), Q(2), Q(0), Q(0)}, {bm(h, {{"e1", "e1", 1}})},
        {"H_hat_2"}, "H.phi1",
        SwapCheck{"H.phi2", {Q(0), Q(0), Q(0), Q(2)}, {bm(h, {{"e2", "e2", 1}})}});
    add("class.H.case05", "H", {Q(0), Q(1), Q(0), Q(1)},
        {bm(h, {{"e1", "e2", 1}, {"e2", "e1", 1}, {"x1", "e3", -1}, {"x2", "e3", 1}})},
        {"H_hat_3"}, "H.phi1");
    add("class.H.case07", "H", {Q(-1), Q(1), Q(0), Q(0)},
        {bm(h, {{"e1", "x1", 1}, {"x1", "e1", -1}}), bm(h, {{"e1", "x2", 1}, {"x2", "e1", -1}})},
        {"H_hat_4", "H_hat_5"}, "H.phi1",
        SwapCheck{"H.phi2",
                  {Q(0), Q(0), Q(-1), Q(1)},
                  {bm(h, {{"e2", "x1", 1}, {"x1", "e2", -1}}),
                   bm(h, {{"e2", "x2", 1}, {"x2", "e2", -1}})}});
    add("class.H.case10", "H", {Q(-2), Q(2), Q(-1), Q(1)},
        {bm(h, {{"e1", "e3", 1}, {"e3", "e1", -1}})}, {"H_hat_6"}, "H.phi1",
        SwapCheck{"H.phi2",
                  {Q(-1), Q(1), Q(-2), Q(2)},
                  {bm(h, {{"e2", "e3", 1}, {"e3", "e2", -1}})}});

    add("class.L1.case01", "L1", {Q(0), Q(1), Q(0), Q(0)}, {bm(l1, {{"x2", "e1", 1}})},
        {"L1_hat_1"}, "L1");
    add("class.L1.case02", "L1", {Q(0), Q(2), Q(0), Q(0)}, {bm(l1, {{"e1", "e1", 1}})},
        {"L1_hat_2"}, "L1");
    add("class.L1.case03", "L1", {Q(0), Q(2), Q(0), Q(1)}, {bm(l1, {{"e3", "e1", 1}})},
        {"L1_hat_3"}, "L1");
    add("class.L1.case04", "L1", {Q(0), Q(0), Q(0), Q(1)},
        {bm(l1, {{"e2", "x1", 1}}), bm(l1, {{"e2", "x2", 1}})}, {"L1_hat_4", "L1_hat_5"}, "L1");
    add("class.L1.case06", "L1", {Q(-1), Q(1), Q(0), Q(0)},
        {bm(l1, {{"e1", "x1", 1}, {"x1", "e1", -1}}), bm(l1, {{"e1", "x2", 1}, {"x2", "e1", -1}})},
        {"L1_hat_6", "L1_hat_7"}, "L1");

    add("class.L2.case01", "L2", {Q(0), Q(1), Q(0), Q(0)}, {bm(l2, {{"x2", "e1", 1}})},
        {"L2_hat_1"}, "L2");
    add("class.L2.case02", "L2", {Q(0), Q(3), Q(0), Q(0)}, {bm(l2, {{"e3", "e1", 1}})},
        {"L2_hat_2"}, "L2");
    add("class.L2.case03", "L2", {Q(0), Q(0), Q(0), Q(1)},
        {bm(l2, {{"e2", "x1", 1}}), bm(l2, {{"e2", "x2", 1}})}, {"L2_hat_3", "L2_hat_4"}, "L2");
    add("class.L2.case04", "L2", {Q(0), Q(1), Q(0), Q(1)}, {bm(l2, {{"e2", "e1", 1}})},
        {"L2_hat_5"}, "L2");
    add("class.L2.case06", "L2", {Q(-1), Q(1), Q(0), Q(0)},
        {bm(l2, {{"e1", "x1", 1}, {"x1", "e1", -1}}), bm(l2, {{"e1", "x2", 1}, {"x2", "e1", -1}})},
        {"L2_hat_6", "L2_hat_7"}, "L2");

    add("class.L3.case01", "L3", {Q(0), Q(1), Q(0), Q(0)}, {bm(l3, {{"x2", "e1", 1}})},
        {"L3_hat_1"}, "L3");
    add("class.L3.case02", "L3", {Q(0), Q(3), Q(0), Q(0)}, {bm(l3, {{"e3", "e1", 1}})},
        {"L3_hat_2"}, "L3");
    add("class.L3.case03", "L3", {Q(0), Q(0), Q(0), Q(1)}, {bm(l3, {{"x1", "e2", 1}})},
        {"L3_hat_3"}, "L3");
    add("class.L3.case04", "L3", {Q(0), Q(0), Q(0), Q(2)}, {bm(l3, {{"e2", "e2", 1}})},
        {"L3_hat_4"}, "L3");
    add("class.L3.case06", "L3", {Q(-1), Q(1), Q(0), Q(0)},
        {bm(l3, {{"e1", "x1", 1}, {"x1", "e1", -1}}), bm(l3, {{"e1", "x2", 1}, {"x2", "e1", -1}})},
        {"L3_hat_5", "L3_hat_6"}, "L3");
    add("class.L3.case07", "L3", {Q(0), Q(0), Q(-1), Q(1)},
        {bm(l3, {{"e2", "x1", 1}, {"x1", "e2", -1}}), bm(l3, {{"e2", "x2", 1}, {"x2", "e2", -1}})},
        {"L3_hat_7", "L3_hat_8"}, "L3");

    return cases;
}

}  // namespace leibniz
