// Command-line front end: structure checks, cocycle-space dimensions,
// extension construction, and the one-shot verification harness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/catalog.hpp"
#include "leibniz/fileformat.hpp"
#include "leibniz/verify.hpp"

namespace {

using namespace leibniz;

std::string format_ints(const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

// Compact inline rendering of a bilinear map: "left,right:value; ...".
std::string format_bilinear(const BilinearMap& w, const AlgebraTable& g) {
    std::string out;
    for (int i = 0; i < w.gdim; ++i)
        for (int j = 0; j < w.gdim; ++j)
            for (int t = 0; t < w.hdim; ++t) {
                const Rational& v = w.at(i, j, t);
                if (v == 0) continue;
                if (!out.empty()) out += "; ";
                out += g.basis[i] + "," + g.basis[j] + ":" + to_string(v);
            }
    return out.empty() ? "0" : out;
}

Rational parse_rat_arg(const std::string& text, const std::string& flag) {
    auto v = parse_rational(text);
    if (!v) throw std::invalid_argument(flag + ": not a rational number: " + text);
    return *v;
}

struct SourceOpts {
    std::string file;
    std::string catalog;
    int n = 0;
    std::string delta;
    bool has_n = false;
};

void add_source_flags(CLI::App* sub, SourceOpts& src, bool allow_file) {
    if (allow_file)
        sub->add_option("file", src.file, "algebra file in the catalog JSON format");
    sub->add_option("--catalog", src.catalog, "bundled catalog family name");
    sub->add_option("--n", src.n, "size parameter for the chain families")
        ->check(CLI::Range(2, 64));
    sub->add_option("--delta", src.delta, "deformation parameter (rational)");
}

CatalogEntry load_source(const SourceOpts& src) {
    if (!src.catalog.empty() && !src.file.empty())
        throw std::invalid_argument("give either a file or --catalog, not both");
    if (src.catalog.empty() && src.file.empty())
        throw std::invalid_argument("an algebra is required: a file argument or --catalog");
    if (!src.catalog.empty()) {
        std::map<std::string, Rational> params;
        if (src.n != 0) params["n"] = Rational(src.n);
        if (!src.delta.empty()) params["delta"] = parse_rat_arg(src.delta, "--delta");
        return get(src.catalog, params);
    }
    CatalogEntry entry;
    entry.name = src.file;
    entry.table = load_algebra_file(src.file);
    entry.relabeling.resize(entry.table.dim());
    for (int i = 0; i < entry.table.dim(); ++i) entry.relabeling[i] = i;
    return entry;
}

struct RepOpts {
    std::vector<std::string> gamma;
    std::vector<std::string> alpha;
    std::vector<std::string> beta;
};

void add_rep_flags(CLI::App* sub, RepOpts& rep) {
    sub->add_option("--gamma", rep.gamma, "scalar action pair of the derivation element")
        ->expected(2);
    sub->add_option("--alpha", rep.alpha, "scalar action pair of the first split element")
        ->expected(2);
    sub->add_option("--beta", rep.beta, "scalar action pair of the second split element")
        ->expected(2);
}

RepresentationPair build_rep(const AlgebraTable& table, const RepOpts& rep) {
    const bool chain = !rep.gamma.empty();
    const bool split = !rep.alpha.empty() || !rep.beta.empty();
    if (chain && split)
        throw std::invalid_argument("--gamma cannot be combined with --alpha/--beta");
    if (chain)
        return chain_module(table, parse_rat_arg(rep.gamma[0], "--gamma"),
                            parse_rat_arg(rep.gamma[1], "--gamma"));
    if (split) {
        if (rep.alpha.size() != 2 || rep.beta.size() != 2)
            throw std::invalid_argument("--alpha and --beta must both be given");
        return split_module(table, parse_rat_arg(rep.alpha[0], "--alpha"),
                            parse_rat_arg(rep.alpha[1], "--alpha"),
                            parse_rat_arg(rep.beta[0], "--beta"),
                            parse_rat_arg(rep.beta[1], "--beta"));
    }
    throw std::invalid_argument("action scalars are required: --gamma or --alpha/--beta");
}

int emit(Report report, const std::string& format) {
    sort_checks(report);
    std::cout << (format == "machine" ? render_machine(report) : render_human(report));
    return report.ok() ? 0 : 1;
}

int cmd_check(const SourceOpts& src, unsigned long seed, const std::string& format) {
    CatalogEntry entry = load_source(src);
    Report report;
    report.command = "check";
    report.seed = seed;

    Check structure;
    structure.tag = "check.structure";
    auto violations = leibniz_check(entry.table);
    if (!violations.empty()) {
        structure.status = CheckStatus::fail;
        const auto& v = violations.front();
        structure.detail = "identity fails at (" + entry.table.basis[v.i] + "," +
                           entry.table.basis[v.j] + "," + entry.table.basis[v.k] + ")";
    }
    structure.metric("algebra", entry.table.name);
    structure.metric("dim", entry.table.dim());
    structure.metric("violations", static_cast<long long>(violations.size()));
    report.checks.push_back(structure);

    Check fp;
    fp.tag = "check.fingerprint";
    Fingerprint f = fingerprint(entry.table);
    fp.metric("dim", f.dim);
    fp.metric("lcs_dims", format_ints(f.lcs_dims));
    fp.metric("derived_dims", format_ints(f.derived_dims));
    fp.metric("center_dim", f.center_dim);
    fp.metric("left_annihilator_dim", f.left_ann_dim);
    fp.metric("right_annihilator_dim", f.right_ann_dim);
    fp.metric("derivation_dim", f.derivation_dim);
    fp.metric("nilpotent", f.nilpotent ? "yes" : "no");
    fp.metric("solvable", f.solvable ? "yes" : "no");
    report.checks.push_back(fp);

    if (entry.nilradical) {
        Check nil;
        nil.tag = "check.nilradical";
        NilradicalReport nr = verify_nilradical(entry.table, *entry.nilradical, 16, seed);
        if (nr.status != NilradicalStatus::ok) {
            nil.status = CheckStatus::fail;
            nil.detail = nr.detail;
        }
        nil.metric("dim", entry.nilradical->dim());
        report.checks.push_back(nil);
    }
    return emit(std::move(report), format);
}

int cmd_cohomology(const SourceOpts& src, const RepOpts& rep_opts, unsigned long seed,
                   const std::string& format) {
    CatalogEntry entry = load_source(src);
    RepresentationPair rep = build_rep(entry.table, rep_opts);
    Report report;
    report.command = "cohomology";
    report.seed = seed;

    Check laws;
    laws.tag = "cohomology.rep";
    auto violations = rep_check(rep);
    if (!violations.empty()) {
        laws.status = CheckStatus::fail;
        laws.detail = "bimodule law fails: " + violations.front().identity;
    }
    laws.metric("algebra", entry.table.name);
    report.checks.push_back(laws);

    Cohomology h = compute_H2(rep);
    Check dims;
    dims.tag = "cohomology.dims";
    dims.metric("dim_Z2", h.z2.dim());
    dims.metric("dim_B2", h.b2.dim());
    dims.metric("dim_H2", h.dim);
    report.checks.push_back(dims);

    Check reps;
    reps.tag = "cohomology.representatives";
    reps.metric("count", h.dim);
    for (std::size_t k = 0; k < h.representatives.size(); ++k)
        reps.metric("class" + std::to_string(k + 1),
                    format_bilinear(h.representatives[k], entry.table));
    report.checks.push_back(reps);
    return emit(std::move(report), format);
}

struct ExtendOpts {
    std::vector<std::string> omega;
    std::string cocycle_file;
    std::string out;
    std::string h_label = "u";
};

int cmd_extend(const SourceOpts& src, const RepOpts& rep_opts, const ExtendOpts& ext,
               unsigned long seed, const std::string& format) {
    CatalogEntry entry = load_source(src);
    RepresentationPair rep = build_rep(entry.table, rep_opts);
    AlgebraTable fiber = make_algebra("h", {ext.h_label});

    BilinearMap omega(entry.table.dim(), 1);
    if (!ext.cocycle_file.empty()) {
        std::ifstream in(ext.cocycle_file);
        if (!in) throw std::invalid_argument("cannot open cocycle file: " + ext.cocycle_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        omega = parse_cocycle(buffer.str(), entry.table, fiber);
    }
    for (const std::string& item : ext.omega) {
        const auto colon = item.rfind(':');
        const auto comma = item.find(',');
        if (colon == std::string::npos || comma == std::string::npos || comma > colon)
            throw std::invalid_argument("--omega expects left,right:value, got: " + item);
        const int i = entry.table.index_of(item.substr(0, comma));
        const int j = entry.table.index_of(item.substr(comma + 1, colon - comma - 1));
        if (i < 0 || j < 0)
            throw std::invalid_argument("--omega names an unknown basis label: " + item);
        omega.at(i, j, 0) += parse_rat_arg(item.substr(colon + 1), "--omega");
    }

    ExtensionSpec spec{entry.table, fiber, rep, omega};
    Report report;
    report.command = "extend";
    report.seed = seed;

    Check validity;
    validity.tag = "extend.validity";
    ValidityReport vr = validity_check(spec);
    if (!vr.valid) {
        validity.status = CheckStatus::fail;
        std::string detail = "extension data is invalid";
        auto cocycle_violations = cocycle_check(rep, omega);
        if (!cocycle_violations.empty()) {
            const auto& v = cocycle_violations.front();
            detail = "cocycle identity fails at (" + entry.table.basis[v.i] + "," +
                     entry.table.basis[v.j] + "," + entry.table.basis[v.k] + ")";
        } else if (!vr.violated.empty()) {
            detail = "structure identity fails: " + vr.violated.front();
        }
        validity.detail = detail;
    }
    validity.metric("cross_check_agrees", vr.cross_check_agrees ? "yes" : "no");
    validity.metric("omega", format_bilinear(omega, entry.table));
    report.checks.push_back(validity);

    if (vr.valid) {
        AlgebraTable built = build_extension(spec);
        Check build;
        build.tag = "extend.build";
        build.metric("name", built.name);
        build.metric("dim", built.dim());
        build.metric("split", omega.is_zero() ? "yes" : "no");
        build.metric("solvable", is_solvable(built) ? "yes" : "no");
        report.checks.push_back(build);

        if (entry.nilradical) {
            Check lemma;
            lemma.tag = "extend.nilradical";
            NilradicalLemmaReport lr = nilradical_lemma_check(spec, *entry.nilradical);
            const bool ok = lr.n_in_kernels && lr.nhat_check.status == NilradicalStatus::ok &&
                            lr.h_central_in_nhat && lr.quotient_matches &&
                            lr.decomposition_holds && !lr.lemma_violation;
            if (!ok) {
                lemma.status = CheckStatus::fail;
                lemma.detail = lr.detail.empty()
                                   ? "central-extension property fails for the probed nilradical"
                                   : lr.detail;
            }
            lemma.metric("center_equals_h", lr.center_equals_h ? "yes" : "no");
            lemma.metric("two_sided_criterion", lr.two_sided_criterion ? "yes" : "no");
            lemma.metric("one_sided_agrees", lr.one_sided_agrees ? "yes" : "no");
            report.checks.push_back(lemma);
        }

        if (!ext.out.empty()) {
            save_algebra_file(built, ext.out);
            Check wrote;
            wrote.tag = "extend.output";
            wrote.metric("file", ext.out);
            report.checks.push_back(wrote);
        } else {
            std::cerr << serialize_algebra(built);
        }
    }
    return emit(std::move(report), format);
}

int cmd_verify(unsigned long seed, const std::string& only, const std::string& format) {
    VerifyOptions opts;
    opts.seed = seed;
    opts.only = only;
    return emit(run_verification(opts), format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for solvable Leibniz algebra extensions"};
    app.require_subcommand(1);

    unsigned long seed = 1;
    std::string format = "human";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "seed for randomized probes")
            ->envname("LEIBNIZ_SEED");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    SourceOpts check_src;
    CLI::App* check = app.add_subcommand("check", "structure identity and invariants");
    add_source_flags(check, check_src, true);
    add_common(check);

    SourceOpts coh_src;
    RepOpts coh_rep;
    CLI::App* coh =
        app.add_subcommand("cohomology", "cocycle and coboundary spaces of a scalar action");
    add_source_flags(coh, coh_src, true);
    add_rep_flags(coh, coh_rep);
    add_common(coh);

    SourceOpts ext_src;
    RepOpts ext_rep;
    ExtendOpts ext_opts;
    CLI::App* ext = app.add_subcommand("extend", "build a one-dimensional extension");
    add_source_flags(ext, ext_src, true);
    add_rep_flags(ext, ext_rep);
    ext->add_option("--omega", ext_opts.omega,
                    "inline cocycle entry left,right:value (repeatable)");
    ext->add_option("--cocycle-file", ext_opts.cocycle_file, "cocycle in the JSON entry format");
    ext->add_option("--out", ext_opts.out, "write the built table to this file");
    ext->add_option("--h-label", ext_opts.h_label, "basis label of the adjoined line");
    add_common(ext);

    std::string only;
    CLI::App* ver = app.add_subcommand("verify", "run the full verification harness");
    ver->add_option("--only", only, "run only checks whose tag starts with this prefix");
    add_common(ver);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(check_src, seed, format);
        if (coh->parsed()) return cmd_cohomology(coh_src, coh_rep, seed, format);
        if (ext->parsed()) return cmd_extend(ext_src, ext_rep, ext_opts, seed, format);
        if (ver->parsed()) return cmd_verify(seed, only, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
