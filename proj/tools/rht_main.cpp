#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rht/acceptance.hpp"
#include "rht/fleet.hpp"
#include "rht/ls.hpp"
#include "rht/models.hpp"

using namespace rht;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    Json params = Json::object();
    Json checks = Json::array();
    Json result = Json::object();
    bool ok = true;

    void check(const std::string& name, bool pass, const Json& residual = nullptr) {
        Json c = {{"name", name}, {"pass", pass}};
        if (!pass && !residual.is_null()) c["residual"] = residual;
        checks.push_back(c);
        ok = ok && pass;
    }

    Json to_json() const {
        return {{"command", command}, {"parameters", params}, {"checks", checks}, {"result", result}, {"pass", ok}};
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "command: " << command << "\n";
        for (const auto& [k, v] : params.items()) os << "  " << k << " = " << v.dump() << "\n";
        for (const auto& c : checks) {
            os << "check " << c["name"].get<std::string>() << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
            if (c.contains("residual")) os << "  residual: " << c["residual"].dump() << "\n";
        }
        for (const auto& [k, v] : result.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        os << (ok ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
};

struct Globals {
    std::string format = "text";
    std::string out;
    unsigned long long seed = 20261015ULL;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out);
    if (!out) throw InputError("cannot write " + g.out);
    out << text;
}

int emit(const Globals& g, const Report& r) {
    write_output(g, g.format == "json" ? canonical_dump(r.to_json()) : r.to_text());
    return r.ok ? 0 : 1;
}

int default_truncation() {
    if (const char* s = std::getenv("RHT_MAX_WORD_LENGTH")) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw InputError("RHT_MAX_WORD_LENGTH must be an integer");
        }
    }
    return 6;
}

// "a=1,b=-1/2" against the names of a basis
SparseVec parse_point(const std::string& text, const std::vector<GradedGenerator>& basis) {
    SparseVec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("point terms look like name=p/q");
        std::string name = item.substr(0, eq);
        int idx = -1;
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i].name == name) idx = static_cast<int>(i);
        if (idx < 0) throw InputError("unknown basis element " + name);
        add_term(v, idx, parse_scalar(item.substr(eq + 1)));
    }
    return v;
}

Json d2_payload(const std::vector<D2Violation>& v, const Alphabet& A) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back({{"generator", x.generator}, {"residual", encode_word_terms(x.residual, A.gens)}});
    return out;
}

DGLPresentation ls_family(const std::string& which, int W) {
    if (which == "ls") return build_ls(W);
    if (which == "cylinder") return build_cylinder(W);
    if (which == "interval") return build_interval(W);
    throw InputError("unknown construction " + which);
}

TreeSignRule parse_rule(const std::string& s) {
    if (s == "odd-subtree") return TreeSignRule::OddSubtree;
    if (s == "left-leaves") return TreeSignRule::LeftLeaves;
    if (s == "trivial") return TreeSignRule::Trivial;
    throw InputError("unknown sign rule " + s);
}

ComponentSpec component_from_json(const Json& j) {
    if (j.contains("sphere")) return ComponentSpec::of_sphere(j["sphere"].get<int>());
    if (j.contains("dgl")) {
        DGLPresentation D;
        decode(j["dgl"], D);
        return ComponentSpec::of_dgl(D);
    }
    if (j.is_object() && j.empty()) return {};
    throw SchemaError("a component is {\"sphere\": n} or {\"dgl\": presentation}");
}

struct ModelSpec {
    ComponentSpec base;
    std::vector<ComponentSpec> components;
};

ModelSpec read_model_spec(const std::string& path) {
    Json j = parse_document(read_file(path));
    ModelSpec s;
    try {
        if (!j.is_object() || !j.contains("base") || !j.contains("components")) throw SchemaError("model description needs base and components");
        s.base = component_from_json(j["base"]);
        for (const auto& c : j["components"]) s.components.push_back(component_from_json(c));
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(e.what());
    }
    return s;
}

Json homology_rows(const std::vector<std::vector<HomologyEntry>>& runs) {
    Json out = Json::array();
    for (const auto& h : runs) out.push_back(encode(h));
    return out;
}

void require_at_least(int value, int bound, const std::string& name) {
    if (value < bound) throw InputError(name + " must be at least " + std::to_string(bound));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with DGLs, L-infinity algebras, cochain algebras and models"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", g.out, "write the report to a file");
    app.add_option("--seed", g.seed, "seed for randomized checks");

    std::function<int()> action;
    std::optional<int> W;
    auto truncation = [&](CLI::App* sub) {
        sub->add_option("--max-word-length,-W", W, "word-length truncation (default RHT_MAX_WORD_LENGTH or 6)");
    };
    auto resolved_W = [&]() {
        int w = W ? *W : default_truncation();
        require_at_least(w, 2, "max word length");
        return w;
    };

    // ls
    auto* ls = app.add_subcommand("ls", "Lawrence-Sullivan construction")->require_subcommand(1);
    std::string family = "ls";
    auto* ls_build = ls->add_subcommand("build", "export the presentation");
    truncation(ls_build);
    ls_build->add_option("--construction", family)->check(CLI::IsMember({"ls", "cylinder", "interval"}));
    ls_build->callback([&] {
        action = [&] {
            write_output(g, canonical_dump(document("dgl", encode(ls_family(family, resolved_W())))));
            return 0;
        };
    });
    auto* ls_d2 = ls->add_subcommand("check-d2", "d^2 = 0 on the LS algebra, cylinder and interval");
    truncation(ls_d2);
    ls_d2->callback([&] {
        action = [&] {
            Report r;
            r.command = "ls check-d2";
            int w = resolved_W();
            r.params["max_word_length"] = w;
            for (const std::string f : {"ls", "cylinder", "interval"}) {
                auto D = ls_family(f, w);
                auto v = d_squared_report(D);
                r.check("d2-" + f, v.empty(), d2_payload(v, D.alph));
                r.result["violations-" + f] = static_cast<int>(v.size());
            }
            return emit(g, r);
        };
    });
    std::string by = "x", on = "a", expect;
    auto* ls_gauge = ls->add_subcommand("gauge", "gauge action of +-x on a or b");
    truncation(ls_gauge);
    ls_gauge->add_option("--by", by)->check(CLI::IsMember({"x", "-x"}));
    ls_gauge->add_option("--on", on)->check(CLI::IsMember({"a", "b"}));
    ls_gauge->add_option("--expect", expect, "a or b; checked when given")->check(CLI::IsMember({"a", "b"}));
    ls_gauge->callback([&] {
        action = [&] {
            Report r;
            r.command = "ls gauge";
            int w = resolved_W();
            r.params = {{"max_word_length", w}, {"by", by}, {"on", on}};
            auto L = build_ls(w);
            Tensor x = gen(L.index_of("x"), by == "x" ? 1 : -1);
            Tensor value = gauge(L, x, gen(L.index_of(on)));
            r.result["value"] = encode_word_terms(value, L.alph.gens);
            r.result["rendered"] = render(L.alph, value);
            if (!expect.empty()) r.check("equals-" + expect, value == gen(L.index_of(expect)));
            return emit(g, r);
        };
    });
    auto* ls_cmp = ls->add_subcommand("compare-cylinder", "LS differential against the cylinder in the tensor algebra");
    truncation(ls_cmp);
    ls_cmp->callback([&] {
        action = [&] {
            Report r;
            r.command = "ls compare-cylinder";
            int w = resolved_W();
            r.params["max_word_length"] = w;
            auto m = enveloping_compare(build_ls(w), build_cylinder(w));
            Json mm = Json::array();
            for (const auto& x : m)
                mm.push_back({{"generator", x.generator}, {"word", x.word}, {"ls", encode(x.lhs)}, {"cylinder", encode(x.rhs)}});
            r.check("word-for-word", m.empty(), mm);
            return emit(g, r);
        };
    });

    // transfer
    auto* tr = app.add_subcommand("transfer", "homotopy transfer to the interval coalgebra")->require_subcommand(1);
    int k = 2, J = 0;
    std::string rule = "odd-subtree";
    auto* tr_run = tr->add_subcommand("run", "transferred diagonal Delta_k and its trees");
    tr_run->add_option("--k", k)->required();
    tr_run->add_option("--truncation,-J", J);
    tr_run->add_option("--rule", rule)->check(CLI::IsMember({"odd-subtree", "left-leaves", "trivial"}));
    tr_run->callback([&] {
        action = [&] {
            require_at_least(k, 1, "k");
            int j = J ? J : k + 3;
            require_at_least(j, 2, "truncation");
            if (j < k + 1) throw InputError("truncation must be at least k + 1");
            Report r;
            r.command = "transfer run";
            r.params = {{"k", k}, {"truncation", j}, {"rule", rule}};
            auto cd = build_contraction(j);
            auto d = transferred_diagonal(cd, k, parse_rule(rule));
            std::vector<GradedGenerator> N = cd.N;
            Json delta = Json::object();
            for (int i = 0; i < 3; ++i) delta[N[i].name] = encode_word_terms(d[i], N);
            r.result["delta"] = delta;
            Json trees = Json::array();
            for (const auto& T : enumerate_trees(k))
                trees.push_back({{"tree", T.to_string()}, {"contributing", T.contributing()},
                                 {"sign", k >= 2 ? tree_sign(T, parse_rule(rule)) : 1}});
            r.result["trees"] = trees;
            return emit(g, r);
        };
    });
    auto* tr_verify = tr->add_subcommand("verify-diagonals", "transferred diagonals against the closed form");
    tr_verify->add_option("--k", k)->required();
    tr_verify->add_option("--truncation,-J", J);
    tr_verify->add_option("--rule", rule)->check(CLI::IsMember({"odd-subtree", "left-leaves", "trivial"}));
    tr_verify->callback([&] {
        action = [&] {
            require_at_least(k, 2, "k");
            int j = J ? J : k + 3;
            if (j < k + 1) throw InputError("truncation must be at least k + 1");
            Report r;
            r.command = "transfer verify-diagonals";
            r.params = {{"k", k}, {"truncation", j}, {"rule", rule}};
            auto v = verify_diagonals(k, j, parse_rule(rule));
            std::vector<GradedGenerator> N{{"y", 0}, {"z", 0}, {"c", 1}};
            Json residual = Json::object();
            for (int i = 0; i < 3; ++i) {
                Tensor diff = v.computed[i];
                axpy(diff, Scalar(-1), v.expected[i]);
                residual[N[i].name] = encode_word_terms(diff, N);
            }
            r.check("closed-form", v.matches, residual);
            r.check("stable-in-truncation", v.stable);
            r.check("contributing-trees", v.contributing_trees == (1 << (k - 2)));
            r.result["trees"] = v.trees;
            r.result["contributing_trees"] = v.contributing_trees;
            return emit(g, r);
        };
    });
    auto* tr_contr = tr->add_subcommand("contraction", "contraction identities of the interval coalgebra");
    tr_contr->add_option("--truncation,-J", J);
    tr_contr->callback([&] {
        action = [&] {
            int j = J ? J : 10;
            require_at_least(j, 2, "truncation");
            Report r;
            r.command = "transfer contraction";
            r.params["truncation"] = j;
            auto v = contraction_identities(build_contraction(j));
            r.check("identities", v.empty(), v);
            return emit(g, r);
        };
    });

    // linfty
    auto* lf = app.add_subcommand("linfty", "L-infinity algebras")->require_subcommand(1);
    std::string input, point;
    int arity = 4;
    auto* lf_check = lf->add_subcommand("check", "Jacobi identities through an arity");
    lf_check->add_option("--input", input)->required();
    lf_check->add_option("--arity", arity);
    lf_check->callback([&] {
        action = [&] {
            require_at_least(arity, 1, "arity");
            auto L = import_object<LInfinityAlgebra>(read_file(input));
            Report r;
            r.command = "linfty check";
            r.params = {{"input", input}, {"arity", arity}};
            for (int n = 1; n <= arity; ++n) {
                auto v = jacobi_report(L, n);
                Json res = Json::array();
                for (const auto& x : v) {
                    Json args = Json::array();
                    for (int a : x.args) args.push_back(L.basis[a].name);
                    res.push_back({{"args", args}, {"residual", encode_vector(x.residual, L.basis)}});
                }
                r.check("jacobi-" + std::to_string(n), v.empty(), res);
            }
            return emit(g, r);
        };
    });
    auto* lf_mc = lf->add_subcommand("mc", "Maurer-Cartan residuals of a point");
    lf_mc->add_option("--input", input)->required();
    lf_mc->add_option("--point", point, "name=p/q,...")->required();
    lf_mc->callback([&] {
        action = [&] {
            auto L = import_object<LInfinityAlgebra>(read_file(input));
            auto z = parse_point(point, L.basis);
            Report r;
            r.command = "linfty mc";
            r.params = {{"input", input}, {"point", point}};
            auto res = mc_residual(L, z);
            auto co = coalgebra_mc_residual(L, z);
            r.check("maurer-cartan", res.empty(), encode_vector(res, L.basis));
            r.result["coalgebra_residual"] = encode_vector(co, L.basis);
            return emit(g, r);
        };
    });
    auto* lf_pert = lf->add_subcommand("perturb", "perturbation at a Maurer-Cartan point and its positive truncation");
    lf_pert->add_option("--input", input)->required();
    lf_pert->add_option("--point", point)->required();
    lf_pert->callback([&] {
        action = [&] {
            auto L = import_object<LInfinityAlgebra>(read_file(input));
            auto z = parse_point(point, L.basis);
            if (!is_mc(L, z)) throw InputError("the point is not Maurer-Cartan");
            auto Lz = perturb(L, z);
            Report r;
            r.command = "linfty perturb";
            r.params = {{"input", input}, {"point", point}};
            r.result["perturbed"] = encode(Lz);
            r.result["truncated"] = encode(truncate_positive(Lz).L);
            return emit(g, r);
        };
    });
    auto* lf_can = lf->add_subcommand("canonical", "canonical morphism from Lib(u) and its identities");
    lf_can->add_option("--input", input)->required();
    lf_can->add_option("--point", point)->required();
    lf_can->add_option("--arity", arity);
    lf_can->callback([&] {
        action = [&] {
            require_at_least(arity, 1, "arity");
            auto L = import_object<LInfinityAlgebra>(read_file(input));
            auto z = parse_point(point, L.basis);
            auto phi = canonical_mc_morphism(L, z, arity);
            Report r;
            r.command = "linfty canonical";
            r.params = {{"input", input}, {"point", point}, {"arity", arity}};
            for (const auto& c : check_canonical_identities(phi, z, arity)) {
                std::string k = std::to_string(c.k);
                r.check("first-" + k, c.first, encode_vector(c.first_residual, L.basis));
                r.check("second-" + k, c.second, encode_vector(c.second_residual, L.basis));
                r.result["second_reordered_" + k] = c.second_reordered;
            }
            r.result["morphism"] = encode(phi);
            return emit(g, r);
        };
    });

    // cdga
    auto* cd = app.add_subcommand("cdga", "cochain algebras")->require_subcommand(1);
    int P = 6, lo = -3, hi = 3;
    bool literal = false;
    std::string emit_path;
    auto* cd_coch = cd->add_subcommand("cochains", "cochain algebra of an L-infinity algebra");
    cd_coch->add_option("--input", input)->required();
    cd_coch->add_option("--max-monomial,-P", P);
    cd_coch->add_flag("--literal", literal, "skip the degree-0 rescaling");
    cd_coch->add_option("--emit", emit_path, "also write the algebra as a cdga document");
    cd_coch->callback([&] {
        action = [&] {
            require_at_least(P, 1, "max monomial");
            auto L = import_object<LInfinityAlgebra>(read_file(input));
            auto A = literal ? cochains_literal(L, P) : cochains(L, P);
            Report r;
            r.command = "cdga cochains";
            r.params = {{"input", input}, {"max_monomial", P}, {"literal", literal}};
            auto v = d_squared_report(A);
            Json res = Json::array();
            for (const auto& x : v) res.push_back({{"generator", x.generator}, {"residual", render(A, x.residual)}});
            r.check("d2", v.empty(), res);
            r.result["algebra"] = encode(A);
            if (!emit_path.empty()) {
                std::ofstream f(emit_path);
                if (!f) throw InputError("cannot write " + emit_path);
                f << export_object(A);
            }
            return emit(g, r);
        };
    });
    auto* cd_coh = cd->add_subcommand("cohomology", "cohomology over a window of superscript degrees");
    cd_coh->add_option("--input", input, "cdga document")->required();
    cd_coh->add_option("--lo", lo);
    cd_coh->add_option("--hi", hi);
    cd_coh->callback([&] {
        action = [&] {
            if (lo > hi) throw InputError("empty window");
            auto A = import_object<FreeCDGA>(read_file(input));
            Report r;
            r.command = "cdga cohomology";
            r.params = {{"input", input}, {"lo", lo}, {"hi", hi}};
            r.result["cohomology"] = encode(cohomology(A, lo, hi));
            return emit(g, r);
        };
    });
    auto* cd_loc = cd->add_subcommand("localize", "localization of cochains at a Maurer-Cartan point");
    cd_loc->add_option("--input", input, "linfty-algebra document")->required();
    cd_loc->add_option("--point", point);
    cd_loc->add_option("--max-monomial,-P", P);
    cd_loc->callback([&] {
        action = [&] {
            require_at_least(P, 1, "max monomial");
            auto L = import_object<LInfinityAlgebra>(read_file(input));
            auto z = parse_point(point, L.basis);
            auto C = cochains(L, P);
            auto f = augmentation_from_mc(L, z);
            Report r;
            r.command = "cdga localize";
            r.params = {{"input", input}, {"point", point}, {"max_monomial", P}};
            bool aug = is_augmentation(C, f);
            r.check("augmentation", aug);
            if (aug) {
                auto loc = localize(C, f);
                auto expected = generator_profile(cochains(truncate_positive(perturb(L, z)).L, P));
                auto profile = generator_profile(loc.algebra);
                r.check("profile-matches-truncated-perturbation", profile == expected);
                Json pj = Json::object();
                for (const auto& [d, n] : profile) pj[std::to_string(d)] = n;
                r.result["profile"] = pj;
                r.result["algebra"] = encode(loc.algebra);
            }
            return emit(g, r);
        };
    });

    // model
    auto* md = app.add_subcommand("model", "DGL models of non-connected spaces")->require_subcommand(1);
    std::string spec, at = "0";
    std::vector<int> maxlens{4, 6, 8};
    int hom_lo = 0, hom_hi = 3, degree = 1;
    auto* md_asm = md->add_subcommand("assemble", "coproduct of perturbed components and the base");
    md_asm->add_option("--spec", spec)->required();
    truncation(md_asm);
    md_asm->callback([&] {
        action = [&] {
            auto s = read_model_spec(spec);
            int w = resolved_W();
            auto A = assemble(s.components, s.base, w);
            Report r;
            r.command = "model assemble";
            r.params = {{"spec", spec}, {"max_word_length", w}};
            r.check("d2", d_squared_report(A.M).empty());
            Json mc = Json::array();
            for (size_t j = 0; j < A.mc_elements.size(); ++j) {
                bool ok = dgl_mc_residual(A.M, A.mc_elements[j]).empty();
                r.check(j == 0 ? "mc-0" : "mc-" + A.u_names[j - 1], ok);
                mc.push_back(encode_word_terms(A.mc_elements[j], A.M.alph.gens));
            }
            r.result["model"] = encode(A.M);
            r.result["mc_elements"] = mc;
            r.result["renamed"] = A.renamed;
            return emit(g, r);
        };
    });
    auto* md_loc = md->add_subcommand("localize", "homology of M^(z) against the component");
    md_loc->add_option("--spec", spec)->required();
    md_loc->add_option("--at", at, "0 or u_j (j from 1)");
    md_loc->add_option("--maxlens", maxlens);
    md_loc->add_option("--lo", hom_lo);
    md_loc->add_option("--hi", hom_hi);
    md_loc->callback([&] {
        action = [&] {
            auto s = read_model_spec(spec);
            int which = 0;
            if (at != "0") {
                if (at.rfind("u", 0) != 0) throw InputError("--at takes 0 or u<j>");
                std::string rest = at.substr(at[1] == '_' ? 2 : 1);
                try {
                    which = std::stoi(rest);
                } catch (const std::exception&) {
                    throw InputError("--at takes 0 or u<j>");
                }
                if (which < 1 || which > static_cast<int>(s.components.size()))
                    throw InputError("no recorded Maurer-Cartan element " + at);
            }
            for (int n : maxlens) require_at_least(n, 2, "maxlen");
            if (hom_lo < 0 || hom_lo > hom_hi) throw InputError("window must lie in degrees >= 0");
            auto rep = component_localize(s.components, s.base, which, hom_lo, hom_hi, maxlens);
            Report r;
            r.command = "model localize";
            r.params = {{"spec", spec}, {"at", at}, {"maxlens", maxlens}, {"lo", hom_lo}, {"hi", hom_hi}};
            r.check("stable", rep.stable);
            r.check("agrees-with-component", rep.agree);
            r.result["model"] = homology_rows(rep.model);
            r.result["component"] = homology_rows(rep.component);
            return emit(g, r);
        };
    });
    auto* md_acy = md->add_subcommand("probe-acyclicity", "homology of (Lib(u) * <a>)^u or of a given component");
    md_acy->add_option("--input", input, "dgl document; default Lib(a)");
    md_acy->add_option("--degree", degree, "degree of a for the default");
    md_acy->add_option("--maxlens", maxlens);
    md_acy->add_option("--lo", hom_lo);
    md_acy->add_option("--hi", hom_hi);
    md_acy->callback([&] {
        action = [&] {
            for (int n : maxlens) require_at_least(n, 2, "maxlen");
            if (hom_lo > hom_hi) throw InputError("empty window");
            DGLPresentation L;
            if (input.empty()) {
                require_at_least(degree, 0, "degree");
                L.add_generator("a", degree);
            } else {
                L = import_object<DGLPresentation>(read_file(input));
            }
            int top = *std::max_element(maxlens.begin(), maxlens.end()) + 1;
            if (L.W() < top) L.alph.max_len = top;
            auto p = acyclicity_probe(L, hom_lo, hom_hi, maxlens);
            Report r;
            r.command = "model probe-acyclicity";
            r.params = {{"input", input}, {"degree", degree}, {"maxlens", maxlens}, {"lo", hom_lo}, {"hi", hom_hi}};
            r.check("filtered-zero", p.stabilized_zero);
            r.result["quotient"] = homology_rows(p.quotient);
            r.result["filtered"] = homology_rows(p.filtered);
            return emit(g, r);
        };
    });

    // suite
    auto* su = app.add_subcommand("suite", "acceptance suites")->require_subcommand(1);
    std::string level = "ci";
    auto* su_golden = su->add_subcommand("golden", "acceptance criteria against their recorded outcomes");
    su_golden->add_option("--level", level)->check(CLI::IsMember({"ci", "full"}));
    su_golden->callback([&] {
        action = [&] {
            AcceptanceOptions opt;
            opt.level = level == "ci" ? Level::Ci : Level::Full;
            opt.seed = g.seed;
            Report r;
            r.command = "suite golden";
            r.params = {{"level", level}, {"seed", g.seed}};
            Json lines = Json::array();
            int passing = 0;
            for (const auto& c : run_acceptance(opt)) {
                passing += c.pass;
                r.check("criterion-" + std::to_string(c.id) + (recorded_outcome(c.id) ? "-passes" : "-fails-as-recorded"),
                        c.pass == recorded_outcome(c.id), c.to_json());
                lines.push_back(c.line());
            }
            r.result["criteria"] = lines;
            r.result["passing"] = std::to_string(passing) + "/" + std::to_string(kCriteria);
            return emit(g, r);
        };
    });

    // round-trip of any document
    auto* rt = app.add_subcommand("roundtrip", "import a document and export it again");
    rt->add_option("--input", input)->required();
    rt->callback([&] {
        action = [&] {
            std::string text = read_file(input);
            Json doc = parse_document(text);
            if (!doc.is_object() || !doc.contains("kind")) throw SchemaError("missing kind");
            std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
            std::string again;
            if (kind == "dgl") again = export_object(import_object<DGLPresentation>(text));
            else if (kind == "linfty-algebra") again = export_object(import_object<LInfinityAlgebra>(text));
            else if (kind == "linfty-morphism") again = export_object(import_object<LInfinityMorphism>(text));
            else if (kind == "cdga") again = export_object(import_object<FreeCDGA>(text));
            else if (kind == "cdga-map") again = export_object(import_object<AlgebraMap>(text));
            else if (kind == "ainfty-coalgebra") again = export_object(import_object<AInfinityCoalgebra>(text));
            else throw SchemaError("unknown kind " + kind);
            write_output(g, again);
            return 0;
        };
    });

    std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
        for (auto* sub : a->get_subcommands({})) {
            sub->fallthrough();
            fall(sub);
        }
    };
    fall(&app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    }
}
