#include "rht/serialize.hpp"

namespace rht {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw SchemaError(what);
}

int lookup(const std::vector<GradedGenerator>& gens, const std::string& name) {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i);
    throw SchemaError("unknown name " + name);
}

Json names_of(const std::string& letters, const std::vector<GradedGenerator>& gens) {
    Json out = Json::array();
    for (char c : letters) out.push_back(gens.at(static_cast<unsigned char>(c)).name);
    return out;
}

std::string letters_of(const Json& j, const std::vector<GradedGenerator>& gens) {
    require(j.is_array(), "expected a list of names");
    std::string out;
    for (const auto& n : j) out.push_back(static_cast<char>(lookup(gens, n.get<std::string>())));
    return out;
}

Scalar coeff_of(const Json& term) {
    Scalar c;
    decode(term.at("coeff"), c);
    require(c != 0, "zero coefficient");
    return c;
}

Json encode_generators(const std::vector<GradedGenerator>& gens) {
    Json out = Json::array();
    for (const auto& g : gens) out.push_back({{"name", g.name}, {"degree", g.degree}});
    return out;
}

std::vector<GradedGenerator> decode_generators(const Json& j) {
    require(j.is_array(), "generators must be a list");
    std::vector<GradedGenerator> out;
    for (const auto& g : j) out.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    return out;
}

Json encode_monomial_terms(const Poly& p, const std::vector<GradedGenerator>& gens) {
    Json out = Json::array();
    for (const auto& [m, c] : p) out.push_back({{"coeff", encode(c)}, {"monomial", names_of(m, gens)}});
    return out;
}

Poly decode_monomial_terms(const Json& j, const std::vector<GradedGenerator>& gens) {
    require(j.is_array(), "expected a list of terms");
    Poly p;
    for (const auto& t : j) add_term(p, letters_of(t.at("monomial"), gens), coeff_of(t));
    return p;
}

Tensor decode_lie(const Alphabet& A, const Json& j) {
    if (j.is_string()) return gen(lookup(A.gens, j.get<std::string>()));
    require(j.is_array() && j.size() == 2, "a Lie expression is a name or a pair");
    return bracket(A, decode_lie(A, j[0]), decode_lie(A, j[1]));
}

Tensor decode_word_terms(const Json& j, const Alphabet& A) {
    require(j.is_array(), "expected a list of terms");
    Tensor t;
    for (const auto& term : j) {
        Scalar c = coeff_of(term);
        if (term.contains("lie")) axpy(t, c, decode_lie(A, term["lie"]));
        else add_term(t, letters_of(term.at("word"), A.gens), c);
    }
    return t;
}

SparseVec decode_vector(const Json& j, const std::vector<GradedGenerator>& basis) {
    require(j.is_array(), "expected a list of terms");
    SparseVec v;
    for (const auto& t : j) add_term(v, lookup(basis, t.at("name").get<std::string>()), coeff_of(t));
    return v;
}

Json encode_tables(const std::vector<SkewTable>& tables, const std::vector<GradedGenerator>& source,
                   const std::vector<GradedGenerator>& target) {
    Json out = Json::object();
    for (size_t k = 1; k < tables.size(); ++k) {
        Json entries = Json::array();
        for (const auto& [args, v] : tables[k].entries) {
            Json names = Json::array();
            for (int a : args) names.push_back(source.at(a).name);
            entries.push_back({{"args", names}, {"value", encode_vector(v, target)}});
        }
        out[std::to_string(k)] = entries;
    }
    return out;
}

template <class Set>
void decode_tables(const Json& j, const std::vector<GradedGenerator>& source, const std::vector<GradedGenerator>& target,
                   std::vector<SkewTable>& tables, Set set) {
    require(j.is_object(), "tables are keyed by arity");
    int kmax = 0;
    for (const auto& [key, entries] : j.items()) kmax = std::max(kmax, std::stoi(key));
    tables.assign(kmax == 0 ? 0 : kmax + 1, {});
    for (const auto& [key, entries] : j.items()) {
        int k = std::stoi(key);
        require(k >= 1 && std::to_string(k) == key, "arity keys are positive integers");
        for (const auto& e : entries) {
            Tuple args;
            for (const auto& n : e.at("args")) args.push_back(lookup(source, n.template get<std::string>()));
            require(static_cast<int>(args.size()) == k, "arity mismatch");
            set(args, decode_vector(e.at("value"), target));
        }
    }
}

}  // namespace

Json encode(const Scalar& s) { return to_string(s); }

void decode(const Json& j, Scalar& s) {
    require(j.is_string(), "scalars are \"p/q\" strings");
    s = parse_scalar(j.get<std::string>());
}

Json encode_word_terms(const Tensor& t, const std::vector<GradedGenerator>& gens) {
    Json out = Json::array();
    for (const auto& [w, c] : t) out.push_back({{"coeff", encode(c)}, {"word", names_of(w, gens)}});
    return out;
}

Json encode_vector(const SparseVec& v, const std::vector<GradedGenerator>& basis) {
    Json out = Json::array();
    for (const auto& [i, c] : v) out.push_back({{"coeff", encode(c)}, {"name", basis.at(i).name}});
    return out;
}

Json encode(const DGLPresentation& D) {
    Json diff = Json::object();
    for (int g = 0; g < D.alph.size(); ++g) diff[D.alph.gens[g].name] = encode_word_terms(D.diff[g], D.alph.gens);
    return {{"truncation", D.W()}, {"generators", encode_generators(D.alph.gens)}, {"differential", diff}};
}

void decode(const Json& j, DGLPresentation& D) {
    D = DGLPresentation{};
    D.alph.max_len = j.at("truncation").get<int>();
    require(D.alph.max_len >= 1, "truncation must be positive");
    for (const auto& g : decode_generators(j.at("generators"))) D.add_generator(g.name, g.degree);
    const Json& diff = j.at("differential");
    require(diff.is_object(), "differential is keyed by generator");
    for (const auto& [name, terms] : diff.items()) D.set_diff(lookup(D.alph.gens, name), decode_word_terms(terms, D.alph));
}

Json encode(const LInfinityAlgebra& L) {
    return {{"basis", encode_generators(L.basis)}, {"brackets", encode_tables(L.brackets, L.basis, L.basis)}};
}

void decode(const Json& j, LInfinityAlgebra& L) {
    L = LInfinityAlgebra{};
    for (const auto& b : decode_generators(j.at("basis"))) L.add_basis(b.name, b.degree);
    std::vector<SkewTable> tables;
    decode_tables(j.at("brackets"), L.basis, L.basis, tables, [](const Tuple&, const SparseVec&) {});
    L.brackets.resize(tables.size());
    decode_tables(j.at("brackets"), L.basis, L.basis, tables,
                  [&](const Tuple& args, const SparseVec& v) { L.set_bracket(args, v); });
}

Json encode(const LInfinityMorphism& f) {
    return {{"source", encode(f.source)},
            {"target", encode(f.target)},
            {"components", encode_tables(f.comps, f.source.basis, f.target.basis)}};
}

void decode(const Json& j, LInfinityMorphism& f) {
    f = LInfinityMorphism{};
    decode(j.at("source"), f.source);
    decode(j.at("target"), f.target);
    std::vector<SkewTable> tables;
    decode_tables(j.at("components"), f.source.basis, f.target.basis, tables, [](const Tuple&, const SparseVec&) {});
    f.comps.resize(tables.size());
    decode_tables(j.at("components"), f.source.basis, f.target.basis, tables,
                  [&](const Tuple& args, const SparseVec& v) { f.set_component(args, v); });
}

Json encode(const FreeCDGA& A) {
    Json diff = Json::object();
    for (int g = 0; g < A.size(); ++g) diff[A.gens[g].name] = encode_monomial_terms(A.diff[g], A.gens);
    return {{"max_monomial", A.P}, {"generators", encode_generators(A.gens)}, {"differential", diff}};
}

void decode(const Json& j, FreeCDGA& A) {
    A = FreeCDGA{};
    A.P = j.at("max_monomial").get<int>();
    require(A.P >= 1, "max_monomial must be positive");
    for (const auto& g : decode_generators(j.at("generators"))) A.add_generator(g.name, g.degree);
    const Json& diff = j.at("differential");
    require(diff.is_object(), "differential is keyed by generator");
    for (const auto& [name, terms] : diff.items()) A.set_diff(lookup(A.gens, name), decode_monomial_terms(terms, A.gens));
}

Json encode(const AlgebraMap& f) {
    Json images = Json::object();
    for (int g = 0; g < f.domain.size(); ++g) images[f.domain.gens[g].name] = encode_monomial_terms(f.images[g], f.codomain.gens);
    return {{"domain", encode(f.domain)}, {"codomain", encode(f.codomain)}, {"images", images}};
}

void decode(const Json& j, AlgebraMap& f) {
    f = AlgebraMap{};
    decode(j.at("domain"), f.domain);
    decode(j.at("codomain"), f.codomain);
    const Json& images = j.at("images");
    require(images.is_object(), "images are keyed by generator");
    f.images.assign(f.domain.size(), {});
    for (const auto& [name, terms] : images.items())
        f.images[lookup(f.domain.gens, name)] = decode_monomial_terms(terms, f.codomain.gens);
}

Json encode(const AInfinityCoalgebra& C) {
    Json delta = Json::object();
    for (const auto& [k, ts] : C.delta) {
        Json values = Json::object();
        for (int i = 0; i < C.dim() && i < static_cast<int>(ts.size()); ++i)
            values[C.basis[i].name] = encode_word_terms(ts[i], C.basis);
        delta[std::to_string(k)] = values;
    }
    return {{"basis", encode_generators(C.basis)}, {"delta", delta}};
}

void decode(const Json& j, AInfinityCoalgebra& C) {
    C = AInfinityCoalgebra{};
    C.basis = decode_generators(j.at("basis"));
    Alphabet A;
    A.gens = C.basis;
    for (const auto& [key, values] : j.at("delta").items()) {
        int k = std::stoi(key);
        require(k >= 1 && std::to_string(k) == key, "arity keys are positive integers");
        for (int i = 0; i < C.dim(); ++i) C.set(k, i, {});
        for (const auto& [name, terms] : values.items()) C.set(k, lookup(C.basis, name), decode_word_terms(terms, A));
    }
}

Json encode(const std::vector<HomologyEntry>& h) {
    Json out = Json::array();
    for (const auto& e : h)
        out.push_back({{"degree", e.degree}, {"dim", e.dim}, {"boundary_affected", e.boundary_affected}});
    return out;
}

Json encode(const std::vector<CohomologyEntry>& h) {
    Json out = Json::array();
    for (const auto& e : h)
        out.push_back({{"degree", e.degree}, {"dim", e.dim}, {"boundary_affected", e.boundary_affected}});
    return out;
}

Json document(const std::string& kind, const Json& data) {
    return {{"format", "rht"}, {"version", kSchemaVersion}, {"kind", kind}, {"data", data}};
}

const Json& payload(const Json& doc, const std::string& kind) {
    require(doc.is_object(), "document must be an object");
    require(doc.contains("format") && doc["format"] == "rht", "not an rht document");
    require(doc.contains("version") && doc["version"].is_number_integer(), "missing schema version");
    int v = doc["version"].get<int>();
    if (v != kSchemaVersion)
        throw SchemaError("schema version " + std::to_string(v) + " is not supported (expected " +
                          std::to_string(kSchemaVersion) + ")");
    require(doc.contains("kind") && doc["kind"] == kind, "expected a document of kind " + kind);
    require(doc.contains("data"), "missing data");
    return doc["data"];
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace rht
