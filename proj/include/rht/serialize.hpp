#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rht/cdga.hpp"
#include "rht/transfer.hpp"

namespace rht {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json encode(const Scalar& s);
void decode(const Json& j, Scalar& s);

// Generators and basis elements are referred to by name throughout.
Json encode(const DGLPresentation& D);
Json encode(const LInfinityAlgebra& L);
Json encode(const LInfinityMorphism& f);
Json encode(const FreeCDGA& A);
Json encode(const AlgebraMap& f);
Json encode(const AInfinityCoalgebra& C);
Json encode(const std::vector<HomologyEntry>& h);
Json encode(const std::vector<CohomologyEntry>& h);
// Words on named letters: [{"coeff": "p/q", "word": [names]}].
Json encode_word_terms(const Tensor& t, const std::vector<GradedGenerator>& gens);
Json encode_vector(const SparseVec& v, const std::vector<GradedGenerator>& basis);

// Differential terms may also be given as {"coeff", "lie": nested pairs of names}.
void decode(const Json& j, DGLPresentation& D);
void decode(const Json& j, LInfinityAlgebra& L);
void decode(const Json& j, LInfinityMorphism& f);
void decode(const Json& j, FreeCDGA& A);
void decode(const Json& j, AlgebraMap& f);
void decode(const Json& j, AInfinityCoalgebra& C);

template <class T> struct Kind;
template <> struct Kind<DGLPresentation> { static constexpr const char* name = "dgl"; };
template <> struct Kind<LInfinityAlgebra> { static constexpr const char* name = "linfty-algebra"; };
template <> struct Kind<LInfinityMorphism> { static constexpr const char* name = "linfty-morphism"; };
template <> struct Kind<FreeCDGA> { static constexpr const char* name = "cdga"; };
template <> struct Kind<AlgebraMap> { static constexpr const char* name = "cdga-map"; };
template <> struct Kind<AInfinityCoalgebra> { static constexpr const char* name = "ainfty-coalgebra"; };

// {"format": "rht", "version": 1, "kind": ..., "data": ...}
Json document(const std::string& kind, const Json& data);
// Checks the envelope header; throws SchemaError on mismatch.
const Json& payload(const Json& doc, const std::string& kind);
// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);
Json parse_document(const std::string& text);

template <class T>
std::string export_object(const T& x) {
    return canonical_dump(document(Kind<T>::name, encode(x)));
}

template <class T>
T import_object(const std::string& text) {
    T out;
    try {
        decode(payload(parse_document(text), Kind<T>::name), out);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    } catch (const std::out_of_range& e) {
        throw SchemaError(e.what());
    }
    return out;
}

}  // namespace rht
