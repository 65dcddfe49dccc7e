#pragma once

#include <random>
#include <string>
#include <vector>

#include "rht/cdga.hpp"

namespace rht {

// A small DGL seen as an L-infinity algebra, and the algebra obtained by
// conjugating its cochain differential with a random triangular automorphism.
struct FleetMember {
    std::string name;
    LInfinityAlgebra source;
    LInfinityAlgebra L;
    // source -> L, identity in arity one
    LInfinityMorphism iso;
    // Maurer-Cartan elements of the source
    std::vector<SparseVec> source_mc;
    // word length of each basis element
    std::vector<int> weights;
};

// Sources: 0 = Lib(a,c) with da = -[a,a]/2, dc = -[a,c]; 1 = the same with dc = 0;
// 2 = Lib(a,b) with da = -[a,a]/2, db = -[b,b]/2 cut at length 2; the first two
// are cut at length 3. 3 = a random two-step algebra with brackets up to l_4.
FleetMember fleet_member(std::mt19937_64& rng, int source, int density = 2);
std::vector<FleetMember> build_fleet(unsigned long long seed, int count);

// Lib(u) * Lib(c1, c2) cut at length N, du = -[u,u]/2, with a random
// differential on the c's, together with a Maurer-Cartan element; for
// twisted draws the presentation is perturbed by u and z = -u.
struct PointedDGL {
    DGLPresentation dgl;
    Tensor z;
    std::string name;
};
PointedDGL random_point_dgl(std::mt19937_64& rng, int N = 3);

// Conjugates d by v -> v + p(v) and returns the map (Lambda V, d') -> (Lambda V, d).
AlgebraMap conjugate(const FreeCDGA& A, const std::vector<Poly>& perturbation, const std::vector<int>& weights);

}  // namespace rht
