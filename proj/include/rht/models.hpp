#pragma once

#include <string>
#include <vector>

#include "rht/dgl.hpp"

namespace rht {

struct ComponentSpec {
    // a presentation, or the sphere S^n modelled by Lib(a) with |a| = n - 1 and d = 0
    DGLPresentation dgl;
    int sphere = 0;

    static ComponentSpec of_sphere(int n);
    static ComponentSpec of_dgl(const DGLPresentation& D);
    DGLPresentation presentation(const std::string& name, int W) const;
};

// Lib(u) * L with du = -[u,u]/2; L must have no generator of negative degree.
DGLPresentation point_adjoin(const DGLPresentation& L, const std::string& u = "u");
// (Lib(u) * L)^u: d_u(u) = [u,u]/2, d_u(x) = dx + [u,x].
DGLPresentation perturbed_component(const DGLPresentation& L, const std::string& u = "u");

struct AssembledModel {
    DGLPresentation M;
    std::vector<std::string> u_names;
    // -1 for the base, j for the j-th component
    std::vector<int> component_of;
    // 0 followed by -u_j
    std::vector<Tensor> mc_elements;
    std::vector<std::string> renamed;
};
AssembledModel assemble(const std::vector<ComponentSpec>& components, const ComponentSpec& base, int W);

// The presentation of a disjoint union of spheres written out generator by
// generator: du_i = [u_i,u_i]/2, da_{i0} = 0, da_i = [a_i,u_i].
DGLPresentation naive_sphere_union(const std::vector<int>& n, int i0, int W);

struct LocalizationReport {
    // maxlen -> homology of M^(z) and of the component over the window
    std::vector<int> maxlens;
    std::vector<std::vector<HomologyEntry>> model;
    std::vector<std::vector<HomologyEntry>> component;
    bool stable = false;
    bool agree = false;
};
// z = 0 compares with the base, z = -u_j with the j-th component; M^(z) is
// the degree >= 0 part of M^z with degree 0 cut to cycles, so its homology is
// H_{>=0}(M^z).
LocalizationReport component_localize(const std::vector<ComponentSpec>& components, const ComponentSpec& base,
                                       int which, int lo, int hi, const std::vector<int>& maxlens);

struct AcyclicityReport {
    std::vector<int> maxlens;
    std::vector<std::vector<HomologyEntry>> quotient;
    std::vector<std::vector<HomologyEntry>> filtered;
    // every filtered entry zero, for the last two maxlens
    bool stabilized_zero = false;
};
AcyclicityReport acyclicity_probe(const DGLPresentation& L, int lo, int hi, const std::vector<int>& maxlens);

struct FiltrationPage {
    // dimensions of I_p at the truncation, p = 0..pmax
    std::vector<int> ideal_dims;
    bool decreasing = false;
    bool differential_ideals = false;
    // filtered homology of (Lib(u) * L)^u at one below the truncation
    std::vector<HomologyEntry> total_homology;
};
// I_p is the ideal of (Lib(u) * L)^u generated by ad_u^p(x), x in L.
FiltrationPage filtration_page(const DGLPresentation& L, int pmax, int lo, int hi);

struct SubstitutionCandidate {
    std::string label;
    // images of a, b, x of the Lawrence-Sullivan interval in Lib(u) * L_I
    std::vector<Tensor> images;
    bool chain_map = false;
};
// L_I = Lib(a,x) with da = -[a,a]/2 and dx = -sum B_i/i! ad_x^i(a).
DGLPresentation interval_cofibre(int W);
std::vector<SubstitutionCandidate> interval_substitution_search(int W);

}  // namespace rht
