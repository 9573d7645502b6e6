#include "seqcm/homology.hpp"

#include <algorithm>
#include <map>

namespace seqcm {

namespace {

std::vector<VarSet> maximal_sets(std::vector<VarSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a.bits < b.bits;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> out;
    for (VarSet s : sets) {
        bool covered = false;
        for (VarSet t : out)
            if (s.subset_of(t)) { covered = true; break; }
        if (!covered) out.push_back(s);
    }
    return out;
}

} // namespace

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<VarSet> facets)
    : ground_size_(ground_size), facets_(maximal_sets(std::move(facets))) {
    if (ground_size < 0 || ground_size > kMaxVars)
        throw InputError("simplicial complex ground set out of range");
    for (VarSet f : facets_)
        if (!f.subset_of(VarSet((std::uint32_t(1) << ground_size) - 1)))
            throw InputError("facet uses a vertex outside the ground set");
}

std::vector<VarSet> SimplicialComplex::faces() const {
    std::vector<VarSet> out;
    if (is_void()) return out;
    std::vector<char> seen(std::size_t(1) << ground_size_, 0);
    for (VarSet f : facets_) {
        // enumerate all subsets of the facet
        std::uint32_t sub = f.bits;
        while (true) {
            if (!seen[sub]) {
                seen[sub] = 1;
                out.push_back(VarSet(sub));
            }
            if (sub == 0) break;
            sub = (sub - 1) & f.bits;
        }
    }
    std::sort(out.begin(), out.end(), [](VarSet a, VarSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
    });
    return out;
}

SimplicialComplex SimplicialComplex::link(VarSet face) const {
    std::vector<VarSet> facets;
    for (VarSet f : facets_)
        if (face.subset_of(f)) facets.push_back(f - face);
    return {ground_size_, std::move(facets)};
}

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal) {
    return {ideal.ring().var_count(), complex_facets(ideal)};
}

std::vector<int> reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field) {
    std::vector<int> h(std::size_t(complex.ground_size()) + 1, 0);
    if (complex.is_void()) return h;

    // faces by dimension; levels[k] holds the k-1 dimensional faces
    std::vector<std::vector<VarSet>> levels(std::size_t(complex.ground_size()) + 1);
    std::vector<std::map<std::uint32_t, int>> index(levels.size());
    for (VarSet f : complex.faces()) {
        index[f.size()][f.bits] = int(levels[f.size()].size());
        levels[f.size()].push_back(f);
    }

    int top = int(levels.size()) - 1;
    while (top > 0 && levels[top].empty()) --top;

    // boundary_k : C_(k-1 dim) -> C_(k-2 dim), i.e. levels[k] -> levels[k-1]
    std::vector<int> ranks(std::size_t(top) + 1, 0);
    for (int k = 1; k <= top; ++k) {
        SignMatrix d(int(levels[k - 1].size()), int(levels[k].size()));
        for (std::size_t c = 0; c < levels[k].size(); ++c) {
            std::vector<int> verts = levels[k][c].members();
            for (std::size_t j = 0; j < verts.size(); ++j) {
                VarSet sub = levels[k][c];
                sub.remove(verts[j]);
                d.set(index[k - 1].at(sub.bits), int(c), (j % 2 == 0) ? 1 : -1);
            }
        }
        ranks[k] = rank(d, field);
    }

    for (int k = 0; k <= top; ++k) {
        int boundary_in = (k + 1 <= top) ? ranks[k + 1] : 0;
        int boundary_out = (k >= 1) ? ranks[k] : 0;
        int dim_h = int(levels[k].size()) - boundary_in - boundary_out;
        if (dim_h < 0) throw InternalError("negative homology dimension");
        h[k] = dim_h; // reduced H_(k-1) lives at entry k
    }
    return h;
}

DepthDim depth_dim_oracle(const SquarefreeIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_unit()) throw InputError("depth/dim oracle needs a proper ideal");
    SimplicialComplex cx = stanley_reisner_complex(ideal);

    DepthDim out;
    for (VarSet f : cx.facets()) out.dim = std::max(out.dim, f.size());

    int best = out.dim;
    for (VarSet face : cx.faces()) {
        std::vector<int> h = reduced_homology_dims(cx.link(face), field);
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (h[k] == 0) continue;
            // h[k] is reduced H_(k-1) of the link; it witnesses depth <= i
            int i = int(k) + face.size();
            best = std::min(best, i);
        }
    }
    out.depth = best;
    return out;
}

} // namespace seqcm
