#include "homdist/complexes.hpp"

#include <algorithm>
#include <set>

namespace homdist {

int SimplicialComplexData::vertex_index(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices[i] == name) return i;
    throw Error(Err::UnknownElement, "unknown vertex: " + name);
}

bool SimplicialComplexData::has_simplex(const std::vector<int>& sorted_verts) const {
    if (sorted_verts.empty()) return true;
    for (const auto& f : facets)
        if (std::includes(f.begin(), f.end(), sorted_verts.begin(), sorted_verts.end()))
            return true;
    return false;
}

ComplexPtr make_complex(std::vector<std::string> vertices, std::vector<std::vector<int>> facets) {
    const int n = int(vertices.size());
    {
        std::set<std::string> names(vertices.begin(), vertices.end());
        if (int(names.size()) != n) throw Error(Err::Mismatch, "duplicate vertex name");
    }
    for (auto& f : facets) {
        for (int v : f)
            if (v < 0 || v >= n) throw Error(Err::UnknownElement, "facet vertex out of range");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw Error(Err::Mismatch, "empty facet");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<std::vector<int>> maximal;
    for (const auto& f : facets) {
        bool dominated = false;
        for (const auto& g : facets)
            if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(f);
    }
    std::vector<bool> seen(n, false);
    for (const auto& f : maximal)
        for (int v : f) seen[v] = true;
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw Error(Err::Mismatch, "vertex not in any facet: " + vertices[v]);
    auto out = std::make_shared<SimplicialComplexData>();
    out->vertices = std::move(vertices);
    out->facets = std::move(maximal);
    return out;
}

ComplexPtr make_complex_named(std::vector<std::string> vertices,
                              const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::vector<int>> fi;
    fi.reserve(facets.size());
    SimplicialComplexData lookup;
    lookup.vertices = vertices;
    for (const auto& f : facets) {
        std::vector<int> g;
        g.reserve(f.size());
        for (const auto& name : f) g.push_back(lookup.vertex_index(name));
        fi.push_back(std::move(g));
    }
    return make_complex(std::move(vertices), std::move(fi));
}

ComplexPtr order_complex(const FinitePoset& X) {
    // facets = maximal chains, walked along Hasse covers from minimal points
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        if (X.covers_up(v).empty()) {
            std::vector<int> chain = cur;
            std::sort(chain.begin(), chain.end());
            chains.push_back(std::move(chain));
        } else {
            for (int w : X.covers_up(v)) self(self, w);
        }
        cur.pop_back();
    };
    for (int v = 0; v < X.size(); ++v)
        if (X.covers_down(v).empty()) dfs(dfs, v);
    return make_complex(X.elements(), std::move(chains));
}

std::vector<int> induced_chain_map(const OrderMap& f) {
    std::vector<int> out(f.dom()->size());
    for (int i = 0; i < f.dom()->size(); ++i) out[i] = f(i);
    return out;
}

ProductComplex categorical_product(const SimplicialComplexData& K, const SimplicialComplexData& L,
                                   int vertex_cap) {
    const int nk = K.vertex_count(), nl = L.vertex_count();
    if (nk * nl > vertex_cap)
        throw Error(Err::SizeCap, "categorical product exceeds the vertex cap");
    std::vector<std::string> verts(std::size_t(nk) * nl);
    for (int i = 0; i < nk; ++i)
        for (int j = 0; j < nl; ++j) verts[std::size_t(i) * nl + j] = "(" + K.vertices[i] + "," + L.vertices[j] + ")";
    std::vector<std::vector<int>> facets;
    for (const auto& A : K.facets)
        for (const auto& B : L.facets) {
            std::vector<int> f;
            f.reserve(A.size() * B.size());
            for (int a : A)
                for (int b : B) f.push_back(a * nl + b);
            facets.push_back(std::move(f));
        }
    ProductComplex out;
    out.complex = make_complex(std::move(verts), std::move(facets));
    out.proj1.resize(std::size_t(nk) * nl);
    out.proj2.resize(std::size_t(nk) * nl);
    for (int i = 0; i < nk; ++i)
        for (int j = 0; j < nl; ++j) {
            out.proj1[std::size_t(i) * nl + j] = i;
            out.proj2[std::size_t(i) * nl + j] = j;
        }
    return out;
}

bool same_complex(const SimplicialComplexData& a, const SimplicialComplexData& b) {
    return a.vertices == b.vertices && a.facets == b.facets;
}

}  // namespace homdist
