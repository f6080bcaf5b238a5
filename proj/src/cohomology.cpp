#include "homdist/cohomology.hpp"

#include <algorithm>

namespace homdist {

namespace {
constexpr std::size_t kSimplexCap = 1u << 21;
}

CohomologyRingGF2::CohomologyRingGF2(ComplexPtr K) : complex_(std::move(K)) {
    // enumerate all faces of all facets, grouped by dimension
    std::size_t total = 0;
    std::vector<std::map<std::vector<int>, int>> index;
    for (const auto& facet : complex_->facets) {
        const int k = int(facet.size());
        if (k > 25) throw Error(Err::SizeCap, "facet too large for cohomology");
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> s;
            for (int b = 0; b < k; ++b)
                if (mask >> b & 1) s.push_back(facet[b]);
            int d = int(s.size()) - 1;
            if (int(index.size()) <= d) index.resize(d + 1);
            if (index[d].emplace(std::move(s), 0).second && ++total > kSimplexCap)
                throw Error(Err::SizeCap, "complex has too many simplices");
        }
    }
    simplices_.resize(index.size());
    index_.resize(index.size());
    for (std::size_t d = 0; d < index.size(); ++d) {
        int pos = 0;
        for (auto& [s, ix] : index[d]) {
            ix = pos++;
            simplices_[d].push_back(s);
        }
        index_[d] = std::move(index[d]);
    }

    faces_.resize(simplices_.size());
    for (std::size_t d = 1; d < simplices_.size(); ++d) {
        faces_[d].reserve(simplices_[d].size() * (d + 1));
        for (const auto& s : simplices_[d]) {
            std::vector<int> face(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                int at = 0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face[at++] = s[i];
                faces_[d].push_back(index_[d - 1].at(face));
            }
        }
    }

    // H^d = ker(delta_d) / im(delta_{d-1}) via GF(2) elimination
    h_reps_.resize(simplices_.size());
    for (std::size_t d = 0; d < simplices_.size(); ++d) {
        const int nd = int(simplices_[d].size());
        std::vector<Bits> equations;
        if (d + 1 < simplices_.size()) {
            equations.reserve(simplices_[d + 1].size());
            for (std::size_t t = 0; t < simplices_[d + 1].size(); ++t) {
                Bits row(nd);
                for (std::size_t i = 0; i <= d + 1; ++i)
                    row.set(faces_[d + 1][t * (d + 2) + i]);
                equations.push_back(std::move(row));
            }
        }
        std::vector<Bits> cocycles = gf2_kernel(equations, nd);

        std::vector<Bits> cob;
        if (d >= 1) {
            for (int s = 0; s < int(simplices_[d - 1].size()); ++s) {
                Bits e(int(simplices_[d - 1].size()));
                e.set(s);
                cob.push_back(coboundary(int(d) - 1, e));
            }
        }
        Gf2Echelon bspace(nd);
        for (const auto& b : cob) bspace.insert(b);
        for (const auto& z : cocycles) {
            if (bspace.insert(z)) h_reps_[d].push_back(z);
        }
        // coordinate solver over [reps | coboundary generators]
        Gf2Solver solver(nd, int(h_reps_[d].size() + cob.size()));
        for (const auto& r : h_reps_[d]) solver.add_generator(r);
        for (const auto& b : cob) solver.add_generator(b);
        solvers_.push_back(std::move(solver));
    }
}

int CohomologyRingGF2::top_nonzero() const {
    for (int d = top_dim(); d >= 0; --d)
        if (dim(d) > 0) return d;
    return -1;
}

int CohomologyRingGF2::dim(int degree) const {
    if (degree < 0 || degree > top_dim()) return 0;
    return int(h_reps_[degree].size());
}

std::vector<int> CohomologyRingGF2::betti() const {
    std::vector<int> out;
    for (int d = 0; d <= top_dim(); ++d) out.push_back(dim(d));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

ClassVector CohomologyRingGF2::zero(int degree) const { return ClassVector{degree, Bits(dim(degree))}; }

ClassVector CohomologyRingGF2::basis_element(int degree, int k) const {
    if (k < 0 || k >= dim(degree)) throw Error(Err::DegreeOutOfRange, "basis index out of range");
    ClassVector out = zero(degree);
    out.coeffs.set(k);
    return out;
}

ClassVector CohomologyRingGF2::add(const ClassVector& u, const ClassVector& v) const {
    if (u.degree != v.degree) throw Error(Err::DegreeOutOfRange, "degree mismatch in addition");
    ClassVector out = u;
    out.coeffs ^= v.coeffs;
    return out;
}

Bits CohomologyRingGF2::representative(const ClassVector& u) const {
    Bits z(simplex_count(u.degree));
    if (u.degree < 0 || u.degree > top_dim()) return z;
    u.coeffs.for_each_set([&](int k) { z ^= h_reps_[u.degree][k]; });
    return z;
}

bool CohomologyRingGF2::is_cocycle(int degree, const Bits& cochain) const {
    if (degree < 0 || degree > top_dim()) return true;
    if (degree == top_dim()) return true;
    return coboundary(degree, cochain).none();
}

ClassVector CohomologyRingGF2::class_of(int degree, const Bits& cocycle) const {
    if (degree < 0 || degree > top_dim()) return zero(degree);
    auto combo = solvers_[degree].solve(cocycle);
    if (!combo) throw Error(Err::DegreeOutOfRange, "cochain is not a cocycle of the complex");
    ClassVector out = zero(degree);
    combo->for_each_set([&](int k) {
        if (k < dim(degree)) out.coeffs.set(k);
    });
    return out;
}

int CohomologyRingGF2::simplex_count(int degree) const {
    if (degree < 0 || degree > top_dim()) return 0;
    return int(simplices_[degree].size());
}

const std::vector<std::vector<int>>& CohomologyRingGF2::simplices(int degree) const {
    static const std::vector<std::vector<int>> empty;
    if (degree < 0 || degree > top_dim()) return empty;
    return simplices_[degree];
}

int CohomologyRingGF2::simplex_index(int degree, const std::vector<int>& sorted_verts) const {
    if (degree < 0 || degree > top_dim()) return -1;
    auto it = index_[degree].find(sorted_verts);
    return it == index_[degree].end() ? -1 : it->second;
}

Bits CohomologyRingGF2::coboundary(int degree, const Bits& cochain) const {
    if (degree < 0 || degree + 1 > top_dim()) return Bits(0);
    Bits out(int(simplices_[degree + 1].size()));
    for (std::size_t t = 0; t < simplices_[degree + 1].size(); ++t) {
        int parity = 0;
        for (std::size_t i = 0; i <= std::size_t(degree) + 1; ++i)
            parity ^= cochain.test(faces_[degree + 1][t * (degree + 2) + i]) ? 1 : 0;
        if (parity) out.set(int(t));
    }
    return out;
}

ClassVector CohomologyRingGF2::cup(const ClassVector& u, const ClassVector& v) const {
    const int p = u.degree, q = v.degree;
    const int d = p + q;
    if (d > top_dim() || dim(d) == 0) return zero(d);
    if (u.is_zero() || v.is_zero()) return zero(d);
    const Bits zu = representative(u);
    const Bits zv = representative(v);
    Bits w(simplex_count(d));
    std::vector<int> front(p + 1), back(q + 1);
    for (int t = 0; t < simplex_count(d); ++t) {
        const auto& s = simplices_[d][t];
        for (int i = 0; i <= p; ++i) front[i] = s[i];
        for (int i = 0; i <= q; ++i) back[i] = s[p + i];
        int fi = simplex_index(p, front);
        int bi = simplex_index(q, back);
        if (fi >= 0 && bi >= 0 && zu.test(fi) && zv.test(bi)) w.set(t);
    }
    return class_of(d, w);
}

// ---- induced morphisms -------------------------------------------------

CohomologyMap::CohomologyMap(const CohomologyRingGF2& cod_ring, const CohomologyRingGF2& dom_ring,
                             const std::vector<int>& vertex_map)
    : cod_(cod_ring), dom_(dom_ring) {
    if (int(vertex_map.size()) != dom_.complex()->vertex_count())
        throw Error(Err::Mismatch, "vertex map size mismatch");
    basis_images_.resize(cod_.top_dim() + 1);
    for (int d = 0; d <= cod_.top_dim(); ++d) {
        for (int k = 0; k < cod_.dim(d); ++k) {
            const Bits z = cod_.representative(cod_.basis_element(d, k));
            Bits pulled(dom_.simplex_count(d));
            for (int t = 0; t < dom_.simplex_count(d); ++t) {
                const auto& s = dom_.simplices(d)[t];
                std::vector<int> img;
                img.reserve(s.size());
                for (int v : s) img.push_back(vertex_map[v]);
                std::sort(img.begin(), img.end());
                if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;  // degenerate
                int ix = cod_.simplex_index(d, img);
                if (ix >= 0 && z.test(ix)) pulled.set(t);
            }
            basis_images_[d].push_back(dom_.class_of(d, pulled));
        }
    }
}

ClassVector CohomologyMap::pull(const ClassVector& u) const {
    ClassVector out = dom_.zero(u.degree);
    if (u.degree < 0 || u.degree >= int(basis_images_.size())) return out;
    u.coeffs.for_each_set([&](int k) { out.coeffs ^= basis_images_[u.degree][k].coeffs; });
    return out;
}

// ---- cup-length bound ---------------------------------------------------

namespace {

struct LcpSearch {
    const CohomologyRingGF2& ring;
    std::vector<std::vector<ClassVector>> elements;  // per degree, nonzero
    int top = 0;
    int best = 0;
    std::vector<int> degrees;
    std::vector<int> witness;

    void dfs(int min_degree, int min_index, const ClassVector& acc, int count) {
        if (count > best) {
            best = count;
            witness = degrees;
        }
        for (int d = min_degree; d < int(elements.size()); ++d) {
            if (acc.degree + d > top) break;
            const int start = d == min_degree ? min_index : 0;
            for (int e = start; e < int(elements[d].size()); ++e) {
                ClassVector p = ring.cup(acc, elements[d][e]);
                if (p.is_zero()) continue;
                degrees.push_back(d);
                dfs(d, e, p, count + 1);
                degrees.pop_back();
            }
        }
    }
};

LcpResult lcp_over(const CohomologyRingGF2& ring, const std::vector<Gf2Echelon>& j_basis_sets,
                   const std::vector<std::vector<Bits>>& j_rows, int degree_budget, int dim_cap) {
    LcpResult out;
    LcpSearch search{ring};
    const int top = ring.top_nonzero();
    if (top < 1) return out;
    search.top = top;
    search.elements.resize(std::min(top, degree_budget) + 1);
    for (int d = 1; d < int(search.elements.size()); ++d) {
        const auto& rows = j_rows[d];
        const int k = int(rows.size());
        if (k == 0) continue;
        if (k > dim_cap) {
            out.capped = true;
            for (const auto& r : rows) search.elements[d].push_back(ClassVector{d, r});
            continue;
        }
        for (std::uint32_t combo = 1; combo < (1u << k); ++combo) {
            ClassVector c = ring.zero(d);
            for (int b = 0; b < k; ++b)
                if (combo >> b & 1) c.coeffs ^= rows[b];
            search.elements[d].push_back(std::move(c));
        }
    }
    for (int d = 1; d < int(search.elements.size()); ++d)
        for (int e = 0; e < int(search.elements[d].size()); ++e) {
            search.degrees.push_back(d);
            search.dfs(d, e, search.elements[d][e], 1);
            search.degrees.pop_back();
        }
    out.value = search.best;
    out.witness_degrees = search.witness;
    (void)j_basis_sets;
    return out;
}

}  // namespace

LcpResult lcp_J(const OrderMap& f, const OrderMap& g, int degree_budget, int dim_cap) {
    if (degree_budget < 1) throw Error(Err::DegreeOutOfRange, "degree budget must be at least 1");
    if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
        throw Error(Err::Mismatch, "lcp_J: maps have different spaces");
    CohomologyRingGF2 rx(order_complex(*f.dom()));
    CohomologyRingGF2 ry(order_complex(*f.cod()));
    CohomologyMap pf(ry, rx, induced_chain_map(f));
    CohomologyMap pg(ry, rx, induced_chain_map(g));

    // graded basis of J = image(f* + g*) in positive degrees
    const int top = rx.top_nonzero();
    std::vector<Gf2Echelon> j_sets;
    std::vector<std::vector<Bits>> j_rows(std::max(0, top) + 1);
    for (int d = 1; d <= top; ++d) {
        Gf2Echelon ech(rx.dim(d));
        for (int k = 0; k < ry.dim(d); ++k) {
            ClassVector b = ry.basis_element(d, k);
            ClassVector img = rx.add(pf.pull(b), pg.pull(b));  // f* - g* over GF(2)
            if (ech.insert(img.coeffs)) j_rows[d].push_back(img.coeffs);
        }
        j_sets.push_back(std::move(ech));
    }
    return lcp_over(rx, j_sets, j_rows, degree_budget, dim_cap);
}

LcpResult lcp_space(const PosetPtr& X, int degree_budget, int dim_cap) {
    CohomologyRingGF2 rx(order_complex(*X));
    const int top = rx.top_nonzero();
    std::vector<Gf2Echelon> sets;
    std::vector<std::vector<Bits>> rows(std::max(0, top) + 1);
    for (int d = 1; d <= top; ++d)
        for (int k = 0; k < rx.dim(d); ++k) rows[d].push_back(rx.basis_element(d, k).coeffs);
    return lcp_over(rx, sets, rows, degree_budget, dim_cap);
}

}  // namespace homdist
