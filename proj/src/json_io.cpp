#include "homdist/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace homdist {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::Parse, path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(Err::Parse, path + ": " + e.what());
    }
}

json poset_to_json(const FinitePoset& X) {
    json j;
    j["format"] = 1;
    j["elements"] = X.elements();
    json rels = json::array();
    for (int i = 0; i < X.size(); ++i)
        for (int k : X.covers_up(i)) rels.push_back({X.name_of(i), X.name_of(k)});
    j["relations"] = std::move(rels);
    return j;
}

PosetPtr poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("relations"))
        throw Error(Err::Parse, "poset json needs elements and relations");
    std::vector<std::string> elems = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) throw Error(Err::Parse, "relation must be a pair");
        rels.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
    return build_poset(elems, rels);
}

namespace {
PosetPtr resolve_poset(const json& j, const Workspace& ws, const char* what) {
    if (j.is_string()) {
        auto it = ws.posets.find(j.get<std::string>());
        if (it == ws.posets.end())
            throw Error(Err::Parse, std::string(what) + ": unknown space name " + j.get<std::string>());
        return it->second;
    }
    return poset_from_json(j);
}
ComplexPtr resolve_complex(const json& j, const Workspace& ws, const char* what) {
    if (j.is_string()) {
        auto it = ws.complexes.find(j.get<std::string>());
        if (it == ws.complexes.end())
            throw Error(Err::Parse, std::string(what) + ": unknown complex name " + j.get<std::string>());
        return it->second;
    }
    return complex_from_json(j);
}
}  // namespace

json map_to_json(const OrderMap& f) {
    json j;
    j["format"] = 1;
    j["domain"] = poset_to_json(*f.dom());
    j["codomain"] = poset_to_json(*f.cod());
    json vals = json::object();
    for (int i = 0; i < f.dom()->size(); ++i) vals[f.dom()->name_of(i)] = f.cod()->name_of(f(i));
    j["values"] = std::move(vals);
    return j;
}

OrderMap map_from_json(const json& j, const Workspace& ws) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("values"))
        throw Error(Err::Parse, "map json needs domain, codomain and values");
    PosetPtr dom = resolve_poset(j.at("domain"), ws, "map domain");
    PosetPtr cod = resolve_poset(j.at("codomain"), ws, "map codomain");
    std::vector<std::uint16_t> vals(dom->size());
    std::vector<bool> seen(dom->size(), false);
    for (const auto& [key, val] : j.at("values").items()) {
        int i = dom->index_of(key);
        vals[i] = std::uint16_t(cod->index_of(val.get<std::string>()));
        seen[i] = true;
    }
    for (int i = 0; i < dom->size(); ++i)
        if (!seen[i]) throw Error(Err::Parse, "map values missing element " + dom->name_of(i));
    return OrderMap(dom, cod, std::move(vals));
}

json complex_to_json(const SimplicialComplexData& K) {
    json j;
    j["format"] = 1;
    j["vertices"] = K.vertices;
    json facets = json::array();
    for (const auto& f : K.facets) {
        json names = json::array();
        for (int v : f) names.push_back(K.vertices[v]);
        facets.push_back(std::move(names));
    }
    j["facets"] = std::move(facets);
    return j;
}

ComplexPtr complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw Error(Err::Parse, "complex json needs vertices and facets");
    std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<std::string>>());
    return make_complex_named(std::move(verts), facets);
}

json smap_to_json(const SimplicialMapData& f) {
    json j;
    j["format"] = 1;
    j["domain"] = complex_to_json(*f.dom());
    j["codomain"] = complex_to_json(*f.cod());
    json vals = json::object();
    for (int v = 0; v < f.dom()->vertex_count(); ++v)
        vals[f.dom()->vertices[v]] = f.cod()->vertices[f(v)];
    j["values"] = std::move(vals);
    return j;
}

SimplicialMapData smap_from_json(const json& j, const Workspace& ws) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("values"))
        throw Error(Err::Parse, "simplicial map json needs domain, codomain and values");
    ComplexPtr dom = resolve_complex(j.at("domain"), ws, "map domain");
    ComplexPtr cod = resolve_complex(j.at("codomain"), ws, "map codomain");
    std::vector<int> vals(dom->vertex_count(), -1);
    for (const auto& [key, val] : j.at("values").items())
        vals[dom->vertex_index(key)] = cod->vertex_index(val.get<std::string>());
    for (int v = 0; v < dom->vertex_count(); ++v)
        if (vals[v] < 0) throw Error(Err::Parse, "map values missing vertex " + dom->vertices[v]);
    return SimplicialMapData(dom, cod, std::move(vals));
}

json certificate_to_json(const CoverCertificate& cert, int value) {
    json j;
    j["format"] = 1;
    j["value"] = value;
    json ideals = json::array();
    const PosetPtr& X = cert.ideals.empty() ? nullptr : cert.ideals[0].space;
    for (const auto& U : cert.ideals) {
        json names = json::array();
        U.members.for_each_set([&](int i) { names.push_back(U.space->name_of(i)); });
        ideals.push_back(std::move(names));
    }
    j["ideals"] = std::move(ideals);
    json all_fences = json::array();
    for (std::size_t i = 0; i < cert.fences.size(); ++i) {
        json per_ideal = json::array();
        for (const auto& fence : cert.fences[i]) {
            json maps = json::array();
            for (const auto& m : fence.maps) {
                json mj;
                mj["domain"] = "U" + std::to_string(i);
                mj["codomain"] = "cod";
                json vals = json::object();
                for (int k = 0; k < m.dom()->size(); ++k)
                    vals[m.dom()->name_of(k)] = m.cod()->name_of(m(k));
                mj["values"] = std::move(vals);
                maps.push_back(std::move(mj));
            }
            per_ideal.push_back(json{{"maps", std::move(maps)}});
        }
        all_fences.push_back(std::move(per_ideal));
    }
    j["fences"] = std::move(all_fences);
    (void)X;
    return j;
}

json sd_certificate_to_json(const SubcomplexCoverCertificate& cert, const SimplicialComplexData& K) {
    json j;
    j["format"] = 1;
    json subs = json::array();
    for (const auto& fs : cert.facet_sets) {
        json facets = json::array();
        for (int f : fs) {
            json names = json::array();
            for (int v : K.facets[f]) names.push_back(K.vertices[v]);
            facets.push_back(std::move(names));
        }
        subs.push_back(std::move(facets));
    }
    j["subcomplexes"] = std::move(subs);
    json all_fences = json::array();
    for (const auto& per_sub : cert.fences) {
        json fences = json::array();
        for (const auto& fence : per_sub) {
            json maps = json::array();
            for (const auto& m : fence.maps) {
                json vals = json::object();
                for (int v = 0; v < m.dom()->vertex_count(); ++v)
                    vals[m.dom()->vertices[v]] = m.cod()->vertices[m(v)];
                maps.push_back(json{{"values", std::move(vals)}});
            }
            fences.push_back(json{{"maps", std::move(maps)}});
        }
        all_fences.push_back(std::move(fences));
    }
    j["fences"] = std::move(all_fences);
    return j;
}

json distance_value_to_json(const DistanceValue& v, const std::string& quantity) {
    json j;
    j["quantity"] = quantity;
    switch (v.kind) {
        case DistanceValue::Kind::Finite: j["value"] = v.value; break;
        case DistanceValue::Kind::Infinite: j["value"] = "infinite"; break;
        case DistanceValue::Kind::UnknownAtLeast: j["value"] = json{{"at_least", v.value}}; break;
    }
    j["certificate"] = v.certificate ? certificate_to_json(*v.certificate, v.value) : json(nullptr);
    j["budgets_hit"] = v.budgets_hit;
    json d;
    d["refuted_covers_up_to"] = v.info.refuted_covers_up_to;
    d["exhaustive"] = v.info.exhaustive;
    d["lattice_nodes"] = v.info.lattice_nodes;
    d["candidates"] = v.info.candidate_count;
    if (v.info.infinity_witness) d["infinity_witness"] = *v.info.infinity_witness;
    j["details"] = std::move(d);
    return j;
}

json sd_value_to_json(const SdValue& v, const std::string& quantity) {
    json j;
    j["quantity"] = quantity;
    switch (v.kind) {
        case SdValue::Kind::Finite: j["value"] = v.value; break;
        case SdValue::Kind::Infinite: j["value"] = "infinite"; break;
        case SdValue::Kind::UnknownAtLeast: j["value"] = json{{"at_least", v.value}}; break;
    }
    j["budgets_hit"] = v.budgets_hit;
    json d;
    d["refuted_covers_up_to"] = v.refuted_covers_up_to;
    d["exhaustive"] = v.exhaustive;
    j["details"] = std::move(d);
    return j;
}

// ---- raw certificate verification ---------------------------------------

namespace {
bool fail(std::string* reason, const std::string& code) {
    if (reason) *reason = code;
    return false;
}
}  // namespace

bool verify_certificate_json(const std::vector<OrderMap>& maps, const json& cert,
                             std::string* reason) {
    try {
        if (maps.size() < 2) return fail(reason, "NeedTwoMaps");
        const PosetPtr& X = maps[0].dom();
        const PosetPtr& Y = maps[0].cod();
        for (const auto& m : maps)
            if (!m.dom()->same_structure(*X) || !m.cod()->same_structure(*Y))
                return fail(reason, "MapSpacesMismatch");
        if (!cert.is_object() || !cert.contains("value") || !cert.contains("ideals") ||
            !cert.contains("fences"))
            return fail(reason, "MissingCertificateFields");
        if (!cert.at("value").is_number_integer()) return fail(reason, "MissingCertificateFields");
        const int value = cert.at("value").get<int>();
        const auto& ideals = cert.at("ideals");
        const auto& fences = cert.at("fences");
        if (!ideals.is_array() || !fences.is_array()) return fail(reason, "MissingCertificateFields");
        if (value < 0 || int(ideals.size()) != value + 1) return fail(reason, "IdealCountMismatch");
        if (fences.size() != ideals.size()) return fail(reason, "FenceCountMismatch");

        const int n = X->size();
        std::vector<Bits> sets;
        Bits covered(n);
        for (const auto& names : ideals) {
            if (!names.is_array()) return fail(reason, "MalformedIdeal");
            Bits b(n);
            for (const auto& name : names) {
                auto ix = X->find(name.get<std::string>());
                if (!ix) return fail(reason, "UnknownElement");
                b.set(*ix);
            }
            if (!X->is_down_closed(b)) return fail(reason, "NotDownwardClosed");
            covered |= b;
            sets.push_back(std::move(b));
        }
        if (!(covered == Bits::full(n))) return fail(reason, "NotCovering");

        for (std::size_t i = 0; i < sets.size(); ++i) {
            const auto& per_ideal = fences[i];
            if (!per_ideal.is_array() || per_ideal.size() != maps.size() - 1)
                return fail(reason, "FenceCountMismatch");
            auto [sub, incl] = induced_subposet(X, sets[i]);
            // restrictions of the checked maps, as raw value vectors
            std::vector<std::vector<int>> restricted;
            for (const auto& m : maps) {
                std::vector<int> v(sub->size());
                for (int k = 0; k < sub->size(); ++k) v[k] = m(incl(k));
                restricted.push_back(std::move(v));
            }
            for (std::size_t k = 1; k < maps.size(); ++k) {
                const auto& fence = per_ideal[k - 1];
                if (!fence.is_object() || !fence.contains("maps") || !fence.at("maps").is_array() ||
                    fence.at("maps").empty())
                    return fail(reason, "EmptyFence");
                std::vector<std::vector<int>> chain;
                for (const auto& mj : fence.at("maps")) {
                    if (!mj.is_object() || !mj.contains("values") || !mj.at("values").is_object())
                        return fail(reason, "MalformedFenceMap");
                    std::vector<int> v(sub->size(), -1);
                    for (const auto& [key, val] : mj.at("values").items()) {
                        auto di = sub->find(key);
                        if (!di) return fail(reason, "FenceMapDomainMismatch");
                        auto ci = Y->find(val.get<std::string>());
                        if (!ci) return fail(reason, "UnknownElement");
                        v[*di] = *ci;
                    }
                    for (int x = 0; x < sub->size(); ++x)
                        if (v[x] < 0) return fail(reason, "FenceMapDomainMismatch");
                    for (int x = 0; x < sub->size(); ++x)
                        for (int y : sub->covers_up(x))
                            if (!Y->leq(v[x], v[y])) return fail(reason, "FenceMapNotOrderPreserving");
                    chain.push_back(std::move(v));
                }
                auto cmp = [&](const std::vector<int>& a, const std::vector<int>& b) {
                    bool le = true, ge = true;
                    for (int x = 0; x < sub->size(); ++x) {
                        le = le && Y->leq(a[x], b[x]);
                        ge = ge && Y->leq(b[x], a[x]);
                    }
                    return le || ge;
                };
                for (std::size_t s = 0; s + 1 < chain.size(); ++s)
                    if (!cmp(chain[s], chain[s + 1])) return fail(reason, "FenceBroken");
                if (chain.front() != restricted[0] || chain.back() != restricted[k])
                    return fail(reason, "FenceEndpointMismatch");
            }
        }
        return true;
    } catch (const std::exception& e) {
        return fail(reason, std::string("MalformedCertificate: ") + e.what());
    }
}

}  // namespace homdist
