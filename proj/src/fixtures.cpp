#include "heawood/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "heawood/error.hpp"
#include "klein_quartic_data.hpp"

namespace heawood {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<std::vector<std::string>> parse_facet_list(std::string_view text) {
    std::vector<std::vector<std::string>> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        const std::string line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> facet;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) throw Error(ErrorKind::Validation, "line " + std::to_string(line_no) + ": empty label");
            facet.push_back(item);
        }
        out.push_back(std::move(facet));
    }
    return out;
}

SimplicialComplex complex_from_facets(const std::vector<std::string>& labels,
                                      const std::vector<std::vector<std::string>>& facets) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw Error(ErrorKind::Validation, "label " + labels[i] + " listed twice");
    std::vector<std::vector<int>> ids;
    std::map<std::vector<int>, std::size_t> seen;
    for (std::size_t f = 0; f < facets.size(); ++f) {
        const std::string where = "facet " + std::to_string(f);
        if (facets[f].empty()) throw Error(ErrorKind::Validation, where + " is empty");
        if (facets[f].size() != facets.front().size()) throw Error(ErrorKind::Validation, where + " has a different size");
        std::vector<int> facet;
        for (const auto& l : facets[f]) {
            auto it = index.find(l);
            if (it == index.end()) throw Error(ErrorKind::Validation, where + " uses unknown label " + l);
            facet.push_back(it->second);
        }
        std::sort(facet.begin(), facet.end());
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
            throw Error(ErrorKind::NotSimplicial, where + " repeats a vertex");
        auto [it, fresh] = seen.emplace(facet, f);
        if (!fresh) throw Error(ErrorKind::NotSimplicial, where + " duplicates facet " + std::to_string(it->second));
        ids.push_back(std::move(facet));
    }
    return SimplicialComplex(labels.size(), std::move(ids), labels);
}

SimplicialComplex complex_from_facets(const std::vector<std::vector<std::string>>& facets) {
    std::set<std::string> used;
    for (const auto& f : facets) used.insert(f.begin(), f.end());
    return complex_from_facets(std::vector<std::string>(used.begin(), used.end()), facets);
}

const NamedComplexFixture& klein_quartic_fixture() {
    static const NamedComplexFixture fixture = [] {
        NamedComplexFixture f;
        f.name = "klein-quartic";
        f.facets = parse_facet_list(detail::klein_quartic_facets);
        std::set<std::string> used;
        for (const auto& facet : f.facets) used.insert(facet.begin(), facet.end());
        f.labels.assign(used.begin(), used.end());
        if (f.labels.size() != 24 || f.facets.size() != 56)
            throw Error(ErrorKind::Internal, "Klein quartic data does not have 24 labels and 56 facets");
        return f;
    }();
    return fixture;
}

SimplicialComplex klein_quartic() {
    const auto& f = klein_quartic_fixture();
    return complex_from_facets(f.labels, f.facets);
}

Perm klein_quartic_rotation() {
    const std::vector<std::string> cycles = {"bcdefgh", "jklmnoi", "sprtuvq"};
    const auto& labels = klein_quartic_fixture().labels;
    auto idx = [&](char c) {
        return static_cast<int>(std::find(labels.begin(), labels.end(), std::string(1, c)) - labels.begin());
    };
    Perm p = identity_perm(labels.size());
    for (const auto& cyc : cycles)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            p[static_cast<std::size_t>(idx(cyc[i]))] = idx(cyc[(i + 1) % cyc.size()]);
    return p;
}

KleinQuarticOrders klein_quartic_aut_orders() {
    const auto c = klein_quartic();
    KleinQuarticOrders r;
    r.simplicial = simplicial_automorphisms(c).order;
    r.dual_graph = brute_force_automorphisms(c.dual_graph()).order;
    return r;
}

std::uint64_t klein_quartic_aut_order() {
    return brute_force_automorphisms(klein_quartic().dual_graph()).order;
}

}  // namespace heawood
