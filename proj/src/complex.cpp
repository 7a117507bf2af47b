#include "heawood/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "heawood/error.hpp"

namespace heawood {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<std::vector<int>> facets,
                                     std::vector<std::string> labels)
    : n_(vertex_count), facets_(std::move(facets)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n_) throw Error(ErrorKind::Validation, "label count does not match");
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        auto& f = facets_[i];
        if (f.empty()) throw Error(ErrorKind::Validation, "facet " + std::to_string(i) + " is empty");
        if (f.size() != facets_.front().size())
            throw Error(ErrorKind::Validation, "facet " + std::to_string(i) + " has a different dimension");
        for (int v : f)
            if (v < 0 || static_cast<std::size_t>(v) >= n_)
                throw Error(ErrorKind::IndexOutOfRange, "facet " + std::to_string(i) + " names an unknown vertex");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error(ErrorKind::NotSimplicial, "facet " + std::to_string(i) + " repeats a vertex");
        if (!seen.insert(f).second)
            throw Error(ErrorKind::NotSimplicial, "facet " + std::to_string(i) + " duplicates an earlier facet");
    }
}

std::string SimplicialComplex::label(int v) const {
    if (!labels_.empty()) return labels_.at(static_cast<std::size_t>(v));
    return std::to_string(v);
}

std::vector<std::vector<int>> SimplicialComplex::faces(int dimension) const {
    std::set<std::vector<int>> out;
    const auto size = static_cast<std::size_t>(dimension + 1);
    if (dimension < 0 || dimension > dim()) return {};
    for (const auto& f : facets_) {
        // Subsets of the facet with `size` elements, via a selection mask.
        std::vector<char> pick(f.size(), 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
        do {
            std::vector<int> face;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (pick[i]) face.push_back(f[i]);
            out.insert(std::move(face));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return {out.begin(), out.end()};
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> f;
    for (int i = 0; i <= dim(); ++i) f.push_back(static_cast<std::int64_t>(faces(i).size()));
    return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    const auto f = f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0) ? f[i] : -f[i];
    return chi;
}

Graph SimplicialComplex::one_skeleton() const {
    Graph g(n_);
    for (const auto& e : faces(1)) g.add_edge(e[0], e[1]);
    return g;
}

Graph SimplicialComplex::dual_graph() const {
    std::map<std::vector<int>, std::vector<int>> ridges;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        const auto& f = facets_[i];
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            std::vector<int> r;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != skip) r.push_back(f[j]);
            ridges[r].push_back(static_cast<int>(i));
        }
    }
    Graph g(facets_.size());
    for (const auto& [ridge, owners] : ridges)
        for (std::size_t a = 0; a < owners.size(); ++a)
            for (std::size_t b = a + 1; b < owners.size(); ++b) g.add_edge(owners[a], owners[b]);
    return g;
}

}  // namespace heawood
