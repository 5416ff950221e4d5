#include "discotop/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "discotop/errors.hpp"

namespace disco {

std::size_t CellComplex::cell_count() const {
    std::size_t n = 0;
    for (const auto& block : cells_by_dim) n += block.size();
    return n;
}

void CellComplex::validate() const {
    if (cells_by_dim.size() != boundary_by_dim.size())
        throw MalformedComplex("cell complex: dimension blocks out of sync");
    for (int d = 0; d <= dim(); ++d) {
        const auto& cells = cells_by_dim[static_cast<std::size_t>(d)];
        const auto& bnds = boundary_by_dim[static_cast<std::size_t>(d)];
        if (cells.size() != bnds.size())
            throw MalformedComplex("cell complex: boundary list count mismatch");
        for (std::size_t c = 0; c < cells.size(); ++c) {
            int total = 0;
            std::vector<char> seen;
            for (int fid : cells[c]) {
                const Face& f = base_faces.at(static_cast<std::size_t>(fid));
                if (f.empty()) throw MalformedComplex("cell complex: empty factor face");
                total += static_cast<int>(f.size()) - 1;
                for (int v : f) {
                    if (static_cast<std::size_t>(v) >= seen.size())
                        seen.resize(static_cast<std::size_t>(v) + 1, 0);
                    if (seen[static_cast<std::size_t>(v)])
                        throw MalformedComplex("cell complex: factors share a vertex");
                    seen[static_cast<std::size_t>(v)] = 1;
                }
            }
            if (total != d)
                throw MalformedComplex("cell complex: cell dimension != sum of factor dims");
            for (int b : bnds[c])
                if (d == 0 || b < 0 || static_cast<std::size_t>(b) >= cell_count(d - 1))
                    throw MalformedComplex("cell complex: boundary index out of range");
        }
    }
}

std::vector<std::vector<int>> CellComplex::permutation_action(
    const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != arity)
        throw std::invalid_argument("permutation_action: wrong permutation size");
    std::vector<std::vector<int>> action(cells_by_dim.size());
    for (int d = 0; d <= dim(); ++d) {
        const auto& cells = cells_by_dim[static_cast<std::size_t>(d)];
        std::map<std::vector<int>, int> index;
        for (std::size_t c = 0; c < cells.size(); ++c)
            index[cells[c]] = static_cast<int>(c);
        auto& out = action[static_cast<std::size_t>(d)];
        out.resize(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::vector<int> img(cells[c].size());
            for (std::size_t i = 0; i < img.size(); ++i)
                img[static_cast<std::size_t>(perm[i])] = cells[c][i];
            const auto it = index.find(img);
            if (it == index.end())
                throw MalformedComplex("permutation_action: image cell missing");
            out[c] = it->second;
        }
    }
    return action;
}

namespace {

std::uint64_t face_mask(const Face& f) {
    std::uint64_t m = 0;
    for (int v : f) m |= 1ULL << v;
    return m;
}

} // namespace

CellComplex deleted_product(const SimplicialComplex& K, int r) {
    if (r < 2) throw std::invalid_argument("deleted_product: r must be >= 2");
    if (!K.vertices().empty() && K.vertices().back() >= 64)
        throw std::invalid_argument("deleted_product: vertex labels must be < 64");

    CellComplex X;
    X.arity = r;
    if (K.vertex_count() < static_cast<std::size_t>(r)) {
        X.vacuous = true;
        return X;
    }

    std::map<Face, int> face_id;
    std::vector<std::uint64_t> masks;
    for (int d = 0; d <= K.dim(); ++d)
        for (const auto& f : K.faces(d)) {
            face_id[f] = static_cast<int>(X.base_faces.size());
            X.base_faces.push_back(f);
            masks.push_back(face_mask(f));
        }

    // Enumerate ordered r-tuples of pairwise disjoint nonempty faces.
    std::vector<std::vector<std::vector<int>>> cells;
    std::vector<int> tuple(static_cast<std::size_t>(r));
    const int nf = static_cast<int>(X.base_faces.size());
    auto rec = [&](auto&& self, int pos, std::uint64_t used, int dim_so_far) -> void {
        if (pos == r) {
            if (static_cast<int>(cells.size()) <= dim_so_far) cells.resize(dim_so_far + 1);
            cells[static_cast<std::size_t>(dim_so_far)].push_back(tuple);
            return;
        }
        for (int f = 0; f < nf; ++f) {
            if (masks[static_cast<std::size_t>(f)] & used) continue;
            tuple[static_cast<std::size_t>(pos)] = f;
            self(self, pos + 1, used | masks[static_cast<std::size_t>(f)],
                 dim_so_far + static_cast<int>(X.base_faces[static_cast<std::size_t>(f)].size()) - 1);
        }
    };
    rec(rec, 0, 0, 0);

    X.cells_by_dim = std::move(cells);
    X.boundary_by_dim.resize(X.cells_by_dim.size());

    // Cell lookup per dimension for boundary assembly.
    std::vector<std::map<std::vector<int>, int>> index(X.cells_by_dim.size());
    for (int d = 0; d <= X.dim(); ++d) {
        const auto& block = X.cells_by_dim[static_cast<std::size_t>(d)];
        for (std::size_t c = 0; c < block.size(); ++c)
            index[static_cast<std::size_t>(d)][block[c]] = static_cast<int>(c);
    }

    // Factorwise facets: replace one factor of dimension >= 1 by one of its
    // facets. Facet tuples stay pairwise disjoint and nonempty.
    for (int d = 0; d <= X.dim(); ++d) {
        auto& bnds = X.boundary_by_dim[static_cast<std::size_t>(d)];
        const auto& block = X.cells_by_dim[static_cast<std::size_t>(d)];
        bnds.resize(block.size());
        if (d == 0) continue;
        for (std::size_t c = 0; c < block.size(); ++c) {
            std::vector<int> facet_cell = block[c];
            for (std::size_t i = 0; i < facet_cell.size(); ++i) {
                const Face& f = X.base_faces[static_cast<std::size_t>(block[c][i])];
                if (f.size() < 2) continue;
                for (std::size_t k = 0; k < f.size(); ++k) {
                    Face sub;
                    sub.reserve(f.size() - 1);
                    for (std::size_t t = 0; t < f.size(); ++t)
                        if (t != k) sub.push_back(f[t]);
                    facet_cell[i] = face_id.at(sub);
                    bnds[c].push_back(index[static_cast<std::size_t>(d - 1)].at(facet_cell));
                }
                facet_cell[i] = block[c][i];
            }
            std::sort(bnds[c].begin(), bnds[c].end());
        }
    }
    return X;
}

} // namespace disco
