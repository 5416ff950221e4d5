#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace disco {

using Face = std::vector<int>; // sorted vertex labels

// Finite abstract simplicial complex. Faces are stored per dimension as
// sorted label sequences in lexicographic order; the face family is
// downward closed and duplicate-free. Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Builds from an arbitrary face list. Labels are sorted per face and the
    // family is completed downward when close_downward is set; otherwise
    // downward closure is verified and MalformedComplex thrown on failure.
    static SimplicialComplex from_faces(std::vector<Face> faces, bool close_downward = true);

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<int>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    // Faces of one dimension (empty list past the top dimension).
    const std::vector<Face>& faces(int d) const;
    std::size_t face_count() const;
    std::size_t face_count(int d) const { return faces(d).size(); }

    bool has_face(const Face& f) const; // f must be sorted
    std::size_t face_index(const Face& f) const; // position within its dimension block

    // Every nonempty proper subset of every face is a face.
    bool downward_closed() const;

    // Relabels vertices through `map` (old label -> new label); used by the
    // relabeling-invariance tests.
    SimplicialComplex relabeled(const std::vector<int>& map) const;

    // Line-oriented text format; see README ("complex text format").
    void write_text(std::ostream& os) const;
    static SimplicialComplex read_text(std::istream& is);

private:
    std::vector<int> vertices_;
    std::vector<std::vector<Face>> by_dim_;
};

// All subsets of {0..N} with at most d+1 vertices. Throws
// std::invalid_argument when d > N.
SimplicialComplex simplex_skeleton(int N, int d);

// Two-fold deleted join: two disjoint copies of V(K); faces are unions
// sigma1 ⊎ sigma2 with sigma1, sigma2 faces of K or empty (not both),
// vertex-disjoint in K. The second copy's labels are offset by
// max label + 1. Throws std::invalid_argument on an empty complex.
SimplicialComplex deleted_join2(const SimplicialComplex& K);

} // namespace disco
