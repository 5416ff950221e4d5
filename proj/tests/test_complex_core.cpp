#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "discotop/cell_complex.hpp"
#include "discotop/chain_complex.hpp"
#include "discotop/errors.hpp"
#include "discotop/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace disco;

TEST_CASE("simplex skeleton face counts") {
    const SimplicialComplex k5 = simplex_skeleton(4, 1);
    CHECK(k5.face_count(0) == 5);
    CHECK(k5.face_count(1) == 10); // complete graph on five vertices
    CHECK(k5.dim() == 1);

    const SimplicialComplex pts = simplex_skeleton(2, 0);
    CHECK(pts.face_count() == 3);
    CHECK(pts.dim() == 0);

    const SimplicialComplex sk2 = simplex_skeleton(4, 2);
    long long expected = 0;
    for (int j = 1; j <= 3; ++j) expected += oracles::binom(5, j);
    CHECK(static_cast<long long>(sk2.face_count()) == expected); // 25
    for (int d = 0; d <= 2; ++d)
        CHECK(static_cast<long long>(sk2.face_count(d)) == oracles::binom(5, d + 1));

    CHECK_THROWS_AS(simplex_skeleton(2, 3), std::invalid_argument);
}

TEST_CASE("generated complexes are downward closed") {
    CHECK(simplex_skeleton(4, 2).downward_closed());
    CHECK(deleted_join2(simplex_skeleton(2, 2)).downward_closed());
    CHECK(deleted_join2(simplex_skeleton(4, 1)).downward_closed());
}

TEST_CASE("deleted join of the segment is the 4-cycle") {
    const SimplicialComplex join = deleted_join2(simplex_skeleton(1, 1));
    CHECK(join.vertex_count() == 4); // two copies
    CHECK(join.face_count(0) == 4);
    CHECK(join.dim() == 1);
    // copies: 0,1 and 2,3 (offset 2)
    const std::set<Face> edges(join.faces(1).begin(), join.faces(1).end());
    const std::set<Face> expected{{0, 1}, {2, 3}, {0, 3}, {1, 2}};
    CHECK(edges == expected);
    // homology of the circle via the independent rank oracle
    CHECK(oracles::betti_bruteforce(join) == std::vector<long>{1, 1});
}

TEST_CASE("deleted join face counts match the cross-polytope boundary") {
    for (int N = 0; N <= 4; ++N) {
        const SimplicialComplex join = deleted_join2(simplex_skeleton(N, N));
        std::size_t expected = 1;
        for (int i = 0; i <= N; ++i) expected *= 3;
        CHECK(join.face_count() == expected - 1);
        CHECK(join.vertex_count() == 2 * simplex_skeleton(N, N).vertex_count());
    }
    CHECK_THROWS_AS(deleted_join2(SimplicialComplex{}), std::invalid_argument);
}

namespace {

// Independent enumeration of ordered disjoint nonempty face tuples.
std::size_t count_disjoint_tuples(const SimplicialComplex& K, int r, int dim_filter) {
    std::vector<Face> all;
    for (int d = 0; d <= K.dim(); ++d)
        for (const auto& f : K.faces(d)) all.push_back(f);
    std::size_t count = 0;
    std::vector<int> pick(static_cast<std::size_t>(r));
    auto disjoint = [](const Face& a, const Face& b) {
        for (int x : a)
            for (int y : b)
                if (x == y) return false;
        return true;
    };
    auto rec = [&](auto&& self, int pos, int dim_sum) -> void {
        if (pos == r) {
            if (dim_filter < 0 || dim_sum == dim_filter) ++count;
            return;
        }
        for (std::size_t i = 0; i < all.size(); ++i) {
            bool ok = true;
            for (int p = 0; p < pos; ++p)
                if (!disjoint(all[static_cast<std::size_t>(pick[static_cast<std::size_t>(p)])],
                              all[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick[static_cast<std::size_t>(pos)] = static_cast<int>(i);
            self(self, pos + 1, dim_sum + static_cast<int>(all[i].size()) - 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

} // namespace

TEST_CASE("deleted product of the segment") {
    const CellComplex X = deleted_product(simplex_skeleton(1, 1), 2);
    CHECK(X.dim() == 0);
    CHECK(X.cell_count(0) == 2);
    CHECK_FALSE(X.vacuous);
}

TEST_CASE("deleted product of the complete graph on five vertices") {
    const SimplicialComplex k5 = simplex_skeleton(4, 1);
    const CellComplex X = deleted_product(k5, 2);
    CHECK(X.cell_count(0) == 20);
    CHECK(X.cell_count(1) == 60);
    CHECK(X.cell_count(2) == 30);
    for (int d = 0; d <= 2; ++d)
        CHECK(X.cell_count(d) == count_disjoint_tuples(k5, 2, d));
    X.validate();
}

TEST_CASE("deleted product top dimension at the Tverberg simplex size") {
    struct Case { int r, d; };
    for (const Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}}) {
        const int N = (c.r - 1) * (c.d + 1);
        const CellComplex X = deleted_product(simplex_skeleton(N, N), c.r);
        CHECK(X.dim() == (c.r - 1) * c.d);
    }
}

TEST_CASE("deleted product with too few vertices is vacuous, not an error") {
    const CellComplex X = deleted_product(simplex_skeleton(1, 1), 3);
    CHECK(X.vacuous);
    CHECK(X.cell_count() == 0);
}

TEST_CASE("coordinate permutation acts by bijections and preserves the cell set") {
    const CellComplex X = deleted_product(simplex_skeleton(3, 1), 2);
    const auto action = X.permutation_action({1, 0});
    for (int d = 0; d <= X.dim(); ++d) {
        const auto& perm = action[static_cast<std::size_t>(d)];
        std::vector<char> hit(perm.size(), 0);
        for (int img : perm) {
            REQUIRE(img >= 0);
            REQUIRE(static_cast<std::size_t>(img) < perm.size());
            hit[static_cast<std::size_t>(img)] = 1;
        }
        CHECK(std::count(hit.begin(), hit.end(), 1) == static_cast<long>(perm.size()));
        // involution
        for (std::size_t c = 0; c < perm.size(); ++c)
            CHECK(perm[static_cast<std::size_t>(perm[c])] == static_cast<int>(c));
    }

    const CellComplex Y = deleted_product(simplex_skeleton(4, 2), 3);
    for (const auto& perm : {std::vector<int>{1, 2, 0}, std::vector<int>{2, 1, 0}}) {
        const auto act = Y.permutation_action(perm);
        for (int d = 0; d <= Y.dim(); ++d) {
            std::set<int> image(act[static_cast<std::size_t>(d)].begin(),
                                act[static_cast<std::size_t>(d)].end());
            CHECK(image.size() == Y.cell_count(d));
        }
    }
}

TEST_CASE("chain complex of an edge") {
    const ChainComplex C = chain_complex(simplex_skeleton(1, 1));
    REQUIRE(C.dim() == 1);
    CHECK(C.boundaries[1].rows() == 2);
    CHECK(C.boundaries[1].cols() == 1);
    CHECK(C.boundaries[1].get(0, 0)); // boundary of {a,b} is a + b
    CHECK(C.boundaries[1].get(1, 0));
}

TEST_CASE("octahedron chain complex shapes and boundary-of-boundary") {
    const SimplicialComplex oct = deleted_join2(simplex_skeleton(2, 2));
    const ChainComplex C = chain_complex(oct);
    REQUIRE(C.dim() == 2);
    CHECK(C.boundaries[1].rows() == 6);
    CHECK(C.boundaries[1].cols() == 12);
    CHECK(C.boundaries[2].rows() == 12);
    CHECK(C.boundaries[2].cols() == 8);
    CHECK(BitMatrix::multiply(C.boundaries[1], C.boundaries[2]).is_zero());
    C.validate();
}

TEST_CASE("boundary-of-boundary vanishes for deleted product cellular chains") {
    for (int r : {2, 3}) {
        const CellComplex X = deleted_product(simplex_skeleton(4, 2), r);
        const ChainComplex C = chain_complex(X);
        for (int k = 2; k <= C.dim(); ++k)
            CHECK(BitMatrix::multiply(C.boundaries[static_cast<std::size_t>(k - 1)],
                                      C.boundaries[static_cast<std::size_t>(k)])
                      .is_zero());
    }
}

TEST_CASE("malformed complexes are rejected") {
    CHECK_THROWS_AS(SimplicialComplex::from_faces({{0, 1, 2}}, false), MalformedComplex);
    CellComplex bad = deleted_product(simplex_skeleton(2, 1), 2);
    bad.cells_by_dim[1][0] = {0, 0}; // factors share a vertex
    CHECK_THROWS_AS(chain_complex(bad), MalformedComplex);
}

TEST_CASE("complex text format round-trips") {
    const SimplicialComplex original = deleted_join2(simplex_skeleton(3, 1));
    std::stringstream buf;
    original.write_text(buf);
    const SimplicialComplex reread = SimplicialComplex::read_text(buf);
    CHECK(reread.dim() == original.dim());
    for (int d = 0; d <= original.dim(); ++d) CHECK(reread.faces(d) == original.faces(d));

    std::stringstream empty("\n\n");
    CHECK_THROWS_AS(SimplicialComplex::read_text(empty), MalformedComplex);
}
