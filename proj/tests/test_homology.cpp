#include "doctest.h"

#include "discotop/errors.hpp"
#include "discotop/homology.hpp"
#include "discotop/rng.hpp"
#include "discotop/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace disco;

namespace {

SimplicialComplex four_cycle() {
    return SimplicialComplex::from_faces({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

} // namespace

TEST_CASE("betti numbers of small complexes") {
    CHECK(betti_numbers(chain_complex(simplex_skeleton(0, 0))) == BettiVector{1});

    const SimplicialComplex join = deleted_join2(simplex_skeleton(4, 1));
    CHECK(betti_numbers(chain_complex(join)) == BettiVector{1, 0, 0, 1});

    const SimplicialComplex oct = deleted_join2(simplex_skeleton(2, 2));
    const BettiVector got = betti_numbers(chain_complex(oct));
    CHECK(got == BettiVector{1, 0, 1});
    CHECK(got == oracles::betti_bruteforce(oct));
}

TEST_CASE("betti numbers agree with the brute-force oracle") {
    for (const auto& K :
         {four_cycle(), simplex_skeleton(3, 2), deleted_join2(simplex_skeleton(3, 1))})
        CHECK(betti_numbers(chain_complex(K)) == oracles::betti_bruteforce(K));
}

TEST_CASE("homology sphere recognition") {
    const ChainComplex cycle = chain_complex(four_cycle());
    CHECK(is_homology_n_sphere(cycle, 1));
    CHECK_FALSE(is_homology_n_sphere(cycle, 2));

    CHECK(is_homology_n_sphere(chain_complex(simplex_skeleton(1, 0)), 0)); // two points

    const SimplicialComplex join = deleted_join2(simplex_skeleton(6, 2));
    CHECK(is_homology_n_sphere(chain_complex(join), 5));
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
    for (const auto& K : {four_cycle(), deleted_join2(simplex_skeleton(2, 2)),
                          deleted_join2(simplex_skeleton(4, 1)), simplex_skeleton(4, 2)}) {
        const ChainComplex C = chain_complex(K);
        const BettiVector b = betti_numbers(C);
        long long alt = 0;
        for (std::size_t k = 0; k < b.size(); ++k)
            alt += (k % 2 == 0 ? 1LL : -1LL) * b[k];
        CHECK(C.euler_characteristic() == alt);
    }
}

TEST_CASE("betti numbers are invariant under vertex relabeling") {
    const SimplicialComplex K = deleted_join2(simplex_skeleton(3, 1));
    const BettiVector base = betti_numbers(chain_complex(K));
    CounterRng rng(42);
    const int nv = K.vertices().back() + 1;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> map(static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i) map[static_cast<std::size_t>(i)] = i;
        for (int i = nv - 1; i > 0; --i)
            std::swap(map[static_cast<std::size_t>(i)],
                      map[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        CHECK(betti_numbers(chain_complex(K.relabeled(map))) == base);
    }
}

TEST_CASE("elimination internal consistency: rank bounds") {
    const ChainComplex C = chain_complex(deleted_join2(simplex_skeleton(4, 1)));
    for (int k = 1; k < C.dim(); ++k) {
        const std::size_t rank_k = C.boundaries[static_cast<std::size_t>(k)].rank();
        const std::size_t rank_k1 = C.boundaries[static_cast<std::size_t>(k + 1)].rank();
        CHECK(rank_k1 <= C.cell_counts[static_cast<std::size_t>(k)] - rank_k);
    }
}

TEST_CASE("betti rejects mismatched boundary shapes") {
    ChainComplex C = chain_complex(deleted_join2(simplex_skeleton(2, 2)));
    C.boundaries[2] = BitMatrix(5, 8); // rows disagree with dim-1 cell count
    CHECK_THROWS_AS(betti_numbers(C), MalformedComplex);
}
