#include "discotop/vietoris_rips.hpp"

#include <stdexcept>

namespace disco {

SimplicialComplex vr_complex(const FiniteMetricSample& M, VRThreshold t, int max_dim) {
    if (max_dim < 0) throw std::invalid_argument("vr_complex: max_dim < 0");
    if (t.value < 0.0) throw std::invalid_argument("vr_complex: negative threshold");
    const std::size_t n = M.size();
    const bool weak = t.convention == VRThreshold::Convention::weak;

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = M(i, j);
            const bool in = weak ? d <= t.value : d < t.value;
            adj[i][j] = adj[j][i] = in ? 1 : 0;
        }

    std::vector<Face> faces;
    Face cur;
    // Grow cliques by appending larger vertices adjacent to every member.
    auto grow = [&](auto&& self, std::size_t last) -> void {
        faces.push_back(cur);
        if (static_cast<int>(cur.size()) == max_dim + 1) return;
        for (std::size_t v = last + 1; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!adj[static_cast<std::size_t>(u)][v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(static_cast<int>(v));
            self(self, v);
            cur.pop_back();
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        cur.push_back(static_cast<int>(v));
        grow(grow, v);
        cur.pop_back();
    }
    return SimplicialComplex::from_faces(std::move(faces), false);
}

} // namespace disco
