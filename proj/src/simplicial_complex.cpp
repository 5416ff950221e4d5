#include "discotop/simplicial_complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "discotop/errors.hpp"

namespace disco {

namespace {

const std::vector<Face> kNoFaces;

void subsets_up_to(const std::vector<int>& pool, std::size_t max_size, Face& cur,
                   std::size_t start, std::vector<Face>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        subsets_up_to(pool, max_size, cur, i + 1, out);
        cur.pop_back();
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces, bool close_downward) {
    std::set<Face> family;
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) continue;
        family.insert(std::move(f));
    }
    if (close_downward) {
        std::vector<Face> queue(family.begin(), family.end());
        while (!queue.empty()) {
            Face f = std::move(queue.back());
            queue.pop_back();
            if (f.size() <= 1) continue;
            for (std::size_t k = 0; k < f.size(); ++k) {
                Face sub;
                sub.reserve(f.size() - 1);
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != k) sub.push_back(f[i]);
                if (family.insert(sub).second) queue.push_back(std::move(sub));
            }
        }
    }
    SimplicialComplex K;
    std::set<int> verts;
    for (const auto& f : family) {
        const int d = static_cast<int>(f.size()) - 1;
        if (static_cast<int>(K.by_dim_.size()) <= d) K.by_dim_.resize(d + 1);
        K.by_dim_[d].push_back(f);
        verts.insert(f.begin(), f.end());
    }
    for (auto& block : K.by_dim_) std::sort(block.begin(), block.end());
    K.vertices_.assign(verts.begin(), verts.end());
    if (!close_downward && !K.downward_closed())
        throw MalformedComplex("face family is not downward closed");
    return K;
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kNoFaces;
    return by_dim_[d];
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (const auto& block : by_dim_) n += block.size();
    return n;
}

bool SimplicialComplex::has_face(const Face& f) const {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return false;
    const auto& block = by_dim_[d];
    return std::binary_search(block.begin(), block.end(), f);
}

std::size_t SimplicialComplex::face_index(const Face& f) const {
    const int d = static_cast<int>(f.size()) - 1;
    const auto& block = faces(d);
    const auto it = std::lower_bound(block.begin(), block.end(), f);
    if (it == block.end() || *it != f) throw std::invalid_argument("face_index: no such face");
    return static_cast<std::size_t>(it - block.begin());
}

bool SimplicialComplex::downward_closed() const {
    for (int d = 1; d <= dim(); ++d) {
        for (const auto& f : by_dim_[d]) {
            for (std::size_t k = 0; k < f.size(); ++k) {
                Face sub;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != k) sub.push_back(f[i]);
                if (!has_face(sub)) return false;
            }
        }
    }
    return true;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& map) const {
    std::vector<Face> faces;
    faces.reserve(face_count());
    for (const auto& block : by_dim_)
        for (const auto& f : block) {
            Face g;
            g.reserve(f.size());
            for (int v : f) g.push_back(map.at(static_cast<std::size_t>(v)));
            faces.push_back(std::move(g));
        }
    return from_faces(std::move(faces), false);
}

void SimplicialComplex::write_text(std::ostream& os) const {
    os << "# discotop complex v1\n";
    for (int d = 0; d <= dim(); ++d) {
        os << "# dim " << d << "\n";
        for (const auto& f : by_dim_[d]) {
            for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
            os << "\n";
        }
    }
}

SimplicialComplex SimplicialComplex::read_text(std::istream& is) {
    std::vector<Face> faces;
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        Face f;
        int v;
        while (ls >> v) f.push_back(v);
        if (!f.empty()) faces.push_back(std::move(f));
    }
    if (!saw_header && faces.empty())
        throw MalformedComplex("complex text: no header and no faces");
    // Files list every face explicitly; verify rather than complete.
    return SimplicialComplex::from_faces(std::move(faces), false);
}

SimplicialComplex simplex_skeleton(int N, int d) {
    if (N < 0 || d < 0) throw std::invalid_argument("simplex_skeleton: negative argument");
    if (d > N) throw std::invalid_argument("simplex_skeleton: d > N");
    std::vector<int> pool(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<Face> faces;
    Face cur;
    subsets_up_to(pool, static_cast<std::size_t>(d) + 1, cur, 0, faces);
    return SimplicialComplex::from_faces(std::move(faces), false);
}

SimplicialComplex deleted_join2(const SimplicialComplex& K) {
    if (K.face_count() == 0) throw std::invalid_argument("deleted_join2: empty complex");
    const int offset = K.vertices().back() + 1;

    std::vector<Face> all;
    all.reserve(K.face_count() + 1);
    all.push_back({}); // empty factor allowed on either side
    for (int d = 0; d <= K.dim(); ++d)
        for (const auto& f : K.faces(d)) all.push_back(f);

    auto disjoint = [](const Face& a, const Face& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j])
                ++i;
            else if (b[j] < a[i])
                ++j;
            else
                return false;
        }
        return true;
    };

    std::vector<Face> joined;
    for (const auto& s1 : all) {
        for (const auto& s2 : all) {
            if (s1.empty() && s2.empty()) continue;
            if (!disjoint(s1, s2)) continue;
            Face f = s1;
            for (int v : s2) f.push_back(v + offset);
            joined.push_back(std::move(f));
        }
    }
    return SimplicialComplex::from_faces(std::move(joined), false);
}

} // namespace disco
