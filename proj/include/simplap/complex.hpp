#ifndef SIMPLAP_COMPLEX_HPP
#define SIMPLAP_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "simplap/combinatorics.hpp"
#include "simplap/rng.hpp"

namespace simplap {

/**
 * Abstract simplicial complex over an ordered vertex set.
 *
 * Vertices are referred to by their index in the fixed label list; that
 * order defines the orientation and every sign convention. Faces are
 * strictly increasing index tuples, stored per dimension in lexicographic
 * order (so matrix bases are reproducible) plus a bitmask hash set for
 * O(1) membership.
 *
 * The empty face lives at dimension -1. Two degenerate states are
 * representable: the empty complex {∅} (dim() == -1) and the void complex
 * with no faces at all (dim() == -2), which arises as the Alexander dual
 * of a full simplex. A vertex may appear in the label list without being
 * a 0-face; complexes built by from_facets always carry all singletons.
 */
class Complex {
  public:
    Complex() = default;

    /// Downward closure of the facets, plus the empty face and every
    /// listed vertex as a 0-face.
    static Complex from_facets(const std::vector<std::string>& vertices,
                               const std::vector<std::vector<std::string>>& facets) {
        Complex x;
        x.init_vertices(vertices);
        std::unordered_set<std::uint64_t> masks;
        masks.insert(0);
        for (int v = 0; v < x.n(); ++v)
            masks.insert(1ULL << v);
        for (const auto& facet : facets) {
            std::uint64_t m = 0;
            for (const auto& label : facet)
                m |= 1ULL << x.vertex_index(label);
            insert_closure(masks, m);
        }
        x.adopt(masks);
        return x;
    }

    /// Complex from explicit face masks (assumed or made downward closed).
    static Complex from_masks(const std::vector<std::string>& vertices,
                              const std::vector<std::uint64_t>& generators,
                              bool close_downward = true) {
        Complex x;
        x.init_vertices(vertices);
        std::unordered_set<std::uint64_t> masks;
        for (std::uint64_t g : generators) {
            if (close_downward)
                insert_closure(masks, g);
            else
                masks.insert(g);
        }
        x.adopt(masks);
        return x;
    }

    /// Facets of size k+1 drawn independently with the given density,
    /// then closed downward; bit-replayable under the seed.
    static Complex random(int n, int k, double density, std::uint64_t seed) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("random complex: vertex count out of range");
        if (k < 0 || k > n - 1)
            throw std::invalid_argument("random complex: facet dimension out of range");
        std::vector<std::string> labels(n);
        for (int i = 0; i < n; ++i)
            labels[i] = "v" + std::to_string(i);
        SplitMix64 rng(seed);
        std::vector<std::vector<std::string>> facets;
        for (const Face& f : all_subsets(n, k + 1)) {
            if (rng.uniform01() < density) {
                std::vector<std::string> facet;
                for (int v : f)
                    facet.push_back(labels[v]);
                facets.push_back(std::move(facet));
            }
        }
        return from_facets(labels, facets);
    }

    int n() const { return static_cast<int>(vertices_.size()); }

    /// -2 for the void complex, -1 for {∅}, else the top face dimension.
    int dim() const {
        for (int d = static_cast<int>(faces_.size()) - 1; d >= 0; --d)
            if (!faces_[d].empty())
                return d - 1;
        return -2;
    }

    bool is_void() const { return faces_.empty() || faces_[0].empty(); }

    std::uint64_t f(int k) const {
        const int d = k + 1;
        if (d < 0 || d >= static_cast<int>(faces_.size()))
            return 0;
        return faces_[d].size();
    }

    /// k-faces in lexicographic order (empty list when out of range).
    const std::vector<Face>& faces(int k) const {
        static const std::vector<Face> kNone;
        const int d = k + 1;
        if (d < 0 || d >= static_cast<int>(faces_.size()))
            return kNone;
        return faces_[d];
    }

    bool contains(std::uint64_t mask) const {
        const int d = popcount64(mask);
        if (d >= static_cast<int>(masks_.size()))
            return false;
        return masks_[d].count(mask) > 0;
    }
    bool contains(const Face& face) const { return contains(mask_of(face)); }

    const std::vector<std::string>& vertex_labels() const { return vertices_; }
    const std::string& label(int v) const { return vertices_.at(v); }

    int vertex_index(const std::string& label) const {
        auto it = vertex_index_.find(label);
        if (it == vertex_index_.end())
            throw std::invalid_argument("unknown vertex label: " + label);
        return it->second;
    }

    /// Vertices v outside sigma with sigma ∪ {v} a face. link(∅) is the
    /// 0-face support.
    std::vector<int> link(const Face& sigma) const {
        if (!contains(sigma))
            throw std::invalid_argument("link: face not in the complex");
        const std::uint64_t m = mask_of(sigma);
        std::vector<int> out;
        for (int v = 0; v < n(); ++v)
            if (!(m & (1ULL << v)) && contains(m | (1ULL << v)))
                out.push_back(v);
        return out;
    }

    std::uint64_t link_mask(std::uint64_t sigma) const {
        std::uint64_t out = 0;
        for (int v = 0; v < n(); ++v)
            if (!(sigma & (1ULL << v)) && contains(sigma | (1ULL << v)))
                out |= 1ULL << v;
        return out;
    }

    /// Number of codimension-1 cofaces of sigma.
    int upper_degree(const Face& sigma) const {
        return popcount64(link_mask(mask_of(sigma)));
    }

    /**
     * Minimal non-faces: subsets outside the complex all of whose proper
     * subsets are faces. A missing face has cardinality at most dim+2,
     * which bounds the enumeration.
     */
    std::vector<Face> missing_faces() const {
        if (is_void())
            throw std::invalid_argument("missing_faces: void complex");
        std::vector<Face> out;
        const int max_size = std::min(n(), dim() + 2);
        for (int s = 1; s <= max_size; ++s) {
            for (const Face& cand : all_subsets(n(), s)) {
                const std::uint64_t m = mask_of(cand);
                if (contains(m))
                    continue;
                bool boundary_in = true;
                for (int v : cand) {
                    if (!contains(m & ~(1ULL << v))) {
                        boundary_in = false;
                        break;
                    }
                }
                if (boundary_in)
                    out.push_back(cand);
            }
        }
        return out;
    }

    /// Largest dimension of a missing face; empty for the full simplex.
    std::optional<int> h() const {
        int best = -1;
        bool found = false;
        for (const Face& mf : missing_faces()) {
            found = true;
            best = std::max(best, static_cast<int>(mf.size()) - 1);
        }
        if (!found)
            return std::nullopt;
        return best;
    }

    /**
     * For sigma ∈ X(k) and v ∉ sigma: N = boundary (k-1)-faces of sigma
     * whose link contains v, M = the complementary vertices sigma \ η.
     */
    std::pair<std::vector<Face>, std::vector<Face>> n_sets(const Face& sigma, int v) const {
        if (!contains(sigma))
            throw std::invalid_argument("n_sets: face not in the complex");
        const std::uint64_t m = mask_of(sigma);
        if (m & (1ULL << v))
            throw std::invalid_argument("n_sets: vertex lies in the face");
        std::vector<Face> n_side, m_side;
        for (int u : sigma) {
            const std::uint64_t eta = m & ~(1ULL << u);
            if (contains(eta | (1ULL << v))) {
                n_side.push_back(face_of(eta));
                m_side.push_back(Face{u});
            }
        }
        return {n_side, m_side};
    }

    /**
     * Partition of (∩_{v∈sigma} lk(v)) \ lk(sigma) by |N_sigma(u)|;
     * classes[j] holds the vertices seen by exactly j boundary faces.
     * Every class is empty on a clique complex.
     */
    std::vector<std::vector<int>> sigma_classes(const Face& sigma) const {
        if (!contains(sigma) || sigma.empty())
            throw std::invalid_argument("sigma_classes: need a face of dimension >= 0");
        const int k = static_cast<int>(sigma.size()) - 1;
        const std::uint64_t m = mask_of(sigma);
        std::uint64_t common = ~0ULL;
        for (int v : sigma)
            common &= link_mask(1ULL << v);
        const std::uint64_t lk = link_mask(m);
        std::uint64_t pool = common & ~lk & ~m & ((n() >= 64) ? ~0ULL : ((1ULL << n()) - 1));
        std::vector<std::vector<int>> classes(k + 2);
        for (int u = 0; u < n(); ++u) {
            if (!(pool & (1ULL << u)))
                continue;
            const auto ns = n_sets(sigma, u);
            classes[ns.first.size()].push_back(u);
        }
        return classes;
    }

    Complex skeleton(int p) const {
        std::vector<std::uint64_t> keep;
        for (int k = -1; k <= std::min(p, dim()); ++k)
            for (const Face& face : faces(k))
                keep.push_back(mask_of(face));
        return from_masks(vertices_, keep, false);
    }

    Complex underlying_graph() const { return skeleton(1); }

    /// Induced subcomplex on a label subset, relabeled in inherited order.
    Complex induced(const std::vector<std::string>& labels) const {
        std::uint64_t umask = 0;
        for (const auto& l : labels)
            umask |= 1ULL << vertex_index(l);
        std::vector<std::string> sub_labels;
        std::vector<int> new_index(n(), -1);
        for (int v = 0; v < n(); ++v)
            if (umask & (1ULL << v)) {
                new_index[v] = static_cast<int>(sub_labels.size());
                sub_labels.push_back(vertices_[v]);
            }
        std::vector<std::uint64_t> keep;
        for (int k = -1; k <= dim(); ++k)
            for (const Face& face : faces(k)) {
                const std::uint64_t m = mask_of(face);
                if ((m & ~umask) == 0) {
                    std::uint64_t remapped = 0;
                    for (int v : face)
                        remapped |= 1ULL << new_index[v];
                    keep.push_back(remapped);
                }
            }
        return from_masks(sub_labels, keep, false);
    }

    /// Remove a maximal face; deleting a non-maximal face would break closure.
    Complex delete_face(const Face& sigma) const {
        if (!contains(sigma))
            throw std::invalid_argument("delete_face: face not in the complex");
        if (link_mask(mask_of(sigma)) != 0)
            throw std::invalid_argument("delete_face: face is not maximal");
        const std::uint64_t target = mask_of(sigma);
        std::vector<std::uint64_t> keep;
        for (int k = -1; k <= dim(); ++k)
            for (const Face& face : faces(k)) {
                const std::uint64_t m = mask_of(face);
                if (m != target)
                    keep.push_back(m);
            }
        return from_masks(vertices_, keep, false);
    }

    /// Maximal faces, ordered by dimension then lexicographically. A face
    /// with empty link has no coface of any size, by downward closure.
    std::vector<Face> facets() const {
        std::vector<Face> out;
        for (int k = -1; k <= dim(); ++k)
            for (const Face& face : faces(k))
                if (link_mask(mask_of(face)) == 0)
                    out.push_back(face);
        return out;
    }

    /// True when the faces are exactly the cliques of the underlying graph.
    bool is_clique_complex() const {
        if (is_void())
            return false;
        std::uint64_t support = 0;
        for (const Face& v : faces(0))
            support |= mask_of(v);
        // Every clique of G_X must be a face (faces are cliques by closure).
        std::vector<std::uint64_t> cliques{0};
        for (int v = 0; v < n(); ++v) {
            if (!(support & (1ULL << v)))
                continue;
            const std::size_t count = cliques.size();
            for (std::size_t i = 0; i < count; ++i) {
                const std::uint64_t c = cliques[i];
                bool joined = true;
                for (int u = 0; u < v; ++u)
                    if ((c & (1ULL << u)) && !contains((1ULL << u) | (1ULL << v))) {
                        joined = false;
                        break;
                    }
                if (joined)
                    cliques.push_back(c | (1ULL << v));
            }
        }
        for (std::uint64_t c : cliques)
            if (!contains(c))
                return false;
        return true;
    }

    bool is_subcomplex_of(const Complex& other) const {
        if (vertices_ != other.vertices_)
            return false;
        for (int k = -1; k <= dim(); ++k)
            for (const Face& face : faces(k))
                if (!other.contains(face))
                    return false;
        return true;
    }

    bool operator==(const Complex& o) const {
        return vertices_ == o.vertices_ && faces_ == o.faces_;
    }
    bool operator!=(const Complex& o) const { return !(*this == o); }

  private:
    void init_vertices(const std::vector<std::string>& vertices) {
        if (static_cast<int>(vertices.size()) > kMaxVertices)
            throw std::invalid_argument("too many vertices (bitmask limit)");
        for (const auto& label : vertices) {
            if (vertex_index_.count(label))
                throw std::invalid_argument("duplicate vertex label: " + label);
            vertex_index_[label] = static_cast<int>(vertices_.size());
            vertices_.push_back(label);
        }
    }

    static void insert_closure(std::unordered_set<std::uint64_t>& masks, std::uint64_t g) {
        std::uint64_t s = g;
        while (true) {
            masks.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & g;
        }
    }

    void adopt(const std::unordered_set<std::uint64_t>& masks) {
        int top = 0;
        for (std::uint64_t m : masks)
            top = std::max(top, popcount64(m));
        faces_.assign(top + 1, {});
        masks_.assign(top + 1, {});
        for (std::uint64_t m : masks) {
            const int d = popcount64(m);
            faces_[d].push_back(face_of(m));
            masks_[d].insert(m);
        }
        for (auto& level : faces_)
            std::sort(level.begin(), level.end(), face_lex_less);
        if (!masks.empty() && masks_.size() > 0 && masks_[0].empty())
            throw std::invalid_argument("complex with faces must contain the empty face");
    }

    std::vector<std::string> vertices_;
    std::unordered_map<std::string, int> vertex_index_;
    std::vector<std::vector<Face>> faces_;   // index k+1
    std::vector<std::unordered_set<std::uint64_t>> masks_;
};

}  // namespace simplap

#endif  // SIMPLAP_COMPLEX_HPP
