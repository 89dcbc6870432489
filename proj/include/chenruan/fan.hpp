#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "matrix.hpp"

namespace chenruan {

using ConeKey = std::vector<int>; // sorted ray indices

// Simplicial cone inside a fixed fan: ray indices plus the generator rows.
struct Cone {
    ConeKey rays;     // sorted indices into Fan::rays
    IntMat generators; // one row per ray
    int dim() const { return static_cast<int>(rays.size()); }
};

// Simplicial fan given by primitive rays and explicit maximal cones; the face
// closure is generated internally (faces of a simplicial cone = ray subsets).
class Fan {
public:
    Fan(int dimension, IntMat rays, std::vector<ConeKey> max_cones)
        : dim_(dimension), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
        validate();
        build_faces();
    }

    int dim() const { return dim_; }
    const IntMat& rays() const { return rays_; }
    const std::vector<ConeKey>& max_cones() const { return max_cones_; }
    const std::vector<ConeKey>& cones() const { return all_cones_; }

    bool has_cone(const ConeKey& key) const { return cone_set_.count(key) > 0; }

    Cone cone(const ConeKey& key) const {
        if (!has_cone(key)) throw std::invalid_argument("cone is not in the fan");
        Cone c;
        c.rays = key;
        for (int i : key) c.generators.push_back(rays_[i]);
        return c;
    }

    // The cone generated by the union of the two ray sets, when it is a fan
    // cone; the closed orbits meet exactly then.
    std::optional<Cone> span(const ConeKey& a, const ConeKey& b) const {
        ConeKey u = a;
        u.insert(u.end(), b.begin(), b.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        if (!has_cone(u)) return std::nullopt;
        return cone(u);
    }

    // Maximal cones containing the given cone.
    std::vector<ConeKey> star(const ConeKey& key) const {
        std::vector<ConeKey> out;
        for (const auto& mc : max_cones_)
            if (std::includes(mc.begin(), mc.end(), key.begin(), key.end())) out.push_back(mc);
        return out;
    }

    static Fan mirror_quintic() {
        IntMat rays = {{4, -1, -1, -1}, {-1, 4, -1, -1}, {-1, -1, 4, -1}, {-1, -1, -1, 4}, {-1, -1, -1, -1}};
        std::vector<ConeKey> max;
        for (int skip = 0; skip < 5; ++skip) {
            ConeKey c;
            for (int i = 0; i < 5; ++i)
                if (i != skip) c.push_back(i);
            max.push_back(c);
        }
        return Fan(4, std::move(rays), std::move(max));
    }

    static Fan projective_space() {
        IntMat rays = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}};
        std::vector<ConeKey> max;
        for (int skip = 0; skip < 5; ++skip) {
            ConeKey c;
            for (int i = 0; i < 5; ++i)
                if (i != skip) c.push_back(i);
            max.push_back(c);
        }
        return Fan(4, std::move(rays), std::move(max));
    }

    static std::optional<Fan> builtin(const std::string& name) {
        if (name == "mirror-quintic") return mirror_quintic();
        if (name == "projective-space") return projective_space();
        return std::nullopt;
    }

    bool same_rays(const Fan& other) const { return rays_ == other.rays_; }

    // every maximal cone unimodular
    bool smooth() const {
        for (const auto& mc : max_cones_) {
            if (static_cast<int>(mc.size()) != dim_) return false;
            IntMat gens;
            for (int i : mc) gens.push_back(rays_[i]);
            Integer det = integer_det(gens);
            if (det != 1 && det != -1) return false;
        }
        return true;
    }

private:
    void validate() {
        if (dim_ < 1) throw std::invalid_argument("fan dimension must be positive");
        for (size_t i = 0; i < rays_.size(); ++i) {
            if (static_cast<int>(rays_[i].size()) != dim_)
                throw std::invalid_argument("ray " + std::to_string(i) + " has wrong length");
            long g = ivec_gcd(rays_[i]);
            if (g == 0) throw std::invalid_argument("ray " + std::to_string(i) + " is zero");
            if (g != 1)
                throw std::invalid_argument("ray " + std::to_string(i) +
                                            " is not primitive (gcd " + std::to_string(g) + "); rejected");
        }
        for (auto& mc : max_cones_) {
            std::sort(mc.begin(), mc.end());
            if (std::unique(mc.begin(), mc.end()) != mc.end())
                throw std::invalid_argument("maximal cone repeats a ray index");
            for (int i : mc)
                if (i < 0 || i >= static_cast<int>(rays_.size()))
                    throw std::invalid_argument("maximal cone uses ray index out of range");
            // simplicial: generators linearly independent
            Matrix<Rational> m;
            for (int i : mc) {
                std::vector<Rational> row;
                for (long x : rays_[i]) row.push_back(Rational(x));
                m.push_back(std::move(row));
            }
            if (mat_rank(m) != mc.size()) throw std::invalid_argument("non-simplicial cone rejected");
        }
    }

    void build_faces() {
        std::set<ConeKey> faces;
        for (const auto& mc : max_cones_) {
            size_t n = mc.size();
            for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
                ConeKey f;
                for (size_t b = 0; b < n; ++b)
                    if (mask & (size_t(1) << b)) f.push_back(mc[b]);
                faces.insert(f);
            }
        }
        all_cones_.assign(faces.begin(), faces.end());
        std::sort(all_cones_.begin(), all_cones_.end(), [](const ConeKey& a, const ConeKey& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        cone_set_ = std::move(faces);
    }

    int dim_;
    IntMat rays_;
    std::vector<ConeKey> max_cones_;
    std::vector<ConeKey> all_cones_;
    std::set<ConeKey> cone_set_;
};

inline std::optional<Cone> orbit_closure_meet(const Cone& a, const Cone& b, const Fan& fan) {
    return fan.span(a.rays, b.rays);
}

} // namespace chenruan
