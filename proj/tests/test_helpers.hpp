#pragma once

#include <random>

#include "armik/arm_model.hpp"
#include "armik/geom3.hpp"

namespace armik::test {

inline ArmGeometry reference_geometry() { return {3.0, 3.0, 2.0}; }

/// Wrist point the reference worked example uses throughout.
inline Vec3 reference_wrist() { return {3.0, 3.0, -3.0}; }

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near(const Vec3& a, const Vec3& b, double tol) {
    return near(a.x, b.x, tol) && near(a.y, b.y, tol) && near(a.z, b.z, tol);
}

class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    Vec3 unit_vector() {
        std::normal_distribution<double> gauss(0.0, 1.0);
        while (true) {
            const Vec3 v{gauss(engine_), gauss(engine_), gauss(engine_)};
            const double n = norm(v);
            if (n > 1e-3) return v / n;
        }
    }

    /// Wrist at a strictly reachable distance for the given links.
    Vec3 reachable_wrist(const ArmGeometry& geom, double margin = 1e-3) {
        const double lo = std::abs(geom.d1 - geom.d2) + margin;
        const double hi = geom.d1 + geom.d2 - margin;
        return unit_vector() * uniform(lo, hi);
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace armik::test
