#ifndef BLOWUP_TESTS_TEST_UTIL_HPP
#define BLOWUP_TESTS_TEST_UTIL_HPP

#include <random>

#include "blowup/algebra.hpp"
#include "blowup/morphism.hpp"

namespace blowup::testutil {

// Kodaira-Thurston model: Lambda(u,y,v,t), all degree 1, dv = u*y.
inline AlgebraPtr kodaira_thurston(int N = 5) {
    PresentationBuilder b("kodaira-thurston", N);
    int u = b.add_generator("u", 1);
    b.add_generator("y", 1);
    int v = b.add_generator("v", 1);
    b.add_generator("t", 1);
    (void)u;
    b.set_diff(v, b.element(2, {{Scalar(1), {1, 1, 0, 0}}}));
    return b.build();
}

// CP(n) model Lambda(a)/(a^{n+1}) truncated above N (default 2n+1 so that
// cohomology is certifiable through the top degree 2n).
inline AlgebraPtr cp_model(int n, int N = -1) {
    if (N < 0) N = 2 * n + 1;
    return truncated_polynomial("a", 2, n + 1, N);
}

inline AlgebraPtr trivial_algebra(int N = 0) {
    return PresentationBuilder("point", N).build();
}

// Augmentation R -> Q (unit to unit, everything positive to zero).
inline AlgebraMorphism augmentation(AlgebraPtr r, AlgebraPtr point) {
    AlgebraMorphism f;
    f.label = "augmentation";
    f.source = r;
    f.target = point;
    for (int d = 0; d <= r->N; ++d) {
        Matrix m(point->dim(d), r->dim(d));
        if (d == 0) m.at(point->unit_index, r->unit_index) = 1;
        f.mats.push_back(std::move(m));
    }
    return f;
}

inline Scalar random_scalar(std::mt19937_64& rng, int num_bound = 5, int den_bound = 3) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

inline Vec random_vec(std::mt19937_64& rng, int n, int num_bound = 5) {
    Vec v(n);
    for (auto& x : v) x = random_scalar(rng, num_bound);
    return v;
}

// Random connected CDGA built as a chain of free extensions where each new
// generator's differential is a random cocycle of the algebra built so far;
// d^2 = 0 holds by construction.
inline AlgebraPtr random_cdga(std::mt19937_64& rng, int max_gens = 4, int max_degree = 4,
                              int N = 8) {
    std::uniform_int_distribution<int> ngen(1, max_gens);
    std::uniform_int_distribution<int> gdeg(1, max_degree);
    std::uniform_int_distribution<int> pow_dist(2, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    AlgebraPtr cur = trivial_algebra(N);
    const int n = ngen(rng);
    for (int i = 0; i < n; ++i) {
        GeneratorInfo g;
        g.name = std::string(1, char('a' + i));
        g.degree = gdeg(rng);
        g.power = (g.degree % 2 == 0 && coin(rng)) ? pow_dist(rng) : 0;
        FreeExtensionBuilder ext(cur, {g}, N);
        // truncated even generators keep a zero differential; otherwise a
        // power relation can contradict the Leibniz rule
        if (g.power == 0 && g.degree + 1 <= N && coin(rng)) {
            // pick a random cocycle of cur in degree g.degree + 1
            int t = g.degree + 1;
            Matrix d = (t < cur->N) ? cur->diff[t] : Matrix(cur->dim(t + 1), cur->dim(t));
            std::vector<Vec> cocycles = kernel_basis(d);
            if (!cocycles.empty()) {
                Vec img = zero_vec(cur->dim(t));
                for (const auto& z : cocycles)
                    add_scaled(img, z, random_scalar(rng, 2, 2));
                ext.set_diff(0, ext.embed_base(t, img));
            }
        }
        cur = ext.build();
    }
    return cur;
}

}  // namespace blowup::testutil

#endif
