#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace hdgtest;

TEST_CASE("Laplacian matrices of the worked examples") {
    const auto c1 = build_embedded_complex(example_2_1());
    Eigen::MatrixXd l0(2, 2);
    l0 << 1.5, -1.5, -1.5, 1.5;
    CHECK((laplacian_matrix(c1, 0) - l0).cwiseAbs().maxCoeff() < 1e-12);

    const auto c2 = build_embedded_complex(example_2_2());
    Eigen::MatrixXd l2(2, 2);
    l2 << 3, -1, -1, 3;
    CHECK((laplacian_matrix(c2, 2) - l2).cwiseAbs().maxCoeff() < 1e-12);

    const auto c3 = build_embedded_complex(example_3_3());
    CHECK(laplacian_matrix(c3, 2).rows() == 0);
}

TEST_CASE("spectra of the worked examples") {
    const auto c1 = build_embedded_complex(example_2_1());
    CHECK(spectrum_close(spectrum(laplacian_matrix(c1, 1)), {3, 3}, 1e-9));

    const auto cf = build_embedded_complex(figure3());
    CHECK(spectrum_close(spectrum(laplacian_matrix(cf, 0)),
                         {0, 1.044, 2.332, 4.080, 6.544}, 1e-3));

    CHECK(spectrum_close(spectrum(Eigen::MatrixXd::Identity(2, 2)), {1, 1}, 1e-12));
}

TEST_CASE("exact Betti numbers") {
    const auto loop = two_vertex_loop();
    CHECK(betti_exact(loop, 0) == 0);
    CHECK(betti_exact(loop, 1) == 1);
    CHECK(betti_exact(loop, 2) == 0);

    const auto complete = build_embedded_complex(table2_complete());
    CHECK(betti_exact(complete, 0) == 1);
    CHECK(betti_exact(complete, 1) == 0);
    CHECK(betti_exact(complete, 2) == 2);

    const auto shuffle = build_embedded_complex(table3_shuffle());
    CHECK(betti_exact(shuffle, 0) == 0);
    CHECK(betti_exact(shuffle, 1) == 2);
    CHECK(betti_exact(shuffle, 2) == 0);
}

TEST_CASE("connectivity of the vertex dimension") {
    const auto path = Hyperdigraph::make(2, {E{0}, E{1}, E{0, 1}});
    const auto r1 = connectivity_check(path);
    CHECK(r1.connected);
    CHECK(r1.lambda0_2_positive);
    REQUIRE(r1.lambda0_2.has_value());
    CHECK(*r1.lambda0_2 == doctest::Approx(2.0).epsilon(1e-12));

    const auto isolated = Hyperdigraph::make(2, {E{0}, E{1}});
    const auto r2 = connectivity_check(isolated);
    CHECK_FALSE(r2.connected);
    CHECK_FALSE(r2.lambda0_2_positive);
    CHECK(*r2.lambda0_2 == doctest::Approx(0.0));

    const auto r3 = connectivity_check(figure3());
    CHECK(r3.connected);
    CHECK(r3.lambda0_2_positive);
    CHECK(*r3.lambda0_2 == doctest::Approx(1.044).epsilon(1e-3));

    CHECK_THROWS_AS(connectivity_check(two_vertex_loop()), InputError);
}

TEST_CASE("summaries cross-check the numeric zero count against exact Betti") {
    const auto summaries = analyze(example_2_2());
    REQUIRE(summaries.size() == 3);
    CHECK(summaries[0].betti == 1);
    CHECK(summaries[1].betti == 0);
    CHECK(summaries[2].betti == 0);
    CHECK(*summaries[0].lambda_min_nonzero == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(*summaries[1].lambda_min_nonzero == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(*summaries[2].lambda_min_nonzero == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(*summaries[0].fiedler == doctest::Approx(1.0).epsilon(1e-9));

    // an absurd threshold flips the count and must be rejected loudly
    CHECK_THROWS_AS(analyze(example_2_2(), -1, 1e6), ConsistencyError);
}

namespace {

Eigen::MatrixXd random_orthogonal(std::mt19937& rng, Index n) {
    if (n == 0) return Eigen::MatrixXd::Zero(0, 0);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd a(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) a(i, j) = gauss(rng);
    return Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
}

} // namespace

TEST_CASE("spectra are invariant under orthonormal re-basing") {
    std::mt19937 rng(2718);
    int instances = 0;
    while (instances < 200) {
        const auto h = random_hyperdigraph(rng);
        auto c = build_embedded_complex(h);
        if (h.total_edges() == 0) continue;
        ++instances;

        std::vector<std::vector<double>> reference;
        for (int p = 0; p <= c.top_dim; ++p)
            reference.push_back(spectrum(laplacian_matrix(c, p)));

        for (size_t p = 0; p < c.ortho.size(); ++p)
            c.ortho[p] = c.ortho[p] * random_orthogonal(rng, c.ortho[p].cols());
        for (int p = 1; p < static_cast<int>(c.brep.size()); ++p)
            c.brep[static_cast<size_t>(p)] =
                boundary_rep(c.ortho[static_cast<size_t>(p)], c.ortho[static_cast<size_t>(p - 1)],
                             c.ambient[static_cast<size_t>(p)],
                             h.grade_size(p - 1));
        c.brep[0] = Eigen::MatrixXd::Zero(c.dim(0), 0);

        for (int p = 0; p <= c.top_dim; ++p)
            CHECK(spectrum_close(spectrum(laplacian_matrix(c, p)),
                                 reference[static_cast<size_t>(p)], 1e-9));
    }
}

TEST_CASE("zero counts, positivity and the Hodge dimension split") {
    std::mt19937 rng(1618);
    for (int iter = 0; iter < 200; ++iter) {
        const auto h = random_hyperdigraph(rng);
        const auto c = build_embedded_complex(h);
        for (int p = 0; p <= c.top_dim; ++p) {
            const auto eigs = spectrum(laplacian_matrix(c, p));
            const long betti = betti_exact(c, p);
            // summarize_spectrum throws on any zero-count mismatch
            const auto s = summarize_spectrum(eigs, betti, kDefaultZeroTol);
            CHECK(s.betti == betti);
            for (double x : eigs) CHECK(x >= -1e-9);

            // dim = betti + float-rank(B_p) + float-rank(B_{p+1})
            auto float_rank = [](const Eigen::MatrixXd& m) {
                if (m.size() == 0) return static_cast<Index>(0);
                Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
                Index r = 0;
                for (Index i = 0; i < svd.singularValues().size(); ++i)
                    if (svd.singularValues()(i) > 1e-8) ++r;
                return r;
            };
            const Index split = betti + float_rank(c.boundary_matrix(p)) +
                                float_rank(c.boundary_matrix(p + 1));
            CHECK(split == c.dim(p));
        }
    }
}

TEST_CASE("connectivity theorem holds iff on random all-vertex instances") {
    std::mt19937 rng(40961);
    RandomComplexOptions opt;
    opt.all_vertices = true;
    for (int iter = 0; iter < 200; ++iter) {
        const auto h = random_hyperdigraph(rng, opt);
        const auto report = connectivity_check(h);
        CHECK(report.lambda0_2_positive == report.connected);
    }
}
