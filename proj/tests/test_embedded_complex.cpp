#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace hdgtest;

namespace {

RationalMatrix columns(std::initializer_list<std::vector<long>> cols, Index rows) {
    RationalMatrix m(rows, static_cast<Index>(cols.size()));
    Index j = 0;
    for (const auto& col : cols) {
        for (Index i = 0; i < rows; ++i) m(i, j) = col[static_cast<size_t>(i)];
        ++j;
    }
    return m;
}

bool column_matches_up_to_sign(const Eigen::MatrixXd& q, Index col, const Eigen::VectorXd& v,
                               double tol) {
    return (q.col(col) - v).cwiseAbs().maxCoeff() < tol ||
           (q.col(col) + v).cwiseAbs().maxCoeff() < tol;
}

} // namespace

TEST_CASE("embedded spaces of the first hypergraph example") {
    const auto c = build_embedded_complex(example_2_1());
    CHECK(c.dim(0) == 2);
    CHECK(c.dim(1) == 2);
    CHECK(c.dim(2) == 1);
    // Inf_1 = span{ {1,2}, {1,3}-{2,3} } over C_1 generators {12},{13},{23}
    const auto expected = columns({{1, 0, 0}, {0, 1, -1}}, 3);
    CHECK(span_contains(c.omega[1], expected));
    CHECK(span_contains(expected, c.omega[1]));
    // Inf_2 = span{ {1,2,3} }
    CHECK(c.omega[2] == RationalMatrix::identity(1));
}

TEST_CASE("embedded spaces of the 3-vertex hyperdigraph example") {
    const auto c = build_embedded_complex(example_3_3());
    CHECK(c.dim(0) == 2);
    CHECK(c.dim(2) == 0);
    // Omega_1 = span{ (12), (13)+(32) } over generators (01),(02),(21)
    const auto expected = columns({{1, 0, 0}, {0, 1, 1}}, 3);
    CHECK(span_contains(c.omega[1], expected));
    CHECK(span_contains(expected, c.omega[1]));
}

TEST_CASE("embedded spaces of the shuffle example") {
    const auto c = build_embedded_complex(table3_shuffle());
    CHECK(c.dim(0) == 0);
    CHECK(c.dim(1) == 3);
    CHECK(c.dim(2) == 1);
    // the three quoted generators over lexicographic grade order
    // (01),(02),(10),(21),(31),(32),(41):
    //   (12)+(21), (13)+(32)+(21), (32)-(42)+(43)
    const auto expected = columns({{1, 0, 1, 0, 0, 0, 0},
                                   {0, 1, 1, 1, 0, 0, 0},
                                   {0, 0, 0, 1, -1, 1, 0}},
                                  7);
    CHECK(span_contains(c.omega[1], expected));
    CHECK(span_contains(expected, c.omega[1]));
}

TEST_CASE("orthonormalize reproduces the quoted unit generators") {
    const auto c = build_embedded_complex(example_2_1());
    // second column must be exactly (1/sqrt2){1,3} - (1/sqrt2){2,3}
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::VectorXd expected(3);
    expected << 0, s, -s;
    CHECK((c.ortho[1].col(1) - expected).cwiseAbs().maxCoeff() < 1e-12);

    // already-orthonormal standard generators stay put
    const auto complete = build_embedded_complex(table2_complete());
    CHECK((complete.ortho[1] - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((complete.ortho[2] - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("orthonormal 2-chains of the five-vertex example match (x),(y) up to sign") {
    const auto c = build_embedded_complex(five_vertex());
    REQUIRE(c.dim(2) == 2);
    const double r2 = 1.0 / std::sqrt(2.0), r6 = 1.0 / std::sqrt(6.0);
    Eigen::VectorXd x(3), y(3);
    x << r2, -r2, 0;
    y << -r6, -r6, 2 * r6;
    CHECK(column_matches_up_to_sign(c.ortho[2], 0, x, 1e-12));
    CHECK(column_matches_up_to_sign(c.ortho[2], 1, y, 1e-12));
}

TEST_CASE("boundary representations of the first hypergraph example") {
    const auto c = build_embedded_complex(example_2_1());
    Eigen::MatrixXd b1(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    b1 << -1, 1, -s, s;
    CHECK((c.brep[1] - b1).cwiseAbs().maxCoeff() < 1e-12);

    Eigen::MatrixXd b2(1, 2);
    b2 << 1, -std::sqrt(2.0);
    CHECK((c.brep[2] - b2).cwiseAbs().maxCoeff() < 1e-12);

    // dimension above the top grade: no columns, one row per missing chain
    CHECK(c.brep[3].rows() == 0);
    CHECK(c.brep[3].cols() == 1);
}

TEST_CASE("boundary representations of the second hypergraph example") {
    const auto c = build_embedded_complex(example_2_2());
    Eigen::MatrixXd b1(6, 5);
    b1 << -1, 1, 0, 0, 0,
          -1, 0, 0, 1, 0,
           0, -1, 1, 0, 0,
           0, -1, 0, 1, 0,
           0, -1, 0, 0, 1,
           0, 0, -1, 1, 0;
    CHECK((c.brep[1] - b1).cwiseAbs().maxCoeff() < 1e-12);

    Eigen::MatrixXd b2(2, 6);
    b2 << 1, -1, 0, 1, 0, 0,
          0, 0, 1, -1, 0, 1;
    CHECK((c.brep[2] - b2).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("embedded complex invariants on random instances") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 120; ++iter) {
        const auto h = random_hyperdigraph(rng);
        const auto c = build_embedded_complex(h);
        for (int p = 0; p < static_cast<int>(c.omega.size()); ++p) {
            const auto& q = c.ortho[static_cast<size_t>(p)];
            if (q.cols() > 0) {
                const Eigen::MatrixXd gram = q.transpose() * q;
                CHECK((gram - Eigen::MatrixXd::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff() <
                      1e-12);
                // mutual span: the float image of the exact basis projects onto Q
                const Eigen::MatrixXd xf = c.omega[static_cast<size_t>(p)].to_double();
                CHECK((xf - q * (q.transpose() * xf)).cwiseAbs().maxCoeff() < 1e-10);
            }

            // maximality: dim + rank(forbidden-row block) = dim F_p
            const auto& d = c.ambient[static_cast<size_t>(p)];
            const auto forbidden = d.matrix.select_rows(d.forbidden_rows());
            CHECK(c.dim(p) + rank(forbidden) == h.grade_size(p));

            // closure: exact boundaries stay inside the lower embedded span
            if (p >= 1) {
                const auto bnd = exact_boundary_in_edge_coords(d, c.omega[static_cast<size_t>(p)],
                                                               h.grade_size(p - 1));
                CHECK(span_contains(c.omega[static_cast<size_t>(p - 1)], bnd));
            }
        }
        // chain property survives orthonormalization
        for (int p = 1; p + 1 < static_cast<int>(c.brep.size()); ++p) {
            const Eigen::MatrixXd composite =
                c.brep[static_cast<size_t>(p + 1)] * c.brep[static_cast<size_t>(p)];
            if (composite.size() > 0) CHECK(composite.cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}
