#include "jacpair/newton.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace jacpair;
using namespace jacpair::testutil;

namespace {

// Figure-style polynomial with the sqrt(7) coefficient replaced by 7; the
// support is unchanged by the substitution.
LaurentPoly figure1() { return P("y + 7*x*y^3 + 7*x^3*y^4 - 4*x^5*y^3 + 2*x^5*y^2 - 1/2*x^3 + x*y + 1"); }

} // namespace

TEST_CASE("support") {
    auto s = support(P("x + 2*y"));
    CHECK(s == std::vector<Point>{{0, 1}, {1, 0}});
    CHECK(support(LaurentPoly{}).empty());

    auto f1 = support(figure1());
    CHECK(f1.size() == 8);
    CHECK(std::find(f1.begin(), f1.end(), Point{5, 3}) != f1.end());
    CHECK(std::find(f1.begin(), f1.end(), Point{3, 4}) != f1.end());
}

TEST_CASE("newton polygon hull") {
    NewtonPolygon n = newton_polygon(figure1());
    CHECK(n.vertices() ==
          std::vector<Point>{{0, 0}, {3, 0}, {5, 2}, {5, 3}, {3, 4}, {1, 3}, {0, 1}});

    CHECK(newton_polygon(P("x^3*y")).vertices() == std::vector<Point>{{3, 1}});
    CHECK(newton_polygon(P("1 + x^2 + y^2 + x^2*y^2")).vertices() ==
          std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK_THROWS_AS(newton_polygon(LaurentPoly{}), error);
}

TEST_CASE("hull contains every support point") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
        LaurentPoly f = random_poly(rng, 8, 5, true);
        NewtonPolygon n = newton_polygon(f);
        for (Point p : support(f)) CHECK(n.contains(p));
    }
}

TEST_CASE("w-degree and leading form") {
    Direction w11{1, 1};
    CHECK(w_deg(P("x^2+y"), w11) == 2);
    CHECK(leading_form(P("x^2+y"), w11) == P("x^2"));

    Direction w01{0, 1};
    CHECK(w_deg(P("x^2*y^2+x^2"), w01) == 2);
    CHECK(leading_form(P("x^2*y^2+x^2"), w01) == P("x^2*y^2"));

    // max of ui+vj over the support: (5,3) wins at degree 8
    CHECK(w_deg(figure1(), w11) == 8);
    CHECK(leading_form(figure1(), w11) == P("0-4*x^5*y^3"));
}

TEST_CASE("decomposition reassembles") {
    std::mt19937_64 rng(11);
    const Direction dirs[] = {{1, 1}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {1, -1}};
    for (int it = 0; it < 30; ++it) {
        LaurentPoly f = random_poly(rng, 8, 5, true);
        for (Direction w : dirs) {
            WDecomp d = decompose(f, w);
            LaurentPoly sum;
            for (const auto& [deg, comp] : d.components) {
                CHECK(is_w_homogeneous(comp, w));
                CHECK(w_deg(comp, w) == deg);
                sum += comp;
            }
            CHECK(sum == f);
        }
    }
}

TEST_CASE("lattice length") {
    CHECK(lattice_len(P("x^2*y + x*y^3"), Direction{2, 1}) == 1);
    CHECK(lattice_len(P("x*y"), Direction{1, 1}) == 0);
    CHECK(lattice_len(P("x^2 + 2*x*y + y^2"), Direction{1, 1}) == 2);
    CHECK_THROWS_AS(lattice_len(P("x + y^2"), Direction{1, 1}), error);

    // invariant under multiplication by a monomial
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        LaurentPoly h = P("x^2 + 2*x*y + y^2");
        long i = rnd_range(rng, -3, 3), j = rnd_range(rng, -3, 3);
        LaurentPoly m = LaurentPoly::monomial(rat(rnd_range(rng, 1, 5)), i, j);
        CHECK(lattice_len(m * h, Direction{1, 1}) == 2);
    }
}

TEST_CASE("similarity with ratio") {
    NewtonPolygon sq2 = newton_polygon(P("1 + x^2 + y^2 + x^2*y^2"));
    NewtonPolygon sq3 = newton_polygon(P("1 + x^3 + y^3 + x^3*y^3"));
    CHECK(similar_with_ratio(sq2, sq3, 2, 3));
    CHECK(similar_with_ratio(sq2, sq2, 1, 1));
    NewtonPolygon rect = newton_polygon(P("1 + x^4 + y^2 + x^4*y^2"));
    CHECK_FALSE(similar_with_ratio(sq2, rect, 2, 4));
}

TEST_CASE("northeastern vertex") {
    NewtonPolygon fig2(
        {Point{0, 0}, Point{6, 0}, Point{10, 4}, Point{10, 6}, Point{6, 8}, Point{2, 6},
         Point{0, 2}});
    CHECK(northeastern_vertex(fig2) == Point{10, 6});

    NewtonPolygon rect = newton_polygon(P("1 + x^6 + y^4 + x^6*y^4"));
    CHECK(northeastern_vertex(rect) == Point{6, 4});

    NewtonPolygon pt(std::vector<Point>{{4, 0}});
    CHECK(northeastern_vertex(pt) == Point{4, 0});
}

TEST_CASE("edge normals") {
    NewtonPolygon sq = newton_polygon(P("1 + x^2 + y^2 + x^2*y^2"));
    auto ns = edge_normals(sq);
    REQUIRE(ns.size() == 2); // bottom and left normals are not directions
    CHECK(ns[0] == Direction{1, 0});
    CHECK(ns[1] == Direction{0, 1});
}

TEST_CASE("polygon area and clipping") {
    std::vector<QPoint> unit = {QPoint(Point{0, 0}), QPoint(Point{2, 0}), QPoint(Point{2, 2}),
                                QPoint(Point{0, 2})};
    CHECK(polygon_area(unit) == 4);

    std::vector<QPoint> shifted = {QPoint(Point{1, 1}), QPoint(Point{3, 1}), QPoint(Point{3, 3}),
                                   QPoint(Point{1, 3})};
    Overlap ov = classify_overlap(convex_clip(unit, shifted));
    CHECK(ov.kind == Overlap::Kind::polygon);
    CHECK(polygon_area(ov.pts) == 1);

    std::vector<QPoint> touching = {QPoint(Point{2, 0}), QPoint(Point{4, 0}), QPoint(Point{4, 2}),
                                    QPoint(Point{2, 2})};
    Overlap edge = classify_overlap(convex_clip(unit, touching));
    CHECK(edge.kind == Overlap::Kind::segment);

    std::vector<QPoint> corner = {QPoint(Point{2, 2}), QPoint(Point{4, 2}), QPoint(Point{4, 4}),
                                  QPoint(Point{2, 4})};
    Overlap pt = classify_overlap(convex_clip(unit, corner));
    CHECK(pt.kind == Overlap::Kind::point);

    std::vector<QPoint> away = {QPoint(Point{5, 5}), QPoint(Point{6, 5}), QPoint(Point{6, 6}),
                                QPoint(Point{5, 6})};
    CHECK(classify_overlap(convex_clip(unit, away)).kind == Overlap::Kind::empty);
}
