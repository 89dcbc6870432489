#include <doctest.h>

#include <chenruan/sectors.hpp>

using namespace chenruan;

namespace {
GroupElement elem(const Fan& fan, std::initializer_list<int> exponents) {
    std::map<int, Rational> w;
    int i = 0;
    for (int e : exponents) {
        if (e % 5 != 0) w[i] = rat(((e % 5) + 5) % 5, 5);
        ++i;
    }
    GroupElement g;
    g.box_point.assign(fan.dim(), 0);
    std::vector<Rational> acc(fan.dim(), Rational(0));
    for (auto& [ray, ww] : w) {
        for (int j = 0; j < fan.dim(); ++j) acc[j] += ww * Rational(fan.rays()[ray][j]);
        g.weights[ray] = ww;
    }
    for (int j = 0; j < fan.dim(); ++j) g.box_point[j] = acc[j].get_num().get_si();
    return g;
}

bool contains_triple(const std::vector<TricyclicSector>& sectors, const GroupElement& g1, const GroupElement& g2,
                     const GroupElement& g3) {
    for (const auto& s : sectors)
        if (s.g1 == g1 && s.g2 == g2 && s.g3 == g3) return true;
    return false;
}
} // namespace

TEST_CASE("smooth fan: identity sector only") {
    Fan smooth = Fan::projective_space();
    auto toric = enumerate_tricyclic_toric(smooth);
    REQUIRE(toric.size() == 1);
    CHECK(toric[0].g1.is_identity());
    auto hyper = enumerate_tricyclic_hypersurface(smooth);
    REQUIRE(hyper.sectors.size() == 1);
    CHECK(hyper.sectors[0].type == SectorType::Identity);
    CHECK(hyper.census.ordered_nonzero == 0);
    CHECK(hyper.census.curve_sectors == 0);
}

TEST_CASE("ambient sector counts over a fixed curve cone") {
    Fan fan = Fan::mirror_quintic();
    auto toric = enumerate_tricyclic_toric(fan);
    long same_cone = 0, total_dim2_pairs = 0;
    for (const auto& s : toric) {
        if (s.tau1 == ConeKey{0, 1} && s.tau2 == ConeKey{0, 1}) ++same_cone;
        if (s.tau1.size() == 2 && s.tau1 == s.tau2) ++total_dim2_pairs;
    }
    CHECK(same_cone == 16);
    CHECK(total_dim2_pairs == 160);
}

TEST_CASE("hypersurface census reproduces the point-sector counts") {
    Fan fan = Fan::mirror_quintic();
    auto en = enumerate_tricyclic_hypersurface(fan);
    CHECK(en.census.ordered_nonzero == 930);
    CHECK(en.census.type_i == 810);
    CHECK(en.census.type_ii == 120);
    CHECK(en.census.curve_sectors == 160);
    CHECK(en.census.rank_zero_pairs == 2250); // includes 240 identity-slot pairs
    long nontrivial_rank0 = 0;
    for (const auto& s : en.sectors)
        if (s.dim == 0 && s.rank == 0 && !s.g1.is_identity() && !s.g2.is_identity()) ++nontrivial_rank0;
    CHECK(nontrivial_rank0 == 2010);
}

TEST_CASE("reference example triples appear with the right classification") {
    Fan fan = Fan::mirror_quintic();
    auto en = enumerate_tricyclic_hypersurface(fan);
    GroupElement a1 = elem(fan, {4, 1, 0, 0, 0}), a2 = elem(fan, {0, 3, 2, 0, 0}), a3 = elem(fan, {1, 1, 3, 0, 0});
    CHECK(contains_triple(en.sectors, a1, a2, a3));
    GroupElement b1 = elem(fan, {3, 1, 1, 0, 0}), b2 = elem(fan, {2, 4, 4, 0, 0}), b3 = elem(fan, {0, 0, 0, 0, 0});
    CHECK(contains_triple(en.sectors, b1, b2, b3));
    for (const auto& s : en.sectors) {
        if (s.g1 == a1 && s.g2 == a2) {
            CHECK(s.type == SectorType::PointI);
            CHECK(s.census_nonzero);
            CHECK(s.dim == 0);
            CHECK(s.components == 1);
            for (int j = 0; j < 3; ++j) CHECK(s.shifts[j] == 1);
        }
        if (s.g1 == b1 && s.g2 == b2) {
            CHECK(s.type == SectorType::PointII);
            CHECK(s.census_nonzero);
            CHECK(s.shifts[0] == 1);
            CHECK(s.shifts[1] == 2);
            CHECK(s.shifts[2] == 0);
        }
    }
}

TEST_CASE("census type-i sectors have product shift two") {
    Fan fan = Fan::mirror_quintic();
    auto en = enumerate_tricyclic_hypersurface(fan);
    for (const auto& s : en.sectors) {
        if (!s.census_nonzero || s.type != SectorType::PointI) continue;
        GroupElement product = group_mul(fan, s.g1, s.g2);
        CHECK(product.degree_shift() == 2);
        for (int j = 0; j < 3; ++j) CHECK(s.shifts[j] == 1);
    }
}

TEST_CASE("degree shifts: identity, curve elements, point types") {
    Fan fan = Fan::mirror_quintic();
    CHECK(group_identity(4).degree_shift() == 0);
    for (const auto& key : fan.cones()) {
        if (key.size() != 2) continue;
        for (const auto& g : interior_box_points(fan, fan.cone(key))) CHECK(g.degree_shift() == 1);
    }
}

TEST_CASE("shift duality against sector dimension") {
    Fan fan = Fan::mirror_quintic();
    const int d = fan.dim() - 1;
    for (const auto& key : fan.cones()) {
        int codim = fan.dim() - static_cast<int>(key.size());
        if (codim == 0 || key.empty()) continue;
        for (const auto& g : interior_box_points(fan, fan.cone(key))) {
            GroupElement inv = group_inverse(fan, g);
            int dim_sector = codim - 1;
            CHECK(g.degree_shift() + inv.degree_shift() == Rational(d - dim_sector));
            CHECK(rat_is_integer(g.degree_shift())); // Calabi-Yau charts act through SL
        }
    }
}

TEST_CASE("pair-to-triple correspondence is a bijection") {
    Fan fan = Fan::mirror_quintic();
    auto en = enumerate_tricyclic_hypersurface(fan);
    std::set<std::pair<std::vector<long>, std::vector<long>>> pair_keys;
    for (const auto& s : en.sectors) {
        std::vector<long> k1 = s.g1.box_point, k2 = s.g2.box_point;
        CHECK(group_mul(fan, group_mul(fan, s.g1, s.g2), s.g3).is_identity());
        pair_keys.insert({k1, k2});
    }
    CHECK(pair_keys.size() == en.sectors.size());
}

TEST_CASE("obstruction rank values across the enumeration") {
    Fan fan = Fan::mirror_quintic();
    auto en = enumerate_tricyclic_hypersurface(fan);
    for (const auto& s : en.sectors) {
        CHECK(rat_is_integer(s.rank));
        CHECK(s.rank >= 0);
        if (s.census_nonzero) CHECK(s.rank == 0);
        if (s.type == SectorType::Curve) {
            CHECK((s.rank == 0 || s.rank == 1));
            // rank 0 curve sectors have shift sum 2, rank 1 have 3
            CHECK(s.shift_sum() == s.rank + 2);
        }
        if (s.dim == 0 && s.rank == 0) CHECK(s.shift_sum() == 3);
    }
}

TEST_CASE("orbifold hodge table of the quintic fixture") {
    Fan fan = Fan::mirror_quintic();
    HodgeFixture fixture = HodgeFixture::mirror_quintic();
    CHECK(fixture.symmetric());
    auto betti = orbifold_betti(fan, fixture);
    CHECK(betti[{0, 0}] == 1);
    CHECK(betti[{3, 0}] == 1);
    CHECK(betti[{0, 3}] == 1);
    CHECK(betti[{1, 1}] == 101);
    CHECK(betti[{2, 2}] == 101);
    CHECK(betti[{2, 1}] == 1);
    CHECK(betti[{3, 3}] == 1);
}

TEST_CASE("point components on the quintic stratum") {
    Fan fan = Fan::mirror_quintic();
    CHECK(quintic_point_components(fan, {0, 1, 2}) == 1);
    CHECK(quintic_point_components(fan, {1, 3, 4}) == 1);
    CHECK_THROWS_AS(quintic_point_components(fan, {0, 1}), std::invalid_argument);
}
