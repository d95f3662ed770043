#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quadext/compositum.hpp"

using namespace quadext;

namespace {

CompositumSpec spec_of(const FieldPtr& F, std::initializer_list<const char*> exprs) {
    CompositumSpec s;
    s.field = F;
    for (const char* e : exprs) s.f.push_back(parse_expr(e, F));
    return s;
}

}  // namespace

TEST_CASE("worked q=3 compositum") {
    auto F3 = GaloisField::of_size(3);
    auto spec = spec_of(F3, {"2*(x^3+2*x+2)", "x^3+2*x+1"});
    auto lat = CharacterLattice::build(spec);

    CHECK(lat.subfield_genera() == std::vector<unsigned>{1, 1, 2});
    CHECK(lat.genus() == 4);
    CHECK(lat.hurwitz_genus() == 4);

    auto count = lat.count_rational_places();
    CHECK(count.N == 12);
    // each finite rational place contributes 4; infinity contributes 0
    for (const auto& e : count.log) {
        if (e.place.is_infinity()) {
            CHECK(e.contribution == 0);
            CHECK(e.statuses[0] == SplitStatus::ramified);
            CHECK(e.statuses[1] == SplitStatus::ramified);
            CHECK(e.statuses[2] == SplitStatus::inert);
        } else {
            CHECK(e.contribution == 4);
        }
    }
    CHECK(brute_force_affine_count(spec) == 12);
    CHECK(CharacterLattice::affine_total(count) == 12);
}

TEST_CASE("disjointness check") {
    auto F2 = GaloisField::of_size(2);
    auto spec = spec_of(F2, {"x", "x"});
    try {
        CharacterLattice::build(spec);
        FAIL("expected NotDisjoint");
    } catch (const NotDisjoint& e) {
        CHECK(e.subset_mask == 3);
        CHECK(e.kind == DegenerateKind::trivial_extension);
    }
}

TEST_CASE("q=2 pairs from the dataset") {
    auto F2 = GaloisField::of_size(2);

    auto lat = CharacterLattice::build(spec_of(F2, {"x", "x^3"}));
    CHECK(lat.subfield_genera() == std::vector<unsigned>{0, 1, 1});
    CHECK(lat.genus() == 2);
    auto count = lat.count_rational_places();
    CHECK(count.N == 5);
    CHECK(brute_force_affine_count(lat.spec()) == 4);
    CHECK(CharacterLattice::affine_total(count) == 4);

    auto lat2 = CharacterLattice::build(spec_of(F2, {"1/x", "1/(x+1)"}));
    CHECK(lat2.genus() == 1);
    CHECK(lat2.count_rational_places().N == 4);

    auto lat3 = CharacterLattice::build(spec_of(F2, {"1/x", "x/(x^2+x+1)"}));
    CHECK(lat3.genus() == 3);
    auto c3 = lat3.count_rational_places();
    CHECK(c3.N == 6);
    // x-0: chi1 and chi1*chi2 ramified, chi2 split -> contribution 2
    CHECK(c3.log[0].contribution == 2);
    CHECK(c3.log[0].statuses == std::vector<SplitStatus>{SplitStatus::ramified,
                                                         SplitStatus::split,
                                                         SplitStatus::ramified});
    // x-1: chi1 inert -> 0
    CHECK(c3.log[1].contribution == 0);
    // infinity: all split -> 4
    CHECK(c3.log[2].contribution == 4);
}

TEST_CASE("q=8 subfield genera") {
    auto F8 = GaloisField::of_size(8);
    auto lat = CharacterLattice::build(spec_of(F8, {"1/x + w^6/(x+1)", "w^3/x"}));
    CHECK(lat.genus() == 2);
}

TEST_CASE("single generator reduces to the quadratic case") {
    auto F3 = GaloisField::of_size(3);
    auto spec = spec_of(F3, {"x"});
    auto lat = CharacterLattice::build(spec);
    CHECK(lat.genus() == 0);
    CHECK(lat.hurwitz_genus() == 0);
    auto count = lat.count_rational_places();
    // a=0 ramified (1), a=1 split (2), a=2 inert (0), infinity ramified (1)
    CHECK(count.N == 4);
    CHECK(brute_force_affine_count(spec) == 3);
    CHECK(CharacterLattice::affine_total(count) == 3);
}

TEST_CASE("brute force with vanishing generators, odd characteristic") {
    auto F3 = GaloisField::of_size(3);
    // f1 and f2 share the root x = 0; the affine model is singular there
    auto spec = spec_of(F3, {"x*(x^2+1)", "x*(x^2+x+2)"});
    auto lat = CharacterLattice::build(spec);
    auto count = lat.count_rational_places();
    CHECK(brute_force_affine_count(spec) == CharacterLattice::affine_total(count));

    // non-square-free generator: x^2*(x+1) vanishes doubly at 0
    auto spec2 = spec_of(F3, {"x^2*(x+1)"});
    auto lat2 = CharacterLattice::build(spec2);
    auto count2 = lat2.count_rational_places();
    CHECK(brute_force_affine_count(spec2) == CharacterLattice::affine_total(count2));
    // the place x = 0 is split (u = x+1 -> 1) and contributes 2, but the
    // affine fiber over it has a single point
    CHECK(count2.log[0].contribution == 2);
    CHECK(count2.log[0].affine_fiber == 1);
}

namespace {

RationalFunction random_squarefree(const FieldPtr& F, std::mt19937_64& rng) {
    for (;;) {
        int d = 1 + static_cast<int>(rng() % 5);
        std::vector<unsigned> c(d + 1);
        for (auto& v : c) v = static_cast<unsigned>(rng() % F->size());
        Polynomial p(F, std::move(c));
        if (p.degree() < 1) continue;
        return RationalFunction(squarefree_part(p).scaled(
            F->element(1 + static_cast<unsigned>(rng() % (F->size() - 1)))));
    }
}

}  // namespace

TEST_CASE("hurwitz cross-check on random odd instances") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 60) {
        unsigned q = (rng() % 2) ? 3u : 9u;
        unsigned n = 2 + static_cast<unsigned>(rng() % 2);
        auto F = GaloisField::of_size(q);
        CompositumSpec spec;
        spec.field = F;
        for (unsigned i = 0; i < n; ++i) spec.f.push_back(random_squarefree(F, rng));
        try {
            auto lat = CharacterLattice::build(spec);
            CHECK(lat.hurwitz_genus() == lat.genus());  // also asserts internally
            ++done;
        } catch (const NotDisjoint&) {
        } catch (const DegenerateExtension&) {
        }
    }
}

TEST_CASE("invariance of genus and N") {
    std::mt19937_64 rng(37);

    // permutation + basis change + scaling, odd characteristic
    int done = 0;
    while (done < 20) {
        auto F = GaloisField::of_size(9);
        CompositumSpec spec;
        spec.field = F;
        spec.f = {random_squarefree(F, rng), random_squarefree(F, rng)};
        try {
            auto base = CharacterLattice::build(spec);
            unsigned g = base.genus();
            auto N = base.count_rational_places().N;

            CompositumSpec perm{F, {spec.f[1], spec.f[0]}};
            auto pl = CharacterLattice::build(perm);
            CHECK(pl.genus() == g);
            CHECK(pl.count_rational_places().N == N);

            CompositumSpec basis{F, {spec.f[0], spec.f[0] * spec.f[1]}};
            auto bl = CharacterLattice::build(basis);
            CHECK(bl.genus() == g);
            CHECK(bl.count_rational_places().N == N);

            RationalFunction u(Polynomial(F, {1, 2}), Polynomial(F, {3, 1}));
            CompositumSpec scal{F, {spec.f[0] * u * u, spec.f[1]}};
            auto sl = CharacterLattice::build(scal);
            CHECK(sl.genus() == g);
            CHECK(sl.count_rational_places().N == N);
            ++done;
        } catch (const NotDisjoint&) {
        } catch (const DegenerateExtension&) {
        }
    }

    // basis change + shift, characteristic 2
    done = 0;
    while (done < 20) {
        auto F = GaloisField::of_size(4);
        CompositumSpec spec;
        spec.field = F;
        auto rnd_rf = [&]() {
            std::vector<unsigned> a(1 + rng() % 5), b(1 + rng() % 3);
            for (auto& v : a) v = static_cast<unsigned>(rng() % 4);
            for (auto& v : b) v = static_cast<unsigned>(rng() % 4);
            Polynomial num(F, std::move(a)), den(F, std::move(b));
            if (num.is_zero() || den.is_zero()) return RationalFunction::zero(F);
            return RationalFunction(num, den);
        };
        spec.f = {rnd_rf(), rnd_rf()};
        if (spec.f[0].is_zero() || spec.f[1].is_zero()) continue;
        try {
            auto base = CharacterLattice::build(spec);
            unsigned g = base.genus();
            auto N = base.count_rational_places().N;

            CompositumSpec basis{F, {spec.f[0], spec.f[0] + spec.f[1]}};
            auto bl = CharacterLattice::build(basis);
            CHECK(bl.genus() == g);
            CHECK(bl.count_rational_places().N == N);

            RationalFunction z(Polynomial(F, {2, 3}), Polynomial(F, {1, 1}));
            CompositumSpec shift{F, {spec.f[0] + z * z + z, spec.f[1]}};
            auto sl = CharacterLattice::build(shift);
            CHECK(sl.genus() == g);
            CHECK(sl.count_rational_places().N == N);
            ++done;
        } catch (const NotDisjoint&) {
        } catch (const DegenerateExtension&) {
        }
    }
}

TEST_CASE("brute force oracle on random instances") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 40) {
        unsigned q = (rng() % 2) ? 4u : 8u;
        auto F = GaloisField::of_size(q);
        CompositumSpec spec;
        spec.field = F;
        unsigned n = 1 + static_cast<unsigned>(rng() % 2);
        for (unsigned i = 0; i < n; ++i) {
            std::vector<unsigned> a(1 + rng() % 5), b(1 + rng() % 3);
            for (auto& v : a) v = static_cast<unsigned>(rng() % q);
            for (auto& v : b) v = static_cast<unsigned>(rng() % q);
            Polynomial num(F, std::move(a)), den(F, std::move(b));
            if (num.is_zero() || den.is_zero()) {
                num = Polynomial::x(F);
                den = Polynomial::one(F);
            }
            spec.f.emplace_back(num, den);
        }
        try {
            auto lat = CharacterLattice::build(spec);
            auto count = lat.count_rational_places();
            CHECK(brute_force_affine_count(spec) == CharacterLattice::affine_total(count));
            // Serre bound sanity
            unsigned g = lat.genus();
            unsigned s = 2;
            while ((s + 1) * (s + 1) <= 4 * q) ++s;  // floor(2 sqrt q)
            CHECK(count.N <= q + 1 + static_cast<std::uint64_t>(g) * s);
            ++done;
        } catch (const NotDisjoint&) {
        } catch (const DegenerateExtension&) {
        }
    }
}

TEST_CASE("four generators end to end") {
    auto F2 = GaloisField::of_size(2);
    auto spec = spec_of(F2, {"x+x/(x^2+x+1)", "x+1+(x+1)/(x^2+x+1)", "x^3+x",
                             "x*(x+1)/(x^3+x+1)"});
    auto lat = CharacterLattice::build(spec);
    CHECK(lat.size() == 15);
    CHECK(lat.genus() == 53);
    CHECK(lat.count_rational_places().N == 32);
    CHECK_THROWS_AS(CharacterLattice::build(spec, 3), DomainError);  // cap enforced
}
