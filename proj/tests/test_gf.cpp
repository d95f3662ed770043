#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "quadext/gf.hpp"

using namespace quadext;

TEST_CASE("prime fields") {
    auto f2 = GaloisField::make(2, 1);
    CHECK(f2->size() == 2);
    CHECK(f2->generator_value() == 1);
    CHECK(f2->primitive_element_values() == std::vector<unsigned>{1});
    CHECK(f2->trace(1) == 1);

    auto f3 = GaloisField::make(3, 1);
    CHECK(f3->generator_value() == 2);
    CHECK(f3->add(2, 2) == 1);  // 2 + 2 = 1 mod 3
    CHECK_FALSE(f3->is_square(2));
    CHECK(f3->is_square(1));
    CHECK_THROWS_AS(f3->sqrt(2), DomainError);
}

TEST_CASE("F4 structure") {
    auto f4 = GaloisField::make(2, 2);
    // only irreducible quadratic over F_2
    CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});
    unsigned w = f4->generator_value();
    CHECK(f4->mul(w, w) == f4->add(w, 1));  // w^2 = w + 1
    CHECK(f4->pow(w, 3) == 1);
    CHECK(f4->trace(w) == 1);
    CHECK(f4->trace(1) == 0);
    // sqrt(w) = w^2 = w+1 in characteristic 2
    CHECK(f4->sqrt(w) == f4->add(w, 1));
    CHECK(f4->primitive_element_values().size() == 2);  // phi(3)
}

TEST_CASE("F8 and F9") {
    auto f8 = GaloisField::make(2, 3);
    CHECK(f8->primitive_element_values().size() == 6);  // phi(7)
    unsigned w = f8->generator_value();
    // default modulus is x^3 + x + 1, so w^3 = w + 1
    CHECK(f8->modulus() == std::vector<unsigned>{1, 1, 0, 1});
    CHECK(f8->pow(w, 3) == f8->add(w, 1));

    auto f9 = GaloisField::make(3, 2);
    unsigned w9 = f9->generator_value();
    CHECK(f9->multiplicative_order(w9) == 8);
    CHECK_FALSE(f9->is_square(w9));  // a generator is never a square for odd q

    // explicit non-primitive modulus: x^2 + 1 has root of order 4
    auto f9i = GaloisField::make(3, 2, std::vector<unsigned>{1, 0, 1});
    CHECK_FALSE(f9i->generator_is_root());
    CHECK(f9i->multiplicative_order(f9i->generator_value()) == 8);
    // i + 1 (packed 4) is the least primitive element
    CHECK(f9i->generator_value() == 4);

    // spec example field: modulus x^2+2x+2, w*w = w+1
    auto f9b = GaloisField::make(3, 2, std::vector<unsigned>{2, 2, 1});
    unsigned wb = f9b->generator_value();
    CHECK(f9b->mul(wb, wb) == f9b->add(wb, 1));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(GaloisField::make(2, 0), DomainError);
    CHECK_THROWS_AS(GaloisField::make(5, 1), DomainError);
    // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(GaloisField::make(2, 2, std::vector<unsigned>{1, 0, 1}), DomainError);
    CHECK_THROWS_AS(GaloisField::make(2, 2, std::vector<unsigned>{1, 1}), DomainError);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(42);
    for (unsigned q : {4u, 8u, 16u, 32u, 64u, 128u, 9u, 27u, 81u}) {
        auto F = GaloisField::of_size(q);
        for (int t = 0; t < 200; ++t) {
            unsigned a = rng() % q, b = rng() % q, c = rng() % q;
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, b) == F->mul(b, a));
            CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            // Frobenius is additive and multiplicative
            unsigned p = F->characteristic();
            CHECK(F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p)));
            CHECK(F->pow(F->mul(a, b), p) == F->mul(F->pow(a, p), F->pow(b, p)));
            if (b != 0) CHECK(F->mul(F->div(a, b), b) == a);
        }
        // generator order is exactly q-1: no proper divisor works
        unsigned g = F->generator_value();
        for (unsigned d = 1; d < q - 1; ++d)
            if ((q - 1) % d == 0) CHECK(F->pow(g, d) != 1);
        CHECK(F->pow(g, q - 1) == 1);
    }
}

TEST_CASE("trace is F_p-linear and balanced") {
    for (unsigned q : {2u, 4u, 8u, 16u, 32u, 64u, 128u, 3u, 9u, 27u, 81u}) {
        auto F = GaloisField::of_size(q);
        unsigned p = F->characteristic();
        std::vector<unsigned> counts(p, 0);
        for (unsigned a = 0; a < q; ++a) {
            counts[F->trace(a)]++;
            CHECK(F->trace(a) < p);
            for (unsigned b = 0; b < std::min(q, 16u); ++b)
                CHECK(F->trace(F->add(a, b)) == F->add(F->trace(a), F->trace(b)));
        }
        for (unsigned v = 0; v < p; ++v) CHECK(counts[v] == q / p);
    }
}

TEST_CASE("squares in odd characteristic") {
    for (unsigned q : {3u, 9u, 27u, 81u}) {
        auto F = GaloisField::of_size(q);
        unsigned nsq = 0;
        for (unsigned a = 1; a < q; ++a) {
            if (F->is_square(a)) {
                ++nsq;
                unsigned s = F->sqrt(a);
                CHECK(F->mul(s, s) == a);
            } else {
                CHECK(F->pow(a, (q - 1) / 2) != 1);
            }
        }
        CHECK(nsq == (q - 1) / 2);
    }
    // char 2: everything is a square
    for (unsigned q : {4u, 64u}) {
        auto F = GaloisField::of_size(q);
        for (unsigned a = 0; a < q; ++a) {
            unsigned s = F->sqrt(a);
            CHECK(F->mul(s, s) == a);
        }
    }
}

TEST_CASE("element wrapper") {
    auto f4 = GaloisField::make(2, 2);
    auto f2 = GaloisField::make(2, 1);
    FieldElement w = f4->generator();
    CHECK((w * w).value() == f4->add(w.value(), 1));
    CHECK((w + w).is_zero());
    CHECK_THROWS_AS(w + f2->one(), DomainError);
    CHECK_THROWS_AS(w / f4->zero(), DomainError);
    CHECK(w.str() == "w");
    CHECK((w * w).str() == "w^2");
    CHECK(f4->describe() == "GF(2^2; modulus=1,1,1; w=0,1)");
}
