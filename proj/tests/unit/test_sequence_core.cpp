#include <doctest.h>

#include "lucas/errors.hpp"
#include "lucas/sequence_core.hpp"
#include "test_support.hpp"

using namespace lucas;
using lucas::testing::naive_terms;

TEST_CASE("make_params classifies branch and discriminant") {
    const auto fib = make_params(1, -1);
    CHECK(fib.branch() == Branch::PMinusQIsNotOne);
    CHECK(fib.delta() == 5);
    CHECK_FALSE(fib.is_degenerate());

    CHECK(make_params(2, 1).degeneracy() == Degeneracy::ZeroDiscriminant);

    const auto mersenne = make_params(3, 2);
    CHECK(mersenne.branch() == Branch::PMinusQIsOne);
    CHECK(mersenne.delta() == 1);
    CHECK_FALSE(mersenne.is_degenerate());
}

TEST_CASE("the small excluded pairs are degenerate") {
    for (auto [p, q] : {std::pair{2, 1}, {-2, 1}, {1, 1}, {-1, 1}, {0, 1}, {0, -1}, {1, 0}, {-1, 0}}) {
        CAPTURE(p);
        CAPTURE(q);
        CHECK(make_params(p, q).is_degenerate());
    }
    CHECK(make_params(0, 5).degeneracy() == Degeneracy::PIsZero);
    CHECK(make_params(2, 4).degeneracy() == Degeneracy::PSquaredIsQ);
    CHECK(make_params(2, 2).degeneracy() == Degeneracy::PSquaredIsTwoQ);
    CHECK(make_params(3, 3).degeneracy() == Degeneracy::PSquaredIsThreeQ);
    CHECK(make_params(4, 0).degeneracy() == Degeneracy::QIsZero);
    CHECK_FALSE(make_params(2, -1).is_degenerate());
    CHECK_FALSE(make_params(6, 1).is_degenerate());
}

TEST_CASE("degenerate pairs have a root ratio of finite order") {
    // alpha/beta is a root of unity iff alpha^k = beta^k for some k <= 6,
    // i.e. U_k = 0 for some 1 <= k <= 6 (or q = 0).
    for (int p = -10; p <= 10; ++p) {
        for (int q = -10; q <= 10; ++q) {
            const auto u = naive_terms(p, q, false, 13);
            bool torsion = q == 0;
            for (int k = 1; k <= 12; ++k) {
                torsion = torsion || u[k] == 0;
            }
            // p^2 = 4q gives alpha = beta: U_n = n (p/2)^{n-1} never vanishes, check separately.
            torsion = torsion || p * p == 4 * q;
            CAPTURE(p);
            CAPTURE(q);
            CHECK(make_params(p, q).is_degenerate() == torsion);
        }
    }
}

TEST_CASE("term examples") {
    CHECK(term_iter(make_params(1, -1), Kind::First, 9) == 34);
    CHECK(term_iter(make_params(6, 1), Kind::Second, 4) == 1154);
    CHECK(term_fast(make_params(2, -1), Kind::First, 8) == 408);
    CHECK(term_fast(make_params(1, -2), Kind::Second, 6) == 65);
    CHECK(term_binet(make_params(1, -1), Kind::First, 5) == 5);
    CHECK(term_binet(make_params(3, 2), Kind::Second, 1) == 3);
    CHECK(term_binet(make_params(6, 1), Kind::First, 7) == 40391);
    CHECK(binet_special_pq1(make_params(3, 2), Kind::First, 5) == 31);
    CHECK(binet_special_pq1(make_params(3, 2), Kind::Second, 9) == 513);
    CHECK(binet_special_pq1(make_params(2, 1), Kind::First, 7) == 7);
    CHECK(term_fast(make_params(1, -1), Kind::First, 200) ==
          term_iter(make_params(1, -1), Kind::First, 200));
    for (int p = -3; p <= 3; ++p) {
        for (int q = -3; q <= 3; ++q) {
            CHECK(term_iter(make_params(p, q), Kind::First, 0) == 0);
            CHECK(term_fast(make_params(p, q), Kind::Second, 0) == 2);
        }
    }
}

TEST_CASE("iter and fast agree with the naive recurrence on every pair") {
    for (int p = -10; p <= 10; ++p) {
        for (int q = -10; q <= 10; ++q) {
            const auto params = make_params(p, q);
            for (Kind kind : {Kind::First, Kind::Second}) {
                const auto ref = naive_terms(p, q, kind == Kind::Second, 121);
                CHECK(terms_iter(params, kind, 121) == ref);
                for (Index n = 0; n <= 120; n += 7) {
                    CHECK(term_fast(params, kind, n) == ref[n]);
                }
            }
        }
    }
}

TEST_CASE("binet agrees with the recurrence on nondegenerate pairs") {
    for (int p = -10; p <= 10; ++p) {
        for (int q = -10; q <= 10; ++q) {
            const auto params = make_params(p, q);
            if (params.is_degenerate()) {
                CHECK_THROWS_AS(term_binet(params, Kind::First, 3), UnsupportedCase);
                continue;
            }
            for (Kind kind : {Kind::First, Kind::Second}) {
                const auto ref = naive_terms(p, q, kind == Kind::Second, 61);
                for (Index n = 0; n <= 60; ++n) {
                    CHECK(term_binet(params, kind, n) == ref[n]);
                }
            }
        }
    }
}

TEST_CASE("geometric evaluation on the p - q = 1 line") {
    for (int q = -10; q <= 10; ++q) {
        const auto params = make_params(q + 1, q);
        for (Kind kind : {Kind::First, Kind::Second}) {
            const auto ref = naive_terms(q + 1, q, kind == Kind::Second, 41);
            for (Index n = 0; n <= 40; ++n) {
                CHECK(binet_special_pq1(params, kind, n) == ref[n]);
            }
        }
    }
    CHECK_THROWS_AS(binet_special_pq1(make_params(1, -1), Kind::First, 3), UnsupportedCase);
}

TEST_CASE("V_n^2 - delta U_n^2 = 4 q^n") {
    for (int p = -6; p <= 6; ++p) {
        for (int q = -6; q <= 6; ++q) {
            const auto params = make_params(p, q);
            for (Index n = 0; n <= 80; n += 5) {
                const LucasState s = state_at(params, n);
                CHECK(s.v * s.v - params.delta() * s.u * s.u == 4 * s.q_pow);
            }
        }
    }
}

TEST_CASE("advance, combine and windows") {
    const auto params = make_params(5, -3);
    LucasState s = initial_state();
    for (Index n = 0; n < 50; ++n) {
        const LucasState direct = state_at(params, n);
        CHECK(s.index == n);
        CHECK(s.u == direct.u);
        CHECK(s.v == direct.v);
        CHECK(s.q_pow == direct.q_pow);
        advance(params, s);
    }
    for (Index a = 0; a < 20; ++a) {
        for (Index b = 0; b < 20; ++b) {
            const LucasState c = combine(params, state_at(params, a), state_at(params, b));
            const LucasState d = state_at(params, a + b);
            CHECK(c.index == a + b);
            CHECK(c.u == d.u);
            CHECK(c.v == d.v);
            CHECK(c.q_pow == d.q_pow);
        }
    }
    CHECK_THROWS_AS(window_at(params, 0), PreconditionViolation);
    TermWindow w = window_at(params, 1);
    for (Index n = 1; n < 30; ++n) {
        CHECK(w.n() == n);
        CHECK(w.prev.u == term_iter(params, Kind::First, n - 1));
        CHECK(w.cur.v == term_iter(params, Kind::Second, n));
        CHECK(w.next.u == term_iter(params, Kind::First, n + 1));
        slide(params, w);
    }
}

TEST_CASE("kind parsing") {
    CHECK(parse_kind("U") == Kind::First);
    CHECK(parse_kind("v") == Kind::Second);
    CHECK(parse_kind("second") == Kind::Second);
    CHECK(to_string(Kind::First) == "U");
    CHECK_THROWS_AS(parse_kind("W"), PreconditionViolation);
}
