#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bss/policies.hpp"

using namespace bss;

TEST_CASE("key_wastar") {
    CHECK(key_wastar(0, 0, Rational(5)) == Rational(0));
    CHECK(key_wastar(3, 4, Rational(2)) == Rational(11));
    CHECK(key_wastar(3, 4, Rational(11, 10)) == Rational(74, 10));
    CHECK(key_bwa(0, 0, Rational(2)) == Rational(0));
    CHECK(key_bwa(5, 0, Rational(10)) == Rational(5));
    CHECK(key_bwa(2, 3, Rational(3, 2)) == Rational(13, 2));
}

TEST_CASE("key_wmm") {
    CHECK(key_wmm(4, 1, Rational(2)) == Rational(8));
    CHECK(key_wmm(1, 4, Rational(2)) == Rational(9));
    CHECK(key_wmm(0, 0, Rational(5)) == Rational(0));
}

TEST_CASE("key_wbae") {
    CHECK(key_wbae(3, 4, 2, Rational(2), Rational(2)) == Rational(13));
    CHECK(key_wbae(3, 4, 2, Rational(2), Rational(0)) == key_bwa(3, 4, Rational(2)));
    CHECK(key_wbae(5, 0, 5, Rational(1), Rational(1)) == Rational(5));
}

TEST_CASE("KeyCalc matches the free functions") {
    std::mt19937_64 rng(7);
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    for (int i = 0; i < 2000; ++i) {
        Cost g = draw(0, 300);
        Cost h = draw(0, 300);
        Cost ho = draw(0, g > 0 ? g : 0);
        Rational w(draw(1, 40), draw(1, 4));
        if (w < Rational(1)) w = Rational(1) / w;
        Rational lambda(draw(0, w.num()), w.den() * draw(1, 5));
        if (w < lambda) lambda = w;
        CHECK(KeyCalc(Algorithm::WAstar, w, lambda)(g, h, ho) == key_wastar(g, h, w));
        CHECK(KeyCalc(Algorithm::WMM, w, lambda)(g, h, ho) == key_wmm(g, h, w));
        CHECK(KeyCalc(Algorithm::WBAE, w, lambda)(g, h, ho) == key_wbae(g, h, ho, w, lambda));
    }
}

TEST_CASE("algorithm reductions hold on random tuples") {
    std::mt19937_64 rng(13);
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    for (int i = 0; i < 5000; ++i) {
        Cost g = draw(0, 200);
        Cost h = draw(0, 200);
        Cost ho = draw(0, 200);
        Rational w(draw(10, 100), 10);
        // lambda = 0 reduces WBAE* to BWA*
        CHECK(key_wbae(g, h, ho, w, Rational(0)) == key_bwa(g, h, w));
        // W = 1, lambda = 1 is the unweighted error-corrected priority
        CHECK(key_wbae(g, h, ho, Rational(1), Rational(1)) == Rational(g + h + (g - ho)));
        // g + max(g, h) = max(f, 2g) at W = 1
        CHECK(key_wmm(g, h, Rational(1)) == Rational(std::max(g + h, 2 * g)));
    }
}

TEST_CASE("priority inflation bound over admissible inputs") {
    // key_wbae(g,h,hOpp,W,lambda) <= W*(g+h+(g-hOpp)) whenever
    // g >= hOpp >= 0 and 0 <= lambda <= W, W >= 1.
    std::mt19937_64 rng(17);
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    for (int i = 0; i < 20000; ++i) {
        Cost g = draw(0, 500);
        Cost ho = draw(0, static_cast<int>(g));
        Cost h = draw(0, 500);
        Rational w(draw(10, 1000), draw(10, 100));
        if (w < Rational(1)) w = Rational(1) / w;
        Rational lambda(draw(0, 1000), 1000);
        lambda = lambda * w;   // spans [0, W]
        Rational lhs = key_wbae(g, h, ho, w, lambda);
        Rational rhs = w * Rational(g + h + (g - ho));
        CHECK(!(rhs < lhs));
    }
}

TEST_CASE("key_wbae is monotone in lambda for d >= 0") {
    std::mt19937_64 rng(23);
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    for (int i = 0; i < 5000; ++i) {
        Cost g = draw(0, 100);
        Cost ho = draw(0, static_cast<int>(g));
        Cost h = draw(0, 100);
        Rational w(draw(10, 50), 10);
        Rational l1(draw(0, 100), 100);
        Rational l2 = l1 + Rational(draw(0, 100), 100);
        l1 = l1 * w;
        l2 = rational_min(l2 * w, w);
        if (l2 < l1) std::swap(l1, l2);
        CHECK(!(key_wbae(g, h, ho, w, l2) < key_wbae(g, h, ho, w, l1)));
    }
}

TEST_CASE("lower_bound per algorithm") {
    SearchConfig cfg;
    BoundState bs;
    bs.forward.open_nonempty = bs.backward.open_nonempty = true;

    // Values reported for the worked example: a lower bound of
    // (6.07 + 4.21)/2 = 5.14 and of (5.52 + 4.07)/2 = 4.795.
    bs.forward.weighted_min = Rational(421, 100);
    bs.backward.weighted_min = Rational(607, 100);
    CHECK(lower_bound(Algorithm::WBAE, bs, cfg) == Rational(514, 100));

    bs.forward.weighted_min = Rational(552, 100);
    bs.backward.weighted_min = Rational(407, 100);
    CHECK(lower_bound(Algorithm::WBAE, bs, cfg) == Rational(4795, 1000));

    bs.forward.weighted_min = Rational(0);
    bs.backward.weighted_min = Rational(0);
    CHECK(lower_bound(Algorithm::BWA, bs, cfg) == Rational(0));

    bs.forward.weighted_min = Rational(7);
    bs.backward.weighted_min = Rational(5);
    CHECK(lower_bound(Algorithm::BWA, bs, cfg) == Rational(7));
    CHECK(lower_bound(Algorithm::WBS, bs, cfg) == Rational(7));
    CHECK(lower_bound(Algorithm::WMM, bs, cfg) == Rational(5));
    CHECK(lower_bound(Algorithm::WAstar, bs, cfg) == Rational(7));
}

TEST_CASE("gcd_round") {
    CHECK(gcd_round(Rational(14), 3, Rational(1)) == Rational(15));
    CHECK(gcd_round(Rational(12), 3, Rational(1)) == Rational(12));
    CHECK(gcd_round(Rational(103, 10), 1, Rational(2)) == Rational(12));
}

TEST_CASE("gcd rounding never crosses W*C* when C* is a multiple of iota") {
    std::mt19937_64 rng(29);
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    for (int i = 0; i < 20000; ++i) {
        Cost iota = draw(1, 6);
        Cost cstar = iota * draw(0, 40);
        Rational w(draw(10, 100), 10);
        Rational cap = w * Rational(cstar);
        // random lb in [0, W*C*]
        Rational lb = cap * Rational(draw(0, 1000), 1000);
        REQUIRE(!(cap < lb));
        CHECK(!(cap < gcd_round(lb, iota, w)));
    }
}

TEST_CASE("alb_bound per algorithm") {
    SearchConfig cfg;
    BoundState bs;
    bs.forward.open_nonempty = bs.backward.open_nonempty = true;
    bs.forward.aux_valid = bs.backward.aux_valid = true;

    cfg.weight = Rational(2);
    bs.forward.f_min = 10;
    CHECK(alb_bound(Algorithm::WAstar, bs, cfg) == Rational(20));

    cfg.weight = Rational(1);
    bs.forward.b_min = 4;
    bs.backward.b_min = 6;
    CHECK(alb_bound(Algorithm::WBAE, bs, cfg) == Rational(5));

    cfg.weight = Rational(3, 2);
    bs.forward.f_min = 7;
    bs.backward.f_min = 5;
    CHECK(alb_bound(Algorithm::BWA, bs, cfg) == Rational(21, 2));

    cfg.weight = Rational(2);
    cfg.epsilon = 1;
    bs.forward.f_min = 4;
    bs.backward.f_min = 5;
    bs.forward.g_min = 2;
    bs.backward.g_min = 3;
    bs.forward.mm_min = 7;
    bs.backward.mm_min = 8;
    // max(min(7,8), 4, 5, 2+3+1) = 7
    CHECK(alb_bound(Algorithm::WMM, bs, cfg) == Rational(14));

    bs.forward.aux_valid = false;
    CHECK_THROWS_AS(alb_bound(Algorithm::BWA, bs, cfg), std::logic_error);
}

TEST_CASE("compute_bound composes ALB and GCD") {
    SearchConfig cfg;
    cfg.weight = Rational(2);
    cfg.iota = 1;
    BoundState bs;
    bs.forward.open_nonempty = bs.backward.open_nonempty = true;
    bs.forward.aux_valid = bs.backward.aux_valid = true;
    bs.forward.weighted_min = Rational(7, 2);
    bs.backward.weighted_min = Rational(5, 2);
    bs.forward.f_min = 3;
    bs.backward.f_min = 2;

    cfg.algorithm = Algorithm::BWA;
    cfg.bound_variant = BoundVariant::Base;
    CHECK(compute_bound(Algorithm::BWA, bs, cfg) == Rational(7, 2));
    cfg.bound_variant = BoundVariant::Gcd;
    CHECK(compute_bound(Algorithm::BWA, bs, cfg) == Rational(4));   // ceil(3.5 / 2) * 2
    cfg.bound_variant = BoundVariant::Alb;
    CHECK(compute_bound(Algorithm::BWA, bs, cfg) == Rational(6));   // max(3.5, 2*3)
    cfg.bound_variant = BoundVariant::AlbGcd;
    CHECK(compute_bound(Algorithm::BWA, bs, cfg) == Rational(6));
}

TEST_CASE("choose_direction") {
    RationalKey kf(4), kb(3);
    CHECK(choose_direction(DirectionPolicy::Alternate, Dir::F, 1, 1, kf, kb) == Dir::B);
    CHECK(choose_direction(DirectionPolicy::Alternate, Dir::B, 1, 1, kf, kb) == Dir::F);
    CHECK(choose_direction(DirectionPolicy::Cardinality, Dir::F, 3, 5, kf, kb) == Dir::F);
    CHECK(choose_direction(DirectionPolicy::Cardinality, Dir::F, 5, 3, kf, kb) == Dir::B);
    CHECK(choose_direction(DirectionPolicy::Cardinality, Dir::F, 4, 4, kf, kb) == Dir::F);
    CHECK(choose_direction(DirectionPolicy::GlobalMin, Dir::F, 1, 1, kf, kb) == Dir::B);
    CHECK(choose_direction(DirectionPolicy::GlobalMin, Dir::F, 1, 1, kb, kf) == Dir::F);
    CHECK(choose_direction(DirectionPolicy::GlobalMin, Dir::F, 1, 1, kf, kf) == Dir::F);
}

TEST_CASE("wbs_prune") {
    CHECK(wbs_prune(Rational(1), false, 0, true));          // nipping
    CHECK(wbs_prune(Rational(9), true, 9, false));          // trimming at equality
    CHECK_FALSE(wbs_prune(Rational(8), true, 9, false));
    CHECK_FALSE(wbs_prune(Rational(100), false, 0, false)); // no incumbent yet
}

TEST_CASE("config validation") {
    SearchConfig cfg = make_config(Algorithm::WBAE, Rational(2), Rational(1));
    CHECK_NOTHROW(cfg.validate());
    cfg.lambda = Rational(3);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.lambda = Rational(0);
    cfg.weight = Rational(1, 2);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("lambda presets resolve against W") {
    Rational w(3, 2);
    CHECK(resolve_lambda(LambdaSpec::Zero, w) == Rational(0));
    CHECK(resolve_lambda(LambdaSpec::InvW2, w) == Rational(4, 9));
    CHECK(resolve_lambda(LambdaSpec::InvW, w) == Rational(2, 3));
    CHECK(resolve_lambda(LambdaSpec::One, w) == Rational(1));
    CHECK(resolve_lambda(LambdaSpec::W, w) == w);
    for (LambdaSpec s : {LambdaSpec::Zero, LambdaSpec::InvW2, LambdaSpec::InvW,
                         LambdaSpec::One, LambdaSpec::W})
        CHECK(!(w < resolve_lambda(s, w)));
}
