#include "bss/policies.hpp"

#include <algorithm>
#include <stdexcept>

namespace bss {

namespace {

std::int64_t narrow(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(what);
    return static_cast<std::int64_t>(v);
}

} // namespace

RationalKey key_wastar(Cost g, Cost h, const Rational& w) {
    __int128 num = static_cast<__int128>(g) * w.den() + static_cast<__int128>(w.num()) * h;
    return Rational::raw(narrow(num, "key_wastar overflow"), w.den());
}

RationalKey key_wmm(Cost g, Cost h, const Rational& w) {
    __int128 gd = static_cast<__int128>(g) * w.den();
    __int128 wh = static_cast<__int128>(w.num()) * h;
    __int128 num = gd + std::max(gd, wh);
    return Rational::raw(narrow(num, "key_wmm overflow"), w.den());
}

RationalKey key_wbae(Cost g, Cost hSame, Cost hOpp, const Rational& w, const Rational& lambda) {
    __int128 den = static_cast<__int128>(w.den()) * lambda.den();
    __int128 num = static_cast<__int128>(g) * den +
                   static_cast<__int128>(w.num()) * lambda.den() * hSame +
                   static_cast<__int128>(lambda.num()) * w.den() * (g - hOpp);
    return Rational::raw(narrow(num, "key_wbae overflow"), narrow(den, "key_wbae overflow"));
}

KeyCalc::KeyCalc(Algorithm alg, const Rational& w, const Rational& lambda)
    : alg_(alg), wn_(w.num()), wd_(w.den()), ln_(lambda.num()), ld_(lambda.den()) {
    den_ = alg == Algorithm::WBAE ? checked_mul(wd_, ld_) : wd_;
}

RationalKey KeyCalc::operator()(Cost g, Cost hSame, Cost hOpp) const {
    switch (alg_) {
        case Algorithm::WBAE: {
            __int128 num = static_cast<__int128>(g) * den_ +
                           static_cast<__int128>(wn_) * ld_ * hSame +
                           static_cast<__int128>(ln_) * wd_ * (g - hOpp);
            return Rational::raw(narrow(num, "priority key overflow"), den_);
        }
        case Algorithm::WMM: {
            __int128 gd = static_cast<__int128>(g) * den_;
            __int128 wh = static_cast<__int128>(wn_) * hSame;
            return Rational::raw(narrow(gd + std::max(gd, wh), "priority key overflow"), den_);
        }
        default: {
            __int128 num = static_cast<__int128>(g) * den_ + static_cast<__int128>(wn_) * hSame;
            return Rational::raw(narrow(num, "priority key overflow"), den_);
        }
    }
}

RationalKey lower_bound(Algorithm alg, const BoundState& bs, const SearchConfig& cfg) {
    (void)cfg;
    const DirBound& f = bs.forward;
    const DirBound& b = bs.backward;
    switch (alg) {
        case Algorithm::WAstar:
            return f.weighted_min;
        case Algorithm::BWA:
        case Algorithm::WBS:
            return rational_max(f.weighted_min, b.weighted_min);
        case Algorithm::WMM:
            return rational_min(f.weighted_min, b.weighted_min);
        case Algorithm::WBAE:
            return (f.weighted_min + b.weighted_min).half();
    }
    throw std::logic_error("lower_bound: unknown algorithm");
}

RationalKey alb_bound(Algorithm alg, const BoundState& bs, const SearchConfig& cfg) {
    const DirBound& f = bs.forward;
    const DirBound& b = bs.backward;
    if (!f.aux_valid || (alg != Algorithm::WAstar && !b.aux_valid))
        throw std::logic_error("alb_bound: auxiliary minima not tracked");
    const Rational& w = cfg.weight;
    switch (alg) {
        case Algorithm::WAstar:
            return w * Rational(f.f_min);
        case Algorithm::BWA:
        case Algorithm::WBS:
            return w * Rational(std::max(f.f_min, b.f_min));
        case Algorithm::WMM: {
            Cost gsum = checked_add(checked_add(f.g_min, b.g_min), cfg.epsilon);
            Cost m = std::max({std::min(f.mm_min, b.mm_min), f.f_min, b.f_min, gsum});
            return w * Rational(m);
        }
        case Algorithm::WBAE:
            return w * Rational(checked_add(f.b_min, b.b_min), 2);
    }
    throw std::logic_error("alb_bound: unknown algorithm");
}

RationalKey gcd_round(const RationalKey& lb, Cost iota, const Rational& w) {
    return lb.ceil_to_multiple(Rational(iota) * w);
}

RationalKey compute_bound(Algorithm alg, const BoundState& bs, const SearchConfig& cfg) {
    RationalKey lb = lower_bound(alg, bs, cfg);
    if (cfg.bound_variant == BoundVariant::Alb || cfg.bound_variant == BoundVariant::AlbGcd)
        lb = rational_max(lb, alb_bound(alg, bs, cfg));
    if (cfg.bound_variant == BoundVariant::Gcd || cfg.bound_variant == BoundVariant::AlbGcd)
        lb = gcd_round(lb, cfg.iota, cfg.weight);
    return lb;
}

Dir choose_direction(DirectionPolicy policy, Dir last_direction,
                     std::size_t open_count_f, std::size_t open_count_b,
                     const RationalKey& weighted_min_f, const RationalKey& weighted_min_b) {
    switch (policy) {
        case DirectionPolicy::Alternate:
            return opposite(last_direction);
        case DirectionPolicy::Cardinality:
            return open_count_b < open_count_f ? Dir::B : Dir::F;
        case DirectionPolicy::GlobalMin:
            return weighted_min_b < weighted_min_f ? Dir::B : Dir::F;
    }
    throw std::logic_error("choose_direction: unknown policy");
}

bool wbs_prune(const RationalKey& succ_key, bool u_valid, Cost u, bool opp_closed) {
    if (opp_closed) return true;
    return u_valid && !(succ_key < Rational(u));
}

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::WAstar: return "wastar";
        case Algorithm::BWA: return "bwa";
        case Algorithm::WBS: return "wbs";
        case Algorithm::WMM: return "wmm";
        case Algorithm::WBAE: return "wbae";
    }
    return "?";
}

const char* to_string(BoundVariant v) {
    switch (v) {
        case BoundVariant::Base: return "base";
        case BoundVariant::Gcd: return "gcd";
        case BoundVariant::Alb: return "alb";
        case BoundVariant::AlbGcd: return "alb-gcd";
    }
    return "?";
}

const char* to_string(DirectionPolicy p) {
    switch (p) {
        case DirectionPolicy::Alternate: return "alternate";
        case DirectionPolicy::Cardinality: return "cardinality";
        case DirectionPolicy::GlobalMin: return "global-min";
    }
    return "?";
}

const char* to_string(LambdaSpec s) {
    switch (s) {
        case LambdaSpec::Zero: return "0";
        case LambdaSpec::InvW2: return "1/W^2";
        case LambdaSpec::InvW: return "1/W";
        case LambdaSpec::One: return "1";
        case LambdaSpec::W: return "W";
        case LambdaSpec::Value: return "value";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& s) {
    if (s == "wastar" || s == "wa*" || s == "wa") return Algorithm::WAstar;
    if (s == "bwa" || s == "bwa*") return Algorithm::BWA;
    if (s == "wbs" || s == "wbs*") return Algorithm::WBS;
    if (s == "wmm") return Algorithm::WMM;
    if (s == "wbae" || s == "wbae*") return Algorithm::WBAE;
    throw std::invalid_argument("unknown algorithm: " + s);
}

BoundVariant parse_bound_variant(const std::string& s) {
    if (s == "base") return BoundVariant::Base;
    if (s == "gcd") return BoundVariant::Gcd;
    if (s == "alb") return BoundVariant::Alb;
    if (s == "alb-gcd" || s == "albgcd") return BoundVariant::AlbGcd;
    throw std::invalid_argument("unknown bound variant: " + s);
}

} // namespace bss
