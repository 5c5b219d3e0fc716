#pragma once

// First-order expansion kernels for the fourth-order normal-form
// coefficients and the KAM determinant.
//
// The normal-form coefficients expand as
//   A = A11 + (A12 + A13 gamma) eps + (A14 + A15 gamma) a2 + (A16 + A17 gamma) w1
// (same pattern for B via b1x and C via c1x), and the KAM determinant as
//   D = d_classical(u^2) + (D2 + D3 gamma) eps + (D4 + D5 gamma) a2
//                        + (D6 + D7 gamma) w1.
//
// Every function here is a rational expression in the squared frequencies
// s1 = omega1^2, s2 = omega2^2 (some also need omega1, omega2, u = omega1
// omega2, or sqrt(3), which are passed in rather than computed so exact
// scalar types stay exact). Terms are accumulated with compensated
// summation; for exact field types the compensation is identically zero.
//
// These kernels do NOT guard their denominators. Callers are expected to
// run the named singular-factor checks first (see normal_form.hpp /
// kam.hpp); the kernels stay branch-free so they can be instantiated with
// exact rational scalar types in tests.

namespace tristab::kernels {

/// Kahan-compensated accumulator. Works for any field-like scalar; with
/// exact types the correction term is always zero.
template <class S>
class CompensatedSum {
public:
    void add(const S& term) {
        const S y = term - c_;
        const S t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    const S& value() const { return sum_; }

private:
    S sum_{};
    S c_{};
};

template <class S>
S a11(const S& s1) {
    CompensatedSum<S> num;
    num.add(S(-9) / S(8));
    num.add(S(259) / S(24) * s1);
    num.add(S(-205) / S(18) * s1 * s1);
    num.add(S(31) / S(18) * s1 * s1 * s1);
    const S m = S(-1) + S(2) * s1;
    return num.value() / (m * m * (S(-1) + S(5) * s1));
}

template <class S>
S a12(const S& s1) {
    CompensatedSum<S> num;
    num.add(S(1) / S(36));
    num.add(S(-13) / S(18) * s1);
    num.add(S(13) / S(27) * s1 * s1);
    num.add(S(167) / S(72) * s1 * s1 * s1);
    num.add(S(107) / S(108) * s1 * s1 * s1 * s1);
    const S m = S(1) - S(2) * s1;
    return num.value() / (m * m * (S(-1) + S(5) * s1));
}

/// The verbatim transcription carries the anomalous cubic coefficient
/// 8141559/32; the structurally symmetric alternative uses 407/16 (the
/// value appearing in the parallel c13 expression).
template <class S>
S a13(const S& s1, bool anomalous_cubic = true) {
    const S cubic =
        anomalous_cubic ? S(8141559) / S(32) : S(407) / S(16);
    CompensatedSum<S> num;
    num.add(S(1) / S(2));
    num.add(S(-421) / S(32) * s1);
    num.add(S(-19) / S(2) * s1 * s1);
    num.add(-cubic * s1 * s1 * s1);
    num.add(S(29) * s1 * s1 * s1 * s1);
    const S m = S(1) - S(2) * s1;
    const S f = S(-1) + S(5) * s1;
    return num.value() / (m * m * m * f * f);
}

template <class S>
S a14(const S& s1) {
    CompensatedSum<S> num;
    num.add(S(1319) / S(436));
    num.add(S(-12639) / S(436) * s1);
    num.add(S(14275) / S(436) * s1 * s1);
    num.add(S(-799) / S(218) * s1 * s1 * s1);
    const S m = S(1) - S(2) * s1;
    return num.value() / (m * m * (S(-1) + S(5) * s1));
}

template <class S>
S a15(const S& s1) {
    CompensatedSum<S> num;
    num.add(S(57) / S(52));
    num.add(S(-525) / S(52) * s1);
    num.add(S(-475) / S(26) * s1 * s1);
    num.add(S(1559) / S(26) * s1 * s1 * s1);
    num.add(S(283) / S(13) * s1 * s1 * s1 * s1);
    const S m = S(1) - S(2) * s1;
    const S f = S(-1) + S(5) * s1;
    return num.value() / (m * m * m * f * f);
}

template <class S>
S a16(const S& s1, const S& sqrt3) {
    const S m = S(-1) + S(2) * s1;
    const S q = S(9) + S(4) * s1;
    CompensatedSum<S> sum;
    sum.add(S(-2747) / S(10368) * s1 / m);
    sum.add(S(41) / S(9216) * q / (m * m));
    sum.add(S(-93899) / S(331776) * q / m);
    sum.add(S(12875) / S(82944) * s1 * q / (m * m));
    return sum.value() / sqrt3;
}

template <class S>
S a17(const S& w1, const S& s1, const S& s2, const S& sqrt3) {
    const S m = S(-1) + S(2) * s1;
    const S q = S(9) + S(4) * s1;
    CompensatedSum<S> sum;
    sum.add(S(-1337) / S(6144) / m);
    sum.add(S(779) / S(10368) * w1 * q / (m * m));
    sum.add(S(41) / S(18432) * q / (m * m));
    sum.add(S(-227347) / S(331776) * s1 * q / m);
    sum.add(S(-37259) / S(82944) * q / m);
    sum.add(S(6517) / S(3072) * s1 * q / (m * m * (S(4) * s1 - s2)));
    return sum.value() / sqrt3;
}

template <class S>
S b11(const S& s1, const S& s2, const S& u) {
    const S den = (S(1) - S(5) * s1) * (S(-1) + S(2) * s1) *
                  (S(1) - S(5) * s2) * (S(1) - S(2) * s2);
    CompensatedSum<S> sum;
    sum.add(S(43) / S(6) * u / den);
    sum.add(S(32) / S(3) * u * u * u / den);
    return sum.value();
}

template <class S>
S b12(const S& s1, const S& s2, const S& u) {
    const S den = (S(1) - S(5) * s1) * (S(1) - S(2) * s1) *
                  (S(1) - S(5) * s2) * (S(1) - S(2) * s2);
    const S q2 = S(9) + S(4) * s2;
    CompensatedSum<S> sum;
    sum.add(S(309) / S(8) * u / den);
    sum.add(S(5904) * u / ((S(-1) + S(2) * s1) * q2 * q2));
    sum.add(S(-407) / S(6) * u * u * u / den);
    return sum.value();
}

template <class S>
S b13(const S& s1, const S& s2, const S& u) {
    const S q2 = S(9) + S(4) * s2;
    const S cub1 =
        S(9) - S(59) * s1 + S(62) * s1 * s1 + S(40) * s1 * s1 * s1;
    const S cub2 =
        S(9) - S(59) * s2 + S(62) * s2 * s2 + S(40) * s2 * s2 * s2;
    const S u2 = u * u;
    CompensatedSum<S> poly;
    poly.add(S(10083));
    poly.add(S(-614070) * u2);
    poly.add(S(400800) * u2 * u2);
    poly.add(S(-3035216) * u2 * u2 * u2);
    poly.add(S(-260802) * u2 * u2 * u2 * u2);
    CompensatedSum<S> sum;
    sum.add(S(1800) * u / ((S(-1) + S(2) * s1) * q2 * q2));
    sum.add(poly.value() / (S(8) * u * cub1 * cub2));
    return sum.value();
}

template <class S>
S b14(const S& s1, const S& s2, const S& u) {
    const S den = (S(1) - S(5) * s1) * (S(1) - S(2) * s1) *
                  (S(1) - S(5) * s2) * (S(1) - S(2) * s2);
    CompensatedSum<S> sum;
    sum.add(S(247) / S(4) * u / den);
    sum.add(S(6817) / S(36) * u * u * u / den);
    return sum.value();
}

template <class S>
S b15(const S& s1, const S& s2, const S& u) {
    const S q2 = S(9) + S(4) * s2;
    const S f1 = S(-1) + S(5) * s1;
    const S f2 = S(-1) + S(5) * s2;
    const S g1 = S(-9) + S(14) * s1 + S(8) * s1 * s1;
    const S g2 = S(-9) - S(14) * s2 + S(8) * s2 * s2;
    const S u2 = u * u;
    CompensatedSum<S> poly;
    poly.add(S(-89211));
    poly.add(S(2042998) * u2);
    poly.add(S(1028577) * u2 * u2 * s1);
    poly.add(S(16052098) * u2 * u2 * u2);
    poly.add(S(1215804) * u2 * u2 * u2 * u2);
    CompensatedSum<S> sum;
    sum.add(S(1800) * u / ((S(-1) + S(2) * s1) * q2 * q2));
    sum.add(poly.value() / (S(32) * u * f1 * f1 * f2 * f2 * g1 * g2));
    return sum.value();
}

template <class S>
S b16(const S& s1, const S& s2, const S& u, const S& sqrt3) {
    const S q2 = S(9) + S(4) * s2;
    return S(1599) * sqrt3 * (S(9) + S(192) * u + s2) /
           (S(512) * u * (S(-1) + S(2) * s1) * q2 * q2);
}

template <class S>
S b17(const S& w2, const S& s1, const S& s2, const S& u, const S& sqrt3) {
    const S den = S(512) * s1 * s2 * s2 * (S(-1) + S(2) * s1) *
                  (S(-9) + S(14) * s2 + S(8) * s2 * s2);
    CompensatedSum<S> poly;
    poly.add(S(2398599));
    poly.add(S(-9031680) * s2);
    poly.add(S(-369) * u * s2);
    poly.add(S(574) * u * s2 * s2);
    poly.add(S(15744) * s1 * s2 * s2 * s2);
    poly.add(S(328) * w2 * s2 * s2 * s2);
    CompensatedSum<S> sum;
    sum.add(S(-3) * sqrt3 * poly.value() / den);
    sum.add(S(-192) * (S(-41601) + S(41) * s1) * s2 * s2 / den);
    return sum.value();
}

template <class S>
S c11(const S& s1, const S& s2) {
    const S m2 = S(-1) + S(2) * s2;
    const S m1 = S(-1) + S(2) * s1;
    CompensatedSum<S> head;
    head.add(S(9) / S(8));
    head.add(S(205) / S(24) * s2);
    head.add(S(-205) / S(18) * s2 * s2);
    CompensatedSum<S> sum;
    sum.add(head.value() / (m2 * m2 * (S(-1) + S(5) * s2)));
    sum.add(S(31) / S(18) * s2 * s2 * s2 /
            (m1 * m1 * (S(-1) + S(5) * s1)));
    return sum.value();
}

template <class S>
S c12(const S& s2) {
    CompensatedSum<S> num;
    num.add(S(1) / S(36));
    num.add(S(-13) / S(18) * s2);
    num.add(S(13) / S(27) * s2 * s2);
    num.add(S(-167) / S(72) * s2 * s2 * s2);
    num.add(S(107) / S(108) * s2 * s2 * s2 * s2);
    const S m = S(1) - S(2) * s2;
    return num.value() / (m * m * (S(-1) + S(5) * s2));
}

template <class S>
S c13(const S& s1, const S& s2) {
    const S m2 = S(1) - S(2) * s2;
    const S f2 = S(-1) + S(5) * s2;
    const S m1 = S(1) - S(2) * s1;
    const S f1 = S(-1) + S(5) * s1;
    CompensatedSum<S> head;
    head.add(S(1) / S(2));
    head.add(S(-421) / S(32) * s2);
    head.add(S(-19) / S(2) * s2 * s2);
    head.add(S(-407) / S(16) * s2 * s2 * s2);
    CompensatedSum<S> sum;
    sum.add(head.value() / (m2 * m2 * m2 * f2 * f2));
    sum.add(S(29) * s2 * s2 * s2 * s2 / (m1 * m1 * m1 * f1 * f1));
    return sum.value();
}

template <class S>
S c14(const S& s2) {
    CompensatedSum<S> num;
    num.add(S(1319) / S(436));
    num.add(S(-12639) / S(436) * s2);
    num.add(S(14275) / S(436) * s2 * s2);
    num.add(S(-799) / S(218) * s2 * s2 * s2);
    const S m = S(1) - S(2) * s2;
    return num.value() / (m * m * (S(-1) + S(5) * s2));
}

template <class S>
S c15(const S& s2) {
    CompensatedSum<S> num;
    num.add(S(57) / S(52));
    num.add(S(525) / S(52) * s2);
    num.add(S(-475) / S(26) * s2 * s2);
    num.add(S(1559) / S(26) * s2 * s2 * s2);
    num.add(S(283) / S(13) * s2 * s2 * s2 * s2);
    const S m = S(1) - S(2) * s2;
    const S f = S(-1) + S(5) * s2;
    return num.value() / (m * m * m * f * f);
}

template <class S>
S c16(const S& s2, const S& sqrt3) {
    return S(-287) / S(1024) * sqrt3 *
           (S(-3) + S(32) * s2 + S(48) * s2 * s2) /
           (s2 * (S(-9) + S(14) * s2 + S(8) * s2 * s2));
}

template <class S>
S c17(const S& w2, const S& s1, const S& s2, const S& sqrt3) {
    const S lin = s2 * (S(1) - S(2) * w2);
    const S den = S(512) * (S(9) + S(4) * s2) * (-s1 + S(4) * s2) * lin * lin;
    CompensatedSum<S> p1;
    p1.add(S(3));
    p1.add(S(-38) * s2);
    p1.add(S(16) * s2 * s2);
    p1.add(S(96) * s2 * s2 * s2);
    CompensatedSum<S> p2;
    p2.add(S(-142911));
    p2.add(S(195110) * s2);
    p2.add(S(74728) * s2 * s2);
    p2.add(S(66784) * s2 * s2 * s2);
    CompensatedSum<S> sum;
    sum.add(-sqrt3 * S(82) * s1 * p1.value() / den);
    sum.add(S(3) * sqrt3 * s2 * p2.value() / den);
    return sum.value();
}

/// Classical (unperturbed) KAM determinant as a function of u^2.
/// Simple poles at u^2 = 1/4 and u^2 = 4/25.
template <class S>
S d_classical(const S& usq) {
    return (S(644) * usq * usq - S(541) * usq + S(36)) /
           (S(8) * (S(4) * usq - S(1)) * (S(25) * usq - S(4)));
}

template <class S>
S d2(const S& s1, const S& s2) {
    const S m1 = S(-1) + S(2) * s1;
    const S m1b = S(1) - S(2) * s1;
    const S m2 = S(-1) + S(2) * s2;
    const S q1 = S(9) + S(4) * s1;
    const S q2 = S(9) + S(4) * s2;
    const S f1 = S(1) - S(5) * s1;
    const S f2 = S(1) - S(5) * s2;
    const S big = f1 * f1 * m1 * m1 * q1 * f2 * f2 * m2 * m2 * q2;
    const S ss = s1 * s2;
    CompensatedSum<S> inner;
    inner.add(S(1620864) / (m1 * m1));
    inner.add(S(2507364) / m1b);
    inner.add(S(706482) / (m1 * m1 * (S(4) * s1 - s2)));
    inner.add(S(71663616000) / (m1 * q2));
    inner.add(S(8062156800) / (m2 * q2 * q2));
    inner.add(S(1074954240) / (m1 * m1 * q2));
    inner.add(S(112969617408) / big);
    inner.add(S(17146183680) / (S(9) - S(14) * s2 - S(8) * s2 * s2));
    CompensatedSum<S> sum;
    sum.add(S(567) * (S(-151) + S(16) * s1) /
            (S(16384) * m1 * m1 * q1 * q1));
    sum.add(ss / S(884736) * inner.value());
    sum.add(S(1028577) * ss * ss / (S(16) * big));
    sum.add(S(8026049) * ss * ss * ss / (S(8) * big));
    sum.add(S(303951) * ss * ss * ss * ss / (S(4) * big));
    return sum.value();
}

template <class S>
S d3(const S& w1, const S& w2, const S& s1, const S& s2) {
    const S m1 = S(-1) + S(2) * s1;
    const S m1b = S(1) - S(2) * s1;
    const S m2 = S(-1) + S(2) * s2;
    const S q1 = S(9) + S(4) * s1;
    const S q2 = S(9) + S(4) * s2;
    const S qw2 = S(9) + S(4) * w2;
    const S sd6 = (S(1) - S(5) * s1) * m1 * q1 * (S(1) - S(5) * s2) * m2 * q2;
    const S ss = s1 * s2;
    CompensatedSum<S> head;
    head.add(S(819));
    head.add(S(8064) /
             ((S(2) * w1 + w2) * (w1 + S(2) * w2) * qw2 * qw2));
    head.add(S(-6883328) / sd6);
    CompensatedSum<S> inner;
    inner.add(S(706240) / m1);
    inner.add(S(289737) / m1b * (S(4) * s1 - s2));
    inner.add(S(-530841600) / (m1 * q2 * q2));
    inner.add(S(59719680) / (m2 * q2 * q2));
    inner.add(S(59719680) * s2 / (m1 * q2 * q2));
    inner.add(S(3317760) / (m2 * m2 * q2));
    inner.add(S(71516160) / (S(9) - S(14) * s2 - S(8) * s2 * s2));
    inner.add(S(24772608) / ((s1 - S(4) * s2) * m2 * q2));
    inner.add(S(22637076480) / sd6);
    CompensatedSum<S> sum;
    sum.add(S(3) / (S(8192) * m1) * head.value());
    sum.add(ss / S(147456) * inner.value());
    sum.add(S(-100200) * ss * ss / sd6);
    sum.add(S(758804) * ss * ss * ss / sd6);
    sum.add(S(130401) / S(2) * ss * ss * ss * ss / sd6);
    return sum.value();
}

template <class S>
S d4(const S& s1, const S& s2) {
    const S m1b = S(1) - S(2) * s1;
    const S m2 = S(-1) + S(2) * s2;
    const S m1 = S(-1) + S(2) * s1;
    const S q17 = (S(1) - S(7) * s1 + S(10) * s1 * s1) *
                  (S(1) - S(7) * s2 + S(10) * s2 * s2);
    const S ss = s1 * s2;
    CompensatedSum<S> head;
    head.add(S(58477) / (m1b * m1b));
    head.add(S(89216) / (S(9) - S(14) * s1 - S(8) * s1 * s1));
    head.add(S(7872) / (m2 * m2));
    head.add(S(33456) / (S(9) - S(14) * s2 - S(8) * s2 * s2));
    CompensatedSum<S> inner;
    inner.add(S(5864788) / m1b);
    inner.add(S(-186165) / (m1 * m1 * (S(4) * s1 - s2)));
    inner.add(S(1885814784) /
              ((s1 - S(4) * s2) * (S(9) - S(14) * s2 - S(8) * s2 * s2)));
    inner.add(S(18210816) / q17);
    CompensatedSum<S> sum;
    sum.add(S(243) * head.value());
    sum.add(S(2) * ss * inner.value());
    sum.add(S(-111689728) * ss * ss / q17);
    return sum.value() / S(294912);
}

template <class S>
S d5(const S& s1, const S& s2) {
    const S m1b = S(1) - S(2) * s1;
    const S m1 = S(-1) + S(2) * s1;
    const S f1 = S(1) - S(5) * s1;
    const S f2 = S(1) - S(5) * s2;
    const S g1 = S(-9) + S(14) * s1 + S(8) * s1 * s1;
    const S g2 = S(-9) + S(14) * s2 + S(8) * s2 * s2;
    const S f1a = S(-1) + S(5) * s1;
    const S f2a = S(-1) + S(5) * s2;
    const S g1n = S(9) - S(14) * s1 - S(8) * s1 * s1;
    const S g2n = S(9) - S(14) * s2 - S(8) * s2 * s2;
    const S den5 = f1 * f1 * g1 * f2 * f2 * g2;
    const S ss = s1 * s2;
    CompensatedSum<S> head;
    head.add(S(-2457) / (m1b * m1b));
    head.add(S(6426) / g1);
    head.add(S(-30450688) / (f1a * f1a * g1n * f2a * f2a * g2n));
    CompensatedSum<S> inner;
    inner.add(S(90048) / (m1b * m1b));
    inner.add(S(139298) / (m1b * m1b));
    inner.add(S(39249) / (m1b * m1b * (S(4) * s1 - s2)));
    inner.add(S(447897600) / (m1 * (S(9) + S(4) * s2)));
    inner.add(S(952565760) / g2n);
    inner.add(S(6276089856) / den5);
    inner.add(S(-594542592) / ((s1 - S(4) * s2) * g2));
    CompensatedSum<S> sum;
    sum.add(S(9) * head.value());
    sum.add(ss * inner.value());
    sum.add(S(3159788544) * ss * ss / den5);
    sum.add(S(49312045056) * ss * ss * ss / den5);
    sum.add(S(3734949888) * ss * ss * ss * ss / den5);
    return sum.value() / S(49152);
}

template <class S>
S d6(const S& s1, const S& s2, const S& sqrt3) {
    const S m1b = S(1) - S(2) * s1;
    const S m1 = S(-1) + S(2) * s1;
    CompensatedSum<S> head;
    head.add(S(52) / (m1 * m1));
    head.add(S(7) / (S(9) - S(14) * s2 - S(8) * s2 * s2));
    CompensatedSum<S> inner;
    inner.add(S(-738) / (m1b * m1b));
    inner.add(S(93899) / (m1 * m1));
    inner.add(S(91445760) /
              ((s1 - S(4) * s2) * (S(9) - S(14) * s2 - S(8) * s2 * s2)));
    CompensatedSum<S> sum;
    sum.add(S(29889) * head.value());
    sum.add(S(2) * s1 * s2 * inner.value());
    return sum.value() / (S(82944) * sqrt3);
}

template <class S>
S d7(const S& s1, const S& s2, const S& sqrt3) {
    const S m1b = S(1) - S(2) * s1;
    const S m1 = S(-1) + S(2) * s1;
    const S m2 = S(-1) + S(2) * s2;
    const S m2b = S(1) - S(2) * s2;
    const S q2 = S(9) + S(4) * s2;
    const S d14 = s1 - S(4) * s2;
    CompensatedSum<S> head;
    head.add(S(5904) / (m1 * m1));
    head.add(S(122157) / (d14 * m1 * m1));
    head.add(S(-758086) / (d14 * m1));
    head.add(S(5904) / (S(9) - S(14) * s2 - S(8) * s2 * s2));
    CompensatedSum<S> inner;
    inner.add(S(-492) / (m1b * m1b));
    inner.add(S(370964) / m1);
    inner.add(S(-58653) / ((S(4) * s1 - s2) * m1 * m1));
    inner.add(S(13893120) / (q2 * q2 * m2b));
    inner.add(S(-116702208) / (d14 * m2 * m2 * q2 * q2));
    inner.add(S(103680) / (q2 * m2b * m2b));
    inner.add(S(870912) / (d14 * m2 * m2 * q2 * q2));
    inner.add(S(62519040) / (S(-9) + S(14) * s2 + S(8) * s2 * s2));
    inner.add(S(-246177792) / (d14 * q2 * q2));
    CompensatedSum<S> sum;
    sum.add(S(27) * head.value());
    sum.add(S(2) * s1 * s2 * inner.value());
    return sum.value() / (S(110592) * sqrt3);
}

} // namespace tristab::kernels
