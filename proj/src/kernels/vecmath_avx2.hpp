#pragma once

// AVX2 double-precision log / exp / sincos for the basis-fill kernel.
// Ports of the fdlibm algorithms (Sun Microsystems, freely distributable)
// restricted to the argument ranges the calibration can produce:
//   v_log:    x in [2^-60, 2^60], positive, normal
//   v_exp:    |x| <= 700 (result stays normal)
//   v_sincos: |x| <= 2^20 (two-part Cody-Waite reduction)
// No NaN/Inf/subnormal handling; callers own those guarantees.
// Accuracy within these ranges is ~1-2 ulp; the kernel equivalence tests
// pin the tolerance against the scalar (libm) reference.

#include <immintrin.h>

#include <cstdint>

namespace lppl::kernels::avx2 {

namespace vm {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// Four int64 lanes (values fitting int32) -> four doubles.
inline __m256d cvt_i64_to_pd(__m256i v) {
    const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
    __m128i packed = _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(v, idx));
    return _mm256_cvtepi32_pd(packed);
}

// ln(x) for positive normal x.
inline __m256d v_log(__m256d x) {
    const __m256d ln2_hi = splat(6.93147180369123816490e-01);
    const __m256d ln2_lo = splat(1.90821492927058770002e-10);
    const __m256d lg1 = splat(6.666666666666735130e-01);
    const __m256d lg2 = splat(3.999999999940941908e-01);
    const __m256d lg3 = splat(2.857142874366239149e-01);
    const __m256d lg4 = splat(2.222219843214978396e-01);
    const __m256d lg5 = splat(1.818357216161805012e-01);
    const __m256d lg6 = splat(1.531383769920937332e-01);
    const __m256d lg7 = splat(1.479819860511658591e-01);
    const __m256d one = splat(1.0);
    const __m256d half = splat(0.5);
    const __m256d two = splat(2.0);
    const __m256d sqrt2 = splat(1.41421356237309514547e+00);

    // Split x = 2^k * mant with mant in [1, 2), then shift mant into
    // [sqrt(2)/2, sqrt(2)) so that f = mant - 1 stays small.
    __m256i bits = _mm256_castpd_si256(x);
    __m256i exp_raw = _mm256_srli_epi64(bits, 52);
    const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
    const __m256i one_bits = _mm256_set1_epi64x(0x3ff0000000000000LL);
    __m256d mant = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

    __m256d k = _mm256_sub_pd(cvt_i64_to_pd(exp_raw), splat(1023.0));
    __m256d ge = _mm256_cmp_pd(mant, sqrt2, _CMP_GE_OQ);
    mant = _mm256_blendv_pd(mant, _mm256_mul_pd(mant, half), ge);
    k = _mm256_add_pd(k, _mm256_and_pd(ge, one));

    __m256d f = _mm256_sub_pd(mant, one);
    __m256d s = _mm256_div_pd(f, _mm256_add_pd(two, f));
    __m256d z = _mm256_mul_pd(s, s);
    __m256d w = _mm256_mul_pd(z, z);
    __m256d t1 = _mm256_mul_pd(w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, lg6, lg4), lg2));
    __m256d t2 = _mm256_mul_pd(
        z, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, lg7, lg5), lg3), lg1));
    __m256d r = _mm256_add_pd(t1, t2);
    __m256d hfsq = _mm256_mul_pd(half, _mm256_mul_pd(f, f));

    // k*ln2_hi - ((hfsq - (s*(hfsq+R) + k*ln2_lo)) - f); keep the
    // compensated adds unfused.
    __m256d inner = _mm256_add_pd(_mm256_mul_pd(s, _mm256_add_pd(hfsq, r)),
                                  _mm256_mul_pd(k, ln2_lo));
    return _mm256_sub_pd(_mm256_mul_pd(k, ln2_hi),
                         _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f));
}

// e^x for |x| <= 700.
inline __m256d v_exp(__m256d x) {
    const __m256d invln2 = splat(1.44269504088896338700e+00);
    const __m256d ln2_hi = splat(6.93147180369123816490e-01);
    const __m256d ln2_lo = splat(1.90821492927058770002e-10);
    const __m256d p1 = splat(1.66666666666666019037e-01);
    const __m256d p2 = splat(-2.77777777770155933842e-03);
    const __m256d p3 = splat(6.61375632143793436117e-05);
    const __m256d p4 = splat(-1.65339022054652515390e-06);
    const __m256d p5 = splat(4.13813679705723846039e-08);
    const __m256d one = splat(1.0);
    const __m256d two = splat(2.0);

    __m256d kd = _mm256_round_pd(_mm256_mul_pd(x, invln2),
                                 _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d hi = _mm256_sub_pd(x, _mm256_mul_pd(kd, ln2_hi));
    __m256d lo = _mm256_mul_pd(kd, ln2_lo);
    __m256d rr = _mm256_sub_pd(hi, lo);

    __m256d t = _mm256_mul_pd(rr, rr);
    __m256d poly = _mm256_fmadd_pd(
        t, _mm256_fmadd_pd(t, _mm256_fmadd_pd(t, _mm256_fmadd_pd(t, p5, p4), p3), p2), p1);
    __m256d c = _mm256_sub_pd(rr, _mm256_mul_pd(t, poly));
    __m256d y = _mm256_sub_pd(
        one, _mm256_sub_pd(
                 _mm256_sub_pd(lo, _mm256_div_pd(_mm256_mul_pd(rr, c), _mm256_sub_pd(two, c))),
                 hi));

    // Scale by 2^k through the exponent bits.
    __m128i k32 = _mm256_cvtpd_epi32(kd);
    __m256i k64 = _mm256_cvtepi32_epi64(k32);
    __m256i ybits = _mm256_castpd_si256(y);
    ybits = _mm256_add_epi64(ybits, _mm256_slli_epi64(k64, 52));
    return _mm256_castsi256_pd(ybits);
}

// sin(r) on |r| <= pi/4 with low-order correction y.
inline __m256d kernel_sin(__m256d x, __m256d y) {
    const __m256d s1 = splat(-1.66666666666666324348e-01);
    const __m256d s2 = splat(8.33333333332248946124e-03);
    const __m256d s3 = splat(-1.98412698298579493134e-04);
    const __m256d s4 = splat(2.75573137070700676789e-06);
    const __m256d s5 = splat(-2.50507602534068634195e-08);
    const __m256d s6 = splat(1.58969099521155010221e-10);
    const __m256d half = splat(0.5);

    __m256d z = _mm256_mul_pd(x, x);
    __m256d w = _mm256_mul_pd(z, z);
    __m256d r = _mm256_add_pd(
        _mm256_fmadd_pd(z, _mm256_fmadd_pd(z, s4, s3), s2),
        _mm256_mul_pd(_mm256_mul_pd(z, w), _mm256_fmadd_pd(z, s6, s5)));
    __m256d v = _mm256_mul_pd(z, x);
    // x - ((z*(0.5*y - v*r) - y) - v*S1)
    __m256d inner = _mm256_sub_pd(_mm256_mul_pd(half, y), _mm256_mul_pd(v, r));
    return _mm256_sub_pd(
        x, _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(z, inner), y), _mm256_mul_pd(v, s1)));
}

// cos(r) on |r| <= pi/4 with low-order correction y.
inline __m256d kernel_cos(__m256d x, __m256d y) {
    const __m256d c1 = splat(4.16666666666666019037e-02);
    const __m256d c2 = splat(-1.38888888888741095749e-03);
    const __m256d c3 = splat(2.48015872894767294178e-05);
    const __m256d c4 = splat(-2.75573143513906633035e-07);
    const __m256d c5 = splat(2.08757232129817482790e-09);
    const __m256d c6 = splat(-1.13596475577881948265e-11);
    const __m256d one = splat(1.0);
    const __m256d half = splat(0.5);

    __m256d z = _mm256_mul_pd(x, x);
    __m256d w = _mm256_mul_pd(z, z);
    __m256d r = _mm256_add_pd(
        _mm256_mul_pd(z, _mm256_fmadd_pd(z, _mm256_fmadd_pd(z, c3, c2), c1)),
        _mm256_mul_pd(_mm256_mul_pd(w, w), _mm256_fmadd_pd(z, c6, c5)));
    __m256d hz = _mm256_mul_pd(half, z);
    __m256d w1 = _mm256_sub_pd(one, hz);
    // w1 + (((1-w1) - hz) + (z*r - x*y))
    __m256d tail = _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(one, w1), hz),
                                 _mm256_sub_pd(_mm256_mul_pd(z, r), _mm256_mul_pd(x, y)));
    return _mm256_add_pd(w1, tail);
}

// Simultaneous sin/cos for |x| <= 2^20.
inline void v_sincos(__m256d x, __m256d* sin_out, __m256d* cos_out) {
    const __m256d invpio2 = splat(6.36619772367581382433e-01);
    const __m256d pio2_1 = splat(1.57079632673412561417e+00);
    const __m256d pio2_1t = splat(6.07710050650619224932e-11);

    __m256d fn = _mm256_round_pd(_mm256_mul_pd(x, invpio2),
                                 _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    // Cody-Waite: r = x - fn*pio2_1 is near-exact (pio2_1 carries 33 bits),
    // then split off the low part of the second subtraction.
    __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(fn, pio2_1));
    __m256d w = _mm256_mul_pd(fn, pio2_1t);
    __m256d y0 = _mm256_sub_pd(r, w);
    __m256d y1 = _mm256_sub_pd(_mm256_sub_pd(r, y0), w);

    __m256d ks = kernel_sin(y0, y1);
    __m256d kc = kernel_cos(y0, y1);

    __m128i n32 = _mm256_cvtpd_epi32(fn);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    __m256i bit0 = _mm256_and_si256(n64, _mm256_set1_epi64x(1));
    __m256i bit1 = _mm256_and_si256(_mm256_srli_epi64(n64, 1), _mm256_set1_epi64x(1));
    __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(bit0, _mm256_set1_epi64x(1)));
    __m256d neg_sin = _mm256_castsi256_pd(_mm256_cmpeq_epi64(bit1, _mm256_set1_epi64x(1)));
    __m256d neg_cos = _mm256_xor_pd(swap, neg_sin);  // quadrants 1 and 2

    const __m256d sign_bit = splat(-0.0);
    __m256d s = _mm256_blendv_pd(ks, kc, swap);
    __m256d c = _mm256_blendv_pd(kc, ks, swap);
    s = _mm256_xor_pd(s, _mm256_and_pd(neg_sin, sign_bit));
    c = _mm256_xor_pd(c, _mm256_and_pd(neg_cos, sign_bit));
    *sin_out = s;
    *cos_out = c;
}

} // namespace vm

} // namespace lppl::kernels::avx2
