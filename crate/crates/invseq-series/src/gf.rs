use num::{BigInt, BigRational, Zero};

use crate::uni::TruncatedSeries1;
use crate::SeriesError;

/// The polynomial with the given integer coefficients, lowest degree first.
pub fn poly_from(coeffs: &[i64]) -> Vec<BigInt> {
    coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

/// Product of two integer polynomials.
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|c| -c).collect()
}

/// A polynomial viewed as a series, truncating any degrees past the order.
fn poly_series(poly: &[BigInt], order: usize) -> TruncatedSeries1 {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (i, c) in poly.iter().enumerate().take(order + 1) {
        coeffs[i] = BigRational::from_integer(c.clone());
    }
    TruncatedSeries1::from_rationals(coeffs)
}

// Intermediate series carry this many orders beyond the requested output, on
// top of the orders consumed by monomial divisions.
const GUARD: usize = 4;

fn extract_integer_prefix(series: &TruncatedSeries1, n_max: usize) -> Vec<BigInt> {
    series
        .truncate(n_max)
        .integer_coeffs()
        .expect("the counting series has integer coefficients")
}

/// Terms 0..=n_max of the counting sequence of inversion sequences avoiding
/// 102 and 201, expanded from the closed-form generating function
///
///   (-8x^4 + 18x^3 - 10x^2 - 8x + 4
///      + 2(2x-1)(x^2-2x+2) sqrt((5x-1)(x-1))) / (4x(2x-1)(x-1)(x-2)^2).
pub fn gf_102_201_terms(n_max: usize) -> Result<Vec<BigInt>, SeriesError> {
    let work = n_max + 1 + GUARD;
    // (5x-1)(x-1) = 1 - 6x + 5x^2
    let root = TruncatedSeries1::from_int_poly(&[1, -6, 5], work).sqrt()?;
    let even_part = TruncatedSeries1::from_int_poly(&[4, -8, -10, 18, -8], work);
    let radical_factor = poly_mul(
        &poly_mul(&poly_from(&[-1, 2]), &poly_from(&[2, -2, 1])),
        &poly_from(&[2]),
    );
    let numerator = even_part
        .add(&poly_series(&radical_factor, work).mul(&root))
        .div_x_pow(1)?;
    // 4(2x-1)(x-1)(x-2)^2, the denominator with its factor x removed
    let denominator = poly_mul(
        &poly_mul(&poly_from(&[-1, 2]), &poly_from(&[-1, 1])),
        &poly_mul(&poly_from(&[-2, 1]), &poly_from(&[-8, 4])),
    );
    let f = numerator.div(&poly_series(&denominator, work - 1))?;
    Ok(extract_integer_prefix(&f, n_max))
}

/// Terms 0..=n_max of the counting sequence of inversion sequences avoiding
/// 102 and 210, expanded from the closed-form generating function
///
///   ((4x-1)(4x^4 - 22x^3 + 25x^2 - 9x + 1)
///      - (2x-1)(x^2-5x+1)(2x^2-4x+1) sqrt(1-4x)) / (2x^3(4x-1)(x-1)^2).
pub fn gf_102_210_terms(n_max: usize) -> Result<Vec<BigInt>, SeriesError> {
    let work = n_max + 3 + GUARD;
    let root = TruncatedSeries1::from_int_poly(&[1, -4], work).sqrt()?;
    let even_part = poly_mul(&poly_from(&[-1, 4]), &poly_from(&[1, -9, 25, -22, 4]));
    let radical_factor = poly_mul(
        &poly_mul(&poly_from(&[-1, 2]), &poly_from(&[1, -5, 1])),
        &poly_from(&[1, -4, 2]),
    );
    let numerator = poly_series(&even_part, work)
        .sub(&poly_series(&radical_factor, work).mul(&root))
        .div_x_pow(3)?;
    // 2(4x-1)(x-1)^2, the denominator with its factor x^3 removed
    let denominator = poly_mul(
        &poly_mul(&poly_from(&[-1, 4]), &poly_from(&[1, -2, 1])),
        &poly_from(&[2]),
    );
    let f = numerator.div(&poly_series(&denominator, work - 3))?;
    Ok(extract_integer_prefix(&f, n_max))
}

/// Evaluates a polynomial in F with integer-polynomial coefficients in x at
/// the series F given by `terms`, truncated after `x^order`. Entry `i` of
/// `poly_in_f` multiplies `F^i`. A vanishing residual certifies the algebraic
/// equation to the given order.
pub fn minimal_poly_residual(
    poly_in_f: &[Vec<BigInt>],
    terms: &[BigInt],
    order: usize,
) -> TruncatedSeries1 {
    assert!(!poly_in_f.is_empty(), "the polynomial needs at least one coefficient");
    assert!(terms.len() > order, "not enough terms for the requested order");
    let f = TruncatedSeries1::from_rationals(
        terms[..=order]
            .iter()
            .map(|t| BigRational::from_integer(t.clone()))
            .collect(),
    );
    let mut acc = poly_series(poly_in_f.last().unwrap(), order);
    for coeff in poly_in_f.iter().rev().skip(1) {
        acc = acc.mul(&f).add(&poly_series(coeff, order));
    }
    acc
}

/// x^4 F^4 - 2x^3(x-1) F^3 + x(x^3-2x^2+4x-1) F^2 - (2x^2-2x+1) F + 1,
/// the annihilator of the counting series of inversion sequences avoiding
/// 000 and 102. Coefficients are listed by increasing power of F.
pub fn min_poly_000_102() -> Vec<Vec<BigInt>> {
    vec![
        poly_from(&[1]),
        poly_from(&[-1, 2, -2]),
        poly_mul(&poly_from(&[0, 1]), &poly_from(&[-1, 4, -2, 1])),
        poly_mul(&poly_from(&[0, 0, 0, -2]), &poly_from(&[-1, 1])),
        poly_from(&[0, 0, 0, 0, 1]),
    ]
}

/// x(x-1)^2(x-2)^2(2x-1)^2 F^2
///   + (x-1)(2x-1)(4x^4-9x^3+5x^2+4x-2) F
///   - x^5 + 9x^4 - 22x^3 + 25x^2 - 12x + 2,
/// the annihilator of the counting series of inversion sequences avoiding
/// 102 and 201.
pub fn min_poly_102_201() -> Vec<Vec<BigInt>> {
    let square = |p: &[i64]| poly_mul(&poly_from(p), &poly_from(p));
    vec![
        poly_from(&[2, -12, 25, -22, 9, -1]),
        poly_mul(
            &poly_mul(&poly_from(&[-1, 1]), &poly_from(&[-1, 2])),
            &poly_from(&[-2, 4, 5, -9, 4]),
        ),
        poly_mul(
            &poly_mul(&poly_from(&[0, 1]), &square(&[-1, 1])),
            &poly_mul(&square(&[-2, 1]), &square(&[-1, 2])),
        ),
    ]
}

/// (4x-1)(x-1)^4 x^3 F^2
///   - (4x-1)(4x^4-22x^3+25x^2-9x+1)(x-1)^2 F
///   + 4x^7 - 44x^6 + 165x^5 - 254x^4 + 194x^3 - 75x^2 + 14x - 1,
/// the annihilator of the counting series of inversion sequences avoiding
/// 102 and 210.
pub fn min_poly_102_210() -> Vec<Vec<BigInt>> {
    let square = |p: &[i64]| poly_mul(&poly_from(p), &poly_from(p));
    vec![
        poly_from(&[-1, 14, -75, 194, -254, 165, -44, 4]),
        poly_neg(&poly_mul(
            &poly_mul(&poly_from(&[-1, 4]), &poly_from(&[1, -9, 25, -22, 4])),
            &square(&[-1, 1]),
        )),
        poly_mul(
            &poly_mul(&poly_from(&[-1, 4]), &square(&[-1, 1])),
            &poly_mul(&square(&[-1, 1]), &poly_from(&[0, 0, 0, 1])),
        ),
    ]
}

/// x(x^2-x+1)(x-1)^2 F^3 + 2x(x-1)(2x^2-2x+1) F^2
///   - (x^4-8x^3+11x^2-6x+1) F - (2x-1)(x-1)^2,
/// the annihilator of the counting series of inversion sequences avoiding
/// 010 and 102.
pub fn min_poly_010_102() -> Vec<Vec<BigInt>> {
    let square = |p: &[i64]| poly_mul(&poly_from(p), &poly_from(p));
    vec![
        poly_neg(&poly_mul(&poly_from(&[-1, 2]), &square(&[-1, 1]))),
        poly_from(&[-1, 6, -11, 8, -1]),
        poly_mul(
            &poly_mul(&poly_from(&[0, 2]), &poly_from(&[-1, 1])),
            &poly_from(&[1, -2, 2]),
        ),
        poly_mul(
            &poly_mul(&poly_from(&[0, 1]), &poly_from(&[1, -1, 1])),
            &square(&[-1, 1]),
        ),
    ]
}
