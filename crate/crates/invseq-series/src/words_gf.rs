use num::{BigRational, Zero};

use crate::bi::TruncatedSeries2;
use crate::{rat, SeriesError};

/// Coefficient grid, up to `x^nx y^ny`, of the generating function
///
///   F(x,y) = ((1-x)^2 - (1-2x)y
///       - sqrt((1-x)^4 - 2(1-x)^2 y + (1-4x^2+4x^3) y^2)) / (2xy(1-y))
///
/// whose coefficient of `x^n y^k` counts words of length n over a k-letter
/// alphabet avoiding the patterns 101 and 120.
///
/// The radicand's x-free part is the square (1-y)^2, so the root is pinned
/// to the branch starting at 1-y and expanded in x over truncated
/// y-polynomials.
#[allow(non_snake_case)]
pub fn expand_F_words(nx: usize, ny: usize) -> Result<TruncatedSeries2, SeriesError> {
    // One order is consumed by each monomial division, four more guard the
    // intermediates.
    let gx = nx + 5;
    let gy = ny + 5;
    let radicand = TruncatedSeries2::from_int_poly2(
        &[
            (0, 0, 1),
            (1, 0, -4),
            (2, 0, 6),
            (3, 0, -4),
            (4, 0, 1),
            (0, 1, -2),
            (1, 1, 4),
            (2, 1, -2),
            (0, 2, 1),
            (2, 2, -4),
            (3, 2, 4),
        ],
        gx,
        gy,
    );
    let mut root0 = vec![BigRational::zero(); gy + 1];
    root0[0] = rat(1);
    root0[1] = rat(-1);
    let root = radicand.sqrt_in_x(&root0)?;
    let polynomial_part = TruncatedSeries2::from_int_poly2(
        &[(0, 0, 1), (1, 0, -2), (2, 0, 1), (0, 1, -1), (1, 1, 2)],
        gx,
        gy,
    );
    let numerator = polynomial_part.sub(&root).div_x_pow(1)?.div_y_pow(1)?;
    let denominator =
        TruncatedSeries2::from_int_poly2(&[(0, 0, 2), (0, 1, -2)], gx - 1, gy - 1);
    Ok(numerator.div(&denominator)?.truncate(nx, ny))
}
