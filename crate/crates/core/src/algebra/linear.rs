use super::RatFunc;
use crate::error::{Error, Result};

/// Solve `a11 u + a12 v = b1`, `a21 u + a22 v = b2` by Cramer's rule.
pub fn solve_linear_2x2(
    a11: &RatFunc,
    a12: &RatFunc,
    a21: &RatFunc,
    a22: &RatFunc,
    b1: &RatFunc,
    b2: &RatFunc,
) -> Result<(RatFunc, RatFunc)> {
    let det = a11 * a22 - a12 * a21;
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let u = (b1 * a22 - a12 * b2).checked_div(&det)?;
    let v = (a11 * b2 - b1 * a21).checked_div(&det)?;
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn identity_and_swap() {
        let (f, g) = (rf(&[1], &[1, -1]), rf(&[0, 1], &[1, 1]));
        let (one, zero) = (RatFunc::one(), RatFunc::zero());
        assert_eq!(
            solve_linear_2x2(&one, &zero, &zero, &one, &f, &g).unwrap(),
            (f.clone(), g.clone())
        );
        assert_eq!(
            solve_linear_2x2(&zero, &one, &one, &zero, &f, &g).unwrap(),
            (g, f)
        );
    }

    #[test]
    fn length_two_increasing_system() {
        // With A = M(x), B = M(-x) and M_1 = 1:
        //   (1 - x) A - (1 + x) B = 0,  (1 + x) A + (1 - x) B = 2.
        let a11 = rf(&[1, -1], &[1]);
        let a12 = rf(&[-1, -1], &[1]);
        let a21 = rf(&[1, 1], &[1]);
        let (u, v) = solve_linear_2x2(
            &a11,
            &a12,
            &a21,
            &a11,
            &RatFunc::zero(),
            &RatFunc::from_int(2),
        )
        .unwrap();
        assert_eq!(u, rf(&[1, 1], &[1, 0, 1]));
        assert_eq!(v, u.neg_x());
    }

    #[test]
    fn singular_system() {
        let one = RatFunc::one();
        assert_eq!(
            solve_linear_2x2(&one, &one, &one, &one, &one, &one),
            Err(Error::SingularSystem)
        );
    }
}
