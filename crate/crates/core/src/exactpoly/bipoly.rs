use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::UniPoly;
use crate::error::{Error, Result};

/// Polynomial in `λ` whose coefficients are polynomials in `Y`, stored in
/// ascending powers of `λ`. Canonical: empty or nonzero leading coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(UniPoly::one())
    }

    /// The indeterminate `λ`.
    pub fn lambda() -> Self {
        BiPoly {
            coeffs: vec![UniPoly::zero(), UniPoly::one()],
        }
    }

    pub fn constant(c: UniPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> UniPoly {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(UniPoly::is_one)
    }

    pub fn scale(&self, k: &UniPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Remainder of division by a monic divisor. Every step subtracts an
    /// exact multiple of `divisor`, so no fractions arise.
    pub fn rem_monic(&self, divisor: &BiPoly) -> Result<BiPoly> {
        if !divisor.is_monic() {
            return Err(Error::NonMonic);
        }
        let m = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > m {
            let top = rem.len() - 1;
            let lead = rem.pop().expect("non-empty");
            if lead.is_zero() {
                continue;
            }
            let shift = top - m;
            for (i, d) in divisor.coeffs[..m].iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&lead * d);
            }
        }
        Ok(Self::from_coeffs(rem))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let all_negative = c.coeffs().iter().all(|x| !x.is_positive());
            let shown = if all_negative { -c } else { c.clone() };
            match (first, all_negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let body = shown.compact('Y');
            if power == 0 {
                f.write_str(&body)?;
            } else {
                if !shown.is_one() {
                    if shown.term_count() > 1 {
                        write!(f, "({body})")?;
                    } else {
                        f.write_str(&body)?;
                    }
                }
                f.write_str("λ")?;
                if power > 1 {
                    write!(f, "^{power}")?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_coeffs(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        BiPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn bp(coeffs: &[&str]) -> BiPoly {
        BiPoly::from_coeffs(coeffs.iter().map(|s| y(s)).collect())
    }

    fn quartic() -> BiPoly {
        bp(&["1024Y^4", "512Y^3-64Y^2", "-16Y", "-16Y-1", "1"])
    }

    #[test]
    fn rem_of_self_is_zero() {
        let m = quartic();
        assert!(m.rem_monic(&m).unwrap().is_zero());
    }

    #[test]
    fn rem_by_linear_substitutes() {
        // λ² mod (λ − Y) = Y²
        let lam2 = &BiPoly::lambda() * &BiPoly::lambda();
        let m = bp(&["-Y", "1"]);
        assert_eq!(lam2.rem_monic(&m).unwrap(), bp(&["Y^2"]));
    }

    #[test]
    fn lambda_four_mod_quartic() {
        let lam = BiPoly::lambda();
        let lam4 = &(&lam * &lam) * &(&lam * &lam);
        let m = quartic();
        let expected = bp(&["-1024Y^4", "-512Y^3+64Y^2", "16Y", "16Y+1"]);
        let r = lam4.rem_monic(&m).unwrap();
        assert_eq!(r, expected);
        // λ⁴ − m must equal the remainder since the quotient is 1.
        assert_eq!(&lam4 - &m, expected);
    }

    #[test]
    fn non_monic_divisor_rejected() {
        let m = bp(&["1", "2"]);
        assert_eq!(BiPoly::lambda().rem_monic(&m), Err(Error::NonMonic));
        assert_eq!(BiPoly::lambda().rem_monic(&BiPoly::zero()), Err(Error::NonMonic));
    }

    #[test]
    fn display_matches_conventional_layout() {
        assert_eq!(
            quartic().to_string(),
            "λ^4 - (16Y+1)λ^3 - 16Yλ^2 + (512Y^3-64Y^2)λ + 1024Y^4"
        );
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(bp(&["-1", "1"]).to_string(), "λ - 1");
    }

    fn small_bipoly(max_deg: usize) -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(prop::collection::vec(-9i64..9, 0..4), 0..=max_deg)
            .prop_map(|cs| BiPoly::from_coeffs(cs.iter().map(|c| UniPoly::from_i64s(c)).collect()))
    }

    proptest! {
        #[test]
        fn remainder_recovers_low_degree_part(
            q in small_bipoly(3),
            lower in prop::collection::vec(prop::collection::vec(-9i64..9, 0..4), 3),
            r in small_bipoly(2),
        ) {
            // Monic cubic m with arbitrary lower coefficients.
            let mut mc: Vec<UniPoly> = lower.iter().map(|c| UniPoly::from_i64s(c)).collect();
            mc.push(UniPoly::one());
            let m = BiPoly::from_coeffs(mc);
            let f = &(&q * &m) + &r;
            prop_assert_eq!(f.rem_monic(&m).unwrap(), r);
        }
    }
}
