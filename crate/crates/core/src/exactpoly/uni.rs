use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{Deserialize, Deserializer, Error as _};
use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense polynomial in the genus variable `Y` with arbitrary-precision
/// integer coefficients, stored in ascending degree.
///
/// The coefficient vector is always canonical: either empty (the zero
/// polynomial) or ending in a nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * Y^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Sum of the coefficients, i.e. the value at `Y = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, y: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * y + c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Divides every coefficient by `k`, failing unless each division is exact.
    pub fn div_exact(&self, k: &BigInt) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {c} of Y^{i} is not divisible by {k}"
                )));
            }
            out.push(q);
        }
        Ok(UniPoly { coeffs: out })
    }

    /// Text form `c0 + c1*Y + c2*Y^2 + ...` with zero terms omitted and
    /// `0` for the zero polynomial. Unit coefficients print as the bare
    /// variable.
    pub fn render(&self, var: char) -> String {
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match deg {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push(var);
                    if deg > 1 {
                        out.push('^');
                        out.push_str(&deg.to_string());
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Compact descending form used in matrix printouts, e.g. `2Y^2+Y`.
    pub fn compact(&self, var: char) -> String {
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if deg == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            if deg > 0 {
                out.push(var);
                if deg > 1 {
                    out.push('^');
                    out.push_str(&deg.to_string());
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses either the text form (`2 + 38*x + 24*x^2`) or the compact
    /// form (`2Y^2+Y`). Any single ASCII letter is accepted as the
    /// variable, but all terms must use the same one.
    pub fn parse(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParsePoly {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(fail("empty input"));
        }
        let bytes = s.as_bytes();
        let mut var: Option<u8> = None;
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            let negative = match bytes[pos] {
                b'+' if pos > 0 => {
                    pos += 1;
                    false
                }
                b'-' => {
                    pos += 1;
                    true
                }
                _ if pos == 0 => false,
                _ => return Err(fail("expected '+' or '-' between terms")),
            };
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coeff = if pos > start {
                s[start..pos].parse::<BigInt>().map_err(|_| fail("bad coefficient"))?
            } else {
                BigInt::one()
            };
            let has_digits = pos > start;
            if pos < bytes.len() && bytes[pos] == b'*' {
                if !has_digits {
                    return Err(fail("'*' without a coefficient"));
                }
                pos += 1;
                if pos >= bytes.len() || !bytes[pos].is_ascii_alphabetic() {
                    return Err(fail("expected variable after '*'"));
                }
            }
            let mut degree = 0usize;
            if pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
                let v = bytes[pos];
                if *var.get_or_insert(v) != v {
                    return Err(fail("mixed variable letters"));
                }
                pos += 1;
                degree = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let es = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    degree = s[es..pos].parse().map_err(|_| fail("bad exponent"))?;
                }
            } else if !has_digits {
                return Err(fail("empty term"));
            }
            if negative {
                coeff = -coeff;
            }
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, BigInt::zero());
            }
            coeffs[degree] += coeff;
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Ascending decimal coefficient strings, the JSON interchange form.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let coeffs = items
            .iter()
            .map(|s| {
                s.as_ref().parse::<BigInt>().map_err(|_| Error::ParsePoly {
                    text: s.as_ref().to_string(),
                    reason: "not a decimal integer".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    fn add_scaled_shifted(&mut self, other: &UniPoly, factor: &BigInt, shift: usize) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            if !c.is_zero() {
                self.coeffs[i + shift] += c * factor;
            }
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('Y'))
    }
}

impl FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl From<i64> for UniPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        UniPoly::from_decimal_strings(&items).map_err(D::Error::custom)
    }
}

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        self.add_scaled_shifted(rhs, &BigInt::one(), 0);
        self.normalize();
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for UniPoly {
    type Output = UniPoly;

    fn add(mut self, rhs: UniPoly) -> UniPoly {
        self += &rhs;
        self
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        -&self
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &-BigInt::one(), 0);
        out.normalize();
        out
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        // Iterate over the sparser factor; transfer-matrix entries have at
        // most a couple of terms while the vector entries grow with n.
        let (short, long) = if self.term_count() <= rhs.term_count() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = UniPoly {
            coeffs: vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1],
        };
        for (shift, c) in short.coeffs.iter().enumerate() {
            out.add_scaled_shifted(long, c, shift);
        }
        out.normalize();
        out
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

impl<'a> std::iter::Sum<&'a UniPoly> for UniPoly {
    fn sum<I: Iterator<Item = &'a UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("2") + &UniPoly::zero(), p("2"));
        assert_eq!(&p("2 + 38*Y") + &p("24*Y^2"), p("2 + 38*Y + 24*Y^2"));
        let cancelled = &p("Y") + &p("-Y");
        assert!(cancelled.is_zero());
        assert!(cancelled.coeffs().is_empty());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("2*Y") * &p("8*Y"), p("16*Y^2"));
        assert_eq!(&p("1 + 2*Y") * &p("1 + 2*Y"), p("1 + 4*Y + 4*Y^2"));
        assert!((&UniPoly::zero() * &p("4*Y^2 + Y")).is_zero());
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(p("2 + 2*Y").eval_at_one(), BigInt::from(4));
        assert_eq!(p("2 + 38*Y + 24*Y^2").eval_at_one(), BigInt::from(64));
        assert_eq!(UniPoly::zero().eval_at_one(), BigInt::zero());
    }

    #[test]
    fn render_and_compact() {
        let q = UniPoly::from_i64s(&[0, 1, 2]);
        assert_eq!(q.render('x'), "x + 2*x^2");
        assert_eq!(q.compact('Y'), "2Y^2+Y");
        assert_eq!(UniPoly::zero().render('x'), "0");
        assert_eq!(UniPoly::zero().compact('Y'), "0");
        assert_eq!(UniPoly::from_i64s(&[-1, -16]).compact('Y'), "-16Y-1");
        assert_eq!(UniPoly::from_i64s(&[3, 0, -64]).render('Y'), "3 - 64*Y^2");
        assert_eq!(UniPoly::from_i64s(&[0, -1]).render('Y'), "-Y");
        assert_eq!(UniPoly::one().compact('Y'), "1");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(p("2Y^2+Y"), UniPoly::from_i64s(&[0, 1, 2]));
        assert_eq!(p("512Y^3-64Y^2"), UniPoly::from_i64s(&[0, 0, -64, 512]));
        assert_eq!(p("-16Y - 1"), UniPoly::from_i64s(&[-1, -16]));
        assert_eq!(p("0"), UniPoly::zero());
        assert_eq!(p("x + x"), UniPoly::from_i64s(&[0, 2]));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "2 +", "2x + 3y", "*x", "x^", "2**x"] {
            assert!(UniPoly::parse(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn div_exact_reports_remainder() {
        assert_eq!(p("4 + 8*Y").div_exact(&BigInt::from(4)).unwrap(), p("1 + 2*Y"));
        assert!(matches!(
            p("4 + 6*Y").div_exact(&BigInt::from(4)),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn json_strings_preserve_big_values() {
        let big = UniPoly::monomial(BigInt::from(1u8) << 200, 3);
        let json = serde_json::to_string(&big).unwrap();
        assert!(json.starts_with("[\"0\",\"0\",\"0\",\"1606938"));
        let back: UniPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, big);
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|c| UniPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn eval_at_one_is_multiplicative(a in small_poly(), b in small_poly()) {
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }

        #[test]
        fn degree_of_product(a in small_poly(), b in small_poly()) {
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }

        #[test]
        fn text_forms_round_trip(a in small_poly()) {
            prop_assert_eq!(UniPoly::parse(&a.render('x')).unwrap(), a.clone());
            prop_assert_eq!(UniPoly::parse(&a.compact('Y')).unwrap(), a);
        }
    }
}
