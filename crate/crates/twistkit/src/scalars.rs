//! Exact Gaussian-rational arithmetic: the coefficient domain ℚ(i).
//!
//! Values are pairs of arbitrary-precision rationals (real and imaginary
//! part), always stored fully reduced with positive denominator. The string
//! grammar accepted by [`GaussianRational::parse`] covers signed rationals
//! with an optional `i` factor and two-term sums such as `-1+3/2i`; the
//! canonical rendering produced by `Display` round-trips through the parser.

use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An element of ℚ(i): `re + im·i` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den`, exact. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `(num/den)·i`, exact. Panics on a zero denominator.
    pub fn ratio_i(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    /// `a + b·i` from four machine integers.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = re² + im², a plain rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Exact division; errors when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Parses the canonical grammar: `0`, `3`, `-1/2`, `i`, `-i`, `2i`,
    /// `3/2i`, `-1+3/2i`, `1/2-i`. At most one real and one imaginary term.
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).run()
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn run(mut self) -> Result<GaussianRational> {
        let mut re: Option<BigRational> = None;
        let mut im: Option<BigRational> = None;
        if self.bytes.is_empty() {
            return Err(self.error("empty input"));
        }
        loop {
            let (value, imaginary) = self.term()?;
            let slot = if imaginary { &mut im } else { &mut re };
            if slot.is_some() {
                let kind = if imaginary { "imaginary" } else { "real" };
                return Err(self.error(format!("duplicate {kind} component")));
            }
            *slot = Some(value);
            match self.peek() {
                None => break,
                Some(b'+') | Some(b'-') => {
                    if re.is_some() && im.is_some() {
                        return Err(self.error("too many components"));
                    }
                }
                Some(c) => return Err(self.error(format!("unexpected character {:?}", c as char))),
            }
        }
        Ok(GaussianRational::new(
            re.unwrap_or_else(BigRational::zero),
            im.unwrap_or_else(BigRational::zero),
        ))
    }

    /// One signed term; returns its value and whether it carried an `i`.
    fn term(&mut self) -> Result<(BigRational, bool)> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let magnitude = if self.peek() == Some(b'i') {
            self.pos += 1;
            (BigRational::one(), true)
        } else {
            let value = self.rational()?;
            if self.peek() == Some(b'i') {
                self.pos += 1;
                (value, true)
            } else {
                (value, false)
            }
        };
        let (value, imaginary) = magnitude;
        Ok((if negative { -value } else { value }, imaginary))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let numerator = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denominator_pos = self.pos;
            let denominator = self.integer()?;
            if denominator.is_zero() {
                self.pos = denominator_pos;
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(numerator, denominator))
        } else {
            Ok(BigRational::from_integer(numerator))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        BigInt::from_str(text).map_err(|e| self.error(e.to_string()))
    }
}

fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&rational_str(&self.re));
        }
        if !self.im.is_zero() {
            if !self.re.is_zero() && !self.im.is_negative() {
                out.push('+');
            }
            if self.im.is_one() {
                out.push('i');
            } else if (-&self.im).is_one() {
                out.push_str("-i");
            } else {
                out.push_str(&rational_str(&self.im));
                out.push('i');
            }
        }
        write!(f, "{out}")
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl<'b> Add<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'b> Sub<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'b> Mul<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self) * rhs;
    }
}

/// Division panics on zero divisors; use [`GaussianRational::checked_div`]
/// where the divisor is not known to be nonzero.
impl<'b> Div<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &'b GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        (&self) / (&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(s: &str) -> GaussianRational {
        GaussianRational::parse(s).unwrap()
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        assert_eq!(GaussianRational::i() * GaussianRational::i(), GaussianRational::from_int(-1));
    }

    #[test]
    fn conjugate_product_is_norm() {
        // (1/2 + i)(1/2 - i) = 5/4
        let z = GaussianRational::from_parts(1, 2, 1, 1);
        assert_eq!(&z * &z.conj(), GaussianRational::ratio(5, 4));
    }

    #[test]
    fn division_by_i() {
        let two_i = GaussianRational::ratio_i(2, 1);
        let q = two_i.checked_div(&GaussianRational::i()).unwrap();
        assert_eq!(q, GaussianRational::from_int(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = GaussianRational::one().checked_div(&GaussianRational::zero());
        assert!(matches!(err, Err(Error::DivisionByZero)));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(g("2i"), GaussianRational::ratio_i(2, 1));
        assert_eq!(g("-1+3/2i"), GaussianRational::from_parts(-1, 1, 3, 2));
        assert_eq!(g("1/2"), GaussianRational::ratio(1, 2));
        assert_eq!(g("i"), GaussianRational::i());
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("0"), GaussianRational::zero());
        assert_eq!(g("1/2-i"), GaussianRational::from_parts(1, 2, -1, 1));
    }

    #[test]
    fn zero_denominator_rejected_with_offset() {
        match GaussianRational::parse("1/0") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs_rejected() {
        for bad in ["", "1+2", "i+i", "1//2", "2x", "1+", "--1", "1 + i"] {
            assert!(GaussianRational::parse(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn canonical_rendering() {
        for (input, expected) in [
            ("0", "0"),
            ("5", "5"),
            ("-1/2", "-1/2"),
            ("i", "i"),
            ("-i", "-i"),
            ("2i", "2i"),
            ("3/2i", "3/2i"),
            ("-1+3/2i", "-1+3/2i"),
            ("1/2-i", "1/2-i"),
        ] {
            assert_eq!(g(input).to_string(), expected);
        }
    }

    prop_compose! {
        fn arb_rational()(n in -200i64..=200, d in 1i64..=40) -> BigRational {
            BigRational::new(BigInt::from(n), BigInt::from(d))
        }
    }

    prop_compose! {
        fn arb_gaussian()(re in arb_rational(), im in arb_rational()) -> GaussianRational {
            GaussianRational::new(re, im)
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
            // associativity
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            // commutativity
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            // distributivity
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // additive inverse
            prop_assert!((&a + &(-&a)).is_zero());
            // multiplicative inverse
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn parse_format_round_trip(a in arb_gaussian()) {
            prop_assert_eq!(GaussianRational::parse(&a.to_string()).unwrap(), a);
        }
    }
}
