//! Exact field scalars: arbitrary-precision rationals and odd prime fields.
//!
//! Every scalar in the library is either a reduced rational or a residue
//! modulo a prime carried inside the value. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} does not fit in 31 bits")]
    PrimeTooLarge(u64),
    #[error("cannot parse scalar from `{0}`")]
    Parse(String),
    #[error("denominator of `{0}` vanishes modulo the field characteristic")]
    ZeroDenominator(String),
    #[error("scalar {0} does not belong to the field {1}")]
    WrongField(String, String),
}

/// The base field: `Q` or `F_p` for a prime `p`.
///
/// Prime fields are restricted to 31-bit primes so products fit in `u64`
/// arithmetic with `u128` intermediates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self, FieldError> {
        if p >= (1 << 31) {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Fp { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Fp { p: *p, v: 1 % *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, v: r }
            }
        }
    }

    /// Builds `num/den` in this field. Panics if `den == 0`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self {
            FieldSpec::Rationals => {
                Scalar::Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            FieldSpec::PrimeField(_) => {
                let d = self.from_i64(den);
                assert!(!d.is_zero(), "denominator vanishes mod p");
                &self.from_i64(num) * &d.inv()
            }
        }
    }

    /// Parses an integer or a `p/q` fraction written in decimal.
    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| FieldError::Parse(s.to_string()))?;
        let den: BigInt = den_str
            .parse()
            .map_err(|_| FieldError::Parse(s.to_string()))?;
        if den.is_zero() {
            return Err(FieldError::Parse(s.to_string()));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Q(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let pb = BigInt::from(*p);
                let nm = ((num % &pb) + &pb) % &pb;
                let dm = ((den % &pb) + &pb) % &pb;
                let nv = nm.to_u64().expect("reduced residue fits u64");
                let dv = dm.to_u64().expect("reduced residue fits u64");
                if dv == 0 {
                    return Err(FieldError::ZeroDenominator(s.to_string()));
                }
                let d = Scalar::Fp { p: *p, v: dv };
                Ok(&Scalar::Fp { p: *p, v: nv } * &d.inv())
            }
        }
    }

    /// Checks that `s` is an element of this field.
    pub fn check(&self, s: &Scalar) -> Result<(), FieldError> {
        let ok = match (self, s) {
            (FieldSpec::Rationals, Scalar::Q(_)) => true,
            (FieldSpec::PrimeField(p), Scalar::Fp { p: q, .. }) => p == q,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(FieldError::WrongField(s.to_string(), format!("{self}")))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// An exact field element. Rationals are kept reduced by `BigRational`;
/// prime-field residues live in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Q(r.recip())
            }
            Scalar::Fp { p, v } => {
                assert!(*v != 0, "inverse of zero");
                // extended Euclid on (v, p)
                let (mut r0, mut r1) = (*v as i128, *p as i128);
                let (mut s0, mut s1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                let inv = s0.rem_euclid(*p as i128) as u64;
                Scalar::Fp { p: *p, v: inv }
            }
        }
    }

    fn fp_pair<'a>(a: &'a Scalar, b: &'a Scalar) -> Option<(u64, u64, u64)> {
        match (a, b) {
            (Scalar::Fp { p, v }, Scalar::Fp { p: q, v: w }) => {
                assert_eq!(p, q, "mixed prime fields");
                Some((*p, *v, *w))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if let Some((p, v, w)) = Scalar::fp_pair(self, rhs) {
            return Scalar::Fp { p, v: ((v as u128 + w as u128) % p as u128) as u64 };
        }
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => panic!("mixed scalar fields"),
        }
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if let Some((p, v, w)) = Scalar::fp_pair(self, rhs) {
            return Scalar::Fp { p, v: ((v as u128 + (p - w) as u128) % p as u128) as u64 };
        }
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            _ => panic!("mixed scalar fields"),
        }
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let Some((p, v, w)) = Scalar::fp_pair(self, rhs) {
            return Scalar::Fp { p, v: ((v as u128 * w as u128) % p as u128) as u64 };
        }
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            _ => panic!("mixed scalar fields"),
        }
    }
}

impl std::ops::Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: if *v == 0 { 0 } else { p - v } },
        }
    }
}

/// Exposes the reduced rational, if this is a rational scalar.
impl Scalar {
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(r) => Some(r),
            _ => None,
        }
    }

    /// True when the scalar is a square in its field (used by the quiver
    /// basis-matching heuristic). For `F_p` this tests Euler's criterion.
    pub fn is_square(&self) -> bool {
        match self {
            Scalar::Q(r) => {
                if r.is_zero() {
                    return true;
                }
                if r.is_negative() {
                    return false;
                }
                let num = r.numer().magnitude();
                let den = r.denom().magnitude();
                num.sqrt().pow(2) == *num && den.sqrt().pow(2) == *den
            }
            Scalar::Fp { p, v } => {
                if *v == 0 || *p == 2 {
                    return true;
                }
                let mut result = 1u128;
                let mut base = *v as u128;
                let mut exp = (*p - 1) / 2;
                let m = *p as u128;
                while exp > 0 {
                    if exp & 1 == 1 {
                        result = result * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                result == 1
            }
        }
    }

    /// A square root, when one exists in the field.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => {
                if !self.is_square() {
                    return None;
                }
                let num = BigInt::from(r.numer().magnitude().sqrt());
                let den = BigInt::from(r.denom().magnitude().sqrt());
                Some(Scalar::Q(BigRational::new(num, den)))
            }
            Scalar::Fp { p, v } => {
                if !self.is_square() {
                    return None;
                }
                // p is tiny (31 bits at most, corpus uses far smaller); scan.
                for x in 0..*p {
                    if (x as u128 * x as u128) % *p as u128 == *v as u128 {
                        return Some(Scalar::Fp { p: *p, v: x });
                    }
                }
                None
            }
        }
    }
}
