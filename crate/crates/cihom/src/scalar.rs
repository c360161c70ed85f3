//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! Every scalar is kept in canonical form. Rationals are stored in lowest
//! terms with a positive denominator (enforced by `BigRational`), prime-field
//! elements as a representative in `0..p`. There is no floating point
//! anywhere in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Which coefficient field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers.
    Q,
    /// The prime field with `p` elements; `p` is checked prime on construction.
    Fp(u64),
}

impl FieldSpec {
    /// Parse `q` or `fp:P`, validating primality of `P`.
    pub fn parse(s: &str) -> Result<FieldSpec, String> {
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Q);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| format!("invalid prime field modulus `{p}`"))?;
            if !is_prime(p) {
                return Err(format!("modulus {p} is not prime"));
            }
            return Ok(FieldSpec::Fp(p));
        }
        Err(format!("unknown field `{s}` (expected `q` or `fp:P`)"))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::one()),
            FieldSpec::Fp(p) => Scalar::Fp { val: 1 % p, p: *p },
        }
    }

    /// The image of an integer in the field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Fp(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { val: m, p: *p }
            }
        }
    }

    /// num/den with den > 0; den must be invertible over Fp.
    pub fn from_fraction(&self, num: i64, den: u64) -> Result<Scalar, String> {
        if den == 0 {
            return Err("zero denominator".into());
        }
        match self {
            FieldSpec::Q => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Fp(p) => {
                let d = den % p;
                if d == 0 {
                    return Err(format!("denominator {den} is divisible by {p}"));
                }
                let inv = fp_inv(d, *p);
                let n = num.rem_euclid(*p as i64) as u64;
                Ok(Scalar::Fp {
                    val: fp_mul(n, inv, *p),
                    p: *p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "q"),
            FieldSpec::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An element of the active coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, p } => *val == 1 % p,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp {
                    val: fp_add(*a, *b, *p),
                    p: *p,
                }
            }
            _ => panic!("mixed field scalars"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp {
                    val: fp_mul(*a, *b, *p),
                    p: *p,
                }
            }
            _ => panic!("mixed field scalars"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers test first).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { val, p } => {
                assert!(*val != 0, "inverse of zero");
                Scalar::Fp {
                    val: fp_inv(*val, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Canonical string form: `n` or `n/d` over Q, the representative over Fp.
    pub fn render(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => val.to_string(),
        }
    }

    /// Parse the canonical string form back into the given field.
    pub fn parse(s: &str, field: FieldSpec) -> Result<Scalar, String> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num: i64 = n.trim().parse().map_err(|_| format!("bad numerator `{n}`"))?;
            let den: u64 = d.trim().parse().map_err(|_| format!("bad denominator `{d}`"))?;
            field.from_fraction(num, den)
        } else {
            let n: i64 = s.parse().map_err(|_| format!("bad integer `{s}`"))?;
            Ok(field.from_i64(n))
        }
    }

    /// Exact rational value, available only over Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// True when the rational is negative (used for sign-aware printing).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn fp_add(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128 + b as u128) % p as u128;
    s as u64
}

fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse by extended Euclid.
fn fp_inv(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "non-invertible element");
    t0.rem_euclid(p as i128) as u64
}

/// Deterministic trial-division primality check (moduli are desk-scale).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let f = FieldSpec::Q;
        let a = f.from_fraction(2, 4).unwrap();
        assert_eq!(a.render(), "1/2");
        let b = f.from_fraction(-3, 6).unwrap();
        assert_eq!(b.render(), "-1/2");
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn rational_string_round_trip() {
        let f = FieldSpec::Q;
        for (n, d) in [(3, 7), (-22, 8), (0, 5), (17, 1)] {
            let s = f.from_fraction(n, d).unwrap();
            let back = Scalar::parse(&s.render(), f).unwrap();
            assert_eq!(s, back);
        }
    }

    #[test]
    fn fp_field_ops() {
        let f = FieldSpec::parse("fp:7").unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.add(&b).render(), "1");
        assert_eq!(a.mul(&b).render(), "1");
        assert_eq!(a.inv().render(), "5");
        assert!(FieldSpec::parse("fp:6").is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }
}
