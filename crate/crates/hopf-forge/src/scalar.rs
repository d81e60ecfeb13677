//! Exact scalar arithmetic over the two coefficient domains: a prime field
//! `F_p` (entries reduced mod `p`) and the rationals `Q` (arbitrary
//! precision, always reduced). No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Coefficient domain tag. Every matrix and every instance carries exactly
/// one domain; mixing domains is a programming error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// Prime field with `p` elements. `p` is validated prime and `< 2^31`
    /// so products fit in `u64` without overflow.
    Fp(u64),
    /// Rational numbers.
    Q,
}

impl Domain {
    pub fn zero(self) -> Scalar {
        match self {
            Domain::Fp(p) => Scalar::Fp { p, value: 0 },
            Domain::Q => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Domain::Fp(p) => Scalar::Fp { p, value: 1 % p },
            Domain::Q => Scalar::Q(BigRational::one()),
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Domain::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, value: r }
            }
            Domain::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
        }
    }
}

/// `true` iff `p` is prime. Trial division; moduli are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// One exact scalar. `Fp` values are kept reduced to `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { p: u64, value: u64 },
    Q(BigRational),
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Fp { p, .. } => Domain::Fp(*p),
            Scalar::Q(_) => Domain::Q,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { value, .. } => *value == 0,
            Scalar::Q(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { p, value } => *value == 1 % p,
            Scalar::Q(r) => r.is_one(),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                assert_eq!(p, q, "domain mismatch");
                Scalar::Fp { p: *p, value: (a + b) % p }
            }
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => panic!("domain mismatch"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Fp { p, value } => Scalar::Fp { p: *p, value: (p - value) % p },
            Scalar::Q(r) => Scalar::Q(-r),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                assert_eq!(p, q, "domain mismatch");
                let prod = (*a as u128 * *b as u128) % (*p as u128);
                Scalar::Fp { p: *p, value: prod as u64 }
            }
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            _ => panic!("domain mismatch"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Fp { p, value } => {
                if *value == 0 {
                    return None;
                }
                Some(Scalar::Fp { p: *p, value: mod_inv(*value, *p) })
            }
            Scalar::Q(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(r.recip()))
                }
            }
        }
    }
}

/// Inverse of `a` mod prime `p` by extended Euclid. Requires `0 < a < p`.
fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "modulus not prime or a == 0");
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { value, .. } => write!(f, "{value}"),
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Parses a scalar from a JSON value: an integer, or for `Q` also a
/// string of the form `"num/den"`.
pub fn scalar_from_json(domain: Domain, v: &serde_json::Value) -> Result<Scalar, String> {
    match (domain, v) {
        (Domain::Fp(p), serde_json::Value::Number(n)) => {
            let i = n.as_i64().ok_or_else(|| format!("non-integer scalar {n}"))?;
            Ok(Scalar::Fp { p, value: i.rem_euclid(p as i64) as u64 })
        }
        (Domain::Q, serde_json::Value::Number(n)) => {
            let i = n.as_i64().ok_or_else(|| format!("non-integer scalar {n}"))?;
            Ok(Domain::Q.from_i64(i))
        }
        (Domain::Q, serde_json::Value::String(s)) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a, b),
                None => (s.as_str(), "1"),
            };
            let num: BigInt = num.trim().parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
            let den: BigInt = den.trim().parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Scalar::Q(BigRational::new(num, den)))
        }
        (Domain::Fp(_), other) => Err(format!("expected integer scalar, got {other}")),
        (Domain::Q, other) => Err(format!("expected integer or \"num/den\" scalar, got {other}")),
    }
}

/// Canonical JSON form: `Fp` values and integral rationals that fit in
/// `i64` become JSON numbers, everything else a reduced `"num/den"` string.
pub fn scalar_to_json(s: &Scalar) -> serde_json::Value {
    match s {
        Scalar::Fp { value, .. } => serde_json::Value::from(*value),
        Scalar::Q(r) => {
            if r.denom().is_one() {
                if let Some(i) = to_i64(r.numer()) {
                    return serde_json::Value::from(i);
                }
            }
            serde_json::Value::from(format!("{}/{}", r.numer(), r.denom()))
        }
    }
}

fn to_i64(b: &BigInt) -> Option<i64> {
    let s = b.to_string();
    s.parse().ok()
}

/// Sign convention used by parity-twisted structure maps: `(-1)^k`.
pub fn sign(domain: Domain, k: u8) -> Scalar {
    if k % 2 == 0 {
        domain.one()
    } else {
        domain.one().neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5(v: i64) -> Scalar {
        Domain::Fp(5).from_i64(v)
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn fp_arithmetic() {
        assert_eq!(f5(3).add(&f5(4)), f5(2));
        assert_eq!(f5(3).mul(&f5(4)), f5(2));
        assert_eq!(f5(2).neg(), f5(3));
        assert_eq!(f5(0).sub(&f5(1)), f5(4));
        let two = Domain::Fp(2);
        assert_eq!(two.one().add(&two.one()), two.zero());
    }

    #[test]
    fn fp_inverses() {
        assert_eq!(f5(2).inv().unwrap(), f5(3));
        assert_eq!(f5(4).inv().unwrap(), f5(4));
        assert_eq!(f5(0).inv(), None);
        for v in 1..5 {
            assert!(f5(v).mul(&f5(v).inv().unwrap()).is_one());
        }
        let p = Domain::Fp(2147483647);
        let x = p.from_i64(123456789);
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(q(1, 2).add(&q(1, 3)), q(5, 6));
        assert_eq!(q(-2, 3).inv().unwrap(), q(-3, 2));
        assert_eq!(q(2, 4), q(1, 2));
        assert!(q(0, 7).is_zero());
        assert_eq!(q(7, -2).to_string(), "-7/2");
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(2147483647));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91));
    }

    #[test]
    fn json_round_trip() {
        let v = scalar_to_json(&q(5, 6));
        assert_eq!(v, serde_json::Value::from("5/6"));
        assert_eq!(scalar_from_json(Domain::Q, &v).unwrap(), q(5, 6));
        let w = scalar_to_json(&q(7, 1));
        assert_eq!(w, serde_json::Value::from(7));
        let u = scalar_to_json(&f5(-1));
        assert_eq!(u, serde_json::Value::from(4u64));
        assert_eq!(scalar_from_json(Domain::Fp(5), &u).unwrap(), f5(4));
    }

    #[test]
    fn parity_sign() {
        assert!(sign(Domain::Q, 0).is_one());
        assert_eq!(sign(Domain::Fp(3), 1), Domain::Fp(3).from_i64(2));
    }
}
