//! Coefficient fields: exact rationals and prime fields GF(p).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A field of coefficients. The field object itself carries any runtime data
/// (the modulus for GF(p)); elements are plain values.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero; callers guard.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// num/den with den nonzero.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Self::Elem;
    /// Render an element so that the polynomial parser reads it back.
    fn render(&self, a: &Self::Elem) -> String;
    /// Split into (is_negative, magnitude-rendering) for pretty printing.
    /// GF(p) residues are never treated as negative.
    fn render_signed(&self, a: &Self::Elem) -> (bool, String);
    /// True when the field is a prime field (results carry a modular caveat).
    fn is_modular(&self) -> bool;
    /// A common content to divide a coefficient list by, used to control
    /// growth over Q. None means "nothing useful to strip".
    fn common_content(&self, coeffs: &[Self::Elem]) -> Option<Self::Elem>;
    /// Rough size in bits, used to decide when to strip content.
    fn size_hint(&self, a: &Self::Elem) -> usize;
}

/// The rational numbers, with every element kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> BigRational {
        BigRational::new(num.clone(), den.clone())
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn render_signed(&self, a: &BigRational) -> (bool, String) {
        let neg = a.is_negative();
        let abs = if neg { -a } else { a.clone() };
        (neg, self.render(&abs))
    }
    fn is_modular(&self) -> bool {
        false
    }
    fn common_content(&self, coeffs: &[BigRational]) -> Option<BigRational> {
        use num_integer::Integer;
        if coeffs.is_empty() {
            return None;
        }
        let mut gnum = BigInt::zero();
        let mut lden = BigInt::one();
        for c in coeffs {
            gnum = gnum.gcd(c.numer());
            lden = lden.lcm(c.denom());
        }
        if gnum.is_zero() {
            return None;
        }
        let content = BigRational::new(gnum, lden);
        if content.is_one() {
            None
        } else {
            Some(content)
        }
    }
    fn size_hint(&self, a: &BigRational) -> usize {
        (a.numer().bits() + a.denom().bits()) as usize
    }
}

/// GF(p) for an odd prime p, elements stored as reduced residues.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

/// The default modulus used for fast modular runs.
pub const DEFAULT_PRIME: u64 = 32003;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, String> {
        if p < 3 {
            return Err(format!("modulus {p} too small; need an odd prime"));
        }
        if !is_prime_u64(p) {
            return Err(format!("modulus {p} is not prime"));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc: u64 = 1;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            e >>= 1;
        }
        acc
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    // deterministic Miller-Rabin for u64
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x: u128 = 1;
        let mut base = (a % n) as u128;
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                x = x * base % n as u128;
            }
            base = base * base % n as u128;
            e >>= 1;
        }
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, n: i64) -> u64 {
        let p = self.p as i128;
        (((n as i128 % p) + p) % p) as u64
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        use num_integer::Integer;
        let (_, r) = n.div_mod_floor(&BigInt::from(self.p));
        let digits = r.to_u64_digits().1;
        if digits.is_empty() {
            0
        } else {
            digits[0]
        }
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> u64 {
        let d = self.from_bigint(den);
        assert!(d != 0, "denominator divisible by {}", self.p);
        self.mul(&self.from_bigint(num), &self.inv(&d))
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn render_signed(&self, a: &u64) -> (bool, String) {
        (false, a.to_string())
    }
    fn is_modular(&self) -> bool {
        true
    }
    fn common_content(&self, _coeffs: &[u64]) -> Option<u64> {
        None
    }
    fn size_hint(&self, _a: &u64) -> usize {
        0
    }
}

/// Runtime tag for selecting a field from CLI flags or file headers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldTag {
    Rationals,
    Prime(u64),
}

impl FieldTag {
    /// Parse "q" | "Q" | "fp:<p>" | "gf:<p>".
    pub fn parse(s: &str) -> Result<Self, String> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" {
            return Ok(FieldTag::Rationals);
        }
        if let Some(rest) = t.strip_prefix("fp:").or_else(|| t.strip_prefix("gf:")) {
            let p: u64 = rest
                .parse()
                .map_err(|_| format!("bad modulus in field spec '{s}'"))?;
            PrimeField::new(p)?;
            return Ok(FieldTag::Prime(p));
        }
        Err(format!("unknown field spec '{s}' (expected q or fp:<p>)"))
    }

    pub fn name(&self) -> String {
        match self {
            FieldTag::Rationals => "Q".into(),
            FieldTag::Prime(p) => format!("GF({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.add(&32000, &10), 7);
        assert_eq!(f.mul(&f.inv(&12345), &12345), 1);
        assert_eq!(f.from_i64(-1), 32002);
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(2).is_err());
    }

    #[test]
    fn rational_normal_form() {
        let f = Rationals;
        let half = f.from_ratio(&BigInt::from(2), &BigInt::from(4));
        assert_eq!(f.render(&half), "1/2");
        let neg = f.from_ratio(&BigInt::from(3), &BigInt::from(-6));
        assert_eq!(f.render(&neg), "-1/2");
    }

    #[test]
    fn field_tag_parse() {
        assert_eq!(FieldTag::parse("q").unwrap(), FieldTag::Rationals);
        assert_eq!(FieldTag::parse("fp:32003").unwrap(), FieldTag::Prime(32003));
        assert!(FieldTag::parse("fp:32004").is_err());
    }
}
