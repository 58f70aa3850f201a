//! Packed exponent vectors with the degree-reverse-lexicographic order.

use std::cmp::Ordering;

/// Hard cap on ring variables: 3 or 4 user variables plus one auxiliary
/// slot for the Rabinowitsch trick.
pub const MAX_VARS: usize = 5;

/// A monomial as a packed exponent vector. Unused slots stay zero, so the
/// same representation serves 3-, 4- and 5-variable rings. `Ord` is
/// degrevlex with earlier variables larger (x > y > z > t > w).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u16,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            deg: 0,
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
        }
        m.deg = m.exps.iter().sum();
        m
    }

    #[inline]
    pub fn degree(&self) -> u16 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn pow(&self, e: u16) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].checked_mul(e).expect("monomial exponent overflow");
        }
        Monomial {
            exps,
            deg: self.deg.checked_mul(e).expect("monomial degree overflow"),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// other / self, when self divides other.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            if self.exps[i] > other.exps[i] {
                return None;
            }
            exps[i] = other.exps[i] - self.exps[i];
        }
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
        }
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Set the exponent of one variable, used when moving between rings.
    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[i] + e;
        m.exps[i] = e;
        m
    }

    /// Plain lexicographic comparison of exponent vectors (x first).
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Degree in a single variable.
    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }
}

impl Ord for Monomial {
    /// Degrevlex: higher total degree wins; on equal degree the monomial
    /// with the smaller exponent at the last differing variable is larger.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            if self.exps[i] != other.exps[i] {
                return other.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Enumerate all monomials of total degree `d` in the first `nvars`
/// variables, in no particular order.
pub fn monomials_of_degree(nvars: usize, d: u16) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = [0u16; MAX_VARS];
    fn rec(out: &mut Vec<Monomial>, exps: &mut [u16; MAX_VARS], var: usize, nvars: usize, left: u16) {
        if var + 1 == nvars {
            exps[var] = left;
            out.push(Monomial::from_exps(&exps[..nvars]));
            exps[var] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(out, exps, var + 1, nvars, left - e);
        }
        exps[var] = 0;
    }
    rec(&mut out, &mut exps, 0, nvars, d);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn degrevlex_order() {
        // x^2 > xy > y^2 > xz > yz > z^2 in degrevlex with x>y>z
        let x2 = m(&[2, 0, 0]);
        let xy = m(&[1, 1, 0]);
        let xz = m(&[1, 0, 1]);
        let y2 = m(&[0, 2, 0]);
        let yz = m(&[0, 1, 1]);
        let z2 = m(&[0, 0, 2]);
        let mut v = vec![yz, y2, x2, xz, xy, z2];
        v.sort();
        assert_eq!(v, vec![z2, yz, xz, y2, xy, x2]);
        // degree dominates
        assert!(m(&[0, 0, 3]) > x2);
        // degrevlex differs from lex: x*z^2 vs y^3
        assert!(m(&[0, 3, 0]) > m(&[1, 0, 2]));
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 1, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.div_into(&a).unwrap(), m(&[1, 0, 0]));
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[2, 2, 1]));
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 2, 1])));
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(4, 3).len(), 20); // C(6,3)
        assert_eq!(monomials_of_degree(3, 5).len(), 21); // C(7,2)
    }
}
