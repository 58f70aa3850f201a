//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are kept sorted in descending degrevlex order with no zero
//! coefficients, so equality is structural and the leading term is `terms[0]`.

use crate::error::EngineError;
use crate::field::Field;
use crate::monomial::{Monomial, MAX_VARS};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// An ordered set of ring variables; 3 for the curve ring R, 4 for the
/// surface ring S. The order is fixed for the lifetime of a computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new(names: &[&str]) -> Result<Self, EngineError> {
        if names.len() < 3 || names.len() > 4 {
            return Err(EngineError::Validation(format!(
                "variable set must have 3 or 4 variables, got {}",
                names.len()
            )));
        }
        let mut seen = Vec::new();
        for n in names {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(EngineError::Validation(format!("bad variable name '{n}'")));
            }
            if seen.contains(n) {
                return Err(EngineError::Validation(format!("duplicate variable '{n}'")));
            }
            seen.push(n);
        }
        Ok(VarSet {
            names: names.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// x, y, z, t — the surface ring.
    pub fn surface() -> Self {
        VarSet::new(&["x", "y", "z", "t"]).unwrap()
    }

    /// x, y, z — the plane curve ring.
    pub fn curve() -> Self {
        VarSet::new(&["x", "y", "z"]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        if i < self.names.len() {
            &self.names[i]
        } else {
            // auxiliary Rabinowitsch slot
            "w_"
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: u8,
    /// Sorted descending by degrevlex; no zero coefficients.
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Polynomial {
            field: field.clone(),
            nvars: nvars as u8,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        if !field.is_zero(&c) {
            p.terms.push((Monomial::one(), c));
        }
        p
    }

    pub fn one(field: &F, nvars: usize) -> Self {
        let c = field.one();
        Self::constant(field, nvars, c)
    }

    pub fn variable(field: &F, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut p = Self::zero(field, nvars);
        p.terms.push((Monomial::var(i), field.one()));
        p
    }

    pub fn monomial_term(field: &F, nvars: usize, m: Monomial, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        if !field.is_zero(&c) {
            p.terms.push((m, c));
        }
        p
    }

    /// Build from arbitrary (monomial, coefficient) pairs: sorts, combines,
    /// and drops zeros.
    pub fn from_terms(field: &F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = field.add(&last.1, &c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial {
            field: field.clone(),
            nvars: nvars as u8,
            terms: out,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|(m, _)| *m)
    }

    pub fn leading_coeff(&self) -> Option<F::Elem> {
        self.terms.first().map(|(_, c)| c.clone())
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Some(d) when all terms share total degree d; zero counts as
    /// homogeneous of any degree and reports None inside Ok.
    pub fn homogeneous_degree(&self) -> Result<Option<u16>, EngineError> {
        let Some(first) = self.terms.first() else {
            return Ok(None);
        };
        let d = first.0.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Ok(Some(d))
        } else {
            Err(EngineError::Inhomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_ok()
    }

    fn check_compat(&self, other: &Self) -> Result<(), EngineError> {
        if self.field != other.field || self.nvars != other.nvars {
            return Err(EngineError::IncompatibleOperands);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.check_compat(other).is_ok());
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&self.terms[i].1, &other.terms[j].1);
                    if !f.is_zero(&c) {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.nvars as usize);
        }
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (*m, f.mul(k, c))).collect(),
        }
    }

    /// Multiply by coeff * monomial. Preserves term order.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.nvars as usize);
        }
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), f.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.check_compat(other).is_ok());
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f, self.nvars as usize);
        }
        // accumulate into a map, then normalize
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 4);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = f.mul(c1, c2);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = f.add(e.get(), &c);
                        *e.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let terms: Vec<_> = acc.into_iter().collect();
        Self::from_terms(f, self.nvars as usize, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let f = &self.field;
        let mut acc = Self::one(f, self.nvars as usize);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `v`.
    pub fn partial_derivative(&self, v: usize) -> Self {
        assert!(v < self.nvars as usize);
        let f = &self.field;
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let c2 = f.mul(c, &f.from_i64(e as i64));
            if f.is_zero(&c2) {
                continue;
            }
            terms.push((m.with_exp(v, e - 1), c2));
        }
        Self::from_terms(f, self.nvars as usize, terms)
    }

    /// Divide every coefficient so the leading coefficient becomes one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                if self.field.is_one(&lc) {
                    self.clone()
                } else {
                    self.scalar_mul(&self.field.inv(&lc))
                }
            }
        }
    }

    /// Re-embed in a ring with more variables (indices preserved).
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars as usize && nvars <= MAX_VARS);
        let mut p = self.clone();
        p.nvars = nvars as u8;
        p
    }

    /// Exact division by `g`: returns Some(q) with self == q*g, else None.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        debug_assert!(self.check_compat(g).is_ok());
        let f = &self.field;
        if self.is_zero() {
            return Some(Self::zero(f, self.nvars as usize));
        }
        let (glm, glc) = g.leading_term()?;
        let glm = *glm;
        let glc = glc.clone();
        let mut rem = self.clone();
        let mut q_terms = Vec::new();
        while let Some((rlm, rlc)) = rem.leading_term() {
            let qm = glm.div_into(rlm)?;
            let qc = f.div(rlc, &glc);
            rem = rem.sub(&g.mul_term(&qc, &qm));
            q_terms.push((qm, qc));
        }
        Some(Self::from_terms(f, self.nvars as usize, q_terms))
    }

    /// Substitute polynomials for each variable (used by tests and the
    /// Euler identity check). `subs[i]` replaces variable i.
    pub fn substitute(&self, subs: &[Polynomial<F>]) -> Self {
        let f = &self.field;
        let n = self.nvars as usize;
        assert!(subs.len() >= n);
        let mut out = Self::zero(f, subs[0].nvars as usize);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(f, subs[0].nvars as usize, c.clone());
            for (v, s) in subs.iter().enumerate().take(n) {
                let e = m.exp(v);
                if e > 0 {
                    t = t.mul(&s.pow(e as u32));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Render with the given variable names; inverse of the expression parser.
    pub fn to_text(&self, vars: &VarSet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = &self.field;
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = f.render_signed(c);
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            let coeff_is_one = mag == "1";
            if !coeff_is_one || m.is_one() {
                factors.push(mag.clone());
            }
            for v in 0..self.nvars as usize {
                let e = m.exp(v);
                if e == 1 {
                    factors.push(vars.name(v).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", vars.name(v), e));
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = if self.nvars() <= 3 {
            VarSet::curve()
        } else {
            VarSet::surface()
        };
        write!(fm, "{}", self.to_text(&vars))
    }
}

/// The binary polynomial operations behind one checked entry point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic: rejects operands from different fields or rings.
pub fn poly_arith<F: Field>(
    op: PolyOp,
    a: &Polynomial<F>,
    b: &Polynomial<F>,
) -> Result<Polynomial<F>, EngineError> {
    a.check_compat(b)?;
    Ok(match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_polynomial;

    fn q(s: &str) -> Polynomial<Rationals> {
        parse_polynomial(s, &VarSet::surface(), &Rationals).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let x = q("x");
        assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(q("x+y").mul(&q("x-y")), q("x^2 - y^2"));
    }

    #[test]
    fn square_by_repeated_mul_oracle() {
        // oracle: repeated multiplication
        let f = q("x^3 - y*z*t");
        let by_mul = f.mul(&f);
        assert_eq!(f.pow(2), by_mul);
        assert_eq!(by_mul, q("x^6 - 2*x^3*y*z*t + y^2*z^2*t^2"));
    }

    #[test]
    fn partials() {
        let f = q("x*y*z - t^3");
        assert_eq!(f.partial_derivative(3), q("-3*t^2"));
        assert_eq!(f.partial_derivative(0), q("y*z"));
        let g = q("x^3 - y*z*t");
        assert_eq!(g.partial_derivative(0), q("3*x^2"));
        assert_eq!(g.partial_derivative(1), q("-z*t"));
    }

    #[test]
    fn euler_identity_degree3() {
        // x f_x + y f_y + z f_z + t f_t = 3 f for homogeneous degree-3 f
        let f = q("x*y*z - t^3");
        let vars = VarSet::surface();
        let mut acc = Polynomial::zero(&Rationals, 4);
        for v in 0..vars.len() {
            let xv = Polynomial::variable(&Rationals, 4, v);
            acc = acc.add(&xv.mul(&f.partial_derivative(v)));
        }
        assert_eq!(acc, f.scalar_mul(&Rationals.from_i64(3)));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(q("x*y*z - t^3").homogeneous_degree().unwrap(), Some(3));
        assert!(q("x + x*y").homogeneous_degree().is_err());
        let prod = q("x+y").mul(&q("x^2 - z*t"));
        assert_eq!(prod.homogeneous_degree().unwrap(), Some(3));
    }

    #[test]
    fn incompatible_operands_rejected() {
        let a = q("x");
        let b = parse_polynomial("x", &VarSet::curve(), &Rationals).unwrap();
        assert!(matches!(
            poly_arith(PolyOp::Add, &a, &b),
            Err(EngineError::IncompatibleOperands)
        ));
    }

    #[test]
    fn exact_division() {
        let f = q("x^2 - y^2");
        let g = q("x + y");
        let h = f.exact_div(&g).unwrap();
        assert_eq!(h, q("x - y"));
        assert!(q("x^2 + y^2").exact_div(&g).is_none());
    }

    #[test]
    fn print_parse_roundtrip_simple() {
        let vars = VarSet::surface();
        let f = q("-x^2 + 3*y*t - 1/2*z^2");
        let s = f.to_text(&vars);
        assert_eq!(parse_polynomial(&s, &vars, &Rationals).unwrap(), f);
    }
}
