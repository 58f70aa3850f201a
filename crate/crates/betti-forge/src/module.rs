//! Elements of graded free modules, stored as sparse component vectors.

use crate::error::EngineError;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use crate::poly::Polynomial;

/// An element of a free module S^r: nonzero components only, sorted by
/// component index. Rank-1 elements double as ring polynomials inside the
/// Gröbner engine.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModElem<F: Field> {
    comps: Vec<(u32, Polynomial<F>)>,
}

impl<F: Field> ModElem<F> {
    pub fn zero() -> Self {
        ModElem { comps: Vec::new() }
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        Self::from_comps(vec![(0, p)])
    }

    pub fn from_comps(comps: Vec<(u32, Polynomial<F>)>) -> Self {
        let mut comps: Vec<_> = comps.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        comps.sort_by_key(|(c, _)| *c);
        for w in comps.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate component index");
        }
        ModElem { comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn comps(&self) -> &[(u32, Polynomial<F>)] {
        &self.comps
    }

    pub fn component(&self, c: u32) -> Option<&Polynomial<F>> {
        self.comps
            .binary_search_by_key(&c, |(i, _)| *i)
            .ok()
            .map(|i| &self.comps[i].1)
    }

    /// Dense component list of the given rank.
    pub fn to_dense(&self, rank: usize, field: &F, nvars: usize) -> Vec<Polynomial<F>> {
        let mut out = vec![Polynomial::zero(field, nvars); rank];
        for (c, p) in &self.comps {
            out[*c as usize] = p.clone();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out: Vec<(u32, Polynomial<F>)> = Vec::with_capacity(self.comps.len() + other.comps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.comps.len() && j < other.comps.len() {
            match self.comps[i].0.cmp(&other.comps[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.comps[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.comps[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let p = self.comps[i].1.add(&other.comps[j].1);
                    if !p.is_zero() {
                        out.push((self.comps[i].0, p));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.comps[i..]);
        out.extend(other.comps[j..].iter().cloned());
        ModElem { comps: out }
    }

    pub fn neg(&self) -> Self {
        ModElem {
            comps: self.comps.iter().map(|(c, p)| (*c, p.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, k: &F::Elem, field: &F) -> Self {
        if field.is_zero(k) {
            return Self::zero();
        }
        ModElem {
            comps: self.comps.iter().map(|(c, p)| (*c, p.scalar_mul(k))).collect(),
        }
    }

    /// Multiply by coeff * monomial.
    pub fn mul_term(&self, k: &F::Elem, m: &Monomial, field: &F) -> Self {
        if field.is_zero(k) {
            return Self::zero();
        }
        ModElem {
            comps: self.comps.iter().map(|(c, p)| (*c, p.mul_term(k, m))).collect(),
        }
    }

    pub fn mul_poly(&self, q: &Polynomial<F>) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        ModElem {
            comps: self
                .comps
                .iter()
                .map(|(c, p)| (*c, p.mul(q)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Leading term under the given module order: (monomial, component, coeff).
    pub fn lead(&self, order: &ModuleOrder) -> Option<(Monomial, u32, F::Elem)> {
        let mut best: Option<(Monomial, u32, F::Elem)> = None;
        for (c, p) in &self.comps {
            let (m, k) = p.leading_term()?;
            match &best {
                None => best = Some((*m, *c, k.clone())),
                Some((bm, bc, _)) => {
                    if order.cmp_terms((m, *c), (bm, *bc)) == std::cmp::Ordering::Greater {
                        best = Some((*m, *c, k.clone()));
                    }
                }
            }
        }
        best
    }

    /// Divide so the leading coefficient becomes one.
    pub fn monic(&self, order: &ModuleOrder, field: &F) -> Self {
        match self.lead(order) {
            None => self.clone(),
            Some((_, _, lc)) => {
                if field.is_one(&lc) {
                    self.clone()
                } else {
                    self.scalar_mul(&field.inv(&lc), field)
                }
            }
        }
    }

    /// Degree of a homogeneous element w.r.t. the ambient shifts: every
    /// nonzero term must satisfy deg(mono) + shift[comp] = const.
    pub fn homogeneous_degree(&self, shifts: &[i64]) -> Result<Option<i64>, EngineError> {
        let mut deg: Option<i64> = None;
        for (c, p) in &self.comps {
            for (m, _) in p.terms() {
                let d = m.degree() as i64 + shifts[*c as usize];
                match deg {
                    None => deg = Some(d),
                    Some(d0) => {
                        if d0 != d {
                            return Err(EngineError::Inhomogeneous);
                        }
                    }
                }
            }
        }
        Ok(deg)
    }

    /// Total number of terms across components.
    pub fn num_terms(&self) -> usize {
        self.comps.iter().map(|(_, p)| p.num_terms()).sum()
    }

    /// Evaluate sum_i comps_i * gens_i — zero iff self is a syzygy of gens.
    pub fn apply_to(&self, gens: &[ModElem<F>]) -> ModElem<F> {
        let mut acc = ModElem::zero();
        for (c, p) in &self.comps {
            acc = acc.add(&gens[*c as usize].mul_poly(p));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_polynomial;
    use crate::poly::VarSet;

    fn q(s: &str) -> Polynomial<Rationals> {
        parse_polynomial(s, &VarSet::surface(), &Rationals).unwrap()
    }

    #[test]
    fn lead_under_pot() {
        let v = ModElem::from_comps(vec![(1, q("x^2")), (0, q("y"))]);
        let (m, c, _) = v.lead(&ModuleOrder::Pot).unwrap();
        assert_eq!(c, 0);
        assert_eq!(m, crate::monomial::Monomial::var(1));
    }

    #[test]
    fn syzygy_application() {
        // (y, -x) applied to (x, y) is zero
        let gens = vec![ModElem::from_poly(q("x")), ModElem::from_poly(q("y"))];
        let syz = ModElem::from_comps(vec![(0, q("y")), (1, q("-x"))]);
        assert!(syz.apply_to(&gens).is_zero());
    }

    #[test]
    fn homogeneity_with_shifts() {
        // component degrees 2 and 1 against shifts 0 and 1: homogeneous of degree 2
        let v = ModElem::from_comps(vec![(0, q("x^2")), (1, q("y"))]);
        assert_eq!(v.homogeneous_degree(&[0, 1]).unwrap(), Some(2));
        assert!(v.homogeneous_degree(&[0, 0]).is_err());
    }
}
