//! Differential forms with polynomial coefficients on the basis of
//! ascending wedge products of the coordinate differentials.

use crate::error::EngineError;
use crate::field::Field;
use crate::poly::Polynomial;
use std::collections::BTreeMap;

/// A variable subset as a bitmask; bit i set means dx_i is a factor, and
/// the stored coefficient refers to the ascending-order wedge product.
pub type Subset = u8;

pub fn subset_from(vars: &[usize]) -> Subset {
    let mut m = 0u8;
    for &v in vars {
        m |= 1 << v;
    }
    m
}

pub fn subset_vars(s: Subset) -> Vec<usize> {
    (0..8).filter(|i| s & (1 << i) != 0).collect()
}

/// Sign of merging two disjoint ascending subsets into one: (-1)^inversions.
fn merge_sign(a: Subset, b: Subset) -> i32 {
    let mut inv = 0;
    for i in subset_vars(a) {
        for j in subset_vars(b) {
            if j < i {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A homogeneous-grade differential form. Grade 0 is allowed internally
/// (a plain polynomial); §-level operations use grades 1..3.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DifferentialForm<F: Field> {
    field: F,
    nvars: usize,
    grade: u8,
    comps: BTreeMap<Subset, Polynomial<F>>,
}

impl<F: Field> DifferentialForm<F> {
    pub fn zero(field: &F, nvars: usize, grade: u8) -> Self {
        DifferentialForm {
            field: field.clone(),
            nvars,
            grade,
            comps: BTreeMap::new(),
        }
    }

    pub fn grade(&self) -> u8 {
        self.grade
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> &BTreeMap<Subset, Polynomial<F>> {
        &self.comps
    }

    pub fn component(&self, vars: &[usize]) -> Polynomial<F> {
        self.comps
            .get(&subset_from(vars))
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.field, self.nvars))
    }

    pub fn set_component(&mut self, vars: &[usize], p: Polynomial<F>) {
        assert_eq!(vars.len(), self.grade as usize);
        let s = subset_from(vars);
        if p.is_zero() {
            self.comps.remove(&s);
        } else {
            self.comps.insert(s, p);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.grade, other.grade);
        let mut out = self.clone();
        for (s, p) in &other.comps {
            let q = match out.comps.get(s) {
                Some(existing) => existing.add(p),
                None => p.clone(),
            };
            if q.is_zero() {
                out.comps.remove(s);
            } else {
                out.comps.insert(*s, q);
            }
        }
        out
    }

    pub fn scale(&self, p: &Polynomial<F>) -> Self {
        let mut out = Self::zero(&self.field, self.nvars, self.grade);
        for (s, q) in &self.comps {
            let r = q.mul(p);
            if !r.is_zero() {
                out.comps.insert(*s, r);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for (_, p) in out.comps.iter_mut() {
            *p = p.neg();
        }
        out
    }

    /// The basis 1-form dx_v.
    pub fn d_var(field: &F, nvars: usize, v: usize) -> Self {
        let mut f = Self::zero(field, nvars, 1);
        f.set_component(&[v], Polynomial::one(field, nvars));
        f
    }

    /// Graded-antisymmetric wedge product with ascending-subset signs.
    pub fn wedge(&self, other: &Self) -> Result<Self, EngineError> {
        let g = self.grade + other.grade;
        if g as usize > self.nvars {
            return Err(EngineError::GradeOverflow);
        }
        let field = &self.field;
        let mut out = Self::zero(field, self.nvars, g);
        for (sa, pa) in &self.comps {
            for (sb, pb) in &other.comps {
                if sa & sb != 0 {
                    continue;
                }
                let sign = merge_sign(*sa, *sb);
                let mut p = pa.mul(pb);
                if sign < 0 {
                    p = p.neg();
                }
                let s = sa | sb;
                let q = match out.comps.get(&s) {
                    Some(existing) => existing.add(&p),
                    None => p,
                };
                if q.is_zero() {
                    out.comps.remove(&s);
                } else {
                    out.comps.insert(s, q);
                }
            }
        }
        Ok(out)
    }
}

/// The exterior differential of a polynomial: a grade-1 form whose
/// v-component is the partial derivative with respect to v.
pub fn differential<F: Field>(f: &Polynomial<F>) -> DifferentialForm<F> {
    let field = f.field().clone();
    let n = f.nvars();
    let mut out = DifferentialForm::zero(&field, n, 1);
    for v in 0..n {
        let p = f.partial_derivative(v);
        if !p.is_zero() {
            out.set_component(&[v], p);
        }
    }
    out
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
    fn dx_wedge_dy() {
        let dx = DifferentialForm::d_var(&Rationals, 4, 0);
        let dy = DifferentialForm::d_var(&Rationals, 4, 1);
        let w = dx.wedge(&dy).unwrap();
        assert_eq!(w.component(&[0, 1]), q("1"));
        assert_eq!(w.components().len(), 1);
        // antisymmetry
        let w2 = dy.wedge(&dx).unwrap();
        assert_eq!(w2.component(&[0, 1]), q("-1"));
        assert!(dx.wedge(&dx).unwrap().is_zero());
    }

    #[test]
    fn differential_of_cubic() {
        let f = q("x*y*z - t^3");
        let df = differential(&f);
        assert_eq!(df.component(&[0]), q("y*z"));
        assert_eq!(df.component(&[1]), q("x*z"));
        assert_eq!(df.component(&[2]), q("x*y"));
        assert_eq!(df.component(&[3]), q("-3*t^2"));
        let c = Polynomial::constant(&Rationals, 4, Rationals.from_i64(5));
        assert!(differential(&c).is_zero());
        let g = q("x^3 - y*z*t");
        let dg = differential(&g);
        assert_eq!(dg.component(&[0]), q("3*x^2"));
        assert_eq!(dg.component(&[1]), q("-z*t"));
        assert_eq!(dg.component(&[2]), q("-y*t"));
        assert_eq!(dg.component(&[3]), q("-y*z"));
    }

    #[test]
    fn pencil_two_form_components() {
        // dg ^ dh for g = x^3 - yzt, h = t^3 - xyz
        let g = q("x^3 - y*z*t");
        let h = q("t^3 - x*y*z");
        let w = differential(&g).wedge(&differential(&h)).unwrap();
        assert_eq!(w.component(&[0, 3]), q("9*x^2*t^2 - y^2*z^2"));
        assert_eq!(w.component(&[0, 1]), q("-z*(3*x^3 + y*z*t)"));
        assert_eq!(w.component(&[0, 2]), q("-y*(3*x^3 + y*z*t)"));
        assert_eq!(w.component(&[1, 2]), q("0"));
        assert_eq!(w.component(&[1, 3]), q("-z*(3*t^3 + x*y*z)"));
        assert_eq!(w.component(&[2, 3]), q("-y*(3*t^3 + x*y*z)"));
    }

    #[test]
    fn grade_overflow() {
        let dx = DifferentialForm::d_var(&Rationals, 4, 0);
        let dy = DifferentialForm::d_var(&Rationals, 4, 1);
        let dz = DifferentialForm::d_var(&Rationals, 4, 2);
        let dt = DifferentialForm::d_var(&Rationals, 4, 3);
        let w3 = dx.wedge(&dy).unwrap().wedge(&dz).unwrap();
        let w4 = w3.wedge(&dt).unwrap();
        assert_eq!(w4.grade(), 4);
        assert!(w4.wedge(&dx).is_err());
    }

    #[test]
    fn leibniz_rule() {
        // d(fg) = f dg + g df
        let f = q("x^2 + y*t");
        let g = q("z^3 - x*y*t");
        let lhs = differential(&f.mul(&g));
        let rhs = differential(&g).scale(&f).add(&differential(&f).scale(&g));
        assert_eq!(lhs, rhs);
    }
}
