//! Term orders on free modules.
//!
//! The ring order is degrevlex throughout (it is baked into `Monomial`'s
//! `Ord`). Module computations use either position-over-term or a Schreyer
//! order induced by a generator list; the Schreyer comparison is flattened
//! to one degrevlex comparison on precomputed total monomials plus a
//! lexicographic tie-break along the component path.

use crate::monomial::Monomial;
use std::cmp::Ordering;

/// Per-component data for a flattened Schreyer order: `totalmon` is the
/// product of lead monomials down to the ring, `path` the chain of lead
/// components (innermost first) used to break ties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerKey {
    pub totalmon: Monomial,
    pub path: Vec<u32>,
}

#[derive(Clone, Debug)]
pub enum ModuleOrder {
    /// Position over term: lower component index wins, then degrevlex.
    Pot,
    /// Induced by a generator list one level down.
    Schreyer(Vec<SchreyerKey>),
}

impl ModuleOrder {
    /// Compare module terms (monomial, component).
    pub fn cmp_terms(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        match self {
            ModuleOrder::Pot => match b.1.cmp(&a.1) {
                Ordering::Equal => a.0.cmp(b.0),
                o => o,
            },
            ModuleOrder::Schreyer(keys) => {
                let ka = &keys[a.1 as usize];
                let kb = &keys[b.1 as usize];
                let ma = a.0.mul(&ka.totalmon);
                let mb = b.0.mul(&kb.totalmon);
                match ma.cmp(&mb) {
                    Ordering::Equal => {}
                    o => return o,
                }
                // smaller path entry = larger term
                for (pa, pb) in ka.path.iter().zip(kb.path.iter()) {
                    match pb.cmp(pa) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                b.1.cmp(&a.1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn pot_order() {
        let o = ModuleOrder::Pot;
        // component 0 beats component 1 regardless of monomial
        assert_eq!(o.cmp_terms((&m(&[0, 0]), 0), (&m(&[5, 0]), 1)), Ordering::Greater);
        assert_eq!(o.cmp_terms((&m(&[2, 0]), 1), (&m(&[1, 0]), 1)), Ordering::Greater);
    }

    #[test]
    fn schreyer_order() {
        // generators with lead monomials x^2 (comp 0) and y^2 (comp 1):
        // term y^2*e0 vs x^2*e1 compares x^2y^2 vs x^2y^2, tie broken by
        // the top-level component (smaller index larger)
        let keys = vec![
            SchreyerKey {
                totalmon: m(&[2, 0]),
                path: vec![],
            },
            SchreyerKey {
                totalmon: m(&[0, 2]),
                path: vec![],
            },
        ];
        let o = ModuleOrder::Schreyer(keys);
        assert_eq!(
            o.cmp_terms((&m(&[0, 2]), 0), (&m(&[2, 0]), 1)),
            Ordering::Greater
        );
        // plain monomial dominance
        assert_eq!(
            o.cmp_terms((&m(&[3, 0]), 1), (&m(&[0, 0]), 0)),
            Ordering::Greater
        );
    }
}
