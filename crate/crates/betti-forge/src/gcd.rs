//! Multivariate GCD over Q via the subresultant pseudo-remainder sequence,
//! recursing on the last variable present. Adequate at desk scale; used for
//! syzygy contents and primitive parts.

use crate::error::EngineError;
use crate::field::{Field, Rationals};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

type QPoly = Polynomial<Rationals>;

/// Highest variable index occurring in p, or None for constants.
fn top_var(p: &QPoly) -> Option<usize> {
    let mut top: Option<usize> = None;
    for (m, _) in p.terms() {
        for v in (0..p.nvars()).rev() {
            if m.exp(v) > 0 {
                top = Some(top.map_or(v, |t: usize| t.max(v)));
                break;
            }
        }
    }
    top
}

/// View p as a univariate polynomial in variable v with polynomial
/// coefficients: returns coefficients indexed by the v-degree.
fn split_by_var(p: &QPoly, v: usize) -> Vec<QPoly> {
    let f = Rationals;
    let dv = p.terms().iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0) as usize;
    let mut coeffs: Vec<Vec<(Monomial, <Rationals as Field>::Elem)>> = vec![Vec::new(); dv + 1];
    for (m, c) in p.terms() {
        let e = m.exp(v) as usize;
        coeffs[e].push((m.with_exp(v, 0), c.clone()));
    }
    coeffs
        .into_iter()
        .map(|ts| Polynomial::from_terms(&f, p.nvars(), ts))
        .collect()
}

fn join_by_var(coeffs: &[QPoly], v: usize, nvars: usize) -> QPoly {
    let f = Rationals;
    let mut terms = Vec::new();
    for (e, c) in coeffs.iter().enumerate() {
        for (m, k) in c.terms() {
            terms.push((m.with_exp(v, e as u16), k.clone()));
        }
    }
    Polynomial::from_terms(&f, nvars, terms)
}

fn deg_in(p: &QPoly, v: usize) -> Option<u16> {
    p.terms().iter().map(|(m, _)| m.exp(v)).max()
}

/// GCD of two polynomials over Q, normalized monic in degrevlex.
pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let g = gcd_raw(a, b);
    g.monic()
}

fn gcd_raw(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let f = Rationals;
    let nv = a.nvars();
    let tv = match (top_var(a), top_var(b)) {
        (None, _) | (_, None) => return Polynomial::one(&f, nv),
        (Some(u), Some(w)) => u.max(w),
    };
    // univariate in tv over the smaller ring
    let (ca, pa) = content_pp(a, tv);
    let (cb, pb) = content_pp(b, tv);
    let cg = gcd_raw(&ca, &cb);
    let pg = subresultant_gcd(&pa, &pb, tv);
    let (_, pg) = content_pp(&pg, tv);
    cg.mul(&pg)
}

/// Content (gcd of v-coefficients) and primitive part w.r.t. variable v.
fn content_pp(p: &QPoly, v: usize) -> (QPoly, QPoly) {
    let coeffs = split_by_var(p, v);
    let mut c = Polynomial::zero(&Rationals, p.nvars());
    for k in coeffs.iter() {
        if !k.is_zero() {
            c = gcd_raw(&c, k);
        }
    }
    c = c.monic();
    let pp = p.exact_div(&c).expect("content must divide");
    (c, pp)
}

/// Pseudo-remainder lc(b)^(deg_a - deg_b + 1) * a mod b w.r.t. variable v.
fn pseudo_rem(a: &QPoly, b: &QPoly, v: usize) -> QPoly {
    let da = deg_in(a, v).unwrap() as i64;
    let db = deg_in(b, v).unwrap() as i64;
    debug_assert!(da >= db && db > 0);
    let lb = split_by_var(b, v).last().unwrap().clone();
    let mut r = a.clone();
    let mut steps = 0i64;
    loop {
        let dr = match deg_in(&r, v) {
            None => break,
            Some(d) => d as i64,
        };
        if dr < db {
            break;
        }
        let lr = split_by_var(&r, v).last().unwrap().clone();
        // r <- lb * r - lr * v^(dr-db) * b
        let shift = Monomial::var(v).pow((dr - db) as u16);
        r = r.mul(&lb).sub(&b.mul(&lr).mul_term(&Rationals.one(), &shift));
        steps += 1;
    }
    // normalize to the standard lc(b)^(delta+1) scaling
    for _ in steps..(da - db + 1) {
        r = r.mul(&lb);
    }
    r
}

/// Subresultant PRS gcd of two v-primitive polynomials.
fn subresultant_gcd(a: &QPoly, b: &QPoly, v: usize) -> QPoly {
    let f = Rationals;
    let nv = a.nvars();
    let (mut r0, mut r1) = if deg_in(a, v).unwrap_or(0) >= deg_in(b, v).unwrap_or(0) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if r1.is_zero() {
        return r0;
    }
    let mut g = Polynomial::one(&f, nv);
    let mut h = Polynomial::one(&f, nv);
    loop {
        let d0 = deg_in(&r0, v).unwrap() as i64;
        let d1 = match deg_in(&r1, v) {
            None => return r0,
            Some(d) => d as i64,
        };
        if d1 == 0 {
            // a nonzero constant (in v) divides only trivially
            return r1;
        }
        let delta = d0 - d1;
        let prem = pseudo_rem(&r0, &r1, v);
        if prem.is_zero() {
            return r1;
        }
        // r2 = prem / (g * h^delta)
        let mut div = g.clone();
        for _ in 0..delta {
            div = div.mul(&h);
        }
        let r2 = prem.exact_div(&div).expect("subresultant division exact");
        // update g, h
        g = split_by_var(&r1, v).last().unwrap().clone();
        // h = g^delta * h^(1-delta)
        h = if delta == 0 {
            h
        } else {
            let mut num = g.clone();
            for _ in 1..delta {
                num = num.mul(&g);
            }
            if delta == 1 {
                num
            } else {
                let mut den = h.clone();
                for _ in 2..delta {
                    den = den.mul(&h);
                }
                num.exact_div(&den).expect("h update exact")
            }
        };
        r0 = r1;
        r1 = r2;
    }
}

/// GCD of a list and the primitive parts: content is monic under degrevlex,
/// content * part_i == component_i exactly.
pub fn content_gcd(components: &[QPoly]) -> Result<(QPoly, Vec<QPoly>), EngineError> {
    if components.is_empty() || components.iter().all(|p| p.is_zero()) {
        return Err(EngineError::AllZeroInput);
    }
    let nv = components[0].nvars();
    let mut c = Polynomial::zero(&Rationals, nv);
    for p in components {
        if p.nvars() != nv {
            return Err(EngineError::IncompatibleOperands);
        }
        if !p.is_zero() {
            c = gcd_raw(&c, p);
        }
    }
    c = c.monic();
    let parts = components
        .iter()
        .map(|p| p.exact_div(&c).expect("content divides each component"))
        .collect();
    Ok((c, parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::VarSet;

    fn q(s: &str) -> QPoly {
        parse_polynomial(s, &VarSet::surface(), &Rationals).unwrap()
    }

    #[test]
    fn gcd_monomials() {
        let (c, parts) = content_gcd(&[q("x*y"), q("x*z")]).unwrap();
        assert_eq!(c, q("x"));
        assert_eq!(parts, vec![q("y"), q("z")]);
    }

    #[test]
    fn coprime_pair() {
        // resultant of x+y, x-y in x is -2y != 0, so the pair is coprime
        let (c, _) = content_gcd(&[q("x + y"), q("x - y")]).unwrap();
        assert_eq!(c, q("1"));
    }

    #[test]
    fn pencil_syzygy_content() {
        // rho^x from the degree-3m pencil family
        let w = q("3*t^3 + x*y*z");
        let comp2 = w.mul(&q("y"));
        let comp3 = w.mul(&q("-z"));
        let zero = Polynomial::zero(&Rationals, 4);
        let (c, parts) = content_gcd(&[zero.clone(), comp2, comp3, zero]).unwrap();
        assert_eq!(c, q("3*t^3 + x*y*z"));
        assert_eq!(parts[1], q("y"));
        assert_eq!(parts[2], q("-z"));
        assert!(parts[0].is_zero());
    }

    #[test]
    fn content_roundtrip_products() {
        let g = q("x^2 + y*t");
        let a = g.mul(&q("x + z"));
        let b = g.mul(&q("y^2 - z*t"));
        let (c, parts) = content_gcd(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(c.mul(&parts[0]), a);
        assert_eq!(c.mul(&parts[1]), b);
        assert_eq!(c, g.monic());
    }

    #[test]
    fn all_zero_rejected() {
        let zero = Polynomial::zero(&Rationals, 4);
        assert!(matches!(
            content_gcd(&[zero.clone(), zero]),
            Err(EngineError::AllZeroInput)
        ));
    }

    #[test]
    fn scalar_inputs() {
        let (c, parts) = content_gcd(&[q("6"), q("4")]).unwrap();
        assert_eq!(c, q("1"));
        assert_eq!(parts[0], q("6"));
        assert_eq!(parts[1], q("4"));
    }
}
