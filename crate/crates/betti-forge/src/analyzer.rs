//! The full analysis pipeline for a surface or plane curve: Jacobian ideal,
//! resolution, Betti data, Hilbert classification, bound windows, type
//! invariant, mdr, and the syzygy determinant test.

use crate::error::EngineError;
use crate::field::Field;
use crate::hilbert::{
    classify_and_polynomial, hilbert_from_betti, HilbertPolynomial, SigmaDimension,
};
use crate::poly::Polynomial;
use crate::report::{
    BettiJson, BoundsJson, CurveBettiJson, CurveReport, HilbertPolyJson, IdentitiesJson,
    NotReducedReport, SurfaceReport, TypeJson, UpperBoundJson, WindowJson, SCHEMA,
};
use crate::resfmt::format_resolution;
use crate::resolution::{
    ar_generators_and_mdr, extract_betti, minimalize, quotient_dim_from_gb,
    schreyer_resolution, ArData, BettiData, Complex, ExtractError,
};
use num_rational::Rational64;

/// Options for a surface run.
#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    /// The input is asserted nodal by the caller; fills the nodal mdr bound.
    pub assume_nodal: bool,
    /// Compute mdr(f) by reducing the syzygy generators modulo the Koszul
    /// submodule (skippable for speed).
    pub compute_mdr: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            assume_nodal: false,
            compute_mdr: true,
        }
    }
}

/// Failure modes of an analysis run.
#[derive(Debug)]
pub enum AnalyzeError {
    Engine(EngineError),
    /// The resolution does not have the reduced-surface shape: the
    /// Theorem-1(1) identity path concluded dim Sigma >= 2 (or the input is
    /// otherwise degenerate, e.g. a cone). Carries the partial data.
    NotReduced(Box<NotReducedReport>),
}

impl From<EngineError> for AnalyzeError {
    fn from(e: EngineError) -> Self {
        AnalyzeError::Engine(e)
    }
}

impl std::fmt::Display for AnalyzeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnalyzeError::Engine(e) => write!(f, "{e}"),
            AnalyzeError::NotReduced(r) => write!(f, "{}", r.diagnostic),
        }
    }
}

impl std::error::Error for AnalyzeError {}

/// The partial derivatives of a homogeneous f of degree >= 3, in variable
/// order. Zero partials are kept (flagged downstream).
pub fn jacobian_generators<F: Field>(
    f: &Polynomial<F>,
) -> Result<Vec<Polynomial<F>>, EngineError> {
    let d = f
        .homogeneous_degree()?
        .ok_or_else(|| EngineError::Validation("zero polynomial".into()))?;
    if d < 3 {
        return Err(EngineError::Validation(format!(
            "degree must be at least 3, got {d}"
        )));
    }
    Ok((0..f.nvars()).map(|v| f.partial_derivative(v)).collect())
}

// ---------------------------------------------------------------------------
// shared Betti arithmetic (one code path for analyze and verify-betti)

/// Everything Theorem 1 and the Section 3/4 bounds derive from Betti data
/// alone. This is the single arithmetic path shared by the full pipeline
/// and the pure verifier mode.
#[derive(Clone, Debug)]
pub struct ArithReport {
    pub hilbert: HilbertPolynomial,
    pub identities: IdentitiesJson,
    pub sigma: SigmaDimension,
    pub tau: Option<Rational64>,
    pub hilbert_poly: Option<HilbertPolyJson>,
    pub k0: Option<i64>,
    pub bounds: BoundsJson,
    pub type_invariant: TypeJson,
    pub flags: Vec<String>,
}

pub fn betti_arithmetic(betti: &BettiData, assume_nodal: bool) -> ArithReport {
    let d = betti.degree;
    let h = classify_and_polynomial(betti);
    let mut flags: Vec<String> = Vec::new();

    let identities = IdentitiesJson {
        sum_check: h.p_plus_r_eq_q_plus_3 && h.degree_sum_ok,
        square_check: h.q2,
        cube_tau: h.tau.map(Into::into),
    };
    if betti.p() < 3 {
        flags.push(format!(
            "p = {} violates the expected p >= 3 for reduced surfaces",
            betti.p()
        ));
    }
    if let Some(st) = h.six_tau {
        if st % 6 != 0 {
            flags.push(format!("cube formula gives non-integral tau: {st}/6"));
        }
    }
    if h.sigma == SigmaDimension::One {
        if !h.a_even {
            flags.push(format!("A = {} is odd", h.a.unwrap()));
        }
        if !h.b_integral {
            flags.push(format!("B = {} is not an integer", h.b.unwrap()));
        }
    }

    // type invariant and the alpha/beta ladders
    let (t, alpha, beta, consistent) = if betti.p() >= 3 {
        let t = betti.d_seq[0] + betti.d_seq[1] + betti.d_seq[2] + 1 - d;
        let p3 = betti.p() - 3;
        let mut alpha = Vec::new();
        for j in 0..p3.min(betti.q()) {
            alpha.push(betti.c_seq[j] - betti.d_seq[j + 3]);
        }
        let mut beta = Vec::new();
        for k in 0..betti.r() {
            if p3 + k < betti.q() {
                beta.push(betti.b_seq[k] - betti.c_seq[p3 + k]);
            }
        }
        let consistent = alpha.len() == p3
            && beta.len() == betti.r()
            && t == alpha.iter().sum::<i64>() - beta.iter().sum::<i64>();
        (t, alpha, beta, consistent)
    } else {
        (0, Vec::new(), Vec::new(), false)
    };
    if !consistent && identities.sum_check {
        flags.push("type invariant inconsistent with alpha/beta sums".into());
    }

    // bound windows (all need d1)
    let isolated = matches!(h.sigma, SigmaDimension::Empty | SigmaDimension::Zero);
    let mut bounds = BoundsJson {
        dupw: None,
        corc_printed: None,
        corc_derived: None,
        corc_discrepancy: None,
        betterb: None,
        nodal_mdr_bound: None,
    };
    if isolated && betti.p() >= 1 {
        let d1 = betti.d_seq[0];
        let dm1 = d - 1;
        let cube = dm1 * dm1 * dm1;
        let tau = h.tau.unwrap();
        let dupw_lower = cube - d1 * dm1 * dm1;
        let dupw_upper = cube - d1 * (d - d1 - 1) * dm1;
        bounds.dupw = Some(WindowJson {
            lower: dupw_lower,
            upper: dupw_upper,
            value: tau.into(),
            satisfied: Rational64::from_integer(dupw_lower) <= tau
                && tau <= Rational64::from_integer(dupw_upper),
        });
        let q3 = Rational64::from_integer(h.q3);
        let printed_lower = 6 * d1 * (d - d1 - 1) * dm1;
        let printed_upper = 6 * d1 * dm1 * dm1;
        let printed_ok = Rational64::from_integer(printed_lower) <= q3
            && q3 <= Rational64::from_integer(printed_upper);
        bounds.corc_printed = Some(WindowJson {
            lower: printed_lower,
            upper: printed_upper,
            value: q3.into(),
            satisfied: printed_ok,
        });
        let derived_lower = printed_lower - 5 * cube;
        let derived_upper = printed_upper - 5 * cube;
        let derived_ok = Rational64::from_integer(derived_lower) <= q3
            && q3 <= Rational64::from_integer(derived_upper);
        bounds.corc_derived = Some(WindowJson {
            lower: derived_lower,
            upper: derived_upper,
            value: q3.into(),
            satisfied: derived_ok,
        });
        bounds.corc_discrepancy = Some(printed_ok != derived_ok);
        if printed_ok != derived_ok {
            flags.push(
                "printed corollary window disagrees with the window derived from \
                 the tau bounds; both reported"
                    .into(),
            );
        }
        if 2 * d1 >= d {
            let m = 2 * d1 + 2 - d;
            let binom2 = m * (m - 1) / 2;
            let bound = cube - d1 * (d - d1 - 1) * dm1 - binom2 * dm1;
            bounds.betterb = Some(UpperBoundJson {
                bound,
                value: tau.into(),
                satisfied: tau <= Rational64::from_integer(bound),
            });
        }
    }
    if assume_nodal && d >= 5 {
        bounds.nodal_mdr_bound = Some(nodal_mdr_bound(d).expect("d >= 5"));
    }

    ArithReport {
        sigma: h.sigma,
        tau: h.tau,
        hilbert_poly: match h.sigma {
            SigmaDimension::One => Some(HilbertPolyJson {
                a_half: Rational64::new(h.a.unwrap(), 2).into(),
                b: h.b.unwrap().into(),
            }),
            _ => None,
        },
        k0: h.k0,
        identities,
        bounds,
        type_invariant: TypeJson {
            t,
            alpha,
            beta,
            consistent,
        },
        flags,
        hilbert: h,
    }
}

/// The nodal lower bound 2d - floor(d/2) - 3 for mdr(f), valid for d >= 5.
pub fn nodal_mdr_bound(d: i64) -> Result<i64, EngineError> {
    if d < 5 {
        return Err(EngineError::Validation(format!(
            "the nodal bound needs degree >= 5, got {d}"
        )));
    }
    Ok(2 * d - d.div_euclid(2) - 3)
}

// ---------------------------------------------------------------------------
// surface pipeline

/// Full analysis result; `report` is the serializable view.
pub struct SurfaceAnalysis<F: Field> {
    pub degree: i64,
    pub partials: Vec<Polynomial<F>>,
    pub betti: BettiData,
    pub arith: ArithReport,
    pub minimal: Complex<F>,
    pub gb: crate::groebner::Gb<F>,
    pub ar: Option<ArData<F>>,
    pub report: SurfaceReport,
}

fn not_reduced_report<F: Field>(
    field: &F,
    degree: i64,
    minimal: &Complex<F>,
    betti: Option<&BettiData>,
    diagnostic: String,
) -> Box<NotReducedReport> {
    Box::new(NotReducedReport {
        schema: SCHEMA,
        mode: "not-reduced",
        degree,
        field: field.name(),
        diagnostic,
        resolution_shifts: minimal.shifts.clone(),
        betti: betti.map(|b| BettiJson {
            d: b.d_seq.clone(),
            c: b.c_seq.clone(),
            b: b.b_seq.clone(),
            p: b.p(),
            q: b.q(),
            r: b.r(),
        }),
        resolution_text: format_resolution(&minimal.shifts),
    })
}

/// Analyze a reduced surface f = 0 in P^3: resolution of the Jacobian
/// algebra, Betti data, Theorem 1 classification, bounds, type and mdr.
pub fn analyze_surface<F: Field>(
    f: &Polynomial<F>,
    opts: &AnalyzeOptions,
) -> Result<SurfaceAnalysis<F>, AnalyzeError> {
    let field = f.field().clone();
    if f.nvars() != 4 {
        return Err(EngineError::Validation(
            "surface analysis needs the 4-variable ring".into(),
        )
        .into());
    }
    let d = f
        .homogeneous_degree()?
        .ok_or_else(|| EngineError::Validation("zero polynomial".into()))? as i64;
    if d < 3 {
        return Err(EngineError::Validation(format!(
            "degree must be at least 3, got {d}"
        ))
        .into());
    }
    let partials = jacobian_generators(f)?;

    let build = schreyer_resolution(&field, 4, &partials)?;
    let minimal = minimalize(&build.complex);
    debug_assert!(minimal.composes_to_zero());
    debug_assert!(minimal.graded_entries_ok());

    // exactness oracle: resolution slices against the staircase count
    let kmax = minimal.max_shift() + 2;
    for k in 0..=kmax {
        let from_res = minimal.hilbert_slice(k);
        let from_gb = quotient_dim_from_gb(&build.gb, k as u16);
        assert_eq!(
            from_res, from_gb,
            "resolution Hilbert slice disagrees with the Gröbner staircase at degree {k}"
        );
    }

    let betti = match extract_betti(&minimal, d, 4) {
        Ok(b) => b,
        Err(e) => {
            let diag = match &e {
                ExtractError::FirstModule { .. } => format!(
                    "input not reduced (dim Sigma >= 2) or degenerate: {e}"
                ),
                _ => format!("input not reduced (dim Sigma >= 2): {e}"),
            };
            return Err(AnalyzeError::NotReduced(not_reduced_report(
                &field, d, &minimal, None, diag,
            )));
        }
    };
    let arith = betti_arithmetic(&betti, opts.assume_nodal);
    if arith.sigma == SigmaDimension::TwoOrMore {
        return Err(AnalyzeError::NotReduced(not_reduced_report(
            &field,
            d,
            &minimal,
            Some(&betti),
            "input not reduced (dim Sigma >= 2): Theorem 1 (1) identities fail".into(),
        )));
    }

    // Hilbert function from the resolution agrees with the formula path
    for k in 0..=kmax {
        assert_eq!(
            minimal.hilbert_slice(k),
            hilbert_from_betti(&betti, k, 4),
            "Betti-data Hilbert function mismatch at degree {k}"
        );
    }

    let ar = if opts.compute_mdr {
        Some(ar_generators_and_mdr(&field, 4, &partials, &minimal)?)
    } else {
        None
    };
    if let Some(ar) = &ar {
        assert_eq!(
            ar.generator_degrees, betti.d_seq,
            "AR generator degrees disagree with the d-sequence"
        );
    }

    let mut flags = arith.flags.clone();
    if field.is_modular() {
        flags.push(format!(
            "modular run over {}: Betti numbers can only exceed the characteristic-0 \
             values degree-by-degree; Theorem 1 identity checks passed",
            field.name()
        ));
    }

    let mdr = ar.as_ref().and_then(|a| a.mdr);
    let mdr_none_reason = match &ar {
        Some(a) if a.mdr.is_none() => {
            Some("none: ER(f) = 0, every Jacobian syzygy is Koszul".to_string())
        }
        _ => None,
    };

    let report = SurfaceReport {
        schema: SCHEMA,
        mode: "surface",
        degree: d,
        field: field.name(),
        modular: field.is_modular(),
        betti: BettiJson {
            d: betti.d_seq.clone(),
            c: betti.c_seq.clone(),
            b: betti.b_seq.clone(),
            p: betti.p(),
            q: betti.q(),
            r: betti.r(),
        },
        identities: arith.identities.clone(),
        sigma_dimension: arith.sigma,
        tau: arith.tau.map(Into::into),
        hilbert_polynomial: arith.hilbert_poly.clone(),
        k0: arith.k0,
        bounds: arith.bounds.clone(),
        type_invariant: arith.type_invariant.clone(),
        mdr,
        mdr_none_reason,
        resolution_text: format_resolution(&minimal.shifts),
        flags,
    };

    Ok(SurfaceAnalysis {
        degree: d,
        partials,
        betti,
        arith,
        minimal,
        gb: build.gb,
        ar,
        report,
    })
}

// ---------------------------------------------------------------------------
// curve pipeline

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CurveClass {
    Free,
    PlusOneGenerated,
    Other,
}

impl CurveClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CurveClass::Free => "free",
            CurveClass::PlusOneGenerated => "plus-one-generated",
            CurveClass::Other => "other",
        }
    }
}

pub struct CurveAnalysis<F: Field> {
    pub degree: i64,
    pub d_seq: Vec<i64>,
    pub c_seq: Vec<i64>,
    pub epsilon: Vec<i64>,
    pub type_t: i64,
    pub classification: CurveClass,
    pub tau: i64,
    pub minimal: Complex<F>,
    pub report: CurveReport,
}

/// Analyze a reduced plane curve f' = 0 over the 3-variable ring.
pub fn analyze_curve<F: Field>(f: &Polynomial<F>) -> Result<CurveAnalysis<F>, AnalyzeError> {
    let field = f.field().clone();
    if f.nvars() != 3 {
        return Err(EngineError::Validation(
            "curve analysis needs the 3-variable ring".into(),
        )
        .into());
    }
    let d = f
        .homogeneous_degree()?
        .ok_or_else(|| EngineError::Validation("zero polynomial".into()))? as i64;
    if d < 3 {
        return Err(EngineError::Validation(format!(
            "degree must be at least 3, got {d}"
        ))
        .into());
    }
    let partials: Vec<Polynomial<F>> = (0..3).map(|v| f.partial_derivative(v)).collect();
    let build = schreyer_resolution(&field, 3, &partials)?;
    let minimal = minimalize(&build.complex);

    let kmax = minimal.max_shift() + 2;
    for k in 0..=kmax {
        assert_eq!(
            minimal.hilbert_slice(k),
            quotient_dim_from_gb(&build.gb, k as u16),
            "curve resolution Hilbert slice disagrees with the staircase at degree {k}"
        );
    }

    let betti = match extract_betti(&minimal, d, 3) {
        Ok(b) => b,
        Err(e) => {
            return Err(AnalyzeError::NotReduced(not_reduced_report(
                &field,
                d,
                &minimal,
                None,
                format!("curve input not reduced or degenerate: {e}"),
            )));
        }
    };
    // curve identities: p' = q' + 2, sum d' - sum c' = d - 1, length <= 3
    let p = betti.p();
    let q = betti.q();
    let sum_ok = betti.d_seq.iter().sum::<i64>() - betti.c_seq.iter().sum::<i64>() == d - 1;
    let identities = p == q + 2 && sum_ok && betti.r() == 0;
    if !identities {
        return Err(AnalyzeError::NotReduced(not_reduced_report(
            &field,
            d,
            &minimal,
            Some(&betti),
            "curve input not reduced: resolution identities fail".into(),
        )));
    }

    let mut flags: Vec<String> = Vec::new();
    let mut epsilon = Vec::with_capacity(q);
    for j in 0..q {
        epsilon.push(betti.d_seq[j + 2] - betti.c_seq[j]);
    }
    if epsilon.iter().any(|&e| e < 1) {
        flags.push(format!("an epsilon entry is below 1: {epsilon:?}"));
    }
    let type_t = betti.d_seq[0] + betti.d_seq[1] - d + 1;
    let classification = if q == 0 {
        CurveClass::Free
    } else if type_t == 1 {
        CurveClass::PlusOneGenerated
    } else {
        CurveClass::Other
    };
    if (q == 0) != (type_t == 0) {
        flags.push("freeness and t(C) = 0 disagree".into());
    }
    if q > 0 && type_t != epsilon.iter().sum::<i64>() {
        flags.push("t(C) differs from the epsilon sum".into());
    }

    // tau: the stabilized Hilbert value
    let tau = hilbert_from_betti(&betti, kmax, 3);
    assert_eq!(
        tau,
        hilbert_from_betti(&betti, kmax + 1, 3),
        "curve Hilbert function failed to stabilize"
    );
    let free_tau_check = match classification {
        CurveClass::Free => {
            let d1 = betti.d_seq[0];
            Some(tau == (d - 1) * (d - 1) - d1 * (d - d1 - 1))
        }
        _ => None,
    };
    if free_tau_check == Some(false) {
        flags.push("free curve failed the tau formula check".into());
    }
    if field.is_modular() {
        flags.push(format!("modular run over {}", field.name()));
    }

    let report = CurveReport {
        schema: SCHEMA,
        mode: "curve",
        degree: d,
        field: field.name(),
        modular: field.is_modular(),
        betti: CurveBettiJson {
            d: betti.d_seq.clone(),
            c: betti.c_seq.clone(),
            p,
            q,
        },
        identities,
        epsilon: epsilon.clone(),
        type_t,
        classification: classification.as_str(),
        tau,
        free_tau_check,
        resolution_text: format_resolution(&minimal.shifts),
        flags,
    };

    Ok(CurveAnalysis {
        degree: d,
        d_seq: betti.d_seq.clone(),
        c_seq: betti.c_seq.clone(),
        epsilon,
        type_t,
        classification,
        tau,
        minimal,
        report,
    })
}

/// f(x,y,z,t) = f'(x,y,z) + t^d for a degree-d plane curve f'.
pub fn suspension<F: Field>(
    f_curve: &Polynomial<F>,
    d: i64,
) -> Result<Polynomial<F>, EngineError> {
    if f_curve.nvars() != 3 {
        return Err(EngineError::Validation(
            "suspension input must live in the 3-variable ring".into(),
        ));
    }
    let deg = f_curve
        .homogeneous_degree()?
        .ok_or_else(|| EngineError::Validation("zero polynomial".into()))? as i64;
    if deg != d {
        return Err(EngineError::DegreeMismatch(format!(
            "curve has degree {deg}, requested suspension degree {d}"
        )));
    }
    let field = f_curve.field().clone();
    let t = Polynomial::variable(&field, 4, 3);
    Ok(f_curve.extend_vars(4).add(&t.pow(d as u32)))
}

// ---------------------------------------------------------------------------
// the determinant test

pub struct DeterminantTest<F: Field> {
    pub determinant: Polynomial<F>,
    pub independent: bool,
    pub divisible_by_f: Option<bool>,
    /// 1 + deg rho1 + deg rho2 + deg rho3 >= d, meaningful when independent.
    pub t_lower_bound_applies: bool,
}

fn det<F: Field>(field: &F, nvars: usize, m: &[Vec<Polynomial<F>>]) -> Polynomial<F> {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(field, nvars);
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial<F>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let sub = top.mul(&det(field, nvars, &minor));
        acc = if j % 2 == 0 { acc.add(&sub) } else { acc.sub(&sub) };
    }
    acc
}

/// Proposition-style test: the 4x4 determinant with the Euler row
/// (x, y, z, t) over three verified Jacobian syzygies. A nonzero
/// determinant certifies independence, must be divisible by f, and yields
/// 1 + deg rho1 + deg rho2 + deg rho3 >= d.
pub fn syzygy_determinant_test<F: Field>(
    f: &Polynomial<F>,
    rhos: &[Vec<Polynomial<F>>; 3],
) -> Result<DeterminantTest<F>, EngineError> {
    let field = f.field().clone();
    let d = f
        .homogeneous_degree()?
        .ok_or_else(|| EngineError::Validation("zero polynomial".into()))? as i64;
    let partials = jacobian_generators(f)?;
    let mut degs: Vec<i64> = Vec::new();
    for (idx, rho) in rhos.iter().enumerate() {
        if rho.len() != 4 {
            return Err(EngineError::Validation(
                "each syzygy needs 4 components".into(),
            ));
        }
        let mut acc = Polynomial::zero(&field, 4);
        for (c, p) in rho.iter().zip(partials.iter()) {
            acc = acc.add(&c.mul(p));
        }
        if !acc.is_zero() {
            return Err(EngineError::NotASyzygy(format!(
                "input {} does not annihilate the partials",
                idx + 1
            )));
        }
        let deg = rho
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .map(|v| v as i64)
            .unwrap_or(0);
        degs.push(deg);
    }
    let mut rows: Vec<Vec<Polynomial<F>>> = Vec::with_capacity(4);
    rows.push((0..4).map(|v| Polynomial::variable(&field, 4, v)).collect());
    for rho in rhos {
        rows.push(rho.clone());
    }
    let g = det(&field, 4, &rows);
    let independent = !g.is_zero();
    let divisible_by_f = if independent {
        Some(g.exact_div(f).is_some())
    } else {
        None
    };
    let t_lower_bound_applies = independent && 1 + degs.iter().sum::<i64>() >= d;
    if independent {
        assert_eq!(
            divisible_by_f,
            Some(true),
            "independent syzygy determinant must be divisible by f"
        );
        assert!(
            t_lower_bound_applies,
            "degree bound 1 + d1 + d2 + d3 >= d failed for an independent triple"
        );
    }
    Ok(DeterminantTest {
        determinant: g,
        independent,
        divisible_by_f,
        t_lower_bound_applies,
    })
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

    fn qc(s: &str) -> Polynomial<Rationals> {
        parse_polynomial(s, &VarSet::curve(), &Rationals).unwrap()
    }

    #[test]
    fn jacobian_of_examples() {
        let f = q("x*y*z - t^3");
        let parts = jacobian_generators(&f).unwrap();
        assert_eq!(parts[0], q("y*z"));
        assert_eq!(parts[3], q("-3*t^2"));
        let cayley = q("x*y*z + x*y*t + x*z*t + y*z*t");
        let parts = jacobian_generators(&cayley).unwrap();
        assert_eq!(parts[0], q("y*z + y*t + z*t"));
        // degenerate cone: partials include zeros, flagged downstream
        let parts = jacobian_generators(&q("x^3")).unwrap();
        assert_eq!(parts[1], q("0"));
        assert!(jacobian_generators(&q("x^2")).is_err());
        assert!(jacobian_generators(&q("x + y^2")).is_err());
    }

    #[test]
    fn cayley_full_report() {
        let a = analyze_surface(&q("x*y*z + x*y*t + x*z*t + y*z*t"), &Default::default())
            .unwrap();
        assert_eq!(a.report.tau, Some(4.into()));
        assert_eq!(a.report.sigma_dimension, SigmaDimension::Zero);
        let dupw = a.report.bounds.dupw.as_ref().unwrap();
        assert_eq!((dupw.lower, dupw.upper), (0, 8));
        assert!(dupw.satisfied);
        assert_eq!(a.report.type_invariant.t, 4);
        assert_eq!(a.report.type_invariant.alpha, vec![1; 6]);
        assert_eq!(a.report.type_invariant.beta, vec![1, 1]);
        assert_eq!(
            a.report.resolution_text,
            "0 -> S(-6)^2 -> S(-5)^8 -> S(-4)^9 -> S(-2)^4 -> S"
        );
        assert_eq!(a.report.mdr, Some(2));
        // betterb: 2*d1 = 4 >= 3, bound = 8 - 0 - C(3,2)*2 = 2, tau = 4 fails it
        let bb = a.report.bounds.betterb.as_ref().unwrap();
        assert_eq!(bb.bound, 2);
        assert!(!bb.satisfied);
    }

    #[test]
    fn non_reduced_inputs_detected() {
        for bad in ["x^3", "x*y*z^2"] {
            match analyze_surface(&q(bad), &Default::default()) {
                Err(AnalyzeError::NotReduced(r)) => {
                    assert!(r.diagnostic.contains("dim Sigma >= 2"), "{}", r.diagnostic);
                }
                other => panic!("expected NotReduced for {bad}, got {:?}", other.is_ok()),
            }
        }
    }

    #[test]
    fn curve_triangle_is_free() {
        let a = analyze_curve(&qc("x*y*z")).unwrap();
        assert_eq!(a.classification, CurveClass::Free);
        assert_eq!(a.d_seq, vec![1, 1]);
        assert_eq!(a.tau, 3);
        assert_eq!(a.type_t, 0);
        assert_eq!(a.free_tau_check, Some(true));
    }

    #[test]
    fn cuspidal_cubic_curve() {
        let a = analyze_curve(&qc("x^3 - y^2*z")).unwrap();
        assert_eq!(a.tau, 2);
        // rkC construction: tau(C) = (d - d1 - 1)(d - 1) with d1 = 1
        assert_eq!(a.d_seq[0], 1);
        assert_eq!(a.tau, (3 - 1 - 1) * (3 - 1));
    }

    #[test]
    fn suspension_construction() {
        let s = suspension(&qc("x^3 + y^3 + z^3"), 3).unwrap();
        assert_eq!(s, q("x^3 + y^3 + z^3 + t^3"));
        assert!(suspension(&qc("x^3"), 4).is_err());
        let s2 = suspension(&qc("x*y*z"), 3).unwrap();
        assert_eq!(s2, q("x*y*z + t^3"));
    }

    #[test]
    fn determinant_test_cases() {
        // repeated rows: dependent
        let f = q("x^3 + y^3 + z^3 + t^3");
        let theta = |i: usize, j: usize| -> Vec<Polynomial<Rationals>> {
            let parts = jacobian_generators(&f).unwrap();
            let mut v = vec![q("0"), q("0"), q("0"), q("0")];
            v[i] = parts[j].clone();
            v[j] = parts[i].neg();
            v
        };
        let k01 = theta(0, 1);
        let k02 = theta(0, 2);
        let t = syzygy_determinant_test(&f, &[k01.clone(), k01.clone(), k02.clone()]).unwrap();
        assert!(!t.independent);
        // three distinct Koszul syzygies are independent
        let k12 = theta(1, 2);
        let t2 = syzygy_determinant_test(&f, &[k01, k02, k12]).unwrap();
        assert!(t2.independent);
        assert_eq!(t2.divisible_by_f, Some(true));
        assert!(t2.t_lower_bound_applies);
        // a non-syzygy is rejected
        let bad = vec![q("1"), q("0"), q("0"), q("0")];
        assert!(matches!(
            syzygy_determinant_test(&f, &[bad, theta(0, 1), theta(0, 2)]),
            Err(EngineError::NotASyzygy(_))
        ));
    }

    #[test]
    fn nodal_bound_values() {
        assert_eq!(nodal_mdr_bound(8).unwrap(), 9);
        assert_eq!(nodal_mdr_bound(5).unwrap(), 5);
        assert!(nodal_mdr_bound(4).is_err());
    }

    #[test]
    fn verify_betti_shares_the_arithmetic_path() {
        // the arithmetic report from measured data equals the one from
        // typed-in data
        let a = analyze_surface(&q("x*y*z + x*y*t + x*z*t + y*z*t"), &Default::default())
            .unwrap();
        let typed = BettiData::new(3, vec![2; 9], vec![3; 8], vec![4, 4]);
        let arith = betti_arithmetic(&typed, false);
        assert_eq!(
            serde_json::to_string(&arith.bounds).unwrap(),
            serde_json::to_string(&a.report.bounds).unwrap()
        );
        assert_eq!(
            serde_json::to_string(&arith.type_invariant).unwrap(),
            serde_json::to_string(&a.report.type_invariant).unwrap()
        );
    }
}
