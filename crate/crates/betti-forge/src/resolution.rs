//! Graded free resolutions of cyclic quotients S/I: iterated Schreyer
//! syzygies, explicit minimalization, Betti data extraction, and the
//! module of Jacobian relations with its minimal-degree invariant.

use crate::error::EngineError;
use crate::field::Field;
use crate::groebner::{
    buchberger, groebner_basis, normal_form, schreyer_syzygies, Gb, GbOpts,
};
use crate::hilbert::binom3;
use crate::module::ModElem;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::ModuleOrder;
use crate::poly::Polynomial;

/// A chain of free modules F_0 <- F_1 <- ... with graded matrices.
/// `shifts[k]` lists the twists a_i of F_k = (+) S(-a_i); `mats[k]` is the
/// map F_{k+1} -> F_k, rows indexed by F_k, columns by F_{k+1}.
#[derive(Clone, Debug)]
pub struct Complex<F: Field> {
    pub field: F,
    pub nvars: usize,
    pub shifts: Vec<Vec<i64>>,
    pub mats: Vec<Vec<Vec<Polynomial<F>>>>,
}

impl<F: Field> Complex<F> {
    pub fn length(&self) -> usize {
        self.mats.len()
    }

    pub fn rank(&self, k: usize) -> usize {
        self.shifts[k].len()
    }

    /// Largest twist appearing anywhere.
    pub fn max_shift(&self) -> i64 {
        self.shifts
            .iter()
            .flat_map(|s| s.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Every consecutive pair of matrices multiplies to zero, exactly.
    pub fn composes_to_zero(&self) -> bool {
        for k in 0..self.mats.len().saturating_sub(1) {
            let a = &self.mats[k]; // F_{k+1} -> F_k
            let b = &self.mats[k + 1]; // F_{k+2} -> F_{k+1}
            let rows = self.rank(k);
            let mid = self.rank(k + 1);
            let cols = self.rank(k + 2);
            for r in 0..rows {
                for c in 0..cols {
                    let mut acc = Polynomial::zero(&self.field, self.nvars);
                    for s in 0..mid {
                        if a[r][s].is_zero() || b[s][c].is_zero() {
                            continue;
                        }
                        acc = acc.add(&a[r][s].mul(&b[s][c]));
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Entry (r, c) of each matrix is zero or homogeneous of degree
    /// source shift minus target shift.
    pub fn graded_entries_ok(&self) -> bool {
        for k in 0..self.mats.len() {
            for (r, row) in self.mats[k].iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    if e.is_zero() {
                        continue;
                    }
                    let want = self.shifts[k + 1][c] - self.shifts[k][r];
                    match e.homogeneous_degree() {
                        Ok(Some(d)) if d as i64 == want => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    /// No matrix entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.mats.iter().all(|m| {
            m.iter()
                .all(|row| row.iter().all(|e| e.is_zero() || e.degree() != Some(0)))
        })
    }

    /// Alternating sum of the degree-k slices of the free modules: the
    /// dimension of the resolved module in degree k when the complex is
    /// exact.
    pub fn hilbert_slice(&self, k: i64) -> i64 {
        let n = self.nvars as i64;
        let mut acc: i64 = 0;
        let mut sign = 1i64;
        for shifts in &self.shifts {
            for a in shifts {
                acc += sign * binom3(k - a, n - 1);
            }
            sign = -sign;
        }
        acc
    }
}

/// Result of building the (not yet minimal) Schreyer resolution of S/I.
pub struct ResolutionBuild<F: Field> {
    pub complex: Complex<F>,
    /// The reduced Gröbner basis of I, kept for dimension oracles.
    pub gb: Gb<F>,
}

/// Sort module elements for the tower: descending lexicographic lead
/// monomial first (this keeps each level's pair monomials free of the
/// leading variable), then lead component.
fn tower_sort<F: Field>(gens: &mut Vec<ModElem<F>>, order: &ModuleOrder) {
    gens.sort_by(|a, b| {
        let la = a.lead(order).expect("nonzero");
        let lb = b.lead(order).expect("nonzero");
        lb.0.lex_cmp(&la.0).then_with(|| la.1.cmp(&lb.1))
    });
}

/// Iterated Schreyer syzygies starting from the reduced Gröbner basis of
/// the ideal generated by `gens`. The result is a graded free resolution
/// of S/(gens) of length at most nvars; it is usually not minimal.
pub fn schreyer_resolution<F: Field>(
    field: &F,
    nvars: usize,
    gens: &[Polynomial<F>],
) -> Result<ResolutionBuild<F>, EngineError> {
    let ideal: Vec<ModElem<F>> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| ModElem::from_poly(p.clone()))
        .collect();
    if ideal.is_empty() {
        return Err(EngineError::Validation(
            "cannot resolve over an empty generating set".into(),
        ));
    }
    let ring_order = ModuleOrder::Pot;
    let gb = groebner_basis(field, nvars, &ring_order, &ideal, &[0])?;

    let mut level: Vec<ModElem<F>> = gb.elems.clone();
    let mut order = ring_order;
    let mut shifts: Vec<i64> = vec![0];

    let mut all_shifts: Vec<Vec<i64>> = vec![vec![0]];
    let mut mats: Vec<Vec<Vec<Polynomial<F>>>> = Vec::new();

    for _depth in 0..(nvars + 2) {
        tower_sort(&mut level, &order);
        // record the matrix F_{k+1} -> F_k from the sorted generators
        let rows = shifts.len();
        let cols = level.len();
        let mut mat = vec![vec![Polynomial::zero(field, nvars); cols]; rows];
        let mut level_shifts = Vec::with_capacity(cols);
        for (c, g) in level.iter().enumerate() {
            let d = g
                .homogeneous_degree(&shifts)?
                .expect("generators are nonzero");
            level_shifts.push(d);
            for (r, p) in g.comps() {
                mat[*r as usize][c] = p.clone();
            }
        }
        mats.push(mat);
        all_shifts.push(level_shifts.clone());

        let step = schreyer_syzygies(field, nvars, &order, &level, &shifts)?;
        if step.syzygies.is_empty() {
            break;
        }
        level = step.syzygies;
        order = step.next_order;
        shifts = step.next_shifts;
    }

    let complex = Complex {
        field: field.clone(),
        nvars,
        shifts: all_shifts,
        mats,
    };
    Ok(ResolutionBuild { complex, gb })
}

/// Remove all constant matrix entries by Gaussian cancellation, pivoting
/// on the lowest-degree generators first. Preserves the quasi-isomorphism
/// class, so the Hilbert function of the resolved module is unchanged
/// (checked before returning).
pub fn minimalize<F: Field>(input: &Complex<F>) -> Complex<F> {
    let field = input.field.clone();
    let nvars = input.nvars;
    let mut shifts = input.shifts.clone();
    let mut mats = input.mats.clone();

    loop {
        // pick a pivot: a degree-0 entry, preferring the lowest shift of
        // the generator being cancelled, then position
        let mut pivot: Option<(usize, usize, usize, i64)> = None; // (mat k, r, c, shift)
        for k in 0..mats.len() {
            for (r, row) in mats[k].iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    if !e.is_zero() && e.degree() == Some(0) {
                        let s = shifts[k + 1][c];
                        let better = match pivot {
                            None => true,
                            Some((pk, pr, pc, ps)) => {
                                (s, k, r, c) < (ps, pk, pr, pc)
                            }
                        };
                        if better {
                            pivot = Some((k, r, c, s));
                        }
                    }
                }
            }
        }
        let Some((k, r, c, _)) = pivot else { break };
        let u = mats[k][r][c].clone();
        let uinv = field.inv(&u.leading_coeff().unwrap());

        // column operations on M_k zero out row r (paired row ops on M_{k+1})
        let cols = shifts[k + 1].len();
        for c2 in 0..cols {
            if c2 == c || mats[k][r][c2].is_zero() {
                continue;
            }
            let lam = mats[k][r][c2].scalar_mul(&uinv);
            // col c2 -= lam * col c
            for r2 in 0..shifts[k].len() {
                if mats[k][r2][c].is_zero() {
                    continue;
                }
                let sub = mats[k][r2][c].mul(&lam);
                mats[k][r2][c2] = mats[k][r2][c2].sub(&sub);
            }
            // paired: row c of M_{k+1} += lam * row c2
            if k + 1 < mats.len() {
                for col in 0..shifts[k + 2].len() {
                    if mats[k + 1][c2][col].is_zero() {
                        continue;
                    }
                    let add = mats[k + 1][c2][col].mul(&lam);
                    mats[k + 1][c][col] = mats[k + 1][c][col].add(&add);
                }
            }
        }
        // row operations on M_k zero out column c (paired col ops on M_{k-1})
        for r2 in 0..shifts[k].len() {
            if r2 == r || mats[k][r2][c].is_zero() {
                continue;
            }
            let mu = mats[k][r2][c].scalar_mul(&uinv);
            // row r2 -= mu * row r
            for c2 in 0..cols {
                if mats[k][r][c2].is_zero() {
                    continue;
                }
                let sub = mats[k][r][c2].mul(&mu);
                mats[k][r2][c2] = mats[k][r2][c2].sub(&sub);
            }
            // paired: col r of M_{k-1} += mu * col r2
            if k > 0 {
                for row in 0..shifts[k - 1].len() {
                    if mats[k - 1][row][r2].is_zero() {
                        continue;
                    }
                    let add = mats[k - 1][row][r2].mul(&mu);
                    mats[k - 1][row][r] = mats[k - 1][row][r].add(&add);
                }
            }
        }

        // the complex property forces the adjacent row/column to vanish
        if k + 1 < mats.len() {
            debug_assert!(mats[k + 1][c].iter().all(|e| e.is_zero()));
        }
        if k > 0 {
            debug_assert!((0..shifts[k - 1].len()).all(|row| mats[k - 1][row][r].is_zero()));
        }

        // delete column c of M_k and row c of M_{k+1}; basis c of F_{k+1}
        for row in mats[k].iter_mut() {
            row.remove(c);
        }
        if k + 1 < mats.len() {
            mats[k + 1].remove(c);
        }
        shifts[k + 1].remove(c);
        // delete row r of M_k and column r of M_{k-1}; basis r of F_k
        mats[k].remove(r);
        if k > 0 {
            for row in mats[k - 1].iter_mut() {
                row.remove(r);
            }
        }
        shifts[k].remove(r);
    }

    // trim trailing zero-rank modules
    while shifts.len() > 1 && shifts.last().unwrap().is_empty() {
        shifts.pop();
        mats.pop();
    }

    let out = Complex {
        field,
        nvars,
        shifts,
        mats,
    };
    debug_assert!(out.is_minimal());
    // the Hilbert function of the resolved module must be unchanged
    let kmax = input.max_shift().max(out.max_shift()) + 2;
    for k in 0..=kmax {
        assert_eq!(
            input.hilbert_slice(k),
            out.hilbert_slice(k),
            "minimalization changed the Hilbert function at degree {k}"
        );
    }
    out
}

// ---------------------------------------------------------------------------
// Betti data

/// The graded Betti numbers of a Jacobian algebra in the normalization
/// where the first syzygy module is (+)_i S(1-d-d_i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiData {
    pub degree: i64,
    pub d_seq: Vec<i64>,
    pub c_seq: Vec<i64>,
    pub b_seq: Vec<i64>,
}

impl BettiData {
    pub fn new(degree: i64, mut d_seq: Vec<i64>, mut c_seq: Vec<i64>, mut b_seq: Vec<i64>) -> Self {
        d_seq.sort_unstable();
        c_seq.sort_unstable();
        b_seq.sort_unstable();
        BettiData {
            degree,
            d_seq,
            c_seq,
            b_seq,
        }
    }

    pub fn p(&self) -> usize {
        self.d_seq.len()
    }
    pub fn q(&self) -> usize {
        self.c_seq.len()
    }
    pub fn r(&self) -> usize {
        self.b_seq.len()
    }

    /// Shift multisets of the minimal resolution this data encodes,
    /// starting with F_0 = S.
    pub fn reconstruct_shifts(&self, first_rank: usize) -> Vec<Vec<i64>> {
        let dm1 = self.degree - 1;
        let mut out = vec![vec![0], vec![dm1; first_rank]];
        if !self.d_seq.is_empty() {
            out.push(self.d_seq.iter().map(|d| dm1 + d).collect());
        }
        if !self.c_seq.is_empty() {
            out.push(self.c_seq.iter().map(|c| dm1 + c).collect());
        }
        if !self.b_seq.is_empty() {
            out.push(self.b_seq.iter().map(|b| dm1 + b).collect());
        }
        out
    }
}

/// Structural failures when reading Betti data off a minimal resolution.
#[derive(Clone, Debug)]
pub enum ExtractError {
    /// First module is not S^n(1-d): degenerate input (a cone, a non-reduced
    /// polynomial with vanishing partials, ...).
    FirstModule { found: Vec<i64>, expected_rank: usize, expected_shift: i64 },
    /// A twist landed below the legal range (some d_i, c_j or b_k < 1).
    BadTwist(String),
    TooLong(usize),
}

impl std::fmt::Display for ExtractError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtractError::FirstModule {
                found,
                expected_rank,
                expected_shift,
            } => write!(
                f,
                "first resolution module is not S^{expected_rank}(-{expected_shift}): found shifts {found:?}"
            ),
            ExtractError::BadTwist(m) => write!(f, "{m}"),
            ExtractError::TooLong(l) => write!(f, "resolution has length {l}, expected at most 4"),
        }
    }
}

/// Read the graded Betti numbers off a minimal resolution of S/J_f.
pub fn extract_betti<F: Field>(
    minimal: &Complex<F>,
    d: i64,
    expected_first_rank: usize,
) -> Result<BettiData, ExtractError> {
    let dm1 = d - 1;
    if minimal.shifts.len() > 5 {
        return Err(ExtractError::TooLong(minimal.length()));
    }
    let first = minimal.shifts.get(1).cloned().unwrap_or_default();
    if first.len() != expected_first_rank || first.iter().any(|&a| a != dm1) {
        return Err(ExtractError::FirstModule {
            found: first,
            expected_rank: expected_first_rank,
            expected_shift: dm1,
        });
    }
    let grab = |level: usize| -> Vec<i64> {
        minimal
            .shifts
            .get(level)
            .map(|s| s.iter().map(|a| a - dm1).collect())
            .unwrap_or_default()
    };
    let d_seq = grab(2);
    let c_seq = grab(3);
    let b_seq = grab(4);
    for (name, seq) in [("d", &d_seq), ("c", &c_seq), ("b", &b_seq)] {
        if seq.iter().any(|&v| v < 1) {
            return Err(ExtractError::BadTwist(format!(
                "{name}-sequence contains an entry below 1: {seq:?}"
            )));
        }
    }
    Ok(BettiData::new(d, d_seq, c_seq, b_seq))
}

/// Number of standard monomials of degree k for the lead ideal of a ring
/// Gröbner basis: the dimension of (S/I)_k, computed independently of any
/// resolution.
pub fn quotient_dim_from_gb<F: Field>(gb: &Gb<F>, k: u16) -> i64 {
    let leads: Vec<Monomial> = gb
        .elems
        .iter()
        .map(|g| g.lead(&gb.order).expect("nonzero").0)
        .collect();
    monomials_of_degree(gb.nvars, k)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count() as i64
}

// ---------------------------------------------------------------------------
// the module of Jacobian relations

/// Minimal generators of AR(f) (all Jacobian syzygies) converted to act on
/// the partial derivatives directly, with the minimal degree of a
/// generator that is not a Koszul relation.
pub struct ArData<F: Field> {
    pub generator_degrees: Vec<i64>,
    /// One generator per degree entry, as a dense vector over the partials.
    pub generators: Vec<Vec<Polynomial<F>>>,
    /// Least degree of a generator nonzero in ER(f) = AR(f)/KR(f);
    /// None when every Jacobian syzygy is Koszul.
    pub mdr: Option<i64>,
}

/// Express each minimal ideal generator (entries of the first minimal
/// matrix) as a constant combination of the partials. The partials span
/// the same degree-(d-1) slice, so the change of basis is a constant
/// invertible matrix.
fn basis_change_to_partials<F: Field>(
    field: &F,
    nvars: usize,
    partials: &[Polynomial<F>],
    minimal_gens: &[Polynomial<F>],
) -> Result<Vec<Vec<F::Elem>>, EngineError> {
    // collect the monomial support
    let mut monos: Vec<Monomial> = Vec::new();
    for p in partials.iter().chain(minimal_gens.iter()) {
        for (m, _) in p.terms() {
            if !monos.contains(m) {
                monos.push(*m);
            }
        }
    }
    monos.sort();
    let col_of = |m: &Monomial| monos.binary_search(m).unwrap();
    let n = partials.len();
    let width = monos.len();
    // rows: partials as coefficient vectors, then solve for each gen
    let mut rows: Vec<Vec<F::Elem>> = vec![vec![field.zero(); width]; n];
    for (i, p) in partials.iter().enumerate() {
        for (m, c) in p.terms() {
            rows[i][col_of(m)] = c.clone();
        }
    }
    // Gaussian elimination on the n x width system, remembering the ops
    // applied, to solve x . rows = target for each minimal generator.
    let mut aug: Vec<Vec<F::Elem>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            let mut id = vec![field.zero(); n];
            id[i] = field.one();
            v.extend(id);
            v
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(pr) = (rank..n).find(|&r| !field.is_zero(&aug[r][col])) else {
            continue;
        };
        aug.swap(rank, pr);
        let inv = field.inv(&aug[rank][col].clone());
        for v in aug[rank].iter_mut() {
            *v = field.mul(v, &inv);
        }
        for r in 0..n {
            if r != rank && !field.is_zero(&aug[r][col]) {
                let factor = aug[r][col].clone();
                for c2 in 0..aug[r].len() {
                    let sub = field.mul(&aug[rank][c2], &factor);
                    aug[r][c2] = field.sub(&aug[r][c2], &sub);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == n {
            break;
        }
    }
    if rank < n {
        return Err(EngineError::Validation(
            "partial derivatives are linearly dependent (degenerate input)".into(),
        ));
    }
    let mut out = Vec::with_capacity(minimal_gens.len());
    for g in minimal_gens {
        let mut target = vec![field.zero(); width];
        for (m, c) in g.terms() {
            target[col_of(m)] = c.clone();
        }
        // x = sum over pivot rows of target[pivot_col] * recorded combination
        let mut x = vec![field.zero(); n];
        let mut residue = target.clone();
        for (r, &pc) in pivots.iter().enumerate() {
            let coef = residue[pc].clone();
            if field.is_zero(&coef) {
                continue;
            }
            for c2 in 0..width {
                let sub = field.mul(&aug[r][c2], &coef);
                residue[c2] = field.sub(&residue[c2], &sub);
            }
            for (xi, xv) in x.iter_mut().enumerate() {
                let add = field.mul(&aug[r][width + xi], &coef);
                *xv = field.add(xv, &add);
            }
        }
        if residue.iter().any(|v| !field.is_zero(v)) {
            return Err(EngineError::Validation(
                "minimal generator is not a combination of the partials".into(),
            ));
        }
        let _ = nvars;
        out.push(x);
    }
    Ok(out)
}

/// Compute AR(f) minimal generator data and mdr(f) from a minimal
/// resolution together with the partials it resolves.
pub fn ar_generators_and_mdr<F: Field>(
    field: &F,
    nvars: usize,
    partials: &[Polynomial<F>],
    minimal: &Complex<F>,
) -> Result<ArData<F>, EngineError> {
    let n = partials.len();
    if minimal.shifts.len() < 3 {
        // a complete intersection: no syzygies beyond Koszul... actually
        // length 2 means no first syzygies at all (impossible for n >= 2);
        // report empty data
        return Ok(ArData {
            generator_degrees: Vec::new(),
            generators: Vec::new(),
            mdr: None,
        });
    }
    let first_gens: Vec<Polynomial<F>> = (0..minimal.rank(1))
        .map(|c| minimal.mats[0][0][c].clone())
        .collect();
    let u = basis_change_to_partials(field, nvars, partials, &first_gens)?;
    let dm1 = minimal.shifts[1][0];
    let p = minimal.rank(2);
    let mut degrees: Vec<i64> = (0..p).map(|c| minimal.shifts[2][c] - dm1).collect();
    let mut gens: Vec<Vec<Polynomial<F>>> = Vec::with_capacity(p);
    for c in 0..p {
        // column c of M_2 is a syzygy of first_gens; push through U
        let mut rho = vec![Polynomial::zero(field, nvars); n];
        for r in 0..minimal.rank(1) {
            let e = &minimal.mats[1][r][c];
            if e.is_zero() {
                continue;
            }
            for (j, rj) in rho.iter_mut().enumerate().take(n) {
                if field.is_zero(&u[r][j]) {
                    continue;
                }
                *rj = rj.add(&e.scalar_mul(&u[r][j]));
            }
        }
        // exactness check against the partials
        let mut acc = Polynomial::zero(field, nvars);
        for (j, pj) in partials.iter().enumerate() {
            acc = acc.add(&rho[j].mul(pj));
        }
        if !acc.is_zero() {
            return Err(EngineError::NotASyzygy(
                "converted resolution column does not annihilate the partials".into(),
            ));
        }
        gens.push(rho);
    }
    // sort generators by degree (stable)
    let mut idx: Vec<usize> = (0..p).collect();
    idx.sort_by_key(|&i| degrees[i]);
    let gens: Vec<_> = idx.iter().map(|&i| gens[i].clone()).collect();
    degrees.sort_unstable();

    // Koszul submodule KR(f): theta_{i,j} = f_j e_i - f_i e_j
    let mut koszul: Vec<ModElem<F>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let e = ModElem::from_comps(vec![
                (i as u32, partials[j].clone()),
                (j as u32, partials[i].neg()),
            ]);
            if !e.is_zero() {
                koszul.push(e);
            }
        }
    }
    let shifts0 = vec![0i64; n];
    let maxdeg = degrees.last().copied().unwrap_or(0);
    let opts = GbOpts {
        max_degree: Some(maxdeg),
        ..GbOpts::default()
    };
    let kr_gb = buchberger(
        field,
        nvars,
        &ModuleOrder::Pot,
        &koszul,
        Some(&shifts0),
        &opts,
    );
    let mut mdr = None;
    for (k, rho) in gens.iter().enumerate() {
        let elem = ModElem::from_comps(
            rho.iter()
                .enumerate()
                .map(|(i, p)| (i as u32, p.clone()))
                .collect(),
        );
        if !normal_form(&elem, &kr_gb).is_zero() {
            mdr = Some(degrees[k]);
            break;
        }
    }
    Ok(ArData {
        generator_degrees: degrees,
        generators: gens,
        mdr,
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

    fn jacobian(f: &Polynomial<Rationals>) -> Vec<Polynomial<Rationals>> {
        (0..4).map(|v| f.partial_derivative(v)).collect()
    }

    fn resolve_minimal(f: &Polynomial<Rationals>) -> (Complex<Rationals>, Gb<Rationals>) {
        let build = schreyer_resolution(&Rationals, 4, &jacobian(f)).unwrap();
        assert!(build.complex.composes_to_zero());
        assert!(build.complex.graded_entries_ok());
        let min = minimalize(&build.complex);
        assert!(min.composes_to_zero());
        assert!(min.graded_entries_ok());
        (min, build.gb)
    }

    #[test]
    fn smooth_fermat_koszul_shape() {
        let f = q("x^3 + y^3 + z^3 + t^3");
        let (min, gb) = resolve_minimal(&f);
        let ranks: Vec<usize> = min.shifts.iter().map(|s| s.len()).collect();
        assert_eq!(ranks, vec![1, 4, 6, 4, 1]);
        assert_eq!(min.shifts[1], vec![2, 2, 2, 2]);
        assert_eq!(min.shifts[2], vec![4; 6]);
        assert_eq!(min.shifts[3], vec![6; 4]);
        assert_eq!(min.shifts[4], vec![8]);
        let betti = extract_betti(&min, 3, 4).unwrap();
        assert_eq!(betti.d_seq, vec![2; 6]);
        assert_eq!(betti.c_seq, vec![4; 4]);
        assert_eq!(betti.b_seq, vec![6]);
        // Hilbert slices match the staircase count
        for k in 0..=10 {
            assert_eq!(min.hilbert_slice(k), quotient_dim_from_gb(&gb, k as u16));
        }
        // all syzygies of a regular sequence are Koszul
        let ar = ar_generators_and_mdr(&Rationals, 4, &jacobian(&f), &min).unwrap();
        assert_eq!(ar.generator_degrees, vec![2; 6]);
        assert_eq!(ar.mdr, None);
    }

    #[test]
    fn cayley_cubic_resolution() {
        let f = q("x*y*z + x*y*t + x*z*t + y*z*t");
        let (min, gb) = resolve_minimal(&f);
        let betti = extract_betti(&min, 3, 4).unwrap();
        assert_eq!(betti.d_seq, vec![2; 9]);
        assert_eq!(betti.c_seq, vec![3; 8]);
        assert_eq!(betti.b_seq, vec![4, 4]);
        // dim M(f)_k stabilizes at tau = 4
        assert_eq!(min.hilbert_slice(10), 4);
        assert_eq!(quotient_dim_from_gb(&gb, 10), 4);
        assert_eq!(min.hilbert_slice(2), 6);
        // three independent degree-2 syzygies exist
        let ar = ar_generators_and_mdr(&Rationals, 4, &jacobian(&f), &min).unwrap();
        assert_eq!(ar.generator_degrees, vec![2; 9]);
        assert_eq!(ar.mdr, Some(2));
    }

    #[test]
    fn ex1_cubic_cone_like_resolution() {
        let f = q("x*y*z - t^3");
        let (min, _) = resolve_minimal(&f);
        let betti = extract_betti(&min, 3, 4).unwrap();
        assert_eq!(betti.d_seq, vec![1, 1, 2, 2, 2]);
        assert_eq!(betti.c_seq, vec![3, 3]);
        assert_eq!(betti.b_seq, Vec::<i64>::new());
        // r = 0: length-3 resolution
        assert_eq!(min.length(), 3);
    }

    #[test]
    fn minimalize_is_idempotent() {
        let f = q("x*y*z - t^3");
        let build = schreyer_resolution(&Rationals, 4, &jacobian(&f)).unwrap();
        let min = minimalize(&build.complex);
        let min2 = minimalize(&min);
        assert_eq!(min.shifts, min2.shifts);
    }

    #[test]
    fn degenerate_cone_flagged() {
        // f = x^3: only one nonzero partial
        let f = q("x^3");
        let build = schreyer_resolution(&Rationals, 4, &jacobian(&f)).unwrap();
        let min = minimalize(&build.complex);
        assert!(matches!(
            extract_betti(&min, 3, 4),
            Err(ExtractError::FirstModule { .. })
        ));
    }

    #[test]
    fn betti_reconstruction_roundtrip() {
        let f = q("x*y*z + x*y*t + x*z*t + y*z*t");
        let (min, _) = resolve_minimal(&f);
        let betti = extract_betti(&min, 3, 4).unwrap();
        assert_eq!(betti.reconstruct_shifts(4), min.shifts);
    }
}
