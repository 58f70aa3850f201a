//! Buchberger Gröbner bases for ideals and submodules of graded free
//! modules, normal forms, Schreyer syzygies, and radical membership.
//!
//! Everything is deterministic: pairs are processed in (degree, i, j)
//! order, reducers are chosen by smallest index, and output bases are
//! interreduced, monic and canonically sorted.

use crate::error::EngineError;
use crate::field::Field;
use crate::module::ModElem;
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, SchreyerKey};
use crate::poly::Polynomial;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};

// ---------------------------------------------------------------------------
// geobuckets

/// A polynomial under construction, held as buckets of geometrically
/// growing size so that repeated add-scaled-polynomial steps stay cheap.
/// Buckets are sorted ascending; the true leading term is computed across
/// buckets on demand and cached in `pending`.
struct Geobucket<F: Field> {
    field: F,
    buckets: Vec<Vec<(Monomial, F::Elem)>>,
    pending: Option<(Monomial, F::Elem)>,
}

const GEO_BASE: usize = 4;

fn geo_cap(i: usize) -> usize {
    GEO_BASE.pow(i as u32 + 1)
}

/// Merge two ascending term lists, combining equal monomials.
fn merge_terms<F: Field>(
    field: &F,
    a: Vec<(Monomial, F::Elem)>,
    b: Vec<(Monomial, F::Elem)>,
) -> Vec<(Monomial, F::Elem)> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => {
                out.extend(ia.by_ref());
                break;
            }
            (None, Some(_)) => {
                out.extend(ib.by_ref());
                break;
            }
            (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                Ordering::Less => out.push(ia.next().unwrap()),
                Ordering::Greater => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let (m, ca) = ia.next().unwrap();
                    let (_, cb) = ib.next().unwrap();
                    let c = field.add(&ca, &cb);
                    if !field.is_zero(&c) {
                        out.push((m, c));
                    }
                }
            },
        }
    }
    out
}

impl<F: Field> Geobucket<F> {
    fn new(field: &F) -> Self {
        Geobucket {
            field: field.clone(),
            buckets: Vec::new(),
            pending: None,
        }
    }

    fn insert_terms(&mut self, terms: Vec<(Monomial, F::Elem)>) {
        if terms.is_empty() {
            return;
        }
        let mut i = 0;
        while geo_cap(i) < terms.len() {
            i += 1;
        }
        while self.buckets.len() <= i {
            self.buckets.push(Vec::new());
        }
        let merged = merge_terms(&self.field, std::mem::take(&mut self.buckets[i]), terms);
        self.buckets[i] = merged;
        // carry upward while over capacity
        let mut j = i;
        while self.buckets[j].len() > geo_cap(j) {
            if self.buckets.len() == j + 1 {
                self.buckets.push(Vec::new());
            }
            let up = std::mem::take(&mut self.buckets[j + 1]);
            let cur = std::mem::take(&mut self.buckets[j]);
            self.buckets[j + 1] = merge_terms(&self.field, up, cur);
            j += 1;
        }
    }

    /// Add coeff * mono * p.
    fn add_scaled(&mut self, k: &F::Elem, m: &Monomial, p: &Polynomial<F>) {
        if self.field.is_zero(k) || p.is_zero() {
            return;
        }
        if let Some(t) = self.pending.take() {
            self.insert_terms(vec![t]);
        }
        let mut terms: Vec<(Monomial, F::Elem)> = Vec::with_capacity(p.num_terms());
        for (mm, c) in p.terms().iter().rev() {
            let coeff = self.field.mul(c, k);
            if !self.field.is_zero(&coeff) {
                terms.push((mm.mul(m), coeff));
            }
        }
        self.insert_terms(terms);
    }

    fn peek(&mut self) -> Option<&(Monomial, F::Elem)> {
        if self.pending.is_none() {
            loop {
                let mut best: Option<Monomial> = None;
                for b in &self.buckets {
                    if let Some((m, _)) = b.last() {
                        if best.map_or(true, |bm| *m > bm) {
                            best = Some(*m);
                        }
                    }
                }
                let m = best?;
                let mut acc = self.field.zero();
                for b in self.buckets.iter_mut() {
                    if b.last().map_or(false, |(bm, _)| *bm == m) {
                        let (_, c) = b.pop().unwrap();
                        acc = self.field.add(&acc, &c);
                    }
                }
                if !self.field.is_zero(&acc) {
                    self.pending = Some((m, acc));
                    break;
                }
            }
        }
        self.pending.as_ref()
    }

    fn pop(&mut self) -> Option<(Monomial, F::Elem)> {
        self.peek();
        self.pending.take()
    }

    fn rescale(&mut self, k: &F::Elem) {
        for b in self.buckets.iter_mut() {
            for (_, c) in b.iter_mut() {
                *c = self.field.mul(c, k);
            }
        }
        if let Some((_, c)) = self.pending.as_mut() {
            *c = self.field.mul(c, k);
        }
    }

    fn for_each_coeff(&self, f: &mut dyn FnMut(&F::Elem)) {
        for b in &self.buckets {
            for (_, c) in b {
                f(c);
            }
        }
        if let Some((_, c)) = &self.pending {
            f(c);
        }
    }
}

// ---------------------------------------------------------------------------
// module reduction

struct WorkElem<F: Field> {
    comps: BTreeMap<u32, Geobucket<F>>,
}

impl<F: Field> WorkElem<F> {
    fn from_elem(field: &F, v: &ModElem<F>) -> Self {
        let mut comps = BTreeMap::new();
        for (c, p) in v.comps() {
            let mut gb = Geobucket::new(field);
            gb.add_scaled(&field.one(), &Monomial::one(), p);
            comps.insert(*c, gb);
        }
        WorkElem { comps }
    }

    fn peek_lead(&mut self, order: &ModuleOrder) -> Option<(Monomial, u32, F::Elem)> {
        let mut empty: Vec<u32> = Vec::new();
        let mut best: Option<(Monomial, u32, F::Elem)> = None;
        for (&c, gb) in self.comps.iter_mut() {
            match gb.peek() {
                None => empty.push(c),
                Some((m, k)) => {
                    let better = match &best {
                        None => true,
                        Some((bm, bc, _)) => {
                            order.cmp_terms((m, c), (bm, *bc)) == Ordering::Greater
                        }
                    };
                    if better {
                        best = Some((*m, c, k.clone()));
                    }
                }
            }
        }
        for c in empty {
            self.comps.remove(&c);
        }
        best
    }

    fn pop_at(&mut self, c: u32) {
        if let Some(gb) = self.comps.get_mut(&c) {
            gb.pop();
        }
    }

    fn sub_scaled(&mut self, field: &F, k: &F::Elem, m: &Monomial, g: &ModElem<F>) {
        let neg = field.neg(k);
        for (c, p) in g.comps() {
            self.comps
                .entry(*c)
                .or_insert_with(|| Geobucket::new(field))
                .add_scaled(&neg, m, p);
        }
    }

    fn rescale(&mut self, k: &F::Elem) {
        for gb in self.comps.values_mut() {
            gb.rescale(k);
        }
    }

    fn content(&self, field: &F) -> Option<F::Elem> {
        let mut owned: Vec<F::Elem> = Vec::new();
        for gb in self.comps.values() {
            gb.for_each_coeff(&mut |c| owned.push(c.clone()));
        }
        field.common_content(&owned)
    }
}

/// Quotient record from a reduction: index of the reducer, monomial and
/// coefficient, meaning `q = coeff * mono * gens[idx]` was subtracted.
pub type TraceStep<F> = (usize, Monomial, <F as Field>::Elem);

/// A reduction basis: precomputed leads and tails for a fixed generator list.
pub struct RedBasis<'a, F: Field> {
    field: &'a F,
    nvars: usize,
    order: &'a ModuleOrder,
    gens: &'a [ModElem<F>],
    leads: Vec<Option<(Monomial, u32, F::Elem)>>,
    tails: Vec<ModElem<F>>,
}

impl<'a, F: Field> RedBasis<'a, F> {
    pub fn new(
        field: &'a F,
        nvars: usize,
        order: &'a ModuleOrder,
        gens: &'a [ModElem<F>],
    ) -> Self {
        let mut leads = Vec::with_capacity(gens.len());
        let mut tails = Vec::with_capacity(gens.len());
        for g in gens {
            match g.lead(order) {
                None => {
                    leads.push(None);
                    tails.push(ModElem::zero());
                }
                Some((m, c, k)) => {
                    // tail = g minus its leading term
                    let mut comps: Vec<(u32, Polynomial<F>)> = Vec::new();
                    for (cc, p) in g.comps() {
                        if *cc == c {
                            let rest: Vec<_> = p
                                .terms()
                                .iter()
                                .filter(|(mm, _)| *mm != m)
                                .cloned()
                                .collect();
                            let q = Polynomial::from_terms(field, nvars, rest);
                            if !q.is_zero() {
                                comps.push((*cc, q));
                            }
                        } else {
                            comps.push((*cc, p.clone()));
                        }
                    }
                    leads.push(Some((m, c, k)));
                    tails.push(ModElem::from_comps(comps));
                }
            }
        }
        RedBasis {
            field,
            nvars,
            order,
            gens,
            leads,
            tails,
        }
    }

    fn find_reducer(&self, m: &Monomial, c: u32, skip: Option<usize>) -> Option<usize> {
        for (i, lead) in self.leads.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            if let Some((lm, lc, _)) = lead {
                if *lc == c && lm.divides(m) {
                    return Some(i);
                }
            }
        }
        None
    }

    /// Reduce v against the basis. Returns (normal form, trace, lambda)
    /// with lambda * v == sum(trace) . gens + nf exactly. When `to_zero`
    /// is set, a nonzero normal form is an internal error.
    pub fn reduce(
        &self,
        v: &ModElem<F>,
        skip: Option<usize>,
        to_zero: bool,
        want_trace: bool,
    ) -> Result<(ModElem<F>, Vec<TraceStep<F>>, F::Elem), EngineError> {
        let field = self.field;
        let mut work = WorkElem::from_elem(field, v);
        let mut nf: BTreeMap<u32, Vec<(Monomial, F::Elem)>> = BTreeMap::new();
        let mut trace: Vec<TraceStep<F>> = Vec::new();
        let mut lambda = field.one();
        let mut steps: u64 = 0;
        while let Some((m, c, k)) = work.peek_lead(self.order) {
            match self.find_reducer(&m, c, skip) {
                None => {
                    if to_zero {
                        return Err(EngineError::Validation(
                            "S-pair of a Gröbner basis failed to reduce to zero".into(),
                        ));
                    }
                    work.pop_at(c);
                    nf.entry(c).or_default().push((m, k));
                }
                Some(i) => {
                    let (lm, _, lc) = self.leads[i].as_ref().unwrap();
                    let qm = lm.div_into(&m).expect("divisibility checked");
                    let qc = if field.is_one(lc) {
                        k.clone()
                    } else {
                        field.div(&k, lc)
                    };
                    work.pop_at(c);
                    work.sub_scaled(field, &qc, &qm, &self.tails[i]);
                    if want_trace {
                        trace.push((i, qm, qc));
                    }
                    steps += 1;
                    // coefficient-growth control over Q: strip common content
                    if steps % 24 == 0 && field.size_hint(&k) > 512 {
                        if let Some(content) = work.content(field) {
                            let inv = field.inv(&content);
                            work.rescale(&inv);
                            for (_, _, qk) in trace.iter_mut() {
                                *qk = field.mul(qk, &inv);
                            }
                            for terms in nf.values_mut() {
                                for (_, ck) in terms.iter_mut() {
                                    *ck = field.mul(ck, &inv);
                                }
                            }
                            lambda = field.mul(&lambda, &inv);
                        }
                    }
                }
            }
        }
        let comps: Vec<(u32, Polynomial<F>)> = nf
            .into_iter()
            .map(|(c, mut terms)| {
                terms.reverse(); // popped in descending order
                (c, Polynomial::from_terms(field, self.nvars, terms))
            })
            .collect();
        Ok((ModElem::from_comps(comps), trace, lambda))
    }
}

// ---------------------------------------------------------------------------
// Buchberger

#[derive(Clone, Debug)]
pub struct GbOpts {
    pub track_cofactors: bool,
    pub use_criteria: bool,
    /// Stop once every remaining pair exceeds this degree; sound for
    /// homogeneous inputs (yields a d-truncated basis).
    pub max_degree: Option<i64>,
}

impl Default for GbOpts {
    fn default() -> Self {
        GbOpts {
            track_cofactors: false,
            use_criteria: true,
            max_degree: None,
        }
    }
}

/// A computed Gröbner basis: monic, interreduced, canonically sorted.
pub struct Gb<F: Field> {
    pub field: F,
    pub nvars: usize,
    pub order: ModuleOrder,
    pub elems: Vec<ModElem<F>>,
    /// When tracked: elems[k] == cofactors[k] applied to the input list.
    pub cofactors: Option<Vec<ModElem<F>>>,
}

impl<F: Field> Gb<F> {
    pub fn lead_terms(&self) -> Vec<(Monomial, u32)> {
        self.elems
            .iter()
            .map(|g| {
                let (m, c, _) = g.lead(&self.order).expect("GB elements are nonzero");
                (m, c)
            })
            .collect()
    }
}

fn pair_degree<F: Field>(
    leads: &[(Monomial, u32, F::Elem)],
    shifts: Option<&[i64]>,
    i: usize,
    j: usize,
) -> i64 {
    let lcm = leads[i].0.lcm(&leads[j].0);
    let base = lcm.degree() as i64;
    match shifts {
        Some(s) => base + s[leads[i].1 as usize],
        None => base,
    }
}

/// Core Buchberger loop over a free module. `shifts` gives the grading of
/// the ambient module when the input is homogeneous (used for the normal
/// selection strategy and degree truncation).
pub fn buchberger<F: Field>(
    field: &F,
    nvars: usize,
    order: &ModuleOrder,
    gens: &[ModElem<F>],
    shifts: Option<&[i64]>,
    opts: &GbOpts,
) -> Gb<F> {
    let mut elems: Vec<ModElem<F>> = Vec::new();
    let mut cofs: Vec<ModElem<F>> = Vec::new();
    let mut leads: Vec<(Monomial, u32, F::Elem)> = Vec::new();

    for (gi, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let (m, c, lc) = g.lead(order).unwrap();
        let inv = field.inv(&lc);
        elems.push(g.scalar_mul(&inv, field));
        if opts.track_cofactors {
            cofs.push(ModElem::from_comps(vec![(
                gi as u32,
                Polynomial::constant(field, nvars, inv.clone()),
            )]));
        }
        leads.push((m, c, field.one()));
    }

    let is_ring = elems
        .iter()
        .all(|g| g.comps().iter().all(|(c, _)| *c == 0));

    let mut pairs: BTreeSet<(i64, u32, u32)> = BTreeSet::new();
    let mut done: HashSet<(u32, u32)> = HashSet::new();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            if leads[i].1 == leads[j].1 {
                pairs.insert((pair_degree::<F>(&leads, shifts, i, j), i as u32, j as u32));
            }
        }
    }

    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        if let Some(maxd) = opts.max_degree {
            if deg > maxd {
                break; // all remaining pairs have at least this degree
            }
        }
        let (i, j) = (i as usize, j as usize);
        done.insert((i as u32, j as u32));
        if opts.use_criteria {
            // product criterion (valid for ring ideals only)
            if is_ring && leads[i].0.coprime(&leads[j].0) {
                continue;
            }
            // chain criterion: some k with lead dividing lcm(i,j) whose
            // pairs with i and j are both already off the queue
            let lcm = leads[i].0.lcm(&leads[j].0);
            let comp = leads[i].1;
            let mut skip = false;
            for (k, lk) in leads.iter().enumerate() {
                if k == i || k == j || lk.1 != comp || !lk.0.divides(&lcm) {
                    continue;
                }
                let pik = (i.min(k) as u32, i.max(k) as u32);
                let pjk = (j.min(k) as u32, j.max(k) as u32);
                if done.contains(&pik) && done.contains(&pjk) {
                    skip = true;
                    break;
                }
            }
            if skip {
                continue;
            }
        }

        let lcm = leads[i].0.lcm(&leads[j].0);
        let ui = leads[i].0.div_into(&lcm).unwrap();
        let uj = leads[j].0.div_into(&lcm).unwrap();
        let one = field.one();
        let spair = elems[i]
            .mul_term(&one, &ui, field)
            .sub(&elems[j].mul_term(&one, &uj, field));
        if spair.is_zero() {
            continue;
        }
        let basis = RedBasis::new(field, nvars, order, &elems);
        let (nf, trace, lambda) = basis
            .reduce(&spair, None, false, opts.track_cofactors)
            .expect("plain reduction cannot fail");
        if nf.is_zero() {
            continue;
        }
        let (m, c, lc) = nf.lead(order).unwrap();
        let inv = field.inv(&lc);
        let h = nf.scalar_mul(&inv, field);
        if opts.track_cofactors {
            // lambda*(ui*cof_i - uj*cof_j) - sum(trace_k*cof_k), then /lc
            let mut cof = cofs[i]
                .mul_term(&lambda, &ui, field)
                .sub(&cofs[j].mul_term(&lambda, &uj, field));
            for (k, qm, qc) in &trace {
                cof = cof.sub(&cofs[*k].mul_term(qc, qm, field));
            }
            cofs.push(cof.scalar_mul(&inv, field));
        }
        let new = elems.len();
        elems.push(h);
        leads.push((m, c, field.one()));
        for k in 0..new {
            if leads[k].1 == c {
                pairs.insert((
                    pair_degree::<F>(&leads, shifts, k, new),
                    k as u32,
                    new as u32,
                ));
            }
        }
    }

    // minimal basis: drop elements whose lead is divisible by another's
    let n = elems.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        if !keep[i] {
            continue;
        }
        for j in 0..n {
            if i == j || !keep[j] {
                continue;
            }
            let (mi, ci, _) = &leads[i];
            let (mj, cj, _) = &leads[j];
            if ci == cj && mj.divides(mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<ModElem<F>> = Vec::new();
    let mut kept_cofs: Vec<ModElem<F>> = Vec::new();
    for i in 0..n {
        if keep[i] {
            kept.push(elems[i].clone());
            if opts.track_cofactors {
                kept_cofs.push(cofs[i].clone());
            }
        }
    }

    // tail interreduction to the reduced basis
    let mut passes = 0;
    loop {
        let mut changed = false;
        for a in 0..kept.len() {
            let snapshot = kept.clone();
            let basis = RedBasis::new(field, nvars, order, &snapshot);
            let (nf, trace, lambda) = basis
                .reduce(&kept[a], Some(a), false, opts.track_cofactors)
                .expect("plain reduction cannot fail");
            let (_, _, lc) = nf.lead(order).expect("lead survives tail reduction");
            let inv = field.inv(&lc);
            let h = nf.scalar_mul(&inv, field);
            if h != kept[a] {
                changed = true;
                if opts.track_cofactors {
                    let mut cof = kept_cofs[a].scalar_mul(&lambda, field);
                    for (k, qm, qc) in &trace {
                        cof = cof.sub(&kept_cofs[*k].mul_term(qc, qm, field));
                    }
                    kept_cofs[a] = cof.scalar_mul(&inv, field);
                }
                kept[a] = h;
            }
        }
        passes += 1;
        if !changed || passes > 8 {
            break;
        }
    }

    // canonical sort: ascending by lead term under the module order
    let mut idx: Vec<usize> = (0..kept.len()).collect();
    idx.sort_by(|&a, &b| {
        let la = kept[a].lead(order).unwrap();
        let lb = kept[b].lead(order).unwrap();
        order.cmp_terms((&la.0, la.1), (&lb.0, lb.1))
    });
    let elems: Vec<ModElem<F>> = idx.iter().map(|&i| kept[i].clone()).collect();
    let cofactors = if opts.track_cofactors {
        Some(idx.iter().map(|&i| kept_cofs[i].clone()).collect())
    } else {
        None
    };

    Gb {
        field: field.clone(),
        nvars,
        order: order.clone(),
        elems,
        cofactors,
    }
}

/// Reduced Gröbner basis of a list of homogeneous module elements.
/// Rejects inhomogeneous input: the engine is graded-only at this surface.
pub fn groebner_basis<F: Field>(
    field: &F,
    nvars: usize,
    order: &ModuleOrder,
    gens: &[ModElem<F>],
    shifts: &[i64],
) -> Result<Gb<F>, EngineError> {
    for g in gens {
        g.homogeneous_degree(shifts)?;
    }
    Ok(buchberger(
        field,
        nvars,
        order,
        gens,
        Some(shifts),
        &GbOpts::default(),
    ))
}

/// Normal form of v against a Gröbner basis: no monomial of the result is
/// divisible by a lead term of the basis, and NF(v) == 0 iff v lies in the
/// module generated by the basis.
pub fn normal_form<F: Field>(v: &ModElem<F>, gb: &Gb<F>) -> ModElem<F> {
    let basis = RedBasis::new(&gb.field, gb.nvars, &gb.order, &gb.elems);
    let (nf, _, lambda) = basis
        .reduce(v, None, false, false)
        .expect("plain reduction cannot fail");
    let inv = gb.field.inv(&lambda);
    nf.scalar_mul(&inv, &gb.field)
}

/// Check the Buchberger criterion: every same-component S-pair of the
/// given elements reduces to zero against them.
pub fn is_groebner_basis<F: Field>(
    field: &F,
    nvars: usize,
    order: &ModuleOrder,
    elems: &[ModElem<F>],
) -> bool {
    let leads: Vec<_> = elems
        .iter()
        .map(|g| g.lead(order).expect("nonzero"))
        .collect();
    let basis = RedBasis::new(field, nvars, order, elems);
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            if leads[i].1 != leads[j].1 {
                continue;
            }
            let lcm = leads[i].0.lcm(&leads[j].0);
            let ui = leads[i].0.div_into(&lcm).unwrap();
            let uj = leads[j].0.div_into(&lcm).unwrap();
            let ci = field.inv(&leads[i].2);
            let cj = field.inv(&leads[j].2);
            let spair = elems[i]
                .mul_term(&ci, &ui, field)
                .sub(&elems[j].mul_term(&cj, &uj, field));
            let (nf, _, _) = basis.reduce(&spair, None, false, false).unwrap();
            if !nf.is_zero() {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Schreyer syzygies

/// One level of a Schreyer tower: syzygies of a Gröbner basis extracted
/// from S-pair reduction traces. The input must be a Gröbner basis whose
/// lead terms are pairwise non-divisible; the output generates the full
/// syzygy module and is itself a Gröbner basis for the induced order.
pub struct SchreyerStep<F: Field> {
    /// Syzygies as elements of the free module with one basis vector per
    /// input generator, monic under `next_order`.
    pub syzygies: Vec<ModElem<F>>,
    pub next_order: ModuleOrder,
    /// Shifts of the new free module: degrees of the input generators.
    pub next_shifts: Vec<i64>,
}

/// Schreyer keys for the module surjecting onto the span of `gens`.
pub fn induced_keys<F: Field>(
    gens: &[ModElem<F>],
    order: &ModuleOrder,
) -> Vec<SchreyerKey> {
    let parent: Vec<SchreyerKey> = match order {
        ModuleOrder::Schreyer(keys) => keys.clone(),
        ModuleOrder::Pot => Vec::new(),
    };
    gens.iter()
        .map(|g| {
            let (m, c, _) = g.lead(order).expect("nonzero generator");
            match parent.get(c as usize) {
                Some(k) => SchreyerKey {
                    totalmon: m.mul(&k.totalmon),
                    path: {
                        let mut p = k.path.clone();
                        p.push(c);
                        p
                    },
                },
                None => SchreyerKey {
                    totalmon: m,
                    path: vec![c],
                },
            }
        })
        .collect()
}

/// Compute the syzygies of a Gröbner basis via S-pair traces, pruned to
/// the minimal generators of the lead-term module (per lead component,
/// the divisibility-minimal pair monomials).
pub fn schreyer_syzygies<F: Field>(
    field: &F,
    nvars: usize,
    order: &ModuleOrder,
    gens: &[ModElem<F>],
    shifts: &[i64],
) -> Result<SchreyerStep<F>, EngineError> {
    let leads: Vec<(Monomial, u32, F::Elem)> = gens
        .iter()
        .map(|g| g.lead(order).expect("nonzero generator"))
        .collect();
    let mut next_shifts: Vec<i64> = Vec::with_capacity(gens.len());
    for g in gens {
        let d = g
            .homogeneous_degree(shifts)?
            .expect("nonzero generator has a degree");
        next_shifts.push(d);
    }
    let next_order = ModuleOrder::Schreyer(induced_keys(gens, order));

    // candidate pairs per i: minimal m_ij = lcm(lm_i, lm_j)/lm_i over j > i
    let mut chosen: Vec<(i64, usize, usize, Monomial, Monomial)> = Vec::new();
    for i in 0..gens.len() {
        let mut cands: Vec<(Monomial, usize)> = Vec::new();
        for j in (i + 1)..gens.len() {
            if leads[i].1 != leads[j].1 {
                continue;
            }
            let lcm = leads[i].0.lcm(&leads[j].0);
            let mij = leads[i].0.div_into(&lcm).unwrap();
            cands.push((mij, j));
        }
        cands.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.cmp(&b.0))
                .then_with(|| a.1.cmp(&b.1))
        });
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        'cand: for (m, j) in cands {
            for (km, _) in &kept {
                if km.divides(&m) {
                    continue 'cand;
                }
            }
            kept.push((m, j));
        }
        for (mij, j) in kept {
            let lcm = leads[i].0.mul(&mij);
            let uj = leads[j].0.div_into(&lcm).unwrap();
            let deg = lcm.degree() as i64 + shifts[leads[i].1 as usize];
            chosen.push((deg, i, j, mij, uj));
        }
    }
    chosen.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));

    let basis = RedBasis::new(field, nvars, order, gens);
    let mut syzygies = Vec::with_capacity(chosen.len());
    for (_, i, j, ui, uj) in chosen {
        let one = field.one();
        let spair = gens[i]
            .mul_term(&one, &ui, field)
            .sub(&gens[j].mul_term(&one, &uj, field));
        let (nf, trace, lambda) = basis.reduce(&spair, None, true, true)?;
        debug_assert!(nf.is_zero());
        // sigma = lambda*(ui e_i - uj e_j) - sum trace_k e_k
        let mut acc: BTreeMap<u32, Vec<(Monomial, F::Elem)>> = BTreeMap::new();
        acc.entry(i as u32).or_default().push((ui, lambda.clone()));
        acc.entry(j as u32)
            .or_default()
            .push((uj, field.neg(&lambda)));
        for (k, qm, qc) in trace {
            acc.entry(k as u32).or_default().push((qm, field.neg(&qc)));
        }
        let comps: Vec<(u32, Polynomial<F>)> = acc
            .into_iter()
            .map(|(c, ts)| (c, Polynomial::from_terms(field, nvars, ts)))
            .collect();
        let sigma = ModElem::from_comps(comps);
        syzygies.push(sigma.monic(&next_order, field));
    }

    Ok(SchreyerStep {
        syzygies,
        next_order,
        next_shifts,
    })
}

// ---------------------------------------------------------------------------
// syzygies of arbitrary generators

/// A finite homogeneous generating set of the first syzygy module of the
/// given generators. Every returned element v satisfies
/// `v.apply_to(gens) == 0` exactly; this is asserted before returning.
pub fn syzygy_generators<F: Field>(
    field: &F,
    nvars: usize,
    order: &ModuleOrder,
    gens: &[ModElem<F>],
    shifts: &[i64],
) -> Result<Vec<ModElem<F>>, EngineError> {
    for g in gens {
        g.homogeneous_degree(shifts)?;
    }
    let opts = GbOpts {
        track_cofactors: true,
        ..GbOpts::default()
    };
    let gb = buchberger(field, nvars, order, gens, Some(shifts), &opts);
    let cofs = gb.cofactors.as_ref().unwrap();

    let mut out: Vec<ModElem<F>> = Vec::new();

    // relations e_i - B_i . H where H = GB, B from reducing gens[i]
    let basis = RedBasis::new(field, nvars, order, &gb.elems);
    for (gi, g) in gens.iter().enumerate() {
        if g.is_zero() {
            // a zero generator contributes the unit syzygy e_i
            out.push(ModElem::from_comps(vec![(
                gi as u32,
                Polynomial::one(field, nvars),
            )]));
            continue;
        }
        let (nf, trace, lambda) = basis.reduce(g, None, false, true)?;
        if !nf.is_zero() {
            return Err(EngineError::Validation(
                "generator failed to reduce against its own Gröbner basis".into(),
            ));
        }
        // lambda*g_i = sum trace_k H_k  =>  syzygy: lambda e_i - sum trace_k cof_k
        let mut s = ModElem::from_comps(vec![(
            gi as u32,
            Polynomial::constant(field, nvars, lambda.clone()),
        )]);
        for (k, qm, qc) in trace {
            s = s.sub(&cofs[k].mul_term(&qc, &qm, field));
        }
        if !s.is_zero() {
            out.push(s);
        }
    }

    // Schreyer syzygies of the GB, pushed through the cofactor matrix
    let step = schreyer_syzygies(field, nvars, order, &gb.elems, shifts)?;
    for sigma in &step.syzygies {
        let mut s = ModElem::zero();
        for (k, p) in sigma.comps() {
            s = s.add(&cofs[*k as usize].mul_poly(p));
        }
        if !s.is_zero() {
            out.push(s);
        }
    }

    // soundness: every output is an exact syzygy
    for s in &out {
        assert!(
            s.apply_to(gens).is_zero(),
            "syzygy output failed the exactness check"
        );
    }

    // canonical: monic, sorted by degree then lead
    let mut out: Vec<ModElem<F>> = out
        .into_iter()
        .map(|s| s.monic(order, field))
        .collect();
    out.sort_by(|a, b| {
        let da = a.homogeneous_degree(shifts).ok().flatten().unwrap_or(0);
        let db = b.homogeneous_degree(shifts).ok().flatten().unwrap_or(0);
        da.cmp(&db).then_with(|| {
            let la = a.lead(order).unwrap();
            let lb = b.lead(order).unwrap();
            order.cmp_terms((&la.0, la.1), (&lb.0, lb.1))
        })
    });
    out.dedup();
    Ok(out)
}

// ---------------------------------------------------------------------------
// radical membership

/// Rabinowitsch test: ell vanishes on the zero set of the ideal iff
/// 1 lies in (ideal, 1 - w*ell) in a ring with one fresh variable w.
pub fn radical_membership<F: Field>(
    field: &F,
    nvars: usize,
    ell: &Polynomial<F>,
    ideal: &[Polynomial<F>],
) -> Result<bool, EngineError> {
    if ell.is_zero() {
        return Err(EngineError::Validation(
            "radical membership needs a nonzero polynomial".into(),
        ));
    }
    let n2 = nvars + 1;
    if n2 > crate::monomial::MAX_VARS {
        return Err(EngineError::Validation("no free variable slot left".into()));
    }
    let w = Polynomial::variable(field, n2, n2 - 1);
    let mut gens: Vec<ModElem<F>> = ideal
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| ModElem::from_poly(p.extend_vars(n2)))
        .collect();
    let one = Polynomial::one(field, n2);
    gens.push(ModElem::from_poly(one.sub(&w.mul(&ell.extend_vars(n2)))));
    let gb = buchberger(
        field,
        n2,
        &ModuleOrder::Pot,
        &gens,
        None,
        &GbOpts::default(),
    );
    Ok(gb.elems.iter().any(|g| {
        g.comps().len() == 1 && g.comps()[0].1.num_terms() == 1 && {
            let (m, _) = g.comps()[0].1.leading_term().unwrap();
            m.is_one()
        }
    }))
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

    fn ideal_gb(gens: &[&str]) -> Gb<Rationals> {
        let gens: Vec<ModElem<Rationals>> =
            gens.iter().map(|s| ModElem::from_poly(q(s))).collect();
        groebner_basis(&Rationals, 4, &ModuleOrder::Pot, &gens, &[0]).unwrap()
    }

    fn gb_polys(gb: &Gb<Rationals>) -> Vec<Polynomial<Rationals>> {
        gb.elems
            .iter()
            .map(|e| e.comps()[0].1.clone())
            .collect()
    }

    #[test]
    fn already_a_basis() {
        let gb = ideal_gb(&["x", "y"]);
        assert_eq!(gb_polys(&gb), vec![q("y"), q("x")]);
    }

    #[test]
    fn hand_computed_spolynomial_chain() {
        // one S-polynomial reduction: {x^2, xy + y^2} completes with y^3
        let gb = ideal_gb(&["x^2", "x*y + y^2"]);
        let polys = gb_polys(&gb);
        assert_eq!(polys.len(), 3);
        assert!(polys.contains(&q("x^2")));
        assert!(polys.contains(&q("x*y + y^2")));
        assert!(polys.contains(&q("y^3")));
        assert!(is_groebner_basis(&Rationals, 4, &gb.order, &gb.elems));
    }

    #[test]
    fn normal_forms() {
        let gb = ideal_gb(&["x^2"]);
        let nf = normal_form(&ModElem::from_poly(q("x^2*y")), &gb);
        assert!(nf.is_zero());
        let gb2 = ideal_gb(&["x"]);
        let nf2 = normal_form(&ModElem::from_poly(q("y^3 + x")), &gb2);
        assert_eq!(nf2, ModElem::from_poly(q("y^3")));
        // idempotence
        let nf3 = normal_form(&nf2, &gb2);
        assert_eq!(nf2, nf3);
    }

    #[test]
    fn fermat_euler_membership() {
        // f lies in its own Jacobian ideal for smooth Fermat (Euler)
        let f = q("x^3 + y^3 + z^3 + t^3");
        let gens: Vec<ModElem<Rationals>> = (0..4)
            .map(|v| ModElem::from_poly(f.partial_derivative(v)))
            .collect();
        let gb = groebner_basis(&Rationals, 4, &ModuleOrder::Pot, &gens, &[0]).unwrap();
        assert!(normal_form(&ModElem::from_poly(f), &gb).is_zero());
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let gens = vec![ModElem::from_poly(q("x")), ModElem::from_poly(q("y"))];
        let syz =
            syzygy_generators(&Rationals, 4, &ModuleOrder::Pot, &gens, &[0, 0]).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        // (y, -x) up to sign/scale
        let a = s.component(0).unwrap().clone();
        let b = s.component(1).unwrap().clone();
        assert!(a.mul(&q("x")).add(&b.mul(&q("y"))).is_zero());
        assert_eq!(a.monic(), q("y"));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let gens = vec![ModElem::from_poly(q("x + x^2"))];
        assert!(groebner_basis(&Rationals, 4, &ModuleOrder::Pot, &gens, &[0]).is_err());
    }

    #[test]
    fn radical_membership_cases() {
        // x in rad(x^2)
        assert!(radical_membership(&Rationals, 4, &q("x"), &[q("x^2")]).unwrap());
        // x not in rad(y)
        assert!(!radical_membership(&Rationals, 4, &q("x"), &[q("y")]).unwrap());
        // x + t in rad(x, t)
        assert!(radical_membership(&Rationals, 4, &q("x + t"), &[q("x"), q("t")]).unwrap());
    }

    #[test]
    fn determinism() {
        let a = ideal_gb(&["x^2 - y*z", "x*y - z*t", "x*z - y*t"]);
        let b = ideal_gb(&["x^2 - y*z", "x*y - z*t", "x*z - y*t"]);
        assert_eq!(gb_polys(&a), gb_polys(&b));
        assert!(is_groebner_basis(&Rationals, 4, &a.order, &a.elems));
    }

    #[test]
    fn schreyer_traces_are_syzygies() {
        let gens: Vec<ModElem<Rationals>> = ["x^2", "x*y + y^2", "y^3"]
            .iter()
            .map(|s| ModElem::from_poly(q(s)))
            .collect();
        let step =
            schreyer_syzygies(&Rationals, 4, &ModuleOrder::Pot, &gens, &[0]).unwrap();
        assert!(!step.syzygies.is_empty());
        for s in &step.syzygies {
            assert!(s.apply_to(&gens).is_zero());
        }
    }
}
