//! Dimension counting and the Hilbert polynomial of M(f) from Betti data:
//! the degree classification of the singular subscheme, the total Tjurina
//! number in the 0-dimensional case, and the linear Hilbert polynomial
//! (A/2)u - B in the 1-dimensional case, together with the independent
//! cubic-coefficient oracle.

use crate::resolution::BettiData;
use num_rational::Rational64;
use serde::Serialize;

/// C(m + c, c) for m >= 0, else 0: the dimension of the degree-m piece of
/// a polynomial ring in c+1 variables.
pub fn binom3(m: i64, c: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 1..=c as i128 {
        num *= m as i128 + i;
        den *= i;
    }
    (num / den) as i64
}

/// dim S_{k+a} for the 4-variable ring: binom(k+a+3, 3), truncated at 0.
pub fn graded_dim(a: i64, k: i64) -> i64 {
    binom3(k + a, 3)
}

/// Hilbert function of M(f) in degree k from the minimal resolution data;
/// exact for every k >= 0. `nvars` is 4 for surfaces, 3 for plane curves.
pub fn hilbert_from_betti(betti: &BettiData, k: i64, nvars: usize) -> i64 {
    let c = nvars as i64 - 1;
    let dm1 = betti.degree - 1;
    let mut acc = binom3(k, c) - (nvars as i64) * binom3(k - dm1, c);
    for di in &betti.d_seq {
        acc += binom3(k - dm1 - di, c);
    }
    for cj in &betti.c_seq {
        acc -= binom3(k - dm1 - cj, c);
    }
    for bk in &betti.b_seq {
        acc += binom3(k - dm1 - bk, c);
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaDimension {
    /// Smooth surface: the singular subscheme is empty.
    Empty,
    /// Isolated singularities.
    Zero,
    /// One-dimensional singular locus.
    One,
    /// The Theorem 1 (1) identities fail: the input cannot be a reduced
    /// surface, dim Sigma >= 2.
    TwoOrMore,
}

/// The identity and classification arithmetic shared by the full pipeline
/// and the pure verify-betti mode.
#[derive(Clone, Debug)]
pub struct HilbertPolynomial {
    pub sigma: SigmaDimension,
    /// Both Theorem 1 (1) identities.
    pub p_plus_r_eq_q_plus_3: bool,
    pub degree_sum_ok: bool,
    /// (d-1)^2 + sum d_i^2 - sum c_j^2 + sum b_k^2 (zero iff isolated).
    pub q2: i64,
    /// sum d_i^3 - sum c_j^3 + sum b_k^3.
    pub q3: i64,
    /// (d-1)^3 - q3; equals 6 tau when the surface has isolated singularities.
    pub six_tau: Option<i64>,
    pub tau: Option<Rational64>,
    pub a: Option<i64>,
    pub a_even: bool,
    pub b: Option<Rational64>,
    pub b_integral: bool,
    /// Least k with H(k) = P(k) for all sampled k up to max shift + 2.
    pub k0: Option<i64>,
}

impl HilbertPolynomial {
    /// Value of the Hilbert polynomial at u, when classification succeeded.
    pub fn eval(&self, u: i64) -> Option<Rational64> {
        match self.sigma {
            SigmaDimension::Empty => Some(Rational64::from_integer(0)),
            SigmaDimension::Zero => self.tau,
            SigmaDimension::One => {
                let a = Rational64::new(self.a?, 2);
                Some(a * Rational64::from_integer(u) - self.b?)
            }
            SigmaDimension::TwoOrMore => None,
        }
    }
}

fn sums(seq: &[i64]) -> (i64, i64, i64) {
    let s1 = seq.iter().sum();
    let s2 = seq.iter().map(|v| v * v).sum();
    let s3 = seq.iter().map(|v| v * v * v).sum();
    (s1, s2, s3)
}

/// Does the data match the smooth pattern d = (d-1)_6, c = (2d-2)_4,
/// b = (3d-3)?
pub fn is_smooth_pattern(betti: &BettiData) -> bool {
    let d = betti.degree;
    betti.d_seq == vec![d - 1; 6]
        && betti.c_seq == vec![2 * d - 2; 4]
        && betti.b_seq == vec![3 * (d - 1)]
}

/// Classify the singular locus dimension and compute the Hilbert
/// polynomial of M(f) from Betti data alone (Theorem 1 arithmetic).
pub fn classify_and_polynomial(betti: &BettiData) -> HilbertPolynomial {
    let d = betti.degree;
    let dm1 = d - 1;
    let (sd1, sd2, sd3) = sums(&betti.d_seq);
    let (sc1, sc2, sc3) = sums(&betti.c_seq);
    let (sb1, sb2, sb3) = sums(&betti.b_seq);
    let p = betti.p() as i64;
    let q = betti.q() as i64;
    let r = betti.r() as i64;

    let id1 = p + r == q + 3;
    let id2 = sd1 - sc1 + sb1 == dm1;
    let s2 = sd2 - sc2 + sb2;
    let q2 = dm1 * dm1 + s2;
    let q3 = sd3 - sc3 + sb3;

    let mut out = HilbertPolynomial {
        sigma: SigmaDimension::TwoOrMore,
        p_plus_r_eq_q_plus_3: id1,
        degree_sum_ok: id2,
        q2,
        q3,
        six_tau: None,
        tau: None,
        a: None,
        a_even: false,
        b: None,
        b_integral: false,
        k0: None,
    };
    if !(id1 && id2) {
        return out;
    }

    if q2 == 0 {
        let six_tau = dm1 * dm1 * dm1 - q3;
        out.six_tau = Some(six_tau);
        out.tau = Some(Rational64::new(six_tau, 6));
        out.sigma = if is_smooth_pattern(betti) {
            SigmaDimension::Empty
        } else {
            SigmaDimension::Zero
        };
    } else {
        out.sigma = SigmaDimension::One;
        out.a = Some(q2);
        out.a_even = q2 % 2 == 0;
        // B = (d(d-3)^2 - 4)/3 + (d-3)/2 * S2 + S3/6
        let b = Rational64::new(d * (d - 3) * (d - 3) - 4, 3)
            + Rational64::new(d - 3, 2) * Rational64::from_integer(s2)
            + Rational64::new(q3, 6);
        out.b_integral = b.is_integer();
        out.b = Some(b);
    }

    // k0 by scan against the stated polynomial
    let max_entry = betti
        .d_seq
        .iter()
        .chain(&betti.c_seq)
        .chain(&betti.b_seq)
        .copied()
        .max()
        .unwrap_or(0);
    let kmax = dm1 + max_entry + 2;
    let nvars = 4;
    let mut k0: Option<i64> = None;
    for k in (0..=kmax).rev() {
        let h = Rational64::from_integer(hilbert_from_betti(betti, k, nvars));
        let pv = out.eval(k).expect("classified");
        if h == pv {
            k0 = Some(k);
        } else {
            break;
        }
    }
    out.k0 = k0;
    out
}

/// The four coefficient polynomials of 6 dim M(f)_{s+d-1} as a cubic in s,
/// evaluated verbatim from the Betti data; an independent oracle for the
/// Theorem 1 identities (cubic and quadratic coefficients vanish exactly
/// when they hold).
pub fn lem2_oracle(betti: &BettiData) -> Result<(i64, i64, i64, i64), crate::EngineError> {
    let d = betti.degree;
    if betti.p() < 3 {
        return Err(crate::EngineError::Validation(format!(
            "lem2 oracle needs p >= 3, got p = {}",
            betti.p()
        )));
    }
    let p = betti.p() as i64;
    let q = betti.q() as i64;
    let r = betti.r() as i64;
    let cubic = p - q + r - 3;

    let d123: i64 = betti.d_seq[..3].iter().sum();
    let tail_d: i64 = betti.d_seq[3..].iter().map(|v| v - 2).sum();
    let c_adj: i64 = betti.c_seq.iter().map(|v| v - 2).sum();
    let b_adj: i64 = betti.b_seq.iter().map(|v| v - 2).sum();
    let quadratic = 3 * ((d - 1) - d123 - tail_d + c_adj - b_adj);

    let f_lin = |v: i64| 3 * v * v - 12 * v + 11;
    let linear = 3 * d * d + 6 * d + 2 - 44
        + betti.d_seq.iter().map(|&v| f_lin(v)).sum::<i64>()
        - betti.c_seq.iter().map(|&v| f_lin(v)).sum::<i64>()
        + betti.b_seq.iter().map(|&v| f_lin(v)).sum::<i64>();

    let f_con = |v: i64| v * v * v - 6 * v * v + 11 * v - 6;
    let constant = d * d * d + 3 * d * d + 2 * d - 24
        - betti.d_seq.iter().map(|&v| f_con(v)).sum::<i64>()
        + betti.c_seq.iter().map(|&v| f_con(v)).sum::<i64>()
        - betti.b_seq.iter().map(|&v| f_con(v)).sum::<i64>();

    Ok((cubic, quadratic, linear, constant))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cayley() -> BettiData {
        BettiData::new(3, vec![2; 9], vec![3; 8], vec![4, 4])
    }

    fn kummer() -> BettiData {
        BettiData::new(4, vec![3; 12], vec![4; 12], vec![5; 3])
    }

    fn ex3() -> BettiData {
        BettiData::new(6, vec![1, 2, 3, 3], vec![4], vec![])
    }

    fn ex4() -> BettiData {
        BettiData::new(
            9,
            vec![1, 4, 4, 7, 7, 8, 8, 8],
            vec![5, 8, 9, 9, 9, 10, 10],
            vec![10, 11],
        )
    }

    fn smooth(d: i64) -> BettiData {
        BettiData::new(d, vec![d - 1; 6], vec![2 * d - 2; 4], vec![3 * (d - 1)])
    }

    #[test]
    fn graded_dims() {
        assert_eq!(graded_dim(0, 0), 1);
        assert_eq!(graded_dim(0, 3), 20);
        assert_eq!(graded_dim(-5, 2), 0);
    }

    #[test]
    fn hilbert_values() {
        // Cayley: dim S_2 - 4 = 6 at k = 2; stabilizes at tau = 4
        assert_eq!(hilbert_from_betti(&cayley(), 2, 4), 6);
        assert_eq!(hilbert_from_betti(&cayley(), 10, 4), 4);
        // ex3: 16*20 - 27 = 293
        assert_eq!(hilbert_from_betti(&ex3(), 20, 4), 293);
    }

    #[test]
    fn classify_cayley_kummer() {
        let h = classify_and_polynomial(&cayley());
        assert_eq!(h.sigma, SigmaDimension::Zero);
        assert_eq!(h.six_tau, Some(24));
        assert_eq!(h.tau, Some(Rational64::from_integer(4)));
        let h = classify_and_polynomial(&kummer());
        assert_eq!(h.six_tau, Some(96));
        assert_eq!(h.tau, Some(Rational64::from_integer(16)));
        assert_eq!(h.q3, -69);
    }

    #[test]
    fn classify_dim1_cases() {
        let h = classify_and_polynomial(&ex3());
        assert_eq!(h.sigma, SigmaDimension::One);
        assert_eq!(h.a, Some(32));
        assert_eq!(h.b, Some(Rational64::from_integer(27)));
        let h4 = classify_and_polynomial(&ex4());
        assert_eq!(h4.a, Some(76));
        assert_eq!(h4.b, Some(Rational64::from_integer(119)));
        // ex4.1
        let h41 = classify_and_polynomial(&BettiData::new(
            12,
            vec![1, 4, 4, 11, 11, 11, 11, 11],
            vec![5, 12, 12, 13, 13, 13, 13],
            vec![14, 14],
        ));
        assert_eq!(h41.a, Some(162));
        assert_eq!(h41.b, Some(Rational64::from_integer(491)));
        // ex5
        let h5 = classify_and_polynomial(&BettiData::new(
            16,
            vec![5, 5, 6, 6, 6, 12, 12, 12, 12, 13, 13, 15],
            vec![7, 7, 8, 13, 13, 13, 13, 14, 14, 14, 16, 16],
            vec![14, 15, 17],
        ));
        assert_eq!(h5.a, Some(294));
        assert_eq!(h5.b, Some(Rational64::from_integer(1382)));
    }

    #[test]
    fn classify_smooth() {
        let h = classify_and_polynomial(&smooth(3));
        assert_eq!(h.sigma, SigmaDimension::Empty);
        assert_eq!(h.tau, Some(Rational64::from_integer(0)));
        // socle degree of the Milnor algebra is 4d-8, so k0 = 4d-7
        assert_eq!(h.k0, Some(5));
    }

    #[test]
    fn identity_failure_is_two_or_more() {
        let bad = BettiData::new(3, vec![2; 4], vec![], vec![]);
        let h = classify_and_polynomial(&bad);
        assert_eq!(h.sigma, SigmaDimension::TwoOrMore);
        assert!(h.tau.is_none());
    }

    #[test]
    fn lem2_oracle_values() {
        // Cayley: cubic coefficient 9 - 8 + 2 - 3 = 0
        let (c3, c2, c1, c0) = lem2_oracle(&cayley()).unwrap();
        assert_eq!((c3, c2), (0, 0));
        assert_eq!(c1, 0); // isolated singularities
        assert_eq!(c0, 24); // 6 tau
        // ex4: direct evaluation gives 3*A = 228 for the linear coefficient
        let (c3, c2, c1, c0) = lem2_oracle(&ex4()).unwrap();
        assert_eq!((c3, c2), (0, 0));
        assert_eq!(c1, 228);
        assert_eq!(c1, 3 * classify_and_polynomial(&ex4()).a.unwrap());
        // constant term: 6*P(d-1) = 6*(38*8 - 119) = 6*185 = 1110
        assert_eq!(c0, 1110);
        // smooth d=3: all of cubic, quadratic, linear vanish; constant 6 tau = 0
        let (c3, c2, c1, c0) = lem2_oracle(&smooth(3)).unwrap();
        assert_eq!((c3, c2, c1, c0), (0, 0, 0, 0));
    }
}
