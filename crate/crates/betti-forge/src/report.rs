//! Serializable analysis reports, schema "betti-forge/1". Struct field
//! order is the stable key order of the emitted JSON.

use crate::hilbert::SigmaDimension;
use num_rational::Rational64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub const SCHEMA: &str = "betti-forge/1";

/// An exact rational that serializes as a plain integer when integral and
/// as {"num", "den"} otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExactRat(pub Rational64);

impl From<i64> for ExactRat {
    fn from(v: i64) -> Self {
        ExactRat(Rational64::from_integer(v))
    }
}

impl From<Rational64> for ExactRat {
    fn from(v: Rational64) -> Self {
        ExactRat(v)
    }
}

impl Serialize for ExactRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            s.serialize_i64(self.0.to_integer())
        } else {
            let mut st = s.serialize_struct("rational", 2)?;
            st.serialize_field("num", &self.0.numer())?;
            st.serialize_field("den", &self.0.denom())?;
            st.end()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiJson {
    pub d: Vec<i64>,
    pub c: Vec<i64>,
    pub b: Vec<i64>,
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentitiesJson {
    /// Both Theorem-1(1) identities: p + r = q + 3 and the degree sum.
    pub sum_check: bool,
    /// The square form (d-1)^2 + sum d^2 - sum c^2 + sum b^2 (zero iff
    /// isolated singularities).
    pub square_check: i64,
    /// tau from the cube formula when the square form vanishes.
    pub cube_tau: Option<ExactRat>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertPolyJson {
    #[serde(rename = "A_half")]
    pub a_half: ExactRat,
    #[serde(rename = "B")]
    pub b: ExactRat,
}

#[derive(Clone, Debug, Serialize)]
pub struct WindowJson {
    pub lower: i64,
    pub upper: i64,
    pub value: ExactRat,
    pub satisfied: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct UpperBoundJson {
    pub bound: i64,
    pub value: ExactRat,
    pub satisfied: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsJson {
    /// du Plessis-Wall window for tau (isolated singularities only).
    pub dupw: Option<WindowJson>,
    /// The printed corollary window on Q3.
    pub corc_printed: Option<WindowJson>,
    /// The window on Q3 derived by substituting the tau bounds into the
    /// cube identity.
    pub corc_derived: Option<WindowJson>,
    /// Set when the printed and derived windows disagree on satisfaction.
    pub corc_discrepancy: Option<bool>,
    /// The suspension-type upper bound for tau, when 2*d1 >= d.
    pub betterb: Option<UpperBoundJson>,
    /// The nodal lower bound for mdr, when requested and d >= 5.
    pub nodal_mdr_bound: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeJson {
    pub t: i64,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// t equals sum(alpha) - sum(beta); a Theorem-1(1) consequence.
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceReport {
    pub schema: &'static str,
    pub mode: &'static str,
    pub degree: i64,
    pub field: String,
    pub modular: bool,
    pub betti: BettiJson,
    pub identities: IdentitiesJson,
    pub sigma_dimension: SigmaDimension,
    pub tau: Option<ExactRat>,
    pub hilbert_polynomial: Option<HilbertPolyJson>,
    pub k0: Option<i64>,
    pub bounds: BoundsJson,
    #[serde(rename = "type")]
    pub type_invariant: TypeJson,
    pub mdr: Option<i64>,
    /// mdr is None when every Jacobian syzygy is Koszul (ER(f) = 0).
    pub mdr_none_reason: Option<String>,
    pub resolution_text: String,
    pub flags: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveBettiJson {
    pub d: Vec<i64>,
    pub c: Vec<i64>,
    pub p: usize,
    pub q: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveReport {
    pub schema: &'static str,
    pub mode: &'static str,
    pub degree: i64,
    pub field: String,
    pub modular: bool,
    pub betti: CurveBettiJson,
    /// p' = q' + 2 and sum d' - sum c' = d - 1.
    pub identities: bool,
    pub epsilon: Vec<i64>,
    #[serde(rename = "type")]
    pub type_t: i64,
    pub classification: &'static str,
    pub tau: i64,
    /// For free curves: tau == (d-1)^2 - d1(d-d1-1).
    pub free_tau_check: Option<bool>,
    pub resolution_text: String,
    pub flags: Vec<String>,
}

/// Reports from non-reduced inputs: the partial data the pipeline could
/// still extract before the Theorem-1(1) identities failed.
#[derive(Clone, Debug, Serialize)]
pub struct NotReducedReport {
    pub schema: &'static str,
    pub mode: &'static str,
    pub degree: i64,
    pub field: String,
    pub diagnostic: String,
    pub resolution_shifts: Vec<Vec<i64>>,
    pub betti: Option<BettiJson>,
    pub resolution_text: String,
}

pub fn to_json_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serialization cannot fail")
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_rat_forms() {
        let i: ExactRat = 27.into();
        assert_eq!(serde_json::to_string(&i).unwrap(), "27");
        let h = ExactRat(Rational64::new(3, 2));
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"num":3,"den":2}"#);
    }

    #[test]
    fn key_order_is_declaration_order() {
        let b = BettiJson {
            d: vec![2],
            c: vec![],
            b: vec![],
            p: 1,
            q: 0,
            r: 0,
        };
        let s = serde_json::to_string(&b).unwrap();
        assert!(s.starts_with(r#"{"d":[2],"c":[],"b":[],"p":1"#));
    }
}
