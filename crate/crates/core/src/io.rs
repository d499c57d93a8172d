//! JSON records for curves, quotient curves and automorphism lists. Parsing
//! checks shape only; `build` does the mathematical validation.

use serde::{Deserialize, Serialize};

use crate::autgroup::AutMap;
use crate::curve::{AMCurve, Tower};
use crate::error::{Error, Result};
use crate::gf::{make_field, Fe, FieldRef, FiniteField};
use crate::linpoly::LinearizedPoly;
use crate::quotient::{y_curve, z_curve, YCurve, ZCurve};

pub const CURVE_FORMAT: &str = "amc-curve/1";
pub const QCURVE_FORMAT: &str = "amc-qcurve/1";
pub const AUTMAP_FORMAT: &str = "amc-autmap/1";

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn check_format(found: &str, want: &str) -> Result<()> {
    if found != want {
        return Err(Error::Parse(format!("format is {found:?}, expected {want:?}")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDescriptor {
    pub p: u32,
    pub degree: usize,
    #[serde(default)]
    pub seed: u64,
    /// c_0, ..., c_d (monic); overrides the seeded search when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldDescriptor {
    pub fn of(f: &FiniteField) -> Self {
        FieldDescriptor { p: f.characteristic(), degree: f.degree(), seed: f.seed(), modulus: Some(f.modulus().to_vec()) }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn build(&self) -> Result<FieldRef> {
        match &self.modulus {
            None => make_field(self.p, self.degree, self.seed),
            Some(m) => {
                if m.len() != self.degree + 1 {
                    return Err(Error::Parameter(format!(
                        "modulus has {} coefficients, degree {} needs {}",
                        m.len(),
                        self.degree,
                        self.degree + 1
                    )));
                }
                FiniteField::with_modulus(self.p, m.clone(), self.seed)
            }
        }
    }
}

/// An element: an integer (reduced into the prime field) or coordinates
/// c_0, ..., c_{d-1} in the polynomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRecord {
    Int(i64),
    Coords(Vec<u32>),
}

impl ElementRecord {
    pub fn of(f: &FiniteField, x: &Fe) -> Self {
        if f.degree() == 1 {
            ElementRecord::Int(x.coord(0) as i64)
        } else {
            ElementRecord::Coords(f.coords(x))
        }
    }

    pub fn build(&self, f: &FiniteField) -> Result<Fe> {
        match self {
            ElementRecord::Int(n) => Ok(f.from_int(*n)),
            ElementRecord::Coords(c) => f.from_coords(c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinPolyRecord {
    pub n: usize,
    /// Coefficient of T^(q̄^i) at position i.
    pub coeffs: Vec<ElementRecord>,
}

impl LinPolyRecord {
    pub fn of(l: &LinearizedPoly) -> Self {
        LinPolyRecord { n: l.n(), coeffs: l.coeffs().iter().map(|c| ElementRecord::of(l.field(), c)).collect() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn build(&self, field: &FieldRef) -> Result<LinearizedPoly> {
        let cs = self.coeffs.iter().map(|c| c.build(field)).collect::<Result<_>>()?;
        LinearizedPoly::new(self.n, field.clone(), cs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub format: String,
    pub field: FieldDescriptor,
    pub l1: LinPolyRecord,
    pub l2: LinPolyRecord,
    /// Informational; checked against the polynomials when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tower: Option<Tower>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl CurveFile {
    pub fn of(c: &AMCurve, label: Option<String>) -> Self {
        CurveFile {
            format: CURVE_FORMAT.into(),
            field: FieldDescriptor::of(c.coeff_field()),
            l1: LinPolyRecord::of(c.l1()),
            l2: LinPolyRecord::of(c.l2()),
            tower: Some(c.tower()),
            label,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let f: CurveFile = parse(text)?;
        check_format(&f.format, CURVE_FORMAT)?;
        Ok(f)
    }

    pub fn build(&self) -> Result<AMCurve> {
        let field = self.field.build()?;
        let c = AMCurve::new(self.l1.build(&field)?, self.l2.build(&field)?)?;
        if let Some(t) = &self.tower {
            if *t != c.tower() {
                return Err(Error::Validation(format!("declared tower {t:?} does not match {:?}", c.tower())));
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientKind {
    Y,
    Z,
}

/// `L(y) = a x + 1/x` (kind y) or `L(y) = x^3 + b x` (kind z).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientCurveFile {
    pub format: String,
    pub kind: QuotientKind,
    pub field: FieldDescriptor,
    pub l: LinPolyRecord,
    /// `a` for kind y, `b` for kind z.
    pub constant: ElementRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
}

pub enum QuotientCurve {
    Y(YCurve),
    Z(ZCurve),
}

impl QuotientCurveFile {
    pub fn of_y(y: &YCurve) -> Self {
        QuotientCurveFile {
            format: QCURVE_FORMAT.into(),
            kind: QuotientKind::Y,
            field: FieldDescriptor::of(y.field()),
            l: LinPolyRecord::of(y.l()),
            constant: ElementRecord::of(y.field(), &y.a()),
            q: Some(y.q()),
        }
    }

    pub fn of_z(z: &ZCurve) -> Self {
        QuotientCurveFile {
            format: QCURVE_FORMAT.into(),
            kind: QuotientKind::Z,
            field: FieldDescriptor::of(z.l().field()),
            l: LinPolyRecord::of(z.l()),
            constant: ElementRecord::of(z.l().field(), &z.b()),
            q: Some(z.q()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let f: QuotientCurveFile = parse(text)?;
        check_format(&f.format, QCURVE_FORMAT)?;
        Ok(f)
    }

    pub fn build(&self) -> Result<QuotientCurve> {
        let field = self.field.build()?;
        let l = self.l.build(&field)?;
        let c = self.constant.build(&field)?;
        let (out, q) = match self.kind {
            QuotientKind::Y => {
                let y = y_curve(&l, c)?;
                let q = y.q();
                (QuotientCurve::Y(y), q)
            }
            QuotientKind::Z => {
                let z = z_curve(&l, c)?;
                let q = z.q();
                (QuotientCurve::Z(z), q)
            }
        };
        if self.q.is_some_and(|d| d != q) {
            return Err(Error::Validation(format!("declared q = {:?} but L has degree {q}", self.q)));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutMapRecord {
    #[serde(default)]
    pub swap: bool,
    pub lambda: ElementRecord,
    pub alpha: ElementRecord,
    pub beta: ElementRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutMapFile {
    pub format: String,
    pub field: FieldDescriptor,
    pub maps: Vec<AutMapRecord>,
}

impl AutMapFile {
    pub fn of(f: &FiniteField, maps: &[AutMap]) -> Self {
        AutMapFile {
            format: AUTMAP_FORMAT.into(),
            field: FieldDescriptor::of(f),
            maps: maps
                .iter()
                .map(|g| AutMapRecord {
                    swap: g.swap,
                    lambda: ElementRecord::of(f, &g.lambda),
                    alpha: ElementRecord::of(f, &g.alpha),
                    beta: ElementRecord::of(f, &g.beta),
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let f: AutMapFile = parse(text)?;
        check_format(&f.format, AUTMAP_FORMAT)?;
        Ok(f)
    }

    pub fn build(&self) -> Result<(FieldRef, Vec<AutMap>)> {
        let field = self.field.build()?;
        let maps = self
            .maps
            .iter()
            .map(|r| {
                let lambda = r.lambda.build(&field)?;
                if lambda.is_zero() {
                    return Err(Error::Parameter("λ must be nonzero".into()));
                }
                Ok(AutMap { swap: r.swap, lambda, alpha: r.alpha.build(&field)?, beta: r.beta.build(&field)? })
            })
            .collect::<Result<_>>()?;
        Ok((field, maps))
    }
}

/// Pretty JSON with object keys sorted, newline-terminated.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("records serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}
