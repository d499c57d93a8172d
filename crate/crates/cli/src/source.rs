use std::path::Path;

use amc_core::curve::AMCurve;
use amc_core::gf::make_field;
use amc_core::io::{CurveFile, QuotientCurveFile, QuotientKind};
use amc_core::linpoly::LinearizedPoly;

use crate::report::Report;
use crate::{CurveArgs, Failure, QuotientArgs};

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))
}

/// Shape errors carry the file name; serde_json already reports line and column.
fn in_file(path: &Path, e: amc_core::Error) -> Failure {
    match e {
        amc_core::Error::Parse(msg) => Failure::Usage(format!("{}: parse error: {msg}", path.display())),
        other => other.into(),
    }
}

pub fn curve(src: &CurveArgs, report: &mut Report) -> Result<AMCurve, Failure> {
    report.input("seed", src.seed);
    if let Some(path) = &src.curve {
        report.input("curve_file", path.display().to_string());
        let file = CurveFile::parse(&read(path)?).map_err(|e| in_file(path, e))?;
        if let Some(label) = &file.label {
            report.input("label", label);
        }
        return Ok(file.build()?);
    }
    let p = src.p.ok_or_else(|| Failure::Usage("give --curve FILE or --p with a construction".into()))?;
    report.input("p", p);
    match (&src.l1, &src.l2) {
        (Some(a), Some(b)) => {
            report.input("n", src.n);
            report.input("l1", a);
            report.input("l2", b);
            let f = make_field(p, 1, 0)?;
            let l1 = LinearizedPoly::from_ints(src.n, f.clone(), a)?;
            let l2 = LinearizedPoly::from_ints(src.n, f, b)?;
            Ok(AMCurve::new(l1, l2)?)
        }
        (None, None) if src.classical => {
            report.input("construction", "classical");
            Ok(AMCurve::classical(p)?)
        }
        (None, None) => {
            report.input("construction", "random");
            report.input("n", src.n);
            report.input("m", src.m);
            Ok(AMCurve::random(p, src.n, src.m, src.seed)?)
        }
        _ => Err(Failure::Usage("--l1 and --l2 go together".into())),
    }
}

pub fn qcurve(src: &QuotientArgs, want: QuotientKind, report: &mut Report) -> Result<QuotientCurveFile, Failure> {
    if let Some(path) = &src.qcurve {
        report.input("qcurve_file", path.display().to_string());
        let file = QuotientCurveFile::parse(&read(path)?).map_err(|e| in_file(path, e))?;
        if file.kind != want {
            return Err(Failure::Usage(format!("{} holds a {:?} curve", path.display(), file.kind)));
        }
        return Ok(file);
    }
    let (Some(p), Some(l)) = (src.p, &src.l) else {
        return Err(Failure::Usage("give --qcurve FILE or --p with --l".into()));
    };
    let constant = src.constant.unwrap_or(match want {
        QuotientKind::Y => 1,
        QuotientKind::Z => 0,
    });
    report.input("p", p);
    report.input("n", src.n);
    report.input("l", l);
    report.input("constant", constant);
    Ok(QuotientCurveFile {
        format: amc_core::io::QCURVE_FORMAT.into(),
        kind: want,
        field: amc_core::io::FieldDescriptor { p, degree: 1, seed: 0, modulus: None },
        l: amc_core::io::LinPolyRecord {
            n: src.n,
            coeffs: l.iter().map(|&c| amc_core::io::ElementRecord::Int(c)).collect(),
        },
        constant: amc_core::io::ElementRecord::Int(constant),
        q: None,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))
}
