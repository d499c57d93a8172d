use std::path::Path;

use amc_core::curve::{l_polynomial, nakajima_check, AMCurve, CountableCurve};
use amc_core::io::{to_canonical_json, CurveFile};

use super::zeta_section;
use crate::report::Report;
use crate::source;
use crate::{CurveArgs, Failure};

const RH: &str = "Riemann-Hurwitz, q places with filtration [q, q, 1]";

fn header(report: &mut Report, c: &AMCurve) {
    let t = c.tower();
    report.result("tower", t, "degrees of L1 and L2");
    report.result("q", c.q(), "degree of L1");
    report.result("qbar", c.qbar(), "p^n");
}

pub fn new(src: &CurveArgs, out: Option<&Path>) -> Result<Report, Failure> {
    let mut r = Report::new("curve new");
    let c = source::curve(src, &mut r)?;
    header(&mut r, &c);
    let file = CurveFile::of(&c, None);
    if let Some(path) = out {
        source::write_file(path, &to_canonical_json(&file))?;
        r.input("curve_out", path.display().to_string());
    }
    r.result("curve", &file, "constructed from the inputs");
    Ok(r)
}

pub fn validate(src: &CurveArgs) -> Result<Report, Failure> {
    let mut r = Report::new("curve validate");
    let c = source::curve(src, &mut r)?;
    header(&mut r, &c);
    r.result("ambient_degree", c.ambient().degree(), "lcm of the kernel splitting degrees");
    r.result("kernel1_size", c.kernel1().roots().len(), "null space of L1 over GF(p)");
    r.result("kernel2_size", c.kernel2().roots().len(), "null space of L2 over GF(p)");
    r.check("L1 and L2 separable", c.l1().is_separable() && c.l2().is_separable(), "a_0 != 0");
    r.check("|ker L1| = |ker L2| = q", c.kernel1().roots().len() as u64 == c.q() && c.kernel2().roots().len() as u64 == c.q(), "kernel enumeration");
    Ok(r)
}

pub fn genus(src: &CurveArgs) -> Result<Report, Failure> {
    let mut r = Report::new("curve genus");
    let c = source::curve(src, &mut r)?;
    header(&mut r, &c);
    let g = c.genus()?;
    r.result("genus", g, RH);
    r.check("genus = (q-1)^2", g == (c.q() - 1).pow(2), "closed form");
    Ok(r)
}

pub fn count(src: &CurveArgs, k: usize) -> Result<Report, Failure> {
    let mut r = Report::new("curve count");
    let c = source::curve(src, &mut r)?;
    r.input("k", k);
    header(&mut r, &c);
    r.result("q0", c.coeff_field().order(), "order of the coefficient field");
    let n = c.count_places(k)?;
    r.result("places", n, "value-table count over GF(Q0^k), affine plus places at infinity");
    Ok(r)
}

pub fn zeta(src: &CurveArgs) -> Result<Report, Failure> {
    let mut r = Report::new("curve zeta");
    let c = source::curve(src, &mut r)?;
    header(&mut r, &c);
    r.result("genus", c.genus()?, RH);
    let z = l_polynomial(&c)?;
    zeta_section(&mut r, &z, c.prank_formula()?);
    Ok(r)
}

pub fn prank(src: &CurveArgs, oracle: bool) -> Result<Report, Failure> {
    let mut r = Report::new("curve prank");
    let c = source::curve(src, &mut r)?;
    r.input("oracle", oracle);
    header(&mut r, &c);
    let g = c.genus()?;
    let gamma = c.prank_formula()?;
    r.result("genus", g, RH);
    r.result("p_rank", gamma, "Deuring-Shafarevich for Σ of order q^2 with short orbits [q, q]");
    r.check("ordinary: p-rank = genus", gamma == g, "Deuring-Shafarevich");
    let nk = nakajima_check(c.tower().p, c.q() * c.q(), g)?;
    r.result("nakajima", &nk, "q^2 (p-2) <= p (g-1) for the p-subgroup Σ");
    r.check("Nakajima bound", nk.holds, "ordinary curve with p-subgroup of order q^2");
    if oracle {
        let z = l_polynomial(&c)?;
        zeta_section(&mut r, &z, gamma);
    }
    Ok(r)
}
