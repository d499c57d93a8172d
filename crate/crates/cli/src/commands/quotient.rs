use std::path::Path;

use amc_core::curve::{l_polynomial, CountableCurve};
use amc_core::io::{to_canonical_json, QuotientCurve, QuotientCurveFile, QuotientKind};
use amc_core::quotient::{
    diagonal_quotient, quotient_sigma_x, quotient_sigma_y, weierstrass_places, y_aut_group, y_aut_group_in,
    y_aut_search, y_prank_formula, z_prank_formula, YCurve,
};

use super::zeta_section;
use crate::report::Report;
use crate::source;
use crate::{CurveArgs, Failure, QuotientArgs};

pub fn sigma(src: &CurveArgs, swap: bool) -> Result<Report, Failure> {
    let mut r = Report::new(if swap { "quotient sigma-y" } else { "quotient sigma-x" });
    let c = source::curve(src, &mut r)?;
    let s = if swap { quotient_sigma_y(&c)? } else { quotient_sigma_x(&c)? };
    r.result("relation", &s.relation, "invariant function of the translation subgroup");
    for k in &s.counts {
        let key = format!("k{}", k.k);
        r.result(&format!("{key}_quotient_places"), k.quotient_places, "places of the y-line over GF(Q0^k)");
        r.result(&format!("{key}_stable_orbits"), k.stable_orbits, "Frobenius-stable Σ_x-orbits of places");
        r.result(&format!("{key}_rational_orbits"), k.rational_orbits, "Σ_x-orbits containing a rational place");
        r.check(&format!("k = {}: quotient is rational", k.k), k.ok, "quotient places = Q0^k + 1 = stable orbits");
        if k.rational_orbits != k.quotient_places {
            r.note(format!("k = {}: some fibres of L1 are not rational, so rational orbits fall short", k.k));
        }
    }
    Ok(r)
}

fn y_results(r: &mut Report, y: &YCurve) -> Result<(), Failure> {
    r.result("q", y.q(), "degree of L");
    let g = y.genus()?;
    r.result("genus", g, "Riemann-Hurwitz, two totally ramified places with filtration [q, q, 1]");
    r.check("genus = q - 1", g == y.q() - 1, "closed form");
    r.result("p_rank", y_prank_formula(y)?, "Deuring-Shafarevich with two fixed places");
    Ok(())
}

pub fn diagonal(src: &CurveArgs, out: Option<&Path>) -> Result<Report, Failure> {
    let mut r = Report::new("quotient diagonal");
    let c = source::curve(src, &mut r)?;
    let (y, cert) = diagonal_quotient(&c)?;
    y_results(&mut r, &y)?;
    r.result("h_order", cert.h_order, "anti-diagonal translations τ_{α,-α}");
    r.result("relation", "L(t) = a X + 1/X with t = x + y, X = r L2(y), a = 1/r", "additivity of L");
    r.check("L(x + y) = L(x) + L(y)", cert.additivity, "coefficientwise symbolic identity");
    r.check("r L2(y) L2(x+y) - r L2(y)^2 - 1 = F", cert.eta_identity, "coefficientwise symbolic identity");
    r.check("t and L2(y) fixed by every τ_{α,-α}", cert.h_invariant, "kernel check and symbolic verification");
    r.result("diagonal_fixes_t", cert.diagonal_fixes_t, "τ_{α,α} sends t to t + 2α");
    let file = QuotientCurveFile::of_y(&y);
    if let Some(path) = out {
        source::write_file(path, &to_canonical_json(&file))?;
        r.input("curve_out", path.display().to_string());
    }
    r.result("curve", &file, "quotient construction");
    Ok(r)
}

pub fn ycurve(src: &QuotientArgs, zeta: bool, out: Option<&Path>) -> Result<Report, Failure> {
    let mut r = Report::new("quotient ycurve");
    let file = source::qcurve(src, QuotientKind::Y, &mut r)?;
    let QuotientCurve::Y(y) = file.build()? else { unreachable!("kind checked") };
    y_results(&mut r, &y)?;
    if zeta {
        let z = l_polynomial(&y)?;
        zeta_section(&mut r, &z, y_prank_formula(&y)?);
    }
    let canonical = QuotientCurveFile::of_y(&y);
    if let Some(path) = out {
        source::write_file(path, &to_canonical_json(&canonical))?;
    }
    r.result("curve", &canonical, "validated input");
    Ok(r)
}

pub fn zcurve(src: &QuotientArgs, zeta: bool, out: Option<&Path>) -> Result<Report, Failure> {
    let mut r = Report::new("quotient zcurve");
    let file = source::qcurve(src, QuotientKind::Z, &mut r)?;
    let QuotientCurve::Z(z) = file.build()? else { unreachable!("kind checked") };
    r.result("q", z.q(), "degree of L");
    let g = z.genus()?;
    r.result("genus", g, "Riemann-Hurwitz, one place with filtration [q, q, q, q, 1]");
    r.check("genus = q - 1", g == z.q() - 1, "closed form");
    let gamma = z_prank_formula(&z)?;
    r.result("p_rank", gamma, "Deuring-Shafarevich with one fixed place");
    if zeta {
        let data = l_polynomial(&z)?;
        zeta_section(&mut r, &data, gamma);
    }
    let canonical = QuotientCurveFile::of_z(&z);
    if let Some(path) = out {
        source::write_file(path, &to_canonical_json(&canonical))?;
    }
    r.result("curve", &canonical, "validated input");
    Ok(r)
}

pub fn yaut(src: &QuotientArgs, ambient: Option<usize>, budget: u64) -> Result<Report, Failure> {
    let mut r = Report::new("quotient yaut");
    let file = source::qcurve(src, QuotientKind::Y, &mut r)?;
    let QuotientCurve::Y(y) = file.build()? else { unreachable!("kind checked") };
    let q = y.q();
    let g = y_aut_group(&y)?;
    r.result("order", g.order(), "E_q, ν, μ and their products, each verified symbolically");
    for rel in &g.relations {
        r.check(&format!("{} = {}", rel.lhs, rel.rhs), rel.ok, "exhaustive check over group elements");
    }
    let w = weierstrass_places(&y)?;
    r.result("mu_fixed_places", w.places.len(), "places over the zeros of a x^2 - 1");
    r.result("mu_fixed_by_scan", w.fixed_by_scan, "scan of the x-line over the splitting field");
    r.result("places_over_ax2_plus_1_fixed", w.plus_locus_fixed, "μ applied to the places over a x^2 + 1");
    r.check("μ is an involution", w.mu_is_involution, "composition");
    r.check("μ fixes exactly 2q places", w.places.len() as u64 == 2 * q && w.all_fixed_by_mu && w.fixed_by_scan as u64 == 2 * q, "explicit places and scan");
    if let Some(d) = ambient {
        r.input("ambient", d);
        r.input("budget", budget);
        let found = y_aut_search(&y, d, budget)?;
        let claimed = y_aut_group_in(&y, &found.embedding)?;
        r.result("search_found", found.maps.len(), "exhaustive search over Möbius x-part and affine y-part");
        r.result("search_evaluations", found.evaluations, "search counter");
        let n = found.maps.len() as u64;
        r.note(if n == 4 * q { format!("found {n} = 4q") } else { format!("found {n}, expected 4q = {}", 4 * q) });
        r.check("search finds 4q maps", n == 4 * q, "exhaustive search");
        r.check("search result equals the group", found.maps == claimed.elements, "set comparison");
    }
    Ok(r)
}
