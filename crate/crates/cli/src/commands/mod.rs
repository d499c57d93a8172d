pub mod aut;
pub mod curve;
pub mod quotient;

use amc_core::curve::ZetaData;

use crate::report::Report;

/// Shared zeta section; `formula` is the p-rank predicted independently.
pub(crate) fn zeta_section(report: &mut Report, z: &ZetaData, formula: u64) {
    let src = "zeta oracle: counts N_1..N_2g, Newton's identities";
    report.result("counts", &z.counts, "value-table counts over GF(Q0^k), k = 1..2g");
    let coeffs: Vec<String> = z.l_poly.iter().map(|c| c.to_string()).collect();
    report.result("l_polynomial", coeffs, src);
    report.result("zeta_p_rank", z.p_rank, "degree of L(T) mod p");
    report.result("weil_max_deviation", format!("{:.3e}", z.weil.max_deviation), "Durand-Kerner on the squarefree part");
    report.check("functional equation", true, "checked during L-polynomial recovery");
    report.check("reciprocal roots have modulus sqrt(Q0)", z.weil.ok, "tolerance 1e-6");
    report.check("zeta p-rank equals the formula", z.p_rank == formula, "Deuring-Shafarevich vs zeta oracle");
}
