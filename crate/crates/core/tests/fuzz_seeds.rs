//! Replays the checked-in fuzz corpus through the same bodies the fuzz
//! targets run, so a stable toolchain still exercises every seed.

use std::path::PathBuf;

use amc_core::io::{to_canonical_json, AutMapFile, CurveFile, FieldDescriptor, LinPolyRecord, QuotientCurve, QuotientCurveFile};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn curve_file(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else { return false };
    let Ok(file) = CurveFile::parse(text) else { return false };
    let Ok(c) = file.build() else { return false };
    let again = CurveFile::parse(&to_canonical_json(&CurveFile::of(&c, None))).unwrap();
    assert_eq!(again.build().unwrap().tower(), c.tower());
    true
}

fn qcurve_file(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else { return false };
    let Ok(file) = QuotientCurveFile::parse(text) else { return false };
    let out = match file.build() {
        Ok(QuotientCurve::Y(y)) => QuotientCurveFile::of_y(&y),
        Ok(QuotientCurve::Z(z)) => QuotientCurveFile::of_z(&z),
        Err(_) => return false,
    };
    assert_eq!(QuotientCurveFile::parse(&to_canonical_json(&out)).unwrap(), out);
    true
}

fn field_descriptor(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else { return false };
    let Ok(d) = FieldDescriptor::parse(text) else { return false };
    let Ok(f) = d.build() else { return false };
    assert_eq!(FieldDescriptor::of(&f).build().unwrap().modulus(), f.modulus());
    true
}

fn linpoly(data: &[u8]) -> bool {
    let Some((&sel, rest)) = data.split_first() else { return false };
    let (p, d) = [(3, 1), (3, 2), (5, 1), (3, 3), (7, 2)][sel as usize % 5];
    let field = FieldDescriptor { p, degree: d, seed: 0, modulus: None }.build().unwrap();
    let Ok(text) = std::str::from_utf8(rest) else { return false };
    let Ok(rec) = LinPolyRecord::parse(text) else { return false };
    let Ok(l) = rec.build(&field) else { return false };
    assert_eq!(LinPolyRecord::of(&l).build(&field).unwrap().coeffs(), l.coeffs());
    true
}

fn aut_map(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else { return false };
    let Ok(file) = AutMapFile::parse(text) else { return false };
    let Ok((field, maps)) = file.build() else { return false };
    assert_eq!(AutMapFile::of(&field, &maps).build().unwrap().1, maps);
    true
}

fn replay(target: &str, body: fn(&[u8]) -> bool, accepted: &[&str]) {
    for (name, data) in seeds(target) {
        let ok = body(&data);
        let want = accepted.iter().any(|a| name.starts_with(a));
        assert_eq!(ok, want, "{target}/{name}");
    }
}

#[test]
fn curve_file_seeds() {
    replay("curve_file", curve_file, &["seed_classical", "seed_q3", "seed_q9", "seed_coords"]);
}

#[test]
fn qcurve_file_seeds() {
    replay("qcurve_file", qcurve_file, &["seed_y.json", "seed_z.json", "seed_y_coords"]);
}

#[test]
fn field_descriptor_seeds() {
    replay("field_descriptor", field_descriptor, &["seed_gf27", "seed_seeded", "seed_modulus"]);
}

#[test]
fn linpoly_seeds() {
    replay("linpoly", linpoly, &["seed_as3", "seed_coords", "seed_n2", "seed_trailing", "seed_inseparable"]);
}

#[test]
fn aut_map_seeds() {
    replay("aut_map", aut_map, &["seed_classical", "seed_coords"]);
}

#[test]
fn truncations_do_not_panic() {
    let bodies: [(&str, fn(&[u8]) -> bool); 5] = [
        ("curve_file", curve_file),
        ("qcurve_file", qcurve_file),
        ("field_descriptor", field_descriptor),
        ("linpoly", linpoly),
        ("aut_map", aut_map),
    ];
    for (target, body) in bodies {
        for (_, data) in seeds(target) {
            for cut in 0..data.len() {
                body(&data[..cut]);
            }
        }
    }
}
