//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact; there are no numeric tolerances.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::{bag, oracle_dims, partial_fraction_mismatch, table_fixtures};
use joint_poincare::batch::check_prefix;
use joint_poincare::multisection::{phi_bag, phi_rat};
use joint_poincare::oracle::{omega_count, truncated_omega, FormPair, OmegaTable};
use joint_poincare::ring::{FactorBag, RatFunc, ZPoly};
use joint_poincare::springer::{
    closed_form_simple, family_exponent, partial_fractions, poincare_series, shifted_genfun, Kind,
    ResidueFamily,
};
use joint_poincare::{parse_json, rat_equal};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

fn pair(a: u32, b: u32) -> FormPair {
    FormPair::new(a, b).unwrap()
}

/// Compares computed values with the printed tables. A fixture that
/// disagrees with both the computed value and the oracle is an erratum.
fn table_check(kind: Kind, fixture_pairs_expected: usize) -> Outcome {
    let fixtures: Vec<_> = table_fixtures()
        .into_iter()
        .filter(|f| f.kind == kind)
        .collect();
    let mut notes = Vec::new();
    let mut equal = 0;
    let mut pass = fixtures.len() == fixture_pairs_expected;
    for f in &fixtures {
        let got = poincare_series(f.pair, kind);
        if rat_equal(&got.value, &f.value) {
            equal += 1;
            continue;
        }
        pass = false;
        let want = oracle_dims(f.pair, kind, 40);
        let printed = f.value.series_prefix(40).ok();
        let computed = got.value.series_prefix(40).ok();
        let erratum = printed.as_ref() != Some(&want) && computed.as_ref() == Some(&want);
        notes.push(format!(
            "{} {:?}: printed value differs from computed value{}",
            kind.prefix(),
            f.pair.normalized(),
            if erratum {
                " (printed value also fails the oracle: erratum)"
            } else {
                ""
            }
        ));
    }
    Outcome {
        pass,
        detail: format!("{equal}/{} printed tables equal", fixtures.len()),
        notes,
    }
}

fn criterion_1() -> Outcome {
    table_check(Kind::Invariants, 15)
}

fn criterion_2() -> Outcome {
    let mut out = table_check(Kind::Covariants, 14);
    let printed: Vec<_> = table_fixtures()
        .into_iter()
        .filter(|f| f.kind == Kind::Covariants)
        .map(|f| f.pair.normalized())
        .collect();
    for p in FormPair::all_up_to(5) {
        if printed.contains(&p.normalized()) {
            continue;
        }
        let got = poincare_series(p, Kind::Covariants)
            .value
            .series_prefix(49)
            .unwrap();
        let ok = got == oracle_dims(p, Kind::Covariants, 49);
        out.pass &= ok;
        out.notes.push(format!(
            "PC {:?} has no printed table; 50-term oracle check {}",
            p.normalized(),
            if ok { "passes" } else { "FAILS" }
        ));
    }
    // spot checks on the transcription of the largest printed numerators
    let spots = [
        ((4, 5), 19, 4909),
        ((4, 5), 18, 4909),
        ((5, 5), 22, 19791),
        ((5, 5), 20, 19791),
        ((5, 5), 21, 19578),
    ];
    for ((a, b), n, c) in spots {
        let f = table_fixtures()
            .into_iter()
            .find(|f| f.kind == Kind::Covariants && f.pair == pair(a, b));
        let ok = f.is_some_and(|f| f.numerator.coeff(n) == BigInt::from(c));
        out.pass &= ok;
        if !ok {
            out.notes
                .push(format!("pc_{{{a},{b}}} fixture lacks {c}z^{n}"));
        }
    }
    out.detail
        .push_str(" + oracle check for the unprinted pair");
    out
}

fn criterion_3() -> Outcome {
    let terms = partial_fractions(&shifted_genfun(pair(1, 3))).unwrap();
    let get = |e: u32, order: u8| {
        terms
            .iter()
            .find(|t| t.e == e && t.order == order)
            .map(|t| t.coeff.to_ratfunc())
    };
    let a1 = bag(&[0, 0, -1, 0, 1, 0, 3], &[(4, 2), (2, 3)]).to_ratfunc();
    let b1 = bag(&[0, 0, 1], &[(2, 3), (4, 1)]).to_ratfunc();
    let c0 = bag(&[1], &[(2, 2), (4, 2), (6, 1)]).to_ratfunc();
    let checks = [
        ("A_1", get(2, 1), a1),
        ("B_1", get(2, 2), b1.clone()),
        ("C_0", get(0, 1), c0),
    ];
    let mut notes = Vec::new();
    let mut pass = true;
    let mut matched = 0;
    for (name, got, want) in &checks {
        if got.as_ref() == Some(want) {
            matched += 1;
        } else {
            pass = false;
            notes.push(format!(
                "{name}: computed {} , printed {}",
                got.as_ref().map_or("none".into(), |g| g.to_string()),
                want
            ));
        }
    }
    if get(2, 2) == Some(b1.neg()) {
        notes.push(
            "B_1: computed residue is the negative of the printed one; the printed follow-up \
             -(5z^4+4z^2+3)z^2/((1-z^2)^4(1+z^2)^2) is the derivative term of the negative sign, \
             and partial-fraction reconstruction for (1,3) holds with the computed sign"
                .into(),
        );
        if partial_fraction_mismatch(pair(1, 3)).is_some() {
            notes.push("reconstruction for (1,3) FAILS".into());
        }
    }
    Outcome {
        pass,
        detail: format!("{matched}/3 intermediates equal the printed values"),
        notes,
    }
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    let mut checked = 0usize;
    for p in FormPair::all_up_to(8) {
        let table = OmegaTable::build(p, 30);
        let expansion = truncated_omega(p, 30);
        for n in 0..=30u32 {
            let span = (n * p.max_degree()) as i64;
            for i in -span..=span {
                if BigInt::from(table.omega(n, i)) != expansion.omega(n, i) {
                    notes.push(format!(
                        "omega {:?} n={n} i={i}: oracles disagree",
                        p.normalized()
                    ));
                }
            }
        }
        for kind in Kind::ALL {
            let got = poincare_series(p, kind).value.series_prefix(30).unwrap();
            let want = match kind {
                Kind::Invariants => table.invariant_dims(),
                Kind::Covariants => table.covariant_dims(),
            };
            for (n, (g, w)) in got.iter().zip(&want).enumerate() {
                checked += 1;
                if *g != BigInt::from(*w) {
                    notes.push(format!(
                        "{} {:?} z^{n}: series {g}, oracle {w}",
                        kind.prefix(),
                        p.normalized()
                    ));
                }
            }
        }
    }
    Outcome {
        pass: notes.is_empty(),
        detail: format!("{checked} series coefficients and all weight counts, d ≤ 8, n ≤ 30"),
        notes,
    }
}

/// The final printed form of the first residue family, kept to report
/// where it departs from the residue.
fn printed_family_a(p: FormPair, k: u32) -> RatFunc {
    let (d1, d2) = p.normalized();
    let (d1, d2, k) = (d1 as i64, d2 as i64, k as i64);
    let zpow = (d1 - k) * (d1 - k + 1) + (d2 + 1) * (d1 - 2 * k);
    let sign = BigInt::from(if k % 2 == 0 { 1 } else { -1 });
    let mut b = FactorBag::pochhammer_recip(2, 2, k as u32)
        .mul(&FactorBag::pochhammer_recip(2, 2, (d1 - k) as u32))
        .mul(&FactorBag::pochhammer_recip(
            (d1 + d2 - 2 * k) as u32,
            2,
            (d2 + 1) as u32,
        ));
    b = b.mul_poly(&ZPoly::constant(sign));
    let r = b.to_ratfunc();
    if zpow >= 0 {
        r.mul_poly(&ZPoly::monomial(BigInt::from(1), zpow as usize))
    } else {
        r.div(&RatFunc::from_poly(ZPoly::monomial(
            BigInt::from(1),
            (-zpow) as usize,
        )))
        .unwrap()
    }
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let (mut a_ok, mut a_total, mut b_ok, mut b_total) = (0, 0, 0, 0);
    let (mut second_case, mut second_case_equal, mut printed_a_equal) = (0, 0, 0);
    for p in FormPair::all_up_to(7) {
        let (d1, d2) = p.normalized();
        if d1 == d2 || (d2 - d1) % 2 == 0 {
            continue;
        }
        let terms = partial_fractions(&shifted_genfun(p)).unwrap();
        let residue = |e: u32| {
            terms
                .iter()
                .find(|t| t.e == e)
                .map(|t| t.coeff.to_ratfunc())
        };
        for k in 0..=d1 {
            a_total += 1;
            let want = residue(family_exponent(p, ResidueFamily::A, k));
            if closed_form_simple(p, ResidueFamily::A, k).ok() == want {
                a_ok += 1;
            } else {
                pass = false;
                notes.push(format!("A ({d1},{d2}) k={k} differs from the residue"));
            }
            if Some(printed_family_a(p, k)) == want {
                printed_a_equal += 1;
            }
        }
        for k in 0..=d2 {
            let want = residue(family_exponent(p, ResidueFamily::B, k));
            if 2 * k < d2 - d1 {
                b_total += 1;
                if closed_form_simple(p, ResidueFamily::B, k).ok() == want {
                    b_ok += 1;
                } else {
                    pass = false;
                    notes.push(format!("B ({d1},{d2}) k={k} differs from the residue"));
                }
            } else {
                second_case += 1;
                if closed_form_simple(p, ResidueFamily::B, k).ok() == want {
                    second_case_equal += 1;
                }
            }
        }
    }
    notes.push(format!(
        "reported: printed final form of A agrees with the residue in {printed_a_equal}/{a_total} cases; \
         the checked form follows the first line of its derivation"
    ));
    notes.push(format!(
        "reported: second case of B agrees with the residue in {second_case_equal}/{second_case} cases"
    ));
    Outcome {
        pass,
        detail: format!("A {a_ok}/{a_total}, B first case {b_ok}/{b_total}"),
        notes,
    }
}

fn criterion_6() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tables");
    let start = Instant::now();
    let run = Command::new(env!("CARGO_BIN_EXE_poincare"))
        .args(["table", "--max", "20", "--out"])
        .arg(&out)
        .arg("--cache-dir")
        .arg(dir.path().join("cache"))
        .env_remove("POINCARE_CACHE_DIR")
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    let stderr = String::from_utf8_lossy(&run.stderr);
    let timed = stderr
        .lines()
        .filter(|l| l.contains(" computed in ") || l.contains(" cached in "))
        .count();
    let mut notes = Vec::new();
    let mut verified = 0;
    for p in FormPair::all_up_to(20) {
        for kind in Kind::ALL {
            let path = out.join(format!("{}_{}_{}.json", kind.prefix(), p.d1(), p.d2()));
            let ok = std::fs::read_to_string(&path)
                .ok()
                .and_then(|s| parse_json(&s).ok())
                .is_some_and(|r| {
                    r.pair == p && r.kind == kind && check_prefix(&r, 10).ok() == Some(None)
                });
            if ok {
                verified += 1;
            } else {
                notes.push(format!("{} missing or failing", path.display()));
            }
        }
    }
    let pass = run.status.success()
        && verified == 420
        && timed == 420
        && elapsed < Duration::from_secs(30 * 60);
    Outcome {
        pass,
        detail: format!(
            "{verified}/420 files pass the 10-term oracle prefix, {timed} timing lines, {:.1?} (limit 30 min)",
            elapsed
        ),
        notes,
    }
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();

    // multisection: homomorphism on the z-grading and linearity
    let xs = [
        bag(&[1, 2, 0, -1], &[(1, 1), (2, 2), (5, 1)]),
        bag(&[0, 3, 1], &[(3, 2), (4, 1)]),
        bag(&[2, -1], &[(1, 3)]),
    ];
    for n in 0..=6usize {
        for x in &xs {
            if phi_bag(n, x).to_ratfunc() != phi_rat(n, x) {
                notes.push(format!("phi_{n}: factored and literal forms differ"));
            }
        }
        for a in &xs {
            for b in &xs {
                let sum = a.add(b);
                if phi_rat(n, &sum) != phi_rat(n, a).add(&phi_rat(n, b)) {
                    notes.push(format!("phi_{n} is not additive"));
                }
            }
        }
        if n >= 1 {
            for m in 1..=4usize {
                // φ_n(z^{nm} R) = z^m φ_n(R)
                let x = &xs[0];
                let lhs = phi_rat(n, &x.shift(n * m));
                let rhs = phi_rat(n, x).mul_poly(&ZPoly::monomial(BigInt::from(1), m));
                if lhs != rhs {
                    notes.push(format!("phi_{n} does not commute with z^{{{n}*{m}}}"));
                }
            }
        }
    }

    for p in FormPair::all_up_to(8) {
        if let Some(n) = partial_fraction_mismatch(p) {
            notes.push(format!(
                "partial fractions of {:?} fail at t^{n}",
                p.normalized()
            ));
        }
    }

    let mut series_checked = 0;
    for p in FormPair::all_up_to(8) {
        let pi = poincare_series(p, Kind::Invariants).value;
        let pc = poincare_series(p, Kind::Covariants).value;
        if pi != poincare_series(p.swapped(), Kind::Invariants).value
            || pc != poincare_series(p.swapped(), Kind::Covariants).value
        {
            notes.push(format!(
                "{:?}: not symmetric in the degrees",
                p.normalized()
            ));
        }
        let si = pi.series_prefix(40);
        let sc = pc.series_prefix(40);
        let (Ok(si), Ok(sc)) = (si, sc) else {
            notes.push(format!("{:?}: series is not integral", p.normalized()));
            continue;
        };
        series_checked += 1;
        if si.iter().chain(&sc).any(|c| c.is_negative()) {
            notes.push(format!("{:?}: negative coefficient", p.normalized()));
        }
        if !si[1].is_zero() || sc[1] != BigInt::from(2) {
            notes.push(format!(
                "{:?}: degree-one dimensions {} and {}",
                p.normalized(),
                si[1],
                sc[1]
            ));
        }
        if si.iter().zip(&sc).any(|(i, c)| i > c) {
            notes.push(format!(
                "{:?}: covariants do not dominate invariants",
                p.normalized()
            ));
        }
    }
    for (a, b, n, i) in [(2, 5, 4, 2), (3, 4, 5, -1), (1, 6, 3, 3)] {
        if omega_count(pair(a, b), n, i) != omega_count(pair(b, a), n, i)
            || omega_count(pair(a, b), n, i) != omega_count(pair(a, b), n, -i)
        {
            notes.push(format!("omega symmetry fails at ({a},{b}) n={n} i={i}"));
        }
    }
    Outcome {
        pass: notes.is_empty(),
        detail: format!(
            "multisection, partial fractions d ≤ 8, {series_checked} pairs of series properties"
        ),
        notes,
    }
}

fn main() {
    // `cargo test -- <filter>` passes arguments; the suite always runs whole.
    let criteria: [(&str, Check); 7] = [
        ("1 invariant tables", criterion_1),
        ("2 covariant tables", criterion_2),
        ("3 worked-example intermediates", criterion_3),
        ("4 dual-oracle equivalence", criterion_4),
        ("5 closed-form cross-check", criterion_5),
        ("6 table --max 20", criterion_6),
        ("7 property suites", criterion_7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {name}: {} [{:.2?}]",
            o.detail,
            start.elapsed()
        );
        for n in &o.notes {
            println!("    {n}");
        }
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
