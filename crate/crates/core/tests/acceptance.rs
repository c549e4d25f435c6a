//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

use niho_core::char_sums::{lambda_closed, lambda_direct};
use niho_core::cli::run;
use niho_core::field::{build_field_context, FieldPair};
use niho_core::k3::{a_p_coefficient, a_p_modular_form, count_surface_points, surface_count_closed};
use niho_core::melas::{macwilliams_identity_check, sample_points};
use niho_core::niho::{
    check_gcd_condition, moment_identities_check,
    root_count_histogram,
};
use niho_core::suite::{duality_holds_at, prime_powers_up_to, run_check, Check, Outcome};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64, what: &str) -> Result<(), String> {
    ensure(elapsed <= Duration::from_secs(limit_secs), || {
        format!("{what} took {:.1}s, limit {limit_secs}s", elapsed.as_secs_f64())
    })
}

fn table_of(pairs: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
    pairs.iter().map(|&(v, c)| (BigInt::from(v), BigInt::from(c))).collect()
}

fn dist_via_cli(p: &str, m: &str, verify: bool) -> Result<Vec<(BigInt, BigInt)>, String> {
    let mut args = vec!["niho", "dist", p, m, "--format", "csv"];
    if verify {
        args.push("--verify");
    }
    let out = run(args);
    ensure(out.code == 0, || format!("exit {} ({})", out.code, out.stderr.trim()))?;
    ensure(!out.stderr.contains("FAIL"), || out.stderr.clone())?;
    let mut lines = out.stdout.lines();
    ensure(lines.next() == Some("value,count"), || "missing csv header".into())?;
    lines
        .map(|l| {
            let (v, c) = l.split_once(',').ok_or("bad csv row")?;
            Ok((v.parse().map_err(|_| "bad value")?, c.parse().map_err(|_| "bad count")?))
        })
        .collect::<Result<_, &str>>()
        .map_err(str::to_string)
}

fn reproduce(p: &str, m: &str, expected: &[(i64, i64)], limit: u64) -> Verdict {
    let start = Instant::now();
    let got = dist_via_cli(p, m, false)?;
    within(start.elapsed(), limit, "closed form")?;
    ensure(got == table_of(expected), || format!("got {got:?}"))?;
    Ok(format!("closed form in {:.3}s", start.elapsed().as_secs_f64()))
}

fn criterion_1() -> Verdict {
    reproduce("5", "2", &[(-26, 216), (-1, 238), (24, 109), (49, 54), (74, 4), (99, 3)], 1)
}

fn criterion_2() -> Verdict {
    let expected = [(-344, 42970), (-1, 44134), (342, 19735), (685, 9803), (1028, 52), (1371, 954)];
    let closed = reproduce("7", "3", &expected, 1)?;
    let start = Instant::now();
    let verified = dist_via_cli("7", "3", true)?;
    within(start.elapsed(), 60, "oracle")?;
    ensure(verified == table_of(&expected), || "verified table differs".into())?;
    Ok(format!("{closed}, oracle in {:.2}s", start.elapsed().as_secs_f64()))
}

fn criterion_3() -> Verdict {
    let expected = [(-12, 38), (-1, 46), (10, 26), (21, 8), (32, 1), (43, 1)];
    let start = Instant::now();
    let got = dist_via_cli("11", "1", true)?;
    within(start.elapsed(), 1, "closed form with oracle")?;
    ensure(got == table_of(&expected), || format!("got {got:?}"))?;
    Ok(format!("with oracle in {:.3}s", start.elapsed().as_secs_f64()))
}

fn criterion_4() -> Verdict {
    let lam = |p, m| lambda_closed(p, m).map_err(|e| e.to_string());
    ensure(lam(7, 3)? == BigInt::from(-21), || "lambda(7,3)".into())?;
    ensure(lam(11, 1)? == BigInt::from(-1), || "lambda(11,1)".into())?;
    for m in 1..=6u32 {
        let expected = -1 - if m % 2 == 0 { 1 } else { -1 };
        ensure(lam(5, m)? == BigInt::from(expected), || format!("lambda(5,{m})"))?;
    }
    let mut fields = 0;
    for (p, m, _) in prime_powers_up_to(20_000).into_iter().filter(|&(p, _, _)| (5..=31).contains(&p)) {
        let ctx = build_field_context(p, m).map_err(|e| e.to_string())?;
        let direct = lambda_direct(&ctx).map_err(|e| e.to_string())?;
        ensure(lam(p, m)? == BigInt::from(direct), || format!("recurrence differs at {p}^{m}"))?;
        fields += 1;
    }
    Ok(format!("{fields} fields, recurrence equals direct sum"))
}

fn criterion_5() -> Verdict {
    let start = Instant::now();
    for (p, a) in [(17, -14), (19, -22), (23, 34), (7, 0)] {
        let got = a_p_coefficient(p).map_err(|e| e.to_string())?;
        ensure(got == a, || format!("A_{p} = {got}, expected {a}"))?;
    }
    let mut primes = 0;
    for p in (7..=100u64).filter(|&p| niho_core::arith::is_prime(p)) {
        let form = a_p_coefficient(p).map_err(|e| e.to_string())?;
        let series = a_p_modular_form(p).map_err(|e| e.to_string())?;
        ensure(BigInt::from(form) == series, || format!("p = {p}: {form} vs {series}"))?;
        primes += 1;
    }
    within(start.elapsed(), 10, "coefficients")?;
    Ok(format!("{primes} primes, both routes agree"))
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let surface = |p: u64, m: u32| -> Result<(u64, BigInt), String> {
        let ctx = build_field_context(p, m).map_err(|e| e.to_string())?;
        let count = count_surface_points(&ctx).map_err(|e| e.to_string())?;
        Ok((count.nx_tilde, surface_count_closed(p, m).map_err(|e| e.to_string())?))
    };
    for (p, m) in [(7, 1), (11, 1), (13, 1), (7, 2)] {
        let (counted, closed) = surface(p, m)?;
        ensure(closed == BigInt::from(counted), || {
            format!("q = {}: counted {counted}, closed {closed}", p.pow(m))
        })?;
    }
    let mut notes = Vec::new();
    for (p, m) in [(3, 2), (5, 2)] {
        let (counted, closed) = surface(p, m)?;
        let q = p.pow(m);
        notes.push(if closed == BigInt::from(counted) {
            format!("q = {q} agrees")
        } else {
            format!("q = {q} differs ({counted} vs {closed}, singular reduction)")
        });
    }
    within(start.elapsed(), 120, "surface counts")?;
    Ok(format!("q in 7, 11, 13, 49 agree; {}", notes.join("; ")))
}

fn criterion_7() -> Verdict {
    let mut fields = Vec::new();
    for (p, m, q) in prime_powers_up_to(350) {
        if ![5, 7, 11, 13].contains(&p) || !check_gcd_condition(p, m).unwrap() {
            continue;
        }
        let pair = FieldPair::new(p, m).map_err(|e| e.to_string())?;
        let hist = root_count_histogram(&pair).map_err(|e| e.to_string())?;
        let ok = moment_identities_check(&hist, p, m).map_err(|e| e.to_string())?;
        ensure(ok, || format!("moments fail at q = {q}: {:?}", hist.counts))?;
        fields.push(q.to_string());
    }
    Ok(format!("q = {}", fields.join(", ")))
}

fn criterion_8() -> Verdict {
    let start = Instant::now();
    let checks = [
        Check::N4,
        Check::N5,
        Check::B3,
        Check::Gamma2,
        Check::Gamma5,
        Check::B5,
        Check::Patterns,
    ];
    let (mut passed, mut skipped) = (0, 0);
    for (p, m, q) in prime_powers_up_to(350) {
        for c in checks {
            match run_check(c, p, m) {
                Outcome::Pass => passed += 1,
                Outcome::Skipped => skipped += 1,
                Outcome::Fail(why) => return Err(format!("{} at q = {q}: {why}", c.name())),
            }
        }
    }
    within(start.elapsed(), 600, "oracle suite")?;
    Ok(format!(
        "{passed} checks passed, {skipped} not applicable, {:.1}s",
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_9() -> Verdict {
    for (p, m) in [(5, 2), (7, 2), (11, 2)] {
        let pair = FieldPair::new(p, m).map_err(|e| e.to_string())?;
        let ok = macwilliams_identity_check(&pair, &sample_points(10)).map_err(|e| e.to_string())?;
        ensure(ok, || format!("identity fails at q = {}", pair.q()))?;
    }
    Ok("q = 25, 49, 121 at 10 points".into())
}

fn criterion_10() -> Verdict {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    for (p, m) in [(5, 2), (7, 2), (11, 2)] {
        let pair = FieldPair::new(p, m).map_err(|e| e.to_string())?;
        let n = pair.et().group_order();
        for _ in 0..100 {
            let a = pair.et().gen_pow(rng.gen_range(0..n) as u64);
            ensure(duality_holds_at(&pair, a), || format!("fails at q = {}", pair.q()))?;
        }
    }
    Ok("100 random a for q = 25, 49, 121".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("distribution for q = 25", criterion_1),
        ("distribution for q = 343 with oracle", criterion_2),
        ("distribution for q = 11 with oracle", criterion_3),
        ("character sum values and recurrence", criterion_4),
        ("surface coefficients", criterion_5),
        ("surface point counts", criterion_6),
        ("moment identities", criterion_7),
        ("closed forms against oracles, q <= 350", criterion_8),
        ("weight enumerator identity", criterion_9),
        ("dual word relation", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
