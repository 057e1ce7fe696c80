//! Acceptance checks. Each criterion prints one PASS/FAIL line with its
//! runtime against the budget; the process exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use blockmzv::blockpoly::{
    characterize_generator, generator_constraints, one_variable_identity, p_gen, q_coefficients,
    shuffle_permutations,
};
use blockmzv::blocks::{bl, bl_inverse, BlockTuple, Letter, Word};
use blockmzv::exactalg::PolyRecord;
use blockmzv::verify::{
    run_suite, run_suite_with, Bounds, Engine, RelationReport, Suite,
};
use blockmzv::{QPoly, Rational};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passing(name: &str, w: usize, b: usize) -> Result<RelationReport, String> {
    let r = run_suite(name, w, b).map_err(|e| e.to_string())?;
    ensure(
        r.passed() && r.failure_count == 0 && r.instances_checked > 0,
        format!("{name}: {} failures, first {:?}", r.failure_count, r.failures.first()),
    )?;
    Ok(r)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Block lengths by scanning for equal neighbours, independent of the library.
fn naive_blocks(w: &str) -> (char, Vec<usize>) {
    let c: Vec<char> = w.chars().collect();
    let mut lens = vec![1];
    for i in 1..c.len() {
        if c[i] == c[i - 1] {
            lens.push(1);
        } else {
            *lens.last_mut().unwrap() += 1;
        }
    }
    (c[0], lens)
}

fn criterion_1() -> Check {
    let t = |e, l: &[usize]| BlockTuple::new(e, l.to_vec()).unwrap();
    let w1: Word = "01001011".parse().unwrap();
    let w2: Word = "110101100".parse().unwrap();
    ensure(bl(w1.letters()).unwrap() == t(Letter::E0, &[3, 4, 1]), "01001011")?;
    ensure(bl(w2.letters()).unwrap() == t(Letter::E1, &[1, 5, 2, 1]), "110101100")?;
    ensure(bl(w1.letters()).unwrap().to_string() == "(0; 3,4,1)", "rendering")?;
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for n in 1..=12 {
        for w in Word::all_of_length(n) {
            let tuple = bl(w.letters()).map_err(|e| e.to_string())?;
            ensure(bl_inverse(&tuple) == w, format!("round trip fails on {w}"))?;
            let (first, lens) = naive_blocks(&w.to_string());
            ensure(
                tuple.epsilon().as_char() == first && tuple.lengths() == lens.as_slice(),
                format!("{w}: {tuple} vs naive"),
            )?;
            seen.insert(tuple);
            count += 1;
        }
    }
    ensure(count == 8190 && seen.len() == 8190, "bl is not injective")?;
    Ok(format!("{count} words round-trip"))
}

/// `p_{2k+1}` at an integer point from the closed form, in i128.
fn closed_form_value(k: u32, x: i128, y: i128) -> (i128, i128) {
    let num = x * y * (x - y) * ((1 - 2i128.pow(2 * k + 1)) * (x + y).pow(2 * k) - (x - y).pow(2 * k));
    (num, 2i128.pow(2 * k))
}

fn criterion_2() -> Check {
    for k in 1..=6usize {
        let p = p_gen::<Rational>(k).map_err(|e| e.to_string())?;
        for c in generator_constraints(p.poly()).map_err(|e| e.to_string())? {
            ensure(c.defect.is_zero(), format!("p{}: {} = {}", 2 * k + 1, c.name, c.defect))?;
        }
        let (dim, _) = characterize_generator::<Rational>(k).map_err(|e| e.to_string())?;
        ensure(dim == 1, format!("k = {k}: solution dimension {dim}"))?;
        for (x, y) in [(1, 2), (3, -1), (-2, 5), (7, 4)] {
            let (n, d) = closed_form_value(k as u32, x, y);
            let v = p.poly().eval(&[q(x as i64), q(y as i64)]);
            ensure(v == Rational::new(n.into(), d.into()), format!("p{} at ({x},{y})", 2 * k + 1))?;
        }
        let c = q_coefficients::<Rational>(k).map_err(|e| e.to_string())?;
        let sum: Rational = c.c.iter().cloned().fold(q(0), |a, b| a + b);
        ensure(c.c0 + sum * q(2) == q(0), "c0 = -2 sum c")?;
    }
    Ok("k = 1..6: five constraints hold, solution dimension 1".into())
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_3() -> Check {
    let r = passing("block_shuffle", 13, 3)?;
    // 6 generators (1 split each), 10 pairs (2 each), 10 triples (3 each).
    ensure(r.instances_checked == 6 + 2 * 10 + 3 * 10, format!("{} instances", r.instances_checked))?;
    for n in 2..=4 {
        for k in 1..n {
            ensure(shuffle_permutations(n, k).len() == binomial(n, k), "shuffle set size")?;
        }
    }
    Ok(format!("{} (element, r) instances vanish", r.instances_checked))
}

fn criterion_4() -> Check {
    let a = passing("cyclic_insertion", 13, 3)?;
    let b = passing("cyclic_invariance", 13, 3)?;
    Ok(format!("{} + {} instances", a.instances_checked, b.instances_checked))
}

fn criterion_5() -> Check {
    let r = passing("differential", 13, 3)?;
    ensure(r.instances_checked == 26, "family size")?;
    Ok(format!("{} reduced elements annihilated", r.instances_checked))
}

fn criterion_6() -> Check {
    let r = passing("ihara_consistency", 11, 2)?;
    let signs: Vec<&String> = r
        .engine_notes
        .iter()
        .filter(|n| n.starts_with("ihara sign"))
        .collect();
    ensure(
        signs.iter().any(|n| n.ends_with("recursion vs unsigned formula: +1")),
        format!("{signs:?}"),
    )?;
    let conj: Vec<_> = signs.iter().filter(|n| n.contains("depth-sign conjugate")).collect();
    ensure(conj.len() == 1 && conj[0].ends_with("(m,n) = (2,2): -1"), format!("{conj:?}"))?;
    Ok(format!("{} instances, global sign {}", r.instances_checked, &conj[0][conj[0].len() - 2..]))
}

fn criterion_7() -> Check {
    let r = passing("freeness", 15, 3)?;
    let cell = |w: u64, b: u64| {
        r.details
            .iter()
            .find(|d| d.values["weight"] == w && d.values["block_degree"] == b)
            .map(|d| (d.values["rank"], d.values["lyndon_dim"]))
    };
    for (w, b, expected) in [(8, 2, 1), (9, 3, 0), (11, 3, 1), (13, 3, 2), (14, 2, 2)] {
        ensure(cell(w, b) == Some((expected, expected)), format!("cell ({w},{b}): {:?}", cell(w, b)))?;
    }
    Ok(format!("{} cells, rank = lyndon_dim", r.details.len()))
}

fn criterion_8() -> Check {
    let r = passing("coaction_grading", 10, 3)?;
    Ok(format!("{} terms and words checked", r.instances_checked))
}

fn criterion_9() -> Check {
    let r = passing("regularisation", 12, 2)?;
    let (l, rhs) = one_variable_identity(p_gen::<Rational>(1).unwrap().poly()).map_err(|e| e.to_string())?;
    let two_x5 = QPoly::monomial(vec![5], q(2));
    ensure(l == two_x5 && rhs == two_x5, format!("p3 gives {l} and {rhs}"))?;
    Ok(format!("{} identities, p3 gives 2x^5 on both sides", r.instances_checked))
}

fn criterion_10() -> Check {
    let suites = [
        Suite::BlockShuffle,
        Suite::CyclicInsertion,
        Suite::CyclicInvariance,
        Suite::Differential,
        Suite::IharaConsistency,
    ];
    let mut caught = Vec::new();
    for i in 0..=2 {
        let engine = Engine::mutated(2, i);
        let mut hit = None;
        for s in suites {
            let r = run_suite_with(&engine, s, Bounds::default()).map_err(|e| e.to_string())?;
            if let Some(payload) = r.failures.iter().find_map(|f| f.defect.as_ref()) {
                let poly: QPoly = PolyRecord::to_poly(payload)?;
                ensure(!poly.is_zero(), "empty counterexample")?;
                hit = Some(format!("c{i}: {} on {}", s, r.failures[0].input));
                break;
            }
        }
        caught.push(hit.ok_or_else(|| format!("flipping c{i} of q5 goes unnoticed"))?);
    }
    Ok(caught.join("; "))
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 block decomposition", criterion_1, Duration::from_secs(1)),
        ("2 generator characterisation", criterion_2, Duration::from_secs(5)),
        ("3 block shuffle", criterion_3, Duration::from_secs(120)),
        ("4 cyclic insertion and invariance", criterion_4, Duration::from_secs(60)),
        ("5 differential", criterion_5, Duration::from_secs(120)),
        ("6 ihara consistency", criterion_6, Duration::from_secs(120)),
        ("7 freeness", criterion_7, Duration::from_secs(60)),
        ("8 coaction grading", criterion_8, Duration::from_secs(60)),
        ("9 regularisation", criterion_9, Duration::from_secs(30)),
        ("10 mutation sensitivity", criterion_10, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (verdict, msg) = match outcome {
            Ok(msg) if elapsed <= budget => ("PASS", msg),
            Ok(msg) => ("FAIL", format!("over budget: {msg}")),
            Err(msg) => ("FAIL", msg),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("{verdict} criterion {name} [{elapsed:.2?} / {budget:?}]: {msg}");
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
