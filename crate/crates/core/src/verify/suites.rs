use std::collections::BTreeMap;

use super::{Bounds, Engine, Family, FamilyElement, Recorder, RelationReport, Suite};
use crate::blockpoly::{
    antipode, block_differential, block_shuffle_sum, bracket, characterize_generator,
    cyclic_defect, cyclic_operator, cyclic_sum, duality_defect, generator_constraints,
    ihara_poly_signed, ihara_poly_unsigned, is_z_primitive, lyndon_dim, reduced_degree,
    KernelMembership, KernelSum,
    one_variable_identity, p_from_q, q_coefficients, q_gen, reduce, reduced_bracket,
    reflection_defect, three_variable_identities, to_zword, ZPoly, GENERATOR_SCALE,
};
use crate::blocks::{
    block_degree, cpoly_to_word_poly, depth_of_monomial, depth_sign_transform,
    framed_block_degree, framed_component, pi_bl, pi_bl_exponents, word_poly_to_cpoly, Word,
};
use crate::exactalg::rank_over_q;
use crate::wordops::{
    delta1, graded_delta1, ihara_word, infinitesimal_coaction, insertion_action, letter_brackets,
    FormalII,
};
use crate::{QPoly, Rational, Result};

pub(super) fn run(
    engine: &Engine,
    suite: Suite,
    bounds: Bounds,
    family: Option<&Family>,
) -> Result<RelationReport> {
    let mut rec = Recorder::new(engine.notes());
    let fam = || family.expect("family is built for this suite");
    match suite {
        Suite::Duality => duality(&mut rec, fam()),
        Suite::BlockShuffle => block_shuffle(&mut rec, fam())?,
        Suite::CyclicInsertion => cyclic_insertion(&mut rec, fam())?,
        Suite::Reflection => {
            for e in fam().iter() {
                rec.zero(|| e.label.clone(), &reflection_defect(&e.reduced));
            }
        }
        Suite::CyclicInvariance => {
            for e in fam().iter() {
                rec.zero(|| e.label.clone(), &cyclic_defect(&e.reduced));
            }
        }
        Suite::Differential => {
            for e in fam().iter() {
                rec.zero(|| e.label.clone(), &block_differential(&e.reduced));
            }
        }
        Suite::KernelMembership => kernel(&mut rec, fam())?,
        Suite::Regularisation => regularisation(&mut rec, engine, bounds, fam())?,
        Suite::GeneratorCharacterisation => characterisation(&mut rec, engine, bounds)?,
        Suite::DepthSupport => depth_support(&mut rec, engine, bounds)?,
        Suite::CoactionGrading => coaction_grading(&mut rec, bounds, fam())?,
        Suite::IharaConsistency => ihara_consistency(&mut rec, bounds, fam())?,
        Suite::Freeness => freeness(&mut rec, bounds, fam())?,
        Suite::ParityEndpoint => parity(&mut rec, bounds)?,
    }
    Ok(rec.finish(suite, bounds))
}

fn generator_indices(bounds: Bounds) -> impl Iterator<Item = usize> {
    (1..).take_while(move |k| 2 * k < bounds.max_weight)
}

/// Reads a z-word polynomial back as exponent vectors.
fn z_to_cpoly(z: &ZPoly<Rational>, vars: usize) -> QPoly {
    QPoly::from_terms(
        vars,
        z.terms()
            .map(|(w, c)| (w.iter().map(|l| l.0).collect(), c.clone())),
    )
}

fn duality(rec: &mut Recorder, family: &Family) {
    for e in family.iter() {
        rec.zero(|| e.label.clone(), &duality_defect(&e.bg));
        match to_zword(e.bg.poly()) {
            Ok(z) => {
                rec.holds(|| format!("{}: z-word not primitive", e.label), is_z_primitive(&z));
                let anti = &antipode(&z) + &z;
                rec.zero(
                    || format!("{}: antipode + identity", e.label),
                    &z_to_cpoly(&anti, e.bg.vars()),
                );
            }
            Err(err) => rec.holds(|| format!("{}: {err}", e.label), false),
        }
    }
}

fn block_shuffle(rec: &mut Recorder, family: &Family) -> Result<()> {
    for e in family.iter() {
        let n = e.bg.vars();
        for r in 1..n {
            rec.zero(
                || format!("{}, r = {r}", e.label),
                &block_shuffle_sum(e.bg.poly(), r)?,
            );
        }
    }
    Ok(())
}

fn cyclic_insertion(rec: &mut Recorder, family: &Family) -> Result<()> {
    for e in family.iter() {
        rec.zero(|| e.label.clone(), &cyclic_sum(e.bg.poly()));
        let z = to_zword(e.bg.poly())?;
        rec.zero(
            || format!("{}: cyclic operator on z-word", e.label),
            &z_to_cpoly(&cyclic_operator(&z), e.bg.vars()),
        );
    }
    Ok(())
}

fn kernel(rec: &mut Recorder, family: &Family) -> Result<()> {
    let mut proper = 0;
    let mut sums: BTreeMap<(usize, u32), KernelSum<Rational>> = BTreeMap::new();
    for e in family.iter() {
        let key = (e.reduced.vars(), reduced_degree(&e.reduced)?);
        if let std::collections::btree_map::Entry::Vacant(e) = sums.entry(key) {
            e.insert(KernelSum::new(key.0, key.1)?);
        }
        let sum = &sums[&key];
        let km = KernelMembership {
            rank: sum.rank(),
            ambient: sum.ambient(),
            member: sum.contains(e.reduced.poly())?,
        };
        rec.holds(|| format!("{}: not in the kernel sum", e.label), km.member);
        if km.rank < km.ambient {
            proper += 1;
        }
        rec.detail(
            e.label.clone(),
            &[
                ("weight", e.weight() as u64),
                ("block_degree", e.block_degree() as u64),
                ("rank", km.rank as u64),
                ("ambient", km.ambient as u64),
                ("member", km.member as u64),
            ],
        );
    }
    rec.note(format!(
        "kernel sum is a proper subspace for {proper} of {} elements",
        family.len()
    ));
    Ok(())
}

fn regularisation(rec: &mut Recorder, engine: &Engine, bounds: Bounds, family: &Family) -> Result<()> {
    for k in generator_indices(bounds) {
        let p = engine.generator(k)?;
        let (lhs, rhs) = one_variable_identity(p.poly())?;
        rec.zero(|| format!("p{}: x d1 f(0,x) - f(x,-x)", 2 * k + 1), &(&lhs - &rhs));
        if k == 1 {
            rec.note(format!("p3: x d1 f(0,x) = {lhs}, f(x,-x) = {rhs}"));
        }
    }
    for e in family.iter().filter(|e| e.block_degree() == 2) {
        for (i, (l, r)) in three_variable_identities(e.bg.poly())?.iter().enumerate() {
            rec.zero(|| format!("{}: three-variable identity {}", e.label, i + 1), &(l - r));
        }
    }
    Ok(())
}

fn characterisation(rec: &mut Recorder, engine: &Engine, bounds: Bounds) -> Result<()> {
    let two = Rational::from_integer(2.into());
    for k in generator_indices(bounds) {
        let name = format!("p{}", 2 * k + 1);
        let p = engine.generator(k)?;
        for c in generator_constraints(p.poly())? {
            rec.zero(|| format!("{name}: {}", c.name), &c.defect);
        }
        let (dim, basis) = characterize_generator::<Rational>(k)?;
        rec.holds(|| format!("{name}: solution space has dimension {dim}"), dim == 1);
        let mut span = basis.clone();
        span.push(p.poly().clone());
        rec.holds(
            || format!("{name}: not proportional to the solution"),
            dim == 1 && rank_over_q(&span)? == 1,
        );
        let from_q = p_from_q(&q_gen(k)?)?;
        rec.zero(
            || format!("{name}: p - {GENERATOR_SCALE}*(q - q^swap)"),
            &(p.poly() - from_q.poly()),
        );
        let qc = q_coefficients::<Rational>(k)?;
        let sum = qc.c.iter().fold(Rational::from_integer(0.into()), |a, b| a + b);
        rec.holds(|| format!("{name}: c0 + 2*sum(c) != 0"), qc.c0 + sum * &two == Rational::from_integer(0.into()));
        rec.detail(name, &[("k", k as u64), ("dimension", dim as u64)]);
    }
    rec.option("lambda", GENERATOR_SCALE);
    Ok(())
}

fn depth_support(rec: &mut Recorder, engine: &Engine, bounds: Bounds) -> Result<()> {
    for k in generator_indices(bounds) {
        let p = engine.generator(k)?;
        let mut off = QPoly::zero(2);
        for (e, c) in p.poly().terms() {
            let d = depth_of_monomial(e)?;
            if d != k && d != k + 1 {
                off.add_term(e.clone(), c.clone());
            }
        }
        rec.zero(|| format!("p{}: terms outside depths {k}, {}", 2 * k + 1, k + 1), &off);
    }
    Ok(())
}

fn coaction_grading(rec: &mut Recorder, bounds: Bounds, family: &Family) -> Result<()> {
    for n in 1..=bounds.max_weight {
        for word in Word::all_of_length(n) {
            let s = FormalII::framed(&word);
            let total = s.block_degree();
            for r in 1..=(n - 1) / 2 {
                for t in infinitesimal_coaction::<Rational>(r, &s)? {
                    rec.holds(
                        || format!("{t}: block degrees do not add up to {total}"),
                        t.left.block_degree() + t.right.block_degree() == total,
                    );
                }
            }
            let d = framed_block_degree(&word.0);
            for (_, rest) in delta1(&word)? {
                rec.holds(
                    || format!("{word} -> {rest}: framed block degree drops by more than one"),
                    framed_block_degree(&rest.0) + 1 >= d,
                );
            }
        }
    }
    for e in family.iter() {
        let graded = graded_delta1(&cpoly_to_word_poly(e.bg.poly())?)?;
        rec.holds(
            || format!("{}: graded delta1 has {} nonzero terms", e.label, graded.len()),
            graded.is_empty(),
        );
    }
    Ok(())
}

/// Finds the sign `s` with `a = s·b`: `Some(0)` when both vanish.
fn relative_sign(a: &QPoly, b: &QPoly) -> Option<i8> {
    if a == b {
        Some(if a.is_zero() { 0 } else { 1 })
    } else if *a == -b {
        Some(-1)
    } else {
        None
    }
}

/// Records the sign of every comparison and requires it to be constant
/// within each class.
struct SignLedger {
    signs: BTreeMap<String, i8>,
}

impl SignLedger {
    fn check(&mut self, rec: &mut Recorder, class: String, input: &str, a: &QPoly, b: &QPoly) {
        match relative_sign(a, b) {
            Some(0) => rec.holds(String::new, true),
            Some(s) => {
                let fixed = *self.signs.entry(class.clone()).or_insert(s);
                if fixed == s {
                    rec.holds(String::new, true);
                } else {
                    rec.zero(
                        || format!("{input}: sign {s} differs from the recorded {fixed} for {class}"),
                        &(a - &b.scale(&Rational::from_integer(fixed.into()))),
                    );
                }
            }
            None => rec.zero(|| format!("{input}: not equal up to sign ({class})"), &(a - b)),
        }
    }
}

fn ihara_consistency(rec: &mut Recorder, bounds: Bounds, family: &Family) -> Result<()> {
    let mut ledger = SignLedger {
        signs: BTreeMap::new(),
    };
    let t = |e: &FamilyElement| depth_sign_transform(e.bg.poly(), e.weight());
    let mut pairs = 0;
    for f in family.iter() {
        for g in family.iter() {
            if f.block_degree() + g.block_degree() > bounds.max_block_degree
                || f.weight() + g.weight() > bounds.max_weight
            {
                continue;
            }
            pairs += 1;
            let (m, n) = (f.bg.vars(), g.bg.vars());
            let input = format!("{} o {}", f.label, g.label);
            let (tf, tg) = (t(f)?, t(g)?);

            // Word-level action on pullbacks, projected to the top block degree.
            let words = insertion_action(&cpoly_to_word_poly(&tf)?, &cpoly_to_word_poly(&tg)?);
            let top = framed_component(&words, m + n - 2);
            let word_side = if top.is_zero() {
                QPoly::zero(m + n - 1)
            } else {
                word_poly_to_cpoly(&top)?
            };
            let unsigned = ihara_poly_unsigned(&tf, &tg, m)?;
            ledger.check(rec, "recursion vs unsigned formula".into(), &input, &word_side, &unsigned);

            let conj = depth_sign_transform(&unsigned, f.weight() + g.weight())?;
            let signed = ihara_poly_signed(&f.bg, &g.bg)?;
            ledger.check(
                rec,
                format!("depth-sign conjugate vs signed formula, (m,n) = ({m},{n})"),
                &input,
                &conj,
                signed.poly(),
            );

            let lhs = reduce(&bracket(&f.bg, &g.bg)?)?;
            let rhs = reduced_bracket(&f.reduced, &g.reduced)?;
            ledger.check(
                rec,
                format!("reduced bracket vs reduction of bracket, (m,n) = ({m},{n})"),
                &format!("[{}, {}]", f.label, g.label),
                lhs.poly(),
                rhs.poly(),
            );
        }
    }

    // The recursion agrees with the insertion action on Lie inputs.
    let lie_len = bounds.max_weight.min(4);
    for len in 1..=lie_len {
        for sigma in letter_brackets::<Rational>(len) {
            for glen in 0..=(bounds.max_weight - len).min(3) {
                for g in Word::all_of_length(glen) {
                    let gp = crate::exactalg::NCPoly::word(g.0.clone());
                    let rec_side = ihara_word(&sigma, &gp)?;
                    let ins = insertion_action(&sigma, &gp);
                    let diff = &rec_side - &ins;
                    rec.holds(|| format!("recursion vs insertion: {sigma} o {g}: {diff}"), diff.is_zero());
                }
            }
        }
    }

    for (class, s) in &ledger.signs {
        rec.note(format!("ihara sign, {class}: {s:+}"));
    }
    rec.option("pairs", pairs);
    Ok(())
}

fn freeness(rec: &mut Recorder, bounds: Bounds, family: &Family) -> Result<()> {
    for b in 1..=bounds.max_block_degree {
        for weight in 3 * b..=bounds.max_weight {
            let polys: Vec<QPoly> = family.cell(weight, b).map(|e| e.reduced.poly().clone()).collect();
            let rank = if polys.is_empty() { 0 } else { rank_over_q(&polys)? };
            let expected = lyndon_dim(weight, b);
            rec.holds(
                || format!("weight {weight}, block degree {b}: rank {rank}, expected {expected}"),
                rank as u128 == expected,
            );
            rec.detail(
                format!("({weight},{b})"),
                &[
                    ("weight", weight as u64),
                    ("block_degree", b as u64),
                    ("rank", rank as u64),
                    ("lyndon_dim", expected as u64),
                    ("spanning_set", polys.len() as u64),
                ],
            );
        }
    }
    Ok(())
}

fn parity(rec: &mut Recorder, bounds: Bounds) -> Result<()> {
    for n in 1..=bounds.max_weight {
        for word in Word::all_of_length(n) {
            let l = word.letters();
            let differ = l.first() != l.last();
            let b = block_degree(l)?;
            rec.holds(
                || format!("{word}: block degree {b}, length {n}"),
                ((b + n) % 2 == 0) == differ,
            );

            // depth ≡ ⌈l/2⌉ + Σ_{odd i} dᵢ (mod 2) for the exponents of 0w1.
            let exps = pi_bl_exponents(l);
            let odd: u32 = exps.iter().step_by(2).sum();
            rec.holds(
                || format!("{word}: depth parity against exponents {exps:?}"),
                (word.depth() + n.div_ceil(2) + odd as usize).is_multiple_of(2),
            );

            let m = pi_bl::<Rational>(l)?;
            let expected = if word.depth() % 2 == 1 { -&m } else { m.clone() };
            rec.zero(
                || format!("{word}: depth-sign transform"),
                &(&depth_sign_transform(&m, n)? - &expected),
            );
        }
    }
    Ok(())
}
