use crate::blocks::{framed, Letter};
use crate::exactalg::NCPoly;
use crate::{Result, Scalar};

use super::require_lie;

/// Linearised Ihara action `σ ∘ g` for a Lie polynomial `σ`.
///
/// Defined on words by peeling the prefix `e0ⁿe1`:
///
/// ```text
/// σ ∘ e0ⁿ e1 u = e0ⁿ σ e1 u + e0ⁿ e1 σ* u + e0ⁿ e1 (σ ∘ u)
/// σ ∘ e0ⁿ      = e0ⁿ σ
/// ```
///
/// and extended linearly in `g`.
pub fn ihara_word<S: Scalar>(sigma: &NCPoly<S>, g: &NCPoly<S>) -> Result<NCPoly<S>> {
    require_lie(sigma)?;
    Ok(ihara_unchecked(sigma, g))
}

pub(crate) fn ihara_unchecked<S: Scalar>(sigma: &NCPoly<S>, g: &NCPoly<S>) -> NCPoly<S> {
    let sigma_star = sigma.star();
    let mut out = NCPoly::zero();
    for (w, c) in g.terms() {
        let mut prefix: Vec<Letter> = Vec::new();
        let mut rest: &[Letter] = w;
        loop {
            let Some(i) = rest.iter().position(|&l| l == Letter::E1) else {
                // σ ∘ e0ⁿ = e0ⁿ σ
                let mut head = prefix.clone();
                head.extend_from_slice(rest);
                emit(&mut out, &head, sigma, &[], c);
                break;
            };
            let zeros = &rest[..i];
            let u = &rest[i + 1..];
            // e0ⁿ σ e1 u
            let mut head = prefix.clone();
            head.extend_from_slice(zeros);
            let mut tail = vec![Letter::E1];
            tail.extend_from_slice(u);
            emit(&mut out, &head, sigma, &tail, c);
            // e0ⁿ e1 σ* u
            head.push(Letter::E1);
            emit(&mut out, &head, &sigma_star, u, c);
            prefix = head;
            rest = u;
        }
    }
    out
}

fn emit<S: Scalar>(out: &mut NCPoly<S>, head: &[Letter], p: &NCPoly<S>, tail: &[Letter], c: &S) {
    for (w, k) in p.terms() {
        let mut v = Vec::with_capacity(head.len() + w.len() + tail.len());
        v.extend_from_slice(head);
        v.extend_from_slice(w);
        v.extend_from_slice(tail);
        out.add_term(v, c.clone() * k.clone());
    }
}

/// Dual of the infinitesimal coaction: in `e0·g·e1`, insert `σ` between
/// each adjacent `0|1` pair and `σ*` between each `1|0` pair.
///
/// Linear in `σ` with no Lie requirement; on Lie polynomials it agrees
/// with [`ihara_word`].
pub fn insertion_action<S: Scalar>(sigma: &NCPoly<S>, g: &NCPoly<S>) -> NCPoly<S> {
    let sigma_star = sigma.star();
    let mut out = NCPoly::zero();
    for (w, c) in g.terms() {
        let fr = framed(w);
        for j in 0..=w.len() {
            let src = match (fr[j], fr[j + 1]) {
                (Letter::E0, Letter::E1) => sigma,
                (Letter::E1, Letter::E0) => &sigma_star,
                _ => continue,
            };
            emit(&mut out, &w[..j], src, &w[j..], c);
        }
    }
    out
}

/// Ihara bracket `f ∘ g − g ∘ f` of two Lie polynomials.
pub fn ihara_bracket_word<S: Scalar>(f: &NCPoly<S>, g: &NCPoly<S>) -> Result<NCPoly<S>> {
    require_lie(f)?;
    require_lie(g)?;
    Ok(&ihara_unchecked(f, g) - &ihara_unchecked(g, f))
}

/// Every nonzero left-nested commutator `[a_n, […, [a₂, a₁]]]` of letters
/// with `n` letters, in lexicographic order of the letter sequence.
pub fn letter_brackets<S: Scalar>(n: usize) -> Vec<NCPoly<S>> {
    assert!((1..32).contains(&n));
    let mut out = Vec::new();
    for bits in 0u32..1 << n {
        let letter = |i: usize| {
            if bits >> (n - 1 - i) & 1 == 1 {
                Letter::E1
            } else {
                Letter::E0
            }
        };
        let mut x = NCPoly::word(vec![letter(0)]);
        for i in 1..n {
            x = NCPoly::word(vec![letter(i)]).commutator(&x);
        }
        if !x.is_zero() {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::framed_component;
    use crate::wordops::{is_lie_element, word_poly};
    use crate::{Error, QWordPoly};

    fn w(s: &str) -> QWordPoly {
        word_poly(s).unwrap()
    }

    fn sigma() -> QWordPoly {
        &w("01") - &w("10")
    }

    #[test]
    fn action_on_single_letters() {
        // σ ∘ e1 = σe1 + e1σ* + e1σ = σe1 since σ* = −σ.
        assert_eq!(ihara_word(&sigma(), &w("1")).unwrap(), &w("011") - &w("101"));
        assert_eq!(
            ihara_word(&sigma(), &w("00")).unwrap(),
            &w("0001") - &w("0010")
        );
        assert_eq!(ihara_word(&sigma(), &QWordPoly::one()).unwrap(), sigma());
        assert_eq!(ihara_word(&w("01"), &w("1")).unwrap_err(), Error::NotLie);
    }

    fn lie_family() -> Vec<QWordPoly> {
        (1..=4).flat_map(letter_brackets).collect()
    }

    fn test_words() -> Vec<QWordPoly> {
        (0..=4)
            .flat_map(|n| {
                crate::blocks::Word::all_of_length(n).map(|x| QWordPoly::word(x.0))
            })
            .collect()
    }

    #[test]
    fn recursion_equals_insertion_on_lie_elements() {
        for s in lie_family() {
            for g in test_words() {
                assert_eq!(ihara_word(&s, &g).unwrap(), insertion_action(&s, &g));
            }
        }
    }

    #[test]
    fn action_is_block_graded() {
        // The framed block degree of σ∘g is the sum of those of σ and g.
        use crate::blocks::framed_block_degree;
        for s in lie_family() {
            for g in test_words() {
                let c = framed_block_degree(g.terms().next().unwrap().0);
                let out = ihara_word(&s, &g).unwrap();
                for b in 0..8 {
                    let part = framed_component(&s, b);
                    let expected = insertion_action(&part, &g);
                    assert_eq!(framed_component(&out, b + c), expected);
                }
            }
        }
    }

    #[test]
    fn bracket_is_lie_antisymmetric_and_jacobi() {
        let small: Vec<QWordPoly> = (2..=3).flat_map(letter_brackets).collect();
        for a in &small {
            assert!(ihara_bracket_word(a, a).unwrap().is_zero());
            for b in &small {
                let ab = ihara_bracket_word(a, b).unwrap();
                assert!(is_lie_element(&ab).unwrap());
                assert_eq!(ab, -&ihara_bracket_word(b, a).unwrap());
                for c in letter_brackets::<crate::Rational>(2) {
                    let j1 = ihara_bracket_word(a, &ihara_bracket_word(b, &c).unwrap()).unwrap();
                    let j2 = ihara_bracket_word(b, &ihara_bracket_word(&c, a).unwrap()).unwrap();
                    let j3 = ihara_bracket_word(&c, &ab).unwrap();
                    assert!((&(&j1 + &j2) + &j3).is_zero());
                }
            }
        }
    }

    #[test]
    fn letter_bracket_counts() {
        // [a,a] = 0 kills half of the weight-2 sequences.
        assert_eq!(letter_brackets::<crate::Rational>(1).len(), 2);
        assert_eq!(letter_brackets::<crate::Rational>(2).len(), 2);
        for p in letter_brackets::<crate::Rational>(4) {
            assert!(is_lie_element(&p).unwrap());
        }
    }
}
