use num_integer::Integer;

use super::{p_gen, reduce, reduced_bracket, ReducedElement};
use crate::exactalg::CPoly;
use crate::{Result, Scalar};

fn mobius(n: u64) -> i128 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn factorial(n: u64) -> i128 {
    (1..=n as i128).product()
}

/// Number of Lyndon words with the given letter multiplicities.
fn lyndon_count(counts: &[u64]) -> u128 {
    let n: u64 = counts.iter().sum();
    if n == 0 {
        return 0;
    }
    let g = counts.iter().fold(0u64, |a, &b| a.gcd(&b));
    let mut total: i128 = 0;
    for d in (1..=g).filter(|d| g % d == 0) {
        let multinomial = counts
            .iter()
            .fold(factorial(n / d), |acc, &c| acc / factorial(c / d));
        total += mobius(d) * multinomial;
    }
    (total / n as i128) as u128
}

/// Multisets of `parts` generator indices `k ≥ 1` (weights `2k+1`) with
/// total weight `weight`, as nondecreasing sequences.
fn contents(weight: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = min;
        while 2 * k < left {
            cur.push(k);
            go(left - 2 * k - 1, parts - 1, k, cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(weight, parts, 1, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the piece of weight `weight` and block degree
/// `block_degree` in the free Lie algebra on one generator in each odd
/// weight `≥ 3`, where block degree counts generators.
pub fn lyndon_dim(weight: usize, block_degree: usize) -> u128 {
    contents(weight, block_degree)
        .into_iter()
        .map(|content| {
            let mut counts: Vec<u64> = Vec::new();
            for pair in content.chunk_by(|a, b| a == b) {
                counts.push(pair.len() as u64);
            }
            lyndon_count(&counts)
        })
        .sum()
}

/// Ordered generator sequences `(k₁,…,k_b)` of total weight `weight`, in
/// lexicographic order.
pub(crate) fn generator_sequences(weight: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 1;
        while 2 * k < left {
            cur.push(k);
            go(left - 2 * k - 1, parts - 1, cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(weight, parts, &mut Vec::new(), &mut out);
    out
}

/// Left-nested reduced brackets of generators over every ordered
/// sequence of the given total weight and length.
pub fn bracket_span<S: Scalar>(weight: usize, block_degree: usize) -> Result<Vec<CPoly<S>>> {
    let mut out = Vec::new();
    for seq in generator_sequences(weight, block_degree) {
        let gens: Vec<ReducedElement<S>> = seq
            .iter()
            .map(|&k| reduce(&p_gen(k)?))
            .collect::<Result<_>>()?;
        let (first, rest) = gens.split_first().expect("nonempty sequence");
        let r = rest
            .iter()
            .try_fold(first.clone(), |acc, g| reduced_bracket(&acc, g))?;
        out.push(r.poly().clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rank_over_q;
    use crate::Rational;

    #[test]
    fn spot_dimensions() {
        assert_eq!(lyndon_dim(8, 2), 1);
        assert_eq!(lyndon_dim(9, 3), 0);
        assert_eq!(lyndon_dim(11, 3), 1);
        assert_eq!(lyndon_dim(13, 3), 2);
        assert_eq!(lyndon_dim(14, 2), 2);
        assert_eq!(lyndon_dim(7, 1), 1);
        assert_eq!(lyndon_dim(6, 1), 0);
        assert_eq!(lyndon_dim(6, 2), 0);
    }

    #[test]
    fn necklace_formula_matches_brute_force() {
        // Lyndon words over {0,1,2} with given content, by enumeration.
        fn brute(counts: &[u64]) -> u128 {
            let n: u64 = counts.iter().sum();
            let mut total = 0;
            let letters = counts.len() as u64;
            for code in 0..letters.pow(n as u32) {
                let w: Vec<u64> = (0..n).map(|i| code / letters.pow(i as u32) % letters).collect();
                let ok_content = (0..letters).all(|a| w.iter().filter(|&&x| x == a).count() as u64 == counts[a as usize]);
                let lyndon = (1..n as usize).all(|r| {
                    let mut rot = w.clone();
                    rot.rotate_left(r);
                    w < rot
                });
                if ok_content && lyndon {
                    total += 1;
                }
            }
            total
        }
        for counts in [[2, 1, 0], [2, 2, 0], [3, 1, 1], [2, 2, 2], [4, 2, 0], [1, 1, 1]] {
            let c: Vec<u64> = counts.iter().copied().filter(|&x| x > 0).collect();
            assert_eq!(lyndon_count(&c), brute(&c));
        }
    }

    #[test]
    fn span_examples() {
        let s = bracket_span::<Rational>(8, 2).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(rank_over_q(&s).unwrap(), 1);
        assert_eq!(rank_over_q(&bracket_span::<Rational>(9, 3).unwrap()).unwrap(), 0);
        assert_eq!(rank_over_q(&bracket_span::<Rational>(11, 3).unwrap()).unwrap(), 1);
    }
}
