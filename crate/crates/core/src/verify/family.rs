use std::collections::BTreeMap;

use super::{Bounds, Engine};
use crate::blockpoly::{bracket, generator_sequences, reduce};
use crate::{QBGElement, QReducedElement, Result};

/// A left-nested bracket `[[p_{2k₁+1}, p_{2k₂+1}], …]`.
#[derive(Clone, Debug)]
pub struct FamilyElement {
    pub label: String,
    /// Generator indices `k₁,…,k_b`.
    pub sequence: Vec<usize>,
    pub bg: QBGElement,
    pub reduced: QReducedElement,
    /// Index of the bracket of the first `b − 1` generators.
    pub parent: Option<usize>,
}

impl FamilyElement {
    pub fn weight(&self) -> usize {
        self.bg.weight()
    }

    pub fn block_degree(&self) -> usize {
        self.sequence.len()
    }
}

/// Every left-nested bracket of generators with weight at most
/// `max_weight` and `1 ≤ b ≤ max_block_degree` generators, ordered by
/// block degree, then weight, then generator sequence.
#[derive(Clone, Debug)]
pub struct Family {
    pub elements: Vec<FamilyElement>,
}

fn label(sequence: &[usize]) -> String {
    let mut s = format!("p{}", 2 * sequence[0] + 1);
    for k in &sequence[1..] {
        s = format!("[{s},p{}]", 2 * k + 1);
    }
    s
}

impl Family {
    pub fn build(engine: &Engine, bounds: Bounds) -> Result<Self> {
        let mut elements: Vec<FamilyElement> = Vec::new();
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut gens: BTreeMap<usize, QBGElement> = BTreeMap::new();
        for b in 1..=bounds.max_block_degree {
            for weight in 3 * b..=bounds.max_weight {
                for sequence in generator_sequences(weight, b) {
                    let last = *sequence.last().expect("nonempty");
                    if let std::collections::btree_map::Entry::Vacant(e) = gens.entry(last) {
                        e.insert(engine.generator(last)?);
                    }
                    let g = &gens[&last];
                    let (bg, parent) = if b == 1 {
                        (g.clone(), None)
                    } else {
                        let p = index[&sequence[..b - 1]];
                        (bracket(&elements[p].bg, g)?, Some(p))
                    };
                    let reduced = reduce(&bg)?;
                    index.insert(sequence.clone(), elements.len());
                    elements.push(FamilyElement {
                        label: label(&sequence),
                        sequence,
                        bg,
                        reduced,
                        parent,
                    });
                }
            }
        }
        Ok(Family { elements })
    }

    pub fn iter(&self) -> impl Iterator<Item = &FamilyElement> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements with exactly this weight and block degree.
    pub fn cell(&self, weight: usize, block_degree: usize) -> impl Iterator<Item = &FamilyElement> {
        self.elements
            .iter()
            .filter(move |e| e.weight() == weight && e.block_degree() == block_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_family_shape() {
        let f = Family::build(&Engine::default(), Bounds::default()).unwrap();
        let count = |b| f.iter().filter(|e| e.block_degree() == b).count();
        // k = 1..6; ordered pairs of weight 6..12; ordered triples of weight 9..13.
        assert_eq!(count(1), 6);
        assert_eq!(count(2), 1 + 2 + 3 + 4);
        assert_eq!(count(3), 1 + 3 + 6);
        assert_eq!(f.elements[0].label, "p3");
        let e = f.iter().find(|e| e.sequence == [1, 2, 1]).unwrap();
        assert_eq!(e.label, "[[p3,p5],p3]");
        assert_eq!(f.elements[e.parent.unwrap()].sequence, [1, 2]);
        // [p3, p3] is enumerated and vanishes.
        assert!(f.iter().find(|e| e.sequence == [1, 1]).unwrap().bg.is_zero());
    }

    #[test]
    fn minimal_bounds_give_p3_alone() {
        let f = Family::build(&Engine::default(), Bounds::new(3, 3).unwrap()).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.elements[0].label, "p3");
    }
}
