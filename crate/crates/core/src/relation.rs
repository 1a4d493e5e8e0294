//! Binary relations and partitions over dense element indices.

use std::collections::HashMap;
use std::hash::Hash;

/// A binary relation on `0..n`, stored as an `n × n` boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn from_fn(n: usize, mut holds: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                bits.push(holds(x, y));
            }
        }
        Relation { n, bits }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.n + y]
    }

    /// All related pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |x| (0..self.n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.holds(x, y))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.holds(x, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(x, y)| x == y || !self.holds(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs()
            .all(|(x, y)| (0..self.n).all(|z| !self.holds(y, z) || self.holds(x, z)))
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }
}

/// A partition of `0..n` into classes.
///
/// Classes are numbered in order of their smallest member and each class
/// lists its members ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Groups elements with equal keys.
    pub fn from_keys<K: Eq + Hash>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let mut class_of = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, key) in keys.into_iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(key).or_insert(next);
            if id == classes.len() {
                classes.push(Vec::new());
            }
            classes[id].push(x);
            class_of.push(id);
        }
        Partition { class_of, classes }
    }

    /// Builds the partition from a restricted-growth labelling.
    pub fn from_labels(labels: &[usize]) -> Self {
        Partition::from_keys(labels.iter().copied())
    }

    pub fn singletons(n: usize) -> Self {
        Partition::from_keys(0..n)
    }

    pub fn size(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class(&self, id: usize) -> &[usize] {
        &self.classes[id]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// True when every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes
            .iter()
            .all(|class| class.iter().all(|&x| coarser.same_class(class[0], x)))
    }

    /// Class sizes, sorted ascending.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Every set partition of `0..n`, as restricted-growth strings in
/// lexicographic order.
pub fn set_partitions(n: usize) -> Vec<Partition> {
    fn extend(labels: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Partition>) {
        if labels.len() == n {
            out.push(Partition::from_labels(labels));
            return;
        }
        let bound = if labels.is_empty() { 0 } else { max + 1 };
        for label in 0..=bound {
            labels.push(label);
            extend(labels, n, max.max(label), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::from_labels(&[]));
    } else {
        extend(&mut Vec::with_capacity(n), n, 0, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn classes_numbered_by_smallest_member() {
        let p = Partition::from_keys(["b", "a", "b", "c", "a"]);
        assert_eq!(p.classes(), &[vec![0, 2], vec![1, 4], vec![3]]);
        assert_eq!(p.class_of(4), 1);
        assert_eq!(p.size_profile(), vec![1, 2, 2]);
    }

    #[test]
    fn refinement() {
        let fine = Partition::from_labels(&[0, 1, 2, 2]);
        let coarse = Partition::from_labels(&[0, 0, 1, 1]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(Partition::singletons(4).refines(&fine));
    }

    #[test]
    fn divisibility_is_a_partial_order_but_not_symmetric() {
        let r = Relation::from_fn(6, |x, y| (y + 1) % (x + 1) == 0);
        assert!(r.is_partial_order());
        let sym = Relation::from_fn(3, |x, y| x != y);
        assert!(!sym.is_reflexive());
        assert!(!sym.is_antisymmetric());
    }
}
