//! Integer partitions and the combinatorial statistics consumed by the
//! symmetric-function formulas.

use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty partition is a first-class value and indexes the degree-0 basis
/// element of every symmetric-function basis.
///
/// The `Ord` instance sorts by size first, then reverse-lexicographically
/// within a size, so iterating a `BTreeMap<Partition, _>` visits partitions in
/// the crate's canonical output order: `(3)`, `(2,1)`, `(1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Panics on a zero part.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, or the empty partition when `n = 0`.
    pub fn one_row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part value -> multiplicity, ascending by value.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut mult = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        mult
    }

    /// The centralizer order `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z_stat(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for _ in 0..mult {
                z *= BigInt::from(part);
            }
            for k in 2..=mult {
                z *= BigInt::from(k);
            }
        }
        z
    }

    /// The statistic `n(lambda) = sum_i (i-1) lambda_i`.
    pub fn n_stat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * u64::from(p))
            .sum()
    }

    /// Multiset union of parts, re-sorted weakly decreasing.
    pub fn concat_sort(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Multiplies every part by `b` (the index map of plethysm by `p_b`).
    pub fn scale_parts(&self, b: u32) -> Partition {
        assert!(b >= 1, "scale factor must be positive");
        Partition {
            parts: self.parts.iter().map(|&p| p * b).collect(),
        }
    }

    /// Removes one copy of `part`. Panics if absent.
    pub fn remove_one(&self, part: u32) -> Partition {
        let pos = self
            .parts
            .iter()
            .position(|&p| p == part)
            .expect("part not present in partition");
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Partition { parts }
    }

    /// Whether the parts of `self` can be grouped into blocks summing to the
    /// parts of `coarser` (i.e. `self` refines `coarser`).
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.size() != coarser.size() {
            return false;
        }
        fn place(parts: &[u32], bins: &mut Vec<u32>) -> bool {
            let Some((&first, rest)) = parts.split_first() else {
                return bins.iter().all(|&b| b == 0);
            };
            let mut tried = Vec::new();
            for i in 0..bins.len() {
                if bins[i] >= first && !tried.contains(&bins[i]) {
                    tried.push(bins[i]);
                    bins[i] -= first;
                    if place(rest, bins) {
                        return true;
                    }
                    bins[i] += first;
                }
            }
            false
        }
        let mut bins = coarser.parts.clone();
        place(&self.parts, &mut bins)
    }

    /// `(-1)^{|lambda| - l(lambda)}`, the sign of omega on `p_lambda`.
    pub fn omega_sign(&self) -> i32 {
        if (self.size() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `[2,1]`; the empty partition is `[]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order
/// (largest first part first). `partitions_of(0)` is the empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn gen(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            gen(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, n.max(1), &mut Vec::new(), &mut out);
    out
}
