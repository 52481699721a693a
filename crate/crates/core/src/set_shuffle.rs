//! Mixable shuffles of vectors of finite atom sets.
//!
//! This is the "generic" model of the shuffle products: slots hold finite
//! sets of atoms, merging is set union, and distinct atoms keep every merge
//! history distinguishable. It exists as an independent oracle for the tensor
//! product laws and is not used on the product code path.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::shuffle::{
    enumerate_mixable_pair, enumerate_mixable_triple, MergeEntry, MixablePairShuffle,
    MixableTripleShuffle,
};

/// A nonempty vector of finite nonempty atom sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SetVector {
    entries: Vec<BTreeSet<String>>,
}

impl SetVector {
    pub fn new(entries: Vec<BTreeSet<String>>) -> Result<SetVector, Error> {
        if entries.is_empty() {
            return Err(Error::Invalid("set vector must be nonempty".into()));
        }
        if entries.iter().any(BTreeSet::is_empty) {
            return Err(Error::Invalid("set vector entries must be nonempty".into()));
        }
        Ok(SetVector { entries })
    }

    /// A vector of singleton entries.
    pub fn singletons<I, S>(atoms: I) -> Result<SetVector, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        SetVector::new(
            atoms
                .into_iter()
                .map(|a| BTreeSet::from([a.into()]))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BTreeSet<String>] {
        &self.entries
    }

    fn atoms(&self) -> BTreeSet<&String> {
        self.entries.iter().flatten().collect()
    }
}

fn assert_disjoint(vectors: &[&SetVector]) {
    let mut seen: BTreeSet<&String> = BTreeSet::new();
    for v in vectors {
        for atom in v.atoms() {
            assert!(
                seen.insert(atom),
                "operand vectors must have pairwise disjoint atoms (repeated {atom:?})"
            );
        }
    }
}

/// Applies one mixable shuffle to a pair of vectors: slots are drawn in
/// shuffled order and merged positions take the union of their two sets.
pub fn apply_mixable(
    f: &SetVector,
    g: &SetVector,
    ms: &MixablePairShuffle,
) -> Result<SetVector, Error> {
    if f.len() != ms.shuffle.m() || g.len() != ms.shuffle.n() {
        return Err(Error::DimensionMismatch {
            expected_left: ms.shuffle.m(),
            expected_right: ms.shuffle.n(),
            got_left: f.len(),
            got_right: g.len(),
        });
    }
    let concat: Vec<&BTreeSet<String>> = f.entries.iter().chain(g.entries.iter()).collect();
    let size = ms.shuffle.size();
    let mut entries = Vec::with_capacity(ms.output_len());
    let mut k = 1;
    while k <= size {
        let src = concat[ms.shuffle.perm().image(k) - 1];
        if ms.merges.binary_search(&(k, k + 1)).is_ok() {
            let other = concat[ms.shuffle.perm().image(k + 1) - 1];
            entries.push(src.union(other).cloned().collect());
            k += 2;
        } else {
            entries.push(src.clone());
            k += 1;
        }
    }
    SetVector::new(entries)
}

/// Applies one mixable triple shuffle; merge windows union two or three sets.
pub fn apply_mixable_triple(
    f: &SetVector,
    g: &SetVector,
    h: &SetVector,
    ms: &MixableTripleShuffle,
) -> Result<SetVector, Error> {
    if f.len() != ms.shuffle.m() || g.len() != ms.shuffle.n() || h.len() != ms.shuffle.l() {
        return Err(Error::Invalid(format!(
            "vector lengths ({}, {}, {}) do not match shuffle type ({}, {}, {})",
            f.len(),
            g.len(),
            h.len(),
            ms.shuffle.m(),
            ms.shuffle.n(),
            ms.shuffle.l()
        )));
    }
    let concat: Vec<&BTreeSet<String>> = f
        .entries
        .iter()
        .chain(g.entries.iter())
        .chain(h.entries.iter())
        .collect();
    let size = ms.shuffle.size();
    let mut entries = Vec::with_capacity(ms.output_len());
    let mut k = 1;
    while k <= size {
        let merge = ms.merges.iter().find(|e| e.start() == k);
        let width = merge.map_or(1, MergeEntry::width);
        let mut set = concat[ms.shuffle.perm().image(k) - 1].clone();
        for offset in 1..width {
            set.extend(concat[ms.shuffle.perm().image(k + offset) - 1].iter().cloned());
        }
        entries.push(set);
        k += width;
    }
    SetVector::new(entries)
}

/// The set of all mixable shuffles of two atom-disjoint vectors.
pub fn mixable_shuffle_set(f: &SetVector, g: &SetVector) -> BTreeSet<SetVector> {
    assert_disjoint(&[f, g]);
    enumerate_mixable_pair(f.len(), g.len())
        .iter()
        .map(|ms| apply_mixable(f, g, ms).expect("lengths match"))
        .collect()
}

/// Triple shuffle set computed directly from the triple enumeration.
pub fn mixable_shuffle_set_direct(
    f: &SetVector,
    g: &SetVector,
    h: &SetVector,
) -> BTreeSet<SetVector> {
    assert_disjoint(&[f, g, h]);
    enumerate_mixable_triple(f.len(), g.len(), h.len())
        .iter()
        .map(|ms| apply_mixable_triple(f, g, h, ms).expect("lengths match"))
        .collect()
}

/// Triple shuffle set computed by shuffling the first two vectors and then
/// each intermediate result with the third.
pub fn mixable_shuffle_set_nested_left(
    f: &SetVector,
    g: &SetVector,
    h: &SetVector,
) -> BTreeSet<SetVector> {
    assert_disjoint(&[f, g, h]);
    let mut out = BTreeSet::new();
    for u in mixable_shuffle_set(f, g) {
        out.extend(mixable_shuffle_set(&u, h));
    }
    out
}

/// Triple shuffle set computed by nesting on the right.
pub fn mixable_shuffle_set_nested_right(
    f: &SetVector,
    g: &SetVector,
    h: &SetVector,
) -> BTreeSet<SetVector> {
    assert_disjoint(&[f, g, h]);
    let mut out = BTreeSet::new();
    for u in mixable_shuffle_set(g, h) {
        out.extend(mixable_shuffle_set(f, &u));
    }
    out
}

/// The triple shuffle set, computed all three ways; panics if the three
/// computations disagree.
pub fn mixable_shuffle_set_triple(
    f: &SetVector,
    g: &SetVector,
    h: &SetVector,
) -> BTreeSet<SetVector> {
    let direct = mixable_shuffle_set_direct(f, g, h);
    let left = mixable_shuffle_set_nested_left(f, g, h);
    let right = mixable_shuffle_set_nested_right(f, g, h);
    assert_eq!(direct, left, "direct and left-nested triple sets differ");
    assert_eq!(direct, right, "direct and right-nested triple sets differ");
    direct
}
