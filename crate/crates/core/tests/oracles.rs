//! Independent brute-force oracles for the enumeration machinery. Everything
//! here re-derives expected sets from first principles (filtering raw
//! permutations, taking powersets) without reusing the library's enumeration
//! internals.

use std::collections::BTreeSet;

use itertools::Itertools;
use num::BigInt;

use mixshuffle_core::monomial::{Alphabet, Monomial};
use mixshuffle_core::ring::{Coeff, RingDescriptor, Weight};
use mixshuffle_core::set_shuffle::{mixable_shuffle_set, SetVector};
use mixshuffle_core::shuffle::{count_mixable_pair, count_mixable_triple};
use mixshuffle_core::tensor::{mixable_product_plus, PlusElement, PlusWord};
use mixshuffle_core::{
    count_mixable_pair_by_merges, enumerate_cartier_triples, enumerate_mixable_pair,
    enumerate_mixable_triple, enumerate_pair_shuffles, CartierTriple,
};

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

/// Position of each value in the one-line form, 1-based.
fn positions(images: &[usize]) -> Vec<usize> {
    let mut pos = vec![0usize; images.len() + 1];
    for (i, &v) in images.iter().enumerate() {
        pos[v] = i + 1;
    }
    pos
}

fn blocks_ascending(images: &[usize], lo: usize, hi: usize) -> bool {
    let pos = positions(images);
    (lo..hi).all(|v| pos[v] < pos[v + 1])
}

fn is_pair_shuffle(images: &[usize], m: usize, n: usize) -> bool {
    blocks_ascending(images, 1, m) && blocks_ascending(images, m + 1, m + n)
}

fn is_triple_shuffle(images: &[usize], m: usize, n: usize, l: usize) -> bool {
    blocks_ascending(images, 1, m)
        && blocks_ascending(images, m + 1, m + n)
        && blocks_ascending(images, m + n + 1, m + n + l)
}

#[test]
fn pair_shuffles_match_raw_permutation_filter() {
    for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let brute: BTreeSet<Vec<usize>> = all_perms(m + n)
            .into_iter()
            .filter(|p| is_pair_shuffle(p, m, n))
            .collect();
        let enumerated: BTreeSet<Vec<usize>> = enumerate_pair_shuffles(m, n)
            .iter()
            .map(|s| s.perm().images().to_vec())
            .collect();
        assert_eq!(brute, enumerated, "({m},{n})");
    }
    // Filtering all 120 permutations of five symbols leaves exactly ten.
    let five: Vec<_> = all_perms(5)
        .into_iter()
        .filter(|p| is_pair_shuffle(p, 3, 2))
        .collect();
    assert_eq!(five.len(), 10);
    assert_eq!(enumerate_pair_shuffles(3, 2).len(), 10);
}

fn brute_admissible(images: &[usize], m: usize) -> Vec<usize> {
    (1..images.len())
        .filter(|&k| images[k - 1] <= m && images[k] > m)
        .collect()
}

#[test]
fn mixable_pair_enumeration_matches_brute_force() {
    for m in 0..=4usize {
        for n in 0..=4usize {
            let mut brute = 0usize;
            let mut by_merges = vec![0usize; n + 1];
            for p in all_perms(m + n) {
                if !is_pair_shuffle(&p, m, n) {
                    continue;
                }
                let adm = brute_admissible(&p, m);
                brute += 1 << adm.len();
                for mask in 0..1usize << adm.len() {
                    by_merges[mask.count_ones() as usize] += 1;
                }
            }
            if m + n == 0 {
                brute = 1;
                by_merges[0] = 1;
            }
            assert_eq!(enumerate_mixable_pair(m, n).len(), brute, "({m},{n})");
            assert_eq!(count_mixable_pair(m, n), BigInt::from(brute));
            for (i, &count) in by_merges.iter().enumerate() {
                assert_eq!(
                    count_mixable_pair_by_merges(m, n, i),
                    BigInt::from(count),
                    "({m},{n}) merges {i}"
                );
            }
        }
    }
}

fn block_of(v: usize, m: usize, n: usize) -> usize {
    if v <= m {
        0
    } else if v <= m + n {
        1
    } else {
        2
    }
}

/// Candidate merge windows as (start, width) pairs.
fn brute_triple_candidates(images: &[usize], m: usize, n: usize) -> Vec<(usize, usize)> {
    let size = images.len();
    let mut out = Vec::new();
    for k in 1..size {
        let (a, b) = (block_of(images[k - 1], m, n), block_of(images[k], m, n));
        if a < b {
            out.push((k, 2));
        }
    }
    for k in 1..size.saturating_sub(1) {
        let (a, b, c) = (
            block_of(images[k - 1], m, n),
            block_of(images[k], m, n),
            block_of(images[k + 1], m, n),
        );
        if (a, b, c) == (0, 1, 2) {
            out.push((k, 3));
        }
    }
    out
}

fn windows_disjoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 + a.1 <= b.0 || b.0 + b.1 <= a.0
}

#[test]
fn mixable_triple_enumeration_matches_brute_force() {
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    for m in 0..=2 {
        for n in 0..=2 {
            for l in 0..=2 {
                cells.push((m, n, l));
            }
        }
    }
    cells.extend([(1, 1, 1), (3, 1, 1), (1, 3, 1), (1, 1, 3), (2, 2, 1)]);
    for (m, n, l) in cells {
        let mut brute = 0usize;
        for p in all_perms(m + n + l) {
            if !is_triple_shuffle(&p, m, n, l) {
                continue;
            }
            let candidates = brute_triple_candidates(&p, m, n);
            for mask in 0..1usize << candidates.len() {
                let chosen: Vec<(usize, usize)> = candidates
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &w)| w)
                    .collect();
                let ok = chosen
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| windows_disjoint(a, b)));
                if ok {
                    brute += 1;
                }
            }
        }
        if m + n + l == 0 {
            brute = 1;
        }
        assert_eq!(
            enumerate_mixable_triple(m, n, l).len(),
            brute,
            "cell ({m},{n},{l})"
        );
        assert_eq!(count_mixable_triple(m, n, l), BigInt::from(brute));
    }
    assert_eq!(count_mixable_triple(1, 1, 1), BigInt::from(13));
}

/// Support of a product of distinct-singleton words corresponds exactly to
/// the set-vector shuffle set, with all coefficients one at weight one.
#[test]
fn tensor_support_matches_set_vector_oracle() {
    let ring = RingDescriptor::Int;
    for m in 1..=4usize {
        for n in 1..=4usize {
            let names: Vec<String> = (0..m + n).map(|i| format!("g{i:02}")).collect();
            let alphabet = Alphabet::new(names.clone()).unwrap();
            let word_of = |range: std::ops::Range<usize>| {
                PlusWord::new(
                    range
                        .map(|i| Monomial::generator(alphabet.index_of(&names[i]).unwrap()))
                        .collect(),
                )
            };
            let x = PlusElement::from_word(ring.clone(), alphabet.clone(), word_of(0..m));
            let y = PlusElement::from_word(ring.clone(), alphabet.clone(), word_of(m..m + n));
            let product = mixable_product_plus(&x, &y, &Weight::of_i64(&ring, 1)).unwrap();

            let to_set_vector = |word: &PlusWord| {
                SetVector::new(
                    word.factors()
                        .iter()
                        .map(|mono| {
                            mono.exponents()
                                .iter()
                                .map(|&(g, e)| {
                                    assert_eq!(e, 1, "distinct slots never square");
                                    alphabet.name(g).to_string()
                                })
                                .collect()
                        })
                        .collect(),
                )
                .unwrap()
            };
            let support: BTreeSet<SetVector> =
                product.terms().map(|(w, _)| to_set_vector(w)).collect();
            assert!(product
                .terms()
                .all(|(_, c)| *c == Coeff::one(&ring)));
            assert_eq!(support.len(), product.term_count());

            let f = SetVector::singletons(names[0..m].iter().cloned()).unwrap();
            let g = SetVector::singletons(names[m..m + n].iter().cloned()).unwrap();
            assert_eq!(support, mixable_shuffle_set(&f, &g));
        }
    }
}

/// The explicit correspondence from a mixable shuffle to an index triple:
/// collapse merge windows and record which output slots hold first-block and
/// second-block entries.
fn triple_of_mixable(ms: &mixshuffle_core::MixablePairShuffle) -> CartierTriple {
    let m = ms.shuffle.m();
    let size = ms.shuffle.size();
    let mut p = Vec::new();
    let mut q = Vec::new();
    let mut slot = 0usize;
    let mut k = 1usize;
    while k <= size {
        slot += 1;
        let first = ms.shuffle.perm().image(k);
        if ms.merges.contains(&(k, k + 1)) {
            p.push(slot);
            q.push(slot);
            debug_assert!(first <= m && ms.shuffle.perm().image(k + 1) > m);
            k += 2;
        } else {
            if first <= m {
                p.push(slot);
            } else {
                q.push(slot);
            }
            k += 1;
        }
    }
    CartierTriple { k: slot, p, q }
}

#[test]
fn cartier_triples_biject_with_mixable_shuffles() {
    for m in 1..=4usize {
        for n in 1..=4usize {
            let mixables = enumerate_mixable_pair(m, n);
            let triples: BTreeSet<CartierTriple> =
                enumerate_cartier_triples(m, n).into_iter().collect();
            let images: BTreeSet<CartierTriple> =
                mixables.iter().map(triple_of_mixable).collect();
            assert_eq!(images.len(), mixables.len(), "correspondence is injective");
            assert_eq!(images, triples, "correspondence is onto");
        }
    }
}
