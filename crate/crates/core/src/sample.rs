//! Deterministic random generation of elements for the randomized identity
//! suites. All functions take the RNG by argument so callers control seeding.

use rand::Rng;

use crate::baxter::{BaxElement, BaxWord};
use crate::cartier::{CartierElement, CartierSymbol};
use crate::hurwitz::HurwitzPolynomial;
use crate::monomial::{Alphabet, Monomial};
use crate::ring::{Coeff, RingDescriptor};
use crate::tensor::{PlusElement, PlusWord};

/// Shape bounds for sampled elements.
#[derive(Debug, Clone)]
pub struct SampleSpec {
    /// Largest number of tensor slots (head included for headed words).
    pub max_word_len: usize,
    /// Largest number of terms per element.
    pub max_terms: usize,
    /// Coefficients are drawn from `-coeff_bound..=coeff_bound`.
    pub coeff_bound: i64,
    /// Largest exponent per generator inside one monomial.
    pub max_exp: u32,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            max_word_len: 3,
            max_terms: 2,
            coeff_bound: 3,
            max_exp: 2,
        }
    }
}

/// A coefficient drawn from the small integer range, embedded in the ring.
pub fn random_coeff<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingDescriptor,
    bound: i64,
) -> Coeff {
    Coeff::from_i64(ring, rng.gen_range(-bound..=bound))
}

fn random_nonzero_coeff<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingDescriptor,
    bound: i64,
) -> Coeff {
    loop {
        let c = random_coeff(rng, ring, bound);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_monomial<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_exp: u32,
) -> Monomial {
    let pairs = (0..alphabet.len())
        .filter_map(|g| {
            let e = rng.gen_range(0..=max_exp);
            (e > 0).then_some((g as u16, e))
        })
        .collect::<Vec<_>>();
    Monomial::from_pairs(pairs)
}

pub fn random_plus_element<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingDescriptor,
    alphabet: &Alphabet,
    spec: &SampleSpec,
) -> PlusElement {
    let terms = (0..rng.gen_range(1..=spec.max_terms)).map(|_| {
        let len = rng.gen_range(0..=spec.max_word_len);
        let word = PlusWord::new(
            (0..len)
                .map(|_| random_monomial(rng, alphabet, spec.max_exp))
                .collect(),
        );
        (word, random_nonzero_coeff(rng, ring, spec.coeff_bound))
    });
    PlusElement::from_terms(ring.clone(), alphabet.clone(), terms.collect::<Vec<_>>())
        .expect("sampled coefficients share the ring")
}

pub fn random_bax_element<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingDescriptor,
    alphabet: &Alphabet,
    spec: &SampleSpec,
) -> BaxElement {
    let terms = (0..rng.gen_range(1..=spec.max_terms)).map(|_| {
        let len = rng.gen_range(1..=spec.max_word_len.max(1));
        let word = BaxWord::new(
            (0..len)
                .map(|_| random_monomial(rng, alphabet, spec.max_exp))
                .collect(),
        )
        .expect("positive length");
        (word, random_nonzero_coeff(rng, ring, spec.coeff_bound))
    });
    BaxElement::from_terms(ring.clone(), alphabet.clone(), terms.collect::<Vec<_>>())
        .expect("sampled coefficients share the ring")
}

pub fn random_hurwitz<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingDescriptor,
    max_index: usize,
    coeff_bound: i64,
) -> HurwitzPolynomial {
    let coeffs = (0..=rng.gen_range(0..=max_index))
        .map(|_| random_coeff(rng, ring, coeff_bound))
        .collect();
    HurwitzPolynomial::from_coeffs(ring.clone(), coeffs).expect("sampled ring is uniform")
}

/// A random valid bracket symbol with bracket length at most `max_bracket`.
pub fn random_cartier_symbol<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_bracket: usize,
    max_exp: u32,
) -> CartierSymbol {
    assert!(!alphabet.is_empty(), "symbols need at least one generator");
    let nontrivial = |rng: &mut R| loop {
        let m = random_monomial(rng, alphabet, max_exp);
        if !m.is_one() {
            return m;
        }
    };
    let bracket_len = rng.gen_range(0..=max_bracket);
    if bracket_len == 0 {
        CartierSymbol::new(nontrivial(rng), Vec::new()).expect("nontrivial head")
    } else {
        let mut bracket: Vec<Monomial> = (0..bracket_len - 1)
            .map(|_| random_monomial(rng, alphabet, max_exp))
            .collect();
        bracket.push(nontrivial(rng));
        CartierSymbol::new(random_monomial(rng, alphabet, max_exp), bracket)
            .expect("nontrivial tail")
    }
}

pub fn random_cartier_element<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingDescriptor,
    alphabet: &Alphabet,
    spec: &SampleSpec,
) -> CartierElement {
    let terms = (0..rng.gen_range(1..=spec.max_terms)).map(|_| {
        (
            random_cartier_symbol(rng, alphabet, spec.max_word_len, spec.max_exp),
            random_nonzero_coeff(rng, ring, spec.coeff_bound),
        )
    });
    CartierElement::from_terms(ring.clone(), alphabet.clone(), terms.collect::<Vec<_>>())
        .expect("sampled coefficients share the ring")
}
