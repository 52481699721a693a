//! Tensor words over the monomial basis and the weighted mixable shuffle
//! product that turns their span into a commutative algebra.
//!
//! A [`PlusWord`] of length `k` is a pure tensor with `k` monomial slots;
//! the empty word is the scalar `1` of the coefficient ring. The product of
//! two words sums over all mixable shuffles of their slots, scaling each
//! summand by `lambda^(number of merges)` and multiplying merged slots.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::monomial::{Alphabet, Monomial};
use crate::ring::{Coeff, RingDescriptor, Weight};
use crate::shuffle::{pair_plans, MixablePairShuffle, PlanSlot};

/// Canonical term order: longer words first, ties broken slotwise.
pub(crate) fn cmp_word_slices(a: &[Monomial], b: &[Monomial]) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| a.iter().cmp(b.iter()))
}

/// A possibly empty sequence of monomial slots; length 0 is the scalar slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlusWord {
    factors: Vec<Monomial>,
}

impl PlusWord {
    pub fn new(factors: Vec<Monomial>) -> PlusWord {
        PlusWord { factors }
    }

    pub fn empty() -> PlusWord {
        PlusWord {
            factors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[Monomial] {
        &self.factors
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.factors.is_empty() {
            return "()".to_string();
        }
        self.factors
            .iter()
            .map(|m| m.render(alphabet))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl PartialOrd for PlusWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlusWord {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_word_slices(&self.factors, &other.factors)
    }
}

pub(crate) fn add_term<W: Ord>(terms: &mut BTreeMap<W, Coeff>, word: W, coeff: Coeff) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(word) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().add(&coeff);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Renders a linear combination in canonical order with signs folded into
/// the separators.
pub(crate) fn render_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (String, &'a Coeff)>,
{
    let mut out = String::new();
    let mut first = true;
    for (word, coeff) in terms {
        let (negative, magnitude) = match coeff {
            Coeff::Int(v) => {
                if v < &num::BigInt::from(0) {
                    (true, Coeff::Int(-v))
                } else {
                    (false, coeff.clone())
                }
            }
            Coeff::Rat(v) => {
                if v < &num::BigRational::from_integer(0.into()) {
                    (true, Coeff::Rat(-v))
                } else {
                    (false, coeff.clone())
                }
            }
            Coeff::Mod { .. } => (false, coeff.clone()),
        };
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if magnitude.is_one() {
            out.push_str(&word);
        } else {
            out.push_str(&format!("{magnitude}*{word}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// An element of the mixable shuffle algebra: a finite linear combination of
/// tensor words with coefficients in one ring, no zero terms stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlusElement {
    ring: RingDescriptor,
    alphabet: Alphabet,
    terms: BTreeMap<PlusWord, Coeff>,
}

impl PlusElement {
    pub fn zero(ring: RingDescriptor, alphabet: Alphabet) -> PlusElement {
        PlusElement {
            ring,
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// The scalar `c`, i.e. `c` times the empty word.
    pub fn scalar(ring: RingDescriptor, alphabet: Alphabet, c: Coeff) -> PlusElement {
        let mut out = PlusElement::zero(ring, alphabet);
        add_term(&mut out.terms, PlusWord::empty(), c);
        out
    }

    /// The multiplicative identity: the empty word with coefficient one.
    pub fn one(ring: RingDescriptor, alphabet: Alphabet) -> PlusElement {
        let c = Coeff::one(&ring);
        PlusElement::scalar(ring, alphabet, c)
    }

    pub fn from_word(ring: RingDescriptor, alphabet: Alphabet, word: PlusWord) -> PlusElement {
        let c = Coeff::one(&ring);
        let mut out = PlusElement::zero(ring, alphabet);
        add_term(&mut out.terms, word, c);
        out
    }

    pub fn from_terms(
        ring: RingDescriptor,
        alphabet: Alphabet,
        terms: impl IntoIterator<Item = (PlusWord, Coeff)>,
    ) -> Result<PlusElement, Error> {
        let mut out = PlusElement::zero(ring, alphabet);
        for (word, coeff) in terms {
            if coeff.ring() != out.ring {
                return Err(Error::RingMismatch {
                    left: out.ring.clone(),
                    right: coeff.ring(),
                });
            }
            if !word.factors().iter().all(|m| m.fits(&out.alphabet)) {
                return Err(Error::AlphabetMismatch);
            }
            add_term(&mut out.terms, word, coeff);
        }
        Ok(out)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlusWord, &Coeff)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, word: &PlusWord) -> Option<&Coeff> {
        self.terms.get(word)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn compatible(&self, other: &PlusElement) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.clone(),
                right: other.ring.clone(),
            });
        }
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &PlusElement) -> Result<PlusElement, Error> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> PlusElement {
        let mut out = PlusElement::zero(self.ring.clone(), self.alphabet.clone());
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c.neg());
        }
        out
    }

    pub fn sub(&self, other: &PlusElement) -> Result<PlusElement, Error> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Coeff) -> PlusElement {
        let mut out = PlusElement::zero(self.ring.clone(), self.alphabet.clone());
        for (w, k) in &self.terms {
            add_term(&mut out.terms, w.clone(), k.mul(c));
        }
        out
    }
}

impl fmt::Display for PlusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            render_terms(self.terms.iter().map(|(w, c)| (w.render(&self.alphabet), c)))
        )
    }
}

/// Applies one mixable shuffle to a pair of pure tensors; merged slots hold
/// the product of their two monomials.
pub fn apply_mixable_to_tensor(
    x: &PlusWord,
    y: &PlusWord,
    ms: &MixablePairShuffle,
) -> Result<PlusWord, Error> {
    if x.len() != ms.shuffle.m() || y.len() != ms.shuffle.n() {
        return Err(Error::DimensionMismatch {
            expected_left: ms.shuffle.m(),
            expected_right: ms.shuffle.n(),
            got_left: x.len(),
            got_right: y.len(),
        });
    }
    let concat: Vec<&Monomial> = x.factors.iter().chain(y.factors.iter()).collect();
    let size = ms.shuffle.size();
    let mut factors = Vec::with_capacity(ms.output_len());
    let mut k = 1;
    while k <= size {
        let first = concat[ms.shuffle.perm().image(k) - 1];
        if ms.merges.binary_search(&(k, k + 1)).is_ok() {
            let second = concat[ms.shuffle.perm().image(k + 1) - 1];
            factors.push(first.mul(second));
            k += 2;
        } else {
            factors.push(first.clone());
            k += 1;
        }
    }
    Ok(PlusWord::new(factors))
}

/// The mixable shuffle product of weight `w`, extended bilinearly. Empty
/// words act as scalars.
pub fn mixable_product_plus(
    x: &PlusElement,
    y: &PlusElement,
    w: &Weight,
) -> Result<PlusElement, Error> {
    x.compatible(y)?;
    if w.ring() != x.ring {
        return Err(Error::RingMismatch {
            left: x.ring.clone(),
            right: w.ring(),
        });
    }
    let mut out = PlusElement::zero(x.ring.clone(), x.alphabet.clone());
    let mut lambda_pows = vec![Coeff::one(&x.ring)];
    for (wx, cx) in &x.terms {
        for (wy, cy) in &y.terms {
            let c = cx.mul(cy);
            product_of_words(wx, wy, &c, w, &mut lambda_pows, &mut out.terms);
        }
    }
    Ok(out)
}

fn product_of_words(
    wx: &PlusWord,
    wy: &PlusWord,
    c: &Coeff,
    w: &Weight,
    lambda_pows: &mut Vec<Coeff>,
    out: &mut BTreeMap<PlusWord, Coeff>,
) {
    let (m, n) = (wx.len(), wy.len());
    if m == 0 {
        add_term(out, wy.clone(), c.clone());
        return;
    }
    if n == 0 {
        add_term(out, wx.clone(), c.clone());
        return;
    }
    while lambda_pows.len() <= m.min(n) {
        let next = lambda_pows.last().expect("nonempty").mul(&w.lambda);
        lambda_pows.push(next);
    }
    let concat: Vec<&Monomial> = wx.factors.iter().chain(wy.factors.iter()).collect();
    for plan in pair_plans(m, n).iter() {
        let scale = &lambda_pows[plan.lambda_exp];
        if scale.is_zero() {
            continue;
        }
        let coeff = c.mul(scale);
        let factors = plan
            .slots
            .iter()
            .map(|slot| match *slot {
                PlanSlot::One(i) => concat[i].clone(),
                PlanSlot::Two(i, j) => concat[i].mul(concat[j]),
            })
            .collect();
        add_term(out, PlusWord::new(factors), coeff);
    }
}

/// A polynomial in the weight with coefficients in the base ring; used to run
/// products with the weight kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaPoly {
    ring: RingDescriptor,
    /// `coeffs[k]` multiplies the k-th power of the weight; no trailing zeros.
    coeffs: Vec<Coeff>,
}

impl LambdaPoly {
    pub fn zero(ring: RingDescriptor) -> LambdaPoly {
        LambdaPoly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Coeff) -> LambdaPoly {
        let ring = c.ring();
        let mut out = LambdaPoly::zero(ring);
        if !c.is_zero() {
            out.coeffs.push(c);
        }
        out
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Coeff::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &LambdaPoly) -> LambdaPoly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len().max(other.coeffs.len()));
        for i in 0..self.coeffs.len().max(other.coeffs.len()) {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut out = LambdaPoly {
            ring: self.ring.clone(),
            coeffs,
        };
        out.trim();
        out
    }

    pub fn mul(&self, other: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || other.is_zero() {
            return LambdaPoly::zero(self.ring.clone());
        }
        let mut coeffs =
            vec![Coeff::zero(&self.ring); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        let mut out = LambdaPoly {
            ring: self.ring.clone(),
            coeffs,
        };
        out.trim();
        out
    }

    /// Multiplies by the k-th power of the weight.
    pub fn shift(&self, k: usize) -> LambdaPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Coeff::zero(&self.ring); k];
        coeffs.extend(self.coeffs.iter().cloned());
        LambdaPoly {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// If the polynomial is a single power of the weight, returns its
    /// exponent and coefficient.
    pub fn single_power(&self) -> Option<(usize, &Coeff)> {
        let mut found = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((k, c));
            }
        }
        found
    }

    /// Substitutes a concrete weight.
    pub fn eval(&self, w: &Weight) -> Coeff {
        let mut acc = Coeff::zero(&self.ring);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&w.lambda).add(c);
        }
        acc
    }
}

/// A linear combination of tensor words with symbolic-weight coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPlusElement {
    ring: RingDescriptor,
    alphabet: Alphabet,
    terms: BTreeMap<PlusWord, LambdaPoly>,
}

impl SymbolicPlusElement {
    pub fn lift(x: &PlusElement) -> SymbolicPlusElement {
        SymbolicPlusElement {
            ring: x.ring.clone(),
            alphabet: x.alphabet.clone(),
            terms: x
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), LambdaPoly::constant(c.clone())))
                .collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlusWord, &LambdaPoly)> {
        self.terms.iter()
    }

    pub fn eval(&self, w: &Weight) -> PlusElement {
        let mut out = PlusElement::zero(self.ring.clone(), self.alphabet.clone());
        for (word, poly) in &self.terms {
            add_term(&mut out.terms, word.clone(), poly.eval(w));
        }
        out
    }

    fn add_symbolic(terms: &mut BTreeMap<PlusWord, LambdaPoly>, word: PlusWord, poly: LambdaPoly) {
        if poly.is_zero() {
            return;
        }
        match terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(poly);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&poly);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

/// The mixable shuffle product with the weight kept symbolic: each merge
/// raises the weight exponent by one.
pub fn mixable_product_plus_symbolic(
    x: &SymbolicPlusElement,
    y: &SymbolicPlusElement,
) -> Result<SymbolicPlusElement, Error> {
    if x.ring != y.ring {
        return Err(Error::RingMismatch {
            left: x.ring.clone(),
            right: y.ring.clone(),
        });
    }
    if x.alphabet != y.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    let mut out = SymbolicPlusElement {
        ring: x.ring.clone(),
        alphabet: x.alphabet.clone(),
        terms: BTreeMap::new(),
    };
    for (wx, px) in &x.terms {
        for (wy, py) in &y.terms {
            let base = px.mul(py);
            let (m, n) = (wx.len(), wy.len());
            if m == 0 {
                SymbolicPlusElement::add_symbolic(&mut out.terms, wy.clone(), base);
                continue;
            }
            if n == 0 {
                SymbolicPlusElement::add_symbolic(&mut out.terms, wx.clone(), base);
                continue;
            }
            let concat: Vec<&Monomial> = wx.factors.iter().chain(wy.factors.iter()).collect();
            for plan in pair_plans(m, n).iter() {
                let factors = plan
                    .slots
                    .iter()
                    .map(|slot| match *slot {
                        PlanSlot::One(i) => concat[i].clone(),
                        PlanSlot::Two(i, j) => concat[i].mul(concat[j]),
                    })
                    .collect();
                SymbolicPlusElement::add_symbolic(
                    &mut out.terms,
                    PlusWord::new(factors),
                    base.shift(plan.lambda_exp),
                );
            }
        }
    }
    Ok(out)
}
