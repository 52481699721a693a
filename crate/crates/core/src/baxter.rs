//! The free Baxter algebra over a polynomial coefficient algebra: words with
//! a distinguished head slot, the augmented shuffle product, the prefixing
//! operator, and the universal map into any other Baxter algebra.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::monomial::{Alphabet, Monomial, Polynomial};
use crate::ring::{Coeff, RingDescriptor, Weight};
use crate::shuffle::{pair_plans, PlanSlot};
use crate::tensor::{add_term, cmp_word_slices, render_terms};

/// A nonempty sequence of monomial slots; slot 0 is the coefficient-algebra
/// factor, the remaining slots form the tensor tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaxWord {
    factors: Vec<Monomial>,
}

impl BaxWord {
    pub fn new(factors: Vec<Monomial>) -> Result<BaxWord, Error> {
        if factors.is_empty() {
            return Err(Error::Invalid("word must have at least one slot".into()));
        }
        Ok(BaxWord { factors })
    }

    /// The word `1 ⊗ ... ⊗ 1` with `len` slots.
    pub fn ones(len: usize) -> Result<BaxWord, Error> {
        BaxWord::new(vec![Monomial::one(); len])
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn factors(&self) -> &[Monomial] {
        &self.factors
    }

    pub fn head(&self) -> &Monomial {
        &self.factors[0]
    }

    pub fn tail(&self) -> &[Monomial] {
        &self.factors[1..]
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.factors
            .iter()
            .map(|m| m.render(alphabet))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl PartialOrd for BaxWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BaxWord {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_word_slices(&self.factors, &other.factors)
    }
}

/// An element of the free Baxter algebra: a finite linear combination of
/// head-plus-tail words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaxElement {
    ring: RingDescriptor,
    alphabet: Alphabet,
    terms: BTreeMap<BaxWord, Coeff>,
}

impl BaxElement {
    pub fn zero(ring: RingDescriptor, alphabet: Alphabet) -> BaxElement {
        BaxElement {
            ring,
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity: the length-1 word holding the monomial 1.
    pub fn one(ring: RingDescriptor, alphabet: Alphabet) -> BaxElement {
        let c = Coeff::one(&ring);
        let mut out = BaxElement::zero(ring, alphabet);
        out.terms.insert(BaxWord::ones(1).expect("length 1"), c);
        out
    }

    pub fn from_word(ring: RingDescriptor, alphabet: Alphabet, word: BaxWord) -> BaxElement {
        let c = Coeff::one(&ring);
        let mut out = BaxElement::zero(ring, alphabet);
        out.terms.insert(word, c);
        out
    }

    pub fn from_terms(
        ring: RingDescriptor,
        alphabet: Alphabet,
        terms: impl IntoIterator<Item = (BaxWord, Coeff)>,
    ) -> Result<BaxElement, Error> {
        let mut out = BaxElement::zero(ring, alphabet);
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

    /// The basis element `1⊗...⊗1` with `len` slots over the empty alphabet.
    pub fn one_tensor(ring: RingDescriptor, len: usize) -> Result<BaxElement, Error> {
        let word = BaxWord::ones(len)?;
        Ok(BaxElement::from_word(ring, Alphabet::empty(), word))
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BaxWord, &Coeff)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, word: &BaxWord) -> Option<&Coeff> {
        self.terms.get(word)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn compatible(&self, other: &BaxElement) -> Result<(), Error> {
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

    pub fn add(&self, other: &BaxElement) -> Result<BaxElement, Error> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> BaxElement {
        let mut out = BaxElement::zero(self.ring.clone(), self.alphabet.clone());
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c.neg());
        }
        out
    }

    pub fn sub(&self, other: &BaxElement) -> Result<BaxElement, Error> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Coeff) -> BaxElement {
        let mut out = BaxElement::zero(self.ring.clone(), self.alphabet.clone());
        for (w, k) in &self.terms {
            add_term(&mut out.terms, w.clone(), k.mul(c));
        }
        out
    }
}

impl fmt::Display for BaxElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            render_terms(self.terms.iter().map(|(w, c)| (w.render(&self.alphabet), c)))
        )
    }
}

/// The augmented shuffle product: heads multiply in the coefficient algebra,
/// tails multiply by the weighted mixable shuffle product.
pub fn augmented_product(
    x: &BaxElement,
    y: &BaxElement,
    w: &Weight,
) -> Result<BaxElement, Error> {
    x.compatible(y)?;
    if w.ring() != x.ring {
        return Err(Error::RingMismatch {
            left: x.ring.clone(),
            right: w.ring(),
        });
    }
    let mut out = BaxElement::zero(x.ring.clone(), x.alphabet.clone());
    let mut lambda_pows = vec![Coeff::one(&x.ring)];
    for (wx, cx) in &x.terms {
        for (wy, cy) in &y.terms {
            let c = cx.mul(cy);
            let head = wx.head().mul(wy.head());
            let (m, n) = (wx.len() - 1, wy.len() - 1);
            if m == 0 || n == 0 {
                let mut factors = Vec::with_capacity(1 + m + n);
                factors.push(head);
                factors.extend(wx.tail().iter().cloned());
                factors.extend(wy.tail().iter().cloned());
                add_term(&mut out.terms, BaxWord { factors }, c);
                continue;
            }
            while lambda_pows.len() <= m.min(n) {
                let next = lambda_pows.last().expect("nonempty").mul(&w.lambda);
                lambda_pows.push(next);
            }
            let concat: Vec<&Monomial> = wx.tail().iter().chain(wy.tail().iter()).collect();
            for plan in pair_plans(m, n).iter() {
                let scale = &lambda_pows[plan.lambda_exp];
                if scale.is_zero() {
                    continue;
                }
                let coeff = c.mul(scale);
                let mut factors = Vec::with_capacity(1 + plan.slots.len());
                factors.push(head.clone());
                factors.extend(plan.slots.iter().map(|slot| match *slot {
                    PlanSlot::One(i) => concat[i].clone(),
                    PlanSlot::Two(i, j) => concat[i].mul(concat[j]),
                }));
                add_term(&mut out.terms, BaxWord { factors }, coeff);
            }
        }
    }
    Ok(out)
}

/// The canonical operator: prefixes every word with the identity monomial.
pub fn baxter_operator(x: &BaxElement) -> BaxElement {
    let mut out = BaxElement::zero(x.ring.clone(), x.alphabet.clone());
    for (w, c) in &x.terms {
        let mut factors = Vec::with_capacity(w.len() + 1);
        factors.push(Monomial::one());
        factors.extend(w.factors().iter().cloned());
        out.terms.insert(BaxWord { factors }, c.clone());
    }
    out
}

/// The operations an algebra with a distinguished weighted operator must
/// provide for the identity checkers and the universal map.
pub trait BaxterAlgebra {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn ring(&self) -> &RingDescriptor;
    fn weight(&self) -> &Weight;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scalar_mul(&self, c: &Coeff, a: &Self::Elem) -> Self::Elem;
    fn operator(&self, a: &Self::Elem) -> Self::Elem;

    fn eq_elem(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }
}

/// The free Baxter algebra on the given alphabet, as a [`BaxterAlgebra`].
#[derive(Debug, Clone)]
pub struct ShuffleBaxterAlgebra {
    ring: RingDescriptor,
    alphabet: Alphabet,
    weight: Weight,
}

impl ShuffleBaxterAlgebra {
    pub fn new(ring: RingDescriptor, alphabet: Alphabet, weight: Weight) -> Result<Self, Error> {
        if weight.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: weight.ring(),
            });
        }
        Ok(ShuffleBaxterAlgebra {
            ring,
            alphabet,
            weight,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}

impl BaxterAlgebra for ShuffleBaxterAlgebra {
    type Elem = BaxElement;

    fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    fn weight(&self) -> &Weight {
        &self.weight
    }

    fn zero(&self) -> BaxElement {
        BaxElement::zero(self.ring.clone(), self.alphabet.clone())
    }

    fn one(&self) -> BaxElement {
        BaxElement::one(self.ring.clone(), self.alphabet.clone())
    }

    fn add(&self, a: &BaxElement, b: &BaxElement) -> BaxElement {
        a.add(b).expect("algebra elements share ring and alphabet")
    }

    fn neg(&self, a: &BaxElement) -> BaxElement {
        a.neg()
    }

    fn mul(&self, a: &BaxElement, b: &BaxElement) -> BaxElement {
        augmented_product(a, b, &self.weight).expect("algebra elements share ring and alphabet")
    }

    fn scalar_mul(&self, c: &Coeff, a: &BaxElement) -> BaxElement {
        a.scalar_mul(c)
    }

    fn operator(&self, a: &BaxElement) -> BaxElement {
        baxter_operator(a)
    }
}

/// Any coefficient ring with the zero operator; a valid target at every
/// weight.
#[derive(Debug, Clone)]
pub struct ZeroOperatorAlgebra {
    ring: RingDescriptor,
    weight: Weight,
}

impl ZeroOperatorAlgebra {
    pub fn new(ring: RingDescriptor, weight: Weight) -> Result<Self, Error> {
        if weight.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: weight.ring(),
            });
        }
        Ok(ZeroOperatorAlgebra { ring, weight })
    }
}

impl BaxterAlgebra for ZeroOperatorAlgebra {
    type Elem = Coeff;

    fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    fn weight(&self) -> &Weight {
        &self.weight
    }

    fn zero(&self) -> Coeff {
        Coeff::zero(&self.ring)
    }

    fn one(&self) -> Coeff {
        Coeff::one(&self.ring)
    }

    fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.add(b)
    }

    fn neg(&self, a: &Coeff) -> Coeff {
        a.neg()
    }

    fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.mul(b)
    }

    fn scalar_mul(&self, c: &Coeff, a: &Coeff) -> Coeff {
        c.mul(a)
    }

    fn operator(&self, _a: &Coeff) -> Coeff {
        Coeff::zero(&self.ring)
    }
}

/// The coefficient ring with the operator `a -> -weight * a`, which satisfies
/// the weighted operator identity at any weight.
#[derive(Debug, Clone)]
pub struct ScalarOperatorAlgebra {
    ring: RingDescriptor,
    weight: Weight,
    scale: Coeff,
}

impl ScalarOperatorAlgebra {
    pub fn new(ring: RingDescriptor, weight: Weight) -> Result<Self, Error> {
        if weight.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: weight.ring(),
            });
        }
        let scale = weight.lambda.neg();
        Ok(ScalarOperatorAlgebra {
            ring,
            weight,
            scale,
        })
    }
}

impl BaxterAlgebra for ScalarOperatorAlgebra {
    type Elem = Coeff;

    fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    fn weight(&self) -> &Weight {
        &self.weight
    }

    fn zero(&self) -> Coeff {
        Coeff::zero(&self.ring)
    }

    fn one(&self) -> Coeff {
        Coeff::one(&self.ring)
    }

    fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.add(b)
    }

    fn neg(&self, a: &Coeff) -> Coeff {
        a.neg()
    }

    fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.mul(b)
    }

    fn scalar_mul(&self, c: &Coeff, a: &Coeff) -> Coeff {
        c.mul(a)
    }

    fn operator(&self, a: &Coeff) -> Coeff {
        a.mul(&self.scale)
    }
}

/// The coefficient ring with the identity operator. Not a valid weighted
/// operator except at weight minus one; bundled as a negative control so the
/// checkers' failure path can be exercised.
#[derive(Debug, Clone)]
pub struct IdentityOperatorAlgebra {
    ring: RingDescriptor,
    weight: Weight,
}

impl IdentityOperatorAlgebra {
    pub fn new(ring: RingDescriptor, weight: Weight) -> Result<Self, Error> {
        if weight.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: weight.ring(),
            });
        }
        Ok(IdentityOperatorAlgebra { ring, weight })
    }
}

impl BaxterAlgebra for IdentityOperatorAlgebra {
    type Elem = Coeff;

    fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    fn weight(&self) -> &Weight {
        &self.weight
    }

    fn zero(&self) -> Coeff {
        Coeff::zero(&self.ring)
    }

    fn one(&self) -> Coeff {
        Coeff::one(&self.ring)
    }

    fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.add(b)
    }

    fn neg(&self, a: &Coeff) -> Coeff {
        a.neg()
    }

    fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.mul(b)
    }

    fn scalar_mul(&self, c: &Coeff, a: &Coeff) -> Coeff {
        c.mul(a)
    }

    fn operator(&self, a: &Coeff) -> Coeff {
        a.clone()
    }
}

/// Result of an identity check; failures carry both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome<E> {
    Holds,
    Fails { lhs: E, rhs: E },
}

impl<E> CheckOutcome<E> {
    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds)
    }
}

/// Checks the weighted operator identity
/// `P(x)P(y) = P(xP(y)) + P(yP(x)) + weight * P(xy)` on one pair.
pub fn check_baxter_identity<R: BaxterAlgebra>(
    alg: &R,
    x: &R::Elem,
    y: &R::Elem,
) -> CheckOutcome<R::Elem> {
    let lhs = alg.mul(&alg.operator(x), &alg.operator(y));
    let mut rhs = alg.operator(&alg.mul(x, &alg.operator(y)));
    rhs = alg.add(&rhs, &alg.operator(&alg.mul(y, &alg.operator(x))));
    rhs = alg.add(
        &rhs,
        &alg.scalar_mul(&alg.weight().lambda, &alg.operator(&alg.mul(x, y))),
    );
    if alg.eq_elem(&lhs, &rhs) {
        CheckOutcome::Holds
    } else {
        CheckOutcome::Fails { lhs, rhs }
    }
}

/// `P(v_1 · P(v_2 · ... P(v_k · seed)))`.
fn nested_operator<R: BaxterAlgebra>(alg: &R, values: &[R::Elem], seed: &R::Elem) -> R::Elem {
    let mut acc = seed.clone();
    for v in values.iter().rev() {
        acc = alg.operator(&alg.mul(v, &acc));
    }
    acc
}

/// Checks the expansion of a product of two iterated-operator expressions as
/// the weighted sum over all mixable shuffles of the operator compositions.
pub fn check_product_expansion<R: BaxterAlgebra>(
    alg: &R,
    xs: &[R::Elem],
    ys: &[R::Elem],
) -> CheckOutcome<R::Elem> {
    assert!(
        !xs.is_empty() && !ys.is_empty(),
        "expansion needs nonempty operator stacks"
    );
    let one = alg.one();
    let lhs = alg.mul(
        &nested_operator(alg, xs, &one),
        &nested_operator(alg, ys, &one),
    );

    let (m, n) = (xs.len(), ys.len());
    let concat: Vec<&R::Elem> = xs.iter().chain(ys.iter()).collect();
    let lambda_pows = alg.weight().powers(m.min(n));
    let mut rhs = alg.zero();
    for plan in pair_plans(m, n).iter() {
        let values: Vec<R::Elem> = plan
            .slots
            .iter()
            .map(|slot| match *slot {
                PlanSlot::One(i) => concat[i].clone(),
                PlanSlot::Two(i, j) => alg.mul(concat[i], concat[j]),
            })
            .collect();
        let term = nested_operator(alg, &values, &one);
        rhs = alg.add(&rhs, &alg.scalar_mul(&lambda_pows[plan.lambda_exp], &term));
    }
    if alg.eq_elem(&lhs, &rhs) {
        CheckOutcome::Holds
    } else {
        CheckOutcome::Fails { lhs, rhs }
    }
}

/// An algebra map out of the polynomial algebra on the alphabet, given by
/// generator images in the target.
pub struct AlgebraHom<'a, R: BaxterAlgebra> {
    algebra: &'a R,
    alphabet: Alphabet,
    images: Vec<R::Elem>,
}

impl<'a, R: BaxterAlgebra> AlgebraHom<'a, R> {
    pub fn new(algebra: &'a R, alphabet: Alphabet, images: Vec<R::Elem>) -> Result<Self, Error> {
        if images.len() != alphabet.len() {
            return Err(Error::Invalid(format!(
                "expected {} generator images, got {}",
                alphabet.len(),
                images.len()
            )));
        }
        Ok(AlgebraHom {
            algebra,
            alphabet,
            images,
        })
    }

    pub fn algebra(&self) -> &'a R {
        self.algebra
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// The image of a monomial: the product of generator images.
    pub fn eval_monomial(&self, m: &Monomial) -> R::Elem {
        let mut acc = self.algebra.one();
        for &(g, e) in m.exponents() {
            let image = &self.images[g as usize];
            for _ in 0..e {
                acc = self.algebra.mul(&acc, image);
            }
        }
        acc
    }
}

/// The unique operator-compatible extension of an algebra map to the free
/// Baxter algebra: each word maps to its head image applied to the nested
/// operator stack of the tail images.
pub fn universal_map<R: BaxterAlgebra>(
    hom: &AlgebraHom<'_, R>,
    x: &BaxElement,
    weight: &Weight,
) -> Result<R::Elem, Error> {
    let alg = hom.algebra;
    if alg.weight() != weight {
        return Err(Error::WeightMismatch {
            target: alg.weight().to_string(),
            requested: weight.to_string(),
        });
    }
    if *alg.ring() != *x.ring() {
        return Err(Error::RingMismatch {
            left: alg.ring().clone(),
            right: x.ring().clone(),
        });
    }
    if *hom.alphabet() != *x.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let one = alg.one();
    let mut acc = alg.zero();
    for (word, coeff) in x.terms() {
        let tail_images: Vec<R::Elem> = word.tail().iter().map(|m| hom.eval_monomial(m)).collect();
        let stacked = nested_operator(alg, &tail_images, &one);
        let value = alg.mul(&hom.eval_monomial(word.head()), &stacked);
        acc = alg.add(&acc, &alg.scalar_mul(coeff, &value));
    }
    Ok(acc)
}

/// An algebra map between polynomial algebras, given by polynomial images of
/// the source generators; applied slotwise it transports whole elements.
pub struct PolyMap {
    source: Alphabet,
    target: Alphabet,
    ring: RingDescriptor,
    images: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(
        source: Alphabet,
        target: Alphabet,
        ring: RingDescriptor,
        images: Vec<Polynomial>,
    ) -> Result<PolyMap, Error> {
        if images.len() != source.len() {
            return Err(Error::Invalid(format!(
                "expected {} generator images, got {}",
                source.len(),
                images.len()
            )));
        }
        for p in &images {
            if *p.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: p.ring().clone(),
                });
            }
            if *p.alphabet() != target {
                return Err(Error::AlphabetMismatch);
            }
        }
        Ok(PolyMap {
            source,
            target,
            ring,
            images,
        })
    }

    /// The identity map on an alphabet.
    pub fn identity(ring: RingDescriptor, alphabet: Alphabet) -> PolyMap {
        let images = (0..alphabet.len())
            .map(|i| {
                Polynomial::from_monomial(
                    ring.clone(),
                    alphabet.clone(),
                    Monomial::generator(i as u16),
                    Coeff::one(&ring),
                )
            })
            .collect();
        PolyMap::new(alphabet.clone(), alphabet, ring, images).expect("identity images")
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    /// The image of one monomial as a polynomial over the target alphabet.
    pub fn eval_monomial(&self, m: &Monomial) -> Result<Polynomial, Error> {
        let mut acc = Polynomial::one(self.ring.clone(), self.target.clone());
        for &(g, e) in m.exponents() {
            acc = acc.mul(&self.images[g as usize].pow(e)?)?;
        }
        Ok(acc)
    }

    /// Composition `self ∘ first`.
    pub fn compose(&self, first: &PolyMap) -> Result<PolyMap, Error> {
        if first.target != self.source {
            return Err(Error::AlphabetMismatch);
        }
        let mut images = Vec::with_capacity(first.images.len());
        for p in &first.images {
            let mut acc = Polynomial::zero(self.ring.clone(), self.target.clone());
            for (m, c) in p.terms() {
                let image = self.eval_monomial(m)?;
                for (tm, tc) in image.terms() {
                    acc.add_term(tm.clone(), tc.mul(c));
                }
            }
            images.push(acc);
        }
        PolyMap::new(first.source.clone(), self.target.clone(), self.ring.clone(), images)
    }
}

/// Transports an element along a polynomial substitution, slot by slot.
pub fn functor_map(f: &PolyMap, x: &BaxElement) -> Result<BaxElement, Error> {
    if *x.alphabet() != f.source {
        return Err(Error::AlphabetMismatch);
    }
    if *x.ring() != f.ring {
        return Err(Error::RingMismatch {
            left: f.ring.clone(),
            right: x.ring().clone(),
        });
    }
    let mut out = BaxElement::zero(f.ring.clone(), f.target.clone());
    for (word, coeff) in x.terms() {
        let mut partial: Vec<(Vec<Monomial>, Coeff)> = vec![(Vec::new(), coeff.clone())];
        for slot in word.factors() {
            let image = f.eval_monomial(slot)?;
            let mut next = Vec::with_capacity(partial.len() * image.terms().count());
            for (factors, c) in &partial {
                for (m, mc) in image.terms() {
                    let mut extended = factors.clone();
                    extended.push(m.clone());
                    next.push((extended, c.mul(mc)));
                }
            }
            partial = next;
        }
        for (factors, c) in partial {
            add_term(&mut out.terms, BaxWord { factors }, c);
        }
    }
    Ok(out)
}

/// The additive spanning set of the operator-closed subalgebra generated by
/// the given monomials: words whose slots are products of at most
/// `degree_bound` basis monomials, with at most `depth` tail slots.
pub fn generator_span_words(
    basis: &[Monomial],
    depth: usize,
    degree_bound: usize,
) -> Vec<BaxWord> {
    let mut slot_values: BTreeSet<Monomial> = BTreeSet::new();
    slot_values.insert(Monomial::one());
    for _ in 0..degree_bound {
        let previous: Vec<Monomial> = slot_values.iter().cloned().collect();
        for value in &previous {
            for b in basis {
                slot_values.insert(value.mul(b));
            }
        }
    }
    let slot_values: Vec<Monomial> = slot_values.into_iter().collect();
    let mut words = Vec::new();
    for slots in 1..=depth + 1 {
        let mut indices = vec![0usize; slots];
        loop {
            words.push(BaxWord {
                factors: indices.iter().map(|&i| slot_values[i].clone()).collect(),
            });
            let mut pos = slots;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                indices[pos] += 1;
                if indices[pos] < slot_values.len() {
                    break;
                }
                indices[pos] = 0;
            }
            if indices.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    words.sort();
    words.dedup();
    words
}
