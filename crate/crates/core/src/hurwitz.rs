//! Hurwitz polynomials: finitely supported coefficient sequences under
//! binomial convolution, the shift operator, and the weight-zero embedding
//! of the free Baxter algebra on the coefficient ring alone.

use std::fmt;

use crate::baxter::{augmented_product, BaxElement, BaxterAlgebra, BaxWord};
use crate::error::Error;
use crate::monomial::Alphabet;
use crate::ring::{binomial, binomial_int, Coeff, RingDescriptor, Weight};
use crate::tensor::render_terms;

/// A finitely supported sequence `n -> a_n`; no trailing zeros are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzPolynomial {
    ring: RingDescriptor,
    coeffs: Vec<Coeff>,
}

impl HurwitzPolynomial {
    pub fn zero(ring: RingDescriptor) -> HurwitzPolynomial {
        HurwitzPolynomial {
            ring,
            coeffs: Vec::new(),
        }
    }

    /// Builds from a dense coefficient list starting at index 0.
    pub fn from_coeffs(
        ring: RingDescriptor,
        coeffs: Vec<Coeff>,
    ) -> Result<HurwitzPolynomial, Error> {
        for c in &coeffs {
            if c.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: c.ring(),
                });
            }
        }
        let mut out = HurwitzPolynomial { ring, coeffs };
        out.trim();
        Ok(out)
    }

    /// The basis sequence with a single one at index `n`.
    pub fn basis(ring: RingDescriptor, n: usize) -> HurwitzPolynomial {
        let mut coeffs = vec![Coeff::zero(&ring); n + 1];
        coeffs[n] = Coeff::one(&ring);
        HurwitzPolynomial { ring, coeffs }
    }

    pub fn one(ring: RingDescriptor) -> HurwitzPolynomial {
        HurwitzPolynomial::basis(ring, 0)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Coeff::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// The coefficient at index `n` (zero beyond the stored support).
    pub fn coeff(&self, n: usize) -> Coeff {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(|| Coeff::zero(&self.ring))
    }

    /// One past the largest index with a nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &HurwitzPolynomial) -> Result<HurwitzPolynomial, Error> {
        self.same_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        let mut out = HurwitzPolynomial {
            ring: self.ring.clone(),
            coeffs,
        };
        out.trim();
        Ok(out)
    }

    pub fn neg(&self) -> HurwitzPolynomial {
        HurwitzPolynomial {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(Coeff::neg).collect(),
        }
    }

    pub fn sub(&self, other: &HurwitzPolynomial) -> Result<HurwitzPolynomial, Error> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Coeff) -> HurwitzPolynomial {
        let mut out = HurwitzPolynomial {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        };
        out.trim();
        out
    }

    fn same_ring(&self, other: &HurwitzPolynomial) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.clone(),
                right: other.ring.clone(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for HurwitzPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, &Coeff)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (format!("e{n}"), c))
            .collect();
        write!(f, "{}", render_terms(terms.into_iter()))
    }
}

/// Binomial convolution: `c_n = sum_k (n choose k) a_k b_{n-k}`.
pub fn hurwitz_mul(
    a: &HurwitzPolynomial,
    b: &HurwitzPolynomial,
) -> Result<HurwitzPolynomial, Error> {
    a.same_ring(b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(HurwitzPolynomial::zero(a.ring.clone()));
    }
    let len = a.coeffs.len() + b.coeffs.len() - 1;
    let mut coeffs = vec![Coeff::zero(&a.ring); len];
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let weight = binomial(&a.ring, (i + j) as u64, i as u64);
            coeffs[i + j] = coeffs[i + j].add(&ca.mul(cb).mul(&weight));
        }
    }
    let mut out = HurwitzPolynomial {
        ring: a.ring.clone(),
        coeffs,
    };
    out.trim();
    Ok(out)
}

/// The shift operator: `(P a)_0 = 0`, `(P a)_{n+1} = a_n`. A weight-zero
/// Baxter operator for the binomial convolution product.
pub fn hurwitz_shift(a: &HurwitzPolynomial) -> HurwitzPolynomial {
    if a.is_zero() {
        return a.clone();
    }
    let mut coeffs = Vec::with_capacity(a.coeffs.len() + 1);
    coeffs.push(Coeff::zero(&a.ring));
    coeffs.extend(a.coeffs.iter().cloned());
    HurwitzPolynomial {
        ring: a.ring.clone(),
        coeffs,
    }
}

/// Hurwitz polynomials as a Baxter algebra of weight zero under the shift.
#[derive(Debug, Clone)]
pub struct HurwitzAlgebra {
    ring: RingDescriptor,
    weight: Weight,
}

impl HurwitzAlgebra {
    pub fn new(ring: RingDescriptor) -> Self {
        let weight = Weight::new(Coeff::zero(&ring));
        HurwitzAlgebra { ring, weight }
    }
}

impl BaxterAlgebra for HurwitzAlgebra {
    type Elem = HurwitzPolynomial;

    fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    fn weight(&self) -> &Weight {
        &self.weight
    }

    fn zero(&self) -> HurwitzPolynomial {
        HurwitzPolynomial::zero(self.ring.clone())
    }

    fn one(&self) -> HurwitzPolynomial {
        HurwitzPolynomial::one(self.ring.clone())
    }

    fn add(&self, a: &HurwitzPolynomial, b: &HurwitzPolynomial) -> HurwitzPolynomial {
        a.add(b).expect("algebra elements share a ring")
    }

    fn neg(&self, a: &HurwitzPolynomial) -> HurwitzPolynomial {
        a.neg()
    }

    fn mul(&self, a: &HurwitzPolynomial, b: &HurwitzPolynomial) -> HurwitzPolynomial {
        hurwitz_mul(a, b).expect("algebra elements share a ring")
    }

    fn scalar_mul(&self, c: &Coeff, a: &HurwitzPolynomial) -> HurwitzPolynomial {
        a.scalar_mul(c)
    }

    fn operator(&self, a: &HurwitzPolynomial) -> HurwitzPolynomial {
        hurwitz_shift(a)
    }
}

/// The weight-zero embedding of the free Baxter algebra over the empty
/// alphabet: the all-ones word of length `n+1` maps to the basis sequence at
/// index `n`.
pub fn embed_sha_c(x: &BaxElement, w: &Weight) -> Result<HurwitzPolynomial, Error> {
    if !w.lambda.is_zero() {
        return Err(Error::UnsupportedWeight(w.to_string()));
    }
    if w.ring() != *x.ring() {
        return Err(Error::RingMismatch {
            left: x.ring().clone(),
            right: w.ring(),
        });
    }
    if !x.alphabet().is_empty() {
        return Err(Error::AlphabetMismatch);
    }
    let mut out = HurwitzPolynomial::zero(x.ring().clone());
    for (word, coeff) in x.terms() {
        let basis = HurwitzPolynomial::basis(x.ring().clone(), word.len() - 1);
        out = out.add(&basis.scalar_mul(coeff))?;
    }
    Ok(out)
}

/// Closed-form product of two all-ones words: the weighted sum of shorter
/// all-ones words indexed by the number of merges.
pub fn one_tensor_product(m: usize, n: usize, w: &Weight) -> BaxElement {
    let ring = w.ring();
    let mut terms = Vec::new();
    for (k, lambda_pow) in w.powers(m.min(n)).iter().enumerate() {
        let count = binomial_int((m + n - k) as u64, n as u64) * binomial_int(n as u64, k as u64);
        let coeff = Coeff::from_bigint(&ring, &count).mul(lambda_pow);
        let word = BaxWord::ones(m + n + 1 - k).expect("positive length");
        terms.push((word, coeff));
    }
    BaxElement::from_terms(ring, Alphabet::empty(), terms).expect("single ring")
}

/// The product the closed form must match, computed by the general expansion.
pub fn one_tensor_product_expanded(m: usize, n: usize, w: &Weight) -> BaxElement {
    let ring = w.ring();
    let x = BaxElement::one_tensor(ring.clone(), m + 1).expect("positive length");
    let y = BaxElement::one_tensor(ring, n + 1).expect("positive length");
    augmented_product(&x, &y, w).expect("same ring and alphabet")
}
