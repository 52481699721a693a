//! The identity-free free Baxter algebra of weight minus one on bracket
//! symbols, its product via index triples, its operator, and the embedding
//! into the free Baxter algebra on the same alphabet.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::baxter::{AlgebraHom, BaxElement, BaxWord, BaxterAlgebra};
use crate::error::Error;
use crate::monomial::{Alphabet, Monomial};
use crate::ring::{Coeff, RingDescriptor};
use crate::tensor::{add_term, render_terms};

/// A basis symbol: a head monomial and a bracket of monomials. Head-only
/// symbols must have a nontrivial head; bracketed symbols must end in a
/// nontrivial monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartierSymbol {
    head: Monomial,
    bracket: Vec<Monomial>,
}

impl CartierSymbol {
    pub fn new(head: Monomial, bracket: Vec<Monomial>) -> Result<CartierSymbol, Error> {
        match bracket.last() {
            None => {
                if head.is_one() {
                    return Err(Error::InvalidSymbol(
                        "head-only symbol must have a nontrivial head".into(),
                    ));
                }
            }
            Some(last) => {
                if last.is_one() {
                    return Err(Error::InvalidSymbol(
                        "last bracket entry must be nontrivial".into(),
                    ));
                }
            }
        }
        Ok(CartierSymbol { head, bracket })
    }

    pub fn head(&self) -> &Monomial {
        &self.head
    }

    pub fn bracket(&self) -> &[Monomial] {
        &self.bracket
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        let inner = self
            .bracket
            .iter()
            .map(|m| m.render(alphabet))
            .collect::<Vec<_>>()
            .join(",");
        format!("{}.[{}]", self.head.render(alphabet), inner)
    }
}

impl PartialOrd for CartierSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CartierSymbol {
    /// Longer brackets first, then head, then bracket entries.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .bracket
            .len()
            .cmp(&self.bracket.len())
            .then_with(|| self.head.cmp(&other.head))
            .then_with(|| self.bracket.iter().cmp(other.bracket.iter()))
    }
}

/// A finite linear combination of bracket symbols; the algebra has no
/// multiplicative identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartierElement {
    ring: RingDescriptor,
    alphabet: Alphabet,
    terms: BTreeMap<CartierSymbol, Coeff>,
}

impl CartierElement {
    pub fn zero(ring: RingDescriptor, alphabet: Alphabet) -> CartierElement {
        CartierElement {
            ring,
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_symbol(
        ring: RingDescriptor,
        alphabet: Alphabet,
        symbol: CartierSymbol,
    ) -> CartierElement {
        let c = Coeff::one(&ring);
        let mut out = CartierElement::zero(ring, alphabet);
        out.terms.insert(symbol, c);
        out
    }

    pub fn from_terms(
        ring: RingDescriptor,
        alphabet: Alphabet,
        terms: impl IntoIterator<Item = (CartierSymbol, Coeff)>,
    ) -> Result<CartierElement, Error> {
        let mut out = CartierElement::zero(ring, alphabet);
        for (symbol, coeff) in terms {
            if coeff.ring() != out.ring {
                return Err(Error::RingMismatch {
                    left: out.ring.clone(),
                    right: coeff.ring(),
                });
            }
            add_term(&mut out.terms, symbol, coeff);
        }
        Ok(out)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CartierSymbol, &Coeff)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn compatible(&self, other: &CartierElement) -> Result<(), Error> {
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

    pub fn add(&self, other: &CartierElement) -> Result<CartierElement, Error> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            add_term(&mut out.terms, s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> CartierElement {
        let mut out = CartierElement::zero(self.ring.clone(), self.alphabet.clone());
        for (s, c) in &self.terms {
            out.terms.insert(s.clone(), c.neg());
        }
        out
    }

    pub fn sub(&self, other: &CartierElement) -> Result<CartierElement, Error> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Coeff) -> CartierElement {
        let mut out = CartierElement::zero(self.ring.clone(), self.alphabet.clone());
        for (s, k) in &self.terms {
            add_term(&mut out.terms, s.clone(), k.mul(c));
        }
        out
    }
}

impl fmt::Display for CartierElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            render_terms(self.terms.iter().map(|(s, c)| (s.render(&self.alphabet), c)))
        )
    }
}

/// An index triple describing one summand of the bracket product: `k` output
/// slots, with the first factor's entries placed at positions `p` and the
/// second's at positions `q`; shared positions multiply.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CartierTriple {
    pub k: usize,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
}

impl CartierTriple {
    /// The number of shared positions, i.e. merges: `m + n - k`.
    pub fn overlap(&self) -> usize {
        self.p.len() + self.q.len() - self.k
    }
}

/// All triples `(k, P, Q)` with `P ∪ Q = {1..k}`, `|P| = m`, `|Q| = n`;
/// there are as many as mixable `(m, n)`-shuffles.
pub fn enumerate_cartier_triples(m: usize, n: usize) -> Vec<CartierTriple> {
    assert!(m >= 1 && n >= 1, "triples need nonempty brackets");
    let mut out = Vec::new();
    for k in 1..=m + n {
        if k < m || k < n || m + n - k > m.min(n) {
            continue;
        }
        let overlap_size = m + n - k;
        for p in (1..=k).combinations(m) {
            let complement: Vec<usize> = (1..=k).filter(|j| !p.contains(j)).collect();
            if complement.len() != n - overlap_size {
                continue;
            }
            for overlap in p.iter().copied().combinations(overlap_size) {
                let mut q: Vec<usize> = complement.iter().copied().chain(overlap).collect();
                q.sort_unstable();
                out.push(CartierTriple { k, p: p.clone(), q });
            }
        }
    }
    out.sort();
    out
}

fn fill_bracket(
    triple: &CartierTriple,
    a: &[Monomial],
    b: &[Monomial],
) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(triple.k);
    for j in 1..=triple.k {
        let in_p = triple.p.binary_search(&j).ok();
        let in_q = triple.q.binary_search(&j).ok();
        let entry = match (in_p, in_q) {
            (Some(alpha), None) => a[alpha].clone(),
            (None, Some(beta)) => b[beta].clone(),
            (Some(alpha), Some(beta)) => a[alpha].mul(&b[beta]),
            (None, None) => unreachable!("positions are covered by P or Q"),
        };
        out.push(entry);
    }
    out
}

/// The bracket product: bilinear, with head-only symbols acting through the
/// head and bracketed symbols expanding over all index triples with sign
/// minus-one to the number of shared positions.
pub fn cartier_product(
    x: &CartierElement,
    y: &CartierElement,
) -> Result<CartierElement, Error> {
    x.compatible(y)?;
    let ring = x.ring.clone();
    let mut out = CartierElement::zero(ring.clone(), x.alphabet.clone());
    for (sx, cx) in &x.terms {
        for (sy, cy) in &y.terms {
            let c = cx.mul(cy);
            let head = sx.head.mul(&sy.head);
            match (sx.bracket.is_empty(), sy.bracket.is_empty()) {
                (true, true) => {
                    let symbol = CartierSymbol::new(head, Vec::new())?;
                    add_term(&mut out.terms, symbol, c);
                }
                (true, false) => {
                    let symbol = CartierSymbol::new(head, sy.bracket.clone())?;
                    add_term(&mut out.terms, symbol, c);
                }
                (false, true) => {
                    let symbol = CartierSymbol::new(head, sx.bracket.clone())?;
                    add_term(&mut out.terms, symbol, c);
                }
                (false, false) => {
                    for triple in enumerate_cartier_triples(sx.bracket.len(), sy.bracket.len()) {
                        let bracket = fill_bracket(&triple, &sx.bracket, &sy.bracket);
                        let symbol = CartierSymbol::new(head.clone(), bracket)?;
                        let coeff = if triple.overlap() % 2 == 0 {
                            c.clone()
                        } else {
                            c.neg()
                        };
                        add_term(&mut out.terms, symbol, coeff);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The bracket operator: the head moves into the bracket and the new head is
/// the identity monomial.
pub fn cartier_operator(x: &CartierElement) -> CartierElement {
    let mut out = CartierElement::zero(x.ring.clone(), x.alphabet.clone());
    for (s, c) in &x.terms {
        let mut bracket = Vec::with_capacity(s.bracket.len() + 1);
        bracket.push(s.head.clone());
        bracket.extend(s.bracket.iter().cloned());
        let symbol = CartierSymbol::new(Monomial::one(), bracket)
            .expect("operator image of a valid symbol is valid");
        add_term(&mut out.terms, symbol, c.clone());
    }
    out
}

/// The basis embedding into the free Baxter algebra: the head becomes slot 0
/// and the bracket the tensor tail. Multiplicative at weight minus one.
pub fn embed_cartier(x: &CartierElement) -> BaxElement {
    let mut terms = Vec::with_capacity(x.terms.len());
    for (s, c) in &x.terms {
        let mut factors = Vec::with_capacity(s.bracket.len() + 1);
        factors.push(s.head.clone());
        factors.extend(s.bracket.iter().cloned());
        terms.push((BaxWord::new(factors).expect("nonempty"), c.clone()));
    }
    BaxElement::from_terms(x.ring.clone(), x.alphabet.clone(), terms).expect("single ring")
}

/// Factors a symbol-level morphism through the free Baxter algebra: given
/// generator images in a weight minus-one target, returns the extension that
/// agrees with the symbol morphism on embedded symbols.
pub fn factor_through<'a, R: BaxterAlgebra>(
    algebra: &'a R,
    alphabet: Alphabet,
    images: Vec<R::Elem>,
) -> Result<AlgebraHom<'a, R>, Error> {
    let minus_one = Coeff::from_i64(algebra.ring(), -1);
    if algebra.weight().lambda != minus_one {
        return Err(Error::WeightMismatch {
            target: algebra.weight().to_string(),
            requested: minus_one.to_string(),
        });
    }
    AlgebraHom::new(algebra, alphabet, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Weight;
    use crate::shuffle::count_mixable_pair;
    use num::BigInt;

    fn ctx() -> (RingDescriptor, Alphabet) {
        (RingDescriptor::Int, Alphabet::new(["x", "y"]).unwrap())
    }

    fn x() -> Monomial {
        Monomial::generator(0)
    }

    fn y() -> Monomial {
        Monomial::generator(1)
    }

    #[test]
    fn symbol_validity() {
        assert!(CartierSymbol::new(Monomial::one(), vec![]).is_err());
        assert!(CartierSymbol::new(x(), vec![]).is_ok());
        assert!(CartierSymbol::new(Monomial::one(), vec![y(), Monomial::one()]).is_err());
        assert!(CartierSymbol::new(Monomial::one(), vec![Monomial::one(), y()]).is_ok());
    }

    #[test]
    fn triples_for_singleton_brackets() {
        let triples = enumerate_cartier_triples(1, 1);
        assert_eq!(
            triples,
            vec![
                CartierTriple {
                    k: 1,
                    p: vec![1],
                    q: vec![1]
                },
                CartierTriple {
                    k: 2,
                    p: vec![1],
                    q: vec![2]
                },
                CartierTriple {
                    k: 2,
                    p: vec![2],
                    q: vec![1]
                },
            ]
        );
    }

    #[test]
    fn triple_counts_match_mixable_shuffles() {
        assert_eq!(enumerate_cartier_triples(2, 1).len(), 5);
        for m in 1..=5 {
            for n in 1..=5 {
                assert_eq!(
                    BigInt::from(enumerate_cartier_triples(m, n).len()),
                    count_mixable_pair(m, n)
                );
            }
        }
    }

    #[test]
    fn head_only_products_multiply_heads() {
        let (ring, alphabet) = ctx();
        let a = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(x(), vec![]).unwrap(),
        );
        let b = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(y(), vec![]).unwrap(),
        );
        let product = cartier_product(&a, &b).unwrap();
        let expected = CartierElement::from_symbol(
            ring,
            alphabet,
            CartierSymbol::new(x().mul(&y()), vec![]).unwrap(),
        );
        assert_eq!(product, expected);
    }

    #[test]
    fn head_only_times_bracketed_scales_the_head() {
        let (ring, alphabet) = ctx();
        let a = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(x(), vec![]).unwrap(),
        );
        let b = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(y(), vec![y()]).unwrap(),
        );
        let expected = CartierElement::from_symbol(
            ring,
            alphabet,
            CartierSymbol::new(x().mul(&y()), vec![y()]).unwrap(),
        );
        assert_eq!(cartier_product(&a, &b).unwrap(), expected);
        assert_eq!(cartier_product(&b, &a).unwrap(), expected);
    }

    #[test]
    fn singleton_bracket_product() {
        let (ring, alphabet) = ctx();
        let a = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(Monomial::one(), vec![x()]).unwrap(),
        );
        let b = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(Monomial::one(), vec![y()]).unwrap(),
        );
        let product = cartier_product(&a, &b).unwrap();
        let expected = CartierElement::from_terms(
            ring.clone(),
            alphabet,
            [
                (
                    CartierSymbol::new(Monomial::one(), vec![x(), y()]).unwrap(),
                    Coeff::from_i64(&ring, 1),
                ),
                (
                    CartierSymbol::new(Monomial::one(), vec![y(), x()]).unwrap(),
                    Coeff::from_i64(&ring, 1),
                ),
                (
                    CartierSymbol::new(Monomial::one(), vec![x().mul(&y())]).unwrap(),
                    Coeff::from_i64(&ring, -1),
                ),
            ],
        )
        .unwrap();
        assert_eq!(product, expected);
    }

    #[test]
    fn operator_moves_head_into_bracket() {
        let (ring, alphabet) = ctx();
        let head_only = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(x(), vec![]).unwrap(),
        );
        assert_eq!(
            cartier_operator(&head_only),
            CartierElement::from_symbol(
                ring.clone(),
                alphabet.clone(),
                CartierSymbol::new(Monomial::one(), vec![x()]).unwrap(),
            )
        );
        let bracketed = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(x(), vec![y()]).unwrap(),
        );
        assert_eq!(
            cartier_operator(&bracketed),
            CartierElement::from_symbol(
                ring.clone(),
                alphabet.clone(),
                CartierSymbol::new(Monomial::one(), vec![x(), y()]).unwrap(),
            )
        );
        assert!(cartier_operator(&CartierElement::zero(ring, alphabet)).is_zero());
    }

    #[test]
    fn embedding_examples() {
        let (ring, alphabet) = ctx();
        let head_only = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(x(), vec![]).unwrap(),
        );
        let image = embed_cartier(&head_only);
        assert_eq!(
            image,
            BaxElement::from_word(
                ring.clone(),
                alphabet.clone(),
                BaxWord::new(vec![x()]).unwrap()
            )
        );
        let bracketed = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(Monomial::one(), vec![x(), y()]).unwrap(),
        );
        assert_eq!(
            embed_cartier(&bracketed),
            BaxElement::from_word(
                ring,
                alphabet,
                BaxWord::new(vec![Monomial::one(), x(), y()]).unwrap()
            )
        );
    }

    #[test]
    fn embedding_is_multiplicative_on_the_singleton_example() {
        let (ring, alphabet) = ctx();
        let w = Weight::of_i64(&ring, -1);
        let a = CartierElement::from_symbol(
            ring.clone(),
            alphabet.clone(),
            CartierSymbol::new(Monomial::one(), vec![x()]).unwrap(),
        );
        let b = CartierElement::from_symbol(
            ring,
            alphabet,
            CartierSymbol::new(Monomial::one(), vec![y()]).unwrap(),
        );
        let lhs = embed_cartier(&cartier_product(&a, &b).unwrap());
        let rhs = crate::baxter::augmented_product(&embed_cartier(&a), &embed_cartier(&b), &w)
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn factor_through_requires_weight_minus_one() {
        let ring = RingDescriptor::Int;
        let alphabet = Alphabet::new(["x"]).unwrap();
        let wrong =
            crate::baxter::ZeroOperatorAlgebra::new(ring.clone(), Weight::of_i64(&ring, 0))
                .unwrap();
        assert!(matches!(
            factor_through(&wrong, alphabet.clone(), vec![Coeff::one(&ring)]),
            Err(Error::WeightMismatch { .. })
        ));
        let right =
            crate::baxter::ZeroOperatorAlgebra::new(ring.clone(), Weight::of_i64(&ring, -1))
                .unwrap();
        assert!(factor_through(&right, alphabet, vec![Coeff::one(&ring)]).is_ok());
    }
}
