//! Generators, monomials of the free commutative monoid on them, and the
//! sparse polynomials used for substitution maps.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::ring::{Coeff, RingDescriptor};

/// The declared generator set. Names are stored sorted, so generator indices
/// follow name order and comparisons are independent of declaration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Alphabet {
    names: Arc<Vec<String>>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Alphabet, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateGenerator(pair[0].clone()));
            }
        }
        Ok(Alphabet {
            names: Arc::new(names),
        })
    }

    /// The empty generator set; its only monomial is the identity.
    pub fn empty() -> Alphabet {
        Alphabet {
            names: Arc::new(Vec::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: u16) -> &str {
        &self.names[index as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.names.binary_search_by(|x| x.as_str().cmp(name)).ok().map(|i| i as u16)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A monomial: a finitely supported exponent vector over the alphabet,
/// stored sparse with strictly positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u16, u32)>,
}

impl Monomial {
    /// The monoid identity.
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn generator(index: u16) -> Monomial {
        Monomial {
            exps: vec![(index, 1)],
        }
    }

    /// Builds from arbitrary (generator, exponent) pairs, combining repeats
    /// and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (u16, u32)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<u16, u32> = BTreeMap::new();
        for (g, e) in pairs {
            if e > 0 {
                *map.entry(g).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponents(&self) -> &[(u16, u32)] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (ga, ea) = self.exps[i];
            let (gb, eb) = other.exps[j];
            match ga.cmp(&gb) {
                Ordering::Less => {
                    exps.push((ga, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((gb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((ga, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&(g, e)| (g, e * k))
                .filter(|&(_, e)| e > 0)
                .collect(),
        }
    }

    /// Checks that every generator index is valid for `alphabet`.
    pub fn fits(&self, alphabet: &Alphabet) -> bool {
        self.exps
            .iter()
            .all(|&(g, _)| (g as usize) < alphabet.len())
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    alphabet.name(g).to_string()
                } else {
                    format!("{}^{}", alphabet.name(g), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Dictionary order of the expanded generator word: `x < x*y < x^2 < y`.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&(ga, ea)), Some(&(gb, eb))) => {
                    if ga != gb {
                        return ga.cmp(&gb);
                    }
                    if ea == eb {
                        i += 1;
                        j += 1;
                        continue;
                    }
                    // The side with the shorter run either ends (a prefix of
                    // the other) or continues with a larger generator.
                    return if ea < eb {
                        if i + 1 == a.len() {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        }
                    } else if j + 1 == b.len() {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
            }
        }
    }
}

/// A sparse polynomial over the alphabet; used to describe algebra maps by
/// generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingDescriptor,
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: RingDescriptor, alphabet: Alphabet) -> Polynomial {
        Polynomial {
            ring,
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: RingDescriptor, alphabet: Alphabet) -> Polynomial {
        Polynomial::from_monomial(ring.clone(), alphabet, Monomial::one(), Coeff::one(&ring))
    }

    pub fn from_monomial(
        ring: RingDescriptor,
        alphabet: Alphabet,
        m: Monomial,
        c: Coeff,
    ) -> Polynomial {
        let mut p = Polynomial::zero(ring, alphabet);
        p.add_term(m, c);
        p
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        debug_assert!(m.fits(&self.alphabet));
        debug_assert_eq!(c.ring(), self.ring);
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.compatible(other)?;
        let mut out = Polynomial::zero(self.ring.clone(), self.alphabet.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial, Error> {
        let mut acc = Polynomial::one(self.ring.clone(), self.alphabet.clone());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn compatible(&self, other: &Polynomial) -> Result<(), Error> {
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
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.render(&self.alphabet)
                } else if m.is_one() {
                    c.to_string()
                } else {
                    format!("{}*{}", c, m.render(&self.alphabet))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
