use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

/// Integer chain: a finite sum of oriented k-simplices.
///
/// Coefficients refer to simplex indices in one complex's dimension-`dim`
/// slot. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntChain {
    dim: usize,
    coeffs: BTreeMap<usize, i64>,
}

impl IntChain {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut c = Self::zero(dim);
        for (s, v) in terms {
            c.add_term(s, v);
        }
        c
    }

    pub fn simplex(dim: usize, index: usize) -> Self {
        Self::from_terms(dim, [(index, 1)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, simplex: usize, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.coeffs.entry(simplex).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&simplex);
        }
    }

    pub fn coeff(&self, simplex: usize) -> i64 {
        self.coeffs.get(&simplex).copied().unwrap_or(0)
    }

    /// Terms in increasing simplex index.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&s, &c)| (s, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self::from_terms(self.dim, self.iter().map(|(s, c)| (s, c * k)))
    }

    pub fn max_abs_coeff(&self) -> i64 {
        self.coeffs.values().map(|c| c.abs()).max().unwrap_or(0)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        assert_eq!(self.dim, other.dim, "adding chains of different dimension");
        let mut out = self.clone();
        for (s, c) in other.iter() {
            out.add_term(s, sign * c);
        }
        out
    }
}

impl Add for &IntChain {
    type Output = IntChain;
    fn add(self, o: &IntChain) -> IntChain {
        self.combine(o, 1)
    }
}

impl Sub for &IntChain {
    type Output = IntChain;
    fn sub(self, o: &IntChain) -> IntChain {
        self.combine(o, -1)
    }
}

impl Neg for &IntChain {
    type Output = IntChain;
    fn neg(self) -> IntChain {
        self.scaled(-1)
    }
}

/// Serialized as a JSON array of `[simplex_index, coefficient]` pairs.
impl Serialize for IntChain {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (k, v) in &self.coeffs {
            seq.serialize_element(&(k, v))?;
        }
        seq.end()
    }
}

impl IntChain {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chain serializes")
    }

    /// Parses `[[index, coeff], ...]`; the dimension is not part of the format.
    pub fn from_json(dim: usize, text: &str) -> Result<Self, serde_json::Error> {
        let pairs: Vec<(usize, i64)> = serde_json::from_str(text)?;
        Ok(Self::from_terms(dim, pairs))
    }
}
