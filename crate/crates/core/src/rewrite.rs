//! Rewrite-rule normal forms in a truncated polynomial ring over the
//! rationals. Used as a second, independent route to the graded dimensions of
//! the unorientable module: each relation becomes a rule `leading monomial →
//! lower terms` under degree-lexicographic order, kept interreduced.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{structure, Result};
use crate::frobenius::FrobeniusAlgebra;
use bnskein_exact::Scalar;

/// Degree first, then exponents lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }
}

pub type Polynomial = BTreeMap<Monomial, BigRational>;

fn add_term(p: &mut Polynomial, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let entry = p.entry(m.clone()).or_insert_with(BigRational::zero);
    *entry += c;
    if entry.is_zero() {
        p.remove(&m);
    }
}

/// A confluent set of rules `lead → lead − rule`, every rule monic.
#[derive(Clone, Debug, Default)]
pub struct RewriteSystem {
    rules: BTreeMap<Monomial, Polynomial>,
}

impl RewriteSystem {
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Rewrites until no term is a rule's leading monomial.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let mut p = p.clone();
        loop {
            let hit = p
                .iter()
                .rev()
                .find(|(m, _)| self.rules.contains_key(*m))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = hit else {
                return p;
            };
            for (rm, rc) in &self.rules[&m] {
                add_term(&mut p, rm.clone(), -(&c * rc));
            }
        }
    }

    /// Adds a relation; returns whether it was new.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let nf = self.normal_form(p);
        let Some((lead, lc)) = nf.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) else {
            return false;
        };
        let rule: Polynomial = nf.into_iter().map(|(m, c)| (m, c / &lc)).collect();
        let single = RewriteSystem {
            rules: BTreeMap::from([(lead.clone(), rule.clone())]),
        };
        for r in self.rules.values_mut() {
            if r.contains_key(&lead) {
                *r = single.normal_form(r);
            }
        }
        self.rules.insert(lead, rule);
        true
    }
}

/// Monomials of total degree at most `max_degree` in `n` variables.
pub fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for prefix in out {
            let used: u32 = prefix.iter().sum();
            for a in 0..=max_degree - used {
                let mut v: Vec<u32> = prefix.clone();
                v.push(a);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(Monomial::new).collect()
}

fn rational(s: &Scalar) -> Result<BigRational> {
    match s {
        Scalar::Int(n) => Ok(BigRational::from_integer(n.clone())),
        Scalar::Rat(q) => Ok(q.clone()),
        Scalar::Poly(_) => Err(structure("rewrite normal forms need numeric structure constants")),
    }
}

/// `Σ Δ(e)` read in the symmetric algebra, minus `ε(𝔨 e)`, for each basis
/// vector `e`; assembled straight from the structure tensors.
pub fn symmetric_relations(alg: &FrobeniusAlgebra) -> Result<Vec<Polynomial>> {
    let r = alg.rank();
    let handle = alg.handle_element();
    let mut out = Vec::new();
    for e in 0..r {
        let mut p = Polynomial::new();
        for (a, b, c) in &alg.comul_tensor()[e] {
            let mut exps = vec![0u32; r];
            exps[*a] += 1;
            exps[*b] += 1;
            add_term(&mut p, Monomial::new(exps), rational(c)?);
        }
        // ε(𝔨·e) = Σ_{i,j} 𝔨_i m^j_{i e} ε_j
        let mut value = BigRational::zero();
        for (i, ki) in handle.coords.iter().enumerate() {
            for (j, mij) in alg.mul_tensor()[i][e].iter().enumerate() {
                value += rational(ki)? * rational(mij)? * rational(&alg.counit()[j])?;
            }
        }
        add_term(&mut p, Monomial::new(vec![0; r]), -value);
        out.push(p);
    }
    Ok(out)
}

/// `dim S_{≤D} / span{m · rel : deg m ≤ D − 2}` by rewriting.
pub fn truncated_dimension(alg: &FrobeniusAlgebra, max_degree: u32) -> Result<usize> {
    let r = alg.rank();
    let rels = symmetric_relations(alg)?;
    let mut system = RewriteSystem::default();
    if max_degree >= 2 {
        for m in monomials_up_to(r, max_degree - 2) {
            for rel in &rels {
                let shifted: Polynomial = rel.iter().map(|(k, c)| (k.times(&m), c.clone())).collect();
                system.insert(&shifted);
            }
        }
    }
    Ok(monomials_up_to(r, max_degree).len() - system.len())
}

/// Graded dimensions `dim Q_{≤d} − dim Q_{≤d−1}`, times `rank^n`.
pub fn graded_dimensions(alg: &FrobeniusAlgebra, n: u32, max_degree: u32) -> Result<Vec<(u32, usize)>> {
    let factor = alg.rank().pow(n);
    let mut prev = 0;
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let dim = truncated_dimension(alg, d)?;
        out.push((d, (dim - prev) * factor));
        prev = dim;
    }
    Ok(out)
}
