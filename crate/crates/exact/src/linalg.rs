//! Rank, determinants, inverses, Smith normal form and cokernel invariants.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{ExactError, Result};
use crate::matrix::SparseMatrix;
use crate::scalar::{Ring, Scalar};

type IntVec = BTreeMap<usize, BigInt>;

/// Converts a column to an integer vector, clearing rational denominators.
fn integral_column(col: &BTreeMap<usize, Scalar>) -> Result<IntVec> {
    let mut lcm = BigInt::one();
    for v in col.values() {
        if let Scalar::Rat(q) = v {
            lcm = lcm.lcm(q.denom());
        }
    }
    col.iter()
        .map(|(&r, v)| {
            let n = match v {
                Scalar::Int(n) => n.clone(),
                Scalar::Rat(q) => q.numer() * (&lcm / q.denom()),
                Scalar::Poly(_) => {
                    return Err(ExactError::WrongRing {
                        expected: "int or rat",
                        got: v.ring(),
                    })
                }
            };
            Ok((r, n))
        })
        .collect()
}

fn remove_content(v: &mut IntVec) {
    let mut g = BigInt::zero();
    for x in v.values() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for x in v.values_mut() {
            *x /= &g;
        }
    }
}

/// `a*x + b*y` for sparse integer vectors.
fn combine(a: &BigInt, x: &IntVec, b: &BigInt, y: &IntVec) -> IntVec {
    let mut out = IntVec::new();
    if !a.is_zero() {
        for (&i, v) in x {
            out.insert(i, a * v);
        }
    }
    if !b.is_zero() {
        for (&i, v) in y {
            let e = out.entry(i).or_insert_with(BigInt::zero);
            *e += b * v;
            if e.is_zero() {
                out.remove(&i);
            }
        }
    }
    out
}

/// Row-echelon basis over the rationals kept with primitive integer vectors,
/// so elimination never leaves the integers.
#[derive(Clone, Debug, Default)]
pub struct RationalEchelon {
    pivots: BTreeMap<usize, IntVec>,
}

impl RationalEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the basis; returns true when it was independent.
    pub fn insert(&mut self, mut v: IntVec) -> bool {
        while let Some((&p, vp)) = v.iter().next() {
            match self.pivots.get(&p) {
                None => {
                    let vp = vp.clone();
                    if vp.is_negative() {
                        for x in v.values_mut() {
                            *x = -&*x;
                        }
                    }
                    remove_content(&mut v);
                    self.pivots.insert(p, v);
                    return true;
                }
                Some(b) => {
                    let bp = &b[&p];
                    let g = bp.gcd(vp);
                    let (sa, sb) = (bp / &g, -(vp / &g));
                    v = combine(&sa, &v, &sb, b);
                    remove_content(&mut v);
                }
            }
        }
        false
    }

    pub fn insert_column(&mut self, col: &BTreeMap<usize, Scalar>) -> Result<bool> {
        Ok(self.insert(integral_column(col)?))
    }
}

/// A basis of a sublattice of `Z^n` in echelon form, maintained with
/// unimodular updates so that the spanned lattice is exactly preserved.
#[derive(Clone, Debug, Default)]
pub struct LatticeEchelon {
    pivots: BTreeMap<usize, IntVec>,
}

impl LatticeEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn insert(&mut self, mut v: IntVec) {
        while let Some((&p, vp)) = v.iter().next() {
            let vp = vp.clone();
            let Some(b) = self.pivots.get_mut(&p) else {
                self.pivots.insert(p, v);
                return;
            };
            let bp = b[&p].clone();
            if vp.is_multiple_of(&bp) {
                let q = &vp / &bp;
                v = combine(&BigInt::one(), &v, &-q, b);
                continue;
            }
            // [s t; -v/g b/g] has determinant one
            let ext = bp.extended_gcd(&vp);
            let g = ext.gcd;
            let new_b = combine(&ext.x, b, &ext.y, &v);
            let new_v = combine(&(&bp / &g), &v, &-(&vp / &g), b);
            *b = new_b;
            v = new_v;
        }
    }

    pub fn insert_column(&mut self, col: &BTreeMap<usize, Scalar>) -> Result<()> {
        self.insert(integral_column(col)?);
        Ok(())
    }

    /// The basis vectors as dense rows of length `n`.
    pub fn dense_rows(&self, n: usize) -> Vec<Vec<BigInt>> {
        self.pivots
            .values()
            .map(|v| {
                let mut row = vec![BigInt::zero(); n];
                for (&i, x) in v {
                    row[i] = x.clone();
                }
                row
            })
            .collect()
    }
}

/// Fraction-free elimination on dense rows; returns the rank and, for square
/// input, the determinant (last pivot with sign).
fn bareiss(mut a: Vec<Vec<Scalar>>, ring: &Ring) -> Result<(usize, Scalar)> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = Scalar::one(ring);
    let mut rank = 0;
    let mut sign = false;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = !sign;
        }
        let pivot = a[rank][c].clone();
        for r in rank + 1..nrows {
            let f = a[r][c].clone();
            for j in c..ncols {
                let t = pivot.try_mul(&a[r][j])?.try_sub(&f.try_mul(&a[rank][j])?)?;
                a[r][j] = t.exact_div(&prev)?;
            }
        }
        prev = pivot;
        rank += 1;
    }
    let det = if nrows == ncols && rank == nrows {
        if sign {
            -prev
        } else {
            prev
        }
    } else {
        Scalar::zero(ring)
    };
    Ok((rank, det))
}

/// Rank over the fraction field of the matrix's ring.
pub fn rank(m: &SparseMatrix) -> Result<usize> {
    match m.ring() {
        Ring::Integer | Ring::Rational => {
            let mut ech = RationalEchelon::new();
            for col in m.columns() {
                ech.insert_column(col)?;
            }
            Ok(ech.rank())
        }
        Ring::Polynomial(_) => {
            // columns as rows: rank is transpose-invariant
            let rows = m.transpose().to_dense();
            Ok(bareiss(rows, m.ring())?.0)
        }
    }
}

pub fn determinant(m: &SparseMatrix) -> Result<Scalar> {
    if m.nrows() != m.ncols() {
        return Err(ExactError::Dimension(format!(
            "determinant of {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.nrows() == 0 {
        return Ok(Scalar::one(m.ring()));
    }
    if *m.ring() == Ring::Rational {
        // clear denominators row by row and divide back at the end
        let mut scale = Scalar::one(&Ring::Rational);
        let mut rows = Vec::new();
        for r in m.transpose().columns() {
            let ints = integral_column(r)?;
            let orig_first = r.iter().next();
            let mut row = vec![Scalar::zero(&Ring::Integer); m.ncols()];
            for (&i, x) in &ints {
                row[i] = Scalar::Int(x.clone());
            }
            if let Some((&i, v)) = orig_first {
                let s = Scalar::Rat(num_rational::BigRational::from_integer(ints[&i].clone()));
                scale = scale.try_mul(&s.exact_div(v)?)?;
            }
            rows.push(row);
        }
        let (_, det) = bareiss(rows, &Ring::Integer)?;
        return det.to_ring(&Ring::Rational)?.exact_div(&scale);
    }
    Ok(bareiss(m.to_dense(), m.ring())?.1)
}

/// Inverse over the matrix's own ring; fails unless the determinant is a unit.
pub fn inverse(m: &SparseMatrix) -> Result<SparseMatrix> {
    let n = m.nrows();
    let det = determinant(m)?;
    if !det.is_unit() {
        return Err(ExactError::NotInvertible(m.ring().clone()));
    }
    let dense = m.to_dense();
    let mut out = SparseMatrix::zeros(m.ring().clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            // inverse[i][j] = (-1)^(i+j) det(minor with row j and column i removed) / det
            let minor: Vec<Vec<Scalar>> = dense
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != i)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let sub = SparseMatrix::from_dense(m.ring().clone(), &minor)?;
            let mut cof = if n == 1 {
                Scalar::one(m.ring())
            } else {
                determinant(&sub)?
            };
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            out.set(i, j, cof.exact_div(&det)?)?;
        }
    }
    Ok(out)
}

/// Invariant factors `d1 | d2 | ...` of an integer matrix; the list has
/// `min(rows, cols)` entries, nonnegative, zeros last.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<Vec<BigInt>> {
    if *m.ring() != Ring::Integer {
        return Err(ExactError::WrongRing {
            expected: "int",
            got: m.ring().clone(),
        });
    }
    let dense: Vec<Vec<BigInt>> = m
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(|s| s.as_bigint().unwrap()).collect())
        .collect();
    let diag = smith_dense(dense, m.ncols());
    Ok(diag)
}

fn smith_dense(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<BigInt> {
    let nrows = a.len();
    let k = nrows.min(ncols);
    let mut diag = Vec::with_capacity(k);
    for t in 0..k {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..ncols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(t, i);
                    }
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if dirty {
                continue;
            }
            // enforce divisibility of the remaining block
            let p = a[t][t].clone();
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..ncols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag.resize(k, BigInt::zero());
    diag
}

/// Free rank and torsion coefficients of a finitely generated module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ModuleInvariants {
    pub free_rank: usize,
    /// Each entry at least 2, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl ModuleInvariants {
    pub fn free(rank: usize) -> Self {
        ModuleInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Builds invariants from arbitrary cyclic orders (0 means a free summand).
    pub fn from_cyclic(orders: &[BigInt]) -> Self {
        let free_rank = orders.iter().filter(|o| o.is_zero()).count();
        let nonzero: Vec<BigInt> = orders.iter().filter(|o| !o.is_zero()).cloned().collect();
        let n = nonzero.len();
        let mut a = vec![vec![BigInt::zero(); n]; n];
        for (i, o) in nonzero.into_iter().enumerate() {
            a[i][i] = o.abs();
        }
        let torsion = smith_dense(a, n).into_iter().filter(|d| *d > BigInt::one()).collect();
        ModuleInvariants { free_rank, torsion }
    }

    pub fn direct_sum(&self, other: &ModuleInvariants) -> Self {
        let mut orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        let mut out = ModuleInvariants::from_cyclic(&orders);
        orders.clear();
        out.free_rank = self.free_rank + other.free_rank;
        out
    }

    /// Direct sum of `n` copies.
    pub fn repeat(&self, n: usize) -> Self {
        let mut orders = Vec::new();
        for _ in 0..n {
            orders.extend(self.torsion.iter().cloned());
        }
        let mut out = ModuleInvariants::from_cyclic(&orders);
        out.free_rank = self.free_rank * n;
        out
    }

    /// Total number of cyclic summands; the dimension over a field.
    pub fn dimension(&self) -> usize {
        self.free_rank + self.torsion.len()
    }
}

impl fmt::Display for ModuleInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "free rank {}", self.free_rank)?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(ToString::to_string).collect();
            write!(f, ", torsion [{}]", t.join(", "))?;
        }
        Ok(())
    }
}

/// Invariants of `R^ambient / im(M)`.
///
/// Over the integers this is exact (Smith normal form); over the rationals the
/// torsion is empty; over polynomial rings only the rank over the fraction
/// field is reported as `free_rank`.
pub fn cokernel_invariants(m: &SparseMatrix, ambient_rank: usize) -> Result<ModuleInvariants> {
    if m.nrows() != ambient_rank {
        return Err(ExactError::Dimension(format!(
            "relation matrix has {} rows but the ambient module has rank {ambient_rank}",
            m.nrows()
        )));
    }
    match m.ring() {
        Ring::Integer => {
            let mut lat = LatticeEchelon::new();
            for col in m.columns() {
                lat.insert_column(col)?;
            }
            let rows = lat.dense_rows(ambient_rank);
            let r = rows.len();
            let diag = smith_dense(rows, ambient_rank);
            let torsion = diag.into_iter().filter(|d| *d > BigInt::one()).collect();
            Ok(ModuleInvariants {
                free_rank: ambient_rank - r,
                torsion,
            })
        }
        Ring::Rational | Ring::Polynomial(_) => Ok(ModuleInvariants::free(ambient_rank - rank(m)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[Vec<i64>]) -> SparseMatrix {
        SparseMatrix::from_ints(Ring::Integer, rows)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::identity(Ring::Rational, 3)).unwrap(), 3);
        assert_eq!(rank(&SparseMatrix::zeros(Ring::Integer, 2, 2)).unwrap(), 0);
        assert_eq!(rank(&ints(&[vec![2, 4], vec![1, 2]])).unwrap(), 1);
        assert_eq!(rank(&SparseMatrix::zeros(Ring::Integer, 0, 0)).unwrap(), 0);
    }

    #[test]
    fn polynomial_rank() {
        let r = Ring::polynomial(["h"]);
        let rr = r.clone();
        let p = |s: &str| Scalar::parse(&rr, s).unwrap();
        let m = SparseMatrix::from_dense(r.clone(), &[vec![p("h"), p("h^2")], vec![p("1"), p("h")]]).unwrap();
        assert_eq!(rank(&m).unwrap(), 1);
        let m2 = SparseMatrix::from_dense(r, &[vec![p("h"), p("1")], vec![p("1"), p("h")]]).unwrap();
        assert_eq!(rank(&m2).unwrap(), 2);
        assert_eq!(determinant(&m2).unwrap(), p("h^2 - 1"));
    }

    #[test]
    fn smith_examples() {
        assert_eq!(
            smith_normal_form(&SparseMatrix::identity(Ring::Integer, 2)).unwrap(),
            big(&[1, 1])
        );
        assert_eq!(smith_normal_form(&ints(&[vec![2]])).unwrap(), big(&[2]));
        assert_eq!(
            smith_normal_form(&ints(&[vec![2, 0], vec![0, 3]])).unwrap(),
            big(&[1, 6])
        );
        assert_eq!(
            smith_normal_form(&ints(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])).unwrap(),
            big(&[2, 6, 12])
        );
    }

    #[test]
    fn smith_product_matches_determinant() {
        let m = ints(&[vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]]);
        let det = determinant(&m).unwrap().as_bigint().unwrap();
        let prod: BigInt = smith_normal_form(&m).unwrap().iter().product();
        assert_eq!(prod, det.abs());
    }

    #[test]
    fn cokernel_examples() {
        let id = SparseMatrix::identity(Ring::Integer, 2);
        assert_eq!(cokernel_invariants(&id, 2).unwrap(), ModuleInvariants::free(0));
        let two = ints(&[vec![2]]);
        assert_eq!(
            cokernel_invariants(&two, 1).unwrap(),
            ModuleInvariants {
                free_rank: 0,
                torsion: big(&[2])
            }
        );
        let zero = SparseMatrix::zeros(Ring::Integer, 3, 0);
        assert_eq!(cokernel_invariants(&zero, 3).unwrap(), ModuleInvariants::free(3));
        assert!(cokernel_invariants(&zero, 2).is_err());
    }

    #[test]
    fn rational_determinant_and_inverse() {
        let q = Ring::Rational;
        let h = Scalar::parse(&q, "1/2").unwrap();
        let m = SparseMatrix::from_dense(
            q.clone(),
            &[
                vec![h.clone(), Scalar::from_int(&q, 1)],
                vec![Scalar::from_int(&q, 0), Scalar::from_int(&q, 3)],
            ],
        )
        .unwrap();
        assert_eq!(determinant(&m).unwrap(), Scalar::parse(&q, "3/2").unwrap());
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn integer_inverse_requires_unit_determinant() {
        let m = ints(&[vec![0, 1], vec![1, 0]]);
        assert!(m.mul(&inverse(&m).unwrap()).unwrap().is_identity());
        assert!(matches!(
            inverse(&ints(&[vec![2, 0], vec![0, 1]])),
            Err(ExactError::NotInvertible(_))
        ));
    }

    #[test]
    fn sums_of_invariants() {
        let a = ModuleInvariants::from_cyclic(&big(&[2, 0]));
        let b = ModuleInvariants::from_cyclic(&big(&[3]));
        assert_eq!(
            a.direct_sum(&b),
            ModuleInvariants {
                free_rank: 1,
                torsion: big(&[6])
            }
        );
        assert_eq!(a.repeat(2).torsion, big(&[2, 2]));
    }
}
