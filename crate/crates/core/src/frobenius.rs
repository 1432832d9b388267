//! Commutative Frobenius algebras of finite rank over an exact ring.
//!
//! Linear maps between tensor powers are matrices acting on column vectors.
//! A basis vector of `V^{⊗n}` is a multi-index `(i_1, ..., i_n)` stored at
//! position `Σ i_k r^{n-k}`, so the first factor is the most significant.

use std::collections::BTreeMap;
use std::fmt;

use bnskein_exact::{inverse, Ring, Scalar, SparseMatrix};
use num_bigint::BigInt;

use crate::error::{structure, Error, Result};

/// Decodes a flat index of `V^{⊗n}` into its multi-index.
pub fn decode(mut index: usize, r: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = index % r;
        index /= r;
    }
    out
}

pub fn encode(multi: &[usize], r: usize) -> usize {
    multi.iter().fold(0, |acc, &i| acc * r + i)
}

/// `A^{⊗n}`; the zeroth power is the 1x1 identity.
pub fn tensor_power(a: &SparseMatrix, n: usize) -> SparseMatrix {
    let mut out = SparseMatrix::identity(a.ring().clone(), 1);
    for _ in 0..n {
        out = out.kron(a).expect("same ring");
    }
    out
}

/// The permutation of `V^{⊗n}` sending factor `k` to position `perm[k]`.
pub fn permutation_matrix(ring: &Ring, r: usize, perm: &[usize]) -> SparseMatrix {
    let n = perm.len();
    let size = r.pow(n as u32);
    let one = Scalar::one(ring);
    let triplets = (0..size).map(|c| {
        let src = decode(c, r, n);
        let mut dst = vec![0; n];
        for (k, &p) in perm.iter().enumerate() {
            dst[p] = src[k];
        }
        (encode(&dst, r), c, one.clone())
    });
    SparseMatrix::from_triplets(ring.clone(), size, size, triplets).expect("in range")
}

/// One failed axiom together with the basis element on which the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub input: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on {}: {} != {}",
            self.axiom,
            self.input.join("⊗"),
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
    pub checked: Vec<&'static str>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        self.failures.iter().map(|f| f.axiom).collect()
    }
}

/// An element of `V` in coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Scalar>) -> Self {
        AlgebraElement { coords }
    }

    fn as_sparse(&self) -> BTreeMap<usize, Scalar> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    ring: Ring,
    basis: Vec<String>,
    unit: Vec<Scalar>,
    counit: Vec<Scalar>,
    /// `mul[i][j]` is the product `e_i e_j` in coordinates.
    mul: Vec<Vec<Vec<Scalar>>>,
    /// `comul[i]` lists `(j, k, c)` with `Δ(e_i) = Σ c e_j ⊗ e_k`.
    comul: Vec<Vec<(usize, usize, Scalar)>>,
    verified: bool,
    m: SparseMatrix,
    delta: SparseMatrix,
    eps: SparseMatrix,
    mu: SparseMatrix,
    handle: SparseMatrix,
}

impl PartialEq for FrobeniusAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.basis == other.basis
            && self.unit == other.unit
            && self.counit == other.counit
            && self.mul == other.mul
            && self.delta == other.delta
    }
}

impl FrobeniusAlgebra {
    /// Assembles an algebra from structure tensors. When `comul` is `None` it
    /// is derived from the pairing `ε∘m`. The result is not yet verified.
    pub fn new(
        ring: Ring,
        basis: Vec<String>,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
        mul: Vec<Vec<Vec<Scalar>>>,
        comul: Option<Vec<Vec<(usize, usize, Scalar)>>>,
    ) -> Result<Self> {
        let r = basis.len();
        if r == 0 {
            return Err(structure("algebra rank must be positive"));
        }
        let check_len = |what: &str, v: &[Scalar]| -> Result<()> {
            if v.len() != r {
                return Err(structure(format!("{what} has {} entries, expected {r}", v.len())));
            }
            for s in v {
                if s.ring() != ring {
                    return Err(structure(format!("{what} entry {s} is not in {ring}")));
                }
            }
            Ok(())
        };
        check_len("unit", &unit)?;
        check_len("counit", &counit)?;
        if mul.len() != r {
            return Err(structure(format!("mul has {} rows, expected {r}", mul.len())));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != r {
                return Err(structure(format!("mul[{i}] has {} entries, expected {r}", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                check_len(&format!("mul[{i}][{j}]"), v)?;
            }
        }
        let m = mul_matrix(&ring, &mul);
        let eps = SparseMatrix::from_dense(ring.clone(), std::slice::from_ref(&counit))?;
        let mu = SparseMatrix::from_dense(ring.clone(), &unit.iter().map(|u| vec![u.clone()]).collect::<Vec<_>>())?;
        let comul = match comul {
            Some(c) => {
                if c.len() != r {
                    return Err(structure(format!("comul has {} entries, expected {r}", c.len())));
                }
                for (i, terms) in c.iter().enumerate() {
                    for (j, k, s) in terms {
                        if *j >= r || *k >= r || s.ring() != ring {
                            return Err(structure(format!("comul[{i}] has an invalid term")));
                        }
                    }
                }
                c
            }
            None => derive_comul(&ring, &mul, &counit)?,
        };
        let delta = comul_matrix(&ring, r, &comul)?;
        let mut alg = FrobeniusAlgebra {
            ring,
            basis,
            unit,
            counit,
            mul,
            comul,
            verified: false,
            m,
            delta,
            eps,
            mu,
            handle: SparseMatrix::zeros(Ring::Integer, 0, 0),
        };
        let k = alg.handle_element();
        alg.handle = alg.multiplication_by(&k);
        Ok(alg)
    }

    /// Runs the axiom check and marks the algebra verified, or reports the first failure.
    pub fn into_verified(mut self) -> Result<Self> {
        let report = self.verify_axioms();
        if let Some(f) = report.failures.first() {
            return Err(Error::Axiom {
                axiom: f.axiom.to_string(),
                witness: f.to_string(),
            });
        }
        self.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn mul_tensor(&self) -> &[Vec<Vec<Scalar>>] {
        &self.mul
    }

    pub fn comul_tensor(&self) -> &[Vec<(usize, usize, Scalar)>] {
        &self.comul
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// `m: V⊗V → V`.
    pub fn m(&self) -> &SparseMatrix {
        &self.m
    }

    /// `Δ: V → V⊗V`.
    pub fn delta(&self) -> &SparseMatrix {
        &self.delta
    }

    /// `ε: V → R`.
    pub fn eps(&self) -> &SparseMatrix {
        &self.eps
    }

    /// `μ: R → V`.
    pub fn mu(&self) -> &SparseMatrix {
        &self.mu
    }

    /// The handle operator `𝔨`, multiplication by `m∘Δ(1)`.
    pub fn handle(&self) -> &SparseMatrix {
        &self.handle
    }

    pub fn id(&self) -> SparseMatrix {
        SparseMatrix::identity(self.ring.clone(), self.rank())
    }

    pub fn id_n(&self, n: usize) -> SparseMatrix {
        SparseMatrix::identity(self.ring.clone(), self.rank().pow(n as u32))
    }

    pub fn element(&self, coords: &[i64]) -> AlgebraElement {
        AlgebraElement::new(coords.iter().map(|&c| Scalar::from_int(&self.ring, c)).collect())
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut coords = vec![Scalar::zero(&self.ring); self.rank()];
        coords[i] = Scalar::one(&self.ring);
        AlgebraElement::new(coords)
    }

    pub fn unit_element(&self) -> AlgebraElement {
        AlgebraElement::new(self.unit.clone())
    }

    fn check_element(&self, a: &AlgebraElement) -> Result<()> {
        if a.coords.len() != self.rank() {
            return Err(structure(format!(
                "element has {} coordinates, algebra rank is {}",
                a.coords.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        let mut out = vec![Scalar::zero(&self.ring); self.rank()];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.try_mul(y)?;
                for (k, c) in self.mul[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].try_add(&xy.try_mul(c)?)?;
                    }
                }
            }
        }
        Ok(AlgebraElement::new(out))
    }

    /// `Δ(a)` as a sparse map from basis pairs to coefficients.
    pub fn comultiply(&self, a: &AlgebraElement) -> Result<BTreeMap<(usize, usize), Scalar>> {
        self.check_element(a)?;
        let v = self.delta.apply(&a.as_sparse())?;
        let r = self.rank();
        Ok(v.into_iter().map(|(idx, c)| ((idx / r, idx % r), c)).collect())
    }

    pub fn counit_of(&self, a: &AlgebraElement) -> Result<Scalar> {
        self.check_element(a)?;
        let mut s = Scalar::zero(&self.ring);
        for (x, e) in a.coords.iter().zip(&self.counit) {
            s = s.try_add(&x.try_mul(e)?)?;
        }
        Ok(s)
    }

    /// `m∘Δ(1)`.
    pub fn handle_element(&self) -> AlgebraElement {
        let v = self
            .m
            .mul(&self.delta)
            .and_then(|md| md.apply(&self.unit_element().as_sparse()))
            .expect("structure maps have matching shapes");
        let mut coords = vec![Scalar::zero(&self.ring); self.rank()];
        for (i, c) in v {
            coords[i] = c;
        }
        AlgebraElement::new(coords)
    }

    pub fn handle_apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.multiply(&self.handle_element(), a)
    }

    /// The matrix of `v ↦ a·v`.
    pub fn multiplication_by(&self, a: &AlgebraElement) -> SparseMatrix {
        let r = self.rank();
        let mut out = SparseMatrix::zeros(self.ring.clone(), r, r);
        for j in 0..r {
            let p = self.multiply(a, &self.basis_element(j)).expect("same algebra");
            for (i, c) in p.coords.into_iter().enumerate() {
                out.add_entry(i, j, c).expect("in range");
            }
        }
        out
    }

    pub fn handle_pow(&self, n: usize) -> SparseMatrix {
        let mut out = self.id();
        for _ in 0..n {
            out = self.handle.mul(&out).expect("square");
        }
        out
    }

    /// `d_0 = ε`, `d_1 = Id`, `d_n = (Δ ⊗ Id^{⊗(n-2)}) ∘ d_{n-1}`.
    pub fn d_n(&self, n: usize) -> SparseMatrix {
        if n == 0 {
            return self.eps.clone();
        }
        let mut out = self.id();
        for k in 2..=n {
            let step = self.delta.kron(&self.id_n(k - 2)).expect("same ring");
            out = step.mul(&out).expect("shapes agree");
        }
        out
    }

    /// `ε^1 = Id`, `ε^n = ε^{n-1} ∘ (ε ⊗ Id^{⊗(n-1)})`.
    pub fn eps_n(&self, n: usize) -> SparseMatrix {
        assert!(n >= 1, "eps_n needs n ≥ 1");
        let mut out = self.id();
        for k in 2..=n {
            let step = self.eps.kron(&self.id_n(k - 1)).expect("same ring");
            out = out.mul(&step).expect("shapes agree");
        }
        out
    }

    /// `m_0 = μ`, `m_1 = Id`, `m_n = m_{n-1} ∘ (m ⊗ Id^{⊗(n-2)})`.
    pub fn m_n(&self, n: usize) -> SparseMatrix {
        if n == 0 {
            return self.mu.clone();
        }
        let mut out = self.id();
        for k in 2..=n {
            let step = self.m.kron(&self.id_n(k - 2)).expect("same ring");
            out = out.mul(&step).expect("shapes agree");
        }
        out
    }

    /// The pairing `𝔭 = ε∘m` as its Gram matrix.
    pub fn gram(&self) -> SparseMatrix {
        let r = self.rank();
        let em = self.eps.mul(&self.m).expect("shapes agree");
        let mut g = SparseMatrix::zeros(self.ring.clone(), r, r);
        for i in 0..r {
            for j in 0..r {
                g.add_entry(i, j, em.get(0, i * r + j)).expect("in range");
            }
        }
        g
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        let r = self.rank();
        let id = self.id();
        let swap = permutation_matrix(&self.ring, r, &[1, 0]);
        let k = |a: &SparseMatrix, b: &SparseMatrix| a.kron(b).expect("same ring");
        let c = |a: &SparseMatrix, b: &SparseMatrix| a.mul(b).expect("shapes agree");
        let (m, delta, eps, mu) = (&self.m, &self.delta, &self.eps, &self.mu);
        let dm = c(delta, m);
        let checks: Vec<(&'static str, usize, usize, SparseMatrix, SparseMatrix)> = vec![
            ("associativity", 3, 1, c(m, &k(m, &id)), c(m, &k(&id, m))),
            ("commutativity", 2, 1, c(m, &swap), m.clone()),
            ("left unit", 1, 1, c(m, &k(mu, &id)), id.clone()),
            ("right unit", 1, 1, c(m, &k(&id, mu)), id.clone()),
            (
                "coassociativity",
                1,
                3,
                c(&k(delta, &id), delta),
                c(&k(&id, delta), delta),
            ),
            ("cocommutativity", 1, 2, c(&swap, delta), delta.clone()),
            ("left counit", 1, 1, c(&k(eps, &id), delta), id.clone()),
            ("right counit", 1, 1, c(&k(&id, eps), delta), id.clone()),
            (
                "frobenius (m⊗Id)(Id⊗Δ)",
                2,
                2,
                c(&k(m, &id), &k(&id, delta)),
                dm.clone(),
            ),
            (
                "frobenius (Id⊗m)(Δ⊗Id)",
                2,
                2,
                c(&k(&id, m), &k(delta, &id)),
                dm.clone(),
            ),
            (
                "weak frobenius (Id⊗𝔨)Δ",
                1,
                2,
                c(&k(&id, &self.handle), delta),
                c(delta, &self.handle),
            ),
        ];
        let mut report = AxiomReport::default();
        for (name, arity, out_arity, lhs, rhs) in checks {
            report.checked.push(name);
            if let Some(col) = (0..lhs.ncols()).find(|&j| lhs.column(j) != rhs.column(j)) {
                report.failures.push(AxiomFailure {
                    axiom: name,
                    input: decode(col, r, arity)
                        .into_iter()
                        .map(|i| self.basis[i].clone())
                        .collect(),
                    lhs: self.format_tensor(lhs.column(col), out_arity),
                    rhs: self.format_tensor(rhs.column(col), out_arity),
                });
            }
        }
        report
    }

    /// Renders a sparse vector of `V^{⊗n}` as a sum of basis tensors.
    pub fn format_tensor(&self, v: &BTreeMap<usize, Scalar>, n: usize) -> String {
        if v.is_empty() {
            return "0".to_string();
        }
        let r = self.rank();
        let terms: Vec<String> = v
            .iter()
            .map(|(&idx, c)| {
                let word = if n == 0 {
                    "1".to_string()
                } else {
                    decode(idx, r, n)
                        .into_iter()
                        .map(|i| self.basis[i].clone())
                        .collect::<Vec<_>>()
                        .join("⊗")
                };
                if c.is_one() {
                    word
                } else {
                    format!("({c})*{word}")
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// The same algebra over another ring (coefficients must be representable).
    pub fn to_ring(&self, target: &Ring) -> Result<FrobeniusAlgebra> {
        self.map_scalars(target, |s| s.to_ring(target).map_err(Error::from))
    }

    /// Evaluates polynomial structure constants at integer values.
    pub fn specialize(&self, values: &[i64]) -> Result<FrobeniusAlgebra> {
        let vals: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        if vals.len() != self.ring.vars().len() {
            return Err(structure(format!(
                "{} values supplied for {} variables",
                vals.len(),
                self.ring.vars().len()
            )));
        }
        self.map_scalars(&Ring::Integer, |s| Ok(s.specialize(&vals)))
    }

    fn map_scalars(&self, target: &Ring, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<FrobeniusAlgebra> {
        let map_vec = |v: &[Scalar]| v.iter().map(&f).collect::<Result<Vec<_>>>();
        let mul = self
            .mul
            .iter()
            .map(|row| row.iter().map(|v| map_vec(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let comul = self
            .comul
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(j, k, c)| Ok((*j, *k, f(c)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let alg = FrobeniusAlgebra::new(
            target.clone(),
            self.basis.clone(),
            map_vec(&self.unit)?,
            map_vec(&self.counit)?,
            mul,
            Some(comul),
        )?;
        if self.verified {
            alg.into_verified()
        } else {
            Ok(alg)
        }
    }
}

fn mul_matrix(ring: &Ring, mul: &[Vec<Vec<Scalar>>]) -> SparseMatrix {
    let r = mul.len();
    let mut m = SparseMatrix::zeros(ring.clone(), r, r * r);
    for (i, row) in mul.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            for (k, c) in v.iter().enumerate() {
                m.add_entry(k, i * r + j, c.clone()).expect("in range");
            }
        }
    }
    m
}

fn comul_matrix(ring: &Ring, r: usize, comul: &[Vec<(usize, usize, Scalar)>]) -> Result<SparseMatrix> {
    let mut d = SparseMatrix::zeros(ring.clone(), r * r, r);
    for (i, terms) in comul.iter().enumerate() {
        for (j, k, c) in terms {
            d.add_entry(j * r + k, i, c.clone())?;
        }
    }
    Ok(d)
}

/// Comultiplication forced by the pairing: with Gram matrix
/// `G_ij = ε(e_i e_j)`, `Δ(v) = Σ_ij (G^{-1})_ij (v e_i) ⊗ e_j`.
pub fn derive_comul(
    ring: &Ring,
    mul: &[Vec<Vec<Scalar>>],
    counit: &[Scalar],
) -> Result<Vec<Vec<(usize, usize, Scalar)>>> {
    let r = mul.len();
    let mut gram = SparseMatrix::zeros(ring.clone(), r, r);
    for i in 0..r {
        for j in 0..r {
            let mut s = Scalar::zero(ring);
            for (k, e) in counit.iter().enumerate() {
                s = s.try_add(&mul[i][j][k].try_mul(e)?)?;
            }
            gram.add_entry(i, j, s)?;
        }
    }
    let ginv = inverse(&gram).map_err(|_| Error::DegeneratePairing(ring.to_string()))?;
    let mut out = Vec::with_capacity(r);
    for v in 0..r {
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (i, row) in mul[v].iter().enumerate() {
            for j in 0..r {
                let g = ginv.get(i, j);
                if g.is_zero() {
                    continue;
                }
                for (a, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let e = acc.entry((a, j)).or_insert_with(|| Scalar::zero(ring));
                    *e = e.try_add(&c.try_mul(&g)?)?;
                }
            }
        }
        out.push(
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((a, b), c)| (a, b, c))
                .collect(),
        );
    }
    Ok(out)
}

pub const BUILTIN_NAMES: [&str; 4] = ["trivial", "khovanov", "homology_s2", "universal_quadratic"];

/// The built-in algebras, verified.
pub fn builtin(name: &str) -> Result<FrobeniusAlgebra> {
    let ints = |ring: &Ring, v: &[i64]| v.iter().map(|&x| Scalar::from_int(ring, x)).collect::<Vec<_>>();
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let alg = match name {
        "trivial" => {
            let z = Ring::Integer;
            FrobeniusAlgebra::new(
                z.clone(),
                names(&["1"]),
                ints(&z, &[1]),
                ints(&z, &[1]),
                vec![vec![ints(&z, &[1])]],
                None,
            )?
        }
        "khovanov" => {
            // R[x]/(x^2), ε(1) = 0, ε(x) = 1
            let z = Ring::Integer;
            FrobeniusAlgebra::new(
                z.clone(),
                names(&["1", "x"]),
                ints(&z, &[1, 0]),
                ints(&z, &[0, 1]),
                vec![
                    vec![ints(&z, &[1, 0]), ints(&z, &[0, 1])],
                    vec![ints(&z, &[0, 1]), ints(&z, &[0, 0])],
                ],
                None,
            )?
        }
        "homology_s2" => {
            // H_*(S^2): pt is the class of a point, b the fundamental class and unit
            let z = Ring::Integer;
            FrobeniusAlgebra::new(
                z.clone(),
                names(&["pt", "b"]),
                ints(&z, &[0, 1]),
                ints(&z, &[1, 0]),
                vec![
                    vec![ints(&z, &[0, 0]), ints(&z, &[1, 0])],
                    vec![ints(&z, &[1, 0]), ints(&z, &[0, 1])],
                ],
                Some(vec![
                    vec![(0, 0, Scalar::from_int(&z, 1))],
                    vec![(0, 1, Scalar::from_int(&z, 1)), (1, 0, Scalar::from_int(&z, 1))],
                ]),
            )?
        }
        "universal_quadratic" => {
            // Z[h,t][x]/(x^2 - h x - t), ε(1) = 0, ε(x) = 1
            let p = Ring::polynomial(["h", "t"]);
            let s = |e: &str| Scalar::parse(&p, e).expect("literal");
            FrobeniusAlgebra::new(
                p.clone(),
                names(&["1", "x"]),
                vec![s("1"), s("0")],
                vec![s("0"), s("1")],
                vec![
                    vec![vec![s("1"), s("0")], vec![s("0"), s("1")]],
                    vec![vec![s("0"), s("1")], vec![s("t"), s("h")]],
                ],
                None,
            )?
        }
        other => return Err(structure(format!("unknown built-in algebra {other:?}"))),
    };
    alg.into_verified()
}
