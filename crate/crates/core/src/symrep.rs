//! Representations of `S_n` given by matrices for the adjacent transpositions.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_partitions, factorial, standard_tableaux, Partition, Tableau, Tabloid};
use crate::error::{Error, Result};
use crate::linalg::{
    close_space, quotient_from_space, require_semisimple, EchelonSpace, Field, Matrix, Quotient, SparseMatrix,
};
use crate::perm::Perm;

/// Label attached to a basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisLabel {
    Index {
        index: usize,
    },
    Tabloid {
        tabloid: Tabloid,
    },
    Tableau {
        tableau: Tableau,
    },
    /// `c_T ⊗ v`, where `coset` is the image `T` of the last `k` points under
    /// the coset representative (1-based, sorted).
    Induced {
        coset: Vec<usize>,
        inner: Box<BasisLabel>,
    },
    /// The image in a quotient of an ambient basis vector.
    Quotient {
        of: Box<BasisLabel>,
    },
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Index { index } => write!(f, "#{index}"),
            BasisLabel::Tabloid { tabloid } => {
                write!(f, "{}", Tableau::new(tabloid.rows().to_vec()).map_err(|_| fmt::Error)?)
            }
            BasisLabel::Tableau { tableau } => write!(f, "{tableau}"),
            BasisLabel::Induced { coset, inner } => write!(f, "{coset:?}⊗{inner}"),
            BasisLabel::Quotient { of } => write!(f, "[{of}]"),
        }
    }
}

/// The character of `S_k` used on the second factor of `S_n × S_k` when inducing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Twist {
    Trivial,
    Sign,
}

/// A representation of `S_n`: `gens[i]` is the action of `(i+1, i+2)`.
#[derive(Clone)]
pub struct SymRep<K: Field> {
    field: K,
    n: usize,
    labels: Vec<BasisLabel>,
    gens: Vec<Matrix<K>>,
    sparse: Vec<SparseMatrix<K>>,
}

impl<K: Field> fmt::Debug for SymRep<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymRep(S_{}, dim {}, {})", self.n, self.dim(), self.field.spec())
    }
}

impl<K: Field> SymRep<K> {
    /// Checks shapes only; use [`SymRep::check_coxeter`] for the relations.
    pub fn new(field: &K, n: usize, labels: Vec<BasisLabel>, gens: Vec<Matrix<K>>) -> Result<Self> {
        let dim = labels.len();
        if gens.len() != n.saturating_sub(1) {
            return Err(Error::InvalidRepresentation(format!(
                "S_{n} needs {} generators, got {}",
                n.saturating_sub(1),
                gens.len()
            )));
        }
        for g in &gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::InvalidRepresentation(format!(
                    "generator is {}x{} but dimension is {dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            if g.field() != field {
                return Err(Error::MixedField(g.field().spec().to_string(), field.spec().to_string()));
            }
        }
        let sparse = gens.iter().map(SparseMatrix::from_dense).collect();
        Ok(SymRep { field: field.clone(), n, labels, gens, sparse })
    }

    pub fn trivial(field: &K, n: usize) -> Self {
        let gens = (1..n).map(|_| Matrix::identity(field, 1)).collect();
        Self::new(field, n, vec![BasisLabel::Index { index: 0 }], gens).unwrap()
    }

    pub fn sign(field: &K, n: usize) -> Self {
        Self::trivial(field, n).tensor_sign()
    }

    /// The zero representation of `S_n`.
    pub fn zero(field: &K, n: usize) -> Self {
        let gens = (1..n).map(|_| Matrix::zeros(field, 0, 0)).collect();
        Self::new(field, n, Vec::new(), gens).unwrap()
    }

    /// The permutation representation on symbols `[1], ..., [n]`.
    pub fn permutation(field: &K, n: usize) -> Self {
        let gens = (1..n)
            .map(|i| {
                let mut g = Matrix::zeros(field, n, n);
                for j in 0..n {
                    let img = if j + 1 == i {
                        i
                    } else if j == i {
                        i - 1
                    } else {
                        j
                    };
                    g.set(img, j, field.one());
                }
                g
            })
            .collect();
        let labels = (0..n).map(|index| BasisLabel::Index { index: index + 1 }).collect();
        Self::new(field, n, labels, gens).unwrap()
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    /// The `n` of `S_n`.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn gens(&self) -> &[Matrix<K>] {
        &self.gens
    }

    /// Action of `s_i = (i, i+1)`, 1-based.
    pub fn gen(&self, i: usize) -> &Matrix<K> {
        &self.gens[i - 1]
    }

    pub(crate) fn sparse_gen(&self, i: usize) -> &SparseMatrix<K> {
        &self.sparse[i - 1]
    }

    /// Verifies `s_i^2 = 1`, `(s_i s_{i+1})^3 = 1` and `s_i s_j = s_j s_i` for `|i - j| >= 2`.
    pub fn check_coxeter(&self) -> Result<()> {
        let m = self.gens.len();
        for i in 0..m {
            let sq = self.sparse[i].right_mul(&self.gens[i]);
            if !sq.is_identity() {
                return Err(Error::InvalidRepresentation(format!("s_{}^2 != 1", i + 1)));
            }
            if i + 1 < m {
                let prod = self.sparse[i].right_mul(&self.gens[i + 1]);
                let cube = prod.mul(&prod)?.mul(&prod)?;
                if !cube.is_identity() {
                    return Err(Error::InvalidRepresentation(format!("(s_{} s_{})^3 != 1", i + 1, i + 2)));
                }
            }
            for j in i + 2..m {
                let a = self.sparse[i].right_mul(&self.gens[j]);
                let b = self.sparse[j].right_mul(&self.gens[i]);
                if a != b {
                    return Err(Error::InvalidRepresentation(format!("s_{} and s_{} do not commute", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    fn check_perm(&self, sigma: &Perm) -> Result<()> {
        if sigma.degree() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "permutation of degree {} acting on a representation of S_{}",
                sigma.degree(),
                self.n
            )));
        }
        Ok(())
    }

    /// The matrix of `sigma`, as the product of generators along its
    /// bubble-sort word.
    pub fn apply_permutation(&self, sigma: &Perm) -> Result<Matrix<K>> {
        self.check_perm(sigma)?;
        let mut acc = Matrix::identity(&self.field, self.dim());
        // sigma = s_{w_1} ... s_{w_k}; accumulate from the left.
        for &i in &sigma.adjacent_word() {
            acc = self.sparse[i - 1].left_mul(&acc);
        }
        Ok(acc)
    }

    /// `sigma · v`.
    pub fn act_vec(&self, sigma: &Perm, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        self.check_perm(sigma)?;
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch("vector length vs representation dimension".into()));
        }
        let mut w = v.to_vec();
        for &i in sigma.adjacent_word().iter().rev() {
            w = self.sparse[i - 1].mul_vec(&w);
        }
        Ok(w)
    }

    /// Same space, generators of `S_m` only.
    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.n {
            return Err(Error::InvalidRepresentation(format!("cannot restrict S_{} to S_{m}", self.n)));
        }
        Self::new(&self.field, m, self.labels.clone(), self.gens[..m - 1].to_vec())
    }

    /// `V ⊗ sign`: every adjacent transposition is odd, so generators are negated.
    pub fn tensor_sign(&self) -> Self {
        let gens = self.gens.iter().map(Matrix::neg).collect();
        Self::new(&self.field, self.n, self.labels.clone(), gens).unwrap()
    }

    /// Traces at the class representatives, in `enumerate_partitions(n)` order.
    pub fn character(&self) -> Character<K> {
        let values = enumerate_partitions(self.n)
            .into_iter()
            .map(|lambda| {
                let rep = Perm::class_representative(&lambda);
                let trace = self.trace_of(&rep);
                (lambda, trace)
            })
            .collect();
        Character { field: self.field.clone(), n: self.n, values }
    }

    fn trace_of(&self, sigma: &Perm) -> K::Elem {
        let f = &self.field;
        let word = sigma.adjacent_word();
        let mut total = f.zero();
        for j in 0..self.dim() {
            let mut w = vec![f.zero(); self.dim()];
            w[j] = f.one();
            for &i in word.iter().rev() {
                w = self.sparse[i - 1].mul_vec(&w);
            }
            total = f.add(&total, &w[j]);
        }
        total
    }

    /// Representation on the span of the given independent columns, which must
    /// be invariant. Returns the representation and its inclusion matrix.
    pub fn subrepresentation(&self, basis: &Matrix<K>) -> Result<Self> {
        if basis.rows() != self.dim() {
            return Err(Error::DimensionMismatch("subspace basis length".into()));
        }
        if basis.rank() != basis.cols() {
            return Err(Error::DimensionMismatch("subspace basis is not independent".into()));
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.sparse {
            let image = g.right_mul(basis);
            let action = basis.solve(&image)?.ok_or(Error::InvalidSubrepresentation)?;
            gens.push(action);
        }
        let labels = (0..basis.cols()).map(|index| BasisLabel::Index { index }).collect();
        Self::new(&self.field, self.n, labels, gens)
    }

    /// `V / U` for an invariant subspace `U` given by spanning columns.
    pub fn quotient(&self, subspace: &Matrix<K>) -> Result<(Self, Quotient<K>)> {
        let mut space = EchelonSpace::new(&self.field, self.dim());
        for c in 0..subspace.cols() {
            space.insert(subspace.column(c));
        }
        self.quotient_by_space(&space)
    }

    pub(crate) fn quotient_by_space(&self, space: &EchelonSpace<K>) -> Result<(Self, Quotient<K>)> {
        for g in &self.sparse {
            for row in space.basis_rows() {
                if !space.contains(&g.mul_vec(row)) {
                    return Err(Error::InvalidSubrepresentation);
                }
            }
        }
        let quot = quotient_from_space(space);
        let gens =
            self.sparse.iter().map(|g| quot.projection.mul(&g.right_mul(&quot.section))).collect::<Result<Vec<_>>>()?;
        let labels = quot
            .representatives
            .iter()
            .map(|&c| BasisLabel::Quotient { of: Box::new(self.labels[c].clone()) })
            .collect();
        Ok((Self::new(&self.field, self.n, labels, gens)?, quot))
    }

    /// Smallest invariant subspace containing the given vectors.
    pub fn span_of_orbit(&self, seed: Vec<Vec<K::Elem>>) -> Result<EchelonSpace<K>> {
        close_space(&self.field, self.dim(), seed, &self.gens)
    }

    /// `Ind_{S_n × S_k}^{S_{n+k}} V ⊠ χ` with the canonical (shuffle) transversal.
    pub fn induce(&self, k: usize, twist: Twist) -> Induced<K> {
        let n = self.n;
        let cosets = k_subsets(n + k, k);
        let reps = cosets.iter().map(|t| shuffle_representative(n, k, t)).collect();
        Induced::build(self, k, twist, cosets, reps).expect("canonical transversal is valid")
    }

    /// Induction using an arbitrary transversal: `reps[i]` must map the last
    /// `k` points onto the `i`-th subset in lexicographic order.
    pub fn induce_with_transversal(&self, k: usize, twist: Twist, reps: Vec<Perm>) -> Result<Induced<K>> {
        let cosets = k_subsets(self.n + k, k);
        Induced::build(self, k, twist, cosets, reps)
    }

    pub fn to_document(&self) -> SymRepDocument {
        SymRepDocument {
            n: self.n,
            dim: self.dim(),
            field: self.field.spec().to_string(),
            labels: self.labels.clone(),
            generators: self.gens.iter().map(Matrix::to_string_rows).collect(),
        }
    }

    pub fn from_document(field: &K, doc: &SymRepDocument) -> Result<Self> {
        if doc.field != field.spec().to_string() {
            return Err(Error::MixedField(doc.field.clone(), field.spec().to_string()));
        }
        if doc.labels.len() != doc.dim {
            return Err(Error::DimensionMismatch("label count differs from dim".into()));
        }
        let gens =
            doc.generators.iter().map(|g| Matrix::from_string_rows(field, g, doc.dim)).collect::<Result<Vec<_>>>()?;
        Self::new(field, doc.n, doc.labels.clone(), gens)
    }
}

/// Serialized form of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymRepDocument {
    pub n: usize,
    pub dim: usize,
    pub field: String,
    pub labels: Vec<BasisLabel>,
    pub generators: Vec<Vec<Vec<String>>>,
}

/// Sorted `k`-subsets of `{1..m}` in lexicographic order.
pub fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for x in start..=m {
            if m - x + 1 < k - acc.len() {
                break;
            }
            acc.push(x);
            rec(m, k, x + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, 1, &mut Vec::new(), &mut out);
    out
}

/// The minimal-length representative of the coset of `S_n × S_k` sending
/// `{n+1..n+k}` onto `subset`: order-preserving on both blocks.
pub fn shuffle_representative(n: usize, k: usize, subset: &[usize]) -> Perm {
    let m = n + k;
    let mut in_subset = vec![false; m + 1];
    for &x in subset {
        in_subset[x] = true;
    }
    let complement: Vec<usize> = (1..=m).filter(|&x| !in_subset[x]).collect();
    let images: Vec<usize> = complement.iter().chain(subset).copied().collect();
    Perm::from_one_based(&images).expect("shuffle is a permutation")
}

/// An induced representation with the data needed to act by arbitrary
/// permutations without multiplying out generator matrices.
#[derive(Clone, Debug)]
pub struct Induced<K: Field> {
    pub rep: SymRep<K>,
    pub base: Arc<SymRep<K>>,
    pub k: usize,
    pub twist: Twist,
    pub cosets: Vec<Vec<usize>>,
    reps: Vec<Perm>,
    coset_index: HashMap<Vec<usize>, usize>,
}

impl<K: Field> Induced<K> {
    fn build(base: &SymRep<K>, k: usize, twist: Twist, cosets: Vec<Vec<usize>>, reps: Vec<Perm>) -> Result<Self> {
        let n = base.n;
        let m = n + k;
        if reps.len() != cosets.len() {
            return Err(Error::InvalidPermutation("transversal has the wrong size".into()));
        }
        for (t, r) in cosets.iter().zip(&reps) {
            let mut img: Vec<usize> = (n + 1..=m).map(|x| r.apply(x)).collect();
            img.sort_unstable();
            if r.degree() != m || img != *t {
                return Err(Error::InvalidPermutation(format!("{r} does not represent coset {t:?}")));
            }
        }
        let coset_index: HashMap<Vec<usize>, usize> = cosets.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let f = base.field().clone();
        let d = base.dim();
        let dim = cosets.len() * d;
        let mut cache: HashMap<Perm, Matrix<K>> = HashMap::new();
        let mut gens = Vec::with_capacity(m.saturating_sub(1));
        for i in 1..m {
            let s = Perm::adjacent(m, i);
            let mut g = Matrix::zeros(&f, dim, dim);
            for (ci, r) in reps.iter().enumerate() {
                let (cj, h1, sgn) = factor_through(&s, r, n, &reps, &coset_index, twist);
                let block = match cache.get(&h1) {
                    Some(b) => b.clone(),
                    None => {
                        let b = base.apply_permutation(&h1)?;
                        cache.insert(h1.clone(), b.clone());
                        b
                    }
                };
                for a in 0..d {
                    for b in 0..d {
                        let x = block.get(a, b);
                        if !f.is_zero(x) {
                            let v = if sgn < 0 { f.neg(x) } else { x.clone() };
                            g.set(cj * d + a, ci * d + b, v);
                        }
                    }
                }
            }
            gens.push(g);
        }
        let labels = cosets
            .iter()
            .flat_map(|t| {
                base.labels.iter().map(move |l| BasisLabel::Induced { coset: t.clone(), inner: Box::new(l.clone()) })
            })
            .collect();
        let rep = SymRep::new(&f, m, labels, gens)?;
        Ok(Induced { rep, base: Arc::new(base.clone()), k, twist, cosets, reps, coset_index })
    }

    /// Index of the identity coset `{n+1, ..., n+k}`.
    pub fn identity_coset(&self) -> usize {
        let n = self.base.degree();
        self.coset_index[&(n + 1..=n + self.k).collect::<Vec<_>>()]
    }

    pub fn coset_index(&self, subset: &[usize]) -> Option<usize> {
        self.coset_index.get(subset).copied()
    }

    pub fn transversal(&self) -> &[Perm] {
        &self.reps
    }

    /// `V ↪ Ind V` onto the identity coset.
    pub fn inclusion(&self) -> EquivMap<K> {
        let f = self.rep.field();
        let d = self.base.dim();
        let off = self.identity_coset() * d;
        let mut m = Matrix::zeros(f, self.rep.dim(), d);
        for j in 0..d {
            m.set(off + j, j, f.one());
        }
        EquivMap::new_unchecked(self.base.clone(), Arc::new(self.rep.clone()), m)
    }

    /// Embeds `v ∈ V` into the summand of the coset `coset`.
    pub fn embed(&self, coset: usize, v: &[K::Elem]) -> Vec<K::Elem> {
        let f = self.rep.field();
        let d = self.base.dim();
        let mut out = vec![f.zero(); self.rep.dim()];
        out[coset * d..(coset + 1) * d].clone_from_slice(v);
        out
    }

    /// `sigma · (c_T ⊗ v)` for the basis coset `coset`.
    pub fn act_on_coset(&self, sigma: &Perm, coset: usize, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        let n = self.base.degree();
        let (cj, h1, sgn) = factor_through(sigma, &self.reps[coset], n, &self.reps, &self.coset_index, self.twist);
        let mut w = self.base.act_vec(&h1, v)?;
        if sgn < 0 {
            let f = self.rep.field();
            for x in w.iter_mut() {
                *x = f.neg(x);
            }
        }
        Ok(self.embed(cj, &w))
    }

    /// `sigma · w` for an arbitrary vector `w` of the induced module.
    pub fn act(&self, sigma: &Perm, w: &[K::Elem]) -> Result<Vec<K::Elem>> {
        let f = self.rep.field().clone();
        let d = self.base.dim();
        let mut out = vec![f.zero(); self.rep.dim()];
        for c in 0..self.cosets.len() {
            let block = &w[c * d..(c + 1) * d];
            if block.iter().all(|x| f.is_zero(x)) {
                continue;
            }
            let img = self.act_on_coset(sigma, c, block)?;
            for (o, x) in out.iter_mut().zip(img) {
                if !f.is_zero(&x) {
                    *o = f.add(o, &x);
                }
            }
        }
        Ok(out)
    }
}

/// Writes `sigma · r = r' · h` with `r'` in the transversal and `h ∈ S_n × S_k`.
/// Returns the index of `r'`, the `S_n` part of `h`, and the twist character of the `S_k` part.
fn factor_through(
    sigma: &Perm,
    r: &Perm,
    n: usize,
    reps: &[Perm],
    coset_index: &HashMap<Vec<usize>, usize>,
    twist: Twist,
) -> (usize, Perm, i64) {
    let m = sigma.degree();
    let sr = sigma * r;
    let mut t: Vec<usize> = (n + 1..=m).map(|x| sr.apply(x)).collect();
    t.sort_unstable();
    let cj = coset_index[&t];
    let h = &reps[cj].inverse() * &sr;
    let h1 = Perm::from_zero_based(h.images0()[..n].to_vec()).expect("h preserves the first block");
    let sgn = match twist {
        Twist::Trivial => 1,
        Twist::Sign => {
            let h2: Vec<usize> = h.images0()[n..].iter().map(|x| x - n).collect();
            Perm::from_zero_based(h2).expect("h preserves the second block").sign()
        }
    };
    (cj, h1, sgn)
}

/// A linear map from a representation of `S_n` to one of `S_m`, `m >= n`,
/// commuting with the generators of `S_n`.
#[derive(Clone, Debug)]
pub struct EquivMap<K: Field> {
    pub source: Arc<SymRep<K>>,
    pub target: Arc<SymRep<K>>,
    pub matrix: Matrix<K>,
}

impl<K: Field> EquivMap<K> {
    /// Checks shapes and equivariance.
    pub fn new(source: Arc<SymRep<K>>, target: Arc<SymRep<K>>, matrix: Matrix<K>) -> Result<Self> {
        let map = Self::new_unchecked(source, target, matrix);
        map.check()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: Arc<SymRep<K>>, target: Arc<SymRep<K>>, matrix: Matrix<K>) -> Self {
        EquivMap { source, target, matrix }
    }

    pub fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if s.degree() > t.degree() {
            return Err(Error::NotEquivariant(format!("S_{} does not embed in S_{}", s.degree(), t.degree())));
        }
        if self.matrix.rows() != t.dim() || self.matrix.cols() != s.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{} between dims {} and {}",
                self.matrix.rows(),
                self.matrix.cols(),
                s.dim(),
                t.dim()
            )));
        }
        for i in 1..s.degree() {
            let lhs = s.sparse_gen(i).left_mul(&self.matrix);
            let rhs = t.sparse_gen(i).right_mul(&self.matrix);
            if lhs != rhs {
                return Err(Error::NotEquivariant(format!("fails for s_{i}")));
            }
        }
        Ok(())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &EquivMap<K>) -> Result<EquivMap<K>> {
        let matrix = other.matrix.mul(&self.matrix)?;
        Ok(EquivMap::new_unchecked(self.source.clone(), other.target.clone(), matrix))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }
}

/// Character values keyed by cycle type.
#[derive(Clone, Debug, PartialEq)]
pub struct Character<K: Field> {
    pub field: K,
    pub n: usize,
    /// In `enumerate_partitions(n)` order.
    pub values: Vec<(Partition, K::Elem)>,
}

impl<K: Field> Character<K> {
    pub fn value(&self, lambda: &Partition) -> Option<&K::Elem> {
        self.values.iter().find(|(l, _)| l == lambda).map(|(_, v)| v)
    }

    /// `{ "3,1": "2", ... }`
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .values
            .iter()
            .map(|(l, v)| (l.to_string(), serde_json::Value::String(self.field.format_elem(v))))
            .collect();
        serde_json::Value::Object(map)
    }

    /// The integer-valued Specht character reduced into `field`.
    pub fn of_specht(field: &K, mu: &Partition) -> Self {
        let n = mu.size();
        let values = enumerate_partitions(n)
            .into_iter()
            .map(|lambda| {
                let v = specht_character(mu, &lambda);
                let x = field.from_i64(v);
                (lambda, x)
            })
            .collect();
        Character { field: field.clone(), n, values }
    }

    /// `(1/n!) Σ_λ |C_λ| χ(λ) ψ(λ)` in the field. Characters of `S_n` are real,
    /// so no conjugation is needed.
    pub fn inner_product(&self, other: &Self) -> Result<K::Elem> {
        let f = &self.field;
        if self.n != other.n {
            return Err(Error::DimensionMismatch("characters of different groups".into()));
        }
        require_semisimple(f, self.n)?;
        let mut acc = f.zero();
        for ((lambda, a), (_, b)) in self.values.iter().zip(&other.values) {
            let size = f.from_bigint(&BigInt::from(lambda.class_size()));
            let term = f.mul(&size, &f.mul(a, b));
            acc = f.add(&acc, &term);
        }
        let order = f.from_bigint(&BigInt::from(factorial(self.n)));
        Ok(f.div(&acc, &order).expect("n! is invertible in a semisimple field"))
    }
}

type CharacterKey = (Vec<usize>, Vec<usize>);

fn character_cache() -> &'static Mutex<HashMap<CharacterKey, i64>> {
    static CACHE: OnceLock<Mutex<HashMap<CharacterKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `χ^μ(λ)` by the Murnaghan–Nakayama rule: strip border strips of length
/// `λ_1, λ_2, ...` using beta-numbers.
pub fn specht_character(mu: &Partition, lambda: &Partition) -> i64 {
    assert_eq!(mu.size(), lambda.size(), "partitions of different integers");
    let key = (mu.parts().to_vec(), lambda.parts().to_vec());
    if let Some(v) = character_cache().lock().unwrap().get(&key) {
        return *v;
    }
    let len = mu.len();
    let beta: Vec<usize> = (0..len).map(|i| mu.part(i) + (len - 1 - i)).collect();
    let v = mn_beta(&beta, lambda.parts());
    character_cache().lock().unwrap().insert(key, v);
    v
}

fn mn_beta(beta: &[usize], lambda: &[usize]) -> i64 {
    let Some((&r, rest)) = lambda.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&next, rest);
    }
    total
}

/// Rows indexed by `μ`, columns by `λ`, both in `enumerate_partitions(n)` order.
pub fn character_table(n: usize) -> Vec<Vec<i64>> {
    let parts = enumerate_partitions(n);
    parts.iter().map(|mu| parts.iter().map(|lambda| specht_character(mu, lambda)).collect()).collect()
}

/// Multiplicities of Specht constituents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub n: usize,
    /// Nonzero multiplicities in `enumerate_partitions(n)` order.
    pub multiplicities: Vec<(Partition, usize)>,
}

impl Decomposition {
    /// Constituents with repetition.
    pub fn multiset(&self) -> Vec<Partition> {
        self.multiplicities.iter().flat_map(|(p, m)| std::iter::repeat_n(p.clone(), *m)).collect()
    }

    pub fn multiplicity(&self, mu: &Partition) -> usize {
        self.multiplicities.iter().find(|(p, _)| p == mu).map_or(0, |(_, m)| *m)
    }

    /// Largest first-row length of a constituent, 0 for the zero module.
    pub fn width(&self) -> usize {
        self.multiplicities.iter().map(|(p, _)| p.width()).max().unwrap_or(0)
    }

    pub fn dim(&self) -> usize {
        self.multiplicities.iter().map(|(p, m)| m * standard_tableaux(p).len()).sum()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(p, m)| if *m == 1 { format!("({p})") } else { format!("{m}({p})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Splits a representation into Specht constituents by character inner
/// products. Requires the group algebra to be semisimple.
///
/// Over `F_p` the inner products only give multiplicities mod `p`; if the
/// least lifts do not account for the whole dimension, multiplicities are
/// recomputed from ranks of the isotypic projections.
pub fn decompose<K: Field>(v: &SymRep<K>) -> Result<Decomposition> {
    let f = v.field();
    let n = v.degree();
    require_semisimple(f, n)?;
    let chi = v.character();
    let mut mults = Vec::new();
    for mu in enumerate_partitions(n) {
        let m = chi.inner_product(&Character::of_specht(f, &mu))?;
        let m = f
            .to_i64(&m)
            .filter(|&x| x >= 0)
            .ok_or_else(|| Error::Decomposition(format!("multiplicity of ({mu}) is {}", f.format_elem(&m))))?;
        if m > 0 {
            mults.push((mu, m as usize));
        }
    }
    let dec = Decomposition { n, multiplicities: mults };
    if dec.dim() == v.dim() {
        return Ok(dec);
    }
    if f.characteristic() == 0 {
        return Err(Error::Decomposition(format!("constituents account for dimension {} of {}", dec.dim(), v.dim())));
    }
    decompose_by_projections(v)
}

fn decompose_by_projections<K: Field>(v: &SymRep<K>) -> Result<Decomposition> {
    let n = v.degree();
    let projections = isotypic_projections(v)?;
    let mut mults = Vec::new();
    for (mu, e) in projections {
        let r = e.rank();
        let d = standard_tableaux(&mu).len();
        if r % d != 0 {
            return Err(Error::Decomposition(format!("isotypic rank {r} not divisible by {d}")));
        }
        if r > 0 {
            mults.push((mu, r / d));
        }
    }
    Ok(Decomposition { n, multiplicities: mults })
}

/// Class sums `Σ_{g ∈ C_λ} ρ(g)`, in `enumerate_partitions(n)` order.
///
/// Walks all of `S_n` in Steinhaus–Johnson–Trotter order so that consecutive
/// elements differ by one adjacent transposition on the right.
pub fn class_sums<K: Field>(v: &SymRep<K>) -> Vec<(Partition, Matrix<K>)> {
    let f = v.field();
    let n = v.degree();
    let classes = enumerate_partitions(n);
    let index: HashMap<Partition, usize> = classes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut sums: Vec<Matrix<K>> = classes.iter().map(|_| Matrix::zeros(f, v.dim(), v.dim())).collect();
    let mut current = Matrix::identity(f, v.dim());
    let mut perm: Vec<usize> = (0..n).collect();
    let mut dir: Vec<i8> = vec![-1; n];
    loop {
        let ct = Perm::from_zero_based(perm.clone()).unwrap().cycle_type();
        let slot = &mut sums[index[&ct]];
        *slot = slot.add(&current).unwrap();
        // Largest mobile element.
        let mut mobile: Option<usize> = None;
        for pos in 0..n {
            let next = pos as isize + dir[perm[pos]] as isize;
            if next >= 0
                && (next as usize) < n
                && perm[next as usize] < perm[pos]
                && mobile.is_none_or(|p| perm[p] < perm[pos])
            {
                mobile = Some(pos);
            }
        }
        let Some(pos) = mobile else { break };
        let val = perm[pos];
        let other = (pos as isize + dir[val] as isize) as usize;
        perm.swap(pos, other);
        // Swapping positions i, i+1 is right multiplication by s_{i+1}.
        let i = pos.min(other) + 1;
        current = v.sparse_gen(i).left_mul(&current);
        for d in dir.iter_mut().skip(val + 1) {
            *d = -*d;
        }
    }
    classes.into_iter().zip(sums).collect()
}

/// Central idempotents `e_μ = (dim S^μ / n!) Σ_λ χ^μ(λ) K_λ` acting on `v`.
pub fn isotypic_projections<K: Field>(v: &SymRep<K>) -> Result<Vec<(Partition, Matrix<K>)>> {
    let f = v.field();
    let n = v.degree();
    require_semisimple(f, n)?;
    let sums = class_sums(v);
    let order = f.from_bigint(&BigInt::from(factorial(n)));
    enumerate_partitions(n)
        .into_iter()
        .map(|mu| {
            let dim_mu = f.from_i64(standard_tableaux(&mu).len() as i64);
            let scale = f.div(&dim_mu, &order).expect("n! invertible");
            let mut e = Matrix::zeros(f, v.dim(), v.dim());
            for (lambda, k) in &sums {
                let c = specht_character(&mu, lambda);
                if c != 0 {
                    e = e.add(&k.scale(&f.from_i64(c)))?;
                }
            }
            Ok((mu, e.scale(&scale)))
        })
        .collect()
}

/// Largest first row among the constituents.
pub fn width<K: Field>(v: &SymRep<K>) -> Result<usize> {
    Ok(decompose(v)?.width())
}

/// Inclusion of the sum of the isotypic components whose first row is
/// shorter than `bound`.
pub fn width_subspace<K: Field>(v: &SymRep<K>, bound: usize) -> Result<EquivMap<K>> {
    let f = v.field();
    let mut proj = Matrix::zeros(f, v.dim(), v.dim());
    for (mu, e) in isotypic_projections(v)? {
        if mu.width() < bound {
            proj = proj.add(&e)?;
        }
    }
    let basis = proj.image_basis();
    let sub = v.subrepresentation(&basis)?;
    EquivMap::new(Arc::new(sub), Arc::new(v.clone()), basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn permutation_rep_satisfies_coxeter() {
        for n in 0..6 {
            SymRep::permutation(&Rationals, n).check_coxeter().unwrap();
        }
    }

    #[test]
    fn apply_permutation_examples() {
        let v = SymRep::permutation(&Rationals, 3);
        assert!(v.apply_permutation(&Perm::identity(3)).unwrap().is_identity());
        assert_eq!(v.apply_permutation(&Perm::adjacent(3, 1)).unwrap(), *v.gen(1));
        // (1 2 3) sends [1] -> [2] -> [3] -> [1].
        let c = Perm::cycle(3, &[1, 2, 3]).unwrap();
        let expected = Matrix::from_i64_rows(&Rationals, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(v.apply_permutation(&c).unwrap(), expected);
    }

    #[test]
    fn apply_permutation_is_a_homomorphism() {
        let v = SymRep::permutation(&Rationals, 4).induce(1, Twist::Sign).rep;
        let all = Perm::all(5);
        for a in all.iter().step_by(7) {
            for b in all.iter().step_by(11) {
                let lhs = v.apply_permutation(&(a * b)).unwrap();
                let rhs = v.apply_permutation(a).unwrap().mul(&v.apply_permutation(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn induce_trivial_is_permutation() {
        for n in 1..6 {
            let ind = SymRep::trivial(&Rationals, n).induce(1, Twist::Trivial);
            assert_eq!(ind.rep.dim(), n + 1);
            ind.rep.check_coxeter().unwrap();
            assert_eq!(ind.rep.character(), SymRep::permutation(&Rationals, n + 1).character());
            ind.inclusion().check().unwrap();
        }
    }

    #[test]
    fn induce_zero_steps_is_identity() {
        let v = SymRep::permutation(&Rationals, 3);
        let ind = v.induce(0, Twist::Sign);
        assert_eq!(ind.rep.gens(), v.gens());
    }

    #[test]
    fn induce_dimension_law() {
        let v = SymRep::permutation(&Rationals, 3);
        for k in 0..4 {
            for twist in [Twist::Trivial, Twist::Sign] {
                let ind = v.induce(k, twist);
                assert_eq!(ind.rep.dim() as u128, crate::combinatorics::binomial(3 + k as u64, k as u64) * 3);
                ind.rep.check_coxeter().unwrap();
            }
        }
    }

    #[test]
    fn act_matches_generator_products() {
        let ind = SymRep::permutation(&Rationals, 2).induce(2, Twist::Sign);
        let f = Rationals;
        for sigma in Perm::all(4).iter().step_by(5) {
            let m = ind.rep.apply_permutation(sigma).unwrap();
            for j in 0..ind.rep.dim() {
                let mut e = vec![f.zero(); ind.rep.dim()];
                e[j] = f.one();
                assert_eq!(ind.act(sigma, &e).unwrap(), m.column(j));
            }
        }
    }

    #[test]
    fn tensor_sign_examples() {
        let triv = SymRep::trivial(&Rationals, 4);
        let sgn = triv.tensor_sign();
        for (lambda, v) in sgn.character().values {
            let expected = if (4 - lambda.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(Rationals.to_i64(&v), Some(expected));
        }
        let v = SymRep::permutation(&Rationals, 4);
        assert_eq!(v.tensor_sign().tensor_sign().gens(), v.gens());
    }

    #[test]
    fn permutation_character_counts_fixed_points() {
        let v = SymRep::permutation(&Rationals, 5);
        for (lambda, x) in v.character().values {
            let fixed = lambda.parts().iter().filter(|&&p| p == 1).count() as i64;
            assert_eq!(Rationals.to_i64(&x), Some(fixed));
        }
        let chi = v.character();
        assert_eq!(chi.value(&Partition::column(5)), Some(&Rationals.from_i64(5)));
    }

    #[test]
    fn specht_character_examples() {
        for lambda in enumerate_partitions(5) {
            assert_eq!(specht_character(&p(&[5]), &lambda), 1);
        }
        for mu in enumerate_partitions(6) {
            assert_eq!(specht_character(&mu, &Partition::column(6)) as usize, standard_tableaux(&mu).len());
        }
        assert_eq!(specht_character(&p(&[1, 1]), &p(&[2])), -1);
        assert_eq!(specht_character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(specht_character(&p(&[2, 1]), &p(&[2, 1])), 0);
    }

    #[test]
    fn decompose_examples() {
        for n in 2..6 {
            let dec = decompose(&SymRep::permutation(&Rationals, n)).unwrap();
            assert_eq!(dec.multiplicities, vec![(p(&[n]), 1), (p(&[n - 1, 1]), 1)]);
            let dec = decompose(&SymRep::trivial(&Rationals, n)).unwrap();
            assert_eq!(dec.multiset(), vec![p(&[n])]);
        }
    }

    #[test]
    fn decompose_refuses_small_primes() {
        let f3 = PrimeField::new(3).unwrap();
        let v = SymRep::permutation(&f3, 3);
        assert!(matches!(decompose(&v), Err(Error::SemisimplicityViolation { p: 3, n: 3 })));
        let f5 = PrimeField::new(5).unwrap();
        let dec = decompose(&SymRep::permutation(&f5, 4)).unwrap();
        assert_eq!(dec.multiset(), vec![p(&[4]), p(&[3, 1])]);
    }

    #[test]
    fn decompose_over_fp_lifts_large_multiplicities() {
        // 7 copies of the trivial representation of S_2 over F_3: the
        // character inner product gives 7 = 1 mod 3.
        let f3 = PrimeField::new(3).unwrap();
        let gens = vec![Matrix::identity(&f3, 7)];
        let labels = (0..7).map(|index| BasisLabel::Index { index }).collect();
        let v = SymRep::new(&f3, 2, labels, gens).unwrap();
        let dec = decompose(&v).unwrap();
        assert_eq!(dec.multiplicities, vec![(p(&[2]), 7)]);
    }

    #[test]
    fn width_examples() {
        assert_eq!(width(&SymRep::trivial(&Rationals, 4)).unwrap(), 4);
        assert_eq!(width(&SymRep::sign(&Rationals, 4)).unwrap(), 1);
        let v = SymRep::permutation(&Rationals, 4);
        let sub = width_subspace(&v, 4).unwrap();
        assert_eq!(sub.source.dim(), 3);
        assert_eq!(decompose(&sub.source).unwrap().multiset(), vec![p(&[3, 1])]);
        sub.source.check_coxeter().unwrap();
    }

    #[test]
    fn isotypic_projections_are_idempotent_and_sum_to_one() {
        let v = SymRep::permutation(&Rationals, 4).induce(1, Twist::Trivial).rep;
        let projs = isotypic_projections(&v).unwrap();
        let mut total = Matrix::zeros(&Rationals, v.dim(), v.dim());
        for (_, e) in &projs {
            assert_eq!(e.mul(e).unwrap(), *e);
            total = total.add(e).unwrap();
        }
        assert!(total.is_identity());
    }

    #[test]
    fn quotient_of_permutation_by_constants() {
        let v = SymRep::permutation(&Rationals, 4);
        let ones = Matrix::from_i64_rows(&Rationals, &[vec![1], vec![1], vec![1], vec![1]]).unwrap();
        let (q, _) = v.quotient(&ones).unwrap();
        q.check_coxeter().unwrap();
        assert_eq!(decompose(&q).unwrap().multiset(), vec![p(&[3, 1])]);
        let e1 = Matrix::from_i64_rows(&Rationals, &[vec![1], vec![0], vec![0], vec![0]]).unwrap();
        assert!(matches!(v.quotient(&e1), Err(Error::InvalidSubrepresentation)));
    }

    #[test]
    fn document_round_trip() {
        let v = SymRep::permutation(&PrimeField::new(7).unwrap(), 3).induce(1, Twist::Sign).rep;
        let doc = v.to_document();
        let json = serde_json::to_string(&doc).unwrap();
        let back: SymRepDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        let w = SymRep::from_document(&PrimeField::new(7).unwrap(), &back).unwrap();
        assert_eq!(w.gens(), v.gens());
        assert_eq!(w.labels(), v.labels());
        assert!(SymRep::from_document(&Rationals, &back).is_err());
    }

    #[test]
    fn k_subsets_are_lexicographic() {
        assert_eq!(k_subsets(4, 2), vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
