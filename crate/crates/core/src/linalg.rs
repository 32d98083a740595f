//! Exact dense linear algebra over the rationals and prime fields.
//!
//! Vectors are column vectors; a subspace is represented by a matrix whose
//! columns span it. There is no tolerance anywhere: equality is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A field together with the arithmetic on its elements.
///
/// Field descriptors are compared with `==`; two matrices over descriptors
/// that differ (e.g. `F_5` and `F_7`) cannot be combined.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, x: i64) -> Self::Elem;
    fn from_bigint(&self, x: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn spec(&self) -> FieldSpec;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        *acc = self.add(acc, &prod);
    }

    /// The integer value when the element is an integer (or, over `F_p`, its
    /// least nonnegative residue).
    fn to_i64(&self, a: &Self::Elem) -> Option<i64>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The rational numbers, with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn from_bigint(&self, x: &BigInt) -> BigRational {
        BigRational::from_integer(x.clone())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn add_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_integer() && b.is_integer() && acc.is_integer() {
            let v = acc.numer() + a.numer() * b.numer();
            *acc = BigRational::from_integer(v);
        } else {
            *acc += a * b;
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad rational {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }

    fn to_i64(&self, a: &BigRational) -> Option<i64> {
        a.is_integer().then(|| a.numer().to_i64()).flatten()
    }
}

/// The prime field `F_p`; elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Checks primality by trial division; `p` must be below `2^32`.
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, x: i128) -> u64 {
        x.rem_euclid(self.p as i128) as u64
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, x: i64) -> u64 {
        self.reduce_i128(x as i128)
    }

    fn from_bigint(&self, x: &BigInt) -> u64 {
        let r = x % BigInt::from(self.p);
        let r = if r.is_negative() { r + BigInt::from(self.p) } else { r };
        r.to_u64().unwrap()
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        Some(acc)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u64> {
        let v: i128 = s.trim().parse().map_err(|_| Error::Parse(format!("bad residue {s:?}")))?;
        Ok(self.reduce_i128(v))
    }

    fn to_i64(&self, a: &u64) -> Option<i64> {
        Some(*a as i64)
    }
}

/// Textual field selector: `"Q"` or `"Fp:<prime>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Whether the group algebra of `S_n` over this field is semisimple.
    pub fn is_semisimple_for(&self, n: usize) -> bool {
        match self {
            FieldSpec::Rational => true,
            FieldSpec::Prime(p) => *p > n as u64,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        let Some(p) = s.strip_prefix("Fp:") else {
            return Err(Error::Parse(format!("unknown field {s:?}; expected Q or Fp:<prime>")));
        };
        let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad prime in {s:?}")))?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime(p))
    }
}

/// Returns an error unless the group algebra of `S_n` is semisimple over `field`.
pub fn require_semisimple<K: Field>(field: &K, n: usize) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && p <= n as u64 {
        return Err(Error::SemisimplicityViolation { p, n });
    }
    Ok(())
}

/// A dense row-major matrix over `K`.
#[derive(Clone, PartialEq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format_elem(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &K, rows: Vec<Vec<K::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds an `nrows x columns.len()` matrix from its columns.
    pub fn from_columns(field: &K, nrows: usize, columns: &[Vec<K::Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in a matrix with {nrows} rows",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows(field: &K, rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<K::Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    fn check_same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedField(self.field.spec().to_string(), other.field.spec().to_string()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for l in 0..self.cols {
                let a = &self.data[i * self.cols + l];
                if f.is_zero(a) {
                    continue;
                }
                let b_row = &other.data[l * other.cols..(l + 1) * other.cols];
                for (acc, b) in out_row.iter_mut().zip(b_row) {
                    if !f.is_zero(b) {
                        f.add_mul_assign(acc, a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = &self.field;
        let nz: Vec<usize> = (0..v.len()).filter(|&j| !f.is_zero(&v[j])).collect();
        Ok((0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = f.zero();
                for &j in &nz {
                    if !f.is_zero(&row[j]) {
                        f.add_mul_assign(&mut acc, &row[j], &v[j]);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&K, &K::Elem, &K::Elem) -> K::Elem) -> Result<Self> {
        self.check_same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(&self.field, a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn neg(&self) -> Self {
        self.map(|f, a| f.neg(a))
    }

    pub fn scale(&self, s: &K::Elem) -> Self {
        self.map(|f, a| f.mul(a, s))
    }

    fn map(&self, op: impl Fn(&K, &K::Elem) -> K::Elem) -> Self {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| op(&self.field, a)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c].clone();
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack with different row counts".into()));
        }
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * out.cols..(r + 1) * out.cols];
            dst[..self.cols].clone_from_slice(self.row(r));
            dst[self.cols..].clone_from_slice(other.row(r));
        }
        Ok(out)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].clone_from_slice(self.row(r));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn trace(&self) -> K::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut space = EchelonSpace::new(&self.field, self.cols);
        for r in 0..self.rows {
            space.insert(self.row(r).to_vec());
        }
        let pivots = space.pivots().to_vec();
        let rows = space.into_sorted_rows();
        let mut out = Self::zeros(&self.field, self.rows, self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].clone_from_slice(&row);
        }
        let mut pivots = pivots;
        pivots.sort_unstable();
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut space = EchelonSpace::new(&self.field, self.cols);
        for r in 0..self.rows {
            space.insert(self.row(r).to_vec());
        }
        space.dim()
    }

    /// Columns form a basis of `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Self::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, f.one());
            for (i, &pc) in pivots.iter().enumerate() {
                let v = rref.get(i, fc);
                if !f.is_zero(v) {
                    out.set(pc, j, f.neg(v));
                }
            }
        }
        out
    }

    /// The columns of `self` at its pivot positions: a basis of the column space.
    pub fn image_basis(&self) -> Self {
        let mut space = EchelonSpace::new(&self.field, self.rows);
        let mut keep = Vec::new();
        for c in 0..self.cols {
            if space.insert(self.column(c)) {
                keep.push(c);
            }
        }
        self.select_columns(&keep)
    }

    /// Solves `self * X = rhs`, returning `None` if inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        self.check_same_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("solve with mismatched rows".into()));
        }
        let f = &self.field;
        let aug = self.hstack(rhs)?;
        let (rref, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(f, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, rref.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        if self.rank() < self.rows {
            return Ok(None);
        }
        self.solve(&Self::identity(&self.field, self.rows))
    }

    /// Entries as strings, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|x| self.field.format_elem(x)).collect()).collect()
    }

    pub fn from_string_rows(field: &K, rows: &[Vec<String>], ncols: usize) -> Result<Self> {
        let parsed: Vec<Vec<K::Elem>> =
            rows.iter().map(|r| r.iter().map(|s| field.parse_elem(s)).collect::<Result<_>>()).collect::<Result<_>>()?;
        if parsed.is_empty() {
            return Ok(Self::zeros(field, 0, ncols));
        }
        Self::from_rows(field, parsed)
    }
}

/// Row-compressed copy of a matrix, used for the (very sparse) generator
/// matrices of permutation and induced modules.
#[derive(Clone, Debug)]
pub struct SparseMatrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, K::Elem)>>,
}

impl<K: Field> SparseMatrix<K> {
    pub fn from_dense(m: &Matrix<K>) -> Self {
        let f = m.field();
        let entries = (0..m.rows())
            .map(|r| m.row(r).iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(c, x)| (c, x.clone())).collect())
            .collect();
        SparseMatrix { field: f.clone(), rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        self.entries
            .iter()
            .map(|row| {
                let mut acc = f.zero();
                for (c, x) in row {
                    if !f.is_zero(&v[*c]) {
                        f.add_mul_assign(&mut acc, x, &v[*c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `dense * self`
    pub fn left_mul(&self, dense: &Matrix<K>) -> Matrix<K> {
        assert_eq!(dense.cols(), self.rows);
        let f = &self.field;
        let mut out = Matrix::zeros(f, dense.rows(), self.cols);
        for i in 0..dense.rows() {
            for (l, a) in dense.row(i).iter().enumerate() {
                if f.is_zero(a) {
                    continue;
                }
                for (j, b) in &self.entries[l] {
                    let idx = i * self.cols + j;
                    f.add_mul_assign(&mut out.data[idx], a, b);
                }
            }
        }
        out
    }

    /// `self * dense`
    pub fn right_mul(&self, dense: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, dense.rows());
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, dense.cols());
        for (i, row) in self.entries.iter().enumerate() {
            for (l, a) in row {
                for (j, b) in dense.row(*l).iter().enumerate() {
                    if !f.is_zero(b) {
                        let idx = i * dense.cols() + j;
                        f.add_mul_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }
}

/// A subspace kept in fully reduced row echelon form, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct EchelonSpace<K: Field> {
    field: K,
    dim: usize,
    rows: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl<K: Field> EchelonSpace<K> {
    pub fn new(field: &K, ambient_dim: usize) -> Self {
        EchelonSpace {
            field: field.clone(),
            dim: ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ambient_dim],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns, in insertion order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c].is_some()
    }

    /// Subtracts the components along the basis; the result vanishes at
    /// every pivot coordinate.
    pub fn reduce(&self, v: &mut [K::Elem]) {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let c = v[pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    let prod = f.mul(&c, r);
                    *x = f.sub(x, &prod);
                }
            }
        }
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<K::Elem>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length does not match ambient dimension");
        let f = self.field.clone();
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pc]).unwrap();
        for x in v.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        // Keep the basis fully reduced: clear column pc in existing rows.
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[pc]) {
                continue;
            }
            let c = row[pc].clone();
            for (x, nv) in row.iter_mut().zip(&v) {
                if !f.is_zero(nv) {
                    let prod = f.mul(&c, nv);
                    *x = f.sub(x, &prod);
                }
            }
        }
        self.pivot_row[pc] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    /// Coordinates of `v` (assumed to lie in the span) along the reduced basis.
    pub fn coordinates(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    /// Reduced basis rows sorted by pivot column.
    pub fn into_sorted_rows(self) -> Vec<Vec<K::Elem>> {
        let mut pairs: Vec<(usize, Vec<K::Elem>)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        pairs.into_iter().map(|(_, r)| r).collect()
    }

    pub fn basis_rows(&self) -> &[Vec<K::Elem>] {
        &self.rows
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix, sorted by pivot.
    pub fn basis_matrix(&self) -> Matrix<K> {
        let rows = self.clone().into_sorted_rows();
        Matrix::from_columns(&self.field, self.dim, &rows).unwrap()
    }
}

/// A quotient `F^d / U` presented by non-pivot coordinates of the reduced `U`.
#[derive(Clone, Debug)]
pub struct Quotient<K: Field> {
    /// Ambient coordinates whose unit vectors map to a basis of the quotient.
    pub representatives: Vec<usize>,
    /// `(d - dim U) x d`, kills `U`.
    pub projection: Matrix<K>,
    /// `d x (d - dim U)`, unit vectors at the representatives.
    pub section: Matrix<K>,
}

/// Presents `F^ambient_dim / span(subspace columns)`.
pub fn quotient_basis<K: Field>(ambient_dim: usize, subspace: &Matrix<K>) -> Result<Quotient<K>> {
    if subspace.rows() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "subspace vectors of length {} in ambient dimension {ambient_dim}",
            subspace.rows()
        )));
    }
    let f = subspace.field();
    let mut space = EchelonSpace::new(f, ambient_dim);
    for c in 0..subspace.cols() {
        space.insert(subspace.column(c));
    }
    Ok(quotient_from_space(&space))
}

pub fn quotient_from_space<K: Field>(space: &EchelonSpace<K>) -> Quotient<K> {
    let f = &space.field;
    let d = space.ambient_dim();
    let reps: Vec<usize> = (0..d).filter(|&c| !space.is_pivot(c)).collect();
    let q = reps.len();
    let mut slot = vec![None; d];
    for (j, &c) in reps.iter().enumerate() {
        slot[c] = Some(j);
    }
    // pi(e_c) = e_c for c non-pivot; pi(e_p) = -sum_{c non-pivot} row_p[c] e_c.
    let mut projection = Matrix::zeros(f, q, d);
    for (j, &c) in reps.iter().enumerate() {
        projection.set(j, c, f.one());
    }
    for (row, &pc) in space.rows.iter().zip(&space.pivots) {
        for (c, x) in row.iter().enumerate() {
            if let Some(j) = slot[c] {
                if !f.is_zero(x) {
                    projection.set(j, pc, f.neg(x));
                }
            }
        }
    }
    let mut section = Matrix::zeros(f, d, q);
    for (j, &c) in reps.iter().enumerate() {
        section.set(c, j, f.one());
    }
    Quotient { representatives: reps, projection, section }
}

/// Smallest subspace containing the seed columns and invariant under every map.
///
/// Returned as a basis matrix (columns) in reduced echelon form.
pub fn close_under_maps<K: Field>(seed: &Matrix<K>, maps: &[Matrix<K>]) -> Result<Matrix<K>> {
    let d = seed.rows();
    for m in maps {
        if m.rows() != d || m.cols() != d {
            return Err(Error::DimensionMismatch("maps must be square of the ambient dimension".into()));
        }
        if m.field() != seed.field() {
            return Err(Error::MixedField(m.field().spec().to_string(), seed.field().spec().to_string()));
        }
    }
    let space = close_space(seed.field(), d, seed.columns(), maps)?;
    Ok(space.basis_matrix())
}

/// Closure as an echelon space, starting from arbitrary seed vectors.
pub fn close_space<K: Field>(
    field: &K,
    ambient_dim: usize,
    seed: Vec<Vec<K::Elem>>,
    maps: &[Matrix<K>],
) -> Result<EchelonSpace<K>> {
    let mut space = EchelonSpace::new(field, ambient_dim);
    let mut queue: Vec<Vec<K::Elem>> = Vec::new();
    for v in seed {
        if space.insert(v.clone()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        if space.dim() == ambient_dim {
            break;
        }
        for m in maps {
            let w = m.mul_vec(&v)?;
            if space.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Rationals {
        Rationals
    }

    #[test]
    fn identity_and_zero() {
        let i = Matrix::identity(&q(), 4);
        assert_eq!(i.rank(), 4);
        assert_eq!(i.kernel_basis().cols(), 0);
        let z = Matrix::zeros(&q(), 3, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().cols(), 5);
        assert!(z.kernel_basis().is_identity());
    }

    #[test]
    fn small_matrix_over_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let a = Matrix::from_i64_rows(&f5, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(a.rank(), 2);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).unwrap().is_zero());
        // (1, -1, 1) = (1, 4, 1) mod 5
        assert_eq!(k.column(0), vec![1, 4, 1]);
    }

    #[test]
    fn quotient_examples() {
        let id = quotient_basis(3, &Matrix::zeros(&q(), 3, 0)).unwrap();
        assert!(id.projection.is_identity());
        let full = quotient_basis(3, &Matrix::identity(&q(), 3)).unwrap();
        assert_eq!(full.projection.rows(), 0);
        let ones = Matrix::from_i64_rows(&q(), &[vec![1], vec![1], vec![1]]).unwrap();
        let qt = quotient_basis(3, &ones).unwrap();
        assert_eq!(qt.projection.rank(), 2);
        assert!(qt.projection.mul(&ones).unwrap().is_zero());
        assert!(qt.projection.mul(&qt.section).unwrap().is_identity());
        assert_eq!(qt.representatives, vec![1, 2]);
    }

    #[test]
    fn closure_examples() {
        let perm12 = Matrix::from_i64_rows(&q(), &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        let perm23 = Matrix::from_i64_rows(&q(), &[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
        let zero = Matrix::zeros(&q(), 3, 1);
        assert_eq!(close_under_maps(&zero, std::slice::from_ref(&perm12)).unwrap().cols(), 0);
        let e1 = Matrix::from_i64_rows(&q(), &[vec![1], vec![0], vec![0]]).unwrap();
        assert_eq!(close_under_maps(&e1, &[Matrix::identity(&q(), 3)]).unwrap().cols(), 1);
        let diff = Matrix::from_i64_rows(&q(), &[vec![1], vec![-1], vec![0]]).unwrap();
        let closed = close_under_maps(&diff, &[perm12, perm23]).unwrap();
        assert_eq!(closed.cols(), 2);
        // Sum-zero subspace: orthogonal to (1,1,1).
        let ones = Matrix::from_i64_rows(&q(), &[vec![1, 1, 1]]).unwrap();
        assert!(ones.mul(&closed).unwrap().is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_i64_rows(&q(), &[vec![2, 1], vec![1, 1]]).unwrap();
        let inv = a.inverse().unwrap().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        let sing = Matrix::from_i64_rows(&q(), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(sing.inverse().unwrap().is_none());
        let b = Matrix::from_i64_rows(&q(), &[vec![1], vec![3]]).unwrap();
        assert!(sing.solve(&b).unwrap().is_none());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Matrix::identity(&PrimeField::new(5).unwrap(), 2);
        let b = Matrix::identity(&PrimeField::new(7).unwrap(), 2);
        assert!(matches!(a.mul(&b), Err(Error::MixedField(..))));
        assert!(matches!(a.add(&b), Err(Error::MixedField(..))));
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!("Fp:11".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(11));
        assert!(matches!("Fp:12".parse::<FieldSpec>(), Err(Error::NotPrime(12))));
        assert!("R".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(7).to_string(), "Fp:7");
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rational_text_form() {
        let r = Rationals.parse_elem("-6/14").unwrap();
        assert_eq!(Rationals.format_elem(&r), "-3/7");
        assert_eq!(Rationals.format_elem(&Rationals.from_i64(12)), "12");
        assert!(Rationals.parse_elem("1/0").is_err());
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.parse_elem("-1").unwrap(), 6);
        assert_eq!(f7.inv(&3), Some(5));
    }

    #[test]
    fn semisimplicity_guard() {
        assert!(require_semisimple(&Rationals, 100).is_ok());
        let f5 = PrimeField::new(5).unwrap();
        assert!(require_semisimple(&f5, 4).is_ok());
        assert!(matches!(require_semisimple(&f5, 5), Err(Error::SemisimplicityViolation { p: 5, n: 5 })));
    }
}
