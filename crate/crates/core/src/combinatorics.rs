//! Partitions, weak partitions, tableaux, tabloids and deletion sequences.
//!
//! Rows and boxes are 0-indexed in code; deletion sequences report rows
//! 1-indexed, matching the way they are usually written down.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonincreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates and builds a partition. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not nonincreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n]).unwrap()
    }

    /// The one-column partition `(1, ..., 1)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer `n` being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of the first row.
    pub fn width(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.width();
        let parts = (1..=cols).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// `(mu_1 + 1, mu_2, ...)`; the empty partition stabilizes to `(1)`.
    pub fn stab(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(p) => *p += 1,
            None => parts.push(1),
        }
        Partition { parts }
    }

    pub fn stab_pow(&self, k: usize) -> Partition {
        let mut parts = self.parts.clone();
        if k > 0 {
            match parts.first_mut() {
                Some(p) => *p += k,
                None => parts.push(k),
            }
        }
        Partition { parts }
    }

    /// Appends a new row with a single box.
    pub fn hatstab(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition { parts }
    }

    /// `k` successive single-box row appends.
    pub fn hatstab_pow(&self, k: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, k));
        Partition { parts }
    }

    /// Appends one new row of length `k`; `k = 0` is the identity.
    pub fn append_row(&self, k: usize) -> Result<Partition> {
        if k == 0 {
            return Ok(self.clone());
        }
        if let Some(&last) = self.parts.last() {
            if k > last {
                return Err(Error::InvalidPartition(format!("appending a row of length {k} to {self}")));
            }
        }
        let mut parts = self.parts.clone();
        parts.push(k);
        Ok(Partition { parts })
    }

    /// Adds `k` boxes to the last row. Fails if the result is not nonincreasing.
    pub fn bracket(&self, k: usize) -> Result<Partition> {
        let weak = self.bracket_weak(k);
        Partition::try_from(&weak)
    }

    /// Adds `k` boxes to the last row, allowing the result to be a weak partition.
    pub fn bracket_weak(&self, k: usize) -> WeakPartition {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            Some(p) => *p += k,
            None if k > 0 => parts.push(k),
            None => {}
        }
        WeakPartition { parts }
    }

    /// Rows (0-based) whose last box can be removed leaving a partition.
    pub fn deletable_rows(&self) -> Vec<usize> {
        (0..self.parts.len()).filter(|&i| self.part(i) > self.part(i + 1)).collect()
    }

    /// Rows (0-based, possibly `len()`) where a box can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.parts.len()).filter(|&i| i == 0 || self.part(i) < self.part(i - 1)).collect()
    }

    /// Removes the last box of `row`, which must be deletable.
    pub fn delete_box(&self, row: usize) -> Option<Partition> {
        if row >= self.parts.len() || self.part(row) <= self.part(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row > self.parts.len() || (row > 0 && self.part(row) >= self.part(row - 1)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition { parts })
    }

    /// Partitions obtained by adding `k` boxes, no two in the same column.
    pub fn pieri_additions(&self, k: usize) -> Vec<Partition> {
        // lambda/mu is a horizontal strip iff mu_i <= lambda_i <= mu_{i-1}.
        fn rec(mu: &Partition, row: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if row > mu.len() {
                if left == 0 {
                    out.push(Partition::new(acc.clone()).unwrap());
                }
                return;
            }
            let cap = if row == 0 { left } else { (mu.part(row - 1) - mu.part(row)).min(left) };
            for add in (0..=cap).rev() {
                acc.push(mu.part(row) + add);
                rec(mu, row + 1, left - add, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, k, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    /// Boxes `(row, col)` in row-reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    /// Order of the centralizer of a permutation with this cycle type.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
            }
            z *= (p as u128).pow(m as u32) * factorial(m);
        }
        z
    }

    /// Size of the conjugacy class of `S_n` with this cycle type.
    pub fn class_size(&self) -> u128 {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

/// Partitions compare lexicographically on their parts.
impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl TryFrom<&WeakPartition> for Partition {
    type Error = Error;

    fn try_from(w: &WeakPartition) -> Result<Self> {
        Partition::new(w.parts.clone())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        write_comma_separated(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_comma_separated(s)?;
        if parts == [0] {
            return Ok(Partition::empty());
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in partition {s:?}")));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn write_comma_separated(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_comma_separated(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty partition string".into()));
    }
    s.split(',')
        .map(|tok| tok.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}"))))
        .collect()
}

/// A sequence of nonnegative integers; zeros and increases are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct WeakPartition {
    parts: Vec<usize>,
}

impl WeakPartition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakPartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// `nu ⊂ self`: every row of `nu` fits in the corresponding row of `self`.
    pub fn contains(&self, nu: &WeakPartition) -> bool {
        let rows = self.parts.len().max(nu.parts.len());
        (0..rows).all(|i| nu.part(i) <= self.part(i))
    }

    pub fn as_partition(&self) -> Option<Partition> {
        Partition::try_from(self).ok().filter(|p| p.len() == self.parts.len())
    }
}

impl From<&Partition> for WeakPartition {
    fn from(p: &Partition) -> Self {
        WeakPartition { parts: p.parts.clone() }
    }
}

impl From<Partition> for WeakPartition {
    fn from(p: Partition) -> Self {
        WeakPartition { parts: p.parts }
    }
}

impl From<Vec<usize>> for WeakPartition {
    fn from(parts: Vec<usize>) -> Self {
        WeakPartition { parts }
    }
}

impl From<WeakPartition> for Vec<usize> {
    fn from(w: WeakPartition) -> Self {
        w.parts
    }
}

impl fmt::Display for WeakPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        write_comma_separated(f, &self.parts)
    }
}

impl FromStr for WeakPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(WeakPartition { parts: parse_comma_separated(s)? })
    }
}

/// A filling of a (weak) Young diagram with `1..=n`, each used once.
///
/// Serialized as its list of rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidTableau(format!("{rows:?} is not a filling by 1..={n}")));
            }
            seen[x] = true;
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> WeakPartition {
        WeakPartition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Row-reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Rows and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].iter().enumerate().all(|(j, &below)| pair[0].get(j).is_some_and(|&above| above < below))
        });
        rows_ok && cols_ok
    }

    /// The last entry of the first row.
    pub fn upper_right(&self) -> Option<usize> {
        self.rows.first().and_then(|r| r.last()).copied()
    }

    /// Columns as lists of entries, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        (0..width).map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect()).collect()
    }

    /// Applies `sigma` to every entry.
    pub fn permuted(&self, sigma: &crate::perm::Perm) -> Tableau {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|&x| sigma.apply(x)).collect()).collect() }
    }

    /// Swaps the entries `i` and `i + 1`.
    pub fn swap_adjacent(&self, i: usize) -> Tableau {
        let swap = |x: usize| {
            if x == i {
                i + 1
            } else if x == i + 1 {
                i
            } else {
                x
            }
        };
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|&x| swap(x)).collect()).collect() }
    }

    /// Appends `value` to the end of the first row.
    pub fn append_to_first_row(&self, value: usize) -> Tableau {
        let mut rows = self.rows.clone();
        if rows.is_empty() {
            rows.push(Vec::new());
        }
        rows[0].push(value);
        Tableau { rows }
    }

    pub fn tabloid(&self) -> Tabloid {
        Tabloid::from_rows(self.rows.clone())
    }

    /// Fills the shape with `1..=n` in row-reading order.
    pub fn row_reading(shape: &WeakPartition) -> Tableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let r: Vec<usize> = (next..next + len).collect();
                next += len;
                r
            })
            .collect();
        Tableau { rows }
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            write_comma_separated(f, r)?;
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// A tableau with the order inside each row forgotten. Rows are kept sorted.
///
/// Tabloids of one shape are totally ordered lexicographically on their
/// concatenated rows; since row lengths agree this is the derived `Ord`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn from_rows(mut rows: Vec<Vec<usize>>) -> Self {
        for r in &mut rows {
            r.sort_unstable();
        }
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> WeakPartition {
        WeakPartition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `row_of[x - 1]` is the row containing `x`.
    pub fn row_of(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.size()];
        for (i, r) in self.rows.iter().enumerate() {
            for &x in r {
                out[x - 1] = i as u8;
            }
        }
        out
    }

    pub fn from_row_of(shape: &WeakPartition, row_of: &[u8]) -> Tabloid {
        let mut rows = vec![Vec::new(); shape.num_rows()];
        for (x, &r) in row_of.iter().enumerate() {
            rows[r as usize].push(x + 1);
        }
        Tabloid { rows }
    }
}

impl From<Vec<Vec<usize>>> for Tabloid {
    fn from(rows: Vec<Vec<usize>>) -> Self {
        Tabloid::from_rows(rows)
    }
}

impl From<Tabloid> for Vec<Vec<usize>> {
    fn from(t: Tabloid) -> Self {
        t.rows
    }
}

/// An ordered sequence of row deletions and the shape it leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionSequence {
    /// 1-based row indices.
    pub rows: Vec<usize>,
    pub result: Partition,
}

/// All length-`k` deletion sequences of `mu`, lexicographic in the row indices.
pub fn deletion_sequences(mu: &Partition, k: usize) -> Vec<DeletionSequence> {
    fn rec(cur: &Partition, left: usize, acc: &mut Vec<usize>, out: &mut Vec<DeletionSequence>) {
        if left == 0 {
            out.push(DeletionSequence { rows: acc.clone(), result: cur.clone() });
            return;
        }
        for row in cur.deletable_rows() {
            let next = cur.delete_box(row).unwrap();
            acc.push(row + 1);
            rec(&next, left - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= mu.size() {
        rec(mu, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Standard tableaux of shape `mu`, sorted by row-reading word.
pub fn standard_tableaux(mu: &Partition) -> Vec<Tableau> {
    fn rec(mu: &Partition, next: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..mu.len() {
            let len = rows[i].len();
            let fits = len < mu.part(i) && (i == 0 || rows[i - 1].len() > len);
            if fits {
                rows[i].push(next);
                rec(mu, next + 1, n, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); mu.len()];
    rec(mu, 1, mu.size(), &mut rows, &mut out);
    out.sort_by_key(Tableau::reading_word);
    out
}

/// `sum over standard t of shape mu of C(n - UR(t) + k, k)`, the number of
/// standard tableaux of shape `stab^k(mu)`.
pub fn dim_poly(mu: &Partition, k: usize) -> u128 {
    let n = mu.size();
    standard_tableaux(mu)
        .iter()
        .map(|t| {
            let ur = t.upper_right().unwrap_or(0);
            binomial((n - ur + k) as u64, k as u64)
        })
        .sum()
}

/// Deletes the last `k` boxes of the first row of `s` (standard, of shape
/// `stab^k(mu)`) and renumbers what is left. Returns the standard tableau of
/// shape `mu` and the image of the order-preserving injection `{1..n} → {1..n+k}`.
pub fn psi(s: &Tableau, k: usize) -> Option<(Tableau, Vec<usize>)> {
    let first = s.rows().first()?;
    if first.len() < k {
        return None;
    }
    let mut rows = s.rows().to_vec();
    rows[0].truncate(first.len() - k);
    let mut image: Vec<usize> = rows.iter().flatten().copied().collect();
    image.sort_unstable();
    let rank: HashMap<usize, usize> = image.iter().enumerate().map(|(i, &x)| (x, i + 1)).collect();
    let renumbered = rows.iter().map(|r| r.iter().map(|x| rank[x]).collect()).collect();
    Some((Tableau::new(renumbered).ok()?, image))
}

/// Inverse of [`psi`]: relabels `t` through `image` and appends the missing
/// values of `1..=total` to the first row.
pub fn psi_inverse(t: &Tableau, image: &[usize], total: usize) -> Tableau {
    let mut rows: Vec<Vec<usize>> = t.rows().iter().map(|r| r.iter().map(|&x| image[x - 1]).collect()).collect();
    if rows.is_empty() {
        rows.push(Vec::new());
    }
    let used: std::collections::HashSet<usize> = image.iter().copied().collect();
    rows[0].extend((1..=total).filter(|x| !used.contains(x)));
    Tableau { rows }
}

/// Whether `(t, image)` lies in the target set of [`psi`]: the injection fixes
/// `1..=UR(t)`.
pub fn psi_target_contains(t: &Tableau, image: &[usize]) -> bool {
    let ur = t.upper_right().unwrap_or(0);
    t.is_standard() && image.windows(2).all(|w| w[0] < w[1]) && (1..=ur).all(|i| image[i - 1] == i)
}

/// All partitions of `n`, in decreasing lexicographic order: `(n), (n-1,1), ...`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: acc.clone() });
            return;
        }
        for p in (1..=left.min(max)).rev() {
            acc.push(p);
            rec(left - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All tabloids of the given shape, in increasing lexicographic order.
pub fn enumerate_tabloids(shape: &WeakPartition) -> Vec<Tabloid> {
    fn combos(pool: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        let need = k - acc.len();
        for i in start..pool.len() {
            if pool.len() - i < need {
                break;
            }
            acc.push(pool[i]);
            combos(pool, k, i + 1, acc, out);
            acc.pop();
        }
    }
    fn rec(shape: &[usize], pool: Vec<usize>, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Tabloid>) {
        let Some((&len, rest)) = shape.split_first() else {
            out.push(Tabloid { rows: acc.clone() });
            return;
        };
        let mut choices = Vec::new();
        combos(&pool, len, 0, &mut Vec::new(), &mut choices);
        for row in choices {
            let remaining: Vec<usize> = pool.iter().copied().filter(|x| !row.contains(x)).collect();
            acc.push(row);
            rec(rest, remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape.parts(), (1..=shape.size()).collect(), &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
