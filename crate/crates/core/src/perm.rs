//! Permutations of `{1, ..., n}`.
//!
//! Stored 0-based internally; the public constructors and `Display` use the
//! 1-based convention. Composition is right-to-left: `(a * b)(x) = a(b(x))`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation from its one-line notation `[σ(1), ..., σ(n)]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let zero: Vec<usize> = images
            .iter()
            .map(|&x| x.checked_sub(1).ok_or_else(|| Error::InvalidPermutation(format!("{images:?}"))))
            .collect::<Result<_>>()?;
        Self::from_zero_based(zero)
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition `(a, b)` in `S_n`, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Perm { images }
    }

    /// The adjacent transposition `s_i = (i, i+1)`, 1-based.
    pub fn adjacent(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    /// The cycle `(c_1 c_2 ... c_r)` sending `c_j` to `c_{j+1}`, 1-based.
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (j, &c) in cycle.iter().enumerate() {
            let next = cycle[(j + 1) % cycle.len()];
            if c == 0 || c > n || next == 0 || next > n {
                return Err(Error::InvalidPermutation(format!("{cycle:?}")));
            }
            images[c - 1] = next - 1;
        }
        Self::from_zero_based(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn apply0(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut even_cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            if len % 2 == 0 {
                even_cycles += 1;
            }
        }
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("cycle lengths form a partition")
    }

    /// Writes `self = s_{i_1} s_{i_2} ... s_{i_k}` with adjacent transpositions
    /// `s_i = (i, i+1)`, returned as the 1-based indices `[i_1, ..., i_k]`.
    ///
    /// Bubble-sorts the one-line notation; the word is reduced.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut swaps = Vec::new();
        let n = w.len();
        loop {
            let mut changed = false;
            for i in 0..n.saturating_sub(1) {
                if w[i] > w[i + 1] {
                    // w -> w * s_{i+1}
                    w.swap(i, i + 1);
                    swaps.push(i + 1);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        swaps.reverse();
        swaps
    }

    /// Extends to `S_m` (m >= n) fixing the new points.
    pub fn extend(&self, m: usize) -> Self {
        assert!(m >= self.images.len());
        let mut images = self.images.clone();
        images.extend(self.images.len()..m);
        Perm { images }
    }

    /// Representative of the conjugacy class with cycle type `lambda`:
    /// consecutive cycles `(1 2 ... l_1)(l_1+1 ...)...`.
    pub fn class_representative(lambda: &Partition) -> Self {
        let n = lambda.size();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in lambda.parts() {
            for j in 0..len {
                images[start + j] = start + (j + 1) % len;
            }
            start += len;
        }
        Perm { images }
    }

    /// All permutations of `{1..n}` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm { images: cur.clone() });
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.images.len(), rhs.images.len(), "degree mismatch");
        Perm { images: rhs.images.iter().map(|&x| self.images[x]).collect() }
    }
}

impl Mul for Perm {
    type Output = Perm;

    fn mul(self, rhs: Perm) -> Perm {
        &self * &rhs
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Perm::from_one_based(&v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.one_based()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}
