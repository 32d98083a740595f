//! Central stabilization, boundary maps and the central stability complex.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{dim_poly, Partition};
use crate::error::{Error, Result};
use crate::linalg::{close_space, require_semisimple, Field, Matrix, Quotient};
use crate::perm::Perm;
use crate::symrep::{decompose, isotypic_projections, EquivMap, Induced, SymRep, Twist};

/// `Stab(V_{n-1}, V_n; φ)` together with the data used to build it.
#[derive(Clone, Debug)]
pub struct Stabilization<K: Field> {
    /// `Ind_{S_n}^{S_{n+1}} V_n`.
    pub induced: Induced<K>,
    /// Basis of the relation subspace `U` as columns.
    pub relations: Matrix<K>,
    pub quotient: Quotient<K>,
    pub rep: Arc<SymRep<K>>,
    /// `V_n ↪ Ind V_n ↠ Ind V_n / U`.
    pub map: EquivMap<K>,
}

/// The largest quotient of `Ind_{S_n}^{S_{n+1}} V_n` on which `(n, n+1)` fixes
/// the image of `V_{n-1}`.
///
/// `V_n` sits in the induced module as the identity coset. The relation
/// subspace is the generator closure of `φ(v) - s_n φ(v)`.
pub fn central_stabilization<K: Field>(phi: &EquivMap<K>) -> Result<Stabilization<K>> {
    let n = phi.target.degree();
    if phi.source.degree() + 1 != n {
        return Err(Error::NotEquivariant(format!(
            "central stabilization needs a map from S_{} to S_{}, got S_{} to S_{n}",
            n.saturating_sub(1),
            n,
            phi.source.degree()
        )));
    }
    let f = phi.target.field().clone();
    // For k = 1 the twist is a character of S_1, so both choices agree.
    let induced = phi.target.induce(1, Twist::Trivial);
    let w = &induced.rep;
    let include = induced.inclusion();
    let image = include.matrix.mul(&phi.matrix)?;
    let seed: Vec<Vec<K::Elem>> = if n >= 1 {
        let s_n = w.gen(n);
        (0..image.cols())
            .map(|c| {
                let v = image.column(c);
                let sv = s_n.mul_vec(&v).expect("dimensions agree");
                v.iter().zip(&sv).map(|(a, b)| f.sub(a, b)).collect()
            })
            .collect()
    } else {
        Vec::new()
    };
    let space = close_space(&f, w.dim(), seed, w.gens())?;
    let (rep, quotient) = w.quotient_by_space(&space)?;
    let rep = Arc::new(rep);
    let matrix = quotient.projection.mul(&include.matrix)?;
    let map = EquivMap::new(phi.target.clone(), rep.clone(), matrix)?;
    Ok(Stabilization { relations: space.basis_matrix(), induced, quotient, rep, map })
}

/// Representatives `σ_j` (`j = n+1..=m`) of `S_{n+1..m} / S_{n+2..m}` with
/// `σ_j(n+1) = j`: the cycle `(n+1 j j-1 ... n+2)`, of minimal length.
pub fn boundary_transversal(n: usize, m: usize) -> Vec<Perm> {
    (n + 1..=m)
        .map(|j| {
            let mut cycle = vec![n + 1];
            cycle.extend((n + 2..=j).rev());
            Perm::cycle(m, &cycle).expect("points lie in 1..=m")
        })
        .collect()
}

/// Transpositions `(n+1, j)`, another transversal of the same cosets.
pub fn transposition_transversal(n: usize, m: usize) -> Vec<Perm> {
    (n + 1..=m).map(|j| Perm::transposition(m, n + 1, j)).collect()
}

fn check_boundary_transversal(n: usize, m: usize, reps: &[Perm]) -> Result<()> {
    let mut hit = vec![false; m + 1];
    for r in reps {
        if r.degree() != m || (1..=n).any(|x| r.apply(x) != x) {
            return Err(Error::InvalidPermutation(format!("{r} does not lie in S_{{{}..{m}}}", n + 1)));
        }
        let j = r.apply(n + 1);
        if hit[j] {
            return Err(Error::InvalidPermutation(format!("two representatives send {} to {j}", n + 1)));
        }
        hit[j] = true;
    }
    if reps.len() != m - n {
        return Err(Error::InvalidPermutation(format!("expected {} representatives, got {}", m - n, reps.len())));
    }
    Ok(())
}

/// The `m`-boundary map `Ind(V_n, m-n) → Ind(V_{n+1}, m-n-1)` of `phi`, both
/// sign-twisted, using the minimal-length transversal.
pub fn boundary_map<K: Field>(phi: &EquivMap<K>, m: usize) -> Result<EquivMap<K>> {
    let n = phi.source.degree();
    boundary_map_with_transversal(phi, m, &boundary_transversal(n, m))
}

/// As [`boundary_map`], with `∂'(v) = Σ_{σ ∈ reps} sgn(σ) σ·φ(v)`.
pub fn boundary_map_with_transversal<K: Field>(phi: &EquivMap<K>, m: usize, reps: &[Perm]) -> Result<EquivMap<K>> {
    let n = phi.source.degree();
    check_map_degrees(phi)?;
    if m <= n {
        return Err(Error::DimensionMismatch(format!("boundary map needs M > {n}, got {m}")));
    }
    let source = phi.source.induce(m - n, Twist::Sign);
    let target = phi.target.induce(m - n - 1, Twist::Sign);
    let matrix = boundary_matrix(phi, &source, &target, reps)?;
    EquivMap::new(Arc::new(source.rep), Arc::new(target.rep), matrix)
}

fn check_map_degrees<K: Field>(phi: &EquivMap<K>) -> Result<()> {
    if phi.source.degree() + 1 != phi.target.degree() {
        return Err(Error::NotEquivariant(format!(
            "expected a map from S_n to S_(n+1), got S_{} to S_{}",
            phi.source.degree(),
            phi.target.degree()
        )));
    }
    Ok(())
}

fn boundary_matrix<K: Field>(
    phi: &EquivMap<K>,
    source: &Induced<K>,
    target: &Induced<K>,
    reps: &[Perm],
) -> Result<Matrix<K>> {
    let f = phi.source.field();
    let n = phi.source.degree();
    let m = source.rep.degree();
    check_boundary_transversal(n, m, reps)?;
    let idc = target.identity_coset();
    let d = phi.source.dim();
    // ∂'(v) for the basis of V_n.
    let primes: Vec<Vec<K::Elem>> = (0..d)
        .map(|c| {
            let v = phi.matrix.column(c);
            let mut acc = vec![f.zero(); target.rep.dim()];
            for sigma in reps {
                let w = target.act_on_coset(sigma, idc, &v)?;
                let negate = sigma.sign() < 0;
                for (a, x) in acc.iter_mut().zip(&w) {
                    if !f.is_zero(x) {
                        *a = if negate { f.sub(a, x) } else { f.add(a, x) };
                    }
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let mut cols = Vec::with_capacity(source.rep.dim());
    for c in source.transversal() {
        for p in &primes {
            cols.push(target.act(c, p)?);
        }
    }
    Matrix::from_columns(f, target.rep.dim(), &cols)
}

/// `V_start → V_{start+1} → ...` with `S_i`-equivariant maps.
#[derive(Clone, Debug)]
pub struct CoherentSequence<K: Field> {
    pub start: usize,
    pub reps: Vec<Arc<SymRep<K>>>,
    /// `maps[i]: reps[i] → reps[i+1]`.
    pub maps: Vec<EquivMap<K>>,
}

impl<K: Field> CoherentSequence<K> {
    /// A one-term sequence.
    pub fn single(rep: Arc<SymRep<K>>) -> Self {
        CoherentSequence { start: rep.degree(), reps: vec![rep], maps: Vec::new() }
    }

    /// Chains maps whose consecutive endpoints carry the same generators.
    pub fn from_maps(maps: Vec<EquivMap<K>>) -> Result<Self> {
        let first = maps.first().ok_or_else(|| Error::DimensionMismatch("empty sequence of maps".into()))?;
        let mut reps = vec![first.source.clone()];
        for (i, phi) in maps.iter().enumerate() {
            check_map_degrees(phi)?;
            if i > 0 {
                let prev = &maps[i - 1].target;
                if prev.gens() != phi.source.gens() {
                    return Err(Error::DimensionMismatch(format!("map {i} does not start where map {} ends", i - 1)));
                }
            }
            phi.check()?;
            reps.push(phi.target.clone());
        }
        Ok(CoherentSequence { start: first.source.degree(), reps, maps })
    }

    /// Index of the last term.
    pub fn end(&self) -> usize {
        self.start + self.reps.len() - 1
    }

    pub fn term(&self, n: usize) -> &SymRep<K> {
        &self.reps[n - self.start]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.reps.iter().map(|r| r.dim()).collect()
    }

    /// Composite `V_i → V_j` for `start <= i <= j <= end`.
    pub fn composite(&self, i: usize, j: usize) -> Result<Matrix<K>> {
        let f = self.reps[0].field();
        let mut acc = Matrix::identity(f, self.term(i).dim());
        for k in i..j {
            acc = self.maps[k - self.start].matrix.mul(&acc)?;
        }
        Ok(acc)
    }

    /// The contiguous piece from `from` to `to`.
    pub fn slice(&self, from: usize, to: usize) -> Self {
        let a = from - self.start;
        let b = to - self.start;
        CoherentSequence { start: from, reps: self.reps[a..=b].to_vec(), maps: self.maps[a..b].to_vec() }
    }
}

/// Whether every vector of `V_j` coming from `V_i` is fixed by `S_{i+1..j}`,
/// tested on the generators `s_{i+1}, ..., s_{j-1}` and composite matrices.
pub fn potential_check<K: Field>(seq: &CoherentSequence<K>) -> Result<bool> {
    for i in seq.start..=seq.end() {
        for j in i + 1..=seq.end() {
            let phi = seq.composite(i, j)?;
            let vj = seq.term(j);
            for l in i + 1..j {
                if vj.gen(l).mul(&phi)? != phi {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Terms `Ind(V_i, M - i)` (sign twist) and the boundary maps between them.
#[derive(Clone, Debug)]
pub struct ChainComplex<K: Field> {
    pub m: usize,
    pub terms: Vec<Arc<SymRep<K>>>,
    /// `boundaries[i]: terms[i] → terms[i+1]`.
    pub boundaries: Vec<Matrix<K>>,
}

impl<K: Field> ChainComplex<K> {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }

    /// Index of the first pair of boundaries whose composite is nonzero.
    pub fn first_nonzero_square(&self) -> Result<Option<usize>> {
        for (i, pair) in self.boundaries.windows(2).enumerate() {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn check_equivariance(&self) -> Result<()> {
        for (i, d) in self.boundaries.iter().enumerate() {
            EquivMap::new(self.terms[i].clone(), self.terms[i + 1].clone(), d.clone())?;
        }
        Ok(())
    }

    /// `dim ker(d_i) - rank(d_{i-1})` at every term, the last term mapping to 0
    /// and the first receiving 0.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(Matrix::rank).collect();
        self.terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let outgoing = ranks.get(i).copied().unwrap_or(0);
                let incoming = if i == 0 { 0 } else { ranks[i - 1] };
                t.dim() - outgoing - incoming
            })
            .collect()
    }

    /// Homology at every position except the leftmost, which has no incoming map.
    pub fn interior_homology(&self) -> Vec<usize> {
        self.homology_dims().into_iter().skip(1).collect()
    }
}

/// The `M`-central stability complex of a potentially centrally stable sequence.
pub fn central_stability_complex<K: Field>(seq: &CoherentSequence<K>, m: usize) -> Result<ChainComplex<K>> {
    if m < seq.end() {
        return Err(Error::DimensionMismatch(format!("M = {m} is smaller than the last index {}", seq.end())));
    }
    if !potential_check(seq)? {
        return Err(Error::PotentialStabilityViolation(format!(
            "sequence {}..{} is not potentially centrally stable",
            seq.start,
            seq.end()
        )));
    }
    let induced: Vec<Induced<K>> =
        seq.reps.iter().enumerate().map(|(i, r)| r.induce(m - seq.start - i, Twist::Sign)).collect();
    let mut boundaries = Vec::with_capacity(seq.maps.len());
    for (i, phi) in seq.maps.iter().enumerate() {
        let n = phi.source.degree();
        boundaries.push(boundary_matrix(phi, &induced[i], &induced[i + 1], &boundary_transversal(n, m))?);
    }
    let complex = ChainComplex { m, terms: induced.into_iter().map(|i| Arc::new(i.rep)).collect(), boundaries };
    if let Some(i) = complex.first_nonzero_square()? {
        return Err(Error::NotAComplex(i));
    }
    Ok(complex)
}

/// Iterates central stabilization from `phi: V_{N-1} → V_N`.
///
/// `length` counts maps, so the result has `length + 1` terms starting at
/// `V_{N-1}`. `quotient`, if given, is divided out of the first stabilization.
pub fn central_stabilization_sequence<K: Field>(
    phi: &EquivMap<K>,
    length: usize,
    quotient: Option<&Matrix<K>>,
) -> Result<CoherentSequence<K>> {
    check_map_degrees(phi)?;
    if length == 0 {
        return Ok(CoherentSequence::single(phi.source.clone()));
    }
    let mut maps = vec![phi.clone()];
    for step in 1..length {
        let stab = central_stabilization(maps.last().unwrap())?;
        let next = match (step, quotient) {
            (1, Some(q)) => {
                let (rep, quot) = stab.rep.quotient(q)?;
                let rep = Arc::new(rep);
                let matrix = quot.projection.mul(&stab.map.matrix)?;
                EquivMap::new(stab.map.source.clone(), rep, matrix)?
            }
            _ => stab.map,
        };
        maps.push(next);
    }
    CoherentSequence::from_maps(maps)
}

/// Starting maps `V_{N-1} → V_N` for central stabilization sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Seed {
    /// `1_{N-1} → 1_N`.
    Trivial,
    /// `𝒫_{N-1} → 𝒫_N`, `[i] ↦ [i]`.
    Permutation,
    /// The stabilization map `S^μ → S^{stab μ}`; `N = |μ| + 1`.
    Specht(Partition),
    /// `0 → S^ν`; `N = |ν|`.
    Zero(Partition),
    /// `S^λ ↪ Ind(S^λ, 1)` onto the identity coset; `N = |λ| + 1`.
    Induced(Partition),
}

impl Seed {
    /// `N`, the degree of the target; `default` is used by the families that
    /// exist in every degree.
    pub fn degree(&self, default: usize) -> usize {
        match self {
            Seed::Trivial | Seed::Permutation => default,
            Seed::Specht(mu) | Seed::Induced(mu) => mu.size() + 1,
            Seed::Zero(nu) => nu.size(),
        }
    }

    pub fn map<K: Field>(&self, field: &K, default: usize) -> Result<EquivMap<K>> {
        let n = self.degree(default);
        if n == 0 {
            return Err(Error::InvalidRepresentation("seed maps need N >= 1".into()));
        }
        match self {
            Seed::Trivial => {
                let m = Matrix::identity(field, 1);
                EquivMap::new(Arc::new(SymRep::trivial(field, n - 1)), Arc::new(SymRep::trivial(field, n)), m)
            }
            Seed::Permutation => {
                let mut m = Matrix::zeros(field, n, n - 1);
                for i in 0..n - 1 {
                    m.set(i, i, field.one());
                }
                EquivMap::new(Arc::new(SymRep::permutation(field, n - 1)), Arc::new(SymRep::permutation(field, n)), m)
            }
            Seed::Specht(mu) => crate::specht::stabilization_map_for(mu, field),
            Seed::Zero(nu) => {
                let target = crate::specht::specht_module(nu, field).rep;
                let m = Matrix::zeros(field, target.dim(), 0);
                EquivMap::new(Arc::new(SymRep::zero(field, n - 1)), Arc::new(target), m)
            }
            Seed::Induced(lambda) => {
                let base = crate::specht::specht_module(lambda, field).rep;
                let ind = base.induce(1, Twist::Trivial);
                let inc = ind.inclusion();
                EquivMap::new(inc.source.clone(), inc.target.clone(), inc.matrix)
            }
        }
    }
}

impl std::fmt::Display for Seed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Seed::Trivial => write!(f, "trivial"),
            Seed::Permutation => write!(f, "perm"),
            Seed::Specht(mu) => write!(f, "specht:{mu}"),
            Seed::Zero(nu) => write!(f, "zero:{nu}"),
            Seed::Induced(l) => write!(f, "ind:{l}"),
        }
    }
}

impl std::str::FromStr for Seed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "trivial" => return Ok(Seed::Trivial),
            "perm" | "permutation" => return Ok(Seed::Permutation),
            _ => {}
        }
        let (kind, rest) = s.split_once(':').ok_or_else(|| {
            Error::Parse(format!("unknown seed '{s}' (expected trivial, perm, specht:MU, zero:NU or ind:LAMBDA)"))
        })?;
        let p: Partition = rest.parse()?;
        match kind {
            "specht" => Ok(Seed::Specht(p)),
            "zero" => Ok(Seed::Zero(p)),
            "ind" => Ok(Seed::Induced(p)),
            _ => Err(Error::Parse(format!("unknown seed kind '{kind}'"))),
        }
    }
}

/// Per-term data of a Specht stability certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateTerm {
    pub n: usize,
    pub dim: usize,
    /// Constituents grouped by first-row length, ascending.
    pub by_width: Vec<(usize, Vec<Partition>)>,
    /// Whether the constituents of the next term are exactly `stab` of these,
    /// with the map injective on each isotypic piece. `None` for the last term.
    pub matched_next: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpechtCertificate {
    pub terms: Vec<CertificateTerm>,
    /// Smallest index from which every map matches, if any.
    pub stable_from: Option<usize>,
}

/// Decomposes every term and checks that each map sends the `μ`-isotypic
/// piece injectively into the `stab(μ)`-isotypic piece of the next term.
pub fn specht_stability_certificate<K: Field>(seq: &CoherentSequence<K>) -> Result<SpechtCertificate> {
    let f = seq.reps[0].field();
    require_semisimple(f, seq.end())?;
    let decs = seq.reps.iter().map(|r| decompose(r)).collect::<Result<Vec<_>>>()?;
    let projs = seq.reps.iter().map(|r| isotypic_projections(r)).collect::<Result<Vec<_>>>()?;
    let mut terms = Vec::with_capacity(seq.reps.len());
    for (i, dec) in decs.iter().enumerate() {
        let mut groups: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
        for mu in dec.multiset() {
            groups.entry(mu.width()).or_default().push(mu);
        }
        let matched_next = if i + 1 < seq.reps.len() {
            let next = &decs[i + 1];
            let mut predicted: Vec<Partition> = dec.multiset().iter().map(Partition::stab).collect();
            predicted.sort();
            let mut actual = next.multiset();
            actual.sort();
            let mut ok = predicted == actual;
            if ok {
                let phi = &seq.maps[i].matrix;
                for (mu, e) in &projs[i] {
                    let r = e.rank();
                    if r == 0 {
                        continue;
                    }
                    let target =
                        &projs[i + 1].iter().find(|(nu, _)| *nu == mu.stab()).expect("all partitions present").1;
                    if target.mul(&phi.mul(e)?)?.rank() != r {
                        ok = false;
                        break;
                    }
                }
            }
            Some(ok)
        } else {
            None
        };
        terms.push(CertificateTerm {
            n: seq.start + i,
            dim: seq.reps[i].dim(),
            by_width: groups.into_iter().collect(),
            matched_next,
        });
    }
    let mut stable_from = None;
    for t in terms.iter().rev() {
        match t.matched_next {
            Some(false) => break,
            _ => stable_from = Some(t.n),
        }
    }
    if terms.len() < 2 {
        stable_from = None;
    }
    Ok(SpechtCertificate { terms, stable_from })
}

/// Predicted versus computed dimensions from the point of Specht stability on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub base: Option<usize>,
    /// `(n, computed, predicted)` for `n >= base`.
    pub rows: Vec<(usize, usize, u128)>,
    /// Coefficients in `n` of the dimension polynomial, constant term first.
    pub polynomial: Vec<String>,
    /// Range of `n` where prediction and computation agree.
    pub agreement: Option<(usize, usize)>,
    pub pass: bool,
}

/// Compares `dim V_n` with `Σ_μ dimPoly(μ, n - base)` over the constituents
/// `μ` of `V_base`, where `base` is where the certificate starts matching.
pub fn dimension_polynomial_check<K: Field>(seq: &CoherentSequence<K>) -> Result<DimensionReport> {
    let cert = specht_stability_certificate(seq)?;
    let Some(base) = cert.stable_from else {
        return Ok(DimensionReport {
            base: None,
            rows: Vec::new(),
            polynomial: Vec::new(),
            agreement: None,
            pass: false,
        });
    };
    let constituents: Vec<Partition> =
        cert.terms[base - seq.start].by_width.iter().flat_map(|(_, ps)| ps.iter().cloned()).collect();
    let predict = |k: usize| -> u128 { constituents.iter().map(|mu| dim_poly(mu, k)).sum() };
    let rows: Vec<(usize, usize, u128)> =
        (base..=seq.end()).map(|n| (n, seq.term(n).dim(), predict(n - base))).collect();
    let agreeing: Vec<usize> = rows.iter().filter(|(_, a, b)| *a as u128 == *b).map(|(n, _, _)| *n).collect();
    let pass = agreeing.len() == rows.len();
    let agreement = if pass { Some((base, seq.end())) } else { None };
    let degree = constituents.iter().map(|mu| mu.size().saturating_sub(mu.part(0))).max().unwrap_or(0);
    let samples: Vec<(i64, BigRational)> =
        (0..=degree).map(|k| ((base + k) as i64, BigRational::from_integer(BigInt::from(predict(k))))).collect();
    let polynomial = interpolate(&samples).iter().map(ToString::to_string).collect();
    Ok(DimensionReport { base: Some(base), rows, polynomial, agreement, pass })
}

/// Coefficients of the interpolating polynomial, constant term first.
fn interpolate(points: &[(i64, BigRational)]) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::zero(); points.len()];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Lagrange basis polynomial for xi.
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigRational::from_integer(BigInt::from(*xj));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xi - xj));
        }
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * yi / &denom;
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}
