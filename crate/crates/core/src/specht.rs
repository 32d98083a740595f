//! Permutation modules on tabloids, polytabloids and Specht modules.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::combinatorics::{enumerate_tabloids, standard_tableaux, Partition, Tableau, Tabloid, WeakPartition};
use crate::error::{Error, Result};
use crate::linalg::{EchelonSpace, Field, Matrix};
use crate::perm::Perm;
use crate::symrep::{BasisLabel, EquivMap, SymRep};

/// `M^η`: the span of the tabloids of shape `η`.
///
/// Generators are kept as permutations of the tabloid basis; the dense
/// [`SymRep`] is only built on request.
#[derive(Clone, Debug)]
pub struct PermutationModule {
    shape: WeakPartition,
    tabloids: Vec<Tabloid>,
    index: HashMap<Vec<u8>, usize>,
    /// `gens[i][j]` is the index of `s_{i+1} · tabloid j`.
    gens: Vec<Vec<usize>>,
}

impl PermutationModule {
    pub fn new(shape: &WeakPartition) -> Self {
        let tabloids = enumerate_tabloids(shape);
        let codes: Vec<Vec<u8>> = tabloids.iter().map(Tabloid::row_of).collect();
        let index: HashMap<Vec<u8>, usize> = codes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let n = shape.size();
        let gens = (1..n)
            .map(|i| {
                codes
                    .iter()
                    .map(|c| {
                        let mut c = c.clone();
                        c.swap(i - 1, i);
                        index[&c]
                    })
                    .collect()
            })
            .collect();
        PermutationModule { shape: shape.clone(), tabloids, index, gens }
    }

    pub fn shape(&self) -> &WeakPartition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.tabloids.len()
    }

    pub fn tabloids(&self) -> &[Tabloid] {
        &self.tabloids
    }

    /// Position of a tabloid given by its `row_of` code.
    pub fn index_of(&self, row_of: &[u8]) -> Option<usize> {
        self.index.get(row_of).copied()
    }

    /// `s_i · v` for `i` 1-based.
    pub fn act_gen<K: Field>(&self, field: &K, i: usize, v: &[K::Elem]) -> Vec<K::Elem> {
        let mut out = vec![field.zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            if !field.is_zero(x) {
                out[self.gens[i - 1][j]] = x.clone();
            }
        }
        out
    }

    pub fn rep<K: Field>(&self, field: &K) -> SymRep<K> {
        let d = self.dim();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Matrix::zeros(field, d, d);
                for (j, &img) in g.iter().enumerate() {
                    m.set(img, j, field.one());
                }
                m
            })
            .collect();
        let labels = self.tabloids.iter().map(|t| BasisLabel::Tabloid { tabloid: t.clone() }).collect();
        SymRep::new(field, self.degree(), labels, gens).expect("generator shapes agree")
    }

    /// Smallest submodule containing `seed`, by closure under the generators.
    pub fn span_of_orbit<K: Field>(&self, field: &K, seed: Vec<Vec<K::Elem>>) -> EchelonSpace<K> {
        let mut space = EchelonSpace::new(field, self.dim());
        let mut queue: VecDeque<Vec<K::Elem>> = seed.into_iter().collect();
        while let Some(v) = queue.pop_front() {
            if space.dim() == self.dim() {
                break;
            }
            if space.insert(v.clone()) {
                for i in 1..=self.gens.len() {
                    queue.push_back(self.act_gen(field, i, &v));
                }
            }
        }
        space
    }
}

/// Signed tabloids `{σ t}` for `σ` in the column stabilizer of the part of
/// `t` lying inside `nu`, as `(row_of, sign)`.
pub fn polytabloid_terms(t: &Tableau, nu: &WeakPartition) -> Vec<(Vec<u8>, i64)> {
    let base = t.tabloid().row_of();
    // Cells (row, entry) of each column inside nu.
    let width = nu.parts().iter().copied().max().unwrap_or(0);
    let columns: Vec<Vec<(u8, usize)>> = (0..width)
        .map(|c| {
            (0..nu.num_rows())
                .filter(|&r| c < nu.part(r))
                .map(|r| (r as u8, t.entry(r, c).expect("nu lies inside the shape of t")))
                .collect()
        })
        .filter(|col: &Vec<(u8, usize)>| col.len() > 1)
        .collect();
    let mut out = vec![(base, 1i64)];
    for col in columns {
        let perms = Perm::all(col.len());
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for (code, sign) in &out {
            for p in &perms {
                let mut c = code.clone();
                for (j, &(_, x)) in col.iter().enumerate() {
                    c[x - 1] = col[p.apply0(j)].0;
                }
                next.push((c, sign * p.sign()));
            }
        }
        out = next;
    }
    out
}

/// `e_t` in the tabloid basis of `M^{shape(t)}`.
pub fn polytabloid<K: Field>(t: &Tableau, field: &K) -> Result<Vec<K::Elem>> {
    let shape = t.shape();
    if shape.as_partition().is_none() {
        return Err(Error::InvalidTableau(format!("{t} does not have partition shape")));
    }
    generalized_polytabloid(t, &shape, field)
}

/// `e_t^ν`: alternation only over the columns of the part of `t` inside `nu`.
pub fn generalized_polytabloid<K: Field>(t: &Tableau, nu: &WeakPartition, field: &K) -> Result<Vec<K::Elem>> {
    let shape = t.shape();
    if !shape.contains(nu) {
        return Err(Error::InvalidTableau(format!("({nu}) does not fit inside ({shape})")));
    }
    let module = PermutationModule::new(&shape);
    Ok(expand(&module, &polytabloid_terms(t, nu), field))
}

fn expand<K: Field>(module: &PermutationModule, terms: &[(Vec<u8>, i64)], field: &K) -> Vec<K::Elem> {
    let mut v = vec![field.zero(); module.dim()];
    for (code, sign) in terms {
        let j = module.index_of(code).expect("term is a tabloid of the module's shape");
        v[j] = field.add(&v[j], &field.from_i64(*sign));
    }
    v
}

/// `S^μ` with the standard polytabloid basis.
#[derive(Clone, Debug)]
pub struct SpechtModule<K: Field> {
    pub shape: Partition,
    /// Standard tableaux labelling the basis, in `standard_tableaux` order.
    pub tableaux: Vec<Tableau>,
    pub rep: SymRep<K>,
    ambient: Arc<PermutationModule>,
}

impl<K: Field> SpechtModule<K> {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn ambient(&self) -> &PermutationModule {
        &self.ambient
    }

    /// Columns are the standard polytabloids in tabloid coordinates.
    pub fn embedding_matrix(&self) -> Matrix<K> {
        let f = self.rep.field();
        let cols: Vec<Vec<K::Elem>> = self
            .tableaux
            .iter()
            .map(|t| expand(&self.ambient, &polytabloid_terms(t, &(&self.shape).into()), f))
            .collect();
        Matrix::from_columns(f, self.ambient.dim(), &cols).expect("column lengths agree")
    }

    /// The inclusion `S^μ ↪ M^μ`, checked for equivariance.
    pub fn embedding(&self) -> Result<EquivMap<K>> {
        let f = self.rep.field();
        EquivMap::new(Arc::new(self.rep.clone()), Arc::new(self.ambient.rep(f)), self.embedding_matrix())
    }
}

/// Builds `S^μ`. The action on the standard basis is obtained by solving for
/// `g · e_t` in the coordinates of the standard tabloids, where the standard
/// polytabloids are unitriangular.
pub fn specht_module<K: Field>(mu: &Partition, field: &K) -> SpechtModule<K> {
    let shape: WeakPartition = mu.into();
    let ambient = Arc::new(PermutationModule::new(&shape));
    let tableaux = standard_tableaux(mu);
    let d = tableaux.len();
    let n = mu.size();
    let std_index: HashMap<Vec<u8>, usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t.tabloid().row_of(), i)).collect();
    let restrict = |t: &Tableau| -> Vec<K::Elem> {
        let mut v = vec![field.zero(); d];
        for (code, sign) in polytabloid_terms(t, &shape) {
            if let Some(&i) = std_index.get(&code) {
                v[i] = field.add(&v[i], &field.from_i64(sign));
            }
        }
        v
    };
    let b = Matrix::from_columns(field, d, &tableaux.iter().map(restrict).collect::<Vec<_>>()).expect("square");
    let b_inv = b.inverse().ok().flatten().expect("standard polytabloids are unitriangular on standard tabloids");
    let gens = (1..n)
        .map(|i| {
            let cols: Vec<Vec<K::Elem>> = tableaux
                .iter()
                .map(|t| {
                    let moved = t.swap_adjacent(i);
                    if let Some(j) = tableaux.iter().position(|s| *s == moved) {
                        let mut e = vec![field.zero(); d];
                        e[j] = field.one();
                        e
                    } else if t.columns().iter().any(|c| c.contains(&i) && c.contains(&(i + 1))) {
                        // s_i lies in the column stabilizer.
                        let mut e = vec![field.zero(); d];
                        e[tableaux.iter().position(|s| s == t).unwrap()] = field.neg(&field.one());
                        e
                    } else {
                        b_inv.mul_vec(&restrict(&moved)).expect("shapes agree")
                    }
                })
                .collect();
            Matrix::from_columns(field, d, &cols).expect("column lengths agree")
        })
        .collect();
    let labels = tableaux.iter().map(|t| BasisLabel::Tableau { tableau: t.clone() }).collect();
    let rep = SymRep::new(field, n, labels, gens).expect("generator shapes agree");
    SpechtModule { shape: mu.clone(), tableaux, rep, ambient }
}

/// `S^{ν,η}` inside `M^η`, as the orbit span of one generalized polytabloid.
///
/// The basis is the reduced echelon basis of that span; each vector is
/// labelled by its pivot tabloid.
pub fn generalized_specht<K: Field>(nu: &Partition, eta: &WeakPartition, field: &K) -> Result<SymRep<K>> {
    let nu_weak: WeakPartition = nu.into();
    if !eta.contains(&nu_weak) {
        return Err(Error::InvalidPartition(format!("({nu}) is not contained in ({eta})")));
    }
    let module = PermutationModule::new(eta);
    let t = Tableau::row_reading(eta);
    let seed = expand(&module, &polytabloid_terms(&t, &nu_weak), field);
    let space = module.span_of_orbit(field, vec![seed]);
    let basis = space.basis_rows();
    let gens = (1..eta.size())
        .map(|i| {
            let cols: Vec<Vec<K::Elem>> = basis
                .iter()
                .map(|b| space.coordinates(&module.act_gen(field, i, b)).expect("span is invariant"))
                .collect();
            Matrix::from_columns(field, basis.len(), &cols).expect("column lengths agree")
        })
        .collect();
    let labels =
        space.pivots().iter().map(|&p| BasisLabel::Tabloid { tabloid: module.tabloids()[p].clone() }).collect();
    SymRep::new(field, eta.size(), labels, gens)
}

/// `S^μ → S^{stab μ}`, `e_t ↦ e_{t'}` with `n + 1` appended to the first row of `t`.
/// Standard tableaux go to standard tableaux, so the matrix is a 0/1 injection.
pub fn stabilization_map<K: Field>(source: &SpechtModule<K>, target: &SpechtModule<K>) -> Result<EquivMap<K>> {
    if target.shape != source.shape.stab() {
        return Err(Error::DimensionMismatch(format!("target ({}) is not stab of ({})", target.shape, source.shape)));
    }
    let f = source.rep.field();
    let n = source.shape.size();
    let index: HashMap<&Tableau, usize> = target.tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = Matrix::zeros(f, target.dim(), source.dim());
    for (j, t) in source.tableaux.iter().enumerate() {
        let image = t.append_to_first_row(n + 1);
        m.set(index[&image], j, f.one());
    }
    EquivMap::new(Arc::new(source.rep.clone()), Arc::new(target.rep.clone()), m)
}

/// Builds both modules and the stabilization map between them.
pub fn stabilization_map_for<K: Field>(mu: &Partition, field: &K) -> Result<EquivMap<K>> {
    stabilization_map(&specht_module(mu, field), &specht_module(&mu.stab(), field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_partitions;
    use crate::linalg::{PrimeField, Rationals};
    use crate::symrep::{specht_character, Character};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn permutation_module_examples() {
        let f = Rationals;
        let m = PermutationModule::new(&p(&[4]).into());
        assert_eq!(m.dim(), 1);
        assert_eq!(m.rep(&f).character(), SymRep::trivial(&f, 4).character());
        for n in 2..6 {
            let m = PermutationModule::new(&p(&[n - 1, 1]).into());
            assert_eq!(m.dim(), n);
            assert_eq!(m.rep(&f).character(), SymRep::permutation(&f, n).character());
        }
        let m = PermutationModule::new(&p(&[2, 1]).into());
        assert_eq!(m.dim(), 3);
        m.rep(&f).check_coxeter().unwrap();
    }

    #[test]
    fn polytabloid_examples() {
        let f = Rationals;
        let e = polytabloid(&tab(&[&[1, 2, 3]]), &f).unwrap();
        assert_eq!(e, vec![f.one()]);
        let e = polytabloid(&tab(&[&[1], &[2]]), &f).unwrap();
        let nonzero: Vec<i64> = e.iter().filter(|x| !f.is_zero(x)).map(|x| f.to_i64(x).unwrap()).collect();
        assert_eq!(nonzero.len(), 2);
        assert_eq!(nonzero.iter().sum::<i64>(), 0);
        let e = polytabloid(&tab(&[&[1, 2], &[3]]), &f).unwrap();
        let mut coeffs: Vec<i64> = e.iter().filter(|x| !f.is_zero(x)).map(|x| f.to_i64(x).unwrap()).collect();
        coeffs.sort_unstable();
        assert_eq!(coeffs, vec![-1, 1]);
        // {1,2 / 3} - {2,3 / 1} ... the base tabloid carries +1.
        let m = PermutationModule::new(&p(&[2, 1]).into());
        let base = m.index_of(&tab(&[&[1, 2], &[3]]).tabloid().row_of()).unwrap();
        assert!(f.is_one(&e[base]));
    }

    #[test]
    fn specht_dimensions() {
        let f = Rationals;
        for n in 1..7 {
            assert_eq!(specht_module(&p(&[n]), &f).dim(), 1);
            if n >= 2 {
                assert_eq!(specht_module(&p(&[n - 1, 1]), &f).dim(), n - 1);
            }
        }
        assert_eq!(specht_module(&p(&[2, 1]), &f).dim(), 2);
    }

    #[test]
    fn specht_character_matches_murnaghan_nakayama() {
        let f = Rationals;
        for n in 1..6 {
            for mu in enumerate_partitions(n) {
                let s = specht_module(&mu, &f);
                s.rep.check_coxeter().unwrap();
                assert_eq!(s.rep.character(), Character::of_specht(&f, &mu), "({mu})");
            }
        }
        assert_eq!(specht_character(&p(&[2, 2]), &p(&[2, 2])), 2);
    }

    #[test]
    fn embedding_is_equivariant_and_injective() {
        for field in [PrimeField::new(2).unwrap(), PrimeField::new(7).unwrap()] {
            for mu in enumerate_partitions(4) {
                let s = specht_module(&mu, &field);
                s.rep.check_coxeter().unwrap();
                let e = s.embedding().unwrap();
                assert!(e.is_injective());
            }
        }
    }

    #[test]
    fn stabilization_map_examples() {
        let f = Rationals;
        let m = stabilization_map_for(&p(&[3]), &f).unwrap();
        assert!(m.matrix.is_identity());
        let m = stabilization_map_for(&p(&[1]), &f).unwrap();
        assert_eq!(m.rank(), 1);
        let m = stabilization_map_for(&p(&[2, 1]), &f).unwrap();
        assert_eq!((m.matrix.rows(), m.matrix.cols(), m.rank()), (3, 2, 2));
    }

    #[test]
    fn generalized_specht_examples() {
        let f = Rationals;
        for nu in enumerate_partitions(4) {
            let g = generalized_specht(&nu, &(&nu).into(), &f).unwrap();
            assert_eq!(g.character(), Character::of_specht(&f, &nu));
            g.check_coxeter().unwrap();
        }
        let eta = WeakPartition::new(vec![2, 0, 1]);
        let g = generalized_specht(&Partition::empty(), &eta, &f).unwrap();
        assert_eq!(g.dim(), PermutationModule::new(&eta).dim());
        assert!(generalized_specht(&p(&[3]), &eta, &f).is_err());
    }
}
