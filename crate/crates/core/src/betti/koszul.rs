use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::rc::Rc;

use rayon::prelude::*;

use super::{BettiError, BettiTable};
use crate::groebner::{buchberger, GroebnerBasis, Reducer};
use crate::linalg::{rank, sparse_from_entries, SparseVec};
use crate::poly::{Ideal, Monomial, MonomialIdeal, Polynomial, Ring};

/// All monomials of total degree `d` not in `ideal`, in descending lex order.
pub fn standard_monomials(ideal: &MonomialIdeal, d: u32) -> Vec<Monomial> {
    let grading = Grading::standard(ideal.nvars());
    let mut out = grading.monomials_of_degree(&[d]);
    out.retain(|m| !ideal.contains(m));
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// A multigrading by nonnegative integer vectors, one weight per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    weights: Vec<Vec<u32>>,
    /// Dotted with a multidegree gives the total degree.
    total: Vec<u32>,
}

impl Grading {
    /// `Z`-grading with every variable of degree one.
    pub fn standard(nvars: usize) -> Self {
        Grading {
            weights: vec![vec![1]; nvars],
            total: vec![1],
        }
    }

    /// `Z^N`-grading by exponent vectors.
    pub fn fine(nvars: usize) -> Self {
        Grading {
            weights: (0..nvars)
                .map(|k| (0..nvars).map(|l| (k == l) as u32).collect())
                .collect(),
            total: vec![1; nvars],
        }
    }

    /// `Z^{n+1}`-grading: `x_i` has degree `e_i + e_{n+1}`, `y_i` has degree
    /// `e_i`. Every `x_i y_j - x_j y_i` is homogeneous. Rings with an
    /// auxiliary variable are not supported.
    pub fn vertex(ring: &Ring) -> Self {
        assert!(!ring.aux, "vertex grading needs a ring without t");
        let n = ring.n;
        let weights = (0..ring.nvars())
            .map(|idx| {
                let mut w = vec![0; n + 1];
                w[idx % n] = 1;
                if idx < n {
                    w[n] = 1;
                }
                w
            })
            .collect();
        let mut total = vec![1; n];
        total.push(0);
        Grading { weights, total }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn degree(&self, m: &Monomial) -> Vec<u32> {
        let mut d = vec![0; self.total.len()];
        for (k, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                for (dk, wk) in d.iter_mut().zip(&self.weights[k]) {
                    *dk += e * wk;
                }
            }
        }
        d
    }

    fn total_degree(&self, d: &[u32]) -> usize {
        d.iter().zip(&self.total).map(|(a, b)| (a * b) as usize).sum()
    }

    fn is_homogeneous(&self, f: &Polynomial) -> bool {
        let mut degs = f.terms().iter().map(|(_, m)| self.degree(m));
        match degs.next() {
            Some(first) => degs.all(|d| d == first),
            None => true,
        }
    }

    fn fits(&self, k: usize, rest: &[u32]) -> bool {
        self.weights[k].iter().zip(rest).all(|(w, r)| w <= r)
    }

    fn subtract(&self, k: usize, rest: &mut [u32]) {
        for (r, w) in rest.iter_mut().zip(&self.weights[k]) {
            *r -= w;
        }
    }

    fn add(&self, k: usize, rest: &mut [u32]) {
        for (r, w) in rest.iter_mut().zip(&self.weights[k]) {
            *r += w;
        }
    }

    /// Every monomial of multidegree `d`.
    fn monomials_of_degree(&self, d: &[u32]) -> Vec<Monomial> {
        fn go(g: &Grading, k: usize, rest: &mut Vec<u32>, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if rest.iter().all(|&r| r == 0) {
                out.push(Monomial::from_exps(exps.clone()));
                return;
            }
            if k == g.nvars() {
                return;
            }
            go(g, k + 1, rest, exps, out);
            let mut taken = 0;
            while g.fits(k, rest) {
                g.subtract(k, rest);
                taken += 1;
                exps[k] = taken;
                go(g, k + 1, rest, exps, out);
            }
            for _ in 0..taken {
                g.add(k, rest);
            }
            exps[k] = 0;
        }
        let mut out = Vec::new();
        go(self, 0, &mut d.to_vec(), &mut vec![0; self.nvars()], &mut out);
        out
    }
}

/// A multidegree and the homological degrees wanted there (`None` for all).
type Cell = (Vec<u32>, Option<BTreeSet<usize>>);
/// A multidegree and its nonzero `(i, β_i)`.
type CellBetti = (Vec<u32>, Vec<(usize, u64)>);
type Terms = Rc<Vec<(u32, Monomial)>>;

/// Standard monomials of one multidegree with their positions.
struct Basis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

/// Per-worker caches of standard bases and normal forms of `var * m`.
struct Workspace<'a> {
    grading: &'a Grading,
    initial: &'a MonomialIdeal,
    reducer: &'a Reducer<'a>,
    field: crate::field::Fp,
    bases: HashMap<Vec<u32>, Rc<Basis>>,
    products: HashMap<(usize, Monomial), Terms>,
}

impl Workspace<'_> {
    fn basis(&mut self, d: &[u32]) -> Rc<Basis> {
        if let Some(b) = self.bases.get(d) {
            return b.clone();
        }
        let mut monomials = self.grading.monomials_of_degree(d);
        monomials.retain(|m| !self.initial.contains(m));
        let index = monomials.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let b = Rc::new(Basis { monomials, index });
        self.bases.insert(d.to_vec(), b.clone());
        b
    }

    fn times_var(&mut self, var: usize, m: &Monomial) -> Terms {
        let key = (var, m.clone());
        if let Some(p) = self.products.get(&key) {
            return p.clone();
        }
        let prod = m.mul(&Monomial::var(m.nvars(), var));
        let nf = if self.initial.contains(&prod) {
            self.reducer
                .reduce(&Polynomial::from_monomial(self.field, 1, prod))
                .terms()
                .to_vec()
        } else {
            vec![(1, prod)]
        };
        let nf = Rc::new(nf);
        self.products.insert(key, nf.clone());
        nf
    }

    /// `β_{i,d}` for every `i` in `wanted` (all `i` when `None`), from the
    /// Koszul complex in multidegree `d`.
    fn betti_in_degree(&mut self, d: &[u32], wanted: Option<&BTreeSet<usize>>) -> Vec<(usize, u64)> {
        let nvars = self.grading.nvars();
        let needed: Vec<bool> = (0..=nvars)
            .map(|k| match wanted {
                None => true,
                Some(w) => w.contains(&k) || (k > 0 && w.contains(&(k - 1))) || w.contains(&(k + 1)),
            })
            .collect();
        // Koszul generators e_U with w(U) <= d, grouped by |U|.
        let mut subsets = Vec::new();
        fn subsets_below(g: &Grading, k: usize, u: u64, rest: &mut Vec<u32>, out: &mut Vec<(u64, Vec<u32>)>) {
            if k == g.nvars() {
                out.push((u, rest.clone()));
                return;
            }
            subsets_below(g, k + 1, u, rest, out);
            if g.fits(k, rest) {
                g.subtract(k, rest);
                subsets_below(g, k + 1, u | 1 << k, rest, out);
                g.add(k, rest);
            }
        }
        subsets_below(self.grading, 0, 0, &mut d.to_vec(), &mut subsets);
        let mut levels: Vec<Vec<(u64, Rc<Basis>)>> = vec![Vec::new(); nvars + 2];
        for (u, rest) in subsets {
            let size = u.count_ones() as usize;
            if needed[size] {
                let b = self.basis(&rest);
                if !b.monomials.is_empty() {
                    levels[size].push((u, b));
                }
            }
        }
        let offsets: Vec<HashMap<u64, (usize, Rc<Basis>)>> = levels
            .iter()
            .map(|level| {
                let mut acc = 0;
                level
                    .iter()
                    .map(|(u, b)| {
                        let o = acc;
                        acc += b.monomials.len();
                        (*u, (o, b.clone()))
                    })
                    .collect()
            })
            .collect();
        let dims: Vec<usize> = levels
            .iter()
            .map(|l| l.iter().map(|(_, b)| b.monomials.len()).sum())
            .collect();
        let targets: Vec<usize> = (0..=nvars)
            .filter(|&i| dims[i] > 0 && wanted.is_none_or(|w| w.contains(&i)))
            .collect();
        // ranks[i] = rank of d_i : K_i -> K_{i-1}.
        let mut ranks = vec![0usize; nvars + 2];
        for i in 1..=nvars {
            if dims[i] > 0 && dims[i - 1] > 0 && (targets.contains(&i) || targets.contains(&(i - 1))) {
                ranks[i] = self.differential_rank(&levels[i], &offsets[i - 1]);
            }
        }
        targets
            .into_iter()
            .map(|i| (i, (dims[i] - ranks[i] - ranks[i + 1]) as u64))
            .filter(|&(_, b)| b > 0)
            .collect()
    }

    fn differential_rank(
        &mut self,
        source: &[(u64, Rc<Basis>)],
        target: &HashMap<u64, (usize, Rc<Basis>)>,
    ) -> usize {
        let field = self.field;
        let mut rows: Vec<SparseVec> = Vec::new();
        for (u, b) in source {
            for m in &b.monomials {
                let mut entries = Vec::new();
                let mut sign = 1u32;
                let mut bits = *u;
                while bits != 0 {
                    let var = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    // A missing target degree has no standard monomials.
                    if let Some((offset, basis)) = target.get(&(u & !(1 << var))) {
                        for (c, mono) in self.times_var(var, m).iter() {
                            entries.push((offset + basis.index[mono], field.mul(sign, *c)));
                        }
                    }
                    sign = field.neg(sign);
                }
                rows.push(sparse_from_entries(field, entries));
            }
        }
        rank(field, rows)
    }
}

fn choose_grading(basis: &GroebnerBasis) -> Result<Grading, BettiError> {
    let ring = &basis.ring;
    let nvars = ring.nvars();
    if basis.elements.iter().all(|g| g.is_monomial()) {
        return Ok(Grading::fine(nvars));
    }
    if !ring.aux {
        let vertex = Grading::vertex(ring);
        if basis.elements.iter().all(|g| vertex.is_homogeneous(g)) {
            return Ok(vertex);
        }
    }
    let standard = Grading::standard(nvars);
    if basis.elements.iter().all(|g| standard.is_homogeneous(g)) {
        return Ok(standard);
    }
    Err(BettiError::NotHomogeneous)
}

/// Multigraded Betti numbers in each requested degree.
fn multigraded(
    basis: &GroebnerBasis,
    grading: &Grading,
    cells: &[Cell],
) -> Vec<CellBetti> {
    let initial = basis.initial_ideal();
    let reducer = Reducer::new(&basis.elements);
    let field = basis.field;
    cells
        .par_iter()
        .map_init(
            || Workspace {
                grading,
                initial: &initial,
                reducer: &reducer,
                field,
                bases: HashMap::new(),
                products: HashMap::new(),
            },
            |ws, (d, wanted)| (d.clone(), ws.betti_in_degree(d, wanted.as_ref())),
        )
        .collect()
}

/// Graded Betti numbers of `S/J` from a Gröbner basis of `J`.
pub fn betti_koszul_from_basis(basis: &GroebnerBasis, degree_cap: u32) -> Result<BettiTable, BettiError> {
    betti_koszul_graded(basis, &choose_grading(basis)?, degree_cap)
}

/// As [`betti_koszul_from_basis`] with an explicit grading.
///
/// For a monomial ideal, nonzero `β_{i,m}` occur only at monomials `m` in
/// the lcm lattice of the generators, and all of them are computed. For any
/// other `J`, the Betti numbers of `S/in(J)` bound those of `S/J` in every
/// grading that makes `J` homogeneous; they are computed first in the fine
/// grading and only cells with a nonzero bound are examined for `J`.
/// `degree_cap` bounds the total degree of the lcm lattice; exceeding it is
/// an error rather than a truncated table.
pub fn betti_koszul_graded(
    basis: &GroebnerBasis,
    grading: &Grading,
    degree_cap: u32,
) -> Result<BettiTable, BettiError> {
    let nvars = basis.ring.nvars();
    if nvars > 63 {
        return Err(BettiError::TooManyVariables(nvars));
    }
    if grading.nvars() != nvars || !basis.elements.iter().all(|g| grading.is_homogeneous(g)) {
        return Err(BettiError::NotHomogeneous);
    }
    let initial = basis.initial_ideal();
    let top = initial.lcm_of_generators().degree();
    if top > degree_cap {
        return Err(BettiError::DegreeCapExceeded {
            needed: top,
            cap: degree_cap,
        });
    }

    let mut lattice: HashSet<Monomial> = HashSet::from([Monomial::one(nvars)]);
    for g in initial.generators() {
        let extra: Vec<Monomial> = lattice.iter().map(|m| m.lcm(g)).collect();
        lattice.extend(extra);
    }
    let fine = Grading::fine(nvars);
    let monomial_basis = GroebnerBasis {
        elements: initial
            .generators()
            .iter()
            .map(|m| Polynomial::from_monomial(basis.field, 1, m.clone()))
            .collect(),
        ..basis.clone()
    };
    let lattice_cells: Vec<Cell> = lattice
        .iter()
        .map(|m| (fine.degree(m), None))
        .collect::<BTreeMap<_, _>>()
        .into_iter()
        .collect();
    let bounds = multigraded(&monomial_basis, &fine, &lattice_cells);

    let is_monomial = basis.elements.iter().all(|g| g.is_monomial());
    let results = if is_monomial && grading == &fine {
        bounds
    } else {
        let mut wanted: BTreeMap<Vec<u32>, BTreeSet<usize>> = BTreeMap::new();
        for (e, row) in &bounds {
            let d = grading.degree(&Monomial::from_exps(e.clone()));
            wanted.entry(d).or_default().extend(row.iter().map(|&(i, _)| i));
        }
        let cells: Vec<Cell> =
            wanted.into_iter().map(|(d, w)| (d, Some(w))).collect();
        multigraded(basis, grading, &cells)
    };

    let mut table = BettiTable::new(nvars, basis.field.characteristic());
    for (d, row) in results {
        let j = grading.total_degree(&d);
        for (i, b) in row {
            table.add(i, j, b);
        }
    }
    Ok(table)
}

/// Every `i` in every coarsened lattice degree, without the bound from the
/// initial ideal.
#[cfg(test)]
pub(crate) fn betti_koszul_unpruned(basis: &GroebnerBasis, grading: &Grading) -> BettiTable {
    let nvars = basis.ring.nvars();
    let mut lattice: HashSet<Monomial> = HashSet::from([Monomial::one(nvars)]);
    for g in basis.initial_ideal().generators() {
        let extra: Vec<Monomial> = lattice.iter().map(|m| m.lcm(g)).collect();
        lattice.extend(extra);
    }
    let cells: Vec<Cell> = lattice
        .iter()
        .map(|m| (grading.degree(m), None))
        .collect::<BTreeMap<_, _>>()
        .into_iter()
        .collect();
    let mut table = BettiTable::new(nvars, basis.field.characteristic());
    for (d, row) in multigraded(basis, grading, &cells) {
        for (i, b) in row {
            table.add(i, grading.total_degree(&d), b);
        }
    }
    table
}

/// Graded Betti numbers of `S/J` for a homogeneous ideal `J`.
pub fn betti_koszul(ideal: &Ideal, degree_cap: u32) -> Result<BettiTable, BettiError> {
    let basis = buchberger(ideal)?;
    betti_koszul_from_basis(&basis, degree_cap)
}
