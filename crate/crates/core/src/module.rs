//! Representations of a bound quiver and exact module arithmetic over `F_p`.
//!
//! A module stores one vector space per vertex and, for each arrow `a: s -> t`,
//! a `dims[t] x dims[s]` matrix acting on column vectors.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::linalg::{complement, span_intersection, span_sum, Matrix};

const SPLIT_SAMPLES: usize = 32;
const ISO_SAMPLES: usize = 16;
const EIGEN_SCAN_LIMIT: u32 = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Projective,
    Injective,
    Simple,
}

#[derive(Clone, Debug)]
pub struct Module {
    pub alg: Arc<Algebra>,
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
    pub name: String,
}

/// A module homomorphism, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub comps: Vec<Matrix>,
}

/// Per-vertex column bases of a subspace of a module.
pub type Subspace = Vec<Matrix>;

/// A minimal projective presentation `P1 -> P0 -> M -> 0`.
///
/// `P0 = ⊕ P(p0[b])`, `P1 = ⊕ P(p1[a])`, and the component `P(p1[a]) -> P(p0[b])`
/// sends the trivial path to `Σ coeff[a][b][k] · paths_between(p0[b], p1[a])[k]`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub coeff: Vec<Vec<Vec<u32>>>,
    /// The syzygy `ker(P0 -> M)`.
    pub syzygy: Module,
}

impl ModuleMap {
    pub fn zero(src: &[usize], tgt: &[usize], p: u32) -> ModuleMap {
        ModuleMap { comps: src.iter().zip(tgt).map(|(&s, &t)| Matrix::zeros(t, s, p)).collect() }
    }

    pub fn identity(m: &Module) -> ModuleMap {
        ModuleMap { comps: m.dims.iter().map(|&d| Matrix::identity(d, m.alg.p)).collect() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: u32) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(|c| c.is_invertible())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn image(&self) -> Subspace {
        self.comps.iter().map(|c| c.col_space()).collect()
    }

    pub fn kernel(&self) -> Subspace {
        self.comps.iter().map(|c| c.nullspace()).collect()
    }

    /// Linear combination `Σ c_i f_i` of maps sharing source and target.
    pub fn combination(maps: &[ModuleMap], coeffs: &[u32]) -> Option<ModuleMap> {
        let mut it = maps.iter().zip(coeffs);
        let (f0, c0) = it.next()?;
        let mut acc = f0.scale(*c0);
        for (f, &c) in it {
            acc = acc.add(&f.scale(c));
        }
        Some(acc)
    }
}

fn subspace_dim(s: &Subspace) -> usize {
    s.iter().map(|m| m.cols()).sum()
}

impl Module {
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Module {
        assert_eq!(dims.len(), alg.num_vertices());
        assert_eq!(maps.len(), alg.num_arrows());
        for (i, m) in maps.iter().enumerate() {
            let a = alg.arrow(i);
            assert_eq!((m.rows(), m.cols()), (dims[a.tgt], dims[a.src]), "arrow matrix shape");
        }
        Module { alg, dims, maps, name: String::new() }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Module {
        self.name = name.into();
        self
    }

    pub fn p(&self) -> u32 {
        self.alg.p
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let dims = vec![0; alg.num_vertices()];
        let maps = (0..alg.num_arrows()).map(|_| Matrix::zeros(0, 0, alg.p)).collect();
        Module::new(alg.clone(), dims, maps).with_name("0")
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn simple(alg: &Arc<Algebra>, v: usize) -> Module {
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let maps = (0..alg.num_arrows())
            .map(|i| {
                let a = alg.arrow(i);
                Matrix::zeros(dims[a.tgt], dims[a.src], alg.p)
            })
            .collect();
        Module::new(alg.clone(), dims, maps).with_name(format!("S{}", alg.vertex_id(v)))
    }

    /// Indecomposable projective at `v`: basis at `w` is the paths `v -> w`.
    pub fn projective(alg: &Arc<Algebra>, v: usize) -> Module {
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| alg.paths_between(v, w).len()).collect();
        let maps = (0..alg.num_arrows())
            .map(|i| {
                let a = alg.arrow(i);
                let arrow_path = alg.find_path(a.src, &[i]).expect("arrows are basis paths");
                let src_basis = alg.paths_between(v, a.src);
                let tgt_basis = alg.paths_between(v, a.tgt);
                let mut m = Matrix::zeros(tgt_basis.len(), src_basis.len(), alg.p);
                for (c, &q) in src_basis.iter().enumerate() {
                    if let Some(r) = alg.concat(q, arrow_path) {
                        let row = tgt_basis.iter().position(|&x| x == r).expect("basis path");
                        m.set(row, c, 1);
                    }
                }
                m
            })
            .collect();
        Module::new(alg.clone(), dims, maps).with_name(format!("P{}", alg.vertex_id(v)))
    }

    /// Indecomposable injective at `v`: basis at `w` is dual to the paths `w -> v`.
    pub fn injective(alg: &Arc<Algebra>, v: usize) -> Module {
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| alg.paths_between(w, v).len()).collect();
        let maps = (0..alg.num_arrows())
            .map(|i| {
                let a = alg.arrow(i);
                let arrow_path = alg.find_path(a.src, &[i]).expect("arrows are basis paths");
                let src_basis = alg.paths_between(a.src, v);
                let tgt_basis = alg.paths_between(a.tgt, v);
                let mut m = Matrix::zeros(tgt_basis.len(), src_basis.len(), alg.p);
                for (row, &q) in tgt_basis.iter().enumerate() {
                    if let Some(r) = alg.concat(arrow_path, q) {
                        let col = src_basis.iter().position(|&x| x == r).expect("basis path");
                        m.set(row, col, 1);
                    }
                }
                m
            })
            .collect();
        Module::new(alg.clone(), dims, maps).with_name(format!("I{}", alg.vertex_id(v)))
    }

    pub fn standard(alg: &Arc<Algebra>, kind: StandardKind, v: usize) -> Module {
        match kind {
            StandardKind::Projective => Module::projective(alg, v),
            StandardKind::Injective => Module::injective(alg, v),
            StandardKind::Simple => Module::simple(alg, v),
        }
    }

    /// Action of a basis path as a `dims[tgt] x dims[src]` matrix.
    pub fn path_action(&self, path: usize) -> Matrix {
        let pth = self.alg.path(path);
        let mut acc = Matrix::identity(self.dims[pth.src], self.p());
        for &a in &pth.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Checks that every relation acts by zero.
    pub fn satisfies_relations(&self) -> bool {
        self.alg.relations.iter().all(|r| {
            let src = self.alg.arrow(r[0]).src;
            let mut acc = Matrix::identity(self.dims[src], self.p());
            for &a in r {
                acc = self.maps[a].mul(&acc);
            }
            acc.is_zero()
        })
    }

    pub fn direct_sum(parts: &[&Module]) -> Module {
        let alg = parts[0].alg.clone();
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        let maps = (0..alg.num_arrows())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.maps[a]).collect();
                Matrix::block_diag(&blocks, alg.p)
            })
            .collect();
        Module::new(alg, dims, maps)
    }

    /// Transposed representation over the opposite algebra `target`.
    pub fn dual_into(&self, target: Arc<Algebra>) -> Module {
        let maps = self.maps.iter().map(|m| m.transpose()).collect();
        Module::new(target, self.dims.clone(), maps)
    }

    pub fn dual(&self) -> Module {
        self.dual_into(self.alg.opposite())
    }

    /// Applies a change of basis `g_v` at every vertex.
    pub fn conjugate(&self, g: &[Matrix]) -> Module {
        let inv: Vec<Matrix> = g.iter().map(|m| m.inverse().expect("invertible base change")).collect();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let a = self.alg.arrow(i);
                g[a.tgt].mul(m).mul(&inv[a.src])
            })
            .collect();
        Module::new(self.alg.clone(), self.dims.clone(), maps)
    }

    fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.alg.seed.hash(&mut h);
        self.dims.hash(&mut h);
        for m in &self.maps {
            m.data().hash(&mut h);
        }
        h.finish()
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.fingerprint() ^ salt)
    }

    // ---------------------------------------------------------------- Hom

    /// Basis of `Hom(self, other)` from the commutation system.
    pub fn hom_basis(&self, other: &Module) -> Vec<ModuleMap> {
        let alg = &self.alg;
        let p = alg.p;
        let n = alg.num_vertices();
        let mut offset = vec![0; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + self.dims[v] * other.dims[v];
        }
        let nvars = offset[n];
        if nvars == 0 {
            return Vec::new();
        }
        let var = |v: usize, i: usize, k: usize| offset[v] + i * self.dims[v] + k;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (ai, arrow) in alg.quiver.arrows.iter().enumerate() {
            let (s, t) = (arrow.src, arrow.tgt);
            let ma = &self.maps[ai];
            let na = &other.maps[ai];
            // (F_t M_a - N_a F_s)[i][j] = 0
            for i in 0..other.dims[t] {
                for j in 0..self.dims[s] {
                    let mut row = vec![0u32; nvars];
                    for k in 0..self.dims[t] {
                        let c = ma.get(k, j);
                        if c != 0 {
                            let idx = var(t, i, k);
                            row[idx] = (row[idx] + c) % p;
                        }
                    }
                    for k in 0..other.dims[s] {
                        let c = na.get(i, k);
                        if c != 0 {
                            let idx = var(s, k, j);
                            row[idx] = (row[idx] + p - c) % p;
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        let sol = if rows.is_empty() {
            Matrix::identity(nvars, p)
        } else {
            Matrix::from_rows(p, &rows).nullspace()
        };
        (0..sol.cols())
            .map(|c| ModuleMap {
                comps: (0..n)
                    .map(|v| {
                        Matrix::from_fn(other.dims[v], self.dims[v], p, |i, k| sol.get(var(v, i, k), c))
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn hom_dim(&self, other: &Module) -> usize {
        self.hom_basis(other).len()
    }

    pub fn is_hom(&self, other: &Module, f: &ModuleMap) -> bool {
        self.alg.quiver.arrows.iter().enumerate().all(|(ai, a)| {
            f.comps[a.tgt].mul(&self.maps[ai]) == other.maps[ai].mul(&f.comps[a.src])
        })
    }

    pub fn is_brick(&self) -> bool {
        self.hom_dim(self) == 1
    }

    // ------------------------------------------------- sub and quotient modules

    /// The submodule spanned by `basis` (closed under arrows) and its inclusion.
    pub fn submodule(&self, basis: &Subspace) -> (Module, ModuleMap) {
        let p = self.p();
        let dims: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
        let maps = self
            .alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let img = self.maps[ai].mul(&basis[a.src]);
                if dims[a.src] == 0 {
                    return Matrix::zeros(dims[a.tgt], 0, p);
                }
                basis[a.tgt].solve(&img).expect("subspace closed under arrows")
            })
            .collect();
        let sub = Module::new(self.alg.clone(), dims, maps);
        (sub, ModuleMap { comps: basis.clone() })
    }

    /// The quotient by the submodule spanned by `basis`, with its projection.
    pub fn quotient(&self, basis: &Subspace) -> (Module, ModuleMap) {
        let p = self.p();
        let n = self.dims.len();
        let mut sections = Vec::with_capacity(n);
        let mut projections = Vec::with_capacity(n);
        for v in 0..n {
            let c = complement(&basis[v]);
            let full = Matrix::hstack(&[&basis[v], &c]);
            let inv = full.inverse().expect("basis extension is invertible");
            let k = basis[v].cols();
            projections.push(inv.slice(k, self.dims[v] - k, 0, self.dims[v]));
            sections.push(c);
        }
        let dims: Vec<usize> = sections.iter().map(|c| c.cols()).collect();
        let maps = self
            .alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| projections[a.tgt].mul(&self.maps[ai]).mul(&sections[a.src]))
            .collect();
        let _ = p;
        (Module::new(self.alg.clone(), dims, maps), ModuleMap { comps: projections })
    }

    /// Smallest submodule containing the given vectors.
    pub fn closure(&self, gens: &Subspace) -> Subspace {
        let mut cur: Subspace = gens.iter().map(|g| g.col_space()).collect();
        loop {
            let mut changed = false;
            for (ai, a) in self.alg.quiver.arrows.iter().enumerate() {
                if cur[a.src].cols() == 0 {
                    continue;
                }
                let img = self.maps[ai].mul(&cur[a.src]);
                let next = span_sum(&cur[a.tgt], &img);
                if next.cols() > cur[a.tgt].cols() {
                    cur[a.tgt] = next;
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    pub fn zero_subspace(&self) -> Subspace {
        self.dims.iter().map(|&d| Matrix::zeros(d, 0, self.p())).collect()
    }

    pub fn full_subspace(&self) -> Subspace {
        self.dims.iter().map(|&d| Matrix::identity(d, self.p())).collect()
    }

    /// `rad M`: the span of all arrow images.
    pub fn radical(&self) -> Subspace {
        let mut rad = self.zero_subspace();
        for (ai, a) in self.alg.quiver.arrows.iter().enumerate() {
            rad[a.tgt] = span_sum(&rad[a.tgt], &self.maps[ai]);
        }
        rad
    }

    /// `soc M`: vectors killed by every arrow.
    pub fn socle(&self) -> Subspace {
        let p = self.p();
        (0..self.dims.len())
            .map(|v| {
                let outgoing: Vec<&Matrix> = self
                    .alg
                    .quiver
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.src == v)
                    .map(|(ai, _)| &self.maps[ai])
                    .collect();
                if outgoing.is_empty() {
                    Matrix::identity(self.dims[v], p)
                } else {
                    Matrix::vstack(&outgoing).nullspace()
                }
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical();
        self.dims.iter().zip(&rad).map(|(d, r)| d - r.cols()).collect()
    }

    /// Projective cover: summand vertices, generators, and the covering map.
    pub fn projective_cover(&self) -> (Vec<usize>, ModuleMap) {
        let rad = self.radical();
        let mut vertices = Vec::new();
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for v in 0..self.dims.len() {
            let c = complement(&rad[v]);
            for k in 0..c.cols() {
                vertices.push(v);
                gens.push(c.col(k));
            }
        }
        let map = self.map_from_projectives(&vertices, &gens);
        (vertices, map)
    }

    /// The map `⊕ P(vertices[k]) -> self` sending the k-th trivial path to `gens[k]`.
    pub fn map_from_projectives(&self, vertices: &[usize], gens: &[Vec<u32>]) -> ModuleMap {
        let alg = &self.alg;
        let p = alg.p;
        let comps = (0..alg.num_vertices())
            .map(|w| {
                let mut cols: Vec<Vec<u32>> = Vec::new();
                for (k, &v) in vertices.iter().enumerate() {
                    let x = Matrix::from_cols(p, self.dims[v], &[gens[k].clone()]);
                    for &q in alg.paths_between(v, w) {
                        cols.push(self.path_action(q).mul(&x).col(0));
                    }
                }
                Matrix::from_cols(p, self.dims[w], &cols)
            })
            .collect();
        ModuleMap { comps }
    }

    pub fn min_presentation(&self) -> Presentation {
        let alg = &self.alg;
        let (p0, pi) = self.projective_cover();
        let p0_mod = projective_sum(alg, &p0);
        let ker = pi.kernel();
        let (syzygy, incl) = p0_mod.submodule(&ker);
        let (p1, cover) = syzygy.projective_cover();
        // cover sends the a-th trivial path to a vector of the syzygy at p1[a];
        // its image in P0 lives at vertex p1[a] and splits into P0 blocks.
        let mut coeff = Vec::with_capacity(p1.len());
        for (a, &u) in p1.iter().enumerate() {
            let idx: usize = p1[..a].iter().map(|&w| alg.paths_between(w, u).len()).sum();
            let trivial_pos = alg.paths_between(u, u).iter().position(|&q| q == alg.trivial_path(u)).unwrap();
            let y = cover.comps[u].col(idx + trivial_pos);
            let x = incl.comps[u].mul_vec(&y);
            let mut per_b = Vec::with_capacity(p0.len());
            let mut off = 0;
            for &v in &p0 {
                let len = alg.paths_between(v, u).len();
                per_b.push(x[off..off + len].to_vec());
                off += len;
            }
            coeff.push(per_b);
        }
        Presentation { p0, p1, coeff, syzygy }
    }

    /// `dim Ext^1(self, other)` via the syzygy of a minimal presentation.
    pub fn ext1_dim(&self, other: &Module) -> usize {
        if self.is_zero() || other.is_zero() {
            return 0;
        }
        let pres = self.min_presentation();
        let hom_p0: usize = pres.p0.iter().map(|&v| other.dims[v]).sum();
        pres.syzygy.hom_dim(other) + self.hom_dim(other) - hom_p0
    }

    /// Auslander–Reiten translate `ker(ν P1 -> ν P0)`.
    pub fn tau(&self) -> Module {
        if self.is_zero() {
            return Module::zero(&self.alg);
        }
        let alg = &self.alg;
        let pres = self.min_presentation();
        if pres.p1.is_empty() {
            return Module::zero(alg);
        }
        let nu_p1 = injective_sum(alg, &pres.p1);
        let nu_map = nakayama_map(alg, &pres);
        let (t, _) = nu_p1.submodule(&nu_map.kernel());
        t
    }

    /// Inverse translate through the duality with the opposite algebra.
    pub fn tau_inv(&self) -> Module {
        if self.is_zero() {
            return Module::zero(&self.alg);
        }
        let d = self.dual();
        d.tau().dual_into(self.alg.clone())
    }

    // ----------------------------------------------------- trace and reject

    /// Sum of the images of all maps `m -> self`.
    pub fn trace_of(&self, m: &Module) -> Subspace {
        let mut acc = self.zero_subspace();
        for f in m.hom_basis(self) {
            for (v, c) in f.comps.iter().enumerate() {
                acc[v] = span_sum(&acc[v], c);
            }
        }
        acc
    }

    /// Intersection of the kernels of all maps `self -> n`.
    pub fn reject_into(&self, n: &Module) -> Subspace {
        let mut acc = self.full_subspace();
        for f in self.hom_basis(n) {
            for (v, c) in f.comps.iter().enumerate() {
                acc[v] = span_intersection(&acc[v], &c.nullspace());
            }
        }
        acc
    }

    /// Torsion-free part `f_M(X) = X / trace(M, X)`.
    pub fn tf_part(&self, m: &Module) -> Module {
        let tr = self.trace_of(m);
        self.quotient(&tr).0
    }

    /// Torsion part `t_N(X)` for the pair `(⊥N, Cogen N)`.
    pub fn reject_part(&self, n: &Module) -> Module {
        let rj = self.reject_into(n);
        self.submodule(&rj).0
    }

    /// `M / rad End(M) · M` for an indecomposable `M`.
    pub fn beta(&self) -> Module {
        let p = self.p();
        let n = self.total_dim();
        let end = self.hom_basis(self);
        let mut images = self.zero_subspace();
        for f in &end {
            let lambda = scalar_part(f, n, p);
            let g = f.add(&ModuleMap::identity(self).scale((p - lambda) % p));
            for (v, c) in g.comps.iter().enumerate() {
                images[v] = span_sum(&images[v], c);
            }
        }
        self.quotient(&images).0
    }

    // ------------------------------------------------------- decomposition

    /// Krull–Schmidt decomposition by randomized Fitting splitting.
    pub fn decompose(&self) -> Vec<Module> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        let mut stack = vec![self.clone()];
        while let Some(m) = stack.pop() {
            match m.find_split() {
                Some((a, b)) => {
                    stack.push(a);
                    stack.push(b);
                }
                None => out.push(m),
            }
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        !self.is_zero() && self.find_split().is_none()
    }

    fn find_split(&self) -> Option<(Module, Module)> {
        let end = self.hom_basis(self);
        if end.len() <= 1 {
            return None;
        }
        let p = self.p();
        let n = self.total_dim() as u64;
        let mut rng = self.rng(0x5eed);
        for _ in 0..SPLIT_SAMPLES {
            let coeffs: Vec<u32> = (0..end.len()).map(|_| rng.gen_range(0..p)).collect();
            let e = ModuleMap::combination(&end, &coeffs).unwrap();
            for lambda in eigen_candidates(&e, p) {
                let shifted = e.add(&ModuleMap::identity(self).scale((p - lambda) % p));
                let f = ModuleMap { comps: shifted.comps.iter().map(|c| c.pow(n)).collect() };
                if f.is_zero() || f.is_iso() {
                    continue;
                }
                let (k, _) = self.submodule(&f.kernel());
                let (i, _) = self.submodule(&f.image());
                return Some((k, i));
            }
        }
        None
    }

    /// Randomized isomorphism test.
    pub fn is_isomorphic(&self, other: &Module) -> bool {
        if self.dims != other.dims {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        let h = self.hom_basis(other);
        if h.is_empty() || h.len() != other.hom_dim(self) || h.len() != self.hom_dim(self) {
            return false;
        }
        let p = self.p();
        let mut rng = self.rng(other.fingerprint());
        for _ in 0..ISO_SAMPLES {
            let coeffs: Vec<u32> = (0..h.len()).map(|_| rng.gen_range(0..p)).collect();
            if ModuleMap::combination(&h, &coeffs).unwrap().is_iso() {
                return true;
            }
        }
        false
    }
}

/// The unique `λ` with `f - λ·id` nilpotent, for `f` in a local endomorphism ring.
fn scalar_part(f: &ModuleMap, n: usize, p: u32) -> u32 {
    if !(n as u32).is_multiple_of(p) {
        let tr: u64 = f.comps.iter().map(|c| (0..c.rows()).map(|i| c.get(i, i) as u64).sum::<u64>()).sum();
        let inv_n = crate::linalg::inv_mod(n as u32 % p, p) as u64;
        return ((tr % p as u64) * inv_n % p as u64) as u32;
    }
    for lambda in 0..p {
        let nil = f.comps.iter().all(|c| {
            let shifted = c.sub(&Matrix::identity(c.rows(), p).scale(lambda));
            shifted.pow(c.rows() as u64).is_zero()
        });
        if nil {
            return lambda;
        }
    }
    0
}

fn eigen_candidates(e: &ModuleMap, p: u32) -> Vec<u32> {
    let singular = |lambda: u32| {
        e.comps.iter().any(|c| {
            c.rows() > 0 && !c.sub(&Matrix::identity(c.rows(), p).scale(lambda)).is_invertible()
        })
    };
    if p <= EIGEN_SCAN_LIMIT {
        (0..p).filter(|&l| singular(l)).collect()
    } else {
        let mut out: Vec<u32> = e
            .comps
            .iter()
            .flat_map(|c| (0..c.rows()).map(move |i| c.get(i, i)))
            .chain(std::iter::once(0))
            .filter(|&l| singular(l))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// `⊕_k P(vertices[k])` with the block order used by presentations.
pub fn projective_sum(alg: &Arc<Algebra>, vertices: &[usize]) -> Module {
    if vertices.is_empty() {
        return Module::zero(alg);
    }
    let parts: Vec<Module> = vertices.iter().map(|&v| Module::projective(alg, v)).collect();
    let refs: Vec<&Module> = parts.iter().collect();
    Module::direct_sum(&refs)
}

/// `⊕_k I(vertices[k])`.
pub fn injective_sum(alg: &Arc<Algebra>, vertices: &[usize]) -> Module {
    if vertices.is_empty() {
        return Module::zero(alg);
    }
    let parts: Vec<Module> = vertices.iter().map(|&v| Module::injective(alg, v)).collect();
    let refs: Vec<&Module> = parts.iter().collect();
    Module::direct_sum(&refs)
}

/// The presentation map `P1 -> P0` as a module map.
pub fn presentation_map(alg: &Arc<Algebra>, pres: &Presentation) -> ModuleMap {
    let p = alg.p;
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let rows: usize = pres.p0.iter().map(|&v| alg.paths_between(v, w).len()).sum();
            let cols: usize = pres.p1.iter().map(|&u| alg.paths_between(u, w).len()).sum();
            let mut m = Matrix::zeros(rows, cols, p);
            let mut col_off = 0;
            for (a, &u) in pres.p1.iter().enumerate() {
                let src_basis = alg.paths_between(u, w);
                let mut row_off = 0;
                for (b, &v) in pres.p0.iter().enumerate() {
                    let tgt_basis = alg.paths_between(v, w);
                    for (k, &path) in alg.paths_between(v, u).iter().enumerate() {
                        let c = pres.coeff[a][b][k];
                        if c == 0 {
                            continue;
                        }
                        for (j, &q) in src_basis.iter().enumerate() {
                            if let Some(r) = alg.concat(path, q) {
                                let i = tgt_basis.iter().position(|&x| x == r).unwrap();
                                let cur = m.get(row_off + i, col_off + j);
                                m.set(row_off + i, col_off + j, cur + c);
                            }
                        }
                    }
                    row_off += tgt_basis.len();
                }
                col_off += src_basis.len();
            }
            m
        })
        .collect();
    ModuleMap { comps }
}

/// Nakayama functor applied to the presentation map: `⊕ I(p1) -> ⊕ I(p0)`.
pub fn nakayama_map(alg: &Arc<Algebra>, pres: &Presentation) -> ModuleMap {
    let p = alg.p;
    let comps = (0..alg.num_vertices())
        .map(|k| {
            let rows: usize = pres.p0.iter().map(|&v| alg.paths_between(k, v).len()).sum();
            let cols: usize = pres.p1.iter().map(|&u| alg.paths_between(k, u).len()).sum();
            let mut m = Matrix::zeros(rows, cols, p);
            let mut col_off = 0;
            for (a, &u) in pres.p1.iter().enumerate() {
                let src_basis = alg.paths_between(k, u);
                let mut row_off = 0;
                for (b, &v) in pres.p0.iter().enumerate() {
                    let tgt_basis = alg.paths_between(k, v);
                    for (idx, &path) in alg.paths_between(v, u).iter().enumerate() {
                        let c = pres.coeff[a][b][idx];
                        if c == 0 {
                            continue;
                        }
                        // ν(path) sends r* to Σ q* over q with q.path = r.
                        for (i, &q) in tgt_basis.iter().enumerate() {
                            if let Some(r) = alg.concat(q, path) {
                                let j = src_basis.iter().position(|&x| x == r).unwrap();
                                let cur = m.get(row_off + i, col_off + j);
                                m.set(row_off + i, col_off + j, cur + c);
                            }
                        }
                    }
                    row_off += tgt_basis.len();
                }
                col_off += src_basis.len();
            }
            m
        })
        .collect();
    ModuleMap { comps }
}

/// Subspace dimension helper.
pub fn subspace_total(s: &Subspace) -> usize {
    subspace_dim(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn ex93() -> Arc<Algebra> {
        Arc::new(parse_algebra("ex-9.3", "vertices = 1 2 3\narrow a 1 2\narrow b 2 3\nrel a.b\n").unwrap())
    }

    #[test]
    fn standard_dimension_vectors() {
        let a = ex93();
        assert_eq!(Module::projective(&a, 1).dims, vec![0, 1, 1]);
        assert_eq!(Module::projective(&a, 0).dims, vec![1, 1, 0]);
        assert_eq!(Module::injective(&a, 1).dims, vec![1, 1, 0]);
        assert!(Module::projective(&a, 0).is_isomorphic(&Module::injective(&a, 1)));
        for v in 0..3 {
            assert!(Module::projective(&a, v).satisfies_relations());
            assert!(Module::injective(&a, v).satisfies_relations());
        }
    }

    #[test]
    fn hom_from_projective_counts_dimension() {
        let a = ex93();
        let s2 = Module::simple(&a, 1);
        let p2 = Module::projective(&a, 1);
        let p3 = Module::projective(&a, 2);
        assert_eq!(p2.hom_dim(&s2), 1);
        assert_eq!(s2.hom_dim(&p3), 0);
        for f in p2.hom_basis(&p2) {
            assert!(p2.is_hom(&p2, &f));
        }
    }

    #[test]
    fn tau_of_simples() {
        let a = ex93();
        let s1 = Module::simple(&a, 0);
        let s2 = Module::simple(&a, 1);
        assert!(s2.tau().is_isomorphic(&Module::projective(&a, 2)));
        assert!(s1.tau().is_isomorphic(&s2));
        assert!(Module::projective(&a, 0).tau().is_zero());
        assert!(Module::projective(&a, 2).tau_inv().is_isomorphic(&s2));
    }

    #[test]
    fn presentation_of_s2() {
        let a = ex93();
        let pres = Module::simple(&a, 1).min_presentation();
        assert_eq!(pres.p0, vec![1]);
        assert_eq!(pres.p1, vec![2]);
        let f = presentation_map(&a, &pres);
        let p1 = projective_sum(&a, &pres.p1);
        let p0 = projective_sum(&a, &pres.p0);
        assert!(p1.is_hom(&p0, &f));
    }

    #[test]
    fn ext_between_simples() {
        let a = ex93();
        let s1 = Module::simple(&a, 0);
        let s2 = Module::simple(&a, 1);
        assert_eq!(s1.ext1_dim(&s2), 1);
        assert_eq!(s2.ext1_dim(&s1), 0);
        assert_eq!(Module::projective(&a, 0).ext1_dim(&s2), 0);
    }

    #[test]
    fn trace_and_reject_parts() {
        let a = ex93();
        let p2 = Module::projective(&a, 1);
        let p3 = Module::projective(&a, 2);
        let s2 = Module::simple(&a, 1);
        assert!(p2.tf_part(&p3).is_isomorphic(&s2));
        assert!(p2.reject_part(&s2).is_isomorphic(&p3));
        assert!(p2.tf_part(&p2).is_zero());
    }

    #[test]
    fn decompose_sum_of_projectives() {
        let a = ex93();
        let p1 = Module::projective(&a, 0);
        let sum = Module::direct_sum(&[&p1, &p1]);
        let g: Vec<Matrix> = sum
            .dims
            .iter()
            .map(|&d| Matrix::from_fn(d, d, a.p, |r, c| if r <= c { (r + 2 * c + 1) as u32 } else { 0 }))
            .collect();
        let mixed = sum.conjugate(&g);
        let parts = mixed.decompose();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|m| m.is_isomorphic(&p1)));
    }

    #[test]
    fn beta_of_brick_is_itself() {
        let a = ex93();
        let p1 = Module::projective(&a, 0);
        assert!(p1.beta().is_isomorphic(&p1));
    }
}
