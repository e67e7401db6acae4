//! τ-exceptional sequences, their classification and mutation.
//!
//! Sequences are lists of inventory members `(M_1, ..., M_n)`. The pair at
//! index `i` is `(M_i, M_{i+1})`, living in the context
//! `J(M_{i+2}, ..., M_n)` obtained by iterated reduction from the right.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perpcat::{e_inv, e_map, j_of};
use crate::torsion::{component_count, ClassKind, Context, FfStatus, HasseGraph, Ind, StableObject};

pub type Seq = Vec<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular,
    Irregular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutability {
    Yes,
    No(usize),
    UnknownAtBound(usize),
}

impl Mutability {
    pub fn is_yes(self) -> bool {
        self == Mutability::Yes
    }
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regularity::Regular => "regular",
            Regularity::Irregular => "irregular",
        })
    }
}

impl fmt::Display for Mutability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mutability::Yes => f.write_str("yes"),
            Mutability::No(d) => write!(f, "no (evidence at bound {d})"),
            Mutability::UnknownAtBound(d) => write!(f, "unknown at bound {d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairClass {
    pub left: Regularity,
    pub right: Regularity,
    pub left_mutable: Mutability,
    pub right_mutable: Mutability,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Left,
    Right,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Left => "left",
            Direction::Right => "right",
        })
    }
}

/// Mutation graph; an edge `(x, y, i)` means `x = φ_i(y)`.
#[derive(Clone, Debug, Default)]
pub struct MutationGraph {
    pub vertices: Vec<Seq>,
    pub edges: Vec<(usize, usize, usize)>,
    /// Vertices where some mutation could not be evaluated at the bound.
    pub frontier: Vec<usize>,
}

impl MutationGraph {
    pub fn components(&self) -> usize {
        component_count(self.vertices.len(), self.edges.iter().map(|e| (e.0, e.1)))
    }

    pub fn vertex_of(&self, s: &[usize]) -> Option<usize> {
        self.vertices.iter().position(|v| v == s)
    }
}

pub fn seq_names(ctx: &Context, s: &[usize]) -> String {
    s.iter().map(|&x| ctx.name(x)).collect::<Vec<_>>().join(",")
}

fn module_of(x: Ind, what: &str) -> Result<usize> {
    match x {
        Ind::Mod(m) => Ok(m),
        _ => Err(Error::Unsupported(format!("{what} is not a module"))),
    }
}

fn single(mut xs: Vec<usize>, ctx: &Context, what: &str) -> Result<usize> {
    if xs.len() == 1 {
        return Ok(xs.pop().unwrap_or_default());
    }
    Err(Error::InventoryTooSmall { bound: ctx.bound(), what: format!("{what} (found {} candidates)", xs.len()) })
}

// ------------------------------------------------------------ sequences

/// Contexts of the entries: the `k`-th is `J(M_{k+1}, ..., M_n)`.
pub fn seq_contexts(root: &Context, s: &[usize]) -> Result<Vec<Context>> {
    let mut out = vec![root.clone(); s.len()];
    let mut cur = root.clone();
    for k in (0..s.len()).rev() {
        cur.require_member(s[k])?;
        if !cur.is_tau_rigid(&[s[k]]) {
            return Err(Error::InvalidSequence(format!("{} is not tau-rigid in {}", cur.name(s[k]), cur.label())));
        }
        out[k] = cur.clone();
        if k > 0 {
            cur = j_of(&cur, &StableObject::one(Ind::Mod(s[k])))?;
        }
    }
    Ok(out)
}

pub fn is_tau_exceptional(root: &Context, s: &[usize]) -> bool {
    seq_contexts(root, s).is_ok()
}

pub fn is_complete(root: &Context, s: &[usize]) -> bool {
    s.len() == root.rank() && is_tau_exceptional(root, s)
}

/// Whether `ns` is a TF-ordered τ-rigid module.
pub fn is_tf_ordered(root: &Context, ns: &[usize]) -> bool {
    let distinct: BTreeSet<usize> = ns.iter().copied().collect();
    distinct.len() == ns.len()
        && root.is_tau_rigid(ns)
        && (0..ns.len()).all(|i| !root.gen_contains(&ns[i + 1..], ns[i]))
}

/// The τ-exceptional sequence `M_i = f_{N_{i+1} ⊕ ... ⊕ N_n}(N_i)` of a TF-ordering.
pub fn omega(root: &Context, ns: &[usize]) -> Result<Seq> {
    if !is_tf_ordered(root, ns) {
        return Err(Error::InvalidSequence(format!("{} is not TF-ordered", seq_names(root, ns))));
    }
    (0..ns.len())
        .map(|i| {
            let q = root.tf_quotient(&ns[i + 1..], ns[i]);
            root.identify(&q, "torsion-free quotient")
        })
        .collect()
}

/// The TF-ordering of a τ-exceptional sequence.
pub fn omega_inv(root: &Context, s: &[usize]) -> Result<Seq> {
    seq_contexts(root, s)?;
    let mut out = vec![0; s.len()];
    for i in (0..s.len()).rev() {
        let u = StableObject::modules(&out[i + 1..]);
        out[i] = module_of(e_inv(root, &u, Ind::Mod(s[i]))?, "inverse reduction")?;
    }
    Ok(out)
}

/// The pair at 1-based index `i` together with its context.
pub fn pair_at(root: &Context, s: &[usize], i: usize) -> Result<(Context, usize, usize)> {
    if i == 0 || i >= s.len() {
        return Err(Error::InvalidSequence(format!("index {i} out of range for length {}", s.len())));
    }
    let ctxs = seq_contexts(root, s)?;
    Ok((ctxs[i].clone(), s[i - 1], s[i]))
}

// ---------------------------------------------------------------- pairs

/// `E_C⁻¹(B)` for a pair `(B, C)` in `w`.
pub fn lift(w: &Context, b: usize, c: usize) -> Result<usize> {
    module_of(e_inv(w, &StableObject::one(Ind::Mod(c)), Ind::Mod(b))?, "inverse reduction of a pair")
}

pub fn left_regularity(w: &Context, b: usize, c: usize) -> Result<Regularity> {
    if w.rel_projectives().contains(&c) {
        return Ok(Regularity::Regular);
    }
    let e = lift(w, b, c)?;
    let t = w.tau_perp(&[e]);
    Ok(if w.ext_projectives(&t).contains(&c) { Regularity::Irregular } else { Regularity::Regular })
}

pub fn right_regularity(w: &Context, x: usize, y: usize) -> Result<Regularity> {
    let e = lift(w, x, y)?;
    if w.gen_contains(&[e], y) && !w.ext_projectives(&w.tau_perp(&[y])).contains(&e) {
        Ok(Regularity::Irregular)
    } else {
        Ok(Regularity::Regular)
    }
}

fn mutability(status: FfStatus) -> Mutability {
    match status {
        FfStatus::FunctoriallyFinite(_) => Mutability::Yes,
        FfStatus::NotFfEvidence(d) => Mutability::No(d),
        FfStatus::Unknown(d) => Mutability::UnknownAtBound(d),
    }
}

fn pair_perp(ctx: &Context, e: usize, c: usize) -> Result<Context> {
    j_of(ctx, &StableObject::modules(&[e, c]))
}

pub fn classify_pair(w: &Context, b: usize, c: usize) -> Result<PairClass> {
    let left = left_regularity(w, b, c)?;
    let right = right_regularity(w, b, c)?;
    let e = lift(w, b, c)?;
    let left_mutable = match left {
        Regularity::Regular => Mutability::Yes,
        Regularity::Irregular => mutability(w.ff_status(ClassKind::Torsion, &|ctx: &Context| {
            Ok(ctx.filt_gen(pair_perp(ctx, e, c)?.members()))
        })?),
    };
    let right_mutable = match right {
        Regularity::Regular => Mutability::Yes,
        Regularity::Irregular => mutability(w.ff_status(ClassKind::TorsionFree, &|ctx: &Context| {
            Ok(ctx.filt_cogen(pair_perp(ctx, e, c)?.members()))
        })?),
    };
    Ok(PairClass { left, right, left_mutable, right_mutable })
}

fn refuse(m: Mutability, side: &'static str) -> Result<()> {
    match m {
        Mutability::Yes => Ok(()),
        Mutability::No(_) => Err(Error::Immutable(side)),
        Mutability::UnknownAtBound(d) => {
            Err(Error::UnknownAtBound { bound: d, what: format!("{side} mutability of the pair") })
        }
    }
}

/// Left mutation `φ(B, C)`.
pub fn phi(w: &Context, b: usize, c: usize) -> Result<(usize, usize)> {
    let class = classify_pair(w, b, c)?;
    match class.left {
        Regularity::Regular => {
            let c_plus = if w.rel_projectives().contains(&c) { Ind::Shift(c) } else { Ind::Mod(c) };
            let bu = module_of(e_inv(w, &StableObject::one(c_plus), Ind::Mod(b))?, "lifted entry")?;
            let first = e_map(w, &StableObject::one(Ind::Mod(bu)), c_plus)?.strip();
            Ok((first, bu))
        }
        Regularity::Irregular => {
            refuse(class.left_mutable, "left")?;
            let e = lift(w, b, c)?;
            let t = w.filt_gen(pair_perp(w, e, c)?.members());
            let (_, pns) = w.split_projectives(&t);
            let (xs, _) = w.split_projectives(&w.gen(&pns));
            let x = single(xs, w, "split projective generator")?;
            let y = single(pns.into_iter().filter(|&z| z != x).collect(), w, "complementary summand")?;
            let first = module_of(e_map(w, &StableObject::one(Ind::Mod(y)), Ind::Mod(x))?, "left mutation")?;
            Ok((first, y))
        }
    }
}

/// Right mutation `ψ(X, Y)`.
pub fn psi(w: &Context, x: usize, y: usize) -> Result<(usize, usize)> {
    let class = classify_pair(w, x, y)?;
    match class.right {
        Regularity::Regular => {
            let jy = j_of(w, &StableObject::one(Ind::Mod(y)))?;
            let x_plus = if jy.rel_projectives().contains(&x) { Ind::Shift(x) } else { Ind::Mod(x) };
            let up = e_inv(w, &StableObject::one(Ind::Mod(y)), x_plus)?;
            let first = module_of(e_map(w, &StableObject::one(up), Ind::Mod(y))?, "right mutation")?;
            Ok((first, up.strip()))
        }
        Regularity::Irregular => {
            refuse(class.right_mutable, "right")?;
            let e = lift(w, x, y)?;
            let t = w.left_perp(pair_perp(w, e, y)?.members());
            let (ps, _) = w.split_projectives(&t);
            let mut taus = Vec::new();
            for &z in &ps {
                if let Some(tz) = w.rel_tau(z)? {
                    taus.push(tz);
                }
            }
            let (is, _) = w.split_injectives(&w.cogen(&taus));
            let i = single(is, w, "split injective cogenerator")?;
            let b = w
                .rel_tau_inv(i)?
                .ok_or_else(|| Error::Unsupported(format!("{} is injective in {}", w.name(i), w.label())))?;
            let c = single(ps.into_iter().filter(|&z| z != b).collect(), w, "complementary summand")?;
            let first = module_of(e_map(w, &StableObject::one(Ind::Mod(c)), Ind::Mod(b))?, "right mutation")?;
            Ok((first, c))
        }
    }
}

pub fn classify(root: &Context, s: &[usize], i: usize) -> Result<PairClass> {
    let (w, b, c) = pair_at(root, s, i)?;
    classify_pair(&w, b, c)
}

pub fn phi_i(root: &Context, s: &[usize], i: usize) -> Result<Seq> {
    let (w, b, c) = pair_at(root, s, i)?;
    let (b2, c2) = phi(&w, b, c)?;
    let mut out = s.to_vec();
    out[i - 1] = b2;
    out[i] = c2;
    Ok(out)
}

pub fn psi_i(root: &Context, s: &[usize], i: usize) -> Result<Seq> {
    let (w, x, y) = pair_at(root, s, i)?;
    let (x2, y2) = psi(&w, x, y)?;
    let mut out = s.to_vec();
    out[i - 1] = x2;
    out[i] = y2;
    Ok(out)
}

pub fn mutate(root: &Context, s: &[usize], i: usize, dir: Direction) -> Result<Seq> {
    match dir {
        Direction::Left => phi_i(root, s, i),
        Direction::Right => psi_i(root, s, i),
    }
}

/// Members of `J` of the pair at index `i`, inside its context.
pub fn pair_perp_members(root: &Context, s: &[usize], i: usize) -> Result<Vec<usize>> {
    let (w, b, c) = pair_at(root, s, i)?;
    let jc = j_of(&w, &StableObject::one(Ind::Mod(c)))?;
    Ok(j_of(&jc, &StableObject::one(Ind::Mod(b)))?.members().to_vec())
}

// ---------------------------------------------------------- enumeration

/// Complete sequences through TF-orderings of τ-tilting modules.
pub fn enumerate_complete(root: &Context) -> Result<Vec<Seq>> {
    let n = root.rank();
    let mut out = BTreeSet::new();
    for obj in root.support_tau_tilting() {
        if obj.rank() != n || !obj.shifts().is_empty() {
            continue;
        }
        let mods = obj.mods();
        for perm in permutations(&mods) {
            if is_tf_ordered(root, &perm) {
                out.insert(omega(root, &perm)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Sequences of the given length, built recursively from the definition.
pub fn enumerate_recursive(w: &Context, len: usize) -> Result<Vec<Seq>> {
    if len == 0 {
        return Ok(vec![vec![]]);
    }
    let mut out = Vec::new();
    for &x in w.members() {
        if !w.is_tau_rigid(&[x]) {
            continue;
        }
        let inner = j_of(w, &StableObject::one(Ind::Mod(x)))?;
        for mut p in enumerate_recursive(&inner, len - 1)? {
            p.push(x);
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

/// All `φ_i` edges among the given vertices; failures mark the vertex as frontier.
pub fn mutation_graph(root: &Context, vertices: Vec<Seq>) -> MutationGraph {
    let index: BTreeMap<Seq, usize> = vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let mut edges = Vec::new();
    let mut frontier = BTreeSet::new();
    for (k, y) in vertices.iter().enumerate() {
        for i in 1..y.len() {
            match phi_i(root, y, i) {
                Ok(x) => match index.get(&x) {
                    Some(&xk) => edges.push((xk, k, i)),
                    None => {
                        frontier.insert(k);
                    }
                },
                Err(Error::Immutable(_)) => {}
                Err(_) => {
                    frontier.insert(k);
                }
            }
        }
    }
    MutationGraph { vertices, edges, frontier: frontier.into_iter().collect() }
}

/// The τ-exceptional mutation graph on all complete sequences.
pub fn hasse_tex(root: &Context) -> Result<MutationGraph> {
    let seqs = if root.exact() { enumerate_complete(root)? } else { enumerate_recursive(root, root.rank())? };
    Ok(mutation_graph(root, seqs))
}

/// Breadth-first closure under `φ_i` and `ψ_i`, to the given depth.
pub fn orbit(root: &Context, start: &[usize], depth: usize) -> MutationGraph {
    let mut g = MutationGraph { vertices: vec![start.to_vec()], ..Default::default() };
    let mut seen: BTreeMap<Seq, usize> = BTreeMap::new();
    seen.insert(start.to_vec(), 0);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    let mut edges = BTreeSet::new();
    let mut frontier = BTreeSet::new();
    while let Some((k, dist)) = queue.pop_front() {
        if dist >= depth {
            frontier.insert(k);
            continue;
        }
        let y = g.vertices[k].clone();
        for i in 1..y.len() {
            for dir in [Direction::Left, Direction::Right] {
                let x = match mutate(root, &y, i, dir) {
                    Ok(x) => x,
                    Err(Error::Immutable(_)) => continue,
                    Err(_) => {
                        frontier.insert(k);
                        continue;
                    }
                };
                let xk = *seen.entry(x.clone()).or_insert_with(|| {
                    g.vertices.push(x.clone());
                    queue.push_back((g.vertices.len() - 1, dist + 1));
                    g.vertices.len() - 1
                });
                edges.insert(match dir {
                    Direction::Left => (xk, k, i),
                    Direction::Right => (k, xk, i),
                });
            }
        }
    }
    g.edges = edges.into_iter().collect();
    g.frontier = frontier.into_iter().collect();
    g
}

// ------------------------------------------------------------ hereditary

/// The classical braid move `σ_i`, found by exhaustive search.
pub fn classical_braid(root: &Context, s: &[usize], i: usize) -> Result<Seq> {
    if !root.inv.alg.is_hereditary() {
        return Err(Error::Unsupported("classical braid moves need a hereditary algebra".into()));
    }
    pair_at(root, s, i)?;
    let found: Vec<Seq> = root
        .members()
        .iter()
        .filter_map(|&m| {
            let mut t = s.to_vec();
            t[i] = s[i - 1];
            t[i - 1] = m;
            is_tau_exceptional(root, &t).then_some(t)
        })
        .collect();
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap_or_default()),
        k => Err(Error::InventoryTooSmall { bound: root.bound(), what: format!("braid move has {k} candidates") }),
    }
}

// -------------------------------------------------------------- rank two

#[derive(Clone, Debug)]
pub struct Rank2Report {
    pub hasse: HasseGraph,
    pub tex: MutationGraph,
    /// Vertex of the support τ-tilting graph assigned to each complete pair.
    pub rho: Vec<Option<usize>>,
    pub q_vertices: Vec<usize>,
    pub q_edges: BTreeSet<(usize, usize)>,
    pub sttilt_components: usize,
    pub tex_components: usize,
}

impl Rank2Report {
    /// Whether `ρ` is a bijection onto `Q` carrying arrows exactly onto arrows.
    pub fn rho_is_isomorphism(&self) -> bool {
        let Some(rho): Option<Vec<usize>> = self.rho.iter().copied().collect() else {
            return false;
        };
        let image: BTreeSet<usize> = rho.iter().copied().collect();
        let q: BTreeSet<usize> = self.q_vertices.iter().copied().collect();
        if image != q || image.len() != rho.len() {
            return false;
        }
        let mapped: BTreeSet<(usize, usize)> = self.tex.edges.iter().map(|&(a, b, _)| (rho[a], rho[b])).collect();
        mapped == self.q_edges && mapped.len() == self.tex.edges.len()
    }
}

fn require_rank_two(root: &Context) -> Result<()> {
    if !root.is_root() || root.inv.alg.num_vertices() != 2 {
        return Err(Error::Unsupported("this check needs a rank-two module category".into()));
    }
    Ok(())
}

/// Both Hasse graphs of a rank-two algebra and the map `ρ` between them.
pub fn rank2(root: &Context) -> Result<Rank2Report> {
    require_rank_two(root)?;
    let hasse = root.sttilt_hasse();
    let tex = hasse_tex(root)?;
    let se = [root.serre_generator(0)?, root.serre_generator(1)?];
    let p = [root.inv.projective(0), root.inv.projective(1)];
    let top = p.iter().flatten().copied().collect::<Vec<_>>();
    let source = hasse.vertex_with_modules(&top);
    let sink = hasse.vertex_of(&StableObject::new(p.iter().flatten().map(|&x| Ind::Shift(x)).collect()));

    let rho = tex
        .vertices
        .iter()
        .map(|s| {
            let (b, c) = (s[0], s[1]);
            if se.contains(&c) {
                return hasse.vertex_with_modules(&[c]);
            }
            let (b0, c0) = psi(root, b, c).ok()?;
            let ns = omega_inv(root, &[b0, c0]).ok()?;
            hasse.vertex_with_modules(&ns)
        })
        .collect();

    let extremal = |v: usize| Some(v) == source || Some(v) == sink;
    let q_vertices: Vec<usize> = (0..hasse.vertices.len()).filter(|&v| !extremal(v)).collect();
    let mut q_edges: BTreeSet<(usize, usize)> =
        hasse.edges.iter().filter(|e| !extremal(e.0) && !extremal(e.1)).map(|e| (e.0, e.1)).collect();
    for j in 0..2 {
        let other = 1 - j;
        let (Some(pk), Some(from)) = (p[other], hasse.vertex_with_modules(&[se[j]])) else { continue };
        let mut mods = vec![pk];
        mods.extend(root.cobongartz(&[pk])?);
        if let Some(to) = hasse.vertex_with_modules(&mods) {
            q_edges.insert((from, to));
        }
    }
    let sttilt_components = component_count(hasse.vertices.len(), hasse.edges.iter().map(|e| (e.0, e.1)));
    let tex_components = tex.components();
    Ok(Rank2Report { hasse, tex, rho, q_vertices, q_edges, sttilt_components, tex_components })
}

/// Per-vertex brick check: `(β(B), β(C))` against the labels of the arrows
/// into and out of `ρ(B, C)`. Returns the failures.
pub fn brick_pair_check(root: &Context, report: &Rank2Report) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let h = &report.hasse;
    for (k, s) in report.tex.vertices.iter().enumerate() {
        let Some(v) = report.rho[k] else {
            failures.push(format!("no image for {}", seq_names(root, s)));
            continue;
        };
        let incoming: Vec<Option<usize>> = h.edges.iter().filter(|e| e.1 == v).map(|e| e.2).collect();
        let outgoing: Vec<Option<usize>> = h.edges.iter().filter(|e| e.0 == v).map(|e| e.2).collect();
        let want = (root.beta(s[0])?, root.beta(s[1])?);
        let got = match (incoming.as_slice(), outgoing.as_slice()) {
            ([Some(a)], [Some(b)]) => Some((*a, *b)),
            _ => None,
        };
        if got != Some(want) {
            failures.push(format!("{} at {}", seq_names(root, s), h.vertices[v].display(&root.inv)));
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::inventory::build_inventory;
    use std::sync::Arc;

    fn ctx(name: &str, d: usize) -> Context {
        let a = Arc::new(builtin(name).unwrap());
        Context::root(Arc::new(build_inventory(&a, d, &[]).unwrap()))
    }

    fn seq(c: &Context, names: &[&str]) -> Seq {
        names.iter().map(|n| c.inv.lookup(n).unwrap()).collect()
    }

    #[test]
    fn a2_sequences_and_braid() {
        let c = ctx("a2", 6);
        let all = enumerate_complete(&c).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all, enumerate_recursive(&c, 2).unwrap());
        let s = seq(&c, &["P2", "P1"]);
        assert_eq!(classical_braid(&c, &s, 1).unwrap(), seq(&c, &["S1", "P2"]));
        assert_eq!(phi_i(&c, &s, 1).unwrap(), seq(&c, &["S1", "P2"]));
    }

    #[test]
    fn omega_round_trip_ex92() {
        let c = ctx("ex-9.2", 8);
        let tf = seq(&c, &["P1/P3", "S2"]);
        let s = omega(&c, &tf).unwrap();
        assert_eq!(s, seq(&c, &["S1", "S2"]));
        assert_eq!(omega_inv(&c, &s).unwrap(), tf);
    }

    #[test]
    fn invalid_sequences() {
        let c = ctx("ex-9.3", 10);
        let p1 = seq(&c, &["P1", "P1"]);
        assert!(!is_tau_exceptional(&c, &p1));
        assert!(is_tau_exceptional(&c, &seq(&c, &["P2"])));
    }

    #[test]
    fn ex93_has_twelve() {
        let c = ctx("ex-9.3", 10);
        let all = enumerate_complete(&c).unwrap();
        assert_eq!(all.len(), 12);
        assert_eq!(all, enumerate_recursive(&c, 3).unwrap());
    }

    #[test]
    fn a2_rank_two_structure() {
        let c = ctx("a2", 6);
        let r = rank2(&c).unwrap();
        assert_eq!((r.sttilt_components, r.tex_components), (1, 1));
        assert!(r.rho_is_isomorphism());
        assert!(brick_pair_check(&c, &r).unwrap().is_empty());
    }
}
