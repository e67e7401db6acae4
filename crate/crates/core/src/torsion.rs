//! Torsion-theoretic computations over an ambient context.
//!
//! A context is a set of inventory members standing for an abelian category:
//! either the whole module category or a wide subcategory `J(U)`. Every class
//! below is a subset of context members. Relative Ext groups agree with Ext in
//! the module category, so Ext-projectivity and τ-rigidity inside a
//! subcategory are decided from the global Ext table.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::inventory::Inventory;
use crate::linalg::span_sum;
use crate::module::{Module, ModuleMap};

/// An indecomposable object of `C(W)`: a module, a shifted relative projective
/// `P[1]`, or a shifted relative injective `I[-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ind {
    Mod(usize),
    Shift(usize),
    NegShift(usize),
}

impl Ind {
    /// The underlying module, forgetting any shift.
    pub fn strip(self) -> usize {
        match self {
            Ind::Mod(x) | Ind::Shift(x) | Ind::NegShift(x) => x,
        }
    }

    pub fn is_module(self) -> bool {
        matches!(self, Ind::Mod(_))
    }

    pub fn display(self, inv: &Inventory) -> String {
        match self {
            Ind::Mod(x) => inv.name(x).to_string(),
            Ind::Shift(x) => format!("{}[1]", inv.name(x)),
            Ind::NegShift(x) => format!("{}[-1]", inv.name(x)),
        }
    }
}

/// A basic direct sum of indecomposable objects, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StableObject {
    pub items: Vec<Ind>,
}

impl StableObject {
    pub fn new(mut items: Vec<Ind>) -> StableObject {
        items.sort();
        items.dedup();
        StableObject { items }
    }

    pub fn zero() -> StableObject {
        StableObject::default()
    }

    pub fn one(x: Ind) -> StableObject {
        StableObject { items: vec![x] }
    }

    pub fn modules(mods: &[usize]) -> StableObject {
        StableObject::new(mods.iter().map(|&m| Ind::Mod(m)).collect())
    }

    pub fn with(&self, x: Ind) -> StableObject {
        let mut items = self.items.clone();
        items.push(x);
        StableObject::new(items)
    }

    pub fn mods(&self) -> Vec<usize> {
        self.items.iter().filter_map(|i| if let Ind::Mod(x) = i { Some(*x) } else { None }).collect()
    }

    pub fn shifts(&self) -> Vec<usize> {
        self.items.iter().filter_map(|i| if let Ind::Shift(x) = i { Some(*x) } else { None }).collect()
    }

    pub fn neg_shifts(&self) -> Vec<usize> {
        self.items.iter().filter_map(|i| if let Ind::NegShift(x) = i { Some(*x) } else { None }).collect()
    }

    pub fn rank(&self) -> usize {
        self.items.len()
    }

    pub fn contains(&self, x: Ind) -> bool {
        self.items.contains(&x)
    }

    pub fn display(&self, inv: &Inventory) -> String {
        if self.items.is_empty() {
            return "0".to_string();
        }
        let mut items = self.items.clone();
        items.sort_by(|a, b| {
            let rank = |i: &Ind| match i {
                Ind::Mod(_) => 0,
                Ind::Shift(_) => 1,
                Ind::NegShift(_) => 2,
            };
            (rank(a), inv.name(a.strip())).cmp(&(rank(b), inv.name(b.strip())))
        });
        items.iter().map(|i| i.display(inv)).collect::<Vec<_>>().join("+")
    }
}

/// Functorial finiteness verdict for a torsion or torsion-free class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FfStatus {
    FunctoriallyFinite(Vec<usize>),
    NotFfEvidence(usize),
    Unknown(usize),
}

impl fmt::Display for FfStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FfStatus::FunctoriallyFinite(_) => write!(f, "functorially finite"),
            FfStatus::NotFfEvidence(d) => write!(f, "not functorially finite (evidence at bound {d})"),
            FfStatus::Unknown(d) => write!(f, "unknown at bound {d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Torsion,
    TorsionFree,
}

#[derive(Debug)]
pub(crate) struct CtxData {
    members: Vec<usize>,
    mask: Vec<bool>,
    root: bool,
    bound: usize,
    label: String,
    rel_proj: OnceLock<Vec<usize>>,
    rel_inj: OnceLock<Vec<usize>>,
    rel_simple: OnceLock<Vec<usize>>,
}

pub(crate) type ContextCache = Mutex<HashMap<(bool, usize, Vec<usize>), Arc<CtxData>>>;

/// A handle to the whole module category or a wide subcategory of it.
#[derive(Clone, Debug)]
pub struct Context {
    pub inv: Arc<Inventory>,
    data: Arc<CtxData>,
}

/// Directed graph of support τ-tilting objects with brick labels.
#[derive(Clone, Debug)]
pub struct HasseGraph {
    pub vertices: Vec<StableObject>,
    /// `(source, target, label)`: the target is a left mutation of the source.
    pub edges: Vec<(usize, usize, Option<usize>)>,
}

impl HasseGraph {
    pub fn vertex_of(&self, obj: &StableObject) -> Option<usize> {
        self.vertices.iter().position(|v| v == obj)
    }

    pub fn vertex_with_modules(&self, mods: &[usize]) -> Option<usize> {
        let mut want = mods.to_vec();
        want.sort();
        self.vertices.iter().position(|v| v.mods() == want)
    }
}

impl Context {
    /// The whole module category.
    pub fn root(inv: Arc<Inventory>) -> Context {
        let members: Vec<usize> = (0..inv.len()).collect();
        let bound = inv.max_dim;
        Context::make(inv, members, true, bound, "mod A".to_string())
    }

    fn make(inv: Arc<Inventory>, mut members: Vec<usize>, root: bool, bound: usize, label: String) -> Context {
        members.sort();
        members.dedup();
        let key = (root, bound, members.clone());
        let data = {
            let mut cache = inv.contexts.lock().expect("context cache poisoned");
            cache
                .entry(key)
                .or_insert_with(|| {
                    let mut mask = vec![false; inv.len()];
                    for &m in &members {
                        mask[m] = true;
                    }
                    Arc::new(CtxData {
                        members,
                        mask,
                        root,
                        bound,
                        label,
                        rel_proj: OnceLock::new(),
                        rel_inj: OnceLock::new(),
                        rel_simple: OnceLock::new(),
                    })
                })
                .clone()
        };
        Context { inv, data }
    }

    /// The subcategory of this context on the given members.
    pub fn sub(&self, members: Vec<usize>, label: String) -> Context {
        let bound = self.data.bound;
        Context::make(self.inv.clone(), members, false, bound, label)
    }

    /// The same context restricted to members of total dimension at most `d`.
    pub fn truncated(&self, d: usize) -> Context {
        let members = self.data.members.iter().copied().filter(|&x| self.inv.dim(x) <= d).collect();
        Context::make(self.inv.clone(), members, self.data.root, d, format!("{} (bound {d})", self.data.label))
    }

    pub fn members(&self) -> &[usize] {
        &self.data.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.data.mask[x]
    }

    pub fn is_root(&self) -> bool {
        self.data.root
    }

    pub fn label(&self) -> &str {
        &self.data.label
    }

    pub fn bound(&self) -> usize {
        self.data.bound
    }

    /// Whether answers are exact rather than relative to the dimension bound.
    pub fn exact(&self) -> bool {
        self.inv.complete && self.data.bound >= self.inv.max_dim
    }

    pub fn name(&self, x: usize) -> &str {
        self.inv.name(x)
    }

    pub fn names(&self, xs: &[usize]) -> String {
        if xs.is_empty() {
            return "0".to_string();
        }
        xs.iter().map(|&x| self.inv.name(x)).collect::<Vec<_>>().join("+")
    }

    pub fn same_as(&self, other: &Context) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
    }

    fn bound_error(&self, what: impl Into<String>) -> Error {
        Error::InventoryTooSmall { bound: self.data.bound, what: what.into() }
    }

    pub fn require_member(&self, x: usize) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotInContext(format!("{} in {}", self.inv.name(x), self.data.label)))
        }
    }

    // ------------------------------------------------------ Gen and perps

    pub fn gen_contains(&self, set: &[usize], x: usize) -> bool {
        self.inv.in_gen(set, x)
    }

    pub fn cogen_contains(&self, set: &[usize], x: usize) -> bool {
        self.inv.in_cogen(set, x)
    }

    pub fn gen(&self, set: &[usize]) -> Vec<usize> {
        self.members().iter().copied().filter(|&x| self.gen_contains(set, x)).collect()
    }

    pub fn cogen(&self, set: &[usize]) -> Vec<usize> {
        self.members().iter().copied().filter(|&x| self.cogen_contains(set, x)).collect()
    }

    /// Members `Y` with `Hom(S, Y) = 0`.
    pub fn right_perp(&self, set: &[usize]) -> Vec<usize> {
        self.members().iter().copied().filter(|&y| set.iter().all(|&s| self.inv.hom(s, y) == 0)).collect()
    }

    /// Members `Y` with `Hom(Y, S) = 0`.
    pub fn left_perp(&self, set: &[usize]) -> Vec<usize> {
        self.members().iter().copied().filter(|&y| set.iter().all(|&s| self.inv.hom(y, s) == 0)).collect()
    }

    /// The smallest torsion class containing `set`, as `⊥(set^⊥)`.
    pub fn filt_gen(&self, set: &[usize]) -> Vec<usize> {
        let rp = self.right_perp(set);
        self.left_perp(&rp)
    }

    pub fn filt_cogen(&self, set: &[usize]) -> Vec<usize> {
        let lp = self.left_perp(set);
        self.right_perp(&lp)
    }

    // ------------------------------------------------- Ext-projectives

    pub fn ext_projectives(&self, t: &[usize]) -> Vec<usize> {
        t.iter().copied().filter(|&x| t.iter().all(|&z| self.inv.ext(x, z) == 0)).collect()
    }

    pub fn ext_injectives(&self, f: &[usize]) -> Vec<usize> {
        f.iter().copied().filter(|&x| f.iter().all(|&z| self.inv.ext(z, x) == 0)).collect()
    }

    /// `(P_s(T), P_ns(T))`.
    pub fn split_projectives(&self, t: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let p = self.ext_projectives(t);
        split_by(&p, |others, x| self.gen_contains(others, x))
    }

    /// `(I_s(F), I_ns(F))`.
    pub fn split_injectives(&self, f: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let i = self.ext_injectives(f);
        split_by(&i, |others, x| self.cogen_contains(others, x))
    }

    // ----------------------------------------------------------- τ tests

    /// Whether `Hom(X, τ_W M) = 0`.
    pub fn hom_to_tau_vanishes(&self, x: usize, m: usize) -> bool {
        if self.data.root {
            return self.inv.hom_tau(x, m) == 0;
        }
        self.gen(&[x]).iter().all(|&z| self.inv.ext(m, z) == 0)
    }

    /// Whether `Hom(τ_W⁻¹ N, X) = 0`.
    pub fn hom_from_tau_inv_vanishes(&self, n: usize, x: usize) -> bool {
        if self.data.root {
            return self.inv.hom_tau_inv(n, x) == 0;
        }
        self.cogen(&[x]).iter().all(|&z| self.inv.ext(z, n) == 0)
    }

    /// `⊥τ_W M`.
    pub fn tau_perp(&self, ms: &[usize]) -> Vec<usize> {
        self.members().iter().copied().filter(|&x| ms.iter().all(|&m| self.hom_to_tau_vanishes(x, m))).collect()
    }

    /// `(τ_W⁻¹ N)^⊥`.
    pub fn tau_inv_perp(&self, ns: &[usize]) -> Vec<usize> {
        self.members()
            .iter()
            .copied()
            .filter(|&x| ns.iter().all(|&n| self.hom_from_tau_inv_vanishes(n, x)))
            .collect()
    }

    pub fn is_tau_rigid(&self, ms: &[usize]) -> bool {
        ms.iter().all(|&a| ms.iter().all(|&b| self.hom_to_tau_vanishes(a, b)))
    }

    pub fn is_tau_inv_rigid(&self, ns: &[usize]) -> bool {
        ns.iter().all(|&a| ns.iter().all(|&b| self.hom_from_tau_inv_vanishes(a, b)))
    }

    /// Support τ-rigidity of `M ⊕ P[1]`.
    pub fn is_support_tau_rigid(&self, u: &StableObject) -> bool {
        if !u.neg_shifts().is_empty() {
            return false;
        }
        let mods = u.mods();
        let rp = self.rel_projectives();
        mods.iter().all(|&m| self.contains(m))
            && self.is_tau_rigid(&mods)
            && u.shifts().iter().all(|p| rp.contains(p) && mods.iter().all(|&m| self.inv.hom(*p, m) == 0))
    }

    /// Support τ⁻¹-rigidity of `N ⊕ I[-1]`.
    pub fn is_support_tau_inv_rigid(&self, v: &StableObject) -> bool {
        if !v.shifts().is_empty() {
            return false;
        }
        let mods = v.mods();
        let ri = self.rel_injectives();
        mods.iter().all(|&m| self.contains(m))
            && self.is_tau_inv_rigid(&mods)
            && v.neg_shifts().iter().all(|i| ri.contains(i) && mods.iter().all(|&m| self.inv.hom(m, *i) == 0))
    }

    fn compatible(&self, a: Ind, b: Ind) -> bool {
        match (a, b) {
            (Ind::Mod(x), Ind::Mod(y)) => self.hom_to_tau_vanishes(x, y) && self.hom_to_tau_vanishes(y, x),
            (Ind::Mod(x), Ind::Shift(p)) | (Ind::Shift(p), Ind::Mod(x)) => self.inv.hom(p, x) == 0,
            (Ind::Shift(_), Ind::Shift(_)) => true,
            _ => false,
        }
    }

    // ------------------------------------------- relative structure

    pub fn rel_projectives(&self) -> &[usize] {
        self.data.rel_proj.get_or_init(|| {
            if self.data.root {
                (0..self.inv.alg.num_vertices()).filter_map(|v| self.inv.projective(v)).filter(|&x| self.contains(x)).collect()
            } else {
                self.ext_projectives(self.members())
            }
        })
    }

    pub fn rel_injectives(&self) -> &[usize] {
        self.data.rel_inj.get_or_init(|| {
            if self.data.root {
                (0..self.inv.alg.num_vertices()).filter_map(|v| self.inv.injective(v)).filter(|&x| self.contains(x)).collect()
            } else {
                self.ext_injectives(self.members())
            }
        })
    }

    /// Members that are simple objects of the context.
    pub fn rel_simples(&self) -> &[usize] {
        self.data.rel_simple.get_or_init(|| {
            if self.data.root {
                return (0..self.inv.alg.num_vertices()).filter_map(|v| self.inv.simple(v)).collect();
            }
            let rp = self.rel_projectives().to_vec();
            self.members().iter().copied().filter(|&x| rp.iter().map(|&p| self.inv.hom(p, x)).sum::<usize>() == 1).collect()
        })
    }

    /// Simple objects by the defining property: no nonzero proper subobject in the context.
    ///
    /// Images of maps between members stay in a wide subcategory, so `X` fails
    /// to be simple exactly when a smaller member embeds into it.
    pub fn rel_simples_by_maps(&self) -> Vec<usize> {
        self.members()
            .iter()
            .copied()
            .filter(|&x| {
                let mx = self.inv.module(x);
                self.members().iter().all(|&z| {
                    z == x || self.inv.dim(z) >= mx.total_dim() || self.inv.hom(z, x) == 0 || !has_mono(self.inv.module(z), mx)
                })
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rel_projectives().len()
    }

    /// Sincere: every vertex supports some member.
    pub fn is_sincere(&self) -> bool {
        (0..self.inv.alg.num_vertices()).all(|v| self.members().iter().any(|&x| self.inv.module(x).dims[v] > 0))
    }

    /// The relative simple top of a relative projective.
    pub fn top_of(&self, p: usize) -> Result<usize> {
        self.rel_simples()
            .iter()
            .copied()
            .find(|&s| self.inv.hom(p, s) > 0)
            .ok_or_else(|| self.bound_error(format!("simple top of {}", self.inv.name(p))))
    }

    /// The relative simple socle of a relative injective.
    pub fn socle_of(&self, i: usize) -> Result<usize> {
        self.rel_simples()
            .iter()
            .copied()
            .find(|&s| self.inv.hom(s, i) > 0)
            .ok_or_else(|| self.bound_error(format!("simple socle of {}", self.inv.name(i))))
    }

    /// Relative Nakayama functor on indecomposable relative projectives.
    pub fn rel_nu(&self, p: usize) -> Result<usize> {
        if !self.rel_projectives().contains(&p) {
            return Err(Error::Incompatible(format!("{} is not projective in {}", self.inv.name(p), self.label())));
        }
        let s = self.top_of(p)?;
        self.rel_injectives()
            .iter()
            .copied()
            .find(|&i| self.inv.hom(s, i) > 0)
            .ok_or_else(|| self.bound_error(format!("injective hull of {}", self.inv.name(s))))
    }

    pub fn rel_nu_inv(&self, i: usize) -> Result<usize> {
        if !self.rel_injectives().contains(&i) {
            return Err(Error::Incompatible(format!("{} is not injective in {}", self.inv.name(i), self.label())));
        }
        let s = self.socle_of(i)?;
        self.rel_projectives()
            .iter()
            .copied()
            .find(|&p| self.inv.hom(p, s) > 0)
            .ok_or_else(|| self.bound_error(format!("projective cover of {}", self.inv.name(s))))
    }

    /// Relative AR translate; `None` on relative projectives.
    ///
    /// Inside a subcategory `τ_W X` is identified by its Hom profile
    /// `dim Hom(Y, τ_W X) = Σ_k (m1_k - m0_k) dim Hom(P_k, Y) + dim Hom(X, Y)`,
    /// read off a minimal relative projective presentation of `X`.
    pub fn rel_tau(&self, x: usize) -> Result<Option<usize>> {
        self.require_member(x)?;
        if self.data.root {
            return self.inv.tau(x);
        }
        let rp = self.rel_projectives().to_vec();
        if rp.contains(&x) {
            return Ok(None);
        }
        let mut weights = Vec::with_capacity(rp.len());
        for &p in &rp {
            let s = self.top_of(p)?;
            weights.push((p, self.inv.ext(x, s) as i64 - self.inv.hom(x, s) as i64));
        }
        let target: Vec<(usize, i64)> = self
            .members()
            .iter()
            .map(|&y| {
                let v = weights.iter().map(|&(p, w)| w * self.inv.hom(p, y) as i64).sum::<i64>() + self.inv.hom(x, y) as i64;
                (y, v)
            })
            .collect();
        self.unique_match(&target, |y, z| self.inv.hom(y, z), &format!("relative tau of {}", self.inv.name(x)))
            .map(Some)
    }

    pub fn rel_tau_inv(&self, x: usize) -> Result<Option<usize>> {
        self.require_member(x)?;
        if self.data.root {
            return self.inv.tau_inv(x);
        }
        let ri = self.rel_injectives().to_vec();
        if ri.contains(&x) {
            return Ok(None);
        }
        let mut weights = Vec::with_capacity(ri.len());
        for &i in &ri {
            let s = self.socle_of(i)?;
            weights.push((i, self.inv.ext(s, x) as i64 - self.inv.hom(s, x) as i64));
        }
        let target: Vec<(usize, i64)> = self
            .members()
            .iter()
            .map(|&y| {
                let v = weights.iter().map(|&(i, w)| w * self.inv.hom(y, i) as i64).sum::<i64>() + self.inv.hom(y, x) as i64;
                (y, v)
            })
            .collect();
        self.unique_match(&target, |y, z| self.inv.hom(z, y), &format!("relative inverse tau of {}", self.inv.name(x)))
            .map(Some)
    }

    fn unique_match(&self, target: &[(usize, i64)], h: impl Fn(usize, usize) -> usize, what: &str) -> Result<usize> {
        let found: Vec<usize> = self
            .members()
            .iter()
            .copied()
            .filter(|&z| target.iter().all(|&(y, v)| h(y, z) as i64 == v))
            .collect();
        match found.as_slice() {
            [z] => Ok(*z),
            [] => Err(self.bound_error(what.to_string())),
            _ => Err(Error::Unsupported(format!("{what} is not determined by Hom dimensions at this bound"))),
        }
    }

    // --------------------------------------------------- quotients

    /// `f_M(X) = X / trace(M, X)` for a member `X`.
    pub fn tf_quotient(&self, ms: &[usize], x: usize) -> Module {
        let module = self.inv.module(x);
        let mut acc = module.zero_subspace();
        for &m in ms {
            if self.inv.hom(m, x) == 0 {
                continue;
            }
            acc = acc.iter().zip(self.inv.trace(m, x)).map(|(a, b)| span_sum(a, b)).collect();
        }
        module.quotient(&acc).0
    }

    /// Identifies an indecomposable module computed inside this context.
    pub fn identify(&self, m: &Module, what: &str) -> Result<usize> {
        let x = self.inv.require(m, what)?;
        Ok(x)
    }

    pub fn beta(&self, x: usize) -> Result<usize> {
        let b = self.inv.module(x).beta();
        self.identify(&b, &format!("beta of {}", self.inv.name(x)))
    }

    // --------------------------------------- Bongartz completions

    pub fn bongartz(&self, ms: &[usize]) -> Result<Vec<usize>> {
        if !self.is_tau_rigid(ms) {
            return Err(Error::NotTauRigid(self.names(ms)));
        }
        let t = self.tau_perp(ms);
        Ok(self.ext_projectives(&t).into_iter().filter(|x| !ms.contains(x)).collect())
    }

    pub fn cobongartz(&self, ms: &[usize]) -> Result<Vec<usize>> {
        if !self.is_tau_rigid(ms) {
            return Err(Error::NotTauRigid(self.names(ms)));
        }
        let t = self.gen(ms);
        Ok(self.ext_projectives(&t).into_iter().filter(|x| !ms.contains(x)).collect())
    }

    // ------------------------------------- support τ-tilting objects

    /// All support τ-tilting objects, each of rank equal to the context rank.
    pub fn support_tau_tilting(&self) -> Vec<StableObject> {
        let mut items: Vec<Ind> =
            self.members().iter().copied().filter(|&x| self.is_tau_rigid(&[x])).map(Ind::Mod).collect();
        items.extend(self.rel_projectives().iter().map(|&p| Ind::Shift(p)));
        let n = self.rank();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.extend_cliques(&items, 0, n, &mut chosen, &mut out);
        out.sort();
        out
    }

    fn extend_cliques(&self, items: &[Ind], from: usize, n: usize, chosen: &mut Vec<Ind>, out: &mut Vec<StableObject>) {
        if chosen.len() == n {
            out.push(StableObject::new(chosen.clone()));
            return;
        }
        for k in from..items.len() {
            let c = items[k];
            if let Ind::Shift(p) = c {
                if chosen.contains(&Ind::Mod(p)) {
                    // allowed: P and P[1] never coexist because Hom(P, P) != 0
                }
            }
            if chosen.iter().all(|&d| self.compatible(c, d)) {
                chosen.push(c);
                self.extend_cliques(items, k + 1, n, chosen, out);
                chosen.pop();
            }
        }
    }

    pub fn sttilt_hasse(&self) -> HasseGraph {
        let vertices = self.support_tau_tilting();
        let n = self.rank();
        let mut edges = Vec::new();
        for (a, va) in vertices.iter().enumerate() {
            for (b, vb) in vertices.iter().enumerate() {
                if a == b {
                    continue;
                }
                let common = va.items.iter().filter(|x| vb.items.contains(x)).count();
                if common + 1 != n {
                    continue;
                }
                let ma = va.mods();
                if vb.mods().iter().all(|&m| self.gen_contains(&ma, m)) {
                    let label = self.mutation_label(va, vb);
                    edges.push((a, b, label));
                }
            }
        }
        HasseGraph { vertices, edges }
    }

    /// `β(f_N X)` for the summand `X` of `M` replaced in the left mutation `M -> N`.
    fn mutation_label(&self, m: &StableObject, n: &StableObject) -> Option<usize> {
        let x = m.items.iter().find(|i| !n.items.contains(i))?;
        let Ind::Mod(x) = *x else { return None };
        let q = self.tf_quotient(&n.mods(), x);
        let parts = q.decompose();
        let part = parts.first()?;
        let b = part.beta();
        self.inv.identify(&b)
    }

    // ------------------------------------------ functorial finiteness

    /// Three-valued functorial finiteness of the class built by `build`.
    ///
    /// `build` is re-evaluated on the context truncated one dimension lower to
    /// test whether the Ext-projective (or Ext-injective) candidates have settled.
    pub fn ff_status(&self, kind: ClassKind, build: &dyn Fn(&Context) -> Result<Vec<usize>>) -> Result<FfStatus> {
        let class = build(self)?;
        let (witness, covered) = self.ff_witness(kind, &class);
        if self.exact() || covered {
            return Ok(FfStatus::FunctoriallyFinite(witness));
        }
        let d = self.bound();
        let smaller = self.truncated(d.saturating_sub(1));
        let Ok(class2) = build(&smaller) else {
            return Ok(FfStatus::Unknown(d));
        };
        let (witness2, covered2) = smaller.ff_witness(kind, &class2);
        if witness2 == witness && !covered2 {
            Ok(FfStatus::NotFfEvidence(d))
        } else {
            Ok(FfStatus::Unknown(d))
        }
    }

    fn ff_witness(&self, kind: ClassKind, class: &[usize]) -> (Vec<usize>, bool) {
        match kind {
            ClassKind::Torsion => {
                let w = self.ext_projectives(class);
                let covered = class.iter().all(|&x| self.gen_contains(&w, x));
                (w, covered)
            }
            ClassKind::TorsionFree => {
                let w = self.ext_injectives(class);
                let covered = class.iter().all(|&x| self.cogen_contains(&w, x));
                (w, covered)
            }
        }
    }

    // ---------------------------------------------------- rank two

    /// The largest quotient of `P_v` whose composition factors are all `S_v`.
    pub fn serre_generator(&self, v: usize) -> Result<usize> {
        if !self.data.root || self.inv.alg.num_vertices() != 2 {
            return Err(Error::Unsupported("serre generator needs a rank-two module category".into()));
        }
        let alg = &self.inv.alg;
        let pv = Module::projective(alg, v);
        let other = Module::projective(alg, 1 - v);
        let q = pv.tf_part(&other);
        self.identify(&q, &format!("serre generator at vertex {}", alg.vertex_id(v)))
    }
}

/// Whether some map `z -> x` is injective, tested on a spread of combinations.
fn has_mono(z: &Module, x: &Module) -> bool {
    let basis = z.hom_basis(x);
    let p = z.p();
    (0..basis.len().max(1) * 4).any(|t| {
        let coeffs: Vec<u32> = (0..basis.len()).map(|i| crate::linalg::pow_mod(t as u64 + 2, i as u64, p as u64) as u32).collect();
        ModuleMap::combination(&basis, &coeffs).is_some_and(|f| f.is_injective())
    }) || basis.iter().any(|f| f.is_injective())
}

fn split_by(set: &[usize], generated: impl Fn(&[usize], usize) -> bool) -> (Vec<usize>, Vec<usize>) {
    let mut split = Vec::new();
    let mut non_split = Vec::new();
    for &x in set {
        let others: Vec<usize> = set.iter().copied().filter(|&y| y != x).collect();
        if generated(&others, x) {
            non_split.push(x);
        } else {
            split.push(x);
        }
    }
    (split, non_split)
}

/// Weakly connected components of a graph given by an edge list.
pub fn component_count(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> usize {
    let mut g = petgraph::graph::UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for (a, b) in edges {
        g.add_edge(nodes[a], nodes[b], ());
    }
    petgraph::algo::connected_components(&g)
}

/// Members as a set, for order-insensitive comparisons.
pub fn as_set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::inventory::build_inventory;

    fn ctx(name: &str, d: usize) -> Context {
        let a = Arc::new(builtin(name).unwrap());
        Context::root(Arc::new(build_inventory(&a, d, &[]).unwrap()))
    }

    fn ids(c: &Context, names: &[&str]) -> Vec<usize> {
        let mut v: Vec<usize> = names.iter().map(|n| c.inv.lookup(n).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn ex93_all_tau_rigid_bricks() {
        let c = ctx("ex-9.3", 10);
        for &x in c.members() {
            assert!(c.is_tau_rigid(&[x]));
            assert!(c.inv.module(x).is_brick());
        }
    }

    #[test]
    fn a2_gen_p1() {
        let c = ctx("a2", 6);
        let g = c.gen(&ids(&c, &["P1"]));
        assert_eq!(g, ids(&c, &["P1", "S1"]));
        assert_eq!(c.ext_projectives(&g), ids(&c, &["P1", "S1"]));
        let (ps, pns) = c.split_projectives(&g);
        assert_eq!(ps, ids(&c, &["P1"]));
        assert_eq!(pns, ids(&c, &["S1"]));
        assert_eq!(c.cobongartz(&ids(&c, &["P1"])).unwrap(), ids(&c, &["S1"]));
    }

    #[test]
    fn whole_category_split_projectives() {
        let c = ctx("ex-9.4", 10);
        let (ps, pns) = c.split_projectives(c.members());
        let mut proj = c.rel_projectives().to_vec();
        proj.sort();
        assert_eq!(ps, proj);
        assert!(pns.is_empty());
        assert_eq!(c.filt_gen(&proj).len(), c.members().len());
        assert!(c.filt_gen(&[]).is_empty());
    }

    #[test]
    fn ex92_serre_subcategory() {
        let c = ctx("ex-9.2", 8);
        let t = c.filt_gen(&ids(&c, &["S1", "S2"]));
        for &x in c.members() {
            let supported = c.inv.module(x).dims[2] == 0;
            assert_eq!(t.contains(&x), supported, "{}", c.name(x));
        }
        let (ps, _) = c.split_projectives(&t);
        assert_eq!(ps, ids(&c, &["S2", "P1/P3"]));
    }

    #[test]
    fn a2_hasse_has_five_vertices() {
        let c = ctx("a2", 6);
        let h = c.sttilt_hasse();
        assert_eq!(h.vertices.len(), 5);
        assert_eq!(h.edges.len(), 5);
        assert_eq!(component_count(5, h.edges.iter().map(|e| (e.0, e.1))), 1);
    }

    #[test]
    fn serre_generators_of_two_cycle_algebra_are_simple() {
        let c = ctx("ex-9.1", 6);
        assert_eq!(c.serre_generator(0).unwrap(), c.inv.lookup("S1").unwrap());
        assert_eq!(c.serre_generator(1).unwrap(), c.inv.lookup("S2").unwrap());
    }

    #[test]
    fn bongartz_of_projective() {
        let c = ctx("ex-9.3", 10);
        let p1 = ids(&c, &["P1"]);
        assert_eq!(c.bongartz(&p1).unwrap(), ids(&c, &["P2", "P3"]));
    }
}
