//! Finite lists of indecomposable modules with cached Hom, Ext and τ tables.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::algebra::{Algebra, BiserialClass};
use crate::error::{Error, Result};
use crate::linalg::{span_intersection, span_sum};
use crate::module::{Module, StandardKind, Subspace};
use crate::strings::{detect_bands, enumerate_strings, has_string_longer_than, string_to_module, StringWord};
use crate::torsion::ContextCache;

pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Clone, Debug)]
pub struct Member {
    pub module: Module,
    pub name: String,
    pub word: Option<StringWord>,
}

#[derive(Debug)]
struct Translate {
    module: Module,
    index: Option<usize>,
}

#[derive(Debug)]
pub struct Inventory {
    pub alg: Arc<Algebra>,
    pub members: Vec<Member>,
    pub complete: bool,
    pub bands_present: bool,
    pub max_dim: usize,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
    by_name: HashMap<String, usize>,
    projectives: Vec<Option<usize>>,
    injectives: Vec<Option<usize>>,
    simples: Vec<Option<usize>>,
    hom: Vec<OnceLock<usize>>,
    ext: Vec<OnceLock<usize>>,
    syzygy: Vec<OnceLock<(Module, Vec<usize>)>>,
    tau: Vec<OnceLock<Translate>>,
    tau_inv: Vec<OnceLock<Translate>>,
    hom_tau: Vec<OnceLock<usize>>,
    hom_tau_inv: Vec<OnceLock<usize>>,
    trace: Vec<OnceLock<Subspace>>,
    reject: Vec<OnceLock<Subspace>>,
    pub(crate) contexts: ContextCache,
}

fn table(n: usize) -> Vec<OnceLock<usize>> {
    once_vec(n * n)
}

fn once_vec<T>(k: usize) -> Vec<OnceLock<T>> {
    (0..k).map(|_| OnceLock::new()).collect()
}

/// Builds the inventory of string modules of total dimension at most `max_dim`,
/// together with the indecomposable summands of `extra`.
pub fn build_inventory(alg: &Arc<Algebra>, max_dim: usize, extra: &[Module]) -> Result<Inventory> {
    let string_algebra = alg.classify_biserial() != BiserialClass::Other;
    if !string_algebra && extra.is_empty() {
        return Err(Error::NotSpecialBiserial);
    }
    let max_len = max_dim.saturating_sub(1);
    let mut found: Vec<(Module, Option<StringWord>)> = Vec::new();
    let (mut complete, mut bands_present) = (false, false);
    if string_algebra {
        for w in enumerate_strings(alg, max_len)? {
            found.push((string_to_module(alg, &w), Some(w)));
        }
        bands_present = !detect_bands(alg, max_dim.max(2))?.is_empty();
        complete = !has_string_longer_than(alg, max_len);
    }
    for m in extra {
        for part in m.decompose() {
            if part.total_dim() <= max_dim && !found.iter().any(|(x, _)| x.is_isomorphic(&part)) {
                found.push((part, None));
            }
        }
    }
    found.sort_by(|(a, wa), (b, wb)| {
        (a.total_dim(), &a.dims, wa).cmp(&(b.total_dim(), &b.dims, wb))
    });
    Ok(Inventory::from_parts(alg.clone(), found, complete, bands_present, max_dim))
}

impl Inventory {
    fn from_parts(
        alg: Arc<Algebra>,
        found: Vec<(Module, Option<StringWord>)>,
        complete: bool,
        bands_present: bool,
        max_dim: usize,
    ) -> Inventory {
        let n = found.len();
        let mut by_dims: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (i, (m, _)) in found.iter().enumerate() {
            by_dims.entry(m.dims.clone()).or_default().push(i);
        }
        let locate = |m: &Module| -> Option<usize> {
            by_dims.get(&m.dims)?.iter().copied().find(|&i| found[i].0.is_isomorphic(m))
        };
        let nv = alg.num_vertices();
        let projectives: Vec<Option<usize>> = (0..nv).map(|v| locate(&Module::projective(&alg, v))).collect();
        let injectives: Vec<Option<usize>> = (0..nv).map(|v| locate(&Module::injective(&alg, v))).collect();
        let simples: Vec<Option<usize>> = (0..nv).map(|v| locate(&Module::simple(&alg, v))).collect();
        let names = assign_names(&alg, &found, &projectives, &simples, &injectives);
        let members: Vec<Member> = found
            .into_iter()
            .zip(names)
            .map(|((m, word), name)| Member { module: m.with_name(name.clone()), name, word })
            .collect();
        let by_name = members.iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect();
        Inventory {
            alg,
            members,
            complete,
            bands_present,
            max_dim,
            by_dims,
            by_name,
            projectives,
            injectives,
            simples,
            hom: table(n),
            ext: table(n),
            syzygy: once_vec(n),
            tau: once_vec(n),
            tau_inv: once_vec(n),
            hom_tau: table(n),
            hom_tau_inv: table(n),
            trace: once_vec(n * n),
            reject: once_vec(n * n),
            contexts: Default::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn module(&self, i: usize) -> &Module {
        &self.members[i].module
    }

    pub fn name(&self, i: usize) -> &str {
        &self.members[i].name
    }

    pub fn dim(&self, i: usize) -> usize {
        self.members[i].module.total_dim()
    }

    pub fn projective(&self, v: usize) -> Option<usize> {
        self.projectives[v]
    }

    pub fn injective(&self, v: usize) -> Option<usize> {
        self.injectives[v]
    }

    pub fn simple(&self, v: usize) -> Option<usize> {
        self.simples[v]
    }

    pub fn standard(&self, kind: StandardKind, v: usize) -> Option<usize> {
        match kind {
            StandardKind::Projective => self.projectives[v],
            StandardKind::Injective => self.injectives[v],
            StandardKind::Simple => self.simples[v],
        }
    }

    pub fn is_projective(&self, i: usize) -> bool {
        self.projectives.contains(&Some(i))
    }

    pub fn is_injective(&self, i: usize) -> bool {
        self.injectives.contains(&Some(i))
    }

    /// The vertex whose projective is member `i`.
    pub fn projective_vertex(&self, i: usize) -> Option<usize> {
        self.projectives.iter().position(|&x| x == Some(i))
    }

    pub fn injective_vertex(&self, i: usize) -> Option<usize> {
        self.injectives.iter().position(|&x| x == Some(i))
    }

    /// The member isomorphic to an indecomposable module.
    pub fn identify(&self, m: &Module) -> Option<usize> {
        self.by_dims.get(&m.dims)?.iter().copied().find(|&i| self.members[i].module.is_isomorphic(m))
    }

    /// Like [`Inventory::identify`], failing with a bound error when nothing matches.
    pub fn require(&self, m: &Module, what: &str) -> Result<usize> {
        self.identify(m).ok_or_else(|| Error::InventoryTooSmall {
            bound: self.max_dim,
            what: format!("{what} (dimension vector {:?})", m.dims),
        })
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.by_name.get(name.trim()).copied().ok_or_else(|| Error::UnknownModule(name.trim().to_string()))
    }

    /// Parses a comma separated list of member names; commas inside parentheses
    /// belong to the name.
    pub fn parse_list(&self, text: &str) -> Result<Vec<usize>> {
        split_names(text).iter().map(|s| self.lookup(s)).collect()
    }

    /// A display name for any module: member names joined by `+`.
    pub fn describe(&self, m: &Module) -> String {
        if m.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = m
            .decompose()
            .iter()
            .map(|x| match self.identify(x) {
                Some(i) => self.members[i].name.clone(),
                None => format!("{}?", dims_label(&x.dims)),
            })
            .collect();
        parts.join("+")
    }

    // ------------------------------------------------------------- tables

    pub fn hom(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        *self.hom[i * n + j].get_or_init(|| self.module(i).hom_dim(self.module(j)))
    }

    fn syzygy(&self, i: usize) -> &(Module, Vec<usize>) {
        self.syzygy[i].get_or_init(|| {
            let pres = self.module(i).min_presentation();
            (pres.syzygy, pres.p0)
        })
    }

    pub fn ext(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        *self.ext[i * n + j].get_or_init(|| {
            let (syz, p0) = self.syzygy(i);
            let hom_p0: usize = p0.iter().map(|&v| self.module(j).dims[v]).sum();
            syz.hom_dim(self.module(j)) + self.hom(i, j) - hom_p0
        })
    }

    fn translate(&self, i: usize, inverse: bool) -> &Translate {
        let cell = if inverse { &self.tau_inv[i] } else { &self.tau[i] };
        cell.get_or_init(|| {
            let m = self.module(i);
            let t = if inverse { m.tau_inv() } else { m.tau() };
            let index = if t.is_zero() { None } else { self.identify(&t) };
            Translate { module: t, index }
        })
    }

    /// `τ` of member `i` as a module.
    pub fn tau_module(&self, i: usize) -> &Module {
        &self.translate(i, false).module
    }

    pub fn tau_inv_module(&self, i: usize) -> &Module {
        &self.translate(i, true).module
    }

    /// `τ` of member `i`: `Ok(None)` for zero, an error when the result lies beyond the bound.
    pub fn tau(&self, i: usize) -> Result<Option<usize>> {
        let t = self.translate(i, false);
        self.translate_result(t, i, "tau")
    }

    pub fn tau_inv(&self, i: usize) -> Result<Option<usize>> {
        let t = self.translate(i, true);
        self.translate_result(t, i, "tau inverse")
    }

    fn translate_result(&self, t: &Translate, i: usize, what: &str) -> Result<Option<usize>> {
        if t.module.is_zero() {
            return Ok(None);
        }
        t.index.map(Some).ok_or_else(|| Error::InventoryTooSmall {
            bound: self.max_dim,
            what: format!("{what} of {}", self.name(i)),
        })
    }

    /// `dim Hom(X_i, τ X_j)`.
    pub fn hom_tau(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        *self.hom_tau[i * n + j].get_or_init(|| self.module(i).hom_dim(self.tau_module(j)))
    }

    /// `dim Hom(τ⁻¹ X_j, X_i)`.
    pub fn hom_tau_inv(&self, j: usize, i: usize) -> usize {
        let n = self.len();
        *self.hom_tau_inv[j * n + i].get_or_init(|| self.tau_inv_module(j).hom_dim(self.module(i)))
    }

    /// Trace of member `s` in member `y`.
    pub fn trace(&self, s: usize, y: usize) -> &Subspace {
        let n = self.len();
        self.trace[s * n + y].get_or_init(|| self.module(y).trace_of(self.module(s)))
    }

    /// Intersection of the kernels of all maps from member `y` to member `s`.
    pub fn reject(&self, y: usize, s: usize) -> &Subspace {
        let n = self.len();
        self.reject[y * n + s].get_or_init(|| self.module(y).reject_into(self.module(s)))
    }

    /// Whether member `y` is a quotient of a sum of copies of the members in `set`.
    pub fn in_gen(&self, set: &[usize], y: usize) -> bool {
        if set.contains(&y) {
            return true;
        }
        let target = &self.module(y).dims;
        let mut acc: Option<Subspace> = None;
        for &s in set {
            if self.hom(s, y) == 0 {
                continue;
            }
            let t = self.trace(s, y);
            acc = Some(match acc {
                None => t.clone(),
                Some(a) => a.iter().zip(t).map(|(x, z)| span_sum(x, z)).collect(),
            });
        }
        match acc {
            None => target.iter().all(|&d| d == 0),
            Some(a) => a.iter().zip(target).all(|(m, &d)| m.cols() == d),
        }
    }

    /// Whether member `y` embeds in a sum of copies of the members in `set`.
    pub fn in_cogen(&self, set: &[usize], y: usize) -> bool {
        if set.contains(&y) {
            return true;
        }
        let mut acc: Option<Subspace> = None;
        for &s in set {
            if self.hom(y, s) == 0 {
                continue;
            }
            let r = self.reject(y, s);
            acc = Some(match acc {
                None => r.clone(),
                Some(a) => a.iter().zip(r).map(|(x, z)| span_intersection(x, z)).collect(),
            });
        }
        match acc {
            None => self.module(y).is_zero(),
            Some(a) => a.iter().all(|m| m.cols() == 0),
        }
    }

    pub fn is_tau_rigid_member(&self, i: usize) -> bool {
        self.hom_tau(i, i) == 0
    }
}

/// Splits on commas that are not inside parentheses.
pub fn split_names(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut cur)),
            _ => cur.push(ch),
        }
    }
    out.push(cur);
    out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

pub fn dims_label(dims: &[usize]) -> String {
    let inner: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("M({})", inner.join(","))
}

fn assign_names(
    alg: &Arc<Algebra>,
    found: &[(Module, Option<StringWord>)],
    projectives: &[Option<usize>],
    simples: &[Option<usize>],
    injectives: &[Option<usize>],
) -> Vec<String> {
    let nv = alg.num_vertices();
    let standard_name = |i: usize| -> Option<String> {
        let tables = [("P", projectives), ("S", simples), ("I", injectives)];
        for (prefix, t) in tables {
            if let Some(v) = t.iter().position(|&x| x == Some(i)) {
                return Some(format!("{prefix}{}", alg.vertex_id(v)));
            }
        }
        None
    };
    let standard_modules: Vec<(String, Module)> = ["P", "S", "I"]
        .iter()
        .flat_map(|&prefix| {
            (0..nv).map(move |v| {
                let kind = match prefix {
                    "P" => StandardKind::Projective,
                    "S" => StandardKind::Simple,
                    _ => StandardKind::Injective,
                };
                (prefix, v, kind)
            })
        })
        .map(|(prefix, v, kind)| (format!("{prefix}{}", alg.vertex_id(v)), Module::standard(alg, kind, v)))
        .collect();
    // A vertex module that is also of an earlier kind keeps the earlier name.
    let canonical = |m: &Module| -> Option<String> {
        standard_modules.iter().find(|(_, s)| s.is_isomorphic(m)).map(|(n, _)| n.clone())
    };
    let mut used: HashMap<String, usize> = HashMap::new();
    let mut counters: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut names = Vec::with_capacity(found.len());
    for (i, (m, _)) in found.iter().enumerate() {
        let mut name = standard_name(i).or_else(|| quotient_name(alg, m, &canonical));
        if let Some(n) = &name {
            if used.contains_key(n) {
                name = None;
            }
        }
        let name = name.unwrap_or_else(|| {
            let k = counters.entry(m.dims.clone()).or_insert(0);
            *k += 1;
            format!("{}#{}", dims_label(&m.dims), k)
        });
        used.insert(name.clone(), i);
        names.push(name);
    }
    names
}

/// `P<i>/<X>` when the module has simple top at `i` and its syzygy is a vertex module.
fn quotient_name(alg: &Arc<Algebra>, m: &Module, canonical: &dyn Fn(&Module) -> Option<String>) -> Option<String> {
    let (vertices, cover) = m.projective_cover();
    if vertices.len() != 1 {
        return None;
    }
    let p = Module::projective(alg, vertices[0]);
    let (k, _) = p.submodule(&cover.kernel());
    if k.is_zero() {
        return None;
    }
    let kname = canonical(&k)?;
    Some(format!("P{}/{}", alg.vertex_id(vertices[0]), kname))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn inv(text: &str, d: usize) -> Inventory {
        let a = Arc::new(parse_algebra("t", text).unwrap());
        build_inventory(&a, d, &[]).unwrap()
    }

    const EX93: &str = "vertices = 1 2 3\narrow a 1 2\narrow b 2 3\nrel a.b\n";
    const EX92: &str = "vertices = 1 2 3\narrow a 1 2\narrow b 1 2\narrow c 2 3\nrel a.c\n";

    #[test]
    fn ex93_names_and_translates() {
        let inv = inv(EX93, 10);
        assert!(inv.complete);
        let names: Vec<&str> = (0..inv.len()).map(|i| inv.name(i)).collect();
        assert_eq!(names, vec!["P3", "S2", "S1", "P2", "P1"]);
        let s2 = inv.lookup("S2").unwrap();
        assert_eq!(inv.tau(s2).unwrap(), Some(inv.lookup("P3").unwrap()));
        assert_eq!(inv.ext(inv.lookup("S1").unwrap(), s2), 1);
    }

    #[test]
    fn ex92_truncated_has_quotient_name() {
        let inv = inv(EX92, 8);
        assert!(!inv.complete);
        assert!(inv.bands_present);
        assert!(inv.lookup("P1/P3").is_ok());
        assert!(inv.lookup("I3").is_ok());
    }

    #[test]
    fn gen_and_cogen() {
        let inv = inv(EX93, 10);
        let (p2, s2, s1, p3) =
            (inv.lookup("P2").unwrap(), inv.lookup("S2").unwrap(), inv.lookup("S1").unwrap(), inv.lookup("P3").unwrap());
        assert!(inv.in_gen(&[p2], s2));
        assert!(!inv.in_gen(&[p2], s1));
        assert!(inv.in_cogen(&[p2], p3));
        assert!(!inv.in_cogen(&[p3], s2));
    }

    #[test]
    fn split_respects_parentheses() {
        assert_eq!(split_names("P3, M(1,2,0)#1 ,S2"), vec!["P3", "M(1,2,0)#1", "S2"]);
    }
}
