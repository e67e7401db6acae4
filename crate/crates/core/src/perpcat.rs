//! τ-perpendicular categories and the reduction bijections `E_U`, `E_U⁻¹`.

use crate::error::{Error, Result};
use crate::torsion::{Context, Ind, StableObject};

/// `J(U) = M^⊥ ∩ ⊥τ_W M ∩ P^⊥` for `U = M ⊕ P[1]` support τ-rigid in `w`.
pub fn j_of(w: &Context, u: &StableObject) -> Result<Context> {
    if !w.is_support_tau_rigid(u) {
        return Err(Error::NotTauRigid(format!("{} in {}", u.display(&w.inv), w.label())));
    }
    if u.rank() == 0 {
        return Ok(w.clone());
    }
    let mods = u.mods();
    let shifts = u.shifts();
    let members = w
        .members()
        .iter()
        .copied()
        .filter(|&x| {
            mods.iter().all(|&m| w.inv.hom(m, x) == 0 && w.hom_to_tau_vanishes(x, m))
                && shifts.iter().all(|&p| w.inv.hom(p, x) == 0)
        })
        .collect();
    Ok(w.sub(members, perp_label(w, &u.display(&w.inv))))
}

/// `J^d(V) = ⊥N ∩ (τ_W⁻¹ N)^⊥ ∩ ⊥I` for `V = N ⊕ I[-1]` support τ⁻¹-rigid in `w`.
pub fn jd_of(w: &Context, v: &StableObject) -> Result<Context> {
    if !w.is_support_tau_inv_rigid(v) {
        return Err(Error::NotTauRigid(format!("{} (dually) in {}", v.display(&w.inv), w.label())));
    }
    if v.rank() == 0 {
        return Ok(w.clone());
    }
    let mods = v.mods();
    let negs = v.neg_shifts();
    let members = w
        .members()
        .iter()
        .copied()
        .filter(|&x| {
            mods.iter().all(|&n| w.inv.hom(x, n) == 0 && w.hom_from_tau_inv_vanishes(n, x))
                && negs.iter().all(|&i| w.inv.hom(x, i) == 0)
        })
        .collect();
    Ok(w.sub(members, format!("Jd({})", v.display(&w.inv))))
}

fn perp_label(w: &Context, inner: &str) -> String {
    if w.is_root() {
        format!("J({inner})")
    } else {
        format!("J({inner}) in {}", w.label())
    }
}

/// Images under `f_M` of the Ext-projectives of `P^⊥ ∩ ⊥τM` other than summands of `M`.
pub fn rel_projectives_by_reduction(w: &Context, u: &StableObject) -> Result<Vec<usize>> {
    let mods = u.mods();
    let outer: Vec<usize> = w
        .tau_perp(&mods)
        .into_iter()
        .filter(|&x| u.shifts().iter().all(|&p| w.inv.hom(p, x) == 0))
        .collect();
    let mut out = Vec::new();
    for x in w.ext_projectives(&outer) {
        if mods.contains(&x) {
            continue;
        }
        let q = w.tf_quotient(&mods, x);
        out.push(w.identify(&q, &format!("f_M of {}", w.name(x)))?);
    }
    out.sort();
    Ok(out)
}

/// `τ̄` on an indecomposable support τ-rigid object; the result is support τ⁻¹-rigid.
pub fn bar_tau(w: &Context, x: Ind) -> Result<Ind> {
    match x {
        Ind::Mod(m) => match w.rel_tau(m)? {
            Some(t) => Ok(Ind::Mod(t)),
            None => Ok(Ind::NegShift(w.rel_nu(m)?)),
        },
        Ind::Shift(p) => Ok(Ind::Mod(w.rel_nu(p)?)),
        Ind::NegShift(_) => Err(Error::Incompatible("tau-bar expects a module or a shifted projective".into())),
    }
}

/// `τ̄⁻¹`, inverse to [`bar_tau`].
pub fn bar_tau_inv(w: &Context, x: Ind) -> Result<Ind> {
    match x {
        Ind::Mod(n) => match w.rel_tau_inv(n)? {
            Some(t) => Ok(Ind::Mod(t)),
            None => Ok(Ind::Shift(w.rel_nu_inv(n)?)),
        },
        Ind::NegShift(i) => Ok(Ind::Mod(w.rel_nu_inv(i)?)),
        Ind::Shift(_) => Err(Error::Incompatible("inverse tau-bar expects a module or a shifted injective".into())),
    }
}

pub fn bar_tau_object(w: &Context, u: &StableObject) -> Result<StableObject> {
    Ok(StableObject::new(u.items.iter().map(|&x| bar_tau(w, x)).collect::<Result<_>>()?))
}

pub fn bar_tau_inv_object(w: &Context, v: &StableObject) -> Result<StableObject> {
    Ok(StableObject::new(v.items.iter().map(|&x| bar_tau_inv(w, x)).collect::<Result<_>>()?))
}

fn check_pair(w: &Context, u: &StableObject, v: Ind) -> Result<()> {
    if u.contains(v) {
        return Err(Error::Incompatible(format!("{} is already a summand of {}", v.display(&w.inv), u.display(&w.inv))));
    }
    if !w.is_support_tau_rigid(&u.with(v)) {
        return Err(Error::Incompatible(format!(
            "{} and {} are not compatible in {}",
            u.display(&w.inv),
            v.display(&w.inv),
            w.label()
        )));
    }
    Ok(())
}

/// `E_U(V)`: the object of `C(J(U))` corresponding to a complement `V` of `U`.
pub fn e_map(w: &Context, u: &StableObject, v: Ind) -> Result<Ind> {
    check_pair(w, u, v)?;
    let mods = u.mods();
    if let Ind::Mod(x) = v {
        if !w.gen_contains(&mods, x) {
            let q = w.tf_quotient(&mods, x);
            return Ok(Ind::Mod(w.identify(&q, &format!("f_M of {}", w.name(x)))?));
        }
    }
    let ju = j_of(w, u)?;
    let juv = j_of(w, &u.with(v))?;
    Ok(Ind::Shift(ps_of_intersection(&ju, &juv)?))
}

/// The module formula `P_s(J(U) ∩ ⊥J(U ⊕ V))`, valid for every complement.
pub fn e_map_by_perp(w: &Context, u: &StableObject, v: Ind) -> Result<usize> {
    check_pair(w, u, v)?;
    let ju = j_of(w, u)?;
    let juv = j_of(w, &u.with(v))?;
    ps_of_intersection(&ju, &juv)
}

fn ps_of_intersection(ju: &Context, juv: &Context) -> Result<usize> {
    let t = ju.left_perp(juv.members());
    let (ps, _) = ju.split_projectives(&t);
    match ps.as_slice() {
        [q] => Ok(*q),
        _ => Err(Error::InventoryTooSmall {
            bound: ju.bound(),
            what: format!("split projectives of {} relative to {} (found {})", ju.label(), juv.label(), ps.len()),
        }),
    }
}

/// `E_U(V)` computed one summand of `U` at a time, shifted projectives first.
pub fn e_map_factored(w: &Context, u: &StableObject, v: Ind) -> Result<Ind> {
    check_pair(w, u, v)?;
    let mut order: Vec<Ind> = u.shifts().into_iter().map(Ind::Shift).collect();
    order.extend(u.mods().into_iter().map(Ind::Mod));
    let Some((&first, rest)) = order.split_first() else {
        return Ok(v);
    };
    let head = StableObject::one(first);
    let inner = j_of(w, &head)?;
    let rest_image = rest.iter().map(|&r| e_map(w, &head, r)).collect::<Result<Vec<_>>>()?;
    let v_image = e_map(w, &head, v)?;
    e_map_factored(&inner, &StableObject::new(rest_image), v_image)
}

/// `E_U⁻¹(Y)` by the closed formulas, falling back to search when the
/// context is bound-relative and the formula does not round-trip.
pub fn e_inv(w: &Context, u: &StableObject, y: Ind) -> Result<Ind> {
    let formula = e_inv_formula(w, u, y);
    if w.exact() {
        return formula;
    }
    match formula {
        Ok(x) if e_map(w, u, x).ok() == Some(y) => Ok(x),
        _ => e_inv_search(w, u, y),
    }
}

pub fn e_inv_formula(w: &Context, u: &StableObject, y: Ind) -> Result<Ind> {
    let ju = j_of(w, u)?;
    let mods = u.mods();
    match y {
        Ind::Mod(yy) => {
            ju.require_member(yy)?;
            let mut gens = mods.clone();
            gens.push(yy);
            let t = w.filt_gen(&gens);
            let (ps, _) = w.split_projectives(&t);
            let found: Vec<usize> = ps.into_iter().filter(|x| !mods.contains(x)).collect();
            match found.as_slice() {
                [x] => Ok(Ind::Mod(*x)),
                _ => Err(Error::InventoryTooSmall {
                    bound: w.bound(),
                    what: format!("inverse reduction of {} (found {} candidates)", w.name(yy), found.len()),
                }),
            }
        }
        Ind::Shift(q) => {
            if !ju.rel_projectives().contains(&q) {
                return Err(Error::Incompatible(format!("{} is not projective in {}", w.name(q), ju.label())));
            }
            let mut n = Vec::new();
            for &m in &mods {
                if let Some(t) = w.rel_tau(m)? {
                    n.push(t);
                }
            }
            for &p in &u.shifts() {
                n.push(w.rel_nu(p)?);
            }
            let mut gens = n.clone();
            gens.push(ju.rel_nu(q)?);
            let f = w.filt_cogen(&gens);
            let (is, _) = w.split_injectives(&f);
            let found: Vec<usize> = is.into_iter().filter(|x| !n.contains(x)).collect();
            match found.as_slice() {
                [z] => bar_tau_inv(w, Ind::Mod(*z)),
                _ => Err(Error::InventoryTooSmall {
                    bound: w.bound(),
                    what: format!("inverse reduction of {}[1] (found {} candidates)", w.name(q), found.len()),
                }),
            }
        }
        Ind::NegShift(_) => Err(Error::Incompatible("expected a support tau-rigid object".into())),
    }
}

/// Complements `V` of `U` in the context.
pub fn complements(w: &Context, u: &StableObject) -> Vec<Ind> {
    let mut cands: Vec<Ind> = w.members().iter().map(|&x| Ind::Mod(x)).collect();
    cands.extend(w.rel_projectives().iter().map(|&p| Ind::Shift(p)));
    cands.into_iter().filter(|&c| !u.contains(c) && w.is_support_tau_rigid(&u.with(c))).collect()
}

/// `E_U⁻¹(Y)` as the unique complement mapped to `Y`.
pub fn e_inv_search(w: &Context, u: &StableObject, y: Ind) -> Result<Ind> {
    let found: Vec<Ind> = complements(w, u).into_iter().filter(|&c| e_map(w, u, c).ok() == Some(y)).collect();
    match found.as_slice() {
        [x] => Ok(*x),
        [] => Err(Error::InventoryTooSmall {
            bound: w.bound(),
            what: format!("preimage of {} under E_{}", y.display(&w.inv), u.display(&w.inv)),
        }),
        _ => Err(Error::Incompatible(format!("{} has several preimages", y.display(&w.inv)))),
    }
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

    fn m(c: &Context, n: &str) -> usize {
        c.inv.lookup(n).unwrap()
    }

    fn obj(c: &Context, names: &[&str]) -> StableObject {
        StableObject::new(
            names
                .iter()
                .map(|n| match n.strip_suffix("[1]") {
                    Some(base) => Ind::Shift(m(c, base)),
                    None => Ind::Mod(m(c, n)),
                })
                .collect(),
        )
    }

    #[test]
    fn j_of_zero_is_everything() {
        let c = ctx("ex-9.3", 10);
        assert!(j_of(&c, &StableObject::zero()).unwrap().same_as(&c));
    }

    #[test]
    fn ex92_perp_of_simple_pair() {
        let c = ctx("ex-9.2", 8);
        let j2 = j_of(&c, &obj(&c, &["S2"])).unwrap();
        let j12 = j_of(&j2, &obj(&c, &["S1"])).unwrap();
        assert_eq!(j12.members(), &[m(&c, "I3")]);
    }

    #[test]
    fn ex92_reduction_of_simple() {
        let c = ctx("ex-9.2", 8);
        let u = obj(&c, &["S2"]);
        assert_eq!(e_map(&c, &u, Ind::Mod(m(&c, "P1/P3"))).unwrap(), Ind::Mod(m(&c, "S1")));
        assert_eq!(e_inv(&c, &u, Ind::Mod(m(&c, "S1"))).unwrap(), Ind::Mod(m(&c, "P1/P3")));
        let j = j_of(&c, &obj(&c, &["P1/P3"])).unwrap();
        assert!(j.rel_projectives().contains(&m(&c, "S2")));
        let mut simples = j.rel_simples().to_vec();
        simples.sort();
        let mut want = vec![m(&c, "S2"), m(&c, "I3")];
        want.sort();
        assert_eq!(simples, want);
    }

    #[test]
    fn a2_shifted_reduction() {
        let c = ctx("a2", 6);
        let u = obj(&c, &["S1"]);
        let p1 = m(&c, "P1");
        let p2 = m(&c, "P2");
        assert_eq!(e_map(&c, &u, Ind::Shift(p2)).unwrap(), Ind::Shift(p1));
        assert_eq!(e_inv(&c, &u, Ind::Shift(p1)).unwrap(), Ind::Shift(p2));
        assert_eq!(e_inv_search(&c, &u, Ind::Shift(p1)).unwrap(), Ind::Shift(p2));
    }

    #[test]
    fn shifted_projective_reduction_is_identity() {
        let c = ctx("ex-9.3", 10);
        let u = obj(&c, &["P2[1]"]);
        let j = j_of(&c, &u).unwrap();
        for v in complements(&c, &u) {
            if let Ind::Mod(x) = v {
                assert!(j.contains(x));
                assert_eq!(e_map(&c, &u, v).unwrap(), v);
            }
        }
    }

    #[test]
    fn ex94_not_projective_in_perp() {
        let c = ctx("ex-9.4", 10);
        let j = j_of(&c, &obj(&c, &["S3"])).unwrap();
        assert!(!j.rel_projectives().contains(&m(&c, "P3/S1")));
    }

    #[test]
    fn bar_tau_round_trip() {
        let c = ctx("ex-9.3", 10);
        for &x in c.members() {
            for v in [Ind::Mod(x), Ind::Shift(x)] {
                if let Ind::Shift(p) = v {
                    if !c.rel_projectives().contains(&p) {
                        continue;
                    }
                }
                let t = bar_tau(&c, v).unwrap();
                assert_eq!(bar_tau_inv(&c, t).unwrap(), v);
            }
        }
        let p1 = m(&c, "P1");
        assert_eq!(bar_tau(&c, Ind::Mod(p1)).unwrap(), Ind::NegShift(c.inv.injective(0).unwrap()));
    }
}
