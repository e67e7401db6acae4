//! Check reports and the built-in example reproductions.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::builtins::builtin;
use crate::error::{Error, Result};
use crate::inventory::build_inventory;
use crate::perpcat::{e_inv, j_of};
use crate::tauseq::{
    classical_braid, classify, enumerate_complete, hasse_tex, is_complete, orbit, phi_i, psi_i, rank2, seq_names,
    Mutability, Regularity, Seq,
};
use crate::torsion::{Context, Ind, StableObject};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub bound: String,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, bound: impl Into<String>) -> RunReport {
        RunReport { command: command.into(), bound: bound.into(), checks: Vec::new() }
    }

    /// Records a check; bound-related errors become `unknown`, others `fail`.
    pub fn record(&mut self, name: &str, outcome: Result<(bool, String)>) {
        let (status, detail) = match outcome {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e @ (Error::InventoryTooSmall { .. } | Error::UnknownAtBound { .. })) => (Status::Unknown, e.to_string()),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.checks.push(Check { name: name.to_string(), status, detail });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        let _ = writeln!(out, "# {}", self.bound);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(out, "{:<7} {:<width$}  {}", c.status.as_str(), c.name, c.detail);
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let _ = writeln!(out, "{passed}/{} checks passed", self.checks.len());
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "bound": self.bound,
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "status": c.status.as_str(),
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Describes how exact answers over a context are.
pub fn bound_marker(ctx: &Context) -> String {
    let inv = &ctx.inv;
    if inv.complete {
        format!("complete inventory ({} indecomposables)", inv.len())
    } else if inv.bands_present {
        format!("bound-relative: dimension <= {}, bands present, {} string modules", inv.max_dim, inv.len())
    } else {
        format!("bound-relative: dimension <= {}, {} string modules", inv.max_dim, inv.len())
    }
}

pub const EXAMPLES: &[(&str, &str, usize)] = &[
    ("ex-9.1", "two-cycle algebra: two mutation components", 10),
    ("ex-9.2", "left immutable pair over a Kronecker extension", 12),
    ("ex-9.3", "representation-finite algebra where braid relations fail", 10),
    ("ex-9.4", "right irregular mutation over a doubled A3", 10),
    ("ex-a2-hereditary", "left mutation agrees with the braid action on A2", 6),
    ("ex-a3-hereditary", "left mutation agrees with the braid action on A3", 8),
];

pub fn example_names() -> Vec<&'static str> {
    EXAMPLES.iter().map(|e| e.0).collect()
}

pub fn root_context(alg: Arc<Algebra>, max_dim: usize) -> Result<Context> {
    Ok(Context::root(Arc::new(build_inventory(&alg, max_dim, &[])?)))
}

fn ids(ctx: &Context, names: &[&str]) -> Result<Seq> {
    names.iter().map(|n| ctx.inv.lookup(n)).collect()
}

/// Runs the full check list of a built-in example.
pub fn reproduce_example(name: &str, max_dim: Option<usize>, field_char: Option<u32>) -> Result<RunReport> {
    let Some(&(_, _, default_dim)) = EXAMPLES.iter().find(|e| e.0 == name) else {
        return Err(Error::Unsupported(format!("no example \"{name}\"; known: {}", example_names().join(", "))));
    };
    let d = max_dim.unwrap_or(default_dim);
    let load = |alg_name: &str| -> Result<Context> {
        let mut alg = builtin(alg_name)?;
        if let Some(p) = field_char {
            alg = alg.with_char(p)?;
        }
        root_context(Arc::new(alg), d)
    };
    match name {
        "ex-9.1" => Ok(ex91(&load("ex-9.1")?)),
        "ex-9.2" => Ok(ex92(&load("ex-9.2")?)),
        "ex-9.3" => Ok(ex93(&load("ex-9.3")?)),
        "ex-9.4" => Ok(ex94(&load("ex-9.4")?)),
        "ex-a2-hereditary" => Ok(hereditary(&load("a2")?, name)),
        _ => Ok(hereditary(&load("a3")?, name)),
    }
}

fn all_tau_rigid_bricks(ctx: &Context, expected: usize) -> Result<(bool, String)> {
    let n = ctx.inv.len();
    let rigid = ctx.members().iter().all(|&x| ctx.is_tau_rigid(&[x]) && ctx.inv.module(x).is_brick());
    Ok((ctx.inv.complete && n == expected && rigid, format!("{n} indecomposables, all tau-rigid bricks: {rigid}")))
}

fn ex91(ctx: &Context) -> RunReport {
    let mut r = RunReport::new("example ex-9.1", bound_marker(ctx));
    r.record("serre generators are simple", (|| {
        let s = [ctx.serre_generator(0)?, ctx.serre_generator(1)?];
        Ok((s == [ctx.inv.lookup("S1")?, ctx.inv.lookup("S2")?], ctx.names(&s)))
    })());
    r.record("phi chain from (S1,P2)", (|| {
        let alg = &ctx.inv.alg;
        let right: Vec<usize> = ["b1", "b2"].iter().filter_map(|a| alg.quiver.arrow_index(a)).collect();
        let mut cur = ids(ctx, &["S1", "P2"])?;
        let mut steps = Vec::new();
        let mut ok = true;
        for k in 1..=4usize {
            cur = phi_i(ctx, &cur, 1)?;
            steps.push(format!("({})", seq_names(ctx, &cur)));
            let m = ctx.inv.module(cur[0]);
            ok &= m.dims == vec![k + 1, k] && right.iter().all(|&a| m.maps[a].is_zero());
            ok &= if k == 1 { cur[1] == ctx.inv.lookup("S1")? } else { ctx.inv.module(cur[1]).dims == vec![k, k - 1] };
        }
        Ok((ok, steps.join(" -> ")))
    })());
    r.record("two components in both rank-two graphs", (|| {
        let rep = rank2(ctx)?;
        Ok((
            rep.sttilt_components == 2 && rep.tex_components == 2,
            format!(
                "support tau-tilting: {} components on {} vertices; pairs: {} components on {} vertices",
                rep.sttilt_components,
                rep.hasse.vertices.len(),
                rep.tex_components,
                rep.tex.vertices.len()
            ),
        ))
    })());
    r
}

fn ex92(ctx: &Context) -> RunReport {
    let mut r = RunReport::new("example ex-9.2", bound_marker(ctx));
    r.record("(I3,S1,S2) is complete", (|| {
        let s = ids(ctx, &["I3", "S1", "S2"])?;
        Ok((is_complete(ctx, &s), seq_names(ctx, &s)))
    })());
    r.record("J(S1,S2) = add I3", (|| {
        let s2 = ctx.inv.lookup("S2")?;
        let s1 = ctx.inv.lookup("S1")?;
        let j2 = j_of(ctx, &StableObject::one(Ind::Mod(s2)))?;
        let j = j_of(&j2, &StableObject::one(Ind::Mod(s1)))?;
        Ok((j.members() == [ctx.inv.lookup("I3")?], ctx.names(j.members())))
    })());
    r.record("split projectives of Filt(S1,S2)", (|| {
        let t = ctx.filt_gen(&ids(ctx, &["S1", "S2"])?);
        let (ps, _) = ctx.split_projectives(&t);
        let mut want = ids(ctx, &["S2", "P1/P3"])?;
        want.sort();
        Ok((ps == want, ctx.names(&ps)))
    })());
    r.record("inverse reduction of S1 by S2 is P1/P3", (|| {
        let x = e_inv(ctx, &StableObject::one(Ind::Mod(ctx.inv.lookup("S2")?)), Ind::Mod(ctx.inv.lookup("S1")?))?;
        Ok((x == Ind::Mod(ctx.inv.lookup("P1/P3")?), x.display(&ctx.inv)))
    })());
    r.record("(S1,S2) left immutable", (|| {
        let c = classify(ctx, &ids(ctx, &["I3", "S1", "S2"])?, 2)?;
        let ok = c.left == Regularity::Irregular && matches!(c.left_mutable, Mutability::No(_)) && c.right_mutable.is_yes();
        Ok((ok, format!("left {} (mutable: {}), right {} (mutable: {})", c.left, c.left_mutable, c.right, c.right_mutable)))
    })());
    r.record("psi orbit follows Kronecker preprojectives", (|| {
        let mut cur = ids(ctx, &["I3", "S1", "S2"])?;
        let mut steps = Vec::new();
        let mut ok = true;
        for k in 1..=3usize {
            cur = psi_i(ctx, &cur, 2)?;
            steps.push(format!("({})", seq_names(ctx, &cur[1..])));
            let dims = |x: usize| ctx.inv.module(x).dims.clone();
            ok &= dims(cur[2]) == vec![k, k + 1, 0];
            ok &= if k == 1 { cur[1] == ctx.inv.lookup("S2")? } else { dims(cur[1]) == vec![k - 1, k, 0] };
        }
        Ok((ok, steps.join(" -> ")))
    })());
    r
}

/// Complete sequences of the representation-finite three-vertex example.
pub const EX93_SEQUENCES: [[&str; 3]; 12] = [
    ["S2", "P3", "P1"],
    ["P3", "P1", "S1"],
    ["P3", "P2", "P1"],
    ["P2", "S2", "P1"],
    ["S2", "P1", "P3"],
    ["P1", "P3", "S1"],
    ["P3", "S1", "P2"],
    ["P2", "S1", "S2"],
    ["P1", "S1", "P3"],
    ["S1", "P3", "P2"],
    ["S1", "P2", "S2"],
    ["S1", "S2", "P3"],
];

fn ex93(ctx: &Context) -> RunReport {
    let mut r = RunReport::new("example ex-9.3", bound_marker(ctx));
    r.record("indecomposables", all_tau_rigid_bricks(ctx, 5));
    r.record("twelve complete sequences", (|| {
        let got: BTreeSet<Seq> = enumerate_complete(ctx)?.into_iter().collect();
        let want: BTreeSet<Seq> = EX93_SEQUENCES.iter().map(|s| ids(ctx, s)).collect::<Result<_>>()?;
        Ok((got == want, format!("{} sequences", got.len())))
    })());
    r.record("braid relation fails", (|| {
        let s = ids(ctx, &["S1", "S2", "P3"])?;
        let a = phi_i(ctx, &phi_i(ctx, &phi_i(ctx, &s, 1)?, 2)?, 1)?;
        let b = phi_i(ctx, &phi_i(ctx, &phi_i(ctx, &s, 2)?, 1)?, 2)?;
        let ok = a == ids(ctx, &["P3", "P1", "S1"])? && b == ids(ctx, &["P2", "S2", "P1"])?;
        Ok((ok, format!("phi1 phi2 phi1 = ({}), phi2 phi1 phi2 = ({})", seq_names(ctx, &a), seq_names(ctx, &b))))
    })());
    r.record("every pair left and right regular", (|| {
        let mut bad = 0;
        for s in enumerate_complete(ctx)? {
            for i in 1..s.len() {
                let c = classify(ctx, &s, i)?;
                if c.left != Regularity::Regular || c.right != Regularity::Regular {
                    bad += 1;
                }
            }
        }
        Ok((bad == 0, format!("{bad} irregular pairs")))
    })());
    r
}

fn ex94(ctx: &Context) -> RunReport {
    let mut r = RunReport::new("example ex-9.4", bound_marker(ctx));
    r.record("indecomposables", all_tau_rigid_bricks(ctx, 11));
    r.record("psi_2 three-cycle of (P3,-,-)", (|| {
        let p3 = ctx.inv.lookup("P3")?;
        let with_p3: Vec<Seq> = enumerate_complete(ctx)?.into_iter().filter(|s| s[0] == p3).collect();
        let cycle = [
            ids(ctx, &["P3", "S2", "P3/S1"])?,
            ids(ctx, &["P3", "P3/S1", "S3"])?,
            ids(ctx, &["P3", "S3", "P2/S1"])?,
        ];
        let mut ok = with_p3.len() == 3;
        for k in 0..3 {
            ok &= psi_i(ctx, &cycle[k], 2)? == cycle[(k + 1) % 3];
        }
        Ok((ok, format!("{} sequences start with P3", with_p3.len())))
    })());
    r.record("(P3,P3/S1,S3) right 2-irregular", (|| {
        let c = classify(ctx, &ids(ctx, &["P3", "P3/S1", "S3"])?, 2)?;
        Ok((c.right == Regularity::Irregular, format!("right {}", c.right)))
    })());
    r.record("psi_2 of (P3,P3/S1,S3)", (|| {
        let got = psi_i(ctx, &ids(ctx, &["P3", "P3/S1", "S3"])?, 2)?;
        Ok((got == ids(ctx, &["P3", "S3", "P2/S1"])?, seq_names(ctx, &got)))
    })());
    r
}

fn hereditary(ctx: &Context, name: &str) -> RunReport {
    let mut r = RunReport::new(format!("example {name}"), bound_marker(ctx));
    r.record("left mutation equals the braid move", (|| {
        let all = enumerate_complete(ctx)?;
        let mut agree = 0;
        let mut total = 0;
        for s in &all {
            for i in 1..s.len() {
                total += 1;
                if phi_i(ctx, s, i)? == classical_braid(ctx, s, i)? {
                    agree += 1;
                }
            }
        }
        Ok((agree == total, format!("{agree}/{total} moves agree on {} sequences", all.len())))
    })());
    if ctx.rank() == 3 {
        r.record("braid relation holds", (|| {
            let all = enumerate_complete(ctx)?;
            let mut holds = 0;
            for s in &all {
                let a = phi_i(ctx, &phi_i(ctx, &phi_i(ctx, s, 1)?, 2)?, 1)?;
                let b = phi_i(ctx, &phi_i(ctx, &phi_i(ctx, s, 2)?, 1)?, 2)?;
                holds += usize::from(a == b);
            }
            Ok((holds == all.len(), format!("{holds}/{} sequences", all.len())))
        })());
    }
    r.record("mutation graph is one orbit", (|| {
        let g = hasse_tex(ctx)?;
        let o = orbit(ctx, &g.vertices[0], g.vertices.len());
        Ok((g.components() == 1 && o.vertices.len() == g.vertices.len(), format!("{} sequences", g.vertices.len())))
    })());
    r
}
