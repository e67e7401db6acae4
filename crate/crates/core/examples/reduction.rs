//! Perpendicular categories and the reduction bijection over a Kronecker extension.

use std::sync::Arc;

use tauexc::builtins::builtin;
use tauexc::perpcat::{complements, e_inv, e_map, j_of};
use tauexc::report::root_context;
use tauexc::torsion::{Ind, StableObject};

fn main() -> tauexc::Result<()> {
    let ctx = root_context(Arc::new(builtin("ex-9.2")?), 8)?;
    let u = StableObject::one(Ind::Mod(ctx.inv.lookup("S2")?));
    let j = j_of(&ctx, &u)?;
    println!("J(S2) contains {}", ctx.names(j.members()));
    for v in complements(&ctx, &u) {
        let y = e_map(&ctx, &u, v)?;
        let back = e_inv(&ctx, &u, y)?;
        println!("E_S2({}) = {}  (inverse gives {})", v.display(&ctx.inv), y.display(&ctx.inv), back.display(&ctx.inv));
    }
    Ok(())
}
