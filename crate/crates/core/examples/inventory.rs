//! Indecomposables of a small monomial algebra with their translates.

use std::sync::Arc;

use tauexc::builtins::builtin;
use tauexc::build_inventory;

fn main() -> tauexc::Result<()> {
    let alg = Arc::new(builtin("ex-9.3")?);
    let inv = build_inventory(&alg, 10, &[])?;
    println!("{} indecomposables, complete: {}", inv.len(), inv.complete);
    for x in 0..inv.len() {
        let tau = match inv.tau(x)? {
            Some(t) => inv.name(t).to_string(),
            None => "0".to_string(),
        };
        println!("{:<6} dims {:?}  brick {:<5}  tau {}", inv.name(x), inv.module(x).dims, inv.module(x).is_brick(), tau);
    }
    Ok(())
}
