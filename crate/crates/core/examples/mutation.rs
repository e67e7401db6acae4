//! Complete tau-exceptional sequences and a right mutation cycle.

use std::sync::Arc;

use tauexc::builtins::builtin;
use tauexc::report::root_context;
use tauexc::tauseq::{classify, enumerate_complete, psi_i, seq_names};

fn main() -> tauexc::Result<()> {
    let ctx = root_context(Arc::new(builtin("ex-9.4")?), 12)?;
    let all = enumerate_complete(&ctx)?;
    println!("{} complete sequences", all.len());

    let mut s = ctx.inv.parse_list("P3,S2,P3/S1")?;
    for _ in 0..3 {
        let c = classify(&ctx, &s, 2)?;
        let next = psi_i(&ctx, &s, 2)?;
        println!("psi_2({}) = ({})  right {}", seq_names(&ctx, &s), seq_names(&ctx, &next), c.right);
        s = next;
    }
    Ok(())
}
