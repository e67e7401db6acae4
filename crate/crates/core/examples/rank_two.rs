//! Both exchange graphs of a rank-two Nakayama algebra and the map between them.

use std::sync::Arc;

use tauexc::parse_algebra;
use tauexc::report::root_context;
use tauexc::tauseq::{brick_pair_check, rank2, seq_names};

const NAKAYAMA: &str = "vertices = 1 2\narrow a 1 2\narrow b 2 1\nrel a.b.a\nrel b.a.b\n";

fn main() -> tauexc::Result<()> {
    let ctx = root_context(Arc::new(parse_algebra("nakayama", NAKAYAMA)?), 12)?;
    let rep = rank2(&ctx)?;
    println!("{} support tau-tilting objects, {} complete pairs", rep.hasse.vertices.len(), rep.tex.vertices.len());
    for (k, pair) in rep.tex.vertices.iter().enumerate() {
        let image = rep.rho[k].map_or("-".to_string(), |v| rep.hasse.vertices[v].display(&ctx.inv));
        println!("({}) -> {}", seq_names(&ctx, pair), image);
    }
    println!("rho is an isomorphism onto Q: {}", rep.rho_is_isomorphism());
    println!("brick label failures: {}", brick_pair_check(&ctx, &rep)?.len());
    Ok(())
}
