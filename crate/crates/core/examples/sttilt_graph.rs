//! Support tau-tilting objects of A3 and their brick-labelled exchange graph.

use std::sync::Arc;

use tauexc::builtins::builtin;
use tauexc::report::root_context;

fn main() -> tauexc::Result<()> {
    let ctx = root_context(Arc::new(builtin("a3")?), 12)?;
    let hasse = ctx.sttilt_hasse();
    println!("{} support tau-tilting objects", hasse.vertices.len());
    for &(a, b, label) in &hasse.edges {
        let brick = label.map_or("?", |x| ctx.name(x));
        println!("{} -> {}  [{}]", hasse.vertices[a].display(&ctx.inv), hasse.vertices[b].display(&ctx.inv), brick);
    }
    Ok(())
}
