//! Built-in algebras available by name on the command line.

use crate::algebra::{parse_algebra, Algebra};
use crate::error::{Error, Result};

pub const BUILTINS: &[(&str, &str)] = &[
    (
        "ex-9.1",
        "# two vertices, two arrows each way, all 2-cycles zero\n\
         vertices = 1 2\n\
         arrow a1 1 2\narrow a2 1 2\narrow b1 2 1\narrow b2 2 1\n\
         rel a1.b1\nrel a1.b2\nrel a2.b1\nrel a2.b2\n\
         rel b1.a1\nrel b1.a2\nrel b2.a1\nrel b2.a2\n",
    ),
    (
        "ex-9.2",
        "vertices = 1 2 3\narrow a 1 2\narrow b 1 2\narrow c 2 3\nrel a.c\n",
    ),
    ("ex-9.3", "vertices = 1 2 3\narrow a 1 2\narrow b 2 3\nrel a.b\n"),
    (
        "ex-9.4",
        "# 1 <-> 2 <-> 3 with every 2-cycle zero\n\
         vertices = 1 2 3\n\
         arrow a 1 2\narrow b 2 3\narrow c 3 2\narrow d 2 1\n\
         rel a.d\nrel d.a\nrel b.c\nrel c.b\n",
    ),
    ("a2", "vertices = 1 2\narrow a 1 2\n"),
    ("a3", "vertices = 1 2 3\narrow a 1 2\narrow b 2 3\n"),
    ("kronecker", "vertices = 1 2\narrow a 1 2\narrow b 1 2\n"),
];

pub fn builtin_names() -> Vec<&'static str> {
    BUILTINS.iter().map(|(n, _)| *n).collect()
}

pub fn builtin_source(name: &str) -> Option<&'static str> {
    BUILTINS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn builtin(name: &str) -> Result<Algebra> {
    let src = builtin_source(name).ok_or_else(|| Error::Unsupported(format!("no built-in algebra \"{name}\"")))?;
    parse_algebra(name, src)
}

/// A built-in name, or else a path to an algebra file.
pub fn load_algebra(arg: &str) -> Result<Algebra> {
    if let Some(src) = builtin_source(arg) {
        return parse_algebra(arg, src);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Syntax { line: 0, col: 0, msg: format!("cannot read algebra \"{arg}\": {e}") })?;
    let name = std::path::Path::new(arg).file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
    parse_algebra(name, &text)
}
