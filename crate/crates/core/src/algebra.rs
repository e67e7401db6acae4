//! Finite-dimensional monomial quiver algebras over a prime field.
//!
//! Paths compose left to right: `a.b` traverses `a` and then `b`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::is_prime;

pub const DEFAULT_CHAR: u32 = 101;
pub const DEFAULT_PATH_BUDGET: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    /// Index of the source vertex.
    pub src: usize,
    /// Index of the target vertex.
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    /// Declared vertex ids, in declaration order.
    pub vertices: Vec<u32>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<u32>, arrows: Vec<(String, u32, u32)>) -> Result<Quiver> {
        let mut seen = Vec::new();
        for &v in &vertices {
            if seen.contains(&v) {
                return Err(Error::Duplicate(format!("vertex {v}")));
            }
            seen.push(v);
        }
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            if out.iter().any(|a: &Arrow| a.name == name) {
                return Err(Error::Duplicate(format!("arrow {name}")));
            }
            let src = vertices.iter().position(|&v| v == s).ok_or(Error::UnknownVertex(s))?;
            let tgt = vertices.iter().position(|&v| v == t).ok_or(Error::UnknownVertex(t))?;
            out.push(Arrow { name, src, tgt });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, id: u32) -> Option<usize> {
        self.vertices.iter().position(|&v| v == id)
    }
}

/// A relation-free path. Trivial paths have no arrows and `src == tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiserialClass {
    Gentle,
    SpecialBiserial,
    Other,
}

#[derive(Debug)]
pub struct Algebra {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Vec<usize>>,
    pub p: u32,
    /// Seed mixed into every randomized routine.
    pub seed: u64,
    paths: Vec<Path>,
    by_pair: Vec<Vec<Vec<usize>>>,
    index: HashMap<(usize, Vec<usize>), usize>,
    opposite: OnceLock<Arc<Algebra>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations && self.p == other.p
    }
}

/// Diagnostics of a successful finiteness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDiagnostics {
    pub dimension: usize,
    pub max_path_length: usize,
}

fn contains_relation(path: &[usize], relations: &[Vec<usize>]) -> bool {
    relations.iter().any(|r| r.len() <= path.len() && path.ends_with(r))
}

fn enumerate_paths(q: &Quiver, relations: &[Vec<usize>], budget: usize) -> Result<Vec<Path>> {
    let mut out: Vec<Path> = (0..q.num_vertices())
        .map(|v| Path { src: v, tgt: v, arrows: vec![] })
        .collect();
    let mut frontier: Vec<Path> = q
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| Path { src: a.src, tgt: a.tgt, arrows: vec![i] })
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for path in frontier {
            for (i, a) in q.arrows.iter().enumerate() {
                if a.src != path.tgt {
                    continue;
                }
                let mut arrows = path.arrows.clone();
                arrows.push(i);
                if !contains_relation(&arrows, relations) {
                    next.push(Path { src: path.src, tgt: a.tgt, arrows });
                }
            }
            out.push(path);
            if out.len() > budget {
                return Err(Error::InfiniteDimensional(budget));
            }
        }
        frontier = next;
    }
    Ok(out)
}

impl Algebra {
    pub fn new(name: &str, quiver: Quiver, relations: Vec<Vec<usize>>, p: u32) -> Result<Algebra> {
        Self::with_budget(name, quiver, relations, p, DEFAULT_PATH_BUDGET)
    }

    pub fn with_budget(
        name: &str,
        quiver: Quiver,
        relations: Vec<Vec<usize>>,
        p: u32,
        budget: usize,
    ) -> Result<Algebra> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        for r in &relations {
            let shown = r.iter().map(|&a| quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join(".");
            if r.len() < 2 {
                return Err(Error::ShortRelation(shown));
            }
            if r.windows(2).any(|w| quiver.arrows[w[0]].tgt != quiver.arrows[w[1]].src) {
                return Err(Error::NotComposable(shown));
            }
        }
        let paths = enumerate_paths(&quiver, &relations, budget)?;
        let n = quiver.num_vertices();
        let mut by_pair = vec![vec![Vec::new(); n]; n];
        let mut index = HashMap::new();
        for (i, path) in paths.iter().enumerate() {
            by_pair[path.src][path.tgt].push(i);
            index.insert((path.src, path.arrows.clone()), i);
        }
        Ok(Algebra {
            name: name.to_string(),
            quiver,
            relations,
            p,
            seed: 0,
            paths,
            by_pair,
            index,
            opposite: OnceLock::new(),
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Algebra {
        self.seed = seed;
        self
    }

    /// Same algebra over another prime field.
    pub fn with_char(&self, p: u32) -> Result<Algebra> {
        let a = Algebra::new(&self.name, self.quiver.clone(), self.relations.clone(), p)?;
        Ok(a.with_seed(self.seed))
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.quiver.arrows[a]
    }

    pub fn vertex_id(&self, v: usize) -> u32 {
        self.quiver.vertices[v]
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    /// Indices of the basis paths from vertex `i` to vertex `j`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.by_pair[i][j]
    }

    pub fn trivial_path(&self, v: usize) -> usize {
        self.index[&(v, vec![])]
    }

    /// Index of a path given by its arrows, or `None` if it is zero in the algebra.
    pub fn find_path(&self, src: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(src, arrows.to_vec())).copied()
    }

    /// The product `p.q` as a basis path, or `None` when it vanishes.
    pub fn concat(&self, p: usize, q: usize) -> Option<usize> {
        let (a, b) = (&self.paths[p], &self.paths[q]);
        if a.tgt != b.src {
            return None;
        }
        let mut arrows = a.arrows.clone();
        arrows.extend_from_slice(&b.arrows);
        self.find_path(a.src, &arrows)
    }

    pub fn path_name(&self, i: usize) -> String {
        let p = &self.paths[i];
        if p.arrows.is_empty() {
            format!("e{}", self.vertex_id(p.src))
        } else {
            p.arrows.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }

    pub fn max_path_length(&self) -> usize {
        self.paths.iter().map(|p| p.arrows.len()).max().unwrap_or(0)
    }

    /// The opposite algebra: arrows reversed, relations read backwards.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let q = Quiver {
                    vertices: self.quiver.vertices.clone(),
                    arrows: self
                        .quiver
                        .arrows
                        .iter()
                        .map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src })
                        .collect(),
                };
                let rels = self.relations.iter().map(|r| r.iter().rev().copied().collect()).collect();
                let op = Algebra::new(&format!("{}^op", self.name), q, rels, self.p)
                    .expect("opposite of a valid algebra is valid");
                Arc::new(op.with_seed(self.seed))
            })
            .clone()
    }

    pub fn is_hereditary(&self) -> bool {
        self.relations.is_empty()
    }

    fn is_relation(&self, a: usize, b: usize) -> bool {
        self.relations.iter().any(|r| r.len() == 2 && r[0] == a && r[1] == b)
    }

    pub fn classify_biserial(&self) -> BiserialClass {
        let q = &self.quiver;
        for v in 0..q.num_vertices() {
            let outs = q.arrows.iter().filter(|a| a.src == v).count();
            let ins = q.arrows.iter().filter(|a| a.tgt == v).count();
            if outs > 2 || ins > 2 {
                return BiserialClass::Other;
            }
        }
        let n = q.arrows.len();
        for a in 0..n {
            let succ: Vec<usize> = (0..n).filter(|&b| q.arrows[b].src == q.arrows[a].tgt).collect();
            let pred: Vec<usize> = (0..n).filter(|&c| q.arrows[c].tgt == q.arrows[a].src).collect();
            if succ.iter().filter(|&&b| !self.is_relation(a, b)).count() > 1 {
                return BiserialClass::Other;
            }
            if pred.iter().filter(|&&c| !self.is_relation(c, a)).count() > 1 {
                return BiserialClass::Other;
            }
        }
        let gentle = self.relations.iter().all(|r| r.len() == 2)
            && (0..n).all(|a| {
                let succ_dead = (0..n)
                    .filter(|&b| q.arrows[b].src == q.arrows[a].tgt && self.is_relation(a, b))
                    .count();
                let pred_dead = (0..n)
                    .filter(|&c| q.arrows[c].tgt == q.arrows[a].src && self.is_relation(c, a))
                    .count();
                succ_dead <= 1 && pred_dead <= 1
            });
        if gentle {
            BiserialClass::Gentle
        } else {
            BiserialClass::SpecialBiserial
        }
    }

    /// Canonical serialization in the algebra file grammar.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p = {}", self.p);
        for v in &self.quiver.vertices {
            let _ = writeln!(s, "vertex {v}");
        }
        for a in &self.quiver.arrows {
            let _ = writeln!(s, "arrow {} {} {}", a.name, self.vertex_id(a.src), self.vertex_id(a.tgt));
        }
        for r in &self.relations {
            let names: Vec<&str> = r.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect();
            let _ = writeln!(s, "rel {}", names.join("."));
        }
        s
    }
}

/// Checks that relation-free path enumeration stays within `budget`.
pub fn validate_finite(alg: &Algebra, budget: usize) -> Result<FiniteDiagnostics> {
    let paths = enumerate_paths(&alg.quiver, &alg.relations, budget)?;
    Ok(FiniteDiagnostics {
        dimension: paths.len(),
        max_path_length: paths.iter().map(|p| p.arrows.len()).max().unwrap_or(0),
    })
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

/// Parses the line-oriented algebra grammar.
///
/// ```text
/// p = 101
/// vertices = 1 2 3
/// arrow a 1 2
/// arrow b 2 3
/// rel a.b
/// ```
pub fn parse_algebra(name: &str, text: &str) -> Result<Algebra> {
    let mut p = DEFAULT_CHAR;
    let mut vertices: Vec<u32> = Vec::new();
    let mut arrows: Vec<(String, u32, u32)> = Vec::new();
    let mut rel_lines: Vec<(usize, usize, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = body.len() - trimmed.len();
        let col_of = |tok: &str| -> usize {
            let off = trimmed.find(tok).unwrap_or(0);
            indent + off + 1
        };
        let words: Vec<&str> = trimmed.split_whitespace().collect();
        let parse_u32 = |tok: &str| -> Result<u32> {
            tok.parse::<u32>()
                .map_err(|_| syntax(line_no, col_of(tok), format!("expected a non-negative integer, found \"{tok}\"")))
        };
        match words[0] {
            "p" => {
                let rest = trimmed[1..].trim_start();
                let Some(val) = rest.strip_prefix('=') else {
                    return Err(syntax(line_no, indent + 2, "expected '=' after p"));
                };
                let val = val.trim();
                p = parse_u32(val)?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
            }
            "vertex" => {
                if words.len() != 2 {
                    return Err(syntax(line_no, indent + 1, "expected: vertex <id>"));
                }
                vertices.push(parse_u32(words[1])?);
            }
            "vertices" => {
                let rest = trimmed["vertices".len()..].trim_start();
                let Some(list) = rest.strip_prefix('=') else {
                    return Err(syntax(line_no, indent + 10, "expected '=' after vertices"));
                };
                for tok in list.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                    vertices.push(parse_u32(tok)?);
                }
            }
            "arrow" => {
                if words.len() != 4 {
                    return Err(syntax(line_no, indent + 1, "expected: arrow <name> <src> <tgt>"));
                }
                arrows.push((words[1].to_string(), parse_u32(words[2])?, parse_u32(words[3])?));
            }
            "rel" => {
                if words.len() != 2 {
                    return Err(syntax(line_no, indent + 1, "expected: rel <name>.<name>[...]"));
                }
                rel_lines.push((line_no, col_of(words[1]), words[1].to_string()));
            }
            other => {
                return Err(syntax(line_no, indent + 1, format!("unknown directive \"{other}\"")));
            }
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for (_, _, text) in rel_lines {
        let mut r = Vec::new();
        for tok in text.split('.') {
            r.push(quiver.arrow_index(tok).ok_or_else(|| Error::UnknownArrow(tok.to_string()))?);
        }
        relations.push(r);
    }
    Algebra::new(name, quiver, relations, p)
}
