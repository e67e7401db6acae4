//! String combinatorics for monomial special biserial algebras.
//!
//! A letter is an arrow read forwards or backwards. In the module attached
//! to a word, a direct letter sends the basis vector on its left to the one
//! on its right; an inverse letter goes the other way.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, BiserialClass};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::Module;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Letter {
        Letter { arrow, inverse: false }
    }

    pub fn inv(arrow: usize) -> Letter {
        Letter { arrow, inverse: true }
    }

    pub fn flipped(self) -> Letter {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }

    fn start(self, alg: &Algebra) -> usize {
        let a = alg.arrow(self.arrow);
        if self.inverse {
            a.tgt
        } else {
            a.src
        }
    }

    fn end(self, alg: &Algebra) -> usize {
        let a = alg.arrow(self.arrow);
        if self.inverse {
            a.src
        } else {
            a.tgt
        }
    }
}

/// A walk in the quiver; the empty word at `start` is the trivial string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringWord {
    pub start: usize,
    pub letters: Vec<Letter>,
}

impl StringWord {
    pub fn trivial(v: usize) -> StringWord {
        StringWord { start: v, letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn vertices(&self, alg: &Algebra) -> Vec<usize> {
        let mut out = vec![self.start];
        for l in &self.letters {
            out.push(l.end(alg));
        }
        out
    }

    pub fn end(&self, alg: &Algebra) -> usize {
        self.letters.last().map_or(self.start, |l| l.end(alg))
    }

    pub fn inverse(&self, alg: &Algebra) -> StringWord {
        StringWord {
            start: self.end(alg),
            letters: self.letters.iter().rev().map(|l| l.flipped()).collect(),
        }
    }

    /// A word is canonical when it is not larger than its inverse.
    pub fn is_canonical(&self, alg: &Algebra) -> bool {
        self.letters.is_empty() || self.letters <= self.inverse(alg).letters
    }

    pub fn display(&self, alg: &Algebra) -> String {
        if self.letters.is_empty() {
            return format!("e{}", alg.vertex_id(self.start));
        }
        self.letters
            .iter()
            .map(|l| {
                let name = &alg.arrow(l.arrow).name;
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn sub(&self, alg: &Algebra, s: usize, t: usize) -> StringWord {
        let verts = self.vertices(alg);
        StringWord { start: verts[s], letters: self.letters[s..t].to_vec() }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.arrow)
        } else {
            write!(f, "{}", self.arrow)
        }
    }
}

/// Whether `letter` may be appended to `word`.
pub fn can_append(alg: &Algebra, word: &StringWord, letter: Letter) -> bool {
    if letter.start(alg) != word.end(alg) {
        return false;
    }
    let Some(&last) = word.letters.last() else {
        return true;
    };
    if last.arrow == letter.arrow && last.inverse != letter.inverse {
        return false;
    }
    if last.inverse != letter.inverse {
        return true;
    }
    // Same direction: the run ending in `letter` must avoid every relation.
    let run: Vec<usize> = word
        .letters
        .iter()
        .rev()
        .take_while(|l| l.inverse == letter.inverse)
        .map(|l| l.arrow)
        .collect();
    if letter.inverse {
        // Traversal order of an inverse run read right to left.
        let path: Vec<usize> = std::iter::once(letter.arrow).chain(run.iter().copied()).collect();
        alg.relations.iter().all(|r| !path.starts_with(r))
    } else {
        let mut path: Vec<usize> = run.iter().rev().copied().collect();
        path.push(letter.arrow);
        alg.relations.iter().all(|r| !path.ends_with(r))
    }
}

pub fn is_valid(alg: &Algebra, word: &StringWord) -> bool {
    let mut acc = StringWord::trivial(word.start);
    for &l in &word.letters {
        if !can_append(alg, &acc, l) {
            return false;
        }
        acc.letters.push(l);
    }
    true
}

fn require_string_algebra(alg: &Algebra) -> Result<()> {
    match alg.classify_biserial() {
        BiserialClass::Other => Err(Error::NotSpecialBiserial),
        _ => Ok(()),
    }
}

fn all_letters(alg: &Algebra) -> Vec<Letter> {
    (0..alg.num_arrows()).flat_map(|a| [Letter::direct(a), Letter::inv(a)]).collect()
}

/// All valid words of length at most `max_len`, grouped by length.
fn words_by_length(alg: &Algebra, max_len: usize) -> Vec<Vec<StringWord>> {
    let letters = all_letters(alg);
    let mut layers = vec![(0..alg.num_vertices()).map(StringWord::trivial).collect::<Vec<_>>()];
    for _ in 0..max_len {
        let prev = layers.last().unwrap();
        let mut next = Vec::new();
        for w in prev {
            for &l in &letters {
                if can_append(alg, w, l) {
                    let mut x = w.clone();
                    x.letters.push(l);
                    next.push(x);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    layers
}

/// Canonical strings of length at most `max_len`, trivial strings included.
pub fn enumerate_strings(alg: &Algebra, max_len: usize) -> Result<Vec<StringWord>> {
    require_string_algebra(alg)?;
    let mut out: Vec<StringWord> = words_by_length(alg, max_len)
        .into_iter()
        .flatten()
        .filter(|w| w.is_canonical(alg))
        .collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

/// Whether some valid string is longer than `len`.
pub fn has_string_longer_than(alg: &Algebra, len: usize) -> bool {
    words_by_length(alg, len + 1).len() > len + 1
}

/// Primitive cyclic words up to rotation and inversion, of length at most `max_len`.
pub fn detect_bands(alg: &Algebra, max_len: usize) -> Result<Vec<StringWord>> {
    require_string_algebra(alg)?;
    let mut found = BTreeSet::new();
    for w in words_by_length(alg, max_len).into_iter().flatten() {
        if w.is_empty() || w.end(alg) != w.start {
            continue;
        }
        if w.letters.iter().all(|l| l.inverse) || w.letters.iter().all(|l| !l.inverse) {
            continue;
        }
        if !is_primitive(&w.letters) {
            continue;
        }
        let cube = StringWord { start: w.start, letters: w.letters.repeat(3) };
        if !is_valid(alg, &cube) {
            continue;
        }
        found.insert(canonical_rotation(alg, &w));
    }
    Ok(found.into_iter().collect())
}

fn is_primitive(letters: &[Letter]) -> bool {
    let n = letters.len();
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| letters.chunks(d).any(|c| c != &letters[..d]))
}

fn canonical_rotation(alg: &Algebra, w: &StringWord) -> StringWord {
    let inv = w.inverse(alg);
    let mut best: Option<StringWord> = None;
    for base in [w, &inv] {
        let verts = base.vertices(alg);
        let n = base.letters.len();
        for r in 0..n {
            let mut letters = base.letters[r..].to_vec();
            letters.extend_from_slice(&base.letters[..r]);
            let cand = StringWord { start: verts[r], letters };
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("nonempty band")
}

/// The string module of a valid word.
pub fn string_to_module(alg: &Arc<Algebra>, w: &StringWord) -> Module {
    let verts = w.vertices(alg);
    let n = alg.num_vertices();
    let mut dims = vec![0usize; n];
    let local: Vec<usize> = verts
        .iter()
        .map(|&v| {
            dims[v] += 1;
            dims[v] - 1
        })
        .collect();
    let mut maps: Vec<Matrix> = (0..alg.num_arrows())
        .map(|i| {
            let a = alg.arrow(i);
            Matrix::zeros(dims[a.tgt], dims[a.src], alg.p)
        })
        .collect();
    for (j, l) in w.letters.iter().enumerate() {
        let (from, to) = if l.inverse { (j + 1, j) } else { (j, j + 1) };
        maps[l.arrow].set(local[to], local[from], 1);
    }
    Module::new(alg.clone(), dims, maps)
}

/// Hom dimension between string modules by counting factor/image substring matches.
pub fn string_hom_count(alg: &Algebra, v: &StringWord, w: &StringWord) -> usize {
    let factor = substrings(alg, v, true);
    let image = substrings(alg, w, false);
    let mut count = 0;
    for c in &factor {
        for d in &image {
            if c == d || (!c.is_empty() && *c == d.inverse(alg)) {
                count += 1;
            }
        }
    }
    count
}

/// Factor substrings (`factor = true`) or image substrings of `w`.
fn substrings(alg: &Algebra, w: &StringWord, factor: bool) -> Vec<StringWord> {
    let k = w.len();
    let mut out = Vec::new();
    for s in 0..=k {
        for t in s..=k {
            // letters[s - 1] sits left of the substring, letters[t] right of it.
            let left_ok = s == 0 || w.letters[s - 1].inverse == factor;
            let right_ok = t == k || w.letters[t].inverse != factor;
            if left_ok && right_ok {
                out.push(w.sub(alg, s, t));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn alg(text: &str) -> Arc<Algebra> {
        Arc::new(parse_algebra("t", text).unwrap())
    }

    #[test]
    fn a2_has_three_strings() {
        let a = alg("vertices = 1 2\narrow a 1 2\n");
        assert_eq!(enumerate_strings(&a, 5).unwrap().len(), 3);
        assert!(detect_bands(&a, 6).unwrap().is_empty());
    }

    #[test]
    fn zero_relation_path_has_five_strings() {
        let a = alg("vertices = 1 2 3\narrow a 1 2\narrow b 2 3\nrel a.b\n");
        let s = enumerate_strings(&a, 6).unwrap();
        assert_eq!(s.len(), 5);
        assert!(!has_string_longer_than(&a, 1));
    }

    #[test]
    fn kronecker_band() {
        let a = alg("vertices = 1 2\narrow a 1 2\narrow b 1 2\n");
        let bands = detect_bands(&a, 4).unwrap();
        assert_eq!(bands.len(), 1);
        assert_eq!(bands[0].len(), 2);
    }

    #[test]
    fn string_modules_satisfy_relations() {
        let a = alg("vertices = 1 2 3\narrow a 1 2\narrow b 1 2\narrow c 2 3\nrel a.c\n");
        for w in enumerate_strings(&a, 5).unwrap() {
            let m = string_to_module(&a, &w);
            assert!(m.satisfies_relations(), "{}", w.display(&a));
            assert_eq!(m.total_dim(), w.len() + 1);
        }
    }

    #[test]
    fn hom_count_on_a2() {
        let a = alg("vertices = 1 2\narrow a 1 2\n");
        let p1 = StringWord { start: 0, letters: vec![Letter::direct(0)] };
        let s1 = StringWord::trivial(0);
        let s2 = StringWord::trivial(1);
        assert_eq!(string_hom_count(&a, &p1, &s1), 1);
        assert_eq!(string_hom_count(&a, &p1, &s2), 0);
        assert_eq!(string_hom_count(&a, &s2, &p1), 1);
        assert_eq!(string_hom_count(&a, &p1, &p1), 1);
    }
}
