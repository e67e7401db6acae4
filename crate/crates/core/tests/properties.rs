use std::sync::Arc;

use proptest::prelude::*;

use tauexc::builtins::{builtin, builtin_names};
use tauexc::linalg::Matrix;
use tauexc::module::Module;
use tauexc::report::root_context;
use tauexc::strings::{enumerate_strings, string_hom_count, string_to_module, StringWord};
use tauexc::tauseq::{enumerate_complete, is_complete, is_tf_ordered, omega, omega_inv};
use tauexc::Algebra;

const P: u32 = 101;

fn string_pool(name: &str) -> (Arc<Algebra>, Vec<StringWord>, Vec<Module>) {
    let alg = Arc::new(builtin(name).unwrap());
    let words = enumerate_strings(&alg, 4).unwrap();
    let mods = words.iter().map(|w| string_to_module(&alg, w)).collect();
    (alg, words, mods)
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..P, n * n).prop_map(move |v| Matrix::from_fn(n, n, P, |r, c| v[r * n + c]))
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n).prop_filter("singular", |m| m.is_invertible())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_is_two_sided(m in invertible(4)) {
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv), Matrix::identity(4, P));
        prop_assert_eq!(inv.mul(&m), Matrix::identity(4, P));
    }

    #[test]
    fn rank_plus_nullity(m in matrix(5)) {
        prop_assert_eq!(m.rank() + m.nullspace().cols(), 5);
        prop_assert!(m.mul(&m.nullspace()).is_zero());
    }

    #[test]
    fn hom_matches_string_count(alg_ix in 0usize..7, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (alg, words, mods) = string_pool(builtin_names()[alg_ix]);
        let (a, b) = (a.index(words.len()), b.index(words.len()));
        prop_assert_eq!(mods[a].hom_dim(&mods[b]), string_hom_count(&alg, &words[a], &words[b]));
    }

    #[test]
    fn hom_is_additive(alg_ix in 0usize..7, picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let (_, _, mods) = string_pool(builtin_names()[alg_ix]);
        let [a, b, c] = [0, 1, 2].map(|k| &mods[picks[k].index(mods.len())]);
        let sum = Module::direct_sum(&[a, b]);
        prop_assert_eq!(sum.hom_dim(c), a.hom_dim(c) + b.hom_dim(c));
        prop_assert_eq!(c.hom_dim(&sum), c.hom_dim(a) + c.hom_dim(b));
    }

    #[test]
    fn string_modules_are_indecomposable(alg_ix in 0usize..7, pick in any::<prop::sample::Index>()) {
        let (_, _, mods) = string_pool(builtin_names()[alg_ix]);
        let m = &mods[pick.index(mods.len())];
        prop_assert!(m.satisfies_relations());
        prop_assert!(m.is_indecomposable());
        prop_assert_eq!(m.decompose().len(), 1);
    }

    #[test]
    fn base_change_preserves_isomorphism_class(pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let (_, _, mods) = string_pool("ex-9.4");
        let m = &mods[pick.index(mods.len())];
        let mut state = seed | 1;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % P as u64) as u32
        };
        let g: Vec<Matrix> = m
            .dims
            .iter()
            .map(|&d| {
                let mut x = Matrix::from_fn(d, d, P, |_, _| next());
                while !x.is_invertible() {
                    x = Matrix::from_fn(d, d, P, |_, _| next());
                }
                x
            })
            .collect();
        let n = m.conjugate(&g);
        prop_assert!(n.is_isomorphic(m));
        prop_assert_eq!(n.hom_dim(&n), m.hom_dim(m));
    }

    #[test]
    fn decompose_is_additive(picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let (_, _, mods) = string_pool("ex-9.3");
        let parts: Vec<&Module> = picks.iter().map(|i| &mods[i.index(mods.len())]).collect();
        let sum = Module::direct_sum(&parts);
        let pieces = sum.decompose();
        prop_assert_eq!(pieces.len(), parts.len());
        prop_assert_eq!(pieces.iter().map(|m| m.total_dim()).sum::<usize>(), sum.total_dim());
        for piece in &pieces {
            prop_assert_eq!(piece.decompose().len(), 1);
        }
    }
}

#[test]
fn translate_round_trip() {
    for (name, bound) in [("ex-9.2", 8), ("ex-9.3", 12), ("ex-9.4", 12), ("a3", 12), ("ex-9.1", 8)] {
        let c = root_context(Arc::new(builtin(name).unwrap()), bound).unwrap();
        for x in 0..c.inv.len() {
            if c.inv.is_projective(x) {
                continue;
            }
            let t = c.inv.module(x).tau();
            assert!(t.is_indecomposable(), "{name}: tau {} decomposes", c.inv.name(x));
            assert!(t.tau_inv().is_isomorphic(c.inv.module(x)), "{name}: tau_inv tau {} differs", c.inv.name(x));
        }
        for x in 0..c.inv.len() {
            if c.inv.is_injective(x) {
                continue;
            }
            let t = c.inv.module(x).tau_inv();
            assert!(t.is_indecomposable(), "{name}: tau_inv {} decomposes", c.inv.name(x));
            assert!(t.tau().is_isomorphic(c.inv.module(x)), "{name}: tau tau_inv {} differs", c.inv.name(x));
        }
    }
}

#[test]
fn omega_is_a_bijection() {
    for name in ["ex-9.3", "ex-9.4", "a3"] {
        let c = root_context(Arc::new(builtin(name).unwrap()), 12).unwrap();
        for s in enumerate_complete(&c).unwrap() {
            assert!(is_complete(&c, &s));
            let ns = omega_inv(&c, &s).unwrap();
            assert!(is_tf_ordered(&c, &ns), "{name}");
            assert_eq!(omega(&c, &ns).unwrap(), s, "{name}");
        }
    }
}
