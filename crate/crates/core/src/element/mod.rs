//! Elements of F as reduced tree pair diagrams and as dyadic PL maps.
//!
//! Composition is left to right: [`compose`]`(f, g)` applies `f` first, so
//! the element of a word `s1 s2 ... sn` is the map `x -> sn(...s1(x))`.

mod dot;
mod pair;
mod pl;
mod tree;
mod word;

use std::sync::OnceLock;

pub use dot::tree_pair_dot;
pub use pair::{compose, elements_equal, invert, reduce, CanonicalKey, GroupElement, TreePair};
pub use pl::{pl_apply, pl_compose, pl_of_element, PLMap, PLMapError};
pub use tree::FiniteBinaryTree;
pub use word::{parse_word, Generator, Word};

fn tree(bits: &str) -> FiniteBinaryTree {
    FiniteBinaryTree::from_preorder(bits.chars().map(|c| c == '1').collect())
        .expect("valid generator tree")
}

/// The reduced pair of a generator. `x0` takes `[0,1/4],[1/4,1/2],[1/2,1]`
/// to `[0,1/2],[1/2,3/4],[3/4,1]`; `x1` does the same inside `[1/2,1]`.
pub fn generator_element(s: Generator) -> GroupElement {
    static GENERATORS: OnceLock<[GroupElement; 4]> = OnceLock::new();
    let gens = GENERATORS.get_or_init(|| {
        let x0 = reduce(&TreePair::new(tree("11000"), tree("10100")).expect("x0"));
        let x1 = reduce(&TreePair::new(tree("1011000"), tree("1010100")).expect("x1"));
        let x0inv = invert(&x0);
        let x1inv = invert(&x1);
        [x0, x1, x0inv, x1inv]
    });
    let i = match s {
        Generator::X0 => 0,
        Generator::X1 => 1,
        Generator::X0Inv => 2,
        Generator::X1Inv => 3,
    };
    gens[i].clone()
}

pub fn generator_pl(s: Generator) -> &'static PLMap {
    static MAPS: OnceLock<[PLMap; 4]> = OnceLock::new();
    let maps = MAPS.get_or_init(|| Generator::ALL.map(|g| pl_of_element(&generator_element(g))));
    &maps[Generator::ALL
        .iter()
        .position(|&g| g == s)
        .expect("generator")]
}

pub fn evaluate_word(w: &Word) -> GroupElement {
    w.letters()
        .iter()
        .fold(GroupElement::identity(), |acc, &s| {
            compose(&acc, &generator_element(s))
        })
}

/// The PL map of a word built only from the generator PL maps, without tree pairs.
pub fn evaluate_word_pl(w: &Word) -> PLMap {
    w.letters()
        .iter()
        .fold(PLMap::identity(), |acc, &s| acc.then(generator_pl(s)))
}

pub fn canonical_key(f: &GroupElement) -> CanonicalKey {
    f.canonical_key()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn generator_partitions() {
        let x0 = generator_element(Generator::X0);
        let names = |t: &FiniteBinaryTree| {
            t.partition_of_leaves()
                .iter()
                .map(|i| i.right_end().to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(x0.domain()), ["1/2^2", "1/2^1", "1"]);
        assert_eq!(names(x0.range()), ["1/2^1", "3/2^2", "1"]);
        let x1 = generator_element(Generator::X1);
        assert_eq!(names(x1.domain()), ["1/2^1", "5/2^3", "3/2^2", "1"]);
        assert_eq!(names(x1.range()), ["1/2^1", "3/2^2", "7/2^3", "1"]);
        let x0inv = generator_element(Generator::X0Inv);
        assert_eq!(x0inv.domain(), x0.range());
        assert_eq!(x0inv.range(), x0.domain());
    }

    #[test]
    fn word_evaluation() {
        assert!(evaluate_word(&w("")).is_identity());
        assert!(evaluate_word(&w("aA")).is_identity());
        assert!(evaluate_word(&w("bBAa")).is_identity());
        assert_eq!(evaluate_word(&w("a")), generator_element(Generator::X0));
        assert_ne!(
            canonical_key(&generator_element(Generator::X0)),
            canonical_key(&generator_element(Generator::X1))
        );
    }

    #[test]
    fn family_pair_agree() {
        // f_2 and g_2 represent the same element
        let f2 = evaluate_word(&w("ABaaaaBAA"));
        let g2 = evaluate_word(&w("aaaBAAABa"));
        assert_eq!(canonical_key(&f2), canonical_key(&g2));
        assert!(elements_equal(&f2, &g2));
    }
}
