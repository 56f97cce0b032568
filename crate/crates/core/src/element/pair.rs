use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::tree::{bits_to_string, preorder_len, FiniteBinaryTree};
use crate::error::Error;

/// A (domain, range) pair of trees with equal leaf counts, not necessarily reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TreePair {
    pub domain: FiniteBinaryTree,
    pub range: FiniteBinaryTree,
}

impl TreePair {
    pub fn new(domain: FiniteBinaryTree, range: FiniteBinaryTree) -> Result<Self, Error> {
        if domain.leaf_count() != range.leaf_count() {
            return Err(Error::InvalidTreePair(format!(
                "domain has {} leaves, range has {}",
                domain.leaf_count(),
                range.leaf_count()
            )));
        }
        Ok(TreePair { domain, range })
    }

    /// Attaches a caret under leaf `index` of both trees. The result
    /// represents the same element.
    pub fn expand_leaf(&self, index: usize) -> TreePair {
        let mut exts = vec![vec![false]; self.domain.leaf_count()];
        exts[index] = vec![true, false, false];
        TreePair {
            domain: substitute_leaves(&self.domain, &exts),
            range: substitute_leaves(&self.range, &exts),
        }
    }
}

/// An element of F: a reduced tree pair diagram.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    pair: TreePair,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            pair: TreePair {
                domain: FiniteBinaryTree::leaf(),
                range: FiniteBinaryTree::leaf(),
            },
        }
    }

    pub fn domain(&self) -> &FiniteBinaryTree {
        &self.pair.domain
    }

    pub fn range(&self) -> &FiniteBinaryTree {
        &self.pair.range
    }

    pub fn tree_pair(&self) -> &TreePair {
        &self.pair
    }

    pub fn is_identity(&self) -> bool {
        self.pair.domain.is_leaf()
    }

    /// Number of carets in each tree of the reduced pair.
    pub fn caret_count(&self) -> usize {
        self.pair.domain.caret_count()
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey::from_trees(self.pair.domain.preorder(), self.pair.range.preorder())
    }

    pub fn from_key(key: &CanonicalKey) -> Result<Self, Error> {
        let (d, r) = key.trees()?;
        let pair = TreePair::new(d, r)?;
        let reduced = reduce(&pair);
        if reduced.pair != pair {
            return Err(Error::InvalidTreePair(format!("{key} is not reduced")));
        }
        Ok(reduced)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_key())
    }
}

/// Leaf indices `i` such that leaves `i` and `i+1` hang from one caret.
fn exposed_carets(bits: &[bool]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut leaves = 0;
    for p in 0..bits.len() {
        if bits[p] {
            if bits.get(p + 1) == Some(&false) && bits.get(p + 2) == Some(&false) {
                out.push((leaves, p));
            }
        } else {
            leaves += 1;
        }
    }
    out
}

fn remove_carets_at(bits: &[bool], positions: &[usize]) -> Vec<bool> {
    let mut out = Vec::with_capacity(bits.len());
    let mut i = 0;
    let mut next = positions.iter().peekable();
    while i < bits.len() {
        if next.peek() == Some(&&i) {
            next.next();
            out.push(false);
            i += 3;
        } else {
            out.push(bits[i]);
            i += 1;
        }
    }
    out
}

/// Cancels every caret exposed at the same leaf index in both trees until
/// none is left. Reduced diagrams are unique, so the order does not matter.
pub fn reduce(pair: &TreePair) -> GroupElement {
    let mut dom = pair.domain.preorder().to_vec();
    let mut ran = pair.range.preorder().to_vec();
    loop {
        let de = exposed_carets(&dom);
        let re = exposed_carets(&ran);
        let mut dpos = Vec::new();
        let mut rpos = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < de.len() && j < re.len() {
            match de[i].0.cmp(&re[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    dpos.push(de[i].1);
                    rpos.push(re[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        if dpos.is_empty() {
            break;
        }
        dom = remove_carets_at(&dom, &dpos);
        ran = remove_carets_at(&ran, &rpos);
    }
    GroupElement {
        pair: TreePair {
            domain: FiniteBinaryTree::from_preorder_unchecked(dom),
            range: FiniteBinaryTree::from_preorder_unchecked(ran),
        },
    }
}

/// Replaces leaf `i` of `tree` by the subtree `exts[i]`.
pub(crate) fn substitute_leaves(tree: &FiniteBinaryTree, exts: &[Vec<bool>]) -> FiniteBinaryTree {
    let bits = tree.preorder();
    let mut out = Vec::with_capacity(bits.len() + exts.iter().map(|e| e.len() - 1).sum::<usize>());
    let mut leaf = 0;
    for &b in bits {
        if b {
            out.push(true);
        } else {
            out.extend_from_slice(&exts[leaf]);
            leaf += 1;
        }
    }
    FiniteBinaryTree::from_preorder_unchecked(out)
}

/// Walks two trees in parallel, recording for every leaf of each tree the
/// subtree of their union hanging below it.
fn refine(
    a: &[bool],
    ia: &mut usize,
    b: &[bool],
    ib: &mut usize,
    ext_a: &mut Vec<Vec<bool>>,
    ext_b: &mut Vec<Vec<bool>>,
) {
    match (a[*ia], b[*ib]) {
        (true, true) => {
            *ia += 1;
            *ib += 1;
            refine(a, ia, b, ib, ext_a, ext_b);
            refine(a, ia, b, ib, ext_a, ext_b);
        }
        (false, false) => {
            *ia += 1;
            *ib += 1;
            ext_a.push(vec![false]);
            ext_b.push(vec![false]);
        }
        (false, true) => {
            let len = preorder_len(b, *ib).expect("well-formed tree");
            let sub = &b[*ib..*ib + len];
            ext_a.push(sub.to_vec());
            ext_b.extend(sub.iter().filter(|&&x| !x).map(|_| vec![false]));
            *ia += 1;
            *ib += len;
        }
        (true, false) => {
            let len = preorder_len(a, *ia).expect("well-formed tree");
            let sub = &a[*ia..*ia + len];
            ext_b.push(sub.to_vec());
            ext_a.extend(sub.iter().filter(|&&x| !x).map(|_| vec![false]));
            *ia += len;
            *ib += 1;
        }
    }
}

/// `f` followed by `g`: as maps of `[0,1]`, `x -> g(f(x))`.
pub fn compose(f: &GroupElement, g: &GroupElement) -> GroupElement {
    if f.is_identity() {
        return g.clone();
    }
    if g.is_identity() {
        return f.clone();
    }
    let mut ext_f = Vec::with_capacity(f.pair.range.leaf_count());
    let mut ext_g = Vec::with_capacity(g.pair.domain.leaf_count());
    refine(
        f.pair.range.preorder(),
        &mut 0,
        g.pair.domain.preorder(),
        &mut 0,
        &mut ext_f,
        &mut ext_g,
    );
    let domain = substitute_leaves(&f.pair.domain, &ext_f);
    let range = substitute_leaves(&g.pair.range, &ext_g);
    reduce(&TreePair { domain, range })
}

pub fn invert(f: &GroupElement) -> GroupElement {
    GroupElement {
        pair: TreePair {
            domain: f.pair.range.clone(),
            range: f.pair.domain.clone(),
        },
    }
}

pub fn elements_equal(f: &GroupElement, g: &GroupElement) -> bool {
    f.canonical_key() == g.canonical_key()
}

/// Byte encoding of a reduced pair: the domain preorder bits followed by the
/// range preorder bits (`1` caret, `0` leaf), then a single `1` terminator,
/// packed MSB first and zero padded. Each preorder string is prefix-free, so
/// the split point is recoverable and the encoding is injective.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(Box<[u8]>);

impl CanonicalKey {
    fn from_trees(domain: &[bool], range: &[bool]) -> Self {
        let total = domain.len() + range.len() + 1;
        let mut bytes = vec![0u8; total.div_ceil(8)];
        for (i, b) in domain
            .iter()
            .chain(range)
            .chain(std::iter::once(&true))
            .enumerate()
        {
            if *b {
                bytes[i / 8] |= 0x80 >> (i % 8);
            }
        }
        CanonicalKey(bytes.into_boxed_slice())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, Error> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::Cache(format!("bad hex key: {e}")))?;
        let key = CanonicalKey(bytes.into_boxed_slice());
        key.trees()?;
        Ok(key)
    }

    fn bits(&self) -> Result<Vec<bool>, Error> {
        let mut bits: Vec<bool> = self
            .0
            .iter()
            .flat_map(|byte| (0..8).map(move |i| byte & (0x80 >> i) != 0))
            .collect();
        while bits.last() == Some(&false) {
            bits.pop();
        }
        if bits.pop() != Some(true) {
            return Err(Error::InvalidTreePair("key has no terminator".into()));
        }
        Ok(bits)
    }

    fn trees(&self) -> Result<(FiniteBinaryTree, FiniteBinaryTree), Error> {
        let bits = self.bits()?;
        let split = preorder_len(&bits, 0)
            .ok_or_else(|| Error::InvalidTreePair("truncated domain tree".into()))?;
        let domain = FiniteBinaryTree::from_preorder(bits[..split].to_vec())?;
        let range = FiniteBinaryTree::from_preorder(bits[split..].to_vec())?;
        Ok((domain, range))
    }
}

impl fmt::Display for CanonicalKey {
    /// `domainbits|rangebits`, e.g. `0|0` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.trees() {
            Ok((d, r)) => write!(
                f,
                "{}|{}",
                bits_to_string(d.preorder()),
                bits_to_string(r.preorder())
            ),
            Err(_) => write!(f, "<invalid:{}>", self.to_hex()),
        }
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalKey {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        CanonicalKey::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{generator_element, Generator};

    fn tree(s: &str) -> FiniteBinaryTree {
        FiniteBinaryTree::from_preorder(s.chars().map(|c| c == '1').collect()).unwrap()
    }

    fn pair(d: &str, r: &str) -> TreePair {
        TreePair::new(tree(d), tree(r)).unwrap()
    }

    #[test]
    fn identity_key() {
        assert_eq!(GroupElement::identity().canonical_key().to_string(), "0|0");
    }

    #[test]
    fn reduce_examples() {
        for t in ["0", "100", "11000", "1011000", "1101000"] {
            assert!(reduce(&pair(t, t)).is_identity());
        }
        let x0 = pair("11000", "10100");
        assert_eq!(reduce(&x0).tree_pair(), &x0);
        // one extra matched caret under leaf 0 of both trees
        let expanded = pair("1110000", "1100100");
        assert_eq!(expanded, x0.expand_leaf(0));
        assert_eq!(reduce(&expanded).tree_pair(), &x0);
    }

    #[test]
    fn mismatched_leaf_counts() {
        assert!(TreePair::new(tree("100"), tree("0")).is_err());
    }

    #[test]
    fn key_roundtrip_and_errors() {
        let x1 = generator_element(Generator::X1);
        let k = x1.canonical_key();
        assert_eq!(k.to_string(), "1011000|1010100");
        let back = CanonicalKey::from_hex(&k.to_hex()).unwrap();
        assert_eq!(GroupElement::from_key(&back).unwrap(), x1);
        assert!(CanonicalKey::from_hex("zz").is_err());
        assert!(CanonicalKey::from_hex("00").is_err());
        // 100|100 is a valid pair but not reduced
        let unreduced = CanonicalKey::from_trees(&[true, false, false], &[true, false, false]);
        assert!(GroupElement::from_key(&unreduced).is_err());
    }

    #[test]
    fn compose_with_inverse() {
        for g in Generator::ALL {
            let e = generator_element(g);
            assert!(compose(&e, &invert(&e)).is_identity());
            assert!(compose(&invert(&e), &e).is_identity());
            assert_eq!(compose(&e, &GroupElement::identity()), e);
        }
    }
}
