use std::fmt;

use crate::coretree::{interval_to_address, RegionClass, StandardInterval, VertexAddress};
use crate::error::Error;

/// A finite rooted binary tree, stored as its preorder encoding:
/// `true` for a caret (internal node), `false` for a leaf.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteBinaryTree {
    bits: Vec<bool>,
}

impl FiniteBinaryTree {
    pub fn leaf() -> Self {
        FiniteBinaryTree { bits: vec![false] }
    }

    /// A single caret joining two subtrees.
    pub fn caret(left: FiniteBinaryTree, right: FiniteBinaryTree) -> Self {
        let mut bits = Vec::with_capacity(1 + left.bits.len() + right.bits.len());
        bits.push(true);
        bits.extend_from_slice(&left.bits);
        bits.extend_from_slice(&right.bits);
        FiniteBinaryTree { bits }
    }

    /// Parses a preorder encoding, rejecting anything that is not exactly one tree.
    pub fn from_preorder(bits: Vec<bool>) -> Result<Self, Error> {
        if preorder_len(&bits, 0) != Some(bits.len()) {
            return Err(Error::InvalidTreePair(format!(
                "{} is not a preorder tree encoding",
                bits_to_string(&bits)
            )));
        }
        Ok(FiniteBinaryTree { bits })
    }

    pub(crate) fn from_preorder_unchecked(bits: Vec<bool>) -> Self {
        debug_assert_eq!(preorder_len(&bits, 0), Some(bits.len()));
        FiniteBinaryTree { bits }
    }

    pub fn preorder(&self) -> &[bool] {
        &self.bits
    }

    pub fn leaf_count(&self) -> usize {
        self.bits.iter().filter(|&&b| !b).count()
    }

    pub fn caret_count(&self) -> usize {
        self.bits.len() - self.leaf_count()
    }

    pub fn is_leaf(&self) -> bool {
        self.bits.len() == 1
    }

    /// Leaf addresses, left to right.
    pub fn leaf_addresses(&self) -> Vec<VertexAddress> {
        let mut out = Vec::with_capacity(self.leaf_count());
        let mut path = Vec::new();
        for &b in &self.bits {
            if b {
                path.push(false);
            } else {
                out.push(VertexAddress::from_bits(path.clone()));
                // climb past finished right branches, then turn right
                while path.last() == Some(&true) {
                    path.pop();
                }
                if let Some(last) = path.last_mut() {
                    *last = true;
                }
            }
        }
        out
    }

    /// Caret addresses in infix order.
    pub fn caret_addresses(&self) -> Vec<VertexAddress> {
        let mut carets = Vec::with_capacity(self.caret_count());
        let mut path = Vec::new();
        for &b in &self.bits {
            if b {
                carets.push(VertexAddress::from_bits(path.clone()));
                path.push(false);
            } else {
                while path.last() == Some(&true) {
                    path.pop();
                }
                if let Some(last) = path.last_mut() {
                    *last = true;
                }
            }
        }
        carets.sort_by(crate::coretree::infix_compare);
        carets
    }

    /// Carets whose vertex lies on the left spine (root included) and on the
    /// right spine.
    pub fn spine_caret_counts(&self) -> (usize, usize) {
        let mut left = 0;
        let mut right = 0;
        for c in self.caret_addresses() {
            match c.region() {
                RegionClass::LeftSpine => left += 1,
                RegionClass::RightSpine => right += 1,
                RegionClass::Interior => {}
            }
        }
        (left, right)
    }

    /// Carets in the left and right subtrees of the root, the root itself
    /// excluded. A single leaf gives `(0, 0)`.
    pub fn side_caret_counts(&self) -> (usize, usize) {
        if self.is_leaf() {
            return (0, 0);
        }
        let split = 1 + preorder_len(&self.bits, 1).expect("valid tree");
        let count = |b: &[bool]| b.iter().filter(|&&x| x).count();
        (count(&self.bits[1..split]), count(&self.bits[split..]))
    }

    pub fn partition_of_leaves(&self) -> Vec<StandardInterval> {
        self.leaf_addresses()
            .iter()
            .map(|a| a.to_interval())
            .collect()
    }

    /// The unique tree whose leaves are the given standard dyadic partition.
    pub fn from_partition(partition: &[StandardInterval]) -> Result<Self, Error> {
        let leaves: Vec<VertexAddress> = partition.iter().map(interval_to_address).collect();
        Self::from_leaf_addresses(&leaves)
    }

    pub fn from_leaf_addresses(leaves: &[VertexAddress]) -> Result<Self, Error> {
        let mut bits = Vec::with_capacity(2 * leaves.len());
        build_from_leaves(leaves, 0, &mut bits)?;
        Ok(FiniteBinaryTree { bits })
    }
}

fn build_from_leaves(
    leaves: &[VertexAddress],
    depth: usize,
    out: &mut Vec<bool>,
) -> Result<(), Error> {
    match leaves {
        [] => Err(Error::InvalidPartition(
            "intervals do not cover [0,1]".into(),
        )),
        [only] if only.depth() == depth => {
            out.push(false);
            Ok(())
        }
        _ => {
            if leaves.iter().any(|l| l.depth() <= depth) {
                return Err(Error::InvalidPartition(
                    "intervals overlap or are out of order".into(),
                ));
            }
            let split = leaves.partition_point(|l| !l.bits()[depth]);
            if leaves[split..].iter().any(|l| !l.bits()[depth]) {
                return Err(Error::InvalidPartition(
                    "intervals are not in left-to-right order".into(),
                ));
            }
            out.push(true);
            build_from_leaves(&leaves[..split], depth + 1, out)?;
            build_from_leaves(&leaves[split..], depth + 1, out)
        }
    }
}

/// Length of the subtree encoded from `start`, if well formed.
pub(crate) fn preorder_len(bits: &[bool], start: usize) -> Option<usize> {
    let mut need = 1usize;
    let mut i = start;
    while need > 0 {
        let b = *bits.get(i)?;
        need -= 1;
        if b {
            need += 2;
        }
        i += 1;
    }
    Some(i - start)
}

pub(crate) fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl fmt::Display for FiniteBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bits_to_string(&self.bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(s: &str) -> FiniteBinaryTree {
        FiniteBinaryTree::from_preorder(s.chars().map(|c| c == '1').collect()).unwrap()
    }

    fn partition(s: &[&str]) -> Vec<StandardInterval> {
        s.iter().map(|i| i.parse().unwrap()).collect()
    }

    #[test]
    fn leaf_partitions() {
        assert_eq!(tree("0").partition_of_leaves(), partition(&["[0,1]"]));
        assert_eq!(
            tree("11000").partition_of_leaves(),
            partition(&["[0,1/4]", "[1/4,1/2]", "[1/2,1]"])
        );
        assert_eq!(
            tree("1010100").partition_of_leaves(),
            partition(&["[0,1/2]", "[1/2,3/4]", "[3/4,7/8]", "[7/8,1]"])
        );
    }

    #[test]
    fn partition_to_tree() {
        assert_eq!(
            FiniteBinaryTree::from_partition(&partition(&["[0,1]"])).unwrap(),
            tree("0")
        );
        assert_eq!(
            FiniteBinaryTree::from_partition(&partition(&["[0,1/2]", "[1/2,3/4]", "[3/4,1]"]))
                .unwrap(),
            tree("10100")
        );
        assert_eq!(
            FiniteBinaryTree::from_partition(&partition(&["[0,1/4]", "[1/4,1/2]", "[1/2,1]"]))
                .unwrap(),
            tree("11000")
        );
    }

    #[test]
    fn partition_errors() {
        assert!(FiniteBinaryTree::from_partition(&partition(&["[0,1/2]"])).is_err());
        assert!(FiniteBinaryTree::from_partition(&partition(&["[1/2,1]", "[0,1/2]"])).is_err());
        assert!(FiniteBinaryTree::from_partition(&partition(&["[0,1/2]", "[1/2,3/4]"])).is_err());
        assert!(
            FiniteBinaryTree::from_partition(&partition(&["[0,1/2]", "[0,1/4]", "[1/2,1]"]))
                .is_err()
        );
        assert!(FiniteBinaryTree::from_partition(&[]).is_err());
    }

    #[test]
    fn preorder_validation() {
        assert!(FiniteBinaryTree::from_preorder(vec![true, false]).is_err());
        assert!(FiniteBinaryTree::from_preorder(vec![false, false]).is_err());
        assert!(FiniteBinaryTree::from_preorder(vec![]).is_err());
    }

    #[test]
    fn carets_in_infix_order() {
        let t = tree("1011000");
        let c: Vec<String> = t.caret_addresses().iter().map(|a| a.to_string()).collect();
        assert_eq!(c, ["", "10", "1"]);
        assert_eq!(t.spine_caret_counts(), (1, 1));
        assert_eq!(t.side_caret_counts(), (0, 2));
        assert_eq!(FiniteBinaryTree::leaf().side_caret_counts(), (0, 0));
    }
}
