//! Table-driven geodesic length in the style of Fordham's caret classification.
//!
//! Carets of each tree of a reduced pair are numbered in infix order and
//! classified by position (left spine, right spine, interior) and by their
//! children. Carets with the same number in the two trees are paired and the
//! length is the sum of a weight per (domain type, range type) pair.
//!
//! Type names and weights come from a text file:
//!
//! ```text
//! # comment
//! [classify]
//! L0  = left-first
//! LL  = left-other
//! I0  = interior-no-right-child
//! IR  = interior-right-child
//! R0  = right-no-right-child
//! RNI = right-exterior-successor
//! RI  = right-interior-successor
//! [weights]
//! L0 L0 0
//! LL LL 2
//! ...
//! ```
//!
//! A weight line `s t w` covers both `(s, t)` and `(t, s)` unless the reverse
//! pair has its own line. A table only answers queries after it has agreed
//! with breadth-first lengths on every element of the validation ball.

use std::collections::HashMap;

use super::Ball;
use crate::coretree::{region_of, RegionClass, VertexAddress};
use crate::element::{FiniteBinaryTree, GroupElement};
use crate::error::{Error, Result};

/// The bundled weight table.
pub const DEFAULT_FORDHAM_TABLE: &str = include_str!("../../data/fordham.table");

/// Radius of the ball a table must reproduce exactly.
pub const FORDHAM_VALIDATION_RADIUS: usize = 8;

/// Structural caret classes. Every caret matches exactly one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CaretRule {
    /// Caret 0 in infix order, the lowest caret on the left spine.
    LeftFirst,
    /// Any other caret on the left spine, the root included.
    LeftOther,
    /// Interior caret whose right child is a leaf.
    InteriorNoRightChild,
    /// Interior caret whose right child is a caret.
    InteriorRightChild,
    /// Right-spine caret whose right child is a leaf.
    RightNoRightChild,
    /// Right-spine caret with a right child caret, followed in infix order
    /// by another right-spine caret.
    RightExteriorSuccessor,
    /// Right-spine caret with a right child caret, followed in infix order
    /// by an interior caret.
    RightInteriorSuccessor,
}

impl CaretRule {
    const NAMES: [(&'static str, CaretRule); 7] = [
        ("left-first", CaretRule::LeftFirst),
        ("left-other", CaretRule::LeftOther),
        ("interior-no-right-child", CaretRule::InteriorNoRightChild),
        ("interior-right-child", CaretRule::InteriorRightChild),
        ("right-no-right-child", CaretRule::RightNoRightChild),
        (
            "right-exterior-successor",
            CaretRule::RightExteriorSuccessor,
        ),
        (
            "right-interior-successor",
            CaretRule::RightInteriorSuccessor,
        ),
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES
            .iter()
            .find(|(_, r)| *r == self)
            .expect("named")
            .0
    }

    fn from_name(s: &str) -> Option<CaretRule> {
        Self::NAMES.iter().find(|(n, _)| *n == s).map(|(_, r)| *r)
    }

    /// Rule of every caret of `tree`, in infix order.
    pub fn classify(tree: &FiniteBinaryTree) -> Vec<CaretRule> {
        let carets = tree.caret_addresses();
        let is_caret: std::collections::HashSet<&VertexAddress> = carets.iter().collect();
        carets
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let right_caret = is_caret.contains(&c.right());
                match region_of(c) {
                    RegionClass::LeftSpine if i == 0 => CaretRule::LeftFirst,
                    RegionClass::LeftSpine => CaretRule::LeftOther,
                    RegionClass::Interior if right_caret => CaretRule::InteriorRightChild,
                    RegionClass::Interior => CaretRule::InteriorNoRightChild,
                    RegionClass::RightSpine if !right_caret => CaretRule::RightNoRightChild,
                    RegionClass::RightSpine => {
                        // a right child caret guarantees a successor
                        if carets[i + 1].region() == RegionClass::Interior {
                            CaretRule::RightInteriorSuccessor
                        } else {
                            CaretRule::RightExteriorSuccessor
                        }
                    }
                }
            })
            .collect()
    }
}

/// A parsed, not yet validated, weight table.
#[derive(Clone, Debug)]
pub struct FordhamTable {
    names: HashMap<CaretRule, String>,
    weights: HashMap<(CaretRule, CaretRule), usize>,
}

impl FordhamTable {
    pub fn parse(text: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Section {
            None,
            Classify,
            Weights,
        }
        let mut section = Section::None;
        let mut by_name: HashMap<String, CaretRule> = HashMap::new();
        let mut explicit: HashMap<(CaretRule, CaretRule), usize> = HashMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: String| Error::Table(format!("line {}: {m}", n + 1));
            match line {
                "[classify]" => section = Section::Classify,
                "[weights]" => section = Section::Weights,
                _ => match section {
                    Section::None => return Err(err("content before a section header".into())),
                    Section::Classify => {
                        let (name, rule) = line
                            .split_once('=')
                            .ok_or_else(|| err("expected `NAME = rule`".into()))?;
                        let rule = CaretRule::from_name(rule.trim())
                            .ok_or_else(|| err(format!("unknown rule {:?}", rule.trim())))?;
                        if by_name.values().any(|r| *r == rule) {
                            return Err(err(format!("rule {} assigned twice", rule.name())));
                        }
                        by_name.insert(name.trim().to_string(), rule);
                    }
                    Section::Weights => {
                        let parts: Vec<&str> = line.split_whitespace().collect();
                        let [a, b, w] = parts[..] else {
                            return Err(err("expected `type type weight`".into()));
                        };
                        let lookup = |s: &str| {
                            by_name
                                .get(s)
                                .copied()
                                .ok_or_else(|| err(format!("undeclared type {s:?}")))
                        };
                        let w: usize = w.parse().map_err(|_| err(format!("bad weight {w:?}")))?;
                        explicit.insert((lookup(a)?, lookup(b)?), w);
                    }
                },
            }
        }
        if by_name.len() != CaretRule::NAMES.len() {
            return Err(Error::Table(format!(
                "expected {} caret types, found {}",
                CaretRule::NAMES.len(),
                by_name.len()
            )));
        }
        let mut weights = explicit.clone();
        for (&(a, b), &w) in &explicit {
            weights.entry((b, a)).or_insert(w);
        }
        Ok(FordhamTable {
            names: by_name.into_iter().map(|(n, r)| (r, n)).collect(),
            weights,
        })
    }

    pub fn type_name(&self, rule: CaretRule) -> &str {
        &self.names[&rule]
    }

    fn length(&self, g: &GroupElement) -> Result<usize> {
        let d = CaretRule::classify(g.domain());
        let r = CaretRule::classify(g.range());
        d.iter().zip(&r).try_fold(0usize, |acc, (&a, &b)| {
            self.weights.get(&(a, b)).map(|w| acc + w).ok_or_else(|| {
                Error::Table(format!(
                    "no weight for pair ({}, {})",
                    self.type_name(a),
                    self.type_name(b)
                ))
            })
        })
    }

    /// Checks the table against every element of `ball`, which must have at
    /// least the validation radius.
    pub fn validate(self, ball: &Ball) -> Result<FordhamBackend> {
        if ball.radius() < FORDHAM_VALIDATION_RADIUS {
            return Err(Error::Table(format!(
                "validation needs a ball of radius {FORDHAM_VALIDATION_RADIUS}, got {}",
                ball.radius()
            )));
        }
        for (g, len) in ball.iter() {
            let got = self.length(g)?;
            if got != len {
                return Err(Error::Table(format!(
                    "table gives {got} but breadth-first length is {len} for {g}"
                )));
            }
        }
        Ok(FordhamBackend { table: self })
    }
}

/// A table that has passed validation.
#[derive(Clone, Debug)]
pub struct FordhamBackend {
    table: FordhamTable,
}

impl FordhamBackend {
    pub fn table(&self) -> &FordhamTable {
        &self.table
    }

    pub fn length(&self, g: &GroupElement) -> Result<usize> {
        self.table.length(g)
    }
}

/// Length from a validated table; `None` reports the missing table.
pub fn fordham_length(g: &GroupElement, backend: Option<&FordhamBackend>) -> Result<usize> {
    backend
        .ok_or_else(|| Error::Table("no validated table loaded".into()))?
        .length(g)
}
