//! The word families `f_k`, `g_k` and their prefixes, the vertices tracked
//! along them, near-geodesic enumeration, ShortLex tools and a consolidated
//! verification report.
//!
//! With `a = x0`, `b = x1`, `A = x0^-1`, `B = x1^-1`:
//!
//! ```text
//! f_k = A^(k-1) B a^(2k) B A^k
//! g_k = a^(k+1) B A^(2k-1) B a^(k-1)
//! ```
//!
//! Both have length `4k+1` and represent the same element. `w_i` is the
//! prefix of `f_k` of length `3k+1+i` and `u_i` the prefix of `g_k` of length
//! `3k+2+i`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::action::{act_on_vertex, trace, EventKind};
use crate::coretree::{tree_distance, RegionClass, VertexAddress};
use crate::element::{compose, evaluate_word, CanonicalKey, Generator, GroupElement, Word};
use crate::error::{Error, Result};
use crate::metric::{LengthOracle, Limits};

use Generator::{X0Inv, X1Inv, X0, X1};

/// Family parameter `k` with the optional constants `c` (slack) and `M`
/// (fellow traveler bound). Only `k` enters the desk-scale checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParameters {
    pub k: usize,
    pub c: Option<usize>,
    pub m: Option<usize>,
}

impl FamilyParameters {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::FamilyIndex { k, index: 0 });
        }
        Ok(FamilyParameters {
            k,
            c: None,
            m: None,
        })
    }

    pub fn with_c(mut self, c: usize) -> Self {
        self.c = Some(c);
        self
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    /// `max(c, M)` rounded up to an even number.
    pub fn big_c(&self) -> usize {
        let m = self.c.unwrap_or(0).max(self.m.unwrap_or(0));
        m + m % 2
    }

    /// `C/2 + 1`.
    pub fn l(&self) -> usize {
        self.big_c() / 2 + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    F,
    G,
    WPrefix,
    UPrefix,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" => Ok(FamilyKind::F),
            "g" => Ok(FamilyKind::G),
            "w" | "w_prefix" | "w-prefix" => Ok(FamilyKind::WPrefix),
            "u" | "u_prefix" | "u-prefix" => Ok(FamilyKind::UPrefix),
            _ => Err(crate::ParseError::new(0, format!("unknown family {s:?}")).into()),
        }
    }
}

fn f_word(k: usize) -> Word {
    Word::empty()
        .power(X0Inv, k - 1)
        .power(X1Inv, 1)
        .power(X0, 2 * k)
        .power(X1Inv, 1)
        .power(X0Inv, k)
}

fn g_word(k: usize) -> Word {
    Word::empty()
        .power(X0, k + 1)
        .power(X1Inv, 1)
        .power(X0Inv, 2 * k - 1)
        .power(X1Inv, 1)
        .power(X0, k - 1)
}

/// Family word of the given kind. `i` is ignored for `F` and `G`; it ranges
/// over `0..=k` for `w_i` and `0..k` for `u_i`.
pub fn family_word(kind: FamilyKind, k: usize, i: usize) -> Result<Word> {
    if k < 2 {
        return Err(Error::FamilyIndex { k, index: i });
    }
    match kind {
        FamilyKind::F => Ok(f_word(k)),
        FamilyKind::G => Ok(g_word(k)),
        FamilyKind::WPrefix if i <= k => Ok(f_word(k).prefix(3 * k + 1 + i)),
        // the tail is x0^{+i}, so that u_{k-1} = g_k
        FamilyKind::UPrefix if i < k => Ok(g_word(k).prefix(3 * k + 2 + i)),
        _ => Err(Error::FamilyIndex { k, index: i }),
    }
}

/// The vertices followed along the family words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrackedSets {
    /// `[0, 1/2^k]`
    pub v_a: VertexAddress,
    /// `[(2^k-1)/2^k, 1]`
    pub v_b: VertexAddress,
    /// `[0, 1/2^p]` for `0 <= p < k`
    pub a: Vec<VertexAddress>,
    /// `[(2^q-1)/2^q, 1]` for `1 <= q < k`
    pub b: Vec<VertexAddress>,
    pub pivot: VertexAddress,
}

impl TrackedSets {
    /// `A` followed by `B`, the set the counters are taken over.
    pub fn counting(&self) -> Vec<VertexAddress> {
        self.a.iter().chain(&self.b).cloned().collect()
    }

    pub fn tracked(&self) -> Vec<VertexAddress> {
        vec![self.v_a.clone(), self.v_b.clone()]
    }
}

pub fn tracked_sets(k: usize) -> TrackedSets {
    TrackedSets {
        v_a: VertexAddress::left_spine(k),
        v_b: VertexAddress::right_spine(k),
        a: (0..k).map(VertexAddress::left_spine).collect(),
        b: (1..k).map(VertexAddress::right_spine).collect(),
        pivot: VertexAddress::pivot(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InteriorTimes {
    pub first: Option<usize>,
    pub last: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EventOrderVerdict {
    pub v_a: InteriorTimes,
    pub v_b: InteriorTimes,
    /// Last time `v_b` is made interior is before the first time `v_a` is.
    pub b_before_a: bool,
    /// Last time `v_a` is made interior is before the first time `v_b` is.
    pub a_before_b: bool,
}

pub fn event_order_check(w: &Word, k: usize) -> EventOrderVerdict {
    let sets = tracked_sets(k);
    let report = trace(w, &sets.tracked(), &[]);
    let times = |v: &VertexAddress| {
        let t: Vec<usize> = report
            .events()
            .into_iter()
            .filter(|e| e.vertex == *v && e.kind == EventKind::MadeInterior)
            .map(|e| e.time)
            .collect();
        InteriorTimes {
            first: t.first().copied(),
            last: t.last().copied(),
        }
    };
    let (a, b) = (times(&sets.v_a), times(&sets.v_b));
    let precedes = |x: &InteriorTimes, y: &InteriorTimes| match (x.last, y.first) {
        (Some(l), Some(f)) => l < f,
        _ => false,
    };
    EventOrderVerdict {
        b_before_a: precedes(&b, &a),
        a_before_b: precedes(&a, &b),
        v_a: a,
        v_b: b,
    }
}

/// A total order on the four generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphabetOrder([Generator; 4]);

impl AlphabetOrder {
    pub fn new(order: [Generator; 4]) -> Result<Self> {
        for g in Generator::ALL {
            if !order.contains(&g) {
                return Err(crate::ParseError::new(
                    0,
                    "alphabet order must list each generator once",
                )
                .into());
            }
        }
        Ok(AlphabetOrder(order))
    }

    pub fn generators(&self) -> [Generator; 4] {
        self.0
    }

    fn rank(&self, g: Generator) -> usize {
        self.0.iter().position(|&h| h == g).expect("total order")
    }
}

impl Default for AlphabetOrder {
    /// `x0 < x1 < x0^-1 < x1^-1`
    fn default() -> Self {
        AlphabetOrder([X0, X1, X0Inv, X1Inv])
    }
}

impl FromStr for AlphabetOrder {
    type Err = Error;

    /// Four letters, e.g. `abAB`.
    fn from_str(s: &str) -> Result<Self> {
        let letters: Vec<Generator> = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                Generator::from_letter(c)
                    .ok_or_else(|| crate::ParseError::new(i, format!("unexpected {c:?}")))
            })
            .collect::<std::result::Result<_, _>>()?;
        let order: [Generator; 4] = letters
            .try_into()
            .map_err(|_| crate::ParseError::new(0, "expected four letters"))?;
        AlphabetOrder::new(order)
    }
}

impl fmt::Display for AlphabetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|g| write!(f, "{}", g.letter()))
    }
}

/// Shorter words first, then lexicographic in `order`.
pub fn shortlex_compare(w: &Word, v: &Word, order: &AlphabetOrder) -> Ordering {
    w.len().cmp(&v.len()).then_with(|| {
        let key = |x: &Word| {
            x.letters()
                .iter()
                .map(|&g| order.rank(g))
                .collect::<Vec<_>>()
        };
        key(w).cmp(&key(v))
    })
}

/// The ShortLex-least word of each element among `words`, in ShortLex order.
pub fn shortlex_filter(words: &[Word], order: &AlphabetOrder) -> Vec<Word> {
    let mut best: HashMap<CanonicalKey, &Word> = HashMap::new();
    for w in words {
        let key = evaluate_word(w).canonical_key();
        best.entry(key)
            .and_modify(|b| {
                if shortlex_compare(w, b, order) == Ordering::Less {
                    *b = w;
                }
            })
            .or_insert(w);
    }
    let mut out: Vec<Word> = best.into_values().cloned().collect();
    out.sort_by(|a, b| shortlex_compare(a, b, order));
    out
}

/// Every word of length at most `n`, in ShortLex order.
pub fn all_words(n: usize, order: &AlphabetOrder) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| order.generators().map(|g| w.clone().power(g, 1)))
            .collect();
        out.extend_from_slice(&layer);
    }
    out
}

/// Every word `w` with `w = g` and `|w| <= |g| + c`, in ShortLex order.
///
/// Depth-first over words, cutting a branch once the distance from the
/// current prefix to `g` exceeds the letters left. Distances come from the
/// translate `g * ball(|g|+c)`, which is exact within the budget.
pub fn enumerate_representatives(
    g: &GroupElement,
    c: usize,
    oracle: &mut LengthOracle,
) -> Result<Vec<Word>> {
    let budget = oracle.geodesic_length(g)? + c;
    let ball = oracle.ensure_radius(budget)?;
    // h -> |h^-1 g| for h = g x, |x| <= budget; the ball is closed under inverses
    let near: HashMap<CanonicalKey, usize> = ball
        .iter()
        .map(|(x, l)| (compose(g, x).canonical_key(), l))
        .collect();
    let order = AlphabetOrder::default();
    let mut out = Vec::new();
    let mut word = Vec::new();
    search(
        &GroupElement::identity(),
        budget,
        &near,
        &order,
        &mut word,
        &mut out,
    );
    out.sort_by(|a, b| shortlex_compare(a, b, &order));
    Ok(out)
}

fn search(
    h: &GroupElement,
    left: usize,
    near: &HashMap<CanonicalKey, usize>,
    order: &AlphabetOrder,
    word: &mut Vec<Generator>,
    out: &mut Vec<Word>,
) {
    match near.get(&h.canonical_key()) {
        Some(&d) if d <= left => {
            if d == 0 {
                out.push(Word::new(word.clone()));
            }
        }
        _ => return,
    }
    if left == 0 {
        return;
    }
    for s in order.generators() {
        word.push(s);
        let next = compose(h, &crate::element::generator_element(s));
        search(&next, left - 1, near, order, word, out);
        word.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for ItemStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ItemStatus::Pass => "PASS",
            ItemStatus::Fail => "FAIL",
            ItemStatus::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportItem {
    pub id: usize,
    pub name: String,
    pub status: ItemStatus,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub k: usize,
    pub items: Vec<ReportItem>,
}

impl VerificationReport {
    /// No item failed. Skipped items do not count against the report.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != ItemStatus::Fail)
    }

    pub fn item(&self, id: usize) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["passed"] = self.passed().into();
        v
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("family k = {}\n", self.k);
        for item in &self.items {
            s.push_str(&format!(
                "({}) {:<4} {:<22} {}\n",
                item.id, item.status, item.name, item.detail
            ));
            for n in &item.notes {
                s.push_str(&format!("            note: {n}\n"));
            }
        }
        s.push_str(if self.passed() {
            "all items pass\n"
        } else {
            "some items FAILED\n"
        });
        s
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Run the breadth-first geodesic length check.
    pub geodesic: bool,
    pub limits: Limits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            geodesic: true,
            limits: Limits::from_env(),
        }
    }
}

fn item(id: usize, name: &str, ok: bool, detail: String) -> ReportItem {
    ReportItem {
        id,
        name: name.into(),
        status: if ok {
            ItemStatus::Pass
        } else {
            ItemStatus::Fail
        },
        detail,
        notes: Vec::new(),
    }
}

/// Runs the computable checks on the family at `k`. Failures become report
/// entries; only an invalid `k` is an error.
pub fn verify_family(k: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    FamilyParameters::new(k)?;
    let f = family_word(FamilyKind::F, k, 0)?;
    let g = family_word(FamilyKind::G, k, 0)?;
    let fe = evaluate_word(&f);
    let ge = evaluate_word(&g);
    let sets = tracked_sets(k);
    let mut items = Vec::new();

    let same = fe.canonical_key() == ge.canonical_key();
    items.push(item(
        1,
        "f_k = g_k",
        same,
        format!("key {}", fe.canonical_key()),
    ));

    let mut bad = Vec::new();
    if f.len() != 4 * k + 1 {
        bad.push(format!("|f_k| = {}", f.len()));
    }
    if g.len() != 4 * k + 1 {
        bad.push(format!("|g_k| = {}", g.len()));
    }
    for i in 0..=k {
        let w = family_word(FamilyKind::WPrefix, k, i)?;
        if w.len() != 3 * k + 1 + i {
            bad.push(format!("|w_{i}| = {}", w.len()));
        }
    }
    for i in 0..k {
        let u = family_word(FamilyKind::UPrefix, k, i)?;
        if u.len() != 3 * k + 2 + i {
            bad.push(format!("|u_{i}| = {}", u.len()));
        }
    }
    if family_word(FamilyKind::WPrefix, k, k)? != f {
        bad.push("w_k != f_k".into());
    }
    if family_word(FamilyKind::UPrefix, k, k - 1)? != g {
        bad.push("u_(k-1) != g_k".into());
    }
    let mut it = item(
        2,
        "word lengths",
        bad.is_empty(),
        if bad.is_empty() {
            format!("|f_k| = |g_k| = {}, prefixes 3k+1+i and 3k+2+i", 4 * k + 1)
        } else {
            bad.join("; ")
        },
    );
    it.notes.push(
        "u_i is taken with tail x0^{+i}; the printed x0^{-i} would not give u_(k-1) = g_k".into(),
    );
    items.push(it);

    let d = fe.domain().side_caret_counts();
    let r = fe.range().side_caret_counts();
    items.push(item(
        3,
        "side caret counts",
        d == (k + 1, k + 1) && r == (k + 1, k + 1),
        format!("domain {d:?}, range {r:?}, expected ({0}, {0})", k + 1),
    ));

    if options.geodesic {
        let mut oracle = LengthOracle::new(options.limits);
        let it = match oracle.geodesic_length(&fe) {
            Ok(l) => item(
                4,
                "geodesic length",
                l == 4 * k + 1,
                format!("|f_k| = {l}, expected {}", 4 * k + 1),
            ),
            Err(e) => ReportItem {
                status: ItemStatus::Skipped,
                ..item(4, "geodesic length", false, format!("not computed: {e}"))
            },
        };
        items.push(it);
    } else {
        items.push(ReportItem {
            status: ItemStatus::Skipped,
            ..item(4, "geodesic length", false, "disabled".into())
        });
    }

    items.push(event_item(k, &sets)?);

    let report = trace(&Word::empty(), &sets.tracked(), &sets.counting());
    let c0 = report.counters()[0];
    let da = tree_distance(&sets.v_a, &sets.pivot);
    items.push(item(
        6,
        "initial counters",
        (c0.left, c0.right, c0.interior) == (k, k - 1, 0) && da == k + 1,
        format!(
            "(L, R, I) = ({}, {}, {}), d_a = {da}",
            c0.left, c0.right, c0.interior
        ),
    ));

    let ia = act_on_vertex(&fe, &sets.v_a);
    let ib = act_on_vertex(&fe, &sets.v_b);
    items.push(item(
        7,
        "final positions",
        ia.region() == RegionClass::Interior && ib.region() == RegionClass::Interior,
        format!("v_a -> {}, v_b -> {}", ia.to_interval(), ib.to_interval()),
    ));

    Ok(VerificationReport { k, items })
}

/// `{k, 3k+1}` on every `w_i`, `{k+2, 3k+2}` on every `u_i`.
fn event_item(k: usize, sets: &TrackedSets) -> Result<ReportItem> {
    let tracked = sets.tracked();
    let label = |v: &VertexAddress| if *v == sets.v_a { "v_a" } else { "v_b" };
    let interior = |w: &Word| -> Vec<(usize, &'static str)> {
        trace(w, &tracked, &[])
            .events()
            .into_iter()
            .filter(|e| e.kind == EventKind::MadeInterior)
            .map(|e| (e.time, label(&e.vertex)))
            .collect()
    };
    let mut bad = Vec::new();
    let mut f_events = Vec::new();
    let mut g_events = Vec::new();
    for i in 0..=k {
        let ev = interior(&family_word(FamilyKind::WPrefix, k, i)?);
        if ev.iter().map(|e| e.0).collect::<Vec<_>>() != [k, 3 * k + 1] {
            bad.push(format!("w_{i}: {ev:?}"));
        }
        f_events = ev;
    }
    for i in 0..k {
        let ev = interior(&family_word(FamilyKind::UPrefix, k, i)?);
        if ev.iter().map(|e| e.0).collect::<Vec<_>>() != [k + 2, 3 * k + 2] {
            bad.push(format!("u_{i}: {ev:?}"));
        }
        g_events = ev;
    }
    let show = |ev: &[(usize, &str)]| {
        ev.iter()
            .map(|(t, v)| format!("{v}@{t}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut it = item(
        5,
        "event times",
        bad.is_empty(),
        if bad.is_empty() {
            format!("f_k: {}; g_k: {}", show(&f_events), show(&g_events))
        } else {
            bad.join("; ")
        },
    );
    it.notes.push(
        "times are checked, vertex labels are not: on f_k the earlier event belongs to v_b, \
         on g_k to v_a"
            .into(),
    );
    Ok(it)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters() {
        let p = FamilyParameters::new(5).unwrap();
        assert_eq!((p.big_c(), p.l()), (0, 1));
        let p = p.with_c(3).with_m(2);
        assert_eq!((p.big_c(), p.l()), (4, 3));
        assert_eq!(p.with_m(6).big_c(), 6);
        assert!(FamilyParameters::new(1).is_err());
    }

    #[test]
    fn words() {
        assert_eq!(
            family_word(FamilyKind::F, 2, 0).unwrap().to_string(),
            "ABaaaaBAA"
        );
        assert_eq!(
            family_word(FamilyKind::G, 2, 0).unwrap().to_string(),
            "aaaBAAABa"
        );
        assert_eq!(family_word(FamilyKind::WPrefix, 2, 0).unwrap().len(), 7);
        assert_eq!(
            family_word(FamilyKind::UPrefix, 2, 1).unwrap(),
            family_word(FamilyKind::G, 2, 0).unwrap()
        );
        assert!(matches!(
            family_word(FamilyKind::WPrefix, 2, 3),
            Err(Error::FamilyIndex { k: 2, index: 3 })
        ));
        assert!(family_word(FamilyKind::UPrefix, 2, 2).is_err());
        assert!(family_word(FamilyKind::F, 1, 0).is_err());
    }

    #[test]
    fn tracked_k2() {
        let s = tracked_sets(2);
        let show = |v: &[VertexAddress]| {
            v.iter()
                .map(|a| a.to_interval().to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(show(&s.a), ["[0/2^0,1/2^0]", "[0/2^1,1/2^1]"]);
        assert_eq!(show(&s.b), ["[1/2^1,2/2^1]"]);
        assert_eq!(s.v_a.to_interval().to_string(), "[0/2^2,1/2^2]");
        assert_eq!(s.v_b.to_interval().to_string(), "[3/2^2,4/2^2]");
        assert_eq!(tree_distance(&s.v_a, &s.pivot), 3);
    }

    #[test]
    fn event_orders() {
        let f = event_order_check(&family_word(FamilyKind::F, 2, 0).unwrap(), 2);
        assert_eq!((f.v_b.first, f.v_a.first), (Some(2), Some(7)));
        assert!(f.b_before_a && !f.a_before_b);
        let g = event_order_check(&family_word(FamilyKind::G, 2, 0).unwrap(), 2);
        assert_eq!((g.v_a.first, g.v_b.first), (Some(4), Some(8)));
        assert!(g.a_before_b && !g.b_before_a);
        let e = event_order_check(&Word::empty(), 2);
        assert!(!e.a_before_b && !e.b_before_a && e.v_a.first.is_none());
    }

    #[test]
    fn shortlex() {
        let o = AlphabetOrder::default();
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(shortlex_compare(&w(""), &w("a"), &o), Ordering::Less);
        assert_eq!(shortlex_compare(&w("ab"), &w("aB"), &o), Ordering::Less);
        assert_eq!(shortlex_compare(&w("B"), &w("aa"), &o), Ordering::Less);
        let rev: AlphabetOrder = "BAba".parse().unwrap();
        assert_eq!(
            shortlex_compare(&w("ab"), &w("aB"), &rev),
            Ordering::Greater
        );
        assert!("abA".parse::<AlphabetOrder>().is_err());
        assert!("abAa".parse::<AlphabetOrder>().is_err());
        let kept = shortlex_filter(&[w("aA"), w(""), w("b"), w("Bbb")], &o);
        assert_eq!(kept, vec![w(""), w("b")]);
        assert_eq!(all_words(2, &o).len(), 21);
    }

    #[test]
    fn enumerate_small() {
        let mut oracle = LengthOracle::new(Limits::default());
        let id = GroupElement::identity();
        assert_eq!(
            enumerate_representatives(&id, 0, &mut oracle).unwrap(),
            vec![Word::empty()]
        );
        let two = enumerate_representatives(&id, 2, &mut oracle).unwrap();
        // the empty word and the four free cancellations
        assert_eq!(two.len(), 5);
        assert!(two.iter().all(|w| evaluate_word(w).is_identity()));
    }

    #[test]
    fn verify_k2() {
        let report = verify_family(2, &VerifyOptions::default()).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.items.iter().all(|i| i.status == ItemStatus::Pass));
        assert_eq!(report.to_json()["passed"], true);
    }
}
