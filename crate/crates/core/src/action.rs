//! The right action of F on the vertices of the infinite binary tree, and
//! traces of tracked vertices along the prefixes of a word.
//!
//! Positions are always computed from midpoints and exact PL application:
//! the position of `v` after the prefix `w(t)` is the vertex whose midpoint is
//! `w(t)(midpoint(v))`, with `w(t)` composed left to right.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coretree::{
    region_of, tree_distance, vertex_of_midpoint, Dyadic, RegionClass, VertexAddress,
};
use crate::element::{generator_pl, pl_of_element, Generator, GroupElement, PLMap, Word};
use crate::error::{Error, Result};

/// Image of `v` under the PL map `m`.
pub fn act_pl(m: &PLMap, v: &VertexAddress) -> VertexAddress {
    vertex_of_midpoint(&m.apply(&v.midpoint())).expect("F maps (0,1) onto (0,1)")
}

pub fn act_on_vertex(f: &GroupElement, v: &VertexAddress) -> VertexAddress {
    act_pl(&pl_of_element(f), v)
}

/// The interior vertex `[1/2, 3/4]` that `x1^-1` moves the pivot onto.
pub fn below_pivot() -> VertexAddress {
    VertexAddress::pivot().left()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum EventKind {
    MadeInterior,
    MadeExterior,
}

/// A tracked vertex moving between the pivot and `[1/2, 3/4]` at letter `time`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VertexEvent {
    pub vertex: VertexAddress,
    pub time: usize,
    pub kind: EventKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Counters {
    #[serde(rename = "L")]
    pub left: usize,
    #[serde(rename = "R")]
    pub right: usize,
    #[serde(rename = "I")]
    pub interior: usize,
}

impl Counters {
    pub fn total(&self) -> usize {
        self.left + self.right + self.interior
    }
}

/// Tallies of the four letters over a stretch of a word.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct LetterTally {
    pub x0: usize,
    pub x1: usize,
    pub x0inv: usize,
    pub x1inv: usize,
}

impl LetterTally {
    pub fn total(&self) -> usize {
        self.x0 + self.x1 + self.x0inv + self.x1inv
    }

    fn bump(&mut self, g: Generator) {
        match g {
            Generator::X0 => self.x0 += 1,
            Generator::X1 => self.x1 += 1,
            Generator::X0Inv => self.x0inv += 1,
            Generator::X1Inv => self.x1inv += 1,
        }
    }
}

/// Letters at positions `lo+1 ..= hi`, i.e. the letters that move the word
/// from time `lo` to time `hi`.
pub fn count_letters(w: &Word, lo: usize, hi: usize) -> Result<LetterTally> {
    check_range(lo, hi, w.len())?;
    let mut tally = LetterTally::default();
    for &g in &w.letters()[lo..hi] {
        tally.bump(g);
    }
    Ok(tally)
}

fn check_range(lo: usize, hi: usize, len: usize) -> Result<()> {
    if lo > hi || hi > len {
        return Err(Error::TimeRange { lo, hi, len });
    }
    Ok(())
}

/// Per-prefix positions of a set of followed vertices.
///
/// Two vertex lists are followed: `tracked`, whose positions, regions,
/// pivot distances and events are reported, and `counting`, over which the
/// spine/interior counters are taken. A vertex may be in both.
#[derive(Clone, Debug)]
pub struct TraceReport {
    word: Word,
    followed: Vec<VertexAddress>,
    tracked: Vec<usize>,
    counting: Vec<usize>,
    // positions[t][i] is the image of followed[i] after w(t)
    positions: Vec<Vec<VertexAddress>>,
    counters: Vec<Counters>,
    // events of every followed vertex, sorted by time then follow order
    all_events: Vec<(usize, VertexEvent)>,
}

pub fn trace(w: &Word, tracked: &[VertexAddress], counting: &[VertexAddress]) -> TraceReport {
    let mut followed: Vec<VertexAddress> = Vec::new();
    let index_of = |v: &VertexAddress, followed: &mut Vec<VertexAddress>| {
        followed.iter().position(|u| u == v).unwrap_or_else(|| {
            followed.push(v.clone());
            followed.len() - 1
        })
    };
    let tracked_idx: Vec<usize> = tracked.iter().map(|v| index_of(v, &mut followed)).collect();
    let counting_idx: Vec<usize> = counting
        .iter()
        .map(|v| index_of(v, &mut followed))
        .collect();

    let mut mids: Vec<Dyadic> = followed.iter().map(|v| v.midpoint()).collect();
    let mut positions = Vec::with_capacity(w.len() + 1);
    positions.push(followed.clone());
    for &g in w.letters() {
        let m = generator_pl(g);
        for mid in mids.iter_mut() {
            *mid = m.apply(mid);
        }
        positions.push(
            mids.iter()
                .map(|d| vertex_of_midpoint(d).expect("F maps (0,1) onto (0,1)"))
                .collect(),
        );
    }

    let counters = positions
        .iter()
        .map(|row| {
            let mut c = Counters::default();
            for &i in &counting_idx {
                match region_of(&row[i]) {
                    RegionClass::LeftSpine => c.left += 1,
                    RegionClass::RightSpine => c.right += 1,
                    RegionClass::Interior => c.interior += 1,
                }
            }
            c
        })
        .collect();

    let pivot = VertexAddress::pivot();
    let below = below_pivot();
    let mut all_events = Vec::new();
    for t in 1..positions.len() {
        for (i, v) in followed.iter().enumerate() {
            let (before, after) = (&positions[t - 1][i], &positions[t][i]);
            let kind = if *before == pivot && *after == below {
                EventKind::MadeInterior
            } else if *before == below && *after == pivot {
                EventKind::MadeExterior
            } else {
                continue;
            };
            all_events.push((
                i,
                VertexEvent {
                    vertex: v.clone(),
                    time: t,
                    kind,
                },
            ));
        }
    }

    TraceReport {
        word: w.clone(),
        followed,
        tracked: tracked_idx,
        counting: counting_idx,
        positions,
        counters,
        all_events,
    }
}

impl TraceReport {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn tracked(&self) -> Vec<VertexAddress> {
        self.tracked
            .iter()
            .map(|&i| self.followed[i].clone())
            .collect()
    }

    pub fn counting_set(&self) -> Vec<VertexAddress> {
        self.counting
            .iter()
            .map(|&i| self.followed[i].clone())
            .collect()
    }

    /// Number of time steps, `|w| + 1`.
    pub fn steps(&self) -> usize {
        self.positions.len()
    }

    fn follow_index(&self, v: &VertexAddress) -> Result<usize> {
        self.followed
            .iter()
            .position(|u| u == v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    /// Position of `v` at every time `0..=|w|`.
    pub fn positions_of(&self, v: &VertexAddress) -> Result<Vec<VertexAddress>> {
        let i = self.follow_index(v)?;
        Ok(self.positions.iter().map(|row| row[i].clone()).collect())
    }

    pub fn position(&self, v: &VertexAddress, t: usize) -> Result<&VertexAddress> {
        let i = self.follow_index(v)?;
        self.positions
            .get(t)
            .map(|row| &row[i])
            .ok_or(Error::TimeRange {
                lo: t,
                hi: t,
                len: self.word.len(),
            })
    }

    pub fn regions_of(&self, v: &VertexAddress) -> Result<Vec<RegionClass>> {
        Ok(self.positions_of(v)?.iter().map(region_of).collect())
    }

    pub fn counters(&self) -> &[Counters] {
        &self.counters
    }

    /// Events of the tracked vertices.
    pub fn events(&self) -> Vec<VertexEvent> {
        self.all_events
            .iter()
            .filter(|(i, _)| self.tracked.contains(i))
            .map(|(_, e)| e.clone())
            .collect()
    }

    /// Events of any followed vertex, counting set included.
    pub fn all_events(&self) -> impl Iterator<Item = &VertexEvent> {
        self.all_events.iter().map(|(_, e)| e)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let tracked = self.tracked();
        let pivot = VertexAddress::pivot();
        let steps: Vec<TraceStep> = (0..self.steps())
            .map(|t| {
                let row = &self.positions[t];
                let mut positions = BTreeMap::new();
                let mut regions = BTreeMap::new();
                let mut d = BTreeMap::new();
                for (&i, v) in self.tracked.iter().zip(&tracked) {
                    let key = v.to_string();
                    positions.insert(key.clone(), row[i].clone());
                    regions.insert(key.clone(), region_of(&row[i]));
                    d.insert(key, tree_distance(&row[i], &pivot));
                }
                TraceStep {
                    t,
                    letter: (t > 0).then(|| self.word.letters()[t - 1].letter().to_string()),
                    positions,
                    regions,
                    d,
                    counters: self.counters[t],
                }
            })
            .collect();
        serde_json::to_value(TraceJson {
            word: self.word.to_string(),
            tracked,
            steps,
            events: self.events(),
        })
        .expect("trace serializes")
    }
}

#[derive(Serialize)]
struct TraceStep {
    t: usize,
    letter: Option<String>,
    positions: BTreeMap<String, VertexAddress>,
    regions: BTreeMap<String, RegionClass>,
    d: BTreeMap<String, usize>,
    #[serde(rename = "C")]
    counters: Counters,
}

#[derive(Serialize)]
struct TraceJson {
    word: String,
    tracked: Vec<VertexAddress>,
    steps: Vec<TraceStep>,
    events: Vec<VertexEvent>,
}

/// Tree distance from `v` to the pivot `[1/2, 1]` at every time.
pub fn pivot_distance_series(report: &TraceReport, v: &VertexAddress) -> Result<Vec<usize>> {
    let pivot = VertexAddress::pivot();
    Ok(report
        .positions_of(v)?
        .iter()
        .map(|p| tree_distance(p, &pivot))
        .collect())
}

pub fn events_of(report: &TraceReport) -> Vec<VertexEvent> {
    report.events()
}

/// `(made interior, made exterior)` counts for events of `subset` at times
/// `lo+1 ..= hi`. Every vertex of `subset` must be followed by the trace.
pub fn interval_event_counts(
    report: &TraceReport,
    lo: usize,
    hi: usize,
    subset: &[VertexAddress],
) -> Result<(usize, usize)> {
    check_range(lo, hi, report.word.len())?;
    let idx: Vec<usize> = subset
        .iter()
        .map(|v| report.follow_index(v))
        .collect::<Result<_>>()?;
    let mut interior = 0;
    let mut exterior = 0;
    for (i, e) in &report.all_events {
        if e.time > lo && e.time <= hi && idx.contains(i) {
            match e.kind {
                EventKind::MadeInterior => interior += 1,
                EventKind::MadeExterior => exterior += 1,
            }
        }
    }
    Ok((interior, exterior))
}
