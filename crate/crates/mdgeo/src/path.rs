//! Piecewise paths through the model and the geodesic test.
//!
//! A path is a chain of planar segments and string traversals. A path is a
//! geodesic when, for every two of its points, at least one shortest model
//! curve between them lies within the path's point set. That reading makes
//! the closed string loops and the knotted lines of the model genuine lines
//! while still rejecting detours (a shortest curve confined to the point set
//! is found exactly on a breakpoint graph of the set).

use crate::config::{MdConfig, TOL};
use crate::metric::{distance, Distance};
use crate::point::{make_point, PointRef, RawPoint};
use serde::{Deserialize, Serialize};
use std::collections::{BinaryHeap, HashMap};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    Delta1,
    Delta2,
}

/// One leg of a path: a straight planar segment inside a half-plane, or a
/// directed traversal of a string arclength interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Leg {
    Planar {
        region: Region,
        from: [f64; 2],
        to: [f64; 2],
    },
    Str {
        id: u8,
        from_t: f64,
        to_t: f64,
    },
}

impl Leg {
    pub fn length(&self) -> f64 {
        match self {
            Leg::Planar { from, to, .. } => dist2(from, to),
            Leg::Str { from_t, to_t, .. } => (to_t - from_t).abs(),
        }
    }

    fn reversed(&self) -> Leg {
        match self {
            Leg::Planar { region, from, to } => Leg::Planar {
                region: *region,
                from: *to,
                to: *from,
            },
            Leg::Str { id, from_t, to_t } => Leg::Str {
                id: *id,
                from_t: *to_t,
                to_t: *from_t,
            },
        }
    }
}

pub fn dist2(a: &[f64; 2], b: &[f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PathError {
    #[error("malformed path: {0}")]
    Malformed(String),
    #[error("point {0} does not lie on the path")]
    PointNotOnPath(String),
}

/// A piecewise path: either a degenerate single point or a chain of legs.
///
/// `open_start` / `open_finish` mark an end whose final coordinate lies on
/// the excluded frontier f2: the coordinate is stored on the leg but does not
/// belong to the path's point set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PathRep {
    Singleton(PointRef),
    Chain {
        legs: Vec<Leg>,
        #[serde(default)]
        open_start: bool,
        #[serde(default)]
        open_finish: bool,
    },
}

/// Canonicalizes a planar coordinate to a point, if it is in the model.
pub fn planar_point(region: Region, xy: [f64; 2], cfg: &MdConfig) -> Result<PointRef, PathError> {
    let raw = match region {
        Region::Delta1 => RawPoint::Planar1(xy[0], xy[1]),
        Region::Delta2 => RawPoint::Planar2(xy[0], xy[1]),
    };
    make_point(raw, cfg).map_err(|e| PathError::Malformed(e.to_string()))
}

/// Planar coordinates of a point within the given region (gates included).
pub fn coords_in(region: Region, p: &PointRef, cfg: &MdConfig) -> Option<[f64; 2]> {
    match region {
        Region::Delta1 => p.xy_in_delta1(cfg),
        Region::Delta2 => p.xy_in_delta2(cfg),
    }
}

fn string_param_point(id: u8, t: f64, cfg: &MdConfig) -> Result<PointRef, PathError> {
    make_point(RawPoint::OnString(id, t), cfg).map_err(|e| PathError::Malformed(e.to_string()))
}

impl PathRep {
    /// The degenerate single-point path.
    pub fn singleton(p: PointRef) -> PathRep {
        PathRep::Singleton(p)
    }

    /// Builds and validates a chain path.
    pub fn from_legs(legs: Vec<Leg>, cfg: &MdConfig) -> Result<PathRep, PathError> {
        PathRep::from_legs_open(legs, false, false, cfg)
    }

    pub fn from_legs_open(
        legs: Vec<Leg>,
        open_start: bool,
        open_finish: bool,
        cfg: &MdConfig,
    ) -> Result<PathRep, PathError> {
        let p = PathRep::Chain {
            legs,
            open_start,
            open_finish,
        };
        p.check(cfg)?;
        Ok(p)
    }

    pub fn legs(&self) -> &[Leg] {
        match self {
            PathRep::Singleton(_) => &[],
            PathRep::Chain { legs, .. } => legs,
        }
    }

    pub fn is_singleton(&self) -> bool {
        matches!(self, PathRep::Singleton(_))
    }

    pub fn open_start(&self) -> bool {
        matches!(self, PathRep::Chain { open_start: true, .. })
    }

    pub fn open_finish(&self) -> bool {
        matches!(self, PathRep::Chain { open_finish: true, .. })
    }

    pub fn length(&self) -> f64 {
        self.legs().iter().map(Leg::length).sum()
    }

    fn leg_endpoint(&self, i: usize, finish_side: bool, cfg: &MdConfig) -> Option<PointRef> {
        let legs = self.legs();
        let open = if finish_side {
            self.open_finish() && i + 1 == legs.len()
        } else {
            self.open_start() && i == 0
        };
        if open {
            return None;
        }
        match &legs[i] {
            Leg::Planar { region, from, to } => {
                let xy = if finish_side { to } else { from };
                planar_point(*region, *xy, cfg).ok()
            }
            Leg::Str { id, from_t, to_t } => {
                let t = if finish_side { to_t } else { from_t };
                string_param_point(*id, *t, cfg).ok()
            }
        }
    }

    /// First point of the path; `None` when the start end is open.
    pub fn start_point(&self, cfg: &MdConfig) -> Option<PointRef> {
        match self {
            PathRep::Singleton(p) => Some(p.clone()),
            PathRep::Chain { .. } => self.leg_endpoint(0, false, cfg),
        }
    }

    /// Final point of the path; `None` when the finish end is open.
    pub fn finish_point(&self, cfg: &MdConfig) -> Option<PointRef> {
        match self {
            PathRep::Singleton(p) => Some(p.clone()),
            PathRep::Chain { legs, .. } => self.leg_endpoint(legs.len() - 1, true, cfg),
        }
    }

    /// A closed path: positive length and coinciding (non-open) endpoints.
    pub fn is_closed(&self, cfg: &MdConfig) -> bool {
        if self.legs().is_empty() || self.open_start() || self.open_finish() {
            return false;
        }
        match (self.start_point(cfg), self.finish_point(cfg)) {
            (Some(a), Some(b)) => a.approx_eq(&b),
            _ => false,
        }
    }

    pub fn reverse(&self) -> PathRep {
        match self {
            PathRep::Singleton(p) => PathRep::Singleton(p.clone()),
            PathRep::Chain {
                legs,
                open_start,
                open_finish,
            } => PathRep::Chain {
                legs: legs.iter().rev().map(Leg::reversed).collect(),
                open_start: *open_finish,
                open_finish: *open_start,
            },
        }
    }

    /// Structural validation: chained endpoints, legs inside their regions,
    /// no repeated string coverage, isolated points only as singletons.
    pub fn check(&self, cfg: &MdConfig) -> Result<(), PathError> {
        let g = cfg.gap_width;
        let (legs, open_start, open_finish) = match self {
            PathRep::Singleton(_) => return Ok(()),
            PathRep::Chain {
                legs,
                open_start,
                open_finish,
            } => (legs, *open_start, *open_finish),
        };
        if legs.is_empty() {
            return Err(PathError::Malformed("chain path with no legs".into()));
        }
        for (i, leg) in legs.iter().enumerate() {
            if !leg.length().is_finite() || leg.length() <= TOL {
                return Err(PathError::Malformed(format!("leg {i} has zero length")));
            }
            match leg {
                Leg::Planar { region, from, to } => {
                    for xy in [from, to] {
                        if !xy[0].is_finite() || !xy[1].is_finite() {
                            return Err(PathError::Malformed(format!("leg {i}: non-finite coordinate")));
                        }
                        match region {
                            Region::Delta1 => {
                                if xy[0] > TOL {
                                    return Err(PathError::Malformed(format!(
                                        "leg {i}: delta1 requires x <= 0"
                                    )));
                                }
                            }
                            Region::Delta2 => {
                                if xy[0] < g - TOL {
                                    return Err(PathError::Malformed(format!(
                                        "leg {i}: delta2 requires x >= {g}"
                                    )));
                                }
                            }
                        }
                    }
                    if *region == Region::Delta2 {
                        // Points on f2 are not in the model except Q; an open
                        // end may store the limit coordinate.
                        let ends = [(from, i == 0 && open_start), (to, i + 1 == legs.len() && open_finish)];
                        for (xy, open_here) in ends {
                            let on_f2 = (xy[0] - g).abs() <= TOL;
                            let is_q = on_f2 && xy[1].abs() <= TOL;
                            if on_f2 && !is_q && !open_here {
                                return Err(PathError::Malformed(format!(
                                    "leg {i}: endpoint on the excluded frontier f2"
                                )));
                            }
                        }
                        if (from[0] - g).abs() <= TOL && (to[0] - g).abs() <= TOL {
                            return Err(PathError::Malformed(format!(
                                "leg {i}: segment lies on the excluded frontier f2"
                            )));
                        }
                    }
                }
                Leg::Str { id, from_t, to_t } => {
                    if !(1..=3).contains(id) {
                        return Err(PathError::Malformed(format!("leg {i}: bad string id {id}")));
                    }
                    let len = cfg.string_len(*id);
                    for t in [from_t, to_t] {
                        if *t < -TOL || *t > len + TOL {
                            return Err(PathError::Malformed(format!(
                                "leg {i}: arclength {t} outside [0, {len}]"
                            )));
                        }
                    }
                }
            }
        }
        for i in 0..legs.len() - 1 {
            let a = self.leg_endpoint(i, true, cfg);
            let b = self.leg_endpoint(i + 1, false, cfg);
            match (a, b) {
                (Some(a), Some(b)) if a.approx_eq(&b) => {}
                _ => {
                    return Err(PathError::Malformed(format!(
                        "legs {i} and {} do not share an endpoint",
                        i + 1
                    )))
                }
            }
        }
        for (flag, idx, finish_side) in [(open_start, 0, false), (open_finish, legs.len() - 1, true)] {
            if !flag {
                continue;
            }
            let ok = match &legs[idx] {
                Leg::Planar { region: Region::Delta2, from, to } => {
                    let xy = if finish_side { to } else { from };
                    (xy[0] - g).abs() <= TOL && xy[1].abs() > TOL
                }
                _ => false,
            };
            if !ok {
                return Err(PathError::Malformed(
                    "open end requires a delta2 leg reaching f2 away from Q".into(),
                ));
            }
        }
        // A string may not be traversed twice over overlapping arcs.
        for (i, a) in legs.iter().enumerate() {
            for b in legs.iter().skip(i + 1) {
                if let (Leg::Str { id: ia, from_t: a0, to_t: a1 }, Leg::Str { id: ib, from_t: b0, to_t: b1 }) = (a, b)
                {
                    if ia == ib {
                        let (alo, ahi) = (a0.min(*a1), a0.max(*a1));
                        let (blo, bhi) = (b0.min(*b1), b0.max(*b1));
                        if alo.max(blo) + TOL < ahi.min(bhi) {
                            return Err(PathError::Malformed(format!(
                                "string {ia} traversed twice over overlapping arcs"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Cumulative parameter at each leg boundary (last entry = length).
    pub fn cumulative(&self) -> Vec<f64> {
        let legs = self.legs();
        let mut acc = Vec::with_capacity(legs.len() + 1);
        let mut s = 0.0;
        acc.push(0.0);
        for l in legs {
            s += l.length();
            acc.push(s);
        }
        acc
    }

    /// All traversal parameters at which the path passes through `p`.
    pub fn occurrences(&self, p: &PointRef, cfg: &MdConfig) -> Vec<f64> {
        let mut out = Vec::new();
        if let PathRep::Singleton(s) = self {
            if s.approx_eq(p) {
                out.push(0.0);
            }
            return out;
        }
        let cum = self.cumulative();
        for (i, leg) in self.legs().iter().enumerate() {
            match leg {
                Leg::Planar { region, from, to } => {
                    if let Some(xy) = coords_in(*region, p, cfg) {
                        if let Some(s) = project_on_segment(from, to, &xy) {
                            out.push(cum[i] + s);
                        }
                    }
                }
                Leg::Str { id, from_t, to_t } => {
                    let t = match p {
                        PointRef::OnString { id: pid, t } if pid == id => Some(*t),
                        PointRef::GateP => Some(0.0),
                        PointRef::GateQ => Some(cfg.string_len(*id)),
                        _ => None,
                    };
                    if let Some(t) = t {
                        let (lo, hi) = (from_t.min(*to_t), from_t.max(*to_t));
                        if t >= lo - TOL && t <= hi + TOL {
                            out.push(cum[i] + (t - from_t).abs());
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.dedup_by(|a, b| (*a - *b).abs() <= 1e-7);
        out
    }

    /// First traversal parameter of `p`, or an error when off the path.
    pub fn param_of(&self, p: &PointRef, cfg: &MdConfig) -> Result<f64, PathError> {
        self.occurrences(p, cfg)
            .first()
            .copied()
            .ok_or_else(|| PathError::PointNotOnPath(p.to_string()))
    }

    /// Sample points used by the geodesic test: every leg endpoint plus every
    /// leg midpoint (open endpoints excluded).
    pub fn sample_points(&self, cfg: &MdConfig) -> Vec<PointRef> {
        let mut out: Vec<PointRef> = Vec::new();
        if let PathRep::Singleton(p) = self {
            out.push(p.clone());
            return out;
        }
        let push = |p: Option<PointRef>, out: &mut Vec<PointRef>| {
            if let Some(p) = p {
                if !out.iter().any(|q| q.approx_eq(&p)) {
                    out.push(p);
                }
            }
        };
        for (i, leg) in self.legs().iter().enumerate() {
            push(self.leg_endpoint(i, false, cfg), &mut out);
            push(self.leg_endpoint(i, true, cfg), &mut out);
            let mid = match leg {
                Leg::Planar { region, from, to } => {
                    let m = [(from[0] + to[0]) / 2.0, (from[1] + to[1]) / 2.0];
                    planar_point(*region, m, cfg).ok()
                }
                Leg::Str { id, from_t, to_t } => {
                    string_param_point(*id, (from_t + to_t) / 2.0, cfg).ok()
                }
            };
            push(mid, &mut out);
        }
        out
    }

    /// The contiguous sub-path between two traversal parameters (`p0 <= p1`).
    pub fn subpath(&self, p0: f64, p1: f64, cfg: &MdConfig) -> Result<PathRep, PathError> {
        let cum = self.cumulative();
        let total = cum.last().copied().unwrap_or(0.0);
        if p0 < -TOL || p1 > total + TOL || p0 > p1 + TOL {
            return Err(PathError::Malformed(format!(
                "subpath parameters [{p0}, {p1}] outside [0, {total}]"
            )));
        }
        if (p1 - p0).abs() <= TOL {
            let p = self.point_at(p0, cfg)?;
            return Ok(PathRep::singleton(p));
        }
        let mut legs = Vec::new();
        for (i, leg) in self.legs().iter().enumerate() {
            let (a, b) = (cum[i], cum[i + 1]);
            let lo = p0.max(a);
            let hi = p1.min(b);
            if hi - lo <= TOL {
                continue;
            }
            legs.push(slice_leg(leg, lo - a, hi - a));
        }
        PathRep::from_legs(legs, cfg)
    }

    /// The canonical point at a traversal parameter.
    pub fn point_at(&self, p: f64, cfg: &MdConfig) -> Result<PointRef, PathError> {
        if let PathRep::Singleton(s) = self {
            return Ok(s.clone());
        }
        let cum = self.cumulative();
        let total = *cum.last().unwrap();
        let p = p.clamp(0.0, total);
        for (i, leg) in self.legs().iter().enumerate() {
            if p <= cum[i + 1] + TOL {
                return leg_point_at(leg, p - cum[i], cfg);
            }
        }
        let last = self.legs().last().unwrap();
        leg_point_at(last, last.length(), cfg)
    }

    /// String ids traversed, in order of first traversal.
    pub fn string_sequence(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for leg in self.legs() {
            if let Leg::Str { id, .. } = leg {
                if !out.contains(id) {
                    out.push(*id);
                }
            }
        }
        out
    }
}

fn leg_point_at(leg: &Leg, local: f64, cfg: &MdConfig) -> Result<PointRef, PathError> {
    match leg {
        Leg::Planar { region, from, to } => {
            let len = dist2(from, to);
            let s = (local / len).clamp(0.0, 1.0);
            let xy = [from[0] + (to[0] - from[0]) * s, from[1] + (to[1] - from[1]) * s];
            planar_point(*region, xy, cfg)
        }
        Leg::Str { id, from_t, to_t } => {
            let dir = if to_t >= from_t { 1.0 } else { -1.0 };
            string_param_point(*id, from_t + dir * local, cfg)
        }
    }
}

fn slice_leg(leg: &Leg, lo: f64, hi: f64) -> Leg {
    match leg {
        Leg::Planar { region, from, to } => {
            let len = dist2(from, to);
            let at = |s: f64| {
                let r = (s / len).clamp(0.0, 1.0);
                [from[0] + (to[0] - from[0]) * r, from[1] + (to[1] - from[1]) * r]
            };
            Leg::Planar {
                region: *region,
                from: at(lo),
                to: at(hi),
            }
        }
        Leg::Str { id, from_t, to_t } => {
            let dir = if to_t >= from_t { 1.0 } else { -1.0 };
            Leg::Str {
                id: *id,
                from_t: from_t + dir * lo,
                to_t: from_t + dir * hi,
            }
        }
    }
}

/// Arclength of the projection of `p` onto segment `a..b` when `p` lies on
/// the segment (within tolerance); `None` otherwise.
pub(crate) fn project_on_segment(a: &[f64; 2], b: &[f64; 2], p: &[f64; 2]) -> Option<f64> {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len = (ab[0] * ab[0] + ab[1] * ab[1]).sqrt();
    if len <= TOL {
        return None;
    }
    let cross = (ab[0] * ap[1] - ab[1] * ap[0]) / len;
    if cross.abs() > 1e-7 {
        return None;
    }
    let dot = (ab[0] * ap[0] + ab[1] * ap[1]) / len;
    if dot < -TOL || dot > len + TOL {
        return None;
    }
    Some(dot.clamp(0.0, len))
}

// ---------------------------------------------------------------------------
// Breakpoint graph over a path's point set.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum NodeKey {
    GateP,
    GateQ,
    Planar(Region, i64, i64),
    Str(u8, i64),
}

fn planar_key(region: Region, xy: [f64; 2], cfg: &MdConfig) -> NodeKey {
    if region == Region::Delta1 && xy[0].abs() <= TOL && xy[1].abs() <= TOL {
        return NodeKey::GateP;
    }
    if region == Region::Delta2 && (xy[0] - cfg.gap_width).abs() <= TOL && xy[1].abs() <= TOL {
        return NodeKey::GateQ;
    }
    NodeKey::Planar(region, quant(xy[0]), quant(xy[1]))
}

fn string_key(id: u8, t: f64, cfg: &MdConfig) -> NodeKey {
    if t.abs() <= TOL {
        NodeKey::GateP
    } else if (t - cfg.string_len(id)).abs() <= TOL {
        NodeKey::GateQ
    } else {
        NodeKey::Str(id, quant(t))
    }
}

// Coordinates here are either exact inputs or short arithmetic expressions
// over them; quantizing at 1e-8 merges the coincident ones.
fn quant(x: f64) -> i64 {
    (x / 1e-8).round() as i64
}

/// Shortest distances confined to a path's point set, computed on the graph
/// of leg breakpoints. Used by [`is_geodesic`] and by fixture verification.
pub struct InSetGraph {
    index: HashMap<NodeKey, usize>,
    adj: Vec<Vec<(usize, f64)>>,
    empty: bool,
}

impl InSetGraph {
    /// Builds the breakpoint graph of `path`, ensuring every point of
    /// `markers` that lies on the path becomes a node.
    pub fn build(path: &PathRep, markers: &[PointRef], cfg: &MdConfig) -> InSetGraph {
        let mut g = InSetGraph {
            index: HashMap::new(),
            adj: Vec::new(),
            empty: path.legs().is_empty(),
        };
        if g.empty {
            return g;
        }

        let mut planar_marks: Vec<(Region, [f64; 2])> = Vec::new();
        let mut string_marks: Vec<(u8, f64)> = Vec::new();
        {
            let mut add_point = |p: &PointRef| match p {
                PointRef::Planar1 { x, y } => planar_marks.push((Region::Delta1, [*x, *y])),
                PointRef::Planar2 { x, y } => planar_marks.push((Region::Delta2, [*x, *y])),
                PointRef::GateP => {
                    planar_marks.push((Region::Delta1, [0.0, 0.0]));
                    for id in 1..=3 {
                        string_marks.push((id, 0.0));
                    }
                }
                PointRef::GateQ => {
                    planar_marks.push((Region::Delta2, cfg.gate_q_xy()));
                    for id in 1..=3 {
                        string_marks.push((id, cfg.string_len(id)));
                    }
                }
                PointRef::OnString { id, t } => string_marks.push((*id, *t)),
                PointRef::Isolated(_) => {}
            };
            for m in markers {
                add_point(m);
            }
        }
        for leg in path.legs() {
            match leg {
                Leg::Planar { region, from, to } => {
                    planar_marks.push((*region, *from));
                    planar_marks.push((*region, *to));
                }
                Leg::Str { id, from_t, to_t } => {
                    string_marks.push((*id, *from_t));
                    string_marks.push((*id, *to_t));
                }
            }
        }

        for leg in path.legs() {
            match leg {
                Leg::Planar { region, from, to } => {
                    let mut stops: Vec<(f64, [f64; 2])> = vec![(0.0, *from), (dist2(from, to), *to)];
                    for (r, xy) in &planar_marks {
                        if r == region {
                            if let Some(s) = project_on_segment(from, to, xy) {
                                stops.push((s, *xy));
                            }
                        }
                    }
                    stops.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
                    stops.dedup_by(|a, b| (a.0 - b.0).abs() <= TOL);
                    for w in stops.windows(2) {
                        let a = g.node(planar_key(*region, w[0].1, cfg));
                        let b = g.node(planar_key(*region, w[1].1, cfg));
                        g.edge(a, b, w[1].0 - w[0].0);
                    }
                }
                Leg::Str { id, from_t, to_t } => {
                    let (lo, hi) = (from_t.min(*to_t), from_t.max(*to_t));
                    let mut stops: Vec<f64> = vec![lo, hi];
                    for (mid, t) in &string_marks {
                        if mid == id && *t >= lo - TOL && *t <= hi + TOL {
                            stops.push(t.clamp(lo, hi));
                        }
                    }
                    stops.sort_by(|a, b| a.partial_cmp(b).unwrap());
                    stops.dedup_by(|a, b| (*a - *b).abs() <= TOL);
                    for w in stops.windows(2) {
                        let a = g.node(string_key(*id, w[0], cfg));
                        let b = g.node(string_key(*id, w[1], cfg));
                        g.edge(a, b, w[1] - w[0]);
                    }
                }
            }
        }
        g
    }

    fn node(&mut self, key: NodeKey) -> usize {
        if let Some(i) = self.index.get(&key) {
            return *i;
        }
        let i = self.adj.len();
        self.index.insert(key, i);
        self.adj.push(Vec::new());
        i
    }

    fn edge(&mut self, a: usize, b: usize, w: f64) {
        self.adj[a].push((b, w));
        self.adj[b].push((a, w));
    }

    fn key_of(&self, p: &PointRef, cfg: &MdConfig) -> Option<NodeKey> {
        match p {
            PointRef::Planar1 { x, y } => Some(planar_key(Region::Delta1, [*x, *y], cfg)),
            PointRef::Planar2 { x, y } => Some(planar_key(Region::Delta2, [*x, *y], cfg)),
            PointRef::GateP => Some(NodeKey::GateP),
            PointRef::GateQ => Some(NodeKey::GateQ),
            PointRef::OnString { id, t } => Some(string_key(*id, *t, cfg)),
            PointRef::Isolated(_) => None,
        }
    }

    /// Shortest length of a curve joining `a` and `b` inside the point set;
    /// `None` when either is not a node or no in-set curve joins them.
    pub fn in_set_distance(&self, a: &PointRef, b: &PointRef, cfg: &MdConfig) -> Option<f64> {
        if a.approx_eq(b) {
            return Some(0.0);
        }
        if self.empty || a.is_isolated() || b.is_isolated() {
            return None;
        }
        let ka = self.key_of(a, cfg)?;
        let kb = self.key_of(b, cfg)?;
        let (sa, sb) = (*self.index.get(&ka)?, *self.index.get(&kb)?);

        #[derive(PartialEq)]
        struct St(f64, usize);
        impl Eq for St {}
        impl Ord for St {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                other.0.partial_cmp(&self.0).unwrap_or(std::cmp::Ordering::Equal)
            }
        }
        impl PartialOrd for St {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }
        let mut dist = vec![f64::INFINITY; self.adj.len()];
        let mut heap = BinaryHeap::new();
        dist[sa] = 0.0;
        heap.push(St(0.0, sa));
        while let Some(St(d, u)) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for (v, w) in &self.adj[u] {
                let nd = d + w;
                if nd < dist[*v] {
                    dist[*v] = nd;
                    heap.push(St(nd, *v));
                }
            }
        }
        if dist[sb].is_finite() {
            Some(dist[sb])
        } else {
            None
        }
    }
}

/// Comparison slack for the geodesic test. Looser than the metric tolerance:
/// sampled coordinates pass through quantized graph keys.
const GEO_TOL: f64 = 1e-7;

/// Tests whether a structurally valid path is a geodesic: for every pair of
/// sampled points the shortest curve confined to the path's point set (from
/// the breakpoint graph) attains the model distance.
pub fn is_geodesic(path: &PathRep, cfg: &MdConfig) -> Result<bool, PathError> {
    path.check(cfg)?;
    if path.is_singleton() {
        return Ok(true);
    }
    let samples = path.sample_points(cfg);
    let graph = InSetGraph::build(path, &samples, cfg);
    for i in 0..samples.len() {
        for j in (i + 1)..samples.len() {
            let (u, v) = (&samples[i], &samples[j]);
            let true_d = match distance(u, v, cfg) {
                Distance::Finite(d) => d,
                Distance::Unreachable => return Ok(false),
            };
            match graph.in_set_distance(u, v, cfg) {
                Some(d) if (d - true_d).abs() <= GEO_TOL => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::IsolatedId;

    fn cfg() -> MdConfig {
        MdConfig::default_config()
    }

    fn pt(raw: RawPoint) -> PointRef {
        make_point(raw, &cfg()).unwrap()
    }

    #[test]
    fn single_planar_segment_is_geodesic() {
        let c = cfg();
        let p = PathRep::from_legs(
            vec![Leg::Planar {
                region: Region::Delta1,
                from: [-3.0, 1.0],
                to: [-1.0, -2.0],
            }],
            &c,
        )
        .unwrap();
        assert!(is_geodesic(&p, &c).unwrap());
        assert!((p.length() - (4.0f64 + 9.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn bent_planar_chain_is_not_geodesic() {
        let c = cfg();
        let p = PathRep::from_legs(
            vec![
                Leg::Planar {
                    region: Region::Delta1,
                    from: [-3.0, 0.0],
                    to: [-2.0, 2.0],
                },
                Leg::Planar {
                    region: Region::Delta1,
                    from: [-2.0, 2.0],
                    to: [-1.0, 0.0],
                },
            ],
            &c,
        )
        .unwrap();
        assert!(!is_geodesic(&p, &c).unwrap());
    }

    #[test]
    fn string_loop_is_geodesic() {
        let c = cfg();
        let p = PathRep::from_legs(
            vec![
                Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 },
                Leg::Str { id: 2, from_t: 4.0, to_t: 0.0 },
            ],
            &c,
        )
        .unwrap();
        assert!(p.is_closed(&c));
        assert!(is_geodesic(&p, &c).unwrap());
    }

    #[test]
    fn long_string_bridge_is_not_geodesic() {
        // delta1 -> P -> s3 -> Q is beaten by the short strings.
        let c = cfg();
        let p = PathRep::from_legs(
            vec![
                Leg::Planar {
                    region: Region::Delta1,
                    from: [-1.0, 0.0],
                    to: [0.0, 0.0],
                },
                Leg::Str { id: 3, from_t: 0.0, to_t: 9.0 },
            ],
            &c,
        )
        .unwrap();
        assert!(!is_geodesic(&p, &c).unwrap());
    }

    #[test]
    fn knotted_line_through_both_strings_is_geodesic() {
        // A-Q-s1-P-s2-Q-B with A, B on a common ray from Q.
        let c = cfg();
        let g = c.gap_width;
        let p = PathRep::from_legs(
            vec![
                Leg::Planar {
                    region: Region::Delta2,
                    from: [g + 1.0, 0.0],
                    to: [g, 0.0],
                },
                Leg::Str { id: 1, from_t: 4.0, to_t: 0.0 },
                Leg::Str { id: 2, from_t: 0.0, to_t: 4.0 },
                Leg::Planar {
                    region: Region::Delta2,
                    from: [g, 0.0],
                    to: [g + 2.0, 0.0],
                },
            ],
            &c,
        )
        .unwrap();
        assert!(is_geodesic(&p, &c).unwrap());
    }

    #[test]
    fn string_repeat_rejected() {
        let c = cfg();
        let r = PathRep::from_legs(
            vec![
                Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 },
                Leg::Str { id: 1, from_t: 4.0, to_t: 1.0 },
            ],
            &c,
        );
        assert!(r.is_err());
    }

    #[test]
    fn f2_segment_rejected() {
        let c = cfg();
        let g = c.gap_width;
        let r = PathRep::from_legs(
            vec![Leg::Planar {
                region: Region::Delta2,
                from: [g, 0.0],
                to: [g, 3.0],
            }],
            &c,
        );
        assert!(r.is_err());
        let r = PathRep::from_legs(
            vec![Leg::Planar {
                region: Region::Delta2,
                from: [g + 1.0, 0.0],
                to: [g, 3.0],
            }],
            &c,
        );
        assert!(r.is_err());
    }

    #[test]
    fn isolated_points_only_singleton() {
        let c = cfg();
        let p = PathRep::singleton(PointRef::Isolated(IsolatedId::I));
        assert!(is_geodesic(&p, &c).unwrap());
    }

    #[test]
    fn occurrences_and_params() {
        let c = cfg();
        let p = PathRep::from_legs(
            vec![
                Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 },
                Leg::Str { id: 2, from_t: 4.0, to_t: 0.0 },
            ],
            &c,
        )
        .unwrap();
        // The loop visits P at parameters 0 and 8.
        let occ = p.occurrences(&PointRef::GateP, &c);
        assert_eq!(occ.len(), 2);
        assert!((occ[0] - 0.0).abs() < 1e-12 && (occ[1] - 8.0).abs() < 1e-12);
        let q = p.param_of(&PointRef::GateQ, &c).unwrap();
        assert!((q - 4.0).abs() < 1e-12);
        let t = p.param_of(&pt(RawPoint::OnString(2, 3.0)), &c).unwrap();
        assert!((t - 5.0).abs() < 1e-12);
    }

    #[test]
    fn subpath_slicing() {
        let c = cfg();
        let p = PathRep::from_legs(
            vec![
                Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 },
                Leg::Str { id: 2, from_t: 4.0, to_t: 0.0 },
            ],
            &c,
        )
        .unwrap();
        let sub = p.subpath(2.0, 6.0, &c).unwrap();
        assert!((sub.length() - 4.0).abs() < 1e-12);
        assert_eq!(sub.start_point(&c).unwrap(), pt(RawPoint::OnString(1, 2.0)));
        assert_eq!(sub.finish_point(&c).unwrap(), pt(RawPoint::OnString(2, 2.0)));
    }

    #[test]
    fn reverse_roundtrip() {
        let c = cfg();
        let p = PathRep::from_legs(
            vec![
                Leg::Planar {
                    region: Region::Delta1,
                    from: [-2.0, 1.0],
                    to: [0.0, 0.0],
                },
                Leg::Str { id: 2, from_t: 0.0, to_t: 3.0 },
            ],
            &c,
        )
        .unwrap();
        let r = p.reverse();
        r.check(&c).unwrap();
        assert_eq!(r.reverse(), p);
        assert_eq!(r.start_point(&c).unwrap(), pt(RawPoint::OnString(2, 3.0)));
    }
}
