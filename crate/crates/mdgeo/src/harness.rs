//! Executable fixture catalog: every counterexample the model supports,
//! as replayable reports.
//!
//! Each fixture builds a concrete witness configuration from the model
//! parameters, asserts its claim through the public operations, and records
//! the assertions as a list of typed checks. A report replays by re-running
//! every check; a failed assertion is an error, never a silent status.

use crate::config::{MdConfig, TOL};
use crate::extend::{EndStatus, Line, HORIZON};
use crate::incidence::{
    angle_at_paths, betweenness, common_points_of_paths, order_tuple, right_angle_witness,
    segment_congruent, triangle_angles, IncidenceError, Segment, SideChoice,
};
use crate::metric::{circle, distance, geodesics_between, CircleComponent, Distance};
use crate::path::{is_geodesic, Leg, PathRep, Region};
use crate::point::{connectable, IsolatedId, PointRef};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HarnessError {
    #[error("unknown fixture id {0:?}")]
    UnknownFixture(String),
    #[error("fixture {0} broke: {1}")]
    FixtureBroken(String, String),
    #[error("point {0} lies on the line")]
    PointOnLine(String),
    #[error("pencil line {0} does not pass through the pencil point")]
    PencilMissesPoint(usize),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
}

// ---------------------------------------------------------------------------
// Planes as component unions.
// ---------------------------------------------------------------------------

/// Building blocks of a plane: whole half-planes, whole strings, islands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlaneComponent {
    Delta1,
    Delta2,
    String(u8),
    Isolated(IsolatedId),
}

/// A plane described as a union of components. Geodesic closure (for any two
/// of its points some shortest connecting curve stays inside) is checked on
/// sampled pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneDesc {
    pub components: BTreeSet<PlaneComponent>,
}

impl PlaneDesc {
    pub fn new(components: impl IntoIterator<Item = PlaneComponent>) -> PlaneDesc {
        PlaneDesc {
            components: components.into_iter().collect(),
        }
    }

    fn has_string(&self) -> bool {
        self.components.iter().any(|c| matches!(c, PlaneComponent::String(_)))
    }

    pub fn contains(&self, p: &PointRef) -> bool {
        match p {
            PointRef::Planar1 { .. } => self.components.contains(&PlaneComponent::Delta1),
            PointRef::Planar2 { .. } => self.components.contains(&PlaneComponent::Delta2),
            PointRef::GateP => self.components.contains(&PlaneComponent::Delta1) || self.has_string(),
            PointRef::GateQ => self.components.contains(&PlaneComponent::Delta2) || self.has_string(),
            PointRef::OnString { id, .. } => self.components.contains(&PlaneComponent::String(*id)),
            PointRef::Isolated(i) => self.components.contains(&PlaneComponent::Isolated(*i)),
        }
    }

    pub fn path_inside(&self, path: &PathRep) -> bool {
        if let PathRep::Singleton(p) = path {
            return self.contains(p);
        }
        path.legs().iter().all(|leg| match leg {
            Leg::Planar { region: Region::Delta1, .. } => {
                self.components.contains(&PlaneComponent::Delta1)
            }
            Leg::Planar { region: Region::Delta2, .. } => {
                self.components.contains(&PlaneComponent::Delta2)
            }
            Leg::Str { id, .. } => self.components.contains(&PlaneComponent::String(*id)),
        })
    }

    fn sample_point(&self, rng: &mut ChaCha8Rng, cfg: &MdConfig) -> Option<PointRef> {
        let comps: Vec<&PlaneComponent> = self.components.iter().collect();
        if comps.is_empty() {
            return None;
        }
        let g = cfg.gap_width;
        let span = 8.0 * g;
        let comp = comps[rng.gen_range(0..comps.len())];
        let p = match comp {
            PlaneComponent::Delta1 => PointRef::Planar1 {
                x: -rng.gen_range(0.0..span),
                y: rng.gen_range(-span..span),
            },
            PlaneComponent::Delta2 => PointRef::Planar2 {
                x: g + rng.gen_range(f64::EPSILON..span),
                y: rng.gen_range(-span..span),
            },
            PlaneComponent::String(id) => PointRef::OnString {
                id: *id,
                t: rng.gen_range(0.001..cfg.string_len(*id) - 0.001),
            },
            PlaneComponent::Isolated(i) => PointRef::Isolated(*i),
        };
        Some(p)
    }

    /// Samples `pairs` random point pairs of the plane and checks that every
    /// connectable pair has some shortest path inside the union.
    pub fn closure_check(&self, pairs: usize, seed: u64, cfg: &MdConfig) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..pairs {
            let (Some(a), Some(b)) = (self.sample_point(&mut rng, cfg), self.sample_point(&mut rng, cfg))
            else {
                return true;
            };
            if !connectable(&a, &b) || a.approx_eq(&b) {
                continue;
            }
            let Ok(geos) = geodesics_between(&a, &b, cfg) else {
                return false;
            };
            if !geos.iter().any(|p| self.path_inside(p)) {
                return false;
            }
        }
        true
    }

    /// Intersection with another plane: shared whole components plus any
    /// gates both planes contain beyond those components.
    pub fn intersection(&self, other: &PlaneDesc) -> (BTreeSet<PlaneComponent>, Vec<PointRef>) {
        let shared: BTreeSet<PlaneComponent> =
            self.components.intersection(&other.components).copied().collect();
        let shared_plane = PlaneDesc {
            components: shared.clone(),
        };
        let mut gates = Vec::new();
        for gate in [PointRef::GateP, PointRef::GateQ] {
            if self.contains(&gate) && other.contains(&gate) && !shared_plane.contains(&gate) {
                gates.push(gate);
            }
        }
        (shared, gates)
    }
}

// ---------------------------------------------------------------------------
// Parallel classification.
// ---------------------------------------------------------------------------

/// How many lines through a point miss a given line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParallelClass {
    Zero,
    One,
    FiniteK(usize),
    InfiniteNotAll,
    InfiniteAll,
}

/// Which structural lemmas the classifier may apply.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LemmaFlags {
    /// A point interior to a minimum-length string forces every maximal line
    /// through it to contain both gates.
    pub string_interior: bool,
    /// A full planar line parallel to f1 admits exactly one parallel through
    /// a point on its far side.
    pub vertical_one: bool,
    /// Exact direction-cone analysis for planar points against planar lines.
    pub planar_cone: bool,
}

impl Default for LemmaFlags {
    fn default() -> Self {
        LemmaFlags {
            string_interior: true,
            vertical_one: true,
            planar_cone: true,
        }
    }
}

/// Classifies the parallels to `l` through `a` over the supplied pencil,
/// upgraded to a structural result when a lemma applies.
///
/// Lemma (string interior): for a on a string of minimum length, any
/// in-string fragment extends to both gates (its span bound exceeds the
/// string length), so every maximal line through a contains P and Q; if l
/// passes a gate the class is Zero.
///
/// Lemma (vertical): a full planar delta1 line parallel to f1, seen from a
/// point strictly on its left: the only missing line is the parallel
/// vertical, since every other planar chord crosses it and the ray through P
/// crosses it on the way.
///
/// Lemma (cone): for a planar point, planar chords through it hit a planar
/// line exactly when their direction falls in the closed cone subtended by
/// its segments; a nonempty open complement gives infinitely many parallels,
/// and gate rays are checked directly.
pub fn classify_parallels(
    l: &Line,
    a: &PointRef,
    pencil: &[Line],
    lemmas: LemmaFlags,
    cfg: &MdConfig,
) -> Result<ParallelClass, HarnessError> {
    if l.contains(a, cfg) {
        return Err(HarnessError::PointOnLine(a.to_string()));
    }
    for (i, m) in pencil.iter().enumerate() {
        if !m.contains(a, cfg) {
            return Err(HarnessError::PencilMissesPoint(i));
        }
    }

    if lemmas.string_interior {
        if let PointRef::OnString { id, .. } = a {
            if cfg.string_len(*id) <= cfg.min_other_len(*id) + TOL
                && (l.contains(&PointRef::GateP, cfg) || l.contains(&PointRef::GateQ, cfg))
            {
                return Ok(ParallelClass::Zero);
            }
        }
    }

    if lemmas.vertical_one {
        if let (Some(lx), Some(axy)) = (vertical_delta1_x(l), a.xy_in_delta1(cfg)) {
            if axy[0] < lx - TOL {
                return Ok(ParallelClass::One);
            }
        }
    }

    if lemmas.planar_cone {
        if let Some(class) = planar_cone_class(l, a, cfg) {
            return Ok(class);
        }
    }

    // Pencil-relative fallback.
    let mut misses = 0usize;
    let mut hits = 0usize;
    for m in pencil {
        if crate::incidence::common_points(l, m, cfg).is_empty() {
            misses += 1;
        } else {
            hits += 1;
        }
    }
    Ok(match (misses, hits) {
        (0, _) => ParallelClass::Zero,
        (1, _) => ParallelClass::One,
        (k, 0) => {
            let _ = k;
            ParallelClass::InfiniteAll
        }
        (k, _) => ParallelClass::FiniteK(k),
    })
}

fn vertical_delta1_x(l: &Line) -> Option<f64> {
    if l.start_status() != &EndStatus::Infinite || l.end_status() != &EndStatus::Infinite {
        return None;
    }
    let mut x: Option<f64> = None;
    for leg in l.rep().legs() {
        match leg {
            Leg::Planar { region: Region::Delta1, from, to } => {
                if (from[0] - to[0]).abs() > TOL {
                    return None;
                }
                match x {
                    None => x = Some(from[0]),
                    Some(v) if (v - from[0]).abs() <= TOL => {}
                    _ => return None,
                }
            }
            _ => return None,
        }
    }
    x
}

/// Angular interval (mod pi) of carrier directions through `a` that meet the
/// segment `e1..e2`; the direction of a point sweep is monotone, so the
/// interval is spanned by the endpoint directions, crossing the midpoint.
fn angles_mod_pi(a: [f64; 2], e1: [f64; 2], e2: [f64; 2]) -> (f64, f64) {
    let ang = |e: [f64; 2]| {
        let v = [e[0] - a[0], e[1] - a[1]];
        let mut t = v[1].atan2(v[0]);
        if t < 0.0 {
            t += std::f64::consts::PI;
        }
        if t >= std::f64::consts::PI {
            t -= std::f64::consts::PI;
        }
        t
    };
    (ang(e1), ang(e2))
}

fn planar_cone_class(l: &Line, a: &PointRef, cfg: &MdConfig) -> Option<ParallelClass> {
    let pi = std::f64::consts::PI;
    let (region, axy) = match a {
        PointRef::Planar1 { x, y } => (Region::Delta1, [*x, *y]),
        PointRef::Planar2 { x, y } => (Region::Delta2, [*x, *y]),
        _ => return None,
    };
    // Carrier angles through a hitting l's same-region planar legs. Measure
    // on the projective circle [0, pi).
    let mut hit_intervals: Vec<(f64, f64)> = Vec::new();
    for leg in l.rep().legs() {
        if let Leg::Planar { region: r, from, to } = leg {
            if *r != region {
                continue;
            }
            let (a1, a2) = angles_mod_pi(axy, *from, *to);
            let mid = [(from[0] + to[0]) / 2.0, (from[1] + to[1]) / 2.0];
            let (am, _) = angles_mod_pi(axy, mid, mid);
            // The interval spans a1..a2 passing through am.
            let (lo, hi) = (a1.min(a2), a1.max(a2));
            if am >= lo - 1e-12 && am <= hi + 1e-12 {
                hit_intervals.push((lo, hi));
            } else {
                // Wraps around pi.
                hit_intervals.push((hi, pi));
                hit_intervals.push((0.0, lo));
            }
        }
    }
    let mut measure = 0.0;
    hit_intervals.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let mut covered_to = 0.0f64;
    for (lo, hi) in &hit_intervals {
        let lo = lo.max(covered_to);
        if *hi > lo {
            measure += hi - lo;
            covered_to = *hi;
        }
    }
    let infinitely_many_missing = (pi - measure) > 1e-6;
    // The ray through a and the region's gate: the planar part every
    // through-gate line shares. It hits l if it crosses l's legs, or at the
    // gates when l passes them.
    let gate = if region == Region::Delta1 {
        cfg.gate_p_xy()
    } else {
        cfg.gate_q_xy()
    };
    let dir = [axy[0] - gate[0], axy[1] - gate[1]];
    let n = (dir[0] * dir[0] + dir[1] * dir[1]).sqrt();
    let far = [gate[0] + dir[0] / n * HORIZON, gate[1] + dir[1] / n * HORIZON];
    let gate_ray = PathRep::from_legs(
        vec![Leg::Planar {
            region,
            from: gate,
            to: far,
        }],
        cfg,
    )
    .ok()?;
    let gate_pt = if region == Region::Delta1 {
        PointRef::GateP
    } else {
        PointRef::GateQ
    };
    let gate_line_hits = !common_points_of_paths(&gate_ray, l.rep(), cfg).is_empty()
        || l.contains(&gate_pt, cfg)
        || l.contains(
            &(if region == Region::Delta1 {
                PointRef::GateQ
            } else {
                PointRef::GateP
            }),
            cfg,
        );
    let hits_exist = measure > 1e-9 || gate_line_hits;
    if infinitely_many_missing {
        Some(if hits_exist {
            ParallelClass::InfiniteNotAll
        } else {
            ParallelClass::InfiniteAll
        })
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Anti-Archimedean walk.
// ---------------------------------------------------------------------------

/// Lays congruent steps from `a` toward `b` along the line and reports
/// whether some step point lands strictly beyond `b` while staying on the
/// line. False when `b` terminates the line: there is no point behind it.
pub fn archimedean_reachable(
    line: &Line,
    a: &PointRef,
    b: &PointRef,
    step: f64,
    cfg: &MdConfig,
) -> Result<bool, HarnessError> {
    let rep = line.rep();
    let pa = rep
        .param_of(a, cfg)
        .map_err(|_| HarnessError::PointOnLine(format!("{a} not on line")))?;
    let pb = rep
        .param_of(b, cfg)
        .map_err(|_| HarnessError::PointOnLine(format!("{b} not on line")))?;
    let total = rep.length();
    if step <= TOL {
        return Ok(false);
    }
    if line.is_loop() {
        // Steps wrap around; b is passed as soon as some multiple of the
        // step exceeds its offset from a (mod the loop length).
        let rb = ((pb - pa) % total + total) % total;
        let n = (total / step).ceil() as usize + 2;
        for k in 1..=n {
            let rk = (k as f64 * step) % total;
            if rk > rb + TOL {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let forward = pb >= pa;
    // First step index beyond b.
    let gap = (pb - pa).abs();
    let k0 = (gap / step).floor() as usize + 1;
    let pos = pa + (k0 as f64 * step) * if forward { 1.0 } else { -1.0 };
    let (limit_ok, unbounded) = if forward {
        match line.end_status() {
            EndStatus::Infinite => (true, true),
            EndStatus::Terminal(_) => (pos <= total + TOL, false),
            EndStatus::OpenBoundary { .. } => (pos < total - TOL, false),
            EndStatus::Loop => (true, true),
        }
    } else {
        match line.start_status() {
            EndStatus::Infinite => (true, true),
            EndStatus::Terminal(_) => (pos >= -TOL, false),
            EndStatus::OpenBoundary { .. } => (pos > TOL, false),
            EndStatus::Loop => (true, true),
        }
    };
    if unbounded {
        return Ok(true);
    }
    // The first overshooting step must itself lie on the line; later steps
    // only go further out.
    let beyond = (pos - pa).abs() > gap + TOL;
    Ok(limit_ok && beyond)
}

// ---------------------------------------------------------------------------
// Reports and replayable checks.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixtureStatus {
    CounterexampleFound,
    HoldsOnWitness,
    Unrealized,
}

/// A report of one fixture run: its id, a one-line statement of the claim,
/// the status, and the witness as a list of replayable checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub fixture_id: String,
    pub claim: String,
    pub status: FixtureStatus,
    pub witness: Vec<Check>,
}

impl AxiomReport {
    /// Re-runs every witness check.
    pub fn replay(&self, cfg: &MdConfig) -> Result<(), HarnessError> {
        for (i, check) in self.witness.iter().enumerate() {
            check
                .run(cfg)
                .map_err(|e| HarnessError::FixtureBroken(self.fixture_id.clone(), format!("check {i}: {e}")))?;
        }
        Ok(())
    }
}

/// A segment named by a line representation and two traversal parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegSpec {
    pub line_rep: PathRep,
    pub from_param: f64,
    pub to_param: f64,
}

impl SegSpec {
    fn build(&self, cfg: &MdConfig) -> Result<Segment, String> {
        let line = Line::from_rep(self.line_rep.clone(), cfg).map_err(|e| e.to_string())?;
        Segment::between_params(&line, self.from_param, self.to_param, cfg).map_err(|e| e.to_string())
    }
}

/// One replayable assertion over the public operations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Check {
    Connectable { a: PointRef, b: PointRef, expect: bool },
    DistanceIs { a: PointRef, b: PointRef, expect: Option<f64> },
    GeodesicCount { a: PointRef, b: PointRef, expect: usize },
    IsGeodesic { path: PathRep, expect: bool },
    /// The representation is a maximal line with these end statuses.
    LineEnds { rep: PathRep, start: EndStatus, end: EndStatus },
    LineContains { rep: PathRep, points: Vec<PointRef> },
    /// Two distinct maximal lines both pass through all the named points.
    LinesDistinctThrough { h: PathRep, k: PathRep, points: Vec<PointRef> },
    Betweenness { rep: PathRep, a: PointRef, b: PointRef, c: PointRef, expect: bool },
    OrderIs { rep: PathRep, pts: Vec<PointRef>, expect: Vec<PointRef> },
    CommonPointsAre { h: PathRep, k: PathRep, isolated: Vec<PointRef>, arcs: usize },
    PathsDisjoint { a: PathRep, b: PathRep },
    AngleBetweenIs { h: PathRep, k: PathRep, expect_deg: f64 },
    AngleBetweenExceeds { h: PathRep, k: PathRep, min_deg: f64 },
    AngleAtPathsIs { h: PathRep, k: PathRep, at: PointRef, expect_deg: f64 },
    AngleAtPathsDiffer {
        h1: PathRep,
        k1: PathRep,
        at1: PointRef,
        h2: PathRep,
        k2: PathRep,
        at2: PointRef,
    },
    SegmentsCongruent { a: SegSpec, b: SegSpec, expect: bool },
    SegmentLengthIs { seg: SegSpec, expect: f64 },
    /// No segment of the given length fits beyond `from` on the line.
    SegmentOverruns { rep: PathRep, from: PointRef, length: f64 },
    TriangleSum { a: PointRef, b: PointRef, c: PointRef, sides: SideChoice, cmp: SumCmp },
    TriangleAnglesAre {
        a: PointRef,
        b: PointRef,
        c: PointRef,
        sides: SideChoice,
        expect: [f64; 3],
    },
    RightAngleValue { x: PointRef, string_id: u8, expect_deg: f64 },
    RightAnglesDiffer { x1: PointRef, x2: PointRef, string_id: u8 },
    CircleShape {
        center: PointRef,
        radius: f64,
        planar_arcs: usize,
        string_points: Vec<(u8, Vec<f64>)>,
        gates: usize,
        empty: bool,
    },
    PlaneClosed { plane: PlaneDesc, pairs: usize, seed: u64 },
    PlaneContains { plane: PlaneDesc, points: Vec<PointRef>, expect: bool },
    PlanesMeetExactlyAt { a: PlaneDesc, b: PlaneDesc, gates: Vec<PointRef> },
    ParallelClassIs {
        line: PathRep,
        at: PointRef,
        pencil: Vec<PathRep>,
        expect: ParallelClass,
    },
    ArchimedeanIs { line: PathRep, a: PointRef, b: PointRef, step: f64, expect: bool },
    /// Two rays cut by a transversal make interior angles summing under the
    /// threshold on the frontier side, yet the rays never meet.
    EuclidFifthDenied { h1: PathRep, h2: PathRep, l: PathRep, threshold_deg: f64 },
    /// No witness exists in this model; the claim stays open.
    Unrealized { reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SumCmp {
    Equals(f64),
    Greater(f64),
}

const ANG_TOL: f64 = 1e-9;

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn expect_close(got: f64, want: f64, tol: f64, what: &str) -> Result<(), String> {
    if (got - want).abs() <= tol {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, want {want}"))
    }
}

impl Check {
    pub fn run(&self, cfg: &MdConfig) -> Result<(), String> {
        match self {
            Check::Connectable { a, b, expect } => {
                expect_eq(connectable(a, b), *expect, "connectable")
            }
            Check::DistanceIs { a, b, expect } => match (distance(a, b, cfg), expect) {
                (Distance::Unreachable, None) => Ok(()),
                (Distance::Finite(d), Some(w)) => expect_close(d, *w, 1e-9, "distance"),
                (got, want) => Err(format!("distance: got {got:?}, want {want:?}")),
            },
            Check::GeodesicCount { a, b, expect } => {
                let gs = geodesics_between(a, b, cfg).map_err(|e| e.to_string())?;
                for g in &gs {
                    if !is_geodesic(g, cfg).map_err(|e| e.to_string())? {
                        return Err("geodesics_between returned a non-geodesic".into());
                    }
                }
                expect_eq(gs.len(), *expect, "geodesic count")
            }
            Check::IsGeodesic { path, expect } => {
                expect_eq(is_geodesic(path, cfg).map_err(|e| e.to_string())?, *expect, "is_geodesic")
            }
            Check::LineEnds { rep, start, end } => {
                let line = Line::from_rep(rep.clone(), cfg).map_err(|e| e.to_string())?;
                expect_eq(line.start_status(), start, "start status")?;
                expect_eq(line.end_status(), end, "end status")
            }
            Check::LineContains { rep, points } => {
                let line = Line::from_rep(rep.clone(), cfg).map_err(|e| e.to_string())?;
                for p in points {
                    if !line.contains(p, cfg) {
                        return Err(format!("line does not contain {p}"));
                    }
                }
                Ok(())
            }
            Check::LinesDistinctThrough { h, k, points } => {
                let lh = Line::from_rep(h.clone(), cfg).map_err(|e| e.to_string())?;
                let lk = Line::from_rep(k.clone(), cfg).map_err(|e| e.to_string())?;
                if lh.rep() == lk.rep() {
                    return Err("the two lines coincide".into());
                }
                for p in points {
                    if !lh.contains(p, cfg) || !lk.contains(p, cfg) {
                        return Err(format!("a line misses {p}"));
                    }
                }
                Ok(())
            }
            Check::Betweenness { rep, a, b, c, expect } => {
                let line = Line::from_rep(rep.clone(), cfg).map_err(|e| e.to_string())?;
                expect_eq(
                    betweenness(&line, a, b, c, cfg).map_err(|e| e.to_string())?,
                    *expect,
                    "betweenness",
                )
            }
            Check::OrderIs { rep, pts, expect } => {
                let line = Line::from_rep(rep.clone(), cfg).map_err(|e| e.to_string())?;
                let got = order_tuple(&line, pts, cfg).map_err(|e| e.to_string())?;
                expect_eq(got, expect.clone(), "order")
            }
            Check::CommonPointsAre { h, k, isolated, arcs } => {
                let shared = common_points_of_paths(h, k, cfg);
                let mut got: Vec<String> = shared.isolated.iter().map(|p| p.to_string()).collect();
                got.sort();
                let mut want: Vec<String> = isolated.iter().map(|p| p.to_string()).collect();
                want.sort();
                expect_eq(got, want, "isolated common points")?;
                expect_eq(shared.arcs.len(), *arcs, "shared arc count")
            }
            Check::PathsDisjoint { a, b } => {
                let shared = common_points_of_paths(a, b, cfg);
                if shared.is_empty() {
                    Ok(())
                } else {
                    Err(format!("paths meet: {shared:?}"))
                }
            }
            Check::AngleBetweenIs { h, k, expect_deg } => {
                let lh = Line::from_rep(h.clone(), cfg).map_err(|e| e.to_string())?;
                let lk = Line::from_rep(k.clone(), cfg).map_err(|e| e.to_string())?;
                let got = crate::incidence::angle_between(&lh, &lk, cfg).map_err(|e| e.to_string())?;
                expect_close(got.degrees, *expect_deg, ANG_TOL, "angle between")
            }
            Check::AngleBetweenExceeds { h, k, min_deg } => {
                let lh = Line::from_rep(h.clone(), cfg).map_err(|e| e.to_string())?;
                let lk = Line::from_rep(k.clone(), cfg).map_err(|e| e.to_string())?;
                let got = crate::incidence::angle_between(&lh, &lk, cfg).map_err(|e| e.to_string())?;
                if got.degrees > *min_deg + ANG_TOL {
                    Ok(())
                } else {
                    Err(format!("angle {} not above {min_deg}", got.degrees))
                }
            }
            Check::AngleAtPathsIs { h, k, at, expect_deg } => {
                let got = angle_at_paths(h, k, at, cfg).map_err(|e| e.to_string())?;
                expect_close(got.degrees, *expect_deg, ANG_TOL, "angle at point")
            }
            Check::AngleAtPathsDiffer { h1, k1, at1, h2, k2, at2 } => {
                let x = angle_at_paths(h1, k1, at1, cfg).map_err(|e| e.to_string())?;
                let y = angle_at_paths(h2, k2, at2, cfg).map_err(|e| e.to_string())?;
                if (x.degrees - y.degrees).abs() > ANG_TOL {
                    Ok(())
                } else {
                    Err(format!("angles coincide at {}", x.degrees))
                }
            }
            Check::SegmentsCongruent { a, b, expect } => {
                let sa = a.build(cfg)?;
                let sb = b.build(cfg)?;
                expect_eq(segment_congruent(&sa, &sb), *expect, "segment congruence")
            }
            Check::SegmentLengthIs { seg, expect } => {
                let s = seg.build(cfg)?;
                expect_close(s.length(), *expect, 1e-9, "segment length")
            }
            Check::SegmentOverruns { rep, from, length } => {
                let line = Line::from_rep(rep.clone(), cfg).map_err(|e| e.to_string())?;
                let pf = line
                    .rep()
                    .param_of(from, cfg)
                    .map_err(|e| e.to_string())?;
                if pf + length > line.rep().length() + TOL {
                    Ok(())
                } else {
                    Err("a congruent segment still fits on this side".into())
                }
            }
            Check::TriangleSum { a, b, c, sides, cmp } => {
                let (x, y, z) = triangle_angles(a, b, c, *sides, cfg).map_err(|e| e.to_string())?;
                let sum = x.degrees + y.degrees + z.degrees;
                match cmp {
                    SumCmp::Equals(v) => expect_close(sum, *v, ANG_TOL, "angle sum"),
                    SumCmp::Greater(v) => {
                        if sum > *v + ANG_TOL {
                            Ok(())
                        } else {
                            Err(format!("angle sum {sum} not above {v}"))
                        }
                    }
                }
            }
            Check::TriangleAnglesAre { a, b, c, sides, expect } => {
                let (x, y, z) = triangle_angles(a, b, c, *sides, cfg).map_err(|e| e.to_string())?;
                expect_close(x.degrees, expect[0], ANG_TOL, "angle at first vertex")?;
                expect_close(y.degrees, expect[1], ANG_TOL, "angle at second vertex")?;
                expect_close(z.degrees, expect[2], ANG_TOL, "angle at third vertex")
            }
            Check::RightAngleValue { x, string_id, expect_deg } => {
                let got = right_angle_witness(x, *string_id, cfg).map_err(|e| e.to_string())?;
                expect_close(got.degrees, *expect_deg, ANG_TOL, "right angle measure")?;
                // Cross-check through the tangent-angle route: the witness is
                // half the full ray-to-string angle.
                let xy = x.xy_in_delta1(cfg).ok_or("witness point must be planar")?;
                let ray = PathRep::from_legs(
                    vec![Leg::Planar {
                        region: Region::Delta1,
                        from: xy,
                        to: [0.0, 0.0],
                    }],
                    cfg,
                )
                .map_err(|e| e.to_string())?;
                let s = PathRep::from_legs(
                    vec![Leg::Str {
                        id: *string_id,
                        from_t: 0.0,
                        to_t: cfg.string_len(*string_id),
                    }],
                    cfg,
                )
                .map_err(|e| e.to_string())?;
                let full = angle_at_paths(&ray.reverse(), &s, &PointRef::GateP, cfg)
                    .map_err(|e| e.to_string())?;
                expect_close(full.degrees / 2.0, *expect_deg, ANG_TOL, "bisected tangent angle")
            }
            Check::RightAnglesDiffer { x1, x2, string_id } => {
                let a = right_angle_witness(x1, *string_id, cfg).map_err(|e| e.to_string())?;
                let b = right_angle_witness(x2, *string_id, cfg).map_err(|e| e.to_string())?;
                if (a.degrees - b.degrees).abs() > ANG_TOL {
                    Ok(())
                } else {
                    Err(format!("right angles agree at {}", a.degrees))
                }
            }
            Check::CircleShape {
                center,
                radius,
                planar_arcs,
                string_points,
                gates,
                empty,
            } => {
                let desc = circle(center, *radius, cfg);
                expect_eq(desc.is_empty(), *empty, "circle emptiness")?;
                let mut arcs = 0usize;
                let mut gate_count = 0usize;
                let mut strings: Vec<(u8, Vec<f64>)> = Vec::new();
                for comp in &desc.components {
                    match comp {
                        CircleComponent::PlanarArc { .. } => arcs += 1,
                        CircleComponent::Gate { .. } => gate_count += 1,
                        CircleComponent::StringPoints { id, ts } => strings.push((*id, ts.clone())),
                    }
                }
                expect_eq(arcs, *planar_arcs, "planar arc count")?;
                expect_eq(gate_count, *gates, "gate component count")?;
                expect_eq(strings.len(), string_points.len(), "string component count")?;
                for ((gid, gts), (wid, wts)) in strings.iter().zip(string_points.iter()) {
                    expect_eq(gid, wid, "string id")?;
                    expect_eq(gts.len(), wts.len(), "string point count")?;
                    for (g, w) in gts.iter().zip(wts.iter()) {
                        expect_close(*g, *w, 1e-9, "string point arclength")?;
                    }
                }
                // Sampled points re-verify the radius.
                for p in desc.sample_points(12, cfg) {
                    let d = distance(center, &p, cfg)
                        .finite()
                        .ok_or("circle point unreachable")?;
                    expect_close(d, *radius, 1e-6, "sampled circle point distance")?;
                }
                Ok(())
            }
            Check::PlaneClosed { plane, pairs, seed } => {
                if plane.closure_check(*pairs, *seed, cfg) {
                    Ok(())
                } else {
                    Err("plane closure check failed".into())
                }
            }
            Check::PlaneContains { plane, points, expect } => {
                for p in points {
                    if plane.contains(p) != *expect {
                        return Err(format!("membership of {p} is not {expect}"));
                    }
                }
                Ok(())
            }
            Check::PlanesMeetExactlyAt { a, b, gates } => {
                let (shared, extra) = a.intersection(b);
                if !shared.is_empty() {
                    return Err(format!("planes share whole components: {shared:?}"));
                }
                let mut got: Vec<String> = extra.iter().map(|p| p.to_string()).collect();
                got.sort();
                let mut want: Vec<String> = gates.iter().map(|p| p.to_string()).collect();
                want.sort();
                expect_eq(got, want, "plane intersection")
            }
            Check::ParallelClassIs { line, at, pencil, expect } => {
                let l = Line::from_rep(line.clone(), cfg).map_err(|e| e.to_string())?;
                let pencil: Vec<Line> = pencil
                    .iter()
                    .map(|p| Line::from_rep(p.clone(), cfg))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                let got = classify_parallels(&l, at, &pencil, LemmaFlags::default(), cfg)
                    .map_err(|e| e.to_string())?;
                expect_eq(got, expect.clone(), "parallel class")
            }
            Check::ArchimedeanIs { line, a, b, step, expect } => {
                let l = Line::from_rep(line.clone(), cfg).map_err(|e| e.to_string())?;
                expect_eq(
                    archimedean_reachable(&l, a, b, *step, cfg).map_err(|e| e.to_string())?,
                    *expect,
                    "archimedean walk",
                )
            }
            Check::EuclidFifthDenied { h1, h2, l, threshold_deg } => {
                if !common_points_of_paths(h1, h2, cfg).is_empty() {
                    return Err("the two rays meet".into());
                }
                let x1 = common_points_of_paths(l, h1, cfg);
                let x2 = common_points_of_paths(l, h2, cfg);
                let (p1, p2) = match (&x1.isolated[..], &x2.isolated[..]) {
                    ([p1], [p2]) => (p1.clone(), p2.clone()),
                    _ => return Err("transversal must cut each ray once".into()),
                };
                // Interior angles on the frontier side: between each ray's
                // frontier-ward branch and the transversal piece joining the
                // two crossings.
                let lq = Line::from_rep(l.clone(), cfg).map_err(|e| e.to_string())?;
                let seg12 = Segment::along(&lq, &p1, &p2, cfg).map_err(|e| e.to_string())?;
                let seg21 = Segment::along(&lq, &p2, &p1, cfg).map_err(|e| e.to_string())?;
                let toward = |ray: &PathRep, at: &PointRef| -> Result<PathRep, String> {
                    // The sub-path from the crossing to the ray's terminal
                    // end (toward the frontier).
                    let pf = ray.param_of(at, cfg).map_err(|e| e.to_string())?;
                    ray.subpath(pf, ray.length(), cfg).map_err(|e| e.to_string())
                };
                let b1 = toward(h1, &p1)?;
                let b2 = toward(h2, &p2)?;
                let a1 = angle_at_paths(&b1, seg12.rep(), &p1, cfg).map_err(|e| e.to_string())?;
                let a2 = angle_at_paths(&b2, seg21.rep(), &p2, cfg).map_err(|e| e.to_string())?;
                if a1.degrees + a2.degrees < *threshold_deg - ANG_TOL {
                    Ok(())
                } else {
                    Err(format!(
                        "interior angles sum to {}, not under {threshold_deg}",
                        a1.degrees + a2.degrees
                    ))
                }
            }
            Check::Unrealized { .. } => Ok(()),
        }
    }
}

// ---------------------------------------------------------------------------
// The catalog.
// ---------------------------------------------------------------------------

/// Stable fixture ids with their expected statuses.
pub const CATALOG: &[(&str, FixtureStatus)] = &[
    ("euclid.1", FixtureStatus::CounterexampleFound),
    ("euclid.2", FixtureStatus::CounterexampleFound),
    ("euclid.3", FixtureStatus::CounterexampleFound),
    ("euclid.4", FixtureStatus::CounterexampleFound),
    ("euclid.5", FixtureStatus::CounterexampleFound),
    ("I.1", FixtureStatus::CounterexampleFound),
    ("I.2", FixtureStatus::CounterexampleFound),
    ("I.3", FixtureStatus::CounterexampleFound),
    ("I.4", FixtureStatus::CounterexampleFound),
    ("I.5", FixtureStatus::CounterexampleFound),
    ("I.6", FixtureStatus::CounterexampleFound),
    ("I.7", FixtureStatus::CounterexampleFound),
    ("II.1", FixtureStatus::CounterexampleFound),
    ("II.2", FixtureStatus::CounterexampleFound),
    ("II.3", FixtureStatus::CounterexampleFound),
    ("II.4", FixtureStatus::CounterexampleFound),
    ("II.5", FixtureStatus::CounterexampleFound),
    ("III.zero", FixtureStatus::CounterexampleFound),
    ("III.one", FixtureStatus::CounterexampleFound),
    ("III.infinite", FixtureStatus::CounterexampleFound),
    ("III.theorem", FixtureStatus::CounterexampleFound),
    ("III.finiteK", FixtureStatus::Unrealized),
    ("III.infiniteAll", FixtureStatus::Unrealized),
    ("IV.1", FixtureStatus::CounterexampleFound),
    ("IV.1b", FixtureStatus::CounterexampleFound),
    ("IV.2", FixtureStatus::CounterexampleFound),
    ("IV.3", FixtureStatus::CounterexampleFound),
    ("IV.4", FixtureStatus::CounterexampleFound),
    ("IV.4b", FixtureStatus::CounterexampleFound),
    ("IV.5", FixtureStatus::CounterexampleFound),
    ("IV.6", FixtureStatus::CounterexampleFound),
    ("IV.right", FixtureStatus::CounterexampleFound),
    ("IV.sum180", FixtureStatus::CounterexampleFound),
    ("IV.sumLess", FixtureStatus::CounterexampleFound),
    ("IV.sum0", FixtureStatus::CounterexampleFound),
    ("IV.sumMore", FixtureStatus::CounterexampleFound),
    ("IV.circle", FixtureStatus::CounterexampleFound),
    ("V.1", FixtureStatus::CounterexampleFound),
];

pub fn expected_status(id: &str) -> Option<FixtureStatus> {
    CATALOG.iter().find(|(f, _)| *f == id).map(|(_, s)| *s)
}

/// Runs a cataloged fixture: builds its witness from the configuration,
/// verifies every assertion, and returns the replayable report.
pub fn run_fixture(id: &str, cfg: &MdConfig) -> Result<AxiomReport, HarnessError> {
    let expected = expected_status(id).ok_or_else(|| HarnessError::UnknownFixture(id.to_string()))?;
    let (claim, checks) = build_fixture(id, cfg)
        .map_err(|e| HarnessError::FixtureBroken(id.to_string(), e))?;
    let report = AxiomReport {
        fixture_id: id.to_string(),
        claim: claim.to_string(),
        status: expected,
        witness: checks,
    };
    report.replay(cfg)?;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Fixture construction helpers.
// ---------------------------------------------------------------------------

fn d1(x: f64, y: f64) -> PointRef {
    PointRef::Planar1 { x, y }
}

fn d2_abs(x: f64, y: f64) -> PointRef {
    PointRef::Planar2 { x, y }
}

fn unit2(v: [f64; 2]) -> [f64; 2] {
    let n = (v[0] * v[0] + v[1] * v[1]).sqrt();
    [v[0] / n, v[1] / n]
}

/// The doubly infinite line ray - P - string - Q - ray, with the delta1 ray
/// arriving from direction `d1_dir` and the delta2 ray leaving along
/// `d2_dir`.
fn through_line_rep(d1_dir: [f64; 2], id: u8, d2_dir: [f64; 2], cfg: &MdConfig) -> PathRep {
    let u = unit2(d1_dir);
    let v = unit2(d2_dir);
    let q = cfg.gate_q_xy();
    PathRep::from_legs(
        vec![
            Leg::Planar {
                region: Region::Delta1,
                from: [u[0] * HORIZON, u[1] * HORIZON],
                to: [0.0, 0.0],
            },
            Leg::Str {
                id,
                from_t: 0.0,
                to_t: cfg.string_len(id),
            },
            Leg::Planar {
                region: Region::Delta2,
                from: q,
                to: [q[0] + v[0] * HORIZON, q[1] + v[1] * HORIZON],
            },
        ],
        cfg,
    )
    .expect("through line is structurally valid")
}

/// The closed loop P - s_a - Q - s_b - P.
fn loop_rep(a: u8, b: u8, cfg: &MdConfig) -> PathRep {
    PathRep::from_legs(
        vec![
            Leg::Str {
                id: a,
                from_t: 0.0,
                to_t: cfg.string_len(a),
            },
            Leg::Str {
                id: b,
                from_t: cfg.string_len(b),
                to_t: 0.0,
            },
        ],
        cfg,
    )
    .expect("loop is structurally valid")
}

/// The maximal planar line through two delta1 points (unique extension).
fn planar_line_rep(a: [f64; 2], b: [f64; 2], cfg: &MdConfig) -> PathRep {
    let seg = PathRep::from_legs(
        vec![Leg::Planar {
            region: Region::Delta1,
            from: a,
            to: b,
        }],
        cfg,
    )
    .expect("segment is structurally valid");
    let lines = crate::extend::extend_maximally(&seg, cfg).expect("planar segment extends");
    assert_eq!(lines.len(), 1, "planar segments extend uniquely");
    lines.into_iter().next().unwrap().rep().clone()
}

/// The knotted line ray(C) - P - s_first - Q - s_second - P - s3 - Q - ray,
/// maximal through all three strings.
fn knot_line_rep(c_dir: [f64; 2], first: u8, second: u8, cfg: &MdConfig) -> PathRep {
    let u = unit2(c_dir);
    let q = cfg.gate_q_xy();
    let third = (1..=3u8).find(|i| *i != first && *i != second).unwrap();
    PathRep::from_legs(
        vec![
            Leg::Planar {
                region: Region::Delta1,
                from: [u[0] * HORIZON, u[1] * HORIZON],
                to: [0.0, 0.0],
            },
            Leg::Str { id: first, from_t: 0.0, to_t: cfg.string_len(first) },
            Leg::Str { id: second, from_t: cfg.string_len(second), to_t: 0.0 },
            Leg::Str { id: third, from_t: 0.0, to_t: cfg.string_len(third) },
            Leg::Planar {
                region: Region::Delta2,
                from: q,
                to: [q[0] + HORIZON, q[1]],
            },
        ],
        cfg,
    )
    .expect("knot line is structurally valid")
}

fn plane(components: impl IntoIterator<Item = PlaneComponent>) -> PlaneDesc {
    PlaneDesc::new(components)
}

fn planar_angle_deg(at: [f64; 2], u: [f64; 2], v: [f64; 2]) -> f64 {
    let a = unit2([u[0] - at[0], u[1] - at[1]]);
    let b = unit2([v[0] - at[0], v[1] - at[1]]);
    (a[0] * b[0] + a[1] * b[1]).clamp(-1.0, 1.0).acos().to_degrees()
}

fn tangent_angle_at_q(cfg: &MdConfig, i: u8, j: u8) -> f64 {
    let a = cfg.string_tangent(i, false);
    let b = cfg.string_tangent(j, false);
    let dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    dot.clamp(-1.0, 1.0).acos().to_degrees()
}

fn build_fixture(id: &str, cfg: &MdConfig) -> Result<(&'static str, Vec<Check>), String> {
    let g = cfg.gap_width;
    let l1 = cfg.string_len(1);
    let l2 = cfg.string_len(2);
    let l3 = cfg.string_len(3);
    let q = cfg.gate_q_xy();
    let iso = PointRef::Isolated(IsolatedId::I);

    let fixture: (&'static str, Vec<Check>) = match id {
        "euclid.1" => (
            "a line cannot always be drawn between two points: islands reach nothing",
            vec![
                Check::Connectable { a: iso.clone(), b: d1(-g, 0.0), expect: false },
                Check::Connectable { a: iso.clone(), b: iso.clone(), expect: true },
                Check::DistanceIs { a: iso, b: PointRef::GateP, expect: None },
                Check::Connectable { a: d1(-1.0, 0.0), b: d2_abs(q[0] + 1.0, 0.0), expect: true },
            ],
        ),
        "euclid.2" | "II.2" => {
            // The segment from G toward the frontier point F extends left
            // without bound but is right bounded in F.
            let gpt = [-2.0 * g, g / 2.0];
            let fpt = [0.0, g / 2.0];
            let rep = planar_line_rep(gpt, fpt, cfg);
            let line_f = d1(0.0, g / 2.0);
            let mid = d1((gpt[0] + fpt[0]) / 2.0, g / 2.0);
            let claim: &'static str = if id == "euclid.2" {
                "a finite line cannot always be extended to an infinite one"
            } else {
                "a point beyond a given point does not always exist on a line"
            };
            (
                claim,
                vec![
                    Check::LineEnds {
                        rep: rep.clone(),
                        start: EndStatus::Infinite,
                        end: EndStatus::Terminal(line_f.clone()),
                    },
                    Check::Betweenness {
                        rep: rep.clone(),
                        a: d1(gpt[0], gpt[1]),
                        b: mid,
                        c: line_f.clone(),
                        expect: true,
                    },
                    Check::SegmentOverruns { rep, from: d1(gpt[0], gpt[1]), length: 2.0 * g + 1.0 },
                ],
            )
        }
        "euclid.3" => (
            "a circle of arbitrary center and interval cannot always be drawn",
            vec![
                Check::CircleShape {
                    center: PointRef::Isolated(IsolatedId::I),
                    radius: g / 4.0,
                    planar_arcs: 0,
                    string_points: vec![],
                    gates: 0,
                    empty: true,
                },
                Check::CircleShape {
                    center: d1(-5.0 * g, 0.0),
                    radius: g / 4.0,
                    planar_arcs: 1,
                    string_points: vec![],
                    gates: 0,
                    empty: false,
                },
            ],
        ),
        "euclid.4" | "IV.right" => {
            let x1 = d1(-2.0 * g, 0.0);
            let x2 = d1(-2.0 * g, 2.0 * g);
            let w1 = right_angle_witness(&x1, 1, cfg).map_err(|e| e.to_string())?;
            let claim: &'static str = if id == "euclid.4" {
                "not all right angles are congruent"
            } else {
                "two constructed right angles at P have different measures"
            };
            (
                claim,
                vec![
                    Check::RightAngleValue { x: x1.clone(), string_id: 1, expect_deg: w1.degrees },
                    Check::RightAnglesDiffer { x1, x2, string_id: 1 },
                ],
            )
        }
        "euclid.5" => {
            // Two rays ending on f1 converge toward the hole, so a
            // transversal makes interior angles under two right angles on
            // that side, yet the rays never meet.
            let a = [0.0, g];
            let b = [0.0, -g];
            let h1 = planar_line_rep([-10.0 * g, g + 3.0 * g], a, cfg);
            let h2 = planar_line_rep([-10.0 * g, -g - 3.0 * g], b, cfg);
            let l = planar_line_rep([-2.0 * g, -HORIZON / 2.0], [-2.0 * g, HORIZON / 2.0], cfg);
            (
                "converging lines cut by a transversal need not meet",
                vec![
                    Check::LineEnds {
                        rep: h1.clone(),
                        start: EndStatus::Infinite,
                        end: EndStatus::Terminal(d1(0.0, g)),
                    },
                    Check::LineEnds {
                        rep: h2.clone(),
                        start: EndStatus::Infinite,
                        end: EndStatus::Terminal(d1(0.0, -g)),
                    },
                    Check::EuclidFifthDenied { h1, h2, l, threshold_deg: 180.0 },
                ],
            )
        }
        "I.1" | "I.2" => {
            let h = through_line_rep([-1.0, 0.7], 1, [1.0, 0.4], cfg);
            let k = through_line_rep([-1.0, -0.7], 1, [1.0, 0.4], cfg);
            let claim: &'static str = if id == "I.1" {
                "two distinct points do not determine a line"
            } else {
                "a line has point pairs that do not determine it"
            };
            (
                claim,
                vec![Check::LinesDistinctThrough {
                    h,
                    k,
                    points: vec![PointRef::GateP, PointRef::GateQ],
                }],
            )
        }
        "I.3" | "I.4" => {
            let a = d1(-g, g);
            let b = d1(-2.0 * g, 2.0 * g);
            let alpha = plane([PlaneComponent::Delta1]);
            let beta = plane([PlaneComponent::Delta1, PlaneComponent::String(1)]);
            let claim: &'static str = if id == "I.3" {
                "three non-collinear points do not determine a plane"
            } else {
                "a plane has point triples that do not determine it"
            };
            (
                claim,
                vec![
                    Check::PlaneClosed { plane: alpha.clone(), pairs: 200, seed: 11 },
                    Check::PlaneClosed { plane: beta.clone(), pairs: 200, seed: 12 },
                    Check::PlaneContains {
                        plane: alpha,
                        points: vec![a.clone(), b.clone(), PointRef::GateP],
                        expect: true,
                    },
                    Check::PlaneContains {
                        plane: beta,
                        points: vec![a, b, PointRef::GateP],
                        expect: true,
                    },
                ],
            )
        }
        "I.5" => {
            let alpha = plane([PlaneComponent::Delta1, PlaneComponent::String(1)]);
            let a = d1(-2.0 * g, g);
            let b = PointRef::OnString { id: 1, t: l1 / 2.0 };
            let dpt = d2_abs(q[0] + 2.0 * g, g);
            let rep = through_line_rep([-2.0 * g, g], 1, [2.0 * g, g], cfg);
            (
                "two points of a line in a plane do not put the whole line there",
                vec![
                    Check::PlaneClosed { plane: alpha.clone(), pairs: 200, seed: 13 },
                    Check::PlaneContains {
                        plane: alpha.clone(),
                        points: vec![a.clone(), b.clone()],
                        expect: true,
                    },
                    Check::PlaneContains { plane: alpha, points: vec![dpt.clone()], expect: false },
                    Check::LineContains { rep, points: vec![a, b, dpt] },
                ],
            )
        }
        "I.6" => {
            let alpha = plane([PlaneComponent::String(1), PlaneComponent::String(2)]);
            let beta = plane([PlaneComponent::Delta1]);
            (
                "two planes may share exactly one point",
                vec![
                    Check::PlaneClosed { plane: alpha.clone(), pairs: 200, seed: 14 },
                    Check::PlaneClosed { plane: beta.clone(), pairs: 200, seed: 15 },
                    Check::PlanesMeetExactlyAt { a: alpha, b: beta, gates: vec![PointRef::GateP] },
                ],
            )
        }
        "I.7" => {
            let one_point = plane([
                PlaneComponent::Isolated(IsolatedId::I),
                PlaneComponent::Isolated(IsolatedId::J),
            ]);
            let three = plane([
                PlaneComponent::Isolated(IsolatedId::I),
                PlaneComponent::Isolated(IsolatedId::J),
                PlaneComponent::Isolated(IsolatedId::K),
            ]);
            (
                "a line may carry one point, a plane two, space three",
                vec![
                    Check::LineEnds {
                        rep: PathRep::singleton(PointRef::Isolated(IsolatedId::I)),
                        start: EndStatus::Terminal(PointRef::Isolated(IsolatedId::I)),
                        end: EndStatus::Terminal(PointRef::Isolated(IsolatedId::I)),
                    },
                    Check::PlaneClosed { plane: one_point.clone(), pairs: 50, seed: 16 },
                    Check::PlaneContains {
                        plane: one_point.clone(),
                        points: vec![
                            PointRef::Isolated(IsolatedId::I),
                            PointRef::Isolated(IsolatedId::J),
                        ],
                        expect: true,
                    },
                    Check::PlaneContains {
                        plane: one_point,
                        points: vec![PointRef::GateP, PointRef::Isolated(IsolatedId::K)],
                        expect: false,
                    },
                    Check::PlaneContains {
                        plane: three,
                        points: vec![PointRef::Isolated(IsolatedId::K)],
                        expect: true,
                    },
                ],
            )
        }
        "II.1" => {
            let rep = loop_rep(1, 2, cfg);
            let t = PointRef::OnString { id: 1, t: 7.0 * l1 / 8.0 };
            let v = PointRef::OnString { id: 2, t: 7.0 * l2 / 8.0 };
            (
                "betweenness on a loop is order sensitive",
                vec![
                    Check::Betweenness {
                        rep: rep.clone(),
                        a: PointRef::GateP,
                        b: t.clone(),
                        c: v.clone(),
                        expect: true,
                    },
                    Check::Betweenness { rep, a: v, b: t, c: PointRef::GateP, expect: false },
                ],
            )
        }
        "II.3" => {
            let rep = loop_rep(1, 2, cfg);
            let total = l1 + l2;
            let line = Line::from_rep(rep.clone(), cfg).map_err(|e| e.to_string())?;
            let r = line.rep().point_at(total / 3.0, cfg).map_err(|e| e.to_string())?;
            let t = line.rep().point_at(2.0 * total / 3.0, cfg).map_err(|e| e.to_string())?;
            let p = PointRef::GateP;
            (
                "three loop points each lie between the other two",
                vec![
                    Check::Betweenness {
                        rep: rep.clone(),
                        a: p.clone(),
                        b: r.clone(),
                        c: t.clone(),
                        expect: true,
                    },
                    Check::Betweenness {
                        rep: rep.clone(),
                        a: r.clone(),
                        b: t.clone(),
                        c: p.clone(),
                        expect: true,
                    },
                    Check::Betweenness { rep: rep.clone(), a: t.clone(), b: p.clone(), c: r.clone(), expect: true },
                    Check::OrderIs {
                        rep,
                        pts: vec![t.clone(), p.clone(), r.clone()],
                        expect: vec![p, r, t],
                    },
                ],
            )
        }
        "II.4" => {
            let mk = |first: u8, second: u8| {
                PathRep::from_legs(
                    vec![
                        Leg::Planar {
                            region: Region::Delta2,
                            from: [q[0] + g, 0.0],
                            to: q,
                        },
                        Leg::Str { id: first, from_t: cfg.string_len(first), to_t: 0.0 },
                        Leg::Str { id: second, from_t: 0.0, to_t: cfg.string_len(second) },
                        Leg::Planar {
                            region: Region::Delta2,
                            from: q,
                            to: [q[0] + HORIZON, 0.0],
                        },
                    ],
                    cfg,
                )
                .expect("structurally valid")
            };
            let a = d2_abs(q[0] + g, 0.0);
            let b = d2_abs(q[0] + 2.0 * g, 0.0);
            let cpt = PointRef::OnString { id: 1, t: l1 / 2.0 };
            let dpt = PointRef::OnString { id: 2, t: l2 / 2.0 };
            let pts = vec![a.clone(), b.clone(), cpt.clone(), dpt.clone()];
            (
                "the same four points admit two different orders",
                vec![
                    Check::OrderIs {
                        rep: mk(1, 2),
                        pts: pts.clone(),
                        expect: vec![a.clone(), cpt.clone(), dpt.clone(), b.clone()],
                    },
                    Check::OrderIs { rep: mk(2, 1), pts, expect: vec![a, dpt, cpt, b] },
                ],
            )
        }
        "II.5" => {
            // Segment AB along f1 through P; C left of it; the knotted line
            // cuts AB at P and misses BC and AC entirely.
            let a = [0.0, g];
            let b = [0.0, -g];
            let cpt = [-2.0 * g, 0.0];
            let seg = |u: [f64; 2], v: [f64; 2]| {
                PathRep::from_legs(
                    vec![Leg::Planar {
                        region: Region::Delta1,
                        from: u,
                        to: v,
                    }],
                    cfg,
                )
                .expect("valid segment")
            };
            let l = PathRep::from_legs(
                vec![
                    Leg::Planar {
                        region: Region::Delta2,
                        from: [q[0] + HORIZON, 0.0],
                        to: q,
                    },
                    Leg::Str { id: 2, from_t: l2, to_t: 0.0 },
                    Leg::Str { id: 1, from_t: 0.0, to_t: l1 },
                    Leg::Planar {
                        region: Region::Delta2,
                        from: q,
                        to: [q[0] + HORIZON, 0.0],
                    },
                ],
                cfg,
            )
            .expect("valid knot line");
            (
                "a line can cut one triangle side and miss both others",
                vec![
                    Check::IsGeodesic { path: l.clone(), expect: true },
                    Check::CommonPointsAre {
                        h: l.clone(),
                        k: seg(a, b),
                        isolated: vec![PointRef::GateP],
                        arcs: 0,
                    },
                    Check::PathsDisjoint { a: l.clone(), b: seg(b, cpt) },
                    Check::PathsDisjoint { a: l, b: seg(a, cpt) },
                ],
            )
        }
        "III.zero" => {
            let l0 = through_line_rep([-1.0, 0.6], 1, [1.0, 0.5], cfg);
            let a = PointRef::OnString { id: 2, t: l2 / 2.0 };
            let pencil = vec![loop_rep(1, 2, cfg), through_line_rep([-1.0, -0.4], 2, [1.0, -0.3], cfg)];
            (
                "no parallel passes through a string point",
                vec![Check::ParallelClassIs { line: l0, at: a, pencil, expect: ParallelClass::Zero }],
            )
        }
        "III.one" => {
            let lv = planar_line_rep([-g, -1.0], [-g, 1.0], cfg);
            let a = d1(-2.0 * g, 0.0);
            let parallel = planar_line_rep([-2.0 * g, -1.0], [-2.0 * g, 1.0], cfg);
            let crossing = planar_line_rep([-2.0 * g, 0.0], [-g, 1.0], cfg);
            (
                "exactly one parallel passes left of a line parallel to the frontier",
                vec![Check::ParallelClassIs {
                    line: lv,
                    at: a,
                    pencil: vec![parallel, crossing],
                    expect: ParallelClass::One,
                }],
            )
        }
        "III.infinite" => {
            // l through B on f1 and C inside; a off it sees infinitely many
            // parallels but not only parallels.
            let l = planar_line_rep([0.0, 2.0 * g], [-g, g], cfg);
            let a = d1(-3.0 * g, -2.0 * g);
            let mut pencil = Vec::new();
            for k in 0..100 {
                let theta = std::f64::consts::PI * (k as f64 + 0.5) / 100.0;
                let dir = [theta.cos(), theta.sin()];
                // The full planar chord through a in this direction.
                let reach = |s: f64| [a_xy(&a)[0] + s * dir[0], a_xy(&a)[1] + s * dir[1]];
                let to_wall = |sgn: f64| {
                    // Parameter where the chord leaves delta1.
                    if (dir[0] * sgn).abs() < 1e-12 {
                        HORIZON
                    } else {
                        let s = -a_xy(&a)[0] / (dir[0] * sgn);
                        if s > 0.0 {
                            s.min(HORIZON)
                        } else {
                            HORIZON
                        }
                    }
                };
                let sp = to_wall(1.0);
                let sm = to_wall(-1.0);
                let u = reach(sp);
                let v = [a_xy(&a)[0] - sm * dir[0], a_xy(&a)[1] - sm * dir[1]];
                if let Ok(rep) = PathRep::from_legs(
                    vec![Leg::Planar {
                        region: Region::Delta1,
                        from: v,
                        to: u,
                    }],
                    cfg,
                ) {
                    if let Ok(lines) = crate::extend::extend_maximally(&rep, cfg) {
                        if let Some(line) = lines.into_iter().next() {
                            pencil.push(line.rep().clone());
                        }
                    }
                }
            }
            (
                "infinitely many parallels pass through a point, but not all lines",
                vec![Check::ParallelClassIs {
                    line: l,
                    at: a,
                    pencil,
                    expect: ParallelClass::InfiniteNotAll,
                }],
            )
        }
        "III.theorem" => {
            let ad = planar_line_rep([-2.0 * g, g], [0.0, g], cfg);
            let be = planar_line_rep([0.0, 2.0 * g], [-1.5 * g, 3.5 * g], cfg);
            let ce = planar_line_rep([0.0, 3.0 * g], [-1.5 * g, 3.5 * g], cfg);
            let e = d1(-1.5 * g, 3.5 * g);
            (
                "parallelism is not transitive: two parallels to a line meet",
                vec![
                    Check::PathsDisjoint { a: be.clone(), b: ad.clone() },
                    Check::PathsDisjoint { a: ce.clone(), b: ad },
                    Check::CommonPointsAre { h: be, k: ce, isolated: vec![e], arcs: 0 },
                ],
            )
        }
        "III.finiteK" => (
            "no witness here realizes a finite parallel count of two or more",
            vec![Check::Unrealized {
                reason: "planar direction cones are closed intervals, so missing directions \
                         come in continua; a finite count of two or more never arises"
                    .to_string(),
            }],
        ),
        "III.infiniteAll" => (
            "no witness here realizes a point all of whose lines miss a given line",
            vec![Check::Unrealized {
                reason: "every planar point sends a ray through its gate, and gate rays meet \
                         every line passing a gate; no all-parallel pencil was constructed"
                    .to_string(),
            }],
        ),
        "IV.1" => {
            // Two distinct endpoints on the two strings make segments
            // congruent to a given planar one; near the frontier none fits.
            let len_ab = g;
            let a_par = HORIZON - g / 2.0;
            let rep_a = knot_line_rep([-1.0, 0.3], 1, 2, cfg);
            let rep_b = knot_line_rep([-1.0, 0.3], 2, 1, cfg);
            let ab = SegSpec {
                line_rep: planar_line_rep([-5.0 * g, -3.0 * g], [-5.0 * g - len_ab, -3.0 * g], cfg),
                from_param: HORIZON - 5.0 * g,
                to_param: HORIZON - 5.0 * g + len_ab,
            };
            let b1_t = len_ab - g / 2.0;
            let seg1 = SegSpec {
                line_rep: rep_a.clone(),
                from_param: a_par,
                to_param: HORIZON + b1_t,
            };
            let seg2 = SegSpec {
                line_rep: rep_b.clone(),
                from_param: a_par,
                to_param: HORIZON + b1_t,
            };
            // Near the frontier: the line ends at M, no room beyond A''.
            let wall_line = planar_line_rep([-2.0 * g, g], [0.0, g], cfg);
            (
                "a segment can be laid off to two points, or to none",
                vec![
                    Check::SegmentsCongruent { a: seg1.clone(), b: ab.clone(), expect: true },
                    Check::SegmentsCongruent { a: seg2.clone(), b: ab, expect: true },
                    Check::SegmentLengthIs { seg: seg1, expect: len_ab },
                    Check::SegmentLengthIs { seg: seg2, expect: len_ab },
                    Check::SegmentOverruns {
                        rep: wall_line,
                        from: d1(-len_ab / 2.0, g),
                        length: len_ab,
                    },
                ],
            )
        }
        "IV.1b" => {
            let rep = loop_rep(1, 2, cfg);
            let a_t = l1 / 8.0;
            let b_t = l2 / 8.0;
            let pa = a_t;
            let pb = l1 + (l2 - b_t);
            (
                "a segment need not be congruent to itself",
                vec![
                    Check::SegmentsCongruent {
                        a: SegSpec { line_rep: rep.clone(), from_param: pa, to_param: pb },
                        b: SegSpec { line_rep: rep, from_param: pb, to_param: pa },
                        expect: false,
                    },
                ],
            )
        }
        "IV.2" => {
            let mega = knot_line_rep([-1.0, 0.5], 1, 2, cfg);
            let direct = through_line_rep([-1.0, 0.5], 1, [1.0, 0.0], cfg);
            let c_par = HORIZON - 2.0 * g;
            let d_off = 3.0 * g;
            let long_len = 2.0 * g + l1 + l2 + l3 + d_off;
            let short_len = 2.0 * g + l1 + d_off;
            let y = -4.0 * g;
            let ab = SegSpec {
                line_rep: planar_line_rep([-long_len - g, y], [-g, y], cfg),
                from_param: HORIZON - long_len - g,
                to_param: HORIZON - g,
            };
            let apbp = SegSpec {
                line_rep: planar_line_rep([-long_len - 2.0 * g, y - g], [-2.0 * g, y - g], cfg),
                from_param: HORIZON - long_len - 2.0 * g,
                to_param: HORIZON - 2.0 * g,
            };
            let cd_long = SegSpec {
                line_rep: mega,
                from_param: c_par,
                to_param: HORIZON + l1 + l2 + l3 + d_off,
            };
            let cd_short = SegSpec {
                line_rep: direct,
                from_param: c_par,
                to_param: HORIZON + l1 + d_off,
            };
            (
                "congruence fails to carry across representations",
                vec![
                    Check::SegmentLengthIs { seg: cd_long.clone(), expect: long_len },
                    Check::SegmentLengthIs { seg: cd_short.clone(), expect: short_len },
                    Check::SegmentsCongruent { a: ab.clone(), b: cd_long, expect: true },
                    Check::SegmentsCongruent { a: apbp.clone(), b: ab, expect: true },
                    Check::SegmentsCongruent { a: apbp, b: cd_short, expect: false },
                ],
            )
        }
        "IV.3" => {
            // Adjacent congruent segments on a planar line against the
            // knotted line: the wholes disagree.
            let u = l1 / 4.0;
            let y = -3.0 * g;
            let a = [-3.0 * l1, y];
            let planar = planar_line_rep(a, [a[0] + 1.0, y], cfg);
            let pa = HORIZON + a[0] - 0.0;
            let rep1 = knot_line_rep([-1.0, 0.0], 1, 2, cfg);
            let rep2 = knot_line_rep([-1.0, 0.0], 2, 1, cfg);
            let ap = HORIZON - u;
            let len_ab = 3.0 * l1 / 4.0;
            let len_bc = 5.0 * l1 / 4.0;
            let t_cp = l2 - 3.0 * l1 / 4.0;
            let apcp_traversal = SegSpec {
                line_rep: rep1.clone(),
                from_param: ap,
                to_param: HORIZON + l1 + (l2 - t_cp),
            };
            let apcp_short = SegSpec {
                line_rep: rep2,
                from_param: ap,
                to_param: HORIZON + t_cp,
            };
            let seg_planar = |off0: f64, off1: f64| SegSpec {
                line_rep: planar.clone(),
                from_param: pa + off0,
                to_param: pa + off1,
            };
            (
                "sums of congruent segments need not be congruent",
                vec![
                    Check::SegmentsCongruent {
                        a: seg_planar(0.0, len_ab),
                        b: SegSpec {
                            line_rep: rep1.clone(),
                            from_param: ap,
                            to_param: HORIZON + (len_ab - u),
                        },
                        expect: true,
                    },
                    Check::SegmentsCongruent {
                        a: seg_planar(len_ab, len_ab + len_bc),
                        b: SegSpec {
                            line_rep: rep1,
                            from_param: HORIZON + (len_ab - u),
                            to_param: HORIZON + l1 + (l2 - t_cp),
                        },
                        expect: true,
                    },
                    Check::SegmentsCongruent {
                        a: seg_planar(0.0, len_ab + len_bc),
                        b: apcp_traversal,
                        expect: true,
                    },
                    Check::SegmentsCongruent {
                        a: seg_planar(0.0, len_ab + len_bc),
                        b: apcp_short,
                        expect: false,
                    },
                    Check::DistanceIs {
                        a: d1(a[0], y),
                        b: PointRef::OnString { id: 2, t: t_cp },
                        expect: Some((a[0].powi(2) + y * y).sqrt() + t_cp),
                    },
                ],
            )
        }
        "IV.4" => {
            let h = through_line_rep([-1.0, 0.5], 1, [1.0, 0.5], cfg);
            let k = through_line_rep([-1.0, 0.5], 2, [1.0, -0.5], cfg);
            let hp = through_line_rep([-1.0, -0.5], 1, [1.0, 0.5], cfg);
            let kp1 = through_line_rep([-1.0, -0.5], 2, [1.0, -0.3], cfg);
            let kp2 = through_line_rep([-1.0, -0.5], 2, [1.0, -0.6], cfg);
            let kp3 = through_line_rep([-1.0, -0.5], 2, [1.0, -0.9], cfg);
            (
                "many half-lines reproduce a given angle",
                vec![
                    Check::AngleBetweenIs { h: h.clone(), k, expect_deg: 0.0 },
                    Check::AngleBetweenIs { h: hp.clone(), k: kp1.clone(), expect_deg: 0.0 },
                    Check::AngleBetweenIs { h: hp.clone(), k: kp2.clone(), expect_deg: 0.0 },
                    Check::AngleBetweenIs { h: hp, k: kp3.clone(), expect_deg: 0.0 },
                    Check::LinesDistinctThrough { h: kp1, k: kp2, points: vec![PointRef::GateP] },
                    Check::LinesDistinctThrough { h: kp3, k: h, points: vec![PointRef::GateP] },
                ],
            )
        }
        "IV.4b" | "IV.5" => {
            // The angle of the two strings taken on one pair of
            // representations is zero, on another strictly positive.
            let zero_h = through_line_rep([-1.0, 0.5], 1, [1.0, 0.5], cfg);
            let zero_k = through_line_rep([-1.0, -0.5], 2, [1.0, 0.5], cfg);
            let zero_h2 = through_line_rep([-1.0, 0.8], 1, [1.0, 0.5], cfg);
            let pos_h = through_line_rep([-1.0, 0.5], 1, [1.0, 0.5], cfg);
            let pos_k = through_line_rep([-1.0, -0.5], 2, [1.0, -0.5], cfg);
            let claim: &'static str = if id == "IV.4b" {
                "an angle need not be congruent to itself"
            } else {
                "angle congruence fails to be transitive across representations"
            };
            (
                claim,
                vec![
                    Check::AngleBetweenIs { h: zero_h.clone(), k: zero_k.clone(), expect_deg: 0.0 },
                    Check::AngleBetweenIs { h: zero_h2, k: zero_k, expect_deg: 0.0 },
                    Check::AngleBetweenExceeds { h: pos_h, k: pos_k, min_deg: 0.0 },
                ],
            )
        }
        "IV.6" => {
            // Side-angle-side data agree, yet one triangle's sides cut twice
            // and the other's once, and a remaining angle differs.
            let m = d2_abs(q[0] + 2.0 * g, g);
            let n = d2_abs(q[0] + 2.0 * g, -g);
            let p = PointRef::GateP;
            let theta = tangent_angle_at_q(cfg, 1, 2);
            let len_pm = l1 + crate::path::dist2(&[q[0] + 2.0 * g, g], &q);
            let len_pn = l2 + crate::path::dist2(&[q[0] + 2.0 * g, -g], &q);
            // The planar copy: R with rays at the same opening angle.
            let r = [-6.0 * g, 0.0];
            let half = theta.to_radians() / 2.0;
            let mp = [r[0] + len_pm * half.cos(), r[1] + len_pm * half.sin()];
            let np = [r[0] + len_pn * half.cos(), r[1] - len_pn * half.sin()];
            let side = |from: [f64; 2], to: [f64; 2]| {
                PathRep::from_legs(
                    vec![Leg::Planar {
                        region: Region::Delta1,
                        from,
                        to,
                    }],
                    cfg,
                )
                .expect("valid planar side")
            };
            let pm_line = through_line_rep([-1.0, 0.4], 1, [2.0 * g, g], cfg);
            let pn_line = through_line_rep([-1.0, -0.4], 2, [2.0 * g, -g], cfg);
            let pm_side = pm_line
                .subpath(HORIZON, HORIZON + len_pm, cfg)
                .map_err(|e| e.to_string())?;
            let pn_side = pn_line
                .subpath(HORIZON, HORIZON + len_pn, cfg)
                .map_err(|e| e.to_string())?;
            (
                "side-angle-side data do not force congruent triangles",
                vec![
                    Check::AngleAtPathsIs {
                        h: pm_side.clone(),
                        k: pn_side.clone(),
                        at: p.clone(),
                        expect_deg: theta,
                    },
                    Check::AngleAtPathsIs {
                        h: side(r, mp),
                        k: side(r, np),
                        at: d1(r[0], r[1]),
                        expect_deg: theta,
                    },
                    Check::CommonPointsAre {
                        h: pm_line,
                        k: pn_line,
                        isolated: vec![PointRef::GateP, PointRef::GateQ],
                        arcs: 0,
                    },
                    Check::CommonPointsAre {
                        h: side(r, mp),
                        k: side(r, np),
                        isolated: vec![d1(r[0], r[1])],
                        arcs: 0,
                    },
                    // The angles at M and M' differ, so the triangles are not
                    // congruent.
                    Check::AngleAtPathsDiffer {
                        h1: pm_side.reverse(),
                        k1: segment_between(&m, &n, cfg)?,
                        at1: m,
                        h2: side(mp, r),
                        k2: side(mp, np),
                        at2: d1(mp[0], mp[1]),
                    },
                ],
            )
        }
        "IV.sum180" => {
            let a = d1(-5.0 * g, 0.0);
            let b = d1(-g, g);
            let c = d1(-2.0 * g, -3.0 * g);
            (
                "an all-planar triangle has angle sum two right angles",
                vec![Check::TriangleSum {
                    a,
                    b,
                    c,
                    sides: SideChoice::default(),
                    cmp: SumCmp::Equals(180.0),
                }],
            )
        }
        "IV.sumLess" => {
            let s = PointRef::OnString { id: 2, t: l2 / 2.0 };
            let r = d2_abs(q[0] + 4.0 * g, g);
            let t = d2_abs(q[0] + 2.0 * g, -g);
            let tqr = planar_angle_deg(q, [q[0] + 4.0 * g, g], [q[0] + 2.0 * g, -g]);
            (
                "a triangle angle sum can fall anywhere under two right angles",
                vec![
                    Check::TriangleAnglesAre {
                        a: s.clone(),
                        b: r.clone(),
                        c: t.clone(),
                        sides: SideChoice::default(),
                        expect: [
                            0.0,
                            planar_angle_deg([q[0] + 4.0 * g, g], q, [q[0] + 2.0 * g, -g]),
                            planar_angle_deg([q[0] + 2.0 * g, -g], q, [q[0] + 4.0 * g, g]),
                        ],
                    },
                    Check::TriangleSum {
                        a: s.clone(),
                        b: r.clone(),
                        c: t.clone(),
                        sides: SideChoice::default(),
                        cmp: SumCmp::Equals(180.0 - tqr),
                    },
                    Check::TriangleSum { a: s, b: r, c: t, sides: SideChoice::default(), cmp: SumCmp::Greater(0.0) },
                ],
            )
        }
        "IV.sum0" => {
            let a = d1(-g, g / 2.0);
            let b = d2_abs(q[0] + g, g / 2.0);
            let c = PointRef::OnString { id: 3, t: (l3 - l1) / 4.0 };
            (
                "a non-degenerate triangle can have angle sum zero",
                vec![
                    Check::TriangleAnglesAre {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                        sides: SideChoice::default(),
                        expect: [0.0, 0.0, 0.0],
                    },
                    Check::TriangleSum {
                        a,
                        b,
                        c,
                        sides: SideChoice::default(),
                        cmp: SumCmp::Equals(0.0),
                    },
                ],
            )
        }
        "IV.sumMore" => {
            let theta_q = tangent_angle_at_q(cfg, 1, 2);
            let d = 1.5 * g;
            let eps = d * (theta_q.to_radians() / 2.0).sin() / 2.0;
            let a = d1(-d, eps);
            let b = d1(-d, -eps);
            let base = planar_angle_deg([-d, eps], [0.0, 0.0], [-d, -eps])
                + planar_angle_deg([-d, -eps], [0.0, 0.0], [-d, eps]);
            // Sides: A reaches Q through s2 (index 1), B through s1 (index 0).
            let sides = SideChoice { ab: 0, ac: 1, bc: 0 };
            (
                "a triangle angle sum can exceed two right angles",
                vec![
                    Check::TriangleSum {
                        a: a.clone(),
                        b: b.clone(),
                        c: PointRef::GateQ,
                        sides,
                        cmp: SumCmp::Greater(180.0),
                    },
                    Check::TriangleSum {
                        a,
                        b,
                        c: PointRef::GateQ,
                        sides,
                        cmp: SumCmp::Equals(base + theta_q),
                    },
                ],
            )
        }
        "IV.circle" => {
            let r = l1 + 0.4 * (l3 - l1);
            (
                "a circle about Q decomposes into arcs in both half-planes and string points",
                vec![Check::CircleShape {
                    center: PointRef::GateQ,
                    radius: r,
                    planar_arcs: 2,
                    string_points: vec![(3, vec![r - l1, l3 - r])],
                    gates: 0,
                    empty: false,
                }],
            )
        }
        "V.1" => {
            let a = [-2.0 * g, g];
            let b = [0.0, 1.5 * g];
            let rep = planar_line_rep(a, b, cfg);
            let apt = d1(a[0], a[1]);
            let bpt = d1(b[0], b[1]);
            let gap = crate::path::dist2(&a, &b);
            let vertical = planar_line_rep([-g, -1.0], [-g, 1.0], cfg);
            let looprep = loop_rep(1, 2, cfg);
            let t = PointRef::OnString { id: 1, t: 3.0 * l1 / 4.0 };
            (
                "congruent steps from A toward B never pass a terminal B",
                vec![
                    Check::ArchimedeanIs {
                        line: rep.clone(),
                        a: apt.clone(),
                        b: bpt.clone(),
                        step: gap / 3.0,
                        expect: false,
                    },
                    Check::ArchimedeanIs {
                        line: vertical,
                        a: d1(-g, -1.0),
                        b: d1(-g, 1.0),
                        step: 0.7,
                        expect: true,
                    },
                    Check::ArchimedeanIs {
                        line: looprep,
                        a: PointRef::GateP,
                        b: t,
                        step: l1 / 2.0,
                        expect: true,
                    },
                ],
            )
        }
        other => return Err(format!("no builder for fixture {other:?}")),
    };
    Ok(fixture)
}

fn a_xy(a: &PointRef) -> [f64; 2] {
    match a {
        PointRef::Planar1 { x, y } | PointRef::Planar2 { x, y } => [*x, *y],
        _ => [0.0, 0.0],
    }
}

fn segment_between(a: &PointRef, b: &PointRef, cfg: &MdConfig) -> Result<PathRep, String> {
    let geos = geodesics_between(a, b, cfg).map_err(|e| e.to_string())?;
    geos.into_iter().next().ok_or_else(|| "no geodesic".to_string())
}
