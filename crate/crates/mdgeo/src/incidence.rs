//! Incidence vocabulary over lines: betweenness, point order, common points,
//! angles as means of tangent angles, segment congruence, triangles.
//!
//! Angles follow the tangent convention: at a common point each line
//! contributes its outgoing branch directions (planar directions in the
//! plane, configured string tangents at the gates), and the angle at the
//! point is the smallest angle between branch pairs. A shared arc forces the
//! angle to zero, and an arc anywhere in the intersection forces the mean
//! angle of the pair of lines to zero.

use crate::config::{MdConfig, Tangent, TOL};
use crate::extend::Line;
use crate::metric::{geodesics_between, MetricError};
use crate::path::{coords_in, dist2, Leg, PathError, PathRep, Region};
use crate::point::PointRef;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IncidenceError {
    #[error("point {0} does not lie on the line")]
    PointNotOnLine(String),
    #[error("{0} is not a common point of the two lines")]
    NotACommonPoint(String),
    #[error("the lines have no common point")]
    NoCommonPoint,
    #[error("the tangent at a string interior point is undefined")]
    UndefinedTangent,
    #[error("the three points are collinear: {0}")]
    DegenerateTriangle(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

/// An angle in degrees, within [0, 180].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AngleValue {
    pub degrees: f64,
}

impl AngleValue {
    pub fn approx_eq(&self, other: &AngleValue) -> bool {
        (self.degrees - other.degrees).abs() <= 1e-9
    }
}

// ---------------------------------------------------------------------------
// Betweenness and order.
// ---------------------------------------------------------------------------

/// True iff `b` lies strictly between `a` and `c` along the line's directed
/// representation. On a loop the order is cyclic in traversal direction
/// starting at `a`; on an open line parameters are compared directly. Each
/// point enters at its first traversal occurrence.
pub fn betweenness(
    line: &Line,
    a: &PointRef,
    b: &PointRef,
    c: &PointRef,
    cfg: &MdConfig,
) -> Result<bool, IncidenceError> {
    let rep = line.rep();
    let pa = rep.param_of(a, cfg).map_err(param_err)?;
    let pb = rep.param_of(b, cfg).map_err(param_err)?;
    let pc = rep.param_of(c, cfg).map_err(param_err)?;
    if line.is_loop() {
        let total = rep.length();
        let rb = cyc(pb - pa, total);
        let rc = cyc(pc - pa, total);
        Ok(rb > TOL && rb + TOL < rc)
    } else {
        Ok((pa + TOL < pb && pb + TOL < pc) || (pc + TOL < pb && pb + TOL < pa))
    }
}

fn cyc(d: f64, total: f64) -> f64 {
    let mut d = d % total;
    if d < 0.0 {
        d += total;
    }
    d
}

fn param_err(e: PathError) -> IncidenceError {
    match e {
        PathError::PointNotOnPath(p) => IncidenceError::PointNotOnLine(p),
        other => IncidenceError::Path(other),
    }
}

/// Sorts the points by their first traversal parameter along the line's
/// representation.
pub fn order_tuple(
    line: &Line,
    pts: &[PointRef],
    cfg: &MdConfig,
) -> Result<Vec<PointRef>, IncidenceError> {
    let rep = line.rep();
    let mut keyed: Vec<(f64, PointRef)> = Vec::with_capacity(pts.len());
    for p in pts {
        let param = rep.param_of(p, cfg).map_err(param_err)?;
        keyed.push((param, p.clone()));
    }
    keyed.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    Ok(keyed.into_iter().map(|(_, p)| p).collect())
}

// ---------------------------------------------------------------------------
// Common points.
// ---------------------------------------------------------------------------

/// The intersection of two lines, decomposed into maximal shared arcs and
/// isolated common points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommonPoints {
    pub isolated: Vec<PointRef>,
    pub arcs: Vec<PathRep>,
}

impl CommonPoints {
    pub fn has_arc(&self) -> bool {
        !self.arcs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.isolated.is_empty() && self.arcs.is_empty()
    }

    fn point_on_some_arc(&self, p: &PointRef, cfg: &MdConfig) -> bool {
        self.arcs.iter().any(|a| !a.occurrences(p, cfg).is_empty())
    }
}

#[derive(Debug, Clone)]
enum Fragment {
    Str { id: u8, lo: f64, hi: f64 },
    Planar { region: Region, a: [f64; 2], b: [f64; 2] },
}

enum SegHit {
    None,
    Point([f64; 2]),
    Overlap([f64; 2], [f64; 2]),
}

fn cross2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn seg_intersect(a1: &[f64; 2], b1: &[f64; 2], a2: &[f64; 2], b2: &[f64; 2]) -> SegHit {
    let l1 = dist2(a1, b1);
    let l2 = dist2(a2, b2);
    if l1 <= TOL || l2 <= TOL {
        return SegHit::None;
    }
    let d1 = [(b1[0] - a1[0]) / l1, (b1[1] - a1[1]) / l1];
    let d2 = [(b2[0] - a2[0]) / l2, (b2[1] - a2[1]) / l2];
    let r = [a2[0] - a1[0], a2[1] - a1[1]];
    let denom = cross2(d1, d2);
    if denom.abs() > 1e-9 {
        let t = cross2(r, d2) / denom;
        let s = cross2(r, d1) / denom;
        if t >= -1e-7 && t <= l1 + 1e-7 && s >= -1e-7 && s <= l2 + 1e-7 {
            return SegHit::Point([a1[0] + t * d1[0], a1[1] + t * d1[1]]);
        }
        return SegHit::None;
    }
    // Parallel; the cross product is the perpendicular offset of a2.
    if cross2(r, d1).abs() > 1e-6 {
        return SegHit::None;
    }
    let p0 = r[0] * d1[0] + r[1] * d1[1];
    let sign = d1[0] * d2[0] + d1[1] * d2[1];
    let p1 = p0 + l2 * sign.signum();
    let (lo, hi) = (p0.min(p1).max(0.0), p0.max(p1).min(l1));
    if hi - lo > TOL {
        let at = |s: f64| [a1[0] + s * d1[0], a1[1] + s * d1[1]];
        SegHit::Overlap(at(lo), at(hi))
    } else if hi >= lo - TOL {
        let s = (lo + hi) / 2.0;
        SegHit::Point([a1[0] + s * d1[0], a1[1] + s * d1[1]])
    } else {
        SegHit::None
    }
}

/// The complete decomposition of the intersection of two lines.
pub fn common_points(h: &Line, k: &Line, cfg: &MdConfig) -> CommonPoints {
    common_points_of_paths(h.rep(), k.rep(), cfg)
}

pub(crate) fn common_points_of_paths(h: &PathRep, k: &PathRep, cfg: &MdConfig) -> CommonPoints {
    if h == k {
        return CommonPoints {
            isolated: vec![],
            arcs: vec![h.clone()],
        };
    }
    let mut fragments: Vec<Fragment> = Vec::new();
    let mut points: Vec<PointRef> = Vec::new();

    match (h, k) {
        (PathRep::Singleton(a), _) => {
            if !k.occurrences(a, cfg).is_empty() {
                points.push(a.clone());
            }
            return finalize(fragments, points, cfg);
        }
        (_, PathRep::Singleton(b)) => {
            if !h.occurrences(b, cfg).is_empty() {
                points.push(b.clone());
            }
            return finalize(fragments, points, cfg);
        }
        _ => {}
    }

    for lh in h.legs() {
        for lk in k.legs() {
            match (lh, lk) {
                (Leg::Str { id: i, from_t: a0, to_t: a1 }, Leg::Str { id: j, from_t: b0, to_t: b1 }) => {
                    if i != j {
                        continue;
                    }
                    let (alo, ahi) = (a0.min(*a1), a0.max(*a1));
                    let (blo, bhi) = (b0.min(*b1), b0.max(*b1));
                    let (lo, hi) = (alo.max(blo), ahi.min(bhi));
                    if hi - lo > TOL {
                        fragments.push(Fragment::Str { id: *i, lo, hi });
                    } else if hi >= lo - TOL {
                        let t = (lo + hi) / 2.0;
                        if let Ok(p) =
                            crate::point::make_point(crate::point::RawPoint::OnString(*i, t), cfg)
                        {
                            points.push(p);
                        }
                    }
                }
                (
                    Leg::Planar { region: r1, from: fa, to: ta },
                    Leg::Planar { region: r2, from: fb, to: tb },
                ) => {
                    if r1 != r2 {
                        continue;
                    }
                    match seg_intersect(fa, ta, fb, tb) {
                        SegHit::None => {}
                        SegHit::Point(xy) => {
                            if let Ok(p) = crate::path::planar_point(*r1, xy, cfg) {
                                points.push(p);
                            }
                        }
                        SegHit::Overlap(a, b) => {
                            fragments.push(Fragment::Planar { region: *r1, a, b })
                        }
                    }
                }
                _ => {}
            }
        }
    }
    // Gates reached by legs of different kinds.
    for gate in [PointRef::GateP, PointRef::GateQ] {
        if !h.occurrences(&gate, cfg).is_empty() && !k.occurrences(&gate, cfg).is_empty() {
            points.push(gate);
        }
    }
    finalize(fragments, points, cfg)
}

fn finalize(mut fragments: Vec<Fragment>, points: Vec<PointRef>, cfg: &MdConfig) -> CommonPoints {
    merge_fragments(&mut fragments);
    let arcs = chain_fragments(&fragments, cfg);
    let mut result = CommonPoints {
        isolated: vec![],
        arcs,
    };
    let mut isolated: Vec<PointRef> = Vec::new();
    for p in points {
        if result.point_on_some_arc(&p, cfg) {
            continue;
        }
        if !isolated.iter().any(|q| q.approx_eq(&p)) {
            isolated.push(p);
        }
    }
    isolated.sort_by_key(|p| p.to_string());
    result.isolated = isolated;
    result
}

/// Unions overlapping fragments on the same carrier.
fn merge_fragments(fragments: &mut Vec<Fragment>) {
    let mut changed = true;
    while changed {
        changed = false;
        'outer: for i in 0..fragments.len() {
            for j in (i + 1)..fragments.len() {
                if let Some(m) = merge_pair(&fragments[i], &fragments[j]) {
                    fragments[i] = m;
                    fragments.remove(j);
                    changed = true;
                    break 'outer;
                }
            }
        }
    }
}

fn merge_pair(a: &Fragment, b: &Fragment) -> Option<Fragment> {
    match (a, b) {
        (Fragment::Str { id: i, lo: a0, hi: a1 }, Fragment::Str { id: j, lo: b0, hi: b1 }) => {
            if i != j || a0.max(*b0) > a1.min(*b1) + TOL {
                return None;
            }
            Some(Fragment::Str {
                id: *i,
                lo: a0.min(*b0),
                hi: a1.max(*b1),
            })
        }
        (
            Fragment::Planar { region: r1, a: a1, b: b1 },
            Fragment::Planar { region: r2, a: a2, b: b2 },
        ) => {
            if r1 != r2 {
                return None;
            }
            let l = dist2(a1, b1);
            if l <= TOL {
                return None;
            }
            let d = [(b1[0] - a1[0]) / l, (b1[1] - a1[1]) / l];
            let off = |p: &[f64; 2]| ((p[0] - a1[0]) * d[1] - (p[1] - a1[1]) * d[0]).abs();
            if off(a2) > 1e-6 || off(b2) > 1e-6 {
                return None;
            }
            let proj = |p: &[f64; 2]| (p[0] - a1[0]) * d[0] + (p[1] - a1[1]) * d[1];
            let (p2lo, p2hi) = {
                let (x, y) = (proj(a2), proj(b2));
                (x.min(y), x.max(y))
            };
            // Merge only when the collinear pieces touch.
            if p2hi < -TOL || p2lo > l + TOL {
                return None;
            }
            let lo = p2lo.min(0.0);
            let hi = p2hi.max(l);
            let at = |s: f64| [a1[0] + s * d[0], a1[1] + s * d[1]];
            Some(Fragment::Planar {
                region: *r1,
                a: at(lo),
                b: at(hi),
            })
        }
        _ => None,
    }
}

/// Chains fragments sharing endpoints into maximal arcs (split at branch
/// points), each arc a canonical path.
fn chain_fragments(fragments: &[Fragment], cfg: &MdConfig) -> Vec<PathRep> {
    let frag_leg = |f: &Fragment| match f {
        Fragment::Str { id, lo, hi } => Leg::Str {
            id: *id,
            from_t: *lo,
            to_t: *hi,
        },
        Fragment::Planar { region, a, b } => Leg::Planar {
            region: *region,
            from: *a,
            to: *b,
        },
    };
    let endpoint = |leg: &Leg, finish: bool| -> Option<PointRef> {
        match leg {
            Leg::Planar { region, from, to } => {
                crate::path::planar_point(*region, if finish { *to } else { *from }, cfg).ok()
            }
            Leg::Str { id, from_t, to_t } => crate::point::make_point(
                crate::point::RawPoint::OnString(*id, if finish { *to_t } else { *from_t }),
                cfg,
            )
            .ok(),
        }
    };
    let flip = |leg: &Leg| match leg {
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
    };

    let legs: Vec<Leg> = fragments.iter().map(frag_leg).collect();
    let n = legs.len();
    let mut used = vec![false; n];
    let mut arcs: Vec<PathRep> = Vec::new();

    // Endpoint degrees across fragments, to cut chains at branch points.
    let mut ends: Vec<(PointRef, usize)> = Vec::new();
    for l in &legs {
        for finish in [false, true] {
            if let Some(p) = endpoint(l, finish) {
                if let Some(e) = ends.iter_mut().find(|(q, _)| q.approx_eq(&p)) {
                    e.1 += 1;
                } else {
                    ends.push((p, 1));
                }
            }
        }
    }
    let degree = |p: &PointRef| {
        ends.iter()
            .find(|(q, _)| q.approx_eq(p))
            .map(|(_, d)| *d)
            .unwrap_or(0)
    };

    for start in 0..n {
        if used[start] {
            continue;
        }
        used[start] = true;
        let mut chain = vec![legs[start].clone()];
        loop {
            let Some(tail) = endpoint(chain.last().unwrap(), true) else { break };
            if degree(&tail) != 2 {
                break;
            }
            let hit = (0..n).find_map(|i| {
                if used[i] {
                    return None;
                }
                if endpoint(&legs[i], false).map(|p| p.approx_eq(&tail)).unwrap_or(false) {
                    return Some((i, legs[i].clone()));
                }
                if endpoint(&legs[i], true).map(|p| p.approx_eq(&tail)).unwrap_or(false) {
                    return Some((i, flip(&legs[i])));
                }
                None
            });
            let Some((i, leg)) = hit else { break };
            used[i] = true;
            chain.push(leg);
        }
        loop {
            let Some(head) = endpoint(&chain[0], false) else { break };
            if degree(&head) != 2 {
                break;
            }
            let hit = (0..n).find_map(|i| {
                if used[i] {
                    return None;
                }
                if endpoint(&legs[i], true).map(|p| p.approx_eq(&head)).unwrap_or(false) {
                    return Some((i, legs[i].clone()));
                }
                if endpoint(&legs[i], false).map(|p| p.approx_eq(&head)).unwrap_or(false) {
                    return Some((i, flip(&legs[i])));
                }
                None
            });
            let Some((i, leg)) = hit else { break };
            used[i] = true;
            chain.insert(0, leg);
        }
        if let Ok(p) = PathRep::from_legs(chain, cfg) {
            arcs.push(p);
        }
    }
    arcs.sort_by_key(|a| format!("{a:?}"));
    arcs
}

// ---------------------------------------------------------------------------
// Angles.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
enum Branch {
    /// An outgoing unit direction in 3-space.
    Dir(Tangent),
    /// Along a string interior, toward increasing (+1) or decreasing (-1)
    /// arclength; the embedding there is abstract.
    AlongString(u8, i8),
}

/// Outgoing branch directions of a path at each occurrence of `o`.
fn branch_dirs(rep: &PathRep, o: &PointRef, cfg: &MdConfig) -> Vec<Branch> {
    let mut out: Vec<Branch> = Vec::new();
    let mut push = |b: Branch| {
        if !out.contains(&b) {
            out.push(b);
        }
    };
    for leg in rep.legs() {
        match leg {
            Leg::Planar { region, from, to } => {
                let Some(xy) = coords_in(*region, o, cfg) else { continue };
                let Some(s) = crate::path::project_on_segment(from, to, &xy) else { continue };
                let len = dist2(from, to);
                let d = [(to[0] - from[0]) / len, (to[1] - from[1]) / len];
                if s > TOL {
                    push(Branch::Dir([-d[0], -d[1], 0.0]));
                }
                if s < len - TOL {
                    push(Branch::Dir([d[0], d[1], 0.0]));
                }
            }
            Leg::Str { id, from_t, to_t } => {
                let t_here = match o {
                    PointRef::OnString { id: pid, t } if pid == id => *t,
                    PointRef::GateP => 0.0,
                    PointRef::GateQ => cfg.string_len(*id),
                    _ => continue,
                };
                let (lo, hi) = (from_t.min(*to_t), from_t.max(*to_t));
                if t_here < lo - TOL || t_here > hi + TOL {
                    continue;
                }
                let li = cfg.string_len(*id);
                if t_here < hi - TOL {
                    // Branch toward increasing arclength.
                    if t_here <= TOL {
                        push(Branch::Dir(cfg.string_tangent(*id, true)));
                    } else {
                        push(Branch::AlongString(*id, 1));
                    }
                }
                if t_here > lo + TOL {
                    // Branch toward decreasing arclength.
                    if (t_here - li).abs() <= TOL {
                        push(Branch::Dir(cfg.string_tangent(*id, false)));
                    } else {
                        push(Branch::AlongString(*id, -1));
                    }
                }
            }
        }
    }
    out
}

fn branch_angle(a: &Branch, b: &Branch) -> Result<f64, IncidenceError> {
    match (a, b) {
        (Branch::Dir(u), Branch::Dir(v)) => {
            let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
            Ok(dot.clamp(-1.0, 1.0).acos().to_degrees())
        }
        (Branch::AlongString(i, si), Branch::AlongString(j, sj)) if i == j => {
            Ok(if si == sj { 0.0 } else { 180.0 })
        }
        _ => Err(IncidenceError::UndefinedTangent),
    }
}

/// The angle of two lines at a common point `o`: zero on a shared arc,
/// otherwise the smallest angle between outgoing branch tangents.
pub fn angle_at(h: &Line, k: &Line, o: &PointRef, cfg: &MdConfig) -> Result<AngleValue, IncidenceError> {
    angle_at_paths(h.rep(), k.rep(), o, cfg)
}

/// The angle of two directed path representations at a common point `o`:
/// zero on a shared arc, otherwise the smallest angle between outgoing
/// branch tangents. Paths that end at `o` contribute a single branch, which
/// realizes angles between specific rays (triangle sides, right-angle
/// constructions).
pub fn angle_at_paths(
    h: &PathRep,
    k: &PathRep,
    o: &PointRef,
    cfg: &MdConfig,
) -> Result<AngleValue, IncidenceError> {
    if h.occurrences(o, cfg).is_empty() || k.occurrences(o, cfg).is_empty() {
        return Err(IncidenceError::NotACommonPoint(o.to_string()));
    }
    let shared = common_points_of_paths(h, k, cfg);
    if shared.point_on_some_arc(o, cfg) {
        return Ok(AngleValue { degrees: 0.0 });
    }
    let bh = branch_dirs(h, o, cfg);
    let bk = branch_dirs(k, o, cfg);
    let mut best: Option<f64> = None;
    for a in &bh {
        for b in &bk {
            let deg = branch_angle(a, b)?;
            best = Some(best.map_or(deg, |x: f64| x.min(deg)));
        }
    }
    best.map(|degrees| AngleValue { degrees })
        .ok_or(IncidenceError::UndefinedTangent)
}

/// The angle of two lines: zero when they share an arc (an arc contributes
/// infinitely many zero angles, dominating any mean), otherwise the
/// arithmetic mean of the angles at their isolated common points.
pub fn angle_between(h: &Line, k: &Line, cfg: &MdConfig) -> Result<AngleValue, IncidenceError> {
    let shared = common_points(h, k, cfg);
    if shared.has_arc() {
        return Ok(AngleValue { degrees: 0.0 });
    }
    if shared.isolated.is_empty() {
        return Err(IncidenceError::NoCommonPoint);
    }
    let mut sum = 0.0;
    for p in &shared.isolated {
        sum += angle_at(h, k, p, cfg)?.degrees;
    }
    Ok(AngleValue {
        degrees: sum / shared.isolated.len() as f64,
    })
}

// ---------------------------------------------------------------------------
// Segments.
// ---------------------------------------------------------------------------

/// A directed segment of a line: the system of points between `from` and
/// `to` along a particular traversal representation. A segment carries its
/// representation, so two segments with the same endpoints may differ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    line: Line,
    rep: PathRep,
    pub from: PointRef,
    pub to: PointRef,
}

impl Segment {
    /// The segment from `from` to `to` along the line's representation,
    /// using each point's first traversal occurrence. On a loop the segment
    /// runs forward (cyclically) from `from` to `to`.
    pub fn along(
        line: &Line,
        from: &PointRef,
        to: &PointRef,
        cfg: &MdConfig,
    ) -> Result<Segment, IncidenceError> {
        let rep = line.rep();
        let pf = rep.param_of(from, cfg).map_err(param_err)?;
        let pt = rep.param_of(to, cfg).map_err(param_err)?;
        Segment::between_params(line, pf, pt, cfg)
    }

    /// The segment between two traversal parameters, directed from the first
    /// to the second; on loops it runs forward, wrapping if needed.
    pub fn between_params(
        line: &Line,
        pf: f64,
        pt: f64,
        cfg: &MdConfig,
    ) -> Result<Segment, IncidenceError> {
        let rep = line.rep();
        let seg_rep = if line.is_loop() && pt < pf - TOL {
            let first = rep.subpath(pf, rep.length(), cfg)?;
            let second = rep.subpath(0.0, pt, cfg)?;
            let mut legs = first.legs().to_vec();
            legs.extend(second.legs().iter().cloned());
            PathRep::from_legs(legs, cfg)?
        } else if pt < pf - TOL {
            rep.subpath(pt, pf, cfg)?.reverse()
        } else {
            rep.subpath(pf, pt, cfg)?
        };
        let from = rep.point_at(pf, cfg)?;
        let to = rep.point_at(pt, cfg)?;
        Ok(Segment {
            line: line.clone(),
            rep: seg_rep,
            from,
            to,
        })
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    pub fn rep(&self) -> &PathRep {
        &self.rep
    }

    pub fn length(&self) -> f64 {
        self.rep.length()
    }
}

/// Segments are congruent when their lengths agree.
pub fn segment_congruent(u: &Segment, v: &Segment) -> bool {
    (u.length() - v.length()).abs() <= TOL
}

// ---------------------------------------------------------------------------
// Triangles and right angles.
// ---------------------------------------------------------------------------

/// Selects which geodesic realizes each triangle side, as an index into the
/// canonical geodesic list (ascending string ids); index 0 picks the lowest
/// string ids.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideChoice {
    pub ab: usize,
    pub ac: usize,
    pub bc: usize,
}

/// The three vertex angles of the geodesic triangle `a b c` (at a, b, c in
/// that order). A vertex angle is the angle between the two incident side
/// representations at the vertex; sides sharing an initial arc give zero.
pub fn triangle_angles(
    a: &PointRef,
    b: &PointRef,
    c: &PointRef,
    sides: SideChoice,
    cfg: &MdConfig,
) -> Result<(AngleValue, AngleValue, AngleValue), IncidenceError> {
    for (u, v) in [(a, b), (a, c), (b, c)] {
        if u.approx_eq(v) {
            return Err(IncidenceError::DegenerateTriangle(format!("{u} repeated")));
        }
    }
    let pick = |list: Vec<PathRep>, i: usize| -> PathRep {
        let i = i.min(list.len().saturating_sub(1));
        list.into_iter().nth(i).expect("geodesic list nonempty")
    };
    let ab = pick(geodesics_between(a, b, cfg)?, sides.ab);
    let ac = pick(geodesics_between(a, c, cfg)?, sides.ac);
    let bc = pick(geodesics_between(b, c, cfg)?, sides.bc);
    for (side, third) in [(&ab, c), (&ac, b), (&bc, a)] {
        if !side.occurrences(third, cfg).is_empty() {
            return Err(IncidenceError::DegenerateTriangle(format!(
                "{third} lies on the opposite side"
            )));
        }
    }
    let at_a = angle_at_paths(&ab, &ac, a, cfg)?;
    let at_b = angle_at_paths(&ab.reverse(), &bc, b, cfg)?;
    let at_c = angle_at_paths(&ac.reverse(), &bc.reverse(), c, cfg)?;
    Ok((at_a, at_b, at_c))
}

/// The measure of the right angle constructed at P by bisecting the full
/// angle between the ray P -> x and the tangent of string `string_id` at P.
/// The resulting angle is congruent to its supplementary by construction,
/// yet its measure depends on x.
pub fn right_angle_witness(
    x: &PointRef,
    string_id: u8,
    cfg: &MdConfig,
) -> Result<AngleValue, IncidenceError> {
    let xy = x
        .xy_in_delta1(cfg)
        .filter(|_| *x != PointRef::GateP)
        .ok_or_else(|| IncidenceError::PointNotOnLine(format!("{x} is not in delta1 minus P")))?;
    let n = (xy[0] * xy[0] + xy[1] * xy[1]).sqrt();
    let u = [xy[0] / n, xy[1] / n, 0.0];
    let t = cfg.string_tangent(string_id, true);
    let dot = (u[0] * t[0] + u[1] * t[1] + u[2] * t[2]).clamp(-1.0, 1.0);
    Ok(AngleValue {
        degrees: dot.acos().to_degrees() / 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extend::{extend_maximally, HORIZON};
    use crate::point::{make_point, RawPoint};

    fn cfg() -> MdConfig {
        MdConfig::default_config()
    }

    fn pt(raw: RawPoint) -> PointRef {
        make_point(raw, &cfg()).unwrap()
    }

    fn string_loop() -> Line {
        let c = cfg();
        let rep = PathRep::from_legs(
            vec![
                Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 },
                Leg::Str { id: 2, from_t: 4.0, to_t: 0.0 },
            ],
            &c,
        )
        .unwrap();
        Line::from_rep(rep, &c).unwrap()
    }

    /// The doubly infinite line ray - P - s_id - Q - ray with the planar rays
    /// pointing along the given directions.
    fn through_line(d1_dir: [f64; 2], id: u8, d2_dir: [f64; 2]) -> Line {
        let c = cfg();
        let l = c.string_len(id);
        let n1 = (d1_dir[0] * d1_dir[0] + d1_dir[1] * d1_dir[1]).sqrt();
        let n2 = (d2_dir[0] * d2_dir[0] + d2_dir[1] * d2_dir[1]).sqrt();
        let rep = PathRep::from_legs(
            vec![
                Leg::Planar {
                    region: Region::Delta1,
                    from: [d1_dir[0] / n1 * HORIZON, d1_dir[1] / n1 * HORIZON],
                    to: [0.0, 0.0],
                },
                Leg::Str { id, from_t: 0.0, to_t: l },
                Leg::Planar {
                    region: Region::Delta2,
                    from: c.gate_q_xy(),
                    to: [
                        c.gap_width + d2_dir[0] / n2 * HORIZON,
                        d2_dir[1] / n2 * HORIZON,
                    ],
                },
            ],
            &c,
        )
        .unwrap();
        Line::from_rep(rep, &c).unwrap()
    }

    #[test]
    fn loop_betweenness_is_order_sensitive() {
        // T on s1 and V on s2, both near Q: T between P and V, but not
        // between V and P.
        let c = cfg();
        let line = string_loop();
        let t = pt(RawPoint::OnString(1, 3.5));
        let v = pt(RawPoint::OnString(2, 3.5));
        let p = PointRef::GateP;
        assert!(betweenness(&line, &p, &t, &v, &c).unwrap());
        assert!(!betweenness(&line, &v, &t, &p, &c).unwrap());
    }

    #[test]
    fn loop_equal_thirds_all_between() {
        let c = cfg();
        let line = string_loop();
        let third = 8.0 / 3.0;
        let r = line.rep().point_at(third, &c).unwrap();
        let t = line.rep().point_at(2.0 * third, &c).unwrap();
        let p = PointRef::GateP;
        assert!(betweenness(&line, &p, &r, &t, &c).unwrap());
        assert!(betweenness(&line, &r, &t, &p, &c).unwrap());
        assert!(betweenness(&line, &t, &p, &r, &c).unwrap());
        assert_eq!(
            order_tuple(&line, &[t.clone(), p.clone(), r.clone()], &c).unwrap(),
            vec![p, r, t]
        );
    }

    #[test]
    fn straight_betweenness_symmetric() {
        let c = cfg();
        let rep = PathRep::from_legs(
            vec![Leg::Planar {
                region: Region::Delta1,
                from: [-1.0, -HORIZON],
                to: [-1.0, HORIZON],
            }],
            &c,
        )
        .unwrap();
        let line = Line::from_rep(rep, &c).unwrap();
        let a = pt(RawPoint::Planar1(-1.0, -2.0));
        let b = pt(RawPoint::Planar1(-1.0, 0.0));
        let d = pt(RawPoint::Planar1(-1.0, 5.0));
        assert!(betweenness(&line, &a, &b, &d, &c).unwrap());
        assert!(betweenness(&line, &d, &b, &a, &c).unwrap());
        assert!(!betweenness(&line, &b, &a, &d, &c).unwrap());
        let off = pt(RawPoint::Planar1(-2.0, 0.0));
        assert!(matches!(
            betweenness(&line, &a, &off, &d, &c),
            Err(IncidenceError::PointNotOnLine(_))
        ));
    }

    #[test]
    fn knot_line_two_orders() {
        // A-Q-s1-P-s2-Q-B vs A-Q-s2-P-s1-Q-B: orders (A,C,D,B) and (A,D,C,B).
        let c = cfg();
        let g = c.gap_width;
        let mk = |first: u8, second: u8| {
            let lf = c.string_len(first);
            let ls = c.string_len(second);
            let rep = PathRep::from_legs(
                vec![
                    Leg::Planar {
                        region: Region::Delta2,
                        from: [g + 1.0, 0.0],
                        to: [g, 0.0],
                    },
                    Leg::Str { id: first, from_t: lf, to_t: 0.0 },
                    Leg::Str { id: second, from_t: 0.0, to_t: ls },
                    Leg::Planar {
                        region: Region::Delta2,
                        from: [g, 0.0],
                        to: [g + HORIZON, 0.0],
                    },
                ],
                &c,
            )
            .unwrap();
            Line::from_rep(rep, &c).unwrap()
        };
        let l_a = mk(1, 2);
        let l_b = mk(2, 1);
        let a = pt(RawPoint::Planar2(g + 1.0, 0.0));
        let b = pt(RawPoint::Planar2(g + 2.0, 0.0));
        let cpt = pt(RawPoint::OnString(1, 2.0));
        let dpt = pt(RawPoint::OnString(2, 2.0));
        let pts = [a.clone(), b.clone(), cpt.clone(), dpt.clone()];
        assert_eq!(
            order_tuple(&l_a, &pts, &c).unwrap(),
            vec![a.clone(), cpt.clone(), dpt.clone(), b.clone()]
        );
        assert_eq!(order_tuple(&l_b, &pts, &c).unwrap(), vec![a, dpt, cpt, b]);
    }

    #[test]
    fn common_points_two_gates() {
        // Lines through different strings with different planar anchors cut
        // exactly twice: at P and Q.
        let c = cfg();
        let h = through_line([-1.0, 1.0], 1, [1.0, 1.0]);
        let k = through_line([-1.0, -1.0], 2, [1.0, -1.0]);
        let shared = common_points(&h, &k, &c);
        assert!(shared.arcs.is_empty());
        assert_eq!(shared.isolated, vec![PointRef::GateP, PointRef::GateQ]);
    }

    #[test]
    fn common_points_shared_planar_ray() {
        // Same delta1 ray, strings 1 vs 2, different delta2 rays: one arc
        // (the shared ray into P) and isolated Q.
        let c = cfg();
        let h = through_line([-1.0, 0.0], 1, [1.0, 1.0]);
        let k = through_line([-1.0, 0.0], 2, [1.0, -1.0]);
        let shared = common_points(&h, &k, &c);
        assert_eq!(shared.arcs.len(), 1);
        assert_eq!(shared.isolated, vec![PointRef::GateQ]);
        let a = pt(RawPoint::Planar1(-3.0, 0.0));
        assert!(!shared.arcs[0].occurrences(&a, &c).is_empty());
        assert!(!shared.arcs[0].occurrences(&PointRef::GateP, &c).is_empty());
    }

    #[test]
    fn same_line_is_one_arc() {
        let c = cfg();
        let h = string_loop();
        let shared = common_points(&h, &h, &c);
        assert_eq!(shared.arcs.len(), 1);
        assert!(shared.isolated.is_empty());
        assert_eq!(&shared.arcs[0], h.rep());
    }

    #[test]
    fn angle_at_gate_between_ray_and_string() {
        // Planar ray arriving at P from direction (1,0,0)-opposed, against
        // the outgoing s1 tangent (r, 0, -r): 135 degrees.
        let c = cfg();
        let ray = PathRep::from_legs(
            vec![Leg::Planar {
                region: Region::Delta1,
                from: [-HORIZON, 0.0],
                to: [0.0, 0.0],
            }],
            &c,
        )
        .unwrap();
        let s1 = PathRep::from_legs(vec![Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 }], &c).unwrap();
        let angle = angle_at_paths(&ray, &s1, &PointRef::GateP, &c).unwrap();
        assert!((angle.degrees - 135.0).abs() < 1e-9, "{}", angle.degrees);
        // Whole maximal lines carry both branches at P; the minimum pairing
        // then also sees the configured string tangents (s1 vs s2 is 90).
        let h = extend_maximally(&ray, &c)
            .unwrap()
            .into_iter()
            .find(|l| l.rep().string_sequence() == vec![2])
            .expect("ray extension through s2");
        let k = through_line([-1.0, 1.0], 1, [1.0, 1.0]);
        let angle = angle_at(&h, &k, &PointRef::GateP, &c).unwrap();
        assert!((angle.degrees - 45.0).abs() < 1e-9, "{}", angle.degrees);
    }

    #[test]
    fn angle_between_perpendicular_planar_lines() {
        let c = cfg();
        let mk = |legs: Vec<Leg>| Line::from_rep(PathRep::from_legs(legs, &c).unwrap(), &c).unwrap();
        let h = mk(vec![Leg::Planar {
            region: Region::Delta1,
            from: [-5.0, -HORIZON],
            to: [-5.0, HORIZON],
        }]);
        let k = mk(vec![Leg::Planar {
            region: Region::Delta1,
            from: [-HORIZON, 1.0],
            to: [0.0, 1.0],
        }]);
        let angle = angle_between(&h, &k, &c).unwrap();
        assert!((angle.degrees - 90.0).abs() < 1e-9);
        let z = angle_between(&h, &h, &c).unwrap();
        assert!(z.degrees.abs() < 1e-12);
    }

    #[test]
    fn segments_direction_dependent() {
        // PQ along s1 vs QP along s2: congruent but distinct objects; the
        // loop segment AB measured both ways differs.
        let c = cfg();
        let line = string_loop();
        let p = PointRef::GateP;
        let q = PointRef::GateQ;
        let pq = Segment::along(&line, &p, &q, &c).unwrap();
        let qp = Segment::along(&line, &q, &p, &c).unwrap();
        assert!(segment_congruent(&pq, &qp));
        assert_ne!(pq.rep(), qp.rep());
        // A on s1 near P, B on s2 near P: forward 6.5, backward 1.5.
        let a = pt(RawPoint::OnString(1, 0.5));
        let b = pt(RawPoint::OnString(2, 1.0));
        let ab_forward = Segment::along(&line, &a, &b, &c).unwrap();
        let ab_back = Segment::along(&line, &b, &a, &c).unwrap();
        assert!((ab_forward.length() - 6.5).abs() < 1e-12);
        assert!((ab_back.length() - 1.5).abs() < 1e-12);
        assert!(!segment_congruent(&ab_forward, &ab_back));
    }

    #[test]
    fn planar_triangle_sums_to_180() {
        let c = cfg();
        let a = pt(RawPoint::Planar1(-5.0, 0.0));
        let b = pt(RawPoint::Planar1(-1.0, 1.0));
        let d = pt(RawPoint::Planar1(-2.0, -3.0));
        let (x, y, z) = triangle_angles(&a, &b, &d, SideChoice::default(), &c).unwrap();
        assert!((x.degrees + y.degrees + z.degrees - 180.0).abs() < 1e-9);
    }

    #[test]
    fn collinear_triangle_rejected() {
        let c = cfg();
        let a = pt(RawPoint::Planar1(-5.0, 0.0));
        let b = pt(RawPoint::Planar1(-4.0, 0.0));
        let d = pt(RawPoint::Planar1(-1.0, 0.0));
        assert!(matches!(
            triangle_angles(&a, &b, &d, SideChoice::default(), &c),
            Err(IncidenceError::DegenerateTriangle(_))
        ));
    }

    #[test]
    fn right_angle_witness_values() {
        let c = cfg();
        // x along (-1, 0): the full angle to the s1 tangent is 135 degrees,
        // so the bisected right angle measures 67.5.
        let x = pt(RawPoint::Planar1(-3.0, 0.0));
        let w = right_angle_witness(&x, 1, &c).unwrap();
        assert!((w.degrees - 67.5).abs() < 1e-9);
        // With an in-plane tangent the classical right angle returns.
        let mut flat = c.clone();
        flat.tangent_at_p[0] = [1.0, 0.0, 0.0];
        let w = right_angle_witness(&x, 1, &flat).unwrap();
        assert!((w.degrees - 90.0).abs() < 1e-9);
    }
}
