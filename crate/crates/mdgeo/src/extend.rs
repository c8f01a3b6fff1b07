//! Maximal geodesics (lines) and the end-extension machinery.
//!
//! A line is a geodesic path that cannot be strictly extended at either end
//! by the canonical moves: continuing a planar leg straight, entering a
//! string at a gate (wholly, or up to the exact arclength where geodesy
//! breaks), continuing into a half-plane along the representative axis ray,
//! or re-entering a half-plane back over an existing collinear leg. Infinite
//! planar ends are materialized out to a large horizon; their status records
//! that they are unbounded. A closed extension is a loop line.
//!
//! Extension enters each string at most once; a path that ends on the
//! frontier f1 away from P, or on the excluded frontier f2, terminates.

use crate::config::{MdConfig, TOL};
use crate::metric::distance;
use crate::path::{dist2, is_geodesic, Leg, PathError, PathRep, Region};
use crate::point::PointRef;
use serde::{Deserialize, Serialize};

/// Distance beyond which a planar leg end counts as unbounded.
pub const HORIZON_MIN: f64 = 1.0e3;
/// Length to which unbounded planar ends are materialized.
pub const HORIZON: f64 = 1.0e4;

/// Behavior of one end of a maximal line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum EndStatus {
    /// The end extends without bound (materialized to the horizon).
    Infinite,
    /// The end attains this model point and cannot extend past it.
    Terminal(PointRef),
    /// The end approaches this coordinate on the excluded frontier f2; the
    /// limit itself is not a model point.
    OpenBoundary { x: f64, y: f64 },
    /// The line closes into a loop; both ends carry this status.
    Loop,
}

/// A maximal directed geodesic, possibly closed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Line {
    rep: PathRep,
    start_status: EndStatus,
    end_status: EndStatus,
}

impl Line {
    pub fn rep(&self) -> &PathRep {
        &self.rep
    }

    pub fn start_status(&self) -> &EndStatus {
        &self.start_status
    }

    pub fn end_status(&self) -> &EndStatus {
        &self.end_status
    }

    pub fn is_loop(&self) -> bool {
        matches!(self.start_status, EndStatus::Loop)
    }

    /// The degenerate one-point line on an isolated point.
    pub fn singleton(p: PointRef) -> Line {
        Line {
            start_status: EndStatus::Terminal(p.clone()),
            end_status: EndStatus::Terminal(p.clone()),
            rep: PathRep::singleton(p),
        }
    }

    pub fn contains(&self, p: &PointRef, cfg: &MdConfig) -> bool {
        !self.rep.occurrences(p, cfg).is_empty()
    }

    /// Validates a representation as a maximal geodesic and derives its end
    /// statuses. The representation is preserved as given.
    pub fn from_rep(rep: PathRep, cfg: &MdConfig) -> Result<Line, PathError> {
        if let PathRep::Singleton(p) = &rep {
            if p.is_isolated() {
                return Ok(Line::singleton(p.clone()));
            }
            return Err(PathError::Malformed(
                "only isolated points form one-point lines".into(),
            ));
        }
        if !is_geodesic(&rep, cfg)? {
            return Err(PathError::Malformed("representation is not a geodesic".into()));
        }
        if rep.is_closed(cfg) {
            return Ok(Line {
                rep,
                start_status: EndStatus::Loop,
                end_status: EndStatus::Loop,
            });
        }
        let end_status = no_growth_status(&rep, cfg)?;
        let start_status = no_growth_status(&rep.reverse(), cfg)?;
        Ok(Line {
            rep,
            start_status,
            end_status,
        })
    }

    /// A stable sort/dedup key.
    pub(crate) fn canonical_key(&self) -> Vec<(u8, i64, i64, i64)> {
        path_key(&self.rep)
    }
}

fn path_key(rep: &PathRep) -> Vec<(u8, i64, i64, i64)> {
    let q = |x: f64| (x / 1e-6).round() as i64;
    rep.legs()
        .iter()
        .map(|l| match l {
            Leg::Planar { region, from, to } => {
                let r = if *region == Region::Delta1 { 0u8 } else { 1 };
                (r, q(from[0]), q(from[1] + to[0]), q(to[1]))
            }
            Leg::Str { id, from_t, to_t } => (10 + id, q(*from_t), q(*to_t), 0),
        })
        .collect()
}

/// Checks that the finish end of `rep` admits no structural extension and
/// returns its status. Pure unbounded tail growth of the last planar leg
/// (same leg, straight continuation) counts as maximal with an `Infinite`
/// status: lines are routinely named by finite anchor points on their rays.
fn no_growth_status(rep: &PathRep, cfg: &MdConfig) -> Result<EndStatus, PathError> {
    let base = rep.length();
    let mut status: Option<EndStatus> = None;
    for (ext, st) in resolve_finish(rep, cfg)? {
        if ext.length() > base + 1e-6 {
            let tail_only = st == EndStatus::Infinite && ext.legs().len() == rep.legs().len();
            if !tail_only {
                return Err(PathError::Malformed(
                    "representation is not maximal: an end still extends".into(),
                ));
            }
        }
        status.get_or_insert(st);
    }
    status.ok_or_else(|| PathError::Malformed("end resolution produced no status".into()))
}

/// Extends a geodesic maximally at both ends, enumerating every maximal line
/// reachable by the canonical moves, in a deterministic canonical order.
pub fn extend_maximally(p: &PathRep, cfg: &MdConfig) -> Result<Vec<Line>, PathError> {
    if let PathRep::Singleton(pt) = p {
        if pt.is_isolated() {
            return Ok(vec![Line::singleton(pt.clone())]);
        }
        return Err(PathError::Malformed(
            "a single planar point has no canonical extension direction".into(),
        ));
    }
    if !is_geodesic(p, cfg)? {
        return Err(PathError::Malformed("input path is not a geodesic".into()));
    }
    let mut out: Vec<Line> = Vec::new();
    if p.is_closed(cfg) {
        out.push(Line {
            rep: canonical_loop(p, cfg),
            start_status: EndStatus::Loop,
            end_status: EndStatus::Loop,
        });
        return Ok(out);
    }
    for (p1, fin) in resolve_finish(p, cfg)? {
        if matches!(fin, EndStatus::Loop) {
            out.push(Line {
                rep: canonical_loop(&p1, cfg),
                start_status: EndStatus::Loop,
                end_status: EndStatus::Loop,
            });
            continue;
        }
        let rev = p1.reverse();
        for (p2, st) in resolve_finish(&rev, cfg)? {
            if matches!(st, EndStatus::Loop) {
                out.push(Line {
                    rep: canonical_loop(&p2.reverse(), cfg),
                    start_status: EndStatus::Loop,
                    end_status: EndStatus::Loop,
                });
            } else {
                out.push(Line {
                    rep: p2.reverse(),
                    start_status: st,
                    end_status: fin.clone(),
                });
            }
        }
    }
    // Canonical orientation for open lines, then dedupe.
    for line in &mut out {
        if !line.is_loop() {
            let fwd = path_key(&line.rep);
            let bwd = path_key(&line.rep.reverse());
            if bwd < fwd {
                line.rep = line.rep.reverse();
                std::mem::swap(&mut line.start_status, &mut line.end_status);
            }
        }
    }
    out.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    out.dedup_by(|a, b| a.canonical_key() == b.canonical_key());
    Ok(out)
}

/// Rotates a closed string loop to a canonical representation.
fn canonical_loop(rep: &PathRep, cfg: &MdConfig) -> PathRep {
    let all_strings = rep.legs().iter().all(|l| matches!(l, Leg::Str { .. }));
    if !all_strings {
        return rep.clone();
    }
    let mut best: Option<(Vec<(u8, i64, i64, i64)>, PathRep)> = None;
    for dir in 0..2 {
        let r = if dir == 0 { rep.clone() } else { rep.reverse() };
        let n = r.legs().len();
        for rot in 0..n {
            let mut legs: Vec<Leg> = r.legs().to_vec();
            legs.rotate_left(rot);
            if let Ok(c) = PathRep::from_legs(legs, cfg) {
                if !c.is_closed(cfg) {
                    continue;
                }
                let key = path_key(&c);
                if best.as_ref().map(|(k, _)| key < *k).unwrap_or(true) {
                    best = Some((key, c));
                }
            }
        }
    }
    best.map(|(_, p)| p).unwrap_or_else(|| rep.clone())
}

fn appended(p: &PathRep, leg: Leg) -> PathRep {
    let mut legs = p.legs().to_vec();
    legs.push(leg);
    PathRep::Chain {
        legs,
        open_start: p.open_start(),
        open_finish: false,
    }
}

fn with_last_leg_to(p: &PathRep, new_to: [f64; 2], open: bool) -> PathRep {
    let mut legs = p.legs().to_vec();
    if let Some(Leg::Planar { to, .. }) = legs.last_mut() {
        *to = new_to;
    }
    PathRep::Chain {
        legs,
        open_start: p.open_start(),
        open_finish: open,
    }
}

fn with_last_string_to(p: &PathRep, new_to_t: f64) -> PathRep {
    let mut legs = p.legs().to_vec();
    if let Some(Leg::Str { to_t, .. }) = legs.last_mut() {
        *to_t = new_to_t;
    }
    PathRep::Chain {
        legs,
        open_start: p.open_start(),
        open_finish: false,
    }
}

/// Fully resolves the finish end of an open geodesic chain. Each returned
/// path carries the materialized extension and the end's status.
fn resolve_finish(p: &PathRep, cfg: &MdConfig) -> Result<Vec<(PathRep, EndStatus)>, PathError> {
    if p.open_finish() {
        if let Some(Leg::Planar { to, .. }) = p.legs().last() {
            return Ok(vec![(p.clone(), EndStatus::OpenBoundary { x: to[0], y: to[1] })]);
        }
        return Err(PathError::Malformed("open finish without planar leg".into()));
    }
    let f = p
        .finish_point(cfg)
        .ok_or_else(|| PathError::Malformed("finish point missing".into()))?;
    match f {
        PointRef::Planar1 { .. } | PointRef::Planar2 { .. } => resolve_planar(p, cfg),
        PointRef::GateP | PointRef::GateQ => resolve_gate(p, f == PointRef::GateQ, cfg),
        PointRef::OnString { id, t } => resolve_mid_string(p, id, t, cfg),
        PointRef::Isolated(_) => Err(PathError::Malformed("isolated point inside a chain".into())),
    }
}

fn resolve_planar(p: &PathRep, cfg: &MdConfig) -> Result<Vec<(PathRep, EndStatus)>, PathError> {
    let g = cfg.gap_width;
    let Some(Leg::Planar { region, from, to }) = p.legs().last().cloned() else {
        return Err(PathError::Malformed("planar finish without planar leg".into()));
    };
    let len = dist2(&from, &to);
    let d = [(to[0] - from[0]) / len, (to[1] - from[1]) / len];
    match region {
        Region::Delta1 => {
            if d[0] > 1e-12 {
                let s = -to[0] / d[0];
                if s <= TOL {
                    // Already on f1: the wall stops the line here.
                    let pt = crate::path::planar_point(region, to, cfg)?;
                    return Ok(vec![(p.clone(), EndStatus::Terminal(pt))]);
                }
                let hit = [0.0, to[1] + s * d[1]];
                let ext = with_last_leg_to(p, hit, false);
                if hit[1].abs() <= TOL {
                    return resolve_gate(&ext, false, cfg);
                }
                let pt = crate::path::planar_point(region, hit, cfg)?;
                return Ok(vec![(ext, EndStatus::Terminal(pt))]);
            }
            // Leftward or parallel to f1: unbounded.
            let ext = if len >= HORIZON_MIN {
                p.clone()
            } else {
                with_last_leg_to(p, [to[0] + d[0] * HORIZON, to[1] + d[1] * HORIZON], false)
            };
            Ok(vec![(ext, EndStatus::Infinite)])
        }
        Region::Delta2 => {
            if d[0] < -1e-12 {
                let s = (g - to[0]) / d[0];
                if s <= TOL {
                    let pt = crate::path::planar_point(region, to, cfg)?;
                    return Ok(vec![(p.clone(), EndStatus::Terminal(pt))]);
                }
                let hit = [g, to[1] + s * d[1]];
                if hit[1].abs() <= TOL {
                    let ext = with_last_leg_to(p, [g, 0.0], false);
                    return resolve_gate(&ext, true, cfg);
                }
                // The frontier f2 is excluded: the end is open at the limit.
                let ext = with_last_leg_to(p, hit, true);
                return Ok(vec![(ext, EndStatus::OpenBoundary { x: hit[0], y: hit[1] })]);
            }
            let ext = if len >= HORIZON_MIN {
                p.clone()
            } else {
                with_last_leg_to(p, [to[0] + d[0] * HORIZON, to[1] + d[1] * HORIZON], false)
            };
            Ok(vec![(ext, EndStatus::Infinite)])
        }
    }
}

fn resolve_gate(p: &PathRep, at_q: bool, cfg: &MdConfig) -> Result<Vec<(PathRep, EndStatus)>, PathError> {
    let mut out: Vec<(PathRep, EndStatus)> = Vec::new();
    let gate_pt = if at_q { PointRef::GateQ } else { PointRef::GateP };
    let other_pt = if at_q { PointRef::GateP } else { PointRef::GateQ };
    let gate_xy = if at_q { cfg.gate_q_xy() } else { cfg.gate_p_xy() };

    let used: Vec<u8> = p
        .legs()
        .iter()
        .filter_map(|l| match l {
            Leg::Str { id, .. } => Some(*id),
            _ => None,
        })
        .collect();

    for j in 1..=3u8 {
        if used.contains(&j) {
            continue;
        }
        let lj = cfg.string_len(j);
        let (from_t, to_t) = if at_q { (lj, 0.0) } else { (0.0, lj) };
        let full = appended(p, Leg::Str { id: j, from_t, to_t });
        if full.check(cfg).is_ok() && is_geodesic(&full, cfg)? {
            if full.is_closed(cfg) {
                out.push((full, EndStatus::Loop));
            } else {
                out.extend(resolve_gate(&full, !at_q, cfg)?);
            }
            continue;
        }
        // Partial entry up to the exact arclength where geodesy breaks: for
        // every u on the path, following the path to the gate and then delta
        // into the string must not beat the route through the far gate, so
        // delta* = (L_j + min_u [d(u, far) - d(u, gate)]) / 2.
        let m = min_diff_over_path(p, &other_pt, &gate_pt, cfg);
        let dstar = (lj + m) / 2.0;
        if dstar > TOL && dstar < lj - TOL {
            let end_t = if at_q { lj - dstar } else { dstar };
            let part = appended(p, Leg::Str { id: j, from_t, to_t: end_t });
            if part.check(cfg).is_ok() && is_geodesic(&part, cfg)? {
                out.push((part, EndStatus::Terminal(PointRef::OnString { id: j, t: end_t })));
            }
        }
    }

    // Planar continuation, only when arriving along a string: straight
    // through a gate exits the model, and folding back over the incoming
    // planar leg would retrace it.
    let arrived_by_string = matches!(p.legs().last(), Some(Leg::Str { .. }));
    if arrived_by_string {
        let region = if at_q { Region::Delta2 } else { Region::Delta1 };
        let mut dirs: Vec<[f64; 2]> = Vec::new();
        for leg in p.legs() {
            if let Leg::Planar { region: r, from, to } = leg {
                if *r != region {
                    continue;
                }
                for (a, b) in [(from, to), (to, from)] {
                    if dist2(a, &gate_xy) <= TOL {
                        let len = dist2(a, b);
                        dirs.push([(b[0] - a[0]) / len, (b[1] - a[1]) / len]);
                    }
                }
            }
        }
        dirs.dedup_by(|a, b| (a[0] - b[0]).abs() <= TOL && (a[1] - b[1]).abs() <= TOL);
        if dirs.is_empty() {
            dirs.push(if at_q { [1.0, 0.0] } else { [-1.0, 0.0] });
        }
        for d in dirs {
            let to = [gate_xy[0] + d[0] * HORIZON, gate_xy[1] + d[1] * HORIZON];
            let ray = appended(
                p,
                Leg::Planar {
                    region,
                    from: gate_xy,
                    to,
                },
            );
            if ray.check(cfg).is_ok() && is_geodesic(&ray, cfg)? {
                out.push((ray, EndStatus::Infinite));
            }
        }
    }

    if out.is_empty() {
        out.push((p.clone(), EndStatus::Terminal(gate_pt)));
    }
    Ok(out)
}

fn resolve_mid_string(
    p: &PathRep,
    id: u8,
    t: f64,
    cfg: &MdConfig,
) -> Result<Vec<(PathRep, EndStatus)>, PathError> {
    let Some(Leg::Str { id: lid, from_t, to_t }) = p.legs().last().cloned() else {
        return Err(PathError::Malformed("string finish without string leg".into()));
    };
    debug_assert_eq!(lid, id);
    debug_assert!((to_t - t).abs() <= TOL);
    let _ = from_t;
    let lj = cfg.string_len(id);
    let toward_q = to_t >= from_t;
    let target = if toward_q { PointRef::GateQ } else { PointRef::GateP };
    let remaining = if toward_q { lj - t } else { t };
    let fep = PointRef::OnString { id, t };
    // Reaching the gate can restore routes that small steps lack (the whole
    // string becomes available), so try the full jump before the bound.
    let gate_t = if toward_q { lj } else { 0.0 };
    let full = with_last_string_to(p, gate_t);
    if full.check(cfg).is_ok() && is_geodesic(&full, cfg)? {
        if full.is_closed(cfg) {
            return Ok(vec![(full, EndStatus::Loop)]);
        }
        return resolve_gate(&full, toward_q, cfg);
    }
    let m = min_diff_over_path(p, &target, &fep, cfg);
    let dstar = (remaining + m) / 2.0;
    if dstar > TOL && dstar < remaining - TOL {
        let new_t = if toward_q { t + dstar } else { t - dstar };
        let ext = with_last_string_to(p, new_t);
        if is_geodesic(&ext, cfg)? {
            return Ok(vec![(
                ext,
                EndStatus::Terminal(PointRef::OnString { id, t: new_t }),
            )]);
        }
    }
    Ok(vec![(p.clone(), EndStatus::Terminal(fep))])
}

/// Exact minimum over all points `u` of the path of
/// `d(u, target) - d(u, fep)`.
///
/// On planar legs the difference is constant (both distances route through
/// the leg's region gate). On string legs both distances are piecewise
/// linear in the arclength with breakpoints drawn from a small closed-form
/// candidate set, so evaluating at leg ends and candidates is exact.
fn min_diff_over_path(p: &PathRep, target: &PointRef, fep: &PointRef, cfg: &MdConfig) -> f64 {
    let mut best = f64::INFINITY;
    let mut eval = |u: &PointRef| {
        let a = distance(u, target, cfg).expect_finite();
        let b = distance(u, fep, cfg).expect_finite();
        if a - b < best {
            best = a - b;
        }
    };
    for leg in p.legs() {
        match leg {
            Leg::Planar { region, from, to } => {
                let mid = [(from[0] + to[0]) / 2.0, (from[1] + to[1]) / 2.0];
                if let Ok(u) = crate::path::planar_point(*region, mid, cfg) {
                    eval(&u);
                }
            }
            Leg::Str { id, from_t, to_t } => {
                let (lo, hi) = (from_t.min(*to_t), from_t.max(*to_t));
                let mut cands = vec![lo, hi];
                cands.extend(switch_candidates(*id, target, cfg));
                cands.extend(switch_candidates(*id, fep, cfg));
                for s in cands {
                    if s >= lo - TOL && s <= hi + TOL {
                        let s = s.clamp(lo, hi);
                        if let Ok(u) =
                            crate::point::make_point(crate::point::RawPoint::OnString(*id, s), cfg)
                        {
                            eval(&u);
                        }
                    }
                }
            }
        }
    }
    if p.legs().is_empty() {
        if let Some(u) = p.start_point(cfg) {
            eval(&u);
        }
    }
    best
}

/// Arclengths on string `k` where `s -> d(k@s, target)` can switch between
/// its affine route pieces.
fn switch_candidates(k: u8, target: &PointRef, cfg: &MdConfig) -> Vec<f64> {
    let lk = cfg.string_len(k);
    let mk = cfg.min_other_len(k);
    match target {
        PointRef::GateP => vec![(lk + mk) / 2.0],
        PointRef::GateQ => vec![(lk - mk) / 2.0],
        PointRef::OnString { id: j, t } if *j == k => {
            vec![*t, t + (lk + mk) / 2.0, t - (lk + mk) / 2.0]
        }
        PointRef::OnString { id: j, t } => {
            let lj = cfg.string_len(*j);
            let mut v = vec![(lk + lj) / 2.0 - t, (lk - lj) / 2.0 + t];
            if let Some(r) = (1..=3u8).find(|r| r != j && *r != k) {
                let lr = cfg.string_len(r);
                v.push((lk + lr) / 2.0);
                v.push((lk - lr) / 2.0);
            }
            v
        }
        // Planar targets route through a single gate, so the switch points
        // coincide with the gate ones.
        PointRef::Planar1 { .. } => vec![(lk + mk) / 2.0],
        PointRef::Planar2 { .. } => vec![(lk - mk) / 2.0],
        PointRef::Isolated(_) => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::{make_point, IsolatedId, RawPoint};

    fn cfg() -> MdConfig {
        MdConfig::default_config()
    }

    fn leg_d1(from: [f64; 2], to: [f64; 2]) -> Leg {
        Leg::Planar {
            region: Region::Delta1,
            from,
            to,
        }
    }

    #[test]
    fn segment_toward_f1_terminates_there() {
        // From (-2, 1) toward (0, 1): right bounded on the frontier.
        let c = cfg();
        let p = PathRep::from_legs(vec![leg_d1([-2.0, 1.0], [-1.0, 1.0])], &c).unwrap();
        let lines = extend_maximally(&p, &c).unwrap();
        assert_eq!(lines.len(), 1);
        let line = &lines[0];
        let hit = make_point(RawPoint::Planar1(0.0, 1.0), &c).unwrap();
        let statuses = [line.start_status().clone(), line.end_status().clone()];
        assert!(statuses.contains(&EndStatus::Terminal(hit)));
        assert!(statuses.contains(&EndStatus::Infinite));
        assert!(is_geodesic(line.rep(), &c).unwrap());
    }

    #[test]
    fn vertical_line_infinite_both_ends() {
        let c = cfg();
        let p = PathRep::from_legs(vec![leg_d1([-1.0, 0.0], [-1.0, 1.0])], &c).unwrap();
        let lines = extend_maximally(&p, &c).unwrap();
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].start_status(), &EndStatus::Infinite);
        assert_eq!(lines[0].end_status(), &EndStatus::Infinite);
        assert!(lines[0].rep().length() >= 2.0 * HORIZON_MIN);
    }

    #[test]
    fn string_prefix_yields_loops_and_infinite_line() {
        // P - s1 - Q extends to the s1/s2 loop, the s1/s3 loop, and the fully
        // infinite line through both half-planes, among other branches.
        let c = cfg();
        let p = PathRep::from_legs(vec![Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 }], &c).unwrap();
        let lines = extend_maximally(&p, &c).unwrap();
        for l in &lines {
            assert!(is_geodesic(l.rep(), &c).unwrap(), "not geodesic: {:?}", l.rep());
        }
        let loops: Vec<_> = lines.iter().filter(|l| l.is_loop()).collect();
        assert!(
            loops.iter().any(|l| l.rep().string_sequence() == vec![1, 2]),
            "missing the s1/s2 loop"
        );
        assert!(
            loops.iter().any(|l| {
                let seq = l.rep().string_sequence();
                seq == vec![1, 3] || seq == vec![3, 1]
            }),
            "missing the s1/s3 loop"
        );
        let infinite = lines
            .iter()
            .any(|l| l.start_status() == &EndStatus::Infinite && l.end_status() == &EndStatus::Infinite);
        assert!(infinite, "missing the doubly infinite line");
    }

    #[test]
    fn partial_string_end_is_exact() {
        // A delta2 ray into Q, then into s3: without the short strings in the
        // set, geodesy breaks exactly (L3 + L1) / 2 = 6.5 in from Q, i.e. at
        // t = 2.5 from P. The full traversal fails too (its P end would need
        // the short strings), so the partial stop is maximal.
        let c = cfg();
        let g = c.gap_width;
        let p = PathRep::from_legs(
            vec![Leg::Planar {
                region: Region::Delta2,
                from: [g + 5.0, 0.0],
                to: [g, 0.0],
            }],
            &c,
        )
        .unwrap();
        let lines = extend_maximally(&p, &c).unwrap();
        for l in &lines {
            assert!(is_geodesic(l.rep(), &c).unwrap());
        }
        let partial = lines.iter().find_map(|l| {
            for st in [l.start_status(), l.end_status()] {
                if let EndStatus::Terminal(PointRef::OnString { id: 3, t }) = st {
                    return Some(*t);
                }
            }
            None
        });
        let t = partial.expect("expected a partial s3 branch");
        assert!((t - 2.5).abs() < 1e-9, "breakpoint at {t}");
    }

    #[test]
    fn delta2_ray_toward_f2_is_open() {
        let c = cfg();
        let g = c.gap_width;
        let p = PathRep::from_legs(
            vec![Leg::Planar {
                region: Region::Delta2,
                from: [g + 3.0, 2.0],
                to: [g + 2.0, 2.0],
            }],
            &c,
        )
        .unwrap();
        let lines = extend_maximally(&p, &c).unwrap();
        assert_eq!(lines.len(), 1);
        let sts = [lines[0].start_status().clone(), lines[0].end_status().clone()];
        assert!(sts.iter().any(|s| matches!(s, EndStatus::OpenBoundary { x, y }
            if (x - g).abs() < 1e-9 && (y - 2.0).abs() < 1e-9)));
        assert!(sts.contains(&EndStatus::Infinite));
    }

    #[test]
    fn closed_loop_input_is_line() {
        let c = cfg();
        let p = PathRep::from_legs(
            vec![
                Leg::Str { id: 2, from_t: 0.0, to_t: 4.0 },
                Leg::Str { id: 1, from_t: 4.0, to_t: 0.0 },
            ],
            &c,
        )
        .unwrap();
        let lines = extend_maximally(&p, &c).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].is_loop());
        // Canonical rotation starts with string 1 from P.
        assert_eq!(lines[0].rep().string_sequence(), vec![1, 2]);
    }

    #[test]
    fn isolated_singleton_line() {
        let c = cfg();
        let p = PathRep::singleton(PointRef::Isolated(IsolatedId::K));
        let lines = extend_maximally(&p, &c).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(matches!(lines[0].start_status(), EndStatus::Terminal(PointRef::Isolated(_))));
    }

    #[test]
    fn from_rep_rejects_non_maximal() {
        let c = cfg();
        let p = PathRep::from_legs(vec![leg_d1([-2.0, 1.0], [-1.0, 1.0])], &c).unwrap();
        assert!(Line::from_rep(p, &c).is_err());
    }

    #[test]
    fn from_rep_accepts_loop_and_ray_lines() {
        let c = cfg();
        let loop_rep = PathRep::from_legs(
            vec![
                Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 },
                Leg::Str { id: 2, from_t: 4.0, to_t: 0.0 },
            ],
            &c,
        )
        .unwrap();
        let l = Line::from_rep(loop_rep, &c).unwrap();
        assert!(l.is_loop());

        let ray = PathRep::from_legs(
            vec![
                leg_d1([-HORIZON, 0.0], [0.0, 0.0]),
                Leg::Str { id: 1, from_t: 0.0, to_t: 4.0 },
                Leg::Planar {
                    region: Region::Delta2,
                    from: c.gate_q_xy(),
                    to: [c.gap_width + HORIZON, 0.0],
                },
            ],
            &c,
        )
        .unwrap();
        let l = Line::from_rep(ray, &c).unwrap();
        assert_eq!(l.start_status(), &EndStatus::Infinite);
        assert_eq!(l.end_status(), &EndStatus::Infinite);
    }
}
