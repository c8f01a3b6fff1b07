//! Finite incidence structures, the three counter-axioms, and exhaustive
//! counter-model search at desk scale.
//!
//! The counter-axioms over a point set and a line set with an incidence
//! relation: (I) every two distinct points lie on no line or on at least two
//! lines; (II) for every choice of non-collinear p1, p2, p3 and distinct q1,
//! q2 with {p1, q1, p3} and {p2, q2, p3} collinear, every line through
//! {p1, p2} misses every line through {q1, q2}; (III) every line carries at
//! most two points. Collinearity of a (deduplicated) triple means some line
//! is incident to all of it; the quantification in (II) runs over all lines
//! through each pair, the conservative reading when pairs lie on several
//! lines.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on the exhaustive search bounds.
pub const MAX_BOUND: usize = 7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CounterError {
    #[error("bounds ({0}, {1}) exceed the desk-scale limit of {MAX_BOUND}")]
    BoundsTooLarge(usize, usize),
    #[error("invalid incidence structure: {0}")]
    Invalid(String),
}

/// A finite incidence structure: points, lines, and a point-by-line
/// incidence matrix. Degenerate structures (empty, repeated lines, isolated
/// points) are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    n_points: usize,
    n_lines: usize,
    /// Point bitmask per line.
    line_masks: Vec<u32>,
}

impl IncidenceStructure {
    pub fn from_line_masks(n_points: usize, masks: Vec<u32>) -> Result<IncidenceStructure, CounterError> {
        if n_points > 31 {
            return Err(CounterError::Invalid(format!("{n_points} points is too many")));
        }
        let full = if n_points == 0 { 0 } else { (1u32 << n_points) - 1 };
        for m in &masks {
            if m & !full != 0 {
                return Err(CounterError::Invalid("line incident to a missing point".into()));
            }
        }
        Ok(IncidenceStructure {
            n_points,
            n_lines: masks.len(),
            line_masks: masks,
        })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn n_lines(&self) -> usize {
        self.n_lines
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.line_masks[line] & (1 << point) != 0
    }

    pub fn line_mask(&self, line: usize) -> u32 {
        self.line_masks[line]
    }

    /// Lines incident to every point of `mask`.
    fn lines_containing(&self, mask: u32) -> impl Iterator<Item = usize> + '_ {
        self.line_masks
            .iter()
            .enumerate()
            .filter(move |(_, m)| *m & mask == mask)
            .map(|(i, _)| i)
    }

    fn collinear(&self, mask: u32) -> bool {
        self.line_masks.iter().any(|m| m & mask == mask)
    }

    /// The lexicographically smallest sorted line-mask vector over all point
    /// relabelings; the isomorphism-class representative.
    pub fn canonical_masks(&self) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        let mut perm: Vec<usize> = (0..self.n_points).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut masks: Vec<u32> = self
                .line_masks
                .iter()
                .map(|m| {
                    let mut out = 0u32;
                    for (new, old) in p.iter().enumerate() {
                        if m & (1 << old) != 0 {
                            out |= 1 << new;
                        }
                    }
                    out
                })
                .collect();
            masks.sort_unstable();
            if best.as_ref().map(|b| masks < *b).unwrap_or(true) {
                best = Some(masks);
            }
        });
        best.unwrap_or_default()
    }

    fn is_row_canonical(&self) -> bool {
        let mut sorted = self.line_masks.clone();
        sorted.sort_unstable();
        self.canonical_masks() == sorted
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

// JSON shape: {"points": n, "lines": m, "incidence": [[0/1; m]; n]}.
#[derive(Serialize, Deserialize)]
struct StructureJson {
    points: usize,
    lines: usize,
    incidence: Vec<Vec<u8>>,
}

impl Serialize for IncidenceStructure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let incidence = (0..self.n_points)
            .map(|p| (0..self.n_lines).map(|l| u8::from(self.incident(p, l))).collect())
            .collect();
        StructureJson {
            points: self.n_points,
            lines: self.n_lines,
            incidence,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IncidenceStructure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = StructureJson::deserialize(d)?;
        if raw.points > 31 {
            return Err(D::Error::custom("too many points"));
        }
        if raw.lines > 10_000 {
            return Err(D::Error::custom("too many lines"));
        }
        if raw.incidence.len() != raw.points {
            return Err(D::Error::custom("incidence row count mismatch"));
        }
        let mut masks = vec![0u32; raw.lines];
        for (p, row) in raw.incidence.iter().enumerate() {
            if row.len() != raw.lines {
                return Err(D::Error::custom("incidence column count mismatch"));
            }
            for (l, v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => masks[l] |= 1 << p,
                    _ => return Err(D::Error::custom("incidence entries must be 0 or 1")),
                }
            }
        }
        IncidenceStructure::from_line_masks(raw.points, masks).map_err(D::Error::custom)
    }
}

/// Violation witnesses for each failed counter-axiom.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AxiomWitnesses {
    /// (p, q, number of common lines) with exactly one common line.
    pub ax1: Option<(usize, usize, usize)>,
    /// (p1, p2, p3, q1, q2, line through p1 p2, line through q1 q2) where
    /// the two lines share a point.
    pub ax2: Option<(usize, usize, usize, usize, usize, usize, usize)>,
    /// (line, incident point count) with more than two points.
    pub ax3: Option<(usize, usize)>,
}

/// The outcome of checking the three counter-axioms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub ax1: bool,
    pub ax2: bool,
    pub ax3: bool,
    pub witnesses: AxiomWitnesses,
}

impl AxiomCheck {
    pub fn as_set(&self) -> [bool; 3] {
        [self.ax1, self.ax2, self.ax3]
    }
}

/// Checks the three counter-axioms, returning a violation witness for each
/// axiom that fails.
pub fn check_counter_axioms(s: &IncidenceStructure) -> AxiomCheck {
    let n = s.n_points;
    let mut w = AxiomWitnesses::default();

    // (I) Two distinct points lie on zero or at least two lines.
    let mut ax1 = true;
    'ax1: for p in 0..n {
        for q in (p + 1)..n {
            let mask = (1 << p) | (1 << q);
            let count = s.lines_containing(mask).count();
            if count == 1 {
                ax1 = false;
                w.ax1 = Some((p, q, count));
                break 'ax1;
            }
        }
    }

    // (III) Every line carries at most two points.
    let mut ax3 = true;
    for (l, m) in s.line_masks.iter().enumerate() {
        let c = m.count_ones() as usize;
        if c > 2 {
            ax3 = false;
            w.ax3 = Some((l, c));
            break;
        }
    }

    // (II) For each intersecting pair of lines, look for a configuration
    // they would violate: ordered p1, p2 on the first, q1 != q2 on the
    // second, and some p3 making p1 p2 p3 non-collinear with {p1, q1, p3}
    // and {p2, q2, p3} collinear.
    let mut ax2 = true;
    'ax2: for l in 0..s.n_lines {
        for lp in 0..s.n_lines {
            if s.line_masks[l] & s.line_masks[lp] == 0 {
                continue;
            }
            let pts = |mask: u32| (0..n).filter(move |p| mask & (1 << p) != 0);
            for p1 in pts(s.line_masks[l]) {
                for p2 in pts(s.line_masks[l]) {
                    if p1 == p2 {
                        continue;
                    }
                    for q1 in pts(s.line_masks[lp]) {
                        for q2 in pts(s.line_masks[lp]) {
                            if q1 == q2 {
                                continue;
                            }
                            for p3 in 0..n {
                                if p3 == p1 || p3 == p2 {
                                    continue;
                                }
                                let tri = (1 << p1) | (1 << p2) | (1 << p3);
                                if s.collinear(tri) {
                                    continue;
                                }
                                let side1 = (1 << p1) | (1 << q1) | (1 << p3);
                                let side2 = (1 << p2) | (1 << q2) | (1 << p3);
                                if s.collinear(side1) && s.collinear(side2) {
                                    ax2 = false;
                                    w.ax2 = Some((p1, p2, p3, q1, q2, l, lp));
                                    break 'ax2;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    AxiomCheck {
        ax1,
        ax2,
        ax3,
        witnesses: w,
    }
}

/// Exhaustively enumerates incidence structures with at most the given
/// numbers of points and lines, up to isomorphism, returning those whose
/// axiom outcome matches `required` exactly (required axioms hold, the
/// others fail). Deterministic order: by size, then canonical line masks.
pub fn search_counter_models(
    max_points: usize,
    max_lines: usize,
    required: [bool; 3],
) -> Result<Vec<IncidenceStructure>, CounterError> {
    if max_points > MAX_BOUND || max_lines > MAX_BOUND {
        return Err(CounterError::BoundsTooLarge(max_points, max_lines));
    }
    let mut out = Vec::new();
    for np in 0..=max_points {
        let n_masks = 1u32 << np;
        for nl in 0..=max_lines {
            let mut found = if nl == 0 {
                let s = IncidenceStructure::from_line_masks(np, vec![])?;
                if check_counter_axioms(&s).as_set() == required {
                    vec![s]
                } else {
                    vec![]
                }
            } else {
                // Non-decreasing mask sequences kill column permutations;
                // parallelize over the first mask.
                (0..n_masks)
                    .into_par_iter()
                    .map(|first| {
                        let mut local = Vec::new();
                        let mut masks = Vec::with_capacity(nl);
                        masks.push(first);
                        fill_columns(np, nl, &mut masks, required, &mut local);
                        local
                    })
                    .reduce(Vec::new, |mut a, mut b| {
                        a.append(&mut b);
                        a
                    })
            };
            found.sort_by(|a, b| a.line_masks.cmp(&b.line_masks));
            out.append(&mut found);
        }
    }
    Ok(out)
}

fn fill_columns(
    np: usize,
    nl: usize,
    masks: &mut Vec<u32>,
    required: [bool; 3],
    out: &mut Vec<IncidenceStructure>,
) {
    if masks.len() == nl {
        let s = IncidenceStructure {
            n_points: np,
            n_lines: nl,
            line_masks: masks.clone(),
        };
        if check_counter_axioms(&s).as_set() == required && s.is_row_canonical() {
            out.push(s);
        }
        return;
    }
    let lo = *masks.last().unwrap();
    let hi = 1u32 << np;
    for m in lo..hi {
        masks.push(m);
        fill_columns(np, nl, masks, required, out);
        masks.pop();
    }
}

/// Brute-force enumeration over every raw incidence matrix at the given
/// bounds, deduplicated by canonical form. The non-pruned oracle for the
/// search; feasible only for tiny bounds.
pub fn brute_force_models(
    max_points: usize,
    max_lines: usize,
    required: [bool; 3],
) -> Result<Vec<IncidenceStructure>, CounterError> {
    if max_points > 3 || max_lines > 3 {
        return Err(CounterError::BoundsTooLarge(max_points, max_lines));
    }
    let mut canon: Vec<(usize, Vec<u32>)> = Vec::new();
    for np in 0..=max_points {
        for nl in 0..=max_lines {
            let cells = np * nl;
            for bits in 0u64..(1u64 << cells) {
                let mut masks = vec![0u32; nl];
                for l in 0..nl {
                    for p in 0..np {
                        if bits & (1 << (l * np + p)) != 0 {
                            masks[l] |= 1 << p;
                        }
                    }
                }
                let s = IncidenceStructure {
                    n_points: np,
                    n_lines: nl,
                    line_masks: masks,
                };
                if check_counter_axioms(&s).as_set() == required {
                    let key = (np, s.canonical_masks());
                    if !canon.contains(&key) {
                        canon.push(key);
                    }
                }
            }
        }
    }
    canon.sort();
    canon
        .into_iter()
        .map(|(np, masks)| IncidenceStructure::from_line_masks(np, masks))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn structure(np: usize, masks: &[u32]) -> IncidenceStructure {
        IncidenceStructure::from_line_masks(np, masks.to_vec()).unwrap()
    }

    #[test]
    fn vacuous_structure_satisfies_all() {
        let s = structure(2, &[]);
        let c = check_counter_axioms(&s);
        assert_eq!(c.as_set(), [true, true, true]);
    }

    #[test]
    fn unique_line_through_pair_violates_ax1() {
        let s = structure(3, &[0b011]);
        let c = check_counter_axioms(&s);
        assert!(!c.ax1);
        assert_eq!(c.witnesses.ax1, Some((0, 1, 1)));
        // Doubling the line restores axiom I.
        let s = structure(3, &[0b011, 0b011]);
        let c = check_counter_axioms(&s);
        assert_eq!(c.as_set(), [true, true, true]);
    }

    #[test]
    fn fano_plane_violates_ax1_and_ax3() {
        // The seven-point plane has a unique line through each pair.
        let lines = [
            0b0000111u32,
            0b0011001,
            0b0101010,
            0b1001100,
            0b0110100,
            0b1010001,
            0b1100010,
        ];
        let s = structure(7, &lines);
        let c = check_counter_axioms(&s);
        assert!(!c.ax1);
        assert!(!c.ax3);
    }

    #[test]
    fn triangle_violates_ax2() {
        // Points a, b, c with doubled side lines so axiom I holds; the sides
        // pairwise intersect, so the triangle configuration violates axiom II.
        let ab = 0b011u32;
        let ac = 0b101;
        let bc = 0b110;
        let s = structure(3, &[ab, ab, ac, ac, bc, bc]);
        let c = check_counter_axioms(&s);
        assert!(c.ax1);
        assert!(!c.ax2, "{:?}", c.witnesses);
        assert!(c.ax3);
    }

    #[test]
    fn isolated_point_never_changes_ax3() {
        let s = structure(4, &[0b0111, 0b0111]);
        let c = check_counter_axioms(&s);
        assert!(c.ax1);
        assert!(!c.ax3);
        let bigger = structure(5, &[0b0111, 0b0111]);
        assert_eq!(check_counter_axioms(&bigger).ax3, c.ax3);
    }

    #[test]
    fn search_finds_trivial_and_doubled_pair() {
        let found = search_counter_models(3, 2, [true, true, true]).unwrap();
        assert!(found.iter().any(|s| s.n_points() == 2 && s.n_lines() == 0));
        assert!(found
            .iter()
            .any(|s| s.n_points() == 3 && s.n_lines() == 2 && s.line_mask(0).count_ones() == 2));
        for s in &found {
            assert_eq!(check_counter_axioms(s).as_set(), [true, true, true]);
        }
    }

    #[test]
    fn search_agrees_with_brute_force_at_3_3() {
        for required in [
            [true, true, true],
            [true, true, false],
            [true, false, true],
            [false, true, true],
            [false, false, false],
        ] {
            let fast: Vec<_> = search_counter_models(3, 3, required)
                .unwrap()
                .iter()
                .map(|s| (s.n_points(), s.canonical_masks()))
                .collect();
            let slow: Vec<_> = brute_force_models(3, 3, required)
                .unwrap()
                .iter()
                .map(|s| (s.n_points(), s.canonical_masks()))
                .collect();
            let fast_set: std::collections::BTreeSet<_> = fast.iter().cloned().collect();
            let slow_set: std::collections::BTreeSet<_> = slow.iter().cloned().collect();
            assert_eq!(fast_set, slow_set, "required {required:?}");
            assert_eq!(fast.len(), fast_set.len(), "duplicate isomorphs in search output");
        }
    }

    #[test]
    fn bounds_guard() {
        assert!(matches!(
            search_counter_models(9, 9, [true, true, true]),
            Err(CounterError::BoundsTooLarge(9, 9))
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = structure(3, &[0b011, 0b110]);
        let j = serde_json::to_string(&s).unwrap();
        let back: IncidenceStructure = serde_json::from_str(&j).unwrap();
        assert_eq!(s, back);
        let bad = r#"{"points": 2, "lines": 1, "incidence": [[1], [1, 0]]}"#;
        assert!(serde_json::from_str::<IncidenceStructure>(bad).is_err());
        let bad = r#"{"points": 2, "lines": 1, "incidence": [[2], [0]]}"#;
        assert!(serde_json::from_str::<IncidenceStructure>(bad).is_err());
    }
}
