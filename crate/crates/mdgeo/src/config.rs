//! Model configuration: gap width, string lengths and the string tangent
//! directions at the two gates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Absolute tolerance used for all metric comparisons in this crate.
pub const TOL: f64 = 1e-9;

/// A unit tangent direction in 3-space. The model plane is z = 0.
pub type Tangent = [f64; 3];

/// Geometry parameters of the model space.
///
/// The space consists of two half-planes `delta1 = {x <= 0}` and
/// `delta2 = {x > gap_width}` separated by a hole, joined only at the gates
/// P = (0,0) and Q = (gap_width, 0) by three out-of-plane strings, plus three
/// isolated points. Strings are abstract arcs: an interior point carries only
/// an arclength coordinate; the geometry a string contributes is its length
/// and its unit tangent vectors at the two gates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MdConfig {
    /// Width of the hole separating the two half-planes; `g > 0`.
    pub gap_width: f64,
    /// Arclengths of the three strings. The first two are equal and the
    /// third strictly longer.
    pub string_lengths: [f64; 3],
    /// Unit tangents of the three strings at gate P, pointing into the string.
    pub tangent_at_p: [Tangent; 3],
    /// Unit tangents of the three strings at gate Q, pointing into the string.
    pub tangent_at_q: [Tangent; 3],
}

/// A configuration invariant violation, reported with a JSON-pointer-style
/// path to the offending field.
#[derive(Debug, Error, Clone, PartialEq)]
#[error("{path}: {message}")]
pub struct ConfigError {
    pub path: String,
    pub message: String,
}

fn norm3(v: &Tangent) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn tangents_equal(a: &Tangent, b: &Tangent) -> bool {
    (0..3).all(|i| (a[i] - b[i]).abs() <= TOL)
}

impl MdConfig {
    /// The configuration used by the fixture catalog unless overridden:
    /// g = 2, lengths (4, 4, 9), string tangents 45 degrees out of plane.
    pub fn default_config() -> Self {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        MdConfig {
            gap_width: 2.0,
            string_lengths: [4.0, 4.0, 9.0],
            tangent_at_p: [[r, 0.0, -r], [r, 0.0, r], [0.0, r, r]],
            tangent_at_q: [[-r, 0.0, -r], [-r, 0.0, r], [0.0, r, r]],
        }
    }

    /// Checks every invariant and reports the first violated one.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let err = |path: &str, message: &str| {
            Err(ConfigError {
                path: path.to_string(),
                message: message.to_string(),
            })
        };
        if !self.gap_width.is_finite() || self.gap_width <= 0.0 {
            return err("/gap_width", "must be finite and > 0");
        }
        for (i, l) in self.string_lengths.iter().enumerate() {
            if !l.is_finite() || *l <= 0.0 {
                return err(
                    &format!("/string_lengths/{i}"),
                    "must be finite and > 0",
                );
            }
        }
        if (self.string_lengths[0] - self.string_lengths[1]).abs() > TOL {
            return err("/string_lengths/1", "strings 1 and 2 must have the same length");
        }
        if self.string_lengths[2] <= self.string_lengths[0] + TOL {
            return err("/string_lengths/2", "string 3 must be longer than string 1");
        }
        for (gate, arr) in [("tangent_at_p", &self.tangent_at_p), ("tangent_at_q", &self.tangent_at_q)] {
            for (i, t) in arr.iter().enumerate() {
                if t.iter().any(|c| !c.is_finite()) {
                    return err(&format!("/{gate}/{i}"), "components must be finite");
                }
                if (norm3(t) - 1.0).abs() > 1e-6 {
                    return err(&format!("/{gate}/{i}"), "must have unit norm");
                }
            }
            for i in 0..3 {
                for j in (i + 1)..3 {
                    if tangents_equal(&arr[i], &arr[j]) {
                        return err(
                            &format!("/{gate}/{j}"),
                            "string tangents at a gate must be pairwise distinct",
                        );
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses and validates a configuration from JSON text.
    pub fn from_json_str(s: &str) -> Result<Self, ConfigError> {
        let cfg: MdConfig = serde_json::from_str(s).map_err(|e| ConfigError {
            path: "/".to_string(),
            message: e.to_string(),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Length of string `id` (1-based id in 1..=3).
    pub fn string_len(&self, id: u8) -> f64 {
        self.string_lengths[(id - 1) as usize]
    }

    /// Length of the shortest string other than `id`.
    pub fn min_other_len(&self, id: u8) -> f64 {
        (1..=3u8)
            .filter(|j| *j != id)
            .map(|j| self.string_len(j))
            .fold(f64::INFINITY, f64::min)
    }

    /// Shortest string length overall (the length of strings 1 and 2).
    pub fn min_string_len(&self) -> f64 {
        self.string_lengths.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Planar coordinates of gate P.
    pub fn gate_p_xy(&self) -> [f64; 2] {
        [0.0, 0.0]
    }

    /// Planar coordinates of gate Q.
    pub fn gate_q_xy(&self) -> [f64; 2] {
        [self.gap_width, 0.0]
    }

    /// Tangent of string `id` at the named gate, pointing into the string.
    pub fn string_tangent(&self, id: u8, at_p: bool) -> Tangent {
        if at_p {
            self.tangent_at_p[(id - 1) as usize]
        } else {
            self.tangent_at_q[(id - 1) as usize]
        }
    }
}
