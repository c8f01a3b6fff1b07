//! Points of the model space: membership validation and canonical gate
//! identification.

use crate::config::{MdConfig, TOL};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Identifier of one of the three isolated points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IsolatedId {
    I,
    J,
    K,
}

impl std::fmt::Display for IsolatedId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IsolatedId::I => write!(f, "I"),
            IsolatedId::J => write!(f, "J"),
            IsolatedId::K => write!(f, "K"),
        }
    }
}

/// A canonical point of the model.
///
/// Constructed through [`make_point`], which validates membership and folds
/// string endpoints and the origin of the first frontier onto the gates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PointRef {
    /// Point of the left half-plane, `x <= 0` (the frontier f1 belongs to
    /// the model). Never P itself.
    Planar1 { x: f64, y: f64 },
    /// Point of the right half-plane, `x > gap_width` strictly (the frontier
    /// f2 does not belong to the model; Q is its only model point).
    Planar2 { x: f64, y: f64 },
    /// Gate P = (0, 0), the common endpoint of all strings on f1.
    GateP,
    /// Gate Q = (gap_width, 0), the common endpoint of all strings on f2.
    GateQ,
    /// Interior point of string `id` in 1..=3 at arclength `t` from P,
    /// `0 < t < L_id` strictly.
    OnString { id: u8, t: f64 },
    /// One of the three island points, joined to no other point.
    Isolated(IsolatedId),
}

/// A raw point description prior to membership validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum RawPoint {
    Planar1(f64, f64),
    Planar2(f64, f64),
    GateP,
    GateQ,
    OnString(u8, f64),
    Isolated(IsolatedId),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PointError {
    #[error("point ({x}, {y}) is not in the model: {reason}")]
    NotInModel { x: f64, y: f64, reason: String },
    #[error("string id {0} out of range 1..=3")]
    BadStringId(u8),
    #[error("arclength {t} out of range [0, {len}] on string {id}")]
    ArclengthOutOfRange { id: u8, t: f64, len: f64 },
}

/// Validates membership of a raw point in the model and canonicalizes it.
///
/// `OnString(i, 0)` folds to P, `OnString(i, L_i)` folds to Q, and the
/// planar coordinates of the gates fold to the gate variants. Coordinates in
/// the open hole `0 < x <= g` are rejected, except Q's own coordinates.
pub fn make_point(raw: RawPoint, cfg: &MdConfig) -> Result<PointRef, PointError> {
    let g = cfg.gap_width;
    match raw {
        RawPoint::GateP => Ok(PointRef::GateP),
        RawPoint::GateQ => Ok(PointRef::GateQ),
        RawPoint::Isolated(id) => Ok(PointRef::Isolated(id)),
        RawPoint::Planar1(x, y) => {
            if !x.is_finite() || !y.is_finite() {
                return Err(PointError::NotInModel {
                    x,
                    y,
                    reason: "coordinates must be finite".into(),
                });
            }
            if x > TOL {
                return Err(PointError::NotInModel {
                    x,
                    y,
                    reason: "left half-plane requires x <= 0".into(),
                });
            }
            if x.abs() <= TOL && y.abs() <= TOL {
                return Ok(PointRef::GateP);
            }
            Ok(PointRef::Planar1 { x: x.min(0.0), y })
        }
        RawPoint::Planar2(x, y) => {
            if !x.is_finite() || !y.is_finite() {
                return Err(PointError::NotInModel {
                    x,
                    y,
                    reason: "coordinates must be finite".into(),
                });
            }
            if (x - g).abs() <= TOL && y.abs() <= TOL {
                return Ok(PointRef::GateQ);
            }
            if x <= g + TOL {
                return Err(PointError::NotInModel {
                    x,
                    y,
                    reason: format!("the hole 0 < x <= {g} is not in the model"),
                });
            }
            Ok(PointRef::Planar2 { x, y })
        }
        RawPoint::OnString(id, t) => {
            if !(1..=3).contains(&id) {
                return Err(PointError::BadStringId(id));
            }
            let len = cfg.string_len(id);
            if !t.is_finite() || t < -TOL || t > len + TOL {
                return Err(PointError::ArclengthOutOfRange { id, t, len });
            }
            if t.abs() <= TOL {
                Ok(PointRef::GateP)
            } else if (t - len).abs() <= TOL {
                Ok(PointRef::GateQ)
            } else {
                Ok(PointRef::OnString { id, t })
            }
        }
    }
}

impl PointRef {
    /// Re-canonicalizes the point; used to show canonicalization is
    /// idempotent and to validate deserialized points.
    pub fn revalidate(&self, cfg: &MdConfig) -> Result<PointRef, PointError> {
        make_point(self.to_raw(), cfg)
    }

    pub fn to_raw(&self) -> RawPoint {
        match self {
            PointRef::Planar1 { x, y } => RawPoint::Planar1(*x, *y),
            PointRef::Planar2 { x, y } => RawPoint::Planar2(*x, *y),
            PointRef::GateP => RawPoint::GateP,
            PointRef::GateQ => RawPoint::GateQ,
            PointRef::OnString { id, t } => RawPoint::OnString(*id, *t),
            PointRef::Isolated(id) => RawPoint::Isolated(*id),
        }
    }

    pub fn is_isolated(&self) -> bool {
        matches!(self, PointRef::Isolated(_))
    }

    pub fn is_gate(&self) -> bool {
        matches!(self, PointRef::GateP | PointRef::GateQ)
    }

    /// Planar coordinates when the point lies in the closed left half-plane
    /// (gate P included).
    pub fn xy_in_delta1(&self, _cfg: &MdConfig) -> Option<[f64; 2]> {
        match self {
            PointRef::Planar1 { x, y } => Some([*x, *y]),
            PointRef::GateP => Some([0.0, 0.0]),
            _ => None,
        }
    }

    /// Planar coordinates when the point lies in the right half-plane with
    /// gate Q adjoined.
    pub fn xy_in_delta2(&self, cfg: &MdConfig) -> Option<[f64; 2]> {
        match self {
            PointRef::Planar2 { x, y } => Some([*x, *y]),
            PointRef::GateQ => Some(cfg.gate_q_xy()),
            _ => None,
        }
    }

    /// Approximate equality at the crate tolerance.
    pub fn approx_eq(&self, other: &PointRef) -> bool {
        match (self, other) {
            (PointRef::Planar1 { x: ax, y: ay }, PointRef::Planar1 { x: bx, y: by })
            | (PointRef::Planar2 { x: ax, y: ay }, PointRef::Planar2 { x: bx, y: by }) => {
                (ax - bx).abs() <= TOL && (ay - by).abs() <= TOL
            }
            (PointRef::GateP, PointRef::GateP) | (PointRef::GateQ, PointRef::GateQ) => true,
            (PointRef::OnString { id: ai, t: at }, PointRef::OnString { id: bi, t: bt }) => {
                ai == bi && (at - bt).abs() <= TOL
            }
            (PointRef::Isolated(a), PointRef::Isolated(b)) => a == b,
            _ => false,
        }
    }
}

impl std::fmt::Display for PointRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PointRef::Planar1 { x, y } => write!(f, "d1:{x},{y}"),
            PointRef::Planar2 { x, y } => write!(f, "d2:{x},{y}"),
            PointRef::GateP => write!(f, "P"),
            PointRef::GateQ => write!(f, "Q"),
            PointRef::OnString { id, t } => write!(f, "s{id}:{t}"),
            PointRef::Isolated(id) => write!(f, "{id}"),
        }
    }
}

/// True iff a finite-length path within the model joins the two points.
///
/// The model splits into four connectivity classes: the two half-planes with
/// the strings and gates form one class, and each isolated point is a class
/// of its own.
pub fn connectable(a: &PointRef, b: &PointRef) -> bool {
    match (a, b) {
        (PointRef::Isolated(ia), PointRef::Isolated(ib)) => ia == ib,
        (PointRef::Isolated(_), _) | (_, PointRef::Isolated(_)) => false,
        _ => true,
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PointParseError {
    #[error("empty point expression")]
    Empty,
    #[error("unknown point form {0:?}; expected P, Q, I, J, K, d1:x,y, d2:x,y or sN:t")]
    UnknownForm(String),
    #[error("bad number in point expression {0:?}")]
    BadNumber(String),
    #[error(transparent)]
    Point(#[from] PointError),
}

/// Parses the compact textual point syntax used on the command line:
/// `P`, `Q`, `I`, `J`, `K`, `d1:x,y`, `d2:x,y`, `s1:t`, `s2:t`, `s3:t`.
pub fn parse_point_expr(s: &str, cfg: &MdConfig) -> Result<PointRef, PointParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(PointParseError::Empty);
    }
    match s {
        "P" | "p" => return Ok(PointRef::GateP),
        "Q" | "q" => return Ok(PointRef::GateQ),
        "I" => return Ok(PointRef::Isolated(IsolatedId::I)),
        "J" => return Ok(PointRef::Isolated(IsolatedId::J)),
        "K" => return Ok(PointRef::Isolated(IsolatedId::K)),
        _ => {}
    }
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| PointParseError::UnknownForm(s.to_string()))?;
    let num = |t: &str| -> Result<f64, PointParseError> {
        t.trim()
            .parse::<f64>()
            .map_err(|_| PointParseError::BadNumber(s.to_string()))
    };
    let raw = match head {
        "d1" | "d2" => {
            let (xs, ys) = rest
                .split_once(',')
                .ok_or_else(|| PointParseError::UnknownForm(s.to_string()))?;
            let (x, y) = (num(xs)?, num(ys)?);
            if head == "d1" {
                RawPoint::Planar1(x, y)
            } else {
                RawPoint::Planar2(x, y)
            }
        }
        "s1" => RawPoint::OnString(1, num(rest)?),
        "s2" => RawPoint::OnString(2, num(rest)?),
        "s3" => RawPoint::OnString(3, num(rest)?),
        _ => return Err(PointParseError::UnknownForm(s.to_string())),
    };
    Ok(make_point(raw, cfg)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> MdConfig {
        MdConfig::default_config()
    }

    #[test]
    fn planar1_origin_folds_to_gate_p() {
        assert_eq!(make_point(RawPoint::Planar1(0.0, 0.0), &cfg()).unwrap(), PointRef::GateP);
    }

    #[test]
    fn hole_points_rejected() {
        let g = cfg().gap_width;
        let e = make_point(RawPoint::Planar2(g / 2.0, 3.0), &cfg()).unwrap_err();
        assert!(matches!(e, PointError::NotInModel { .. }));
        let e = make_point(RawPoint::Planar1(g / 2.0, 3.0), &cfg()).unwrap_err();
        assert!(matches!(e, PointError::NotInModel { .. }));
        // f2 points other than Q are not in the model either.
        let e = make_point(RawPoint::Planar2(g, 1.0), &cfg()).unwrap_err();
        assert!(matches!(e, PointError::NotInModel { .. }));
    }

    #[test]
    fn string_endpoints_fold_to_gates() {
        let c = cfg();
        assert_eq!(make_point(RawPoint::OnString(3, c.string_len(3)), &c).unwrap(), PointRef::GateQ);
        assert_eq!(make_point(RawPoint::OnString(2, 0.0), &c).unwrap(), PointRef::GateP);
        assert_eq!(
            make_point(RawPoint::OnString(1, 1.5), &c).unwrap(),
            PointRef::OnString { id: 1, t: 1.5 }
        );
    }

    #[test]
    fn out_of_range_arclength_rejected() {
        let e = make_point(RawPoint::OnString(1, 4.5), &cfg()).unwrap_err();
        assert!(matches!(e, PointError::ArclengthOutOfRange { .. }));
        let e = make_point(RawPoint::OnString(7, 1.0), &cfg()).unwrap_err();
        assert!(matches!(e, PointError::BadStringId(7)));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let c = cfg();
        let raws = [
            RawPoint::Planar1(-1.0, 2.0),
            RawPoint::Planar1(0.0, 0.0),
            RawPoint::Planar2(c.gap_width, 0.0),
            RawPoint::OnString(1, 0.0),
            RawPoint::OnString(3, 2.0),
            RawPoint::Isolated(IsolatedId::J),
        ];
        for raw in raws {
            let p = make_point(raw, &c).unwrap();
            assert_eq!(p.revalidate(&c).unwrap(), p);
        }
    }

    #[test]
    fn connectable_rules() {
        let c = cfg();
        let a = make_point(RawPoint::Planar1(-1.0, 0.0), &c).unwrap();
        let b = make_point(RawPoint::Planar2(c.gap_width + 1.0, 0.0), &c).unwrap();
        let i = PointRef::Isolated(IsolatedId::I);
        assert!(connectable(&a, &b));
        assert!(!connectable(&i, &a));
        assert!(connectable(&i, &i));
        assert!(!connectable(&i, &PointRef::Isolated(IsolatedId::K)));
        assert!(connectable(&PointRef::GateP, &PointRef::OnString { id: 2, t: 1.0 }));
    }

    #[test]
    fn point_expr_parsing() {
        let c = cfg();
        assert_eq!(parse_point_expr("P", &c).unwrap(), PointRef::GateP);
        assert_eq!(
            parse_point_expr("d1:-1,2.5", &c).unwrap(),
            PointRef::Planar1 { x: -1.0, y: 2.5 }
        );
        assert_eq!(
            parse_point_expr("s3:2", &c).unwrap(),
            PointRef::OnString { id: 3, t: 2.0 }
        );
        assert_eq!(parse_point_expr("d1:0,0", &c).unwrap(), PointRef::GateP);
        assert!(parse_point_expr("s9:1", &c).is_err());
        assert!(parse_point_expr("d1:zzz,0", &c).is_err());
        assert!(parse_point_expr("", &c).is_err());
        assert!(parse_point_expr("d2:1,1", &c).is_err());
    }
}
