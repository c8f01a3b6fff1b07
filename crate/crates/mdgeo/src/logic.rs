//! Propositional axiom systems with a paraconsistent consequence relation.
//!
//! A formula belongs to the consequence set of an axiom list when some
//! consistent subset of bounded size entails it by exhaustive valuation.
//! Inconsistent subsets derive nothing, so an inconsistent union of two
//! consistent systems accumulates exactly the union of their consequences
//! instead of exploding.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Variable budget for exhaustive valuation.
pub const MAX_VARS: u8 = 20;
const MAX_PARSE_DEPTH: usize = 512;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LogicError {
    #[error("formula parse error: {0}")]
    Parse(String),
    #[error("too many variables: {0} (limit {MAX_VARS})")]
    TooManyVariables(u32),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("the union identity failed: {0}")]
    IdentityFailed(String),
}

/// A propositional formula over variables v0..v19.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Formula {
    Var(u8),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(i: u8) -> Formula {
        Formula::Var(i)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn eval(&self, valuation: u32) -> bool {
        match self {
            Formula::Var(i) => valuation & (1 << i) != 0,
            Formula::Not(f) => !f.eval(valuation),
            Formula::And(a, b) => a.eval(valuation) && b.eval(valuation),
            Formula::Or(a, b) => a.eval(valuation) || b.eval(valuation),
            Formula::Implies(a, b) => !a.eval(valuation) || b.eval(valuation),
        }
    }

    pub fn max_var(&self) -> Option<u8> {
        match self {
            Formula::Var(i) => Some(*i),
            Formula::Not(f) => f.max_var(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.max_var().max(b.max_var())
            }
        }
    }

    /// Parses the prefix notation: `!`, `&`, `|`, `->`, variables `v0..v19`.
    pub fn parse(text: &str) -> Result<Formula, LogicError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let mut pos = 0usize;
        let f = parse_prefix(&tokens, &mut pos, 0)?;
        if pos != tokens.len() {
            return Err(LogicError::Parse(format!(
                "trailing tokens after formula: {:?}",
                &tokens[pos..]
            )));
        }
        Ok(f)
    }
}

fn parse_prefix(tokens: &[&str], pos: &mut usize, depth: usize) -> Result<Formula, LogicError> {
    if depth > MAX_PARSE_DEPTH {
        return Err(LogicError::Parse("formula nests too deeply".into()));
    }
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| LogicError::Parse("unexpected end of formula".into()))?;
    *pos += 1;
    match *tok {
        "!" => Ok(Formula::not(parse_prefix(tokens, pos, depth + 1)?)),
        "&" => {
            let a = parse_prefix(tokens, pos, depth + 1)?;
            let b = parse_prefix(tokens, pos, depth + 1)?;
            Ok(Formula::and(a, b))
        }
        "|" => {
            let a = parse_prefix(tokens, pos, depth + 1)?;
            let b = parse_prefix(tokens, pos, depth + 1)?;
            Ok(Formula::or(a, b))
        }
        "->" => {
            let a = parse_prefix(tokens, pos, depth + 1)?;
            let b = parse_prefix(tokens, pos, depth + 1)?;
            Ok(Formula::implies(a, b))
        }
        v => {
            let idx = v
                .strip_prefix('v')
                .and_then(|d| d.parse::<u8>().ok())
                .filter(|i| *i < MAX_VARS)
                .ok_or_else(|| LogicError::Parse(format!("bad token {v:?}")))?;
            Ok(Formula::Var(idx))
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "v{i}"),
            Formula::Not(x) => write!(f, "! {x}"),
            Formula::And(a, b) => write!(f, "& {a} {b}"),
            Formula::Or(a, b) => write!(f, "| {a} {b}"),
            Formula::Implies(a, b) => write!(f, "-> {a} {b}"),
        }
    }
}

impl Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Formula::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// An axiom system: a variable budget and a list of formulas over it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomSystem {
    pub vars: u8,
    pub axioms: Vec<Formula>,
}

impl AxiomSystem {
    pub fn from_json_str(text: &str) -> Result<AxiomSystem, LogicError> {
        let sys: AxiomSystem =
            serde_json::from_str(text).map_err(|e| LogicError::Parse(e.to_string()))?;
        sys.validate()?;
        Ok(sys)
    }

    pub fn validate(&self) -> Result<(), LogicError> {
        if self.vars > MAX_VARS {
            return Err(LogicError::TooManyVariables(self.vars as u32));
        }
        for a in &self.axioms {
            if let Some(m) = a.max_var() {
                if m >= self.vars {
                    return Err(LogicError::Parse(format!(
                        "axiom {a} uses v{m} outside the declared {} variables",
                        self.vars
                    )));
                }
            }
        }
        Ok(())
    }
}

fn check_vars(n_vars: u8) -> Result<(), LogicError> {
    if n_vars > MAX_VARS {
        return Err(LogicError::TooManyVariables(n_vars as u32));
    }
    Ok(())
}

fn valuations(n_vars: u8) -> std::ops::Range<u32> {
    0..(1u32 << n_vars)
}

/// True iff some valuation satisfies every formula.
pub fn is_consistent(axioms: &[Formula], n_vars: u8) -> Result<bool, LogicError> {
    check_vars(n_vars)?;
    Ok(valuations(n_vars).any(|v| axioms.iter().all(|a| a.eval(v))))
}

/// True iff no axiom is entailed by the others: for each axiom, the rest
/// plus its negation stay satisfiable.
pub fn is_independent(axioms: &[Formula], n_vars: u8) -> Result<bool, LogicError> {
    check_vars(n_vars)?;
    for (i, a) in axioms.iter().enumerate() {
        let ok = valuations(n_vars).any(|v| {
            !a.eval(v) && axioms.iter().enumerate().all(|(j, b)| j == i || b.eval(v))
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Entailment by exhaustive valuation: every model of the subset satisfies
/// the formula.
fn entails(subset: &[&Formula], phi: &Formula, n_vars: u8) -> bool {
    valuations(n_vars).all(|v| !subset.iter().all(|a| a.eval(v)) || phi.eval(v))
}

fn subset_satisfiable(subset: &[&Formula], n_vars: u8) -> bool {
    valuations(n_vars).any(|v| subset.iter().all(|a| a.eval(v)))
}

/// The default formula universe: literals, plus conjunctions and
/// disjunctions of literal pairs over distinct variables.
pub fn default_universe(n_vars: u8) -> Vec<Formula> {
    let mut out = Vec::new();
    let lit = |i: u8, pos: bool| {
        if pos {
            Formula::var(i)
        } else {
            Formula::not(Formula::var(i))
        }
    };
    for i in 0..n_vars {
        out.push(lit(i, true));
        out.push(lit(i, false));
    }
    for i in 0..n_vars {
        for j in (i + 1)..n_vars {
            for si in [true, false] {
                for sj in [true, false] {
                    out.push(Formula::and(lit(i, si), lit(j, sj)));
                }
            }
        }
    }
    for i in 0..n_vars {
        for j in (i + 1)..n_vars {
            for si in [true, false] {
                for sj in [true, false] {
                    out.push(Formula::or(lit(i, si), lit(j, sj)));
                }
            }
        }
    }
    out
}

/// The paraconsistent consequence set: indices of universe formulas entailed
/// by some consistent subset of the axioms of size at most `k`.
pub fn consequences(
    axioms: &[Formula],
    universe: &[Formula],
    k: usize,
    n_vars: u8,
) -> Result<BTreeSet<usize>, LogicError> {
    check_vars(n_vars)?;
    let mut consistent_subsets: Vec<Vec<&Formula>> = Vec::new();
    let n = axioms.len();
    for mask in 0u64..(1u64 << n) {
        if (mask.count_ones() as usize) > k {
            continue;
        }
        let subset: Vec<&Formula> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &axioms[i])
            .collect();
        if subset_satisfiable(&subset, n_vars) {
            consistent_subsets.push(subset);
        }
    }
    let mut out = BTreeSet::new();
    for (idx, phi) in universe.iter().enumerate() {
        if consistent_subsets.iter().any(|s| entails(s, phi, n_vars)) {
            out.insert(idx);
        }
    }
    Ok(out)
}

/// Semantic contradiction: psi is logically equivalent to the negation of
/// phi.
pub fn is_negation_of(phi: &Formula, psi: &Formula, n_vars: u8) -> bool {
    valuations(n_vars).all(|v| phi.eval(v) != psi.eval(v))
}

/// Count of unordered pairs inside the index set whose formulas are
/// semantic negations of each other.
pub fn contradictory_pairs(
    set: &BTreeSet<usize>,
    universe: &[Formula],
    n_vars: u8,
) -> Vec<(usize, usize)> {
    let idx: Vec<usize> = set.iter().copied().collect();
    let mut pairs = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in idx.iter().skip(a + 1) {
            if is_negation_of(&universe[i], &universe[j], n_vars) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// The consequence sets of the partial system [P] (the a's alone), the two
/// consistent completions [C] = a's + b and [C'] = a's + b', and the
/// inconsistent union [I].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsequenceReport {
    pub universe: Vec<Formula>,
    pub cn_p: BTreeSet<usize>,
    pub cn_c: BTreeSet<usize>,
    pub cn_c_prime: BTreeSet<usize>,
    pub cn_i: BTreeSet<usize>,
    /// Index pairs of semantic contradictions inside cn_i.
    pub contradictory_pairs: Vec<(usize, usize)>,
    /// Contradictory pairs beyond the initial (b, b') pair.
    pub t: usize,
}

/// Builds the consequence sets for the inconsistent-system construction and
/// verifies the union identity cn_I = cn_C + cn_C'.
///
/// Preconditions checked: a's + b independent and consistent; a's + b'
/// consistent; b and b' contradictory given the a's.
pub fn analyze_construction(
    a_list: &[Formula],
    b: &Formula,
    b_prime: &Formula,
    universe: &[Formula],
    k: usize,
    n_vars: u8,
) -> Result<ConsequenceReport, LogicError> {
    check_vars(n_vars)?;
    let mut c: Vec<Formula> = a_list.to_vec();
    c.push(b.clone());
    let mut c_prime: Vec<Formula> = a_list.to_vec();
    c_prime.push(b_prime.clone());
    let mut i_sys: Vec<Formula> = a_list.to_vec();
    i_sys.push(b.clone());
    i_sys.push(b_prime.clone());

    if !is_consistent(&c, n_vars)? {
        return Err(LogicError::PreconditionViolated(
            "the system a_1..a_n, b must be consistent".into(),
        ));
    }
    if !is_independent(&c, n_vars)? {
        return Err(LogicError::PreconditionViolated(
            "the system a_1..a_n, b must be independent".into(),
        ));
    }
    if !is_consistent(&c_prime, n_vars)? {
        return Err(LogicError::PreconditionViolated(
            "the system a_1..a_n, b' must be consistent".into(),
        ));
    }
    if is_consistent(&i_sys, n_vars)? {
        return Err(LogicError::PreconditionViolated(
            "b' must contradict b given the a's".into(),
        ));
    }

    let cn_p = consequences(a_list, universe, k, n_vars)?;
    let cn_c = consequences(&c, universe, k, n_vars)?;
    let cn_c_prime = consequences(&c_prime, universe, k, n_vars)?;
    let cn_i = consequences(&i_sys, universe, k, n_vars)?;

    let union: BTreeSet<usize> = cn_c.union(&cn_c_prime).copied().collect();
    if cn_i != union {
        // Possible when b and b' are jointly satisfiable without the a's; a
        // consistent subset of [I] may then mix them.
        return Err(LogicError::IdentityFailed(format!(
            "cn_I has {} formulas, cn_C union cn_C' has {}",
            cn_i.len(),
            union.len()
        )));
    }

    let pairs = contradictory_pairs(&cn_i, universe, n_vars);
    let initial = pairs
        .iter()
        .filter(|(i, j)| {
            let matches_fwd = equivalent(&universe[*i], b, n_vars)
                && equivalent(&universe[*j], b_prime, n_vars);
            let matches_bwd = equivalent(&universe[*i], b_prime, n_vars)
                && equivalent(&universe[*j], b, n_vars);
            matches_fwd || matches_bwd
        })
        .count()
        .min(1);
    let t = pairs.len() - initial;

    Ok(ConsequenceReport {
        universe: universe.to_vec(),
        cn_p,
        cn_c,
        cn_c_prime,
        cn_i,
        contradictory_pairs: pairs,
        t,
    })
}

fn equivalent(a: &Formula, b: &Formula, n_vars: u8) -> bool {
    valuations(n_vars).all(|v| a.eval(v) == b.eval(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u8) -> Formula {
        Formula::var(i)
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["v0", "! v1", "& v0 v1", "| v0 ! v1", "-> & v0 v1 v2"] {
            let f = Formula::parse(text).unwrap();
            assert_eq!(f.to_string(), text);
        }
        assert!(Formula::parse("v20").is_err());
        assert!(Formula::parse("& v0").is_err());
        assert!(Formula::parse("v0 v1").is_err());
        assert!(Formula::parse("").is_err());
        let deep = "! ".repeat(10_000) + "v0";
        assert!(Formula::parse(&deep).is_err());
    }

    #[test]
    fn consistency_basics() {
        assert!(is_consistent(&[v(0)], 1).unwrap());
        assert!(!is_consistent(&[v(1), Formula::not(v(1))], 2).unwrap());
        // x, x -> y, !y has no model.
        let sys = [v(0), Formula::implies(v(0), v(1)), Formula::not(v(1))];
        assert!(!is_consistent(&sys, 2).unwrap());
    }

    #[test]
    fn independence_basics() {
        assert!(is_independent(&[v(0), v(1)], 2).unwrap());
        // x is entailed by x & y.
        assert!(!is_independent(&[v(0), Formula::and(v(0), v(1))], 2).unwrap());
        // x | y is entailed by x.
        assert!(!is_independent(&[v(0), v(1), Formula::or(v(0), v(1))], 2).unwrap());
    }

    #[test]
    fn consequences_basics() {
        let universe = default_universe(2);
        // Axioms {x}: at k = 1 the literal x alone follows.
        let cn = consequences(&[v(0)], &universe, 1, 2).unwrap();
        let formulas: Vec<String> = cn.iter().map(|i| universe[*i].to_string()).collect();
        assert!(formulas.contains(&"v0".to_string()));
        assert!(!formulas.contains(&"v1".to_string()));
        // {x, y} at k = 2 entails x & y.
        let cn = consequences(&[v(0), v(1)], &universe, 2, 2).unwrap();
        let formulas: Vec<String> = cn.iter().map(|i| universe[*i].to_string()).collect();
        assert!(formulas.contains(&"& v0 v1".to_string()));
        // {x, y, !y}: the consistent pairs give x & y and x & !y but never
        // y & !y.
        let cn = consequences(&[v(0), v(1), Formula::not(v(1))], &universe, 2, 2).unwrap();
        let formulas: Vec<String> = cn.iter().map(|i| universe[*i].to_string()).collect();
        assert!(formulas.contains(&"& v0 v1".to_string()));
        assert!(formulas.contains(&"& v0 ! v1".to_string()));
        assert!(!formulas.iter().any(|f| f == "& v1 ! v1"));
    }

    #[test]
    fn empty_axioms_entail_only_tautologies() {
        // The default universe has no tautologies, so cn_P of the empty
        // system is empty.
        let universe = default_universe(2);
        let cn = consequences(&[], &universe, 2, 2).unwrap();
        assert!(cn.is_empty());
    }

    #[test]
    fn worked_example_n1() {
        // a = {x}, b = y, b' = !y: the union identity holds and at least one
        // extra contradictory pair accumulates (t >= 1).
        let universe = default_universe(2);
        let report = analyze_construction(
            &[v(0)],
            &v(1),
            &Formula::not(v(1)),
            &universe,
            2,
            2,
        )
        .unwrap();
        let union: BTreeSet<usize> = report.cn_c.union(&report.cn_c_prime).copied().collect();
        assert_eq!(report.cn_i, union);
        assert!(report.cn_p.is_subset(&report.cn_c));
        assert!(report.cn_p.is_subset(&report.cn_c_prime));
        assert!(report.t >= 1, "t = {}", report.t);
        // cn_C, being consistently generated, carries no contradictory pair.
        assert!(contradictory_pairs(&report.cn_c, &universe, 2).is_empty());
    }

    #[test]
    fn worked_example_n0() {
        // n = 0 over the literal universe at k = 1: only the initial pair.
        let universe = default_universe(1);
        let report =
            analyze_construction(&[], &v(0), &Formula::not(v(0)), &universe, 1, 1).unwrap();
        assert_eq!(report.contradictory_pairs.len(), 1);
        assert_eq!(report.t, 0);
    }

    #[test]
    fn precondition_failures_are_named() {
        let universe = default_universe(2);
        // b' does not contradict b.
        let e = analyze_construction(&[v(0)], &v(1), &v(1), &universe, 2, 2).unwrap_err();
        assert!(matches!(e, LogicError::PreconditionViolated(_)));
        // Dependent: b entailed by a.
        let e = analyze_construction(
            &[Formula::and(v(0), v(1))],
            &v(1),
            &Formula::not(v(1)),
            &universe,
            2,
            2,
        )
        .unwrap_err();
        assert!(matches!(e, LogicError::PreconditionViolated(_)));
    }

    #[test]
    fn system_json() {
        let sys = AxiomSystem::from_json_str(r#"{"vars": 2, "axioms": ["v0", "-> v0 v1"]}"#).unwrap();
        assert_eq!(sys.axioms.len(), 2);
        assert!(AxiomSystem::from_json_str(r#"{"vars": 2, "axioms": ["v7"]}"#).is_err());
        assert!(AxiomSystem::from_json_str(r#"{"vars": 33, "axioms": []}"#).is_err());
    }
}
