use super::birank::{birank_check, BirankMethod};
use crate::graph::{Graph, Vertex};
use crate::rigidity::{dimension_verdict, Evidence, IndependenceResult};
use crate::settings::Settings;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartCheck {
    pub part: usize,
    pub target: usize,
    /// `rank(G_{V_i}) <= target`, i.e. independence in `A(target - 1)`.
    pub passes: bool,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub left: usize,
    pub right: usize,
    pub targets: (usize, usize),
    pub crossing_edges: usize,
    pub member: bool,
    pub method: BirankMethod,
    pub generic: Option<IndependenceResult>,
}

/// A vertex partition with rank targets and the verification of every part
/// and every pair of parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPlan {
    pub parts: Vec<Vec<Vertex>>,
    pub targets: Vec<usize>,
    pub part_checks: Vec<PartCheck>,
    pub pair_checks: Vec<PairCheck>,
}

impl SplitPlan {
    /// `sum(targets)` when every check passed.
    pub fn bound(&self) -> Option<usize> {
        let complete = self.part_checks.len() == self.parts.len()
            && self.pair_checks.len() == self.parts.len() * self.parts.len().saturating_sub(1) / 2;
        let ok = complete && self.part_checks.iter().all(|c| c.passes) && self.pair_checks.iter().all(|c| c.member);
        ok.then(|| self.targets.iter().sum())
    }

    /// Part index of every vertex.
    pub fn assignment(&self, m: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; m];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                out[v] = i;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("malformed partition: {0}")]
    Malformed(String),
    #[error("part {part} does not have rank at most {target}")]
    PartRank { part: usize, target: usize },
    #[error("({r1}, {r2}) is not in the birank of the crossing graph between parts {left} and {right}")]
    Birank { left: usize, right: usize, r1: usize, r2: usize },
}

fn check_partition(m: usize, parts: &[Vec<Vertex>], targets: &[usize]) -> Result<(), SplitError> {
    if parts.len() != targets.len() {
        return Err(SplitError::Malformed(format!("{} parts but {} targets", parts.len(), targets.len())));
    }
    if let Some(i) = targets.iter().position(|&r| r == 0) {
        return Err(SplitError::Malformed(format!("target of part {i} must be at least 1")));
    }
    if let Some(i) = parts.iter().position(Vec::is_empty) {
        return Err(SplitError::Malformed(format!("part {i} is empty")));
    }
    let mut seen = vec![false; m];
    for part in parts {
        for &v in part {
            if v >= m {
                return Err(SplitError::Malformed(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(SplitError::Malformed(format!("vertex {v} appears twice")));
            }
            seen[v] = true;
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(SplitError::Malformed(format!("vertex {v} is in no part")));
    }
    Ok(())
}

/// Verify a splitting: every part has rank at most its target and every pair
/// of targets lies in the birank of the crossing graph. On success the plan
/// carries all certificates and its bound `rank(G) <= sum(targets)`.
/// Checks run parts first, then pairs in lexicographic order; the first
/// failure is returned.
pub fn splitting_bound(g: &Graph, parts: &[Vec<Vertex>], targets: &[usize], settings: &Settings) -> Result<SplitPlan, SplitError> {
    check_partition(g.vertex_count(), parts, targets)?;
    let parts: Vec<Vec<Vertex>> = parts
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.sort_unstable();
            p
        })
        .collect();
    let mut plan = SplitPlan { parts: parts.clone(), targets: targets.to_vec(), part_checks: Vec::new(), pair_checks: Vec::new() };

    for (i, part) in parts.iter().enumerate() {
        let (sub, _) = g.induced_subgraph(part).expect("checked partition");
        let evidence = dimension_verdict(&sub, targets[i] - 1, settings);
        let passes = evidence.independent();
        plan.part_checks.push(PartCheck { part: i, target: targets[i], passes, evidence });
        if !passes {
            return Err(SplitError::PartRank { part: i, target: targets[i] });
        }
    }

    let root = settings.rng().child(0x6269_7261);
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let b = g.bipartite_between(&parts[i], &parts[j]).expect("checked partition");
            let rng = root.child((i * parts.len() + j) as u64);
            let v = birank_check(&b, targets[i], targets[j], settings.trials, settings.prime, &rng);
            plan.pair_checks.push(PairCheck {
                left: i,
                right: j,
                targets: (targets[i], targets[j]),
                crossing_edges: b.edge_count(),
                member: v.member,
                method: v.method,
                generic: v.generic,
            });
            if !v.member {
                return Err(SplitError::Birank { left: i, right: j, r1: targets[i], r2: targets[j] });
            }
        }
    }
    Ok(plan)
}
