//! Mother components, distinguishedness, feather jumps and rigidity of a
//! degenerate fiber `D_0 + ... + D_N + feathers`.

use std::collections::{BTreeMap, BTreeSet};

use crate::dualgraph::{is_contractible, Feather, FiberGraph, Role, TotalTransforms, WeightedTree};
use crate::error::{Error, Result};

/// Feather `feather` at `D_from` can move to `D_to` under a specialization.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct JumpPair {
    pub feather: usize,
    pub from: usize,
    pub to: usize,
}

/// Feather `feather` leaves `D_from` for its mother `D_mother` as a (-1)-bridge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizationMove {
    pub feather: usize,
    pub from: usize,
    pub mother: usize,
    pub result: FiberGraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub distinguished: bool,
    pub all_bridges_minus_one: bool,
    /// Mother component of each bridge, by feather.
    pub mother: Vec<usize>,
    pub jump_pairs: Vec<JumpPair>,
    pub generalization_moves: Vec<GeneralizationMove>,
    pub rigid: bool,
    pub stable_generalization: bool,
    pub stable_specialization: bool,
}

fn mothers_from(f: &FiberGraph, tt: &TotalTransforms, h: usize) -> Vec<usize> {
    (0..=f.last()).filter(|&i| f.dot_spine(tt, h, i) == 1).collect()
}

/// Unique spine index `mu` with `H~ . D_mu = 1`, for a feather vertex `h`.
pub fn mother_component(f: &FiberGraph, h: usize) -> Result<usize> {
    mother_with(f, &f.total_transforms(), h)
}

fn mother_with(f: &FiberGraph, tt: &TotalTransforms, h: usize) -> Result<usize> {
    match f.tree().vertex(h).map(|v| v.role) {
        Some(Role::Bridge(_)) | Some(Role::Box(..)) => {}
        _ => return Err(Error::BadParameters(format!("vertex {h} is not a feather component"))),
    }
    match mothers_from(f, tt, h)[..] {
        [mu] => Ok(mu),
        ref ms => Err(Error::Internal(format!("vertex {h} has mother candidates {ms:?}"))),
    }
}

/// Mother of every bridge, in feather order.
pub fn bridge_mothers(f: &FiberGraph) -> Result<Vec<usize>> {
    let tt = f.total_transforms();
    (0..f.feathers().len()).map(|j| mother_with(f, &tt, f.bridge_id(j))).collect()
}

fn empty_or_contractible(forest: &[WeightedTree]) -> bool {
    is_contractible(forest).expect("trees never create cycles")
}

fn feather_tree(f: &Feather) -> WeightedTree {
    let mut w = vec![f.bridge_weight];
    w.extend_from_slice(&f.box_chain);
    WeightedTree::chain(&w).expect("chain")
}

/// No `i` in `1..=N` with a non-empty contractible `D^{>i}`.
pub fn is_distinguished(f: &FiberGraph) -> bool {
    (1..=f.last()).all(|i| {
        let gt = f.subgraph_gt(i);
        gt.is_empty() || !empty_or_contractible(&gt)
    })
}

/// Whether the three source-side conditions hold for a jump `i -> i2`.
pub fn jump_conditions(f: &FiberGraph, i: usize, i2: usize) -> [bool; 3] {
    let a = (i + 1..i2).all(|k| f.feathers_at(k).all(|(_, fe)| empty_or_contractible(&[feather_tree(fe)])));
    let b = empty_or_contractible(&f.subgraph_gt(i2));
    let c = f.subgraph_ge(i + 1).map(|t| empty_or_contractible(&[t])).unwrap_or(true);
    [a, b, c]
}

pub fn jump_pairs(f: &FiberGraph) -> Vec<JumpPair> {
    let mut out = Vec::new();
    for (j, (i, _)) in f.feathers().iter().enumerate() {
        for to in i + 1..=f.last() {
            if jump_conditions(f, *i, to).iter().all(|&x| x) {
                out.push(JumpPair { feather: j, from: *i, to });
            }
        }
    }
    out
}

pub fn generalization_moves(f: &FiberGraph) -> Result<Vec<GeneralizationMove>> {
    let mothers = bridge_mothers(f)?;
    let mut out = Vec::new();
    for (j, (i, fe)) in f.feathers().iter().enumerate() {
        let mu = mothers[j];
        if fe.bridge_weight > -2 || mu >= *i {
            continue;
        }
        let mut feathers = f.feathers().to_vec();
        feathers[j] = (mu, Feather::new(-1, fe.box_chain.clone())?);
        let result = FiberGraph::new(f.spine().to_vec(), feathers)
            .map_err(|e| Error::Internal(format!("generalization of feather {j}: {e}")))?;
        out.push(GeneralizationMove { feather: j, from: *i, mother: mu, result });
    }
    Ok(out)
}

pub fn is_rigid(f: &FiberGraph) -> Result<RigidityReport> {
    let mother = bridge_mothers(f)?;
    let all_bridges_minus_one = f.feathers().iter().all(|(_, fe)| fe.bridge_weight == -1);
    let jumps = jump_pairs(f);
    let moves = generalization_moves(f)?;
    let stable_generalization = moves.is_empty();
    let stable_specialization = jumps.is_empty();
    if stable_generalization != all_bridges_minus_one {
        return Err(Error::Internal("generalization moves disagree with bridge weights".into()));
    }
    Ok(RigidityReport {
        distinguished: is_distinguished(f),
        all_bridges_minus_one,
        mother,
        jump_pairs: jumps,
        generalization_moves: moves,
        rigid: stable_generalization && stable_specialization,
        stable_generalization,
        stable_specialization,
    })
}

/// The sufficient rigidity test: distinguished, all bridges (-1), and either
/// `D^{>N}` is non-empty or no `D^{>=i+1}` after a feathered `D_i` contracts.
pub fn sufficient_criterion(f: &FiberGraph) -> bool {
    if !is_distinguished(f) || f.feathers().iter().any(|(_, fe)| fe.bridge_weight != -1) {
        return false;
    }
    let cond_i = !f.subgraph_gt(f.last()).is_empty();
    let cond_ii = (0..f.last())
        .all(|i| f.feathers_at(i).next().is_none() || !empty_or_contractible(&[f.subgraph_ge(i + 1).expect("i < N")]));
    cond_i || cond_ii
}

/// Targets reachable by each feather through direct jumps, or through a
/// generalization to its mother followed by a jump.
pub fn reachable_positions(f: &FiberGraph) -> Result<BTreeMap<usize, BTreeSet<usize>>> {
    let mut out: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for jp in jump_pairs(f) {
        out.entry(jp.feather).or_default().insert(jp.to);
    }
    for mv in generalization_moves(f)? {
        let set = out.entry(mv.feather).or_default();
        set.insert(mv.mother);
        for jp in jump_pairs(&mv.result) {
            if jp.feather == mv.feather {
                set.insert(jp.to);
            }
        }
    }
    Ok(out)
}
